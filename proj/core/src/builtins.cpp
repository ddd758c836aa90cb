#include "csf/scenario.hpp"

#include "csf/errors.hpp"

namespace csf {

namespace {

// One agent, two settings. The host frame reads a co-located peer as a dance
// partner and a book as a cup holder; the patron frame reads the same peer as
// someone to greet quietly and the book as reading material. place_sense keeps
// the agent aware of where it is, which drives the other frames' fitness.
const std::string kLibraryDance = R"json({
  "name": "library_dance",
  "params": {"epsilon": 0.0, "alpha": 0.5, "policy": "instant"},
  "entities": {
    "ana":   {"location": "home", "person": true, "peer": true},
    "atlas": {"location": "library", "book": true},
    "bruno": {"location": "home", "person": true, "agent": true},
    "novel": {"location": "home", "book": true}
  },
  "frames": {
    "host_frame": {
      "construal": [
        {"filter": [{"sel": "attr:peer", "op": "==", "value": true},
                    {"sel": "attr:location", "op": "==", "value": "home"}],
         "annotate": {"dimension": "interaction", "value": "dance_partner", "strength": 1.0}},
        {"filter": [{"sel": "attr:book", "op": "==", "value": true},
                    {"sel": "attr:location", "op": "==", "value": "home"}],
         "annotate": {"dimension": "affordance", "value": "cup_holder", "strength": 0.8}}
      ],
      "fitness": {"bias": 0.05,
                  "terms": [{"weight": 0.9,
                             "when": [{"sel": "social:setting", "op": "==", "value": "home"}]}]},
      "resources": ["dance_drive", "book_use"]
    },
    "patron_frame": {
      "construal": [
        {"filter": [{"sel": "attr:peer", "op": "==", "value": true},
                    {"sel": "attr:location", "op": "==", "value": "library"}],
         "annotate": {"dimension": "interaction", "value": "quiet_peer", "strength": 1.0}},
        {"filter": [{"sel": "attr:book", "op": "==", "value": true},
                    {"sel": "attr:location", "op": "==", "value": "library"}],
         "annotate": {"dimension": "affordance", "value": "reading_material", "strength": 0.8}}
      ],
      "fitness": {"bias": 0.05,
                  "terms": [{"weight": 0.9,
                             "when": [{"sel": "social:setting", "op": "==", "value": "library"}]}]},
      "resources": ["quiet_conduct", "book_use"]
    },
    "place_sense": {
      "construal": [
        {"filter": [{"sel": "attr:agent", "op": "==", "value": true},
                    {"sel": "attr:location", "op": "exists"}],
         "annotate": {"dimension": "setting", "value": {"attr": "location"}, "strength": 1.0}}
      ],
      "fitness": {"bias": 1.0, "terms": []},
      "resources": ["etiquette"]
    }
  },
  "resources": {
    "book_use": {
      "kind": "mechanism",
      "rules": [
        {"priority": 1,
         "when": [{"sel": "social:?:affordance", "op": "==", "value": "cup_holder"}],
         "then": {"verb": "use_as_cup_holder", "target": "?"}},
        {"priority": 2,
         "when": [{"sel": "social:?:affordance", "op": "==", "value": "reading_material"}],
         "then": {"verb": "read_quietly", "target": "?"}}
      ]
    },
    "dance_drive": {
      "kind": "mechanism",
      "rules": [
        {"priority": 1,
         "when": [{"sel": "social:?:interaction", "op": "==", "value": "dance_partner"}],
         "then": {"verb": "invite_to_dance", "target": "?"}}
      ]
    },
    "etiquette": {
      "kind": "knowledge",
      "facts": {"dance_place": "home", "quiet_place": "library"}
    },
    "quiet_conduct": {
      "kind": "mechanism",
      "rules": [
        {"priority": 1,
         "when": [{"sel": "social:?:interaction", "op": "==", "value": "quiet_peer"}],
         "then": {"verb": "greet_quietly", "target": "?"}}
      ]
    }
  },
  "agents": {
    "bruno": {
      "frames": ["host_frame", "patron_frame", "place_sense"],
      "preferences": {"host_frame": 0.2, "patron_frame": 0.2},
      "alpha": 0.5,
      "default_salient": ["host_frame", "place_sense"]
    }
  },
  "events": [
    {"tick": 3, "entity": "bruno", "set": {"location": "library"}},
    {"tick": 3, "entity": "ana", "set": {"location": "library"}}
  ]
})json";

// One agent holding two views of the same boy: as coach he reads a poorly
// playing player as a liability, as father he reads his son as deserving a
// chance. Both frames stay salient, so the two readings coexist and conflict.
const std::string kCoachFather = R"json({
  "name": "coach_father",
  "params": {"epsilon": 0.0, "alpha": 0.5, "policy": "instant"},
  "entities": {
    "duarte": {"location": "pitch", "person": true, "agent": true},
    "son": {"location": "pitch", "person": true, "kin": "son", "playing": "poorly"}
  },
  "frames": {
    "coach": {
      "construal": [
        {"filter": [{"sel": "attr:playing", "op": "==", "value": "poorly"}],
         "annotate": {"dimension": "team_value", "value": "liability", "strength": 1.0}}
      ],
      "fitness": {"bias": 0.85, "terms": []},
      "resources": ["team_management"]
    },
    "father": {
      "construal": [
        {"filter": [{"sel": "attr:kin", "op": "==", "value": "son"}],
         "annotate": {"dimension": "team_value", "value": "deserves_chance", "strength": 1.0}}
      ],
      "fitness": {"bias": 0.9, "terms": []},
      "resources": ["parenting"]
    }
  },
  "resources": {
    "parenting": {
      "kind": "mechanism",
      "rules": [
        {"priority": 1,
         "when": [{"sel": "social:?:team_value", "op": "==", "value": "deserves_chance"}],
         "then": {"verb": "encourage", "target": "?"}}
      ]
    },
    "team_management": {
      "kind": "mechanism",
      "rules": [
        {"priority": 1,
         "when": [{"sel": "social:?:team_value", "op": "==", "value": "liability"}],
         "then": {"verb": "bench", "target": "?"}}
      ]
    }
  },
  "agents": {
    "duarte": {
      "frames": ["coach", "father"],
      "preferences": {"coach": 0.3, "father": 0.6},
      "alpha": 0.5,
      "default_salient": ["coach", "father"]
    }
  },
  "events": []
})json";

} // namespace

const std::string& builtin_document(const std::string& name) {
  if (name == "library_dance") return kLibraryDance;
  if (name == "coach_father") return kCoachFather;
  throw UnknownScenario(name);
}

Scenario builtin(const std::string& name) {
  return parse_scenario(builtin_document(name));
}

std::vector<std::string> builtin_names() {
  return {"coach_father", "library_dance"};
}

} // namespace csf
