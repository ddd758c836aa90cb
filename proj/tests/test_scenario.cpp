#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "csf/errors.hpp"
#include "csf/scenario.hpp"
#include "test_support.hpp"

using namespace csft;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::filesystem::path> fixture_corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(CSF_FIXTURE_DIR))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("parse fills defaults on a minimal document") {
  auto scenario = parse_scenario(slurp(std::filesystem::path(CSF_FIXTURE_DIR) / "minimal.json"));

  CHECK(scenario.name == "minimal");
  CHECK(scenario.params.alpha_default == 0.5);
  CHECK(scenario.params.epsilon_salience == 0.0);
  CHECK(scenario.params.policy == DeploymentPolicy::instant);
  CHECK(scenario.params.decay_lambda == 0.25);
  CHECK(scenario.params.decay_theta == 0.0);
  CHECK(scenario.params.fitness_floor == 1e-6);

  const auto& agent = scenario.agents.at("solo");
  CHECK(agent.profile.alpha == 0.5);
  CHECK(agent.profile.preferences.empty());
  CHECK(agent.frames == std::vector<FrameId>{"presence"}); // defaulted to all frames
  CHECK(validate(scenario).empty());
}

TEST_CASE("frame referencing an undeclared resource raises ReferenceError") {
  auto text = slurp(std::filesystem::path(CSF_FIXTURE_DIR) / "invalid" / "dangling_ref.json");
  CHECK_THROWS_AS(parse_scenario(text), ReferenceError);
  try {
    parse_scenario(text);
  } catch (const ReferenceError& e) {
    CHECK(e.id() == "r9");
    CHECK(e.where() == "/frames/broken/resources/0");
  }
}

TEST_CASE("out-of-range numbers raise DomainError") {
  const char* bad_pref = R"({
    "name": "bad",
    "entities": {"solo": {"location": "room"}},
    "frames": {"f": {"construal": [], "fitness": {"bias": 1.0}, "resources": []}},
    "resources": {},
    "agents": {"solo": {"preferences": {"f": 1.5}}}
  })";
  CHECK_THROWS_AS(parse_scenario(bad_pref), DomainError);

  const char* bad_alpha = R"({"name": "bad", "params": {"alpha": -0.1}})";
  CHECK_THROWS_AS(parse_scenario(bad_alpha), DomainError);
  const char* bad_lambda = R"({"name": "bad", "params": {"lambda": 0.0}})";
  CHECK_THROWS_AS(parse_scenario(bad_lambda), DomainError);
  const char* bad_theta = R"({"name": "bad", "params": {"theta": 1.0}})";
  CHECK_THROWS_AS(parse_scenario(bad_theta), DomainError);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_scenario("{\n  \"name\": \"x\",\n  oops\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("malformed selectors and ids are rejected") {
  const char* bad_selector = R"({
    "name": "bad",
    "entities": {"solo": {"location": "room"}},
    "frames": {"f": {"construal": [{"filter": [{"sel": "mystery:x", "op": "exists"}],
                                     "annotate": {"dimension": "d", "value": 1}}],
                      "fitness": {"bias": 1.0}, "resources": []}},
    "resources": {},
    "agents": {"solo": {}}
  })";
  CHECK_THROWS_AS(parse_scenario(bad_selector), ParseError);

  const char* bad_id = R"({"name": "bad", "entities": {"Solo": {"location": "room"}}})";
  CHECK_THROWS_AS(parse_scenario(bad_id), ParseError);

  // Attribute values are scalars; nesting is rejected.
  const char* nested = R"({"name": "bad", "entities": {"solo": {"location": {"x": 1}}}})";
  CHECK_THROWS_AS(parse_scenario(nested), ParseError);

  const char* both_sides = R"({
    "name": "bad",
    "resources": {"r": {"kind": "knowledge", "facts": {}, "rules": []}}
  })";
  CHECK_THROWS_AS(parse_scenario(both_sides), ParseError);
}

TEST_CASE("parse-serialize-parse is the identity over the fixture corpus") {
  auto corpus = fixture_corpus();
  REQUIRE(corpus.size() >= 10);
  for (const auto& path : corpus) {
    CAPTURE(path.string());
    auto once = parse_scenario(slurp(path));
    auto twice = parse_scenario(serialize_scenario(once));
    CHECK(once == twice);
    // Serialization is canonical: a second round is byte-stable.
    CHECK(serialize_scenario(once) == serialize_scenario(twice));
  }
}

TEST_CASE("built-ins parse, validate cleanly, and match their fixture copies") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto scenario = builtin(name);
    CHECK(scenario.name == name);
    auto diagnostics = validate(scenario);
    CHECK_FALSE(has_errors(diagnostics));
    CHECK(diagnostics.empty()); // built-ins are lint-clean

    auto fixture = parse_scenario(
        slurp(std::filesystem::path(CSF_FIXTURE_DIR) / (name + ".json")));
    CHECK(scenario == fixture);
  }
  CHECK(builtin_names() == std::vector<std::string>{"coach_father", "library_dance"});
  CHECK_THROWS_AS(builtin("ghost_town"), UnknownScenario);
}

TEST_CASE("validate flags unknown default_salient frames as errors") {
  auto scenario = builtin("coach_father");
  scenario.agents.at("duarte").profile.default_salient.insert("ghost");
  auto diagnostics = validate(scenario);
  REQUIRE(diagnostics.size() == 1);
  CHECK(diagnostics[0].severity == Severity::error);
  CHECK(diagnostics[0].message.find("ghost") != std::string::npos);
  CHECK(diagnostics[0].where == "/agents/duarte/default_salient");
}

TEST_CASE("validate warns on frames that deploy nothing") {
  auto scenario =
      parse_scenario(slurp(std::filesystem::path(CSF_FIXTURE_DIR) / "warning_only.json"));
  auto diagnostics = validate(scenario);
  REQUIRE(diagnostics.size() == 1);
  CHECK(diagnostics[0].severity == Severity::warning);
  CHECK(diagnostics[0].where == "/frames/daydream/resources");
  CHECK_FALSE(has_errors(diagnostics));
}

TEST_CASE("validate reports agents without entities and dangling event entities") {
  auto scenario = builtin("library_dance");
  scenario.entities.erase("bruno");
  auto diagnostics = validate(scenario);
  bool agent_error = false, event_ok = true;
  for (const auto& d : diagnostics) {
    if (d.severity != Severity::error) continue;
    if (d.where == "/agents/bruno") agent_error = true;
  }
  CHECK(agent_error);

  auto with_bad_event = builtin("library_dance");
  with_bad_event.events.push_back({1, "nobody", {{"location", V("moon")}}, std::nullopt});
  bool event_error = false;
  for (const auto& d : validate(with_bad_event))
    if (d.severity == Severity::error && d.where == "/events/2/entity") event_error = true;
  CHECK(event_error);
  (void)event_ok;
}

TEST_CASE("every diagnostic locates a path inside the document") {
  auto scenario = builtin("library_dance");
  scenario.agents.at("bruno").profile.default_salient.insert("ghost");
  scenario.entities.erase("novel"); // leaves the book rules' attrs covered by atlas
  for (const auto& d : validate(scenario)) {
    CHECK_FALSE(d.where.empty());
    CHECK(d.where.front() == '/');
  }
}

TEST_CASE("condition evaluation is total on fuzzed inputs") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> coin(0, 1);
  const char* selectors[] = {"attr:x",      "attr:missing", "social:d",     "social:s:d",
                             "social:?:d",  "fact:kb:k",    "fact:none:k",  "deployed:r",
                             "deployed:zz", "attr:y",       "social:other", "fact:kb:miss"};
  const char* ops[] = {"==", "!=", "<", "<=", ">", ">=", "exists"};

  CognitiveResource kb;
  kb.id = "kb";
  kb.kind = ResourceKind::knowledge;
  kb.facts = {{"k", V(3.0)}};
  auto ltm = ltm_of({}, {kb});

  for (int i = 0; i < 2000; ++i) {
    ConditionAtom a;
    a.sel = parse_selector(selectors[std::uniform_int_distribution<int>(0, 11)(rng)]);
    a.op = *comparator_from_text(ops[std::uniform_int_distribution<int>(0, 6)(rng)]);
    if (a.op != Comparator::exists) {
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: a.literal = V("d"); break;
        case 1: a.literal = V(double(coin(rng))); break;
        default: a.literal = V(coin(rng) == 1); break;
      }
    }
    Condition c{{a}};

    auto p = make_percept("s", {{"x", V(coin(rng) == 1)}, {"y", V(1.0)}});
    (void)eval_condition(c, p);

    WorkingMemory wm;
    if (coin(rng)) wm.social_context.add(sp("s", "d", V("d"), {"f"}));
    if (coin(rng)) wm.deployed = {{"kb", 1.0}, {"r", 0.5}};
    EntityId bound = "s";
    MemoryScope scope{&wm, &ltm, coin(rng) ? &bound : nullptr};
    (void)eval_condition(c, scope); // must not throw
  }
}

TEST_CASE("serializer and selector text round-trip") {
  CHECK(selector_text(parse_selector("social:?:interaction")) == "social:?:interaction");
  CHECK(selector_text(parse_selector("social:setting")) == "social:setting");
  CHECK(selector_text(parse_selector("fact:lore:fragile")) == "fact:lore:fragile");
  CHECK(selector_text(parse_selector("deployed:stride")) == "deployed:stride");
  CHECK(selector_text(parse_selector("attr:location")) == "attr:location");
}
