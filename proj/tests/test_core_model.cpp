#include <doctest.h>

#include <algorithm>
#include <random>

#include "csf/types.hpp"
#include "test_support.hpp"

using namespace csft;

TEST_CASE("percept identity ignores attribute listing order") {
  auto a = make_percept("p1", {{"loc", V("library")}, {"person", V(true)}});
  auto b = make_percept("p1", {{"person", V(true)}, {"loc", V("library")}});
  CHECK(percept_identity(a) == percept_identity(b));
}

TEST_CASE("percept identity distinguishes subjects") {
  auto a = make_percept("p1", {{"loc", V("library")}});
  auto b = make_percept("p2", {{"loc", V("library")}});
  CHECK(percept_identity(a) != percept_identity(b));
}

TEST_CASE("100 random attribute permutations collapse to one key") {
  std::vector<std::pair<std::string, Value>> attrs = {
      {"loc", V("library")}, {"person", V(true)}, {"mood", V("calm")},
      {"age", V(34.0)},      {"tall", V(false)},
  };
  std::mt19937 rng(7);
  std::set<PerceptKey> keys;
  for (int i = 0; i < 100; ++i) {
    auto shuffled = attrs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    keys.insert(percept_identity(make_percept("p1", shuffled)));
  }
  CHECK(keys.size() == 1);
}

TEST_CASE("duplicate attribute names are rejected") {
  CHECK_THROWS_AS(make_percept("p1", {{"loc", V("a")}, {"loc", V("b")}}), DomainError);
}

TEST_CASE("social percept identity excludes sources and strength") {
  auto from_coach = sp("son", "team_value", V("liability"), {"coach"}, 0.2);
  auto from_scout = sp("son", "team_value", V("liability"), {"scout"}, 0.9);
  CHECK(social_percept_identity(from_coach) == social_percept_identity(from_scout));

  auto other_value = sp("son", "team_value", V("deserves_chance"), {"father"});
  CHECK(social_percept_identity(from_coach) != social_percept_identity(other_value));
}

TEST_CASE("conflicts: same subject and dimension, different value") {
  auto liability = sp("son", "team_value", V("liability"), {"coach"});
  auto chance = sp("son", "team_value", V("deserves_chance"), {"father"});
  auto mood = sp("son", "mood", V("sad"), {"father"});

  CHECK(conflicts(liability, chance));
  CHECK_FALSE(conflicts(liability, liability));
  CHECK_FALSE(conflicts(liability, mood));
}

namespace {

SocialPercept random_percept(std::mt19937& rng) {
  const char* subjects[] = {"a", "b"};
  const char* dims[] = {"x", "y"};
  const char* frames[] = {"f1", "f2", "f3"};
  std::uniform_int_distribution<int> coin(0, 1);
  SocialPercept out;
  out.subject = subjects[coin(rng)];
  out.dimension = dims[coin(rng)];
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: out.value = V("v" + std::to_string(coin(rng))); break;
    case 1: out.value = V(double(std::uniform_int_distribution<int>(0, 3)(rng))); break;
    default: out.value = V(coin(rng) == 1); break;
  }
  out.strength = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  out.sources = {frames[std::uniform_int_distribution<int>(0, 2)(rng)]};
  return out;
}

} // namespace

TEST_CASE("conflicts is symmetric and irreflexive over random pairs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto a = random_percept(rng);
    auto b = random_percept(rng);
    CHECK(conflicts(a, b) == conflicts(b, a));
    CHECK_FALSE(conflicts(a, a));
  }
}

TEST_CASE("merging equal-key percepts unions sources and keeps max strength") {
  auto a = sp("son", "team_value", V("liability"), {"coach"}, 0.2);
  auto b = sp("son", "team_value", V("liability"), {"scout"}, 0.9);
  auto merged = merge_percepts(a, b);
  CHECK(merged.sources == std::set<FrameId>{"coach", "scout"});
  CHECK(merged.strength == 0.9);
}

TEST_CASE("merge is commutative, associative and idempotent") {
  std::mt19937 rng(13);
  for (int i = 0; i < 300; ++i) {
    auto a = random_percept(rng);
    auto b = random_percept(rng);
    auto c = random_percept(rng);
    // Force one shared identity key.
    b.subject = c.subject = a.subject;
    b.dimension = c.dimension = a.dimension;
    b.value = c.value = a.value;

    CHECK(merge_percepts(a, b) == merge_percepts(b, a));
    CHECK(merge_percepts(merge_percepts(a, b), c) == merge_percepts(a, merge_percepts(b, c)));
    CHECK(merge_percepts(a, a) == a);
  }
}

TEST_CASE("social context merges on add and keeps conflicting elements") {
  SocialContext ctx;
  ctx.add(sp("son", "team_value", V("liability"), {"coach"}, 0.2));
  ctx.add(sp("son", "team_value", V("liability"), {"scout"}, 0.9));
  ctx.add(sp("son", "team_value", V("deserves_chance"), {"father"}));
  CHECK(ctx.size() == 2);
  const auto* merged = ctx.find({"son", "team_value", V("liability")});
  REQUIRE(merged != nullptr);
  CHECK(merged->sources.size() == 2);
  CHECK(merged->strength == 0.9);
}

TEST_CASE("identity functions are pure") {
  auto p = make_percept("p1", {{"loc", V("library")}});
  CHECK(percept_identity(p) == percept_identity(p));
  auto s = sp("son", "team_value", V("liability"), {"coach"});
  CHECK(social_percept_identity(s) == social_percept_identity(s));
}

TEST_CASE("values never compare equal across types") {
  CHECK_FALSE(Value(true) == Value(1.0));
  CHECK_FALSE(V("1") == Value(1.0));
}
