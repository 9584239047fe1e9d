#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "helpers.hpp"
#include "tnn/error.hpp"

using namespace tnn;
using testing::elem;
using testing::key_of;

TEST_CASE("type parsing and validation") {
  CHECK(parse_type("A3") == make_type('A', 3));
  CHECK(parse_type("g2").label() == "G2");
  CHECK_THROWS_AS(parse_type("H3"), Error);
  CHECK_THROWS_AS(parse_type("A"), Error);
  CHECK_THROWS_AS(make_type('D', 3), Error);
  CHECK_THROWS_AS(make_type('E', 9), Error);
  try {
    make_type('B', 1);
    FAIL("expected RankOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankOutOfRange);
  }
  try {
    parse_type("X2");
    FAIL("expected UnknownType");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownType);
  }
}

TEST_CASE("group orders") {
  CHECK(CoxeterSystem::build("A1").order() == 2);
  CHECK(CoxeterSystem::build("A2").order() == 6);
  const auto b3 = CoxeterSystem::build("B3");
  CHECK(b3.order() == 48);
  CHECK(b3.length(b3.longest()) == 9);
  CHECK(CoxeterSystem::build("D4").order() == 192);
  CHECK(CoxeterSystem::build("F4").order() == 1152);
  CHECK(weyl_group_order(make_type('E', 8)) == 696729600ULL);
  try {
    CoxeterSystem::build("E6");
    FAIL("expected GroupTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupTooLarge);
  }
  CHECK(CoxeterSystem::build("E6", {.max_order = 60000}).order() == 51840);
}

TEST_CASE("matches an independent permutation model") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    CAPTURE(label);
    const auto sys = CoxeterSystem::build(label);
    const auto model = oracle::Model::of(label);
    REQUIRE(sys.order() == model.order());
    std::set<oracle::Key> seen;
    for (auto a : sys.elements()) {
      const auto ka = key_of(model, sys, a);
      seen.insert(ka);
      CHECK(sys.length(a) == model.length(ka));
      CHECK(key_of(model, sys, sys.inverse(a)) == model.inverse(ka));
      for (auto b : sys.elements()) {
        if (b.index() % 5 != a.index() % 5) continue;  // a sample keeps A3/B3 quick
        CHECK(key_of(model, sys, sys.multiply(a, b)) == model.multiply(ka, key_of(model, sys, b)));
      }
    }
    CHECK(seen.size() == sys.order());
    CHECK(key_of(model, sys, sys.longest()) == model.longest());
    CHECK(sys.length(sys.longest()) == static_cast<int>(model.reflections().size()));
  }
}

TEST_CASE("multiplication and length") {
  const auto a2 = CoxeterSystem::build("A2");
  CHECK(a2.multiply(a2.generator(1), a2.generator(1)) == a2.identity());
  CHECK(a2.length(a2.identity()) == 0);
  CHECK(a2.length(a2.longest()) == 3);
  const auto a3 = CoxeterSystem::build("A3");
  CHECK(a3.length(a3.longest()) == 6);
  CHECK(a3.multiply(a3.longest(), a3.longest()) == a3.identity());

  const auto other = CoxeterSystem::build("A2");
  try {
    (void)a2.multiply(a2.identity(), other.generator(1));
    FAIL("expected SystemMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SystemMismatch);
  }
  CHECK_THROWS_AS((void)a2.generator(3), Error);
}

TEST_CASE("normal forms are ShortLex least") {
  for (const char* label : {"A3", "B2", "G2"}) {
    const auto sys = CoxeterSystem::build(label);
    const auto model = oracle::Model::of(label);
    for (auto w : sys.elements()) {
      const auto words = model.reduced_words(key_of(model, sys, w));
      REQUIRE_FALSE(words.empty());
      CHECK(sys.normal_form(w) == *std::min_element(words.begin(), words.end()));
    }
  }
}

TEST_CASE("canonicity and exchange") {
  const auto sys = CoxeterSystem::build("A3");
  for (auto a : sys.elements()) {
    for (auto b : sys.elements()) {
      for (const auto& wa : all_reduced_words(sys, a)) {
        auto word = wa;
        word.insert(word.end(), sys.normal_form(b).begin(), sys.normal_form(b).end());
        CHECK(sys.evaluate(word) == sys.multiply(a, b));
      }
    }
    for (int s = 1; s <= sys.rank(); ++s) {
      if (!sys.is_left_descent(s, a)) continue;
      const auto words = all_reduced_words(sys, a);
      CHECK(std::any_of(words.begin(), words.end(), [&](const Word& w) { return w.front() == s; }));
    }
  }
}

TEST_CASE("reduced words") {
  const auto a2 = CoxeterSystem::build("A2");
  CHECK(all_reduced_words(a2, a2.identity()) == std::vector<Word>{Word{}});
  CHECK(all_reduced_words(a2, a2.longest()) == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});

  const auto a3 = CoxeterSystem::build("A3");
  const auto model = oracle::Model::of("A3");
  const auto words = all_reduced_words(a3, a3.longest());
  CHECK(words.size() == model.reduced_words(model.longest()).size());
  CHECK(words.size() == 16);
  CHECK(words == model.reduced_words(model.longest()));

  const auto b3 = CoxeterSystem::build("B3");
  try {
    (void)all_reduced_words(b3, b3.longest(), 8);
    FAIL("expected WordTooLong");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WordTooLong);
  }
  CHECK(a2.is_reduced(Word{1, 2}));
  CHECK_FALSE(a2.is_reduced(Word{1, 1}));
  CHECK_THROWS_AS((void)a2.evaluate(Word{1, 4}), Error);
}

TEST_CASE("reflections") {
  const auto a1 = CoxeterSystem::build("A1");
  REQUIRE(a1.reflections().size() == 1);
  CHECK(a1.reflections()[0].element == a1.generator(1));

  const auto a2 = CoxeterSystem::build("A2");
  std::set<Element> refl;
  for (const auto& r : a2.reflections()) refl.insert(r.element);
  CHECK(refl == std::set<Element>{a2.generator(1), a2.generator(2), elem(a2, {1, 2, 1})});

  for (const char* label : {"B2", "B3", "G2", "A3"}) {
    CAPTURE(label);
    const auto sys = CoxeterSystem::build(label);
    const auto model = oracle::Model::of(label);
    std::set<oracle::Key> keys;
    for (const auto& r : sys.reflections()) {
      keys.insert(key_of(model, sys, r.element));
      CHECK(sys.evaluate(r.as_word) == r.element);
      CHECK(std::equal(r.as_word.begin(), r.as_word.end(), r.as_word.rbegin()));
      CHECK(sys.is_reflection(r.element));
    }
    CHECK(keys == model.reflections());
  }
  CHECK(CoxeterSystem::build("B2").num_reflections() == 4);
}

TEST_CASE("system json") {
  const auto a3 = CoxeterSystem::build("A3");
  const auto j = nlohmann::json::parse(a3.to_json());
  CHECK(j["type"] == "A3");
  CHECK(j["order"] == 24);
  const auto w0 = j["longest_word"].get<Word>();
  CHECK(a3.evaluate(w0) == a3.longest());
  CHECK(w0.size() == 6);
  CHECK(format_word({}) == "e");
  CHECK(format_word(Word{1, 2}) == "1,2");
}
