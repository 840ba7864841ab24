#include "bruhat/permutation.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace bruhat;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }
} // namespace

TEST_CASE("parse and print") {
  CHECK(P("2143").str() == "2143");
  CHECK(P("2,1,4,3") == P("2143"));
  CHECK(P("1,2,3,4,5,6,7,8,10,9").str() == "1,2,3,4,5,6,7,8,10,9");
  CHECK_THROWS_AS(P("1223"), ParseError);
  CHECK_THROWS_AS(P("124"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("1a3"), ParseError);
  CHECK(Reflection::parse("t(1,3)") == Reflection(1, 3));
  CHECK(Reflection(2, 4).str() == "t(2,4)");
  CHECK_THROWS(Reflection(3, 3));
}

TEST_CASE("compose") {
  CHECK(compose(P("213"), P("132")) == P("231"));
  CHECK(compose(P("2413"), Permutation::identity(4)) == P("2413"));
  CHECK(compose(P("321"), P("321")) == P("123"));
  CHECK_THROWS_AS(compose(P("21"), P("123")), RankMismatch);
}

TEST_CASE("length and inverse") {
  CHECK(length(P("123")) == 0);
  CHECK(length(P("321")) == 3);
  CHECK(length(P("231")) == 2);
  for (const auto& w : symmetric_group(5)) {
    CHECK(w.length() == oracle::inversions(w.window()));
    CHECK(w.inverse().inverse() == w);
    CHECK(compose(w, w.inverse()).is_identity());
  }
}

TEST_CASE("longest element") {
  CHECK(longest_element(2) == P("21"));
  CHECK(longest_element(3) == P("321"));
  CHECK(longest_element(4) == P("4321"));
  CHECK(longest_element(6).length() == 15);
}

TEST_CASE("right multiplication by a reflection") {
  CHECK(right_multiply_reflection(P("123"), Reflection(1, 3)) == P("321"));
  CHECK(right_multiply_reflection(P("231"), Reflection(1, 2)) == P("321"));
  for (const auto& x : symmetric_group(4))
    for (const auto& t : all_reflections(4)) {
      const auto y = x.times(t);
      CHECK(y.times(t) == x);
      // exactly one of x < xt, xt < x
      CHECK(bruhat_leq(x, y) != bruhat_leq(y, x));
      Reflection label;
      CHECK(reflection_between(x, y, &label));
      CHECK(label == t);
    }
}

TEST_CASE("roots") {
  CHECK(Reflection(1, 3).root(4) == std::vector<int>{1, 0, -1, 0});
  CHECK(all_reflections(4).size() == 6);
  for (const auto& t : all_reflections(5))
    CHECK(all_reflections(5)[reflection_index(t, 5)] == t);
}

TEST_CASE("bruhat order examples") {
  for (const auto& w : symmetric_group(3))
    CHECK(bruhat_leq(P("123"), w));
  CHECK_FALSE(bruhat_leq(P("213"), P("132")));
  CHECK_FALSE(bruhat_leq(P("132"), P("213")));
  CHECK(bruhat_leq(P("132"), P("312")));
}

TEST_CASE("bruhat order agrees with the subword characterization") {
  for (int n : {3, 4}) {
    for (const auto& y : symmetric_group(n)) {
      const auto below = oracle::lower_set_by_subwords(y.window());
      for (const auto& x : symmetric_group(n)) {
        CHECK(bruhat_leq(x, y) == (below.count(x.window()) > 0));
        if (bruhat_leq(x, y) && x != y)
          CHECK(x.length() < y.length());
      }
    }
  }
}

TEST_CASE("direct sums") {
  CHECK(direct_sum(P("21"), P("21")) == P("2143"));
  CHECK(direct_sum(P("123"), P("21")) == P("12354"));
  CHECK(block_restrict(P("21354"), 2, 3) == P("132"));
  CHECK(block_restrict(P("21354"), 0, 2) == P("21"));
  for (const auto& a : symmetric_group(2))
    for (const auto& c : symmetric_group(2))
      for (const auto& b : symmetric_group(3))
        for (const auto& d : symmetric_group(3))
          CHECK(bruhat_leq(direct_sum(a, b), direct_sum(c, d)) ==
                (bruhat_leq(a, c) && bruhat_leq(b, d)));
}

TEST_CASE("symmetric group enumeration") {
  CHECK(symmetric_group(1).size() == 1);
  CHECK(symmetric_group(4).size() == 24);
  CHECK(symmetric_group(5).size() == 120);
  CHECK(symmetric_group(4).front().is_identity());
}
