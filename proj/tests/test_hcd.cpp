#include "bruhat/hcd.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace bruhat;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }

std::vector<std::pair<Permutation, Permutation>> pairs_of(int n) {
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& u : symmetric_group(n))
    for (const auto& v : symmetric_group(n))
      if (bruhat_leq(u, v))
        out.emplace_back(u, v);
  return out;
}

std::set<Permutation> as_set(const std::vector<Permutation>& xs) { return {xs.begin(), xs.end()}; }

const Interval& worked() {
  static const Interval I = Interval::build(P("123"), P("321"));
  return I;
}
} // namespace

TEST_CASE("hypercube spanning examples") {
  const auto empty = spans_hypercube(worked(), EdgeSet{P("231"), {}});
  REQUIRE(empty);
  CHECK(empty->rank == 0);
  CHECK(empty->assignment == std::vector<Permutation>{P("231")});

  const auto square = spans_hypercube(worked(), EdgeSet{P("231"), {P("132"), P("213")}});
  REQUIRE(square);
  CHECK(square->rank == 2);
  CHECK(square->bottom() == P("123"));
  CHECK(as_set(square->assignment) == std::set<Permutation>{P("123"), P("132"), P("213"), P("231")});

  const EdgeSet ambiguous{P("321"), {P("231"), P("312")}};
  CHECK_FALSE(spans_hypercube(worked(), ambiguous));
  CHECK(count_hypercube_embeddings(ambiguous, 10) == 2);
}

TEST_CASE("hypercube search counts match brute-force assignment counts on S4") {
  int tested = 0;
  for (const auto& p : symmetric_group(4)) {
    std::vector<Permutation> in;
    for (const auto& t : all_reflections(4))
      if (p.times(t).length() < p.length())
        in.push_back(p.times(t));
    const std::uint32_t subsets = 1u << in.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      if (std::popcount(mask) > 3)
        continue;
      EdgeSet edges{p, {}};
      std::vector<std::vector<int>> windows;
      for (std::size_t k = 0; k < in.size(); ++k)
        if (mask >> k & 1u) {
          edges.sources.push_back(in[k]);
          windows.push_back(in[k].window());
        }
      const int expected = oracle::count_cube_assignments(p.window(), windows);
      CHECK(count_hypercube_embeddings(edges, 1000) == expected);
      CHECK(spans_hypercube(edges).has_value() == (expected == 1));
      ++tested;
    }
  }
  CHECK(tested == 246);
}

TEST_CASE("clusters and inflow") {
  CHECK(spans_cluster(worked(), EdgeSet{P("321"), {}}));
  CHECK(spans_cluster(worked(), EdgeSet{P("321"), {P("231")}}));
  CHECK(spans_cluster(worked(), EdgeSet{P("321"), {P("123"), P("312")}}));
  CHECK(spans_cluster(worked(), EdgeSet{P("231"), {P("132"), P("213")}}));
  CHECK_FALSE(spans_cluster(worked(), EdgeSet{P("321"), {P("231"), P("312")}}));

  for (const auto& p : worked().elements())
    CHECK(inflow(worked(), P("123"), p).sources.empty());
  CHECK(as_set(inflow(worked(), P("231"), P("321")).sources) ==
        std::set<Permutation>{P("123"), P("312")});
  CHECK(as_set(inflow(worked(), P("231"), P("231")).sources) ==
        std::set<Permutation>{P("132"), P("213")});
}

TEST_CASE("upper decompositions on the worked interval") {
  CHECK(is_upper_hcd(worked(), P("123")));
  CHECK(is_upper_hcd(worked(), P("231")));
  CHECK(is_upper_hcd(worked(), P("312")));
  CHECK(as_set(enumerate_hcds(worked(), false)) ==
        std::set<Permutation>{P("123"), P("231"), P("312")});
  CHECK(as_set(enumerate_hcds(worked(), true)) ==
        std::set<Permutation>{P("123"), P("231"), P("312")});

  const auto standard = standard_hcds(worked());
  std::set<Permutation> zs;
  for (const auto& s : standard)
    zs.insert(s.z);
  CHECK(zs == std::set<Permutation>{P("231"), P("312")});

  const auto point = Interval::build(P("2413"), P("2413"));
  const auto trivial = standard_hcds(point);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].z == P("2413"));
  CHECK(trivial[0].kinds == 15);
  CHECK(enumerate_hcds(point, true) == std::vector<Permutation>{P("2413")});
}

TEST_CASE("joins and amazing decompositions") {
  for (const auto& z : worked().elements())
    CHECK(join(worked(), z, P("123")) == z);
  CHECK(join(worked(), P("231"), P("132")) == P("231"));
  CHECK(join(worked(), P("231"), P("312")) == P("321"));
  CHECK(is_amazing(worked(), P("123")));
  CHECK(is_amazing(worked(), P("231")));
}

TEST_CASE("shortcuts and the z-twisted polynomial") {
  CHECK(shortcuts(worked(), P("123")) == std::vector<Permutation>{P("123")});
  CHECK(as_set(shortcuts(worked(), P("231"))) == std::set<Permutation>{P("231"), P("321")});
  CHECK(shortcuts(worked(), P("321")) == std::vector<Permutation>{P("321")});
  CHECK(rtilde_z(worked(), P("123")).str() == "q^3+q");
  CHECK(rtilde_z(worked(), P("231")).str() == "q^3+q");
  CHECK(rtilde_z(Interval::build(P("312"), P("312")), P("312")).str() == "1");
  CHECK(is_R_element(worked(), P("123")));
  CHECK(is_R_element(worked(), P("231")));
  CHECK(is_amazing_R_element(worked(), P("231")));
}

TEST_CASE("S4 properties of decompositions") {
  for (const auto& [u, v] : pairs_of(4)) {
    const auto I = Interval::build(u, v);
    HcdAnalysis A(I);
    const Index b = I.bottom();
    const oracle::Poset ref(u.window(), v.window());
    const int rb = ref.at(u.window());

    const auto hcds = A.enumerate_hcds(b, false);
    const auto amazing = A.enumerate_hcds(b, true);
    CHECK(std::find(amazing.begin(), amazing.end(), b) != amazing.end());

    for (const auto& s : A.standard_hcds(b)) {
      const Index z = I.index_of(s.z);
      CHECK(std::find(hcds.begin(), hcds.end(), z) != hcds.end());
      CHECK(A.is_amazing(b, z));
      CHECK(A.is_amazing_r_element(b, z));
    }

    for (Index z = 0; z < I.size(); ++z) {
      const int rz = ref.at(I.at(z).window());
      std::set<std::vector<int>> mine;
      for (Index p : A.shortcuts(b, z))
        mine.insert(I.at(p).window());
      CHECK(mine == oracle::shortcuts(ref, rb, rz));
      for (Index x = 0; x < I.size(); ++x) {
        const auto j = A.join(z, x);
        const auto rj = oracle::join(ref, rz, ref.at(I.at(x).window()));
        CHECK(j.has_value() == rj.has_value());
        if (j && rj)
          CHECK(I.at(*j).window() == ref.elements[*rj]);
      }
    }

    for (Index z : hcds)
      CHECK(A.shortcuts(b, z) == A.shortcuts_by_cover_distance(b, z));

    for (Index z : amazing) {
      // the join with any x is again amazing for [x,v]
      for (Index x = 0; x < I.size(); ++x)
        CHECK(A.is_amazing(x, *A.join(z, x)));
      // every amazing decomposition is an R-element
      CHECK(A.is_r_element(b, z));
    }
  }
}

TEST_CASE("decompositions agree between the interval and its sub-intervals") {
  const auto I = Interval::build(P("1234"), P("4321"));
  HcdAnalysis A(I);
  for (Index x = 0; x < I.size(); x += 3) {
    const auto sub = Interval::build(I.at(x), I.v());
    HcdAnalysis B(sub);
    for (Index z = 0; z < I.size(); ++z) {
      if (!I.leq(x, z))
        continue;
      const Index zs = sub.index_of(I.at(z));
      CHECK(A.is_upper_hcd(x, z) == B.is_upper_hcd(sub.bottom(), zs));
      CHECK(A.rtilde_z(x, z) == B.rtilde_z(sub.bottom(), zs));
    }
  }
}
