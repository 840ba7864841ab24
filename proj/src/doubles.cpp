#include "bruhat/doubles.hpp"

#include <numeric>

namespace bruhat {

using nlohmann::json;

void DegreeMultiset::add(int degree, const Permutation& element, std::size_t count) {
  if (count > 0)
    counts_[{degree, element}] += count;
}

std::vector<std::pair<DegreeMultiset::Item, std::size_t>> DegreeMultiset::entries() const {
  return {counts_.begin(), counts_.end()};
}

std::size_t DegreeMultiset::total() const {
  std::size_t t = 0;
  for (const auto& [item, count] : counts_)
    t += count;
  return t;
}

std::string DegreeMultiset::str() const {
  std::string out = "{";
  for (const auto& [item, count] : counts_) {
    for (std::size_t k = 0; k < count; ++k) {
      if (out.size() > 1)
        out += ',';
      out += "(" + std::to_string(item.first) + "," + item.second.str() + ")";
    }
  }
  return out + "}";
}

json DegreeMultiset::to_json() const {
  json out = json::array();
  for (const auto& [item, count] : counts_)
    out.push_back({item.first, item.second.str(), count});
  return out;
}

DegreeMultiset ds_multiset(HcdAnalysis& analysis, Index bottom, Index z, Index z2) {
  const Interval& interval = analysis.interval();
  DegreeMultiset out;
  for (Index p : analysis.shortcuts(bottom, z)) {
    auto j = analysis.join(z2, p);
    if (!j)
      throw JoinMissing("no join of " + interval.at(z2).str() + " and " +
                        interval.at(p).str());
    const int first = interval.dist(bottom, p);
    for (Index b : analysis.shortcuts(p, *j))
      out.add(first + interval.dist(p, b), interval.at(b));
  }
  return out;
}

DegreeMultiset ds_multiset(const Interval& interval, const Permutation& z,
                           const Permutation& z2) {
  HcdAnalysis analysis(interval);
  return ds_multiset(analysis, interval.bottom(), interval.index_of(z), interval.index_of(z2));
}

bool ds_symmetric(HcdAnalysis& analysis, Index bottom, Index z, Index z2) {
  return z == z2 ||
         ds_multiset(analysis, bottom, z, z2) == ds_multiset(analysis, bottom, z2, z);
}

bool ds_symmetric(const Interval& interval, const Permutation& z, const Permutation& z2) {
  HcdAnalysis analysis(interval);
  return ds_symmetric(analysis, interval.bottom(), interval.index_of(z),
                      interval.index_of(z2));
}

std::vector<std::vector<Index>> equivalence_classes(HcdAnalysis& analysis,
                                                    bool include_bottom) {
  const Index bottom = analysis.interval().bottom();
  std::vector<Index> members = analysis.enumerate_hcds(bottom, true);
  if (!include_bottom)
    std::erase(members, bottom);

  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a)
      a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (find(a) != find(b) && ds_symmetric(analysis, bottom, members[a], members[b]))
        parent[find(a)] = find(b);

  std::map<std::size_t, std::vector<Index>> grouped;
  for (std::size_t a = 0; a < members.size(); ++a)
    grouped[find(a)].push_back(members[a]);
  std::vector<std::vector<Index>> out;
  for (auto& [root, cls] : grouped)
    out.push_back(std::move(cls));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Permutation>> equivalence_classes(const Interval& interval,
                                                          bool include_bottom) {
  HcdAnalysis analysis(interval);
  std::vector<std::vector<Permutation>> out;
  for (const auto& cls : equivalence_classes(analysis, include_bottom)) {
    auto& row = out.emplace_back();
    for (Index a : cls)
      row.push_back(interval.at(a));
  }
  return out;
}

namespace {

json class_json(const Interval& interval, const std::vector<std::vector<Index>>& classes) {
  json out = json::array();
  for (const auto& cls : classes) {
    json row = json::array();
    for (Index a : cls)
      row.push_back(interval.at(a).str());
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace

CheckRecord verify_em0(HcdAnalysis& analysis) {
  const Interval& interval = analysis.interval();
  auto record = make_record("em0", interval);
  const auto classes = equivalence_classes(analysis, true);
  const auto without_bottom = equivalence_classes(analysis, false);
  bool every_class_has_r_element = true;
  for (const auto& cls : classes) {
    bool has = std::any_of(cls.begin(), cls.end(), [&](Index z) {
      return analysis.is_amazing_r_element(interval.bottom(), z);
    });
    every_class_has_r_element = every_class_has_r_element && has;
  }
  record.detail["classes"] = classes.size();
  record.detail["classes_without_u"] = without_bottom.size();
  record.detail["every_class_has_amazing_r_element"] = every_class_has_r_element;
  if (classes.size() != 1) {
    record.status = Status::Finding;
    record.detail["partition"] = class_json(interval, classes);
  }
  return record;
}

CheckRecord verify_congettura(HcdAnalysis& analysis) {
  const Interval& interval = analysis.interval();
  auto record = make_record("congettura", interval);
  const auto amazing = analysis.enumerate_hcds(interval.bottom(), true);
  record.detail["amazing"] = amazing.size();
  for (Index z : amazing) {
    if (!analysis.is_r_element(interval.bottom(), z)) {
      record.status = Status::Finding;
      record.z = interval.at(z);
      record.detail["rtilde"] = analysis.rtilde(interval.bottom(), interval.top()).str();
      record.detail["rtilde_z"] = analysis.rtilde_z(interval.bottom(), z).str();
      break;
    }
  }
  return record;
}

CheckRecord verify_strong_ds(HcdAnalysis& analysis) {
  const Interval& interval = analysis.interval();
  const Index bottom = interval.bottom();
  auto record = make_record("strong-ds", interval);
  const auto amazing = analysis.enumerate_hcds(bottom, true);
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < amazing.size(); ++a) {
    for (std::size_t b = a + 1; b < amazing.size(); ++b) {
      ++pairs;
      auto forward = ds_multiset(analysis, bottom, amazing[a], amazing[b]);
      auto backward = ds_multiset(analysis, bottom, amazing[b], amazing[a]);
      if (forward != backward) {
        record.status = Status::Finding;
        record.z = interval.at(amazing[a]);
        record.z2 = interval.at(amazing[b]);
        record.detail["ds"] = forward.str();
        record.detail["ds_reversed"] = backward.str();
        record.detail["pairs"] = pairs;
        return record;
      }
    }
  }
  record.detail["pairs"] = pairs;
  return record;
}

CheckRecord verify_em0(const Interval& interval) {
  HcdAnalysis analysis(interval);
  return verify_em0(analysis);
}

CheckRecord verify_congettura(const Interval& interval) {
  HcdAnalysis analysis(interval);
  return verify_congettura(analysis);
}

CheckRecord verify_strong_ds(const Interval& interval) {
  HcdAnalysis analysis(interval);
  return verify_strong_ds(analysis);
}

bool BolognaChain::all_equal() const {
  return std::all_of(lines.begin(), lines.end(),
                     [&](const QPoly& line) { return line == lines.front(); });
}

namespace {

QPoly nested_sum(HcdAnalysis& analysis, Index outer, Index inner) {
  const Interval& interval = analysis.interval();
  const Index u = interval.bottom(), v = interval.top();
  QPoly sum;
  for (Index p : analysis.shortcuts(u, outer)) {
    auto j = analysis.join(inner, p);
    if (!j)
      throw JoinMissing("no join in double sum");
    QPoly inner_sum;
    for (Index b : analysis.shortcuts(p, *j))
      inner_sum += analysis.rtilde(b, v).shifted(interval.dist(p, b));
    sum += inner_sum.shifted(interval.dist(u, p));
  }
  return sum;
}

QPoly multiset_sum(HcdAnalysis& analysis, const DegreeMultiset& ds) {
  const Interval& interval = analysis.interval();
  QPoly sum;
  for (const auto& [item, count] : ds.entries()) {
    QPoly term = analysis.rtilde(interval.index_of(item.second), interval.top())
                     .shifted(item.first);
    term *= QPoly::constant(static_cast<long long>(count));
    sum += term;
  }
  return sum;
}

} // namespace

BolognaChain bologna_chain(HcdAnalysis& analysis, Index z, Index z2) {
  const Interval& interval = analysis.interval();
  const Index u = interval.bottom();
  BolognaChain chain;
  chain.lines.push_back(analysis.rtilde(u, interval.top()));
  chain.lines.push_back(analysis.rtilde_z(u, z));
  chain.lines.push_back(nested_sum(analysis, z, z2));
  chain.lines.push_back(multiset_sum(analysis, ds_multiset(analysis, u, z, z2)));
  chain.lines.push_back(multiset_sum(analysis, ds_multiset(analysis, u, z2, z)));
  chain.lines.push_back(nested_sum(analysis, z2, z));
  chain.lines.push_back(analysis.rtilde_z(u, z2));
  return chain;
}

CheckRecord verify_bologna(HcdAnalysis& analysis, Index z, Index z2) {
  const Interval& interval = analysis.interval();
  const Index u = interval.bottom();
  auto record = make_record("bologna", interval);
  record.z = interval.at(z);
  record.z2 = interval.at(z2);
  if (!analysis.is_amazing(u, z) || !analysis.is_amazing(u, z2)) {
    record.status = Status::Skip;
    record.detail["reason"] = "not amazing";
    return record;
  }

  const bool h1 = analysis.is_amazing_r_element(u, z);
  bool h2 = true;
  for (Index x = u + 1; h2 && x < interval.size(); ++x)
    h2 = analysis.is_r_element(x, *analysis.join(z2, x));
  const bool h3 = ds_symmetric(analysis, u, z, z2);
  const auto chain = bologna_chain(analysis, z, z2);

  json lines = json::array();
  for (const auto& line : chain.lines)
    lines.push_back(line.str());
  record.detail["hypotheses"] = {h1, h2, h3};
  record.detail["lines"] = std::move(lines);

  // lines 2=3 and 4=5 restate the definition of DS and hold unconditionally
  const bool definitional = chain.lines[2] == chain.lines[3] && chain.lines[4] == chain.lines[5];
  if (!definitional) {
    record.status = Status::Fail;
    record.detail["reason"] = "double sum differs from its multiset form";
    return record;
  }
  if (!(h1 && h2 && h3)) {
    record.status = Status::Skip;
    return record;
  }
  const bool conclusion = analysis.is_r_element(u, z2);
  record.detail["conclusion"] = conclusion;
  record.status = conclusion && chain.all_equal() ? Status::Pass : Status::Fail;
  return record;
}

CheckRecord verify_bologna(const Interval& interval, const Permutation& z,
                           const Permutation& z2) {
  HcdAnalysis analysis(interval);
  return verify_bologna(analysis, interval.index_of(z), interval.index_of(z2));
}

CheckRecord verify_product(const Interval& first, const Interval& second,
                           const std::vector<ProductPair>& pairs) {
  const int a = first.n(), b = second.n();
  const Interval product = Interval::build(direct_sum(first.u(), second.u()),
                                           direct_sum(first.v(), second.v()));
  auto record = make_record("product", product);
  HcdAnalysis left(first), right(second), whole(product);
  const Index u = product.bottom();

  auto split = [&](Index x) {
    return std::pair{first.index_of(block_restrict(product.at(x), 0, a)),
                     second.index_of(block_restrict(product.at(x), a, b))};
  };
  auto contains = [](const std::vector<Index>& set, Index x) {
    return std::binary_search(set.begin(), set.end(), x);
  };

  std::size_t checked = 0, skipped = 0;
  std::string failure;
  for (const auto& pair : pairs) {
    const Index z1 = first.index_of(pair.z1), z1p = first.index_of(pair.z1_prime);
    const Index z2 = second.index_of(pair.z2), z2p = second.index_of(pair.z2_prime);
    if (!ds_symmetric(left, first.bottom(), z1, z1p) ||
        !ds_symmetric(right, second.bottom(), z2, z2p)) {
      ++skipped;
      continue;
    }
    ++checked;
    const Index z = product.index_of(direct_sum(pair.z1, pair.z2));
    const Index zp = product.index_of(direct_sum(pair.z1_prime, pair.z2_prime));

    auto fail = [&](const std::string& why) {
      if (failure.empty()) {
        failure = why;
        record.z = product.at(z);
        record.z2 = product.at(zp);
      }
    };

    if (!whole.is_amazing(u, z) || !whole.is_amazing(u, zp))
      fail("product decomposition not amazing");

    // shortcuts of [u,v] w.r.t. z and z' factor componentwise
    for (auto [zz, c1, c2] : {std::tuple{z, z1, z2}, std::tuple{zp, z1p, z2p}}) {
      const auto& w = whole.shortcuts(u, zz);
      const auto& w1 = left.shortcuts(first.bottom(), c1);
      const auto& w2 = right.shortcuts(second.bottom(), c2);
      for (Index p = 0; p < product.size(); ++p) {
        if (!product.leq(zz, p))
          continue;
        auto [p1, p2] = split(p);
        if (contains(w, p) != (contains(w1, p1) && contains(w2, p2)))
          fail("shortcut of [u,v] does not factor at " + product.at(p).str());
      }
    }

    // shortcuts of [p,v] w.r.t. z' v p (resp. z v p) factor componentwise
    for (auto [other, c1, c2] : {std::tuple{zp, z1p, z2p}, std::tuple{z, z1, z2}}) {
      for (Index p = 0; p < product.size(); ++p) {
        auto [p1, p2] = split(p);
        auto j = whole.join(other, p);
        auto j1 = left.join(c1, p1);
        auto j2 = right.join(c2, p2);
        if (!j || !j1 || !j2) {
          fail("missing join at " + product.at(p).str());
          continue;
        }
        if (product.at(*j) != direct_sum(first.at(*j1), second.at(*j2))) {
          fail("join does not factor at " + product.at(p).str());
          continue;
        }
        const auto& w = whole.shortcuts(p, *j);
        const auto& w1 = left.shortcuts(p1, *j1);
        const auto& w2 = right.shortcuts(p2, *j2);
        for (Index bb = 0; bb < product.size(); ++bb) {
          if (!product.leq(*j, bb))
            continue;
          auto [b1, b2] = split(bb);
          if (contains(w, bb) != (contains(w1, b1) && contains(w2, b2)))
            fail("double shortcut does not factor at " + product.at(bb).str());
        }
      }
    }

    const auto ds = ds_multiset(whole, u, z, zp);
    if (ds != ds_multiset(whole, u, zp, z))
      fail("DS symmetry does not transfer");

    DegreeMultiset factored;
    const auto ds1 = ds_multiset(left, first.bottom(), z1, z1p);
    const auto ds2 = ds_multiset(right, second.bottom(), z2, z2p);
    for (const auto& [i1, c1] : ds1.entries())
      for (const auto& [i2, c2] : ds2.entries())
        factored.add(i1.first + i2.first, direct_sum(i1.second, i2.second), c1 * c2);
    if (factored != ds)
      fail("DS of the product is not the product of the factors' DS");
  }

  record.detail["factors"] = {interval_summary(first), interval_summary(second)};
  record.detail["pairs_checked"] = checked;
  record.detail["pairs_skipped"] = skipped;
  if (!failure.empty()) {
    record.status = Status::Fail;
    record.detail["reason"] = failure;
  } else if (checked == 0) {
    record.status = Status::Skip;
  }
  return record;
}

} // namespace bruhat
