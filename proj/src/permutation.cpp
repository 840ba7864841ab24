#include "bruhat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <mutex>
#include <numeric>

namespace bruhat {

Reflection::Reflection(int a, int b) : i(a), j(b) {
  if (a < 1 || b <= a)
    throw std::invalid_argument("reflection needs 1 <= i < j");
}

std::vector<int> Reflection::root(int n) const {
  if (j > n)
    throw RankMismatch("reflection outside rank");
  std::vector<int> r(static_cast<std::size_t>(n), 0);
  r[i - 1] = 1;
  r[j - 1] = -1;
  return r;
}

std::string Reflection::str() const {
  return "t(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Reflection Reflection::parse(std::string_view text) {
  auto fail = [&] { return ParseError("bad reflection: " + std::string(text)); };
  if (text.size() < 6 || text.substr(0, 2) != "t(" || text.back() != ')')
    throw fail();
  auto body = text.substr(2, text.size() - 3);
  auto comma = body.find(',');
  if (comma == std::string_view::npos)
    throw fail();
  int a = 0, b = 0;
  auto r1 = std::from_chars(body.data(), body.data() + comma, a);
  auto r2 = std::from_chars(body.data() + comma + 1, body.data() + body.size(), b);
  if (r1.ec != std::errc{} || r2.ec != std::errc{} ||
      r1.ptr != body.data() + comma || r2.ptr != body.data() + body.size())
    throw fail();
  if (a < 1 || b <= a)
    throw fail();
  return Reflection(a, b);
}

std::vector<Reflection> all_reflections(int n) {
  std::vector<Reflection> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.emplace_back(i, j);
  return out;
}

int reflection_index(const Reflection& t, int n) {
  // row-major over i < j
  return (t.i - 1) * n - (t.i - 1) * t.i / 2 + (t.j - t.i - 1);
}

Permutation::Permutation(const std::vector<int>& window) {
  const int n = static_cast<int>(window.size());
  if (n < 1 || n > kMaxRank)
    throw ParseError("permutation rank out of range");
  std::array<bool, kMaxRank + 1> seen{};
  for (int k = 0; k < n; ++k) {
    int w = window[k];
    if (w < 1 || w > n || seen[w])
      throw ParseError("window is not a bijection on 1..n");
    seen[w] = true;
    data_[k] = static_cast<std::uint8_t>(w);
  }
  n_ = n;
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(w);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find(',', pos);
      if (end == std::string_view::npos)
        end = text.size();
      int value = 0;
      auto r = std::from_chars(text.data() + pos, text.data() + end, value);
      if (r.ec != std::errc{} || r.ptr != text.data() + end)
        throw ParseError("bad permutation: " + std::string(text));
      w.push_back(value);
      pos = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw ParseError("bad permutation: " + std::string(text));
      w.push_back(c - '0');
    }
  }
  return Permutation(w);
}

std::vector<int> Permutation::window() const {
  return {data_.begin(), data_.begin() + n_};
}

int Permutation::length() const {
  int inv = 0;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      inv += data_[a] > data_[b];
  return inv;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (int k = 0; k < n_; ++k)
    out.data_[data_[k] - 1] = static_cast<std::uint8_t>(k + 1);
  return out;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < n_; ++k)
    if (data_[k] != k + 1)
      return false;
  return true;
}

Permutation Permutation::times(const Reflection& t) const {
  if (t.j > n_)
    throw RankMismatch("reflection outside rank");
  Permutation out = *this;
  std::swap(out.data_[t.i - 1], out.data_[t.j - 1]);
  return out;
}

Permutation Permutation::times_simple(int i) const {
  return times(Reflection(i, i + 1));
}

std::string Permutation::str() const {
  std::string out;
  for (int k = 0; k < n_; ++k) {
    if (n_ > 9 && k > 0)
      out += ',';
    out += std::to_string(data_[k]);
  }
  return out;
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (int a = 0; a < n_; ++a)
    k |= static_cast<std::uint64_t>(data_[a] - 1) << (4 * a);
  return k;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n())
    throw RankMismatch("compose: rank mismatch");
  std::vector<int> w(static_cast<std::size_t>(a.n()));
  for (int k = 1; k <= a.n(); ++k)
    w[k - 1] = a(b(k));
  return Permutation(w);
}

int length(const Permutation& w) { return w.length(); }

Permutation longest_element(int n) {
  if (n < 1)
    throw std::invalid_argument("rank must be positive");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    w[k] = n - k;
  return Permutation(w);
}

Permutation right_multiply_reflection(const Permutation& x, const Reflection& t) {
  return x.times(t);
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  auto w = a.window();
  for (int k = 1; k <= b.n(); ++k)
    w.push_back(b(k) + a.n());
  return Permutation(w);
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.n() != y.n())
    return false;
  const int n = x.n();
  // count[k] = |{a <= i : w(a) >= k}| for the current prefix i
  std::array<int, kMaxRank + 2> cx{}, cy{};
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= x(i); ++k)
      ++cx[k];
    for (int k = 1; k <= y(i); ++k)
      ++cy[k];
    for (int k = 1; k <= n; ++k)
      if (cx[k] > cy[k])
        return false;
  }
  return true;
}

bool reflection_between(const Permutation& x, const Permutation& y,
                        Reflection* label) {
  if (x.n() != y.n())
    return false;
  int first = 0, second = 0, diffs = 0;
  for (int k = 1; k <= x.n(); ++k) {
    if (x(k) != y(k)) {
      if (++diffs > 2)
        return false;
      (diffs == 1 ? first : second) = k;
    }
  }
  if (diffs != 2 || x(first) != y(second) || x(second) != y(first))
    return false;
  if (label)
    *label = Reflection(first, second);
  return true;
}

const std::vector<Permutation>& symmetric_group(int n) {
  constexpr int kMaxEnumerated = 8;
  if (n < 1 || n > kMaxEnumerated)
    throw std::invalid_argument("symmetric_group: rank out of range");
  static std::array<std::once_flag, kMaxEnumerated + 1> flags;
  static std::array<std::vector<Permutation>, kMaxEnumerated + 1> groups;
  std::call_once(flags[n], [n] {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
      groups[n].emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
  });
  return groups[n];
}

Permutation block_restrict(const Permutation& x, int offset, int size) {
  std::vector<int> w;
  for (int k = offset + 1; k <= offset + size; ++k)
    w.push_back(x(k) - offset);
  return Permutation(w);
}

} // namespace bruhat
