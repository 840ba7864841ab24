#pragma once

// Permutations of S_n in one-line notation, type-A reflections and Bruhat
// comparison.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

inline constexpr int kMaxRank = 16;

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Transposition t(i,j), 1-based positions with i < j.
struct Reflection {
  int i = 1;
  int j = 2;

  Reflection() = default;
  Reflection(int a, int b);

  /// e_i - e_j as an integer vector of size n.
  std::vector<int> root(int n) const;
  std::string str() const;
  static Reflection parse(std::string_view text);

  friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

/// All n(n-1)/2 reflections of S_n in lexicographic (i, j) order.
std::vector<Reflection> all_reflections(int n);

/// Index of t(i,j) within all_reflections(n).
int reflection_index(const Reflection& t, int n);

/// Element of S_n; window()[k] is w(k+1).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(const std::vector<int>& window);

  static Permutation identity(int n);
  static Permutation parse(std::string_view text);

  int n() const { return n_; }
  int operator()(int position) const { return data_[position - 1]; }
  std::vector<int> window() const;

  int length() const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Window with positions i and j swapped, i.e. x * t.
  Permutation times(const Reflection& t) const;
  /// x * s_i (swap positions i, i+1).
  Permutation times_simple(int i) const;

  /// Canonical text form: concatenated digits for n <= 9, comma-separated
  /// otherwise.
  std::string str() const;

  /// Packed 4-bit encoding, unique per permutation of a fixed rank.
  std::uint64_t key() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0)
      return c;
    return a.data_ <=> b.data_;
  }

private:
  std::array<std::uint8_t, kMaxRank> data_{};
  int n_ = 0;
};

Permutation compose(const Permutation& a, const Permutation& b);
int length(const Permutation& w);
Permutation longest_element(int n);
Permutation right_multiply_reflection(const Permutation& x, const Reflection& t);
Permutation direct_sum(const Permutation& a, const Permutation& b);

/// Bruhat order by the tableau criterion: for every prefix length k the
/// sorted prefix of x is entrywise dominated by the sorted prefix of y.
bool bruhat_leq(const Permutation& x, const Permutation& y);

/// Label x^{-1} y if it is a transposition.
bool reflection_between(const Permutation& x, const Permutation& y,
                        Reflection* label);

/// All n! permutations of S_n in lexicographic window order.
const std::vector<Permutation>& symmetric_group(int n);

/// Block restriction of a block-diagonal permutation: positions
/// [offset+1, offset+size] shifted down by offset.
Permutation block_restrict(const Permutation& x, int offset, int size);

} // namespace bruhat

template <>
struct std::hash<bruhat::Permutation> {
  std::size_t operator()(const bruhat::Permutation& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.key() * 31u + static_cast<unsigned>(p.n()));
  }
};
