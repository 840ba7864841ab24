#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace bruhat {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with exact integer coefficients, coeffs()[k] is the
/// coefficient of q^k. Stored trimmed: no trailing zeros.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly constant(long long c);
  static QPoly monomial(int degree, long long c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int k) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  QPoly shifted(int k) const; // q^k * this
  void add_term(int degree, const BigInt& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Human form, highest degree first: "q^3+q", "1", "0".
  std::string str() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

} // namespace bruhat
