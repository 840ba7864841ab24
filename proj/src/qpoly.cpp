#include "bruhat/qpoly.hpp"

#include <stdexcept>

namespace bruhat {

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(long long c) { return QPoly({BigInt(c)}); }

QPoly QPoly::monomial(int degree, long long c) {
  if (degree < 0)
    throw std::invalid_argument("negative degree");
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

BigInt QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size()))
    return 0;
  return coeffs_[k];
}

void QPoly::add_term(int degree, const BigInt& c) {
  if (coeffs_.size() <= static_cast<std::size_t>(degree))
    coeffs_.resize(static_cast<std::size_t>(degree) + 1);
  coeffs_[degree] += c;
  trim();
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0)
      continue;
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b)
      out[a + b] += coeffs_[a] * other.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero())
    return {};
  std::vector<BigInt> out(static_cast<std::size_t>(k), BigInt(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(out));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

std::string QPoly::str() const {
  if (is_zero())
    return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0)
      continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (!out.empty() || c < 0)
      out += c < 0 ? "-" : "+";
    if (mag != 1 || k == 0)
      out += mag.str();
    if (k >= 1)
      out += "q";
    if (k >= 2)
      out += "^" + std::to_string(k);
  }
  return out;
}

} // namespace bruhat
