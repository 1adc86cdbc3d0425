#include "invpat/polynomial.hpp"

#include <sstream>

namespace invpat {

PolynomialInT::PolynomialInT(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

PolynomialInT::PolynomialInT(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

PolynomialInT::PolynomialInT(std::initializer_list<long> coefficients) {
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

PolynomialInT PolynomialInT::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return PolynomialInT(std::move(v));
}

void PolynomialInT::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt PolynomialInT::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

PolynomialInT& PolynomialInT::operator+=(const PolynomialInT& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolynomialInT& PolynomialInT::operator-=(const PolynomialInT& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolynomialInT& PolynomialInT::operator*=(const PolynomialInT& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

std::string PolynomialInT::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const BigInt& c = c_[k];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace invpat
