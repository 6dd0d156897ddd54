#include "kbracket/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace kbracket {

LaurentPoly LaurentPoly::monomial(int degree, Integer coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(degree, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Integer>>& terms) {
  LaurentPoly p;
  for (const auto& [d, c] : terms) p.add_term(d, c);
  return p;
}

Integer LaurentPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  for (const auto& [d, c] : terms_) p.terms_.emplace(-d, c);
  return p;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly p;
  for (const auto& [d, c] : terms_) p.terms_.emplace(d + shift, c);
  return p;
}

void LaurentPoly::add_term(int degree, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(degree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [dp, cp] : p.terms_)
    for (const auto& [dq, cq] : q.terms_) r.add_term(dp + dq, cp * cq);
  return r;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [d, c] : p.terms_) r.terms_.emplace(d, -c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << it->second;
    if (it->first != 0) out << "*A^" << it->first;
  }
  return out.str();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly delta_pow(int k) {
  if (k < 0) throw std::invalid_argument("delta_pow: negative exponent");
  // (-1)^k * sum_j C(k,j) A^(4j - 2k)
  LaurentPoly p;
  Integer binom = 1;
  const int sign = (k % 2 == 0) ? 1 : -1;
  for (int j = 0; j <= k; ++j) {
    p.add_term(4 * j - 2 * k, sign * binom);
    binom = binom * (k - j) / (j + 1);
  }
  return p;
}

SpanInfo span_min_max(const LaurentPoly& p) {
  const int lo = p.min_degree();
  const int hi = p.max_degree();
  return {lo, hi, hi - lo};
}

}  // namespace kbracket
