#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kbracket {

using Integer = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in the single variable A. Zero coefficients are
/// never stored, so the zero polynomial is the empty map.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// c * A^degree
  static LaurentPoly monomial(int degree, Integer coeff = 1);
  static LaurentPoly constant(Integer c) { return monomial(0, std::move(c)); }
  static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms);

  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int degree) const;
  const std::map<int, Integer>& terms() const { return terms_; }

  /// Throws std::domain_error on the zero polynomial.
  int min_degree() const;
  int max_degree() const;
  int span() const { return max_degree() - min_degree(); }

  /// Substitutes A -> A^-1.
  LaurentPoly inverted() const;
  /// Multiplies by A^shift.
  LaurentPoly shifted(int shift) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  void add_term(int degree, const Integer& coeff);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) { return p.terms_ == q.terms_; }

  /// Renders `c*A^d` terms joined by ` + `, highest degree first, e.g.
  /// `-1*A^5 + -1*A^-3 + 1*A^-7`. The degree-0 term prints as its
  /// coefficient alone and zero renders as `0`.
  std::string to_string() const;

 private:
  std::map<int, Integer> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// (-A^-2 - A^2)^k, the weight of one extra state circle.
LaurentPoly delta_pow(int k);

struct SpanInfo {
  int min_degree;
  int max_degree;
  int span;
};

/// Throws std::domain_error for the zero polynomial.
SpanInfo span_min_max(const LaurentPoly& p);

}  // namespace kbracket
