#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exponent pair q^q * rho^rho. Ordered by (rho, q).
struct Monomial {
  int q = 0;
  int rho = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.rho <=> b.rho; c != 0) return c;
    return a.q <=> b.q;
  }
  Monomial operator*(const Monomial& o) const { return {q + o.q, rho + o.rho}; }
  Monomial inverse() const { return {-q, -rho}; }
  bool is_one() const { return q == 0 && rho == 0; }
};

/// Sparse Laurent polynomial in q and rho with integer coefficients.
/// Terms are kept sorted by monomial, with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(BigInt c);
  LaurentPoly(Monomial m, BigInt c);
  static LaurentPoly q_power(int n) { return LaurentPoly(Monomial{n, 0}, 1); }
  static LaurentPoly rho_power(int n) { return LaurentPoly(Monomial{0, n}, 1); }
  /// Builds from arbitrary terms; combines duplicates and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value (coefficient of q^0 rho^0).
  BigInt constant_term() const;
  const Term& leading() const { return terms_.back(); }
  /// Componentwise minimum / maximum exponents. Requires nonzero.
  Monomial min_exponents() const;
  Monomial max_exponents() const;
  bool has_rho() const;
  /// Gcd of all coefficients (positive); zero for the zero polynomial.
  BigInt content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const BigInt& c) const;
  /// Exact division of every coefficient by c.
  LaurentPoly divided_exact(const BigInt& c) const;
  LaurentPoly shifted(Monomial m) const;
  /// Substitutes q -> q^a rho^b style maps: each monomial (i, j) is sent to
  /// (i*qq.q + j*rr.q, i*qq.rho + j*rr.rho).
  LaurentPoly substitute_monomials(Monomial q_image, Monomial rho_image) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Text of the form "2*q^-1*rho^2-q+1"; terms in descending order.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Parses a scalar expression over q and rho with +, -, *, /, integer powers
/// and parentheses. Returns numerator and denominator (not reduced).
std::pair<LaurentPoly, LaurentPoly> parse_scalar_expression(std::string_view text);

}  // namespace qwb
