#pragma once

#include "qwb/laurent.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qwb {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind {
  Generic,      // Q(q, rho)
  OneVariable,  // Q(q), rho -> sign * q^n
  Rational,     // Q, q and rho fixed rationals
  Prime,        // GF(p), q and rho fixed units
  Cyclotomic,   // Q(zeta_m), q -> zeta_m, rho -> sign * q^n
};

/// Raw scalar storage. Its meaning depends on the owning Field:
///  - Prime: `mod` holds the residue in [0, p).
///  - otherwise: num / den with den empty meaning 1, kept canonical.
struct Scalar {
  std::int64_t mod = 0;
  LaurentPoly num;
  LaurentPoly den;

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// Least e >= 1 with 1 + q^2 + ... + q^{2(e-1)} = 0; nullopt encodes infinity.
struct QuantumChar {
  std::optional<int> value;

  bool is_infinite() const { return !value.has_value(); }
  /// True when e > n (always true for infinity).
  bool exceeds(int n) const { return !value || *value > n; }
  std::string to_string() const { return value ? std::to_string(*value) : "inf"; }
  friend bool operator==(const QuantumChar&, const QuantumChar&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr generic();
  /// Q(q) with rho = sign * q^exponent.
  static FieldPtr one_variable(int exponent, int sign = 1);
  static FieldPtr rational(const BigRational& q, const BigRational& rho);
  static FieldPtr prime(std::int64_t p, std::int64_t q, std::int64_t rho);
  /// Q(zeta_m) with q = zeta_m and rho = sign * q^exponent.
  static FieldPtr cyclotomic(int m, int exponent, int sign = 1);
  /// Parses a canonical field spec (see spec()). Aliases delta-zero and
  /// delta-zero:neg are accepted; rho2:<a> is handled by parse_field_specs.
  static FieldPtr parse(std::string_view spec);

  FieldKind kind() const { return kind_; }
  /// Canonical text: generic, q-power:<n>[:neg], rational:<q>,<rho>,
  /// gfp:<p>,<q>,<rho>, cyclotomic:<m>,<n>[:neg].
  const std::string& spec() const { return spec_; }
  bool same_as(const Field& o) const { return this == &o || spec_ == o.spec_; }

  std::int64_t characteristic() const { return kind_ == FieldKind::Prime ? p_ : 0; }
  int rho_exponent() const { return rho_exp_; }
  int rho_sign() const { return rho_sign_; }
  int cyclotomic_order() const { return m_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_bigint(const BigInt& v) const;
  /// Image of an integer Laurent polynomial in q, rho under this field's specialization.
  Scalar from_laurent(const LaurentPoly& p) const;
  Scalar from_fraction(const LaurentPoly& num, const LaurentPoly& den) const;
  Scalar q() const { return from_laurent(LaurentPoly::q_power(1)); }
  Scalar rho() const { return from_laurent(LaurentPoly::rho_power(1)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  /// a + b * c, the inner loop of elimination.
  Scalar fma(const Scalar& a, const Scalar& b, const Scalar& c) const { return add(a, mul(b, c)); }
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }

  std::string format(const Scalar& a) const;
  Scalar parse_scalar(std::string_view text) const;
  /// Maps a generic-field value into this field.
  Scalar specialize(const Scalar& generic_value) const;

  /// q^2 == 1 in this field.
  bool q_squared_is_one() const;

 private:
  Field() = default;
  Scalar normalize(LaurentPoly num, LaurentPoly den, bool coprime) const;
  Scalar cyclo_reduce(const LaurentPoly& p, const BigInt& den) const;

  FieldKind kind_ = FieldKind::Generic;
  std::string spec_;
  int rho_exp_ = 0;
  int rho_sign_ = 1;
  std::int64_t p_ = 0;
  std::int64_t qmod_ = 0;
  std::int64_t rhomod_ = 0;
  BigRational qrat_;
  BigRational rhorat_;
  int m_ = 0;
  std::vector<BigInt> phi_;  // cyclotomic polynomial, low degree first
};

/// Expands a command-line field spec; rho2:<a> yields the two branches rho = +-q^a.
std::vector<FieldPtr> parse_field_specs(std::string_view spec);

/// Scalar bundled with its field; the public value type.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr f, Scalar v) : field_(std::move(f)), value_(std::move(v)) {}
  static FieldElement from_int(const FieldPtr& f, long long v) { return {f, f->from_int(v)}; }
  static FieldElement parse(const FieldPtr& f, std::string_view text) { return {f, f->parse_scalar(text)}; }

  const FieldPtr& field() const { return field_; }
  const Scalar& value() const { return value_; }
  bool is_zero() const { return field_->is_zero(value_); }
  std::string to_string() const { return field_->format(value_); }

  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inverse() const { return {field_, field_->inv(value_)}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  FieldElement pow(long long n) const;

 private:
  FieldPtr field_;
  Scalar value_;
};

/// delta = (rho - rho^{-1}) / (q - q^{-1}). Throws FieldError when q^2 = 1.
Scalar delta(const Field& f);
FieldElement delta(const FieldPtr& f);
/// Quantum integer-style helper: q^n as a scalar (n may be negative).
Scalar q_power(const Field& f, int n);
Scalar rho_power(const Field& f, int n);
/// Throws FieldError unless q - q^{-1} is invertible.
void require_q_invertible(const Field& f);

QuantumChar quantum_characteristic(const Field& f);

}  // namespace qwb
