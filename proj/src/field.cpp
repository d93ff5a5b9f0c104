#include "qwb/field.hpp"

#include "polygcd.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace qwb {
namespace {

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_pow(std::int64_t a, long long e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod_norm(a, p);
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  a = mod_norm(a, p);
  if (a == 0) throw FieldError("division by zero");
  return mod_pow(a, p - 2, p);
}

std::int64_t big_mod(const BigInt& v, std::int64_t p) {
  BigInt r = v % p;
  auto x = static_cast<std::int64_t>(r);
  return x < 0 ? x + p : x;
}

BigRational rat_pow(const BigRational& b, int e) {
  BigRational base = b;
  if (e < 0) {
    if (base == 0) throw FieldError("division by zero");
    base = 1 / base;
    e = -e;
  }
  BigRational r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

BigRational parse_rational(std::string_view s) {
  std::string t(s);
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(t));
    BigInt n(t.substr(0, slash));
    BigInt d(t.substr(slash + 1));
    if (d == 0) throw FieldError("zero denominator in \"" + t + "\"");
    return BigRational(n, d);
  } catch (const FieldError&) {
    throw;
  } catch (const std::exception&) {
    throw FieldError("invalid rational \"" + t + "\"");
  }
}

std::string rational_text(const BigRational& r) {
  std::string out = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1)
    out += "/" + boost::multiprecision::denominator(r).str();
  return out;
}

long long parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw FieldError("invalid integer \"" + std::string(s) + "\"");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
std::vector<BigInt> cyclotomic_poly(int m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<BigInt> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto den = cyclotomic_poly(d);
    // exact division by a monic polynomial
    std::vector<BigInt> quo(num.size() - den.size() + 1, 0);
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
      BigInt c = num[k + den.size() - 1];
      quo[k] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    num = quo;
  }
  return num;
}

std::string sign_suffix(int sign) { return sign < 0 ? ":neg" : ""; }

// Reduced fraction text: parenthesize sides with more than one term.
std::string fraction_text(const LaurentPoly& num, const LaurentPoly& den) {
  std::string n = num.to_string();
  if (den.is_zero()) return n;
  std::string d = den.to_string();
  if (num.size() > 1) n = "(" + n + ")";
  if (den.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

FieldPtr Field::generic() {
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Generic;
  f->spec_ = "generic";
  return f;
}

FieldPtr Field::one_variable(int exponent, int sign) {
  if (sign != 1 && sign != -1) throw FieldError("rho sign must be +1 or -1");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::OneVariable;
  f->rho_exp_ = exponent;
  f->rho_sign_ = sign;
  f->spec_ = "q-power:" + std::to_string(exponent) + sign_suffix(sign);
  return f;
}

FieldPtr Field::rational(const BigRational& q, const BigRational& rho) {
  if (q == 0 || rho == 0) throw FieldError("q and rho must be nonzero");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Rational;
  f->qrat_ = q;
  f->rhorat_ = rho;
  f->spec_ = "rational:" + rational_text(q) + "," + rational_text(rho);
  return f;
}

FieldPtr Field::prime(std::int64_t p, std::int64_t q, std::int64_t rho) {
  if (p < 3 || p > (std::int64_t{1} << 31)) throw FieldError("prime field needs an odd prime p < 2^31");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw FieldError("p = " + std::to_string(p) + " is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Prime;
  f->p_ = p;
  f->qmod_ = mod_norm(q, p);
  f->rhomod_ = mod_norm(rho, p);
  if (f->qmod_ == 0 || f->rhomod_ == 0) throw FieldError("q and rho must be units mod p");
  f->spec_ = "gfp:" + std::to_string(p) + "," + std::to_string(f->qmod_) + "," + std::to_string(f->rhomod_);
  return f;
}

FieldPtr Field::cyclotomic(int m, int exponent, int sign) {
  if (m < 1 || m > 200) throw FieldError("cyclotomic order must be in [1, 200]");
  if (sign != 1 && sign != -1) throw FieldError("rho sign must be +1 or -1");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Cyclotomic;
  f->m_ = m;
  f->rho_exp_ = exponent;
  f->rho_sign_ = sign;
  f->phi_ = cyclotomic_poly(m);
  f->spec_ = "cyclotomic:" + std::to_string(m) + "," + std::to_string(exponent) + sign_suffix(sign);
  return f;
}

FieldPtr Field::parse(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  auto parse_signed_tail = [](std::string_view body, int& sign) {
    sign = 1;
    auto c = body.find(':');
    if (c != std::string_view::npos) {
      if (body.substr(c + 1) != "neg") throw FieldError("expected ':neg' suffix");
      sign = -1;
      body = body.substr(0, c);
    }
    return body;
  };
  if (head == "generic" && rest.empty()) return generic();
  if (head == "delta-zero") {
    if (rest.empty()) return one_variable(0, 1);
    if (rest == "neg") return one_variable(0, -1);
    throw FieldError("delta-zero accepts only ':neg'");
  }
  if (head == "q-power") {
    int sign = 1;
    auto body = parse_signed_tail(rest, sign);
    return one_variable(static_cast<int>(parse_int(body)), sign);
  }
  if (head == "rational") {
    auto parts = split(rest, ',');
    if (parts.size() != 2) throw FieldError("rational:<q>,<rho> expected");
    return rational(parse_rational(parts[0]), parse_rational(parts[1]));
  }
  if (head == "gfp") {
    auto parts = split(rest, ',');
    if (parts.size() != 3) throw FieldError("gfp:<p>,<q>,<rho> expected");
    return prime(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]));
  }
  if (head == "cyclotomic") {
    int sign = 1;
    auto body = parse_signed_tail(rest, sign);
    auto parts = split(body, ',');
    if (parts.size() != 2) throw FieldError("cyclotomic:<m>,<n>[:neg] expected");
    return cyclotomic(static_cast<int>(parse_int(parts[0])), static_cast<int>(parse_int(parts[1])), sign);
  }
  throw FieldError("unknown field spec \"" + std::string(spec) + "\"");
}

std::vector<FieldPtr> parse_field_specs(std::string_view spec) {
  if (spec.substr(0, 5) == "rho2:") {
    int a = static_cast<int>(parse_int(spec.substr(5)));
    return {Field::one_variable(a, 1), Field::one_variable(a, -1)};
  }
  return {Field::parse(spec)};
}

// ---------------------------------------------------------------------------
// Canonical forms

Scalar Field::normalize(LaurentPoly num, LaurentPoly den, bool coprime) const {
  Scalar out;
  if (den.is_zero()) throw FieldError("division by zero");
  if (num.is_zero()) return out;
  if (kind_ == FieldKind::Cyclotomic) throw std::logic_error("normalize: cyclotomic");
  Monomial mn = num.min_exponents();
  Monomial md = den.min_exponents();
  LaurentPoly n0 = num.shifted(mn.inverse());
  LaurentPoly d0 = den.shifted(md.inverse());
  Monomial shift{mn.q - md.q, mn.rho - md.rho};
  if (!d0.is_constant() && !coprime) {
    LaurentPoly g = detail::poly_gcd(n0, d0);
    if (!g.is_one()) {
      n0 = detail::poly_exact_div(n0, g);
      d0 = detail::poly_exact_div(d0, g);
    }
  }
  if (d0.leading().second < 0) {
    n0 = -n0;
    d0 = -d0;
  }
  BigInt g2 = boost::multiprecision::gcd(n0.content(), d0.content());
  if (g2 != 1) {
    n0 = n0.divided_exact(g2);
    d0 = d0.divided_exact(g2);
  }
  out.num = n0.shifted(shift);
  if (!d0.is_one()) out.den = std::move(d0);
  return out;
}

Scalar Field::cyclo_reduce(const LaurentPoly& p, const BigInt& den) const {
  const int deg = static_cast<int>(phi_.size()) - 1;
  std::vector<BigInt> c(std::max(m_, deg), 0);
  for (const auto& [mono, coef] : p.terms()) {
    int e = ((mono.q % m_) + m_) % m_;
    c[e] += coef;
  }
  for (int k = static_cast<int>(c.size()) - 1; k >= deg; --k) {
    if (c[k] == 0) continue;
    BigInt lead = c[k];
    for (int j = 0; j <= deg; ++j) c[k - deg + j] -= lead * phi_[j];
  }
  std::vector<LaurentPoly::Term> terms;
  for (int k = 0; k < deg; ++k)
    if (c[k] != 0) terms.emplace_back(Monomial{k, 0}, c[k]);
  LaurentPoly num = LaurentPoly::from_terms(std::move(terms));
  Scalar out;
  if (num.is_zero()) return out;
  BigInt d = den;
  if (d < 0) {
    num = -num;
    d = -d;
  }
  BigInt g = boost::multiprecision::gcd(num.content(), d);
  if (g != 1) {
    num = num.divided_exact(g);
    d /= g;
  }
  out.num = std::move(num);
  if (d != 1) out.den = LaurentPoly(d);
  return out;
}

// ---------------------------------------------------------------------------
// Element construction

Scalar Field::zero() const { return Scalar{}; }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const { return from_bigint(BigInt(v)); }

Scalar Field::from_bigint(const BigInt& v) const {
  Scalar out;
  switch (kind_) {
    case FieldKind::Prime:
      out.mod = big_mod(v, p_);
      return out;
    default:
      out.num = LaurentPoly(v);
      return out;
  }
}

Scalar Field::from_laurent(const LaurentPoly& p) const {
  switch (kind_) {
    case FieldKind::Generic:
      return normalize(p, LaurentPoly(1), true);
    case FieldKind::OneVariable: {
      std::vector<LaurentPoly::Term> terms;
      terms.reserve(p.size());
      for (const auto& [m, c] : p.terms()) {
        BigInt coef = (rho_sign_ < 0 && (m.rho % 2 != 0)) ? BigInt(-c) : c;
        terms.emplace_back(Monomial{m.q + rho_exp_ * m.rho, 0}, std::move(coef));
      }
      return normalize(LaurentPoly::from_terms(std::move(terms)), LaurentPoly(1), true);
    }
    case FieldKind::Rational: {
      BigRational v = 0;
      for (const auto& [m, c] : p.terms()) v += BigRational(c) * rat_pow(qrat_, m.q) * rat_pow(rhorat_, m.rho);
      return normalize(LaurentPoly(boost::multiprecision::numerator(v)),
                       LaurentPoly(boost::multiprecision::denominator(v)), false);
    }
    case FieldKind::Prime: {
      std::int64_t acc = 0;
      for (const auto& [m, c] : p.terms()) {
        std::int64_t t = big_mod(c, p_);
        t = mod_mul(t, m.q >= 0 ? mod_pow(qmod_, m.q, p_) : mod_pow(mod_inv(qmod_, p_), -m.q, p_), p_);
        t = mod_mul(t, m.rho >= 0 ? mod_pow(rhomod_, m.rho, p_) : mod_pow(mod_inv(rhomod_, p_), -m.rho, p_), p_);
        acc = (acc + t) % p_;
      }
      Scalar out;
      out.mod = acc;
      return out;
    }
    case FieldKind::Cyclotomic: {
      std::vector<LaurentPoly::Term> terms;
      for (const auto& [m, c] : p.terms()) {
        BigInt coef = (rho_sign_ < 0 && (m.rho % 2 != 0)) ? BigInt(-c) : c;
        terms.emplace_back(Monomial{m.q + rho_exp_ * m.rho, 0}, std::move(coef));
      }
      return cyclo_reduce(LaurentPoly::from_terms(std::move(terms)), 1);
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Field::from_fraction(const LaurentPoly& num, const LaurentPoly& den) const {
  Scalar d = from_laurent(den);
  if (is_zero(d)) throw FieldError("division by zero in specialization");
  return div(from_laurent(num), d);
}

Scalar Field::specialize(const Scalar& g) const {
  return from_fraction(g.num, g.den.is_zero() ? LaurentPoly(1) : g.den);
}

// ---------------------------------------------------------------------------
// Arithmetic

bool Field::is_zero(const Scalar& a) const {
  return kind_ == FieldKind::Prime ? a.mod == 0 : a.num.is_zero();
}

bool Field::is_one(const Scalar& a) const {
  return kind_ == FieldKind::Prime ? a.mod == 1 : (a.den.is_zero() && a.num.is_one());
}

Scalar Field::neg(const Scalar& a) const {
  Scalar out = a;
  if (kind_ == FieldKind::Prime)
    out.mod = a.mod == 0 ? 0 : p_ - a.mod;
  else
    out.num = -a.num;
  return out;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Prime) {
    Scalar out;
    out.mod = a.mod + b.mod;
    if (out.mod >= p_) out.mod -= p_;
    return out;
  }
  if (a.num.is_zero()) return b;
  if (b.num.is_zero()) return a;
  if (a.den.is_zero() && b.den.is_zero()) {
    Scalar out;
    out.num = a.num + b.num;
    return out;
  }
  if (kind_ == FieldKind::Cyclotomic) {
    BigInt da = a.den.is_zero() ? BigInt(1) : a.den.constant_term();
    BigInt db = b.den.is_zero() ? BigInt(1) : b.den.constant_term();
    return cyclo_reduce(a.num.scaled(db) + b.num.scaled(da), da * db);
  }
  if (a.den == b.den) return normalize(a.num + b.num, a.den, false);
  const LaurentPoly one(1);
  const LaurentPoly& da = a.den.is_zero() ? one : a.den;
  const LaurentPoly& db = b.den.is_zero() ? one : b.den;
  if (a.den.is_zero() || b.den.is_zero()) {
    // p + n/d = (p d + n) / d stays reduced since gcd(n, d) = 1.
    return normalize(a.num * db + b.num * da, da * db, true);
  }
  return normalize(a.num * db + b.num * da, da * db, false);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::Prime) {
    Scalar out;
    out.mod = mod_mul(a.mod, b.mod, p_);
    return out;
  }
  if (a.num.is_zero() || b.num.is_zero()) return Scalar{};
  if (kind_ == FieldKind::Cyclotomic) {
    BigInt da = a.den.is_zero() ? BigInt(1) : a.den.constant_term();
    BigInt db = b.den.is_zero() ? BigInt(1) : b.den.constant_term();
    return cyclo_reduce(a.num * b.num, da * db);
  }
  if (a.den.is_zero() && b.den.is_zero()) {
    Scalar out;
    out.num = a.num * b.num;
    return out;
  }
  if (a.num.is_monomial() && b.num.is_monomial() && kind_ != FieldKind::Rational) {
    // Monomial numerators never share factors with canonical denominators,
    // except through integer content.
    const LaurentPoly one(1);
    return normalize(a.num * b.num, (a.den.is_zero() ? one : a.den) * (b.den.is_zero() ? one : b.den), true);
  }
  if (b.den.is_zero() && b.num.is_monomial()) {
    const auto& [m, c] = b.num.terms()[0];
    if (c == 1 || c == -1) {
      Scalar out = a;
      out.num = a.num * b.num;
      return out;
    }
  }
  if (a.den.is_zero() && a.num.is_monomial()) return mul(b, a);
  const LaurentPoly one(1);
  return normalize(a.num * b.num, (a.den.is_zero() ? one : a.den) * (b.den.is_zero() ? one : b.den), false);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw FieldError("division by zero");
  if (kind_ == FieldKind::Prime) {
    Scalar out;
    out.mod = mod_inv(a.mod, p_);
    return out;
  }
  if (kind_ == FieldKind::Cyclotomic) {
    // Extended Euclid in Q[x] against phi_m.
    using RPoly = std::vector<BigRational>;
    auto trim = [](RPoly& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto sub_mul = [&](RPoly& x, const RPoly& y, const BigRational& c, std::size_t shift) {
      if (x.size() < y.size() + shift) x.resize(y.size() + shift, 0);
      for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= c * y[i];
      trim(x);
    };
    RPoly r0(phi_.begin(), phi_.end());
    RPoly r1;
    for (const auto& [m, c] : a.num.terms()) {
      if (r1.size() <= static_cast<std::size_t>(m.q)) r1.resize(m.q + 1, 0);
      r1[m.q] = BigRational(c);
    }
    RPoly s0, s1{BigRational(1)};  // coefficients of a.num
    trim(r1);
    while (r1.size() > 1) {
      RPoly quo(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
      while (r0.size() >= r1.size() && !r0.empty()) {
        std::size_t k = r0.size() - r1.size();
        BigRational c = r0.back() / r1.back();
        quo[k] = c;
        sub_mul(r0, r1, c, k);
      }
      // s_new = s0 - quo * s1
      RPoly s2 = s0;
      for (std::size_t i = 0; i < quo.size(); ++i)
        if (quo[i] != 0) sub_mul(s2, s1, quo[i], i);
      std::swap(r0, r1);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r1.empty()) throw FieldError("element not invertible in cyclotomic field");
    // s1 * a == r1[0] mod phi
    BigRational scale = BigRational(1) / r1[0];
    BigInt den_a = a.den.is_zero() ? BigInt(1) : a.den.constant_term();
    BigInt lcm = 1;
    for (auto& c : s1) {
      c *= scale * BigRational(den_a);
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    }
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < s1.size(); ++i)
      if (s1[i] != 0)
        terms.emplace_back(Monomial{static_cast<int>(i), 0},
                           boost::multiprecision::numerator(s1[i]) * (lcm / boost::multiprecision::denominator(s1[i])));
    return cyclo_reduce(LaurentPoly::from_terms(std::move(terms)), lcm);
  }
  LaurentPoly den = a.num;
  LaurentPoly num = a.den.is_zero() ? LaurentPoly(1) : a.den;
  return normalize(std::move(num), std::move(den), true);
}

bool Field::q_squared_is_one() const {
  Scalar q2 = from_laurent(LaurentPoly::q_power(2));
  return is_one(q2);
}

// ---------------------------------------------------------------------------
// Text

std::string Field::format(const Scalar& a) const {
  if (kind_ == FieldKind::Prime) return std::to_string(a.mod);
  return fraction_text(a.num, a.den);
}

Scalar Field::parse_scalar(std::string_view text) const {
  auto [n, d] = parse_scalar_expression(text);
  return from_fraction(n, d);
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field()) throw FieldError("uninitialized field element");
  if (!a.field()->same_as(*b.field()))
    throw FieldError("mixed fields: " + a.field()->spec() + " vs " + b.field()->spec());
  return *a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  if (f.is_zero(b.value_)) throw FieldError("division by zero");
  return {a.field_, f.div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return common_field(a, b).equal(a.value_, b.value_);
}

FieldElement FieldElement::pow(long long n) const {
  FieldElement base = n < 0 ? inverse() : *this;
  if (n < 0) n = -n;
  FieldElement r = from_int(field_, 1);
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Parameters

Scalar q_power(const Field& f, int n) { return f.from_laurent(LaurentPoly::q_power(n)); }
Scalar rho_power(const Field& f, int n) { return f.from_laurent(LaurentPoly::rho_power(n)); }

void require_q_invertible(const Field& f) {
  if (f.q_squared_is_one()) throw FieldError("q-q^{-1} not invertible in " + f.spec());
}

Scalar delta(const Field& f) {
  require_q_invertible(f);
  Scalar num = f.sub(rho_power(f, 1), rho_power(f, -1));
  Scalar den = f.sub(q_power(f, 1), q_power(f, -1));
  return f.div(num, den);
}

FieldElement delta(const FieldPtr& f) { return {f, delta(*f)}; }

QuantumChar quantum_characteristic(const Field& f) {
  switch (f.kind()) {
    case FieldKind::Generic:
    case FieldKind::OneVariable:
      return {};
    case FieldKind::Rational:
    case FieldKind::Prime:
    case FieldKind::Cyclotomic: {
      // 1 + x + ... + x^{e-1} with x = q^2: vanishes first at the order of x
      // when x != 1, and at e = char when x = 1.
      Scalar x = q_power(f, 2);
      if (f.is_one(x)) {
        if (f.characteristic() > 0) return {static_cast<int>(f.characteristic())};
        return {};
      }
      long bound = f.kind() == FieldKind::Prime ? static_cast<long>(f.characteristic())
                   : f.kind() == FieldKind::Cyclotomic ? f.cyclotomic_order()
                                                       : 2;
      Scalar acc = f.one();
      Scalar power = f.one();
      for (long e = 2; e <= bound + 1; ++e) {
        power = f.mul(power, x);
        acc = f.add(acc, power);
        if (f.is_zero(acc)) return {static_cast<int>(e)};
      }
      return {};
    }
  }
  return {};
}

}  // namespace qwb
