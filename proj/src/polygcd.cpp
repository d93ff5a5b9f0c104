#include "polygcd.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qwb::detail {
namespace {

// Dense univariate polynomial over Z, coefficient i multiplies q^i.
using UPoly = std::vector<BigInt>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt content(const UPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

UPoly primitive(UPoly a) {
  trim(a);
  if (a.empty()) return a;
  BigInt c = content(a);
  if (a.back() < 0) c = -c;
  if (c != 1)
    for (auto& x : a) x /= c;
  return a;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// r <- lc(b) * r - lc(r) q^k b until deg r < deg b. Result is a nonzero
// integer multiple of the true remainder, enough for primitive remainder sequences.
UPoly prem(UPoly r, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!r.empty() && r.size() - 1 >= db) {
    BigInt lr = r.back();
    std::size_t k = r.size() - 1 - db;
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= lr * b[j];
    trim(r);
  }
  return r;
}

UPoly ugcd(UPoly a, UPoly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return UPoly{1};
    UPoly r = primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Exact division a / b over Z[q]; returns empty optional-like flag via ok.
UPoly udiv_exact(UPoly a, const UPoly& b, bool& ok) {
  ok = true;
  trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) {
    ok = false;
    return {};
  }
  UPoly quo(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t k = a.size() - 1 - db;
    BigInt rem;
    BigInt c;
    boost::multiprecision::divide_qr(a.back(), b.back(), c, rem);
    if (rem != 0) {
      ok = false;
      return {};
    }
    quo[k] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k + j] -= c * b[j];
    trim(a);
  }
  if (!a.empty()) ok = false;
  trim(quo);
  return quo;
}

// Bivariate: coefficient i (a polynomial in q) multiplies rho^i.
using BPoly = std::vector<UPoly>;

void btrim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

BPoly to_bpoly(const LaurentPoly& p) {
  BPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.q < 0 || m.rho < 0) throw std::logic_error("poly_gcd: negative exponent");
    if (out.size() <= static_cast<std::size_t>(m.rho)) out.resize(m.rho + 1);
    auto& u = out[m.rho];
    if (u.size() <= static_cast<std::size_t>(m.q)) u.resize(m.q + 1);
    u[m.q] = c;
  }
  return out;
}

LaurentPoly from_bpoly(const BPoly& a) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < a[j].size(); ++i)
      if (a[j][i] != 0)
        terms.emplace_back(Monomial{static_cast<int>(i), static_cast<int>(j)}, a[j][i]);
  return LaurentPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Heuristic gcd (evaluation at a large integer, then xi-adic reconstruction).
// Every candidate is confirmed by trial division; on failure we fall back to
// the primitive remainder sequences above.

BigInt unorm(const UPoly& f) {
  BigInt m = 0;
  for (const auto& c : f) m = std::max(m, BigInt(boost::multiprecision::abs(c)));
  return m;
}

BigInt bnorm(const BPoly& f) {
  BigInt m = 0;
  for (const auto& u : f) m = std::max(m, unorm(u));
  return m;
}

BigInt ueval(const UPoly& f, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly beval(const BPoly& f, const BigInt& x) {
  UPoly acc;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    for (auto& c : acc) c *= x;
    if (acc.size() < it->size()) acc.resize(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) acc[i] += (*it)[i];
  }
  trim(acc);
  return acc;
}

// Symmetric base-x digits of h, lowest first.
std::vector<BigInt> digits(BigInt h, const BigInt& x) {
  std::vector<BigInt> out;
  const BigInt half = x / 2;
  while (h != 0) {
    BigInt d = h % x;
    if (d < 0) d += x;
    if (d > half) d -= x;
    out.push_back(d);
    h = (h - d) / x;
  }
  return out;
}

BigInt next_point(const BigInt& x) {
  BigInt r = boost::multiprecision::sqrt(boost::multiprecision::sqrt(x));
  return 73794 * x * r / 27011 + 1;
}

// A point this large makes "candidate divides both inputs" a proof that the
// candidate is the gcd (the standard GCDHEU bound).
BigInt start_point(const BigInt& nf, const BigInt& ng) { return 2 * std::min(nf, ng) + 2; }

bool udivides(const UPoly& f, const UPoly& g) {
  bool ok = false;
  udiv_exact(f, g, ok);
  return ok;
}

bool bdivides(BPoly r, const BPoly& g) {
  btrim(r);
  const std::size_t dg = g.size() - 1;
  while (!r.empty()) {
    if (r.size() - 1 < dg) return false;
    bool ok = false;
    UPoly c = udiv_exact(r.back(), g.back(), ok);
    if (!ok) return false;
    std::size_t k = r.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) {
      UPoly t = mul(c, g[j]);
      UPoly& x = r[k + j];
      if (x.size() < t.size()) x.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) x[i] -= t[i];
      trim(x);
    }
    if (!r.back().empty()) return false;
    btrim(r);
  }
  return true;
}

// f, g primitive with positive degree.
std::optional<UPoly> ugcd_heu(const UPoly& f, const UPoly& g) {
  BigInt x = start_point(unorm(f), unorm(g));
  for (int attempt = 0; attempt < 6; ++attempt) {
    BigInt h = boost::multiprecision::gcd(ueval(f, x), ueval(g, x));
    UPoly cand = primitive(digits(h, x));
    if (!cand.empty() && udivides(f, cand) && udivides(g, cand)) return cand;
    x = next_point(x);
  }
  return std::nullopt;
}

UPoly ugcd_fast(const UPoly& f, const UPoly& g) {
  UPoly pf = primitive(f), pg = primitive(g);
  if (pf.empty()) return pg;
  if (pg.empty()) return pf;
  if (pf.size() == 1 || pg.size() == 1) return UPoly{1};
  if (auto h = ugcd_heu(pf, pg)) return *h;
  return ugcd(pf, pg);
}

// f, g integer-primitive with positive rho-degree.
std::optional<BPoly> bgcd_heu(const BPoly& f, const BPoly& g) {
  BigInt x = start_point(bnorm(f), bnorm(g));
  for (int attempt = 0; attempt < 6; ++attempt) {
    UPoly a = beval(f, x), b = beval(g, x);
    if (!a.empty() && !b.empty()) {
      BigInt c = boost::multiprecision::gcd(content(a), content(b));
      UPoly h = ugcd_fast(a, b);
      BPoly cand;
      for (std::size_t k = 0; k < h.size(); ++k) {
        auto ds = digits(h[k] * c, x);
        if (cand.size() < ds.size()) cand.resize(ds.size());
        for (std::size_t i = 0; i < ds.size(); ++i) {
          if (cand[i].size() <= k) cand[i].resize(k + 1);
          cand[i][k] = ds[i];
        }
      }
      for (auto& u : cand) trim(u);
      btrim(cand);
      if (!cand.empty()) {
        BigInt ic = 0;
        for (const auto& u : cand) ic = boost::multiprecision::gcd(ic, content(u));
        if (cand.back().back() < 0) ic = -ic;
        for (auto& u : cand)
          for (auto& v : u) v /= ic;
        if (bdivides(f, cand) && bdivides(g, cand)) return cand;
      }
    }
    x = next_point(x);
  }
  return std::nullopt;
}

BPoly int_primitive(BPoly a) {
  BigInt ic = 0;
  for (const auto& u : a) ic = boost::multiprecision::gcd(ic, content(u));
  if (ic > 1)
    for (auto& u : a)
      for (auto& v : u) v /= ic;
  return a;
}

UPoly bcontent(const BPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? primitive(c) : ugcd_fast(g, c);
    if (g.size() == 1) return UPoly{1};
  }
  return g;
}

BPoly bprimitive(BPoly a) {
  btrim(a);
  if (a.empty()) return a;
  UPoly c = bcontent(a);
  if (c.size() > 1) {
    for (auto& x : a) {
      if (x.empty()) continue;
      bool ok = false;
      x = udiv_exact(x, c, ok);
      if (!ok) throw std::logic_error("poly_gcd: content division failed");
    }
  }
  // Remove integer content and fix the sign of the leading coefficient.
  BigInt ic = 0;
  for (const auto& x : a) ic = boost::multiprecision::gcd(ic, content(x));
  if (a.back().back() < 0) ic = -ic;
  if (ic != 1)
    for (auto& x : a)
      for (auto& y : x) y /= ic;
  return a;
}

BPoly bprem(BPoly r, const BPoly& b) {
  const std::size_t db = b.size() - 1;
  const UPoly& lb = b.back();
  while (!r.empty() && r.size() - 1 >= db) {
    UPoly lr = r.back();
    std::size_t k = r.size() - 1 - db;
    for (auto& x : r) x = mul(x, lb);
    for (std::size_t j = 0; j <= db; ++j) {
      UPoly t = mul(lr, b[j]);
      UPoly& x = r[k + j];
      if (x.size() < t.size()) x.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) x[i] -= t[i];
      trim(x);
    }
    btrim(r);
  }
  return r;
}

BPoly bgcd(BPoly a, BPoly b) {
  UPoly ca = bcontent(a);
  UPoly cb = bcontent(b);
  UPoly c = ugcd(ca, cb);
  a = bprimitive(std::move(a));
  b = bprimitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty() && b.size() > 1) {
    BPoly r = bprem(a, b);
    a = std::move(b);
    b = r.empty() ? r : bprimitive(std::move(r));
  }
  if (!b.empty()) a = BPoly{UPoly{1}};  // rho-degree zero remainder: primitive gcd is 1
  for (auto& x : a) x = mul(x, c);
  btrim(a);
  if (a.back().back() < 0)
    for (auto& x : a)
      for (auto& y : x) y = -y;
  return a;
}


UPoly to_upoly(const LaurentPoly& p) {
  UPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.q < 0) throw std::logic_error("poly_gcd: negative exponent");
    if (out.size() <= static_cast<std::size_t>(m.q)) out.resize(m.q + 1);
    out[m.q] = c;
  }
  return out;
}

LaurentPoly from_upoly(const UPoly& a) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) terms.emplace_back(Monomial{static_cast<int>(i), 0}, a[i]);
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& nz = a.is_zero() ? b : a;
    BigInt c = nz.content();
    if (nz.leading().second < 0) c = -c;
    return nz.divided_exact(c);
  }
  if (a.is_monomial() || b.is_monomial()) {
    Monomial ma = a.min_exponents();
    Monomial mb = b.min_exponents();
    return LaurentPoly(Monomial{std::min(ma.q, mb.q), std::min(ma.rho, mb.rho)}, 1);
  }
  const bool ra = a.has_rho();
  const bool rb = b.has_rho();
  if (!ra && !rb) return from_upoly(ugcd_fast(to_upoly(a), to_upoly(b)));
  if (!ra || !rb) {
    const LaurentPoly& uni = ra ? b : a;
    const LaurentPoly& bi = ra ? a : b;
    UPoly c = bcontent(to_bpoly(bi));
    return from_upoly(ugcd_fast(c, to_upoly(uni)));
  }
  BPoly fa = int_primitive(to_bpoly(a)), fb = int_primitive(to_bpoly(b));
  if (auto h = bgcd_heu(fa, fb)) return from_bpoly(*h);
  return from_bpoly(bgcd(std::move(fa), std::move(fb)));
}

LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::logic_error("poly_exact_div: division by zero");
  if (b.is_monomial()) {
    const auto& [mb, cb] = b.terms()[0];
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(a.size());
    for (const auto& [m, c] : a.terms()) {
      BigInt qv, rv;
      boost::multiprecision::divide_qr(c, cb, qv, rv);
      if (rv != 0) throw std::logic_error("poly_exact_div: inexact");
      terms.emplace_back(m * mb.inverse(), qv);
    }
    return LaurentPoly::from_terms(std::move(terms));
  }
  LaurentPoly rem = a;
  std::vector<LaurentPoly::Term> quo;
  const auto& [mb, cb] = b.leading();
  while (!rem.is_zero()) {
    const auto& [mr, cr] = rem.leading();
    BigInt qv, rv;
    boost::multiprecision::divide_qr(cr, cb, qv, rv);
    if (rv != 0) throw std::logic_error("poly_exact_div: inexact");
    if (mr.q < mb.q && mr.rho == mb.rho) throw std::logic_error("poly_exact_div: inexact");
    Monomial m = mr * mb.inverse();
    LaurentPoly step(m, qv);
    quo.emplace_back(m, qv);
    rem -= step * b;
    if (quo.size() > 100000) throw std::logic_error("poly_exact_div: runaway");
  }
  return LaurentPoly::from_terms(std::move(quo));
}

}  // namespace qwb::detail
