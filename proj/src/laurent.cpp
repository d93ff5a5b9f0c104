#include "qwb/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace qwb {

LaurentPoly::LaurentPoly(BigInt c) {
  if (c != 0) terms_.emplace_back(Monomial{}, std::move(c));
}

LaurentPoly::LaurentPoly(Monomial m, BigInt c) {
  if (c != 0) terms_.emplace_back(m, std::move(c));
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else if (t.second != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

BigInt LaurentPoly::constant_term() const {
  for (const auto& [m, c] : terms_)
    if (m.is_one()) return c;
  return 0;
}

Monomial LaurentPoly::min_exponents() const {
  Monomial m{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  for (const auto& t : terms_) {
    m.q = std::min(m.q, t.first.q);
    m.rho = std::min(m.rho, t.first.rho);
  }
  return m;
}

Monomial LaurentPoly::max_exponents() const {
  Monomial m{std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
  for (const auto& t : terms_) {
    m.q = std::max(m.q, t.first.q);
    m.rho = std::max(m.rho, t.first.rho);
  }
  return m;
}

bool LaurentPoly::has_rho() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.rho != 0; });
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) {
    g = boost::multiprecision::gcd(g, t.second);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

namespace {

template <bool Subtract>
void merge_into(std::vector<LaurentPoly::Term>& acc, const std::vector<LaurentPoly::Term>& rhs) {
  if (rhs.empty()) return;
  std::vector<LaurentPoly::Term> out;
  out.reserve(acc.size() + rhs.size());
  auto i = acc.begin();
  auto j = rhs.begin();
  while (i != acc.end() || j != rhs.end()) {
    if (j == rhs.end() || (i != acc.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == acc.end() || j->first < i->first) {
      out.emplace_back(j->first, Subtract ? BigInt(-j->second) : j->second);
      ++j;
    } else {
      if constexpr (Subtract)
        i->second -= j->second;
      else
        i->second += j->second;
      if (i->second != 0) out.push_back(std::move(*i));
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  merge_into<false>(terms_, o.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  merge_into<true>(terms_, o.terms_);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly out = a;
    const auto& [m, c] = b.terms_[0];
    for (auto& t : out.terms_) {
      t.first = t.first * m;
      t.second *= c;
    }
    return out;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.emplace_back(x.first * y.first, x.second * y.second);
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
  if (c == 0) return {};
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

LaurentPoly LaurentPoly::divided_exact(const BigInt& c) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second /= c;
  return out;
}

LaurentPoly LaurentPoly::shifted(Monomial m) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.first = t.first * m;
  return out;
}

LaurentPoly LaurentPoly::substitute_monomials(Monomial q_image, Monomial rho_image) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial img{m.q * q_image.q + m.rho * rho_image.q, m.q * q_image.rho + m.rho * rho_image.rho};
    terms.emplace_back(img, c);
  }
  return from_terms(std::move(terms));
}

namespace {

void append_monomial(std::string& out, Monomial m) {
  bool need_star = false;
  if (m.q != 0) {
    out += "q";
    if (m.q != 1) out += "^" + std::to_string(m.q);
    need_star = true;
  }
  if (m.rho != 0) {
    if (need_star) out += "*";
    out += "rho";
    if (m.rho != 1) out += "^" + std::to_string(m.rho);
  }
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    BigInt a = boost::multiprecision::abs(c);
    if (m.is_one()) {
      out += a.str();
    } else {
      if (a != 1) out += a.str() + "*";
      append_monomial(out, m);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

using Frac = std::pair<LaurentPoly, LaurentPoly>;

Frac frac_add(const Frac& a, const Frac& b, bool subtract) {
  if (a.second == b.second) {
    LaurentPoly n = subtract ? a.first - b.first : a.first + b.first;
    return {std::move(n), a.second};
  }
  LaurentPoly l = a.first * b.second;
  LaurentPoly r = b.first * a.second;
  return {subtract ? l - r : l + r, a.second * b.second};
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Frac parse() {
    Frac v = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scalar parse error at position " + std::to_string(pos_) +
                                ": " + what + " in \"" + std::string(s_) + "\"");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Frac sum() {
    Frac acc;
    bool have = false;
    for (;;) {
      bool neg = false;
      if (eat('-'))
        neg = true;
      else if (have && !eat('+'))
        break;
      else if (!have)
        eat('+');
      Frac t = product();
      if (!have) {
        acc = neg ? Frac{-t.first, t.second} : t;
        have = true;
      } else {
        acc = frac_add(acc, t, neg);
      }
      char c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  Frac product() {
    Frac acc = power();
    for (;;) {
      if (eat('*')) {
        Frac b = power();
        acc = {acc.first * b.first, acc.second * b.second};
      } else if (eat('/')) {
        Frac b = power();
        if (b.first.is_zero()) fail("division by zero");
        acc = {acc.first * b.second, acc.second * b.first};
      } else {
        return acc;
      }
    }
  }

  long integer(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Frac power() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Frac v = sum();
      if (!eat(')')) fail("expected ')'");
      if (eat('^')) {
        long n = integer(true);
        Frac base = v;
        if (n < 0) {
          if (base.first.is_zero()) fail("zero to negative power");
          std::swap(base.first, base.second);
          n = -n;
        }
        Frac out{LaurentPoly(1), LaurentPoly(1)};
        for (long i = 0; i < n; ++i) out = {out.first * base.first, out.second * base.second};
        return out;
      }
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {LaurentPoly(BigInt(std::string(s_.substr(start, pos_ - start)))), LaurentPoly(1)};
    }
    if (s_.substr(pos_, 3) == "rho") {
      pos_ += 3;
      int n = eat('^') ? static_cast<int>(integer(true)) : 1;
      return {LaurentPoly::rho_power(n), LaurentPoly(1)};
    }
    if (c == 'q') {
      ++pos_;
      int n = eat('^') ? static_cast<int>(integer(true)) : 1;
      return {LaurentPoly::q_power(n), LaurentPoly(1)};
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::pair<LaurentPoly, LaurentPoly> parse_scalar_expression(std::string_view text) {
  return ExprParser(text).parse();
}

}  // namespace qwb
