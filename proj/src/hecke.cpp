#include "qwb/hecke.hpp"

#include <stdexcept>

namespace qwb {

namespace {

Scalar qq(const Field& F) { return F.sub(F.q(), q_power(F, -1)); }

void require_same(const HeckeElement& a, const HeckeElement& b) {
  if (a.degree() != b.degree() || !a.field()->same_as(*b.field()))
    throw std::invalid_argument("Hecke elements over different algebras");
}

}  // namespace

HeckeElement HeckeElement::one(const FieldPtr& field, int n) { return basis(field, Permutation::identity(n)); }

HeckeElement HeckeElement::basis(const FieldPtr& field, const Permutation& w) {
  HeckeElement h(field, w.degree());
  h.terms_.emplace(w, field->one());
  return h;
}

HeckeElement HeckeElement::word(const FieldPtr& field, int n, const std::vector<int>& letters) {
  HeckeElement h = one(field, n);
  const Field& F = *field;
  for (int a : letters) {
    if (a == 0 || std::abs(a) >= n) throw std::out_of_range("Hecke generator index out of range");
    HeckeElement next = h.times_generator(std::abs(a));
    if (a < 0) next = next - h.scaled(qq(F));  // g^{-1} = g - (q - q^{-1})
    h = std::move(next);
  }
  return h;
}

FieldElement HeckeElement::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return {field_, it == terms_.end() ? field_->zero() : it->second};
}

SparseVec HeckeElement::coords() const {
  SparseVec v;
  for (const auto& [w, c] : terms_) v.emplace_back(static_cast<int>(w.rank()), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

void HeckeElement::add_term(const Permutation& w, const Scalar& c) {
  const Field& F = *field_;
  if (F.is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second = F.add(it->second, c);
    if (F.is_zero(it->second)) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  require_same(*this, o);
  HeckeElement out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  require_same(*this, o);
  HeckeElement out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, field_->neg(c));
  return out;
}

HeckeElement HeckeElement::scaled(const Scalar& c) const {
  HeckeElement out(field_, n_);
  if (field_->is_zero(c)) return out;
  for (const auto& [w, x] : terms_) out.terms_.emplace(w, field_->mul(x, c));
  return out;
}

// g_w g_i = g_{w s_i} when the length goes up, else g_{w s_i} + (q - q^{-1}) g_w.
HeckeElement HeckeElement::times_generator(int i) const {
  const Field& F = *field_;
  const Scalar z = qq(F);
  HeckeElement out(field_, n_);
  for (const auto& [w, c] : terms_) {
    out.add_term(w.times_simple_right(i), c);
    if (w.right_descent(i)) out.add_term(w, F.mul(c, z));
  }
  return out;
}

HeckeElement HeckeElement::generator_times(int i) const {
  const Field& F = *field_;
  const Scalar z = qq(F);
  HeckeElement out(field_, n_);
  for (const auto& [w, c] : terms_) {
    out.add_term(w.times_simple_left(i), c);
    if (w.left_descent(i)) out.add_term(w, F.mul(c, z));
  }
  return out;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
  require_same(*this, o);
  HeckeElement out(field_, n_);
  for (const auto& [w, c] : o.terms_) {
    HeckeElement part = *this;
    for (int i : w.reduced_word()) part = part.times_generator(i);
    for (const auto& [u, x] : part.terms_) out.add_term(u, field_->mul(x, c));
  }
  return out;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + field_->format(c) + ")*g" + w.to_string();
  }
  return out;
}

std::vector<Permutation> young_subgroup(const Partition& lambda) {
  // Generated by s_i with i, i+1 in the same row of t^lambda; enumerate by closure.
  const int n = lambda.size();
  std::vector<int> gens;
  int start = 1;
  for (int p : lambda.parts()) {
    for (int i = start; i < start + p - 1; ++i) gens.push_back(i);
    start += p;
  }
  std::vector<Permutation> out{Permutation::identity(n)};
  std::map<Permutation, bool> seen{{out[0], true}};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i : gens) {
      Permutation w = out[k].times_simple_right(i);
      if (seen.emplace(w, true).second) out.push_back(w);
    }
  std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  return out;
}

std::pair<HeckeElement, HeckeElement> symmetrizers(const Partition& lambda, const FieldPtr& field) {
  const Field& F = *field;
  const int n = lambda.size();
  HeckeElement m(field, n), nn(field, n);
  const Scalar mq = F.neg(F.q());
  for (const auto& w : young_subgroup(lambda)) {
    const int l = w.length();
    m = m + HeckeElement::basis(field, w).scaled(q_power(F, l));
    Scalar sign = F.one();
    for (int k = 0; k < l; ++k) sign = F.div(sign, mq);
    nn = nn + HeckeElement::basis(field, w).scaled(sign);
  }
  return {m, nn};
}

std::vector<int> reduced_letters(const Permutation& w) { return w.reduced_word(); }

std::vector<MurphyElement> murphy_basis(int n, const FieldPtr& field) {
  std::vector<MurphyElement> out;
  for (const auto& lam : partitions(n)) {
    HeckeElement nl = symmetrizers(lam, field).second;
    auto tabs = std_tableaux(lam);
    for (const auto& s : tabs) {
      // g_{d(s)^{-1}} is the reversed reduced word of d(s).
      std::vector<int> ws = d_perm(s).reduced_word();
      std::vector<int> left(ws.rbegin(), ws.rend());
      HeckeElement ls = HeckeElement::word(field, n, left) * nl;
      for (const auto& t : tabs)
        out.push_back({lam, s, t, ls * HeckeElement::word(field, n, d_perm(t).reduced_word())});
    }
  }
  return out;
}

Matrix murphy_transition(const std::vector<MurphyElement>& basis, const FieldPtr& field, int n) {
  const int N = static_cast<int>(factorial(n));
  Matrix m(field, static_cast<int>(basis.size()), N);
  for (std::size_t i = 0; i < basis.size(); ++i) m.set_row(static_cast<int>(i), basis[i].value.coords());
  return m;
}

std::vector<HeckeElement> specht_basis(const Partition& lambda, const FieldPtr& field) {
  const int n = lambda.size();
  const Partition conj = lambda.conjugate();
  HeckeElement ml = symmetrizers(lambda, field).first;
  HeckeElement nc = symmetrizers(conj, field).second;
  HeckeElement head =
      ml * HeckeElement::word(field, n, d_perm(Tableau::column_reading(lambda)).reduced_word()) * nc;
  std::vector<HeckeElement> out;
  for (const auto& t : std_tableaux(conj)) out.push_back(head * HeckeElement::word(field, n, d_perm(t).reduced_word()));
  return out;
}

Matrix hecke_gram(const Partition& lambda, const FieldPtr& field) {
  const int n = lambda.size();
  auto basis = murphy_basis(n, field);
  EchelonBasis ech(field, static_cast<int>(factorial(n)));
  int target = -1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!ech.insert(basis[i].value.coords())) throw std::logic_error("Murphy basis is linearly dependent");
    if (basis[i].shape == lambda && target < 0) target = static_cast<int>(i);
  }
  HeckeElement nl = symmetrizers(lambda, field).second;
  auto tabs = std_tableaux(lambda);
  const int d = static_cast<int>(tabs.size());
  Matrix g(field, d, d);
  for (int a = 0; a < d; ++a) {
    HeckeElement left = nl * HeckeElement::word(field, n, d_perm(tabs[a]).reduced_word());
    for (int b = 0; b < d; ++b) {
      std::vector<int> wb = d_perm(tabs[b]).reduced_word();
      HeckeElement right = HeckeElement::word(field, n, std::vector<int>(wb.rbegin(), wb.rend())) * nl;
      SparseVec coeffs;
      SparseVec rem = ech.reduce((left * right).coords(), &coeffs);
      if (!rem.empty()) throw std::logic_error("product left the Hecke algebra span");
      g.at(a, b) = sparse_get(*field, coeffs, target);
    }
  }
  return g;
}

Matrix hecke_gram(const Bipartition& lambda, const FieldPtr& field) {
  return hecke_gram(lambda.first, field).kron(hecke_gram(lambda.second, field));
}

}  // namespace qwb
