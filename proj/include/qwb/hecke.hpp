#pragma once

#include "qwb/combinat.hpp"
#include "qwb/field.hpp"
#include "qwb/linalg.hpp"
#include "qwb/permutation.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qwb {

/// Element of the Hecke algebra H_n on the basis {g_w : w in S_n}.
class HeckeElement {
 public:
  HeckeElement() = default;
  HeckeElement(FieldPtr field, int n) : field_(std::move(field)), n_(n) {}

  static HeckeElement one(const FieldPtr& field, int n);
  static HeckeElement basis(const FieldPtr& field, const Permutation& w);
  /// Product of g_{i_1}^{+-1} g_{i_2}^{+-1} ...; a negative index means the inverse.
  static HeckeElement word(const FieldPtr& field, int n, const std::vector<int>& letters);

  const FieldPtr& field() const { return field_; }
  int degree() const { return n_; }
  const std::map<Permutation, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coefficient(const Permutation& w) const;
  /// Coordinates indexed by Permutation::rank().
  SparseVec coords() const;

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator*(const HeckeElement& o) const;
  HeckeElement scaled(const Scalar& c) const;
  /// this * g_i and g_i * this.
  HeckeElement times_generator(int i) const;
  HeckeElement generator_times(int i) const;
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }
  std::string to_string() const;

 private:
  void add_term(const Permutation& w, const Scalar& c);
  FieldPtr field_;
  int n_ = 0;
  std::map<Permutation, Scalar> terms_;
};

/// All w in the row stabilizer of t^lambda.
std::vector<Permutation> young_subgroup(const Partition& lambda);

/// (m_lambda, n_lambda): sums of q^{l(w)} g_w and (-q)^{-l(w)} g_w over the
/// Young subgroup.
std::pair<HeckeElement, HeckeElement> symmetrizers(const Partition& lambda, const FieldPtr& field);

/// g_w written as coefficients over words: the reduced word of w.
std::vector<int> reduced_letters(const Permutation& w);

struct MurphyElement {
  Partition shape;
  Tableau s;
  Tableau t;
  HeckeElement value;  // g_{d(s)^{-1}} n_lambda g_{d(t)}
};

/// All n_{st}, shapes in lexicographically decreasing order (a linear
/// extension of dominance), then s, then t in std_tableaux order.
std::vector<MurphyElement> murphy_basis(int n, const FieldPtr& field);

/// Rows are the g_w coordinates (by rank) of the Murphy basis elements.
Matrix murphy_transition(const std::vector<MurphyElement>& basis, const FieldPtr& field, int n);

/// m_lambda g_{d(t_lambda)} n_{lambda'} g_{d(t)} for t in Std(lambda').
std::vector<HeckeElement> specht_basis(const Partition& lambda, const FieldPtr& field);

/// Gram matrix of the cell module of the Murphy basis with basis n_{t^lambda t}:
/// entry (s, t) is the coefficient of n_lambda in n_{t^lambda s} n_{t t^lambda}.
Matrix hecke_gram(const Partition& lambda, const FieldPtr& field);

/// Gram matrix for H_{n1} x H_{n2} and a bipartition: Kronecker product.
Matrix hecke_gram(const Bipartition& lambda, const FieldPtr& field);

}  // namespace qwb
