#pragma once

#include "qwb/field.hpp"
#include "qwb/linalg.hpp"

#include <nlohmann/json_fwd.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qwb {

/// Raised when the enumeration or a structural invariant fails; this means
/// a bug or an inconsistent relation set, never bad user input.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EngineError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Generator numbering for B_{r,s}: 0 is e_1, 1..r-1 are g_1..g_{r-1},
/// r..r+s-2 are g*_1..g*_{s-1}.
struct Generators {
  int r = 1;
  int s = 1;

  int count() const { return r + s - 1; }
  int e() const { return 0; }
  int g(int i) const;
  int gs(int j) const;
  bool is_g(int gen) const { return gen >= 1 && gen < r; }
  bool is_gs(int gen) const { return gen >= r && gen < count(); }
  /// Hecke index of a g or g* generator.
  int index(int gen) const { return is_g(gen) ? gen : gen - r + 1; }
  std::string name(int gen) const;
};

/// A generator letter, possibly inverted (only g_i and g*_j invert).
struct Token {
  int gen = 0;
  bool inverse = false;
  friend bool operator==(const Token&, const Token&) = default;
};

using Word = std::vector<Token>;

/// Parses whitespace-separated letters such as "e1 g2 g1^-1 g*1"; the empty
/// string is the identity.
Word parse_word(const Generators& gens, std::string_view text);
std::string word_to_string(const Generators& gens, const Word& w);

struct EngineOptions {
  /// Largest r + s accepted; 0 selects the default for the field (5 for the
  /// two-variable field, 7 otherwise).
  int max_size = 0;
};

class AlgebraEngine;
using EnginePtr = std::shared_ptr<const AlgebraEngine>;

/// Element of B_{r,s} in the engine's word basis.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(EnginePtr engine, SparseVec coords) : engine_(std::move(engine)), v_(std::move(coords)) {}

  const EnginePtr& engine() const { return engine_; }
  const SparseVec& coords() const { return v_; }
  bool is_zero() const { return v_.empty(); }
  FieldElement coefficient(int basis_index) const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scaled(const Scalar& c) const;
  AlgebraElement scaled(const FieldElement& c) const { return scaled(c.value()); }
  /// Right multiplication by one letter.
  AlgebraElement times(const Token& t) const;
  AlgebraElement times(const Word& w) const;
  /// Left multiplication by one letter: t * this.
  AlgebraElement left_times(const Token& t) const;
  AlgebraElement left_times(const Word& w) const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  std::string to_string() const;

 private:
  void check_same(const AlgebraElement& o) const;
  EnginePtr engine_;
  SparseVec v_;
};

/// B_{r,s} over a field, realized on a basis of words found by enumerating
/// the right regular module from the defining relations.
class AlgebraEngine : public std::enable_shared_from_this<AlgebraEngine> {
 public:
  static EnginePtr build(int r, int s, const FieldPtr& field, EngineOptions opts = {});
  static EnginePtr from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int r() const { return gens_.r; }
  int s() const { return gens_.s; }
  const Generators& generators() const { return gens_; }
  const FieldPtr& field() const { return field_; }
  int dim() const { return static_cast<int>(words_.size()); }
  /// Letters (no inverses) of basis element i; basis 0 is the identity.
  const std::vector<int>& basis_word(int i) const { return words_[i]; }
  /// Rows: basis_i * gen (right) or gen * basis_i (left).
  const std::vector<SparseVec>& right_matrix(int gen) const { return right_[gen]; }
  const std::vector<SparseVec>& left_matrix(int gen) const { return left_[gen]; }
  /// Row i: sigma(basis_i).
  const std::vector<SparseVec>& sigma_matrix() const { return sigma_; }
  /// Number of vectors defined during enumeration (diagnostics).
  std::size_t vectors_defined() const { return defined_; }

  SparseVec apply_right(const SparseVec& v, const Token& t) const;
  SparseVec apply_left(const Token& t, const SparseVec& v) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  SparseVec sigma(const SparseVec& x) const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement scalar(const Scalar& c) const;
  AlgebraElement basis(int i) const;
  AlgebraElement word(const Word& w) const;
  AlgebraElement word(std::string_view text) const { return word(parse_word(gens_, text)); }
  AlgebraElement e1() const { return word(Word{{gens_.e(), false}}); }
  AlgebraElement g(int i, bool inverse = false) const { return word(Word{{gens_.g(i), inverse}}); }
  AlgebraElement gs(int j, bool inverse = false) const { return word(Word{{gens_.gs(j), inverse}}); }
  AlgebraElement sigma(const AlgebraElement& x) const;

  /// q - q^{-1}, rho and delta in this field.
  const Scalar& q_minus_qinv() const { return qq_; }
  const Scalar& rho() const { return rho_; }
  const Scalar& delta() const { return delta_; }

 private:
  AlgebraEngine() = default;
  void finish();  // left matrices and sigma from the right matrices

  FieldPtr field_;
  Generators gens_;
  std::vector<std::vector<int>> words_;
  // Prefix forest of the basis words: node parent (-1 for the identity),
  // appended letter, and basis index (-1 for pure prefixes).
  std::vector<int> node_parent_;
  std::vector<int> node_letter_;
  std::vector<int> node_basis_;
  std::vector<std::vector<SparseVec>> right_;
  std::vector<std::vector<SparseVec>> left_;
  std::vector<SparseVec> sigma_;
  std::size_t defined_ = 0;
  Scalar qq_, rho_, delta_;

  friend class Enumerator;
};

/// The fourteen defining relations as (name, lhs, rhs) pairs of signed words
/// with scalar factors, restricted to those that make sense for (r, s).
struct Relation {
  std::string name;
  std::vector<std::pair<Scalar, Word>> terms;  // sum of terms = 0
};
std::vector<Relation> defining_relations(const Generators& gens, const Field& field);

}  // namespace qwb
