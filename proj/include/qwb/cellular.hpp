#pragma once

#include "qwb/combinat.hpp"
#include "qwb/engine.hpp"
#include "qwb/hecke.hpp"
#include "qwb/relations.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace qwb {

/// (s, d) in I(f, lambda) = Std(lambda) x D^f_{r,s}.
struct CellIndex {
  BiTableau t;
  CosetRep d;
  std::string to_string() const;
};

/// One cell: its label, the index set I(f, lambda) (tableau slowest; the
/// first entry is (t^lambda, identity)) and the position of C_{(0)(0)} in the
/// global ordering. Element (a, b) sits at offset + a * size() + b.
struct CellBlock {
  CellLabel label;
  std::vector<CellIndex> index;
  int offset = 0;

  int size() const { return static_cast<int>(index.size()); }
  int global(int a, int b) const { return offset + a * size() + b; }
};

/// Embeds sum c_w g_w of H_n as sum c_w g_{shift+i_1} ... in B_{r,s} (g or g*).
AlgebraElement embed_hecke(const AlgebraEngine& eng, const HeckeElement& h, int shift, bool starred);

/// The cellular basis C_{(s,e)(t,d)} = sigma(g_e) e^f n_{st} g_d over all
/// labels in linear-extension order, with exact cellular coordinates.
class CellularBasis {
 public:
  static std::shared_ptr<const CellularBasis> build(const EnginePtr& eng);

  const EnginePtr& engine() const { return eng_; }
  const std::vector<CellBlock>& blocks() const { return blocks_; }
  int dim() const { return static_cast<int>(elements_.size()); }
  /// Block number of a label, or -1.
  int block_of(const CellLabel& label) const;
  /// Block number containing a global index.
  int block_at(int global) const { return block_at_[global]; }
  const SparseVec& element(int global) const { return elements_[global]; }
  AlgebraElement element(int block, int a, int b) const;
  /// Coordinates of x in the cellular basis (indexed globally).
  SparseVec coordinates(const SparseVec& x) const;
  /// Rows: cellular basis elements in the engine's word basis.
  Matrix transition() const;
  /// sigma(R) e^f n_lambda R', R = g_{d(s)} g_e: the word g_{d(s)} g_e for an index.
  Word index_word(const CellLabel& label, const CellIndex& idx) const;

 private:
  EnginePtr eng_;
  std::vector<CellBlock> blocks_;
  std::vector<int> block_at_;
  std::vector<SparseVec> elements_;
  std::unique_ptr<EchelonBasis> ech_;
};
using CellularPtr = std::shared_ptr<const CellularBasis>;

/// e^f n_lambda for the bipartition lambda (components on g_{f+1}.. and g*_{f+1}..).
AlgebraElement cell_generator(const AlgebraEngine& eng, const CellLabel& label);

/// Cell-datum axioms: (a) basis, (b) sigma swaps the two indices,
/// (c) right multiplication by each generator is triangular modulo strictly
/// higher labels with coefficients independent of the left index.
CheckReport validate_cell_datum(const CellularBasis& cb);

/// Right cell module C(f, lambda): basis C_{(t^lambda,1)(t,d)} modulo strictly
/// higher labels.
class CellModule {
 public:
  CellModule(CellularPtr cb, const CellLabel& label);

  const CellLabel& label() const { return label_; }
  const CellBlock& block() const { return cb_->blocks()[block_]; }
  const CellularPtr& basis() const { return cb_; }
  int dim() const { return block().size(); }
  /// Matrix of right multiplication: row k is (basis_k * a) in module coordinates.
  Matrix action(const AlgebraElement& a) const;
  /// Right action of one generator (cached).
  const Matrix& generator_action(int gen) const;
  /// Module coordinates of the image of C_{(u)(k)} * a for left index u.
  SparseVec act_on_row(int u, int k, const AlgebraElement& a) const;
  /// Module coordinates of an element lying in the span of row 0 plus
  /// strictly higher cells; throws IntegrityError otherwise.
  SparseVec vector_of(const AlgebraElement& x) const;
  /// v * a for a module vector v.
  SparseVec act(const SparseVec& v, const AlgebraElement& a) const;
  /// Gram matrix of the invariant form, read from C_{(u)(x)} C_{(y)(u)} on
  /// C_{(u)(u)}; u = 0 is (t^lambda, identity).
  Matrix gram(int u = 0) const;

 private:
  CellularPtr cb_;
  CellLabel label_;
  int block_ = -1;
  mutable std::vector<std::optional<Matrix>> gens_;
};

struct RadicalRank {
  int rank = 0;
  int radical_dim = 0;
};
RadicalRank radical_rank(const Matrix& gram);

}  // namespace qwb
