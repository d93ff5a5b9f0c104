#include "qwb/cellular.hpp"

#include "qwb/special.hpp"

namespace qwb {

std::string CellIndex::to_string() const {
  return "(" + t.first.to_string() + " | " + t.second.to_string() + "; " + d.to_string() + ")";
}

AlgebraElement embed_hecke(const AlgebraEngine& eng, const HeckeElement& h, int shift, bool starred) {
  const auto& G = eng.generators();
  const Field& F = *eng.field();
  SparseAccumulator acc(F, eng.dim());
  for (const auto& [w, c] : h.terms()) {
    Word word;
    for (int i : w.reduced_word()) word.push_back({starred ? G.gs(shift + i) : G.g(shift + i), false});
    acc.add_scaled(eng.word(word).coords(), c);
  }
  return {eng.shared_from_this(), acc.take()};
}

AlgebraElement cell_generator(const AlgebraEngine& eng, const CellLabel& label) {
  AlgebraElement x = e_power(eng, label.f);
  if (label.lambda.first.size() > 0)
    x = x * embed_hecke(eng, symmetrizers(label.lambda.first, eng.field()).second, label.f, false);
  if (label.lambda.second.size() > 0)
    x = x * embed_hecke(eng, symmetrizers(label.lambda.second, eng.field()).second, label.f, true);
  return x;
}

Word CellularBasis::index_word(const CellLabel& label, const CellIndex& idx) const {
  const auto& G = eng_->generators();
  Word w;
  for (int i : d_perm(idx.t.first).reduced_word()) w.push_back({G.g(label.f + i), false});
  for (int i : d_perm(idx.t.second).reduced_word()) w.push_back({G.gs(label.f + i), false});
  Word gd = coset_word(G, idx.d);
  w.insert(w.end(), gd.begin(), gd.end());
  return w;
}

std::shared_ptr<const CellularBasis> CellularBasis::build(const EnginePtr& eng) {
  auto cb = std::shared_ptr<CellularBasis>(new CellularBasis());
  cb->eng_ = eng;
  const int r = eng->r(), s = eng->s();
  for (const auto& label : cell_labels(r, s)) {
    CellBlock blk{label, {}, static_cast<int>(cb->elements_.size())};
    auto reps = coset_reps(r, s, label.f);
    for (const auto& t : std_tableaux(label.lambda, label.f))
      for (const auto& d : reps) blk.index.push_back({t, d});
    const int n = blk.size();
    const AlgebraElement m = cell_generator(*eng, label);
    std::vector<Word> words;
    for (const auto& idx : blk.index) words.push_back(cb->index_word(label, idx));
    std::vector<AlgebraElement> right;
    for (const auto& w : words) right.push_back(m.times(w));
    for (int a = 0; a < n; ++a) {
      Word rev(words[a].rbegin(), words[a].rend());
      for (int b = 0; b < n; ++b) {
        cb->elements_.push_back(right[b].left_times(rev).coords());
        cb->block_at_.push_back(static_cast<int>(cb->blocks_.size()));
      }
    }
    cb->blocks_.push_back(std::move(blk));
  }
  if (cb->dim() != eng->dim())
    throw IntegrityError("cellular basis has " + std::to_string(cb->dim()) + " elements, expected " +
                         std::to_string(eng->dim()));
  cb->ech_ = std::make_unique<EchelonBasis>(eng->field(), eng->dim());
  for (int k = 0; k < cb->dim(); ++k)
    if (!cb->ech_->insert(cb->elements_[k]))
      throw IntegrityError("cellular basis is linearly dependent at element " + std::to_string(k));
  return cb;
}

int CellularBasis::block_of(const CellLabel& label) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b].label == label) return static_cast<int>(b);
  return -1;
}

AlgebraElement CellularBasis::element(int block, int a, int b) const {
  return {eng_, elements_[blocks_[block].global(a, b)]};
}

SparseVec CellularBasis::coordinates(const SparseVec& x) const {
  SparseVec coeffs;
  if (!ech_->reduce(x, &coeffs).empty()) throw IntegrityError("element outside the span of the cellular basis");
  return coeffs;
}

Matrix CellularBasis::transition() const {
  Matrix m(eng_->field(), dim(), eng_->dim());
  for (int k = 0; k < dim(); ++k) m.set_row(k, elements_[k]);
  return m;
}

namespace {

// Splits cellular coordinates of x (in the span of row u of block b plus
// higher cells) into module coordinates; returns false when some
// coefficient lies outside that pattern.
bool split_row(const CellularBasis& cb, int b, int u, const SparseVec& coords, SparseVec& out, std::string* why) {
  const CellBlock& blk = cb.blocks()[b];
  out.clear();
  for (const auto& [g, c] : coords) {
    const int gb = cb.block_at(g);
    if (gb == b) {
      const int a = (g - blk.offset) / blk.size(), col = (g - blk.offset) % blk.size();
      if (a != u) {
        if (why) *why = "coefficient on row " + std::to_string(a) + " of the same cell";
        return false;
      }
      out.emplace_back(col, c);
    } else if (compare(cb.blocks()[gb].label, blk.label) != Order::Greater) {
      if (why) *why = "coefficient on the non-higher cell " + cb.blocks()[gb].label.to_string();
      return false;
    }
  }
  return true;
}

}  // namespace

CheckReport validate_cell_datum(const CellularBasis& cb) {
  CheckReport rep;
  const auto& eng = *cb.engine();
  rep.add("basis", cb.dim() == eng.dim() && cb.transition().rank() == eng.dim(),
          std::to_string(cb.dim()) + " elements");
  {
    std::string why;
    for (const auto& blk : cb.blocks())
      for (int a = 0; a < blk.size() && why.empty(); ++a)
        for (int b = 0; b < blk.size(); ++b)
          if (eng.sigma(cb.element(blk.global(a, b))) != cb.element(blk.global(b, a))) {
            why = blk.label.to_string() + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
            break;
          }
    rep.add("anti-involution", why.empty(), why);
  }
  std::string why;
  for (std::size_t bi = 0; bi < cb.blocks().size() && why.empty(); ++bi) {
    const auto& blk = cb.blocks()[bi];
    for (int gen = 0; gen < eng.generators().count() && why.empty(); ++gen)
      for (int col = 0; col < blk.size() && why.empty(); ++col) {
        SparseVec ref;
        for (int a = 0; a < blk.size(); ++a) {
          SparseVec coords = cb.coordinates(eng.apply_right(cb.element(blk.global(a, col)), {gen, false}));
          SparseVec mod;
          std::string detail;
          if (!split_row(cb, static_cast<int>(bi), a, coords, mod, &detail)) {
            why = blk.label.to_string() + " " + eng.generators().name(gen) + ": " + detail;
            break;
          }
          if (a == 0)
            ref = mod;
          else if (mod != ref) {
            why = blk.label.to_string() + " " + eng.generators().name(gen) + ": coefficients depend on the left index";
            break;
          }
        }
      }
  }
  rep.add("right action", why.empty(), why);
  return rep;
}

CellModule::CellModule(CellularPtr cb, const CellLabel& label) : cb_(std::move(cb)), label_(label) {
  block_ = cb_->block_of(label);
  if (block_ < 0) throw EngineError("label " + label.to_string() + " is not a cell of this algebra");
  gens_.resize(cb_->engine()->generators().count());
}

SparseVec CellModule::act_on_row(int u, int k, const AlgebraElement& a) const {
  const auto& eng = *cb_->engine();
  SparseVec coords = cb_->coordinates(eng.multiply(cb_->element(block().global(u, k)), a.coords()));
  SparseVec out;
  std::string why;
  if (!split_row(*cb_, block_, u, coords, out, &why)) throw IntegrityError("cell module action: " + why);
  return out;
}

SparseVec CellModule::vector_of(const AlgebraElement& x) const {
  SparseVec out;
  std::string why;
  if (!split_row(*cb_, block_, 0, cb_->coordinates(x.coords()), out, &why)) throw IntegrityError("not a module vector: " + why);
  return out;
}

SparseVec CellModule::act(const SparseVec& v, const AlgebraElement& a) const {
  const Field& F = *cb_->engine()->field();
  SparseAccumulator acc(F, dim());
  for (const auto& [k, c] : v) acc.add_scaled(act_on_row(0, k, a), c);
  return acc.take();
}

Matrix CellModule::action(const AlgebraElement& a) const {
  Matrix m(cb_->engine()->field(), dim(), dim());
  for (int k = 0; k < dim(); ++k) m.set_row(k, act_on_row(0, k, a));
  return m;
}

const Matrix& CellModule::generator_action(int gen) const {
  if (!gens_[gen]) gens_[gen] = action(cb_->engine()->word(Word{{gen, false}}));
  return *gens_[gen];
}

Matrix CellModule::gram(int u) const {
  const auto& eng = *cb_->engine();
  const Field& F = *eng.field();
  const int n = dim();
  Matrix g(eng.field(), n, n);
  for (int x = 0; x < n; ++x) {
    const SparseVec& left = cb_->element(block().global(u, x));
    for (int y = 0; y < n; ++y) {
      SparseVec coords = cb_->coordinates(eng.multiply(left, cb_->element(block().global(y, u))));
      SparseVec row;
      std::string why;
      if (!split_row(*cb_, block_, u, coords, row, &why)) throw IntegrityError("Gram product: " + why);
      for (const auto& [col, c] : row)
        if (col != u && !F.is_zero(c)) throw IntegrityError("Gram product is not a multiple of C_(u)(u)");
      g.at(x, y) = sparse_get(F, row, u);
    }
  }
  return g;
}

RadicalRank radical_rank(const Matrix& gram) {
  const int rk = gram.rank();
  return {rk, gram.rows() - rk};
}

}  // namespace qwb
