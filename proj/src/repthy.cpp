#include "qwb/repthy.hpp"

#include "qwb/special.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace qwb {

namespace {

FieldElement fe(const FieldPtr& F, const Scalar& v) { return {F, v}; }

FieldElement content_sum(const Partition& p, int side, const FieldPtr& field) {
  FieldElement sum = FieldElement::from_int(field, 0);
  for (int row = 1; row <= p.length(); ++row)
    for (int col = 1; col <= p.part(row); ++col) sum = sum + content_scalar(Node{row, col, side}, field);
  return sum;
}

Scalar minus_q_power(const Field& F, int n) {
  const Scalar v = q_power(F, n);
  return n % 2 == 0 ? v : F.neg(v);
}

bool delta_is_zero(const Field& F) { return F.is_zero(delta(F)); }

// rho^2 == q^{2a}
bool rho_squared_is(const Field& F, int a) {
  return F.is_zero(F.sub(F.mul(F.rho(), F.rho()), q_power(F, 2 * a)));
}

CellularPtr build_cellular(int r, int s, const FieldPtr& field) {
  return CellularBasis::build(AlgebraEngine::build(r, s, field));
}

int span_dim(const FieldPtr& field, int dim, const std::vector<SparseVec>& vs) { return sparse_rank(field, dim, vs); }

// Smallest subspace containing seeds and stable under right multiplication by
// the given matrices; returned as an echelon basis and its spanning vectors.
std::vector<SparseVec> closure(const FieldPtr& field, int dim, std::vector<SparseVec> seeds, const std::vector<Matrix>& gens) {
  EchelonBasis ech(field, dim);
  std::vector<SparseVec> basis;
  const Field& F = *field;
  while (!seeds.empty()) {
    SparseVec v = std::move(seeds.back());
    seeds.pop_back();
    if (!ech.insert(v)) continue;
    for (const auto& g : gens) {
      SparseAccumulator acc(F, dim);
      for (const auto& [k, c] : v) acc.add_scaled(g.row_sparse(k), c);
      seeds.push_back(acc.take());
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

nlohmann::json label_json(const CellLabel& l) { return {{"f", l.f}, {"lambda", l.lambda.to_string()}}; }

}  // namespace

FieldElement central_scalar(const CellLabel& label, const FieldPtr& field) {
  const Field& F = *field;
  const FieldElement rho = fe(field, F.rho());
  return FieldElement::from_int(field, label.f) * delta(field) - rho.inverse() * content_sum(label.lambda.first, 1, field) -
         rho * content_sum(label.lambda.second, 2, field);
}

CentralCharacter central_character(const CellLabel& label, const FieldPtr& field) {
  return {label, central_scalar(label, field), std::nullopt};
}

CentralCharacter central_character(const CellularPtr& cb, const CellLabel& label) {
  CentralCharacter out = central_character(label, cb->engine()->field());
  Scalar v;
  const Matrix a = CellModule(cb, label).action(central_element(*cb->engine()));
  out.matches_action = a.is_scalar(&v) && v == out.scalar.value();
  return out;
}

std::vector<CentralCharacter> central_character_table(const CellularPtr& cb) {
  const AlgebraElement c = central_element(*cb->engine());
  const FieldPtr& field = cb->engine()->field();
  std::vector<CentralCharacter> out;
  for (const auto& blk : cb->blocks()) {
    CentralCharacter cc = central_character(blk.label, field);
    Scalar v;
    const Matrix a = CellModule(cb, blk.label).action(c);
    cc.matches_action = a.is_scalar(&v) && v == cc.scalar.value();
    out.push_back(std::move(cc));
  }
  return out;
}

std::vector<std::pair<CellLabel, CellLabel>> central_scalar_collisions(int r, int s, const FieldPtr& field) {
  const auto labels = cell_labels(r, s);
  std::vector<FieldElement> scalars;
  for (const auto& l : labels) scalars.push_back(central_scalar(l, field));
  std::vector<std::pair<CellLabel, CellLabel>> out;
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (scalars[a] == scalars[b]) out.emplace_back(labels[a], labels[b]);
  return out;
}

std::vector<CellLabel> classify_simples(int r, int s, const FieldPtr& field) {
  const QuantumChar e = quantum_characteristic(*field);
  const bool drop_top = r == s && delta_is_zero(*field);
  std::vector<CellLabel> out;
  for (const auto& l : cell_labels(r, s)) {
    if (drop_top && l.f == r) continue;
    if (e_restricted(l.lambda, e)) out.push_back(l);
  }
  return out;
}

std::vector<CellLabel> simples_by_gram(const CellularPtr& cb) {
  std::vector<CellLabel> out;
  for (const auto& blk : cb->blocks())
    if (CellModule(cb, blk.label).gram().rank() > 0) out.push_back(blk.label);
  return out;
}

bool is_quasi_hereditary(int r, int s, const FieldPtr& field) {
  return quantum_characteristic(*field).exceeds(std::max(r, s)) && (r != s || !delta_is_zero(*field));
}

std::string to_string(SemisimpleReason reason) {
  switch (reason) {
    case SemisimpleReason::CharacteristicTooSmall: return "quantum characteristic too small";
    case SemisimpleReason::DeltaZeroList: return "delta-zero exceptional list";
    case SemisimpleReason::RhoPowerCoincidence: return "rho-power coincidence";
    case SemisimpleReason::Generic: return "generic";
  }
  return "unknown";
}

SemisimplicityVerdict semisimplicity(int r, int s, const FieldPtr& field, SemisimpleMode mode, CellularPtr cb) {
  const Field& F = *field;
  SemisimplicityVerdict v;
  if (!quantum_characteristic(F).exceeds(std::max(r, s))) {
    v.semisimple = false;
    v.reason = SemisimpleReason::CharacteristicTooSmall;
    return v;
  }
  if (delta_is_zero(F)) {
    v.reason = SemisimpleReason::DeltaZeroList;
    v.semisimple = (r == 1 && (s == 2 || s == 3)) || (s == 1 && (r == 2 || r == 3));
  } else {
    v.semisimple = true;
    v.reason = SemisimpleReason::Generic;
    for (int a = -(r + s - 2); a <= r + s - 2; ++a)
      if (rho_squared_is(F, a)) {
        v.semisimple = false;
        v.reason = SemisimpleReason::RhoPowerCoincidence;
        v.coincidence = a;
        break;
      }
  }
  if (mode == SemisimpleMode::ClosedForm) return v;

  if (!cb) cb = build_cellular(r, s, field);
  for (const auto& blk : cb->blocks())
    if (CellModule(cb, blk.label).gram().determinant().is_zero()) v.witnesses.push_back(blk.label);
  v.gram_computed = true;
  v.gram_verdict = v.witnesses.empty();
  if (mode == SemisimpleMode::Gram) {
    v.semisimple = *v.gram_verdict;
    return v;
  }
  if (*v.gram_verdict != v.semisimple)
    throw IntegrityError("semisimplicity: closed form says " + std::string(v.semisimple ? "semisimple" : "not semisimple") +
                         " for (" + std::to_string(r) + "," + std::to_string(s) + ") over " + F.spec() + " but " +
                         (v.witnesses.empty() ? std::string("no Gram matrix is singular")
                                              : "the Gram matrix of " + v.witnesses.front().to_string() + " is singular"));
  return v;
}

std::string to_string(ArcKind kind) { return kind == ArcKind::Row ? "row" : "column"; }

ZeroLocus onearc_zero_locus(int r, ArcKind kind) {
  if (r < 2) throw EngineError("one-arc zero locus needs r >= 2");
  ZeroLocus z{r, kind, -(r + 1), r + 1, {}, {}, {}};
  const Partition p = kind == ArcKind::Row ? Partition({r - 1}) : Partition(std::vector<int>(r - 1, 1));
  const CellLabel label{1, {p, Partition()}};
  for (int a = z.a_min; a <= z.a_max; ++a)
    for (int sign : {1, -1}) {
      auto cb = build_cellular(r, 1, Field::one_variable(a, sign));
      if (CellModule(cb, label).gram().determinant().is_zero()) (sign > 0 ? z.vanishing_plus : z.vanishing_minus).push_back(a);
    }
  z.expected = kind == ArcKind::Row ? std::vector<int>{-1, r - 1} : std::vector<int>{1 - r, 1};
  std::sort(z.expected.begin(), z.expected.end());
  z.expected.erase(std::unique(z.expected.begin(), z.expected.end()), z.expected.end());
  return z;
}

std::vector<GramDeterminant> delta_zero_gram_checks() {
  struct Case {
    int r, s;
    const char* lambda;
  };
  const Case cases[] = {{3, 2, "[[2],[1]]"}, {4, 1, "[[2,1],[]]"}, {4, 2, "[[1,1,1],[1]]"}};
  std::vector<GramDeterminant> out;
  for (const auto& c : cases)
    for (int sign : {1, -1}) {
      FieldPtr field = Field::one_variable(0, sign);
      auto cb = build_cellular(c.r, c.s, field);
      const CellLabel label{1, Bipartition::parse(c.lambda)};
      const Matrix g = CellModule(cb, label).gram();
      out.push_back({c.r, c.s, field->spec(), label, g.rows(), g.determinant()});
    }
  return out;
}

int cell_dim(int r, int s, const CellLabel& label) {
  if (label.f < 0 || label.lambda.first.size() != r - label.f || label.lambda.second.size() != s - label.f)
    throw CombinatError("label " + label.to_string() + " does not index a cell module of B_{" + std::to_string(r) + "," +
                        std::to_string(s) + "}");
  const std::size_t cosets = label.f == 0 ? 1 : coset_reps(r, s, label.f).size();
  return static_cast<int>(std_tableaux(label.lambda).size() * cosets);
}

namespace {

std::vector<CellLabel> branching_sections(const CellLabel& label) {
  std::vector<CellLabel> out;
  for (const auto& p : nodes_addable_removable(label.lambda.first, 1).removable)
    out.push_back({label.f, {remove_node(label.lambda.first, p), label.lambda.second}});
  if (label.f >= 1)
    for (const auto& p : nodes_addable_removable(label.lambda.second, 2).addable)
      out.push_back({label.f - 1, {label.lambda.first, add_node(label.lambda.second, p)}});
  return out;
}

AlgebraElement n_lambda(const AlgebraEngine& eng, const CellLabel& label) {
  AlgebraElement x = eng.one();
  if (label.lambda.first.size() > 0)
    x = x * embed_hecke(eng, symmetrizers(label.lambda.first, eng.field()).second, label.f, false);
  if (label.lambda.second.size() > 0)
    x = x * embed_hecke(eng, symmetrizers(label.lambda.second, eng.field()).second, label.f, true);
  return x;
}

}  // namespace

bool branching_dimension_identity(int r, int s, const CellLabel& label) {
  int total = 0;
  for (const auto& sec : branching_sections(label)) total += cell_dim(r - 1, s, sec);
  return total == cell_dim(r, s, label);
}

BranchingReport branching_check(const CellularPtr& cb, const CellLabel& label, const CellularPtr& smaller) {
  const AlgebraEngine& eng = *cb->engine();
  const FieldPtr& field = eng.field();
  const Field& F = *field;
  const int r = eng.r(), s = eng.s(), f = label.f;
  if (r < 2) throw EngineError("branching needs r >= 2");
  CellModule mod(cb, label);
  BranchingReport rep;
  rep.label = label;
  rep.dim = mod.dim();
  rep.sections = branching_sections(label);
  int total = 0;
  for (const auto& sec : rep.sections) {
    rep.section_dims.push_back(cell_dim(r - 1, s, sec));
    total += rep.section_dims.back();
  }
  rep.checks.add("dimension identity", total == rep.dim, std::to_string(rep.dim) + " = " + std::to_string(total));

  CellularPtr small = smaller ? smaller : build_cellular(r - 1, s, field);
  const auto map = natural_embedding(eng, false);
  const Matrix c = mod.action(apply_map(map, central_element(*small->engine())));
  Scalar trace = F.zero();
  for (int i = 0; i < c.rows(); ++i) trace = F.add(trace, c.at(i, i));
  Scalar expected = F.zero();
  std::vector<Scalar> distinct;
  for (std::size_t k = 0; k < rep.sections.size(); ++k) {
    const Scalar v = central_scalar(rep.sections[k], field).value();
    expected = F.add(expected, F.mul(v, F.from_int(rep.section_dims[k])));
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
  }
  rep.checks.add("central trace identity", trace == expected, F.format(trace) + " vs " + F.format(expected));
  Matrix prod = Matrix::identity(field, c.rows());
  for (const auto& v : distinct) prod = prod * (c - Matrix::identity(field, c.rows()).scaled(v));
  rep.checks.add("section scalars annihilate", prod.is_zero(), std::to_string(distinct.size()) + " distinct scalars");

  // Sections generated by the y and z vectors (left-module elements, read
  // in the right module through sigma).
  std::vector<Matrix> gens;
  for (const auto& img : map.images) gens.push_back(mod.action(img));
  const AlgebraElement nle = n_lambda(eng, label) * e_power(eng, f);
  const auto& G = eng.generators();
  std::vector<SparseVec> vectors;
  std::vector<std::string> names;
  const auto removable = nodes_addable_removable(label.lambda.first, 1).removable;
  for (const auto& p : removable) {
    int a = f;
    for (int j = 1; j <= p.row; ++j) a += label.lambda.first.part(j);
    const AlgebraElement y = eng.word(g_range(G, r, a)) * nle;
    vectors.push_back(mod.vector_of(eng.sigma(y)));
    names.push_back("y" + p.to_string());
  }
  if (f >= 1)
    for (const auto& p : nodes_addable_removable(label.lambda.second, 2).addable) {
      int c_k = f, d_k = f;
      for (int j = 1; j <= p.row; ++j) c_k += label.lambda.second.part(j);
      for (int j = 1; j < p.row; ++j) d_k += label.lambda.second.part(j);
      const AlgebraElement tail = eng.word(inverse_word(g_range(G, f, c_k, true))) * eng.word(g_range(G, r, f)) * nle;
      AlgebraElement z = eng.zero();
      for (int j = d_k; j <= c_k; ++j)
        z = z + (eng.word(g_range(G, j, c_k, true)) * tail).scaled(minus_q_power(F, j - c_k));
      vectors.push_back(mod.vector_of(eng.sigma(z)));
      names.push_back("z" + p.to_string());
    }
  bool nonzero = true;
  std::string which;
  for (std::size_t k = 0; k < vectors.size(); ++k)
    if (vectors[k].empty()) {
      nonzero = false;
      which += names[k] + " ";
    }
  rep.checks.add("y and z vectors are nonzero", nonzero, which);

  std::vector<SparseVec> seeds;
  int prev = 0;
  bool sections_ok = true;
  std::string detail;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    seeds.push_back(vectors[k]);
    const int now = static_cast<int>(closure(field, mod.dim(), seeds, gens).size());
    detail += std::to_string(now - prev) + (k + 1 < vectors.size() ? "," : "");
    if (now - prev != rep.section_dims[k]) sections_ok = false;
    prev = now;
  }
  rep.checks.add("filtration section dimensions", sections_ok && prev == rep.dim, detail);
  return rep;
}

std::string to_string(Idempotent choice) { return choice == Idempotent::ETilde ? "e_tilde" : "f21"; }

Idempotent default_idempotent(int /*r*/, int s) { return s >= 2 ? Idempotent::ETilde : Idempotent::F21; }

int left_ideal_dim(const AlgebraEngine& eng) {
  std::vector<SparseVec> vs;
  const AlgebraElement e = eng.e1();
  for (int k = 0; k < eng.dim(); ++k) vs.push_back((eng.basis(k) * e).coords());
  return span_dim(eng.field(), eng.dim(), vs);
}

TruncationReport schur_truncation_check(const CellularPtr& cb, const CellLabel& label, Idempotent choice) {
  const AlgebraEngine& eng = *cb->engine();
  const FieldPtr& field = eng.field();
  const Field& F = *field;
  const int r = eng.r(), s = eng.s();
  const AlgebraElement idem = choice == Idempotent::ETilde ? e_tilde12(eng) : f21(eng);
  const AlgebraElement right = eng.sigma(idem);
  CellModule mod(cb, label);
  TruncationReport rep;
  rep.label = label;
  rep.choice = choice;
  const Matrix a = mod.action(right);
  rep.rank = a.rank();
  rep.expected = label.f == 0 ? 0 : cell_dim(r - 1, s - 1, {label.f - 1, label.lambda});
  rep.checks.add("rank of the idempotent", rep.rank == rep.expected,
                 std::to_string(rep.rank) + " vs " + std::to_string(rep.expected));

  const auto sub = shift_map(eng, 1);
  bool absorbs = true;
  for (const auto& h : sub.images)
    if (idem * h * idem != h * idem) absorbs = false;
  rep.checks.add("e h e = h e on B(1) generators", absorbs);
  if (label.f == 0) return rep;

  // N = C(f, lambda) sigma(e); P = sigma(e) B with h acting as sigma(e) h p.
  std::vector<SparseVec> nb;
  {
    EchelonBasis ech(field, mod.dim());
    for (int i = 0; i < a.rows(); ++i)
      if (ech.insert(a.row_sparse(i))) nb.push_back(a.row_sparse(i));
  }
  EchelonBasis nech(field, mod.dim());
  for (const auto& v : nb) nech.insert(v);
  std::vector<SparseVec> pb;
  EchelonBasis pech(field, eng.dim());
  for (int k = 0; k < eng.dim(); ++k) {
    SparseVec p = eng.multiply(right.coords(), eng.basis(k).coords());
    if (pech.insert(p)) pb.push_back(std::move(p));
  }
  rep.checks.add("dim of the induced bimodule", static_cast<int>(pb.size()) == left_ideal_dim(eng),
                 std::to_string(pb.size()));
  const int n = static_cast<int>(nb.size()), m = static_cast<int>(pb.size());
  std::vector<SparseVec> rels;
  for (const auto& h : sub.images) {
    std::vector<SparseVec> nh(n), hp(m);
    for (int i = 0; i < n; ++i) {
      SparseVec coeffs;
      if (!nech.reduce(mod.act(nb[i], h), &coeffs).empty()) throw IntegrityError("truncated module is not B(1)-stable");
      nh[i] = coeffs;
    }
    for (int j = 0; j < m; ++j) {
      SparseVec coeffs;
      const SparseVec img = eng.multiply(eng.multiply(right.coords(), h.coords()), pb[j]);
      if (!pech.reduce(img, &coeffs).empty()) throw IntegrityError("sigma(e) B is not stable under B(1)");
      hp[j] = coeffs;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        SparseAccumulator acc(F, static_cast<std::size_t>(n) * m);
        for (const auto& [k, c] : nh[i]) acc.add(k * m + j, c);
        for (const auto& [k, c] : hp[j]) acc.add(i * m + k, F.neg(c));
        SparseVec v = acc.take();
        if (!v.empty()) rels.push_back(std::move(v));
      }
  }
  rep.induced_dim = n * m - span_dim(field, n * m, rels);
  rep.checks.add("induced dimension", *rep.induced_dim == mod.dim(),
                 std::to_string(*rep.induced_dim) + " vs " + std::to_string(mod.dim()));
  return rep;
}

SubmoduleWitness submodule_witness(const CellularPtr& cb, ArcKind kind) {
  const AlgebraEngine& eng = *cb->engine();
  const FieldPtr& field = eng.field();
  const Field& F = *field;
  const int r = eng.r(), s = eng.s(), n = r + s - 2;
  SubmoduleWitness w;
  w.r = r;
  w.s = s;
  w.kind = kind;
  w.field = F.spec();
  const bool row = kind == ArcKind::Row;
  const CellLabel mu{1, row ? Bipartition{Partition({r - 1}), Partition({s - 1})}
                           : Bipartition{Partition(std::vector<int>(r - 1, 1)), Partition(std::vector<int>(s - 1, 1))}};
  auto sym = [&](int k) {
    auto [m_sym, n_sym] = symmetrizers(Partition({k}), field);
    return row ? n_sym : m_sym;
  };
  const AlgebraElement front = embed_hecke(eng, sym(r), 0, false) * embed_hecke(eng, sym(s), 0, true);
  const AlgebraElement v = front * cell_generator(eng, mu);
  CellModule mod(cb, mu);
  const SparseVec vv = mod.vector_of(eng.sigma(v));
  w.v_nonzero = !vv.empty();
  const SparseVec ev = mod.vector_of(eng.sigma(eng.e1() * v));
  w.annihilated = ev.empty();
  w.proportional = ev.empty() || (ev.size() == 1 && ev.front().first == 0);
  w.coefficient = fe(field, sparse_get(F, ev, 0));
  const Scalar qq = F.sub(F.q(), q_power(F, -1));
  const Scalar top = F.sub(F.one(), q_power(F, row ? -2 * n : 2 * n));
  w.predicted = fe(field, F.sub(delta(F), F.div(F.mul(F.rho(), top), qq)));
  w.criterion = rho_squared_is(F, row ? n : -n);
  return w;
}

int hom_dimension(const CellularPtr& cb, const CellLabel& source, const CellLabel& target, bool* image_in_radical) {
  const AlgebraEngine& eng = *cb->engine();
  const FieldPtr& field = eng.field();
  CellModule src(cb, source), dst(cb, target);
  // Annihilator of the cyclic vector of C(source): kernel of b -> v_0 b.
  Matrix orbit(field, eng.dim(), src.dim());
  for (int k = 0; k < eng.dim(); ++k) orbit.set_row(k, src.act_on_row(0, 0, eng.basis(k)));
  const auto ann = left_kernel(orbit);
  // x in C(target) with x * a = 0 for every a in the annihilator.
  Matrix stacked(field, dst.dim(), dst.dim() * static_cast<int>(ann.size()));
  for (std::size_t t = 0; t < ann.size(); ++t) {
    const Matrix act = dst.action({cb->engine(), ann[t]});
    for (int i = 0; i < dst.dim(); ++i)
      for (int j = 0; j < dst.dim(); ++j) stacked.at(i, static_cast<int>(t) * dst.dim() + j) = act.at(i, j);
  }
  const auto sols = ann.empty() ? std::vector<SparseVec>{} : left_kernel(stacked);
  const int dim = ann.empty() ? dst.dim() : static_cast<int>(sols.size());
  if (image_in_radical) {
    const Matrix g = dst.gram();
    bool all = true;
    for (const auto& x : sols) {
      Matrix xv(field, 1, dst.dim());
      xv.set_row(0, x);
      if (!(xv * g).is_zero()) all = false;
    }
    *image_in_radical = all;
  }
  return dim;
}

std::vector<HomWitness> zero1_homomorphisms(const CellularPtr& cb) {
  const AlgebraEngine& eng = *cb->engine();
  const Field& F = *eng.field();
  std::vector<HomWitness> out;
  for (const auto& sb : cb->blocks()) {
    if (sb.label.f != 0) continue;
    for (const auto& tb : cb->blocks()) {
      if (tb.label.f != 1) continue;
      HomWitness h{sb.label, tb.label, 0, false, false, false};
      h.hom_dim = hom_dimension(cb, sb.label, tb.label, &h.image_in_radical);
      if (h.hom_dim == 0) continue;
      const Bipartition& lam = sb.label.lambda;
      const Bipartition& mu = tb.label.lambda;
      int res = 0;
      bool nodes = true;
      for (int side = 1; side <= 2 && nodes; ++side) {
        const Partition& a = side == 1 ? lam.first : lam.second;
        const Partition& b = side == 1 ? mu.first : mu.second;
        bool found = false;
        for (const auto& p : nodes_addable_removable(a, side).removable)
          if (remove_node(a, p) == b) {
            found = true;
            res += p.residue();
          }
        nodes = found;
      }
      h.one_node_each = nodes;
      h.residue_condition = nodes && rho_squared_is(F, res);
      out.push_back(h);
    }
  }
  return out;
}

nlohmann::json to_json(const CheckReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"pass", rep.all_pass()}, {"failures", rep.failures()}, {"checks", checks}};
}

nlohmann::json to_json(const CentralCharacter& c) {
  nlohmann::json j = {{"label", label_json(c.label)}, {"scalar", c.scalar.to_string()}};
  if (c.matches_action) j["matches_action"] = *c.matches_action;
  return j;
}

nlohmann::json to_json(const SemisimplicityVerdict& v) {
  nlohmann::json j = {{"semisimple", v.semisimple}, {"reason", to_string(v.reason)}, {"gram_computed", v.gram_computed}};
  if (v.coincidence) j["coincidence_a"] = *v.coincidence;
  if (v.gram_verdict) j["gram_verdict"] = *v.gram_verdict;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& l : v.witnesses) w.push_back(label_json(l));
  j["witnesses"] = w;
  return j;
}

nlohmann::json to_json(const ZeroLocus& z) {
  return {{"r", z.r},
          {"kind", to_string(z.kind)},
          {"a_range", {z.a_min, z.a_max}},
          {"vanishing_plus", z.vanishing_plus},
          {"vanishing_minus", z.vanishing_minus},
          {"expected", z.expected},
          {"matches", z.matches()}};
}

nlohmann::json to_json(const GramDeterminant& g) {
  return {{"r", g.r},         {"s", g.s},    {"field", g.field}, {"label", label_json(g.label)},
          {"size", g.size}, {"det", g.det.to_string()}, {"zero", g.det.is_zero()}};
}

nlohmann::json to_json(const BranchingReport& b) {
  nlohmann::json secs = nlohmann::json::array();
  for (std::size_t k = 0; k < b.sections.size(); ++k)
    secs.push_back({{"label", label_json(b.sections[k])}, {"dim", b.section_dims[k]}});
  return {{"label", label_json(b.label)}, {"dim", b.dim}, {"sections", secs}, {"report", to_json(b.checks)}};
}

nlohmann::json to_json(const TruncationReport& t) {
  nlohmann::json j = {{"label", label_json(t.label)},
                      {"idempotent", to_string(t.choice)},
                      {"rank", t.rank},
                      {"expected", t.expected},
                      {"report", to_json(t.checks)}};
  if (t.induced_dim) j["induced_dim"] = *t.induced_dim;
  return j;
}

nlohmann::json to_json(const SubmoduleWitness& w) {
  return {{"r", w.r},
          {"s", w.s},
          {"kind", to_string(w.kind)},
          {"field", w.field},
          {"v_nonzero", w.v_nonzero},
          {"proportional", w.proportional},
          {"coefficient", w.coefficient.to_string()},
          {"predicted", w.predicted.to_string()},
          {"annihilated", w.annihilated},
          {"criterion", w.criterion}};
}

nlohmann::json to_json(const HomWitness& h) {
  return {{"source", label_json(h.source)},
          {"target", label_json(h.target)},
          {"hom_dim", h.hom_dim},
          {"image_in_radical", h.image_in_radical},
          {"one_node_each", h.one_node_each},
          {"residue_condition", h.residue_condition}};
}

}  // namespace qwb
