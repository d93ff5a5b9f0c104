#include "qwb/relations.hpp"

#include "qwb/special.hpp"

#include <algorithm>

namespace qwb {

bool CheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int CheckReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

void CheckReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

namespace {

std::string idx(int i) { return "[i=" + std::to_string(i) + "]"; }

void expect_equal(CheckReport& rep, const std::string& name, const AlgebraElement& a, const AlgebraElement& b) {
  const bool ok = a == b;
  rep.add(name, ok, ok ? std::string{} : "difference " + (a - b).to_string());
}

Generators source_generators(int r, int s) { return {std::max(r, 1), std::max(s, 1)}; }

bool mentions_e(const Relation& rel) {
  for (const auto& [c, w] : rel.terms)
    for (const auto& t : w)
      if (t.gen == 0) return true;
  return false;
}

template <class T>
CheckReport evaluate(const GeneratorMap<T>& map, const Field& F, const T& one) {
  CheckReport rep;
  const Generators gens = source_generators(map.source_r, map.source_s);
  if (static_cast<int>(map.images.size()) != gens.count()) throw EngineError("generator map has the wrong number of images");
  const Scalar qq = F.sub(F.q(), q_power(F, -1));
  for (const auto& rel : defining_relations(gens, F)) {
    if (!map.has_e && mentions_e(rel)) continue;
    if (map.source_r == 0 && std::any_of(rel.terms.begin(), rel.terms.end(), [&](const auto& term) {
          return std::any_of(term.second.begin(), term.second.end(), [&](const Token& t) { return gens.is_g(t.gen); });
        }))
      continue;
    if (map.source_s == 0 && std::any_of(rel.terms.begin(), rel.terms.end(), [&](const auto& term) {
          return std::any_of(term.second.begin(), term.second.end(), [&](const Token& t) { return gens.is_gs(t.gen); });
        }))
      continue;
    T total = one.scaled(F.zero());
    for (const auto& [c, w] : rel.terms) {
      T prod = one;
      for (const Token& t : w) {
        T img = map.images[t.gen];
        if (t.inverse) img = img - one.scaled(qq);
        prod = prod * img;
      }
      total = total + prod.scaled(c);
    }
    rep.add(rel.name, total.is_zero());
  }
  return rep;
}

}  // namespace

CheckReport verify_relations(const AlgebraEngine& eng) {
  CheckReport rep;
  const auto& G = eng.generators();
  const Field& F = *eng.field();
  for (const auto& rel : defining_relations(G, F)) {
    AlgebraElement total = eng.zero();
    for (const auto& [c, w] : rel.terms) total = total + eng.word(w).scaled(c);
    rep.add(rel.name, total.is_zero(), total.is_zero() ? std::string{} : "residual " + total.to_string());
  }
  const int m = std::min(eng.r(), eng.s());
  std::vector<AlgebraElement> e(m + 1);
  for (int i = 1; i <= m; ++i) e[i] = e_i(eng, i);
  for (int i = 1; i <= m; ++i) {
    const std::string tag = idx(i);
    for (int k = i + 1; k < eng.r(); ++k)
      expect_equal(rep, "e_i commutes with g_k" + tag + "[k=" + std::to_string(k) + "]", e[i] * eng.g(k), eng.g(k) * e[i]);
    for (int l = i + 1; l < eng.s(); ++l)
      expect_equal(rep, "e_i commutes with g*_l" + tag + "[l=" + std::to_string(l) + "]", e[i] * eng.gs(l),
                   eng.gs(l) * e[i]);
    expect_equal(rep, "e_i^2 = delta e_i" + tag, e[i] * e[i], e[i].scaled(eng.delta()));
    for (int j = 1; j <= m; ++j)
      if (j != i) expect_equal(rep, "e_i e_j = e_j e_i" + tag + "[j=" + std::to_string(j) + "]", e[i] * e[j], e[j] * e[i]);
    if (i >= m) continue;
    const AlgebraElement g = eng.g(i), gi = eng.g(i, true), h = eng.gs(i), hi = eng.gs(i, true);
    const Scalar rinv = F.inv(eng.rho());
    expect_equal(rep, "e_i g_i e_i = rho e_i" + tag, e[i] * g * e[i], e[i].scaled(eng.rho()));
    expect_equal(rep, "e_i g_i^-1 e_i = rho^-1 e_i" + tag, e[i] * gi * e[i], e[i].scaled(rinv));
    expect_equal(rep, "e_i g*_i e_i = rho e_i" + tag, e[i] * h * e[i], e[i].scaled(eng.rho()));
    expect_equal(rep, "e_i g*_i^-1 e_i = rho^-1 e_i" + tag, e[i] * hi * e[i], e[i].scaled(rinv));
    const AlgebraElement ee = e[i] * e[i + 1];
    expect_equal(rep, "e_i g_i g*_i^-1 e_i = e_i e_i+1" + tag, e[i] * g * hi * e[i], ee);
    expect_equal(rep, "e_i g*_i g_i^-1 e_i = e_i e_i+1" + tag, e[i] * h * gi * e[i], ee);
    expect_equal(rep, "e_i e_i+1 = e_i+1 e_i" + tag, ee, e[i + 1] * e[i]);
    expect_equal(rep, "e_i e_i+1 g_i = e_i+1 e_i g*_i" + tag, ee * g, e[i + 1] * e[i] * h);
    expect_equal(rep, "g_i e_i e_i+1 = g*_i e_i+1 e_i" + tag, g * ee, h * e[i + 1] * e[i]);
    const AlgebraElement core = e[i] * gi * h * e[i];
    expect_equal(rep, "e_i g_i^-1 g*_i e_i g_i = e_i g_i^-1 g*_i e_i g*_i" + tag, core * g, core * h);
    expect_equal(rep, "g_i e_i g_i^-1 g*_i e_i = g*_i e_i g_i^-1 g*_i e_i" + tag, g * core, h * core);
  }
  return rep;
}

GeneratorMap<AlgebraElement> shift_map(const AlgebraEngine& eng, int f) {
  if (f < 0 || f > std::min(eng.r(), eng.s())) throw EngineError("shift map: need 0 <= f <= min(r, s)");
  GeneratorMap<AlgebraElement> map{"shift", eng.r() - f, eng.s() - f, eng.r() > f && eng.s() > f, {}};
  const Generators src = source_generators(map.source_r, map.source_s);
  map.images.assign(src.count(), eng.zero());
  if (map.has_e) map.images[src.e()] = e_i(eng, f + 1);
  for (int i = 1; i < map.source_r; ++i) map.images[src.g(i)] = eng.g(f + i);
  for (int j = 1; j < map.source_s; ++j) map.images[src.gs(j)] = eng.gs(f + j);
  return map;
}

GeneratorMap<AlgebraElement> shifted_embedding(const AlgebraEngine& eng, bool starred) {
  if ((starred ? eng.s() : eng.r()) < 2) throw EngineError("shifted embedding needs at least two strands on that side");
  GeneratorMap<AlgebraElement> map{starred ? "shifted-starred" : "shifted", eng.r() - (starred ? 0 : 1),
                                   eng.s() - (starred ? 1 : 0), true, {}};
  const Generators src = source_generators(map.source_r, map.source_s);
  map.images.assign(src.count(), eng.zero());
  map.images[src.e()] = starred ? eng.gs(1, true) * eng.e1() * eng.gs(1) : eng.g(1, true) * eng.e1() * eng.g(1);
  for (int i = 1; i < map.source_r; ++i) map.images[src.g(i)] = eng.g(starred ? i : i + 1);
  for (int j = 1; j < map.source_s; ++j) map.images[src.gs(j)] = eng.gs(starred ? j + 1 : j);
  return map;
}

GeneratorMap<AlgebraElement> natural_embedding(const AlgebraEngine& eng, bool starred) {
  if ((starred ? eng.s() : eng.r()) < 2) throw EngineError("natural embedding needs at least two strands on that side");
  GeneratorMap<AlgebraElement> map{starred ? "natural-starred" : "natural", eng.r() - (starred ? 0 : 1),
                                   eng.s() - (starred ? 1 : 0), true, {}};
  const Generators src = source_generators(map.source_r, map.source_s);
  map.images.assign(src.count(), eng.zero());
  map.images[src.e()] = eng.e1();
  for (int i = 1; i < map.source_r; ++i) map.images[src.g(i)] = eng.g(i);
  for (int j = 1; j < map.source_s; ++j) map.images[src.gs(j)] = eng.gs(j);
  return map;
}

GeneratorMap<AlgebraElement> swap_map(const AlgebraEngine& eng) {
  GeneratorMap<AlgebraElement> map{"swap", eng.s(), eng.r(), true, {}};
  const Generators src = source_generators(map.source_r, map.source_s);
  map.images.assign(src.count(), eng.zero());
  map.images[src.e()] = eng.e1();
  for (int i = 1; i < map.source_r; ++i) map.images[src.g(i)] = eng.gs(i);
  for (int j = 1; j < map.source_s; ++j) map.images[src.gs(j)] = eng.g(j);
  return map;
}

GeneratorMap<HeckeElement> hecke_quotient(int r, int s, int f, const FieldPtr& field) {
  if (f < 0 || f > std::min(r, s)) throw EngineError("Hecke quotient: need 0 <= f <= min(r, s)");
  const int a = r - f, b = s - f, n = std::max(a + b, 1);
  GeneratorMap<HeckeElement> map{"hecke-quotient", a, b, a > 0 && b > 0, {}};
  const Generators src = source_generators(a, b);
  map.images.assign(src.count(), HeckeElement(field, n));
  for (int i = 1; i < a; ++i) map.images[src.g(i)] = HeckeElement::word(field, n, {i});
  for (int j = 1; j < b; ++j) map.images[src.gs(j)] = HeckeElement::word(field, n, {a + j});
  return map;
}

AlgebraElement apply_map(const GeneratorMap<AlgebraElement>& map, const AlgebraElement& x) {
  const AlgebraEngine& src = *x.engine();
  if (src.r() != map.source_r || src.s() != map.source_s) throw EngineError("apply_map: element is not in the source algebra");
  if (map.images.empty()) throw EngineError("apply_map: empty generator map");
  AlgebraElement out = map.images[0].engine()->zero();
  for (const auto& [k, c] : x.coords()) {
    AlgebraElement term = map.images[0].engine()->one();
    for (int gen : src.basis_word(k)) term = term * map.images[gen];
    out = out + term.scaled(c);
  }
  return out;
}

CheckReport check_homomorphism(const GeneratorMap<AlgebraElement>& map, const AlgebraEngine& target) {
  return evaluate(map, *target.field(), target.one());
}

CheckReport check_homomorphism(const GeneratorMap<HeckeElement>& map, const FieldPtr& field) {
  const int n = std::max(map.source_r + map.source_s, 1);
  return evaluate(map, *field, HeckeElement::one(field, n));
}

}  // namespace qwb
