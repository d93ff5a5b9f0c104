// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include "qwb/cellular.hpp"
#include "qwb/combinat.hpp"
#include "qwb/relations.hpp"
#include "qwb/repthy.hpp"
#include "qwb/special.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace qwb;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

std::string rs(int r, int s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

std::size_t factorial(int n) {
  std::size_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::size_t>(k);
  return out;
}

// All (r, s) with r, s >= 1 and r + s <= n.
std::vector<std::pair<int, int>> sizes(int n, int min_r = 1) {
  std::vector<std::pair<int, int>> out;
  for (int m = 2; m <= n; ++m)
    for (int r = min_r; r < m; ++r) out.push_back({r, m - r});
  return out;
}

CellularPtr cellular(int r, int s, const FieldPtr& F) { return CellularBasis::build(AlgebraEngine::build(r, s, F)); }

std::string labels_to_string(const std::set<std::string>& ls) {
  std::string out;
  for (const auto& l : ls) out += (out.empty() ? "" : " ") + l;
  return out;
}

// --- 1 ---------------------------------------------------------------------

void dimension_counts(Outcome& o) {
  double worst = 0;
  auto one = [&](int r, int s, const FieldPtr& F, const std::string& tag) {
    auto t0 = Clock::now();
    auto eng = AlgebraEngine::build(r, s, F);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    worst = std::max(worst, secs);
    const std::size_t want = factorial(r + s);
    o.expect(static_cast<std::size_t>(eng->dim()) == want, tag + " " + rs(r, s) + " engine dim");
    o.expect(secs < 300.0, tag + " " + rs(r, s) + " engine time");
    auto cb = CellularBasis::build(eng);
    std::size_t squares = 0;
    for (const auto& blk : cb->blocks()) {
      squares += static_cast<std::size_t>(blk.size()) * blk.size();
      o.expect(blk.size() == cell_dim(r, s, blk.label), tag + " " + rs(r, s) + " block " + blk.label.to_string());
    }
    o.expect(squares == want, tag + " " + rs(r, s) + " sum of squares");
    o.expect(cb->blocks().size() == cell_labels(r, s).size(), tag + " " + rs(r, s) + " label count");
  };
  for (auto [r, s] : sizes(5)) one(r, s, Field::generic(), "generic");
  for (const char* spec : {"gfp:101,7,5", "gfp:7,3,2"})
    for (auto [r, s] : sizes(6)) one(r, s, Field::parse(spec), spec);
  o.detail << "slowest engine " << worst << " s";
}

// --- 2 ---------------------------------------------------------------------

void relation_suite(Outcome& o) {
  int checks = 0;
  for (auto [r, s] : sizes(5)) {
    auto rep = verify_relations(*AlgebraEngine::build(r, s, Field::generic()));
    checks += static_cast<int>(rep.checks.size());
    for (const auto& c : rep.checks) o.expect(c.pass, rs(r, s) + " " + c.name + " " + c.detail);
  }
  o.detail << checks << " identities";
}

// --- 3 ---------------------------------------------------------------------

// (w, w*) lies in S_{r-f} x G_f x S_{s-f}: both fix {1..f} setwise and agree there.
bool in_subgroup(const Permutation& w, const Permutation& ws, int f) {
  for (int k = 1; k <= f; ++k)
    if (w(k) > f || ws(k) != w(k)) return false;
  return true;
}

std::size_t binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void coset_counts(Outcome& o) {
  int cases = 0;
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= 4; ++s)
      for (int f = 0; f <= std::min(r, s); ++f) {
        ++cases;
        const std::string tag = rs(r, s) + " f=" + std::to_string(f);
        // Brute-force orbit count: pair each element of S_r x S_s with the first
        // representative found in its coset.
        std::vector<std::pair<Permutation, Permutation>> seen;
        for (std::size_t a = 0; a < factorial(r); ++a)
          for (std::size_t b = 0; b < factorial(s); ++b) {
            Permutation w = Permutation::unrank(r, a), ws = Permutation::unrank(s, b);
            bool found = false;
            for (const auto& [x, xs] : seen)
              if (in_subgroup(w * x.inverse(), ws * xs.inverse(), f)) {
                found = true;
                break;
              }
            if (!found) seen.push_back({w, ws});
          }
        const auto reps = coset_reps(r, s, f);
        const std::size_t formula = binom(r, f) * binom(s, f) * factorial(f);
        o.expect(seen.size() == formula, tag + " brute force " + std::to_string(seen.size()));
        o.expect(reps.size() == formula, tag + " |D| " + std::to_string(reps.size()));
        for (std::size_t a = 0; a < reps.size(); ++a)
          for (std::size_t b = a + 1; b < reps.size(); ++b)
            o.expect(!in_subgroup(reps[b].unstarred() * reps[a].unstarred().inverse(),
                                  reps[b].starred() * reps[a].starred().inverse(), f),
                     tag + " reps share a coset");
      }
  o.detail << cases << " (r,s,f) cases";
}

// --- 4 ---------------------------------------------------------------------

void cell_datum(Outcome& o) {
  int checks = 0;
  for (auto [r, s] : sizes(5)) {
    auto cb = cellular(r, s, Field::generic());
    auto rep = validate_cell_datum(*cb);
    checks += static_cast<int>(rep.checks.size());
    for (const auto& c : rep.checks) o.expect(c.pass, rs(r, s) + " " + c.name + " " + c.detail);
  }
  o.detail << checks << " axiom checks";
}

// --- 5 ---------------------------------------------------------------------

void central_element_checks(Outcome& o) {
  int modules = 0;
  for (auto [r, s] : sizes(5)) {
    auto cb = cellular(r, s, Field::generic());
    const auto& eng = *cb->engine();
    auto c = central_element(eng);
    for (int gen = 0; gen < eng.generators().count(); ++gen) {
      auto x = eng.word(Word{{gen, false}});
      o.expect(c * x == x * c, rs(r, s) + " commutes with " + eng.generators().name(gen));
    }
    for (const auto& cc : central_character_table(cb)) {
      ++modules;
      o.expect(cc.matches_action.value_or(false), rs(r, s) + " scalar on " + cc.label.to_string());
    }
  }
  o.detail << modules << " cell modules";
}

// --- 6 ---------------------------------------------------------------------

void zero_loci(Outcome& o) {
  for (int r = 2; r <= 4; ++r)
    for (auto kind : {ArcKind::Row, ArcKind::Column}) {
      auto z = onearc_zero_locus(r, kind);
      // Expected exponents a with rho^2 = q^{2a}, written out independently.
      std::vector<int> want = kind == ArcKind::Row ? std::vector<int>{-1, r - 1} : std::vector<int>{1 - r, 1};
      o.expect(z.a_min <= -(r + 1) && z.a_max >= r + 1, "grid too small");
      o.expect(z.vanishing_plus == want, "r=" + std::to_string(r) + " " + to_string(kind) + " rho=+q^a");
      o.expect(z.vanishing_minus == want, "r=" + std::to_string(r) + " " + to_string(kind) + " rho=-q^a");
    }
  o.detail << "r in {2,3,4}, both kinds, both signs";
}

// --- 7 ---------------------------------------------------------------------

bool gram_semisimple(int r, int s, const FieldPtr& F) {
  auto cb = cellular(r, s, F);
  for (const auto& blk : cb->blocks())
    if (CellModule(cb, blk.label).gram().determinant().is_zero()) return false;
  return true;
}

void semisimplicity_grid(Outcome& o) {
  int points = 0;
  auto compare = [&](int r, int s, const FieldPtr& F) {
    ++points;
    const bool closed = semisimplicity(r, s, F, SemisimpleMode::ClosedForm).semisimple;
    const bool gram = gram_semisimple(r, s, F);
    o.expect(closed == gram, rs(r, s) + " at " + F->spec());
    return closed;
  };
  for (auto [r, s] : sizes(5)) {
    const int n = r + s;
    for (int a = -n; a <= n; ++a)
      for (int sign : {1, -1}) compare(r, s, Field::one_variable(a, sign));
    for (int k = n; k <= n + 2; ++k)
      o.expect(semisimplicity(r, s, Field::one_variable(k), SemisimpleMode::ClosedForm).semisimple,
               rs(r, s) + " rho=q^" + std::to_string(k));
    const std::set<std::pair<int, int>> exceptional{{1, 2}, {2, 1}, {1, 3}, {3, 1}};
    for (const char* spec : {"delta-zero", "delta-zero:neg"}) {
      const bool ss = compare(r, s, Field::parse(spec));
      o.expect(ss == (exceptional.count({r, s}) > 0), rs(r, s) + " " + spec + " exceptional list");
    }
  }
  o.expect(!gram_semisimple(2, 2, Field::parse("delta-zero")), "B_{2,2} at delta = 0");
  o.detail << points << " grid points";
}

// --- 8 ---------------------------------------------------------------------

void delta_zero_determinants(Outcome& o) {
  const std::set<std::string> want{CellLabel{1, Bipartition::parse("[[2],[1]]")}.to_string(),
                                   CellLabel{1, Bipartition::parse("[[2,1],[]]")}.to_string(),
                                   CellLabel{1, Bipartition::parse("[[1,1,1],[1]]")}.to_string()};
  std::set<std::string> got, dims;
  for (const auto& g : delta_zero_gram_checks()) {
    got.insert(g.label.to_string());
    dims.insert(std::to_string(g.size));
    o.expect(g.size == 6 || g.size == 8, g.label.to_string() + " size " + std::to_string(g.size));
    o.expect(g.det.is_zero(), rs(g.r, g.s) + " " + g.label.to_string() + " at " + g.field);
  }
  o.expect(got == want, "labels " + labels_to_string(got));
  o.detail << "sizes " << labels_to_string(dims);
}

// --- 9 ---------------------------------------------------------------------

void branching(Outcome& o) {
  int labels = 0;
  for (auto [r, s] : sizes(5, 2)) {
    auto cb = cellular(r, s, Field::generic());
    auto small = cellular(r - 1, s, Field::generic());
    for (const auto& blk : cb->blocks()) {
      ++labels;
      auto rep = branching_check(cb, blk.label, small);
      int identities = 0;
      for (const auto& c : rep.checks.checks) {
        if (c.name == "dimension identity" || c.name == "central trace identity") ++identities;
        o.expect(c.pass, rs(r, s) + " " + blk.label.to_string() + " " + c.name + " " + c.detail);
      }
      o.expect(identities == 2, rs(r, s) + " " + blk.label.to_string() + " identities missing");
      int sum = 0;
      for (const auto& sec : rep.sections) sum += cell_dim(r - 1, s, sec);
      o.expect(sum == blk.size(), rs(r, s) + " " + blk.label.to_string() + " section dimensions");
    }
  }
  o.detail << labels << " labels";
}

// --- 10 --------------------------------------------------------------------

void schur_truncation(Outcome& o) {
  int reports = 0;
  for (auto [r, s] : sizes(5)) {
    auto cb = cellular(r, s, Field::generic());
    // f_{2,1} needs r >= 2 and e~_{1,2} needs s >= 2; B_{1,1} has neither.
    std::vector<Idempotent> choices;
    if (r >= 2) choices.push_back(Idempotent::F21);
    if (s >= 2) choices.push_back(Idempotent::ETilde);
    for (auto choice : choices)
      for (const auto& blk : cb->blocks()) {
        ++reports;
        auto rep = schur_truncation_check(cb, blk.label, choice);
        const int want = blk.label.f == 0 ? 0 : cell_dim(r - 1, s - 1, {blk.label.f - 1, blk.label.lambda});
        const std::string tag = rs(r, s) + " " + to_string(choice) + " " + blk.label.to_string();
        o.expect(rep.rank == want, tag + " rank " + std::to_string(rep.rank));
        for (const auto& c : rep.checks.checks) o.expect(c.pass, tag + " " + c.name + " " + c.detail);
      }
    o.expect(static_cast<std::size_t>(left_ideal_dim(*cb->engine())) == factorial(r + s - 1), rs(r, s) + " B e_1");
  }
  o.detail << reports << " truncations";
}

// --- 11 --------------------------------------------------------------------

void simple_classification(Outcome& o) {
  int cases = 0;
  for (const char* spec : {"generic", "delta-zero", "gfp:7,3,2"}) {
    auto F = Field::parse(spec);
    for (auto [r, s] : sizes(4)) {
      ++cases;
      auto cb = cellular(r, s, F);
      std::set<std::string> closed, gram;
      for (const auto& l : classify_simples(r, s, F)) closed.insert(l.to_string());
      // Labels with nonzero Gram rank, read directly from the Gram matrices.
      for (const auto& blk : cb->blocks())
        if (CellModule(cb, blk.label).gram().rank() > 0) gram.insert(blk.label.to_string());
      o.expect(closed == gram, std::string(spec) + " " + rs(r, s) + " closed {" + labels_to_string(closed) +
                                   "} gram {" + labels_to_string(gram) + "}");
    }
  }
  o.expect(quantum_characteristic(*Field::parse("gfp:7,3,2")) == QuantumChar{3}, "gfp:7,3,2 has e = 3");
  o.detail << cases << " (field, r, s) cases";
}

// --- 12 --------------------------------------------------------------------

void submodule_witnesses(Outcome& o) {
  int points = 0, hits = 0;
  for (auto [r, s] : {std::pair{2, 2}, std::pair{3, 2}})
    for (auto kind : {ArcKind::Row, ArcKind::Column}) {
      const int target = kind == ArcKind::Row ? r + s - 2 : -(r + s - 2);
      for (int a = -(r + s); a <= r + s; ++a)
        for (int sign : {1, -1}) {
          ++points;
          auto w = submodule_witness(cellular(r, s, Field::one_variable(a, sign)), kind);
          const bool on_locus = a == target;
          hits += on_locus;
          const std::string tag = rs(r, s) + " " + to_string(kind) + " rho=" + (sign > 0 ? "" : "-") + "q^" + std::to_string(a);
          o.expect(w.v_nonzero, tag + " v is zero");
          o.expect(w.annihilated == on_locus, tag + " annihilation");
        }
      auto gen = submodule_witness(cellular(r, s, Field::generic()), kind);
      o.expect(gen.v_nonzero && !gen.annihilated, rs(r, s) + " " + to_string(kind) + " generic");
    }
  o.detail << points << " points, " << hits << " on the locus";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"dimension counts", dimension_counts},
      {"relation suite", relation_suite},
      {"coset counts", coset_counts},
      {"cell datum", cell_datum},
      {"central element", central_element_checks},
      {"one-arc Gram zero loci", zero_loci},
      {"semisimplicity criterion", semisimplicity_grid},
      {"delta = 0 Gram determinants", delta_zero_determinants},
      {"branching", branching},
      {"Schur truncation", schur_truncation},
      {"simple-module classification", simple_classification},
      {"submodule witnesses", submodule_witnesses},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    failed += !o.pass;
    std::printf("[%s] %2zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
