#pragma once

#include "qwb/engine.hpp"
#include "qwb/hecke.hpp"

#include <string>
#include <vector>

namespace qwb {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  int failures() const;
  void add(std::string name, bool pass, std::string detail = {});
};

/// Every defining relation, plus the derived identities for the e_i (commuting
/// with higher generators, e_i^2 = delta e_i, the rho^{+-1} sandwich
/// identities, e_i e_{i+1} identities and the two braid-like identities that
/// relate e_i g_i^{-1} g*_i e_i to its g and g* multiples), evaluated in the
/// engine.
CheckReport verify_relations(const AlgebraEngine& eng);

/// Images of the generators of a source algebra. The source is B_{r,s} when
/// both sizes are positive; when one size is zero the source is the Hecke
/// algebra of the other side and there is no e_1. images is indexed by the
/// source generator number (Generators of (max(r,1), max(s,1))), with
/// has_e false when e_1 is absent.
template <class T>
struct GeneratorMap {
  std::string name;
  int source_r = 0;
  int source_s = 0;
  bool has_e = true;
  std::vector<T> images;
};

/// e_{f+1} -> e_1, g_{f+i} -> g_i, g*_{f+j} -> g*_j read backwards: images of
/// the generators of B_{r-f, s-f} inside B_{r,s}.
GeneratorMap<AlgebraElement> shift_map(const AlgebraEngine& eng, int f);
/// B_{r-1,s} into B_{r,s} through g_1^{-1} e_1 g_1 and g_{i+1}, g*_j (or the
/// starred version B_{r,s-1} through (g*_1)^{-1} e_1 g*_1).
GeneratorMap<AlgebraElement> shifted_embedding(const AlgebraEngine& eng, bool starred);
/// B_{r-1,s} into B_{r,s} on the strands other than the last unstarred one:
/// e_1, g_i (i <= r-2) and g*_j map to themselves (starred: B_{r,s-1}).
GeneratorMap<AlgebraElement> natural_embedding(const AlgebraEngine& eng, bool starred);
/// B_{s,r} into B_{r,s}: e_1 -> e_1, g_i -> g*_i, g*_j -> g_j.
GeneratorMap<AlgebraElement> swap_map(const AlgebraEngine& eng);
/// B_{r-f,s-f} onto H_{r-f} (x) H_{s-f}, realized as the parabolic subalgebra of
/// H_{r+s-2f}: e_1 -> 0, g_i -> g_i, g*_j -> g_{r-f+j}.
GeneratorMap<HeckeElement> hecke_quotient(int r, int s, int f, const FieldPtr& field);

/// Image of an element of the source engine: each basis word becomes the
/// product of the images of its letters.
AlgebraElement apply_map(const GeneratorMap<AlgebraElement>& map, const AlgebraElement& x);

/// Checks every defining relation of the source on the images.
CheckReport check_homomorphism(const GeneratorMap<AlgebraElement>& map, const AlgebraEngine& target);
CheckReport check_homomorphism(const GeneratorMap<HeckeElement>& map, const FieldPtr& field);

}  // namespace qwb
