#pragma once

#include "qwb/combinat.hpp"
#include "qwb/engine.hpp"

namespace qwb {

/// g_{i,j} = g_{i-1} ... g_j for i > j, g_i ... g_{j-1} for i < j, 1 for i = j;
/// starred uses g*.
Word g_range(const Generators& gens, int i, int j, bool starred = false);
/// Inverse of a word: reversed with every letter inverted (e_1 is rejected).
Word inverse_word(const Word& w);

/// e_{i,j} = g_{1,i}^{-1} g*_{j,1} e_1 g_{1,i} (g*_{j,1})^{-1}.
AlgebraElement e_ij(const AlgebraEngine& eng, int i, int j);
/// The sigma-fixed variant g_{1,i}^{-1} g*_{j,1} e_1 g*_{1,j} g_{i,1}^{-1}.
AlgebraElement e_bar(const AlgebraEngine& eng, int i, int j);
/// e_i = e_{i,i}, 1 <= i <= min(r, s).
AlgebraElement e_i(const AlgebraEngine& eng, int i);
/// e^f = e_1 ... e_f; e^0 = 1.
AlgebraElement e_power(const AlgebraEngine& eng, int f);
/// rho^{-1} e_1 g*_1 (needs s >= 2) and rho^{-1} e_1 g_1 (needs r >= 2).
AlgebraElement e_tilde12(const AlgebraEngine& eng);
AlgebraElement f21(const AlgebraEngine& eng);
/// g_d for a coset representative d of D^f_{r,s}.
Word coset_word(const Generators& gens, const CosetRep& d);
AlgebraElement g_coset(const AlgebraEngine& eng, const CosetRep& d);

/// The central element c_{r,s}: all e-bar terms, minus rho^{-1} times the
/// inverse Murphy-type terms of the g side, minus rho times the Murphy-type
/// terms of the g* side.
AlgebraElement central_element(const AlgebraEngine& eng);

}  // namespace qwb
