#include "qwb/special.hpp"

#include <algorithm>

namespace qwb {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw EngineError(msg);
}

Token letter(const Generators& gens, int idx, bool starred, bool inverse = false) {
  return {starred ? gens.gs(idx) : gens.g(idx), inverse};
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

Word g_range(const Generators& gens, int i, int j, bool starred) {
  const int n = starred ? gens.s : gens.r;
  require(i >= 1 && j >= 1 && i <= n && j <= n, "g_{i,j}: index out of range");
  Word w;
  if (i > j)
    for (int a = i - 1; a >= j; --a) w.push_back(letter(gens, a, starred));
  else
    for (int a = i; a < j; ++a) w.push_back(letter(gens, a, starred));
  return w;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& t : out) {
    require(t.gen != 0, "e_1 is not invertible");
    t.inverse = !t.inverse;
  }
  return out;
}

AlgebraElement e_ij(const AlgebraEngine& eng, int i, int j) {
  const auto& G = eng.generators();
  require(i >= 1 && i <= eng.r() && j >= 1 && j <= eng.s(), "e_{i,j}: index out of range");
  Word a = g_range(G, 1, i), b = g_range(G, j, 1, true);
  return eng.word(concat({inverse_word(a), b, {Token{G.e(), false}}, a, inverse_word(b)}));
}

AlgebraElement e_bar(const AlgebraEngine& eng, int i, int j) {
  const auto& G = eng.generators();
  require(i >= 1 && i <= eng.r() && j >= 1 && j <= eng.s(), "e-bar_{i,j}: index out of range");
  return eng.word(concat({inverse_word(g_range(G, 1, i)), g_range(G, j, 1, true), {Token{G.e(), false}},
                          g_range(G, 1, j, true), inverse_word(g_range(G, i, 1))}));
}

AlgebraElement e_i(const AlgebraEngine& eng, int i) {
  require(i >= 1 && i <= std::min(eng.r(), eng.s()), "e_i: index out of range");
  return e_ij(eng, i, i);
}

AlgebraElement e_power(const AlgebraEngine& eng, int f) {
  require(f >= 0 && f <= std::min(eng.r(), eng.s()), "e^f: f out of range");
  AlgebraElement x = eng.one();
  for (int k = 1; k <= f; ++k) x = x * e_i(eng, k);
  return x;
}

AlgebraElement e_tilde12(const AlgebraEngine& eng) {
  require(eng.s() >= 2, "e-tilde_{1,2} needs s >= 2");
  const Field& F = *eng.field();
  return (eng.e1() * eng.gs(1)).scaled(F.inv(F.rho()));
}

AlgebraElement f21(const AlgebraEngine& eng) {
  require(eng.r() >= 2, "f_{2,1} needs r >= 2");
  const Field& F = *eng.field();
  return (eng.e1() * eng.g(1)).scaled(F.inv(F.rho()));
}

Word coset_word(const Generators& gens, const CosetRep& d) {
  require(d.r == gens.r && d.s == gens.s, "coset representative for a different algebra");
  Word w;
  for (const auto& [side, idx] : d.word()) w.push_back(letter(gens, idx, side == 2));
  return w;
}

AlgebraElement g_coset(const AlgebraEngine& eng, const CosetRep& d) { return eng.word(coset_word(eng.generators(), d)); }

AlgebraElement central_element(const AlgebraEngine& eng) {
  const auto& G = eng.generators();
  const Field& F = *eng.field();
  AlgebraElement c = eng.zero();
  for (int i = 1; i <= eng.r(); ++i)
    for (int j = 1; j <= eng.s(); ++j) c = c + e_bar(eng, i, j);
  AlgebraElement x = eng.zero();
  for (int i = 2; i <= eng.r(); ++i)
    for (int j = 1; j < i; ++j)
      x = x + eng.word(concat({inverse_word(g_range(G, j, i)), inverse_word(g_range(G, i, j + 1))}));
  AlgebraElement y = eng.zero();
  for (int i = 2; i <= eng.s(); ++i)
    for (int j = 1; j < i; ++j) y = y + eng.word(concat({g_range(G, i, j, true), g_range(G, j + 1, i, true)}));
  return c - x.scaled(F.inv(F.rho())) - y.scaled(F.rho());
}

}  // namespace qwb
