#include "qwb/combinat.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace qwb;

namespace {

// Number of standard tableaux by the removable-node recursion.
std::size_t count_by_branching(const Partition& lam, std::map<Partition, std::size_t>& memo) {
  if (lam.size() <= 1) return 1;
  auto it = memo.find(lam);
  if (it != memo.end()) return it->second;
  std::size_t total = 0;
  for (const Node& p : nodes_addable_removable(lam).removable) total += count_by_branching(remove_node(lam, p), memo);
  return memo[lam] = total;
}

// Membership in S_{r-f} x G_f x S_{s-f}: both factors preserve {1..f} and agree there.
bool in_young_diagonal(const Permutation& w, const Permutation& ws, int f) {
  for (int k = 1; k <= f; ++k)
    if (w(k) > f || ws(k) != w(k)) return false;
  return true;
}

}  // namespace

TEST(Permutation, RankRoundTripAndProducts) {
  for (int n = 0; n <= 5; ++n)
    for (std::size_t k = 0; k < factorial(n); ++k) {
      Permutation w = Permutation::unrank(n, k);
      EXPECT_EQ(w.rank(), k);
      EXPECT_EQ(Permutation::from_word(n, w.reduced_word()), w);
      EXPECT_EQ(static_cast<int>(w.reduced_word().size()), w.length());
      EXPECT_TRUE((w * w.inverse()).is_identity());
    }
  // (i)(s_1 s_2) = ((i)s_1)s_2
  Permutation p = Permutation::simple(3, 1) * Permutation::simple(3, 2);
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(p(2), 1);
  EXPECT_EQ(p(3), 2);
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("[3,1,1]").to_string(), "[3,1,1]");
  EXPECT_EQ(Partition::parse("[]").size(), 0);
  EXPECT_THROW(Partition::parse("[1,2]"), CombinatError);
  EXPECT_THROW(Partition::parse("[1,"), CombinatError);
  Bipartition b = Bipartition::parse("[[2,1],[1]]");
  EXPECT_EQ(b.first, Partition({2, 1}));
  EXPECT_EQ(b.second, Partition({1}));
  EXPECT_EQ(b.to_string(), "[[2,1],[1]]");
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominance_ge(Partition({2}), Partition({1, 1})));
  EXPECT_FALSE(dominance_ge(Partition({1, 1}), Partition({2})));
  EXPECT_EQ(dominance_compare(Partition({3, 1, 1, 1}), Partition({2, 2, 2})), Order::Incomparable);
  CellLabel a{1, {Partition({1}), Partition({1, 1})}};
  CellLabel b{0, {Partition({2}), Partition({3})}};
  EXPECT_EQ(compare(a, b), Order::Greater);
  EXPECT_EQ(compare(b, a), Order::Less);
}

TEST(Dominance, PartialOrderAxioms) {
  for (int n = 0; n <= 7; ++n) {
    auto ps = partitions(n);
    for (const auto& a : ps) {
      EXPECT_EQ(dominance_compare(a, a), Order::Equal);
      for (const auto& b : ps) {
        bool ab = dominance_ge(a, b), ba = dominance_ge(b, a);
        if (ab && ba) EXPECT_EQ(a, b);
        for (const auto& c : ps)
          if (ab && dominance_ge(b, c)) EXPECT_TRUE(dominance_ge(a, c));
      }
    }
  }
}

TEST(CellLabels, LinearExtension) {
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s) {
      auto labels = cell_labels(r, s);
      for (std::size_t x = 0; x < labels.size(); ++x)
        for (std::size_t y = x + 1; y < labels.size(); ++y) {
          EXPECT_TRUE(linear_before(labels[x], labels[y]));
          EXPECT_NE(compare(labels[x], labels[y]), Order::Less);
        }
    }
}

TEST(Tableaux, Enumeration) {
  EXPECT_EQ(std_tableaux(Partition({4})).size(), 1u);
  EXPECT_EQ(std_tableaux(Partition({2, 1})).size(), 2u);
  EXPECT_EQ(std_tableaux(Bipartition{Partition({1}), Partition({1})}).size(), 1u);
  std::map<Partition, std::size_t> memo;
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : partitions(n)) {
      auto ts = std_tableaux(lam, 3);
      EXPECT_EQ(ts.size(), count_by_branching(lam, memo)) << lam.to_string();
      std::set<std::string> distinct;
      for (const auto& t : ts) {
        EXPECT_TRUE(t.is_standard());
        distinct.insert(t.to_string());
      }
      EXPECT_EQ(distinct.size(), ts.size());
      if (!ts.empty()) EXPECT_EQ(ts.front(), Tableau::row_reading(lam, 3));
    }
}

TEST(Tableaux, DPermExample) {
  Partition lam({4, 3, 1});
  Tableau tl = Tableau::column_reading(lam);
  EXPECT_EQ(tl.to_string(), "1,4,6,8/2,5,7/3");
  EXPECT_EQ(d_perm(tl), Permutation::from_images({1, 4, 6, 8, 2, 5, 7, 3}));
  EXPECT_TRUE(d_perm(Tableau::row_reading(lam)).is_identity());
}

TEST(Tableaux, DPermActionOracle) {
  std::mt19937 rng(7);
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : partitions(n)) {
      auto ts = std_tableaux(lam, 2);
      for (int trial = 0; trial < 5; ++trial) {
        const Tableau& t = ts[rng() % ts.size()];
        Permutation d = d_perm(t);
        EXPECT_EQ(Tableau::row_reading(lam, 2).acted(d), t);
        EXPECT_EQ(Permutation::from_word(n, d.reduced_word()), d);
      }
    }
}

TEST(Nodes, DiagramScan) {
  auto empty = nodes_addable_removable(Partition());
  EXPECT_TRUE(empty.removable.empty());
  ASSERT_EQ(empty.addable.size(), 1u);
  EXPECT_EQ(empty.addable[0], (Node{1, 1, 1}));

  auto nl = nodes_addable_removable(Partition({2, 1}));
  EXPECT_EQ(nl.removable, (std::vector<Node>{{2, 1, 1}, {1, 2, 1}}));
  EXPECT_EQ(nl.addable, (std::vector<Node>{{1, 3, 1}, {2, 2, 1}, {3, 1, 1}}));

  auto row = nodes_addable_removable(Partition({5}));
  EXPECT_EQ(row.removable, (std::vector<Node>{{1, 5, 1}}));
  EXPECT_EQ(row.addable, (std::vector<Node>{{1, 6, 1}, {2, 1, 1}}));
}

TEST(Nodes, OrderIsDominanceDecreasing) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& lam : partitions(n)) {
      auto nl = nodes_addable_removable(lam);
      for (std::size_t k = 0; k + 1 < nl.removable.size(); ++k)
        EXPECT_EQ(dominance_compare(remove_node(lam, nl.removable[k]), remove_node(lam, nl.removable[k + 1])),
                  Order::Greater);
      for (std::size_t k = 0; k + 1 < nl.addable.size(); ++k)
        EXPECT_EQ(dominance_compare(add_node(lam, nl.addable[k]), add_node(lam, nl.addable[k + 1])), Order::Greater);
    }
}

TEST(CosetReps, CountsAndExamples) {
  EXPECT_EQ(coset_reps(2, 1, 1).size(), 2u);
  auto id = coset_reps(3, 2, 0);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_TRUE(id[0].word().empty());
  EXPECT_EQ(coset_reps(2, 2, 2).size(), 2u);
  EXPECT_THROW(coset_reps(2, 1, 2), CombinatError);
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; s <= 5; ++s)
      for (int f = 0; f <= std::min(r, s); ++f)
        EXPECT_EQ(coset_reps(r, s, f).size(), binomial(r, f) * binomial(s, f) * factorial(f));
}

TEST(CosetReps, BruteForceCosetPartition) {
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= 4; ++s)
      for (int f = 0; f <= std::min(r, s); ++f) {
        auto reps = coset_reps(r, s, f);
        std::size_t group = factorial(r) * factorial(s);
        std::size_t sub = factorial(r - f) * factorial(f) * factorial(s - f);
        EXPECT_EQ(reps.size(), group / sub);
        for (std::size_t a = 0; a < reps.size(); ++a)
          for (std::size_t b = a + 1; b < reps.size(); ++b) {
            Permutation w = reps[b].unstarred() * reps[a].unstarred().inverse();
            Permutation ws = reps[b].starred() * reps[a].starred().inverse();
            EXPECT_FALSE(in_young_diagonal(w, ws, f)) << r << s << f << " " << reps[a].to_string() << " "
                                                      << reps[b].to_string();
          }
      }
}

TEST(Cellular, DimensionBookkeeping) {
  for (int r = 0; r <= 7; ++r)
    for (int s = 0; r + s <= 7; ++s) {
      std::size_t total = 0;
      for (const auto& lab : cell_labels(r, s)) {
        std::size_t d = std_tableaux(lab.lambda, lab.f).size() * coset_reps(r, s, lab.f).size();
        total += d * d;
      }
      EXPECT_EQ(total, factorial(r + s)) << r << "," << s;
    }
}

TEST(Scalars, ContentScalar) {
  auto F = Field::generic();
  EXPECT_TRUE(content_scalar({3, 3, 1}, F).is_zero());
  EXPECT_TRUE(content_scalar({2, 2, 2}, F).is_zero());
  EXPECT_EQ(content_scalar({1, 2, 1}, F), FieldElement::parse(F, "-q"));
  EXPECT_EQ(content_scalar({1, 2, 2}, F), FieldElement::parse(F, "-q^-1"));
  EXPECT_EQ(content_scalar({2, 1, 1}, F), FieldElement::parse(F, "q^-1"));
}

TEST(Scalars, ERestricted) {
  QuantumChar inf{};
  EXPECT_TRUE(e_restricted(Bipartition{Partition({9}), Partition({4})}, inf));
  EXPECT_FALSE(e_restricted(Partition({2}), QuantumChar{2}));
  EXPECT_TRUE(e_restricted(Bipartition{Partition({2, 1}), Partition({1, 1})}, QuantumChar{3}));
}

TEST(Truncation, SemistandardCountsOnAllSmallCases) {
  int equal_cases = 0, strict_cases = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions(n)) {
      if (mu.part(mu.length()) != 1) continue;
      for (const auto& lam : partitions(n)) {
        bool witnessed = false, plus_node = false, any = false;
        for (const auto& s : std_tableaux(lam)) {
          Tableau S = type_tableau(s, mu);
          if (!S.is_semistandard()) continue;
          TruncationCheck c = semistandard_and_truncation_check(lam, mu, S, s);
          EXPECT_TRUE(c.verdict) << lam.to_string() << " " << mu.to_string() << " " << s.to_string();
          (c.equal ? equal_cases : strict_cases)++;
          witnessed = witnessed || c.equal;
          plus_node = c.lambda_is_nu_plus_node;
          any = true;
        }
        // lambda = nu plus a node exactly when some witness restricts to nu.
        if (any) EXPECT_EQ(witnessed, plus_node) << lam.to_string() << " " << mu.to_string();
      }
    }
  EXPECT_GT(equal_cases, 0);
  EXPECT_GT(strict_cases, 0);
}

TEST(Truncation, EqualityNeedsTheRightWitness) {
  Partition lam({2, 1, 1, 1, 1}), mu({1, 1, 1, 1, 1, 1});
  Tableau strict({{1, 2}, {3}, {4}, {5}, {6}});
  auto c = semistandard_and_truncation_check(lam, mu, type_tableau(strict, mu), strict);
  EXPECT_TRUE(c.lambda_is_nu_plus_node);
  EXPECT_FALSE(c.equal);
  EXPECT_TRUE(c.verdict);
  Tableau exact({{1, 6}, {2}, {3}, {4}, {5}});
  c = semistandard_and_truncation_check(lam, mu, type_tableau(exact, mu), exact);
  EXPECT_TRUE(c.equal);
  EXPECT_EQ(c.shape_before, Partition({1, 1, 1, 1, 1}));
}

TEST(Truncation, Preconditions) {
  Partition lam({2, 1}), mu({2, 1});
  Tableau s = Tableau::row_reading(lam);
  Tableau S = type_tableau(s, mu);
  EXPECT_TRUE(semistandard_and_truncation_check(lam, mu, S, s).verdict);
  Tableau bad({{2, 1}, {1}});
  EXPECT_THROW(semistandard_and_truncation_check(lam, mu, bad, s), CombinatError);
  EXPECT_THROW(semistandard_and_truncation_check(lam, Partition({3}), S, s), CombinatError);
}
