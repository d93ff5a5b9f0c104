#include "qwb/engine.hpp"
#include "qwb/relations.hpp"
#include "qwb/special.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <random>

using namespace qwb;

namespace {

AlgebraElement random_element(const EnginePtr& eng, std::mt19937& rng, int terms = 4) {
  const Field& F = *eng->field();
  AlgebraElement x = eng->zero();
  for (int k = 0; k < terms; ++k) {
    int idx = static_cast<int>(rng() % eng->dim());
    x = x + eng->basis(idx).scaled(F.from_int(static_cast<long long>(rng() % 7) - 3));
  }
  return x;
}

// Span of the subalgebra generated by the images, by closure under right multiplication.
std::vector<SparseVec> subalgebra_span(const AlgebraEngine& eng, const std::vector<AlgebraElement>& gens) {
  EchelonBasis ech(eng.field(), eng.dim());
  std::vector<AlgebraElement> queue{eng.one()};
  ech.insert(eng.one().coords());
  std::vector<SparseVec> out{eng.one().coords()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      AlgebraElement y = queue[k] * g;
      if (ech.insert(y.coords())) {
        queue.push_back(y);
        out.push_back(y.coords());
      }
    }
  return out;
}

}  // namespace

TEST(Engine, DimensionsOverTheGenericField) {
  auto F = Field::generic();
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) EXPECT_EQ(AlgebraEngine::build(r, n - r, F)->dim(), factorial(n)) << r << "," << n - r;
}

TEST(Engine, SmallestAlgebraHasBasisOneAndE) {
  auto eng = AlgebraEngine::build(1, 1, Field::generic());
  ASSERT_EQ(eng->dim(), 2);
  EXPECT_TRUE(eng->basis_word(0).empty());
  EXPECT_EQ(eng->basis_word(1), std::vector<int>{0});
  EXPECT_EQ(central_element(*eng), eng->e1());
}

TEST(Engine, DefiningProducts) {
  auto eng = AlgebraEngine::build(2, 2, Field::generic());
  const auto e = eng->e1();
  EXPECT_EQ(e * e, e.scaled(eng->delta()));
  EXPECT_EQ(e * eng->g(1) * e, e.scaled(eng->rho()));
  EXPECT_EQ(eng->g(1) * eng->g(1, true), eng->one());
  EXPECT_EQ(eng->word("g*1^-1 g*1"), eng->one());
}

TEST(Engine, SigmaIsAnAntiInvolution) {
  auto eng = AlgebraEngine::build(3, 2, Field::generic());
  EXPECT_EQ(eng->sigma(eng->word("g1 g2")), eng->word("g2 g1"));
  for (int f = 0; f <= 2; ++f) EXPECT_EQ(eng->sigma(e_power(*eng, f)), e_power(*eng, f));
  std::mt19937 rng(3);
  for (int k = 0; k < 50; ++k) {
    auto x = random_element(eng, rng), y = random_element(eng, rng);
    EXPECT_EQ(eng->sigma(eng->sigma(x)), x);
    EXPECT_EQ(eng->sigma(x * y), eng->sigma(y) * eng->sigma(x));
  }
}

TEST(Engine, Associativity) {
  std::mt19937 rng(5);
  for (auto [F, r, s] : {std::tuple{Field::generic(), 2, 2}, std::tuple{Field::prime(101, 7, 5), 3, 2},
                         std::tuple{Field::prime(101, 7, 5), 2, 3}}) {
    auto eng = AlgebraEngine::build(r, s, F);
    for (int k = 0; k < 100; ++k) {
      auto x = random_element(eng, rng), y = random_element(eng, rng), z = random_element(eng, rng);
      ASSERT_EQ((x * y) * z, x * (y * z));
    }
  }
}

TEST(Engine, RelationSuitePasses) {
  for (auto [spec, r, s] : {std::tuple{"generic", 2, 2}, std::tuple{"generic", 3, 2}, std::tuple{"generic", 2, 3},
                            std::tuple{"gfp:101,7,5", 3, 3}, std::tuple{"q-power:0", 4, 2}}) {
    auto eng = AlgebraEngine::build(r, s, Field::parse(spec));
    CheckReport rep = verify_relations(*eng);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << spec << " (" << r << "," << s << ") " << c.name << " " << c.detail;
  }
}

TEST(Engine, RelationSuiteNamesTheTwoDenseRelations) {
  auto rep = verify_relations(*AlgebraEngine::build(2, 2, Field::generic()));
  int seen = 0;
  for (const auto& c : rep.checks)
    if (c.name == "m" || c.name == "n" || c.name == "e_i g_i g*_i^-1 e_i = e_i e_i+1[i=1]") ++seen;
  EXPECT_EQ(seen, 3);
}

TEST(Engine, SpecialElements) {
  auto eng = AlgebraEngine::build(3, 2, Field::generic());
  EXPECT_EQ(e_ij(*eng, 1, 1), eng->e1());
  auto et = e_tilde12(*eng), f = f21(*eng);
  EXPECT_EQ(et * et, et);
  EXPECT_EQ(f * f, f);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 2; ++j) EXPECT_EQ(eng->sigma(e_bar(*eng, i, j)), e_bar(*eng, i, j));
  EXPECT_THROW(e_ij(*eng, 4, 1), EngineError);
  EXPECT_THROW(e_i(*eng, 3), EngineError);
  EXPECT_THROW(f21(*AlgebraEngine::build(1, 2, Field::generic())), EngineError);
}

TEST(Engine, CentralElementCommutes) {
  auto F = Field::generic();
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      auto eng = AlgebraEngine::build(r, n - r, F);
      auto c = central_element(*eng);
      EXPECT_EQ(eng->sigma(c), c);
      for (int gen = 0; gen < eng->generators().count(); ++gen) {
        Token t{gen, false};
        EXPECT_EQ(c.times(t), c.left_times(t)) << r << "," << n - r << " " << eng->generators().name(gen);
      }
    }
}

TEST(Engine, SubalgebraMapsAreHomomorphisms) {
  auto F = Field::generic();
  auto eng = AlgebraEngine::build(2, 2, F);
  for (int f = 0; f <= 2; ++f) EXPECT_TRUE(check_homomorphism(shift_map(*eng, f), *eng).all_pass()) << f;
  EXPECT_TRUE(check_homomorphism(shifted_embedding(*eng, false), *eng).all_pass());
  EXPECT_TRUE(check_homomorphism(shifted_embedding(*eng, true), *eng).all_pass());
  auto top = shift_map(*eng, 2);
  EXPECT_EQ(top.source_r, 0);
  EXPECT_TRUE(check_homomorphism(top, *eng).checks.empty());  // the ground field
  auto big = AlgebraEngine::build(3, 2, F);
  EXPECT_TRUE(check_homomorphism(shift_map(*big, 1), *big).all_pass());
  EXPECT_TRUE(check_homomorphism(shift_map(*big, 2), *big).all_pass());
  EXPECT_TRUE(check_homomorphism(shifted_embedding(*big, false), *big).all_pass());
  for (int f = 0; f <= 2; ++f) {
    auto q = hecke_quotient(3, 2, f, F);
    EXPECT_TRUE(check_homomorphism(q, F).all_pass());
    if (q.has_e) EXPECT_TRUE(q.images[0].is_zero());
  }
}

TEST(Engine, ShiftedSubalgebrasHaveTheRightDimension) {
  auto eng = AlgebraEngine::build(3, 2, Field::prime(101, 7, 5));
  EXPECT_EQ(subalgebra_span(*eng, shift_map(*eng, 1).images).size(), 6u);  // B_{2,1}
  EXPECT_EQ(subalgebra_span(*eng, shifted_embedding(*eng, false).images).size(), 24u);  // B_{2,2}
}

TEST(Engine, NaturalEmbeddingIsInjective) {
  auto eng = AlgebraEngine::build(3, 2, Field::prime(101, 7, 5));
  for (bool starred : {false, true}) {
    auto map = natural_embedding(*eng, starred);
    EXPECT_TRUE(check_homomorphism(map, *eng).all_pass());
    EXPECT_EQ(subalgebra_span(*eng, map.images).size(), 24u);
  }
  auto small = AlgebraEngine::build(2, 2, eng->field());
  auto map = natural_embedding(*eng, false);
  EXPECT_EQ(apply_map(map, small->word("g1 g*1 e1")), eng->word("g1 g*1 e1"));
}

TEST(Engine, SwappingTheSidesIsAnIsomorphism) {
  auto F = Field::generic();
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      auto eng = AlgebraEngine::build(r, n - r, F);
      auto map = swap_map(*eng);
      EXPECT_TRUE(check_homomorphism(map, *eng).all_pass()) << r << "," << n - r;
      EXPECT_EQ(subalgebra_span(*eng, map.images).size(), factorial(n));
    }
}

TEST(Engine, IdealAndCornerDimensions) {
  auto F = Field::generic();
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      auto eng = AlgebraEngine::build(r, n - r, F);
      const auto e = eng->e1();
      std::vector<SparseVec> left_ideal, corner;
      for (int k = 0; k < eng->dim(); ++k) {
        left_ideal.push_back((eng->basis(k) * e).coords());
        corner.push_back((e * eng->basis(k) * e).coords());
      }
      EXPECT_EQ(sparse_rank(eng->field(), eng->dim(), left_ideal), static_cast<int>(factorial(n - 1)));
      // e_1 B e_1 = B(1) e_1.
      std::vector<SparseVec> sub;
      for (const auto& v : subalgebra_span(*eng, shift_map(*eng, 1).images)) sub.push_back(eng->multiply(v, e.coords()));
      const int rc = sparse_rank(eng->field(), eng->dim(), corner);
      EXPECT_EQ(rc, sparse_rank(eng->field(), eng->dim(), sub));
      std::vector<SparseVec> both = corner;
      both.insert(both.end(), sub.begin(), sub.end());
      EXPECT_EQ(sparse_rank(eng->field(), eng->dim(), both), rc);
    }
}

TEST(Engine, JsonRoundTrip) {
  auto eng = AlgebraEngine::build(2, 2, Field::generic());
  auto back = AlgebraEngine::from_json(eng->to_json());
  ASSERT_EQ(back->dim(), eng->dim());
  for (int gen = 0; gen < eng->generators().count(); ++gen) {
    EXPECT_EQ(back->right_matrix(gen), eng->right_matrix(gen));
    EXPECT_EQ(back->left_matrix(gen), eng->left_matrix(gen));
  }
  EXPECT_EQ(back->to_json(), eng->to_json());
}

TEST(Engine, Errors) {
  auto F = Field::generic();
  EXPECT_THROW(AlgebraEngine::build(3, 3, F), EngineError);
  EXPECT_THROW(AlgebraEngine::build(0, 2, F), EngineError);
  auto a = AlgebraEngine::build(2, 1, F), b = AlgebraEngine::build(1, 2, F);
  EXPECT_ANY_THROW(a->e1() * b->e1());
  EXPECT_THROW(parse_word(a->generators(), "g*1"), EngineError);
  EXPECT_THROW(parse_word(a->generators(), "e1^-1"), EngineError);
}
