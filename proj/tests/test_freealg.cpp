#include <gtest/gtest.h>

#include <random>

#include "ckq/errors.hpp"
#include "ckq/freealg.hpp"
#include "ckq/structures.hpp"
#include "helpers.hpp"

using namespace ckq;

namespace {

constexpr int kJc = 2;

NCPoly t(int r, int c) { return NCPoly::symbol(sym(Family::t, r, c), kJc); }
CKScalar one() { return CKScalar::constant(1, kJc); }

NCPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 2), idx(1, 3), count(1, 3);
  NCPoly p;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    Word w;
    for (int s = len(rng); s > 0; --s) w.push_back(sym(Family::t, idx(rng), idx(rng)));
    p.add_term(w, ckq::test::random_scalar(rng, kJc, 2));
  }
  return p;
}

}  // namespace

TEST(GenSymbol, NamesRoundTrip) {
  for (const char* name : {"t12", "tt21", "u33", "a13", "l12", "lt13", "lp11", "lm22"})
    EXPECT_EQ(GenSymbol::parse(name).name(), name);
  EXPECT_THROW(GenSymbol::parse("x12"), PreconditionViolation);
}

TEST(NCPoly, FreeAlgebraBasics) {
  EXPECT_NE(t(1, 1) * t(1, 2), t(1, 2) * t(1, 1));
  NCPoly unit = NCPoly::constant(one());
  EXPECT_EQ(t(1, 2) * unit, t(1, 2));
  NCPoly lhs = (t(1, 1) + t(2, 2)) * t(1, 1);
  NCPoly rhs = NCPoly::monomial({sym(Family::t, 1, 1), sym(Family::t, 1, 1)}, one()) +
               NCPoly::monomial({sym(Family::t, 2, 2), sym(Family::t, 1, 1)}, one());
  EXPECT_EQ(lhs, rhs);
}

TEST(NCPoly, CancellationDropsTerms) {
  NCPoly p = t(1, 1) - t(1, 1);
  EXPECT_TRUE(p.is_zero());
}

TEST(NCPoly, MultiplicationIsAssociative) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    NCPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Matrix, KronAndFlip) {
  EXPECT_EQ(kron(identity(3, kJc), identity(3, kJc)), identity(9, kJc));
  RingMatrix p = permute_P(3, kJc);
  EXPECT_EQ(p * p, identity(9, kJc));
  // P(e_1 ⊗ e_2) = e_2 ⊗ e_1: column (1,2) has its one in row (2,1)
  EXPECT_EQ(p(3, 1), one());
}

TEST(Matrix, EmbeddingsMultiplyToKron) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    RingMatrix a = ckq::test::random_matrix(rng, 3, 3, kJc);
    RingMatrix b = ckq::test::random_matrix(rng, 3, 3, kJc);
    EXPECT_EQ(embed_left(a, 3) * embed_right(b, 3), kron(a, b));
  }
}

TEST(Matrix, TransposeOfKron) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    RingMatrix a = ckq::test::random_matrix(rng, 3, 2, kJc);
    RingMatrix b = ckq::test::random_matrix(rng, 2, 3, kJc);
    EXPECT_EQ(transpose(kron(a, b)), kron(transpose(a), transpose(b)));
  }
}

TEST(Matrix, DimensionMismatch) {
  EXPECT_THROW(identity(3, kJc) * identity(2, kJc), DimensionMismatch);
}

TEST(TriInverse, Examples) {
  EXPECT_EQ(tri_inverse(identity(9, kJc)), identity(9, kJc));
  RingMatrix r = r_q(3);
  EXPECT_EQ(r * tri_inverse(r), identity(9, kJc));
  RingMatrix dense(2, 2);
  dense(0, 0) = one();
  dense(0, 1) = one();
  dense(1, 0) = one();
  dense(1, 1) = one();
  EXPECT_THROW(tri_inverse(dense), NotTriangular);
  RingMatrix bad_diag = identity(2, kJc);
  bad_diag(0, 0) = one() + CKScalar::v_power(1, kJc);
  EXPECT_THROW(tri_inverse(bad_diag), NotAUnit);
}

TEST(TriInverse, IsAnInvolution) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    RingMatrix m = ckq::test::random_matrix(rng, 4, 4, kJc);
    for (int r = 0; r < 4; ++r) {
      for (int c = r + 1; c < 4; ++c) m(r, c) = CKScalar(kJc);
      m(r, r) = CKScalar::e_power(e(rng), kJc);
    }
    RingMatrix inv = tri_inverse(m);
    EXPECT_EQ(m * inv, identity(4, kJc));
    EXPECT_EQ(tri_inverse(inv), m);
  }
}

TEST(Determinant, AdjugateInverse) {
  RingMatrix c = c_q(4);
  EXPECT_EQ(c * adjugate_inverse(c), identity(4, 3));
  RingMatrix cp = c_prime(3);
  EXPECT_EQ(cp * adjugate_inverse(cp), identity(3, kJc));
}

TEST(Canonicalize, Examples) {
  NCPoly comm = t(1, 1) * t(1, 2) - t(1, 2) * t(1, 1);
  RelationSet a = canonicalize_relations({{NCPoly(), "zero"}, {comm, "p"}, {comm, "p again"}});
  ASSERT_EQ(a.size(), 1u);
  RelationSet b = canonicalize_relations({{comm * CKScalar::constant(2, kJc), "2p"}});
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.items().front().poly, comm);
  RelationSet c = canonicalize_relations({{comm, "p"}, {-comm, "-p"}});
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(a, b);
}

TEST(Canonicalize, UnitLeadOnlyIsNormalized) {
  // lead coefficient 1 + v is not a unit: only the invertible part of its
  // least term may be divided out
  NCPoly p = t(1, 1) * (CKScalar::constant(2, kJc) + CKScalar::v_power(1, kJc)) + t(1, 1) * t(1, 2);
  RelationSet rs = canonicalize_relations({{p, "p"}});
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs.items().front().poly.coefficient({sym(Family::t, 1, 1)}),
            CKScalar::constant(1, kJc) + CKScalar::v_power(1, kJc) * BaseScalar::rational(1, 2));
}

TEST(Canonicalize, Idempotent) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Relation> rs;
    for (int k = 0; k < 5; ++k) rs.push_back({random_poly(rng), "r" + std::to_string(k)});
    RelationSet once = canonicalize_relations(rs);
    RelationSet twice = canonicalize_relations(once.items());
    EXPECT_EQ(once, twice);
  }
}

TEST(Canonicalize, ClearsNegativeJPowers) {
  NCPoly p = t(1, 2) * ckq::test::jmon({-1, 0}) + t(2, 1);
  RelationSet rs = canonicalize_relations({{p, "p"}});
  for (const auto& [w, c] : rs.items().front().poly.terms())
    for (const auto& [m, b] : c.terms()) EXPECT_GE(m.j[0], 0);
}

TEST(Reduce, SpanMembership) {
  NCPoly a = t(1, 1) * t(1, 2) - t(1, 2) * t(1, 1);
  NCPoly b = t(2, 2) * t(1, 1) - t(1, 1) * t(2, 2);
  RelationSet basis = canonicalize_relations({{a, "a"}, {b, "b"}});
  NCPoly combo = a * CKScalar::e_power(2, kJc) - b * CKScalar::constant(3, kJc);
  EXPECT_TRUE(reduce(combo, basis).is_zero());
  EXPECT_FALSE(reduce(combo + t(1, 3), basis).is_zero());
  EXPECT_TRUE(equivalent(basis, canonicalize_relations({{a + b, "s"}, {a - b, "d"}})));
}
