#include <gtest/gtest.h>

#include <random>

#include "ckq/errors.hpp"
#include "ckq/structures.hpp"
#include "helpers.hpp"

using namespace ckq;
using ckq::test::epoly;
using ckq::test::jmon;

namespace {

constexpr int kJc = 2;
const BaseScalar kI = BaseScalar::i();

NCPoly gen(Family f, int r, int c, const CKScalar& coeff) { return NCPoly::symbol(sym(f, r, c), kJc) * coeff; }

}  // namespace

// the published 9x9 R-matrix typed in entry by entry, 1-based
RingMatrix golden_r3() {
  RingMatrix r(9, 9);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) r(a, b) = CKScalar(kJc);
  const CKScalar two_sinh = epoly({{1, 2}, {-1, -2}}, kJc);
  auto set = [&](int a, int b, CKScalar v) { r(a - 1, b - 1) = std::move(v); };
  set(1, 1, epoly({{1, 2}}, kJc));
  set(2, 2, epoly({{1, 0}}, kJc));
  set(3, 3, epoly({{1, -2}}, kJc));
  set(4, 2, two_sinh);
  set(4, 4, epoly({{1, 0}}, kJc));
  set(5, 3, epoly({{-1, -1}}, kJc) * two_sinh);
  set(5, 5, epoly({{1, 0}}, kJc));
  set(6, 6, epoly({{1, 0}}, kJc));
  set(7, 3, epoly({{1, 0}, {-1, -2}}, kJc) * two_sinh);
  set(7, 5, epoly({{-1, -1}}, kJc) * two_sinh);
  set(7, 7, epoly({{1, -2}}, kJc));
  set(8, 6, two_sinh);
  set(8, 8, epoly({{1, 0}}, kJc));
  set(9, 9, epoly({{1, 2}}, kJc));
  return r;
}

TEST(Structures, Rho) {
  EXPECT_EQ(rho(3), (std::vector<int>{1, 0, -1}));
  EXPECT_EQ(rho(4), (std::vector<int>{2, 0, 0, -2}));
  EXPECT_EQ(rho(5), (std::vector<int>{3, 1, 0, -1, -3}));
  EXPECT_THROW(rho(2), BadDimension);
}

TEST(Structures, C0) {
  RingMatrix c3 = c0_matrix(3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_EQ(c3(r, c), CKScalar::constant(r + c == 2 ? 1 : 0, kJc));
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(c0_matrix(n) * c0_matrix(n), identity(n, n - 1));
  RingMatrix c4 = c0_matrix(4);
  EXPECT_EQ(c4.at1(1, 4), CKScalar::constant(1, 3));
  EXPECT_TRUE(c4.at1(1, 1).is_zero());
}

TEST(Structures, Cq) {
  RingMatrix c = c_q(3);
  EXPECT_EQ(c.at1(1, 3), CKScalar::e_power(-1, kJc));
  EXPECT_EQ(c.at1(2, 2), CKScalar::constant(1, kJc));
  EXPECT_EQ(c.at1(3, 1), CKScalar::e_power(1, kJc));
  EXPECT_EQ(at_v0(c), c0_matrix(3));
  RingMatrix c4 = c_q(4);
  EXPECT_EQ(c4.at1(1, 4), CKScalar::e_power(-2, 3));
  EXPECT_EQ(c4.at1(2, 3), CKScalar::constant(1, 3));
}

TEST(Structures, DGolden) {
  RingMatrix d = d_matrix(3);
  const BaseScalar h = BaseScalar::sqrt2().inverse();
  const BaseScalar expect[3][3] = {{h, 0, h}, {0, 1, 0}, {h * kI, 0, -(h * kI)}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_EQ(d(r, c), CKScalar::constant(expect[r][c], kJc)) << r << "," << c;
}

TEST(Structures, DSolvesMetricEquation) {
  for (int n = 3; n <= 6; ++n) {
    const int jc = n - 1;
    RingMatrix d = d_matrix(n);
    EXPECT_EQ(d * c0_matrix(n) * transpose(d), identity(n, jc)) << n;
    EXPECT_EQ(d * d_inverse(n), identity(n, jc)) << n;
  }
}

TEST(Structures, CPrime) {
  RingMatrix cp = c_prime(3);
  EXPECT_EQ(cp.at1(2, 2), CKScalar::constant(1, kJc));
  EXPECT_EQ(cp.at1(1, 1), hyper_monomial(HyperKind::cosh, 1, 3));
  for (int n = 3; n <= 6; ++n) {
    EXPECT_EQ(c_prime(n), c_prime_closed(n)) << n;
    EXPECT_EQ(at_v0(c_prime(n)), identity(n, n - 1)) << n;
  }
}

TEST(Structures, RqGolden) {
  RingMatrix r = r_q(3), g = golden_r3();
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) EXPECT_EQ(r(a, b), g(a, b)) << "(" << a + 1 << "," << b + 1 << ")";
  EXPECT_EQ(r.at1(4, 2), hyper_monomial(HyperKind::sinh, 2, 3) * BaseScalar(2));
  EXPECT_EQ(at_v0(r), identity(9, kJc));
  EXPECT_TRUE(is_lower_triangular(r));
}

TEST(Structures, CartesianConjugate) {
  EXPECT_EQ(cartesian_conjugate(identity(9, kJc), 3), identity(9, kJc));
  RingMatrix rt = cartesian_conjugate(r_q(3), 3);
  EXPECT_FALSE(is_lower_triangular(rt));
  EXPECT_EQ(symplectic_conjugate(rt, 3), r_q(3));
}

TEST(Structures, RPlusMinus) {
  RingMatrix rv = deform_to_j(r_q(3));
  EXPECT_EQ(rv.at1(5, 3), epoly({{-1, -1}}, kJc) * epoly({{1, 2}, {-1, -2}}, kJc));
  RingMatrix rp = r_plus(rv, 3);
  EXPECT_EQ(rp.at1(2, 4), epoly({{1, 2}, {-1, -2}}, kJc));
  EXPECT_EQ(r_minus(rv) * rv, identity(9, kJc));
}

TEST(Structures, ClassicalCartesianGenerators) {
  AlgMatrix a = classical_a(3);
  EXPECT_EQ(a.at1(1, 3), gen(Family::a, 1, 3, jmon({1, 1})));
  EXPECT_EQ(a.at1(1, 2), gen(Family::a, 1, 2, jmon({1, 0})));
  EXPECT_EQ(a.at1(2, 2), gen(Family::a, 2, 2, jmon({0, 0})));
}

TEST(Structures, QuantumTGolden) {
  AlgMatrix t = quantum_t(3).t;
  auto tt = [](int r, int c, const CKScalar& k) { return gen(Family::tTilde, r, c, k); };
  auto tp = [](int r, int c, const CKScalar& k) { return gen(Family::t, r, c, k); };
  const CKScalar one = jmon({0, 0}), j1 = jmon({1, 0}), ij2 = jmon({0, 1}, kI), ij1j2 = jmon({1, 1}, kI);
  AlgMatrix want(3, 3);
  want(0, 0) = tp(1, 1, one) + tt(1, 1, ij1j2);
  want(0, 1) = tp(1, 2, j1) - tt(1, 2, ij2);
  want(0, 2) = tp(1, 3, one) - tt(1, 3, ij1j2);
  want(1, 0) = tp(2, 1, j1) + tt(2, 1, ij2);
  want(1, 1) = tp(2, 2, one);
  want(1, 2) = tp(2, 1, j1) - tt(2, 1, ij2);
  want(2, 0) = tp(1, 3, one) + tt(1, 3, ij1j2);
  want(2, 1) = tp(1, 2, j1) + tt(1, 2, ij2);
  want(2, 2) = tp(1, 1, one) - tt(1, 1, ij1j2);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_EQ(t(r, c), want(r, c)) << to_string(t(r, c));
}

TEST(Structures, QuantumTIsConjugateOfU) {
  for (int n = 3; n <= 5; ++n) {
    auto sg = quantum_t(n);
    EXPECT_EQ(sg.symbols.size(), static_cast<std::size_t>(n * n));
  }
}

TEST(Structures, LPlusMinusGolden) {
  AlgMatrix lp = l_plus(3), lm = l_minus(3);
  const CKScalar j1i = jmon({-1, 0}), ij2i = jmon({0, -1}, kI), ijji = jmon({-1, -1}, kI), one = jmon({0, 0});
  auto f = [](Family fam, int r, int c, const CKScalar& k) { return gen(fam, r, c, k); };
  EXPECT_EQ(lp(0, 0), f(Family::lDiagPlus, 1, 1, one));
  EXPECT_EQ(lp(0, 1), f(Family::l, 1, 2, j1i) - f(Family::lTilde, 1, 2, ij2i));
  EXPECT_EQ(lp(0, 2), f(Family::l, 1, 3, one) - f(Family::lTilde, 1, 3, ijji));
  EXPECT_EQ(lp(1, 1), NCPoly::constant(one));
  EXPECT_EQ(lp(1, 2), f(Family::l, 2, 1, j1i) - f(Family::lTilde, 2, 1, ij2i));
  EXPECT_EQ(lp(2, 2), f(Family::lDiagMinus, 1, 1, one));
  EXPECT_TRUE(lp(1, 0).is_zero() && lp(2, 0).is_zero() && lp(2, 1).is_zero());
  EXPECT_EQ(lm(0, 0), f(Family::lDiagMinus, 1, 1, one));
  EXPECT_EQ(lm(1, 0), f(Family::l, 2, 1, j1i) + f(Family::lTilde, 2, 1, ij2i));
  EXPECT_EQ(lm(2, 0), f(Family::l, 1, 3, one) + f(Family::lTilde, 1, 3, ijji));
  EXPECT_EQ(lm(2, 1), f(Family::l, 1, 2, j1i) + f(Family::lTilde, 1, 2, ij2i));
  EXPECT_EQ(lm(2, 2), f(Family::lDiagPlus, 1, 1, one));
}

TEST(Structures, BundlesSpecializeUnderAllSignatures) {
  for (const char* s : {"1,1", "1,iota", "iota,1", "iota,iota", "1,i", "i,1", "i,i"})
    for (Basis b : {Basis::symplectic, Basis::cartesian}) EXPECT_NO_THROW(make_bundle(3, b, JSignature::parse(s))) << s;
  std::mt19937 rng(31);
  for (int n = 4; n <= 5; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      JSignature s = ckq::test::random_signature(rng, n - 1);
      EXPECT_NO_THROW(make_bundle(n, Basis::symplectic, s));
    }
}

TEST(Structures, BundleShape) {
  StructureBundle b = make_bundle(3, Basis::symplectic);
  EXPECT_TRUE(is_lower_triangular(b.r_v));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (r + c != 2) EXPECT_TRUE(b.c_j(r, c).is_zero());
  EXPECT_THROW(make_bundle(9, Basis::symplectic), BadDimension);
}
