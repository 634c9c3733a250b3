#include <gtest/gtest.h>

#include <map>
#include <random>

#include "ckq/errors.hpp"
#include "ckq/relations.hpp"
#include "helpers.hpp"

using namespace ckq;

namespace {

constexpr int kJc = 2;

JSignature sig(const char* s) { return JSignature::parse(s); }

std::set<GenSymbol> symbols_of(const AlgMatrix& g) {
  std::set<GenSymbol> out;
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c)
      for (const auto& s : g(r, c).symbols()) out.insert(s);
  return out;
}

}  // namespace

TEST(ExpandRtt, IdentityGivesNoRelations) {
  EXPECT_TRUE(expand_rtt(r_q(3), identity_alg(3, kJc)).empty());
}

TEST(ExpandRtt, ClassicalLimitIsCommutativity) {
  StructureBundle b = make_bundle(3, Basis::symplectic, sig("1,1"));
  RelationSet lim = classical_limit(expand_rtt(b.r(), b.g(), b.sig));
  RelationSet comm = commutativity_presentation(symbols_of(b.g()), kJc);
  EXPECT_TRUE(equivalent(lim, comm));
  EXPECT_TRUE(classical_limit(RelationSet()).empty());
}

TEST(ExpandRtt, DeterministicAcrossRuns) {
  StructureBundle b = make_bundle(3, Basis::symplectic);
  RelationSet a = expand_rtt(b.r(), b.g());
  RelationSet c = expand_rtt(b.r(), b.g());
  ASSERT_EQ(a.size(), c.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a.items()[k].label, c.items()[k].label);
    EXPECT_EQ(a.items()[k].poly, c.items()[k].poly);
  }
  EXPECT_EQ(a.size(), 65u);
}

TEST(ExpandOrthogonality, IdentityIsOrthogonal) {
  RingMatrix cp = c_prime(3);
  EXPECT_TRUE(expand_orthogonality(identity_alg(3, kJc), cp, Side::both).empty());
}

TEST(ExpandOrthogonality, ClassicalEquivalence) {
  for (int n = 3; n <= 4; ++n) EXPECT_TRUE(classical_orthogonality_equivalence(n).pass) << n;
}

TEST(ExpandOrthogonality, QEqualsOneLimit) {
  StructureBundle b = make_bundle(3, Basis::symplectic, sig("1,1"));
  RelationSet lim = classical_limit(expand_orthogonality(b.g(), b.metric(), Side::both, b.sig, &b.metric_inv));
  RingMatrix c0 = c0_matrix(3);
  RelationSet classical = classical_limit(expand_orthogonality(b.g(), c0, Side::both, b.sig));
  EXPECT_FALSE(lim.empty());
  EXPECT_TRUE(equivalent(lim, classical));
}

TEST(ExpandOrthogonality, SpecializesUnderAllSignatures) {
  for (const char* s : {"1,1", "1,iota", "iota,1", "iota,iota"})
    for (Basis basis : {Basis::symplectic, Basis::cartesian}) {
      StructureBundle b = make_bundle(3, basis, sig(s));
      EXPECT_NO_THROW(expand_rtt(b.r(), b.g(), b.sig)) << s;
      EXPECT_NO_THROW(expand_orthogonality(b.g(), b.metric(), Side::both, b.sig, &b.metric_inv)) << s;
    }
}

TEST(YangBaxter, Passes) {
  EXPECT_TRUE(yang_baxter(r_q(3)).pass);
  EXPECT_TRUE(yang_baxter(r_q(4)).pass);
  EXPECT_TRUE(yang_baxter(identity(9, kJc)).pass);
  EXPECT_TRUE(yang_baxter(cartesian_conjugate(r_q(3), 3)).pass);
}

TEST(YangBaxter, DetectsCorruption) {
  RingMatrix r = r_q(3);
  r(3, 1) = CKScalar::constant(1, kJc);
  VerificationReport rep = yang_baxter(r);
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.witness.empty());
}

TEST(Contraction, Examples) {
  Contraction a = contraction_decompose(r_q(3), sig("iota,1"));
  EXPECT_TRUE(a.report.pass);
  EXPECT_EQ(a.r_tilde.at1(4, 2), CKScalar::constant(2, kJc));
  Contraction b = contraction_decompose(r_q(3), sig("iota,iota"));
  EXPECT_EQ(a.r_tilde, b.r_tilde);
  EXPECT_THROW(contraction_decompose(r_q(3), sig("1,1")), PreconditionViolation);
}

TEST(Contraction, ReassemblesSpecializedR) {
  for (const char* s : {"iota,1", "1,iota", "iota,iota"}) {
    JSignature js = sig(s);
    Contraction c = contraction_decompose(r_q(3), js);
    Monomial jv;
    jv.v = 1;
    jv.j[0] = js[0] == JKind::nilpotent ? 1 : 0;
    jv.j[1] = js[1] == JKind::nilpotent ? 1 : 0;
    RingMatrix rebuilt = identity(9, kJc) + c.r_tilde * CKScalar::term(1, jv, kJc);
    EXPECT_EQ(rebuilt, specialize(r_q(3), js)) << s;
  }
}

TEST(Contraction, RejectsNonAffine) {
  RingMatrix m = identity(9, kJc);
  m(0, 1) = CKScalar::v_power(1, kJc);
  EXPECT_THROW(contraction_decompose(m, sig("iota,1")), NotAffineInJv);
}

TEST(Hopf, PassesBothBases) {
  for (int n = 3; n <= 4; ++n)
    for (Basis basis : {Basis::symplectic, Basis::cartesian}) {
      HopfReport h = hopf_checks(make_bundle(n, basis));
      EXPECT_TRUE(h.counit.pass) << n;
      EXPECT_TRUE(h.coassociativity.pass) << n;
      EXPECT_TRUE(h.antipode.pass) << n;
    }
}

TEST(Hopf, PassesUnderSignatures) {
  for (const char* s : {"iota,1", "1,iota", "iota,iota", "i,i"}) EXPECT_TRUE(hopf_checks(make_bundle(3, Basis::cartesian, sig(s))).pass()) << s;
}

TEST(Hopf, CorruptedMetricFailsAntipode) {
  StructureBundle b = make_bundle(3, Basis::cartesian);
  b.c_prime_j(0, 0) = CKScalar(kJc);
  HopfReport h = hopf_checks(b);
  EXPECT_FALSE(h.antipode.pass);
  EXPECT_FALSE(h.antipode.witness.empty());
}

TEST(FundamentalRepresentation, RelationsVanish) {
  for (Basis basis : {Basis::symplectic, Basis::cartesian}) {
    StructureBundle b = make_bundle(3, basis);
    EXPECT_TRUE(fundamental_representation_check(3, basis, bundle_relations(b), "all").pass);
  }
}

TEST(FundamentalRepresentation, DetectsWrongRelation) {
  StructureBundle b = make_bundle(3, Basis::symplectic);
  NCPoly t11 = NCPoly::symbol(sym(Family::t, 1, 1), kJc), t22 = NCPoly::symbol(sym(Family::t, 2, 2), kJc);
  RelationSet bogus = canonicalize_relations({{t11 * t22 - t22 * t11 - t11, "bogus"}});
  EXPECT_FALSE(fundamental_representation_check(3, Basis::symplectic, bogus, "bogus").pass);
}

// The RTT expansion redone numerically: generator coefficients and R entries
// are evaluated first, then multiplied out in dual-number arithmetic.
TEST(ExpandRtt, NumericOracle) {
  const int n = 3;
  StructureBundle b = make_bundle(n, Basis::symplectic);
  const RingMatrix& r = b.r();
  const AlgMatrix& t = b.g();
  AlgMatrix sym_lhs = r * embed_left(t, n) * embed_right(t, n) - embed_right(t, n) * embed_left(t, n) * r;

  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    JSignature s = ckq::test::random_signature(rng, n - 1);
    std::complex<double> v0(u(rng), u(rng));
    using Lin = std::map<GenSymbol, DualValue>;
    std::vector<Lin> tn(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (const auto& [w, coeff] : t(a, c).terms()) tn[static_cast<std::size_t>(a * n + c)][w.front()] = ckq::test::dual_eval(coeff, s, v0);
    auto rn = [&](int x, int y) { return ckq::test::dual_eval(r(x, y), s, v0); };

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            std::map<Word, DualValue> acc;
            auto add = [&](const Lin& x, const Lin& y, const DualValue& f, double sign) {
              for (const auto& [gx, cx] : x)
                for (const auto& [gy, cy] : y) {
                  Word w{gx, gy};
                  auto it = acc.try_emplace(w, DualValue(n - 1)).first;
                  it->second += f * cx * cy * sign;
                }
            };
            for (int a = 0; a < n; ++a)
              for (int c = 0; c < n; ++c) {
                DualValue f = rn(i * n + j, a * n + c);
                add(tn[static_cast<std::size_t>(a * n + k)], tn[static_cast<std::size_t>(c * n + l)], f, 1.0);
                DualValue g = rn(a * n + c, k * n + l);
                add(tn[static_cast<std::size_t>(j * n + c)], tn[static_cast<std::size_t>(i * n + a)], g, -1.0);
              }
            const NCPoly& p = sym_lhs(i * n + j, k * n + l);
            for (const auto& [w, val] : acc) {
              DualValue want = eval_numeric(p.coefficient(w), s, v0);
              EXPECT_TRUE(approx_equal(val, want, 1e-9)) << word_name(w);
            }
            for (const auto& [w, coeff] : p.terms())
              if (!acc.count(w)) EXPECT_LT(eval_numeric(coeff, s, v0).max_abs(), 1e-9) << word_name(w);
          }
  }
}

TEST(YangBaxter, PassesUnderSignatures) {
  for (const char* s : {"1,1", "1,iota", "iota,1", "iota,iota", "i,1", "i,i"})
    for (Basis basis : {Basis::symplectic, Basis::cartesian}) {
      StructureBundle b = make_bundle(3, basis, sig(s));
      EXPECT_TRUE(yang_baxter(b.r(), b.sig).pass) << s;
    }
}
