#pragma once

// Expansion of matrix identities into relations, and the verification
// procedures (Yang-Baxter, contraction, Hopf consistency, classical limit).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ckq/freealg.hpp"
#include "ckq/structures.hpp"

namespace ckq {

struct Witness {
  std::string location;
  std::string residual;
};

struct VerificationReport {
  std::string name;
  bool pass = true;
  std::vector<Witness> witness;  // empty iff pass
  double seconds = 0;

  void fail(std::string location, std::string residual);
};

/// R (A⊗I)(I⊗B) - (I⊗B)(A⊗I) R, one relation per nonzero entry.
/// Labels "<prefix>[(i,j),(k,l)]". Under sig the coefficients are
/// re-specialized so products of nilpotents vanish.
RelationSet expand_rll(const RingMatrix& r, const AlgMatrix& a, const AlgMatrix& b, const std::string& prefix,
                       const std::optional<JSignature>& sig = std::nullopt);
RelationSet expand_rtt(const RingMatrix& r, const AlgMatrix& g, const std::optional<JSignature>& sig = std::nullopt);

enum class Side { both, primal, inverse };

/// primal: G C G^t - C; inverse: G^t C^-1 G - C^-1. C^-1 is taken from
/// cinv when given, otherwise computed by adjugate.
RelationSet expand_orthogonality(const AlgMatrix& g, const RingMatrix& c, Side side,
                                 const std::optional<JSignature>& sig = std::nullopt,
                                 const RingMatrix* cinv = nullptr);

/// R12 R13 R23 = R23 R13 R12 on (C^N)^⊗3.
VerificationReport yang_baxter(const RingMatrix& r, const std::optional<JSignature>& sig = std::nullopt);

struct Contraction {
  RingMatrix r_tilde;  // pure numbers
  VerificationReport report;
};
/// Specializes rv and splits it as I + Jv R~. Throws PreconditionViolation
/// without a nilpotent parameter, NotAffineInJv on any other residue.
Contraction contraction_decompose(const RingMatrix& rv, const JSignature& sig);

/// Generator values of the counit, from eps(G) = I.
std::map<GenSymbol, CKScalar> counit_values(const AlgMatrix& g, const std::vector<bool>& nilpotent = {});
CKScalar evaluate(const NCPoly& p, const std::map<GenSymbol, CKScalar>& values);

struct HopfReport {
  VerificationReport counit, coassociativity, antipode;
  bool pass() const { return counit.pass && coassociativity.pass && antipode.pass; }
};
HopfReport hopf_checks(const StructureBundle& b);

/// Coefficients at v = 0, E = 1, canonicalized.
RelationSet classical_limit(const RelationSet& rs);
/// {gh - hg : g < h}.
RelationSet commutativity_presentation(const std::set<GenSymbol>& symbols, int jcount);

/// B C0 B^t - C0 == D^-1 (A A^t - I) (D^t)^-1, entrywise.
VerificationReport classical_orthogonality_equivalence(int n);

/// Evaluates relations in the fundamental representation G_kl -> R^+_{(.,k),(.,l)}
/// (conjugated by D in the Cartesian basis). Formal j only.
VerificationReport fundamental_representation_check(int n, Basis basis, const RelationSet& rs,
                                                    const std::string& name);

/// Every RTT and orthogonality relation of the bundle, as labelled sets.
RelationSet bundle_relations(const StructureBundle& b);

}  // namespace ckq
