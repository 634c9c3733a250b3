#pragma once

// Duality pairing between the L-functionals and the symplectic generators,
// evaluation of functionals on words, and the dual algebra relations.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ckq/freealg.hpp"
#include "ckq/relations.hpp"
#include "ckq/structures.hpp"

namespace ckq {

inline constexpr std::size_t kDefaultWordBound = 4;

class PairingTable {
 public:
  int n() const { return n_; }
  const std::optional<JSignature>& sig() const { return sig_; }
  const std::vector<GenSymbol>& functionals() const { return functionals_; }
  const std::vector<GenSymbol>& generators() const { return generators_; }

  /// Formal-j value <f, g>.
  CKScalar formal(GenSymbol f, GenSymbol g) const;
  /// Value in the table's context (specialized when a signature was given).
  CKScalar value(GenSymbol f, GenSymbol g) const;
  /// Nonzero entries in context, ordered by (functional, generator).
  const std::map<std::pair<GenSymbol, GenSymbol>, CKScalar>& entries() const { return values_; }

  /// <L^sigma_ab, T_kl> recomputed from the table (1-based indices).
  CKScalar l_entry_on_t_entry(bool plus, int a, int b, int k, int l) const;

 private:
  friend PairingTable build_pairing_table(int n, const std::optional<JSignature>& sig);
  friend CKScalar eval_functional(const PairingTable& table, const NCPoly& f, const Word& w, std::size_t bound);

  int n_ = 3;
  std::optional<JSignature> sig_;
  std::vector<GenSymbol> functionals_, generators_;
  std::map<std::pair<GenSymbol, GenSymbol>, CKScalar> formal_, values_;
  RingMatrix m_;     // T_kl = sum_y m(kl, y) t_y
  RingMatrix minv_;  // t_y = sum_kl minv(y, kl) T_kl
  // functional phi = sum_e g(phi, e) L_e + g_eps(phi) eps; e = sigma*N^2 + (a-1)N + (b-1)
  RingMatrix g_;
  std::vector<CKScalar> g_eps_;
  // <L_e, T_kl> for every entry e, flattened e * N^2 + kl
  std::vector<CKScalar> lt_;
};

/// Solves <L^(±)_ij, T_kl> = R^(±)_{(i,k),(j,l)} for the component values.
/// Throws InconsistentPairing when the overdetermined system has no
/// solution, NegativeNilpotentPower when a value fails to specialize.
PairingTable build_pairing_table(int n, const std::optional<JSignature>& sig = std::nullopt);

/// Value of a polynomial in functionals on a word in t-generators, through
/// the matrix coproducts of L and T. Formal in j; throws WordTooLong.
CKScalar eval_functional(const PairingTable& table, const NCPoly& f, const Word& w,
                         std::size_t bound = kDefaultWordBound);

/// All words in the table's generators of length <= max_len, shortlex.
std::vector<Word> generator_words(const PairingTable& table, std::size_t max_len);

struct FunctionalResidual {
  Word word;
  CKScalar value;
};
/// Nonzero values of f on generator words of length <= max_len.
std::vector<FunctionalResidual> functional_residuals(const PairingTable& table, const NCPoly& f, std::size_t max_len);

/// RLL relations for (+,+), (-,-), (+,-) with R^(+); L C^t L^t = C^t and
/// L (C^t)^-1 L^t = (C^t)^-1 for both L; lp_kk lm_kk = 1. Formal j, then
/// specialized under sig.
RelationSet derive_dual_relations(int n, const std::optional<JSignature>& sig = std::nullopt);

struct ReferenceValue {
  std::string functional;  // as printed, e.g. "l~12"
  GenSymbol symbol;        // table functional it is compared with
  GenSymbol generator;
  CKScalar value;
};
/// Printed N=3 component values, with E-monomial encodings.
std::vector<ReferenceValue> reference_table_n3();

struct ReferenceComparison {
  int matched = 0;
  std::vector<std::string> mismatches;  // "<f>(<g>): computed X, printed Y"
  std::vector<std::string> unlisted;    // nonzero computed values absent from the list
};
ReferenceComparison compare_with_reference(const PairingTable& table);

/// The three printed commutation relations among l11, l12, l~12 (with
/// l11 = lp11 and the argument Jz read as Jv).
std::vector<Relation> reference_dual_relations_n3();

struct CKAlgebraPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> coproduct, counit, antipode, commutators, isomorphism;
  std::vector<std::string> notes;
};
/// Stored Hopf data of so_v(3;j;X02) with j substituted textually.
CKAlgebraPresentation present_ck_algebra(int n, const std::optional<JSignature>& sig = std::nullopt);

}  // namespace ckq
