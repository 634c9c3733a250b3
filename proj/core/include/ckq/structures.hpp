#pragma once

// Structural matrices of SO_q(N) and its Cayley-Klein contractions.
// Every matrix lives over CKScalar with N-1 formal j slots; z = Jv is
// already carried by E, so deform_to_j is the identity.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckq/freealg.hpp"
#include "ckq/scalar.hpp"

namespace ckq {

enum class Basis { symplectic, cartesian };

std::string basis_name(Basis b);
Basis parse_basis(std::string_view text);

/// 2*rho_k for k = 1..N.
std::vector<int> rho(int n);

RingMatrix c0_matrix(int n);
/// C = C0 q^rho, C_ik = delta_{i'k} E^{2 rho_k}.
RingMatrix c_q(int n);
RingMatrix d_matrix(int n);
/// D is unitary, so this is its conjugate transpose.
RingMatrix d_inverse(int n);
/// D C D^t.
RingMatrix c_prime(int n);
/// Closed block form with cosh/sinh of z*rho.
RingMatrix c_prime_closed(int n);
/// Lower-triangular FRT R-matrix of SO_q(N), q = E^2.
RingMatrix r_q(int n);
/// (D⊗D) M (D⊗D)^-1.
RingMatrix cartesian_conjugate(const RingMatrix& m, int n);
/// (D⊗D)^-1 M (D⊗D).
RingMatrix symplectic_conjugate(const RingMatrix& m, int n);
RingMatrix deform_to_j(const RingMatrix& m);
RingMatrix r_plus(const RingMatrix& rv, int n);
RingMatrix r_minus(const RingMatrix& rv);

/// prod_{r=min(k,p)}^{max(k,p)-1} j_r, 1-based k, p.
CKScalar j_tilde(int k, int p, int n);

/// A(j) = (J~_kp a_kp).
AlgMatrix classical_a(int n);
/// B(j) = D^-1 A(j) D.
AlgMatrix classical_b(int n);
/// U(j) = (J~_ik u_ik).
AlgMatrix quantum_u(int n);

/// T(j) written in symplectic generators t, t~. Each generator is a fixed
/// linear form in the u's, recorded in `definitions`.
struct SymplecticGenerators {
  AlgMatrix t;
  std::map<GenSymbol, NCPoly> definitions;
  std::vector<GenSymbol> symbols;
};
SymplecticGenerators quantum_t(int n);

/// L^(+) (upper) and L^(-) (lower). Off-diagonal entries mirror T(j) with
/// t -> l, t~ -> l~ and inverted j-monomials. The diagonal is reduced:
/// L+_kk = lp_kk, L+_k'k' = lm_kk (k <= N/2), middle entry 1 for odd N;
/// L- has the mirror pattern.
AlgMatrix l_plus(int n);
AlgMatrix l_minus(int n);
/// All functional symbols used by l_plus/l_minus, in symbol order.
std::vector<GenSymbol> functional_symbols(int n);

struct StructureBundle {
  int n = 3;
  Basis basis = Basis::symplectic;
  std::optional<JSignature> sig;  // empty: formal j

  std::vector<int> rho2;
  RingMatrix c0, c, d, d_inv, c_prime, r_q, r_tilde;
  RingMatrix r_v, c_j, c_prime_j, r_plus, r_minus;

  AlgMatrix a, b, u, t;
  std::map<GenSymbol, NCPoly> t_definitions;
  /// Formal even under a signature: their j^-1 prefactors have no value
  /// over the dual algebra until paired.
  AlgMatrix l_plus, l_minus;

  /// Basis-dependent views: (R, G, metric) = (R_v, T, C) or (R~_v, U, C').
  const RingMatrix& r() const { return basis == Basis::symplectic ? r_v : r_tilde; }
  const AlgMatrix& g() const { return basis == Basis::symplectic ? t : u; }
  const RingMatrix& metric() const { return basis == Basis::symplectic ? c_j : c_prime_j; }
  RingMatrix metric_inv;

  int jcount() const { return n - 1; }
  std::vector<bool> nilpotent() const { return sig ? nilpotent_mask(*sig) : std::vector<bool>{}; }
};

/// Builds every matrix; under a signature all scalar and generator matrices
/// except L^(±) are specialized. Throws BadDimension outside 3..6.
StructureBundle make_bundle(int n, Basis basis, const std::optional<JSignature>& sig = std::nullopt);

RingMatrix specialize(const RingMatrix& m, const JSignature& sig);
AlgMatrix specialize(const AlgMatrix& m, const JSignature& sig);
NCPoly specialize(const NCPoly& p, const JSignature& sig);

/// Entrywise substitution v = 0, E = 1.
CKScalar at_v0(const CKScalar& x);
RingMatrix at_v0(const RingMatrix& m);

BaseScalar conj(const BaseScalar& x);

}  // namespace ckq
