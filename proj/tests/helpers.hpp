#pragma once

#include <complex>
#include <initializer_list>
#include <random>
#include <utility>

#include "ckq/freealg.hpp"
#include "ckq/scalar.hpp"

namespace ckq::test {

// sum of c * E^k, written out term by term
inline CKScalar epoly(std::initializer_list<std::pair<long, int>> terms, int jc) {
  CKScalar out(jc);
  for (auto [c, k] : terms) out += CKScalar::e_power(k, jc) * BaseScalar(c);
  return out;
}

inline CKScalar jmon(std::initializer_list<int> exps, const BaseScalar& c = 1) {
  Monomial m;
  int k = 0;
  for (int e : exps) m.j[static_cast<std::size_t>(k++)] = e;
  return CKScalar::term(c, m, k);
}

inline BaseScalar random_base(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), pick(0, 3);
  BaseScalar out(0);
  out += BaseScalar::rational(num(rng), den(rng));
  if (pick(rng) == 0) out += BaseScalar::rational(num(rng), den(rng)) * BaseScalar::i();
  if (pick(rng) == 0) out += BaseScalar::rational(num(rng), den(rng)) * BaseScalar::sqrt2();
  return out;
}

// small scalars; j exponents are kept >= 0 unless allow_negative_j
inline CKScalar random_scalar(std::mt19937& rng, int jc, int max_terms = 3, bool allow_negative_j = false) {
  std::uniform_int_distribution<int> e(-3, 3), v(0, 2), j(allow_negative_j ? -1 : 0, 2), count(1, max_terms);
  CKScalar out(jc);
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    m.e = e(rng);
    m.v = v(rng);
    for (int k = 0; k < jc; ++k) m.j[static_cast<std::size_t>(k)] = j(rng);
    out += CKScalar::term(random_base(rng), m, jc);
  }
  return out;
}

inline JSignature random_signature(std::mt19937& rng, int size, bool with_imaginary = false) {
  std::uniform_int_distribution<int> pick(0, with_imaginary ? 2 : 1);
  std::vector<JKind> kinds;
  for (int k = 0; k < size; ++k) {
    int p = pick(rng);
    kinds.push_back(p == 0 ? JKind::one : p == 1 ? JKind::nilpotent : JKind::imaginary);
  }
  return JSignature(kinds);
}

inline RingMatrix random_matrix(std::mt19937& rng, int rows, int cols, int jc) {
  RingMatrix m(rows, cols);
  std::uniform_int_distribution<int> zero(0, 2);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = zero(rng) == 0 ? CKScalar(jc) : random_scalar(rng, jc, 2);
  return m;
}

// Numeric oracle independent of specialize(): j_k, J and E are built as
// dual numbers and the formal scalar is evaluated term by term.
inline DualValue dual_eval(const CKScalar& x, const JSignature& sig, std::complex<double> v0) {
  const int g = sig.size();
  std::vector<DualValue> j;
  DualValue big_j = DualValue::scalar(1.0, g);
  for (int k = 0; k < g; ++k) {
    DualValue jk = sig[k] == JKind::one         ? DualValue::scalar(1.0, g)
                   : sig[k] == JKind::imaginary ? DualValue::scalar({0.0, 1.0}, g)
                                                : DualValue::iota(k, g);
    big_j = big_j * jk;
    j.push_back(jk);
  }
  const DualValue e = (big_j * (v0 / 2.0)).exp();
  const DualValue e_inv = (big_j * (-v0 / 2.0)).exp();
  DualValue out(g);
  for (const auto& [m, c] : x.terms()) {
    DualValue term = DualValue::scalar(c.to_complex() * std::pow(v0, m.v), g);
    for (int p = 0; p < std::abs(m.e); ++p) term = term * (m.e > 0 ? e : e_inv);
    for (int k = 0; k < g; ++k) {
      const int ex = m.j[static_cast<std::size_t>(k)];
      const DualValue& jk = j[static_cast<std::size_t>(k)];
      for (int p = 0; p < std::abs(ex); ++p) term = term * (ex > 0 ? jk : jk.inverse());
    }
    out += term;
  }
  return out;
}

}  // namespace ckq::test
