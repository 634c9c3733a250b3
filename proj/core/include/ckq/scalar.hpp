#pragma once

// Coefficient ring of the library.
//
// BaseScalar is an exact element of Q(i, sqrt2). CKScalar is a Laurent-type
// polynomial over BaseScalar in the commuting symbols
//
//   E   = exp(J v / 2)         (integer powers)
//   v   = deformation variable (nonnegative powers)
//   j_k = contraction parameters, k = 1..N-1 (integer powers)
//
// E, v and the j_k are algebraically independent in this ring. The
// relation E = exp(Jv/2) is only used by specialize() and eval_numeric().

#include <gmpxx.h>

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ckq {

using Rational = mpq_class;

/// a + b*i + c*sqrt2 + d*i*sqrt2 with rational a, b, c, d.
class BaseScalar {
 public:
  BaseScalar() = default;
  BaseScalar(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  BaseScalar(Rational a, Rational b, Rational c, Rational d);

  static BaseScalar rational(long num, long den);
  static BaseScalar i() { return {0, 1, 0, 0}; }
  static BaseScalar sqrt2() { return {0, 0, 1, 0}; }

  const Rational& rational_part() const { return a_; }
  const Rational& i_part() const { return b_; }
  const Rational& sqrt2_part() const { return c_; }
  const Rational& i_sqrt2_part() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_real() const { return sgn(b_) == 0 && sgn(d_) == 0; }
  bool is_imaginary() const { return sgn(a_) == 0 && sgn(c_) == 0; }

  BaseScalar operator-() const { return {-a_, -b_, -c_, -d_}; }
  BaseScalar& operator+=(const BaseScalar& o);
  BaseScalar& operator-=(const BaseScalar& o);
  BaseScalar& operator*=(const BaseScalar& o);
  friend BaseScalar operator+(BaseScalar x, const BaseScalar& y) { return x += y; }
  friend BaseScalar operator-(BaseScalar x, const BaseScalar& y) { return x -= y; }
  friend BaseScalar operator*(BaseScalar x, const BaseScalar& y) { return x *= y; }

  /// Throws DivisionByZero on zero.
  BaseScalar inverse() const;
  friend BaseScalar operator/(const BaseScalar& x, const BaseScalar& y) { return x * y.inverse(); }

  /// i^k for any integer k.
  static BaseScalar i_power(int k);

  friend bool operator==(const BaseScalar& x, const BaseScalar& y);
  friend std::strong_ordering operator<=>(const BaseScalar& x, const BaseScalar& y);

  std::complex<double> to_complex() const;

  /// Sign of a real element (-1, 0, 1). Undefined unless is_real().
  int real_sign() const;

  /// "1/2", "-i", "√2", "(1 + i√2)". Stable text used by renderers.
  std::string to_string() const;

 private:
  Rational a_{0}, b_{0}, c_{0}, d_{0};
};

inline constexpr int kMaxJ = 7;

/// E^e * v^v * prod j_k^{j[k]}. Ordering is lexicographic on (e, v, j),
/// which is compatible with multiplication.
struct Monomial {
  int e = 0;
  int v = 0;
  std::array<int, kMaxJ> j{};

  auto operator<=>(const Monomial&) const = default;
  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  bool is_one() const;
};

class CKScalar {
 public:
  using TermMap = std::map<Monomial, BaseScalar>;

  /// Zero with an unspecified j-count; adapts to the other operand.
  CKScalar() = default;
  explicit CKScalar(int jcount);

  static CKScalar constant(const BaseScalar& c, int jcount);
  static CKScalar term(const BaseScalar& c, const Monomial& m, int jcount);
  static CKScalar e_power(int k, int jcount);
  static CKScalar v_power(int k, int jcount);
  /// j_{index+1}^k (index is 0-based).
  static CKScalar j_power(int index, int k, int jcount);

  int jcount() const { return jcount_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Single monomial, nonzero coefficient, no v factor.
  bool is_unit() const;
  /// Set when the scalar has at most a constant term.
  std::optional<BaseScalar> as_constant() const;
  /// Returns the coefficient of m (zero if absent).
  BaseScalar coefficient(const Monomial& m) const;

  CKScalar operator-() const;
  CKScalar& operator+=(const CKScalar& o);
  CKScalar& operator-=(const CKScalar& o);
  CKScalar& operator*=(const CKScalar& o);
  CKScalar& operator*=(const BaseScalar& c);
  friend CKScalar operator+(CKScalar x, const CKScalar& y) { return x += y; }
  friend CKScalar operator-(CKScalar x, const CKScalar& y) { return x -= y; }
  friend CKScalar operator*(const CKScalar& x, const CKScalar& y);
  friend CKScalar operator*(CKScalar x, const BaseScalar& c) { return x *= c; }
  friend CKScalar operator*(const BaseScalar& c, CKScalar x) { return x *= c; }

  /// Inverse of a unit monomial. Throws NotAUnit otherwise.
  CKScalar inverse() const;

  /// Applies f to every monomial (used for v=0, E=1 style evaluations).
  template <class F>
  CKScalar map_terms(F&& f) const;

  friend bool operator==(const CKScalar& x, const CKScalar& y) { return x.terms_ == y.terms_; }
  friend std::strong_ordering operator<=>(const CKScalar& x, const CKScalar& y);

 private:
  friend void add_product(CKScalar& acc, const CKScalar& x, const CKScalar& y);
  void add_term(const Monomial& m, const BaseScalar& c);
  int unify(const CKScalar& o) const;

  TermMap terms_;
  int jcount_ = -1;
};

/// acc += x * y without a temporary.
void add_product(CKScalar& acc, const CKScalar& x, const CKScalar& y);

template <class F>
CKScalar CKScalar::map_terms(F&& f) const {
  CKScalar out;
  out.jcount_ = jcount_;
  for (const auto& [m, c] : terms_) {
    auto r = f(m, c);
    if (r) out.add_term(r->first, r->second);
  }
  return out;
}

enum class JKind { one, nilpotent, imaginary };

/// Value assignment j_k in {1, iota_k, i}, one entry per contraction
/// parameter (N-1 entries).
class JSignature {
 public:
  JSignature() = default;
  explicit JSignature(std::vector<JKind> kinds);
  /// Tokens "1", "iota", "i".
  static JSignature parse(std::string_view comma_separated);
  static JSignature all(int size, JKind kind);

  int size() const { return static_cast<int>(kinds_.size()); }
  JKind operator[](int k) const { return kinds_[static_cast<std::size_t>(k)]; }
  const std::vector<JKind>& kinds() const { return kinds_; }
  bool has_nilpotent() const;
  int imaginary_count() const;
  std::vector<std::string> tokens() const;
  /// Display names for the j slots after specialization: "ι1", "i", "1".
  std::vector<std::string> slot_names() const;

  friend bool operator==(const JSignature&, const JSignature&) = default;

 private:
  std::vector<JKind> kinds_;
};

enum class HyperKind { exp, cosh, sinh };

/// exp/cosh/sinh of halfSteps * (Jv/2), written with E = exp(Jv/2).
CKScalar hyper_monomial(HyperKind kind, int half_steps, int n);

/// Substitutes the j's per sig. Nilpotent parameters stay as square-zero
/// symbols in their j slot (exponent 0 or 1); E is expanded exactly when
/// J is nilpotent. Throws NegativeNilpotentPower when a negative power of
/// a nilpotent parameter survives cancellation.
CKScalar specialize(const CKScalar& x, const JSignature& sig);

/// Nilpotent slots of sig, as a mask usable by relation canonicalization.
std::vector<bool> nilpotent_mask(const JSignature& sig);

/// Floating-point element of the dual algebra: one complex component per
/// subset of the nilpotent generators (bit k set <=> iota_{k+1} present).
class DualValue {
 public:
  DualValue() : DualValue(0) {}
  explicit DualValue(int generators);
  static DualValue scalar(std::complex<double> c, int generators);
  static DualValue iota(int index, int generators);

  int generators() const { return generators_; }
  std::complex<double> component(std::uint32_t subset) const { return comps_.at(subset); }
  std::complex<double>& component(std::uint32_t subset) { return comps_.at(subset); }
  std::complex<double> scalar_part() const { return comps_[0]; }

  DualValue& operator+=(const DualValue& o);
  DualValue& operator-=(const DualValue& o);
  friend DualValue operator+(DualValue a, const DualValue& b) { return a += b; }
  friend DualValue operator-(DualValue a, const DualValue& b) { return a -= b; }
  friend DualValue operator*(const DualValue& a, const DualValue& b);
  friend DualValue operator*(DualValue a, std::complex<double> c);
  friend DualValue operator*(std::complex<double> c, DualValue a) { return std::move(a) * c; }

  /// Exact Taylor evaluation (the nilpotent part truncates).
  DualValue exp() const;
  DualValue inverse() const;

  double max_abs() const;
  /// |a-b| <= tol * max(1, |a|, |b|) componentwise in the sup norm.
  friend bool approx_equal(const DualValue& a, const DualValue& b, double rel_tol);

  /// "a0 + a_S·ιS + ..." with nonzero components only.
  std::string to_string() const;

 private:
  int generators_;
  std::vector<std::complex<double>> comps_;
};

/// Specializes, then substitutes v = v0 and E = exp(J v0 / 2).
DualValue eval_numeric(const CKScalar& x, const JSignature& sig, std::complex<double> v0);

/// "1/2·E^2 − 1/2·E^-2". jnames defaults to j1, j2, ...
std::string to_string(const CKScalar& x, const std::vector<std::string>& jnames = {});

}  // namespace ckq
