#include "ckq/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ckq/errors.hpp"

namespace ckq {

namespace {

std::strong_ordering cmp_q(const Rational& x, const Rational& y) {
  int c = cmp(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string q_str(const Rational& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------- BaseScalar

BaseScalar::BaseScalar(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

BaseScalar BaseScalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return {q, 0, 0, 0};
}

BaseScalar& BaseScalar::operator+=(const BaseScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

BaseScalar& BaseScalar::operator-=(const BaseScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

// Basis {1, i, s, is} with s = sqrt2, i^2 = -1, s^2 = 2.
BaseScalar& BaseScalar::operator*=(const BaseScalar& o) {
  if (o.b_ == 0 && o.c_ == 0 && o.d_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
    c_ *= o.a_;
    d_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ - b_ * o.b_ + 2 * (c_ * o.c_) - 2 * (d_ * o.d_);
  Rational b = a_ * o.b_ + b_ * o.a_ + 2 * (c_ * o.d_ + d_ * o.c_);
  Rational c = a_ * o.c_ + c_ * o.a_ - (b_ * o.d_ + d_ * o.b_);
  Rational d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  d_ = std::move(d);
  return *this;
}

// x = P + iQ with P, Q in Q(sqrt2); 1/x = (P - iQ) / (P^2 + Q^2).
BaseScalar BaseScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n0 = a_ * a_ + b_ * b_ + 2 * (c_ * c_ + d_ * d_);
  Rational n1 = 2 * (a_ * c_ + b_ * d_);
  Rational norm = n0 * n0 - 2 * (n1 * n1);
  BaseScalar conj_norm(n0 / norm, 0, -n1 / norm, 0);
  BaseScalar conj(a_, -b_, c_, -d_);
  return conj * conj_norm;
}

BaseScalar BaseScalar::i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return i();
    case 2: return -1;
    default: return -i();
  }
}

bool operator==(const BaseScalar& x, const BaseScalar& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::strong_ordering operator<=>(const BaseScalar& x, const BaseScalar& y) {
  if (auto c = cmp_q(x.a_, y.a_); c != 0) return c;
  if (auto c = cmp_q(x.b_, y.b_); c != 0) return c;
  if (auto c = cmp_q(x.c_, y.c_); c != 0) return c;
  return cmp_q(x.d_, y.d_);
}

std::complex<double> BaseScalar::to_complex() const {
  const double s = std::sqrt(2.0);
  return {a_.get_d() + s * c_.get_d(), b_.get_d() + s * d_.get_d()};
}

int BaseScalar::real_sign() const {
  // sign of a + c*sqrt2
  int sa = sgn(a_), sc = sgn(c_);
  if (sc == 0) return sa;
  if (sa == 0 || sa == sc) return sc;
  // opposite signs: compare a^2 with 2c^2
  int m = cmp(a_ * a_, 2 * (c_ * c_));
  return m > 0 ? sa : sc;
}

std::string BaseScalar::to_string() const {
  struct Part {
    const Rational* q;
    const char* basis;
  };
  const Part parts[] = {{&a_, ""}, {&b_, "i"}, {&c_, "√2"}, {&d_, "i√2"}};
  std::string out;
  int count = 0;
  for (const auto& p : parts) {
    if (sgn(*p.q) == 0) continue;
    bool neg = sgn(*p.q) < 0;
    Rational mag = abs(*p.q);
    std::string body;
    if (*p.basis == '\0') {
      body = q_str(mag);
    } else if (mag == 1) {
      body = p.basis;
    } else {
      body = q_str(mag) + "·" + p.basis;
    }
    if (count == 0) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    ++count;
  }
  if (count == 0) return "0";
  if (count > 1) return "(" + out + ")";
  return out;
}

// ------------------------------------------------------------------ Monomial

Monomial& Monomial::operator*=(const Monomial& o) {
  e += o.e;
  v += o.v;
  for (int k = 0; k < kMaxJ; ++k) j[static_cast<std::size_t>(k)] += o.j[static_cast<std::size_t>(k)];
  return *this;
}

bool Monomial::is_one() const {
  return e == 0 && v == 0 && std::all_of(j.begin(), j.end(), [](int x) { return x == 0; });
}

// ------------------------------------------------------------------ CKScalar

CKScalar::CKScalar(int jcount) : jcount_(jcount) {
  if (jcount < 0 || jcount > kMaxJ) throw PreconditionViolation("j-count out of range");
}

CKScalar CKScalar::constant(const BaseScalar& c, int jcount) {
  CKScalar x(jcount);
  x.add_term(Monomial{}, c);
  return x;
}

CKScalar CKScalar::term(const BaseScalar& c, const Monomial& m, int jcount) {
  CKScalar x(jcount);
  for (int k = jcount; k < kMaxJ; ++k) {
    if (m.j[static_cast<std::size_t>(k)] != 0) throw DimensionMismatch("monomial uses j slot beyond j-count");
  }
  if (m.v < 0) throw PreconditionViolation("negative v degree");
  x.add_term(m, c);
  return x;
}

CKScalar CKScalar::e_power(int k, int jcount) {
  Monomial m;
  m.e = k;
  return term(1, m, jcount);
}

CKScalar CKScalar::v_power(int k, int jcount) {
  Monomial m;
  m.v = k;
  return term(1, m, jcount);
}

CKScalar CKScalar::j_power(int index, int k, int jcount) {
  if (index < 0 || index >= jcount) throw DimensionMismatch("j index out of range");
  Monomial m;
  m.j[static_cast<std::size_t>(index)] = k;
  return term(1, m, jcount);
}

bool CKScalar::is_unit() const { return terms_.size() == 1 && terms_.begin()->first.v == 0; }

std::optional<BaseScalar> CKScalar::as_constant() const {
  if (terms_.empty()) return BaseScalar{};
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

BaseScalar CKScalar::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BaseScalar{} : it->second;
}

void CKScalar::add_term(const Monomial& m, const BaseScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int CKScalar::unify(const CKScalar& o) const {
  if (jcount_ < 0) return o.jcount_;
  if (o.jcount_ < 0 || o.jcount_ == jcount_) return jcount_;
  throw DimensionMismatch("CKScalar j-count " + std::to_string(jcount_) + " vs " +
                          std::to_string(o.jcount_));
}

CKScalar CKScalar::operator-() const {
  CKScalar out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

CKScalar& CKScalar::operator+=(const CKScalar& o) {
  jcount_ = unify(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CKScalar& CKScalar::operator-=(const CKScalar& o) {
  jcount_ = unify(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CKScalar operator*(const CKScalar& x, const CKScalar& y) {
  CKScalar out;
  out.jcount_ = x.unify(y);
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) out.add_term(mx * my, cx * cy);
  return out;
}

CKScalar& CKScalar::operator*=(const CKScalar& o) {
  *this = *this * o;
  return *this;
}

CKScalar& CKScalar::operator*=(const BaseScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

void add_product(CKScalar& acc, const CKScalar& x, const CKScalar& y) {
  if (x.is_zero() || y.is_zero()) return;
  acc.jcount_ = acc.unify(x);
  acc.jcount_ = acc.unify(y);
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) acc.add_term(mx * my, cx * cy);
}

CKScalar CKScalar::inverse() const {
  if (terms_.size() != 1) throw NotAUnit(to_string(*this));
  const auto& [m, c] = *terms_.begin();
  if (m.v != 0) throw NotAUnit(to_string(*this));
  Monomial inv;
  inv.e = -m.e;
  for (int k = 0; k < kMaxJ; ++k) inv.j[static_cast<std::size_t>(k)] = -m.j[static_cast<std::size_t>(k)];
  CKScalar out(jcount_ < 0 ? 0 : jcount_);
  out.jcount_ = jcount_;
  out.add_term(inv, c.inverse());
  return out;
}

std::strong_ordering operator<=>(const CKScalar& x, const CKScalar& y) {
  auto ix = x.terms_.begin(), iy = y.terms_.begin();
  for (; ix != x.terms_.end() && iy != y.terms_.end(); ++ix, ++iy) {
    if (auto c = ix->first <=> iy->first; c != 0) return c;
    if (auto c = ix->second <=> iy->second; c != 0) return c;
  }
  if (ix != x.terms_.end()) return std::strong_ordering::greater;
  if (iy != y.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- JSignature

JSignature::JSignature(std::vector<JKind> kinds) : kinds_(std::move(kinds)) {
  if (static_cast<int>(kinds_.size()) > kMaxJ) throw PreconditionViolation("too many j parameters");
}

JSignature JSignature::parse(std::string_view text) {
  std::vector<JKind> kinds;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok == "1") {
      kinds.push_back(JKind::one);
    } else if (tok == "iota") {
      kinds.push_back(JKind::nilpotent);
    } else if (tok == "i") {
      kinds.push_back(JKind::imaginary);
    } else {
      throw PreconditionViolation("bad j token '" + std::string(tok) + "' (expected 1, iota or i)");
    }
    pos = end + 1;
  }
  return JSignature(std::move(kinds));
}

JSignature JSignature::all(int size, JKind kind) {
  return JSignature(std::vector<JKind>(static_cast<std::size_t>(size), kind));
}

bool JSignature::has_nilpotent() const {
  return std::any_of(kinds_.begin(), kinds_.end(), [](JKind k) { return k == JKind::nilpotent; });
}

int JSignature::imaginary_count() const {
  return static_cast<int>(std::count(kinds_.begin(), kinds_.end(), JKind::imaginary));
}

std::vector<std::string> JSignature::tokens() const {
  std::vector<std::string> out;
  for (JKind k : kinds_) out.emplace_back(k == JKind::one ? "1" : k == JKind::nilpotent ? "iota" : "i");
  return out;
}

std::vector<std::string> JSignature::slot_names() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < kinds_.size(); ++k) {
    switch (kinds_[k]) {
      case JKind::one: out.emplace_back("1"); break;
      case JKind::imaginary: out.emplace_back("i"); break;
      case JKind::nilpotent: out.push_back("ι" + std::to_string(k + 1)); break;
    }
  }
  return out;
}

std::vector<bool> nilpotent_mask(const JSignature& sig) {
  std::vector<bool> mask;
  for (JKind k : sig.kinds()) mask.push_back(k == JKind::nilpotent);
  return mask;
}

// ---------------------------------------------------------------- hyperbolic

CKScalar hyper_monomial(HyperKind kind, int half_steps, int n) {
  const int jc = n - 1;
  if (jc < 0) throw BadDimension(n);
  CKScalar up = CKScalar::e_power(half_steps, jc);
  if (kind == HyperKind::exp) return up;
  CKScalar down = CKScalar::e_power(-half_steps, jc);
  BaseScalar half = BaseScalar::rational(1, 2);
  if (kind == HyperKind::cosh) return (up + down) * half;
  return (up - down) * half;
}

// ---------------------------------------------------------------- specialize

namespace {

std::string slot_list(const Monomial& m, int jc) {
  std::string s;
  for (int k = 0; k < jc; ++k) {
    if (m.j[static_cast<std::size_t>(k)] < 0) {
      if (!s.empty()) s += ", ";
      s += "ι" + std::to_string(k + 1) + "^" + std::to_string(m.j[static_cast<std::size_t>(k)]);
    }
  }
  return s;
}

}  // namespace

CKScalar specialize(const CKScalar& x, const JSignature& sig) {
  const int jc = x.jcount() < 0 ? sig.size() : x.jcount();
  if (sig.size() != jc) throw DimensionMismatch("signature length vs scalar j-count");
  const int imag = sig.imaginary_count();
  CKScalar out(jc);
  std::vector<int> nil;
  for (int k = 0; k < jc; ++k)
    if (sig[k] == JKind::nilpotent) nil.push_back(k);

  for (const auto& [m, c] : x.terms()) {
    int imag_exp = 0;
    for (int k = 0; k < jc; ++k)
      if (sig[k] == JKind::imaginary) imag_exp += m.j[static_cast<std::size_t>(k)];
    BaseScalar base = c * BaseScalar::i_power(imag_exp);

    if (nil.empty()) {
      Monomial r;
      r.e = m.e;
      r.v = m.v;
      out += CKScalar::term(base, r, jc);
      continue;
    }

    // E^a = sum_n (a/2)^n v^n J^n / n!, J = i^imag * prod iota_k.
    int max_c = m.j[static_cast<std::size_t>(nil.front())];
    for (int k : nil) max_c = std::max(max_c, m.j[static_cast<std::size_t>(k)]);
    const int n_max = m.e == 0 ? 0 : 1 - max_c;
    Rational half_a(m.e, 2);
    half_a.canonicalize();
    Rational factor(1);
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) factor *= half_a / n;
      Monomial r;
      r.v = m.v + n;
      bool dead = false;
      for (int k : nil) {
        int ex = m.j[static_cast<std::size_t>(k)] + n;
        if (ex >= 2) dead = true;
        r.j[static_cast<std::size_t>(k)] = ex;
      }
      if (dead) continue;
      BaseScalar coeff = base * BaseScalar(factor, 0, 0, 0) * BaseScalar::i_power(n * imag);
      out += CKScalar::term(coeff, r, jc);
    }
  }

  for (const auto& [m, c] : out.terms()) {
    for (int k : nil) {
      if (m.j[static_cast<std::size_t>(k)] < 0) throw NegativeNilpotentPower(slot_list(m, jc) + " in " + to_string(x));
    }
  }
  return out;
}

// ----------------------------------------------------------------- DualValue

DualValue::DualValue(int generators)
    : generators_(generators), comps_(std::size_t{1} << generators) {
  if (generators < 0 || generators > kMaxJ) throw PreconditionViolation("dual generator count out of range");
}

DualValue DualValue::scalar(std::complex<double> c, int generators) {
  DualValue d(generators);
  d.comps_[0] = c;
  return d;
}

DualValue DualValue::iota(int index, int generators) {
  DualValue d(generators);
  d.comps_.at(std::size_t{1} << index) = 1.0;
  return d;
}

DualValue& DualValue::operator+=(const DualValue& o) {
  if (o.generators_ != generators_) throw DimensionMismatch("DualValue generator count");
  for (std::size_t s = 0; s < comps_.size(); ++s) comps_[s] += o.comps_[s];
  return *this;
}

DualValue& DualValue::operator-=(const DualValue& o) {
  if (o.generators_ != generators_) throw DimensionMismatch("DualValue generator count");
  for (std::size_t s = 0; s < comps_.size(); ++s) comps_[s] -= o.comps_[s];
  return *this;
}

DualValue operator*(const DualValue& a, const DualValue& b) {
  if (a.generators_ != b.generators_) throw DimensionMismatch("DualValue generator count");
  DualValue out(a.generators_);
  const std::size_t n = a.comps_.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (a.comps_[x] == 0.0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if ((x & y) != 0) continue;
      out.comps_[x | y] += a.comps_[x] * b.comps_[y];
    }
  }
  return out;
}

DualValue operator*(DualValue a, std::complex<double> c) {
  for (auto& x : a.comps_) x *= c;
  return a;
}

DualValue DualValue::exp() const {
  DualValue nil = *this;
  nil.comps_[0] = 0.0;
  DualValue sum = scalar(1.0, generators_);
  DualValue power = sum;
  for (int k = 1; k <= generators_; ++k) {
    power = power * nil * (1.0 / k);
    sum += power;
  }
  return sum * std::exp(comps_[0]);
}

DualValue DualValue::inverse() const {
  if (comps_[0] == 0.0) throw DivisionByZero();
  std::complex<double> inv0 = 1.0 / comps_[0];
  DualValue nil = *this * inv0;
  nil.comps_[0] = 0.0;
  DualValue sum = scalar(1.0, generators_);
  DualValue power = sum;
  for (int k = 1; k <= generators_; ++k) {
    power = power * nil * -1.0;
    sum += power;
  }
  return sum * inv0;
}

double DualValue::max_abs() const {
  double m = 0;
  for (const auto& c : comps_) m = std::max(m, std::abs(c));
  return m;
}

bool approx_equal(const DualValue& a, const DualValue& b, double rel_tol) {
  if (a.generators_ != b.generators_) return false;
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  for (std::size_t s = 0; s < a.comps_.size(); ++s) {
    if (std::abs(a.comps_[s] - b.comps_[s]) > rel_tol * scale) return false;
  }
  return true;
}

namespace {

std::string complex_str(std::complex<double> c) {
  char buf[96];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", c.real());
  } else if (c.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12gi", c.imag());
  } else {
    std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real(), c.imag());
  }
  return buf;
}

}  // namespace

std::string DualValue::to_string() const {
  std::string out = complex_str(comps_[0]);
  for (std::size_t s = 1; s < comps_.size(); ++s) {
    if (comps_[s] == 0.0) continue;
    out += " + " + complex_str(comps_[s]) + "·";
    for (int k = 0; k < generators_; ++k)
      if (s & (std::size_t{1} << k)) out += "ι" + std::to_string(k + 1);
  }
  return out;
}

DualValue eval_numeric(const CKScalar& x, const JSignature& sig, std::complex<double> v0) {
  CKScalar s = specialize(x, sig);
  const int jc = sig.size();
  const bool nil = sig.has_nilpotent();
  const std::complex<double> j0 = BaseScalar::i_power(sig.imaginary_count()).to_complex();
  const std::complex<double> e0 = std::exp(j0 * v0 / 2.0);
  DualValue out(jc);
  for (const auto& [m, c] : s.terms()) {
    std::complex<double> val = c.to_complex() * std::pow(v0, m.v);
    if (!nil) val *= std::pow(e0, m.e);
    std::uint32_t subset = 0;
    for (int k = 0; k < jc; ++k)
      if (m.j[static_cast<std::size_t>(k)] == 1 && sig[k] == JKind::nilpotent) subset |= 1u << k;
    out.component(subset) += val;
  }
  return out;
}

// ------------------------------------------------------------------ rendering

std::string to_string(const CKScalar& x, const std::vector<std::string>& jnames) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  const int jc = std::max(0, x.jcount());
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::vector<std::string> factors;
    if (m.e != 0) factors.push_back(m.e == 1 ? "E" : "E^" + std::to_string(m.e));
    if (m.v != 0) factors.push_back(m.v == 1 ? "v" : "v^" + std::to_string(m.v));
    for (int k = 0; k < jc; ++k) {
      int ex = m.j[static_cast<std::size_t>(k)];
      if (ex == 0) continue;
      std::string name = static_cast<std::size_t>(k) < jnames.size() ? jnames[static_cast<std::size_t>(k)]
                                                                    : "j" + std::to_string(k + 1);
      factors.push_back(ex == 1 ? name : name + "^" + std::to_string(ex));
    }
    bool neg = false;
    BaseScalar mag = c;
    const bool single = (c.is_real() && sgn(c.sqrt2_part()) == 0) || (c.is_real() && sgn(c.rational_part()) == 0) ||
                        (c.is_imaginary() && (sgn(c.i_part()) == 0 || sgn(c.i_sqrt2_part()) == 0));
    if (single) {
      int sign = c.is_real() ? c.real_sign() : sgn(c.i_part()) != 0 ? sgn(c.i_part()) : sgn(c.i_sqrt2_part());
      if (sign < 0) {
        neg = true;
        mag = -c;
      }
    }
    std::string body;
    const bool unit_coeff = mag == BaseScalar(1);
    if (factors.empty()) {
      body = mag.to_string();
    } else {
      if (!unit_coeff) body = mag.to_string() + "·";
      for (std::size_t f = 0; f < factors.size(); ++f) body += (f ? "·" : "") + factors[f];
    }
    if (first) {
      out = (neg ? "−" : "") + body;
    } else {
      out += (neg ? " − " : " + ") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace ckq
