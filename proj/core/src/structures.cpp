#include "ckq/structures.hpp"

#include <algorithm>

#include "ckq/errors.hpp"

namespace ckq {

namespace {

void check_dim(int n) {
  if (n < 3 || n - 1 > kMaxJ) throw BadDimension(n);
}

CKScalar one(int jc) { return CKScalar::constant(1, jc); }

}  // namespace

std::string basis_name(Basis b) { return b == Basis::symplectic ? "symplectic" : "cartesian"; }

Basis parse_basis(std::string_view text) {
  if (text == "symplectic") return Basis::symplectic;
  if (text == "cartesian") return Basis::cartesian;
  throw PreconditionViolation("unknown basis '" + std::string(text) + "'");
}

BaseScalar conj(const BaseScalar& x) {
  return {x.rational_part(), -x.i_part(), x.sqrt2_part(), -x.i_sqrt2_part()};
}

std::vector<int> rho(int n) {
  check_dim(n);
  const int h = n / 2;
  std::vector<int> out;
  if (n % 2 == 1) {
    for (int k = 0; k < h; ++k) out.push_back(2 * h - 1 - 2 * k);
    out.push_back(0);
    for (int k = 0; k < h; ++k) out.push_back(-(1 + 2 * k));
  } else {
    for (int k = 0; k < h; ++k) out.push_back(2 * (h - 1 - k));
    for (int k = 0; k < h; ++k) out.push_back(-2 * k);
  }
  return out;
}

RingMatrix c0_matrix(int n) {
  check_dim(n);
  RingMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = one(n - 1);
  return m;
}

RingMatrix c_q(int n) {
  auto r = rho(n);
  RingMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    int k = n - 1 - i;
    m(i, k) = CKScalar::e_power(r[static_cast<std::size_t>(k)], n - 1);
  }
  return m;
}

RingMatrix d_matrix(int n) {
  check_dim(n);
  const int jc = n - 1, h = n / 2, off = h + n % 2;
  const BaseScalar s = BaseScalar::rational(1, 2) * BaseScalar::sqrt2();  // 1/sqrt2
  const BaseScalar is = BaseScalar::i() * s;
  RingMatrix d(n, n);
  for (int r = 0; r < h; ++r) {
    d(r, r) = CKScalar::constant(s, jc);
    d(r, off + (h - 1 - r)) = CKScalar::constant(s, jc);
    d(off + r, h - 1 - r) = CKScalar::constant(is, jc);
    d(off + r, off + r) = CKScalar::constant(-is, jc);
  }
  if (n % 2 == 1) d(h, h) = one(jc);
  return d;
}

RingMatrix d_inverse(int n) {
  RingMatrix d = d_matrix(n);
  RingMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      auto k = d(r, c).as_constant();
      if (k && !k->is_zero()) out(c, r) = CKScalar::constant(conj(*k), n - 1);
    }
  return out;
}

RingMatrix c_prime(int n) {
  RingMatrix d = d_matrix(n);
  return d * c_q(n) * transpose(d);
}

RingMatrix c_prime_closed(int n) {
  check_dim(n);
  const int jc = n - 1, h = n / 2, off = h + n % 2;
  auto r = rho(n);
  const BaseScalar i = BaseScalar::i();
  RingMatrix m(n, n);
  for (int k = 0; k < h; ++k) {
    const int rk = r[static_cast<std::size_t>(k)];
    const int rm = r[static_cast<std::size_t>(h - 1 - k)];
    m(k, k) = hyper_monomial(HyperKind::cosh, rk, n);
    m(k, off + h - 1 - k) = hyper_monomial(HyperKind::sinh, rk, n) * i;
    m(off + k, h - 1 - k) = hyper_monomial(HyperKind::sinh, rm, n) * (-i);
    m(off + k, off + k) = hyper_monomial(HyperKind::cosh, rm, n);
  }
  if (n % 2 == 1) m(h, h) = one(jc);
  return m;
}

RingMatrix r_q(int n) {
  auto r = rho(n);
  const int jc = n - 1;
  auto idx = [n](int a, int b) { return (a - 1) * n + (b - 1); };
  auto prime = [n](int a) { return n + 1 - a; };
  RingMatrix m(n * n, n * n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      int ex = (i == k ? 1 : 0) - (i == prime(k) ? 1 : 0);
      m(idx(i, k), idx(i, k)) = CKScalar::e_power(2 * ex, jc);
    }
  const CKScalar q_diff = CKScalar::e_power(2, jc) - CKScalar::e_power(-2, jc);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k < i; ++k) {
      m(idx(i, k), idx(k, i)) += q_diff;
      int ex = r[static_cast<std::size_t>(i - 1)] - r[static_cast<std::size_t>(k - 1)];
      m(idx(i, prime(i)), idx(k, prime(k))) -= q_diff * CKScalar::e_power(ex, jc);
    }
  return m;
}

RingMatrix cartesian_conjugate(const RingMatrix& m, int n) {
  if (m.rows() != n * n || m.cols() != n * n) throw DimensionMismatch("cartesian_conjugate expects N^2 x N^2");
  RingMatrix dd = kron(d_matrix(n), d_matrix(n));
  RingMatrix ddi = kron(d_inverse(n), d_inverse(n));
  return dd * m * ddi;
}

RingMatrix symplectic_conjugate(const RingMatrix& m, int n) {
  if (m.rows() != n * n || m.cols() != n * n) throw DimensionMismatch("symplectic_conjugate expects N^2 x N^2");
  RingMatrix dd = kron(d_matrix(n), d_matrix(n));
  RingMatrix ddi = kron(d_inverse(n), d_inverse(n));
  return ddi * m * dd;
}

RingMatrix deform_to_j(const RingMatrix& m) { return m; }

RingMatrix r_plus(const RingMatrix& rv, int n) {
  RingMatrix p = permute_P(n, n - 1);
  return p * rv * p;
}

RingMatrix r_minus(const RingMatrix& rv) { return tri_inverse(rv); }

CKScalar j_tilde(int k, int p, int n) {
  Monomial m;
  for (int r = std::min(k, p); r < std::max(k, p); ++r) m.j[static_cast<std::size_t>(r - 1)] = 1;
  return CKScalar::term(1, m, n - 1);
}

namespace {

AlgMatrix prefixed(int n, Family f) {
  check_dim(n);
  AlgMatrix m(n, n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) m(r - 1, c - 1) = NCPoly::symbol(sym(f, r, c), n - 1) * j_tilde(r, c, n);
  return m;
}

}  // namespace

AlgMatrix classical_a(int n) { return prefixed(n, Family::a); }

AlgMatrix classical_b(int n) { return d_inverse(n) * classical_a(n) * d_matrix(n); }

AlgMatrix quantum_u(int n) { return prefixed(n, Family::u); }

// ------------------------------------------------------- symplectic naming

namespace {

using LinearForm = std::map<std::pair<int, int>, BaseScalar>;  // (i,k) -> coeff of u_ik

int degree(const Monomial& m) {
  int d = 0;
  for (int x : m.j) d += x;
  return d;
}

// Degree ascending, then exponent vector descending (j1 before j2).
bool part_order(const Monomial& a, const Monomial& b) {
  if (degree(a) != degree(b)) return degree(a) < degree(b);
  return a.j > b.j;
}

BaseScalar phase_of(const BaseScalar& c) {
  if (c.is_real()) return c.real_sign() > 0 ? BaseScalar(1) : BaseScalar(-1);
  if (c.is_imaginary()) {
    BaseScalar im(c.i_part(), 0, c.i_sqrt2_part(), 0);
    return im.real_sign() > 0 ? BaseScalar::i() : -BaseScalar::i();
  }
  throw PreconditionViolation("symplectic generator with a non-axis phase");
}

std::optional<BaseScalar> ratio(const LinearForm& x, const LinearForm& base) {
  if (x.size() != base.size()) return std::nullopt;
  std::optional<BaseScalar> lambda;
  for (const auto& [key, c] : x) {
    auto it = base.find(key);
    if (it == base.end()) return std::nullopt;
    BaseScalar l = c / it->second;
    if (lambda && !(*lambda == l)) return std::nullopt;
    lambda = l;
  }
  return lambda;
}

}  // namespace

SymplecticGenerators quantum_t(int n) {
  check_dim(n);
  const int jc = n - 1, h = n / 2;
  RingMatrix d = d_matrix(n), di = d_inverse(n);

  // orbits of i -> i' = n+1-i
  std::vector<std::vector<int>> orbits;
  for (int p = 1; p <= h; ++p) orbits.push_back({p, n + 1 - p});
  if (n % 2 == 1) orbits.push_back({h + 1});

  SymplecticGenerators out;
  out.t = AlgMatrix(n, n);

  for (const auto& P : orbits) {
    for (const auto& Q : orbits) {
      const int p = P.front(), q = Q.front();
      std::vector<GenSymbol> slots;
      if (P.size() == 2 && Q.size() == 2) {
        slots = {sym(Family::t, p, q), sym(Family::tTilde, p, q), sym(Family::t, p, Q[1]), sym(Family::tTilde, p, Q[1])};
      } else if (P.size() == 2 || Q.size() == 2) {
        slots = {sym(Family::t, p, q), sym(Family::tTilde, p, q)};
      } else {
        slots = {sym(Family::t, p, q)};
      }
      std::vector<std::pair<GenSymbol, LinearForm>> found;

      for (int a : P) {
        for (int b : Q) {
          std::map<Monomial, LinearForm> parts;
          for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k) {
              auto x = di.at1(a, i).as_constant();
              auto y = d.at1(k, b).as_constant();
              if (!x || !y || x->is_zero() || y->is_zero()) continue;
              Monomial m = j_tilde(i, k, n).terms().begin()->first;
              auto& form = parts[m];
              form[{i, k}] += *x * *y;
              if (form[{i, k}].is_zero()) form.erase({i, k});
            }
          std::vector<Monomial> order;
          for (const auto& [m, f] : parts)
            if (!f.empty()) order.push_back(m);
          std::sort(order.begin(), order.end(), part_order);

          NCPoly entry;
          for (const Monomial& m : order) {
            LinearForm form = parts[m];
            BaseScalar ph = phase_of(form.begin()->second);
            LinearForm normalized;
            for (const auto& [key, c] : form) normalized[key] = c / ph;

            std::optional<GenSymbol> name;
            BaseScalar coeff = ph;
            for (const auto& [g, f] : found) {
              if (auto l = ratio(normalized, f)) {
                name = g;
                coeff = ph * *l;
                break;
              }
            }
            if (!name) {
              if (found.size() >= slots.size())
                throw PreconditionViolation("symplectic naming: block has more generators than slots");
              name = slots[found.size()];
              found.emplace_back(*name, normalized);
              NCPoly def;
              for (const auto& [key, c] : normalized)
                def.add_term({sym(Family::u, key.first, key.second)}, CKScalar::constant(c, jc));
              out.definitions[*name] = def;
              out.symbols.push_back(*name);
            }
            entry.add_term({*name}, CKScalar::term(coeff, m, jc));
          }
          out.t(a - 1, b - 1) = entry;
        }
      }
      if (found.size() != slots.size()) throw PreconditionViolation("symplectic naming: block has unused slots");
    }
  }
  std::sort(out.symbols.begin(), out.symbols.end());
  return out;
}

// ------------------------------------------------------------------- L^(±)

namespace {

NCPoly mirror(const NCPoly& entry) {
  NCPoly out;
  for (const auto& [w, c] : entry.terms()) {
    GenSymbol g = w.front();
    g.family = g.family == Family::t ? Family::l : Family::lTilde;
    const auto& [m, b] = *c.terms().begin();
    Monomial inv;
    for (int k = 0; k < kMaxJ; ++k) inv.j[static_cast<std::size_t>(k)] = -m.j[static_cast<std::size_t>(k)];
    out.add_term({g}, CKScalar::term(b, inv, c.jcount()));
  }
  return out;
}

AlgMatrix l_matrix(int n, bool plus) {
  auto t = quantum_t(n).t;
  const int jc = n - 1, h = n / 2;
  AlgMatrix m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (plus ? a < b : a > b) m(a, b) = mirror(t(a, b));
  for (int k = 1; k <= h; ++k) {
    GenSymbol pk = sym(Family::lDiagPlus, k, k), mk = sym(Family::lDiagMinus, k, k);
    m(k - 1, k - 1) = NCPoly::symbol(plus ? pk : mk, jc);
    m(n - k, n - k) = NCPoly::symbol(plus ? mk : pk, jc);
  }
  if (n % 2 == 1) m(h, h) = NCPoly::constant(one(jc));
  return m;
}

}  // namespace

AlgMatrix l_plus(int n) { return l_matrix(n, true); }
AlgMatrix l_minus(int n) { return l_matrix(n, false); }

std::vector<GenSymbol> functional_symbols(int n) {
  std::set<GenSymbol> all;
  for (const auto& m : {l_plus(n), l_minus(n)})
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        auto s = m(r, c).symbols();
        all.insert(s.begin(), s.end());
      }
  return {all.begin(), all.end()};
}

// ------------------------------------------------------------- specialize

RingMatrix specialize(const RingMatrix& m, const JSignature& sig) {
  return m.map([&](const CKScalar& x) { return x.is_zero() ? x : specialize(x, sig); });
}

NCPoly specialize(const NCPoly& p, const JSignature& sig) {
  return p.map_coefficients([&](const CKScalar& c) { return specialize(c, sig); });
}

AlgMatrix specialize(const AlgMatrix& m, const JSignature& sig) {
  return m.map([&](const NCPoly& p) { return specialize(p, sig); });
}

CKScalar at_v0(const CKScalar& x) {
  return x.map_terms([](const Monomial& m, const BaseScalar& c) -> std::optional<std::pair<Monomial, BaseScalar>> {
    if (m.v > 0) return std::nullopt;
    Monomial r = m;
    r.e = 0;
    return std::make_pair(r, c);
  });
}

RingMatrix at_v0(const RingMatrix& m) { return m.map([](const CKScalar& x) { return at_v0(x); }); }

// ----------------------------------------------------------------- bundle

StructureBundle make_bundle(int n, Basis basis, const std::optional<JSignature>& sig) {
  check_dim(n);
  if (sig && sig->size() != n - 1)
    throw DimensionMismatch("signature has " + std::to_string(sig->size()) + " entries, expected " + std::to_string(n - 1));
  StructureBundle b;
  b.n = n;
  b.basis = basis;
  b.sig = sig;
  b.rho2 = rho(n);
  b.c0 = c0_matrix(n);
  b.c = c_q(n);
  b.d = d_matrix(n);
  b.d_inv = d_inverse(n);
  b.c_prime = c_prime(n);
  b.r_q = r_q(n);
  b.r_tilde = cartesian_conjugate(b.r_q, n);
  b.r_v = deform_to_j(b.r_q);
  b.c_j = deform_to_j(b.c);
  b.c_prime_j = deform_to_j(b.c_prime);
  b.r_plus = r_plus(b.r_v, n);
  b.r_minus = r_minus(b.r_v);
  b.a = classical_a(n);
  b.b = classical_b(n);
  b.u = quantum_u(n);
  auto sg = quantum_t(n);
  b.t = std::move(sg.t);
  b.t_definitions = std::move(sg.definitions);
  b.l_plus = l_plus(n);
  b.l_minus = l_minus(n);
  b.metric_inv = adjugate_inverse(basis == Basis::symplectic ? b.c_j : b.c_prime_j);

  if (sig) {
    for (RingMatrix* m : {&b.c0, &b.c, &b.d, &b.d_inv, &b.c_prime, &b.r_q, &b.r_tilde, &b.r_v, &b.c_j, &b.c_prime_j,
                          &b.r_plus, &b.r_minus, &b.metric_inv})
      *m = specialize(*m, *sig);
    for (AlgMatrix* m : {&b.a, &b.b, &b.u, &b.t}) *m = specialize(*m, *sig);
  }
  return b;
}

}  // namespace ckq
