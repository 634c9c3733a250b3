#include "ckq/relations.hpp"

#include <algorithm>
#include <chrono>

namespace ckq {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string clip(std::string s) {
  constexpr std::size_t kMax = 400;
  if (s.size() > kMax) s = s.substr(0, kMax) + " ...";
  return s;
}

std::string pair_index(int flat, int n) {
  return "(" + std::to_string(flat / n + 1) + "," + std::to_string(flat % n + 1) + ")";
}

std::string entry_label(const std::string& prefix, int r, int c, int n) {
  return prefix + "[" + pair_index(r, n) + "," + pair_index(c, n) + "]";
}

std::string entry_label(const std::string& prefix, int r, int c) {
  return prefix + "[" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "]";
}

NCPoly respecialize(const NCPoly& p, const std::optional<JSignature>& sig) {
  return sig ? specialize(p, *sig) : p;
}

std::vector<bool> mask_of(const std::optional<JSignature>& sig) {
  return sig ? nilpotent_mask(*sig) : std::vector<bool>{};
}

}  // namespace

void VerificationReport::fail(std::string location, std::string residual) {
  pass = false;
  witness.push_back({std::move(location), clip(std::move(residual))});
}

// ------------------------------------------------------------------ RTT

RelationSet expand_rll(const RingMatrix& r, const AlgMatrix& a, const AlgMatrix& b, const std::string& prefix,
                       const std::optional<JSignature>& sig) {
  const int n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n) throw DimensionMismatch("expand_rll: generator matrices must be N x N");
  if (r.rows() != n * n || r.cols() != n * n) throw DimensionMismatch("expand_rll: R must be N^2 x N^2");
  AlgMatrix x(n * n, n * n), y(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          if (b(j, l).is_zero()) continue;
          x(i * n + j, k * n + l) = a(i, k) * b(j, l);
          y(i * n + j, k * n + l) = b(j, l) * a(i, k);
        }
    }
  AlgMatrix defect = r * x - y * r;
  std::vector<Relation> rels;
  for (int row = 0; row < n * n; ++row)
    for (int col = 0; col < n * n; ++col) {
      NCPoly p = respecialize(defect(row, col), sig);
      if (!p.is_zero()) rels.push_back({std::move(p), entry_label(prefix, row, col, n)});
    }
  return canonicalize_relations(std::move(rels), mask_of(sig));
}

RelationSet expand_rtt(const RingMatrix& r, const AlgMatrix& g, const std::optional<JSignature>& sig) {
  return expand_rll(r, g, g, "RTT", sig);
}

// --------------------------------------------------------- orthogonality

RelationSet expand_orthogonality(const AlgMatrix& g, const RingMatrix& c, Side side,
                                 const std::optional<JSignature>& sig, const RingMatrix* cinv) {
  const int n = g.rows();
  if (g.cols() != n || c.rows() != n || c.cols() != n) throw DimensionMismatch("expand_orthogonality");
  std::vector<Relation> rels;
  auto collect = [&](const AlgMatrix& defect, const std::string& prefix) {
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) {
        NCPoly p = respecialize(defect(r, k), sig);
        if (!p.is_zero()) rels.push_back({std::move(p), entry_label(prefix, r, k)});
      }
  };
  AlgMatrix gt = transpose(g);
  if (side != Side::inverse) collect(g * c * gt - to_alg(c), "GCGt");
  if (side != Side::primal) {
    RingMatrix ci = cinv ? *cinv : adjugate_inverse(c);
    if (sig && !cinv) ci = specialize(ci, *sig);
    collect(gt * ci * g - to_alg(ci), "GtCinvG");
  }
  return canonicalize_relations(std::move(rels), mask_of(sig));
}

// ----------------------------------------------------------- Yang-Baxter

VerificationReport yang_baxter(const RingMatrix& r, const std::optional<JSignature>& sig) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.name = "yang-baxter";
  int n = 0;
  while (n * n < r.rows()) ++n;
  if (n * n != r.rows() || r.rows() != r.cols()) throw DimensionMismatch("yang_baxter expects N^2 x N^2");
  int jc = 0;
  for (int i = 0; i < r.rows() && jc == 0; ++i)
    for (int k = 0; k < r.cols(); ++k)
      if (r(i, k).jcount() > 0) {
        jc = r(i, k).jcount();
        break;
      }
  RingMatrix r12 = embed_left(r, n);
  RingMatrix r23 = embed_right(r, n);
  RingMatrix p23 = embed_right(permute_P(n, jc), n);
  RingMatrix r13 = p23 * r12 * p23;
  RingMatrix lhs = r12 * r13 * r23;
  RingMatrix rhs = r23 * r13 * r12;
  for (int i = 0; i < lhs.rows(); ++i)
    for (int k = 0; k < lhs.cols(); ++k) {
      if (lhs(i, k) == rhs(i, k)) continue;
      CKScalar d = lhs(i, k) - rhs(i, k);
      if (sig) d = specialize(d, *sig);
      if (d.is_zero()) continue;
      if (rep.witness.size() < 8) {
        rep.fail("(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")", to_string(d));
      } else {
        rep.pass = false;
      }
    }
  rep.seconds = since(t0);
  return rep;
}

// ----------------------------------------------------------- contraction

Contraction contraction_decompose(const RingMatrix& rv, const JSignature& sig) {
  auto t0 = Clock::now();
  if (!sig.has_nilpotent()) throw PreconditionViolation("contraction needs at least one nilpotent j");
  const int jc = sig.size();
  RingMatrix s = specialize(rv, sig);
  Monomial jv;
  jv.v = 1;
  for (int k = 0; k < jc; ++k)
    if (sig[k] == JKind::nilpotent) jv.j[static_cast<std::size_t>(k)] = 1;
  const BaseScalar j_phase = BaseScalar::i_power(sig.imaginary_count());

  Contraction out;
  out.report.name = "contraction";
  out.r_tilde = RingMatrix(s.rows(), s.cols());
  for (int r = 0; r < s.rows(); ++r)
    for (int c = 0; c < s.cols(); ++c) {
      CKScalar rest = s(r, c);
      if (r == c) rest -= CKScalar::constant(1, jc);
      if (rest.is_zero()) continue;
      if (rest.terms().size() != 1 || !(rest.terms().begin()->first == jv))
        throw NotAffineInJv("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = " +
                            to_string(s(r, c), sig.slot_names()));
      out.r_tilde(r, c) = CKScalar::constant(rest.terms().begin()->second / j_phase, jc);
    }
  out.report.seconds = since(t0);
  return out;
}

// ------------------------------------------------------------------ Hopf

std::map<GenSymbol, CKScalar> counit_values(const AlgMatrix& g, const std::vector<bool>& nilpotent) {
  const int n = g.rows();
  std::vector<GenSymbol> syms;
  {
    std::set<GenSymbol> all;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < g.cols(); ++c) {
        auto s = g(r, c).symbols();
        all.insert(s.begin(), s.end());
      }
    syms.assign(all.begin(), all.end());
  }
  int jc = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < g.cols(); ++c)
      for (const auto& [w, k] : g(r, c).terms()) jc = std::max(jc, k.jcount());

  const int rows = n * g.cols();
  RingMatrix a(rows, static_cast<int>(syms.size())), b(rows, 1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < g.cols(); ++c) {
      const int row = r * g.cols() + c;
      for (const auto& [w, k] : g(r, c).terms()) {
        if (w.size() != 1) throw PreconditionViolation("counit: generator matrix entries must be linear");
        auto pos = std::lower_bound(syms.begin(), syms.end(), w.front()) - syms.begin();
        a(row, static_cast<int>(pos)) += k;
      }
      CKScalar rhs = CKScalar(jc);
      if (r == c) rhs = CKScalar::constant(1, jc);
      // a constant term moves to the right-hand side
      rhs -= g(r, c).coefficient({});
      b(row, 0) = rhs;
    }
  Elimination el = gauss_jordan(a, b, nilpotent);
  std::map<GenSymbol, CKScalar> values;
  for (const auto& s : syms) values[s] = CKScalar(jc);
  for (int k = 0; k < el.rank; ++k)
    values[syms[static_cast<std::size_t>(el.pivot_cols[static_cast<std::size_t>(k)])]] = b(k, 0);
  return values;
}

CKScalar evaluate(const NCPoly& p, const std::map<GenSymbol, CKScalar>& values) {
  CKScalar acc;
  for (const auto& [w, c] : p.terms()) {
    CKScalar term = c;
    for (const auto& g : w) {
      auto it = values.find(g);
      if (it == values.end()) throw PreconditionViolation("no value for " + g.name());
      term *= it->second;
      if (term.is_zero()) break;
    }
    acc += term;
  }
  return acc;
}

RelationSet bundle_relations(const StructureBundle& b) {
  RelationSet rtt = expand_rtt(b.r(), b.g(), b.sig);
  RelationSet orth = expand_orthogonality(b.g(), b.metric(), Side::both, b.sig, &b.metric_inv);
  std::vector<Relation> all(rtt.begin(), rtt.end());
  all.insert(all.end(), orth.begin(), orth.end());
  return canonicalize_relations(std::move(all), b.nilpotent());
}

HopfReport hopf_checks(const StructureBundle& b) {
  HopfReport out;
  const int n = b.n;
  const AlgMatrix& g = b.g();
  const auto mask = b.nilpotent();
  auto fix = [&](const CKScalar& x) { return b.sig ? specialize(x, *b.sig) : x; };

  {
    auto t0 = Clock::now();
    out.counit.name = "hopf.counit";
    auto values = counit_values(g, mask);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        CKScalar v = fix(evaluate(g(r, c), values));
        CKScalar want = r == c ? CKScalar::constant(1, b.jcount()) : CKScalar(b.jcount());
        if (!(v == want)) out.counit.fail(entry_label("eps(G)", r, c), to_string(v - want));
      }
    for (const auto& rel : bundle_relations(b)) {
      CKScalar v = fix(evaluate(rel.poly, values));
      if (!v.is_zero()) out.counit.fail(rel.label, to_string(v));
    }
    out.counit.seconds = since(t0);
  }
  {
    auto t0 = Clock::now();
    out.coassociativity.name = "hopf.coassociativity";
    AlgMatrix left = (g * g) * g;
    AlgMatrix right = g * (g * g);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!(left(r, c) == right(r, c)))
          out.coassociativity.fail(entry_label("(GG)G-G(GG)", r, c), to_string(left(r, c) - right(r, c)));
    out.coassociativity.seconds = since(t0);
  }
  {
    auto t0 = Clock::now();
    out.antipode.name = "hopf.antipode";
    const RingMatrix& c = b.metric();
    const RingMatrix& ci = b.metric_inv;
    AlgMatrix gt = transpose(g);
    AlgMatrix s_of_g = c * gt * ci;
    AlgMatrix lhs = s_of_g * g - identity_alg(n, b.jcount());
    AlgMatrix rhs = c * (gt * ci * g - to_alg(ci));
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) {
        NCPoly d = lhs(r, k) - rhs(r, k);
        if (b.sig) d = specialize(d, *b.sig);
        if (!d.is_zero()) out.antipode.fail(entry_label("S(G)G-I-C(defect)", r, k), to_string(d));
      }
    out.antipode.seconds = since(t0);
  }
  return out;
}

// -------------------------------------------------------- classical limit

RelationSet classical_limit(const RelationSet& rs) {
  std::vector<Relation> out;
  for (const auto& r : rs) {
    NCPoly p = r.poly.map_coefficients([](const CKScalar& c) { return at_v0(c); });
    out.push_back({std::move(p), r.label});
  }
  return canonicalize_relations(std::move(out));
}

RelationSet commutativity_presentation(const std::set<GenSymbol>& symbols, int jcount) {
  std::vector<Relation> out;
  const CKScalar one = CKScalar::constant(1, jcount);
  for (auto it = symbols.begin(); it != symbols.end(); ++it)
    for (auto jt = std::next(it); jt != symbols.end(); ++jt) {
      NCPoly p = NCPoly::monomial({*it, *jt}, one) - NCPoly::monomial({*jt, *it}, one);
      out.push_back({std::move(p), "[" + it->name() + "," + jt->name() + "]"});
    }
  return canonicalize_relations(std::move(out));
}

VerificationReport classical_orthogonality_equivalence(int n) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.name = "classical-orthogonality-equivalence";
  const int jc = n - 1;
  AlgMatrix a = classical_a(n), bm = classical_b(n);
  RingMatrix c0 = c0_matrix(n), di = d_inverse(n);
  AlgMatrix defect_b = bm * c0 * transpose(bm) - to_alg(c0);
  AlgMatrix defect_a = a * transpose(a) - identity_alg(n, jc);
  AlgMatrix mapped = di * defect_a * transpose(di);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!(mapped(r, c) == defect_b(r, c)))
        rep.fail(entry_label("defect", r, c), to_string(mapped(r, c) - defect_b(r, c)));
  rep.seconds = since(t0);
  return rep;
}

// ------------------------------------------------- fundamental representation

VerificationReport fundamental_representation_check(int n, Basis basis, const RelationSet& rs,
                                                    const std::string& name) {
  auto t0 = Clock::now();
  VerificationReport rep;
  rep.name = name;
  const int jc = n - 1, nn = n * n;
  const RingMatrix rp = r_plus(r_q(n), n);
  auto rho_t = [&](int k, int l) {
    RingMatrix m(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m(a, b) = rp(a * n + k, b * n + l);
    return m;
  };
  std::vector<RingMatrix> images;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) images.push_back(rho_t(k, l));
  AlgMatrix g = quantum_t(n).t;
  if (basis == Basis::cartesian) {
    g = quantum_u(n);
    const RingMatrix d = d_matrix(n), di = d_inverse(n);
    std::vector<RingMatrix> conj;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        RingMatrix acc(n, n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            CKScalar c = d(k, a) * di(b, l);
            if (c.is_zero()) continue;
            acc = acc + images[static_cast<std::size_t>(a * n + b)] * c;
          }
        conj.push_back(std::move(acc));
      }
    images = std::move(conj);
  }

  std::vector<GenSymbol> symbols;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (const auto& [w, c] : g(k, l).terms()) {
        if (w.size() != 1) throw PreconditionViolation("generator matrix is not linear");
        symbols.push_back(w.front());
      }
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  const int s = static_cast<int>(symbols.size());
  RingMatrix m(nn, s), rhs(nn, nn);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      for (const auto& [w, c] : g(k, l).terms()) {
        auto pos = std::lower_bound(symbols.begin(), symbols.end(), w.front()) - symbols.begin();
        m(k * n + l, static_cast<int>(pos)) += c;
      }
      const RingMatrix& img = images[static_cast<std::size_t>(k * n + l)];
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rhs(k * n + l, a * n + b) = img(a, b);
    }
  Elimination el = gauss_jordan(m, rhs);
  if (el.rank != s) {
    rep.fail("generators", "entries of G are not independent");
    rep.seconds = since(t0);
    return rep;
  }
  std::map<GenSymbol, RingMatrix> rho;
  for (int r = 0; r < s; ++r) {
    RingMatrix img(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) img(a, b) = rhs(r, a * n + b);
    rho[symbols[static_cast<std::size_t>(el.pivot_cols[static_cast<std::size_t>(r)])]] = std::move(img);
  }

  for (const auto& rel : rs) {
    RingMatrix total(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) total(a, b) = CKScalar(jc);
    for (const auto& [w, c] : rel.poly.terms()) {
      RingMatrix prod = identity(n, jc);
      for (const auto& x : w) {
        auto it = rho.find(x);
        if (it == rho.end()) throw PreconditionViolation(x.name() + " has no image");
        prod = prod * it->second;
      }
      total = total + prod * c;
    }
    if (!is_zero(total)) {
      for (int a = 0; a < n && rep.witness.size() < 8; ++a)
        for (int b = 0; b < n; ++b)
          if (!total(a, b).is_zero()) {
            rep.fail(rel.label + entry_label("", a, b), to_string(total(a, b)));
            break;
          }
    }
  }
  rep.seconds = since(t0);
  return rep;
}

}  // namespace ckq
