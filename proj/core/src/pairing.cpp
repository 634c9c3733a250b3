#include "ckq/pairing.hpp"

#include <algorithm>
#include <functional>

namespace ckq {

namespace {

int index_of(const std::vector<GenSymbol>& v, GenSymbol g) {
  auto it = std::lower_bound(v.begin(), v.end(), g);
  if (it == v.end() || !(*it == g)) return -1;
  return static_cast<int>(it - v.begin());
}

CKScalar zero(int jc) { return CKScalar(jc); }

}  // namespace

CKScalar PairingTable::formal(GenSymbol f, GenSymbol g) const {
  auto it = formal_.find({f, g});
  return it == formal_.end() ? zero(n_ - 1) : it->second;
}

CKScalar PairingTable::value(GenSymbol f, GenSymbol g) const {
  auto it = values_.find({f, g});
  return it == values_.end() ? zero(n_ - 1) : it->second;
}

CKScalar PairingTable::l_entry_on_t_entry(bool plus, int a, int b, int k, int l) const {
  const int nn = n_ * n_;
  const int e = (plus ? 0 : nn) + (a - 1) * n_ + (b - 1);
  return lt_[static_cast<std::size_t>(e * nn + (k - 1) * n_ + (l - 1))];
}

// ------------------------------------------------------------------ solve

PairingTable build_pairing_table(int n, const std::optional<JSignature>& sig) {
  const int jc = n - 1, nn = n * n;
  PairingTable tab;
  tab.n_ = n;
  tab.sig_ = sig;

  auto sg = quantum_t(n);
  tab.generators_ = sg.symbols;
  const int s = static_cast<int>(tab.generators_.size());

  tab.m_ = RingMatrix(nn, s);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (const auto& [w, c] : sg.t(k, l).terms()) tab.m_(k * n + l, index_of(tab.generators_, w.front())) += c;

  {
    RingMatrix a = tab.m_, b = identity(nn, jc);
    Elimination el = gauss_jordan(a, b);
    if (el.rank != s) throw InconsistentPairing("generator map is not invertible");
    tab.minv_ = RingMatrix(s, nn);
    for (int r = 0; r < s; ++r)
      for (int kl = 0; kl < nn; ++kl) tab.minv_(el.pivot_cols[static_cast<std::size_t>(r)], kl) = b(r, kl);
  }

  std::vector<CKScalar> eps_t(static_cast<std::size_t>(s), zero(jc));
  for (int y = 0; y < s; ++y)
    for (int k = 0; k < n; ++k) eps_t[static_cast<std::size_t>(y)] += tab.minv_(y, k * n + k);

  const RingMatrix rv = r_q(n);
  const RingMatrix rs[2] = {r_plus(rv, n), r_minus(rv)};
  const AlgMatrix ls[2] = {l_plus(n), l_minus(n)};
  tab.functionals_ = functional_symbols(n);
  const int f = static_cast<int>(tab.functionals_.size());
  const int entries = 2 * nn;

  RingMatrix k_mat(entries, f), rhs(entries, s);
  std::vector<CKScalar> cst(static_cast<std::size_t>(entries), zero(jc));
  for (int sigma = 0; sigma < 2; ++sigma)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int e = sigma * nn + a * n + b;
        for (const auto& [w, c] : ls[sigma](a, b).terms()) {
          if (w.empty()) {
            cst[static_cast<std::size_t>(e)] += c;
          } else {
            k_mat(e, index_of(tab.functionals_, w.front())) += c;
          }
        }
        for (int y = 0; y < s; ++y) {
          CKScalar acc(jc);
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              const CKScalar& mi = tab.minv_(y, k * n + l);
              const CKScalar& r = rs[sigma](a * n + k, b * n + l);
              if (!mi.is_zero() && !r.is_zero()) add_product(acc, mi, r);
            }
          acc -= cst[static_cast<std::size_t>(e)] * eps_t[static_cast<std::size_t>(y)];
          rhs(e, y) = acc;
        }
      }

  RingMatrix x(f, s);
  {
    RingMatrix a = k_mat, b = rhs;
    Elimination el = gauss_jordan(a, b);
    if (el.rank != f) throw InconsistentPairing("functional values are not determined by the system");
    for (int r = el.rank; r < entries; ++r)
      for (int y = 0; y < s; ++y)
        if (!b(r, y).is_zero())
          throw InconsistentPairing("residual " + to_string(b(r, y)) + " on generator " +
                                    tab.generators_[static_cast<std::size_t>(y)].name());
    for (int r = 0; r < f; ++r)
      for (int y = 0; y < s; ++y) x(el.pivot_cols[static_cast<std::size_t>(r)], y) = b(r, y);
  }
  {
    RingMatrix a = k_mat, b = identity(entries, jc);
    Elimination el = gauss_jordan(a, b);
    tab.g_ = RingMatrix(f, entries);
    tab.g_eps_.assign(static_cast<std::size_t>(f), zero(jc));
    for (int r = 0; r < el.rank; ++r) {
      const int phi = el.pivot_cols[static_cast<std::size_t>(r)];
      for (int e = 0; e < entries; ++e) {
        tab.g_(phi, e) = b(r, e);
        if (!b(r, e).is_zero()) tab.g_eps_[static_cast<std::size_t>(phi)] -= b(r, e) * cst[static_cast<std::size_t>(e)];
      }
    }
  }

  tab.lt_.assign(static_cast<std::size_t>(entries * nn), zero(jc));
  for (int e = 0; e < entries; ++e) {
    std::vector<CKScalar> on_t(static_cast<std::size_t>(s), zero(jc));
    for (int y = 0; y < s; ++y) {
      CKScalar acc = cst[static_cast<std::size_t>(e)] * eps_t[static_cast<std::size_t>(y)];
      for (int phi = 0; phi < f; ++phi)
        if (!k_mat(e, phi).is_zero()) add_product(acc, k_mat(e, phi), x(phi, y));
      on_t[static_cast<std::size_t>(y)] = acc;
    }
    for (int kl = 0; kl < nn; ++kl) {
      CKScalar acc(jc);
      for (int y = 0; y < s; ++y)
        if (!tab.m_(kl, y).is_zero()) add_product(acc, tab.m_(kl, y), on_t[static_cast<std::size_t>(y)]);
      tab.lt_[static_cast<std::size_t>(e * nn + kl)] = acc;
    }
  }

  for (int phi = 0; phi < f; ++phi)
    for (int y = 0; y < s; ++y) {
      if (x(phi, y).is_zero()) continue;
      auto key = std::make_pair(tab.functionals_[static_cast<std::size_t>(phi)], tab.generators_[static_cast<std::size_t>(y)]);
      tab.formal_[key] = x(phi, y);
      CKScalar v = sig ? specialize(x(phi, y), *sig) : x(phi, y);
      if (!v.is_zero()) tab.values_[key] = v;
    }
  return tab;
}

// ------------------------------------------------------------- evaluation

namespace {

struct Atom {
  int entry;  // -1 for the counit
  CKScalar coeff;
};

}  // namespace

CKScalar eval_functional(const PairingTable& tab, const NCPoly& f, const Word& w, std::size_t bound) {
  if (w.size() > bound) throw WordTooLong(w.size(), bound);
  const int n = tab.n_, nn = n * n, jc = n - 1;
  const int s = static_cast<int>(tab.generators_.size());

  // t-word -> combinations of T-entry words
  std::vector<std::pair<std::vector<int>, CKScalar>> twords{{{}, CKScalar::constant(1, jc)}};
  for (const auto& g : w) {
    const int y = index_of(tab.generators_, g);
    if (y < 0) throw PreconditionViolation(g.name() + " is not a generator of the table");
    std::vector<std::pair<std::vector<int>, CKScalar>> next;
    for (const auto& [tw, c] : twords)
      for (int kl = 0; kl < nn; ++kl) {
        const CKScalar& mi = tab.minv_(y, kl);
        if (mi.is_zero()) continue;
        auto ext = tw;
        ext.push_back(kl);
        next.emplace_back(std::move(ext), c * mi);
      }
    twords = std::move(next);
  }
  (void)s;

  auto atoms_of = [&](GenSymbol phi_sym) {
    const int phi = index_of(tab.functionals_, phi_sym);
    if (phi < 0) throw PreconditionViolation(phi_sym.name() + " is not a functional of the table");
    std::vector<Atom> out;
    for (int e = 0; e < 2 * nn; ++e)
      if (!tab.g_(phi, e).is_zero()) out.push_back({e, tab.g_(phi, e)});
    if (!tab.g_eps_[static_cast<std::size_t>(phi)].is_zero()) out.push_back({-1, tab.g_eps_[static_cast<std::size_t>(phi)]});
    return out;
  };

  auto counit = [&](const std::vector<std::pair<int, int>>& tw) {
    for (const auto& [k, l] : tw)
      if (k != l) return zero(jc);
    return CKScalar::constant(1, jc);
  };

  // single L entry on a T-entry word: path sum through the matrix coproduct
  auto single = [&](int e, const std::vector<std::pair<int, int>>& tw) -> CKScalar {
    if (e < 0) return counit(tw);
    const int sigma = e / nn, a = (e % nn) / n, b = e % n;
    std::vector<CKScalar> cur(static_cast<std::size_t>(n), zero(jc));
    cur[static_cast<std::size_t>(a)] = CKScalar::constant(1, jc);
    for (const auto& [k, l] : tw) {
      std::vector<CKScalar> nxt(static_cast<std::size_t>(n), zero(jc));
      for (int p = 0; p < n; ++p) {
        if (cur[static_cast<std::size_t>(p)].is_zero()) continue;
        for (int q = 0; q < n; ++q) {
          const int ee = sigma * nn + p * n + q;
          const CKScalar& v = tab.lt_[static_cast<std::size_t>(ee * nn + k * n + l)];
          if (!v.is_zero()) add_product(nxt[static_cast<std::size_t>(q)], cur[static_cast<std::size_t>(p)], v);
        }
      }
      cur = std::move(nxt);
    }
    return cur[static_cast<std::size_t>(b)];
  };

  std::function<CKScalar(const std::vector<int>&, std::size_t, const std::vector<std::pair<int, int>>&)> fval =
      [&](const std::vector<int>& atoms, std::size_t from, const std::vector<std::pair<int, int>>& tw) -> CKScalar {
    if (from == atoms.size()) return counit(tw);
    if (from + 1 == atoms.size()) return single(atoms[from], tw);
    // (x ⊗ rest)(Δ T_{k1 l1} ... Δ T_{km lm})
    CKScalar acc(jc);
    const std::size_t len = tw.size();
    std::vector<int> p(len, 0);
    std::vector<std::pair<int, int>> left(len), right(len);
    while (true) {
      for (std::size_t s2 = 0; s2 < len; ++s2) {
        left[s2] = {tw[s2].first, p[s2]};
        right[s2] = {p[s2], tw[s2].second};
      }
      CKScalar lv = single(atoms[from], left);
      if (!lv.is_zero()) {
        CKScalar rv = fval(atoms, from + 1, right);
        if (!rv.is_zero()) add_product(acc, lv, rv);
      }
      std::size_t pos = 0;
      while (pos < len && ++p[pos] == n) p[pos++] = 0;
      if (pos == len) break;
    }
    return acc;
  };

  CKScalar total(jc);
  for (const auto& [fw, fc] : f.terms()) {
    std::vector<std::vector<Atom>> per;
    for (const auto& phi : fw) per.push_back(atoms_of(phi));
    std::vector<std::size_t> idx(per.size(), 0);
    while (true) {
      std::vector<int> atoms;
      CKScalar coeff = fc;
      for (std::size_t k = 0; k < per.size(); ++k) {
        atoms.push_back(per[k][idx[k]].entry);
        coeff *= per[k][idx[k]].coeff;
      }
      for (const auto& [tw, tc] : twords) {
        std::vector<std::pair<int, int>> pairs;
        for (int kl : tw) pairs.emplace_back(kl / n, kl % n);
        CKScalar v = fval(atoms, 0, pairs);
        if (!v.is_zero()) total += coeff * tc * v;
      }
      std::size_t pos = 0;
      while (pos < per.size() && ++idx[pos] == per[pos].size()) idx[pos++] = 0;
      if (pos == per.size()) break;
    }
  }
  return total;
}

std::vector<Word> generator_words(const PairingTable& table, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::vector<Word> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const auto& g : table.generators()) {
        Word x = w;
        x.push_back(g);
        next.push_back(std::move(x));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<FunctionalResidual> functional_residuals(const PairingTable& table, const NCPoly& f, std::size_t max_len) {
  std::vector<FunctionalResidual> out;
  for (const auto& w : generator_words(table, max_len)) {
    CKScalar v = eval_functional(table, f, w, std::max(max_len, kDefaultWordBound));
    if (!v.is_zero()) out.push_back({w, std::move(v)});
  }
  return out;
}

// -------------------------------------------------------- dual relations

RelationSet derive_dual_relations(int n, const std::optional<JSignature>& sig) {
  const int jc = n - 1;
  const RingMatrix rv = r_q(n);
  const RingMatrix rp = r_plus(rv, n);
  const AlgMatrix lp = l_plus(n), lm = l_minus(n);

  std::vector<Relation> all;
  auto take = [&](const RelationSet& rs) { all.insert(all.end(), rs.begin(), rs.end()); };
  take(expand_rll(rp, lp, lp, "RLL++"));
  take(expand_rll(rp, lm, lm, "RLL--"));
  take(expand_rll(rp, lp, lm, "RLL+-"));

  const RingMatrix ct = transpose(c_q(n));
  const RingMatrix ct_inv = adjugate_inverse(ct);
  auto metric = [&](const AlgMatrix& l, const RingMatrix& c, const std::string& name) {
    AlgMatrix d = l * c * transpose(l) - to_alg(c);
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k)
        if (!d(r, k).is_zero())
          all.push_back({d(r, k), name + "[" + std::to_string(r + 1) + "," + std::to_string(k + 1) + "]"});
  };
  metric(lp, ct, "L+CtLt");
  metric(lm, ct, "L-CtLt");
  metric(lp, ct_inv, "L+CtinvLt");
  metric(lm, ct_inv, "L-CtinvLt");

  const NCPoly one = NCPoly::constant(CKScalar::constant(1, jc));
  for (int k = 1; k <= n / 2; ++k) {
    NCPoly p = NCPoly::symbol(sym(Family::lDiagPlus, k, k), jc);
    NCPoly m = NCPoly::symbol(sym(Family::lDiagMinus, k, k), jc);
    all.push_back({p * m - one, "lp" + std::to_string(k) + std::to_string(k) + "*lm=1"});
    all.push_back({m * p - one, "lm" + std::to_string(k) + std::to_string(k) + "*lp=1"});
  }

  RelationSet formal = canonicalize_relations(std::move(all));
  if (!sig) return formal;
  std::vector<Relation> spec;
  for (const auto& r : formal) spec.push_back({specialize(r.poly, *sig), r.label});
  return canonicalize_relations(std::move(spec), nilpotent_mask(*sig));
}

// --------------------------------------------------------- reference data

namespace {

constexpr int kJc = 2;

CKScalar jmono(int e1, int e2, const BaseScalar& c = 1) {
  Monomial m;
  m.j[0] = e1;
  m.j[1] = e2;
  return CKScalar::term(c, m, kJc);
}

CKScalar ch(int k) { return hyper_monomial(HyperKind::cosh, k, 3); }
CKScalar sh(int k) { return hyper_monomial(HyperKind::sinh, k, 3); }

}  // namespace

std::vector<ReferenceValue> reference_table_n3() {
  const BaseScalar i = BaseScalar::i(), half = BaseScalar::rational(1, 2);
  const CKScalar one = CKScalar::constant(1, kJc);
  const CKScalar mixed = sh(3) + sh(1);                // sinh 3Jv/2 + sinh Jv/2
  const CKScalar diff = (ch(3) - ch(1)) * half;        // (cosh 3Jv/2 - cosh Jv/2)/2
  const CKScalar two_sh = sh(2) * BaseScalar(2) - sh(4);  // 2 sinh Jv - sinh 2Jv
  auto t = [](Family f, int r, int c) { return sym(f, r, c); };
  const GenSymbol lp11 = t(Family::lDiagPlus, 1, 1);
  return {
      {"l11", lp11, t(Family::t, 2, 2), one},
      {"l11", lp11, t(Family::t, 1, 1), ch(2)},
      {"l~11", lp11, t(Family::tTilde, 1, 1), jmono(-1, -1, -1) * sh(2)},
      {"l12", t(Family::l, 1, 2), t(Family::tTilde, 2, 1), jmono(1, -1, -i) * sh(2)},
      {"l12", t(Family::l, 1, 2), t(Family::tTilde, 1, 2), jmono(1, -1, i * half) * mixed},
      {"l12", t(Family::l, 1, 2), t(Family::t, 1, 2), diff},
      {"l~12", t(Family::lTilde, 1, 2), t(Family::tTilde, 1, 2), diff},
      {"l~12", t(Family::lTilde, 1, 2), t(Family::t, 2, 1), jmono(-1, 1, i) * sh(2)},
      {"l~12", t(Family::lTilde, 1, 2), t(Family::t, 1, 2), jmono(-1, 1, -i * half) * mixed},
      {"l21", t(Family::l, 2, 1), t(Family::tTilde, 1, 2), jmono(1, -1, -i) * sh(2)},
      {"l21", t(Family::l, 2, 1), t(Family::tTilde, 2, 1), jmono(1, -1, i * half) * mixed},
      {"l~21", t(Family::lTilde, 2, 1), t(Family::t, 1, 2), jmono(-1, 1, i) * sh(2)},
      {"l~21", t(Family::lTilde, 2, 1), t(Family::t, 2, 1), jmono(-1, 1, -i * half) * mixed},
      {"l13", t(Family::l, 1, 3), t(Family::t, 1, 3), (ch(4) - one) * half},
      {"l~13", t(Family::lTilde, 1, 3), t(Family::tTilde, 1, 3), (ch(4) - one) * half},
      {"l21", t(Family::l, 2, 1), t(Family::t, 2, 1), diff},
      {"l~21", t(Family::lTilde, 2, 1), t(Family::tTilde, 2, 1), diff},
      {"l13", t(Family::l, 1, 3), t(Family::tTilde, 1, 3), jmono(-1, -1, -i) * two_sh},
      {"l~13", t(Family::lTilde, 1, 3), t(Family::t, 1, 3), jmono(1, 1, i) * two_sh},
  };
}

ReferenceComparison compare_with_reference(const PairingTable& table) {
  if (table.n() != 3) throw BadDimension(table.n());
  ReferenceComparison out;
  std::set<GenSymbol> listed_functionals;
  std::set<std::pair<GenSymbol, GenSymbol>> listed;
  const std::vector<std::string> jn = {"j1", "j2"};
  for (const auto& ref : reference_table_n3()) {
    listed_functionals.insert(ref.symbol);
    listed.insert({ref.symbol, ref.generator});
    CKScalar got = table.formal(ref.symbol, ref.generator);
    if (got == ref.value) {
      ++out.matched;
    } else {
      out.mismatches.push_back(ref.functional + "(" + ref.generator.name() + "): computed " + to_string(got, jn) +
                               ", printed " + to_string(ref.value, jn));
    }
  }
  for (const auto& f : table.functionals())
    for (const auto& g : table.generators()) {
      if (!listed_functionals.count(f) || listed.count({f, g})) continue;
      CKScalar v = table.formal(f, g);
      if (!v.is_zero()) out.unlisted.push_back(f.name() + "(" + g.name() + ") = " + to_string(v, jn));
    }
  return out;
}

std::vector<Relation> reference_dual_relations_n3() {
  const BaseScalar i = BaseScalar::i();
  const NCPoly l11 = NCPoly::symbol(sym(Family::lDiagPlus, 1, 1), kJc);
  const NCPoly l12 = NCPoly::symbol(sym(Family::l, 1, 2), kJc);
  const NCPoly lt12 = NCPoly::symbol(sym(Family::lTilde, 1, 2), kJc);
  const NCPoly one = NCPoly::constant(CKScalar::constant(1, kJc));
  const CKScalar c = ch(2), s = sh(2);
  return {
      {l11 * l12 * c - l12 * l11 - l11 * lt12 * (jmono(1, -1, i) * s), "l11 l12 commutation"},
      {l11 * lt12 * c - lt12 * l11 + l11 * l12 * (jmono(-1, 1, i) * s), "l11 l~12 commutation"},
      {l12 * lt12 - lt12 * l12 + (l11 * l11 - one) * (jmono(1, 1, i) * s), "[l12, l~12]"},
  };
}

// ------------------------------------------------------- Hopf algebra data

namespace {

struct JText {
  std::string name;  // "" when the parameter is 1
  std::string square;
  std::string inverse;
};

JText j_text(const std::optional<JSignature>& sig, int k) {
  const std::string formal = "j" + std::to_string(k + 1);
  if (!sig) return {formal, formal + "^2", formal + "^{-1}"};
  switch ((*sig)[k]) {
    case JKind::one: return {"", "", ""};
    case JKind::imaginary: return {"i", "i^2", "i^{-1}"};
    case JKind::nilpotent: {
      const std::string iota = "ι" + std::to_string(k + 1);
      return {iota, iota + "^2", iota + "^{-1}"};
    }
  }
  return {formal, formal + "^2", formal + "^{-1}"};
}

std::string substitute(std::string text, const std::map<std::string, std::string>& subs) {
  for (const auto& [key, value] : subs) {
    std::size_t pos = 0;
    while ((pos = text.find(key, pos)) != std::string::npos) {
      text.replace(pos, key.size(), value);
      pos += value.size();
    }
  }
  return text;
}

}  // namespace

CKAlgebraPresentation present_ck_algebra(int n, const std::optional<JSignature>& sig) {
  if (n != 3) throw BadDimension(n);
  if (sig && sig->size() != 2) throw DimensionMismatch("signature length for N=3");
  JText j1 = j_text(sig, 0), j2 = j_text(sig, 1);
  std::string big_j = j1.name.empty() || j2.name.empty() ? j1.name + j2.name : j1.name + "·" + j2.name;
  const bool single = j1.name.empty() != j2.name.empty();
  std::string big_j_inv = big_j.empty() ? "" : single ? big_j + "^{-1}" : "(" + big_j + ")^{-1}";
  if (!sig) {
    big_j = "J";
    big_j_inv = "J^{-1}";
  }
  const std::map<std::string, std::string> subs = {
      {"{j1}", j1.name},   {"{j1^2}", j1.square}, {"{j1^-1}", j1.inverse}, {"{j2}", j2.name},
      {"{j2^2}", j2.square}, {"{j2^-1}", j2.inverse}, {"{J}", big_j},       {"{J^-1}", big_j_inv},
  };
  auto s = [&](const char* t) { return substitute(t, subs); };

  CKAlgebraPresentation p;
  p.generators = {"X_{01}", "X_{02}", "X_{12}"};
  p.coproduct = {"ΔX_{02} = I⊗X_{02} + X_{02}⊗I",
                 "ΔX = e^{-vX_{02}/2}⊗X + X⊗e^{vX_{02}/2}, X = X_{01}, X_{12}"};
  p.counit = {"ε(X_{01}) = ε(X_{02}) = ε(X_{12}) = 0"};
  p.antipode = {"S(X_{02}) = -X_{02}",
                s("S(X_{01}) = -X_{01}cos({J}v/2) + {j1^2}X_{12}{J^-1}sin({J}v/2)"),
                s("S(X_{12}) = -X_{12}cos({J}v/2) - {j2^2}X_{01}{J^-1}sin({J}v/2)")};
  p.commutators = {s("[X_{01},X_{02}]={j1^2}X_{12}"), s("[X_{02},X_{12}]={j2^2}X_{01}"),
                   "[X_{12},X_{01}]=sinh(vX_{02})/v"};
  p.isomorphism = {"l_{11}=e^{vX_{02}}", s("{j1^-1}l_{12}={j2}EX_{01}e^{vX_{02}/2}"),
                   s("{j2^-1}l~_{12}=-{j1}EX_{12}e^{vX_{12}/2}"), s("E=i(v{J^-1}sin {J}v)^{1/2}e^{-{J}v}")};
  if (sig) {
    for (int k = 0; k < sig->size(); ++k)
      if ((*sig)[k] == JKind::nilpotent)
        p.notes.push_back("ι" + std::to_string(k + 1) + "^2 = 0");
  }
  p.notes.push_back("stored text, no arithmetic performed; sin/cos kept as printed");
  return p;
}

}  // namespace ckq
