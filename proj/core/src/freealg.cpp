#include "ckq/freealg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace ckq {

// ----------------------------------------------------------------- GenSymbol

namespace {

struct FamilyName {
  Family family;
  const char* prefix;
};

// Longest prefixes first so parsing is unambiguous.
constexpr FamilyName kFamilyNames[] = {
    {Family::tTilde, "tt"}, {Family::lTilde, "lt"},     {Family::lDiagPlus, "lp"},
    {Family::lDiagMinus, "lm"}, {Family::t, "t"},       {Family::u, "u"},
    {Family::a, "a"},           {Family::l, "l"},
};

const char* prefix_of(Family f) {
  for (const auto& fn : kFamilyNames)
    if (fn.family == f) return fn.prefix;
  return "?";
}

}  // namespace

std::string GenSymbol::name() const {
  return prefix_of(family) + std::to_string(row) + std::to_string(col);
}

GenSymbol GenSymbol::parse(std::string_view text) {
  for (const auto& fn : kFamilyNames) {
    std::string_view p = fn.prefix;
    if (text.size() == p.size() + 2 && text.substr(0, p.size()) == p) {
      char r = text[p.size()], c = text[p.size() + 1];
      if (r >= '1' && r <= '9' && c >= '1' && c <= '9') return sym(fn.family, r - '0', c - '0');
    }
  }
  throw PreconditionViolation("not a generator symbol: '" + std::string(text) + "'");
}

std::string word_name(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "·" : "") + w[k].name();
  return out;
}

// -------------------------------------------------------------------- NCPoly

NCPoly NCPoly::constant(const CKScalar& c) {
  NCPoly p;
  p.add_term({}, c);
  return p;
}

NCPoly NCPoly::symbol(GenSymbol g, int jcount) {
  NCPoly p;
  p.add_term({g}, CKScalar::constant(1, jcount));
  return p;
}

NCPoly NCPoly::monomial(const Word& w, const CKScalar& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

CKScalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CKScalar{} : it->second;
}

void NCPoly::add_term(const Word& w, const CKScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const CKScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

void add_product(NCPoly& acc, const NCPoly& a, const NCPoly& b) {
  Word w;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      w.assign(wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      acc.add_term(w, ca * cb);
    }
  }
}

void add_product(NCPoly& acc, const CKScalar& a, const NCPoly& b) {
  if (a.is_zero()) return;
  for (const auto& [w, c] : b.terms()) acc.add_term(w, a * c);
}

void add_product(NCPoly& acc, const NCPoly& a, const CKScalar& b) { add_product(acc, b, a); }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  add_product(out, a, b);
  return out;
}

NCPoly NCPoly::map_coefficients(const std::function<CKScalar(const CKScalar&)>& f) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.add_term(w, f(c));
  return out;
}

std::set<GenSymbol> NCPoly::symbols() const {
  std::set<GenSymbol> out;
  for (const auto& [w, c] : terms_) out.insert(w.begin(), w.end());
  return out;
}

std::strong_ordering operator<=>(const NCPoly& a, const NCPoly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  ShortLex less;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return std::strong_ordering::less;
    if (less(ib->first, ia->first)) return std::strong_ordering::greater;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  if (ia != a.terms_.end()) return std::strong_ordering::greater;
  if (ib != b.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string to_string(const NCPoly& p, const std::vector<std::string>& jnames) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    std::string cs = to_string(c, jnames);
    bool neg = false;
    if (c.terms().size() > 1) {
      cs = "(" + cs + ")";
    } else if (cs.rfind("−", 0) == 0) {
      neg = true;
      cs = cs.substr(std::string("−").size());
    }
    std::string body;
    if (w.empty()) {
      body = cs;
    } else if (cs == "1") {
      body = word_name(w);
    } else {
      body = cs + "·" + word_name(w);
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

// -------------------------------------------------------------------- Matrix

RingMatrix identity(int n, int jcount) {
  RingMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = r == c ? CKScalar::constant(1, jcount) : CKScalar(jcount);
  return m;
}

AlgMatrix identity_alg(int n, int jcount) { return to_alg(identity(n, jcount)); }

AlgMatrix to_alg(const RingMatrix& m) {
  return m.map([](const CKScalar& c) { return c.is_zero() ? NCPoly{} : NCPoly::constant(c); });
}

namespace {

template <class A, class B, class O>
Matrix<O> mul_impl(const Matrix<A>& a, const Matrix<B>& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch(std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix<O> out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const A& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols(); ++c) {
        const B& y = b(k, c);
        if (y.is_zero()) continue;
        add_product(out(r, c), x, y);
      }
    }
  }
  return out;
}

template <class T, class Op>
Matrix<T> zip(const Matrix<T>& a, const Matrix<T>& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("elementwise op");
  Matrix<T> out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = op(a(r, c), b(r, c));
  return out;
}

template <class T>
Matrix<T> embed_left_impl(const Matrix<T>& m, int n) {
  Matrix<T> out(m.rows() * n, m.cols() * n);
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k) {
      if (m(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j) out(i * n + j, k * n + j) = m(i, k);
    }
  return out;
}

template <class T>
Matrix<T> embed_right_impl(const Matrix<T>& m, int n) {
  Matrix<T> out(m.rows() * n, m.cols() * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m.rows(); ++j)
      for (int l = 0; l < m.cols(); ++l) {
        if (m(j, l).is_zero()) continue;
        out(i * m.rows() + j, i * m.cols() + l) = m(j, l);
      }
  return out;
}

}  // namespace

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) { return mul_impl<CKScalar, CKScalar, CKScalar>(a, b); }
AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b) { return mul_impl<NCPoly, NCPoly, NCPoly>(a, b); }
AlgMatrix operator*(const RingMatrix& a, const AlgMatrix& b) { return mul_impl<CKScalar, NCPoly, NCPoly>(a, b); }
AlgMatrix operator*(const AlgMatrix& a, const RingMatrix& b) { return mul_impl<NCPoly, CKScalar, NCPoly>(a, b); }

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  return zip(a, b, [](const CKScalar& x, const CKScalar& y) { return x + y; });
}
RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
  return zip(a, b, [](const CKScalar& x, const CKScalar& y) { return x - y; });
}
AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b) {
  return zip(a, b, [](const NCPoly& x, const NCPoly& y) { return x + y; });
}
AlgMatrix operator-(const AlgMatrix& a, const AlgMatrix& b) {
  return zip(a, b, [](const NCPoly& x, const NCPoly& y) { return x - y; });
}

RingMatrix operator*(const RingMatrix& a, const CKScalar& c) {
  return a.map([&](const CKScalar& x) { return x * c; });
}

RingMatrix kron(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.rows(); ++j)
        for (int l = 0; l < b.cols(); ++l) {
          if (b(j, l).is_zero()) continue;
          out(i * b.rows() + j, k * b.cols() + l) = a(i, k) * b(j, l);
        }
    }
  return out;
}

RingMatrix embed_left(const RingMatrix& m, int n) { return embed_left_impl(m, n); }
RingMatrix embed_right(const RingMatrix& m, int n) { return embed_right_impl(m, n); }
AlgMatrix embed_left(const AlgMatrix& m, int n) { return embed_left_impl(m, n); }
AlgMatrix embed_right(const AlgMatrix& m, int n) { return embed_right_impl(m, n); }

RingMatrix permute_P(int n, int jcount) {
  RingMatrix p(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p(a * n + b, b * n + a) = CKScalar::constant(1, jcount);
  return p;
}

bool is_lower_triangular(const RingMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r + 1; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

bool is_upper_triangular(const RingMatrix& m) { return is_lower_triangular(transpose(m)); }

bool is_zero(const RingMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

bool is_zero(const AlgMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

namespace {

RingMatrix lower_inverse(const RingMatrix& m) {
  const int n = m.rows();
  RingMatrix x(n, n);
  std::vector<CKScalar> dinv;
  for (int i = 0; i < n; ++i) dinv.push_back(m(i, i).inverse());
  for (int j = 0; j < n; ++j) {
    x(j, j) = dinv[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < n; ++i) {
      CKScalar acc;
      for (int k = j; k < i; ++k) {
        if (m(i, k).is_zero() || x(k, j).is_zero()) continue;
        add_product(acc, m(i, k), x(k, j));
      }
      if (!acc.is_zero()) x(i, j) = -(acc * dinv[static_cast<std::size_t>(i)]);
    }
  }
  return x;
}

}  // namespace

RingMatrix tri_inverse(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("tri_inverse of a non-square matrix");
  if (is_lower_triangular(m)) return lower_inverse(m);
  if (is_upper_triangular(m)) return transpose(lower_inverse(transpose(m)));
  throw NotTriangular();
}

namespace {

int jcount_of(const RingMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c).jcount() >= 0) return m(r, c).jcount();
  return 0;
}

CKScalar det_rec(const RingMatrix& m, int row, std::uint32_t used, std::unordered_map<std::uint32_t, CKScalar>& memo,
                 int jc) {
  const int n = m.rows();
  if (row == n) return CKScalar::constant(1, jc);
  if (auto it = memo.find(used); it != memo.end()) return it->second;
  CKScalar acc;
  int sign_pos = 0;
  for (int c = 0; c < n; ++c) {
    if (used & (1u << c)) continue;
    const CKScalar& x = m(row, c);
    if (!x.is_zero()) {
      CKScalar sub = det_rec(m, row + 1, used | (1u << c), memo, jc);
      if (sign_pos % 2 == 0) {
        add_product(acc, x, sub);
      } else {
        acc -= x * sub;
      }
    }
    ++sign_pos;
  }
  memo.emplace(used, acc);
  return acc;
}

RingMatrix minor_matrix(const RingMatrix& m, int skip_r, int skip_c) {
  RingMatrix out(m.rows() - 1, m.cols() - 1);
  for (int r = 0, rr = 0; r < m.rows(); ++r) {
    if (r == skip_r) continue;
    for (int c = 0, cc = 0; c < m.cols(); ++c) {
      if (c == skip_c) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

CKScalar determinant(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() > 20) throw PreconditionViolation("determinant: matrix too large for expansion");
  if (m.rows() == 0) return CKScalar::constant(1, 0);
  std::unordered_map<std::uint32_t, CKScalar> memo;
  const int jc = jcount_of(m);
  CKScalar d = det_rec(m, 0, 0, memo, jc);
  return d.is_zero() ? CKScalar(jc) : d;
}

RingMatrix adjugate_inverse(const RingMatrix& m) {
  CKScalar det = determinant(m);
  if (!det.is_unit()) throw NotAUnit("determinant " + to_string(det));
  CKScalar dinv = det.inverse();
  const int n = m.rows();
  RingMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = dinv;
    return out;
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      CKScalar cof = determinant(minor_matrix(m, r, c)) * dinv;
      out(c, r) = (r + c) % 2 == 0 ? cof : -cof;
    }
  return out;
}

bool is_unit(const CKScalar& c, const std::vector<bool>& nilpotent) {
  if (!c.is_unit()) return false;
  const Monomial& m = c.terms().begin()->first;
  for (std::size_t k = 0; k < nilpotent.size(); ++k)
    if (nilpotent[k] && m.j[k] != 0) return false;
  return true;
}

Elimination gauss_jordan(RingMatrix& a, RingMatrix& b, const std::vector<bool>& nilpotent) {
  if (a.rows() != b.rows()) throw DimensionMismatch("gauss_jordan row counts");
  Elimination el;
  const int rows = a.rows();
  auto swap_rows = [](RingMatrix& m, int r1, int r2) {
    for (int c = 0; c < m.cols(); ++c) std::swap(m(r1, c), m(r2, c));
  };
  for (int col = 0; col < a.cols() && el.rank < rows; ++col) {
    int piv = -1;
    for (int r = el.rank; r < rows; ++r) {
      if (is_unit(a(r, col), nilpotent)) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    swap_rows(a, piv, el.rank);
    swap_rows(b, piv, el.rank);
    const int pr = el.rank;
    CKScalar inv = a(pr, col).inverse();
    for (int c = 0; c < a.cols(); ++c)
      if (!a(pr, c).is_zero()) a(pr, c) *= inv;
    for (int c = 0; c < b.cols(); ++c)
      if (!b(pr, c).is_zero()) b(pr, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pr || a(r, col).is_zero()) continue;
      CKScalar f = a(r, col);
      for (int c = 0; c < a.cols(); ++c)
        if (!a(pr, c).is_zero()) a(r, c) -= f * a(pr, c);
      for (int c = 0; c < b.cols(); ++c)
        if (!b(pr, c).is_zero()) b(r, c) -= f * b(pr, c);
    }
    el.pivot_cols.push_back(col);
    ++el.rank;
  }
  return el;
}

// ----------------------------------------------------------------- Relations

bool operator==(const RelationSet& a, const RelationSet& b) {
  if (a.items_.size() != b.items_.size()) return false;
  for (std::size_t k = 0; k < a.items_.size(); ++k)
    if (!(a.items_[k].poly == b.items_[k].poly)) return false;
  return true;
}

NCPoly normalize(const NCPoly& p, const std::vector<bool>& nilpotent) {
  if (p.is_zero()) return p;
  const CKScalar& lead = p.terms().begin()->second;
  const int jc = std::max(0, lead.jcount());
  NCPoly out = p;
  if (is_unit(lead, nilpotent)) {
    out *= lead.inverse();
  } else {
    const auto& [m, b] = *lead.terms().begin();
    Monomial inv_part;
    inv_part.e = m.e;
    for (int k = 0; k < jc; ++k) {
      bool nil = static_cast<std::size_t>(k) < nilpotent.size() && nilpotent[static_cast<std::size_t>(k)];
      if (!nil) inv_part.j[static_cast<std::size_t>(k)] = m.j[static_cast<std::size_t>(k)];
    }
    out *= CKScalar::term(b, inv_part, jc).inverse();
  }
  Monomial clear;
  bool any = false;
  for (int k = 0; k < jc; ++k) {
    int lo = 0;
    for (const auto& [w, c] : out.terms())
      for (const auto& [m, x] : c.terms()) lo = std::min(lo, m.j[static_cast<std::size_t>(k)]);
    if (lo < 0) {
      clear.j[static_cast<std::size_t>(k)] = -lo;
      any = true;
    }
  }
  if (any) out *= CKScalar::term(1, clear, jc);
  return out;
}

RelationSet canonicalize_relations(std::vector<Relation> rs, const std::vector<bool>& nilpotent) {
  std::vector<Relation> kept;
  kept.reserve(rs.size());
  for (auto& r : rs) {
    if (r.poly.is_zero()) continue;
    kept.push_back({normalize(r.poly, nilpotent), std::move(r.label)});
  }
  std::sort(kept.begin(), kept.end(), [](const Relation& x, const Relation& y) {
    if (auto c = x.poly <=> y.poly; c != 0) return c < 0;
    return x.label < y.label;
  });
  RelationSet out;
  for (auto& r : kept) {
    if (!out.items_.empty() && out.items_.back().poly == r.poly) continue;
    out.items_.push_back(std::move(r));
  }
  return out;
}

RelationSet restrict_to(const RelationSet& rs, const std::set<GenSymbol>& symbols) {
  std::vector<Relation> out;
  for (const auto& r : rs) {
    bool ok = true;
    for (const auto& g : r.poly.symbols())
      if (!symbols.count(g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(r);
  }
  return canonicalize_relations(std::move(out));
}

namespace {

struct PivotRow {
  Word pivot;
  NCPoly poly;
};

// Drops terms that carry a square of a nilpotent parameter.
NCPoly truncate(const NCPoly& p, const std::vector<bool>& nilpotent) {
  if (std::none_of(nilpotent.begin(), nilpotent.end(), [](bool b) { return b; })) return p;
  return p.map_coefficients([&](const CKScalar& c) {
    return c.map_terms([&](const Monomial& m, const BaseScalar& b) -> std::optional<std::pair<Monomial, BaseScalar>> {
      for (std::size_t k = 0; k < nilpotent.size(); ++k)
        if (nilpotent[k] && m.j[k] >= 2) return std::nullopt;
      return std::make_pair(m, b);
    });
  });
}

// Not a zero divisor: some term is free of nilpotent parameters.
bool pivotable(const CKScalar& c, const std::vector<bool>& nilpotent) {
  for (const auto& [m, b] : c.terms()) {
    bool free = true;
    for (std::size_t k = 0; k < nilpotent.size(); ++k)
      if (nilpotent[k] && m.j[k] != 0) free = false;
    if (free) return true;
  }
  return false;
}

NCPoly reduce_rows(NCPoly p, const std::vector<PivotRow>& rows, const std::vector<bool>& nilpotent) {
  for (const auto& row : rows) {
    CKScalar c = p.coefficient(row.pivot);
    if (c.is_zero()) continue;
    const CKScalar& cp = row.poly.coefficient(row.pivot);
    if (is_unit(cp, nilpotent)) {
      p -= row.poly * (c * cp.inverse());
    } else {
      p = p * cp - row.poly * c;
    }
    p = truncate(p, nilpotent);
  }
  return p;
}

std::vector<PivotRow> build_rows(const RelationSet& basis, const std::vector<bool>& nilpotent) {
  std::vector<PivotRow> rows;
  for (const auto& rel : basis) {
    NCPoly r = reduce_rows(rel.poly, rows, nilpotent);
    if (r.is_zero()) continue;
    const Word* pivot = nullptr;
    for (const auto& [w, c] : r.terms())
      if (is_unit(c, nilpotent)) {
        pivot = &w;
        break;
      }
    if (!pivot)
      for (const auto& [w, c] : r.terms())
        if (pivotable(c, nilpotent)) {
          pivot = &w;
          break;
        }
    if (!pivot) continue;
    Word pw = *pivot;
    rows.push_back({std::move(pw), std::move(r)});
  }
  return rows;
}

}  // namespace

NCPoly reduce(const NCPoly& p, const RelationSet& basis, const std::vector<bool>& nilpotent) {
  return reduce_rows(p, build_rows(basis, nilpotent), nilpotent);
}

bool equivalent(const RelationSet& a, const RelationSet& b, const std::vector<bool>& nilpotent) {
  auto ra = build_rows(a, nilpotent);
  auto rb = build_rows(b, nilpotent);
  for (const auto& r : b)
    if (!reduce_rows(r.poly, ra, nilpotent).is_zero()) return false;
  for (const auto& r : a)
    if (!reduce_rows(r.poly, rb, nilpotent).is_zero()) return false;
  return true;
}

}  // namespace ckq
