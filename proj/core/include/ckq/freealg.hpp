#pragma once

// Free noncommutative polynomials over CKScalar, dense matrices over both
// rings, Kronecker helpers and relation sets.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ckq/errors.hpp"
#include "ckq/scalar.hpp"

namespace ckq {

enum class Family : std::uint8_t { t, tTilde, u, a, l, lTilde, lDiagPlus, lDiagMinus };

/// A generator of the free algebra. Ordered by (family, row, col).
struct GenSymbol {
  Family family = Family::t;
  std::uint8_t row = 1;
  std::uint8_t col = 1;

  auto operator<=>(const GenSymbol&) const = default;

  /// "t12", "tt12" (t-tilde), "u12", "a12", "l12", "lt12", "lp11", "lm11".
  std::string name() const;
  /// Inverse of name(). Throws PreconditionViolation.
  static GenSymbol parse(std::string_view text);
  bool is_functional() const { return family >= Family::l; }
};

inline GenSymbol sym(Family f, int row, int col) {
  return {f, static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)};
}

using Word = std::vector<GenSymbol>;

/// Shortlex: shorter words first, then lexicographic.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::string word_name(const Word& w);

class NCPoly {
 public:
  using TermMap = std::map<Word, CKScalar, ShortLex>;

  NCPoly() = default;
  static NCPoly constant(const CKScalar& c);
  static NCPoly symbol(GenSymbol g, int jcount);
  static NCPoly monomial(const Word& w, const CKScalar& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CKScalar coefficient(const Word& w) const;
  std::size_t max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

  void add_term(const Word& w, const CKScalar& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const CKScalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const CKScalar& c) { return a *= c; }
  friend NCPoly operator*(const CKScalar& c, NCPoly a) { return a *= c; }

  /// Applies f to every coefficient, dropping zeros.
  NCPoly map_coefficients(const std::function<CKScalar(const CKScalar&)>& f) const;
  /// Set of symbols occurring in any word.
  std::set<GenSymbol> symbols() const;

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const NCPoly& a, const NCPoly& b);

 private:
  friend void add_product(NCPoly& acc, const NCPoly& a, const NCPoly& b);
  TermMap terms_;
};

void add_product(NCPoly& acc, const NCPoly& a, const NCPoly& b);
void add_product(NCPoly& acc, const CKScalar& a, const NCPoly& b);
void add_product(NCPoly& acc, const NCPoly& a, const CKScalar& b);

/// "1/2·E^2·t11·t12 + ...".
std::string to_string(const NCPoly& p, const std::vector<std::string>& jnames = {});

// -------------------------------------------------------------------- Matrix

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// 0-based access.
  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }
  /// 1-based access.
  const T& at1(int r, int c) const { return (*this)(r - 1, c - 1); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RingMatrix = Matrix<CKScalar>;
using AlgMatrix = Matrix<NCPoly>;

RingMatrix identity(int n, int jcount);
AlgMatrix identity_alg(int n, int jcount);
AlgMatrix to_alg(const RingMatrix& m);

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b);
AlgMatrix operator*(const RingMatrix& a, const AlgMatrix& b);
AlgMatrix operator*(const AlgMatrix& a, const RingMatrix& b);
RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b);
AlgMatrix operator-(const AlgMatrix& a, const AlgMatrix& b);
RingMatrix operator*(const RingMatrix& a, const CKScalar& c);

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

/// kron(A,B) has A_ik B_jl at ((i,j),(k,l)), flattening (i,j) -> i*dimB + j.
RingMatrix kron(const RingMatrix& a, const RingMatrix& b);
/// M ⊗ I_n and I_n ⊗ M.
RingMatrix embed_left(const RingMatrix& m, int n);
RingMatrix embed_right(const RingMatrix& m, int n);
AlgMatrix embed_left(const AlgMatrix& m, int n);
AlgMatrix embed_right(const AlgMatrix& m, int n);
/// The flip P(u ⊗ w) = w ⊗ u on C^n ⊗ C^n.
RingMatrix permute_P(int n, int jcount);

bool is_lower_triangular(const RingMatrix& m);
bool is_upper_triangular(const RingMatrix& m);
/// Exact inverse of a triangular matrix with unit-monomial diagonal.
RingMatrix tri_inverse(const RingMatrix& m);
/// Laplace-expansion determinant (fine for the N <= 6 matrices used here).
CKScalar determinant(const RingMatrix& m);
/// Adjugate inverse; the determinant must be a unit monomial.
RingMatrix adjugate_inverse(const RingMatrix& m);

bool is_zero(const RingMatrix& m);
bool is_zero(const AlgMatrix& m);

/// Gauss-Jordan elimination with unit-monomial pivots on [A | B].
/// Columns without any unit candidate are skipped. On return the first
/// `rank` rows of A form a reduced echelon block; remaining rows of A are
/// zero only if every skipped column was already zero.
struct Elimination {
  int rank = 0;
  std::vector<int> pivot_cols;  // pivot column of each of the first rank rows
};
Elimination gauss_jordan(RingMatrix& a, RingMatrix& b, const std::vector<bool>& nilpotent = {});

/// A scalar is invertible in the specialized ring: one monomial, no v, no
/// positive power of a nilpotent slot.
bool is_unit(const CKScalar& c, const std::vector<bool>& nilpotent);

// ------------------------------------------------------------------ Relations

struct Relation {
  NCPoly poly;
  std::string label;
};

class RelationSet {
 public:
  RelationSet() = default;
  const std::vector<Relation>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  /// Equality ignores labels.
  friend bool operator==(const RelationSet& a, const RelationSet& b);

 private:
  friend RelationSet canonicalize_relations(std::vector<Relation> rs, const std::vector<bool>& nilpotent);
  std::vector<Relation> items_;
};

/// Divides by the leading coefficient (or by the invertible part of its
/// least term), then clears negative j powers by the least j-monomial.
NCPoly normalize(const NCPoly& p, const std::vector<bool>& nilpotent = {});

/// Drops zeros, normalizes, sorts and deduplicates. Duplicates keep the
/// smallest label.
RelationSet canonicalize_relations(std::vector<Relation> rs, const std::vector<bool>& nilpotent = {});

/// Relations whose words use only the given symbols.
RelationSet restrict_to(const RelationSet& rs, const std::set<GenSymbol>& symbols);

/// p reduced modulo the span of basis, by fraction-free elimination: unit
/// pivots when available, otherwise any coefficient that is not a zero
/// divisor. Zero means some non-zero-divisor multiple of p lies in the span.
NCPoly reduce(const NCPoly& p, const RelationSet& basis, const std::vector<bool>& nilpotent = {});
/// Mutual span membership.
bool equivalent(const RelationSet& a, const RelationSet& b, const std::vector<bool>& nilpotent = {});

}  // namespace ckq
