/**
 * @file gf_linalg.hpp
 * @brief Dense vectors and matrices over GF(2^e), with a bit-packed GF(2) path.
 */
#pragma once

#include "finite_field.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilorb {

/// Coordinates of a vector; the field is supplied by context.
using Vec = std::vector<Scalar>;

/// Row-major dense matrix over a Field.
class Mat {
public:
  Mat() = default;
  Mat(const Field& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0)
  {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("negative matrix shape");
  }

  static Mat identity(const Field& field, int n)
  {
    Mat m(field, n, n);
    for (int i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static Mat from_rows(const Field& field, const std::vector<Vec>& rows)
  {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(field, r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
        throw std::invalid_argument("ragged rows");
      for (int j = 0; j < c; ++j)
        m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Mat from_columns(const Field& field, int dim, const std::vector<Vec>& cols)
  {
    Mat m(field, dim, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < dim; ++i)
        m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return m;
  }

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(int i, int j) { return data_[idx(i, j)]; }
  Scalar operator()(int i, int j) const { return data_[idx(i, j)]; }

  Vec row(int i) const
  {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(idx(i, 0)),
               data_.begin() + static_cast<std::ptrdiff_t>(idx(i, 0)) + cols_);
  }

  Vec col(int j) const
  {
    Vec v(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      v[static_cast<std::size_t>(i)] = (*this)(i, j);
    return v;
  }

  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const
  {
    return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
  }

  friend bool operator==(const Mat& a, const Mat& b)
  {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend bool operator<(const Mat& a, const Mat& b) { return a.data_ < b.data_; }

private:
  std::size_t idx(int i, int j) const
  {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  const Field* field_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

namespace detail {

inline void require_same_field(const Mat& a, const Mat& b)
{
  if (a.field_ptr() != b.field_ptr())
    throw std::invalid_argument("matrices over different fields");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Packed GF(2) matrices: one uint64 word per row, at most 64 columns.

class BitMatrix {
public:
  BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_(static_cast<std::size_t>(rows), 0)
  {
    if (cols > 64)
      throw std::invalid_argument("packed GF(2) matrices support at most 64 columns");
  }

  explicit BitMatrix(const Mat& m)
    : BitMatrix(m.rows(), m.cols())
  {
    if (m.field().degree() != 1)
      throw std::invalid_argument("packed path requires GF(2)");
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (m(i, j))
          words_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t word(int i) const { return words_[static_cast<std::size_t>(i)]; }
  std::uint64_t& word(int i) { return words_[static_cast<std::size_t>(i)]; }
  bool get(int i, int j) const { return (word(i) >> j) & 1u; }

  Mat to_mat() const
  {
    Mat m(Field::standard(1), rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        m(i, j) = get(i, j) ? 1 : 0;
    return m;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b)
  {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("shape mismatch in packed product");
    BitMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      std::uint64_t acc = 0;
      for (std::uint64_t w = a.word(i); w; w &= w - 1)
        acc ^= b.word(std::countr_zero(w));
      c.word(i) = acc;
    }
    return c;
  }

  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b)
  {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("shape mismatch in packed sum");
    BitMatrix c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
      c.word(i) = a.word(i) ^ b.word(i);
    return c;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
  int rows_;
  int cols_;
  std::vector<std::uint64_t> words_;
};

/// Reduced row echelon form of packed rows; returns pivot columns.
inline std::vector<int> packed_rref(std::vector<std::uint64_t>& rows, int cols)
{
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t p = r;
    while (p < rows.size() && !(rows[p] & bit))
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] & bit))
        rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline int packed_rank(const BitMatrix& a)
{
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    rows[static_cast<std::size_t>(i)] = a.word(i);
  return static_cast<int>(packed_rref(rows, a.cols()).size());
}

/// Kernel basis in the same echelon convention as the generic path.
inline std::vector<std::uint64_t> packed_kernel_basis(const BitMatrix& a)
{
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    rows[static_cast<std::size_t>(i)] = a.word(i);
  const auto pivots = packed_rref(rows, a.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : pivots)
    is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::uint64_t> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)])
      continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if ((rows[r] >> f) & 1u)
        v |= std::uint64_t{1} << pivots[r];
    basis.push_back(v);
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Generic arithmetic.

inline Mat operator+(const Mat& a, const Mat& b)
{
  detail::require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape mismatch in sum");
  Mat c(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      c(i, j) = a(i, j) ^ b(i, j);
  return c;
}

inline Mat operator-(const Mat& a, const Mat& b) { return a + b; }

inline Mat mat_mul_generic(const Mat& a, const Mat& b)
{
  detail::require_same_field(a, b);
  if (a.cols() != b.rows())
    throw std::invalid_argument("shape mismatch in product");
  const Field& f = a.field();
  Mat c(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar x = a(i, k);
      if (!x)
        continue;
      for (int j = 0; j < b.cols(); ++j)
        c(i, j) ^= f.mul(x, b(k, j));
    }
  return c;
}

inline Mat operator*(const Mat& a, const Mat& b)
{
  if (a.field_ptr() == b.field_ptr() && a.field().degree() == 1 && a.cols() == b.rows() &&
      b.cols() <= 64 && a.cols() <= 64 && a.rows() * b.cols() >= 64)
    return (BitMatrix(a) * BitMatrix(b)).to_mat();
  return mat_mul_generic(a, b);
}

inline Mat scale(const Mat& a, Scalar s)
{
  Mat c(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      c(i, j) = a.field().mul(s, a(i, j));
  return c;
}

inline Mat transpose(const Mat& a)
{
  Mat t(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      t(j, i) = a(i, j);
  return t;
}

inline Mat mat_power(const Mat& a, int k)
{
  if (!a.square())
    throw std::invalid_argument("power of non-square matrix");
  Mat r = Mat::identity(a.field(), a.rows());
  for (int i = 0; i < k; ++i)
    r = r * a;
  return r;
}

inline Scalar trace(const Mat& a)
{
  Scalar t = 0;
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i)
    t ^= a(i, i);
  return t;
}

inline Vec mat_vec(const Mat& a, const Vec& v)
{
  if (static_cast<int>(v.size()) != a.cols())
    throw std::invalid_argument("shape mismatch in matrix-vector product");
  const Field& f = a.field();
  Vec out(static_cast<std::size_t>(a.rows()), 0);
  for (int i = 0; i < a.rows(); ++i) {
    Scalar acc = 0;
    for (int j = 0; j < a.cols(); ++j)
      acc ^= f.mul(a(i, j), v[static_cast<std::size_t>(j)]);
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

inline Vec vec_add(const Vec& a, const Vec& b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("length mismatch in vector sum");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[i] ^ b[i];
  return c;
}

inline Vec vec_scale(const Field& f, Scalar s, const Vec& v)
{
  Vec c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    c[i] = f.mul(s, v[i]);
  return c;
}

/// c += s * v
inline void vec_axpy(const Field& f, Scalar s, const Vec& v, Vec& c)
{
  if (!s)
    return;
  for (std::size_t i = 0; i < v.size(); ++i)
    c[i] ^= f.mul(s, v[i]);
}

inline bool vec_is_zero(const Vec& v)
{
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

inline Vec unit_vec(int dim, int i)
{
  Vec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

/// vᵗ G w
inline Scalar bilinear(const Mat& g, const Vec& v, const Vec& w)
{
  const Field& f = g.field();
  Scalar acc = 0;
  for (int i = 0; i < g.rows(); ++i) {
    const Scalar vi = v[static_cast<std::size_t>(i)];
    if (!vi)
      continue;
    Scalar row = 0;
    for (int j = 0; j < g.cols(); ++j)
      row ^= f.mul(g(i, j), w[static_cast<std::size_t>(j)]);
    acc ^= f.mul(vi, row);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Elimination.

struct Echelon {
  Mat rref;                 // reduced rows (only the nonzero ones)
  std::vector<int> pivots;  // pivot column of each row
};

inline Echelon row_echelon_generic(const Mat& a)
{
  const Field& f = a.field();
  Mat m = a;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && !m(p, c))
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(r, j));
    const Scalar inv = f.inv(m(r, c));
    for (int j = 0; j < m.cols(); ++j)
      m(r, j) = f.mul(inv, m(r, j));
    for (int i = 0; i < m.rows(); ++i) {
      const Scalar x = m(i, c);
      if (i == r || !x)
        continue;
      for (int j = 0; j < m.cols(); ++j)
        m(i, j) ^= f.mul(x, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  Mat reduced(f, r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j)
      reduced(i, j) = m(i, j);
  return {reduced, pivots};
}

inline Echelon row_echelon(const Mat& a)
{
  if (a.field().degree() == 1 && a.cols() <= 64) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(a.rows()));
    BitMatrix b(a);
    for (int i = 0; i < a.rows(); ++i)
      rows[static_cast<std::size_t>(i)] = b.word(i);
    auto pivots = packed_rref(rows, a.cols());
    BitMatrix out(static_cast<int>(rows.size()), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
      out.word(static_cast<int>(i)) = rows[i];
    return {out.to_mat(), pivots};
  }
  return row_echelon_generic(a);
}

inline int rank_generic(const Mat& a) { return static_cast<int>(row_echelon_generic(a).pivots.size()); }

inline int rank(const Mat& a)
{
  if (a.field().degree() == 1 && a.cols() <= 64)
    return packed_rank(BitMatrix(a));
  return rank_generic(a);
}

inline std::vector<Vec> kernel_from_echelon(const Echelon& e, int cols)
{
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots)
    is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec> basis;
  for (int fcol = 0; fcol < cols; ++fcol) {
    if (is_pivot[static_cast<std::size_t>(fcol)])
      continue;
    Vec v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(fcol)] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[static_cast<std::size_t>(e.pivots[r])] = e.rref(static_cast<int>(r), fcol);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Echelonized basis of {x : A x = 0}, one vector per free column.
inline std::vector<Vec> kernel_basis_generic(const Mat& a)
{
  return kernel_from_echelon(row_echelon_generic(a), a.cols());
}

inline std::vector<Vec> kernel_basis(const Mat& a)
{
  if (a.field().degree() == 1 && a.cols() <= 64) {
    std::vector<Vec> out;
    for (std::uint64_t w : packed_kernel_basis(BitMatrix(a))) {
      Vec v(static_cast<std::size_t>(a.cols()), 0);
      for (int j = 0; j < a.cols(); ++j)
        v[static_cast<std::size_t>(j)] = (w >> j) & 1u;
      out.push_back(std::move(v));
    }
    return out;
  }
  return kernel_basis_generic(a);
}

/// Some x with A x = b, or nothing.
inline std::optional<Vec> solve(const Mat& a, const Vec& b)
{
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("shape mismatch in solve");
  Mat aug(a.field(), a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j)
      aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  const Echelon e = row_echelon_generic(aug);
  Vec x(static_cast<std::size_t>(a.cols()), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols())
      return std::nullopt;
    x[static_cast<std::size_t>(e.pivots[r])] = e.rref(static_cast<int>(r), a.cols());
  }
  return x;
}

inline std::optional<Mat> inverse(const Mat& a)
{
  if (!a.square())
    throw std::invalid_argument("inverse of non-square matrix");
  const int n = a.rows();
  Mat aug(a.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = row_echelon_generic(aug);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    return std::nullopt;
  Mat inv(a.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      inv(i, j) = e.rref(i, n + j);
  return inv;
}

/// Incrementally maintained reduced basis of a subspace.
class Span {
public:
  Span(const Field& field, int dim)
    : field_(&field), dim_(dim) {}

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(rows_.size()); }

  /// Residue of v after reduction; zero iff v lies in the span.
  Vec reduce(Vec v) const
  {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar x = v[static_cast<std::size_t>(pivots_[r])];
      if (x)
        vec_axpy(*field_, x, rows_[r], v);
    }
    return v;
  }

  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

  /// Adds v; returns false if it was already in the span.
  bool insert(const Vec& v)
  {
    Vec w = reduce(v);
    int p = 0;
    while (p < dim_ && !w[static_cast<std::size_t>(p)])
      ++p;
    if (p == dim_)
      return false;
    w = vec_scale(*field_, field_->inv(w[static_cast<std::size_t>(p)]), w);
    for (auto& row : rows_) {
      const Scalar x = row[static_cast<std::size_t>(p)];
      if (x)
        vec_axpy(*field_, x, w, row);
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

private:
  const Field* field_;
  int dim_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

inline bool linearly_independent(const Field& f, int dim, const std::vector<Vec>& vs)
{
  Span s(f, dim);
  for (const auto& v : vs)
    if (!s.insert(v))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Nilpotent structure.

inline bool is_nilpotent(const Mat& a)
{
  if (!a.square())
    throw std::invalid_argument("nilpotency of non-square matrix");
  Mat p = a;
  // Ranks strictly decrease until they stabilize, so at most n steps.
  int r = rank(p);
  for (int i = 0; i < a.rows() && r > 0; ++i) {
    p = p * a;
    const int nr = rank(p);
    if (nr == r)
      return false;
    r = nr;
  }
  return r == 0;
}

/// Jordan block sizes of a nilpotent matrix, weakly decreasing.
inline std::vector<int> jordan_partition(const Mat& a)
{
  if (!is_nilpotent(a))
    throw std::invalid_argument("jordan_partition of a non-nilpotent matrix");
  const int n = a.rows();
  std::vector<int> ranks{n};
  Mat p = Mat::identity(a.field(), n);
  while (ranks.back() > 0) {
    p = p * a;
    ranks.push_back(rank(p));
  }
  ranks.push_back(0);
  std::vector<int> parts;
  for (int m = static_cast<int>(ranks.size()) - 2; m >= 1; --m) {
    const int mult = ranks[static_cast<std::size_t>(m - 1)] - 2 * ranks[static_cast<std::size_t>(m)] +
                     ranks[static_cast<std::size_t>(m + 1)];
    if (mult < 0)
      throw std::logic_error("negative Jordan multiplicity");
    for (int i = 0; i < mult; ++i)
      parts.push_back(m);
  }
  return parts;
}

/// One Jordan chain: generator y with T^len y = 0 and T^(len-1) y != 0.
struct JordanChain {
  Vec generator;
  int length = 0;
};

/// Chains whose vectors T^i y form a basis; longest chains first.
inline std::vector<JordanChain> jordan_chains(const Mat& t)
{
  const Field& f = t.field();
  const int n = t.rows();
  const auto parts = jordan_partition(t);
  if (parts.empty())
    return {};
  const int top = parts.front();
  std::vector<std::vector<Vec>> kernels(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k)
    kernels[static_cast<std::size_t>(k)] = kernel_basis(mat_power(t, k));

  std::vector<JordanChain> chains;
  std::vector<Vec> placed;
  for (int k = top; k >= 1; --k) {
    const auto need = std::count(parts.begin(), parts.end(), k);
    if (need == 0)
      continue;
    // Quotient of ker T^k by ker T^(k-1) plus the placed vectors in ker T^k.
    Span base(f, n);
    for (const auto& v : kernels[static_cast<std::size_t>(k - 1)])
      base.insert(v);
    const Mat tk = mat_power(t, k);
    for (const auto& v : placed)
      if (vec_is_zero(mat_vec(tk, v)))
        base.insert(v);
    long found = 0;
    for (const auto& y : kernels[static_cast<std::size_t>(k)]) {
      if (found == need)
        break;
      if (!base.insert(y))
        continue;
      chains.push_back({y, k});
      Vec v = y;
      for (int i = 0; i < k; ++i) {
        placed.push_back(v);
        if (i > 0)
          base.insert(v);
        v = mat_vec(t, v);
      }
      ++found;
    }
    if (found != need)
      throw std::logic_error("jordan_chains: could not complete chains");
  }
  if (!linearly_independent(f, n, placed))
    throw std::logic_error("jordan_chains: chains are not independent");
  return chains;
}

// ---------------------------------------------------------------------------
// Text format: "rows cols GF(2^e)[/bits]" then rows of hex scalars.

inline void write_matrix(std::ostream& os, const Mat& m)
{
  os << m.rows() << ' ' << m.cols() << ' ' << m.field().header() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << scalar_to_hex(m(i, j));
    os << '\n';
  }
}

inline std::string matrix_to_text(const Mat& m)
{
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

inline Mat read_matrix(std::istream& is)
{
  int rows = 0, cols = 0;
  std::string header;
  if (!(is >> rows >> cols >> header))
    throw std::invalid_argument("matrix header must be 'rows cols GF(2^e)'");
  if (rows < 1 || cols < 1 || rows > 64 || cols > 64)
    throw std::invalid_argument("matrix shape out of range");
  const Field& f = field_from_header(header);
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::string tok;
      if (!(is >> tok))
        throw std::invalid_argument("matrix body ended early");
      m(i, j) = scalar_from_hex(f, tok);
    }
  std::string extra;
  if (is >> extra)
    throw std::invalid_argument("trailing data after matrix body");
  return m;
}

inline Mat matrix_from_text(const std::string& text)
{
  std::istringstream is(text);
  return read_matrix(is);
}

}  // namespace nilorb
