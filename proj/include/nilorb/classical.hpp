/**
 * @file classical.hpp
 * @brief Standard forms of Sp(2n), O(2n+1), O(2n); their Lie algebras,
 *        dual functionals, and the matrices attached to a functional.
 *
 * Basis order is e_1..e_n, f_1..f_n (then r for the odd case).
 *   Sp(2n):  β = [[0,I],[I,0]]
 *   O(2n+1): α(x,y,z) = Σ x_i y_i + z², β = [[0,I,0],[I,0,0],[0,0,0]]
 *   O(2n):   α(x,y)   = Σ x_i y_i,      β = [[0,I],[I,0]]
 */
#pragma once

#include "forms.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace nilorb {

enum class GroupKind { Sp, OOdd, OEven };

inline std::string kind_name(GroupKind k)
{
  switch (k) {
  case GroupKind::Sp:
    return "sp";
  case GroupKind::OOdd:
    return "so-odd";
  case GroupKind::OEven:
    return "so-even";
  }
  return "?";
}

inline GroupKind kind_from_name(const std::string& s)
{
  if (s == "sp")
    return GroupKind::Sp;
  if (s == "so-odd")
    return GroupKind::OOdd;
  if (s == "so-even")
    return GroupKind::OEven;
  throw std::invalid_argument("unknown group type '" + s + "' (expected sp, so-odd or so-even)");
}

inline int space_dim(GroupKind k, int n) { return k == GroupKind::OOdd ? 2 * n + 1 : 2 * n; }

inline int lie_dim(GroupKind k, int n) { return k == GroupKind::OEven ? n * (2 * n - 1) : n * (2 * n + 1); }

inline bool is_orthogonal(GroupKind k) { return k != GroupKind::Sp; }

struct SpaceData {
  GroupKind kind;
  int n;
  const Field* field;
  int dim;
  Mat S;  ///< Gram matrix of β
  Mat B;  ///< upper-triangular quadratic form α (zero for Sp)
};

inline SpaceData make_space(GroupKind kind, int n, const Field& field)
{
  if (n < 1)
    throw std::invalid_argument("rank n must be >= 1");
  const int dim = space_dim(kind, n);
  Mat s(field, dim, dim), b(field, dim, dim);
  for (int i = 0; i < n; ++i) {
    s(i, n + i) = 1;
    s(n + i, i) = 1;
    if (is_orthogonal(kind))
      b(i, n + i) = 1;
  }
  if (kind == GroupKind::OOdd)
    b(2 * n, 2 * n) = 1;
  return {kind, n, &field, dim, s, b};
}

/// Position of each basis vector in the flag e_1..e_n, [r,] f_n..f_1.
inline std::vector<int> flag_position(GroupKind kind, int n)
{
  const int dim = space_dim(kind, n);
  std::vector<int> pos(static_cast<std::size_t>(dim));
  for (int i = 0; i < n; ++i) {
    pos[static_cast<std::size_t>(i)] = i;
    pos[static_cast<std::size_t>(n + i)] = dim - 1 - i;
  }
  if (kind == GroupKind::OOdd)
    pos[static_cast<std::size_t>(2 * n)] = n;
  return pos;
}

namespace detail {

// Linear conditions (rows over N² row-major unknowns) cutting out g in gl(V).
inline Mat lie_conditions(const SpaceData& sp)
{
  const Field& f = *sp.field;
  const int N = sp.dim;
  std::vector<Vec> rows;
  auto var = [N](int i, int j) { return static_cast<std::size_t>(i * N + j); };
  // M = xᵗS; symplectic: M + Mᵗ = 0; orthogonal: M alternating.
  auto m_entry = [&](int a, int b, Vec& row) {
    for (int c = 0; c < N; ++c)
      if (sp.S(c, b))
        row[var(c, a)] ^= sp.S(c, b);
  };
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      if (a == b && sp.kind == GroupKind::Sp)
        continue;  // diagonal of xᵗS + Sx vanishes in characteristic 2
      Vec row(static_cast<std::size_t>(N * N), 0);
      m_entry(a, b, row);
      if (a != b)
        m_entry(b, a, row);
      rows.push_back(std::move(row));
    }
  if (sp.kind == GroupKind::OOdd) {
    Vec row(static_cast<std::size_t>(N * N), 0);
    for (int a = 0; a < N; ++a)
      row[var(a, a)] = 1;
    rows.push_back(std::move(row));
  }
  if (rows.empty())
    return Mat(f, 0, N * N);
  return Mat::from_rows(f, rows);
}

inline Mat vec_to_mat(const Field& f, int N, const Vec& v)
{
  Mat m(f, N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      m(i, j) = v[static_cast<std::size_t>(i * N + j)];
  return m;
}

}  // namespace detail

/**
 * The Lie algebra g with its echelonized basis.  Each basis element b_k
 * has entry 1 at its pivot position and 0 at every other pivot position,
 * so coordinates of x ∈ g are its entries at the pivots.
 */
class LieAlgebra {
public:
  /// Interned instance (lives for the whole program).
  static const LieAlgebra& get(GroupKind kind, int n, const Field& field)
  {
    static std::mutex mutex;
    static std::deque<std::unique_ptr<LieAlgebra>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    for (const auto& g : registry)
      if (g->space_.kind == kind && g->space_.n == n && g->space_.field == &field)
        return *g;
    registry.push_back(std::unique_ptr<LieAlgebra>(new LieAlgebra(kind, n, field)));
    return *registry.back();
  }

  const SpaceData& space() const { return space_; }
  GroupKind kind() const { return space_.kind; }
  int n() const { return space_.n; }
  const Field& field() const { return *space_.field; }
  int N() const { return space_.dim; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Mat>& basis() const { return basis_; }
  std::pair<int, int> pivot(int k) const { return pivots_[static_cast<std::size_t>(k)]; }
  const std::vector<Mat>& borel_basis() const { return borel_; }

  bool contains(const Mat& x) const
  {
    const Mat c = detail::lie_conditions(space_);
    Vec v(x.data().begin(), x.data().end());
    return vec_is_zero(mat_vec(c, v));
  }

  /// Coordinates of x ∈ g in the echelon basis.
  Vec coords_of_element(const Mat& x) const
  {
    Vec c(static_cast<std::size_t>(dim()));
    for (int k = 0; k < dim(); ++k)
      c[static_cast<std::size_t>(k)] = x(pivots_[static_cast<std::size_t>(k)].first, pivots_[static_cast<std::size_t>(k)].second);
    return c;
  }

  Mat element_from_coords(const Vec& c) const
  {
    Mat x(field(), N(), N());
    for (int k = 0; k < dim(); ++k)
      if (c[static_cast<std::size_t>(k)])
        x = x + scale(basis_[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k)]);
    return x;
  }

  /// Coordinates tr(X b_k) of the functional x ↦ tr(Xx).
  Vec dual_coords(const Mat& X) const
  {
    const Field& f = field();
    Vec c(static_cast<std::size_t>(dim()), 0);
    for (int k = 0; k < dim(); ++k) {
      const Mat& b = basis_[static_cast<std::size_t>(k)];
      Scalar t = 0;
      for (int i = 0; i < N(); ++i)
        for (int j = 0; j < N(); ++j)
          if (b(j, i))
            t ^= f.mul(X(i, j), b(j, i));
      c[static_cast<std::size_t>(k)] = t;
    }
    return c;
  }

  /// Canonical representative Σ c_k E_{j_k i_k} for the pivot (i_k, j_k) of b_k.
  Mat dual_matrix(const Vec& c) const
  {
    Mat X(field(), N(), N());
    for (int k = 0; k < dim(); ++k)
      X(pivots_[static_cast<std::size_t>(k)].second, pivots_[static_cast<std::size_t>(k)].first) = c[static_cast<std::size_t>(k)];
    return X;
  }

  /// Basis of the trace radical {R : tr(Rx) = 0 for all x ∈ g}.
  std::vector<Mat> trace_radical_basis() const
  {
    const int NN = N() * N();
    Mat a(field(), dim(), NN);
    for (int k = 0; k < dim(); ++k)
      for (int i = 0; i < N(); ++i)
        for (int j = 0; j < N(); ++j)
          a(k, i * N() + j) = basis_[static_cast<std::size_t>(k)](j, i);
    std::vector<Mat> out;
    for (const auto& v : kernel_basis(a))
      out.push_back(detail::vec_to_mat(field(), N(), v));
    return out;
  }

private:
  LieAlgebra(GroupKind kind, int n, const Field& field)
    : space_(make_space(kind, n, field))
  {
    const int N = space_.dim;
    const Mat cond = detail::lie_conditions(space_);
    const auto ker = kernel_basis(cond);
    // Pivot of each kernel vector = its free column (unique 1 among free columns).
    const Echelon e = row_echelon(cond);
    std::vector<bool> is_pivot(static_cast<std::size_t>(N * N), false);
    for (int p : e.pivots)
      is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < N * N; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)])
        free_cols.push_back(c);
    if (free_cols.size() != ker.size() || static_cast<int>(ker.size()) != lie_dim(kind, n))
      throw std::logic_error("Lie algebra has unexpected dimension");
    for (std::size_t k = 0; k < ker.size(); ++k) {
      basis_.push_back(detail::vec_to_mat(field, N, ker[k]));
      pivots_.emplace_back(free_cols[k] / N, free_cols[k] % N);
    }
    // Borel: members of g that are upper triangular in the flag order.
    const auto pos = flag_position(kind, n);
    std::vector<Vec> rows;
    for (int r = 0; r < cond.rows(); ++r)
      rows.push_back(cond.row(r));
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)])
          rows.push_back(unit_vec(N * N, a * N + b));
    for (const auto& v : kernel_basis(Mat::from_rows(field, rows)))
      borel_.push_back(detail::vec_to_mat(field, N, v));
  }

  SpaceData space_;
  std::vector<Mat> basis_;
  std::vector<std::pair<int, int>> pivots_;
  std::vector<Mat> borel_;
};

inline const LieAlgebra& lie_algebra(GroupKind kind, int n, const Field& field)
{
  return LieAlgebra::get(kind, n, field);
}

inline std::vector<Mat> lie_algebra_basis(GroupKind kind, int n, const Field& field)
{
  return lie_algebra(kind, n, field).basis();
}

/// ξ ∈ g*, stored by its coordinates ξ(b_k) in the echelon basis.
class DualFunctional {
public:
  DualFunctional(const LieAlgebra& g, Vec coords)
    : g_(&g), coords_(std::move(coords))
  {
    if (static_cast<int>(coords_.size()) != g.dim())
      throw std::invalid_argument("dual functional has wrong number of coordinates");
  }

  /// The functional x ↦ tr(Xx).
  static DualFunctional from_matrix(const LieAlgebra& g, const Mat& X)
  {
    if (X.rows() != g.N() || X.cols() != g.N() || X.field_ptr() != &g.field())
      throw std::invalid_argument("representative has wrong shape or field");
    return {g, g.dual_coords(X)};
  }

  static DualFunctional zero(const LieAlgebra& g) { return {g, Vec(static_cast<std::size_t>(g.dim()), 0)}; }

  const LieAlgebra& algebra() const { return *g_; }
  GroupKind kind() const { return g_->kind(); }
  int n() const { return g_->n(); }
  const Field& field() const { return g_->field(); }
  const Vec& coords() const { return coords_; }

  /// Canonical representative matrix.
  Mat X() const { return g_->dual_matrix(coords_); }

  Scalar evaluate(const Mat& x) const
  {
    return trace(X() * x);
  }

  bool is_zero() const { return vec_is_zero(coords_); }

  friend bool operator==(const DualFunctional& a, const DualFunctional& b)
  {
    return a.g_ == b.g_ && a.coords_ == b.coords_;
  }

private:
  const LieAlgebra* g_;
  Vec coords_;
};

/// Two representatives define the same functional.
inline bool dual_equal(const LieAlgebra& g, const Mat& X1, const Mat& X2)
{
  return g.dual_coords(X1) == g.dual_coords(X2);
}

/// g preserves β (and α for orthogonal kinds).
inline bool preserves_forms(const SpaceData& sp, const Mat& g)
{
  if (!inverse(g))
    return false;
  if (sp.kind == GroupKind::Sp)
    return transpose(g) * sp.S * g == sp.S;
  return quad_pullback(sp.B, g) == sp.B;
}

/// (g.ξ)(x) = ξ(g⁻¹xg), represented by gXg⁻¹.
inline DualFunctional coadjoint(const Mat& g, const DualFunctional& xi)
{
  const SpaceData& sp = xi.algebra().space();
  if (!preserves_forms(sp, g))
    throw std::invalid_argument("coadjoint: matrix is not in the group");
  const Mat ginv = *inverse(g);
  return DualFunctional::from_matrix(xi.algebra(), g * xi.X() * ginv);
}

// --- Symplectic --------------------------------------------------------------

inline void require_kind(const DualFunctional& xi, GroupKind k)
{
  if (xi.kind() != k)
    throw std::invalid_argument("operation requires " + kind_name(k) + ", got " + kind_name(xi.kind()));
}

/// T_ξ = X + S Xᵗ S for any representative X.
inline Mat t_xi_from_rep(const SpaceData& sp, const Mat& X) { return X + sp.S * transpose(X) * sp.S; }

inline Mat t_xi_symplectic(const DualFunctional& xi)
{
  require_kind(xi, GroupKind::Sp);
  return t_xi_from_rep(xi.algebra().space(), xi.X());
}

/// α_ξ(v) = vᵗ S X v as an upper-triangular quadratic form.
inline Mat alpha_xi_form_from_rep(const SpaceData& sp, const Mat& X) { return fold_upper(sp.S * X); }

inline Mat alpha_xi_form(const DualFunctional& xi)
{
  require_kind(xi, GroupKind::Sp);
  return alpha_xi_form_from_rep(xi.algebra().space(), xi.X());
}

inline FieldElement alpha_xi(const DualFunctional& xi, const Vec& v)
{
  return {xi.field(), quad_eval(alpha_xi_form(xi), v)};
}

/// Representative X with T_ξ = T and α_ξ = Q, given T ∈ sp and Q with polar β(·, T·).
inline Mat symplectic_witness(const SpaceData& sp, const Mat& T, const Mat& Q)
{
  // M upper triangular with M + Mᵗ = S T and diag(M) = α(e_i); then X = S M.
  const Mat st = sp.S * T;
  if (!is_alternating(st))
    throw std::invalid_argument("symplectic_witness: T is not in sp");
  Mat m = strict_upper(st);
  for (int i = 0; i < m.rows(); ++i)
    m(i, i) = Q(i, i);
  if (fold_upper(m) != Q)
    throw std::invalid_argument("symplectic_witness: quadratic form does not have polar β(·,T·)");
  return sp.S * m;
}

// --- Odd orthogonal ------------------------------------------------------------

/// X_ξ = X̃ᵗ S + S X̃.
inline Mat x_xi_from_rep(const SpaceData& sp, const Mat& X) { return transpose(X) * sp.S + sp.S * X; }

inline Mat x_xi_odd(const DualFunctional& xi)
{
  require_kind(xi, GroupKind::OOdd);
  return x_xi_from_rep(xi.algebra().space(), xi.X());
}

inline FieldElement beta_xi_odd(const DualFunctional& xi, const Vec& v, const Vec& w)
{
  return {xi.field(), bilinear(x_xi_odd(xi), v, w)};
}

/// A functional with X_ξ equal to the given alternating matrix.
inline DualFunctional odd_functional_from_x_xi(const LieAlgebra& g, const Mat& x_xi)
{
  if (g.kind() != GroupKind::OOdd)
    throw std::invalid_argument("odd_functional_from_x_xi requires so-odd");
  if (!is_alternating(x_xi))
    throw std::invalid_argument("X_xi must be alternating");
  const int N = g.N();
  const Field& f = g.field();
  const SpaceData& sp = g.space();
  // Linear map X̃ ↦ X̃ᵗS + SX̃ on row-major N² coordinates.
  Mat a(f, N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Mat e = detail::vec_to_mat(f, N, unit_vec(N * N, i * N + j));
      const Mat img = x_xi_from_rep(sp, e);
      for (int r = 0; r < N * N; ++r)
        a(r, i * N + j) = img.data()[static_cast<std::size_t>(r)];
    }
  const Vec rhs(x_xi.data().begin(), x_xi.data().end());
  auto sol = solve(a, rhs);
  if (!sol)
    throw std::logic_error("odd_functional_from_x_xi: no preimage");
  return DualFunctional::from_matrix(g, detail::vec_to_mat(f, N, *sol));
}

// --- Even orthogonal -----------------------------------------------------------

/// θ(ξ) = X + S Xᵗ S ∈ o(2n).
inline Mat theta_even(const DualFunctional& xi)
{
  require_kind(xi, GroupKind::OEven);
  return t_xi_from_rep(xi.algebra().space(), xi.X());
}

inline DualFunctional theta_even_inverse(const LieAlgebra& g, const Mat& T)
{
  if (g.kind() != GroupKind::OEven)
    throw std::invalid_argument("theta_even_inverse requires so-even");
  if (!g.contains(T))
    throw std::invalid_argument("theta_even_inverse: matrix is not in o(2n)");
  const SpaceData& sp = g.space();
  return DualFunctional::from_matrix(g, sp.S * strict_upper(sp.S * T));
}

/// φ_{a∧b}(v) = β(a,v) b + β(b,v) a as a matrix.
inline Mat wedge_to_lie(const SpaceData& sp, const Vec& a, const Vec& b)
{
  const Field& f = *sp.field;
  const int N = sp.dim;
  const Vec sa = mat_vec(transpose(sp.S), a), sb = mat_vec(transpose(sp.S), b);
  Mat m(f, N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      m(i, j) = f.mul(b[static_cast<std::size_t>(i)], sa[static_cast<std::size_t>(j)]) ^
                f.mul(a[static_cast<std::size_t>(i)], sb[static_cast<std::size_t>(j)]);
  return m;
}

/// Matrix whose columns are the lie-basis coordinates of φ(e_a ∧ e_b), a < b.
inline Mat wedge_map_matrix(const LieAlgebra& g)
{
  const int N = g.N();
  Mat p(g.field(), g.dim(), N * (N - 1) / 2);
  int col = 0;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b, ++col) {
      const Mat phi = wedge_to_lie(g.space(), unit_vec(N, a), unit_vec(N, b));
      const Vec c = g.coords_of_element(phi);
      for (int k = 0; k < g.dim(); ++k)
        p(k, col) = c[static_cast<std::size_t>(k)];
    }
  return p;
}

/// Gram matrix, in the lie basis, of the invariant form transported from ∧²V.
inline Mat wedge_invariant_form(int n, const Field& field)
{
  const LieAlgebra& g = lie_algebra(GroupKind::OEven, n, field);
  const Field& f = field;
  const int N = g.N();
  const Mat& S = g.space().S;
  const int W = N * (N - 1) / 2;
  Mat gram(f, W, W);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      pairs.emplace_back(a, b);
  for (int x = 0; x < W; ++x)
    for (int y = 0; y < W; ++y) {
      const auto [a, b] = pairs[static_cast<std::size_t>(x)];
      const auto [c, d] = pairs[static_cast<std::size_t>(y)];
      gram(x, y) = f.mul(S(a, c), S(b, d)) ^ f.mul(S(a, d), S(b, c));
    }
  const auto pinv = inverse(wedge_map_matrix(g));
  if (!pinv)
    throw std::logic_error("wedge map is not bijective");
  return transpose(*pinv) * gram * *pinv;
}

// --- Nilpotency --------------------------------------------------------------

/// ξ vanishes on the fixed Borel subalgebra.
inline bool in_n_prime(const DualFunctional& xi)
{
  const Mat X = xi.X();
  for (const auto& b : xi.algebra().borel_basis())
    if (trace(X * b))
      return false;
  return true;
}

}  // namespace nilorb
