/**
 * @file forms.hpp
 * @brief Quadratic forms in characteristic 2, stored as upper-triangular matrices.
 *
 * A quadratic form α is the unique upper-triangular Q with α(v) = vᵗQv.
 * Its polar (bilinear) form is Q + Qᵗ.
 */
#pragma once

#include "gf_linalg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace nilorb {

/// Upper-triangular matrix defining the same quadratic form as M.
inline Mat fold_upper(const Mat& m)
{
  if (!m.square())
    throw std::invalid_argument("fold_upper of non-square matrix");
  Mat u(m.field(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    u(i, i) = m(i, i);
    for (int j = i + 1; j < m.cols(); ++j)
      u(i, j) = m(i, j) ^ m(j, i);
  }
  return u;
}

/// Strictly upper-triangular part.
inline Mat strict_upper(const Mat& m)
{
  Mat u(m.field(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      u(i, j) = m(i, j);
  return u;
}

inline Scalar quad_eval(const Mat& q, const Vec& v) { return bilinear(q, v, v); }

inline Mat polar(const Mat& q) { return q + transpose(q); }

/// The form v ↦ α(Pv), in the coordinates of P's domain.
inline Mat quad_pullback(const Mat& q, const Mat& p) { return fold_upper(transpose(p) * q * p); }

/// Quadratic form with prescribed polar Gram G (symmetric, zero diagonal) and values diag on basis vectors.
inline Mat quad_from_polar(const Mat& gram, const std::vector<Scalar>& diag)
{
  Mat q = strict_upper(gram);
  for (int i = 0; i < q.rows(); ++i)
    q(i, i) = diag[static_cast<std::size_t>(i)];
  return q;
}

inline bool is_symmetric(const Mat& m) { return m == transpose(m); }

inline bool is_alternating(const Mat& m)
{
  if (!is_symmetric(m))
    return false;
  for (int i = 0; i < m.rows(); ++i)
    if (m(i, i))
      return false;
  return true;
}

/// True iff the quadratic form is identically zero on span(basis).
inline bool quad_vanishes_on(const Mat& q, const std::vector<Vec>& basis)
{
  const Mat pol = polar(q);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (quad_eval(q, basis[a]))
      return false;
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (bilinear(pol, basis[a], basis[b]))
        return false;
  }
  return true;
}

/**
 * Basis (as columns of the returned matrix, in the original coordinates)
 * e_1..e_n, f_1..f_n[, r] in which the quadratic form becomes
 * Σ x_i y_i [+ z²].  Requires a split form: nondegenerate polar form
 * (even dimension, Witt index n) or a one-dimensional polar radical on
 * which the form is nonzero (odd dimension).  Returns nothing for an
 * anisotropic even-dimensional remainder.
 */
inline std::optional<Mat> hyperbolic_basis(const Mat& q)
{
  const Field& f = q.field();
  const int dim = q.rows();
  const Mat pol = polar(q);

  std::vector<Vec> rad = kernel_basis(pol);
  if (rad.size() > 1)
    throw std::invalid_argument("hyperbolic_basis: polar radical has dimension > 1");
  std::optional<Vec> r;
  if (!rad.empty()) {
    Vec v = rad[0];
    const Scalar a = quad_eval(q, v);
    if (!a)
      throw std::invalid_argument("hyperbolic_basis: form vanishes on the polar radical");
    r = vec_scale(f, f.inv(f.sqrt(a)), v);
  }

  // Current subspace, kept as a list of spanning vectors (excluding r).
  std::vector<Vec> space;
  {
    Span s(f, dim);
    if (r)
      s.insert(*r);
    for (int i = 0; i < dim; ++i)
      if (s.insert(unit_vec(dim, i)))
        space.push_back(unit_vec(dim, i));
  }

  std::vector<Vec> es, fs;
  while (!space.empty()) {
    // Isotropic vector of the current space (r is orthogonal to everything).
    std::optional<Vec> e;
    if (r) {
      const Vec& b = space.front();
      const Scalar c = f.sqrt(quad_eval(q, b));
      e = b;
      vec_axpy(f, c, *r, *e);
    } else {
      for (const auto& b : space)
        if (!quad_eval(q, b)) {
          e = b;
          break;
        }
      if (!e) {
        // Exhaustive search inside the current subspace.
        const int k = static_cast<int>(space.size());
        const unsigned qn = f.order();
        std::vector<unsigned> digits(static_cast<std::size_t>(k), 0);
        while (!e) {
          int pos = 0;
          while (pos < k && ++digits[static_cast<std::size_t>(pos)] == qn)
            digits[static_cast<std::size_t>(pos++)] = 0;
          if (pos == k)
            break;
          Vec v(static_cast<std::size_t>(dim), 0);
          for (int i = 0; i < k; ++i)
            vec_axpy(f, static_cast<Scalar>(digits[static_cast<std::size_t>(i)]), space[static_cast<std::size_t>(i)], v);
          if (!quad_eval(q, v))
            e = v;
        }
        if (!e)
          return std::nullopt;
      }
    }
    // Partner with β(e, g) = 1 inside the current space.
    std::optional<Vec> partner;
    for (const auto& b : space) {
      const Scalar x = bilinear(pol, *e, b);
      if (x) {
        partner = vec_scale(f, f.inv(x), b);
        break;
      }
    }
    if (!partner)
      throw std::logic_error("hyperbolic_basis: isotropic vector has no partner");
    Vec g = *partner;
    vec_axpy(f, quad_eval(q, g), *e, g);
    es.push_back(*e);
    fs.push_back(g);
    // Orthogonal complement of span(e, g) inside the current space.
    std::vector<Vec> next;
    Span s(f, dim);
    s.insert(*e);
    s.insert(g);
    if (r)
      s.insert(*r);
    for (const auto& b : space) {
      Vec w = b;
      vec_axpy(f, bilinear(pol, b, g), *e, w);
      vec_axpy(f, bilinear(pol, b, *e), g, w);
      if (s.insert(w))
        next.push_back(w);
    }
    space = std::move(next);
  }

  std::vector<Vec> cols = es;
  cols.insert(cols.end(), fs.begin(), fs.end());
  if (r)
    cols.push_back(*r);
  return Mat::from_columns(f, dim, cols);
}

}  // namespace nilorb
