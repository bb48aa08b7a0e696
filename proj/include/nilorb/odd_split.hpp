/**
 * @file odd_split.hpp
 * @brief Odd orthogonal reduction V = V_{2m+1} ⊕ W.
 *
 * The chain v_0..v_m is the minimal-degree solution of
 * (X_ξ + λS) Σ v_i λ^i = 0, scaled so α(v_m) = 1.  The dual chain
 * u_0..u_{m−1} satisfies β(v_i, u_j) = β_ξ(v_{i+1}, u_j) = δ_ij with
 * α(u_i) = 0, and W is the joint β/β_ξ-orthogonal complement, carrying
 * T_W with β(T_W w, w′) = β_ξ(w, w′).
 */
#pragma once

#include "combinatorics.hpp"
#include "form_modules.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilorb {

struct OddSplit {
  int m = 0;
  std::vector<Vec> v_chain;  ///< v_0..v_m
  std::vector<Vec> u_chain;  ///< u_0..u_{m−1}
  std::vector<Vec> W_basis;
  Mat T_on_W;
  FormModule w_module;       ///< (W, β|W, α|W, T_W)
};

/// Minimal m and v_0..v_m with X_ξ v_0 = 0, X_ξ v_i = S v_{i−1}, S v_m = 0, α(v_m) = 1.
inline std::pair<int, std::vector<Vec>> compute_chain(const DualFunctional& xi)
{
  require_kind(xi, GroupKind::OOdd);
  const SpaceData& sp = xi.algebra().space();
  const Field& f = xi.field();
  const int N = sp.dim;
  const Mat X = x_xi_odd(xi);
  for (int m = 0; m <= xi.n(); ++m) {
    // Unknowns v_0..v_m stacked; block rows λ^0..λ^{m+1}.
    Mat a(f, (m + 2) * N, (m + 1) * N);
    for (int blk = 0; blk <= m + 1; ++blk)
      for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
          if (blk <= m)
            a(blk * N + r, blk * N + c) = X(r, c);
          if (blk >= 1)
            a(blk * N + r, (blk - 1) * N + c) = sp.S(r, c);
        }
    const auto ker = kernel_basis(a);
    if (ker.empty())
      continue;
    if (ker.size() > 1)
      throw std::logic_error("compute_chain: minimal solution is not unique up to scalar");
    std::vector<Vec> v;
    for (int i = 0; i <= m; ++i)
      v.emplace_back(ker[0].begin() + i * N, ker[0].begin() + (i + 1) * N);
    const Scalar a_m = quad_eval(sp.B, v[static_cast<std::size_t>(m)]);
    if (!a_m)
      throw std::logic_error("compute_chain: last chain vector is not a radical vector");
    const Scalar s = f.inv(f.sqrt(a_m));
    for (auto& x : v)
      x = vec_scale(f, s, x);
    return {m, std::move(v)};
  }
  throw std::logic_error("compute_chain: no solution up to degree n");
}

/// u_0..u_{m−1} for a chain from compute_chain.
inline std::vector<Vec> compute_dual_chain(const DualFunctional& xi, const std::vector<Vec>& v)
{
  require_kind(xi, GroupKind::OOdd);
  const SpaceData& sp = xi.algebra().space();
  const Field& f = xi.field();
  const int N = sp.dim;
  const int m = static_cast<int>(v.size()) - 1;
  const Mat X = x_xi_odd(xi);
  const Vec r = unit_vec(N, N - 1);
  auto fix_alpha = [&](Vec& u) { vec_axpy(f, f.sqrt(quad_eval(sp.B, u)), r, u); };

  std::vector<Vec> u;
  if (m == 0)
    return u;
  // β(v_i, u_0) = δ_{i0}, i < m.
  std::vector<Vec> rows;
  Vec rhs;
  for (int i = 0; i < m; ++i) {
    rows.push_back(mat_vec(sp.S, v[static_cast<std::size_t>(i)]));
    rhs.push_back(i == 0 ? 1 : 0);
  }
  auto u0 = solve(Mat::from_rows(f, rows), rhs);
  if (!u0)
    throw std::logic_error("compute_dual_chain: no u_0");
  fix_alpha(*u0);
  u.push_back(*u0);
  // S u_i = X_ξ u_{i−1}; adding r keeps S u_i, so α can be fixed afterwards.
  for (int i = 1; i < m; ++i) {
    auto ui = solve(sp.S, mat_vec(X, u.back()));
    if (!ui)
      throw std::logic_error("compute_dual_chain: no u_" + std::to_string(i));
    fix_alpha(*ui);
    u.push_back(*ui);
  }
  return u;
}

/// W, its Gram data and T_W.  When m = 0, W = span(e_1..e_2n).
inline OddSplit complement_and_T(const DualFunctional& xi, std::vector<Vec> v, std::vector<Vec> u)
{
  const SpaceData& sp = xi.algebra().space();
  const Field& f = xi.field();
  const int N = sp.dim;
  const int m = static_cast<int>(v.size()) - 1;
  const Mat X = x_xi_odd(xi);
  std::vector<Vec> wb;
  if (m == 0) {
    for (int i = 0; i < N - 1; ++i)
      wb.push_back(unit_vec(N, i));
  } else {
    std::vector<Vec> rows;
    for (int i = 0; i < m; ++i) {
      rows.push_back(mat_vec(sp.S, u[static_cast<std::size_t>(i)]));
      rows.push_back(mat_vec(sp.S, v[static_cast<std::size_t>(i)]));
    }
    rows.push_back(mat_vec(X, u.back()));
    wb = kernel_basis(Mat::from_rows(f, rows));
  }
  const int d = static_cast<int>(wb.size());
  if (d != N - (2 * m + 1))
    throw std::logic_error("complement_and_T: complement has the wrong dimension");

  OddSplit out;
  out.m = m;
  out.v_chain = std::move(v);
  out.u_chain = std::move(u);
  out.W_basis = wb;
  if (d == 0) {
    out.T_on_W = Mat(f, 0, 0);
    out.w_module = {ModuleKind::Orthogonal, &f, 0, Mat(f, 0, 0), Mat(f, 0, 0), Mat(f, 0, 0)};
    return out;
  }
  const Mat P = Mat::from_columns(f, N, wb);
  const Mat gb = transpose(P) * sp.S * P;
  const Mat gx = transpose(P) * X * P;
  const auto gbi = inverse(gb);
  if (!gbi)
    throw std::logic_error("complement_and_T: beta is degenerate on W");
  out.T_on_W = *gbi * gx;
  out.w_module = {ModuleKind::Orthogonal, &f, d, gb, quad_pullback(sp.B, P), out.T_on_W};
  return out;
}

/// Full reduction; works for any ξ (nilpotency is decided from T_W).
inline OddSplit odd_split(const DualFunctional& xi)
{
  auto [m, v] = compute_chain(xi);
  auto u = compute_dual_chain(xi, v);
  return complement_and_T(xi, std::move(v), std::move(u));
}

/// Criterion: Sp, T_ξ nilpotent; OOdd, α(v_i) = 0 for i < m and T_W nilpotent;
/// OEven, θ(ξ) nilpotent.
inline bool is_nilpotent_functional(const DualFunctional& xi)
{
  switch (xi.kind()) {
  case GroupKind::Sp:
    return is_nilpotent(t_xi_symplectic(xi));
  case GroupKind::OEven:
    return is_nilpotent(theta_even(xi));
  case GroupKind::OOdd: {
    const OddSplit s = odd_split(xi);
    const Mat& B = xi.algebra().space().B;
    for (int i = 0; i < s.m; ++i)
      if (quad_eval(B, s.v_chain[static_cast<std::size_t>(i)]))
        return false;
    return s.w_module.dim == 0 || is_nilpotent(s.T_on_W);
  }
  }
  return false;
}

/// The form module of a nilpotent ξ: (V, β, α_ξ, T_ξ), (W, β, α, T_W) or (V, β, α, θ(ξ)).
inline FormModule build_module(const DualFunctional& xi)
{
  if (!is_nilpotent_functional(xi))
    throw std::invalid_argument("build_module: functional is not nilpotent");
  switch (xi.kind()) {
  case GroupKind::Sp:
    return symp_module_unchecked(xi);
  case GroupKind::OEven:
    return even_module_unchecked(xi);
  case GroupKind::OOdd:
    return odd_split(xi).w_module;
  }
  throw std::logic_error("unknown kind");
}

// --- classification -------------------------------------------------------------

/// V_{2m+1} ⊕ ⊕ W_{l_i}(k_i) with l_i := max(χ(k_i), k_i − m).
inline OddSymbol classify_odd_closed(const OddSplit& s)
{
  OddSymbol sym;
  sym.m = s.m;
  if (s.w_module.dim > 0) {
    if (!is_nilpotent(s.T_on_W))
      throw std::invalid_argument("classify_odd_closed: functional is not nilpotent");
    for (auto b : classify_orth(s.w_module).blocks) {
      b.l = std::max(b.l, b.m - s.m);
      sym.blocks.push_back(b);
    }
  }
  if (const auto why = odd_symbol_problem(sym); !why.empty())
    throw std::logic_error("classify_odd_closed produced an invalid symbol " + to_string(sym) + ": " + why);
  return sym;
}

inline OddSymbol classify_odd_closed(const DualFunctional& xi) { return classify_odd_closed(odd_split(xi)); }

struct OddNormalForm {
  Mat quad;     ///< α in the abstract basis v, u, then blocks
  Mat beta_xi;  ///< β_ξ in the abstract basis
  Mat basis;    ///< columns: standard basis vectors in abstract coordinates
  DualFunctional witness;
};

/// As build_odd_normal_form, checking only that each block is constructible.
inline OddNormalForm odd_normal_form_unchecked(const OddSymbol& sym, const Field& field)
{
  const int m = sym.m;
  const int base = 2 * m + 1;
  const int N = 2 * sym.rank() + 1;
  Mat beta(field, N, N), bx(field, N, N);
  std::vector<Scalar> alpha(static_cast<std::size_t>(N), 0);
  for (int i = 0; i < m; ++i) {
    const int ui = m + 1 + i;
    beta(i, ui) = beta(ui, i) = 1;
    bx(i + 1, ui) = bx(ui, i + 1) = 1;
  }
  alpha[static_cast<std::size_t>(m)] = 1;
  if (!sym.blocks.empty()) {
    const FormModule w = orth_normal_form(sym.blocks, field);
    const Mat wx = w.beta_xi();
    for (int i = 0; i < w.dim; ++i) {
      alpha[static_cast<std::size_t>(base + i)] = w.quad(i, i);
      for (int j = 0; j < w.dim; ++j) {
        beta(base + i, base + j) = w.beta(i, j);
        bx(base + i, base + j) = wx(i, j);
      }
    }
  }
  const Mat Q = quad_from_polar(beta, alpha);
  const auto P = hyperbolic_basis(Q);
  if (!P)
    throw std::logic_error("build_odd_normal_form: form is not split");
  const LieAlgebra& g = lie_algebra(GroupKind::OOdd, sym.rank(), field);
  const Mat xstd = transpose(*P) * bx * *P;
  return {Q, bx, *P, odd_functional_from_x_xi(g, xstd)};
}

/// Abstract model of V_{2m+1} ⊕ ⊕ W_{l_i}^{ε_i}(k_i) and a functional realizing it.
inline OddNormalForm build_odd_normal_form(const OddSymbol& sym, const Field& field)
{
  if (const auto why = odd_symbol_problem(sym); !why.empty())
    throw std::invalid_argument("invalid symbol " + to_string(sym) + ": " + why);
  return odd_normal_form_unchecked(sym, field);
}

/// (V, β_ξ, α) of a normal form, in its abstract basis.
inline FormData odd_form_data(const OddNormalForm& nf)
{
  return {&nf.quad.field(), nf.quad.rows(), {nf.beta_xi}, {nf.quad}, std::nullopt};
}

struct OddFqLabel {
  OddSymbol symbol;
  int candidates = 0;
  int matches = 0;
  bool unique() const { return matches == 1; }
};

/**
 * Labels of a nilpotent ξ over F_q: Zero away from the split positions
 * ν_i < μ_i ≤ ν_{i−1}; at the k split positions decided by testing
 * (V, α, β_ξ) against the 2^k representatives.
 */
inline OddFqLabel classify_odd_fq(const DualFunctional& xi)
{
  const OddSymbol closed = classify_odd_closed(xi);
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < closed.blocks.size(); ++i)
    if (odd_split_position(closed, i))
      pos.push_back(i);
  auto labelled = [&](unsigned mask) {
    OddSymbol s = closed;
    for (std::size_t i = 0; i < s.blocks.size(); ++i)
      s.blocks[i].eps = Eps::Zero;
    for (std::size_t j = 0; j < pos.size(); ++j)
      if (mask & (1u << j))
        s.blocks[pos[j]].eps = Eps::Delta;
    return s;
  };
  OddFqLabel out{labelled(0), 0, 0};
  if (pos.empty()) {
    out.candidates = out.matches = 1;
    return out;
  }
  const SpaceData& sp = xi.algebra().space();
  const FormData target{&xi.field(), sp.dim, {x_xi_odd(xi)}, {sp.B}, std::nullopt};
  for (unsigned mask = 0; mask < (1u << pos.size()); ++mask) {
    const OddSymbol s = labelled(mask);
    const OddNormalForm nf = build_odd_normal_form(s, xi.field());
    ++out.candidates;
    if (isometry_equivalent(odd_form_data(nf), target)) {
      if (out.matches++ == 0)
        out.symbol = s;
    }
  }
  return out;
}

}  // namespace nilorb
