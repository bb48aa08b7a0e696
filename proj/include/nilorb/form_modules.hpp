/**
 * @file form_modules.hpp
 * @brief Form modules attached to nilpotent functionals, the index function χ,
 *        normal forms W_l^ε(m), and closed-field / F_q classification.
 *
 * A FormModule is a space with a nondegenerate bilinear Gram `beta`, a
 * nilpotent T with β(Tv, v) = 0, and a quadratic form `quad`:
 *   symplectic:  quad = α_ξ, whose polar form is β_ξ(v, w) = β(v, Tw)
 *   orthogonal:  quad = α,   whose polar form is β itself
 * In both cases χ is computed from `quad`.
 */
#pragma once

#include "classical.hpp"
#include "isometry.hpp"
#include "symbols.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

enum class ModuleKind { Symplectic, Orthogonal };

struct FormModule {
  ModuleKind kind = ModuleKind::Symplectic;
  const Field* field = nullptr;
  int dim = 0;
  Mat beta;  ///< Gram of β
  Mat quad;  ///< upper-triangular α_ξ (symplectic) or α (orthogonal)
  Mat T;

  /// Gram of β_ξ(v, w) = β(v, Tw).
  Mat beta_xi() const { return beta * T; }
};

using SympFormModule = FormModule;
using OrthFormModule = FormModule;

inline FormData form_data(const FormModule& mod)
{
  return {mod.field, mod.dim, {mod.beta}, {mod.quad}, mod.T};
}

/// Empty when the module satisfies its invariants.
inline std::string module_problem(const FormModule& mod)
{
  if (mod.beta.rows() != mod.dim || mod.quad.rows() != mod.dim || mod.T.rows() != mod.dim)
    return "matrix sizes do not match the dimension";
  if (!is_symmetric(mod.beta) || rank(mod.beta) != mod.dim)
    return "beta must be symmetric and nondegenerate";
  if (!is_alternating(mod.beta_xi()))
    return "T does not satisfy beta(Tv, v) = 0";
  if (!is_nilpotent(mod.T))
    return "T is not nilpotent";
  if (mod.kind == ModuleKind::Symplectic) {
    if (!is_alternating(mod.beta))
      return "beta must be alternating";
    if (polar(mod.quad) != mod.beta_xi())
      return "polar form of alpha_xi must be beta(., T.)";
    // β_ξ(Tv, v) = β(Tv, Tv) = 0 follows from β alternating.
  } else if (polar(mod.quad) != mod.beta) {
    return "polar form of alpha must be beta";
  }
  return "";
}

// --- χ --------------------------------------------------------------------------

/// χ(m) = min{i ≥ 0 : T^m v = 0 ⟹ quad(T^i v) = 0}.
inline int index_chi(const FormModule& mod, int m)
{
  const auto kernel = kernel_basis(mat_power(mod.T, m));
  Mat ti = Mat::identity(*mod.field, mod.dim);
  for (int i = 0;; ++i) {
    std::vector<Vec> images;
    images.reserve(kernel.size());
    for (const auto& k : kernel)
      images.push_back(mat_vec(ti, k));
    if (quad_vanishes_on(mod.quad, images))
      return i;
    if (i > mod.dim)
      throw std::logic_error("index_chi did not terminate (T not nilpotent?)");
    ti = ti * mod.T;
  }
}

/// Value of [m;l] at k: max{0, min{k − m + l, l}}.
inline int chi_block_value(int m, int l, int k) { return std::max(0, std::min(k - m + l, l)); }

// --- symbols --------------------------------------------------------------------

/// Orthogonal blocks use ⌊(m+1)/2⌋ ≤ l ≤ m; a δ label needs 2l > m.
inline std::string orth_symbol_problem(const SympSymbol& s)
{
  if (s.blocks.empty())
    return "symbol has no blocks";
  const bool labelled = s.blocks.front().eps != Eps::Closed;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    const auto& b = s.blocks[i];
    if (b.m < 1)
      return "block size must be positive";
    if (b.l < (b.m + 1) / 2 || b.l > b.m)
      return "need floor((m+1)/2) <= l <= m in block " + std::to_string(i + 1);
    if ((b.eps != Eps::Closed) != labelled)
      return "labels must be given on every block or on none";
    if (b.eps == Eps::Delta && 2 * b.l <= b.m)
      return "label d needs 2l > m (block " + std::to_string(i + 1) + ")";
    if (i > 0) {
      const auto& a = s.blocks[i - 1];
      if (a.m < b.m || a.l < b.l || a.m - a.l < b.m - b.l)
        return "need m_i >= m_{i+1}, l_i >= l_{i+1}, m_i - l_i >= m_{i+1} - l_{i+1}";
    }
  }
  return "";
}

/// Fixpoint of the two rewrites
///   (i)  l_i < l_{i+1}               ⟹ l_i := l_{i+1}
///   (ii) m_i − l_i < m_{i+1} − l_{i+1} ⟹ l_{i+1} := m_{i+1} − m_i + l_i
inline SympSymbol normalize_symbol(std::vector<IndecompSymbol> raw)
{
  for (std::size_t i = 1; i < raw.size(); ++i)
    if (raw[i - 1].m < raw[i].m)
      throw std::invalid_argument("normalize_symbol: block sizes must be weakly decreasing");
  // Each rewrite strictly raises some l, and l never exceeds its m.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
      auto& a = raw[i];
      auto& b = raw[i + 1];
      if (a.l < b.l) {
        a.l = b.l;
        changed = true;
      }
      if (a.m - a.l < b.m - b.l) {
        b.l = b.m - a.m + a.l;
        changed = true;
      }
    }
  }
  return {std::move(raw)};
}

/// Jordan parts of T paired up as m_1 ≥ m_2 ≥ ⋯ (each part occurs twice).
inline std::vector<int> paired_parts(const Mat& T)
{
  const auto parts = jordan_partition(T);
  if (parts.size() % 2)
    throw std::logic_error("form module has a Jordan part of odd multiplicity");
  std::vector<int> ms;
  for (std::size_t i = 0; i < parts.size(); i += 2) {
    if (parts[i] != parts[i + 1])
      throw std::logic_error("form module has a Jordan part of odd multiplicity");
    ms.push_back(parts[i]);
  }
  return ms;
}

namespace detail {

inline SympSymbol closed_symbol(const FormModule& mod)
{
  std::vector<IndecompSymbol> raw;
  for (int m : paired_parts(mod.T))
    raw.push_back({m, index_chi(mod, m), Eps::Closed});
  return normalize_symbol(std::move(raw));
}

}  // namespace detail

/// Closed-field symbol (m_i)^2_{l_i} with l_i = χ(m_i).
inline SympSymbol classify_closed(const FormModule& mod)
{
  if (mod.kind != ModuleKind::Symplectic)
    throw std::invalid_argument("classify_closed expects a symplectic module; use classify_orth");
  SympSymbol s = detail::closed_symbol(mod);
  if (const auto why = symp_symbol_problem(s); !why.empty())
    throw std::logic_error("classify_closed produced an invalid symbol " + to_string(s) + ": " + why);
  return s;
}

// --- normal forms ---------------------------------------------------------------

/**
 * Symplectic normal form in standard coordinates.  Block (m, l, ε) at
 * offset a occupies e_{a..a+m−1} = T^i v_1 and f_{a..a+m−1} with
 * f_{a+j} = T^{m−1−j} v_2, so β is the standard form.  Blocks need only be
 * individually valid, which lets the rewrites be tested on raw sequences.
 */
inline FormModule symp_normal_form(const std::vector<IndecompSymbol>& blocks, const Field& field)
{
  int n = 0;
  for (const auto& b : blocks) {
    if (b.m < 1 || b.l < b.m / 2 || b.l > b.m)
      throw std::invalid_argument("symplectic block needs floor(m/2) <= l <= m");
    if (b.eps == Eps::Delta && !(2 * b.l > b.m - 1 && b.l < b.m))
      throw std::invalid_argument("symplectic delta block needs (m-1)/2 < l < m");
    n += b.m;
  }
  if (n == 0)
    throw std::invalid_argument("empty symbol");
  const SpaceData sp = make_space(GroupKind::Sp, n, field);
  Mat T(field, 2 * n, 2 * n);
  std::vector<Scalar> alpha(static_cast<std::size_t>(2 * n), 0);
  int a = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i + 1 < b.m; ++i) {
      T(a + i + 1, a + i) = 1;          // T e_{a+i} = e_{a+i+1}
      T(n + a + i, n + a + i + 1) = 1;  // T f_{a+i+1} = f_{a+i}
    }
    if (b.l >= 1)
      alpha[static_cast<std::size_t>(a + b.l - 1)] = 1;
    if (b.eps == Eps::Delta)
      alpha[static_cast<std::size_t>(n + a + b.l)] = field.nonsplit_delta();
    a += b.m;
  }
  FormModule mod{ModuleKind::Symplectic, &field, 2 * n, sp.S, Mat(field, 2 * n, 2 * n), T};
  mod.quad = quad_from_polar(mod.beta_xi(), alpha);
  return mod;
}

struct SympNormalForm {
  FormModule module;
  DualFunctional witness;
};

/// Normal form of a symbol plus a functional ξ whose module is exactly it.
inline SympNormalForm build_normal_form(const SympSymbol& sym, const Field& field)
{
  if (const auto why = symp_symbol_problem(sym); !why.empty())
    throw std::invalid_argument("invalid symbol " + to_string(sym) + ": " + why);
  FormModule mod = symp_normal_form(sym.blocks, field);
  const LieAlgebra& g = lie_algebra(GroupKind::Sp, sym.rank(), field);
  const Mat X = symplectic_witness(g.space(), mod.T, mod.quad);
  return {std::move(mod), DualFunctional::from_matrix(g, X)};
}

/**
 * Orthogonal block W_l^ε(k) in an abstract basis: per block the chain
 * T^i ρ_1 (i < k) followed by T^i ρ_2, with β(T^i ρ_1, T^j ρ_2) = δ_{i+j,k−1},
 * α(T^i ρ_1) = δ_{i,l−1}, α(T^i ρ_2) = ε δ_{i,k−l}.
 */
inline FormModule orth_normal_form(const std::vector<IndecompSymbol>& blocks, const Field& field)
{
  int dim = 0;
  for (const auto& b : blocks) {
    if (b.m < 1 || b.l < (b.m + 1) / 2 || b.l > b.m)
      throw std::invalid_argument("orthogonal block needs floor((k+1)/2) <= l <= k");
    if (b.eps == Eps::Delta && 2 * b.l <= b.m)
      throw std::invalid_argument("orthogonal delta block needs 2l > k");
    dim += 2 * b.m;
  }
  Mat beta(field, dim, dim), T(field, dim, dim);
  std::vector<Scalar> alpha(static_cast<std::size_t>(dim), 0);
  int a = 0;
  for (const auto& b : blocks) {
    const int k = b.m;
    for (int i = 0; i < k; ++i) {
      beta(a + i, a + k + (k - 1 - i)) = 1;
      beta(a + k + (k - 1 - i), a + i) = 1;
      if (i + 1 < k) {
        T(a + i + 1, a + i) = 1;
        T(a + k + i + 1, a + k + i) = 1;
      }
    }
    alpha[static_cast<std::size_t>(a + b.l - 1)] = 1;
    if (b.eps == Eps::Delta)
      alpha[static_cast<std::size_t>(a + k + (k - b.l))] = field.nonsplit_delta();
    a += 2 * k;
  }
  FormModule mod{ModuleKind::Orthogonal, &field, dim, beta, Mat(field, dim, dim), T};
  mod.quad = quad_from_polar(beta, alpha);
  return mod;
}

/// Closed-field orthogonal symbol of (W, α, T).
inline SympSymbol classify_orth(const FormModule& mod)
{
  if (mod.kind != ModuleKind::Orthogonal)
    throw std::invalid_argument("classify_orth expects an orthogonal module");
  SympSymbol s = detail::closed_symbol(mod);
  if (const auto why = orth_symbol_problem(s); !why.empty())
    throw std::logic_error("classify_orth produced an invalid symbol " + to_string(s) + ": " + why);
  return s;
}

/// Orthogonal symbol text in the symplectic syntax, validated with the orthogonal rules.
inline SympSymbol parse_orth_symbol(const std::string& text)
{
  detail::SymbolLexer lx(text);
  SympSymbol s;
  while (!lx.done()) {
    lx.expect("(");
    IndecompSymbol b;
    b.m = lx.integer();
    lx.expect(")^2_");
    b.l = lx.integer();
    b.eps = lx.eps();
    s.blocks.push_back(b);
  }
  if (const auto why = orth_symbol_problem(s.closed()); !why.empty())
    throw std::invalid_argument("invalid symbol '" + text + "': " + why);
  return s;
}

/// A functional on o(2n) whose θ realizes the orthogonal normal form; fails if α is not split.
inline DualFunctional even_normal_form_witness(const std::vector<IndecompSymbol>& blocks, const Field& field)
{
  const FormModule mod = orth_normal_form(blocks, field);
  const auto P = hyperbolic_basis(mod.quad);
  if (!P)
    throw std::invalid_argument("labels give a non-split quadratic form, not realized in O+(2n)");
  const LieAlgebra& g = lie_algebra(GroupKind::OEven, mod.dim / 2, field);
  if (quad_pullback(mod.quad, *P) != g.space().B)
    throw std::logic_error("even_normal_form_witness: basis change does not reach the standard form");
  return theta_even_inverse(g, *inverse(*P) * mod.T * *P);
}

/// All closed orthogonal symbols with Σ m_i = n (dimension 2n).
inline std::vector<SympSymbol> orth_enumerate_closed(int n)
{
  std::vector<SympSymbol> out;
  std::vector<IndecompSymbol> cur;
  auto rec = [&](auto&& self, int left, int max_m) -> void {
    if (left == 0) {
      out.push_back({cur});
      return;
    }
    for (int m = std::min(left, max_m); m >= 1; --m)
      for (int l = (m + 1) / 2; l <= m; ++l) {
        if (!cur.empty()) {
          const auto& a = cur.back();
          if (a.l < l || a.m - a.l < m - l)
            continue;
        }
        cur.push_back({m, l, Eps::Closed});
        self(self, left - m, m);
        cur.pop_back();
      }
  };
  rec(rec, n, n);
  return out;
}

// --- F_q labels -----------------------------------------------------------------

/// Result of matching a module against labelled representatives.
struct FqLabel {
  SympSymbol symbol;   ///< labelled symbol of the first matching representative
  int candidates = 0;  ///< representatives tried
  int matches = 0;     ///< representatives isometric to the module
  bool unique() const { return matches == 1; }
};

namespace detail {

/// Labels obtained from a bitmask over the given block positions.
inline SympSymbol labelled(const SympSymbol& closed, const std::vector<std::size_t>& pos, unsigned mask)
{
  SympSymbol s = closed;
  for (auto& b : s.blocks)
    b.eps = Eps::Zero;
  for (std::size_t j = 0; j < pos.size(); ++j)
    if (mask & (1u << j))
      s.blocks[pos[j]].eps = Eps::Delta;
  return s;
}

}  // namespace detail

/**
 * Closed symbol plus canonical ε labels.  ε is Zero away from the split
 * positions; at the k split positions it is found by testing the module
 * against all 2^k representatives.
 */
inline FqLabel classify_fq(const FormModule& mod)
{
  const SympSymbol closed = classify_closed(mod);
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < closed.blocks.size(); ++i)
    if (symp_split_position(closed, i))
      pos.push_back(i);
  FqLabel out{detail::labelled(closed, pos, 0), 0, 0};
  if (pos.empty()) {
    out.candidates = out.matches = 1;
    return out;
  }
  const FormData data = form_data(mod);
  for (unsigned mask = 0; mask < (1u << pos.size()); ++mask) {
    const SympSymbol s = detail::labelled(closed, pos, mask);
    const FormModule rep = symp_normal_form(s.blocks, *mod.field);
    ++out.candidates;
    if (isometry_equivalent(data, form_data(rep))) {
      if (out.matches++ == 0)
        out.symbol = s;
    }
  }
  return out;
}

/**
 * Orthogonal labels.  Every block admitting a δ variant is a candidate;
 * subsets are tried by increasing size and the first isometric
 * representative is returned, so equal labels mean isometric modules.
 */
inline FqLabel classify_orth_fq(const FormModule& mod)
{
  const SympSymbol closed = classify_orth(mod);
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < closed.blocks.size(); ++i)
    if (2 * closed.blocks[i].l > closed.blocks[i].m)
      pos.push_back(i);
  std::vector<unsigned> masks;
  for (unsigned mask = 0; mask < (1u << pos.size()); ++mask)
    masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  const FormData data = form_data(mod);
  FqLabel out{detail::labelled(closed, pos, 0), 0, 0};
  for (unsigned mask : masks) {
    const SympSymbol s = detail::labelled(closed, pos, mask);
    ++out.candidates;
    if (isometry_equivalent(data, form_data(orth_normal_form(s.blocks, *mod.field)))) {
      out.symbol = s;
      out.matches = 1;
      break;
    }
  }
  return out;
}

// --- modules of functionals ----------------------------------------------------

/// (V, β, α_ξ) with T = T_ξ; no nilpotency check.
inline FormModule symp_module_unchecked(const DualFunctional& xi)
{
  require_kind(xi, GroupKind::Sp);
  const SpaceData& sp = xi.algebra().space();
  return {ModuleKind::Symplectic, &xi.field(), sp.dim, sp.S, alpha_xi_form(xi), t_xi_symplectic(xi)};
}

/// (V, β, α) with T = θ(ξ); no nilpotency check.
inline FormModule even_module_unchecked(const DualFunctional& xi)
{
  require_kind(xi, GroupKind::OEven);
  const SpaceData& sp = xi.algebra().space();
  return {ModuleKind::Orthogonal, &xi.field(), sp.dim, polar(sp.B), sp.B, theta_even(xi)};
}

// --- series ---------------------------------------------------------------------

/// Coefficients β(T^k v, w), k = 0..dim.
inline std::vector<Scalar> phi_series(const FormModule& mod, const Vec& v, const Vec& w)
{
  std::vector<Scalar> out;
  Vec tv = v;
  for (int k = 0; k <= mod.dim; ++k) {
    out.push_back(bilinear(mod.beta, tv, w));
    tv = mat_vec(mod.T, tv);
  }
  return out;
}

/// Coefficients β_ξ(T^k v, w), k = 0..dim.
inline std::vector<Scalar> phi_xi_series(const FormModule& mod, const Vec& v, const Vec& w)
{
  const Mat bx = mod.beta_xi();
  std::vector<Scalar> out;
  Vec tv = v;
  for (int k = 0; k <= mod.dim; ++k) {
    out.push_back(bilinear(bx, tv, w));
    tv = mat_vec(mod.T, tv);
  }
  return out;
}

/// Coefficients β(T^{k+1} v, T^k v), k = 0..dim.
inline std::vector<Scalar> psi_series(const FormModule& mod, const Vec& v)
{
  std::vector<Scalar> out;
  Vec tv = v;
  for (int k = 0; k <= mod.dim; ++k) {
    const Vec next = mat_vec(mod.T, tv);
    out.push_back(bilinear(mod.beta, next, tv));
    tv = next;
  }
  return out;
}

}  // namespace nilorb
