/**
 * @file centralizers.hpp
 * @brief Centralizer dimensions, component-group ranks and group orders.
 */
#pragma once

#include "classical.hpp"
#include "combinatorics.hpp"
#include "odd_split.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace nilorb {

struct CentralizerReport {
  int dim_z = 0;
  int comp_group_rank = 0;  ///< component group (Z/2)^rank

  /// Leading term 2^rank q^dim_z of |Z(V)(F_q)|.
  double predicted_point_count_leading(unsigned q) const
  {
    double v = static_cast<double>(1u << comp_group_rank);
    for (int i = 0; i < dim_z; ++i)
      v *= q;
    return v;
  }
};

/// Σ_i ((4i − 1) m_i − 2 l_i), blocks numbered from 1.
inline int dim_z_symp(const SympSymbol& s)
{
  int d = 0;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    d += (4 * k - 1) * s.blocks[i].m - 2 * s.blocks[i].l;
  }
  return d;
}

inline int comp_rank_symp(const SympSymbol& s)
{
  int r = 0;
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    r += symp_split_position(s, i);
  return r;
}

/// ν_0 + Σ_{i≥1} ν_i (4i + 1) + Σ_{i≥1} μ_i (4i − 1), with nu[0] = ν_0.
inline int dim_z_oodd(const PartitionPair& p)
{
  int d = part_at(p.nu, 1);
  for (int i = 1; i < static_cast<int>(p.nu.size()); ++i)
    d += p.nu[static_cast<std::size_t>(i)] * (4 * i + 1);
  for (int i = 1; i <= static_cast<int>(p.mu.size()); ++i)
    d += p.mu[static_cast<std::size_t>(i - 1)] * (4 * i - 1);
  return d;
}

inline int comp_rank_oodd(const PartitionPair& p) { return oodd_split_k(p); }

inline CentralizerReport centralizer_symp(const SympSymbol& s) { return {dim_z_symp(s), comp_rank_symp(s)}; }

inline CentralizerReport centralizer_oodd(const OddSymbol& s)
{
  const PartitionPair p = oodd_symbol_to_pair(s.closed());
  return {dim_z_oodd(p), comp_rank_oodd(p)};
}

// --- group orders ---------------------------------------------------------------

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
  if (a && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("group order overflows 64 bits");
  return a * b;
}

inline std::uint64_t ipow(std::uint64_t q, int e)
{
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i)
    r = checked_mul(r, q);
  return r;
}

}  // namespace detail

/**
 * |Sp(2n, q)| = |O(2n+1, q)| = q^{n²} Π_{i≤n} (q^{2i} − 1);
 * |O⁺(2n, q)| = 2 q^{n(n−1)} (q^n − 1) Π_{i<n} (q^{2i} − 1).
 */
inline std::uint64_t group_order(GroupKind kind, int n, unsigned q)
{
  using detail::checked_mul;
  using detail::ipow;
  if (kind == GroupKind::OEven) {
    std::uint64_t r = checked_mul(2, checked_mul(ipow(q, n * (n - 1)), ipow(q, n) - 1));
    for (int i = 1; i < n; ++i)
      r = checked_mul(r, ipow(q, 2 * i) - 1);
    return r;
  }
  std::uint64_t r = ipow(q, n * n);
  for (int i = 1; i <= n; ++i)
    r = checked_mul(r, ipow(q, 2 * i) - 1);
  return r;
}

// --- pure chains ------------------------------------------------------------------

/// |Z(V_{2m+1})(F_q)|: maps preserving α and β_ξ, counted by search.
inline std::uint64_t chain_centralizer_count(int m, const Field& field)
{
  const OddNormalForm nf = build_odd_normal_form(OddSymbol{m, {}}, field);
  return automorphism_count(odd_form_data(nf));
}

/// |C(V_{2m+1})(F_q)|: maps preserving β and β_ξ.
inline std::uint64_t chain_bilinear_centralizer_count(int m, const Field& field)
{
  const OddNormalForm nf = build_odd_normal_form(OddSymbol{m, {}}, field);
  const FormData d{&field, nf.quad.rows(), {polar(nf.quad), nf.beta_xi}, {}, std::nullopt};
  return automorphism_count(d);
}

}  // namespace nilorb
