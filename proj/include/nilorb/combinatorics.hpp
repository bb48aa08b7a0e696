/**
 * @file combinatorics.hpp
 * @brief Partitions, bipartitions, p₂(n), symbol ↔ pair maps, the 2^k
 *        rational splitting maps and Weyl-group irreducible counts.
 *
 * Partitions are stored without zero parts.  The odd-orthogonal pair keeps
 * its ν₀ slot explicitly as nu[0], even when it is zero.
 */
#pragma once

#include "symbols.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

using Partition = std::vector<int>;

inline Partition strip_zeros(Partition p)
{
  while (!p.empty() && p.back() == 0)
    p.pop_back();
  return p;
}

inline int part_sum(const Partition& p)
{
  int s = 0;
  for (int x : p)
    s += x;
  return s;
}

inline bool is_partition(const Partition& p)
{
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0 || (i > 0 && p[i] > p[i - 1]))
      return false;
  return true;
}

/// 1-based padded access: p_i, zero past the end.
inline int part_at(const Partition& p, int i)
{
  return i >= 1 && i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i - 1)] : 0;
}

/// All partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions(int n)
{
  std::vector<Partition> out;
  if (n < 0)
    return out;
  Partition cur;
  auto rec = [&](auto& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline std::uint64_t partition_count(int n)
{
  if (n < 0)
    return 0;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s)
      p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(n)];
}

/// Number of ordered pairs of partitions of total size n.
inline std::uint64_t p2(int n)
{
  if (n < 0)
    return 0;
  std::uint64_t s = 0;
  for (int a = 0; a <= n; ++a)
    s += partition_count(a) * partition_count(n - a);
  return s;
}

struct PartitionPair {
  Partition mu;
  Partition nu;

  /// Zero parts stripped (ν₀ is dropped too when it is zero).
  PartitionPair canonical() const { return {strip_zeros(mu), strip_zeros(nu)}; }

  friend bool operator==(const PartitionPair& a, const PartitionPair& b)
  {
    return strip_zeros(a.mu) == strip_zeros(b.mu) && strip_zeros(a.nu) == strip_zeros(b.nu);
  }
  friend bool operator<(const PartitionPair& a, const PartitionPair& b)
  {
    const auto x = a.canonical(), y = b.canonical();
    return std::tie(x.nu, x.mu) < std::tie(y.nu, y.mu);
  }
};

inline std::string partition_to_string(const Partition& p)
{
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

/// "nu=[...]; mu=[...]".
inline std::string to_string(const PartitionPair& p)
{
  return "nu=" + partition_to_string(p.nu) + "; mu=" + partition_to_string(p.mu);
}

/// Inverse of to_string: "nu=[a,b,...]; mu=[c,...]" (whitespace ignored, zero parts kept).
inline PartitionPair parse_pair(const std::string& text)
{
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t += c;
  auto list = [&](const std::string& key, std::size_t& pos) {
    if (t.compare(pos, key.size() + 2, key + "=[") != 0)
      throw std::invalid_argument("pair '" + text + "': expected " + key + "=[...]");
    pos += key.size() + 2;
    Partition p;
    while (pos < t.size() && t[pos] != ']') {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t.substr(pos), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("pair '" + text + "': bad part");
      }
      if (v < 0)
        throw std::invalid_argument("pair '" + text + "': negative part");
      p.push_back(v);
      pos += used;
      if (pos < t.size() && t[pos] == ',')
        ++pos;
    }
    if (pos >= t.size())
      throw std::invalid_argument("pair '" + text + "': missing ']'");
    ++pos;
    return p;
  };
  std::size_t pos = 0;
  PartitionPair p;
  p.nu = list("nu", pos);
  if (pos >= t.size() || t[pos] != ';')
    throw std::invalid_argument("pair '" + text + "': expected ';' after nu");
  ++pos;
  p.mu = list("mu", pos);
  if (pos != t.size())
    throw std::invalid_argument("pair '" + text + "': trailing characters");
  return p;
}

/// All ordered pairs (μ, ν) with |μ| + |ν| = n.
inline std::vector<PartitionPair> all_bipartitions(int n)
{
  std::vector<PartitionPair> out;
  for (int a = 0; a <= n; ++a)
    for (const auto& mu : partitions(a))
      for (const auto& nu : partitions(n - a))
        out.push_back({mu, nu});
  return out;
}

// --- symplectic ---------------------------------------------------------------------

/// Δ membership: ν_i ≤ μ_i + 1 for all i.
inline bool symp_in_delta(const PartitionPair& p)
{
  if (!is_partition(p.mu) || !is_partition(p.nu))
    return false;
  const int s = static_cast<int>(std::max(p.mu.size(), p.nu.size()));
  for (int i = 1; i <= s; ++i)
    if (part_at(p.nu, i) > part_at(p.mu, i) + 1)
      return false;
  return true;
}

/// μ = (l_i), ν = (m_i − l_i).
inline PartitionPair symp_symbol_to_pair(const SympSymbol& s)
{
  PartitionPair p;
  for (const auto& b : s.blocks) {
    p.mu.push_back(b.l);
    p.nu.push_back(b.m - b.l);
  }
  return p.canonical();
}

inline SympSymbol symp_pair_to_symbol(const PartitionPair& p)
{
  SympSymbol s;
  const int len = static_cast<int>(std::max(p.mu.size(), p.nu.size()));
  for (int i = 1; i <= len; ++i) {
    const int mu = part_at(p.mu, i), nu = part_at(p.nu, i);
    if (mu + nu > 0)
      s.blocks.push_back({mu + nu, mu, Eps::Closed});
  }
  return s;
}

/// Closed-field symbols of rank n, in pair order.
inline std::vector<SympSymbol> symp_enumerate_closed(int n)
{
  std::vector<SympSymbol> out;
  for (const auto& p : all_bipartitions(n))
    if (symp_in_delta(p))
      out.push_back(symp_pair_to_symbol(p));
  return out;
}

/// The 0-based indices i (block i+1) with μ_{i+2}+1 ≤ ν_{i+1} < μ_{i+1}+1.
inline std::vector<int> symp_split_positions(const PartitionPair& p)
{
  std::vector<int> r;
  const int s = static_cast<int>(std::max(p.mu.size(), p.nu.size()));
  for (int i = 1; i <= s; ++i)
    if (part_at(p.mu, i + 1) + 1 <= part_at(p.nu, i) && part_at(p.nu, i) < part_at(p.mu, i) + 1)
      r.push_back(i - 1);
  return r;
}

inline int symp_split_k(const PartitionPair& p)
{
  if (!symp_in_delta(p))
    throw std::invalid_argument("pair " + to_string(p) + " is not in the symplectic constraint set");
  return static_cast<int>(symp_split_positions(p).size());
}

/// The 2^k pairs attached to p; index bit i selects the swapped variant of segment i.
inline std::vector<PartitionPair> symp_fq_fanout(const PartitionPair& p)
{
  const int k = symp_split_k(p);
  const auto r = symp_split_positions(p);  // 0-based r_i − 1
  const int s = static_cast<int>(std::max(p.mu.size(), p.nu.size()));
  std::vector<PartitionPair> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    PartitionPair q;
    int start = 1;
    for (int seg = 0; seg < k; ++seg) {
      const int end = r[static_cast<std::size_t>(seg)] + 1;
      const bool swap = (mask >> seg) & 1u;
      for (int j = start; j <= end; ++j) {
        if (swap) {
          q.mu.push_back(part_at(p.nu, j) - 1);
          q.nu.push_back(part_at(p.mu, j) + 1);
        } else {
          q.mu.push_back(part_at(p.mu, j));
          q.nu.push_back(part_at(p.nu, j));
        }
      }
      start = end + 1;
    }
    for (int j = start; j <= s; ++j) {
      q.mu.push_back(part_at(p.mu, j));
      q.nu.push_back(part_at(p.nu, j));
    }
    out.push_back(q.canonical());
  }
  return out;
}

// --- odd orthogonal -----------------------------------------------------------------

/// Δ membership: ν = (ν₀ ≥ ν₁ ≥ …), μ a partition, ν_i ≤ μ_i for i ≥ 1.
inline bool oodd_in_delta(const PartitionPair& p)
{
  if (p.nu.empty() || !is_partition(p.nu) || !is_partition(p.mu))
    return false;
  for (std::size_t i = 1; i < p.nu.size(); ++i)
    if (p.nu[i] > part_at(p.mu, static_cast<int>(i)))
      return false;
  return true;
}

/// ν₀ = m, ν_i = k_i − l_i, μ_i = l_i.
inline PartitionPair oodd_symbol_to_pair(const OddSymbol& s)
{
  PartitionPair p;
  p.nu.push_back(s.m);
  for (const auto& b : s.blocks) {
    p.nu.push_back(b.m - b.l);
    p.mu.push_back(b.l);
  }
  // keep ν₀ even when zero
  Partition tail(p.nu.begin() + 1, p.nu.end());
  tail = strip_zeros(tail);
  p.nu.resize(1);
  p.nu.insert(p.nu.end(), tail.begin(), tail.end());
  p.mu = strip_zeros(p.mu);
  return p;
}

inline OddSymbol oodd_pair_to_symbol(const PartitionPair& p)
{
  OddSymbol s;
  s.m = p.nu.empty() ? 0 : p.nu[0];
  for (int i = 1; i <= static_cast<int>(p.mu.size()); ++i) {
    const int mu = part_at(p.mu, i), nu = i < static_cast<int>(p.nu.size()) ? p.nu[static_cast<std::size_t>(i)] : 0;
    s.blocks.push_back({mu + nu, mu, Eps::Closed});
  }
  return s;
}

inline std::vector<PartitionPair> oodd_enumerate(int n)
{
  std::vector<PartitionPair> out;
  for (int nu0 = n; nu0 >= 0; --nu0)
    for (int a = 0; a <= n - nu0; ++a)
      for (const auto& mu : partitions(a))
        for (const auto& rest : partitions(n - nu0 - a)) {
          PartitionPair p;
          p.mu = mu;
          p.nu.push_back(nu0);
          p.nu.insert(p.nu.end(), rest.begin(), rest.end());
          if (oodd_in_delta(p))
            out.push_back(p);
        }
  return out;
}

inline std::vector<OddSymbol> oodd_enumerate_closed(int n)
{
  std::vector<OddSymbol> out;
  for (const auto& p : oodd_enumerate(n))
    out.push_back(oodd_pair_to_symbol(p));
  return out;
}

/// 1-based indices i ≥ 1 with ν_i < μ_i ≤ ν_{i−1}.
inline std::vector<int> oodd_split_positions(const PartitionPair& p)
{
  std::vector<int> r;
  auto nu_at = [&](int i) { return i < static_cast<int>(p.nu.size()) ? p.nu[static_cast<std::size_t>(i)] : 0; };
  for (int i = 1; i <= static_cast<int>(p.mu.size()); ++i)
    if (nu_at(i) < part_at(p.mu, i) && part_at(p.mu, i) <= nu_at(i - 1))
      r.push_back(i);
  return r;
}

inline int oodd_split_k(const PartitionPair& p)
{
  if (!oodd_in_delta(p))
    throw std::invalid_argument("pair " + to_string(p) + " is not in the odd-orthogonal constraint set");
  return static_cast<int>(oodd_split_positions(p).size());
}

/// The 2^k pairs attached to p, as plain bipartitions (ν₀ becomes the first part of ν).
inline std::vector<PartitionPair> oodd_fq_fanout(const PartitionPair& p)
{
  const int k = oodd_split_k(p);
  const auto r = oodd_split_positions(p);
  const int s = static_cast<int>(std::max(p.mu.size(), p.nu.size() - 1));
  auto nu_at = [&](int i) { return i < static_cast<int>(p.nu.size()) ? p.nu[static_cast<std::size_t>(i)] : 0; };
  std::vector<PartitionPair> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    PartitionPair q;
    const int first = k ? r[0] : s + 1;
    for (int j = 0; j < first; ++j)
      q.nu.push_back(nu_at(j));
    for (int j = 1; j < first; ++j)
      q.mu.push_back(part_at(p.mu, j));
    for (int seg = 0; seg < k; ++seg) {
      const int lo = r[static_cast<std::size_t>(seg)];
      const int hi = seg + 1 < k ? r[static_cast<std::size_t>(seg + 1)] - 1 : s;
      const bool swap = (mask >> seg) & 1u;
      for (int j = lo; j <= hi; ++j) {
        q.nu.push_back(swap ? part_at(p.mu, j) : nu_at(j));
        q.mu.push_back(swap ? nu_at(j) : part_at(p.mu, j));
      }
    }
    out.push_back(q.canonical());
  }
  return out;
}

// --- Weyl groups -------------------------------------------------------------------

enum class WeylType { B, C, D };

/// Number of irreducible characters of W(B_n), W(C_n) or W(D_n).
inline std::uint64_t weyl_irrep_count(WeylType t, int n)
{
  if (n < 1)
    throw std::invalid_argument("Weyl group rank must be >= 1");
  if (t != WeylType::D)
    return p2(n);
  // Unordered pairs {α, β}; a pair with α = β contributes two characters.
  const std::uint64_t ordered = p2(n);
  const std::uint64_t equal = n % 2 == 0 ? partition_count(n / 2) : 0;
  return (ordered - equal) / 2 + 2 * equal;
}

}  // namespace nilorb
