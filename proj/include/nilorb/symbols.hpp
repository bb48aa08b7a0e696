/**
 * @file symbols.hpp
 * @brief Discrete classification data: indecomposable blocks W_l^ε(m),
 *        symplectic symbols (m_i)^2_{l_i}, and odd-orthogonal symbols
 *        V_{2m+1} ⊕ W_{l_1}(k_1) ⊕ ⋯.
 *
 * Text syntax
 *   symplectic: "(2)^2_1:0 (1)^2_0"    (":0" / ":d" only over F_q)
 *   odd:        "[1] (2)_1:d (1)_1"
 */
#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

/// Rational label of a block: none (closed field), W^0 or W^δ.
enum class Eps { Closed, Zero, Delta };

inline std::string eps_suffix(Eps e)
{
  switch (e) {
  case Eps::Closed:
    return "";
  case Eps::Zero:
    return ":0";
  case Eps::Delta:
    return ":d";
  }
  return "";
}

inline std::string eps_name(Eps e)
{
  switch (e) {
  case Eps::Closed:
    return "closed";
  case Eps::Zero:
    return "0";
  case Eps::Delta:
    return "delta";
  }
  return "?";
}

struct IndecompSymbol {
  int m = 0;  ///< Jordan block size (each block occurs twice)
  int l = 0;  ///< index value χ(m)
  Eps eps = Eps::Closed;

  friend bool operator==(const IndecompSymbol&, const IndecompSymbol&) = default;
  friend auto operator<=>(const IndecompSymbol&, const IndecompSymbol&) = default;
};

struct SympSymbol {
  std::vector<IndecompSymbol> blocks;

  int rank() const
  {
    int n = 0;
    for (const auto& b : blocks)
      n += b.m;
    return n;
  }

  /// Same symbol with every label dropped.
  SympSymbol closed() const
  {
    SympSymbol s = *this;
    for (auto& b : s.blocks)
      b.eps = Eps::Closed;
    return s;
  }

  friend bool operator==(const SympSymbol&, const SympSymbol&) = default;
  friend auto operator<=>(const SympSymbol&, const SympSymbol&) = default;
};

/// V_{2m+1} ⊕ W with W = ⊕ W_{l_i}^{ε_i}(k_i); here blocks[i].m holds k_i.
struct OddSymbol {
  int m = 0;
  std::vector<IndecompSymbol> blocks;

  int rank() const
  {
    int n = m;
    for (const auto& b : blocks)
      n += b.m;
    return n;
  }

  OddSymbol closed() const
  {
    OddSymbol s = *this;
    for (auto& b : s.blocks)
      b.eps = Eps::Closed;
    return s;
  }

  friend bool operator==(const OddSymbol&, const OddSymbol&) = default;
  friend auto operator<=>(const OddSymbol&, const OddSymbol&) = default;
};

// --- validity --------------------------------------------------------------------

/// Split position of a symplectic symbol: l_i + l_{i+1} < m_i and 2 l_i > m_i − 1.
inline bool symp_split_position(const SympSymbol& s, std::size_t i)
{
  const auto& b = s.blocks[i];
  const int next_l = i + 1 < s.blocks.size() ? s.blocks[i + 1].l : 0;
  return b.l + next_l < b.m && 2 * b.l > b.m - 1;
}

/// Empty string when valid, otherwise the reason.
inline std::string symp_symbol_problem(const SympSymbol& s)
{
  if (s.blocks.empty())
    return "symbol has no blocks";
  const bool labelled = s.blocks.front().eps != Eps::Closed;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    const auto& b = s.blocks[i];
    if (b.m < 1)
      return "block size must be positive";
    if (b.l < b.m / 2 || b.l > b.m)
      return "need floor(m/2) <= l <= m in block " + std::to_string(i + 1);
    if ((b.eps != Eps::Closed) != labelled)
      return "labels must be given on every block or on none";
    if (b.eps == Eps::Delta && !symp_split_position(s, i))
      return "label d is only allowed where the class splits (block " + std::to_string(i + 1) + ")";
    if (i > 0) {
      const auto& a = s.blocks[i - 1];
      if (a.m < b.m || a.l < b.l || a.m - a.l < b.m - b.l)
        return "need m_i >= m_{i+1}, l_i >= l_{i+1}, m_i - l_i >= m_{i+1} - l_{i+1}";
    }
  }
  return "";
}

inline bool symp_symbol_valid(const SympSymbol& s) { return symp_symbol_problem(s).empty(); }

/// Split position of an odd symbol (0-based: block i carries index i+1): ν_i < μ_i ≤ ν_{i−1}.
inline bool odd_split_position(const OddSymbol& s, std::size_t i)
{
  const auto& b = s.blocks[i];
  const int prev_nu = i == 0 ? s.m : s.blocks[i - 1].m - s.blocks[i - 1].l;
  return b.m - b.l < b.l && b.l <= prev_nu;
}

inline std::string odd_symbol_problem(const OddSymbol& s)
{
  if (s.m < 0)
    return "chain length must be >= 0";
  if (s.rank() < 1)
    return "rank must be >= 1";
  const bool labelled = !s.blocks.empty() && s.blocks.front().eps != Eps::Closed;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    const auto& b = s.blocks[i];
    if (b.m < 1)
      return "block size must be positive";
    if (b.l < (b.m + 1) / 2 || b.l > b.m)
      return "need floor((k+1)/2) <= l <= k in block " + std::to_string(i + 1);
    if ((b.eps != Eps::Closed) != labelled)
      return "labels must be given on every block or on none";
    if (b.eps == Eps::Delta && !odd_split_position(s, i))
      return "label d is only allowed where the class splits (block " + std::to_string(i + 1) + ")";
    const int prev_k = i == 0 ? -1 : s.blocks[i - 1].m;
    const int prev_l = i == 0 ? -1 : s.blocks[i - 1].l;
    const int prev_nu = i == 0 ? s.m : prev_k - prev_l;
    if (b.m - b.l > prev_nu)
      return "need nu_{i-1} >= nu_i (block " + std::to_string(i + 1) + ")";
    if (i > 0 && (prev_k < b.m || prev_l < b.l))
      return "need k_i >= k_{i+1} and l_i >= l_{i+1}";
  }
  return "";
}

inline bool odd_symbol_valid(const OddSymbol& s) { return odd_symbol_problem(s).empty(); }

// --- text ------------------------------------------------------------------------

inline std::string to_string(const SympSymbol& s)
{
  std::string out;
  for (const auto& b : s.blocks) {
    if (!out.empty())
      out += ' ';
    out += "(" + std::to_string(b.m) + ")^2_" + std::to_string(b.l) + eps_suffix(b.eps);
  }
  return out;
}

inline std::string to_string(const OddSymbol& s)
{
  std::string out = "[" + std::to_string(s.m) + "]";
  for (const auto& b : s.blocks)
    out += " (" + std::to_string(b.m) + ")_" + std::to_string(b.l) + eps_suffix(b.eps);
  return out;
}

namespace detail {

class SymbolLexer {
public:
  explicit SymbolLexer(const std::string& text)
    : t_(text) {}

  void skip_ws()
  {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_])))
      ++p_;
  }
  bool done()
  {
    skip_ws();
    return p_ >= t_.size();
  }
  bool peek(char c)
  {
    skip_ws();
    return p_ < t_.size() && t_[p_] == c;
  }
  void expect(const std::string& lit)
  {
    skip_ws();
    if (t_.compare(p_, lit.size(), lit) != 0)
      fail("expected '" + lit + "'");
    p_ += lit.size();
  }
  int integer()
  {
    skip_ws();
    const std::size_t start = p_;
    while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_])))
      ++p_;
    if (start == p_ || p_ - start > 4)
      fail("expected a small non-negative integer");
    return std::stoi(t_.substr(start, p_ - start));
  }
  Eps eps()
  {
    if (p_ < t_.size() && t_[p_] == ':') {
      ++p_;
      if (p_ < t_.size() && t_[p_] == '0') {
        ++p_;
        return Eps::Zero;
      }
      if (p_ < t_.size() && (t_[p_] == 'd' || t_[p_] == 'D')) {
        ++p_;
        return Eps::Delta;
      }
      fail("label must be ':0' or ':d'");
    }
    return Eps::Closed;
  }
  [[noreturn]] void fail(const std::string& what) const
  {
    throw std::invalid_argument("bad symbol '" + t_ + "' at offset " + std::to_string(p_) + ": " + what);
  }

private:
  const std::string& t_;
  std::size_t p_ = 0;
};

}  // namespace detail

/// Parses and validates a symplectic symbol.
inline SympSymbol parse_symp_symbol(const std::string& text)
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
  if (const auto why = symp_symbol_problem(s); !why.empty())
    throw std::invalid_argument("invalid symbol '" + text + "': " + why);
  return s;
}

inline OddSymbol parse_odd_symbol(const std::string& text)
{
  detail::SymbolLexer lx(text);
  OddSymbol s;
  lx.expect("[");
  s.m = lx.integer();
  lx.expect("]");
  while (!lx.done()) {
    lx.expect("(");
    IndecompSymbol b;
    b.m = lx.integer();
    lx.expect(")_");
    b.l = lx.integer();
    b.eps = lx.eps();
    s.blocks.push_back(b);
  }
  if (const auto why = odd_symbol_problem(s); !why.empty())
    throw std::invalid_argument("invalid symbol '" + text + "': " + why);
  return s;
}

}  // namespace nilorb
