/**
 * @file classify.hpp
 * @brief One entry point from a functional to its symbol, pair, labels and
 *        centralizer data, for all three group kinds.
 */
#pragma once

#include "centralizers.hpp"
#include "odd_split.hpp"

#include <optional>
#include <string>

namespace nilorb {

/// Closed field only, or rational labels over the functional's own field.
enum class LabelMode { Closed, Rational };

struct Classification {
  GroupKind kind = GroupKind::Sp;
  int n = 0;
  const Field* field = nullptr;
  bool nilpotent = false;
  std::optional<SympSymbol> symbol;   ///< Sp and OEven
  std::optional<OddSymbol> odd_symbol;
  std::optional<PartitionPair> pair;  ///< Sp and OOdd
  std::optional<CentralizerReport> centralizer;
  std::vector<Eps> eps;               ///< one label per block when rational
  int label_matches = 0;              ///< candidate label sets matched by isometry search

  std::string symbol_text() const
  {
    if (symbol)
      return to_string(*symbol);
    if (odd_symbol)
      return to_string(*odd_symbol);
    return {};
  }
};

namespace detail {

template <class Blocks>
std::vector<Eps> eps_of(const Blocks& blocks)
{
  std::vector<Eps> e;
  for (const auto& b : blocks)
    e.push_back(b.eps);
  return e;
}

}  // namespace detail

inline Classification classify(const DualFunctional& xi, LabelMode mode = LabelMode::Closed)
{
  Classification c;
  c.kind = xi.kind();
  c.n = xi.n();
  c.field = &xi.field();
  c.nilpotent = is_nilpotent_functional(xi);
  if (!c.nilpotent)
    return c;
  const bool rational = mode == LabelMode::Rational;
  switch (xi.kind()) {
  case GroupKind::Sp: {
    const FormModule mod = build_module(xi);
    if (rational) {
      const FqLabel lab = classify_fq(mod);
      c.symbol = lab.symbol;
      c.label_matches = lab.matches;
    } else {
      c.symbol = classify_closed(mod);
    }
    c.pair = symp_symbol_to_pair(c.symbol->closed());
    c.centralizer = centralizer_symp(c.symbol->closed());
    c.eps = detail::eps_of(c.symbol->blocks);
    break;
  }
  case GroupKind::OOdd: {
    if (rational) {
      const OddFqLabel lab = classify_odd_fq(xi);
      c.odd_symbol = lab.symbol;
      c.label_matches = lab.matches;
    } else {
      c.odd_symbol = classify_odd_closed(xi);
    }
    c.pair = oodd_symbol_to_pair(c.odd_symbol->closed());
    c.centralizer = centralizer_oodd(*c.odd_symbol);
    c.eps = detail::eps_of(c.odd_symbol->blocks);
    break;
  }
  case GroupKind::OEven: {
    const FormModule mod = build_module(xi);
    if (rational) {
      const FqLabel lab = classify_orth_fq(mod);
      c.symbol = lab.symbol;
      c.label_matches = lab.matches;
    } else {
      c.symbol = classify_orth(mod);
    }
    c.eps = detail::eps_of(c.symbol->blocks);
    break;
  }
  }
  return c;
}

/// Text key identifying the class: equal keys ⟺ same orbit (rational mode).
inline std::string class_key(const DualFunctional& xi, LabelMode mode)
{
  const Classification c = classify(xi, mode);
  return c.nilpotent ? c.symbol_text() : std::string("non-nilpotent");
}

}  // namespace nilorb
