/**
 * @file serialize.hpp
 * @brief JSON forms of functionals, symbols, pairs, classifications and
 *        oracle orbit reports.
 *
 * Scalars are hex strings and every object carrying scalars names its
 * field by header ("GF(2^e)/modulus-bits").
 */
#pragma once

#include "classify.hpp"
#include "oracle.hpp"

#include <json.hpp>

namespace nilorb {

using json = nlohmann::json;

inline json matrix_to_json(const Mat& m)
{
  json flat = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      flat.push_back(scalar_to_hex(m(i, j)));
  return flat;
}

inline Mat matrix_from_json(const Field& f, int rows, int cols, const json& j)
{
  if (!j.is_array() || j.size() != static_cast<std::size_t>(rows * cols))
    throw std::invalid_argument("matrix JSON must hold " + std::to_string(rows * cols) + " hex entries");
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k)
      m(i, k) = scalar_from_hex(f, j.at(static_cast<std::size_t>(i * cols + k)).get<std::string>());
  return m;
}

/// {kind, n, field, X: row-major hex}
inline json functional_to_json(const DualFunctional& xi)
{
  return {{"kind", kind_name(xi.kind())}, {"n", xi.n()}, {"field", xi.field().header()}, {"X", matrix_to_json(xi.X())}};
}

inline DualFunctional functional_from_json(const json& j)
{
  const GroupKind kind = kind_from_name(j.at("kind").get<std::string>());
  const int n = j.at("n").get<int>();
  const Field& f = field_from_header(j.at("field").get<std::string>());
  const int N = space_dim(kind, n);
  return DualFunctional::from_matrix(lie_algebra(kind, n, f), matrix_from_json(f, N, N, j.at("X")));
}

inline json blocks_to_json(const std::vector<IndecompSymbol>& blocks)
{
  json a = json::array();
  for (const auto& b : blocks)
    a.push_back({{"m", b.m}, {"l", b.l}, {"eps", eps_name(b.eps)}});
  return a;
}

inline Eps eps_from_name(const std::string& e)
{
  for (Eps x : {Eps::Closed, Eps::Zero, Eps::Delta})
    if (eps_name(x) == e)
      return x;
  throw std::invalid_argument("bad eps '" + e + "'");
}

inline std::vector<IndecompSymbol> blocks_from_json(const json& a)
{
  std::vector<IndecompSymbol> out;
  for (const auto& b : a)
    out.push_back({b.at("m").get<int>(), b.at("l").get<int>(), eps_from_name(b.at("eps").get<std::string>())});
  return out;
}

/// {blocks:[{m,l,eps}]}
inline json symbol_to_json(const SympSymbol& s) { return {{"blocks", blocks_to_json(s.blocks)}}; }
inline SympSymbol symbol_from_json(const json& j) { return {blocks_from_json(j.at("blocks"))}; }

/// {m, blocks:[{m,l,eps}]}, blocks are the W summands.
inline json symbol_to_json(const OddSymbol& s) { return {{"m", s.m}, {"blocks", blocks_to_json(s.blocks)}}; }
inline OddSymbol odd_symbol_from_json(const json& j) { return {j.at("m").get<int>(), blocks_from_json(j.at("blocks"))}; }

inline json pair_to_json(const PartitionPair& p) { return {{"nu", p.nu}, {"mu", p.mu}}; }
inline PartitionPair pair_from_json(const json& j)
{
  return {j.at("mu").get<Partition>(), j.at("nu").get<Partition>()};
}

inline json centralizer_to_json(const CentralizerReport& r)
{
  return {{"dim_z", r.dim_z}, {"comp_group_rank", r.comp_group_rank}, {"comp_group_order", 1u << r.comp_group_rank}};
}

inline json eps_to_json(const std::vector<Eps>& eps)
{
  json a = json::array();
  for (Eps e : eps)
    a.push_back(eps_name(e));
  return a;
}

inline json classification_to_json(const Classification& c)
{
  json j = {{"kind", kind_name(c.kind)}, {"n", c.n}, {"field", c.field->header()}, {"nilpotent", c.nilpotent}};
  if (!c.nilpotent)
    return j;
  j["symbol"] = c.symbol_text();
  j["symbol_json"] = c.symbol ? symbol_to_json(*c.symbol) : symbol_to_json(*c.odd_symbol);
  j["eps"] = eps_to_json(c.eps);
  if (c.pair)
    j["pair"] = pair_to_json(*c.pair);
  if (c.centralizer)
    j["centralizer"] = centralizer_to_json(*c.centralizer);
  if (c.odd_symbol)
    j["split"] = {{"m", c.odd_symbol->m}, {"pair", pair_to_json(*c.pair)}, {"eps", j["eps"]}};
  if (c.label_matches)
    j["label_matches"] = c.label_matches;
  return j;
}

/// One JSON line per oracle orbit.
inline json orbit_report_to_json(const NilpotentOrbitData& d, const OrbitReport& r)
{
  json j = {{"representative", functional_to_json(functional_from_word(*d.algebra, r.representative))},
            {"orbit_size", r.orbit_size},
            {"stabilizer_order", r.stabilizer_order},
            {"symbol", r.classification.symbol_text()},
            {"eps", eps_to_json(r.classification.eps)}};
  if (r.classification.pair)
    j["pair"] = pair_to_json(*r.classification.pair);
  return j;
}

}  // namespace nilorb
