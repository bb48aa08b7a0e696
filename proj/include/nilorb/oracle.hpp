/**
 * @file oracle.hpp
 * @brief Brute-force ground truth: the finite groups G(F_q), their coadjoint
 *        orbits on g*, and the nilpotent orbits by definition (orbits meeting n').
 *
 * Functionals are packed into integers: coordinate k of the dual basis
 * occupies bits [k·e, (k+1)·e) for q = 2^e.  Addition is XOR, so every
 * group element acts by a GF(2)-linear map on the packed word, applied
 * through per-byte lookup tables.
 */
#pragma once

#include "centralizers.hpp"
#include "classical.hpp"
#include "classify.hpp"
#include "isometry.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace nilorb {

enum class GroupMode { Auto, Filter, Generators };

struct FiniteGroup {
  GroupKind kind = GroupKind::Sp;
  int n = 0;
  const Field* field = nullptr;
  bool complete = false;      ///< `elements` is the whole group
  std::vector<Mat> elements;  ///< all elements, or a generating set
  std::uint64_t order = 0;
};

/// Maximum worker threads; ORBITS_THREADS caps it.
inline unsigned oracle_threads()
{
  unsigned t = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ORBITS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1)
      t = std::min<unsigned>(t, static_cast<unsigned>(v));
  }
  return t;
}

/// The forms defining G, as isometry-search data.
inline FormData defining_forms(const SpaceData& sp)
{
  FormData d{sp.field, sp.dim, {}, {}, std::nullopt};
  if (sp.kind == GroupKind::Sp)
    d.bilinear.push_back(sp.S);
  else
    d.quadratic.push_back(sp.B);
  return d;
}

/// Transvections x ↦ x + β(x,v)v (Sp) or reflections x ↦ x + α(v)⁻¹β(x,v)v (orthogonal).
inline std::vector<Mat> transvection_generators(const SpaceData& sp)
{
  const Field& f = *sp.field;
  const int N = sp.dim;
  const Mat pol = sp.kind == GroupKind::Sp ? sp.S : polar(sp.B);
  std::vector<Mat> gens;
  const std::uint64_t total = detail::ipow(f.order(), N);
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec v(static_cast<std::size_t>(N));
    std::uint64_t c = code;
    for (int i = 0; i < N; ++i, c /= f.order())
      v[static_cast<std::size_t>(i)] = static_cast<Scalar>(c % f.order());
    Scalar coef = 1;
    if (sp.kind != GroupKind::Sp) {
      // One representative per line: leading nonzero entry 1.
      const auto lead = std::find_if(v.begin(), v.end(), [](Scalar x) { return x != 0; });
      if (*lead != 1)
        continue;
      const Scalar a = quad_eval(sp.B, v);
      if (!a)
        continue;
      coef = f.inv(a);
    }
    const Vec pv = mat_vec(pol, v);
    Mat t = Mat::identity(f, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        t(i, j) ^= f.mul(coef, f.mul(v[static_cast<std::size_t>(i)], pv[static_cast<std::size_t>(j)]));
    gens.push_back(std::move(t));
  }
  return gens;
}

/**
 * G(F_q).  Filter mode lists every form-preserving matrix (pruned search
 * over basis images), allowed when q^{N²} ≤ 2^30; generator mode keeps
 * transvections/reflections and takes |G| from the order formula.
 */
inline FiniteGroup enumerate_group(GroupKind kind, int n, const Field& field, GroupMode mode = GroupMode::Auto)
{
  const SpaceData sp = make_space(kind, n, field);
  const double log2_count = static_cast<double>(sp.dim * sp.dim * field.degree());
  if (mode == GroupMode::Auto)
    mode = log2_count <= 30 ? GroupMode::Filter : GroupMode::Generators;
  FiniteGroup g{kind, n, &field, false, {}, 0};
  if (mode == GroupMode::Filter) {
    if (log2_count > 30)
      throw SizeLimitError("enumerate_group: filter mode needs at most 2^30 matrices");
    const FormData d = defining_forms(sp);
    IsometrySearch search(d, d);
    search.for_each([&](const Mat& m) {
      g.elements.push_back(m);
      return true;
    });
    g.complete = true;
    g.order = g.elements.size();
  } else {
    g.elements = transvection_generators(sp);
    g.order = group_order(kind, n, field.order());
  }
  return g;
}

// --- packed linear actions -------------------------------------------------------

inline std::uint64_t pack_coords(const Field& f, const Vec& c)
{
  std::uint64_t w = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    w |= static_cast<std::uint64_t>(c[k]) << (k * static_cast<std::size_t>(f.degree()));
  return w;
}

inline Vec unpack_coords(const Field& f, int dim, std::uint64_t w)
{
  const int e = f.degree();
  const std::uint64_t mask = (std::uint64_t{1} << e) - 1;
  Vec c(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k)
    c[static_cast<std::size_t>(k)] = static_cast<Scalar>((w >> (k * e)) & mask);
  return c;
}

/// A family of F_q-linear maps on packed coordinate words.
class PackedAction {
public:
  PackedAction(const Field& f, int dim, const std::vector<Mat>& maps)
    : f_(&f), dim_(dim), bits_(dim * f.degree()), chunks_((bits_ + 7) / 8)
  {
    if (bits_ > 40)
      throw SizeLimitError("packed action: coordinate space too large");
    tables_.resize(maps.size() * static_cast<std::size_t>(chunks_) * 256);
    for (std::size_t g = 0; g < maps.size(); ++g) {
      // Image of each single bit, then all byte patterns by XOR.
      std::vector<std::uint64_t> bit_image(static_cast<std::size_t>(bits_));
      for (int b = 0; b < bits_; ++b)
        bit_image[static_cast<std::size_t>(b)] =
            pack_coords(f, mat_vec(maps[g], unpack_coords(f, dim, std::uint64_t{1} << b)));
      for (int ch = 0; ch < chunks_; ++ch) {
        std::uint64_t* t = &tables_[(g * static_cast<std::size_t>(chunks_) + static_cast<std::size_t>(ch)) * 256];
        for (unsigned byte = 1; byte < 256; ++byte) {
          const int low = __builtin_ctz(byte);
          const int bit = ch * 8 + low;
          const std::uint64_t img = bit < bits_ ? bit_image[static_cast<std::size_t>(bit)] : 0;
          t[byte] = t[byte & (byte - 1)] ^ img;
        }
      }
    }
    count_ = maps.size();
  }

  std::size_t size() const { return count_; }
  int bits() const { return bits_; }

  std::uint64_t apply(std::size_t g, std::uint64_t w) const
  {
    const std::uint64_t* t = &tables_[g * static_cast<std::size_t>(chunks_) * 256];
    std::uint64_t r = 0;
    for (int ch = 0; ch < chunks_; ++ch, w >>= 8, t += 256)
      r ^= t[w & 0xff];
    return r;
  }

private:
  const Field* f_;
  int dim_, bits_, chunks_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> tables_;
};

/// Matrix of ξ ↦ g·ξ on dual coordinates.
inline Mat coadjoint_matrix(const LieAlgebra& g, const Mat& h)
{
  const Mat hi = *inverse(h);
  std::vector<Vec> cols;
  for (int k = 0; k < g.dim(); ++k)
    cols.push_back(g.dual_coords(h * g.dual_matrix(unit_vec(g.dim(), k)) * hi));
  return Mat::from_columns(g.field(), g.dim(), cols);
}

/// Matrix of x ↦ h x h⁻¹ on Lie-algebra coordinates.
inline Mat adjoint_matrix(const LieAlgebra& g, const Mat& h)
{
  const Mat hi = *inverse(h);
  std::vector<Vec> cols;
  for (int k = 0; k < g.dim(); ++k)
    cols.push_back(g.coords_of_element(h * g.basis()[static_cast<std::size_t>(k)] * hi));
  return Mat::from_columns(g.field(), g.dim(), cols);
}

// --- orbits -----------------------------------------------------------------------

struct Orbit {
  std::uint64_t rep = 0;  ///< smallest packed member
  std::vector<std::uint64_t> members;
  std::uint64_t size() const { return members.size(); }
};

/// Visited set over all packed words.
class PackedSet {
public:
  explicit PackedSet(int bits)
    : words_((std::size_t{1} << bits) / 64 + 1, 0) {}
  bool contains(std::uint64_t w) const { return (words_[w >> 6] >> (w & 63)) & 1u; }
  bool insert(std::uint64_t w)
  {
    const std::uint64_t m = std::uint64_t{1} << (w & 63);
    if (words_[w >> 6] & m)
      return false;
    words_[w >> 6] |= m;
    return true;
  }

private:
  std::vector<std::uint64_t> words_;
};

/// Orbit of `start` under the maps; newly reached words are inserted into `seen`.
inline Orbit orbit_bfs(const PackedAction& act, std::uint64_t start, PackedSet& seen, unsigned threads = 1)
{
  Orbit o;
  seen.insert(start);
  std::vector<std::uint64_t> frontier{start};
  while (!frontier.empty()) {
    o.members.insert(o.members.end(), frontier.begin(), frontier.end());
    std::vector<std::uint64_t> images;
    if (threads <= 1 || frontier.size() < 4096) {
      images.reserve(frontier.size() * act.size());
      for (std::uint64_t w : frontier)
        for (std::size_t g = 0; g < act.size(); ++g)
          images.push_back(act.apply(g, w));
    } else {
      std::vector<std::vector<std::uint64_t>> part(threads);
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          const std::size_t lo = t * chunk, hi = std::min(frontier.size(), lo + chunk);
          for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t g = 0; g < act.size(); ++g)
              part[t].push_back(act.apply(g, frontier[i]));
        });
      for (auto& th : pool)
        th.join();
      for (auto& p : part)
        images.insert(images.end(), p.begin(), p.end());
    }
    frontier.clear();
    for (std::uint64_t w : images)
      if (seen.insert(w))
        frontier.push_back(w);
  }
  std::sort(o.members.begin(), o.members.end());
  o.rep = o.members.front();
  return o;
}

/// Packed words of all functionals vanishing on the Borel subalgebra.
inline std::vector<std::uint64_t> n_prime_words(const LieAlgebra& g)
{
  const Field& f = g.field();
  // Rows: ξ ↦ ξ(b) for b in the Borel basis, linear in the dual coordinates.
  std::vector<Vec> rows;
  for (const auto& b : g.borel_basis()) {
    Vec r(static_cast<std::size_t>(g.dim()));
    for (int k = 0; k < g.dim(); ++k)
      r[static_cast<std::size_t>(k)] = trace(g.dual_matrix(unit_vec(g.dim(), k)) * b);
    rows.push_back(r);
  }
  const auto basis = rows.empty() ? std::vector<Vec>{} : kernel_basis(Mat::from_rows(f, rows));
  std::vector<std::uint64_t> packed;
  for (const auto& v : basis)
    packed.push_back(pack_coords(f, v));
  // All F_q-combinations; scalar multiples via the field.
  std::vector<std::uint64_t> out{0};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::size_t cur = out.size();
    for (unsigned c = 1; c < f.order(); ++c) {
      const std::uint64_t w = pack_coords(f, vec_scale(f, static_cast<Scalar>(c), basis[i]));
      for (std::size_t j = 0; j < cur; ++j)
        out.push_back(out[j] ^ w);
    }
  }
  return out;
}

struct NilpotentOrbitData {
  const LieAlgebra* algebra = nullptr;
  FiniteGroup group;
  std::vector<Orbit> orbits;  ///< sorted by representative
  std::uint64_t total_points = 0;
};

/// Size bound on the dual space handled by the oracle (packed bits).
inline constexpr int kOracleMaxBits = 24;

/// Nilpotent coadjoint orbits: orbits of G(F_q) meeting n'.
inline NilpotentOrbitData all_nilpotent_orbits(GroupKind kind, int n, const Field& field,
                                               GroupMode mode = GroupMode::Auto)
{
  const LieAlgebra& g = lie_algebra(kind, n, field);
  if (g.dim() * field.degree() > kOracleMaxBits)
    throw SizeLimitError("oracle: dual space of " + kind_name(kind) + "(" + std::to_string(n) + ") over " +
                                field.short_name() + " exceeds 2^" + std::to_string(kOracleMaxBits) + " points");
  NilpotentOrbitData out{&g, enumerate_group(kind, n, field, mode), {}, 0};
  std::vector<Mat> maps;
  for (const auto& h : out.group.elements)
    maps.push_back(coadjoint_matrix(g, h));
  const PackedAction act(field, g.dim(), maps);
  PackedSet seen(act.bits());
  const unsigned threads = oracle_threads();
  for (std::uint64_t w : n_prime_words(g))
    if (!seen.contains(w))
      out.orbits.push_back(orbit_bfs(act, w, seen, threads));
  std::sort(out.orbits.begin(), out.orbits.end(), [](const Orbit& a, const Orbit& b) { return a.rep < b.rep; });
  for (const auto& o : out.orbits)
    out.total_points += o.size();
  return out;
}

/// Adjoint orbits of nilpotent elements of g (used for the even θ comparison).
inline std::vector<Orbit> nilpotent_adjoint_orbits(const LieAlgebra& g, const FiniteGroup& group)
{
  std::vector<Mat> maps;
  for (const auto& h : group.elements)
    maps.push_back(adjoint_matrix(g, h));
  const PackedAction act(g.field(), g.dim(), maps);
  PackedSet seen(act.bits());
  std::vector<Orbit> orbits;
  const std::uint64_t total = std::uint64_t{1} << act.bits();
  for (std::uint64_t w = 0; w < total; ++w) {
    if (seen.contains(w))
      continue;
    if (!is_nilpotent(g.element_from_coords(unpack_coords(g.field(), g.dim(), w))))
      continue;
    orbits.push_back(orbit_bfs(act, w, seen));
  }
  return orbits;
}

inline DualFunctional functional_from_word(const LieAlgebra& g, std::uint64_t w)
{
  return {g, unpack_coords(g.field(), g.dim(), w)};
}

/// The orbit of one functional, as functionals sorted by packed coordinates.
inline std::vector<DualFunctional> coadjoint_orbit(const DualFunctional& xi, const FiniteGroup& group)
{
  const LieAlgebra& g = xi.algebra();
  std::vector<Mat> maps;
  for (const auto& h : group.elements)
    maps.push_back(coadjoint_matrix(g, h));
  const PackedAction act(g.field(), g.dim(), maps);
  PackedSet seen(act.bits());
  std::vector<DualFunctional> out;
  for (std::uint64_t w : orbit_bfs(act, pack_coords(g.field(), xi.coords()), seen).members)
    out.push_back(functional_from_word(g, w));
  return out;
}

struct OrbitReport {
  std::uint64_t representative = 0;  ///< packed coordinates
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
  Classification classification;     ///< rational labels
};

inline std::vector<OrbitReport> orbit_reports(const NilpotentOrbitData& d)
{
  std::vector<OrbitReport> out;
  for (const auto& o : d.orbits) {
    OrbitReport r;
    r.representative = o.rep;
    r.orbit_size = o.size();
    r.stabilizer_order = d.group.order / o.size();
    r.classification = classify(functional_from_word(*d.algebra, o.rep), LabelMode::Rational);
    out.push_back(std::move(r));
  }
  return out;
}

/// Stabilizer order by direct enumeration (complete groups only).
inline std::uint64_t stabilizer_count(const FiniteGroup& group, const DualFunctional& xi)
{
  if (!group.complete)
    throw std::invalid_argument("stabilizer_count needs an enumerated group");
  std::uint64_t c = 0;
  for (const auto& h : group.elements)
    c += coadjoint(h, xi) == xi;
  return c;
}

}  // namespace nilorb
