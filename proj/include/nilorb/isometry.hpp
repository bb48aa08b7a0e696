/**
 * @file isometry.hpp
 * @brief Backtracking search for linear maps preserving a family of forms.
 *
 * A FormData bundles the structures a map must respect: bilinear Gram
 * matrices, quadratic forms, and optionally a nilpotent operator T that
 * must be intertwined.  The search places images of Jordan-chain
 * generators of the source T (or of the standard basis when there is no
 * T).  For each generator the images satisfying all linear constraints
 * against already placed vectors form an affine space; it is enumerated
 * and filtered by the remaining quadratic conditions.
 */
#pragma once

#include "forms.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nilorb {

struct FormData {
  const Field* field = nullptr;
  int dim = 0;
  std::vector<Mat> bilinear;   ///< Gram matrices to preserve
  std::vector<Mat> quadratic;  ///< upper-triangular quadratic forms to preserve
  std::optional<Mat> op;       ///< operator to intertwine
};

/// True iff g maps src to dst preserving every structure.
inline bool is_isometry(const FormData& src, const FormData& dst, const Mat& g)
{
  if (g.rows() != dst.dim || g.cols() != src.dim || !inverse(g))
    return false;
  for (std::size_t i = 0; i < src.bilinear.size(); ++i)
    if (transpose(g) * dst.bilinear[i] * g != src.bilinear[i])
      return false;
  for (std::size_t i = 0; i < src.quadratic.size(); ++i)
    if (quad_pullback(dst.quadratic[i], g) != src.quadratic[i])
      return false;
  if (src.op && g * *src.op != *dst.op * g)
    return false;
  return true;
}

class IsometrySearch {
public:
  /// Hard cap on the dimension handled, by field size.
  static int max_dim(const Field& f) { return f.degree() == 1 ? 12 : 8; }

  IsometrySearch(const FormData& src, const FormData& dst)
    : src_(src), dst_(dst), f_(*src.field)
  {
    if (src.field != dst.field || src.dim != dst.dim || src.bilinear.size() != dst.bilinear.size() ||
        src.quadratic.size() != dst.quadratic.size() || src.op.has_value() != dst.op.has_value())
      throw std::invalid_argument("isometry search: incompatible structures");
    if (src.dim > max_dim(f_))
      throw SizeLimitError("isometry search: dimension " + std::to_string(src.dim) + " exceeds bound " +
                                  std::to_string(max_dim(f_)) + " over " + f_.short_name());
    prepare();
  }

  /// Some structure-preserving isomorphism src → dst (verified), or nothing.
  std::optional<Mat> find_first()
  {
    if (!compatible_)
      return std::nullopt;
    std::optional<Mat> found;
    run([&](const std::vector<Vec>& images) {
      Mat g = assemble(images);
      if (!is_isometry(src_, dst_, g))
        throw std::logic_error("isometry search produced an invalid map");
      found = std::move(g);
      return false;
    });
    return found;
  }

  /// Number of isomorphisms, stopping early at `limit`.
  std::uint64_t count(std::uint64_t limit = std::numeric_limits<std::uint64_t>::max())
  {
    if (!compatible_)
      return 0;
    std::uint64_t n = 0;
    run([&](const std::vector<Vec>&) { return ++n < limit; });
    return n;
  }

  /// Visits every isomorphism; the visitor returns false to stop.
  void for_each(const std::function<bool(const Mat&)>& visit)
  {
    if (!compatible_)
      return;
    run([&](const std::vector<Vec>& images) { return visit(assemble(images)); });
  }

private:
  struct Gen {
    Vec src;                  // generator in source coordinates
    int length = 1;           // chain length
    std::vector<Vec> chain;   // T^j src, j < length
  };

  void prepare()
  {
    const int n = src_.dim;
    // All bilinear constraints, including polar forms of the quadratics.
    for (std::size_t i = 0; i < src_.bilinear.size(); ++i) {
      bil_src_.push_back(src_.bilinear[i]);
      bil_dst_.push_back(dst_.bilinear[i]);
    }
    for (std::size_t i = 0; i < src_.quadratic.size(); ++i) {
      bil_src_.push_back(polar(src_.quadratic[i]));
      bil_dst_.push_back(polar(dst_.quadratic[i]));
    }
    for (const auto& b : bil_dst_)
      symmetric_.push_back(is_symmetric(b));

    if (src_.op) {
      const auto cs = jordan_chains(*src_.op);
      // Jordan types must agree.
      compatible_ = jordan_partition(*src_.op) == jordan_partition(*dst_.op);
      for (const auto& c : cs) {
        Gen g;
        g.src = c.generator;
        g.length = c.length;
        Vec v = c.generator;
        for (int j = 0; j < c.length; ++j) {
          g.chain.push_back(v);
          v = mat_vec(*src_.op, v);
        }
        gens_.push_back(std::move(g));
      }
      dst_pow_.push_back(Mat::identity(f_, n));
      for (int j = 1; j <= n; ++j)
        dst_pow_.push_back(dst_pow_.back() * *dst_.op);
    } else {
      for (int i = 0; i < n; ++i) {
        Gen g;
        g.src = unit_vec(n, i);
        g.chain.push_back(g.src);
        gens_.push_back(std::move(g));
      }
      dst_pow_.push_back(Mat::identity(f_, n));
    }
    for (const auto& g : gens_)
      for (const auto& v : g.chain)
        src_basis_.push_back(v);
    if (!linearly_independent(f_, n, src_basis_))
      throw std::logic_error("isometry search: source basis is dependent");
    // Pre-multiplied dst forms B·T^j.
    for (const auto& b : bil_dst_) {
      std::vector<Mat> per;
      for (const auto& tp : dst_pow_)
        per.push_back(b * tp);
      bil_dst_pow_.push_back(std::move(per));
    }
  }

  Mat assemble(const std::vector<Vec>& images) const
  {
    // g · [src basis] = [images]  ⇒  g = I · P⁻¹.
    const int n = src_.dim;
    const Mat p = Mat::from_columns(f_, n, src_basis_);
    const Mat im = Mat::from_columns(f_, n, images);
    return im * *inverse(p);
  }

  template <class Leaf>
  void run(Leaf&& leaf)
  {
    std::vector<Vec> images;   // aligned with src_basis_ prefix
    Span placed(f_, dst_.dim);
    stop_ = false;
    recurse(0, images, placed, leaf);
  }

  template <class Leaf>
  void recurse(std::size_t gi, std::vector<Vec>& images, const Span& placed, Leaf& leaf)
  {
    if (stop_)
      return;
    if (gi == gens_.size()) {
      if (!leaf(images))
        stop_ = true;
      return;
    }
    const Gen& g = gens_[gi];
    const int n = dst_.dim;
    // Linear constraints on the image x of the generator.
    std::vector<Vec> rows;
    Vec rhs;
    if (dst_.op) {
      const Mat& tl = dst_pow_[static_cast<std::size_t>(g.length)];
      for (int r = 0; r < n; ++r) {
        rows.push_back(tl.row(r));
        rhs.push_back(0);
      }
    }
    for (std::size_t p = 0; p < images.size(); ++p) {
      const Vec& ps = src_basis_[p];
      const Vec& pd = images[p];
      for (std::size_t b = 0; b < bil_src_.size(); ++b)
        for (int j = 0; j < g.length; ++j) {
          // B(p, T^j x) = B_src(p_src, T^j y)
          Vec row(static_cast<std::size_t>(n), 0);
          const Mat& m = bil_dst_pow_[b][static_cast<std::size_t>(j)];
          for (int c = 0; c < n; ++c) {
            Scalar acc = 0;
            for (int r = 0; r < n; ++r)
              acc ^= f_.mul(pd[static_cast<std::size_t>(r)], m(r, c));
            row[static_cast<std::size_t>(c)] = acc;
          }
          rows.push_back(std::move(row));
          rhs.push_back(bilinear(bil_src_[b], ps, g.chain[static_cast<std::size_t>(j)]));
          if (!symmetric_[b]) {
            // B(T^j x, p) = B_src(T^j y, p_src)
            const Vec bp = mat_vec(bil_dst_[b], pd);
            const Mat& tj = dst_pow_[static_cast<std::size_t>(j)];
            Vec row2(static_cast<std::size_t>(n), 0);
            for (int c = 0; c < n; ++c) {
              Scalar acc = 0;
              for (int r = 0; r < n; ++r)
                acc ^= f_.mul(tj(r, c), bp[static_cast<std::size_t>(r)]);
              row2[static_cast<std::size_t>(c)] = acc;
            }
            rows.push_back(std::move(row2));
            rhs.push_back(bilinear(bil_src_[b], g.chain[static_cast<std::size_t>(j)], ps));
          }
        }
    }
    Vec particular(static_cast<std::size_t>(n), 0);
    std::vector<Vec> free;
    if (rows.empty()) {
      for (int i = 0; i < n; ++i)
        free.push_back(unit_vec(n, i));
    } else {
      const Mat a = Mat::from_rows(f_, rows);
      auto sol = solve(a, rhs);
      if (!sol)
        return;
      particular = *sol;
      free = kernel_basis(a);
    }
    // Enumerate particular + Σ c_i free_i.
    const unsigned q = f_.order();
    const std::size_t k = free.size();
    std::vector<unsigned> digits(k, 0);
    Vec x = particular;
    while (true) {
      try_candidate(gi, x, images, placed, leaf);
      if (stop_)
        return;
      // Mixed-radix increment; update x incrementally.
      std::size_t pos = 0;
      while (pos < k) {
        const Scalar old = static_cast<Scalar>(digits[pos]);
        const unsigned nd = (digits[pos] + 1) % q;
        digits[pos] = nd;
        vec_axpy(f_, static_cast<Scalar>(old ^ nd), free[pos], x);
        if (nd != 0)
          break;
        ++pos;
      }
      if (pos == k)
        break;
    }
  }

  template <class Leaf>
  void try_candidate(std::size_t gi, const Vec& x, std::vector<Vec>& images, const Span& placed, Leaf& leaf)
  {
    const Gen& g = gens_[gi];
    std::vector<Vec> chain;
    chain.reserve(static_cast<std::size_t>(g.length));
    chain.push_back(x);
    for (int j = 1; j < g.length; ++j)
      chain.push_back(mat_vec(*dst_.op, chain.back()));
    // Pairings inside the new chain.
    for (std::size_t b = 0; b < bil_src_.size(); ++b)
      for (int i = 0; i < g.length; ++i)
        for (int j = symmetric_[b] ? i : 0; j < g.length; ++j)
          if (bilinear(bil_dst_[b], chain[static_cast<std::size_t>(i)], chain[static_cast<std::size_t>(j)]) !=
              bilinear(bil_src_[b], g.chain[static_cast<std::size_t>(i)], g.chain[static_cast<std::size_t>(j)]))
            return;
    for (std::size_t qi = 0; qi < src_.quadratic.size(); ++qi)
      for (int j = 0; j < g.length; ++j)
        if (quad_eval(dst_.quadratic[qi], chain[static_cast<std::size_t>(j)]) !=
            quad_eval(src_.quadratic[qi], g.chain[static_cast<std::size_t>(j)]))
          return;
    Span next = placed;
    for (const auto& v : chain)
      if (!next.insert(v))
        return;
    const std::size_t mark = images.size();
    for (auto& v : chain)
      images.push_back(std::move(v));
    recurse(gi + 1, images, next, leaf);
    images.resize(mark);
  }

  FormData src_, dst_;
  const Field& f_;
  bool compatible_ = true;
  bool stop_ = false;
  std::vector<Gen> gens_;
  std::vector<Vec> src_basis_;
  std::vector<Mat> bil_src_, bil_dst_;
  std::vector<bool> symmetric_;
  std::vector<Mat> dst_pow_;
  std::vector<std::vector<Mat>> bil_dst_pow_;
};

inline std::optional<Mat> isometry_equivalent(const FormData& a, const FormData& b)
{
  return IsometrySearch(a, b).find_first();
}

inline std::uint64_t automorphism_count(const FormData& a,
                                        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max())
{
  return IsometrySearch(a, a).count(limit);
}

}  // namespace nilorb
