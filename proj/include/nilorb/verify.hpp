/**
 * @file verify.hpp
 * @brief Verification checks shared by the CLI `verify` command and the
 *        acceptance binary.  Each check returns a pass flag, a one-line
 *        detail and its wall time.
 */
#pragma once

#include "classify.hpp"
#include "combinatorics.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace nilorb {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

/// Runs `body`, which fills passed/detail; exceptions count as failures.
inline CheckResult timed(std::string name, const std::function<void(CheckResult&)>& body)
{
  CheckResult r{std::move(name), false, {}, 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string label(GroupKind k, int n, const Field& f)
{
  return kind_name(k) + "(" + std::to_string(n) + ")/F" + std::to_string(f.order());
}

inline std::uint64_t p2_or_zero(int n) { return n < 0 ? 0 : p2(n); }

inline Vec random_vec(const Field& f, int n, std::mt19937_64& rng)
{
  std::uniform_int_distribution<unsigned> d(0, f.order() - 1);
  Vec v(static_cast<std::size_t>(n));
  for (auto& x : v)
    x = static_cast<Scalar>(d(rng));
  return v;
}

inline Mat random_mat(const Field& f, int r, int c, std::mt19937_64& rng)
{
  Mat m(f, r, c);
  const Vec v = random_vec(f, r * c, rng);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m(i, j) = v[static_cast<std::size_t>(i * c + j)];
  return m;
}

/// Closed-field class of a nilpotent functional as text.
inline std::string closed_key(const DualFunctional& xi) { return class_key(xi, LabelMode::Closed); }

/// Oracle data cached per (kind, n, q) within one process.
inline const NilpotentOrbitData& oracle_data(GroupKind k, int n, const Field& f)
{
  static std::map<std::tuple<int, int, int>, NilpotentOrbitData> cache;
  const auto key = std::make_tuple(static_cast<int>(k), n, f.degree());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, all_nilpotent_orbits(k, n, f)).first;
  return it->second;
}

/// True when the oracle accepts (kind, n, q).
inline bool oracle_feasible(GroupKind k, int n, const Field& f) { return lie_dim(k, n) * f.degree() <= kOracleMaxBits; }

}  // namespace detail

// --- combinatorics ----------------------------------------------------------------

/// Closed classes number p₂(n) − p₂(n−2) and Σ 2^k = p₂(n), both families.
inline CheckResult check_combinatorial_counts(int max_n)
{
  return detail::timed("combinatorial counts n<=" + std::to_string(max_n), [&](CheckResult& r) {
    std::ostringstream bad;
    for (int n = 1; n <= max_n; ++n) {
      const std::uint64_t want = p2(n) - detail::p2_or_zero(n - 2);
      const auto symp = symp_enumerate_closed(n);
      const auto odd = oodd_enumerate(n);
      std::uint64_t ss = 0, so = 0;
      for (const auto& s : symp)
        ss += std::uint64_t{1} << comp_rank_symp(s);
      for (const auto& p : odd)
        so += std::uint64_t{1} << comp_rank_oodd(p);
      if (symp.size() != want || odd.size() != want || ss != p2(n) || so != p2(n))
        bad << " n=" << n << ":" << symp.size() << "/" << odd.size() << "/" << ss << "/" << so << " want " << want << "," << p2(n);
    }
    r.passed = bad.str().empty();
    r.detail = r.passed ? "class counts p2(n)-p2(n-2), sum 2^k = p2(n)" : "mismatch" + bad.str();
  });
}

// --- oracle -------------------------------------------------------------------------

/// Number of nilpotent F_q orbits equals p₂(n).
inline CheckResult check_orbit_count(GroupKind k, int n, const Field& f)
{
  return detail::timed("orbit count " + detail::label(k, n, f), [&](CheckResult& r) {
    const auto& d = detail::oracle_data(k, n, f);
    r.passed = d.orbits.size() == p2(n);
    r.detail = std::to_string(d.orbits.size()) + " orbits, p2(n) = " + std::to_string(p2(n));
  });
}

/// Each closed class splits into exactly 2^k rational orbits.
inline CheckResult check_class_splitting(GroupKind k, int n, const Field& f)
{
  return detail::timed("class splitting " + detail::label(k, n, f), [&](CheckResult& r) {
    const auto& d = detail::oracle_data(k, n, f);
    std::map<std::string, int> seen;
    for (const auto& o : d.orbits)
      ++seen[detail::closed_key(functional_from_word(*d.algebra, o.rep))];
    std::map<std::string, int> want;
    if (k == GroupKind::Sp) {
      for (const auto& s : symp_enumerate_closed(n))
        want[to_string(s)] = 1 << comp_rank_symp(s);
    } else if (k == GroupKind::OOdd) {
      for (const auto& s : oodd_enumerate_closed(n))
        want[to_string(s)] = 1 << centralizer_oodd(s).comp_group_rank;
    } else {
      throw std::invalid_argument("class splitting is defined for sp and so-odd");
    }
    std::ostringstream bad;
    for (const auto& [key, c] : want)
      if (seen[key] != c)
        bad << " " << key << ": " << seen[key] << " orbits, 2^k = " << c << ";";
    for (const auto& [key, c] : seen)
      if (!want.count(key))
        bad << " unexpected class " << key << ";";
    r.passed = bad.str().empty();
    r.detail = r.passed ? std::to_string(want.size()) + " classes split as 2^k" : bad.str();
  });
}

/**
 * Rational labels separate orbits and are constant on them.  Orbits larger
 * than `sample` are checked on every `size/sample`-th member; 0 means all.
 */
inline CheckResult check_classifier_vs_oracle(GroupKind k, int n, const Field& f, std::size_t sample = 0)
{
  std::string name = "classifier vs oracle " + detail::label(k, n, f);
  if (sample)
    name += " (" + std::to_string(sample) + " per orbit)";
  return detail::timed(name, [&](CheckResult& r) {
    const auto& d = detail::oracle_data(k, n, f);
    std::map<std::string, std::size_t> owner;
    std::ostringstream bad;
    std::uint64_t checked = 0;
    for (std::size_t i = 0; i < d.orbits.size(); ++i) {
      const auto& o = d.orbits[i];
      const std::size_t step = sample && o.size() > sample ? o.size() / sample : 1;
      std::string lab;
      for (std::size_t j = 0; j < o.members.size(); j += step, ++checked) {
        const std::string key = class_key(functional_from_word(*d.algebra, o.members[j]), LabelMode::Rational);
        if (j == 0)
          lab = key;
        else if (key != lab)
          bad << " orbit " << i << " has labels " << lab << " and " << key << ";";
      }
      if (!owner.emplace(lab, i).second)
        bad << " label " << lab << " on orbits " << owner[lab] << " and " << i << ";";
    }
    r.passed = bad.str().empty();
    r.detail = r.passed ? std::to_string(d.orbits.size()) + " orbits, " + std::to_string(checked) + " functionals classified"
                        : bad.str();
  });
}

/// The criterion agrees with the definition (orbit meets n') on every functional.
inline CheckResult check_nilpotent_criterion(GroupKind k, int n, const Field& f)
{
  return detail::timed("nilpotency criterion " + detail::label(k, n, f), [&](CheckResult& r) {
    const auto& d = detail::oracle_data(k, n, f);
    PackedSet nil(d.algebra->dim() * f.degree());
    for (const auto& o : d.orbits)
      for (std::uint64_t w : o.members)
        nil.insert(w);
    const std::uint64_t total = std::uint64_t{1} << (d.algebra->dim() * f.degree());
    std::uint64_t false_pos = 0, false_neg = 0, count = 0;
    for (std::uint64_t w = 0; w < total; ++w) {
      const bool crit = is_nilpotent_functional(functional_from_word(*d.algebra, w));
      const bool def = nil.contains(w);
      false_pos += crit && !def;
      false_neg += !crit && def;
      count += def;
    }
    r.passed = !false_pos && !false_neg;
    r.detail = std::to_string(total) + " functionals, " + std::to_string(count) + " nilpotent, disagreements " +
               std::to_string(false_pos) + "+" + std::to_string(false_neg);
  });
}

/// |Stab| · |orbit| = |G| with Stab enumerated directly.
inline CheckResult check_stabilizers(GroupKind k, int n, const Field& f)
{
  return detail::timed("stabilizer differential " + detail::label(k, n, f), [&](CheckResult& r) {
    const auto& d = detail::oracle_data(k, n, f);
    if (!d.group.complete)
      throw std::invalid_argument("group was not enumerated");
    std::ostringstream bad;
    for (const auto& o : d.orbits) {
      const std::uint64_t s = stabilizer_count(d.group, functional_from_word(*d.algebra, o.rep));
      if (s * o.size() != d.group.order)
        bad << " rep " << o.rep << ": " << s << "*" << o.size() << ";";
    }
    r.passed = bad.str().empty();
    r.detail = r.passed ? "|G| = " + std::to_string(d.group.order) + " on all orbits" : bad.str();
  });
}

/// Generator-mode and filter-mode orbit partitions coincide.
inline CheckResult check_generators_vs_filter(GroupKind k, int n, const Field& f)
{
  return detail::timed("generators vs filter " + detail::label(k, n, f), [&](CheckResult& r) {
    const auto a = all_nilpotent_orbits(k, n, f, GroupMode::Filter);
    const auto b = all_nilpotent_orbits(k, n, f, GroupMode::Generators);
    bool same = a.orbits.size() == b.orbits.size();
    for (std::size_t i = 0; same && i < a.orbits.size(); ++i)
      same = a.orbits[i].members == b.orbits[i].members;
    r.passed = same && a.group.order == b.group.order;
    r.detail = std::to_string(a.orbits.size()) + " vs " + std::to_string(b.orbits.size()) + " orbits, |G| " +
               std::to_string(a.group.order) + " vs " + std::to_string(b.group.order);
  });
}

// --- centralizers -----------------------------------------------------------------

/// round(log₂(|Z(F₄)| / |Z(F₂)|)) = dim Z for every rational orbit.
inline CheckResult check_centralizer_growth(GroupKind k, int n)
{
  return detail::timed("centralizer growth " + kind_name(k) + "(" + std::to_string(n) + ") F4/F2", [&](CheckResult& r) {
    const Field& f2 = Field::standard(1);
    const Field& f4 = Field::standard(2);
    std::map<std::string, std::pair<std::uint64_t, int>> z2, z4;
    for (auto [f, z] : {std::pair{&f2, &z2}, std::pair{&f4, &z4}})
      for (const auto& rep : orbit_reports(detail::oracle_data(k, n, *f)))
        (*z)[rep.classification.symbol_text()] = {rep.stabilizer_order, rep.classification.centralizer->dim_z};
    std::ostringstream bad;
    int ok = 0;
    for (const auto& [lab, v] : z2) {
      if (!z4.count(lab)) {
        bad << " " << lab << " missing over F4;";
        continue;
      }
      const double ratio = static_cast<double>(z4[lab].first) / static_cast<double>(v.first);
      const long measured = std::lround(std::log2(ratio));
      if (measured == v.second)
        ++ok;
      else
        bad << " " << lab << ": |Z| " << v.first << " -> " << z4[lab].first << ", log2 " << std::log2(ratio)
            << " rounds to " << measured << ", dim Z " << v.second << ";";
    }
    r.passed = bad.str().empty();
    r.detail = std::to_string(ok) + "/" + std::to_string(z2.size()) + " orbits match" + bad.str();
  });
}

/// |Z(V_{2m+1})(F_q)| = q^m and |C(V_{2m+1})(F_q)| = q^{2m+1}.
inline CheckResult check_pure_chains(int max_m_f2, int max_m_f4)
{
  return detail::timed("pure chain counts", [&](CheckResult& r) {
    std::ostringstream bad;
    int ok = 0, total = 0;
    for (int e : {1, 2}) {
      const Field& f = Field::standard(e);
      for (int m = 1; m <= (e == 1 ? max_m_f2 : max_m_f4); ++m) {
        const std::uint64_t z = chain_centralizer_count(m, f), c = chain_bilinear_centralizer_count(m, f);
        const std::uint64_t zw = detail::ipow(f.order(), m), cw = detail::ipow(f.order(), 2 * m + 1);
        total += 2;
        ok += (z == zw) + (c == cw);
        if (z != zw)
          bad << " |Z(V" << 2 * m + 1 << ")(F" << f.order() << ")| = " << z << " not " << zw << ";";
        if (c != cw)
          bad << " |C(V" << 2 * m + 1 << ")(F" << f.order() << ")| = " << c << " not " << cw << ";";
      }
    }
    r.passed = bad.str().empty();
    r.detail = std::to_string(ok) + "/" + std::to_string(total) + " counts match" + bad.str();
  });
}

// --- even orthogonal ----------------------------------------------------------------

/// θ: nilpotent functionals → nilpotent elements is an equivariant bijection; orbit counts agree.
inline CheckResult check_theta(int n, const Field& f)
{
  return detail::timed("theta transport " + detail::label(GroupKind::OEven, n, f), [&](CheckResult& r) {
    const auto& d = detail::oracle_data(GroupKind::OEven, n, f);
    const LieAlgebra& g = *d.algebra;
    std::set<std::vector<Scalar>> image;
    std::uint64_t points = 0, equivariant = 0, tested = 0;
    for (const auto& o : d.orbits)
      for (std::uint64_t w : o.members) {
        const DualFunctional xi = functional_from_word(g, w);
        const Mat t = theta_even(xi);
        if (is_nilpotent(t) && g.contains(t))
          image.insert(t.data());
        ++points;
      }
    std::set<std::vector<Scalar>> nilpotent_elements;
    const std::uint64_t total = std::uint64_t{1} << (g.dim() * f.degree());
    for (std::uint64_t w = 0; w < total; ++w) {
      const Mat x = g.element_from_coords(unpack_coords(f, g.dim(), w));
      if (is_nilpotent(x))
        nilpotent_elements.insert(x.data());
    }
    for (const auto& o : d.orbits) {
      const DualFunctional xi = functional_from_word(g, o.rep);
      for (const auto& h : d.group.elements) {
        ++tested;
        equivariant += theta_even(coadjoint(h, xi)) == h * theta_even(xi) * *inverse(h);
      }
    }
    const auto adj = nilpotent_adjoint_orbits(g, d.group);
    r.passed = image.size() == points && image == nilpotent_elements && equivariant == tested && adj.size() == d.orbits.size();
    r.detail = std::to_string(points) + " nilpotent functionals onto " + std::to_string(nilpotent_elements.size()) +
               " nilpotent elements, equivariant " + std::to_string(equivariant) + "/" + std::to_string(tested) +
               ", orbits g* " + std::to_string(d.orbits.size()) + " vs g " + std::to_string(adj.size());
  });
}

/// The ∧²V form is nondegenerate and G-invariant (random triples).
inline CheckResult check_wedge_form(int n, const Field& f, int trials, std::uint64_t seed)
{
  return detail::timed("wedge form " + detail::label(GroupKind::OEven, n, f), [&](CheckResult& r) {
    const LieAlgebra& g = lie_algebra(GroupKind::OEven, n, f);
    const Mat gram = wedge_invariant_form(n, f);
    const bool nondeg = rank(gram) == g.dim();
    const FiniteGroup grp = enumerate_group(GroupKind::OEven, n, f);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, grp.elements.size() - 1);
    int ok = 0;
    for (int t = 0; t < trials; ++t) {
      // Product of a few elements so generator mode also gives spread-out samples.
      Mat h = Mat::identity(f, g.N());
      for (int s = 0; s < (grp.complete ? 1 : 8); ++s)
        h = h * grp.elements[pick(rng)];
      const Vec a = detail::random_vec(f, g.dim(), rng), b = detail::random_vec(f, g.dim(), rng);
      const Mat hi = *inverse(h);
      const Vec ha = g.coords_of_element(h * g.element_from_coords(a) * hi);
      const Vec hb = g.coords_of_element(h * g.element_from_coords(b) * hi);
      ok += bilinear(gram, ha, hb) == bilinear(gram, a, b);
    }
    r.passed = nondeg && ok == trials;
    r.detail = std::string(nondeg ? "nondegenerate" : "DEGENERATE") + ", invariant on " + std::to_string(ok) + "/" +
               std::to_string(trials) + " random triples";
  });
}

// --- property suites ------------------------------------------------------------

/// Normal form → witness → classifier returns the symbol, every symbol up to rank max_n.
inline CheckResult check_round_trips(int max_n)
{
  return detail::timed("normal-form round trips n<=" + std::to_string(max_n), [&](CheckResult& r) {
    std::ostringstream bad;
    int count = 0;
    for (int e : {1, 2}) {
      const Field& f = Field::standard(e);
      for (int n = 1; n <= max_n; ++n) {
        for (const auto& s : symp_enumerate_closed(n)) {
          ++count;
          if (classify_closed(build_module(build_normal_form(s, f).witness)) != s)
            bad << " sp " << to_string(s) << "/F" << f.order() << ";";
        }
        for (const auto& s : oodd_enumerate_closed(n)) {
          ++count;
          if (classify_odd_closed(build_odd_normal_form(s, f).witness) != s)
            bad << " so-odd " << to_string(s) << "/F" << f.order() << ";";
        }
        for (const auto& s : orth_enumerate_closed(n)) {
          ++count;
          if (classify_orth(orth_normal_form(s.blocks, f)) != s)
            bad << " so-even " << to_string(s) << "/F" << f.order() << ";";
        }
      }
    }
    r.passed = bad.str().empty();
    r.detail = std::to_string(count) + " symbols" + bad.str();
  });
}

/// χ(k) of W_l(m) equals max{0, min{k − m + l, l}}.
inline CheckResult check_chi_blocks(int max_m)
{
  return detail::timed("chi of W_l(m), m<=" + std::to_string(max_m), [&](CheckResult& r) {
    const Field& f = Field::standard(1);
    int count = 0, bad = 0;
    for (int m = 1; m <= max_m; ++m)
      for (int l = 0; l <= m; ++l) {
        std::vector<FormModule> mods;
        if (2 * l >= m)
          mods.push_back(symp_normal_form({{m, l, Eps::Closed}}, f));
        if (2 * l >= m + 1)
          mods.push_back(orth_normal_form({{m, l, Eps::Closed}}, f));
        for (const auto& mod : mods)
          for (int k = 0; k <= m + 1; ++k, ++count)
            bad += index_chi(mod, k) != std::max(0, std::min(k - m + l, l));
      }
    r.passed = bad == 0;
    r.detail = std::to_string(count - bad) + "/" + std::to_string(count) + " values match";
  });
}

/// T_ξ, α_ξ, X_ξ and θ do not depend on the representative (random radical perturbations).
inline CheckResult check_well_defined(int trials, std::uint64_t seed)
{
  return detail::timed("well-definedness under radical perturbation", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    int ok = 0, total = 0;
    for (int e : {1, 2})
      for (GroupKind k : {GroupKind::Sp, GroupKind::OOdd, GroupKind::OEven}) {
        const Field& f = Field::standard(e);
        const LieAlgebra& g = lie_algebra(k, 2, f);
        const SpaceData& sp = g.space();
        const auto rad = g.trace_radical_basis();
        for (int t = 0; t < trials; ++t, ++total) {
          const Mat X = detail::random_mat(f, g.N(), g.N(), rng);
          Mat Y = X;
          for (const auto& b : rad)
            Y = Y + scale(b, detail::random_vec(f, 1, rng)[0]);
          bool same = dual_equal(g, X, Y);
          if (k == GroupKind::OOdd) {
            same = same && x_xi_from_rep(sp, X) == x_xi_from_rep(sp, Y);
          } else {
            same = same && t_xi_from_rep(sp, X) == t_xi_from_rep(sp, Y);
            if (k == GroupKind::Sp)
              same = same && alpha_xi_form_from_rep(sp, X) == alpha_xi_form_from_rep(sp, Y);
          }
          ok += same;
        }
      }
    r.passed = ok == total;
    r.detail = std::to_string(ok) + "/" + std::to_string(total) + " perturbations invariant";
  });
}

/// ψ(v) = 0 and φ_ξ = t·φ on random module vectors.
inline CheckResult check_series_identities(int trials, std::uint64_t seed)
{
  return detail::timed("series identities", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    const Field& f = Field::standard(2);
    const auto syms = symp_enumerate_closed(4);
    int ok = 0;
    for (int t = 0; t < trials; ++t) {
      const FormModule mod = build_normal_form(syms[static_cast<std::size_t>(t) % syms.size()], f).module;
      const Vec v = detail::random_vec(f, mod.dim, rng), w = detail::random_vec(f, mod.dim, rng);
      bool good = true;
      for (Scalar c : psi_series(mod, v))
        good = good && c == 0;
      const auto phi = phi_series(mod, v, w), phx = phi_xi_series(mod, v, w);
      for (std::size_t k = 0; k + 1 < phi.size(); ++k)
        good = good && phx[k] == phi[k + 1];
      ok += good;
    }
    r.passed = ok == trials;
    r.detail = std::to_string(ok) + "/" + std::to_string(trials) + " random vector pairs";
  });
}

// --- suites -------------------------------------------------------------------------

/// Oracle-backed checks for one family up to rank max_n (skipping sizes the oracle refuses).
inline std::vector<CheckResult> oracle_suite(GroupKind k, int max_n)
{
  std::vector<CheckResult> out;
  const Field& f2 = Field::standard(1);
  const Field& f4 = Field::standard(2);
  for (int n = 1; n <= max_n; ++n) {
    if (!detail::oracle_feasible(k, n, f2))
      break;
    if (k != GroupKind::OEven) {
      out.push_back(check_orbit_count(k, n, f2));
      out.push_back(check_class_splitting(k, n, f2));
    }
    out.push_back(check_classifier_vs_oracle(k, n, f2));
    out.push_back(check_nilpotent_criterion(k, n, f2));
    if (n <= 2)
      out.push_back(check_stabilizers(k, n, f2));
    if (n <= 2 && detail::oracle_feasible(k, n, f4)) {
      out.push_back(check_classifier_vs_oracle(k, n, f4, k == GroupKind::OOdd && n >= 2 ? 64 : 0));
      out.push_back(check_nilpotent_criterion(k, n, f4));
    }
  }
  if (k == GroupKind::Sp && max_n >= 2)
    out.push_back(check_generators_vs_filter(k, 2, f2));
  if (k == GroupKind::OEven && max_n >= 2) {
    out.push_back(check_theta(2, f2));
    out.push_back(check_wedge_form(2, f2, 100, 7));
  }
  return out;
}

inline std::vector<CheckResult> centralizer_suite(int max_n)
{
  std::vector<CheckResult> out;
  for (GroupKind k : {GroupKind::Sp, GroupKind::OOdd})
    for (int n = 1; n <= std::min(max_n, 2); ++n)
      out.push_back(check_centralizer_growth(k, n));
  out.push_back(check_pure_chains(3, 2));
  return out;
}

inline std::vector<CheckResult> property_suite()
{
  return {check_round_trips(5), check_chi_blocks(6), check_well_defined(100, 11), check_series_identities(100, 3)};
}

inline const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"all", "combinatorics", "sp", "so-odd", "so-even", "centralizers", "properties"};
  return names;
}

inline std::vector<CheckResult> run_suite(const std::string& suite, int max_n)
{
  std::vector<CheckResult> out;
  auto add = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
  const bool all = suite == "all";
  if (all || suite == "combinatorics")
    out.push_back(check_combinatorial_counts(std::max(max_n, 1)));
  if (all || suite == "sp")
    add(oracle_suite(GroupKind::Sp, max_n));
  if (all || suite == "so-odd")
    add(oracle_suite(GroupKind::OOdd, max_n));
  if (all || suite == "so-even")
    add(oracle_suite(GroupKind::OEven, max_n));
  if (all || suite == "centralizers")
    add(centralizer_suite(max_n));
  if (all || suite == "properties")
    add(property_suite());
  if (out.empty())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace nilorb
