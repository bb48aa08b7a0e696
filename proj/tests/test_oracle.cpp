#include <nilorb/oracle.hpp>

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace nilorb;

namespace {

/// Membership test for the union of nilpotent orbits.
std::set<std::uint64_t> nilpotent_words(const NilpotentOrbitData& d)
{
  std::set<std::uint64_t> s;
  for (const auto& o : d.orbits)
    s.insert(o.members.begin(), o.members.end());
  return s;
}

std::string fq_label(const DualFunctional& xi)
{
  switch (xi.kind()) {
  case GroupKind::Sp:
    return to_string(classify_fq(build_module(xi)).symbol);
  case GroupKind::OOdd:
    return to_string(classify_odd_fq(xi).symbol);
  case GroupKind::OEven:
    return to_string(classify_orth_fq(build_module(xi)).symbol);
  }
  return {};
}

}  // namespace

TEST(Oracle, GroupOrders)
{
  const Field& f2 = Field::standard(1);
  EXPECT_EQ(enumerate_group(GroupKind::Sp, 1, f2).order, 6u);
  EXPECT_EQ(enumerate_group(GroupKind::Sp, 2, f2).order, 720u);
  EXPECT_EQ(enumerate_group(GroupKind::OOdd, 1, f2).order, 6u);
  EXPECT_EQ(enumerate_group(GroupKind::OOdd, 2, f2, GroupMode::Filter).order, 720u);
  EXPECT_EQ(enumerate_group(GroupKind::OEven, 2, f2).order, 72u);
  EXPECT_EQ(enumerate_group(GroupKind::OEven, 1, f2).order, 2u);
  const Field& f4 = Field::standard(2);
  EXPECT_EQ(enumerate_group(GroupKind::Sp, 1, f4).order, group_order(GroupKind::Sp, 1, 4));
  EXPECT_EQ(enumerate_group(GroupKind::OEven, 1, f4).order, group_order(GroupKind::OEven, 1, 4));
  for (GroupKind k : {GroupKind::Sp, GroupKind::OOdd, GroupKind::OEven})
    for (int n = 1; n <= 2; ++n) {
      const FiniteGroup g = enumerate_group(k, n, f2, GroupMode::Filter);
      EXPECT_EQ(g.order, group_order(k, n, 2)) << kind_name(k) << n;
      for (const auto& h : g.elements)
        ASSERT_TRUE(preserves_forms(make_space(k, n, f2), h));
    }
}

TEST(Oracle, OrbitCounts)
{
  const Field& f2 = Field::standard(1);
  EXPECT_EQ(all_nilpotent_orbits(GroupKind::Sp, 1, f2).orbits.size(), 2u);
  EXPECT_EQ(all_nilpotent_orbits(GroupKind::Sp, 2, f2).orbits.size(), 5u);
  EXPECT_EQ(all_nilpotent_orbits(GroupKind::OOdd, 1, f2).orbits.size(), 2u);
  EXPECT_EQ(all_nilpotent_orbits(GroupKind::OOdd, 2, f2).orbits.size(), 5u);
}

TEST(Oracle, NilpotentPointCount)
{
  // q^{dim g − rank} nilpotent functionals.
  for (int e : {1, 2})
    for (GroupKind k : {GroupKind::Sp, GroupKind::OOdd, GroupKind::OEven})
      for (int n = 1; n <= (e == 1 ? 3 : 2); ++n) {
        const Field& f = Field::standard(e);
        if (lie_dim(k, n) * e > kOracleMaxBits)
          continue;
        const auto d = all_nilpotent_orbits(k, n, f);
        EXPECT_EQ(d.total_points, detail::ipow(f.order(), lie_dim(k, n) - n)) << kind_name(k) << n << " q=" << f.order();
      }
}

TEST(Oracle, GeneratorsAgreeWithFilter)
{
  const Field& f2 = Field::standard(1);
  for (GroupKind k : {GroupKind::Sp, GroupKind::OOdd}) {
    const auto a = all_nilpotent_orbits(k, 2, f2, GroupMode::Filter);
    const auto b = all_nilpotent_orbits(k, 2, f2, GroupMode::Generators);
    ASSERT_EQ(a.orbits.size(), b.orbits.size());
    for (std::size_t i = 0; i < a.orbits.size(); ++i)
      EXPECT_EQ(a.orbits[i].members, b.orbits[i].members);
  }
}

TEST(Oracle, NilpotentCriterionMatchesDefinition)
{
  // Every functional: criterion ⟺ the orbit meets n'.
  const Field& f2 = Field::standard(1);
  for (GroupKind k : {GroupKind::Sp, GroupKind::OOdd, GroupKind::OEven})
    for (int n = 1; n <= 2; ++n) {
      const auto d = all_nilpotent_orbits(k, n, f2);
      const auto nil = nilpotent_words(d);
      const LieAlgebra& g = *d.algebra;
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << g.dim()); ++w)
        EXPECT_EQ(is_nilpotent_functional(functional_from_word(g, w)), nil.count(w) > 0)
            << kind_name(k) << " n=" << n << " word=" << w;
    }
}

TEST(Oracle, LabelsSeparateOrbits)
{
  for (int e : {1, 2})
    for (GroupKind k : {GroupKind::Sp, GroupKind::OOdd, GroupKind::OEven})
      for (int n = 1; n <= (e == 1 ? 2 : 1); ++n) {
        const Field& f = Field::standard(e);
        const auto d = all_nilpotent_orbits(k, n, f);
        std::map<std::string, std::uint64_t> seen;
        for (const auto& o : d.orbits) {
          const std::string lab = fq_label(functional_from_word(*d.algebra, o.rep));
          EXPECT_TRUE(seen.emplace(lab, o.rep).second) << kind_name(k) << " " << lab;
          // The label is constant along the orbit (sampled).
          for (std::size_t i = 0; i < o.members.size(); i += 1 + o.members.size() / 7)
            EXPECT_EQ(fq_label(functional_from_word(*d.algebra, o.members[i])), lab);
        }
      }
}

TEST(Oracle, StabilizerMatchesOrbitSize)
{
  const Field& f2 = Field::standard(1);
  for (GroupKind k : {GroupKind::Sp, GroupKind::OOdd, GroupKind::OEven}) {
    const auto d = all_nilpotent_orbits(k, 2, f2);
    ASSERT_TRUE(d.group.complete);
    for (const auto& o : d.orbits)
      EXPECT_EQ(stabilizer_count(d.group, functional_from_word(*d.algebra, o.rep)) * o.size(), d.group.order);
  }
}

TEST(Oracle, EvenAdjointAndCoadjointCounts)
{
  // θ is a G-equivariant map g* → g; on o(4) over F_2 both sides have the same orbit count.
  const Field& f2 = Field::standard(1);
  const auto d = all_nilpotent_orbits(GroupKind::OEven, 2, f2);
  const auto adj = nilpotent_adjoint_orbits(*d.algebra, d.group);
  EXPECT_EQ(d.orbits.size(), adj.size());
  for (const auto& o : d.orbits) {
    const DualFunctional xi = functional_from_word(*d.algebra, o.rep);
    const Mat t = theta_even(xi);
    for (const auto& h : d.group.elements)
      EXPECT_EQ(theta_even(coadjoint(h, xi)), h * t * *inverse(h));
  }
}
