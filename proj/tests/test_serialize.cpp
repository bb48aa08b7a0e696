#include <nilorb/serialize.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace nilorb;

TEST(Pairs, ParseRoundTrip)
{
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_bipartitions(n)) {
      EXPECT_EQ(parse_pair(to_string(p)), p);
      EXPECT_EQ(pair_from_json(pair_to_json(p)), p);
    }
  const PartitionPair p = parse_pair("  nu = [2, 1] ;mu=[ ]");
  EXPECT_EQ(p.nu, (Partition{2, 1}));
  EXPECT_TRUE(p.mu.empty());
  EXPECT_THROW(parse_pair("nu=[1]"), std::invalid_argument);
  EXPECT_THROW(parse_pair("nu=[1; mu=[]"), std::invalid_argument);
  EXPECT_THROW(parse_pair("nu=[a]; mu=[]"), std::invalid_argument);
}

TEST(Functionals, JsonRoundTrip)
{
  std::mt19937_64 rng(5);
  for (int e : {1, 2, 3})
    for (GroupKind k : {GroupKind::Sp, GroupKind::OOdd, GroupKind::OEven}) {
      const LieAlgebra& g = lie_algebra(k, 2, Field::standard(e));
      std::uniform_int_distribution<unsigned> d(0, g.field().order() - 1);
      for (int t = 0; t < 20; ++t) {
        Vec c(static_cast<std::size_t>(g.dim()));
        for (auto& x : c)
          x = static_cast<Scalar>(d(rng));
        const DualFunctional xi(g, c);
        const json j = functional_to_json(xi);
        const DualFunctional back = functional_from_json(json::parse(j.dump()));
        EXPECT_EQ(back.coords(), xi.coords());
      }
    }
}

TEST(Symbols, JsonRoundTrip)
{
  for (const auto& s : symp_enumerate_closed(4))
    EXPECT_EQ(to_string(symbol_from_json(symbol_to_json(s))), to_string(s));
  for (const auto& s : oodd_enumerate_closed(4))
    EXPECT_EQ(to_string(odd_symbol_from_json(symbol_to_json(s))), to_string(s));
  const SympSymbol labelled = parse_symp_symbol("(3)^2_2:d (1)^2_0:0");
  EXPECT_EQ(to_string(symbol_from_json(symbol_to_json(labelled))), to_string(labelled));
  const OddSymbol odd = parse_odd_symbol("[1] (1)_1:d (1)_1:0");
  EXPECT_EQ(to_string(odd_symbol_from_json(symbol_to_json(odd))), to_string(odd));
  EXPECT_THROW(eps_from_name("x"), std::invalid_argument);
}

TEST(Classification, JsonFields)
{
  const Field& f = Field::standard(2);
  const auto nf = build_normal_form(parse_symp_symbol("(2)^2_1:d (1)^2_0:0"), f);
  const json j = classification_to_json(classify(nf.witness, LabelMode::Rational));
  EXPECT_TRUE(j.at("nilpotent").get<bool>());
  EXPECT_EQ(j.at("symbol"), "(2)^2_1:d (1)^2_0:0");
  EXPECT_EQ(j.at("eps"), json::array({"delta", "0"}));
  EXPECT_EQ(j.at("centralizer").at("comp_group_rank"), 1);

  const auto odd = build_odd_normal_form(parse_odd_symbol("[1] (1)_1:0"), f);
  const json k = classification_to_json(classify(odd.witness, LabelMode::Rational));
  EXPECT_EQ(k.at("split").at("m"), 1);
  EXPECT_EQ(pair_from_json(k.at("split").at("pair")), parse_pair("nu=[1]; mu=[1]"));

  Mat x(f, 2, 2);
  x(0, 0) = 1;
  const json z = classification_to_json(classify(DualFunctional::from_matrix(lie_algebra(GroupKind::Sp, 1, f), x)));
  EXPECT_FALSE(z.at("nilpotent").get<bool>());
  EXPECT_FALSE(z.contains("symbol"));
}

TEST(EvenWitness, RoundTrip)
{
  for (int e : {1, 2}) {
    const Field& f = Field::standard(e);
    for (int n = 1; n <= 3; ++n)
      for (const auto& s : orth_enumerate_closed(n)) {
        const SympSymbol parsed = parse_orth_symbol(to_string(s));
        EXPECT_EQ(to_string(parsed), to_string(s));
        const DualFunctional xi = even_normal_form_witness(parsed.blocks, f);
        EXPECT_TRUE(is_nilpotent_functional(xi));
        EXPECT_EQ(to_string(classify_orth(build_module(xi))), to_string(s));
      }
  }
}

TEST(EvenWitness, RejectsBadInput)
{
  EXPECT_THROW(parse_orth_symbol("(2)^2_0"), std::invalid_argument);
  EXPECT_THROW(parse_orth_symbol("(2)^2_1 junk"), std::invalid_argument);
}
