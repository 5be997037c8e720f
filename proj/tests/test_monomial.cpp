#include "lcstruct/error.hpp"
#include "lcstruct/monomial.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace lcstruct;
using lcstruct::testing::ideal;

namespace {

Errc validation_error(int n, std::vector<Generator> gens) {
  try {
    CMonomialIdeal::validate(n, std::move(gens));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a validation error";
  return Errc::BadInput;
}

// m lies in the radical iff m^k lies in the ideal for k = max exponent.
bool in_radical_brute(const CMonomialIdeal& I, const Exponents& m) {
  const int k = std::max(1, lcstruct::testing::max_exponent(I));
  Exponents power = m;
  for (auto& e : power) e *= k;
  return lcstruct::testing::in_monomial_ideal(lcstruct::testing::monomials_of(I), power);
}

void expect_same_radical(const CMonomialIdeal& I, const CMonomialIdeal& radical, int bound) {
  lcstruct::testing::for_each_monomial(I.variables(), bound, [&](const Exponents& m) {
    EXPECT_EQ(in_radical_brute(I, m), contains_monomial(radical, m)) << format_monomial(m);
  });
}

// Intersection of the components equals the ideal on [0, bound]^n.
void expect_decomposition(const CMonomialIdeal& I, const std::vector<IrreducibleComponent>& parts,
                          int bound) {
  const auto gens = lcstruct::testing::monomials_of(I);
  lcstruct::testing::for_each_monomial(I.variables(), bound, [&](const Exponents& m) {
    bool in_all = true;
    for (const auto& q : parts)
      in_all = in_all && lcstruct::testing::in_monomial_ideal(lcstruct::testing::component_generators(q), m);
    EXPECT_EQ(lcstruct::testing::in_monomial_ideal(gens, m), in_all) << format_monomial(m);
  });
}

}  // namespace

TEST(Validate, AcceptsCoefficientMonomials) {
  const auto I = ideal(1, {{2, {1}}});
  EXPECT_EQ(I.size(), 1u);
  EXPECT_FALSE(I.is_usual());
  EXPECT_TRUE(I.unit_generators().empty());
}

TEST(Validate, FlagsUnitCoefficients) {
  const auto I = ideal(2, {{1, {1, 0}}});
  EXPECT_TRUE(I.is_usual());
  EXPECT_EQ(I.unit_generators(), std::vector<std::size_t>{0});
}

TEST(Validate, NormalizesSigns) {
  const auto I = ideal(2, {{-1, {2, 1}}, {-6, {0, 1}}});
  EXPECT_EQ(I[0].coefficient, 1);
  EXPECT_EQ(I[1].coefficient, 6);
  EXPECT_TRUE(ideal(2, {{-1, {2, 1}}}).is_usual());
}

TEST(Validate, Errors) {
  EXPECT_EQ(validation_error(1, {{Int(3), {0}}}), Errc::ConstantMonomial);
  EXPECT_EQ(validation_error(1, {{Int(0), {1}}}), Errc::ZeroCoefficient);
  EXPECT_EQ(validation_error(2, {}), Errc::EmptyGeneratorList);
  EXPECT_EQ(validation_error(2, {{Int(1), {1}}}), Errc::LengthMismatch);
}

TEST(Validate, NamesOffendingGenerator) {
  try {
    CMonomialIdeal::validate(2, {{Int(1), {1, 0}}, {Int(5), {0, 0}}});
    FAIL();
  } catch (const Error& e) {
    ASSERT_TRUE(e.generator().has_value());
    EXPECT_EQ(*e.generator(), 1u);
    EXPECT_NE(std::string(e.what()).find("generator 2"), std::string::npos);
  }
}

TEST(IsUsual, Examples) {
  EXPECT_TRUE(ideal(2, {{1, {1, 0}}, {1, {0, 1}}}).is_usual());
  EXPECT_FALSE(ideal(2, {{2, {1, 0}}, {1, {0, 1}}}).is_usual());
  EXPECT_TRUE(ideal(2, {{-1, {2, 1}}}).is_usual());
}

TEST(Simplify, MergesEqualMonomialsByGcd) {
  const auto I = ideal(2, {{4, {1, 0}}, {6, {1, 0}}, {3, {0, 1}}});
  const auto S = I.simplified();
  ASSERT_EQ(S.size(), 2u);
  EXPECT_EQ(S[0].coefficient, 2);
  EXPECT_EQ(S[1].coefficient, 3);
  EXPECT_EQ(I.size(), 3u);  // presentation preserved unless asked
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical_usual(ideal(2, {{1, {2, 1}}})), ideal(2, {{1, {1, 1}}}));
  const auto I = ideal(2, {{1, {2, 0}}, {1, {1, 3}}});
  const auto R = radical_usual(I);
  EXPECT_EQ(R, ideal(2, {{1, {1, 0}}}));
  expect_same_radical(I, R, 6);
  EXPECT_EQ(radical_usual(ideal(1, {{1, {1}}})), ideal(1, {{1, {1}}}));
}

TEST(Radical, RejectsNonUsual) {
  EXPECT_THROW(radical_usual(ideal(1, {{2, {1}}})), Error);
}

TEST(PrimaryDecompose, Examples) {
  using V = std::vector<IrreducibleComponent>;
  const auto xy = ideal(2, {{1, {1, 1}}});
  EXPECT_EQ(primary_decompose(xy), (V{{0, 1}, {1, 0}}));
  expect_decomposition(xy, primary_decompose(xy), 4);

  const auto mixed = ideal(2, {{1, {2, 0}}, {1, {1, 1}}});
  EXPECT_EQ(primary_decompose(mixed), (V{{1, 0}, {2, 1}}));
  expect_decomposition(mixed, primary_decompose(mixed), 4);

  EXPECT_EQ(primary_decompose(ideal(1, {{1, {3}}})), (V{{3}}));
}

TEST(PrimaryDecompose, RejectsNonUsual) {
  EXPECT_THROW(primary_decompose(ideal(1, {{2, {1}}})), Error);
}

TEST(AssociatedPrimes, Examples) {
  using P = std::vector<MonomialPrime>;
  EXPECT_EQ(associated_primes(ideal(2, {{1, {1, 1}}})), (P{{{0}}, {{1}}}));
  EXPECT_EQ(associated_primes(ideal(1, {{1, {1}}})), (P{{{0}}}));
  EXPECT_EQ(associated_primes(ideal(2, {{1, {2, 0}}, {1, {1, 1}}, {1, {0, 3}}})), (P{{{0, 1}}}));
}

TEST(Blocks, Enumeration) {
  const auto one = blocks(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].label(), "-");
  EXPECT_EQ(one[0].representative(), Exponents{-1});
  EXPECT_EQ(one[1].label(), "+");
  EXPECT_EQ(one[1].representative(), Exponents{0});
  EXPECT_EQ(blocks(2).size(), 4u);
  EXPECT_EQ(blocks(3).size(), 8u);
  EXPECT_TRUE((Block{{true, false}}.contains({5, -3})));
  EXPECT_FALSE((Block{{true, false}}.contains({5, 0})));
}

TEST(Blocks, PartitionDegrees) {
  for (int n = 1; n <= 3; ++n) {
    const auto all = blocks(n);
    lcstruct::testing::for_each_monomial(n, 6, [&](const Exponents& shifted) {
      Exponents u = shifted;
      for (auto& x : u) x -= 3;
      int hits = 0;
      for (const auto& b : all) hits += b.contains(u);
      EXPECT_EQ(hits, 1);
      EXPECT_TRUE(block_of(u).contains(u));
    });
  }
}

TEST(Property, DecompositionMatchesBruteForce) {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 200; ++trial) {
    const auto I = lcstruct::testing::random_usual_ideal(rng, 3, 4, 3);
    const auto parts = primary_decompose(I);
    for (const auto& q : parts) {
      EXPECT_FALSE(support(q).empty());
    }
    // irredundant: no component contains another
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = 0; b < parts.size(); ++b) {
        if (a == b) continue;
        bool contains = true;
        for (const auto& g : lcstruct::testing::component_generators(parts[b]))
          contains = contains && lcstruct::testing::in_monomial_ideal(
                                     lcstruct::testing::component_generators(parts[a]), g);
        EXPECT_FALSE(contains);
      }
    expect_decomposition(I, parts, 2 * lcstruct::testing::max_exponent(I) + 1);
  }
}

TEST(Property, RadicalIsIntersectionOfAssociatedPrimes) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto I = lcstruct::testing::random_usual_ideal(rng, 3, 4, 3);
    const auto R = radical_usual(I);
    const auto primes = associated_primes(I);
    lcstruct::testing::for_each_monomial(I.variables(), 2 * lcstruct::testing::max_exponent(I) + 1,
                                         [&](const Exponents& m) {
      bool in_all = true;
      for (const auto& P : primes) {
        bool hit = false;
        for (int v : P.variables) hit = hit || m[v] > 0;
        in_all = in_all && hit;
      }
      EXPECT_EQ(contains_monomial(R, m), in_all);
      EXPECT_EQ(contains_monomial(R, m), in_radical_brute(I, m));
    });
  }
}
