#include <random>

#include <catch_amalgamated.hpp>

#include "hochhom/algebra.hpp"
#include "hochhom/presets.hpp"
#include "support/word_rewriter.hpp"

using namespace hochhom;

namespace {

PbwMonomial mono(const AlgebraSpec& spec, std::vector<int> exps)
{
    return monomial_from_exponents(spec, exps);
}

PbwMonomial random_monomial(std::mt19937& rng, const AlgebraSpec& spec, int max_exp)
{
    std::uniform_int_distribution<int> e(0, max_exp);
    std::vector<int> exps(spec.dim());
    for (auto& x : exps)
        x = e(rng);
    return mono(spec, exps);
}

std::vector<AlgebraSpec> presets()
{
    return {weyl_spec(1),          weyl_spec(2),         semiclassical_spec(2, 4),
            free_spec(2, 1),       free_spec(2, 0),      free_spec(3, 1),
            mixed_minimal_spec(3), mixed_minimal_rational_spec(Rational(2))};
}

}   // namespace

TEST_CASE("Weyl pair reordering")
{
    AlgebraSpec spec = weyl_spec(1);
    PbwElement y = generator_element(spec, 1), x = generator_element(spec, 0);
    PbwElement expected;
    expected.add(mono(spec, {1, 1}), spec.one());
    expected.add(mono(spec, {0, 0}), spec.from_int(-1));
    REQUIRE(normal_mul(spec, y, x) == expected);
    REQUIRE(to_string(spec, normal_mul(spec, y, x)) == "-1 + x1*y1");

    PbwElement y2 = monomial_element(spec, mono(spec, {0, 2}));
    PbwElement x2 = monomial_element(spec, mono(spec, {2, 0}));
    PbwElement expected2;
    expected2.add(mono(spec, {2, 2}), spec.one());
    expected2.add(mono(spec, {1, 1}), spec.from_int(-4));
    expected2.add(mono(spec, {0, 0}), spec.from_int(2));
    REQUIRE(normal_mul(spec, y2, x2) == expected2);
}

TEST_CASE("q-commutation in the mixed minimal algebra")
{
    Rational lam(5);
    AlgebraSpec spec = mixed_minimal_rational_spec(lam);
    PbwElement x = generator_element(spec, 0), z = generator_element(spec, 2);
    PbwElement expected(mono(spec, {1, 0, 1}), spec.from_rational(1 / lam));
    REQUIRE(normal_mul(spec, z, x) == expected);
    REQUIRE(to_string(spec, normal_mul(spec, z, x)) == "1/5*x1*y2");
}

TEST_CASE("Commutator examples")
{
    AlgebraSpec weyl = weyl_spec(1);
    REQUIRE(commutator_with_generator(weyl, 0, generator_element(weyl, 1)) ==
            monomial_element(weyl, unit_monomial(weyl)));

    Rational lam(3);
    AlgebraSpec spec = mixed_minimal_rational_spec(lam);
    REQUIRE(commutator_with_generator(spec, 2, monomial_element(spec, mono(spec, {1, 1, 1}))).is_zero());
    PbwElement expected(mono(spec, {1, 0, 1}), spec.from_rational(1 - 1 / lam));
    REQUIRE(commutator_with_generator(spec, 0, generator_element(spec, 2)) == expected);
    REQUIRE_THROWS_AS(commutator_with_generator(spec, 3, expected), IndexOutOfRange);
}

TEST_CASE("Defining relations hold for every generator pair")
{
    for (const auto& spec : presets())
    {
        for (int g = 0; g < spec.dim(); ++g)
        {
            for (int h = 0; h < spec.dim(); ++h)
            {
                PbwElement vg = generator_element(spec, g), vh = generator_element(spec, h);
                PbwElement lhs = normal_mul(spec, vg, vh);
                PbwElement rhs = normal_mul(spec, vh, vg).scaled(spec.lambda_tilde(g, h));
                if (g < spec.r() && h == g + spec.r())
                    rhs.add(unit_monomial(spec), spec.one());
                if (h < spec.r() && g == h + spec.r())
                    rhs.add(unit_monomial(spec), spec.from_int(-1));
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("Normal product agrees with single-relation rewriting")
{
    std::mt19937 rng(11);
    for (const auto& spec : presets())
    {
        for (int trial = 0; trial < 30; ++trial)
        {
            PbwMonomial a = random_monomial(rng, spec, 3), b = random_monomial(rng, spec, 3);
            REQUIRE(monomial_product(spec, a, b) == oracle::multiply(spec, a, b));
        }
    }
}

TEST_CASE("Associativity on randomized monomial triples")
{
    std::mt19937 rng(5);
    for (const auto& spec : presets())
    {
        for (int trial = 0; trial < 15; ++trial)
        {
            PbwElement a = monomial_element(spec, random_monomial(rng, spec, 4));
            PbwElement b = monomial_element(spec, random_monomial(rng, spec, 4));
            PbwElement c = monomial_element(spec, random_monomial(rng, spec, 4));
            REQUIRE(normal_mul(spec, normal_mul(spec, a, b), c) ==
                    normal_mul(spec, a, normal_mul(spec, b, c)));
        }
    }
}

TEST_CASE("Top-degree part is the quantum affine product")
{
    std::mt19937 rng(3);
    for (const auto& spec : presets())
    {
        for (int trial = 0; trial < 30; ++trial)
        {
            PbwMonomial a = random_monomial(rng, spec, 3), b = random_monomial(rng, spec, 3);
            PbwElement prod = monomial_product(spec, a, b);
            REQUIRE(degree(prod) == a.degree() + b.degree());
            REQUIRE(top_part(prod) == oracle::multiply(spec, a, b, false));
        }
    }
}

TEST_CASE("Mixed minimal commutators match the closed formulas")
{
    for (const AlgebraSpec& spec : {mixed_minimal_spec(2), mixed_minimal_spec(3),
                                    mixed_minimal_rational_spec(Rational(2))})
    {
        Scalar lam = spec.lambda(1, 0);
        for (int a1 = 0; a1 <= 4; ++a1)
        {
            for (int a2 = 0; a2 <= 4; ++a2)
            {
                for (int a3 = 0; a3 <= 4; ++a3)
                {
                    PbwElement m = monomial_element(spec, mono(spec, {a1, a2, a3}));

                    PbwElement cx;
                    cx.add(mono(spec, {a1 + 1, a2, a3}), spec.one() - lam.pow(-a3));
                    if (a2 > 0)
                        cx.add(mono(spec, {a1, a2 - 1, a3}), lam.pow(-a3) * spec.from_int(a2));
                    REQUIRE(commutator_with_generator(spec, 0, m) == cx);

                    PbwElement cy;
                    cy.add(mono(spec, {a1, a2 + 1, a3}), spec.one() - lam.pow(a3));
                    if (a1 > 0)
                        cy.add(mono(spec, {a1 - 1, a2, a3}), spec.from_int(-a1));
                    REQUIRE(commutator_with_generator(spec, 1, m) == cy);

                    PbwElement cz;
                    cz.add(mono(spec, {a1, a2, a3 + 1}), lam.pow(a2 - a1) - spec.one());
                    REQUIRE(commutator_with_generator(spec, 2, m) == cz);
                }
            }
        }
    }
}

TEST_CASE("Monomial text format and enumeration")
{
    AlgebraSpec spec = free_spec(2, 1);
    REQUIRE(to_string(spec, mono(spec, {2, 1, 0})) == "x1^2*y1");
    REQUIRE(to_string(spec, unit_monomial(spec)) == "1");
    REQUIRE(to_string(spec, PbwElement()) == "0");
    auto deg2 = monomials_of_degree(spec, 2);
    REQUIRE(deg2.size() == 6);
    REQUIRE(std::is_sorted(deg2.begin(), deg2.end()));
    REQUIRE(monomials_of_degree(spec, 0).size() == 1);
    REQUIRE_THROWS_AS(make_monomial(spec, {1}, {1}), IndexOutOfRange);
}
