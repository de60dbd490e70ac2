#include <random>

#include <catch_amalgamated.hpp>

#include "hochhom/koszul.hpp"
#include "hochhom/presets.hpp"

using namespace hochhom;

namespace {

std::vector<AlgebraSpec> presets()
{
    return {weyl_spec(1),          weyl_spec(2),         semiclassical_spec(2, 2),
            semiclassical_spec(2, 4), free_spec(2, 1),   free_spec(2, 0),
            free_spec(3, 1),       mixed_minimal_spec(2), mixed_minimal_spec(3),
            mixed_minimal_rational_spec(Rational(2))};
}

std::vector<AlgebraSpec> semiclassical_presets()
{
    return {semiclassical_spec(2, 2), semiclassical_spec(2, 4), semiclassical_rational_spec(2, Rational(2))};
}

template <typename F>
void for_generators(const AlgebraSpec& spec, int max_p, F&& fn)
{
    for (int p = 0; p <= max_p; ++p)
        for (int k = 0; k <= spec.dim(); ++k)
            for (const auto& g : generators_of(spec, p, k))
                fn(g);
}

ChainGenerator gen(const AlgebraSpec& spec, std::vector<int> exps, std::vector<int> wedge)
{
    return generator_from(spec, exps, wedge);
}

}   // namespace

TEST_CASE("Membership in C")
{
    AlgebraSpec weyl = weyl_spec(2);
    REQUIRE(is_in_C(weyl, {3, 1, 0, 2}));
    AlgebraSpec mm = mixed_minimal_spec(2);
    REQUIRE(is_in_C(mm, {1, 1, 2}));
    REQUIRE_FALSE(is_in_C(mm, {1, 1, 1}));
    REQUIRE_THROWS_AS(is_in_C(mm, {1, 1}), IndexOutOfRange);
    REQUIRE_THROWS_AS(is_in_C(mm, {1, -1, 0}), IndexOutOfRange);
}

TEST_CASE("Blockwise characterization of C agrees with the definition")
{
    std::mt19937 rng(17);
    for (const auto& spec : presets())
    {
        std::uniform_int_distribution<int> e(0, 4);
        for (int trial = 0; trial < 200; ++trial)
        {
            std::vector<int> rho(spec.dim());
            for (auto& x : rho)
                x = e(rng);
            REQUIRE(is_in_C(spec, rho) == is_in_C_blockwise(spec, rho));
        }
    }
}

TEST_CASE("Full differential examples")
{
    AlgebraSpec weyl = weyl_spec(1);
    REQUIRE(diff_full(weyl, gen(weyl, {0, 0}, {1, 1})).is_zero());
    ChainElement expected(gen(weyl, {0, 0}, {0, 0}), weyl.from_int(-1));
    REQUIRE(diff_full(weyl, gen(weyl, {0, 1}, {1, 0})) == expected);
    for (const auto& spec : presets())
        for (const auto& g : generators_of(spec, 3, 0))
            REQUIRE(diff_full(spec, g).is_zero());
}

TEST_CASE("Closed-form differential agrees with the generic route")
{
    for (const auto& spec : presets())
        for_generators(spec, 4, [&](const ChainGenerator& g) {
            REQUIRE(diff_full(spec, g) == diff_full_closed(spec, g));
        });
}

TEST_CASE("Differentials square to zero")
{
    for (const auto& spec : presets())
    {
        for_generators(spec, 4, [&](const ChainGenerator& g) {
            auto full = [&](const ChainGenerator& h) { return diff_full(spec, h); };
            auto sym = [&](const ChainGenerator& h) { return diff_symmetric(spec, h); };
            REQUIRE(apply_linear(full(g), full).is_zero());
            REQUIRE(apply_linear(sym(g), sym).is_zero());
            if (is_in_C(spec, g.rho()))
            {
                auto small = [&](const ChainGenerator& h) { return diff_small(spec, h); };
                REQUIRE(apply_linear(small(g), small).is_zero());
            }
            if (spec.r() == spec.n())
            {
                auto weyl = [&](const ChainGenerator& h) { return diff_weyl(h, spec.one()); };
                REQUIRE(apply_linear(weyl(g), weyl).is_zero());
            }
        });
    }
}

TEST_CASE("Full differential respects the total-degree filtration")
{
    for (const auto& spec : presets())
    {
        for_generators(spec, 4, [&](const ChainGenerator& g) {
            std::vector<int> rho = g.rho();
            for (const auto& [h, c] : diff_full(spec, g))
            {
                std::vector<int> rh = h.rho();
                bool same = rh == rho;
                bool lowered = false;
                for (int i = 0; i < spec.r(); ++i)
                {
                    std::vector<int> low = rho;
                    low[i] -= 1;
                    low[i + spec.r()] -= 1;
                    lowered = lowered || rh == low;
                }
                REQUIRE((same || lowered));
            }
        });
    }
}

TEST_CASE("Small differential examples")
{
    AlgebraSpec mm = mixed_minimal_spec(2);
    Scalar lam = mm.lambda(1, 0);
    REQUIRE(diff_small(mm, gen(mm, {0, 0, 1}, {1, 1, 1})).is_zero());
    REQUIRE(diff_small(mm, gen(mm, {0, 0, 3}, {1, 1, 1})).is_zero());
    REQUIRE_THROWS_AS(diff_small(mm, gen(mm, {0, 0, 2}, {1, 1, 1})), NotInSmallComplex);

    ChainElement expected;
    expected.add(gen(mm, {1, 0, 1}, {0, 1, 1}), -lam);
    expected.add(gen(mm, {0, 1, 1}, {1, 0, 1}), -lam);
    REQUIRE(diff_small(mm, gen(mm, {1, 1, 1}, {1, 1, 1})) == expected);
    REQUIRE_THROWS_AS(diff_small(mm, gen(mm, {0, 0, 0}, {1, 1, 1})), NotInSmallComplex);

    AlgebraSpec weyl = weyl_spec(1);
    ChainElement w;
    w.add(gen(weyl, {1, 0}, {0, 1}), weyl.from_int(-1));
    w.add(gen(weyl, {0, 1}, {1, 0}), weyl.from_int(-1));
    REQUIRE(diff_small(weyl, gen(weyl, {1, 1}, {1, 1})) == w);
}

TEST_CASE("Small differential is the restriction of the full one modulo the filtration")
{
    for (const auto& spec : presets())
    {
        for_generators(spec, 4, [&](const ChainGenerator& g) {
            if (!is_in_C(spec, g.rho()))
                return;
            ChainElement small = diff_small(spec, g);
            ChainElement lowered;
            for (const auto& [h, c] : diff_full(spec, g))
                if (h.rho() != g.rho())
                    lowered.add(h, c);
            REQUIRE(small == lowered);
            for (const auto& [h, c] : small)
            {
                REQUIRE(is_in_C(spec, h.rho()));
                REQUIRE(h.weight() == g.weight());
                REQUIRE(h.quantum_degree() == g.quantum_degree());
            }
        });
    }
}

TEST_CASE("Symmetric differential examples")
{
    AlgebraSpec plane(2, 0, RationalModel{{{Rational(1), Rational(2)}, {Rational(1, 2), Rational(1)}}});
    ChainElement expected(gen(plane, {1, 1}, {0, 0}), plane.from_rational(Rational(-1, 2)));
    REQUIRE(diff_symmetric(plane, gen(plane, {0, 1}, {1, 0})) == expected);
    REQUIRE(diff_symmetric(plane, gen(plane, {2, 3}, {0, 0})).is_zero());
    AlgebraSpec weyl = weyl_spec(2);
    for_generators(weyl, 3, [&](const ChainGenerator& g) { REQUIRE(diff_symmetric(weyl, g).is_zero()); });
    for (const auto& spec : presets())
        for_generators(spec, 3, [&](const ChainGenerator& g) {
            for (const auto& [h, c] : diff_symmetric(spec, g))
                REQUIRE(h.rho() == g.rho());
        });
}

TEST_CASE("Weyl differential examples")
{
    AlgebraSpec weyl = weyl_spec(1);
    REQUIRE(diff_weyl(gen(weyl, {0, 1}, {1, 0})) == ChainElement(gen(weyl, {0, 0}, {0, 0}), weyl.from_int(-1)));
    REQUIRE(diff_weyl(gen(weyl, {1, 0}, {0, 1})) == ChainElement(gen(weyl, {0, 0}, {0, 0}), weyl.one()));
    REQUIRE(diff_weyl(gen(weyl, {0, 0}, {1, 1})).is_zero());
    AlgebraSpec free = free_spec(2, 1);
    REQUIRE_THROWS_AS(diff_weyl(gen(free, {0, 0, 0}, {1, 0, 0})), NotSemiClassical);
}

TEST_CASE("Strand enumeration")
{
    AlgebraSpec weyl = weyl_spec(1);
    StrandComplex s = enumerate_strand(weyl, -2);
    REQUIRE(s.size(0) == 0);
    REQUIRE(s.size(1) == 0);
    REQUIRE(s.size(2) == 1);
    REQUIRE(to_string(weyl, s.generators[2][0]) == "1 (x) x1^y1");

    AlgebraSpec mm = mixed_minimal_spec(2);
    StrandComplex t = enumerate_strand(mm, -2);
    REQUIRE(t.generators[3] == std::vector<ChainGenerator>{gen(mm, {0, 0, 1}, {1, 1, 1})});
    REQUIRE(to_string(mm, t.generators[3][0]) == "y2 (x) x1^y1^y2");

    StrandComplex empty = enumerate_strand(mm, -4);
    for (int k = 0; k <= mm.dim(); ++k)
        REQUIRE(empty.size(k) == 0);

    for (const auto& spec : presets())
    {
        for (int w = -spec.dim(); w <= 2; ++w)
        {
            StrandComplex c = enumerate_strand(spec, w);
            for (int k = 0; k <= spec.dim(); ++k)
            {
                REQUIRE(std::is_sorted(c.generators[k].begin(), c.generators[k].end()));
                for (const auto& g : c.generators[k])
                {
                    REQUIRE(is_in_C(spec, g.rho()));
                    REQUIRE(g.weight() == w);
                }
                if (k + 1 <= spec.dim())
                    REQUIRE(c.differentials[k].multiply(c.differentials[k + 1]).is_zero_matrix());
            }
        }
    }
}

TEST_CASE("Generator text format")
{
    AlgebraSpec spec = free_spec(2, 1);
    REQUIRE(to_string(spec, gen(spec, {2, 1, 0}, {1, 1, 1})) == "x1^2*y1 (x) x1^y1^y2");
    REQUIRE(to_string(spec, gen(spec, {0, 0, 0}, {0, 0, 0})) == "1 (x) 1");
    ChainElement c(gen(spec, {0, 1, 0}, {1, 0, 0}), spec.from_int(-2));
    REQUIRE(to_string(spec, c) == "-2*y1 (x) x1");
    REQUIRE_THROWS_AS(gen(spec, {0, 0, 0}, {2, 0, 0}), IndexOutOfRange);
}

TEST_CASE("Weyl comparison maps")
{
    AlgebraSpec weyl = weyl_spec(2);
    for_generators(weyl, 3, [&](const ChainGenerator& g) { REQUIRE(weyl_rescaling(weyl, g).is_one()); });

    AlgebraSpec sc = semiclassical_spec(2, 2);
    REQUIRE(weyl_rescaling(sc, make_generator(sc, {0, 0}, {0, 0}, {1, 0}, {0, 0})).is_one());
    REQUIRE_THROWS_AS(weyl_rescaling(free_spec(2, 1), gen(free_spec(2, 1), {0, 0, 0}, {0, 0, 0})),
                      NotSemiClassical);

    for (const auto& spec : semiclassical_presets())
    {
        auto small = [&](const ChainGenerator& h) { return diff_small(spec, h); };
        auto dw = [&](const ChainGenerator& h) { return diff_weyl(h, spec.one()); };
        auto f = [&](const ChainGenerator& h) { return weyl_f(spec, h); };
        auto g = [&](const ChainGenerator& h) { return weyl_g(spec, h); };
        for_generators(spec, 4, [&](const ChainGenerator& x) {
            if (!is_in_C(spec, x.rho()))
            {
                REQUIRE(g(x).is_zero());
                return;
            }
            REQUIRE(apply_linear(f(x), g) == ChainElement(x, spec.one()));
            REQUIRE(apply_linear(small(x), f) == apply_linear(f(x), dw));
            REQUIRE(apply_linear(dw(x), g) == apply_linear(g(x), small));
            WeylComparison cmp = weyl_compare_maps(spec, x);
            REQUIRE(cmp.f_image == f(x));
            REQUIRE(cmp.rescaling * cmp.rescaling.inverse() == spec.one());
        });
    }
}

TEST_CASE("Braiding examples")
{
    AlgebraSpec mm = mixed_minimal_rational_spec(Rational(3));
    TensorElement xz(TensorWord{0, 2}, mm.one());
    TensorElement expected(TensorWord{2, 0}, mm.lambda_tilde(0, 2));
    REQUIRE(braid(mm, xz, 1) == expected);
    REQUIRE(mm.lambda_tilde(0, 2) == mm.lambda(1, 0));
    TensorElement xx(TensorWord{0, 0}, mm.one());
    REQUIRE(braid(mm, xx, 1) == xx);

    TensorElement w(TensorWord{0, 1, 2}, mm.one());
    for (const auto& [word, c] : pi_front(mm, w, 3))
        REQUIRE(word == TensorWord{2, 0, 1});
    for (const auto& [word, c] : pi_back(mm, w, 1))
        REQUIRE(word == TensorWord{1, 2, 0});

    AlgebraSpec weyl = weyl_spec(1);
    REQUIRE(braiding_f_prime(weyl, {0, 1}).value.is_zero());
    REQUIRE(bilinear_form(weyl, 0, 1) == 1);
    REQUIRE(bilinear_form(weyl, 1, 0) == -1);
    REQUIRE(bilinear_form(weyl, 0, 0) == 0);
    REQUIRE_THROWS_AS(braiding_f_prime(weyl, TensorWord(9, 0)), WordTooLong);
    REQUIRE_THROWS_AS(braiding_f_prime(weyl, TensorWord{0}), InvalidSpec);
}

TEST_CASE("f' vanishes on short words")
{
    for (const auto& spec : presets())
    {
        if (spec.dim() > 4)
            continue;
        const int dim = spec.dim();
        for (int len = 2; len <= 3; ++len)
        {
            TensorWord word(len, 0);
            while (true)
            {
                REQUIRE(braiding_f_prime(spec, word).value.is_zero());
                int pos = len - 1;
                while (pos >= 0 && ++word[pos] == dim)
                    word[pos--] = 0;
                if (pos < 0)
                    break;
            }
        }
    }
}
