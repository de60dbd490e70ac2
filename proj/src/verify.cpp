#include "hochhom/verify.hpp"

#include <functional>

namespace hochhom {

namespace {

void for_generators(const AlgebraSpec& spec, int max_p, const std::function<bool(const ChainGenerator&)>& fn)
{
    for (int p = 0; p <= max_p; ++p)
        for (int k = 0; k <= spec.dim(); ++k)
            for (const auto& g : generators_of(spec, p, k))
                if (!fn(g))
                    return;
}

bool fail(SuiteResult& r, const std::string& witness)
{
    r.pass = false;
    r.witness = witness;
    return false;
}

}   // namespace

SuiteResult verify_complex(const AlgebraSpec& spec, int square_bound, int closed_bound)
{
    SuiteResult r;
    r.name = "complex";
    const bool semi = spec.r() == spec.n();
    auto full = [&](const ChainGenerator& h) { return diff_full(spec, h); };
    auto sym = [&](const ChainGenerator& h) { return diff_symmetric(spec, h); };
    auto small = [&](const ChainGenerator& h) { return diff_small(spec, h); };
    auto weyl = [&](const ChainGenerator& h) { return diff_weyl(h, spec.one()); };
    for_generators(spec, square_bound, [&](const ChainGenerator& g) {
        const std::string at = to_string(spec, g);
        ++r.checked;
        if (!apply_linear(full(g), full).is_zero())
            return fail(r, "full d^2 != 0 at " + at);
        if (!apply_linear(sym(g), sym).is_zero())
            return fail(r, "symmetric d^2 != 0 at " + at);
        if (is_in_C(spec, g.rho()) && !apply_linear(small(g), small).is_zero())
            return fail(r, "small d^2 != 0 at " + at);
        if (semi && !apply_linear(weyl(g), weyl).is_zero())
            return fail(r, "Weyl d^2 != 0 at " + at);
        if (g.poly_degree() <= closed_bound && full(g) != diff_full_closed(spec, g))
            return fail(r, "closed form differs at " + at);
        return true;
    });
    return r;
}

SuiteResult verify_chainmaps(const AlgebraSpec& spec, int bound)
{
    SuiteResult r;
    r.name = "chainmaps";
    if (spec.r() != spec.n())
    {
        r.applicable = false;
        return r;
    }
    auto small = [&](const ChainGenerator& h) { return diff_small(spec, h); };
    auto dw = [&](const ChainGenerator& h) { return diff_weyl(h, spec.one()); };
    auto f = [&](const ChainGenerator& h) { return weyl_f(spec, h); };
    auto g = [&](const ChainGenerator& h) { return weyl_g(spec, h); };
    for_generators(spec, bound, [&](const ChainGenerator& x) {
        if (!is_in_C(spec, x.rho()))
            return true;
        const std::string at = to_string(spec, x);
        ++r.checked;
        if (apply_linear(f(x), g) != ChainElement(x, spec.one()))
            return fail(r, "g o f != id at " + at);
        if (apply_linear(small(x), f) != apply_linear(f(x), dw))
            return fail(r, "f o d != d_W o f at " + at);
        if (apply_linear(dw(x), g) != apply_linear(g(x), small))
            return fail(r, "g o d_W != d o g at " + at);
        return true;
    });
    return r;
}

SuiteResult verify_braiding(const AlgebraSpec& spec, int max_length)
{
    SuiteResult r;
    r.name = "braiding";
    const int dim = spec.dim();
    for (int len = 2; len <= max_length; ++len)
    {
        TensorWord word(len, 0);
        while (true)
        {
            ++r.checked;
            BraidingResult b = braiding_f_prime(spec, word, max_length);
            if (!b.value.is_zero())
            {
                fail(r, "f' = " + to_string(spec, b.value) + " on " + to_string(spec, TensorElement(word, spec.one())));
                return r;
            }
            int pos = len - 1;
            while (pos >= 0 && ++word[pos] == dim)
                word[pos--] = 0;
            if (pos < 0)
                break;
        }
    }
    return r;
}

std::vector<std::vector<int>> multidegrees_up_to(int dim, int bound)
{
    std::vector<std::vector<int>> out;
    std::vector<int> rho(dim, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == dim)
        {
            out.push_back(rho);
            return;
        }
        for (int a = 0; a <= left; ++a)
        {
            rho[i] = a;
            rec(i + 1, left - a);
        }
        rho[i] = 0;
    };
    rec(0, bound);
    return out;
}

SuiteResult verify_quotient(const AlgebraSpec& spec, int bound)
{
    SuiteResult r;
    r.name = "quotient";
    for (const auto& rho : multidegrees_up_to(spec.dim(), bound))
    {
        if (is_in_C(spec, rho))
            continue;
        ++r.checked;
        AcyclicityResult a = quotient_strand_acyclicity(spec, rho);
        if (!a.pass)
        {
            std::string label;
            for (std::size_t i = 0; i < rho.size(); ++i)
                label += (i ? "," : "") + std::to_string(rho[i]);
            fail(r, "homology in degree " + std::to_string(a.failing_degree) + " at rho=(" + label +
                        "): " + to_string(spec, a.witness));
            return r;
        }
    }
    return r;
}

SuiteResult verify_duality(const AlgebraSpec& spec, int bound)
{
    SuiteResult r;
    r.name = "duality";
    for (int degree = 0; degree <= spec.dim(); ++degree)
    {
        ++r.checked;
        DualityCheck c = duality_identity_check(spec, degree, bound);
        if (!c.pass)
        {
            fail(r, c.message);
            return r;
        }
    }
    return r;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"complex", "chainmaps", "braiding", "quotient", "duality"};
    return names;
}

}   // namespace hochhom
