#include "hochhom/presets.hpp"

namespace hochhom {

namespace {

RationalModel upper_rational(int n, const std::vector<Rational>& upper)
{
    RationalModel m;
    m.values.assign(n, std::vector<Rational>(n, Rational(1)));
    std::size_t t = 0;
    for (int i = 0; i < n; ++i)
    {
        for (int j = i + 1; j < n; ++j, ++t)
        {
            m.values[i][j] = upper[t];
            m.values[j][i] = 1 / upper[t];
        }
    }
    return m;
}

}   // namespace

AlgebraSpec weyl_spec(int n)
{
    return AlgebraSpec(n, n, upper_rational(n, std::vector<Rational>(n * (n - 1) / 2, Rational(1))));
}

AlgebraSpec semiclassical_spec(int n, int order)
{
    CyclotomicModel m;
    m.order = order;
    m.exponents.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
    {
        for (int j = i + 1; j < n; ++j)
        {
            m.exponents[i][j] = 1;
            m.exponents[j][i] = -1;
        }
    }
    return AlgebraSpec(n, n, m);
}

AlgebraSpec semiclassical_rational_spec(int n, const Rational& value)
{
    return AlgebraSpec(n, n, upper_rational(n, std::vector<Rational>(n * (n - 1) / 2, value)));
}

AlgebraSpec free_spec(int n, int r)
{
    std::vector<Rational> primes;
    for (int p = 2; primes.size() < static_cast<std::size_t>(n * (n - 1) / 2); ++p)
    {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            prime = prime && (p % d != 0);
        if (prime)
            primes.emplace_back(p);
    }
    return AlgebraSpec(n, r, upper_rational(n, primes));
}

AlgebraSpec mixed_minimal_spec(int order)
{
    CyclotomicModel m;
    m.order = order;
    m.exponents = {{0, -1}, {1, 0}};
    return AlgebraSpec(2, 1, m);
}

AlgebraSpec mixed_minimal_rational_spec(const Rational& value)
{
    return AlgebraSpec(2, 1, upper_rational(2, {1 / value}));
}

}   // namespace hochhom
