#include "hochhom/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hochhom {

int PbwMonomial::degree() const
{
    return std::accumulate(alpha.begin(), alpha.end(), 0) +
           std::accumulate(beta.begin(), beta.end(), 0);
}

int PbwMonomial::exponent(int v) const
{
    int r = static_cast<int>(alpha.size());
    return v < r ? alpha[v] : beta[v - r];
}

void PbwMonomial::set_exponent(int v, int e)
{
    int r = static_cast<int>(alpha.size());
    if (v < r)
        alpha[v] = e;
    else
        beta[v - r] = e;
}

PbwMonomial unit_monomial(const AlgebraSpec& spec)
{
    return PbwMonomial{std::vector<int>(spec.r(), 0), std::vector<int>(spec.n(), 0)};
}

PbwMonomial make_monomial(const AlgebraSpec& spec, std::vector<int> alpha, std::vector<int> beta)
{
    if (alpha.size() != static_cast<std::size_t>(spec.r()) ||
        beta.size() != static_cast<std::size_t>(spec.n()))
        throw IndexOutOfRange("monomial exponent vectors have the wrong length");
    for (int e : alpha)
        if (e < 0)
            throw IndexOutOfRange("negative exponent");
    for (int e : beta)
        if (e < 0)
            throw IndexOutOfRange("negative exponent");
    return PbwMonomial{std::move(alpha), std::move(beta)};
}

PbwMonomial monomial_from_exponents(const AlgebraSpec& spec, const std::vector<int>& exps)
{
    if (exps.size() != static_cast<std::size_t>(spec.dim()))
        throw IndexOutOfRange("exponent vector has the wrong length");
    return make_monomial(spec, std::vector<int>(exps.begin(), exps.begin() + spec.r()),
                         std::vector<int>(exps.begin() + spec.r(), exps.end()));
}

PbwElement monomial_element(const AlgebraSpec& spec, const PbwMonomial& m)
{
    return PbwElement(m, spec.one());
}

PbwElement generator_element(const AlgebraSpec& spec, int v)
{
    if (v < 0 || v >= spec.dim())
        throw IndexOutOfRange("generator index out of range");
    PbwMonomial m = unit_monomial(spec);
    m.set_exponent(v, 1);
    return monomial_element(spec, m);
}

Integer binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Integer c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}

Integer factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

PbwElement monomial_product(const AlgebraSpec& spec, const PbwMonomial& a, const PbwMonomial& b)
{
    const int r = spec.r();
    const int n = spec.n();

    struct Partial
    {
        Integer coef;
        ParamMonomial q;
        std::vector<int> xs;
        std::vector<int> ys;
    };

    // y^beta(a) x^alpha(b): carry each x_i^c leftwards through the y-block
    std::vector<Partial> cur{{Integer(1), spec.unit_monomial(), std::vector<int>(r, 0), a.beta}};
    for (int i = 0; i < r; ++i)
    {
        const int c = b.alpha[i];
        if (c == 0)
            continue;
        std::vector<Partial> next;
        for (const auto& t : cur)
        {
            ParamMonomial q = t.q;
            for (int j = i + 1; j < n; ++j)
                spec.multiply_tilde(q, r + j, i, static_cast<long>(t.ys[j]) * c);
            const int bb = t.ys[i];
            for (int s = 0; s <= std::min(bb, c); ++s)
            {
                Integer k = factorial(s) * binomial(bb, s) * binomial(c, s);
                if (s % 2 == 1)
                    k = -k;
                Partial p{t.coef * k, q, t.xs, t.ys};
                for (int j = 0; j < i; ++j)
                    spec.multiply_tilde(p.q, r + j, i, static_cast<long>(t.ys[j]) * (c - s));
                p.xs[i] = c - s;
                p.ys[i] = bb - s;
                next.push_back(std::move(p));
            }
        }
        cur = std::move(next);
    }

    PbwElement out;
    for (auto& t : cur)
    {
        PbwMonomial m = unit_monomial(spec);
        for (int i = 0; i < r; ++i)
        {
            for (int j = i + 1; j < r; ++j)
                spec.multiply_tilde(t.q, j, i, static_cast<long>(a.alpha[j]) * t.xs[i]);
            m.alpha[i] = a.alpha[i] + t.xs[i];
        }
        for (int i = 0; i < n; ++i)
        {
            for (int j = i + 1; j < n; ++j)
                spec.multiply_tilde(t.q, r + j, r + i, static_cast<long>(t.ys[j]) * b.beta[i]);
            m.beta[i] = t.ys[i] + b.beta[i];
        }
        out.add(m, spec.value(t.q) * spec.from_rational(Rational(t.coef)));
    }
    return out;
}

PbwElement normal_mul(const AlgebraSpec& spec, const PbwElement& a, const PbwElement& b)
{
    PbwElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            out.add(monomial_product(spec, ma, mb), ca * cb);
    return out;
}

PbwElement commutator_with_generator(const AlgebraSpec& spec, int g, const PbwElement& a)
{
    PbwElement v = generator_element(spec, g);
    return normal_mul(spec, v, a) - normal_mul(spec, a, v);
}

int degree(const PbwElement& a)
{
    int d = -1;
    for (const auto& [m, c] : a)
        d = std::max(d, m.degree());
    return d;
}

PbwElement top_part(const PbwElement& a)
{
    int d = degree(a);
    PbwElement out;
    for (const auto& [m, c] : a)
        if (m.degree() == d)
            out.add(m, c);
    return out;
}

std::string format_terms(const std::vector<std::pair<Scalar, std::string>>& terms)
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, basis] : terms)
    {
        std::string coeff;
        bool negative = false;
        if (!c.is_cyclotomic() || c.is_rational_value())
        {
            Rational v = c.rational_value();
            negative = v < 0;
            coeff = rational_to_string(negative ? Rational(-v) : v);
        }
        else
            coeff = c.to_string();
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (basis == "1")
            os << coeff;
        else if (coeff == "1")
            os << basis;
        else
            os << coeff << "*" << basis;
    }
    return os.str();
}

std::string to_string(const AlgebraSpec& spec, const PbwMonomial& m)
{
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < spec.dim(); ++v)
    {
        int e = m.exponent(v);
        if (e == 0)
            continue;
        os << (first ? "" : "*") << spec.variable_name(v);
        if (e > 1)
            os << "^" << e;
        first = false;
    }
    return first ? "1" : os.str();
}

std::string to_string(const AlgebraSpec& spec, const PbwElement& a)
{
    std::vector<std::pair<Scalar, std::string>> terms;
    for (const auto& [m, c] : a)
        terms.emplace_back(c, to_string(spec, m));
    return format_terms(terms);
}

namespace {

void compositions(int d, std::size_t pos, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (pos + 1 == cur.size())
    {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e)
    {
        cur[pos] = e;
        compositions(d - e, pos + 1, cur, out);
    }
}

}   // namespace

std::vector<PbwMonomial> monomials_of_degree(const AlgebraSpec& spec, int d)
{
    std::vector<PbwMonomial> out;
    if (d < 0)
        return out;
    std::vector<int> cur(spec.dim(), 0);
    std::vector<std::vector<int>> exps;
    compositions(d, 0, cur, exps);
    for (const auto& e : exps)
        out.push_back(monomial_from_exponents(spec, e));
    return out;
}

}   // namespace hochhom
