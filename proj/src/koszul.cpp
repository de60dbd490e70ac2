#include "hochhom/koszul.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hochhom {

int ChainGenerator::wedge(int v) const
{
    int r = static_cast<int>(gamma.size());
    return v < r ? gamma[v] : delta[v - r];
}

void ChainGenerator::set_wedge(int v, int b)
{
    int r = static_cast<int>(gamma.size());
    if (v < r)
        gamma[v] = b;
    else
        delta[v - r] = b;
}

int ChainGenerator::degree() const
{
    return std::accumulate(gamma.begin(), gamma.end(), 0) +
           std::accumulate(delta.begin(), delta.end(), 0);
}

int ChainGenerator::poly_degree() const
{
    return mono.degree();
}

std::vector<int> ChainGenerator::rho() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        out.push_back(mono.alpha[i] + gamma[i]);
    for (std::size_t j = 0; j < delta.size(); ++j)
        out.push_back(mono.beta[j] + delta[j]);
    return out;
}

std::vector<int> ChainGenerator::quantum_degree() const
{
    std::vector<int> out;
    for (std::size_t j = gamma.size(); j < delta.size(); ++j)
        out.push_back(mono.beta[j] + delta[j]);
    return out;
}

namespace {

void check_wedge(const std::vector<int>& w, std::size_t len)
{
    if (w.size() != len)
        throw IndexOutOfRange("wedge vector has the wrong length");
    for (int b : w)
        if (b != 0 && b != 1)
            throw IndexOutOfRange("wedge exponents must be 0 or 1");
}

ChainGenerator with_mono(const ChainGenerator& g, PbwMonomial m)
{
    return ChainGenerator{std::move(m), g.gamma, g.delta};
}

ChainGenerator drop_wedge(const ChainGenerator& g, int v)
{
    ChainGenerator h = g;
    h.set_wedge(v, 0);
    return h;
}

int sign_of(long e)
{
    return e % 2 == 0 ? 1 : -1;
}

}   // namespace

ChainGenerator make_generator(const AlgebraSpec& spec, std::vector<int> alpha, std::vector<int> beta,
                              std::vector<int> gamma, std::vector<int> delta)
{
    PbwMonomial m = make_monomial(spec, std::move(alpha), std::move(beta));
    check_wedge(gamma, spec.r());
    check_wedge(delta, spec.n());
    return ChainGenerator{std::move(m), std::move(gamma), std::move(delta)};
}

ChainGenerator generator_from(const AlgebraSpec& spec, const std::vector<int>& exps,
                              const std::vector<int>& wedge)
{
    PbwMonomial m = monomial_from_exponents(spec, exps);
    check_wedge(wedge, spec.dim());
    return ChainGenerator{std::move(m), std::vector<int>(wedge.begin(), wedge.begin() + spec.r()),
                          std::vector<int>(wedge.begin() + spec.r(), wedge.end())};
}

std::string wedge_string(const AlgebraSpec& spec, const ChainGenerator& g)
{
    std::string out;
    for (int v = 0; v < spec.dim(); ++v)
    {
        if (!g.wedge(v))
            continue;
        if (!out.empty())
            out += "^";
        out += spec.variable_name(v);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const AlgebraSpec& spec, const ChainGenerator& g)
{
    return to_string(spec, g.mono) + " (x) " + wedge_string(spec, g);
}

std::string to_string(const AlgebraSpec& spec, const ChainElement& c)
{
    std::vector<std::pair<Scalar, std::string>> terms;
    for (const auto& [g, coeff] : c)
        terms.emplace_back(coeff, to_string(spec, g));
    return format_terms(terms);
}

bool is_in_C(const AlgebraSpec& spec, const std::vector<int>& rho)
{
    if (rho.size() != static_cast<std::size_t>(spec.dim()))
        throw IndexOutOfRange("total degree has the wrong length");
    for (int e : rho)
        if (e < 0)
            throw IndexOutOfRange("negative total degree");
    for (int i = 0; i < spec.dim(); ++i)
    {
        if (rho[i] == 0)
            continue;
        ParamMonomial m = spec.unit_monomial();
        for (int k = 0; k < spec.dim(); ++k)
            spec.multiply_tilde(m, k, i, rho[k]);
        if (!spec.is_one(m))
            return false;
    }
    return true;
}

bool is_in_C_blockwise(const AlgebraSpec& spec, const std::vector<int>& rho)
{
    if (rho.size() != static_cast<std::size_t>(spec.dim()))
        throw IndexOutOfRange("total degree has the wrong length");
    auto column_is_one = [&](int i) {
        ParamMonomial m = spec.unit_monomial();
        for (int k = 0; k < spec.dim(); ++k)
            spec.multiply_tilde(m, k, i, rho[k]);
        return spec.is_one(m);
    };
    const int r = spec.r();
    for (int i = 0; i < r; ++i)
        if (!(rho[i] == 0 && rho[i + r] == 0) && !column_is_one(i))
            return false;
    for (int i = 2 * r; i < spec.dim(); ++i)
        if (rho[i] != 0 && !column_is_one(i))
            return false;
    return true;
}

ChainElement diff_full(const AlgebraSpec& spec, const ChainGenerator& g)
{
    const int dim = spec.dim();
    const int total = g.degree();
    ChainElement out;
    for (int i = 0; i < dim; ++i)
    {
        if (!g.wedge(i))
            continue;
        int before = 0, after = 0;
        ParamMonomial om = spec.unit_monomial(), th = spec.unit_monomial();
        for (int k = 0; k < i; ++k)
        {
            before += g.wedge(k);
            spec.multiply_tilde(om, k, i, g.wedge(k));
        }
        for (int k = i + 1; k < dim; ++k)
        {
            after += g.wedge(k);
            spec.multiply_tilde(th, i, k, g.wedge(k));
        }
        Scalar omega = spec.value(om) * spec.from_int(sign_of(before));
        Scalar theta = spec.value(th) * spec.from_int(sign_of(total + after));
        PbwMonomial vi = unit_monomial(spec);
        vi.set_exponent(i, 1);
        ChainGenerator rest = drop_wedge(g, i);
        for (const auto& [m, c] : monomial_product(spec, g.mono, vi))
            out.add(with_mono(rest, m), omega * c);
        for (const auto& [m, c] : monomial_product(spec, vi, g.mono))
            out.add(with_mono(rest, m), theta * c);
    }
    return out;
}

namespace {

void add_omega_prime_1(const AlgebraSpec& spec, const ChainGenerator& g, int i, ChainElement& out)
{
    const int n = spec.n();
    const auto& a = g.mono;
    if (a.beta[i] == 0)
        return;
    int eps = 0;
    ParamMonomial m = spec.unit_monomial();
    for (int k = 0; k < i; ++k)
    {
        eps += g.gamma[k];
        spec.multiply_lambda(m, k, i, g.gamma[k]);
    }
    for (int k = i + 1; k < n; ++k)
        spec.multiply_lambda(m, k, i, -a.beta[k]);
    ChainGenerator h = drop_wedge(g, i);
    h.mono.beta[i] -= 1;
    out.add(h, spec.value(m) * spec.from_int(-sign_of(eps) * a.beta[i]));
}

void add_omega_prime_2(const AlgebraSpec& spec, const ChainGenerator& g, int j, ChainElement& out)
{
    const int n = spec.n();
    const auto& a = g.mono;
    if (a.alpha[j] == 0)
        return;
    int eps = std::accumulate(g.gamma.begin(), g.gamma.end(), 0);
    ParamMonomial m = spec.unit_monomial();
    for (int k = 0; k < j; ++k)
    {
        eps += g.delta[k];
        spec.multiply_lambda(m, j, k, -a.alpha[k]);
    }
    for (int k = j + 1; k < n; ++k)
        spec.multiply_lambda(m, j, k, g.delta[k]);
    ChainGenerator h = drop_wedge(g, spec.r() + j);
    h.mono.alpha[j] -= 1;
    out.add(h, spec.value(m) * spec.from_int(sign_of(eps) * a.alpha[j]));
}

}   // namespace

ChainElement diff_full_closed(const AlgebraSpec& spec, const ChainGenerator& g)
{
    const int n = spec.n();
    const int r = spec.r();
    const auto& a = g.mono;
    ChainElement out;
    for (int i = 0; i < r; ++i)
    {
        if (!g.gamma[i])
            continue;
        int eps = 0;
        ParamMonomial pre = spec.unit_monomial(), par = spec.unit_monomial();
        for (int k = 0; k < i; ++k)
        {
            eps += g.gamma[k];
            spec.multiply_lambda(pre, k, i, g.gamma[k]);
        }
        for (int k = 0; k < n; ++k)
        {
            spec.multiply_lambda(pre, k, i, -a.beta[k]);
            spec.multiply_lambda(par, i, k, -(a.beta[k] + g.delta[k]));
        }
        for (int k = i + 1; k < r; ++k)
            spec.multiply_lambda(pre, k, i, a.alpha[k]);
        for (int k = 0; k < r; ++k)
            spec.multiply_lambda(par, i, k, a.alpha[k] + g.gamma[k]);
        Scalar coeff = spec.value(pre) * (spec.one() - spec.value(par)) * spec.from_int(sign_of(eps));
        ChainGenerator h = drop_wedge(g, i);
        h.mono.alpha[i] += 1;
        out.add(h, coeff);
        add_omega_prime_1(spec, g, i, out);
    }
    for (int j = 0; j < n; ++j)
    {
        if (!g.delta[j])
            continue;
        int eps = std::accumulate(g.gamma.begin(), g.gamma.end(), 0);
        ParamMonomial pre = spec.unit_monomial(), par = spec.unit_monomial();
        for (int k = 0; k < j; ++k)
        {
            eps += g.delta[k];
            spec.multiply_lambda(pre, k, j, g.delta[k]);
        }
        for (int k = 0; k < r; ++k)
        {
            spec.multiply_lambda(pre, k, j, -g.gamma[k]);
            spec.multiply_lambda(par, j, k, -(a.alpha[k] + g.gamma[k]));
        }
        for (int k = j + 1; k < n; ++k)
            spec.multiply_lambda(pre, k, j, a.beta[k]);
        for (int k = 0; k < n; ++k)
            spec.multiply_lambda(par, j, k, a.beta[k] + g.delta[k]);
        Scalar coeff = spec.value(pre) * (spec.one() - spec.value(par)) * spec.from_int(sign_of(eps));
        ChainGenerator h = drop_wedge(g, r + j);
        h.mono.beta[j] += 1;
        out.add(h, coeff);
        if (j < r)
            add_omega_prime_2(spec, g, j, out);
    }
    return out;
}

ChainElement diff_small(const AlgebraSpec& spec, const ChainGenerator& g)
{
    if (!is_in_C(spec, g.rho()))
        throw NotInSmallComplex("generator " + to_string(spec, g) + " is not in the small complex");
    ChainElement out;
    for (int i = 0; i < spec.r(); ++i)
        if (g.gamma[i])
            add_omega_prime_1(spec, g, i, out);
    for (int j = 0; j < spec.r(); ++j)
        if (g.delta[j])
            add_omega_prime_2(spec, g, j, out);
    return out;
}

ChainElement diff_symmetric(const AlgebraSpec& spec, const ChainGenerator& g)
{
    const int dim = spec.dim();
    ChainElement out;
    int before = 0;
    for (int i = 0; i < dim; ++i)
    {
        if (!g.wedge(i))
            continue;
        ParamMonomial pre = spec.unit_monomial(), par = spec.unit_monomial();
        for (int k = 0; k < i; ++k)
            spec.multiply_tilde(pre, k, i, g.wedge(k));
        for (int k = i + 1; k < dim; ++k)
            spec.multiply_tilde(pre, k, i, g.mono.exponent(k));
        for (int k = 0; k < dim; ++k)
            spec.multiply_tilde(par, i, k, g.mono.exponent(k) + g.wedge(k));
        Scalar coeff = spec.value(pre) * (spec.one() - spec.value(par)) * spec.from_int(sign_of(before));
        ChainGenerator h = drop_wedge(g, i);
        h.mono.set_exponent(i, g.mono.exponent(i) + 1);
        out.add(h, coeff);
        ++before;
    }
    return out;
}

ChainElement diff_weyl(const ChainGenerator& g, const Scalar& unit)
{
    const std::size_t n = g.delta.size();
    if (g.gamma.size() != n || g.mono.alpha.size() != n || g.mono.beta.size() != n)
        throw NotSemiClassical("the Weyl differential needs r = n");
    ChainElement out;
    int eps1 = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!g.gamma[i])
            continue;
        if (g.mono.beta[i] > 0)
        {
            ChainGenerator h = g;
            h.gamma[i] = 0;
            h.mono.beta[i] -= 1;
            out.add(h, unit.from_int_like(-sign_of(eps1) * g.mono.beta[i]));
        }
        ++eps1;
    }
    int eps2 = std::accumulate(g.gamma.begin(), g.gamma.end(), 0);
    for (std::size_t j = 0; j < n; ++j)
    {
        if (!g.delta[j])
            continue;
        if (g.mono.alpha[j] > 0)
        {
            ChainGenerator h = g;
            h.delta[j] = 0;
            h.mono.alpha[j] -= 1;
            out.add(h, unit.from_int_like(sign_of(eps2) * g.mono.alpha[j]));
        }
        ++eps2;
    }
    return out;
}

namespace {

void wedge_subsets(int dim, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (k == 0)
    {
        out.push_back(cur);
        return;
    }
    for (int v = start; v <= dim - k; ++v)
    {
        cur[v] = 1;
        wedge_subsets(dim, k - 1, v + 1, cur, out);
        cur[v] = 0;
    }
}

}   // namespace

std::vector<ChainGenerator> generators_of(const AlgebraSpec& spec, int p, int k)
{
    std::vector<ChainGenerator> out;
    if (p < 0 || k < 0 || k > spec.dim())
        return out;
    std::vector<std::vector<int>> wedges;
    std::vector<int> cur(spec.dim(), 0);
    wedge_subsets(spec.dim(), k, 0, cur, wedges);
    for (const auto& m : monomials_of_degree(spec, p))
    {
        for (const auto& w : wedges)
        {
            out.push_back(ChainGenerator{m, std::vector<int>(w.begin(), w.begin() + spec.r()),
                                         std::vector<int>(w.begin() + spec.r(), w.end())});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t StrandComplex::size(int k) const
{
    if (k < 0 || k >= static_cast<int>(generators.size()))
        return 0;
    return generators[k].size();
}

ChainElement StrandComplex::element(int k, const SparseVector<Scalar>& coords) const
{
    ChainElement out;
    for (const auto& [idx, c] : coords)
        out.add(generators.at(k).at(idx), c);
    return out;
}

StrandComplex enumerate_strand(const AlgebraSpec& spec, int w)
{
    StrandComplex s;
    s.weight = w;
    s.generators.resize(spec.dim() + 1);
    for (int k = 0; k <= spec.dim(); ++k)
    {
        for (auto& g : generators_of(spec, w + k, k))
            if (is_in_C(spec, g.rho()))
                s.generators[k].push_back(std::move(g));
    }
    s.differentials = differential_matrices(spec, s.generators,
                                            [&](const ChainGenerator& g) { return diff_small(spec, g); });
    return s;
}

Scalar weyl_rescaling(const AlgebraSpec& spec, const ChainGenerator& g)
{
    if (spec.r() != spec.n())
        throw NotSemiClassical("the Weyl comparison needs r = n");
    const int n = spec.n();
    ParamMonomial m = spec.unit_monomial();
    for (int i = 0; i < n; ++i)
    {
        if (!g.gamma[i])
            continue;
        for (int k = i + 1; k < n; ++k)
            spec.multiply_lambda(m, k, i, -g.mono.beta[k]);
    }
    for (int j = 0; j < n; ++j)
    {
        if (!g.delta[j])
            continue;
        for (int k = 0; k < j; ++k)
            spec.multiply_lambda(m, j, k, -g.mono.alpha[k]);
    }
    return spec.value(m);
}

ChainElement weyl_f(const AlgebraSpec& spec, const ChainGenerator& g)
{
    if (spec.r() != spec.n())
        throw NotSemiClassical("the Weyl comparison needs r = n");
    if (!is_in_C(spec, g.rho()))
        throw NotInSmallComplex("generator " + to_string(spec, g) + " is not in the small complex");
    return ChainElement(g, weyl_rescaling(spec, g));
}

ChainElement weyl_g(const AlgebraSpec& spec, const ChainGenerator& g)
{
    if (spec.r() != spec.n())
        throw NotSemiClassical("the Weyl comparison needs r = n");
    if (!is_in_C(spec, g.rho()))
        return ChainElement();
    return ChainElement(g, weyl_rescaling(spec, g).inverse());
}

WeylComparison weyl_compare_maps(const AlgebraSpec& spec, const ChainGenerator& g)
{
    WeylComparison out{weyl_rescaling(spec, g), ChainElement(), weyl_g(spec, g)};
    if (is_in_C(spec, g.rho()))
        out.f_image = weyl_f(spec, g);
    return out;
}

TensorElement braid(const AlgebraSpec& spec, const TensorElement& t, int k)
{
    TensorElement out;
    for (const auto& [word, c] : t)
    {
        if (k < 1 || k >= static_cast<int>(word.size()))
            throw IndexOutOfRange("braid position out of range");
        int a = word[k - 1], b = word[k];
        if (a == b)
        {
            out.add(word, c);
            continue;
        }
        TensorWord sw = word;
        std::swap(sw[k - 1], sw[k]);
        out.add(sw, c * spec.lambda_tilde(a, b));
    }
    return out;
}

TensorElement pi_front(const AlgebraSpec& spec, const TensorElement& t, int k)
{
    TensorElement out = t;
    for (int s = k - 1; s >= 1; --s)
        out = braid(spec, out, s);
    return out;
}

TensorElement pi_back(const AlgebraSpec& spec, const TensorElement& t, int k)
{
    TensorElement out = t;
    if (t.is_zero())
        return out;
    const int p = static_cast<int>(t.begin()->first.size());
    for (int s = k; s <= p - 1; ++s)
        out = braid(spec, out, s);
    return out;
}

int bilinear_form(const AlgebraSpec& spec, int a, int b)
{
    const int r = spec.r();
    if (a < r && b == a + r)
        return 1;
    if (b < r && a == b + r)
        return -1;
    return 0;
}

namespace {

TensorElement on_tail(const TensorElement& t, const std::function<TensorElement(const TensorElement&)>& op)
{
    TensorElement out;
    for (const auto& [word, c] : t)
    {
        TensorWord tail(word.begin() + 1, word.end());
        for (const auto& [w2, c2] : op(TensorElement(tail, c)))
        {
            TensorWord full{word.front()};
            full.insert(full.end(), w2.begin(), w2.end());
            out.add(full, c2);
        }
    }
    return out;
}

TensorElement on_head(const TensorElement& t, const std::function<TensorElement(const TensorElement&)>& op)
{
    TensorElement out;
    for (const auto& [word, c] : t)
    {
        TensorWord head(word.begin(), word.end() - 1);
        for (const auto& [w2, c2] : op(TensorElement(head, c)))
        {
            TensorWord full = w2;
            full.push_back(word.back());
            out.add(full, c2);
        }
    }
    return out;
}

TensorElement contract_front(const AlgebraSpec& spec, const TensorElement& t)
{
    TensorElement out;
    for (const auto& [word, c] : t)
    {
        int f = bilinear_form(spec, word[0], word[1]);
        if (f != 0)
            out.add(TensorWord(word.begin() + 2, word.end()), c * spec.from_int(f));
    }
    return out;
}

TensorElement contract_back(const AlgebraSpec& spec, const TensorElement& t)
{
    TensorElement out;
    for (const auto& [word, c] : t)
    {
        const std::size_t p = word.size();
        int f = bilinear_form(spec, word[p - 2], word[p - 1]);
        if (f != 0)
            out.add(TensorWord(word.begin(), word.end() - 2), c * spec.from_int(f));
    }
    return out;
}

}   // namespace

BraidingResult braiding_f_prime(const AlgebraSpec& spec, const TensorWord& word, int bound)
{
    const int p = static_cast<int>(word.size());
    if (p > bound)
        throw WordTooLong("word of length " + std::to_string(p) + " exceeds the bound " +
                          std::to_string(bound));
    if (p < 2)
        throw InvalidSpec("braiding words need length at least 2");
    for (int v : word)
        if (v < 0 || v >= spec.dim())
            throw IndexOutOfRange("word letter out of range");

    BraidingResult out;
    TensorElement start(word, spec.one());
    for (int i = 1; i <= p; ++i)
    {
        for (int j = i + 1; j <= p; ++j)
        {
            TensorElement front = on_tail(pi_front(spec, start, i), [&](const TensorElement& t) {
                return pi_front(spec, t, j - 1);
            });
            TensorElement back = on_head(pi_back(spec, start, j), [&](const TensorElement& t) {
                return pi_back(spec, t, i);
            });
            Scalar sign = spec.from_int(sign_of(i + j + 1));
            out.value.add(contract_front(spec, front), sign);
            out.value.add(contract_back(spec, back), -sign);
            out.terms.push_back(BraidingTerm{i, j, std::move(front), std::move(back)});
        }
    }
    return out;
}

std::string to_string(const AlgebraSpec& spec, const TensorElement& t)
{
    std::vector<std::pair<Scalar, std::string>> terms;
    for (const auto& [word, c] : t)
    {
        std::string s;
        for (int v : word)
            s += (s.empty() ? "" : " (x) ") + spec.variable_name(v);
        terms.emplace_back(c, s.empty() ? "1" : s);
    }
    return format_terms(terms);
}

}   // namespace hochhom
