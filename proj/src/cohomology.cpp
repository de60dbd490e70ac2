#include "hochhom/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace hochhom {

bool WedgeIndex::contains(int v) const
{
    return std::binary_search(indices.begin(), indices.end(), v);
}

WedgeIndex WedgeIndex::complement(int dim) const
{
    WedgeIndex out;
    for (int v = 0; v < dim; ++v)
        if (!contains(v))
            out.indices.push_back(v);
    return out;
}

WedgeIndex WedgeIndex::with(int v) const
{
    WedgeIndex out = *this;
    out.indices.insert(std::lower_bound(out.indices.begin(), out.indices.end(), v), v);
    return out;
}

WedgeIndex WedgeIndex::without(int v) const
{
    WedgeIndex out = *this;
    out.indices.erase(std::remove(out.indices.begin(), out.indices.end(), v), out.indices.end());
    return out;
}

WedgeIndex make_wedge_index(const AlgebraSpec& spec, std::vector<int> indices)
{
    for (std::size_t t = 0; t < indices.size(); ++t)
    {
        if (indices[t] < 0 || indices[t] >= spec.dim())
            throw IndexOutOfRange("wedge index out of range");
        if (t > 0 && indices[t] <= indices[t - 1])
            throw IndexOutOfRange("wedge indices must be strictly increasing");
    }
    return WedgeIndex{std::move(indices)};
}

WedgeIndex wedge_of(const ChainGenerator& g)
{
    WedgeIndex out;
    const int dim = static_cast<int>(g.gamma.size() + g.delta.size());
    for (int v = 0; v < dim; ++v)
        if (g.wedge(v))
            out.indices.push_back(v);
    return out;
}

namespace {

void subsets(int dim, int size, int start, std::vector<int>& cur, std::vector<WedgeIndex>& out)
{
    if (static_cast<int>(cur.size()) == size)
    {
        out.push_back(WedgeIndex{cur});
        return;
    }
    for (int v = start; v < dim; ++v)
    {
        cur.push_back(v);
        subsets(dim, size, v + 1, cur, out);
        cur.pop_back();
    }
}

int sign_of(long e)
{
    return e % 2 == 0 ? 1 : -1;
}

PbwElement generator_times(const AlgebraSpec& spec, int v, const PbwElement& a)
{
    return normal_mul(spec, generator_element(spec, v), a);
}

PbwElement times_generator(const AlgebraSpec& spec, const PbwElement& a, int v)
{
    return normal_mul(spec, a, generator_element(spec, v));
}

Cochain scaled(const Cochain& c, const Scalar& s)
{
    Cochain out;
    out.degree = c.degree;
    for (const auto& [w, a] : c.values)
        out.add(w, a.scaled(s));
    return out;
}

std::vector<PbwMonomial> monomials_up_to(const AlgebraSpec& spec, int bound)
{
    std::vector<PbwMonomial> out;
    for (int d = 0; d <= bound; ++d)
        for (auto& m : monomials_of_degree(spec, d))
            out.push_back(std::move(m));
    return out;
}

}   // namespace

std::vector<WedgeIndex> wedge_indices(int dim, int size)
{
    std::vector<WedgeIndex> out;
    if (size < 0 || size > dim)
        return out;
    std::vector<int> cur;
    subsets(dim, size, 0, cur, out);
    return out;
}

std::string to_string(const AlgebraSpec& spec, const WedgeIndex& w)
{
    std::string out;
    for (int v : w.indices)
        out += (out.empty() ? "" : "^") + spec.variable_name(v);
    return out.empty() ? "1" : out;
}

PbwElement Cochain::value(const WedgeIndex& w) const
{
    auto it = values.find(w);
    return it == values.end() ? PbwElement() : it->second;
}

void Cochain::add(const WedgeIndex& w, const PbwElement& a)
{
    if (a.is_zero())
        return;
    auto it = values.find(w);
    if (it == values.end())
    {
        values.emplace(w, a);
        return;
    }
    it->second += a;
    if (it->second.is_zero())
        values.erase(it);
}

bool Cochain::is_zero() const
{
    return values.empty();
}

bool Cochain::operator==(const Cochain& other) const
{
    return degree == other.degree && values == other.values;
}

std::string to_string(const AlgebraSpec& spec, const Cochain& c)
{
    if (c.values.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, a] : c.values)
    {
        os << (first ? "" : "\n") << to_string(spec, w) << " -> " << to_string(spec, a);
        first = false;
    }
    return os.str();
}

DualChain dual_basis(const PbwMonomial& a, const WedgeIndex& w, const Scalar& coeff)
{
    DualChain out;
    out.degree = static_cast<int>(w.size());
    out.terms.add(DualKey{a, w}, coeff);
    return out;
}

Scalar theta_coefficient(const AlgebraSpec& spec, const WedgeIndex& w)
{
    Scalar out = spec.one();
    for (int i : w.indices)
        for (int k = 0; k < i; ++k)
            if (!w.contains(k))
                out *= -spec.lambda_tilde(i, k);
    return out;
}

Cochain D_apply(const AlgebraSpec& spec, const Cochain& phi)
{
    Cochain out;
    out.degree = phi.degree + 1;
    for (const auto& w : wedge_indices(spec.dim(), phi.degree + 1))
    {
        const auto& idx = w.indices;
        PbwElement total;
        for (std::size_t t = 0; t < idx.size(); ++t)
        {
            PbwElement val = phi.value(w.without(idx[t]));
            if (val.is_zero())
                continue;
            Scalar p1 = spec.one(), p2 = spec.one();
            for (std::size_t s = 0; s < t; ++s)
                p1 *= spec.lambda_tilde(idx[s], idx[t]);
            for (std::size_t s = t + 1; s < idx.size(); ++s)
                p2 *= spec.lambda_tilde(idx[t], idx[s]);
            PbwElement term = generator_times(spec, idx[t], val).scaled(p1) -
                              times_generator(spec, val, idx[t]).scaled(p2);
            total.add(term, spec.from_int(sign_of(static_cast<long>(t))));
        }
        out.add(w, total);
    }
    return out;
}

DualChain Delta_apply(const AlgebraSpec& spec, const DualChain& c)
{
    DualChain out;
    out.degree = c.degree + 1;
    for (const auto& [key, coeff] : c.terms)
    {
        const WedgeIndex comp = key.wedge.complement(spec.dim());
        const auto& J = comp.indices;
        const Scalar theta_inv = theta_coefficient(spec, key.wedge).inverse();
        PbwElement a = monomial_element(spec, key.mono);
        for (std::size_t k = 0; k < J.size(); ++k)
        {
            Scalar p1 = spec.one(), p2 = spec.one();
            for (std::size_t s = 0; s < k; ++s)
                p1 *= spec.lambda_tilde(J[s], J[k]);
            for (std::size_t s = k + 1; s < J.size(); ++s)
                p2 *= spec.lambda_tilde(J[k], J[s]);
            WedgeIndex target = key.wedge.with(J[k]);
            Scalar factor = coeff * theta_inv * theta_coefficient(spec, target) *
                            spec.from_int(sign_of(static_cast<long>(k)));
            PbwElement elt = times_generator(spec, a, J[k]).scaled(p1) - generator_times(spec, J[k], a).scaled(p2);
            for (const auto& [m, e] : elt)
                out.terms.add(DualKey{m, target}, e * factor);
        }
    }
    return out;
}

std::pair<WedgeIndex, Scalar> psi_bar(const AlgebraSpec& spec, const WedgeIndex& j)
{
    WedgeIndex i = j.complement(spec.dim());
    return {i, theta_coefficient(spec, i)};
}

DualChain phi2(const AlgebraSpec& spec, const ChainElement& c)
{
    DualChain out;
    bool first = true;
    for (const auto& [g, coeff] : c)
    {
        auto [i, theta] = psi_bar(spec, wedge_of(g));
        if (first)
            out.degree = static_cast<int>(i.size());
        first = false;
        out.terms.add(DualKey{g.mono, i}, coeff * theta);
    }
    return out;
}

ChainElement phi2_inverse(const AlgebraSpec& spec, const DualChain& c)
{
    ChainElement out;
    for (const auto& [key, coeff] : c.terms)
    {
        WedgeIndex j = key.wedge.complement(spec.dim());
        std::vector<int> bits(spec.dim(), 0);
        for (int v : j.indices)
            bits[v] = 1;
        ChainGenerator g{key.mono, std::vector<int>(bits.begin(), bits.begin() + spec.r()),
                         std::vector<int>(bits.begin() + spec.r(), bits.end())};
        out.add(g, coeff * theta_coefficient(spec, key.wedge).inverse());
    }
    return out;
}

DualChain Delta_by_conjugation(const AlgebraSpec& spec, const DualChain& c)
{
    ChainElement chain = phi2_inverse(spec, c);
    DualChain out = phi2(spec, apply_linear(chain, [&](const ChainGenerator& g) { return diff_full(spec, g); }));
    out.degree = c.degree + 1;
    return out;
}

Cochain phi3(const AlgebraSpec& spec, const DualChain& c)
{
    Cochain out;
    out.degree = c.degree;
    for (const auto& [key, coeff] : c.terms)
        out.add(key.wedge, PbwElement(key.mono, coeff));
    (void)spec;
    return out;
}

DualChain phi3_inverse(const AlgebraSpec& spec, const Cochain& phi)
{
    DualChain out;
    out.degree = phi.degree;
    for (const auto& [w, a] : phi.values)
        for (const auto& [m, c] : a)
            out.terms.add(DualKey{m, w}, c);
    (void)spec;
    return out;
}

Scalar row_product(const AlgebraSpec& spec, int j)
{
    Scalar out = spec.one();
    for (int t = 0; t < spec.dim(); ++t)
        out *= spec.lambda_tilde(j, t);
    return out;
}

OmegaCoefficients omega_coefficients(const AlgebraSpec& spec, const WedgeIndex& i, std::size_t k)
{
    const WedgeIndex comp = i.complement(spec.dim());
    const auto& J = comp.indices;
    if (k >= J.size())
        throw IndexOutOfRange("complement position out of range");
    const int j = J[k];
    Scalar ratio = theta_coefficient(spec, i).inverse() * theta_coefficient(spec, i.with(j));
    Scalar p1 = spec.one(), p2 = spec.one();
    for (std::size_t s = 0; s < k; ++s)
        p1 *= spec.lambda_tilde(J[s], j);
    for (std::size_t s = k + 1; s < J.size(); ++s)
        p2 *= spec.lambda_tilde(j, J[s]);

    int below = 0;
    Scalar after = spec.one(), before = spec.one();
    for (int v : i.indices)
    {
        if (v < j)
        {
            ++below;
            before *= spec.lambda_tilde(v, j);
        }
        else
            after *= spec.lambda_tilde(j, v);
    }
    Scalar sign = spec.from_int(sign_of(static_cast<long>(k) + 1 + below));
    return OmegaCoefficients{ratio * p1, ratio * p2, sign * after, sign * before};
}

DualityCheck duality_identity_check(const AlgebraSpec& spec, int degree, int bound)
{
    DualityCheck out;
    if (degree < 0 || degree >= spec.dim())
        return out;
    const Scalar sign = spec.from_int(sign_of(degree + 1));
    for (const auto& a : monomials_up_to(spec, bound))
    {
        for (const auto& w : wedge_indices(spec.dim(), degree))
        {
            DualChain basis = dual_basis(a, w, spec.one());
            Cochain lhs = D_apply(spec, phi3(spec, basis));
            Cochain rhs = scaled(phi3(spec, Delta_apply(spec, basis)), sign);
            if (lhs == rhs)
                continue;
            out.pass = false;
            out.index_set = w;
            out.mono = a;
            for (int j : w.complement(spec.dim()).indices)
            {
                WedgeIndex target = w.with(j);
                if (lhs.value(target) != rhs.value(target))
                {
                    out.j = j;
                    break;
                }
            }
            out.factor = row_product(spec, out.j);
            out.message = "row " + std::to_string(out.j + 1) + " product = " + out.factor.to_string() +
                          " at " + to_string(spec, a) + " (x) (" + to_string(spec, w) + ")'";
            return out;
        }
    }
    return out;
}

std::vector<PbwElement> center_truncated(const AlgebraSpec& spec, int bound)
{
    if (bound < 0)
        throw InvalidSpec("degree bound must be nonnegative");
    std::vector<PbwMonomial> cols = monomials_up_to(spec, bound);
    std::map<std::pair<int, PbwMonomial>, std::size_t> rows;
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
    for (std::size_t c = 0; c < cols.size(); ++c)
    {
        for (int g = 0; g < spec.dim(); ++g)
        {
            for (const auto& [m, v] : commutator_with_generator(spec, g, monomial_element(spec, cols[c])))
            {
                auto [it, inserted] = rows.emplace(std::make_pair(g, m), rows.size());
                entries.emplace_back(it->second, c, v);
            }
        }
    }
    SparseMatrix<Scalar> mat(rows.size(), cols.size(), spec.one());
    for (const auto& [r, c, v] : entries)
        mat.add(r, c, v);
    std::vector<PbwElement> out;
    for (const auto& vec : rank_kernel(mat, true).kernel)
    {
        PbwElement e;
        for (const auto& [idx, v] : vec)
            e.add(cols[idx], v);
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

struct WindowSystem
{
    std::vector<std::pair<int, PbwMonomial>> coords;
    std::map<std::pair<int, PbwMonomial>, std::size_t> index;
    std::vector<SparseVector<Scalar>> cocycles;
    std::vector<SparseVector<Scalar>> coboundaries;
};

WindowSystem build_window(const AlgebraSpec& spec, int bound)
{
    if (bound < 1)
        throw InvalidSpec("degree bound must be at least 1");
    WindowSystem ws;
    const std::vector<PbwMonomial> window = monomials_up_to(spec, bound);
    for (int g = 0; g < spec.dim(); ++g)
        for (const auto& m : window)
        {
            ws.index.emplace(std::make_pair(g, m), ws.coords.size());
            ws.coords.emplace_back(g, m);
        }

    std::map<std::pair<WedgeIndex, PbwMonomial>, std::size_t> rows;
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
    for (std::size_t c = 0; c < ws.coords.size(); ++c)
    {
        Cochain phi;
        phi.degree = 1;
        phi.add(WedgeIndex{{ws.coords[c].first}}, monomial_element(spec, ws.coords[c].second));
        for (const auto& [w, val] : D_apply(spec, phi).values)
            for (const auto& [m, v] : val)
            {
                auto [it, inserted] = rows.emplace(std::make_pair(w, m), rows.size());
                entries.emplace_back(it->second, c, v);
            }
    }
    SparseMatrix<Scalar> d1(rows.size(), ws.coords.size(), spec.one());
    for (const auto& [r, c, v] : entries)
        d1.add(r, c, v);
    ws.cocycles = rank_kernel(d1, true).kernel;

    const std::vector<PbwMonomial> pre = monomials_up_to(spec, bound + 1);
    std::map<std::pair<int, PbwMonomial>, std::size_t> high;
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> high_entries, low_entries;
    for (std::size_t c = 0; c < pre.size(); ++c)
    {
        for (int g = 0; g < spec.dim(); ++g)
        {
            for (const auto& [m, v] : commutator_with_generator(spec, g, monomial_element(spec, pre[c])))
            {
                auto key = std::make_pair(g, m);
                auto low = ws.index.find(key);
                if (low != ws.index.end())
                    low_entries.emplace_back(low->second, c, v);
                else
                {
                    auto [it, inserted] = high.emplace(key, high.size());
                    high_entries.emplace_back(it->second, c, v);
                }
            }
        }
    }
    SparseMatrix<Scalar> hm(high.size(), pre.size(), spec.one());
    for (const auto& [r, c, v] : high_entries)
        hm.add(r, c, v);
    SparseMatrix<Scalar> lm(ws.coords.size(), pre.size(), spec.one());
    for (const auto& [r, c, v] : low_entries)
        lm.add(r, c, v);
    for (const auto& x : rank_kernel(hm, true).kernel)
    {
        SparseVector<Scalar> b = lm.apply(x);
        if (!b.empty())
            ws.coboundaries.push_back(std::move(b));
    }
    return ws;
}

}   // namespace

WindowCohomology hh1_window(const AlgebraSpec& spec, int bound)
{
    WindowSystem ws = build_window(spec, bound);
    Subquotient<Scalar> sq;
    try
    {
        sq = subquotient(ws.cocycles, ws.coboundaries);
    }
    catch (const NotASubspace& e)
    {
        throw ComplexBroken(e.what());
    }
    WindowCohomology out;
    out.dimension = sq.dimension;
    out.cocycle_dim = ws.cocycles.size();
    out.coboundary_dim = span_rank(ws.coboundaries);
    for (const auto& v : sq.representatives)
    {
        Cochain phi;
        phi.degree = 1;
        for (const auto& [idx, c] : v)
            phi.add(WedgeIndex{{ws.coords[idx].first}}, PbwElement(ws.coords[idx].second, c));
        out.representatives.push_back(std::move(phi));
    }
    return out;
}

std::size_t hh1_class_rank(const AlgebraSpec& spec, int bound, const std::vector<Cochain>& cocycles)
{
    WindowSystem ws = build_window(spec, bound);
    EchelonBasis<Scalar> span;
    for (const auto& b : ws.coboundaries)
        span.insert(b);
    const std::size_t base = span.size();
    for (const auto& phi : cocycles)
    {
        if (phi.degree != 1 || !D_apply(spec, phi).is_zero())
            throw InvalidSpec("expected a 1-cocycle");
        SparseVector<Scalar> v;
        for (const auto& [w, a] : phi.values)
            for (const auto& [m, c] : a)
            {
                auto it = ws.index.find(std::make_pair(w.indices.front(), m));
                if (it == ws.index.end())
                    throw InvalidSpec("cocycle value exceeds the degree bound");
                v.emplace(it->second, c);
            }
        span.insert(v);
    }
    return span.size() - base;
}

CohomologyReport cohomology_report(const AlgebraSpec& spec, const std::vector<int>& degrees, int bound)
{
    CohomologyReport out;
    out.spec_id = spec.describe();
    out.bound = bound;
    const bool semi = spec.r() == spec.n();
    std::optional<bool> duality_ok;
    for (int k : degrees)
    {
        if (k < 0 || k > spec.dim())
            throw UnsupportedDegree("cohomological degree " + std::to_string(k) + " is outside [0, n+r]");
        CohomologyEntry e;
        e.degree = k;
        if (k == 0)
        {
            e.dimension = center_truncated(spec, bound).size();
            e.method = "center";
        }
        else if (k == 1)
        {
            e.dimension = hh1_window(spec, std::max(bound, 1)).dimension;
            e.method = "hh1-window";
        }
        else
        {
            if (semi && !duality_ok)
            {
                duality_ok = true;
                for (int d = 0; d < spec.dim(); ++d)
                    if (!duality_identity_check(spec, d, std::min(bound, 4)).pass)
                        duality_ok = false;
            }
            const int hom_degree = spec.dim() - k;
            for (int w = -spec.dim(); w <= bound; ++w)
                e.dimension += strand_homology(spec, w, false).dims[hom_degree];
            if (semi && *duality_ok)
                e.method = "duality";
            else
            {
                e.method = "delta-side";
                e.note = "H^" + std::to_string(k) + " of the dual complex, equal to HH_" +
                         std::to_string(hom_degree) + "; the (L, D) side is not computed in degrees >= 2";
            }
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

}   // namespace hochhom
