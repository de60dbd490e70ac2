#include "hochhom/homology.hpp"

#include <algorithm>
#include <future>

namespace hochhom {

StrandHomology complex_homology(const std::vector<std::vector<ChainGenerator>>& gens,
                                const std::vector<SparseMatrix<Scalar>>& mats, bool representatives)
{
    const std::size_t top = gens.size();
    StrandHomology out;
    out.dims.assign(top, 0);
    out.representatives.resize(top);
    for (const auto& g : gens)
        out.chain_dims.push_back(g.size());

    std::vector<std::size_t> ranks(top + 1, 0);
    std::vector<RankKernel<Scalar>> kernels(top);
    for (std::size_t k = 0; k < top; ++k)
    {
        if (representatives)
        {
            kernels[k] = rank_kernel(mats[k], true);
            ranks[k] = kernels[k].rank;
        }
        else
            ranks[k] = rank(mats[k]);
    }
    for (std::size_t k = 0; k < top; ++k)
    {
        const std::size_t kernel_dim = gens[k].size() - ranks[k];
        if (kernel_dim < ranks[k + 1])
            throw ComplexBroken("boundaries exceed cycles in degree " + std::to_string(k));
        out.dims[k] = kernel_dim - ranks[k + 1];
        if (!representatives || out.dims[k] == 0)
            continue;
        std::vector<SparseVector<Scalar>> boundaries;
        if (k + 1 < top)
            for (std::size_t c = 0; c < gens[k + 1].size(); ++c)
                boundaries.push_back(mats[k + 1].column(c));
        Subquotient<Scalar> sq;
        try
        {
            sq = subquotient(kernels[k].kernel, boundaries);
        }
        catch (const NotASubspace& e)
        {
            throw ComplexBroken(e.what());
        }
        for (const auto& v : sq.representatives)
        {
            ChainElement c;
            for (const auto& [idx, coeff] : v)
                c.add(gens[k][idx], coeff);
            out.representatives[k].push_back(std::move(c));
        }
    }
    return out;
}

StrandHomology strand_homology(const AlgebraSpec& spec, int w, bool representatives)
{
    StrandComplex s = enumerate_strand(spec, w);
    StrandHomology h = complex_homology(s.generators, s.differentials, representatives);
    h.weight = w;
    return h;
}

std::size_t HomologyReport::dimension(int w, int k) const
{
    for (const auto& s : strands)
        if (s.weight == w)
            return k >= 0 && k < static_cast<int>(s.dims.size()) ? s.dims[k] : 0;
    return 0;
}

std::size_t HomologyReport::total(int k) const
{
    std::size_t t = 0;
    for (const auto& s : strands)
        if (k >= 0 && k < static_cast<int>(s.dims.size()))
            t += s.dims[k];
    return t;
}

HomologyReport hh_report(const AlgebraSpec& spec, int w_min, int w_max, bool representatives,
                         unsigned threads)
{
    if (w_min > w_max)
        throw InvalidSpec("empty weight range");
    if (w_min < -spec.dim())
        throw InvalidSpec("w_min must be at least -(n+r)");
    HomologyReport report;
    report.spec_id = spec.describe();
    report.w_min = w_min;
    report.w_max = w_max;
    report.has_representatives = representatives;
    report.strands.resize(w_max - w_min + 1);

    const unsigned workers = std::max(1u, threads);
    if (workers == 1)
    {
        for (int w = w_min; w <= w_max; ++w)
            report.strands[w - w_min] = strand_homology(spec, w, representatives);
        return report;
    }
    for (int start = w_min; start <= w_max; start += static_cast<int>(workers))
    {
        std::vector<std::future<StrandHomology>> batch;
        for (int w = start; w <= std::min(w_max, start + static_cast<int>(workers) - 1); ++w)
            batch.push_back(std::async(std::launch::async, [&spec, w, representatives] {
                return strand_homology(spec, w, representatives);
            }));
        for (std::size_t t = 0; t < batch.size(); ++t)
            report.strands[start - w_min + t] = batch[t].get();
    }
    return report;
}

std::string regime_name(Regime r)
{
    switch (r)
    {
    case Regime::SemiClassical:
        return "semi-classical";
    case Regime::MixedMinimal:
        return "mixed-minimal";
    case Regime::Free:
        return "free";
    case Regime::Unsupported:
        break;
    }
    return "unsupported";
}

Regime detect_regime(const AlgebraSpec& spec)
{
    if (spec.r() == spec.n())
        return Regime::SemiClassical;
    if (spec.n() == 2 && spec.r() == 1 && spec.lambda_order(0, 1) > 0)
        return Regime::MixedMinimal;
    if (spec.is_free_maximal_rank())
        return Regime::Free;
    return Regime::Unsupported;
}

namespace {

long mod(long a, long m)
{
    long x = a % m;
    return x < 0 ? x + m : x;
}

}   // namespace

std::optional<std::vector<std::size_t>> expected_hh_oracle(const AlgebraSpec& spec, int w)
{
    const int n = spec.n();
    const int r = spec.r();
    std::vector<std::size_t> dims(spec.dim() + 1, 0);
    switch (detect_regime(spec))
    {
    case Regime::SemiClassical:
        if (w == -2 * n)
            dims[2 * n] = 1;
        return dims;
    case Regime::MixedMinimal: {
        const long order = spec.lambda_order(0, 1);
        if (w >= 1 && mod(w, order) != 0)
            dims[0] = 1;
        if (w >= -1 && mod(w + 1, order) <= order - 2)
            dims[1] = 1;
        if (w >= -2 && mod(w + 2, order) == 0)
            dims[2] = 1;
        if (w >= order - 4 && mod(w + 4, order) == 0)
            dims[3] = 1;
        return dims;
    }
    case Regime::Free:
        if (r == 0)
        {
            dims[0] = (w == 0 ? 1 : 0) + (w >= 1 ? n : 0);
            dims[1] = w >= -1 ? n : 0;
            return dims;
        }
        if (w >= 1)
            dims[0] = n - r;
        if (w >= -1)
            dims[1] = n - r;
        if (w == -2 * r)
            dims[2 * r] += 1;
        return dims;
    case Regime::Unsupported:
        break;
    }
    return std::nullopt;
}

AcyclicityResult quotient_strand_acyclicity(const AlgebraSpec& spec, const std::vector<int>& rho)
{
    if (is_in_C(spec, rho))
        throw RhoInC("total degree lies in C");
    const int dim = spec.dim();
    std::vector<int> support;
    for (int i = 0; i < dim; ++i)
        if (rho[i] > 0)
            support.push_back(i);

    std::vector<std::vector<ChainGenerator>> gens(dim + 1);
    const unsigned subsets = 1u << support.size();
    for (unsigned mask = 0; mask < subsets; ++mask)
    {
        std::vector<int> exps = rho, wedge(dim, 0);
        int k = 0;
        for (std::size_t b = 0; b < support.size(); ++b)
        {
            if (mask & (1u << b))
            {
                wedge[support[b]] = 1;
                exps[support[b]] -= 1;
                ++k;
            }
        }
        gens[k].push_back(generator_from(spec, exps, wedge));
    }
    for (auto& g : gens)
        std::sort(g.begin(), g.end());

    auto mats = differential_matrices(spec, gens, [&](const ChainGenerator& g) { return diff_symmetric(spec, g); });
    StrandHomology h = complex_homology(gens, mats, true);
    AcyclicityResult out;
    out.chain_dims = h.chain_dims;
    for (int k = 0; k <= dim; ++k)
    {
        if (h.dims[k] == 0)
            continue;
        out.pass = false;
        out.failing_degree = k;
        out.witness = h.representatives[k].front();
        break;
    }
    return out;
}

}   // namespace hochhom
