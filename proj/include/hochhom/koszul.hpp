#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hochhom/algebra.hpp"
#include "hochhom/combination.hpp"
#include "hochhom/linalg.hpp"

namespace hochhom {

/**
 * Basis element x^alpha y^beta (x) x^gamma y^delta of the Koszul complex.
 *
 * gamma and delta are 0/1 vectors (the wedge part). Ordering is
 * lexicographic on (alpha, beta, gamma, delta).
 */
struct ChainGenerator
{
    PbwMonomial mono;
    std::vector<int> gamma;
    std::vector<int> delta;

    /** Wedge exponent of variable v (0-based, x's first). */
    int wedge(int v) const;
    void set_wedge(int v, int b);
    /** Homological degree |gamma| + |delta|. */
    int degree() const;
    /** Polynomial degree |alpha| + |beta|. */
    int poly_degree() const;
    int weight() const { return poly_degree() - degree(); }
    /** Total degree (alpha + gamma, beta + delta). */
    std::vector<int> rho() const;
    /** (beta_j + delta_j) for j >= r. */
    std::vector<int> quantum_degree() const;

    auto operator<=>(const ChainGenerator&) const = default;
};

using ChainElement = Combination<ChainGenerator>;

ChainGenerator make_generator(const AlgebraSpec& spec, std::vector<int> alpha, std::vector<int> beta,
                              std::vector<int> gamma, std::vector<int> delta);
/** Generator from exponents and wedge bits of all n+r variables in index order. */
ChainGenerator generator_from(const AlgebraSpec& spec, const std::vector<int>& exps,
                              const std::vector<int>& wedge);

std::string wedge_string(const AlgebraSpec& spec, const ChainGenerator& g);
std::string to_string(const AlgebraSpec& spec, const ChainGenerator& g);
std::string to_string(const AlgebraSpec& spec, const ChainElement& c);

/** Membership of a total degree rho in the set C. */
bool is_in_C(const AlgebraSpec& spec, const std::vector<int>& rho);
/** The block characterization of C (pairs i, i+r for i < r; single columns beyond 2r). */
bool is_in_C_blockwise(const AlgebraSpec& spec, const std::vector<int>& rho);

/** Full Koszul differential through PBW multiplication. */
ChainElement diff_full(const AlgebraSpec& spec, const ChainGenerator& g);
/** Full Koszul differential from the closed-form coefficients. */
ChainElement diff_full_closed(const AlgebraSpec& spec, const ChainGenerator& g);
/** Differential of the small complex K_C; throws NotInSmallComplex off C. */
ChainElement diff_small(const AlgebraSpec& spec, const ChainGenerator& g);
/** Differential of the quantum symmetric algebra over Q(Lambda) (no Weyl terms). */
ChainElement diff_symmetric(const AlgebraSpec& spec, const ChainGenerator& g);
/** Koszul differential of the classical Weyl algebra (gamma, delta of equal length). */
ChainElement diff_weyl(const ChainGenerator& g, const Scalar& unit = Scalar(Rational(1)));

template <typename Diff>
ChainElement apply_linear(const ChainElement& c, Diff&& d)
{
    ChainElement out;
    for (const auto& [g, coeff] : c)
        out.add(d(g), coeff);
    return out;
}

/** All generators with polynomial degree p and homological degree k, sorted. */
std::vector<ChainGenerator> generators_of(const AlgebraSpec& spec, int p, int k);

/**
 * One weight strand of K_C.
 *
 * generators[k] lists the degree-k generators; differentials[k] is the
 * matrix of d : degree k -> degree k-1 (rows indexed by generators[k-1]);
 * differentials[0] is the zero map to the empty space.
 */
struct StrandComplex
{
    int weight = 0;
    std::vector<std::vector<ChainGenerator>> generators;
    std::vector<SparseMatrix<Scalar>> differentials;

    std::size_t size(int k) const;
    ChainElement element(int k, const SparseVector<Scalar>& coords) const;
};

StrandComplex enumerate_strand(const AlgebraSpec& spec, int w);

/** Chain complex with explicit generators and differentials built from a map. */
template <typename Diff>
std::vector<SparseMatrix<Scalar>> differential_matrices(
    const AlgebraSpec& spec, const std::vector<std::vector<ChainGenerator>>& gens, Diff&& d);

/** Rescaling factor R of the comparison maps with the Weyl complex. */
Scalar weyl_rescaling(const AlgebraSpec& spec, const ChainGenerator& g);
ChainElement weyl_f(const AlgebraSpec& spec, const ChainGenerator& g);
ChainElement weyl_g(const AlgebraSpec& spec, const ChainGenerator& g);

struct WeylComparison
{
    Scalar rescaling;
    ChainElement f_image;
    ChainElement g_image;
};

WeylComparison weyl_compare_maps(const AlgebraSpec& spec, const ChainGenerator& g);

/** Words in the generators v_0..v_{n+r-1}. */
using TensorWord = std::vector<int>;
using TensorElement = Combination<TensorWord>;

/** c_k acting on positions k, k+1 (1-based k). */
TensorElement braid(const AlgebraSpec& spec, const TensorElement& t, int k);
/** Pi_k = c_1 o ... o c_{k-1}: brings letter k to the front. */
TensorElement pi_front(const AlgebraSpec& spec, const TensorElement& t, int k);
/** Pi^_k = c_{p-1} o ... o c_k on words of length p: sends letter k to the end. */
TensorElement pi_back(const AlgebraSpec& spec, const TensorElement& t, int k);
/** The bilinear form f: 1 on (x_i, y_i), -1 on (y_i, x_i), 0 otherwise. */
int bilinear_form(const AlgebraSpec& spec, int a, int b);

struct BraidingTerm
{
    int i;
    int j;
    TensorElement front;
    TensorElement back;
};

struct BraidingResult
{
    std::vector<BraidingTerm> terms;
    TensorElement value;
};

BraidingResult braiding_f_prime(const AlgebraSpec& spec, const TensorWord& word, int bound = 8);
std::string to_string(const AlgebraSpec& spec, const TensorElement& t);

template <typename Diff>
std::vector<SparseMatrix<Scalar>> differential_matrices(
    const AlgebraSpec& spec, const std::vector<std::vector<ChainGenerator>>& gens, Diff&& d)
{
    std::vector<SparseMatrix<Scalar>> mats;
    mats.emplace_back(0, gens.empty() ? 0 : gens[0].size(), spec.one());
    for (std::size_t k = 1; k < gens.size(); ++k)
    {
        std::map<ChainGenerator, std::size_t> index;
        for (std::size_t t = 0; t < gens[k - 1].size(); ++t)
            index.emplace(gens[k - 1][t], t);
        SparseMatrix<Scalar> m(gens[k - 1].size(), gens[k].size(), spec.one());
        for (std::size_t col = 0; col < gens[k].size(); ++col)
        {
            for (const auto& [h, c] : d(gens[k][col]))
            {
                auto it = index.find(h);
                if (it == index.end())
                    throw ComplexBroken("differential leaves the strand at " + to_string(spec, h));
                m.add(it->second, col, c);
            }
        }
        mats.push_back(std::move(m));
    }
    return mats;
}

}   // namespace hochhom
