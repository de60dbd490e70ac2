#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hochhom/koszul.hpp"

namespace hochhom {

/** Homology of one weight strand of K_C. */
struct StrandHomology
{
    int weight = 0;
    /** Chain-space dimensions, indexed by homological degree 0..n+r. */
    std::vector<std::size_t> chain_dims;
    /** Homology dimensions, indexed by homological degree 0..n+r. */
    std::vector<std::size_t> dims;
    /** Cycle representatives per degree (empty unless requested). */
    std::vector<std::vector<ChainElement>> representatives;
};

StrandHomology strand_homology(const AlgebraSpec& spec, int w, bool representatives = true);

struct HomologyReport
{
    std::string spec_id;
    int w_min = 0;
    int w_max = 0;
    bool has_representatives = false;
    /** One entry per weight, in increasing order. */
    std::vector<StrandHomology> strands;

    std::size_t dimension(int w, int k) const;
    /** Sum of dimensions over the weight window in degree k. */
    std::size_t total(int k) const;
};

/** Strand homology over [w_min, w_max]; strands may run concurrently on up to `threads` workers. */
HomologyReport hh_report(const AlgebraSpec& spec, int w_min, int w_max, bool representatives = false,
                         unsigned threads = 1);

enum class Regime
{
    SemiClassical,
    MixedMinimal,
    Free,
    Unsupported
};

std::string regime_name(Regime r);
Regime detect_regime(const AlgebraSpec& spec);

/** Per-degree dimensions predicted by the closed-form theorems, or nullopt when unsupported. */
std::optional<std::vector<std::size_t>> expected_hh_oracle(const AlgebraSpec& spec, int w);

struct AcyclicityResult
{
    bool pass = true;
    /** Chain-space dimensions of the quotient strand, by degree. */
    std::vector<std::size_t> chain_dims;
    /** First degree with nonzero homology, or -1. */
    int failing_degree = -1;
    /** A cycle that is not a boundary at failing_degree. */
    ChainElement witness;
};

/** Exactness of the homogeneous symmetric-algebra complex of total degree rho (rho not in C). */
AcyclicityResult quotient_strand_acyclicity(const AlgebraSpec& spec, const std::vector<int>& rho);

/** Homology of an explicit finite complex (generators by degree, matrices as from differential_matrices). */
StrandHomology complex_homology(const std::vector<std::vector<ChainGenerator>>& gens,
                                const std::vector<SparseMatrix<Scalar>>& mats, bool representatives);

}   // namespace hochhom
