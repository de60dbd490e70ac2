#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hochhom/homology.hpp"

namespace hochhom {

/** Strictly increasing set of 0-based generator indices. */
struct WedgeIndex
{
    std::vector<int> indices;

    std::size_t size() const { return indices.size(); }
    bool contains(int v) const;
    /** Exact complement in [0, dim). */
    WedgeIndex complement(int dim) const;
    /** This set with v inserted. */
    WedgeIndex with(int v) const;
    /** This set with v removed. */
    WedgeIndex without(int v) const;

    auto operator<=>(const WedgeIndex&) const = default;
};

WedgeIndex make_wedge_index(const AlgebraSpec& spec, std::vector<int> indices);
WedgeIndex wedge_of(const ChainGenerator& g);
/** All index sets of the given size, in lexicographic order. */
std::vector<WedgeIndex> wedge_indices(int dim, int size);
std::string to_string(const AlgebraSpec& spec, const WedgeIndex& w);

/** A k-linear map from degree-* basis wedges to the algebra. */
struct Cochain
{
    int degree = 0;
    std::map<WedgeIndex, PbwElement> values;

    PbwElement value(const WedgeIndex& w) const;
    void add(const WedgeIndex& w, const PbwElement& a);
    bool is_zero() const;
    bool operator==(const Cochain& other) const;
};

std::string to_string(const AlgebraSpec& spec, const Cochain& c);

/** Basis element a (x) (v_I)' of U (x) (Lambda_Q V)'. */
struct DualKey
{
    PbwMonomial mono;
    WedgeIndex wedge;

    auto operator<=>(const DualKey&) const = default;
};

struct DualChain
{
    int degree = 0;
    Combination<DualKey> terms;

    bool operator==(const DualChain& other) const { return degree == other.degree && terms == other.terms; }
};

DualChain dual_basis(const PbwMonomial& a, const WedgeIndex& w, const Scalar& coeff);

/** Theta(I): product over s of prod_{k < i_s, k not in I} (-lambda~_{i_s,k}). */
Scalar theta_coefficient(const AlgebraSpec& spec, const WedgeIndex& w);

Cochain D_apply(const AlgebraSpec& spec, const Cochain& phi);
DualChain Delta_apply(const AlgebraSpec& spec, const DualChain& c);

/** psi-bar on a basis wedge J: the complement I and the factor Theta(I). */
std::pair<WedgeIndex, Scalar> psi_bar(const AlgebraSpec& spec, const WedgeIndex& j);
/** Phi_2 = id (x) psi-bar: chains of degree n+r-* to dual chains of degree *. */
DualChain phi2(const AlgebraSpec& spec, const ChainElement& c);
ChainElement phi2_inverse(const AlgebraSpec& spec, const DualChain& c);
/** Phi_2 o d o Phi_2^{-1} with the full Koszul differential. */
DualChain Delta_by_conjugation(const AlgebraSpec& spec, const DualChain& c);

Cochain phi3(const AlgebraSpec& spec, const DualChain& c);
DualChain phi3_inverse(const AlgebraSpec& spec, const Cochain& phi);

/** Product of the row j of Q(Lambda). */
Scalar row_product(const AlgebraSpec& spec, int j);

struct OmegaCoefficients
{
    Scalar omega1;
    Scalar omega2;
    Scalar omega1_prime;
    Scalar omega2_prime;
};

/** Coefficients of the term v_{j_k} for the index set I (k is 0-based into the complement). */
OmegaCoefficients omega_coefficients(const AlgebraSpec& spec, const WedgeIndex& i, std::size_t k);

struct DualityCheck
{
    bool pass = true;
    WedgeIndex index_set;
    PbwMonomial mono;
    int j = -1;
    Scalar factor;
    std::string message;
};

/** Compares D o Phi_3 with (-1)^{*+1} Phi_3 o Delta on every a (x) (v_I)' with deg a <= bound. */
DualityCheck duality_identity_check(const AlgebraSpec& spec, int degree, int bound);

/** Basis of the zero-cocycles with values of degree <= bound. */
std::vector<PbwElement> center_truncated(const AlgebraSpec& spec, int bound);

struct WindowCohomology
{
    std::size_t dimension = 0;
    std::size_t cocycle_dim = 0;
    std::size_t coboundary_dim = 0;
    std::vector<Cochain> representatives;
};

/** HH^1 with cocycles of value degree <= bound modulo coboundaries D_0 X, deg X <= bound+1. */
WindowCohomology hh1_window(const AlgebraSpec& spec, int bound);
/** Rank of the classes of the given 1-cocycles modulo the window coboundaries. */
std::size_t hh1_class_rank(const AlgebraSpec& spec, int bound, const std::vector<Cochain>& cocycles);

struct CohomologyEntry
{
    int degree = 0;
    std::size_t dimension = 0;
    std::string method;
    std::string note;
};

struct CohomologyReport
{
    std::string spec_id;
    int bound = 0;
    std::vector<CohomologyEntry> entries;
};

CohomologyReport cohomology_report(const AlgebraSpec& spec, const std::vector<int>& degrees, int bound);

}   // namespace hochhom
