#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hochhom/combination.hpp"
#include "hochhom/scalar.hpp"

namespace hochhom {

/** The normal-ordered monomial x^alpha y^beta (alpha of length r, beta of length n). */
struct PbwMonomial
{
    std::vector<int> alpha;
    std::vector<int> beta;

    int degree() const;
    /** Exponent of variable v (0-based, x's first). */
    int exponent(int v) const;
    void set_exponent(int v, int e);

    auto operator<=>(const PbwMonomial&) const = default;
};

using PbwElement = Combination<PbwMonomial>;

PbwMonomial unit_monomial(const AlgebraSpec& spec);
PbwMonomial make_monomial(const AlgebraSpec& spec, std::vector<int> alpha, std::vector<int> beta);
/** Monomial from exponents of all n+r variables in index order. */
PbwMonomial monomial_from_exponents(const AlgebraSpec& spec, const std::vector<int>& exps);

PbwElement monomial_element(const AlgebraSpec& spec, const PbwMonomial& m);
PbwElement generator_element(const AlgebraSpec& spec, int v);

/** Product of two normal monomials rewritten in the PBW basis. */
PbwElement monomial_product(const AlgebraSpec& spec, const PbwMonomial& a, const PbwMonomial& b);
PbwElement normal_mul(const AlgebraSpec& spec, const PbwElement& a, const PbwElement& b);
/** g.a - a.g for the generator v_g. */
PbwElement commutator_with_generator(const AlgebraSpec& spec, int g, const PbwElement& a);

/** Total degree of the highest term; -1 for zero. */
int degree(const PbwElement& a);
PbwElement top_part(const PbwElement& a);

/** Binomial coefficient as an exact integer. */
Integer binomial(int n, int k);
Integer factorial(int n);

/** Joins (coefficient, basis text) pairs as "c1*b1 + c2*b2 - ..."; "0" when empty. */
std::string format_terms(const std::vector<std::pair<Scalar, std::string>>& terms);

std::string to_string(const AlgebraSpec& spec, const PbwMonomial& m);
std::string to_string(const AlgebraSpec& spec, const PbwElement& a);

/** Monomials of total degree exactly d in lexicographic order of (alpha, beta). */
std::vector<PbwMonomial> monomials_of_degree(const AlgebraSpec& spec, int d);

}   // namespace hochhom
