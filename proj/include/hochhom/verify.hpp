#pragma once

#include <string>
#include <vector>

#include "hochhom/cohomology.hpp"

namespace hochhom {

/** Outcome of one verification suite on one algebra. */
struct SuiteResult
{
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::size_t checked = 0;
    std::string witness;
};

/** d o d = 0 for every applicable differential on p <= square_bound; closed forms agree on p <= closed_bound. */
SuiteResult verify_complex(const AlgebraSpec& spec, int square_bound, int closed_bound);
/** Chain-map identities of f, g and g o f = id on K_C generators with p <= bound (semi-classical only). */
SuiteResult verify_chainmaps(const AlgebraSpec& spec, int bound);
/** f' = 0 on every word of length 2..max_length. */
SuiteResult verify_braiding(const AlgebraSpec& spec, int max_length);
/** Quotient strand acyclicity for every rho outside C with |rho| <= bound. */
SuiteResult verify_quotient(const AlgebraSpec& spec, int bound);
/** Duality identity in every degree 0..n+r with values of degree <= bound. */
SuiteResult verify_duality(const AlgebraSpec& spec, int bound);

const std::vector<std::string>& suite_names();

/** All multidegrees of length dim with total degree <= bound, in lexicographic order. */
std::vector<std::vector<int>> multidegrees_up_to(int dim, int bound);

}   // namespace hochhom
