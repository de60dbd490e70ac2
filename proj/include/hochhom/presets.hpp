#pragma once

#include "hochhom/scalar.hpp"

namespace hochhom {

/** Classical Weyl algebra A_n: r = n, all parameters 1 (rational model). */
AlgebraSpec weyl_spec(int n);
/** r = n, lambda_{i,j} = zeta_order for i < j. */
AlgebraSpec semiclassical_spec(int n, int order);
/** r = n, lambda_{i,j} = value for i < j. */
AlgebraSpec semiclassical_rational_spec(int n, const Rational& value);
/** Rational model with lambda_{i,j} = successive primes 2, 3, 5, ... for i < j. */
AlgebraSpec free_spec(int n, int r);
/** n = 2, r = 1 with lambda_{2,1} = zeta_order. */
AlgebraSpec mixed_minimal_spec(int order);
/** n = 2, r = 1 with lambda_{2,1} = value. */
AlgebraSpec mixed_minimal_rational_spec(const Rational& value);

}   // namespace hochhom
