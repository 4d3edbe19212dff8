#pragma once

#include <gmpxx.h>

#include "xiaudit/ball.hpp"

namespace xiaudit {

/// B_{2k} as an enclosure (exact rational rounded at prec).
/// Computed from tangent numbers: B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k-1)).
RealBall bernoulli_2k(unsigned k, Prec prec);

/// B_{2k} / (2k)! -- the combination Euler-Maclaurin wants.
RealBall bernoulli_2k_over_fact(unsigned k, Prec prec);

/// B_{2k} / ((2k)(2k-1)) -- the combination the Stirling series wants.
RealBall bernoulli_2k_over_2k2km1(unsigned k, Prec prec);

/// k-th tangent number (1, 2, 16, 272, ...), exact.
mpz_class tangent_number(unsigned k);

}  // namespace xiaudit
