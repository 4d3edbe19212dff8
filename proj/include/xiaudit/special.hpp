#pragma once

#include <cstddef>

#include "xiaudit/ball.hpp"

namespace xiaudit {

class ZeroCatalog;

/// How hard to try: absolute radius goal plus the precision window the
/// escalation loop may use.  start_precision_bits == 0 derives a starting
/// precision from the target.
struct EvalRequest {
  double target_radius = 1e-40;
  Prec max_precision_bits = kPrecisionCap;
  Prec start_precision_bits = 0;

  void validate() const {
    if (!(target_radius > 0))
      throw InvalidArgument("EvalRequest: target_radius must be positive");
    if (max_precision_bits > kPrecisionCap)
      throw InvalidArgument("EvalRequest: max precision above global cap");
  }
};

/// Gamma function via the Stirling series with certified remainder after a
/// recurrence shift into the asymptotic region.
/// Throws PoleEnclosure if s encloses 0, -1, -2, ...
ComplexBall gamma(const ComplexBall& s, const EvalRequest& req = {});

/// Riemann zeta: Euler-Maclaurin with certified remainder for Re(s) >= 1/2,
/// reflection through the functional equation otherwise.
/// Throws PoleEnclosure if s encloses 1.
ComplexBall zeta(const ComplexBall& s, const EvalRequest& req = {});

/// Completed xi function, entire: xi(s) = pi^(-s/2) Gamma(s/2+1) (s-1) zeta(s)
/// evaluated so that the zeta pole cancels inside the enclosure.
ComplexBall xi(const ComplexBall& s, const EvalRequest& req = {});

/// s(z) = (1 + sqrt(1+4z))/2, the root of s^2 - s = z above the
/// critical point.  Requires the enclosure of z strictly above -1/4.
RealBall s_of_z(const RealBall& z);

/// psi(z) = log(2 xi(s(z))) on z in (-1/4, 4 pi^2); real-valued there.
/// psi of the exact point 0 is the exact zero ball.
RealBall psi(const RealBall& z, const EvalRequest& req = {});

/// Truncated product form of xi over the first n_terms catalog zeros:
/// (1/2) prod (1 + (s^2-s)/(1/4+beta^2)) for on-line zeros times the
/// quartic factor for off-line ones.
ComplexBall xi_hadamard_partial(const ComplexBall& s,
                                const ZeroCatalog& catalog,
                                std::size_t n_terms);

}  // namespace xiaudit
