#include "xiaudit/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "xiaudit/bernoulli.hpp"
#include "xiaudit/zeros.hpp"

namespace xiaudit {

namespace {

double max_rad(const RealBall& b) { return b.rad_double(); }
double max_rad(const ComplexBall& b) {
  return std::max(b.re.rad_double(), b.im.rad_double());
}

Prec starting_precision(const EvalRequest& req) {
  if (req.start_precision_bits > 0)
    return std::min(req.start_precision_bits, req.max_precision_bits);
  double bits = -std::log2(req.target_radius);
  Prec p = static_cast<Prec>(std::max(0.0, bits)) + 64;
  p = std::max<Prec>(p, kDefaultPrec);
  return std::min(p, req.max_precision_bits);
}

/// Double the working precision until the computed enclosure meets the
/// requested radius or the cap is hit.
template <class Ball, class F>
Ball escalate(F&& eval, const EvalRequest& req, const char* what) {
  req.validate();
  Prec p = starting_precision(req);
  for (;;) {
    Ball r = eval(p);
    if (max_rad(r) <= req.target_radius) return r;
    if (p >= req.max_precision_bits)
      throw PrecisionExhausted(
          std::string(what) +
          ": target radius unreachable within the precision cap");
    p = std::min<Prec>(p * 2, req.max_precision_bits);
  }
}

RealBall upper_magnitude(const ComplexBall& z, Prec p) {
  return abs_ball(z, p);
}

ComplexBall div(const ComplexBall& a, const RealBall& b, Prec p) {
  return {xiaudit::div(a.re, b, p), xiaudit::div(a.im, b, p)};
}

// -- Stirling series --------------------------------------------------------

/// lnGamma(w) for an enclosure certified in the right half-plane, with the
/// classical remainder bound |R_M| <= sec(arg w / 2)^(2M+2) * |B_{2M+2}| /
/// ((2M+1)(2M+2)|w|^(2M+1)); Re w > 0 gives sec(arg w / 2) <= sqrt(2).
ComplexBall log_gamma_stirling(const ComplexBall& w, unsigned M, Prec p) {
  if (!w.re.is_positive())
    throw DomainViolation("stirling: argument not in the right half-plane");
  ComplexBall logw = log_ball(w, p);
  RealBall half = RealBall::from_int_pow2(1, -1, p);
  ComplexBall acc =
      sub(mul(sub(w, ComplexBall(half), p), logw, p), w, p);  // (w-1/2)logw - w
  RealBall two_pi = mul(const_pi(p), RealBall::from_int(2, p), p);
  acc.re = add(acc.re, mul(log_ball(two_pi, p), half, p), p);

  ComplexBall winv = div(ComplexBall(RealBall::from_int(1, p)), w, p);
  ComplexBall winv2 = mul(winv, winv, p);
  ComplexBall wpow = winv;  // w^{1-2k}, k = 1
  for (unsigned k = 1; k <= M; ++k) {
    RealBall c = bernoulli_2k_over_2k2km1(k, p);
    acc = add(acc, mul(c, wpow, p), p);
    if (k < M) wpow = mul(wpow, winv2, p);
  }

  // remainder bound
  RealBall bmag = abs_ball(bernoulli_2k_over_2k2km1(M + 1, 64));
  RealBall wabs = upper_magnitude(w, 64);
  RealBall denom = pow_si(wabs, 2 * static_cast<long>(M) + 1, 64);
  RealBall rem = xiaudit::div(bmag, denom, 64);
  rem = mul(rem, RealBall::from_int_pow2(1, static_cast<long>(M) + 1, 64), 64);
  acc.re = acc.re.with_radius_added(rem);
  acc.im = acc.im.with_radius_added(rem);
  return acc;
}

void gamma_pole_check(const ComplexBall& s) {
  if (!s.im.contains_zero()) return;
  detail::Mpfr lo(s.re.precision_bits() + 32), hi(s.re.precision_bits() + 32);
  s.re.lower(lo.get());
  s.re.upper(hi.get());
  if (mpfr_sgn(hi.get()) < 0 && mpfr_cmp_si(hi.get(), -100000) < 0)
    throw DomainViolation("gamma: argument too far left");
  mpfr_ceil(lo.get(), lo.get());
  mpfr_floor(hi.get(), hi.get());
  long n_lo = mpfr_get_si(lo.get(), MPFR_RNDN);
  long n_hi = mpfr_get_si(hi.get(), MPFR_RNDN);
  if (n_lo <= std::min<long>(n_hi, 0) && n_hi >= n_lo)
    throw PoleEnclosure("gamma: enclosure contains a non-positive integer");
}

ComplexBall gamma_fixed(const ComplexBall& s, Prec p) {
  gamma_pole_check(s);
  double shift_floor = std::max(16.0, static_cast<double>(p) / 6.4 + 2.0);
  unsigned M = static_cast<unsigned>(2.2 * shift_floor) + 2;
  double re_lo = mpfr_get_d(s.re.mid(), MPFR_RNDD) - s.re.rad_double();
  long n = 0;
  if (re_lo < shift_floor)
    n = static_cast<long>(std::ceil(shift_floor - re_lo)) + 1;

  ComplexBall w = s;
  if (n > 0) w.re = add(w.re, RealBall::from_int(n, p), p);
  ComplexBall lg = log_gamma_stirling(w, M, p);
  ComplexBall g = exp_ball(lg, p);
  if (n == 0) return g;

  ComplexBall prod(RealBall::from_int(1, p));
  for (long k = 0; k < n; ++k) {
    ComplexBall f = s;
    f.re = add(f.re, RealBall::from_int(k, p), p);
    prod = mul(prod, f, p);
  }
  try {
    return div(g, prod, p);
  } catch (const DivisionByZeroEnclosure&) {
    throw PoleEnclosure("gamma: enclosure contains a non-positive integer");
  }
}

// -- Euler-Maclaurin --------------------------------------------------------

struct EmParts {
  ComplexBall regular;  // everything except N^{1-s}/(s-1)
  unsigned long N = 0;
  RealBall log_n;  // log N at working precision
};

/// Regular part of the Euler-Maclaurin formula for zeta(s) with certified
/// (Backlund) remainder folded into the radius.
EmParts zeta_em_regular(const ComplexBall& s, Prec p) {
  double t_abs = std::abs(s.im.mid_double()) + s.im.rad_double();
  double sigma_lo = s.re.mid_double() - s.re.rad_double();
  unsigned M = std::max<unsigned>(12, static_cast<unsigned>(p / 3.1) + 1);
  unsigned long N = static_cast<unsigned long>((2.0 * M + t_abs) / 2.17) + 2;
  N = std::max<unsigned long>(N, M);

  for (int attempt = 0;; ++attempt) {
    if (sigma_lo <= -(2.0 * M + 1))
      throw DomainViolation("zeta: argument too far left for this precision");
    ComplexBall sum(RealBall::from_int(1, p));  // n = 1 term
    for (unsigned long nn = 2; nn < N; ++nn) {
      RealBall ln = log_ball(RealBall::from_int(static_cast<long>(nn), p), p);
      sum = add(sum, exp_ball(mul(ln, neg(s), p), p), p);
    }
    RealBall logN =
        log_ball(RealBall::from_int(static_cast<long>(N), p), p);
    ComplexBall Nms = exp_ball(mul(logN, neg(s), p), p);  // N^{-s}
    sum = add(sum, mul(RealBall::from_int_pow2(1, -1, p), Nms, p), p);

    // Bernoulli tail: sum_k B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
    RealBall n_inv2 =
        xiaudit::div(RealBall::from_int(1, p),
                     RealBall::from_int(static_cast<long>(N), p), p);
    n_inv2 = mul(n_inv2, n_inv2, p);
    ComplexBall poch = s;                                    // (s)_1
    ComplexBall npow = mul(RealBall::from_int(static_cast<long>(N), p), Nms,
                           p);                               // N^{1-s}
    npow = mul(n_inv2, npow, p);                             // N^{-s-1}
    ComplexBall bsum(RealBall::from_int(0, p));
    for (unsigned k = 1; k <= M; ++k) {
      RealBall c = bernoulli_2k_over_fact(k, p);
      bsum = add(bsum, mul(c, mul(poch, npow, p), p), p);
      if (k < M) {
        ComplexBall f1 = s, f2 = s;
        f1.re = add(f1.re, RealBall::from_int(2 * k - 1, p), p);
        f2.re = add(f2.re, RealBall::from_int(2 * k, p), p);
        poch = mul(poch, mul(f1, f2, p), p);
        npow = mul(n_inv2, npow, p);
      }
    }
    sum = add(sum, bsum, p);

    // Backlund remainder: |B_{2M+2}/(2M+2)! (s)_{2M+1} N^{-s-2M-1}| *
    // |(s+2M+1)/(sigma+2M+1)|
    ComplexBall f1 = s, f2 = s;
    f1.re = add(f1.re, RealBall::from_int(2 * M - 1, p), p);
    f2.re = add(f2.re, RealBall::from_int(2 * M, p), p);
    ComplexBall poch_full = mul(poch, mul(f1, f2, p), p);  // (s)_{2M+1}
    RealBall amag = upper_magnitude(poch_full, 64);
    RealBall bmag = abs_ball(bernoulli_2k_over_fact(M + 1, 64));
    RealBall sigma = s.re;
    RealBall expo = add(sigma, RealBall::from_int(2 * M + 1, 64), 64);
    RealBall npw = exp_ball(mul(neg(expo), logN, 64), 64);  // N^{-sigma-2M-1}
    ComplexBall stop = s;
    stop.re = add(stop.re, RealBall::from_int(2 * M + 1, p), p);
    RealBall ratio = xiaudit::div(upper_magnitude(stop, 64), expo, 64);
    RealBall rem = mul(mul(bmag, amag, 64), mul(npw, ratio, 64), 64);

    // accept when the remainder is negligible at this precision
    double rem_ub = rem.mid_double() + rem.rad_double();
    double scale = std::max(1.0, std::abs(sum.re.mid_double()) +
                                     std::abs(sum.im.mid_double()));
    if (rem_ub <= std::ldexp(scale, static_cast<int>(-p) + 6) ||
        attempt >= 3) {
      sum.re = sum.re.with_radius_added(rem);
      sum.im = sum.im.with_radius_added(rem);
      return {sum, N, logN};
    }
    N *= 2;
  }
}

/// sin(w)/w with the removable singularity handled by series when the
/// enclosure of w reaches zero.
ComplexBall sinc_ball(const ComplexBall& w, Prec p) {
  if (!w.contains_zero()) {
    RealBall den2 = add(mul(w.re, w.re, p), mul(w.im, w.im, p), p);
    if (den2.is_positive()) return div(sin_ball(w, p), w, p);
  }
  RealBall wmag = upper_magnitude(w, 64);
  if (wmag.mid_double() + wmag.rad_double() > 1.0)
    throw InvalidArgument("sinc: enclosure both large and straddling zero");
  ComplexBall w2 = mul(w, w, p);
  ComplexBall term(RealBall::from_int(1, p));
  ComplexBall acc = term;
  RealBall tmag = RealBall::from_int(1, 64);
  for (unsigned j = 1; j < 300; ++j) {
    term = mul(term, w2, p);
    RealBall fac = RealBall::from_int(
        static_cast<long>(2 * j) * static_cast<long>(2 * j + 1), p);
    term = div(term, fac, p);
    if (j % 2 == 1)
      acc = sub(acc, term, p);
    else
      acc = add(acc, term, p);
    tmag = mul(tmag, mul(wmag, wmag, 64), 64);
    tmag = xiaudit::div(
        tmag,
        RealBall::from_int(
            static_cast<long>(2 * j) * static_cast<long>(2 * j + 1), 64),
        64);
    double ub = tmag.mid_double() + tmag.rad_double();
    if (ub <= std::ldexp(1.0, static_cast<int>(-p) - 6)) {
      // alternating tail bounded by 1.2x the next term for |w| <= 1
      RealBall tail = mul(tmag, RealBall::from_decimal("1.2", 64), 64);
      acc.re = acc.re.with_radius_added(tail);
      acc.im = acc.im.with_radius_added(tail);
      return acc;
    }
  }
  throw PrecisionExhausted("sinc: series failed to converge");
}

ComplexBall zeta_fixed(const ComplexBall& s, Prec p) {
  if (s.re.mid_double() >= 0.5) {
    ComplexBall u = sub(s, ComplexBall::from_int(1, p), p);
    if (u.contains_zero())
      throw PoleEnclosure("zeta: enclosure contains the pole at s = 1");
    EmParts parts = zeta_em_regular(s, p);
    ComplexBall one_minus_s = neg(u);
    ComplexBall pole =
        div(exp_ball(mul(parts.log_n, one_minus_s, p), p), u, p);
    return add(parts.regular, pole, p);
  }
  // reflection: zeta(s) = 2^s pi^{s-1} Gamma(1-s)
  //                       [sin(pi s/2) Reg(1-s) - (pi/2) N^s sinc(pi s/2)]
  ComplexBall sp = sub(ComplexBall::from_int(1, p), s, p);
  EmParts parts = zeta_em_regular(sp, p);
  RealBall pi = const_pi(p);
  ComplexBall w = mul(mul(pi, RealBall::from_int_pow2(1, -1, p), p), s, p);
  ComplexBall sw = sin_ball(w, p);
  ComplexBall n_pow_s = exp_ball(mul(parts.log_n, s, p), p);
  ComplexBall core = mul(sw, parts.regular, p);
  ComplexBall corr = mul(mul(pi, RealBall::from_int_pow2(1, -1, p), p),
                         mul(n_pow_s, sinc_ball(w, p), p), p);
  core = sub(core, corr, p);
  ComplexBall chi = pow_complex(RealBall::from_int(2, p), s, p);
  chi = mul(chi, pow_complex(pi, sub(s, ComplexBall::from_int(1, p), p), p),
            p);
  chi = mul(chi, gamma_fixed(sp, p), p);
  return mul(chi, core, p);
}

ComplexBall xi_fixed(const ComplexBall& s_in, Prec p) {
  ComplexBall s = s_in;
  if (s.re.mid_double() < 0.5)
    s = sub(ComplexBall::from_int(1, p), s, p);  // xi(1-s) = xi(s)
  EmParts parts = zeta_em_regular(s, p);
  ComplexBall u = sub(s, ComplexBall::from_int(1, p), p);
  // L = (s-1) zeta(s), with the pole cancelled:
  // L = (s-1) Reg + N^{1-s}, and N^{1-s} = exp(-(s-1) log N)
  ComplexBall L = add(mul(u, parts.regular, p),
                      exp_ball(mul(parts.log_n, neg(u), p), p), p);
  ComplexBall half_s_plus_1 =
      add(mul(RealBall::from_int_pow2(1, -1, p), s, p),
          ComplexBall::from_int(1, p), p);
  ComplexBall g = gamma_fixed(half_s_plus_1, p);
  ComplexBall pis = pow_complex(
      const_pi(p), mul(RealBall::from_int_pow2(-1, -1, p), s, p), p);
  return mul(mul(pis, g, p), L, p);
}

}  // namespace

ComplexBall gamma(const ComplexBall& s, const EvalRequest& req) {
  return escalate<ComplexBall>([&](Prec p) { return gamma_fixed(s, p); }, req,
                               "gamma");
}

ComplexBall zeta(const ComplexBall& s, const EvalRequest& req) {
  return escalate<ComplexBall>([&](Prec p) { return zeta_fixed(s, p); }, req,
                               "zeta");
}

ComplexBall xi(const ComplexBall& s, const EvalRequest& req) {
  return escalate<ComplexBall>([&](Prec p) { return xi_fixed(s, p); }, req,
                               "xi");
}

RealBall s_of_z(const RealBall& z) {
  Prec p = std::max(z.precision_bits(), kMinPrec);
  RealBall q = add(RealBall::from_int(1, p),
                   mul(RealBall::from_int(4, p), z, p), p);
  if (!q.is_positive())
    throw DomainViolation("s_of_z: enclosure of z reaches -1/4 or below");
  RealBall s = mul(add(RealBall::from_int(1, p), sqrt_ball(q, p), p),
                   RealBall::from_int_pow2(1, -1, p), p);
  return s;
}

RealBall psi(const RealBall& z, const EvalRequest& req) {
  req.validate();
  {
    // domain: (-1/4, 4 pi^2)
    RealBall four_pi2 = mul(pow_si(const_pi(64), 2, 64),
                            RealBall::from_int(4, 64), 64);
    detail::Mpfr zu(z.precision_bits() + 32), bl(96);
    z.upper(zu.get());
    four_pi2.lower(bl.get());
    if (mpfr_cmp(zu.get(), bl.get()) >= 0)
      throw DomainViolation("psi: z reaches 4 pi^2 or beyond");
  }
  if (z.is_exact_zero()) return RealBall::from_int(0, kDefaultPrec);

  return escalate<RealBall>(
      [&](Prec p) {
        RealBall q = add(RealBall::from_int(1, p),
                         mul(RealBall::from_int(4, p), z, p), p);
        if (!q.is_positive())
          throw DomainViolation("psi: enclosure of z reaches -1/4 or below");
        RealBall sq = sqrt_ball(q, p);
        RealBall s = mul(add(RealBall::from_int(1, p), sq, p),
                         RealBall::from_int_pow2(1, -1, p), p);
        // u = s - 1 computed stably as 2z/(1 + sqrt(1+4z))
        RealBall u = div(mul(RealBall::from_int(2, p), z, p),
                         add(RealBall::from_int(1, p), sq, p), p);
        ComplexBall cs(s);
        EmParts parts = zeta_em_regular(cs, p);
        ComplexBall L =
            add(mul(ComplexBall(u), parts.regular, p),
                exp_ball(mul(parts.log_n, ComplexBall(neg(u)), p), p), p);
        ComplexBall half_s_plus_1 =
            add(ComplexBall(mul(RealBall::from_int_pow2(1, -1, p), s, p)),
                ComplexBall::from_int(1, p), p);
        ComplexBall g = gamma_fixed(half_s_plus_1, p);
        ComplexBall pis = pow_complex(
            const_pi(p),
            ComplexBall(mul(RealBall::from_int_pow2(-1, -1, p), s, p)), p);
        ComplexBall two_xi =
            mul(RealBall::from_int(2, p), mul(mul(pis, g, p), L, p), p);
        if (!two_xi.im.contains_zero())
          throw Error("psi: real evaluation produced nonreal enclosure");
        if (!two_xi.re.is_positive())
          throw PrecisionExhausted(
              "psi: 2 xi(s) not certified positive at this precision");
        return log_ball(two_xi.re.with_radius_added(two_xi.im), p);
      },
      req, "psi");
}

ComplexBall xi_hadamard_partial(const ComplexBall& s,
                                const ZeroCatalog& catalog,
                                std::size_t n_terms) {
  const auto& entries = catalog.entries();
  if (entries.empty()) throw EmptyCatalog("xi_hadamard_partial: empty catalog");
  if (n_terms == 0 || n_terms > entries.size())
    throw InvalidArgument("xi_hadamard_partial: n_terms out of range");
  Prec p = std::max(s.precision_bits(), kDefaultPrec);
  RealBall quarter = RealBall::from_int_pow2(1, -2, p);
  ComplexBall zc = sub(mul(s, s, p), s, p);
  ComplexBall prod(RealBall::from_int(1, p));
  for (std::size_t i = 0; i < n_terms; ++i) {
    const ZeroEntry& e = entries[i];
    ComplexBall f;
    if (e.delta.is_exact_zero()) {
      RealBall den = add(quarter, mul(e.beta, e.beta, p), p);
      f = add(ComplexBall::from_int(1, p), div(zc, den, p), p);
    } else {
      RealBall d2 = mul(e.delta, e.delta, p);
      RealBall b2 = mul(e.beta, e.beta, p);
      RealBall base = add(add(quarter, d2, p), b2, p);
      RealBall den = sub(mul(base, base, p), d2, p);
      RealBall lin = add(sub(RealBall::from_int_pow2(1, -1, p),
                             mul(RealBall::from_int(2, p), d2, p), p),
                         mul(RealBall::from_int(2, p), b2, p), p);
      ComplexBall num = add(mul(zc, zc, p), mul(lin, zc, p), p);
      f = add(ComplexBall::from_int(1, p), div(num, den, p), p);
    }
    prod = mul(prod, f, p);
  }
  return mul(RealBall::from_int_pow2(1, -1, p), prod, p);
}

}  // namespace xiaudit
