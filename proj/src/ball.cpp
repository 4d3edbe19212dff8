#include "xiaudit/ball.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

namespace xiaudit {

namespace {

Prec pick(Prec requested, const RealBall& a) {
  return requested > 0 ? requested : a.precision_bits();
}
Prec pick(Prec requested, const RealBall& a, const RealBall& b) {
  return requested > 0 ? requested
                       : std::max(a.precision_bits(), b.precision_bits());
}

struct Tmp {
  mpfr_t v;
  explicit Tmp(Prec p) { mpfr_init2(v, p); }
  ~Tmp() { mpfr_clear(v); }
  operator mpfr_ptr() { return v; }
  operator mpfr_srcptr() const { return v; }
};

/// out (kRadPrec) = |x| rounded up.
void mag_upper(mpfr_ptr out, mpfr_srcptr x) {
  mpfr_set(out, x, MPFR_RNDA);
  mpfr_abs(out, out, MPFR_RNDU);
}

/// out (kRadPrec) = |x| rounded down (toward zero).
void mag_lower(mpfr_ptr out, mpfr_srcptr x) {
  mpfr_set(out, x, MPFR_RNDZ);
  mpfr_abs(out, out, MPFR_RNDD);
}

/// Account for the rounding error of a midpoint computed with RNDN:
/// one full ulp of mid is added to rad whenever ternary is nonzero.
void add_rounding_rad(mpfr_ptr rad, mpfr_srcptr mid, int ternary) {
  if (ternary == 0) return;
  if (!mpfr_regular_p(mid)) {
    if (mpfr_zero_p(mid)) {
      // Midpoint underflowed to zero; bound by the smallest normal.
      Tmp u(kRadPrec);
      mpfr_set_ui_2exp(u, 1, mpfr_get_emin(), MPFR_RNDU);
      mpfr_add(rad, rad, u, MPFR_RNDU);
    }
    return;  // inf/nan is caught by check_valid
  }
  Tmp u(kRadPrec);
  mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
  mpfr_add(rad, rad, u, MPFR_RNDU);
}

RealBall make(Prec p) {
  RealBall r;
  mpfr_set_prec(r.mid_mut(), std::max<Prec>(p, kMinPrec));
  mpfr_set_zero(r.mid_mut(), 1);
  mpfr_set_zero(r.rad_mut(), 1);
  return r;
}

using UnaryMpfr = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

/// Enclosure of a monotone increasing function via directed endpoint
/// evaluation.  lo_check: 0 none, 1 require >= 0, 2 require > 0.
RealBall monotone_incr(UnaryMpfr f, const RealBall& a, Prec p, int lo_check,
                       const char* name) {
  RealBall r = make(p);
  Tmp lo_in(p), hi_in(p), lo_out(p), hi_out(p);
  mpfr_sub(lo_in, a.mid(), a.rad(), MPFR_RNDD);
  mpfr_add(hi_in, a.mid(), a.rad(), MPFR_RNDU);
  if (lo_check == 1 && mpfr_sgn(lo_in) < 0)
    throw DomainViolation(std::string(name) +
                          ": enclosure reaches negative values");
  if (lo_check == 2 && mpfr_sgn(lo_in) <= 0)
    throw DomainViolation(std::string(name) +
                          ": enclosure reaches non-positive values");
  f(lo_out, lo_in, MPFR_RNDD);
  f(hi_out, hi_in, MPFR_RNDU);
  mpfr_add(r.mid_mut(), lo_out, hi_out, MPFR_RNDN);
  mpfr_div_2ui(r.mid_mut(), r.mid_mut(), 1, MPFR_RNDN);
  Tmp d1(kRadPrec), d2(kRadPrec);
  mpfr_sub(d1, r.mid(), lo_out, MPFR_RNDU);
  mpfr_sub(d2, hi_out, r.mid(), MPFR_RNDU);
  if (mpfr_sgn(d1) < 0) mpfr_set_zero(d1, 1);
  if (mpfr_sgn(d2) < 0) mpfr_set_zero(d2, 1);
  mpfr_max(r.rad_mut(), d1, d2, MPFR_RNDU);
  r.check_valid(name);
  return r;
}

/// Lipschitz-style enclosure: mid = f(mid), rad' = rad * L + rounding,
/// L an upper bound for |f'| on the enclosure.
RealBall lipschitz(UnaryMpfr f, const RealBall& a, Prec p, mpfr_srcptr lip,
                   const char* name) {
  RealBall r = make(p);
  int t = f(r.mid_mut(), a.mid(), MPFR_RNDN);
  mpfr_mul(r.rad_mut(), a.rad(), lip, MPFR_RNDU);
  add_rounding_rad(r.rad_mut(), r.mid(), t);
  r.check_valid(name);
  return r;
}

}  // namespace

RealBall RealBall::from_int(long v, Prec prec) {
  RealBall r = make(prec);
  int t = mpfr_set_si(r.mid_mut(), v, MPFR_RNDN);
  add_rounding_rad(r.rad_mut(), r.mid(), t);
  r.check_valid("from_int");
  return r;
}

RealBall RealBall::from_int_pow2(long k, long e, Prec prec) {
  RealBall r = make(prec);
  int t = mpfr_set_si_2exp(r.mid_mut(), k, e, MPFR_RNDN);
  add_rounding_rad(r.rad_mut(), r.mid(), t);
  r.check_valid("from_int_pow2");
  return r;
}

RealBall RealBall::from_decimal(std::string_view s, Prec prec) {
  std::string buf(s);
  // trim
  auto b = buf.find_first_not_of(" \t");
  auto e = buf.find_last_not_of(" \t");
  if (b == std::string::npos) throw InvalidArgument("empty decimal literal");
  buf = buf.substr(b, e - b + 1);
  RealBall r = make(prec);
  char* end = nullptr;
  int t = mpfr_strtofr(r.mid_mut(), buf.c_str(), &end, 10, MPFR_RNDN);
  if (end == buf.c_str() || *end != '\0')
    throw InvalidArgument("malformed decimal literal: '" + buf + "'");
  add_rounding_rad(r.rad_mut(), r.mid(), t);
  r.check_valid("from_decimal");
  return r;
}

RealBall RealBall::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Prec prec) {
  if (mpfr_cmp(lo, hi) > 0)
    throw InvalidArgument("from_endpoints: lo > hi");
  RealBall r = make(prec);
  mpfr_add(r.mid_mut(), lo, hi, MPFR_RNDN);
  mpfr_div_2ui(r.mid_mut(), r.mid_mut(), 1, MPFR_RNDN);
  Tmp d1(kRadPrec), d2(kRadPrec);
  mpfr_sub(d1, r.mid(), lo, MPFR_RNDU);
  mpfr_sub(d2, hi, r.mid(), MPFR_RNDU);
  if (mpfr_sgn(d1) < 0) mpfr_set_zero(d1, 1);
  if (mpfr_sgn(d2) < 0) mpfr_set_zero(d2, 1);
  mpfr_max(r.rad_mut(), d1, d2, MPFR_RNDU);
  r.check_valid("from_endpoints");
  return r;
}

RealBall RealBall::from_mpfr_exact(mpfr_srcptr m) {
  RealBall r = make(mpfr_get_prec(m));
  mpfr_set(r.mid_mut(), m, MPFR_RNDN);
  r.check_valid("from_mpfr_exact");
  return r;
}

RealBall RealBall::with_radius_added(mpfr_srcptr extra) const {
  RealBall r = *this;
  Tmp m(kRadPrec);
  mag_upper(m, extra);
  mpfr_add(r.rad_mut(), r.rad(), m, MPFR_RNDU);
  r.check_valid("with_radius_added");
  return r;
}

RealBall RealBall::with_radius_added(const RealBall& extra) const {
  RealBall r = *this;
  Tmp m(kRadPrec);
  mag_upper(m, extra.mid());
  mpfr_add(m, m, extra.rad(), MPFR_RNDU);
  mpfr_add(r.rad_mut(), r.rad(), m, MPFR_RNDU);
  r.check_valid("with_radius_added");
  return r;
}

bool RealBall::contains_zero() const {
  return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0;
}

bool RealBall::is_positive() const {
  return mpfr_sgn(mid_.get()) > 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

bool RealBall::is_negative() const {
  return mpfr_sgn(mid_.get()) < 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

bool RealBall::encloses(const RealBall& x) const {
  Prec q = std::max(precision_bits(), x.precision_bits()) + 64;
  Tmp a(q), b(q);
  mpfr_sub(a, mid(), rad(), MPFR_RNDU);      // >= true lower of this
  mpfr_sub(b, x.mid(), x.rad(), MPFR_RNDD);  // <= true lower of x
  if (mpfr_cmp(a, b) > 0) return false;
  mpfr_add(a, mid(), rad(), MPFR_RNDD);      // <= true upper of this
  mpfr_add(b, x.mid(), x.rad(), MPFR_RNDU);  // >= true upper of x
  return mpfr_cmp(b, a) <= 0;
}

bool RealBall::overlaps(const RealBall& x) const {
  Prec q = std::max(precision_bits(), x.precision_bits()) + 64;
  Tmp d1(q), d2(q), s(kRadPrec);
  mpfr_sub(d1, mid(), x.mid(), MPFR_RNDD);
  mpfr_sub(d2, mid(), x.mid(), MPFR_RNDU);
  if (mpfr_sgn(d1) != mpfr_sgn(d2)) return true;  // difference straddles 0
  Tmp dl(kRadPrec);
  if (mpfr_cmpabs(d1, d2) <= 0)
    mag_lower(dl, d1);
  else
    mag_lower(dl, d2);
  mpfr_add(s, rad(), x.rad(), MPFR_RNDU);
  return mpfr_cmp(dl, s) <= 0;
}

bool RealBall::contains_decimal(std::string_view dec) const {
  const Prec q = std::max<Prec>(precision_bits(), 320);
  std::string buf(dec);
  Tmp vlo(q), vhi(q), lo(q), hi(q);
  char* end = nullptr;
  mpfr_strtofr(vlo, buf.c_str(), &end, 10, MPFR_RNDD);
  if (end == buf.c_str() || *end != '\0')
    throw InvalidArgument("malformed decimal literal: '" + buf + "'");
  mpfr_strtofr(vhi, buf.c_str(), &end, 10, MPFR_RNDU);
  mpfr_sub(lo, mid(), rad(), MPFR_RNDU);  // >= true lower
  mpfr_add(hi, mid(), rad(), MPFR_RNDD);  // <= true upper
  return mpfr_cmp(lo, vlo) <= 0 && mpfr_cmp(vhi, hi) <= 0;
}

bool RealBall::contains_int(long v) const {
  Prec q = precision_bits() + 64;
  Tmp lo(q), hi(q);
  mpfr_sub(lo, mid(), rad(), MPFR_RNDU);
  mpfr_add(hi, mid(), rad(), MPFR_RNDD);
  return mpfr_cmp_si(lo, v) <= 0 && mpfr_cmp_si(hi, v) >= 0;
}

std::string RealBall::mid_decimal() const {
  if (mpfr_zero_p(mid())) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, 0, mid(), MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits = digits.substr(1);
  }
  // strip trailing zeros but keep at least one digit
  auto last = digits.find_last_not_of('0');
  digits = digits.substr(0, std::max<std::size_t>(last + 1, 1));
  std::string out = sign + digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

std::string RealBall::rad_decimal() const {
  if (mpfr_zero_p(rad())) return "0";
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.3R*e", MPFR_RNDU, rad());
  return std::string(buf);
}

void RealBall::check_valid(const char* where) const {
  if (!mpfr_number_p(mid()) || !mpfr_number_p(rad()) || mpfr_sgn(rad()) < 0)
    throw Error(std::string(where) + ": ball left the finite range");
}

RealBall add(const RealBall& a, const RealBall& b, Prec prec) {
  Prec p = pick(prec, a, b);
  RealBall r = make(p);
  int t = mpfr_add(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(r.rad_mut(), a.rad(), b.rad(), MPFR_RNDU);
  add_rounding_rad(r.rad_mut(), r.mid(), t);
  r.check_valid("add");
  return r;
}

RealBall sub(const RealBall& a, const RealBall& b, Prec prec) {
  Prec p = pick(prec, a, b);
  RealBall r = make(p);
  int t = mpfr_sub(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(r.rad_mut(), a.rad(), b.rad(), MPFR_RNDU);
  add_rounding_rad(r.rad_mut(), r.mid(), t);
  r.check_valid("sub");
  return r;
}

RealBall mul(const RealBall& a, const RealBall& b, Prec prec) {
  Prec p = pick(prec, a, b);
  RealBall r = make(p);
  int t = mpfr_mul(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  Tmp ma(kRadPrec), mb(kRadPrec), w(kRadPrec);
  mag_upper(ma, a.mid());
  mag_upper(mb, b.mid());
  mpfr_mul(w, ma, b.rad(), MPFR_RNDU);
  mpfr_set(r.rad_mut(), w, MPFR_RNDU);
  mpfr_mul(w, mb, a.rad(), MPFR_RNDU);
  mpfr_add(r.rad_mut(), r.rad(), w, MPFR_RNDU);
  mpfr_mul(w, a.rad(), b.rad(), MPFR_RNDU);
  mpfr_add(r.rad_mut(), r.rad(), w, MPFR_RNDU);
  add_rounding_rad(r.rad_mut(), r.mid(), t);
  r.check_valid("mul");
  return r;
}

RealBall div(const RealBall& a, const RealBall& b, Prec prec) {
  Prec p = pick(prec, a, b);
  Tmp lb(kRadPrec);
  mag_lower(lb, b.mid());
  if (mpfr_cmp(lb, b.rad()) <= 0)
    throw DivisionByZeroEnclosure("div: divisor enclosure contains zero");
  RealBall r = make(p);
  int t = mpfr_div(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
  Tmp q(kRadPrec), num(kRadPrec), den(kRadPrec), w(kRadPrec);
  mag_upper(q, r.mid());
  add_rounding_rad(q, r.mid(), 1);  // |exact quotient| <= |mid| + ulp
  mpfr_mul(num, q, b.rad(), MPFR_RNDU);
  mpfr_add(num, num, a.rad(), MPFR_RNDU);
  mpfr_sub(den, lb, b.rad(), MPFR_RNDD);
  mpfr_div(w, num, den, MPFR_RNDU);
  mpfr_set(r.rad_mut(), w, MPFR_RNDU);
  add_rounding_rad(r.rad_mut(), r.mid(), t);
  r.check_valid("div");
  return r;
}

RealBall neg(const RealBall& a) {
  RealBall r = a;
  mpfr_neg(r.mid_mut(), r.mid(), MPFR_RNDN);  // exact
  return r;
}

RealBall abs_ball(const RealBall& a) {
  return mpfr_sgn(a.mid()) < 0 ? neg(a) : a;
}

RealBall sqrt_ball(const RealBall& a, Prec prec) {
  return monotone_incr(mpfr_sqrt, a, pick(prec, a), 1, "sqrt");
}

RealBall log_ball(const RealBall& a, Prec prec) {
  return monotone_incr(mpfr_log, a, pick(prec, a), 2, "log");
}

RealBall exp_ball(const RealBall& a, Prec prec) {
  return monotone_incr(mpfr_exp, a, pick(prec, a), 0, "exp");
}

RealBall atan_ball(const RealBall& a, Prec prec) {
  return monotone_incr(mpfr_atan, a, pick(prec, a), 0, "atan");
}

RealBall sin_ball(const RealBall& a, Prec prec) {
  Tmp lip(kRadPrec);
  mpfr_set_ui(lip, 1, MPFR_RNDU);
  RealBall r = lipschitz(mpfr_sin, a, pick(prec, a), lip, "sin");
  // |sin| <= 1, so the radius never needs to exceed 2.
  if (mpfr_cmp_ui(r.rad(), 2) > 0) mpfr_set_ui(r.rad_mut(), 2, MPFR_RNDU);
  return r;
}

RealBall cos_ball(const RealBall& a, Prec prec) {
  Tmp lip(kRadPrec);
  mpfr_set_ui(lip, 1, MPFR_RNDU);
  RealBall r = lipschitz(mpfr_cos, a, pick(prec, a), lip, "cos");
  if (mpfr_cmp_ui(r.rad(), 2) > 0) mpfr_set_ui(r.rad_mut(), 2, MPFR_RNDU);
  return r;
}

namespace {
/// cosh(|mid| + rad) rounded up: Lipschitz bound for sinh and cosh.
void cosh_bound(mpfr_ptr out, const RealBall& a) {
  Tmp m(kRadPrec);
  mag_upper(m, a.mid());
  mpfr_add(m, m, a.rad(), MPFR_RNDU);
  mpfr_cosh(out, m, MPFR_RNDU);
}
}  // namespace

RealBall sinh_ball(const RealBall& a, Prec prec) {
  Tmp lip(kRadPrec);
  cosh_bound(lip, a);
  return lipschitz(mpfr_sinh, a, pick(prec, a), lip, "sinh");
}

RealBall cosh_ball(const RealBall& a, Prec prec) {
  Tmp lip(kRadPrec);
  cosh_bound(lip, a);
  return lipschitz(mpfr_cosh, a, pick(prec, a), lip, "cosh");
}

RealBall pow_si(const RealBall& a, long n, Prec prec) {
  Prec p = pick(prec, a);
  if (n == 0) return RealBall::from_int(1, p);
  if (n < 0) return div(RealBall::from_int(1, p), pow_si(a, -n, p), p);
  Tmp lo_in(p);
  mpfr_sub(lo_in, a.mid(), a.rad(), MPFR_RNDD);
  if (mpfr_sgn(lo_in) >= 0) {
    // monotone on nonnegative enclosures
    RealBall r = make(p);
    Tmp hi_in(p), lo_out(p), hi_out(p);
    mpfr_add(hi_in, a.mid(), a.rad(), MPFR_RNDU);
    mpfr_pow_si(lo_out, lo_in, n, MPFR_RNDD);
    mpfr_pow_si(hi_out, hi_in, n, MPFR_RNDU);
    return RealBall::from_endpoints(lo_out, hi_out, p);
  }
  // general case: binary exponentiation over ball multiplication
  RealBall base = a;
  RealBall acc = RealBall::from_int(1, p);
  unsigned long m = static_cast<unsigned long>(n);
  while (m > 0) {
    if (m & 1) acc = mul(acc, base, p);
    m >>= 1;
    if (m) base = mul(base, base, p);
  }
  return acc;
}

RealBall pow_ball(const RealBall& a, const RealBall& b, Prec prec) {
  Prec p = pick(prec, a, b);
  return exp_ball(mul(b, log_ball(a, p), p), p);
}

RealBall min_ball(const RealBall& a, const RealBall& b) {
  Prec p = std::max(a.precision_bits(), b.precision_bits());
  Tmp alo(p), ahi(p), blo(p), bhi(p);
  a.lower(alo);
  a.upper(ahi);
  b.lower(blo);
  b.upper(bhi);
  mpfr_min(alo, alo, blo, MPFR_RNDD);
  mpfr_min(ahi, ahi, bhi, MPFR_RNDU);
  return RealBall::from_endpoints(alo, ahi, p);
}

RealBall max_ball(const RealBall& a, const RealBall& b) {
  Prec p = std::max(a.precision_bits(), b.precision_bits());
  Tmp alo(p), ahi(p), blo(p), bhi(p);
  a.lower(alo);
  a.upper(ahi);
  b.lower(blo);
  b.upper(bhi);
  mpfr_max(alo, alo, blo, MPFR_RNDD);
  mpfr_max(ahi, ahi, bhi, MPFR_RNDU);
  return RealBall::from_endpoints(alo, ahi, p);
}

namespace {
RealBall certified_constant(int (*f)(mpfr_ptr, mpfr_rnd_t), Prec prec,
                            const char* name) {
  if (prec < kMinPrec)
    throw InvalidArgument(std::string(name) + ": precision below minimum of " +
                          std::to_string(kMinPrec) + " bits");
  if (prec > kPrecisionCap)
    throw InvalidArgument(std::string(name) + ": precision above cap");
  RealBall r = make(prec);
  int t = f(r.mid_mut(), MPFR_RNDN);
  add_rounding_rad(r.rad_mut(), r.mid(), t ? t : 1);
  r.check_valid(name);
  return r;
}
}  // namespace

RealBall const_pi(Prec precision_bits) {
  return certified_constant(mpfr_const_pi, precision_bits, "const_pi");
}

RealBall const_euler_gamma(Prec precision_bits) {
  return certified_constant(mpfr_const_euler, precision_bits,
                            "const_euler_gamma");
}

RealBall const_log2(Prec precision_bits) {
  return certified_constant(mpfr_const_log2, precision_bits, "const_log2");
}

// ---------------------------------------------------------------------------
// complex balls

namespace {
Prec pick(Prec requested, const ComplexBall& a) {
  return requested > 0 ? requested : a.precision_bits();
}
Prec pick(Prec requested, const ComplexBall& a, const ComplexBall& b) {
  return requested > 0 ? requested
                       : std::max(a.precision_bits(), b.precision_bits());
}
}  // namespace

ComplexBall add(const ComplexBall& a, const ComplexBall& b, Prec prec) {
  Prec p = pick(prec, a, b);
  return {add(a.re, b.re, p), add(a.im, b.im, p)};
}

ComplexBall sub(const ComplexBall& a, const ComplexBall& b, Prec prec) {
  Prec p = pick(prec, a, b);
  return {sub(a.re, b.re, p), sub(a.im, b.im, p)};
}

ComplexBall mul(const ComplexBall& a, const ComplexBall& b, Prec prec) {
  Prec p = pick(prec, a, b);
  return {sub(mul(a.re, b.re, p), mul(a.im, b.im, p), p),
          add(mul(a.re, b.im, p), mul(a.im, b.re, p), p)};
}

ComplexBall div(const ComplexBall& a, const ComplexBall& b, Prec prec) {
  Prec p = pick(prec, a, b);
  RealBall den = add(mul(b.re, b.re, p), mul(b.im, b.im, p), p);
  ComplexBall num = mul(a, conj_ball(b), p);
  return {div(num.re, den, p), div(num.im, den, p)};
}

ComplexBall neg(const ComplexBall& a) { return {neg(a.re), neg(a.im)}; }

ComplexBall conj_ball(const ComplexBall& a) { return {a.re, neg(a.im)}; }

ComplexBall mul(const RealBall& a, const ComplexBall& b, Prec prec) {
  Prec p = prec > 0 ? prec
                    : std::max(a.precision_bits(), b.precision_bits());
  return {mul(a, b.re, p), mul(a, b.im, p)};
}

ComplexBall exp_ball(const ComplexBall& a, Prec prec) {
  Prec p = pick(prec, a);
  RealBall m = exp_ball(a.re, p);
  return {mul(m, cos_ball(a.im, p), p), mul(m, sin_ball(a.im, p), p)};
}

ComplexBall log_ball(const ComplexBall& a, Prec prec) {
  Prec p = pick(prec, a);
  if (!a.re.is_positive())
    throw DomainViolation(
        "complex log: argument not certified in the right half-plane");
  RealBall mod2 = add(mul(a.re, a.re, p), mul(a.im, a.im, p), p);
  RealBall lr = mul(log_ball(mod2, p), RealBall::from_int_pow2(1, -1, p), p);
  RealBall arg = atan_ball(div(a.im, a.re, p), p);
  return {lr, arg};
}

ComplexBall sin_ball(const ComplexBall& a, Prec prec) {
  Prec p = pick(prec, a);
  return {mul(sin_ball(a.re, p), cosh_ball(a.im, p), p),
          mul(cos_ball(a.re, p), sinh_ball(a.im, p), p)};
}

RealBall abs_ball(const ComplexBall& a, Prec prec) {
  Prec p = pick(prec, a);
  RealBall mod2 = add(mul(a.re, a.re, p), mul(a.im, a.im, p), p);
  // squares of balls straddling zero may dip below it; clamp before sqrt
  if (!mod2.is_positive()) {
    Tmp lo(p), hi(p);
    mpfr_set_zero(lo, 1);
    mod2.upper(hi);
    if (mpfr_sgn(hi) < 0) mpfr_set_zero(hi, 1);
    mod2 = RealBall::from_endpoints(lo, hi, p);
  }
  return sqrt_ball(mod2, p);
}

ComplexBall pow_complex(const RealBall& base, const ComplexBall& e,
                        Prec prec) {
  Prec p = prec > 0 ? prec
                    : std::max(base.precision_bits(), e.precision_bits());
  RealBall lb = log_ball(base, p);
  return exp_ball(mul(lb, e, p), p);
}

}  // namespace xiaudit
