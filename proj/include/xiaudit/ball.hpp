#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

#include "xiaudit/errors.hpp"

namespace xiaudit {

using Prec = mpfr_prec_t;

inline constexpr Prec kMinPrec = 32;
inline constexpr Prec kDefaultPrec = 192;
inline constexpr Prec kPrecisionCap = 16384;

/// Precision of radius values.  Radii are coarse upward-rounded magnitudes;
/// they only ever need a couple of significant digits.
inline constexpr Prec kRadPrec = 32;

namespace detail {

/// Minimal RAII wrapper around one mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(Prec prec) { mpfr_init2(v_, prec); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mpfr& operator=(Mpfr&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace detail

/// An enclosure of a real number: arbitrary-precision midpoint plus a
/// low-precision radius bounding |true - midpoint|.  Every operation
/// returns a ball whose enclosure contains the exact result whenever the
/// inputs' enclosures contain their exact values.
class RealBall {
 public:
  /// Exact zero at minimal precision.
  RealBall() : mid_(kMinPrec), rad_(kRadPrec) {
    mpfr_set_zero(mid_.get(), 1);
    mpfr_set_zero(rad_.get(), 1);
  }

  /// Exact small integer.
  static RealBall from_int(long v, Prec prec = kDefaultPrec);

  /// Exact k * 2^e.
  static RealBall from_int_pow2(long k, long e, Prec prec = kDefaultPrec);

  /// Decimal string; the radius covers the conversion rounding.
  static RealBall from_decimal(std::string_view s, Prec prec);

  /// Ball covering [lo, hi] given as mpfr values (lo <= hi required).
  static RealBall from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Prec prec);

  /// Exact copy of an mpfr value (radius zero).
  static RealBall from_mpfr_exact(mpfr_srcptr m);

  /// Same midpoint with an explicitly enlarged radius.
  RealBall with_radius_added(mpfr_srcptr extra) const;
  RealBall with_radius_added(const RealBall& extra_magnitude) const;

  Prec precision_bits() const { return mpfr_get_prec(mid_.get()); }
  bool is_exact() const { return mpfr_zero_p(rad_.get()); }
  bool is_exact_zero() const {
    return mpfr_zero_p(mid_.get()) && mpfr_zero_p(rad_.get());
  }

  mpfr_srcptr mid() const { return mid_.get(); }
  mpfr_srcptr rad() const { return rad_.get(); }

  double mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
  double rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

  /// Certified lower/upper bound of the enclosure, written into out.
  void lower(mpfr_ptr out) const {
    mpfr_sub(out, mid_.get(), rad_.get(), MPFR_RNDD);
  }
  void upper(mpfr_ptr out) const {
    mpfr_add(out, mid_.get(), rad_.get(), MPFR_RNDU);
  }

  bool contains_zero() const;
  bool is_positive() const;  ///< certified: every point > 0
  bool is_negative() const;

  /// Certified x's enclosure is a subset of this enclosure.
  bool encloses(const RealBall& x) const;
  bool overlaps(const RealBall& x) const;
  /// Certified containment of an exact decimal number.
  bool contains_decimal(std::string_view dec) const;
  /// Certified containment of an exact integer.
  bool contains_int(long v) const;

  /// Enclosure width 2r as an upper-rounded double.
  double width_double() const { return 2.0 * rad_double(); }

  /// Round-trip decimal rendering of the midpoint (enough digits that
  /// re-reading at the same precision recovers the value exactly).
  std::string mid_decimal() const;
  /// Short scientific rendering of the radius, rounded up.
  std::string rad_decimal() const;

  /// Throws unless midpoint and radius are finite and radius >= 0.
  void check_valid(const char* where) const;

  // Internal: mutable access for the arithmetic kernels.
  mpfr_ptr mid_mut() { return mid_.get(); }
  mpfr_ptr rad_mut() { return rad_.get(); }

 private:
  detail::Mpfr mid_;
  detail::Mpfr rad_;
};

// Arithmetic.  Result precision is max of the operand precisions unless an
// explicit precision is given.
RealBall add(const RealBall& a, const RealBall& b, Prec prec = 0);
RealBall sub(const RealBall& a, const RealBall& b, Prec prec = 0);
RealBall mul(const RealBall& a, const RealBall& b, Prec prec = 0);
RealBall div(const RealBall& a, const RealBall& b, Prec prec = 0);
RealBall neg(const RealBall& a);
RealBall abs_ball(const RealBall& a);
RealBall sqrt_ball(const RealBall& a, Prec prec = 0);
RealBall log_ball(const RealBall& a, Prec prec = 0);
RealBall exp_ball(const RealBall& a, Prec prec = 0);
RealBall sin_ball(const RealBall& a, Prec prec = 0);
RealBall cos_ball(const RealBall& a, Prec prec = 0);
RealBall sinh_ball(const RealBall& a, Prec prec = 0);
RealBall cosh_ball(const RealBall& a, Prec prec = 0);
RealBall atan_ball(const RealBall& a, Prec prec = 0);
RealBall pow_si(const RealBall& a, long n, Prec prec = 0);
/// a^b = exp(b log a); requires a certified positive.
RealBall pow_ball(const RealBall& a, const RealBall& b, Prec prec = 0);
RealBall min_ball(const RealBall& a, const RealBall& b);
RealBall max_ball(const RealBall& a, const RealBall& b);

inline RealBall operator+(const RealBall& a, const RealBall& b) {
  return add(a, b);
}
inline RealBall operator-(const RealBall& a, const RealBall& b) {
  return sub(a, b);
}
inline RealBall operator*(const RealBall& a, const RealBall& b) {
  return mul(a, b);
}
inline RealBall operator/(const RealBall& a, const RealBall& b) {
  return div(a, b);
}
inline RealBall operator-(const RealBall& a) { return neg(a); }

/// pi with radius at most one ulp.  Throws InvalidArgument below kMinPrec.
RealBall const_pi(Prec precision_bits);
/// Euler-Mascheroni constant gamma.
RealBall const_euler_gamma(Prec precision_bits);
RealBall const_log2(Prec precision_bits);

/// Rectangular complex enclosure; containment holds component-wise.
struct ComplexBall {
  RealBall re;
  RealBall im;

  ComplexBall() = default;
  ComplexBall(RealBall r, RealBall i) : re(std::move(r)), im(std::move(i)) {}
  /// Real point embedded in the plane (imaginary part exactly zero).
  explicit ComplexBall(const RealBall& r) : re(r), im() {}

  static ComplexBall from_int(long v, Prec prec = kDefaultPrec) {
    return ComplexBall(RealBall::from_int(v, prec));
  }

  Prec precision_bits() const { return re.precision_bits(); }
  bool contains_zero() const {
    return re.contains_zero() && im.contains_zero();
  }
  void check_valid(const char* where) const {
    re.check_valid(where);
    im.check_valid(where);
  }
};

ComplexBall add(const ComplexBall& a, const ComplexBall& b, Prec prec = 0);
ComplexBall sub(const ComplexBall& a, const ComplexBall& b, Prec prec = 0);
ComplexBall mul(const ComplexBall& a, const ComplexBall& b, Prec prec = 0);
ComplexBall div(const ComplexBall& a, const ComplexBall& b, Prec prec = 0);
ComplexBall neg(const ComplexBall& a);
ComplexBall conj_ball(const ComplexBall& a);
ComplexBall mul(const RealBall& a, const ComplexBall& b, Prec prec = 0);
ComplexBall exp_ball(const ComplexBall& a, Prec prec = 0);
/// Principal log; requires the real part certified positive.
ComplexBall log_ball(const ComplexBall& a, Prec prec = 0);
ComplexBall sin_ball(const ComplexBall& a, Prec prec = 0);
/// |a| as a real enclosure.
RealBall abs_ball(const ComplexBall& a, Prec prec = 0);
/// base^e for a certified-positive real base.
ComplexBall pow_complex(const RealBall& base, const ComplexBall& e,
                        Prec prec = 0);

inline ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return add(a, b);
}
inline ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return sub(a, b);
}
inline ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return mul(a, b);
}
inline ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  return div(a, b);
}
inline ComplexBall operator-(const ComplexBall& a) { return neg(a); }

}  // namespace xiaudit
