#include "xiaudit/bernoulli.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace xiaudit {

namespace {

std::mutex g_mutex;
std::vector<mpz_class> g_tangent;  // g_tangent[k-1] = T_k

/// Extend the tangent-number table to T_n in place (Brent-Zimmermann).
void grow_tangent(unsigned n) {
  if (g_tangent.size() >= n) return;
  std::vector<mpz_class> t(n);
  t[0] = 1;
  for (unsigned k = 2; k <= n; ++k) t[k - 1] = t[k - 2] * (k - 1);
  for (unsigned k = 2; k <= n; ++k)
    for (unsigned j = k; j <= n; ++j)
      t[j - 1] = t[j - 2] * (j - k) + t[j - 1] * (j - k + 2);
  g_tangent = std::move(t);
}

/// Exact numerator/denominator of |B_{2k}|: 2k T_k / (4^k (4^k - 1)).
void bernoulli_parts(unsigned k, mpz_class& num, mpz_class& den) {
  num = tangent_number(k) * (2 * k);
  mpz_class p4;
  mpz_ui_pow_ui(p4.get_mpz_t(), 4, k);
  den = p4 * (p4 - 1);
}

RealBall ball_from_mpz(const mpz_class& z, Prec prec) {
  detail::Mpfr m(std::max<Prec>(prec, kMinPrec));
  int t = mpfr_set_z(m.get(), z.get_mpz_t(), MPFR_RNDN);
  RealBall r = RealBall::from_mpfr_exact(m.get());
  if (t != 0) {
    // widen by one ulp for the rounding of a too-wide integer
    detail::Mpfr u(kRadPrec);
    mpfr_set_ui_2exp(u.get(), 1,
                     mpfr_get_exp(m.get()) - mpfr_get_prec(m.get()),
                     MPFR_RNDU);
    r = r.with_radius_added(u.get());
  }
  return r;
}

RealBall signed_ratio(unsigned k, const mpz_class& num, const mpz_class& den,
                      Prec prec) {
  RealBall r = div(ball_from_mpz(num, prec + 8), ball_from_mpz(den, prec + 8),
                   prec);
  return (k % 2 == 0) ? neg(r) : r;  // B_2 > 0, B_4 < 0, ...
}

}  // namespace

mpz_class tangent_number(unsigned k) {
  if (k == 0) throw InvalidArgument("tangent_number: k must be >= 1");
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_tangent.size() < k) grow_tangent(k + k / 2 + 8);
  return g_tangent[k - 1];
}

RealBall bernoulli_2k(unsigned k, Prec prec) {
  mpz_class num, den;
  bernoulli_parts(k, num, den);
  return signed_ratio(k, num, den, prec);
}

RealBall bernoulli_2k_over_fact(unsigned k, Prec prec) {
  mpz_class num, den, fact;
  bernoulli_parts(k, num, den);
  mpz_fac_ui(fact.get_mpz_t(), 2 * k);
  den *= fact;
  return signed_ratio(k, num, den, prec);
}

RealBall bernoulli_2k_over_2k2km1(unsigned k, Prec prec) {
  mpz_class num, den;
  bernoulli_parts(k, num, den);
  den *= 2 * k * (2 * k - 1);
  return signed_ratio(k, num, den, prec);
}

}  // namespace xiaudit
