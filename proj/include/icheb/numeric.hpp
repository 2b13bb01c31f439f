#ifndef ICHEB_NUMERIC_HPP
#define ICHEB_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace icheb {

using Int = mpz_class;
using Rat = mpq_class;

// Working precision of floating-point estimates (log|V|, diameter roots).
inline constexpr mp_bitcnt_t kHpBits = 256;
// Digits kept when snapping transcendental node coordinates to rationals.
inline constexpr int kRatDigits = 40;

/// Parses "p/q", integer, or decimal/scientific strings ("-0.4232", "1e-9").
/// Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& s);

/// Canonical exact form: "p" or "p/q", lowest terms, q > 0.
std::string rat_string(const Rat& q);

/// Decimal string with the given number of significant digits (estimates only).
std::string decimal_string(const mpf_class& x, int sig_digits);
std::string decimal_string(const Rat& q, int sig_digits);

Int binomial(unsigned long n, unsigned long k);
Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

/// Certified rational bounds of sqrt(q) for q >= 0: lower^2 <= q <= upper^2.
/// Exact when q is a rational square.
Rat sqrt_lower(const Rat& q, int digits = kRatDigits);
Rat sqrt_upper(const Rat& q, int digits = kRatDigits);

/// Smallest-denominator-style certified upper bound r with r^(d+1) >= q^d
/// (used for exponent-(d/(d+1)) bounds); r is within 10^-30 of the true value.
Rat root_power_upper(const Rat& q, unsigned d);

/// Certified rational bounds of q^(1/e), q >= 0, e >= 1:
/// lower^e <= q <= upper^e, within ~10^-30 relative slack.
Rat nth_root_lower(const Rat& q, unsigned long e);
Rat nth_root_upper(const Rat& q, unsigned long e);

mpf_class to_hp(const Rat& q, mp_bitcnt_t prec = kHpBits);
mpf_class hp_log(const mpf_class& x);
mpf_class hp_exp(const mpf_class& x);

/// round(x * 10^digits) / 10^digits
Rat snap_to_rational(const mpf_class& x, int digits = kRatDigits);

/// cos(pi*t) and tan(pi*t) snapped to kRatDigits-digit rationals. cos is exact
/// for t with denominator 1, 2 or 3; tan requires t != 1/2 mod 1.
Rat cos_pi_rational(const Rat& t);
Rat tan_pi_rational(const Rat& t);

/// Exact point on the unit circle at angle ~ 2*pi*index/count via the
/// tan-half-angle parametrization; cos^2 + sin^2 = 1 holds exactly.
void unit_circle_point(unsigned long index, unsigned long count, Rat& c, Rat& s);

struct QComplex {
  Rat re, im;
  QComplex() : re(0), im(0) {}
  QComplex(Rat r) : re(std::move(r)), im(0) {}
  QComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Rat abs2() const { return re * re + im * im; }
  QComplex conj() const { return {re, -im}; }

  QComplex& operator+=(const QComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  QComplex& operator-=(const QComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Exact division a/b, b != 0.
QComplex qc_div(const QComplex& a, const QComplex& b);

struct HpComplex {
  mpf_class re, im;
  explicit HpComplex(mp_bitcnt_t prec = kHpBits) : re(0, prec), im(0, prec) {}
  HpComplex(const QComplex& q, mp_bitcnt_t prec)
      : re(q.re, prec), im(q.im, prec) {}

  mpf_class norm2() const { return mpf_class(re * re + im * im); }
  bool is_zero() const { return re == 0 && im == 0; }

  HpComplex& operator+=(const HpComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  HpComplex& operator-=(const HpComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend HpComplex operator*(const HpComplex& a, const HpComplex& b) {
    HpComplex r(a.re.get_prec());
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
  }
  friend HpComplex operator-(const HpComplex& a, const HpComplex& b) {
    HpComplex r = a;
    r -= b;
    return r;
  }
};

HpComplex hp_div(const HpComplex& a, const HpComplex& b);

}  // namespace icheb

#endif
