#include "icheb/numeric.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace icheb {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat parse_rational(const std::string& input) {
  std::string s = input;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty())
      throw std::invalid_argument("malformed rational: " + input);
    std::string nd = num[0] == '+' || num[0] == '-' ? num.substr(1) : num;
    if (!all_digits(nd) || !all_digits(den))
      throw std::invalid_argument("malformed rational: " + input);
    Int numerator(num), denominator(den);
    if (denominator == 0) throw std::invalid_argument("zero denominator: " + input);
    Rat q(numerator, denominator);
    q.canonicalize();
    return q;
  }

  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string int_part, frac_part, exp_part;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    int_part += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      frac_part += s[i++];
  }
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    exp_part = s.substr(i + 1);
    if (exp_part.empty()) throw std::invalid_argument("malformed exponent: " + input);
    std::string ed =
        exp_part[0] == '+' || exp_part[0] == '-' ? exp_part.substr(1) : exp_part;
    if (!all_digits(ed)) throw std::invalid_argument("malformed exponent: " + input);
    exp10 = std::strtol(exp_part.c_str(), nullptr, 10);
    i = s.size();
  }
  if (i != s.size() || (int_part.empty() && frac_part.empty()))
    throw std::invalid_argument("malformed rational: " + input);

  Int mantissa(int_part.empty() ? "0" : int_part);
  for (char c : frac_part) mantissa = mantissa * 10 + (c - '0');
  long scale = exp10 - static_cast<long>(frac_part.size());
  Rat q(mantissa);
  if (scale > 0)
    q *= Rat(pow_int(10, static_cast<unsigned long>(scale)));
  else if (scale < 0)
    q /= Rat(pow_int(10, static_cast<unsigned long>(-scale)));
  if (neg) q = -q;
  q.canonicalize();
  return q;
}

std::string rat_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

std::string decimal_string(const mpf_class& x, int sig_digits) {
  if (x == 0) return "0";
  mp_exp_t e;
  std::string digits = x.get_str(e, 10, static_cast<std::size_t>(sig_digits));
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits = digits.substr(1);
  while (digits.size() < static_cast<std::size_t>(sig_digits)) digits += '0';
  std::string out = neg ? "-" : "";
  out += digits.substr(0, 1);
  out += ".";
  out += digits.substr(1);
  out += "e";
  long dec_exp = static_cast<long>(e) - 1;
  out += (dec_exp < 0 ? "-" : "+") + std::to_string(std::labs(dec_exp));
  return out;
}

std::string decimal_string(const Rat& q, int sig_digits) {
  mpf_class x(q, kHpBits + 64);
  return decimal_string(x, sig_digits);
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw std::invalid_argument("0 to a negative power");
    Rat inv(base.get_den(), base.get_num());
    inv.canonicalize();
    return pow_rat(inv, -e);
  }
  Rat r(pow_int(base.get_num(), static_cast<unsigned long>(e)),
        pow_int(base.get_den(), static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

namespace {

// floor(sqrt(n*d*10^(2g))) used for both directed bounds.
void sqrt_scaled(const Rat& q, int digits, Int& root, Int& scaled_den,
                 bool& exact) {
  Int n = q.get_num(), d = q.get_den();
  Int g = pow_int(10, static_cast<unsigned long>(digits));
  Int target = n * d * g * g;
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), target.get_mpz_t());
  root = r;
  scaled_den = d * g;
  exact = rem == 0;
}

}  // namespace

Rat sqrt_lower(const Rat& q, int digits) {
  if (q < 0) throw std::invalid_argument("sqrt of negative rational");
  if (q == 0) return Rat(0);
  Int r, den;
  bool exact;
  sqrt_scaled(q, digits, r, den, exact);
  Rat out(r, den);
  out.canonicalize();
  return out;
}

Rat sqrt_upper(const Rat& q, int digits) {
  if (q < 0) throw std::invalid_argument("sqrt of negative rational");
  if (q == 0) return Rat(0);
  Int r, den;
  bool exact;
  sqrt_scaled(q, digits, r, den, exact);
  Rat out(exact ? r : r + 1, den);
  out.canonicalize();
  return out;
}

Rat root_power_upper(const Rat& q, unsigned d) {
  if (q < 0) throw std::invalid_argument("negative base");
  if (q == 0) return Rat(0);
  mpfr_t t;
  mpfr_init2(t, kHpBits);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDU);
  mpfr_log(t, t, MPFR_RNDU);
  mpfr_mul_ui(t, t, d, q > 1 ? MPFR_RNDU : MPFR_RNDD);
  mpfr_div_ui(t, t, d + 1, q > 1 ? MPFR_RNDD : MPFR_RNDU);
  mpfr_exp(t, t, MPFR_RNDU);
  mpf_class approx(0, kHpBits);
  mpfr_get_f(approx.get_mpf_t(), t, MPFR_RNDU);
  mpfr_clear(t);
  Rat r = snap_to_rational(approx, 35);
  Rat qd = pow_rat(q, static_cast<long>(d));
  Rat bump(1, 1);
  bump += Rat(Int(1), pow_int(10, 30));
  int guard = 0;
  while (pow_rat(r, static_cast<long>(d) + 1) < qd) {
    r *= bump;
    if (++guard > 200) throw std::runtime_error("root_power_upper: no certified bound");
  }
  return r;
}

namespace {

mpf_class mpfr_nth_root(const Rat& q, unsigned long e, mpfr_rnd_t rnd) {
  mpfr_t t;
  mpfr_init2(t, kHpBits);
  mpfr_set_q(t, q.get_mpq_t(), rnd);
  mpfr_rootn_ui(t, t, e, rnd);
  mpf_class out(0, kHpBits);
  mpfr_get_f(out.get_mpf_t(), t, rnd);
  mpfr_clear(t);
  return out;
}

}  // namespace

Rat nth_root_lower(const Rat& q, unsigned long e) {
  if (q < 0) throw std::invalid_argument("nth_root of negative value");
  if (q == 0 || e == 0) return Rat(0);
  if (e == 1) return q;
  Rat r = snap_to_rational(mpfr_nth_root(q, e, MPFR_RNDD), 35);
  if (r < 0) r = 0;
  Rat shrink = Rat(1) - Rat(Int(1), pow_int(10, 30));
  int guard = 0;
  while (r > 0 && pow_rat(r, static_cast<long>(e)) > q) {
    r *= shrink;
    if (++guard > 200) throw std::runtime_error("nth_root_lower: no certified bound");
  }
  return r;
}

Rat nth_root_upper(const Rat& q, unsigned long e) {
  if (q < 0) throw std::invalid_argument("nth_root of negative value");
  if (q == 0 || e == 0) return Rat(0);
  if (e == 1) return q;
  Rat r = snap_to_rational(mpfr_nth_root(q, e, MPFR_RNDU), 35);
  Rat grow = Rat(1) + Rat(Int(1), pow_int(10, 30));
  if (r <= 0) r = Rat(Int(1), pow_int(10, 30));
  int guard = 0;
  while (pow_rat(r, static_cast<long>(e)) < q) {
    r *= grow;
    if (++guard > 200) throw std::runtime_error("nth_root_upper: no certified bound");
  }
  return r;
}

mpf_class to_hp(const Rat& q, mp_bitcnt_t prec) { return mpf_class(q, prec); }

namespace {

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
mpf_class hp_apply(const mpf_class& x) {
  mpfr_t t;
  mpfr_init2(t, x.get_prec());
  mpfr_set_f(t, x.get_mpf_t(), MPFR_RNDN);
  F(t, t, MPFR_RNDN);
  mpf_class out(0, x.get_prec());
  mpfr_get_f(out.get_mpf_t(), t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

}  // namespace

mpf_class hp_log(const mpf_class& x) {
  if (x <= 0) throw std::invalid_argument("hp_log of non-positive value");
  return hp_apply<mpfr_log>(x);
}

mpf_class hp_exp(const mpf_class& x) { return hp_apply<mpfr_exp>(x); }

Rat snap_to_rational(const mpf_class& x, int digits) {
  Int g = pow_int(10, static_cast<unsigned long>(digits));
  mpf_class scaled(x * mpf_class(g, x.get_prec()), x.get_prec() + 64);
  mpf_class half(scaled >= 0 ? 0.5 : -0.5, 64);
  mpf_class rounded(0, scaled.get_prec());
  mpf_floor(rounded.get_mpf_t(), mpf_class(scaled + half).get_mpf_t());
  Int m;
  mpz_set_f(m.get_mpz_t(), rounded.get_mpf_t());
  Rat out(m, g);
  out.canonicalize();
  return out;
}

namespace {

// reduce t to [0,2)
Rat reduce_mod2(const Rat& t) {
  Rat two(2);
  Rat half = t / two;
  Int k = half.get_num() / half.get_den();  // trunc toward zero
  Rat r = t - Rat(k) * two;
  if (r < 0) r += two;
  return r;
}

}  // namespace

Rat cos_pi_rational(const Rat& t) {
  Rat r = reduce_mod2(t);
  // exact small-denominator cases
  if (r.get_den() == 1) return r.get_num() % 2 == 0 ? Rat(1) : Rat(-1);
  if (r.get_den() == 2) return Rat(0);
  if (r.get_den() == 3) {
    Int n = r.get_num() % 6;
    if (n == 1 || n == 5) return Rat(1, 2);
    return Rat(-1, 2);
  }
  mpfr_t pi, x;
  mpfr_init2(pi, 4 * kHpBits);
  mpfr_init2(x, 4 * kHpBits);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul_q(x, pi, r.get_mpq_t(), MPFR_RNDN);
  mpfr_cos(x, x, MPFR_RNDN);
  mpf_class out(0, 4 * kHpBits);
  mpfr_get_f(out.get_mpf_t(), x, MPFR_RNDN);
  mpfr_clear(pi);
  mpfr_clear(x);
  Rat snapped = snap_to_rational(out, kRatDigits);
  if (snapped > 1) snapped = 1;
  if (snapped < -1) snapped = -1;
  return snapped;
}

Rat tan_pi_rational(const Rat& t) {
  Rat r = reduce_mod2(t);
  if (r.get_den() == 1) return Rat(0);
  if (r.get_den() == 2) throw std::invalid_argument("tan(pi/2) undefined");
  mpfr_t pi, x;
  mpfr_init2(pi, 4 * kHpBits);
  mpfr_init2(x, 4 * kHpBits);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul_q(x, pi, r.get_mpq_t(), MPFR_RNDN);
  mpfr_tan(x, x, MPFR_RNDN);
  mpf_class out(0, 4 * kHpBits);
  mpfr_get_f(out.get_mpf_t(), x, MPFR_RNDN);
  mpfr_clear(pi);
  mpfr_clear(x);
  return snap_to_rational(out, kRatDigits);
}

void unit_circle_point(unsigned long index, unsigned long count, Rat& c, Rat& s) {
  if (count == 0) throw std::invalid_argument("empty circle grid");
  unsigned long k = index % count;
  if (2 * k == count) {  // angle pi
    c = Rat(-1);
    s = Rat(0);
    return;
  }
  // theta = 2*pi*k/count, tau = tan(theta/2) = tan(pi * k/count)
  Rat frac(static_cast<unsigned long>(k), count);
  frac.canonicalize();
  Rat tau = tan_pi_rational(frac);
  Rat t2 = tau * tau;
  Rat den = t2 + 1;
  c = (Rat(1) - t2) / den;
  s = (tau + tau) / den;
}

QComplex qc_div(const QComplex& a, const QComplex& b) {
  Rat n2 = b.abs2();
  if (n2 == 0) throw std::invalid_argument("complex division by zero");
  QComplex num = a * b.conj();
  return {num.re / n2, num.im / n2};
}

HpComplex hp_div(const HpComplex& a, const HpComplex& b) {
  mpf_class n2 = b.norm2();
  if (n2 == 0) throw std::invalid_argument("complex division by zero");
  HpComplex r(a.re.get_prec());
  r.re = (a.re * b.re + a.im * b.im) / n2;
  r.im = (a.im * b.re - a.re * b.im) / n2;
  return r;
}

}  // namespace icheb
