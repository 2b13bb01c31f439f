#ifndef ICHEB_POLY_HPP
#define ICHEB_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icheb/multiindex.hpp"
#include "icheb/numeric.hpp"

namespace icheb {

/// Sparse multivariate polynomial over an exact coefficient ring (Int or Rat).
/// No zero coefficients are stored; terms iterate in graded-lex order, so all
/// outputs derived from iteration are reproducible byte-for-byte.
template <class C>
class Poly {
 public:
  using TermMap = std::map<MultiIndex, C, GradedLexLess>;

  explicit Poly(unsigned dim = 1) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
  }

  static Poly zero(unsigned dim) { return Poly(dim); }
  static Poly constant(unsigned dim, const C& c) {
    Poly p(dim);
    p.add_term(MultiIndex(std::vector<unsigned>(dim, 0)), c);
    return p;
  }
  static Poly monomial(unsigned dim, MultiIndex k, const C& c) {
    if (k.dim() != dim) throw std::invalid_argument("monomial index dimension");
    Poly p(dim);
    p.add_term(std::move(k), c);
    return p;
  }
  /// The coordinate polynomial z_j (1-based j).
  static Poly variable(unsigned dim, unsigned j) {
    if (j < 1 || j > dim) throw std::invalid_argument("variable index out of range");
    std::vector<unsigned> k(dim, 0);
    k[j - 1] = 1;
    return monomial(dim, MultiIndex(std::move(k)), C(1));
  }
  /// Univariate polynomial from low-to-high coefficients.
  static Poly univariate(const std::vector<C>& coeffs) {
    Poly p(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      p.add_term(MultiIndex({static_cast<unsigned>(i)}), coeffs[i]);
    return p;
  }

  unsigned dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  long degree() const {
    long d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, static_cast<long>(k.degree()));
    return d;
  }
  /// Max exponent of variable j (0-based); -1 for zero polynomial.
  long degree_in(unsigned var) const {
    long d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, static_cast<long>(k.k[var]));
    return d;
  }

  C coeff(const MultiIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C(0) : it->second;
  }
  void add_term(MultiIndex k, const C& c) {
    if (k.dim() != dim_) throw std::invalid_argument("term dimension mismatch");
    auto [it, inserted] = terms_.emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
      terms_.erase(it);
    }
  }

  /// Graded-lex-largest term; polynomial must be nonzero.
  std::pair<MultiIndex, C> leading_term() const {
    if (is_zero()) throw std::invalid_argument("leading term of zero polynomial");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
  }

  bool operator==(const Poly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  Poly& operator+=(const Poly& o) {
    check_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k, C(-c));
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r(a.dim_);
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, C(-c));
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_dim(b);
    Poly r(a.dim_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, C(ca * cb));
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const C& c) const {
    Poly r(dim_);
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, C(v * c));
    return r;
  }

  Poly pow(unsigned long e) const {
    Poly r = constant(dim_, C(1));
    Poly base = *this;
    while (e) {
      if (e & 1) r *= base;
      base = e > 1 ? base * base : base;
      e >>= 1;
    }
    return r;
  }

  /// Exact evaluation at a complex rational point.
  QComplex eval(const std::vector<QComplex>& z) const {
    if (z.size() != dim_) throw std::invalid_argument("evaluation point dimension");
    // cache powers per variable up to the needed exponent
    std::vector<std::vector<QComplex>> pw(dim_);
    for (unsigned j = 0; j < dim_; ++j) {
      long dj = degree_in(j);
      pw[j].resize(static_cast<std::size_t>(std::max(dj, 0L)) + 1);
      pw[j][0] = QComplex(Rat(1));
      for (long e = 1; e <= dj; ++e) pw[j][e] = pw[j][e - 1] * z[j];
    }
    QComplex acc;
    for (const auto& [k, c] : terms_) {
      QComplex t(coeff_to_rat(c));
      for (unsigned j = 0; j < dim_; ++j)
        if (k.k[j]) t = t * pw[j][k.k[j]];
      acc += t;
    }
    return acc;
  }
  /// Exact evaluation at a real rational point.
  Rat eval_real(const std::vector<Rat>& x) const {
    std::vector<QComplex> z;
    z.reserve(x.size());
    for (const Rat& v : x) z.emplace_back(v);
    return eval(z).re;
  }

  /// Sum of the terms with |k| = l exactly.
  Poly homogeneous_part(unsigned l) const {
    Poly r(dim_);
    for (const auto& [k, c] : terms_)
      if (k.degree() == l) r.terms_.emplace(k, c);
    return r;
  }

  /// Exact substitution p(q_1,...,q_d); the q_j share an ambient dimension e.
  Poly compose(const std::vector<Poly>& q) const {
    if (q.size() != dim_) throw std::invalid_argument("compose: map arity mismatch");
    unsigned e = q.empty() ? 1 : q[0].dim();
    for (const auto& qi : q)
      if (qi.dim() != e) throw std::invalid_argument("compose: component dimensions differ");
    std::vector<std::vector<Poly>> pw(dim_);
    for (unsigned j = 0; j < dim_; ++j) {
      long dj = degree_in(j);
      pw[j].push_back(constant(e, C(1)));
      for (long k = 1; k <= dj; ++k) pw[j].push_back(pw[j].back() * q[j]);
    }
    Poly r(e);
    for (const auto& [k, c] : terms_) {
      Poly t = constant(e, c);
      for (unsigned j = 0; j < dim_; ++j)
        if (k.k[j]) t *= pw[j][k.k[j]];
      r += t;
    }
    return r;
  }

  /// Single-divisor exact division: returns q with *this = f*q, or nullopt.
  /// Reduction against the graded-lex leading term of f.
  std::optional<Poly> exact_divide(const Poly& f) const {
    check_dim(f);
    if (f.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly r = *this, q(dim_);
    auto [fk, fc] = f.leading_term();
    while (!r.is_zero()) {
      auto [rk, rc] = r.leading_term();
      if (!fk.divides(rk)) return std::nullopt;
      C ratio;
      if (!coeff_divide(rc, fc, ratio)) return std::nullopt;
      Poly t = monomial(dim_, rk - fk, ratio);
      q += t;
      r -= t * f;
    }
    return q;
  }

  /// Content (gcd of coefficients); only meaningful for C = Int.
  Int content() const {
    Int g = 0;
    for (const auto& [k, c] : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coeff_to_int(c).get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Coefficients of a univariate polynomial, low-to-high; empty for zero.
  std::vector<C> univariate_coeffs() const {
    if (dim_ != 1) throw std::invalid_argument("univariate_coeffs: dim != 1");
    long d = degree();
    std::vector<C> out(static_cast<std::size_t>(d + 1), C(0));
    for (const auto& [k, c] : terms_) out[k.k[0]] = c;
    return out;
  }

 private:
  void check_dim(const Poly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  }
  static Rat coeff_to_rat(const Int& c) { return Rat(c); }
  static Rat coeff_to_rat(const Rat& c) { return c; }
  static Int coeff_to_int(const Int& c) { return c; }
  static Int coeff_to_int(const Rat& c) { return c.get_num(); }
  static bool coeff_divide(const Int& a, const Int& b, Int& out) {
    if (b == 0) return false;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) return false;
    out = q;
    return true;
  }
  static bool coeff_divide(const Rat& a, const Rat& b, Rat& out) {
    if (b == 0) return false;
    out = a / b;
    return true;
  }

  unsigned dim_;
  TermMap terms_;
};

using IntPoly = Poly<Int>;
using QPoly = Poly<Rat>;

/// Integer polynomial -> rational-coefficient copy.
QPoly to_qpoly(const IntPoly& p);
/// Rational polynomial with integer entries -> IntPoly; throws otherwise.
IntPoly to_intpoly(const QPoly& p);
/// Scale a rational polynomial by the lcm of denominators: returns (P, s) with
/// p = P/s, P integral and primitive-signed as given.
std::pair<IntPoly, Int> clear_denominators(const QPoly& p);

std::string poly_to_string(const IntPoly& p, const std::vector<std::string>& vars = {});

}  // namespace icheb

#endif
