#include "icheb/poly.hpp"

#include <sstream>

namespace icheb {

QPoly to_qpoly(const IntPoly& p) {
  QPoly q(p.dim());
  for (const auto& [k, c] : p.terms()) q.add_term(k, Rat(c));
  return q;
}

IntPoly to_intpoly(const QPoly& p) {
  IntPoly r(p.dim());
  for (const auto& [k, c] : p.terms()) {
    if (c.get_den() != 1)
      throw std::invalid_argument("polynomial has non-integer coefficients");
    r.add_term(k, c.get_num());
  }
  return r;
}

std::pair<IntPoly, Int> clear_denominators(const QPoly& p) {
  Int l = 1;
  for (const auto& [k, c] : p.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  IntPoly r(p.dim());
  for (const auto& [k, c] : p.terms()) {
    Rat scaled = c * Rat(l);
    r.add_term(k, scaled.get_num());
  }
  return {r, l};
}

std::string poly_to_string(const IntPoly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::vector<std::string> names = vars;
  if (names.empty()) {
    if (p.dim() == 1)
      names = {"x"};
    else if (p.dim() == 2)
      names = {"x", "y"};
    else
      for (unsigned j = 1; j <= p.dim(); ++j) names.push_back("z" + std::to_string(j));
  }
  std::ostringstream os;
  bool first = true;
  // print highest terms first
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto& [k, c] = *it;
    Int a = c;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    Int mag = abs(a);
    bool has_vars = k.degree() > 0;
    if (mag != 1 || !has_vars) os << mag.get_str();
    if (has_vars) {
      bool star = mag != 1;
      for (unsigned j = 0; j < p.dim(); ++j) {
        if (!k.k[j]) continue;
        if (star) os << "*";
        os << names[j];
        if (k.k[j] > 1) os << "^" << k.k[j];
        star = true;
      }
    }
  }
  return os.str();
}

}  // namespace icheb
