#ifndef PERFECT_POLY_HPP_
#define PERFECT_POLY_HPP_

#include <vector>

#include "perfect/fp.hpp"

namespace perfect {

// Polynomial over F_p, coefficients from the constant term up; no trailing
// zeros (the zero polynomial is empty).
struct Poly {
  unsigned p = 2;
  std::vector<Scalar> c;

  int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const noexcept { return c.empty(); }
  Scalar lead() const { return c.back(); }
  void trim();
  friend bool operator==(Poly const& a, Poly const& b) { return a.p == b.p && a.c == b.c; }
  friend bool operator<(Poly const& a, Poly const& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
  }
};

Poly poly_monic(Poly a);
Poly poly_add(Poly const& a, Poly const& b);
Poly poly_sub(Poly const& a, Poly const& b);
Poly poly_mul(Poly const& a, Poly const& b);
void poly_divmod(Poly const& a, Poly const& b, Poly& q, Poly& r);
Poly poly_mod(Poly const& a, Poly const& b);
Poly poly_gcd(Poly a, Poly b);
Poly poly_derivative(Poly const& a);

// Monic irreducible factors with multiplicity, sorted by (degree, coefficients).
std::vector<std::pair<Poly, unsigned>> factor(Poly const& f);

// Characteristic polynomial (monic) of a square matrix.
Poly char_poly(Matrix const& a);
// f(A) by Horner's rule.
Matrix evaluate(Poly const& f, Matrix const& a);

}  // namespace perfect

#endif  // PERFECT_POLY_HPP_
