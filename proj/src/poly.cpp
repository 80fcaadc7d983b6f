#include "perfect/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace perfect {

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly poly_monic(Poly a) {
  a.trim();
  if (a.is_zero()) return a;
  Scalar s = fp_inv(a.lead(), a.p);
  for (auto& x : a.c) x = fp_mul(x, s, a.p);
  return a;
}

Poly poly_add(Poly const& a, Poly const& b) {
  Poly r{a.p, {}};
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = fp_add(r.c[i], b.c[i], a.p);
  r.trim();
  return r;
}

Poly poly_sub(Poly const& a, Poly const& b) {
  Poly r{a.p, {}};
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = fp_sub(r.c[i], b.c[i], a.p);
  r.trim();
  return r;
}

Poly poly_mul(Poly const& a, Poly const& b) {
  Poly r{a.p, {}};
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = static_cast<Scalar>((r.c[i + j] + unsigned(a.c[i]) * b.c[j]) % a.p);
    }
  }
  r.trim();
  return r;
}

void poly_divmod(Poly const& a, Poly const& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
  unsigned p = a.p;
  r = a;
  r.trim();
  q = Poly{p, {}};
  if (r.degree() < b.degree()) return;
  q.c.assign(r.c.size() - b.c.size() + 1, 0);
  Scalar inv = fp_inv(b.lead(), p);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = r.c.size() - b.c.size();
    Scalar f = fp_mul(r.lead(), inv, p);
    q.c[shift] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      r.c[shift + i] = fp_sub(r.c[shift + i], fp_mul(f, b.c[i], p), p);
    }
    r.trim();
  }
  q.trim();
}

Poly poly_mod(Poly const& a, Poly const& b) {
  Poly q, r;
  poly_divmod(a, b, q, r);
  return r;
}

Poly poly_gcd(Poly a, Poly b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Poly poly_derivative(Poly const& a) {
  Poly r{a.p, {}};
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    r.c.push_back(fp_mul(static_cast<Scalar>(i % a.p), a.c[i], a.p));
  }
  r.trim();
  return r;
}

namespace {

Poly poly_div_exact(Poly const& a, Poly const& b) {
  Poly q, r;
  poly_divmod(a, b, q, r);
  return q;
}

bool is_one(Poly const& a) { return a.c.size() == 1 && a.c[0] == 1; }

// f(x) = g(x^p) -> g(x); over F_p the coefficients are their own p-th roots.
Poly pth_root(Poly const& f) {
  Poly r{f.p, {}};
  for (std::size_t i = 0; i < f.c.size(); i += f.p) r.c.push_back(f.c[i]);
  r.trim();
  return r;
}

void square_free(Poly f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  Poly d = poly_derivative(f);
  if (d.is_zero()) {
    square_free(pth_root(f), mult * f.p, out);
    return;
  }
  Poly c = poly_gcd(f, d);
  Poly w = poly_div_exact(f, c);
  unsigned i = 1;
  while (!is_one(w)) {
    Poly y = poly_gcd(w, c);
    Poly fac = poly_div_exact(w, y);
    if (fac.degree() > 0) out.emplace_back(poly_monic(fac), i * mult);
    w = y;
    c = poly_div_exact(c, y);
    ++i;
  }
  if (c.degree() > 0) square_free(pth_root(c), mult * f.p, out);
}

// Berlekamp splitting of a monic square-free polynomial.
std::vector<Poly> berlekamp(Poly const& f) {
  unsigned p = f.p;
  auto n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f};
  Matrix q(p, n, n);
  // Row i holds x^(i p) mod f.
  Poly xp{p, {}};
  xp.c.assign(p + 1, 0);
  xp.c[p] = 1;
  xp = poly_mod(xp, f);
  Poly cur{p, {1}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.c.size(); ++j) q(i, j) = cur.c[j];
    cur = poly_mod(poly_mul(cur, xp), f);
  }
  Matrix kernel = left_nullspace(q - Matrix::identity(p, n));
  std::size_t k = kernel.rows();
  std::vector<Poly> factors{f};
  if (k == 1) return factors;
  for (std::size_t b = 0; b < k && factors.size() < k; ++b) {
    Poly v{p, kernel.row(b)};
    v.trim();
    if (v.degree() <= 0) continue;
    std::vector<Poly> next;
    for (auto const& h : factors) {
      if (h.degree() <= 1) {
        next.push_back(h);
        continue;
      }
      Poly rest = h;
      for (unsigned s = 0; s < p && rest.degree() > 0; ++s) {
        Poly shifted = v;
        if (shifted.c.empty()) shifted.c.push_back(0);
        shifted.c[0] = fp_sub(shifted.c[0], static_cast<Scalar>(s), p);
        shifted.trim();
        Poly g = poly_gcd(rest, shifted);
        if (g.degree() > 0 && g.degree() < rest.degree()) {
          next.push_back(g);
          rest = poly_monic(poly_div_exact(rest, g));
        }
      }
      if (rest.degree() > 0) next.push_back(rest);
    }
    factors = std::move(next);
  }
  return factors;
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor(Poly const& f_in) {
  Poly f = poly_monic(f_in);
  std::vector<std::pair<Poly, unsigned>> sqf, out;
  square_free(f, 1, sqf);
  for (auto const& [g, m] : sqf) {
    for (auto& h : berlekamp(g)) out.emplace_back(poly_monic(h), m);
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  // Merge equal factors coming from different square-free parts.
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  return merged;
}

Poly char_poly(Matrix const& a_in) {
  unsigned p = a_in.prime();
  std::size_t n = a_in.rows();
  Matrix h = a_in;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    Scalar inv = fp_inv(h(m, m - 1), p);
    for (std::size_t j = m + 1; j < n; ++j) {
      Scalar u = fp_mul(h(j, m - 1), inv, p);
      if (!u) continue;
      for (std::size_t k = 0; k < n; ++k) h(j, k) = fp_sub(h(j, k), fp_mul(u, h(m, k), p), p);
      for (std::size_t k = 0; k < n; ++k) h(k, m) = fp_add(h(k, m), fp_mul(u, h(k, j), p), p);
    }
  }
  std::vector<Poly> ps(n + 1, Poly{p, {}});
  ps[0] = Poly{p, {1}};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly lin{p, {fp_neg(h(m - 1, m - 1), p), 1}};
    lin.trim();
    Poly r = poly_mul(lin, ps[m - 1]);
    Scalar t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = fp_mul(t, h(m - i, m - i - 1), p);
      Scalar coef = fp_mul(t, h(m - i - 1, m - 1), p);
      if (!coef) continue;
      Poly term = ps[m - i - 1];
      for (auto& x : term.c) x = fp_mul(x, coef, p);
      r = poly_sub(r, term);
    }
    ps[m] = r;
  }
  return ps[n];
}

Matrix evaluate(Poly const& f, Matrix const& a) {
  unsigned p = a.prime();
  std::size_t n = a.rows();
  Matrix r(p, n, n);
  for (std::size_t k = f.c.size(); k-- > 0;) {
    r = r * a;
    for (std::size_t i = 0; i < n; ++i) r(i, i) = fp_add(r(i, i), f.c[k], p);
  }
  return r;
}

}  // namespace perfect
