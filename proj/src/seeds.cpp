#include "perfect/seeds.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "perfect/errors.hpp"
#include "perfect/fp.hpp"

namespace perfect {

std::vector<std::uint64_t> const& missing_simple_orders() {
  static std::vector<std::uint64_t> const v{29120, 62400, 126000, 175560, 443520, 604800, 979200};
  return v;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<unsigned> digits(unsigned a, unsigned p, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

unsigned undigits(std::vector<unsigned> const& d, unsigned p) {
  unsigned a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

}  // namespace

GaloisField::GaloisField(unsigned q) : q_(q) {
  p_ = 0;
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p_ = d;
      break;
    }
  }
  k_ = 0;
  for (unsigned r = q; r > 1; r /= p_) {
    if (r % p_) throw std::invalid_argument("GaloisField: order is not a prime power");
    ++k_;
  }
  add_.assign(q * q, 0);
  neg_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a, p_, k_);
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b, p_, k_);
      std::vector<unsigned> s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = undigits(s, p_);
    }
    std::vector<unsigned> n(k_);
    for (unsigned i = 0; i < k_; ++i) n[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(n, p_);
  }
  // Smallest monic modulus giving a ring without zero divisors.
  unsigned lower = 1;
  for (unsigned i = 0; i < k_; ++i) lower *= p_;
  for (unsigned f = 0; f < lower; ++f) {
    auto low = digits(f, p_, k_);  // f = x^k + sum low[i] x^i
    mul_.assign(q * q, 0);
    bool field = true;
    for (unsigned a = 1; a < q && field; ++a) {
      auto da = digits(a, p_, k_);
      for (unsigned b = 1; b < q; ++b) {
        auto db = digits(b, p_, k_);
        std::vector<unsigned> prod(2 * k_, 0);
        for (unsigned i = 0; i < k_; ++i) {
          for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        for (unsigned deg = 2 * k_ - 1; deg >= k_; --deg) {
          unsigned c = prod[deg];
          if (!c) continue;
          prod[deg] = 0;
          for (unsigned i = 0; i < k_; ++i) {
            prod[deg - k_ + i] = (prod[deg - k_ + i] + (p_ - c) * low[i]) % p_;
          }
        }
        prod.resize(k_);
        unsigned r = undigits(prod, p_);
        if (r == 0) {
          field = false;
          break;
        }
        mul_[a * q + b] = r;
      }
    }
    if (field) break;
  }
  inv_.assign(q, 0);
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 1; b < q; ++b) {
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
  for (unsigned a = 2; a < q; ++a) {
    unsigned x = a, ord = 1;
    while (x != 1) {
      x = mul(x, a);
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = a;
      break;
    }
  }
}

unsigned GaloisField::pow(unsigned a, std::uint64_t e) const {
  unsigned r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

PermGroup checked(PermGroup g, std::uint64_t expect, std::string const& name) {
  if (g.order() != expect) {
    throw InvariantViolation("seed " + name + " has order " + std::to_string(g.order()) + ", expected " +
                             std::to_string(expect));
  }
  return g;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

using Vec = std::vector<unsigned>;
using Mat = std::vector<Vec>;

// Projective points of F_q^n, first nonzero coordinate 1.
std::vector<Vec> projective_points(GaloisField const& f, unsigned n) {
  std::vector<Vec> pts;
  unsigned q = f.order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= q;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec v(n);
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      v[i] = static_cast<unsigned>(c % q);
      c /= q;
    }
    auto first = std::find_if(v.begin(), v.end(), [](unsigned x) { return x != 0; });
    if (*first == 1) pts.push_back(std::move(v));
  }
  return pts;
}

Vec normalize(GaloisField const& f, Vec v) {
  auto first = std::find_if(v.begin(), v.end(), [](unsigned x) { return x != 0; });
  unsigned s = f.inv(*first);
  for (auto& x : v) x = f.mul(x, s);
  return v;
}

Vec apply(GaloisField const& f, Vec const& v, Mat const& m) {
  std::size_t n = v.size();
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i]) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] = f.add(out[j], f.mul(v[i], m[i][j]));
  }
  return out;
}

Permutation on_points(GaloisField const& f, std::vector<Vec> const& pts, std::map<Vec, Point> const& index,
                      Mat const& m) {
  std::vector<Point> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) img[i] = index.at(normalize(f, apply(f, pts[i], m)));
  return Permutation(std::move(img));
}

std::map<Vec, Point> point_index(std::vector<Vec> const& pts) {
  std::map<Vec, Point> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) idx.emplace(pts[i], static_cast<Point>(i));
  return idx;
}

// Adds candidate generators in order until the group reaches `target`.
PermGroup grow_until(std::size_t degree, std::vector<Permutation> base,
                     std::vector<Permutation> const& candidates, std::uint64_t target, std::string const& name) {
  PermGroup g(degree, base);
  for (auto const& c : candidates) {
    if (g.order() >= target) break;
    if (g.contains(c)) continue;
    base.push_back(c);
    g = PermGroup(degree, base);
  }
  return checked(g, target, name);
}

}  // namespace

PermGroup alternating_group(unsigned n) {
  std::vector<Point> a(n), b(n);
  for (unsigned i = 0; i < n; ++i) a[i] = b[i] = i;
  a[0] = 1;
  a[1] = 2;
  a[2] = 0;
  if (n % 2) {
    for (unsigned i = 0; i < n; ++i) b[i] = (i + 1) % n;
  } else {
    for (unsigned i = 1; i < n; ++i) b[i] = i + 1 < n ? i + 1 : 1;
  }
  std::uint64_t order = 1;
  for (unsigned i = 3; i <= n; ++i) order *= i;
  return checked(PermGroup(n, {Permutation(a), Permutation(b)}), order, "A" + std::to_string(n));
}

PermGroup psl2(unsigned q) {
  GaloisField f(q);
  unsigned inf = q;
  unsigned w2 = f.mul(f.primitive(), f.primitive());
  std::vector<Point> t(q + 1), s(q + 1), j(q + 1);
  for (unsigned z = 0; z < q; ++z) {
    t[z] = f.add(z, 1);
    s[z] = f.mul(w2, z);
    j[z] = z == 0 ? inf : f.neg(f.inv(z));
  }
  t[inf] = s[inf] = inf;
  j[inf] = 0;
  std::uint64_t order = std::uint64_t(q) * (std::uint64_t(q) * q - 1) / gcd(2, q - 1);
  return checked(PermGroup(q + 1, {Permutation(t), Permutation(s), Permutation(j)}), order,
                 "L2(" + std::to_string(q) + ")");
}

PermGroup psl3(unsigned q) {
  GaloisField f(q);
  auto pts = projective_points(f, 3);
  auto idx = point_index(pts);
  std::vector<unsigned> scalars{1};
  if (f.primitive() != 1 && q != f.characteristic()) scalars.push_back(f.primitive());
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (unsigned c : scalars) {
        Mat m(3, Vec(3, 0));
        for (unsigned k = 0; k < 3; ++k) m[k][k] = 1;
        m[i][j] = c;
        gens.push_back(on_points(f, pts, idx, m));
      }
    }
  }
  std::uint64_t qq = q;
  std::uint64_t order = qq * qq * qq * (qq * qq * qq - 1) * (qq * qq - 1) / gcd(3, q - 1);
  return grow_until(pts.size(), {}, gens, order, "L3(" + std::to_string(q) + ")");
}

PermGroup psu3_3() {
  GaloisField f(9);
  auto bar = [&](unsigned x) { return f.pow(x, 3); };
  // Hermitian form x1*bar(y3) + x2*bar(y2) + x3*bar(y1).
  auto form = [&](Vec const& x, Vec const& y) {
    return f.add(f.add(f.mul(x[0], bar(y[2])), f.mul(x[1], bar(y[1]))), f.mul(x[2], bar(y[0])));
  };
  std::vector<Vec> pts;
  for (auto const& v : projective_points(f, 3)) {
    if (form(v, v) == 0) pts.push_back(v);
  }
  auto idx = point_index(pts);
  Mat basis(3, Vec(3, 0));
  for (unsigned k = 0; k < 3; ++k) basis[k][k] = 1;
  auto preserves = [&](Mat const& m) {
    for (unsigned i = 0; i < 3; ++i) {
      for (unsigned j = 0; j < 3; ++j) {
        if (form(apply(f, basis[i], m), apply(f, basis[j], m)) != form(basis[i], basis[j])) return false;
      }
    }
    return true;
  };
  std::vector<Permutation> cands;
  for (unsigned a = 0; a < 9; ++a) {
    for (unsigned b = 0; b < 9; ++b) {
      for (unsigned c = 0; c < 9; ++c) {
        Mat m{{1, a, b}, {0, 1, c}, {0, 0, 1}};
        if ((a || b || c) && preserves(m)) cands.push_back(on_points(f, pts, idx, m));
      }
    }
  }
  Mat w{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  PERFECT_CHECK(preserves(w), "psu3_3: Weyl element");
  return grow_until(pts.size(), {on_points(f, pts, idx, w)}, cands, 6048, "U3(3)");
}

PermGroup psp4_3() {
  GaloisField f(3);
  auto pts = projective_points(f, 4);
  auto idx = point_index(pts);
  auto omega = [&](Vec const& x, Vec const& y) {
    unsigned s = f.add(f.mul(x[0], y[2]), f.mul(x[1], y[3]));
    return f.sub(s, f.add(f.mul(x[2], y[0]), f.mul(x[3], y[1])));
  };
  std::vector<Permutation> cands;
  for (auto const& v : pts) {
    Mat m(4, Vec(4, 0));
    for (unsigned i = 0; i < 4; ++i) {
      Vec e(4, 0);
      e[i] = 1;
      unsigned c = omega(e, v);
      for (unsigned j = 0; j < 4; ++j) m[i][j] = f.add(e[j], f.mul(c, v[j]));
    }
    cands.push_back(on_points(f, pts, idx, m));
  }
  return grow_until(pts.size(), {}, cands, 25920, "S4(3)");
}

PermGroup mathieu11() {
  return checked(PermGroup(11, {Permutation::from_one_based({2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 1}),
                                Permutation::from_cycles(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})}),
                 7920, "M11");
}

PermGroup mathieu12() {
  return checked(PermGroup(12, {Permutation::from_one_based({2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 1, 12}),
                                Permutation::from_cycles(12, {{3, 7, 11, 8}, {4, 10, 5, 6}}),
                                Permutation::from_cycles(12, {{1, 12}, {2, 11}, {3, 6}, {4, 8}, {5, 9}, {7, 10}})}),
                 95040, "M12");
}

// ---------------------------------------------------------------------------

std::vector<Seed> standard_seeds(std::uint64_t max_order) {
  std::vector<Seed> out;
  auto add = [&](std::string name, std::uint64_t order, auto make) {
    if (order <= max_order) out.push_back({std::move(name), order, make()});
  };
  for (unsigned n = 5; n <= 9; ++n) {
    std::uint64_t order = 1;
    for (unsigned i = 3; i <= n; ++i) order *= i;
    add("A" + std::to_string(n), order, [n] { return alternating_group(n); });
  }
  for (unsigned q = 7; q <= 125; ++q) {
    if (q == 9) continue;
    unsigned r = q, p = 0;
    for (unsigned d = 2; d <= q; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    while (r % p == 0) r /= p;
    if (r != 1) continue;
    std::uint64_t order = std::uint64_t(q) * (std::uint64_t(q) * q - 1) / gcd(2, q - 1);
    add("L2(" + std::to_string(q) + ")", order, [q] { return psl2(q); });
  }
  add("L3(3)", 5616, [] { return psl3(3); });
  add("L3(4)", 20160, [] { return psl3(4); });
  add("L3(5)", 372000, [] { return psl3(5); });
  add("U3(3)", 6048, [] { return psu3_3(); });
  add("S4(3)", 25920, [] { return psp4_3(); });
  add("M11", 7920, [] { return mathieu11(); });
  add("M12", 95040, [] { return mathieu12(); });
  std::stable_sort(out.begin(), out.end(), [](Seed const& a, Seed const& b) {
    return a.order != b.order ? a.order < b.order : a.name < b.name;
  });
  return out;
}

std::string seed_file_text(std::vector<Seed> const& seeds) {
  std::ostringstream os;
  for (auto const& s : seeds) {
    os << "seed " << s.name << ' ' << s.order << ' ' << s.group.degree() << '\n';
    for (auto const& g : s.group.generators()) {
      for (std::size_t i = 0; i < g.degree(); ++i) os << (i ? " " : "") << g[static_cast<Point>(i)] + 1;
      os << '\n';
    }
    os << "end\n";
  }
  return os.str();
}

std::vector<Seed> load_seed_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open seed file " + path.string());
  std::vector<Seed> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream hs(line);
    std::string word;
    Seed s;
    std::size_t degree = 0;
    if (!(hs >> word >> s.name >> s.order >> degree) || word != "seed") {
      throw std::invalid_argument("seed file: bad header line '" + line + "'");
    }
    std::vector<Permutation> gens;
    while (std::getline(in, line) && line != "end") {
      std::istringstream ls(line);
      std::vector<Point> img;
      Point x;
      while (ls >> x) img.push_back(x);
      if (img.size() != degree) throw std::invalid_argument("seed file: generator of wrong degree");
      gens.push_back(Permutation::from_one_based(img));
    }
    s.group = checked(PermGroup(degree, std::move(gens)), s.order, s.name);
    out.push_back(std::move(s));
  }
  return out;
}

PermGroup direct_product(std::vector<PermGroup const*> const& factors) {
  std::size_t total = 0;
  for (auto const* f : factors) total += f->degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (auto const* f : factors) {
    for (auto const& g : f->generators()) {
      std::vector<Point> img(total);
      for (std::size_t i = 0; i < total; ++i) img[i] = static_cast<Point>(i);
      for (std::size_t i = 0; i < f->degree(); ++i) {
        img[offset + i] = static_cast<Point>(offset + g[static_cast<Point>(i)]);
      }
      gens.emplace_back(std::move(img));
    }
    offset += f->degree();
  }
  return PermGroup(total, std::move(gens));
}

}  // namespace perfect
