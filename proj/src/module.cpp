#include "perfect/module.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "perfect/lowindex.hpp"
#include "perfect/structure.hpp"

namespace perfect {

FpModule trivial_module(unsigned p, std::size_t num_generators, std::size_t dim) {
  FpModule m;
  m.p = p;
  m.dim = dim;
  m.action.assign(num_generators, Matrix::identity(p, dim));
  return m;
}

FpModule permutation_module(unsigned p, std::vector<std::vector<Point>> const& generator_action,
                            std::size_t degree) {
  FpModule m;
  m.p = p;
  m.dim = degree;
  for (auto const& img : generator_action) {
    Matrix a(p, degree, degree);
    for (std::size_t i = 0; i < degree; ++i) a(i, img[i]) = 1;
    m.action.push_back(std::move(a));
  }
  return m;
}

FpModule tensor_product(FpModule const& a, FpModule const& b) {
  FpModule m;
  m.p = a.p;
  m.dim = a.dim * b.dim;
  for (std::size_t i = 0; i < a.action.size(); ++i) {
    m.action.push_back(kronecker(a.action[i], b.action[i]));
  }
  return m;
}

FpModule dual_module(FpModule const& m) {
  FpModule d = m;
  for (auto& a : d.action) a = a.inverse().value().transpose();
  return d;
}

std::vector<Matrix> letter_matrices(FpModule const& m) {
  std::vector<Matrix> out;
  for (auto const& a : m.action) {
    out.push_back(a);
    auto inv = a.inverse();
    if (!inv) throw std::invalid_argument("module generator matrix is singular");
    out.push_back(*inv);
  }
  return out;
}

Matrix element_matrix(FpModule const& m, GroupTable const& g, Elem x) {
  auto letters = letter_matrices(m);
  Matrix r = Matrix::identity(m.p, m.dim);
  for (Letter l : g.word(x)) r = r * letters[l];
  return r;
}

bool is_valid_module(FpModule const& m, GroupTable const& g) {
  if (m.action.size() != g.num_generators()) return false;
  auto letters = letter_matrices(m);
  std::vector<Matrix> img(g.order());
  std::vector<bool> have(g.order(), false);
  img[0] = Matrix::identity(m.p, m.dim);
  have[0] = true;
  for (Elem x = 0; x < g.order(); ++x) {
    for (Letter l = 0; l < g.num_letters(); ++l) {
      Elem y = g.step(x, l);
      Matrix v = img[x] * letters[l];
      if (!have[y]) {
        img[y] = std::move(v);
        have[y] = true;
      } else if (!(img[y] == v)) {
        return false;
      }
    }
  }
  return true;
}

Matrix AlgebraWord::evaluate(std::vector<Matrix> const& gens) const {
  PERFECT_CHECK(!gens.empty(), "AlgebraWord::evaluate needs at least one generator");
  std::vector<Matrix> pool = gens;
  for (auto [i, j] : products) pool.push_back(pool[i] * pool[j]);
  Matrix r(gens[0].prime(), gens[0].rows(), gens[0].cols());
  for (auto [i, c] : combination) r = r + pool[i].scaled(c);
  return r;
}

SpinResult spin(Vector const& v, std::vector<Matrix> const& gens) {
  SpinResult s;
  unsigned p = gens.empty() ? 2 : gens[0].prime();
  s.span = Echelon(p, v.size());
  if (!s.span.add(v)) return s;
  s.basis.push_back(v);
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    if (s.basis.size() == v.size()) break;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Vector w = vec_mul(s.basis[i], gens[g]);
      if (s.span.add(w)) {
        s.basis.push_back(std::move(w));
        s.recipe.emplace_back(i, g);
        if (s.basis.size() == v.size()) break;
      }
    }
  }
  return s;
}

Matrix replay_spin(Vector const& w, std::vector<Matrix> const& gens,
                   std::vector<std::pair<std::size_t, std::size_t>> const& recipe) {
  unsigned p = gens.empty() ? 2 : gens[0].prime();
  std::vector<Vector> rows{w};
  for (auto [i, g] : recipe) rows.push_back(vec_mul(rows[i], gens[g]));
  return Matrix::from_rows(p, rows, w.size());
}

namespace {

Matrix echelon_matrix(unsigned p, std::size_t n, std::vector<Vector> const& rows) {
  Echelon e(p, n);
  for (auto const& r : rows) e.add(r);
  return e.as_matrix();
}

std::vector<Matrix> standard_action(FpModule const& m, Matrix const& b) {
  Matrix binv = b.inverse().value();
  std::vector<Matrix> out;
  for (auto const& a : m.action) out.push_back(b * a * binv);
  return out;
}

AlgebraWord random_word(std::mt19937_64& rng, std::size_t ngens, unsigned p) {
  AlgebraWord w;
  if (ngens == 0) return w;
  std::size_t pool = ngens;
  for (int k = 0; k < 4; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
    w.products.emplace_back(pick(rng), pick(rng));
    ++pool;
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
  std::uniform_int_distribution<unsigned> coef(1, p - 1);
  for (int k = 0; k < 3; ++k) w.combination.emplace_back(pick(rng), static_cast<Scalar>(coef(rng)));
  return w;
}

constexpr int kMaxFactorDegree = 16;
constexpr int kMaxAttempts = 400;

}  // namespace

MeatAxeResult meataxe(FpModule const& m, std::uint64_t seed) {
  MeatAxeResult res;
  std::size_t n = m.dim;
  unsigned p = m.p;
  PERFECT_CHECK(n > 0, "meataxe: zero-dimensional module");
  if (m.action.empty()) {
    if (n == 1) {
      res.irreducible = true;
      res.certificate.nullity = 1;
      res.certificate.kernel_vector = Vector{1};
      res.certificate.standard_basis = Matrix::identity(p, 1);
      return res;
    }
    Vector e(n, 0);
    e[0] = 1;
    res.submodule = Matrix::from_rows(p, {e}, n);
    return res;
  }
  std::vector<Matrix> transposed;
  for (auto const& a : m.action) transposed.push_back(a.transpose());
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    AlgebraWord word = random_word(rng, m.action.size(), p);
    Matrix theta = word.evaluate(m.action);
    for (auto const& [f, mult] : factor(char_poly(theta))) {
      (void)mult;
      if (f.degree() > kMaxFactorDegree) break;
      Matrix nf = evaluate(f, theta);
      Matrix kernel = left_nullspace(nf);
      Vector v = kernel.row(0);
      SpinResult s = spin(v, m.action);
      if (s.basis.size() < n) {
        res.submodule = s.span.as_matrix();
        return res;
      }
      if (kernel.rows() != static_cast<std::size_t>(f.degree())) continue;
      Matrix kt = left_nullspace(nf.transpose());
      SpinResult st = spin(kt.row(0), transposed);
      if (st.basis.size() < n) {
        Matrix ann = left_nullspace(st.span.as_matrix().transpose());
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < ann.rows(); ++i) rows.push_back(ann.row(i));
        res.submodule = echelon_matrix(p, n, rows);
        return res;
      }
      res.irreducible = true;
      auto& c = res.certificate;
      c.word = word;
      c.factor = f;
      c.nullity = kernel.rows();
      c.kernel_vector = v;
      c.recipe = s.recipe;
      c.standard_basis = Matrix::from_rows(p, s.basis, n);
      c.standard_action = standard_action(m, c.standard_basis);
      return res;
    }
  }
  throw BudgetExceeded("meataxe", "MeatAxe found no suitable algebra element");
}

IrreducibleModule certify_irreducible(FpModule const& m) {
  auto r = meataxe(m);
  if (!r.irreducible) throw std::invalid_argument("certify_irreducible: module is reducible");
  return {m, r.certificate};
}

FpModule submodule_action(FpModule const& m, Matrix const& basis_in) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < basis_in.rows(); ++i) rows.push_back(basis_in.row(i));
  Echelon e(m.p, m.dim);
  for (auto const& r : rows) e.add(r);
  FpModule s;
  s.p = m.p;
  s.dim = e.rank();
  for (auto const& a : m.action) {
    Matrix t(m.p, s.dim, s.dim);
    for (std::size_t i = 0; i < s.dim; ++i) t.set_row(i, e.coordinates(vec_mul(e.basis()[i], a)));
    s.action.push_back(std::move(t));
  }
  return s;
}

FpModule quotient_action(FpModule const& m, Matrix const& basis_in) {
  Echelon e(m.p, m.dim);
  for (std::size_t i = 0; i < basis_in.rows(); ++i) e.add(basis_in.row(i));
  std::vector<bool> is_pivot(m.dim, false);
  for (auto c : e.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.dim; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  FpModule q;
  q.p = m.p;
  q.dim = free_cols.size();
  for (auto const& a : m.action) {
    Matrix t(m.p, q.dim, q.dim);
    for (std::size_t i = 0; i < q.dim; ++i) {
      Vector w = a.row(free_cols[i]);
      e.reduce(w);
      for (std::size_t j = 0; j < q.dim; ++j) t(i, j) = w[free_cols[j]];
    }
    q.action.push_back(std::move(t));
  }
  return q;
}

std::vector<Matrix> intertwiner_space(FpModule const& a, FpModule const& b) {
  unsigned p = a.p;
  std::size_t n1 = a.dim, n2 = b.dim, nv = n1 * n2;
  std::vector<Vector> eqs;
  for (std::size_t g = 0; g < a.action.size(); ++g) {
    Matrix const& x = a.action[g];
    Matrix const& y = b.action[g];
    for (std::size_t r = 0; r < n1; ++r) {
      for (std::size_t c = 0; c < n2; ++c) {
        Vector eq(nv, 0);
        for (std::size_t k = 0; k < n1; ++k) eq[k * n2 + c] = fp_add(eq[k * n2 + c], x(r, k), p);
        for (std::size_t k = 0; k < n2; ++k) eq[r * n2 + k] = fp_sub(eq[r * n2 + k], y(k, c), p);
        eqs.push_back(std::move(eq));
      }
    }
  }
  Matrix sol = eqs.empty() ? Matrix::identity(p, nv) : solution_space(Matrix::from_rows(p, eqs, nv));
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < sol.rows(); ++i) {
    Matrix x(p, n1, n2);
    for (std::size_t k = 0; k < nv; ++k) x(k / n2, k % n2) = sol(i, k);
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

// Calls fn on every nonzero vector of F_p^e with leading nonzero entry 1.
bool for_each_projective(unsigned p, std::size_t e, std::function<bool(Vector const&)> const& fn) {
  for (std::size_t lead = 0; lead < e; ++lead) {
    Vector c(e, 0);
    c[lead] = 1;
    std::size_t tail = e - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < tail; ++i) total *= p;
    for (std::uint64_t k = 0; k < total; ++k) {
      std::uint64_t t = k;
      for (std::size_t i = lead + 1; i < e; ++i) {
        c[i] = static_cast<Scalar>(t % p);
        t /= p;
      }
      if (!fn(c)) return false;
    }
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

Matrix combine(std::vector<Matrix> const& basis, Vector const& c) {
  Matrix r(basis[0].prime(), basis[0].rows(), basis[0].cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i]) r = r + basis[i].scaled(c[i]);
  }
  return r;
}

}  // namespace

std::optional<Matrix> module_isomorphism(IrreducibleModule const& a, FpModule const& b) {
  FpModule const& ma = a.module;
  if (ma.dim != b.dim || ma.p != b.p || ma.action.size() != b.action.size()) return std::nullopt;
  auto const& cert = a.certificate;
  if (ma.action.empty()) {
    return Matrix::identity(ma.p, ma.dim);
  }
  Matrix theta = cert.word.evaluate(b.action);
  Matrix nf = evaluate(cert.factor, theta);
  Matrix kernel = left_nullspace(nf);
  if (kernel.rows() != cert.nullity) return std::nullopt;
  if (ipow(b.p, kernel.rows()) > 4000000) {
    throw BudgetExceeded("module_iso", "kernel too large for standard-basis search");
  }
  Matrix b1inv = cert.standard_basis.inverse().value();
  std::optional<Matrix> found;
  for_each_projective(b.p, kernel.rows(), [&](Vector const& c) {
    Vector w = vec_mul(c, kernel);
    Matrix b2 = replay_spin(w, b.action, cert.recipe);
    auto b2inv = b2.inverse();
    if (!b2inv) return true;
    for (std::size_t g = 0; g < b.action.size(); ++g) {
      if (!(b2 * b.action[g] * *b2inv == cert.standard_action[g])) return true;
    }
    found = b1inv * b2;
    return false;
  });
  return found;
}

std::optional<Matrix> module_isomorphism(FpModule const& a, FpModule const& b) {
  if (a.dim != b.dim || a.p != b.p || a.action.size() != b.action.size()) return std::nullopt;
  auto r = meataxe(a);
  if (r.irreducible) return module_isomorphism(IrreducibleModule{a, r.certificate}, b);
  auto space = intertwiner_space(a, b);
  if (space.empty()) return std::nullopt;
  std::optional<Matrix> found;
  if (ipow(a.p, space.size()) <= 65536) {
    std::size_t e = space.size();
    Vector c(e, 0);
    std::uint64_t total = ipow(a.p, e);
    for (std::uint64_t k = 1; k < total && !found; ++k) {
      std::uint64_t t = k;
      for (std::size_t i = 0; i < e; ++i) {
        c[i] = static_cast<Scalar>(t % a.p);
        t /= a.p;
      }
      Matrix x = combine(space, c);
      if (x.inverse()) found = x;
    }
    return found;
  }
  std::mt19937_64 rng(0xabcdef);
  std::uniform_int_distribution<unsigned> coef(0, a.p - 1);
  for (int k = 0; k < 2000; ++k) {
    Vector c(space.size());
    for (auto& x : c) x = static_cast<Scalar>(coef(rng));
    Matrix x = combine(space, c);
    if (x.inverse()) return x;
  }
  throw BudgetExceeded("module_iso", "no invertible intertwiner found by sampling");
}

ModuleAutomorphisms module_automorphisms(IrreducibleModule const& m) {
  ModuleAutomorphisms out;
  FpModule const& mod = m.module;
  unsigned p = mod.p;
  auto const& cert = m.certificate;
  std::vector<Matrix> endo;
  if (mod.action.empty()) {
    endo.push_back(Matrix::identity(p, mod.dim));
  } else {
    Matrix theta = cert.word.evaluate(mod.action);
    Matrix kernel = left_nullspace(evaluate(cert.factor, theta));
    Matrix b1inv = cert.standard_basis.inverse().value();
    std::vector<Matrix> cand;
    for (std::size_t j = 0; j < kernel.rows(); ++j) {
      cand.push_back(b1inv * replay_spin(kernel.row(j), mod.action, cert.recipe));
    }
    std::size_t n2 = mod.dim * mod.dim;
    std::vector<Vector> rows;
    for (auto const& e : cand) {
      Vector r;
      for (auto const& a : mod.action) {
        Matrix d = a * e - e * a;
        r.insert(r.end(), d.data().begin(), d.data().end());
      }
      rows.push_back(std::move(r));
    }
    Matrix coeffs = left_nullspace(Matrix::from_rows(p, rows, n2 * mod.action.size()));
    for (std::size_t i = 0; i < coeffs.rows(); ++i) endo.push_back(combine(cand, coeffs.row(i)));
  }
  std::size_t e = endo.size();
  out.field_degree = e;
  std::uint64_t q = ipow(p, e);
  out.order = q - 1;
  if (q - 1 == 1) return out;
  std::vector<std::uint64_t> primes;
  std::uint64_t t = q - 1;
  for (std::uint64_t d = 2; d * d <= t; ++d) {
    if (t % d == 0) {
      primes.push_back(d);
      while (t % d == 0) t /= d;
    }
  }
  if (t > 1) primes.push_back(t);
  Matrix id = Matrix::identity(p, mod.dim);
  Vector c(e, 0);
  for (std::uint64_t k = 1; k < q; ++k) {
    std::uint64_t s = k;
    for (std::size_t i = 0; i < e; ++i) {
      c[i] = static_cast<Scalar>(s % p);
      s /= p;
    }
    Matrix x = combine(endo, c);
    if (!x.inverse()) continue;
    bool generates = true;
    for (auto r : primes) {
      if (x.pow(static_cast<long long>((q - 1) / r)) == id) {
        generates = false;
        break;
      }
    }
    if (generates) {
      out.generators.push_back(x);
      return out;
    }
  }
  throw InvariantViolation("module_automorphisms: endomorphism ring is not a field");
}

namespace {

void chop_into(FpModule const& m, std::vector<std::pair<IrreducibleModule, std::size_t>>& out) {
  auto r = meataxe(m);
  if (!r.irreducible) {
    chop_into(submodule_action(m, r.submodule), out);
    chop_into(quotient_action(m, r.submodule), out);
    return;
  }
  for (auto& [irr, mult] : out) {
    if (irr.module.dim == m.dim && module_isomorphism(irr, m)) {
      ++mult;
      return;
    }
  }
  out.emplace_back(IrreducibleModule{m, r.certificate}, 1);
}

}  // namespace

std::vector<std::pair<IrreducibleModule, std::size_t>> chop(FpModule const& m) {
  std::vector<std::pair<IrreducibleModule, std::size_t>> out;
  chop_into(m, out);
  return out;
}

std::size_t count_p_regular_classes(GroupTable const& g, unsigned p) {
  auto cd = conjugacy_classes(g);
  auto normals = normal_subgroups(g, cd);
  Subgroup op = p_core(g, normals, p);
  GroupTable q = quotient_table(g, op);
  auto cq = conjugacy_classes(q);
  std::size_t count = 0;
  for (auto const& c : cq.classes) count += (c.element_order % p != 0) ? 1 : 0;
  return count;
}

namespace {

// Generator actions of a faithful permutation representation of g / kernel,
// preferring few points.
std::vector<std::vector<Point>> faithful_action(GroupTable const& g, GroupTable const& q,
                                                std::size_t& degree) {
  std::vector<std::vector<Point>> action(q.num_generators());
  degree = 0;
  auto append = [&](std::vector<std::vector<Point>> const& part, std::size_t deg) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (Point x : part[i]) action[i].push_back(static_cast<Point>(x + degree));
    }
    degree += deg;
  };
  std::size_t own_degree = g.has_permutations() ? g.permutation(0).degree() : g.order();
  try {
    std::size_t cap = std::min<std::size_t>(q.order(), 48);
    auto classes = low_index_subgroups(q, cap, 300000);
    Subgroup kernel = whole_group(q);
    std::vector<std::vector<std::vector<Point>>> parts;
    std::size_t total = 0;
    for (auto const& cls : classes) {
      if (kernel.order() == 1) break;
      Subgroup c = core(q, cls.subgroup);
      Subgroup k2 = intersection(q, kernel, c);
      if (k2.order() < kernel.order()) {
        kernel = k2;
        parts.push_back(coset_action(q, cls.subgroup).generator_action);
        total += cls.index;
      }
    }
    if (kernel.order() == 1 && total <= own_degree) {
      for (auto const& part : parts) append(part, part.empty() ? 1 : part[0].size());
      return action;
    }
  } catch (BudgetExceeded const&) {
  }
  if (g.has_permutations()) {
    std::vector<std::vector<Point>> part;
    for (std::size_t i = 0; i < g.num_generators(); ++i) {
      auto img = g.permutation(g.generator(i)).images();
      part.emplace_back(img.begin(), img.end());
    }
    append(part, own_degree);
    return action;
  }
  append(coset_action(q, trivial_subgroup(q)).generator_action, q.order());
  return action;
}

}  // namespace

std::vector<IrreducibleModule> irreducible_modules(GroupTable const& g, unsigned p,
                                                   std::size_t dim_cap, std::size_t closure_cap) {
  std::size_t ng = g.num_generators();
  std::vector<IrreducibleModule> found;
  if (g.order() == 1 || ng == 0) {
    found.push_back(certify_irreducible(trivial_module(p, ng)));
    return found;
  }
  auto cd = conjugacy_classes(g);
  auto normals = normal_subgroups(g, cd);
  Subgroup op = p_core(g, normals, p);
  GroupTable q = quotient_table(g, op);
  if (q.order() == 1) {
    found.push_back(certify_irreducible(trivial_module(p, ng)));
    return found;
  }
  std::size_t degree = 0;
  auto action = faithful_action(g, q, degree);
  FpModule perm = permutation_module(p, action, degree);
  auto add = [&](IrreducibleModule const& m) {
    for (auto const& f : found) {
      if (f.module.dim == m.module.dim && module_isomorphism(f, m.module)) return false;
    }
    found.push_back(m);
    return true;
  };
  for (auto& [irr, mult] : chop(perm)) add(irr);
  std::vector<IrreducibleModule> seeds;
  for (auto const& f : found) {
    bool trivial = std::all_of(f.module.action.begin(), f.module.action.end(),
                               [](Matrix const& a) { return a.is_identity(); });
    if (!trivial) seeds.push_back(f);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto const& s : seeds) {
      if (found[i].module.dim * s.module.dim > closure_cap) {
        throw BudgetExceeded("module_closure", "tensor product exceeds closure dimension cap");
      }
      FpModule t = tensor_product(found[i].module, s.module);
      for (auto& [irr, mult] : chop(t)) add(irr);
    }
  }
  std::vector<IrreducibleModule> out;
  for (auto& f : found) {
    if (f.module.dim <= dim_cap) out.push_back(std::move(f));
  }
  std::stable_sort(out.begin(), out.end(), [](IrreducibleModule const& a, IrreducibleModule const& b) {
    return a.module.dim < b.module.dim;
  });
  return out;
}

}  // namespace perfect
