#include "perfect/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "perfect/errors.hpp"

namespace perfect {

std::vector<Matrix> element_matrices(GroupTable const& g, FpModule const& m) {
  PERFECT_CHECK(m.action.size() == g.num_generators(), "element_matrices: generator count mismatch");
  auto letters = letter_matrices(m);
  std::vector<Matrix> out(g.order());
  out[0] = Matrix::identity(m.p, m.dim);
  // BFS numbering: a word's prefix names an earlier element.
  for (Elem x = 1; x < g.order(); ++x) {
    auto w = g.word(x);
    Elem parent = g.mul_word(g.identity(), w.first(w.size() - 1));
    out[x] = out[parent] * letters[w.back()];
  }
  return out;
}

Vector collect_tails(std::vector<RuleApplication> const& apps, Vector const& tails,
                     std::vector<Matrix> const& values, unsigned p, std::size_t dim) {
  Vector acc(dim, 0);
  Vector t(dim);
  for (auto const& a : apps) {
    std::copy(tails.begin() + static_cast<std::ptrdiff_t>(a.rule * dim),
              tails.begin() + static_cast<std::ptrdiff_t>((a.rule + 1) * dim), t.begin());
    if (is_zero(t)) continue;
    Vector v = vec_mul(t, values[a.suffix]);
    for (std::size_t c = 0; c < dim; ++c) acc[c] = fp_add(acc[c], v[c], p);
  }
  return acc;
}

// ---------------------------------------------------------------------------

SparseSystem::SparseSystem(unsigned p, std::size_t num_vars)
    : p_(p), pivot_(num_vars, -1), acc_(num_vars, 0) {}

void SparseSystem::normalize(Row& row) const {
  std::sort(row.begin(), row.end());
  Row out;
  for (auto const& [v, c] : row) {
    if (!out.empty() && out.back().first == v) {
      out.back().second = fp_add(out.back().second, c, p_);
    } else {
      out.emplace_back(v, static_cast<Scalar>(c % p_));
    }
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  row = std::move(out);
}

namespace {

// a - c * b for sorted sparse rows.
SparseSystem::Row sub_scaled(SparseSystem::Row const& a, Scalar c, SparseSystem::Row const& b,
                             unsigned p) {
  SparseSystem::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, fp_neg(fp_mul(c, b[j].second, p), p));
      ++j;
    } else {
      Scalar v = fp_sub(a[i].second, fp_mul(c, b[j].second, p), p);
      if (v) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseSystem::add(Row row) {
  normalize(row);
  if (row.empty()) return false;
  // Rows are kept fully reduced, so each holds its pivot and free variables
  // only; one pass over the pivot entries of the new row suffices.
  for (auto const& [v, c] : row) {
    acc_[v] = c;
    touched_.push_back(v);
  }
  for (auto const& [v, c0] : row) {
    std::int64_t pr = pivot_[v];
    if (pr < 0) continue;
    Scalar c = acc_[v];
    if (!c) continue;
    for (auto const& [u, e] : rows_[static_cast<std::size_t>(pr)]) {
      if (!acc_[u]) touched_.push_back(u);
      acc_[u] = fp_sub(acc_[u], fp_mul(c, e, p_), p_);
    }
  }
  Row reduced;
  std::sort(touched_.begin(), touched_.end());
  touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
  for (auto v : touched_) {
    if (acc_[v]) reduced.emplace_back(v, acc_[v]);
    acc_[v] = 0;
  }
  touched_.clear();
  if (reduced.empty()) return false;
  auto [v, c] = reduced.back();
  Scalar inv = fp_inv(c, p_);
  for (auto& e : reduced) e.second = fp_mul(e.second, inv, p_);
  for (auto& other : rows_) {
    auto it = std::lower_bound(other.begin(), other.end(), std::make_pair(v, Scalar(0)));
    if (it == other.end() || it->first != v) continue;
    other = sub_scaled(other, it->second, reduced, p_);
  }
  pivot_[v] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(reduced));
  ++rank_;
  return true;
}

bool SparseSystem::satisfied_by(Vector const& x) const {
  for (auto const& row : rows_) {
    unsigned acc = 0;
    for (auto const& [v, c] : row) acc = (acc + unsigned(c) * x[v]) % p_;
    if (acc) return false;
  }
  return true;
}

std::vector<Vector> SparseSystem::nullspace() const {
  std::size_t n = pivot_.size();
  std::vector<std::uint32_t> free_vars;
  std::vector<std::int64_t> free_index(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (pivot_[v] < 0) {
      free_index[v] = static_cast<std::int64_t>(free_vars.size());
      free_vars.push_back(static_cast<std::uint32_t>(v));
    }
  }
  std::vector<Vector> basis(free_vars.size(), Vector(n, 0));
  for (std::size_t i = 0; i < free_vars.size(); ++i) basis[i][free_vars[i]] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (pivot_[v] < 0) continue;
    for (auto const& [u, c] : rows_[static_cast<std::size_t>(pivot_[v])]) {
      if (u == v) continue;
      basis[static_cast<std::size_t>(free_index[u])][v] = fp_neg(c, p_);
    }
  }
  return basis;
}

// ---------------------------------------------------------------------------

SparseSystem cocycle_equations(RewritingSystem const& r, FpModule const& m) {
  GroupTable const& g = r.group();
  unsigned p = m.p;
  std::size_t d = m.dim;
  auto values = element_matrices(g, m);
  SparseSystem sys(p, r.num_rules() * d);
  std::vector<RuleApplication> left, right;
  std::vector<std::pair<std::uint64_t, int>> contrib;
  r.for_each_critical_pair([&](CriticalPair const& cp) {
    left.clear();
    right.clear();
    RwsWord tail(cp.word.begin() + static_cast<std::ptrdiff_t>(r.rules()[cp.first_rule].lhs.size()),
                 cp.word.end());
    left.push_back({static_cast<std::uint32_t>(cp.first_rule), r.evaluate(tail)});
    right.push_back({static_cast<std::uint32_t>(cp.second_rule), g.identity()});
    RwsWord a = r.rewrite(cp.left_reduct, left);
    RwsWord b = r.rewrite(cp.right_reduct, right);
    if (a != b) throw InvariantViolation("cocycle_equations: critical pair does not resolve");
    contrib.clear();
    for (auto const& x : left) contrib.emplace_back((std::uint64_t(x.rule) << 32) | x.suffix, 1);
    for (auto const& x : right) contrib.emplace_back((std::uint64_t(x.rule) << 32) | x.suffix, -1);
    std::sort(contrib.begin(), contrib.end());
    std::vector<std::pair<std::uint64_t, int>> merged;
    for (auto const& c : contrib) {
      if (!merged.empty() && merged.back().first == c.first) {
        merged.back().second += c.second;
      } else {
        merged.push_back(c);
      }
    }
    for (std::size_t col = 0; col < d; ++col) {
      SparseSystem::Row row;
      for (auto const& [key, coef] : merged) {
        int c = ((coef % int(p)) + int(p)) % int(p);
        if (!c) continue;
        auto rule = static_cast<std::uint32_t>(key >> 32);
        auto s = static_cast<Elem>(key & 0xffffffffu);
        Matrix const& a_s = values[s];
        for (std::size_t k = 0; k < d; ++k) {
          Scalar e = a_s(k, col);
          if (e) row.emplace_back(static_cast<std::uint32_t>(rule * d + k), fp_mul(e, static_cast<Scalar>(c), p));
        }
      }
      if (!row.empty()) sys.add(std::move(row));
    }
    return true;
  });
  return sys;
}

std::vector<Vector> two_cocycle_space(RewritingSystem const& r, FpModule const& m) {
  return cocycle_equations(r, m).nullspace();
}

std::vector<Vector> two_coboundaries(RewritingSystem const& r, FpModule const& m) {
  GroupTable const& g = r.group();
  unsigned p = m.p;
  std::size_t d = m.dim;
  std::size_t nv = r.num_rules() * d;
  auto values = element_matrices(g, m);
  // Shifting letter a by basis vector k.
  std::vector<Vector> shifts(r.num_letters() * d, Vector(nv, 0));
  auto accumulate = [&](RwsWord const& w, std::size_t rule, bool negate) {
    Elem s = g.identity();
    for (std::size_t pos = w.size(); pos-- > 0;) {
      RwsLetter a = w[pos];
      Matrix const& as = values[s];
      for (std::size_t k = 0; k < d; ++k) {
        Vector& out = shifts[a * d + k];
        for (std::size_t c = 0; c < d; ++c) {
          Scalar e = as(k, c);
          if (!e) continue;
          Scalar& slot = out[rule * d + c];
          slot = negate ? fp_sub(slot, e, p) : fp_add(slot, e, p);
        }
      }
      s = r.left_multiply(a, s);
    }
  };
  for (std::size_t i = 0; i < r.num_rules(); ++i) {
    accumulate(r.rules()[i].lhs, i, false);
    accumulate(r.rules()[i].rhs, i, true);
  }
  Echelon e(p, nv);
  std::vector<Vector> basis;
  for (auto& v : shifts) {
    if (e.add(v)) basis.push_back(std::move(v));
  }
  return basis;
}

CohomologyGroup h2(RewritingSystem const& r, FpModule const& m) {
  CohomologyGroup h;
  h.p = m.p;
  h.module_dim = m.dim;
  h.num_rules = r.num_rules();
  auto sys = std::make_shared<SparseSystem>(cocycle_equations(r, m));
  h.equations = sys;
  h.z2_basis = sys->nullspace();
  h.b2_basis = two_coboundaries(r, m);
  std::size_t nv = h.num_vars();
  Echelon e(h.p, nv);
  for (auto const& b : h.b2_basis) {
    if (!sys->satisfied_by(b)) throw InvariantViolation("h2: coboundary violates a cocycle condition");
    e.add(b);
  }
  for (auto const& z : h.z2_basis) {
    if (e.add(z)) h.h2_basis.push_back(z);
  }
  PERFECT_CHECK(h.z_dim() == h.b_dim() + h.h_dim(), "h2: dimension count mismatch");
  std::size_t nb = h.b_dim() + h.h_dim();
  auto solver = std::make_shared<Echelon>(h.p, nv + nb);
  std::size_t idx = 0;
  for (auto const* list : {&h.b2_basis, &h.h2_basis}) {
    for (auto const& v : *list) {
      Vector row(nv + nb, 0);
      std::copy(v.begin(), v.end(), row.begin());
      row[nv + idx++] = 1;
      solver->add(std::move(row));
    }
  }
  h.solver = solver;
  return h;
}

Vector CohomologyGroup::h2_coordinates(Vector const& z) const {
  std::size_t nv = num_vars();
  std::size_t nb = b_dim() + h_dim();
  Vector row(nv + nb, 0);
  std::copy(z.begin(), z.end(), row.begin());
  solver->reduce(row);
  for (std::size_t i = 0; i < nv; ++i) {
    if (row[i]) throw std::invalid_argument("h2_coordinates: vector is not a cocycle");
  }
  Vector out(h_dim());
  for (std::size_t i = 0; i < h_dim(); ++i) out[i] = fp_neg(row[nv + b_dim() + i], p);
  return out;
}

Vector CohomologyGroup::cocycle(Vector const& coordinates) const {
  Vector z(num_vars(), 0);
  for (std::size_t i = 0; i < coordinates.size(); ++i) axpy(z, coordinates[i], h2_basis[i], p);
  return z;
}

FpPresentation extension(RewritingSystem const& r, FpModule const& m, CohomologyGroup const& h,
                         Vector const& z) {
  if (z.size() != h.num_vars() || !h.is_cocycle(z)) {
    throw std::invalid_argument("extension: tail vector is not a cocycle");
  }
  return extension_presentation(r, m, z);
}

FpPresentation extension_presentation(RewritingSystem const& r, FpModule const& m, Vector const& z) {
  std::size_t nl = r.num_letters();
  std::size_t d = m.dim;
  FpPresentation pres;
  for (auto const& s : r.alphabet()) pres.generator_names.push_back(s.name);
  for (std::size_t i = 0; i < d; ++i) pres.generator_names.push_back("m" + std::to_string(i + 1));
  auto module_gen = [&](std::size_t i) { return static_cast<int>(nl + i + 1); };
  auto module_word = [&](Vector const& v, bool inverse) {
    FpWord w;
    for (std::size_t j = 0; j < d; ++j) {
      for (Scalar t = 0; t < v[j]; ++t) w.push_back(inverse ? -module_gen(j) : module_gen(j));
    }
    return w;
  };
  for (std::size_t i = 0; i < d; ++i) {
    pres.relators.push_back(FpWord(m.p, module_gen(i)));
    for (std::size_t j = i + 1; j < d; ++j) {
      pres.relators.push_back(commutator_word({module_gen(i)}, {module_gen(j)}));
    }
  }
  auto values = element_matrices(r.group(), m);
  for (std::size_t a = 0; a < nl; ++a) {
    int x = static_cast<int>(a + 1);
    Matrix const& act = values[r.alphabet()[a].element];
    for (std::size_t i = 0; i < d; ++i) {
      FpWord w{-x, module_gen(i), x};
      auto img = module_word(act.row(i), true);
      w.insert(w.end(), img.begin(), img.end());
      pres.relators.push_back(std::move(w));
    }
  }
  for (std::size_t k = 0; k < r.num_rules(); ++k) {
    auto const& rule = r.rules()[k];
    FpWord w;
    for (RwsLetter a : rule.lhs) w.push_back(static_cast<int>(a + 1));
    Vector t(z.begin() + static_cast<std::ptrdiff_t>(k * d), z.begin() + static_cast<std::ptrdiff_t>((k + 1) * d));
    auto tinv = module_word(t, true);
    w.insert(w.end(), tinv.begin(), tinv.end());
    for (auto it = rule.rhs.rbegin(); it != rule.rhs.rend(); ++it) w.push_back(-static_cast<int>(*it + 1));
    pres.relators.push_back(free_reduce(w));
  }
  return pres;
}

}  // namespace perfect
