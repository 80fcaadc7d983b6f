#include "perfect/fpgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "perfect/errors.hpp"
#include "perfect/fp.hpp"

namespace perfect {

void FpPresentation::validate() const {
  auto n = static_cast<int>(generator_names.size());
  for (auto const& r : relators) {
    for (int x : r) {
      if (x == 0 || std::abs(x) > n) {
        throw std::invalid_argument("FpPresentation: relator uses an undeclared generator");
      }
    }
  }
}

FpPresentation FpPresentation::with_generators(std::size_t n, std::string const& prefix) {
  FpPresentation p;
  for (std::size_t i = 0; i < n; ++i) p.generator_names.push_back(prefix + std::to_string(i + 1));
  return p;
}

FpWord inverse_word(FpWord const& w) {
  FpWord r(w.rbegin(), w.rend());
  for (auto& x : r) x = -x;
  return r;
}

FpWord concat(FpWord const& a, FpWord const& b) {
  FpWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

FpWord commutator_word(FpWord const& a, FpWord const& b) {
  return concat(concat(inverse_word(a), inverse_word(b)), concat(a, b));
}

FpWord free_reduce(FpWord const& w) {
  FpWord r;
  for (int x : w) {
    if (!r.empty() && r.back() == -x) {
      r.pop_back();
    } else {
      r.push_back(x);
    }
  }
  return r;
}

namespace {

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod, res;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &res)) {
    throw BudgetExceeded("snf_overflow", "Smith normal form entries exceed 64 bits");
  }
  return res;
}

}  // namespace

std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot of smallest absolute value in the remaining block.
    std::size_t pi = rows, pj = cols;
    std::int64_t best = 0;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        std::int64_t v = std::llabs(a[i][j]);
        if (v && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (best == 0) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        std::int64_t q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] = checked_sub_mul(a[i][j], q, a[t][j]);
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        std::int64_t q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] = checked_sub_mul(a[i][j], q, a[i][t]);
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          changed = true;
        }
      }
      if (changed) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) {
              std::int64_t s;
              if (__builtin_add_overflow(a[t][k], a[i][k], &s)) {
                throw BudgetExceeded("snf_overflow", "Smith normal form entries exceed 64 bits");
              }
              a[t][k] = s;
            }
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return diag;
}

std::vector<std::int64_t> abelian_invariants(FpPresentation const& pres) {
  pres.validate();
  std::size_t n = pres.num_generators();
  std::vector<std::vector<std::int64_t>> m;
  for (auto const& r : pres.relators) {
    std::vector<std::int64_t> row(n, 0);
    for (int x : r) row[std::abs(x) - 1] += x > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  auto diag = n ? smith_diagonal(m) : std::vector<std::int64_t>{};
  std::vector<std::int64_t> out;
  for (auto d : diag) {
    if (d > 1) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = diag.size(); i < n; ++i) out.push_back(0);
  return out;
}

SchreierPresentation reidemeister_schreier(FpPresentation const& pres,
                                           std::vector<std::vector<Point>> const& action) {
  std::size_t ng = pres.num_generators();
  PERFECT_CHECK(action.size() == ng, "reidemeister_schreier: action/generator mismatch");
  std::size_t nc = ng ? action[0].size() : 1;
  std::vector<std::vector<Point>> inv(ng, std::vector<Point>(nc));
  for (std::size_t g = 0; g < ng; ++g) {
    for (Point c = 0; c < nc; ++c) inv[g][action[g][c]] = c;
  }
  std::vector<std::vector<bool>> tree(nc, std::vector<bool>(ng, false));
  std::vector<bool> seen(nc, false);
  std::vector<Point> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Point c = queue[k];
    for (std::size_t g = 0; g < ng; ++g) {
      Point d = action[g][c];
      if (!seen[d]) {
        seen[d] = true;
        tree[c][g] = true;
        queue.push_back(d);
      }
      Point e = inv[g][c];
      if (!seen[e]) {
        seen[e] = true;
        tree[e][g] = true;
        queue.push_back(e);
      }
    }
  }
  PERFECT_CHECK(queue.size() == nc, "reidemeister_schreier: action is not transitive");
  SchreierPresentation sp;
  sp.index.assign(nc, std::vector<long>(ng, -1));
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t g = 0; g < ng; ++g) {
      if (tree[c][g]) continue;
      sp.index[c][g] = static_cast<long>(sp.origin.size());
      sp.origin.emplace_back(c, g);
      sp.presentation.generator_names.push_back("s" + std::to_string(c + 1) + "_" +
                                                pres.generator_names[g]);
    }
  }
  for (auto const& r : pres.relators) {
    for (Point c0 = 0; c0 < nc; ++c0) {
      FpWord w;
      Point c = c0;
      for (int x : r) {
        std::size_t g = static_cast<std::size_t>(std::abs(x) - 1);
        if (x > 0) {
          long id = sp.index[c][g];
          if (id >= 0) w.push_back(static_cast<int>(id + 1));
          c = action[g][c];
        } else {
          Point d = inv[g][c];
          long id = sp.index[d][g];
          if (id >= 0) w.push_back(-static_cast<int>(id + 1));
          c = d;
        }
      }
      PERFECT_CHECK(c == c0, "reidemeister_schreier: relator does not fix cosets");
      w = free_reduce(w);
      if (!w.empty()) sp.presentation.relators.push_back(std::move(w));
    }
  }
  return sp;
}

std::size_t abelian_p_rank(FpPresentation const& pres, unsigned p) {
  std::size_t n = pres.num_generators();
  Echelon e(p, n);
  for (auto const& r : pres.relators) {
    std::vector<long> row(n, 0);
    for (int x : r) row[std::abs(x) - 1] += x > 0 ? 1 : -1;
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      long m = row[i] % static_cast<long>(p);
      v[i] = static_cast<Scalar>(m < 0 ? m + p : m);
    }
    e.add(std::move(v));
    if (e.rank() == n) break;
  }
  return n - e.rank();
}

}  // namespace perfect
