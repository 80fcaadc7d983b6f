#include "perfect/compat.hpp"

#include <algorithm>
#include <deque>

#include "perfect/errors.hpp"
#include "perfect/permgroup.hpp"

namespace perfect {

FpModule twisted_module(GroupTable const& g, FpModule const& m, ElementMap const& kappa) {
  FpModule out{m.p, m.dim, {}};
  for (Elem f : g.generators()) out.action.push_back(element_matrix(m, g, kappa(f)));
  return out;
}

bool is_compatible(GroupTable const& g, FpModule const& m, CompatiblePair const& pair) {
  auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (m.action[i] * pair.nu != pair.nu * element_matrix(m, g, pair.kappa(gens[i]))) return false;
  }
  return true;
}

CPGroup compatible_pairs(GroupTable const& g, AutomorphismGroup const& aut, IrreducibleModule const& m) {
  CPGroup cp;
  FpModule const& mod = m.module;
  // Inner automorphisms x -> c^-1 x c pair with A(c).
  for (Elem c : g.generators()) {
    cp.generators.push_back({inner_automorphism(g, c), element_matrix(mod, g, c)});
  }
  std::uint64_t compatible_outer = 1;
  for (std::size_t i = 1; i < aut.outer.size(); ++i) {
    auto const& kappa = aut.outer[i];
    auto nu = module_isomorphism(m, twisted_module(g, mod, kappa));
    if (!nu) continue;
    ++compatible_outer;
    cp.generators.push_back({kappa, *nu});
  }
  cp.projection_order = aut.inner_order * compatible_outer;
  auto ma = module_automorphisms(m);
  cp.kernel_order = ma.order;
  ElementMap id;
  id.image.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) id.image[x] = x;
  for (auto const& nu : ma.generators) cp.generators.push_back({id, nu});
  for (auto const& pair : cp.generators) {
    PERFECT_CHECK(is_compatible(g, mod, pair), "compatible_pairs: emitted pair fails the condition");
  }
  return cp;
}

namespace {

struct Transport {
  std::vector<std::vector<RuleApplication>> lhs_apps, rhs_apps;
  Matrix nu_inverse;
};

Transport transport(RewritingSystem const& r, CompatiblePair const& pair) {
  Transport t;
  std::vector<RwsWord> images;
  for (auto const& s : r.alphabet()) images.push_back(r.normal_form(pair.kappa(s.element)));
  auto substitute = [&](RwsWord const& w) {
    RwsWord out;
    for (RwsLetter a : w) out.insert(out.end(), images[a].begin(), images[a].end());
    return out;
  };
  for (auto const& rule : r.rules()) {
    std::vector<RuleApplication> a, b;
    RwsWord x = r.rewrite(substitute(rule.lhs), a);
    RwsWord y = r.rewrite(substitute(rule.rhs), b);
    if (x != y) throw InvariantViolation("cp_action_on_h2: transported rule sides differ");
    t.lhs_apps.push_back(std::move(a));
    t.rhs_apps.push_back(std::move(b));
  }
  auto inv = pair.nu.inverse();
  if (!inv) throw InvariantViolation("cp_action_on_h2: module map is singular");
  t.nu_inverse = *inv;
  return t;
}

Vector apply(Transport const& t, std::vector<Matrix> const& values, unsigned p, std::size_t d,
             Vector const& z) {
  Vector out(z.size(), 0);
  for (std::size_t k = 0; k < t.lhs_apps.size(); ++k) {
    Vector a = collect_tails(t.lhs_apps[k], z, values, p, d);
    Vector b = collect_tails(t.rhs_apps[k], z, values, p, d);
    for (std::size_t c = 0; c < d; ++c) a[c] = fp_sub(a[c], b[c], p);
    a = vec_mul(a, t.nu_inverse);
    std::copy(a.begin(), a.end(), out.begin() + static_cast<std::ptrdiff_t>(k * d));
  }
  return out;
}

}  // namespace

Vector cp_action_on_h2(RewritingSystem const& r, FpModule const& m, CohomologyGroup const& h,
                       CompatiblePair const& pair, Vector const& z) {
  auto values = element_matrices(r.group(), m);
  Vector image = apply(transport(r, pair), values, m.p, m.dim, z);
  if (!h.is_cocycle(image)) throw InvariantViolation("cp_action_on_h2: image is not a cocycle");
  return h.cocycle(h.h2_coordinates(image));
}

Matrix cp_coordinate_action(RewritingSystem const& r, FpModule const& m, CohomologyGroup const& h,
                            CompatiblePair const& pair) {
  auto values = element_matrices(r.group(), m);
  Transport t = transport(r, pair);
  Matrix out(m.p, h.h_dim(), h.h_dim());
  for (std::size_t i = 0; i < h.h_dim(); ++i) {
    Vector image = apply(t, values, m.p, m.dim, h.h2_basis[i]);
    if (!h.is_cocycle(image)) throw InvariantViolation("cp_action_on_h2: image is not a cocycle");
    out.set_row(i, h.h2_coordinates(image));
  }
  if (!out.inverse()) throw InvariantViolation("cp_action_on_h2: action on H2 is singular");
  return out;
}

namespace {

std::uint64_t encode(Vector const& v, unsigned p) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

Vector decode(std::uint64_t code, unsigned p, std::size_t n) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Scalar>(code % p);
    code /= p;
  }
  return v;
}

}  // namespace

H2Orbits orbit_representatives(CohomologyGroup const& h, std::vector<Matrix> const& actions,
                               std::uint64_t cap) {
  unsigned p = h.p;
  std::size_t n = h.h_dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > cap) {
      throw BudgetExceeded("h2_enumeration", "H2 has more than " + std::to_string(cap) +
                                                 " elements; raise the h2_enumeration budget");
    }
  }
  // image[a][x]: generator a applied to element code x.
  std::vector<std::vector<Point>> image(actions.size(), std::vector<Point>(total));
  for (std::size_t a = 0; a < actions.size(); ++a) {
    for (std::uint64_t x = 0; x < total; ++x) {
      image[a][x] = static_cast<Point>(encode(vec_mul(decode(x, p, n), actions[a]), p));
    }
  }
  H2Orbits out;
  std::vector<char> seen(total, 0);
  for (std::uint64_t x = 0; x < total; ++x) {
    if (seen[x]) continue;
    seen[x] = 1;
    std::uint64_t size = 0;
    std::deque<std::uint64_t> queue{x};
    while (!queue.empty()) {
      auto y = queue.front();
      queue.pop_front();
      ++size;
      for (auto const& img : image) {
        if (!seen[img[y]]) {
          seen[img[y]] = 1;
          queue.push_back(img[y]);
        }
      }
    }
    out.representatives.push_back(decode(x, p, n));
    out.sizes.push_back(size);
  }
  if (total <= 4096) {
    std::vector<Permutation> gens;
    for (auto& img : image) gens.emplace_back(std::move(img));
    out.image_order = PermGroup(total, std::move(gens)).order();
  } else {
    out.image_order = 0;
  }
  return out;
}

}  // namespace perfect
