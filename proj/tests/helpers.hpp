#ifndef PERFECT_TESTS_HELPERS_HPP_
#define PERFECT_TESTS_HELPERS_HPP_

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "perfect/permgroup.hpp"
#include "perfect/seeds.hpp"
#include "perfect/table.hpp"

namespace perfect::testing {

inline PermGroup symmetric_group(unsigned n) {
  std::vector<Point> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::vector<Point> tr(n);
  for (unsigned i = 0; i < n; ++i) tr[i] = i;
  std::swap(tr[0], tr[1]);
  return PermGroup(n, {Permutation(cyc), Permutation(tr)});
}

inline std::shared_ptr<GroupTable const> table_of(PermGroup const& g) {
  return std::make_shared<GroupTable const>(GroupTable::from_perm_group(g));
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// Same abstract group with points relabeled by a random permutation.
inline PermGroup relabel(PermGroup const& g, std::mt19937_64& rng) {
  Permutation s = random_permutation(g.degree(), rng);
  std::vector<Permutation> gens;
  for (auto const& x : g.generators()) gens.push_back(s.inverse() * x * s);
  return PermGroup(g.degree(), gens);
}

}  // namespace perfect::testing

#endif  // PERFECT_TESTS_HELPERS_HPP_
