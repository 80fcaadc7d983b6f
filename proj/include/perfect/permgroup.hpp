#ifndef PERFECT_PERMGROUP_HPP_
#define PERFECT_PERMGROUP_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "perfect/perm.hpp"

namespace perfect {

// One level of a stabilizer chain. The orbit is stored with a Schreier
// vector: for each orbit point other than the base point, the index of the
// strong generator that first reached it.
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> schreier;  // -1: not in orbit, -2: base point

  bool in_orbit(Point p) const { return schreier[p] != -1; }
  // u with base_point^u == p
  Permutation transversal(Point p) const;
};

class StabilizerChain {
 public:
  StabilizerChain() = default;
  // Deterministic Schreier-Sims; base points are the smallest moved points.
  StabilizerChain(std::size_t degree, std::vector<Permutation> const& gens);

  std::size_t degree() const noexcept { return degree_; }
  std::vector<ChainLevel> const& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  std::uint64_t order() const;
  bool contains(Permutation const& g) const;
  // Residue of g after sifting; identity iff g is in the group.
  Permutation sift(Permutation const& g) const;

 private:
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t start) const;
  void rebuild_orbit(ChainLevel& lvl) const;

  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
};

// A permutation group given by generators. Immutable once built; the
// stabilizer chain is computed on first use and shared between copies.
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> gens);

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Permutation> const& generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }

  StabilizerChain const& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(Permutation const& g) const { return chain().contains(g); }
  bool is_trivial() const;

  Permutation identity() const { return Permutation(degree_); }

  // Orbits of <gens> on {0..degree-1}, each sorted, listed by smallest point.
  std::vector<std::vector<Point>> orbits() const;

 private:
  struct Cache {
    std::once_flag once;
    StabilizerChain chain;
  };
  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<Cache> cache_;
};

// Normal closure of `elements` under conjugation by `group`.
PermGroup normal_closure(PermGroup const& group, std::vector<Permutation> const& elements);
// [G,G] as the normal closure of the commutators of generator pairs.
PermGroup derived_subgroup(PermGroup const& group);
bool is_perfect(PermGroup const& group);

// Direct product acting on the disjoint union of the point sets.
PermGroup direct_product(std::vector<PermGroup> const& factors);

// Image of the group acting on a union of orbits (points renumbered in the
// given order).
PermGroup restricted_action(PermGroup const& group, std::vector<Point> const& points);

}  // namespace perfect

#endif  // PERFECT_PERMGROUP_HPP_
