#ifndef PERFECT_ISO_HPP_
#define PERFECT_ISO_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "perfect/structure.hpp"
#include "perfect/table.hpp"

namespace perfect {

// Homomorphism between tables given as the full element map.
struct ElementMap {
  std::vector<Elem> image;
  Elem operator()(Elem x) const { return image[x]; }
};

ElementMap compose(ElementMap const& first, ElementMap const& second);
ElementMap inverse_map(ElementMap const& a);
ElementMap inner_automorphism(GroupTable const& g, Elem c);  // x -> c^-1 x c

// A small generating tuple of g whose first entry is a class representative,
// chosen to keep the image search narrow.
std::vector<Elem> generating_tuple(GroupTable const& g, ClassData const& cd);

// Precomputed data for mapping a group by images of its generating tuple.
class TupleSearch {
 public:
  TupleSearch(GroupTable const& g, ClassData const& cd);

  GroupTable const& group() const { return g_; }
  std::vector<Elem> const& tuple() const { return tuple_; }

  // Extends tuple images to a homomorphism into h; nullopt if the images do
  // not define one. With `require_injective` the map must be a bijection.
  std::optional<ElementMap> extend(GroupTable const& h, std::vector<Elem> const& images,
                                   bool require_injective) const;

  // Enumerates homomorphisms g -> h that are bijective, with the first tuple
  // element sent into `first_candidates`. The callback returns false to stop.
  template <class Fn>
  void enumerate(GroupTable const& h, ClassData const& ch, std::vector<Elem> const& first_candidates,
                 Fn&& fn, std::uint64_t node_budget) const;

 private:
  bool pair_filters_ok(GroupTable const& h, std::vector<Elem> const& im, std::size_t upto) const;
  void run(GroupTable const& h, ClassData const& ch, std::vector<Elem> const& first_candidates,
           std::function<bool(std::vector<Elem> const&, ElementMap const&)> const& fn,
           std::uint64_t node_budget) const;

  GroupTable const& g_;
  ClassData const& cd_;
  std::vector<Elem> tuple_;
  GroupTable tuple_table_;
  std::vector<Elem> embedding_;
  // order of t_i t_j and t_i t_j^-1 for i < j
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pair_orders_;
};

std::optional<ElementMap> find_isomorphism(GroupTable const& g, ClassData const& cg,
                                           GroupTable const& h, ClassData const& ch,
                                           std::uint64_t node_budget = 50000000);

struct AutomorphismGroup {
  std::uint64_t order = 1;
  std::uint64_t inner_order = 1;
  // Coset representatives of Inn in Aut; the identity comes first.
  std::vector<ElementMap> outer;
  std::size_t out_order() const noexcept { return outer.size(); }
};

AutomorphismGroup automorphism_group(GroupTable const& g, ClassData const& cd,
                                     std::uint64_t node_budget = 50000000);

// Aut(G) acting on the union of the classes that contain tuple entries
// (a generating set, hence faithful). Points are those elements, sorted.
PermGroup automorphism_permutation_group(GroupTable const& g, ClassData const& cd,
                                         AutomorphismGroup const& aut,
                                         std::vector<Elem>* points = nullptr);

// ---------------------------------------------------------------------------

template <class Fn>
void TupleSearch::enumerate(GroupTable const& h, ClassData const& ch,
                            std::vector<Elem> const& first_candidates, Fn&& fn,
                            std::uint64_t node_budget) const {
  run(h, ch, first_candidates,
      [&fn](std::vector<Elem> const& im, ElementMap const& m) { return fn(im, m); }, node_budget);
}

}  // namespace perfect

#endif  // PERFECT_ISO_HPP_
