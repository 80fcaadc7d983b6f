#ifndef PERFECT_STRUCTURE_HPP_
#define PERFECT_STRUCTURE_HPP_

#include <cstdint>
#include <vector>

#include "perfect/table.hpp"

namespace perfect {

struct ConjugacyClass {
  Elem representative = 0;
  std::uint32_t element_order = 1;
  std::size_t centralizer_order = 1;
  std::vector<Elem> elements;
  std::size_t size() const noexcept { return elements.size(); }
};

// Classes are listed by their smallest element; the representative is that
// smallest element, so the identity class comes first.
struct ClassData {
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;

  // (element order, class size) of the class of x.
  std::pair<std::uint32_t, std::size_t> invariant(Elem x) const {
    auto const& c = classes[class_of[x]];
    return {c.element_order, c.size()};
  }
};

ClassData conjugacy_classes(GroupTable const& g);

struct NormalSubgroup {
  Subgroup sub;
  bool minimal = false;
};

// All normal subgroups, sorted by order (ties by element bitset), closed under
// joins. Throws BudgetExceeded when more than `cap` are found.
std::vector<NormalSubgroup> normal_subgroups(GroupTable const& g, ClassData const& cd,
                                             std::size_t cap = 20000);
// Minimal normal subgroups only; cheaper than the full lattice.
std::vector<Subgroup> minimal_normal_subgroups(GroupTable const& g, ClassData const& cd);

// G = N_0 > N_1 > ... > N_r = 1 with each step a chief factor.
std::vector<Subgroup> chief_series(GroupTable const& g, std::vector<NormalSubgroup> const& normals);

// Largest normal p-subgroup.
Subgroup p_core(GroupTable const& g, std::vector<NormalSubgroup> const& normals, unsigned p);

bool is_prime_power(std::uint64_t n, unsigned* p = nullptr, unsigned* a = nullptr);
bool is_elementary_abelian(GroupTable const& g, Subgroup const& h);
bool is_perfect(GroupTable const& g);
Subgroup center(GroupTable const& g);

}  // namespace perfect

#endif  // PERFECT_STRUCTURE_HPP_
