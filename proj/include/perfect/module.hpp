#ifndef PERFECT_MODULE_HPP_
#define PERFECT_MODULE_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "perfect/fp.hpp"
#include "perfect/poly.hpp"
#include "perfect/table.hpp"

namespace perfect {

// A group action on F_p^dim by one invertible matrix per group generator,
// acting on row vectors from the right.
struct FpModule {
  unsigned p = 2;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  std::size_t num_generators() const noexcept { return action.size(); }
};

FpModule trivial_module(unsigned p, std::size_t num_generators, std::size_t dim = 1);
FpModule permutation_module(unsigned p, std::vector<std::vector<Point>> const& generator_action,
                            std::size_t degree);
FpModule tensor_product(FpModule const& a, FpModule const& b);
FpModule dual_module(FpModule const& m);
// Action twisted by new generator matrices, e.g. images under an automorphism.
bool is_valid_module(FpModule const& m, GroupTable const& g);
// Matrix of an arbitrary group element, through its word in the table letters.
Matrix element_matrix(FpModule const& m, GroupTable const& g, Elem x);
// Matrices of all letters (generator, inverse, ...) in table letter order.
std::vector<Matrix> letter_matrices(FpModule const& m);

// A fixed recipe for an element of the group algebra: products of pool
// entries appended to the generators, then a linear combination.
struct AlgebraWord {
  std::vector<std::pair<std::size_t, std::size_t>> products;
  std::vector<std::pair<std::size_t, Scalar>> combination;
  Matrix evaluate(std::vector<Matrix> const& gens) const;
};

// Spinning: the list of (basis index, generator) steps that produced each
// new basis vector, so the same walk can be replayed in another module.
struct SpinResult {
  Echelon span;
  std::vector<Vector> basis;  // in discovery order
  std::vector<std::pair<std::size_t, std::size_t>> recipe;
};
SpinResult spin(Vector const& v, std::vector<Matrix> const& gens);
// Replays a recipe from w; the result has recipe.size() + 1 rows.
Matrix replay_spin(Vector const& w, std::vector<Matrix> const& gens,
                   std::vector<std::pair<std::size_t, std::size_t>> const& recipe);

// Certificate of irreducibility from the Holt-Rees test.
struct IrreducibleCertificate {
  AlgebraWord word;
  Poly factor;
  std::size_t nullity = 0;
  Vector kernel_vector;
  std::vector<std::pair<std::size_t, std::size_t>> recipe;
  Matrix standard_basis;                 // replay of the recipe from kernel_vector
  std::vector<Matrix> standard_action;   // action in that basis
};

struct MeatAxeResult {
  bool irreducible = false;
  Matrix submodule;  // proper nonzero submodule basis, when reducible
  IrreducibleCertificate certificate;
};

MeatAxeResult meataxe(FpModule const& m, std::uint64_t seed = 0x5eed);

struct IrreducibleModule {
  FpModule module;
  IrreducibleCertificate certificate;
};

// Certifies irreducibility (throws std::invalid_argument if reducible).
IrreducibleModule certify_irreducible(FpModule const& m);

// Composition factors with multiplicities, in order of first appearance.
std::vector<std::pair<IrreducibleModule, std::size_t>> chop(FpModule const& m);

// Induced actions on a submodule (rows of `basis`, reduced echelon form
// expected) and on the corresponding quotient.
FpModule submodule_action(FpModule const& m, Matrix const& basis);
FpModule quotient_action(FpModule const& m, Matrix const& basis);

// Basis of Hom_G(M1, M2) as matrices X with A1 X = X A2.
std::vector<Matrix> intertwiner_space(FpModule const& a, FpModule const& b);

// Isomorphism as an intertwiner N (A1 N = N A2). The first form uses the
// standard-basis comparison for irreducible modules.
std::optional<Matrix> module_isomorphism(IrreducibleModule const& a, FpModule const& b);
std::optional<Matrix> module_isomorphism(FpModule const& a, FpModule const& b);

struct ModuleAutomorphisms {
  std::uint64_t order = 1;
  std::size_t field_degree = 1;   // End(M) = F_{p^e}
  std::vector<Matrix> generators;  // empty when the group is trivial
};
ModuleAutomorphisms module_automorphisms(IrreducibleModule const& m);

// All irreducible F_p modules of the group (with O_p in the kernel), up to
// isomorphism, with dimension <= dim_cap. Closure aborts with BudgetExceeded
// if an intermediate tensor product exceeds closure_cap.
std::vector<IrreducibleModule> irreducible_modules(GroupTable const& g, unsigned p,
                                                   std::size_t dim_cap,
                                                   std::size_t closure_cap = 200);

// Number of conjugacy classes of p-regular elements of g / O_p(g).
std::size_t count_p_regular_classes(GroupTable const& g, unsigned p);

}  // namespace perfect

#endif  // PERFECT_MODULE_HPP_
