#ifndef PERFECT_COHOMOLOGY_HPP_
#define PERFECT_COHOMOLOGY_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "perfect/fp.hpp"
#include "perfect/fpgroup.hpp"
#include "perfect/module.hpp"
#include "perfect/rws.hpp"

namespace perfect {

// Matrix of every group element in the module, indexed by table element.
std::vector<Matrix> element_matrices(GroupTable const& g, FpModule const& m);

// Sum of tail(rule) * A(suffix) over the applications; `tails` holds one
// block of `dim` coordinates per rule.
Vector collect_tails(std::vector<RuleApplication> const& apps, Vector const& tails,
                     std::vector<Matrix> const& values, unsigned p, std::size_t dim);

// Homogeneous linear system over F_p kept in sparse reduced echelon form;
// each row's pivot is its largest variable.
class SparseSystem {
 public:
  using Row = std::vector<std::pair<std::uint32_t, Scalar>>;  // sorted by variable

  SparseSystem(unsigned p, std::size_t num_vars);

  unsigned prime() const noexcept { return p_; }
  std::size_t num_vars() const noexcept { return pivot_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  // Adds a row (entries in any order, duplicates summed); true if the rank grew.
  bool add(Row row);
  bool satisfied_by(Vector const& x) const;
  std::vector<Vector> nullspace() const;

 private:
  void normalize(Row& row) const;
  unsigned p_;
  std::size_t rank_ = 0;
  std::vector<std::int64_t> pivot_;  // row index per variable, -1 if free
  std::vector<Row> rows_;
  Vector acc_;
  std::vector<std::uint32_t> touched_;
};

struct CohomologyGroup {
  unsigned p = 2;
  std::size_t module_dim = 0;
  std::size_t num_rules = 0;
  std::vector<Vector> z2_basis;
  std::vector<Vector> b2_basis;
  std::vector<Vector> h2_basis;  // complement of B2 in Z2
  std::shared_ptr<SparseSystem const> equations;

  std::size_t z_dim() const noexcept { return z2_basis.size(); }
  std::size_t b_dim() const noexcept { return b2_basis.size(); }
  std::size_t h_dim() const noexcept { return h2_basis.size(); }
  std::size_t num_vars() const noexcept { return num_rules * module_dim; }

  bool is_cocycle(Vector const& z) const { return equations->satisfied_by(z); }
  // Coordinates of the class of z with respect to h2_basis.
  Vector h2_coordinates(Vector const& z) const;
  Vector cocycle(Vector const& coordinates) const;

  std::shared_ptr<Echelon const> solver;  // rows [b2 | h2] augmented with identity
};

SparseSystem cocycle_equations(RewritingSystem const& r, FpModule const& m);
std::vector<Vector> two_cocycle_space(RewritingSystem const& r, FpModule const& m);
std::vector<Vector> two_coboundaries(RewritingSystem const& r, FpModule const& m);
CohomologyGroup h2(RewritingSystem const& r, FpModule const& m);

// Presentation of the extension: rewriting-system letters, then one generator
// per module basis vector. Throws std::invalid_argument unless z is a cocycle.
FpPresentation extension(RewritingSystem const& r, FpModule const& m, CohomologyGroup const& h,
                         Vector const& z);
// Same relators without the cocycle check.
FpPresentation extension_presentation(RewritingSystem const& r, FpModule const& m, Vector const& z);

}  // namespace perfect

#endif  // PERFECT_COHOMOLOGY_HPP_
