#ifndef PERFECT_PERM_HPP_
#define PERFECT_PERM_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace perfect {

using Point = std::uint32_t;

// A permutation of {0, ..., degree-1} acting on the right: x^(gh) = (x^g)^h.
// Serialized forms are 1-based image lists.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  // Builds from 1-based disjoint cycles, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::vector<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const& cycles);
  // Builds from a 1-based image list; throws std::invalid_argument if not a
  // bijection.
  static Permutation from_one_based(std::vector<Point> const& images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  // this then other
  Permutation operator*(Permutation const& other) const;
  Permutation& operator*=(Permutation const& other);
  Permutation pow(long long e) const;
  std::uint64_t order() const;
  // Smallest moved point, or degree() if identity.
  Point smallest_moved_point() const noexcept;
  // Same permutation on a larger point set (fixing the new points).
  Permutation extended(std::size_t degree) const;

  std::vector<Point> one_based() const;
  std::string to_cycle_string() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

// Conjugate g^-1 x g.
Permutation conjugate(Permutation const& x, Permutation const& g);

}  // namespace perfect

#endif  // PERFECT_PERM_HPP_
