#include "perfect/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace perfect {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("Permutation: images do not form a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::vector<Point>> cycles) {
  return from_cycles(degree, std::vector<std::vector<Point>>(cycles));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (auto const& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point a = c[i], b = c[(i + 1) % c.size()];
      if (a == 0 || b == 0 || a > degree || b > degree) {
        throw std::invalid_argument("Permutation: cycle point out of range");
      }
      img[a - 1] = b - 1;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_based(std::vector<Point> const& images) {
  std::vector<Point> img(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0) {
      throw std::invalid_argument("Permutation: 1-based image list contains 0");
    }
    img[i] = images[i] - 1;
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (Point i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (Point i = 0; i < images_.size(); ++i) r.images_[images_[i]] = i;
  return r;
}

Permutation Permutation::operator*(Permutation const& other) const {
  Permutation r;
  std::size_t n = std::max(degree(), other.degree());
  r.images_.resize(n);
  for (Point i = 0; i < n; ++i) {
    Point x = i < degree() ? images_[i] : i;
    r.images_[i] = x < other.degree() ? other.images_[x] : x;
  }
  return r;
}

Permutation& Permutation::operator*=(Permutation const& other) {
  *this = *this * other;
  return *this;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                                : static_cast<unsigned long long>(e);
  Permutation result(degree());
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Point Permutation::smallest_moved_point() const noexcept {
  for (Point i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return static_cast<Point>(images_.size());
}

Permutation Permutation::extended(std::size_t degree) const {
  Permutation r = *this;
  for (std::size_t i = r.images_.size(); i < degree; ++i) {
    r.images_.push_back(static_cast<Point>(i));
  }
  return r;
}

std::vector<Point> Permutation::one_based() const {
  std::vector<Point> r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r[i] = images_[i] + 1;
  return r;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) os << ',';
      os << j + 1;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation conjugate(Permutation const& x, Permutation const& g) {
  return g.inverse() * x * g;
}

}  // namespace perfect
