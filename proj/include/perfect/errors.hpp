#ifndef PERFECT_ERRORS_HPP_
#define PERFECT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace perfect {

// A configurable cap was exceeded. The caller may retry with a larger budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string key, std::string const& what)
      : std::runtime_error(what), key_(std::move(key)) {}
  std::string const& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// An internal consistency check failed; always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define PERFECT_CHECK(cond, msg)                                         \
  do {                                                                   \
    if (!(cond)) throw ::perfect::InvariantViolation(std::string(msg)); \
  } while (0)

}  // namespace perfect

#endif  // PERFECT_ERRORS_HPP_
