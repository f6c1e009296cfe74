#ifndef STABLEPERM_ERROR_HPP
#define STABLEPERM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stableperm {

// Root of every exception raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index or code outside its admissible interval.
class range_error : public error {
 public:
  using error::error;
};

// Operands disagree on alphabet size or word length.
class dimension_error : public error {
 public:
  using error::error;
};

// Requested object exceeds the dense-table envelope.
class capacity_error : public error {
 public:
  using error::error;
};

// Operation called on a permutation of the wrong word length.
class domain_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(std::size_t position, const std::string& what)
      : error("at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A FamilySpec hypothesis does not hold; clause() names it.
class validation_error : public error {
 public:
  explicit validation_error(std::string clause)
      : error(clause + " violated"), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

// Classifier and exact criterion disagree. Unreachable unless there is a bug.
class theorem_violation : public error {
 public:
  using error::error;
};

// The witness case analysis failed to cover a spec.
class consistency_error : public error {
 public:
  using error::error;
};

}  // namespace stableperm

#endif  // STABLEPERM_ERROR_HPP
