#ifndef STABLEPERM_MULTI_INDEX_HPP
#define STABLEPERM_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace stableperm {

using code_type = std::uint32_t;

// Largest n^k a dense image table may have.
inline constexpr std::uint64_t max_degree = 10'000'000;

// n^k, or capacity_error when it exceeds max_degree.
inline std::uint64_t checked_degree(int n, int k) {
  if (n < 1 || k < 0)
    throw dimension_error("alphabet must be positive and length non-negative");
  std::uint64_t d = 1;
  for (int i = 0; i < k; ++i) {
    d *= static_cast<std::uint64_t>(n);
    if (d > max_degree)
      throw capacity_error("degree " + std::to_string(n) + "^" + std::to_string(k) +
                           " exceeds the supported envelope of " +
                           std::to_string(max_degree));
  }
  return d;
}

// A word of length k over the alphabet [n] = {1, ..., n}. Letters are 1-based.
class MultiIndex {
 public:
  MultiIndex(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    if (n_ < 1)
      throw dimension_error("alphabet size must be positive");
    if (letters_.empty())
      throw dimension_error("multi-index must have at least one letter");
    for (int l : letters_)
      if (l < 1 || l > n_)
        throw range_error("letter " + std::to_string(l) + " outside 1.." + std::to_string(n_));
  }

  MultiIndex(int n, std::initializer_list<int> letters)
      : MultiIndex(n, std::vector<int>(letters)) {}

  int alphabet() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  std::span<const int> letters() const noexcept { return letters_; }
  int operator[](std::size_t i) const { return letters_[i]; }

  // Concatenation (alpha, beta).
  friend MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
    if (a.n_ != b.n_)
      throw dimension_error("cannot concatenate words over different alphabets");
    std::vector<int> out(a.letters_);
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return MultiIndex(a.n_, std::move(out));
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.n_ <=> b.n_; c != 0)
      return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  int n_;
  std::vector<int> letters_;
};

// "(l1,l2,...,lk)"
inline std::string to_string(const MultiIndex& m) {
  std::string s = "(";
  for (int i = 0; i < m.length(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(m[i]);
  }
  s += ')';
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
  return os << to_string(m);
}

// Lexicographic code: sum over j of (letter_j - 1) * n^(k-j).
inline code_type rank(const MultiIndex& m) {
  std::uint64_t code = 0;
  for (int l : m.letters())
    code = code * static_cast<std::uint64_t>(m.alphabet()) + static_cast<std::uint64_t>(l - 1);
  return static_cast<code_type>(code);
}

inline MultiIndex unrank(std::uint64_t code, int n, int k) {
  if (k < 1)
    throw dimension_error("multi-index length must be positive");
  const std::uint64_t degree = checked_degree(n, k);
  if (code >= degree)
    throw range_error("code " + std::to_string(code) + " outside 0.." +
                      std::to_string(degree - 1));
  std::vector<int> letters(static_cast<std::size_t>(k));
  for (int j = k - 1; j >= 0; --j) {
    letters[static_cast<std::size_t>(j)] = static_cast<int>(code % static_cast<std::uint64_t>(n)) + 1;
    code /= static_cast<std::uint64_t>(n);
  }
  return MultiIndex(n, std::move(letters));
}

}  // namespace stableperm

#endif  // STABLEPERM_MULTI_INDEX_HPP
