#ifndef STABLEPERM_PERMUTATION_HPP
#define STABLEPERM_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "multi_index.hpp"

namespace stableperm {

// A bijection of [n]^k, stored as the dense table code -> image code.
//
// Values are immutable once built; every operation returns a new permutation.
class Permutation {
 public:
  static Permutation identity(int n, int k) {
    std::vector<code_type> image(checked_size(n, k));
    std::iota(image.begin(), image.end(), code_type{0});
    return Permutation(n, k, std::move(image));
  }

  // Throws range_error unless image is a bijection of {0, ..., n^k - 1}.
  static Permutation from_image(int n, int k, std::vector<code_type> image) {
    const std::size_t size = checked_size(n, k);
    if (image.size() != size)
      throw dimension_error("image table has " + std::to_string(image.size()) +
                            " entries, expected " + std::to_string(size));
    std::vector<bool> seen(size, false);
    for (code_type c : image) {
      if (c >= size)
        throw range_error("image code " + std::to_string(c) + " out of range");
      if (seen[c])
        throw range_error("image code " + std::to_string(c) + " repeated; not a bijection");
      seen[c] = true;
    }
    return Permutation(n, k, std::move(image));
  }

  int alphabet() const noexcept { return n_; }
  int length() const noexcept { return k_; }
  std::size_t degree() const noexcept { return image_.size(); }
  std::span<const code_type> image() const noexcept { return image_; }

  code_type operator()(code_type code) const { return image_[code]; }

  MultiIndex operator()(const MultiIndex& m) const {
    if (m.alphabet() != n_ || m.length() != k_)
      throw dimension_error("multi-index shape does not match permutation");
    return unrank(image_[rank(m)], n_, k_);
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != i)
        return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Permutation(int n, int k, std::vector<code_type> image)
      : n_(n), k_(k), image_(std::move(image)) {}

  static std::size_t checked_size(int n, int k) {
    if (k < 1)
      throw dimension_error("permutation length must be positive");
    return static_cast<std::size_t>(checked_degree(n, k));
  }

  friend Permutation compose(const Permutation& f, const Permutation& g);
  friend Permutation inverse(const Permutation& p);
  friend Permutation tensor(const Permutation& u, const Permutation& v);
  template <typename F>
  friend Permutation tabulate(int n, int k, F&& fn);

  int n_;
  int k_;
  std::vector<code_type> image_;
};

// (f o g)(x) = f(g(x)); g acts first.
inline Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.n_ != g.n_ || f.k_ != g.k_)
    throw dimension_error("compose: shapes differ");
  std::vector<code_type> out(g.image_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.image_[g.image_[i]];
  return Permutation(f.n_, f.k_, std::move(out));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<code_type> out(p.image_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[p.image_[i]] = static_cast<code_type>(i);
  return Permutation(p.n_, p.k_, std::move(out));
}

// (u (x) v)(alpha, beta) = (u(alpha), v(beta)).
inline Permutation tensor(const Permutation& u, const Permutation& v) {
  if (u.n_ != v.n_)
    throw dimension_error("tensor: alphabets differ");
  const std::size_t k = static_cast<std::size_t>(u.k_) + static_cast<std::size_t>(v.k_);
  checked_degree(u.n_, static_cast<int>(k));
  const std::size_t inner = v.image_.size();
  std::vector<code_type> out(u.image_.size() * inner);
  for (std::size_t a = 0; a < u.image_.size(); ++a) {
    const std::size_t base = static_cast<std::size_t>(u.image_[a]) * inner;
    for (std::size_t b = 0; b < inner; ++b)
      out[a * inner + b] = static_cast<code_type>(base + v.image_[b]);
  }
  return Permutation(u.n_, static_cast<int>(k), std::move(out));
}

// Builds a permutation from a code -> code function. The caller guarantees
// that fn is a bijection; nothing is checked.
template <typename F>
Permutation tabulate(int n, int k, F&& fn) {
  std::vector<code_type> out(Permutation::checked_size(n, k));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = fn(static_cast<code_type>(i));
  return Permutation(n, k, std::move(out));
}

// The action of 1^{(x) left} (x) w (x) 1^{(x) right} on codes of
// [n]^{left + w.length() + right}, evaluated without building the table.
class Embedded {
 public:
  Embedded(const Permutation& w, int right)
      : w_(&w), low_(checked_degree(w.alphabet(), right)), mid_(w.degree()) {}

  code_type operator()(code_type code) const {
    const std::uint64_t lo = code % low_;
    const std::uint64_t rest = code / low_;
    const std::uint64_t mid = rest % mid_;
    const std::uint64_t hi = rest / mid_;
    return static_cast<code_type>(
        (hi * mid_ + (*w_)(static_cast<code_type>(mid))) * low_ + lo);
  }

 private:
  const Permutation* w_;
  std::uint64_t low_;
  std::uint64_t mid_;
};

// 1^{(x) left} (x) w (x) 1^{(x) right} as a table.
inline Permutation pad(const Permutation& w, int left, int right) {
  const int k = left + w.length() + right;
  checked_degree(w.alphabet(), k);
  const Embedded e(w, right);
  return tabulate(w.alphabet(), k, e);
}

}  // namespace stableperm

#endif  // STABLEPERM_PERMUTATION_HPP
