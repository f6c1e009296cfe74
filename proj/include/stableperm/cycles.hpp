#ifndef STABLEPERM_CYCLES_HPP
#define STABLEPERM_CYCLES_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "multi_index.hpp"
#include "permutation.hpp"

namespace stableperm {

// A product of disjoint cycles over [n]^k. The empty product is the identity.
class CycleSpec {
 public:
  using Cycle = std::vector<MultiIndex>;

  CycleSpec(int n, int k, std::vector<Cycle> cycles) : n_(n), k_(k), cycles_(std::move(cycles)) {
    checked_degree(n_, k_);
    std::set<code_type> seen;
    for (const Cycle& c : cycles_) {
      if (c.size() < 2)
        throw range_error("cycle of length " + std::to_string(c.size()) + "; need at least 2");
      for (const MultiIndex& m : c) {
        if (m.alphabet() != n_ || m.length() != k_)
          throw dimension_error("multi-index " + to_string(m) + " has the wrong shape");
        if (!seen.insert(rank(m)).second)
          throw range_error("multi-index " + to_string(m) + " repeated; cycles must be disjoint");
      }
    }
  }

  int alphabet() const noexcept { return n_; }
  int length() const noexcept { return k_; }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }

 private:
  int n_;
  int k_;
  std::vector<Cycle> cycles_;
};

namespace detail {

class CycleParser {
 public:
  CycleParser(std::string_view text, int n, int k) : text_(text), n_(n), k_(k) {}

  CycleSpec parse() {
    std::vector<CycleSpec::Cycle> cycles;
    skip_ws();
    if (at_end())
      fail("expected '('");
    // "()" is the empty product.
    if (peek() == '(' && peek_after_ws(pos_ + 1) == ')') {
      expect('(');
      expect(')');
      skip_ws();
      if (!at_end())
        fail("unexpected input after identity '()'");
      return CycleSpec(n_, k_, {});
    }
    while (!at_end()) {
      cycles.push_back(cycle());
      skip_ws();
    }
    return CycleSpec(n_, k_, std::move(cycles));
  }

 private:
  CycleSpec::Cycle cycle() {
    const std::size_t start = pos_;
    expect('(');
    CycleSpec::Cycle c;
    std::set<code_type> local;
    for (;;) {
      const std::size_t at = pos_;
      MultiIndex m = tuple();
      if (!local.insert(rank(m)).second || !used_.insert(rank(m)).second)
        throw parse_error(at, "multi-index " + to_string(m) + " repeated; cycles must be disjoint");
      c.push_back(std::move(m));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    if (c.size() < 2)
      throw parse_error(start, "cycle of length " + std::to_string(c.size()) +
                                   "; need at least 2");
    return c;
  }

  MultiIndex tuple() {
    expect('(');
    std::vector<int> letters;
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      const long value = integer();
      if (value < 1 || value > n_)
        throw parse_error(at, "letter " + std::to_string(value) + " outside 1.." +
                                  std::to_string(n_));
      letters.push_back(static_cast<int>(value));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    if (static_cast<int>(letters.size()) != k_)
      fail("tuple has " + std::to_string(letters.size()) + " letters, expected " +
           std::to_string(k_));
    return MultiIndex(n_, std::move(letters));
  }

  long integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a positive integer");
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000)
        fail("integer too large");
      ++pos_;
    }
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  char peek_after_ws(std::size_t p) const {
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    return p < text_.size() ? text_[p] : '\0';
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw parse_error(pos_, what); }

  std::string_view text_;
  int n_;
  int k_;
  std::size_t pos_ = 0;
  std::set<code_type> used_;
};

}  // namespace detail

// Parses "((1,1),(1,2))((2,1),(2,2))". Whitespace is ignored; "()" is the identity.
inline CycleSpec parse_cycles(std::string_view text, int n, int k) {
  checked_degree(n, k);
  return detail::CycleParser(text, n, k).parse();
}

inline Permutation to_permutation(const CycleSpec& spec) {
  std::vector<code_type> image(checked_degree(spec.alphabet(), spec.length()));
  for (std::size_t i = 0; i < image.size(); ++i)
    image[i] = static_cast<code_type>(i);
  for (const auto& c : spec.cycles())
    for (std::size_t i = 0; i < c.size(); ++i)
      image[rank(c[i])] = rank(c[(i + 1) % c.size()]);
  return Permutation::from_image(spec.alphabet(), spec.length(), std::move(image));
}

inline Permutation parse_permutation(std::string_view text, int n, int k) {
  return to_permutation(parse_cycles(text, n, k));
}

// Canonical form: cycles ordered by smallest code, each starting at its
// smallest code, fixed points omitted. The identity is "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (code_type start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start)
      continue;
    out += '(';
    code_type c = start;
    do {
      if (c != start)
        out += ',';
      out += to_string(unrank(c, p.alphabet(), p.length()));
      done[c] = true;
      c = p(c);
    } while (c != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline std::string format_cycles(const CycleSpec& spec) {
  return format_cycles(to_permutation(spec));
}

// Cycle type as "1^a 2^b ...", ascending cycle length.
inline std::string cycle_type(const Permutation& p) {
  std::map<std::size_t, std::size_t> counts;
  std::vector<bool> done(p.degree(), false);
  for (code_type start = 0; start < p.degree(); ++start) {
    if (done[start])
      continue;
    std::size_t len = 0;
    for (code_type c = start; !done[c]; c = p(c)) {
      done[c] = true;
      ++len;
    }
    ++counts[len];
  }
  std::string out;
  for (auto [len, count] : counts) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(len) + '^' + std::to_string(count);
  }
  return out;
}

}  // namespace stableperm

#endif  // STABLEPERM_CYCLES_HPP
