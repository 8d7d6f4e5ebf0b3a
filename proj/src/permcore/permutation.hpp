#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ht::perm {

using Point = std::uint32_t;

// Nontrivial cycles only, each cycle rotated so its least point comes first,
// cycles sorted by least point.
using CycleDecomposition = std::vector<std::vector<Point>>;

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Permutation of {0, ..., degree-1} stored as an image table. Immutable after
// construction, so instances may be shared freely across threads.
class Permutation {
public:
  explicit Permutation(Point degree);  // identity

  // Validates that `images` is a bijection on {0, ..., n-1}.
  static Permutation from_images(std::vector<Point> images);
  static Permutation from_cycles(Point degree, const CycleDecomposition& cycles);
  // Accepts cycle notation such as "(0 1)(2 3)", "(0 1 2)", or "()" for the
  // identity. Commas are allowed as separators inside cycles.
  static Permutation parse_cycles(std::string_view text, Point degree);
  // Least degree that can hold `text`, i.e. 1 + the largest point mentioned
  // (0 when no point is mentioned).
  static Point min_degree_of_cycles(std::string_view text);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  // True iff the order is exactly 2.
  bool is_involution() const;
  Permutation inverse() const;
  // Least common multiple of the cycle lengths.
  std::uint64_t order() const;
  CycleDecomposition cycle_decomposition() const;
  std::string cycle_string() const;  // "()" for the identity
  Point smallest_moved_point() const;  // degree() when identity

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  std::vector<Point> images_;

  friend Permutation compose(const Permutation& a, const Permutation& b);
};

// compose(a, b) applies b first, then a. Throws DomainError on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

// Evaluates gens[w[0]] * gens[w[1]] * ... under the convention above, i.e. the
// last letter of the word acts first.
Permutation evaluate_word(const std::vector<Permutation>& gens, const std::vector<int>& word);

}  // namespace ht::perm
