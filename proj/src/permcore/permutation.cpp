#include "permcore/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ht::perm {

Permutation::Permutation(Point degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point img : images) {
    if (img >= images.size() || seen[img])
      throw DomainError("image table is not a bijection");
    seen[img] = true;
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(Point degree, const CycleDecomposition& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (Point p : cyc) {
      if (p >= degree) throw DomainError("cycle point exceeds degree");
      if (used[p]) throw DomainError("cycles are not disjoint");
      used[p] = true;
    }
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i) images[cyc[i]] = cyc[i + 1];
    if (cyc.size() > 1) images[cyc.back()] = cyc.front();
  }
  return Permutation(std::move(images), Unchecked{});
}

namespace {

CycleDecomposition parse_cycle_text(std::string_view text) {
  CycleDecomposition cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<Point> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a point or ')' in cycle notation");
      Point p = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        p = p * 10 + static_cast<Point>(text[i] - '0');
        ++i;
      }
      cyc.push_back(p);
      skip_ws();
    }
    if (i == text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Permutation Permutation::parse_cycles(std::string_view text, Point degree) {
  return from_cycles(degree, parse_cycle_text(text));
}

Point Permutation::min_degree_of_cycles(std::string_view text) {
  Point max_seen = 0;
  bool any = false;
  for (const auto& cyc : parse_cycle_text(text))
    for (Point p : cyc) {
      max_seen = std::max(max_seen, p);
      any = true;
    }
  return any ? max_seen + 1 : 0;
}

bool Permutation::is_identity() const {
  for (Point x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Permutation::is_involution() const {
  bool moved = false;
  for (Point x = 0; x < degree(); ++x) {
    if (images_[x] == x) continue;
    moved = true;
    if (images_[images_[x]] != x) return false;
  }
  return moved;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point x = 0; x < degree(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv), Unchecked{});
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (const auto& cyc : cycle_decomposition())
    ord = std::lcm(ord, static_cast<std::uint64_t>(cyc.size()));
  return ord;
}

CycleDecomposition Permutation::cycle_decomposition() const {
  CycleDecomposition cycles;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cyc;
    Point p = start;
    do {
      seen[p] = true;
      cyc.push_back(p);
      p = images_[p];
    } while (p != start);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::string Permutation::cycle_string() const {
  auto cycles = cycle_decomposition();
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cyc : cycles) {
    out << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out << ' ';
      out << cyc[i];
    }
    out << ')';
  }
  return out.str();
}

Point Permutation::smallest_moved_point() const {
  for (Point x = 0; x < degree(); ++x)
    if (images_[x] != x) return x;
  return degree();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch in compose");
  std::vector<Point> images(a.degree());
  for (Point x = 0; x < a.degree(); ++x) images[x] = a(b(x));
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation evaluate_word(const std::vector<Permutation>& gens, const std::vector<int>& word) {
  if (gens.empty()) throw DomainError("evaluate_word requires at least one generator");
  Permutation result(gens.front().degree());
  for (int letter : word) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= gens.size())
      throw DomainError("word letter out of range");
    result = compose(result, gens[static_cast<std::size_t>(letter)]);
  }
  return result;
}

}  // namespace ht::perm
