#include "permcore/intersect.hpp"

#include <algorithm>
#include <optional>

namespace ht::perm {

namespace {

// True iff g is the full direct product of symmetric groups on its orbits,
// i.e. |g| equals the product of the orbit size factorials.
bool is_full_young(const PermGroup& g, const std::vector<std::vector<Point>>& orbits) {
  std::uint64_t expected = 1;
  for (const auto& orb : orbits) {
    if (orb.size() > 20) return false;
    std::uint64_t cells = factorial(orb.size());
    if (expected > UINT64_MAX / cells) return false;
    expected *= cells;
  }
  return g.order() == expected;
}

// When both groups are full Young products, the intersection is the Young
// product over the common refinement of the two orbit partitions.
std::optional<PermGroup> young_intersection(const PermGroup& a, const PermGroup& b) {
  auto orbits_a = a.orbits();
  auto orbits_b = b.orbits();
  if (!is_full_young(a, orbits_a) || !is_full_young(b, orbits_b)) return std::nullopt;

  Point n = a.degree();
  std::vector<std::uint32_t> cell_a(n), cell_b(n);
  for (std::uint32_t i = 0; i < orbits_a.size(); ++i)
    for (Point p : orbits_a[i]) cell_a[p] = i;
  for (std::uint32_t i = 0; i < orbits_b.size(); ++i)
    for (Point p : orbits_b[i]) cell_b[p] = i;

  std::vector<Permutation> gens;
  for (Point p = 0; p < n; ++p)
    for (Point q = p + 1; q < n; ++q)
      if (cell_a[p] == cell_a[q] && cell_b[p] == cell_b[q]) {
        // One transposition joining p to the least later point of its cell
        // suffices; adjacent-in-cell pairs generate the cell's symmetric group.
        gens.push_back(Permutation::from_cycles(n, {{p, q}}));
        break;
      }
  return PermGroup(n, std::move(gens));
}

PermGroup enumerate_intersection(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> gens;
  Chain k_chain = Chain::build(a.degree(), {});
  small.for_each_element([&](const Permutation& g) {
    if (g.is_identity() || !large.contains(g) || k_chain.contains(g)) return true;
    gens.push_back(g);
    k_chain = Chain::build(a.degree(), gens);
    return k_chain.order() != small.order();
  });
  return PermGroup(a.degree(), std::move(gens));
}

// Synchronized depth-first descent over both stabilizer chains. Start
// positions are processed from the deepest common base upward so that the
// partial result K always contains the full intersection stabilizing all
// points below the current start, which drives the orbit pruning.
class BacktrackSearch {
public:
  BacktrackSearch(const PermGroup& a, const PermGroup& b)
      : n_(a.degree()), ca_(a.chain()), cb_(b.chain()), k_chain_(Chain::build(n_, {})) {}

  PermGroup run() {
    std::vector<Point> starts;
    for (const ChainLevel& la : ca_.levels())
      for (const ChainLevel& lb : cb_.levels())
        if (la.base == lb.base) starts.push_back(la.base);
    std::sort(starts.rbegin(), starts.rend());
    for (Point s : starts) {
      start_ = s;
      dfs(s, Permutation(n_), Permutation(n_), level_at(ca_, s), level_at(cb_, s));
    }
    return PermGroup(n_, std::move(found_));
  }

private:
  Point n_;
  const Chain& ca_;
  const Chain& cb_;
  Chain k_chain_;
  std::vector<Permutation> found_;
  Point start_ = 0;

  static std::size_t level_at(const Chain& c, Point pos) {
    std::size_t l = 0;
    while (l < c.levels().size() && c.levels()[l].base < pos) ++l;
    return l;
  }

  // Points already reachable from `start_` inside the stabilizer of all
  // points below `start_` in the group found so far.
  bool pruned_by_known(Point v) const {
    std::size_t l = level_at(k_chain_, start_);
    if (l >= k_chain_.levels().size() || k_chain_.levels()[l].base != start_) return false;
    return k_chain_.levels()[l].in_orbit(v);
  }

  void record(const Permutation& g) {
    if (k_chain_.contains(g)) return;
    found_.push_back(g);
    k_chain_ = Chain::build(n_, found_);
  }

  void dfs(Point k, const Permutation& cur_a, const Permutation& cur_b, std::size_t lvl_a,
           std::size_t lvl_b) {
    if (k == n_) {
      record(cur_a);
      return;
    }
    bool base_a = lvl_a < ca_.levels().size() && ca_.levels()[lvl_a].base == k;
    bool base_b = lvl_b < cb_.levels().size() && cb_.levels()[lvl_b].base == k;

    auto descend = [&](Point v) {
      if (k == start_ && (v == k || pruned_by_known(v))) return;
      Permutation na = cur_a;
      std::size_t nla = lvl_a;
      if (base_a) {
        Point delta = cur_a.inverse()(v);
        if (!ca_.levels()[lvl_a].in_orbit(delta)) return;
        na = compose(cur_a, ca_.levels()[lvl_a].rep(delta));
        nla = lvl_a + 1;
      } else if (cur_a(k) != v) {
        return;
      }
      Permutation nb = cur_b;
      std::size_t nlb = lvl_b;
      if (base_b) {
        Point delta = cur_b.inverse()(v);
        if (!cb_.levels()[lvl_b].in_orbit(delta)) return;
        nb = compose(cur_b, cb_.levels()[lvl_b].rep(delta));
        nlb = lvl_b + 1;
      } else if (cur_b(k) != v) {
        return;
      }
      dfs(k + 1, na, nb, nla, nlb);
    };

    if (base_a) {
      for (Point delta : ca_.levels()[lvl_a].orbit) descend(cur_a(delta));
    } else if (base_b) {
      for (Point delta : cb_.levels()[lvl_b].orbit) descend(cur_b(delta));
    } else {
      descend(cur_a(k));
    }
  }
};

}  // namespace

PermGroup intersection(const PermGroup& a, const PermGroup& b, const IntersectOptions& opts) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch in intersection");
  switch (opts.strategy) {
    case IntersectStrategy::Enumerate:
      return enumerate_intersection(a, b);
    case IntersectStrategy::Backtrack:
      return BacktrackSearch(a, b).run();
    case IntersectStrategy::Auto:
      break;
  }
  if (auto young = young_intersection(a, b)) return *std::move(young);
  if (std::min(a.order(), b.order()) <= opts.enumerate_threshold)
    return enumerate_intersection(a, b);
  return BacktrackSearch(a, b).run();
}

}  // namespace ht::perm
