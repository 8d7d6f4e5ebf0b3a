#include "permcore/permgroup.hpp"

#include <algorithm>
#include <deque>

namespace ht::perm {

std::uint64_t factorial(std::uint64_t n) {
  if (n > 20) throw DomainError("factorial overflow past 20!");
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

void Chain::recompute_orbit(std::size_t level) {
  // The level group is generated by this level's stored generators together
  // with every deeper level's (all of which fix this level's base or beyond).
  ChainLevel& L = levels_[level];
  L.orbit.clear();
  L.transversal.clear();
  L.orbit_pos.assign(degree_, -1);
  L.orbit.push_back(L.base);
  L.transversal.emplace_back(degree_);
  L.orbit_pos[L.base] = 0;
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    Point delta = L.orbit[head];
    for (std::size_t l = level; l < levels_.size(); ++l)
      for (const Permutation& g : levels_[l].gens) {
        Point gamma = g(delta);
        if (L.orbit_pos[gamma] < 0) {
          L.orbit_pos[gamma] = static_cast<std::int32_t>(L.orbit.size());
          L.orbit.push_back(gamma);
          L.transversal.push_back(compose(g, L.transversal[head]));
        }
      }
  }
}

std::pair<Permutation, std::size_t> Chain::sift_from(const Permutation& p, std::size_t start) const {
  Permutation r = p;
  for (std::size_t l = start; l < levels_.size(); ++l) {
    Point delta = r(levels_[l].base);
    if (delta == levels_[l].base) continue;
    if (!levels_[l].in_orbit(delta)) return {std::move(r), l};
    r = compose(levels_[l].rep(delta).inverse(), r);
  }
  return {std::move(r), levels_.size()};
}

std::pair<Permutation, std::size_t> Chain::sift(const Permutation& p) const {
  return sift_from(p, 0);
}

Chain Chain::build(Point degree, const std::vector<Permutation>& gens) {
  Chain chain;
  chain.degree_ = degree;

  // Inserts a strong generator at the unique level compatible with the
  // ascending-base invariant: every generator of a level moves no point
  // below that level's base. When the new generator moves a point below an
  // existing base, that level is rebased and deeper levels are absorbed into
  // it; the completion loop rebuilds them.
  auto insert_strong_generator = [&chain](Permutation r) -> std::size_t {
    Point p = r.smallest_moved_point();
    std::size_t j = 0;
    while (j < chain.levels_.size() && chain.levels_[j].base < p) ++j;
    if (j < chain.levels_.size() && chain.levels_[j].base == p) {
      chain.levels_[j].gens.push_back(std::move(r));
    } else {
      ChainLevel fresh;
      fresh.base = p;
      for (std::size_t l = j; l < chain.levels_.size(); ++l)
        for (Permutation& g : chain.levels_[l].gens) fresh.gens.push_back(std::move(g));
      fresh.gens.push_back(std::move(r));
      chain.levels_.resize(j);
      chain.levels_.push_back(std::move(fresh));
    }
    chain.recompute_orbit(j);
    return j;
  };

  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
    if (g.is_identity()) continue;
    auto [r, stop] = chain.sift_from(g, 0);
    (void)stop;
    if (!r.is_identity()) insert_strong_generator(std::move(r));
  }
  if (chain.levels_.empty()) return chain;

  // Verify every Schreier generator sifts to the identity, deepest level
  // first; a failed sift adds the residue as a strong generator and resumes
  // from the affected level. Orbits are refreshed on every visit because an
  // insertion below can enlarge the generating set of shallower levels.
  std::size_t i = chain.levels_.size() - 1;
  while (true) {
    chain.recompute_orbit(i);
    bool added = false;
    for (std::size_t oi = 0; oi < chain.levels_[i].orbit.size() && !added; ++oi) {
      for (std::size_t l = i; l < chain.levels_.size() && !added; ++l) {
        for (std::size_t gi = 0; gi < chain.levels_[l].gens.size() && !added; ++gi) {
          Point delta = chain.levels_[i].orbit[oi];
          const Permutation& g = chain.levels_[l].gens[gi];
          Point gamma = g(delta);
          Permutation s = compose(chain.levels_[i].rep(gamma).inverse(),
                                  compose(g, chain.levels_[i].transversal[oi]));
          if (s.is_identity()) continue;
          auto [r, stop] = chain.sift_from(s, i + 1);
          (void)stop;
          if (r.is_identity()) continue;
          i = insert_strong_generator(std::move(r));
          added = true;
        }
      }
    }
    if (added) continue;
    if (i == 0) break;
    --i;
  }
  return chain;
}

std::uint64_t Chain::order() const {
  std::uint64_t result = 1;
  for (const ChainLevel& L : levels_) {
    std::uint64_t next;
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(L.orbit.size()), &next))
      throw DomainError("group order overflows 64 bits");
    result = next;
  }
  return result;
}

bool Chain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [r, stop] = sift_from(p, 0);
  (void)stop;
  return r.is_identity();
}

void Chain::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
  // Depth-first product over transversals; element = u_0 * u_1 * ... with the
  // deepest factor applied first.
  struct Walker {
    const Chain& chain;
    const std::function<bool(const Permutation&)>& fn;
    bool walk(std::size_t level, const Permutation& prefix) {
      if (level == chain.levels_.size()) return fn(prefix);
      for (const Permutation& t : chain.levels_[level].transversal)
        if (!walk(level + 1, compose(prefix, t))) return false;
      return true;
    }
  };
  Walker w{*this, fn};
  w.walk(0, Permutation(degree_));
}

std::vector<Point> Chain::min_coset_images(const Permutation& x) const {
  return min_coset_element(x).images();
}

Permutation Chain::min_coset_element(const Permutation& x) const {
  // Greedy level descent; at each base the minimizing transversal point is
  // unique because the current map is injective, and points between bases are
  // fixed by all deeper level groups.
  Permutation cur = x;
  std::size_t lvl = 0;
  for (Point k = 0; k < degree_; ++k) {
    if (lvl < levels_.size() && levels_[lvl].base == k) {
      const ChainLevel& L = levels_[lvl];
      std::size_t best = 0;
      Point best_val = cur(L.orbit[0]);
      for (std::size_t oi = 1; oi < L.orbit.size(); ++oi) {
        Point val = cur(L.orbit[oi]);
        if (val < best_val) {
          best_val = val;
          best = oi;
        }
      }
      cur = compose(cur, L.transversal[best]);
      ++lvl;
    }
  }
  return cur;
}

std::vector<std::vector<Point>> orbit_partition(Point degree, const std::vector<Permutation>& gens) {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree, false);
  for (Point start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orb{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const Permutation& g : gens) {
        Point img = g(orb[head]);
        if (!seen[img]) {
          seen[img] = true;
          orb.push_back(img);
        }
      }
    std::sort(orb.begin(), orb.end());
    result.push_back(std::move(orb));
  }
  return result;
}

PermGroup::PermGroup(Point degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), chain_(Chain::build(degree, gens_)) {}

PermGroup PermGroup::symmetric(Point degree) {
  std::vector<Permutation> gens;
  for (Point i = 0; i + 1 < degree; ++i)
    gens.push_back(Permutation::from_cycles(degree, {{i, i + 1}}));
  return PermGroup(degree, std::move(gens));
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const Permutation& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::is_transitive() const {
  return orbits().size() <= 1;
}

}  // namespace ht::perm
