#include "cosetgeom/cosetgeom.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ht::geom {

Bits Bits::all(std::size_t n) {
  Bits b(n);
  for (auto& w : b.w_) w = ~std::uint64_t{0};
  if (n & 63) b.w_.back() = (std::uint64_t{1} << (n & 63)) - 1;
  return b;
}

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bits::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

Bits& Bits::operator&=(const Bits& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bits& Bits::operator|=(const Bits& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

CosetSpace::CosetSpace(const PermGroup& ambient, PermGroup subgroup, CosetSide side,
                       std::size_t limit)
    : sub_(std::move(subgroup)), side_(side) {
  if (sub_.degree() != ambient.degree()) throw GeometryError("coset space degree mismatch");
  const auto& gens = ambient.generators();
  auto push = [&](const Permutation& x, std::uint32_t par, std::uint32_t v) {
    auto key = key_of(x);
    auto [it, inserted] = index_.emplace(std::move(key), reps_.size());
    if (!inserted) return;
    if (reps_.size() >= limit) throw GeometryError("coset count exceeds limit");
    Permutation rep = side_ == CosetSide::Right
                          ? sub_.chain().min_coset_element(x.inverse()).inverse()
                          : sub_.chain().min_coset_element(x);
    reps_.push_back(std::move(rep));
    parent_.push_back(par);
    via_.push_back(v);
  };
  push(Permutation(sub_.degree()), 0, 0);
  for (std::size_t i = 0; i < reps_.size(); ++i)
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Permutation next = side_ == CosetSide::Right ? perm::compose(reps_[i], gens[gi])
                                                   : perm::compose(gens[gi], reps_[i]);
      push(next, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(gi));
    }
}

std::vector<Point> CosetSpace::key_of(const Permutation& x) const {
  return side_ == CosetSide::Right ? sub_.chain().min_coset_images(x.inverse())
                                   : sub_.chain().min_coset_images(x);
}

std::size_t CosetSpace::index_of(const Permutation& x) const {
  auto it = index_.find(key_of(x));
  if (it == index_.end()) throw std::logic_error("element outside the enumerated cosets");
  return it->second;
}

std::size_t CosetSpace::act(std::size_t i, const Permutation& g) const {
  Permutation next = side_ == CosetSide::Right ? perm::compose(reps_[i], g)
                                               : perm::compose(g, reps_[i]);
  return index_of(next);
}

Bits CosetSpace::identity_orbit(const std::vector<Permutation>& gens) const {
  Bits seen(size());
  seen.set(0);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      std::size_t d = act(c, g);
      if (!seen.test(d)) {
        seen.set(d);
        stack.push_back(d);
      }
    }
  }
  return seen;
}

nlohmann::json flag_to_json(const Flag& flag) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& el : flag) arr.push_back({{"type", el.type}, {"coset", el.coset}});
  return arr;
}

struct CosetGeometry::RowCache {
  std::mutex mutex;
  std::map<std::pair<int, int>, std::vector<Bits>> rows;
  std::map<std::pair<int, int>, Bits> base_orbits;
  std::map<std::pair<int, std::size_t>, std::vector<std::uint32_t>> actions;
};

CosetGeometry::CosetGeometry(CosetGeometry&&) noexcept = default;
CosetGeometry& CosetGeometry::operator=(CosetGeometry&&) noexcept = default;
CosetGeometry::~CosetGeometry() = default;

CosetGeometry::CosetGeometry(PermGroup group, std::vector<PermGroup> subgroups,
                             std::size_t total_coset_limit)
    : group_(std::move(group)), cache_(std::make_unique<RowCache>()) {
  if (subgroups.empty()) throw GeometryError("a geometry needs at least one type");
  std::size_t total = 0;
  for (auto& s : subgroups) {
    if (!s.is_subgroup_of(group_)) throw GeometryError("subgroup is not contained in the group");
    total += static_cast<std::size_t>(group_.order() / s.order());
    if (total > total_coset_limit) throw GeometryError("coset count exceeds limit");
    spaces_.emplace_back(group_, std::move(s), CosetSide::Right, total_coset_limit);
  }
}

std::vector<std::size_t> CosetGeometry::element_counts() const {
  std::vector<std::size_t> counts;
  for (const auto& sp : spaces_) counts.push_back(sp.size());
  return counts;
}

const std::vector<std::uint32_t>& CosetGeometry::action_table(int type, std::size_t gi) const {
  // cache_->mutex is held by the caller.
  auto key = std::make_pair(type, gi);
  auto it = cache_->actions.find(key);
  if (it != cache_->actions.end()) return it->second;
  const auto& sp = spaces_[static_cast<std::size_t>(type)];
  std::vector<std::uint32_t> tab(sp.size());
  for (std::size_t c = 0; c < sp.size(); ++c)
    tab[c] = static_cast<std::uint32_t>(sp.act(c, group_.generators()[gi]));
  return cache_->actions.emplace(key, std::move(tab)).first->second;
}

const Bits& CosetGeometry::row(ElementRef a, int other_type) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto key = std::make_pair(a.type, other_type);
  auto it = cache_->rows.find(key);
  if (it == cache_->rows.end()) {
    const auto& from = spaces_[static_cast<std::size_t>(a.type)];
    const auto& over = spaces_[static_cast<std::size_t>(other_type)];
    std::vector<Bits> rows(from.size());
    rows[0] = over.identity_orbit(from.subgroup().generators());
    // Incidence is invariant under right multiplication, so each row is the
    // parent row pushed through the discovering generator's action.
    for (std::size_t c = 1; c < from.size(); ++c) {
      const auto& tab = action_table(other_type, from.via(c));
      Bits r(over.size());
      rows[from.parent(c)].for_each_set([&](std::size_t y) { r.set(tab[y]); });
      rows[c] = std::move(r);
    }
    it = cache_->rows.emplace(key, std::move(rows)).first;
  }
  return it->second[a.coset];
}

const Bits& CosetGeometry::base_orbit(int i, int j) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto key = std::make_pair(i, j);
  auto it = cache_->base_orbits.find(key);
  if (it == cache_->base_orbits.end()) {
    Bits orbit = spaces_[static_cast<std::size_t>(i)].identity_orbit(
        spaces_[static_cast<std::size_t>(j)].subgroup().generators());
    it = cache_->base_orbits.emplace(key, std::move(orbit)).first;
  }
  return it->second;
}

bool CosetGeometry::incident(ElementRef a, ElementRef b) const {
  if (a.type == b.type) return a.coset == b.coset;
  // G_i x meets G_j y iff x y^{-1} lies in G_i G_j, i.e. iff the coset of
  // x y^{-1} sits in the orbit of the identity i-coset under G_j.
  const Bits& orb = base_orbit(a.type, b.type);
  const auto& sa = spaces_[static_cast<std::size_t>(a.type)];
  const auto& sb = spaces_[static_cast<std::size_t>(b.type)];
  Permutation z = perm::compose(sa.representative(a.coset), sb.representative(b.coset).inverse());
  return orb.test(sa.index_of(z));
}

Flag CosetGeometry::base_flag(const std::vector<int>& types) const {
  Flag f;
  for (int t : types) f.push_back({t, 0});
  std::sort(f.begin(), f.end());
  return f;
}

std::string CosetGeometry::to_dot() const {
  if (rank() > 4) throw GeometryError("incidence graph export is limited to rank 4");
  std::ostringstream out;
  out << "graph incidence {\n";
  for (int t = 0; t < rank(); ++t)
    for (std::size_t c = 0; c < spaces_[static_cast<std::size_t>(t)].size(); ++c)
      out << "  t" << t << "_" << c << " [label=\"" << t << ":" << c << "\"];\n";
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      for (std::size_t c = 0; c < spaces_[static_cast<std::size_t>(i)].size(); ++c)
        row({i, c}, j).for_each_set(
            [&](std::size_t d) { out << "  t" << i << "_" << c << " -- t" << j << "_" << d << ";\n"; });
  out << "}\n";
  return out.str();
}

void for_each_flag(const CosetGeometry& geo,
                   const std::function<bool(const Flag&, const std::vector<const Bits*>&)>& fn,
                   std::uint64_t leaf_limit) {
  const int r = geo.rank();
  std::vector<Bits> cand;
  for (int t = 0; t < r; ++t) cand.push_back(Bits::all(geo.space(t).size()));
  Flag flag;
  std::vector<bool> filled(static_cast<std::size_t>(r), false);
  std::uint64_t leaves = 0;
  bool aborted = false;

  std::function<void(int, const std::vector<Bits>&)> rec = [&](int t, const std::vector<Bits>& c) {
    if (aborted) return;
    if (t == r) {
      if (++leaves > leaf_limit) throw GeometryError("flag enumeration exceeds limit");
      std::vector<const Bits*> residue(static_cast<std::size_t>(r), nullptr);
      for (int u = 0; u < r; ++u)
        if (!filled[static_cast<std::size_t>(u)]) residue[static_cast<std::size_t>(u)] = &c[static_cast<std::size_t>(u)];
      if (!fn(flag, residue)) aborted = true;
      return;
    }
    rec(t + 1, c);
    if (aborted) return;
    Bits options = c[static_cast<std::size_t>(t)];
    options.for_each_set([&](std::size_t el) -> bool {
      std::vector<Bits> next = c;
      for (int u = 0; u < r; ++u)
        if (u != t && !filled[static_cast<std::size_t>(u)])
          next[static_cast<std::size_t>(u)] &= geo.row({t, el}, u);
      flag.push_back({t, el});
      filled[static_cast<std::size_t>(t)] = true;
      rec(t + 1, next);
      filled[static_cast<std::size_t>(t)] = false;
      flag.pop_back();
      return !aborted;
    });
  };
  rec(0, cand);
}

GeometryResult is_geometry(const CosetGeometry& geo, std::uint64_t leaf_limit) {
  GeometryResult res;
  res.ok = true;
  for_each_flag(
      geo,
      [&](const Flag& f, const std::vector<const Bits*>& residue) {
        if (static_cast<int>(f.size()) == geo.rank()) return true;
        for (const Bits* b : residue)
          if (b && b->any()) return true;  // extendable
        res.ok = false;
        res.stuck_flag = f;
        return false;
      },
      leaf_limit);
  return res;
}

namespace {

void require_geometry(const CosetGeometry& geo) {
  auto g = is_geometry(geo);
  if (!g.ok) throw NotAGeometry("the incidence system has a flag that extends to no chamber");
}

bool residue_connected(const CosetGeometry& geo, const std::vector<const Bits*>& residue) {
  const int r = geo.rank();
  std::vector<int> types;
  std::size_t total = 0;
  for (int t = 0; t < r; ++t)
    if (residue[static_cast<std::size_t>(t)]) {
      types.push_back(t);
      total += residue[static_cast<std::size_t>(t)]->count();
    }
  if (total <= 1) return true;
  std::vector<Bits> visited;
  for (int t = 0; t < r; ++t) visited.push_back(Bits(geo.space(t).size()));
  std::vector<ElementRef> queue;
  for (int t : types) {
    bool started = false;
    residue[static_cast<std::size_t>(t)]->for_each_set([&](std::size_t c) -> bool {
      queue.push_back({t, c});
      visited[static_cast<std::size_t>(t)].set(c);
      started = true;
      return false;
    });
    if (started) break;
  }
  std::size_t reached = 0;
  while (!queue.empty()) {
    ElementRef v = queue.back();
    queue.pop_back();
    ++reached;
    for (int u : types) {
      if (u == v.type) continue;
      Bits nbr = geo.row(v, u) & *residue[static_cast<std::size_t>(u)];
      nbr.for_each_set([&](std::size_t d) {
        if (!visited[static_cast<std::size_t>(u)].test(d)) {
          visited[static_cast<std::size_t>(u)].set(d);
          queue.push_back({u, d});
        }
      });
    }
  }
  return reached == total;
}

}  // namespace

ThinResult is_thin(const CosetGeometry& geo) {
  require_geometry(geo);
  ThinResult res;
  res.thin = true;
  for_each_flag(geo, [&](const Flag& f, const std::vector<const Bits*>& residue) {
    if (static_cast<int>(f.size()) != geo.rank() - 1) return true;
    for (const Bits* b : residue)
      if (b) {
        std::size_t n = b->count();
        if (n != 2) {
          res.thin = false;
          res.flag = f;
          res.residue_size = n;
          return false;
        }
      }
    return true;
  });
  return res;
}

ThinResult is_thin_rank2(const CosetGeometry& geo) {
  if (geo.rank() < 2) return is_thin(geo);
  require_geometry(geo);
  ThinResult res;
  res.thin = true;
  for_each_flag(geo, [&](const Flag& f, const std::vector<const Bits*>& residue) {
    if (static_cast<int>(f.size()) != geo.rank() - 2) return true;
    std::vector<int> missing;
    for (int u = 0; u < geo.rank(); ++u)
      if (residue[static_cast<std::size_t>(u)]) missing.push_back(u);
    for (int side = 0; side < 2; ++side) {
      int a = missing[static_cast<std::size_t>(side)];
      int b = missing[static_cast<std::size_t>(1 - side)];
      bool bad = false;
      residue[static_cast<std::size_t>(a)]->for_each_set([&](std::size_t c) -> bool {
        Bits ext = geo.row({a, c}, b) & *residue[static_cast<std::size_t>(b)];
        std::size_t n = ext.count();
        if (n != 2) {
          res.thin = false;
          Flag witness = f;
          witness.push_back({a, c});
          std::sort(witness.begin(), witness.end());
          res.flag = std::move(witness);
          res.residue_size = n;
          bad = true;
          return false;
        }
        return true;
      });
      if (bad) return false;
    }
    return true;
  });
  return res;
}

RcResult is_residually_connected(const CosetGeometry& geo) {
  require_geometry(geo);
  RcResult res;
  res.connected = true;
  for_each_flag(geo, [&](const Flag& f, const std::vector<const Bits*>& residue) {
    if (geo.rank() - static_cast<int>(f.size()) < 2) return true;
    if (!residue_connected(geo, residue)) {
      res.connected = false;
      res.flag = f;
      return false;
    }
    return true;
  });
  return res;
}

ThinResult thin_via_base_chamber(const CosetGeometry& geo) {
  ThinResult res;
  res.thin = true;
  for (int i = 0; i < geo.rank(); ++i) {
    Bits resid = Bits::all(geo.space(i).size());
    std::vector<int> others;
    for (int k = 0; k < geo.rank(); ++k)
      if (k != i) {
        resid &= geo.base_orbit(i, k);
        others.push_back(k);
      }
    std::size_t n = resid.count();
    if (n != 2) {
      res.thin = false;
      res.flag = geo.base_flag(others);
      res.residue_size = n;
      return res;
    }
  }
  return res;
}

RcResult rc_via_standard_flags(const CosetGeometry& geo) {
  const int r = geo.rank();
  RcResult res;
  res.connected = true;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
    int cotypes = r - std::popcount(mask);
    if (cotypes < 2) continue;
    std::vector<Bits> sets;
    std::vector<const Bits*> residue(static_cast<std::size_t>(r), nullptr);
    std::vector<int> fixed;
    sets.reserve(static_cast<std::size_t>(r));
    for (int u = 0; u < r; ++u) {
      if (mask & (std::uint32_t{1} << u)) {
        fixed.push_back(u);
        sets.emplace_back();
        continue;
      }
      Bits b = Bits::all(geo.space(u).size());
      for (int i = 0; i < r; ++i)
        if (mask & (std::uint32_t{1} << i)) b &= geo.base_orbit(u, i);
      sets.push_back(std::move(b));
    }
    for (int u = 0; u < r; ++u)
      if (!(mask & (std::uint32_t{1} << u))) residue[static_cast<std::size_t>(u)] = &sets[static_cast<std::size_t>(u)];
    if (!residue_connected(geo, residue)) {
      res.connected = false;
      res.flag = geo.base_flag(fixed);
      return res;
    }
  }
  return res;
}

FtDirectResult is_flag_transitive_direct(const CosetGeometry& geo, std::uint64_t chamber_limit) {
  const int r = geo.rank();
  FtDirectResult res;
  std::optional<PermGroup> meet;
  for (int i = 0; i < r; ++i)
    meet = meet ? perm::intersection(*meet, geo.space(i).subgroup()) : geo.space(i).subgroup();
  res.expected = geo.group().order() / meet->order();

  std::vector<int> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return geo.space(a).size() < geo.space(b).size(); });

  std::vector<Bits> el_cov;
  for (int t = 0; t < r; ++t) el_cov.push_back(Bits(geo.space(t).size()));
  std::map<std::pair<int, int>, std::vector<Bits>> pair_cov;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      pair_cov[{i, j}] =
          std::vector<Bits>(geo.space(i).size(), Bits(geo.space(j).size()));

  std::uint64_t count = 0;
  std::vector<ElementRef> chosen;
  std::function<void(int, const std::vector<Bits>&)> rec = [&](int level,
                                                               const std::vector<Bits>& c) {
    int t = order[static_cast<std::size_t>(level)];
    c[static_cast<std::size_t>(t)].for_each_set([&](std::size_t el) {
      chosen.push_back({t, el});
      if (level + 1 == r) {
        if (++count > chamber_limit) throw ChamberOverflow("chamber count exceeds limit");
        for (const auto& x : chosen) {
          el_cov[static_cast<std::size_t>(x.type)].set(x.coset);
          for (const auto& y : chosen) {
            if (x.type < y.type) pair_cov[{x.type, y.type}][x.coset].set(y.coset);
          }
        }
      } else {
        std::vector<Bits> next = c;
        bool viable = true;
        for (int lv = level + 1; lv < r && viable; ++lv) {
          int u = order[static_cast<std::size_t>(lv)];
          next[static_cast<std::size_t>(u)] &= geo.row({t, el}, u);
          if (next[static_cast<std::size_t>(u)].none()) viable = false;
        }
        if (viable) rec(level + 1, next);
      }
      chosen.pop_back();
    });
  };
  std::vector<Bits> cand;
  for (int t = 0; t < r; ++t) cand.push_back(Bits::all(geo.space(t).size()));
  rec(0, cand);

  res.chambers = count;
  res.chamber_transitive = count == res.expected;
  res.rank2_flags_covered = true;
  for (int t = 0; t < r && res.rank2_flags_covered; ++t)
    if (el_cov[static_cast<std::size_t>(t)] != Bits::all(geo.space(t).size()))
      res.rank2_flags_covered = false;
  for (int i = 0; i < r && res.rank2_flags_covered; ++i)
    for (int j = i + 1; j < r && res.rank2_flags_covered; ++j)
      for (std::size_t c = 0; c < geo.space(i).size() && res.rank2_flags_covered; ++c)
        if (pair_cov[{i, j}][c] != geo.row({i, c}, j)) res.rank2_flags_covered = false;
  return res;
}

namespace {

bool ft_geometry_rank3(const PermGroup& g, const std::vector<PermGroup>& subs,
                       std::uint64_t chamber_limit) {
  CosetGeometry geo(g, subs);
  auto res = is_flag_transitive_direct(geo, chamber_limit);
  return res.chamber_transitive && res.rank2_flags_covered;
}

}  // namespace

bool is_flag_transitive_incremental(const PermGroup& g, const std::vector<PermGroup>& subgroups,
                                    int pivot, std::uint64_t chamber_limit) {
  const int r = static_cast<int>(subgroups.size());
  // Rank <= 2 coset systems are flag-transitive geometries outright: right
  // multiplication is transitive on elements, and G_0 x always meets G_1 x.
  if (r <= 2) return true;
  if (r == 3) return ft_geometry_rank3(g, subgroups, chamber_limit);
  const int p = (pivot >= 0 && pivot < r) ? pivot : r - 1;
  const PermGroup& pivot_group = subgroups[static_cast<std::size_t>(p)];
  std::vector<PermGroup> rest;
  for (int i = 0; i < r; ++i)
    if (i != p) rest.push_back(subgroups[static_cast<std::size_t>(i)]);
  if (!is_flag_transitive_incremental(g, rest, -1, chamber_limit)) return false;
  std::vector<PermGroup> residue;
  for (const auto& s : rest) residue.push_back(perm::intersection(s, pivot_group));
  if (!is_flag_transitive_incremental(pivot_group, residue, -1, chamber_limit)) return false;
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j)
      if (!ft_geometry_rank3(g, {rest[i], rest[j], pivot_group}, chamber_limit)) return false;
  return true;
}

bool bh91_condition(const PermGroup& g, const std::vector<PermGroup>& subgroups,
                    const std::vector<int>& J, int alpha, std::size_t coset_limit) {
  if (J.size() < 3) throw std::invalid_argument("the type subset needs at least three members");
  if (std::find(J.begin(), J.end(), alpha) == J.end())
    throw std::invalid_argument("the distinguished type must belong to the subset");
  const PermGroup& g_alpha = subgroups.at(static_cast<std::size_t>(alpha));
  CosetSpace left(g, g_alpha, CosetSide::Left, coset_limit);
  Bits lhs = Bits::all(left.size());
  std::optional<PermGroup> meet;
  for (int j : J) {
    if (j == alpha) continue;
    const PermGroup& gj = subgroups.at(static_cast<std::size_t>(j));
    lhs &= left.identity_orbit(gj.generators());
    meet = meet ? perm::intersection(*meet, gj) : gj;
  }
  Bits rhs = left.identity_orbit(meet->generators());
  return lhs == rhs;
}

bool cosets_intersect(const Permutation& rep1, const PermGroup& sub1, const Permutation& rep2,
                      const PermGroup& sub2, std::size_t coset_limit) {
  // The cosets meet iff rep1 rep2^{-1} lies in sub1 sub2, i.e. iff the
  // sub1-coset of that product appears in the orbit of the identity coset
  // under right multiplication by sub2.
  Permutation z = perm::compose(rep1, rep2.inverse());
  auto key_of = [&](const Permutation& x) { return sub1.chain().min_coset_images(x.inverse()); };
  std::vector<Point> target = key_of(z);
  std::set<std::vector<Point>> seen;
  std::vector<Permutation> frontier;
  Permutation id(sub1.degree());
  if (key_of(id) == target) return true;
  seen.insert(key_of(id));
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& gen : sub2.generators()) {
      Permutation next = perm::compose(x, gen);
      auto key = key_of(next);
      if (key == target) return true;
      if (seen.insert(std::move(key)).second) {
        if (seen.size() > coset_limit) throw GeometryError("coset count exceeds limit");
        frontier.push_back(std::move(next));
      }
    }
  }
  return false;
}

int default_pivot(const std::vector<Permutation>& gens) {
  const int r = static_cast<int>(gens.size());
  for (int l = r - 1; l >= 0; --l) {
    auto cycles = gens[static_cast<std::size_t>(l)].cycle_decomposition();
    if (cycles.size() != 1 || cycles[0].size() != 2) continue;
    for (Point p : cycles[0]) {
      bool pendant = true;
      for (int k = 0; k < r && pendant; ++k)
        if (k != l && gens[static_cast<std::size_t>(k)](p) != p) pendant = false;
      if (pendant) return l;
    }
  }
  return r - 1;
}

nlohmann::json HypertopeReport::to_json() const {
  nlohmann::json witness = nullptr;
  if (!geometry && geometry_witness)
    witness = {{"property", "geometry"}, {"flag", flag_to_json(*geometry_witness)}};
  else if (!thin && thin_witness)
    witness = {{"property", "thin"},
               {"flag", flag_to_json(*thin_witness)},
               {"residue_size", thin_residue_size}};
  else if (!residually_connected && rc_witness)
    witness = {{"property", "rc"}, {"flag", flag_to_json(*rc_witness)}};
  else if (!is_regular_hypertope())
    witness = {{"property", !geometry ? "geometry" : (!thin ? "thin" : (!residually_connected ? "rc" : "ft"))}};
  return {{"geometry", geometry},
          {"thin", thin},
          {"rc", residually_connected},
          {"ft", flag_transitive},
          {"chambers", chambers},
          {"witness", witness}};
}

HypertopeReport certify_regular_hypertope(const std::vector<Permutation>& gens,
                                          const HypertopeOptions& opts) {
  if (gens.empty()) throw GeometryError("at least one generator is required");
  const Point degree = gens[0].degree();
  PermGroup group(degree, gens);
  std::vector<PermGroup> parabolics;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Permutation> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    parabolics.emplace_back(degree, std::move(rest));
  }
  CosetGeometry geo(group, parabolics, opts.coset_limit);

  HypertopeReport report;
  report.flag_transitive =
      is_flag_transitive_incremental(group, parabolics, default_pivot(gens), opts.chamber_limit);
  if (report.flag_transitive) {
    report.geometry = true;
    std::optional<PermGroup> meet;
    for (const auto& s : parabolics) meet = meet ? perm::intersection(*meet, s) : s;
    report.chambers = group.order() / meet->order();
    auto thin = thin_via_base_chamber(geo);
    report.thin = thin.thin;
    report.thin_witness = thin.flag;
    report.thin_residue_size = thin.residue_size;
    auto rc = rc_via_standard_flags(geo);
    report.residually_connected = rc.connected;
    report.rc_witness = rc.flag;
  } else {
    auto geom = is_geometry(geo);
    report.geometry = geom.ok;
    report.geometry_witness = geom.stuck_flag;
    if (geom.ok) {
      auto thin = is_thin(geo);
      report.thin = thin.thin;
      report.thin_witness = thin.flag;
      report.thin_residue_size = thin.residue_size;
      auto rc = is_residually_connected(geo);
      report.residually_connected = rc.connected;
      report.rc_witness = rc.flag;
      report.chambers = is_flag_transitive_direct(geo, opts.chamber_limit).chambers;
    }
  }
  return report;
}

}  // namespace ht::geom
