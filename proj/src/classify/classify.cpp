#include "classify/classify.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "repgraph/canonical.hpp"
#include "repgraph/fracture.hpp"
#include "repgraph/repgraph.hpp"

namespace ht::cls {

namespace {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  int workers = std::max(1, jobs);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Permutation transposition(Point degree, Point a, Point b) {
  if (a > b) std::swap(a, b);
  return Permutation::from_cycles(degree, {{a, b}});
}

Permutation double_transposition(Point degree, Point a, Point b, Point c, Point d) {
  perm::CycleDecomposition cycles;
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  cycles.push_back({a, b});
  cycles.push_back({c, d});
  std::sort(cycles.begin(), cycles.end());
  return Permutation::from_cycles(degree, cycles);
}

// The pipeline stops at the first failing stage; later flags stay false.
VerificationReport verify_candidate(int n, const std::vector<Permutation>& gens,
                                    const graph::LabeledTree* source_tree) {
  VerificationReport r;
  check::Candidate cand(static_cast<Point>(n), gens);
  r.order = cand.group().order();
  r.order_ok = r.order == perm::factorial(static_cast<std::uint64_t>(n));
  if (source_tree)
    r.diagram_ok = graph::coxeter_diagram(gens) == graph::line_graph_diagram(*source_tree);
  if (!r.order_ok) return r;
  r.c_group = check::check_recursive(cand).is_c_group;
  if (!r.c_group) return r;
  geom::HypertopeOptions opts;
  if (n >= 11) opts.chamber_limit = perm::factorial(static_cast<std::uint64_t>(n)) + 1;
  r.hypertope = geom::certify_regular_hypertope(cand.generators(), opts).is_regular_hypertope();
  return r;
}

std::string canon_of(const std::vector<Permutation>& gens) {
  return graph::canonical_form(graph::RepGraph::from_generators(gens), true);
}

nlohmann::json tree_edges_json(const graph::UnlabeledTree& tree) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : tree.edges) edges.push_back(nlohmann::json::array({a, b}));
  return edges;
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j{
      {"order", order}, {"order_ok", order_ok}, {"c_group", c_group}, {"hypertope", hypertope}};
  if (diagram_ok) j["diagram_matches_line_graph"] = *diagram_ok;
  return j;
}

nlohmann::json Instance::to_json() const {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& p : gens) g.push_back(p.cycle_string());
  nlohmann::json j{{"n", n},
                   {"family", nullptr},
                   {"tree", tree_edges_json(tree)},
                   {"attach", nullptr},
                   {"gens", g},
                   {"report", report.to_json()},
                   {"canon", canon}};
  if (family) j["family"] = std::string(1, pres::family_letter(*family));
  if (attach) j["attach"] = *attach;
  return j;
}

nlohmann::json ClassificationResult::summary_json() const {
  nlohmann::json j{{"n", n},
                   {"rank", rank},
                   {"candidates", candidates},
                   {"failed", failed},
                   {"duplicates", duplicates},
                   {"count", instances.size()}};
  if (rank == n - 2)
    j["per_family"] = {{"A", family_counts[0]}, {"B", family_counts[1]}, {"C", family_counts[2]}};
  return j;
}

FamilyInstance build_family_instance(pres::Family family, const graph::UnlabeledTree& tail,
                                     Point attach) {
  if (tail.n < 4) throw std::invalid_argument("build_family_instance: tail needs at least 4 vertices");
  if (attach >= tail.n) throw std::invalid_argument("build_family_instance: attach vertex out of range");
  const int n = static_cast<int>(tail.n) + 3;
  const Point degree = static_cast<Point>(n);

  FamilyInstance inst;
  inst.family = family;
  inst.attach_vertex = attach;
  inst.n = n;
  if (family == pres::Family::C) {
    inst.gens.push_back(double_transposition(degree, 0, 1, 2, 3));
    inst.gens.push_back(double_transposition(degree, 0, 2, 1, 3));
  } else {
    inst.gens.push_back(transposition(degree, 1, 2));
    inst.gens.push_back(double_transposition(degree, 0, 1, 2, 3));
  }
  // The head's free vertex: the far end of the second doubled edge, except
  // the middle vertex carrying both a doubled edge and the connector.
  const Point head_attach = family == pres::Family::B ? 2 : 3;

  std::vector<std::vector<Point>> adj(tail.n);
  for (auto [a, b] : tail.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  inst.tail_tree.n = tail.n;
  std::vector<Point> img(tail.n, 0);
  std::vector<char> discovered(tail.n, 0);
  img[attach] = head_attach;
  discovered[attach] = 1;
  std::deque<Point> queue{attach};
  Point next_point = 4;
  int next_label = 2;
  while (!queue.empty()) {
    Point u = queue.front();
    queue.pop_front();
    for (Point v : adj[u]) {
      if (discovered[v]) continue;
      discovered[v] = 1;
      img[v] = next_point++;
      inst.tail_tree.edges.push_back({std::min(u, v), std::max(u, v), next_label++});
      inst.gens.push_back(transposition(degree, img[u], img[v]));
      queue.push_back(v);
    }
  }
  return inst;
}

ClassificationResult enumerate_rank_n_minus_1(int n, int jobs) {
  if (n < 7 || n > 12)
    throw std::invalid_argument("enumerate_rank_n_minus_1: n must be between 7 and 12");
  auto trees = graph::enumerate_trees(static_cast<Point>(n));

  struct Built {
    graph::LabeledTree labeled;
    std::vector<Permutation> gens;
    VerificationReport report;
    std::string canon;
  };
  std::vector<Built> built(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    built[i].labeled = graph::LabeledTree::from_unlabeled(trees[i]);
    built[i].gens = built[i].labeled.generators();
  }
  parallel_for(trees.size(), jobs, [&](std::size_t i) {
    built[i].report = verify_candidate(n, built[i].gens, &built[i].labeled);
    built[i].canon = canon_of(built[i].gens);
  });

  ClassificationResult res;
  res.n = n;
  res.rank = n - 1;
  res.candidates = trees.size();
  std::set<std::string> seen;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (!built[i].report.ok()) {
      ++res.failed;
      continue;
    }
    if (!seen.insert(built[i].canon).second) {
      ++res.duplicates;
      continue;
    }
    res.instances.push_back(Instance{n, n - 1, std::nullopt, trees[i], std::nullopt,
                                     std::move(built[i].gens), std::move(built[i].canon),
                                     built[i].report});
  }
  return res;
}

ClassificationResult enumerate_rank_n_minus_2(int n, int jobs) {
  if (n < 9 || n > 12)
    throw std::invalid_argument("enumerate_rank_n_minus_2: n must be between 9 and 12");
  auto tails = graph::enumerate_trees(static_cast<Point>(n - 3));

  struct Cand {
    pres::Family family;
    std::size_t tail_index;
    Point attach;
    FamilyInstance inst;
    VerificationReport report;
    std::string canon;
  };
  std::vector<Cand> cands;
  for (pres::Family family : {pres::Family::A, pres::Family::B, pres::Family::C}) {
    for (std::size_t t = 0; t < tails.size(); ++t) {
      for (const auto& orbit : graph::tree_vertex_orbits(tails[t])) {
        Point rep = orbit.front();
        cands.push_back(
            Cand{family, t, rep, build_family_instance(family, tails[t], rep), {}, {}});
      }
    }
  }
  parallel_for(cands.size(), jobs, [&](std::size_t i) {
    cands[i].report = verify_candidate(n, cands[i].inst.gens, nullptr);
    cands[i].canon = canon_of(cands[i].inst.gens);
  });

  ClassificationResult res;
  res.n = n;
  res.rank = n - 2;
  res.candidates = cands.size();
  std::set<std::string> seen;
  for (auto& c : cands) {
    if (!c.report.ok()) {
      ++res.failed;
      continue;
    }
    if (!seen.insert(c.canon).second) {
      ++res.duplicates;
      continue;
    }
    ++res.family_counts[static_cast<std::size_t>(c.family)];
    res.instances.push_back(Instance{n, n - 2, c.family, tails[c.tail_index], c.attach,
                                     std::move(c.inst.gens), std::move(c.canon), c.report});
  }
  return res;
}

std::vector<Permutation> exceptional_n8() {
  std::vector<Permutation> gens;
  for (const char* text : {"(0 1)", "(0 1)(2 3)", "(0 1)(6 7)", "(0 1)(4 5)", "(0 2)(5 7)",
                           "(0 7)(2 5)"})
    gens.push_back(Permutation::parse_cycles(text, 8));
  return gens;
}

ScreenReport structural_screen(const std::vector<Permutation>& gens) {
  graph::RepGraph g = graph::RepGraph::from_generators(gens);

  ScreenReport rep;
  rep.connected = g.is_connected();
  if (!rep.connected) return rep;
  // The screen conditions assume a generating set of rank two below the
  // vertex count; anything else passes vacuously.
  if (static_cast<Point>(g.rank()) + 2 != g.vertex_count()) return rep;

  graph::FractureGraph fracture = graph::fracture_graph(gens);

  const Point n = g.vertex_count();
  const auto& edges = g.edges();
  std::vector<std::vector<graph::Edge>> by_label(static_cast<std::size_t>(g.rank()));
  for (const auto& e : edges) by_label[static_cast<std::size_t>(e.label)].push_back(e);

  auto has_edge = [&](Point a, Point b, int label) {
    for (const auto& e : by_label[static_cast<std::size_t>(label)])
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
    return false;
  };

  // Simple-skeleton breadth-first distances.
  std::vector<std::vector<Point>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  auto distances_from = [&](Point start) {
    std::vector<int> dist(n, -1);
    std::deque<Point> queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
      Point u = queue.front();
      queue.pop_front();
      for (Point v : adj[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    return dist;
  };

  for (std::size_t i = 0; rep.omitted_edges_interlock && i < fracture.omitted.size(); ++i) {
    for (std::size_t j = i + 1; rep.omitted_edges_interlock && j < fracture.omitted.size(); ++j) {
      const auto& e1 = fracture.omitted[i];
      const auto& e2 = fracture.omitted[j];
      std::set<Point> shared;
      for (Point a : {e1.a, e1.b})
        for (Point b : {e2.a, e2.b})
          if (a == b) shared.insert(a);
      if (shared.size() != 1 || e1.label == e2.label) {
        rep.omitted_edges_interlock = false;
        break;
      }
      Point s = *shared.begin();
      Point u = e1.a == s ? e1.b : e1.a;
      Point v = e2.a == s ? e2.b : e2.a;
      bool closed = false;
      for (Point w = 0; w < n && !closed; ++w)
        closed = w != s && has_edge(u, w, e2.label) && has_edge(w, v, e1.label);
      if (!closed) rep.omitted_edges_interlock = false;
    }
  }

  std::vector<int> doubled;
  for (std::size_t l = 0; l < by_label.size(); ++l) {
    if (by_label[l].size() > 2) rep.doubled_labels_adjacent = false;
    if (by_label[l].size() == 2) doubled.push_back(static_cast<int>(l));
  }
  for (int l : doubled) {
    const auto& e1 = by_label[static_cast<std::size_t>(l)][0];
    const auto& e2 = by_label[static_cast<std::size_t>(l)][1];
    auto da = distances_from(e1.a);
    auto db = distances_from(e1.b);
    int d = std::min({da[e2.a], da[e2.b], db[e2.a], db[e2.b]});
    if (d != 1) rep.doubled_labels_adjacent = false;
  }

  const bool simple = g.is_simple();
  const std::size_t m = edges.size();
  std::vector<Point> core;  // vertices of the unique cycle, when there is one
  bool alternating_square = false;
  if (!simple || m > static_cast<std::size_t>(n)) {
    rep.single_cycle_square = false;
  } else if (m == static_cast<std::size_t>(n)) {
    // Peel leaves; the remainder is the unique cycle.
    std::vector<int> degree(n, 0);
    for (const auto& e : edges) {
      ++degree[e.a];
      ++degree[e.b];
    }
    std::vector<char> removed(n, 0);
    std::deque<Point> leaves;
    for (Point v = 0; v < n; ++v)
      if (degree[v] <= 1) leaves.push_back(v);
    while (!leaves.empty()) {
      Point v = leaves.front();
      leaves.pop_front();
      removed[v] = 1;
      for (Point w : adj[v])
        if (!removed[w] && --degree[w] == 1) leaves.push_back(w);
    }
    for (Point v = 0; v < n; ++v)
      if (!removed[v]) core.push_back(v);
    std::vector<graph::Edge> cycle_edges;
    for (const auto& e : edges)
      if (!removed[e.a] && !removed[e.b]) cycle_edges.push_back(e);
    if (core.size() == 4 && cycle_edges.size() == 4) {
      std::map<int, int> label_count;
      for (const auto& e : cycle_edges) ++label_count[e.label];
      bool alternates = label_count.size() == 2;
      for (Point v : core) {
        std::set<int> at_v;
        for (const auto& e : cycle_edges)
          if (e.a == v || e.b == v) at_v.insert(e.label);
        alternates = alternates && at_v.size() == 2;
      }
      alternating_square = alternates;
    }
    rep.single_cycle_square = alternating_square;
  }

  if (simple && m + 1 == static_cast<std::size_t>(n) && doubled.size() == 1 && n > 4) {
    const auto& pair = by_label[static_cast<std::size_t>(doubled.front())];
    std::set<Point> head{pair[0].a, pair[0].b, pair[1].a, pair[1].b};
    std::size_t connectors = 0, outside = 0;
    for (const auto& e : edges) {
      if (e.label == doubled.front()) continue;
      int in_head = static_cast<int>(head.count(e.a)) + static_cast<int>(head.count(e.b));
      if (in_head == 2) ++connectors;
      if (in_head == 1) ++outside;
    }
    rep.head_attachment_unique = connectors == 1 && outside == 1;
  }

  if (alternating_square && n > 4) {
    auto degrees = g.vertex_degrees();
    std::vector<int> square_degrees;
    for (Point v : core) square_degrees.push_back(degrees[v]);
    std::sort(square_degrees.begin(), square_degrees.end());
    rep.square_degrees_ok = square_degrees == std::vector<int>{2, 2, 2, 3};
  }
  return rep;
}

nlohmann::json ScreenReport::to_json() const {
  return {{"connected", connected},
          {"omitted_edges_interlock", omitted_edges_interlock},
          {"doubled_labels_adjacent", doubled_labels_adjacent},
          {"single_cycle_square", single_cycle_square},
          {"head_attachment_unique", head_attachment_unique},
          {"square_degrees_ok", square_degrees_ok},
          {"all_ok", all_ok()}};
}

namespace {

struct EdgeList {
  Point n = 0;
  std::vector<std::pair<Point, Point>> edges;

  std::vector<std::vector<int>> pair_distances() const {
    std::vector<std::vector<Point>> adj(n);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (Point s = 0; s < n; ++s) {
      dist[s][s] = 0;
      std::deque<Point> queue{s};
      while (!queue.empty()) {
        Point u = queue.front();
        queue.pop_front();
        for (Point v : adj[u])
          if (dist[s][v] < 0) {
            dist[s][v] = dist[s][u] + 1;
            queue.push_back(v);
          }
      }
    }
    return dist;
  }
};

// Disjoint edges whose endpoint sets sit at graph distance one.
bool disjoint_at_distance_one(const std::pair<Point, Point>& e, const std::pair<Point, Point>& f,
                              const std::vector<std::vector<int>>& dist) {
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second)
    return false;
  int d = std::min({dist[e.first][f.first], dist[e.first][f.second], dist[e.second][f.first],
                    dist[e.second][f.second]});
  return d == 1;
}

}  // namespace

SearchOutcome restricted_search_n9() {
  constexpr Point n = 9;
  std::set<std::string> family_canons;
  for (const auto& inst : enumerate_rank_n_minus_2(9).instances) family_canons.insert(inst.canon);

  SearchOutcome out;
  std::set<std::string> seen;
  auto consider = [&](const std::vector<std::pair<Point, Point>>& doubled,
                      const std::vector<std::pair<Point, Point>>& singles) {
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i + 1 < doubled.size(); i += 2)
      gens.push_back(double_transposition(n, doubled[i].first, doubled[i].second,
                                          doubled[i + 1].first, doubled[i + 1].second));
    for (auto [a, b] : singles) gens.push_back(transposition(n, a, b));
    // A parallel edge across two singleton labels repeats a generator; such a
    // shape is not an independent set.
    if (std::set<Permutation>(gens.begin(), gens.end()).size() != gens.size()) return;
    std::string canon = canon_of(gens);
    if (!seen.insert(canon).second) return;
    ++out.shapes;
    if (perm::PermGroup(n, gens).order() != perm::factorial(9)) return;
    ++out.full_order;
    if (!check::check_recursive(check::Candidate(n, gens)).is_c_group) return;
    ++out.c_groups;
    if (family_canons.count(canon))
      ++out.family_matched;
    else
      out.outside.push_back(canon);
  };

  auto trees = graph::enumerate_trees(n);
  for (const auto& tree : trees) {
    // Tree shape: eight edges, one doubled label.
    EdgeList base{n, tree.edges};
    auto dist = base.pair_distances();
    const auto& te = tree.edges;
    for (std::size_t i = 0; i < te.size(); ++i) {
      for (std::size_t j = i + 1; j < te.size(); ++j) {
        if (!disjoint_at_distance_one(te[i], te[j], dist)) continue;
        std::vector<std::pair<Point, Point>> singles;
        for (std::size_t k = 0; k < te.size(); ++k)
          if (k != i && k != j) singles.push_back(te[k]);
        consider({te[i], te[j]}, singles);
      }
    }
    // One-cycle shape: a ninth edge (parallel edges allowed), two doubled labels.
    for (Point u = 0; u < n; ++u) {
      for (Point v = u + 1; v < n; ++v) {
        EdgeList full{n, tree.edges};
        full.edges.emplace_back(u, v);
        auto fdist = full.pair_distances();
        const auto& fe = full.edges;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < fe.size(); ++i)
          for (std::size_t j = i + 1; j < fe.size(); ++j)
            if (disjoint_at_distance_one(fe[i], fe[j], fdist)) pairs.emplace_back(i, j);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            auto [a, b] = pairs[p];
            auto [c, d] = pairs[q];
            if (a == c || a == d || b == c || b == d) continue;
            std::vector<std::pair<Point, Point>> singles;
            for (std::size_t k = 0; k < fe.size(); ++k)
              if (k != a && k != b && k != c && k != d) singles.push_back(fe[k]);
            consider({fe[a], fe[b], fe[c], fe[d]}, singles);
          }
        }
      }
    }
  }
  return out;
}

namespace {

// Fisher-Yates with the raw engine output so the sequence is identical on
// every platform.
template <typename T>
void shuffle_deterministic(std::vector<T>& values, std::mt19937& rng) {
  for (std::size_t i = values.size(); i > 1; --i)
    std::swap(values[i - 1], values[static_cast<std::size_t>(rng() % i)]);
}

}  // namespace

std::vector<check::Candidate> corpus() {
  std::vector<check::Candidate> out;
  auto add = [&](Point degree, std::vector<Permutation> gens) {
    out.emplace_back(degree, std::move(gens));
  };
  auto parsed = [](Point degree, const std::vector<const char*>& texts) {
    std::vector<Permutation> gens;
    for (const char* t : texts) gens.push_back(Permutation::parse_cycles(t, degree));
    return gens;
  };

  // Verified tree instances of rank 3..5.
  for (Point n : {Point{4}, Point{5}, Point{6}})
    for (const auto& tree : graph::enumerate_trees(n))
      add(n, graph::LabeledTree::from_unlabeled(tree).generators());

  // Family heads with the smallest tails, every attachment orbit.
  for (pres::Family family : {pres::Family::A, pres::Family::B, pres::Family::C})
    for (const auto& tail : graph::enumerate_trees(4))
      for (const auto& orbit : graph::tree_vertex_orbits(tail))
        add(7, build_family_instance(family, tail, orbit.front()).gens);

  // Rank-2 pairs.
  add(3, parsed(3, {"(0 1)", "(1 2)"}));
  add(4, parsed(4, {"(0 1)", "(2 3)"}));
  add(4, parsed(4, {"(0 1)(2 3)", "(0 2)(1 3)"}));

  // Structural negative configurations.
  add(5, parsed(5, {"(0 1)(3 4)", "(1 2)", "(2 3)"}));             // doubled pair at distance two
  add(7, parsed(7, {"(0 1)(5 6)", "(1 2)", "(4 5)"}));             // doubled pair in separate pieces
  add(6, parsed(6, {"(0 1)(2 3)", "(2 3)(4 5)", "(1 2)", "(3 4)"}));  // parallel edge
  add(6, parsed(6, {"(1 2)", "(0 1)(2 3)", "(3 4)", "(0 5)"}));    // attachments at both head ends
  add(6, parsed(6, {"(1 2)", "(0 1)(2 3)", "(3 4)", "(2 5)"}));    // attachments at end and middle
  add(6, parsed(6, {"(1 2)", "(0 1)(2 3)", "(1 4)", "(2 5)"}));    // attachments at both middles
  add(6, parsed(6, {"(0 1)(2 3)", "(0 2)(1 3)", "(3 4)", "(2 5)"}));  // square attached twice
  add(6, parsed(6, {"(0 1)(2 3)", "(0 2)(1 3)", "(3 4)", "(4 5)"}));  // square with a two-edge tail
  add(7, parsed(7, {"(0 1)(3 4)", "(1 2)(4 5)", "(2 3)(5 6)"}));   // omitted edges disjoint
  add(3, parsed(3, {"(0 1)", "(1 2)", "(0 2)"}));                  // three-cycle, not a square

  // Every tree on 6 and 7 vertices with each doubled label at distance one.
  for (Point n : {Point{6}, Point{7}}) {
    for (const auto& tree : graph::enumerate_trees(n)) {
      EdgeList base{n, tree.edges};
      auto dist = base.pair_distances();
      const auto& te = tree.edges;
      for (std::size_t i = 0; i < te.size(); ++i) {
        for (std::size_t j = i + 1; j < te.size(); ++j) {
          if (!disjoint_at_distance_one(te[i], te[j], dist)) continue;
          std::vector<Permutation> gens;
          gens.push_back(
              double_transposition(n, te[i].first, te[i].second, te[j].first, te[j].second));
          for (std::size_t k = 0; k < te.size(); ++k)
            if (k != i && k != j) gens.push_back(transposition(n, te[k].first, te[k].second));
          add(n, std::move(gens));
        }
      }
    }
  }

  // Seeded filler: involutions of one or two transpositions, rank 3..5.
  std::mt19937 rng(987654321u);
  while (out.size() < 200) {
    Point degree = static_cast<Point>(7 + rng() % 3);
    int rank = static_cast<int>(3 + rng() % 3);
    std::vector<Permutation> gens;
    std::set<Permutation> distinct;
    while (static_cast<int>(gens.size()) < rank) {
      std::vector<Point> pts(degree);
      std::iota(pts.begin(), pts.end(), Point{0});
      shuffle_deterministic(pts, rng);
      perm::CycleDecomposition cycles;
      std::size_t pairs = 1 + rng() % 2;
      for (std::size_t c = 0; c < pairs; ++c) {
        Point a = pts[2 * c], b = pts[2 * c + 1];
        if (a > b) std::swap(a, b);
        cycles.push_back({a, b});
      }
      std::sort(cycles.begin(), cycles.end());
      Permutation p = Permutation::from_cycles(degree, cycles);
      if (distinct.insert(p).second) gens.push_back(std::move(p));
    }
    add(degree, std::move(gens));
  }
  if (out.size() > 200) out.erase(out.begin() + 200, out.end());
  return out;
}

}  // namespace ht::cls
