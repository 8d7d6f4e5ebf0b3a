#include "presentations/presentations.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <sstream>
#include <utility>

#include "permcore/permgroup.hpp"

namespace ht::pres {

namespace {

Word repeated(const Word& w, int times) {
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(times));
  for (int t = 0; t < times; ++t) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

void validate(const Presentation& p) {
  if (p.rank <= 0) throw FormatError("presentation rank must be positive");
  for (const auto& rel : p.relators) {
    if (rel.empty()) throw FormatError("empty relator");
    for (int g : rel)
      if (g < 0 || g >= p.rank) throw FormatError("relator index out of range");
  }
}

void validate_word(const Word& w, int rank) {
  for (int g : w)
    if (g < 0 || g >= rank) throw FormatError("subgroup word index out of range");
}

// Coxeter relators of a diagram: the squares, then the alternating word
// (rho_i rho_j)^{p_ij} for every pair i < j, commuting pairs included.
std::vector<Word> coxeter_relators(const graph::CoxeterDiagram& diag) {
  std::vector<Word> rels;
  for (int i = 0; i < diag.rank(); ++i) rels.push_back(Word{i, i});
  for (int i = 0; i < diag.rank(); ++i)
    for (int j = i + 1; j < diag.rank(); ++j)
      rels.push_back(repeated(Word{i, j}, static_cast<int>(diag.order(i, j))));
  return rels;
}

// (rho_i rho_j rho_i rho_k)^2 for every diagram triangle i < j < k with
// i >= min_index.
void append_triangle_relators(std::vector<Word>& rels, const graph::CoxeterDiagram& diag,
                              int min_index) {
  for (const auto& tri : diag.triangles())
    if (tri[0] >= min_index) rels.push_back(repeated(Word{tri[0], tri[1], tri[0], tri[2]}, 2));
}

// Homomorphic image of a word under coset right-multiplication is tracked by
// the enumerator below; this class owns the table, the union-find over
// collapsed cosets, and the pending-coincidence queue.
enum class Strategy { RelatorFill, CellFill };

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_words,
             std::uint64_t max_cosets)
      : rank_(p.rank), relators_(p.relators), subgroup_(subgroup_words) {
    // Scanning short relators first keeps the table tight; the order is a
    // strategy choice and stays deterministic.
    std::stable_sort(relators_.begin(), relators_.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    occurrences_.resize(static_cast<std::size_t>(rank_));
    for (std::size_t r = 0; r < relators_.size(); ++r)
      for (std::size_t pos = 0; pos < relators_[r].size(); ++pos)
        occurrences_[relators_[r][pos]].push_back({r, pos});
    max_rows_ = static_cast<std::int32_t>(std::min<std::uint64_t>(max_cosets, 1'800'000'000));
    if (max_rows_ < 1) max_rows_ = 1;
  }

  CosetTable run(Strategy strategy) {
    append_coset();
    for (const auto& w : subgroup_) {
      ensure_headroom(w.size(), nullptr);
      scan(0, w, true);
      drain();
      process_deductions();
    }
    if (strategy == Strategy::RelatorFill)
      fill_by_relators();
    else
      fill_by_cells();
    return finish();
  }

 private:
  static constexpr std::int32_t kNone = -1;

  int rank_;
  std::vector<Word> relators_;
  std::vector<Word> subgroup_;
  // (relator, position) pairs per generator, for deduction scans.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occurrences_;
  std::int32_t max_rows_ = 0;

  std::vector<std::int32_t> table_;   // rows_ x rank_, flat
  std::vector<std::int32_t> parent_;  // union-find; root iff parent_[c] == c
  std::int32_t rows_ = 0;
  std::int32_t live_ = 0;
  std::deque<std::pair<std::int32_t, std::int32_t>> pending_;
  std::vector<std::pair<std::int32_t, int>> deductions_;  // freshly written cells

  std::int32_t& cell(std::int32_t c, int g) {
    return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(rank_) + g];
  }

  bool is_root(std::int32_t c) { return parent_[c] == c; }

  std::int32_t find(std::int32_t c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  // Live target of c under generator g, or kNone.
  std::int32_t step(std::int32_t c, int g) {
    std::int32_t d = cell(c, g);
    return d == kNone ? kNone : find(d);
  }

  std::int32_t append_coset() {
    std::int32_t d = rows_++;
    table_.resize(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(rank_), kNone);
    parent_.push_back(d);
    ++live_;
    return d;
  }

  void write_cell(std::int32_t x, int g, std::int32_t y) {
    cell(x, g) = y;
    deductions_.emplace_back(x, g);
  }

  // Records x * g = y (and y * g = x; the generators are involutions). A
  // conflicting existing entry queues a coincidence instead.
  void deduce(std::int32_t x, int g, std::int32_t y) {
    x = find(x);
    y = find(y);
    std::int32_t xc = cell(x, g);
    if (xc == kNone) {
      write_cell(x, g, y);
    } else if (find(xc) != y) {
      pending_.emplace_back(find(xc), y);
      return;
    }
    std::int32_t yc = cell(y, g);
    if (yc == kNone) {
      write_cell(y, g, x);
    } else if (find(yc) != x) {
      pending_.emplace_back(find(yc), x);
    }
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (b < a) std::swap(a, b);  // smaller index survives
      parent_[b] = a;
      --live_;
      for (int g = 0; g < rank_; ++g) {
        std::int32_t d = cell(b, g);
        if (d != kNone) deduce(a, g, d);
      }
    }
  }

  // Applies relator w at coset c, defining new cosets when `fill` is set.
  // Returns true when the scan closed.
  bool scan(std::int32_t c, const Word& w, bool fill) {
    std::int32_t f = c;
    std::size_t i = 0;
    std::int32_t b = c;
    std::size_t j = w.size();
    for (;;) {
      while (i < j) {
        std::int32_t d = step(f, w[i]);
        if (d == kNone) break;
        f = d;
        ++i;
      }
      if (i == j) {
        if (f != b) pending_.emplace_back(f, b);
        return true;
      }
      while (j > i) {
        std::int32_t d = step(b, w[j - 1]);
        if (d == kNone) break;
        b = d;
        --j;
      }
      if (i == j) {
        if (f != b) pending_.emplace_back(f, b);
        return true;
      }
      if (j == i + 1) {
        deduce(f, w[i], b);
        return true;
      }
      if (!fill) return false;
      std::int32_t d = append_coset();
      write_cell(f, w[i], d);
      write_cell(d, w[i], f);
      f = d;
      ++i;
    }
  }

  // Classic HLT: walk the cosets in order and close every relator at each,
  // defining whatever the scans need.
  void fill_by_relators() {
    for (std::int32_t c = 0; c < rows_; ++c) {
      if (!is_root(c)) continue;
      for (const auto& rel : relators_) {
        if (!ensure_headroom(rel.size(), &c)) {
          // c collapsed during lookahead; cursor now names the next
          // unprocessed coset, which must start from its first relator.
          --c;
          break;
        }
        scan(c, rel, true);
        drain();
        process_deductions();
        if (!is_root(c)) break;  // class already processed at its survivor
      }
    }
  }

  // Felsch order: define one coset at a time at the first undefined cell and
  // let deduction scans do the closing, which keeps the table near the final
  // index. The deduction scans may stall, so totality and closure are
  // re-established afterwards by full sweeps.
  void fill_by_cells() {
    std::int32_t cc = 0;
    int gg = 0;
    for (;;) {
      while (cc < rows_) {
        if (!is_root(cc)) {
          ++cc;
          gg = 0;
          continue;
        }
        while (gg < rank_ && cell(cc, gg) != kNone) ++gg;
        if (gg < rank_) break;
        ++cc;
        gg = 0;
      }
      if (cc >= rows_) {
        // Coincidences can move a class below the cursor and leave a hole
        // there; rescan before declaring the table total.
        bool hole = false;
        for (std::int32_t c = 0; c < rows_ && !hole; ++c)
          if (is_root(c))
            for (int g = 0; g < rank_; ++g)
              if (cell(c, g) == kNone) {
                cc = c;
                gg = g;
                hole = true;
                break;
              }
        if (!hole) break;
        continue;
      }
      std::int32_t before_rows = rows_;
      ensure_headroom(1, nullptr);
      if (rows_ != before_rows) {  // compaction renumbered everything
        cc = 0;
        gg = 0;
        continue;
      }
      std::int32_t d = append_coset();
      write_cell(cc, gg, d);
      write_cell(d, gg, cc);
      drain();
      process_deductions();
    }
    // The table is total; sweeps either verify closure or collapse cosets
    // (totality survives merging total rows), so iterate to a fixpoint.
    for (;;) {
      std::int32_t before = live_;
      lookahead();
      if (live_ == before) break;
    }
  }

  // Follows up every freshly written cell: any relator occurrence of that
  // generator whose prefix already reaches the cell gets a deduction-only
  // scan from the implied base coset. The main loop's exhaustive scans keep
  // the enumeration complete even when these scans stall.
  void process_deductions() {
    while (!deductions_.empty()) {
      auto [x, g] = deductions_.back();
      deductions_.pop_back();
      for (auto [ri, pos] : occurrences_[g]) {
        if (!is_root(x)) break;  // rewrites were queued at the survivor
        const Word& w = relators_[ri];
        std::int32_t c = x;
        bool reached = true;
        for (std::size_t i = pos; i > 0; --i) {
          std::int32_t d = step(c, w[i - 1]);
          if (d == kNone) {
            reached = false;
            break;
          }
          c = d;
        }
        if (!reached) continue;
        scan(c, w, false);
        drain();
      }
    }
  }

  // Deduction-only pass over every live coset and relator; closes what it
  // can without defining, so coincidences can shrink the table.
  void lookahead() {
    for (std::int32_t c = 0; c < rows_; ++c) {
      if (!is_root(c)) continue;
      for (const auto& rel : relators_) {
        scan(find(c), rel, false);
        drain();
        process_deductions();
        if (!is_root(c)) break;
      }
    }
  }

  // Renumbers live cosets in ascending order, dropping dead rows. `cursor`,
  // when given, becomes the new index of its coset's class position: the
  // count of surviving cosets that preceded it.
  void compact(std::int32_t* cursor) {
    std::vector<std::int32_t> fresh(static_cast<std::size_t>(rows_), kNone);
    std::int32_t next = 0;
    for (std::int32_t c = 0; c < rows_; ++c)
      if (is_root(c)) fresh[c] = next++;
    std::int32_t new_cursor = 0;
    if (cursor) {
      for (std::int32_t c = 0; c < *cursor; ++c)
        if (is_root(c)) ++new_cursor;
    }
    for (std::int32_t c = 0; c < rows_; ++c) {
      if (!is_root(c)) continue;
      std::int32_t to = fresh[c];
      for (int g = 0; g < rank_; ++g) {
        std::int32_t d = cell(c, g);
        cell(to, g) = d == kNone ? kNone : fresh[find(d)];
      }
    }
    rows_ = next;
    table_.resize(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(rank_));
    parent_.resize(static_cast<std::size_t>(rows_));
    for (std::int32_t c = 0; c < rows_; ++c) parent_[c] = c;
    deductions_.clear();  // entries hold pre-compaction ids; dropping them only skips shortcuts
    if (cursor) *cursor = new_cursor;
  }

  // Guarantees room for a scan that may define up to `need` cosets; falls
  // back to lookahead plus compaction, then gives up. Returns false when the
  // cursor's coset collapsed into an earlier one during lookahead.
  bool ensure_headroom(std::size_t need, std::int32_t* cursor) {
    if (static_cast<std::uint64_t>(rows_) + need <= static_cast<std::uint64_t>(max_rows_))
      return true;
    lookahead();
    bool survived = cursor == nullptr || is_root(*cursor);
    if (rows_ != live_) compact(cursor);
    // Demand a sixteenth of the budget back, or give up; this bounds how
    // often the quadratic lookahead pass can run.
    if (static_cast<std::uint64_t>(rows_) + need > static_cast<std::uint64_t>(max_rows_) ||
        max_rows_ - rows_ < max_rows_ / 16)
      throw CosetLimitExceeded("coset table exceeded " + std::to_string(max_rows_) + " rows");
    return survived;
  }

  CosetTable finish() {
    std::int32_t ignored = 0;
    if (rows_ != live_) compact(&ignored);
    CosetTable out;
    out.status = TableStatus::Complete;
    out.index = static_cast<std::uint64_t>(rows_);
    out.rows.assign(static_cast<std::size_t>(rows_), std::vector<std::int32_t>(rank_, kNone));
    for (std::int32_t c = 0; c < rows_; ++c)
      for (int g = 0; g < rank_; ++g) {
        out.rows[c][g] = cell(c, g);
        if (out.rows[c][g] == kNone) out.status = TableStatus::Incomplete;
      }
    return out;
  }
};

}  // namespace

std::string to_text(const Presentation& p, const std::vector<Word>& subgroup_words) {
  validate(p);
  for (const auto& w : subgroup_words) {
    if (w.empty()) throw FormatError("empty subgroup word");
    validate_word(w, p.rank);
  }
  std::ostringstream out;
  out << "rank " << p.rank << '\n';
  auto write_word = [&out](const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out << ' ';
      out << w[i];
    }
    out << '\n';
  };
  for (const auto& rel : p.relators) write_word(rel);
  if (!subgroup_words.empty()) {
    out << "SUBGROUP\n";
    for (const auto& w : subgroup_words) write_word(w);
  }
  return out.str();
}

Presentation from_text(const std::string& text, std::vector<Word>* subgroup_words) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  bool have_rank = false;
  bool in_subgroup = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (!have_rank) {
      if (first != "rank") throw FormatError("expected 'rank <r>' on the first line");
      if (!(ls >> p.rank) || p.rank <= 0) throw FormatError("bad rank");
      std::string extra;
      if (ls >> extra) throw FormatError("trailing tokens after rank");
      have_rank = true;
      continue;
    }
    if (first == "SUBGROUP") {
      std::string extra;
      if (ls >> extra) throw FormatError("trailing tokens after SUBGROUP");
      if (in_subgroup) throw FormatError("duplicate SUBGROUP line");
      if (subgroup_words == nullptr) throw FormatError("unexpected SUBGROUP section");
      in_subgroup = true;
      continue;
    }
    Word w;
    std::istringstream ws(line);
    std::string tok;
    while (ws >> tok) {
      std::size_t used = 0;
      int g = 0;
      try {
        g = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw FormatError("bad generator index '" + tok + "'");
      }
      if (used != tok.size() || g < 0 || g >= p.rank)
        throw FormatError("bad generator index '" + tok + "'");
      w.push_back(g);
    }
    if (in_subgroup)
      subgroup_words->push_back(std::move(w));
    else
      p.relators.push_back(std::move(w));
  }
  if (!have_rank) throw FormatError("missing rank line");
  validate(p);
  return p;
}

CheckResult check_relations(const std::vector<perm::Permutation>& gens, const Presentation& p) {
  if (static_cast<int>(gens.size()) != p.rank)
    throw FormatError("generator count does not match presentation rank");
  CheckResult result;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (!perm::evaluate_word(gens, p.relators[i]).is_identity()) {
      result.ok = false;
      result.first_failing = i;
      return result;
    }
  }
  return result;
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                        std::uint64_t max_cosets, EnumerationOrder order) {
  validate(p);
  for (const auto& w : subgroup_words) validate_word(w, p.rank);
  if (order != EnumerationOrder::Auto) {
    Enumerator e(p, subgroup_words, max_cosets);
    return e.run(order == EnumerationOrder::CellFill ? Strategy::CellFill : Strategy::RelatorFill);
  }
  try {
    Enumerator e(p, subgroup_words, max_cosets);
    return e.run(Strategy::RelatorFill);
  } catch (const CosetLimitExceeded&) {
    // Relator-driven filling can overshoot the budget on presentations whose
    // short consequences hide inside long relators; retry with the tighter
    // cell-at-a-time order before giving up.
    Enumerator e(p, subgroup_words, max_cosets);
    return e.run(Strategy::CellFill);
  }
}

Presentation relators_rank_n_minus_1(const graph::LabeledTree& tree) {
  auto diag = graph::line_graph_diagram(tree);
  Presentation p;
  p.rank = diag.rank();
  p.relators = coxeter_relators(diag);
  append_triangle_relators(p.relators, diag, 0);
  return p;
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
  }
  throw FormatError("bad family");
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    default: throw FormatError(std::string("bad family letter '") + c + "'");
  }
}

Presentation relators_rank_n_minus_2(Family family, const std::vector<perm::Permutation>& gens) {
  if (gens.size() < 4) throw FormatError("rank n-2 instance needs rank >= 4");
  auto diag = graph::coxeter_diagram(gens);
  Presentation p;
  p.rank = diag.rank();
  p.relators = coxeter_relators(diag);
  append_triangle_relators(p.relators, diag, 2);
  const Word a12 = repeated(Word{1, 2}, 3);
  const Word a02 = repeated(Word{0, 2}, 3);
  switch (family) {
    case Family::A:
      p.relators.push_back(repeated(concat({a12, Word{0}}), 3));
      p.relators.push_back(repeated(concat({Word{3}, a12}), 2));
      p.relators.push_back(repeated(Word{0, 1, 2, 1}, 3));
      break;
    case Family::B:
      p.relators.push_back(repeated(concat({Word{0}, a12}), 3));
      p.relators.push_back(repeated(Word{1, 0, 1, 2}, 2));
      p.relators.push_back(repeated(concat({a12, Word{3}}), 2));
      break;
    case Family::C:
      p.relators.push_back(repeated(concat({a02, a12, Word{1}}), 3));
      p.relators.push_back(repeated(concat({a02, a12}), 3));
      p.relators.push_back(repeated(concat({a12, Word{3}}), 2));
      p.relators.push_back(repeated(concat({a02, Word{3}}), 2));
      break;
  }
  return p;
}

CertificationResult certify_presentation(const std::vector<perm::Permutation>& gens,
                                         const Presentation& p, std::uint64_t max_cosets) {
  if (gens.empty()) throw FormatError("no generators");
  CertificationResult result;
  perm::PermGroup group(gens.front().degree(), gens);
  result.model_order = group.order();
  Presentation kept;
  kept.rank = p.rank;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (perm::evaluate_word(gens, p.relators[i]).is_identity())
      kept.relators.push_back(p.relators[i]);
    else
      result.excluded_relators.push_back(i);
  }
  try {
    CosetTable table = todd_coxeter(kept, {}, max_cosets);
    result.index = table.index;
    result.certified =
        table.status == TableStatus::Complete && table.index == result.model_order;
  } catch (const CosetLimitExceeded&) {
    result.inconclusive = true;
  }
  return result;
}

}  // namespace ht::pres
