// Command-line front end: enumeration, verification, presentation
// certification, structural screening, and DOT export.
//
// Exit codes:
//   0   success
//   1   unreadable or malformed input (file, permutation text, generator set)
//   2   verification or screening failed
//   3   a coset or chamber limit was exhausted
//   4   presentation certification inconclusive
//   64  semantically invalid flag combination or out-of-range argument
// CLI11 reports malformed command lines with its own codes (> 100).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classify/classify.hpp"

namespace {

using namespace ht;
using perm::Permutation;
using perm::Point;

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kFailed = 2;
constexpr int kResource = 3;
constexpr int kInconclusive = 4;
constexpr int kUsage = 64;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One permutation per line in 0-based cycle notation; '#' starts a comment.
// The degree is the largest moved point plus one unless a larger one is given.
std::vector<Permutation> read_generator_file(const std::string& path, Point degree_override) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  if (lines.empty()) throw InputError(path + " contains no permutations");
  Point degree = 0;
  for (const auto& text : lines)
    degree = std::max(degree, Permutation::min_degree_of_cycles(text));
  if (degree_override > 0) {
    if (degree_override < degree)
      throw InputError(path + " moves points beyond the requested degree");
    degree = degree_override;
  }
  std::vector<Permutation> gens;
  for (const auto& text : lines) gens.push_back(Permutation::parse_cycles(text, degree));
  return gens;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

std::string word_text(const pres::Word& word) {
  std::string text;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) text += ' ';
    text += std::to_string(word[i]);
  }
  return text;
}

struct CommonOptions {
  int n = 0;
  int jobs = 1;
  std::uint64_t coset_limit = 1'000'000;
  std::uint64_t chamber_limit = 10'000'000;
  std::string out;
};

int cmd_enumerate(const CommonOptions& opt, const std::string& rank) {
  const bool corank_one = rank == "n-1";
  if (corank_one && (opt.n < 7 || opt.n > 12))
    throw UsageError("--rank n-1 supports 7 <= n <= 12");
  if (!corank_one && (opt.n < 9 || opt.n > 12))
    throw UsageError("--rank n-2 supports 9 <= n <= 12");

  cls::ClassificationResult res = corank_one ? cls::enumerate_rank_n_minus_1(opt.n, opt.jobs)
                                             : cls::enumerate_rank_n_minus_2(opt.n, opt.jobs);
  std::string text;
  for (const auto& inst : res.instances) text += inst.to_json().dump() + "\n";
  text += res.summary_json().dump() + "\n";
  write_output(opt.out, text);
  // Edge transposition trees must all verify; dropped family attachments are
  // part of the classification, not failures.
  if (corank_one && res.failed > 0) return kFailed;
  return kOk;
}

int cmd_verify(const CommonOptions& opt, const std::string& path) {
  auto gens = read_generator_file(path, static_cast<Point>(opt.n));
  check::Candidate cand(gens.front().degree(), gens);

  auto c_report = check::check_recursive(cand);
  std::vector<int> transitive;
  for (int i = 0; i < cand.rank(); ++i)
    if (cand.maximal_parabolic(i).is_transitive()) transitive.push_back(i);
  geom::HypertopeOptions hopt;
  hopt.coset_limit = static_cast<std::size_t>(opt.coset_limit);
  hopt.chamber_limit = opt.chamber_limit;
  auto h_report = geom::certify_regular_hypertope(gens, hopt);

  nlohmann::json j{{"degree", cand.degree()},
                   {"rank", cand.rank()},
                   {"order", cand.group().order()},
                   {"c_group", c_report.to_json()},
                   {"transitive_parabolics", transitive},
                   {"hypertope", h_report.to_json()}};
  write_output(opt.out, j.dump() + "\n");
  return c_report.is_c_group && h_report.is_regular_hypertope() ? kOk : kFailed;
}

int cmd_present(const CommonOptions& opt, const std::string& path, const std::string& family_letter) {
  std::vector<Permutation> gens;
  std::optional<pres::Family> family;
  if (!family_letter.empty()) family = pres::family_from_letter(family_letter.front());

  if (!path.empty()) {
    gens = read_generator_file(path, static_cast<Point>(opt.n));
  } else if (family) {
    if (opt.n < 9 || opt.n > 12) throw UsageError("--family without a file needs --n in 9..12");
    graph::UnlabeledTree tail;
    tail.n = static_cast<Point>(opt.n - 3);
    for (Point v = 0; v + 1 < tail.n; ++v) tail.edges.emplace_back(v, v + 1);
    gens = cls::build_family_instance(*family, tail, 0).gens;
  } else {
    throw UsageError("present needs a generator file or --family");
  }

  pres::Presentation p;
  if (family) {
    p = pres::relators_rank_n_minus_2(*family, gens);
  } else {
    graph::RepGraph g = graph::RepGraph::from_generators(gens);
    if (!g.is_tree() || g.edges().size() != static_cast<std::size_t>(g.rank()))
      throw UsageError("generators are not an edge-labeled tree; pass --family");
    graph::LabeledTree tree{g.vertex_count(), g.edges()};
    p = pres::relators_rank_n_minus_1(tree);
  }

  auto cert = pres::certify_presentation(gens, p, opt.coset_limit);
  nlohmann::json relators = nlohmann::json::array();
  for (const auto& word : p.relators) relators.push_back(word_text(word));
  nlohmann::json excluded = nlohmann::json::array();
  for (auto idx : cert.excluded_relators) excluded.push_back(idx);
  nlohmann::json j{{"relators", relators},
                   {"certified", cert.certified},
                   {"inconclusive", cert.inconclusive},
                   {"model_order", cert.model_order},
                   {"excluded_relators", excluded}};
  if (!cert.inconclusive) j["index"] = cert.index;
  write_output(opt.out, j.dump() + "\n");
  if (cert.certified) return kOk;
  return cert.inconclusive ? kInconclusive : kFailed;
}

int cmd_screen(const CommonOptions& opt, const std::string& path) {
  auto gens = read_generator_file(path, static_cast<Point>(opt.n));
  try {
    auto rep = cls::structural_screen(gens);
    write_output(opt.out, rep.to_json().dump() + "\n");
    return rep.all_ok() ? kOk : kFailed;
  } catch (const graph::NoFractureError& e) {
    nlohmann::json j{{"no_fracture", true}, {"blocked_labels", e.blocked_labels},
                     {"message", e.what()}};
    write_output(opt.out, j.dump() + "\n");
    return kFailed;
  }
}

int cmd_export_dot(const CommonOptions& opt, const std::string& path, bool diagram) {
  auto gens = read_generator_file(path, static_cast<Point>(opt.n));
  if (diagram) {
    write_output(opt.out, graph::coxeter_diagram(gens).to_dot());
    return kOk;
  }
  graph::RepGraph g = graph::RepGraph::from_generators(gens);
  std::vector<graph::Edge> dashed;
  try {
    dashed = graph::fracture_graph(gens).omitted;
  } catch (const graph::NoFractureError&) {
    // No fracture graph; emit the plain representation graph.
  }
  write_output(opt.out, g.to_dot(dashed));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"C-groups of corank one and two for the symmetric group"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string rank, path, family_letter;
  bool diagram = false;

  auto add_common = [&opt](CLI::App* cmd, bool with_limits) {
    cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", opt.out, "output file (default stdout)");
    if (with_limits) {
      cmd->add_option("--coset-limit", opt.coset_limit)->check(CLI::PositiveNumber);
      cmd->add_option("--chamber-limit", opt.chamber_limit)->check(CLI::PositiveNumber);
    }
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate verified instances as JSON lines");
  enumerate->add_option("--n", opt.n, "number of points")->required();
  enumerate->add_option("--rank", rank, "n-1 or n-2")
      ->required()
      ->check(CLI::IsMember({"n-1", "n-2"}));
  add_common(enumerate, false);

  CLI::App* verify = app.add_subcommand("verify", "verify a generator file as a C-group and hypertope");
  verify->add_option("file", path, "generator file")->required();
  verify->add_option("--n", opt.n, "degree override");
  add_common(verify, true);

  CLI::App* present = app.add_subcommand("present", "certify a presentation by coset enumeration");
  present->add_option("file", path, "generator file");
  present->add_option("--family", family_letter, "family letter A, B or C")
      ->check(CLI::IsMember({"A", "B", "C"}));
  present->add_option("--n", opt.n, "number of points");
  add_common(present, true);

  CLI::App* screen = app.add_subcommand("screen", "structural screen of a generator file");
  screen->add_option("file", path, "generator file")->required();
  screen->add_option("--n", opt.n, "degree override");
  add_common(screen, false);

  CLI::App* export_dot = app.add_subcommand("export-dot", "Graphviz output for a generator file");
  export_dot->add_option("file", path, "generator file")->required();
  export_dot->add_flag("--diagram", diagram, "Coxeter diagram instead of the representation graph");
  export_dot->add_option("--n", opt.n, "degree override");
  add_common(export_dot, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) return cmd_enumerate(opt, rank);
    if (verify->parsed()) return cmd_verify(opt, path);
    if (present->parsed()) {
      // Certification needs more room than coset comparisons.
      if (present->count("--coset-limit") == 0) opt.coset_limit = 5'000'000;
      return cmd_present(opt, path, family_letter);
    }
    if (screen->parsed()) return cmd_screen(opt, path);
    return cmd_export_dot(opt, path, diagram);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const pres::CosetLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const ht::geom::ChamberOverflow& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
