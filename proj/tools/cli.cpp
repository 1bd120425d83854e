#include "cli.hpp"

#include "butterfly/apollonian.hpp"
#include "butterfly/atlas.hpp"
#include "butterfly/diophantine.hpp"
#include "butterfly/errors.hpp"
#include "butterfly/pythagoras.hpp"
#include "butterfly/scaling.hpp"
#include "butterfly/skeleton.hpp"
#include "butterfly/tree.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

namespace butterfly::cli {
namespace {

using nlohmann::ordered_json;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kLetterHelp =
    "Word syntax: dot-separated letters from CL CR UL UR DL DR TL TR, applied left to right\n"
    "from the root butterfly. TL and TR are the chain (tail) letters:\n"
    "  TL = C_cL  extends a chain leftward, needs q_L > q_R (follows CR, UL, DL)\n"
    "  TR = C_cR  extends a chain rightward, needs q_R > q_L (follows CL, UR, DR)\n"
    "Exit codes: 0 ok, 1 invariant or domain failure, 2 usage error, 3 I/O failure.";

/// Writes to stdout, or to a file when a path is given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw IoFailure("cannot open " + path + " for writing");
    stream_ = &file_;
    path_ = path;
  }

  std::ostream& operator*() { return *stream_; }

  void close() {
    stream_->flush();
    if (!*stream_) throw IoFailure("write failed" + (path_.empty() ? "" : ": " + path_));
    if (file_.is_open()) file_.close();
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  std::string path_;
};

Word word_arg(const std::string& text) {
  try {
    return parse_word(text);
  } catch (const Error& e) {
    throw UsageFailure(e.what());
  }
}

std::optional<Integer> integer_arg(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  try {
    Integer v = parse_integer(text);
    if (v < 1) throw UsageFailure(std::string(flag) + " must be positive");
    return v;
  } catch (const Error&) {
    throw UsageFailure(std::string(flag) + ": not an integer: " + text);
  }
}

DescartesQuadruple quad_arg(const std::string& text) {
  DescartesQuadruple q;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 4) throw UsageFailure("--quad takes four comma-separated integers");
    try {
      q.k[i++] = parse_integer(item);
    } catch (const Error&) {
      throw UsageFailure("--quad: not an integer: " + item);
    }
  }
  if (i != 4) throw UsageFailure("--quad takes four comma-separated integers");
  return q;
}

ordered_json matrix_json(const IntegerMatrix2& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m.rows) rows.push_back({integer_to_json(row[0]), integer_to_json(row[1])});
  return rows;
}

ordered_json quad_json(const DescartesQuadruple& q) {
  ordered_json a = ordered_json::array();
  for (const auto& k : q.k) a.push_back(integer_to_json(k));
  return a;
}

struct ExpandFlags {
  std::size_t depth = 0;
  std::size_t chain_cap = 0;
  std::string max_qc;

  ExpansionLimits limits() const { return {depth, integer_arg(max_qc, "--max-qc"), chain_cap}; }
};

void add_expand_flags(CLI::App* app, ExpandFlags& f) {
  app->add_option("--depth", f.depth, "Maximum tree depth")->required();
  app->add_option("--chain-cap", f.chain_cap, "Longest run of consecutive tail steps")
      ->default_val(0);
  app->add_option("--max-qc", f.max_qc, "Prune nodes whose center denominator exceeds Q");
}

int cmd_expand(const ExpandFlags& f, const std::string& format, const std::string& output,
               std::ostream& out) {
  const auto limits = f.limits();
  Sink sink(output, out);
  if (format == "csv") *sink << csv_header() << '\n';
  expand(limits, [&](const TreeNode& n) {
    *sink << (format == "csv" ? to_csv(n) : to_jsonl(n)) << '\n';
  });
  sink.close();
  return kExitOk;
}

int cmd_node(const std::string& word, std::ostream& out) {
  const Word w = word_arg(word);
  out << to_jsonl(node_at(w)) << '\n';
  return kExitOk;
}

int cmd_chain(const std::string& word, std::size_t steps, std::ostream& out) {
  const Word w = word_arg(word);
  for (const auto& n : chain(node_at(w), steps)) out << to_jsonl(n) << '\n';
  return kExitOk;
}

/// Tallies failed checks; prints each failure on `err`.
struct VerifyTally {
  std::size_t nodes = 0;
  std::size_t failed_nodes = 0;
  std::map<std::string, std::size_t> failures;

  void add(const TreeNode& n, std::ostream& err) {
    ++nodes;
    const auto report = verify_node(n);
    if (report.passed()) return;
    ++failed_nodes;
    for (const auto& c : report.failures()) {
      ++failures[c.name];
      err << "FAIL " << (n.word.empty() ? "(root)" : format_word(n.word)) << ' ' << c.name << ": "
          << c.detail << '\n';
    }
  }

  int finish(std::ostream& out) const {
    ordered_json j;
    j["nodes"] = nodes;
    j["failedNodes"] = failed_nodes;
    j["failures"] = ordered_json::object();
    for (const auto& [name, count] : failures) j["failures"][name] = count;
    out << j.dump() << '\n';
    return failed_nodes == 0 ? kExitOk : kExitInvariant;
  }
};

int cmd_verify(const ExpandFlags& f, const std::string& input, std::ostream& out,
               std::ostream& err) {
  VerifyTally tally;
  if (!input.empty()) {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + input);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      TreeNode n;
      try {
        n = node_from_jsonl(line);
      } catch (const std::exception& e) {
        err << "FAIL line " << lineno << " parse: " << e.what() << '\n';
        ++tally.nodes;
        ++tally.failed_nodes;
        ++tally.failures["parse"];
        continue;
      }
      tally.add(n, err);
    }
    if (in.bad()) throw IoFailure("read failed: " + input);
  } else {
    expand(f.limits(), [&](const TreeNode& n) { tally.add(n, err); });
  }
  return tally.finish(out);
}

ordered_json triple_json(const PythTriple& t) {
  return {{"a", integer_to_json(t.a)}, {"b", integer_to_json(t.b)}, {"c", integer_to_json(t.c)}};
}

int cmd_pyth(std::optional<std::size_t> depth, const std::string& oracle_cmax, std::ostream& out,
             std::ostream& err) {
  const auto cmax = integer_arg(oracle_cmax, "--oracle-cmax");
  if (!depth && !cmax) throw UsageFailure("pyth needs --depth or --oracle-cmax");
  const auto nodes = pythagorean_tree(depth.value_or(SIZE_MAX), cmax);
  if (!cmax) {
    for (const auto& n : nodes) {
      std::string w;
      for (int i : n.word) w += (w.empty() ? "" : ".") + ("H" + std::to_string(i));
      ordered_json j = {{"word", w}};
      j.update(triple_json(n.triple));
      out << j.dump() << '\n';
    }
    return kExitOk;
  }
  const auto oracle = primitive_triple_oracle(*cmax);
  std::map<PythTriple, std::size_t> seen;
  for (const auto& n : nodes) ++seen[normalized(n.triple)];
  std::size_t duplicates = 0, extra = 0, missing = 0;
  for (const auto& [t, count] : seen) {
    if (count > 1) duplicates += count - 1;
    if (!oracle.contains(t)) {
      ++extra;
      err << "extra " << t << '\n';
    }
  }
  for (const auto& t : oracle)
    if (!seen.contains(t)) {
      ++missing;
      err << "missing " << t << '\n';
    }
  ordered_json j = {{"cmax", integer_to_json(*cmax)}, {"tree", nodes.size()},
                    {"oracle", oracle.size()},        {"duplicates", duplicates},
                    {"missing", missing},             {"extra", extra}};
  out << j.dump() << '\n';
  return duplicates + missing + extra == 0 ? kExitOk : kExitInvariant;
}

int cmd_apollonian(const std::string& quad, const std::string& word, bool correspondence,
                   const std::string& target, std::size_t max_length, std::ostream& out) {
  if (!correspondence) {
    if (quad.empty()) throw UsageFailure("apollonian needs --quad or --correspondence");
    const DescartesQuadruple q = quad_arg(quad);
    ApollonianWord w;
    try {
      w = parse_apollonian_word(word);
    } catch (const Error& e) {
      throw UsageFailure(e.what());
    }
    const DescartesQuadruple image = apply_word(w, q);
    ordered_json j = {{"quad", quad_json(q)},
                      {"word", format_apollonian_word(w)},
                      {"image", quad_json(image)},
                      {"descartes", image.satisfies_descartes()}};
    out << j.dump() << '\n';
    return q.satisfies_descartes() == image.satisfies_descartes() ? kExitOk : kExitInvariant;
  }

  std::vector<CorrespondenceTarget> targets;
  if (target.empty() || target == "all") {
    targets = {CorrespondenceTarget::H1, CorrespondenceTarget::H2, CorrespondenceTarget::H3,
               CorrespondenceTarget::UL, CorrespondenceTarget::UR};
  } else if (auto t = parse_correspondence_target(target)) {
    targets = {*t};
  } else {
    throw UsageFailure("unknown correspondence target: " + target);
  }
  bool all_found = true;
  for (const auto t : targets) {
    const auto report = correspondence_search(t, max_length);
    ordered_json conv = ordered_json::array();
    for (const auto& c : report.conventions) conv.push_back(c.describe());
    ordered_json j = {{"target", std::string(to_string(t))},
                      {"samples", report.samples.size()},
                      {"conventions", conv}};
    out << j.dump() << '\n';
    all_found = all_found && !report.conventions.empty();
  }
  return all_found ? kExitOk : kExitInvariant;
}

int cmd_scaling(const std::string& word, std::size_t cf_terms, std::ostream& out) {
  const Word w = word_arg(word);
  const IntegerMatrix2 block = word_block(w);
  const QuadraticSurd s = scaling_exponent(w);
  const ContinuedFraction cf = cf_expansion(s, cf_terms);
  std::ostringstream value;
  value << std::setprecision(17) << s.value();
  ordered_json terms = ordered_json::array();
  for (const auto& a : cf.terms) terms.push_back(integer_to_json(a));
  ordered_json j = {{"word", format_word(w)},
                    {"block", matrix_json(block)},
                    {"trace", integer_to_json(block.trace())},
                    {"exponent", s.str()},
                    {"value", value.str()},
                    {"continuedFraction", cf.str()},
                    {"cfTerms", terms}};
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_wannier(std::int64_t q_max, const std::string& output, std::ostream& out) {
  if (q_max < 2) throw UsageFailure("--qmax must be at least 2");
  const auto lines = wannier_lines(q_max);
  Sink sink(output, out);
  for (const auto& l : lines) {
    ordered_json j = {{"p", integer_to_json(l.flux.num())}, {"q", integer_to_json(l.flux.den())},
                      {"r", integer_to_json(l.r)},          {"sigma", integer_to_json(l.sigma)},
                      {"tau", integer_to_json(l.tau)}};
    *sink << j.dump() << '\n';
  }
  sink.close();
  return kExitOk;
}

std::array<std::string, 8> palette_arg(const std::string& text) {
  std::array<std::string, 8> p;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 8 || item.empty()) throw UsageFailure("--palette takes eight comma-separated colors");
    p[i++] = item;
  }
  if (i != 8) throw UsageFailure("--palette takes eight comma-separated colors");
  return p;
}

int cmd_render(const ExpandFlags& f, const std::string& output, RenderOptions options,
               const std::string& palette, std::ostream& out) {
  if (options.width <= 2 * options.margin || options.height <= 2 * options.margin)
    throw UsageFailure("canvas must be larger than twice the margin");
  if (!palette.empty()) options.palette = palette_arg(palette);
  const auto nodes = expand_all(f.limits());
  const std::string svg = render_svg(nodes, options);
  Sink sink(output, out);
  *sink << svg;
  sink.close();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact butterfly-tree toolkit: addresses, invariants, atlases and skeleton SVGs.",
               "butterfly"};
  app.footer(kLetterHelp);
  app.require_subcommand(1);

  ExpandFlags expand_flags, verify_flags, render_flags;
  std::string format = "jsonl", output, word, input, oracle_cmax, quad, target, palette;
  std::size_t steps = 0, cf_terms = 12, max_length = 3;
  std::optional<std::size_t> pyth_depth;
  std::int64_t q_max = 0;
  bool correspondence = false;
  RenderOptions render_options;

  auto* expand_cmd = app.add_subcommand("expand", "Breadth-first atlas of the tree");
  add_expand_flags(expand_cmd, expand_flags);
  expand_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->default_val("jsonl");
  expand_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* node_cmd = app.add_subcommand("node", "Butterfly at an address, as JSON");
  node_cmd->add_option("--word", word, "Address, e.g. UL.UL")->required();

  auto* chain_cmd = app.add_subcommand("chain", "Successive members of a node's tail");
  chain_cmd->add_option("--word", word, "Address of the chain owner")->required();
  chain_cmd->add_option("--steps", steps, "Number of chain members")->required();

  auto* verify_cmd = app.add_subcommand(
      "verify", "Check every invariant over an expansion or a JSON-lines atlas");
  verify_cmd->add_option("--depth", verify_flags.depth, "Maximum tree depth");
  verify_cmd->add_option("--chain-cap", verify_flags.chain_cap, "Longest tail run")->default_val(0);
  verify_cmd->add_option("--max-qc", verify_flags.max_qc, "Center denominator bound");
  verify_cmd->add_option("--input", input, "Verify this JSON-lines atlas instead");

  auto* pyth_cmd = app.add_subcommand("pyth", "Pythagorean triple tree from (3,4,5)");
  pyth_cmd->add_option("--depth", pyth_depth, "Maximum tree depth");
  pyth_cmd->add_option("--oracle-cmax", oracle_cmax,
                       "Compare the tree with all primitive triples with c <= C");

  auto* apollonian_cmd = app.add_subcommand("apollonian", "Super-Apollonian group actions");
  apollonian_cmd->add_option("--quad", quad, "Curvatures a,b,c,d");
  apollonian_cmd->add_option("--word", word, "Letters S1..S4 and adjoints S1T..S4T, e.g. S1.S2");
  apollonian_cmd->add_flag("--correspondence", correspondence,
                           "Search for words matching tree steps on Ford quadruples");
  apollonian_cmd->add_option("--target", target, "h1, h2, h3, UL, UR or all")->default_val("all");
  apollonian_cmd->add_option("--max-length", max_length, "Longest word searched")->default_val(3);

  auto* scaling_cmd = app.add_subcommand("scaling", "Trace, scaling exponent and continued fraction");
  scaling_cmd->add_option("--word", word, "Address word")->required();
  scaling_cmd->add_option("--cf-terms", cf_terms, "Continued-fraction terms")->default_val(12);

  auto* wannier_cmd = app.add_subcommand("wannier", "Gap lines rho = sigma*phi + tau");
  wannier_cmd->add_option("--qmax", q_max, "Largest flux denominator")->required();
  wannier_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* render_cmd = app.add_subcommand("render", "Skeleton SVG of an expansion");
  add_expand_flags(render_cmd, render_flags);
  render_cmd->add_option("-o,--output", output, "Output file (default: stdout)");
  render_cmd->add_option("--width", render_options.width, "Canvas width")->default_val(800);
  render_cmd->add_option("--height", render_options.height, "Canvas height")->default_val(600);
  render_cmd->add_option("--margin", render_options.margin, "Canvas margin")->default_val(20);
  render_cmd->add_option("--tail-dots", render_options.tail_dots,
                         "Chain members drawn inside each tail triangle")
      ->default_val(3);
  render_cmd->add_option("--palette", palette,
                         "Eight colors in generator order CL,CR,UL,UR,DL,DR,TL,TR");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*expand_cmd) return cmd_expand(expand_flags, format, output, out);
    if (*node_cmd) return cmd_node(word, out);
    if (*chain_cmd) return cmd_chain(word, steps, out);
    if (*verify_cmd) {
      if (input.empty() && verify_cmd->count("--depth") == 0)
        throw UsageFailure("verify needs --depth or --input");
      return cmd_verify(verify_flags, input, out, err);
    }
    if (*pyth_cmd) return cmd_pyth(pyth_depth, oracle_cmax, out, err);
    if (*apollonian_cmd)
      return cmd_apollonian(quad, word, correspondence, target, max_length, out);
    if (*scaling_cmd) return cmd_scaling(word, cf_terms, out);
    if (*wannier_cmd) return cmd_wannier(q_max, output, out);
    if (*render_cmd) return cmd_render(render_flags, output, render_options, palette, out);
  } catch (const UsageFailure& e) {
    err << "butterfly: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoFailure& e) {
    err << "butterfly: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "butterfly: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidArgument ? kExitUsage : kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace butterfly::cli
