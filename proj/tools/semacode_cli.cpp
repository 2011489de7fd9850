#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semacode/anbn.hpp"
#include "semacode/congruence.hpp"
#include "semacode/graph.hpp"
#include "semacode/projective.hpp"
#include "semacode/reset_search.hpp"

using json = nlohmann::ordered_json;
using namespace semacode;

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

std::string slurp(const std::string& path) {
  auto in = open_input(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& op, const std::string& input, const json& params, const json& verdict) {
  json rec;
  rec["schema"] = 1;
  rec["op"] = op;
  rec["input"] = input;
  rec["params"] = params;
  rec["verdict"] = verdict;
  std::cout << rec.dump() << '\n';
}

std::vector<std::string> formatted(const Alphabet& a, const WordSet& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(a.format(w));
  return out;
}

std::string bracketed(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "]";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// ---- tm-run

struct TmRunArgs {
  std::string machine;
  std::string tape;
  std::size_t max_steps = 10000;
};

int tm_run(const TmRunArgs& args, bool as_json) {
  auto in = open_input(args.machine);
  const TuringMachine t = read_machine(in);
  const Word input = args.tape.empty() ? Word{} : t.input().parse(args.tape);
  Tape tape(t, initial_configuration(t, input));
  std::vector<std::string> trace{t.omega().format(tape.word())};
  std::size_t steps = 0;
  while (steps < args.max_steps && tape.step()) {
    ++steps;
    trace.push_back(t.omega().format(tape.word()));
  }
  std::string result;
  if (!tape.halted())
    result = "not-stabilized";
  else
    result = t.is_final(tape.state()) ? "halted-final" : "halted-nonfinal";
  const std::string state = t.states().name(tape.state());
  if (as_json) {
    emit("tm-run", args.machine, {{"tape", args.tape}, {"max_steps", args.max_steps}},
         {{"result", result}, {"state", state}, {"steps", steps}, {"trace", trace}});
    return kOk;
  }
  std::cout << "# machine: " << args.machine << " tape: " << (args.tape.empty() ? "@eps" : args.tape)
            << " max-steps: " << args.max_steps << '\n';
  for (std::size_t i = 0; i < trace.size(); ++i) std::cout << i << ": " << trace[i] << '\n';
  std::cout << "verdict: " << result << " (" << state << ") after " << steps << " steps\n";
  return kOk;
}

// ---- tm-resets

struct TmResetsArgs {
  std::string machine;
  std::size_t len = 2;
  std::size_t ctx = 2;
  std::size_t steps = 50;
  std::string side = "right";
  std::string oracle;
};

int tm_resets(const TmResetsArgs& args, bool as_json) {
  auto in = open_input(args.machine);
  const TuringMachine t = read_machine(in);
  const ResetSide side = args.side == "left" ? ResetSide::left : ResetSide::right;
  std::optional<ClosedFormOracle> oracle;
  if (!args.oracle.empty()) {
    if (args.oracle != "builtin-anbn") throw Error("unknown oracle '" + args.oracle + "'");
    oracle = example_oracle(t);
  }
  const SearchBounds bounds{args.ctx, args.steps};
  const json params = {{"len", args.len}, {"ctx", args.ctx}, {"steps", args.steps}, {"side", args.side},
                       {"oracle", args.oracle}};
  if (!as_json)
    std::cout << "# machine: " << args.machine << " side: " << args.side << " len: " << args.len
              << " ctx: " << args.ctx << " steps: " << args.steps
              << " oracle: " << (oracle ? oracle->name : "none") << '\n';
  std::size_t counts[3] = {0, 0, 0};
  std::size_t disagreements = 0;
  for (const auto& w : words_upto(t.omega_size(), args.len)) {
    const auto v = is_reset_bounded(side, t, w, bounds);
    ++counts[static_cast<int>(v.kind)];
    json rec = {{"word", t.omega().format(w)}, {"verdict", to_string(v.kind)}};
    std::string line = t.omega().format(w) + "\t" + to_string(v.kind);
    if (oracle) {
      const bool nonreset = oracle->nonreset(side, w);
      const bool agree = !((v.kind == ResetVerdict::Kind::non_reset && !nonreset) ||
                           (v.kind == ResetVerdict::Kind::reset && nonreset));
      if (!agree) ++disagreements;
      rec["oracle"] = nonreset ? "NonReset" : "Reset";
      rec["agree"] = agree;
      line += std::string("\toracle:") + (nonreset ? "NonReset" : "Reset") + (agree ? "" : "\tDISAGREE");
    }
    if (v.witness) rec["witness_steps"] = v.witness->steps;
    if (as_json)
      emit("tm-resets", args.machine, params, rec);
    else
      std::cout << line << '\n';
  }
  const auto reset = counts[static_cast<int>(ResetVerdict::Kind::reset)];
  const auto non = counts[static_cast<int>(ResetVerdict::Kind::non_reset)];
  const auto unknown = counts[static_cast<int>(ResetVerdict::Kind::unknown)];
  if (as_json)
    emit("tm-resets.summary", args.machine, params,
         {{"reset", reset}, {"nonreset", non}, {"unknown", unknown}, {"disagreements", disagreements}});
  else
    std::cout << "summary: reset " << reset << " nonreset " << non << " unknown " << unknown << " disagreements "
              << disagreements << '\n';
  return disagreements ? kViolations : kOk;
}

// ---- graph-analyze

struct GraphArgs {
  std::string graph;
  std::size_t k = 1;
  std::size_t reset_cap = 3;
};

int graph_analyze(const GraphArgs& args, bool as_json) {
  auto in = open_input(args.graph);
  const AGraph g = read_graph(in);
  const bool dfa = g.is_deterministic() && g.is_complete();
  const auto cert = minus_omega_certificates(g);
  json v = {{"vertices", g.vertex_count()},
            {"deterministic", g.is_deterministic()},
            {"complete", g.is_complete()},
            {"strongly_connected", g.is_strongly_connected()},
            {"minus_omega_trim", cert.trim},
            {"minus_omega_deterministic", cert.deterministic},
            {"minus_omega_complete", cert.complete},
            {"minus_omega_reset_graph", cert.reset_graph()}};
  std::vector<std::string> resets;
  std::vector<std::vector<std::string>> mu_blocks;
  if (dfa) {
    v["k_reset"] = is_k_reset(g, args.k);
    resets = formatted(g.alphabet(), reset_words_upto(g, args.reset_cap));
    v["resets"] = resets;
    const Partition part = mu_closure(g, args.k);
    for (Vertex p = 0; p < g.vertex_count(); ++p) {
      if (part[p] >= mu_blocks.size()) mu_blocks.resize(part[p] + 1);
      mu_blocks[part[p]].push_back(g.name(p));
    }
    v["mu_closure"] = mu_blocks;
  }
  if (as_json) {
    emit("graph-analyze", args.graph, {{"k", args.k}, {"reset_cap", args.reset_cap}}, v);
    return kOk;
  }
  std::cout << "# graph: " << args.graph << " k: " << args.k << " reset-cap: " << args.reset_cap << '\n';
  std::cout << "vertices: " << g.vertex_count() << '\n'
            << "deterministic: " << yes_no(g.is_deterministic()) << '\n'
            << "complete: " << yes_no(g.is_complete()) << '\n'
            << "strongly-connected: " << yes_no(g.is_strongly_connected()) << '\n'
            << "minus-omega-trim: " << yes_no(cert.trim) << '\n'
            << "minus-omega-deterministic: " << yes_no(cert.deterministic) << '\n'
            << "minus-omega-complete: " << yes_no(cert.complete) << '\n'
            << "minus-omega-reset-graph: " << yes_no(cert.reset_graph()) << '\n';
  if (!dfa) {
    std::cout << "k-reset: n/a (not deterministic and complete)\n";
    return kOk;
  }
  std::cout << "k-reset: " << yes_no(v["k_reset"].get<bool>()) << '\n';
  std::cout << "resets<=" << args.reset_cap << ": " << bracketed(resets) << '\n';
  std::cout << "mu-closure:";
  for (const auto& b : mu_blocks) std::cout << " {" << bracketed(b).substr(1, bracketed(b).size() - 2) << "}";
  std::cout << '\n';
  return kOk;
}

// ---- cong-classify

struct CongArgs {
  std::string file;
  std::string fixture;
  std::size_t cap = 6;
  std::size_t max_k = 6;
  std::size_t res_cap = 2;
};

CongruenceRepr load_congruence(const CongArgs& args) {
  if (!args.fixture.empty()) {
    auto fx = examples_fixtures();
    auto it = fx.find(args.fixture);
    if (it == fx.end()) throw Error("unknown fixture '" + args.fixture + "'");
    return it->second;
  }
  const std::string text = slurp(args.file);
  std::istringstream in(text);
  bool partition = false;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t");
    if (pos != std::string::npos && line.compare(pos, 2, "k:") == 0) partition = true;
  }
  std::istringstream again(text);
  if (partition) return HatLift{read_partition(again)};
  return SpecialFromIdeal{read_ideal(again)};
}

std::optional<std::pair<Word, Word>> comparable_pair(const WordSet& s) {
  for (auto u = s.begin(); u != s.end(); ++u)
    for (auto v = std::next(u); v != s.end(); ++v)
      if (suffix_leq(*u, *v)) return std::make_pair(*u, *v);
  return std::nullopt;
}

int cong_classify(const CongArgs& args, bool as_json) {
  const CongruenceRepr repr = load_congruence(args);
  const Alphabet& a = repr_alphabet(repr);
  const std::string input = args.fixture.empty() ? args.file : "fixture:" + args.fixture;
  const auto cls = classify(repr, args.cap, args.max_k);
  const auto lam = lambda_sets(repr, args.cap);
  const WordSet res = res_set(repr, args.res_cap);
  const auto clash = comparable_pair(lam.lambda);
  std::string reason;
  if (cls.special == Truth::yes) {
    reason = "Lambda contained in Res";
  } else if (clash) {
    reason = "Lambda not suffix code {" + a.format(clash->first) + ", " + a.format(clash->second) + "}";
  } else {
    for (const auto& w : lam.lambda)
      if (!res_set(repr, w.size()).count(w)) {
        reason = "Lambda not contained in Res: " + a.format(w);
        break;
      }
    if (reason.empty()) reason = "path condition fails";
  }
  std::vector<std::string> under, over;
  std::string bounds_note;
  try {
    auto [lo, hi] = underline_overline(repr, args.cap);
    under = formatted(a, lo.generators());
    over = formatted(a, hi.generators());
  } catch (const Error& e) {
    bounds_note = e.what();
  }
  json v = {{"kind", repr_kind(repr)},
            {"open", cls.open},
            {"lambda", formatted(a, lam.lambda)},
            {"lambda_over_cap", lam.lcs_over_cap.size()},
            {"res", formatted(a, res)},
            {"special", to_string(cls.special)},
            {"special_lambda", to_string(cls.special_lambda)},
            {"special_paths", to_string(cls.special_paths)},
            {"reason", reason},
            {"profinite_to_k", cls.profinite_to_k},
            {"k_checked", cls.k_checked}};
  if (bounds_note.empty()) {
    v["underline"] = under;
    v["overline"] = over;
  } else {
    v["underline_overline"] = bounds_note;
  }
  const json params = {{"cap", args.cap}, {"max_k", args.max_k}, {"res_cap", args.res_cap}};
  if (as_json) {
    emit("cong-classify", input, params, v);
    return kOk;
  }
  std::cout << "# input: " << input << " kind: " << repr_kind(repr) << " cap: " << args.cap
            << " max-k: " << args.max_k << " res-cap: " << args.res_cap << '\n';
  std::cout << "open: " << yes_no(cls.open) << '\n';
  std::cout << "Lambda: " << bracketed(formatted(a, lam.lambda));
  if (!lam.lcs_over_cap.empty()) std::cout << " (" << lam.lcs_over_cap.size() << " classes with lcs longer than cap)";
  std::cout << '\n';
  std::cout << "Res<=" << args.res_cap << ": " << bracketed(formatted(a, res)) << '\n';
  std::cout << "special: " << to_string(cls.special) << ", reason: " << reason << '\n';
  std::cout << "profinite: " << yes_no(cls.profinite_to_k) << " (K = " << cls.k_checked << ")\n";
  if (bounds_note.empty()) {
    std::cout << "underline: " << bracketed(under) << '\n';
    std::cout << "overline: " << bracketed(over) << '\n';
  } else {
    std::cout << "underline/overline: " << bounds_note << '\n';
  }
  return kOk;
}

// ---- proj-verify

struct ProjArgs {
  std::string sequence;
  std::size_t cap = 6;
};

int proj_verify(const ProjArgs& args, bool as_json) {
  auto in = open_input(args.sequence);
  const IdealSequence seq = read_sequence(in);
  const auto report = verify_projective_system(seq, args.cap);
  std::vector<std::size_t> sizes;
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    try {
      sizes.push_back(code_at(seq, k, args.cap).size());
    } catch (const Error&) {
      sizes.push_back(0);
    }
  }
  if (as_json) {
    emit("proj-verify", args.sequence, {{"cap", args.cap}},
         {{"levels", seq.size()},
          {"code_sizes", sizes},
          {"maps_checked", report.maps_checked},
          {"violations", report.violations},
          {"unverified", report.unverified}});
  } else {
    std::cout << "# sequence: " << args.sequence << " cap: " << args.cap << '\n';
    std::cout << "levels: " << seq.size() << '\n';
    for (std::size_t k = 0; k < sizes.size(); ++k) std::cout << "level " << k + 1 << " code size: " << sizes[k] << '\n';
    std::cout << "maps checked: " << report.maps_checked << '\n';
    std::cout << "violations: " << report.violations.size() << '\n';
    for (const auto& v : report.violations) std::cout << "  " << v << '\n';
    std::cout << "unverified: " << report.unverified.size() << '\n';
    for (const auto& v : report.unverified) std::cout << "  " << v << '\n';
  }
  return report.ok() ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resets, semaphore codes and right congruences on left-infinite words"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit json-lines records");

  TmRunArgs run;
  auto* c_run = app.add_subcommand("tm-run", "Run a Turing machine from its initial configuration");
  c_run->add_option("machine", run.machine, "Machine file")->required();
  c_run->add_option("--tape", run.tape, "Input word (empty for ε)");
  c_run->add_option("--max-steps", run.max_steps, "Step budget");

  TmResetsArgs resets;
  auto* c_res = app.add_subcommand("tm-resets", "Bounded reset search over all short Ω-words");
  c_res->add_option("machine", resets.machine, "Machine file")->required();
  c_res->add_option("--len", resets.len, "Maximal word length");
  c_res->add_option("--ctx", resets.ctx, "Maximal context length");
  c_res->add_option("--steps", resets.steps, "Maximal number of moves");
  c_res->add_option("--side", resets.side, "right or left")->check(CLI::IsMember({"right", "left"}));
  c_res->add_option("--oracle", resets.oracle, "Closed form to compare against (builtin-anbn)");

  GraphArgs graph;
  auto* c_graph = app.add_subcommand("graph-analyze", "Properties of a finite A-graph");
  c_graph->add_option("graph", graph.graph, "Graph file")->required();
  c_graph->add_option("--k", graph.k, "k for k-reset and mu closure");
  c_graph->add_option("--reset-cap", graph.reset_cap, "Longest reset word listed");

  CongArgs cong;
  auto* c_cong = app.add_subcommand("cong-classify", "Classify a right congruence on left-infinite words");
  c_cong->add_option("file", cong.file, "Partition file or two-sided ideal file");
  c_cong->add_option("--fixture", cong.fixture, "Built-in example instead of a file");
  c_cong->add_option("--cap", cong.cap, "Length cap for Lambda and Res");
  c_cong->add_option("--max-k", cong.max_k, "Largest k for the profinite check");
  c_cong->add_option("--res-cap", cong.res_cap, "Longest reset word listed");

  ProjArgs proj;
  auto* c_proj = app.add_subcommand("proj-verify", "Check the projective system of an ideal sequence");
  c_proj->add_option("sequence", proj.sequence, "Sequence file")->required();
  c_proj->add_option("--cap", proj.cap, "Length cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*c_run) return tm_run(run, as_json);
    if (*c_res) return tm_resets(resets, as_json);
    if (*c_graph) return graph_analyze(graph, as_json);
    if (*c_cong) {
      if (cong.file.empty() == cong.fixture.empty()) throw Error("give either a file or --fixture");
      return cong_classify(cong, as_json);
    }
    if (*c_proj) return proj_verify(proj, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
