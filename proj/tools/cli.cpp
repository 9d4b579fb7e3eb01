#include "cli.hpp"

#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rotinv/rotinv.hpp"

namespace rotinv::cli {

namespace {

struct Config {
  std::string subcommand;
  int n = 0;
  std::string metric;
  std::optional<int> vectors;
  std::optional<int> symmetric;
  std::optional<int> antisymmetric;
  std::optional<int> general;
  std::string theorem;
  std::string data;
  std::string expr;
  int trials = 20;
  std::uint64_t seed = 0;
  double tol = kDefaultRankTol;
  std::string output = "table";
  bool prune = false;
};

// Flag validation failures; reported with exit code 2.
struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string full_precision(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

bool has_counts(const Config& c) {
  return c.vectors || c.symmetric || c.antisymmetric || c.general;
}

MetricSignature resolve_metric(const Config& c, int n) {
  if (c.metric.empty()) return MetricSignature::euclidean(n);
  MetricSignature m = MetricSignature::parse(c.metric);
  if (m.dimension() != n) {
    throw FlagError("--metric has " + std::to_string(m.dimension()) + " signs but -n is " +
                    std::to_string(n));
  }
  return m;
}

void require_dimension(const Config& c) {
  if (c.n < 2) throw FlagError(c.subcommand + ": -n (dimension >= 2) is required");
}

SystemSpec spec_from_counts(const Config& c) {
  require_dimension(c);
  return SystemSpec::make(c.n, resolve_metric(c, c.n), c.vectors.value_or(0),
                          c.symmetric.value_or(0), c.antisymmetric.value_or(0),
                          c.general.value_or(0));
}

// Theorem candidates, restricted to an explicit spec when counts are given.
CandidateBasis selected_basis(const Config& c) {
  if (c.theorem.empty()) throw FlagError(c.subcommand + ": --theorem is required");
  const Theorem t = parse_theorem(c.theorem);
  if (t == Theorem::Poincare) {
    if (c.n != 0 && c.n != 4) throw FlagError("--theorem poincare is fixed to -n 4");
    if (!c.metric.empty() && c.metric != "+---") {
      throw FlagError("--theorem poincare is fixed to --metric +---");
    }
    if (has_counts(c)) throw FlagError("--theorem poincare does not take object counts");
    return candidate_basis(t, 4, MetricSignature::minkowski(4));
  }
  require_dimension(c);
  CandidateBasis b = candidate_basis(t, c.n, resolve_metric(c, c.n));
  if (has_counts(c)) {
    b.spec = spec_from_counts(c);
    b.exprs = restrict_to(b.exprs, b.spec.layout());
    b.label += " (restricted)";
  }
  return b;
}

std::string describe(const SystemSpec& s) {
  std::ostringstream os;
  os << "n=" << s.n << " metric=" << s.metric.to_string() << " vectors=" << s.n_vectors
     << " symmetric=" << s.n_symmetric << " antisymmetric=" << s.n_antisymmetric
     << " general=" << s.n_general;
  return os.str();
}

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(18) << key << value << '\n';
}

int cmd_count(const Config& c, std::ostream& out) {
  const SystemSpec spec = spec_from_counts(c);
  const RankOptions opts{c.trials, c.seed, c.tol};
  const int vars = static_cast<int>(spec.variable_count());
  const int rank = generic_rank(spec, opts);
  const int oracle = vars - rank;
  const auto claim = published_count(spec);
  std::string flag = "none";
  if (claim) flag = claim->value == oracle ? "agrees" : "DISCREPANCY";

  if (c.output == "json") {
    nlohmann::json j;
    j["spec"] = spec_to_json(spec);
    j["n_variables"] = vars;
    j["action_rank"] = rank;
    j["expected_count"] = oracle;
    j["paper_claimed_count"] =
        claim ? nlohmann::json{{"value", claim->value}, {"source", claim->source}} : nlohmann::json();
    j["flag"] = flag;
    j["tool_version"] = tool_version();
    out << j.dump(2) << '\n';
    return kOk;
  }
  print_row(out, "system", describe(spec));
  print_row(out, "variables", std::to_string(vars));
  print_row(out, "generic rank", std::to_string(rank));
  print_row(out, "invariants", std::to_string(oracle) + " (oracle)");
  if (claim) {
    print_row(out, "published", std::to_string(claim->value) + " [" + claim->source + "]");
  } else {
    print_row(out, "published", "-");
  }
  print_row(out, "flag", flag);
  return kOk;
}

int cmd_basis(const Config& c, std::ostream& out) {
  const CandidateBasis b = selected_basis(c);
  std::vector<InvariantExpr> exprs = b.exprs;
  if (c.prune && !exprs.empty()) {
    exprs = greedy_prune(exprs, sample_systems(b.spec, c.trials, c.seed), c.tol);
  }
  if (c.output == "json") {
    nlohmann::json j;
    j["theorem"] = c.theorem;
    j["spec"] = spec_to_json(b.spec);
    j["pruned"] = c.prune;
    j["expressions"] = nlohmann::json::array();
    for (const auto& e : exprs) j["expressions"].push_back(render(e));
    j["tool_version"] = tool_version();
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "# " << b.label << '\n';
  out << "# " << describe(b.spec) << (c.prune ? " (pruned)" : "") << '\n';
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    out << std::right << std::setw(4) << i + 1 << "  " << render(exprs[i]) << '\n';
  }
  return kOk;
}

int cmd_eval(const Config& c, std::ostream& out) {
  if (c.data.empty()) throw FlagError("eval: --data is required");
  if (c.expr.empty() == c.theorem.empty()) {
    throw FlagError("eval: give exactly one of --expr or --theorem");
  }
  std::vector<InvariantExpr> exprs;
  if (!c.expr.empty()) {
    try {
      exprs.push_back(parse_expr(c.expr));
    } catch (const Error& e) {
      throw FlagError(std::string("--expr: ") + e.what());
    }
  }
  // Validate flags before reading the file.
  std::optional<Theorem> theorem;
  if (!c.theorem.empty()) theorem = parse_theorem(c.theorem);

  const TensorSystem system = load_system(c.data);
  if (theorem) {
    exprs = restrict_to(candidate_basis(*theorem, system.dimension(), system.metric()).exprs,
                        system.layout());
  }

  std::vector<std::pair<std::string, double>> values;
  for (const auto& e : exprs) values.emplace_back(render(e), eval(e, system));

  if (c.output == "json") {
    nlohmann::json j;
    j["values"] = nlohmann::json::array();
    for (const auto& [name, v] : values) j["values"].push_back({{"expr", name}, {"value", v}});
    j["tool_version"] = tool_version();
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::size_t width = 4;
  for (const auto& [name, v] : values) width = std::max(width, name.size());
  for (const auto& [name, v] : values) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << name << full_precision(v) << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const CandidateBasis b = selected_basis(c);
  VerifyOptions opts;
  opts.trials = c.trials;
  opts.seed = c.seed;
  opts.tol = c.tol;
  const BasisReport r = verify_basis(b.spec, b.exprs, opts, b.notes, b.label);

  if (c.output == "json") {
    out << report_to_json(r).dump(2) << '\n';
    return kOk;
  }
  print_row(out, "basis", r.label);
  print_row(out, "system", describe(r.spec));
  print_row(out, "variables", std::to_string(r.n_variables));
  print_row(out, "action rank", std::to_string(r.action_rank));
  print_row(out, "expected count", std::to_string(r.expected_count));
  if (r.paper_claimed_count) {
    const bool agrees = r.paper_claimed_count->value == r.expected_count;
    print_row(out, "published count", std::to_string(r.paper_claimed_count->value) +
                                          (agrees ? " (agrees)" : " (DISCREPANCY)"));
  } else {
    print_row(out, "published count", "-");
  }
  print_row(out, "candidates", std::to_string(r.candidate_size));
  print_row(out, "jacobian rank", std::to_string(r.jacobian_rank));
  print_row(out, "verdict", std::string(to_string(r.verdict)) + " (" +
                                std::to_string(r.pruned_basis.size()) + "/" +
                                std::to_string(r.expected_count) + ")");
  print_row(out, "invariance", "max infinitesimal " + short_sci(r.invariance.max_infinitesimal) +
                                   ", max finite " + short_sci(r.invariance.max_finite));
  out << "pruned basis:\n";
  for (std::size_t i = 0; i < r.pruned_basis.size(); ++i) {
    out << std::right << std::setw(4) << i + 1 << "  " << r.pruned_basis[i] << '\n';
  }
  if (!r.discrepancy_notes.empty()) {
    out << "notes:\n";
    for (const auto& note : r.discrepancy_notes) out << "  - " << note << '\n';
  }
  out << "tool version " << tool_version() << '\n';
  return kOk;
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("-n,--dimension", c.n, "Dimension of the space")->check(CLI::Range(2, 64));
  sub->add_option("--metric", c.metric, "Sign string, e.g. ++++ or +---");
  sub->add_option("--trials", c.trials, "Random points for rank computations")
      ->check(CLI::Range(1, 100000));
  sub->add_option("--seed", c.seed, "Seed for the random points");
  sub->add_option("--tol", c.tol, "Relative numerical-rank tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--output", c.output, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
}

void add_counts(CLI::App* sub, Config& c) {
  sub->add_option("--vectors", c.vectors, "Number of vectors")->check(CLI::NonNegativeNumber);
  sub->add_option("--symmetric", c.symmetric, "Number of symmetric tensors")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--antisymmetric", c.antisymmetric, "Number of antisymmetric tensors")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--general", c.general, "Number of general rank-2 tensors")
      ->check(CLI::NonNegativeNumber);
}

void add_theorem(CLI::App* sub, Config& c) {
  sub->add_option("--theorem", c.theorem, "1, 2, 3 or poincare")
      ->check(CLI::IsMember({"1", "2", "3", "poincare"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Functional bases of rotation-group invariants for vectors and rank-2 tensors",
               "rotinv"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count functionally independent invariants");
  add_common(count, c);
  add_counts(count, c);

  auto* basis = app.add_subcommand("basis", "List candidate basis expressions");
  add_common(basis, c);
  add_counts(basis, c);
  add_theorem(basis, c);
  basis->add_flag("--prune", c.prune, "Keep only functionally independent expressions");

  auto* evalc = app.add_subcommand("eval", "Evaluate expressions on a system file");
  add_common(evalc, c);
  add_theorem(evalc, c);
  evalc->add_option("--data", c.data, "TensorSystem JSON file");
  evalc->add_option("--expr", c.expr, "Single expression, e.g. \"A . A\"");

  auto* verify = app.add_subcommand("verify", "Full basis report");
  add_common(verify, c);
  add_counts(verify, c);
  add_theorem(verify, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadFlags;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (c.subcommand == "count") return cmd_count(c, out);
    if (c.subcommand == "basis") return cmd_basis(c, out);
    if (c.subcommand == "eval") return cmd_eval(c, out);
    return cmd_verify(c, out);
  } catch (const FlagError& e) {
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const ParseError& e) {
    // Metric strings and theorem names are flags; anything else came from the data file.
    err << "error: " << e.what() << '\n';
    return c.subcommand == "eval" && !c.data.empty() ? kBadInput : kBadFlags;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return c.subcommand == "eval" ? kBadInput : kBadFlags;
  }
}

}  // namespace rotinv::cli
