#include "fatpoints/cluster_io.hpp"
#include "fatpoints/product_bound.hpp"
#include "fatpoints/report.hpp"
#include "fatpoints/specialization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace fatpoints;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

constexpr int kDefaultRCap = 500;
constexpr long kDefaultMCap = 1000000;

struct CommonOpts {
  std::string format = "table";
  int precision = 64;
  int precision_cap = 4096;
  bool strict = false;
  bool force = false;

  PrecisionBudget budget() const { return {precision, precision_cap}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--precision", opts.precision, "Starting significant digits")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
  cmd->add_option("--precision-cap", opts.precision_cap,
                  "Maximum significant digits before declaring inconclusive")
      ->check(CLI::Range(1, 1 << 20));
  cmd->add_flag("--strict", opts.strict, "Exit 3 when any verdict is inconclusive");
  cmd->add_flag("--force", opts.force, "Allow parameters beyond the documented caps");
}

void check_caps(const CommonOpts& opts, long r_like, long m_like) {
  if (opts.force) return;
  if (r_like > kDefaultRCap)
    throw CLI::ValidationError("parameter exceeds the cap of " +
                               std::to_string(kDefaultRCap) + "; pass --force to override");
  if (m_like > kDefaultMCap)
    throw CLI::ValidationError("m exceeds the cap of " + std::to_string(kDefaultMCap) +
                               "; pass --force to override");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string join_ints(const std::vector<Int>& v, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

ordered_json json_rational(const Rat& x) {
  return ordered_json{{"num", num(x).str()}, {"den", den(x).str()}};
}

ordered_json json_enclosure(const Enclosure& e) {
  return ordered_json{{"lo", rational_string(e.lower())},
                      {"hi", rational_string(e.upper())},
                      {"lo_decimal", decimal_string(e.lower(), 10, RoundMode::down)},
                      {"hi_decimal", decimal_string(e.upper(), 10, RoundMode::up)}};
}

ordered_json json_int_vector(const std::vector<Int>& v) {
  ordered_json arr = ordered_json::array();
  for (const Int& x : v) arr.push_back(x.str());
  return arr;
}

void print_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- bound / sweep ---------------------------------------------------------

CsvRows bound_csv_header(bool with_evain) {
  std::vector<std::string> h{"r",
                             "m",
                             "product_bound_exact",
                             "product_bound_decimal",
                             "nagata_floor",
                             "sqrt_bound_lo",
                             "sqrt_bound_hi",
                             "improves"};
  if (with_evain) {
    h.push_back("evain_threshold");
    h.push_back("evain_applies");
  }
  return {h};
}

std::vector<std::string> bound_csv_row(const BoundReport& rep, bool with_evain) {
  std::vector<std::string> row{
      std::to_string(rep.r),
      rep.m.str(),
      rational_string(rep.product_bound),
      decimal_string(rep.product_bound, 6),
      rep.nagata.str(),
      decimal_string(rep.sqrt_bound.lower(), 10, RoundMode::down),
      decimal_string(rep.sqrt_bound.upper(), 10, RoundMode::up),
      bool_str(rep.vs_nagata == Order::proven_greater)};
  if (with_evain) {
    Rat threshold = evain_threshold(rep.m);
    row.push_back(rational_string(threshold));
    row.push_back(bool_str(Rat(rep.r) > threshold));
  }
  return row;
}

ordered_json bound_json(const BoundReport& rep) {
  return ordered_json{
      {"r", rep.r},
      {"m", rep.m.str()},
      {"product_bound", json_rational(rep.product_bound)},
      {"product_bound_decimal", decimal_string(rep.product_bound, 6)},
      {"nagata_floor", rep.nagata.str()},
      {"sqrt_bound", json_enclosure(rep.sqrt_bound)},
      {"xu_reduced", json_enclosure(rep.xu_reduced)},
      {"xu_offset", json_enclosure(rep.xu_offset)},
      {"verdicts",
       ordered_json{{"vs_nagata", to_string(rep.vs_nagata)},
                    {"vs_sqrt_bound", to_string(rep.vs_sqrt_bound)},
                    {"vs_xu_reduced", to_string(rep.vs_xu_reduced)},
                    {"vs_xu_offset", to_string(rep.vs_xu_offset)}}},
      {"digits_used", rep.digits_used}};
}

void bound_table(const BoundReport& rep) {
  std::cout << "r = " << rep.r << "  m = " << rep.m << "\n";
  std::cout << "product bound = " << rational_string(rep.product_bound) << " = "
            << decimal_string(rep.product_bound, 6) << "\n";
  std::cout << "nagata floor  = " << rep.nagata << "  [" << to_string(rep.vs_nagata)
            << "]\n";
  std::cout << "sqrt bound    = " << to_string(rep.sqrt_bound, 10) << "  ["
            << to_string(rep.vs_sqrt_bound) << "]\n";
  std::cout << "xu reduced    = " << to_string(rep.xu_reduced, 10) << "  ["
            << to_string(rep.vs_xu_reduced) << "]  (irreducible curves only)\n";
  std::cout << "xu offset     = " << to_string(rep.xu_offset, 10) << "  ["
            << to_string(rep.vs_xu_offset) << "]  (irreducible curves only)\n";
  std::cout << "digits used   = " << rep.digits_used << "\n";
}

int run_bound(int r, long m, const CommonOpts& opts) {
  check_caps(opts, r, m);
  BoundReport rep = compare_bounds(r, Int(m), opts.budget());
  if (opts.format == "table") {
    bound_table(rep);
  } else if (opts.format == "csv") {
    CsvRows rows = bound_csv_header(false);
    rows.push_back(bound_csv_row(rep, false));
    std::cout << emit_csv(rows);
  } else {
    ordered_json doc{{"schema", "fatpoints/bound/v1"}};
    doc.update(bound_json(rep));
    print_json(doc);
  }
  if (opts.strict && rep.any_inconclusive()) return kExitInconclusive;
  return kExitOk;
}

int run_sweep(int r_min, int r_max, long m, bool with_evain, const CommonOpts& opts) {
  check_caps(opts, r_max, m);
  if (r_min < 2 || r_min > r_max)
    throw CLI::ValidationError("need 2 <= r-min <= r-max");
  std::vector<BoundReport> reps;
  reps.reserve(static_cast<std::size_t>(r_max - r_min + 1));
  for (int r = r_min; r <= r_max; ++r) reps.push_back(compare_bounds(r, Int(m), opts.budget()));

  if (opts.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& rep : reps) rows.push_back(bound_json(rep));
    print_json(ordered_json{{"schema", "fatpoints/sweep/v1"},
                            {"r_min", r_min},
                            {"r_max", r_max},
                            {"rows", rows}});
  } else {
    CsvRows rows = bound_csv_header(with_evain);
    for (const auto& rep : reps) rows.push_back(bound_csv_row(rep, with_evain));
    if (opts.format == "csv") {
      std::cout << emit_csv(rows);
    } else {
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "  " : "") << row[i];
        std::cout << "\n";
      }
    }
  }
  bool inconclusive = false;
  for (const auto& rep : reps) inconclusive |= rep.any_inconclusive();
  if (opts.strict && inconclusive) return kExitInconclusive;
  return kExitOk;
}

// ---- simulate ---------------------------------------------------------------

void print_trace(const UnloadingTrace& trace, const std::string& indent) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const UnloadingStep& s = trace.steps[i];
    std::cout << indent << "step " << (i + 1) << ": pivot " << s.pivot << " amount "
              << s.amount << " excess " << s.excess_before << " -> " << s.excess_after()
              << "\n";
  }
}

ordered_json json_trace(const UnloadingTrace& trace) {
  ordered_json steps = ordered_json::array();
  for (const UnloadingStep& s : trace.steps)
    steps.push_back(ordered_json{{"pivot", s.pivot},
                                 {"amount", s.amount.str()},
                                 {"excess_before", s.excess_before.str()},
                                 {"excess_after", s.excess_after().str()}});
  return steps;
}

int run_simulate(int r, long m, bool trace, const CommonOpts& opts) {
  check_caps(opts, r, m);
  SpecializationRun run = simulate_specialization(r, Int(m));

  if (opts.format == "json") {
    ordered_json stages = ordered_json::array();
    for (const StageRecord& s : run.stages) {
      ordered_json rec{{"stage", s.stage},
                       {"alpha", json_rational(s.alpha)},
                       {"beta", json_rational(s.beta)},
                       {"target", json_rational(s.target)},
                       {"input", json_int_vector(s.input)},
                       {"output", json_int_vector(s.output)},
                       {"m1", s.m1.str()},
                       {"tail_sum", s.tail_sum.str()},
                       {"checks",
                        ordered_json{{"ratio_hypothesis", s.ratio_hypothesis},
                                     {"m1_hypothesis", s.m1_hypothesis},
                                     {"ratio_bound", s.ratio_bound},
                                     {"m1_bound", s.m1_bound},
                                     {"slack_audit", s.slack_audit},
                                     {"conserved_quantity", s.conserved_quantity},
                                     {"output_consistent", s.output_consistent},
                                     {"output_nonnegative", s.output_nonnegative}}}};
      if (trace) rec["trace"] = json_trace(s.trace);
      stages.push_back(std::move(rec));
    }
    print_json(ordered_json{{"schema", "fatpoints/simulate/v1"},
                            {"r", run.r},
                            {"m", run.m.str()},
                            {"stages", stages},
                            {"final_multiplicities", json_int_vector(run.final_multiplicities)},
                            {"certified_bound", json_rational(run.certified_bound)},
                            {"certificate_holds", run.certificate_holds},
                            {"matches_closed_form", run.matches_closed_form}});
  } else if (opts.format == "csv") {
    CsvRows rows{{"stage", "alpha", "beta", "target", "output", "m1", "tail_sum", "passed"}};
    for (const StageRecord& s : run.stages)
      rows.push_back({std::to_string(s.stage), rational_string(s.alpha),
                      rational_string(s.beta), rational_string(s.target),
                      join_ints(s.output), s.m1.str(), s.tail_sum.str(),
                      bool_str(s.passed())});
    std::cout << emit_csv(rows);
  } else {
    std::cout << "r = " << run.r << "  m = " << run.m << "\n";
    for (const StageRecord& s : run.stages) {
      std::cout << "stage " << s.stage << ": alpha=" << rational_string(s.alpha)
                << " beta=" << rational_string(s.beta)
                << " target=" << rational_string(s.target) << " -> output ("
                << join_ints(s.output, ", ") << ")";
      if (s.passed()) {
        std::cout << "  checks: ok\n";
      } else {
        std::cout << "  checks FAILED:";
        for (const std::string& f : s.failures()) std::cout << " " << f;
        std::cout << "\n";
      }
      if (trace) print_trace(s.trace, "  ");
    }
    std::cout << "certificate: final m1 = " << run.final_multiplicities[0]
              << " >= " << rational_string(run.certified_bound) << " (= "
              << decimal_string(run.certified_bound, 6) << ") : "
              << (run.certificate_holds ? "holds" : "FAILS") << "\n";
    std::cout << "closed form match: " << (run.matches_closed_form ? "yes" : "NO") << "\n";
  }
  return run.all_passed() ? kExitOk : kExitCheckFailed;
}

// ---- unload -----------------------------------------------------------------

int run_unload(const std::string& path, bool trace, const std::string& policy_name,
               const CommonOpts& opts) {
  PivotPolicy policy = PivotPolicy::lowest_index;
  if (policy_name == "highest") policy = PivotPolicy::highest_index;
  if (policy_name == "most-negative") policy = PivotPolicy::most_negative;

  WeightedCluster cluster = load_cluster_file(path);
  check_caps(opts, cluster.structure.points, 0);
  UnloadOutcome out = unload(cluster, policy);
  Int degree = scheme_degree(out.cluster);

  if (opts.format == "json") {
    print_json(ordered_json{{"schema", "fatpoints/unload/v1"},
                            {"points", cluster.structure.points},
                            {"initial", json_int_vector(out.trace.initial)},
                            {"final", json_int_vector(out.trace.final)},
                            {"steps", json_trace(out.trace)},
                            {"scheme_degree", degree.str()}});
  } else if (opts.format == "csv") {
    CsvRows rows{{"point", "initial", "final"}};
    for (int i = 0; i < cluster.structure.points; ++i)
      rows.push_back({std::to_string(i + 1),
                      out.trace.initial[static_cast<std::size_t>(i)].str(),
                      out.trace.final[static_cast<std::size_t>(i)].str()});
    std::cout << emit_csv(rows);
  } else {
    std::cout << "final multiplicities: " << join_ints(out.trace.final) << "\n";
    std::cout << "steps: " << out.trace.steps.size() << "  scheme degree: " << degree
              << "\n";
    if (trace) print_trace(out.trace, "");
  }
  return kExitOk;
}

// ---- verify-prop ------------------------------------------------------------

const char* const kChainNames[] = {
    "reindex-identity",     "square-identity",  "eps-delta-order",
    "parseval-closed-form", "tail-lower-bound", "sinh-ratio-bound",
    "exp-growth-bound",     "sum-upper-bound",  "final-square-bound"};

std::vector<CheckResult> chain_values(const ProofChain& c) {
  return {c.reindex_identity,     c.square_identity,  c.eps_delta_order,
          c.parseval_closed_form, c.tail_lower_bound, c.sinh_ratio_bound,
          c.exp_growth_bound,     c.sum_upper_bound,  c.final_square_bound};
}

int run_verify(int n_min, int n_max, long terms, bool verbose, const CommonOpts& opts) {
  check_caps(opts, n_max, 0);
  if (n_min < 1 || n_min > n_max)
    throw CLI::ValidationError("need 1 <= n-min <= n-max");
  bool any_fail = false, any_inconclusive = false;

  ordered_json json_rows = ordered_json::array();
  CsvRows csv_rows;
  if (opts.format == "csv") {
    std::vector<std::string> header{"n",         "verdict", "exploratory", "b_exact",
                                    "b_decimal", "rhs_lo",  "rhs_hi",      "digits"};
    for (const char* name : kChainNames) header.emplace_back(name);
    csv_rows.push_back(std::move(header));
  }

  for (int n = n_min; n <= n_max; ++n) {
    ProductBoundCertificate cert = verify_product_bound(n, opts.budget(), terms);
    any_fail |= cert.verdict == Order::proven_less || cert.chain.any_fail();
    any_inconclusive |=
        cert.verdict == Order::inconclusive || cert.chain.any_undecided();

    if (opts.format == "json") {
      ordered_json chain;
      auto values = chain_values(cert.chain);
      for (std::size_t i = 0; i < values.size(); ++i)
        chain[kChainNames[i]] = to_string(values[i]);
      json_rows.push_back(ordered_json{{"n", cert.n},
                                       {"verdict", to_string(cert.verdict)},
                                       {"exploratory", cert.exploratory},
                                       {"b", json_rational(cert.b)},
                                       {"b_decimal", decimal_string(cert.b, 6)},
                                       {"rhs", json_enclosure(cert.rhs)},
                                       {"chain", chain},
                                       {"parseval_terms", cert.parseval_terms},
                                       {"digits_used", cert.digits_used}});
    } else if (opts.format == "csv") {
      std::vector<std::string> row{std::to_string(cert.n),
                                   to_string(cert.verdict),
                                   bool_str(cert.exploratory),
                                   rational_string(cert.b),
                                   decimal_string(cert.b, 6),
                                   decimal_string(cert.rhs.lower(), 10, RoundMode::down),
                                   decimal_string(cert.rhs.upper(), 10, RoundMode::up),
                                   std::to_string(cert.digits_used)};
      for (CheckResult c : chain_values(cert.chain)) row.emplace_back(to_string(c));
      csv_rows.push_back(std::move(row));
    } else {
      std::cout << "n=" << cert.n << "  " << to_string(cert.verdict)
                << "  b=" << decimal_string(cert.b, 6) << " ("
                << rational_string(cert.b) << ")  rhs=" << to_string(cert.rhs, 8)
                << "  digits=" << cert.digits_used
                << (cert.exploratory ? "  (exploratory)" : "") << "\n";
      if (verbose) {
        auto values = chain_values(cert.chain);
        for (std::size_t i = 0; i < values.size(); ++i)
          std::cout << "    " << kChainNames[i] << ": " << to_string(values[i]) << "\n";
      }
    }
  }
  if (opts.format == "json")
    print_json(ordered_json{{"schema", "fatpoints/verify-prop/v1"},
                            {"n_min", n_min},
                            {"n_max", n_max},
                            {"rows", json_rows}});
  else if (opts.format == "csv")
    std::cout << emit_csv(csv_rows);

  if (any_fail) return kExitCheckFailed;
  if (opts.strict && any_inconclusive) return kExitInconclusive;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact unloading of weighted clusters of infinitely near points "
               "and rigorous degree bounds for plane curves with imposed "
               "multiple points"};
  app.require_subcommand(1);

  CommonOpts opts;
  if (const char* env = std::getenv("FATPOINTS_PRECISION_CAP")) {
    try {
      opts.precision_cap = std::stoi(env);
    } catch (...) {
      std::cerr << "warning: ignoring invalid FATPOINTS_PRECISION_CAP\n";
    }
  }

  int r = 0, r_min = 0, r_max = 0, n_min = 0, n_max = 0;
  long m = 1, terms = 0;
  bool trace = false, verbose = false, with_evain = false;
  std::string input_path, policy = "lowest";

  CLI::App* bound = app.add_subcommand("bound", "Degree bound for one (r, m)");
  bound->add_option("--r", r, "Number of points")->required()->check(CLI::Range(2, 1 << 30));
  bound->add_option("--m", m, "Multiplicity")
      ->check(CLI::Range(0L, 1L << 60))
      ->capture_default_str();
  add_common(bound, opts);

  CLI::App* sweep = app.add_subcommand("sweep", "Degree bounds over a range of r");
  sweep->add_option("--r-min", r_min, "First r")->required();
  sweep->add_option("--r-max", r_max, "Last r")->required();
  sweep->add_option("--m", m, "Multiplicity")
      ->check(CLI::Range(0L, 1L << 60))
      ->capture_default_str();
  sweep->add_flag("--evain", with_evain, "Add the small-multiplicity threshold columns");
  add_common(sweep, opts);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Iterated specialization with per-stage inequality checks");
  simulate->add_option("--r", r, "Number of points")->required()->check(CLI::Range(2, 1 << 30));
  simulate->add_option("--m", m, "Multiplicity")->required()->check(CLI::Range(1L, 1L << 60));
  simulate->add_flag("--trace", trace, "Print each unloading step");
  add_common(simulate, opts);

  CLI::App* unload_cmd = app.add_subcommand("unload", "Unload a cluster file");
  unload_cmd->add_option("--input", input_path, "Cluster file (JSON)")->required();
  unload_cmd->add_flag("--trace", trace, "Print each unloading step");
  unload_cmd->add_option("--policy", policy, "Pivot selection policy")
      ->check(CLI::IsMember({"lowest", "highest", "most-negative"}))
      ->capture_default_str();
  add_common(unload_cmd, opts);

  CLI::App* verify = app.add_subcommand(
      "verify-prop", "Verify the product lower bound against sqrt(n) - pi/8");
  verify->add_option("--n-min", n_min, "First n")->required();
  verify->add_option("--n-max", n_max, "Last n")->required();
  verify->add_option("--terms", terms, "Series terms for the closed-form check (0 = auto)");
  verify->add_flag("--verbose", verbose, "Print the full check table per n");
  add_common(verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bound->parsed()) return run_bound(r, m, opts);
    if (sweep->parsed()) return run_sweep(r_min, r_max, m, with_evain, opts);
    if (simulate->parsed()) return run_simulate(r, m, trace, opts);
    if (unload_cmd->parsed()) return run_unload(input_path, trace, policy, opts);
    if (verify->parsed()) return run_verify(n_min, n_max, terms, verbose, opts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
