// qf: a toolkit for finite quandles held as sequences of permutations.
// Subcommands: check, info, construct, quotient, iso, adjoin, extract,
// enumerate, reproduce. Exit codes: 0 success, 1 claim/computation
// failure, 2 axiom violation, 3 parse or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "claims.hpp"
#include "qf/families.hpp"
#include "qf/formats.hpp"
#include "qf/iso.hpp"
#include "qf/search.hpp"
#include "qf/structure.hpp"

namespace {

using namespace qf;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitAxiomViolation = 2;
constexpr int kExitParseError = 3;

struct GlobalOptions {
  std::string format = "human";
  unsigned jobs = 0;  // 0 = unset, fall back to QF_DEFAULT_JOBS or 1

  bool machine() const { return format == "machine"; }
  unsigned effective_jobs() const {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("QF_DEFAULT_JOBS")) {
      const long parsed = std::strtol(env, nullptr, 10);
      if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    return 1;
  }
};

/// Loads a quandle file; prints diagnostics and fills `exit_code` on
/// failure (3 for parse problems, 2 for axiom violations).
std::optional<Quandle> load_quandle(const std::string& path, int& exit_code) {
  try {
    ParsedQuandle parsed = read_quandle_file(path);
    if (!parsed.result.ok()) {
      std::cerr << path << ": not a quandle\n";
      for (const auto& violation : parsed.result.violations)
        std::cerr << "  " << violation.describe() << "\n";
      exit_code = kExitAxiomViolation;
      return std::nullopt;
    }
    return parsed.result.quandle;
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.line << ":" << e.col << ": " << e.what() << "\n";
    exit_code = kExitParseError;
    return std::nullopt;
  }
}

void print_summary(std::ostream& out, const Quandle& q, bool machine) {
  const auto f = infer_fixed_point_count(q);
  const bool connected = is_connected(q);
  if (machine) {
    out << "order=" << q.order() << "\n";
    out << "profile=" << q.profile().to_string() << "\n";
    if (f)
      out << "cyclic-type=" << q.order() << "," << *f << "\n";
    else
      out << "cyclic-type=none\n";
    out << "connected=" << (connected ? "yes" : "no") << "\n";
  } else {
    out << "order: " << q.order() << "\n";
    out << "profile: " << q.profile().to_string() << "\n";
    if (f)
      out << "cyclic type: (" << q.order() << "," << *f << ")\n";
    else
      out << "cyclic type: no\n";
    out << "connected: " << (connected ? "yes" : "no") << "\n";
  }
}

int cmd_check(const GlobalOptions& global, const std::string& path) {
  int exit_code = kExitOk;
  const auto q = load_quandle(path, exit_code);
  if (!q) return exit_code;
  print_summary(std::cout, *q, global.machine());
  return kExitOk;
}

int cmd_info(const GlobalOptions& global, const std::string& path) {
  int exit_code = kExitOk;
  const auto q = load_quandle(path, exit_code);
  if (!q) return exit_code;
  print_summary(std::cout, *q, global.machine());

  const auto common = common_fixed_points(*q);
  std::cout << (global.machine() ? "common-fixed-points=" : "common fixed points:");
  if (common.empty()) std::cout << (global.machine() ? "none" : " none");
  for (int g : common) std::cout << (global.machine() && g == common.front() ? "" : " ") << g;
  std::cout << "\n";

  const AssociationClasses assoc = association_classes(*q);
  if (assoc.ok()) {
    std::cout << (global.machine() ? "association-classes=" : "association classes:");
    for (int k = 1; k <= assoc.classes->size(); ++k)
      std::cout << (global.machine() && k == 1 ? "" : " ") << assoc.classes->label(k);
    std::cout << "\n";
  } else {
    const auto [i, j, l] = *assoc.failure;
    std::cout << (global.machine() ? "association-classes=intransitive:" : "association classes: not transitive at ")
              << "(" << i << "," << j << "," << l << ")\n";
  }

  if (!global.machine()) {
    std::cout << "permutations:\n";
    for (int i = 1; i <= q->order(); ++i)
      std::cout << "  mu_" << i << " = " << q->mu(i).cycle_string() << "\n";
  }
  return kExitOk;
}

int write_output(const Quandle& q, const std::string& out_path, bool perms) {
  const std::string text = perms ? to_permutation_text(q) : to_table_text(q);
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitClaimFailure;
  }
  out << text;
  return kExitOk;
}

int cmd_construct(const std::string& family, const std::vector<int>& params,
                  const std::string& out_path, bool perms) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument(family + " takes " + std::to_string(count) + " parameter(s)");
  };
  try {
    std::optional<Quandle> q;
    if (family == "trivial") {
      need(1);
      q = trivial(params[0]);
    } else if (family == "dihedral") {
      need(1);
      q = dihedral(params[0]);
    } else if (family == "q62") {
      need(0);
      q = q62();
    } else if (family == "two-f") {
      need(1);
      q = two_f_canonical(params[0]);
    } else if (family == "divisible") {
      need(2);
      q = divisible_family(params[0], params[1]);
    } else {
      throw std::invalid_argument("unknown family: " + family);
    }
    return write_output(*q, out_path, perms);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  }
}

std::optional<PartitionClasses> parse_partition(int n, const std::string& spec) {
  // classes separated by '|', elements by ','
  std::vector<std::vector<int>> classes;
  std::vector<int> current;
  std::string token;
  auto flush_token = [&]() {
    if (token.empty()) return true;
    try {
      current.push_back(std::stoi(token));
    } catch (...) {
      return false;
    }
    token.clear();
    return true;
  };
  for (char ch : spec + "|") {
    if (ch == ',') {
      if (!flush_token()) return std::nullopt;
    } else if (ch == '|') {
      if (!flush_token()) return std::nullopt;
      if (!current.empty()) classes.push_back(std::move(current));
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      token.push_back(ch);
    }
  }
  try {
    return PartitionClasses::from_classes(n, std::move(classes));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

int cmd_quotient(const std::string& path, const std::string& partition_spec) {
  int exit_code = kExitOk;
  const auto q = load_quandle(path, exit_code);
  if (!q) return exit_code;

  std::optional<PartitionClasses> partition;
  if (partition_spec.empty()) {
    const AssociationClasses assoc = association_classes(*q);
    if (!assoc.ok()) {
      const auto [i, j, k] = *assoc.failure;
      std::cerr << "association relation is not transitive: (" << i << "," << j << "," << k
                << ")\n";
      return kExitClaimFailure;
    }
    partition = assoc.classes;
  } else {
    partition = parse_partition(q->order(), partition_spec);
    if (!partition) {
      std::cerr << "malformed partition: " << partition_spec << "\n";
      return kExitParseError;
    }
  }

  if (!is_congruence(*q, *partition)) {
    std::cerr << "partition is not a congruence\n";
    return kExitClaimFailure;
  }
  std::cout << quotient_table_text(*q, *partition);
  return kExitOk;
}

int cmd_iso(const std::string& path_a, const std::string& path_b) {
  int exit_code = kExitOk;
  const auto a = load_quandle(path_a, exit_code);
  if (!a) return exit_code;
  const auto b = load_quandle(path_b, exit_code);
  if (!b) return exit_code;

  const auto witness = find_isomorphism(*a, *b);
  if (!witness) {
    std::cout << "no isomorphism\n";
    return kExitClaimFailure;
  }
  std::cout << witness_text(*witness);
  return kExitOk;
}

int cmd_adjoin(const std::string& path, const std::string& mu_text, const std::string& out_path,
               bool perms) {
  int exit_code = kExitOk;
  const auto q = load_quandle(path, exit_code);
  if (!q) return exit_code;
  try {
    const Permutation mu = Permutation::parse_cycles(q->order(), mu_text);
    return write_output(adjoin_common_fixed_point(*q, mu), out_path, perms);
  } catch (const ParseError& e) {
    std::cerr << "malformed permutation: " << e.what() << "\n";
    return kExitParseError;
  } catch (const CommutationError& e) {
    std::cerr << e.what() << "\n";
    return kExitClaimFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitClaimFailure;
  }
}

int cmd_extract(const std::string& path, int g0, bool unchecked, const std::string& out_path,
                bool perms) {
  int exit_code = kExitOk;
  const auto q = load_quandle(path, exit_code);
  if (!q) return exit_code;
  try {
    const Quandle result = unchecked ? extract_unchecked(*q, g0) : extract_common_fixed_point(*q, g0);
    return write_output(result, out_path, perms);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitClaimFailure;
  }
}

int cmd_enumerate(const GlobalOptions& global, const SearchParams& params) {
  EnumerationResult result;
  try {
    result = enumerate_quandles(params);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  }

  if (!global.machine()) {
    std::cout << "mode: " << search_mode_name(result.mode_used) << "\n";
    if (!result.note.empty()) std::cout << "note: " << result.note << "\n";
    if (result.mode_used == SearchMode::Structured)
      std::cout << "filtered candidates: " << result.stats.structured_candidates.size() << "\n";
    std::cout << "labeled "
              << (result.labeled_kind == LabeledKind::NormalizedLabelings ? "(normalized labelings)"
                                                                          : "(all labelings)")
              << ": " << result.labeled_count << "\n";
    for (std::size_t k = 0; k < result.representatives.size(); ++k) {
      const Quandle& rep = result.representatives[k];
      std::cout << "class " << k + 1 << ": size=" << result.class_sizes[k]
                << " connected=" << (is_connected(rep) ? "yes" : "no") << "\n";
      std::cout << to_table_text(rep);
    }
  } else {
    for (std::size_t k = 0; k < result.representatives.size(); ++k)
      std::cout << "class=" << k + 1 << " size=" << result.class_sizes[k]
                << " connected=" << (is_connected(result.representatives[k]) ? "yes" : "no")
                << "\n";
  }
  std::cout << result_line(result) << "\n";
  std::cerr << "nodes=" << result.stats.nodes << " leaf-checks=" << result.stats.leaf_checks
            << " wall=" << result.stats.wall_seconds << "s\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qf: computational algebra for finite quandles of cyclic type"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_option("--jobs", global.jobs, "Worker threads (QF_DEFAULT_JOBS when absent)");

  std::string path;
  std::string path_b;
  std::string out_path;
  std::string partition_spec;
  std::string mu_text;
  std::string family;
  std::vector<int> family_params;
  bool perms_output = false;
  bool unchecked = false;
  int g0 = 0;

  auto* check = app.add_subcommand("check", "Verify a quandle file and print a summary");
  check->add_option("path", path, "Quandle file (table or permutation format)")->required();

  auto* info = app.add_subcommand("info", "Detailed structural report for a quandle file");
  info->add_option("path", path)->required();

  auto* construct = app.add_subcommand("construct", "Emit a named family member");
  construct->add_option("family", family, "trivial|dihedral|q62|two-f|divisible")->required();
  construct->add_option("params", family_params, "Integer parameters");
  construct->add_option("-o,--output", out_path, "Write to file instead of stdout");
  construct->add_flag("--perms", perms_output, "Permutation-format output");

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by a congruence");
  quotient_cmd->add_option("path", path)->required();
  quotient_cmd->add_option("--partition", partition_spec,
                           "Classes like \"1,3|2,4\" (association classes by default)");

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two quandles");
  iso->add_option("path", path)->required();
  iso->add_option("path2", path_b)->required();

  auto* adjoin = app.add_subcommand("adjoin", "Adjoin a common fixed point");
  adjoin->add_option("path", path)->required();
  adjoin->add_option("mu", mu_text, "Commuting permutation in cycle notation")->required();
  adjoin->add_option("-o,--output", out_path);
  adjoin->add_flag("--perms", perms_output);

  auto* extract = app.add_subcommand("extract", "Extract a common fixed point");
  extract->add_option("path", path)->required();
  extract->add_option("g0", g0, "The common fixed point to remove")->required();
  extract->add_flag("--unchecked", unchecked, "Skip the cyclic-type hypotheses");
  extract->add_option("-o,--output", out_path);
  extract->add_flag("--perms", perms_output);

  SearchParams search_params;
  std::string mode_name = "auto";
  std::vector<std::string> no_prune;
  auto* enumerate = app.add_subcommand("enumerate", "Classify cyclic-type quandles at (n,f)");
  enumerate->add_option("--n", search_params.n, "Order")->required();
  enumerate->add_option("--f", search_params.f, "Fixed points")->required();
  enumerate->add_option("--mode", mode_name, "auto|structured|general|brute")
      ->check(CLI::IsMember({"auto", "structured", "general", "brute"}));
  enumerate->add_option("--budget-nodes", search_params.node_budget, "Node budget");
  enumerate->add_option("--no-prune", no_prune,
                        "Disable a rule: divisibility|gcd|cf|fixed-set|image-coset|cycle-spacing");
  enumerate->add_flag("--force", search_params.force_search,
                      "Search even when the precheck proves emptiness");

  std::string claim_id;
  auto* reproduce = app.add_subcommand("reproduce", "Re-derive the classification facts");
  reproduce->add_option("claim", claim_id, "Claim id or \"all\"")->required();
  std::uint64_t reproduce_budget = 100'000'000;
  reproduce->add_option("--budget-nodes", reproduce_budget, "Node budget per enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParseError;
  }

  try {
    if (check->parsed()) return cmd_check(global, path);
    if (info->parsed()) return cmd_info(global, path);
    if (construct->parsed()) return cmd_construct(family, family_params, out_path, perms_output);
    if (quotient_cmd->parsed()) return cmd_quotient(path, partition_spec);
    if (iso->parsed()) return cmd_iso(path, path_b);
    if (adjoin->parsed()) return cmd_adjoin(path, mu_text, out_path, perms_output);
    if (extract->parsed()) return cmd_extract(path, g0, unchecked, out_path, perms_output);
    if (enumerate->parsed()) {
      const auto mode = parse_search_mode(mode_name);
      if (!mode) {
        std::cerr << "unknown mode: " << mode_name << "\n";
        return kExitParseError;
      }
      search_params.mode = *mode;
      search_params.jobs = global.effective_jobs();
      for (const std::string& name : no_prune) {
        const auto rule = parse_prune_rule(name);
        if (!rule) {
          std::cerr << "unknown prune rule: " << name << "\n";
          return kExitParseError;
        }
        search_params.rules.disable(*rule);
      }
      return cmd_enumerate(global, search_params);
    }
    if (reproduce->parsed()) {
      qf::cli::ClaimContext ctx;
      ctx.jobs = global.effective_jobs();
      ctx.node_budget = reproduce_budget;
      ctx.machine = global.machine();
      return qf::cli::run_claims(claim_id, std::cout, ctx);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitClaimFailure;
  }
  return kExitOk;
}
