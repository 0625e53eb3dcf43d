#include "qimm/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qimm/characters.hpp"
#include "qimm/immanant.hpp"
#include "qimm/paths.hpp"
#include "qimm/sweeps.hpp"
#include "qimm/tree.hpp"
#include "qimm/verdict.hpp"

namespace qimm {

namespace {

const std::map<std::string, OutputFormat> kFormats = {
    {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};

std::vector<std::string> verify_group_names() {
  std::vector<std::string> names;
  for (const auto& g : sweep_groups()) names.push_back(g.name);
  names.push_back("all");
  return names;
}

}  // namespace

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact immanants of tree q-Laplacians, character tables and lattice-path checks"};
  app.name("qimm");
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "json | csv | text (verify defaults to json)")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("--output", config.output_path, "write to this file (relative to $QIMM_OUTPUT_DIR if set)");
  };
  auto add_tree = [&](CLI::App* sub) {
    auto* lit = sub->add_option("--tree", config.tree_literal, "path:N | star:N | pruefer:a,b,c | file:PATH");
    auto* file = sub->add_option("--tree-file", config.tree_file, "tree file: n, then one 'u v' edge per line");
    auto* code = sub->add_option("--pruefer", config.pruefer, "Prüfer sequence a,b,c");
    lit->excludes(file)->excludes(code);
    file->excludes(code);
  };

  auto* alpha = app.add_subcommand("alpha-table", "alpha_{n,k,i} for 0 <= k, i <= n/2");
  alpha->add_option("n", config.n)->required()->check(CLI::Range(1, 200));
  add_format(alpha);

  auto* last = app.add_subcommand("last-table", "last_{l,k} for 0 <= k <= l <= L, two ways");
  last->add_option("L", config.l_max)->required()->check(CLI::Range(0, 200));
  add_format(last);

  auto* chr = app.add_subcommand("char", "irreducible character value chi_lambda(rho)");
  chr->add_option("lambda", config.shape, "shape, e.g. 3,1")->required();
  chr->add_option("rho", config.cycle_type, "cycle type, e.g. 2,1,1")->required();
  add_format(chr);

  auto* imm = app.add_subcommand("immanant", "immanant of a tree's q-Laplacian");
  add_tree(imm);
  imm->add_option("--shape", config.shape, "partition of n, e.g. 3,1")->required();
  imm->add_flag("--normalized", config.normalized, "divide by chi_lambda(id)");
  imm->add_option("--algorithm", config.algorithm, "matching | bruteforce")
      ->check(CLI::IsMember({"matching", "bruteforce"}));
  add_format(imm);

  auto* acoef = app.add_subcommand("a-coeffs", "a_i(q) coefficients of a tree");
  add_tree(acoef);
  add_format(acoef);

  auto* verify = app.add_subcommand("verify", "check claims and emit a JSON-lines verdict stream");
  verify->add_option("group", config.verify_group)->required()->check(CLI::IsMember(verify_group_names()));
  verify->add_option("--n-max", config.n_max, "largest tree size for exhaustive tree sweeps")->check(CLI::Range(1, 9));
  verify->add_option("--hook-n-max", config.hook_n_max, "largest tree size for the hook chain")->check(CLI::Range(1, 9));
  verify->add_option("--oracle-n-max", config.oracle_n_max, "largest tree size for the brute-force oracle")
      ->check(CLI::Range(1, kMaxBruteForceN));
  verify->add_option("--path-n-max", config.path_n_max, "largest path length for path sweeps")
      ->check(CLI::Range(0, 18));
  verify->add_option("--alpha-n-max", config.alpha_n_max, "largest n for alpha ratio sweeps")
      ->check(CLI::Range(2, 200));
  verify->add_option("--random-trees", config.random_trees, "seeded random trees on n-max + 1 vertices")
      ->check(CLI::Range(0, 1000000));
  verify->add_option("--seed", config.seed, "seed for random trees");
  verify->add_option("--grid", config.grid, "q grid: a:b:step or comma list (default -10:10:1/2)");
  verify->add_flag("--deep", config.deep, "raise every sweep cap");
  add_format(verify);
  CLI::Option* verify_format = verify->get_option("--format");

  auto* path = app.add_subcommand("path", "lattice-path utilities");
  path->add_option("action", config.path_action)
      ->required()
      ->check(CLI::IsMember({"enumerate", "callan", "double", "peaks", "restricted", "to-syt", "probability"}));
  path->add_option("args", config.path_args, "action arguments");
  path->add_option("--direction", config.direction, "fwd | inv")->check(CLI::IsMember({"fwd", "inv"}));
  add_format(path);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    ParseResult result;
    result.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    return result;
  }
  for (auto* sub : app.get_subcommands()) config.subcommand = sub->get_name();
  if (config.subcommand == "verify" && verify_format->count() == 0) config.format = OutputFormat::json;
  return {config, kExitOk};
}

void validate(const RunConfig& config) {
  const int sources = !config.tree_literal.empty() + !config.tree_file.empty() + !config.pruefer.empty();
  if (config.subcommand == "immanant" || config.subcommand == "a-coeffs") {
    if (sources != 1) throw std::invalid_argument("exactly one of --tree, --tree-file, --pruefer is required");
  }
  if (config.subcommand == "verify" && !config.grid.empty()) parse_q_grid(config.grid);
  if (config.subcommand == "path" && config.path_args.empty()) {
    throw std::invalid_argument("path " + config.path_action + " needs arguments");
  }
  if (config.subcommand == "char") {
    if (Partition::parse(config.shape).size() != Partition::parse(config.cycle_type).size()) {
      throw std::invalid_argument("lambda and rho must be partitions of the same n");
    }
  }
}

std::string resolve_output_path(const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  const char* base = std::getenv("QIMM_OUTPUT_DIR");
  if (p.is_relative() && base != nullptr && *base != '\0') p = std::filesystem::path(base) / p;
  return p.string();
}

namespace {

Tree load_tree(const RunConfig& config) {
  if (!config.tree_file.empty()) return read_tree_file(config.tree_file);
  if (!config.pruefer.empty()) return parse_tree_literal("pruefer:" + config.pruefer);
  return parse_tree_literal(config.tree_literal);
}

int to_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::invalid_argument(std::string(what) + " must be an integer: " + text);
  return value;
}

void need_args(const RunConfig& config, std::size_t count, const char* usage) {
  if (config.path_args.size() != count) throw std::invalid_argument(std::string("usage: qimm path ") + usage);
}

void print_alpha_text(const AlphaTable& table, std::ostream& os) {
  os << "n = " << table.n() << "   rows i, columns k\n";
  os << std::setw(4) << "i";
  for (int k = 0; k <= table.half(); ++k) os << std::setw(12) << ("k=" + std::to_string(k));
  os << '\n';
  for (int i = 0; i <= table.half(); ++i) {
    os << std::setw(4) << i;
    for (int k = 0; k <= table.half(); ++k) os << std::setw(12) << table.at(k, i).get_str();
    os << '\n';
  }
}

void print_last_text(const LastTable& table, std::ostream& os) {
  os << std::setw(4) << "l";
  for (std::size_t k = 0; k < table.size(); ++k) os << std::setw(10) << ("k=" + std::to_string(k));
  os << '\n';
  for (std::size_t l = 0; l < table.size(); ++l) {
    os << std::setw(4) << l;
    for (const auto& v : table[l]) os << std::setw(10) << v.get_str();
    os << '\n';
  }
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

int run_verify(const RunConfig& config, std::ostream& os) {
  SweepLimits limits = SweepLimits::defaults(config.deep);
  if (config.n_max) {
    limits.tree_n_max = *config.n_max;
    limits.hook_n_max = std::min(limits.hook_n_max, *config.n_max);
    limits.oracle_n_max = std::min(limits.oracle_n_max, *config.n_max);
  }
  if (config.hook_n_max) limits.hook_n_max = *config.hook_n_max;
  if (config.oracle_n_max) limits.oracle_n_max = *config.oracle_n_max;
  if (config.path_n_max) limits.path_n_max = *config.path_n_max;
  if (config.alpha_n_max) limits.alpha_n_max = *config.alpha_n_max;
  if (config.random_trees) limits.random_trees = *config.random_trees;
  limits.seed = config.seed;
  if (!config.grid.empty()) limits.q_grid = parse_q_grid(config.grid);

  auto verdicts = run_sweep(config.verify_group, limits);

  std::map<std::string, std::map<std::string, std::size_t>> counts;
  std::size_t failures = 0;
  for (const auto& v : verdicts) {
    const char* bucket = v.degenerate ? "degenerate" : (v.holds ? "pass" : "fail");
    ++counts[v.claim][bucket];
    if (!v.holds && !v.degenerate) ++failures;
  }
  nlohmann::json summary = {{"summary", true},
                            {"group", config.verify_group},
                            {"verdicts", verdicts.size()},
                            {"failures", failures},
                            {"all_hold", failures == 0},
                            {"claims", nlohmann::json::object()}};
  for (const auto& [claim, c] : counts) {
    summary["claims"][claim] = {{"pass", c.count("pass") ? c.at("pass") : 0},
                                {"fail", c.count("fail") ? c.at("fail") : 0},
                                {"degenerate", c.count("degenerate") ? c.at("degenerate") : 0}};
  }

  if (config.format == OutputFormat::csv) {
    os << "claim,params,holds,degenerate,detail\n";
    for (const auto& v : verdicts) {
      os << v.claim << ',' << csv_quote(v.params.dump()) << ',' << (v.holds ? "true" : "false") << ','
         << (v.degenerate ? "true" : "false") << ',' << csv_quote(v.detail) << '\n';
    }
  } else if (config.format == OutputFormat::text) {
    for (const auto& v : verdicts) {
      const char* tag = v.degenerate ? "DEGENERATE" : (v.holds ? "PASS" : "FAIL");
      os << tag << ' ' << v.claim << ' ' << v.params.dump() << "  " << v.detail << '\n';
    }
    for (const auto& [claim, c] : summary["claims"].items()) {
      os << "# " << claim << ": pass " << c["pass"] << ", fail " << c["fail"] << ", degenerate " << c["degenerate"]
         << '\n';
    }
    os << "# " << verdicts.size() << " verdicts, " << failures << " failures\n";
  } else {
    for (const auto& v : verdicts) os << to_json(v).dump() << '\n';
    os << summary.dump() << '\n';
  }
  return failures == 0 ? kExitOk : kExitFailure;
}

nlohmann::json path_list_json(const std::vector<LatticePath>& paths) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : paths) arr.push_back(p.steps());
  return arr;
}

int run_path(const RunConfig& config, std::ostream& os) {
  const auto& args = config.path_args;
  const bool json = config.format == OutputFormat::json;
  const Direction direction = config.direction == "inv" ? Direction::inverse : Direction::forward;
  const std::string& action = config.path_action;

  if (action == "enumerate") {
    need_args(config, 3, "enumerate CLASS LENGTH END_HEIGHT");
    const PathClass cls = parse_path_class(args[0]);
    auto paths = enumerate_paths(cls, to_int(args[1], "length"), to_int(args[2], "end height"));
    if (json) {
      os << nlohmann::json{{"class", to_string(cls)}, {"count", paths.size()}, {"paths", path_list_json(paths)}}.dump()
         << '\n';
    } else {
      for (const auto& p : paths) os << p.steps() << '\n';
      os << "# " << paths.size() << " paths\n";
    }
  } else if (action == "callan" || action == "double") {
    need_args(config, 1, (action + " PATH [--direction fwd|inv]").c_str());
    LatticePath in(args[0]);
    LatticePath result = action == "callan" ? callan_bijection(direction, in) : riordan_double(direction, in);
    if (json) {
      os << nlohmann::json{{"input", in.steps()}, {"direction", config.direction}, {"output", result.steps()}}.dump()
         << '\n';
    } else {
      os << result.steps() << '\n';
    }
  } else if (action == "peaks") {
    need_args(config, 1, "peaks PATH");
    auto peaks = peak_profile(LatticePath(args[0]));
    if (json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& p : peaks) arr.push_back({{"x", p.x}, {"y", p.y}, {"odd", p.odd()}});
      os << arr.dump() << '\n';
    } else {
      for (const auto& p : peaks) os << '(' << p.x << ',' << p.y << ',' << (p.odd() ? "odd" : "even") << ")\n";
    }
  } else if (action == "restricted") {
    need_args(config, 3, "restricted N K I");
    const int n = to_int(args[0], "n");
    const int k = to_int(args[1], "k");
    const int i = to_int(args[2], "i");
    if (n < 0 || k < 0 || i < 0 || 2 * k > n || 2 * i > n) throw std::invalid_argument("need 0 <= k, i <= n/2");
    const Integer count = count_restricted(n, k, i);
    if (json) {
      os << nlohmann::json{{"n", n}, {"k", k}, {"i", i}, {"count", count.get_str()}}.dump() << '\n';
    } else {
      os << count.get_str() << '\n';
    }
  } else if (action == "to-syt") {
    need_args(config, 1, "to-syt PATH");
    TwoRowSyt syt = path_to_syt(LatticePath(args[0]));
    if (json) {
      os << nlohmann::json{{"row1", syt.row1()}, {"row2", syt.row2()}, {"descents", syt.descents()}}.dump() << '\n';
    } else {
      auto row = [&](const std::vector<int>& r) {
        for (std::size_t t = 0; t < r.size(); ++t) os << (t ? " " : "") << r[t];
        os << '\n';
      };
      row(syt.row1());
      row(syt.row2());
    }
  } else if (action == "probability") {
    need_args(config, 2, "probability N I");
    auto report = probability_monotonicity(to_int(args[0], "n"), to_int(args[1], "i"));
    if (json) {
      nlohmann::json probs = nlohmann::json::array();
      for (const auto& [k, p] : report.probabilities) probs.push_back({{"k", k}, {"p", rational_to_fraction(p)}});
      os << nlohmann::json{{"n", report.n}, {"i", report.i}, {"probabilities", probs}, {"monotone", report.monotone}}
                .dump()
         << '\n';
    } else {
      for (const auto& [k, p] : report.probabilities) os << "k=" << k << "  " << rational_to_string(p) << '\n';
      os << (report.monotone ? "weakly decreasing\n" : "NOT monotone\n");
    }
    return report.monotone ? kExitOk : kExitFailure;
  }
  return kExitOk;
}

int dispatch(const RunConfig& config, std::ostream& os) {
  const auto& sub = config.subcommand;
  if (sub == "alpha-table") {
    AlphaTable table = alpha_table(config.n);
    if (config.format == OutputFormat::csv) os << alpha_table_csv(table);
    else if (config.format == OutputFormat::json) os << alpha_table_json(table).dump() << '\n';
    else print_alpha_text(table, os);
  } else if (sub == "last-table") {
    LastTable table = last_table(config.l_max);
    if (config.format == OutputFormat::csv) os << last_table_csv(table);
    else if (config.format == OutputFormat::json) os << last_table_json(table).dump() << '\n';
    else print_last_text(table, os);
  } else if (sub == "char") {
    Partition lambda = Partition::parse(config.shape);
    Partition rho = Partition::parse(config.cycle_type);
    Integer value = mn_character(lambda, rho);
    if (config.format == OutputFormat::json) {
      os << nlohmann::json{{"shape", lambda.to_string()}, {"cycle_type", rho.to_string()}, {"value", value.get_str()}}
                .dump()
         << '\n';
    } else {
      os << value.get_str() << '\n';
    }
  } else if (sub == "immanant") {
    Tree tree = load_tree(config);
    Partition lambda = Partition::parse(config.shape);
    if (lambda.size() != tree.n()) throw std::invalid_argument("shape must be a partition of the tree size");
    const auto algorithm = config.algorithm == "bruteforce" ? ImmanantAlgorithm::bruteforce : ImmanantAlgorithm::matching;
    if (algorithm == ImmanantAlgorithm::bruteforce && tree.n() > kMaxBruteForceN) {
      throw std::invalid_argument("refusing brute force for n = " + std::to_string(tree.n()) + " (cap is " +
                                  std::to_string(kMaxBruteForceN) + ")");
    }
    RatPoly raw = algorithm == ImmanantAlgorithm::bruteforce ? immanant_bruteforce(q_laplacian(tree), lambda)
                                                             : immanant_tree(tree, lambda);
    RatPoly value = config.normalized ? normalize_immanant(raw, lambda) : raw;
    if (config.format == OutputFormat::json) {
      os << nlohmann::json{{"tree", pruefer_literal(tree)},
                           {"shape", lambda.to_string()},
                           {"normalized", config.normalized},
                           {"algorithm", to_string(algorithm)},
                           {"coeffs", to_json(value)},
                           {"text", value.to_string()}}
                .dump()
         << '\n';
    } else {
      os << value.to_string() << '\n';
    }
  } else if (sub == "a-coeffs") {
    Tree tree = load_tree(config);
    auto a = extract_a_coeffs(tree);
    if (config.format == OutputFormat::json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& ai : a) arr.push_back(to_json(ai));
      os << nlohmann::json{{"tree", pruefer_literal(tree)}, {"a", arr}}.dump() << '\n';
    } else if (config.format == OutputFormat::csv) {
      os << "i,a_i\n";
      for (std::size_t i = 0; i < a.size(); ++i) os << i << ',' << csv_quote(a[i].to_string()) << '\n';
    } else {
      for (std::size_t i = 0; i < a.size(); ++i) os << "a_" << i << " = " << a[i].to_string() << '\n';
    }
  } else if (sub == "verify") {
    return run_verify(config, os);
  } else if (sub == "path") {
    return run_path(config, os);
  } else {
    throw std::invalid_argument("unknown subcommand: " + sub);
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    if (config.output_path.empty()) return dispatch(config, out);
    const std::string target = resolve_output_path(config.output_path);
    std::ofstream file(target);
    if (!file) throw std::invalid_argument("cannot open output file: " + target);
    return dispatch(config, file);
  } catch (const std::invalid_argument& e) {
    err << "qimm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "qimm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qimm: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseResult parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace qimm
