#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "permstat/enumerate.hpp"
#include "permstat/multipoly.hpp"
#include "permstat/permutation.hpp"
#include "permstat/phi_triple.hpp"
#include "permstat/signed_bijection.hpp"
#include "permstat/statistics.hpp"
#include "permstat/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace permstat;

// exit codes: 0 success, 1 verification counterexample, 2 usage/parse
// error, 3 domain violation
constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Accepts whitespace- and/or comma-separated letters; anything else is
// rejected.
Permutation parse_permutation(const std::vector<std::string>& args) {
  std::vector<int> letters;
  for (const std::string& arg : args) {
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("not an integer: '" + token + "'");
      letters.push_back(value);
      token.clear();
    };
    for (char c : arg) {
      if (c == ',' || c == ' ' || c == '\t') flush();
      else token += c;
    }
    flush();
  }
  if (letters.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(letters));
}

int run_stats(const std::vector<std::string>& perm_args) {
  const Permutation p = parse_permutation(perm_args);
  const LinearStats ls = linear_stats(p);
  const CyclicStats cs = cyclic_stats(p);

  ordered_json doc;
  doc["n"] = p.size();
  doc["perm"] = p.letters();
  doc["first_letter"] = p.first_letter();
  doc["inv"] = inversions(p);
  doc["sign"] = sign(p);
  doc["depth"] = depth(p);
  doc["drp"] = drp(p);
  doc["displacement"] = displacement(p);
  doc["asc_count"] = ls.asc_count;
  doc["des_positions"] = ls.des_positions;
  doc["des_values"] = ls.des_values;
  doc["asc2"] = ls.asc2_values;
  doc["suc_positions"] = ls.suc_positions;
  doc["suc_values"] = ls.suc_values;
  doc["exc_positions"] = cs.exc_positions;
  doc["exc"] = cs.exc_count;
  doc["exc_hat"] = cs.exc_hat_values;
  doc["aexc"] = cs.aexc_values;
  doc["fix_hat"] = cs.fix_hat_values;
  doc["fix_positions"] = cs.fix_positions;
  doc["drop_positions"] = cs.drop_positions;
  doc["nexc"] = cs.nexc_count;
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int run_map(const std::string& name, const std::vector<std::string>& perm_args) {
  const Permutation p = parse_permutation(perm_args);
  std::optional<Permutation> image;
  if (name == "phi-triple") image = phi_triple(p).image;
  else if (name == "phi-triple-inv") image = phi_triple_inverse(p);
  else if (name == "foata") image = foata_map(p);
  else if (name == "foata-inv") image = foata_map_inverse(p);
  else if (name == "phi-tilde") image = phi_tilde(p);
  else if (name == "psi1") image = psi1(p);
  else if (name == "psi2") image = psi2(p);
  else if (name == "f") image = f_map(p);
  else throw std::invalid_argument("unknown bijection '" + name + "'");
  std::cout << to_string(*image) << '\n';
  return kExitOk;
}

int run_trace(const std::string& name, const std::vector<std::string>& perm_args) {
  if (name != "phi-triple")
    throw std::invalid_argument("only phi-triple supports tracing");
  const Permutation p = parse_permutation(perm_args);
  const PhiResult r = phi_triple(p);

  std::cout << "words:";
  for (const Word& w : r.trace.initial_words) {
    std::cout << ' ';
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << w.letters[i];
    }
  }
  std::cout << '\n';

  const DropBiword& bw = r.trace.initial_biword;
  if (bw.columns() == 0) {
    std::cout << "biword: empty\n";
  } else {
    std::cout << "biword: top=";
    for (int j = 0; j < bw.columns(); ++j) std::cout << (j ? "," : "") << bw.top[j];
    std::cout << " bottom=";
    for (int j = 0; j < bw.columns(); ++j) std::cout << (j ? "," : "") << bw.bottom[j];
    std::cout << '\n';
  }

  for (const PhiIteration& it : r.trace.iterations)
    std::cout << render_iteration(it) << '\n';
  std::cout << "result: " << to_string(r.image) << '\n';
  return kExitOk;
}

int run_dist(int n, const std::string& stats_arg, bool with_sign, const std::string& format) {
  if (format != "json" && format != "csv")
    throw std::invalid_argument("format must be json or csv");
  const std::vector<std::string> names = split(stats_arg, ',');
  if (names.empty()) throw std::invalid_argument("no statistics given");

  std::vector<ScalarStat> scalars;
  std::vector<SetStat> sets;
  for (const std::string& name : names) {
    if (auto s = scalar_stat_from_name(name)) scalars.push_back(*s);
    else if (auto t = set_stat_from_name(name)) sets.push_back(*t);
    else throw std::invalid_argument("unknown statistic '" + name + "'");
  }
  if (!scalars.empty() && !sets.empty())
    throw std::invalid_argument("cannot mix scalar and set-valued statistics");

  if (!sets.empty()) {
    if (sets.size() != 1) throw std::invalid_argument("one set-valued statistic at a time");
    if (with_sign) throw std::invalid_argument("--signed applies to scalar statistics only");
    const DistributionTable table = set_valued_distribution(n, sets.front());
    if (format == "csv") {
      std::cout << to_csv(table);
    } else {
      ordered_json doc;
      doc["stat"] = set_stat_name(sets.front());
      doc["n"] = n;
      doc["total"] = table.total;
      auto& rows = doc["rows"] = ordered_json::array();
      for (const auto& [key, count] : table.rows)
        rows.push_back({{"key", render_set_key(key)}, {"count", count}});
      std::cout << doc.dump(2) << '\n';
    }
    return kExitOk;
  }

  const MultiPoly poly = joint_polynomial(n, scalars, with_sign);
  if (format == "csv") {
    for (const auto& [exponents, coeff] : poly.terms()) {
      for (int e : exponents) std::cout << e << ',';
      std::cout << coeff << '\n';
    }
  } else {
    std::cout << poly.json_string() << '\n';
  }
  return kExitOk;
}

int run_verify(int n_max, const std::string& theorem_arg) {
  if (n_max < 1 || n_max > 9)
    throw std::invalid_argument("--n-max must be between 1 and 9");
  std::vector<TheoremId> ids;
  if (theorem_arg == "all") {
    ids = all_theorems();
  } else if (auto id = theorem_from_name(theorem_arg)) {
    ids.push_back(*id);
  } else {
    throw std::invalid_argument("unknown theorem '" + theorem_arg + "'");
  }

  bool all_pass = true;
  for (TheoremId id : ids) {
    for (int n = 1; n <= n_max; ++n) {
      const CheckReport r = check_theorem(id, n);
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.theorem << " n=" << r.n;
      if (!r.detail.empty()) std::cout << " poly=" << r.detail;
      if (r.witness) std::cout << " witness=" << to_string(*r.witness);
      std::cout << " (" << std::fixed << std::setprecision(2) << r.elapsed_ms << " ms)\n";
      if (!r.pass) all_pass = false;
    }
  }
  if (!all_pass) {
    std::cerr << "verification found a counterexample\n";
    return kExitCounterexample;
  }
  std::cerr << "all checks passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation statistics, bijections and exhaustive verification"};
  app.require_subcommand(1);

  std::vector<std::string> perm_args;
  std::string bijection;
  std::string trace_bijection = "phi-triple";
  int dist_n = 0;
  std::string dist_stats;
  bool dist_signed = false;
  std::string dist_format = "json";
  int verify_n_max = 0;
  std::string verify_theorem = "all";

  CLI::App* stats_cmd = app.add_subcommand("stats", "all statistics of one permutation, as JSON");
  stats_cmd->add_option("perm", perm_args, "one-line notation, comma- or space-separated")
      ->required()
      ->expected(-1);

  CLI::App* map_cmd = app.add_subcommand("map", "apply a bijection to one permutation");
  map_cmd->add_option("--bijection", bijection,
                      "phi-triple | phi-triple-inv | foata | foata-inv | phi-tilde | psi1 | "
                      "psi2 | f")
      ->required();
  map_cmd->add_option("perm", perm_args, "one-line notation")->required()->expected(-1);

  CLI::App* trace_cmd = app.add_subcommand("trace", "print the merge trace of phi-triple");
  trace_cmd->add_option("--bijection", trace_bijection, "only phi-triple is traceable");
  trace_cmd->add_option("perm", perm_args, "one-line notation")->required()->expected(-1);

  CLI::App* dist_cmd = app.add_subcommand("dist", "exact distribution over S_n");
  dist_cmd->add_option("--n", dist_n, "symmetric group size")->required();
  dist_cmd
      ->add_option("--stats", dist_stats,
                   "comma list of scalar statistics (depth, drp, exc, des, asc, exc-hat, aexc, "
                   "fix-hat, exc-hat+fix-hat) or one set-valued statistic (suc-set, fix-set, "
                   "linear-triple, cyclic-triple)")
      ->required();
  dist_cmd->add_flag("--signed", dist_signed, "weight each permutation by its sign");
  dist_cmd->add_option("--format", dist_format, "json (default) or csv");

  CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustively check the identities");
  verify_cmd->add_option("--n-max", verify_n_max, "check S_1 .. S_n-max (at most 9)")->required();
  verify_cmd->add_option("--theorem", verify_theorem,
                         "suc-fix | triple | depth-exc-drp-des | signed-depth | signed-drp | "
                         "sign-bijection | displacement | drop-des | eulerian | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (stats_cmd->parsed()) return run_stats(perm_args);
    if (map_cmd->parsed()) return run_map(bijection, perm_args);
    if (trace_cmd->parsed()) return run_trace(trace_bijection, perm_args);
    if (dist_cmd->parsed()) return run_dist(dist_n, dist_stats, dist_signed, dist_format);
    if (verify_cmd->parsed()) return run_verify(verify_n_max, verify_theorem);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
