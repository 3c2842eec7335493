#include "descents/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "descents/aggregates.hpp"
#include "descents/counting.hpp"
#include "descents/moments.hpp"
#include "descents/montecarlo.hpp"
#include "descents/verify.hpp"

namespace descents {

namespace {

using json = nlohmann::ordered_json;

struct Output {
  std::string command;
  json params = json::object();
  json results = json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> text_lines;
};

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

void emit(std::ostream& out, const std::string& format, const Output& output,
          bool deterministic, double elapsed_ms) {
  if (format == "json") {
    json record;
    record["command"] = output.command;
    record["params"] = output.params;
    record["results"] = output.results;
    record["meta"] = deterministic ? json::object() : json{{"elapsed_ms", elapsed_ms}};
    out << record.dump(2) << "\n";
  } else if (format == "csv") {
    std::string line;
    for (std::size_t i = 0; i < output.csv_header.size(); ++i) {
      if (i) line += ',';
      line += csv_escape(output.csv_header[i]);
    }
    out << line << "\n";
    for (const auto& row : output.csv_rows) {
      line.clear();
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) line += ',';
        line += csv_escape(row[i]);
      }
      out << line << "\n";
    }
  } else {
    for (const auto& text_line : output.text_lines) out << text_line << "\n";
    if (!deterministic) out << "(" << format_double(elapsed_ms) << " ms)\n";
  }
}

std::string word_or_empty_label(const BinaryWord& word) {
  return word.p() == 1 ? "<empty>" : word.label();
}

Output cmd_row(int p, const std::string& algorithm_str) {
  const Algorithm algorithm = parse_algorithm(algorithm_str);
  const std::vector<BigInt> row = build_row(p, algorithm);

  Output output;
  output.command = "row";
  output.params = {{"p", p}, {"algorithm", algorithm_str}};
  output.csv_header = {"word", "value"};
  output.text_lines.push_back("row p=" + std::to_string(p) + " algorithm=" + algorithm_str);

  json entries = json::array();
  BigInt sum = 0;
  for (std::uint64_t d = 0; d < row.size(); ++d) {
    const BinaryWord word = BinaryWord::from_display_index(p, d);
    const std::string label = word_or_empty_label(word);
    const std::string value = row[d].str();
    entries.push_back({{"word", label}, {"value", value}});
    output.csv_rows.push_back({label, value});
    output.text_lines.push_back(label + " " + value);
    sum += row[d];
  }
  output.results = {{"p", p}, {"algorithm", algorithm_str}, {"entries", entries},
                    {"sum", sum.str()}};
  output.text_lines.push_back("sum " + sum.str());
  return output;
}

Output cmd_coeff(const std::string& word_str, const std::string& algorithm_str) {
  const BinaryWord word = BinaryWord::parse(word_str);
  const Algorithm algorithm = parse_algorithm(algorithm_str);
  const BigInt value = count(word, algorithm);
  const std::vector<int> descents = word.descent_positions();

  Output output;
  output.command = "coeff";
  output.params = {{"word", word_str}, {"algorithm", algorithm_str}};
  output.results = {{"word", word_str},
                    {"p", word.p()},
                    {"descent_set", descents},
                    {"value", value.str()},
                    {"algorithm", algorithm_str}};
  output.csv_header = {"word", "p", "descent_set", "value"};
  std::string set_str = "{";
  for (std::size_t i = 0; i < descents.size(); ++i) {
    if (i) set_str += ",";
    set_str += std::to_string(descents[i]);
  }
  set_str += "}";
  output.csv_rows.push_back({word_str, std::to_string(word.p()), set_str, value.str()});
  output.text_lines.push_back("word " + word_or_empty_label(word) + "  p=" +
                              std::to_string(word.p()) + "  descents=" + set_str);
  output.text_lines.push_back("count " + value.str());
  return output;
}

Output cmd_verify_output(const VerifyReport& report, int p_max) {
  Output output;
  output.command = "verify";
  output.params = {{"pmax", p_max}};
  json checks = json::array();
  output.csv_header = {"check", "pass", "detail"};
  for (const VerifyCheck& check : report.checks) {
    checks.push_back({{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    output.csv_rows.push_back({check.name, check.pass ? "1" : "0", check.detail});
    output.text_lines.push_back((check.pass ? "PASS " : "FAIL ") + check.name +
                                (check.detail.empty() ? "" : " — " + check.detail));
  }
  output.results = {{"ok", report.ok}, {"checks", checks}};
  output.text_lines.push_back(report.ok ? "verify: PASS" : "verify: FAIL");
  return output;
}

Output cmd_eulerian(int p, int k) {
  Output output;
  output.command = "eulerian";
  output.csv_header = {"k", "value"};
  if (k >= 0) {
    const BigInt value = eulerian(p, k);
    output.params = {{"p", p}, {"k", k}};
    output.results = {{"p", p}, {"k", k}, {"value", value.str()}};
    output.csv_rows.push_back({std::to_string(k), value.str()});
    output.text_lines.push_back("A(" + std::to_string(p) + "," + std::to_string(k) +
                                ") = " + value.str());
    return output;
  }
  const std::vector<BigInt> row = eulerian_row(p);
  output.params = {{"p", p}};
  json values = json::array();
  for (int i = 1; i <= p; ++i) {
    values.push_back(row[i - 1].str());
    output.csv_rows.push_back({std::to_string(i), row[i - 1].str()});
    output.text_lines.push_back("A(" + std::to_string(p) + "," + std::to_string(i) +
                                ") = " + row[i - 1].str());
  }
  output.results = {{"p", p}, {"values", values}};
  return output;
}

Output cmd_mahonian(int p, int k) {
  Output output;
  output.command = "mahonian";
  output.csv_header = {"k", "value"};
  if (k >= 0) {
    const BigInt value = mahonian(p, k);
    output.params = {{"p", p}, {"k", k}};
    output.results = {{"p", p}, {"k", k}, {"value", value.str()}};
    output.csv_rows.push_back({std::to_string(k), value.str()});
    output.text_lines.push_back("I(" + std::to_string(p) + "," + std::to_string(k) +
                                ") = " + value.str());
    return output;
  }
  const std::vector<BigInt> row = mahonian_row(p);
  output.params = {{"p", p}};
  json values = json::array();
  for (std::size_t i = 0; i < row.size(); ++i) {
    values.push_back(row[i].str());
    output.csv_rows.push_back({std::to_string(i), row[i].str()});
    output.text_lines.push_back("I(" + std::to_string(p) + "," + std::to_string(i) +
                                ") = " + row[i].str());
  }
  output.results = {{"p", p}, {"values", values}};
  return output;
}

Output cmd_alpha(std::uint64_t n_first, std::uint64_t n_last) {
  if (n_last < n_first) throw std::invalid_argument("alpha: end of range before start");
  Output output;
  output.command = "alpha";
  output.params = {{"n", n_first}};
  if (n_last > n_first) output.params["n_end"] = n_last;
  output.csv_header = {"n", "p", "word", "value"};
  json values = json::array();
  for (std::uint64_t n = n_first; n <= n_last; ++n) {
    const BinaryWord word = alpha_decode(n);
    const BigInt value = alpha(n);
    const std::string label = word_or_empty_label(word);
    values.push_back({{"n", n}, {"p", word.p()}, {"word", label}, {"value", value.str()}});
    output.csv_rows.push_back(
        {std::to_string(n), std::to_string(word.p()), label, value.str()});
    output.text_lines.push_back("alpha_" + std::to_string(n) + " = " + value.str() +
                                "  (p=" + std::to_string(word.p()) + " word=" + label + ")");
  }
  output.results = {{"values", values}};
  return output;
}

Output cmd_genfun(int p_max, int degree) {
  const GenfunReport report = check_generating_identity(p_max, degree);
  Output output;
  output.command = "genfun";
  output.params = {{"pmax", p_max}, {"degree", degree}};
  json alpha_values = json::array();
  output.csv_header = {"n", "alpha"};
  for (int n = 1; n <= degree; ++n) {
    alpha_values.push_back(report.alpha[n].str());
    output.csv_rows.push_back({std::to_string(n), report.alpha[n].str()});
  }
  output.results = {{"pmax", p_max},
                    {"degree", degree},
                    {"ok", report.ok},
                    {"first_mismatch", report.ok ? json(nullptr) : json(report.first_mismatch)},
                    {"alpha", alpha_values}};
  output.text_lines.push_back("generating identity to degree " + std::to_string(degree) +
                              " with p <= " + std::to_string(p_max) + ": " +
                              (report.ok ? "PASS" : "FAIL at degree " +
                                                        std::to_string(report.first_mismatch)));
  std::string alpha_line = "alpha:";
  for (int n = 1; n <= degree; ++n) alpha_line += " " + report.alpha[n].str();
  output.text_lines.push_back(alpha_line);
  return output;
}

Output cmd_moments_exact(const std::string& mu_csv, int p) {
  const MomentParams params = MomentParams::parse(mu_csv);
  const std::vector<BigRat> moments = moment_sequence(params, p);
  Output output;
  output.command = "moments";
  output.params = {{"mu", mu_csv}, {"p", p}};
  json mu_values = json::array();
  for (const BigRat& value : params.mu) mu_values.push_back(value.str());
  json e_values = json::array();
  output.csv_header = {"p", "e"};
  for (int q = 1; q <= p; ++q) {
    const std::string value = moments[q - 1].str();
    e_values.push_back(value);
    output.csv_rows.push_back({std::to_string(q), value});
    output.text_lines.push_back("e_" + std::to_string(q) + " = " + value);
  }
  output.results = {{"p", p}, {"mu", mu_values}, {"e", e_values}, {"exact", true}};
  return output;
}

Output cmd_moments_walk(double nu, int p) {
  const std::vector<double> moments = walk_moment_sequence(nu, p);
  Output output;
  output.command = "moments";
  output.params = {{"walk", nu}, {"p", p}};
  json mu_values = json::array();
  for (int k = 1; k <= p; ++k) mu_values.push_back(random_walk_mu(nu, k));
  json e_values = json::array();
  output.csv_header = {"p", "e"};
  for (int q = 1; q <= p; ++q) {
    e_values.push_back(moments[q - 1]);
    output.csv_rows.push_back({std::to_string(q), format_double(moments[q - 1])});
    output.text_lines.push_back("e_" + std::to_string(q) + " = " +
                                format_double(moments[q - 1]));
  }
  output.results = {{"p", p}, {"nu", nu}, {"mu", mu_values}, {"e", e_values}, {"exact", false}};
  return output;
}

Output cmd_simulate(const SimulationConfig& config) {
  const SimulationReport report = estimate_moments(config);
  Output output;
  output.command = "simulate";
  output.params = {{"nu", config.nu},
                   {"pmax", config.p_max},
                   {"n", config.samples},
                   {"seed", std::to_string(config.seed)},
                   {"k", config.truncation}};
  json moments = json::array();
  output.csv_header = {"p",       "mean",            "std_error",       "exact",
                       "z_score", "truncation_bound", "variance_warning"};
  output.text_lines.push_back(
      "simulate nu=" + format_double(config.nu) + " n=" + std::to_string(config.samples) +
      " seed=" + std::to_string(config.seed) + " K=" + std::to_string(report.truncation_used) +
      (report.truncation_auto ? " (auto)" : ""));
  for (const MomentEstimate& est : report.moments) {
    moments.push_back({{"p", est.p},
                       {"mean", est.mean},
                       {"std_error", est.std_error},
                       {"exact", est.exact},
                       {"z_score", est.z_score},
                       {"truncation_bound", est.truncation_bound},
                       {"variance_warning", est.variance_warning}});
    output.csv_rows.push_back({std::to_string(est.p), format_double(est.mean),
                               format_double(est.std_error), format_double(est.exact),
                               format_double(est.z_score), format_double(est.truncation_bound),
                               est.variance_warning ? "1" : "0"});
    output.text_lines.push_back(
        "p=" + std::to_string(est.p) + " mean=" + format_double(est.mean) +
        " exact=" + format_double(est.exact) + " se=" + format_double(est.std_error) +
        " z=" + format_double(est.z_score) + " bound=" + format_double(est.truncation_bound) +
        (est.variance_warning ? " [variance warning: mu_{2p} >= 1]" : ""));
  }
  if (report.insufficient_samples) {
    output.text_lines.push_back("warning: fewer than 2 samples, no standard errors");
  }
  output.results = {{"nu", config.nu},
                    {"pmax", config.p_max},
                    {"n", config.samples},
                    {"seed", std::to_string(config.seed)},
                    {"truncation", report.truncation_used},
                    {"truncation_auto", report.truncation_auto},
                    {"insufficient_samples", report.insufficient_samples},
                    {"moments", moments}};
  return output;
}

Output cmd_bench(int p_first, int p_last, const std::vector<std::string>& algorithm_names) {
  Output output;
  output.command = "bench";
  output.params = {{"p_first", p_first}, {"p_last", p_last}};
  output.csv_header = {"p", "algorithm", "milliseconds", "memo_hits", "memo_misses", "status"};
  json rows = json::array();
  output.text_lines.push_back("bench rows " + std::to_string(p_first) + ".." +
                              std::to_string(p_last));
  for (const std::string& name : algorithm_names) {
    const Algorithm algorithm = parse_algorithm(name);
    for (int p = p_first; p <= p_last; ++p) {
      MemoStats stats;
      std::string status = "ok";
      double ms = 0.0;
      try {
        const auto start = std::chrono::steady_clock::now();
        const BitsRow row = row_by_bits(p, algorithm, &stats);
        const auto stop = std::chrono::steady_clock::now();
        ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (row.empty()) status = "empty";  // unreachable, keeps row alive
      } catch (const std::invalid_argument&) {
        status = "skipped (limit)";
      }
      rows.push_back({{"p", p},
                      {"algorithm", name},
                      {"milliseconds", ms},
                      {"memo_hits", stats.hits},
                      {"memo_misses", stats.misses},
                      {"status", status}});
      output.csv_rows.push_back({std::to_string(p), name, format_double(ms),
                                 std::to_string(stats.hits), std::to_string(stats.misses),
                                 status});
      output.text_lines.push_back("p=" + std::to_string(p) + " " + name + " " +
                                  format_double(ms) + " ms  hits=" +
                                  std::to_string(stats.hits) + " misses=" +
                                  std::to_string(stats.misses) +
                                  (status == "ok" ? "" : "  [" + status + "]"));
    }
  }
  output.results = {{"rows", rows}};
  return output;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int single = std::stoi(text);
    return {single, single};
  }
  const int first = std::stoi(text.substr(0, dots));
  const int last = std::stoi(text.substr(dots + 2));
  if (last < first) throw std::invalid_argument("bench: empty p range");
  return {first, last};
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string::npos ? std::string::npos
                                                                : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact descent-set counts and moments of a random-walk exponential functional"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--deterministic may follow the subcommand

  std::string format = "text";
  bool deterministic = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--deterministic", deterministic, "suppress timing metadata");

  int row_p = 1;
  std::string row_algorithm = "pascal";
  CLI::App* row = app.add_subcommand("row", "one row of the coefficient triangle");
  row->add_option("p", row_p, "permutation length")->required();
  row->add_option("--algorithm", row_algorithm,
                  "oracle|sieve|prefix|pascal|splitting|macmahon");

  std::string coeff_word;
  std::string coeff_algorithm = "splitting";
  CLI::App* coeff = app.add_subcommand("coeff", "one coefficient by its word label");
  coeff->add_option("word", coeff_word, "binary word, j_1 first (e.g. 0110)")->required();
  coeff->add_option("--algorithm", coeff_algorithm,
                    "oracle|sieve|prefix|pascal|splitting|macmahon");

  int verify_pmax = 6;
  CLI::App* verify = app.add_subcommand("verify", "run the full cross-check suite");
  verify->add_option("--pmax", verify_pmax, "largest permutation length checked");

  int eulerian_p = 1;
  int eulerian_k = -1;
  CLI::App* eulerian_cmd = app.add_subcommand("eulerian", "Eulerian numbers A(p,k)");
  eulerian_cmd->add_option("p", eulerian_p)->required();
  eulerian_cmd->add_option("k", eulerian_k, "single k; omit for the whole row");

  int mahonian_p = 1;
  int mahonian_k = -1;
  CLI::App* mahonian_cmd = app.add_subcommand("mahonian", "Mahonian numbers I(p,k)");
  mahonian_cmd->add_option("p", mahonian_p)->required();
  mahonian_cmd->add_option("k", mahonian_k, "single k; omit for the whole row");

  std::uint64_t alpha_n = 1;
  std::uint64_t alpha_end = 0;
  CLI::App* alpha_cmd = app.add_subcommand("alpha", "the flattened coefficient sequence");
  alpha_cmd->add_option("n", alpha_n, "index, n >= 1")->required();
  alpha_cmd->add_option("n_end", alpha_end, "inclusive end of a range");

  int genfun_pmax = 6;
  int genfun_degree = 0;
  CLI::App* genfun = app.add_subcommand("genfun", "check the generating-function identity");
  genfun->add_option("--pmax", genfun_pmax, "series terms up to p");
  genfun->add_option("--degree", genfun_degree, "truncation degree (default 2^pmax - 1)");

  std::string moments_mu;
  double moments_walk = 0.0;
  int moments_p = 1;
  CLI::App* moments = app.add_subcommand("moments", "moments e_1..e_p");
  CLI::Option* mu_option =
      moments->add_option("--mu", moments_mu, "comma-separated rationals mu_1,mu_2,...");
  CLI::Option* walk_option =
      moments->add_option("--walk", moments_walk, "walk drift nu (double-precision path)");
  moments->add_option("--p", moments_p, "highest moment")->required();
  mu_option->excludes(walk_option);

  SimulationConfig sim_config;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo check of the moments");
  simulate->add_option("--nu", sim_config.nu, "walk drift");
  simulate->add_option("--pmax", sim_config.p_max, "highest moment");
  simulate->add_option("--n", sim_config.samples, "sample count");
  simulate->add_option("--seed", sim_config.seed, "RNG seed");
  simulate->add_option("--k", sim_config.truncation, "series truncation; 0 = auto");

  std::string bench_range = "1..8";
  std::string bench_algorithms = "pascal,splitting,sieve";
  CLI::App* bench = app.add_subcommand("bench", "time row construction per algorithm");
  bench->add_option("--p", bench_range, "row range, e.g. 1..12");
  bench->add_option("--algorithms", bench_algorithms, "comma-separated algorithm list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream buffer;
    const int code = app.exit(e, buffer, buffer);
    (code == 0 ? out : err) << buffer.str();
    return code == 0 ? 0 : 2;
  }

  int exit_code = 0;
  try {
    const auto start = std::chrono::steady_clock::now();
    Output output;
    if (row->parsed()) {
      output = cmd_row(row_p, row_algorithm);
    } else if (coeff->parsed()) {
      output = cmd_coeff(coeff_word, coeff_algorithm);
    } else if (verify->parsed()) {
      VerifyOptions verify_options;
      verify_options.p_max = verify_pmax;
      const VerifyReport report = run_verification(verify_options);
      output = cmd_verify_output(report, verify_pmax);
      if (!report.ok) exit_code = 1;
    } else if (eulerian_cmd->parsed()) {
      output = cmd_eulerian(eulerian_p, eulerian_k);
    } else if (mahonian_cmd->parsed()) {
      output = cmd_mahonian(mahonian_p, mahonian_k);
    } else if (alpha_cmd->parsed()) {
      output = cmd_alpha(alpha_n, alpha_end == 0 ? alpha_n : alpha_end);
    } else if (genfun->parsed()) {
      if (genfun_degree == 0) genfun_degree = (1 << genfun_pmax) - 1;
      output = cmd_genfun(genfun_pmax, genfun_degree);
    } else if (moments->parsed()) {
      if (mu_option->count() > 0) {
        output = cmd_moments_exact(moments_mu, moments_p);
      } else if (walk_option->count() > 0) {
        output = cmd_moments_walk(moments_walk, moments_p);
      } else {
        throw std::invalid_argument("moments: supply either --mu or --walk");
      }
    } else if (simulate->parsed()) {
      output = cmd_simulate(sim_config);
    } else if (bench->parsed()) {
      const auto [first, last] = parse_range(bench_range);
      output = cmd_bench(first, last, split_csv(bench_algorithms));
    }
    const auto stop = std::chrono::steady_clock::now();
    const double elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    emit(out, format, output, deterministic, elapsed_ms);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace descents
