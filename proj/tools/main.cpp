// Command-line front end: verification suites, one-off computations, JSON IO.

#include <CLI11.hpp>

#include <iostream>
#include <fstream>
#include <random>
#include <string>

#include "hyperoct/famsets.hpp"
#include "hyperoct/hadamard.hpp"
#include "hyperoct/json_io.hpp"
#include "hyperoct/rsk.hpp"

namespace ho = hyperoct;

namespace {

int cmd_verify(const std::string& suite, int n, bool json_out) {
  std::vector<ho::FineSetReport> reports;
  try {
    reports = ho::run_suite(suite, n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  bool all_pass = true;
  if (json_out) {
    ho::json out = ho::json::array();
    for (const auto& r : reports) {
      out.push_back(ho::to_json(r));
      all_pass = all_pass && r.pass;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass;
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.family << " (n=" << r.n
                << ") " << r.params;
      if (!r.detail.empty()) std::cout << " -- " << r.detail;
      std::cout << "\n";
      if (r.pass && r.schur_b) std::cout << "      " << ho::to_string(*r.schur_b) << "\n";
      if (r.pass && r.schur_a) std::cout << "      " << ho::to_string(*r.schur_a) << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_char(int n, const std::string& shape_json, bool json_out) {
  std::vector<ho::Bipartition> shapes;
  if (shape_json.empty()) {
    shapes = ho::bipartitions_of(n);
  } else {
    shapes.push_back(ho::bipartition_from_json(ho::json::parse(shape_json)));
    if (shapes.back().size() != n) {
      std::cerr << "error: shape size does not match --n\n";
      return 2;
    }
  }
  const std::vector<ho::Bipartition> classes = ho::bipartitions_of(n);
  if (json_out) {
    ho::json out;
    out["n"] = n;
    out["classes"] = ho::json::array();
    for (const auto& c : classes) out["classes"].push_back(ho::to_json(c));
    out["rows"] = ho::json::array();
    for (const auto& shape : shapes) {
      ho::json row;
      row["shape"] = ho::to_json(shape);
      row["values"] = ho::json::array();
      for (const auto& c : classes)
        row["values"].push_back(ho::chi_b(shape, ho::class_composition(c)).str());
      out["rows"].push_back(row);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "classes:";
    for (const auto& c : classes) std::cout << " " << ho::to_string(c);
    std::cout << "\n";
    for (const auto& shape : shapes) {
      std::cout << ho::to_string(shape) << ":";
      for (const auto& c : classes)
        std::cout << " " << ho::chi_b(shape, ho::class_composition(c)).str();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_fine_check(const std::string& path, const std::string& group, bool json_out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  ho::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return 2;
  }
  if (!j.is_array() || j.empty()) {
    std::cerr << "error: input must be a nonempty array\n";
    return 2;
  }

  const bool is_perm_list = j.front().is_array();
  try {
    if (group == "B") {
      ho::DescentDistributionB d;
      if (is_perm_list) {
        std::vector<ho::SignedPerm> perms;
        for (const auto& item : j) perms.push_back(ho::signed_perm_from_json(item));
        d = ho::sdes_distribution(perms.front().size(), perms);
      } else {
        const ho::SignedSet first(j.front().at("word").get<std::string>());
        d = ho::descent_distribution_b_from_json(j, first.n());
      }
      const ho::SchurSolveB solved = ho::dist_to_schur_b(d);
      const bool fine = solved.status == ho::SolveStatus::ok;
      if (json_out) {
        ho::json out{{"fine", fine}};
        out["verdict"] = fine ? "fine"
                        : solved.status == ho::SolveStatus::not_in_span
                            ? "not-in-span"
                            : "not-nonnegative-integral";
        if (solved.status != ho::SolveStatus::not_in_span)
          out["coefficients"] = ho::to_json(solved.coeffs);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "verdict: "
                  << (fine ? "fine set"
                      : solved.status == ho::SolveStatus::not_in_span
                          ? "NOT fine (distribution outside the SYT span)"
                          : "NOT fine (coefficients not nonnegative integers)")
                  << "\n";
        if (solved.status != ho::SolveStatus::not_in_span)
          std::cout << "coefficients: " << ho::to_string(solved.coeffs) << "\n";
      }
      return fine ? 0 : 1;
    }
    // group A
    ho::DescentDistributionA d;
    if (is_perm_list) {
      std::vector<ho::SignedPerm> perms;
      for (const auto& item : j) perms.push_back(ho::signed_perm_from_json(item));
      d = ho::des_distribution(perms.front().size(), perms);
    } else {
      int degree = 1;
      for (const auto& item : j)
        for (int v : item.at("set").get<std::vector<int>>())
          degree = std::max(degree, v + 1);
      d = ho::descent_distribution_a_from_json(j, degree);
    }
    const ho::SchurSolveA solved = ho::dist_to_schur_a(d);
    const bool fine = solved.status == ho::SolveStatus::ok;
    if (json_out) {
      ho::json out{{"fine", fine}};
      if (solved.status != ho::SolveStatus::not_in_span)
        out["coefficients"] = ho::to_json(solved.coeffs);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "verdict: " << (fine ? "fine set" : "NOT fine") << "\n";
      if (solved.status != ho::SolveStatus::not_in_span)
        std::cout << "coefficients: " << ho::to_string(solved.coeffs) << "\n";
    }
    return fine ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_det_weight(int n, const std::string& alpha_str, const std::string& which) {
  ho::Rat alpha = ho::rat_from_string(alpha_str);
  if (which == "a") alpha = 1;
  if (which == "ahat") alpha = 0;
  const ho::WeightMatrix a = ho::build_a(n);
  const ho::WeightMatrix a_hat = ho::build_a_hat(n);
  const ho::Rat exact = ho::det_exact_mix(a, a_hat, alpha);
  const ho::Rat closed = ho::det_closed_form(n, alpha);
  std::cout << "det(alpha*A_n + (1-alpha)*Ahat_n), n=" << n
            << ", alpha=" << ho::rat_to_string(alpha) << "\n";
  std::cout << "exact elimination: " << ho::rat_to_string(exact) << "\n";
  std::cout << "closed form:       " << ho::rat_to_string(closed) << "\n";
  return exact == closed ? 0 : 1;
}

int cmd_rsk(const std::string& perm_json) {
  const ho::SignedPerm w = ho::signed_perm_from_json(ho::json::parse(perm_json));
  const auto [p, q] = ho::rsk_b(w);
  ho::json out{{"P", ho::to_json(p)}, {"Q", ho::to_json(q)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_sdes(const std::string& perm_json) {
  const ho::SignedPerm w = ho::signed_perm_from_json(ho::json::parse(perm_json));
  const ho::SignedSet sigma = ho::sdes(w);
  ho::json out = ho::to_json(sigma);
  out["elements"] = sigma.elements();
  ho::json signs = ho::json::object();
  for (int s : sigma.elements()) signs[std::to_string(s)] = sigma.is_negative(s) ? "-" : "+";
  out["eps"] = signs;
  const std::set<int> d = ho::des(w);
  out["des"] = std::vector<int>(d.begin(), d.end());
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_stats(int n, long long sample, unsigned long long seed) {
  std::map<long long, long long> finv_hist, fmaj_hist;
  long long total = 0;
  if (sample > 0) {
    std::mt19937_64 rng(seed);
    std::vector<int> window(n);
    for (long long t = 0; t < sample; ++t) {
      for (int i = 0; i < n; ++i) window[i] = i + 1;
      for (int i = n - 1; i > 0; --i)
        std::swap(window[i], window[std::uniform_int_distribution<int>(0, i)(rng)]);
      for (int i = 0; i < n; ++i)
        if (std::uniform_int_distribution<int>(0, 1)(rng)) window[i] = -window[i];
      const ho::SignedPerm w(window);
      finv_hist[ho::finv(w)]++;
      fmaj_hist[ho::fmaj(w)]++;
      ++total;
    }
    std::cout << "sampled " << total << " elements of B_" << n << " (seed " << seed
              << ")\n";
  } else {
    ho::for_each_bn(n, [&](const ho::SignedPerm& w) {
      finv_hist[ho::finv(w)]++;
      fmaj_hist[ho::fmaj(w)]++;
      ++total;
    });
    std::cout << "|B_" << n << "| = " << total << "\n";
  }
  std::cout << "finv histogram:";
  for (const auto& [k, c] : finv_hist) std::cout << " " << k << ":" << c;
  std::cout << "\nfmaj histogram:";
  for (const auto& [k, c] : fmaj_hist) std::cout << " " << k << ":" << c;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent statistics and character formulas for S_n and B_n"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int verify_n = 0;
  bool verify_json = false;
  verify->add_option("suite", suite, "one of: roi roiB detA rsk gelfand knuth isdc "
                                     "coinv finv-fmaj poirier derangements kroots "
                                     "arcs negatives all")
      ->required();
  verify->add_option("--n", verify_n, "degree (default: per-suite)");
  verify->add_flag("--json", verify_json, "machine-readable output");

  auto* chr = app.add_subcommand("char", "print B_n character values");
  int char_n = 0;
  std::string shape_json;
  bool char_json = false;
  chr->add_option("--n", char_n, "degree")->required();
  chr->add_option("--shape", shape_json, "single shape, e.g. '{\"lambda\":[2],\"mu\":[1]}'");
  chr->add_flag("--json", char_json, "machine-readable output");

  auto* fine = app.add_subcommand("fine-check", "run the fine-set checker on a file");
  std::string input_path, group = "B";
  bool fine_json = false;
  fine->add_option("--input", input_path, "JSON file: list of signed permutations or a "
                                          "descent distribution")
      ->required();
  fine->add_option("--group", group, "A or B (default B)")
      ->check(CLI::IsMember({"A", "B"}));
  fine->add_flag("--json", fine_json, "machine-readable output");

  auto* det = app.add_subcommand("det-weight", "exact and closed-form determinants");
  int det_n = 1;
  std::string alpha = "1", matrix = "a";
  det->add_option("--n", det_n, "degree")->required();
  det->add_option("--alpha", alpha, "rational p/q for the mixed matrix");
  det->add_option("--matrix", matrix, "a, ahat or mix")
      ->check(CLI::IsMember({"a", "ahat", "mix"}));

  auto* rsk_cmd = app.add_subcommand("rsk", "type-B insertion pair of a signed permutation");
  std::string rsk_perm;
  rsk_cmd->add_option("--perm", rsk_perm, "window as JSON, e.g. '[-2,3,-1]'")->required();

  auto* sdes_cmd = app.add_subcommand("sdes", "signed descent set of a signed permutation");
  std::string sdes_perm;
  sdes_cmd->add_option("--perm", sdes_perm, "window as JSON")->required();

  auto* stats = app.add_subcommand("stats", "statistic histograms over B_n");
  int stats_n = 0;
  long long stats_sample = 0;
  unsigned long long stats_seed = 0;
  stats->add_option("--n", stats_n, "degree")->required();
  stats->add_option("--sample", stats_sample, "sample size (0 = exhaustive)");
  stats->add_option("--seed", stats_seed, "random seed for sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  static const std::map<std::string, int> default_n = {
      {"roi", 5},     {"roiB", 4},    {"detA", 4},         {"rsk", 4},
      {"gelfand", 4}, {"knuth", 4},   {"isdc", 4},         {"coinv", 3},
      {"finv-fmaj", 4}, {"poirier", 4}, {"derangements", 4}, {"kroots", 4},
      {"arcs", 4},    {"negatives", 3}, {"all", 3}};

  try {
    if (*verify) {
      int n = verify_n;
      if (n == 0) {
        const auto it = default_n.find(suite);
        n = it != default_n.end() ? it->second : 4;
      }
      return cmd_verify(suite, n, verify_json);
    }
    if (*chr) return cmd_char(char_n, shape_json, char_json);
    if (*fine) return cmd_fine_check(input_path, group, fine_json);
    if (*det) return cmd_det_weight(det_n, alpha, matrix);
    if (*rsk_cmd) return cmd_rsk(rsk_perm);
    if (*sdes_cmd) return cmd_sdes(sdes_perm);
    if (*stats) return cmd_stats(stats_n, stats_sample, stats_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
