// Command-line front end: order computations, theorem verification sweeps,
// diagram export, homomorphism checks, and coset-representative reports, all
// as JSON suitable for CI consumption.
//
// Exit codes: 0 success, 2 internal disagreement or failed verification,
// 3 resource limit, 64 usage error, 65 proposition hypothesis not satisfied.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxeter2d/errors.hpp"
#include "coxeter2d/parabolic.hpp"
#include "coxeter2d/report_json.hpp"

namespace {

using namespace coxeter2d;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 64;
constexpr int kExitHypothesis = 65;

struct RunConfig {
  std::string command;
  std::string lambda_text;
  std::string mu_text;
  std::string method = "all";
  std::string format;
  std::string subset_text;
  std::string output_path;
  std::string dump_table_path;
  int total = 0;
  bool all_pairs = false;
  int n = 0;
  uint64_t max_cosets = kDefaultMaxCosets;
  uint64_t element_limit = kDefaultElementLimit;
  int enum_cap = 4;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file " + cfg.output_path);
  out << text << "\n";
}

std::pair<Decomposition, Decomposition> parse_pair(const RunConfig& cfg) {
  const Decomposition lambda = Decomposition::parse(cfg.lambda_text);
  const Decomposition mu = Decomposition::parse(cfg.mu_text);
  if (lambda.total() != mu.total()) {
    throw std::invalid_argument("lambda and mu must have equal totals (" +
                                lambda.str() + " vs " + mu.str() + ")");
  }
  return {lambda, mu};
}

int cmd_order(const RunConfig& cfg) {
  const auto [lambda, mu] = parse_pair(cfg);
  const int total = lambda.total();
  const bool all = cfg.method == "all";

  json orders;
  if (all || cfg.method == "recursion") {
    orders["recursive"] = json_of_big(order_recursive(lambda, mu));
  }
  if (cfg.method == "bruteforce" || (all && total <= cfg.enum_cap)) {
    orders["bruteforce"] = json_of_big(order_bruteforce(lambda, mu, cfg.enum_cap));
  }
  if ((all || cfg.method == "presentation") && (total >= 2 || cfg.method == "presentation")) {
    if (total < 2) throw std::invalid_argument("presentation route needs total >= 2");
    const auto system = restricted(a2n(total - 1), generator_subset(lambda, mu));
    orders["presentation"] = json_of_big(group_order(system, cfg.max_cosets));
  }
  if ((all || cfg.method == "closure") && (total >= 2 || cfg.method == "closure")) {
    if (total < 2) throw std::invalid_argument("closure route needs total >= 2");
    const int n = total - 1;
    std::vector<GF2Matrix> gens;
    for (const Generator& g : generator_subset(lambda, mu).members()) {
      gens.push_back(phi(g, n));
    }
    orders["closure"] = json_of_big(closure(std::move(gens), cfg.element_limit, n + 1).order());
  }
  if (orders.empty()) throw std::invalid_argument("unknown method '" + cfg.method + "'");

  json out;
  out["lambda"] = lambda.str();
  out["mu"] = mu.str();
  out["method"] = cfg.method;
  out["orders"] = orders;

  bool agree = true;
  if (all) {
    for (const auto& [key, value] : orders.items()) {
      if (value != orders["recursive"]) agree = false;
    }
    out["agree"] = agree;
  }
  emit(cfg, out.dump(2));
  return agree ? kExitOk : kExitDisagreement;
}

VerifyOptions options_from(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.max_cosets = cfg.max_cosets;
  opt.element_limit = cfg.element_limit;
  opt.bruteforce_cap = cfg.enum_cap;
  return opt;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::pair<Decomposition, Decomposition>> pairs;
  if (cfg.all_pairs) {
    if (cfg.total < 2) throw std::invalid_argument("--all-pairs needs --total >= 2");
    const auto comps = compositions_of(cfg.total);
    for (const auto& lambda : comps) {
      for (const auto& mu : comps) pairs.emplace_back(lambda, mu);
    }
  } else {
    if (cfg.lambda_text.empty() || cfg.mu_text.empty()) {
      throw std::invalid_argument("verify needs --lambda and --mu, or --total with --all-pairs");
    }
    pairs.push_back(parse_pair(cfg));
  }

  const VerifyOptions opt = options_from(cfg);
  std::vector<VerificationReport> reports(pairs.size(), VerificationReport{
      Decomposition({1}), Decomposition({1}), 0, {}, {}, {}, {}, Verdict::Fail, ""});

  // Pairs are independent; fan out and keep the output in pair order.
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1)) {
      reports[i] = verify_theorem(pairs[i].first, pairs[i].second, opt);
    }
  };
  const size_t nthreads =
      std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()), pairs.size());
  std::vector<std::thread> threads;
  for (size_t t = 0; t + 1 < nthreads; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  bool any_fail = false;
  bool any_skip = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) any_fail = true;
    if (r.verdict == Verdict::Skipped) any_skip = true;
  }

  if (cfg.format == "text") {
    std::string text;
    for (const auto& r : reports) {
      text += verdict_str(r.verdict) + "  lambda=" + r.lambda.str() + " mu=" + r.mu.str() +
              " order=" + r.recursive_order.str();
      if (!r.reason.empty()) text += "  (" + r.reason + ")";
      text += "\n";
    }
    text += std::string(any_fail ? "FAILED" : (any_skip ? "SKIPPED" : "OK"));
    emit(cfg, text);
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(json_of(r));
    emit(cfg, arr.dump(2));
  }
  if (any_fail) return kExitDisagreement;
  if (any_skip) return kExitResource;
  return kExitOk;
}

int cmd_diagram(const RunConfig& cfg) {
  TwoDimCoxeterSystem system = a2n(cfg.n);
  if (!cfg.subset_text.empty()) {
    std::vector<Generator> members;
    size_t start = 0;
    const std::string& text = cfg.subset_text;
    while (start <= text.size()) {
      size_t end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      members.push_back(Generator::from_label(text.substr(start, end - start)));
      if (end == text.size()) break;
      start = end + 1;
    }
    system = restricted(system, GeneratorSubset(std::move(members)));
  }
  DiagramFormat format;
  if (cfg.format == "dot" || cfg.format.empty()) {
    format = DiagramFormat::Dot;
  } else if (cfg.format == "json") {
    format = DiagramFormat::Json;
  } else {
    throw std::invalid_argument("unsupported diagram format '" + cfg.format + "'");
  }
  std::string text = export_diagram(system, format);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  emit(cfg, text);
  return kExitOk;
}

int cmd_phi_check(const RunConfig& cfg) {
  const auto report = check_homomorphism(a2n(cfg.n), cfg.n);
  emit(cfg, json_of(report, cfg.n).dump(2));
  return report.ok ? kExitOk : kExitDisagreement;
}

int cmd_cosets(const RunConfig& cfg) {
  const auto [lambda, mu] = parse_pair(cfg);
  const auto reps = coset_rep_words(lambda, mu);  // throws HypothesisError -> 65
  const int n = lambda.total() - 1;
  const auto system = restricted(a2n(n), generator_subset(lambda, mu));
  const auto h = generator_subset(lambda, mu_prime(mu));

  std::vector<Word> h_words;
  for (const Generator& g : h.members()) h_words.push_back(Word{g});
  const CosetTable table = coset_enumerate(system, h_words, cfg.max_cosets);
  if (!cfg.dump_table_path.empty()) {
    std::ofstream out(cfg.dump_table_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + cfg.dump_table_path);
    out << table.to_csv();
  }
  const CosetRepReport report = check_reps(table, reps);

  json out;
  out["lambda"] = lambda.str();
  out["mu"] = mu.str();
  out["case"] = (mu.last() <= lambda.last()) ? "1<mu_m<=lambda_l" : "lambda_l=1";
  json rep_words = json::array();
  for (const Word& w : reps) rep_words.push_back(word_str(w));
  out["reps"] = rep_words;
  out["report"] = json_of(report);
  emit(cfg, out.dump(2));
  return (report.distinct && report.covering) ? kExitOk : kExitDisagreement;
}

uint64_t env_max_cosets() {
  const char* value = std::getenv("COXETER2D_MAX_COSETS");
  if (!value) return kDefaultMaxCosets;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(value, &end, 10);
  if (end == value || *end != '\0' || parsed == 0) {
    throw std::invalid_argument("COXETER2D_MAX_COSETS must be a positive integer");
  }
  return parsed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;

  CLI::App app{"two-dimensional Coxeter systems and parabolic intersections over GF(2)"};
  app.require_subcommand(1);

  auto* order = app.add_subcommand("order", "compute |P_{lambda|mu}| by one or all methods");
  order->add_option("--lambda", cfg.lambda_text, "decomposition, e.g. 2,1")->required();
  order->add_option("--mu", cfg.mu_text, "decomposition with the same total")->required();
  order->add_option("--method", cfg.method, "recursion|bruteforce|presentation|closure|all")
      ->check(CLI::IsMember({"recursion", "bruteforce", "presentation", "closure", "all"}));

  auto* verify = app.add_subcommand("verify", "cross-check all order computations");
  verify->add_option("--lambda", cfg.lambda_text, "decomposition");
  verify->add_option("--mu", cfg.mu_text, "decomposition");
  verify->add_option("--total", cfg.total, "sweep total for --all-pairs");
  verify->add_flag("--all-pairs", cfg.all_pairs, "verify every ordered composition pair");
  verify->add_option("--format", cfg.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* diagram = app.add_subcommand("diagram", "export the labeled diagram");
  diagram->add_option("--n", cfg.n, "chain length of a2n")->required()->check(CLI::PositiveNumber);
  diagram->add_option("--subset", cfg.subset_text, "comma-separated generator labels");
  diagram->add_option("--format", cfg.format, "dot|json");

  auto* phi_check = app.add_subcommand("phi-check", "verify the matrix assignment is a homomorphism");
  phi_check->add_option("--n", cfg.n, "chain length, 1..31")->required()->check(CLI::Range(1, 31));

  auto* cosets = app.add_subcommand("cosets", "coset representatives of the mu' subgroup");
  cosets->add_option("--lambda", cfg.lambda_text, "decomposition")->required();
  cosets->add_option("--mu", cfg.mu_text, "decomposition")->required();
  cosets->add_option("--dump-table", cfg.dump_table_path, "write the coset table as CSV");

  for (CLI::App* sub : {order, verify, cosets}) {
    sub->add_option("--max-cosets", cfg.max_cosets, "enumeration bound");
  }
  for (CLI::App* sub : {order, verify}) {
    sub->add_option("--element-limit", cfg.element_limit, "closure bound");
    sub->add_option("--enum-cap", cfg.enum_cap, "largest total enumerated by brute force");
  }
  app.add_option("--output", cfg.output_path, "write to a file instead of stdout");

  try {
    cfg.max_cosets = env_max_cosets();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(order)) return cmd_order(cfg);
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
    if (app.got_subcommand(diagram)) return cmd_diagram(cfg);
    if (app.got_subcommand(phi_check)) return cmd_phi_check(cfg);
    if (app.got_subcommand(cosets)) return cmd_cosets(cfg);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
