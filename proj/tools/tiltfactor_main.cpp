// tiltfactor: exact root-system and character computations in
// characteristic p, with verification suites for tilting-module
// factorization identities.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "jobspec.hpp"
#include "report_json.hpp"
#include "suites.hpp"
#include "tiltfactor/modular.hpp"
#include "tiltfactor/theorems.hpp"

namespace tf = tiltfactor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

tf::Weight parse_weight(const std::vector<int>& coords, int rank, const char* field) {
  if (static_cast<int>(coords.size()) != rank)
    throw tf::InvalidInput(std::string(field) + ": expected " + std::to_string(rank) +
                           " comma-separated coordinates, got " + std::to_string(coords.size()));
  return tf::Weight(coords);
}

std::vector<int> parse_coords(const std::string& text, const char* field) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw tf::InvalidInput(std::string(field) + ": '" + part + "' is not an integer");
    }
  }
  if (out.empty()) throw tf::InvalidInput(std::string(field) + ": empty weight");
  return out;
}

tf::Budget job_budget(const tf::JobSpec& job) {
  if (job.budget > 0) return tf::Budget::from_scalar(job.budget);
  if (const char* env = std::getenv("TILTFACTOR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return tf::Budget::from_scalar(v);
    throw tf::InvalidInput("TILTFACTOR_BUDGET: '" + std::string(env) +
                           "' is not a positive integer");
  }
  return {};
}

void emit(const tf::JobSpec& job, const tf::Json& j, const std::string& text) {
  if (job.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

int run_describe(const tf::JobSpec& job) {
  auto datum = tf::build_root_datum(job.type_letter, job.rank);
  tf::Json j;
  j["type"] = std::string(1, datum.type_letter());
  j["rank"] = datum.rank();
  j["positive_roots"] = datum.positive_roots().size();
  j["weyl_order"] = tf::to_decimal(datum.weyl_order());
  j["coxeter_number"] = datum.coxeter_number();
  j["rho"] = datum.rho().coords();
  j["cartan"] = datum.cartan();
  j["highest_short_root_coroot"] = datum.highest_short_root_coroot();
  tf::Json mins = tf::Json::array();
  for (const auto& m : tf::minuscule_weights(datum)) mins.push_back(m.coords());
  j["minuscule"] = std::move(mins);

  std::ostringstream text;
  text << datum.type_letter() << datum.rank() << ": N=" << datum.positive_roots().size()
       << ", |W|=" << datum.weyl_order() << ", h=" << datum.coxeter_number()
       << ", rho=" << tf::to_string(datum.rho()) << "\n";
  text << "minuscule weights:";
  for (const auto& m : tf::minuscule_weights(datum)) text << " " << tf::to_string(m);
  if (tf::minuscule_weights(datum).empty()) text << " none";
  text << " (the zero weight is always minuscule)\n";
  emit(job, j, text.str());
  return kExitOk;
}

int run_char(const tf::JobSpec& job) {
  auto datum = tf::build_root_datum(job.type_letter, job.rank);
  const tf::Budget budget = job_budget(job);

  tf::Character c = tf::Character::trivial(datum);
  bool donkin = false;
  if (job.kind == "weyl" || job.kind == "orbit") {
    if (job.weights.empty()) throw tf::InvalidInput("char: --weight is required");
    const tf::Weight w = parse_weight(job.weights[0], datum.rank(), "--weight");
    c = job.kind == "weyl" ? tf::weyl_character(datum, w, budget) : tf::orbit_sum(datum, w);
  } else if (job.kind == "simple" || job.kind == "tilting") {
    if (job.p == 0) throw tf::InvalidInput("char: --p is required for kind " + job.kind);
    if (job.weights.empty()) throw tf::InvalidInput("char: --weight is required");
    tf::PrimeContext ctx(datum, job.p);
    const tf::Weight w = parse_weight(job.weights[0], datum.rank(), "--weight");
    c = job.kind == "simple" ? tf::simple_character(ctx, w, budget)
                             : tf::tilting_character(ctx, w, budget);
    donkin = ctx.donkin_assumed();
  } else if (job.kind == "steinberg") {
    if (job.p == 0 || job.r < 1)
      throw tf::InvalidInput("char: kind steinberg requires --p and --r >= 1");
    tf::PrimeContext ctx(datum, job.p);
    c = tf::weyl_character(datum, tf::steinberg_weight(ctx, job.r), budget);
    donkin = ctx.donkin_assumed();
  } else {
    throw tf::InvalidInput("char: unknown kind '" + job.kind +
                           "' (weyl|orbit|simple|tilting|steinberg)");
  }

  tf::Json j;
  j["kind"] = job.kind;
  j["entries"] = tf::character_json(c);
  j["dimension"] = tf::to_decimal(tf::dimension(c));
  j["decomposition"] = tf::combo_json(tf::decompose_weyl(c, budget));
  if (job.kind == "tilting") j["donkin_assumed"] = donkin;

  std::ostringstream text;
  text << "dominant entries: " << tf::character_text(c) << "\n";
  text << "dimension: " << tf::dimension(c) << "\n";
  text << "weyl decomposition: " << tf::combo_text(tf::decompose_weyl(c, budget)) << "\n";
  if (job.kind == "tilting" && donkin)
    text << "note: p < 2h-2, the tensor product theorem is assumed\n";
  emit(job, j, text.str());
  return kExitOk;
}

int run_tensor(const tf::JobSpec& job) {
  if (job.weights.size() != 2) throw tf::InvalidInput("tensor: exactly two --weight factors");
  auto datum = tf::build_root_datum(job.type_letter, job.rank);
  const tf::Budget budget = job_budget(job);
  const tf::Weight a = parse_weight(job.weights[0], datum.rank(), "--weight");
  const tf::Weight b = parse_weight(job.weights[1], datum.rank(), "--weight");
  auto prod =
      tf::tensor_product(tf::weyl_character(datum, a, budget), tf::weyl_character(datum, b, budget),
                         budget);
  auto combo = tf::decompose_weyl(prod, budget);

  tf::Json j;
  j["factors"] = tf::Json::array({a.coords(), b.coords()});
  j["entries"] = tf::character_json(prod);
  j["dimension"] = tf::to_decimal(tf::dimension(prod));
  j["decomposition"] = tf::combo_json(combo);

  std::ostringstream text;
  text << "chi" << tf::to_string(a) << " * chi" << tf::to_string(b) << " = "
       << tf::combo_text(combo) << "\n";
  text << "dimension: " << tf::dimension(prod) << "\n";
  emit(job, j, text.str());
  return kExitOk;
}

int run_minuscule(const tf::JobSpec& job) {
  auto datum = tf::build_root_datum(job.type_letter, job.rank);
  tf::Json j;
  tf::Json mins = tf::Json::array();
  for (const auto& m : tf::minuscule_weights(datum)) mins.push_back(m.coords());
  j["minuscule"] = std::move(mins);
  j["zero_weight_always_minuscule"] = true;

  std::ostringstream text;
  for (const auto& m : tf::minuscule_weights(datum))
    text << tf::to_string(m) << " dim=" << tf::weyl_dimension(datum, m) << "\n";
  if (tf::minuscule_weights(datum).empty()) text << "none\n";
  emit(job, j, text.str());
  return kExitOk;
}

int run_expand(const tf::JobSpec& job) {
  auto datum = tf::build_root_datum(job.type_letter, job.rank);
  if (job.p == 0) throw tf::InvalidInput("expand: --p is required");
  if (job.weights.empty()) throw tf::InvalidInput("expand: --weight is required");
  tf::PrimeContext ctx(datum, job.p);
  const tf::Weight w = parse_weight(job.weights[0], datum.rank(), "--weight");
  auto exp = tf::p_expand(ctx, w);

  tf::Json j;
  j["weight"] = w.coords();
  j["p"] = job.p;
  tf::Json digits = tf::Json::array();
  for (const auto& d : exp.digits) digits.push_back(d.coords());
  j["digits"] = std::move(digits);  // little-endian

  std::ostringstream text;
  text << tf::to_string(w) << " =";
  for (std::size_t i = 0; i < exp.digits.size(); ++i) {
    if (i) text << " +";
    text << " " << job.p << "^" << i << "*" << tf::to_string(exp.digits[i]);
  }
  if (exp.digits.empty()) text << " 0";
  text << "\n";
  emit(job, j, text.str());
  return kExitOk;
}

tf::WeylCombo combo_from_json(const tf::RootDatum& datum, const tf::Json& j, const char* field) {
  tf::TermMap terms{tf::WeightOrder(datum)};
  if (!j.is_array()) throw tf::InvalidInput(std::string(field) + ": expected an array of terms");
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw tf::InvalidInput(std::string(field) + ": each term is [[coords], coeff]");
    auto coords = term[0].get<std::vector<int>>();
    tf::BigInt coeff;
    if (term[1].is_number_integer())
      coeff = tf::BigInt(term[1].get<long>());
    else
      coeff = tf::BigInt(term[1].get<std::string>());
    terms[parse_weight(coords, datum.rank(), field)] += coeff;
  }
  return tf::WeylCombo::from_terms(datum, std::move(terms));
}

int report_exit(const tf::JobSpec& job, const tf::VerificationReport& rep) {
  tf::Json j = tf::report_json(rep);
  std::ostringstream text;
  text << (rep.passed ? "PASS" : "FAIL") << " " << tf::to_string(rep.claim);
  if (rep.target) text << " target=" << tf::to_string(*rep.target);
  text << "\n";
  if (rep.lhs) text << "  lhs: " << tf::combo_text(*rep.lhs) << "\n";
  if (rep.rhs) text << "  rhs: " << tf::combo_text(*rep.rhs) << "\n";
  if (rep.dim_lhs) text << "  dim lhs: " << tf::to_decimal(*rep.dim_lhs) << "\n";
  if (rep.dim_rhs) text << "  dim rhs: " << tf::to_decimal(*rep.dim_rhs) << "\n";
  for (const auto& s : rep.skipped) text << "  skipped: " << s << "\n";
  for (const auto& f : rep.failures) text << "  failure: " << f << "\n";
  if (rep.donkin_assumed)
    text << "  note: p < 2h-2, the tensor product theorem is assumed\n";
  emit(job, j, text.str());
  return rep.passed ? kExitOk : kExitVerificationFailed;
}

int run_verify(const tf::JobSpec& job) {
  auto datum = tf::build_root_datum(job.type_letter, job.rank);
  if (job.p == 0) throw tf::InvalidInput("verify: --p is required");
  tf::PrimeContext ctx(datum, job.p);
  const tf::Budget budget = job_budget(job);

  if (job.claim == "lemma") {
    if (job.weights.empty()) throw tf::InvalidInput("verify lemma: --weight is required");
    return report_exit(
        job, tf::check_lemma(ctx, parse_weight(job.weights[0], datum.rank(), "--weight"), budget));
  }
  if (job.claim == "proposition" || job.claim == "corollary_a" || job.claim == "corollary_b") {
    if (job.weights.empty()) throw tf::InvalidInput("verify: --weight (lambda) is required");
    if (job.r < 1) throw tf::InvalidInput("verify: --r >= 1 is required");
    const tf::Weight lambda = parse_weight(job.weights[0], datum.rank(), "--weight");
    const tf::Weight mu = job.mu ? parse_weight(*job.mu, datum.rank(), "--mu")
                                 : tf::Weight::zero(datum.rank());
    if (job.claim == "proposition")
      return report_exit(job, tf::check_proposition(ctx, job.r, mu, lambda, budget));
    const auto variant =
        job.claim == "corollary_a" ? tf::CorollaryVariant::a : tf::CorollaryVariant::b;
    return report_exit(job, tf::check_corollary(ctx, job.r, mu, lambda, variant, budget));
  }
  if (job.claim == "supplied") {
    tf::Json input;
    try {
      input = tf::Json::parse(std::cin);
    } catch (const std::exception& e) {
      throw tf::InvalidInput(std::string("verify supplied: stdin is not valid JSON: ") + e.what());
    }
    if (!input.contains("target")) throw tf::InvalidInput("verify supplied: missing 'target'");
    const tf::Weight target =
        parse_weight(input["target"].get<std::vector<int>>(), datum.rank(), "target");
    auto left = combo_from_json(datum, input.at("left"), "left");
    auto right = combo_from_json(datum, input.at("right"), "right");
    auto tilt = combo_from_json(datum, input.at("tilt"), "tilt");
    return report_exit(job,
                       tf::verify_supplied_factorization(ctx, target, left, right, tilt, budget));
  }
  throw tf::InvalidInput("verify: unknown claim '" + job.claim +
                         "' (lemma|proposition|corollary_a|corollary_b|supplied)");
}

int run_factorize(const tf::JobSpec& job) {
  auto datum = tf::build_root_datum(job.type_letter, job.rank);
  if (job.p == 0) throw tf::InvalidInput("factorize: --p is required");
  tf::PrimeContext ctx(datum, job.p);
  const tf::Budget budget = job_budget(job);

  int r = job.r;
  tf::Weight mu = job.mu ? parse_weight(*job.mu, datum.rank(), "--mu")
                         : tf::Weight::zero(datum.rank());
  tf::Weight lambda = tf::Weight::zero(datum.rank());
  if (job.target) {
    const tf::Weight hw = parse_weight(*job.target, datum.rank(), "--target");
    if (!hw.is_zero()) {
      auto step = tf::tilting_greedy_step(ctx, hw);
      if (!step)
        throw tf::CoverageError("factorize: " + tf::to_string(hw) +
                                " has no Steinberg layer decomposition");
      r = step->r;
      mu = step->mu;
      lambda = step->lambda;
    }
  } else {
    if (job.weights.empty())
      throw tf::InvalidInput("factorize: --weight (lambda) or --target is required");
    lambda = parse_weight(job.weights[0], datum.rank(), "--weight");
  }

  auto certs = tf::enumerate_factorizations(ctx, r, mu, lambda, budget);
  for (const auto& cert : certs) {
    std::ostringstream text;
    text << "T" << tf::to_string(cert.target) << " = L" << tf::to_string(cert.left_weight)
         << " x L" << tf::to_string(cert.right_weight)
         << (cert.character_checked ? "  [character checked]" : "  [unchecked]") << "\n";
    emit(job, tf::certificate_json(cert), text.str());
  }
  if (job.format != "json") std::cout << certs.size() << " factorization(s)\n";
  return kExitOk;
}

int run_suite_cmd(const tf::JobSpec& job) {
  if (!tf::known_suite(job.suite)) throw tf::InvalidInput("unknown suite '" + job.suite + "'");
  const tf::Budget budget = job_budget(job);
  auto items = tf::run_suite_items(job.suite, budget, job.jobs);

  std::size_t passed = 0;
  const tf::SuiteItem* first_failure = nullptr;
  for (const auto& item : items) {
    if (item.passed)
      ++passed;
    else if (!first_failure)
      first_failure = &item;
    if (job.format == "json") {
      tf::Json j;
      j["item"] = item.name;
      j["passed"] = item.passed;
      if (!item.detail.empty()) j["detail"] = item.detail;
      if (item.report) j["report"] = tf::report_json(*item.report);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (item.passed ? "[PASS] " : "[FAIL] ") << item.name << "\n";
    }
  }
  if (job.format == "json") {
    tf::Json summary;
    summary["suite"] = job.suite;
    summary["passed"] = passed;
    summary["failed"] = items.size() - passed;
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << "suite " << job.suite << ": " << passed << "/" << items.size() << " passed\n";
    if (first_failure) {
      std::cout << "first failure: " << first_failure->name << "\n";
      if (!first_failure->detail.empty()) std::cout << "  " << first_failure->detail << "\n";
      if (first_failure->report)
        std::cout << tf::report_json(*first_failure->report).dump(2) << "\n";
    }
  }
  return passed == items.size() ? kExitOk : kExitVerificationFailed;
}

int run(const tf::JobSpec& job) {
  if (job.command == "describe") return run_describe(job);
  if (job.command == "char") return run_char(job);
  if (job.command == "tensor") return run_tensor(job);
  if (job.command == "minuscule") return run_minuscule(job);
  if (job.command == "expand") return run_expand(job);
  if (job.command == "verify") return run_verify(job);
  if (job.command == "factorize") return run_factorize(job);
  if (job.command == "suite") return run_suite_cmd(job);
  throw tf::InvalidInput("unknown command '" + job.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-system and tilting-character computations in characteristic p"};
  app.require_subcommand(1);

  tf::JobSpec job;
  std::vector<std::string> weights_raw;
  std::string mu_raw, target_raw;

  auto add_common = [&](CLI::App* cmd, bool needs_type) {
    if (needs_type) {
      cmd->add_option("--type", job.type_letter, "root system type letter A-G")->required();
      cmd->add_option("--rank", job.rank, "root system rank")->required();
    }
    cmd->add_option("--format", job.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget", job.budget,
                    "cost budget override (orbit elements / weight pairs)");
  };

  auto* describe = app.add_subcommand("describe", "print the combinatorial data of a root system");
  add_common(describe, true);

  auto* chr = app.add_subcommand("char", "compute a character and its Weyl decomposition");
  add_common(chr, true);
  chr->add_option("--kind", job.kind, "weyl|orbit|simple|tilting|steinberg");
  chr->add_option("--p", job.p, "prime characteristic");
  chr->add_option("--r", job.r, "twist exponent (steinberg kind)");
  chr->add_option("--weight", weights_raw, "comma-separated fundamental coordinates");

  auto* tensor = app.add_subcommand("tensor", "decompose a product of two Weyl characters");
  add_common(tensor, true);
  tensor->add_option("--weight", weights_raw, "two factors, repeat the flag")->expected(2);

  auto* minuscule = app.add_subcommand("minuscule", "list the minuscule weights");
  add_common(minuscule, true);

  auto* expand = app.add_subcommand("expand", "base-p digits of a dominant weight");
  add_common(expand, true);
  expand->add_option("--p", job.p, "prime characteristic")->required();
  expand->add_option("--weight", weights_raw, "comma-separated fundamental coordinates")
      ->required();

  auto* verify = app.add_subcommand("verify", "verify one factorization identity");
  add_common(verify, true);
  verify->add_option("claim", job.claim, "lemma|proposition|corollary_a|corollary_b|supplied")
      ->required();
  verify->add_option("--p", job.p, "prime characteristic")->required();
  verify->add_option("--r", job.r, "twist exponent");
  verify->add_option("--weight", weights_raw, "lambda, comma-separated");
  verify->add_option("--mu", mu_raw, "mu, comma-separated");

  auto* factorize = app.add_subcommand("factorize", "enumerate simple-times-simple factorizations");
  add_common(factorize, true);
  factorize->add_option("--p", job.p, "prime characteristic")->required();
  factorize->add_option("--r", job.r, "number of Steinberg digits");
  factorize->add_option("--weight", weights_raw, "lambda, comma-separated");
  factorize->add_option("--mu", mu_raw, "mu, comma-separated");
  factorize->add_option("--target", target_raw, "decompose this highest weight instead");

  auto* suite = app.add_subcommand("suite", "run a named verification batch");
  suite->add_option("name", job.suite, "table1|lemma-all|proposition-small|sl2-p2-complete|remark3")
      ->required();
  add_common(suite, false);
  suite->add_option("--jobs", job.jobs, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  job.command = app.get_subcommands().front()->get_name();
  try {
    for (const auto& w : weights_raw) job.weights.push_back(parse_coords(w, "--weight"));
    if (!mu_raw.empty()) job.mu = parse_coords(mu_raw, "--mu");
    if (!target_raw.empty()) job.target = parse_coords(target_raw, "--target");
    return run(job);
  } catch (const tf::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tf::CoverageError& e) {
    std::cerr << "coverage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tf::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
