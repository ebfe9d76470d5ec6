#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gompertz/distribution.hpp"
#include "gompertz/fit.hpp"
#include "gompertz/growth.hpp"
#include "gompertz/kl.hpp"
#include "gompertz/selfcheck.hpp"

namespace {

// 17 significant digits round-trip doubles in JSON; CSV favors readability.
std::string json_num(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GOMPERTZ_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    std::cerr << "warning: ignoring malformed GOMPERTZ_SEED='" << env << "'\n";
  }
  return 42;  // documented default
}

std::vector<double> make_grid(double lo, double hi, std::size_t steps) {
  if (!(steps >= 2)) {
    throw std::invalid_argument("grid needs --steps >= 2");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("grid needs --x-min < --x-max");
  }
  std::vector<double> xs;
  xs.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    xs.push_back(lo + (hi - lo) * static_cast<double>(i) /
                          static_cast<double>(steps - 1));
  }
  return xs;
}

struct EvalArgs {
  double b = 0, q = 0;
  std::vector<double> xs;
  double x_min = 0.0, x_max = 0.0;
  std::size_t steps = 0;
  std::string format = "json";
};

int run_eval(const EvalArgs& a) {
  const gompertz::GompertzParams p(a.b, a.q);
  std::vector<double> xs = a.xs;
  if (xs.empty()) {
    if (a.steps == 0) {
      throw std::invalid_argument(
          "eval: provide --x values or a range via --x-min/--x-max/--steps");
    }
    xs = make_grid(a.x_min, a.x_max, a.steps);
  }
  if (a.format == "csv") {
    std::cout << "x,pdf,log_pdf,cdf\n";
    for (double x : xs) {
      std::cout << csv_num(x) << ',' << csv_num(gompertz::pdf(p, x)) << ','
                << csv_num(gompertz::log_pdf(p, x)) << ','
                << csv_num(gompertz::cdf(p, x)) << '\n';
    }
  } else {
    std::cout << "[\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double x = xs[i];
      std::cout << "  {\"x\": " << json_num(x)
                << ", \"pdf\": " << json_num(gompertz::pdf(p, x))
                << ", \"log_pdf\": " << json_num(gompertz::log_pdf(p, x))
                << ", \"cdf\": " << json_num(gompertz::cdf(p, x)) << "}"
                << (i + 1 < xs.size() ? "," : "") << "\n";
    }
    std::cout << "]\n";
  }
  return 0;
}

struct KlArgs {
  double b1 = 0, q1 = 0, b2 = 0, q2 = 0;
  bool oracle = false;
  double tol = 1e-10;
  std::string format = "json";
};

int run_kl(const KlArgs& a) {
  const gompertz::GompertzParams p1(a.b1, a.q1), p2(a.b2, a.q2);
  const gompertz::KLBreakdown kl = gompertz::kl_closed_form(p1, p2);
  double oracle = 0.0, oracle_err = 0.0, abs_diff = 0.0;
  if (a.oracle) {
    const auto num = gompertz::kl_numeric(p1, p2, a.tol);
    oracle = num.value;
    oracle_err = num.error_estimate;
    abs_diff = std::abs(kl.total - oracle);
  }
  if (a.format == "csv") {
    std::cout << "term_const,term_ei,term_gamma,term_linear,total";
    if (a.oracle) std::cout << ",oracle,abs_diff";
    std::cout << '\n';
    std::cout << csv_num(kl.term_const) << ',' << csv_num(kl.term_ei) << ','
              << csv_num(kl.term_gamma) << ',' << csv_num(kl.term_linear)
              << ',' << csv_num(kl.total);
    if (a.oracle) std::cout << ',' << csv_num(oracle) << ',' << csv_num(abs_diff);
    std::cout << '\n';
  } else {
    std::cout << "{\n"
              << "  \"term_const\": " << json_num(kl.term_const) << ",\n"
              << "  \"term_ei\": " << json_num(kl.term_ei) << ",\n"
              << "  \"term_gamma\": " << json_num(kl.term_gamma) << ",\n"
              << "  \"term_linear\": " << json_num(kl.term_linear) << ",\n"
              << "  \"total\": " << json_num(kl.total);
    if (a.oracle) {
      std::cout << ",\n  \"oracle\": " << json_num(oracle)
                << ",\n  \"oracle_error_estimate\": " << json_num(oracle_err)
                << ",\n  \"abs_diff\": " << json_num(abs_diff);
    }
    std::cout << "\n}\n";
  }
  if (a.oracle && abs_diff > 1e-6) {
    std::cerr << "kl: closed form and quadrature disagree by " << abs_diff
              << " (limit 1e-6)\n";
    return 3;
  }
  return 0;
}

struct SampleArgs {
  double b = 0, q = 0;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
};

int run_sample(const SampleArgs& a) {
  if (a.n == 0) {
    throw std::invalid_argument("sample: --n must be at least 1");
  }
  gompertz::Sampler sampler(gompertz::GompertzParams(a.b, a.q),
                            resolve_seed(a.seed));
  const std::vector<double> values = sampler.sample(a.n);
  if (a.format == "csv") {
    for (double v : values) std::cout << csv_num(v) << '\n';
  } else {
    std::cout << "[\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << "  " << json_num(values[i])
                << (i + 1 < values.size() ? "," : "") << "\n";
    }
    std::cout << "]\n";
  }
  return 0;
}

std::vector<double> read_observations(std::istream& in, bool csv_mode) {
  std::vector<double> data;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;            // blank
    if (line[start] == '#') continue;                    // comment
    std::string field = line.substr(start);
    if (csv_mode) {
      const std::size_t comma = field.find(',');
      if (comma != std::string::npos) field = field.substr(0, comma);
    }
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    while (end && (*end == ' ' || *end == '\t')) ++end;
    if (end == field.c_str() || (end && *end != '\0')) {
      if (csv_mode && line_no == 1) continue;  // header row
      char buf[160];
      std::snprintf(buf, sizeof buf, "fit: line %zu is not a number: '%.60s'",
                    line_no, line.c_str());
      throw std::domain_error(buf);
    }
    data.push_back(v);
  }
  if (data.empty()) {
    throw std::domain_error("fit: input contains no observations");
  }
  return data;
}

struct FitArgs {
  std::string path;
  std::string format = "json";
};

int run_fit(const FitArgs& a) {
  std::vector<double> data;
  const bool csv_mode = a.format == "csv";
  if (a.path == "-") {
    data = read_observations(std::cin, csv_mode);
  } else {
    std::ifstream in(a.path);
    if (!in) {
      throw std::invalid_argument("fit: cannot open '" + a.path + "'");
    }
    data = read_observations(in, csv_mode);
  }
  const gompertz::FitResult r = gompertz::fit_mle(data);
  std::cout << "{\n"
            << "  \"params\": {\"b\": " << json_num(r.params.b)
            << ", \"q\": " << json_num(r.params.q) << "},\n"
            << "  \"log_likelihood\": " << json_num(r.log_likelihood) << ",\n"
            << "  \"iterations\": " << r.iterations << ",\n"
            << "  \"converged\": " << (r.converged ? "true" : "false") << ",\n"
            << "  \"bracket\": {\"b_lo\": " << json_num(r.bracket_lo)
            << ", \"b_hi\": " << json_num(r.bracket_hi) << "},\n"
            << "  \"n\": " << data.size() << "\n"
            << "}\n";
  return 0;
}

struct DecomposeArgs {
  double b = 0, q = 0;
  double x_min = 0.0, x_max = 5.0;
  std::size_t steps = 101;
  std::string format = "json";
};

int run_decompose(const DecomposeArgs& a) {
  const gompertz::GompertzParams p(a.b, a.q);
  const auto rows = gompertz::decompose(p, make_grid(a.x_min, a.x_max, a.steps));
  if (a.format == "csv") {
    std::cout << "x,f_g,f_d,f\n";
    for (const auto& r : rows) {
      std::cout << csv_num(r.x) << ',' << csv_num(r.f_g) << ','
                << csv_num(r.f_d) << ',' << csv_num(r.f) << '\n';
    }
  } else {
    std::cout << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      std::cout << "  {\"x\": " << json_num(r.x) << ", \"f_g\": " << json_num(r.f_g)
                << ", \"f_d\": " << json_num(r.f_d) << ", \"f\": " << json_num(r.f)
                << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    std::cout << "]\n";
  }
  return 0;
}

struct CheckArgs {
  std::optional<std::uint64_t> seed;
  double perturb = 0.0;
  std::string only;
};

int run_check(const CheckArgs& a) {
  gompertz::selfcheck::CheckOptions opts;
  opts.seed = resolve_seed(a.seed);
  opts.perturb = a.perturb;
  opts.only = a.only;
  const auto results = gompertz::selfcheck::run_checks(opts);
  if (results.empty()) {
    throw std::invalid_argument("check: no checks match --only '" + a.only + "'");
  }
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.pass) ++passed;
    std::printf("%-4s  %-26s  statistic=%-12.3e  limit=%.3e\n",
                r.pass ? "ok" : "FAIL", r.name.c_str(), r.statistic, r.limit);
  }
  std::printf("check: %zu/%zu passed\n", passed, results.size());
  return passed == results.size() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gompertz distribution toolkit: density evaluation, sampling, "
      "maximum-likelihood fitting, growth decomposition, and the closed-form "
      "Kullback-Leibler divergence with a built-in numerical cross-check."};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate pdf, log_pdf and cdf");
  eval->add_option("--b", eval_args.b, "scale rate b > 0")->required();
  eval->add_option("--q", eval_args.q, "shape q > 0")->required();
  eval->add_option("--x", eval_args.xs, "evaluation point (repeatable)");
  eval->add_option("--x-min", eval_args.x_min, "range start (default 0)");
  eval->add_option("--x-max", eval_args.x_max, "range end");
  eval->add_option("--steps", eval_args.steps, "number of range points");
  eval->add_option("--format", eval_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  KlArgs kl_args;
  auto* kl = app.add_subcommand(
      "kl", "Closed-form KL divergence D(p1 || p2), term by term");
  kl->add_option("--b1", kl_args.b1, "scale rate of p1")->required();
  kl->add_option("--q1", kl_args.q1, "shape of p1")->required();
  kl->add_option("--b2", kl_args.b2, "scale rate of p2")->required();
  kl->add_option("--q2", kl_args.q2, "shape of p2")->required();
  kl->add_flag("--oracle", kl_args.oracle,
               "also integrate numerically and report the difference");
  kl->add_option("--tol", kl_args.tol, "oracle tolerance (default 1e-10)")
      ->check(CLI::Range(1e-13, 1e-6));
  kl->add_option("--format", kl_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Draw seeded inverse-CDF samples");
  sample->add_option("--b", sample_args.b, "scale rate b > 0")->required();
  sample->add_option("--q", sample_args.q, "shape q > 0")->required();
  sample->add_option("--n", sample_args.n, "number of draws")->required();
  sample->add_option("--seed", sample_args.seed,
                     "RNG seed (default 42, or GOMPERTZ_SEED)");
  sample->add_option("--format", sample_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  FitArgs fit_args;
  auto* fit = app.add_subcommand(
      "fit", "Profile maximum-likelihood fit from a file of observations");
  fit->add_option("path", fit_args.path,
                  "input file, one nonnegative value per line ('-' for stdin)")
      ->required();
  fit->add_option("--format", fit_args.format,
                  "input flavor: plain lines (json) or single-column csv")
      ->check(CLI::IsMember({"json", "csv"}));

  DecomposeArgs dec_args;
  auto* dec = app.add_subcommand(
      "decompose", "Growth/decline propensity decomposition f = f_g - f_d");
  dec->add_option("--b", dec_args.b, "scale rate b > 0")->required();
  dec->add_option("--q", dec_args.q, "shape q > 0")->required();
  dec->add_option("--x-min", dec_args.x_min, "range start (default 0)");
  dec->add_option("--x-max", dec_args.x_max, "range end (default 5)");
  dec->add_option("--steps", dec_args.steps, "number of range points (default 101)");
  dec->add_option("--format", dec_args.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CheckArgs check_args;
  auto* check = app.add_subcommand(
      "check", "Run the numerical self-verification suite");
  check->add_option("--seed", check_args.seed,
                    "RNG seed (default 42, or GOMPERTZ_SEED)");
  check->add_option("--only", check_args.only,
                    "run only checks whose name contains this substring");
  check->add_option("--perturb", check_args.perturb)->group("");  // test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(eval_args);
    if (app.got_subcommand(kl)) return run_kl(kl_args);
    if (app.got_subcommand(sample)) return run_sample(sample_args);
    if (app.got_subcommand(fit)) return run_fit(fit_args);
    if (app.got_subcommand(dec)) return run_decompose(dec_args);
    if (app.got_subcommand(check)) return run_check(check_args);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
