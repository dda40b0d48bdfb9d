#include "dunkl/harmonic.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/serialize.hpp"
#include "dunkl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

using namespace dunkl;

namespace {

struct Args {
  int s = 1;
  int a = 0;
  int b = 0;
  int n = 0;
  int N = 0;
  std::string variant = "f";
  std::string format = "text";
  std::string suite = "all";
  int max_degree = 6;
  std::uint32_t seed = 42;
  int m = 0;
};

void emit(const Args& args, nlohmann::json request, const MultiPoly& result) {
  if (args.format == "text") {
    std::cout << render_text(result) << '\n';
  } else if (args.format == "latex") {
    std::cout << render_latex(result) << '\n';
  } else {
    nlohmann::json doc = std::move(request);
    doc["result"] = to_json(result);
    doc["text"] = render_text(result);
    std::cout << doc.dump(2) << '\n';
  }
}

int run_verify(const Args& args) {
  VerifyOptions opts;
  opts.max_degree = args.max_degree;
  opts.seed = args.seed;
  opts.m = args.m;
  const VerificationReport rep = run_suite(args.suite, opts);
  int passed = 0;
  for (const auto& r : rep.records) passed += r.passed ? 1 : 0;
  if (args.format == "json") {
    std::cout << rep.to_json().dump(2) << '\n';
  } else {
    for (const auto& r : rep.records) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.identity << ' ' << r.params.dump() << '\n';
    }
    std::cout << passed << '/' << rep.records.size() << " checks passed\n";
  }
  if (const VerificationRecord* bad = rep.first_failure()) {
    std::cerr << "first failure: " << bad->identity << ' ' << bad->params.dump() << ": " << bad->witness << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intertwining operators, harmonic bases and kernels for dihedral Dunkl operators"};
  app.require_subcommand(1);
  Args args;
  const auto add_s = [&](CLI::App* cmd) {
    cmd->add_option("--s", args.s, "dihedral group I2(2s)")->check(CLI::PositiveNumber);
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", args.format, "output format")->check(CLI::IsMember({"json", "text", "latex"}));
  };

  CLI::App* intertwine = app.add_subcommand("intertwine", "V applied to z^a zbar^b");
  add_s(intertwine);
  intertwine->add_option("--a", args.a, "power of z")->check(CLI::NonNegativeNumber);
  intertwine->add_option("--b", args.b, "power of zbar")->check(CLI::NonNegativeNumber);
  add_format(intertwine);

  CLI::App* harmonic = app.add_subcommand("harmonic", "harmonic polynomial f_n^v(z^s, zbar^s)");
  add_s(harmonic);
  harmonic->add_option("--n", args.n, "index")->check(CLI::NonNegativeNumber);
  harmonic->add_option("--variant", args.variant, "f, f0 (symmetric) or f1 (antisymmetric)")
      ->check(CLI::IsMember({"f", "f0", "f1"}));
  add_format(harmonic);

  CLI::App* poisson = app.add_subcommand("poisson", "reproducing kernel P_N of the degree-N harmonics");
  add_s(poisson);
  poisson->add_option("--N", args.N, "degree")->check(CLI::NonNegativeNumber);
  add_format(poisson);

  CLI::App* kernel = app.add_subcommand("kernel", "kernel K_n");
  add_s(kernel);
  kernel->add_option("--n", args.n, "degree")->check(CLI::NonNegativeNumber);
  add_format(kernel);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", args.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-degree", args.max_degree, "degree bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", args.seed, "seed for random parameter points");
  verify->add_option("--m", args.m, "singular line k0 + k1 = -m (default: all)")->check(CLI::PositiveNumber);
  verify->add_option("--format", args.format, "output format")->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const GroupParam g(args.s);
    if (intertwine->parsed()) {
      emit(args, {{"command", "intertwine"}, {"s", args.s}, {"a", args.a}, {"b", args.b}},
           intertwine_mono(g, args.a, args.b));
    } else if (harmonic->parsed()) {
      emit(args, {{"command", "harmonic"}, {"s", args.s}, {"n", args.n}, {"variant", args.variant}},
           f_of_power(args.n, parse_variant(args.variant), args.s));
    } else if (poisson->parsed()) {
      emit(args, {{"command", "poisson"}, {"s", args.s}, {"N", args.N}}, poisson_p(g, args.N));
    } else if (kernel->parsed()) {
      emit(args, {{"command", "kernel"}, {"s", args.s}, {"n", args.n}}, kernel_k(g, args.n));
    } else if (verify->parsed()) {
      return run_verify(args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
