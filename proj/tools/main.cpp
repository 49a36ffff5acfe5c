#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

namespace {

mft::Algo algo_from(const std::string& name) {
  if (auto a = mft::parse_algo(name)) return *a;
  throw CLI::ValidationError("--algo", "expected linear, logn, quadratic or brute");
}

const auto kAlgoCheck = CLI::IsMember({"linear", "logn", "quadratic", "brute"});

}  // namespace

int main(int argc, char** argv) {
  using namespace mft::cli;
  CLI::App app{"Minimum-area all-flush triangle of a convex polygon"};
  app.require_subcommand(1);

  SolveArgs solve;
  std::string solve_algo = "linear";
  auto* s = app.add_subcommand("solve", "Compute the minimum-area all-flush triangle");
  s->add_option("input", solve.input, "Polygon file (JSON or plain \"x y\" lines)")->required()->check(CLI::ExistingFile);
  s->add_option("--algo", solve_algo, "linear, logn, quadratic or brute")->check(kAlgoCheck);
  s->add_flag("--emit-candidates", solve.candidates, "Include every visited apex triangle");
  s->add_option("--svg", solve.svg, "Also write an SVG drawing");
  s->add_flag("--perturb", solve.perturb, "Jitter vertices slightly if validation fails");

  RenderArgs render;
  std::string render_algo = "linear";
  auto* r = app.add_subcommand("render", "Draw the polygon and its minimum triangle as SVG");
  r->add_option("input", render.input, "Polygon file")->required()->check(CLI::ExistingFile);
  r->add_option("-o,--out", render.output, "SVG output path")->required();
  r->add_option("--algo", render_algo, "Solver to use")->check(kAlgoCheck);
  r->add_flag("--perturb", render.perturb, "Jitter vertices slightly if validation fails");

  GenerateArgs gen;
  gen.seed = default_seed();
  auto* g = app.add_subcommand("generate", "Write a random convex polygon");
  g->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  g->add_option("--seed", gen.seed, "Seed (default: MFT_SEED or 1)");
  g->add_option("-o,--out", gen.output, "Output path (default: stdout)");

  VerifyArgs verify;
  verify.seed = default_seed();
  std::vector<std::string> random_spec;
  auto* v = app.add_subcommand("verify", "Cross-check all algorithms against brute force");
  v->add_option("input", verify.input, "Polygon file")->check(CLI::ExistingFile);
  v->add_option("--random", random_spec, "n seed count")->expected(3);
  v->add_option("--report", verify.report, "Report file to check against the recomputed answer");
  v->add_option("--dump", verify.dump, "Where to write a minimized failing instance");

  BenchArgs bench;
  bench.seed = default_seed();
  std::vector<std::string> bench_algos = {"linear"};
  auto* b = app.add_subcommand("bench", "Time the solvers on random polygons");
  b->add_option("--sizes", bench.sizes, "Polygon sizes, ascending")->required();
  b->add_option("--seeds", bench.seeds, "Instances per size");
  b->add_option("--repeats", bench.repeats, "Timings per instance; the fastest is kept");
  b->add_option("--algos", bench_algos, "Solvers to time")->check(kAlgoCheck);
  b->add_option("--csv", bench.csv, "CSV output path (default: stdout)");
  b->add_option("--seed", bench.seed, "First seed (default: MFT_SEED or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*s) {
      solve.algo = algo_from(solve_algo);
      return cmd_solve(solve, std::cout, std::cerr);
    }
    if (*r) {
      render.algo = algo_from(render_algo);
      return cmd_render(render, std::cerr);
    }
    if (*g) return cmd_generate(gen, std::cout, std::cerr);
    if (*v) {
      if (!random_spec.empty()) {
        verify.random_n = std::stol(random_spec[0]);
        verify.seed = std::stoull(random_spec[1]);
        verify.count = std::stol(random_spec[2]);
      } else if (verify.input.empty()) {
        std::cerr << "error: give an input file or --random n seed count\n";
        return kInvalidInput;
      }
      return cmd_verify(verify, std::cout, std::cerr);
    }
    if (*b) {
      bench.algos.clear();
      for (const auto& name : bench_algos) bench.algos.push_back(algo_from(name));
      return cmd_bench(bench, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}
