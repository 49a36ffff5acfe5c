#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mft/error.hpp"
#include "mft/io.hpp"
#include "mft/solver.hpp"

namespace mft::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidInput = 2, kInternal = 3, kTooLarge = 4 };

int exit_code_for(const Error& e);

// MFT_SEED from the environment, else 1.
std::uint64_t default_seed();

// Validates, optionally retrying once with a tiny deterministic jitter.
ConvexPolygon load_polygon(const std::string& path, bool perturb_on_failure);

struct SolveArgs {
  std::string input;
  Algo algo = Algo::Linear;
  bool candidates = false;
  std::string svg;
  bool perturb = false;
};
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

struct RenderArgs {
  std::string input;
  std::string output;
  Algo algo = Algo::Linear;
  bool perturb = false;
};
int cmd_render(const RenderArgs& args, std::ostream& err);

struct GenerateArgs {
  long n = 16;
  std::uint64_t seed = 1;
  std::string output;  // stdout when empty
};
int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err);

// Cross-checks every algorithm on one polygon; empty when all agree.
std::vector<std::string> verify_polygon(const ConvexPolygon& poly);

struct VerifyArgs {
  std::string input;   // single instance, or
  long random_n = 0;   // random instances of this size
  std::uint64_t seed = 1;
  long count = 0;
  std::string report;  // optional report to compare against
  std::string dump = "mft_failure.json";
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct BenchRow {
  long size = 0;
  Algo algo = Algo::Linear;
  std::uint64_t seed = 0;
  double wall_ns = 0.0;
  long iterations = 0;
  long pointer_advances = 0;
};

struct BenchArgs {
  std::vector<long> sizes;
  long seeds = 3;
  long repeats = 3;  // best of this many timings per instance
  std::vector<Algo> algos = {Algo::Linear};
  std::string csv;
  std::uint64_t seed = 1;
};

std::vector<BenchRow> run_bench(const BenchArgs& args);

struct DoublingRatio {
  Algo algo;
  long from = 0;
  long to = 0;
  double ratio = 0.0;  // median wall(to) / median wall(from)
};
std::vector<DoublingRatio> doubling_ratios(const std::vector<BenchRow>& rows);

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

}  // namespace mft::cli
