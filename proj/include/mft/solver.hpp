#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mft/flush_triangle.hpp"
#include "mft/hyperbola.hpp"

namespace mft {

enum class Algo { Linear, Logn, Quadratic, Brute };

const char* to_string(Algo algo) noexcept;
// Accepts "linear", "logn", "quadratic", "brute"; nullopt otherwise.
std::optional<Algo> parse_algo(const std::string& name);

enum class Kill { B, C };

struct SolverOptions {
  bool strict = true;               // throw on the first invariant violation
  bool trace = false;               // keep one KillRecord per decision
  bool collect_candidates = true;   // keep every visited apex triangle
  long brute_cap = 256;
  long quadratic_cap = 1L << 14;
};

struct Candidate {
  Triple triple;  // canonical
  double area = 0.0;
  bool stable = false;
};

struct KillRecord {
  long b = 0;  // unwrapped, as visited
  long c = 0;
  Kill decision = Kill::B;
  bool trivial = false;   // decided without the geometric test
  double d = 0.0;         // direction used (linear criterion only)
  double theta_hg = 0.0;  // tangent of the inner + and outer - branches
  double theta_gh = 0.0;  // tangent of the outer + and inner - branches
};

struct SolverStats {
  long iterations = 0;        // visited (b, c) pairs
  long apex_advances = 0;     // total movement of the apex pointer
  long support_advances = 0;  // total movement of the support pointer
  long repair_steps = 0;      // local moves needed after the initial phases
  long d_violations = 0;      // selected direction decreased
  long tangent_violations = 0;
  long range_violations = 0;      // tangent directions outside [d1, d2] or misordered
  long criterion_overrides = 0;   // kill would have left the J×K window
  long size = 0;                  // n, for the ≤ 2n bounds

  long violations() const { return d_violations + tangent_violations + range_violations + criterion_overrides; }
};

// Initial 3-stable triangle (e_r, e_s, e_t), unwrapped so that
// 0 ≤ s < n and s < t < r < s + n.
struct Run {
  long r = 0;
  long s = 0;
  long t = 0;
};

struct SolverReport {
  Algo algo = Algo::Linear;
  Triple mft;
  double area = 0.0;
  Triangle triangle;
  Run run;
  std::vector<Candidate> candidates;
  SolverStats stats;
  std::vector<KillRecord> trace;
};

Run initial_3stable(const ConvexPolygon& poly, SolverStats* stats = nullptr);

// Decides which of e_b, e_c to kill for a pair inside the J×K window of `run`,
// using the tangent-line test. Keeps the non-decreasing direction d and the
// rotating support pointer across calls.
class LinearCriterion {
 public:
  LinearCriterion(const ConvexPolygon& poly, const Run& run, SolverStats& stats, bool strict);

  Kill decide(long b, long c, KillRecord* record = nullptr);
  double direction() const { return d_; }
  double d1() const { return d1_; }
  double d2() const { return d2_; }
  long support_advances() const { return support_.advances(); }

 private:
  const ConvexPolygon* poly_;
  SolverStats* stats_;
  bool strict_;
  double d1_;
  double d2_;
  double d_;
  SupportPointer support_;
};

// Binary-search criterion over the stability frontiers of (b, c+1).
Kill kill_logn(const ConvexPolygon& poly, long b, long c, KillRecord* record = nullptr);

// Rotate-and-Kill with the chosen criterion (Linear or Logn).
SolverReport rotate_and_kill(const ConvexPolygon& poly, Algo criterion, const SolverOptions& opts = {});

// Every pair of the J×K window with its optimal apex; Θ(n²).
SolverReport solve_quadratic(const ConvexPolygon& poly, const SolverOptions& opts = {});

struct BruteResult {
  Triple mft;
  double area = kInf;
  std::vector<Triple> stable;               // canonical, ascending
  std::set<std::pair<long, long>> alive;    // (b, c) with some 3-stable (a, b, c)
};

// Θ(n³) enumeration straight from the definitions. Throws InstanceTooLarge.
BruteResult brute_force(const ConvexPolygon& poly, long cap = 256);

SolverReport solve_mft(const ConvexPolygon& poly, Algo algo, const SolverOptions& opts = {});

}  // namespace mft
