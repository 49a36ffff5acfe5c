#include <algorithm>
#include <string>
#include <unordered_set>

#include "mft/error.hpp"
#include "mft/solver.hpp"

namespace mft {

namespace {

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept {
    std::size_t h = static_cast<std::size_t>(t.i);
    h = h * 1000003u ^ static_cast<std::size_t>(t.j);
    h = h * 1000003u ^ static_cast<std::size_t>(t.k);
    return h;
  }
};

// Collects visited apex triangles and tracks the best 3-stable one.
class CandidatePool {
 public:
  CandidatePool(const ConvexPolygon& poly, bool keep) : poly_(poly), keep_(keep) {}

  void offer(long a, long b, long c) {
    const Triple t = canonical(poly_, {a, b, c});
    if (!is_finite(poly_, t)) return;
    if (keep_ && !seen_.insert(t).second) return;
    const double area = area_of(poly_, t);
    const bool improves = area < best_area_ || (area == best_area_ && t < best_);
    if (!keep_ && !improves) return;
    const bool stable = is_3stable(poly_, t);
    if (keep_) list_.push_back({t, area, stable});
    if (stable && improves) {
      best_area_ = area;
      best_ = t;
    }
  }

  bool empty() const { return !is_finite_area(best_area_); }
  Triple best() const { return best_; }
  std::vector<Candidate> take() { return std::move(list_); }

 private:
  const ConvexPolygon& poly_;
  bool keep_;
  std::unordered_set<Triple, TripleHash> seen_;
  std::vector<Candidate> list_;
  Triple best_;
  double best_area_ = kInf;
};

void finish(const ConvexPolygon& poly, CandidatePool& pool, SolverReport& report) {
  if (pool.empty()) throw Error(ErrorKind::InvariantViolated, "no 3-stable triangle was found");
  report.mft = pool.best();
  report.triangle = triangle_of(poly, report.mft);
  report.area = report.triangle.area;
  report.candidates = pool.take();
}

void check_bounds(const SolverStats& s, bool strict) {
  const long cap = 2 * s.size;
  if (s.iterations > cap || s.apex_advances > cap || s.support_advances > cap) {
    if (strict) throw Error(ErrorKind::InvariantViolated, "work bound 2n exceeded");
  }
}

}  // namespace

const char* to_string(Algo algo) noexcept {
  switch (algo) {
    case Algo::Linear:
      return "linear";
    case Algo::Logn:
      return "logn";
    case Algo::Quadratic:
      return "quadratic";
    case Algo::Brute:
      return "brute";
  }
  return "unknown";
}

std::optional<Algo> parse_algo(const std::string& name) {
  for (Algo a : {Algo::Linear, Algo::Logn, Algo::Quadratic, Algo::Brute}) {
    if (name == to_string(a)) return a;
  }
  return std::nullopt;
}

SolverReport rotate_and_kill(const ConvexPolygon& poly, Algo criterion, const SolverOptions& opts) {
  if (criterion != Algo::Linear && criterion != Algo::Logn) {
    throw Error(ErrorKind::PreconditionViolated, "rotate_and_kill takes the linear or logn criterion");
  }
  SolverReport report;
  report.algo = criterion;
  report.stats.size = poly.size();
  const Run run = initial_3stable(poly, &report.stats);
  report.run = run;

  std::optional<LinearCriterion> linear;
  if (criterion == Algo::Linear) linear.emplace(poly, run, report.stats, opts.strict);

  CandidatePool pool(poly, opts.collect_candidates);
  long b = run.s;
  long c = run.t;
  long apex = poly.unwrap_from(poly.far_vertex(b), c + 1);
  const long apex_start = apex;
  for (;;) {
    ++report.stats.iterations;
    if (poly.chases_or_false(b, c)) {
      const long a = next_opt_apex(poly, b, c, std::max(apex, c + 1));
      apex = std::max(apex, a);
      pool.offer(a, b, c);
    }
    if (b == run.t && c == run.r) break;

    KillRecord record;
    Kill kill = linear ? linear->decide(b, c, &record) : kill_logn(poly, b, c, &record);
    if ((kill == Kill::B && b == run.t) || (kill == Kill::C && c == run.r)) {
      ++report.stats.criterion_overrides;
      if (opts.strict) {
        throw Error(ErrorKind::InvariantViolated,
                    "criterion left the window at (" + std::to_string(b) + ", " + std::to_string(c) + ")",
                    {poly.wrap(b), poly.wrap(c)});
      }
      kill = kill == Kill::B ? Kill::C : Kill::B;
      record.decision = kill;
    }
    if (opts.trace) report.trace.push_back(record);
    if (kill == Kill::B) {
      ++b;
    } else {
      ++c;
    }
  }
  report.stats.apex_advances = apex - apex_start;
  if (linear) report.stats.support_advances = linear->support_advances();
  check_bounds(report.stats, opts.strict);
  finish(poly, pool, report);
  return report;
}

SolverReport solve_quadratic(const ConvexPolygon& poly, const SolverOptions& opts) {
  if (poly.size() > opts.quadratic_cap) {
    throw Error(ErrorKind::InstanceTooLarge, "n = " + std::to_string(poly.size()) + " exceeds the quadratic cap");
  }
  SolverReport report;
  report.algo = Algo::Quadratic;
  report.stats.size = poly.size();
  const Run run = initial_3stable(poly, &report.stats);
  report.run = run;
  CandidatePool pool(poly, opts.collect_candidates);
  for (long b = run.s; b <= run.t; ++b) {
    long apex = 0;
    bool first = true;
    for (long c = run.t; c <= run.r; ++c) {
      ++report.stats.iterations;
      if (c == b || !poly.chases_or_false(b, c)) continue;
      const long lo = poly.unwrap_from(poly.far_vertex(b), c + 1);
      const long a = next_opt_apex(poly, b, c, first ? lo : std::max(apex, c + 1));
      first = false;
      apex = a;
      pool.offer(a, b, c);
    }
  }
  finish(poly, pool, report);
  return report;
}

SolverReport solve_mft(const ConvexPolygon& poly, Algo algo, const SolverOptions& opts) {
  switch (algo) {
    case Algo::Linear:
    case Algo::Logn:
      return rotate_and_kill(poly, algo, opts);
    case Algo::Quadratic:
      return solve_quadratic(poly, opts);
    case Algo::Brute: {
      const BruteResult brute = brute_force(poly, opts.brute_cap);
      SolverReport report;
      report.algo = Algo::Brute;
      report.stats.size = poly.size();
      report.mft = brute.mft;
      report.triangle = triangle_of(poly, brute.mft);
      report.area = report.triangle.area;
      for (const Triple& t : brute.stable) report.candidates.push_back({t, area_of(poly, t), true});
      return report;
    }
  }
  throw Error(ErrorKind::PreconditionViolated, "unknown algorithm");
}

}  // namespace mft
