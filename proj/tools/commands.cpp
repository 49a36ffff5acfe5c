#include "commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace mft::cli {

namespace {

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

std::string triple_text(Triple t) {
  return "(" + std::to_string(t.i) + ", " + std::to_string(t.j) + ", " + std::to_string(t.k) + ")";
}

bool write_text(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path);
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

void report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what();
  if (!e.indices().empty()) {
    err << " [indices:";
    for (long i : e.indices()) err << ' ' << i;
    err << ']';
  }
  err << "\n";
}

// Labels 3-stable triangles so that neighbours differing in one edge by one
// step with equal area (within tolerance) share a class. Such ties arise from
// nearly parallel adjacent edges and either member is an acceptable answer.
std::vector<std::size_t> tie_classes(const ConvexPolygon& poly, const std::vector<Triple>& stable) {
  std::vector<std::size_t> parent(stable.size());
  for (std::size_t x = 0; x < parent.size(); ++x) parent[x] = x;
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const long n = poly.size();
  const auto step_apart = [&](long a, long b) {
    const long d = poly.wrap(a - b);
    return d == 1 || d == n - 1;
  };
  const auto neighbours = [&](const Triple& a, const Triple& b) {
    const std::array<long, 3> x{a.i, a.j, a.k};
    const std::array<long, 3> y{b.i, b.j, b.k};
    for (std::size_t rot = 0; rot < 3; ++rot) {
      int same = 0;
      int near = 0;
      for (std::size_t q = 0; q < 3; ++q) {
        const long u = poly.wrap(x[q]);
        const long v = poly.wrap(y[(q + rot) % 3]);
        if (u == v) {
          ++same;
        } else if (step_apart(u, v)) {
          ++near;
        }
      }
      if (same == 2 && near == 1) return true;
    }
    return false;
  };
  for (std::size_t x = 0; x < stable.size(); ++x) {
    for (std::size_t y = x + 1; y < stable.size(); ++y) {
      if (neighbours(stable[x], stable[y]) &&
          relative_gap(area_of(poly, stable[x]), area_of(poly, stable[y])) <= kEpsRel) {
        parent[find(x)] = find(y);
      }
    }
  }
  for (std::size_t x = 0; x < parent.size(); ++x) parent[x] = find(x);
  return parent;
}

// Kill decisions must only discard pairs that the brute-force table marks
// alive through an untied 3-stable triangle.
void check_kills(const ConvexPolygon& poly, const SolverReport& rep, const std::set<std::pair<long, long>>& alive_pairs,
                 std::vector<std::string>& failures) {
  const auto alive = [&](long b, long c) { return alive_pairs.count({poly.wrap(b), poly.wrap(c)}) > 0; };
  for (const KillRecord& k : rep.trace) {
    if (k.decision == Kill::B) {
      for (long c = k.c + 1; c <= rep.run.r; ++c) {
        if (alive(k.b, c)) {
          failures.push_back(std::string(to_string(rep.algo)) + ": killed b at " + triple_text({k.b, k.c, c}) +
                             " but pair (b, " + std::to_string(poly.wrap(c)) + ") is alive");
          return;
        }
      }
    } else {
      for (long b = k.b + 1; b <= rep.run.t; ++b) {
        if (alive(b, k.c)) {
          failures.push_back(std::string(to_string(rep.algo)) + ": killed c at (" + std::to_string(k.b) + ", " +
                             std::to_string(k.c) + ") but pair (" + std::to_string(poly.wrap(b)) + ", c) is alive");
          return;
        }
      }
    }
  }
}

}  // namespace

int exit_code_for(const Error& e) {
  if (e.kind() == ErrorKind::InstanceTooLarge) return kTooLarge;
  if (is_internal(e.kind())) return kInternal;
  return kInvalidInput;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MFT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 1;
}

ConvexPolygon load_polygon(const std::string& path, bool perturb_on_failure) {
  const PolygonFile file = read_polygon_file(path);
  try {
    return ConvexPolygon::validate(file.vertices);
  } catch (const Error& e) {
    if (!perturb_on_failure || e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::TooFewVertices) throw;
    return ConvexPolygon::validate(perturb(file.vertices, kEpsAbsScale, default_seed()));
  }
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const ConvexPolygon poly = load_polygon(args.input, args.perturb);
    const auto start = std::chrono::steady_clock::now();
    const SolverReport rep = solve_mft(poly, args.algo);
    const auto stop = std::chrono::steady_clock::now();
    ReportOptions ro;
    ro.candidates = args.candidates;
    ro.wall_ns = static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    out << report_to_json(poly, rep, ro).dump(2) << "\n";
    if (!args.svg.empty() && !write_text(args.svg, render_svg(poly, rep.triangle), err)) return kInvalidInput;
    return kOk;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_code_for(e);
  }
}

int cmd_render(const RenderArgs& args, std::ostream& err) {
  try {
    const ConvexPolygon poly = load_polygon(args.input, args.perturb);
    const SolverReport rep = solve_mft(poly, args.algo);
    return write_text(args.output, render_svg(poly, rep.triangle), err) ? kOk : kInvalidInput;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_code_for(e);
  }
}

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const ConvexPolygon poly = generate_random(args.n, args.seed);
    PolygonFile file;
    file.vertices.assign(poly.vertices().begin(), poly.vertices().end());
    file.seed = args.seed;
    file.generator = "valtr";
    const std::string text = format_polygon(file);
    if (args.output.empty()) {
      out << text;
      return kOk;
    }
    return write_text(args.output, text, err) ? kOk : kInvalidInput;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_code_for(e);
  }
}

std::vector<std::string> verify_polygon(const ConvexPolygon& poly) {
  std::vector<std::string> failures;
  SolverOptions opts;
  opts.strict = false;
  opts.trace = true;
  BruteResult brute;
  try {
    brute = brute_force(poly, opts.brute_cap);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InstanceTooLarge) throw;
    failures.push_back(std::string("brute: ") + e.what());
    return failures;
  }
  const long n = poly.size();
  const std::vector<std::size_t> tie_class = tie_classes(poly, brute.stable);
  const std::set<std::size_t> classes(tie_class.begin(), tie_class.end());
  if (static_cast<long>(classes.size()) > n) {
    failures.push_back(std::to_string(classes.size()) + " 3-stable triangles exceed n = " + std::to_string(n));
  }
  std::map<std::size_t, long> class_size;
  for (std::size_t c : tie_class) ++class_size[c];
  std::set<std::pair<long, long>> untied_alive;
  for (std::size_t x = 0; x < brute.stable.size(); ++x) {
    if (class_size[tie_class[x]] > 1) continue;
    const Triple& t = brute.stable[x];
    untied_alive.insert({poly.wrap(t.j), poly.wrap(t.k)});
    untied_alive.insert({poly.wrap(t.k), poly.wrap(t.i)});
    untied_alive.insert({poly.wrap(t.i), poly.wrap(t.j)});
  }
  for (std::size_t x = 0; x < brute.stable.size(); ++x) {
    for (std::size_t y = x + 1; y < brute.stable.size(); ++y) {
      if (!is_interleaving(brute.stable[x], brute.stable[y], n)) {
        failures.push_back("3-stable " + triple_text(brute.stable[x]) + " and " + triple_text(brute.stable[y]) +
                           " do not interleave");
      }
    }
  }
  for (Algo algo : {Algo::Linear, Algo::Logn, Algo::Quadratic}) {
    const std::string tag = to_string(algo);
    SolverReport rep;
    try {
      rep = solve_mft(poly, algo, opts);
    } catch (const Error& e) {
      failures.push_back(tag + ": " + e.what());
      continue;
    }
    if (relative_gap(rep.area, brute.area) > 1e-9) {
      failures.push_back(tag + ": area " + std::to_string(rep.area) + " vs brute " + std::to_string(brute.area));
    }
    std::set<std::size_t> found;
    for (std::size_t x = 0; x < brute.stable.size(); ++x) {
      const bool listed = std::any_of(rep.candidates.begin(), rep.candidates.end(),
                                      [&](const Candidate& c) { return c.triple == brute.stable[x]; });
      if (listed) found.insert(tie_class[x]);
    }
    for (std::size_t x = 0; x < brute.stable.size(); ++x) {
      if (found.count(tie_class[x]) == 0) {
        failures.push_back(tag + ": 3-stable " + triple_text(brute.stable[x]) + " missing from candidates");
        found.insert(tie_class[x]);
      }
    }
    if (rep.stats.violations() != 0) {
      failures.push_back(tag + ": " + std::to_string(rep.stats.violations()) + " runtime invariant violations");
    }
    double last_d = -kInf;
    for (const KillRecord& k : rep.trace) {
      if (k.trivial) continue;
      if (algo == Algo::Linear && k.d < last_d) failures.push_back(tag + ": direction d decreased");
      last_d = std::max(last_d, k.d);
    }
    const long cap = 2 * n;
    if (algo != Algo::Quadratic &&
        (rep.stats.iterations > cap || rep.stats.apex_advances > cap || rep.stats.support_advances > cap)) {
      failures.push_back(tag + ": work bound 2n exceeded");
    }
    check_kills(poly, rep, untied_alive, failures);
  }
  return failures;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (!args.input.empty()) {
      const ConvexPolygon poly = load_polygon(args.input, false);
      auto failures = verify_polygon(poly);
      if (!args.report.empty()) {
        std::ifstream f(args.report);
        if (!f) throw Error(ErrorKind::ParseError, "cannot open " + args.report);
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(f);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorKind::ParseError, e.what());
        }
        const SolverReport claimed = report_from_json(j);
        const BruteResult brute = brute_force(poly);
        if (claimed.mft != brute.mft || relative_gap(claimed.area, brute.area) > 1e-9) {
          failures.push_back("report claims " + triple_text(claimed.mft) + " area " + std::to_string(claimed.area) +
                             ", recomputed " + triple_text(brute.mft) + " area " + std::to_string(brute.area));
        }
      }
      for (const auto& f : failures) err << "FAIL: " << f << "\n";
      out << (failures.empty() ? "1/1 OK" : "0/1 OK") << "\n";
      return failures.empty() ? kOk : kMismatch;
    }

    long ok = 0;
    bool dumped = false;
    for (long i = 0; i < args.count; ++i) {
      const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(i);
      const ConvexPolygon poly = generate_random(args.random_n, seed);
      const auto failures = verify_polygon(poly);
      if (failures.empty()) {
        ++ok;
        continue;
      }
      err << "seed " << seed << ": " << failures.front() << "\n";
      if (!dumped) {
        // Drop vertices greedily while the instance keeps failing.
        std::vector<Point> pts(poly.vertices().begin(), poly.vertices().end());
        for (bool shrunk = true; shrunk && pts.size() > 3;) {
          shrunk = false;
          for (std::size_t v = 0; v < pts.size() && pts.size() > 3; ++v) {
            std::vector<Point> fewer = pts;
            fewer.erase(fewer.begin() + static_cast<long>(v));
            try {
              if (!verify_polygon(ConvexPolygon::validate(fewer)).empty()) {
                pts = std::move(fewer);
                shrunk = true;
                break;
              }
            } catch (const Error&) {
              // still invalid after removal; try the next vertex
            }
          }
        }
        PolygonFile file;
        file.vertices = pts;
        file.seed = seed;
        file.name = "minimized failure";
        if (write_text(args.dump, format_polygon(file), err)) err << "minimized instance written to " << args.dump << "\n";
        dumped = true;
      }
    }
    out << ok << "/" << args.count << " OK\n";
    return ok == args.count ? kOk : kMismatch;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_code_for(e);
  }
}

std::vector<BenchRow> run_bench(const BenchArgs& args) {
  std::vector<BenchRow> rows;
  SolverOptions opts;
  opts.collect_candidates = false;
  const auto time_once = [&](const ConvexPolygon& poly, Algo algo, SolverReport& rep) {
    const auto start = std::chrono::steady_clock::now();
    rep = solve_mft(poly, algo, opts);
    const auto stop = std::chrono::steady_clock::now();
    return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  };
  // Rounds sweep every size so that slow drift in machine load spreads evenly.
  for (long round = 0; round < std::max(1L, args.repeats); ++round) {
    std::size_t row_index = 0;
    for (long size : args.sizes) {
      for (long k = 0; k < args.seeds; ++k) {
        const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(k);
        const ConvexPolygon poly = generate_random(size, seed);
        for (Algo algo : args.algos) {
          SolverReport rep;
          if (round == 0 && row_index == 0) time_once(poly, algo, rep);  // warm-up
          // Small instances are cheap and most exposed to load spikes; time them more often.
          const long extra = std::clamp(args.sizes.back() / (8 * size), 1L, 5L);
          double wall = kInf;
          for (long e = 0; e < extra; ++e) wall = std::min(wall, time_once(poly, algo, rep));
          if (round == 0) {
            BenchRow row;
            row.size = size;
            row.algo = algo;
            row.seed = seed;
            row.wall_ns = wall;
            row.iterations = rep.stats.iterations;
            row.pointer_advances = rep.stats.apex_advances + rep.stats.support_advances;
            rows.push_back(row);
          } else {
            rows[row_index].wall_ns = std::min(rows[row_index].wall_ns, wall);
          }
          ++row_index;
        }
      }
    }
  }
  return rows;
}

std::vector<DoublingRatio> doubling_ratios(const std::vector<BenchRow>& rows) {
  std::map<std::pair<int, long>, std::vector<double>> walls;
  for (const BenchRow& r : rows) walls[{static_cast<int>(r.algo), r.size}].push_back(r.wall_ns);
  const auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
  };
  std::vector<DoublingRatio> out;
  for (const auto& [key, samples] : walls) {
    const auto next = walls.find({key.first, key.second * 2});
    if (next == walls.end()) continue;
    out.push_back({static_cast<Algo>(key.first), key.second, key.second * 2, median(next->second) / median(samples)});
  }
  return out;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (!std::is_sorted(args.sizes.begin(), args.sizes.end())) {
      err << "error: sizes must be ascending\n";
      return kInvalidInput;
    }
    const auto rows = run_bench(args);
    std::ostringstream csv;
    csv << "size,algo,seed,wall_ns,iterations,pointer_advances\n";
    for (const BenchRow& r : rows) {
      csv << r.size << ',' << to_string(r.algo) << ',' << r.seed << ',' << static_cast<long long>(r.wall_ns) << ','
          << r.iterations << ',' << r.pointer_advances << '\n';
    }
    std::ostream& summary = args.csv.empty() ? err : out;
    if (args.csv.empty()) {
      out << csv.str();
    } else if (!write_text(args.csv, csv.str(), err)) {
      return kInvalidInput;
    }
    for (const DoublingRatio& d : doubling_ratios(rows)) {
      summary << "ratio " << to_string(d.algo) << ' ' << d.from << " -> " << d.to << ": " << d.ratio << "\n";
    }
    return kOk;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_code_for(e);
  }
}

}  // namespace mft::cli
