#include <string>

#include "mft/error.hpp"
#include "mft/solver.hpp"

namespace mft {

BruteResult brute_force(const ConvexPolygon& poly, long cap) {
  const long n = poly.size();
  if (n > cap) throw Error(ErrorKind::InstanceTooLarge, "n = " + std::to_string(n) + " exceeds the brute-force cap");
  const auto at = [n](long i, long j) { return static_cast<std::size_t>(i * n + j); };

  // Corner ℓ_i ∩ ℓ_j for every chasing pair.
  std::vector<Point> corner(static_cast<std::size_t>(n * n));
  std::vector<char> chase(static_cast<std::size_t>(n * n), 0);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (i == j || !poly.chases(i, j)) continue;
      chase[at(i, j)] = 1;
      corner[at(i, j)] = intersect_lines(poly.line(i), poly.line(j));
    }
  }
  // Triple in clockwise order.
  const auto area = [&](long i, long j, long k) {
    if (!chase[at(i, j)] || !chase[at(j, k)] || !chase[at(k, i)]) return kInf;
    return std::abs(signed_area(corner[at(i, j)], corner[at(j, k)], corner[at(k, i)]));
  };

  // Smallest triangle over every third edge for each ordered pair (j, k).
  std::vector<double> pair_min(static_cast<std::size_t>(n * n), kInf);
  for (long j = 0; j < n; ++j) {
    for (long k = 0; k < n; ++k) {
      if (j == k) continue;
      double best = kInf;
      for (long a = (k + 1) % n; a != j; a = (a + 1) % n) best = std::min(best, area(j, k, a));
      pair_min[at(j, k)] = best;
    }
  }

  BruteResult out;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      for (long k = j + 1; k < n; ++k) {
        const double a = area(i, j, k);
        if (!is_finite_area(a)) continue;
        if (a < out.area) {
          out.area = a;
          out.mft = {i, j, k};
        }
        const bool stable = !definitely_less(pair_min[at(j, k)], a) && !definitely_less(pair_min[at(k, i)], a) &&
                            !definitely_less(pair_min[at(i, j)], a);
        if (stable) {
          out.stable.push_back({i, j, k});
          out.alive.insert({j, k});
          out.alive.insert({k, i});
          out.alive.insert({i, j});
        }
      }
    }
  }
  if (!is_finite_area(out.area)) throw Error(ErrorKind::InvariantViolated, "no finite all-flush triangle");
  return out;
}

}  // namespace mft
