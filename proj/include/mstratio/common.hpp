#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mstratio {

// Points closer than this (Euclidean) are treated as duplicates; nearest-neighbor
// radii and the spread are degenerate at zero distance.
inline constexpr double kDupTol = 1e-12;

// Relative tolerance for comparisons of accumulated lengths and ratios.
inline constexpr double kEqTol = 1e-9;

// Slack threshold for strict disk disjointness. Tangent disks (slack 0) do not
// qualify: the ratio guarantee needs |pq| strictly above r(p)+r(q).
inline constexpr double kSlackTol = 1e-9;

// Chung-Graham lower bound on the Euclidean Steiner ratio. The max MST-ratio of
// any planar point set is at most 2/rho0 ~ 2.4267.
inline constexpr double kSteinerRho0 = 0.824168;
inline constexpr double kGammaCeiling = 2.0 / kSteinerRho0;

// Default cap for the exhaustive bipartition oracle (2^(n-1)-1 candidates).
inline constexpr std::size_t kExhaustiveLimit = 22;

// Prefix size that guarantees a disjoint-disk pair in the plane (Kezdy-Kubicki).
inline constexpr std::size_t kDisjointPrefix = 12;

// Smallest admissible density constant: any large planar set has spread at least
// 2^(1/2) 3^(1/4) pi^(-1/2) sqrt(n), so no set is alpha-dense below this.
inline const double kAlphaDenseMin =
    std::sqrt(2.0) * std::pow(3.0, 0.25) / std::sqrt(4.0 * std::atan(1.0));

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or inputs that fail validation. CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A partition strategy cannot make progress on this input (valid outcome for
// small point sets, e.g. no pair of disjoint disks exists for n <= 11).
class NoDisjointPairError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

inline bool nearly_equal(double a, double b, double tol = kEqTol) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

// Shortest decimal form that round-trips to the same double.
inline std::string format_double(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace mstratio
