#pragma once
// Closed-form correction terms and time-uniform boundaries.
//
// All functions here are pure: same inputs, bit-identical outputs. They are
// safe to call concurrently from any number of threads.

#include <cstdint>
#include <string>
#include <string_view>

namespace avrc {

// Parameters shared by every boundary formula.
//   loss_bound : B, upper bound of the loss range [0, B]
//   delta      : time-uniform failure budget, in (0,1)
//   m          : stitch-start scale of the boundary (often set to m*)
//   eta        : dyadic stitching base (> 1); 2 reproduces the explicit form
struct BoundaryConfig {
  double loss_bound = 1.0;
  double delta = 0.1;
  double m = 1.0;
  double eta = 2.0;

  void validate() const;  // throws std::invalid_argument
};

enum class CorrectionMethod {
  kAnytime,        // stitched time-uniform correction, f(alpha(B-alpha)n)/n
  kStandard,       // classical split-conformal quantile correction
  kFixedDuchi,     // fixed-n calibration-conditional correction
  kFixedSubGamma,  // fixed-n Chernoff bound for sub-gamma sums
  kShiftAnytime,   // importance-weighted time-uniform correction
};

const char* to_string(CorrectionMethod method);
CorrectionMethod method_from_string(std::string_view name);

// h(v) = 2 log(log2(max{v,m}/m) + 1) + log(pi^2 / (6 delta)).
// Nondecreasing in v; strictly positive for delta < pi^2/6.
double h_value(double v, const BoundaryConfig& cfg);

// f(v) = 1.44 sqrt(v h(v)) + 2.42 B h(v).
double f_value(double v, const BoundaryConfig& cfg);

// b(v) = 1.44 sqrt(v h(v)); the sqrt term of f, so b + 2.42 B h == f exactly.
double b_value(double v, const BoundaryConfig& cfg);

// General stitched boundary with scale parameter c and base eta:
//   sqrt(k1^2 v d(v) + k2^2 c^2 d(v)^2) + k2 c d(v),
//   d(v) = 2 log(log_eta(max{v,m}/m) + 1) + log(pi^2/(6 delta)),
//   k1 = (eta^{1/4} + eta^{-1/4}) / sqrt(2),  k2 = (sqrt(eta) + 1) / 2.
// For eta = 2 it is dominated by 1.44 sqrt(v d) + 2.42 c d.
double stitched_boundary_general(double v, double c, const BoundaryConfig& cfg);

// Smallest m' >= 1 with f_{B,m',delta}(alpha (B-alpha) m') / m' <= alpha.
// Linear scan from 1; the condition is checked for every candidate (it is not
// assumed monotone in m'). Throws std::runtime_error when scan_cap is hit.
std::int64_t m_star_iid(double alpha, const BoundaryConfig& cfg,
                        std::int64_t scan_cap = 1'000'000'000);

// Time-uniform correction f_{B,m*,delta}(alpha (B-alpha) n) / n.
// For n < m_star the value exceeds alpha and the caller is expected to fall
// back to lambda_max. With safe_boundary the argument of f is clamped to
// max{v, m_star}, the form used inside the validity proof.
double gamma_anytime(std::int64_t n, double alpha, const BoundaryConfig& cfg,
                     std::int64_t m_star, bool safe_boundary = false);

// ceil((1-alpha)(n+1))/n - (1-alpha); the classical marginal correction.
double gamma_standard(std::int64_t n, double alpha);

// Fixed-n correction 4L/(3n) + sqrt((4L/(3n))^2 + 2 alpha(1-alpha) L / n),
// L = log(1/delta). delta = 1 gives 0.
double gamma_duchi(std::int64_t n, double alpha, double delta);

// Fixed-n Chernoff bound for sub-gamma sums with scale B and variance
// alpha(B-alpha)n:  (B/n)L + sqrt(2 alpha(B-alpha) L / n + ((B/n)L)^2).
double gamma_fixed_subgamma(std::int64_t n, double alpha, double delta,
                            double loss_bound);

}  // namespace avrc
