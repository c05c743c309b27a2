#pragma once

#include <cstdint>

#include "hc/jets.hpp"

namespace hc {

struct IntegralEstimate {
  double value = 0;
  double std_err = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
};

struct MCOptions {
  long long samples = 1000000;
  std::uint64_t seed = 20240814;
  int partitions = 256;
};

using PointFn = std::function<double(const MetricJet2&, const ChartPoint&)>;

// Monte Carlo estimates of integrals f * omega^n/n! over the fundamental
// domain of the metric (Hopf annulus 1 <= |z| < 2, or a torus cell).  All
// integrands share the same sample stream; the reduction is partitioned with
// per-partition seeds and summed in partition order, so results are
// bitwise-deterministic for fixed (seed, samples, partitions).
std::vector<IntegralEstimate> integrate_many(const MetricSpec& spec,
                                             const std::vector<PointFn>& fns,
                                             const MCOptions& opt);

IntegralEstimate hopf_integrate(const MetricSpec& spec, const PointFn& f, const MCOptions& opt);

struct ResidualReport {
  std::string identity;
  double lhs = 0, rhs = 0;
  double stderr_lhs = 0, stderr_rhs = 0;
  double residual = 0;  // |lhs-rhs| / max(|lhs|,|rhs|,1e-12), or absolute when both ~ 0
  long long samples = 0;
  std::uint64_t seed = 0;
  bool pass(double tol) const { return residual < tol; }
};

// integral of i ddbar(omega) ^ omega^{n-2}/(n-2)!  vs  |d omega|^2 - |d* omega|^2
ResidualReport check_integral_identity_999(const MetricSpec& spec, const MCOptions& opt);

// integral of i omega^{n-k-1} ^ ddbar(omega^k)  vs  (n-3)! k (n-k-1) (|d omega|^2 - |d* omega|^2)
ResidualReport check_k_gauduchon_identity(const MetricSpec& spec, int k, const MCOptions& opt);

// integral of i d(omega) ^ dbar(omega) ^ omega^{n-3}/(n-3)!  vs  |d* omega|^2 - |d omega|^2
ResidualReport check_integral_identity_89(const MetricSpec& spec, const MCOptions& opt);

struct BalancedReport {
  IntegralEstimate total_s, total_s_C, total_s_LC, total_s_H, total_s_R, total_torsion_sq;
  double ratio_C_over_LC = 0;  // NaN when the denominator is consistent with zero
  double gauduchon_residual = 0;  // total_s vs 2 total_s_C - total_torsion_sq / 2
  bool balanced = false;          // total_s_C == total_s_LC within 3 sigma
};

BalancedReport balanced_diagnostic(const MetricSpec& spec, const MCOptions& opt);

}  // namespace hc
