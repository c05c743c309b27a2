#pragma once

#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "hc/tensor.hpp"

namespace hc {

struct ChartPoint {
  std::vector<cplx> z;
  ChartPoint() = default;
  explicit ChartPoint(std::vector<cplx> zz) : z(std::move(zz)) {}
  int n() const { return static_cast<int>(z.size()); }
  double abs2() const {
    double s = 0;
    for (const auto& c : z) s += std::norm(c);
    return s;
  }
};

// Second-order jet of the metric at a point.
// Index order for all arrays: [derivative indices..., form indices i, j].
//   h(i,j)            = h_{i jbar}
//   dh(p,i,j)         = d_p h_{i jbar}
//   ddbar_h(p,q,i,j)  = d_p dbar_q h_{i jbar}
//   dd_h(p,q,i,j)     = d_p d_q h_{i jbar}
// Antiholomorphic first derivatives are always derived by conjugation:
//   dbar_q h_{i jbar} = conj(d_q h_{j ibar}).
struct MetricJet2 {
  int n = 0;
  Mat h;
  Tensor3 dh;
  Tensor4 ddbar_h;
  Tensor4 dd_h;

  cplx dbar_h(int q, int i, int j) const { return std::conj(dh(q, j, i)); }
};

enum class JetMode { analytic, numeric };
enum class Domain { generic, hopf_annulus, torus_cell };

struct MetricSpec {
  int n = 0;
  std::string name;
  std::map<std::string, double> params;
  JetMode mode = JetMode::analytic;
  // Closed-form jet evaluator (analytic mode).
  std::function<MetricJet2(const ChartPoint&)> jet;
  // Plain metric evaluator (numeric mode; also used for cross-checks).
  std::function<Mat(const ChartPoint&)> metric;
  std::function<bool(const ChartPoint&)> in_chart;
  Domain domain = Domain::generic;
  // Draws a random valid chart point; set by the catalog.
  std::function<ChartPoint(std::mt19937_64&)> sampler;

  MetricSpec with_mode(JetMode m) const {
    MetricSpec s = *this;
    s.mode = m;
    return s;
  }
};

MetricJet2 evaluate_jet(const MetricSpec& spec, const ChartPoint& p);

// h^{i jbar} with the transposed-inverse convention h^{i lbar} h_{k lbar} = delta^i_k.
Mat inverse_metric(const MetricJet2& j);

// Ratio of smallest to largest eigenvalue below which the metric is rejected.
inline constexpr double kPositivityTol = 1e-10;

}  // namespace hc
