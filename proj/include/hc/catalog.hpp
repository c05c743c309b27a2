#pragma once

#include "hc/jets.hpp"

namespace hc {

// Smooth real-valued function with analytic Wirtinger gradient and Hessians,
// used as the conformal weight.
struct RealFn {
  // value, grad(p) = d_p f, hess(p,q) = d_p d_q f, hess_mixed(p,q) = d_p dbar_q f
  struct Jet {
    double value;
    CVec grad;
    Mat hess;
    Mat hess_mixed;
  };
  std::function<Jet(const ChartPoint&)> jet;
};

MetricSpec flat(int n);
MetricSpec hopf_canonical(int n);
MetricSpec hopf_family(int n, double lambda);
MetricSpec fubini_study(int n);
MetricSpec conformal(const MetricSpec& base, const RealFn& f);
MetricSpec product(const MetricSpec& a, const MetricSpec& b);

// f = Re(sum_i a_i z^i) + Re(sum_{ij} b_{ij} z^i z^j) + sum_{ij} c_{ij} z^i zbar^j
// with c Hermitian; a convenient analytic conformal weight.
RealFn polynomial_realfn(const CVec& a, const Mat& b, const Mat& c);

// Parse catalog ids such as "hopf:n=2", "hopf-family:n=2,lambda=-0.5",
// "flat:n=3", "fubini-study:n=2".
MetricSpec parse_metric_id(const std::string& id);

std::vector<std::string> catalog_names();

// Uniform random point in the Hopf fundamental annulus 1 <= |z| < 2 (or the
// metric's natural sampling region), deterministic in the seed stream.
ChartPoint random_chart_point(const MetricSpec& spec, std::mt19937_64& rng);

}  // namespace hc
