#include "doctest.h"

#include <cmath>

#include "hc/catalog.hpp"
#include "hc/integrate.hpp"

using namespace hc;

namespace {

double hopf_volume(int n, double lambda) {
  const double sphere = 2.0 * std::pow(M_PI, n) / std::tgamma(n);
  return std::pow(8.0, n) * std::pow(1.0 + lambda, n - 1) * sphere * std::log(2.0);
}

}  // namespace

TEST_CASE("Hopf volume against the closed form") {
  MCOptions opt;
  opt.samples = 40000;
  opt.seed = 2024;
  for (int n : {2, 3}) {
    MetricSpec spec = hopf_canonical(n);
    IntegralEstimate est = hopf_integrate(
        spec, [](const MetricJet2&, const ChartPoint&) { return 1.0; }, opt);
    double exact = hopf_volume(n, 0.0);
    INFO("n=", n, " est=", est.value, " exact=", exact, " se=", est.std_err);
    CHECK(std::abs(est.value - exact) < 3.5 * est.std_err);
    CHECK(est.std_err < 0.02 * exact);
  }
  MetricSpec fam = hopf_family(2, 0.5);
  IntegralEstimate est = hopf_integrate(
      fam, [](const MetricJet2&, const ChartPoint&) { return 1.0; }, opt);
  CHECK(std::abs(est.value - hopf_volume(2, 0.5)) < 3.5 * est.std_err);
}

TEST_CASE("flat torus volume is exact") {
  MCOptions opt;
  opt.samples = 5000;
  MetricSpec spec = flat(2);
  IntegralEstimate est = hopf_integrate(
      spec, [](const MetricJet2&, const ChartPoint&) { return 1.0; }, opt);
  // det h = 1 and the cell has unit Lebesgue volume, so every sample is 2^n
  CHECK(std::abs(est.value - 4.0) < 1e-12);
  CHECK(est.std_err < 1e-12);
}

TEST_CASE("estimates are deterministic in the seed") {
  MCOptions opt;
  opt.samples = 20000;
  opt.seed = 99;
  MetricSpec spec = hopf_canonical(2);
  auto f = [](const MetricJet2& j, const ChartPoint&) { return j.h(0, 0).real(); };
  IntegralEstimate a = hopf_integrate(spec, f, opt);
  IntegralEstimate b = hopf_integrate(spec, f, opt);
  CHECK(a.value == b.value);
  CHECK(a.std_err == b.std_err);
  opt.seed = 100;
  IntegralEstimate c = hopf_integrate(spec, f, opt);
  CHECK(a.value != c.value);
}

TEST_CASE("standard error scales like 1/sqrt(samples)") {
  MetricSpec spec = hopf_canonical(2);
  auto f = [](const MetricJet2& j, const ChartPoint& p) { return p.abs2(); };
  MCOptions small, big;
  small.samples = 20000;
  big.samples = 320000;
  IntegralEstimate a = hopf_integrate(spec, f, small);
  IntegralEstimate b = hopf_integrate(spec, f, big);
  double ratio = a.std_err / b.std_err;
  CHECK(ratio > 2.8);
  CHECK(ratio < 5.2);
}

TEST_CASE("shared-stream integrands are consistent") {
  MCOptions opt;
  opt.samples = 10000;
  MetricSpec spec = hopf_canonical(2);
  std::vector<PointFn> fns = {
      [](const MetricJet2&, const ChartPoint&) { return 1.0; },
      [](const MetricJet2&, const ChartPoint&) { return 2.0; },
  };
  auto est = integrate_many(spec, fns, opt);
  REQUIRE(est.size() == 2);
  CHECK(std::abs(est[1].value - 2.0 * est[0].value) < 1e-9 * est[1].value);
  CHECK(est[0].samples == opt.samples);
  CHECK(est[0].seed == opt.seed);
}

TEST_CASE("integral identities at modest sample counts") {
  MCOptions opt;
  opt.samples = 50000;
  {
    // at n=2 both sides vanish (the metric is pluriclosed and |del omega| = |dstar omega|)
    ResidualReport r = check_integral_identity_999(hopf_canonical(2), opt);
    CHECK(r.pass(0.05));
    ResidualReport r3 = check_integral_identity_999(hopf_canonical(3), opt);
    CHECK(r3.pass(0.05));
  }
  {
    ResidualReport r = check_k_gauduchon_identity(hopf_canonical(3), 1, opt);
    CHECK(r.pass(0.05));
    ResidualReport r2 = check_integral_identity_89(hopf_canonical(3), opt);
    CHECK(r2.pass(0.05));
  }
}

TEST_CASE("balanced diagnostic") {
  MCOptions opt;
  opt.samples = 50000;
  BalancedReport hb = balanced_diagnostic(hopf_canonical(2), opt);
  CHECK(std::abs(hb.ratio_C_over_LC - 2.0) < 0.04);
  CHECK(hb.gauduchon_residual < 0.02);
  CHECK(!hb.balanced);

  opt.samples = 2000;
  BalancedReport fb = balanced_diagnostic(flat(2), opt);
  CHECK(fb.balanced);
  CHECK(std::abs(fb.total_s.value) < 1e-12);
}
