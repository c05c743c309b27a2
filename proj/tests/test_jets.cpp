#include "doctest.h"

#include <random>

#include "hc/catalog.hpp"

using namespace hc;

namespace {

double jet_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0;
  for (size_t m = 0; m < a.size(); ++m) d = std::max(d, std::abs(a[m] - b[m]));
  return d;
}

}  // namespace

TEST_CASE("numeric jets agree with analytic jets") {
  std::mt19937_64 rng(7);
  for (const char* id : {"hopf:n=2", "hopf-family:n=3,lambda=0.4", "fubini-study:n=2"}) {
    MetricSpec spec = parse_metric_id(id);
    MetricSpec num = spec.with_mode(JetMode::numeric);
    for (int trial = 0; trial < 5; ++trial) {
      ChartPoint p = random_chart_point(spec, rng);
      MetricJet2 ja = evaluate_jet(spec, p);
      MetricJet2 jn = evaluate_jet(num, p);
      CHECK((ja.h - jn.h).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(jet_diff(ja.dh.v, jn.dh.v) < 1e-6);
      CHECK(jet_diff(ja.ddbar_h.v, jn.ddbar_h.v) < 1e-4);
      CHECK(jet_diff(ja.dd_h.v, jn.dd_h.v) < 1e-4);
    }
  }
}

TEST_CASE("jet symmetries") {
  std::mt19937_64 rng(11);
  MetricSpec spec = parse_metric_id("hopf-family:n=3,lambda=-0.3");
  for (int trial = 0; trial < 10; ++trial) {
    ChartPoint p = random_chart_point(spec, rng);
    MetricJet2 j = evaluate_jet(spec, p);
    const int n = j.n;
    double herm = 0, mixed = 0, holo = 0, dsym = 0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        herm = std::max(herm, std::abs(j.h(i, k) - std::conj(j.h(k, i))));
        for (int a = 0; a < n; ++a) {
          dsym = std::max(dsym, std::abs(j.dbar_h(a, i, k) - std::conj(j.dh(a, k, i))));
          for (int b = 0; b < n; ++b) {
            mixed = std::max(mixed,
                             std::abs(j.ddbar_h(a, b, i, k) - std::conj(j.ddbar_h(b, a, k, i))));
            holo = std::max(holo, std::abs(j.dd_h(a, b, i, k) - j.dd_h(b, a, i, k)));
          }
        }
      }
    CHECK(herm < 1e-12);
    CHECK(mixed < 1e-12);
    CHECK(holo < 1e-12);
    CHECK(dsym == 0);
  }
}

TEST_CASE("inverse metric") {
  std::mt19937_64 rng(13);
  MetricSpec spec = parse_metric_id("hopf:n=4");
  for (int trial = 0; trial < 5; ++trial) {
    ChartPoint p = random_chart_point(spec, rng);
    MetricJet2 j = evaluate_jet(spec, p);
    Mat hinv = inverse_metric(j);
    // h^{i lbar} h_{k lbar} = delta^i_k
    Mat res = hinv * j.h.transpose() - Mat::Identity(j.n, j.n);
    CHECK(res.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("indefinite and non-Hermitian metrics are rejected") {
  MetricSpec bad;
  bad.n = 2;
  bad.name = "bad";
  bad.jet = [](const ChartPoint&) {
    MetricJet2 j;
    j.n = 2;
    j.h = Mat::Identity(2, 2);
    j.h(1, 1) = -1.0;
    j.dh = Tensor3(2);
    j.ddbar_h = Tensor4(2);
    j.dd_h = Tensor4(2);
    return j;
  };
  ChartPoint p({cplx(0.1, 0), cplx(0.2, 0)});
  CHECK_THROWS(evaluate_jet(bad, p));

  bad.jet = [](const ChartPoint&) {
    MetricJet2 j;
    j.n = 2;
    j.h = Mat::Identity(2, 2);
    j.h(0, 1) = cplx(0, 1);  // h(1,0) left at 0: not Hermitian
    j.dh = Tensor3(2);
    j.ddbar_h = Tensor4(2);
    j.dd_h = Tensor4(2);
    return j;
  };
  CHECK_THROWS(evaluate_jet(bad, p));
}

TEST_CASE("chart and dimension guards") {
  MetricSpec spec = parse_metric_id("hopf:n=2");
  CHECK_THROWS(evaluate_jet(spec, ChartPoint({cplx(1, 0)})));
  CHECK_THROWS(evaluate_jet(spec, ChartPoint({cplx(0, 0), cplx(0, 0)})));
}
