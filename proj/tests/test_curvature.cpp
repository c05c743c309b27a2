#include "doctest.h"

#include <random>

#include "hc/catalog.hpp"
#include "hc/curvature.hpp"
#include "hc/verify.hpp"

using namespace hc;

namespace {

// P_{i jbar} = (delta_{ij} |z|^2 - zbar^i z^j) / |z|^4
Mat hopf_P(const ChartPoint& p) {
  const int n = p.n();
  const double w = p.abs2();
  Mat P(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      P(i, j) = ((i == j ? w : 0.0) - std::conj(p.z[i]) * p.z[j]) / (w * w);
  return P;
}

double mat_err(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff() / (1 + b.cwiseAbs().maxCoeff());
}

}  // namespace

TEST_CASE("canonical Hopf jets match the closed forms") {
  std::mt19937_64 rng(61);
  MetricSpec spec = parse_metric_id("hopf:n=3");
  for (int trial = 0; trial < 5; ++trial) {
    ChartPoint p = random_chart_point(spec, rng);
    MetricJet2 j = evaluate_jet(spec, p);
    const int n = 3;
    const double w = p.abs2();
    double derr = 0, dderr = 0, mixerr = 0;
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          // d_a (4 delta_{ik} / w) = -4 delta_{ik} zbar^a / w^2
          cplx want = (i == k) ? -4.0 * std::conj(p.z[a]) / (w * w) : 0.0;
          derr = std::max(derr, std::abs(j.dh(a, i, k) - want));
          for (int b = 0; b < n; ++b) {
            cplx holo = (i == k) ? 8.0 * std::conj(p.z[a]) * std::conj(p.z[b]) / (w * w * w) : 0.0;
            dderr = std::max(dderr, std::abs(j.dd_h(a, b, i, k) - holo));
            cplx mix = (i == k) ? 4.0 * (2.0 * std::conj(p.z[a]) * p.z[b] / (w * w * w) -
                                         (a == b ? 1.0 / (w * w) : 0.0))
                                : 0.0;
            mixerr = std::max(mixerr, std::abs(j.ddbar_h(a, b, i, k) - mix));
          }
        }
    CHECK(derr < 1e-13);
    CHECK(dderr < 1e-13);
    CHECK(mixerr < 1e-13);
  }
}

TEST_CASE("Hopf Ricci tensors match the closed forms") {
  std::mt19937_64 rng(67);
  for (int n : {2, 3, 4}) {
    MetricSpec spec = hopf_canonical(n);
    for (int trial = 0; trial < 10; ++trial) {
      ChartPoint p = random_chart_point(spec, rng);
      MetricJet2 j = evaluate_jet(spec, p);
      RicciSet R = ricci_set(j);
      const Mat P = hopf_P(p);
      const Mat H = j.h;  // coefficient matrix of omega

      CHECK(mat_err(R.chern1.a, double(n) * P) < 1e-12);
      CHECK(mat_err(R.chern2.a, (n - 1) / 4.0 * H) < 1e-12);
      CHECK(mat_err(R.lc1.a, P) < 1e-12);
      CHECK(mat_err(R.lc2.a, (4.0 - n) / 4.0 * P + (n - 1) / 16.0 * H) < 1e-12);
      CHECK(mat_err(R.ricH.a, 0.5 * P) < 1e-12);
      CHECK(mat_err(R.scrRic.a, (n - 1) / 2.0 * P + (n - 1) / 8.0 * H) < 1e-12);
    }
  }
}

TEST_CASE("Hopf scalar curvatures match the closed forms") {
  std::mt19937_64 rng(71);
  for (int n : {2, 3, 4}) {
    MetricSpec spec = hopf_canonical(n);
    for (int trial = 0; trial < 10; ++trial) {
      ChartPoint p = random_chart_point(spec, rng);
      ScalarSet S = scalar_set(evaluate_jet(spec, p));
      CHECK(std::abs(S.s_R - (n * n - n) / 8.0) < 1e-12);
      CHECK(std::abs(S.s_H - (n - 1) / 8.0) < 1e-12);
      CHECK(std::abs(S.s - (2 * n - 1) * (n - 1) / 4.0) < 1e-12);
      CHECK(std::abs(S.s_LC - (n - 1) / 4.0) < 1e-12);
      CHECK(std::abs(S.s_C - n * (n - 1) / 4.0) < 1e-12);
      CHECK(std::abs(S.s_star - 2 * S.s_H) < 1e-14);
    }
  }
}

TEST_CASE("Kaehler degeneration: all six Ricci tensors agree, torsion vanishes") {
  std::mt19937_64 rng(73);
  for (const char* id : {"flat:n=3", "fubini-study:n=2", "fubini-study:n=3"}) {
    MetricSpec spec = parse_metric_id(id);
    for (int trial = 0; trial < 5; ++trial) {
      ChartPoint p = random_chart_point(spec, rng);
      MetricJet2 j = evaluate_jet(spec, p);
      CHECK(torsion_products(j, torsion(j)).norm_sq < 1e-12);
      RicciSet R = ricci_set(j);
      for (const Herm11* m : {&R.chern2, &R.lc1, &R.lc2, &R.ricH, &R.scrRic})
        CHECK(mat_err(m->a, R.chern1.a) < 1e-10);
      ScalarSet S = scalar_set(j);
      CHECK(std::abs(S.s - 2 * S.s_C) < 1e-10 * (1 + std::abs(S.s)));
      CHECK(std::abs(S.s_R - S.s_C) < 1e-10 * (1 + std::abs(S.s_C)));
      CHECK(std::abs(S.s_H - S.s_C) < 1e-10 * (1 + std::abs(S.s_C)));
    }
  }
}

TEST_CASE("star-Ricci: J-symmetry and trace") {
  std::mt19937_64 rng(79);
  std::normal_distribution<double> g;
  for (const char* id : {"hopf:n=2", "hopf-family:n=3,lambda=0.5", "fubini-study:n=2"}) {
    MetricSpec spec = parse_metric_id(id);
    const int n = spec.n;
    ChartPoint p = random_chart_point(spec, rng);
    MetricJet2 j = evaluate_jet(spec, p);

    auto apply_J = [&](const RVec& X) {
      RVec Y(2 * n);
      for (int i = 0; i < n; ++i) {
        Y[n + i] = X[i];
        Y[i] = -X[n + i];
      }
      return Y;
    };
    for (int trial = 0; trial < 10; ++trial) {
      RVec X(2 * n), Y(2 * n);
      for (int a = 0; a < 2 * n; ++a) {
        X[a] = g(rng);
        Y[a] = g(rng);
      }
      double lhs = star_ricci(j, X, Y);
      double rhs = star_ricci(j, apply_J(Y), apply_J(X));
      CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs)));
    }

    // trace of Ric* with respect to g equals s* = 2 s_H
    Eigen::MatrixXd G(2 * n, 2 * n), Rs(2 * n, 2 * n);
    for (int a = 0; a < 2 * n; ++a)
      for (int b = 0; b < 2 * n; ++b) {
        RVec ea = RVec::Zero(2 * n), eb = RVec::Zero(2 * n);
        ea[a] = 1;
        eb[b] = 1;
        G(a, b) = real_metric(j, ea, eb);
        Rs(a, b) = star_ricci(j, ea, eb);
      }
    ScalarSet S = scalar_set(j);
    double tr = (G.inverse() * Rs).trace();
    CHECK(std::abs(tr - 2 * S.s_H) < 1e-9 * (1 + std::abs(S.s_H)));
  }
}

TEST_CASE("Bianchi, pair symmetry, Chern realness on the catalog") {
  std::mt19937_64 rng(83);
  for (const char* id : {"hopf:n=2", "hopf:n=3", "hopf-family:n=2,lambda=1",
                         "hopf-family:n=3,lambda=-0.6", "fubini-study:n=2", "flat:n=2"}) {
    MetricSpec spec = parse_metric_id(id);
    for (int trial = 0; trial < 5; ++trial) {
      ChartPoint p = random_chart_point(spec, rng);
      auto rs = identity_suite(spec, p);
      for (const auto& r : rs) {
        INFO(id, " ", r.name);
        CHECK(r.pass);
      }
    }
  }
}
