#include "doctest.h"

#include <random>

#include "hc/catalog.hpp"
#include "hc/connection.hpp"
#include "hc/verify.hpp"

using namespace hc;

namespace {
const cplx I(0, 1);
}

TEST_CASE("Hopf surface connection spot values at (1,0)") {
  MetricSpec spec = parse_metric_id("hopf:n=2");
  ChartPoint p({cplx(1, 0), cplx(0, 0)});
  MetricJet2 j = evaluate_jet(spec, p);

  Christoffels c = lc_christoffels(j);
  CHECK(std::abs(c.gamma(0, 0, 0) - cplx(-1)) < 1e-14);
  CHECK(std::abs(c.gamma(1, 0, 1) - cplx(-0.5)) < 1e-14);
  CHECK(std::abs(c.gamma(1, 1, 0) - cplx(-0.5)) < 1e-14);
  CHECK(std::abs(c.gamma(0, 1, 1)) < 1e-14);
  CHECK(std::abs(c.gamma_bar(0, 1, 1) - cplx(0.5)) < 1e-14);
  CHECK(std::abs(c.gamma_bar(0, 0, 0)) < 1e-14);

  // T^k_{il} = delta_{ik} delta_{l1} - delta_{lk} delta_{i1} (1-based)
  Torsion t = torsion(j);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int l = 0; l < 2; ++l) {
        double want = (i == k && l == 0 ? 1.0 : 0.0) - (l == k && i == 0 ? 1.0 : 0.0);
        CHECK(std::abs(t.t(k, i, l) - cplx(want)) < 1e-14);
      }

  TorsionProducts tp = torsion_products(j, t);
  CHECK(std::abs(tp.norm_sq - 0.5) < 1e-14);
  Mat C_want(2, 2), B_want(2, 2);
  C_want << 0, 0, 0, 2;
  B_want << 1, 0, 0, 1;
  CHECK((tp.circ.a - C_want).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((tp.boxdot.a - B_want).cwiseAbs().maxCoeff() < 1e-14);

  // dstar omega = i dzbar^1 at (1,0)
  PQForm ds = dstar_omega(j);
  CHECK(std::abs(ds.c[0] - I) < 1e-14);
  CHECK(std::abs(ds.c[1]) < 1e-14);
  CVec v = sharp(ds, j);
  CHECK(std::abs(v(0) - I * 0.25) < 1e-14);
  CHECK(std::abs(v(1)) < 1e-14);

  Herm11 cd = codiff_second_order(j);
  Mat cd_want(2, 2);
  cd_want << 0, 0, 0, 1;
  CHECK((cd.a - cd_want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("torsion antisymmetry and Christoffel symmetry") {
  std::mt19937_64 rng(41);
  MetricSpec spec = parse_metric_id("hopf-family:n=3,lambda=0.7");
  for (int trial = 0; trial < 5; ++trial) {
    ChartPoint p = random_chart_point(spec, rng);
    MetricJet2 j = evaluate_jet(spec, p);
    Christoffels c = lc_christoffels(j);
    Torsion t = torsion(j);
    double anti = 0, sym = 0;
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l) {
          anti = std::max(anti, std::abs(t.t(k, i, l) + t.t(k, l, i)));
          sym = std::max(sym, std::abs(c.gamma(k, i, l) - c.gamma(k, l, i)));
        }
    CHECK(anti < 1e-13);
    CHECK(sym < 1e-13);
  }
}

TEST_CASE("codifferential cross-checks against Lambda contractions") {
  std::mt19937_64 rng(43);
  for (const char* id : {"hopf:n=2", "hopf:n=3", "hopf-family:n=2,lambda=-0.4"}) {
    MetricSpec spec = parse_metric_id(id);
    for (int trial = 0; trial < 5; ++trial) {
      ChartPoint p = random_chart_point(spec, rng);
      MetricJet2 j = evaluate_jet(spec, p);
      PQForm lhs = dstar_omega(j);
      PQForm rhs = lambda_contract(dbar_omega(j), j);
      rhs *= -I;
      double d = 0;
      for (int i = 0; i < j.n; ++i) d = std::max(d, std::abs(lhs.c[i] - rhs.c[i]));
      CHECK(d < 1e-12);

      PQForm lhs2 = dbar_star_omega(j);
      PQForm rhs2 = lambda_contract(del_omega(j), j);
      rhs2 *= I;
      double d2 = 0;
      for (int i = 0; i < j.n; ++i) d2 = std::max(d2, std::abs(lhs2.c[i] - rhs2.c[i]));
      CHECK(d2 < 1e-12);

      // conjugate relation between the two codifferential fields
      PQForm cds = conj_form(dstar_omega(j));
      double d3 = 0;
      for (int i = 0; i < j.n; ++i) d3 = std::max(d3, std::abs(lhs2.c[i] - cds.c[i]));
      CHECK(d3 < 1e-12);
    }
  }
}

TEST_CASE("torsion trace identities") {
  std::mt19937_64 rng(47);
  MetricSpec spec = parse_metric_id("hopf-family:n=4,lambda=0.25");
  for (int trial = 0; trial < 5; ++trial) {
    ChartPoint p = random_chart_point(spec, rng);
    MetricJet2 j = evaluate_jet(spec, p);
    TorsionProducts tp = torsion_products(j, torsion(j));
    CHECK(std::abs(trace11(tp.circ, j) - tp.norm_sq) < 1e-12 * (1 + tp.norm_sq));
    CHECK(std::abs(trace11(tp.boxdot, j) - tp.norm_sq) < 1e-12 * (1 + tp.norm_sq));
  }
}

TEST_CASE("conformal transformation law of the codifferential") {
  std::mt19937_64 rng(53);
  std::normal_distribution<double> g;
  MetricSpec base = parse_metric_id("hopf:n=3");
  for (int trial = 0; trial < 5; ++trial) {
    const int n = base.n;
    CVec a(n);
    Mat b(n, n), c(n, n);
    for (int i = 0; i < n; ++i) {
      a(i) = 0.3 * cplx(g(rng), g(rng));
      for (int k = 0; k < n; ++k) b(i, k) = 0.1 * cplx(g(rng), g(rng));
    }
    Mat cr(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) cr(i, k) = 0.1 * cplx(g(rng), g(rng));
    c = 0.5 * (cr + cr.adjoint());
    RealFn f = polynomial_realfn(a, b, c);
    ChartPoint p = random_chart_point(base, rng);
    CHECK(conformal_codiff_residual(base, f, p) < 1e-10);
  }
}
