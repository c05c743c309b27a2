#include "hc/jets.hpp"

#include <cmath>

namespace hc {

namespace {

void check_finite(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        throw std::runtime_error("non-finite metric value");
}

void validate(MetricJet2& j) {
  const int n = j.n;
  double herm = 0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) herm = std::max(herm, std::abs(j.h(i, k) - std::conj(j.h(k, i))));
  const double scale = j.h.cwiseAbs().maxCoeff();
  if (herm > 1e-10 * (1 + scale)) throw std::runtime_error("metric is not Hermitian");
  j.h = 0.5 * (j.h + j.h.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Mat> es(j.h);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > kPositivityTol * hi)) throw std::runtime_error("metric is not positive definite");
  for (const auto& t : {j.dh.v, j.ddbar_h.v, j.dd_h.v})
    for (const auto& c : t)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw std::runtime_error("non-finite jet derivative");
}

// Wirtinger jets by central differences in the 2n real coordinates, with
// Richardson extrapolation over two step sizes (leading error O(h^2)).
MetricJet2 numeric_jet(const MetricSpec& spec, const ChartPoint& p) {
  const int n = spec.n;
  const int m = 2 * n;
  auto eval = [&](const RVec& u) {
    ChartPoint q = p;
    for (int a = 0; a < n; ++a) q.z[a] = cplx(u[a], u[n + a]);
    Mat h = spec.metric(q);
    check_finite(h);
    return h;
  };
  RVec u0(m);
  for (int a = 0; a < n; ++a) {
    u0[a] = p.z[a].real();
    u0[n + a] = p.z[a].imag();
  }
  const Mat h0 = eval(u0);

  auto first = [&](double step) {
    std::vector<Mat> d(m);
    for (int a = 0; a < m; ++a) {
      RVec up = u0, dn = u0;
      up[a] += step;
      dn[a] -= step;
      d[a] = (eval(up) - eval(dn)) / (2 * step);
    }
    return d;
  };
  auto second = [&](double step) {
    std::vector<std::vector<Mat>> d(m, std::vector<Mat>(m));
    for (int a = 0; a < m; ++a) {
      for (int b = a; b < m; ++b) {
        Mat v;
        if (a == b) {
          RVec up = u0, dn = u0;
          up[a] += step;
          dn[a] -= step;
          v = (eval(up) + eval(dn) - 2 * h0) / (step * step);
        } else {
          RVec pp = u0, mm = u0, pm = u0, mp = u0;
          pp[a] += step; pp[b] += step;
          mm[a] -= step; mm[b] -= step;
          pm[a] += step; pm[b] -= step;
          mp[a] -= step; mp[b] += step;
          v = (eval(pp) + eval(mm) - eval(pm) - eval(mp)) / (4 * step * step);
        }
        d[a][b] = v;
        d[b][a] = v;
      }
    }
    return d;
  };

  const double h1 = 1e-4, h2 = 5e-5;
  auto f1 = first(h1), f2 = first(h2);
  auto s1 = second(h1), s2 = second(h2);
  auto rich = [](const Mat& a, const Mat& b) { return ((4.0 * b - a) / 3.0).eval(); };

  MetricJet2 j;
  j.n = n;
  j.h = h0;
  j.dh = Tensor3(n);
  j.ddbar_h = Tensor4(n);
  j.dd_h = Tensor4(n);
  const cplx I(0, 1);
  std::vector<Mat> dx(n), dy(n);
  for (int a = 0; a < n; ++a) {
    dx[a] = rich(f1[a], f2[a]);
    dy[a] = rich(f1[n + a], f2[n + a]);
  }
  for (int pth = 0; pth < n; ++pth) {
    Mat dp = 0.5 * (dx[pth] - I * dy[pth]);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) j.dh(pth, i, k) = dp(i, k);
  }
  for (int pth = 0; pth < n; ++pth) {
    for (int q = 0; q < n; ++q) {
      Mat xx = rich(s1[pth][q], s2[pth][q]);
      Mat yy = rich(s1[n + pth][n + q], s2[n + pth][n + q]);
      Mat xy = rich(s1[pth][n + q], s2[pth][n + q]);
      Mat yx = rich(s1[n + pth][q], s2[n + pth][q]);
      Mat mixed = 0.25 * (xx + yy + I * (xy - yx));     // d_p dbar_q
      Mat holo = 0.25 * (xx - yy - I * (xy + yx));      // d_p d_q
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          j.ddbar_h(pth, q, i, k) = mixed(i, k);
          j.dd_h(pth, q, i, k) = holo(i, k);
        }
    }
  }
  // Enforce the exact jet symmetries on the finite-difference estimates.
  for (int pth = 0; pth < n; ++pth)
    for (int q = 0; q < n; ++q)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          if (pth < q || (pth == q && i <= k)) {
            cplx sym = 0.5 * (j.ddbar_h(pth, q, i, k) + std::conj(j.ddbar_h(q, pth, k, i)));
            j.ddbar_h(pth, q, i, k) = sym;
            j.ddbar_h(q, pth, k, i) = std::conj(sym);
          }
          if (pth < q) {
            cplx sym = 0.5 * (j.dd_h(pth, q, i, k) + j.dd_h(q, pth, i, k));
            j.dd_h(pth, q, i, k) = sym;
            j.dd_h(q, pth, i, k) = sym;
          }
        }
  return j;
}

}  // namespace

MetricJet2 evaluate_jet(const MetricSpec& spec, const ChartPoint& p) {
  if (p.n() != spec.n) throw std::invalid_argument("point dimension mismatch");
  if (spec.in_chart && !spec.in_chart(p)) throw std::domain_error("point outside chart region");
  MetricJet2 j;
  if (spec.mode == JetMode::analytic) {
    if (!spec.jet) throw std::runtime_error("spec has no analytic jet evaluator");
    j = spec.jet(p);
  } else {
    if (!spec.metric) throw std::runtime_error("spec has no metric evaluator");
    j = numeric_jet(spec, p);
  }
  validate(j);
  return j;
}

Mat inverse_metric(const MetricJet2& j) {
  Eigen::SelfAdjointEigenSolver<Mat> es(j.h);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > kPositivityTol * hi)) throw std::runtime_error("metric is singular or indefinite");
  return j.h.inverse().transpose();
}

}  // namespace hc
