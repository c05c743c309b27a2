#include "hc/curvature.hpp"

namespace hc {

namespace {

const cplx I(0, 1);

// d_p h^{k lbar} = -h^{k bbar} (d_p h_{a bbar}) h^{a lbar}
Tensor3 d_hinv(const MetricJet2& j, const Mat& hinv) {
  const int n = j.n;
  Tensor3 d(n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        cplx s = 0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) s += hinv(k, b) * j.dh(p, a, b) * hinv(a, l);
        d(p, k, l) = -s;
      }
  return d;
}

// dbar_q h^{k lbar}
Tensor3 dbar_hinv(const MetricJet2& j, const Mat& hinv) {
  const int n = j.n;
  Tensor3 d(n);
  for (int q = 0; q < n; ++q)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        cplx s = 0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) s += hinv(k, b) * j.dbar_h(q, a, b) * hinv(a, l);
        d(q, k, l) = -s;
      }
  return d;
}

double mode_tol(JetMode mode) { return mode == JetMode::analytic ? 1e-9 : 1e-4; }

double strip_real(cplx v, double tol) {
  if (std::abs(v.imag()) > tol * (1 + std::abs(v)))
    throw std::runtime_error("scalar curvature has a non-real part");
  return v.real();
}

}  // namespace

Curv4 chern_curvature(const MetricJet2& j) {
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  Curv4 th;
  th.n = n;
  th.kind = CurvKind::chern;
  th.r = Tensor4(n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          cplx corr = 0;
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              corr += hinv(p, q) * j.dbar_h(jj, p, l) * j.dh(i, k, q);
          th.r(i, jj, k, l) = -j.ddbar_h(i, jj, k, l) + corr;
        }
  return th;
}

Curv4 lc_curvature(const MetricJet2& j) {
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  const Christoffels c = lc_christoffels(j);
  const Tensor3 dhi = d_hinv(j, hinv);
  const Tensor3 dbhi = dbar_hinv(j, hinv);

  // dbarG(jj,l,i,k) = dbar_j Gamma^l_{ik};  dG(i,l,jj,k) = d_i Gamma^l_{jbar k}
  Tensor4 dbarG(n), dG(n);
  for (int jj = 0; jj < n; ++jj)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          cplx s = 0;
          for (int q = 0; q < n; ++q)
            s += dbhi(jj, l, q) * (j.dh(i, k, q) + j.dh(k, i, q)) +
                 hinv(l, q) * (j.ddbar_h(i, jj, k, q) + j.ddbar_h(k, jj, i, q));
          dbarG(jj, l, i, k) = 0.5 * s;
        }
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int jj = 0; jj < n; ++jj)
        for (int k = 0; k < n; ++k) {
          cplx s = 0;
          for (int q = 0; q < n; ++q)
            s += dhi(i, l, q) * (j.dbar_h(jj, k, q) - j.dbar_h(q, k, jj)) +
                 hinv(l, q) * (j.ddbar_h(i, jj, k, q) - j.ddbar_h(i, q, k, jj));
          dG(i, l, jj, k) = 0.5 * s;
        }

  Curv4 lc;
  lc.n = n;
  lc.kind = CurvKind::levi_civita;
  lc.r = Tensor4(n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          cplx up = dbarG(jj, l, i, k) - dG(i, l, jj, k);
          for (int s = 0; s < n; ++s)
            up += c.gamma(s, i, k) * c.gamma_bar(l, jj, s) -
                  c.gamma_bar(s, jj, k) * c.gamma(l, s, i);
          // temporarily store the upper-index component in the l slot
          lc.r(i, jj, k, l) = -up;
        }
      }
  // lower with h: R_{i jbar k lbar} = R^s_{i jbar k} h_{s lbar}
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k) {
        std::vector<cplx> up(n);
        for (int s = 0; s < n; ++s) up[s] = lc.r(i, jj, k, s);
        for (int l = 0; l < n; ++l) {
          cplx v = 0;
          for (int s = 0; s < n; ++s) v += up[s] * j.h(s, l);
          lc.r(i, jj, k, l) = v;
        }
      }
  return lc;
}

Curv4 lc_curvature(const MetricSpec& spec, const ChartPoint& p) {
  return lc_curvature(evaluate_jet(spec, p));
}

Curv4 riemann_complexified(const MetricJet2& j) {
  const int n = j.n;
  Curv4 r = lc_curvature(j);
  r.kind = CurvKind::riemann_complexified;
  const Christoffels c = lc_christoffels(j);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          cplx corr = 0;
          for (int p = 0; p < n; ++p)
            for (int s = 0; s < n; ++s)
              corr += j.h(p, l) * c.gamma_bar(p, s, i) * std::conj(c.gamma_bar(s, k, jj));
          r.r(i, jj, k, l) += corr;
        }
  return r;
}

Curv4 riemann_complexified(const MetricSpec& spec, const ChartPoint& p) {
  return riemann_complexified(evaluate_jet(spec, p));
}

Tensor4 riemann_holo_pair(const MetricJet2& j) {
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  const Christoffels c = lc_christoffels(j);
  const Tensor3 dhi = d_hinv(j, hinv);
  // dG(p,l,i,k) = d_p Gamma^l_{ik}
  Tensor4 dG(n);
  for (int p = 0; p < n; ++p)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          cplx s = 0;
          for (int q = 0; q < n; ++q)
            s += dhi(p, l, q) * (j.dh(i, k, q) + j.dh(k, i, q)) +
                 hinv(l, q) * (j.dd_h(p, i, k, q) + j.dd_h(p, k, i, q));
          dG(p, l, i, k) = 0.5 * s;
        }
  Tensor4 r(n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          cplx v = 0;
          for (int s = 0; s < n; ++s) {
            cplx up = dG(jj, s, i, k) - dG(i, s, jj, k);
            for (int u = 0; u < n; ++u)
              up += c.gamma(u, i, k) * c.gamma(s, u, jj) - c.gamma(u, jj, k) * c.gamma(s, u, i);
            v += -up * j.h(s, l);
          }
          r(i, jj, k, l) = v;  // R(d_i, d_j, d_k, dbar_l)
        }
  return r;
}

Tensor4 riemann_two_anti(const MetricJet2& j) {
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  const Christoffels c = lc_christoffels(j);
  const Tensor3 dhi = d_hinv(j, hinv);
  // dG(a,p,cc,b) = d_a Gamma^p_{cbar b}
  Tensor4 dG(n);
  for (int a = 0; a < n; ++a)
    for (int p = 0; p < n; ++p)
      for (int cc = 0; cc < n; ++cc)
        for (int b = 0; b < n; ++b) {
          cplx s = 0;
          for (int q = 0; q < n; ++q)
            s += dhi(a, p, q) * (j.dbar_h(cc, b, q) - j.dbar_h(q, b, cc)) +
                 hinv(p, q) * (j.ddbar_h(a, cc, b, q) - j.ddbar_h(a, q, b, cc));
          dG(a, p, cc, b) = 0.5 * s;
        }
  // In the complexified Levi-Civita connection, nabla_a dbar_c has holomorphic
  // part Gamma^p_{cbar a} d_p and antiholomorphic part conj(Gamma^p_{abar c}) dbar_p.
  auto term = [&](int a, int b, int cc, int p) {
    cplx s = dG(a, p, cc, b);
    for (int u = 0; u < n; ++u)
      s += std::conj(c.gamma_bar(u, b, cc)) * c.gamma_bar(p, u, a) +
           c.gamma_bar(u, cc, b) * c.gamma(p, a, u);
    return s;
  };
  Tensor4 H(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int d = 0; d < n; ++d) {
          cplx v = 0;
          for (int p = 0; p < n; ++p) v += (term(a, b, cc, p) - term(b, a, cc, p)) * j.h(p, d);
          H(a, b, cc, d) = v;
        }
  return H;
}

RicciSet ricci_set(const MetricJet2& j, JetMode mode) {
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  const Curv4 th = chern_curvature(j);
  const Curv4 lc = lc_curvature(j);
  const Curv4 rc = riemann_complexified(j);
  const double tol = mode_tol(mode);

  // Theta^{(1)} = -d dbar log det h, via Jacobi's formula.
  const Tensor3 dbhi = dbar_hinv(j, hinv);
  Mat c1(n, n), c1_trace(n, n), c2(n, n), l1(n, n), l2(n, n), rH(n, n), sR(n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      cplx s = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          s += dbhi(jj, k, l) * j.dh(i, k, l) + hinv(k, l) * j.ddbar_h(i, jj, k, l);
      c1(i, jj) = -s;
      cplx t1 = 0, t2 = 0, m1 = 0, m2 = 0, h1 = 0, sc = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          t1 += hinv(k, l) * th.r(i, jj, k, l);
          t2 += hinv(k, l) * th.r(k, l, i, jj);
          m1 += hinv(k, l) * lc.r(i, jj, k, l);
          m2 += hinv(k, l) * lc.r(k, l, i, jj);
          h1 += hinv(k, l) * rc.r(i, jj, k, l);
          sc += hinv(k, l) * rc.r(k, jj, i, l);
        }
      c1_trace(i, jj) = t1;
      c2(i, jj) = t2;
      l1(i, jj) = m1;
      l2(i, jj) = m2;
      rH(i, jj) = h1;
      sR(i, jj) = 2.0 * sc - h1;
    }
  double dev = (c1 - c1_trace).cwiseAbs().maxCoeff();
  double scale = 1 + c1.cwiseAbs().maxCoeff();
  if (dev > 100 * mode_tol(mode) * scale)
    throw std::runtime_error("Chern Ricci self-test failed: log-det route disagrees with trace");

  RicciSet rs;
  rs.chern1 = Herm11::checked(c1, tol);
  rs.chern2 = Herm11::checked(c2, tol);
  rs.lc1 = Herm11::checked(l1, tol);
  rs.lc2 = Herm11::checked(l2, tol);
  rs.ricH = Herm11::checked(rH, tol);
  rs.scrRic = Herm11::checked(sR, tol);
  return rs;
}

RicciSet ricci_set(const MetricSpec& spec, const ChartPoint& p) {
  return ricci_set(evaluate_jet(spec, p), spec.mode);
}

ScalarSet scalar_set(const MetricJet2& j, JetMode mode) {
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  const Curv4 th = chern_curvature(j);
  const Curv4 lc = lc_curvature(j);
  const Curv4 rc = riemann_complexified(j);
  cplx sC = 0, sLC = 0, sH = 0, sR = 0, s = 0;
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          sC += hinv(i, jj) * hinv(k, l) * th.r(i, jj, k, l);
          sLC += hinv(i, jj) * hinv(k, l) * lc.r(i, jj, k, l);
          sH += hinv(i, jj) * hinv(k, l) * rc.r(i, jj, k, l);
          sR += hinv(i, l) * hinv(k, jj) * rc.r(i, jj, k, l);
          s += 2.0 * hinv(i, jj) * hinv(k, l) * (2.0 * rc.r(i, l, k, jj) - rc.r(i, jj, k, l));
        }
  const double tol = mode_tol(mode);
  ScalarSet out;
  out.s = strip_real(s, tol);
  out.s_R = strip_real(sR, tol);
  out.s_H = strip_real(sH, tol);
  out.s_LC = strip_real(sLC, tol);
  out.s_C = strip_real(sC, tol);
  out.s_star = 2 * out.s_H;
  return out;
}

ScalarSet scalar_set(const MetricSpec& spec, const ChartPoint& p) {
  return scalar_set(evaluate_jet(spec, p), spec.mode);
}

double star_ricci(const MetricJet2& j, const RVec& X, const RVec& Y) {
  const int n = j.n;
  if (X.size() != 2 * n || Y.size() != 2 * n) throw std::invalid_argument("vector size");
  const Mat hinv = inverse_metric(j);
  const Curv4 rc = riemann_complexified(j);
  const Tensor4 rh = riemann_holo_pair(j);
  CVec xi(n), eta(n);
  for (int a = 0; a < n; ++a) {
    xi(a) = cplx(X(a), X(n + a));
    eta(a) = cplx(Y(a), Y(n + a));
  }
  // X = xi^a d_a + conj(xi^a) dbar_a;  J Y = i eta^b d_b - i conj(eta^b) dbar_b.
  cplx acc = 0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      cplx w = hinv(k, l);
      if (w == cplx(0)) continue;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          cplx term = 0;
          term += xi(a) * (I * eta(b)) * rh(a, b, k, l);
          term += xi(a) * (-I * std::conj(eta(b))) * rc.r(k, l, a, b);
          term += std::conj(xi(a)) * (I * eta(b)) * (-rc.r(k, l, b, a));
          term += std::conj(xi(a)) * (-I * std::conj(eta(b))) * (-std::conj(rh(a, b, l, k)));
          acc += w * term;
        }
    }
  cplx v = I * acc;
  if (std::abs(v.imag()) > 1e-7 * (1 + std::abs(v)))
    throw std::runtime_error("*-Ricci value is not real");
  return v.real();
}

double star_ricci(const MetricSpec& spec, const ChartPoint& p, const RVec& X, const RVec& Y) {
  return star_ricci(evaluate_jet(spec, p), X, Y);
}

double real_metric(const MetricJet2& j, const RVec& X, const RVec& Y) {
  const int n = j.n;
  CVec xi(n), eta(n);
  for (int a = 0; a < n; ++a) {
    xi(a) = cplx(X(a), X(n + a));
    eta(a) = cplx(Y(a), Y(n + a));
  }
  cplx s = 0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) s += j.h(i, k) * xi(i) * std::conj(eta(k));
  return 2 * s.real();
}

}  // namespace hc
