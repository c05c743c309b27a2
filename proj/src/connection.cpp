#include "hc/connection.hpp"

namespace hc {

namespace {
const cplx I(0, 1);
}

Christoffels lc_christoffels(const MetricJet2& j) {
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  Christoffels c;
  c.n = n;
  c.gamma = Tensor3(n);
  c.gamma_bar = Tensor3(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int m = 0; m < n; ++m) {
        cplx g = 0, gb = 0;
        for (int l = 0; l < n; ++l) {
          g += hinv(k, l) * (j.dh(i, m, l) + j.dh(m, i, l));
          // Gamma^k_{ibar m} = (1/2) h^{k lbar}(dbar_i h_{m lbar} - dbar_l h_{m ibar})
          gb += hinv(k, l) * (j.dbar_h(i, m, l) - j.dbar_h(l, m, i));
        }
        c.gamma(k, i, m) = 0.5 * g;
        c.gamma_bar(k, i, m) = 0.5 * gb;
      }
  return c;
}

Torsion torsion(const MetricJet2& j) {
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  Torsion t;
  t.n = n;
  t.t = Tensor3(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int m = 0; m < n; ++m) {
        cplx s = 0;
        for (int l = 0; l < n; ++l) s += hinv(k, l) * (j.dh(i, m, l) - j.dh(m, i, l));
        t.t(k, i, m) = s;
      }
  return t;
}

TorsionProducts torsion_products(const MetricJet2& j, const Torsion& t) {
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  Mat box = Mat::Zero(n, n), circ = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      cplx b = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
              b += hinv(p, q) * j.h(k, l) * t.t(k, i, p) * std::conj(t.t(l, jj, q));
      box(i, jj) = b;
      cplx c = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int s = 0; s < n; ++s)
            for (int u = 0; u < n; ++u)
              for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                  c += hinv(p, q) * hinv(s, u) * j.h(k, jj) * j.h(i, l) * t.t(k, s, p) *
                       std::conj(t.t(l, u, q));
      circ(i, jj) = c;
    }
  TorsionProducts r;
  r.boxdot = Herm11::checked(box, 1e-8);
  r.circ = Herm11::checked(circ, 1e-8);
  double tb = trace11(r.boxdot, j);
  double tc = trace11(r.circ, j);
  if (std::abs(tb - tc) > 1e-8 * (1 + std::abs(tb)))
    throw std::runtime_error("torsion product traces disagree");
  r.norm_sq = 0.5 * (tb + tc);
  return r;
}

PQForm dstar_omega(const MetricJet2& j) {
  const int n = j.n;
  const Christoffels c = lc_christoffels(j);
  PQForm f(n, 0, 1);
  for (int jj = 0; jj < n; ++jj) {
    cplx tr = 0;
    for (int k = 0; k < n; ++k) tr += c.gamma_bar(k, jj, k);
    f.c[jj] = -2.0 * I * tr;
  }
  return f;
}

PQForm dbar_star_omega(const MetricJet2& j) { return conj_form(dstar_omega(j)); }

Herm11 codiff_second_order(const MetricJet2& j) {
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  // dhinv(p,k,l) = d_p h^{k lbar}
  Tensor3 dhinv(n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        cplx s = 0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) s += hinv(k, b) * j.dh(p, a, b) * hinv(a, l);
        dhinv(p, k, l) = -s;
      }
  // c(i,jj) = d_i f_{jbar} with f_{jbar} = -2i Gamma^k_{jbar k}
  //         = -i (h^{k lbar} dbar_j h_{k lbar} - h^{k lbar} dbar_l h_{k jbar}).
  Mat c(n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      cplx s = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          s += dhinv(i, k, l) * j.dbar_h(jj, k, l) + hinv(k, l) * j.ddbar_h(i, jj, k, l);
          s -= dhinv(i, k, l) * j.dbar_h(l, k, jj) + hinv(k, l) * j.ddbar_h(i, l, k, jj);
        }
      c(i, jj) = -I * s;
    }
  // (1/2)(ddstar + dbar dbarstar) omega has raw coefficients (c - c^dagger)/2;
  // as a Herm11 that is -i (c - c^dagger)/2.
  Mat m = -I * 0.5 * (c - c.adjoint().eval());
  return Herm11::checked(m, 1e-8);
}

Herm11 codiff_second_order(const MetricSpec& spec, const ChartPoint& p) {
  return codiff_second_order(evaluate_jet(spec, p));
}

Mat torsion_apply_vector(const Torsion& t, const CVec& v, const MetricJet2& j) {
  const int n = j.n;
  Mat c = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      cplx s = 0;
      for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) s += j.h(k, jj) * t.t(k, p, i) * v(p);
      c(i, jj) = s;
    }
  return c;
}

CVec sharp(const PQForm& f, const MetricJet2& j) {
  if (f.p != 0 || f.q != 1) throw std::invalid_argument("sharp expects a (0,1)-form");
  const Mat hinv = inverse_metric(j);
  CVec v = CVec::Zero(j.n);
  for (int i = 0; i < j.n; ++i) {
    cplx s = 0;
    for (int k = 0; k < j.n; ++k) s += hinv(i, k) * f.c[k];
    v(i) = s;
  }
  return v;
}

}  // namespace hc
