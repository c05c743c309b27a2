#include "hc/forms.hpp"

#include <algorithm>
#include <cmath>

namespace hc {

namespace {

const cplx I(0, 1);

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// All ways to pick `take` slots out of `total`, with the shuffle sign of the
// permutation that moves the picked slots to the front (order preserved).
struct Shuffle {
  std::vector<int> pick, rest;
  int sign;
};

std::vector<Shuffle> shuffles(int total, int take) {
  std::vector<Shuffle> out;
  std::vector<int> idx(take);
  for (int i = 0; i < take; ++i) idx[i] = i;
  while (true) {
    Shuffle s;
    s.pick = idx;
    int inversions = 0;
    for (int m = 0; m < take; ++m) inversions += idx[m] - m;
    s.sign = (inversions % 2 == 0) ? 1 : -1;
    std::vector<bool> used(total, false);
    for (int v : idx) used[v] = true;
    for (int v = 0; v < total; ++v)
      if (!used[v]) s.rest.push_back(v);
    out.push_back(std::move(s));
    int m = take - 1;
    while (m >= 0 && idx[m] == total - take + m) --m;
    if (m < 0) break;
    ++idx[m];
    for (int r = m + 1; r < take; ++r) idx[r] = idx[r - 1] + 1;
  }
  return out;
}

// Apply out[.., i, ..] = sum_k M(i,k) in[.., k, ..] along one axis.
void axis_apply(std::vector<cplx>& v, int n, int rank, int axis, const Mat& M) {
  size_t outer = 1, inner = 1;
  for (int m = 0; m < axis; ++m) outer *= n;
  for (int m = axis + 1; m < rank; ++m) inner *= n;
  std::vector<cplx> tmp(n);
  for (size_t o = 0; o < outer; ++o)
    for (size_t in = 0; in < inner; ++in) {
      size_t base = o * n * inner + in;
      for (int i = 0; i < n; ++i) {
        cplx s = 0;
        for (int k = 0; k < n; ++k) s += M(i, k) * v[base + k * inner];
        tmp[i] = s;
      }
      for (int i = 0; i < n; ++i) v[base + i * inner] = tmp[i];
    }
}

}  // namespace

PQForm::PQForm(int n_, int p_, int q_) : n(n_), p(p_), q(q_) {
  if (p > n || q > n || p < 0 || q < 0) throw std::invalid_argument("bad bidegree");
  size_t sz = 1;
  for (int m = 0; m < p + q; ++m) sz *= n;
  c.assign(sz, cplx(0));
}

PQForm& PQForm::operator+=(const PQForm& o) {
  if (n != o.n || p != o.p || q != o.q) throw std::invalid_argument("bidegree mismatch");
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

PQForm& PQForm::operator*=(cplx s) {
  for (auto& x : c) x *= s;
  return *this;
}

double PQForm::max_abs() const {
  double m = 0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

Herm11 Herm11::checked(const Mat& m, double tol) {
  double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  double scale = 1 + m.cwiseAbs().maxCoeff();
  if (dev > tol * scale) throw std::runtime_error("(1,1)-form is not real");
  return Herm11(0.5 * (m + m.adjoint().eval()));
}

PQForm wedge(const PQForm& a, const PQForm& b) {
  if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
  const int n = a.n;
  const int P = a.p + b.p, Q = a.q + b.q;
  if (P > n || Q > n) throw std::invalid_argument("degree overflow in wedge");
  PQForm r(n, P, Q);
  const auto hsh = shuffles(P, a.p);
  const auto ash = shuffles(Q, a.q);
  const int cross = ((a.q * b.p) % 2 == 0) ? 1 : -1;
  std::vector<int> idx(P + Q, 0), ia(a.p + a.q), ib(b.p + b.q);
  const size_t total = r.size();
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (int m = P + Q - 1; m >= 0; --m) {
      idx[m] = static_cast<int>(rem % n);
      rem /= n;
    }
    cplx sum = 0;
    for (const auto& hs : hsh) {
      for (const auto& as : ash) {
        for (int m = 0; m < a.p; ++m) ia[m] = idx[hs.pick[m]];
        for (int m = 0; m < a.q; ++m) ia[a.p + m] = idx[P + as.pick[m]];
        for (int m = 0; m < b.p; ++m) ib[m] = idx[hs.rest[m]];
        for (int m = 0; m < b.q; ++m) ib[b.p + m] = idx[P + as.rest[m]];
        double sgn = hs.sign * as.sign;
        sum += sgn * a.c[a.offset(ia.data())] * b.c[b.offset(ib.data())];
      }
    }
    r.c[flat] = double(cross) * sum;
  }
  return r;
}

cplx inner_product(const PQForm& a, const PQForm& b, const MetricJet2& j) {
  if (a.n != b.n || a.p != b.p || a.q != b.q) throw std::invalid_argument("bidegree mismatch");
  const int n = a.n, rank = a.p + a.q;
  const Mat hinv = inverse_metric(j);
  std::vector<cplx> t(b.c.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = std::conj(b.c[i]);
  const Mat hinvT = hinv.transpose();
  for (int m = 0; m < a.p; ++m) axis_apply(t, n, rank, m, hinv);
  for (int m = 0; m < a.q; ++m) axis_apply(t, n, rank, a.p + m, hinvT);
  cplx s = 0;
  for (size_t i = 0; i < t.size(); ++i) s += a.c[i] * t[i];
  return s / (factorial(a.p) * factorial(a.q));
}

PQForm lefschetz_L(const PQForm& a, const MetricJet2& j) { return wedge(omega_form(j), a); }

PQForm lambda_contract(const PQForm& a, const MetricJet2& j) {
  if (a.p < 1 || a.q < 1) throw std::invalid_argument("degree underflow in lambda_contract");
  const int n = a.n;
  const Mat hinv = inverse_metric(j);
  PQForm r(n, a.p - 1, a.q - 1);
  const cplx factor = (a.p % 2 == 1) ? cplx(0, -1) : cplx(0, 1);
  std::vector<int> out(r.p + r.q, 0), in(a.p + a.q);
  const size_t total = r.size();
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (int m = r.p + r.q - 1; m >= 0; --m) {
      out[m] = static_cast<int>(rem % n);
      rem /= n;
    }
    cplx sum = 0;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        in[0] = k;
        for (int m = 0; m < r.p; ++m) in[1 + m] = out[m];
        in[a.p] = l;
        for (int m = 0; m < r.q; ++m) in[a.p + 1 + m] = out[r.p + m];
        sum += hinv(k, l) * a.c[a.offset(in.data())];
      }
    r.c[flat] = factor * sum;
  }
  return r;
}

double trace11(const Herm11& alpha, const MetricJet2& j) {
  const Mat hinv = inverse_metric(j);
  cplx t = 0;
  for (int i = 0; i < j.n; ++i)
    for (int k = 0; k < j.n; ++k) t += hinv(i, k) * alpha.a(i, k);
  if (std::abs(t.imag()) > 1e-10 * (1 + std::abs(t)))
    throw std::runtime_error("trace of real (1,1)-form is not real");
  return t.real();
}

PQForm conj_form(const PQForm& a) {
  PQForm r(a.n, a.q, a.p);
  const int n = a.n;
  const double sgn = ((a.p * a.q) % 2 == 0) ? 1 : -1;
  std::vector<int> out(r.p + r.q), in(a.p + a.q);
  const size_t total = r.size();
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (int m = r.p + r.q - 1; m >= 0; --m) {
      out[m] = static_cast<int>(rem % n);
      rem /= n;
    }
    for (int m = 0; m < a.p; ++m) in[m] = out[r.p + m];
    for (int m = 0; m < a.q; ++m) in[a.p + m] = out[m];
    r.c[flat] = sgn * std::conj(a.c[a.offset(in.data())]);
  }
  return r;
}

PQForm omega_form(const MetricJet2& j) {
  PQForm w(j.n, 1, 1);
  for (int i = 0; i < j.n; ++i)
    for (int k = 0; k < j.n; ++k) w.c[static_cast<size_t>(i) * j.n + k] = I * j.h(i, k);
  return w;
}

PQForm herm11_to_pqform(const Herm11& alpha) {
  const int n = static_cast<int>(alpha.a.rows());
  PQForm f(n, 1, 1);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) f.c[static_cast<size_t>(i) * n + k] = I * alpha.a(i, k);
  return f;
}

Herm11 pqform_to_herm11(const PQForm& f, double tol) {
  if (f.p != 1 || f.q != 1) throw std::invalid_argument("not a (1,1)-form");
  Mat m(f.n, f.n);
  for (int i = 0; i < f.n; ++i)
    for (int k = 0; k < f.n; ++k) m(i, k) = -I * f.c[static_cast<size_t>(i) * f.n + k];
  return Herm11::checked(m, tol);
}

PQForm del_omega(const MetricJet2& j) {
  const int n = j.n;
  PQForm r(n, 2, 1);
  std::vector<int> idx(3);
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        idx[0] = p; idx[1] = i; idx[2] = k;
        r.at(idx) = I * (j.dh(p, i, k) - j.dh(i, p, k));
      }
  return r;
}

PQForm dbar_omega(const MetricJet2& j) {
  const int n = j.n;
  PQForm r(n, 1, 2);
  std::vector<int> idx(3);
  for (int i = 0; i < n; ++i)
    for (int q = 0; q < n; ++q)
      for (int k = 0; k < n; ++k) {
        idx[0] = i; idx[1] = q; idx[2] = k;
        r.at(idx) = -I * (j.dbar_h(q, i, k) - j.dbar_h(k, i, q));
      }
  return r;
}

PQForm ddbar_omega(const MetricJet2& j) {
  const int n = j.n;
  PQForm r(n, 2, 2);
  std::vector<int> idx(4);
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < n; ++i)
      for (int q = 0; q < n; ++q)
        for (int k = 0; k < n; ++k) {
          idx[0] = p; idx[1] = i; idx[2] = q; idx[3] = k;
          r.at(idx) = -I * (j.ddbar_h(p, q, i, k) - j.ddbar_h(i, q, p, k) -
                            j.ddbar_h(p, k, i, q) + j.ddbar_h(i, k, p, q));
        }
  return r;
}

PQForm form_power(const PQForm& a, int k) {
  if (k < 0) throw std::invalid_argument("negative form power");
  PQForm r(a.n, 0, 0);
  r.c[0] = 1;
  for (int m = 0; m < k; ++m) r = wedge(r, a);
  return r;
}

PQForm ddbar_omega_pow(const MetricJet2& j, int k) {
  if (k < 1) throw std::invalid_argument("ddbar_omega_pow needs k >= 1");
  PQForm dd = ddbar_omega(j);
  if (k == 1) return dd;
  const PQForm w = omega_form(j);
  PQForm r = wedge(form_power(w, k - 1), dd);
  r *= cplx(k);
  PQForm cross = wedge(form_power(w, k - 2), wedge(del_omega(j), dbar_omega(j)));
  cross *= cplx(k * (k - 1));
  r += cross;
  return r;
}

cplx top_density(const PQForm& a, const MetricJet2& j) {
  if (a.p != a.n || a.q != a.n) throw std::invalid_argument("not a top-degree form");
  PQForm w = form_power(omega_form(j), j.n);
  w *= cplx(1.0 / factorial(j.n));
  std::vector<int> idx(2 * j.n);
  for (int m = 0; m < j.n; ++m) {
    idx[m] = m;
    idx[j.n + m] = m;
  }
  cplx denom = w.at(idx);
  if (std::abs(denom) == 0) throw std::runtime_error("degenerate volume form");
  return a.at(idx) / denom;
}

}  // namespace hc
