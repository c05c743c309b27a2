#pragma once

#include "hc/jets.hpp"

namespace hc {

// (p,q)-form at a point under the 1/(p!q!) expansion convention.
// Coefficients are stored densely over all index tuples
// [i_1..i_p, j_1..j_q] and kept fully antisymmetric within each block.
struct PQForm {
  int n = 0, p = 0, q = 0;
  std::vector<cplx> c;

  PQForm() = default;
  PQForm(int n_, int p_, int q_);

  size_t size() const { return c.size(); }
  size_t offset(const int* idx) const {
    size_t o = 0;
    for (int m = 0; m < p + q; ++m) o = o * n + idx[m];
    return o;
  }
  cplx& at(const std::vector<int>& idx) { return c[offset(idx.data())]; }
  const cplx& at(const std::vector<int>& idx) const { return c[offset(idx.data())]; }

  PQForm& operator+=(const PQForm& o);
  PQForm& operator*=(cplx s);
  double max_abs() const;
};

// Real (1,1)-form alpha = i a_{i jbar} dz^i wedge dzbar^j with a Hermitian.
struct Herm11 {
  Mat a;
  Herm11() = default;
  explicit Herm11(Mat m) : a(std::move(m)) {}
  static Herm11 checked(const Mat& m, double tol = 1e-9);
  Herm11 operator+(const Herm11& o) const { return Herm11(a + o.a); }
  Herm11 operator-(const Herm11& o) const { return Herm11(a - o.a); }
  Herm11 operator*(double s) const { return Herm11(s * a); }
};

PQForm wedge(const PQForm& a, const PQForm& b);
cplx inner_product(const PQForm& a, const PQForm& b, const MetricJet2& j);
PQForm lefschetz_L(const PQForm& a, const MetricJet2& j);
PQForm lambda_contract(const PQForm& a, const MetricJet2& j);
double trace11(const Herm11& alpha, const MetricJet2& j);

// Complex conjugate form; swaps bidegree (p,q) -> (q,p).
PQForm conj_form(const PQForm& a);

// omega = i h_{i jbar} dz^i wedge dzbar^j as a PQForm.
PQForm omega_form(const MetricJet2& j);

// Lossless converters between Herm11 and the PQForm coefficients c = i a.
PQForm herm11_to_pqform(const Herm11& alpha);
Herm11 pqform_to_herm11(const PQForm& f, double tol = 1e-9);

// Exterior derivatives of omega assembled from the jet.
PQForm del_omega(const MetricJet2& j);       // (2,1)
PQForm dbar_omega(const MetricJet2& j);      // (1,2)
PQForm ddbar_omega(const MetricJet2& j);     // (2,2)

// del dbar of omega^k via the Leibniz expansion
// ddbar(omega^k) = k omega^{k-1} ddbar(omega) + k(k-1) omega^{k-2} del(omega) dbar(omega).
PQForm ddbar_omega_pow(const MetricJet2& j, int k);

PQForm form_power(const PQForm& a, int k);

// For a top-degree (n,n)-form: the scalar density lambda with a = lambda omega^n/n!.
cplx top_density(const PQForm& a, const MetricJet2& j);

}  // namespace hc
