#include "hc/verify.hpp"

#include <cmath>

namespace hc {

namespace {

const cplx I(0, 1);

double mat_residual(const Mat& lhs, const Mat& rhs) {
  return (lhs - rhs).cwiseAbs().maxCoeff() / (1 + rhs.cwiseAbs().maxCoeff());
}

double scalar_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / (1 + std::abs(rhs));
}

double form_residual(const PQForm& lhs, const PQForm& rhs) {
  double d = 0, scale = 0;
  for (size_t m = 0; m < lhs.c.size(); ++m) {
    d = std::max(d, std::abs(lhs.c[m] - rhs.c[m]));
    scale = std::max(scale, std::abs(rhs.c[m]));
  }
  return d / (1 + scale);
}

}  // namespace

double default_identity_tol(JetMode mode) {
  return mode == JetMode::analytic ? 1e-8 : 1e-4;
}

std::vector<IdentityResult> identity_suite(const MetricSpec& spec, const ChartPoint& p,
                                           double tol) {
  if (tol <= 0) tol = default_identity_tol(spec.mode);
  const MetricJet2 j = evaluate_jet(spec, p);
  const int n = j.n;
  const Mat hinv = inverse_metric(j);
  const double herm_tol = spec.mode == JetMode::analytic ? 1e-8 : 1e-3;

  const RicciSet R = ricci_set(j, spec.mode);
  const ScalarSet S = scalar_set(j, spec.mode);
  const Herm11 cd = codiff_second_order(j);
  const Torsion t = torsion(j);
  const TorsionProducts tp = torsion_products(j, t);
  const Mat& C = tp.circ.a;
  const Mat& B = tp.boxdot.a;

  // iLambda(del dbar omega) as a real (1,1)-form
  const PQForm lam_pq = lambda_contract(ddbar_omega(j), j);
  Mat lam(n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) lam(i, jj) = lam_pq.at({i, jj});
  const Herm11 LH = Herm11::checked(lam, herm_tol);

  const PQForm ds = dstar_omega(j);
  const double dstar2 = inner_product(ds, ds, j).real();
  const CVec v = sharp(ds, j);
  const Mat tv = torsion_apply_vector(t, v, j);
  const Mat a = -I * tv;
  const Mat tv_sym = 0.5 * (a + a.adjoint());

  std::vector<IdentityResult> out;
  auto add = [&](const std::string& name, double res, double local_tol) {
    out.push_back({name, res, local_tol, res < local_tol});
  };
  auto addm = [&](const std::string& name, const Herm11& lhs, const Herm11& rhs) {
    add(name, mat_residual(lhs.a, rhs.a), tol);
  };

  addm("lc-ricci-1", R.lc1, R.chern1 - cd);
  addm("lc-ricci-2", R.lc2, R.chern1 - cd - Herm11(C) * 0.25 + Herm11(B) * 0.25);
  addm("hermitian-ricci", R.ricH, R.chern1 - cd - Herm11(C) * 0.25);
  addm("chern-ricci-2", R.chern2, R.chern1 - LH - cd * 2.0 + Herm11(B));
  addm("riemann-ricci-11",
       R.scrRic, R.chern1 - LH - cd + Herm11((2.0 * B + C) / 4.0) + Herm11(tv_sym));
  addm("ricci-sum", R.lc1 + R.lc2, R.chern1 + R.chern2 + LH - Herm11((3.0 * B + C) / 4.0));

  add("torsion-trace",
      scalar_residual(tp.norm_sq, trace11(LH, j) + 2 * trace11(cd, j)), tol);

  add("scalar-s",
      scalar_residual(S.s, 2 * S.s_C + 2 * trace11(cd, j) - 2 * dstar2 - 0.5 * tp.norm_sq),
      tol);
  add("scalar-s-lc", scalar_residual(S.s_LC, S.s_C - trace11(cd, j)), tol);
  add("scalar-s-h", scalar_residual(S.s_H, S.s_LC - 0.25 * tp.norm_sq), tol);
  add("scalar-s-r", scalar_residual(S.s_R, S.s_C - 0.5 * dstar2 - 0.25 * tp.norm_sq), tol);
  add("scalar-4sR-2sH", scalar_residual(S.s, 4 * S.s_R - 2 * S.s_H), tol);

  {
    PQForm rhs = lambda_contract(dbar_omega(j), j);
    rhs *= -I;
    add("dstar-lambda", form_residual(ds, rhs), tol);
    PQForm rhs2 = lambda_contract(del_omega(j), j);
    rhs2 *= I;
    add("dbarstar-lambda", form_residual(dbar_star_omega(j), rhs2), tol);
  }

  {
    cplx tr = 0;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) tr += hinv(i, jj) * (-I * tv(i, jj));
    add("torsion-vector-trace", scalar_residual(tr.real(), -dstar2), tol);
  }

  const double sym_tol = spec.mode == JetMode::analytic ? 1e-9 : tol;
  {
    const Curv4 rc = riemann_complexified(j);
    const Tensor4 H = riemann_two_anti(j);
    double bianchi = 0, pair = 0, scale = 0;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            scale = std::max(scale, std::abs(rc.r(i, jj, k, l)));
            bianchi = std::max(
                bianchi, std::abs(rc.r(i, jj, k, l) + H(i, k, l, jj) - rc.r(i, l, k, jj)));
            pair = std::max(pair, std::abs(rc.r(i, jj, k, l) - rc.r(k, l, i, jj)));
          }
    add("bianchi", bianchi / (1 + scale), sym_tol);
    add("pair-symmetry", pair / (1 + scale), sym_tol);
  }
  {
    const Curv4 th = chern_curvature(j);
    double real_res = 0, scale = 0;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            scale = std::max(scale, std::abs(th.r(i, jj, k, l)));
            real_res = std::max(
                real_res, std::abs(th.r(i, jj, k, l) - std::conj(th.r(jj, i, l, k))));
          }
    add("chern-realness", real_res / (1 + scale), sym_tol);
  }

  return out;
}

double gauduchon_pointwise_residual(const MetricSpec& spec, const ChartPoint& p) {
  const MetricJet2 j = evaluate_jet(spec, p);
  const ScalarSet S = scalar_set(j, spec.mode);
  const TorsionProducts tp = torsion_products(j, torsion(j));
  return scalar_residual(S.s, 2 * S.s_C - 0.5 * tp.norm_sq);
}

double conformal_codiff_residual(const MetricSpec& base, const RealFn& f, const ChartPoint& p) {
  const MetricSpec conf = conformal(base, f);
  const MetricJet2 jb = evaluate_jet(base, p);
  const MetricJet2 jc = evaluate_jet(conf, p);
  const int n = jb.n;
  PQForm rhs = dbar_star_omega(jb);
  const RealFn::Jet fv = f.jet(p);
  for (int i = 0; i < n; ++i) rhs.c[i] += cplx(0, n - 1) * fv.grad(i);
  return form_residual(dbar_star_omega(jc), rhs);
}

bool all_pass(const std::vector<IdentityResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace hc
