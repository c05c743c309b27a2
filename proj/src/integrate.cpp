#include "hc/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "hc/curvature.hpp"

namespace hc {

namespace {

double sphere_area(int dim2n) {
  // surface measure of the unit sphere S^{2n-1} in R^{2n}: 2 pi^n / (n-1)!
  const int n = dim2n / 2;
  double a = 2.0 * std::pow(std::numbers::pi, n);
  for (int k = 1; k < n; ++k) a /= k;
  return a;
}

struct PartitionSums {
  std::vector<double> sum, sumsq;
  long long count = 0;
};

ChartPoint draw_point(const MetricSpec& spec, std::mt19937_64& rng, double r_pow) {
  if (spec.domain == Domain::torus_cell) {
    std::uniform_real_distribution<double> uni(0, 1);
    std::vector<cplx> z(spec.n);
    for (int i = 0; i < spec.n; ++i) z[i] = cplx(uni(rng), uni(rng));
    return ChartPoint(std::move(z));
  }
  std::normal_distribution<double> gauss(0, 1);
  std::uniform_real_distribution<double> uni(0, 1);
  const int n = spec.n;
  std::vector<cplx> z(n);
  double norm2 = 0;
  for (int i = 0; i < n; ++i) {
    z[i] = cplx(gauss(rng), gauss(rng));
    norm2 += std::norm(z[i]);
  }
  const double r = std::pow(1.0 + r_pow * uni(rng), 1.0 / (2 * n));
  const double scale = r / std::sqrt(norm2);
  for (auto& c : z) c *= scale;
  return ChartPoint(std::move(z));
}

}  // namespace

std::vector<IntegralEstimate> integrate_many(const MetricSpec& spec,
                                             const std::vector<PointFn>& fns,
                                             const MCOptions& opt) {
  if (opt.samples <= 1 || opt.partitions < 1) throw std::invalid_argument("bad MC options");
  const int n = spec.n;
  const int nf = static_cast<int>(fns.size());
  const double r_pow = std::pow(2.0, 2 * n) - 1.0;
  // constant importance weight: uniform sphere direction times radial density
  // proportional to r^{2n-1} on [1,2) leaves the Lebesgue Jacobian constant
  const double weight = spec.domain == Domain::torus_cell
                            ? 1.0
                            : sphere_area(2 * n) * r_pow / (2.0 * n);
  const double vol_factor = std::pow(2.0, n);

  const int P = opt.partitions;
  std::vector<PartitionSums> parts(P);
  const long long base = opt.samples / P, extra = opt.samples % P;

  auto run_partition = [&](int pi) {
    PartitionSums ps;
    ps.sum.assign(nf, 0.0);
    ps.sumsq.assign(nf, 0.0);
    ps.count = base + (pi < extra ? 1 : 0);
    std::seed_seq sq{static_cast<std::uint32_t>(opt.seed),
                     static_cast<std::uint32_t>(opt.seed >> 32),
                     static_cast<std::uint32_t>(pi)};
    std::mt19937_64 rng(sq);
    for (long long s = 0; s < ps.count; ++s) {
      const ChartPoint p = draw_point(spec, rng, r_pow);
      const MetricJet2 j = evaluate_jet(spec, p);
      const double dens = j.h.determinant().real() * vol_factor * weight;
      for (int k = 0; k < nf; ++k) {
        const double v = fns[k](j, p) * dens;
        ps.sum[k] += v;
        ps.sumsq[k] += v * v;
      }
    }
    parts[pi] = std::move(ps);
  };

  const unsigned T = std::max(1u, std::thread::hardware_concurrency());
  if (T <= 1) {
    for (int pi = 0; pi < P; ++pi) run_partition(pi);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < T; ++t)
      pool.emplace_back([&, t] {
        for (int pi = static_cast<int>(t); pi < P; pi += static_cast<int>(T)) run_partition(pi);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<IntegralEstimate> out(nf);
  for (int k = 0; k < nf; ++k) {
    double sum = 0, sumsq = 0;
    long long cnt = 0;
    for (int pi = 0; pi < P; ++pi) {
      sum += parts[pi].sum[k];
      sumsq += parts[pi].sumsq[k];
      cnt += parts[pi].count;
    }
    const double mean = sum / cnt;
    const double var = std::max(0.0, sumsq / cnt - mean * mean);
    out[k].value = mean;
    out[k].std_err = std::sqrt(var / cnt);
    out[k].samples = cnt;
    out[k].seed = opt.seed;
  }
  return out;
}

IntegralEstimate hopf_integrate(const MetricSpec& spec, const PointFn& f, const MCOptions& opt) {
  return integrate_many(spec, {f}, opt)[0];
}

namespace {

ResidualReport make_report(const std::string& name, const IntegralEstimate& lhs,
                           const IntegralEstimate& rhs) {
  ResidualReport r;
  r.identity = name;
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  r.stderr_lhs = lhs.std_err;
  r.stderr_rhs = rhs.std_err;
  const double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
  r.residual = scale > 1e-9 ? std::abs(r.lhs - r.rhs) / scale : std::abs(r.lhs - r.rhs);
  r.samples = lhs.samples;
  r.seed = lhs.seed;
  return r;
}

double norm_sq_diff(const MetricJet2& j) {
  const PQForm dw = del_omega(j);
  const PQForm ds = dstar_omega(j);
  return inner_product(dw, dw, j).real() - inner_product(ds, ds, j).real();
}

}  // namespace

ResidualReport check_integral_identity_999(const MetricSpec& spec, const MCOptions& opt) {
  const int n = spec.n;
  if (n < 2) throw std::invalid_argument("identity 999 needs n >= 2");
  double fact = 1;
  for (int k = 2; k <= n - 2; ++k) fact *= k;
  const double inv_fact = 1.0 / fact;
  PointFn lhs = [n, inv_fact](const MetricJet2& j, const ChartPoint&) {
    PQForm t = wedge(ddbar_omega(j), form_power(omega_form(j), n - 2));
    return (cplx(0, 1) * top_density(t, j)).real() * inv_fact;
  };
  PointFn rhs = [](const MetricJet2& j, const ChartPoint&) { return norm_sq_diff(j); };
  auto est = integrate_many(spec, {lhs, rhs}, opt);
  return make_report("999", est[0], est[1]);
}

ResidualReport check_k_gauduchon_identity(const MetricSpec& spec, int k, const MCOptions& opt) {
  const int n = spec.n;
  if (k < 1 || k > n - 1) throw std::invalid_argument("k out of range");
  if (n < 3) throw std::invalid_argument("k-Gauduchon identity needs n >= 3");
  double fact = 1;
  for (int m = 2; m <= n - 3; ++m) fact *= m;
  const double coeff = fact * k * (n - k - 1);
  PointFn lhs = [n, k](const MetricJet2& j, const ChartPoint&) {
    PQForm t = wedge(form_power(omega_form(j), n - k - 1), ddbar_omega_pow(j, k));
    return (cplx(0, 1) * top_density(t, j)).real();
  };
  PointFn rhs = [coeff](const MetricJet2& j, const ChartPoint&) {
    return coeff * norm_sq_diff(j);
  };
  auto est = integrate_many(spec, {lhs, rhs}, opt);
  return make_report("key-4:k=" + std::to_string(k), est[0], est[1]);
}

ResidualReport check_integral_identity_89(const MetricSpec& spec, const MCOptions& opt) {
  const int n = spec.n;
  if (n < 3) throw std::invalid_argument("identity 89 needs n >= 3");
  double fact = 1;
  for (int m = 2; m <= n - 3; ++m) fact *= m;
  const double inv_fact = 1.0 / fact;
  PointFn lhs = [n, inv_fact](const MetricJet2& j, const ChartPoint&) {
    PQForm t = wedge(wedge(del_omega(j), dbar_omega(j)), form_power(omega_form(j), n - 3));
    return (cplx(0, 1) * top_density(t, j)).real() * inv_fact;
  };
  PointFn rhs = [](const MetricJet2& j, const ChartPoint&) { return -norm_sq_diff(j); };
  auto est = integrate_many(spec, {lhs, rhs}, opt);
  return make_report("89", est[0], est[1]);
}

BalancedReport balanced_diagnostic(const MetricSpec& spec, const MCOptions& opt) {
  const JetMode mode = spec.mode;
  auto scal = [mode](const MetricJet2& j) { return scalar_set(j, mode); };
  std::vector<PointFn> fns = {
      [scal](const MetricJet2& j, const ChartPoint&) { return scal(j).s; },
      [scal](const MetricJet2& j, const ChartPoint&) { return scal(j).s_C; },
      [scal](const MetricJet2& j, const ChartPoint&) { return scal(j).s_LC; },
      [scal](const MetricJet2& j, const ChartPoint&) { return scal(j).s_H; },
      [scal](const MetricJet2& j, const ChartPoint&) { return scal(j).s_R; },
      [](const MetricJet2& j, const ChartPoint&) {
        return torsion_products(j, torsion(j)).norm_sq;
      }};
  auto est = integrate_many(spec, fns, opt);
  BalancedReport r;
  r.total_s = est[0];
  r.total_s_C = est[1];
  r.total_s_LC = est[2];
  r.total_s_H = est[3];
  r.total_s_R = est[4];
  r.total_torsion_sq = est[5];
  const double denom_scale = std::abs(r.total_s_LC.value);
  r.ratio_C_over_LC = denom_scale > 3 * r.total_s_LC.std_err + 1e-12
                          ? r.total_s_C.value / r.total_s_LC.value
                          : std::numeric_limits<double>::quiet_NaN();
  const double lhs = r.total_s.value;
  const double rhs = 2 * r.total_s_C.value - 0.5 * r.total_torsion_sq.value;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.gauduchon_residual = scale > 1e-9 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs);
  const double diff = std::abs(r.total_s_C.value - r.total_s_LC.value);
  const double sigma = std::hypot(r.total_s_C.std_err, r.total_s_LC.std_err);
  r.balanced = diff <= 3 * sigma + 1e-9;
  return r;
}

}  // namespace hc
