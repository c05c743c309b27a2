#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "CLI11.hpp"
#include "json.hpp"

#include "hc/integrate.hpp"
#include "hc/verify.hpp"

using nlohmann::json;

namespace {

hc::cplx parse_component(std::string tok) {
  // accepts "1", "-0.5", "1+2i", "0.5-0.25i", "2i", "-i"
  if (tok.empty()) throw std::invalid_argument("empty point component");
  if (tok.back() != 'i') return hc::cplx(std::stod(tok), 0);
  tok.pop_back();
  size_t split = tok.find_last_of("+-");
  if (split == std::string::npos || split == 0 ||
      tok[split - 1] == 'e' || tok[split - 1] == 'E') {
    if (tok.empty() || tok == "+") return hc::cplx(0, 1);
    if (tok == "-") return hc::cplx(0, -1);
    return hc::cplx(0, std::stod(tok));
  }
  const double re = std::stod(tok.substr(0, split));
  std::string im = tok.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return hc::cplx(re, std::stod(im));
}

hc::ChartPoint parse_point(const std::string& s, int n) {
  std::vector<hc::cplx> z;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) z.push_back(parse_component(tok));
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("point has wrong dimension for this metric");
  return hc::ChartPoint(std::move(z));
}

json mat_json(const hc::Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(row);
  }
  return rows;
}

json report_json(const hc::MetricSpec& spec, const hc::ChartPoint& p, double tol) {
  const hc::MetricJet2 j = hc::evaluate_jet(spec, p);
  const hc::RicciSet R = hc::ricci_set(j, spec.mode);
  const hc::ScalarSet S = hc::scalar_set(j, spec.mode);
  const double tnorm = hc::torsion_products(j, hc::torsion(j)).norm_sq;
  const auto suite = hc::identity_suite(spec, p, tol);

  json point = json::array();
  for (const auto& z : p.z) point.push_back({z.real(), z.imag()});

  json ids = json::object();
  bool all_ok = true;
  for (const auto& r : suite) {
    ids[r.name] = {{"residual", r.residual}, {"tol", r.tol}, {"pass", r.pass}};
    all_ok = all_ok && r.pass;
  }
  return {{"schema", "hcurv-report/1"},
          {"metric", spec.name},
          {"params", spec.params},
          {"mode", spec.mode == hc::JetMode::analytic ? "analytic" : "numeric"},
          {"point", point},
          {"ricci",
           {{"chern1", mat_json(R.chern1.a)},
            {"chern2", mat_json(R.chern2.a)},
            {"lc1", mat_json(R.lc1.a)},
            {"lc2", mat_json(R.lc2.a)},
            {"hermitian", mat_json(R.ricH.a)},
            {"riemann11", mat_json(R.scrRic.a)}}},
          {"scalars",
           {{"s", S.s},
            {"s_R", S.s_R},
            {"s_H", S.s_H},
            {"s_LC", S.s_LC},
            {"s_C", S.s_C},
            {"s_star", S.s_star}}},
          {"torsion_norm_sq", tnorm},
          {"identities", ids},
          {"pass", all_ok}};
}

void print_report_table(const json& r) {
  std::printf("metric: %s  mode: %s\n", r["metric"].get<std::string>().c_str(),
              r["mode"].get<std::string>().c_str());
  const auto& s = r["scalars"];
  std::printf("scalars: s=%.10g  s_R=%.10g  s_H=%.10g  s_LC=%.10g  s_C=%.10g  s*=%.10g\n",
              s["s"].get<double>(), s["s_R"].get<double>(), s["s_H"].get<double>(),
              s["s_LC"].get<double>(), s["s_C"].get<double>(), s["s_star"].get<double>());
  std::printf("torsion_norm_sq: %.10g\n", r["torsion_norm_sq"].get<double>());
  std::printf("%-24s %-14s %-10s %s\n", "identity", "residual", "tol", "pass");
  for (const auto& [name, v] : r["identities"].items())
    std::printf("%-24s %-14.3e %-10.0e %s\n", name.c_str(), v["residual"].get<double>(),
                v["tol"].get<double>(), v["pass"].get<bool>() ? "yes" : "NO");
}

json residual_json(const hc::ResidualReport& r) {
  return {{"identity", r.identity}, {"lhs", r.lhs},
          {"rhs", r.rhs},           {"stderr_lhs", r.stderr_lhs},
          {"stderr_rhs", r.stderr_rhs}, {"residual", r.residual},
          {"samples", r.samples},   {"seed", r.seed}};
}

double hopf_exact_volume(int n, double lambda) {
  double sphere = 2.0 * std::pow(std::numbers::pi, n);
  for (int k = 1; k < n; ++k) sphere /= k;
  return std::pow(8.0, n) * std::pow(1 + lambda, n - 1) * sphere * std::numbers::ln2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature engine for Hermitian metrics"};
  app.require_subcommand(1);

  std::string metric_id, point_str = "1,0", mode_str = "analytic";
  double tol = 0;
  bool as_json = false, as_table = false;

  auto* rep = app.add_subcommand("report", "Curvature report at a point");
  rep->add_option("metric", metric_id)->required();
  rep->add_option("--point", point_str);
  rep->add_option("--mode", mode_str)->check(CLI::IsMember({"analytic", "numeric"}));
  rep->add_option("--tol", tol);
  rep->add_flag("--json", as_json);
  rep->add_flag("--table", as_table);

  int npoints = 100;
  std::uint64_t seed = 20240814;
  auto* ver = app.add_subcommand("verify", "Identity suite at random points");
  ver->add_option("metric", metric_id)->required();
  ver->add_option("--points", npoints);
  ver->add_option("--seed", seed);
  ver->add_option("--tol", tol);
  ver->add_option("--mode", mode_str)->check(CLI::IsMember({"analytic", "numeric"}));

  int scan_n = 2;
  std::string csv_path;
  std::vector<double> lambdas;
  auto* scan = app.add_subcommand("scan-lambda", "Scalar curvatures across the metric family");
  scan->add_option("--n", scan_n)->check(CLI::PositiveNumber);
  scan->add_option("--csv", csv_path);
  scan->add_option("--lambda", lambdas);

  std::string identity = "volume";
  long long samples = 1000000;
  int partitions = 256, kpar = 1;
  double itol = 0.02;
  auto* integ = app.add_subcommand("integrate", "Monte Carlo integral identities");
  integ->add_option("metric", metric_id)->required();
  integ->add_option("identity", identity)
      ->check(CLI::IsMember({"volume", "999", "89", "key-4", "balanced-diagnostic"}));
  integ->add_option("--samples", samples);
  integ->add_option("--seed", seed);
  integ->add_option("--partitions", partitions);
  integ->add_option("--k", kpar);
  integ->add_option("--tol", itol);

  auto* cat = app.add_subcommand("catalog", "List catalog metric ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (cat->parsed()) {
      json out = {{"schema", "hcurv-catalog/1"}, {"metrics", hc::catalog_names()}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (rep->parsed()) {
      hc::MetricSpec spec = hc::parse_metric_id(metric_id);
      if (mode_str == "numeric") spec = spec.with_mode(hc::JetMode::numeric);
      const hc::ChartPoint p = parse_point(point_str, spec.n);
      const json r = report_json(spec, p, tol);
      if (as_json || !as_table)
        std::cout << r.dump(2) << "\n";
      else
        print_report_table(r);
      return r["pass"].get<bool>() ? 0 : 1;
    }

    if (ver->parsed()) {
      hc::MetricSpec spec = hc::parse_metric_id(metric_id);
      if (mode_str == "numeric") spec = spec.with_mode(hc::JetMode::numeric);
      std::mt19937_64 rng(seed);
      std::map<std::string, double> worst;
      bool all_ok = true;
      for (int i = 0; i < npoints; ++i) {
        const hc::ChartPoint p = hc::random_chart_point(spec, rng);
        for (const auto& r : hc::identity_suite(spec, p, tol)) {
          worst[r.name] = std::max(worst[r.name], r.residual);
          all_ok = all_ok && r.pass;
        }
      }
      json out = {{"schema", "hcurv-verify/1"},
                  {"metric", metric_id},
                  {"points", npoints},
                  {"seed", seed},
                  {"max_residuals", worst},
                  {"pass", all_ok}};
      std::cout << out.dump(2) << "\n";
      return all_ok ? 0 : 1;
    }

    if (scan->parsed()) {
      const int n = scan_n;
      if (n < 2) throw std::invalid_argument("scan-lambda needs n >= 2");
      if (lambdas.empty())
        lambdas = {-0.9, -0.75, -1.0 / n, (1.0 - 2 * n) / (2.0 * n),
                   (1.0 - n) / n, 0.0, 1.0, 10.0};
      std::string out = "lambda,s,s_C,s_LC,s_H,s_R,torsion_norm_sq,predicted_s\r\n";
      std::vector<hc::cplx> zc(n, 0.0);
      zc[0] = 1.0;
      const hc::ChartPoint p(std::move(zc));
      bool all_ok = true;
      for (double lam : lambdas) {
        if (!(lam > -1)) throw std::invalid_argument("lambda must be > -1");
        const hc::MetricSpec spec = hc::hopf_family(n, lam);
        const hc::MetricJet2 j = hc::evaluate_jet(spec, p);
        const hc::ScalarSet S = hc::scalar_set(j);
        const double tnorm = hc::torsion_products(j, hc::torsion(j)).norm_sq;
        const double pred = (n * (n - 1.0) / (2.0 * (1 + lam) * (1 + lam))) *
                            (lam - (1.0 - 2 * n) / (2.0 * n));
        all_ok = all_ok && std::abs(S.s - pred) <= 1e-8 * (1 + std::abs(pred));
        char line[256];
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\r\n",
                      lam, S.s, S.s_C, S.s_LC, S.s_H, S.s_R, tnorm, pred);
        out += line;
      }
      if (csv_path.empty()) {
        std::cout << out;
      } else {
        std::ofstream f(csv_path, std::ios::binary);
        f << out;
      }
      return all_ok ? 0 : 1;
    }

    if (integ->parsed()) {
      hc::MetricSpec spec = hc::parse_metric_id(metric_id);
      hc::MCOptions opt;
      opt.samples = samples;
      opt.seed = seed;
      opt.partitions = partitions;
      json out;
      bool ok = false;
      if (identity == "volume") {
        const auto est = hc::hopf_integrate(
            spec, [](const hc::MetricJet2&, const hc::ChartPoint&) { return 1.0; }, opt);
        double exact = std::numeric_limits<double>::quiet_NaN();
        if (spec.name == "hopf" || spec.name == "hopf-family") {
          double lam = spec.params.count("lambda") ? spec.params.at("lambda") : 0.0;
          exact = hopf_exact_volume(spec.n, lam);
        }
        const double resid = std::isnan(exact) ? 0.0 : std::abs(est.value - exact);
        ok = std::isnan(exact) || resid < 3 * est.std_err;
        out = {{"identity", "volume"},       {"lhs", est.value},
               {"rhs", exact},              {"stderr_lhs", est.std_err},
               {"stderr_rhs", 0.0},         {"residual", resid},
               {"samples", est.samples},    {"seed", est.seed}};
      } else if (identity == "999") {
        const auto r = hc::check_integral_identity_999(spec, opt);
        ok = r.pass(itol);
        out = residual_json(r);
      } else if (identity == "89") {
        const auto r = hc::check_integral_identity_89(spec, opt);
        ok = r.pass(itol);
        out = residual_json(r);
      } else if (identity == "key-4") {
        const auto r = hc::check_k_gauduchon_identity(spec, kpar, opt);
        ok = r.pass(itol);
        out = residual_json(r);
      } else {  // balanced-diagnostic
        const auto b = hc::balanced_diagnostic(spec, opt);
        ok = b.gauduchon_residual < itol;
        auto est = [](const hc::IntegralEstimate& e) {
          return json{{"value", e.value}, {"stderr", e.std_err}};
        };
        out = {{"identity", "balanced-diagnostic"},
               {"total_s", est(b.total_s)},
               {"total_s_C", est(b.total_s_C)},
               {"total_s_LC", est(b.total_s_LC)},
               {"total_s_H", est(b.total_s_H)},
               {"total_s_R", est(b.total_s_R)},
               {"total_torsion_sq", est(b.total_torsion_sq)},
               {"ratio_C_over_LC", b.ratio_C_over_LC},
               {"gauduchon_residual", b.gauduchon_residual},
               {"balanced", b.balanced},
               {"samples", b.total_s.samples},
               {"seed", b.total_s.seed}};
      }
      std::cout << out.dump(2) << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
