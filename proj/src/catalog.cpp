#include "hc/catalog.hpp"

#include <cmath>
#include <sstream>

namespace hc {

namespace {

ChartPoint sample_annulus(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0, 1);
  std::uniform_real_distribution<double> uni(0, 1);
  std::vector<cplx> z(n);
  double norm2 = 0;
  for (int i = 0; i < n; ++i) {
    z[i] = cplx(gauss(rng), gauss(rng));
    norm2 += std::norm(z[i]);
  }
  const double r = 1.0 + uni(rng);
  const double scale = r / std::sqrt(norm2);
  for (auto& c : z) c *= scale;
  return ChartPoint(std::move(z));
}

ChartPoint sample_box(int n, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(lo, hi);
  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i) z[i] = cplx(uni(rng), uni(rng));
  return ChartPoint(std::move(z));
}

}  // namespace

MetricSpec flat(int n) {
  if (n < 1) throw std::invalid_argument("flat: n >= 1");
  MetricSpec s;
  s.n = n;
  s.name = "flat";
  s.domain = Domain::torus_cell;
  s.metric = [n](const ChartPoint&) { return Mat::Identity(n, n).eval(); };
  s.jet = [n](const ChartPoint&) {
    MetricJet2 j;
    j.n = n;
    j.h = Mat::Identity(n, n);
    j.dh = Tensor3(n);
    j.ddbar_h = Tensor4(n);
    j.dd_h = Tensor4(n);
    return j;
  };
  s.in_chart = [](const ChartPoint&) { return true; };
  s.sampler = [n](std::mt19937_64& rng) { return sample_box(n, 0, 1, rng); };
  return s;
}

MetricSpec hopf_family(int n, double lambda) {
  if (n < 2) throw std::invalid_argument("hopf family: n >= 2");
  if (!(lambda > -1)) throw std::invalid_argument("hopf family: lambda > -1");
  MetricSpec s;
  s.n = n;
  s.name = "hopf-family";
  s.params["lambda"] = lambda;
  s.domain = Domain::hopf_annulus;
  const double A = 4 * (1 + lambda), L = 4 * lambda;
  s.metric = [n, A, L](const ChartPoint& p) {
    const double w = p.abs2();
    Mat h(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cplx B = std::conj(p.z[i]) * p.z[j] / (w * w);
        h(i, j) = (i == j ? A / w : cplx(0)) - L * B;
      }
    return h;
  };
  s.jet = [n, A, L](const ChartPoint& p) {
    const double w = p.abs2();
    const double w2 = w * w, w3 = w2 * w, w4 = w3 * w;
    auto z = [&](int i) { return p.z[i]; };
    auto zb = [&](int i) { return std::conj(p.z[i]); };
    auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    MetricJet2 j;
    j.n = n;
    j.h = Mat(n, n);
    j.dh = Tensor3(n);
    j.ddbar_h = Tensor4(n);
    j.dd_h = Tensor4(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) j.h(i, k) = A * d(i, k) / w - L * zb(i) * z(k) / w2;
    for (int pp = 0; pp < n; ++pp)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          cplx dB = d(pp, k) * zb(i) / w2 - 2.0 * zb(i) * z(k) * zb(pp) / w3;
          j.dh(pp, i, k) = A * d(i, k) * (-zb(pp) / w2) - L * dB;
        }
    for (int pp = 0; pp < n; ++pp)
      for (int q = 0; q < n; ++q)
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) {
            cplx ddbarB = d(pp, k) * (d(q, i) / w2 - 2.0 * zb(i) * z(q) / w3) -
                          2.0 * (d(q, i) * z(k) * zb(pp) + d(q, pp) * zb(i) * z(k)) / w3 +
                          6.0 * zb(i) * z(k) * zb(pp) * z(q) / w4;
            j.ddbar_h(pp, q, i, k) =
                A * d(i, k) * (-d(pp, q) / w2 + 2.0 * zb(pp) * z(q) / w3) - L * ddbarB;
            cplx ddB = -2.0 * d(pp, k) * zb(i) * zb(q) / w3 - 2.0 * d(q, k) * zb(i) * zb(pp) / w3 +
                       6.0 * zb(i) * z(k) * zb(pp) * zb(q) / w4;
            j.dd_h(pp, q, i, k) = A * d(i, k) * (2.0 * zb(pp) * zb(q) / w3) - L * ddB;
          }
    return j;
  };
  s.in_chart = [](const ChartPoint& p) {
    const double r = std::sqrt(p.abs2());
    return r > 0.25 && r < 16.0;
  };
  s.sampler = [n](std::mt19937_64& rng) { return sample_annulus(n, rng); };
  return s;
}

MetricSpec hopf_canonical(int n) {
  MetricSpec s = hopf_family(n, 0.0);
  s.name = "hopf";
  s.params.clear();
  return s;
}

MetricSpec fubini_study(int n) {
  if (n < 1) throw std::invalid_argument("fubini-study: n >= 1");
  MetricSpec s;
  s.n = n;
  s.name = "fubini-study";
  s.metric = [n](const ChartPoint& p) {
    const double w = 1.0 / (1.0 + p.abs2());
    Mat h(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        h(i, j) = (i == j ? w : 0.0) - std::conj(p.z[i]) * p.z[j] * w * w;
    return h;
  };
  s.jet = [n](const ChartPoint& p) {
    const double w = 1.0 / (1.0 + p.abs2());
    const double w2 = w * w, w3 = w2 * w, w4 = w3 * w;
    auto z = [&](int i) { return p.z[i]; };
    auto zb = [&](int i) { return std::conj(p.z[i]); };
    auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    MetricJet2 j;
    j.n = n;
    j.h = Mat(n, n);
    j.dh = Tensor3(n);
    j.ddbar_h = Tensor4(n);
    j.dd_h = Tensor4(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) j.h(i, k) = d(i, k) * w - zb(i) * z(k) * w2;
    for (int pp = 0; pp < n; ++pp)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          j.dh(pp, i, k) = -(d(i, k) * zb(pp) + d(pp, k) * zb(i)) * w2 +
                           2.0 * zb(i) * z(k) * zb(pp) * w3;
    for (int pp = 0; pp < n; ++pp)
      for (int q = 0; q < n; ++q)
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) {
            j.ddbar_h(pp, q, i, k) = -(d(i, k) * d(q, pp) + d(pp, k) * d(q, i)) * w2 +
                                     2.0 * (d(i, k) * zb(pp) + d(pp, k) * zb(i)) * z(q) * w3 +
                                     2.0 * (d(q, i) * z(k) * zb(pp) + d(q, pp) * zb(i) * z(k)) * w3 -
                                     6.0 * zb(i) * z(k) * zb(pp) * z(q) * w4;
            j.dd_h(pp, q, i, k) = 2.0 * (d(i, k) * zb(pp) + d(pp, k) * zb(i)) * zb(q) * w3 +
                                  2.0 * d(q, k) * zb(i) * zb(pp) * w3 -
                                  6.0 * zb(i) * z(k) * zb(pp) * zb(q) * w4;
          }
    return j;
  };
  s.in_chart = [](const ChartPoint&) { return true; };
  s.sampler = [n](std::mt19937_64& rng) { return sample_box(n, -1, 1, rng); };
  return s;
}

RealFn polynomial_realfn(const CVec& a, const Mat& b, const Mat& c) {
  RealFn f;
  const int n = static_cast<int>(a.size());
  f.jet = [a, b, c, n](const ChartPoint& p) {
    RealFn::Jet out;
    CVec z(n);
    for (int i = 0; i < n; ++i) z(i) = p.z[i];
    cplx lin = (a.transpose() * z)(0);
    cplx quad = (z.transpose() * b * z)(0);
    cplx mixed = 0;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) mixed += c(i, jj) * z(i) * std::conj(z(jj));
    out.value = lin.real() + quad.real() + mixed.real();
    out.grad = CVec(n);
    for (int pp = 0; pp < n; ++pp) {
      cplx g = 0.5 * a(pp);
      for (int jj = 0; jj < n; ++jj) g += 0.5 * (b(pp, jj) + b(jj, pp)) * z(jj);
      for (int jj = 0; jj < n; ++jj) g += c(pp, jj) * std::conj(z(jj));
      out.grad(pp) = g;
    }
    out.hess = 0.5 * (b + b.transpose());
    out.hess_mixed = c;
    return out;
  };
  return f;
}

MetricSpec conformal(const MetricSpec& base, const RealFn& f) {
  MetricSpec s = base;
  s.name = "conformal(" + base.name + ")";
  auto basejet = base.jet;
  auto basemetric = base.metric;
  auto fj = f.jet;
  s.metric = [basemetric, fj](const ChartPoint& p) {
    return (std::exp(fj(p).value) * basemetric(p)).eval();
  };
  s.jet = [basejet, fj](const ChartPoint& p) {
    const MetricJet2 b = basejet(p);
    const RealFn::Jet fv = fj(p);
    const int n = b.n;
    const double ef = std::exp(fv.value);
    auto fp = [&](int i) { return fv.grad(i); };
    auto fpb = [&](int i) { return std::conj(fv.grad(i)); };
    MetricJet2 j;
    j.n = n;
    j.h = ef * b.h;
    j.dh = Tensor3(n);
    j.ddbar_h = Tensor4(n);
    j.dd_h = Tensor4(n);
    for (int pp = 0; pp < n; ++pp)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          j.dh(pp, i, k) = ef * (fp(pp) * b.h(i, k) + b.dh(pp, i, k));
    for (int pp = 0; pp < n; ++pp)
      for (int q = 0; q < n; ++q)
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) {
            j.ddbar_h(pp, q, i, k) =
                ef * ((fv.hess_mixed(pp, q) + fp(pp) * fpb(q)) * b.h(i, k) +
                      fp(pp) * b.dbar_h(q, i, k) + fpb(q) * b.dh(pp, i, k) +
                      b.ddbar_h(pp, q, i, k));
            j.dd_h(pp, q, i, k) =
                ef * ((fv.hess(pp, q) + fp(pp) * fp(q)) * b.h(i, k) +
                      fp(pp) * b.dh(q, i, k) + fp(q) * b.dh(pp, i, k) + b.dd_h(pp, q, i, k));
          }
    return j;
  };
  return s;
}

MetricSpec product(const MetricSpec& a, const MetricSpec& b) {
  MetricSpec s;
  const int na = a.n, nb = b.n, n = na + nb;
  s.n = n;
  s.name = "product(" + a.name + "," + b.name + ")";
  s.domain = Domain::generic;
  auto split = [na, nb](const ChartPoint& p) {
    ChartPoint pa, pb;
    pa.z.assign(p.z.begin(), p.z.begin() + na);
    pb.z.assign(p.z.begin() + na, p.z.end());
    return std::make_pair(pa, pb);
  };
  auto ja = a.jet, jb = b.jet;
  auto ma = a.metric, mb = b.metric;
  s.metric = [split, ma, mb, na, nb, n](const ChartPoint& p) {
    auto [pa, pb] = split(p);
    Mat h = Mat::Zero(n, n);
    h.topLeftCorner(na, na) = ma(pa);
    h.bottomRightCorner(nb, nb) = mb(pb);
    return h;
  };
  s.jet = [split, ja, jb, na, nb, n](const ChartPoint& p) {
    auto [pa, pb] = split(p);
    const MetricJet2 A = ja(pa);
    const MetricJet2 B = jb(pb);
    MetricJet2 j;
    j.n = n;
    j.h = Mat::Zero(n, n);
    j.h.topLeftCorner(na, na) = A.h;
    j.h.bottomRightCorner(nb, nb) = B.h;
    j.dh = Tensor3(n);
    j.ddbar_h = Tensor4(n);
    j.dd_h = Tensor4(n);
    for (int pp = 0; pp < na; ++pp)
      for (int i = 0; i < na; ++i)
        for (int k = 0; k < na; ++k) j.dh(pp, i, k) = A.dh(pp, i, k);
    for (int pp = 0; pp < nb; ++pp)
      for (int i = 0; i < nb; ++i)
        for (int k = 0; k < nb; ++k) j.dh(na + pp, na + i, na + k) = B.dh(pp, i, k);
    for (int pp = 0; pp < na; ++pp)
      for (int q = 0; q < na; ++q)
        for (int i = 0; i < na; ++i)
          for (int k = 0; k < na; ++k) {
            j.ddbar_h(pp, q, i, k) = A.ddbar_h(pp, q, i, k);
            j.dd_h(pp, q, i, k) = A.dd_h(pp, q, i, k);
          }
    for (int pp = 0; pp < nb; ++pp)
      for (int q = 0; q < nb; ++q)
        for (int i = 0; i < nb; ++i)
          for (int k = 0; k < nb; ++k) {
            j.ddbar_h(na + pp, na + q, na + i, na + k) = B.ddbar_h(pp, q, i, k);
            j.dd_h(na + pp, na + q, na + i, na + k) = B.dd_h(pp, q, i, k);
          }
    return j;
  };
  auto ia = a.in_chart, ib = b.in_chart;
  s.in_chart = [split, ia, ib](const ChartPoint& p) {
    auto [pa, pb] = split(p);
    return (!ia || ia(pa)) && (!ib || ib(pb));
  };
  auto sa = a.sampler, sb = b.sampler;
  s.sampler = [split, sa, sb](std::mt19937_64& rng) {
    ChartPoint pa = sa(rng);
    ChartPoint pb = sb(rng);
    ChartPoint p;
    p.z = pa.z;
    p.z.insert(p.z.end(), pb.z.begin(), pb.z.end());
    return p;
  };
  return s;
}

MetricSpec parse_metric_id(const std::string& id) {
  const auto colon = id.find(':');
  const std::string name = id.substr(0, colon);
  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(id.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad parameter: " + item);
      kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
  }
  auto geti = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw std::invalid_argument("missing parameter " + k + " in " + id);
    return static_cast<int>(it->second);
  };
  auto getd = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw std::invalid_argument("missing parameter " + k + " in " + id);
    return it->second;
  };
  if (name == "flat") return flat(geti("n"));
  if (name == "hopf") return hopf_canonical(geti("n"));
  if (name == "hopf-family") return hopf_family(geti("n"), getd("lambda"));
  if (name == "fubini-study") return fubini_study(geti("n"));
  throw std::invalid_argument("unknown metric id: " + id);
}

std::vector<std::string> catalog_names() {
  return {"flat:n=<n>", "hopf:n=<n>", "hopf-family:n=<n>,lambda=<l>", "fubini-study:n=<n>"};
}

ChartPoint random_chart_point(const MetricSpec& spec, std::mt19937_64& rng) {
  if (spec.sampler) return spec.sampler(rng);
  if (spec.domain == Domain::hopf_annulus) return sample_annulus(spec.n, rng);
  return sample_box(spec.n, -1, 1, rng);
}

}  // namespace hc
