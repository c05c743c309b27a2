#pragma once

#include "hc/connection.hpp"

namespace hc {

enum class CurvKind { chern, levi_civita, riemann_complexified };

// Rank-4 curvature tensor; r(i,j,k,l) = X_{i jbar k lbar}.
struct Curv4 {
  int n = 0;
  CurvKind kind = CurvKind::chern;
  Tensor4 r;
};

struct RicciSet {
  Herm11 scrRic;  // (1,1) part of the Riemannian Ricci curvature
  Herm11 ricH;    // Hermitian Ricci curvature
  Herm11 lc1;     // first Levi-Civita Ricci curvature
  Herm11 lc2;     // second Levi-Civita Ricci curvature
  Herm11 chern1;  // first Chern Ricci curvature
  Herm11 chern2;  // second Chern Ricci curvature
};

struct ScalarSet {
  double s;       // Riemannian scalar curvature
  double s_R;     // Riemannian type scalar curvature
  double s_H;     // Hermitian scalar curvature
  double s_LC;    // Levi-Civita scalar curvature
  double s_C;     // Chern scalar curvature
  double s_star;  // *-scalar curvature, equals 2 s_H
};

Curv4 chern_curvature(const MetricJet2& j);
Curv4 lc_curvature(const MetricJet2& j);
Curv4 lc_curvature(const MetricSpec& spec, const ChartPoint& p);
Curv4 riemann_complexified(const MetricJet2& j);
Curv4 riemann_complexified(const MetricSpec& spec, const ChartPoint& p);

RicciSet ricci_set(const MetricJet2& j, JetMode mode = JetMode::analytic);
RicciSet ricci_set(const MetricSpec& spec, const ChartPoint& p);
ScalarSet scalar_set(const MetricJet2& j, JetMode mode = JetMode::analytic);
ScalarSet scalar_set(const MetricSpec& spec, const ChartPoint& p);

// Holomorphic-pair components R_{ijk}^s h_{s lbar} = R(d_i, d_j, d_k, dbar_l)
// of the complexified tensor, needed for the real-basis *-Ricci route.
Tensor4 riemann_holo_pair(const MetricJet2& j);

// Components R(d_i, d_j, dbar_k, dbar_l) of the complexified tensor, from the
// complexified Levi-Civita connection; these enter the first Bianchi identity.
Tensor4 riemann_two_anti(const MetricJet2& j);

// Real *-Ricci curvature Ric*(X,Y) = i h^{k lbar} R(d_k, dbar_l, X, JY);
// X, Y are real tangent vectors in the basis {d/dx^i, d/dx^I}, size 2n.
double star_ricci(const MetricJet2& j, const RVec& X, const RVec& Y);
double star_ricci(const MetricSpec& spec, const ChartPoint& p, const RVec& X, const RVec& Y);

// Riemannian metric value g(X,Y) on real tangent vectors, from h.
double real_metric(const MetricJet2& j, const RVec& X, const RVec& Y);

}  // namespace hc
