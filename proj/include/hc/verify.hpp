#pragma once

#include "hc/catalog.hpp"
#include "hc/curvature.hpp"

namespace hc {

struct IdentityResult {
  std::string name;
  double residual = 0;
  double tol = 0;
  bool pass = false;
};

// Default residual tolerance per jet mode.
double default_identity_tol(JetMode mode);

// Pointwise identity suite: the four Ricci relations, their sum relation, the
// torsion-norm trace identity, the four scalar relations, the codifferential
// cross-checks, the Bianchi and symmetry residuals of the complexified tensor.
std::vector<IdentityResult> identity_suite(const MetricSpec& spec, const ChartPoint& p,
                                           double tol = 0);

// s - (2 s_C - |T|^2 / 2); vanishes pointwise on the Hopf family and on
// Kaehler metrics, not in general.
double gauduchon_pointwise_residual(const MetricSpec& spec, const ChartPoint& p);

// Conformal transformation law of the codifferential: for omega_f = e^f omega,
// dbar*_f omega_f = dbar* omega + i (n-1) del f.  Returns the max-abs residual.
double conformal_codiff_residual(const MetricSpec& base, const RealFn& f, const ChartPoint& p);

bool all_pass(const std::vector<IdentityResult>& rs);

}  // namespace hc
