#pragma once

#include "hc/forms.hpp"

namespace hc {

// Christoffel symbols of the induced Levi-Civita connection on T^{1,0}M.
//   gamma(k,i,j)     = Gamma^k_{ij}, symmetric in i,j
//   gamma_bar(k,j,i) = Gamma^k_{jbar i}
struct Christoffels {
  int n = 0;
  Tensor3 gamma;
  Tensor3 gamma_bar;
};

// T^k_{ij} = h^{k lbar}(d_i h_{j lbar} - d_j h_{i lbar}), antisymmetric in i,j.
struct Torsion {
  int n = 0;
  Tensor3 t;  // t(k,i,j)
};

struct TorsionProducts {
  Herm11 circ;    // coefficient matrix of T o Tbar (the real form is i T o Tbar)
  Herm11 boxdot;  // coefficient matrix of T [] Tbar
  double norm_sq;
};

Christoffels lc_christoffels(const MetricJet2& j);
Torsion torsion(const MetricJet2& j);
TorsionProducts torsion_products(const MetricJet2& j, const Torsion& t);

// dstar omega = -2i Gamma^k_{jbar k} dzbar^j and its conjugate.
PQForm dstar_omega(const MetricJet2& j);       // (0,1)-form
PQForm dbar_star_omega(const MetricJet2& j);   // (1,0)-form

// (1/2)(del delstar omega + dbar dbarstar omega) as a real (1,1)-form,
// by exterior differentiation of the global codifferential field.
Herm11 codiff_second_order(const MetricJet2& j);
Herm11 codiff_second_order(const MetricSpec& spec, const ChartPoint& p);

// Raw coefficients c_{i jbar} = h_{k jbar} T^k_{pi} v^p of the (1,1)-form
// T(v) = c_{i jbar} dz^i wedge dzbar^j.
Mat torsion_apply_vector(const Torsion& t, const CVec& v, const MetricJet2& j);

// Raise the index of a (0,1)-form with h^{i sbar}.
CVec sharp(const PQForm& f, const MetricJet2& j);

}  // namespace hc
