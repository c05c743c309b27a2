#pragma once

#include <complex>
#include <vector>
#include <Eigen/Dense>

namespace hc {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Dense rank-3 complex array, indices in [0,n).
struct Tensor3 {
  int n = 0;
  std::vector<cplx> v;
  Tensor3() = default;
  explicit Tensor3(int n_) : n(n_), v(static_cast<size_t>(n_) * n_ * n_) {}
  cplx& operator()(int a, int b, int c) { return v[(static_cast<size_t>(a) * n + b) * n + c]; }
  const cplx& operator()(int a, int b, int c) const { return v[(static_cast<size_t>(a) * n + b) * n + c]; }
};

// Dense rank-4 complex array.
struct Tensor4 {
  int n = 0;
  std::vector<cplx> v;
  Tensor4() = default;
  explicit Tensor4(int n_) : n(n_), v(static_cast<size_t>(n_) * n_ * n_ * n_) {}
  cplx& operator()(int a, int b, int c, int d) {
    return v[((static_cast<size_t>(a) * n + b) * n + c) * n + d];
  }
  const cplx& operator()(int a, int b, int c, int d) const {
    return v[((static_cast<size_t>(a) * n + b) * n + c) * n + d];
  }
};

}  // namespace hc
