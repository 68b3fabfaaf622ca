#pragma once

#include <cstdint>
#include <vector>

namespace topocp {

/// Dense multi-way array, row-major (last index fastest).
struct DenseTensor {
  std::vector<int> shape;
  std::vector<double> data;

  DenseTensor() = default;
  DenseTensor(std::vector<int> shape_, std::vector<double> data_);

  static DenseTensor zeros(std::vector<int> shape);

  std::int64_t size() const;
  int order() const { return static_cast<int>(shape.size()); }

  /// Row-major strides; stride of the last mode is 1.
  std::vector<std::int64_t> strides() const;

  double& at(const std::vector<int>& idx);
  double at(const std::vector<int>& idx) const;
};

double inner_product(const DenseTensor& a, const DenseTensor& b);

double frobenius_norm(const DenseTensor& t);

/// Mode-m product with a matrix U (rows x D_m); replaces D_m by U's row count.
DenseTensor mode_product(const DenseTensor& t, int mode, const DenseTensor& u);

/// Mode-m unfolding: D_m x (N / D_m), columns enumerate the remaining modes
/// in row-major order.
DenseTensor unfold_mode(const DenseTensor& t, int mode);

/// Sum-of-rank-one form: t = sum_r weights[r] * u_{1r} o ... o u_{Mr},
/// factor columns unit-norm, weights sorted by descending magnitude.
struct CpDecomp {
  int rank = 0;
  std::vector<double> weights;
  std::vector<DenseTensor> factors;  // each D_m x R
  std::vector<double> sweep_errors;  // relative fit after each ALS sweep
};

/// Core-times-orthonormal-factors form.
struct TuckerDecomp {
  DenseTensor core;                  // R_1 x ... x R_M
  std::vector<DenseTensor> factors;  // each D_m x R_m, orthonormal columns
  std::vector<double> sweep_errors;
};

/// Chain of third-order cores; boundary ranks are 1 so the first core is a
/// matrix in disguise and the last collapses to a vector per slice.
struct TtDecomp {
  std::vector<DenseTensor> cores;  // each R_{i-1} x D_i x R_i, R_0 = R_M = 1
  std::vector<int> ranks() const;  // internal ranks R_1..R_{M-1}
};

CpDecomp cp_als(const DenseTensor& t, int rank, int max_iters = 200,
                double tol = 1e-8);

TuckerDecomp tucker_hooi(const DenseTensor& t, const std::vector<int>& ranks,
                         int max_iters = 200, double tol = 1e-8);

/// Left-to-right SVD sweep. max_ranks (size M-1) caps the internal ranks when
/// non-empty; sv_rel_tol drops singular values below sv_rel_tol * sigma_max.
TtDecomp tt_svd(const DenseTensor& t, const std::vector<int>& max_ranks = {},
                double sv_rel_tol = 0.0);

DenseTensor reconstruct(const CpDecomp& d);
DenseTensor reconstruct(const TuckerDecomp& d);
DenseTensor reconstruct(const TtDecomp& d);

}  // namespace topocp
