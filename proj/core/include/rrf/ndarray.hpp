#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace rrf {

// Dense row-major array of 64-bit floats. This is deliberately minimal:
// the library only ever needs vectors (rank 1) and matrices (rank 2).
struct NDArray {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  NDArray() = default;
  NDArray(std::initializer_list<std::size_t> s, double fill = 0.0);
  static NDArray zeros(std::size_t n);
  static NDArray zeros(std::size_t r, std::size_t c);
  static NDArray from(std::vector<double> v);

  std::size_t numel() const;
  std::size_t rank() const { return shape.size(); }
  std::size_t rows() const;
  std::size_t cols() const;

  double& operator()(std::size_t i) { return data[i]; }
  double operator()(std::size_t i) const { return data[i]; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols() + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols() + j]; }

  double* row(std::size_t i) { return data.data() + i * cols(); }
  const double* row(std::size_t i) const { return data.data() + i * cols(); }

  bool all_finite() const;
  // Throws TrainingError when a non-finite entry is present.
  void ensure_finite(const std::string& context) const;

  void fill(double v);
};

// Dense kernels. A is (m x k), B is (k x n) etc.; all row-major.

// out = A * B^T  -- A: (m x k), B: (n x k), out: (m x n)
void gemm_nt(const NDArray& a, const NDArray& b, NDArray& out);
// out = A * B    -- A: (m x k), B: (k x n), out: (m x n)
void gemm_nn(const NDArray& a, const NDArray& b, NDArray& out);
// out = A^T * B  -- A: (k x m), B: (k x n), out: (m x n)
void gemm_tn(const NDArray& a, const NDArray& b, NDArray& out);
// out += ... variants accumulate instead of overwrite.
void gemm_nt_acc(const NDArray& a, const NDArray& b, NDArray& out);
void gemm_nn_acc(const NDArray& a, const NDArray& b, NDArray& out);
void gemm_tn_acc(const NDArray& a, const NDArray& b, NDArray& out);

// out(i, :) += v  for every row i.
void add_row_vector(NDArray& m, const NDArray& v);
// out(j) += sum_i m(i, j)
void col_sums_acc(const NDArray& m, NDArray& out);

double dot(const NDArray& a, const NDArray& b);
double sum_squares(const NDArray& a);

}  // namespace rrf
