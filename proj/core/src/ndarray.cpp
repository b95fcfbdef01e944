#include "rrf/ndarray.hpp"

#include <cmath>
#include <numeric>

#include <Eigen/Core>

#include "rrf/errors.hpp"

namespace rrf {

namespace {

using EMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CMap = Eigen::Map<const EMat>;
using MMap = Eigen::Map<EMat>;

CMap cmap(const NDArray& a) {
  return CMap(a.data.data(), static_cast<Eigen::Index>(a.rows()),
              static_cast<Eigen::Index>(a.cols()));
}

MMap mmap(NDArray& a) {
  return MMap(a.data.data(), static_cast<Eigen::Index>(a.rows()),
              static_cast<Eigen::Index>(a.cols()));
}

void require(bool ok, const char* msg) {
  if (!ok) throw ShapeError(msg);
}

}  // namespace

NDArray::NDArray(std::initializer_list<std::size_t> s, double fill) : shape(s) {
  data.assign(numel(), fill);
}

NDArray NDArray::zeros(std::size_t n) { return NDArray({n}); }
NDArray NDArray::zeros(std::size_t r, std::size_t c) { return NDArray({r, c}); }

NDArray NDArray::from(std::vector<double> v) {
  NDArray a;
  a.shape = {v.size()};
  a.data = std::move(v);
  return a;
}

std::size_t NDArray::numel() const {
  std::size_t n = 1;
  for (auto e : shape) n *= e;
  return shape.empty() ? 0 : n;
}

std::size_t NDArray::rows() const { return rank() == 2 ? shape[0] : 1; }

std::size_t NDArray::cols() const {
  if (rank() == 2) return shape[1];
  return rank() == 1 ? shape[0] : 0;
}

bool NDArray::all_finite() const {
  for (double v : data)
    if (!std::isfinite(v)) return false;
  return true;
}

void NDArray::ensure_finite(const std::string& context) const {
  if (!all_finite()) throw TrainingError("non-finite values in " + context);
}

void NDArray::fill(double v) { data.assign(data.size(), v); }

void gemm_nt(const NDArray& a, const NDArray& b, NDArray& out) {
  require(a.cols() == b.cols() && out.rows() == a.rows() && out.cols() == b.rows(),
          "gemm_nt: shape mismatch");
  mmap(out).noalias() = cmap(a) * cmap(b).transpose();
}

void gemm_nn(const NDArray& a, const NDArray& b, NDArray& out) {
  require(a.cols() == b.rows() && out.rows() == a.rows() && out.cols() == b.cols(),
          "gemm_nn: shape mismatch");
  mmap(out).noalias() = cmap(a) * cmap(b);
}

void gemm_tn(const NDArray& a, const NDArray& b, NDArray& out) {
  require(a.rows() == b.rows() && out.rows() == a.cols() && out.cols() == b.cols(),
          "gemm_tn: shape mismatch");
  mmap(out).noalias() = cmap(a).transpose() * cmap(b);
}

void gemm_nt_acc(const NDArray& a, const NDArray& b, NDArray& out) {
  require(a.cols() == b.cols() && out.rows() == a.rows() && out.cols() == b.rows(),
          "gemm_nt_acc: shape mismatch");
  mmap(out).noalias() += cmap(a) * cmap(b).transpose();
}

void gemm_nn_acc(const NDArray& a, const NDArray& b, NDArray& out) {
  require(a.cols() == b.rows() && out.rows() == a.rows() && out.cols() == b.cols(),
          "gemm_nn_acc: shape mismatch");
  mmap(out).noalias() += cmap(a) * cmap(b);
}

void gemm_tn_acc(const NDArray& a, const NDArray& b, NDArray& out) {
  require(a.rows() == b.rows() && out.rows() == a.cols() && out.cols() == b.cols(),
          "gemm_tn_acc: shape mismatch");
  mmap(out).noalias() += cmap(a).transpose() * cmap(b);
}

void add_row_vector(NDArray& m, const NDArray& v) {
  require(m.cols() == v.numel(), "add_row_vector: width mismatch");
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t i = 0; i < r; ++i) {
    double* out = m.row(i);
    for (std::size_t j = 0; j < c; ++j) out[j] += v.data[j];
  }
}

void col_sums_acc(const NDArray& m, NDArray& out) {
  require(m.cols() == out.numel(), "col_sums_acc: width mismatch");
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t i = 0; i < r; ++i) {
    const double* row = m.row(i);
    for (std::size_t j = 0; j < c; ++j) out.data[j] += row[j];
  }
}

double dot(const NDArray& a, const NDArray& b) {
  require(a.numel() == b.numel(), "dot: size mismatch");
  return std::inner_product(a.data.begin(), a.data.end(), b.data.begin(), 0.0);
}

double sum_squares(const NDArray& a) {
  double s = 0.0;
  for (double v : a.data) s += v * v;
  return s;
}

}  // namespace rrf
