#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace steklov {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CMatrix adjoint() const;
  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator*=(Complex s);
  Complex trace() const;
  /// Largest |entry|.
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// max |A - B| entrywise.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// max |M_ij - conj(M_ji)|.
double hermitian_defect(const CMatrix& m);

namespace linalg {

/// Eigen-decomposition of a real symmetric matrix (row-major n x n) by cyclic
/// Jacobi rotations. Values ascending; vectors[k] is the k-th eigenvector.
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
  int sweeps = 0;
};
SymmetricEigen jacobi_symmetric(std::vector<double> a, std::size_t n, double tol = 1e-13, int max_sweeps = 100);

/// Hermitian eigen-decomposition through the 2N x 2N real symmetric embedding
/// [[Re M, -Im M], [Im M, Re M]]. Values ascending; column k of `vectors` is
/// a unit eigenvector for values[k].
struct HermitianEigen {
  std::vector<double> values;
  CMatrix vectors;
};
HermitianEigen hermitian_eigen(const CMatrix& m, double cluster_rel_gap = 1e-9);

/// X = B^{-1} A by LU with partial pivoting. Throws ConditioningError when a
/// pivot falls below pivot_tol * max|B|.
CMatrix lu_solve(const CMatrix& b, const CMatrix& a, double pivot_tol = 1e-12);

/// All eigenvalues of a general complex matrix: Householder reduction to
/// Hessenberg form followed by single-shift QR with Wilkinson shifts.
std::vector<Complex> general_eigenvalues(CMatrix a);

}  // namespace linalg
}  // namespace steklov
