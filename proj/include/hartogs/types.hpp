#pragma once

#include <complex>

#include <Eigen/Dense>

namespace hartogs {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using CVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using CMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using RMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// n x n complex Hermitian matrix. The stored matrix is always the exact
/// Hermitian part (M + M^H)/2 of whatever it was built from, so
/// entry(a, b) == conj(entry(b, a)) holds bit-for-bit.
template <typename Scalar>
class HermitianMatrix {
 public:
  using Matrix = CMatrix<Scalar>;

  HermitianMatrix() = default;

  template <typename Derived>
  explicit HermitianMatrix(const Eigen::MatrixBase<Derived>& m)
      : m_((m + m.adjoint()) / Scalar(2)) {}

  static HermitianMatrix Zero(Index n) { return HermitianMatrix(Matrix::Zero(n, n)); }
  static HermitianMatrix Identity(Index n) { return HermitianMatrix(Matrix::Identity(n, n)); }

  const Matrix& matrix() const { return m_; }
  Index size() const { return m_.rows(); }
  Complex<Scalar> operator()(Index a, Index b) const { return m_(a, b); }

  /// Largest entry modulus.
  Scalar max_abs() const { return size() == 0 ? Scalar(0) : m_.cwiseAbs().maxCoeff(); }

  /// Smallest eigenvalue; real because the matrix is Hermitian.
  Scalar min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
  }

  /// Positive definiteness by the leading-principal-minor test.
  bool positive_definite() const {
    for (Index k = 1; k <= size(); ++k) {
      if (!(m_.topLeftCorner(k, k).determinant().real() > Scalar(0))) return false;
    }
    return true;
  }

  friend HermitianMatrix operator*(Scalar s, const HermitianMatrix& h) {
    return HermitianMatrix(s * h.m_);
  }
  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.m_ + b.m_);
  }
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.m_ - b.m_);
  }
  HermitianMatrix operator-() const { return HermitianMatrix(-m_); }

 private:
  Matrix m_;
};

/// Entrywise max |a - b|.
template <typename Scalar>
Scalar max_abs_diff(const HermitianMatrix<Scalar>& a, const HermitianMatrix<Scalar>& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace hartogs
