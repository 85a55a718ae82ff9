#pragma once

// Test-only reference computations. Everything here goes through Eigen and
// never calls back into the library's arithmetic, so it can serve as an
// independent check on it.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <random>

#include "braidham/matrix.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Mat to_eigen(const braidham::ComplexMatrix& m) {
  Mat out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
  return out;
}

inline braidham::ComplexMatrix from_eigen(const Mat& m) {
  braidham::ComplexMatrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

inline double distance(const Mat& a, const Mat& b) { return (a - b).norm(); }

inline Mat sigma(int i) {
  Mat s(2, 2);
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cd(0, -1), cd(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// exp(i theta/2 H) for Hermitian H via its eigendecomposition.
inline Mat exp_hermitian(const Mat& h, double theta) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const auto& vals = es.eigenvalues();
  Mat d = Mat::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < vals.size(); ++i) d(i, i) = std::polar(1.0, theta / 2.0 * vals(i));
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

/// Haar-ish random unitary from the QR factorization of a Gaussian matrix.
template <class Rng>
Mat random_unitary(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat z(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) z(r, c) = cd(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(z);
  return qr.householderQ() * Mat::Identity(n, n);
}

/// U diag(+/-1) U^dagger with a random sign pattern that is not all equal.
template <class Rng>
Mat random_hermitian_involution(int n, Rng& rng) {
  const Mat u = random_unitary(n, rng);
  std::bernoulli_distribution coin(0.5);
  Mat d = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = coin(rng) ? 1.0 : -1.0;
  d(0, 0) = 1.0;
  d(n - 1, n - 1) = -1.0;
  return u * d * u.adjoint();
}

template <class Rng>
Mat random_matrix(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat z(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) z(r, c) = cd(g(rng), g(rng));
  return z;
}

/// Distance from M to span{E_k (x) I} (left) or span{I (x) E_k} (right),
/// computed as sqrt(||M||^2 - sum |<B_k, M>|^2) over an orthonormal basis of
/// the pattern subspace.
inline double pattern_residual(const Mat& m, bool left) {
  double captured = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Mat e = Mat::Zero(2, 2);
      e(i, j) = 1.0;
      const Mat basis =
          (left ? kron(e, Mat::Identity(2, 2)) : kron(Mat::Identity(2, 2), e)) / std::sqrt(2.0);
      captured += std::norm((basis.adjoint() * m).trace());
    }
  return std::sqrt(std::max(0.0, m.squaredNorm() - captured));
}

}  // namespace oracle
