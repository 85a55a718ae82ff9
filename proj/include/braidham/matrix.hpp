#pragma once

// Dense 2x2 / 4x4 complex matrices and the handful of primitives the braid
// checks need: Frobenius residuals, structural classification, exponentials
// of Hermitian involutions, group-order detection and Kronecker-factor tests.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidham {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

/// Raised when an operation is called outside its mathematical preconditions
/// (wrong dimension, non-unitary generator, non-involutory exponent, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Absolute tolerance applied to Frobenius residuals of O(1) matrices.
struct Tolerance {
  double abs_tol = 1e-12;

  constexpr Tolerance() = default;
  explicit Tolerance(double value) : abs_tol(value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw PreconditionError("tolerance must be a finite positive number");
    }
  }
};

/// Square complex matrix of dimension 2 or 4, stored row-major.
class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 4;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim) {
    if (dim != 2 && dim != 4) {
      throw PreconditionError("matrix dimension must be 2 or 4, got " +
                              std::to_string(dim));
    }
    data_.fill(Complex{});
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : ComplexMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) {
        throw PreconditionError("ragged matrix initializer");
      }
      std::size_t c = 0;
      for (const auto& v : row) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
          throw PreconditionError("matrix entries must be finite");
        }
        (*this)(r, c++) = v;
      }
      ++r;
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }

  static ComplexMatrix diagonal(std::initializer_list<Complex> diag) {
    ComplexMatrix m(diag.size());
    std::size_t i = 0;
    for (const auto& v : diag) {
      m(i, i) = v;
      ++i;
    }
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * kMaxDim + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * kMaxDim + c];
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) s += std::norm((*this)(r, c));
    return std::sqrt(s);
  }

  bool all_finite() const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) {
        const auto& v = (*this)(r, c);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
      }
    return true;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs) {
    require_same_dim(rhs);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) += rhs(r, c);
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& rhs) {
    require_same_dim(rhs);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) -= rhs(r, c);
    return *this;
  }

  ComplexMatrix& operator*=(Complex s) {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator/(ComplexMatrix m, double s) { return m *= 1.0 / s; }

  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    lhs.require_same_dim(rhs);
    ComplexMatrix out(lhs.dim_);
    for (std::size_t r = 0; r < lhs.dim_; ++r)
      for (std::size_t k = 0; k < lhs.dim_; ++k) {
        const Complex v = lhs(r, k);
        for (std::size_t c = 0; c < lhs.dim_; ++c) out(r, c) += v * rhs(k, c);
      }
    return out;
  }

  friend bool operator==(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim_ != rhs.dim_) return false;
    for (std::size_t r = 0; r < lhs.dim_; ++r)
      for (std::size_t c = 0; c < lhs.dim_; ++c)
        if (lhs(r, c) != rhs(r, c)) return false;
    return true;
  }

 private:
  void require_same_dim(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) {
      throw PreconditionError("dimension mismatch: " + std::to_string(dim_) + " vs " +
                              std::to_string(other.dim_));
    }
  }

  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

namespace pauli {

inline ComplexMatrix sigma1() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix sigma2() { return {{0.0, -kI}, {kI, 0.0}}; }
inline ComplexMatrix sigma3() { return {{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace pauli

/// ||A - B||_F. Throws PreconditionError on a dimension mismatch.
inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

struct Classification {
  bool hermitian = false;
  bool unitary = false;
  bool involutory = false;
  bool traceless = false;
};

/// Raw residuals behind `classify`; useful when the failing value matters.
struct ClassificationResiduals {
  double hermitian;   // ||M - M^dagger||_F
  double unitary;     // ||M M^dagger - I||_F
  double involutory;  // ||M^2 - I||_F
  double traceless;   // |tr M|
};

inline ClassificationResiduals classification_residuals(const ComplexMatrix& m) {
  const auto id = ComplexMatrix::identity(m.dim());
  const auto adj = m.adjoint();
  return {frobenius_distance(m, adj), frobenius_distance(m * adj, id),
          frobenius_distance(m * m, id), std::abs(m.trace())};
}

inline Classification classify(const ComplexMatrix& m, Tolerance tol = {}) {
  const auto r = classification_residuals(m);
  return {r.hermitian < tol.abs_tol, r.unitary < tol.abs_tol, r.involutory < tol.abs_tol,
          r.traceless < tol.abs_tol};
}

/// exp(i theta/2 H) = cos(theta/2) I + i sin(theta/2) H for a Hermitian
/// involution H.
inline ComplexMatrix exp_involutory(const ComplexMatrix& h, double theta,
                                    Tolerance tol = {}) {
  const auto r = classification_residuals(h);
  if (!(r.involutory < tol.abs_tol)) {
    throw PreconditionError("exp_involutory: matrix is not involutory (||H^2 - I||_F = " +
                            std::to_string(r.involutory) + ")");
  }
  if (!(r.hermitian < tol.abs_tol)) {
    throw PreconditionError("exp_involutory: matrix is not Hermitian (||H - H^dagger||_F = " +
                            std::to_string(r.hermitian) + ")");
  }
  return std::cos(theta / 2.0) * ComplexMatrix::identity(h.dim()) +
         (kI * std::sin(theta / 2.0)) * h;
}

struct OrderInfo {
  std::optional<int> order;          // smallest n with M^n = I, if <= max_order
  std::vector<int> minus_identity;   // every n (up to order, or max_order) with M^n = -I
};

inline OrderInfo matrix_order(const ComplexMatrix& m, int max_order = 64,
                              Tolerance tol = {}) {
  if (max_order < 1) throw PreconditionError("matrix_order: max_order must be >= 1");
  const auto r = classification_residuals(m);
  if (!(r.unitary < tol.abs_tol)) {
    throw PreconditionError("matrix_order: matrix is not unitary (||MM^dagger - I||_F = " +
                            std::to_string(r.unitary) + ")");
  }
  const auto id = ComplexMatrix::identity(m.dim());
  const auto minus_id = -id;
  OrderInfo info;
  auto power = m;
  for (int n = 1; n <= max_order; ++n) {
    if (frobenius_distance(power, id) < tol.abs_tol) {
      info.order = n;
      break;
    }
    if (frobenius_distance(power, minus_id) < tol.abs_tol) info.minus_identity.push_back(n);
    power = power * m;
  }
  return info;
}

/// Kronecker product of two 2x2 matrices; block (i, j) of the result is A(i, j) B.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw PreconditionError("kron: both factors must be 2x2");
  }
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

struct KronFactorResiduals {
  double left_residual;   // min_X ||M - X (x) I||_F
  double right_residual;  // min_X ||M - I (x) X||_F
};

/// Distances from a 4x4 matrix to the subspaces {X (x) I} and {I (x) X}.
/// Both are orthogonal projections in closed form: X (x) I has scalar
/// blocks, so X(i, j) = tr(block(i, j)) / 2; I (x) X has equal diagonal
/// blocks and zero off-diagonal blocks, so X = (block(0,0) + block(1,1)) / 2.
inline KronFactorResiduals kron_factor_residuals(const ComplexMatrix& m) {
  if (m.dim() != 4) throw PreconditionError("kron_factor_residuals: matrix must be 4x4");
  auto block = [&](std::size_t bi, std::size_t bj, std::size_t k, std::size_t l) {
    return m(2 * bi + k, 2 * bj + l);
  };

  double left_sq = 0.0;
  for (std::size_t bi = 0; bi < 2; ++bi)
    for (std::size_t bj = 0; bj < 2; ++bj) {
      const Complex x = 0.5 * (block(bi, bj, 0, 0) + block(bi, bj, 1, 1));
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          left_sq += std::norm(block(bi, bj, k, l) - (k == l ? x : Complex{}));
    }

  double right_sq = 0.0;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l) {
      const Complex x = 0.5 * (block(0, 0, k, l) + block(1, 1, k, l));
      right_sq += std::norm(block(0, 0, k, l) - x) + std::norm(block(1, 1, k, l) - x) +
                  std::norm(block(0, 1, k, l)) + std::norm(block(1, 0, k, l));
    }

  return {std::sqrt(left_sq), std::sqrt(right_sq)};
}

}  // namespace braidham
