#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "ghzsym/error.hpp"

namespace ghzsym {

using Complex = std::complex<double>;

/// Basis convention throughout: |q1 q2 q3> with q1 the most significant bit,
/// so |000> = index 0 and |111> = index 7.
inline constexpr int kDim = 8;

struct Mat2 {
    std::array<Complex, 4> e{};
    Complex& at(int i, int j) { return e[static_cast<size_t>(2 * i + j)]; }
    const Complex& at(int i, int j) const { return e[static_cast<size_t>(2 * i + j)]; }
};

Mat2 pauli_x();
Mat2 pauli_z();
Mat2 identity2();

class Matrix8 {
  public:
    Complex& at(int i, int j) { return e_[static_cast<size_t>(kDim * i + j)]; }
    const Complex& at(int i, int j) const { return e_[static_cast<size_t>(kDim * i + j)]; }

    static Matrix8 zero() { return Matrix8{}; }
    static Matrix8 identity();

    Matrix8 adjoint() const;
    Complex trace() const;

    Matrix8& operator+=(const Matrix8& o);
    Matrix8& operator-=(const Matrix8& o);
    Matrix8& operator*=(double s);
    friend Matrix8 operator+(Matrix8 a, const Matrix8& b) { return a += b; }
    friend Matrix8 operator-(Matrix8 a, const Matrix8& b) { return a -= b; }
    friend Matrix8 operator*(double s, Matrix8 a) { return a *= s; }
    friend Matrix8 operator*(const Matrix8& a, const Matrix8& b);

    /// max_ij |a_ij - b_ij|
    static double max_abs_diff(const Matrix8& a, const Matrix8& b);
    double max_abs() const;
    bool is_hermitian(double tol) const;

  private:
    std::array<Complex, kDim * kDim> e_{};
};

Matrix8 kron3(const Mat2& a, const Mat2& b, const Mat2& c);

class PureState8 {
  public:
    /// Throws NotUnitNorm unless |amp| is 1 within 1e-12.
    explicit PureState8(const std::array<Complex, kDim>& amp);

    const std::array<Complex, kDim>& amplitudes() const { return amp_; }
    Matrix8 projector() const;

    static PureState8 ghz_plus();
    static PureState8 ghz_minus();
    static PureState8 w_state();
    /// Product state |a> x |b> x |c> from single-qubit amplitude pairs.
    static PureState8 product(const std::array<Complex, 2>& a,
                              const std::array<Complex, 2>& b,
                              const std::array<Complex, 2>& c);

  private:
    std::array<Complex, kDim> amp_;
};

/// A validated three-qubit density matrix. Construct with
/// make_density_matrix; the wrapped matrix is immutable afterwards.
class DensityMatrix {
  public:
    const Matrix8& matrix() const { return m_; }

  private:
    friend DensityMatrix make_density_matrix(const Matrix8& m);
    explicit DensityMatrix(const Matrix8& m) : m_(m) {}
    Matrix8 m_;
};

/// Validates Hermiticity (1e-10 entrywise), unit trace (1e-9) and positive
/// semidefiniteness (eigenvalues >= -1e-10), in that order. The thrown
/// Error names the violated invariant and the worst offending magnitude.
DensityMatrix make_density_matrix(const Matrix8& m);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi:
/// sweeps until the off-diagonal Frobenius norm is <= 1e-13, capped at 100
/// sweeps (NoConvergence beyond the cap). Throws NotHermitian when the input
/// is not Hermitian within 1e-10.
std::array<double, kDim> hermitian_eigenvalues(const Matrix8& m);

/// Partial transpose on one subsystem (1, 2 or 3, qubit 1 = most significant
/// bit). Hermiticity and trace are preserved; positivity is not.
Matrix8 partial_transpose(const Matrix8& m, int subsystem);
Matrix8 partial_transpose(const DensityMatrix& rho, int subsystem);

/// Re tr(M rho) for Hermitian M. The imaginary part of the trace is checked
/// to be below 1e-10.
double expectation(const Matrix8& observable, const DensityMatrix& rho);

/// |GHZ_+><GHZ_+| and |GHZ_-><GHZ_-|.
Matrix8 ghz_plus_projector();
Matrix8 ghz_minus_projector();

} // namespace ghzsym
