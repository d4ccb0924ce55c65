#include "ghzsym/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ghzsym {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NotHermitian: return "NotHermitian";
        case Errc::TraceNotOne: return "TraceNotOne";
        case Errc::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::NotUnitNorm: return "NotUnitNorm";
        case Errc::InvalidSubsystem: return "InvalidSubsystem";
        case Errc::OutsideTriangle: return "OutsideTriangle";
        case Errc::NoCrossing: return "NoCrossing";
        case Errc::AmbiguousCrossing: return "AmbiguousCrossing";
        case Errc::DegenerateWitness: return "DegenerateWitness";
        case Errc::LineCrossesUninteresting: return "LineCrossesUninteresting";
        case Errc::SignConvention: return "SignConvention";
        case Errc::TargetNotInClass: return "TargetNotInClass";
        case Errc::NoiseNotLower: return "NoiseNotLower";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::IoFailure: return "IoFailure";
    }
    return "UnknownError";
}

Mat2 pauli_x() {
    Mat2 m;
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    return m;
}

Mat2 pauli_z() {
    Mat2 m;
    m.at(0, 0) = 1.0;
    m.at(1, 1) = -1.0;
    return m;
}

Mat2 identity2() {
    Mat2 m;
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 1.0;
    return m;
}

Matrix8 Matrix8::identity() {
    Matrix8 m;
    for (int i = 0; i < kDim; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix8 Matrix8::adjoint() const {
    Matrix8 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

Complex Matrix8::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < kDim; ++i) t += at(i, i);
    return t;
}

Matrix8& Matrix8::operator+=(const Matrix8& o) {
    for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

Matrix8& Matrix8::operator-=(const Matrix8& o) {
    for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

Matrix8& Matrix8::operator*=(double s) {
    for (auto& v : e_) v *= s;
    return *this;
}

Matrix8 operator*(const Matrix8& a, const Matrix8& b) {
    Matrix8 r;
    for (int i = 0; i < kDim; ++i)
        for (int k = 0; k < kDim; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < kDim; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

double Matrix8::max_abs_diff(const Matrix8& a, const Matrix8& b) {
    double worst = 0.0;
    for (size_t k = 0; k < a.e_.size(); ++k)
        worst = std::max(worst, std::abs(a.e_[k] - b.e_[k]));
    return worst;
}

double Matrix8::max_abs() const {
    double worst = 0.0;
    for (const auto& v : e_) worst = std::max(worst, std::abs(v));
    return worst;
}

bool Matrix8::is_hermitian(double tol) const {
    for (int i = 0; i < kDim; ++i)
        for (int j = i; j < kDim; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    return true;
}

Matrix8 kron3(const Mat2& a, const Mat2& b, const Mat2& c) {
    Matrix8 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const int i1 = (i >> 2) & 1, i2 = (i >> 1) & 1, i3 = i & 1;
            const int j1 = (j >> 2) & 1, j2 = (j >> 1) & 1, j3 = j & 1;
            r.at(i, j) = a.at(i1, j1) * b.at(i2, j2) * c.at(i3, j3);
        }
    return r;
}

PureState8::PureState8(const std::array<Complex, kDim>& amp) : amp_(amp) {
    double n2 = 0.0;
    for (const auto& v : amp_) n2 += std::norm(v);
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "state norm is " << std::sqrt(n2);
        throw Error(Errc::NotUnitNorm, os.str());
    }
}

Matrix8 PureState8::projector() const {
    Matrix8 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) r.at(i, j) = amp_[static_cast<size_t>(i)] * std::conj(amp_[static_cast<size_t>(j)]);
    return r;
}

PureState8 PureState8::ghz_plus() {
    std::array<Complex, kDim> a{};
    a[0] = 1.0 / std::sqrt(2.0);
    a[7] = 1.0 / std::sqrt(2.0);
    return PureState8(a);
}

PureState8 PureState8::ghz_minus() {
    std::array<Complex, kDim> a{};
    a[0] = 1.0 / std::sqrt(2.0);
    a[7] = -1.0 / std::sqrt(2.0);
    return PureState8(a);
}

PureState8 PureState8::w_state() {
    std::array<Complex, kDim> a{};
    const double s = 1.0 / std::sqrt(3.0);
    a[1] = s; // |001>
    a[2] = s; // |010>
    a[4] = s; // |100>
    return PureState8(a);
}

PureState8 PureState8::product(const std::array<Complex, 2>& a,
                               const std::array<Complex, 2>& b,
                               const std::array<Complex, 2>& c) {
    std::array<Complex, kDim> amp{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                amp[static_cast<size_t>(4 * i + 2 * j + k)] =
                    a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] * c[static_cast<size_t>(k)];
    return PureState8(amp);
}

DensityMatrix make_density_matrix(const Matrix8& m) {
    double worst_herm = 0.0;
    for (int i = 0; i < kDim; ++i)
        for (int j = i; j < kDim; ++j)
            worst_herm = std::max(worst_herm, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    if (worst_herm > 1e-10) {
        std::ostringstream os;
        os << "worst |m[i][j] - conj(m[j][i])| = " << worst_herm;
        throw Error(Errc::NotHermitian, os.str());
    }

    const double trace_err = std::abs(m.trace() - Complex{1.0, 0.0});
    if (trace_err > 1e-9) {
        std::ostringstream os;
        os << "|tr - 1| = " << trace_err;
        throw Error(Errc::TraceNotOne, os.str());
    }

    const auto eig = hermitian_eigenvalues(m);
    if (eig[0] < -1e-10) {
        std::ostringstream os;
        os << "minimum eigenvalue = " << eig[0];
        throw Error(Errc::NotPositiveSemidefinite, os.str());
    }

    return DensityMatrix(m);
}

namespace {

double off_diagonal_norm(const Matrix8& m) {
    double s = 0.0;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            if (i != j) s += std::norm(m.at(i, j));
    return std::sqrt(s);
}

} // namespace

std::array<double, kDim> hermitian_eigenvalues(const Matrix8& m) {
    if (!m.is_hermitian(1e-10))
        throw Error(Errc::NotHermitian, "eigensolver input is not Hermitian within 1e-10");

    // Work on the exactly-Hermitian part so rotations stay consistent.
    Matrix8 a = m;
    for (int i = 0; i < kDim; ++i) {
        a.at(i, i) = Complex{a.at(i, i).real(), 0.0};
        for (int j = i + 1; j < kDim; ++j) {
            const Complex v = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = v;
            a.at(j, i) = std::conj(v);
        }
    }

    constexpr double kOffTol = 1e-13;
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kOffTol) break;
        for (int p = 0; p < kDim - 1; ++p) {
            for (int q = p + 1; q < kDim; ++q) {
                const Complex apq = a.at(p, q);
                const double beta = std::abs(apq);
                if (beta == 0.0) continue;
                // Unitary plane rotation annihilating a[p][q]. With
                // s = sigma * exp(-i arg(apq)) the problem reduces to the
                // real Jacobi equation (1 - t^2) |apq| + t (aqq - app) = 0;
                // take the smaller-magnitude root for stability.
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double tau = (app - aqq) / (2.0 * beta);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sigma = t * cs;
                const Complex phase = apq / beta; // exp(i arg(apq))
                const Complex s = sigma * std::conj(phase);
                const Complex sb = std::conj(s);

                // A <- J^dagger A J, J differing from identity in the
                // (p,q) plane: J[p][p]=c, J[p][q]=-conj(s), J[q][p]=s, J[q][q]=c.
                for (int k = 0; k < kDim; ++k) {
                    const Complex akp = a.at(k, p);
                    const Complex akq = a.at(k, q);
                    a.at(k, p) = cs * akp + s * akq;
                    a.at(k, q) = -sb * akp + cs * akq;
                }
                for (int k = 0; k < kDim; ++k) {
                    const Complex apk = a.at(p, k);
                    const Complex aqk = a.at(q, k);
                    a.at(p, k) = cs * apk + sb * aqk;
                    a.at(q, k) = -s * apk + cs * aqk;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
            }
        }
    }

    const double off = off_diagonal_norm(a);
    if (off > kOffTol) {
        std::ostringstream os;
        os << "off-diagonal norm " << off << " after " << sweep << " sweeps";
        throw Error(Errc::NoConvergence, os.str());
    }

    std::array<double, kDim> eig{};
    for (int i = 0; i < kDim; ++i) eig[static_cast<size_t>(i)] = a.at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

Matrix8 partial_transpose(const Matrix8& m, int subsystem) {
    if (subsystem < 1 || subsystem > 3)
        throw Error(Errc::InvalidSubsystem, "subsystem index must be 1, 2 or 3");
    const int bit = 3 - subsystem; // qubit 1 = most significant bit
    const int mask = 1 << bit;
    Matrix8 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            // Swap the subsystem bit between row and column index.
            const int ii = (i & ~mask) | (j & mask);
            const int jj = (j & ~mask) | (i & mask);
            r.at(i, j) = m.at(ii, jj);
        }
    return r;
}

Matrix8 partial_transpose(const DensityMatrix& rho, int subsystem) {
    return partial_transpose(rho.matrix(), subsystem);
}

double expectation(const Matrix8& observable, const DensityMatrix& rho) {
    if (!observable.is_hermitian(1e-10))
        throw Error(Errc::NotHermitian, "observable is not Hermitian within 1e-10");
    Complex t = 0.0;
    for (int i = 0; i < kDim; ++i)
        for (int k = 0; k < kDim; ++k) t += observable.at(i, k) * rho.matrix().at(k, i);
    if (std::abs(t.imag()) > 1e-10)
        throw Error(Errc::NotHermitian, "expectation value has imaginary part " +
                                            std::to_string(t.imag()));
    return t.real();
}

Matrix8 ghz_plus_projector() { return PureState8::ghz_plus().projector(); }
Matrix8 ghz_minus_projector() { return PureState8::ghz_minus().projector(); }

} // namespace ghzsym
