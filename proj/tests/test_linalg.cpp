#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ghzsym/linalg.hpp"
#include "ghzsym/symmetry.hpp"
#include "test_util.hpp"

using namespace ghzsym;
using testutil::error_code_of;

namespace {

Matrix8 scaled_identity(double s) {
    Matrix8 m = Matrix8::identity();
    m *= s;
    return m;
}

Mat2 random_hermitian2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat2 m;
    m.at(0, 0) = gauss(rng);
    m.at(1, 1) = gauss(rng);
    const Complex off(gauss(rng), gauss(rng));
    m.at(0, 1) = off;
    m.at(1, 0) = std::conj(off);
    return m;
}

Mat2 transpose2(const Mat2& m) {
    Mat2 t;
    t.at(0, 0) = m.at(0, 0);
    t.at(0, 1) = m.at(1, 0);
    t.at(1, 0) = m.at(0, 1);
    t.at(1, 1) = m.at(1, 1);
    return t;
}

} // namespace

TEST_CASE("kron3 reproduces the fixed basis order") {
    CHECK(Matrix8::max_abs_diff(kron3(identity2(), identity2(), identity2()),
                                Matrix8::identity()) == 0.0);

    const Matrix8 flip = kron3(pauli_x(), pauli_x(), pauli_x());
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            CHECK(flip.at(i, j) == Complex(i == 7 - j ? 1.0 : 0.0, 0.0));

    const Matrix8 z_first = kron3(pauli_z(), identity2(), identity2());
    for (int i = 0; i < kDim; ++i) CHECK(z_first.at(i, i) == Complex(i < 4 ? 1.0 : -1.0, 0.0));
}

TEST_CASE("pure states") {
    const auto& ghz = PureState8::ghz_plus().amplitudes();
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(ghz[0] == Complex(r, 0.0));
    CHECK(ghz[7] == Complex(r, 0.0));
    for (int i = 1; i < 7; ++i) CHECK(ghz[static_cast<size_t>(i)] == Complex(0.0, 0.0));
    CHECK(PureState8::ghz_minus().amplitudes()[7] == Complex(-r, 0.0));

    const auto& w = PureState8::w_state().amplitudes();
    const double t = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(w[1] - t) < 1e-15);
    CHECK(std::abs(w[2] - t) < 1e-15);
    CHECK(std::abs(w[4] - t) < 1e-15);
    CHECK(w[0] == Complex(0.0, 0.0));
    CHECK(w[7] == Complex(0.0, 0.0));

    const auto basis01 = PureState8::product({Complex(1.0), Complex(0.0)},
                                             {Complex(1.0), Complex(0.0)},
                                             {Complex(0.0), Complex(1.0)});
    CHECK(basis01.amplitudes()[1] == Complex(1.0, 0.0));

    std::array<Complex, kDim> bad{};
    bad[0] = Complex(0.7, 0.0);
    CHECK(error_code_of([&] { PureState8{bad}; }) == Errc::NotUnitNorm);

    // Projector of a random pure state: idempotent, trace one.
    auto rng = testutil::make_rng(11);
    const Matrix8 p = testutil::random_pure(rng).projector();
    CHECK(Matrix8::max_abs_diff(p * p, p) < 1e-14);
    CHECK(std::abs(p.trace() - Complex(1.0)) < 1e-14);
}

TEST_CASE("density matrix validation names the violated invariant") {
    CHECK_NOTHROW(make_density_matrix(scaled_identity(0.125)));
    CHECK_NOTHROW(make_density_matrix(PureState8::ghz_plus().projector()));

    // Asymmetric off-diagonal entry: fails Hermiticity first.
    Matrix8 asym = scaled_identity(0.125);
    asym.at(0, 7) = 0.2;
    CHECK(error_code_of([&] { make_density_matrix(asym); }) == Errc::NotHermitian);

    CHECK(error_code_of([&] { make_density_matrix(scaled_identity(0.25)); }) ==
          Errc::TraceNotOne);

    // Hermitian completion of the same entry: the 2x2 corner block has the
    // negative eigenvalue 1/8 - 0.2.
    Matrix8 indefinite = scaled_identity(0.125);
    indefinite.at(0, 7) = 0.2;
    indefinite.at(7, 0) = 0.2;
    try {
        make_density_matrix(indefinite);
        FAIL("expected NotPositiveSemidefinite");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPositiveSemidefinite);
        CHECK(std::string(e.what()).find("minimum eigenvalue") != std::string::npos);
    }
}

TEST_CASE("eigenvalues of known matrices") {
    const auto ones = hermitian_eigenvalues(Matrix8::identity());
    for (double v : ones) CHECK(std::abs(v - 1.0) < 1e-13);

    const auto proj = hermitian_eigenvalues(PureState8::ghz_plus().projector());
    for (int i = 0; i < 7; ++i) CHECK(std::abs(proj[static_cast<size_t>(i)]) < 1e-12);
    CHECK(std::abs(proj[7] - 1.0) < 1e-12);

    // Symmetric-family state with a closed-form spectrum: six values 1/16
    // plus the corner pair 1/16 and 9/16.
    const double sqrt3 = std::sqrt(3.0);
    const auto spectrum =
        hermitian_eigenvalues(reconstruct_state({0.25, sqrt3 / 8.0}).matrix());
    for (int i = 0; i < 7; ++i)
        CHECK(std::abs(spectrum[static_cast<size_t>(i)] - 0.0625) < 1e-12);
    CHECK(std::abs(spectrum[7] - 0.5625) < 1e-12);

    Matrix8 not_herm;
    not_herm.at(0, 1) = 1.0;
    CHECK(error_code_of([&] { hermitian_eigenvalues(not_herm); }) == Errc::NotHermitian);
}

TEST_CASE("eigenvalues against an independent characteristic-polynomial oracle") {
    auto rng = testutil::make_rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix8 h = testutil::random_hermitian(rng);
        const auto eig = hermitian_eigenvalues(h);

        CHECK(std::is_sorted(eig.begin(), eig.end()));
        double sum = 0.0;
        for (double v : eig) sum += v;
        CHECK(std::abs(sum - h.trace().real()) < 1e-9);

        for (int k = 0; k < kDim; ++k) {
            const Matrix8 shifted = h - scaled_identity(eig[static_cast<size_t>(k)]);
            double scale = 1.0;
            for (int i = 0; i < kDim; ++i)
                if (i != k)
                    scale *= std::max(
                        std::abs(eig[static_cast<size_t>(i)] - eig[static_cast<size_t>(k)]),
                        1e-6);
            CHECK(std::abs(testutil::lu_det(shifted)) <= 1e-8 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("random density matrices are valid and normalized") {
    auto rng = testutil::make_rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = testutil::random_density(rng);
        const auto eig = hermitian_eigenvalues(rho.matrix());
        double sum = 0.0;
        for (double v : eig) {
            CHECK(v >= -1e-10);
            sum += v;
        }
        CHECK(std::abs(sum - 1.0) < 1e-9);
    }
}

TEST_CASE("partial transpose") {
    auto rng = testutil::make_rng(41);

    // Diagonal states are fixed points.
    const DensityMatrix rho_r = reconstruct_state({0.0, -1.0 / (4.0 * std::sqrt(3.0))});
    for (int s = 1; s <= 3; ++s)
        CHECK(Matrix8::max_abs_diff(partial_transpose(rho_r, s), rho_r.matrix()) == 0.0);

    // Involution, exactly.
    const DensityMatrix rho = testutil::random_density(rng);
    for (int s = 1; s <= 3; ++s)
        CHECK(Matrix8::max_abs_diff(partial_transpose(partial_transpose(rho.matrix(), s), s),
                                    rho.matrix()) == 0.0);

    // On tensor products it transposes exactly one factor.
    const Mat2 a = random_hermitian2(rng);
    const Mat2 b = random_hermitian2(rng);
    const Mat2 c = random_hermitian2(rng);
    const Matrix8 abc = kron3(a, b, c);
    CHECK(Matrix8::max_abs_diff(partial_transpose(abc, 1), kron3(transpose2(a), b, c)) < 1e-15);
    CHECK(Matrix8::max_abs_diff(partial_transpose(abc, 2), kron3(a, transpose2(b), c)) < 1e-15);
    CHECK(Matrix8::max_abs_diff(partial_transpose(abc, 3), kron3(a, b, transpose2(c))) < 1e-15);

    // The symmetric family has identical partial-transpose spectra for all
    // three subsystem choices.
    for (const SymCoords coords : {SymCoords{0.1, 0.0}, SymCoords{0.2, 0.3},
                                   SymCoords{-0.3, 0.35}}) {
        const DensityMatrix sym = reconstruct_state(coords);
        const auto s1 = hermitian_eigenvalues(partial_transpose(sym, 1));
        const auto s2 = hermitian_eigenvalues(partial_transpose(sym, 2));
        const auto s3 = hermitian_eigenvalues(partial_transpose(sym, 3));
        for (int i = 0; i < kDim; ++i) {
            CHECK(std::abs(s1[static_cast<size_t>(i)] - s2[static_cast<size_t>(i)]) < 1e-12);
            CHECK(std::abs(s1[static_cast<size_t>(i)] - s3[static_cast<size_t>(i)]) < 1e-12);
        }
    }

    // Closed-form minimum: 1/8 - y/(2 sqrt 3) - x at (1/4, 0) gives -1/8.
    // That point lies outside the physical triangle, so assemble the
    // parametrized form directly instead of going through reconstruction.
    Matrix8 outside = scaled_identity(0.125);
    outside.at(0, 7) = 0.25;
    outside.at(7, 0) = 0.25;
    const auto pt = hermitian_eigenvalues(partial_transpose(outside, 1));
    CHECK(std::abs(pt[0] + 0.125) < 1e-12);

    CHECK(error_code_of([&] { partial_transpose(rho, 0); }) == Errc::InvalidSubsystem);
    CHECK(error_code_of([&] { partial_transpose(rho, 4); }) == Errc::InvalidSubsystem);
}

TEST_CASE("expectation values") {
    auto rng = testutil::make_rng(53);
    const DensityMatrix mixed = make_density_matrix(scaled_identity(0.125));
    const DensityMatrix ghz = make_density_matrix(PureState8::ghz_plus().projector());

    CHECK(std::abs(expectation(Matrix8::identity(), testutil::random_density(rng)) - 1.0) <
          1e-12);
    CHECK(std::abs(expectation(ghz_plus_projector(), mixed) - 0.125) < 1e-12);

    const Matrix8 genuine = scaled_identity(0.5) - ghz_plus_projector();
    CHECK(std::abs(expectation(genuine, ghz) + 0.5) < 1e-12);

    // Linear in the observable and in the state.
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix8 m1 = testutil::random_hermitian(rng);
        const Matrix8 m2 = testutil::random_hermitian(rng);
        const DensityMatrix r1 = testutil::random_density(rng);
        const DensityMatrix r2 = testutil::random_density(rng);
        const double s = 2.0 * testutil::uniform01(rng) - 1.0;
        const double t = testutil::uniform01(rng);

        const Matrix8 combo = (s * m1) + ((1.0 - s) * m2);
        CHECK(std::abs(expectation(combo, r1) - s * expectation(m1, r1) -
                       (1.0 - s) * expectation(m2, r1)) < 1e-12);

        const DensityMatrix mix =
            make_density_matrix((t * r1.matrix()) + ((1.0 - t) * r2.matrix()));
        CHECK(std::abs(expectation(m1, mix) - t * expectation(m1, r1) -
                       (1.0 - t) * expectation(m1, r2)) < 1e-12);
    }

    Matrix8 not_herm;
    not_herm.at(2, 3) = Complex(0.0, 1.0);
    CHECK(error_code_of([&] { expectation(not_herm, mixed); }) == Errc::NotHermitian);
}

TEST_CASE("ghz projectors match the pure-state construction") {
    CHECK(Matrix8::max_abs_diff(ghz_plus_projector(), PureState8::ghz_plus().projector()) ==
          0.0);
    CHECK(Matrix8::max_abs_diff(ghz_minus_projector(), PureState8::ghz_minus().projector()) ==
          0.0);
}
