#include <doctest.h>

#include <cmath>

#include "lrw/rng.hpp"
#include "lrw/spectrum.hpp"
#include "lrw/synthdgp.hpp"

using namespace lrw;

TEST_CASE("preset blocks carry the documented entries") {
    const DgpSpec th2 = dgp_preset(DgpKind::thDGP2, 20, 1);
    CHECK(th2.g0.dim() == 20);
    for (int r = 0; r < 20; ++r) CHECK(th2.g0(r, r) == Complex(1.0, 0.0));
    CHECK(th2.g0(2, 8) == Complex(0.5, 0.2));
    CHECK(th2.g0(8, 2) == Complex(0.5, -0.2));
    CHECK(th2.g0(4, 13) == Complex(0.4, 0.2));
    int nonzero_offdiag = 0;
    for (int r = 0; r < 20; ++r)
        for (int s = 0; s < 20; ++s)
            if (r != s && th2.g0(r, s) != Complex(0.0, 0.0)) ++nonzero_offdiag;
    CHECK(nonzero_offdiag == 4);

    const DgpSpec th1 = dgp_preset(DgpKind::thDGP1, 20, 1);
    CHECK(th1.g0(0, 0) == Complex(0.312, 0.0));
    CHECK(th1.g0(1, 1) == Complex(0.159, 0.0));
    CHECK(th1.g0(0, 5) == Complex(-0.208, -0.064));
    CHECK(th1.g0(2, 19) == Complex(-0.074, 0.015));
    CHECK(th1.g0(10, 13) == Complex(-0.105, -0.013));

    const DgpSpec d3 = dgp_preset(DgpKind::DGP3, 20, 1);
    for (int r = 0; r < 19; ++r) CHECK(d3.p0(r, r + 1) == Complex(0.2, 0.1));
    CHECK(d3.p0(0, 2) == Complex(0.0, 0.0));
    // g0 is the inverse of the banded precision
    CHECK((d3.g0.mat() * d3.p0.mat() - Eigen::MatrixXcd::Identity(20, 20)).norm() <= 1e-10);

    // block structure for p = 40: two copies on the diagonal, zero across
    const DgpSpec th3 = dgp_preset(DgpKind::thDGP3, 40, 1);
    CHECK((th3.g0.mat().topLeftCorner(20, 20) - th3.g0.mat().bottomRightCorner(20, 20)).norm() ==
          0.0);
    CHECK(th3.g0.mat().topRightCorner(20, 20).norm() == 0.0);
    CHECK(th3.g0(20, 21) == Complex(0.4, 0.2));

    CHECK_THROWS_AS(dgp_preset(DgpKind::thDGP1, 30, 1), InvalidDimension);
    CHECK_THROWS_AS(dgp_preset(DgpKind::thDGP1, 0, 1), InvalidDimension);
}

TEST_CASE("memory parameters are drawn from [0.1, 0.45] per seed") {
    const DgpSpec a = dgp_preset(DgpKind::thDGP2, 20, 5);
    const DgpSpec b = dgp_preset(DgpKind::thDGP2, 20, 5);
    const DgpSpec c = dgp_preset(DgpKind::thDGP2, 20, 6);
    CHECK(a.d0 == b.d0);
    CHECK(a.d0 != c.d0);
    for (int r = 0; r < 20; ++r) {
        CHECK(a.d0[r] >= 0.1);
        CHECK(a.d0[r] <= 0.45);
    }
}

TEST_CASE("custom specs validate and derive the counterpart matrix") {
    Eigen::VectorXd d(2);
    d << 0.2, 0.3;
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(2, 2);
    g(0, 1) = g(1, 0) = 0.5;
    const DgpSpec spec = dgp_custom(d, HermitianMatrix(g), false);
    CHECK((spec.p0.mat() * spec.g0.mat() - Eigen::MatrixXcd::Identity(2, 2)).norm() <= 1e-12);

    Eigen::VectorXd bad(2);
    bad << 0.2, 0.6;
    CHECK_THROWS_AS(dgp_custom(bad, HermitianMatrix(g), false), Error);
}

TEST_CASE("simulation is deterministic and validates N") {
    const DgpSpec spec = dgp_preset(DgpKind::thDGP2, 20, 1);
    CHECK_THROWS_AS(simulate(spec, 7, 1), Error);
    CHECK_THROWS_AS(simulate(spec, 6, 1), Error);
    const MultivariateSeries a = simulate(spec, 64, 9);
    const MultivariateSeries b = simulate(spec, 64, 9);
    const MultivariateSeries c = simulate(spec, 64, 10);
    CHECK(a.values() == b.values());
    CHECK(a.values() != c.values());

    // frequency-domain synthesis drops the zero frequency: exact zero mean
    for (int r = 0; r < 20; ++r)
        CHECK(std::abs(a.values().col(r).mean()) <=
              1e-12 * a.values().col(r).cwiseAbs().maxCoeff());
}

TEST_CASE("short-memory identity-spectrum calibration") {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(2);
    const HermitianMatrix g =
        hermitian_unchecked(Eigen::MatrixXcd::Identity(2, 2) / (2.0 * M_PI));
    const DgpSpec spec = dgp_custom(d, g, false);
    const std::int64_t n = 16384;
    const MultivariateSeries x = simulate(spec, n, 3);
    for (int r = 0; r < 2; ++r) {
        const double var = x.values().col(r).squaredNorm() / static_cast<double>(n);
        CHECK(std::abs(var - 1.0) < 0.1);
    }
    // diagonal spectrum: cross correlation within 3/sqrt(N)
    const double corr = (x.values().col(0).dot(x.values().col(1)) / static_cast<double>(n));
    CHECK(std::abs(corr) < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("expected periodogram matches the target spectral density") {
    // E I(lambda_j) = f(lambda_j) exactly under the spectral synthesis; check
    // a Monte Carlo average entrywise at a few frequencies.
    Eigen::VectorXd d(2);
    d << 0.3, 0.1;
    Eigen::MatrixXcd gm = Eigen::MatrixXcd::Identity(2, 2);
    gm(0, 1) = Complex(0.4, 0.2);
    gm(1, 0) = std::conj(gm(0, 1));
    const DgpSpec spec = dgp_custom(d, HermitianMatrix(gm), false);
    const std::int64_t n = 128;
    const int reps = 400;
    Eigen::MatrixXcd acc1 = Eigen::MatrixXcd::Zero(2, 2);
    Eigen::MatrixXcd acc5 = Eigen::MatrixXcd::Zero(2, 2);
    for (int rep = 0; rep < reps; ++rep) {
        const MultivariateSeries x = simulate(spec, n, 100 + static_cast<std::uint64_t>(rep));
        const PeriodogramSet pg = periodogram(x, 6);
        acc1 += pg.matrix(0).mat() / static_cast<double>(reps);
        acc5 += pg.matrix(4).mat() / static_cast<double>(reps);
    }
    auto f_at = [&](std::int64_t j) {
        const double lambda = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
        Eigen::MatrixXcd lam = Eigen::MatrixXcd::Zero(2, 2);
        lam(0, 0) = std::pow(lambda, -d[0]);
        lam(1, 1) = std::pow(lambda, -d[1]);
        return (lam * gm * lam).eval();
    };
    CHECK((acc1 - f_at(1)).norm() <= 0.15 * f_at(1).norm());
    CHECK((acc5 - f_at(5)).norm() <= 0.15 * f_at(5).norm());
}

TEST_CASE("log-periodogram regression recovers the memory parameter") {
    Eigen::VectorXd d(1);
    d << 0.3;
    const DgpSpec spec = dgp_custom(d, HermitianMatrix::identity(1), false);
    const std::int64_t n = 8192;
    const MultivariateSeries x = simulate(spec, n, 11);
    const std::int64_t k = 512;
    const PeriodogramSet pg = periodogram(x, k);
    // regress log I_j on -2 log lambda_j
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::int64_t j = 0; j < k; ++j) {
        const double xj = -2.0 * std::log(pg.freqs()[j]);
        const double yj = std::log(pg.rr(j, 0));
        sx += xj;
        sy += yj;
        sxx += xj * xj;
        sxy += xj * yj;
    }
    const double kd = static_cast<double>(k);
    const double slope = (sxy - sx * sy / kd) / (sxx - sx * sx / kd);
    CHECK(std::abs(slope - 0.3) < 0.1);
}
