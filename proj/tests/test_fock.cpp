#include <cvclifford/fock.hpp>
#include <cvclifford/fock_oracle.hpp>

#include <doctest.h>

#include "helpers.hpp"

using namespace cvc;
using fock::FockOperators;
using fock::FockState;

namespace {

VectorX<double> make_grid(double half_width, int points) {
    VectorX<double> g(points);
    for (int i = 0; i < points; ++i) {
        g(i) = -half_width + 2.0 * half_width * i / (points - 1);
    }
    return g;
}

double trapezoid_moment(const VectorX<double>& grid, const VectorX<double>& pdf, int power) {
    double acc = 0;
    for (Index i = 0; i + 1 < grid.size(); ++i) {
        const double fa = std::pow(grid(i), power) * pdf(i);
        const double fb = std::pow(grid(i + 1), power) * pdf(i + 1);
        acc += 0.5 * (fa + fb) * (grid(i + 1) - grid(i));
    }
    return acc;
}

} // namespace

TEST_CASE("canonical commutator holds on the low-photon block") {
    FockOperators ops(40);
    fock::MatrixXcd comm = ops.q * ops.p - ops.p * ops.q;
    const Index d = 35; // top 5 levels excluded
    fock::MatrixXcd expect =
        std::complex<double>(0, 1) * fock::MatrixXcd::Identity(40, 40);
    CHECK((comm - expect).topLeftCorner(d, d).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("vacuum and squeezed quadrature moments") {
    FockOperators ops(60);
    auto st = fock::vacuum(1, 60);
    auto cov = fock::covariance_matrix(ops, st);
    CHECK(cov(0, 0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(cov(1, 1) == doctest::Approx(0.5).epsilon(1e-10));

    for (double r : {0.2, 0.5}) {
        auto sq = fock::vacuum(1, 60);
        fock::apply_single_mode_hamiltonian(ops, sq, 0, squeeze_hamiltonian(r));
        fock::require_trustworthy(sq);
        auto c2 = fock::covariance_matrix(ops, sq);
        CHECK(c2(0, 0) == doctest::Approx(0.5 * std::exp(-2 * r)).epsilon(1e-6));
        CHECK(c2(1, 1) == doctest::Approx(0.5 * std::exp(2 * r)).epsilon(1e-6));
    }
}

TEST_CASE("fourier fixes the vacuum up to phase; P(0) is the identity") {
    auto u = fock::build_gate_unitary(fourier_hamiltonian(), 40);
    fock::VectorXcd v0 = fock::VectorXcd::Zero(40);
    v0(0) = 1.0;
    CHECK(std::abs((u * v0).dot(v0)) == doctest::Approx(1.0).epsilon(1e-10));

    auto id = fock::build_gate_unitary(phase_hamiltonian(0.0), 20);
    CHECK((id - fock::MatrixXcd::Identity(20, 20)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("built unitaries are unitary on the low-photon block") {
    auto u = fock::build_gate_unitary(squeeze_hamiltonian(0.4), 32);
    fock::MatrixXcd g = u.adjoint() * u;
    CHECK((g - fock::MatrixXcd::Identity(32, 32)).topLeftCorner(27, 27).cwiseAbs().maxCoeff() <=
          1e-8);
    CHECK_THROWS_AS(fock::build_gate_unitary(sum_hamiltonian(), 60), std::invalid_argument);
}

TEST_CASE("SUM adds the control position onto the target") {
    FockOperators ops(30);
    auto st = fock::vacuum(2, 30);
    fock::apply_single_mode_hamiltonian(ops, st, 0, displace_hamiltonian(0.9, 0.0));
    fock::apply_single_mode_hamiltonian(ops, st, 1, displace_hamiltonian(0.4, 0.0));
    fock::apply_scaled_sum(ops, st, 0, 1, 1.0);
    auto mu = fock::mean_vector(ops, st);
    CHECK(mu(0) == doctest::Approx(0.9).epsilon(1e-8));
    CHECK(mu(2) == doctest::Approx(1.3).epsilon(1e-8));

    // dense route agrees with the factored route
    FockOperators ops12(12);
    auto u = fock::build_gate_unitary(sum_hamiltonian(), 12);
    auto st2 = fock::vacuum(2, 12);
    fock::apply_single_mode_hamiltonian(ops12, st2, 0, displace_hamiltonian(0.3, 0.1));
    auto direct = st2;
    fock::apply_scaled_sum(ops12, direct, 0, 1, 1.0);
    fock::VectorXcd dense = u * st2.psi;
    CHECK((dense - direct.psi).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("oracle matches the engine on random two-mode circuits") {
    FockOperators ops(60);
    Rng rng(1001);
    for (int trial = 0; trial < 5; ++trial) {
        Circuit c = testutil::random_oracle_circuit(rng, 2, 8);
        auto st = fock::run_unitary(ops, c);
        fock::require_trustworthy(st);
        auto rep = moments(c);
        CHECK((fock::mean_vector(ops, st) - rep.mean).cwiseAbs().maxCoeff() <= 1e-5);
        CHECK((fock::covariance_matrix(ops, st) - rep.covariance).cwiseAbs().maxCoeff() <= 1e-4);
    }
}

TEST_CASE("truncation convergence: cutoff 40 vs 60 across a corpus") {
    Rng rng(55);
    FockOperators ops40(40), ops60(60);
    for (int trial = 0; trial < 6; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.below(2));
        Circuit c = testutil::random_oracle_circuit(rng, n, 6);
        auto a = fock::run_unitary(ops40, c);
        auto b = fock::run_unitary(ops60, c);
        CHECK((fock::mean_vector(ops40, a) - fock::mean_vector(ops60, b)).cwiseAbs().maxCoeff() <
              1e-6);
        CHECK((fock::covariance_matrix(ops40, a) - fock::covariance_matrix(ops60, b))
                  .cwiseAbs()
                  .maxCoeff() < 1e-6);
    }
}

TEST_CASE("homodyne pdf: vacuum, squeezed, and lossy variances") {
    FockOperators ops(60);
    const auto grid = make_grid(8.0, 1601);

    auto vac = fock::vacuum(1, 60);
    auto pdf = fock::homodyne_pdf(vac, 0, Quadrature::q, grid);
    CHECK(trapezoid_moment(grid, pdf, 0) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(trapezoid_moment(grid, pdf, 2) == doctest::Approx(0.5).epsilon(1e-6));

    auto sq = fock::vacuum(1, 60);
    fock::apply_single_mode_hamiltonian(ops, sq, 0, squeeze_hamiltonian(0.4));
    pdf = fock::homodyne_pdf(sq, 0, Quadrature::q, grid);
    CHECK(trapezoid_moment(grid, pdf, 2) == doctest::Approx(0.5 * std::exp(-0.8)).epsilon(1e-6));
    pdf = fock::homodyne_pdf(sq, 0, Quadrature::p, grid);
    CHECK(trapezoid_moment(grid, pdf, 2) == doctest::Approx(0.5 * std::exp(0.8)).epsilon(1e-6));

    const double eta = 0.5;
    auto lossy = fock::apply_loss(ops, sq, 0, eta);
    pdf = fock::homodyne_pdf(lossy, 0, Quadrature::q, grid);
    const double expect = eta * 0.5 * std::exp(-0.8) + (1 - eta) * 0.5;
    CHECK(trapezoid_moment(grid, pdf, 2) == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("loss and partial trace produce the engine's purity") {
    FockOperators ops(50);
    auto st = fock::vacuum(1, 50);
    fock::apply_single_mode_hamiltonian(ops, st, 0, squeeze_hamiltonian(0.5));
    auto mixed = fock::apply_loss(ops, st, 0, 0.5);
    GaussianState g = loss_channel(apply_local(vacuum_state(1), squeeze(0.5), {0}), 0, 0.5);
    CHECK(fock::purity(mixed) == doctest::Approx(purity(g)).epsilon(1e-6));

    // one arm of a SUM-entangled squeezed pair is mixed
    FockOperators ops40(40);
    auto pair = fock::vacuum(2, 40);
    fock::apply_single_mode_hamiltonian(ops40, pair, 0, squeeze_hamiltonian(0.4));
    fock::apply_single_mode_hamiltonian(ops40, pair, 1, squeeze_hamiltonian(0.4));
    fock::apply_scaled_sum(ops40, pair, 0, 1, 1.0);
    auto arm = fock::trace_out_mode(pair, 0);
    const double oracle_purity = fock::purity(arm);
    CHECK(oracle_purity < 1.0);
    GaussianState ge = vacuum_state(2);
    ge = apply_local(ge, squeeze(0.4), {0});
    ge = apply_local(ge, squeeze(0.4), {1});
    ge = apply_local(ge, sum_gate(), {0, 1});
    CHECK(purity(trace_out(ge, 0)) == doctest::Approx(oracle_purity).epsilon(1e-6));
}

TEST_CASE("expectation evaluates quadratic polynomials") {
    FockOperators ops(40);
    auto st = fock::vacuum(1, 40);
    fock::apply_single_mode_hamiltonian(ops, st, 0, squeeze_hamiltonian(0.3));
    MatrixX<double> a = MatrixX<double>::Zero(2, 2);
    a(0, 0) = 2.0; // (1/2) * 2 q^2 = q^2
    CHECK(fock::expectation(ops, st, a, VectorX<double>::Zero(2)) ==
          doctest::Approx(0.5 * std::exp(-0.6)).epsilon(1e-8));
}

TEST_CASE("budget guards reject oversized requests and cutoff mixing") {
    CHECK_THROWS_AS(fock::vacuum(3, 70), std::invalid_argument);
    FockOperators ops(60);
    auto big = fock::vacuum(2, 60); // density matrix would exceed the dense budget
    CHECK_THROWS_AS(fock::apply_loss(ops, big, 0, 0.5), std::invalid_argument);
    FockOperators smaller(40);
    CHECK_THROWS_AS(fock::apply_single_mode_hamiltonian(smaller, big, 0, fourier_hamiltonian()),
                    std::invalid_argument);
}
