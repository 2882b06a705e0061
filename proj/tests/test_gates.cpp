#include <cvclifford/gates.hpp>

#include <doctest.h>

#include "helpers.hpp"

#include <numbers>

using namespace cvc;

namespace {
double affine_distance(const SymplecticAffine& a, const SymplecticAffine& b) {
    return std::max((a.S - b.S).cwiseAbs().maxCoeff(), (a.d - b.d).cwiseAbs().maxCoeff());
}
}

TEST_CASE("pauli displacements") {
    auto x = pauli_x(5.0);
    CHECK(x.d(0) == 5.0);
    CHECK(x.d(1) == 0.0);
    CHECK(x.S == MatrixX<double>::Identity(2, 2));
    CHECK(affine_distance(pauli_x(0.0), SymplecticAffine::identity(1)) == 0.0);

    auto z = pauli_z(3.0);
    CHECK(z.d(0) == 0.0);
    CHECK(z.d(1) == 3.0);

    // projectively commuting: phases are not represented
    CHECK(affine_distance(compose(pauli_x(1.2), pauli_z(-0.7)),
                          compose(pauli_z(-0.7), pauli_x(1.2))) == 0.0);

    CHECK_THROWS_AS(pauli_x(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    CHECK_THROWS_AS(pauli_z(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("fourier conjugation table") {
    auto f = fourier();
    MatrixX<double> expected(2, 2);
    expected << 0, -1, 1, 0;
    CHECK((f.S - expected).cwiseAbs().maxCoeff() == 0.0);

    // X(q) -> Z(q)
    CHECK(affine_distance(conjugate(pauli_x(1.3), f), pauli_z(1.3)) <= 1e-12);
    // Z(p) -> X(p)^-1
    CHECK(affine_distance(conjugate(pauli_z(0.8), f), pauli_x(-0.8)) <= 1e-12);
    // F^4 = I
    auto f4 = compose(f, compose(f, compose(f, f)));
    CHECK(affine_distance(f4, SymplecticAffine::identity(1)) <= 1e-12);
    // vacuum is rotation invariant
    auto v = apply_affine(vacuum_state(1), f);
    CHECK((v.sigma - vacuum_state(1).sigma).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("phase gate conjugation table") {
    const double eta = 0.9;
    auto p = phase_gate(eta);
    CHECK(p.S(1, 0) == eta);
    // X(q) -> X(q)Z(eta q) projectively
    auto c = conjugate(pauli_x(1.1), p);
    CHECK(c.d(0) == doctest::Approx(1.1).epsilon(1e-15));
    CHECK(c.d(1) == doctest::Approx(eta * 1.1).epsilon(1e-15));
    // Z(p) -> Z(p)
    CHECK(affine_distance(conjugate(pauli_z(0.4), p), pauli_z(0.4)) <= 1e-15);
    CHECK(affine_distance(phase_gate(0.0), SymplecticAffine::identity(1)) == 0.0);
}

TEST_CASE("squeezer") {
    CHECK(affine_distance(squeeze(0.0), SymplecticAffine::identity(1)) == 0.0);
    auto s = apply_affine(vacuum_state(1), squeeze(0.25));
    CHECK(s.sigma(0, 0) == doctest::Approx(0.5 * std::exp(-0.5)).epsilon(1e-14));
    CHECK(s.sigma(1, 1) == doctest::Approx(0.5 * std::exp(0.5)).epsilon(1e-14));
    CHECK(affine_distance(compose(squeeze(0.37), squeeze(-0.37)),
                          SymplecticAffine::identity(1)) <= 1e-15);
}

TEST_CASE("SUM gate conjugation reproduces all four displacement actions") {
    auto s = sum_gate();
    // X1(q) ⊗ I -> X1(q) ⊗ X2(q)
    auto x1 = embed(pauli_x(0.9), 2, {0});
    VectorX<double> d = conjugate(x1, s).d;
    CHECK(d(0) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(d(1) == 0.0);
    CHECK(d(2) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(d(3) == 0.0);
    // Z1(p) unchanged
    auto z1 = embed(pauli_z(0.5), 2, {0});
    CHECK((conjugate(z1, s).d - z1.d).cwiseAbs().maxCoeff() <= 1e-15);
    // X2(q) unchanged
    auto x2 = embed(pauli_x(0.7), 2, {1});
    CHECK((conjugate(x2, s).d - x2.d).cwiseAbs().maxCoeff() <= 1e-15);
    // I ⊗ Z2(p) -> Z1(p)^-1 ⊗ Z2(p)
    auto z2 = embed(pauli_z(0.6), 2, {1});
    d = conjugate(z2, s).d;
    CHECK(d(1) == doctest::Approx(-0.6).epsilon(1e-15));
    CHECK(d(3) == doctest::Approx(0.6).epsilon(1e-15));

    // generator map: q_t += q_c, p_c -= p_t
    CHECK(s.S(2, 0) == 1.0);
    CHECK(s.S(1, 3) == -1.0);

    CHECK_THROWS_AS(sum_gate(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(sum_gate(0, 2), std::out_of_range);
}

TEST_CASE("beamsplitter") {
    CHECK(affine_distance(beamsplitter(0.0), SymplecticAffine::identity(2)) == 0.0);
    auto swap = beamsplitter(std::numbers::pi / 2);
    CHECK(swap.S(0, 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(swap.S(2, 0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(symplectic_error(beamsplitter(0.77).S) <= 1e-15);
    CHECK_THROWS_AS(beamsplitter(0.3, 1, 1), std::invalid_argument);
}

TEST_CASE("generator route reproduces every named gate") {
    CHECK(affine_distance(from_quadratic_hamiltonian(fourier_hamiltonian()), fourier()) <= 1e-12);
    CHECK(affine_distance(from_quadratic_hamiltonian(phase_hamiltonian(0.8)), phase_gate(0.8)) <=
          1e-12);
    CHECK(affine_distance(from_quadratic_hamiltonian(squeeze_hamiltonian(0.4)), squeeze(0.4)) <=
          1e-12);
    CHECK(affine_distance(from_quadratic_hamiltonian(sum_hamiltonian()), sum_gate()) <= 1e-12);
    CHECK(affine_distance(from_quadratic_hamiltonian(beamsplitter_hamiltonian(0.6)),
                          beamsplitter(0.6)) <= 1e-12);
    CHECK(affine_distance(from_quadratic_hamiltonian(displace_hamiltonian(1.0, -2.0)),
                          displace(1.0, -2.0)) <= 1e-12);
}

TEST_CASE("pure linear generators reduce to translations") {
    // H = -q_target p gives X(q * t): b = (0, -1), t = q
    QuadraticHamiltonian h{1, MatrixX<double>::Zero(2, 2), VectorX<double>::Zero(2), 1.7};
    h.b(1) = -1.0;
    CHECK(affine_distance(from_quadratic_hamiltonian(h), pauli_x(1.7)) <= 1e-12);

    QuadraticHamiltonian hz{1, MatrixX<double>::Zero(2, 2), VectorX<double>::Zero(2), 0.4};
    hz.b(0) = 1.0;
    CHECK(affine_distance(from_quadratic_hamiltonian(hz), pauli_z(0.4)) <= 1e-12);
}

TEST_CASE("from_quadratic_hamiltonian rejects malformed input") {
    QuadraticHamiltonian h{1, MatrixX<double>::Zero(2, 2), VectorX<double>::Zero(2), 1.0};
    h.A(0, 1) = 0.3; // not symmetric
    CHECK_THROWS_AS(from_quadratic_hamiltonian(h), std::invalid_argument);
}

TEST_CASE("exp(t Omega A) is symplectic for random symmetric A") {
    Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        const Index n = 1 + static_cast<Index>(rng.below(2));
        QuadraticHamiltonianT<double> h{n, MatrixX<double>(2 * n, 2 * n),
                                        VectorX<double>::Zero(2 * n), rng.uniform_symmetric(2.0)};
        for (Index r = 0; r < 2 * n; ++r) {
            for (Index c = r; c < 2 * n; ++c) {
                h.A(r, c) = rng.uniform_symmetric(1.5);
                h.A(c, r) = h.A(r, c);
            }
        }
        auto g = from_quadratic_hamiltonian(h);
        CHECK(symplectic_error(g.S) <= 1e-10);
    }
}

TEST_CASE("coupling generator reproduces scaled SUM actions") {
    // q_t += g p_s from exp(+i g' p_s p_t): used by the rewrite
    auto h = coupling_hamiltonian(-0.8, 0, 1, 1, 1); // -0.8 p_0 p_1
    auto g = from_quadratic_hamiltonian(h);
    CHECK(g.S(2, 1) == doctest::Approx(0.8).epsilon(1e-12)); // q_1 += 0.8 p_0
    CHECK(g.S(0, 3) == doctest::Approx(0.8).epsilon(1e-12)); // q_0 += 0.8 p_1
}
