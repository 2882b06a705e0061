// Generator/nullifier tableaus: simulate circuits by evolving the operators
// that characterize the input state instead of the state itself.
//
// GeneratorTableau tracks the n conjugated position generators of an ideal
// (infinitely squeezed) input |q1,...,qn>; its core matrix is exactly n x 2n
// reals. NullifierTableau tracks the complex nullifiers of squeezed-vacuum
// inputs (rows evolve from e^r q + i e^-r p); its core matrix is n x 2n
// complex, i.e. 4n^2 reals.
//
// Evolution rule: appending a gate with affine (S, d) conjugates every
// tracked operator, so row -> row S^-1 and const -> const - (row S^-1) d.

#ifndef CVCLIFFORD_TABLEAU_HPP
#define CVCLIFFORD_TABLEAU_HPP

#include "gates.hpp"
#include "phase_space.hpp"
#include "random.hpp"

#include <complex>

namespace cvc {

inline constexpr double kDefaultUniformWindow = 1e3;

template <class Scalar = double>
struct GeneratorTableauT {
    Index n = 0;
    MatrixX<Scalar> M; // n x 2n: row j = coefficients of the evolved q_j generator
    VectorX<Scalar> c; // additive constants picked up from displacements
    VectorX<Scalar> q0; // initial eigenvalues
};

using GeneratorTableau = GeneratorTableauT<double>;

template <class Scalar = double>
struct NullifierTableauT {
    using Cplx = std::complex<Scalar>;
    Index n = 0;
    MatrixX<Cplx> N; // n x 2n: row j = evolved coefficients of q_j + i p_j
    VectorX<Cplx> k; // constants
};

using NullifierTableau = NullifierTableauT<double>;

/// Tableau for |q1,...,qn>: M selects the q generators, c = 0.
template <class Scalar = double>
GeneratorTableauT<Scalar> init_ideal(const VectorX<Scalar>& q_values) {
    const Index n = q_values.size();
    if (n < 1) throw std::invalid_argument("init_ideal: need n >= 1");
    if (!q_values.allFinite()) throw std::invalid_argument("init_ideal: non-finite eigenvalue");
    GeneratorTableauT<Scalar> t;
    t.n = n;
    t.M = MatrixX<Scalar>::Zero(n, 2 * n);
    for (Index j = 0; j < n; ++j) t.M(j, 2 * j) = Scalar(1);
    t.c = VectorX<Scalar>::Zero(n);
    t.q0 = q_values;
    return t;
}

/// Nullifiers of S(r1) x ... x S(rn) |0...0>: row j = e^{r_j} q_j + i e^{-r_j} p_j.
template <class Scalar = double>
NullifierTableauT<Scalar> init_squeezed(const VectorX<Scalar>& r_values) {
    using Cplx = std::complex<Scalar>;
    const Index n = r_values.size();
    if (n < 1) throw std::invalid_argument("init_squeezed: need n >= 1");
    if (!r_values.allFinite()) throw std::invalid_argument("init_squeezed: non-finite parameter");
    NullifierTableauT<Scalar> t;
    t.n = n;
    t.N = MatrixX<Cplx>::Zero(n, 2 * n);
    for (Index j = 0; j < n; ++j) {
        t.N(j, 2 * j) = Cplx(std::exp(r_values(j)), 0);
        t.N(j, 2 * j + 1) = Cplx(0, std::exp(-r_values(j)));
    }
    t.k = VectorX<Cplx>::Zero(n);
    return t;
}

template <class Scalar>
GeneratorTableauT<Scalar> evolve(const GeneratorTableauT<Scalar>& t,
                                 const SymplecticAffineT<Scalar>& op) {
    if (op.n != t.n) throw std::invalid_argument("evolve: mode-count mismatch");
    const auto inv = inverse(op);
    GeneratorTableauT<Scalar> out = t;
    out.M = t.M * inv.S;
    out.c = t.c - out.M * op.d;
    return out;
}

template <class Scalar>
NullifierTableauT<Scalar> evolve(const NullifierTableauT<Scalar>& t,
                                 const SymplecticAffineT<Scalar>& op) {
    using Cplx = std::complex<Scalar>;
    if (op.n != t.n) throw std::invalid_argument("evolve: mode-count mismatch");
    const auto inv = inverse(op);
    NullifierTableauT<Scalar> out = t;
    out.N = t.N * inv.S.template cast<Cplx>();
    out.k = t.k - out.N * op.d.template cast<Cplx>();
    return out;
}

/// M Omega M^T; invariant under displacement-free evolution.
template <class Scalar>
MatrixX<Scalar> generator_commutation(const GeneratorTableauT<Scalar>& t) {
    return t.M * symplectic_form<Scalar>(t.n) * t.M.transpose();
}

/// N Omega N^T; identically zero for a valid (mutually commuting) tableau.
template <class Scalar>
MatrixX<std::complex<Scalar>> nullifier_commutation(const NullifierTableauT<Scalar>& t) {
    using Cplx = std::complex<Scalar>;
    return t.N * symplectic_form<Cplx>(t.n) * t.N.transpose();
}

/// i N Omega N^dagger; Hermitian and positive definite for a valid pure
/// Gaussian nullifier set.
template <class Scalar>
MatrixX<std::complex<Scalar>> nullifier_gram(const NullifierTableauT<Scalar>& t) {
    using Cplx = std::complex<Scalar>;
    MatrixX<Cplx> g = Cplx(0, 1) * t.N * symplectic_form<Cplx>(t.n) * t.N.adjoint();
    return ((g + g.adjoint()) / Scalar(2)).eval();
}

template <class Scalar>
void require_valid(const NullifierTableauT<Scalar>& t, double comm_tol = 1e-10,
                   double gram_floor = 1e-12) {
    const double scale = std::max(1.0, static_cast<double>(t.N.cwiseAbs().maxCoeff()));
    if (nullifier_commutation(t).cwiseAbs().maxCoeff() > comm_tol * scale * scale) {
        throw invariant_error("NullifierTableau: rows do not commute");
    }
    Eigen::SelfAdjointEigenSolver<MatrixX<std::complex<Scalar>>> es(nullifier_gram(t),
                                                                    Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < gram_floor) {
        throw invariant_error("NullifierTableau: gram matrix not positive definite");
    }
}

/// The unique Gaussian state annihilated by the tableau's nullifiers.
///
/// Writing the rows as (Nq | Np) over the q/p column split, the normalized
/// nullifiers are p - Z q with Z = -Np^-1 Nq = V + iU, U > 0, giving
/// sigma_qq = U^-1/2, sigma_qp = U^-1 V / 2, sigma_pp = (V U^-1 V + U)/2,
/// and the mean solves N mu + k = 0.
template <class Scalar>
GaussianStateT<Scalar> to_gaussian_state(const NullifierTableauT<Scalar>& t) {
    using Cplx = std::complex<Scalar>;
    require_valid(t);
    const Index n = t.n;

    MatrixX<Scalar> a_real(2 * n, 2 * n);
    a_real.topRows(n) = t.N.real();
    a_real.bottomRows(n) = t.N.imag();
    VectorX<Scalar> rhs(2 * n);
    rhs.head(n) = -t.k.real();
    rhs.tail(n) = -t.k.imag();
    VectorX<Scalar> mu = a_real.partialPivLu().solve(rhs);

    MatrixX<Cplx> nq(n, n), np(n, n);
    for (Index j = 0; j < n; ++j) {
        nq.col(j) = t.N.col(2 * j);
        np.col(j) = t.N.col(2 * j + 1);
    }
    MatrixX<Cplx> z = -np.partialPivLu().solve(nq);
    z = ((z + z.transpose()) / Scalar(2)).eval();
    MatrixX<Scalar> v = z.real();
    MatrixX<Scalar> u = z.imag();
    Eigen::LLT<MatrixX<Scalar>> llt(u);
    if (llt.info() != Eigen::Success) {
        throw invariant_error("to_gaussian_state: gaussian width matrix not positive definite");
    }
    MatrixX<Scalar> sqq = llt.solve(MatrixX<Scalar>::Identity(n, n)) / Scalar(2);
    sqq = ((sqq + sqq.transpose()) / Scalar(2)).eval();
    MatrixX<Scalar> sqp = sqq * v;             // U^-1 V / 2
    MatrixX<Scalar> spp = v * sqp + u / Scalar(2); // V U^-1 V / 2 + U / 2
    spp = ((spp + spp.transpose()) / Scalar(2)).eval();

    MatrixX<Scalar> sigma(2 * n, 2 * n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            sigma(2 * i, 2 * j) = sqq(i, j);
            sigma(2 * i, 2 * j + 1) = sqp(i, j);
            sigma(2 * i + 1, 2 * j) = sqp(j, i);
            sigma(2 * i + 1, 2 * j + 1) = spp(i, j);
        }
    }
    sigma = ((sigma + sigma.transpose()) / Scalar(2)).eval();
    return GaussianStateT<Scalar>(n, std::move(mu), std::move(sigma));
}

/// Sample a terminal measurement of one canonical generator from an ideal
/// tableau, following the substitution prescription: evolved initial-q terms
/// contribute their eigenvalues, evolved initial-p terms contribute
/// independent uniform draws over [-window, window].
///
/// The initial-p coefficient of the evolved observable is recovered from the
/// tableau through the symplectic duality  coeff_j(p) = -M(j, p_m) for a q_m
/// measurement and +M(j, q_m) for a p_m measurement. When all such
/// coefficients vanish the outcome is deterministic and no randomness is
/// consumed; only window-independent statistics are meaningful otherwise.
template <class Scalar>
Scalar ideal_measurement_sample(const GeneratorTableauT<Scalar>& t, Index mode, Quadrature quad,
                                Rng& rng, double window = kDefaultUniformWindow) {
    if (mode < 0 || mode >= t.n) {
        throw std::out_of_range("ideal_measurement_sample: mode index out of range");
    }
    const Index n = t.n;
    const Index obs = 2 * mode + (quad == Quadrature::p ? 1 : 0);
    const double scale = std::max(1.0, static_cast<double>(t.M.cwiseAbs().maxCoeff()));

    VectorX<Scalar> g(n);
    for (Index j = 0; j < n; ++j) {
        g(j) = (quad == Quadrature::q) ? -t.M(j, 2 * mode + 1) : t.M(j, 2 * mode);
    }

    VectorX<Scalar> e = VectorX<Scalar>::Zero(2 * n);
    e(obs) = Scalar(1);
    Eigen::ColPivHouseholderQR<MatrixX<Scalar>> qr(t.M.transpose());
    VectorX<Scalar> w = qr.solve(e);
    const Scalar deterministic = w.dot(t.q0 - t.c);

    if (g.cwiseAbs().maxCoeff() <= Scalar(1e-9) * scale) {
        const double residual = (t.M.transpose() * w - e).cwiseAbs().maxCoeff();
        if (residual > 1e-8 * scale) {
            throw invariant_error(
                "ideal_measurement_sample: tableau rank degraded, observable not resolvable");
        }
        return deterministic;
    }
    Scalar value = deterministic;
    for (Index j = 0; j < n; ++j) {
        value += g(j) * Scalar(rng.uniform_symmetric(window));
    }
    return value;
}

} // namespace cvc

#endif
