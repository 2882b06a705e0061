// Gate library: constructors for the named gates and generic compilation of
// inhomogeneous quadratic Hamiltonians into affine symplectic maps.
//
// Generator convention: a QuadraticHamiltonian (A, b, t) denotes the unitary
//   U = exp(+(i/hbar) t H),   H = (1/2) r^T A r + b^T r,
// whose Heisenberg action is S = exp(-t Omega A),
// d = -(integral_0^t exp(-s Omega A) ds) Omega b. All named gates carry any
// sign in H itself, so e.g. the SUM generator is H = -q_c p_t.
//
// Two-mode constructors are local: their mode arguments select roles within
// a 2-mode affine (indices 0/1); embed() places gates onto a larger register.

#ifndef CVCLIFFORD_GATES_HPP
#define CVCLIFFORD_GATES_HPP

#include "phase_space.hpp"

#include <numbers>

namespace cvc {

/// H = (1/2) r^T A r + b^T r evolved for parameter t (see header comment).
template <class Scalar = double>
struct QuadraticHamiltonianT {
    Index n = 0;
    MatrixX<Scalar> A;
    VectorX<Scalar> b;
    Scalar t = 1;
};

using QuadraticHamiltonian = QuadraticHamiltonianT<double>;

/// Exact exponential map, via the augmented (2n+1)-generator so that a
/// singular Omega A (shears, displacements) needs no special casing.
template <class Scalar>
SymplecticAffineT<Scalar> from_quadratic_hamiltonian(const QuadraticHamiltonianT<Scalar>& h) {
    if (h.n < 1 || h.A.rows() != 2 * h.n || h.A.cols() != 2 * h.n || h.b.size() != 2 * h.n) {
        throw std::invalid_argument("from_quadratic_hamiltonian: inconsistent dimensions");
    }
    if (!h.A.allFinite() || !h.b.allFinite() || !std::isfinite(static_cast<double>(h.t))) {
        throw std::invalid_argument("from_quadratic_hamiltonian: non-finite input");
    }
    const Scalar asym = (h.A - h.A.transpose()).cwiseAbs().maxCoeff();
    if (asym > Scalar(kSymmetryTol) * std::max(Scalar(1), h.A.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("from_quadratic_hamiltonian: A must be symmetric");
    }
    const Index dim = 2 * h.n;
    MatrixX<Scalar> omega = symplectic_form<Scalar>(h.n);
    MatrixX<Scalar> gen = MatrixX<Scalar>::Zero(dim + 1, dim + 1);
    gen.topLeftCorner(dim, dim) = -h.t * (omega * h.A);
    gen.topRightCorner(dim, 1) = -h.t * (omega * h.b);
    MatrixX<Scalar> e = gen.exp();
    return {h.n, e.topLeftCorner(dim, dim), e.topRightCorner(dim, 1)};
}

namespace detail {

template <class Scalar>
void require_finite(Scalar v, const char* what) {
    if (!std::isfinite(static_cast<double>(v))) {
        throw std::invalid_argument(std::string(what) + ": non-finite parameter");
    }
}

inline void require_two_mode_pair(Index a, Index b, const char* what) {
    if (a == b) throw std::invalid_argument(std::string(what) + ": modes must differ");
    if (a < 0 || a > 1 || b < 0 || b > 1) {
        throw std::out_of_range(std::string(what) + ": local mode index must be 0 or 1");
    }
}

} // namespace detail

/// X(q): position translation by q. S = I, d = (q, 0).
template <class Scalar = double>
SymplecticAffineT<Scalar> pauli_x(Scalar q) {
    detail::require_finite(q, "pauli_x");
    auto g = SymplecticAffineT<Scalar>::identity(1);
    g.d(0) = q;
    return g;
}

/// Z(p): momentum boost by p. S = I, d = (0, p).
template <class Scalar = double>
SymplecticAffineT<Scalar> pauli_z(Scalar p) {
    detail::require_finite(p, "pauli_z");
    auto g = SymplecticAffineT<Scalar>::identity(1);
    g.d(1) = p;
    return g;
}

/// Displacement by (q, p) in one gate.
template <class Scalar = double>
SymplecticAffineT<Scalar> displace(Scalar q, Scalar p) {
    detail::require_finite(q, "displace");
    detail::require_finite(p, "displace");
    auto g = SymplecticAffineT<Scalar>::identity(1);
    g.d(0) = q;
    g.d(1) = p;
    return g;
}

/// Fourier gate: quarter rotation q -> -p, p -> q. F^4 = I.
template <class Scalar = double>
SymplecticAffineT<Scalar> fourier() {
    auto g = SymplecticAffineT<Scalar>::identity(1);
    g.S << Scalar(0), Scalar(-1), Scalar(1), Scalar(0);
    return g;
}

/// Phase gate P(eta): shear q -> q, p -> p + eta q.
template <class Scalar = double>
SymplecticAffineT<Scalar> phase_gate(Scalar eta) {
    detail::require_finite(eta, "phase_gate");
    auto g = SymplecticAffineT<Scalar>::identity(1);
    g.S(1, 0) = eta;
    return g;
}

/// Squeezer: S = diag(e^-r, e^r); r > 0 shrinks q.
template <class Scalar = double>
SymplecticAffineT<Scalar> squeeze(Scalar r) {
    detail::require_finite(r, "squeeze");
    auto g = SymplecticAffineT<Scalar>::identity(1);
    g.S(0, 0) = std::exp(-r);
    g.S(1, 1) = std::exp(r);
    return g;
}

/// SUM gate on two local modes: q_tgt += q_ctrl, p_ctrl -= p_tgt.
template <class Scalar = double>
SymplecticAffineT<Scalar> sum_gate(Index ctrl = 0, Index tgt = 1) {
    detail::require_two_mode_pair(ctrl, tgt, "sum_gate");
    auto g = SymplecticAffineT<Scalar>::identity(2);
    g.S(2 * tgt, 2 * ctrl) = Scalar(1);       // q_tgt += q_ctrl
    g.S(2 * ctrl + 1, 2 * tgt + 1) = Scalar(-1); // p_ctrl -= p_tgt
    return g;
}

/// Beamsplitter: (q_a,p_a) <- cos(t)(q_a,p_a) + sin(t)(q_b,p_b) and
/// (q_b,p_b) <- -sin(t)(q_a,p_a) + cos(t)(q_b,p_b), on local modes a, b.
template <class Scalar = double>
SymplecticAffineT<Scalar> beamsplitter(Scalar theta, Index a = 0, Index b = 1) {
    detail::require_finite(theta, "beamsplitter");
    detail::require_two_mode_pair(a, b, "beamsplitter");
    const Scalar c = std::cos(theta);
    const Scalar s = std::sin(theta);
    auto g = SymplecticAffineT<Scalar>::identity(2);
    for (Index k = 0; k < 2; ++k) {
        g.S(2 * a + k, 2 * a + k) = c;
        g.S(2 * a + k, 2 * b + k) = s;
        g.S(2 * b + k, 2 * a + k) = -s;
        g.S(2 * b + k, 2 * b + k) = c;
    }
    return g;
}

// --- Generators for the named gates -----------------------------------------
//
// Every named gate equals from_quadratic_hamiltonian of its generator; the
// Fock-space oracle exponentiates the same generators, so the two evolution
// routes share one Hamiltonian definition.

template <class Scalar = double>
QuadraticHamiltonianT<Scalar> displace_hamiltonian(Scalar q, Scalar p) {
    // H = p*qhat - q*phat
    QuadraticHamiltonianT<Scalar> h{1, MatrixX<Scalar>::Zero(2, 2), VectorX<Scalar>::Zero(2), 1};
    h.b(0) = p;
    h.b(1) = -q;
    return h;
}

template <class Scalar = double>
QuadraticHamiltonianT<Scalar> fourier_hamiltonian() {
    // H = (pi/4)(q^2 + p^2)
    QuadraticHamiltonianT<Scalar> h{1, MatrixX<Scalar>::Zero(2, 2), VectorX<Scalar>::Zero(2), 1};
    h.A = MatrixX<Scalar>::Identity(2, 2) * Scalar(std::numbers::pi / 2);
    return h;
}

template <class Scalar = double>
QuadraticHamiltonianT<Scalar> phase_hamiltonian(Scalar eta) {
    // H = (eta/2) q^2
    QuadraticHamiltonianT<Scalar> h{1, MatrixX<Scalar>::Zero(2, 2), VectorX<Scalar>::Zero(2), 1};
    h.A(0, 0) = eta;
    return h;
}

template <class Scalar = double>
QuadraticHamiltonianT<Scalar> squeeze_hamiltonian(Scalar r) {
    // H = r (qp + pq)/2
    QuadraticHamiltonianT<Scalar> h{1, MatrixX<Scalar>::Zero(2, 2), VectorX<Scalar>::Zero(2), 1};
    h.A(0, 1) = r;
    h.A(1, 0) = r;
    return h;
}

template <class Scalar = double>
QuadraticHamiltonianT<Scalar> sum_hamiltonian(Index ctrl = 0, Index tgt = 1) {
    detail::require_two_mode_pair(ctrl, tgt, "sum_hamiltonian");
    // H = -q_ctrl p_tgt
    QuadraticHamiltonianT<Scalar> h{2, MatrixX<Scalar>::Zero(4, 4), VectorX<Scalar>::Zero(4), 1};
    h.A(2 * ctrl, 2 * tgt + 1) = Scalar(-1);
    h.A(2 * tgt + 1, 2 * ctrl) = Scalar(-1);
    return h;
}

template <class Scalar = double>
QuadraticHamiltonianT<Scalar> beamsplitter_hamiltonian(Scalar theta, Index a = 0, Index b = 1) {
    detail::require_two_mode_pair(a, b, "beamsplitter_hamiltonian");
    // H = q_a p_b - p_a q_b, evolved for t = theta
    QuadraticHamiltonianT<Scalar> h{2, MatrixX<Scalar>::Zero(4, 4), VectorX<Scalar>::Zero(4), theta};
    h.A(2 * a, 2 * b + 1) = Scalar(1);
    h.A(2 * b + 1, 2 * a) = Scalar(1);
    h.A(2 * a + 1, 2 * b) = Scalar(-1);
    h.A(2 * b, 2 * a + 1) = Scalar(-1);
    return h;
}

/// Generic coupling exp(+(i/hbar) g O_a O_b) between one quadrature of each of
/// two local modes (0 = q, 1 = p). SUM(c,t) with strength g is
/// quadrature_coupling(g, c, 0, t, 1) up to generator sign; used by the
/// delayed-measurement rewrite.
template <class Scalar = double>
QuadraticHamiltonianT<Scalar> coupling_hamiltonian(Scalar g, Index mode_a, Index quad_a,
                                                   Index mode_b, Index quad_b) {
    detail::require_two_mode_pair(mode_a, mode_b, "coupling_hamiltonian");
    if (quad_a < 0 || quad_a > 1 || quad_b < 0 || quad_b > 1) {
        throw std::out_of_range("coupling_hamiltonian: quadrature must be 0 (q) or 1 (p)");
    }
    QuadraticHamiltonianT<Scalar> h{2, MatrixX<Scalar>::Zero(4, 4), VectorX<Scalar>::Zero(4), 1};
    h.A(2 * mode_a + quad_a, 2 * mode_b + quad_b) = g;
    h.A(2 * mode_b + quad_b, 2 * mode_a + quad_a) = g;
    return h;
}

} // namespace cvc

#endif
