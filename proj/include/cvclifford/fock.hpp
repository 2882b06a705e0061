// Brute-force truncated-Fock-space simulator for up to 3 modes: the
// independent oracle the Gaussian engine is validated against.
//
// Everything here is dense/spectral and built for clarity at desk scale, not
// speed. Gate unitaries use the same QuadraticHamiltonian generators as the
// symplectic engine (U = exp(+i t H), hbar = 1), so the two evolution routes
// share one definition of every gate and differ only in formalism.
//
// Mode ordering in the flattened state vector: mode 0 is the slowest index.

#ifndef CVCLIFFORD_FOCK_HPP
#define CVCLIFFORD_FOCK_HPP

#include "gates.hpp"
#include "phase_space.hpp"

#include <complex>
#include <vector>

namespace cvc::fock {

using Cplx = std::complex<double>;
using MatrixXcd = MatrixX<Cplx>;
using VectorXcd = VectorX<Cplx>;

// Dimension budgets: state vectors up to ~10^5 amplitudes (covers 60^2 and
// 40^3); dense matrices (unitaries, density operators) up to 2100^2.
inline constexpr Index kMaxStateDim = 260000;
inline constexpr Index kMaxDenseDim = 2100;
inline constexpr double kTopLevelGuard = 1e-8;

/// Single-mode q/p matrices at a given photon-number cutoff, with cached
/// eigendecompositions (used to exponentiate product couplings exactly).
/// q = (a + a^dag)/sqrt(2), p = i(a^dag - a)/sqrt(2); [q,p] = i holds on the
/// low-photon block and fails only at the truncation edge.
struct FockOperators {
    int cutoff = 0;
    MatrixXcd q, p;
    MatrixXcd q_vectors, p_vectors;
    VectorX<double> q_values, p_values;

    explicit FockOperators(int cutoff_) : cutoff(cutoff_) {
        if (cutoff < 2) throw std::invalid_argument("FockOperators: cutoff too small");
        q = MatrixXcd::Zero(cutoff, cutoff);
        p = MatrixXcd::Zero(cutoff, cutoff);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (int k = 0; k + 1 < cutoff; ++k) {
            const double root = std::sqrt(static_cast<double>(k + 1));
            q(k + 1, k) = root * inv_sqrt2;
            q(k, k + 1) = root * inv_sqrt2;
            p(k + 1, k) = Cplx(0, root * inv_sqrt2);
            p(k, k + 1) = Cplx(0, -root * inv_sqrt2);
        }
        Eigen::SelfAdjointEigenSolver<MatrixXcd> esq(q);
        Eigen::SelfAdjointEigenSolver<MatrixXcd> esp(p);
        q_vectors = esq.eigenvectors();
        q_values = esq.eigenvalues();
        p_vectors = esp.eigenvectors();
        p_values = esp.eigenvalues();
    }

    const MatrixXcd& op(Quadrature which) const { return which == Quadrature::q ? q : p; }
    const MatrixXcd& vectors(Quadrature which) const {
        return which == Quadrature::q ? q_vectors : p_vectors;
    }
    const VectorX<double>& values(Quadrature which) const {
        return which == Quadrature::q ? q_values : p_values;
    }
};

/// Pure (state vector) or mixed (density matrix) truncated state.
struct FockState {
    Index n = 0;
    int cutoff = 0;
    bool mixed = false;
    VectorXcd psi;
    MatrixXcd rho;

    Index dim() const { return mixed ? rho.rows() : psi.size(); }
};

namespace detail {

inline Index pow_dim(int cutoff, Index n) {
    Index d = 1;
    for (Index i = 0; i < n; ++i) d *= cutoff;
    return d;
}

/// Apply a D x D matrix to one mode of a flattened pure state.
inline void apply_single_mode(VectorXcd& psi, Index n, int cutoff, Index mode,
                              const MatrixXcd& u) {
    const Index d = cutoff;
    Index right = 1;
    for (Index m = mode + 1; m < n; ++m) right *= d;
    Index left = 1;
    for (Index m = 0; m < mode; ++m) left *= d;
    const MatrixXcd ut = u.transpose();
    for (Index l = 0; l < left; ++l) {
        Eigen::Map<MatrixXcd> block(psi.data() + l * d * right, right, d);
        block = (block * ut).eval();
    }
}

} // namespace detail

inline FockState vacuum(Index n, int cutoff) {
    if (n < 1 || n > 3) throw std::invalid_argument("fock::vacuum: need 1 <= n <= 3");
    const Index dim = detail::pow_dim(cutoff, n);
    if (dim > kMaxStateDim) throw std::invalid_argument("fock::vacuum: dimension budget exceeded");
    FockState s;
    s.n = n;
    s.cutoff = cutoff;
    s.psi = VectorXcd::Zero(dim);
    s.psi(0) = 1.0;
    return s;
}

/// exp(+i g O_a O_b) on a pure state, where O_a, O_b are single-mode q or p.
/// Exact (for the truncated operators) via both modes' eigenbases.
inline void apply_coupling(const FockOperators& ops, FockState& state, Index mode_a,
                           Quadrature quad_a, Index mode_b, Quadrature quad_b, double g) {
    if (state.mixed) throw std::invalid_argument("fock: gates on mixed states are unsupported");
    if (ops.cutoff != state.cutoff) throw std::invalid_argument("fock: cutoff mismatch");
    if (mode_a == mode_b) throw std::invalid_argument("fock::apply_coupling: modes must differ");
    const int d = state.cutoff;
    detail::apply_single_mode(state.psi, state.n, d, mode_a, ops.vectors(quad_a).adjoint());
    detail::apply_single_mode(state.psi, state.n, d, mode_b, ops.vectors(quad_b).adjoint());

    Index stride_a = 1, stride_b = 1;
    for (Index m = mode_a + 1; m < state.n; ++m) stride_a *= d;
    for (Index m = mode_b + 1; m < state.n; ++m) stride_b *= d;
    const auto& la = ops.values(quad_a);
    const auto& lb = ops.values(quad_b);
    MatrixXcd phase(d, d);
    for (int ia = 0; ia < d; ++ia) {
        for (int ib = 0; ib < d; ++ib) {
            phase(ia, ib) = std::exp(Cplx(0, g * la(ia) * lb(ib)));
        }
    }
    const Index dim = state.psi.size();
    for (Index idx = 0; idx < dim; ++idx) {
        const Index ia = (idx / stride_a) % d;
        const Index ib = (idx / stride_b) % d;
        state.psi(idx) *= phase(ia, ib);
    }
    detail::apply_single_mode(state.psi, state.n, d, mode_a, ops.vectors(quad_a));
    detail::apply_single_mode(state.psi, state.n, d, mode_b, ops.vectors(quad_b));
}

/// Dense single-mode unitary for the local generator (A, b, t):
/// U = exp(+i t ((1/2) r^T A r + b^T r)) with r = (q, p).
inline MatrixXcd single_mode_unitary(const FockOperators& ops, const QuadraticHamiltonian& h) {
    if (h.n != 1) throw std::invalid_argument("single_mode_unitary: need a 1-mode generator");
    MatrixXcd hmat = 0.5 * h.A(0, 0) * (ops.q * ops.q) + 0.5 * h.A(1, 1) * (ops.p * ops.p) +
                     0.5 * h.A(0, 1) * (ops.q * ops.p + ops.p * ops.q) + h.b(0) * ops.q +
                     h.b(1) * ops.p;
    hmat = ((hmat + hmat.adjoint()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hmat);
    VectorXcd expvals(es.eigenvalues().size());
    for (Index i = 0; i < expvals.size(); ++i) {
        expvals(i) = std::exp(Cplx(0, h.t * es.eigenvalues()(i)));
    }
    return es.eigenvectors() * expvals.asDiagonal() * es.eigenvectors().adjoint();
}

inline void apply_single_mode_hamiltonian(const FockOperators& ops, FockState& state, Index mode,
                                          const QuadraticHamiltonian& h) {
    if (state.mixed) throw std::invalid_argument("fock: gates on mixed states are unsupported");
    if (ops.cutoff != state.cutoff) throw std::invalid_argument("fock: cutoff mismatch");
    if (mode < 0 || mode >= state.n) throw std::out_of_range("fock: mode index out of range");
    detail::apply_single_mode(state.psi, state.n, state.cutoff, mode, single_mode_unitary(ops, h));
}

/// SUM with strength g on (ctrl -> tgt): q_tgt += g q_ctrl. Generator
/// -g q_c p_t, so the coupling phase parameter is -g.
inline void apply_scaled_sum(const FockOperators& ops, FockState& state, Index ctrl, Index tgt,
                             double g) {
    apply_coupling(ops, state, ctrl, Quadrature::q, tgt, Quadrature::p, -g);
}

/// Beamsplitter via the exact three-shear factorization of a rotation:
/// BS(theta) = SUM_{a->b}(-tan(theta/2)) SUM_{b->a}(sin theta)
///             SUM_{a->b}(-tan(theta/2)).
inline void apply_beamsplitter(const FockOperators& ops, FockState& state, Index a, Index b,
                               double theta) {
    const double lam = -std::tan(theta / 2.0);
    const double mu = std::sin(theta);
    apply_scaled_sum(ops, state, a, b, lam);
    apply_scaled_sum(ops, state, b, a, mu);
    apply_scaled_sum(ops, state, a, b, lam);
}

/// Quadrature vector (phi_k = r_k psi) for a pure state; the building block
/// for first and second moments.
inline VectorXcd quadrature_apply(const FockOperators& ops, const FockState& state, Index mode,
                                  Quadrature quad) {
    if (state.mixed) throw std::invalid_argument("fock: quadrature_apply needs a pure state");
    VectorXcd out = state.psi;
    detail::apply_single_mode(out, state.n, state.cutoff, mode, ops.op(quad));
    return out;
}

inline VectorX<double> mean_vector(const FockOperators& ops, const FockState& state) {
    VectorX<double> mu(2 * state.n);
    for (Index m = 0; m < state.n; ++m) {
        mu(2 * m) = state.psi.dot(quadrature_apply(ops, state, m, Quadrature::q)).real();
        mu(2 * m + 1) = state.psi.dot(quadrature_apply(ops, state, m, Quadrature::p)).real();
    }
    return mu;
}

/// Symmetrized covariance matrix of a pure state.
inline MatrixX<double> covariance_matrix(const FockOperators& ops, const FockState& state) {
    const Index dim = 2 * state.n;
    std::vector<VectorXcd> phi;
    phi.reserve(dim);
    for (Index m = 0; m < state.n; ++m) {
        phi.push_back(quadrature_apply(ops, state, m, Quadrature::q));
        phi.push_back(quadrature_apply(ops, state, m, Quadrature::p));
    }
    VectorX<double> mu(dim);
    for (Index k = 0; k < dim; ++k) mu(k) = state.psi.dot(phi[k]).real();
    MatrixX<double> sigma(dim, dim);
    for (Index k = 0; k < dim; ++k) {
        for (Index l = k; l < dim; ++l) {
            const double sym = phi[k].dot(phi[l]).real(); // Re<r_k r_l> = <{r_k,r_l}>/2
            sigma(k, l) = sym - mu(k) * mu(l);
            sigma(l, k) = sigma(k, l);
        }
    }
    return sigma;
}

/// <(1/2) r^T A r + b^T r> on a pure state (degree <= 2 polynomial).
inline double expectation(const FockOperators& ops, const FockState& state,
                          const MatrixX<double>& a, const VectorX<double>& b) {
    const Index dim = 2 * state.n;
    if (a.rows() != dim || a.cols() != dim || b.size() != dim) {
        throw std::invalid_argument("fock::expectation: dimension mismatch");
    }
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("fock::expectation: A must be symmetric");
    }
    std::vector<VectorXcd> phi;
    phi.reserve(dim);
    for (Index m = 0; m < state.n; ++m) {
        phi.push_back(quadrature_apply(ops, state, m, Quadrature::q));
        phi.push_back(quadrature_apply(ops, state, m, Quadrature::p));
    }
    double value = 0;
    for (Index k = 0; k < dim; ++k) {
        if (b(k) != 0.0) value += b(k) * state.psi.dot(phi[k]).real();
        for (Index l = 0; l < dim; ++l) {
            if (a(k, l) != 0.0) value += 0.5 * a(k, l) * phi[k].dot(phi[l]).real();
        }
    }
    return value;
}

/// Total population in the top `levels` photon numbers of any mode; results
/// with more than kTopLevelGuard up there are not to be trusted.
inline double top_level_population(const FockState& state, int levels = 5) {
    const int d = state.cutoff;
    const int edge = d - levels;
    double pop = 0;
    const Index dim = detail::pow_dim(d, state.n);
    for (Index idx = 0; idx < dim; ++idx) {
        Index rest = idx;
        bool top = false;
        for (Index m = 0; m < state.n; ++m) {
            const Index digit = rest % d;
            rest /= d;
            if (digit >= edge) top = true;
        }
        if (!top) continue;
        pop += state.mixed ? state.rho(idx, idx).real() : std::norm(state.psi(idx));
    }
    return pop;
}

inline void require_trustworthy(const FockState& state, int levels = 5) {
    const double pop = top_level_population(state, levels);
    if (pop > kTopLevelGuard) {
        throw invariant_error("fock: top-level population " + std::to_string(pop) +
                              " exceeds the truncation guard");
    }
}

/// Reduced density matrix of one mode.
inline MatrixXcd reduced_density(const FockState& state, Index mode) {
    const int d = state.cutoff;
    const Index dim = state.dim();
    MatrixXcd rho = MatrixXcd::Zero(d, d);
    Index stride = 1;
    for (Index m = mode + 1; m < state.n; ++m) stride *= d;
    if (!state.mixed) {
        for (Index i = 0; i < dim; ++i) {
            const Index a = (i / stride) % d;
            for (int bdig = 0; bdig < d; ++bdig) {
                const Index j = i + (bdig - static_cast<Index>(a)) * stride;
                rho(a, bdig) += state.psi(i) * std::conj(state.psi(j));
            }
        }
    } else {
        for (Index i = 0; i < dim; ++i) {
            const Index a = (i / stride) % d;
            for (int bdig = 0; bdig < d; ++bdig) {
                const Index j = i + (bdig - static_cast<Index>(a)) * stride;
                rho(a, bdig) += state.rho(i, j);
            }
        }
    }
    return rho;
}

/// Loss by beamsplitter dilation: append a vacuum ancilla, mix with
/// cos^2(theta) = eta, trace the ancilla. The one and only loss mechanism
/// in the oracle. Produces a mixed state.
inline FockState apply_loss(const FockOperators& ops, FockState state, Index mode, double eta) {
    if (state.mixed) throw std::invalid_argument("fock::apply_loss: input must be pure");
    if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("fock::apply_loss: bad eta");
    const int d = state.cutoff;
    const Index dim = state.psi.size();
    if (dim * d > kMaxStateDim || dim > kMaxDenseDim) {
        throw std::invalid_argument("fock::apply_loss: dimension budget exceeded");
    }
    FockState ext;
    ext.n = state.n + 1;
    ext.cutoff = d;
    ext.psi = VectorXcd::Zero(dim * d);
    for (Index i = 0; i < dim; ++i) ext.psi(i * d) = state.psi(i);
    apply_beamsplitter(ops, ext, mode, state.n, std::acos(std::sqrt(eta)));

    FockState out;
    out.n = state.n;
    out.cutoff = d;
    out.mixed = true;
    Eigen::Map<const MatrixXcd> m(ext.psi.data(), d, dim);
    out.rho = m.transpose() * m.conjugate();
    return out;
}

/// Partial trace over one mode of a pure 2- or 3-mode state.
inline FockState trace_out_mode(const FockState& state, Index mode) {
    if (state.mixed) throw std::invalid_argument("fock::trace_out_mode: input must be pure");
    if (state.n < 2) throw std::invalid_argument("fock::trace_out_mode: need n >= 2");
    const int d = state.cutoff;
    const Index kept_dim = detail::pow_dim(d, state.n - 1);
    if (kept_dim > kMaxDenseDim) {
        throw std::invalid_argument("fock::trace_out_mode: dimension budget exceeded");
    }
    Index stride = 1;
    for (Index m = mode + 1; m < state.n; ++m) stride *= d;
    FockState out;
    out.n = state.n - 1;
    out.cutoff = d;
    out.mixed = true;
    const Index dim = state.psi.size();
    // Gather amplitudes into (traced digit) x (kept multi-index), then contract.
    MatrixXcd m(d, kept_dim);
    for (Index i = 0; i < dim; ++i) {
        const Index a = (i / stride) % d;
        const Index low = i % stride;
        const Index high = i / (stride * d);
        m(a, high * stride + low) = state.psi(i);
    }
    out.rho = m.transpose() * m.conjugate();
    return out;
}

inline double purity(const FockState& state) {
    if (!state.mixed) return 1.0;
    return (state.rho * state.rho).trace().real();
}

/// Harmonic-oscillator eigenfunctions psi_k(x) on a grid (stable recurrence).
inline MatrixX<double> hermite_functions(const VectorX<double>& grid, int count) {
    const Index g = grid.size();
    MatrixX<double> h(g, count);
    const double norm0 = std::pow(std::numbers::pi, -0.25);
    for (Index i = 0; i < g; ++i) {
        const double x = grid(i);
        h(i, 0) = norm0 * std::exp(-0.5 * x * x);
        if (count > 1) h(i, 1) = std::sqrt(2.0) * x * h(i, 0);
        for (int k = 1; k + 1 < count; ++k) {
            h(i, k + 1) = std::sqrt(2.0 / (k + 1)) * x * h(i, k) -
                          std::sqrt(static_cast<double>(k) / (k + 1)) * h(i, k - 1);
        }
    }
    return h;
}

/// Probability density of a homodyne outcome on a grid. For the p basis the
/// number-state wavefunctions pick up (-i)^k phases.
inline VectorX<double> homodyne_pdf(const FockState& state, Index mode, Quadrature basis,
                                    const VectorX<double>& grid) {
    const int d = state.cutoff;
    MatrixXcd rho = reduced_density(state, mode);
    if (basis == Quadrature::p) {
        // <p|k> = (-i)^k psi_k(p)
        VectorXcd ph(d);
        Cplx f(1, 0);
        for (int k = 0; k < d; ++k) {
            ph(k) = f;
            f *= Cplx(0, -1);
        }
        rho = (ph.asDiagonal() * rho * ph.conjugate().asDiagonal()).eval();
    }
    const MatrixX<double> h = hermite_functions(grid, d);
    MatrixXcd hc = h.cast<Cplx>();
    VectorX<double> pdf(grid.size());
    for (Index i = 0; i < grid.size(); ++i) {
        pdf(i) = std::max(0.0, (hc.row(i) * rho * hc.row(i).adjoint())(0, 0).real());
    }
    return pdf;
}

/// Dense unitary exp(+i t H) of an arbitrary quadratic generator on up to 3
/// modes: the reference path, for small dimensions.
inline MatrixXcd build_gate_unitary(const QuadraticHamiltonian& h, int cutoff) {
    if (h.n < 1 || h.n > 3) throw std::invalid_argument("build_gate_unitary: need 1 <= n <= 3");
    const Index dim = detail::pow_dim(cutoff, h.n);
    if (dim > kMaxDenseDim) {
        throw std::invalid_argument("build_gate_unitary: dimension budget exceeded");
    }
    FockOperators ops(cutoff);
    std::vector<MatrixXcd> r;
    r.reserve(2 * h.n);
    auto lift = [&](const MatrixXcd& local, Index mode) {
        MatrixXcd full = MatrixXcd::Identity(1, 1);
        for (Index m = 0; m < h.n; ++m) {
            const MatrixXcd& factor =
                (m == mode) ? local : MatrixXcd::Identity(cutoff, cutoff).eval();
            MatrixXcd next(full.rows() * factor.rows(), full.cols() * factor.cols());
            for (Index i = 0; i < full.rows(); ++i) {
                for (Index j = 0; j < full.cols(); ++j) {
                    next.block(i * factor.rows(), j * factor.cols(), factor.rows(),
                               factor.cols()) = full(i, j) * factor;
                }
            }
            full = std::move(next);
        }
        return full;
    };
    for (Index m = 0; m < h.n; ++m) {
        r.push_back(lift(ops.q, m));
        r.push_back(lift(ops.p, m));
    }
    MatrixXcd hmat = MatrixXcd::Zero(dim, dim);
    for (Index k = 0; k < 2 * h.n; ++k) {
        if (h.b(k) != 0.0) hmat += h.b(k) * r[k];
        for (Index l = 0; l < 2 * h.n; ++l) {
            if (h.A(k, l) != 0.0) hmat += 0.25 * h.A(k, l) * (r[k] * r[l] + r[l] * r[k]);
        }
    }
    hmat = ((hmat + hmat.adjoint()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hmat);
    VectorXcd expvals(dim);
    for (Index i = 0; i < dim; ++i) expvals(i) = std::exp(Cplx(0, h.t * es.eigenvalues()(i)));
    return es.eigenvectors() * expvals.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace cvc::fock

#endif
