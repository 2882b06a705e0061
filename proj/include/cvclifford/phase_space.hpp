// Phase-space conventions and the core value types: the symplectic form,
// affine symplectic maps (S, d), and Gaussian states (mu, sigma).
//
// Conventions, fixed project-wide:
//   * hbar = 1; vacuum variance of each quadrature is 1/2.
//   * Interleaved operator ordering r = (q1, p1, q2, p2, ..., qn, pn).
//   * Omega is block-diagonal with n copies of [[0,1],[-1,0]].
//   * A SymplecticAffine (S, d) acts on operators as r -> S r + d (Heisenberg)
//     and on moments as mu -> S mu + d, sigma -> S sigma S^T.
//   * squeeze(r > 0) shrinks the q variance: Var(q) = exp(-2r)/2. Toolchains
//     with the opposite convention need r -> -r when comparing.

#ifndef CVCLIFFORD_PHASE_SPACE_HPP
#define CVCLIFFORD_PHASE_SPACE_HPP

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvc {

using Index = Eigen::Index;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Numeric contract constants.
inline constexpr double kHBar = 1.0;
inline constexpr double kVacuumVariance = 0.5;
inline constexpr double kSymplecticTol = 1e-10;
inline constexpr double kSymplecticChainTol = 1e-8;
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kUncertaintyTol = 1e-10;

/// Raised when a numeric invariant is violated (distinct from bad arguments).
class invariant_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Quadrature { q = 0, p = 1 };

/// Omega for n modes in the interleaved layout. Omega^2 = -I.
template <class Scalar = double>
MatrixX<Scalar> symplectic_form(Index n) {
    if (n < 1) throw std::invalid_argument("symplectic_form: need n >= 1");
    MatrixX<Scalar> omega = MatrixX<Scalar>::Zero(2 * n, 2 * n);
    for (Index m = 0; m < n; ++m) {
        omega(2 * m, 2 * m + 1) = Scalar(1);
        omega(2 * m + 1, 2 * m) = Scalar(-1);
    }
    return omega;
}

/// max-norm of S Omega S^T - Omega; zero iff S is exactly symplectic.
template <class Derived>
typename Derived::Scalar symplectic_error(const Eigen::MatrixBase<Derived>& S) {
    using Scalar = typename Derived::Scalar;
    const Index dim = S.rows();
    if (dim != S.cols() || dim % 2 != 0 || dim == 0) {
        throw std::invalid_argument("symplectic_error: S must be 2n x 2n");
    }
    MatrixX<Scalar> omega = symplectic_form<Scalar>(dim / 2);
    return ((S * omega * S.transpose()) - omega).cwiseAbs().maxCoeff();
}

/// Affine symplectic map on n modes: r -> S r + d.
template <class Scalar = double>
struct SymplecticAffineT {
    Index n = 0;
    MatrixX<Scalar> S;
    VectorX<Scalar> d;

    static SymplecticAffineT identity(Index n) {
        if (n < 1) throw std::invalid_argument("SymplecticAffine: need n >= 1");
        return {n, MatrixX<Scalar>::Identity(2 * n, 2 * n), VectorX<Scalar>::Zero(2 * n)};
    }
};

using SymplecticAffine = SymplecticAffineT<double>;

template <class Scalar>
void require_valid(const SymplecticAffineT<Scalar>& g) {
    if (g.n < 1 || g.S.rows() != 2 * g.n || g.S.cols() != 2 * g.n || g.d.size() != 2 * g.n) {
        throw std::invalid_argument("SymplecticAffine: inconsistent dimensions");
    }
    if (!g.S.allFinite() || !g.d.allFinite()) {
        throw std::invalid_argument("SymplecticAffine: non-finite entries");
    }
}

/// Gaussian state: first moments mu and symmetrized covariance sigma.
/// Construction rejects asymmetric and non-finite covariances; singular
/// (infinitely squeezed) covariances are not representable here.
template <class Scalar = double>
struct GaussianStateT {
    Index n = 0;
    VectorX<Scalar> mu;
    MatrixX<Scalar> sigma;

    GaussianStateT() = default;
    GaussianStateT(Index n_, VectorX<Scalar> mu_, MatrixX<Scalar> sigma_)
        : n(n_), mu(std::move(mu_)), sigma(std::move(sigma_)) {
        if (n < 1 || mu.size() != 2 * n || sigma.rows() != 2 * n || sigma.cols() != 2 * n) {
            throw std::invalid_argument("GaussianState: inconsistent dimensions");
        }
        if (!mu.allFinite() || !sigma.allFinite()) {
            throw std::invalid_argument("GaussianState: non-finite moments");
        }
        const Scalar asym = (sigma - sigma.transpose()).cwiseAbs().maxCoeff();
        if (asym > Scalar(kSymmetryTol) * std::max(Scalar(1), sigma.cwiseAbs().maxCoeff())) {
            throw std::invalid_argument("GaussianState: sigma not symmetric");
        }
    }
};

using GaussianState = GaussianStateT<double>;

/// n-mode vacuum: mu = 0, sigma = I/2.
template <class Scalar = double>
GaussianStateT<Scalar> vacuum_state(Index n) {
    if (n < 1) throw std::invalid_argument("vacuum_state: need n >= 1");
    return GaussianStateT<Scalar>(
        n, VectorX<Scalar>::Zero(2 * n),
        MatrixX<Scalar>::Identity(2 * n, 2 * n) * Scalar(kVacuumVariance));
}

/// Smallest eigenvalue of the Hermitian matrix sigma + (i/2) Omega.
/// Physical states have this >= 0 (up to tolerance).
template <class Scalar>
double min_uncertainty_eigenvalue(const GaussianStateT<Scalar>& state) {
    using Cplx = std::complex<double>;
    const Index dim = 2 * state.n;
    MatrixX<Cplx> h = state.sigma.template cast<Cplx>();
    for (Index m = 0; m < state.n; ++m) {
        h(2 * m, 2 * m + 1) += Cplx(0, 0.5);
        h(2 * m + 1, 2 * m) -= Cplx(0, 0.5);
    }
    Eigen::SelfAdjointEigenSolver<MatrixX<Cplx>> es(h, Eigen::EigenvaluesOnly);
    (void)dim;
    return es.eigenvalues().minCoeff();
}

template <class Scalar>
bool satisfies_uncertainty(const GaussianStateT<Scalar>& state, double tol = kUncertaintyTol) {
    return min_uncertainty_eigenvalue(state) >= -tol;
}

/// result = a after b (apply b first): S = Sa Sb, d = Sa db + da.
template <class Scalar>
SymplecticAffineT<Scalar> compose(const SymplecticAffineT<Scalar>& a,
                                  const SymplecticAffineT<Scalar>& b) {
    if (a.n != b.n) throw std::invalid_argument("compose: mode-count mismatch");
    return {a.n, a.S * b.S, a.S * b.d + a.d};
}

/// Group inverse. S^-1 is computed from the symplectic identity
/// S^-1 = Omega^-1 S^T Omega; inputs failing the symplectic check are rejected.
template <class Scalar>
SymplecticAffineT<Scalar> inverse(const SymplecticAffineT<Scalar>& g) {
    require_valid(g);
    if (symplectic_error(g.S) > Scalar(kSymplecticChainTol)) {
        throw invariant_error("inverse: input is not symplectic within tolerance");
    }
    MatrixX<Scalar> omega = symplectic_form<Scalar>(g.n);
    // Omega^-1 = -Omega = Omega^T.
    MatrixX<Scalar> sinv = -omega * g.S.transpose() * omega;
    return {g.n, sinv, VectorX<Scalar>(-(sinv * g.d))};
}

/// Conjugation u g u^-1 (push g through u).
template <class Scalar>
SymplecticAffineT<Scalar> conjugate(const SymplecticAffineT<Scalar>& g,
                                    const SymplecticAffineT<Scalar>& u) {
    return compose(u, compose(g, inverse(u)));
}

/// mu -> S mu + d, sigma -> S sigma S^T.
template <class Scalar>
GaussianStateT<Scalar> apply_affine(const GaussianStateT<Scalar>& state,
                                    const SymplecticAffineT<Scalar>& op) {
    if (op.n != state.n) throw std::invalid_argument("apply_affine: mode-count mismatch");
    MatrixX<Scalar> sigma = op.S * state.sigma * op.S.transpose();
    sigma = ((sigma + sigma.transpose()) / Scalar(2)).eval();
    return GaussianStateT<Scalar>(state.n, op.S * state.mu + op.d, std::move(sigma));
}

/// Embed a k-mode affine onto the given (distinct) modes of an n-mode system.
template <class Scalar>
SymplecticAffineT<Scalar> embed(const SymplecticAffineT<Scalar>& op, Index n,
                                const std::vector<Index>& modes) {
    require_valid(op);
    if (static_cast<Index>(modes.size()) != op.n) {
        throw std::invalid_argument("embed: mode list must match op mode count");
    }
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (modes[i] < 0 || modes[i] >= n) throw std::out_of_range("embed: mode index out of range");
        for (std::size_t j = i + 1; j < modes.size(); ++j) {
            if (modes[i] == modes[j]) throw std::invalid_argument("embed: repeated mode index");
        }
    }
    SymplecticAffineT<Scalar> full = SymplecticAffineT<Scalar>::identity(n);
    for (Index a = 0; a < op.n; ++a) {
        full.d(2 * modes[a]) = op.d(2 * a);
        full.d(2 * modes[a] + 1) = op.d(2 * a + 1);
        for (Index b = 0; b < op.n; ++b) {
            full.S.template block<2, 2>(2 * modes[a], 2 * modes[b]) =
                op.S.template block<2, 2>(2 * a, 2 * b);
        }
    }
    return full;
}

namespace detail {

template <class Scalar>
std::vector<Index> quadrature_rows(const std::vector<Index>& modes) {
    std::vector<Index> rows;
    rows.reserve(2 * modes.size());
    for (Index m : modes) {
        rows.push_back(2 * m);
        rows.push_back(2 * m + 1);
    }
    return rows;
}

} // namespace detail

/// In-place local application: O(n) per gate instead of O(n^2) full products.
/// Equivalent to apply_affine(state, embed(op, n, modes)).
template <class Scalar>
void apply_local_inplace(GaussianStateT<Scalar>& state, const SymplecticAffineT<Scalar>& op,
                         const std::vector<Index>& modes, MatrixX<Scalar>& rowbuf) {
    require_valid(op);
    if (static_cast<Index>(modes.size()) != op.n) {
        throw std::invalid_argument("apply_local: mode list must match op mode count");
    }
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (modes[i] < 0 || modes[i] >= state.n) {
            throw std::out_of_range("apply_local: mode index out of range");
        }
        for (std::size_t j = i + 1; j < modes.size(); ++j) {
            if (modes[i] == modes[j]) throw std::invalid_argument("apply_local: repeated mode");
        }
    }
    const std::vector<Index> rows = detail::quadrature_rows<Scalar>(modes);
    const Index k = static_cast<Index>(rows.size());
    const Index dim = 2 * state.n;

    // mu(rows) = S_loc mu(rows) + d
    VectorX<Scalar> mu_loc(k);
    for (Index i = 0; i < k; ++i) mu_loc(i) = state.mu(rows[i]);
    mu_loc = (op.S * mu_loc + op.d).eval();
    for (Index i = 0; i < k; ++i) state.mu(rows[i]) = mu_loc(i);

    // sigma(rows, :) = S_loc sigma(rows, :)
    rowbuf.resize(k, dim);
    for (Index i = 0; i < k; ++i) rowbuf.row(i) = state.sigma.row(rows[i]);
    rowbuf = (op.S * rowbuf).eval();
    for (Index i = 0; i < k; ++i) state.sigma.row(rows[i]) = rowbuf.row(i);

    // sigma(:, rows) = sigma(:, rows) S_loc^T
    for (Index i = 0; i < k; ++i) rowbuf.row(i) = state.sigma.col(rows[i]);
    rowbuf = (op.S * rowbuf).eval();
    for (Index i = 0; i < k; ++i) state.sigma.col(rows[i]) = rowbuf.row(i);

    // keep the touched block exactly symmetric
    for (Index i = 0; i < k; ++i) {
        for (Index j = 0; j < k; ++j) {
            const Scalar v = (state.sigma(rows[i], rows[j]) + state.sigma(rows[j], rows[i])) / 2;
            state.sigma(rows[i], rows[j]) = v;
            state.sigma(rows[j], rows[i]) = v;
        }
    }
}

template <class Scalar>
GaussianStateT<Scalar> apply_local(const GaussianStateT<Scalar>& state,
                                   const SymplecticAffineT<Scalar>& op,
                                   const std::vector<Index>& modes) {
    GaussianStateT<Scalar> out = state;
    MatrixX<Scalar> buf;
    apply_local_inplace(out, op, modes, buf);
    return out;
}

/// Purity (1/2)^n / sqrt(det sigma); 1 for pure states, < 1 for mixed ones.
/// Computed through a log-determinant so large n does not overflow.
template <class Scalar>
Scalar purity(const GaussianStateT<Scalar>& state) {
    Eigen::LDLT<MatrixX<Scalar>> ldlt(state.sigma);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
        throw invariant_error("purity: sigma is singular or not positive definite");
    }
    const auto diag = ldlt.vectorD();
    Scalar logdet = 0;
    for (Index i = 0; i < diag.size(); ++i) {
        if (diag(i) <= Scalar(0)) throw invariant_error("purity: sigma is singular");
        logdet += std::log(diag(i));
    }
    return std::exp(Scalar(state.n) * std::log(Scalar(0.5)) - logdet / Scalar(2));
}

/// Block-diagonal tensor product of two states (mode indices of b follow a).
template <class Scalar>
GaussianStateT<Scalar> tensor(const GaussianStateT<Scalar>& a, const GaussianStateT<Scalar>& b) {
    const Index n = a.n + b.n;
    VectorX<Scalar> mu(2 * n);
    mu << a.mu, b.mu;
    MatrixX<Scalar> sigma = MatrixX<Scalar>::Zero(2 * n, 2 * n);
    sigma.topLeftCorner(2 * a.n, 2 * a.n) = a.sigma;
    sigma.bottomRightCorner(2 * b.n, 2 * b.n) = b.sigma;
    return GaussianStateT<Scalar>(n, std::move(mu), std::move(sigma));
}

/// Maintenance hook: project S back onto the symplectic group after long
/// compositions. Newton iteration on the defect E = S Omega S^T - Omega:
/// the update S <- (I + E Omega / 2) S cancels E to first order and converges
/// quadratically for small drift. Only called on request; composition never
/// does this silently.
template <class Scalar>
SymplecticAffineT<Scalar> resymplectify(const SymplecticAffineT<Scalar>& g) {
    require_valid(g);
    const Index dim = 2 * g.n;
    MatrixX<Scalar> omega = symplectic_form<Scalar>(g.n);
    MatrixX<Scalar> s = g.S;
    for (int iter = 0; iter < 20; ++iter) {
        MatrixX<Scalar> defect = s * omega * s.transpose() - omega;
        if (defect.cwiseAbs().maxCoeff() <= Scalar(1e-14)) break;
        s = ((MatrixX<Scalar>::Identity(dim, dim) + Scalar(0.5) * defect * omega) * s).eval();
    }
    return {g.n, std::move(s), g.d};
}

} // namespace cvc

#endif
