// Homodyne measurement with conditional Gaussian update, the linear loss
// channel, and the Gaussian partial trace.
//
// Posterior convention: the measured mode is reset to vacuum so mode indices
// stay stable across measurements; trace_out exists separately when deletion
// is wanted. Detector inefficiency is modeled purely as loss applied to the
// mode before any basis handling.

#ifndef CVCLIFFORD_MEASUREMENT_HPP
#define CVCLIFFORD_MEASUREMENT_HPP

#include "gates.hpp"
#include "phase_space.hpp"
#include "random.hpp"
#include "tableau.hpp" // Quadrature

namespace cvc {

inline constexpr double kVarianceFloor = 1e-300;

template <class Scalar = double>
struct MeasurementOutcomeT {
    Index mode = 0;
    Quadrature basis = Quadrature::q;
    Scalar value = 0;
    GaussianStateT<Scalar> posterior;
};

using MeasurementOutcome = MeasurementOutcomeT<double>;

namespace detail {

/// Conditional (sharp-pointer) update given outcome `value` on quadrature row
/// j, then reset of the measured mode to vacuum. Pseudo-inverse semantics: a
/// zero-variance marginal is rejected upstream, never divided by.
template <class Scalar>
void collapse_inplace(GaussianStateT<Scalar>& state, Index mode, Quadrature basis, Scalar value) {
    const Index j = 2 * mode + (basis == Quadrature::p ? 1 : 0);
    const Scalar var = state.sigma(j, j);
    if (!(var > Scalar(kVarianceFloor))) {
        throw invariant_error("homodyne: non-positive marginal variance");
    }
    const VectorX<Scalar> col = state.sigma.col(j);
    state.mu += col * ((value - state.mu(j)) / var);
    state.sigma -= (col * col.transpose()) / var;

    const Index q = 2 * mode;
    state.sigma.row(q).setZero();
    state.sigma.row(q + 1).setZero();
    state.sigma.col(q).setZero();
    state.sigma.col(q + 1).setZero();
    state.sigma(q, q) = Scalar(kVacuumVariance);
    state.sigma(q + 1, q + 1) = Scalar(kVacuumVariance);
    state.mu(q) = Scalar(0);
    state.mu(q + 1) = Scalar(0);
}

} // namespace detail

/// Sample the chosen quadrature from its Gaussian marginal and apply the
/// conditional update; the measured mode is reset to vacuum.
template <class Scalar = double>
MeasurementOutcomeT<Scalar> homodyne_sample(const GaussianStateT<Scalar>& state, Index mode,
                                            Quadrature basis, Rng& rng) {
    if (mode < 0 || mode >= state.n) throw std::out_of_range("homodyne_sample: mode out of range");
    const Index j = 2 * mode + (basis == Quadrature::p ? 1 : 0);
    const Scalar var = state.sigma(j, j);
    if (!(var > Scalar(kVarianceFloor))) {
        throw invariant_error("homodyne_sample: non-positive marginal variance");
    }
    MeasurementOutcomeT<Scalar> out;
    out.mode = mode;
    out.basis = basis;
    out.value = Scalar(rng.normal(static_cast<double>(state.mu(j)),
                                  std::sqrt(static_cast<double>(var))));
    out.posterior = state;
    detail::collapse_inplace(out.posterior, mode, basis, out.value);
    return out;
}

/// Transmissivity-eta loss on one mode: mu -> sqrt(eta) mu,
/// block -> eta block + (1-eta)/2 I, cross-covariances scale by sqrt(eta).
template <class Scalar = double>
GaussianStateT<Scalar> loss_channel(const GaussianStateT<Scalar>& state, Index mode, Scalar eta) {
    if (mode < 0 || mode >= state.n) throw std::out_of_range("loss_channel: mode out of range");
    if (!(eta >= Scalar(0) && eta <= Scalar(1))) {
        throw std::invalid_argument("loss_channel: eta must be in [0,1]");
    }
    GaussianStateT<Scalar> out = state;
    const Scalar root = std::sqrt(eta);
    const Index q = 2 * mode;
    for (Index k : {q, q + 1}) {
        out.mu(k) *= root;
        out.sigma.row(k) *= root;
        out.sigma.col(k) *= root;
    }
    out.sigma(q, q) += (Scalar(1) - eta) * Scalar(kVacuumVariance);
    out.sigma(q + 1, q + 1) += (Scalar(1) - eta) * Scalar(kVacuumVariance);
    return out;
}

/// loss_channel followed by homodyne_sample, so circuits can declare detector
/// efficiency in one operation.
template <class Scalar = double>
MeasurementOutcomeT<Scalar> lossy_homodyne(const GaussianStateT<Scalar>& state, Index mode,
                                           Quadrature basis, Scalar eta, Rng& rng) {
    return homodyne_sample(loss_channel(state, mode, eta), mode, basis, rng);
}

/// Gaussian partial trace: delete one mode's rows/columns.
template <class Scalar = double>
GaussianStateT<Scalar> trace_out(const GaussianStateT<Scalar>& state, Index mode) {
    if (mode < 0 || mode >= state.n) throw std::out_of_range("trace_out: mode out of range");
    if (state.n < 2) throw std::invalid_argument("trace_out: cannot remove the last mode");
    const Index n = state.n - 1;
    std::vector<Index> keep;
    keep.reserve(2 * n);
    for (Index m = 0; m < state.n; ++m) {
        if (m == mode) continue;
        keep.push_back(2 * m);
        keep.push_back(2 * m + 1);
    }
    VectorX<Scalar> mu(2 * n);
    MatrixX<Scalar> sigma(2 * n, 2 * n);
    for (Index i = 0; i < 2 * n; ++i) {
        mu(i) = state.mu(keep[i]);
        for (Index j = 0; j < 2 * n; ++j) sigma(i, j) = state.sigma(keep[i], keep[j]);
    }
    return GaussianStateT<Scalar>(n, std::move(mu), std::move(sigma));
}

/// Reference implementation of loss by dilation: mix with a vacuum ancilla on
/// a beamsplitter with cos^2(theta) = eta, then trace the ancilla.
template <class Scalar = double>
GaussianStateT<Scalar> loss_by_dilation(const GaussianStateT<Scalar>& state, Index mode,
                                        Scalar eta) {
    if (!(eta >= Scalar(0) && eta <= Scalar(1))) {
        throw std::invalid_argument("loss_by_dilation: eta must be in [0,1]");
    }
    GaussianStateT<Scalar> ext = tensor(state, vacuum_state<Scalar>(1));
    const Scalar theta = std::acos(std::sqrt(eta));
    ext = apply_local(ext, beamsplitter<Scalar>(theta), {mode, state.n});
    return trace_out(ext, state.n);
}

} // namespace cvc

#endif
