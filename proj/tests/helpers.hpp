// Shared test builders: random gates, random circuits, and the teleportation
// demo used by several suites.

#ifndef CVCLIFFORD_TESTS_HELPERS_HPP
#define CVCLIFFORD_TESTS_HELPERS_HPP

#include <cvclifford/circuit.hpp>
#include <cvclifford/random.hpp>

#include <numbers>
#include <vector>

namespace testutil {

using namespace cvc;

/// Random local gate embedded on an n-mode register.
inline SymplecticAffine random_gate(Rng& rng, Index n) {
    const auto kind = rng.below(6);
    const Index m1 = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    Index m2 = n > 1 ? static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1))) : 0;
    if (m2 >= m1) ++m2;
    switch (kind) {
        case 0: return embed(displace(rng.uniform_symmetric(1.0), rng.uniform_symmetric(1.0)), n, {m1});
        case 1: return embed(squeeze(rng.uniform_symmetric(0.3)), n, {m1});
        case 2: return embed(fourier(), n, {m1});
        case 3: return embed(phase_gate(rng.uniform_symmetric(0.8)), n, {m1});
        case 4:
            if (n == 1) return embed(fourier(), n, {m1});
            return embed(sum_gate(), n, {m1, m2});
        default:
            if (n == 1) return embed(squeeze(rng.uniform_symmetric(0.3)), n, {m1});
            return embed(beamsplitter(rng.uniform_symmetric(1.5)), n, {m1, m2});
    }
}

inline Circuit detail_random_oracle_attempt(Rng& rng, Index n, Index max_gates);

/// Random unitary circuit suitable for the Fock oracle: squeezed inputs, a
/// bounded squeeze budget per mode, and rejection of draws whose output is
/// energetic enough to stress a cutoff-60 truncation.
inline Circuit random_oracle_circuit(Rng& rng, Index n, Index max_gates) {
    for (;;) {
        Circuit c = detail_random_oracle_attempt(rng, n, max_gates);
        const auto rep = moments(c);
        // The photon-number tail of a squeezed quadrature decays like
        // ((2v-1)/(2v+1))^k in the variance v; capping v keeps the top-5-level
        // population at cutoff 60 far below the oracle's 1e-8 trust guard.
        double worst_var = 0, worst_mean = 0;
        for (Index k = 0; k < 2 * n; ++k) {
            worst_var = std::max(worst_var, rep.covariance(k, k));
            worst_mean = std::max(worst_mean, std::abs(rep.mean(k)));
        }
        if (worst_var <= 1.35 && worst_mean <= 1.6) return c;
    }
}

inline Circuit detail_random_oracle_attempt(Rng& rng, Index n, Index max_gates) {
    Circuit c;
    c.n = n;
    auto add_gate = [&](GateKind k, std::vector<Index> ms, std::vector<double> ps) {
        GateOp g{k, std::move(ms), {}};
        for (double v : ps) g.params.push_back(AffineParam::constant(v));
        c.instructions.push_back(std::move(g));
    };
    std::vector<double> squeeze_budget(static_cast<std::size_t>(n), 0.8);
    for (Index m = 0; m < n; ++m) {
        const double r = rng.uniform_symmetric(0.4);
        squeeze_budget[static_cast<std::size_t>(m)] -= std::abs(r);
        add_gate(GateKind::Squeeze, {m}, {r});
    }
    const Index gates = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(max_gates)));
    for (Index g = 0; g < gates; ++g) {
        const auto kind = rng.below(6);
        const Index m1 = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
        Index m2 = n > 1 ? static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1))) : 0;
        if (m2 >= m1) ++m2;
        switch (kind) {
            case 0:
                add_gate(GateKind::Displace, {m1},
                         {rng.uniform_symmetric(1.0), rng.uniform_symmetric(1.0)});
                break;
            case 1: {
                double r = rng.uniform_symmetric(0.4);
                auto& budget = squeeze_budget[static_cast<std::size_t>(m1)];
                if (std::abs(r) > budget) r = 0.0;
                budget -= std::abs(r);
                add_gate(GateKind::Squeeze, {m1}, {r});
                break;
            }
            case 2: add_gate(GateKind::Fourier, {m1}, {}); break;
            case 3: add_gate(GateKind::Phase, {m1}, {rng.uniform_symmetric(1.0)}); break;
            case 4:
                if (n == 1) add_gate(GateKind::Fourier, {m1}, {});
                else add_gate(GateKind::Sum, {m1, m2}, {});
                break;
            default:
                if (n == 1) add_gate(GateKind::Phase, {m1}, {rng.uniform_symmetric(1.0)});
                else add_gate(GateKind::Beamsplitter, {m1, m2}, {rng.uniform_symmetric(1.2)});
                break;
        }
    }
    return c;
}

/// Random circuit over the full DSL surface (measurements, loss, conditional
/// gates) with valid register dataflow; used for round-trip property tests.
inline Circuit random_dsl_circuit(Rng& rng, Index max_modes = 4, Index max_instr = 20) {
    const Index n = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(max_modes)));
    Circuit c;
    c.n = n;
    std::vector<Index> written;
    const Index len = static_cast<Index>(rng.below(static_cast<std::uint64_t>(max_instr + 1)));
    for (Index i = 0; i < len; ++i) {
        const Index m1 = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
        Index m2 = n > 1 ? static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1))) : 0;
        if (m2 >= m1) ++m2;
        const auto pick = rng.below(10);
        auto affine_expr = [&]() {
            AffineParam p;
            const Index terms = 1 + static_cast<Index>(rng.below(2));
            for (Index t = 0; t < terms && !written.empty(); ++t) {
                const Index reg = written[rng.below(written.size())];
                p.terms.push_back({reg, rng.uniform_symmetric(2.0)});
            }
            if (rng.below(2) == 0) p.offset = rng.uniform_symmetric(1.0);
            return p;
        };
        switch (pick) {
            case 0:
                c.instructions.push_back(GateOp{GateKind::Displace,
                                                {m1},
                                                {AffineParam::constant(rng.uniform_symmetric(1.0)),
                                                 AffineParam::constant(rng.uniform_symmetric(1.0))}});
                break;
            case 1:
                c.instructions.push_back(
                    GateOp{GateKind::Squeeze, {m1}, {AffineParam::constant(rng.uniform_symmetric(0.5))}});
                break;
            case 2: c.instructions.push_back(GateOp{GateKind::Fourier, {m1}, {}}); break;
            case 3:
                c.instructions.push_back(
                    GateOp{GateKind::Phase, {m1}, {AffineParam::constant(rng.uniform_symmetric(1.0))}});
                break;
            case 4:
                if (n > 1) c.instructions.push_back(GateOp{GateKind::Sum, {m1, m2}, {}});
                break;
            case 5:
                if (n > 1) {
                    c.instructions.push_back(GateOp{GateKind::Beamsplitter,
                                                    {m1, m2},
                                                    {AffineParam::constant(rng.uniform_symmetric(1.5))}});
                }
                break;
            case 6:
                c.instructions.push_back(LossOp{m1, rng.uniform01()});
                break;
            case 7: {
                const Index reg = c.add_register("r" + std::to_string(c.registers.size()));
                const double eta = rng.below(3) == 0 ? 0.5 + 0.5 * rng.uniform01() : 1.0;
                c.instructions.push_back(MeasureOp{
                    m1, rng.below(2) == 0 ? Quadrature::q : Quadrature::p, eta, reg});
                written.push_back(reg);
                break;
            }
            case 8:
                if (!written.empty()) {
                    auto expr = affine_expr();
                    if (!expr.terms.empty()) {
                        GateOp g{GateKind::Displace,
                                 {m1},
                                 {AffineParam::constant(0), AffineParam::constant(0)}};
                        g.params[rng.below(2)] = expr;
                        c.instructions.push_back(std::move(g));
                    }
                }
                break;
            default:
                if (!written.empty()) {
                    auto expr = affine_expr();
                    if (expr.terms.empty()) break;
                    if (n > 1 && rng.below(3) == 0) {
                        c.instructions.push_back(GateOp{GateKind::Beamsplitter, {m1, m2}, {expr}});
                    } else {
                        c.instructions.push_back(GateOp{
                            rng.below(2) == 0 ? GateKind::Squeeze : GateKind::Phase, {m1}, {expr}});
                    }
                }
                break;
        }
    }
    return c;
}

/// The teleportation demo: input displacement (q_in, p_in) on mode 0, EPR
/// squeezing r, output on mode 2.
inline Circuit teleport_circuit(double r, double q_in, double p_in) {
    Circuit c;
    c.n = 3;
    const double pi4 = std::numbers::pi / 4;
    const double root2 = std::sqrt(2.0);
    auto gate = [&](GateKind k, std::vector<Index> ms, std::vector<double> ps) {
        GateOp g{k, std::move(ms), {}};
        for (double v : ps) g.params.push_back(AffineParam::constant(v));
        c.instructions.push_back(std::move(g));
    };
    gate(GateKind::Squeeze, {1}, {r});
    gate(GateKind::Squeeze, {2}, {-r});
    gate(GateKind::Beamsplitter, {1, 2}, {pi4});
    gate(GateKind::Displace, {0}, {q_in, p_in});
    gate(GateKind::Beamsplitter, {0, 1}, {pi4});
    const Index mp = c.add_register("mp");
    const Index mq = c.add_register("mq");
    c.instructions.push_back(MeasureOp{0, Quadrature::p, 1.0, mp});
    c.instructions.push_back(MeasureOp{1, Quadrature::q, 1.0, mq});
    c.instructions.push_back(GateOp{
        GateKind::Displace, {2}, {AffineParam{{{mq, -root2}}, 0.0}, AffineParam::constant(0)}});
    c.instructions.push_back(GateOp{
        GateKind::Displace, {2}, {AffineParam::constant(0), AffineParam{{{mp, root2}}, 0.0}}});
    return c;
}

} // namespace testutil

#endif
