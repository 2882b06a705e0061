// Bridge between the circuit IR and the Fock-space oracle: executes the
// unitary part of a circuit on a truncated state vector so the Gaussian
// engine's moments can be checked against brute force.

#ifndef CVCLIFFORD_FOCK_ORACLE_HPP
#define CVCLIFFORD_FOCK_ORACLE_HPP

#include "circuit.hpp"
#include "fock.hpp"

namespace cvc::fock {

inline void apply_gate(const FockOperators& ops, FockState& state, const GateOp& g) {
    std::vector<double> vals;
    vals.reserve(g.params.size());
    for (const auto& p : g.params) {
        if (!p.is_constant()) {
            throw std::invalid_argument("fock::apply_gate: conditional gates are unsupported");
        }
        vals.push_back(p.offset);
    }
    switch (g.kind) {
        case GateKind::Sum:
            apply_scaled_sum(ops, state, g.modes[0], g.modes[1], 1.0);
            return;
        case GateKind::Beamsplitter:
            apply_beamsplitter(ops, state, g.modes[0], g.modes[1], vals[0]);
            return;
        default:
            apply_single_mode_hamiltonian(ops, state, g.modes[0], gate_hamiltonian(g.kind, vals));
            return;
    }
}

/// Run the gates of a circuit on |0...0>. Loss requires dilation to a mixed
/// state and is rejected here; terminal measurements are skipped, which
/// leaves the reduced moments of every unmeasured mode untouched.
inline FockState run_unitary(const FockOperators& ops, const Circuit& c,
                             bool skip_measurements = true) {
    FockState state = vacuum(c.n, ops.cutoff);
    for (const auto& instr : c.instructions) {
        if (const auto* g = std::get_if<GateOp>(&instr)) {
            apply_gate(ops, state, *g);
        } else if (std::get_if<MeasureOp>(&instr)) {
            if (!skip_measurements) {
                throw std::invalid_argument("fock::run_unitary: measurements are unsupported");
            }
        } else if (std::get_if<LossOp>(&instr)) {
            throw std::invalid_argument("fock::run_unitary: loss needs the dilation path");
        } else if (const auto* init = std::get_if<InitOp>(&instr)) {
            apply_single_mode_hamiltonian(ops, state, init->mode,
                                          squeeze_hamiltonian(init->r));
            apply_single_mode_hamiltonian(ops, state, init->mode,
                                          displace_hamiltonian(init->q, init->p));
        }
    }
    return state;
}

} // namespace cvc::fock

#endif
