// Circuit IR, validation, execution over the Gaussian-state backend,
// analytic moment propagation, and the delayed-measurement rewrite.
//
// Classical registers hold exact sampled reals. A conditional gate parameter
// is an affine expression over registers (sum of coef*register terms plus an
// offset); feed-forward displacements are therefore linear in the outcomes,
// which is what makes both the analytic moments path and the
// delayed-measurement rewrite exact.

#ifndef CVCLIFFORD_CIRCUIT_HPP
#define CVCLIFFORD_CIRCUIT_HPP

#include "gates.hpp"
#include "measurement.hpp"
#include "phase_space.hpp"
#include "random.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace cvc {

enum class GateKind { Displace, Squeeze, Fourier, Phase, Sum, Beamsplitter };

inline Index gate_mode_count(GateKind k) {
    return (k == GateKind::Sum || k == GateKind::Beamsplitter) ? 2 : 1;
}

inline Index gate_param_count(GateKind k) {
    switch (k) {
        case GateKind::Displace: return 2;
        case GateKind::Squeeze: return 1;
        case GateKind::Fourier: return 0;
        case GateKind::Phase: return 1;
        case GateKind::Sum: return 0;
        case GateKind::Beamsplitter: return 1;
    }
    return 0;
}

/// Affine expression over classical registers: sum of coef*reg plus offset.
struct AffineParam {
    struct Term {
        Index reg = 0;
        double coef = 0;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> terms;
    double offset = 0;

    static AffineParam constant(double v) { return {{}, v}; }
    bool is_constant() const { return terms.empty(); }
    double resolve(const std::vector<double>& regs) const {
        double v = offset;
        for (const auto& t : terms) v += t.coef * regs[static_cast<std::size_t>(t.reg)];
        return v;
    }
    friend bool operator==(const AffineParam&, const AffineParam&) = default;
};

struct GateOp {
    GateKind kind = GateKind::Fourier;
    std::vector<Index> modes;
    std::vector<AffineParam> params;

    bool conditional() const {
        for (const auto& p : params) {
            if (!p.is_constant()) return true;
        }
        return false;
    }
    friend bool operator==(const GateOp&, const GateOp&) = default;
};

struct MeasureOp {
    Index mode = 0;
    Quadrature basis = Quadrature::q;
    double eta = 1.0;
    Index reg = 0;
    friend bool operator==(const MeasureOp&, const MeasureOp&) = default;
};

struct LossOp {
    Index mode = 0;
    double eta = 1.0;
    friend bool operator==(const LossOp&, const LossOp&) = default;
};

/// Input preparation: squeeze(r) then displace(q, p) on one mode. Exactly the
/// fused gate pair (no reset), so it prepares a squeezed displaced vacuum when
/// the mode is still in vacuum; serialized as the equivalent two lines.
struct InitOp {
    Index mode = 0;
    double r = 0;
    double q = 0;
    double p = 0;
    friend bool operator==(const InitOp&, const InitOp&) = default;
};

using Instruction = std::variant<GateOp, MeasureOp, LossOp, InitOp>;

struct Circuit {
    Index n = 0;
    std::vector<Instruction> instructions;
    std::vector<std::string> registers;

    Index register_index(const std::string& name) const {
        for (std::size_t i = 0; i < registers.size(); ++i) {
            if (registers[i] == name) return static_cast<Index>(i);
        }
        return -1;
    }
    Index add_register(const std::string& name) {
        const Index existing = register_index(name);
        if (existing >= 0) return existing;
        registers.push_back(name);
        return static_cast<Index>(registers.size() - 1);
    }
    friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct Diagnostic {
    Index instruction = -1; // -1: whole-circuit problem
    std::string message;
};

struct MeasurementRecord {
    std::vector<std::string> registers;
    std::vector<double> values; // NaN where never written
    std::uint64_t seed = 0;
};

struct RunResult {
    MeasurementRecord record;
    GaussianState final_state;
    std::uint64_t seed = 0;
};

struct RunOptions {
    int check_interval = 16; // uncertainty-invariant check cadence; 0 disables
};

// --- gate dispatch -----------------------------------------------------------

inline SymplecticAffine gate_affine(GateKind kind, const std::vector<double>& params) {
    switch (kind) {
        case GateKind::Displace: return displace(params.at(0), params.at(1));
        case GateKind::Squeeze: return squeeze(params.at(0));
        case GateKind::Fourier: return fourier();
        case GateKind::Phase: return phase_gate(params.at(0));
        case GateKind::Sum: return sum_gate();
        case GateKind::Beamsplitter: return beamsplitter(params.at(0));
    }
    throw std::invalid_argument("gate_affine: unknown gate kind");
}

inline QuadraticHamiltonian gate_hamiltonian(GateKind kind, const std::vector<double>& params) {
    switch (kind) {
        case GateKind::Displace: return displace_hamiltonian(params.at(0), params.at(1));
        case GateKind::Squeeze: return squeeze_hamiltonian(params.at(0));
        case GateKind::Fourier: return fourier_hamiltonian();
        case GateKind::Phase: return phase_hamiltonian(params.at(0));
        case GateKind::Sum: return sum_hamiltonian();
        case GateKind::Beamsplitter: return beamsplitter_hamiltonian(params.at(0));
    }
    throw std::invalid_argument("gate_hamiltonian: unknown gate kind");
}

// --- validation --------------------------------------------------------------

inline std::vector<Diagnostic> validate(const Circuit& c) {
    std::vector<Diagnostic> out;
    auto bad = [&](Index idx, std::string msg) { out.push_back({idx, std::move(msg)}); };
    if (c.n < 1) bad(-1, "circuit needs at least one mode");

    auto check_mode = [&](Index idx, Index m) {
        if (m < 0 || m >= c.n) {
            bad(idx, "mode index " + std::to_string(m) + " out of range (n = " +
                         std::to_string(c.n) + ")");
        }
    };
    std::vector<bool> written(c.registers.size(), false);
    auto check_reg_read = [&](Index idx, Index r) {
        if (r < 0 || r >= static_cast<Index>(c.registers.size())) {
            bad(idx, "register reference out of range");
        } else if (!written[static_cast<std::size_t>(r)]) {
            bad(idx, "read of register '" + c.registers[static_cast<std::size_t>(r)] +
                         "' before it is written");
        }
    };

    for (std::size_t i = 0; i < c.instructions.size(); ++i) {
        const Index idx = static_cast<Index>(i);
        const Instruction& instr = c.instructions[i];
        if (const auto* g = std::get_if<GateOp>(&instr)) {
            if (static_cast<Index>(g->modes.size()) != gate_mode_count(g->kind)) {
                bad(idx, "gate arity mismatch");
                continue;
            }
            for (Index m : g->modes) check_mode(idx, m);
            if (g->modes.size() == 2 && g->modes[0] == g->modes[1]) {
                bad(idx, "two-mode gate with control equal to target");
            }
            if (static_cast<Index>(g->params.size()) != gate_param_count(g->kind)) {
                bad(idx, "gate parameter count mismatch");
                continue;
            }
            for (const auto& p : g->params) {
                if (!std::isfinite(p.offset)) bad(idx, "non-finite gate parameter");
                for (const auto& t : p.terms) {
                    if (!std::isfinite(t.coef)) bad(idx, "non-finite register multiplier");
                    check_reg_read(idx, t.reg);
                }
            }
        } else if (const auto* m = std::get_if<MeasureOp>(&instr)) {
            check_mode(idx, m->mode);
            if (!(m->eta >= 0.0 && m->eta <= 1.0)) {
                bad(idx, "efficiency outside [0,1]");
            }
            if (m->reg < 0 || m->reg >= static_cast<Index>(c.registers.size())) {
                bad(idx, "measurement target register out of range");
            } else if (written[static_cast<std::size_t>(m->reg)]) {
                bad(idx, "register '" + c.registers[static_cast<std::size_t>(m->reg)] +
                             "' written more than once");
            } else {
                written[static_cast<std::size_t>(m->reg)] = true;
            }
        } else if (const auto* l = std::get_if<LossOp>(&instr)) {
            check_mode(idx, l->mode);
            if (!(l->eta >= 0.0 && l->eta <= 1.0)) bad(idx, "efficiency outside [0,1]");
        } else if (const auto* init = std::get_if<InitOp>(&instr)) {
            check_mode(idx, init->mode);
            if (!std::isfinite(init->r) || !std::isfinite(init->q) || !std::isfinite(init->p)) {
                bad(idx, "non-finite preparation parameter");
            }
        }
    }
    return out;
}

// --- execution ---------------------------------------------------------------

namespace detail {

inline std::string dump_worst_mode_block(const GaussianState& s) {
    Index worst = 0;
    double lowest = std::numeric_limits<double>::infinity();
    for (Index m = 0; m < s.n; ++m) {
        const double d = std::min(s.sigma(2 * m, 2 * m), s.sigma(2 * m + 1, 2 * m + 1));
        if (d < lowest) {
            lowest = d;
            worst = m;
        }
    }
    std::ostringstream os;
    os << "mode " << worst << ": mu = (" << s.mu(2 * worst) << ", " << s.mu(2 * worst + 1)
       << "), sigma = [[" << s.sigma(2 * worst, 2 * worst) << ", "
       << s.sigma(2 * worst, 2 * worst + 1) << "], [" << s.sigma(2 * worst + 1, 2 * worst)
       << ", " << s.sigma(2 * worst + 1, 2 * worst + 1) << "]]";
    return os.str();
}

inline void require_valid_for_run(const Circuit& c, const char* who) {
    auto diags = validate(c);
    if (!diags.empty()) {
        throw std::invalid_argument(std::string(who) + ": circuit failed validation: " +
                                    diags.front().message);
    }
}

} // namespace detail

inline RunResult run(const Circuit& c, std::uint64_t seed, const RunOptions& options = {}) {
    detail::require_valid_for_run(c, "run");
    GaussianState state = vacuum_state(c.n);
    std::vector<double> regs(c.registers.size(), std::numeric_limits<double>::quiet_NaN());
    Rng rng(seed);
    MatrixX<double> buf;

    for (std::size_t i = 0; i < c.instructions.size(); ++i) {
        const Instruction& instr = c.instructions[i];
        try {
            if (const auto* g = std::get_if<GateOp>(&instr)) {
                std::vector<double> vals;
                vals.reserve(g->params.size());
                for (const auto& p : g->params) vals.push_back(p.resolve(regs));
                apply_local_inplace(state, gate_affine(g->kind, vals), g->modes, buf);
            } else if (const auto* m = std::get_if<MeasureOp>(&instr)) {
                MeasurementOutcome outcome =
                    (m->eta < 1.0) ? lossy_homodyne(state, m->mode, m->basis, m->eta, rng)
                                   : homodyne_sample(state, m->mode, m->basis, rng);
                regs[static_cast<std::size_t>(m->reg)] = outcome.value;
                state = std::move(outcome.posterior);
            } else if (const auto* l = std::get_if<LossOp>(&instr)) {
                state = loss_channel(state, l->mode, l->eta);
            } else if (const auto* init = std::get_if<InitOp>(&instr)) {
                apply_local_inplace(state, squeeze(init->r), {init->mode}, buf);
                apply_local_inplace(state, displace(init->q, init->p), {init->mode}, buf);
            }
            if (options.check_interval > 0 &&
                (i + 1) % static_cast<std::size_t>(options.check_interval) == 0) {
                if (!satisfies_uncertainty(state)) {
                    throw invariant_error("uncertainty relation violated");
                }
            }
        } catch (const invariant_error& e) {
            throw invariant_error("instruction " + std::to_string(i) + ": " + e.what() + "; " +
                                  detail::dump_worst_mode_block(state));
        }
    }
    if (!state.mu.allFinite() || !state.sigma.allFinite()) {
        throw invariant_error("final state has non-finite moments; " +
                              detail::dump_worst_mode_block(state));
    }
    RunResult result;
    result.record = {c.registers, regs, seed};
    result.final_state = std::move(state);
    result.seed = seed;
    return result;
}

// --- analytic / sampled moments ----------------------------------------------

struct MomentsReport {
    bool analytic = false;
    Index n = 0;
    VectorX<double> mean;           // ensemble mean, 2n
    MatrixX<double> covariance;     // ensemble covariance, 2n x 2n
    std::vector<std::string> registers;
    VectorX<double> register_mean;
    MatrixX<double> register_covariance;
};

struct MomentOptions {
    Index shots = 4096;
    std::uint64_t seed = 0;
};

/// Analytic moments are exact whenever all feed-forward is displacement-type
/// (affine in outcomes): the registers are then jointly Gaussian with the
/// quadratures and can be carried as extra rows of one covariance matrix.
inline bool analytic_moments_available(const Circuit& c) {
    for (const auto& instr : c.instructions) {
        if (const auto* g = std::get_if<GateOp>(&instr)) {
            if (g->conditional() && g->kind != GateKind::Displace) return false;
        }
    }
    return true;
}

namespace detail {

inline MomentsReport analytic_moments(const Circuit& c) {
    const Index nq = 2 * c.n;
    const Index nr = static_cast<Index>(c.registers.size());
    const Index dim = nq + nr;
    VectorX<double> m = VectorX<double>::Zero(dim);
    MatrixX<double> cov = MatrixX<double>::Zero(dim, dim);
    cov.topLeftCorner(nq, nq) = MatrixX<double>::Identity(nq, nq) * kVacuumVariance;

    auto apply_affine_rows = [&](const SymplecticAffine& local, const std::vector<Index>& modes) {
        MatrixX<double> l = MatrixX<double>::Identity(dim, dim);
        VectorX<double> shift = VectorX<double>::Zero(dim);
        for (std::size_t a = 0; a < modes.size(); ++a) {
            shift(2 * modes[a]) = local.d(2 * static_cast<Index>(a));
            shift(2 * modes[a] + 1) = local.d(2 * static_cast<Index>(a) + 1);
            for (std::size_t b = 0; b < modes.size(); ++b) {
                l.block<2, 2>(2 * modes[a], 2 * modes[b]) =
                    local.S.block<2, 2>(2 * static_cast<Index>(a), 2 * static_cast<Index>(b));
            }
        }
        m = (l * m + shift).eval();
        cov = (l * cov * l.transpose()).eval();
    };
    auto reset_mode = [&](Index mode) {
        for (Index k : {2 * mode, 2 * mode + 1}) {
            cov.row(k).setZero();
            cov.col(k).setZero();
            cov(k, k) = kVacuumVariance;
            m(k) = 0;
        }
    };
    auto apply_loss_rows = [&](Index mode, double eta) {
        const double root = std::sqrt(eta);
        for (Index k : {2 * mode, 2 * mode + 1}) {
            m(k) *= root;
            cov.row(k) *= root;
            cov.col(k) *= root;
            cov(k, k) += (1.0 - eta) * kVacuumVariance;
        }
    };

    for (const auto& instr : c.instructions) {
        if (const auto* g = std::get_if<GateOp>(&instr)) {
            if (!g->conditional()) {
                std::vector<double> vals;
                for (const auto& p : g->params) vals.push_back(p.offset);
                apply_affine_rows(gate_affine(g->kind, vals), g->modes);
            } else {
                // conditional displacement: q_m += <expr_q>, p_m += <expr_p>
                MatrixX<double> l = MatrixX<double>::Identity(dim, dim);
                VectorX<double> shift = VectorX<double>::Zero(dim);
                for (int comp = 0; comp < 2; ++comp) {
                    const AffineParam& p = g->params[static_cast<std::size_t>(comp)];
                    const Index row = 2 * g->modes[0] + comp;
                    shift(row) = p.offset;
                    for (const auto& t : p.terms) l(row, nq + t.reg) += t.coef;
                }
                m = (l * m + shift).eval();
                cov = (l * cov * l.transpose()).eval();
            }
        } else if (const auto* me = std::get_if<MeasureOp>(&instr)) {
            if (me->eta < 1.0) apply_loss_rows(me->mode, me->eta);
            const Index j = 2 * me->mode + (me->basis == Quadrature::p ? 1 : 0);
            const Index r = nq + me->reg;
            m(r) = m(j);
            const VectorX<double> col = cov.col(j);
            cov.row(r) = col.transpose();
            cov.col(r) = col;
            cov(r, r) = cov(j, j);
            reset_mode(me->mode);
        } else if (const auto* l = std::get_if<LossOp>(&instr)) {
            apply_loss_rows(l->mode, l->eta);
        } else if (const auto* init = std::get_if<InitOp>(&instr)) {
            apply_affine_rows(squeeze(init->r), {init->mode});
            apply_affine_rows(displace(init->q, init->p), {init->mode});
        }
    }

    MomentsReport report;
    report.analytic = true;
    report.n = c.n;
    report.mean = m.head(nq);
    report.covariance = ((cov.topLeftCorner(nq, nq) + cov.topLeftCorner(nq, nq).transpose()) / 2.0).eval();
    report.registers = c.registers;
    report.register_mean = m.tail(nr);
    report.register_covariance =
        ((cov.bottomRightCorner(nr, nr) + cov.bottomRightCorner(nr, nr).transpose()) / 2.0).eval();
    return report;
}

inline MomentsReport sampled_moments(const Circuit& c, const MomentOptions& options) {
    const Index nq = 2 * c.n;
    const Index nr = static_cast<Index>(c.registers.size());
    const Index shots = std::max<Index>(1, options.shots);
    VectorX<double> mean_mu = VectorX<double>::Zero(nq);
    MatrixX<double> mean_sigma = MatrixX<double>::Zero(nq, nq);
    MatrixX<double> second_mu = MatrixX<double>::Zero(nq, nq);
    VectorX<double> reg_mean = VectorX<double>::Zero(nr);
    MatrixX<double> reg_second = MatrixX<double>::Zero(nr, nr);

    Rng master(options.seed);
    for (Index s = 0; s < shots; ++s) {
        RunResult r = run(c, master.derive(static_cast<std::uint64_t>(s)).seed());
        mean_mu += r.final_state.mu;
        mean_sigma += r.final_state.sigma;
        second_mu += r.final_state.mu * r.final_state.mu.transpose();
        VectorX<double> regs(nr);
        for (Index k = 0; k < nr; ++k) {
            const double v = r.record.values[static_cast<std::size_t>(k)];
            regs(k) = std::isnan(v) ? 0.0 : v;
        }
        reg_mean += regs;
        reg_second += regs * regs.transpose();
    }
    const double inv = 1.0 / static_cast<double>(shots);
    mean_mu *= inv;
    mean_sigma *= inv;
    second_mu *= inv;
    reg_mean *= inv;
    reg_second *= inv;

    MomentsReport report;
    report.analytic = false;
    report.n = c.n;
    report.mean = mean_mu;
    report.covariance = mean_sigma + second_mu - mean_mu * mean_mu.transpose();
    report.registers = c.registers;
    report.register_mean = reg_mean;
    report.register_covariance = reg_second - reg_mean * reg_mean.transpose();
    return report;
}

} // namespace detail

inline MomentsReport moments(const Circuit& c, const MomentOptions& options = {}) {
    detail::require_valid_for_run(c, "moments");
    if (analytic_moments_available(c)) return detail::analytic_moments(c);
    return detail::sampled_moments(c, options);
}

// --- delayed-measurement rewrite ----------------------------------------------

struct RewriteResult {
    Circuit circuit;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

namespace detail {

/// Emit instructions implementing  tgt_quad(t) += strength * src_quad(s)
/// as a unitary coupling built from SUM, squeezers, and Fourier wrappers:
///   - |strength| != 1 scales the SUM by conjugation with squeezers on s,
///   - strength < 0 flips sign by conjugation with F^2 on s,
///   - a p source (resp. p target) conjugates the whole template by F on s
///     (resp. on t).
/// The emitted block commutes with src_quad(s), so a terminal measurement of
/// the source sees identical statistics.
inline void emit_coupling(std::vector<Instruction>& out, Index s, Quadrature src_quad, Index t,
                          Quadrature tgt_quad, double strength) {
    if (strength == 0.0) return;
    auto f = [&](Index mode) { out.push_back(GateOp{GateKind::Fourier, {mode}, {}}); };
    auto sqz = [&](Index mode, double r) {
        out.push_back(GateOp{GateKind::Squeeze, {mode}, {AffineParam::constant(r)}});
    };
    // conjugation openers: u g u^-1 runs u^-1 first, g, then u
    if (src_quad == Quadrature::p) { f(s); f(s); f(s); }
    if (tgt_quad == Quadrature::p) { f(t); f(t); f(t); }
    const bool negative = strength < 0.0;
    if (negative) { f(s); f(s); }
    const double mag = std::abs(strength);
    const double a = std::log(mag);
    const bool scaled = mag != 1.0;
    if (scaled) sqz(s, -a);
    out.push_back(GateOp{GateKind::Sum, {s, t}, {}});
    if (scaled) sqz(s, a);
    if (negative) { f(s); f(s); }
    if (tgt_quad == Quadrature::p) f(t);
    if (src_quad == Quadrature::p) f(s);
}

} // namespace detail

/// Rewrite feed-forward displacements into unitary couplings to the measured
/// modes and move every measurement to the end of the circuit. Detector
/// inefficiency becomes an explicit loss at the original measurement site.
/// Refuses (with diagnostics) circuits whose feed-forward is not
/// displacement-type or that act on a mode again after measuring it.
inline RewriteResult delay_measurements(const Circuit& c) {
    RewriteResult result;
    result.diagnostics = validate(c);
    if (!result.diagnostics.empty()) return result;

    // register index -> (mode, basis) of the measurement that writes it
    std::vector<Index> reg_mode(c.registers.size(), -1);
    std::vector<Quadrature> reg_basis(c.registers.size(), Quadrature::q);
    std::vector<bool> measured(static_cast<std::size_t>(c.n), false);

    Circuit out;
    out.n = c.n;
    out.registers = c.registers;
    std::vector<MeasureOp> terminal;

    auto touched = [&](Index idx, Index mode) {
        if (measured[static_cast<std::size_t>(mode)]) {
            result.diagnostics.push_back(
                {idx, "mode " + std::to_string(mode) +
                          " is used after being measured; cannot delay its measurement"});
            return true;
        }
        return false;
    };

    for (std::size_t i = 0; i < c.instructions.size(); ++i) {
        const Index idx = static_cast<Index>(i);
        const Instruction& instr = c.instructions[i];
        if (const auto* g = std::get_if<GateOp>(&instr)) {
            if (!g->conditional()) {
                for (Index mode : g->modes) touched(idx, mode);
                out.instructions.push_back(instr);
                continue;
            }
            if (g->kind != GateKind::Displace) {
                result.diagnostics.push_back(
                    {idx, "feed-forward gate is not displacement-type; rewrite only covers "
                          "conditional displacements"});
                continue;
            }
            const Index tgt = g->modes[0];
            if (touched(idx, tgt)) continue;
            double off_q = g->params[0].offset;
            double off_p = g->params[1].offset;
            for (int comp = 0; comp < 2; ++comp) {
                const Quadrature tq = comp == 0 ? Quadrature::q : Quadrature::p;
                for (const auto& term : g->params[static_cast<std::size_t>(comp)].terms) {
                    const Index src = reg_mode[static_cast<std::size_t>(term.reg)];
                    detail::emit_coupling(out.instructions, src,
                                          reg_basis[static_cast<std::size_t>(term.reg)], tgt, tq,
                                          term.coef);
                }
            }
            if (off_q != 0.0 || off_p != 0.0) {
                out.instructions.push_back(
                    GateOp{GateKind::Displace,
                           {tgt},
                           {AffineParam::constant(off_q), AffineParam::constant(off_p)}});
            }
        } else if (const auto* m = std::get_if<MeasureOp>(&instr)) {
            if (touched(idx, m->mode)) continue;
            if (m->eta < 1.0) out.instructions.push_back(LossOp{m->mode, m->eta});
            reg_mode[static_cast<std::size_t>(m->reg)] = m->mode;
            reg_basis[static_cast<std::size_t>(m->reg)] = m->basis;
            terminal.push_back(MeasureOp{m->mode, m->basis, 1.0, m->reg});
            measured[static_cast<std::size_t>(m->mode)] = true;
        } else if (const auto* l = std::get_if<LossOp>(&instr)) {
            if (touched(idx, l->mode)) continue;
            out.instructions.push_back(instr);
        } else if (const auto* init = std::get_if<InitOp>(&instr)) {
            if (touched(idx, init->mode)) continue;
            out.instructions.push_back(instr);
        }
    }
    for (const auto& m : terminal) out.instructions.push_back(m);
    if (!result.diagnostics.empty()) return result;
    result.circuit = std::move(out);
    return result;
}

} // namespace cvc

#endif
