// Line-oriented circuit text format (.cvc): a strict hand-rolled parser with
// located diagnostics, and the inverse formatter.
//
// Grammar (one instruction per line, '#' starts a comment):
//   modes <n>
//   sqz <mode> <r>
//   disp <mode> <q> <p>
//   fourier <mode>
//   phase <mode> <eta>
//   sum <ctrl> <tgt>
//   bs <m1> <m2> <theta>
//   loss <mode> <eta>
//   measure <q|p> <mode> [eta=<eta>] -> <reg>
//   cdisp <q|p> <mode> <mult>*<reg>[+<offset>]
//   cgate <sqz|phase|bs> <mode(s)> <param-expr over regs>
//
// Numbers are decimal doubles; parameters are serialized with 17 significant
// digits so parse(format(c)) reproduces every double exactly.

#ifndef CVCLIFFORD_DSL_HPP
#define CVCLIFFORD_DSL_HPP

#include "circuit.hpp"

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace cvc {

struct SourceSpan {
    int line = 1;      // 1-based
    int col_start = 1; // 1-based, inclusive
    int col_end = 1;
};

enum class Severity { error, warning };

struct ParseDiagnostic {
    SourceSpan span;
    std::string message;
    Severity severity = Severity::error;
};

struct ParseResult {
    Circuit circuit;
    std::vector<ParseDiagnostic> diagnostics;
    bool ok() const {
        for (const auto& d : diagnostics) {
            if (d.severity == Severity::error) return false;
        }
        return true;
    }
};

namespace dsl_detail {

struct Token {
    std::string_view text;
    int col_start = 1;
    int col_end = 1;
};

inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start + 1),
                          static_cast<int>(i)});
    }
    return tokens;
}

inline bool parse_double(std::string_view text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end && std::isfinite(out);
}

inline bool parse_index(std::string_view text, Index& out) {
    long long v = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end || v < 0) return false;
    out = static_cast<Index>(v);
    return true;
}

inline bool is_register_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline bool is_register_char(char c) {
    return is_register_start(c) || (c >= '0' && c <= '9');
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string format_affine(const AffineParam& p, const std::vector<std::string>& registers) {
    std::string out;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        const double c = p.terms[i].coef;
        if (i == 0) {
            out += format_double(c);
        } else {
            out += c < 0 ? "-" : "+";
            out += format_double(std::abs(c));
        }
        out += "*";
        out += registers[static_cast<std::size_t>(p.terms[i].reg)];
    }
    if (p.terms.empty()) return format_double(p.offset);
    if (p.offset != 0.0) {
        out += p.offset < 0 ? "-" : "+";
        out += format_double(std::abs(p.offset));
    }
    return out;
}

} // namespace dsl_detail

/// Parse a circuit; never throws on malformed input. Grammar errors,
/// range errors, and dataflow errors all come back as spanned diagnostics.
inline ParseResult parse(std::string_view text) {
    using namespace dsl_detail;
    ParseResult result;
    Circuit& c = result.circuit;
    bool have_modes = false;
    std::vector<SourceSpan> instr_spans;

    auto err = [&](int line, const Token& t, std::string msg) {
        result.diagnostics.push_back(
            {{line, t.col_start, std::max(t.col_start, t.col_end)}, std::move(msg)});
    };
    auto err_line = [&](int line, int width, std::string msg) {
        result.diagnostics.push_back({{line, 1, std::max(1, width)}, std::move(msg)});
    };

    // Affine register expression: term (('+'|'-') term)*, term = num | num*reg | reg.
    auto parse_expr = [&](int line, const Token& tok, AffineParam& out) -> bool {
        std::string_view s = tok.text;
        std::size_t pos = 0;
        bool first = true;
        out = {};
        while (pos < s.size()) {
            double sign = 1.0;
            if (s[pos] == '+' || s[pos] == '-') {
                sign = s[pos] == '-' ? -1.0 : 1.0;
                ++pos;
            } else if (!first) {
                err(line, tok, "expected '+' or '-' between expression terms");
                return false;
            }
            if (pos >= s.size()) {
                err(line, tok, "dangling sign in expression");
                return false;
            }
            if (is_register_start(s[pos])) {
                std::size_t start = pos;
                while (pos < s.size() && is_register_char(s[pos])) ++pos;
                const std::string name(s.substr(start, pos - start));
                out.terms.push_back({c.add_register(name), sign});
            } else {
                double v = 0;
                const char* begin = s.data() + pos;
                const char* end = s.data() + s.size();
                auto res = std::from_chars(begin, end, v);
                if (res.ec != std::errc() || !std::isfinite(v)) {
                    err(line, tok, "malformed number in expression");
                    return false;
                }
                pos = static_cast<std::size_t>(res.ptr - s.data());
                if (pos < s.size() && s[pos] == '*') {
                    ++pos;
                    if (pos >= s.size() || !is_register_start(s[pos])) {
                        err(line, tok, "expected register name after '*'");
                        return false;
                    }
                    std::size_t start = pos;
                    while (pos < s.size() && is_register_char(s[pos])) ++pos;
                    const std::string name(s.substr(start, pos - start));
                    out.terms.push_back({c.add_register(name), sign * v});
                } else {
                    out.offset += sign * v;
                }
            }
            first = false;
        }
        if (first) {
            err(line, tok, "empty expression");
            return false;
        }
        return true;
    };

    auto need_mode = [&](int line, const Token& t, Index& m) -> bool {
        if (!parse_index(t.text, m)) {
            err(line, t, "expected a mode index, got '" + std::string(t.text) + "'");
            return false;
        }
        if (have_modes && m >= c.n) {
            err(line, t, "mode index " + std::to_string(m) + " out of range (n = " +
                             std::to_string(c.n) + ")");
            return false;
        }
        return true;
    };
    auto need_number = [&](int line, const Token& t, double& v) -> bool {
        if (!parse_double(t.text, v)) {
            err(line, t, "expected a number, got '" + std::string(t.text) + "'");
            return false;
        }
        return true;
    };
    auto need_basis = [&](int line, const Token& t, Quadrature& b) -> bool {
        if (t.text == "q") {
            b = Quadrature::q;
            return true;
        }
        if (t.text == "p") {
            b = Quadrature::p;
            return true;
        }
        err(line, t, "expected basis 'q' or 'p', got '" + std::string(t.text) + "'");
        return false;
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        const Token& head = tokens[0];
        const auto arity = [&](std::size_t want) -> bool {
            if (tokens.size() != want + 1) {
                err(line_no, head,
                    std::string(head.text) + " expects " + std::to_string(want) +
                        " argument(s), got " + std::to_string(tokens.size() - 1));
                return false;
            }
            return true;
        };
        const SourceSpan line_span{line_no, 1, static_cast<int>(line.size() ? line.size() : 1)};

        if (head.text == "modes") {
            if (have_modes) {
                err(line_no, head, "duplicate 'modes' declaration");
                continue;
            }
            Index n = 0;
            if (!arity(1) || !parse_index(tokens[1].text, n) || n < 1) {
                if (tokens.size() == 2) err(line_no, tokens[1], "mode count must be a positive integer");
                continue;
            }
            c.n = n;
            have_modes = true;
            continue;
        }
        if (!have_modes) {
            err(line_no, head, "instruction before 'modes' declaration");
            continue;
        }

        if (head.text == "sqz" || head.text == "phase") {
            Index m = 0;
            double v = 0;
            if (!arity(2) || !need_mode(line_no, tokens[1], m) || !need_number(line_no, tokens[2], v))
                continue;
            const GateKind kind = head.text == "sqz" ? GateKind::Squeeze : GateKind::Phase;
            c.instructions.push_back(GateOp{kind, {m}, {AffineParam::constant(v)}});
            instr_spans.push_back(line_span);
        } else if (head.text == "disp") {
            Index m = 0;
            double q = 0, p = 0;
            if (!arity(3) || !need_mode(line_no, tokens[1], m) ||
                !need_number(line_no, tokens[2], q) || !need_number(line_no, tokens[3], p))
                continue;
            c.instructions.push_back(
                GateOp{GateKind::Displace, {m}, {AffineParam::constant(q), AffineParam::constant(p)}});
            instr_spans.push_back(line_span);
        } else if (head.text == "fourier") {
            Index m = 0;
            if (!arity(1) || !need_mode(line_no, tokens[1], m)) continue;
            c.instructions.push_back(GateOp{GateKind::Fourier, {m}, {}});
            instr_spans.push_back(line_span);
        } else if (head.text == "sum") {
            Index a = 0, b = 0;
            if (!arity(2) || !need_mode(line_no, tokens[1], a) || !need_mode(line_no, tokens[2], b))
                continue;
            if (a == b) {
                err(line_no, tokens[2], "control equals target");
                continue;
            }
            c.instructions.push_back(GateOp{GateKind::Sum, {a, b}, {}});
            instr_spans.push_back(line_span);
        } else if (head.text == "bs") {
            Index a = 0, b = 0;
            double theta = 0;
            if (!arity(3) || !need_mode(line_no, tokens[1], a) || !need_mode(line_no, tokens[2], b) ||
                !need_number(line_no, tokens[3], theta))
                continue;
            if (a == b) {
                err(line_no, tokens[2], "beamsplitter modes must differ");
                continue;
            }
            c.instructions.push_back(
                GateOp{GateKind::Beamsplitter, {a, b}, {AffineParam::constant(theta)}});
            instr_spans.push_back(line_span);
        } else if (head.text == "loss") {
            Index m = 0;
            double eta = 0;
            if (!arity(2) || !need_mode(line_no, tokens[1], m) || !need_number(line_no, tokens[2], eta))
                continue;
            if (!(eta >= 0.0 && eta <= 1.0)) {
                err(line_no, tokens[2], "efficiency outside [0,1]");
                continue;
            }
            c.instructions.push_back(LossOp{m, eta});
            instr_spans.push_back(line_span);
        } else if (head.text == "measure") {
            // measure <q|p> <mode> [eta=<v>] -> <reg>
            if (tokens.size() != 5 && tokens.size() != 6) {
                err(line_no, head, "measure expects: measure <q|p> <mode> [eta=<v>] -> <reg>");
                continue;
            }
            Quadrature basis = Quadrature::q;
            Index m = 0;
            if (!need_basis(line_no, tokens[1], basis) || !need_mode(line_no, tokens[2], m)) continue;
            double eta = 1.0;
            std::size_t arrow = 3;
            if (tokens.size() == 6) {
                std::string_view t = tokens[3].text;
                if (t.substr(0, 4) != "eta=") {
                    err(line_no, tokens[3], "expected eta=<value>");
                    continue;
                }
                if (!parse_double(t.substr(4), eta)) {
                    err(line_no, tokens[3], "malformed efficiency value");
                    continue;
                }
                arrow = 4;
            }
            if (!(eta >= 0.0 && eta <= 1.0)) {
                err(line_no, tokens[arrow - 1], "efficiency outside [0,1]");
                continue;
            }
            if (tokens[arrow].text != "->") {
                err(line_no, tokens[arrow], "expected '->' before register name");
                continue;
            }
            const Token& regtok = tokens[arrow + 1];
            if (regtok.text.empty() || !is_register_start(regtok.text[0])) {
                err(line_no, regtok, "malformed register name");
                continue;
            }
            for (char ch : regtok.text) {
                if (!is_register_char(ch)) {
                    err(line_no, regtok, "malformed register name");
                    break;
                }
            }
            c.instructions.push_back(
                MeasureOp{m, basis, eta, c.add_register(std::string(regtok.text))});
            instr_spans.push_back(line_span);
        } else if (head.text == "cdisp") {
            Quadrature basis = Quadrature::q;
            Index m = 0;
            if (!arity(3) || !need_basis(line_no, tokens[1], basis) ||
                !need_mode(line_no, tokens[2], m))
                continue;
            AffineParam expr;
            if (!parse_expr(line_no, tokens[3], expr)) continue;
            if (expr.terms.empty()) {
                err(line_no, tokens[3], "cdisp needs at least one register term; use disp instead");
                continue;
            }
            GateOp g{GateKind::Displace, {m}, {AffineParam::constant(0), AffineParam::constant(0)}};
            g.params[basis == Quadrature::q ? 0 : 1] = expr;
            c.instructions.push_back(std::move(g));
            instr_spans.push_back(line_span);
        } else if (head.text == "cgate") {
            if (tokens.size() < 4) {
                err(line_no, head, "cgate expects: cgate <sqz|phase|bs> <mode(s)> <expr>");
                continue;
            }
            GateKind kind;
            std::size_t nmodes;
            if (tokens[1].text == "sqz") {
                kind = GateKind::Squeeze;
                nmodes = 1;
            } else if (tokens[1].text == "phase") {
                kind = GateKind::Phase;
                nmodes = 1;
            } else if (tokens[1].text == "bs") {
                kind = GateKind::Beamsplitter;
                nmodes = 2;
            } else {
                err(line_no, tokens[1],
                    "unknown conditional gate '" + std::string(tokens[1].text) +
                        "' (expected sqz, phase, or bs)");
                continue;
            }
            if (tokens.size() != nmodes + 3) {
                err(line_no, head, "cgate arity mismatch");
                continue;
            }
            std::vector<Index> ms(nmodes);
            bool good = true;
            for (std::size_t k = 0; k < nmodes; ++k) {
                good = good && need_mode(line_no, tokens[2 + k], ms[k]);
            }
            if (!good) continue;
            if (nmodes == 2 && ms[0] == ms[1]) {
                err(line_no, tokens[3], "beamsplitter modes must differ");
                continue;
            }
            AffineParam expr;
            if (!parse_expr(line_no, tokens[2 + nmodes], expr)) continue;
            c.instructions.push_back(GateOp{kind, std::move(ms), {std::move(expr)}});
            instr_spans.push_back(line_span);
        } else {
            err(line_no, head, "unknown instruction '" + std::string(head.text) + "'");
        }
        if (pos > text.size()) break;
    }

    if (!have_modes) {
        err_line(1, 1, "missing 'modes' declaration");
        return result;
    }
    // Dataflow and residual range checks share the engine's validator; map
    // instruction indices back onto line spans.
    for (const auto& d : validate(c)) {
        SourceSpan span{1, 1, 1};
        if (d.instruction >= 0 && d.instruction < static_cast<Index>(instr_spans.size())) {
            span = instr_spans[static_cast<std::size_t>(d.instruction)];
        }
        result.diagnostics.push_back({span, d.message + " (instruction " +
                                               std::to_string(d.instruction) + ")"});
    }
    return result;
}

/// Serialize a circuit; parse(format(c)) is structurally equal to c for every
/// circuit expressible in the grammar. InitOp lowers to its sqz + disp pair;
/// a Displace with both components conditional lowers to two cdisp lines.
inline std::string format(const Circuit& c) {
    using namespace dsl_detail;
    std::string out = "modes " + std::to_string(c.n) + "\n";
    for (const auto& instr : c.instructions) {
        if (const auto* g = std::get_if<GateOp>(&instr)) {
            const std::string mode0 = std::to_string(g->modes.empty() ? 0 : g->modes[0]);
            switch (g->kind) {
                case GateKind::Displace: {
                    const AffineParam& q = g->params[0];
                    const AffineParam& p = g->params[1];
                    if (q.is_constant() && p.is_constant()) {
                        out += "disp " + mode0 + " " + format_double(q.offset) + " " +
                               format_double(p.offset) + "\n";
                    } else {
                        if (!q.is_constant()) {
                            out += "cdisp q " + mode0 + " " + format_affine(q, c.registers) + "\n";
                        } else if (q.offset != 0.0) {
                            out += "disp " + mode0 + " " + format_double(q.offset) + " 0\n";
                        }
                        if (!p.is_constant()) {
                            out += "cdisp p " + mode0 + " " + format_affine(p, c.registers) + "\n";
                        } else if (p.offset != 0.0) {
                            out += "disp " + mode0 + " 0 " + format_double(p.offset) + "\n";
                        }
                    }
                    break;
                }
                case GateKind::Squeeze:
                case GateKind::Phase: {
                    const char* name = g->kind == GateKind::Squeeze ? "sqz" : "phase";
                    const AffineParam& p = g->params[0];
                    if (p.is_constant()) {
                        out += std::string(name) + " " + mode0 + " " + format_double(p.offset) + "\n";
                    } else {
                        out += "cgate " + std::string(name) + " " + mode0 + " " +
                               format_affine(p, c.registers) + "\n";
                    }
                    break;
                }
                case GateKind::Fourier:
                    out += "fourier " + mode0 + "\n";
                    break;
                case GateKind::Sum:
                    out += "sum " + mode0 + " " + std::to_string(g->modes[1]) + "\n";
                    break;
                case GateKind::Beamsplitter: {
                    const AffineParam& p = g->params[0];
                    const std::string m1 = std::to_string(g->modes[1]);
                    if (p.is_constant()) {
                        out += "bs " + mode0 + " " + m1 + " " + format_double(p.offset) + "\n";
                    } else {
                        out += "cgate bs " + mode0 + " " + m1 + " " +
                               format_affine(p, c.registers) + "\n";
                    }
                    break;
                }
            }
        } else if (const auto* m = std::get_if<MeasureOp>(&instr)) {
            out += "measure ";
            out += m->basis == Quadrature::q ? "q " : "p ";
            out += std::to_string(m->mode) + " ";
            if (m->eta != 1.0) out += "eta=" + format_double(m->eta) + " ";
            out += "-> " + c.registers[static_cast<std::size_t>(m->reg)] + "\n";
        } else if (const auto* l = std::get_if<LossOp>(&instr)) {
            out += "loss " + std::to_string(l->mode) + " " + format_double(l->eta) + "\n";
        } else if (const auto* init = std::get_if<InitOp>(&instr)) {
            out += "sqz " + std::to_string(init->mode) + " " + format_double(init->r) + "\n";
            out += "disp " + std::to_string(init->mode) + " " + format_double(init->q) + " " +
                   format_double(init->p) + "\n";
        }
    }
    return out;
}

} // namespace cvc

#endif
