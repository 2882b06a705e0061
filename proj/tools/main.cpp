// cvc: command-line front end for the circuit DSL.
//
//   cvc run <file> --seed S [--shots N] [--out json|csv]
//   cvc moments <file> [--seed S] [--shots N]
//   cvc validate <file>
//   cvc rewrite-delay <file>
//   cvc bench --modes n --gates g [--measures m] [--seed S]
//
// '-' reads the circuit from stdin; CVCLIFFORD_SEED is the seed fallback.
// Exit codes: 0 success, 1 diagnostics/bad input, 2 runtime invariant breach.

#include <cvclifford/bench.hpp>
#include <cvclifford/circuit.hpp>
#include <cvclifford/dsl.hpp>
#include <cvclifford/random.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_diagnostics(const std::string& path, const cvc::ParseResult& parsed) {
    for (const auto& d : parsed.diagnostics) {
        std::cerr << path << ":" << d.span.line << ":" << d.span.col_start << ": "
                  << (d.severity == cvc::Severity::error ? "error: " : "warning: ") << d.message
                  << "\n";
    }
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
        } else {
            out += c;
        }
    }
    return out + "\"";
}

std::string json_vector(const cvc::VectorX<double>& v) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += num(v(i));
    }
    return out + "]";
}

std::string json_matrix(const cvc::MatrixX<double>& m) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i) out += ",";
        out += json_vector(m.row(i).transpose());
    }
    return out + "]";
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag_value) {
    if (opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("CVCLIFFORD_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

struct ShotAggregate {
    std::vector<std::vector<double>> samples; // per register
    cvc::VectorX<double> mean;
    cvc::MatrixX<double> covariance;
};

ShotAggregate run_shots(const cvc::Circuit& c, std::uint64_t seed, long long shots) {
    const Eigen::Index nq = 2 * c.n;
    ShotAggregate agg;
    agg.samples.resize(c.registers.size());
    cvc::VectorX<double> mean_mu = cvc::VectorX<double>::Zero(nq);
    cvc::MatrixX<double> mean_sigma = cvc::MatrixX<double>::Zero(nq, nq);
    cvc::MatrixX<double> second_mu = cvc::MatrixX<double>::Zero(nq, nq);
    cvc::Rng master(seed);
    for (long long s = 0; s < shots; ++s) {
        cvc::RunResult r = cvc::run(c, master.derive(static_cast<std::uint64_t>(s)).seed());
        for (std::size_t k = 0; k < c.registers.size(); ++k) {
            agg.samples[k].push_back(r.record.values[k]);
        }
        mean_mu += r.final_state.mu;
        mean_sigma += r.final_state.sigma;
        second_mu += r.final_state.mu * r.final_state.mu.transpose();
    }
    const double inv = 1.0 / static_cast<double>(shots);
    mean_mu *= inv;
    agg.mean = mean_mu;
    agg.covariance = mean_sigma * inv + second_mu * inv - mean_mu * mean_mu.transpose();
    return agg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous-variable Clifford circuit simulator"};
    app.require_subcommand(1);

    std::string file;
    std::uint64_t seed = 0;
    long long shots = 1;
    std::string out_format = "json";

    auto* cmd_run = app.add_subcommand("run", "execute a circuit and report samples + moments");
    cmd_run->add_option("file", file, "circuit file (- for stdin)")->required();
    auto* run_seed = cmd_run->add_option("--seed", seed, "RNG seed");
    cmd_run->add_option("--shots", shots, "number of shots")->check(CLI::PositiveNumber);
    cmd_run->add_option("--out", out_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_moments = app.add_subcommand("moments", "analytic moment report when available");
    cmd_moments->add_option("file", file, "circuit file (- for stdin)")->required();
    auto* moments_seed = cmd_moments->add_option("--seed", seed, "RNG seed (sampled fallback)");
    cmd_moments->add_option("--shots", shots, "shots for the sampled fallback")
        ->check(CLI::PositiveNumber);

    auto* cmd_validate = app.add_subcommand("validate", "parse and validate a circuit");
    cmd_validate->add_option("file", file, "circuit file (- for stdin)")->required();

    auto* cmd_rewrite = app.add_subcommand("rewrite-delay",
                                           "emit the delayed-measurement form of a circuit");
    cmd_rewrite->add_option("file", file, "circuit file (- for stdin)")->required();

    long long bench_modes = 100, bench_gates = 10000, bench_measures = 100;
    auto* cmd_bench = app.add_subcommand("bench", "scaling harness");
    cmd_bench->add_option("--modes", bench_modes, "mode count")->check(CLI::PositiveNumber);
    cmd_bench->add_option("--gates", bench_gates, "gate count")->check(CLI::PositiveNumber);
    cmd_bench->add_option("--measures", bench_measures, "measurement count");
    auto* bench_seed = cmd_bench->add_option("--seed", seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_bench->parsed()) {
            const auto r = cvc::run_scaling_benchmark(
                static_cast<Eigen::Index>(bench_modes), bench_gates, bench_measures,
                resolve_seed(bench_seed, seed));
            std::cout << "{\"schema\":\"cvclifford/1\",\"report\":\"bench\",\"modes\":" << r.modes
                      << ",\"gates\":" << r.gates << ",\"measurements\":" << r.measurements
                      << ",\"seconds\":" << num(r.seconds) << ",\"sigma_bytes\":" << r.sigma_bytes
                      << ",\"peak_rss_before_kb\":" << r.peak_rss_before_kb
                      << ",\"peak_rss_after_kb\":" << r.peak_rss_after_kb
                      << ",\"checksum\":" << num(r.checksum) << "}\n";
            return 0;
        }

        const std::string text = read_input(file);
        cvc::ParseResult parsed = cvc::parse(text);
        if (!parsed.ok()) {
            print_diagnostics(file, parsed);
            return 1;
        }
        const cvc::Circuit& circuit = parsed.circuit;

        if (cmd_validate->parsed()) {
            std::cout << "ok\n";
            return 0;
        }
        if (cmd_rewrite->parsed()) {
            auto rewritten = cvc::delay_measurements(circuit);
            if (!rewritten.ok()) {
                for (const auto& d : rewritten.diagnostics) {
                    std::cerr << file << ": error: " << d.message << " (instruction "
                              << d.instruction << ")\n";
                }
                return 1;
            }
            std::cout << cvc::format(rewritten.circuit);
            return 0;
        }
        if (cmd_moments->parsed()) {
            const auto rep = cvc::moments(circuit, {static_cast<Eigen::Index>(shots),
                                                    resolve_seed(moments_seed, seed)});
            std::string regs = "[";
            for (std::size_t i = 0; i < rep.registers.size(); ++i) {
                if (i) regs += ",";
                regs += json_string(rep.registers[i]);
            }
            regs += "]";
            std::cout << "{\"schema\":\"cvclifford/1\",\"report\":\"moments\",\"method\":"
                      << (rep.analytic ? "\"analytic\"" : "\"sampled\"") << ",\"modes\":" << rep.n
                      << ",\"mean\":" << json_vector(rep.mean)
                      << ",\"covariance\":" << json_matrix(rep.covariance)
                      << ",\"registers\":" << regs
                      << ",\"register_mean\":" << json_vector(rep.register_mean)
                      << ",\"register_covariance\":" << json_matrix(rep.register_covariance)
                      << "}\n";
            return 0;
        }

        // run
        const std::uint64_t s = resolve_seed(run_seed, seed);
        const ShotAggregate agg = run_shots(circuit, s, shots);
        if (out_format == "csv") {
            for (std::size_t k = 0; k < circuit.registers.size(); ++k) {
                if (k) std::cout << ",";
                std::cout << circuit.registers[k];
            }
            std::cout << "\n";
            for (long long row = 0; row < shots; ++row) {
                for (std::size_t k = 0; k < circuit.registers.size(); ++k) {
                    if (k) std::cout << ",";
                    std::cout << num(agg.samples[k][static_cast<std::size_t>(row)]);
                }
                std::cout << "\n";
            }
            return 0;
        }
        std::string regs = "[";
        std::string samples = "{";
        for (std::size_t k = 0; k < circuit.registers.size(); ++k) {
            if (k) {
                regs += ",";
                samples += ",";
            }
            regs += json_string(circuit.registers[k]);
            samples += json_string(circuit.registers[k]) + ":[";
            for (std::size_t i = 0; i < agg.samples[k].size(); ++i) {
                if (i) samples += ",";
                samples += num(agg.samples[k][i]);
            }
            samples += "]";
        }
        regs += "]";
        samples += "}";
        std::cout << "{\"schema\":\"cvclifford/1\",\"rng\":" << json_string(cvc::kRngVersion)
                  << ",\"seed\":" << s << ",\"shots\":" << shots << ",\"registers\":" << regs
                  << ",\"samples\":" << samples << ",\"final_state\":{\"modes\":" << circuit.n
                  << ",\"mean\":" << json_vector(agg.mean)
                  << ",\"covariance\":" << json_matrix(agg.covariance) << "}}\n";
        return 0;
    } catch (const cvc::invariant_error& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
