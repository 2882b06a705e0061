// Scaling harness: streams random local gates and homodyne measurements
// through the in-place Gaussian backend without materializing a circuit, so
// the simulation's working set is the Theta(n^2) covariance matrix plus
// constants.

#ifndef CVCLIFFORD_BENCH_HPP
#define CVCLIFFORD_BENCH_HPP

#include "gates.hpp"
#include "measurement.hpp"
#include "phase_space.hpp"
#include "random.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>

namespace cvc {

struct BenchResult {
    Index modes = 0;
    long long gates = 0;
    long long measurements = 0;
    double seconds = 0;
    std::size_t sigma_bytes = 0;
    long long peak_rss_before_kb = 0;
    long long peak_rss_after_kb = 0;
    double checksum = 0; // keeps the work observable
};

/// Peak resident set size in kB from /proc/self/status (VmHWM).
inline long long peak_rss_kb() {
    std::FILE* f = std::fopen("/proc/self/status", "r");
    if (!f) return -1;
    char line[256];
    long long kb = -1;
    while (std::fgets(line, sizeof(line), f)) {
        if (std::strncmp(line, "VmHWM:", 6) == 0) {
            std::sscanf(line + 6, "%lld", &kb);
            break;
        }
    }
    std::fclose(f);
    return kb;
}

inline BenchResult run_scaling_benchmark(Index n, long long gates, long long measurements,
                                         std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("run_scaling_benchmark: need n >= 2");
    BenchResult result;
    result.modes = n;
    result.gates = gates;
    result.measurements = measurements;
    result.peak_rss_before_kb = peak_rss_kb();

    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    GaussianState state = vacuum_state(n);
    result.sigma_bytes = static_cast<std::size_t>(state.sigma.size()) * sizeof(double);
    MatrixX<double> buf;

    const long long measure_every = measurements > 0 ? std::max<long long>(1, gates / measurements) : 0;
    long long measures_done = 0;
    for (long long g = 0; g < gates; ++g) {
        const auto kind = rng.below(6);
        const Index m1 = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
        switch (kind) {
            case 0:
                apply_local_inplace(state,
                                    displace(rng.uniform_symmetric(1.0), rng.uniform_symmetric(1.0)),
                                    {m1}, buf);
                break;
            case 1:
                apply_local_inplace(state, squeeze(rng.uniform_symmetric(0.2)), {m1}, buf);
                break;
            case 2:
                apply_local_inplace(state, fourier(), {m1}, buf);
                break;
            case 3:
                apply_local_inplace(state, phase_gate(rng.uniform_symmetric(0.5)), {m1}, buf);
                break;
            default: {
                Index m2 = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1)));
                if (m2 >= m1) ++m2;
                if (kind == 4) {
                    apply_local_inplace(state, sum_gate(), {m1, m2}, buf);
                } else {
                    apply_local_inplace(state, beamsplitter(rng.uniform_symmetric(1.5)), {m1, m2},
                                        buf);
                }
                break;
            }
        }
        if (measure_every > 0 && (g + 1) % measure_every == 0 && measures_done < measurements) {
            const Index mode = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
            const Quadrature basis = rng.below(2) == 0 ? Quadrature::q : Quadrature::p;
            const Index j = 2 * mode + (basis == Quadrature::p ? 1 : 0);
            const double value =
                rng.normal(state.mu(j), std::sqrt(std::max(state.sigma(j, j), 1e-12)));
            detail::collapse_inplace(state, mode, basis, value);
            ++measures_done;
        }
    }
    result.measurements = measures_done;
    result.checksum = state.mu.sum() + state.sigma.trace();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    result.peak_rss_after_kb = peak_rss_kb();
    return result;
}

} // namespace cvc

#endif
