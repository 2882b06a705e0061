// Seeded, cross-platform-reproducible random number generation.
//
// The engine contract is: same seed -> same sample stream, bit for bit, on
// every platform. std::mt19937_64 is fully specified by the standard, but the
// standard distributions are not, so the uniform/normal mappings are fixed
// here and versioned.

#ifndef CVCLIFFORD_RANDOM_HPP
#define CVCLIFFORD_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace cvc {

inline constexpr const char* kRngVersion = "mt19937_64/ppnd16/1";

/// Inverse of the standard normal CDF (Wichura's PPND16 rational
/// approximations, accurate to ~1e-16 relative). Domain: u in (0,1).
inline double standard_normal_quantile(double u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::invalid_argument("standard_normal_quantile: u outside (0,1)");
    }
    const double q = u - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        const double num =
            (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                  6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
              1.3314166789178437745e+2) * r + 3.3871328727963666080e+0);
        const double den =
            (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                  3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
              4.2313330701600911252e+1) * r + 1.0);
        return q * num / den;
    }
    double p_tail = q < 0.0 ? u : 1.0 - u;
    double r = std::sqrt(-std::log(p_tail));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        const double num =
            (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0);
        const double den =
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
        x = num / den;
    } else {
        r -= 5.0;
        const double num =
            (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0);
        const double den =
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
        x = num / den;
    }
    return q < 0.0 ? -x : x;
}

/// splitmix64 finalizer; also the documented per-stream seed derivation.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seeded generator with fixed double mappings.
///
/// uniform01() maps the top 53 bits of one mt19937_64 draw onto [0,1);
/// normal() is inverse-transform sampling through standard_normal_quantile.
/// Derived streams (per-shot parallelism) use the documented rule
/// derive(i) = Rng(splitmix64(seed + (i+1)*0x9E3779B97F4A7C15)).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1), strictly interior (safe for quantile transforms).
    double uniform01_open() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform on [-w, w].
    double uniform_symmetric(double w) { return (2.0 * uniform01() - 1.0) * w; }

    /// Standard normal via inverse transform.
    double normal() { return standard_normal_quantile(uniform01_open()); }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Integer in [0, bound) by 64-bit modulo rejection-free scaling.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(bound));
    }

    /// Independent child stream for shot i.
    Rng derive(std::uint64_t i) const {
        return Rng(splitmix64(seed_ + (i + 1) * 0x9E3779B97F4A7C15ull));
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace cvc

#endif
