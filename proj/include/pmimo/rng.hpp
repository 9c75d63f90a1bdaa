#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace pmimo {

/// splitmix64 finalizer; full-period bijective mixer on 64 bits.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * Counter-based, splittable random stream.
 *
 * Every stream is identified by a 64-bit key; draws are a stable hash of
 * (key, counter), and child streams are derived by hashing a tag into the
 * key. Results therefore depend only on the derivation path from the master
 * seed, never on execution order or worker count, which is what makes the
 * Monte Carlo harness reproducible under parallelism.
 *
 * Not cryptographic; statistical quality is adequate for simulation use.
 */
class RngStream {
  public:
    explicit RngStream(std::uint64_t key) : key_(key) {}

    static RngStream root(std::uint64_t master_seed) { return RngStream(mix64(master_seed ^ 0x243f6a8885a308d3ULL)); }

    /// Independent stream addressed by (this stream, tag).
    RngStream child(std::uint64_t tag) const { return RngStream(mix64(key_ ^ mix64(tag ^ 0x452821e638d01377ULL))); }

    std::uint64_t next_u64() { return mix64(key_ ^ mix64(ctr_++)); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (second sample cached).
    double next_gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - next_unit(); // (0, 1]
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * M_PI * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    /// Circularly-symmetric complex Gaussian, E|z|^2 = variance.
    std::complex<double> next_cgauss(double variance) {
        const double u1 = 1.0 - next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-variance * std::log(u1));
        const double th = 2.0 * M_PI * u2;
        return {r * std::cos(th), r * std::sin(th)};
    }

  private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Purpose tags for deriving the streams used by the harness. Channel draws
// are keyed by realization only (shared across arms) so that schemes are
// compared on identical channels; everything else is arm-local.
namespace rng_tag {
inline constexpr std::uint64_t channel = 0x01;
inline constexpr std::uint64_t noise = 0x02;
inline constexpr std::uint64_t pattern_init = 0x03;
inline constexpr std::uint64_t bler_block = 0x04;
inline constexpr std::uint64_t payload = 0x05;
} // namespace rng_tag

} // namespace pmimo
