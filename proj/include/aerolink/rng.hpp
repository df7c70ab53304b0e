#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace aerolink {

// Deterministic random stream: a seeded mt19937_64 with a hand-rolled
// Box-Muller transform. std::normal_distribution is not pinned across
// standard-library implementations, so it is avoided; every gaussian()
// consumes exactly two engine words, which keeps draw alignment stable
// across configurations (common random numbers).
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Standard normal draw; no spare caching so the engine position is a
    // pure function of the number of calls.
    double gaussian() {
        const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace aerolink
