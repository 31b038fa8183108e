#pragma once

#include <cstdint>
#include <random>

#include "numrad/scalar.hpp"

namespace numrad {

// splitmix64; used to derive independent per-trial seeds from a master seed
// so results do not depend on worker count or evaluation order.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix_seed(master ^ mix_seed(stream + 0x51ED270B4A2FD3C1ULL));
}

// Deterministic generator: mt19937_64 is fully specified by the standard and
// all distribution transforms below are our own, so output is stable across
// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    std::uint64_t bits() { return eng_(); }

    int uniform_int(int n) {  // {0, ..., n-1}
        return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Cx scalar_normal(Field f) {
        if (f == Field::Real) return Cx(normal(), 0.0);
        return Cx(normal(), normal()) * (1.0 / std::sqrt(2.0));
    }

    Cx unit_phase(Field f) {
        if (f == Field::Real) return Cx(uniform() < 0.5 ? -1.0 : 1.0, 0.0);
        double a = 6.283185307179586476925286766559 * uniform();
        return Cx(std::cos(a), std::sin(a));
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace numrad
