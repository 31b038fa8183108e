#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace numrad {

using Cx = std::complex<double>;

enum class Field { Real, Complex };

// Unit-modulus sign of z; zero maps to zero.
inline Cx csign(Cx z) {
    double a = std::abs(z);
    return a == 0.0 ? Cx(0.0) : z / a;
}

// Lexicographic order on (re, im) pairs, coordinate by coordinate.
inline bool lex_less(const std::vector<Cx>& a, const std::vector<Cx>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return a.size() < b.size();
}

inline bool approx_eq(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace numrad
