#pragma once

#include <algorithm>
#include <cmath>
#include <string>

namespace numrad {

// Certified enclosure [lo, hi] of a nonnegative quantity. Exact methods
// produce lo == hi; iterative methods keep the gap honest. `empirical`
// marks bounds that rest on sampling rather than a certificate.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    std::string method;
    bool empirical = false;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v, double tol = 0.0) const { return v >= lo - tol && v <= hi + tol; }
    // Distance from the point v to the interval (0 when inside).
    double dist(double v) const { return std::max({lo - v, v - hi, 0.0}); }
};

inline Bracket exact_bracket(double v, std::string method) {
    return Bracket{v, v, std::move(method), false};
}

inline Bracket operator+(const Bracket& a, const Bracket& b) {
    return Bracket{a.lo + b.lo, a.hi + b.hi, a.method, a.empirical || b.empirical};
}

}  // namespace numrad
