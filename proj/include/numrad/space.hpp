#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "numrad/errors.hpp"
#include "numrad/scalar.hpp"

namespace numrad {

using json = nlohmann::ordered_json;

// Coordinate vector in a space; the space is passed alongside, not stored.
struct Vec {
    std::vector<Cx> c;

    Vec() = default;
    explicit Vec(std::vector<Cx> coords) : c(std::move(coords)) {}
    explicit Vec(std::size_t n) : c(n, Cx(0.0)) {}

    int dim() const { return static_cast<int>(c.size()); }
    Cx& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const Cx& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    static Vec basis(int n, int i) {
        Vec v(static_cast<std::size_t>(n));
        v[i] = Cx(1.0);
        return v;
    }
};

// Functional given by its coefficient vector; evaluation is the bilinear
// pairing sum_i f_i x_i with no conjugation (the dual norm carries the
// modulus in the complex case).
struct Functional {
    std::vector<Cx> c;

    Functional() = default;
    explicit Functional(std::vector<Cx> coords) : c(std::move(coords)) {}
    explicit Functional(std::size_t n) : c(n, Cx(0.0)) {}

    int dim() const { return static_cast<int>(c.size()); }
    Cx& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const Cx& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    static Functional basis(int n, int i) {
        Functional f(static_cast<std::size_t>(n));
        f[i] = Cx(1.0);
        return f;
    }
};

inline Cx pairing(const Functional& f, const Vec& x) {
    if (f.dim() != x.dim()) throw DimensionMismatch("pairing");
    Cx s(0.0);
    for (int i = 0; i < x.dim(); ++i) s += f[i] * x[i];
    return s;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("vec difference");
    Vec r(a.c);
    for (int i = 0; i < r.dim(); ++i) r[i] -= b[i];
    return r;
}

inline Functional operator-(const Functional& a, const Functional& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("functional difference");
    Functional r(a.c);
    for (int i = 0; i < r.dim(); ++i) r[i] -= b[i];
    return r;
}

inline Vec operator*(Cx s, const Vec& a) {
    Vec r(a.c);
    for (auto& z : r.c) z *= s;
    return r;
}

inline Functional operator*(Cx s, const Functional& a) {
    Functional r(a.c);
    for (auto& z : r.c) z *= s;
    return r;
}

enum class SpaceKind { Lp, Polyhedral, ZNorm, SumInf };

inline constexpr double kPInf = std::numeric_limits<double>::infinity();

// Finite-dimensional normed space descriptor.
//
//   Lp(p)        closed-form p-norm, 1 <= p <= inf
//   Polyhedral   norm(x) = max_j |v_j*(x)| over stored dual vertices
//                (representatives up to sign; real scalars only)
//   ZNorm        norm(x) = max_i |x_i| + (sum_i |x_i|^2 / 2^i)^(1/2)
//   SumInf       max of the component norms on a two-block direct sum
struct Space {
    SpaceKind kind = SpaceKind::Lp;
    int dim = 0;
    Field field = Field::Real;
    double p = 2.0;                                // Lp only
    std::vector<Functional> dual_vertex_reps;      // Polyhedral only, one per +- pair
    std::shared_ptr<const Space> left, right;      // SumInf only

    static Space lp(double p_, int n, Field f = Field::Real) {
        if (n < 1) throw Error("space dim must be positive");
        if (!(p_ >= 1.0)) throw Error("p must lie in [1, inf]");
        Space s;
        s.kind = SpaceKind::Lp;
        s.dim = n;
        s.field = f;
        s.p = p_;
        return s;
    }
    static Space l1(int n, Field f = Field::Real) { return lp(1.0, n, f); }
    static Space l2(int n, Field f = Field::Real) { return lp(2.0, n, f); }
    static Space linf(int n, Field f = Field::Real) { return lp(kPInf, n, f); }

    static Space polyhedral(std::vector<Functional> dual_vertices) {
        if (dual_vertices.empty()) throw Error("polyhedral space needs dual vertices");
        Space s;
        s.kind = SpaceKind::Polyhedral;
        s.dim = dual_vertices.front().dim();
        s.field = Field::Real;
        for (const auto& f : dual_vertices) {
            if (f.dim() != s.dim) throw DimensionMismatch("polyhedral dual vertex");
        }
        s.dual_vertex_reps = canonicalize_reps(std::move(dual_vertices));
        return s;
    }

    static Space znorm(int n) {
        if (n < 1) throw Error("space dim must be positive");
        Space s;
        s.kind = SpaceKind::ZNorm;
        s.dim = n;
        s.field = Field::Real;
        return s;
    }

    static Space sum_inf(Space l, Space r) {
        if (l.field != r.field) throw Error("sum_inf components must share the scalar field");
        Space s;
        s.kind = SpaceKind::SumInf;
        s.field = l.field;
        s.dim = l.dim + r.dim;
        s.left = std::make_shared<Space>(std::move(l));
        s.right = std::make_shared<Space>(std::move(r));
        return s;
    }

    bool is_lp(double q) const { return kind == SpaceKind::Lp && p == q; }
    bool is_hilbert() const { return is_lp(2.0); }

    // Keeps one representative per {f, -f} pair, first nonzero coordinate
    // positive, duplicates removed.
    static std::vector<Functional> canonicalize_reps(std::vector<Functional> fs) {
        std::vector<Functional> out;
        for (auto& f : fs) {
            for (int i = 0; i < f.dim(); ++i) {
                if (std::abs(f[i]) > 1e-14) {
                    if (f[i].real() < 0.0) f = Cx(-1.0) * f;
                    break;
                }
            }
            bool dup = false;
            for (const auto& g : out) {
                double d = 0.0;
                for (int i = 0; i < f.dim(); ++i) d = std::max(d, std::abs(f[i] - g[i]));
                if (d <= 1e-12) {
                    dup = true;
                    break;
                }
            }
            if (!dup) out.push_back(f);
        }
        return out;
    }
};

namespace detail {

inline void split_sum(const Space& s, const Vec& x, Vec& xl, Vec& xr) {
    const int nl = s.left->dim;
    xl = Vec(static_cast<std::size_t>(nl));
    xr = Vec(static_cast<std::size_t>(s.right->dim));
    for (int i = 0; i < nl; ++i) xl[i] = x[i];
    for (int i = 0; i < s.right->dim; ++i) xr[i] = x[nl + i];
}

inline void split_sum(const Space& s, const Functional& f, Functional& fl, Functional& fr) {
    const int nl = s.left->dim;
    fl = Functional(static_cast<std::size_t>(nl));
    fr = Functional(static_cast<std::size_t>(s.right->dim));
    for (int i = 0; i < nl; ++i) fl[i] = f[i];
    for (int i = 0; i < s.right->dim; ++i) fr[i] = f[nl + i];
}

inline Vec join_sum(const Vec& xl, const Vec& xr) {
    Vec x(xl.c);
    x.c.insert(x.c.end(), xr.c.begin(), xr.c.end());
    return x;
}

inline Functional join_sum(const Functional& fl, const Functional& fr) {
    Functional f(fl.c);
    f.c.insert(f.c.end(), fr.c.begin(), fr.c.end());
    return f;
}

// Weight 2^{-i} for the i-th coordinate (1-based) of the Z-norm.
inline double zweight(int i0) { return std::ldexp(1.0, -(i0 + 1)); }

inline double zquad(const Vec& x) {
    double s = 0.0;
    for (int i = 0; i < x.dim(); ++i) s += std::norm(x[i]) * zweight(i);
    return std::sqrt(s);
}

}  // namespace detail

inline double norm_of(const Space& s, const Vec& x) {
    if (x.dim() != s.dim) throw DimensionMismatch("norm_of");
    switch (s.kind) {
        case SpaceKind::Lp: {
            if (s.p == kPInf) {
                double m = 0.0;
                for (const auto& z : x.c) m = std::max(m, std::abs(z));
                return m;
            }
            if (s.p == 1.0) {
                double m = 0.0;
                for (const auto& z : x.c) m += std::abs(z);
                return m;
            }
            if (s.p == 2.0) {
                double m = 0.0;
                for (const auto& z : x.c) m += std::norm(z);
                return std::sqrt(m);
            }
            double m = 0.0;
            for (const auto& z : x.c) m += std::pow(std::abs(z), s.p);
            return std::pow(m, 1.0 / s.p);
        }
        case SpaceKind::Polyhedral: {
            double m = 0.0;
            for (const auto& f : s.dual_vertex_reps) m = std::max(m, std::abs(pairing(f, x)));
            return m;
        }
        case SpaceKind::ZNorm: {
            double m = 0.0;
            for (const auto& z : x.c) m = std::max(m, std::abs(z));
            return m + detail::zquad(x);
        }
        case SpaceKind::SumInf: {
            Vec xl, xr;
            detail::split_sum(s, x, xl, xr);
            return std::max(norm_of(*s.left, xl), norm_of(*s.right, xr));
        }
    }
    throw Error("unreachable space kind");
}

// Conjugate exponent; inf <-> 1.
inline double conjugate_exponent(double p) {
    if (p == kPInf) return 1.0;
    if (p == 1.0) return kPInf;
    return p / (p - 1.0);
}

// ---- JSON wire format ---------------------------------------------------
// Space: {"kind": "lp"|"polyhedral"|"znorm"|"sum_inf", "dim": n,
//         "field": "real"|"complex", "p": number|"inf",
//         "dual_vertices": [[...]], "left"/"right": nested}
// Scalars: plain number (real) or [re, im] (complex).

inline json scalar_to_json(Cx z, Field f) {
    if (f == Field::Real) return json(z.real());
    return json::array({z.real(), z.imag()});
}

inline Cx scalar_from_json(const json& j) {
    if (j.is_number()) return Cx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return Cx(j[0].get<double>(), j[1].get<double>());
    throw SchemaError("scalar must be a number or an [re, im] pair");
}

inline json coords_to_json(const std::vector<Cx>& c, Field f) {
    json a = json::array();
    for (const auto& z : c) a.push_back(scalar_to_json(z, f));
    return a;
}

inline std::vector<Cx> coords_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("coordinate list must be an array");
    std::vector<Cx> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(scalar_from_json(e));
    return c;
}

inline json to_json(const Space& s) {
    json j;
    switch (s.kind) {
        case SpaceKind::Lp: {
            j["kind"] = "lp";
            j["dim"] = s.dim;
            j["field"] = s.field == Field::Real ? "real" : "complex";
            if (s.p == kPInf)
                j["p"] = "inf";
            else
                j["p"] = s.p;
            break;
        }
        case SpaceKind::Polyhedral: {
            j["kind"] = "polyhedral";
            j["dim"] = s.dim;
            j["field"] = "real";
            json vs = json::array();
            for (const auto& f : s.dual_vertex_reps) vs.push_back(coords_to_json(f.c, s.field));
            j["dual_vertices"] = vs;
            break;
        }
        case SpaceKind::ZNorm: {
            j["kind"] = "znorm";
            j["dim"] = s.dim;
            j["field"] = "real";
            break;
        }
        case SpaceKind::SumInf: {
            j["kind"] = "sum_inf";
            j["dim"] = s.dim;
            j["field"] = s.field == Field::Real ? "real" : "complex";
            j["left"] = to_json(*s.left);
            j["right"] = to_json(*s.right);
            break;
        }
    }
    return j;
}

inline Space space_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("space must be an object");
    if (!j.contains("kind")) throw SchemaError("space: missing \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    Field field = Field::Real;
    if (j.contains("field")) {
        const std::string f = j["field"].get<std::string>();
        if (f == "real")
            field = Field::Real;
        else if (f == "complex")
            field = Field::Complex;
        else
            throw SchemaError("space: unknown \"field\" value '" + f + "'");
    }
    if (kind == "lp") {
        if (!j.contains("dim")) throw SchemaError("space: lp needs \"dim\"");
        if (!j.contains("p")) throw SchemaError("space: lp needs \"p\"");
        double p;
        if (j["p"].is_string()) {
            if (j["p"].get<std::string>() != "inf") throw SchemaError("space: \"p\" must be a number or \"inf\"");
            p = kPInf;
        } else {
            p = j["p"].get<double>();
        }
        return Space::lp(p, j["dim"].get<int>(), field);
    }
    if (kind == "polyhedral") {
        if (field == Field::Complex) throw SchemaError("space: polyhedral kind supports real scalars only");
        if (!j.contains("dual_vertices")) throw SchemaError("space: polyhedral needs \"dual_vertices\"");
        std::vector<Functional> vs;
        for (const auto& e : j["dual_vertices"]) vs.emplace_back(coords_from_json(e));
        return Space::polyhedral(std::move(vs));
    }
    if (kind == "znorm") {
        if (field == Field::Complex) throw SchemaError("space: znorm kind supports real scalars only");
        if (!j.contains("dim")) throw SchemaError("space: znorm needs \"dim\"");
        return Space::znorm(j["dim"].get<int>());
    }
    if (kind == "sum_inf") {
        if (!j.contains("left") || !j.contains("right"))
            throw SchemaError("space: sum_inf needs \"left\" and \"right\"");
        return Space::sum_inf(space_from_json(j["left"]), space_from_json(j["right"]));
    }
    throw SchemaError("space: unknown \"kind\" value '" + kind + "'");
}

}  // namespace numrad
