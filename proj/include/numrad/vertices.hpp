#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <string>
#include <vector>

#include "numrad/errors.hpp"
#include "numrad/space.hpp"

namespace numrad {

// Enumeration caps: combinatorial blowup fails loudly instead of hanging.
struct VertexCaps {
    int structured = 8;  // l1 / linf structure
    int general = 4;     // arbitrary polytopes
};

namespace detail {

inline void require_real(const Space& s, const char* op) {
    if (s.field != Field::Real)
        throw NotPolyhedral(std::string(op) + ": complex unit balls are not polytopes");
}

inline std::vector<std::vector<Cx>> sign_vectors(int n) {
    std::vector<std::vector<Cx>> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Cx> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? Cx(-1.0) : Cx(1.0);
        out.push_back(std::move(v));
    }
    return out;
}

// Vertices of {x : |v_j*(x)| <= 1 for all stored reps}: intersect every
// n-subset of the +-hyperplanes and keep feasible, deduplicated points.
inline std::vector<Vec> polar_vertices(const Space& s, const VertexCaps& caps) {
    const int n = s.dim;
    if (n > caps.general)
        throw CapExceeded("general polytope vertex enumeration capped at dim " +
                          std::to_string(caps.general));
    std::vector<Eigen::VectorXd> normals;
    for (const auto& f : s.dual_vertex_reps) {
        Eigen::VectorXd a(n);
        for (int i = 0; i < n; ++i) a(i) = f[i].real();
        normals.push_back(a);
        normals.push_back(-a);
    }
    const int m = static_cast<int>(normals.size());
    std::vector<Vec> out;
    std::vector<int> idx(static_cast<std::size_t>(n));
    // iterate n-subsets of the m constraints
    std::vector<int> comb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comb[static_cast<std::size_t>(i)] = i;
    auto advance = [&]() -> bool {
        int i = n - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - n + i) --i;
        if (i < 0) return false;
        ++comb[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < n; ++k) comb[static_cast<std::size_t>(k)] = comb[static_cast<std::size_t>(k - 1)] + 1;
        return true;
    };
    if (m < n) return out;
    do {
        Eigen::MatrixXd M(n, n);
        for (int r = 0; r < n; ++r) M.row(r) = normals[static_cast<std::size_t>(comb[static_cast<std::size_t>(r)])];
        Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
        if (!lu.isInvertible()) continue;
        Eigen::VectorXd x = lu.solve(Eigen::VectorXd::Ones(n));
        bool feasible = true;
        for (const auto& a : normals) {
            if (a.dot(x) > 1.0 + 1e-9) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        Vec v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[i] = Cx(x(i), 0.0);
        bool dup = false;
        for (const auto& w : out) {
            double d = 0.0;
            for (int i = 0; i < n; ++i) d = std::max(d, std::abs(w[i] - v[i]));
            if (d <= 1e-9) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(std::move(v));
    } while (advance());
    return out;
}

}  // namespace detail

inline std::vector<Vec> primal_vertices(const Space& s, const VertexCaps& caps = {});
inline std::vector<Functional> dual_vertices(const Space& s, const VertexCaps& caps = {});

inline std::vector<Vec> primal_vertices(const Space& s, const VertexCaps& caps) {
    switch (s.kind) {
        case SpaceKind::Lp: {
            detail::require_real(s, "primal_vertices");
            if (s.p == kPInf) {
                if (s.dim > caps.structured)
                    throw CapExceeded("sup-norm cube has 2^dim vertices; capped at dim " +
                                      std::to_string(caps.structured));
                std::vector<Vec> out;
                for (auto& c : detail::sign_vectors(s.dim)) out.emplace_back(std::move(c));
                return out;
            }
            if (s.p == 1.0) {
                if (s.dim > caps.structured)
                    throw CapExceeded("cross-polytope enumeration capped at dim " +
                                      std::to_string(caps.structured));
                std::vector<Vec> out;
                for (int i = 0; i < s.dim; ++i) {
                    out.push_back(Vec::basis(s.dim, i));
                    out.push_back(Cx(-1.0) * Vec::basis(s.dim, i));
                }
                return out;
            }
            throw NotPolyhedral("lp ball with p = " + std::to_string(s.p) + " is strictly convex");
        }
        case SpaceKind::Polyhedral:
            return detail::polar_vertices(s, caps);
        case SpaceKind::ZNorm:
            throw NotPolyhedral("the Z-norm ball is strictly convex");
        case SpaceKind::SumInf: {
            auto vl = primal_vertices(*s.left, caps);
            auto vr = primal_vertices(*s.right, caps);
            if (s.dim > caps.structured)
                throw CapExceeded("sum_inf product enumeration capped at total dim " +
                                  std::to_string(caps.structured));
            std::vector<Vec> out;
            out.reserve(vl.size() * vr.size());
            for (const auto& a : vl)
                for (const auto& b : vr) out.push_back(detail::join_sum(a, b));
            return out;
        }
    }
    throw Error("unreachable space kind");
}

inline std::vector<Functional> dual_vertices(const Space& s, const VertexCaps& caps) {
    switch (s.kind) {
        case SpaceKind::Lp: {
            detail::require_real(s, "dual_vertices");
            if (s.p == kPInf) {
                std::vector<Functional> out;
                for (int i = 0; i < s.dim; ++i) {
                    out.push_back(Functional::basis(s.dim, i));
                    out.push_back(Cx(-1.0) * Functional::basis(s.dim, i));
                }
                return out;
            }
            if (s.p == 1.0) {
                if (s.dim > caps.structured)
                    throw CapExceeded("dual cube has 2^dim vertices; capped at dim " +
                                      std::to_string(caps.structured));
                std::vector<Functional> out;
                for (auto& c : detail::sign_vectors(s.dim)) out.emplace_back(std::move(c));
                return out;
            }
            throw NotPolyhedral("dual of lp with p = " + std::to_string(s.p) + " is strictly convex");
        }
        case SpaceKind::Polyhedral: {
            std::vector<Functional> out;
            for (const auto& f : s.dual_vertex_reps) {
                out.push_back(f);
                out.push_back(Cx(-1.0) * f);
            }
            return out;
        }
        case SpaceKind::ZNorm:
            throw NotPolyhedral("the Z-norm dual ball is strictly convex");
        case SpaceKind::SumInf: {
            // dual of a max-sum is the 1-sum: extreme points embed from the parts
            auto fl = dual_vertices(*s.left, caps);
            auto fr = dual_vertices(*s.right, caps);
            std::vector<Functional> out;
            Functional zl(static_cast<std::size_t>(s.left->dim));
            Functional zr(static_cast<std::size_t>(s.right->dim));
            for (const auto& f : fl) out.push_back(detail::join_sum(f, zr));
            for (const auto& f : fr) out.push_back(detail::join_sum(zl, f));
            return out;
        }
    }
    throw Error("unreachable space kind");
}

}  // namespace numrad
