#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace vbs {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = MatrixX<std::int64_t>;

/// Least non-negative residue.
template <typename Scalar>
Scalar mod(Scalar a, Scalar q) {
    const Scalar r = a % q;
    return r < 0 ? r + q : r;
}

template <typename Scalar>
bool is_prime(Scalar q) {
    if (q < 2) return false;
    for (Scalar d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

/// Multiplicative inverse of a modulo q, or 0 when a is not a unit.
template <typename Scalar>
Scalar inverse_mod(Scalar a, Scalar q) {
    Scalar r0 = q, r1 = mod(a, q), s0 = 0, s1 = 1;
    while (r1 != 0) {
        const Scalar k = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
    }
    return r0 == 1 ? mod(s0, q) : Scalar(0);
}

/// Rank over the field Z/p by Gaussian elimination.
template <typename Derived>
Eigen::Index rank_mod_prime(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar p) {
    using Scalar = typename Derived::Scalar;
    MatrixX<Scalar> a = m.unaryExpr([p](Scalar v) { return mod(v, p); });
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
        Eigen::Index pivot = rank;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        a.row(pivot).swap(a.row(rank));
        const Scalar inv = inverse_mod(a(rank, col), p);
        a.row(rank) = a.row(rank).unaryExpr([&](Scalar v) { return mod(v * inv, p); });
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r == rank || a(r, col) == 0) continue;
            const Scalar f = a(r, col);
            for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) = mod(a(r, c) - f * a(rank, c), p);
        }
        ++rank;
    }
    return rank;
}

/// Diagonal of a Smith-type form of m over Z/q, one entry per column
/// (columns beyond the rank contribute 0). Entries are reduced to
/// gcd(d, q), so they are canonical up to units.
template <typename Derived>
std::vector<typename Derived::Scalar> smith_diagonal_mod(const Eigen::MatrixBase<Derived>& m,
                                                         typename Derived::Scalar q) {
    using Scalar = typename Derived::Scalar;
    MatrixX<Scalar> a = m.unaryExpr([q](Scalar v) { return mod(v, q); });
    const Eigen::Index rows = a.rows(), cols = a.cols();
    std::vector<Scalar> diag(static_cast<std::size_t>(cols), 0);

    // Unimodular row and column operations keep the kernel size.
    struct Step {
        Scalar s0, t0, s1, t1;
    };
    // [s0 t0; s1 t1] (x, y) = (g, 0) with determinant +-1
    const auto step = [](Scalar x, Scalar y) {
        if (y % x == 0) return Step{1, 0, -(y / x), 1};
        Scalar s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (y != 0) {
            const Scalar k = x / y;
            std::tie(x, y) = std::make_pair(y, x - k * y);
            std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
        }
        return Step{s0, t0, s1, t1};
    };

    for (Eigen::Index k = 0; k < std::min(rows, cols); ++k) {
        bool found = false;
        for (Eigen::Index c = k; c < cols && !found; ++c)
            for (Eigen::Index r = k; r < rows && !found; ++r)
                if (a(r, c) != 0) {
                    a.row(r).swap(a.row(k));
                    a.col(c).swap(a.col(k));
                    found = true;
                }
        if (!found) break;
        // the pivot strictly decreases until it divides its row and column
        for (bool clean = false; !clean;) {
            for (Eigen::Index r = k + 1; r < rows; ++r) {
                if (a(r, k) == 0) continue;
                const Step st = step(a(k, k), a(r, k));
                for (Eigen::Index c = 0; c < cols; ++c) {
                    const Scalar u = a(k, c), v = a(r, c);
                    a(k, c) = mod(st.s0 * u + st.t0 * v, q);
                    a(r, c) = mod(st.s1 * u + st.t1 * v, q);
                }
            }
            for (Eigen::Index c = k + 1; c < cols; ++c) {
                if (a(k, c) == 0) continue;
                const Step st = step(a(k, k), a(k, c));
                for (Eigen::Index r = 0; r < rows; ++r) {
                    const Scalar u = a(r, k), v = a(r, c);
                    a(r, k) = mod(st.s0 * u + st.t0 * v, q);
                    a(r, c) = mod(st.s1 * u + st.t1 * v, q);
                }
            }
            clean = true;
            for (Eigen::Index r = k + 1; r < rows && clean; ++r) clean = a(r, k) == 0;
        }
        diag[static_cast<std::size_t>(k)] = std::gcd(a(k, k), q);
    }
    return diag;
}

/// Kernel of m over (Z/q)^cols, described by its cyclic factors.
struct ModuleDescriptor {
    std::uint64_t count = 1;
    /// Invariant factors of the kernel, each dividing the next, trivial ones dropped.
    std::vector<std::int64_t> factors;

    friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;
    friend bool operator<(const ModuleDescriptor& a, const ModuleDescriptor& b) {
        return std::tie(a.count, a.factors) < std::tie(b.count, b.factors);
    }
};

/// Rewrites a list of cyclic orders as invariant factors d1 | d2 | ... .
inline std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& orders) {
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> by_prime;  // prime -> prime powers
    for (std::int64_t g : orders) {
        for (std::int64_t p = 2; g > 1; ++p) {
            if (p * p > g) p = g;
            std::int64_t power = 1;
            while (g % p == 0) {
                g /= p;
                power *= p;
            }
            if (power == 1) continue;
            auto it = std::find_if(by_prime.begin(), by_prime.end(), [p](const auto& e) { return e.first == p; });
            if (it == by_prime.end()) it = by_prime.insert(by_prime.end(), {p, {}});
            it->second.push_back(power);
        }
    }
    std::size_t length = 0;
    for (auto& [p, powers] : by_prime) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        length = std::max(length, powers.size());
    }
    std::vector<std::int64_t> out(length, 1);
    for (const auto& [p, powers] : by_prime)
        for (std::size_t k = 0; k < powers.size(); ++k) out[k] *= powers[k];
    std::reverse(out.begin(), out.end());
    return out;
}

inline std::uint64_t checked_multiply(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw std::overflow_error("kernel size exceeds 64 bits");
    return a * b;
}

/// Number of z in (Z/q)^cols with m z = 0, with the kernel's group structure.
template <typename Derived>
ModuleDescriptor solution_count(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar q) {
    using Scalar = typename Derived::Scalar;
    ModuleDescriptor out;
    std::vector<std::int64_t> orders;
    for (Scalar d : smith_diagonal_mod(m, q)) {
        const auto g = static_cast<std::int64_t>(d == 0 ? q : std::gcd(d, q));
        out.count = checked_multiply(out.count, static_cast<std::uint64_t>(g));
        orders.push_back(g);
    }
    out.factors = invariant_factors(orders);
    return out;
}

/// Kernel size only; uses the rank when q is prime.
template <typename Derived>
std::uint64_t kernel_size(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar q) {
    if (is_prime(q)) {
        std::uint64_t out = 1;
        for (Eigen::Index k = rank_mod_prime(m, q); k < m.cols(); ++k)
            out = checked_multiply(out, static_cast<std::uint64_t>(q));
        return out;
    }
    return solution_count(m, q).count;
}

}  // namespace vbs
