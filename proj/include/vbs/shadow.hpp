#pragma once

#include "vbs/birack.hpp"

#include <Eigen/Core>

namespace vbs {

/// Right action of a birack X on a finite set S of region labels.
/// table(A, x) = A . x, 0-based.
class ShadowAction {
public:
    int size() const noexcept { return m_; }
    int birack_size() const noexcept { return static_cast<int>(table_.cols()); }

    int act(int A, int x) const { return table_(A, x); }
    /// A .^{-1} x, the unique B with B . x = A.
    int act_inverse(int A, int x) const { return inverse_(A, x); }

    const Table& table() const noexcept { return table_; }

    friend bool operator==(const ShadowAction& a, const ShadowAction& b) {
        return a.table_ == b.table_;
    }

private:
    friend ShadowAction shadow_from_table(BirackView b, const Table& table);

    int m_ = 0;
    Table table_;
    Table inverse_;
};

/// Validates right invertibility, the shadow axiom
/// (A.y_x).x^y = (A.y_~x).x^~y = (A.x).y, agreement of the x and pi(x)
/// columns, and A.Tx = A.x when `b` is twisted.
ShadowAction shadow_from_table(BirackView b, const Table& table);

/// The one-element shadow.
ShadowAction trivial_shadow(BirackView b);

}  // namespace vbs
