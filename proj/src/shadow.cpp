#include "vbs/shadow.hpp"

#include "vbs/error.hpp"

#include <string>
#include <vector>

namespace vbs {

ShadowAction shadow_from_table(BirackView view, const Table& table) {
    const FiniteBirack& b = view.base();
    const int n = b.size();
    const int m = static_cast<int>(table.rows());
    if (m < 1 || table.cols() != n)
        throw DimensionMismatch("shadow table must be m x " + std::to_string(n) + " with m >= 1");

    ShadowAction s;
    s.m_ = m;
    s.table_ = table;
    s.inverse_ = Table::Constant(m, n, -1);
    for (int x = 0; x < n; ++x)
        for (int A = 0; A < m; ++A) {
            const int B = table(A, x);
            if (B < 0 || B >= m) throw AxiomViolation("shadow entries in range", {A, x});
            if (s.inverse_(B, x) >= 0) throw AxiomViolation("shadow column is a permutation", {A, x});
            s.inverse_(B, x) = A;
        }

    const auto act = [&](int A, int x) { return table(A, x); };
    for (int A = 0; A < m; ++A)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const int direct = act(act(A, x), y);
                const int classical = act(act(A, b.down(y, x)), b.up(x, y));
                const int virt = act(act(A, b.vdown(y, x)), b.vup(x, y));
                if (classical != direct || virt != direct) throw AxiomViolation("shadow axiom", {A, x, y});
            }

    const Permutation& pi = b.kink().pi;
    for (int A = 0; A < m; ++A)
        for (int x = 0; x < n; ++x)
            if (act(A, x) != act(A, pi[static_cast<std::size_t>(x)]))
                throw AxiomViolation("columns x and pi(x) agree", {A, x});

    if (view.twisted())
        for (int A = 0; A < m; ++A)
            for (int x = 0; x < n; ++x)
                if (act(A, view.twist(x)) != act(A, x)) throw AxiomViolation("A.Tx = A.x", {A, x});
    return s;
}

ShadowAction trivial_shadow(BirackView b) {
    return shadow_from_table(b, Table::Zero(1, b.size()));
}

}  // namespace vbs
