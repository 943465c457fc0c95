#include "vbs/relations.hpp"

#include <algorithm>
#include <functional>

namespace vbs {

ModuleBlocks ModuleBlocks::constant(int q, int m, int n, bool twisted) {
    ModuleBlocks b;
    b.q = q;
    b.twisted = twisted;
    const auto um = static_cast<std::size_t>(m);
    b.v.assign(um, Table::Ones(n, n));
    b.t.assign(um, Table::Ones(n, n));
    b.r.assign(um, Table::Ones(n, n));
    if (twisted)
        b.qcoef.assign(um, Eigen::VectorXi::Ones(n));
    else
        b.s.assign(um, Table::Zero(n, n));
    return b;
}

using Int = std::int64_t;

namespace detail {

/// Coefficient lookups and birack operations shared by the relation families.
/// When `log` is set, every coefficient read records its variable id.
struct Terms {
    const FiniteBirack& b;
    const ShadowAction& sh;
    const ModuleBlocks& m;
    std::vector<int>* log = nullptr;

    int n() const { return b.size(); }
    int block(int A, int x, int y) const { return (A * n() + x) * n() + y; }
    int stride() const { return sh.size() * n() * n(); }
    void note(int var) const {
        if (log) log->push_back(var);
    }

    Int v(int A, int x, int y) const {
        note(block(A, x, y));
        return m.v[static_cast<std::size_t>(A)](x, y);
    }
    Int t(int A, int x, int y) const {
        note(stride() + block(A, x, y));
        return m.t[static_cast<std::size_t>(A)](x, y);
    }
    Int s(int A, int x, int y) const {
        if (m.twisted) return 0;
        note(2 * stride() + block(A, x, y));
        return m.s[static_cast<std::size_t>(A)](x, y);
    }
    Int r(int A, int x, int y) const {
        note(3 * stride() + block(A, x, y));
        return m.r[static_cast<std::size_t>(A)](x, y);
    }
    Int q(int A, int x) const {
        note(4 * stride() + A * n() + x);
        return m.qcoef[static_cast<std::size_t>(A)](x);
    }
    int act(int A, int x) const { return sh.act(A, x); }
    int up(int a, int c) const { return b.up(a, c); }
    int dn(int a, int c) const { return b.down(a, c); }
    int vup(int a, int c) const { return b.vup(a, c); }
    int vdn(int a, int c) const { return b.vdown(a, c); }
};

}  // namespace detail

namespace {

using detail::Terms;

using Family = std::function<Int(const Terms&, int, int, int, int)>;

// Shared by both generator lists; numbering follows the plain list.
Int g_v_symmetry(const Terms& k, int A, int x, int y, int) { return k.v(A, k.vdn(y, x), k.vup(x, y)) - k.v(A, x, y); }

Int g_vvv_a(const Terms& k, int A, int x, int y, int z) {
    return k.v(k.act(A, k.vdn(y, z)), x, k.vup(z, y)) * k.v(A, y, z) -
           k.v(k.act(A, k.vdn(k.vdn(x, y), z)), k.vup(y, x), k.vup(z, k.vdn(x, y))) * k.v(A, x, y);
}

Int g_vvv_b(const Terms& k, int A, int x, int y, int z) {
    return k.v(k.act(A, k.vdn(k.vdn(x, y), z)), k.vup(y, x), k.vup(z, k.vdn(x, y))) *
               k.v(A, k.vdn(x, k.vup(z, y)), k.vdn(y, z)) -
           k.v(k.act(A, z), x, y) * k.v(A, y, z);
}

Int g_vvv_c(const Terms& k, int A, int x, int y, int z) {
    return k.v(k.act(A, z), x, y) * k.v(A, k.vdn(x, y), z) -
           k.v(k.act(A, k.vdn(y, z)), x, k.vup(z, y)) * k.v(A, k.vdn(x, k.vup(z, y)), k.vdn(y, z));
}

Int g_vvb(const Terms& k, int A, int x, int y, int z) {
    return k.v(k.act(A, k.dn(y, z)), x, k.up(z, y)) * k.v(A, k.vdn(x, k.up(z, y)), k.dn(y, z)) -
           k.v(k.act(A, z), x, y) * k.v(A, k.vdn(x, y), z);
}

Int g_vr(const Terms& k, int A, int x, int y, int z) {
    return k.v(A, k.vdn(x, k.up(z, y)), k.dn(y, z)) * k.r(A, y, z) -
           k.r(k.act(A, k.vdn(k.vdn(x, y), z)), k.vup(y, x), k.vup(z, k.vdn(x, y))) * k.v(k.act(A, z), x, y);
}

Int g_vt(const Terms& k, int A, int x, int y, int z) {
    return k.v(k.act(A, k.dn(y, z)), x, k.up(z, y)) * k.t(A, y, z) -
           k.t(k.act(A, k.vdn(k.vdn(x, y), z)), k.vup(y, x), k.vup(z, k.vdn(x, y))) * k.v(A, k.vdn(x, y), z);
}

Int g_vs(const Terms& k, int A, int x, int y, int z) {
    return k.v(k.act(A, k.dn(y, z)), x, k.up(z, y)) * k.s(A, y, z) -
           k.s(k.act(A, k.vdn(k.vdn(x, y), z)), k.vup(y, x), k.vup(z, k.vdn(x, y))) * k.v(k.act(A, z), x, y);
}

Int g_rr(const Terms& k, int A, int x, int y, int z) {
    return k.r(A, k.dn(x, k.up(z, y)), k.dn(y, z)) * k.r(k.act(A, k.dn(y, z)), x, k.up(z, y)) -
           k.r(A, k.dn(x, y), z) * k.r(k.act(A, z), x, y);
}

// index shared by the classical third-move families: (A.(x_y)_z, y^x, z^{x_y})
int third_region(const Terms& k, int A, int x, int y, int z) { return k.act(A, k.dn(k.dn(x, y), z)); }

Int g_tr(const Terms& k, int A, int x, int y, int z) {
    return k.t(A, k.dn(x, k.up(z, y)), k.dn(y, z)) * k.r(A, y, z) -
           k.r(third_region(k, A, x, y, z), k.up(y, x), k.up(z, k.dn(x, y))) * k.t(k.act(A, z), x, y);
}

Int g_sr(const Terms& k, int A, int x, int y, int z) {
    return k.s(A, k.dn(x, k.up(z, y)), k.dn(y, z)) * k.r(k.act(A, k.dn(y, z)), x, k.up(z, y)) -
           k.r(third_region(k, A, x, y, z), k.up(y, x), k.up(z, k.dn(x, y))) * k.s(k.act(A, z), x, y);
}

Int g_tt(const Terms& k, int A, int x, int y, int z) {
    return k.t(k.act(A, k.dn(y, z)), x, k.up(z, y)) * k.t(A, y, z) -
           k.t(third_region(k, A, x, y, z), k.up(y, x), k.up(z, k.dn(x, y))) * k.t(A, k.dn(x, y), z);
}

Int g_ts(const Terms& k, int A, int x, int y, int z) {
    return k.t(k.act(A, k.dn(y, z)), x, k.up(z, y)) * k.s(A, y, z) -
           k.s(third_region(k, A, x, y, z), k.up(y, x), k.up(z, k.dn(x, y))) * k.t(k.act(A, z), x, y);
}

Int g_s(const Terms& k, int A, int x, int y, int z) {
    const int B = third_region(k, A, x, y, z);
    return k.s(k.act(A, k.dn(y, z)), x, k.up(z, y)) -
           k.t(B, k.up(y, x), k.up(z, k.dn(x, y))) * k.s(A, k.dn(x, y), z) * k.r(k.act(A, z), x, y) -
           k.s(B, k.up(y, x), k.up(z, k.dn(x, y))) * k.s(k.act(A, z), x, y);
}

const std::vector<Family>& virtual_families() {
    static const std::vector<Family> f{g_v_symmetry, g_vvv_a, g_vvv_b, g_vvv_c, g_vvb, g_vr, g_vt,
                                       g_vs,         g_rr,    g_tr,    g_sr,    g_tt,  g_ts, g_s};
    return f;
}

// (A, x, y, z) families of the twisted list; the view supplies T.
std::vector<Family> twisted_families(const BirackView& view) {
    const auto T = [view](int x) { return view.twist(x); };
    std::vector<Family> f{
        g_v_symmetry, g_vvv_a, g_vvv_b, g_vvv_c, g_vvb, g_vr, g_vt, g_rr, g_tr, g_tt};
    f.push_back([T](const Terms& k, int A, int x, int, int) { return 1 - k.q(A, T(x)) * k.q(A, x); });
    f.push_back([T](const Terms& k, int A, int x, int y, int) { return k.v(A, x, T(y)) - k.v(A, x, y); });
    f.push_back([T](const Terms& k, int A, int x, int y, int) { return k.v(A, T(x), y) - k.v(A, x, y); });
    f.push_back([T](const Terms& k, int A, int x, int y, int) {
        return k.q(k.act(A, y), x) * k.v(A, x, y) - k.v(A, T(x), y) * k.q(A, k.vdn(x, y));
    });
    f.push_back([T](const Terms& k, int A, int x, int y, int) {
        return k.v(A, x, T(y)) * k.q(A, y) - k.q(k.act(A, k.vdn(x, y)), k.vup(y, x)) * k.v(A, x, y);
    });
    // twisted third move: the outer virtual crossing carries labels B(y^~x, x_~y)
    f.push_back([T](const Terms& k, int A, int x, int y, int) {
        const int p = k.up(k.vdn(x, y), k.vup(y, x)), q = k.dn(k.vup(y, x), k.vdn(x, y));
        return k.v(A, p, q) * k.q(A, k.dn(T(x), T(y))) * k.r(A, T(x), T(y)) * k.q(k.act(A, y), x) * k.v(A, x, y) -
               k.t(A, k.vup(y, x), k.vdn(x, y));
    });
    f.push_back([T](const Terms& k, int A, int x, int y, int) {
        const int p = k.up(k.vdn(x, y), k.vup(y, x)), q = k.dn(k.vup(y, x), k.vdn(x, y));
        return k.q(k.act(A, k.dn(T(x), T(y))), k.up(T(y), T(x))) * k.t(A, T(x), T(y)) * k.q(A, y) -
               k.v(A, p, q) * k.r(A, k.vup(y, x), k.vdn(x, y)) * k.v(A, x, y);
    });
    return f;
}

// 1 - prod_k (t r + s) along the kink orbit of x, region A held fixed
Int g_phone_cord(const Terms& k, int A, int x) {
    const KinkData& kink = k.b.kink();
    const Int q = k.m.q;
    Int product = 1;
    int xk = x;
    for (int step = 0; step < kink.rank; ++step) {
        const int al = kink.alpha[static_cast<std::size_t>(xk)];
        const int B = k.sh.act_inverse(A, al);
        product = mod(product * mod(k.t(B, xk, al) * k.r(B, xk, al) + k.s(B, xk, al), q), q);
        xk = kink.pi[static_cast<std::size_t>(xk)];
    }
    return 1 - product;
}

std::vector<Family> families_for(const BirackView& view, bool twisted) {
    return twisted ? twisted_families(view) : virtual_families();
}

}  // namespace

std::optional<RelationFailure> first_relation_failure(BirackView view, const ShadowAction& sh,
                                                      const ModuleBlocks& m) {
    const FiniteBirack& b = view.base();
    const Terms k{b, sh, m};
    const int n = b.size();
    const Int q = m.q;
    const std::vector<Family> families = families_for(view, m.twisted);
    for (std::size_t g = 0; g < families.size(); ++g)
        for (int A = 0; A < sh.size(); ++A)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (mod(families[g](k, A, x, y, z), q) != 0)
                            return RelationFailure{static_cast<int>(g) + 1, {A, x, y, z}};
    for (int A = 0; A < sh.size(); ++A)
        for (int x = 0; x < n; ++x)
            if (mod(g_phone_cord(k, A, x), q) != 0)
                return RelationFailure{static_cast<int>(families.size()) + 1, {A, x}};
    return std::nullopt;
}

RelationSystem::RelationSystem(BirackView view, const ShadowAction& s, bool twisted)
    : view_(view), shadow_(&s), twisted_(twisted), families_(families_for(view, twisted)) {
    const int n = view.size(), m = s.size();
    variables_ = 4 * m * n * n + m * n;
    // probe with an all-ones structure to learn which coefficients each instance reads
    const ModuleBlocks probe = ModuleBlocks::constant(2, m, n, twisted);
    std::vector<int> log;
    const Terms k{view.base(), s, probe, &log};
    const auto record = [&](int generator, std::vector<int> witness) {
        std::sort(log.begin(), log.end());
        log.erase(std::unique(log.begin(), log.end()), log.end());
        instances_.push_back({generator, std::move(witness), log});
        log.clear();
    };
    for (std::size_t g = 0; g < families_.size(); ++g)
        for (int A = 0; A < m; ++A)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        families_[g](k, A, x, y, z);
                        record(static_cast<int>(g) + 1, {A, x, y, z});
                    }
    for (int A = 0; A < m; ++A)
        for (int x = 0; x < n; ++x) {
            g_phone_cord(k, A, x);
            record(static_cast<int>(families_.size()) + 1, {A, x});
        }
}

bool RelationSystem::holds(const Instance& inst, const ModuleBlocks& m) const {
    const Terms k{view_.base(), *shadow_, m};
    const auto& w = inst.witness;
    const Int value = w.size() == 2 ? g_phone_cord(k, w[0], w[1])
                                    : families_[static_cast<std::size_t>(inst.generator - 1)](k, w[0], w[1], w[2], w[3]);
    return mod(value, Int{m.q}) == 0;
}

RelationSystem::Variable RelationSystem::variable(int id) const {
    const int n = view_.size();
    const int stride = shadow_->size() * n * n;
    if (id >= 4 * stride) {
        const int rest = id - 4 * stride;
        return {Coefficient::Q, rest / n, rest % n, 0};
    }
    static constexpr Coefficient kinds[] = {Coefficient::V, Coefficient::T, Coefficient::S, Coefficient::R};
    const int rest = id % stride;
    return {kinds[id / stride], rest / (n * n), (rest / n) % n, rest % n};
}

void RelationSystem::assign(ModuleBlocks& m, int id, int value) const {
    const Variable var = variable(id);
    const auto A = static_cast<std::size_t>(var.A);
    switch (var.kind) {
    case Coefficient::V: m.v[A](var.x, var.y) = value; break;
    case Coefficient::T: m.t[A](var.x, var.y) = value; break;
    case Coefficient::S: m.s[A](var.x, var.y) = value; break;
    case Coefficient::R: m.r[A](var.x, var.y) = value; break;
    case Coefficient::Q: m.qcoef[A](var.x) = value; break;
    default: break;
    }
}

}  // namespace vbs
