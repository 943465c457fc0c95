#include "vbs/module.hpp"

#include "vbs/error.hpp"

#include <algorithm>
#include <sstream>

namespace vbs {

using Int = std::int64_t;

void check_units(const ModuleBlocks& m) {
    const auto require = [&](const Table& tab, const char* name, int A) {
        for (int x = 0; x < tab.rows(); ++x)
            for (int y = 0; y < tab.cols(); ++y)
                if (inverse_mod<Int>(tab(x, y), m.q) == 0)
                    throw NonUnit(std::string(name) + "[" + std::to_string(A + 1) + "," + std::to_string(x + 1) + "," +
                                  std::to_string(y + 1) + "] = " + std::to_string(tab(x, y)) +
                                  " is not a unit mod " + std::to_string(m.q));
    };
    for (int A = 0; A < m.shadow_size(); ++A) {
        const auto a = static_cast<std::size_t>(A);
        require(m.v[a], "v", A);
        require(m.t[a], "t", A);
        require(m.r[a], "r", A);
        if (m.twisted) {
            for (int x = 0; x < m.qcoef[a].size(); ++x)
                if (inverse_mod<Int>(m.qcoef[a](x), m.q) == 0)
                    throw NonUnit("q[" + std::to_string(A + 1) + "," + std::to_string(x + 1) + "] = " +
                                  std::to_string(m.qcoef[a](x)) + " is not a unit mod " + std::to_string(m.q));
            if (!m.s.empty() && !m.s[a].isZero())
                throw NonUnit("twisted modules require s = 0");
        }
    }
}

ModuleSpec module_from_blocks(BirackView b, const ShadowAction& sh, ModuleBlocks m) {
    const int n = b.size();
    const auto um = static_cast<std::size_t>(sh.size());
    if (m.q < 2) throw DimensionMismatch("modulus must be at least 2");
    if (m.twisted && !b.twisted()) throw ConstraintViolation("twisted module needs a twisted birack");
    const auto shaped = [&](const std::vector<Table>& blocks) {
        return blocks.size() == um &&
               std::all_of(blocks.begin(), blocks.end(), [n](const Table& t) { return t.rows() == n && t.cols() == n; });
    };
    if (!shaped(m.v) || !shaped(m.t) || !shaped(m.r) || (!m.twisted && !shaped(m.s)) ||
        (m.twisted && !m.s.empty() && !shaped(m.s)))
        throw DimensionMismatch("module has " + std::to_string(m.v.size()) + " block sets, shadow has " +
                                std::to_string(sh.size()) + " elements (blocks must be " + std::to_string(n) + "x" +
                                std::to_string(n) + ")");
    if (m.twisted && (m.qcoef.size() != um ||
                      std::any_of(m.qcoef.begin(), m.qcoef.end(), [n](const auto& v) { return v.size() != n; })))
        throw DimensionMismatch("twisted module needs one Q row of length " + std::to_string(n) + " per shadow element");

    const int q = m.q;
    const auto reduce = [q](auto& x) { x = x.unaryExpr([q](int e) { return mod(e, q); }); };
    for (auto* blocks : {&m.v, &m.t, &m.s, &m.r})
        for (auto& t : *blocks) reduce(t);
    for (auto& v : m.qcoef) reduce(v);

    check_units(m);
    if (auto f = first_relation_failure(b, sh, m)) throw RelationViolation(f->generator, f->witness);
    return ModuleSpec(std::move(m));
}

std::string to_string(const Term& t) {
    std::string out = t.sign < 0 ? "-" : "";
    const auto idx = [&](bool three) {
        std::string s = "[" + std::to_string(t.A + 1) + "," + std::to_string(t.x + 1);
        if (three) s += "," + std::to_string(t.y + 1);
        return s + "]";
    };
    switch (t.kind) {
    case Coefficient::One: return out + "1";
    case Coefficient::V: return out + "v" + idx(true);
    case Coefficient::VInverse: return out + "v^-1" + idx(true);
    case Coefficient::T: return out + "t" + idx(true);
    case Coefficient::S: return out + "s" + idx(true);
    case Coefficient::R: return out + "r" + idx(true);
    case Coefficient::Q: return out + "q" + idx(false);
    }
    return out;
}

SymbolicMatrix symbolic_presentation(const Diagram& d, const RegionMap& regions, const ShadowLabeling& f) {
    SymbolicMatrix m;
    m.cols = d.edge_count();
    const auto label = [&](int e) { return f.edges[static_cast<std::size_t>(e)]; };
    const auto right_region = [&](int e) {
        return f.regions[static_cast<std::size_t>(regions.face(e, Side::Right))];
    };
    const auto row = [&](int node, int rel, std::vector<std::pair<int, Term>> terms) {
        std::vector<std::vector<Term>> r(static_cast<std::size_t>(m.cols));
        for (auto& [e, t] : terms) r[static_cast<std::size_t>(e)].push_back(t);
        m.entries.push_back(std::move(r));
        m.tags.push_back({node, rel});
    };
    const Term one{1, Coefficient::One, 0, 0, 0};
    for (int i = 0; i < d.node_count(); ++i) {
        const Node& node = d.node(i);
        switch (node.kind) {
        case NodeKind::Loop: break;
        case NodeKind::Twist: {
            const int in = node.ends[0], out = node.ends[1];
            row(i, 0, {{out, one}, {in, Term{-1, Coefficient::Q, right_region(in), label(in), 0}}});
            break;
        }
        case NodeKind::Positive:
        case NodeKind::Negative: {
            const CrossingRoles cr = d.crossing_roles(i);
            // read a negative crossing against the flow so it matches the positive template
            const bool pos = node.kind == NodeKind::Positive;
            const int a = pos ? cr.over_in : cr.over_out;
            const int b = pos ? cr.under_in : cr.under_out;
            const int c = pos ? cr.under_out : cr.under_in;
            const int dd = pos ? cr.over_out : cr.over_in;
            const int A = right_region(pos ? cr.under_in : cr.over_in);
            const int x = label(a), y = label(b);
            row(i, 0, {{c, one}, {b, Term{-1, Coefficient::T, A, x, y}}, {a, Term{-1, Coefficient::S, A, x, y}}});
            row(i, 1, {{dd, one}, {a, Term{-1, Coefficient::R, A, x, y}}});
            break;
        }
        case NodeKind::Virtual: {
            const VirtualRoles vr = d.virtual_roles(i);
            const int A = right_region(vr.se);
            const int x = label(vr.sw), y = label(vr.se);
            row(i, 0, {{vr.nw, one}, {vr.se, Term{-1, Coefficient::V, A, x, y}}});
            row(i, 1, {{vr.ne, one}, {vr.sw, Term{-1, Coefficient::VInverse, A, x, y}}});
            break;
        }
        }
    }
    return m;
}

IntMatrix evaluate(const SymbolicMatrix& m, const ModuleSpec& spec) {
    const Int q = spec.modulus();
    IntMatrix out = IntMatrix::Zero(m.rows(), m.cols);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols; ++c) {
            Int sum = 0;
            for (const Term& t : m.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                Int value = 1;
                switch (t.kind) {
                case Coefficient::One: break;
                case Coefficient::V: value = spec.v(t.A, t.x, t.y); break;
                case Coefficient::VInverse: value = spec.v_inverse(t.A, t.x, t.y); break;
                case Coefficient::T: value = spec.t(t.A, t.x, t.y); break;
                case Coefficient::S: value = spec.s(t.A, t.x, t.y); break;
                case Coefficient::R: value = spec.r(t.A, t.x, t.y); break;
                case Coefficient::Q: value = spec.q(t.A, t.x); break;
                }
                sum += t.sign * value;
            }
            out(r, c) = mod(sum, q);
        }
    return out;
}

IntMatrix presentation_matrix(const Diagram& d, const RegionMap& regions, const ShadowLabeling& f,
                              const ModuleSpec& spec) {
    return evaluate(symbolic_presentation(d, regions, f), spec);
}

std::string to_string(const Polynomial& p) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [exponent, mult] : p) {
        if (mult == 0) continue;
        if (!first) out << '+';
        first = false;
        if (exponent == 0) {
            out << mult;
            continue;
        }
        if (mult != 1) out << mult;
        out << 'u';
        if (exponent != 1) out << '^' << exponent;
    }
    return first ? "0" : out.str();
}

Polynomial ModuleInvariant::polynomial() const {
    Polynomial p;
    for (const auto& f : framings)
        for (const auto& l : f.labelings) ++p[l.descriptor.count];
    return p;
}

std::vector<ModuleDescriptor> ModuleInvariant::multiset() const {
    std::vector<ModuleDescriptor> out;
    for (const auto& f : framings)
        for (const auto& l : f.labelings) out.push_back(l.descriptor);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t ModuleInvariant::labeling_count() const {
    std::uint64_t n = 0;
    for (const auto& f : framings) n += f.labelings.size();
    return n;
}

ModuleInvariant module_invariant(const Diagram& d, BirackView b, const ShadowAction& s, const ModuleSpec& spec,
                                 int jobs) {
    if (d.has_twists() && !spec.twisted())
        throw ConstraintViolation("diagram has twist bars but the module has no q coefficients");
    ModuleInvariant out;
    out.framings = map_framings(d, b.base().rank(), jobs, [&](const std::vector<int>& w, const Diagram& framed) {
        FramingRecord rec{w, {}};
        const RegionMap regions = faces(framed);
        for (ShadowLabeling& f : enumerate_shadow_labelings(framed, regions, b, s)) {
            const IntMatrix m = presentation_matrix(framed, regions, f, spec);
            rec.labelings.push_back({std::move(f), solution_count(m, Int{spec.modulus()})});
        }
        return rec;
    });
    return out;
}

Polynomial phi_module_poly(const Diagram& d, BirackView b, const ShadowAction& s, const ModuleSpec& spec, int jobs) {
    return module_invariant(d, b, s, spec, jobs).polynomial();
}

std::vector<ModuleDescriptor> phi_module_multiset(const Diagram& d, BirackView b, const ShadowAction& s,
                                                  const ModuleSpec& spec, int jobs) {
    return module_invariant(d, b, s, spec, jobs).multiset();
}

}  // namespace vbs
