#include "vbs/labeling.hpp"

#include "vbs/error.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace vbs {

namespace {

using Assignment = std::vector<std::pair<int, int>>;  // (edge, label)

/// Admissible label tuples over the distinct edges of one node.
struct Constraint {
    std::vector<int> edges;
    std::vector<std::vector<int>> tuples;
};

Constraint make_constraint(const std::vector<Assignment>& candidates) {
    Constraint c;
    for (const auto& cand : candidates)
        for (const auto& [e, l] : cand)
            if (std::find(c.edges.begin(), c.edges.end(), e) == c.edges.end()) c.edges.push_back(e);
    for (const auto& cand : candidates) {
        std::vector<int> tuple(c.edges.size(), -1);
        bool ok = true;
        for (const auto& [e, l] : cand) {
            const auto k = static_cast<std::size_t>(std::find(c.edges.begin(), c.edges.end(), e) - c.edges.begin());
            if (tuple[k] >= 0 && tuple[k] != l) ok = false;
            tuple[k] = l;
        }
        if (ok) c.tuples.push_back(std::move(tuple));
    }
    return c;
}

std::vector<Constraint> constraints(const Diagram& d, BirackView view) {
    const FiniteBirack& b = view.base();
    const int n = b.size();
    if (d.has_twists() && !view.twisted())
        throw ConstraintViolation("diagram has twist bars but the birack has no twist map");
    std::vector<Constraint> out;
    for (int i = 0; i < d.node_count(); ++i) {
        const Node& node = d.node(i);
        std::vector<Assignment> cand;
        switch (node.kind) {
        case NodeKind::Loop: continue;
        case NodeKind::Twist:
            for (int x = 0; x < n; ++x) cand.push_back({{node.ends[0], x}, {node.ends[1], view.twist(x)}});
            break;
        case NodeKind::Positive: {
            const CrossingRoles r = d.crossing_roles(i);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    const auto [uo, oo] = b.braid(x, y);
                    cand.push_back({{r.over_in, x}, {r.under_in, y}, {r.under_out, uo}, {r.over_out, oo}});
                }
            break;
        }
        case NodeKind::Negative: {
            const CrossingRoles r = d.crossing_roles(i);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    const auto [ui, oi] = b.braid(x, y);
                    cand.push_back({{r.over_out, x}, {r.under_out, y}, {r.under_in, ui}, {r.over_in, oi}});
                }
            break;
        }
        case NodeKind::Virtual: {
            const VirtualRoles r = d.virtual_roles(i);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    const auto [nw, ne] = b.virtual_braid(x, y);
                    cand.push_back({{r.sw, x}, {r.se, y}, {r.nw, nw}, {r.ne, ne}});
                }
            break;
        }
        }
        out.push_back(make_constraint(cand));
    }
    return out;
}

class Backtracker {
public:
    Backtracker(int n, std::vector<Constraint> cons) : n_(n), cons_(std::move(cons)) {}

    std::vector<XLabeling> run(int edges) {
        XLabeling lab(static_cast<std::size_t>(edges), -1);
        if (propagate(lab)) descend(lab);
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    // Fills labels forced by a single node; false on a dead end.
    bool propagate(XLabeling& lab) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Constraint& c : cons_) {
                std::vector<int> forced(c.edges.size(), -2);
                bool any = false;
                for (const auto& t : c.tuples) {
                    bool fits = true;
                    for (std::size_t k = 0; k < t.size() && fits; ++k) {
                        const int cur = lab[static_cast<std::size_t>(c.edges[k])];
                        fits = cur < 0 || cur == t[k];
                    }
                    if (!fits) continue;
                    any = true;
                    for (std::size_t k = 0; k < t.size(); ++k)
                        if (forced[k] != t[k]) forced[k] = forced[k] == -2 ? t[k] : -1;
                }
                if (!any) return false;
                for (std::size_t k = 0; k < forced.size(); ++k) {
                    int& cur = lab[static_cast<std::size_t>(c.edges[k])];
                    if (cur < 0 && forced[k] >= 0) {
                        cur = forced[k];
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    void descend(const XLabeling& lab) {
        const auto open = std::find(lab.begin(), lab.end(), -1);
        if (open == lab.end()) {
            found_.push_back(lab);
            return;
        }
        const auto at = static_cast<std::size_t>(open - lab.begin());
        for (int v = 0; v < n_; ++v) {
            XLabeling next = lab;
            next[at] = v;
            if (propagate(next)) descend(next);
        }
    }

    int n_;
    std::vector<Constraint> cons_;
    std::vector<XLabeling> found_;
};

}  // namespace

std::vector<XLabeling> enumerate_x_labelings(const Diagram& d, BirackView b) {
    return Backtracker(b.size(), constraints(d, b)).run(d.edge_count());
}

std::vector<ShadowLabeling> enumerate_shadow_labelings(const Diagram& d, const RegionMap& regions, BirackView b,
                                                       const ShadowAction& s) {
    std::vector<ShadowLabeling> out;
    for (const XLabeling& lab : enumerate_x_labelings(d, b)) {
        for (int A0 = 0; A0 < s.size(); ++A0) {
            std::vector<int> reg(static_cast<std::size_t>(regions.count()), -1);
            reg[0] = A0;
            std::queue<int> pending;
            pending.push(0);
            while (!pending.empty()) {
                const int f = pending.front();
                pending.pop();
                const int A = reg[static_cast<std::size_t>(f)];
                for (const EdgeSide& es : regions.faces[static_cast<std::size_t>(f)]) {
                    const int x = lab[static_cast<std::size_t>(es.edge)];
                    // right to left across x applies A -> A.x
                    const bool from_right = es.side == Side::Right;
                    const int g = regions.face(es.edge, from_right ? Side::Left : Side::Right);
                    const int B = from_right ? s.act(A, x) : s.act_inverse(A, x);
                    int& slot = reg[static_cast<std::size_t>(g)];
                    if (slot < 0) {
                        slot = B;
                        pending.push(g);
                    } else if (slot != B) {
                        throw InternalInconsistency("shadow labels disagree across edge " +
                                                    std::to_string(d.edge_id(es.edge)));
                    }
                }
            }
            if (std::find(reg.begin(), reg.end(), -1) != reg.end())
                throw InternalInconsistency("region unreachable from face 0");
            out.push_back({lab, std::move(reg)});
        }
    }
    return out;
}

std::vector<ShadowLabeling> enumerate_shadow_labelings(const Diagram& d, BirackView b, const ShadowAction& s) {
    return enumerate_shadow_labelings(d, faces(d), b, s);
}

std::vector<std::vector<int>> framing_tile(int rank, int components) {
    std::vector<std::vector<int>> tile;
    std::vector<int> w(static_cast<std::size_t>(components), 0);
    for (;;) {
        tile.push_back(w);
        int i = 0;
        while (i < components && w[static_cast<std::size_t>(i)] == rank - 1) w[static_cast<std::size_t>(i++)] = 0;
        if (i == components) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return tile;
}

std::vector<FramingCount> framing_counts(const Diagram& d, BirackView b, int jobs) {
    return map_framings(d, b.base().rank(), jobs, [&](const std::vector<int>& w, const Diagram& framed) {
        return FramingCount{w, enumerate_x_labelings(framed, b).size()};
    });
}

std::uint64_t phi_integral(const Diagram& d, BirackView b, int jobs) {
    std::uint64_t total = 0;
    for (const FramingCount& c : framing_counts(d, b, jobs)) total += c.count;
    return total;
}

std::uint64_t phi_shadow_integral(const Diagram& d, BirackView b, const ShadowAction& s, int jobs) {
    const auto counts = map_framings(d, b.base().rank(), jobs, [&](const std::vector<int>&, const Diagram& framed) {
        return static_cast<std::uint64_t>(enumerate_shadow_labelings(framed, b, s).size());
    });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

}  // namespace vbs
