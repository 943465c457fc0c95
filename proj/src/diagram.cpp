#include "vbs/diagram.hpp"

#include "vbs/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

namespace vbs {

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
};

std::size_t arity(NodeKind k) {
    switch (k) {
    case NodeKind::Twist: return 2;
    case NodeKind::Loop: return 1;
    default: return 4;
    }
}

const char* keyword(NodeKind k) {
    switch (k) {
    case NodeKind::Positive: return "X+";
    case NodeKind::Negative: return "X-";
    case NodeKind::Virtual: return "V";
    case NodeKind::Twist: return "T";
    case NodeKind::Loop: return "O";
    }
    return "?";
}

std::optional<NodeKind> kind_of(std::string_view word) {
    if (word == "X+") return NodeKind::Positive;
    if (word == "X-") return NodeKind::Negative;
    if (word == "V") return NodeKind::Virtual;
    if (word == "T") return NodeKind::Twist;
    if (word == "O") return NodeKind::Loop;
    return std::nullopt;
}

std::size_t slot(int e, Side s) { return static_cast<std::size_t>(e) * 2 + (s == Side::Right ? 1 : 0); }

}  // namespace

Diagram Diagram::from_code(std::vector<CodeNode> code) {
    Diagram d;
    for (const CodeNode& c : code) {
        if (c.ids.size() != arity(c.kind))
            throw MalformedCode(std::string(keyword(c.kind)) + " node needs " + std::to_string(arity(c.kind)) +
                                " edges");
        for (int id : c.ids) {
            if (id <= 0) throw MalformedCode("edge ids must be positive");
            d.ids_.push_back(id);
        }
    }
    std::sort(d.ids_.begin(), d.ids_.end());
    std::vector<int> multiplicity;
    {
        std::vector<int> unique;
        for (std::size_t i = 0; i < d.ids_.size(); ++i) {
            if (i == 0 || d.ids_[i] != d.ids_[i - 1]) {
                unique.push_back(d.ids_[i]);
                multiplicity.push_back(0);
            }
            ++multiplicity.back();
        }
        d.ids_ = std::move(unique);
    }
    for (const CodeNode& c : code)
        if (c.kind == NodeKind::Loop) ++multiplicity[static_cast<std::size_t>(d.edge_index(c.ids[0]))];
    for (std::size_t i = 0; i < d.ids_.size(); ++i)
        if (multiplicity[i] != 2) throw EdgeMultiplicity(d.ids_[i]);

    const std::size_t E = d.ids_.size();
    std::vector<int> heads(E, 0), tails(E, 0);
    d.nodes_.reserve(code.size());
    std::vector<bool> resolved(code.size(), true);
    for (std::size_t i = 0; i < code.size(); ++i) {
        Node node{code[i].kind, {}, {}};
        for (int id : code[i].ids) node.ends.push_back(d.edge_index(id));
        switch (node.kind) {
        case NodeKind::Positive: node.outgoing = {false, true, true, false}; break;
        case NodeKind::Negative: node.outgoing = {false, false, true, true}; break;
        case NodeKind::Twist: node.outgoing = {false, true}; break;
        case NodeKind::Loop: node.outgoing = {true}; break;
        case NodeKind::Virtual:
            node.outgoing = {false, false, true, false};
            resolved[i] = false;
            break;
        }
        const auto e0 = static_cast<std::size_t>(node.ends[0]);
        if (node.kind == NodeKind::Loop) {
            ++heads[e0];
            ++tails[e0];
        } else if (node.kind == NodeKind::Virtual) {
            ++heads[e0];
            ++tails[static_cast<std::size_t>(node.ends[2])];
        } else {
            for (std::size_t k = 0; k < node.ends.size(); ++k)
                ++(node.outgoing[k] ? tails : heads)[static_cast<std::size_t>(node.ends[k])];
        }
        d.nodes_.push_back(std::move(node));
    }
    for (std::size_t e = 0; e < E; ++e)
        if (heads[e] > 1 || tails[e] > 1) throw EdgeMultiplicity(d.ids_[e]);

    // Virtual crossings: decide which of b, d is incoming from the rest of the code.
    const auto settle = [&](std::size_t i, bool b_incoming) {
        Node& node = d.nodes_[i];
        node.outgoing[1] = !b_incoming;
        node.outgoing[3] = b_incoming;
        const auto b = static_cast<std::size_t>(node.ends[1]);
        const auto dd = static_cast<std::size_t>(node.ends[3]);
        ++(b_incoming ? heads : tails)[b];
        ++(b_incoming ? tails : heads)[dd];
        if (heads[b] > 1 || tails[b] > 1 || heads[dd] > 1 || tails[dd] > 1)
            throw OrientationConflict(static_cast<int>(i) + 1);
        resolved[i] = true;
    };
    for (;;) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t i = 0; i < code.size(); ++i) {
                if (resolved[i]) continue;
                const auto b = static_cast<std::size_t>(d.nodes_[i].ends[1]);
                const auto dd = static_cast<std::size_t>(d.nodes_[i].ends[3]);
                const bool b_in = tails[b] > 0 || heads[dd] > 0;
                const bool b_out = heads[b] > 0 || tails[dd] > 0;
                if (b_in && b_out) throw OrientationConflict(static_cast<int>(i) + 1);
                if (b_in || b_out) {
                    settle(i, b_in);
                    progress = true;
                }
            }
        }
        const auto open = std::find(resolved.begin(), resolved.end(), false);
        if (open == resolved.end()) break;
        settle(static_cast<std::size_t>(open - resolved.begin()), true);
    }
    for (std::size_t e = 0; e < E; ++e)
        if (heads[e] != 1 || tails[e] != 1) throw EdgeMultiplicity(d.ids_[e]);

    d.head_.assign(E, {-1, -1});
    d.tail_.assign(E, {-1, -1});
    for (std::size_t i = 0; i < d.nodes_.size(); ++i) {
        const Node& node = d.nodes_[i];
        for (std::size_t k = 0; k < node.ends.size(); ++k) {
            const auto e = static_cast<std::size_t>(node.ends[k]);
            const std::pair<int, int> at{static_cast<int>(i), static_cast<int>(k)};
            if (node.kind == NodeKind::Loop) {
                d.head_[e] = d.tail_[e] = at;
            } else {
                (node.outgoing[k] ? d.tail_ : d.head_)[e] = at;
            }
        }
    }

    std::vector<int> next(E, -1);
    for (std::size_t i = 0; i < d.nodes_.size(); ++i) {
        const Node& node = d.nodes_[i];
        const int ni = static_cast<int>(i);
        switch (node.kind) {
        case NodeKind::Positive:
        case NodeKind::Negative: {
            const CrossingRoles r = d.crossing_roles(ni);
            next[static_cast<std::size_t>(r.under_in)] = r.under_out;
            next[static_cast<std::size_t>(r.over_in)] = r.over_out;
            break;
        }
        case NodeKind::Virtual: {
            const VirtualRoles r = d.virtual_roles(ni);
            next[static_cast<std::size_t>(r.sw)] = r.ne;
            next[static_cast<std::size_t>(r.se)] = r.nw;
            break;
        }
        case NodeKind::Twist: next[static_cast<std::size_t>(node.ends[0])] = node.ends[1]; break;
        case NodeKind::Loop: next[static_cast<std::size_t>(node.ends[0])] = node.ends[0]; break;
        }
    }
    d.component_of_.assign(E, -1);
    for (std::size_t start = 0; start < E; ++start) {
        if (d.component_of_[start] >= 0) continue;
        const int c = static_cast<int>(d.components_.size());
        d.components_.emplace_back();
        for (auto e = start; d.component_of_[e] < 0; e = static_cast<std::size_t>(next[e])) {
            d.component_of_[e] = c;
            d.components_.back().push_back(static_cast<int>(e));
        }
    }
    d.code_ = std::move(code);
    return d;
}

int Diagram::edge_index(int id) const {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    return it != ids_.end() && *it == id ? static_cast<int>(it - ids_.begin()) : -1;
}

CrossingRoles Diagram::crossing_roles(int i) const {
    const Node& n = node(i);
    const auto& e = n.ends;
    if (n.kind == NodeKind::Positive) return {e[3], e[1], e[0], e[2]};
    return {e[1], e[3], e[0], e[2]};
}

VirtualRoles Diagram::virtual_roles(int i) const {
    const Node& n = node(i);
    const auto& e = n.ends;
    if (!n.outgoing[1]) return {e[0], e[1], e[2], e[3]};
    return {e[3], e[0], e[1], e[2]};
}

bool Diagram::has_twists() const noexcept {
    return std::any_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.kind == NodeKind::Twist; });
}

Diagram parse_diagram(std::string_view text) {
    std::vector<CodeNode> code;
    std::optional<int> declared;
    std::string cleaned;
    cleaned.reserve(text.size());
    bool comment = false;
    for (char ch : text) {
        if (ch == '#') comment = true;
        if (ch == '\n') comment = false;
        if (comment) continue;
        cleaned.push_back(ch == '/' || ch == ';' ? '\n' : ch);
    }
    std::istringstream lines(cleaned);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream words(line);
        std::string word;
        if (!(words >> word)) continue;
        if (word == "link") {
            std::string field;
            while (words >> field) {
                if (field.rfind("components=", 0) != 0) throw MalformedCode("unknown header field '" + field + "'");
                int c = 0;
                const char* first = field.data() + 11;
                const char* last = field.data() + field.size();
                const auto [p, ec] = std::from_chars(first, last, c);
                if (ec != std::errc() || p != last || first == last)
                    throw MalformedCode("bad component count '" + field + "'");
                declared = c;
            }
            continue;
        }
        const auto kind = kind_of(word);
        if (!kind) throw MalformedCode("unknown node '" + word + "'");
        CodeNode node{*kind, {}};
        std::string tok;
        while (words >> tok) {
            int v = 0;
            const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw MalformedCode("bad edge id '" + tok + "'");
            node.ids.push_back(v);
        }
        code.push_back(std::move(node));
    }
    Diagram d = Diagram::from_code(std::move(code));
    if (declared && *declared != d.component_count())
        throw MalformedCode("header declares " + std::to_string(*declared) + " components, code has " +
                            std::to_string(d.component_count()));
    return d;
}

std::string to_string(const Diagram& d) {
    std::vector<const CodeNode*> order;
    for (const CodeNode& c : d.code()) order.push_back(&c);
    std::stable_sort(order.begin(), order.end(), [](const CodeNode* a, const CodeNode* b) {
        return *std::min_element(a->ids.begin(), a->ids.end()) < *std::min_element(b->ids.begin(), b->ids.end());
    });
    std::ostringstream out;
    out << "link components=" << d.component_count() << '\n';
    for (const CodeNode* c : order) {
        out << keyword(c->kind);
        for (int id : c->ids) out << ' ' << id;
        out << '\n';
    }
    return out.str();
}

std::vector<int> writhe_vector(const Diagram& d) {
    std::vector<int> w(static_cast<std::size_t>(d.component_count()), 0);
    for (int i = 0; i < d.node_count(); ++i) {
        if (!d.node(i).is_crossing()) continue;
        const CrossingRoles r = d.crossing_roles(i);
        const int c = d.component_of(r.over_in);
        if (c != d.component_of(r.under_in)) continue;
        w[static_cast<std::size_t>(c)] += d.node(i).kind == NodeKind::Positive ? 1 : -1;
    }
    return w;
}

Diagram add_kinks(const Diagram& d, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != d.component_count())
        throw DimensionMismatch("framing vector needs " + std::to_string(d.component_count()) + " entries");
    if (std::all_of(w.begin(), w.end(), [](int k) { return k == 0; })) return d;
    Diagram cur = d;
    int next_id = d.max_edge_id() + 1;
    for (std::size_t c = 0; c < w.size(); ++c) {
        if (w[c] < 0) throw DimensionMismatch("framing entries must be non-negative");
        const int id = d.edge_id(d.components()[c].front());
        for (int k = 0; k < w[c]; ++k) {
            std::vector<CodeNode> code = cur.code();
            const auto [node, at] = cur.head(cur.edge_index(id));
            const int loop = next_id++;
            auto& target = code[static_cast<std::size_t>(node)];
            if (target.kind == NodeKind::Loop) {
                target = CodeNode{NodeKind::Positive, {loop, loop, id, id}};
            } else {
                const int out = next_id++;
                target.ids[static_cast<std::size_t>(at)] = out;
                code.push_back(CodeNode{NodeKind::Positive, {loop, loop, out, id}});
            }
            cur = Diagram::from_code(std::move(code));
        }
    }
    return cur;
}

RegionMap faces(const Diagram& d) {
    const int E = d.edge_count();
    const auto uE = static_cast<std::size_t>(E);
    UnionFind sides(2 * uE);
    UnionFind pieces(uE);
    for (const Node& n : d.nodes()) {
        for (std::size_t k = 1; k < n.ends.size(); ++k)
            pieces.unite(static_cast<std::size_t>(n.ends[0]), static_cast<std::size_t>(n.ends[k]));
        if (n.kind == NodeKind::Loop) continue;
        if (n.kind == NodeKind::Twist) {
            sides.unite(slot(n.ends[0], Side::Left), slot(n.ends[1], Side::Left));
            sides.unite(slot(n.ends[0], Side::Right), slot(n.ends[1], Side::Right));
            continue;
        }
        for (std::size_t k = 0; k < 4; ++k) {
            const std::size_t j = (k + 1) % 4;
            const Side s1 = n.outgoing[k] ? Side::Left : Side::Right;
            const Side s2 = n.outgoing[j] ? Side::Right : Side::Left;
            sides.unite(slot(n.ends[k], s1), slot(n.ends[j], s2));
        }
    }

    struct PieceCount {
        int vertices = 0, edges = 0, twists = 0, first_edge = -1;
        std::vector<std::size_t> faces;
    };
    std::vector<PieceCount> count(uE);
    for (int e = 0; e < E; ++e) {
        PieceCount& p = count[pieces.find(static_cast<std::size_t>(e))];
        ++p.edges;
        if (p.first_edge < 0) p.first_edge = e;
        p.faces.push_back(sides.find(slot(e, Side::Left)));
        p.faces.push_back(sides.find(slot(e, Side::Right)));
    }
    for (const Node& n : d.nodes()) {
        if (n.kind == NodeKind::Loop) continue;
        PieceCount& p = count[pieces.find(static_cast<std::size_t>(n.ends[0]))];
        ++(n.kind == NodeKind::Twist ? p.twists : p.vertices);
    }
    std::optional<std::size_t> outer;
    for (PieceCount& p : count) {
        if (p.first_edge < 0) continue;
        std::sort(p.faces.begin(), p.faces.end());
        const auto F = static_cast<int>(std::unique(p.faces.begin(), p.faces.end()) - p.faces.begin());
        if (p.vertices > 0 && p.vertices - (p.edges - p.twists) + F != 2)
            throw NonPlanar("piece containing edge " + std::to_string(d.edge_id(p.first_edge)) + " has V-E+F = " +
                            std::to_string(p.vertices - (p.edges - p.twists) + F));
        const std::size_t f = sides.find(slot(p.first_edge, Side::Left));
        if (outer) sides.unite(f, *outer);
        outer = sides.find(f);
    }

    RegionMap r;
    r.left.assign(uE, -1);
    r.right.assign(uE, -1);
    std::vector<int> number(2 * uE, -1);
    for (int e = 0; e < E; ++e)
        for (Side s : {Side::Left, Side::Right}) {
            const std::size_t root = sides.find(slot(e, s));
            if (number[root] < 0) {
                number[root] = r.count();
                r.faces.emplace_back();
            }
            const int f = number[root];
            r.faces[static_cast<std::size_t>(f)].push_back({e, s});
            (s == Side::Left ? r.left : r.right)[static_cast<std::size_t>(e)] = f;
        }
    return r;
}

Diagram reverse_orientation(const Diagram& d) {
    std::vector<CodeNode> code = d.code();
    for (CodeNode& c : code) {
        auto& v = c.ids;
        switch (c.kind) {
        case NodeKind::Positive:
        case NodeKind::Negative:
        case NodeKind::Virtual: v = {v[2], v[3], v[0], v[1]}; break;
        case NodeKind::Twist: std::swap(v[0], v[1]); break;
        case NodeKind::Loop: break;
        }
    }
    return Diagram::from_code(std::move(code));
}

}  // namespace vbs
