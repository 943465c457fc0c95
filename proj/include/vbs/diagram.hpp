#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vbs {

enum class NodeKind { Positive, Negative, Virtual, Twist, Loop };

/// One line of an extended planar-diagram code, with edge ids as written.
///
///   X+ a b c d   under-in, over-out, under-out, over-in (counterclockwise)
///   X- a b c d   under-in, over-in, under-out, over-out
///   V  a b c d   a incoming, c its continuation
///   T  a b       twist bar from a to b
///   O  e         crossingless circle
struct CodeNode {
    NodeKind kind;
    std::vector<int> ids;

    friend bool operator==(const CodeNode&, const CodeNode&) = default;
};

/// A node with edges as dense 0-based indices and resolved directions.
struct Node {
    NodeKind kind;
    std::vector<int> ends;
    std::vector<bool> outgoing;

    bool is_crossing() const noexcept {
        return kind == NodeKind::Positive || kind == NodeKind::Negative;
    }
};

struct CrossingRoles {
    int over_in, over_out, under_in, under_out;
};

/// Edges at a virtual crossing seen with both strands pointing up:
/// sw continues to ne, se continues to nw.
struct VirtualRoles {
    int sw, se, ne, nw;
};

enum class Side { Left, Right };

struct EdgeSide {
    int edge;
    Side side;
    friend bool operator==(const EdgeSide&, const EdgeSide&) = default;
};

/// Faces of the diagram, numbered by their smallest (edge, side) member.
/// Disconnected pieces share one outer region.
struct RegionMap {
    std::vector<int> left, right;
    std::vector<std::vector<EdgeSide>> faces;

    int count() const noexcept { return static_cast<int>(faces.size()); }
    int face(int edge, Side s) const {
        return s == Side::Left ? left[static_cast<std::size_t>(edge)] : right[static_cast<std::size_t>(edge)];
    }
};

/// An oriented blackboard-framed virtual link diagram with twist bars.
/// Immutable; surgery returns new diagrams.
class Diagram {
public:
    /// Throws MalformedCode, EdgeMultiplicity or OrientationConflict.
    static Diagram from_code(std::vector<CodeNode> code);

    int edge_count() const noexcept { return static_cast<int>(ids_.size()); }
    int edge_id(int e) const { return ids_[static_cast<std::size_t>(e)]; }
    int max_edge_id() const noexcept { return ids_.empty() ? 0 : ids_.back(); }
    /// -1 if absent.
    int edge_index(int id) const;

    const std::vector<CodeNode>& code() const noexcept { return code_; }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    int node_count() const noexcept { return static_cast<int>(nodes_.size()); }

    /// Components in order of smallest edge id; each lists its edges in
    /// traversal order starting from the smallest.
    const std::vector<std::vector<int>>& components() const noexcept { return components_; }
    int component_count() const noexcept { return static_cast<int>(components_.size()); }
    int component_of(int e) const { return component_of_[static_cast<std::size_t>(e)]; }

    /// (node, slot) where edge e ends / starts.
    std::pair<int, int> head(int e) const { return head_[static_cast<std::size_t>(e)]; }
    std::pair<int, int> tail(int e) const { return tail_[static_cast<std::size_t>(e)]; }

    CrossingRoles crossing_roles(int node) const;
    VirtualRoles virtual_roles(int node) const;

    bool has_twists() const noexcept;

    friend bool operator==(const Diagram& a, const Diagram& b) { return a.code_ == b.code_; }

private:
    Diagram() = default;

    std::vector<CodeNode> code_;
    std::vector<Node> nodes_;
    std::vector<int> ids_;
    std::vector<std::pair<int, int>> head_, tail_;
    std::vector<std::vector<int>> components_;
    std::vector<int> component_of_;
};

Diagram parse_diagram(std::string_view text);
/// Canonical text: header plus nodes sorted by smallest incident edge id.
std::string to_string(const Diagram& d);

/// Sum of signs of crossings whose strands both lie on component i.
std::vector<int> writhe_vector(const Diagram& d);

/// Inserts w[i] positive curls on the lowest-numbered edge of component i.
/// Existing edge ids are kept; new ids are appended.
Diagram add_kinks(const Diagram& d, const std::vector<int>& w);

/// Throws NonPlanar when a connected piece fails the Euler check.
RegionMap faces(const Diagram& d);

Diagram reverse_orientation(const Diagram& d);

}  // namespace vbs
