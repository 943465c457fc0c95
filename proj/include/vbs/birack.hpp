#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace vbs {

/// Integer operation table. Entries are 0-based element indices.
using Table = Eigen::MatrixXi;

/// A permutation of {0, ..., n-1}, stored as its list of images.
using Permutation = std::vector<int>;

using ElementPair = std::pair<int, int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p, int n);
/// Smallest k >= 1 with p^k = id.
int order(const Permutation& p);

/// A map X x X -> X x X stored as a dense lookup table over ordered pairs.
class PairMap {
public:
    PairMap() = default;
    explicit PairMap(int n) : n_(n), image_(static_cast<std::size_t>(n) * n, {-1, -1}) {}

    int size() const noexcept { return n_; }

    const ElementPair& operator()(int x, int y) const { return image_[index(x, y)]; }
    ElementPair& operator()(int x, int y) { return image_[index(x, y)]; }

    /// First pair (lexicographic) whose image repeats an earlier image, if any.
    std::optional<ElementPair> first_collision() const;
    bool is_bijection() const { return !first_collision().has_value(); }
    /// Requires is_bijection().
    PairMap inverse() const;

    friend bool operator==(const PairMap&, const PairMap&) = default;

private:
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(x) * n_ + y; }

    int n_ = 0;
    std::vector<ElementPair> image_;
};

/// Kink data of a birack: a strand labeled x entering a positive curl carries
/// alpha(x) on the loop and leaves labeled pi(x). `rank` is the order of pi.
struct KinkData {
    Permutation alpha;
    Permutation pi;
    int rank = 1;
};

/// The four operation tables in the matrix convention: row = the strand
/// itself, column = the other strand. For B(x_i, x_j) = (x_k, x_l) and
/// V(x_i, x_j) = (x_m, x_p): b1(j, i) = k, b2(i, j) = l, v1(j, i) = m,
/// v2(i, j) = p.
struct BirackTables {
    Table b1, b2, v1, v2;
};

/// A finite virtual birack, validated on construction. Immutable.
///
/// B(x, y) = (y^x, x_y) describes a positive crossing with x on the
/// over-strand input and y on the under-strand input; V(x, y) plays the same
/// role at virtual crossings with x entering from the lower left.
class FiniteBirack {
public:
    /// Validates axioms (i)-(iv). Throws AxiomViolation or DimensionMismatch.
    static FiniteBirack from_tables(int n, const BirackTables& tables);

    int size() const noexcept { return n_; }

    ElementPair braid(int x, int y) const { return b_(x, y); }
    ElementPair braid_inverse(int a, int b) const { return b_inv_(a, b); }
    ElementPair virtual_braid(int x, int y) const { return v_(x, y); }
    ElementPair sideways(int a, int b) const { return s_(a, b); }
    ElementPair sideways_inverse(int a, int b) const { return s_inv_(a, b); }
    ElementPair virtual_sideways(int a, int b) const { return vs_(a, b); }

    /// a^b = B_1(b, a)
    int up(int a, int b) const { return b_(b, a).first; }
    /// a_b = B_2(a, b)
    int down(int a, int b) const { return b_(a, b).second; }
    /// a^{~b} = V_1(b, a)
    int vup(int a, int b) const { return v_(b, a).first; }
    /// a_{~b} = V_2(a, b)
    int vdown(int a, int b) const { return v_(a, b).second; }

    const KinkData& kink() const noexcept { return kink_; }
    int rank() const noexcept { return kink_.rank; }

    /// (S o Delta)_1 == (S o Delta)_2. Informational only.
    bool is_biquandle() const noexcept { return biquandle_; }

    BirackTables tables() const;

    friend bool operator==(const FiniteBirack& a, const FiniteBirack& b) {
        return a.b_ == b.b_ && a.v_ == b.v_;
    }

private:
    FiniteBirack() = default;

    int n_ = 0;
    PairMap b_, b_inv_, v_, s_, s_inv_, vs_;
    KinkData kink_;
    bool biquandle_ = false;
};

/// A virtual birack with a compatible involution T modelling twist bars.
class TwistedBirack {
public:
    const FiniteBirack& base() const noexcept { return base_; }
    const Permutation& twist() const noexcept { return twist_; }
    int twist(int x) const { return twist_[static_cast<std::size_t>(x)]; }
    int size() const noexcept { return base_.size(); }

    friend bool operator==(const TwistedBirack&, const TwistedBirack&) = default;

private:
    friend TwistedBirack attach_twist(const FiniteBirack& b, const Permutation& twist);
    TwistedBirack(FiniteBirack base, Permutation twist)
        : base_(std::move(base)), twist_(std::move(twist)) {}

    FiniteBirack base_;
    Permutation twist_;
};

/// Non-owning view over either kind of birack. Diagrams with twist bars
/// need a twisted one.
class BirackView {
public:
    BirackView(const FiniteBirack& b) : base_(&b) {}  // NOLINT(google-explicit-constructor)
    BirackView(const TwistedBirack& t)  // NOLINT(google-explicit-constructor)
        : base_(&t.base()), twist_(&t.twist()) {}

    const FiniteBirack& base() const noexcept { return *base_; }
    bool twisted() const noexcept { return twist_ != nullptr; }
    int twist(int x) const { return (*twist_)[static_cast<std::size_t>(x)]; }
    int size() const noexcept { return base_->size(); }

private:
    const FiniteBirack* base_;
    const Permutation* twist_ = nullptr;
};

FiniteBirack birack_from_tables(int n, const BirackTables& tables);

/// Raw (v,t,s,r) tables over Z_n without validation: B(x,y) = (ty + sx, rx),
/// V(x,y) = (vy, v^{-1}x). The 1-based element k stands for the residue k mod n,
/// so element n is zero.
BirackTables vtsr_tables(int n, int v, int t, int s, int r);

/// The (v,t,s,r)-birack on Z_n. Requires v, t, r units and s^2 = (1 - tr)s.
FiniteBirack vtsr_birack(int n, int v, int t, int s, int r);

/// B(x,y) = (tau(y), sigma(x)), V(x,y) = (nu(y), nu^{-1}(x)); the three
/// permutations must commute pairwise.
FiniteBirack constant_action_birack(const Permutation& sigma, const Permutation& tau,
                                    const Permutation& nu);

KinkData kink_map(const FiniteBirack& b);

/// Throws AxiomViolation naming the failed twisted axiom.
TwistedBirack attach_twist(const FiniteBirack& b, const Permutation& twist);

}  // namespace vbs
