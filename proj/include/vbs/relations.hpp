#pragma once

#include "vbs/birack.hpp"
#include "vbs/modular.hpp"
#include "vbs/shadow.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace vbs {

/// Coefficient blocks of a module over Z_q, one set per shadow element A.
/// Row x, column y of t[A] holds t_{A,x,y}; qcoef[A](x) holds q_{A,x}.
/// Twisted modules carry qcoef and no s.
struct ModuleBlocks {
    int q = 2;
    bool twisted = false;
    std::vector<Table> v, t, s, r;
    std::vector<Eigen::VectorXi> qcoef;

    int shadow_size() const noexcept { return static_cast<int>(v.size()); }

    /// v = t = r = 1, s = 0 (and q = 1 when twisted).
    static ModuleBlocks constant(int q, int m, int n, bool twisted);

    friend bool operator==(const ModuleBlocks&, const ModuleBlocks&) = default;
};

enum class Coefficient { One, V, VInverse, T, S, R, Q };

/// Generators in list order. The plain list has fourteen (A,x,y,z)
/// families then the phone-cord product; the twisted list has seventeen
/// then its phone-cord product.
inline constexpr int kVirtualFamilies = 15;
inline constexpr int kTwistedFamilies = 18;

struct RelationFailure {
    int generator;             // 1-based position in the generator list
    std::vector<int> witness;  // (A, x, y, z), or (A, x) for the phone-cord product
};

/// First generator that does not vanish mod q, families in list order and
/// witnesses lexicographic. The phone-cord product keeps A fixed while x runs
/// along its kink orbit: prod_k (t r + s) at (A .^{-1} alpha(pi^k x), pi^k x, alpha(pi^k x)).
std::optional<RelationFailure> first_relation_failure(BirackView b, const ShadowAction& s, const ModuleBlocks& m);

namespace detail {
struct Terms;
}

/// Every generator instance together with the coefficients it reads, for
/// searches that assign coefficients one at a time.
class RelationSystem {
public:
    struct Instance {
        int generator;
        std::vector<int> witness;
        std::vector<int> variables;  // sorted ids
    };

    struct Variable {
        Coefficient kind;
        int A, x, y;
    };

    RelationSystem(BirackView b, const ShadowAction& s, bool twisted);

    /// Ids cover v, t, s, r blocks then q entries (4 m n^2 + m n).
    int variable_count() const noexcept { return variables_; }
    Variable variable(int id) const;
    void assign(ModuleBlocks& m, int id, int value) const;

    const std::vector<Instance>& instances() const noexcept { return instances_; }
    bool holds(const Instance& inst, const ModuleBlocks& m) const;

private:
    using Family = std::function<std::int64_t(const detail::Terms&, int, int, int, int)>;

    BirackView view_;
    const ShadowAction* shadow_;
    bool twisted_;
    std::vector<Family> families_;
    int variables_ = 0;
    std::vector<Instance> instances_;
};

}  // namespace vbs
