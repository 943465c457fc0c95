#pragma once

#include "vbs/birack.hpp"
#include "vbs/diagram.hpp"
#include "vbs/labeling.hpp"
#include "vbs/modular.hpp"
#include "vbs/relations.hpp"
#include "vbs/shadow.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vbs {

/// Throws NonUnit when some v, t, r, q entry is not a unit, or when a
/// twisted module has a nonzero s.
void check_units(const ModuleBlocks& blocks);

/// A validated module structure on Z_q.
class ModuleSpec {
public:
    int modulus() const noexcept { return blocks_.q; }
    bool twisted() const noexcept { return blocks_.twisted; }
    const ModuleBlocks& blocks() const noexcept { return blocks_; }

    std::int64_t v(int A, int x, int y) const { return blocks_.v[static_cast<std::size_t>(A)](x, y); }
    std::int64_t v_inverse(int A, int x, int y) const { return inverse_mod<std::int64_t>(v(A, x, y), modulus()); }
    std::int64_t t(int A, int x, int y) const { return blocks_.t[static_cast<std::size_t>(A)](x, y); }
    std::int64_t s(int A, int x, int y) const {
        return blocks_.twisted ? 0 : blocks_.s[static_cast<std::size_t>(A)](x, y);
    }
    std::int64_t r(int A, int x, int y) const { return blocks_.r[static_cast<std::size_t>(A)](x, y); }
    std::int64_t q(int A, int x) const { return blocks_.qcoef[static_cast<std::size_t>(A)](x); }

private:
    friend ModuleSpec module_from_blocks(BirackView b, const ShadowAction& s, ModuleBlocks blocks);
    explicit ModuleSpec(ModuleBlocks b) : blocks_(std::move(b)) {}
    ModuleBlocks blocks_;
};

/// Reduces entries mod q and checks every relation exhaustively. Throws
/// DimensionMismatch, NonUnit, ConstraintViolation or RelationViolation.
ModuleSpec module_from_blocks(BirackView b, const ShadowAction& s, ModuleBlocks blocks);

/// sign * coefficient_{A,x,y}; y is unused for Q and all indices for One.
struct Term {
    int sign = 1;
    Coefficient kind = Coefficient::One;
    int A = 0, x = 0, y = 0;
};

std::string to_string(const Term& t);

struct RowTag {
    int node;
    int relation;
};

/// Bead relations with unevaluated coefficients. entries[row][edge] is a sum of terms.
struct SymbolicMatrix {
    int cols = 0;
    std::vector<std::vector<std::vector<Term>>> entries;
    std::vector<RowTag> tags;

    int rows() const noexcept { return static_cast<int>(entries.size()); }
};

SymbolicMatrix symbolic_presentation(const Diagram& d, const RegionMap& regions, const ShadowLabeling& f);

IntMatrix evaluate(const SymbolicMatrix& m, const ModuleSpec& spec);

/// Evaluated presentation matrix of the fundamental module of f.
IntMatrix presentation_matrix(const Diagram& d, const RegionMap& regions, const ShadowLabeling& f,
                              const ModuleSpec& spec);

/// Exponent -> multiplicity.
using Polynomial = std::map<std::uint64_t, std::uint64_t>;

/// "8u", "u+4u^9", "0" for the empty polynomial.
std::string to_string(const Polynomial& p);

struct LabelingRecord {
    ShadowLabeling labeling;
    ModuleDescriptor descriptor;
};

struct FramingRecord {
    std::vector<int> framing;
    std::vector<LabelingRecord> labelings;
};

/// Per-framing, per-labeling detail of the module invariant.
struct ModuleInvariant {
    std::vector<FramingRecord> framings;

    Polynomial polynomial() const;
    /// Sorted descriptors of every labeling over the tile.
    std::vector<ModuleDescriptor> multiset() const;
    std::uint64_t labeling_count() const;
};

ModuleInvariant module_invariant(const Diagram& d, BirackView b, const ShadowAction& s, const ModuleSpec& spec,
                                 int jobs = 1);

Polynomial phi_module_poly(const Diagram& d, BirackView b, const ShadowAction& s, const ModuleSpec& spec,
                           int jobs = 1);
std::vector<ModuleDescriptor> phi_module_multiset(const Diagram& d, BirackView b, const ShadowAction& s,
                                                  const ModuleSpec& spec, int jobs = 1);

}  // namespace vbs
