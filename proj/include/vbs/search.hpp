#pragma once

#include "vbs/birack.hpp"
#include "vbs/relations.hpp"
#include "vbs/shadow.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vbs {

struct SearchParameters {
    int n = 0;
    int m = 0;
    int q = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

template <typename T>
struct SearchReport {
    SearchParameters parameters;
    std::vector<T> found;
    std::uint64_t trials = 0;
    /// Rejected candidates (or pruned branches) keyed by the failing axiom or generator.
    std::map<std::string, std::uint64_t> rejects;
};

/// Tries every involution of the elements as a twist map.
SearchReport<TwistedBirack> enumerate_twists(const FiniteBirack& b);

struct ModuleSearchOptions {
    bool twisted = false;
    /// Trial 0 is the constant structure v = t = r = 1, s = 0 (q = 1).
    bool constant_first = true;
    /// Search nodes allowed per trial before giving up.
    std::uint64_t budget = 20000;
};

/// Randomized backtracking over module coefficients. Each trial shuffles the
/// value order of every coefficient with the seeded generator, then assigns
/// coefficients in a fixed order, checking each generator instance as soon as
/// all coefficients it reads are set. Distinct structures are reported in
/// trial order; every one re-validates through module_from_blocks.
SearchReport<ModuleBlocks> random_modules(BirackView b, const ShadowAction& s, int q, std::uint64_t trials,
                                          std::uint64_t seed, const ModuleSearchOptions& options = {});

/// Every virtual birack on n elements. Throws SizeGuard for n > 3 unless `allow_large`.
SearchReport<FiniteBirack> enumerate_biracks(int n, bool allow_large = false);

}  // namespace vbs
