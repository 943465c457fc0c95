#pragma once

#include "vbs/birack.hpp"
#include "vbs/diagram.hpp"
#include "vbs/shadow.hpp"

#include <cstdint>
#include <future>
#include <vector>

namespace vbs {

/// Label of every edge, indexed by dense edge index.
using XLabeling = std::vector<int>;

struct ShadowLabeling {
    XLabeling edges;
    std::vector<int> regions;  // indexed by face number

    friend bool operator==(const ShadowLabeling&, const ShadowLabeling&) = default;
};

/// All labelings, lexicographically ordered by edge index.
/// Throws ConstraintViolation for twist bars over an untwisted birack.
std::vector<XLabeling> enumerate_x_labelings(const Diagram& d, BirackView b);

/// Extends each labeling by every choice of label on face 0.
std::vector<ShadowLabeling> enumerate_shadow_labelings(const Diagram& d, const RegionMap& regions, BirackView b,
                                                       const ShadowAction& s);
std::vector<ShadowLabeling> enumerate_shadow_labelings(const Diagram& d, BirackView b, const ShadowAction& s);

/// All writhe vectors of (Z_N)^c, first coordinate varying fastest:
/// (0,0), (1,0), (0,1), (1,1) for N = c = 2.
std::vector<std::vector<int>> framing_tile(int rank, int components);

/// Applies f(w, add_kinks(d, w)) to every w of the tile and returns the
/// results in tile order. Up to `jobs` framings run concurrently.
template <typename F>
auto map_framings(const Diagram& d, int rank, int jobs, F f) {
    using R = decltype(f(std::vector<int>{}, d));
    const auto tile = framing_tile(rank, d.component_count());
    std::vector<R> out(tile.size());
    const auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < tile.size(); i += stride) out[i] = f(tile[i], add_kinks(d, tile[i]));
    };
    const auto width = static_cast<std::size_t>(jobs < 1 ? 1 : jobs);
    if (width == 1 || tile.size() < 2) {
        work(0, 1);
        return out;
    }
    std::vector<std::future<void>> running;
    for (std::size_t j = 1; j < width && j < tile.size(); ++j)
        running.push_back(std::async(std::launch::async, work, j, width));
    work(0, width);
    for (auto& r : running) r.get();
    return out;
}

struct FramingCount {
    std::vector<int> framing;
    std::uint64_t count = 0;
};

/// Labeling count of add_kinks(d, w) for every w in the tile, in tile order.
/// `jobs` > 1 spreads framings over threads; the result does not depend on it.
std::vector<FramingCount> framing_counts(const Diagram& d, BirackView b, int jobs = 1);

std::uint64_t phi_integral(const Diagram& d, BirackView b, int jobs = 1);
std::uint64_t phi_shadow_integral(const Diagram& d, BirackView b, const ShadowAction& s, int jobs = 1);

}  // namespace vbs
