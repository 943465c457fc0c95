#pragma once

#include "support/fixtures.hpp"

#include "vbs/labeling.hpp"
#include "vbs/module.hpp"
#include "vbs/search.hpp"

#include <memory>
#include <string>
#include <vector>

namespace structures {

/// A birack (possibly twisted), a shadow and a module over it.
struct Set {
    std::string name;
    std::shared_ptr<const vbs::FiniteBirack> plain;
    std::shared_ptr<const vbs::TwistedBirack> twisted;
    std::shared_ptr<const vbs::ShadowAction> shadow;
    std::shared_ptr<const vbs::ModuleSpec> module;

    vbs::BirackView view() const { return twisted ? vbs::BirackView(*twisted) : vbs::BirackView(*plain); }
};

/// Invariant values compared across equivalent diagrams.
struct Values {
    std::uint64_t phi_z = 0, phi_zs = 0;
    std::vector<vbs::ModuleDescriptor> multiset;
    friend bool operator==(const Values&, const Values&) = default;
};

inline Values evaluate(const Set& s, const vbs::Diagram& d) {
    return {vbs::phi_integral(d, s.view()), vbs::phi_shadow_integral(d, s.view(), *s.shadow),
            vbs::phi_module_multiset(d, s.view(), *s.shadow, *s.module)};
}

/// Second structure found by a seeded search, so it differs from the constant one when possible.
inline vbs::ModuleBlocks searched(vbs::BirackView b, const vbs::ShadowAction& s, int q, std::uint64_t seed, bool twisted) {
    vbs::ModuleSearchOptions opt;
    opt.twisted = twisted;
    const auto r = vbs::random_modules(b, s, q, 12, seed, opt);
    return r.found.back();
}

inline std::vector<Set> virtual_sets() {
    std::vector<Set> out;
    auto hopf = std::make_shared<const vbs::FiniteBirack>(fixtures::birack("pair.birack"));
    auto board = std::make_shared<const vbs::ShadowAction>(fixtures::shadow(*hopf, "checkerboard.shadow"));
    for (const char* m : {"hopf.module", "orient.module", "atlas.module", "constant_rows.module"})
        out.push_back({std::string("two-element/") + m, hopf, nullptr, board,
                       std::make_shared<const vbs::ModuleSpec>(fixtures::module(*hopf, *board, m))});

    auto alex = std::make_shared<const vbs::FiniteBirack>(vbs::vtsr_birack(3, 2, 2, 0, 1));
    auto one = std::make_shared<const vbs::ShadowAction>(vbs::trivial_shadow(*alex));
    out.push_back({"vtsr(3;2,2,0,1)", alex, nullptr, one,
                   std::make_shared<const vbs::ModuleSpec>(
                       vbs::module_from_blocks(*alex, *one, searched(*alex, *one, 5, 3, false)))});

    auto cyc = std::make_shared<const vbs::FiniteBirack>(
        vbs::constant_action_birack({1, 2, 0}, {2, 0, 1}, {0, 1, 2}));
    vbs::Table t(3, 3);
    t << 1, 1, 1, 2, 2, 2, 0, 0, 0;
    auto rot = std::make_shared<const vbs::ShadowAction>(vbs::shadow_from_table(*cyc, t));
    out.push_back({"constant-action", cyc, nullptr, rot,
                   std::make_shared<const vbs::ModuleSpec>(
                       vbs::module_from_blocks(*cyc, *rot, searched(*cyc, *rot, 3, 5, false)))});
    return out;
}

inline std::vector<Set> twisted_sets() {
    std::vector<Set> out;
    auto x3 = std::make_shared<const vbs::TwistedBirack>(fixtures::twisted_birack("twisted3.birack"));
    auto one = std::make_shared<const vbs::ShadowAction>(vbs::trivial_shadow(*x3));
    out.push_back({"three-element/twisted.module", nullptr, x3, one,
                   std::make_shared<const vbs::ModuleSpec>(fixtures::module(*x3, *one, "twisted.module"))});
    out.push_back({"three-element/searched", nullptr, x3, one,
                   std::make_shared<const vbs::ModuleSpec>(
                       vbs::module_from_blocks(*x3, *one, searched(*x3, *one, 5, 2, true)))});

    // B(x,y) = (2y, 2x), V = flip, T = -1 on Z_3
    auto lin = std::make_shared<const vbs::TwistedBirack>(
        vbs::attach_twist(vbs::vtsr_birack(3, 1, 2, 0, 2), {1, 0, 2}));
    auto lone = std::make_shared<const vbs::ShadowAction>(vbs::trivial_shadow(*lin));
    out.push_back({"linear twisted", nullptr, lin, lone,
                   std::make_shared<const vbs::ModuleSpec>(
                       vbs::module_from_blocks(*lin, *lone, searched(*lin, *lone, 3, 4, true)))});
    return out;
}

}  // namespace structures
