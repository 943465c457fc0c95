#pragma once

#include "vbs/birack.hpp"
#include "vbs/diagram.hpp"
#include "vbs/io.hpp"
#include "vbs/module.hpp"
#include "vbs/shadow.hpp"

#include <optional>
#include <string>

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(VBS_TEST_DATA) + "/" + name; }

inline vbs::FiniteBirack birack(const std::string& name) {
    const auto f = vbs::parse_birack(vbs::read_file(path(name)));
    return vbs::birack_from_tables(f.n, f.tables);
}

inline vbs::TwistedBirack twisted_birack(const std::string& name) {
    const auto f = vbs::parse_birack(vbs::read_file(path(name)));
    return vbs::attach_twist(vbs::birack_from_tables(f.n, f.tables), f.twist.value());
}

inline vbs::ShadowAction shadow(vbs::BirackView b, const std::string& name) {
    return vbs::shadow_from_table(b, vbs::parse_shadow(vbs::read_file(path(name))));
}

inline vbs::ModuleSpec module(vbs::BirackView b, const vbs::ShadowAction& s, const std::string& name) {
    return vbs::module_from_blocks(b, s, vbs::parse_module(vbs::read_file(path(name))));
}

inline vbs::Diagram diagram(const std::string& name) { return vbs::parse_diagram(vbs::read_file(path(name))); }

/// The two-element birack with its checkerboard shadow, shared by most examples.
struct Hopf {
    vbs::FiniteBirack b = birack("pair.birack");
    vbs::ShadowAction s = shadow(b, "checkerboard.shadow");
};

}  // namespace fixtures
