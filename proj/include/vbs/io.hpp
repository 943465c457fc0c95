#pragma once

#include "vbs/birack.hpp"
#include "vbs/module.hpp"
#include "vbs/shadow.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace vbs {

/// Contents of a birack file, 0-based. The twist is present iff the header says `twisted`.
struct BirackFile {
    int n = 0;
    BirackTables tables;
    std::optional<Permutation> twist;
};

/// Throws ParseError on malformed text.
BirackFile parse_birack(std::string_view text);
std::string format_birack(const FiniteBirack& b, const Permutation* twist = nullptr);

/// Returns the 0-based m x n action table.
Table parse_shadow(std::string_view text);
std::string format_shadow(const ShadowAction& s);

ModuleBlocks parse_module(std::string_view text);
std::string format_module(const ModuleBlocks& m);

/// Throws ParseError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace vbs
