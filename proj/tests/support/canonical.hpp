#pragma once

// Presentation matrices up to row order and unit row scaling.

#include "support/fixtures.hpp"

#include "vbs/labeling.hpp"
#include "vbs/modular.hpp"
#include "vbs/module.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace canonical {

using Row = std::vector<std::vector<std::string>>;

inline std::string negate(const std::string& t) { return t[0] == '-' ? t.substr(1) : "-" + t; }

/// Symbolic rows: terms sorted per cell, sign fixed by the smaller of r and -r.
inline Row row(Row r) {
    for (auto& cell : r) std::sort(cell.begin(), cell.end());
    Row neg = r;
    for (auto& cell : neg) {
        for (auto& t : cell) t = negate(t);
        std::sort(cell.begin(), cell.end());
    }
    return std::min(r, neg);
}

inline std::vector<Row> rows(const std::vector<Row>& in) {
    std::vector<Row> out;
    for (const auto& r : in) out.push_back(row(r));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Row> rows(const vbs::SymbolicMatrix& m) {
    std::vector<Row> in;
    for (const auto& entries : m.entries) {
        Row r;
        for (const auto& cell : entries) {
            std::vector<std::string> terms;
            for (const vbs::Term& t : cell) terms.push_back(vbs::to_string(t));
            r.push_back(terms);
        }
        in.push_back(r);
    }
    return rows(in);
}

/// Numeric rows over Z_q, each scaled so its first nonzero entry is 1.
inline std::vector<std::vector<std::int64_t>> rows(const vbs::IntMatrix& m, std::int64_t q) {
    std::vector<std::vector<std::int64_t>> out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        std::vector<std::int64_t> r(static_cast<std::size_t>(m.cols()));
        std::int64_t scale = 0;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const std::int64_t x = vbs::mod(m(i, j), q);
            if (!scale && x) scale = vbs::inverse_mod(x, q);
            r[static_cast<std::size_t>(j)] = x;
        }
        for (auto& x : r) x = vbs::mod(x * scale, q);
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The kinked virtual Hopf labeling with edges (1,2,1,1,2,1) and region B inside the kink.
inline vbs::ShadowLabeling kinked_hopf_labeling(const vbs::Diagram& d, const vbs::RegionMap& r,
                                                const fixtures::Hopf& h) {
    for (const auto& f : vbs::enumerate_shadow_labelings(d, r, h.b, h.s))
        if (f.edges == vbs::XLabeling{0, 1, 0, 0, 1, 0} &&
            f.regions[static_cast<std::size_t>(r.face(d.edge_index(3), vbs::Side::Right))] == 1)
            return f;
    throw std::runtime_error("kinked Hopf labeling not found");
}

inline std::vector<Row> kinked_hopf_matrix() {
    const auto cell = [](std::initializer_list<const char*> terms) {
        return std::vector<std::string>(terms.begin(), terms.end());
    };
    return {
        {{}, cell({"s[2,2,1]"}), cell({"t[2,2,1]"}), cell({"-1"}), {}, {}},
        {{}, cell({"r[2,2,1]"}), cell({"-1"}), {}, {}, {}},
        {cell({"-1"}), {}, {}, cell({"t[1,2,1]"}), cell({"s[1,2,1]"}), {}},
        {{}, {}, {}, {}, cell({"r[1,2,1]"}), cell({"-1"})},
        {{}, {}, {}, {}, cell({"-1"}), cell({"v[1,1,1]"})},
        {cell({"v^-1[1,1,1]"}), cell({"-1"}), {}, {}, {}, {}},
    };
}

}  // namespace canonical
