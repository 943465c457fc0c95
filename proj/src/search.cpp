#include "vbs/search.hpp"

#include "vbs/error.hpp"
#include "vbs/module.hpp"
#include "vbs/rng.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace vbs {

SearchReport<TwistedBirack> enumerate_twists(const FiniteBirack& b) {
    SearchReport<TwistedBirack> report;
    report.parameters.n = b.size();
    Permutation t = identity_permutation(b.size());
    do {
        if (compose(t, t) != identity_permutation(b.size())) continue;
        ++report.trials;
        try {
            report.found.push_back(attach_twist(b, t));
        } catch (const AxiomViolation& e) {
            ++report.rejects[e.axiom()];
        }
    } while (std::next_permutation(t.begin(), t.end()));
    return report;
}

namespace {

class ModuleBacktracker {
public:
    ModuleBacktracker(const RelationSystem& sys, int q, bool twisted, std::map<std::string, std::uint64_t>& rejects)
        : sys_(sys), rejects_(rejects) {
        std::vector<int> units;
        for (int a = 1; a < q; ++a)
            if (inverse_mod(a, q) != 0) units.push_back(a);
        std::vector<int> residues(static_cast<std::size_t>(q));
        std::iota(residues.begin(), residues.end(), 0);

        std::vector<int> slot(static_cast<std::size_t>(sys.variable_count()), -1);
        for (int id = 0; id < sys.variable_count(); ++id) {
            const Coefficient k = sys.variable(id).kind;
            if (k == Coefficient::S && twisted) continue;
            if (k == Coefficient::Q && !twisted) continue;
            slot[static_cast<std::size_t>(id)] = static_cast<int>(order_.size());
            order_.push_back(id);
            domains_.push_back(k == Coefficient::S ? residues : units);
        }
        checks_.resize(order_.size());
        for (const auto& inst : sys.instances()) {
            int last = -1;
            for (int v : inst.variables) last = std::max(last, slot[static_cast<std::size_t>(v)]);
            if (last >= 0) checks_[static_cast<std::size_t>(last)].push_back(&inst);
        }
    }

    /// One trial; true when `m` holds a complete structure.
    bool run(ModuleBlocks& m, Rng& rng, std::uint64_t budget) {
        values_ = domains_;
        for (auto& d : values_) rng.shuffle(d);
        nodes_ = 0;
        budget_ = budget;
        return descend(m, 0) == Outcome::Found;
    }

private:
    enum class Outcome { Found, Exhausted, OutOfBudget };

    Outcome descend(ModuleBlocks& m, std::size_t depth) {
        if (depth == order_.size()) return Outcome::Found;
        for (int value : values_[depth]) {
            if (++nodes_ > budget_) return Outcome::OutOfBudget;
            sys_.assign(m, order_[depth], value);
            const RelationSystem::Instance* failed = nullptr;
            for (const auto* inst : checks_[depth])
                if (!sys_.holds(*inst, m)) {
                    failed = inst;
                    break;
                }
            if (failed) {
                ++rejects_["generator " + std::to_string(failed->generator)];
                continue;
            }
            const Outcome o = descend(m, depth + 1);
            if (o != Outcome::Exhausted) return o;
        }
        return Outcome::Exhausted;
    }

    const RelationSystem& sys_;
    std::map<std::string, std::uint64_t>& rejects_;
    std::vector<int> order_;
    std::vector<std::vector<int>> domains_, values_;
    std::vector<std::vector<const RelationSystem::Instance*>> checks_;
    std::uint64_t nodes_ = 0, budget_ = 0;
};

}  // namespace

SearchReport<ModuleBlocks> random_modules(BirackView b, const ShadowAction& s, int q, std::uint64_t trials,
                                          std::uint64_t seed, const ModuleSearchOptions& options) {
    if (q < 2) throw DimensionMismatch("modulus must be at least 2");
    SearchReport<ModuleBlocks> report;
    report.parameters = {b.size(), s.size(), q, trials, seed};
    const auto keep = [&](const ModuleBlocks& m) {
        module_from_blocks(b, s, m);
        if (std::find(report.found.begin(), report.found.end(), m) == report.found.end()) report.found.push_back(m);
    };

    const RelationSystem sys(b, s, options.twisted);
    ModuleBacktracker search(sys, q, options.twisted, report.rejects);
    Rng rng(seed);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        ++report.trials;
        ModuleBlocks m = ModuleBlocks::constant(q, s.size(), b.size(), options.twisted);
        if (trial == 0 && options.constant_first) {
            if (auto f = first_relation_failure(b, s, m))
                ++report.rejects["generator " + std::to_string(f->generator)];
            else
                keep(m);
            continue;
        }
        if (search.run(m, rng, options.budget))
            keep(m);
        else
            ++report.rejects["budget"];
    }
    return report;
}

namespace {

using Pairs = std::vector<ElementPair>;

BirackTables tables_of(int n, const Pairs& bmap, const Pairs& vmap) {
    BirackTables t{Table(n, n), Table(n, n), Table(n, n), Table(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto k = static_cast<std::size_t>(i * n + j);
            t.b1(j, i) = bmap[k].first;
            t.b2(i, j) = bmap[k].second;
            t.v1(j, i) = vmap[k].first;
            t.v2(i, j) = vmap[k].second;
        }
    return t;
}

// V-only conditions: involution, sideways bijection fixing the diagonal, and
// the all-virtual Yang-Baxter equation.
bool virtual_part_ok(int n, const Pairs& v) {
    const auto at = [&](int x, int y) { return v[static_cast<std::size_t>(x * n + y)]; };
    Pairs side(v.size(), {-1, -1});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto& cell = side[static_cast<std::size_t>(at(x, y).first * n + x)];
            if (cell.first >= 0) return false;
            cell = {at(x, y).second, y};
        }
    for (int x = 0; x < n; ++x)
        if (side[static_cast<std::size_t>(x * n + x)].first != side[static_cast<std::size_t>(x * n + x)].second)
            return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto [a, b] = at(x, y);
                auto [c, d] = at(b, z);
                auto [e, f] = at(a, c);
                const std::array<int, 3> lhs{e, f, d};
                auto [g, h] = at(y, z);
                auto [i, j] = at(x, g);
                auto [k, l] = at(j, h);
                const std::array<int, 3> rhs{i, k, l};
                if (lhs != rhs) return false;
            }
    return true;
}

void involutions(std::vector<int>& image, std::size_t from, std::vector<std::vector<int>>& out) {
    while (from < image.size() && image[from] >= 0) ++from;
    if (from == image.size()) {
        out.push_back(image);
        return;
    }
    image[from] = static_cast<int>(from);
    involutions(image, from + 1, out);
    for (std::size_t j = from + 1; j < image.size(); ++j) {
        if (image[j] >= 0) continue;
        image[from] = static_cast<int>(j);
        image[j] = static_cast<int>(from);
        involutions(image, from + 1, out);
        image[j] = -1;
    }
    image[from] = -1;
}

}  // namespace

SearchReport<FiniteBirack> enumerate_biracks(int n, bool allow_large) {
    if (n < 1) throw DimensionMismatch("birack size must be positive");
    if (n > 3 && !allow_large) throw SizeGuard("enumerate_biracks limited to n <= 3 without an explicit override");
    SearchReport<FiniteBirack> report;
    report.parameters.n = n;
    const int N = n * n;
    const auto pair = [n](int k) { return ElementPair{k / n, k % n}; };

    Pairs flip(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) flip[static_cast<std::size_t>(k)] = {k % n, k / n};

    // B candidates: pair bijections passing the classical axioms alongside the flip V
    std::vector<Pairs> bs;
    std::vector<int> perm(static_cast<std::size_t>(N));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Pairs bmap(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) bmap[static_cast<std::size_t>(k)] = pair(perm[static_cast<std::size_t>(k)]);
        try {
            FiniteBirack::from_tables(n, tables_of(n, bmap, flip));
            bs.push_back(std::move(bmap));
        } catch (const AxiomViolation& e) {
            ++report.rejects["B: " + e.axiom()];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Pairs> vs;
    std::vector<std::vector<int>> invs;
    std::vector<int> image(static_cast<std::size_t>(N), -1);
    involutions(image, 0, invs);
    for (const auto& inv : invs) {
        Pairs vmap(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) vmap[static_cast<std::size_t>(k)] = pair(inv[static_cast<std::size_t>(k)]);
        if (virtual_part_ok(n, vmap))
            vs.push_back(std::move(vmap));
        else
            ++report.rejects["V axioms"];
    }

    for (const auto& bmap : bs)
        for (const auto& vmap : vs) {
            ++report.trials;
            try {
                report.found.push_back(FiniteBirack::from_tables(n, tables_of(n, bmap, vmap)));
            } catch (const AxiomViolation& e) {
                ++report.rejects[e.axiom()];
            }
        }
    return report;
}

}  // namespace vbs
