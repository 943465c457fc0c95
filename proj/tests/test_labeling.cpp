#include "support/braid.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include "vbs/error.hpp"
#include "vbs/labeling.hpp"

#include <doctest.h>

using namespace vbs;

TEST_CASE("framing tile order") {
    CHECK(framing_tile(2, 2) == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(framing_tile(3, 1) == std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(framing_tile(1, 3).size() == 1);
    CHECK(framing_tile(2, 0) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("virtual Hopf per-framing counts") {
    const fixtures::Hopf h;
    const auto counts = framing_counts(fixtures::diagram("vh.link"), h.b);
    REQUIRE(counts.size() == 4);
    CHECK(counts[0].count == 0);
    CHECK(counts[1].count == 4);
    CHECK(counts[2].count == 0);
    CHECK(counts[3].count == 0);
    CHECK(counts[1].framing == std::vector<int>{1, 0});
    CHECK(phi_integral(fixtures::diagram("vh.link"), h.b) == 4);
    CHECK(phi_shadow_integral(fixtures::diagram("vh.link"), h.b, h.s) == 8);
    CHECK(phi_shadow_integral(fixtures::diagram("l2a1.link"), h.b, h.s) == 8);
    CHECK(phi_shadow_integral(fixtures::diagram("u2.link"), h.b, h.s) == 8);
}

TEST_CASE("kinked virtual Hopf labelings") {
    const fixtures::Hopf h;
    const Diagram d = fixtures::diagram("kinked_hopf.link");
    const auto all = enumerate_x_labelings(d, h.b);
    CHECK(all.size() == 4);
    CHECK(std::is_sorted(all.begin(), all.end()));
    const XLabeling known{0, 1, 0, 0, 1, 0};
    CHECK(std::find(all.begin(), all.end(), known) != all.end());
    CHECK(enumerate_shadow_labelings(d, h.b, h.s).size() == 8);
}

TEST_CASE("labelings agree with brute force") {
    const fixtures::Hopf h;
    const auto vt = vtsr_birack(3, 2, 1, 0, 2);
    const auto ca = constant_action_birack({1, 2, 0}, {2, 0, 1}, {2, 0, 1});
    const std::vector<const char*> words{"s1 s1",    "s1 S1 v1",       "v1 s1 v1 S1", "s1 s2 s1",
                                         "S1 v2 s1", "s1 v2 S1 v2",     "v1 v2 v1",    "s1 S2 v1 s2",
                                         "s2 s2 v1", "S1 S2 S1 v1"};
    for (const char* w : words) {
        const Diagram d = braid::closure(3, w);
        for (const std::vector<int>& framing : framing_tile(2, d.component_count())) {
            const Diagram k = add_kinks(d, framing);
            if (k.edge_count() > 9) continue;
            CAPTURE(w);
            CHECK(enumerate_x_labelings(k, h.b).size() == oracle::count_labelings(k, h.b));
            CHECK(enumerate_x_labelings(k, vt).size() == oracle::count_labelings(k, vt));
            CHECK(enumerate_x_labelings(k, ca).size() == oracle::count_labelings(k, ca));
        }
    }
    for (const char* name : {"vh.link", "l2a1.link", "u2.link", "kinked_hopf.link", "atlas/2.1.link"}) {
        const Diagram d = fixtures::diagram(name);
        CHECK(enumerate_x_labelings(d, h.b).size() == oracle::count_labelings(d, h.b));
    }
}

TEST_CASE("shadow labelings agree with brute force") {
    const fixtures::Hopf h;
    for (const char* name : {"vh.link", "l2a1.link", "u2.link", "kinked_hopf.link"}) {
        const Diagram d = fixtures::diagram(name);
        const RegionMap r = faces(d);
        const auto labelings = enumerate_shadow_labelings(d, r, h.b, h.s);
        CHECK(labelings.size() == oracle::count_shadow_labelings(d, h.b, h.s));
        for (const auto& f : labelings)
            for (int e = 0; e < d.edge_count(); ++e) {
                const int x = f.edges[static_cast<std::size_t>(e)];
                CHECK(h.s.act(f.regions[static_cast<std::size_t>(r.face(e, Side::Right))], x) ==
                      f.regions[static_cast<std::size_t>(r.face(e, Side::Left))]);
            }
    }
}

TEST_CASE("twisted labelings") {
    const auto tw = fixtures::twisted_birack("twisted3.birack");
    const Diagram d = braid::closure(2, "s1 t1 v1 t2 S1");
    CHECK(enumerate_x_labelings(d, tw).size() == oracle::count_labelings(d, tw));
    CHECK_THROWS_AS(enumerate_x_labelings(d, tw.base()), ConstraintViolation);
    const Diagram bar = parse_diagram("T 1 2\nT 2 1");
    CHECK(enumerate_x_labelings(bar, tw).size() == 3);
}

TEST_CASE("parallel framings give identical results") {
    const fixtures::Hopf h;
    const Diagram d = fixtures::diagram("l2a1.link");
    const auto one = framing_counts(d, h.b, 1);
    const auto four = framing_counts(d, h.b, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].framing == four[i].framing);
        CHECK(one[i].count == four[i].count);
    }
}

TEST_CASE("unknot counts") {
    const auto b = fixtures::birack("pair.birack");
    const Diagram loop = parse_diagram("O 1");
    const auto counts = framing_counts(loop, b);
    REQUIRE(counts.size() == 2);
    CHECK(counts[0].count == 2);
    CHECK(counts[1].count == 0);
    CHECK(phi_integral(loop, b) == 2);
    CHECK(phi_integral(fixtures::diagram("atlas/2.1.link"), fixtures::birack("one.birack")) == 1);
    CHECK(phi_shadow_integral(loop, b, trivial_shadow(b)) == 2);
}
