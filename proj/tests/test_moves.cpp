#include "support/braid.hpp"
#include "support/fixtures.hpp"
#include "support/moves.hpp"
#include "support/structures.hpp"

#include <doctest.h>

using namespace vbs;

namespace {

void check_moves(const std::vector<structures::Set>& sets, const std::vector<moves::Move>& list) {
    REQUIRE(sets.size() >= 3);
    for (const moves::Move& m : list) {
        const Diagram a = braid::closure(m.strands_before, m.before);
        const Diagram b = braid::closure(m.strands_after, m.after);
        for (const auto& s : sets) {
            CAPTURE(m.name);
            CAPTURE(s.name);
            CHECK(structures::evaluate(s, a) == structures::evaluate(s, b));
        }
    }
}

}  // namespace

TEST_CASE("classical moves") { check_moves(structures::virtual_sets(), moves::classical()); }

TEST_CASE("virtual moves") { check_moves(structures::virtual_sets(), moves::virtuals()); }

TEST_CASE("twisted moves") { check_moves(structures::twisted_sets(), moves::twisted()); }

TEST_CASE("braid closures match the hand-written link codes") {
    for (const auto& s : structures::virtual_sets()) {
        CAPTURE(s.name);
        CHECK(structures::evaluate(s, fixtures::diagram("vh.link")) == structures::evaluate(s, braid::closure(2, "s1 v1")));
        CHECK(structures::evaluate(s, fixtures::diagram("l2a1.link")) == structures::evaluate(s, braid::closure(2, "s1 s1")));
        CHECK(structures::evaluate(s, fixtures::diagram("u2.link")) == structures::evaluate(s, braid::closure(2, "")));
    }
}

TEST_CASE("the suite is not vacuous") {
    const auto sets = structures::virtual_sets();
    const auto& s = sets.front();
    CHECK_FALSE(structures::evaluate(s, braid::closure(2, "s1 v1")) == structures::evaluate(s, braid::closure(2, "")));
    CHECK_FALSE(structures::evaluate(s, braid::closure(2, "s1 s1")) == structures::evaluate(s, braid::closure(2, "")));
}
