#include "support/fixtures.hpp"

#include "vbs/error.hpp"
#include "vbs/io.hpp"

#include <doctest.h>

using namespace vbs;

TEST_CASE("birack files round trip") {
    for (const char* name : {"pair.birack", "one.birack", "untwisted3.birack"}) {
        const auto b = fixtures::birack(name);
        const BirackFile f = parse_birack(format_birack(b));
        CHECK(birack_from_tables(f.n, f.tables) == b);
        CHECK_FALSE(f.twist.has_value());
    }
    const auto tw = fixtures::twisted_birack("twisted3.birack");
    const BirackFile f = parse_birack(format_birack(tw.base(), &tw.twist()));
    CHECK(f.twist == tw.twist());
    CHECK(format_birack(tw.base(), &tw.twist()) == read_file(fixtures::path("twisted3.birack")));
}

TEST_CASE("shadow files round trip") {
    const fixtures::Hopf h;
    CHECK(shadow_from_table(h.b, parse_shadow(format_shadow(h.s))) == h.s);
    CHECK(format_shadow(h.s) == read_file(fixtures::path("checkerboard.shadow")));
}

TEST_CASE("module files round trip") {
    const fixtures::Hopf h;
    for (const char* name : {"hopf.module", "orient.module", "constant_rows.module", "atlas.module"}) {
        const ModuleBlocks m = parse_module(read_file(fixtures::path(name)));
        CHECK(parse_module(format_module(m)) == m);
    }
    const ModuleBlocks t = parse_module(read_file(fixtures::path("twisted.module")));
    CHECK(t.twisted);
    CHECK(t.s.empty());
    CHECK(parse_module(format_module(t)) == t);
}

TEST_CASE("module blocks may come in any order within an element") {
    const ModuleBlocks a = parse_module("module q=3 m=1 n=1\nV: 1 T: 2 S: 0 R: 1");
    const ModuleBlocks b = parse_module("module q=3 m=1 n=1\nR: 1 S: 0 V: 1 T: 2");
    CHECK(a == b);
}

TEST_CASE("malformed files") {
    CHECK_THROWS_AS(parse_birack(""), ParseError);
    CHECK_THROWS_AS(parse_birack("birack n=2\nB1: 1 1 2 2\nB2: 2 2 1 1\nV1: 2 2 1 1"), ParseError);
    CHECK_THROWS_AS(parse_birack("birack n=1\nB1: 2 B2: 1 V1: 1 V2: 1"), ParseError);
    CHECK_THROWS_AS(parse_birack("birack n=1\nB1: 1 B2: 1 V1: 1 V2: 1 T: 1"), ParseError);
    CHECK_THROWS_AS(parse_birack("birack n=1 twisted\nB1: 1 B2: 1 V1: 1 V2: 1"), ParseError);
    CHECK_THROWS_AS(parse_birack("birack n=1\nB1: x B2: 1 V1: 1 V2: 1"), ParseError);
    CHECK_THROWS_AS(parse_shadow("shadow m=1 n=2\n1"), ParseError);
    CHECK_THROWS_AS(parse_shadow("shadow m=1 n=1\n1 1"), ParseError);
    CHECK_THROWS_AS(parse_module("module q=5 m=2 n=1\nV: 1 T: 1 S: 0 R: 1"), ParseError);
    CHECK_THROWS_AS(parse_module("module q=5 m=1 n=1\nV: 1 T: 1 Q: 1 R: 1"), ParseError);
    CHECK_THROWS_AS(read_file(fixtures::path("missing.birack")), ParseError);
}

TEST_CASE("comments are ignored") {
    const BirackFile f = parse_birack("# header follows\nbirack n=1 # one element\nB1: 1\nB2: 1\nV1: 1\nV2: 1\n");
    CHECK(f.n == 1);
}
