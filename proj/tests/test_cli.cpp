#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    for (auto& a : args)
        if (a.rfind("@", 0) == 0) a = std::string(VBS_TEST_DATA) + "/" + a.substr(1);
    std::ostringstream out, err;
    const int code = vbs::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

}  // namespace

TEST_CASE("check reports kink data and validates attachments") {
    const Result r = run({"check", "@pair.birack", "--shadow", "@checkerboard.shadow", "--module", "@hopf.module"});
    CHECK(r.code == vbs::cli::kOk);
    CHECK(r.out ==
          "valid, pi=(1 2), N=2\n"
          "alpha=[2, 1]\n"
          "biquandle: no\n"
          "shadow: m=2\n"
          "module: q=5, all 15 relation families vanish\n");

    const Result one = run({"check", "@one.birack"});
    CHECK(one.code == vbs::cli::kOk);
    CHECK(one.out.find("pi=(), N=1") != std::string::npos);

    const Result tw = run({"check", "@untwisted3.birack", "--twist", "2 1 3"});
    CHECK(tw.code == vbs::cli::kOk);
    CHECK(tw.out.find("twist: T=[2, 1, 3]") != std::string::npos);
}

TEST_CASE("check exit codes") {
    CHECK(run({"check", "@nope.birack"}).code == vbs::cli::kIoError);
    CHECK(run({"check", "@pair.birack", "--module", "@hopf.module"}).code == vbs::cli::kInvalid);
    const Result bad_twist = run({"check", "@untwisted3.birack", "--twist", "1 3 2"});
    CHECK(bad_twist.code == vbs::cli::kInvalid);
    CHECK(bad_twist.err.rfind("invalid: ", 0) == 0);
    CHECK(run({"frobnicate"}).code == vbs::cli::kIoError);
    const Result pair_twist = run({"check", "@pair.birack", "--twist", "2 1"});
    CHECK(pair_twist.code == vbs::cli::kInvalid);
    CHECK(pair_twist.err.find("(T x T)B(T x T) = VBV") != std::string::npos);

    TempDir dir("vbs-cli-check");
    dir.write("bad.birack", "birack n=2\nB1:\n1 1\n1 1\nB2:\n1 1\n1 1\nV1:\n1 2\n1 2\nV2:\n1 1\n2 2\n");
    const Result r = run({"check", (dir.path / "bad.birack").string()});
    CHECK(r.code == vbs::cli::kInvalid);
    CHECK(r.err.find("fails at") != std::string::npos);
    dir.write("garbage.birack", "birack n=2\nB1:\n1 x\n");
    CHECK(run({"check", (dir.path / "garbage.birack").string()}).code == vbs::cli::kIoError);
}

TEST_CASE("count lists every framing of the tile") {
    const Result r = run({"count", "--birack", "@pair.birack", "--shadow", "@checkerboard.shadow", "--diagram", "@vh.link"});
    CHECK(r.code == vbs::cli::kOk);
    CHECK(r.out ==
          "framing (0,0): 0\n"
          "framing (1,0): 4\n"
          "framing (0,1): 0\n"
          "framing (1,1): 0\n"
          "phi_Z = 4\n"
          "phi_Z_shadow = 8\n");
    const Result single = run({"count", "--birack", "@pair.birack", "--diagram", "@vh.link", "--framing", "3,2"});
    CHECK(single.out == "framing (1,0): 4\n");
}

TEST_CASE("invariant in plain and json form") {
    const std::vector<std::string> base{"invariant", "--birack", "@pair.birack", "--shadow", "@checkerboard.shadow"};
    auto with = [&](std::vector<std::string> extra) {
        std::vector<std::string> a = base;
        a.insert(a.end(), extra.begin(), extra.end());
        return run(a);
    };
    CHECK(with({"--module", "@hopf.module", "--diagram", "@vh.link"}).out == "8u\n");
    CHECK(with({"--module", "@orient.module", "--diagram", "@orientation.link"}).out == "4u^5\n");
    CHECK(with({"--module", "@orient.module", "--diagram", "@orientation.link", "--reverse"}).out == "4u\n");

    const Result j = with({"--module", "@hopf.module", "--diagram", "@vh.link", "--format", "json"});
    REQUIRE(j.code == vbs::cli::kOk);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["polynomial"] == "8u");
    CHECK(doc["modulus"] == 5);
    CHECK(doc["labelings"] == 8);
    CHECK(doc["framings"].size() == 4);
    CHECK(doc["framings"][1]["count"] == 8);
    CHECK(doc["inputs"]["diagram"]["fnv1a"].get<std::string>().size() == 16);

    CHECK(with({"--module", "@hopf.module"}).code == vbs::cli::kIoError);

    TempDir dir("vbs-cli-invariant");
    dir.write("loop.link", "O 1\n");
    dir.write("ones.module", "module q=5 m=1 n=2\nV:\n1 1\n1 1\nT:\n1 1\n1 1\nS:\n0 0\n0 0\nR:\n1 1\n1 1\n");
    const Result loop = run({"invariant", "--birack", "@pair.birack", "--module", (dir.path / "ones.module").string(),
                             "--diagram", (dir.path / "loop.link").string()});
    CHECK(loop.code == vbs::cli::kOk);
    CHECK(loop.out == "2u^5\n");
}

TEST_CASE("output does not depend on the number of jobs") {
    const std::vector<std::string> a{"invariant", "--birack", "@pair.birack", "--shadow", "@checkerboard.shadow",
                                     "--module", "@hopf.module", "--diagram", "@kinked_hopf.link", "--format", "json"};
    auto b = a;
    b.insert(b.end(), {"--jobs", "4"});
    const Result one = run(a), four = run(b);
    CHECK(one.code == vbs::cli::kOk);
    CHECK(one.out == four.out);
}

TEST_CASE("tabulate") {
    TempDir dir("vbs-cli-tabulate");
    const std::vector<std::string> opts{"--birack", "@pair.birack", "--shadow", "@checkerboard.shadow", "--module",
                                        "@atlas.module"};
    auto tab = [&](const fs::path& p) {
        std::vector<std::string> a{"tabulate", p.string()};
        a.insert(a.end(), opts.begin(), opts.end());
        return run(a);
    };
    const Result empty = tab(dir.path);
    CHECK(empty.code == vbs::cli::kOk);
    CHECK(empty.out.empty());

    fs::copy_file(fs::path(VBS_TEST_DATA) / "atlas/2.1.link", dir.path / "2.1.link");
    fs::copy_file(fs::path(VBS_TEST_DATA) / "vh.link", dir.path / "10.1.link");
    fs::copy_file(fs::path(VBS_TEST_DATA) / "vh.link", dir.path / "2.10.link");
    const Result good = tab(dir.path);
    CHECK(good.code == vbs::cli::kOk);
    CHECK(good.out.find("4u | 2.1\n") != std::string::npos);
    CHECK(good.out.find("2.10, 10.1") != std::string::npos);

    dir.write("broken.link", "X+ 1 2 3\n");
    const Result bad = tab(dir.path);
    CHECK(bad.code != vbs::cli::kOk);
    CHECK(bad.out.find("4u | 2.1\n") != std::string::npos);
    CHECK(bad.err.find("broken.link") != std::string::npos);

    CHECK(tab(dir.path / "missing").code == vbs::cli::kIoError);
}

TEST_CASE("search subcommands") {
    const Result t = run({"search", "twists", "--birack", "@untwisted3.birack"});
    CHECK(t.code == vbs::cli::kOk);
    CHECK(t.out.find("T=[2, 1, 3]") != std::string::npos);
    CHECK(t.out.find("T=[1, 3, 2]") == std::string::npos);
    CHECK(run({"search", "twists", "--birack", "@pair.birack"}).out.find("found 0") != std::string::npos);

    const std::vector<std::string> m{"search", "modules", "--birack", "@pair.birack", "--shadow",
                                     "@checkerboard.shadow", "--q", "5", "--trials", "4", "--seed", "11"};
    const Result a = run(m), b = run(m);
    CHECK(a.code == vbs::cli::kOk);
    CHECK(a.out == b.out);
    CHECK(a.out.find("module q=5 m=2 n=2") != std::string::npos);

    const Result br = run({"search", "biracks", "--n", "2"});
    CHECK(br.code == vbs::cli::kOk);
    CHECK(br.out.find("birack n=2") != std::string::npos);
    CHECK(run({"search", "biracks", "--n", "4"}).code != vbs::cli::kOk);

    TempDir dir("vbs-cli-search");
    const Result w = run({"search", "twists", "--birack", "@untwisted3.birack", "--out", dir.path.string()});
    CHECK(w.code == vbs::cli::kOk);
    CHECK(fs::exists(dir.path / "twisted-002.birack"));
}
