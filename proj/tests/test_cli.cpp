#include <doctest.h>

#include <fmtlab/cli.hpp>
#include <fmtlab/families.hpp>
#include <fmtlab/hom_solver.hpp>
#include <fmtlab/structure_io.hpp>

#include <filesystem>
#include <sstream>

using namespace fmtlab;

namespace
{
    struct Run
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int code = dispatch(args, out, err);
        return { code, out.str(), err.str() };
    }

    auto scratch(const std::string & name) -> std::string
    {
        auto dir = std::filesystem::temp_directory_path() / "fmtlab-cli-test";
        std::filesystem::create_directories(dir);
        return (dir / name).string();
    }
}

TEST_CASE("gen then chrom and eval")
{
    auto w9 = scratch("w9.st");
    CHECK(run({ "gen", "wheel:9", "-o", w9 }).code == 0);
    CHECK(load_structure(w9) == wheel(9));
    auto chrom = run({ "chrom", "-G", w9 });
    CHECK(chrom.code == 0);
    CHECK(chrom.out == "4\n");
    CHECK(run({ "eval", "-f", "phi_bouquet", "-s", w9 }).out == "true\n");
    CHECK(run({ "eval", "-f", "(exists x (rel E x x))", "-s", w9 }).out == "false\n");
    CHECK(run({ "gen", "cycle:4" }).out == format_structure(cycle(4)));
}

TEST_CASE("hom subcommand")
{
    auto g3 = scratch("g3.st");
    auto d4 = scratch("d4.st");
    save_structure(gn(3), g3);
    save_structure(dn(4), d4);
    auto all = run({ "hom", "-A", g3, "-B", d4, "--all", "--require", "injective" });
    CHECK(all.code == 0);
    CHECK(all.out.find("count " + std::to_string(count_homs(gn(3), dn(4))) + "\n") != std::string::npos);
    CHECK(all.out.find("all-injective: true\n") != std::string::npos);
    auto count = run({ "hom", "-A", g3, "-B", d4, "--count", "--require", "embedding" });
    CHECK(count.out == std::to_string(count_homs(gn(3), dn(4), HomConstraints::embedding())) + "\n");
    auto exists = run({ "hom", "-A", d4, "-B", g3 });
    CHECK(exists.out == "false\n");
    auto full = run({ "hom", "-A", g3, "-B", d4, "--all", "--require", "full" });
    CHECK(full.code == 1);
    CHECK(full.out.find("all-full: false\n") != std::string::npos);
}

TEST_CASE("minor and bottleneck subcommands")
{
    auto d9 = scratch("d9.st");
    save_structure(dn(9), d9);
    CHECK(run({ "minor", "-G", d9, "-H", "k5" }).out == "false\n");
    CHECK(run({ "minor", "-G", d9, "-H", "k4" }).out == "true\n");
    auto b = scratch("b.st");
    save_structure(bouquet({ 5, 5, 5, 5, 5 }), b);
    auto r = run({ "bottleneck", "-G", b, "-r", "2", "-m", "4" });
    CHECK(r.code == 0);
    CHECK(r.out.rfind("S {0}\n", 0) == 0);
}

TEST_CASE("verify exit code mirrors the suite")
{
    auto ok = run({ "verify", "lemma-5-2-injective", "--jobs", "2" });
    CHECK(ok.code == 0);
    CHECK(ok.out.find("result lemma-5-2-injective pass\n") != std::string::npos);
    CHECK(run({ "verify", "no-such-suite" }).code == 2);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({ "frobnicate" }).code == 2);
    CHECK(run({ "chrom" }).code == 2);
    CHECK(run({ "chrom", "-G", scratch("missing.st") }).code == 2);
    CHECK(run({ "gen", "wheel:x" }).code == 2);
    CHECK(run({ "eval", "-f", "no_such_formula", "-s", scratch("w9.st") }).code == 2);
    CHECK(run({ "hom", "-A", "a", "-B", "b", "--all", "--count" }).code == 2);
    auto bad = run({ "eval", "-f", "(and)", "-s", scratch("w9.st") });
    CHECK(bad.code == 2);
    CHECK(bad.err.find("offset") != std::string::npos);
    CHECK(run({ "--help" }).code == 0);
}
