#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "lyt/cli.hpp"
#include "lyt/corpus.hpp"
#include "lyt/io.hpp"

using namespace lyt;
using io::json;
namespace fs = std::filesystem;

namespace
{

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir
{
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("lyt_cli_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string &name) const { return (path / name).string(); }
};

std::string write(const TempDir &dir, const std::string &name, const json &j)
{
    const std::string p = dir.file(name);
    io::write_file(p, j);
    return p;
}

} // namespace

TEST_CASE("check-algebra on the built-in two-dimensional example")
{
    TempDir dir;
    REQUIRE(run({"examples", "ly2", "-o", dir.file("ly2.json")}).code == 0);
    const Result r = run({"check-algebra", dir.file("ly2.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("LY1–LY6: pass") != std::string::npos);
}

TEST_CASE("check-operator reports the failing pair for the zero operator")
{
    TempDir dir;
    const std::string a = write(dir, "ly2.json", io::to_json(corpus::ly2()));
    const std::string z = write(dir, "zero.json", io::to_json(Matrix(2, 2)));
    const Result text = run({"check-operator", "--algebra", a, "--operator", z, "--kind", "mrb"});
    CHECK(text.code == 1);
    CHECK(text.out.find("at (e0,e1)") != std::string::npos);

    const Result js = run({"--format", "json", "check-operator", "--algebra", a, "--operator", z, "--kind", "mrb"});
    CHECK(js.code == 1);
    const json j = json::parse(js.out);
    CHECK(j["schema_version"] == "1");
    CHECK(j["verb"] == "check-operator");
    CHECK(j["report"]["passed"] == false);
    bool found = false;
    for (const auto &v : j["report"]["violations"])
        found = found || (v["axiom"] == "MRB-binary" && v["indices"] == json::parse("[0,1]"));
    CHECK(found);
}

TEST_CASE("cohomology report satisfies rank-nullity")
{
    TempDir dir;
    const std::string a = write(dir, "ly2.json", io::to_json(corpus::ly2()));
    const std::string id = write(dir, "id.json", io::to_json(Matrix::identity(2)));
    const Result r = run({"--format", "json", "cohomology", "--algebra", a, "--operator", id, "--complex", "mrbly",
                          "--degree", "2"});
    REQUIRE(r.code == 0);
    const json rep = json::parse(r.out)["report"];
    const long c = rep["dim_cochain"], z = rep["dim_cocycles"], b = rep["dim_coboundaries"],
               h = rep["dim_cohomology"], rank = rep["rank_outgoing"];
    CHECK(z + rank == c);
    CHECK(h == z - b);
    CHECK(b <= z);
}

TEST_CASE("examples verb")
{
    const Result op = run({"--format", "json", "examples", "ly2-op", "--k", "2", "--k1", "3"});
    REQUIRE(op.code == 0);
    CHECK(json::parse(op.out)["result"]["entries"] == json::parse("[[1,3],[0,2]]"));

    const Result ly3 = run({"examples", "ly3"});
    REQUIRE(ly3.code == 0);
    CHECK(io::algebra_from_json(json::parse(ly3.out)) == corpus::ly3());

    const Result bad = run({"examples", "nope"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("ly2") != std::string::npos);

    CHECK(run({"examples", "ly3-op", "--k", "0", "--k1", "0"}).code == 2);
}

TEST_CASE("every emitted example passes its checker")
{
    TempDir dir;
    REQUIRE(run({"examples", "--dir", dir.path.string()}).code == 0);
    std::size_t seen = 0;
    for (const auto &name : corpus::algebra_names()) {
        const std::string a = dir.file(name + ".json");
        REQUIRE(fs::exists(a));
        CHECK(run({"check-algebra", a}).code == 0);
        ++seen;
    }
    CHECK(seen >= 5);

    const std::string a2 = dir.file("ly2.json"), a3 = dir.file("ly3.json");
    REQUIRE(run({"examples", "ly2-op", "--k", "1/2", "--k1", "-3", "-o", dir.file("r2.json")}).code == 0);
    CHECK(run({"check-operator", "--algebra", a2, "--operator", dir.file("r2.json"), "--kind", "mrb"}).code == 0);
    REQUIRE(run({"examples", "ly3-op", "--k", "-1", "--k1", "2", "--k2", "1", "--k3", "5", "-o",
                 dir.file("r3.json")})
                .code == 0);
    CHECK(run({"check-operator", "--algebra", a3, "--operator", dir.file("r3.json"), "--kind", "mrb"}).code == 0);
    REQUIRE(run({"examples", "ly3-op", "--k", "2", "--k1", "1", "-o", dir.file("r3bad.json")}).code == 0);
    CHECK(run({"check-operator", "--algebra", a3, "--operator", dir.file("r3bad.json"), "--kind", "mrb"}).code == 1);

    REQUIRE(run({"examples", "adjoint", "--algebra", a2, "--operator", dir.file("r2.json"), "-o",
                 dir.file("adj.json")})
                .code == 0);
    CHECK(run({"check-rep", "--algebra", a2, "--rep", dir.file("adj.json"), "--operator", dir.file("r2.json"),
               "--kind", "mrb"})
              .code == 0);
    REQUIRE(run({"examples", "id", "--dim", "3", "-o", dir.file("id3.json")}).code == 0);
    CHECK(run({"check-operator", "--algebra", a3, "--operator", dir.file("id3.json"), "--kind", "mrb"}).code == 0);
}

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check-algebra", "--no-such-flag", "x.json"}).code == 2);
    CHECK(run({"check-algebra", "/nonexistent/ly2.json"}).code == 2);
    CHECK(run({"--format", "yaml", "examples", "ly2"}).code == 2);

    TempDir dir;
    const std::string a = write(dir, "ly2.json", io::to_json(corpus::ly2()));
    const std::string wrong = write(dir, "r.json", io::to_json(Matrix::identity(3)));
    CHECK(run({"check-operator", "--algebra", a, "--operator", wrong, "--kind", "mrb"}).code == 2);
    CHECK(run({"check-operator", "--algebra", a, "--operator", wrong, "--kind", "xyz"}).code == 2);
}

TEST_CASE("thread count never changes output bytes")
{
    TempDir dir;
    const std::string a = write(dir, "ly3.json", io::to_json(corpus::ly3()));
    const std::string r = write(dir, "r.json", io::to_json(corpus::ly3_operator(1, 2, 1, -1)));
    for (const char *complex : {"ly", "mrbo", "mrbly"}) {
        for (const char *degree : {"1", "2"}) {
            const std::vector<std::string> args{"--format", "json", "cohomology", "--algebra", a, "--operator",
                                                r, "--complex", complex, "--degree", degree};
            auto threaded = args;
            threaded.insert(threaded.begin(), {"--threads", "4"});
            const Result one = run(args), four = run(threaded);
            CHECK(one.code == 0);
            CHECK(one.out == four.out);
        }
    }
    const std::string a2 = write(dir, "ly2.json", io::to_json(corpus::ly2()));
    const std::vector<std::string> search{"search-operators", "--algebra", a2, "--kind", "mrb", "--candidates",
                                          "-1,0,1"};
    auto threaded = search;
    threaded.insert(threaded.begin(), {"--threads", "3"});
    CHECK(run(search).out == run(threaded).out);
}

TEST_CASE("violation cap from the environment")
{
    TempDir dir;
    const std::string a = write(dir, "ly3.json", io::to_json(corpus::ly3()));
    const std::string z = write(dir, "zero.json", io::to_json(Matrix(3, 3)));
    const std::vector<std::string> args{"--format", "json", "check-operator", "--algebra", a, "--operator", z,
                                        "--kind", "mrb"};
    ::setenv("LYT_MAX_VIOLATIONS", "1", 1);
    const Result capped = run(args);
    ::setenv("LYT_MAX_VIOLATIONS", "1000", 1);
    const Result full = run(args);
    ::setenv("LYT_MAX_VIOLATIONS", "zero", 1);
    const Result bad = run(args);
    ::unsetenv("LYT_MAX_VIOLATIONS");

    CHECK(capped.code == 1);
    CHECK(full.code == 1);
    CHECK(bad.code == 2);
    const json jc = json::parse(capped.out), jf = json::parse(full.out);
    CHECK(jc["report"]["violations"].size() == 1);
    CHECK(jc["report"]["truncated"] == true);
    CHECK(jf["report"]["violations"].size() > 1);
    CHECK(jf["report"]["truncated"] == false);
}

TEST_CASE("extension pipeline through the CLI")
{
    TempDir dir;
    const std::string a = write(dir, "ly2.json", io::to_json(corpus::ly2()));
    const std::string r = write(dir, "r.json", io::to_json(corpus::ly2_operator(2, 3)));
    const std::string zero = write(dir, "c.json", io::to_json(TotalCochain2::zero(2, 2)));

    CHECK(run({"check-cocycle", "--algebra", a, "--operator", r, "--cochain", zero}).code == 0);
    REQUIRE(run({"extend", "--algebra", a, "--operator", r, "--cochain", zero, "-o", dir.file("ext.json")}).code ==
            0);
    CHECK(run({"check-algebra", dir.file("ext.json")}).code == 0);
    const Result back = run({"--format", "json", "extract-cocycle", "--extension", dir.file("ext.json")});
    REQUIRE(back.code == 0);
    CHECK(json::parse(back.out).contains("result"));

    REQUIRE(run({"semidirect", "--algebra", a, "--operator", r, "-o", dir.file("sd.json")}).code == 0);
    CHECK(run({"check-algebra", dir.file("sd.json")}).code == 0);
    REQUIRE(run({"descend", "--algebra", a, "--operator", r, "-o", dir.file("desc.json")}).code == 0);
    CHECK(run({"check-algebra", dir.file("desc.json")}).code == 0);
}

TEST_CASE("cohomologous infinitesimals")
{
    TempDir dir;
    const LYAlgebra alg = corpus::ly2();
    const LinearOperator op = corpus::ly2_operator(2, 3);
    const std::string a = write(dir, "ly2.json", io::to_json(alg));
    const std::string r = write(dir, "r.json", io::to_json(op));
    const MrbContext ctx = adjoint_context(alg, op);
    const Cochain1 h{Matrix{{0, 1}, {0, 0}}};
    const Infinitesimal exact = Infinitesimal::from_total(d1(ctx, h));
    const std::string z = write(dir, "z.json", io::to_json(Infinitesimal::zero(2)));
    const std::string e = write(dir, "e.json", io::to_json(exact));

    CHECK(run({"check-cocycle", "--algebra", a, "--operator", r, "--infinitesimal", e}).code == 0);
    const Result yes = run({"cohomologous", "--algebra", a, "--operator", r, "--first", e, "--second", z});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("cohomologous: yes") != std::string::npos);

    Infinitesimal bracket = Infinitesimal::zero(2);
    bracket.r1 = Matrix::identity(2);
    const std::string b = write(dir, "b.json", io::to_json(bracket));
    CHECK(run({"check-cocycle", "--algebra", a, "--operator", r, "--infinitesimal", b}).code == 1);
}
