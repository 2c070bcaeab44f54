#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "lyt/corpus.hpp"
#include "lyt/io.hpp"
#include "support.hpp"

using namespace lyt;
using io::json;

namespace
{

template <class T, class Parse>
void round_trip(const T &value, Parse parse)
{
    const json j = io::to_json(value);
    const T back = parse(j);
    CHECK(back == value);
    CHECK(io::canonical(io::to_json(back)) == io::canonical(j));
    CHECK(io::canonical(json::parse(io::canonical(j))) == io::canonical(j));
}

} // namespace

TEST_CASE("scalars in JSON")
{
    CHECK(io::to_json(Scalar(3)) == json(3));
    CHECK(io::to_json(Scalar(-1, 2)) == json("-1/2"));
    const Scalar big = Scalar::parse("99999999999999999999999");
    CHECK(io::to_json(big) == json("99999999999999999999999"));
    CHECK(io::scalar_from_json(io::to_json(big), "x") == big);
    CHECK(io::scalar_from_json(json("4"), "x") == Scalar(4));
    CHECK(io::scalar_from_json(json(18446744073709551615ull), "x") == Scalar::parse("18446744073709551615"));
    CHECK_THROWS_AS(io::scalar_from_json(json(1.5), "x"), InputError);
    CHECK_THROWS_AS(io::scalar_from_json(json("2/4"), "x"), InputError);
    CHECK_THROWS_AS(io::scalar_from_json(json("1/0"), "x"), InputError);
    CHECK_THROWS_AS(io::scalar_from_json(json::array(), "x"), InputError);
}

TEST_CASE("algebra files round trip")
{
    for (const auto &name : corpus::algebra_names())
        round_trip(corpus::algebra_by_name(name), [](const json &j) { return io::algebra_from_json(j); });
    round_trip(corpus::abelian(0), [](const json &j) { return io::algebra_from_json(j); });

    const json ly2 = io::to_json(corpus::ly2());
    CHECK(ly2["dim"] == 2);
    CHECK(ly2["binary"] == json::parse(R"([{"i":0,"j":1,"value":[1,0]}])"));
    CHECK(ly2["ternary"] == json::parse(R"([{"i":0,"j":1,"k":1,"value":[1,0]}])"));
}

TEST_CASE("malformed algebra files")
{
    auto bad = [](const char *text) { return json::parse(text); };
    CHECK_THROWS_AS(io::algebra_from_json(bad(R"({"binary":[],"ternary":[]})")), InputError);
    CHECK_THROWS_AS(io::algebra_from_json(bad(R"({"dim":2,"binary":[{"i":1,"j":0,"value":[1,0]}],"ternary":[]})")),
                    InputError);
    CHECK_THROWS_AS(io::algebra_from_json(bad(R"({"dim":2,"binary":[{"i":0,"j":1,"value":[1]}],"ternary":[]})")),
                    InputError);
    CHECK_THROWS_AS(io::algebra_from_json(bad(R"({"dim":2,"binary":[{"i":0,"j":1,"value":[0.5,0]}],"ternary":[]})")),
                    InputError);
    CHECK_THROWS_AS(io::algebra_from_json(bad(R"({"dim":-1,"binary":[],"ternary":[]})")), InputError);
    CHECK_THROWS_AS(io::algebra_from_json(bad(R"([1,2])")), InputError);
}

TEST_CASE("operator and representation files round trip")
{
    round_trip(Matrix{{1, 3}, {0, 2}}, [](const json &j) { return io::matrix_from_json(j, "op"); });
    round_trip(Matrix{{Scalar(1, 3)}}, [](const json &j) { return io::matrix_from_json(j, "op"); });
    CHECK(io::to_json(Matrix{{1, 3}, {0, 2}}) == json::parse(R"({"rows":2,"cols":2,"entries":[[1,3],[0,2]]})"));
    CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":2,"cols":2,"entries":[[1,3]]})"), "op"), InputError);

    for (const auto &p : corpus::pairs()) {
        const Representation rep = adjoint_mrb_representation(p.algebra, p.op);
        round_trip(rep, [&](const json &j) { return io::representation_from_json(j, p.algebra); });
    }
    const LYAlgebra a = corpus::ly2();
    json j = io::to_json(adjoint_representation(a));
    j.erase("D");
    CHECK(io::representation_from_json(j, a) == adjoint_representation(a));
    CHECK_FALSE(j.contains("rv"));
    j["rv"] = io::to_json(Matrix(3, 3));
    CHECK_THROWS_AS(io::representation_from_json(j, a), InputError);
}

TEST_CASE("cochain and infinitesimal files round trip")
{
    std::mt19937_64 rng(test::seed());
    const std::size_t n = 3, m = 2;
    const Cochain1 h = random_cochain1(n, m, rng);
    const Cochain2 c = Cochain2::unflatten(n, m, test::random_vector(Cochain2::size(n, m), rng));
    const TotalCochain2 t{c, h};

    const io::CochainFile f1 = io::cochain_from_json(io::to_json(h), n, m);
    CHECK(f1.degree == 1);
    CHECK(f1.h == h);
    const io::CochainFile f2 = io::cochain_from_json(io::to_json(c), n, m);
    CHECK(f2.degree == 2);
    CHECK(f2.c == c);
    CHECK_FALSE(f2.op);
    CHECK(f2.total().op.h.is_zero());
    const io::CochainFile ft = io::cochain_from_json(io::to_json(t), n, m);
    CHECK(ft.total() == t);
    CHECK(io::canonical(io::to_json(ft.total())) == io::canonical(io::to_json(t)));

    CHECK_THROWS_AS(io::cochain_from_json(io::to_json(c), n, m + 1), InputError);
    json wrong = io::to_json(c);
    wrong["basis_order"] = "other";
    CHECK_THROWS_AS(io::cochain_from_json(wrong, n, m), InputError);

    const Infinitesimal inf = random_infinitesimal(n, rng);
    round_trip(inf, [&](const json &j) { return io::infinitesimal_from_json(j, n); });
    CHECK(io::to_json(inf).contains("F1"));
    CHECK(io::to_json(inf).contains("G1"));
    CHECK(io::to_json(inf).contains("R1"));
}

TEST_CASE("extension files round trip")
{
    const LYAlgebra a = corpus::ly2();
    const Matrix r{{1, 3}, {0, 2}};
    const MrbContext ctx(adjoint_mrb_representation(a, r), r);
    const AbelianExtension ext = extension_from_cocycle(ctx, TotalCochain2::zero(2, 2));
    const json j = io::to_json(ext, canonical_section(ext));
    const io::ExtensionFile back = io::extension_from_json(j);
    CHECK(back.ext == ext);
    REQUIRE(back.section);
    CHECK(*back.section == canonical_section(ext));
    CHECK(io::canonical(io::to_json(back.ext, back.section)) == io::canonical(j));
}

TEST_CASE("reports in JSON")
{
    const AxiomReport r = check_modified_rb(corpus::ly2(), Matrix(2, 2));
    const json j = io::to_json(r);
    CHECK(j["passed"] == false);
    CHECK(j["violations"][0]["axiom"] == "MRB-binary");
    CHECK(j["violations"][0]["indices"] == json::parse("[0,1]"));
    CHECK(j["violations"][0]["rhs"] == json::parse("[-1,0]"));

    const ComplexReport c = cohomology_dims(ComplexKind::LY, 1, adjoint_representation(corpus::ly2()), std::nullopt);
    const json cj = io::to_json(c);
    CHECK(cj["complex"] == "ly");
    CHECK(cj["basis_order"] == kBasisOrderTag);
}

TEST_CASE("file helpers")
{
    const auto dir = std::filesystem::temp_directory_path() / "lyt_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "a.json";
    io::write_file(path, io::to_json(corpus::ly3()));
    CHECK(io::algebra_from_json(io::read_file(path)) == corpus::ly3());
    CHECK_THROWS_AS(io::read_file(dir / "missing.json"), InputError);
    {
        std::ofstream out(dir / "broken.json");
        out << "{not json";
    }
    CHECK_THROWS_AS(io::read_file(dir / "broken.json"), InputError);
    std::filesystem::remove_all(dir);
}
