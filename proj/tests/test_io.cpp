#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ghtk/brute.hpp"
#include "ghtk/error.hpp"
#include "ghtk/io.hpp"
#include "ghtk/solver.hpp"
#include "test_oracles.hpp"

using ghtk::Error;
using nlohmann::json;

TEST_CASE("json parsing") {
    auto x = ghtk::io::parse_matrix_json(
        R"({"labels": ["a", "b"], "dist": [[0, 1], [1, 0]]})");
    CHECK(x.size() == 2);
    CHECK(x(0, 1) == 1.0);
    CHECK(x.label(0) == "a");

    auto bare = ghtk::io::parse_matrix_json(R"({"dist": [[0, 2], [2, 0]]})");
    CHECK(bare.size() == 2);

    CHECK_THROWS_AS(ghtk::io::parse_matrix_json("not json"), Error);
    CHECK_THROWS_AS(ghtk::io::parse_matrix_json(R"({"dist": "x"})"), Error);
    CHECK_THROWS_AS(ghtk::io::parse_matrix_json(R"({"nope": []})"), Error);
    // validation errors surface with their own names
    try {
        ghtk::io::parse_matrix_json(
            R"({"dist": [[0, 1, 3], [1, 0, 1], [3, 1, 0]]})");
        FAIL("expected TriangleViolation");
    } catch (const Error& e) {
        CHECK(e.name() == "TriangleViolation");
    }
}

TEST_CASE("csv parsing") {
    auto x = ghtk::io::parse_matrix_csv("0,1\n1,0\n");
    CHECK(x.size() == 2);

    auto labeled = ghtk::io::parse_matrix_csv("a,b\n0,1\n1,0\n");
    CHECK(labeled.label(1) == "b");

    auto spaced = ghtk::io::parse_matrix_csv(" 0 , 1 \n 1 , 0 \n");
    CHECK(spaced(0, 1) == 1.0);

    CHECK_THROWS_AS(ghtk::io::parse_matrix_csv(""), Error);
    CHECK_THROWS_AS(ghtk::io::parse_matrix_csv("0,1\n1\n"), Error);
    CHECK_THROWS_AS(ghtk::io::parse_matrix_csv("0,x\nx,0\n"), Error);
}

TEST_CASE("matrix serialization round-trips exactly") {
    auto x = oracles::random_space(4, 5);
    auto via_json = ghtk::io::parse_matrix_json(ghtk::io::matrix_to_json(x));
    CHECK(via_json.matrix() == x.matrix());
    auto via_csv = ghtk::io::parse_matrix_csv(ghtk::io::matrix_to_csv(x));
    CHECK(via_csv.matrix() == x.matrix());
}

TEST_CASE("file round trip and extension dispatch") {
    auto x = oracles::random_space(8, 4);
    ghtk::io::write_file("/tmp/ghtk_io_test.json", ghtk::io::matrix_to_json(x));
    CHECK(ghtk::io::load_space("/tmp/ghtk_io_test.json").matrix() == x.matrix());
    ghtk::io::write_file("/tmp/ghtk_io_test.csv", ghtk::io::matrix_to_csv(x));
    CHECK(ghtk::io::load_space("/tmp/ghtk_io_test.csv").matrix() == x.matrix());
    ghtk::io::write_file("/tmp/ghtk_io_test.dat", ghtk::io::matrix_to_csv(x));
    CHECK(ghtk::io::load_space("/tmp/ghtk_io_test.dat").matrix() == x.matrix());
    CHECK_THROWS_AS(ghtk::io::load_space("/tmp/ghtk_no_such_file"), Error);
}

TEST_CASE("correspondence serialization is sorted") {
    ghtk::Correspondence r(2, 2, {{1, 1}, {0, 0}, {0, 1}});
    auto j = json::parse(ghtk::io::correspondence_to_json(r));
    REQUIRE(j.size() == 3);
    CHECK(j[0] == json::array({0, 0}));
    CHECK(j[1] == json::array({0, 1}));
    CHECK(j[2] == json::array({1, 1}));
}

TEST_CASE("gh result serialization carries a re-scorable witness") {
    auto x = oracles::random_space(1, 4);
    auto y = oracles::random_space(2, 4);
    ghtk::SolverOptions opts;
    opts.allow_shortcuts = false;
    auto r = ghtk::gh_exact(x, y, opts);

    auto j = json::parse(ghtk::io::gh_result_to_json(r));
    CHECK(j["value"].get<double>() == r.value);
    CHECK(j["method"].get<std::string>() == "search");
    CHECK(j["lower"].get<double>() == r.lower);
    CHECK(j["upper"].get<double>() == r.upper);

    std::vector<ghtk::IndexPair> pairs;
    for (const auto& p : j["witness"])
        pairs.emplace_back(p[0].get<std::uint32_t>(), p[1].get<std::uint32_t>());
    ghtk::Correspondence parsed(x.size(), y.size(), std::move(pairs));
    CHECK(ghtk::distortion(x, y, parsed) == 2.0 * j["value"].get<double>());
}

TEST_CASE("borsuk result serialization") {
    auto r = ghtk::borsuk_number(ghtk::delta_simplex(3));
    auto j = json::parse(ghtk::io::borsuk_result_to_json(r));
    CHECK(j["beta"].get<std::size_t>() == 3);
    CHECK(j["witness"].size() == 3);
    CHECK(j["diam"].get<double>() == 1.0);
    CHECK(j["epsilon"].get<double>() > 0.0);
}
