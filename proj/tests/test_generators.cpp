#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ghtk/borsuk.hpp"
#include "ghtk/error.hpp"
#include "ghtk/generators.hpp"

using ghtk::Error;
using ghtk::GenKind;
using ghtk::GenSpec;

TEST_CASE("spec parsing") {
    auto s = ghtk::parse_gen_spec("euclidean:8:2:1.5:42");
    CHECK(s.kind == GenKind::euclidean);
    CHECK(s.n == 8);
    CHECK(s.dim == 2);
    CHECK(s.scale == 1.5);
    CHECK(s.seed == 42);

    auto p = ghtk::parse_gen_spec("polygon:5");
    CHECK(p.kind == GenKind::polygon);
    CHECK(p.n == 5);
    CHECK(p.scale == 1.0);

    auto q = ghtk::parse_gen_spec("synthetic:4:2.0:7");
    CHECK(q.kind == GenKind::synthetic);
    CHECK(q.scale == 2.0);
    CHECK(q.seed == 7);

    CHECK(ghtk::parse_gen_spec(ghtk::gen_spec_to_string(s)).n == s.n);

    CHECK_THROWS_AS(ghtk::parse_gen_spec(""), Error);
    CHECK_THROWS_AS(ghtk::parse_gen_spec("mystery:3"), Error);
    CHECK_THROWS_AS(ghtk::parse_gen_spec("euclidean:0"), Error);
    CHECK_THROWS_AS(ghtk::parse_gen_spec("euclidean:x"), Error);
}

TEST_CASE("generation is deterministic") {
    for (auto kind : {GenKind::euclidean, GenKind::synthetic,
                      GenKind::sphere_sample}) {
        GenSpec s;
        s.kind = kind;
        s.n = 6;
        s.seed = 123;
        auto a = ghtk::generate(s);
        auto b = ghtk::generate(s);
        CHECK(a.matrix() == b.matrix());
        s.seed = 124;
        CHECK(ghtk::generate(s).matrix() != a.matrix());
    }
}

TEST_CASE("every generator output is a valid metric") {
    for (auto kind : {GenKind::euclidean, GenKind::synthetic, GenKind::polygon,
                      GenKind::sphere_sample, GenKind::simplex}) {
        for (std::size_t n : {1u, 2u, 5u, 9u}) {
            GenSpec s;
            s.kind = kind;
            s.n = n;
            s.seed = 9;
            auto x = ghtk::generate(s);
            CHECK(x.size() == n);
            CHECK_NOTHROW(ghtk::validate_metric(x.matrix()));
        }
    }
}

TEST_CASE("simplex generator matches delta_simplex") {
    GenSpec s;
    s.kind = GenKind::simplex;
    s.n = 3;
    s.scale = 2.0;
    CHECK(ghtk::generate(s).matrix() == ghtk::delta_simplex(3, 2.0).matrix());
}

TEST_CASE("unit square from the polygon generator") {
    GenSpec s;
    s.kind = GenKind::polygon;
    s.n = 4;
    auto sq = ghtk::generate(s);
    CHECK(sq(0, 1) == doctest::Approx(1.0).epsilon(1e-12));       // side
    CHECK(sq.diameter() ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));        // diagonal
    CHECK(ghtk::borsuk_number(sq).number == 2);
}

TEST_CASE("scale parameter acts linearly") {
    GenSpec s;
    s.kind = GenKind::euclidean;
    s.n = 5;
    s.seed = 3;
    auto unit = ghtk::generate(s);
    s.scale = 4.0;
    auto big = ghtk::generate(s);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(big(i, j) == doctest::Approx(4.0 * unit(i, j)).epsilon(1e-12));
}

TEST_CASE("rng stream derivation separates tags") {
    CHECK(ghtk::rng::derive(1, 0) != ghtk::rng::derive(1, 1));
    CHECK(ghtk::rng::derive(1, 0) == ghtk::rng::derive(1, 0));
    ghtk::rng::SplitMix64 g(0);
    double u = g.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}
