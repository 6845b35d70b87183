#include <random>
#include <string>

#include "doctest.h"

#include "qgw/errors.hpp"
#include "qgw/graph.hpp"

using namespace qgw;

namespace {

const char* kBraess4Doc = R"({
  "sites": [
    {"id": 0, "potential": 0.0},
    {"id": 1, "potential": 0.0},
    {"id": 2, "potential": 0.0},
    {"id": 3, "potential": 0.0}
  ],
  "edges": [
    {"a": 0, "b": 1, "coupling": "b"},
    {"a": 1, "b": 2, "coupling": "s"},
    {"a": 2, "b": 3, "coupling": "b"},
    {"a": 0, "b": 3, "coupling": "s"},
    {"a": 1, "b": 3, "coupling": "c"}
  ],
  "parameters": {"b": 0.01, "s": 0.01, "c": 0.1}
})";

GraphSpec random_spec(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> size_dist(1, 8);
    std::uniform_real_distribution<double> value_dist(-1.0, 1.0);
    std::bernoulli_distribution edge_dist(0.4);
    std::bernoulli_distribution named_dist(0.5);

    GraphSpec spec;
    const std::size_t n = size_dist(rng);
    for (SiteId i = 0; i < n; ++i) {
        spec.sites.push_back({i, value_dist(rng)});
    }
    spec.parameters = {{"x", value_dist(rng)}, {"y", value_dist(rng)}};
    for (SiteId i = 0; i < n; ++i) {
        for (SiteId j = i + 1; j < n; ++j) {
            if (!edge_dist(rng)) {
                continue;
            }
            Edge e{i, j, 0.0};
            if (named_dist(rng)) {
                e.coupling = named_dist(rng) ? std::string("x") : std::string("y");
            } else {
                e.coupling = value_dist(rng);
            }
            spec.edges.push_back(e);
        }
    }
    return spec;
}

}  // namespace

TEST_CASE("parse_graph_spec accepts the 4-dot document") {
    const GraphSpec spec = parse_graph_spec(kBraess4Doc);
    CHECK(spec.sites.size() == 4);
    CHECK(spec.edges.size() == 5);
    CHECK(spec.parameters.at("c") == doctest::Approx(0.1));

    const Hamiltonian h = build_hamiltonian(spec);
    CHECK(h(1, 3) == 0.1);
    CHECK(h(0, 2) == 0.0);
}

TEST_CASE("parse_graph_spec accepts a single isolated site") {
    const GraphSpec spec = parse_graph_spec(
        R"({"sites": [{"id": 0, "potential": 0.0}], "edges": []})");
    CHECK(spec.sites.size() == 1);
    CHECK(spec.edges.empty());
    CHECK(spec.parameters.empty());
}

TEST_CASE("parse_graph_spec rejects bad documents") {
    SUBCASE("malformed JSON") {
        CHECK_THROWS_AS(parse_graph_spec("{\"sites\": ["), SyntaxError);
    }
    SUBCASE("self-loop") {
        CHECK_THROWS_WITH_AS(
            parse_graph_spec(
                R"({"sites": [{"id":0,"potential":0},{"id":1,"potential":0},{"id":2,"potential":0}],
                    "edges": [{"a":2,"b":2,"coupling":1.0}]})"),
            "edge 0: self-loop (2,2)", ValidationError);
    }
    SUBCASE("duplicate undirected edge") {
        CHECK_THROWS_AS(
            parse_graph_spec(
                R"({"sites": [{"id":0,"potential":0},{"id":1,"potential":0}],
                    "edges": [{"a":0,"b":1,"coupling":1.0},{"a":1,"b":0,"coupling":2.0}]})"),
            ValidationError);
    }
    SUBCASE("duplicate site id") {
        CHECK_THROWS_AS(
            parse_graph_spec(
                R"({"sites": [{"id":0,"potential":0},{"id":0,"potential":1}], "edges": []})"),
            ValidationError);
    }
    SUBCASE("non-dense site ids") {
        CHECK_THROWS_AS(
            parse_graph_spec(
                R"({"sites": [{"id":0,"potential":0},{"id":2,"potential":0}], "edges": []})"),
            ValidationError);
    }
    SUBCASE("edge references missing parameter") {
        CHECK_THROWS_AS(
            parse_graph_spec(
                R"({"sites": [{"id":0,"potential":0},{"id":1,"potential":0}],
                    "edges": [{"a":0,"b":1,"coupling":"q"}]})"),
            UnknownParameterError);
    }
    SUBCASE("unknown top-level key") {
        CHECK_THROWS_AS(
            parse_graph_spec(R"({"sites": [{"id":0,"potential":0}], "edges": [], "extra": 1})"),
            ValidationError);
    }
    SUBCASE("unknown site key") {
        CHECK_THROWS_AS(
            parse_graph_spec(R"({"sites": [{"id":0,"potential":0,"spin":1}], "edges": []})"),
            ValidationError);
    }
    SUBCASE("negative site id") {
        CHECK_THROWS_AS(
            parse_graph_spec(R"({"sites": [{"id":-1,"potential":0}], "edges": []})"),
            ValidationError);
    }
    SUBCASE("no sites") {
        CHECK_THROWS_AS(parse_graph_spec(R"({"sites": [], "edges": []})"),
                        ValidationError);
    }
}

TEST_CASE("build_hamiltonian resolves parameters and overrides") {
    const GraphSpec spec = builtin_braess4(0.01, 0.01, 0.1, 0.0);

    SUBCASE("base values") {
        const Hamiltonian h = build_hamiltonian(spec);
        CHECK(h(1, 3) == 0.1);
        CHECK(h(3, 1) == 0.1);
        CHECK(h(0, 2) == 0.0);
        CHECK(h(0, 0) == 0.0);
    }
    SUBCASE("override precedence") {
        const Hamiltonian h = build_hamiltonian(spec, {{"c", 0.05}});
        CHECK(h(1, 3) == 0.05);
        CHECK(h(0, 1) == 0.01);
    }
    SUBCASE("unknown override") {
        CHECK_THROWS_AS(build_hamiltonian(spec, {{"zz", 1.0}}), UnknownParameterError);
    }
    SUBCASE("all couplings and potentials zero give the zero matrix") {
        const Hamiltonian h = build_hamiltonian(builtin_braess4(0.0, 0.0, 0.0, 0.0));
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(h(i, j) == 0.0);
            }
        }
    }
}

TEST_CASE("builtin_braess4 reproduces the 4x4 matrix pattern") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double b = dist(rng);
        const double s = dist(rng);
        double c = dist(rng);
        if (c == 0.0) {
            c = 0.5;
        }
        const double v0 = dist(rng);
        const Hamiltonian h = build_hamiltonian(builtin_braess4(b, s, c, v0));
        const double expected[4][4] = {{v0, b, 0, s},
                                       {b, v0, s, c},
                                       {0, s, v0, b},
                                       {s, c, b, v0}};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(h(i, j) == expected[i][j]);
            }
        }
    }
}

TEST_CASE("builtin_braess4 corner cases") {
    SUBCASE("diagonal only") {
        const Hamiltonian h = build_hamiltonian(builtin_braess4(0.0, 0.0, 0.0, 5.0));
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(h(i, j) == (i == j ? 5.0 : 0.0));
            }
        }
    }
    SUBCASE("c=0 drops the chord, leaving the 4-cycle") {
        const GraphSpec ring = builtin_braess4(0.01, 0.01, 0.0, 0.0);
        CHECK(ring.edges.size() == 4);
        const Hamiltonian h = build_hamiltonian(ring);
        CHECK(h(1, 3) == 0.0);
        CHECK(h(0, 1) == 0.01);
        CHECK(h(0, 3) == 0.01);
    }
}

TEST_CASE("builtin_braess10 topology") {
    const GraphSpec spec =
        builtin_braess10(0.1, 0.2, 0.25, 0.3, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5);
    CHECK(spec.sites.size() == 10);
    CHECK(spec.edges.size() == 11);

    const Hamiltonian h = build_hamiltonian(spec);
    // double-dot pairs
    CHECK(h(0, 1) == 0.25);
    CHECK(h(2, 3) == 0.25);
    CHECK(h(5, 6) == 0.25);
    CHECK(h(8, 9) == 0.25);
    // upper path
    CHECK(h(1, 2) == 0.2);
    CHECK(h(3, 4) == 0.2);
    CHECK(h(4, 8) == 0.2);
    // lower path
    CHECK(h(1, 5) == 0.1);
    CHECK(h(6, 7) == 0.1);
    CHECK(h(7, 8) == 0.1);
    // cross edge between the single dots
    CHECK(h(4, 7) == 0.3);
    // no direct initial-to-final shortcut
    CHECK(h(0, 8) == 0.0);
    CHECK(h(1, 8) == 0.0);

    SUBCASE("c=0 leaves the two-path graph") {
        const GraphSpec two_paths =
            builtin_braess10(0.1, 0.2, 0.25, 0.0, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5);
        CHECK(two_paths.edges.size() == 10);
        CHECK(build_hamiltonian(two_paths)(4, 7) == 0.0);
    }
    SUBCASE("second parameter set is a valid graph") {
        const GraphSpec weak =
            builtin_braess10(0.04, 0.05, 0.25, 0.3, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        CHECK_NOTHROW(validate_graph_spec(weak));
        CHECK(build_hamiltonian(weak)(0, 0) == 0.0);
    }
    SUBCASE("potential groups land on the right sites") {
        const Hamiltonian g = build_hamiltonian(
            builtin_braess10(0, 0, 0, 0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0));
        const double expected[10] = {1, 1, 3, 3, 5, 4, 4, 6, 2, 2};
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(g(i, i) == expected[i]);
        }
    }
}

TEST_CASE("serialize/parse round-trip is the identity on random specs") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const GraphSpec spec = random_spec(rng);
        REQUIRE_NOTHROW(validate_graph_spec(spec));
        const GraphSpec back = parse_graph_spec(serialize_graph_spec(spec));
        CHECK(back == spec);
    }
}

TEST_CASE("assembled matrices are symmetric with the edge sparsity pattern") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 100; ++trial) {
        const GraphSpec spec = random_spec(rng);
        const Hamiltonian h = build_hamiltonian(spec);
        const std::size_t n = h.size();

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(h(i, j) == h(j, i));
            }
        }
        std::vector<std::vector<bool>> has_edge(n, std::vector<bool>(n, false));
        for (const Edge& e : spec.edges) {
            has_edge[e.a][e.b] = has_edge[e.b][e.a] = true;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && !has_edge[i][j]) {
                    CHECK(h(i, j) == 0.0);
                }
            }
        }
    }
}
