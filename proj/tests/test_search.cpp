#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "heavypath/families.hpp"
#include "heavypath/harness.hpp"
#include "heavypath/search.hpp"
#include "oracles.hpp"

using namespace heavypath;

namespace {
Graph petersen() {
    GraphBuilder gb(10);
    for (int i = 0; i < 5; ++i) {
        gb.add_edge(i, (i + 1) % 5);          // outer pentagon
        gb.add_edge(i, i + 5);                // spokes
        gb.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return gb.build();
}

VertexSet mask_to_set(int n, uint32_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.set(v);
    return s;
}
}  // namespace

TEST_CASE("find_cycle_through examples") {
    Graph c6 = cycle_graph(6);
    auto c = find_cycle_through(c6, VertexSet::full(6));
    REQUIRE(c);
    CHECK(c->length() == 6);
    CHECK_FALSE(find_cycle_through(path_graph(5), VertexSet(5)));
    CHECK(find_cycle_through(disjoint_union(complete_graph(3), complete_graph(3)), VertexSet(6)));
    // no cycle meets both triangles
    CHECK_FALSE(find_cycle_through(disjoint_union(complete_graph(3), complete_graph(3)),
                                   VertexSet::of(6, {0, 3})));
}

TEST_CASE("find_path_through examples") {
    Graph c6 = cycle_graph(6);
    auto p = find_path_through(c6, 0, 3, VertexSet::full(6));
    CHECK_FALSE(p);  // hamiltonian paths in C_6 join adjacent vertices only
    auto q = find_path_through(c6, 0, 1, VertexSet::full(6));
    REQUIRE(q);
    CHECK(q->length() == 6);
    CHECK(q->first() == 0);
    CHECK(q->last() == 1);
    CHECK_THROWS_AS(find_path_through(c6, 2, 2, VertexSet(6)), std::invalid_argument);
}

TEST_CASE("cycle search matches brute enumeration, exhaustive n <= 5") {
    for (int n = 3; n <= 5; ++n)
        enumerate_labeled(n, [&](const Graph& g) {
            for (uint32_t mask = 0; mask < (1u << n); ++mask) {
                bool got = find_cycle_through(g, mask_to_set(n, mask)).has_value();
                REQUIRE(got == oracles::brute_cycle_through(g, mask));
            }
        });
}

TEST_CASE("path search matches brute enumeration, exhaustive n <= 4 all masks") {
    for (int n = 2; n <= 4; ++n)
        enumerate_labeled(n, [&](const Graph& g) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
                        bool got = find_path_through(g, u, v, mask_to_set(n, mask)).has_value();
                        REQUIRE(got == oracles::brute_path_through(g, u, v, mask));
                    }
        });
}

TEST_CASE("searches match brute enumeration on sampled n = 6, 7") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 6 + int(iter % 2);
        Graph g = random_graph(n, 0.35 + 0.1 * double(iter % 4), rng());
        uint32_t mask = uint32_t(rng()) & ((1u << n) - 1);
        REQUIRE(find_cycle_through(g, mask_to_set(n, mask)).has_value() ==
                oracles::brute_cycle_through(g, mask));
        int u = int(rng() % n), v = int(rng() % n);
        if (u == v) continue;
        REQUIRE(find_path_through(g, u, v, mask_to_set(n, mask)).has_value() ==
                oracles::brute_path_through(g, u, v, mask | (1u << u) | (1u << v)));
    }
}

TEST_CASE("returned witnesses cover the required set") {
    Graph g = petersen();
    auto c = find_cycle_through(g, VertexSet::of(10, {0, 7, 3}));
    REQUIRE(c);
    for (int v : {0, 7, 3}) CHECK(c->contains(v));
    auto p = find_path_through(g, 1, 8, VertexSet::of(10, {4}));
    REQUIRE(p);
    CHECK(p->contains(4));
}

TEST_CASE("fixed-length cycles and pancyclicity") {
    Graph g = petersen();
    CHECK_FALSE(has_cycle_of_length(g, 3));
    CHECK_FALSE(has_cycle_of_length(g, 4));
    CHECK(has_cycle_of_length(g, 5));
    CHECK(has_cycle_of_length(g, 6));
    CHECK_FALSE(has_cycle_of_length(g, 7));
    CHECK(has_cycle_of_length(g, 8));
    CHECK(has_cycle_of_length(g, 9));
    CHECK_FALSE(has_cycle_of_length(g, 10));  // not hamiltonian

    CHECK(is_pancyclic(complete_graph(4)).pancyclic);
    auto pr = is_pancyclic(cycle_graph(6));
    CHECK_FALSE(pr.pancyclic);
    CHECK(pr.missing_length == 5);  // longest-first scan
    CHECK_FALSE(is_pancyclic(complete_bipartite(3, 3)).pancyclic);
}

TEST_CASE("hamiltonicity and hamiltonian-connectedness") {
    CHECK(is_hamiltonian(cycle_graph(5)));
    CHECK_FALSE(is_hamiltonian(petersen()));
    CHECK_FALSE(is_hamiltonian(path_graph(4)));

    CHECK(is_hamiltonian_connected(complete_graph(4)).value);
    auto hc = is_hamiltonian_connected(cycle_graph(4));
    CHECK_FALSE(hc.value);
    CHECK(hc.failing_pair == std::pair<int, int>{0, 2});
}

TEST_CASE("rotation improvement grows a triangle of K_5 to a hamilton cycle") {
    Graph g = complete_graph(5);
    Cycle seed(g, {0, 1, 2});
    Cycle grown = improve_cycle(g, seed);
    CHECK(grown.length() == 5);
    // fixpoint: a spanning cycle cannot grow
    CHECK(improve_cycle(g, grown).length() == 5);
}

TEST_CASE("rotation improvement is sound on random graphs") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 80; ++iter) {
        int n = 6 + int(rng() % 4);
        Graph g = random_graph(n, 0.5, rng());
        auto seed = find_cycle_through(g, VertexSet(n));
        if (!seed) continue;
        Cycle grown = improve_cycle(g, *seed);  // Cycle ctor re-validates
        CHECK(grown.length() >= seed->length());
        for (int v : seed->vertices()) CHECK(grown.contains(v));
    }
}

TEST_CASE("heavy_cycle verdicts") {
    auto w = heavy_cycle(complete_graph(5));
    CHECK(w.kind == VerdictKind::Witness);
    REQUIRE(w.cycle);
    CHECK(w.cycle->length() == 5);

    auto e = heavy_cycle(build_cycle_exception(7, 4));
    CHECK(e.kind == VerdictKind::Exceptional);
    REQUIRE(e.family);
    CHECK(e.family->family == Family::CycleException);

    CHECK(heavy_cycle(path_graph(5)).kind == VerdictKind::NotApplicable);
    CHECK(heavy_cycle(petersen()).kind == VerdictKind::Witness);
}

TEST_CASE("heavy_uv_path verdicts") {
    // hubs of an H(8,5) member: qualifying endpoints, graph is exceptional
    Graph h = build_h1xyh2(8, 5);
    auto e = heavy_uv_path(h, 0, 1);
    CHECK(e.kind == VerdictKind::Exceptional);
    REQUIRE(e.family);
    CHECK(e.family->family == Family::HClass);

    CHECK(heavy_uv_path(cycle_graph(6), 0, 1).kind == VerdictKind::NotApplicable);

    auto w = heavy_uv_path(complete_graph(5), 0, 4);
    CHECK(w.kind == VerdictKind::Witness);
    REQUIRE(w.path);
    CHECK(w.path->length() == 5);  // threshold 1: every vertex is heavy
    CHECK(w.path->first() == 0);
    CHECK(w.path->last() == 4);

    // constructive branch: 2(n - omega + 1) >= n + 1 at n = 7, omega = 4
    Graph ce = build_cycle_exception(7, 4);
    auto c = heavy_uv_path(ce, 0, 1);
    CHECK(c.kind == VerdictKind::Witness);
    REQUIRE(c.path);
    CHECK(c.path->vertices() == std::vector<int>{0, 2, 1});

    CHECK_THROWS_AS(heavy_uv_path(complete_graph(5), 2, 2), std::invalid_argument);
}

TEST_CASE("pancyclic_verdict examples") {
    auto k22 = pancyclic_verdict(complete_bipartite(2, 2));
    CHECK(k22.kind == VerdictKind::Exceptional);
    REQUIRE(k22.family);
    CHECK(k22.family->family == Family::K22);

    auto ce = pancyclic_verdict(build_cycle_exception(7, 4));
    CHECK(ce.kind == VerdictKind::Exceptional);
    REQUIRE(ce.family);
    CHECK(ce.family->family == Family::CycleException);

    CHECK(pancyclic_verdict(cycle_graph(6)).kind == VerdictKind::NotApplicable);
    CHECK(pancyclic_verdict(path_graph(4)).kind == VerdictKind::NotApplicable);
    CHECK(pancyclic_verdict(complete_graph(5)).kind == VerdictKind::Witness);
}

TEST_CASE("heavy_cycle never fails exhaustively at n = 5") {
    enumerate_labeled(5, [&](const Graph& g) {
        auto v = heavy_cycle(g);
        REQUIRE(v.kind != VerdictKind::Counterexample);
        if (v.kind == VerdictKind::Witness) {
            REQUIRE(v.cycle);
            VertexSet required = degree_at_least(g, g.order() - max_clique_size(g));
            REQUIRE(v.cycle->vertex_set().contains_all(required));
        }
    });
}
