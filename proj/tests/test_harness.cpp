#include <catch2/catch_amalgamated.hpp>

#include "heavypath/graph6.hpp"
#include "heavypath/harness.hpp"
#include "oracles.hpp"

using namespace heavypath;

namespace {
bool same_report(const VerificationReport& a, const VerificationReport& b) {
    if (a.theorem != b.theorem || a.graphs_checked != b.graphs_checked ||
        a.witnesses != b.witnesses || a.exceptional_matches != b.exceptional_matches ||
        a.not_applicable != b.not_applicable || a.counterexamples != b.counterexamples)
        return false;
    if (a.counterexample_list.size() != b.counterexample_list.size()) return false;
    for (size_t i = 0; i < a.counterexample_list.size(); ++i)
        if (a.counterexample_list[i].graph6 != b.counterexample_list[i].graph6 ||
            a.counterexample_list[i].reason != b.counterexample_list[i].reason)
            return false;
    return true;
}
}  // namespace

TEST_CASE("labeled enumeration counts and masks") {
    CHECK(labeled_graph_count(3) == 8);
    CHECK(labeled_graph_count(4) == 64);
    int seen = 0;
    long edges = 0;
    enumerate_labeled(3, [&](const Graph& g) {
        ++seen;
        edges += g.edge_count();
    });
    CHECK(seen == 8);
    CHECK(edges == 12);  // each of the 3 slots appears in half the masks

    // mask bit order matches the graph6 upper triangle
    Graph g = graph_from_mask(4, 0b000001);
    CHECK(g.has_edge(0, 1));
    CHECK(g.edge_count() == 1);
    Graph h = graph_from_mask(4, 0b000010);
    CHECK(h.has_edge(0, 2));
    CHECK_THROWS(enumerate_labeled(8, [](const Graph&) {}));  // needs allow_large
    CHECK_THROWS(enumerate_labeled(9, [](const Graph&) {}, true));
}

TEST_CASE("random corpus is deterministic in the seed") {
    CorpusSpec spec;
    spec.source = CorpusSpec::Source::Random;
    spec.n = 10;
    spec.p = 0.5;
    spec.count = 50;
    spec.seed = 99;
    std::vector<std::string> first, second;
    for (uint64_t i = 0; i < spec.count; ++i) first.push_back(emit_graph6(spec.item(i)));
    for (uint64_t i = 0; i < spec.count; ++i) second.push_back(emit_graph6(spec.item(i)));
    CHECK(first == second);
    spec.seed = 100;
    std::vector<std::string> other;
    for (uint64_t i = 0; i < spec.count; ++i) other.push_back(emit_graph6(spec.item(i)));
    CHECK(first != other);
}

TEST_CASE("per-graph checks on landmark graphs") {
    CHECK(check_graph(complete_bipartite(2, 2), Theorem::Pancyclic).kind ==
          VerdictKind::Exceptional);
    CHECK(check_graph(complete_bipartite(2, 2), Theorem::Cycle).kind == VerdictKind::Witness);
    CHECK(check_graph(build_cycle_exception(7, 4), Theorem::Cycle).kind ==
          VerdictKind::Exceptional);
    CHECK(check_graph(build_cycle_exception(7, 4), Theorem::Hamiltonian).kind ==
          VerdictKind::Exceptional);
    CHECK(check_graph(build_path_exception(6, 4), Theorem::HamConnected).kind ==
          VerdictKind::Exceptional);
    CHECK(check_graph(path_graph(4), Theorem::Cycle).kind == VerdictKind::NotApplicable);
    CHECK(check_graph(complete_graph(5), Theorem::OreHC).kind == VerdictKind::Witness);
    CHECK(check_graph(cycle_graph(5), Theorem::OreHC).kind == VerdictKind::NotApplicable);
    CHECK(check_graph(complete_bipartite(3, 3), Theorem::BondyTheorem).kind ==
          VerdictKind::Exceptional);
}

TEST_CASE("theorem tags round trip") {
    for (Theorem t : all_theorems()) {
        auto back = parse_theorem_tag(theorem_tag(t));
        REQUIRE(back);
        CHECK(*back == t);
    }
    CHECK_FALSE(parse_theorem_tag("nope"));
}

TEST_CASE("exhaustive n = 5: zero counterexamples for every theorem") {
    CorpusSpec spec;
    spec.source = CorpusSpec::Source::Exhaustive;
    spec.n = 5;
    for (Theorem t : all_theorems()) {
        VerificationReport rep = verify_theorem(spec, t, 2);
        INFO("theorem " << theorem_tag(t));
        CHECK(rep.graphs_checked == labeled_graph_count(5));
        CHECK(rep.counterexamples == 0);
        CHECK(rep.counterexample_list.empty());
        CHECK(rep.witnesses + rep.exceptional_matches + rep.not_applicable ==
              rep.graphs_checked);
    }
}

TEST_CASE("serial and parallel runs produce identical reports") {
    CorpusSpec spec;
    spec.source = CorpusSpec::Source::Exhaustive;
    spec.n = 6;
    spec.filter_two_connected = true;
    for (Theorem t : {Theorem::Cycle, Theorem::Pancyclic, Theorem::BBCycle}) {
        VerificationReport serial = verify_theorem(spec, t, 1);
        VerificationReport par4 = verify_theorem(spec, t, 4);
        VerificationReport par7 = verify_theorem(spec, t, 7);
        CHECK(same_report(serial, par4));
        CHECK(same_report(serial, par7));
        CHECK(serial.counterexamples == 0);
    }
}

TEST_CASE("two-connectivity filter matches the definition-level count") {
    CorpusSpec spec;
    spec.source = CorpusSpec::Source::Exhaustive;
    spec.n = 5;
    spec.filter_two_connected = true;
    VerificationReport rep = verify_theorem(spec, Theorem::BBCycle, 2);
    uint64_t expected = 0;
    enumerate_labeled(5, [&](const Graph& g) {
        if (oracles::brute_two_connected(g)) ++expected;
    });
    CHECK(rep.graphs_checked == expected);
    CHECK(rep.not_applicable == 0);  // the filter removed everything inapplicable
}

TEST_CASE("graph6 corpus ingestion") {
    CorpusSpec spec;
    spec.source = CorpusSpec::Source::Graph6;
    spec.graph6_lines = {emit_graph6(complete_graph(5)), emit_graph6(cycle_graph(5)),
                         emit_graph6(build_cycle_exception(7, 4))};
    CHECK(spec.size() == 3);
    VerificationReport rep = verify_theorem(spec, Theorem::Cycle, 1);
    CHECK(rep.graphs_checked == 3);
    CHECK(rep.counterexamples == 0);
    CHECK(rep.exceptional_matches == 1);

    spec.graph6_lines.push_back("not graph6 !");
    CHECK_THROWS_AS(verify_theorem(spec, Theorem::Cycle, 3), Graph6Error);
}

TEST_CASE("constructed exception instances land in exceptional_matches") {
    CorpusSpec spec;
    spec.source = CorpusSpec::Source::Graph6;
    for (int n = 5; n <= 9; ++n)
        for (int w = 2; w <= n; ++w)
            if (cycle_exception_range(n, w))
                spec.graph6_lines.push_back(emit_graph6(build_cycle_exception(n, w)));
    VerificationReport rep = verify_theorem(spec, Theorem::Cycle, 2);
    CHECK(rep.counterexamples == 0);
    CHECK(rep.exceptional_matches == rep.graphs_checked);
}
