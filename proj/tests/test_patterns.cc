#include <ramsey_lab/canonical.hh>
#include <ramsey_lab/constructions.hh>
#include <ramsey_lab/errors.hh>
#include <ramsey_lab/patterns.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace ramsey_lab;

TEST_CASE("pattern grammar")
{
    CHECK(parse_pattern("k2n:3") == PatternSpec::k2n(3));
    CHECK(parse_pattern("wheel:5") == PatternSpec::wheel(5));
    CHECK(parse_pattern("star:1") == PatternSpec::star(1));
    CHECK(parse_pattern("book:2") == PatternSpec::book(2));
    CHECK(parse_pattern("cycle:4") == PatternSpec::cycle(4));
    CHECK(parse_pattern("clique:6") == PatternSpec::clique(6));
    CHECK(to_string(PatternSpec::wheel(7)) == "wheel:7");

    CHECK_THROWS_AS(parse_pattern("cycle:2"), ArgumentError);
    CHECK_THROWS_AS(parse_pattern("wheel:2"), ArgumentError);
    CHECK_THROWS_AS(parse_pattern("k2n:0"), ArgumentError);
    CHECK_THROWS_AS(parse_pattern("wheel5"), ArgumentError);
    CHECK_THROWS_AS(parse_pattern("petal:3"), ArgumentError);
    CHECK_THROWS_AS(parse_pattern("star:x"), ArgumentError);
}

TEST_CASE("realisations")
{
    auto w5 = realize(PatternSpec::wheel(5));
    CHECK(w5.order() == 6);
    CHECK(w5.degree(0) == 5);
    for (int v = 1 ; v <= 5 ; ++v)
        CHECK(w5.degree(v) == 3);
    CHECK(w5 == join(empty_graph(1), cycle_graph(5)));

    CHECK(realize(PatternSpec::book(1)) == complete_graph(3));
    CHECK(canonical_form(realize(PatternSpec::k2n(1))) == canonical_form(path_graph(3)));
    CHECK(realize(PatternSpec::book(4)) == join(complete_graph(2), empty_graph(4)));

    for (int m = 3 ; m <= 20 ; ++m) {
        auto w = realize(PatternSpec::wheel(m));
        CHECK(w.order() == m + 1);
        CHECK(w.edge_count() == 2 * m);
    }
    for (int n = 1 ; n <= 20 ; ++n) {
        auto b = realize(PatternSpec::book(n));
        CHECK(b.order() == n + 2);
        CHECK(b.edge_count() == 2 * n + 1);
    }
}

TEST_CASE("named constructions")
{
    CHECK(disjoint_cliques(1, 5) == complete_graph(5));
    int octahedron[] = {2, 2, 2};
    CHECK(complement(disjoint_cliques(3, 2)) == complete_multipartite(octahedron));
    auto w = disjoint_cliques(3, 4);
    CHECK(w.order() == 12);
    CHECK(w.edge_count() == 18);

    int k23[] = {2, 3};
    auto g = complete_multipartite(k23);
    CHECK(g.edge_count() == 6);
    CHECK(canonical_form(g) == canonical_form(realize(PatternSpec::k2n(3))));
    CHECK(join(empty_graph(1), empty_graph(1)) == complete_graph(2));
    CHECK_THROWS_AS(disjoint_cliques(0, 3), ArgumentError);
    CHECK_THROWS_AS(join(empty_graph(5000), empty_graph(5000)), CapacityError);
}

TEST_CASE("chromatic data agrees with brute-force colouring")
{
    std::vector<PatternSpec> patterns;
    for (int n = 1 ; n <= 5 ; ++n) {
        patterns.push_back(PatternSpec::star(n));
        patterns.push_back(PatternSpec::k2n(n));
        patterns.push_back(PatternSpec::book(n));
        patterns.push_back(PatternSpec::clique(n));
    }
    for (int m = 3 ; m <= 8 ; ++m) {
        patterns.push_back(PatternSpec::cycle(m));
        patterns.push_back(PatternSpec::wheel(m));
    }
    for (auto & p : patterns) {
        CAPTURE(to_string(p));
        auto g = realize(p);
        auto b = burr_parameters(p);
        CHECK(b.order == g.order());
        CHECK(b.chromatic_number == oracle::chromatic_number(g));
        CHECK(b.surplus == oracle::chromatic_surplus(g));
        CHECK(b.surplus >= 1);
    }
    for (int m : {3, 5, 7})
        CHECK(! oracle::colourings(realize(PatternSpec::wheel(m)), 3, [] (const std::vector<int> &) { return true; }));
    for (int m = 3 ; m <= 12 ; ++m)
        CHECK(! bipartiteness(realize(PatternSpec::cycle(m))).bipartite == (m % 2 == 1));
}

TEST_CASE("Burr lower bound")
{
    for (int n = 1 ; n <= 50 ; ++n)
        for (int m = 3 ; m <= 21 ; m += 2) {
            CHECK(burr_lower_bound(PatternSpec::k2n(n), PatternSpec::wheel(m)) == 3 * n + 4);
            CHECK(burr_lower_bound(PatternSpec::star(n), PatternSpec::wheel(m)) == 3 * n + 1);
            CHECK(burr_lower_bound(PatternSpec::k2n(n), PatternSpec::cycle(m)) == 2 * n + 3);
        }
    // even wheels are 3-chromatic: 3 * 2 + 1
    CHECK(burr_lower_bound(PatternSpec::k2n(2), PatternSpec::wheel(4)) == 7);
    // |V(star:1)| = 2 < sigma(cycle:10) = 5
    CHECK_THROWS_AS(burr_lower_bound(PatternSpec::star(1), PatternSpec::cycle(10)), HypothesisError);
}
