#include <ramsey_lab/constructions.hh>
#include <ramsey_lab/errors.hh>
#include <ramsey_lab/graph.hh>
#include <ramsey_lab/graph6.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace ramsey_lab;

namespace
{
    auto bowtie() -> Graph
    {
        return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    }

    auto cycle_is_closed_walk(const Graph & g, const std::vector<int> & c) -> bool
    {
        for (std::size_t i = 0 ; i < c.size() ; ++i)
            if (! g.adjacent(c[i], c[(i + 1) % c.size()]))
                return false;
        return true;
    }
}

TEST_CASE("vertex sets stay inside their order")
{
    auto s = VertexSet::all(70);
    CHECK(s.size() == 70);
    CHECK((s.words().back() >> (70 % 64)) == 0);
    s.erase(3);
    CHECK(! s.contains(3));
    CHECK(s.first() == 0);
    auto t = VertexSet::of(70, {69, 1, 5});
    CHECK(t.to_vector() == std::vector<int>{1, 5, 69});
    CHECK((s & t).size() == 3);
    CHECK((t - s).empty());
    CHECK(VertexSet{0}.empty());
}

TEST_CASE("graph invariants: no loops, symmetric rows, degree is a popcount")
{
    std::mt19937_64 rng{11};
    for (int trial = 0 ; trial < 50 ; ++trial) {
        auto g = oracle::random_graph(rng, 1 + trial % 70, 0.4);
        long long degree_sum = 0;
        for (int u = 0 ; u < g.order() ; ++u) {
            CHECK(! g.adjacent(u, u));
            int d = 0;
            for (int v = 0 ; v < g.order() ; ++v) {
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
                d += g.adjacent(u, v);
            }
            CHECK(g.degree(u) == d);
            degree_sum += d;
        }
        CHECK(degree_sum == 2 * g.edge_count());
    }
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), ArgumentError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ArgumentError);
    CHECK_THROWS_AS(Graph{max_graph_order + 1}, CapacityError);
}

TEST_CASE("complement")
{
    CHECK(complement(complete_graph(4)) == empty_graph(4));
    for (int n = 1 ; n <= 5 ; ++n) {
        int parts[] = {n + 1, n + 1, n + 1};
        CHECK(complement(disjoint_cliques(3, n + 1)) == complete_multipartite(parts));
    }
    CHECK(complement(complement(petersen_graph())) == petersen_graph());

    std::mt19937_64 rng{3};
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto g = oracle::random_graph(rng, trial % 80, 0.5);
        auto gc = complement(g);
        CHECK(complement(gc) == g);
        for (int v = 0 ; v < g.order() ; ++v)
            CHECK(g.degree(v) + gc.degree(v) == g.order() - 1);
    }
}

TEST_CASE("induced subgraphs relabel in ascending order")
{
    CHECK(induced(complete_graph(5), VertexSet::of(5, {0, 2, 4})) == complete_graph(3));
    CHECK(induced(cycle_graph(6), VertexSet::of(6, {0, 1, 2})) == path_graph(3));
    auto wheel = join(empty_graph(1), cycle_graph(5));
    CHECK(induced(wheel, wheel.neighbours(0)) == cycle_graph(5));
    CHECK_THROWS_AS(induced(wheel, VertexSet::all(5)), ArgumentError);
}

TEST_CASE("bipartiteness certificates")
{
    auto c6 = bipartiteness(cycle_graph(6));
    REQUIRE(c6.bipartite);
    CHECK(c6.side_a.to_vector() == std::vector<int>{0, 2, 4});
    CHECK(c6.side_b.to_vector() == std::vector<int>{1, 3, 5});

    auto c7 = bipartiteness(cycle_graph(7));
    REQUIRE(! c7.bipartite);
    CHECK(c7.odd_cycle.size() == 7);
    CHECK(cycle_is_closed_walk(cycle_graph(7), c7.odd_cycle));

    int parts[] = {2, 2, 2};
    auto octahedron = complete_multipartite(parts);
    auto k222 = bipartiteness(octahedron);
    REQUIRE(! k222.bipartite);
    CHECK(k222.odd_cycle.size() == 3);
    CHECK(cycle_is_closed_walk(octahedron, k222.odd_cycle));

    std::mt19937_64 rng{5};
    for (int trial = 0 ; trial < 500 ; ++trial) {
        auto g = oracle::random_graph(rng, 1 + trial % 30, trial % 2 ? 0.08 : 0.2);
        auto c = bipartiteness(g);
        CHECK(verify_certificate(g, c));
        if (! c.bipartite) {
            CHECK(c.odd_cycle.size() % 2 == 1);
            CHECK(cycle_is_closed_walk(g, c.odd_cycle));
        }
        // oracle: two-colourable iff chromatic number <= 2 (small orders only)
        if (g.order() <= 10)
            CHECK(c.bipartite == (oracle::chromatic_number(g) <= 2));
    }
}

TEST_CASE("connectivity")
{
    CHECK(connectivity(complete_graph(6)) == 5);
    CHECK(connectivity(cycle_graph(8)) == 2);
    CHECK(connectivity(bowtie()) == 1);
    CHECK(connectivity(petersen_graph()) == 3);
    CHECK(connectivity(empty_graph(4)) == 0);
    CHECK_THROWS_AS(connectivity(empty_graph(1)), DegenerateInputError);

    auto sep = minimum_separator(bowtie());
    CHECK(sep.vertices.to_vector() == std::vector<int>{2});

    std::mt19937_64 rng{7};
    for (int trial = 0 ; trial < 300 ; ++trial) {
        auto g = oracle::random_graph(rng, 2 + trial % 10, 0.3 + 0.05 * (trial % 10));
        int k = connectivity(g);
        CHECK(k == oracle::connectivity(g));
        if (g.edge_count() < (long long)(g.order()) * (g.order() - 1) / 2) {
            CHECK(k <= g.min_degree());
            auto s = minimum_separator(g);
            CHECK(s.vertices.size() == k);
            if (k > 0) {
                std::uint32_t removed = 0;
                for (int v : s.vertices.to_vector())
                    removed |= 1u << v;
                CHECK(! oracle::connected_after_removing(g, removed));
            }
        }
    }
}

TEST_CASE("biconnected components")
{
    auto petersen = biconnected_components(petersen_graph());
    CHECK(petersen.blocks.size() == 1);
    CHECK(petersen.blocks[0] == VertexSet::all(10));
    CHECK(petersen.articulation_points.empty());

    auto b = biconnected_components(bowtie());
    CHECK(b.blocks.size() == 2);
    CHECK(b.articulation_points.to_vector() == std::vector<int>{2});
    for (auto & block : b.blocks)
        CHECK(block.size() == 3);

    auto p4 = biconnected_components(path_graph(4));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.articulation_points.to_vector() == std::vector<int>{1, 2});

    std::mt19937_64 rng{13};
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto g = oracle::random_graph(rng, 3 + trial % 9, 0.35);
        auto d = biconnected_components(g);
        for (int v = 0 ; v < g.order() ; ++v) {
            bool cut = ! oracle::connected_after_removing(g, 1u << v)
                && oracle::connected_after_removing(g, 0);
            if (oracle::connected_after_removing(g, 0))
                CHECK(d.articulation_points.contains(v) == cut);
        }
        for (auto & block : d.blocks)
            if (block.size() >= 3)
                CHECK(oracle::two_connected(induced(g, block)));
        CHECK(is_two_connected(g) == oracle::two_connected(g));
    }
}

TEST_CASE("graph6 encoding")
{
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(write_graph6(empty_graph(1)) == "@");
    CHECK(write_graph6(complete_graph(4)) == "C~");
    CHECK(parse_graph6("?") == empty_graph(0));
    CHECK(parse_graph6("C~\n") == complete_graph(4));

    std::mt19937_64 rng{17};
    auto g10 = oracle::random_graph(rng, 10, 0.5);
    CHECK(parse_graph6(write_graph6(g10)) == g10);

    // long-form order prefix
    auto big = oracle::random_graph(rng, 70, 0.1);
    auto text = write_graph6(big);
    CHECK(text[0] == '~');
    CHECK(parse_graph6(text) == big);
}

TEST_CASE("graph6 round trip, exhaustive to order 6")
{
    for (int n = 0 ; n <= 6 ; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0 ; mask < (1u << pairs) ; ++mask) {
            GraphBuilder b{n};
            int e = 0;
            for (int v = 1 ; v < n ; ++v)
                for (int u = 0 ; u < v ; ++u, ++e)
                    if ((mask >> e) & 1)
                        b.add_edge(u, v);
            auto g = std::move(b).build();
            REQUIRE(parse_graph6(write_graph6(g)) == g);
        }
    }
}

TEST_CASE("graph6 round trip, random to order 62")
{
    std::mt19937_64 rng{19};
    std::uniform_int_distribution<int> order{7, 62};
    std::uniform_real_distribution<double> density{0.0, 1.0};
    for (int trial = 0 ; trial < 10000 ; ++trial) {
        auto g = oracle::random_graph(rng, order(rng), density(rng));
        REQUIRE(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("graph6 errors carry byte offsets")
{
    auto offset_of = [] (std::string_view text) -> long {
        try {
            parse_graph6(text);
        }
        catch (const ParseError & e) {
            return long(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("C") == 1);          // K4 needs one data byte
    CHECK(offset_of("C~~") == 2);        // trailing byte
    CHECK(offset_of("C!") == 1);         // below the printable range
    CHECK(offset_of("Bw") == -1);        // K3: three data bits, three zero padding bits
    CHECK(offset_of("BA") == 1);         // padding bit set
    CHECK(offset_of("B@") == 1);

    std::istringstream corpus{"# header\n\nC~\nC!\n"};
    try {
        read_graph6_corpus(corpus);
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.offset() == 14);     // line 4 starts at byte 13
    }
}
