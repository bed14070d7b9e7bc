#include <ramsey_lab/arrowing.hh>
#include <ramsey_lab/canonical.hh>
#include <ramsey_lab/constructions.hh>
#include <ramsey_lab/detectors.hh>
#include <ramsey_lab/errors.hh>
#include <ramsey_lab/graph6.hh>
#include <ramsey_lab/report.hh>

#include "oracles.hh"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

using namespace ramsey_lab;

namespace
{
    auto temp_path(const std::string & name) -> std::string
    {
        auto p = std::filesystem::temp_directory_path() / ("ramsey_lab_" + name + "_" + std::to_string(::getpid()));
        std::filesystem::remove(p);
        return p.string();
    }

    // No g in the graph and no h in its complement, checked with the backtracking oracle.
    auto oracle_witness(const Graph & w, const PatternSpec & g, const PatternSpec & h) -> bool
    {
        return ! oracle::contains_subgraph(w, realize(g)) && ! oracle::contains_subgraph(complement(w), realize(h));
    }
}

TEST_CASE("arrowing at small orders")
{
    auto k21 = PatternSpec::k2n(1), c4 = PatternSpec::k2n(2), w3 = PatternSpec::wheel(3);

    auto six = arrows(6, k21, w3);
    CHECK(! six.arrows);
    REQUIRE(six.witness);
    CHECK(write_graph6(*six.witness) == "E@Q?");
    CHECK(oracle_witness(*six.witness, k21, w3));
    CHECK(six.graphs_examined == 1);

    auto seven = arrows(7, k21, w3);
    CHECK(seven.arrows);
    CHECK(! seven.witness);

    auto nine = arrows(9, c4, w3);
    CHECK(! nine.arrows);
    REQUIRE(nine.witness);
    CHECK(oracle_witness(*nine.witness, c4, w3));
    CHECK(canonical_form(*nine.witness) == *nine.witness);
    CHECK(write_graph6(*nine.witness) == "H@QCHdK");
    CHECK(nine.graphs_examined == 12);
    // three disjoint triangles are a witness too, just not the least one
    CHECK(is_lower_bound_witness(disjoint_cliques(3, 3), c4, w3));

    auto ten = arrows(10, c4, w3);
    CHECK(ten.arrows);

    CHECK_THROWS_AS(arrows(13, c4, w3), CapacityError);
    SearchConfig raised;
    raised.order_guard = 4;
    CHECK_THROWS_AS(arrows(5, k21, w3, raised), CapacityError);
}

TEST_CASE("witness predicate agrees with the subgraph oracle")
{
    std::mt19937_64 rng{73};
    for (int trial = 0 ; trial < 300 ; ++trial) {
        auto g = oracle::random_graph(rng, 5 + trial % 5, 0.3);
        for (auto [a, b] : {std::pair{PatternSpec::k2n(1), PatternSpec::wheel(3)},
                 {PatternSpec::k2n(2), PatternSpec::wheel(5)}, {PatternSpec::star(2), PatternSpec::clique(3)}})
            CHECK(is_lower_bound_witness(g, a, b) == oracle_witness(g, a, b));
    }
}

TEST_CASE("Ramsey anchors")
{
    auto k21 = ramsey_number(PatternSpec::k2n(1), PatternSpec::wheel(3));
    CHECK(k21.value == 7);
    CHECK(! k21.bounded);
    CHECK(k21.burr_bound == 7);
    REQUIRE(k21.per_order.size() == 2);
    CHECK(k21.per_order[0].source == "construction");
    CHECK(k21.per_order[0].order == 6);
    CHECK(k21.per_order[1].arrows);

    auto c4 = ramsey_number(PatternSpec::k2n(2), PatternSpec::wheel(3));
    CHECK(c4.value == 10);
    CHECK(c4.lower_bound == 10);
    CHECK(c4.upper_bound == 10);

    CHECK(ramsey_number(PatternSpec::star(1), PatternSpec::clique(3)).value == 3);
    CHECK(ramsey_number(PatternSpec::star(2), PatternSpec::clique(3)).value == 5);
    CHECK(ramsey_number(PatternSpec::cycle(4), PatternSpec::clique(3)).value == 7);
    CHECK(ramsey_number(PatternSpec::clique(3), PatternSpec::clique(3)).value == 6);
}

TEST_CASE("runs past the guard are bounded, not decided")
{
    auto r = ramsey_number(PatternSpec::k2n(5), PatternSpec::wheel(5));
    CHECK(r.bounded);
    CHECK(! r.value);
    CHECK(r.lower_bound == 19);
    CHECK(! r.upper_bound);

    SearchConfig config;
    config.max_order = 8;
    auto capped = ramsey_number(PatternSpec::k2n(2), PatternSpec::wheel(3), config);
    CHECK(capped.bounded);
    CHECK(capped.stop_reason == "max order 8 reached");
}

TEST_CASE("Ramsey values sit at or above the Burr bound")
{
    for (auto [g, h] : {std::pair{PatternSpec::k2n(1), PatternSpec::wheel(3)},
             {PatternSpec::k2n(1), PatternSpec::wheel(5)}, {PatternSpec::k2n(2), PatternSpec::wheel(3)},
             {PatternSpec::star(3), PatternSpec::clique(3)}, {PatternSpec::book(1), PatternSpec::wheel(3)}}) {
        CAPTURE(to_string(g));
        CAPTURE(to_string(h));
        auto b = burr_construction(g, h);
        auto bound = burr_lower_bound(g, h);
        CHECK(b.order() == bound - 1);
        CHECK(oracle_witness(b, g, h));
        auto r = ramsey_number(g, h);
        REQUIRE(r.value);
        CHECK(*r.value >= bound);
    }
}

TEST_CASE("parallel runs match serial runs")
{
    SearchConfig serial, parallel;
    parallel.jobs = 4;
    for (auto [g, h] : {std::pair{PatternSpec::k2n(2), PatternSpec::wheel(3)},
             {PatternSpec::k2n(1), PatternSpec::wheel(5)}}) {
        auto a = scrub_timings(to_json(ramsey_number(g, h, serial)));
        auto b = scrub_timings(to_json(ramsey_number(g, h, parallel)));
        CHECK(a.dump() == b.dump());
    }
}

TEST_CASE("journal resumes finished work units")
{
    auto path = temp_path("journal");
    SearchConfig config;
    config.journal_path = path;
    auto first = arrows(9, PatternSpec::k2n(2), PatternSpec::wheel(3), config);
    REQUIRE(std::filesystem::exists(path));
    auto size = std::filesystem::file_size(path);
    CHECK(size > 0);

    // a second run reads every unit back and appends nothing
    auto second = arrows(9, PatternSpec::k2n(2), PatternSpec::wheel(3), config);
    CHECK(std::filesystem::file_size(path) == size);
    CHECK(second.arrows == first.arrows);
    CHECK(second.graphs_examined == first.graphs_examined);
    CHECK(second.witness == first.witness);

    // garbage lines are skipped
    {
        std::ofstream out{path, std::ios::app};
        out << "unit nonsense\nnot a record\n";
    }
    auto third = arrows(9, PatternSpec::k2n(2), PatternSpec::wheel(3), config);
    CHECK(third.witness == first.witness);
    std::filesystem::remove(path);
}

TEST_CASE("three disjoint cliques give the lower bound")
{
    for (int n = 1 ; n <= 8 ; ++n)
        for (int m : {3, 5, 7, 9}) {
            auto v = verify_lower_bound_witness(n, m);
            CHECK(v.conclusion_holds);
            CHECK(v.diagnostics["order"] == 3 * n + 3);
            if (n <= 3) {
                auto w = disjoint_cliques(3, n + 1);
                CHECK(oracle_witness(w, PatternSpec::k2n(n), PatternSpec::wheel(m)));
            }
        }
    CHECK_THROWS_AS(verify_lower_bound_witness(2, 4), ArgumentError);
    CHECK_THROWS_AS(verify_lower_bound_witness(2, 1), ArgumentError);
    CHECK_THROWS_AS(verify_lower_bound_witness(0, 5), ArgumentError);
}

TEST_CASE("violation counts vanish exactly on pattern-free graphs")
{
    std::mt19937_64 rng{79};
    for (int trial = 0 ; trial < 300 ; ++trial) {
        auto g = oracle::random_graph(rng, 4 + trial % 7, 0.35);
        for (auto p : {PatternSpec::k2n(1), PatternSpec::k2n(2), PatternSpec::wheel(3), PatternSpec::wheel(5),
                 PatternSpec::clique(3), PatternSpec::cycle(4)})
            CHECK((violation_count(g, p) == 0) == ! contains_pattern(g, p));
    }
}

TEST_CASE("local search")
{
    SearchConfig config;
    config.stochastic.seed = 5;
    auto w = stochastic_lower_bound_search(12, PatternSpec::k2n(3), PatternSpec::wheel(5), config);
    REQUIRE(w);
    CHECK(w->order() == 12);
    CHECK(is_lower_bound_witness(*w, PatternSpec::k2n(3), PatternSpec::wheel(5)));
    CHECK(stochastic_lower_bound_search(12, PatternSpec::k2n(3), PatternSpec::wheel(5), config) == w);
    config.jobs = 4;
    CHECK(stochastic_lower_bound_search(12, PatternSpec::k2n(3), PatternSpec::wheel(5), config) == w);

    SearchConfig small;
    small.stochastic.flips = 2000;
    small.stochastic.restarts = 2;
    CHECK(! stochastic_lower_bound_search(7, PatternSpec::k2n(1), PatternSpec::wheel(3), small));

    SearchConfig mode;
    mode.mode = SearchMode::Stochastic;
    mode.max_order = 14;
    mode.stochastic.flips = 3000;
    mode.stochastic.restarts = 2;
    auto run = ramsey_number(PatternSpec::k2n(1), PatternSpec::wheel(3), mode);
    CHECK(run.bounded);
    CHECK(! run.value);
    CHECK(run.lower_bound == 7);
}
