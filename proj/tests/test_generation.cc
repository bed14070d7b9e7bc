#include <ramsey_lab/canonical.hh>
#include <ramsey_lab/constructions.hh>
#include <ramsey_lab/errors.hh>
#include <ramsey_lab/generate.hh>
#include <ramsey_lab/graph6.hh>

#include "oracles.hh"

#include <doctest.h>

#include <atomic>
#include <mutex>
#include <random>
#include <set>

using namespace ramsey_lab;

TEST_CASE("canonical forms are invariant under relabelling")
{
    std::mt19937_64 rng{43};
    for (int trial = 0 ; trial < 500 ; ++trial) {
        auto g = oracle::random_graph(rng, 1 + trial % 20, 0.1 + 0.002 * trial);
        auto form = canonical_form(g);
        CHECK(canonical_form(oracle::shuffled(rng, g)) == form);
        CHECK(canonical_form(form) == form);
    }
    // highly symmetric inputs exercise the automorphism pruning
    for (auto g : {petersen_graph(), complete_graph(12), disjoint_cliques(4, 3), cycle_graph(16),
             complement(disjoint_cliques(3, 5)), empty_graph(9)})
        CHECK(canonical_form(oracle::shuffled(rng, g)) == canonical_form(g));
}

TEST_CASE("canonical labelling maps the input onto the form")
{
    std::mt19937_64 rng{47};
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto g = oracle::random_graph(rng, 2 + trial % 15, 0.4);
        auto lab = canonical_labelling(to_small_rows(g));
        auto form = to_graph(lab.form);
        for (int i = 0 ; i < g.order() ; ++i)
            for (int j = 0 ; j < g.order() ; ++j)
                CHECK(form.adjacent(i, j) == g.adjacent(lab.vertex_at[i], lab.vertex_at[j]));
    }
}

TEST_CASE("canonical forms separate non-isomorphic graphs")
{
    // all 156 classes on six vertices, from the naive orbit oracle's representatives
    std::set<SmallRows> forms;
    for (std::uint32_t mask = 0 ; mask < (1u << 15) ; ++mask) {
        GraphBuilder b{6};
        int e = 0;
        for (int i = 0 ; i < 6 ; ++i)
            for (int j = i + 1 ; j < 6 ; ++j, ++e)
                if ((mask >> e) & 1)
                    b.add_edge(i, j);
        forms.insert(canonical_labelling(to_small_rows(std::move(b).build())).form);
    }
    CHECK(forms.size() == 156);
    CHECK(oracle::class_count(6) == 156);
}

TEST_CASE("class counts match the naive orbit oracle to order 7")
{
    for (int n = 1 ; n <= 7 ; ++n) {
        CAPTURE(n);
        long long generated = generate_nonisomorphic(n, {}, [] (const Graph &) {});
        CHECK(generated == oracle::class_count(n));
    }
}

TEST_CASE("class counts to order 9")
{
    const long long known[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
    for (int n = 0 ; n <= 9 ; ++n)
        CHECK(generate_nonisomorphic(n, {}, [] (const Graph &) {}) == known[n]);
}

TEST_CASE("each class is produced exactly once")
{
    std::set<SmallRows> seen;
    bool duplicate = false;
    generate_nonisomorphic(7, {}, [&] (const Graph & g) {
        duplicate = duplicate || ! seen.insert(canonical_labelling(to_small_rows(g)).form).second;
    });
    CHECK(! duplicate);
    CHECK(seen.size() == 1044);
}

TEST_CASE("hereditary filters and parallel runs")
{
    // triangle-free graphs on 8 vertices: 410 classes
    GenerationOptions options;
    options.keep = [] (const Graph & c, int) {
        for (int u = 0 ; u < c.order() ; ++u)
            for (int v = u + 1 ; v < c.order() ; ++v)
                if (c.adjacent(u, v) && c.common_neighbour_count(u, v) > 0)
                    return false;
        return true;
    };
    CHECK(generate_nonisomorphic(8, options, [] (const Graph &) {}) == 410);

    std::mutex lock;
    std::set<std::string> serial, parallel;
    generate_nonisomorphic(8, options, [&] (const Graph & g) { serial.insert(write_graph6(g)); });
    options.jobs = 4;
    generate_nonisomorphic(8, options, [&] (const Graph & g) {
        std::lock_guard guard{lock};
        parallel.insert(write_graph6(g));
    });
    CHECK(serial == parallel);
}

TEST_CASE("generation guard")
{
    CHECK_THROWS_AS(generate_nonisomorphic(13, {}, [] (const Graph &) {}), CapacityError);
    CHECK_THROWS_AS(generate_nonisomorphic(-1, {}, [] (const Graph &) {}), ArgumentError);

    std::atomic<int> calls{0};
    CHECK_THROWS_AS(parallel_for(10, 3, [&] (int i) {
        ++calls;
        if (i == 4)
            throw ArgumentError{"boom"};
    }), ArgumentError);
}
