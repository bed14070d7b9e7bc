#pragma once

#include <ramsey_lab/generate.hh>
#include <ramsey_lab/graph.hh>
#include <ramsey_lab/patterns.hh>
#include <ramsey_lab/verdict.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey_lab
{
    enum class SearchMode
    {
        Exhaustive,
        Stochastic
    };

    struct StochasticBudget
    {
        long long flips = 20000;        // per restart
        int restarts = 8;
        std::uint64_t seed = 1;
    };

    struct SearchConfig
    {
        int max_order = default_order_guard;
        int order_guard = default_order_guard;
        int jobs = 1;
        SearchMode mode = SearchMode::Exhaustive;
        StochasticBudget stochastic;
        // Plain-text checkpoint of finished work units; empty for none.
        std::string journal_path;
    };

    struct ArrowingResult
    {
        bool arrows = false;
        // Canonical form of the least (by canonical rows) witness when arrows is false.
        std::optional<Graph> witness;
        // Graphs on exactly `order` vertices that survived g-freeness pruning and had
        // their complement tested for h.
        long long graphs_examined = 0;
    };

    // Does every graph on `order` vertices contain g or have h in its complement?
    // Exhaustive, isomorph-free, with branches pruned once g appears or h appears in the
    // complement. Throws CapacityError above the order guard.
    auto arrows(int order, const PatternSpec & g, const PatternSpec & h, const SearchConfig & config = {}) -> ArrowingResult;

    // Graph with no g and no h in the complement, or nullopt.
    auto is_lower_bound_witness(const Graph & candidate, const PatternSpec & g, const PatternSpec & h) -> bool;

    // (chi(h)-1) disjoint copies of K_{|V(g)|-1} plus K_{sigma(h)-1}: the standard graph
    // on burr_lower_bound - 1 vertices. It avoids g whenever g is connected.
    auto burr_construction(const PatternSpec & g, const PatternSpec & h) -> Graph;

    struct OrderRecord
    {
        int order = 0;
        bool arrows = false;
        std::optional<std::string> witness_graph6;
        long long graphs_examined = 0;
        std::string source;         // "construction", "exhaustive" or "stochastic"
        double wall_time_ms = 0;
    };

    struct RamseyRun
    {
        PatternSpec g, h;
        std::optional<long long> burr_bound;
        std::optional<int> value;
        bool bounded = false;
        int lower_bound = 1;                // R(g,h) >= lower_bound
        std::optional<int> upper_bound;     // R(g,h) <= upper_bound
        std::string stop_reason;
        std::vector<OrderRecord> per_order;
    };

    // Ascending arrows scan from the Burr bound (the order below it is settled by the
    // construction) until the first arrowing order, max_order, or the order guard. In
    // stochastic mode orders are only ever settled negatively, so the run is bounded.
    auto ramsey_number(const PatternSpec & g, const PatternSpec & h, const SearchConfig & config = {}) -> RamseyRun;

    // Builds 3 disjoint K_{n+1} and checks it has no K_{2,n} and its complement no W_m.
    // Throws ArgumentError unless n >= 1 and m >= 3 is odd.
    auto verify_lower_bound_witness(int n, int m) -> LemmaVerdict;

    // Sum of pattern violations: pairs/edges/vertices/hubs that carry a copy of p. Zero
    // exactly when g is p-free.
    auto violation_count(const Graph & g, const PatternSpec & p) -> long long;

    // Edge-flip local search for a graph on `order` vertices with no g and no h in the
    // complement. Deterministic for a given seed and independent of jobs.
    auto stochastic_lower_bound_search(int order, const PatternSpec & g, const PatternSpec & h,
            const SearchConfig & config = {}) -> std::optional<Graph>;
}
