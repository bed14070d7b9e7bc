#pragma once

#include <ramsey_lab/graph.hh>
#include <ramsey_lab/verdict.hh>

#include <boost/rational.hpp>

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey_lab
{
    using Rational = boost::rational<long long>;

    namespace lemma_ids
    {
        inline constexpr std::string_view intersection = "intersection-lemma";
        inline constexpr std::string_view cycle_lemma_1 = "cycle-lemma-1";
        inline constexpr std::string_view star_cycle = "star-cycle";
        inline constexpr std::string_view delta_complement = "delta-complement";
        inline constexpr std::string_view min_degree = "min-degree-sqrt3";
        inline constexpr std::string_view dense_null = "dense-null";
        inline constexpr std::string_view nbd_nonbipartite = "nbd-nonbipartite";

        inline constexpr std::array<std::string_view, 7> all{
            intersection, cycle_lemma_1, star_cycle, delta_complement, min_degree, dense_null, nbd_nonbipartite};
    }

    enum class MomentMode
    {
        Bipartite,      // A and B disjoint, intersections counted inside B
        General         // A inside B = V(G), intersections over all of V(G)
    };

    struct MomentReport
    {
        int d = 0;
        int size_a = 0;
        int size_b = 0;
        Rational bound;                         // d^2/|B| - d/|A|, exact
        std::pair<int, int> best_pair{-1, -1};
        int best_intersection = 0;
        bool strict_bound_holds = false;        // best_intersection > bound
        // d|A| > |B|: the range in which the averaging argument over pairs actually
        // forces some pair above the bound.
        bool averaging_regime = false;
    };

    // Largest |N(x) & N(y) (& B)| over pairs x != y in A, against the first-moment bound.
    // Throws HypothesisError if |A| < 2 or some vertex of A has fewer than d neighbours in
    // B; ArgumentError if the sets do not fit the mode.
    auto max_common_neighborhood(const Graph & g, const VertexSet & a, const VertexSet & b, int d,
            MomentMode mode) -> MomentReport;

    auto check_intersection_lemma(const Graph & g, const VertexSet & a, const VertexSet & b, int d,
            MomentMode mode) -> LemmaVerdict;

    // Order must be 3n+4. Hypotheses: no K_{2,n} in g, no W_m in its complement.
    // Conclusion: max degree of the complement <= 2n+2.
    auto check_delta_complement_bound(const Graph & g, int n, int m) -> LemmaVerdict;

    // Order must be 3n+4. Hypothesis: no K_{2,n}. Conclusion: delta(g) < sqrt(3)(n+1),
    // decided as delta^2 < 3(n+1)^2.
    auto check_min_degree_bound(const Graph & g, int n) -> LemmaVerdict;

    struct DecompositionReport
    {
        std::optional<Rational> threshold_fraction;
        bool standard_fraction = true;             // fraction is 1/10 or 1/6
        VertexSet null_set;                     // P
        VertexSet dense_set;                    // Q = V - P
        VertexSet cut_set;                      // U
        std::vector<VertexSet> components;
        bool hypotheses_met = true;
        bool found = true;
    };

    // P = {x : deg(x) < |V| * fraction + 1}, Q its complement. Strict inequality, exact
    // rational arithmetic.
    auto dense_null_decomposition(const Graph & g, Rational fraction) -> DecompositionReport;

    inline constexpr int two_connected_order_cap = 20;

    // Least U (by size, then lexicographically) such that every component of g - U is
    // 2-connected. hypotheses_met records delta(g) >= |V|/k + k; the search runs either
    // way. Throws ArgumentError unless 2 <= k <= |V|, CapacityError above the order cap.
    auto two_connected_decomposition(const Graph & g, int k) -> DecompositionReport;

    // Verdict form: conclusion is |U| <= s-1 and s < k for the minimum U.
    auto check_star_cycle(const Graph & g, int k) -> LemmaVerdict;

    // Hypotheses: 2-connected, non-bipartite, delta >= r, |V| >= 2r+1. Conclusion:
    // ec >= 2r and oc >= 2r-1. Throws ArgumentError for r < 3, CapacityError above the
    // spectrum cap.
    auto check_cycle_lemma_1(const Graph & g, int r) -> LemmaVerdict;

    enum class NeighbourhoodRegime
    {
        Below,      // |H| < (3 - sqrt 3)(n+1)
        Lower,      // (3 - sqrt 3)(n+1) <= |H| <= 3(n+1)/2 - 1
        Gap,        // strictly between the two ranges (3(n+1) odd)
        Upper,      // 3(n+1)/2 <= |H| <= 2(n+1)
        Above       // |H| > 2(n+1)
    };

    auto regime_name(NeighbourhoodRegime r) -> std::string_view;
    auto classify_neighbourhood_size(int size, int n) -> NeighbourhoodRegime;

    // Size regime, dense/null split at the regime's fraction, bipartiteness of the dense
    // part and, when bipartite, its larger side against the 3(n+1)/4 + 4 cap.
    auto analyse_neighbourhood(const Graph & h_bar, int n) -> LemmaVerdict;

    // Order must be 3n+4 and g free of K_{2,n} (else HypothesisError). Takes the
    // maximum-degree vertex of the complement, its complement neighbourhood, and runs
    // analyse_neighbourhood on it.
    auto neighborhood_nonbipartite_scan(const Graph & g, int n) -> LemmaVerdict;

    // Order must be 3n+4. Hypotheses: no K_{2,n}, complement neighbourhood of the
    // max-degree complement vertex has at least (3 - sqrt 3)(n+1) vertices. Conclusion:
    // at most one null vertex at fraction 1/10, and also at 1/6 in the upper regime.
    auto check_dense_null(const Graph & g, int n) -> LemmaVerdict;

    struct IntersectionScan
    {
        long long instances = 0;
        long long violations = 0;
        long long averaging_regime_instances = 0;
        long long averaging_regime_violations = 0;
        std::optional<LemmaVerdict> first_violation;
    };

    // Every labelled bipartite graph between |A| = size_a and |B| = size_b and every d in
    // 1..min degree of A.
    auto scan_intersection_bipartite(int size_a, int size_b) -> IntersectionScan;

    // Every A in V(g) with |A| >= 2 and every d in 1..min degree over A, with B = V.
    auto scan_intersection_graph(const Graph & g) -> IntersectionScan;

    // Every graph on `order` vertices (up to isomorphism), every A with |A| >= 2, every d
    // in 1..min degree over A, with B = V.
    auto scan_intersection_general(int order, int jobs = 1) -> IntersectionScan;
}
