#include <ramsey_lab/lemmas.hh>
#include <ramsey_lab/detectors.hh>
#include <ramsey_lab/errors.hh>
#include <ramsey_lab/generate.hh>
#include <ramsey_lab/graph6.hh>

#include <algorithm>
#include <bit>
#include <mutex>
#include <string>

using nlohmann::ordered_json;
using std::string;
using std::vector;

namespace ramsey_lab
{
    namespace
    {
        auto rational_text(const Rational & r) -> string
        {
            if (r.denominator() == 1)
                return std::to_string(r.numerator());
            return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
        }

        auto set_json(const VertexSet & s) -> ordered_json
        {
            return s.to_vector();
        }

        auto require_order(const Graph & g, int n) -> void
        {
            if (n < 1)
                throw ArgumentError{"n must be at least 1"};
            if (g.order() != 3 * n + 4)
                throw ArgumentError{"graph has " + std::to_string(g.order()) + " vertices, expected 3n+4 = "
                    + std::to_string(3 * n + 4)};
        }

        // Vertex of maximum degree in the complement, least index on ties.
        auto complement_hub(const Graph & complement_graph) -> int
        {
            int best = 0;
            for (int v = 1 ; v < complement_graph.order() ; ++v)
                if (complement_graph.degree(v) > complement_graph.degree(best))
                    best = v;
            return best;
        }

        auto next_combination(vector<int> & c, int n) -> bool
        {
            int k = int(c.size());
            int i = k - 1;
            while (i >= 0 && c[i] == n - k + i)
                --i;
            if (i < 0)
                return false;
            ++c[i];
            for (int j = i + 1 ; j < k ; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }

        // best > d^2/|B| - d/|A|, multiplied through by |A||B| > 0.
        auto beats_bound(long long best, long long d, long long size_a, long long size_b) -> bool
        {
            return best * size_a * size_b > d * d * size_a - d * size_b;
        }
    }

    auto max_common_neighborhood(const Graph & g, const VertexSet & a, const VertexSet & b, int d,
            MomentMode mode) -> MomentReport
    {
        if (a.order() != g.order() || b.order() != g.order())
            throw ArgumentError{"vertex sets do not match the graph order"};
        if (d < 0)
            throw ArgumentError{"d must be non-negative"};
        if (mode == MomentMode::Bipartite && ! (a & b).empty())
            throw ArgumentError{"bipartite mode needs disjoint A and B"};
        if (mode == MomentMode::General && (b != VertexSet::all(g.order()) || ! a.is_subset_of(b)))
            throw ArgumentError{"general mode needs B = V(G)"};
        if (a.size() < 2)
            throw HypothesisError{"A needs at least two vertices"};
        if (b.empty())
            throw HypothesisError{"B is empty"};

        auto av = a.to_vector();
        for (int x : av)
            if ((g.neighbours(x) & b).size() < d)
                throw HypothesisError{"vertex " + std::to_string(x) + " has fewer than d neighbours in B"};

        MomentReport report;
        report.d = d;
        report.size_a = a.size();
        report.size_b = b.size();
        report.bound = Rational(d * d, report.size_b) - Rational(d, report.size_a);
        report.best_intersection = -1;
        for (std::size_t i = 0 ; i < av.size() ; ++i) {
            auto nx = g.neighbours(av[i]) & b;
            for (std::size_t j = i + 1 ; j < av.size() ; ++j) {
                int common = (nx & g.neighbours(av[j])).size();
                if (common > report.best_intersection) {
                    report.best_intersection = common;
                    report.best_pair = {av[i], av[j]};
                }
            }
        }
        report.strict_bound_holds = Rational(report.best_intersection) > report.bound;
        report.averaging_regime = (long long)(d) * report.size_a > report.size_b;
        return report;
    }

    auto check_intersection_lemma(const Graph & g, const VertexSet & a, const VertexSet & b, int d,
            MomentMode mode) -> LemmaVerdict
    {
        LemmaVerdict v;
        v.lemma_id = lemma_ids::intersection;
        v.diagnostics["mode"] = mode == MomentMode::Bipartite ? "bipartite" : "general";
        v.diagnostics["graph6"] = write_graph6(g);
        v.diagnostics["A"] = set_json(a);
        v.diagnostics["B"] = set_json(b);
        v.diagnostics["d"] = d;
        try {
            auto r = max_common_neighborhood(g, a, b, d, mode);
            v.hypotheses_met = true;
            v.conclusion_holds = r.strict_bound_holds;
            v.diagnostics["bound"] = rational_text(r.bound);
            v.diagnostics["best_pair"] = {r.best_pair.first, r.best_pair.second};
            v.diagnostics["best_intersection"] = r.best_intersection;
            v.diagnostics["averaging_regime"] = r.averaging_regime;
        }
        catch (const HypothesisError & e) {
            v.diagnostics["hypothesis_failure"] = e.what();
        }
        return v;
    }

    auto check_delta_complement_bound(const Graph & g, int n, int m) -> LemmaVerdict
    {
        require_order(g, n);
        if (m < 3)
            throw ArgumentError{"m must be at least 3"};

        LemmaVerdict v;
        v.lemma_id = lemma_ids::delta_complement;
        v.asymptotic = true;
        auto k2n = find_k2n(g, n);
        auto gc = complement(g);
        auto wheel = find_wheel(gc, m);
        v.hypotheses_met = ! k2n.found && ! wheel.found;
        int delta = gc.max_degree();
        v.conclusion_holds = delta <= 2 * n + 2;

        v.diagnostics["n"] = n;
        v.diagnostics["m"] = m;
        v.diagnostics["k2n_free"] = ! k2n.found;
        if (k2n.found)
            v.diagnostics["k2n_pair"] = k2n.pair;
        v.diagnostics["complement_wheel_free"] = ! wheel.found;
        if (wheel.found) {
            v.diagnostics["wheel_hub"] = *wheel.hub;
            v.diagnostics["wheel_rim"] = wheel.vertices;
        }
        v.diagnostics["complement_max_degree"] = delta;
        v.diagnostics["bound"] = 2 * n + 2;
        v.diagnostics["asymptotic_requirement"] = "n >= 2m+499 and n >= 3493";
        return v;
    }

    auto check_min_degree_bound(const Graph & g, int n) -> LemmaVerdict
    {
        require_order(g, n);
        LemmaVerdict v;
        v.lemma_id = lemma_ids::min_degree;
        auto k2n = find_k2n(g, n);
        v.hypotheses_met = ! k2n.found;
        long long delta = g.min_degree();
        long long limit_sq = 3LL * (n + 1) * (n + 1);
        v.conclusion_holds = delta * delta < limit_sq;
        v.diagnostics["n"] = n;
        v.diagnostics["k2n_free"] = ! k2n.found;
        v.diagnostics["min_degree"] = delta;
        v.diagnostics["min_degree_squared"] = delta * delta;
        v.diagnostics["three_times_n_plus_1_squared"] = limit_sq;
        return v;
    }

    auto dense_null_decomposition(const Graph & g, Rational fraction) -> DecompositionReport
    {
        if (fraction < 0)
            throw ArgumentError{"threshold fraction must be non-negative"};
        DecompositionReport r;
        r.threshold_fraction = fraction;
        r.standard_fraction = fraction == Rational(1, 10) || fraction == Rational(1, 6);
        r.null_set = VertexSet{g.order()};
        r.dense_set = VertexSet{g.order()};
        r.cut_set = VertexSet{g.order()};
        // deg < |V| p/q + 1  <=>  (deg - 1) q < |V| p
        long long p = fraction.numerator(), q = fraction.denominator();
        for (int x = 0 ; x < g.order() ; ++x) {
            if ((g.degree(x) - 1LL) * q < g.order() * p)
                r.null_set.insert(x);
            else
                r.dense_set.insert(x);
        }
        return r;
    }

    auto two_connected_decomposition(const Graph & g, int k) -> DecompositionReport
    {
        int order = g.order();
        if (k < 2 || k > order)
            throw ArgumentError{"k must satisfy 2 <= k <= |V|"};
        if (order > two_connected_order_cap)
            throw CapacityError{"minimum cut search is limited to " + std::to_string(two_connected_order_cap) + " vertices"};

        DecompositionReport r;
        r.null_set = VertexSet{order};
        r.dense_set = VertexSet{order};
        r.cut_set = VertexSet{order};
        r.hypotheses_met = (long long)(g.min_degree()) * k >= order + (long long)(k) * k;
        r.found = false;

        for (int t = 0 ; t <= order - 3 && ! r.found ; ++t) {
            vector<int> pick(t);
            for (int i = 0 ; i < t ; ++i)
                pick[i] = i;
            do {
                auto cut = VertexSet::of(order, pick);
                auto rest = VertexSet::all(order) - cut;
                auto parts = connected_components(g, rest);
                bool ok = std::all_of(parts.begin(), parts.end(), [&] (const VertexSet & c) {
                    return c.size() >= 3 && is_two_connected(induced(g, c));
                });
                if (ok) {
                    r.found = true;
                    r.cut_set = cut;
                    r.components = std::move(parts);
                    break;
                }
            } while (next_combination(pick, order));
        }
        return r;
    }

    auto check_star_cycle(const Graph & g, int k) -> LemmaVerdict
    {
        auto r = two_connected_decomposition(g, k);
        LemmaVerdict v;
        v.lemma_id = lemma_ids::star_cycle;
        v.hypotheses_met = r.hypotheses_met;
        int s = int(r.components.size());
        v.conclusion_holds = r.found && r.cut_set.size() <= s - 1 && s < k;
        v.diagnostics["k"] = k;
        v.diagnostics["min_degree"] = g.min_degree();
        v.diagnostics["found"] = r.found;
        v.diagnostics["U"] = set_json(r.cut_set);
        v.diagnostics["s"] = s;
        ordered_json parts = ordered_json::array();
        for (auto & c : r.components)
            parts.push_back(set_json(c));
        v.diagnostics["components"] = parts;
        return v;
    }

    auto check_cycle_lemma_1(const Graph & g, int r) -> LemmaVerdict
    {
        if (r < 3)
            throw ArgumentError{"r must be at least 3"};
        if (g.order() > default_spectrum_cap)
            throw CapacityError{"cycle spectrum is limited to " + std::to_string(default_spectrum_cap) + " vertices"};

        LemmaVerdict v;
        v.lemma_id = lemma_ids::cycle_lemma_1;
        v.diagnostics["r"] = r;
        bool big_enough = g.order() >= 2 * r + 1;
        bool min_degree = g.min_degree() >= r;
        bool non_bipartite = big_enough && min_degree && ! bipartiteness(g).bipartite;
        bool two_connected = non_bipartite && is_two_connected(g);
        v.hypotheses_met = big_enough && min_degree && non_bipartite && two_connected;
        v.diagnostics["order_at_least_2r_plus_1"] = big_enough;
        v.diagnostics["min_degree_at_least_r"] = min_degree;
        if (! v.hypotheses_met)
            return v;

        auto spectrum = cycle_spectrum(g);
        v.conclusion_holds = spectrum.even_circumference >= 2 * r && spectrum.odd_circumference >= 2 * r - 1;
        v.diagnostics["even_circumference"] = spectrum.even_circumference;
        v.diagnostics["odd_circumference"] = spectrum.odd_circumference;
        v.diagnostics["lengths"] = spectrum.lengths;
        return v;
    }

    auto regime_name(NeighbourhoodRegime r) -> std::string_view
    {
        switch (r) {
            case NeighbourhoodRegime::Below: return "below";
            case NeighbourhoodRegime::Lower: return "lower";
            case NeighbourhoodRegime::Gap: return "gap";
            case NeighbourhoodRegime::Upper: return "upper";
            case NeighbourhoodRegime::Above: return "above";
        }
        return "unknown";
    }

    auto classify_neighbourhood_size(int size, int n) -> NeighbourhoodRegime
    {
        long long h = size, t = n + 1;
        // h >= (3 - sqrt 3) t  <=>  3t - h <= sqrt(3) t
        long long slack = 3 * t - h;
        bool reaches_lower = slack <= 0 || slack * slack <= 3 * t * t;
        if (! reaches_lower)
            return NeighbourhoodRegime::Below;
        if (h > 2 * t)
            return NeighbourhoodRegime::Above;
        if (2 * h >= 3 * t)
            return NeighbourhoodRegime::Upper;
        if (2 * h <= 3 * t - 2)
            return NeighbourhoodRegime::Lower;
        return NeighbourhoodRegime::Gap;
    }

    auto analyse_neighbourhood(const Graph & h_bar, int n) -> LemmaVerdict
    {
        if (n < 1)
            throw ArgumentError{"n must be at least 1"};
        LemmaVerdict v;
        v.lemma_id = lemma_ids::nbd_nonbipartite;
        v.asymptotic = true;

        auto regime = classify_neighbourhood_size(h_bar.order(), n);
        v.diagnostics["n"] = n;
        v.diagnostics["neighbourhood_order"] = h_bar.order();
        v.diagnostics["regime"] = regime_name(regime);
        v.hypotheses_met = regime == NeighbourhoodRegime::Lower || regime == NeighbourhoodRegime::Upper;

        auto whole = bipartiteness(h_bar);
        v.diagnostics["neighbourhood_bipartite"] = whole.bipartite;

        Rational fraction = regime == NeighbourhoodRegime::Lower ? Rational(1, 10) : Rational(1, 6);
        auto split = dense_null_decomposition(h_bar, fraction);
        auto dense = bipartiteness(induced(h_bar, split.dense_set));
        v.diagnostics["fraction"] = rational_text(fraction);
        v.diagnostics["P"] = set_json(split.null_set);
        v.diagnostics["Q"] = set_json(split.dense_set);
        v.diagnostics["dense_part_bipartite"] = dense.bipartite;
        if (! dense.bipartite) {
            // odd cycle in Q's own labels, mapped back to H-bar vertices
            auto q = split.dense_set.to_vector();
            vector<int> cycle;
            for (int x : dense.odd_cycle)
                cycle.push_back(q[x]);
            v.diagnostics["dense_part_odd_cycle"] = cycle;
        }

        // Larger side of whichever bipartition exists, against 3(n+1)/4 + 4.
        const BipartitenessCertificate * sides = whole.bipartite ? &whole : dense.bipartite ? &dense : nullptr;
        if (sides) {
            int larger = std::max(sides->side_a.size(), sides->side_b.size());
            v.diagnostics["larger_side"] = larger;
            v.diagnostics["side_cap"] = rational_text(Rational(3 * (n + 1), 4) + 4);
            v.diagnostics["side_cap_exceeded"] = 4LL * larger > 3LL * (n + 1) + 16;
        }

        v.conclusion_holds = ! dense.bipartite;
        if (! v.hypotheses_met)
            v.diagnostics["note"] = "neighbourhood size outside both regimes; no assertion";
        return v;
    }

    auto neighborhood_nonbipartite_scan(const Graph & g, int n) -> LemmaVerdict
    {
        require_order(g, n);
        auto k2n = find_k2n(g, n);
        if (k2n.found)
            throw HypothesisError{"graph contains K_{2," + std::to_string(n) + "}"};

        auto gc = complement(g);
        int hub = complement_hub(gc);
        auto nbhd = gc.neighbours(hub);
        auto v = analyse_neighbourhood(induced(gc, nbhd), n);
        v.diagnostics["hub"] = hub;
        v.diagnostics["hub_complement_degree"] = gc.degree(hub);
        v.diagnostics["neighbourhood"] = set_json(nbhd);
        return v;
    }

    auto check_dense_null(const Graph & g, int n) -> LemmaVerdict
    {
        require_order(g, n);
        LemmaVerdict v;
        v.lemma_id = lemma_ids::dense_null;
        v.asymptotic = true;

        auto gc = complement(g);
        int hub = complement_hub(gc);
        auto h_bar = induced(gc, gc.neighbours(hub));
        auto regime = classify_neighbourhood_size(h_bar.order(), n);
        bool k2n_free = ! find_k2n(g, n).found;
        v.hypotheses_met = k2n_free && regime != NeighbourhoodRegime::Below;
        v.diagnostics["n"] = n;
        v.diagnostics["k2n_free"] = k2n_free;
        v.diagnostics["hub"] = hub;
        v.diagnostics["neighbourhood_order"] = h_bar.order();
        v.diagnostics["regime"] = regime_name(regime);

        auto tenth = dense_null_decomposition(h_bar, Rational(1, 10));
        v.diagnostics["P_tenth"] = set_json(tenth.null_set);
        v.conclusion_holds = tenth.null_set.size() <= 1;
        if (regime == NeighbourhoodRegime::Upper) {
            auto sixth = dense_null_decomposition(h_bar, Rational(1, 6));
            v.diagnostics["P_sixth"] = set_json(sixth.null_set);
            v.conclusion_holds = v.conclusion_holds && sixth.null_set.size() <= 1;
        }
        return v;
    }

    auto scan_intersection_bipartite(int size_a, int size_b) -> IntersectionScan
    {
        if (size_a < 2 || size_b < 1 || size_a * size_b > 30)
            throw ArgumentError{"bipartite scan needs |A| >= 2, |B| >= 1 and |A||B| <= 30"};

        IntersectionScan scan;
        Word b_mask = (Word{1} << size_b) - 1;
        std::array<Word, 32> rows{};
        for (Word edges = 0 ; edges < (Word{1} << (size_a * size_b)) ; ++edges) {
            int min_degree = size_b;
            for (int x = 0 ; x < size_a ; ++x) {
                rows[x] = (edges >> (x * size_b)) & b_mask;
                min_degree = std::min(min_degree, std::popcount(rows[x]));
            }
            if (min_degree < 1)
                continue;
            int best = 0;
            for (int x = 0 ; x < size_a ; ++x)
                for (int y = x + 1 ; y < size_a ; ++y)
                    best = std::max(best, std::popcount(rows[x] & rows[y]));

            for (int d = 1 ; d <= min_degree ; ++d) {
                ++scan.instances;
                bool regime = d * size_a > size_b;
                scan.averaging_regime_instances += regime;
                if (beats_bound(best, d, size_a, size_b))
                    continue;
                ++scan.violations;
                scan.averaging_regime_violations += regime;
                if (! scan.first_violation) {
                    GraphBuilder builder{size_a + size_b};
                    for (int x = 0 ; x < size_a ; ++x)
                        for (int y = 0 ; y < size_b ; ++y)
                            if ((rows[x] >> y) & 1)
                                builder.add_edge(x, size_a + y);
                    auto g = std::move(builder).build();
                    VertexSet a{g.order()}, b{g.order()};
                    for (int x = 0 ; x < size_a ; ++x)
                        a.insert(x);
                    for (int y = 0 ; y < size_b ; ++y)
                        b.insert(size_a + y);
                    scan.first_violation = check_intersection_lemma(g, a, b, d, MomentMode::Bipartite);
                }
            }
        }
        return scan;
    }

    auto scan_intersection_graph(const Graph & g) -> IntersectionScan
    {
        int order = g.order();
        if (order > 20)
            throw CapacityError{"per-graph intersection scan is limited to 20 vertices"};

        IntersectionScan scan;
        std::array<Word, small_graph_cap> rows{};
        for (int v = 0 ; v < order ; ++v)
            rows[v] = g.small_row(v);
        for (Word subset = 0 ; subset < (Word{1} << order) ; ++subset) {
            int size_a = std::popcount(subset);
            if (size_a < 2)
                continue;
            int min_degree = order, best = 0;
            for (Word s = subset ; s ; s &= s - 1) {
                int x = std::countr_zero(s);
                min_degree = std::min(min_degree, std::popcount(rows[x]));
                for (Word t = s & (s - 1) ; t ; t &= t - 1)
                    best = std::max(best, std::popcount(rows[x] & rows[std::countr_zero(t)]));
            }
            for (int d = 1 ; d <= min_degree ; ++d) {
                ++scan.instances;
                bool regime = d * size_a > order;
                scan.averaging_regime_instances += regime;
                if (beats_bound(best, d, size_a, order))
                    continue;
                ++scan.violations;
                scan.averaging_regime_violations += regime;
                if (! scan.first_violation) {
                    VertexSet a{order};
                    for (Word s = subset ; s ; s &= s - 1)
                        a.insert(std::countr_zero(s));
                    scan.first_violation = check_intersection_lemma(g, a, VertexSet::all(order), d, MomentMode::General);
                }
            }
        }
        return scan;
    }

    auto scan_intersection_general(int order, int jobs) -> IntersectionScan
    {
        if (order < 2 || order > 9)
            throw ArgumentError{"general scan needs 2 <= order <= 9"};

        vector<Graph> graphs;
        std::mutex lock;
        GenerationOptions options;
        options.jobs = jobs;
        generate_nonisomorphic(order, options, [&] (const Graph & g) {
            std::lock_guard guard{lock};
            graphs.push_back(g);
        });
        // consumer order under threads is arbitrary; sort for a reproducible first violation
        std::sort(graphs.begin(), graphs.end(), [] (const Graph & x, const Graph & y) {
            return to_small_rows(x) < to_small_rows(y);
        });

        IntersectionScan scan;
        for (auto & g : graphs) {
            auto part = scan_intersection_graph(g);
            scan.instances += part.instances;
            scan.violations += part.violations;
            scan.averaging_regime_instances += part.averaging_regime_instances;
            scan.averaging_regime_violations += part.averaging_regime_violations;
            if (! scan.first_violation)
                scan.first_violation = part.first_violation;
        }
        return scan;
    }
}
