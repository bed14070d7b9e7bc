#include <ramsey_lab/arrowing.hh>
#include <ramsey_lab/canonical.hh>
#include <ramsey_lab/constructions.hh>
#include <ramsey_lab/detectors.hh>
#include <ramsey_lab/errors.hh>
#include <ramsey_lab/graph6.hh>

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace ramsey_lab
{
    namespace
    {
        struct UnitResult
        {
            long long examined = 0;
            optional<SmallRows> witness;
        };

        // Append-only record of finished work units, one line each:
        //   unit <g> <h> <order> <unit count> <index> <examined> <witness graph6 or ->
        class Journal
        {
            public:
                Journal(const string & path, string key) :
                    _path(path),
                    _key(std::move(key))
                {
                    if (_path.empty())
                        return;
                    std::ifstream in{_path};
                    string line;
                    while (std::getline(in, line)) {
                        std::istringstream fields{line};
                        string tag, g, h, order, units, witness;
                        int index;
                        long long examined;
                        if (! (fields >> tag >> g >> h >> order >> units >> index >> examined >> witness) || tag != "unit")
                            continue;
                        if (g + " " + h + " " + order + " " + units != _key)
                            continue;
                        UnitResult r;
                        r.examined = examined;
                        if (witness != "-")
                            r.witness = to_small_rows(parse_graph6(witness));
                        _done[index] = r;
                    }
                }

                auto lookup(int index) const -> optional<UnitResult>
                {
                    auto i = _done.find(index);
                    if (i == _done.end())
                        return std::nullopt;
                    return i->second;
                }

                auto record(int index, const UnitResult & r) -> void
                {
                    if (_path.empty())
                        return;
                    std::lock_guard guard{_mutex};
                    std::ofstream out{_path, std::ios::app};
                    out << "unit " << _key << ' ' << index << ' ' << r.examined << ' '
                        << (r.witness ? write_graph6(to_graph(*r.witness)) : string{"-"}) << '\n';
                    if (! out)
                        throw Error{"cannot write journal " + _path};
                }

            private:
                string _path, _key;
                std::map<int, UnitResult> _done;
                std::mutex _mutex;
        };

        auto elapsed_ms(std::chrono::steady_clock::time_point since) -> double
        {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
        }

        // Least anchor count: number of v such that a copy lies inside {v, v+1, ...}.
        auto anchored_count(int order, const std::function<bool (const VertexSet &)> & has_copy_within) -> long long
        {
            VertexSet allowed = VertexSet::all(order);
            long long count = 0;
            for (int v = 0 ; v < order ; ++v) {
                if (! has_copy_within(allowed))
                    break;
                ++count;
                allowed.erase(v);
            }
            return count;
        }
    }

    auto is_lower_bound_witness(const Graph & candidate, const PatternSpec & g, const PatternSpec & h) -> bool
    {
        return ! contains_pattern(candidate, g) && ! contains_pattern(complement(candidate), h);
    }

    auto burr_construction(const PatternSpec & g, const PatternSpec & h) -> Graph
    {
        auto bg = burr_parameters(g);
        auto bh = burr_parameters(h);
        Graph result = bh.chromatic_number > 1 ? disjoint_cliques(bh.chromatic_number - 1, bg.order - 1) : Graph{0};
        if (bh.surplus > 1)
            result = disjoint_union(result, complete_graph(bh.surplus - 1));
        return result;
    }

    auto arrows(int order, const PatternSpec & g, const PatternSpec & h, const SearchConfig & config) -> ArrowingResult
    {
        if (order < 1)
            throw ArgumentError{"arrowing order must be at least 1"};
        if (order > config.order_guard)
            throw CapacityError{"exhaustive arrowing on " + std::to_string(order)
                + " vertices exceeds the order guard of " + std::to_string(config.order_guard)};

        // Both conditions are hereditary. At the target order only g is pruned; the
        // complement test is what the consumer counts as an examined graph.
        AugmentationTree tree{order, [&] (const Graph & c, int target) {
            if (contains_pattern(c, g))
                return false;
            return c.order() == target || ! contains_pattern(complement(c), h);
        }};

        auto roots = tree.level(tree.split_order());
        Journal journal{config.journal_path, to_string(g) + " " + to_string(h) + " " + std::to_string(order)
            + " " + std::to_string(roots.size())};

        vector<UnitResult> units(roots.size());
        parallel_for(int(roots.size()), config.jobs, [&] (int i) {
            if (auto done = journal.lookup(i)) {
                units[i] = *done;
                return;
            }
            UnitResult r;
            tree.expand(roots[i], [&] (const SmallRows & leaf) {
                ++r.examined;
                if (contains_pattern(complement(to_graph(leaf)), h))
                    return;
                if (! r.witness || leaf < *r.witness)
                    r.witness = leaf;
            });
            units[i] = r;
            journal.record(i, r);
        });

        ArrowingResult result;
        optional<SmallRows> best;
        for (auto & u : units) {
            result.graphs_examined += u.examined;
            if (u.witness && (! best || *u.witness < *best))
                best = u.witness;
        }
        result.arrows = ! best.has_value();
        if (best)
            result.witness = to_graph(*best);
        return result;
    }

    auto ramsey_number(const PatternSpec & g, const PatternSpec & h, const SearchConfig & config) -> RamseyRun
    {
        RamseyRun run;
        run.g = g;
        run.h = h;
        try {
            run.burr_bound = burr_lower_bound(g, h);
        }
        catch (const HypothesisError &) {
        }

        int start = 1;
        if (run.burr_bound && *run.burr_bound >= 2) {
            auto began = std::chrono::steady_clock::now();
            auto w = burr_construction(g, h);
            if (is_lower_bound_witness(w, g, h)) {
                OrderRecord rec;
                rec.order = w.order();
                rec.witness_graph6 = write_graph6(w);
                rec.source = "construction";
                rec.wall_time_ms = elapsed_ms(began);
                run.per_order.push_back(rec);
                run.lower_bound = int(*run.burr_bound);
                start = int(*run.burr_bound);
            }
        }

        for (int order = start ; ; ++order) {
            bool exhaustive = config.mode == SearchMode::Exhaustive;
            if (order > config.max_order || (exhaustive && order > config.order_guard)) {
                run.bounded = true;
                run.stop_reason = order > config.max_order ? "max order " + std::to_string(config.max_order) + " reached"
                    : "order guard " + std::to_string(config.order_guard) + " reached";
                break;
            }

            auto began = std::chrono::steady_clock::now();
            OrderRecord rec;
            rec.order = order;
            if (exhaustive) {
                auto r = arrows(order, g, h, config);
                rec.arrows = r.arrows;
                rec.graphs_examined = r.graphs_examined;
                if (r.witness)
                    rec.witness_graph6 = write_graph6(*r.witness);
                rec.source = "exhaustive";
            }
            else {
                auto w = stochastic_lower_bound_search(order, g, h, config);
                if (! w) {
                    run.bounded = true;
                    run.stop_reason = "local search found no witness on " + std::to_string(order) + " vertices";
                    break;
                }
                rec.witness_graph6 = write_graph6(*w);
                rec.source = "stochastic";
            }
            rec.wall_time_ms = elapsed_ms(began);
            run.per_order.push_back(rec);

            if (rec.arrows) {
                run.value = order;
                run.upper_bound = order;
                run.lower_bound = order;
                break;
            }
            run.lower_bound = order + 1;
        }

        bool arrowed = false;
        for (auto & rec : run.per_order) {
            if (arrowed && ! rec.arrows)
                throw Error{"arrowing is not monotone over the run"};
            arrowed = arrowed || rec.arrows;
        }
        return run;
    }

    auto verify_lower_bound_witness(int n, int m) -> LemmaVerdict
    {
        if (n < 1)
            throw ArgumentError{"n must be at least 1"};
        if (m < 3 || m % 2 == 0)
            throw ArgumentError{"the construction needs an odd wheel, m >= 3"};

        auto w = disjoint_cliques(3, n + 1);
        auto k2n = find_k2n(w, n);
        auto wheel = find_wheel(complement(w), m);

        LemmaVerdict v;
        v.lemma_id = "lower-bound-witness";
        v.hypotheses_met = true;
        v.conclusion_holds = ! k2n.found && ! wheel.found;
        v.diagnostics["n"] = n;
        v.diagnostics["m"] = m;
        v.diagnostics["order"] = w.order();
        v.diagnostics["graph6"] = write_graph6(w);
        v.diagnostics["k2n_free"] = ! k2n.found;
        v.diagnostics["complement_wheel_free"] = ! wheel.found;
        v.diagnostics["implied_lower_bound"] = 3 * n + 4;
        return v;
    }

    auto violation_count(const Graph & g, const PatternSpec & p) -> long long
    {
        int order = g.order();
        long long count = 0;
        switch (p.kind) {
            case PatternKind::Star:
                for (int v = 0 ; v < order ; ++v)
                    count += g.degree(v) >= p.parameter;
                return count;

            case PatternKind::K2n:
                for (int u = 0 ; u < order ; ++u)
                    for (int v = u + 1 ; v < order ; ++v)
                        count += g.common_neighbour_count(u, v) >= p.parameter;
                return count;

            case PatternKind::Book:
                for (auto [u, v] : g.edges())
                    count += g.common_neighbour_count(u, v) >= p.parameter;
                return count;

            case PatternKind::Wheel:
                for (int v = 0 ; v < order ; ++v)
                    count += g.degree(v) >= p.parameter && find_cycle_within(g, g.neighbours(v), p.parameter).has_value();
                return count;

            case PatternKind::Cycle:
                if (p.parameter > order)
                    return 0;
                return anchored_count(order, [&] (const VertexSet & allowed) {
                    return find_cycle_within(g, allowed, p.parameter).has_value();
                });

            case PatternKind::Clique:
                if (p.parameter == 1)
                    return order;
                for (int v = 0 ; v < order ; ++v)
                    count += g.degree(v) >= p.parameter - 1
                        && find_clique(induced(g, g.neighbours(v)), p.parameter - 1).found;
                return count;
        }
        return count;
    }

    auto stochastic_lower_bound_search(int order, const PatternSpec & g, const PatternSpec & h,
            const SearchConfig & config) -> optional<Graph>
    {
        if (order < 1)
            throw ArgumentError{"search order must be at least 1"};
        if (order > small_graph_cap)
            throw CapacityError{"local search is limited to 64 vertices"};
        if (config.stochastic.flips < 1 || config.stochastic.restarts < 1)
            throw ArgumentError{"local search needs a positive budget"};

        auto objective = [&] (const Graph & c) {
            return violation_count(c, g) + violation_count(complement(c), h);
        };

        constexpr double temperature = 0.6;
        int restarts = config.stochastic.restarts;
        vector<optional<Graph>> found(restarts);
        std::atomic<int> first_success{restarts};

        parallel_for(restarts, config.jobs, [&] (int r) {
            if (r > first_success)
                return;
            std::uint64_t seed = config.stochastic.seed;
            std::seed_seq sequence{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(r)};
            std::mt19937_64 rng{sequence};
            std::uniform_int_distribution<int> vertex{0, order - 1};
            std::uniform_real_distribution<double> unit{0.0, 1.0};

            GraphBuilder builder{order};
            for (int u = 0 ; u < order ; ++u)
                for (int v = u + 1 ; v < order ; ++v)
                    if (unit(rng) < 0.5)
                        builder.add_edge(u, v);

            long long current = objective(builder.build());
            for (long long step = 0 ; current > 0 && step < config.stochastic.flips ; ++step) {
                if (order < 2 || r > first_success)
                    return;
                int u = vertex(rng), v = vertex(rng);
                if (u == v)
                    continue;
                builder.toggle_edge(u, v);
                long long next = objective(builder.build());
                if (next <= current || unit(rng) < std::exp(double(current - next) / temperature))
                    current = next;
                else
                    builder.toggle_edge(u, v);
            }
            if (current == 0) {
                found[r] = builder.build();
                int seen = first_success;
                while (r < seen && ! first_success.compare_exchange_weak(seen, r))
                    ;
            }
        });

        for (auto & f : found)
            if (f)
                return f;
        return std::nullopt;
    }
}
