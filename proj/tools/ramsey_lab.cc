#include <ramsey_lab/arrowing.hh>
#include <ramsey_lab/constructions.hh>
#include <ramsey_lab/detectors.hh>
#include <ramsey_lab/errors.hh>
#include <ramsey_lab/generate.hh>
#include <ramsey_lab/graph6.hh>
#include <ramsey_lab/lemmas.hh>
#include <ramsey_lab/report.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>

using namespace ramsey_lab;
using std::string;
using std::vector;

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_counterexample = 1,
        exit_usage = 2,
        exit_capacity = 3
    };

    constexpr std::size_t verdict_limit = 1000;

    // FNV-1a over the command line minus any --seed, so the same flags give the same seed.
    auto flags_seed(const vector<string> & args) -> std::uint64_t
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::size_t i = 1 ; i < args.size() ; ++i) {
            // worker count never changes results, so it stays out of the seed
            if (args[i] == "--seed" || args[i] == "--jobs") {
                ++i;
                continue;
            }
            if (args[i].starts_with("--seed=") || args[i].starts_with("--jobs="))
                continue;
            for (unsigned char c : args[i] + '\0') {
                h ^= c;
                h *= 0x100000001b3ULL;
            }
        }
        return h;
    }

    auto default_jobs() -> int
    {
        if (auto env = std::getenv("RAMSEY_LAB_JOBS")) {
            try {
                int j = std::stoi(env);
                if (j >= 1)
                    return j;
            }
            catch (const std::exception &) {
            }
            std::cerr << "ignoring RAMSEY_LAB_JOBS=" << env << '\n';
        }
        return 1;
    }

    struct Options
    {
        vector<string> argv;
        std::uint64_t seed = 0;
        int jobs = 1;

        // construct
        string construction, pattern;
        int n = 2, m = 5;

        // analyze
        string input;

        // ramsey
        string g_spec, h_spec, mode = "exhaustive", journal;
        std::optional<int> expect;
        int max_order = default_order_guard, order_guard = default_order_guard;
        long long flips = StochasticBudget{}.flips;
        int restarts = StochasticBudget{}.restarts;

        // lemma
        string lemma_id, corpus;
        std::optional<int> exhaustive;
        vector<int> bipartite_sizes;
        std::optional<long long> random;
        std::optional<int> order;
        double density = 0.5;
        int r = 3, k = 2;
        bool all_verdicts = false;
    };

    auto emit(const Options & o, const string & kind, Json payload, std::chrono::steady_clock::time_point began) -> void
    {
        Envelope e;
        e.command = o.argv;
        e.seed = o.seed;
        e.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - began).count();
        e.payload_kind = kind;
        e.payload = std::move(payload);
        std::cout << to_json(e).dump(2) << '\n';
    }

    auto read_graphs(const string & path) -> vector<CorpusEntry>
    {
        vector<CorpusEntry> entries;
        if (path.empty() || path == "-")
            entries = read_graph6_corpus(std::cin);
        else {
            std::ifstream in{path};
            if (! in)
                throw ArgumentError{"cannot open " + path};
            entries = read_graph6_corpus(in);
        }
        if (entries.empty())
            throw ParseError{"no graphs in input", 0};
        return entries;
    }

    auto run_construct(const Options & o) -> int
    {
        Graph g{0};
        if (o.construction == "lower-bound-witness") {
            auto verdict = verify_lower_bound_witness(o.n, o.m);
            if (! verdict.conclusion_holds) {
                std::cerr << "witness failed verification: " << verdict.diagnostics.dump() << '\n';
                return exit_counterexample;
            }
            std::cerr << "3K_" << o.n + 1 << ": no K_{2," << o.n << "}, complement has no W_" << o.m
                << "; R(K_{2," << o.n << "}, W_" << o.m << ") >= " << 3 * o.n + 4 << '\n';
            g = disjoint_cliques(3, o.n + 1);
        }
        else if (o.construction == "pattern") {
            if (o.pattern.empty())
                throw ArgumentError{"construct pattern needs a pattern such as wheel:5"};
            g = realize(parse_pattern(o.pattern));
        }
        else if (o.construction == "tripartite") {
            if (o.n < 1)
                throw ArgumentError{"n must be at least 1"};
            int parts[] = {o.n + 1, o.n + 1, o.n + 1};
            g = complete_multipartite(parts);
        }
        else
            throw ArgumentError{"unknown construction '" + o.construction + "' (lower-bound-witness, pattern, tripartite)"};

        std::cout << write_graph6(g) << '\n';
        return exit_ok;
    }

    auto run_analyze(const Options & o) -> int
    {
        auto began = std::chrono::steady_clock::now();
        Json graphs = Json::array();
        for (auto & entry : read_graphs(o.input)) {
            auto summary = analysis_summary(entry.graph);
            summary["line"] = entry.line;
            graphs.push_back(summary);
        }
        emit(o, "analysis", Json{{"graphs", graphs}}, began);
        return exit_ok;
    }

    auto run_ramsey(const Options & o) -> int
    {
        auto began = std::chrono::steady_clock::now();
        SearchConfig config;
        config.max_order = o.max_order;
        config.order_guard = o.order_guard;
        config.jobs = o.jobs;
        config.journal_path = o.journal;
        config.stochastic = StochasticBudget{o.flips, o.restarts, o.seed};
        if (o.mode == "stochastic")
            config.mode = SearchMode::Stochastic;
        else if (o.mode != "exhaustive")
            throw ArgumentError{"mode must be exhaustive or stochastic"};
        if (o.order_guard > default_order_guard)
            std::cerr << "warning: order guard raised to " << o.order_guard << "; there are about 1.6e11 graphs on 12 vertices"
                " and the count grows by roughly 2^n per extra vertex, so unpruned searches past 12 are out of reach\n";

        auto g = parse_pattern(o.g_spec);
        auto h = parse_pattern(o.h_spec);
        auto run = ramsey_number(g, h, config);

        for (auto & rec : run.per_order)
            std::cerr << "  N=" << rec.order << "  " << (rec.arrows ? "arrows" : "witness " + rec.witness_graph6.value_or("?"))
                << "  [" << rec.source << ", " << rec.graphs_examined << " examined, " << rec.wall_time_ms << " ms]\n";

        auto payload = to_json(run);
        payload["config"] = Json{{"mode", o.mode}, {"max_order", o.max_order}, {"order_guard", o.order_guard},
            {"flips", o.flips}, {"restarts", o.restarts}};
        if (o.expect)
            payload["expect"] = *o.expect;
        emit(o, "ramsey_run", payload, began);

        if (run.bounded) {
            std::cerr << "bounded result: " << run.lower_bound << " <= R <= "
                << (run.upper_bound ? std::to_string(*run.upper_bound) : string{"?"}) << " (" << run.stop_reason << ")\n";
            return exit_capacity;
        }
        std::cerr << "R(" << o.g_spec << ", " << o.h_spec << ") = " << *run.value << '\n';
        if (o.expect && *o.expect != *run.value) {
            std::cerr << "expected " << *o.expect << '\n';
            return exit_counterexample;
        }
        return exit_ok;
    }

    struct LemmaTally
    {
        long long graphs = 0, hypotheses_met = 0, conclusion_held = 0, counterexamples = 0;
        vector<LemmaVerdict> verdicts;
        bool truncated = false;
        std::mutex lock;

        auto add(LemmaVerdict v, bool keep_all) -> void
        {
            std::lock_guard guard{lock};
            ++graphs;
            hypotheses_met += v.hypotheses_met;
            conclusion_held += v.hypotheses_met && v.conclusion_holds;
            counterexamples += v.counterexample();
            if (keep_all || v.counterexample()) {
                if (verdicts.size() < verdict_limit)
                    verdicts.push_back(std::move(v));
                else
                    truncated = true;
            }
        }
    };

    auto fixed_order(const string & id) -> bool
    {
        return id == lemma_ids::delta_complement || id == lemma_ids::min_degree || id == lemma_ids::dense_null
            || id == lemma_ids::nbd_nonbipartite;
    }

    auto evaluate(const Options & o, const Graph & g) -> LemmaVerdict
    {
        const string & id = o.lemma_id;
        LemmaVerdict v;
        if (id == lemma_ids::cycle_lemma_1)
            v = check_cycle_lemma_1(g, o.r);
        else if (id == lemma_ids::star_cycle)
            v = check_star_cycle(g, o.k);
        else if (id == lemma_ids::delta_complement)
            v = check_delta_complement_bound(g, o.n, o.m);
        else if (id == lemma_ids::min_degree)
            v = check_min_degree_bound(g, o.n);
        else if (id == lemma_ids::dense_null)
            v = check_dense_null(g, o.n);
        else {
            try {
                v = neighborhood_nonbipartite_scan(g, o.n);
            }
            catch (const HypothesisError & e) {
                v.lemma_id = id;
                v.asymptotic = true;
                v.diagnostics["hypothesis_failure"] = e.what();
            }
        }
        v.diagnostics["graph6"] = write_graph6(g);
        return v;
    }

    // Hereditary filters that drop only graphs failing the lemma's hypotheses (or, for
    // min-degree-sqrt3, graphs that cannot violate the conclusion).
    auto lemma_filter(const Options & o, int target, string & description) -> KeepPredicate
    {
        const string & id = o.lemma_id;
        auto k2n = PatternSpec::k2n(std::max(o.n, 1));
        if (id == lemma_ids::cycle_lemma_1) {
            description = "min degree can still reach r";
            int r = o.r;
            return [r] (const Graph & c, int t) { return c.min_degree() >= r - (t - c.order()); };
        }
        if (id == lemma_ids::star_cycle) {
            int need = (target + o.k * o.k + o.k - 1) / o.k;
            description = "min degree can still reach ceil(|V|/k + k) = " + std::to_string(need);
            return [need] (const Graph & c, int t) { return c.min_degree() >= need - (t - c.order()); };
        }
        if (id == lemma_ids::delta_complement) {
            description = "no K_{2,n}, complement has no W_m";
            auto wheel = PatternSpec::wheel(o.m);
            return [k2n, wheel] (const Graph & c, int) {
                return ! contains_pattern(c, k2n) && ! contains_pattern(complement(c), wheel);
            };
        }
        if (id == lemma_ids::min_degree) {
            int need = 0;
            while ((long long)(need) * need < 3LL * (o.n + 1) * (o.n + 1))
                ++need;
            description = "no K_{2,n}, min degree can still reach " + std::to_string(need);
            return [k2n, need] (const Graph & c, int t) {
                return c.min_degree() >= need - (t - c.order()) && ! contains_pattern(c, k2n);
            };
        }
        description = "no K_{2,n}";
        return [k2n] (const Graph & c, int) { return ! contains_pattern(c, k2n); };
    }

    auto intersection_payload(const IntersectionScan & scan, Json source) -> Json
    {
        Json summary{{"instances", scan.instances}, {"violations", scan.violations},
            {"averaging_regime_instances", scan.averaging_regime_instances},
            {"averaging_regime_violations", scan.averaging_regime_violations},
            {"counterexamples", scan.violations}};
        Json verdicts = Json::array();
        if (scan.first_violation)
            verdicts.push_back(to_json(*scan.first_violation));
        return Json{{"lemma_id", lemma_ids::intersection}, {"source", source}, {"summary", summary},
            {"verdicts", verdicts}, {"verdicts_truncated", scan.violations > 1}};
    }

    auto run_lemma(const Options & o) -> int
    {
        auto began = std::chrono::steady_clock::now();
        const string & id = o.lemma_id;
        if (std::find(lemma_ids::all.begin(), lemma_ids::all.end(), id) == lemma_ids::all.end()) {
            std::cerr << "unknown lemma id '" << id << "'; valid ids:";
            for (auto known : lemma_ids::all)
                std::cerr << ' ' << known;
            std::cerr << '\n';
            return exit_usage;
        }
        int sources = ! o.corpus.empty() + o.exhaustive.has_value() + ! o.bipartite_sizes.empty() + o.random.has_value();
        if (sources != 1)
            throw ArgumentError{"give exactly one of --corpus, --exhaustive, --exhaustive-bipartite, --random"};

        if (id == lemma_ids::intersection) {
            IntersectionScan scan;
            Json source;
            if (! o.bipartite_sizes.empty()) {
                scan = scan_intersection_bipartite(o.bipartite_sizes[0], o.bipartite_sizes[1]);
                source = Json{{"kind", "exhaustive-bipartite"}, {"size_a", o.bipartite_sizes[0]}, {"size_b", o.bipartite_sizes[1]}};
            }
            else if (o.exhaustive) {
                scan = scan_intersection_general(*o.exhaustive, o.jobs);
                source = Json{{"kind", "exhaustive"}, {"order", *o.exhaustive}};
            }
            else if (! o.corpus.empty()) {
                for (auto & entry : read_graphs(o.corpus)) {
                    auto part = scan_intersection_graph(entry.graph);
                    scan.instances += part.instances;
                    scan.violations += part.violations;
                    scan.averaging_regime_instances += part.averaging_regime_instances;
                    scan.averaging_regime_violations += part.averaging_regime_violations;
                    if (! scan.first_violation)
                        scan.first_violation = part.first_violation;
                }
                source = Json{{"kind", "corpus"}, {"path", o.corpus}};
            }
            else
                throw ArgumentError{"intersection-lemma takes --corpus, --exhaustive or --exhaustive-bipartite"};

            std::cerr << id << ": " << scan.instances << " instances, " << scan.violations << " violations ("
                << scan.averaging_regime_violations << " of " << scan.averaging_regime_instances
                << " with d|A| > |B|)\n";
            emit(o, "lemma_verdicts", intersection_payload(scan, source), began);
            return scan.violations ? exit_counterexample : exit_ok;
        }

        if (! o.bipartite_sizes.empty())
            throw ArgumentError{"--exhaustive-bipartite applies to intersection-lemma only"};

        LemmaTally tally;
        Json source;
        if (! o.corpus.empty()) {
            source = Json{{"kind", "corpus"}, {"path", o.corpus}};
            for (auto & entry : read_graphs(o.corpus))
                tally.add(evaluate(o, entry.graph), true);
        }
        else {
            int order = fixed_order(id) ? 3 * o.n + 4 : o.exhaustive ? *o.exhaustive : o.order.value_or(0);
            if (o.exhaustive && *o.exhaustive != order)
                throw ArgumentError{id + " runs on 3n+4 = " + std::to_string(order) + " vertices; --exhaustive "
                    + std::to_string(*o.exhaustive) + " does not match"};
            if (order < 1)
                throw ArgumentError{"--random needs --order for " + id};

            if (o.exhaustive) {
                string filter;
                GenerationOptions options;
                options.jobs = o.jobs;
                options.keep = lemma_filter(o, order, filter);
                long long generated = generate_nonisomorphic(order, options, [&] (const Graph & g) {
                    tally.add(evaluate(o, g), o.all_verdicts);
                });
                source = Json{{"kind", "exhaustive"}, {"order", order}, {"filter", filter}, {"generated", generated}};
            }
            else {
                std::mt19937_64 rng{o.seed};
                std::bernoulli_distribution edge{o.density};
                for (long long i = 0 ; i < *o.random ; ++i) {
                    GraphBuilder b{order};
                    for (int u = 0 ; u < order ; ++u)
                        for (int v = u + 1 ; v < order ; ++v)
                            if (edge(rng))
                                b.add_edge(u, v);
                    tally.add(evaluate(o, std::move(b).build()), o.all_verdicts);
                }
                source = Json{{"kind", "random"}, {"order", order}, {"count", *o.random}, {"density", o.density}};
            }
        }

        // worker threads deliver verdicts in arbitrary order
        std::stable_sort(tally.verdicts.begin(), tally.verdicts.end(), [] (const LemmaVerdict & a, const LemmaVerdict & b) {
            return a.diagnostics["graph6"].get<string>() < b.diagnostics["graph6"].get<string>();
        });

        Json verdicts = Json::array();
        for (auto & v : tally.verdicts)
            verdicts.push_back(to_json(v));
        Json parameters{{"n", o.n}, {"m", o.m}, {"r", o.r}, {"k", o.k}};
        Json summary{{"graphs", tally.graphs}, {"hypotheses_met", tally.hypotheses_met},
            {"conclusion_held", tally.conclusion_held}, {"counterexamples", tally.counterexamples}};
        std::cerr << id << ": " << tally.graphs << " graphs, " << tally.hypotheses_met << " meet the hypotheses, "
            << tally.counterexamples << " counterexamples\n";
        emit(o, "lemma_verdicts", Json{{"lemma_id", id}, {"source", source}, {"parameters", parameters},
            {"summary", summary}, {"verdicts", verdicts}, {"verdicts_truncated", tally.truncated}}, began);
        return tally.counterexamples ? exit_counterexample : exit_ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    Options o;
    o.argv.assign(argv, argv + argc);
    o.jobs = default_jobs();

    CLI::App app{"Ramsey numbers R(K_{2,n}, W_m): constructions, lemma checks and exhaustive arrowing search"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<std::uint64_t> seed;
    app.add_option("--seed", seed, "random seed (default: hash of the other flags)");
    app.add_option("--jobs", o.jobs, "worker threads (default: RAMSEY_LAB_JOBS or 1)")->check(CLI::PositiveNumber);

    auto construct = app.add_subcommand("construct", "print a construction as graph6");
    construct->add_option("construction", o.construction, "lower-bound-witness | pattern | tripartite")->required();
    construct->add_option("pattern", o.pattern, "pattern for `construct pattern`, e.g. wheel:5");
    construct->add_option("--n", o.n);
    construct->add_option("--m", o.m);

    auto analyze = app.add_subcommand("analyze", "structural summary of graph6 input");
    analyze->add_option("input", o.input, "graph6 file, one graph per line (default: stdin)");

    auto ramsey = app.add_subcommand("ramsey", "compute R(g, h) by exhaustive arrowing search");
    ramsey->set_help_flag("--help", "print this help and exit");
    ramsey->add_option("--g", o.g_spec, "pattern such as k2n:2")->required();
    ramsey->add_option("--h", o.h_spec, "pattern such as wheel:3")->required();
    ramsey->add_option("--expect", o.expect, "exit 1 unless the value equals this");
    ramsey->add_option("--max-order", o.max_order);
    ramsey->add_option("--order-guard", o.order_guard);
    ramsey->add_option("--mode", o.mode, "exhaustive | stochastic");
    ramsey->add_option("--flips", o.flips, "local search flips per restart");
    ramsey->add_option("--restarts", o.restarts);
    ramsey->add_option("--journal", o.journal, "checkpoint file; finished work units are skipped on rerun");

    auto lemma = app.add_subcommand("lemma", "check a lemma over a corpus or generated graphs");
    lemma->add_option("lemma-id", o.lemma_id)->required();
    lemma->add_option("--corpus", o.corpus, "graph6 file");
    lemma->add_option("--exhaustive", o.exhaustive, "every graph on exactly N vertices (hypothesis-filtered)");
    lemma->add_option("--exhaustive-bipartite", o.bipartite_sizes, "|A| |B|: every bipartite graph between them")->expected(2);
    lemma->add_option("--random", o.random, "number of random graphs");
    lemma->add_option("--order", o.order, "order of random graphs when not fixed by n");
    lemma->add_option("--density", o.density, "edge probability of random graphs");
    lemma->add_option("--n", o.n);
    lemma->add_option("--m", o.m);
    lemma->add_option("--r", o.r);
    lemma->add_option("--k", o.k);
    lemma->add_flag("--all-verdicts", o.all_verdicts, "report every verdict, not just counterexamples");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }
    o.seed = seed.value_or(flags_seed(o.argv));
    if (! construct->parsed())
        std::cerr << "seed " << o.seed << '\n';

    try {
        if (construct->parsed())
            return run_construct(o);
        if (analyze->parsed())
            return run_analyze(o);
        if (ramsey->parsed())
            return run_ramsey(o);
        return run_lemma(o);
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const CapacityError & e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return exit_capacity;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
