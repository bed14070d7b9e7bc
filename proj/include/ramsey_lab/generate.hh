#pragma once

#include <ramsey_lab/canonical.hh>
#include <ramsey_lab/graph.hh>

#include <functional>
#include <vector>

namespace ramsey_lab
{
    inline constexpr int default_order_guard = 12;

    // Filter applied to every augmentation before its canonicity test. It must be
    // hereditary: if it rejects a graph it must reject every graph containing it as an
    // induced subgraph, otherwise classes are silently lost. The second argument is the
    // target order of the run, so degree bounds like "can still reach delta >= d" fit.
    using KeepPredicate = std::function<bool (const Graph & candidate, int target_order)>;

    // Isomorph-free generation by canonical augmentation: a graph on k+1 vertices is
    // produced only from the class of the graph obtained by deleting its canonical
    // vertex, and siblings are deduplicated by canonical form. Memory stays proportional
    // to the depth; the subtrees below any fixed order are independent work units.
    class AugmentationTree
    {
        public:
            AugmentationTree(int target_order, KeepPredicate keep = {});

            auto target_order() const -> int { return _target; }

            // Canonical children of a canonical graph, sorted by form.
            auto children(const SmallRows & parent) const -> std::vector<SmallRows>;

            // Every kept class on exactly `order` vertices (order <= target), sorted. Uses
            // breadth-first expansion, so only for small orders.
            auto level(int order) const -> std::vector<SmallRows>;

            // Depth-first walk from `root` down to the target order. Returns the number of
            // target-order graphs handed to the consumer.
            auto expand(const SmallRows & root, const std::function<void (const SmallRows &)> & consumer) const -> long long;

            // Order of the work units used when splitting a run across workers.
            auto split_order() const -> int;

        private:
            auto keeps(const SmallRows & candidate) const -> bool;

            int _target;
            KeepPredicate _keep;
    };

    struct GenerationOptions
    {
        int jobs = 1;
        int order_guard = default_order_guard;
        KeepPredicate keep;
    };

    // One representative per isomorphism class on `order` vertices (restricted by the
    // keep predicate when given). With jobs > 1 the consumer runs concurrently from
    // several threads and must synchronise itself. Throws CapacityError above the guard.
    auto generate_nonisomorphic(int order, const GenerationOptions & options,
            const std::function<void (const Graph &)> & consumer) -> long long;

    // Runs work(i) for i in [0, count) on `jobs` threads.
    auto parallel_for(int count, int jobs, const std::function<void (int)> & work) -> void;
}
