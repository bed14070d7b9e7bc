#include <ramsey_lab/generate.hh>
#include <ramsey_lab/errors.hh>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

using std::vector;

namespace ramsey_lab
{
    namespace
    {
        // Remove vertex `gone`, shifting higher vertices down by one.
        auto delete_vertex(const SmallRows & g, int gone) -> SmallRows
        {
            Word low = (Word{1} << gone) - 1;
            SmallRows result;
            result.order = g.order - 1;
            int k = 0;
            for (int v = 0 ; v < g.order ; ++v) {
                if (v == gone)
                    continue;
                Word r = g.rows[v];
                result.rows[k++] = (r & low) | ((r >> 1) & ~low);
            }
            return result;
        }

        // Cheap isomorphism invariant used to narrow the choice of canonical deletion
        // vertex before any labelling is computed.
        auto vertex_invariants(const SmallRows & g, std::array<long, small_graph_cap> & f) -> void
        {
            std::array<int, small_graph_cap> degree{};
            for (int v = 0 ; v < g.order ; ++v)
                degree[v] = std::popcount(g.rows[v]);
            for (int v = 0 ; v < g.order ; ++v) {
                long around = 0;
                for (Word b = g.rows[v] ; b ; b &= b - 1)
                    around += degree[std::countr_zero(b)];
                f[v] = (long(degree[v]) << 20) | around;
            }
        }
    }

    AugmentationTree::AugmentationTree(int target_order, KeepPredicate keep) :
        _target(target_order),
        _keep(std::move(keep))
    {
        if (target_order < 0 || target_order > small_graph_cap)
            throw CapacityError{"generation order must lie in 0..64"};
    }

    auto AugmentationTree::keeps(const SmallRows & candidate) const -> bool
    {
        return ! _keep || _keep(to_graph(candidate), _target);
    }

    auto AugmentationTree::children(const SmallRows & parent) const -> vector<SmallRows>
    {
        int k = parent.order;
        if (k >= 31)
            throw CapacityError{"augmentation beyond 31 vertices is not supported"};

        vector<SmallRows> result;
        SmallRows child = parent;
        child.order = k + 1;
        std::array<long, small_graph_cap> f{};

        for (Word s = 0 ; s < (Word{1} << k) ; ++s) {
            for (int v = 0 ; v < k ; ++v)
                child.rows[v] = parent.rows[v] | (((s >> v) & 1) << k);
            child.rows[k] = s;

            if (! keeps(child))
                continue;

            vertex_invariants(child, f);
            long best = *std::max_element(f.begin(), f.begin() + k + 1);
            if (f[k] != best)
                continue;
            int ties = int(std::count(f.begin(), f.begin() + k + 1, best));

            auto labelling = canonical_labelling(child);
            if (ties > 1) {
                // The canonical deletion vertex: among maximal-invariant vertices, the one
                // with the largest canonical label. Accept only if deleting it gives back
                // the parent's class, i.e. the new vertex is equivalent to it.
                int chosen = -1;
                for (int label = k ; label >= 0 && chosen == -1 ; --label)
                    if (f[labelling.vertex_at[label]] == best)
                        chosen = labelling.vertex_at[label];
                if (chosen != k && canonical_labelling(delete_vertex(child, chosen)).form != parent)
                    continue;
            }
            result.push_back(labelling.form);
        }

        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto AugmentationTree::level(int order) const -> vector<SmallRows>
    {
        if (order > _target)
            throw ArgumentError{"level beyond the target order"};
        if (order == 0)
            return {SmallRows{}};

        SmallRows single;
        single.order = 1;
        vector<SmallRows> current;
        if (keeps(single))
            current.push_back(single);
        for (int o = 2 ; o <= order ; ++o) {
            vector<SmallRows> next;
            for (auto & g : current) {
                auto kids = children(g);
                next.insert(next.end(), kids.begin(), kids.end());
            }
            std::sort(next.begin(), next.end());
            current = std::move(next);
        }
        return current;
    }

    auto AugmentationTree::expand(const SmallRows & root, const std::function<void (const SmallRows &)> & consumer) const -> long long
    {
        if (root.order == _target) {
            consumer(root);
            return 1;
        }
        long long total = 0;
        for (auto & child : children(root))
            total += expand(child, consumer);
        return total;
    }

    auto AugmentationTree::split_order() const -> int
    {
        return std::max(std::min(_target, 1), _target - 3);
    }

    auto parallel_for(int count, int jobs, const std::function<void (int)> & work) -> void
    {
        if (jobs <= 1 || count <= 1) {
            for (int i = 0 ; i < count ; ++i)
                work(i);
            return;
        }

        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        vector<std::thread> workers;
        for (int t = 0 ; t < std::min(jobs, count) ; ++t)
            workers.emplace_back([&] {
                for (int i = next++ ; i < count ; i = next++) {
                    try {
                        work(i);
                    }
                    catch (...) {
                        std::lock_guard lock{failure_mutex};
                        if (! failure)
                            failure = std::current_exception();
                        next = count;
                    }
                }
            });
        for (auto & w : workers)
            w.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    auto generate_nonisomorphic(int order, const GenerationOptions & options,
            const std::function<void (const Graph &)> & consumer) -> long long
    {
        if (order < 0)
            throw ArgumentError{"negative order"};
        if (order > options.order_guard)
            throw CapacityError{"exhaustive generation on " + std::to_string(order)
                + " vertices exceeds the order guard of " + std::to_string(options.order_guard)};

        AugmentationTree tree{order, options.keep};
        if (order == 0) {
            Graph empty{0};
            if (options.keep && ! options.keep(empty, 0))
                return 0;
            consumer(empty);
            return 1;
        }

        auto roots = tree.level(tree.split_order());
        vector<long long> counts(roots.size(), 0);
        parallel_for(int(roots.size()), options.jobs, [&] (int i) {
            counts[i] = tree.expand(roots[i], [&] (const SmallRows & g) { consumer(to_graph(g)); });
        });

        long long total = 0;
        for (auto c : counts)
            total += c;
        return total;
    }
}
