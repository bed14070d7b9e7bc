#include <ramsey_lab/constructions.hh>
#include <ramsey_lab/errors.hh>

#include <string>

namespace ramsey_lab
{
    auto empty_graph(int order) -> Graph
    {
        return Graph{order};
    }

    auto complete_graph(int order) -> Graph
    {
        GraphBuilder builder{order};
        for (int u = 0 ; u < order ; ++u)
            for (int v = u + 1 ; v < order ; ++v)
                builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto cycle_graph(int order) -> Graph
    {
        if (order < 3)
            throw ArgumentError{"a cycle needs at least three vertices"};
        GraphBuilder builder{order};
        for (int v = 0 ; v < order ; ++v)
            builder.add_edge(v, (v + 1) % order);
        return std::move(builder).build();
    }

    auto path_graph(int order) -> Graph
    {
        GraphBuilder builder{order};
        for (int v = 0 ; v + 1 < order ; ++v)
            builder.add_edge(v, v + 1);
        return std::move(builder).build();
    }

    auto petersen_graph() -> Graph
    {
        GraphBuilder builder{10};
        for (int i = 0 ; i < 5 ; ++i) {
            builder.add_edge(i, (i + 1) % 5);           // outer 5-cycle
            builder.add_edge(i, i + 5);                 // spokes
            builder.add_edge(5 + i, 5 + (i + 2) % 5);   // inner pentagram
        }
        return std::move(builder).build();
    }

    namespace
    {
        auto combine(const Graph & g, const Graph & h, bool cross) -> Graph
        {
            long long total = (long long) g.order() + h.order();
            if (total > max_graph_order)
                throw CapacityError{"combined order " + std::to_string(total) + " exceeds representation cap"};

            int offset = g.order();
            GraphBuilder builder{int(total)};
            for (auto [u, v] : g.edges())
                builder.add_edge(u, v);
            for (auto [u, v] : h.edges())
                builder.add_edge(u + offset, v + offset);
            if (cross)
                for (int u = 0 ; u < g.order() ; ++u)
                    for (int v = 0 ; v < h.order() ; ++v)
                        builder.add_edge(u, v + offset);
            return std::move(builder).build();
        }
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        return combine(g, h, false);
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        return combine(g, h, true);
    }

    auto disjoint_cliques(int copies, int clique_order) -> Graph
    {
        if (copies < 1 || clique_order < 1)
            throw ArgumentError{"disjoint_cliques needs at least one clique of at least one vertex"};
        long long total = (long long) copies * clique_order;
        if (total > max_graph_order)
            throw CapacityError{"disjoint_cliques order " + std::to_string(total) + " exceeds representation cap"};

        GraphBuilder builder{int(total)};
        for (int c = 0 ; c < copies ; ++c) {
            int base = c * clique_order;
            for (int u = 0 ; u < clique_order ; ++u)
                for (int v = u + 1 ; v < clique_order ; ++v)
                    builder.add_edge(base + u, base + v);
        }
        return std::move(builder).build();
    }

    auto complete_multipartite(std::span<const int> part_sizes) -> Graph
    {
        long long total = 0;
        for (int s : part_sizes) {
            if (s < 1)
                throw ArgumentError{"every part of a complete multipartite graph needs a vertex"};
            total += s;
        }
        if (total > max_graph_order)
            throw CapacityError{"complete multipartite order " + std::to_string(total) + " exceeds representation cap"};

        std::vector<int> part_of;
        for (int p = 0 ; p < int(part_sizes.size()) ; ++p)
            part_of.insert(part_of.end(), part_sizes[p], p);

        GraphBuilder builder{int(total)};
        for (int u = 0 ; u < int(total) ; ++u)
            for (int v = u + 1 ; v < int(total) ; ++v)
                if (part_of[u] != part_of[v])
                    builder.add_edge(u, v);
        return std::move(builder).build();
    }
}
