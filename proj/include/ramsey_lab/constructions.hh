#pragma once

#include <ramsey_lab/graph.hh>

#include <span>

namespace ramsey_lab
{
    auto empty_graph(int order) -> Graph;
    auto complete_graph(int order) -> Graph;
    auto cycle_graph(int order) -> Graph;
    auto path_graph(int order) -> Graph;
    auto petersen_graph() -> Graph;

    // Vertices of g first, then those of h shifted by g.order().
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

    // Disjoint union plus every edge between the two sides. Throws CapacityError when the
    // combined order exceeds the representation cap.
    auto join(const Graph & g, const Graph & h) -> Graph;

    // `copies` disjoint cliques of `clique_order` vertices each, laid out contiguously.
    auto disjoint_cliques(int copies, int clique_order) -> Graph;

    // Contiguous parts, edges exactly between distinct parts.
    auto complete_multipartite(std::span<const int> part_sizes) -> Graph;
}
