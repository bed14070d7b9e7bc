#pragma once

#include <ramsey_lab/graph.hh>

#include <array>
#include <compare>
#include <cstdint>
#include <span>

namespace ramsey_lab
{
    // Adjacency rows of a graph of order <= small_graph_cap. Only the first `order`
    // rows are meaningful; the rest stay zero so whole-array comparison is well defined.
    struct SmallRows
    {
        int order = 0;
        std::array<Word, small_graph_cap> rows{};

        auto operator<=>(const SmallRows &) const = default;
        auto operator==(const SmallRows &) const -> bool = default;
    };

    auto to_small_rows(const Graph & g) -> SmallRows;
    auto to_graph(const SmallRows & r) -> Graph;

    struct CanonicalLabelling
    {
        // The canonical graph: rows[i] has bit j set iff the vertices labelled i and j are
        // adjacent. Isomorphic inputs give identical forms.
        SmallRows form;
        // vertex_at[i] is the input vertex that received label i.
        std::array<std::uint8_t, small_graph_cap> vertex_at{};
    };

    // Exact canonical labelling by equitable partition refinement plus individualisation
    // search. The form is the lexicographically least row sequence over all leaves of the
    // search tree; automorphisms found on the way prune isomorphic subtrees.
    auto canonical_labelling(const SmallRows & g) -> CanonicalLabelling;

    auto canonical_form(const Graph & g) -> Graph;
}
