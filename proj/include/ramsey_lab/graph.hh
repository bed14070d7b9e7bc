#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ramsey_lab
{
    using Word = std::uint64_t;

    inline constexpr int bits_per_word = 64;

    // Largest order any Graph may have. The search kernel works on graphs of order at
    // most small_graph_cap, where every adjacency row is a single machine word.
    inline constexpr int max_graph_order = 8192;
    inline constexpr int small_graph_cap = 64;

    inline constexpr auto words_for(int order) -> int
    {
        return (order + bits_per_word - 1) / bits_per_word;
    }

    // A subset of the vertices of a graph of some fixed order. No bits are ever set at
    // positions >= order.
    class VertexSet
    {
        public:
            VertexSet() = default;
            explicit VertexSet(int order);

            static auto all(int order) -> VertexSet;
            static auto of(int order, std::initializer_list<int> vertices) -> VertexSet;
            static auto of(int order, std::span<const int> vertices) -> VertexSet;
            static auto from_words(int order, std::span<const Word> words) -> VertexSet;

            auto order() const -> int { return _order; }
            auto contains(int v) const -> bool { return (_words[v / bits_per_word] >> (v % bits_per_word)) & 1; }
            auto insert(int v) -> void { _words[v / bits_per_word] |= Word{1} << (v % bits_per_word); }
            auto erase(int v) -> void { _words[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word)); }
            auto size() const -> int;
            auto empty() const -> bool;
            auto first() const -> std::optional<int>;
            auto to_vector() const -> std::vector<int>;
            auto words() const -> std::span<const Word> { return _words; }

            auto is_subset_of(const VertexSet & other) const -> bool;

            auto operator&=(const VertexSet & other) -> VertexSet &;
            auto operator|=(const VertexSet & other) -> VertexSet &;
            auto operator-=(const VertexSet & other) -> VertexSet &;

            friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
            friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

            template <typename F>
            auto for_each(F && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    for (Word bits = _words[w] ; bits ; bits &= bits - 1)
                        f(int(w) * bits_per_word + std::countr_zero(bits));
            }

        private:
            int _order = 0;
            std::vector<Word> _words;
    };

    // Simple undirected graph stored as one bit-row per vertex. Immutable once built;
    // use GraphBuilder or one of the named constructors to make one.
    class Graph
    {
        public:
            Graph() = default;

            // Edgeless graph.
            explicit Graph(int order);

            // Rows for a graph of order <= small_graph_cap, one word per vertex. The rows
            // must be symmetric with clear diagonal; this is checked.
            static auto from_small_rows(int order, std::span<const Word> rows) -> Graph;
            static auto from_edges(int order, std::span<const std::pair<int, int>> edges) -> Graph;
            static auto from_edges(int order, std::initializer_list<std::pair<int, int>> edges) -> Graph;

            auto order() const -> int { return _order; }
            auto words_per_row() const -> int { return _stride; }

            auto adjacent(int u, int v) const -> bool
            {
                return (_bits[std::size_t(u) * _stride + v / bits_per_word] >> (v % bits_per_word)) & 1;
            }

            auto row(int v) const -> std::span<const Word>
            {
                return {_bits.data() + std::size_t(v) * _stride, std::size_t(_stride)};
            }

            // Only valid when order() <= small_graph_cap.
            auto small_row(int v) const -> Word { return _bits[v]; }

            auto degree(int v) const -> int;
            auto neighbours(int v) const -> VertexSet;
            auto edge_count() const -> long long;
            auto max_degree() const -> int;
            auto min_degree() const -> int;
            auto edges() const -> std::vector<std::pair<int, int>>;
            auto common_neighbour_count(int u, int v) const -> int;

            friend auto operator==(const Graph &, const Graph &) -> bool = default;

        private:
            friend class GraphBuilder;

            int _order = 0;
            int _stride = 0;
            std::vector<Word> _bits;
    };

    class GraphBuilder
    {
        public:
            explicit GraphBuilder(int order);
            explicit GraphBuilder(const Graph & start);

            auto order() const -> int { return _graph._order; }
            auto add_edge(int u, int v) -> GraphBuilder &;
            auto remove_edge(int u, int v) -> GraphBuilder &;
            auto toggle_edge(int u, int v) -> GraphBuilder &;
            auto adjacent(int u, int v) const -> bool { return _graph.adjacent(u, v); }
            auto build() const & -> Graph { return _graph; }
            auto build() && -> Graph { return std::move(_graph); }

        private:
            auto set(int u, int v, bool value) -> void;

            Graph _graph;
    };

    struct BipartitenessCertificate
    {
        bool bipartite = false;
        // Populated when bipartite: a 2-colouring with every edge crossing.
        VertexSet side_a, side_b;
        // Populated when not bipartite: an odd cycle, as a vertex sequence whose consecutive
        // pairs (and the last-to-first pair) are edges.
        std::vector<int> odd_cycle;
    };

    struct BlockDecomposition
    {
        std::vector<VertexSet> blocks;
        VertexSet articulation_points;
    };

    struct Separator
    {
        int connectivity = 0;
        // A minimum vertex set whose removal disconnects the graph. Empty for disconnected
        // graphs; for complete graphs, order-1 vertices (by convention the graph cannot be
        // disconnected, see connectivity()).
        VertexSet vertices;
    };

    auto complement(const Graph & g) -> Graph;

    // Subgraph induced on s, relabelled in ascending order of the original indices.
    auto induced(const Graph & g, const VertexSet & s) -> Graph;

    auto bipartiteness(const Graph & g) -> BipartitenessCertificate;
    auto verify_certificate(const Graph & g, const BipartitenessCertificate & c) -> bool;

    auto connected_components(const Graph & g, const VertexSet & within) -> std::vector<VertexSet>;
    auto connected_components(const Graph & g) -> std::vector<VertexSet>;
    auto is_connected(const Graph & g) -> bool;

    // Vertex connectivity k(G). Complete graphs give order-1. Throws DegenerateInputError
    // for order < 2.
    auto connectivity(const Graph & g) -> int;
    auto minimum_separator(const Graph & g) -> Separator;

    auto biconnected_components(const Graph & g) -> BlockDecomposition;

    // Connected, at least three vertices, and no cut vertex.
    auto is_two_connected(const Graph & g) -> bool;
}
