#include <ramsey_lab/graph.hh>
#include <ramsey_lab/errors.hh>

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

using std::pair;
using std::size_t;
using std::span;
using std::vector;

namespace ramsey_lab
{
    namespace
    {
        auto check_order(int order) -> void
        {
            if (order < 0)
                throw ArgumentError{"negative graph order"};
            if (order > max_graph_order)
                throw CapacityError{"graph order " + std::to_string(order) + " exceeds representation cap "
                    + std::to_string(max_graph_order)};
        }

        auto popcount(span<const Word> words) -> int
        {
            int result = 0;
            for (auto w : words)
                result += std::popcount(w);
            return result;
        }
    }

    VertexSet::VertexSet(int order) :
        _order(order),
        _words(words_for(order), 0)
    {
    }

    auto VertexSet::all(int order) -> VertexSet
    {
        VertexSet result{order};
        for (int v = 0 ; v < order ; ++v)
            result.insert(v);
        return result;
    }

    auto VertexSet::of(int order, std::initializer_list<int> vertices) -> VertexSet
    {
        return of(order, span<const int>{vertices.begin(), vertices.size()});
    }

    auto VertexSet::of(int order, span<const int> vertices) -> VertexSet
    {
        VertexSet result{order};
        for (int v : vertices) {
            if (v < 0 || v >= order)
                throw ArgumentError{"vertex " + std::to_string(v) + " outside a graph of order " + std::to_string(order)};
            result.insert(v);
        }
        return result;
    }

    auto VertexSet::from_words(int order, span<const Word> words) -> VertexSet
    {
        VertexSet result{order};
        for (size_t w = 0 ; w < result._words.size() && w < words.size() ; ++w)
            result._words[w] = words[w];
        if (order % bits_per_word != 0 && ! result._words.empty())
            result._words.back() &= (Word{1} << (order % bits_per_word)) - 1;
        return result;
    }

    auto VertexSet::size() const -> int
    {
        return popcount(_words);
    }

    auto VertexSet::empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [] (Word w) { return w == 0; });
    }

    auto VertexSet::first() const -> std::optional<int>
    {
        for (size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w])
                return int(w) * bits_per_word + std::countr_zero(_words[w]);
        return std::nullopt;
    }

    auto VertexSet::to_vector() const -> vector<int>
    {
        vector<int> result;
        for_each([&] (int v) { result.push_back(v); });
        return result;
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        for (size_t w = 0 ; w < _words.size() ; ++w)
            if (_words[w] & ~(w < other._words.size() ? other._words[w] : 0))
                return false;
        return true;
    }

    auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
    {
        for (size_t w = 0 ; w < _words.size() ; ++w)
            _words[w] &= (w < other._words.size() ? other._words[w] : 0);
        return *this;
    }

    auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
    {
        for (size_t w = 0 ; w < _words.size() && w < other._words.size() ; ++w)
            _words[w] |= other._words[w];
        return *this;
    }

    auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
    {
        for (size_t w = 0 ; w < _words.size() && w < other._words.size() ; ++w)
            _words[w] &= ~other._words[w];
        return *this;
    }

    Graph::Graph(int order)
    {
        check_order(order);
        _order = order;
        _stride = words_for(order);
        _bits.assign(size_t(order) * _stride, 0);
    }

    auto Graph::from_small_rows(int order, span<const Word> rows) -> Graph
    {
        if (order > small_graph_cap)
            throw CapacityError{"from_small_rows needs order <= 64"};
        if (rows.size() < size_t(order))
            throw ArgumentError{"too few adjacency rows"};

        Graph result{order};
        Word valid = order == bits_per_word ? ~Word{0} : (Word{1} << order) - 1;
        for (int v = 0 ; v < order ; ++v) {
            Word r = rows[v];
            if ((r & ~valid) || ((r >> v) & 1))
                throw ArgumentError{"adjacency row " + std::to_string(v) + " has a loop or out-of-range bit"};
            result._bits[v] = r;
        }
        for (int u = 0 ; u < order ; ++u)
            for (int v = u + 1 ; v < order ; ++v)
                if (result.adjacent(u, v) != result.adjacent(v, u))
                    throw ArgumentError{"adjacency rows are not symmetric"};
        return result;
    }

    auto Graph::from_edges(int order, span<const pair<int, int>> edges) -> Graph
    {
        GraphBuilder builder{order};
        for (auto [u, v] : edges)
            builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto Graph::from_edges(int order, std::initializer_list<pair<int, int>> edges) -> Graph
    {
        return from_edges(order, span<const pair<int, int>>{edges.begin(), edges.size()});
    }

    auto Graph::degree(int v) const -> int
    {
        return popcount(row(v));
    }

    auto Graph::neighbours(int v) const -> VertexSet
    {
        return VertexSet::from_words(_order, row(v));
    }

    auto Graph::edge_count() const -> long long
    {
        long long total = 0;
        for (int v = 0 ; v < _order ; ++v)
            total += degree(v);
        return total / 2;
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (int v = 0 ; v < _order ; ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto Graph::min_degree() const -> int
    {
        if (_order == 0)
            return 0;
        int result = std::numeric_limits<int>::max();
        for (int v = 0 ; v < _order ; ++v)
            result = std::min(result, degree(v));
        return result;
    }

    auto Graph::edges() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (int u = 0 ; u < _order ; ++u)
            for (int v = u + 1 ; v < _order ; ++v)
                if (adjacent(u, v))
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::common_neighbour_count(int u, int v) const -> int
    {
        auto a = row(u), b = row(v);
        int result = 0;
        for (int w = 0 ; w < _stride ; ++w)
            result += std::popcount(a[w] & b[w]);
        return result;
    }

    GraphBuilder::GraphBuilder(int order) :
        _graph(order)
    {
    }

    GraphBuilder::GraphBuilder(const Graph & start) :
        _graph(start)
    {
    }

    auto GraphBuilder::set(int u, int v, bool value) -> void
    {
        int n = _graph._order;
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ArgumentError{"edge endpoint out of range"};
        if (u == v)
            throw ArgumentError{"self-loops are not allowed"};

        auto flip = [&] (int a, int b) {
            Word & w = _graph._bits[size_t(a) * _graph._stride + b / bits_per_word];
            Word mask = Word{1} << (b % bits_per_word);
            w = value ? (w | mask) : (w & ~mask);
        };
        flip(u, v);
        flip(v, u);
    }

    auto GraphBuilder::add_edge(int u, int v) -> GraphBuilder &
    {
        set(u, v, true);
        return *this;
    }

    auto GraphBuilder::remove_edge(int u, int v) -> GraphBuilder &
    {
        set(u, v, false);
        return *this;
    }

    auto GraphBuilder::toggle_edge(int u, int v) -> GraphBuilder &
    {
        set(u, v, ! _graph.adjacent(u, v));
        return *this;
    }

    auto complement(const Graph & g) -> Graph
    {
        int n = g.order();
        GraphBuilder builder{n};
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (! g.adjacent(u, v))
                    builder.add_edge(u, v);
        return std::move(builder).build();
    }

    auto induced(const Graph & g, const VertexSet & s) -> Graph
    {
        if (s.order() != g.order())
            throw ArgumentError{"vertex set belongs to a graph of a different order"};
        auto keep = s.to_vector();
        GraphBuilder builder{int(keep.size())};
        for (size_t i = 0 ; i < keep.size() ; ++i)
            for (size_t j = i + 1 ; j < keep.size() ; ++j)
                if (g.adjacent(keep[i], keep[j]))
                    builder.add_edge(int(i), int(j));
        return std::move(builder).build();
    }

    auto bipartiteness(const Graph & g) -> BipartitenessCertificate
    {
        int n = g.order();
        vector<int> colour(n, -1), parent(n, -1), depth(n, 0);

        for (int root = 0 ; root < n ; ++root) {
            if (colour[root] != -1)
                continue;
            colour[root] = 0;
            std::deque<int> queue{root};
            while (! queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                for (int y = 0 ; y < n ; ++y) {
                    if (! g.adjacent(x, y))
                        continue;
                    if (colour[y] == -1) {
                        colour[y] = 1 - colour[x];
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                    else if (colour[y] == colour[x]) {
                        // Both tree paths to the common ancestor plus the edge xy make an
                        // odd cycle, since x and y sit at depths of equal parity.
                        vector<int> up_x{x}, up_y{y};
                        int a = x, b = y;
                        while (depth[a] > depth[b]) { a = parent[a]; up_x.push_back(a); }
                        while (depth[b] > depth[a]) { b = parent[b]; up_y.push_back(b); }
                        while (a != b) {
                            a = parent[a]; up_x.push_back(a);
                            b = parent[b]; up_y.push_back(b);
                        }
                        up_y.pop_back();
                        BipartitenessCertificate result;
                        result.bipartite = false;
                        result.odd_cycle.assign(up_x.rbegin(), up_x.rend());
                        result.odd_cycle.insert(result.odd_cycle.end(), up_y.begin(), up_y.end());
                        return result;
                    }
                }
            }
        }

        BipartitenessCertificate result;
        result.bipartite = true;
        result.side_a = VertexSet{n};
        result.side_b = VertexSet{n};
        for (int v = 0 ; v < n ; ++v)
            (colour[v] == 0 ? result.side_a : result.side_b).insert(v);
        return result;
    }

    auto verify_certificate(const Graph & g, const BipartitenessCertificate & c) -> bool
    {
        int n = g.order();
        if (c.bipartite) {
            if (c.side_a.order() != n || c.side_b.order() != n)
                return false;
            if (! (c.side_a & c.side_b).empty() || (c.side_a | c.side_b).size() != n)
                return false;
            for (auto [u, v] : g.edges())
                if (c.side_a.contains(u) == c.side_a.contains(v))
                    return false;
            return true;
        }

        auto & cyc = c.odd_cycle;
        if (cyc.size() % 2 == 0 || cyc.size() < 3)
            return false;
        for (size_t i = 0 ; i < cyc.size() ; ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a < 0 || b < 0 || a >= n || b >= n || ! g.adjacent(a, b))
                return false;
        }
        return true;
    }

    auto connected_components(const Graph & g, const VertexSet & within) -> vector<VertexSet>
    {
        int n = g.order();
        vector<VertexSet> result;
        VertexSet unseen = within;
        while (auto start = unseen.first()) {
            VertexSet component{n}, frontier{n};
            frontier.insert(*start);
            while (! frontier.empty()) {
                component |= frontier;
                VertexSet next{n};
                frontier.for_each([&] (int v) { next |= g.neighbours(v); });
                next &= within;
                next -= component;
                frontier = std::move(next);
            }
            unseen -= component;
            result.push_back(std::move(component));
        }
        return result;
    }

    auto connected_components(const Graph & g) -> vector<VertexSet>
    {
        return connected_components(g, VertexSet::all(g.order()));
    }

    auto is_connected(const Graph & g) -> bool
    {
        return connected_components(g).size() <= 1;
    }

    namespace
    {
        // Unit-capacity vertex-split flow network for local vertex connectivity.
        class SplitNetwork
        {
            public:
                explicit SplitNetwork(const Graph & g) :
                    _n(g.order()),
                    _head(2 * _n, -1)
                {
                    int big = _n;
                    for (int v = 0 ; v < _n ; ++v)
                        add_arc(in(v), out(v), 1);
                    for (auto [u, v] : g.edges()) {
                        add_arc(out(u), in(v), big);
                        add_arc(out(v), in(u), big);
                    }
                    _initial = _cap;
                }

                // Maximum number of internally vertex-disjoint s-t paths; s and t must be
                // non-adjacent. Afterwards, cut() gives a minimum s-t separator.
                auto max_flow(int s, int t) -> int
                {
                    _cap = _initial;
                    int source = out(s), sink = in(t);
                    int flow = 0;
                    vector<int> via(2 * _n);
                    while (true) {
                        std::fill(via.begin(), via.end(), -1);
                        std::deque<int> queue{source};
                        via[source] = -2;
                        while (! queue.empty() && via[sink] == -1) {
                            int x = queue.front();
                            queue.pop_front();
                            for (int a = _head[x] ; a != -1 ; a = _next[a])
                                if (_cap[a] > 0 && via[_to[a]] == -1) {
                                    via[_to[a]] = a;
                                    queue.push_back(_to[a]);
                                }
                        }
                        if (via[sink] == -1)
                            break;
                        for (int x = sink ; x != source ; x = _to[via[x] ^ 1]) {
                            --_cap[via[x]];
                            ++_cap[via[x] ^ 1];
                        }
                        ++flow;
                    }
                    _last_source = source;
                    return flow;
                }

                auto cut() const -> VertexSet
                {
                    vector<char> reach(2 * _n, 0);
                    std::deque<int> queue{_last_source};
                    reach[_last_source] = 1;
                    while (! queue.empty()) {
                        int x = queue.front();
                        queue.pop_front();
                        for (int a = _head[x] ; a != -1 ; a = _next[a])
                            if (_cap[a] > 0 && ! reach[_to[a]]) {
                                reach[_to[a]] = 1;
                                queue.push_back(_to[a]);
                            }
                    }
                    VertexSet result{_n};
                    for (int v = 0 ; v < _n ; ++v)
                        if (reach[in(v)] && ! reach[out(v)])
                            result.insert(v);
                    return result;
                }

            private:
                static auto in(int v) -> int { return 2 * v; }
                static auto out(int v) -> int { return 2 * v + 1; }

                auto add_arc(int from, int to, int cap) -> void
                {
                    _to.push_back(to); _cap.push_back(cap); _next.push_back(_head[from]); _head[from] = int(_to.size()) - 1;
                    _to.push_back(from); _cap.push_back(0); _next.push_back(_head[to]); _head[to] = int(_to.size()) - 1;
                }

                int _n;
                vector<int> _head, _to, _cap, _next, _initial;
                int _last_source = 0;
        };
    }

    auto minimum_separator(const Graph & g) -> Separator
    {
        int n = g.order();
        if (n < 2)
            throw DegenerateInputError{"connectivity needs at least two vertices"};

        if (g.edge_count() == (long long) n * (n - 1) / 2) {
            VertexSet all_but_last = VertexSet::all(n);
            all_but_last.erase(n - 1);
            return Separator{n - 1, all_but_last};
        }

        if (! is_connected(g))
            return Separator{0, VertexSet{n}};

        // Even's scheme: some vertex among the first k+1 lies outside any minimum
        // separator, so only pairs anchored there need a flow computation.
        SplitNetwork network{g};
        Separator best{n - 1, VertexSet{n}};
        bool found = false;
        for (int i = 0 ; i < n && i <= best.connectivity ; ++i)
            for (int j = i + 1 ; j < n ; ++j) {
                if (g.adjacent(i, j))
                    continue;
                int local = network.max_flow(i, j);
                if (! found || local < best.connectivity) {
                    best = Separator{local, network.cut()};
                    found = true;
                }
            }
        return best;
    }

    auto connectivity(const Graph & g) -> int
    {
        return minimum_separator(g).connectivity;
    }

    auto biconnected_components(const Graph & g) -> BlockDecomposition
    {
        int n = g.order();
        BlockDecomposition result;
        result.articulation_points = VertexSet{n};

        vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_neighbour(n, 0);
        vector<pair<int, int>> edge_stack;
        int timer = 0;

        auto pop_block = [&] (int u, int v) {
            VertexSet block{n};
            while (true) {
                auto [a, b] = edge_stack.back();
                edge_stack.pop_back();
                block.insert(a);
                block.insert(b);
                if (a == u && b == v)
                    break;
            }
            result.blocks.push_back(std::move(block));
        };

        for (int root = 0 ; root < n ; ++root) {
            if (disc[root] != -1)
                continue;
            if (g.degree(root) == 0) {
                disc[root] = timer++;
                result.blocks.push_back(VertexSet::of(n, {root}));
                continue;
            }

            int root_children = 0;
            vector<int> stack{root};
            disc[root] = low[root] = timer++;
            while (! stack.empty()) {
                int u = stack.back();
                bool descended = false;
                while (next_neighbour[u] < n) {
                    int v = next_neighbour[u]++;
                    if (! g.adjacent(u, v))
                        continue;
                    if (disc[v] == -1) {
                        parent[v] = u;
                        disc[v] = low[v] = timer++;
                        edge_stack.emplace_back(u, v);
                        stack.push_back(v);
                        if (u == root)
                            ++root_children;
                        descended = true;
                        break;
                    }
                    else if (v != parent[u] && disc[v] < disc[u]) {
                        edge_stack.emplace_back(u, v);
                        low[u] = std::min(low[u], disc[v]);
                    }
                }
                if (descended)
                    continue;

                stack.pop_back();
                int p = parent[u];
                if (p != -1) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) {
                        if (p != root)
                            result.articulation_points.insert(p);
                        pop_block(p, u);
                    }
                }
            }
            if (root_children > 1)
                result.articulation_points.insert(root);
        }
        return result;
    }

    auto is_two_connected(const Graph & g) -> bool
    {
        if (g.order() < 3 || ! is_connected(g))
            return false;
        return biconnected_components(g).articulation_points.empty();
    }
}
