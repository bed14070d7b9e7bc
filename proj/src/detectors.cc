#include <ramsey_lab/detectors.hh>
#include <ramsey_lab/errors.hh>

#include <algorithm>
#include <numeric>
#include <string>

using std::optional;
using std::size_t;
using std::span;
using std::vector;

namespace ramsey_lab
{
    namespace
    {
        auto require_positive(int n, const char * what) -> void
        {
            if (n < 1)
                throw ArgumentError{std::string{what} + " needs n >= 1"};
        }

        auto take_first(const VertexSet & s, int count) -> vector<int>
        {
            vector<int> result;
            s.for_each([&] (int v) {
                if (int(result.size()) < count)
                    result.push_back(v);
            });
            return result;
        }

        template <typename F>
        auto for_each_bit(span<const Word> words, F && f) -> void
        {
            for (size_t w = 0 ; w < words.size() ; ++w)
                for (Word bits = words[w] ; bits ; bits &= bits - 1)
                    f(int(w) * bits_per_word + std::countr_zero(bits));
        }

        auto test_bit(span<const Word> words, int v) -> bool
        {
            return (words[v / bits_per_word] >> (v % bits_per_word)) & 1;
        }

        auto clear_bit(span<Word> words, int v) -> void
        {
            words[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word));
        }

        auto count_bits(span<const Word> words) -> int
        {
            int c = 0;
            for (auto w : words)
                c += std::popcount(w);
            return c;
        }

        // Anchored depth-first cycle search. Every cycle is found from its least vertex
        // (the anchor), extending through vertices of a pool that holds only larger
        // vertices. A bitset reachability test prunes branches that cannot close up.
        class CycleSearch
        {
            public:
                explicit CycleSearch(const Graph & g) :
                    _g(g),
                    _w(g.words_per_row()),
                    _avail(size_t(g.order() + 2) * _w),
                    _seen(_w),
                    _frontier(_w),
                    _next(_w)
                {
                }

                // Cycle on exactly m vertices through anchor, other vertices from pool.
                auto fixed_length(int anchor, span<const Word> pool, int m) -> bool
                {
                    _anchor = anchor;
                    _target = m;
                    _path.assign(1, anchor);
                    std::copy(pool.begin(), pool.end(), level(0).begin());
                    return extend_fixed(anchor, 1, 0);
                }

                // Ors into `found` (bit L set = an L-cycle exists) every length of a cycle
                // through anchor with other vertices from pool. Stops early once `wanted` is
                // covered.
                auto all_lengths(int anchor, span<const Word> pool, std::uint64_t & found, std::uint64_t wanted) -> void
                {
                    _anchor = anchor;
                    _found = &found;
                    _wanted = wanted;
                    std::copy(pool.begin(), pool.end(), level(0).begin());
                    extend_all(anchor, 1, 0);
                }

                auto path() const -> const vector<int> & { return _path; }

            private:
                auto level(int depth) -> span<Word>
                {
                    return {_avail.data() + size_t(depth) * _w, size_t(_w)};
                }

                // Vertices reachable from `from` through `avail` (excluding `from`), and
                // whether any of them is adjacent to the anchor.
                auto reach(int from, span<const Word> avail, bool & touches_anchor) -> int
                {
                    std::fill(_seen.begin(), _seen.end(), 0);
                    std::fill(_frontier.begin(), _frontier.end(), 0);
                    _frontier[from / bits_per_word] |= Word{1} << (from % bits_per_word);
                    int count = 0;
                    auto anchor_row = _g.row(_anchor);
                    touches_anchor = false;
                    while (true) {
                        std::fill(_next.begin(), _next.end(), 0);
                        for_each_bit(_frontier, [&] (int x) {
                            auto r = _g.row(x);
                            for (int w = 0 ; w < _w ; ++w)
                                _next[w] |= r[w] & avail[w] & ~_seen[w];
                        });
                        int added = 0;
                        for (int w = 0 ; w < _w ; ++w) {
                            added += std::popcount(_next[w]);
                            _seen[w] |= _next[w];
                            if (_next[w] & anchor_row[w])
                                touches_anchor = true;
                        }
                        if (added == 0)
                            break;
                        count += added;
                        std::swap(_frontier, _next);
                    }
                    return count;
                }

                auto extend_fixed(int cur, int len, int depth) -> bool
                {
                    if (len == _target)
                        return _g.adjacent(cur, _anchor);

                    auto avail = level(depth), child = level(depth + 1);
                    auto cur_row = _g.row(cur), anchor_row = _g.row(_anchor);
                    vector<int> candidates;
                    for (int w = 0 ; w < _w ; ++w) {
                        Word c = cur_row[w] & avail[w];
                        if (len == _target - 1)
                            c &= anchor_row[w];
                        for ( ; c ; c &= c - 1)
                            candidates.push_back(w * bits_per_word + std::countr_zero(c));
                    }

                    for (int v : candidates) {
                        std::copy(avail.begin(), avail.end(), child.begin());
                        clear_bit(child, v);
                        int still_needed = _target - len - 1;
                        if (still_needed > 0) {
                            bool touches = false;
                            if (reach(v, child, touches) < still_needed || ! touches)
                                continue;
                        }
                        _path.push_back(v);
                        if (extend_fixed(v, len + 1, depth + 1))
                            return true;
                        _path.pop_back();
                    }
                    return false;
                }

                auto extend_all(int cur, int len, int depth) -> void
                {
                    if (len >= 3 && _g.adjacent(cur, _anchor))
                        *_found |= std::uint64_t{1} << len;
                    if ((*_found & _wanted) == _wanted)
                        return;

                    auto avail = level(depth), child = level(depth + 1);
                    auto cur_row = _g.row(cur);
                    vector<int> candidates;
                    for (int w = 0 ; w < _w ; ++w)
                        for (Word c = cur_row[w] & avail[w] ; c ; c &= c - 1)
                            candidates.push_back(w * bits_per_word + std::countr_zero(c));

                    for (int v : candidates) {
                        std::copy(avail.begin(), avail.end(), child.begin());
                        clear_bit(child, v);
                        bool touches = false;
                        int further = reach(v, child, touches);
                        // Continuing through v can only close cycles of length len+1 up to
                        // len+1+further; skip if none of those is still unknown.
                        std::uint64_t window = 0;
                        for (int l = std::max(3, len + 1) ; l <= len + 1 + further && l < 64 ; ++l)
                            window |= std::uint64_t{1} << l;
                        if ((window & _wanted & ~*_found) == 0)
                            continue;
                        if (further == 0 && ! _g.adjacent(v, _anchor))
                            continue;
                        extend_all(v, len + 1, depth + 1);
                        if ((*_found & _wanted) == _wanted)
                            return;
                    }
                }

                const Graph & _g;
                int _w;
                vector<Word> _avail, _seen, _frontier, _next;
                vector<int> _path;
                int _anchor = 0, _target = 0;
                std::uint64_t * _found = nullptr;
                std::uint64_t _wanted = 0;
        };

        // Component of `start` inside mask (start must be in mask).
        auto component_within(const Graph & g, int start, span<const Word> mask) -> vector<Word>
        {
            int w_count = g.words_per_row();
            vector<Word> seen(w_count, 0), frontier(w_count, 0);
            seen[start / bits_per_word] |= Word{1} << (start % bits_per_word);
            frontier = seen;
            while (true) {
                vector<Word> next(w_count, 0);
                for_each_bit(frontier, [&] (int x) {
                    auto r = g.row(x);
                    for (int w = 0 ; w < w_count ; ++w)
                        next[w] |= r[w] & mask[w] & ~seen[w];
                });
                if (count_bits(next) == 0)
                    break;
                for (int w = 0 ; w < w_count ; ++w)
                    seen[w] |= next[w];
                frontier = std::move(next);
            }
            return seen;
        }

        auto bipartite_within(const Graph & g, span<const Word> mask) -> bool
        {
            int n = g.order();
            vector<int> colour(n, -1);
            vector<int> queue;
            for (int s = 0 ; s < n ; ++s) {
                if (! test_bit(mask, s) || colour[s] != -1)
                    continue;
                colour[s] = 0;
                queue.assign(1, s);
                for (size_t head = 0 ; head < queue.size() ; ++head) {
                    int x = queue[head];
                    bool clash = false;
                    for_each_bit(g.row(x), [&] (int y) {
                        if (! test_bit(mask, y))
                            return;
                        if (colour[y] == -1) {
                            colour[y] = 1 - colour[x];
                            queue.push_back(y);
                        }
                        else if (colour[y] == colour[x])
                            clash = true;
                    });
                    if (clash)
                        return false;
                }
            }
            return true;
        }

        // Pool of vertices strictly above `anchor` that share its component inside allowed.
        auto anchored_pool(const Graph & g, int anchor, span<const Word> allowed) -> vector<Word>
        {
            int w_count = g.words_per_row();
            vector<Word> above(allowed.begin(), allowed.end());
            for (int w = 0 ; w < w_count ; ++w) {
                int lo = w * bits_per_word;
                if (anchor >= lo + bits_per_word - 1)
                    above[w] = 0;
                else if (anchor >= lo)
                    above[w] &= ~((Word{2} << (anchor - lo)) - 1);
            }
            above[anchor / bits_per_word] |= Word{1} << (anchor % bits_per_word);
            auto component = component_within(g, anchor, above);
            clear_bit(component, anchor);
            return component;
        }

        auto find_cycle_in_mask(const Graph & g, span<const Word> allowed, int m) -> optional<vector<int>>
        {
            if (m < 3)
                return std::nullopt;
            CycleSearch search{g};
            optional<vector<int>> result;
            int remaining = count_bits(allowed);
            for_each_bit(allowed, [&] (int anchor) {
                if (result || remaining-- < m)
                    return;
                auto pool = anchored_pool(g, anchor, allowed);
                if (count_bits(pool) + 1 < m)
                    return;
                if (m % 2 == 1) {
                    auto with_anchor = pool;
                    with_anchor[anchor / bits_per_word] |= Word{1} << (anchor % bits_per_word);
                    if (bipartite_within(g, with_anchor))
                        return;
                }
                if (search.fixed_length(anchor, pool, m))
                    result = search.path();
            });
            return result;
        }

        auto all_words(int order) -> vector<Word>
        {
            auto s = VertexSet::all(order);
            return {s.words().begin(), s.words().end()};
        }

        auto wheel_at(const Graph & g, int hub, int m) -> optional<vector<int>>
        {
            if (g.degree(hub) < m)
                return std::nullopt;
            return find_cycle_in_mask(g, g.row(hub), m);
        }
    }

    auto find_k2n(const Graph & g, int n) -> WitnessReport
    {
        require_positive(n, "K_{2,n} detection");
        WitnessReport result{false, PatternSpec::k2n(n), std::nullopt, {}, {}};
        int order = g.order();
        for (int u = 0 ; u < order ; ++u) {
            if (g.degree(u) < n)
                continue;
            for (int v = u + 1 ; v < order ; ++v)
                if (g.common_neighbour_count(u, v) >= n) {
                    result.found = true;
                    result.pair = {u, v};
                    result.vertices = take_first(g.neighbours(u) & g.neighbours(v), n);
                    return result;
                }
        }
        return result;
    }

    auto find_book(const Graph & g, int n) -> WitnessReport
    {
        require_positive(n, "book detection");
        WitnessReport result{false, PatternSpec::book(n), std::nullopt, {}, {}};
        int order = g.order();
        for (int u = 0 ; u < order ; ++u)
            for (int v = u + 1 ; v < order ; ++v)
                if (g.adjacent(u, v) && g.common_neighbour_count(u, v) >= n) {
                    result.found = true;
                    result.pair = {u, v};
                    result.vertices = take_first(g.neighbours(u) & g.neighbours(v), n);
                    return result;
                }
        return result;
    }

    auto find_star(const Graph & g, int n) -> WitnessReport
    {
        require_positive(n, "star detection");
        WitnessReport result{false, PatternSpec::star(n), std::nullopt, {}, {}};
        for (int v = 0 ; v < g.order() ; ++v)
            if (g.degree(v) >= n) {
                result.found = true;
                result.hub = v;
                result.vertices = take_first(g.neighbours(v), n);
                return result;
            }
        return result;
    }

    auto find_clique(const Graph & g, int k) -> WitnessReport
    {
        require_positive(k, "clique detection");
        WitnessReport result{false, PatternSpec::clique(k), std::nullopt, {}, {}};
        vector<int> chosen;

        auto extend = [&] (auto & self, const VertexSet & candidates) -> bool {
            if (int(chosen.size()) == k)
                return true;
            if (int(chosen.size()) + candidates.size() < k)
                return false;
            bool done = false;
            candidates.for_each([&] (int v) {
                if (done)
                    return;
                VertexSet next = candidates & g.neighbours(v);
                // Keep only larger vertices so each clique is built in ascending order.
                for (int u = 0 ; u <= v ; ++u)
                    next.erase(u);
                chosen.push_back(v);
                if (self(self, next))
                    done = true;
                else
                    chosen.pop_back();
            });
            return done;
        };

        if (extend(extend, VertexSet::all(g.order()))) {
            result.found = true;
            result.vertices = chosen;
        }
        return result;
    }

    auto find_cycle_within(const Graph & g, const VertexSet & allowed, int m) -> optional<vector<int>>
    {
        if (allowed.order() != g.order())
            throw ArgumentError{"vertex set belongs to a graph of a different order"};
        return find_cycle_in_mask(g, allowed.words(), m);
    }

    auto find_cycle_of_length(const Graph & g, int m) -> WitnessReport
    {
        if (m < 3 || m > g.order())
            throw ArgumentError{"cycle length " + std::to_string(m) + " outside 3.." + std::to_string(g.order())};
        WitnessReport result{false, PatternSpec::cycle(m), std::nullopt, {}, {}};
        auto all = all_words(g.order());
        if (auto c = find_cycle_in_mask(g, all, m)) {
            result.found = true;
            result.vertices = std::move(*c);
        }
        return result;
    }

    auto find_wheel(const Graph & g, int m) -> WitnessReport
    {
        if (m < 3)
            throw ArgumentError{"wheel needs m >= 3"};
        WitnessReport result{false, PatternSpec::wheel(m), std::nullopt, {}, {}};
        for (int hub = 0 ; hub < g.order() ; ++hub)
            if (auto c = wheel_at(g, hub, m)) {
                result.found = true;
                result.hub = hub;
                result.vertices = std::move(*c);
                return result;
            }
        return result;
    }

    auto find_pattern(const Graph & g, const PatternSpec & p) -> WitnessReport
    {
        switch (p.kind) {
            case PatternKind::Star:   return find_star(g, p.parameter);
            case PatternKind::K2n:    return find_k2n(g, p.parameter);
            case PatternKind::Book:   return find_book(g, p.parameter);
            case PatternKind::Wheel:  return find_wheel(g, p.parameter);
            case PatternKind::Clique: return find_clique(g, p.parameter);
            case PatternKind::Cycle:
                if (p.parameter > g.order())
                    return WitnessReport{false, p, std::nullopt, {}, {}};
                return find_cycle_of_length(g, p.parameter);
        }
        throw ArgumentError{"unknown pattern kind"};
    }

    auto contains_pattern(const Graph & g, const PatternSpec & p) -> bool
    {
        if (p.kind != PatternKind::Wheel)
            return find_pattern(g, p).found;

        int m = p.parameter;
        vector<int> hubs(g.order());
        std::iota(hubs.begin(), hubs.end(), 0);
        vector<int> degree(g.order());
        for (int v = 0 ; v < g.order() ; ++v)
            degree[v] = g.degree(v);
        std::stable_sort(hubs.begin(), hubs.end(), [&] (int a, int b) { return degree[a] > degree[b]; });
        for (int hub : hubs) {
            if (degree[hub] < m)
                break;
            if (wheel_at(g, hub, m))
                return true;
        }
        return false;
    }

    auto verify_witness(const Graph & host, const WitnessReport & w) -> bool
    {
        if (! w.found)
            return true;

        int n = host.order();
        vector<int> everything = w.vertices;
        everything.insert(everything.end(), w.pair.begin(), w.pair.end());
        if (w.hub)
            everything.push_back(*w.hub);
        for (int v : everything)
            if (v < 0 || v >= n)
                return false;
        auto sorted = everything;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;

        int x = w.pattern.parameter;
        auto all_adjacent_to = [&] (int centre) {
            return std::all_of(w.vertices.begin(), w.vertices.end(), [&] (int v) { return host.adjacent(centre, v); });
        };
        auto is_cycle = [&] {
            for (size_t i = 0 ; i < w.vertices.size() ; ++i)
                if (! host.adjacent(w.vertices[i], w.vertices[(i + 1) % w.vertices.size()]))
                    return false;
            return true;
        };

        switch (w.pattern.kind) {
            case PatternKind::Star:
                return w.hub && int(w.vertices.size()) == x && all_adjacent_to(*w.hub);
            case PatternKind::K2n:
                return w.pair.size() == 2 && int(w.vertices.size()) == x
                    && all_adjacent_to(w.pair[0]) && all_adjacent_to(w.pair[1]);
            case PatternKind::Book:
                return w.pair.size() == 2 && int(w.vertices.size()) == x && host.adjacent(w.pair[0], w.pair[1])
                    && all_adjacent_to(w.pair[0]) && all_adjacent_to(w.pair[1]);
            case PatternKind::Cycle:
                return int(w.vertices.size()) == x && is_cycle();
            case PatternKind::Wheel:
                return w.hub && int(w.vertices.size()) == x && is_cycle() && all_adjacent_to(*w.hub);
            case PatternKind::Clique:
                if (int(w.vertices.size()) != x)
                    return false;
                for (size_t i = 0 ; i < w.vertices.size() ; ++i)
                    for (size_t j = i + 1 ; j < w.vertices.size() ; ++j)
                        if (! host.adjacent(w.vertices[i], w.vertices[j]))
                            return false;
                return true;
        }
        return false;
    }

    auto cycle_spectrum(const Graph & g, int cap) -> CycleSpectrum
    {
        int n = g.order();
        if (n > cap || n > 62)
            throw CapacityError{"cycle spectrum is exponential; order " + std::to_string(n)
                + " exceeds cap " + std::to_string(std::min(cap, 62)) + " (use find_cycle_of_length per length)"};

        std::uint64_t wanted = 0, found = 0;
        for (int l = 3 ; l <= n ; ++l)
            wanted |= std::uint64_t{1} << l;

        auto all = all_words(n);
        CycleSearch search{g};
        for (int anchor = 0 ; anchor + 2 < n && (found & wanted) != wanted ; ++anchor) {
            auto pool = anchored_pool(g, anchor, all);
            if (count_bits(pool) < 2)
                continue;
            search.all_lengths(anchor, pool, found, wanted);
        }

        CycleSpectrum result;
        for (int l = 3 ; l <= n ; ++l)
            if ((found >> l) & 1) {
                result.lengths.push_back(l);
                if (! result.girth)
                    result.girth = l;
                (l % 2 == 0 ? result.even_circumference : result.odd_circumference) = l;
            }
        return result;
    }
}
