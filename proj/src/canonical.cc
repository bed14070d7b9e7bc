#include <ramsey_lab/canonical.hh>
#include <ramsey_lab/errors.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

using std::array;
using std::uint8_t;
using std::vector;

namespace ramsey_lab
{
    auto to_small_rows(const Graph & g) -> SmallRows
    {
        if (g.order() > small_graph_cap)
            throw CapacityError{"canonical forms need order <= 64"};
        SmallRows result;
        result.order = g.order();
        for (int v = 0 ; v < g.order() ; ++v)
            result.rows[v] = g.small_row(v);
        return result;
    }

    auto to_graph(const SmallRows & r) -> Graph
    {
        return Graph::from_small_rows(r.order, std::span<const Word>{r.rows.data(), std::size_t(r.order)});
    }

    namespace
    {
        using Perm = array<uint8_t, small_graph_cap>;

        // Ordered partition of the vertex set, one mask per cell.
        struct Partition
        {
            array<Word, small_graph_cap> cells{};
            int count = 0;
        };

        class Canoniser
        {
            public:
                explicit Canoniser(const SmallRows & g) :
                    _g(g),
                    _n(g.order)
                {
                }

                auto run() -> CanonicalLabelling
                {
                    CanonicalLabelling result;
                    result.form.order = _n;
                    if (_n == 0)
                        return result;

                    Partition root;
                    root.count = 1;
                    root.cells[0] = _n == 64 ? ~Word{0} : (Word{1} << _n) - 1;
                    vector<Word> splitters{root.cells[0]};
                    refine(root, splitters);
                    search(root, 0, true);

                    result.form = _best_form;
                    result.vertex_at = _best_lab;
                    return result;
                }

            private:
                auto refine(Partition & p, vector<Word> & queue) -> void
                {
                    array<int, small_graph_cap> count_of{};
                    for (std::size_t head = 0 ; head < queue.size() && p.count < _n ; ++head) {
                        Word splitter = queue[head];
                        for (int i = 0 ; i < p.count ; ++i) {
                            Word cell = p.cells[i];
                            if (std::popcount(cell) == 1)
                                continue;

                            int lo = small_graph_cap, hi = -1;
                            for (Word b = cell ; b ; b &= b - 1) {
                                int v = std::countr_zero(b);
                                int c = std::popcount(_g.rows[v] & splitter);
                                count_of[v] = c;
                                lo = std::min(lo, c);
                                hi = std::max(hi, c);
                            }
                            if (lo == hi)
                                continue;

                            // Fragments in ascending neighbour count; positions depend only on
                            // the structure, never on vertex names.
                            array<Word, small_graph_cap + 1> by_count{};
                            for (Word b = cell ; b ; b &= b - 1) {
                                int v = std::countr_zero(b);
                                by_count[count_of[v]] |= Word{1} << v;
                            }
                            vector<Word> fragments;
                            for (int c = lo ; c <= hi ; ++c)
                                if (by_count[c])
                                    fragments.push_back(by_count[c]);

                            int extra = int(fragments.size()) - 1;
                            for (int j = p.count - 1 ; j > i ; --j)
                                p.cells[j + extra] = p.cells[j];
                            for (std::size_t f = 0 ; f < fragments.size() ; ++f) {
                                p.cells[i + f] = fragments[f];
                                queue.push_back(fragments[f]);
                            }
                            p.count += extra;
                            i += extra;
                        }
                    }
                }

                auto leaf_form(const Partition & p, Perm & vertex_at) const -> SmallRows
                {
                    Perm label{};
                    for (int k = 0 ; k < _n ; ++k) {
                        int v = std::countr_zero(p.cells[k]);
                        vertex_at[k] = uint8_t(v);
                        label[v] = uint8_t(k);
                    }
                    SmallRows form;
                    form.order = _n;
                    for (int k = 0 ; k < _n ; ++k) {
                        Word row = 0;
                        for (Word b = _g.rows[vertex_at[k]] ; b ; b &= b - 1)
                            row |= Word{1} << label[std::countr_zero(b)];
                        form.rows[k] = row;
                    }
                    return form;
                }

                auto record_automorphism(const Perm & from, const Perm & to) -> void
                {
                    // Maps from[k] -> to[k]; both leaves give the same form, so this
                    // preserves adjacency.
                    Perm gamma{};
                    bool identity = true;
                    for (int k = 0 ; k < _n ; ++k) {
                        gamma[from[k]] = to[k];
                        identity = identity && from[k] == to[k];
                    }
                    if (! identity)
                        _automorphisms.push_back(gamma);
                }

                // Returns the depth at which the search should resume, or -1 to carry on
                // normally.
                auto leaf(const Partition & p, int depth) -> int
                {
                    Perm vertex_at{};
                    auto form = leaf_form(p, vertex_at);

                    if (! _have_first) {
                        _have_first = true;
                        _first_form = _best_form = form;
                        _first_lab = _best_lab = vertex_at;
                        _first_path.assign(_path.begin(), _path.begin() + depth);
                        return -1;
                    }

                    if (form == _first_form) {
                        // The automorphism fixes the common prefix with the first path and
                        // maps the first-path child there onto this branch, so the rest of
                        // this branch repeats work already done.
                        record_automorphism(_first_lab, vertex_at);
                        int common = 0;
                        while (common < depth && _path[common] == _first_path[common])
                            ++common;
                        return common;
                    }

                    if (form == _best_form)
                        record_automorphism(_best_lab, vertex_at);
                    else if (form < _best_form) {
                        _best_form = form;
                        _best_lab = vertex_at;
                    }
                    return -1;
                }

                auto orbit_roots(int depth) const -> array<uint8_t, small_graph_cap>
                {
                    array<uint8_t, small_graph_cap> parent{};
                    std::iota(parent.begin(), parent.begin() + _n, 0);
                    auto find = [&] (int x) {
                        while (parent[x] != x)
                            x = parent[x] = parent[parent[x]];
                        return x;
                    };
                    for (auto & gamma : _automorphisms) {
                        bool fixes_prefix = true;
                        for (int d = 0 ; d < depth && fixes_prefix ; ++d)
                            fixes_prefix = gamma[_first_path[d]] == _first_path[d];
                        if (! fixes_prefix)
                            continue;
                        for (int v = 0 ; v < _n ; ++v) {
                            int a = find(v), b = find(gamma[v]);
                            if (a != b)
                                parent[std::max(a, b)] = uint8_t(std::min(a, b));
                        }
                    }
                    for (int v = 0 ; v < _n ; ++v)
                        parent[v] = uint8_t(find(v));
                    return parent;
                }

                auto search(const Partition & p, int depth, bool on_first_path) -> int
                {
                    if (p.count == _n)
                        return leaf(p, depth);

                    int target = 0;
                    while (std::popcount(p.cells[target]) == 1)
                        ++target;
                    Word cell = p.cells[target];

                    if (int(_path.size()) <= depth)
                        _path.resize(depth + 1);

                    Word explored = 0;
                    for (Word b = cell ; b ; b &= b - 1) {
                        int v = std::countr_zero(b);

                        if (on_first_path && explored) {
                            auto roots = orbit_roots(depth);
                            bool seen = false;
                            for (Word e = explored ; e && ! seen ; e &= e - 1)
                                seen = roots[std::countr_zero(e)] == roots[v];
                            if (seen)
                                continue;
                        }

                        Partition child = p;
                        for (int j = child.count - 1 ; j > target ; --j)
                            child.cells[j + 1] = child.cells[j];
                        child.cells[target] = Word{1} << v;
                        child.cells[target + 1] = cell & ~(Word{1} << v);
                        ++child.count;
                        vector<Word> splitters{Word{1} << v};
                        refine(child, splitters);

                        _path[depth] = v;
                        bool child_first = on_first_path && (! _have_first || _first_path[depth] == v);
                        int resume = search(child, depth + 1, child_first);
                        explored |= Word{1} << v;
                        if (resume >= 0 && resume < depth)
                            return resume;
                    }
                    return -1;
                }

                const SmallRows & _g;
                int _n;
                bool _have_first = false;
                SmallRows _first_form, _best_form;
                Perm _first_lab{}, _best_lab{};
                vector<int> _first_path, _path;
                vector<Perm> _automorphisms;
        };
    }

    auto canonical_labelling(const SmallRows & g) -> CanonicalLabelling
    {
        if (g.order < 0 || g.order > small_graph_cap)
            throw CapacityError{"canonical forms need order <= 64"};
        return Canoniser{g}.run();
    }

    auto canonical_form(const Graph & g) -> Graph
    {
        return to_graph(canonical_labelling(to_small_rows(g)).form);
    }
}
