#include <ramsey_lab/patterns.hh>
#include <ramsey_lab/constructions.hh>
#include <ramsey_lab/errors.hh>

#include <algorithm>
#include <array>
#include <charconv>
#include <string>

using std::string;
using std::string_view;

namespace ramsey_lab
{
    auto PatternSpec::make(PatternKind kind, int parameter) -> PatternSpec
    {
        int minimum = (kind == PatternKind::Cycle || kind == PatternKind::Wheel) ? 3 : 1;
        if (parameter < minimum)
            throw ArgumentError{string{kind_name(kind)} + " needs parameter >= " + std::to_string(minimum)};
        if (parameter > max_graph_order - 2)
            throw CapacityError{string{kind_name(kind)} + " parameter too large to realise"};
        return PatternSpec{kind, parameter};
    }

    auto kind_name(PatternKind kind) -> string_view
    {
        switch (kind) {
            case PatternKind::Star:   return "star";
            case PatternKind::K2n:    return "k2n";
            case PatternKind::Book:   return "book";
            case PatternKind::Cycle:  return "cycle";
            case PatternKind::Wheel:  return "wheel";
            case PatternKind::Clique: return "clique";
        }
        return "?";
    }

    auto parse_pattern(string_view text) -> PatternSpec
    {
        auto colon = text.find(':');
        if (colon == string_view::npos)
            throw ArgumentError{"pattern '" + string{text} + "' should look like kind:parameter"};

        auto name = text.substr(0, colon), value = text.substr(colon + 1);
        int parameter = 0;
        auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), parameter);
        if (ec != std::errc{} || end != value.data() + value.size())
            throw ArgumentError{"pattern parameter '" + string{value} + "' is not an integer"};

        for (auto kind : {PatternKind::Star, PatternKind::K2n, PatternKind::Book,
                PatternKind::Cycle, PatternKind::Wheel, PatternKind::Clique})
            if (kind_name(kind) == name)
                return PatternSpec::make(kind, parameter);

        throw ArgumentError{"unknown pattern kind '" + string{name} + "' (expected star, k2n, book, cycle, wheel or clique)"};
    }

    auto to_string(const PatternSpec & p) -> string
    {
        return string{kind_name(p.kind)} + ":" + std::to_string(p.parameter);
    }

    auto burr_parameters(const PatternSpec & p) -> BurrParameters
    {
        int x = p.parameter;
        switch (p.kind) {
            case PatternKind::Star:   return {x + 1, 2, 1};
            case PatternKind::K2n:    return {x + 2, 2, std::min(2, x)};
            case PatternKind::Book:   return {x + 2, 3, 1};
            case PatternKind::Cycle:  return x % 2 == 0 ? BurrParameters{x, 2, x / 2} : BurrParameters{x, 3, 1};
            case PatternKind::Wheel:  return {x + 1, x % 2 == 0 ? 3 : 4, 1};
            case PatternKind::Clique: return {x, x, 1};
        }
        throw ArgumentError{"unknown pattern kind"};
    }

    auto realize(const PatternSpec & p) -> Graph
    {
        int x = p.parameter;
        switch (p.kind) {
            case PatternKind::Star:
                return join(empty_graph(1), empty_graph(x));
            case PatternKind::K2n: {
                std::array<int, 2> parts{2, x};
                return complete_multipartite(parts);
            }
            case PatternKind::Book:
                return join(complete_graph(2), empty_graph(x));
            case PatternKind::Cycle:
                return cycle_graph(x);
            case PatternKind::Wheel:
                return join(empty_graph(1), cycle_graph(x));
            case PatternKind::Clique:
                return complete_graph(x);
        }
        throw ArgumentError{"unknown pattern kind"};
    }

    auto burr_lower_bound(const PatternSpec & g, const PatternSpec & h) -> long long
    {
        // Every realisable kind is connected, so only the surplus condition can fail.
        auto gp = burr_parameters(g), hp = burr_parameters(h);
        if (gp.order < hp.surplus)
            throw HypothesisError{"Burr bound needs |V(" + to_string(g) + ")| >= sigma(" + to_string(h) + ")"};
        return (long long)(gp.order - 1) * (hp.chromatic_number - 1) + hp.surplus;
    }
}
