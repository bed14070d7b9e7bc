#pragma once

#include <ramsey_lab/graph.hh>

#include <string>
#include <string_view>

namespace ramsey_lab
{
    enum class PatternKind
    {
        Star,       // K_{1,n}
        K2n,        // K_{2,n}
        Book,       // B_n = K_2 join (n independent vertices)
        Cycle,      // C_m
        Wheel,      // W_m = K_1 join C_m
        Clique      // K_k
    };

    // A parameterised target subgraph. Construct through PatternSpec::make or
    // parse_pattern so the parameter range is always checked.
    struct PatternSpec
    {
        PatternKind kind = PatternKind::Star;
        int parameter = 1;

        static auto make(PatternKind kind, int parameter) -> PatternSpec;

        static auto star(int n) -> PatternSpec { return make(PatternKind::Star, n); }
        static auto k2n(int n) -> PatternSpec { return make(PatternKind::K2n, n); }
        static auto book(int n) -> PatternSpec { return make(PatternKind::Book, n); }
        static auto cycle(int m) -> PatternSpec { return make(PatternKind::Cycle, m); }
        static auto wheel(int m) -> PatternSpec { return make(PatternKind::Wheel, m); }
        static auto clique(int k) -> PatternSpec { return make(PatternKind::Clique, k); }

        friend auto operator==(const PatternSpec &, const PatternSpec &) -> bool = default;
    };

    // Accepts "star:n", "k2n:n", "book:n", "cycle:m", "wheel:m", "clique:k".
    auto parse_pattern(std::string_view text) -> PatternSpec;
    auto to_string(const PatternSpec & p) -> std::string;
    auto kind_name(PatternKind kind) -> std::string_view;

    struct BurrParameters
    {
        int order = 0;              // vertices in the realisation
        int chromatic_number = 0;
        int surplus = 0;            // smallest colour class over optimal colourings
    };

    auto burr_parameters(const PatternSpec & p) -> BurrParameters;

    // Canonical realisations. Hubs and spines come first: the wheel hub is vertex 0 with
    // rim 1..m in cyclic order; book spine is {0,1}; the K_{2,n} pair is {0,1}; the star
    // centre is 0.
    auto realize(const PatternSpec & p) -> Graph;

    // (|V(g)|-1)(chi(h)-1)+sigma(h). Throws HypothesisError when the realisation of g is
    // not connected or |V(g)| < sigma(h).
    auto burr_lower_bound(const PatternSpec & g, const PatternSpec & h) -> long long;
}
