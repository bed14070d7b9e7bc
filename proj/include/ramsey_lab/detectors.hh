#pragma once

#include <ramsey_lab/graph.hh>
#include <ramsey_lab/patterns.hh>

#include <optional>
#include <vector>

namespace ramsey_lab
{
    // Outcome of a containment query. When found, the witness is laid out by pattern:
    //   star    centre = hub, leaves = vertices
    //   k2n     the two high-degree vertices = pair, common neighbours = vertices
    //   book    spine = pair (adjacent), pages = vertices
    //   cycle   vertices in cyclic order
    //   wheel   hub, rim in cyclic order = vertices
    //   clique  members = vertices
    struct WitnessReport
    {
        bool found = false;
        PatternSpec pattern;
        std::optional<int> hub;
        std::vector<int> pair;
        std::vector<int> vertices;
    };

    // Exact detectors. Witnesses are the lexicographically least under vertex order:
    // least pair then least common neighbours; least anchor then least cyclic sequence.
    auto find_k2n(const Graph & g, int n) -> WitnessReport;
    auto find_book(const Graph & g, int n) -> WitnessReport;
    auto find_star(const Graph & g, int n) -> WitnessReport;
    auto find_clique(const Graph & g, int k) -> WitnessReport;

    // Throws ArgumentError unless 3 <= m <= g.order().
    auto find_cycle_of_length(const Graph & g, int m) -> WitnessReport;

    // Cycle on exactly m vertices, all drawn from `allowed`. No range check.
    auto find_cycle_within(const Graph & g, const VertexSet & allowed, int m) -> std::optional<std::vector<int>>;

    // The hub is the least-indexed vertex whose neighbourhood holds a C_m.
    auto find_wheel(const Graph & g, int m) -> WitnessReport;

    auto find_pattern(const Graph & g, const PatternSpec & p) -> WitnessReport;

    // Existence only. Wheels are tried hub by hub in descending degree order, so this can
    // stop much earlier than find_wheel.
    auto contains_pattern(const Graph & g, const PatternSpec & p) -> bool;

    // Recheck a report against the host: distinct vertices, every required edge present,
    // and the witness shape matching the pattern parameter.
    auto verify_witness(const Graph & host, const WitnessReport & w) -> bool;

    inline constexpr int default_spectrum_cap = 16;

    struct CycleSpectrum
    {
        std::optional<int> girth;
        int even_circumference = 0;     // 0 if no even cycle
        int odd_circumference = 0;      // 0 if no odd cycle
        std::vector<int> lengths;       // ascending

        friend auto operator==(const CycleSpectrum &, const CycleSpectrum &) -> bool = default;
    };

    // Every cycle length present in g. Exponential; throws CapacityError above `cap` vertices.
    auto cycle_spectrum(const Graph & g, int cap = default_spectrum_cap) -> CycleSpectrum;
}
