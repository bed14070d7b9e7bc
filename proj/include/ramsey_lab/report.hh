#pragma once

#include <ramsey_lab/arrowing.hh>
#include <ramsey_lab/detectors.hh>
#include <ramsey_lab/lemmas.hh>
#include <ramsey_lab/verdict.hh>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ramsey_lab
{
    using Json = nlohmann::ordered_json;

    inline constexpr int report_schema_version = 1;
    inline constexpr const char * tool_version = "0.1.0";

    auto to_json(const VertexSet & s) -> Json;
    auto to_json(const PatternSpec & p) -> Json;
    auto to_json(const WitnessReport & w) -> Json;
    auto to_json(const CycleSpectrum & s) -> Json;
    auto to_json(const BipartitenessCertificate & c) -> Json;
    auto to_json(const DecompositionReport & d) -> Json;
    auto to_json(const MomentReport & m) -> Json;
    auto to_json(const LemmaVerdict & v) -> Json;
    auto to_json(const RamseyRun & r) -> Json;

    // Degrees, connectivity, bipartiteness, cycle spectrum (when within the cap) and the
    // dense/null split at 1/10 and 1/6.
    auto analysis_summary(const Graph & g) -> Json;

    struct Envelope
    {
        std::vector<std::string> command;
        std::uint64_t seed = 0;
        double wall_time_ms = 0;
        std::string payload_kind;
        Json payload;
    };

    auto to_json(const Envelope & e) -> Json;

    // Zeroes every wall-time field, recursively, so two reports of the same run compare
    // byte-equal.
    auto scrub_timings(Json report) -> Json;
}
