#include <ramsey_lab/constructions.hh>
#include <ramsey_lab/graph6.hh>
#include <ramsey_lab/report.hh>

#include <doctest.h>

using namespace ramsey_lab;

TEST_CASE("vertex sets serialise sorted")
{
    CHECK(to_json(VertexSet::of(9, {7, 2, 5})).dump() == "[2,5,7]");
    CHECK(to_json(VertexSet{4}).dump() == "[]");
}

TEST_CASE("rationals serialise exactly")
{
    auto g = Graph::from_edges(3, {{0, 2}, {1, 2}});
    auto m = max_common_neighborhood(g, VertexSet::of(3, {0, 1}), VertexSet::of(3, {2}), 1, MomentMode::Bipartite);
    auto j = to_json(m);
    CHECK(j["bound"]["numerator"] == 1);
    CHECK(j["bound"]["denominator"] == 2);
    CHECK(j["best_pair"].dump() == "[0,1]");
}

TEST_CASE("analysis summary")
{
    auto j = analysis_summary(petersen_graph());
    CHECK(j["graph6"] == write_graph6(petersen_graph()));
    CHECK(j["order"] == 10);
    CHECK(j["edges"] == 15);
    CHECK(j["connectivity"] == 3);
    CHECK(j["bipartiteness"]["bipartite"] == false);
    CHECK(j["cycle_spectrum"]["lengths"].dump() == "[5,6,8,9]");
    CHECK(j["dense_null_tenth"]["P"].dump() == "[]");

    auto empty = analysis_summary(empty_graph(0));
    CHECK(empty["order"] == 0);
    CHECK(! empty.contains("degrees"));
    CHECK(analysis_summary(empty_graph(1))["connectivity"].is_null());
    CHECK(analysis_summary(cycle_graph(20))["cycle_spectrum"].is_null());
}

TEST_CASE("envelopes round-trip through text")
{
    Envelope e;
    e.command = {"ramsey", "--g", "k2n:1", "--h", "wheel:3"};
    e.seed = 12345678901234ULL;
    e.wall_time_ms = 3.5;
    e.payload_kind = "ramsey_run";
    e.payload = to_json(ramsey_number(PatternSpec::k2n(1), PatternSpec::wheel(3)));
    auto j = to_json(e);
    CHECK(j["schema_version"] == report_schema_version);
    CHECK(j["tool"] == "ramsey_lab");
    CHECK(j["seed"] == 12345678901234ULL);
    CHECK(j["payload"]["value"] == 7);
    CHECK(j["payload"]["per_order"][0]["witness"] == write_graph6(burr_construction(PatternSpec::k2n(1), PatternSpec::wheel(3))));

    auto text = j.dump(2);
    CHECK(Json::parse(text) == j);
    // key order is part of the format
    CHECK(j.begin().key() == "schema_version");
}

TEST_CASE("scrubbing zeroes every wall time and nothing else")
{
    Json j = {{"wall_time_ms", 9.5}, {"x", 1},
        {"inner", {{"wall_time_ms", 2.0}, {"list", Json::array({Json{{"wall_time_ms", 4}, {"y", 2}}})}}}};
    auto s = scrub_timings(j);
    CHECK(s["wall_time_ms"] == 0);
    CHECK(s["inner"]["wall_time_ms"] == 0);
    CHECK(s["inner"]["list"][0]["wall_time_ms"] == 0);
    CHECK(s["inner"]["list"][0]["y"] == 2);
    CHECK(s["x"] == 1);
    CHECK(j["wall_time_ms"] == 9.5);
}

TEST_CASE("verdicts carry their diagnostics")
{
    auto v = check_cycle_lemma_1(complete_graph(7), 3);
    auto j = to_json(v);
    CHECK(j["lemma_id"] == "cycle-lemma-1");
    CHECK(j["hypotheses_met"] == true);
    CHECK(j["diagnostics"]["lengths"].dump() == "[3,4,5,6,7]");
}
