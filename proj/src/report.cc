#include <ramsey_lab/report.hh>
#include <ramsey_lab/graph6.hh>

namespace ramsey_lab
{
    namespace
    {
        auto rational_json(const Rational & r) -> Json
        {
            return Json{{"numerator", r.numerator()}, {"denominator", r.denominator()}};
        }
    }

    auto to_json(const VertexSet & s) -> Json
    {
        return s.to_vector();
    }

    auto to_json(const PatternSpec & p) -> Json
    {
        return to_string(p);
    }

    auto to_json(const WitnessReport & w) -> Json
    {
        Json j;
        j["pattern"] = to_json(w.pattern);
        j["found"] = w.found;
        if (w.found) {
            if (w.hub)
                j["hub"] = *w.hub;
            if (! w.pair.empty())
                j["pair"] = w.pair;
            j["vertices"] = w.vertices;
        }
        return j;
    }

    auto to_json(const CycleSpectrum & s) -> Json
    {
        Json j;
        j["girth"] = s.girth ? Json(*s.girth) : Json(nullptr);
        j["even_circumference"] = s.even_circumference;
        j["odd_circumference"] = s.odd_circumference;
        j["lengths"] = s.lengths;
        return j;
    }

    auto to_json(const BipartitenessCertificate & c) -> Json
    {
        Json j;
        j["bipartite"] = c.bipartite;
        if (c.bipartite) {
            j["side_a"] = to_json(c.side_a);
            j["side_b"] = to_json(c.side_b);
        }
        else
            j["odd_cycle"] = c.odd_cycle;
        return j;
    }

    auto to_json(const DecompositionReport & d) -> Json
    {
        Json j;
        if (d.threshold_fraction) {
            j["threshold_fraction"] = rational_json(*d.threshold_fraction);
            j["standard_fraction"] = d.standard_fraction;
        }
        j["P"] = to_json(d.null_set);
        j["Q"] = to_json(d.dense_set);
        j["U"] = to_json(d.cut_set);
        Json parts = Json::array();
        for (auto & c : d.components)
            parts.push_back(to_json(c));
        j["components"] = parts;
        j["hypotheses_met"] = d.hypotheses_met;
        j["found"] = d.found;
        return j;
    }

    auto to_json(const MomentReport & m) -> Json
    {
        Json j;
        j["d"] = m.d;
        j["size_a"] = m.size_a;
        j["size_b"] = m.size_b;
        j["bound"] = rational_json(m.bound);
        j["best_pair"] = {m.best_pair.first, m.best_pair.second};
        j["best_intersection"] = m.best_intersection;
        j["strict_bound_holds"] = m.strict_bound_holds;
        j["averaging_regime"] = m.averaging_regime;
        return j;
    }

    auto to_json(const LemmaVerdict & v) -> Json
    {
        Json j;
        j["lemma_id"] = v.lemma_id;
        j["hypotheses_met"] = v.hypotheses_met;
        j["conclusion_holds"] = v.conclusion_holds;
        j["asymptotic"] = v.asymptotic;
        j["diagnostics"] = v.diagnostics;
        return j;
    }

    auto to_json(const RamseyRun & r) -> Json
    {
        Json j;
        j["g"] = to_json(r.g);
        j["h"] = to_json(r.h);
        j["burr_bound"] = r.burr_bound ? Json(*r.burr_bound) : Json(nullptr);
        j["value"] = r.value ? Json(*r.value) : Json(nullptr);
        j["bounded"] = r.bounded;
        j["lower_bound"] = r.lower_bound;
        j["upper_bound"] = r.upper_bound ? Json(*r.upper_bound) : Json(nullptr);
        if (! r.stop_reason.empty())
            j["stop_reason"] = r.stop_reason;
        Json orders = Json::array();
        for (auto & o : r.per_order) {
            Json e;
            e["order"] = o.order;
            e["arrows"] = o.arrows;
            e["witness"] = o.witness_graph6 ? Json(*o.witness_graph6) : Json(nullptr);
            e["graphs_examined"] = o.graphs_examined;
            e["source"] = o.source;
            e["wall_time_ms"] = o.wall_time_ms;
            orders.push_back(e);
        }
        j["per_order"] = orders;
        return j;
    }

    auto analysis_summary(const Graph & g) -> Json
    {
        Json j;
        j["graph6"] = write_graph6(g);
        j["order"] = g.order();
        j["edges"] = g.edge_count();
        if (g.order() == 0)
            return j;

        std::vector<int> degrees;
        for (int v = 0 ; v < g.order() ; ++v)
            degrees.push_back(g.degree(v));
        j["degrees"] = degrees;
        j["max_degree"] = g.max_degree();
        j["min_degree"] = g.min_degree();
        if (g.order() >= 2) {
            auto sep = minimum_separator(g);
            j["connectivity"] = sep.connectivity;
            j["minimum_separator"] = to_json(sep.vertices);
        }
        else
            j["connectivity"] = nullptr;
        j["bipartiteness"] = to_json(bipartiteness(g));
        if (g.order() <= default_spectrum_cap)
            j["cycle_spectrum"] = to_json(cycle_spectrum(g));
        else
            j["cycle_spectrum"] = nullptr;
        j["dense_null_tenth"] = to_json(dense_null_decomposition(g, Rational(1, 10)));
        j["dense_null_sixth"] = to_json(dense_null_decomposition(g, Rational(1, 6)));
        return j;
    }

    auto to_json(const Envelope & e) -> Json
    {
        Json j;
        j["schema_version"] = report_schema_version;
        j["tool"] = "ramsey_lab";
        j["tool_version"] = tool_version;
        j["command"] = e.command;
        j["seed"] = e.seed;
        j["wall_time_ms"] = e.wall_time_ms;
        j["payload_kind"] = e.payload_kind;
        j["payload"] = e.payload;
        return j;
    }

    auto scrub_timings(Json report) -> Json
    {
        if (report.is_object()) {
            for (auto & [key, value] : report.items()) {
                if (key == "wall_time_ms")
                    value = 0;
                else
                    value = scrub_timings(value);
            }
        }
        else if (report.is_array())
            for (auto & value : report)
                value = scrub_timings(value);
        return report;
    }
}
