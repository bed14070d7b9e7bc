#pragma once

#include <json.hpp>

#include <string>

namespace ramsey_lab
{
    // Outcome of checking one lemma on one concrete instance. conclusion_holds only
    // means something when hypotheses_met is true.
    struct LemmaVerdict
    {
        std::string lemma_id;
        bool hypotheses_met = false;
        bool conclusion_holds = false;
        // The lemma's proof needs an asymptotic regime (large n); at desk scale a
        // verdict is a counterexample search, never a confirmation.
        bool asymptotic = false;
        nlohmann::ordered_json diagnostics = nlohmann::ordered_json::object();

        auto counterexample() const -> bool { return hypotheses_met && ! conclusion_holds; }
    };
}
