#pragma once

#include <ramsey_lab/graph.hh>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey_lab
{
    // graph6 encoding, without the optional ">>graph6<<" header. Throws ParseError
    // carrying the offending byte offset.
    auto parse_graph6(std::string_view text) -> Graph;
    auto write_graph6(const Graph & g) -> std::string;

    struct CorpusEntry
    {
        int line = 0;
        Graph graph;
    };

    // One graph per line; blank lines and lines starting with '#' are skipped. Parse
    // errors report the offset from the start of the stream.
    auto read_graph6_corpus(std::istream & in) -> std::vector<CorpusEntry>;
}
