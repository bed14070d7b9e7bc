#include <ramsey_lab/graph6.hh>
#include <ramsey_lab/errors.hh>

#include <cstdint>

using std::size_t;
using std::string;
using std::string_view;

namespace ramsey_lab
{
    namespace
    {
        constexpr int graph6_bias = 63;

        auto sextet(string_view text, size_t pos) -> int
        {
            if (pos >= text.size())
                throw ParseError{"unexpected end of graph6 string", pos};
            int c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw ParseError{"byte outside the graph6 range 63..126", pos};
            return c - graph6_bias;
        }
    }

    auto parse_graph6(string_view text) -> Graph
    {
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        if (text.empty())
            throw ParseError{"empty graph6 string", 0};

        size_t pos = 0;
        std::int64_t order = sextet(text, pos++);
        if (order == 63) {
            int width = 3;
            if (sextet(text, pos) == 63) {
                ++pos;
                width = 6;
            }
            order = 0;
            for (int i = 0 ; i < width ; ++i)
                order = (order << 6) | sextet(text, pos++);
        }
        if (order > max_graph_order)
            throw ParseError{"graph order " + std::to_string(order) + " exceeds representation cap", 0};

        int n = int(order);
        std::int64_t bit_count = std::int64_t(n) * (n - 1) / 2;
        size_t expected = pos + size_t((bit_count + 5) / 6);
        if (text.size() < expected)
            throw ParseError{"graph6 string too short for order " + std::to_string(n), text.size()};
        if (text.size() > expected)
            throw ParseError{"trailing bytes after graph6 data", expected};

        GraphBuilder builder{n};
        std::int64_t k = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++k) {
                size_t byte = pos + size_t(k / 6);
                int bits = sextet(text, byte);
                if ((bits >> (5 - k % 6)) & 1)
                    builder.add_edge(i, j);
            }
        // Padding bits in the final sextet must be zero.
        if (k % 6 != 0) {
            int bits = sextet(text, expected - 1);
            if (bits & ((1 << (6 - k % 6)) - 1))
                throw ParseError{"non-zero padding bits", expected - 1};
        }
        return std::move(builder).build();
    }

    auto write_graph6(const Graph & g) -> string
    {
        string result;
        std::int64_t n = g.order();
        if (n <= 62)
            result.push_back(char(n + graph6_bias));
        else if (n <= 258047) {
            result.push_back(char(126));
            for (int shift = 12 ; shift >= 0 ; shift -= 6)
                result.push_back(char(((n >> shift) & 63) + graph6_bias));
        }
        else {
            result.push_back(char(126));
            result.push_back(char(126));
            for (int shift = 30 ; shift >= 0 ; shift -= 6)
                result.push_back(char(((n >> shift) & 63) + graph6_bias));
        }

        int acc = 0, filled = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    result.push_back(char(acc + graph6_bias));
                    acc = filled = 0;
                }
            }
        if (filled > 0)
            result.push_back(char((acc << (6 - filled)) + graph6_bias));
        return result;
    }

    auto read_graph6_corpus(std::istream & in) -> std::vector<CorpusEntry>
    {
        std::vector<CorpusEntry> result;
        string line;
        size_t offset = 0;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            size_t line_start = offset;
            offset += line.size() + 1;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            try {
                result.push_back(CorpusEntry{line_number, parse_graph6(line)});
            }
            catch (const ParseError & e) {
                throw ParseError{"line " + std::to_string(line_number) + ": malformed graph6", line_start + e.offset()};
            }
        }
        return result;
    }
}
