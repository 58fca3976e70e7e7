#include <fmtlab/structure_io.hpp>
#include <fmtlab/error.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace fmtlab
{
    namespace
    {
        auto split(string_view line) -> vector<string_view>
        {
            vector<string_view> words;
            size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                size_t j = i;
                while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                    ++j;
                if (j > i)
                    words.push_back(line.substr(i, j - i));
                i = j;
            }
            return words;
        }

        auto to_int(string_view word, size_t offset) -> int
        {
            int value = 0;
            auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || end != word.data() + word.size() || value < 0)
                throw ParseError("expected a non-negative integer, got '" + string(word) + "'", offset);
            return value;
        }
    }

    auto parse_structure(string_view text) -> Structure
    {
        std::optional<Vocabulary> vocabulary;
        std::optional<StructureBuilder> builder;
        bool graph_form = false;
        vector<std::pair<int, string>> labels;

        size_t offset = 0;
        while (offset <= text.size()) {
            size_t end = text.find('\n', offset);
            if (end == string_view::npos)
                end = text.size();
            string_view line = text.substr(offset, end - offset);
            size_t at = offset;
            offset = end + 1;

            auto words = split(line);
            if (words.empty())
                continue;

            if (words[0].starts_with('#')) {
                if (words[0] == "#" && words.size() == 4 && words[1] == "label")
                    labels.emplace_back(to_int(words[2], at), string(words[3]));
                continue;
            }

            auto need_builder = [&] {
                if (! builder)
                    throw ParseError("'" + string(words[0]) + "' before the domain header", at);
            };

            if (words[0] == "vocab") {
                if (vocabulary || builder)
                    throw ParseError("duplicate vocab line", at);
                vector<Symbol> symbols;
                for (size_t i = 1 ; i < words.size() ; ++i) {
                    auto slash = words[i].find('/');
                    if (slash == string_view::npos || slash == 0)
                        throw ParseError("expected NAME/ARITY, got '" + string(words[i]) + "'", at);
                    symbols.push_back(Symbol{ string(words[i].substr(0, slash)), to_int(words[i].substr(slash + 1), at) });
                }
                try {
                    vocabulary = Vocabulary{ std::move(symbols) };
                }
                catch (const std::invalid_argument & e) {
                    throw ParseError(e.what(), at);
                }
            }
            else if (words[0] == "domain") {
                if (! vocabulary)
                    throw ParseError("domain line before vocab line", at);
                if (builder || words.size() != 2)
                    throw ParseError("malformed domain line", at);
                builder.emplace(*vocabulary, to_int(words[1], at));
            }
            else if (words[0] == "graph") {
                if (vocabulary || builder || words.size() != 2)
                    throw ParseError("malformed graph header", at);
                builder.emplace(StructureBuilder::graph(to_int(words[1], at)));
                graph_form = true;
            }
            else if (words[0] == "tuple") {
                need_builder();
                if (graph_form)
                    throw ParseError("tuple line in a graph file", at);
                if (words.size() < 2)
                    throw ParseError("tuple line without a symbol", at);
                auto symbol = vocabulary->index_of(words[1]);
                if (! symbol)
                    throw ParseError("unknown symbol '" + string(words[1]) + "'", at);
                Tuple t;
                for (size_t i = 2 ; i < words.size() ; ++i)
                    t.push_back(to_int(words[i], at));
                if (static_cast<int>(t.size()) != (*vocabulary)[*symbol].arity)
                    throw ParseError("arity mismatch for '" + string(words[1]) + "'", at);
                try {
                    builder->add(*symbol, std::move(t));
                }
                catch (const std::exception & e) {
                    throw ParseError(e.what(), at);
                }
            }
            else if (words[0] == "edge") {
                need_builder();
                if (! graph_form)
                    throw ParseError("edge line outside a graph file", at);
                if (words.size() != 3)
                    throw ParseError("edge line needs two endpoints", at);
                try {
                    builder->add_edge(to_int(words[1], at), to_int(words[2], at));
                }
                catch (const ParseError &) {
                    throw;
                }
                catch (const std::exception & e) {
                    throw ParseError(e.what(), at);
                }
            }
            else
                throw ParseError("unknown directive '" + string(words[0]) + "'", at);
        }

        if (! builder)
            throw ParseError("missing domain or graph header", text.size());
        for (auto & [v, name] : labels) {
            if (v >= builder->size())
                throw ParseError("label for element outside the domain", text.size());
            builder->set_label(v, name);
        }
        return builder->build();
    }

    auto read_structure(std::istream & in) -> Structure
    {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_structure(buffer.str());
    }

    auto load_structure(const std::filesystem::path & path) -> Structure
    {
        std::ifstream in(path);
        if (! in)
            throw Error("cannot open " + path.string());
        return read_structure(in);
    }

    auto format_structure(const Structure & s) -> string
    {
        std::ostringstream out;
        if (s.is_graph()) {
            out << "graph " << s.size() << '\n';
        }
        else {
            out << "vocab " << s.vocabulary().to_string() << '\n';
            out << "domain " << s.size() << '\n';
        }
        if (s.has_labels())
            for (int v = 0 ; v < s.size() ; ++v)
                if (! s.label(v).empty())
                    out << "# label " << v << ' ' << s.label(v) << '\n';
        if (s.is_graph()) {
            for (auto [u, v] : s.gaifman_edges())
                out << "edge " << u << ' ' << v << '\n';
        }
        else {
            for (size_t r = 0 ; r < s.vocabulary().size() ; ++r)
                for (auto & t : s.tuples(r)) {
                    out << "tuple " << s.vocabulary()[r].name;
                    for (int x : t)
                        out << ' ' << x;
                    out << '\n';
                }
        }
        return out.str();
    }

    auto write_structure(const Structure & s, std::ostream & out) -> void
    {
        out << format_structure(s);
    }

    auto save_structure(const Structure & s, const std::filesystem::path & path) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw Error("cannot write " + path.string());
        write_structure(s, out);
    }
}
