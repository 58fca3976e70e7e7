#include <fmtlab/cli.hpp>
#include <fmtlab/bottleneck.hpp>
#include <fmtlab/builtins.hpp>
#include <fmtlab/error.hpp>
#include <fmtlab/evaluate.hpp>
#include <fmtlab/families.hpp>
#include <fmtlab/hom_solver.hpp>
#include <fmtlab/minors.hpp>
#include <fmtlab/structure_io.hpp>
#include <fmtlab/suites.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

using std::string;
using std::vector;

namespace fmtlab
{
    namespace
    {
        // Bad input from the user: reported with the grammar, exit code 2.
        class UsageError : public std::runtime_error
        {
            public:
                using std::runtime_error::runtime_error;
        };

        auto read_file(const string & path) -> string
        {
            std::ifstream in(path);
            if (! in)
                throw UsageError("cannot open " + path);
            std::stringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto load(const string & path) -> Structure
        {
            if (! std::filesystem::is_regular_file(path))
                throw UsageError("no such file: " + path);
            return load_structure(path);
        }

        auto resolve_formula(const string & text) -> Formula
        {
            if (auto f = builtin_formula(text))
                return *f;
            if (std::filesystem::is_regular_file(text))
                return parse_formula(read_file(text));
            if (! text.empty() && (text.front() == '(' || text == "true" || text == "false"))
                return parse_formula(text);
            throw UsageError("unknown formula '" + text + "': not a built-in name, a file or an s-expression");
        }

        auto resolve_pattern(const string & text) -> Structure
        {
            if (auto p = pattern_by_name(text))
                return *p;
            return load(text);
        }

        auto constraints_for(const string & name) -> HomConstraints
        {
            HomConstraints c;
            if (name == "injective")
                c.injective = true;
            else if (name == "full")
                c.full = true;
            else if (name == "strong")
                c.strong = true;
            else if (name == "embedding")
                c = HomConstraints::embedding();
            return c;
        }

        auto satisfies(const HomKind & kind, const string & name) -> bool
        {
            if (name == "injective")
                return kind.injective;
            if (name == "full")
                return kind.full;
            if (name == "strong")
                return kind.strong;
            if (name == "embedding")
                return kind.embedding;
            return true;
        }

        auto images(const Mapping & map) -> string
        {
            string s = "map";
            for (int x : map)
                s += " " + std::to_string(x);
            return s;
        }

        auto list(const vector<int> & xs) -> string
        {
            string s = "{";
            for (size_t i = 0 ; i < xs.size() ; ++i)
                s += (i ? "," : "") + std::to_string(xs[i]);
            return s + "}";
        }
    }

    auto usage() -> string
    {
        return "usage:\n"
            "  fmtlab gen <family:params> [-o FILE]\n"
            "  fmtlab eval -f FORMULA -s FILE\n"
            "  fmtlab hom -A FILE -B FILE [--exists|--all|--count] [--require injective|full|strong|embedding]\n"
            "  fmtlab minor -G FILE -H PATTERN\n"
            "  fmtlab chrom -G FILE\n"
            "  fmtlab bottleneck -G FILE -r R -m M [--cap C]\n"
            "  fmtlab verify SUITE [--size N] [--jobs N]\n";
    }

    auto dispatch(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Finite model theory laboratory", "fmtlab" };
        app.require_subcommand(1, 1);

        string family, output;
        auto gen_cmd = app.add_subcommand("gen", "Generate a structure from a family");
        gen_cmd->add_option("spec", family, "family:params")->required();
        gen_cmd->add_option("-o", output, "Output file");

        string formula_text, structure_file;
        auto eval_cmd = app.add_subcommand("eval", "Evaluate a sentence on a structure");
        eval_cmd->add_option("-f", formula_text, "Built-in name, file or s-expression")->required();
        eval_cmd->add_option("-s", structure_file, "Structure file")->required();

        string source_file, target_file, require;
        bool want_exists = false, want_all = false, want_count = false;
        auto hom_cmd = app.add_subcommand("hom", "Search homomorphisms");
        hom_cmd->add_option("-A", source_file, "Source structure")->required();
        hom_cmd->add_option("-B", target_file, "Target structure")->required();
        auto exists_flag = hom_cmd->add_flag("--exists", want_exists);
        auto all_flag = hom_cmd->add_flag("--all", want_all);
        auto count_flag = hom_cmd->add_flag("--count", want_count);
        exists_flag->excludes(all_flag)->excludes(count_flag);
        all_flag->excludes(count_flag);
        hom_cmd->add_option("--require", require)->check(CLI::IsMember({ "injective", "full", "strong", "embedding" }));

        string graph_file, pattern;
        auto minor_cmd = app.add_subcommand("minor", "Test for a minor");
        minor_cmd->add_option("-G", graph_file, "Graph file")->required();
        minor_cmd->add_option("-H", pattern, "k4, k5, k33, k23 or a structure file")->required();

        auto chrom_cmd = app.add_subcommand("chrom", "Chromatic number");
        chrom_cmd->add_option("-G", graph_file, "Graph file")->required();

        int radius = 0, independent = 0, cap = 3;
        auto bottleneck_cmd = app.add_subcommand("bottleneck", "Search for a bottleneck set");
        bottleneck_cmd->add_option("-G", graph_file, "Structure file")->required();
        bottleneck_cmd->add_option("-r", radius, "Radius")->required()->check(CLI::PositiveNumber);
        bottleneck_cmd->add_option("-m", independent, "Size of the independent set")->required()->check(CLI::PositiveNumber);
        bottleneck_cmd->add_option("--cap", cap, "Largest bottleneck tried")->check(CLI::NonNegativeNumber);

        string suite;
        SuiteOptions suite_options;
        auto verify_cmd = app.add_subcommand("verify", "Run a verification suite");
        verify_cmd->add_option("suite", suite, "Suite name")->required();
        verify_cmd->add_option("--size", suite_options.size, "Cap on family parameters")->check(CLI::NonNegativeNumber);
        verify_cmd->add_option("--jobs", suite_options.jobs, "Worker threads")->check(CLI::PositiveNumber);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return 0;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << '\n' << usage();
            return 2;
        }

        try {
            if (gen_cmd->parsed()) {
                auto s = gen(family);
                if (output.empty())
                    write_structure(s, out);
                else
                    save_structure(s, output);
                return 0;
            }
            if (eval_cmd->parsed()) {
                auto f = resolve_formula(formula_text);
                auto s = load(structure_file);
                check_vocabulary(f, s.vocabulary());
                if (! free_variables(f).empty())
                    throw UsageError("the formula has free variables");
                out << (evaluate(f, s) ? "true" : "false") << '\n';
                return 0;
            }
            if (hom_cmd->parsed()) {
                auto a = load(source_file);
                auto b = load(target_file);
                if (want_all) {
                    auto homs = enumerate_homs(a, b);
                    bool all = true;
                    for (auto & h : homs) {
                        out << images(h.map()) << '\n';
                        all = all && satisfies(h.kind(), require);
                    }
                    out << "count " << homs.size() << '\n';
                    if (! require.empty()) {
                        out << "all-" << require << ": " << (all ? "true" : "false") << '\n';
                        return all ? 0 : 1;
                    }
                    return 0;
                }
                auto constraints = constraints_for(require);
                if (want_count) {
                    out << count_homs(a, b, constraints) << '\n';
                    return 0;
                }
                auto h = find_hom(a, b, constraints);
                out << (h ? "true" : "false") << '\n';
                if (h)
                    out << images(h->map()) << '\n';
                return 0;
            }
            if (minor_cmd->parsed()) {
                out << (has_minor(load(graph_file), resolve_pattern(pattern)) ? "true" : "false") << '\n';
                return 0;
            }
            if (chrom_cmd->parsed()) {
                auto g = load(graph_file);
                if (! g.is_graph())
                    throw UsageError("chrom needs a graph");
                out << chromatic_number(g) << '\n';
                return 0;
            }
            if (bottleneck_cmd->parsed()) {
                BottleneckOptions options;
                options.cap = cap;
                auto found = find_bottleneck(load(graph_file), radius, independent, options);
                if (! found) {
                    out << "none\n";
                    return 0;
                }
                out << "S " << list(found->removed) << '\n'
                    << "A " << list(found->independent) << '\n'
                    << "complete-bipartite " << (found->complete_bipartite ? "true" : "false") << '\n';
                return 0;
            }
            if (verify_cmd->parsed()) {
                auto names = suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end()) {
                    string known;
                    for (auto & n : names)
                        known += " " + n;
                    throw UsageError("unknown suite '" + suite + "'; known suites:" + known);
                }
                auto report = run_suite(suite, suite_options);
                for (auto & line : report.lines)
                    out << line << '\n';
                out << "result " << report.name << (report.passed ? " pass" : " fail") << '\n';
                return report.passed ? 0 : 1;
            }
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << '\n' << usage();
            return 2;
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
        catch (const VocabularyMismatch & e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
        catch (const std::invalid_argument & e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
        err << usage();
        return 2;
    }
}
