#pragma once

#include <fmtlab/structure.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fmtlab
{
    /// Line format:
    ///   vocab E/2 P/1      graph 5
    ///   domain 5           edge 0 1
    ///   tuple E 0 1        ...
    /// Lines starting with # are comments, except "# label <id> <name>",
    /// which attaches a label to an element.
    auto parse_structure(std::string_view text) -> Structure;
    auto read_structure(std::istream & in) -> Structure;
    auto load_structure(const std::filesystem::path & path) -> Structure;

    /// Graphs are written in the graph form, everything else in the vocab form.
    auto format_structure(const Structure & s) -> std::string;
    auto write_structure(const Structure & s, std::ostream & out) -> void;
    auto save_structure(const Structure & s, const std::filesystem::path & path) -> void;
}
