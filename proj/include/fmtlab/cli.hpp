#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fmtlab
{
    /// Runs one fmtlab command; args excludes the program name.
    /// Returns 0 on success, 1 when a check fails, 2 on a usage error.
    auto dispatch(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

    auto usage() -> std::string;
}
