#pragma once

#include <fmtlab/formula.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fmtlab
{
    /// psi(x, z): z has exactly two distinct neighbours other than x.
    auto psi_bouquet() -> Formula;

    /// Some vertex x with a neighbour such that every other vertex within
    /// distance 2 of x is adjacent to x and satisfies psi(x, z).
    /// Holds exactly on graphs with a bouquet of cycles as a free induced subgraph.
    auto phi_bouquet() -> Formula;

    /// chi(x1, x2, y1, z1, y2, z2): the six edges attaching a new rung (y2, z2).
    auto chi6() -> Formula;

    /// exists x1 x2 y z, a path x1 y z x2, such that every such path x1 a b x2
    /// extends by a chi rung.
    auto phi_planar() -> Formula;

    /// phi_planar or a K4.
    auto phi_hat() -> Formula;

    /// exists x1..x4 pairwise adjacent.
    auto k4_sentence() -> Formula;

    auto builtin_formula(std::string_view name) -> std::optional<Formula>;
    auto builtin_names() -> std::vector<std::string>;
}
