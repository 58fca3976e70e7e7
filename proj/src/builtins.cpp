#include <fmtlab/builtins.hpp>

using namespace fmtlab::fo;

namespace fmtlab
{
    auto psi_bouquet() -> Formula
    {
        return exists({ "u", "v" }, conj({
                    neq("u", "v"), neq("u", "x"), neq("v", "x"),
                    edge("z", "u"), edge("z", "v"),
                    forall("w", implies(edge("w", "z"), disj({ eq("w", "u"), eq("w", "v"), eq("w", "x") })))
                    }));
    }

    auto phi_bouquet() -> Formula
    {
        return exists({ "x", "y" }, conj({
                    edge("x", "y"),
                    forall("z", implies(conj({ neq("z", "x"), dist_le(2, "x", "z") }),
                            conj({ edge("x", "z"), psi_bouquet() })))
                    }));
    }

    auto chi6() -> Formula
    {
        return conj({
                edge("x1", "y2"), edge("y1", "y2"), edge("z1", "y2"),
                edge("z1", "z2"), edge("y2", "z2"), edge("z2", "x2")
                });
    }

    auto phi_planar() -> Formula
    {
        // chi(x1, x2, a, b, c, d)
        auto rung = conj({
                edge("x1", "c"), edge("a", "c"), edge("b", "c"),
                edge("b", "d"), edge("c", "d"), edge("d", "x2")
                });
        return exists({ "x1", "x2", "y", "z" }, conj({
                    edge("x1", "y"), edge("y", "z"), edge("z", "x2"),
                    forall({ "a", "b" }, implies(conj({ edge("x1", "a"), edge("a", "b"), edge("b", "x2") }),
                            exists({ "c", "d" }, rung)))
                    }));
    }

    auto k4_sentence() -> Formula
    {
        std::vector<Formula> edges;
        for (int i = 1 ; i <= 4 ; ++i)
            for (int j = 1 ; j <= 4 ; ++j)
                if (i != j)
                    edges.push_back(edge("x" + std::to_string(i), "x" + std::to_string(j)));
        return exists({ "x1", "x2", "x3", "x4" }, conj(std::move(edges)));
    }

    auto phi_hat() -> Formula
    {
        return disj({ phi_planar(), k4_sentence() });
    }

    auto builtin_formula(std::string_view name) -> std::optional<Formula>
    {
        if (name == "psi_bouquet")
            return psi_bouquet();
        if (name == "phi_bouquet")
            return phi_bouquet();
        if (name == "chi6")
            return chi6();
        if (name == "phi_planar")
            return phi_planar();
        if (name == "phi_hat")
            return phi_hat();
        return std::nullopt;
    }

    auto builtin_names() -> std::vector<std::string>
    {
        return { "psi_bouquet", "phi_bouquet", "chi6", "phi_planar", "phi_hat" };
    }
}
