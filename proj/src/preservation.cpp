#include <fmtlab/preservation.hpp>
#include <fmtlab/builtins.hpp>
#include <fmtlab/error.hpp>
#include <fmtlab/evaluate.hpp>
#include <fmtlab/families.hpp>
#include <fmtlab/operations.hpp>

#include <algorithm>
#include <random>

using std::uint64_t;
using std::vector;

namespace fmtlab
{
    namespace
    {
        auto subset_of(uint64_t mask, int n) -> vector<int>
        {
            vector<int> s;
            for (int v = 0 ; v < n ; ++v)
                if (mask >> v & 1)
                    s.push_back(v);
            return s;
        }

        auto contains_k4(const Structure & h) -> bool
        {
            return hom_exists(complete_graph(4), gaifman_graph(h), HomConstraints{ .injective = true, .partial = {} });
        }

        auto common(const Structure & g, std::initializer_list<int> vertices) -> vector<int>
        {
            vector<int> result;
            auto it = vertices.begin();
            result = g.neighbours(*it);
            for (++it ; it != vertices.end() ; ++it) {
                vector<int> next;
                auto & other = g.neighbours(*it);
                std::set_intersection(result.begin(), result.end(), other.begin(), other.end(), std::back_inserter(next));
                result = std::move(next);
            }
            return result;
        }

        // Least (c, d) with chi(x1, x2, a, b, c, d).
        auto rung(const Structure & g, int x1, int x2, int a, int b) -> std::optional<std::pair<int, int>>
        {
            for (int c : common(g, { x1, a, b }))
                for (int d : common(g, { b, c, x2 }))
                    return std::pair{ c, d };
            return std::nullopt;
        }

        auto close_chain(const Structure & h, int x1, int x2, int y, int z) -> std::optional<DmResult>
        {
            vector<std::pair<int, int>> rungs{ { y, z } };
            for (int step = 0 ; step < 2 * h.size() ; ++step) {
                auto next = rung(h, x1, x2, rungs.back().first, rungs.back().second);
                if (! next)
                    return std::nullopt;
                auto seen = std::find(rungs.begin(), rungs.end(), *next);
                if (seen == rungs.begin())
                    break;
                if (seen != rungs.end())
                    return std::nullopt;
                rungs.push_back(*next);
            }
            int m = static_cast<int>(rungs.size());
            if (m < 4 || rung(h, x1, x2, rungs.back().first, rungs.back().second) != rungs.front())
                return std::nullopt;

            Mapping map(2 * m + 2);
            map[gn_v(1)] = x1;
            map[gn_v(2)] = x2;
            for (int i = 1 ; i <= m ; ++i) {
                map[gn_a(m, i)] = rungs[i - 1].first;
                map[gn_b(m, i)] = rungs[i - 1].second;
            }
            auto d = dn(m);
            if (! is_homomorphism(d, h, map) || ! classify(d, h, map).embedding)
                return std::nullopt;
            return DmResult{ DmStatus::found, m, std::move(map), { x1, x2, y, z } };
        }
    }

    auto is_minimal_induced_model(const Formula & phi, const Structure & m, const ClassFilter & in_class,
            const MinimalityOptions & options) -> MinimalityReport
    {
        Evaluator holds{ phi, m.vocabulary() };
        if (! holds(m))
            throw PreconditionFailed("the structure is not a model of the formula");
        if (options.mode == MinimalityMode::proxy && ! options.proxy)
            throw std::invalid_argument("proxy mode needs a proxy predicate");

        int n = m.size();
        MinimalityReport report;
        auto is_smaller_model = [&](const vector<int> & subset) {
            auto sub = induced_substructure(m, subset).structure;
            ++report.subsets;
            return holds(sub) && in_class(sub);
        };

        if (options.mode == MinimalityMode::deletion) {
            report.partial = true;
            for (int v = 0 ; v < n ; ++v) {
                vector<int> subset;
                for (int w = 0 ; w < n ; ++w)
                    if (w != v)
                        subset.push_back(w);
                if (is_smaller_model(subset)) {
                    report.smaller_model = subset;
                    return report;
                }
            }
            report.minimal = true;
            return report;
        }

        if (n > options.subset_limit || n > 62)
            throw BudgetExceeded("structure too large for a full subset scan");

        std::mt19937_64 rng{ options.seed };
        std::bernoulli_distribution spot{ options.spot_check_rate };
        uint64_t full = (uint64_t{ 1 } << n) - 1;
        for (uint64_t mask = 1 ; mask < full ; ++mask) {
            auto subset = subset_of(mask, n);
            if (options.mode == MinimalityMode::exhaustive) {
                if (is_smaller_model(subset)) {
                    report.smaller_model = subset;
                    return report;
                }
                continue;
            }
            auto sub = induced_substructure(m, subset).structure;
            ++report.subsets;
            bool model = options.proxy(sub);
            if (spot(rng)) {
                ++report.spot_checks;
                if (holds(sub) != model && ! report.proxy_mismatch)
                    report.proxy_mismatch = subset;
            }
            if (model && in_class(sub)) {
                report.smaller_model = subset;
                return report;
            }
        }
        report.minimal = ! report.proxy_mismatch;
        return report;
    }

    auto check_preservation(const Formula & phi, const vector<Structure> & instances, PreservationMode mode,
            const SolverOptions & options) -> PreservationReport
    {
        PreservationReport report;
        for (auto & s : instances)
            report.models.push_back(evaluate(phi, s));

        HomConstraints constraints;
        if (mode == PreservationMode::extension)
            constraints = HomConstraints::embedding();
        int n = static_cast<int>(instances.size());
        for (int a = 0 ; a < n ; ++a) {
            if (! report.models[a])
                continue;
            for (int b = 0 ; b < n ; ++b) {
                if (report.models[b])
                    continue;
                try {
                    if (hom_exists(instances[a], instances[b], constraints, options))
                        report.violations.emplace_back(a, b);
                }
                catch (const BudgetExceeded &) {
                    report.skipped.emplace_back(a, b);
                }
            }
        }
        return report;
    }

    auto to_string(DmStatus status) -> std::string
    {
        switch (status) {
            case DmStatus::found: return "found";
            case DmStatus::not_a_model: return "not-a-model";
            case DmStatus::has_k4: return "has-k4";
            case DmStatus::has_k5_minor: return "has-k5-minor";
            case DmStatus::no_chain: return "no-chain";
        }
        return "unknown";
    }

    auto find_induced_Dm(const Structure & h, const MinorOptions & options) -> DmResult
    {
        if (! h.is_graph())
            throw std::invalid_argument("find_induced_Dm needs a graph");
        if (contains_k4(h))
            return DmResult{ DmStatus::has_k4, 0, {}, {} };
        if (has_minor(h, pattern_k5(), options))
            return DmResult{ DmStatus::has_k5_minor, 0, {}, {} };
        auto phi = phi_planar();
        if (! evaluate(phi, h))
            return DmResult{ DmStatus::not_a_model, 0, {}, {} };

        // the matrix of phi_planar, with x1 x2 y z free
        auto matrix = phi;
        for (int i = 0 ; i < 4 ; ++i)
            matrix = matrix.body();
        Evaluator seed_holds{ matrix, h.vocabulary() };

        int n = h.size();
        for (int x1 = 0 ; x1 < n ; ++x1)
            for (int x2 = 0 ; x2 < n ; ++x2)
                for (int y : h.neighbours(x1))
                    for (int z : common(h, { y, x2 })) {
                        if (! seed_holds(h, { { "x1", x1 }, { "x2", x2 }, { "y", y }, { "z", z } }))
                            continue;
                        if (auto result = close_chain(h, x1, x2, y, z))
                            return *result;
                    }
        return DmResult{ DmStatus::no_chain, 0, {}, {} };
    }

    auto hom_image_audit(int n, const vector<Structure> & candidates, const SolverOptions & options)
        -> vector<AuditEntry>
    {
        if (n < 4)
            throw std::invalid_argument("audit needs n >= 4");
        auto source = dn(n);
        vector<AuditEntry> entries;
        for (auto & h : candidates) {
            AuditEntry e;
            try {
                e.k4_free = ! contains_k4(h);
                e.k5_minor_free = ! has_minor(h, pattern_k5(), MinorOptions{ .node_budget = options.node_budget });
                if (e.k4_free && e.k5_minor_free) {
                    e.hom_exists = hom_exists(source, h, {}, options);
                    for (int m = 4 ; m <= n ; ++m)
                        if (n % m == 0 && 2 * m + 2 <= h.size()
                                && hom_exists(dn(m), h, HomConstraints::embedding(), options))
                            e.induced.push_back(m);
                }
            }
            catch (const BudgetExceeded &) {
                e.skipped = true;
            }
            entries.push_back(std::move(e));
        }
        return entries;
    }
}
