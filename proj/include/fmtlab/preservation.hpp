#pragma once

#include <fmtlab/formula.hpp>
#include <fmtlab/hom_solver.hpp>
#include <fmtlab/minors.hpp>
#include <fmtlab/structure.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmtlab
{
    using ClassFilter = std::function<auto (const Structure &) -> bool>;

    enum class MinimalityMode
    {
        /// every proper induced substructure
        exhaustive,
        /// only the one-element deletions; partial evidence
        deletion,
        /// every proper induced substructure, with a cheaper predicate standing
        /// in for the formula and spot checks against direct evaluation
        proxy
    };

    struct MinimalityOptions
    {
        MinimalityMode mode = MinimalityMode::exhaustive;
        /// Largest structure scanned by exhaustive and proxy modes.
        int subset_limit = 12;
        /// Replaces the formula in proxy mode.
        ClassFilter proxy;
        double spot_check_rate = 0.05;
        std::uint64_t seed = 1;
    };

    struct MinimalityReport
    {
        bool minimal = false;
        /// Deletion mode: only |S| = |M| - 1 was examined.
        bool partial = false;
        /// A proper subset whose induced substructure is in the class and a model.
        std::optional<std::vector<int>> smaller_model;
        std::uint64_t subsets = 0;
        std::uint64_t spot_checks = 0;
        /// A subset on which the proxy and the formula disagree.
        std::optional<std::vector<int>> proxy_mismatch;
    };

    /// Whether M is a minimal induced model of phi within the class given by
    /// the filter. Throws PreconditionFailed if M is not a model, and
    /// BudgetExceeded if M is too large for the requested mode.
    auto is_minimal_induced_model(const Formula & phi, const Structure & m, const ClassFilter & in_class,
            const MinimalityOptions & options = {}) -> MinimalityReport;

    enum class PreservationMode
    {
        homomorphism,
        extension
    };

    struct PreservationReport
    {
        /// Ordered pairs (A, B) of instance indices with A -> B, A |= phi and B |/= phi.
        std::vector<std::pair<int, int>> violations;
        /// Pairs whose search ran out of budget.
        std::vector<std::pair<int, int>> skipped;
        std::vector<bool> models;

        auto clean() const -> bool { return violations.empty() && skipped.empty(); }
    };

    /// Looks for A -> B (an embedding in extension mode) with A a model and B not.
    auto check_preservation(const Formula & phi, const std::vector<Structure> & instances,
            PreservationMode mode = PreservationMode::homomorphism, const SolverOptions & options = {})
        -> PreservationReport;

    enum class DmStatus
    {
        found,
        /// H does not satisfy phi_planar
        not_a_model,
        /// H contains K4
        has_k4,
        has_k5_minor,
        /// no seed closes into an induced D_m within 2|H| steps
        no_chain
    };

    struct DmResult
    {
        DmStatus status = DmStatus::no_chain;
        int m = 0;
        /// images of the elements of dn(m)
        Mapping embedding;
        /// the (x1, x2, y, z) seed the chain started from
        std::vector<int> seed;

        auto found() const -> bool { return status == DmStatus::found; }
        auto precondition_failed() const -> bool
        {
            return status == DmStatus::has_k4 || status == DmStatus::has_k5_minor;
        }
    };

    auto to_string(DmStatus status) -> std::string;

    /// Seeds (x1, x2, y, z) from phi_planar in lexicographic order; each is
    /// extended along rungs by the least chi witness until the rung repeats,
    /// and the resulting copy of D_m is checked to be induced.
    auto find_induced_Dm(const Structure & h, const MinorOptions & options = {}) -> DmResult;

    struct AuditEntry
    {
        bool k4_free = false;
        bool k5_minor_free = false;
        bool hom_exists = false;
        /// m >= 4 dividing n with D_m an induced subgraph
        std::vector<int> induced;
        bool skipped = false;

        /// A hom D_n -> H forces some induced D_m with m | n.
        auto consistent() const -> bool
        {
            return skipped || ! k4_free || ! k5_minor_free || ! hom_exists || ! induced.empty();
        }
    };

    auto hom_image_audit(int n, const std::vector<Structure> & candidates, const SolverOptions & options = {})
        -> std::vector<AuditEntry>;
}
