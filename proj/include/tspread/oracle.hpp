#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

struct SearchBudget {
    int max_n = 24;
    std::uint64_t max_total_gens = 4096;  // cap on sum over degrees of |M_{n,d,t}|
    std::uint64_t max_ideals = UINT64_MAX;
    double timeout_seconds = 600.0;
};

/// All subsets of M_{n,d,t} closed under moves, slex-descending members, starting
/// with the empty set. Throws BudgetExceeded when |M_{n,d,t}| > 256.
std::vector<MonomialSet> enumerate_borel_closed(const Context& ctx, int d);

/// Same by testing all 2^|M| subsets; for |M| <= 20 only.
std::vector<MonomialSet> enumerate_borel_closed_naive(const Context& ctx, int d);

struct EnumerationStats {
    std::uint64_t ideals = 0;
    bool partial = false;
    std::string reason;  // why the enumeration stopped early
};

/// Streams every nonzero t-spread strongly stable ideal of initial degree l1.
/// `visit` returns false to stop. Stops and sets `partial` when the budget runs out.
EnumerationStats enumerate_strongly_stable_ideals(const Context& ctx, int ell1, const SearchBudget& budget,
                                                  const std::function<bool(const SpreadIdeal&)>& visit);

struct BruteForceOptions {
    bool require_corner_at_ell1 = true;
    bool require_unit_values = true;
    /// Count only corners (k, l) with k >= 1.
    bool positive_k_only = true;
};

enum class Provenance { BruteForce, Formula };

std::string to_string(Provenance p);

struct TableCell {
    int n = 0;
    int t = 0;
    int ell1 = 0;
    std::optional<int> value;  // nullopt renders as "-"
    Provenance provenance = Provenance::Formula;
    bool partial = false;  // brute force stopped early; value is a lower bound

    [[nodiscard]] std::string value_text() const;
};

struct BruteForceResult {
    TableCell cell;
    /// Maximum over all four settings of the corner-at-l1 and unit-value flags,
    /// indexed [require_corner_at_ell1][require_unit_values].
    std::optional<int> by_flags[2][2];
    std::uint64_t ideals = 0;
};

BruteForceResult brute_force_max_corners(const Context& ctx, int ell1, const SearchBudget& budget,
                                         const BruteForceOptions& options = {});

struct IntRange {
    int lo = 0;
    int hi = -1;
};

/// Cells in row-major order (l1 outer, n inner). A cell is brute-forced when
/// n <= brute_force_upto, or when the closed form does not cover it and the
/// decomposition has k < 3; otherwise it comes from max_corners.
std::vector<TableCell> regenerate_table(int t, IntRange n_range, IntRange ell1_range, int brute_force_upto,
                                        const SearchBudget& budget, const BruteForceOptions& options = {});

struct Disagreement {
    std::string check;
    int n = 0;
    int t = 0;
    int ell1 = 0;
    std::string detail;
};

struct CrossValidationReport {
    std::vector<Disagreement> disagreements;
    std::uint64_t checks = 0;
    bool partial = false;
};

/// Closure equivalence (degrees <= 4), corner-method agreement on every enumerated
/// ideal, brute force against max_corners against the construction size, and
/// corner positions of constructed ideals.
CrossValidationReport cross_validate(IntRange n_range, IntRange t_range, IntRange ell1_range,
                                     const SearchBudget& budget, const BruteForceOptions& options = {});

}  // namespace tspread
