#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// Sparse graded Betti table of an ideal I: (k, l) -> beta_{k,k+l}(I).
/// Only nonzero entries are stored. The table is that of I, not of S/I.
class BettiTable {
public:
    using Key = std::pair<int, int>;  // (k, l)

    /// Stores value at (k, l); a zero value erases the entry.
    void set(int k, int l, BigInt value);
    [[nodiscard]] BigInt get(int k, int l) const;

    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] const std::map<Key, BigInt>& entries() const { return entries_; }

    /// Row l as a dense vector over k = 0..(last nonzero k); empty if the row is zero.
    [[nodiscard]] std::vector<BigInt> row(int l) const;
    /// Rows with at least one nonzero entry, ascending.
    [[nodiscard]] std::vector<int> row_labels() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<Key, BigInt> entries_;
};

struct CornerSequence {
    std::vector<std::pair<int, int>> corners;  // (k, l), k decreasing, l increasing
    std::vector<BigInt> values;

    [[nodiscard]] std::size_t size() const { return corners.size(); }
    /// Number of corners with k >= 1.
    [[nodiscard]] std::size_t positive_count() const;

    friend bool operator==(const CornerSequence&, const CornerSequence&) = default;
};

/// beta_{k,k+l} = sum over u in G(I)_l of binom(max(u) - t(l-1) - 1, k).
/// Throws NotStronglyStable if I is not t-spread strongly stable, Inapplicable for t = 0.
BettiTable graded_betti(const SpreadIdeal& ideal);
/// Same formula without the stability check.
BettiTable graded_betti_unchecked(const SpreadIdeal& ideal);

/// Corners read off the table: nonzero entries with nothing nonzero weakly
/// south-east of them.
CornerSequence corners_from_table(const BettiTable& table);

/// Corners from the generators alone, through the largest max(u) per degree.
/// Throws NotStronglyStable.
CornerSequence corners_via_characterization(const SpreadIdeal& ideal);
CornerSequence corners_via_characterization_unchecked(const SpreadIdeal& ideal);

/// Largest l with a nonzero row. Throws Error on an empty table.
int regularity(const BettiTable& table);
/// Largest k with a nonzero entry. Throws Error on an empty table.
int proj_dim(const BettiTable& table);

/// Text diagram: header `0 1 2 ...`, one row per l labelled `l:`, `-` for zero,
/// columns right-aligned. Empty string for the zero table.
std::string render_diagram(const BettiTable& table);

}  // namespace tspread
