#include "tspread/betti.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tspread/error.hpp"

namespace tspread {

void BettiTable::set(int k, int l, BigInt value) {
    if (value == 0) {
        entries_.erase({k, l});
    } else {
        entries_[{k, l}] = std::move(value);
    }
}

BigInt BettiTable::get(int k, int l) const {
    auto it = entries_.find({k, l});
    return it == entries_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> BettiTable::row(int l) const {
    std::vector<BigInt> out;
    for (const auto& [key, value] : entries_) {
        if (key.second != l) {
            continue;
        }
        if (static_cast<int>(out.size()) <= key.first) {
            out.resize(key.first + 1);
        }
        out[key.first] = value;
    }
    return out;
}

std::vector<int> BettiTable::row_labels() const {
    std::set<int> labels;
    for (const auto& [key, value] : entries_) {
        labels.insert(key.second);
    }
    return {labels.begin(), labels.end()};
}

std::size_t CornerSequence::positive_count() const {
    return static_cast<std::size_t>(
        std::count_if(corners.begin(), corners.end(), [](const auto& c) { return c.first >= 1; }));
}

namespace {

void require_stable(const SpreadIdeal& ideal) {
    if (ideal.context().t < 1) {
        throw Inapplicable("the Betti formula needs t >= 1");
    }
    if (auto move = find_stability_violation(ideal)) {
        throw NotStronglyStable("ideal is not " + std::to_string(ideal.context().t) +
                                "-spread strongly stable: " + describe_move(*move) + " is missing");
    }
}

int row_width(int max_u, int t, int l) { return max_u - t * (l - 1) - 1; }

}  // namespace

BettiTable graded_betti_unchecked(const SpreadIdeal& ideal) {
    const int t = ideal.context().t;
    BettiTable table;
    for (const auto& [l, gens] : ideal.generators()) {
        // Group generators by max(u); each group contributes one binomial row.
        std::map<int, int> by_max;
        for (const auto& u : gens) {
            ++by_max[max_index(u)];
        }
        std::vector<BigInt> row;
        for (const auto& [m, count] : by_max) {
            int top = row_width(m, t, l);
            if (static_cast<int>(row.size()) < top + 1) {
                row.resize(std::max(top + 1, 0));
            }
            for (int k = 0; k <= top; ++k) {
                row[k] += binomial(top, k) * count;
            }
        }
        for (int k = 0; k < static_cast<int>(row.size()); ++k) {
            table.set(k, l, row[k]);
        }
    }
    return table;
}

BettiTable graded_betti(const SpreadIdeal& ideal) {
    require_stable(ideal);
    return graded_betti_unchecked(ideal);
}

CornerSequence corners_from_table(const BettiTable& table) {
    // Last nonzero column of each row, scanned from the bottom row up: a row's
    // endpoint is a corner iff it lies strictly right of every lower row's endpoint.
    std::map<int, int> last_k;
    for (const auto& [key, value] : table.entries()) {
        auto [it, inserted] = last_k.try_emplace(key.second, key.first);
        if (!inserted) {
            it->second = std::max(it->second, key.first);
        }
    }
    CornerSequence seq;
    int best = -1;
    for (auto it = last_k.rbegin(); it != last_k.rend(); ++it) {
        if (it->second > best) {
            seq.corners.emplace_back(it->second, it->first);
            seq.values.push_back(table.get(it->second, it->first));
            best = it->second;
        }
    }
    std::reverse(seq.corners.begin(), seq.corners.end());
    std::reverse(seq.values.begin(), seq.values.end());
    return seq;
}

CornerSequence corners_via_characterization_unchecked(const SpreadIdeal& ideal) {
    const int t = ideal.context().t;
    CornerSequence seq;
    int best = -1;
    const auto& gens = ideal.generators();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
        const int l = it->first;
        int m = 0;
        for (const auto& u : it->second) {
            m = std::max(m, max_index(u));
        }
        int k = row_width(m, t, l);
        if (k > best) {
            auto hits = std::count_if(it->second.begin(), it->second.end(),
                                      [&](const Monomial& u) { return max_index(u) == m; });
            seq.corners.emplace_back(k, l);
            seq.values.emplace_back(hits);
            best = k;
        }
    }
    std::reverse(seq.corners.begin(), seq.corners.end());
    std::reverse(seq.values.begin(), seq.values.end());
    return seq;
}

CornerSequence corners_via_characterization(const SpreadIdeal& ideal) {
    require_stable(ideal);
    return corners_via_characterization_unchecked(ideal);
}

int regularity(const BettiTable& table) {
    if (table.empty()) {
        throw Error("regularity of the zero table is undefined");
    }
    int reg = 0;
    for (const auto& [key, value] : table.entries()) {
        reg = std::max(reg, key.second);
    }
    return reg;
}

int proj_dim(const BettiTable& table) {
    if (table.empty()) {
        throw Error("projective dimension of the zero table is undefined");
    }
    int pd = 0;
    for (const auto& [key, value] : table.entries()) {
        pd = std::max(pd, key.first);
    }
    return pd;
}

std::string render_diagram(const BettiTable& table) {
    if (table.empty()) {
        return {};
    }
    const int cols = proj_dim(table) + 1;
    const auto labels = table.row_labels();

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> row_names;
    for (int l : labels) {
        row_names.push_back(std::to_string(l) + ":");
        std::vector<std::string> line(cols, "-");
        for (int k = 0; k < cols; ++k) {
            BigInt v = table.get(k, l);
            if (v != 0) {
                line[k] = v.str();
            }
        }
        cells.push_back(std::move(line));
    }

    std::size_t label_w = 0;
    for (const auto& name : row_names) {
        label_w = std::max(label_w, name.size());
    }
    std::vector<std::size_t> width(cols);
    for (int k = 0; k < cols; ++k) {
        width[k] = std::to_string(k).size();
        for (const auto& line : cells) {
            width[k] = std::max(width[k], line[k].size());
        }
    }

    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t w) { out << std::string(w - s.size(), ' ') << s; };
    pad("", label_w);
    std::size_t total = label_w;
    for (int k = 0; k < cols; ++k) {
        out << ' ';
        pad(std::to_string(k), width[k]);
        total += 1 + width[k];
    }
    out << '\n' << std::string(total, '-') << '\n';
    for (std::size_t r = 0; r < cells.size(); ++r) {
        pad(row_names[r], label_w);
        for (int k = 0; k < cols; ++k) {
            out << ' ';
            pad(cells[r][k], width[k]);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tspread
