#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "tspread/monomial.hpp"

namespace tspread::detail {

/// Hash index over the minimal generators of a t-spread strongly stable ideal.
///
/// For such an ideal, a t-spread monomial w lies in I iff some prefix
/// x_{w_1}...x_{w_e} of w is itself a minimal generator: the shortest prefix
/// that lies in I has every degree-(e-1) divisor componentwise above the
/// (e-1)-prefix, which is not in I. `member` is therefore exact only on
/// strongly stable ideals; on other ideals a hit is still a certificate of
/// membership.
class PrefixIndex {
public:
    void insert(const Monomial& g);

    [[nodiscard]] bool member(const Monomial& w) const;

private:
    static std::uint64_t step(std::uint64_t h, int i) {
        h ^= static_cast<std::uint64_t>(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h * 0x100000001b3ULL;
    }

    std::vector<Monomial> gens_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash_;
    std::set<int> degrees_;
};

inline void PrefixIndex::insert(const Monomial& g) {
    std::uint64_t h = 0;
    for (int i : g) {
        h = step(h, i);
    }
    by_hash_[h].push_back(static_cast<std::uint32_t>(gens_.size()));
    gens_.push_back(g);
    degrees_.insert(g.degree());
}

inline bool PrefixIndex::member(const Monomial& w) const {
    if (degrees_.empty()) {
        return false;
    }
    auto check = [&](std::uint64_t h, int len) {
        auto it = by_hash_.find(h);
        if (it == by_hash_.end()) {
            return false;
        }
        for (std::uint32_t id : it->second) {
            const Monomial& g = gens_[id];
            if (g.degree() == len && std::equal(g.begin(), g.end(), w.begin())) {
                return true;
            }
        }
        return false;
    };
    std::uint64_t h = 0;
    if (degrees_.count(0) && check(h, 0)) {
        return true;
    }
    int max_deg = *degrees_.rbegin();
    for (int len = 1; len <= w.degree() && len <= max_deg; ++len) {
        h = step(h, w[len - 1]);
        if (degrees_.count(len) && check(h, len)) {
            return true;
        }
    }
    return false;
}

}  // namespace tspread::detail
