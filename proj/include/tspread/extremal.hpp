#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tspread/betti.hpp"
#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// n = d + k t with 1 <= d <= t.
struct Decomposition {
    int d = 0;
    int k = 0;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws Error for t <= 0 or n < 1.
Decomposition decompose(int n, int t);

/// The slex-largest t-spread monomial of degree deg(u) with max index n that is
/// slex-smaller than u, or nullopt when all gaps of u equal t.
/// Throws Error if max(u) != n, NotTSpread if u is not t-spread.
std::optional<Monomial> slex_successor_with_max_n(const Monomial& u, const Context& ctx);

/// floor((n - (l1-2)t) / (1+t)) - 1.
int j_max_value(int n, int t, int ell1);
/// 2t - n + j_max(1+t) + 1 + (l1-2)t.
int s_value(int n, int t, int ell1, int j_max);
/// floor((d-3)/t) + k - 2 - j_max for l1 = 2, floor((d-2)/t) + k - 2 - j_max - (l1-2) otherwise.
/// May be negative.
int nu_max_value(const Decomposition& dk, int t, int ell1, int j_max);

/// Largest possible number of corners of a t-spread strongly stable ideal with
/// initial degree l1 and a corner in that degree. nullopt when no such ideal
/// exists (or the count is outside what the closed forms cover).
/// Requires t >= 2 and l1 >= 2; returns nullopt otherwise.
std::optional<int> max_corners(int n, int t, int ell1);

enum class Regime { General, KEquals3, SmallK };

std::string to_string(Regime regime);

struct ConstructionReport {
    Context ctx;
    int ell1 = 2;
    Decomposition decomp;
    Regime regime = Regime::General;
    // j_max, s and nu_max are evaluated from their closed forms in every regime;
    // they only drive the construction in the general one.
    int j_max = 0;
    int s = 0;
    int nu_max = 0;
    bool has_critic = false;
    std::vector<Monomial> omegas;
    std::vector<std::pair<int, int>> predicted_corners;  // (k, l)
    int total = 0;
};

/// The omega monomials. Throws Inapplicable when max_corners(n, t, l1) is nullopt,
/// naming the failing hypothesis.
ConstructionReport build_omegas(int n, int t, int ell1);

struct ExtremalIdeal {
    SpreadIdeal ideal;
    ConstructionReport report;
    CornerSequence corners;
};

/// B_t(omegas), verified against the predicted corner positions and unit values.
/// Throws Inapplicable, or InvariantViolation if the verification fails.
ExtremalIdeal construct_extremal_ideal(int n, int t, int ell1);

/// max of Omega_j: t-spread monomials of degree l1 + j with max index n lying in no
/// Shad^{j-i}(B_t(omega_i)), i < j, where `previous` holds omega_0..omega_{j-1}.
/// Depth-first search in slex-descending order with domination pruning.
std::optional<Monomial> omega_max(const Context& ctx, int ell1, const std::vector<Monomial>& previous);

/// Omega_j by explicit enumeration of M_{n,l1+j,t} and literal iterated shadows.
/// Exponential in n; meant for small cases.
MonomialSet omega_set(const Context& ctx, int ell1, const std::vector<Monomial>& previous);

/// Checks each omega_j against max Omega_j and that Omega after the last omega is
/// empty, plus degree, spread and max-index shape. `literal` switches to omega_set.
bool omega_claim_check(const std::vector<Monomial>& omegas, const Context& ctx, int ell1, bool literal = false);

}  // namespace tspread
