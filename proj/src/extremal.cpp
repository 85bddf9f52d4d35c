#include "tspread/extremal.hpp"

#include <algorithm>

#include "tspread/error.hpp"

namespace tspread {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::vector<int> spread_run(int start, int t, int count) {
    std::vector<int> out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = start + i * t;
    }
    return out;
}

Monomial build(std::vector<int> indices) { return Monomial(std::move(indices)); }

// x_1 x_{1+t} ... x_{1+(l1-2)t} x_n
Monomial omega_zero(int n, int t, int ell1) {
    auto idx = spread_run(1, t, ell1 - 1);
    idx.push_back(n);
    return build(std::move(idx));
}

// Forward monomial omega_j, 1 <= j <= j_max.
Monomial forward_omega(int n, int t, int ell1, int j) {
    auto idx = spread_run(1, t, ell1 - 2);
    for (int i = 0; i < j; ++i) {
        idx.push_back(2 + i + (ell1 - 2 + i) * t);
    }
    idx.push_back((j + 1) + (ell1 - 2 + j) * t);
    idx.push_back(n);
    return build(std::move(idx));
}

// Critic (nu = 0) and backward (nu >= 1) monomials: a prefix of omega_{j_max}
// followed by the run x_{d+it}, i = k-4-s-nu(1+t) .. k.
Monomial backward_omega(const Monomial& last_forward, const Decomposition& dk, int t, int ell1, int j_max, int s,
                        int nu) {
    int keep = j_max + ell1 - 4 - s - nu * t;
    int from = dk.k - 4 - s - nu * (1 + t);
    if (keep < 0 || keep > last_forward.degree() || from < 0) {
        throw InvariantViolation("backward monomial " + std::to_string(nu) + " is out of range");
    }
    std::vector<int> idx(last_forward.begin(), last_forward.begin() + keep);
    for (int i = from; i <= dk.k; ++i) {
        idx.push_back(dk.d + i * t);
    }
    return build(std::move(idx));
}

std::string inapplicable_reason(int n, int t, int ell1) {
    if (t < 2) {
        return "the construction needs t >= 2";
    }
    if (ell1 < 2) {
        return "the initial degree must be >= 2";
    }
    auto dk = decompose(n, t);
    if (ell1 == 2) {
        return "k = 0: there is no " + std::to_string(t) + "-spread monomial of degree 2 in " + std::to_string(n) +
               " variables";
    }
    if (dk.k < 3) {
        return "initial degree >= 3 needs k >= 3 (here n = " + std::to_string(dk.d) + " + " + std::to_string(dk.k) +
               "*" + std::to_string(t) + ")";
    }
    return "initial degree " + std::to_string(ell1) + " exceeds k + floor((d-2)/t) + 1 = " +
           std::to_string(dk.k + floor_div(dk.d - 2, t) + 1);
}

}  // namespace

Decomposition decompose(int n, int t) {
    if (t <= 0) {
        throw Error("decompose: t must be >= 1, got " + std::to_string(t));
    }
    if (n < 1) {
        throw Error("decompose: n must be >= 1, got " + std::to_string(n));
    }
    int d = (n - 1) % t + 1;
    return {d, (n - d) / t};
}

std::optional<Monomial> slex_successor_with_max_n(const Monomial& u, const Context& ctx) {
    if (!is_t_spread(u, ctx)) {
        throw NotTSpread(format_monomial(u) + " is not " + std::to_string(ctx.t) + "-spread");
    }
    if (u.is_one() || max_index(u) != ctx.n) {
        throw Error("slex successor: " + format_monomial(u) + " must have max index " + std::to_string(ctx.n));
    }
    const int d = u.degree();
    int p = 0;  // 1-based, 0 if every gap equals t
    for (int j = 1; j < d; ++j) {
        if (u[j] - u[j - 1] > ctx.t) {
            p = j;
        }
    }
    if (p == 0) {
        return std::nullopt;
    }
    std::vector<int> idx(u.begin(), u.begin() + (p - 1));
    for (int i = 0; i < d - p; ++i) {
        idx.push_back(u[p - 1] + 1 + i * ctx.t);
    }
    idx.push_back(ctx.n);
    return Monomial(std::move(idx));
}

int j_max_value(int n, int t, int ell1) { return floor_div(n - (ell1 - 2) * t, 1 + t) - 1; }

int s_value(int n, int t, int ell1, int j_max) { return 2 * t - n + j_max * (1 + t) + 1 + (ell1 - 2) * t; }

int nu_max_value(const Decomposition& dk, int t, int ell1, int j_max) {
    if (ell1 == 2) {
        return floor_div(dk.d - 3, t) + dk.k - 2 - j_max;
    }
    return floor_div(dk.d - 2, t) + dk.k - 2 - j_max - (ell1 - 2);
}

std::optional<int> max_corners(int n, int t, int ell1) {
    if (t < 2 || ell1 < 2 || n < 1) {
        return std::nullopt;
    }
    auto [d, k] = decompose(n, t);
    if (ell1 == 2) {
        if (k >= 3) {
            return k + floor_div(d - 3, t);
        }
        if (k == 2) {
            return d == 1 ? 1 : 2;
        }
        if (k == 1) {
            return 1;
        }
        return std::nullopt;
    }
    if (k >= 3 && ell1 <= k + floor_div(d - 2, t) + 1) {
        return k + floor_div(d - 2, t) - (ell1 - 2);
    }
    return std::nullopt;
}

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::General:
            return "general";
        case Regime::KEquals3:
            return "k=3";
        case Regime::SmallK:
            return "small-k";
    }
    return "unknown";
}

ConstructionReport build_omegas(int n, int t, int ell1) {
    auto expected = max_corners(n, t, ell1);
    if (!expected) {
        throw Inapplicable("construct(n=" + std::to_string(n) + ", t=" + std::to_string(t) +
                           ", l1=" + std::to_string(ell1) + "): " + inapplicable_reason(n, t, ell1));
    }

    ConstructionReport rep;
    rep.ctx = Context(n, t);
    rep.ell1 = ell1;
    rep.decomp = decompose(n, t);
    const auto [d, k] = rep.decomp;
    rep.j_max = j_max_value(n, t, ell1);
    rep.s = s_value(n, t, ell1, rep.j_max);
    rep.nu_max = nu_max_value(rep.decomp, t, ell1, rep.j_max);

    auto& om = rep.omegas;
    om.push_back(omega_zero(n, t, ell1));
    if (k <= 2) {
        rep.regime = Regime::SmallK;
        if (k == 2 && d >= 2) {
            om.push_back(build({2, 2 + t, n}));
        }
    } else if (k == 3) {
        rep.regime = Regime::KEquals3;
        if (ell1 == 2) {
            om.push_back(build({2, 2 + t, n}));
            if (d >= 3) {
                om.push_back(build({2, 3 + t, 3 + 2 * t, n}));
            }
        } else if (ell1 == 3 && d >= 2) {
            om.push_back(build({1, 2 + t, 2 + 2 * t, n}));
        }
    } else {
        rep.regime = Regime::General;
        for (int j = 1; j <= rep.j_max; ++j) {
            om.push_back(forward_omega(n, t, ell1, j));
        }
        if (ell1 == 2) {
            rep.has_critic = rep.j_max - 1 - rep.s >= 1;
        } else {
            rep.has_critic = rep.j_max + ell1 - 3 - rep.s >= ell1 - 2;
        }
        if (rep.has_critic) {
            const Monomial last_forward = om.back();
            for (int nu = 0; nu <= rep.nu_max; ++nu) {
                om.push_back(backward_omega(last_forward, rep.decomp, t, ell1, rep.j_max, rep.s, nu));
            }
        }
    }

    rep.total = static_cast<int>(om.size());
    for (int j = 0; j < rep.total; ++j) {
        const auto& w = om[j];
        if (w.degree() != ell1 + j || max_index(w) != n || !is_t_spread(w, rep.ctx)) {
            throw InvariantViolation("omega_" + std::to_string(j) + " = " + format_monomial(w) +
                                     " does not have degree l1+j, max index n and t-spread shape");
        }
        const int l = ell1 + j;
        rep.predicted_corners.emplace_back(n - t * (l - 1) - 1, l);
    }
    if (rep.total != *expected) {
        throw InvariantViolation("construction produced " + std::to_string(rep.total) + " monomials, expected " +
                                 std::to_string(*expected));
    }
    return rep;
}

ExtremalIdeal construct_extremal_ideal(int n, int t, int ell1) {
    ExtremalIdeal out;
    out.report = build_omegas(n, t, ell1);
    out.ideal = borel_ideal(out.report.omegas, out.report.ctx);
    out.corners = corners_via_characterization(out.ideal);

    const bool positions = out.corners.corners == out.report.predicted_corners;
    const bool units = std::all_of(out.corners.values.begin(), out.corners.values.end(),
                                   [](const BigInt& v) { return v == 1; });
    if (!positions || !units) {
        std::string got;
        for (std::size_t i = 0; i < out.corners.size(); ++i) {
            got += " (" + std::to_string(out.corners.corners[i].first) + "," +
                   std::to_string(out.corners.corners[i].second) + ")=" + out.corners.values[i].str();
        }
        throw InvariantViolation("constructed ideal for (n=" + std::to_string(n) + ", t=" + std::to_string(t) +
                                 ", l1=" + std::to_string(ell1) + ") has corners" + got +
                                 ", expected unit values at the predicted positions");
    }
    return out;
}

namespace {

class OmegaSearch {
public:
    OmegaSearch(const Context& ctx, int degree, const std::vector<Monomial>& previous)
        : n_(ctx.n), t_(std::max(ctx.t, 1)), deg_(degree), prev_(previous), cur_(degree) {}

    std::optional<Monomial> run() {
        if (deg_ < 1 || (deg_ - 1) * t_ + 1 > n_) {
            return std::nullopt;
        }
        if (dfs(0)) {
            return make_monomial_unchecked(cur_);
        }
        return std::nullopt;
    }

private:
    // Largest value position s can take in a t-spread monomial of degree deg_ ending at n.
    int upper(int s) const { return n_ - (deg_ - 1 - s) * t_; }

    // True iff every completion of cur_[0..len) lies in some Shad^m(B_t(omega)), i.e.
    // its prefix of length deg(omega) is componentwise below omega.
    bool dead(int len) const {
        for (const auto& w : prev_) {
            const int e = w.degree();
            bool below = e <= deg_;
            for (int s = 0; s < e && below; ++s) {
                below = (s < len ? cur_[s] : upper(s)) <= w[s];
            }
            if (below) {
                return true;
            }
        }
        return false;
    }

    bool dfs(int len) {
        if (len == deg_) {
            return true;
        }
        int lo = len == 0 ? 1 : cur_[len - 1] + t_;
        int hi = upper(len);
        if (len == deg_ - 1) {
            lo = std::max(lo, n_);
        }
        for (int v = lo; v <= hi; ++v) {
            cur_[len] = v;
            if (!dead(len + 1) && dfs(len + 1)) {
                return true;
            }
        }
        return false;
    }

    int n_;
    int t_;
    int deg_;
    const std::vector<Monomial>& prev_;
    std::vector<int> cur_;
};

}  // namespace

std::optional<Monomial> omega_max(const Context& ctx, int ell1, const std::vector<Monomial>& previous) {
    const int degree = ell1 + static_cast<int>(previous.size());
    return OmegaSearch(ctx, degree, previous).run();
}

MonomialSet omega_set(const Context& ctx, int ell1, const std::vector<Monomial>& previous) {
    const int degree = ell1 + static_cast<int>(previous.size());
    std::vector<MonomialSet> shadows;
    for (const auto& w : previous) {
        shadows.push_back(iterated_shadow(borel_closure_degree(w, ctx), ctx, degree - w.degree()));
    }
    std::vector<Monomial> out;
    for (const auto& u : enumerate(ctx, degree)) {
        if (max_index(u) != ctx.n) {
            continue;
        }
        bool covered = std::any_of(shadows.begin(), shadows.end(), [&](const MonomialSet& s) { return s.contains(u); });
        if (!covered) {
            out.push_back(u);
        }
    }
    return MonomialSet::from_sorted(degree, std::move(out));
}

bool omega_claim_check(const std::vector<Monomial>& omegas, const Context& ctx, int ell1, bool literal) {
    if (omegas.empty()) {
        return false;
    }
    for (std::size_t j = 0; j < omegas.size(); ++j) {
        const auto& w = omegas[j];
        if (w.degree() != ell1 + static_cast<int>(j) || max_index(w) != ctx.n) {
            return false;
        }
        try {
            if (!is_t_spread(w, ctx)) {
                return false;
            }
        } catch (const Error&) {
            return false;
        }
    }
    auto max_of = [&](const std::vector<Monomial>& previous) -> std::optional<Monomial> {
        if (!literal) {
            return omega_max(ctx, ell1, previous);
        }
        auto set = omega_set(ctx, ell1, previous);
        if (set.empty()) {
            return std::nullopt;
        }
        return set.max();
    };
    std::vector<Monomial> previous;
    for (const auto& w : omegas) {
        auto expected = max_of(previous);
        if (!expected || *expected != w) {
            return false;
        }
        previous.push_back(w);
    }
    return !max_of(previous).has_value();
}

}  // namespace tspread
