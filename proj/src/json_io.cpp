#include "tspread/json_io.hpp"

#include <limits>

#include "tspread/error.hpp"

namespace tspread {

Json bigint_to_json(const BigInt& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
        return value.convert_to<std::uint64_t>();
    }
    return value.str();
}

Json monomial_to_json(const Monomial& u) { return u.indices(); }

Json ideal_to_json(const SpreadIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.all_generators()) {
        gens.push_back(monomial_to_json(g));
    }
    return {{"n", ideal.context().n}, {"t", ideal.context().t}, {"gens", std::move(gens)}};
}

std::pair<Context, std::vector<Monomial>> generators_from_json(const Json& j) {
    try {
        Context ctx(j.at("n").get<int>(), j.at("t").get<int>());
        std::vector<Monomial> gens;
        for (const auto& g : j.at("gens")) {
            auto idx = g.get<std::vector<int>>();
            std::sort(idx.begin(), idx.end());
            Monomial u(std::move(idx));
            validate(u, ctx);
            gens.push_back(std::move(u));
        }
        return {ctx, std::move(gens)};
    } catch (const Json::exception& e) {
        throw ParseError(std::string("ideal JSON: ") + e.what());
    }
}

SpreadIdeal ideal_from_json(const Json& j) {
    auto [ctx, gens] = generators_from_json(j);
    return SpreadIdeal::from_generators(ctx, std::move(gens));
}

Json betti_to_json(const BettiTable& table) {
    Json rows = Json::object();
    for (int l : table.row_labels()) {
        Json row = Json::array();
        for (const auto& v : table.row(l)) {
            row.push_back(bigint_to_json(v));
        }
        rows[std::to_string(l)] = std::move(row);
    }
    return {{"rows", std::move(rows)}};
}

Json corners_to_json(const CornerSequence& seq) {
    Json corners = Json::array();
    Json values = Json::array();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        corners.push_back({seq.corners[i].first, seq.corners[i].second});
        values.push_back(bigint_to_json(seq.values[i]));
    }
    return {{"corners", std::move(corners)}, {"values", std::move(values)}};
}

Json report_to_json(const ConstructionReport& r) {
    Json omegas = Json::array();
    for (const auto& w : r.omegas) {
        omegas.push_back(monomial_to_json(w));
    }
    Json corners = Json::array();
    for (auto [k, l] : r.predicted_corners) {
        corners.push_back({k, l});
    }
    return {{"n", r.ctx.n},
            {"t", r.ctx.t},
            {"ell1", r.ell1},
            {"d", r.decomp.d},
            {"k", r.decomp.k},
            {"j_max", r.j_max},
            {"s", r.s},
            {"nu_max", r.nu_max},
            {"regime", to_string(r.regime)},
            {"critic", r.has_critic},
            {"total", r.total},
            {"omegas", std::move(omegas)},
            {"corners", std::move(corners)}};
}

Json cell_to_json(const TableCell& c) {
    Json value = c.value ? Json(*c.value) : Json(nullptr);
    return {{"t", c.t},
            {"n", c.n},
            {"ell1", c.ell1},
            {"value", std::move(value)},
            {"provenance", to_string(c.provenance)},
            {"partial", c.partial}};
}

Json disagreement_to_json(const Disagreement& d) {
    return {{"check", d.check}, {"n", d.n}, {"t", d.t}, {"ell1", d.ell1}, {"detail", d.detail}};
}

}  // namespace tspread
