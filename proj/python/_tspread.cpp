#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tspread/betti.hpp"
#include "tspread/cli.hpp"
#include "tspread/error.hpp"
#include "tspread/extremal.hpp"
#include "tspread/ideal.hpp"
#include "tspread/oracle.hpp"

namespace py = pybind11;
using namespace tspread;

namespace {

using Indices = std::vector<int>;

std::vector<Monomial> to_monomials(const std::vector<Indices>& gens, const Context& ctx) {
    std::vector<Monomial> out;
    for (auto idx : gens) {
        std::sort(idx.begin(), idx.end());
        Monomial u(std::move(idx));
        validate(u, ctx);
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<Indices> to_lists(const std::vector<Monomial>& gens) {
    std::vector<Indices> out;
    for (const auto& g : gens) {
        out.push_back(g.indices());
    }
    return out;
}

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

SpreadIdeal make_ideal(const std::vector<Indices>& gens, int n, int t, bool borel) {
    Context ctx(n, t);
    auto mons = to_monomials(gens, ctx);
    return borel ? borel_ideal(mons, ctx) : SpreadIdeal::from_generators(ctx, std::move(mons));
}

py::dict corners_dict(const CornerSequence& seq) {
    py::list values;
    for (const auto& v : seq.values) {
        values.append(to_py(v));
    }
    py::dict d;
    d["corners"] = seq.corners;
    d["values"] = values;
    return d;
}

}  // namespace

PYBIND11_MODULE(_tspread, m) {
    m.doc() = "t-spread strongly stable monomial ideals";

    // Translators registered later are tried first, so the subclasses go last.
    auto& base = py::register_exception<Error>(m, "TSpreadError", PyExc_ValueError);
    py::register_exception<NotStronglyStable>(m, "NotStronglyStable", base.ptr());
    py::register_exception<Inapplicable>(m, "Inapplicable", base.ptr());

    m.def("spread_count", [](int n, int t, int d) { return spread_count(Context(n, t), d); }, py::arg("n"),
          py::arg("t"), py::arg("d"));
    m.def("enumerate", [](int n, int t, int d) { return to_lists(enumerate(Context(n, t), d).members()); },
          py::arg("n"), py::arg("t"), py::arg("d"), "M_{n,d,t} in slex-descending order");
    m.def("is_t_spread", [](Indices u, int n, int t) {
        std::sort(u.begin(), u.end());
        return is_t_spread(Monomial(std::move(u)), Context(n, t));
    }, py::arg("u"), py::arg("n"), py::arg("t"));
    m.def("borel_closure", [](Indices u, int n, int t) {
        std::sort(u.begin(), u.end());
        return to_lists(borel_closure_degree(Monomial(std::move(u)), Context(n, t)).members());
    }, py::arg("u"), py::arg("n"), py::arg("t"));
    m.def("borel_ideal", [](const std::vector<Indices>& gens, int n, int t) {
        return to_lists(make_ideal(gens, n, t, true).all_generators());
    }, py::arg("gens"), py::arg("n"), py::arg("t"), "Minimal generators of B_t(gens)");
    m.def("is_strongly_stable", [](const std::vector<Indices>& gens, int n, int t) {
        return is_strongly_stable(make_ideal(gens, n, t, false));
    }, py::arg("gens"), py::arg("n"), py::arg("t"));

    m.def("graded_betti", [](const std::vector<Indices>& gens, int n, int t, bool borel) {
        py::dict out;
        auto table = graded_betti(make_ideal(gens, n, t, borel));
        for (const auto& [key, v] : table.entries()) {
            out[py::make_tuple(key.first, key.second)] = to_py(v);
        }
        return out;
    }, py::arg("gens"), py::arg("n"), py::arg("t"), py::arg("borel") = false,
          "{(k, l): beta_{k,k+l}} for the ideal generated by gens");
    m.def("betti_diagram", [](const std::vector<Indices>& gens, int n, int t, bool borel) {
        return render_diagram(graded_betti(make_ideal(gens, n, t, borel)));
    }, py::arg("gens"), py::arg("n"), py::arg("t"), py::arg("borel") = false);
    m.def("corners", [](const std::vector<Indices>& gens, int n, int t, bool borel) {
        return corners_dict(corners_via_characterization(make_ideal(gens, n, t, borel)));
    }, py::arg("gens"), py::arg("n"), py::arg("t"), py::arg("borel") = false);

    m.def("max_corners", &max_corners, py::arg("n"), py::arg("t"), py::arg("ell1"));
    m.def("construct", [](int n, int t, int ell1) {
        auto ext = construct_extremal_ideal(n, t, ell1);
        const auto& r = ext.report;
        py::dict d;
        d["n"] = n;
        d["t"] = t;
        d["ell1"] = ell1;
        d["d"] = r.decomp.d;
        d["k"] = r.decomp.k;
        d["j_max"] = r.j_max;
        d["s"] = r.s;
        d["nu_max"] = r.nu_max;
        d["regime"] = to_string(r.regime);
        d["omegas"] = to_lists(r.omegas);
        d["corners"] = r.predicted_corners;
        d["gens"] = to_lists(ext.ideal.all_generators());
        return d;
    }, py::arg("n"), py::arg("t"), py::arg("ell1"), "Extremal ideal with the maximal number of corners");
    m.def("brute_force_max_corners", [](int n, int t, int ell1, double timeout, bool count_k0) {
        SearchBudget budget;
        budget.timeout_seconds = timeout;
        BruteForceOptions options;
        options.positive_k_only = !count_k0;
        auto res = brute_force_max_corners(Context(n, t), ell1, budget, options);
        return py::make_tuple(res.cell.value, res.cell.partial);
    }, py::arg("n"), py::arg("t"), py::arg("ell1"), py::arg("timeout") = 60.0, py::arg("count_k0") = false,
          "(value, partial) for one table cell");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line in-process: (exit code, stdout, stderr)");
}
