#include "tspread/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "tspread/betti.hpp"
#include "tspread/error.hpp"
#include "tspread/extremal.hpp"
#include "tspread/ideal.hpp"
#include "tspread/json_io.hpp"
#include "tspread/oracle.hpp"

namespace tspread::cli {

namespace {

IntRange parse_range(const std::string& text) {
    auto colon = text.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            int v = std::stoi(text, &used);
            if (used != text.size()) {
                throw ParseError("");
            }
            if (v < 1) {
                throw ParseError("");
            }
            return {v, v};
        }
        std::string a = text.substr(0, colon);
        std::string b = text.substr(colon + 1);
        int lo = std::stoi(a, &used);
        if (used != a.size()) {
            throw ParseError("");
        }
        int hi = std::stoi(b, &used);
        if (used != b.size()) {
            throw ParseError("");
        }
        if (lo < 1 || hi < lo) {
            throw ParseError("");
        }
        return {lo, hi};
    } catch (const std::exception&) {
        throw ParseError("bad range '" + text + "', expected a:b");
    }
}

double default_budget_seconds() {
    if (const char* env = std::getenv("TSPREAD_BUDGET_SECONDS")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("TSPREAD_BUDGET_SECONDS is not a number: ") + env);
        }
    }
    return 600.0;
}

std::string corners_line(const CornerSequence& seq) {
    std::string out = "corners:";
    if (seq.size() == 0) {
        return out + " none";
    }
    for (auto [k, l] : seq.corners) {
        out += " (" + std::to_string(k) + "," + std::to_string(l) + ")";
    }
    return out;
}

std::string values_line(const CornerSequence& seq) {
    std::string out = "values:";
    for (const auto& v : seq.values) {
        out += " " + v.str();
    }
    return out;
}

struct Common {
    std::string format = "text";
};

void add_format(CLI::App* cmd, Common& c, std::vector<std::string> allowed) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

struct BudgetFlags {
    double seconds = 0;
    std::uint64_t max_ideals = UINT64_MAX;
    int max_n = SearchBudget{}.max_n;
    bool count_k0 = false;
    bool any_l1 = false;
    bool any_values = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-seconds", seconds, "Wall-clock budget per brute-force cell");
        cmd->add_option("--max-ideals", max_ideals, "Cap on enumerated ideals per cell");
        cmd->add_option("--max-n", max_n, "Largest n attempted by brute force");
        cmd->add_flag("--count-k0", count_k0, "Also count corners in column 0");
        cmd->add_flag("--any-l1", any_l1, "Do not require a corner in the initial degree");
        cmd->add_flag("--any-values", any_values, "Do not require all corner values to be 1");
    }

    [[nodiscard]] SearchBudget budget() const {
        SearchBudget b;
        b.timeout_seconds = seconds;
        b.max_ideals = max_ideals;
        b.max_n = max_n;
        return b;
    }

    [[nodiscard]] BruteForceOptions options() const {
        BruteForceOptions o;
        o.positive_k_only = !count_k0;
        o.require_corner_at_ell1 = !any_l1;
        o.require_unit_values = !any_values;
        return o;
    }
};

int cmd_enumerate(int n, int t, int d, bool count, const Common& c, std::ostream& out) {
    auto set = enumerate(Context(n, t), d);
    if (count) {
        out << set.size() << '\n';
        return kOk;
    }
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& u : set) {
            arr.push_back(monomial_to_json(u));
        }
        out << arr.dump() << '\n';
        return kOk;
    }
    for (const auto& u : set) {
        out << format_monomial(u) << '\n';
    }
    return kOk;
}

SpreadIdeal load_ideal(const std::string& file, const std::string& gens_text, int n, int t, bool borel) {
    Context ctx;
    std::vector<Monomial> gens;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            throw ParseError("cannot open " + file);
        }
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw ParseError(file + ": " + e.what());
        }
        std::tie(ctx, gens) = generators_from_json(j);
    } else {
        if (n < 1) {
            throw ParseError("--gens needs -n");
        }
        ctx = Context(n, t);
        gens = parse_monomial_list(gens_text);
        for (const auto& g : gens) {
            validate(g, ctx);
        }
    }
    if (borel) {
        return borel_ideal(gens, ctx);
    }
    return SpreadIdeal::from_generators(ctx, std::move(gens));
}

int cmd_betti(const SpreadIdeal& ideal, const Common& c, std::ostream& out) {
    auto table = graded_betti(ideal);
    auto corners = corners_from_table(table);
    if (c.format == "json") {
        Json j = betti_to_json(table);
        auto cj = corners_to_json(corners);
        j["corners"] = cj["corners"];
        j["values"] = cj["values"];
        if (!table.empty()) {
            j["regularity"] = regularity(table);
            j["proj_dim"] = proj_dim(table);
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    if (table.empty()) {
        return kOk;
    }
    out << render_diagram(table) << '\n';
    out << corners_line(corners) << '\n' << values_line(corners) << '\n';
    out << "regularity: " << regularity(table) << '\n' << "proj_dim: " << proj_dim(table) << '\n';
    return kOk;
}

int cmd_construct(int n, int t, int ell1, bool show_ideal, const Common& c, std::ostream& out) {
    auto ext = construct_extremal_ideal(n, t, ell1);
    const auto& r = ext.report;
    if (c.format == "json") {
        Json j = report_to_json(r);
        j["ideal"] = ideal_to_json(ext.ideal);
        j["verified"] = corners_to_json(ext.corners);
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "n = " << n << ", t = " << t << ", l1 = " << ell1 << '\n';
    out << "decomposition: n = " << r.decomp.d << " + " << r.decomp.k << "*" << t << " (d = " << r.decomp.d
        << ", k = " << r.decomp.k << ")\n";
    out << "regime: " << to_string(r.regime) << '\n';
    if (r.regime == Regime::SmallK) {
        out << "note: small-k regime (k = " << r.decomp.k << "), omegas taken from the explicit small cases\n";
    }
    out << "j_max = " << r.j_max << '\n' << "s = " << r.s << '\n' << "nu_max = " << r.nu_max << '\n';
    out << "critic: " << (r.has_critic ? "yes" : "no") << '\n';
    out << "omegas (" << r.total << "):\n";
    for (std::size_t j = 0; j < r.omegas.size(); ++j) {
        out << "  omega_" << j << " = " << format_monomial(r.omegas[j]) << '\n';
    }
    out << corners_line(ext.corners) << '\n' << values_line(ext.corners) << '\n';
    out << "generators: " << ext.ideal.generator_count() << '\n';
    if (show_ideal) {
        for (const auto& g : ext.ideal.all_generators()) {
            out << "  " << format_monomial(g) << '\n';
        }
    }
    return kOk;
}

void render_grid(const std::vector<TableCell>& cells, int t, bool markdown, std::ostream& out) {
    std::vector<int> ns;
    std::vector<int> ls;
    std::map<std::pair<int, int>, std::string> text;
    for (const auto& c : cells) {
        if (std::find(ns.begin(), ns.end(), c.n) == ns.end()) {
            ns.push_back(c.n);
        }
        if (std::find(ls.begin(), ls.end(), c.ell1) == ls.end()) {
            ls.push_back(c.ell1);
        }
        text[{c.ell1, c.n}] = c.value_text() + (c.partial ? "?" : "");
    }
    if (markdown) {
        out << "| t=" << t << " l1 \\ n |";
        for (int n : ns) {
            out << ' ' << n << " |";
        }
        out << "\n|---|";
        for (std::size_t i = 0; i < ns.size(); ++i) {
            out << "---|";
        }
        out << '\n';
        for (int l : ls) {
            out << "| " << l << " |";
            for (int n : ns) {
                out << ' ' << text[{l, n}] << " |";
            }
            out << '\n';
        }
        return;
    }
    std::string corner = "t=" + std::to_string(t);
    std::size_t lw = corner.size();
    for (int l : ls) {
        lw = std::max(lw, std::to_string(l).size());
    }
    std::size_t cw = 1;
    for (int n : ns) {
        cw = std::max(cw, std::to_string(n).size());
    }
    for (const auto& [key, s] : text) {
        cw = std::max(cw, s.size());
    }
    auto pad = [&](const std::string& s, std::size_t w) { out << std::string(w - s.size(), ' ') << s; };
    pad(corner, lw);
    for (int n : ns) {
        out << ' ';
        pad(std::to_string(n), cw);
    }
    out << '\n';
    for (int l : ls) {
        pad(std::to_string(l), lw);
        for (int n : ns) {
            out << ' ';
            pad(text[{l, n}], cw);
        }
        out << '\n';
    }
}

int cmd_table(int t, IntRange ns, IntRange ls, int upto, const BudgetFlags& bf, const Common& c, std::ostream& out) {
    auto cells = regenerate_table(t, ns, ls, upto, bf.budget(), bf.options());
    bool partial = std::any_of(cells.begin(), cells.end(), [](const TableCell& x) { return x.partial; });
    if (c.format == "csv") {
        out << "t,n,ell1,value,provenance\n";
        for (const auto& x : cells) {
            out << x.t << ',' << x.n << ',' << x.ell1 << ',' << x.value_text() << ',' << to_string(x.provenance)
                << (x.partial ? "-partial" : "") << '\n';
        }
    } else if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& x : cells) {
            arr.push_back(cell_to_json(x));
        }
        out << arr.dump(2) << '\n';
    } else {
        render_grid(cells, t, c.format == "markdown", out);
    }
    return partial ? kPartial : kOk;
}

int cmd_validate(IntRange ns, IntRange ts, IntRange ls, const BudgetFlags& bf, const Common& c, std::ostream& out) {
    auto rep = cross_validate(ns, ts, ls, bf.budget(), bf.options());
    if (c.format == "json") {
        Json list = Json::array();
        for (const auto& d : rep.disagreements) {
            list.push_back(disagreement_to_json(d));
        }
        Json j = {{"checks", rep.checks}, {"partial", rep.partial}, {"disagreements", std::move(list)}};
        out << j.dump(2) << '\n';
    } else {
        for (const auto& d : rep.disagreements) {
            out << "DISAGREE " << d.check << " n=" << d.n << " t=" << d.t << " l1=" << d.ell1 << ": " << d.detail
                << '\n';
        }
        out << "checks: " << rep.checks << ", disagreements: " << rep.disagreements.size()
            << (rep.partial ? " (partial)" : "") << '\n';
    }
    if (!rep.disagreements.empty()) {
        return kDisagreement;
    }
    return rep.partial ? kPartial : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"t-spread strongly stable ideals: enumeration, Betti tables, extremal constructions"};
    app.require_subcommand(1);

    Common common;
    int n = 0;
    int t = 0;
    int d = 0;
    int ell1 = 2;

    auto* en = app.add_subcommand("enumerate", "List M_{n,d,t} in slex-descending order");
    bool count = false;
    en->add_option("-n", n, "Number of variables")->required()->check(CLI::PositiveNumber);
    en->add_option("-t", t, "Spread")->required()->check(CLI::NonNegativeNumber);
    en->add_option("-d", d, "Degree")->required()->check(CLI::PositiveNumber);
    en->add_flag("--count", count, "Print only the number of monomials");
    add_format(en, common, {"text", "json"});

    auto* be = app.add_subcommand("betti", "Graded Betti diagram and corners of a strongly stable ideal");
    std::string file;
    std::string gens_text;
    bool borel = false;
    be->add_option("file", file, "Ideal JSON file");
    be->add_option("--gens", gens_text, "Inline generators, e.g. \"x1*x14,x2*x4*x14\"");
    be->add_option("-n", n, "Number of variables (with --gens)")->check(CLI::PositiveNumber);
    be->add_option("-t", t, "Spread (with --gens)")->check(CLI::NonNegativeNumber);
    be->add_flag("--borel", borel, "Treat the generators as Borel generators");
    add_format(be, common, {"text", "json"});

    auto* co = app.add_subcommand("construct", "Extremal ideal with the maximal number of corners");
    bool show_ideal = false;
    co->add_option("-n", n, "Number of variables")->required()->check(CLI::PositiveNumber);
    co->add_option("-t", t, "Spread")->required()->check(CLI::NonNegativeNumber);
    co->add_option("-l", ell1, "Initial degree")->required();
    co->add_flag("--ideal", show_ideal, "Also list the minimal generators");
    add_format(co, common, {"text", "json"});

    auto* ta = app.add_subcommand("table", "Maximal number of corners by n and initial degree");
    std::string n_range = "4:20";
    std::string l_range = "2:10";
    int upto = 0;
    BudgetFlags table_budget;
    ta->add_option("-t", t, "Spread")->required()->check(CLI::PositiveNumber);
    ta->add_option("--n", n_range, "Range of n, a:b");
    ta->add_option("--l", l_range, "Range of initial degrees, a:b");
    ta->add_option("--brute-force-upto", upto, "Brute-force every cell with n up to this value");
    table_budget.attach(ta);
    add_format(ta, common, {"text", "json", "markdown", "csv"});

    auto* va = app.add_subcommand("validate", "Cross-check closed forms against brute force");
    std::string vn = "4:9";
    std::string vt = "2:3";
    std::string vl = "2:7";
    BudgetFlags validate_budget;
    va->add_option("--n", vn, "Range of n, a:b");
    va->add_option("--t", vt, "Range of t, a:b");
    va->add_option("--l", vl, "Range of initial degrees, a:b");
    validate_budget.attach(va);
    add_format(va, common, {"text", "json"});

    try {
        table_budget.seconds = validate_budget.seconds = default_budget_seconds();
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*en) {
            return cmd_enumerate(n, t, d, count, common, out);
        }
        if (*be) {
            if (file.empty() == gens_text.empty()) {
                err << "error: give exactly one of an ideal file or --gens\n";
                return kUsage;
            }
            return cmd_betti(load_ideal(file, gens_text, n, t, borel), common, out);
        }
        if (*co) {
            return cmd_construct(n, t, ell1, show_ideal, common, out);
        }
        if (*ta) {
            return cmd_table(t, parse_range(n_range), parse_range(l_range), upto, table_budget, common, out);
        }
        if (*va) {
            return cmd_validate(parse_range(vn), parse_range(vt), parse_range(vl), validate_budget, common, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kPartial;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}

}  // namespace tspread::cli
