#include "leghopf_app/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "leghopf/classify.hpp"
#include "leghopf/families.hpp"
#include "leghopf/slopes.hpp"
#include "leghopf/surgery.hpp"
#include "leghopf_app/acceptance.hpp"
#include "leghopf_app/diagram_json.hpp"

namespace leghopf::app {

namespace {

using nlohmann::json;
using classify::Realization;

enum class Format { Table, Json, Tsv };

// Input problems exit with 2, computed failures with 1.
int exit_code_for(Errc c) {
    switch (c) {
    case Errc::BadParams:
    case Errc::OutOfRange:
    case Errc::NotCoprime:
    case Errc::NotHalfInteger:
    case Errc::ParityMismatch:
    case Errc::InvalidDiagram:
    case Errc::NotSymmetric:
    case Errc::DimensionMismatch:
    case Errc::IndexOutOfRange:
    case Errc::DivisionByZero:
        return 2;
    default:
        return 1;
    }
}

void report_error(std::ostream& err, const std::string& code, const std::string& message) {
    err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

long long max_iter_from_env() {
    const char* v = std::getenv("LEGHOPF_MAX_ITER");
    if (v == nullptr || *v == '\0') return slopes::kDefaultMaxIter;
    char* end = nullptr;
    const long long n = std::strtoll(v, &end, 10);
    if (*end != '\0' || n <= 0) throw Error(Errc::BadParams, "LEGHOPF_MAX_ITER must be a positive integer");
    return n;
}

json row_json(const Realization& r) {
    return {{"t0", r.t0},
            {"r0", r.r0},
            {"t1", r.t1},
            {"r1", r.r1},
            {"d3", r.d3.str()},
            {"type0", classify::comp_type_name(r.type0)},
            {"type1", classify::comp_type_name(r.type1)},
            {"twisting", r.twisting},
            {"source", r.source}};
}

void print_rows(std::ostream& out, Format f, const std::vector<Realization>& rows,
                const std::vector<std::string>& notes) {
    switch (f) {
    case Format::Table:
        for (const auto& r : rows) out << r.str() << '\n';
        for (const auto& n : notes) out << "# " << n << '\n';
        break;
    case Format::Tsv:
        out << "t0\tr0\tt1\tr1\td3\ttype0\ttype1\ttwisting\tsource\n";
        for (const auto& r : rows)
            out << r.t0 << '\t' << r.r0 << '\t' << r.t1 << '\t' << r.r1 << '\t' << r.d3.str() << '\t'
                << classify::comp_type_name(r.type0) << '\t' << classify::comp_type_name(r.type1) << '\t'
                << r.twisting << '\t' << r.source << '\n';
        break;
    case Format::Json: {
        json j{{"rows", json::array()}, {"notes", notes}};
        for (const auto& r : rows) j["rows"].push_back(row_json(r));
        out << j.dump(2) << '\n';
        break;
    }
    }
}

std::vector<std::string> notes_for(const std::vector<Realization>& rows) {
    for (const auto& r : rows)
        if (r.source == "b1") return {classify::b1_range_note()};
    return {};
}

// Rows of `classify --case exceptional` at one cell; empty when both t < 0.
std::vector<Realization> exceptional_cell(long long t0, long long t1) {
    if (t0 < 0 && t1 < 0) return {};
    return classify::strongly_exceptional(t0, t1);
}

std::string matrix_str(const slopes::SL2& a) {
    return "[[" + a.a.str() + "," + a.b.str() + "],[" + a.c.str() + "," + a.d.str() + "]]";
}

// ---- subcommands ------------------------------------------------------------

int cmd_cfrac(std::ostream& out, Format f, const std::string& s_text) {
    const Rational s = Rational::parse(s_text);
    const slopes::CFrac c = slopes::cfrac(s);
    const Int n = slopes::honda_count(c);
    switch (f) {
    case Format::Table: out << slopes::cfrac_str(c) << " N=" << n << '\n'; break;
    case Format::Tsv: out << "s\tcfrac\tN\n" << s.str() << '\t' << slopes::cfrac_str(c) << '\t' << n << '\n'; break;
    case Format::Json: {
        json entries = json::array();
        for (const auto& r : c) entries.push_back(int_json(r));
        out << json{{"s", s.str()}, {"cfrac", entries}, {"N", int_json(n)}}.dump(2) << '\n';
        break;
    }
    }
    return 0;
}

int cmd_count(std::ostream& out, Format f, long long t0, long long t1, std::optional<long long> twisting,
              bool diffeo) {
    const long long max_iter = max_iter_from_env();
    std::string value;
    json jv;
    if (twisting) {
        const long long n = slopes::count_twisting(t0, t1, *twisting, diffeo, max_iter);
        value = std::to_string(n);
        jv = n;
    } else {
        if (diffeo) throw Error(Errc::BadParams, "--diffeo applies to the twisting count only");
        const slopes::TightCount c = slopes::count_tight(t0, t1, max_iter);
        value = c.str();
        jv = c.integral_family ? json("integral-family") : int_json(c.n);
    }
    switch (f) {
    case Format::Table: out << value << '\n'; break;
    case Format::Tsv: out << "t0\tt1\tcount\n" << t0 << '\t' << t1 << '\t' << value << '\n'; break;
    case Format::Json: {
        json j{{"t0", t0}, {"t1", t1}, {"count", jv}};
        if (twisting) {
            j["twisting"] = *twisting;
            j["up_to"] = diffeo ? "diffeomorphism" : "isotopy";
        }
        out << j.dump(2) << '\n';
        break;
    }
    }
    return 0;
}

int cmd_normalize(std::ostream& out, Format f, long long t0, long long t1) {
    const auto nm = slopes::normalize(t0, t1, max_iter_from_env());
    switch (f) {
    case Format::Table:
        out << "s1'=" << nm.s1p.str() << " A=" << matrix_str(nm.A) << " k=" << nm.k
            << " iterations=" << nm.iterations << '\n';
        break;
    case Format::Tsv:
        out << "t0\tt1\ts1p\tA\tk\titerations\n"
            << t0 << '\t' << t1 << '\t' << nm.s1p.str() << '\t' << matrix_str(nm.A) << '\t' << nm.k << '\t'
            << nm.iterations << '\n';
        break;
    case Format::Json: {
        json trail = json::array();
        for (const auto& s : nm.trail) trail.push_back(s.str());
        out << json{{"t0", t0},
                    {"t1", t1},
                    {"s1p", nm.s1p.str()},
                    {"A", {{int_json(nm.A.a), int_json(nm.A.b)}, {int_json(nm.A.c), int_json(nm.A.d)}}},
                    {"k", nm.k},
                    {"iterations", nm.iterations},
                    {"trail", trail}}
                   .dump(2)
            << '\n';
        break;
    }
    }
    return 0;
}

surgery::SurgeryDiagram read_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidDiagram, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidDiagram, path + ": " + e.what());
    }
    return diagram_from_json(j);
}

int cmd_invariants(std::ostream& out, Format f, const std::string& path) {
    const auto d = read_diagram(path);
    const Int det = exact::det(surgery::linking_matrix(d));
    const auto terms = surgery::d3_terms(d);
    const std::size_t nc = d.components.size();
    std::vector<Rational> tb, rot;
    for (std::size_t i = 0; i < nc; ++i) {
        tb.push_back(surgery::tb_after(d, i));
        rot.push_back(surgery::rot_after(d, i));
    }
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> lk;
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = i + 1; j < nc; ++j) lk.emplace_back(i, j, surgery::lk_after(d, i, j));
    std::string parity = "not applicable (|det M| != 1)";
    int code = 0;
    try {
        if (surgery::parity_check(d).applicable) parity = "ok";
    } catch (const Error& e) {
        parity = e.what();
        code = 1;
    }
    switch (f) {
    case Format::Table:
        out << "det M = " << det << '\n';
        out << "d3 = " << terms.d3.str() << "  (c^2=" << terms.c2.str() << " sigma=" << terms.sigma
            << " chi=" << terms.chi << " q=" << terms.q << ")\n";
        for (std::size_t i = 0; i < nc; ++i)
            out << "L" << i << ": tb=" << tb[i].str() << " rot=" << rot[i].str() << '\n';
        for (const auto& [i, j, v] : lk) out << "lk(L" << i << ",L" << j << ") = " << v.str() << '\n';
        out << "parity: " << parity << '\n';
        break;
    case Format::Tsv:
        out << "component\ttb\trot\n";
        for (std::size_t i = 0; i < nc; ++i) out << i << '\t' << tb[i].str() << '\t' << rot[i].str() << '\n';
        break;
    case Format::Json: {
        json comps = json::array();
        for (std::size_t i = 0; i < nc; ++i) comps.push_back({{"tb", rational_json(tb[i])}, {"rot", rational_json(rot[i])}});
        json lks = json::array();
        for (const auto& [i, j, v] : lk) lks.push_back({{"i", i}, {"j", j}, {"lk", rational_json(v)}});
        out << json{{"det", int_json(det)},
                    {"d3", terms.d3.str()},
                    {"c2", terms.c2.str()},
                    {"sigma", terms.sigma},
                    {"chi", terms.chi},
                    {"q", terms.q},
                    {"components", comps},
                    {"lk", lks},
                    {"parity", parity}}
                   .dump(2)
            << '\n';
        break;
    }
    }
    return code;
}

struct FamilyArgs {
    std::string id;
    long long k = 0, l = 0, n = 0, m = 0;
    std::string side = "L";
    int variant = 1;
    bool emit = false;
    std::string out_path;
};

families::FamilyId family_id(const FamilyArgs& a) {
    families::FamilyId id;
    id.kind = families::parse_kind(a.id);
    id.k = a.k;
    id.l = a.l;
    id.n = a.n;
    id.m = a.m;
    if (a.side != "L" && a.side != "R") throw Error(Errc::BadParams, "--side must be L or R");
    id.side = a.side == "L" ? families::Side::L : families::Side::R;
    id.variant = a.variant;
    families::check_params(id);
    return id;
}

int cmd_family(std::ostream& out, Format f, const FamilyArgs& a) {
    const auto id = family_id(a);
    if (a.emit || !a.out_path.empty()) {
        const std::string text = to_json(families::instantiate(id)).dump(2) + "\n";
        if (a.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(a.out_path);
            if (!file) throw Error(Errc::BadParams, "cannot write " + a.out_path);
            file << text;
        }
        if (a.emit) return 0;
    }
    const auto rep = families::verify(id);
    const auto want = families::expected(id);
    switch (f) {
    case Format::Table:
        out << id.str() << ": " << (rep.ok() ? "OK" : "MISMATCH") << '\n';
        for (const auto& r : want) out << "expected " << r.str() << '\n';
        for (const auto& r : rep.computed) out << "computed " << r.str() << '\n';
        for (const auto& m : rep.mismatches) out << "mismatch " << m.field << ": got " << m.got << ", want " << m.want << '\n';
        break;
    case Format::Tsv:
        out << "which\tt0\tr0\tt1\tr1\td3\n";
        for (const auto& r : want)
            out << "expected\t" << r.t0 << '\t' << r.r0 << '\t' << r.t1 << '\t' << r.r1 << '\t' << r.d3.str() << '\n';
        for (const auto& r : rep.computed)
            out << "computed\t" << r.t0 << '\t' << r.r0 << '\t' << r.t1 << '\t' << r.r1 << '\t' << r.d3.str() << '\n';
        break;
    case Format::Json: {
        auto rows = [](const std::vector<families::ExpectedRow>& v) {
            json a = json::array();
            for (const auto& r : v)
                a.push_back({{"t0", r.t0}, {"r0", r.r0}, {"t1", r.t1}, {"r1", r.r1}, {"d3", r.d3.str()},
                             {"type0", classify::comp_type_name(r.type0)}, {"type1", classify::comp_type_name(r.type1)}});
            return a;
        };
        json mm = json::array();
        for (const auto& m : rep.mismatches) mm.push_back({{"field", m.field}, {"got", m.got}, {"want", m.want}});
        out << json{{"id", id.str()}, {"ok", rep.ok()}, {"expected", rows(want)}, {"computed", rows(rep.computed)},
                    {"mismatches", mm}}
                   .dump(2)
            << '\n';
        break;
    }
    }
    return rep.ok() ? 0 : 1;
}

int cmd_classify(std::ostream& out, Format f, long long t0, long long t1, const std::string& which) {
    std::vector<Realization> rows;
    const bool tight = which == "tight" || (which.empty() && t0 < 0 && t1 < 0);
    if (!which.empty() && which != "tight" && which != "exceptional")
        throw Error(Errc::BadParams, "--case must be tight or exceptional");
    rows = tight ? classify::tight_realizations(t0, t1) : exceptional_cell(t0, t1);
    print_rows(out, f, rows, notes_for(rows));
    return 0;
}

int cmd_twisting(std::ostream& out, Format f, long long t0, long long t1, long long n) {
    print_rows(out, f, classify::twisting_realizations(t0, t1, n), {});
    return 0;
}

int cmd_loose(std::ostream& out, Format f, long long t0, long long r0, long long t1, long long r1,
              const std::string& d_text, bool plan) {
    const Rational d = Rational::parse(d_text);
    std::vector<Realization> rows;
    std::vector<std::string> notes;
    if (classify::loose_realization_exists(t0, r0, t1, r1, d)) {
        Realization r;
        r.t0 = t0;
        r.r0 = r0;
        r.t1 = t1;
        r.r1 = r1;
        r.d3 = d;
        r.source = "f";
        rows.push_back(r);
        if (plan) {
            const std::pair<long long, long long> start{-1, 0};
            for (int i = 0; i < 2; ++i) {
                const std::pair<long long, long long> target = i == 0 ? std::make_pair(t0, r0) : std::make_pair(t1, r1);
                std::string s = "L" + std::to_string(i) + " from (-1,0):";
                for (auto mv : classify::loose_plan(start, target)) s += std::string(" ") + classify::move_name(mv);
                notes.push_back(s);
            }
        }
    } else {
        notes.push_back("no loose realisation: tb + rot must be odd for both components");
    }
    print_rows(out, f, rows, notes);
    return 0;
}

int cmd_table(std::ostream& out, Format f, const std::string& which, long long lo, long long hi) {
    if (lo > hi) throw Error(Errc::BadParams, "--t-min exceeds --t-max");
    std::vector<Realization> rows;
    std::vector<std::string> notes;
    if (which == "se") {
        for (long long t0 = lo; t0 <= hi; ++t0)
            for (long long t1 = lo; t1 <= hi; ++t1) {
                auto cell = exceptional_cell(t0, t1);
                rows.insert(rows.end(), cell.begin(), cell.end());
            }
        notes = notes_for(rows);
    } else if (which == "summary") {
        for (long long t0 = std::max(lo, 1LL); t0 <= hi; ++t0)
            for (long long t1 = std::max(lo, 1LL); t1 <= hi; ++t1) {
                if (t0 == 1 && t1 == 1) {
                    notes.push_back("(1,1) is the integral-family case; its unique realisation is (1,0,1,0) in d3=1/2");
                    continue;
                }
                auto cell = classify::summary_patterns(t0, t1);
                rows.insert(rows.end(), cell.begin(), cell.end());
            }
    } else {
        throw Error(Errc::BadParams, "--which must be se or summary");
    }
    print_rows(out, f, rows, notes);
    return 0;
}

int cmd_selfcheck(std::ostream& out, Format f, const std::vector<int>& only) {
    std::vector<acceptance::Result> results;
    if (only.empty()) results = acceptance::run_all();
    else
        for (int id : only) results.push_back(acceptance::criterion(id));
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    switch (f) {
    case Format::Table:
        for (const auto& r : results) out << acceptance::line(r) << '\n';
        out << (all ? "all criteria pass" : "some criteria FAIL") << '\n';
        break;
    case Format::Tsv:
        out << "id\tpass\tseconds\ttitle\tdetail\n";
        for (const auto& r : results)
            out << r.id << '\t' << (r.pass ? "pass" : "fail") << '\t' << r.seconds << '\t' << r.title << '\t'
                << r.detail << '\n';
        break;
    case Format::Json: {
        json a = json::array();
        for (const auto& r : results)
            a.push_back({{"id", r.id}, {"pass", r.pass}, {"seconds", r.seconds}, {"title", r.title}, {"detail", r.detail}});
        out << json{{"pass", all}, {"criteria", a}}.dump(2) << '\n';
        break;
    }
    }
    return all ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Legendrian Hopf link invariants, tight counts and classification tables", "leghopf"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "tsv"}))
        ->capture_default_str();

    std::string s_text;
    auto* c_cfrac = app.add_subcommand("cfrac", "Negative continued fraction of s < -1 and its count");
    c_cfrac->add_option("-s", s_text, "Rational p/q")->required()->allow_extra_args(false);

    long long t0 = 0, t1 = 0, r0 = 0, r1 = 0, n = 0;
    std::optional<long long> twist;
    bool diffeo = false;
    auto* c_count = app.add_subcommand("count", "Tight minimally twisting structures on T^2 x I");
    c_count->add_option("--t0", t0)->required();
    c_count->add_option("--t1", t1)->required();
    c_count->add_option("--twisting", twist, "pi-twisting n >= 1");
    c_count->add_flag("--diffeo", diffeo, "Count up to diffeomorphism instead of isotopy");

    auto* c_norm = app.add_subcommand("normalize", "SL(2,Z) normalisation of the boundary slopes");
    c_norm->add_option("--t0", t0)->required();
    c_norm->add_option("--t1", t1)->required();

    std::string path;
    auto* c_inv = app.add_subcommand("invariants", "Invariants of a surgery diagram file");
    c_inv->add_option("-f,--file", path, "Diagram JSON")->required();

    FamilyArgs fam;
    auto* c_fam = app.add_subcommand("family", "Verify or emit a family diagram");
    c_fam->add_option("--id", fam.id, "B1 B2 C2_31 C2_22 C3_T01 C3_T02 C4 D LUTZ_NEG LUTZ_POS")->required();
    c_fam->add_option("--k", fam.k);
    c_fam->add_option("--l", fam.l);
    c_fam->add_option("--n", fam.n);
    c_fam->add_option("--m", fam.m);
    c_fam->add_option("--side", fam.side)->check(CLI::IsMember({"L", "R"}));
    c_fam->add_option("--variant", fam.variant);
    c_fam->add_flag("--emit", fam.emit, "Print the diagram JSON instead of the report");
    c_fam->add_option("-o,--out", fam.out_path, "Also write the diagram JSON to a file");

    std::string which_case;
    auto* c_cls = app.add_subcommand("classify", "Tight or strongly exceptional realisations");
    c_cls->add_option("--t0", t0)->required();
    c_cls->add_option("--t1", t1)->required();
    c_cls->add_option("--case", which_case)->check(CLI::IsMember({"tight", "exceptional"}));

    auto* c_tw = app.add_subcommand("twisting", "Realisations with pi-twisting n");
    c_tw->add_option("--t0", t0)->required();
    c_tw->add_option("--t1", t1)->required();
    c_tw->add_option("-n", n)->required();

    std::string d_text;
    bool plan = false;
    auto* c_loose = app.add_subcommand("loose", "Loose realisation with given invariants");
    c_loose->add_option("--t0", t0)->required();
    c_loose->add_option("--r0", r0)->required();
    c_loose->add_option("--t1", t1)->required();
    c_loose->add_option("--r1", r1)->required();
    c_loose->add_option("--d", d_text, "Ambient d3, e.g. -1/2")->required();
    c_loose->add_flag("--plan", plan, "Stabilisation plan from the tb=-1 unknot");

    std::string which = "se";
    long long lo = -6, hi = 6;
    auto* c_tab = app.add_subcommand("table", "Table of strongly exceptional realisations over a grid");
    c_tab->add_option("--which", which)->check(CLI::IsMember({"se", "summary"}))->capture_default_str();
    c_tab->add_option("--t-min", lo)->capture_default_str();
    c_tab->add_option("--t-max", hi)->capture_default_str();

    std::vector<int> only;
    auto* c_self = app.add_subcommand("selfcheck", "Run the acceptance criteria");
    c_self->add_option("--only", only, "Criterion ids")->check(CLI::Range(1, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        report_error(err, "BadFlags", e.what());
        return 2;
    }

    const Format f = format == "json" ? Format::Json : (format == "tsv" ? Format::Tsv : Format::Table);
    try {
        if (*c_cfrac) return cmd_cfrac(out, f, s_text);
        if (*c_count) return cmd_count(out, f, t0, t1, twist, diffeo);
        if (*c_norm) return cmd_normalize(out, f, t0, t1);
        if (*c_inv) return cmd_invariants(out, f, path);
        if (*c_fam) return cmd_family(out, f, fam);
        if (*c_cls) return cmd_classify(out, f, t0, t1, which_case);
        if (*c_tw) return cmd_twisting(out, f, t0, t1, n);
        if (*c_loose) return cmd_loose(out, f, t0, r0, t1, r1, d_text, plan);
        if (*c_tab) return cmd_table(out, f, which, lo, hi);
        if (*c_self) return cmd_selfcheck(out, f, only);
    } catch (const Error& e) {
        report_error(err, errc_name(e.code()), e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        report_error(err, "Internal", e.what());
        return 1;
    }
    return 2;
}

} // namespace leghopf::app
