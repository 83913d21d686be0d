#include "symdecomp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "symdecomp/decomp.hpp"
#include "symdecomp/ehrhart.hpp"
#include "symdecomp/errors.hpp"
#include "symdecomp/harness.hpp"
#include "symdecomp/json_io.hpp"
#include "symdecomp/realroots.hpp"
#include "symdecomp/veronese.hpp"

namespace symdecomp::cli {

namespace {

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
std::string json_source(const std::string &arg)
{
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        return arg;
    }
    std::ifstream in(arg);
    if (!in) {
        throw InputError("cannot read '" + arg + "' (expected inline JSON or a file path)");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Polynomial read_polynomial(const std::string &arg) { return parse_polynomial(json_source(arg)); }

json roots_json(const RootCatalog &catalog)
{
    json out = json::array();
    for (const auto &e : catalog.entries) {
        json entry{{"multiplicity", e.multiplicity}, {"exact", e.exact}};
        if (e.exact) {
            entry["value"] = to_string(e.value());
        } else {
            entry["interval"] = json::array({to_string(e.lower), to_string(e.upper)});
        }
        out.push_back(std::move(entry));
    }
    return out;
}

bool is_polynomial_json(const json &j)
{
    return j.is_object() && j.size() == 1 && j.contains("coeffs") && j.at("coeffs").is_array();
}

void render(std::ostream &os, const json &j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto &[key, value] : j.items()) {
        os << pad << std::left << std::setw(20) << key;
        if (is_polynomial_json(value)) {
            os << polynomial_from_json(value) << '\n';
        } else if (value.is_object()) {
            os << '\n';
            render(os, value, indent + 2);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            os << '\n';
            for (const auto &item : value) {
                if (is_polynomial_json(item)) {
                    os << pad << "  " << polynomial_from_json(item) << '\n';
                } else {
                    render(os, item, indent + 2);
                    os << '\n';
                }
            }
        } else if (value.is_string()) {
            os << value.get<std::string>() << '\n';
        } else {
            os << value.dump() << '\n';
        }
    }
}

void emit(std::ostream &out, const json &j, bool pretty)
{
    if (pretty) {
        render(out, j, 0);
    } else {
        out << j.dump() << '\n';
    }
}

json decomposition_json(const DecompPair &dec)
{
    return json{{"p", to_json(dec.p)}, {"q", to_json(dec.q)}};
}

struct Options {
    bool pretty = false;
    std::string backend = "product";

    std::string h, f, g, polytope, corpus;
    std::size_t d = 0;
    std::size_t r = 1;
    std::string property = "interlacing";
    std::string shape_name = "unimodal";
    std::string corollary;
    std::size_t r_max = 4;
    std::uint64_t cell_budget = default_cell_budget;

    std::string theorem;
    std::string probe = "cor33_ii";
    std::string r_policy = "above_bound";
    std::vector<std::size_t> r_list;
    std::size_t d_min = 1;
    std::size_t d_max = 8;
    long coeff_bound = 6;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    std::uint64_t budget = default_search_budget;
};

int cmd_decompose(const Options &o, std::ostream &out)
{
    const Polynomial h = read_polynomial(o.h);
    const DecompPair dec = symmetric_decomposition(h, o.d);
    json j{{"h", to_json(h)}, {"d", o.d}, {"p", to_json(dec.p)}, {"q", to_json(dec.q)},
           {"H", check_H(h, o.d)}};
    if (!h.is_zero()) {
        const StapledonPair st = stapledon_decomposition(h, o.d);
        j["s"] = st.s;
        j["ell"] = st.ell;
        j["p_ell"] = to_json(st.p_ell);
        j["q_ell"] = to_json(st.q_ell);
        j["S"] = check_S(h);
    }
    emit(out, j, o.pretty);
    return exit_ok;
}

int cmd_dilate(const Options &o, std::ostream &out)
{
    const Polynomial h = read_polynomial(o.h);
    const auto backend = parse_backend(o.backend);
    const Polynomial u = dilate_numerator(h, o.r, o.d + 1, backend);
    const DecompPair dec = dilated_decomposition(h, o.d, o.r);
    ensure(dec.recombine() == u, "dilate: backend disagrees with the section formulas");
    json j{{"h", to_json(h)},
           {"d", o.d},
           {"r", o.r},
           {"backend", std::string(to_string(backend))},
           {"numerator", to_json(u)},
           {"p_tilde", to_json(dec.p)},
           {"q_tilde", to_json(dec.q)},
           {"nonnegative", decomposition_is(u, o.d, DecompProperty::nonnegative)},
           {"real_rooted", decomposition_is(u, o.d, DecompProperty::real_rooted)},
           {"interlacing", decomposition_is(u, o.d, DecompProperty::interlacing)}};
    emit(out, j, o.pretty);
    return exit_ok;
}

int cmd_check(const std::string &what, const Options &o, std::ostream &out)
{
    json j;
    bool verdict = false;
    if (what == "realroot") {
        const Polynomial f = read_polynomial(o.f);
        verdict = is_real_rooted(f);
        j = json{{"f", to_json(f)}, {"real_rooted", verdict}};
        if (!f.is_zero()) {
            j["roots"] = roots_json(isolate_roots(f));
        }
    } else if (what == "interlace") {
        const Polynomial f = read_polynomial(o.f);
        const Polynomial g = read_polynomial(o.g);
        verdict = interlaces(f, g);
        j = json{{"f", to_json(f)}, {"g", to_json(g)}, {"interlaces", verdict}};
    } else if (what == "decomp") {
        const Polynomial h = read_polynomial(o.h);
        verdict = decomposition_is(h, o.d, parse_decomp_property(o.property));
        j = json{{"h", to_json(h)}, {"d", o.d}, {"property", o.property}, {"holds", verdict}};
        j["decomposition"] = decomposition_json(symmetric_decomposition(h, o.d));
    } else {
        const Polynomial h = read_polynomial(o.h);
        verdict = shape(h, o.d, parse_shape(o.shape_name));
        j = json{{"h", to_json(h)}, {"d", o.d}, {"shape", o.shape_name}, {"holds", verdict}};
    }
    emit(out, j, o.pretty);
    return verdict ? exit_ok : exit_false;
}

int cmd_ehrhart(const Options &o, bool have_r, std::ostream &out)
{
    if (o.corpus.empty() == o.polytope.empty()) {
        throw InputError("ehrhart needs exactly one of --corpus or --polytope");
    }
    std::optional<LatticePolytope> P;
    json j;
    if (!o.corpus.empty()) {
        P = corpus_polytope(o.corpus);
        if (!P) {
            throw InputError("unknown corpus polytope '" + o.corpus + "'");
        }
        j["name"] = o.corpus;
    } else {
        P = parse_polytope(json_source(o.polytope));
    }
    const EhrhartData data = ehrhart_data(*P, o.cell_budget);
    j["vertices"] = P->vertices();
    j["d"] = data.d;
    j["s"] = data.s;
    j["ell"] = data.ell;
    j["ehr_values"] = to_json(data.ehr_values);
    j["ehr_poly"] = to_json(data.ehr_poly);
    j["h_star"] = to_json(data.h_star);
    j["reflexive"] = is_symmetric(data.h_star, static_cast<long>(data.d));
    const GorensteinResult gor = gorenstein(*P);
    j["gorenstein"] = gor.gorenstein;
    j["gorenstein_witness"] = json{{"index", gor.index},
                           {"witness_reflexive", gor.witness_reflexive},
                           {"needs_review", gor.needs_review}};
    int code = exit_ok;
    if (have_r) {
        const auto backend = parse_backend(o.backend);
        const LatticePolytope rP = dilate_polytope(*P, static_cast<std::int64_t>(o.r));
        const Polynomial geometric = ehrhart_data(rP, o.cell_budget).h_star;
        const Polynomial algebraic = dilate_numerator(data.h_star, o.r, data.d + 1, backend);
        const DecompPair dec = symmetric_decomposition(geometric, data.d);
        const bool identity = geometric == algebraic;
        j["dilated"] = json{{"r", o.r},
                            {"backend", std::string(to_string(backend))},
                            {"vertices", rP.vertices()},
                            {"h_star_geometric", to_json(geometric)},
                            {"h_star_algebraic", to_json(algebraic)},
                            {"identity_holds", identity},
                            {"p_tilde", to_json(dec.p)},
                            {"q_tilde", to_json(dec.q)},
                            {"real_rooted", decomposition_is(geometric, data.d, DecompProperty::real_rooted)},
                            {"interlacing", decomposition_is(geometric, data.d, DecompProperty::interlacing)}};
        if (!identity) {
            code = exit_false;
        }
    }
    if (!o.corollary.empty()) {
        Corollary which;
        if (o.corollary == "cor61") {
            which = Corollary::cor61;
        } else if (o.corollary == "cor62") {
            which = Corollary::cor62;
        } else {
            throw InputError("unknown corollary '" + o.corollary + "' (cor61 or cor62)");
        }
        const CorollaryReport rep = verify_corollary(*P, which, o.r_max, o.cell_budget);
        json rows = json::array();
        for (const auto &row : rep.rows) {
            rows.push_back(json{{"r", row.r},
                                {"h_star_geometric", to_json(row.h_star_geometric)},
                                {"h_star_algebraic", to_json(row.h_star_algebraic)},
                                {"identity_holds", row.identity_holds},
                                {"property_holds", row.property_holds}});
        }
        j["corollary"] = json{{"which", o.corollary}, {"bound", rep.bound}, {"rows", rows}, {"passed", rep.all_pass()}};
        if (!rep.all_pass()) {
            code = exit_false;
        }
    }
    emit(out, j, o.pretty);
    return code;
}

int cmd_verify(const Options &o, bool d_max_set, bool cb_set, std::ostream &out)
{
    TrialSpec spec;
    spec.d_min = o.d_min;
    spec.d_max = o.d_max;
    spec.coeff_bound = o.coeff_bound;
    spec.count = o.trials;
    spec.seed = o.seed;
    spec.workers = o.workers;
    static const std::map<std::string, RPolicy> policies{{"at_bound", RPolicy::at_bound},
                                                         {"above_bound", RPolicy::above_bound},
                                                         {"below_bound", RPolicy::below_bound}};
    if (!o.r_list.empty()) {
        spec.r_policy = RPolicy::explicit_list;
        spec.r_list = o.r_list;
    } else if (auto it = policies.find(o.r_policy); it != policies.end()) {
        spec.r_policy = it->second;
    } else {
        throw InputError("unknown r policy '" + o.r_policy + "'");
    }

    VerificationReport report;
    const std::string &t = o.theorem;
    if (t == "thm1.1") {
        report = verify_theorem_1_1(spec);
    } else if (t == "thm1.2") {
        report = verify_theorem_1_2(spec);
    } else if (t == "prop5.1") {
        report = verify_prop_5_1(spec);
    } else if (t == "prop5.2") {
        report = verify_prop_5_2(spec);
    } else if (t == "lemma4.1") {
        report = verify_lemma_4_1(spec);
    } else if (t == "sharpness") {
        if (o.probe == "cor33_ii") {
            report = probe_sharpness(Sharpness::cor33_ii, spec);
        } else if (o.probe == "interlacing_bound") {
            report = probe_sharpness(Sharpness::interlacing_bound, spec);
        } else {
            throw InputError("unknown sharpness probe '" + o.probe + "'");
        }
    } else if (t == "question5.4") {
        report = search_question_5_4(d_max_set ? o.d_max : 4, cb_set ? o.coeff_bound : 3, o.budget, o.workers);
    } else {
        throw InputError("unknown verification target '" + t + "'");
    }
    if (o.pretty) {
        out << report.table();
    } else {
        out << report.to_json().dump() << '\n';
    }
    return report.exit_code();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Symmetric decompositions of dilated numerator polynomials", "symdecomp"};
    // "-h" would clash with the --h polynomial option.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--pretty", o.pretty, "Render a human-readable table instead of JSON");

    auto *decompose = app.add_subcommand("decompose", "Symmetric and Stapledon decompositions of h");
    decompose->add_option("--h", o.h, "Polynomial JSON {\"coeffs\": [...]} or file path")->required();
    decompose->add_option("--d", o.d, "Degree bound")->required();

    auto *dilate = app.add_subcommand("dilate", "Numerator of the r-th dilation and its decomposition");
    dilate->add_option("--h", o.h, "Polynomial JSON or file path")->required();
    dilate->add_option("--d", o.d, "Degree bound; the series denominator is (1-t)^(d+1)")->required();
    dilate->add_option("--r", o.r, "Dilation factor")->required()->check(CLI::PositiveNumber);
    dilate->add_option("--backend", o.backend, "series | product | sum")->capture_default_str();

    auto *check = app.add_subcommand("check", "Decide a property");
    check->require_subcommand(1);
    auto *c_real = check->add_subcommand("realroot", "Is f real-rooted?");
    c_real->add_option("--f", o.f, "Polynomial JSON or file path")->required();
    auto *c_inter = check->add_subcommand("interlace", "Does f interlace g?");
    c_inter->add_option("--f", o.f, "Polynomial JSON or file path")->required();
    c_inter->add_option("--g", o.g, "Polynomial JSON or file path")->required();
    auto *c_decomp = check->add_subcommand("decomp", "Property of the symmetric decomposition of h");
    c_decomp->add_option("--h", o.h, "Polynomial JSON or file path")->required();
    c_decomp->add_option("--d", o.d, "Degree bound")->required();
    c_decomp->add_option("--property", o.property, "nonnegative | real_rooted | interlacing")
        ->capture_default_str();
    auto *c_shape = check->add_subcommand("shape", "Coefficient shape of h");
    c_shape->add_option("--h", o.h, "Polynomial JSON or file path")->required();
    c_shape->add_option("--d", o.d, "Degree bound")->required();
    c_shape->add_option("--shape", o.shape_name, "unimodal | log_concave | alternatingly_increasing")
        ->capture_default_str();

    auto *ehrhart = app.add_subcommand("ehrhart", "Ehrhart data of a lattice polytope");
    ehrhart->add_option("--corpus", o.corpus, "Built-in polytope name");
    ehrhart->add_option("--polytope", o.polytope, "Polytope JSON {\"vertices\": [[...], ...]} or file path");
    auto *r_opt = ehrhart->add_option("--r", o.r, "Also compare h* of rP with the dilation operator")
                      ->check(CLI::PositiveNumber);
    ehrhart->add_option("--backend", o.backend, "series | product | sum")->capture_default_str();
    ehrhart->add_option("--corollary", o.corollary, "cor61 | cor62: sweep r from the bound to --r-max");
    ehrhart->add_option("--r-max", o.r_max, "Largest r of the corollary sweep")->capture_default_str();
    ehrhart->add_option("--cell-budget", o.cell_budget, "Bounding-box cells allowed per count")
        ->capture_default_str();
    bool list_corpus = false;
    ehrhart->add_flag("--list", list_corpus, "List the built-in polytopes");

    auto *verify = app.add_subcommand("verify", "Randomized or exhaustive verification");
    verify->add_option("target", o.theorem, "thm1.1 | thm1.2 | prop5.1 | prop5.2 | lemma4.1 | sharpness | question5.4")
        ->required();
    verify->add_option("--d-min", o.d_min, "Smallest d")->capture_default_str();
    auto *d_max_opt = verify->add_option("--d-max", o.d_max, "Largest d (question5.4 defaults to 4)");
    auto *cb_opt = verify->add_option("--coeff-bound", o.coeff_bound, "Largest coefficient (question5.4 defaults to 3)");
    verify->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
    verify->add_option("--seed", o.seed, "Seed of the trial stream")->capture_default_str();
    verify->add_option("--workers", o.workers, "Worker threads")->capture_default_str();
    verify->add_option("--budget", o.budget, "Largest search space for question5.4")->capture_default_str();
    verify->add_option("--r-policy", o.r_policy, "at_bound | above_bound | below_bound")->capture_default_str();
    verify->add_option("--r", o.r_list, "Explicit r values (overrides --r-policy)");
    verify->add_option("--probe", o.probe, "Sharpness probe: cor33_ii | interlacing_bound")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << '\n';
        return exit_input;
    }

    try {
        if (*decompose) {
            return cmd_decompose(o, out);
        }
        if (*dilate) {
            return cmd_dilate(o, out);
        }
        if (*check) {
            const std::string what = *c_real ? "realroot" : *c_inter ? "interlace" : *c_decomp ? "decomp" : "shape";
            return cmd_check(what, o, out);
        }
        if (*ehrhart) {
            if (list_corpus) {
                emit(out, json{{"corpus", corpus_names()}}, o.pretty);
                return exit_ok;
            }
            return cmd_ehrhart(o, r_opt->count() > 0, out);
        }
        return cmd_verify(o, d_max_opt->count() > 0, cb_opt->count() > 0, out);
    } catch (const InternalError &e) {
        err << "assertion failure: " << e.what() << '\n';
        return exit_false;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
}

} // namespace symdecomp::cli
