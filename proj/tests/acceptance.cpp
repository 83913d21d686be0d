// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "properties.hpp"
#include "symdecomp/decomp.hpp"
#include "symdecomp/ehrhart.hpp"
#include "symdecomp/errors.hpp"
#include "symdecomp/harness.hpp"
#include "symdecomp/realroots.hpp"
#include "symdecomp/veronese.hpp"

using namespace symdecomp;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string report_line(const VerificationReport &rep)
{
    std::ostringstream os;
    os << rep.trials << " trials, " << rep.checks << " checks, " << rep.failures.size() << " failures";
    return os.str();
}

Outcome worked_example()
{
    const Polynomial h{1, 2};
    const auto start = Clock::now();
    const DecompPair dec = dilated_decomposition(h, 2, 3);
    const double ms = ms_since(start);
    bool ok = dec.p == Polynomial{1, 13, 1} && dec.q == Polynomial{6, 6} && interlaces(dec.q, dec.p);
    for (auto backend : {DilateBackend::series, DilateBackend::product, DilateBackend::sum}) {
        ok = ok && dilate_numerator(h, 3, 3, backend) == Polynomial{1, 19, 7};
    }
    ok = ok && ms < 1.0;
    return {ok, "U(1+2t) = 1+19t+7t^2, p~ = 1+13t+t^2, q~ = 6+6t in " + std::to_string(ms) + " ms"};
}

Outcome backend_sweep()
{
    std::mt19937_64 rng(2024);
    const auto start = Clock::now();
    std::size_t mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t d = rng() % 9;
        const std::size_t r = 1 + rng() % 8;
        const Polynomial h = oracle::random_poly(rng, rng() % (d + 1), -6, 6);
        const Polynomial a = dilate_numerator(h, r, d + 1, DilateBackend::series);
        const Polynomial b = dilate_numerator(h, r, d + 1, DilateBackend::product);
        const Polynomial c = dilate_numerator(h, r, d + 1, DilateBackend::sum);
        mismatches += (a == b && b == c) ? 0 : 1;
    }
    const double s = ms_since(start) / 1000;
    return {mismatches == 0 && s < 10, "1000 instances, " + std::to_string(mismatches) + " mismatches, " +
                                           std::to_string(s) + " s"};
}

TrialSpec suite_spec(std::size_t count, std::uint64_t seed)
{
    TrialSpec spec;
    spec.d_max = 8;
    spec.coeff_bound = 6;
    spec.count = count;
    spec.seed = seed;
    spec.r_policy = RPolicy::above_bound;
    return spec;
}

Outcome decomposition_suite()
{
    const auto start = Clock::now();
    const auto rep = verify_theorem_1_1(suite_spec(500, 101));
    const double s = ms_since(start) / 1000;
    return {rep.passed() && rep.trials == 500 && s < 60, report_line(rep) + ", " + std::to_string(s) + " s"};
}

Outcome symmetric_suite()
{
    const auto rep = verify_theorem_1_2(suite_spec(500, 102));
    return {rep.passed() && rep.trials == 500, report_line(rep)};
}

Outcome criterion_suite()
{
    const auto rep = verify_prop_5_1(suite_spec(200, 103));
    return {rep.passed() && rep.trials == 200, report_line(rep)};
}

Outcome small_degree_suite()
{
    const auto rep = verify_prop_5_2(suite_spec(200, 104));
    return {rep.passed() && rep.trials == 200, report_line(rep)};
}

Outcome interlacing_grids()
{
    std::size_t bad = 0;
    for (std::size_t r = 1; r <= 6; ++r) {
        for (std::size_t d = 1; d <= 6; ++d) {
            std::vector<Polynomial> seq;
            for (std::size_t i = r; i-- > 0;) {
                seq.push_back(a_poly(d, r, i));
            }
            bad += is_interlacing_sequence(seq) ? 0 : 1;
        }
    }
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng() % 8;
        const Polynomial h = oracle::random_nonnegative(rng, rng() % (r + 1), 5);
        const std::size_t d = rng() % 7;
        const SectionFamily direct = a_h_family(h, d, r, SectionBackend::direct);
        const SectionFamily rec = a_h_family(h, d, r, SectionBackend::recursion);
        std::vector<Polynomial> seq(rec.parts.rbegin(), rec.parts.rend());
        bad += (direct.parts == rec.parts && is_interlacing_sequence(seq)) ? 0 : 1;
    }
    return {bad == 0, "36 grid cells + 100 random families, " + std::to_string(bad) + " violations"};
}

Outcome sharpness_probe()
{
    TrialSpec spec = suite_spec(50, 108);
    const auto rep = probe_sharpness(Sharpness::cor33_ii, spec);
    return {rep.passed() && rep.trials == 50, report_line(rep)};
}

Outcome golden_values()
{
    const auto h = [](const std::string &name) { return ehrhart_data(*corpus_polytope(name)).h_star; };
    const bool ok = h("unit-cube-d2") == Polynomial{1, 1} && h("unit-cube-d3") == Polynomial{1, 4, 1} &&
                    h("standard-simplex-d2") == Polynomial{1} && h("reflexive-square") == Polynomial{1, 6, 1} &&
                    is_reflexive(*corpus_polytope("reflexive-square")) && h("reeve-q2") == Polynomial{1, 0, 1};
    return {ok, "square, cube, 2-simplex, [-1,1]^2, Reeve q=2"};
}

Outcome dilation_identity()
{
    std::size_t checked = 0;
    std::size_t bad = 0;
    std::size_t corollary_rows = 0;
    std::size_t gorenstein_count = 0;
    for (const auto &name : corpus_names()) {
        const LatticePolytope P = *corpus_polytope(name);
        const EhrhartData base = ehrhart_data(P);
        for (std::size_t r = 1; r <= 4; ++r) {
            const auto geometric = ehrhart_data(dilate_polytope(P, static_cast<std::int64_t>(r))).h_star;
            bad += geometric == dilate_numerator(base.h_star, r, base.d + 1) ? 0 : 1;
            ++checked;
        }
        const std::size_t bound = std::max(base.s, base.ell);
        const auto c61 = verify_corollary(P, Corollary::cor61, bound + 1);
        bad += c61.all_pass() ? 0 : 1;
        corollary_rows += c61.rows.size();
        if (is_gorenstein(P)) {
            ++gorenstein_count;
            const auto c62 = verify_corollary(P, Corollary::cor62, bound + 1);
            bad += c62.all_pass() ? 0 : 1;
            corollary_rows += c62.rows.size();
        }
    }
    return {bad == 0, std::to_string(checked) + " (P, r) identities, " + std::to_string(corollary_rows) +
                          " corollary rows, " + std::to_string(gorenstein_count) + " Gorenstein, " +
                          std::to_string(bad) + " violations"};
}

Outcome property_suites()
{
    const std::vector<props::SuiteResult> results{
        props::scale_invariance(500, 111),   props::common_lower_interlacer(500, 112),
        props::common_upper_interlacer(500, 113), props::shift_swap(500, 114),
        props::cross_sums(500, 115),         props::sequence_shortcut(500, 116),
        props::decomposition_equivalence(500, 117)};
    std::size_t violations = 0;
    std::size_t trials = 0;
    for (const auto &r : results) {
        violations += r.violations;
        trials += r.trials;
    }
    return {violations == 0, std::to_string(results.size()) + " suites, " + std::to_string(trials) + " trials, " +
                                 std::to_string(violations) + " violations"};
}

Outcome question_search()
{
    const auto start = Clock::now();
    const auto rep = search_question_5_4(4, 3);
    const double s = ms_since(start) / 1000;
    const int code = rep.exit_code();
    return {(code == 0 || code == 3) && rep.summary.contains("frontier"),
            std::to_string(rep.checks) + " checks, " + std::to_string(rep.candidates.size()) + " candidates, exit " +
                std::to_string(code) + ", " + std::to_string(s) + " s"};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"worked example", worked_example},
        {"backend equivalence sweep", backend_sweep},
        {"nonnegative real-rooted decomposition suite", decomposition_suite},
        {"symmetric input interlacing suite", symmetric_suite},
        {"interlacing criterion biconditional", criterion_suite},
        {"small-degree interlacing suite", small_degree_suite},
        {"section interlacing grids", interlacing_grids},
        {"nonnegativity bound sharpness", sharpness_probe},
        {"Ehrhart golden values", golden_values},
        {"Ehrhart dilation identity and corollaries", dilation_identity},
        {"interlacing property suites", property_suites},
        {"open question search", question_search},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %2zu %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), ms_since(start) / 1000);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
