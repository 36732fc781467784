#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "qcat/qcat.hpp"

using namespace qcat;

namespace {

struct Verdict {
    bool pass = true;
    std::string summary;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            summary += (summary.empty() ? "" : "; ") + std::string("FAILED ") + what;
        }
    }
    void add(const std::string& text) { summary += (summary.empty() ? "" : "; ") + text; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SuiteResult run(const std::string& suite, const TNormSpec& t, std::int64_t grid, std::size_t max_size,
                std::size_t corpus = 200, std::uint64_t seed = 1) {
    SuiteConfig c;
    c.suite = suite;
    c.tnorm = t;
    c.grid = grid;
    c.max_size = max_size;
    c.corpus = corpus;
    c.seed = seed;
    return run_suite(c);
}

std::string stat(const SuiteResult& r, const std::string& key) {
    const auto* s = r.report.stat(key);
    return s ? *s : "?";
}

bool clean(const SuiteResult& r) { return r.report.failures == 0 && r.report.findings == 0; }

std::string counts(const SuiteResult& r) {
    return std::to_string(r.instances) + " instances, " + std::to_string(r.report.checks) + " checks";
}

const TNormSpec luk = TNormSpec::lukasiewicz();
const TNormSpec mini = TNormSpec::minimum();
const TNormSpec prod = TNormSpec::product();
const TNormSpec ordinal = TNormSpec::parse("ordinal:0,1/2,lukasiewicz;1/2,1,product");

Verdict quantale_axioms() {
    Verdict o;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& t : {luk, mini}) {
        const auto r = run("quantale-axioms", t, 12, 1);
        o.require(clean(r) && stat(r, "mode") == "exhaustive" && r.instances == 12, t.name() + " on Q_1..Q_12");
    }
    for (const auto& t : {prod, ordinal}) {
        const auto r = run("quantale-axioms", t, 12, 1, 10000, 2024);
        o.require(clean(r) && stat(r, "mode") == "sampled" && stat(r, "triples") == "10000",
                  t.name() + " on 10^4 triples");
    }
    const double s = seconds_since(t0);
    o.require(s < 10, "runtime under 10 s");
    o.add("lukasiewicz and min exhaustive on Q_1..Q_12, product and two-segment ordinal sum on 10^4 triples, " +
          std::to_string(static_cast<int>(s * 1000)) + " ms");
    return o;
}

Verdict no_zero_divisors() {
    Verdict o;
    const auto l = run("no-zero-divisors", luk, 6, 1);
    o.require(clean(l) && stat(l, "mode") == "exhaustive Q_6", "lukasiewicz Q_6");
    o.require(stat(l, "max_nilpotency_index") == "6", "nilpotency witnesses up to 1/6");
    const auto p = run("no-zero-divisors", prod, 2, 1, 10000, 2024);
    o.require(clean(p) && stat(p, "mode") == "sampled" && stat(p, "pairs") == "10000", "product sample");
    o.add("Q_6: " + stat(l, "zero_products") + " zero products, all with nilpotent witnesses (max index " +
          stat(l, "max_nilpotency_index") + "); product: " + stat(p, "zero_products") +
          " zero products among 10^4 pairs, 0 exceptions");
    return o;
}

Verdict monad_laws() {
    Verdict o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run("monad-laws", luk, 2, 4);
    const double s = seconds_since(t0);
    o.require(clean(r), "unit and associativity laws");
    o.require(r.instances == 1 + 3 + 19 + 219, "242 labeled posets");
    o.require(enumerate_posets(4).size() == 219, "219 posets of size 4");
    o.require(std::stoul(stat(r, "VVX_max")) <= (1u << 16), "VVX at most 2^16");
    o.require(s < 30, "runtime under 30 s");
    o.add(counts(r) + ", max |VVX| = " + stat(r, "VVX_max") + ", " + std::to_string(static_cast<int>(s * 1000)) +
          " ms");
    return o;
}

Verdict flagship() {
    Verdict o;
    const FinPoset chain = FinPoset::chain(2);
    const Quantale ql(luk);
    RepresentabilityStats st;
    const Report r = representability_audit(chain, ql, 2, {}, &st);
    const auto cx = function_space(chain, ql, 2);
    const std::vector<Functional> expected{phi_of(cx, Subset(2)), phi_of(cx, Subset::of(2, {1})),
                                           phi_of(cx, Subset::full(2))};
    o.require(r.ok() && r.findings == 0, "2-chain audit");
    o.require(st.exhaustive && st.scanned == 729, "729 functionals scanned");
    o.require(st.passing_set == expected, "passing set {Φ_∅, Φ_{b}, Φ_{a,b}}");

    const FinPoset point = FinPoset::chain(1);
    const Quantale qm(mini);
    RepresentabilityStats sm;
    const Report rm = representability_audit(point, qm, 2, {}, &sm);
    const auto cp = function_space(point, qm, 2);
    const std::vector<Functional> expected_m{phi_of(cp, Subset(1)), phi_of(cp, Subset::full(1))};
    o.require(rm.ok() && rm.findings == 0 && sm.passing_set == expected_m, "1-point min passing set {Φ_∅, Φ_{*}}");
    o.add("2-chain: " + std::to_string(st.scanned) + " scanned, " + std::to_string(st.passing_set.size()) +
          " pass; 1-point min: " + std::to_string(sm.scanned) + " scanned, " + std::to_string(sm.passing_set.size()) +
          " pass");
    return o;
}

Verdict condition_table() {
    Verdict o;
    std::size_t checks = 0, instances = 0;
    for (const auto& t : {luk, mini}) {
        const auto r = run("condition-table", t, 3, 4);
        o.require(clean(r), t.name());
        checks += r.report.checks;
        instances += r.instances;
    }
    std::size_t upper = 0;
    for (std::size_t k = 0; k <= 4; ++k)
        for (const auto& p : enumerate_posets(k)) upper += upper_sets(p).size();
    o.add(std::to_string(instances) + " (poset, grid, tensor) cases, " + std::to_string(upper) +
          " upper sets per grid and tensor, " + std::to_string(checks) + " checks");
    return o;
}

Verdict zero_anti() {
    Verdict o;
    std::size_t scanned = 0, passing = 0, findings = 0;
    std::string gaps;
    for (const auto& t : {luk, mini}) {
        const auto r = run("representability", t, 3, 4, 300);
        o.require(r.report.failures == 0, t.name() + " roundtrips");
        findings += r.report.findings;
        scanned += std::stoul(stat(r, "functionals_scanned"));
        passing += std::stoul(stat(r, "passing"));
        gaps += (gaps.empty() ? "" : ", ") + t.name() + " max gap " + stat(r, "max_gap_steps");
        o.require(stat(r, "max_gap_steps") == "0", t.name() + " gap 0");
    }
    o.add(std::to_string(scanned) + " functionals scanned, " + std::to_string(passing) + " passed the cut, " +
          std::to_string(findings) + " findings, " + gaps);
    return o;
}

Verdict meet_counterexample() {
    Verdict o;
    const auto r = run("min-counterexample", mini, 2, 1);
    o.require(clean(r) && r.instances == 1, "suite");
    const Quantale qm(mini);
    const auto cx = function_space(FinPoset::chain(1), qm, 2);
    const Functional phi = meet_functional(cx, 1);
    const auto cr = check_conditions(cx, phi);
    o.require(cr.holds(Condition::Mon) && cr.holds(Condition::Act) && cr.holds(Condition::Sup), "Mon/Act/Sup");
    o.require(!cr.holds(Condition::Min), "Min fails");
    bool representable = false;
    for (const auto& a : upper_sets(FinPoset::chain(1))) representable = representable || phi_of(cx, a) == phi;
    o.require(!representable, "not any Φ_A");
    o.add("Φ = 1/2∧− = " + functional_str(cx, phi) + ", Min witness " + cr[Condition::Min].witness);
    return o;
}

Verdict functoriality() {
    Verdict o;
    const auto f = run("functoriality", luk, 2, 4, 1000, 7);
    o.require(clean(f), "C(φ'·φ) = Cφ∘Cφ'");
    o.require(stat(f, "sampled_pairs") == "1000", "10^3 sampled pairs");
    const auto t = run("total-partial", luk, 2, 3);
    o.require(clean(t), "total/partial equivalences");
    o.add(stat(f, "exhaustive_pairs") + " exhaustive pairs on |P| <= 2, " + stat(f, "sampled_pairs") +
          " sampled on |P| <= 4; " + stat(t, "distributors") + " 0/1 distributors on |X|,|Y| <= 3 (" +
          stat(t, "total") + " total, " + stat(t, "deterministic") + " deterministic)");
    return o;
}

Verdict stone_weierstrass() {
    Verdict o;
    const auto r = run("stone-weierstrass", luk, 3, 4);
    o.require(clean(r), "sep, density and premises");
    o.require(stat(r, "sep_failed") == "0", "Sep on every closure");
    const FinPoset chain = FinPoset::chain(2);
    const auto cx = function_space(chain, Quantale(luk), 2);
    SwResult res;
    sw_audit(chain, cx, down_set_indicators(chain, cx), &res);
    o.require(res.exact, "flagship L = CX");
    o.add(std::to_string(r.instances) + " cases, exact equality " + stat(r, "exact_equality") +
          ", flagship closure " + std::to_string(res.closure_size) + "/" + std::to_string(cx.size()));
    return o;
}

Verdict enriched_roundtrip() {
    Verdict o;
    const auto r = run("enriched-roundtrip", luk, 2, 3);
    o.require(clean(r), "retract∘C = id, lemma1, pointsep");
    o.require(std::stoul(stat(r, "non_poset")) > 0, "non-poset categories included");
    const VCategory half{Quantale(luk), {{Value::one(), Value::of(1, 2)}, {Value::zero(), Value::one()}}, {"p", "q"}};
    const auto cx = enumerate_cx(half, 2);
    const Report a = adjunction_audit(cx);
    o.require(is_cogenerated(cx) && a.ok() && a.findings == 0 && lemma1_audit(cx).ok() &&
                  pointsep_extension_audit(cx).ok(),
              "a(p,q) = 1/2 instance");
    o.add(stat(r, "categories") + " separated categories (" + stat(r, "non_poset") + " not poset-based, " +
          stat(r, "cogenerated") + " cogenerated), " + std::to_string(r.report.checks) + " checks, 0 findings");
    return o;
}

Verdict tensor_maximality() {
    Verdict o;
    const auto cx = function_space(FinPoset::chain(2), Quantale(luk), 2);
    std::size_t survivors = 0;
    const Report r = tensor_maximality_audit(cx, *cx.find({2, 1}), &survivors);
    o.require(r.ok(), "ψ0 = (1,1/2)");
    const auto sweep = run("tensor-maximality", luk, 2, 2);
    o.require(clean(sweep), "every ψ0 on |X| <= 2, n <= 2");
    o.add(std::to_string(survivors) + " survivors for ψ0 = (1,1/2), maximum ψ0⊗−; sweep " + counts(sweep));
    return o;
}

Verdict determinism() {
    Verdict o;
    std::size_t compared = 0;
    for (const auto& name : suite_names()) {
        SuiteConfig c;
        c.suite = name;
        c.tnorm = name == "min-counterexample" ? mini : luk;
        c.max_size = 3;
        c.seed = 17;
        // Inject rows so the witness section is non-empty.
        auto render = [&] {
            SuiteResult r = run_suite(c);
            r.report.fail("probe", "row");
            return emit_report(r, ReportFormat::Table, false) + emit_report(r, ReportFormat::Json, false);
        };
        o.require(render() == render(), name);
        ++compared;
    }
    o.add(std::to_string(compared) + " suites re-run with seed 17, table and json byte-identical without timing");
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<int, std::function<Verdict()>>> criteria{
        {1, quantale_axioms},  {2, no_zero_divisors},    {3, monad_laws},        {4, flagship},
        {5, condition_table},  {6, zero_anti},           {7, meet_counterexample}, {8, functoriality},
        {9, stone_weierstrass}, {10, enriched_roundtrip}, {11, tensor_maximality}, {12, determinism},
    };
    int failed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [id, fn] : criteria) {
        Verdict o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failed;
        std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.summary.c_str());
        std::fflush(stdout);
    }
    std::printf("total %.1f s, %d of %zu failed\n", seconds_since(t0), failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
