#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "colimits.hpp"
#include "duality_enriched.hpp"
#include "duality_ordered.hpp"
#include "instance.hpp"
#include "quantale.hpp"
#include "report.hpp"
#include "stone_weierstrass.hpp"
#include "vietoris.hpp"

/**
 * @file suites.hpp
 *
 * Named audit sweeps over enumerated instances, and their rendering.
 * Instance reports are merged in enumeration order so a run is a pure
 * function of its configuration.
 */

namespace qcat {

enum class ReportFormat { Table, Json };

struct SuiteConfig {
    std::string suite;
    TNormSpec tnorm = TNormSpec::lukasiewicz();
    std::int64_t grid = 2;
    std::size_t max_size = 3;
    std::uint64_t seed = 1;
    std::size_t corpus = 200;
    std::optional<InstanceDoc> instance;
    std::string instance_name; // echoed in reports
};

struct SuiteResult {
    SuiteConfig config;
    Report report;
    std::size_t instances = 0;
    double millis = 0;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "quantale-axioms", "no-zero-divisors", "monad-laws",         "representability", "condition-table",
        "min-counterexample", "functoriality", "total-partial",      "stone-weierstrass", "enriched-roundtrip",
        "lemma1",          "twovalued",        "tensor-maximality",
    };
    return names;
}

namespace detail {

struct SuiteLimits {
    std::int64_t max_grid = 12;
    std::size_t max_size = 5;
};

inline std::string poset_tag(std::size_t k, std::size_t i) { return "P" + std::to_string(k) + "." + std::to_string(i); }

/// Labeled posets on 0..k points, cached across suites.
inline const std::vector<FinPoset>& posets_of_size(std::size_t k) {
    static std::map<std::size_t, std::vector<FinPoset>> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, enumerate_posets(k)).first;
    return it->second;
}

inline void merge(Report& into, Report part, const std::string& tag) {
    part.id = tag + "/" + part.id;
    into.absorb(part);
}

inline void require_grids(const Quantale& q, std::int64_t from, std::int64_t to) {
    for (std::int64_t n = from; n <= to; ++n) require_grid_closed(q, n);
}

inline void require_lukasiewicz(const SuiteConfig& c) {
    if (c.tnorm.kind() != TNormSpec::Kind::Lukasiewicz)
        throw InputError(ErrorCode::UnsupportedTensor, c.suite + " runs for lukasiewicz only, got " + c.tnorm.name());
}

inline void require_cap(bool ok, const std::string& what) {
    if (!ok) throw InputError(ErrorCode::CapExceeded, what);
}

/// Grids n swept by a suite: 1..grid, or exactly the instance's grid.
inline std::vector<std::int64_t> grids_for(const SuiteConfig& c) {
    if (c.instance) return {c.instance->grid.value_or(c.grid)};
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= c.grid; ++n) out.push_back(n);
    return out;
}

struct PosetCase {
    std::string tag;
    FinPoset poset;
};

/// The posets of sizes lo..hi in enumeration order, or the instance's poset.
inline std::vector<PosetCase> poset_cases(const SuiteConfig& c, std::size_t lo, std::size_t hi) {
    std::vector<PosetCase> out;
    if (c.instance) {
        if (!c.instance->poset || c.instance->kind == InstanceKind::Distributor)
            throw InputError(ErrorCode::MalformedDocument,
                             c.suite + " needs a poset instance, got " + to_string(c.instance->kind));
        out.push_back({c.instance_name.empty() ? "instance" : c.instance_name, *c.instance->poset});
        return out;
    }
    for (std::size_t k = lo; k <= hi; ++k) {
        const auto& ps = posets_of_size(k);
        for (std::size_t i = 0; i < ps.size(); ++i) out.push_back({poset_tag(k, i), ps[i]});
    }
    return out;
}

struct CategoryCase {
    std::string tag;
    VCategory cat;
    std::int64_t n;
};

/// Separated categories on 1..hi points over each swept grid, or the instance.
inline std::vector<CategoryCase> category_cases(const SuiteConfig& c, const Quantale& q, std::size_t hi) {
    std::vector<CategoryCase> out;
    if (c.instance) {
        const std::int64_t n = c.instance->grid.value_or(c.grid);
        if (c.instance->category) {
            VCategory x = *c.instance->category;
            if (!on_grid(x, n)) throw InputError(ErrorCode::OutOfRange, "category entries are not on Q_" + std::to_string(n));
            if (!is_separated(x)) throw InputError(ErrorCode::NotAVCategory, "category is not separated");
            out.push_back({c.instance_name.empty() ? "instance" : c.instance_name, x, n});
        } else if (c.instance->kind == InstanceKind::Poset) {
            out.push_back({c.instance_name.empty() ? "instance" : c.instance_name, from_poset(*c.instance->poset, q), n});
        } else {
            throw InputError(ErrorCode::MalformedDocument,
                             c.suite + " needs a vcategory or poset instance, got " + to_string(c.instance->kind));
        }
        return out;
    }
    for (auto n : grids_for(c))
        for (std::size_t k = 1; k <= hi; ++k) {
            const auto cats = enumerate_vcategories(q, k, n, true);
            for (std::size_t i = 0; i < cats.size(); ++i)
                out.push_back({"X" + std::to_string(k) + "." + std::to_string(i) + " n=" + std::to_string(n), cats[i], n});
        }
    return out;
}

/// A random distributor X ⇸ Y: random rows, then up-closed and down-closed.
inline KleisliMorphism random_kleisli(std::mt19937_64& rng, const FinPoset& x, const FinPoset& y) {
    KleisliMorphism k{std::vector<Subset>(x.size(), Subset(y.size())), y.size()};
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < y.size(); ++b)
            if (draw(rng, 3) == 0) k.rows[a].set(b);
    for (auto& row : k.rows) row = up_closure(y, row);
    std::vector<Subset> closed(x.size(), Subset(y.size()));
    for (std::size_t a = 0; a < x.size(); ++a)
        for (auto b : x.up(a).elements()) closed[a] |= k.rows[b];
    k.rows = std::move(closed);
    return k;
}

/// A random monotone map, falling back to a constant map.
inline PosetMap random_monotone(std::mt19937_64& rng, const FinPoset& p, const FinPoset& r) {
    PosetMap f(p.size(), 0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (auto& v : f) v = static_cast<std::size_t>(draw(rng, r.size()));
        if (is_monotone(p, r, f)) return f;
    }
    const auto c = static_cast<std::size_t>(draw(rng, r.size()));
    for (auto& v : f) v = c;
    return f;
}

inline std::size_t suite_quantale_axioms(const SuiteConfig& c, Report& rep) {
    const Quantale q(c.tnorm);
    std::size_t instances = 0;
    bool closed = true;
    for (std::int64_t n = 1; n <= c.grid && closed; ++n) closed = grid_closed(q, n);
    if (closed) {
        for (std::int64_t n = 1; n <= c.grid; ++n) {
            const auto g = grid_chain(n);
            merge(rep, verify_quantale_axioms(q, g.elements), "Q_" + std::to_string(n));
            ++instances;
        }
        rep.set_stat("mode", "exhaustive");
        rep.set_stat("triples", std::to_string([&] {
                         std::size_t t = 0;
                         for (std::int64_t n = 1; n <= c.grid; ++n) t += static_cast<std::size_t>((n + 1) * (n + 1) * (n + 1));
                         return t;
                     }()));
    } else {
        rep.note("grid not closed under " + q.name() + ": seeded rational sample");
        merge(rep, verify_quantale_axioms_sampled(q, c.seed, c.corpus), "sample");
        rep.set_stat("mode", "sampled");
        rep.set_stat("triples", std::to_string(c.corpus));
        instances = 1;
    }
    return instances;
}

inline std::size_t suite_no_zero_divisors(const SuiteConfig& c, Report& rep) {
    const Quantale q(c.tnorm);
    std::vector<std::pair<Value, Value>> pairs;
    if (grid_closed(q, c.grid)) {
        const auto g = grid_chain(c.grid);
        pairs = all_pairs(g.elements);
        rep.set_stat("mode", "exhaustive Q_" + std::to_string(c.grid));
    } else {
        pairs = sample_pairs(c.seed, c.corpus);
        rep.set_stat("mode", "sampled");
    }
    const Report r = no_zero_divisor_audit(q, pairs);
    for (const auto& [k, v] : r.stats) rep.set_stat(k, v);
    merge(rep, r, "pairs");
    return 1;
}

inline std::size_t suite_monad_laws(const SuiteConfig& c, Report& rep) {
    require_cap(c.instance || c.max_size <= 4, "monad-laws sweeps at most 4 points");
    std::size_t vvx_max = 0, vvvx = 0;
    const auto cases = poset_cases(c, 1, c.max_size);
    for (const auto& pc : cases) {
        MonadLawCounts counts;
        merge(rep, verify_monad_laws(pc.poset, &counts), pc.tag);
        vvx_max = std::max(vvx_max, counts.vvp);
        vvvx += counts.vvvp_checked;
    }
    rep.set_stat("VVX_max", std::to_string(vvx_max));
    rep.set_stat("VVVX_checked", std::to_string(vvvx));
    return cases.size();
}

inline std::size_t suite_representability(const SuiteConfig& c, Report& rep) {
    const Quantale q(c.tnorm);
    const auto grids = grids_for(c);
    require_grids(q, grids.front(), grids.back());
    std::uint64_t scanned = 0, passing = 0, representable = 0, exhaustive = 0;
    Level max_gap = 0;
    std::size_t instances = 0;
    for (auto n : grids)
        for (const auto& pc : poset_cases(c, 0, c.max_size)) {
            const std::string tag = pc.tag + " n=" + std::to_string(n);
            merge(rep, phi_a_audit(pc.poset, q, n), tag);
            merge(rep, embedding_audit(pc.poset, q, n), tag);
            RepresentabilityOptions opt;
            opt.seed = c.seed + instances;
            opt.corpus = c.corpus;
            RepresentabilityStats st;
            merge(rep, representability_audit(pc.poset, q, n, opt, &st), tag);
            if (c.instance && st.exhaustive) {
                const FunctionSpace cx = function_space(pc.poset, q, n);
                for (std::size_t i = 0; i < st.passing_set.size(); ++i)
                    rep.set_stat("passing[" + std::to_string(i) + "]",
                                 "Zero=" + zero_set(cx, st.passing_set[i]).str() + " " +
                                     functional_str(cx, st.passing_set[i]));
            }
            scanned += st.scanned;
            passing += st.passing;
            representable += st.representable;
            exhaustive += st.exhaustive ? 1 : 0;
            max_gap = std::max(max_gap, st.max_gap);
            ++instances;
        }
    if (exhaustive < instances) rep.note("corpus mode used where (n+1)^|CX| exceeds 2000000");
    rep.set_stat("exhaustive_instances", std::to_string(exhaustive));
    rep.set_stat("functionals_scanned", std::to_string(scanned));
    rep.set_stat("passing", std::to_string(passing));
    rep.set_stat("representable", std::to_string(representable));
    rep.set_stat("max_gap_steps", std::to_string(max_gap));
    return instances;
}

inline std::size_t suite_condition_table(const SuiteConfig& c, Report& rep) {
    const Quantale q(c.tnorm);
    const auto grids = grids_for(c);
    require_grids(q, grids.front(), grids.back());
    std::size_t instances = 0;
    for (auto n : grids)
        for (const auto& pc : poset_cases(c, 0, c.max_size)) {
            merge(rep, phi_a_audit(pc.poset, q, n), pc.tag + " n=" + std::to_string(n));
            ++instances;
        }
    return instances;
}

/// Φ = u ∧ − on the one-point space with the minimum tensor.
inline std::size_t suite_min_counterexample(const SuiteConfig& c, Report& rep) {
    if (c.tnorm.kind() != TNormSpec::Kind::Minimum)
        throw InputError(ErrorCode::UnsupportedTensor, "min-counterexample runs for min only, got " + c.tnorm.name());
    const Quantale q(c.tnorm);
    const FinPoset one = FinPoset::chain(1);
    const auto grids = grids_for(c);
    std::size_t instances = 0;
    for (auto n : grids) {
        const FunctionSpace cx = function_space(one, q, n);
        std::vector<Functional> reps;
        for (const auto& a : upper_sets(one)) reps.push_back(phi_of(cx, a));
        for (Level u = 1; u < n; ++u) {
            Report r("meet-functional");
            const Functional phi = meet_functional(cx, u);
            const ConditionReport cr = check_conditions(cx, phi);
            const std::string tag = "u=" + cx.level_value(u).str();
            r.expect(cr.holds(Condition::Mon), "Mon", tag);
            r.expect(cr.holds(Condition::Act), "Act", tag);
            r.expect(cr.holds(Condition::Sup), "Sup", tag);
            r.expect(!cr.holds(Condition::Min), "Min-fails", tag);
            // Min first breaks at ψ = 1 with the smallest u' that exceeds 1 − u.
            r.expect(cr[Condition::Min].witness == "ψ=" + cx.str(cx.constant(static_cast<Level>(n))) + " u=" +
                                                       cx.level_value(static_cast<Level>(n - u)).str(),
                     "Min-witness", cr[Condition::Min].witness);
            bool representable = false;
            for (const auto& f : reps) representable = representable || f == phi;
            r.expect(!representable, "not-phi_A", tag);
            r.expect(zero_set(cx, phi) == Subset::full(1), "Zero={*}", tag);
            r.expect(anti_set(cx, phi).none(), "Anti={}", tag);
            merge(rep, r, "n=" + std::to_string(n));
            ++instances;
        }
    }
    if (instances == 0) rep.note("no level strictly between 0 and 1 on the chosen grid");
    return instances;
}

inline std::size_t suite_functoriality(const SuiteConfig& c, Report& rep) {
    const Quantale q(c.tnorm);
    const std::int64_t n = c.grid;
    require_grid_closed(q, n);
    std::size_t instances = 0;
    std::map<const FinPoset*, FunctionSpace> cache;
    auto cx_of = [&](const FinPoset& p) -> const FunctionSpace& {
        auto it = cache.find(&p);
        if (it == cache.end()) it = cache.emplace(&p, function_space(p, q, n)).first;
        return it->second;
    };
    // C(id) = id on every poset of the sweep.
    const auto all = poset_cases(c, 0, c.max_size);
    std::vector<const FinPoset*> pool;
    for (const auto& pc : all) {
        merge(rep, c_identity_check(pc.poset, cx_of(pc.poset)), pc.tag);
        ++instances;
    }
    if (c.instance) {
        rep.note("instance mode: identity law only");
        return instances;
    }
    // Exhaustive composable pairs over posets with at most two points.
    std::vector<const FinPoset*> small;
    for (std::size_t k = 0; k <= std::min<std::size_t>(2, c.max_size); ++k)
        for (const auto& p : posets_of_size(k)) small.push_back(&p);
    std::size_t exhaustive_pairs = 0;
    for (auto* x : small)
        for (auto* y : small)
            for (auto* z : small) {
                const auto f1 = all_kleisli_morphisms(*x, *y);
                const auto f2 = all_kleisli_morphisms(*y, *z);
                Report r("c-functor");
                for (const auto& a : f1)
                    for (const auto& b : f2) {
                        r.absorb(c_functoriality_check(cx_of(*x), cx_of(*y), cx_of(*z), a, b));
                        ++exhaustive_pairs;
                    }
                merge(rep, r, "exhaustive");
            }
    // Sampled composable pairs over posets with 1..max_size points.
    std::vector<const FinPoset*> big;
    for (std::size_t k = 1; k <= c.max_size; ++k)
        for (const auto& p : posets_of_size(k)) big.push_back(&p);
    std::mt19937_64 rng(c.seed);
    for (std::size_t s = 0; s < c.corpus; ++s) {
        const FinPoset& x = *big[draw(rng, big.size())];
        const FinPoset& y = *big[draw(rng, big.size())];
        const FinPoset& z = *big[draw(rng, big.size())];
        const auto a = random_kleisli(rng, x, y);
        const auto b = random_kleisli(rng, y, z);
        merge(rep, c_functoriality_check(cx_of(x), cx_of(y), cx_of(z), a, b), "sample" + std::to_string(s));
        // Kleisli laws and V on the same draw.
        Report k("kleisli");
        k.expect(kleisli_compose(a, kleisli_identity(x)) == a, "right-identity", std::to_string(s));
        k.expect(kleisli_compose(kleisli_identity(y), a) == a, "left-identity", std::to_string(s));
        const auto f = random_monotone(rng, x, y);
        const auto g = random_monotone(rng, y, z);
        k.absorb(verify_functoriality(x, y, z, f, g));
        PosetMap gf(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) gf[i] = g[f[i]];
        k.expect(kleisli_compose(graph_of(z, g), graph_of(y, f)) == graph_of(z, gf), "graph-composition", std::to_string(s));
        merge(rep, k, "sample" + std::to_string(s));
    }
    rep.set_stat("exhaustive_pairs", std::to_string(exhaustive_pairs));
    rep.set_stat("sampled_pairs", std::to_string(c.corpus));
    return instances + exhaustive_pairs + c.corpus;
}

inline std::size_t suite_total_partial(const SuiteConfig& c, Report& rep) {
    const Quantale q(c.tnorm);
    const std::int64_t n = c.instance ? c.instance->grid.value_or(c.grid) : c.grid;
    require_grid_closed(q, n);
    if (c.instance) {
        if (c.instance->kind != InstanceKind::Distributor)
            throw InputError(ErrorCode::MalformedDocument, "total-partial needs a distributor instance");
        const auto& x = *c.instance->poset;
        const auto& y = *c.instance->target;
        KleisliMorphism k{{}, y.size()};
        for (std::size_t a = 0; a < x.size(); ++a) {
            Subset row(y.size());
            for (std::size_t b = 0; b < y.size(); ++b) {
                const Value& v = (*c.instance->relation)(a, b);
                if (!v.is_zero() && !v.is_one())
                    throw InputError(ErrorCode::OutOfRange, "total-partial needs a 0/1 distributor");
                if (v.is_one()) row.set(b);
            }
            k.rows.push_back(row);
        }
        merge(rep, total_partial_audit(x, y, k, function_space(x, q, n), function_space(y, q, n)),
              c.instance_name.empty() ? "instance" : c.instance_name);
        return 1;
    }
    const std::size_t hi = std::min<std::size_t>(3, c.max_size);
    std::vector<PosetCase> ps = poset_cases(c, 0, hi);
    std::vector<FunctionSpace> spaces;
    for (const auto& pc : ps) spaces.push_back(function_space(pc.poset, q, n));
    std::size_t count = 0, total = 0, deterministic = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            Report r("total-partial");
            for (const auto& k : all_kleisli_morphisms(ps[i].poset, ps[j].poset)) {
                r.absorb(total_partial_audit(ps[i].poset, ps[j].poset, k, spaces[i], spaces[j]));
                ++count;
                total += is_total(k) ? 1 : 0;
                deterministic += is_deterministic(ps[j].poset, k) ? 1 : 0;
            }
            merge(rep, r, ps[i].tag + "->" + ps[j].tag);
        }
    rep.set_stat("distributors", std::to_string(count));
    rep.set_stat("total", std::to_string(total));
    rep.set_stat("deterministic", std::to_string(deterministic));
    return count;
}

inline std::size_t suite_stone_weierstrass(const SuiteConfig& c, Report& rep) {
    const Quantale q(c.tnorm);
    const auto grids = grids_for(c);
    require_grids(q, grids.front(), grids.back());
    std::size_t instances = 0, exact = 0, hypothesis_failed = 0;
    rep.note("hom-continuity hypothesis is vacuous on a finite grid");
    rep.note("every subset of a finite carrier is closed; density is checked at level (n-1)/n");
    for (auto n : grids) {
        std::vector<PosetCase> cases;
        std::vector<std::vector<std::vector<Level>>> given;
        if (c.instance && c.instance->kind == InstanceKind::Generators) {
            cases.push_back({c.instance_name.empty() ? "instance" : c.instance_name, *c.instance->poset});
        } else {
            cases = poset_cases(c, 0, c.max_size);
        }
        for (const auto& pc : cases) {
            const FunctionSpace cx = function_space(pc.poset, q, n);
            std::vector<std::size_t> gens;
            if (c.instance && c.instance->kind == InstanceKind::Generators) {
                for (const auto& row : c.instance->generators) {
                    std::vector<Level> t;
                    for (const auto& v : row) {
                        if (!v.on_grid(n)) throw InputError(ErrorCode::OutOfRange, v.str() + " is not on Q_" + std::to_string(n));
                        t.push_back(static_cast<Level>(v.grid_level(n)));
                    }
                    auto idx = cx.find(t);
                    if (!idx) throw InputError(ErrorCode::NotMonotone, "generator " + table_str(row) + " is not in CX");
                    gens.push_back(*idx);
                }
            } else {
                gens = down_set_indicators(pc.poset, cx);
            }
            const std::string tag = pc.tag + " n=" + std::to_string(n);
            SwResult res;
            Report sw = sw_audit(pc.poset, cx, gens, &res);
            sw.notes.clear();
            merge(rep, sw, tag);
            if (!res.sep) ++hypothesis_failed;
            exact += res.exact ? 1 : 0;
            const SubStructure l = generate_closure(cx, gens, stone_ops | ClosureOp::Powers);
            Report pr = sep_premise_audit(pc.poset, cx, l.members);
            pr.notes.clear();
            merge(rep, pr, tag);
            ++instances;
        }
    }
    if (hypothesis_failed) rep.note("hypothesis failed on " + std::to_string(hypothesis_failed) + " instances; density not asserted there");
    rep.set_stat("exact_equality", std::to_string(exact) + "/" + std::to_string(instances));
    rep.set_stat("sep_failed", std::to_string(hypothesis_failed));
    return instances;
}

inline std::size_t suite_enriched_roundtrip(const SuiteConfig& c, Report& rep) {
    require_lukasiewicz(c);
    const Quantale q(c.tnorm);
    const auto grids = grids_for(c);
    require_grids(q, grids.front(), grids.back());
    std::size_t instances = 0, non_poset = 0, cogenerated = 0;
    for (const auto& cc : category_cases(c, q, std::min<std::size_t>(3, c.max_size))) {
        Report closure;
        const FunctionSpace cx = enumerate_cx(cc.cat, cc.n, &closure);
        merge(rep, closure, cc.tag);
        ++instances;
        if (!underlying_poset(cc.cat)) ++non_poset;
        if (!rep.expect(is_cogenerated(cx), cc.tag + "/cogenerated", "")) continue;
        ++cogenerated;
        AdjunctionOptions opt;
        opt.seed = c.seed + instances;
        opt.corpus = c.corpus;
        Report adj = adjunction_audit(cx, opt);
        adj.notes.clear();
        merge(rep, adj, cc.tag);
        merge(rep, lemma1_audit(cx), cc.tag);
        merge(rep, pointsep_extension_audit(cx), cc.tag);
    }
    rep.set_stat("categories", std::to_string(instances));
    rep.set_stat("non_poset", std::to_string(non_poset));
    rep.set_stat("cogenerated", std::to_string(cogenerated));
    return instances;
}

inline std::size_t suite_lemma1(const SuiteConfig& c, Report& rep) {
    const Quantale q(c.tnorm);
    const auto grids = grids_for(c);
    require_grids(q, grids.front(), grids.back());
    std::size_t instances = 0;
    for (const auto& cc : category_cases(c, q, std::min<std::size_t>(3, c.max_size))) {
        const FunctionSpace cx = enumerate_cx(cc.cat, cc.n);
        merge(rep, lemma1_audit(cx), cc.tag);
        ++instances;
    }
    return instances;
}

inline std::size_t suite_twovalued(const SuiteConfig& c, Report& rep) {
    require_lukasiewicz(c);
    const Quantale q(c.tnorm);
    const auto grids = grids_for(c);
    require_grids(q, grids.front(), grids.back());
    std::size_t instances = 0, weights = 0;
    for (auto n : grids)
        for (const auto& pc : poset_cases(c, 1, std::min<std::size_t>(3, c.max_size))) {
            const FunctionSpace cx = function_space(pc.poset, q, n);
            Report r("twovalued");
            for (const auto& w : grid_weights(cx.base(), n)) {
                r.absorb(twovalued_audit(cx, w));
                ++weights;
            }
            merge(rep, r, pc.tag + " n=" + std::to_string(n));
            ++instances;
        }
    rep.set_stat("weights", std::to_string(weights));
    return instances;
}

inline std::size_t suite_tensor_maximality(const SuiteConfig& c, Report& rep) {
    require_lukasiewicz(c);
    const Quantale q(c.tnorm);
    auto grids = grids_for(c);
    if (!c.instance) grids.resize(std::min<std::size_t>(grids.size(), 2));
    require_grids(q, grids.front(), grids.back());
    std::size_t instances = 0;
    for (auto n : grids)
        for (const auto& pc : poset_cases(c, 1, std::min<std::size_t>(2, c.max_size))) {
            const FunctionSpace cx = function_space(pc.poset, q, n);
            for (std::size_t psi0 = 0; psi0 < cx.size(); ++psi0) {
                merge(rep, tensor_maximality_audit(cx, psi0), pc.tag + " n=" + std::to_string(n) + " ψ0=" + cx.str(psi0));
                ++instances;
            }
        }
    return instances;
}

} // namespace detail

/// Runs the named suite. Unknown names and out-of-range bounds raise InputError.
inline SuiteResult run_suite(const SuiteConfig& config) {
    using namespace detail;
    if (config.grid < 1 || config.grid > 12) throw InputError(ErrorCode::CapExceeded, "--grid must be in 1..12");
    if (config.max_size > 5) throw InputError(ErrorCode::CapExceeded, "--max-size must be at most 5");
    if (config.corpus > 1'000'000) throw InputError(ErrorCode::CapExceeded, "--corpus must be at most 1000000");
    static const std::map<std::string, std::function<std::size_t(const SuiteConfig&, Report&)>> table{
        {"quantale-axioms", suite_quantale_axioms},
        {"no-zero-divisors", suite_no_zero_divisors},
        {"monad-laws", suite_monad_laws},
        {"representability", suite_representability},
        {"condition-table", suite_condition_table},
        {"min-counterexample", suite_min_counterexample},
        {"functoriality", suite_functoriality},
        {"total-partial", suite_total_partial},
        {"stone-weierstrass", suite_stone_weierstrass},
        {"enriched-roundtrip", suite_enriched_roundtrip},
        {"lemma1", suite_lemma1},
        {"twovalued", suite_twovalued},
        {"tensor-maximality", suite_tensor_maximality},
    };
    auto it = table.find(config.suite);
    if (it == table.end()) throw InputError(ErrorCode::UnknownSuite, "unknown suite \"" + config.suite + "\"");
    const bool sweeps_grids = config.suite != "quantale-axioms" && config.suite != "no-zero-divisors";
    if (sweeps_grids && config.grid > 6 && !config.instance)
        throw InputError(ErrorCode::CapExceeded, config.suite + " sweeps grids up to 6");
    SuiteResult res{config, Report(config.suite), 0, 0};
    const auto start = std::chrono::steady_clock::now();
    res.instances = it->second(config, res.report);
    res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

/// 0 when everything passed, 1 on any failure, 2 when only findings remain.
inline int exit_code(const SuiteResult& r) {
    if (r.report.failures) return 1;
    if (r.report.findings) return 2;
    return 0;
}

inline const char* status_of(const SuiteResult& r) {
    switch (exit_code(r)) {
    case 0: return "pass";
    case 1: return "fail";
    default: return "findings";
    }
}

/// Deterministic rendering; timing is the last section and can be left out.
inline std::string emit_report(const SuiteResult& r, ReportFormat format, bool with_timing = true) {
    const SuiteConfig& c = r.config;
    const std::string instance = c.instance ? (c.instance_name.empty() ? "inline" : c.instance_name) : "-";
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["suite"] = c.suite;
        j["config"] = {{"tnorm", c.tnorm.name()}, {"grid", c.grid},  {"max_size", c.max_size},
                       {"seed", c.seed},          {"corpus", c.corpus}, {"instance", instance}};
        j["status"] = status_of(r);
        j["instances"] = r.instances;
        j["checks"] = r.report.checks;
        j["passes"] = r.report.passes;
        j["failures"] = r.report.failures;
        j["findings"] = r.report.findings;
        j["stats"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.report.stats) j["stats"][k] = v;
        j["notes"] = r.report.notes;
        j["witnesses"] = nlohmann::ordered_json::array();
        for (const auto& w : r.report.witnesses)
            j["witnesses"].push_back({{"kind", to_string(w.kind)}, {"check", w.check}, {"detail", w.detail}});
        if (with_timing) j["timing"] = {{"elapsed_ms", static_cast<std::int64_t>(r.millis)}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    auto row = [&](const std::string& k, const std::string& v) {
        out << k << std::string(k.size() < 12 ? 12 - k.size() : 1, ' ') << v << "\n";
    };
    row("suite", c.suite);
    row("tnorm", c.tnorm.name());
    row("grid", std::to_string(c.grid));
    row("max-size", std::to_string(c.max_size));
    row("seed", std::to_string(c.seed));
    row("corpus", std::to_string(c.corpus));
    row("instance", instance);
    row("status", status_of(r));
    row("instances", std::to_string(r.instances));
    row("checks", std::to_string(r.report.checks));
    row("passes", std::to_string(r.report.passes));
    row("failures", std::to_string(r.report.failures));
    row("findings", std::to_string(r.report.findings));
    if (!r.report.stats.empty()) {
        out << "\n[stats]\n";
        for (const auto& [k, v] : r.report.stats) row(k, v);
    }
    if (!r.report.notes.empty()) {
        out << "\n[notes]\n";
        for (const auto& n : r.report.notes) out << "- " << n << "\n";
    }
    if (!r.report.witnesses.empty()) {
        out << "\n[witnesses]\n";
        for (const auto& w : r.report.witnesses) out << to_string(w.kind) << "  " << w.check << "  " << w.detail << "\n";
    }
    if (with_timing) out << "\n[timing]\nelapsed_ms  " << static_cast<std::int64_t>(r.millis) << "\n";
    return out.str();
}

} // namespace qcat
