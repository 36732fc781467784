#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "duality_ordered.hpp"
#include "function_space.hpp"
#include "report.hpp"
#include "vcat.hpp"
#include "vrel.hpp"

/**
 * @file duality_enriched.hpp
 *
 * Finite separated [0,1]-categories in place of metric compact spaces. On a
 * finite carrier every ultrafilter is principal, so the enriched function
 * space is simply CX = {ψ : a(x,y) ≤ hom(ψ(y), ψ(x))} over the grid.
 *
 * A weight φ: G ⇸ X is stored as its row of levels φ(x).
 */

namespace qcat {

using Weight = std::vector<Level>;

inline std::string weight_str(const FunctionSpace& cx, const Weight& w) { return functional_str(cx, w); }

/// CX together with a report on its closure properties.
inline FunctionSpace enumerate_cx(const VCategory& x, std::int64_t n, Report* closure = nullptr) {
    FunctionSpace cx = FunctionSpace::build(x, n);
    if (closure) {
        Report& r = *closure;
        r.id = "enriched-cx";
        const Level top = static_cast<Level>(n);
        for (std::size_t p = 0; p < x.size(); ++p) {
            std::vector<Level> t(x.size());
            for (std::size_t y = 0; y < x.size(); ++y) t[y] = static_cast<Level>(x(y, p).grid_level(n));
            r.expect(cx.find(t).has_value(), "representable", "a(-," + x.label(p) + ")");
        }
        for (std::size_t i = 0; i < cx.size(); ++i) {
            for (std::size_t j = 0; j < cx.size(); ++j) r.expect(cx.join(i, j) >= 0, "join", cx.str(i) + cx.str(j));
            for (Level k = 0; k <= top; ++k) {
                r.expect(cx.act(k, i) >= 0, "act", cx.str(i));
                r.expect(cx.minus(i, k) >= 0, "minus", cx.str(i));
                r.expect(cx.power(k, i) >= 0, "power", cx.str(i));
            }
        }
    }
    return cx;
}

/// a(x,y) = min_{ψ∈S} hom(ψ(y), ψ(x)) with S = CX, or the members of `only` when given.
inline bool is_cogenerated(const FunctionSpace& cx, const std::optional<Subset>& only = std::nullopt) {
    const VCategory& x = cx.base();
    const Level n = static_cast<Level>(cx.n());
    for (std::size_t p = 0; p < x.size(); ++p)
        for (std::size_t q = 0; q < x.size(); ++q) {
            Level m = n;
            for (std::size_t i = 0; i < cx.size(); ++i)
                if (!only || only->test(i)) m = std::min(m, cx.lh(cx.level(i, q), cx.level(i, p)));
            if (cx.level_value(m) != x(p, q)) return false;
        }
    return true;
}

/// Φ(ψ) = ⋁_x ψ(x) ⊗ φ(x).
inline Functional enriched_c(const FunctionSpace& cx, const Weight& phi) {
    Functional out(cx.size(), 0);
    for (std::size_t i = 0; i < cx.size(); ++i)
        for (std::size_t x = 0; x < cx.points(); ++x) out[i] = std::max(out[i], cx.lt(cx.level(i, x), phi[x]));
    return out;
}

/// Cφ: CY → CX for a distributor φ: X ⇸ Y, Cφ(ψ)(x) = ⋁_y φ(x,y) ⊗ ψ(y); -1 where a result leaves CX.
inline std::vector<int> enriched_c_map(const FunctionSpace& cx, const FunctionSpace& cy, const VRelation& phi) {
    const std::int64_t n = cx.n();
    std::vector<int> out(cy.size(), -1);
    std::vector<Level> t(cx.points());
    for (std::size_t i = 0; i < cy.size(); ++i) {
        for (std::size_t x = 0; x < cx.points(); ++x) {
            t[x] = 0;
            for (std::size_t y = 0; y < cy.points(); ++y)
                t[x] = std::max(t[x], cx.lt(static_cast<Level>(phi(x, y).grid_level(n)), cy.level(i, y)));
        }
        auto idx = cx.find(t);
        out[i] = idx ? static_cast<int>(*idx) : -1;
    }
    return out;
}

struct Retract {
    Weight full;       // inf_ψ hom(ψ(x), Φ(ψ))
    Weight simplified; // inf_{ψ(x)=1} Φ(ψ)
};

inline Retract retract_phi(const FunctionSpace& cx, const Functional& phi) {
    const Level n = static_cast<Level>(cx.n());
    Retract r{Weight(cx.points(), n), Weight(cx.points(), n)};
    for (std::size_t x = 0; x < cx.points(); ++x)
        for (std::size_t i = 0; i < cx.size(); ++i) {
            r.full[x] = std::min(r.full[x], cx.lh(cx.level(i, x), phi[i]));
            if (cx.level(i, x) == n) r.simplified[x] = std::min(r.simplified[x], phi[i]);
        }
    return r;
}

/// Every weight G ⇸ X on the grid, i.e. every φ with φ(x) ⊗ a(x,y) ≤ φ(y).
inline std::vector<Weight> grid_weights(const VCategory& x, std::int64_t n) {
    std::vector<Weight> out;
    for (const auto& r : grid_distributors(unit_category(x.q), x, n)) {
        Weight w(x.size());
        for (std::size_t p = 0; p < x.size(); ++p) w[p] = static_cast<Level>(r(0, p).grid_level(n));
        out.push_back(w);
    }
    return out;
}

/// The finitely cocontinuous functionals: Mon, Act and Sup (Act at u = 0 gives Φ(0) = 0).
inline bool is_finsup_functional(const FunctionSpace& cx, const Functional& phi) {
    return check_condition(cx, phi, Condition::Act) && check_condition(cx, phi, Condition::Sup) &&
           check_condition(cx, phi, Condition::Mon);
}

struct AdjunctionOptions {
    std::uint64_t exhaustive_cap = 200'000;
    std::uint64_t seed = 1;
    std::size_t corpus = 500;
};

/**
 * For every grid weight φ: retract(Cφ) ≥ φ, with equality, and the two
 * retract formulas agree. For FinSup functionals Φ: C(retract Φ) ≤ Φ, and a
 * strict inequality is a finding carrying the gap in grid steps.
 */
inline Report adjunction_audit(const FunctionSpace& cx, const AdjunctionOptions& opt = {}) {
    Report r("adjunction");
    const VCategory& x = cx.base();
    const Level n = static_cast<Level>(cx.n());
    for (const auto& phi : grid_weights(x, cx.n())) {
        const Retract back = retract_phi(cx, enriched_c(cx, phi));
        bool ge = true;
        for (std::size_t p = 0; p < phi.size(); ++p) ge = ge && back.full[p] >= phi[p];
        r.expect(ge, "retract>=phi", weight_str(cx, phi));
        r.expect(back.full == phi, "retract(C(phi))=phi", weight_str(cx, phi) + " got " + weight_str(cx, back.full));
        r.expect(back.full == back.simplified, "retract-forms-agree", weight_str(cx, phi));
    }

    std::uint64_t space = 1;
    bool exhaustive = true;
    for (std::size_t i = 0; i < cx.size() && exhaustive; ++i) {
        space *= static_cast<std::uint64_t>(n + 1);
        exhaustive = space <= opt.exhaustive_cap;
    }
    std::size_t considered = 0, skipped = 0;
    Level max_gap = 0;
    auto visit = [&](const Functional& big) {
        if (!is_finsup_functional(cx, big)) {
            ++skipped;
            return;
        }
        ++considered;
        const Retract back = retract_phi(cx, big);
        r.expect(back.full == back.simplified, "retract-forms-agree", functional_str(cx, big));
        const Functional again = enriched_c(cx, back.full);
        bool le = true;
        for (std::size_t i = 0; i < big.size(); ++i) le = le && again[i] <= big[i];
        if (!r.expect(le, "C(retract)<=Phi", functional_str(cx, big))) return;
        const Level gap = functional_gap(again, big);
        max_gap = std::max(max_gap, gap);
        if (gap == 0)
            r.pass();
        else
            r.finding("C(retract)=Phi", functional_str(cx, big) + " gap " + std::to_string(gap) + "/" + std::to_string(n));
    };
    if (exhaustive) {
        Functional big(cx.size(), 0);
        while (true) {
            visit(big);
            std::size_t i = big.size();
            while (i > 0 && big[i - 1] == n) big[--i] = 0;
            if (i == 0) break;
            ++big[i - 1];
        }
    } else {
        r.note("corpus mode for functionals: (n+1)^|CX| exceeds the exhaustive cap");
        std::mt19937_64 rng(opt.seed);
        for (const auto& phi : grid_weights(x, cx.n())) visit(enriched_c(cx, phi));
        for (std::size_t s = 0; s < opt.corpus; ++s) {
            Functional big(cx.size());
            for (auto& v : big) v = static_cast<Level>(detail::draw(rng, static_cast<std::uint64_t>(n + 1)));
            visit(repair_functional(cx, big));
        }
    }
    r.set_stat("mode", exhaustive ? "exhaustive" : "corpus");
    r.set_stat("finsup_functionals", std::to_string(considered));
    r.set_stat("skipped", std::to_string(skipped));
    r.set_stat("max_gap", std::to_string(max_gap) + "/" + std::to_string(n));
    return r;
}

/// a(y,x) = min_{ψ(x)=1} ψ(y) for all x, y.
inline Report lemma1_audit(const FunctionSpace& cx) {
    Report r("lemma1");
    const VCategory& x = cx.base();
    const Level n = static_cast<Level>(cx.n());
    for (std::size_t p = 0; p < x.size(); ++p)
        for (std::size_t q = 0; q < x.size(); ++q) {
            Level m = n;
            for (std::size_t i = 0; i < cx.size(); ++i)
                if (cx.level(i, p) == n) m = std::min(m, cx.level(i, q));
            r.expect(cx.level_value(m) == x(q, p), "a(y,x)=min", "(" + x.label(q) + ", " + x.label(p) + ")");
        }
    return r;
}

/// Distinct weights φ1 ≠ φ2 have Cφ1 ≠ Cφ2.
inline Report pointsep_extension_audit(const FunctionSpace& cx) {
    Report r("pointsep");
    std::map<Functional, Weight> seen;
    for (const auto& phi : grid_weights(cx.base(), cx.n())) {
        auto [it, fresh] = seen.emplace(enriched_c(cx, phi), phi);
        r.expect(fresh, "separated", weight_str(cx, phi) + " vs " + weight_str(cx, it->second));
    }
    return r;
}

/// For a poset-based X: φ is 0/1-valued ⟺ Cφ satisfies TenLax.
inline Report twovalued_audit(const FunctionSpace& cx, const Weight& phi) {
    if (!underlying_poset(cx.base()))
        throw InputError(ErrorCode::NotPosetBased, "the tensor on CX needs a poset-based category");
    Report r("twovalued");
    const Level n = static_cast<Level>(cx.n());
    bool two = true;
    for (auto v : phi) two = two && (v == 0 || v == n);
    std::string witness;
    const bool lax = detail::check_condition(cx, enriched_c(cx, phi), Condition::TenLax, &witness);
    r.expect(two == lax, "0/1<=>TenLax", weight_str(cx, phi) + (witness.empty() ? "" : " " + witness));
    return r;
}

/**
 * Among Φ = Cφ for grid distributors φ: X ⇸ X, those with Φ(1) ≤ ψ0 and
 * Φ(ψ) ≤ ψ are pointwise below ψ0 ⊗ −, which is itself one of them.
 */
inline Report tensor_maximality_audit(const FunctionSpace& cx, std::size_t psi0, std::size_t* survivors = nullptr) {
    if (!underlying_poset(cx.base()))
        throw InputError(ErrorCode::NotPosetBased, "the tensor on CX needs a poset-based category");
    Report r("tensor-maximality");
    const VCategory& x = cx.base();
    const Level n = static_cast<Level>(cx.n());
    std::vector<int> target(cx.size());
    for (std::size_t i = 0; i < cx.size(); ++i) target[i] = cx.tensor(psi0, i);
    std::size_t count = 0;
    bool target_survives = false;
    for (const auto& phi : grid_distributors(x, x, cx.n())) {
        const auto c = enriched_c_map(cx, cx, phi);
        bool ok = true;
        for (std::size_t i = 0; i < cx.size() && ok; ++i) ok = c[i] >= 0;
        if (!r.expect(ok, "lands-in-CX", relation_str(phi))) continue;
        if (!cx.leq(static_cast<std::size_t>(c[cx.constant(n)]), psi0)) continue;
        bool below = true;
        for (std::size_t i = 0; i < cx.size() && below; ++i) below = cx.leq(static_cast<std::size_t>(c[i]), i);
        if (!below) continue;
        ++count;
        bool dominated = true;
        for (std::size_t i = 0; i < cx.size() && dominated; ++i)
            dominated = target[i] >= 0 && cx.leq(static_cast<std::size_t>(c[i]), static_cast<std::size_t>(target[i]));
        r.expect(dominated, "survivor<=psi0*-", relation_str(phi));
        if (c == target) target_survives = true;
    }
    r.expect(target_survives, "psi0*-survives", "ψ0=" + cx.str(psi0));
    r.set_stat("survivors", std::to_string(count));
    if (survivors) *survivors = count;
    return r;
}

/// All valid categories on {0..k-1} with entries on Q_n, optionally only separated ones.
inline std::vector<VCategory> enumerate_vcategories(const Quantale& q, std::size_t k, std::int64_t n,
                                                    bool separated_only = true) {
    std::vector<VCategory> out;
    const auto g = grid_chain(n);
    VCategory cur{q, ValueMatrix(k, std::vector<Value>(k, Value::one())), {}};
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) cells.emplace_back(i, j);
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == cells.size()) {
            if (is_valid(cur) && (!separated_only || is_separated(cur))) out.push_back(cur);
            return;
        }
        for (const auto& v : g.elements) {
            cur.a[cells[c].first][cells[c].second] = v;
            self(self, c + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace qcat
