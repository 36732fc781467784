#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "function_space.hpp"
#include "poset.hpp"
#include "quantale.hpp"
#include "report.hpp"
#include "vcat.hpp"
#include "vietoris.hpp"

/**
 * @file duality_ordered.hpp
 *
 * Functionals Φ: CX → Q_n on the grid function space of a finite poset,
 * the representation A ↦ Φ_A, the conditions a functional may satisfy,
 * and the functor C on 0/1 distributors.
 */

namespace qcat {

/// Φ as a table of levels indexed by the members of a FunctionSpace.
using Functional = std::vector<Level>;

inline FunctionSpace function_space(const FinPoset& p, const Quantale& q, std::int64_t n) {
    return FunctionSpace::build(from_poset(p, q), n);
}

inline std::string functional_str(const FunctionSpace& cx, const Functional& phi) {
    std::vector<Value> vs;
    for (auto k : phi) vs.push_back(cx.level_value(k));
    return table_str(vs);
}

/// Φ_A(ψ) = max_{x∈A} ψ(x), 0 for A = ∅.
inline Functional phi_of(const FunctionSpace& cx, const Subset& a) {
    Functional phi(cx.size(), 0);
    const auto members = a.elements();
    for (std::size_t i = 0; i < cx.size(); ++i)
        for (auto x : members) phi[i] = std::max(phi[i], cx.level(i, x));
    return phi;
}

inline Functional constant_functional(const FunctionSpace& cx, Level k) { return Functional(cx.size(), k); }

enum class Condition { Mon, Act, Sup, TenLax, Ten, Top, Min, A };
inline constexpr std::array<Condition, 8> all_conditions{Condition::Mon,    Condition::Act, Condition::Sup,
                                                         Condition::TenLax, Condition::Ten, Condition::Top,
                                                         Condition::Min,    Condition::A};

inline const char* to_string(Condition c) {
    switch (c) {
    case Condition::Mon: return "Mon";
    case Condition::Act: return "Act";
    case Condition::Sup: return "Sup";
    case Condition::TenLax: return "TenLax";
    case Condition::Ten: return "Ten";
    case Condition::Top: return "Top";
    case Condition::Min: return "Min";
    case Condition::A: return "A";
    }
    return "?";
}

struct ConditionResult {
    bool holds = true;
    std::string witness; // first violation, empty when the condition holds
};

struct ConditionReport {
    std::array<ConditionResult, 8> results;

    const ConditionResult& operator[](Condition c) const { return results[static_cast<std::size_t>(c)]; }
    ConditionResult& operator[](Condition c) { return results[static_cast<std::size_t>(c)]; }
    bool holds(Condition c) const { return (*this)[c].holds; }

    /// Mon ∧ Act ∧ Sup ∧ Min, plus TenLax when `with_tenlax`.
    bool cut(bool with_tenlax) const {
        return holds(Condition::Mon) && holds(Condition::Act) && holds(Condition::Sup) && holds(Condition::Min) &&
               (!with_tenlax || holds(Condition::TenLax));
    }
};

namespace detail {

/// Evaluates one condition; `witness` receives the first violation when non-null.
inline bool check_condition(const FunctionSpace& cx, const Functional& phi, Condition c, std::string* witness) {
    const std::size_t m = cx.size();
    const Level n = static_cast<Level>(cx.n());
    auto fail = [&](std::string w) {
        if (witness) *witness = std::move(w);
        return false;
    };
    auto lv = [&](Level k) { return cx.level_value(k).str(); };
    switch (c) {
    case Condition::Mon:
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (cx.leq(i, j) && phi[i] > phi[j]) return fail("ψ1=" + cx.str(i) + " ψ2=" + cx.str(j));
        return true;
    case Condition::Act:
        for (Level k = 0; k <= n; ++k)
            for (std::size_t i = 0; i < m; ++i) {
                const int t = cx.act(k, i);
                if (t >= 0 && phi[static_cast<std::size_t>(t)] != cx.lt(k, phi[i]))
                    return fail("u=" + lv(k) + " ψ=" + cx.str(i));
            }
        return true;
    case Condition::Sup:
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const int t = cx.join(i, j);
                if (t >= 0 && phi[static_cast<std::size_t>(t)] != std::max(phi[i], phi[j]))
                    return fail("ψ1=" + cx.str(i) + " ψ2=" + cx.str(j));
            }
        return true;
    case Condition::TenLax:
    case Condition::Ten:
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                const int t = cx.tensor(i, j);
                if (t < 0) continue;
                const Level lhs = phi[static_cast<std::size_t>(t)];
                const Level rhs = cx.lt(phi[i], phi[j]);
                if (c == Condition::TenLax ? lhs > rhs : lhs != rhs)
                    return fail("ψ1=" + cx.str(i) + " ψ2=" + cx.str(j));
            }
        return true;
    case Condition::Top:
        if (phi[cx.constant(n)] != n) return fail("Φ(1)=" + lv(phi[cx.constant(n)]));
        return true;
    case Condition::Min:
        for (std::size_t i = 0; i < m; ++i)
            for (Level k = 0; k <= n; ++k) {
                const int t = cx.minus(i, k);
                if (t >= 0 && phi[static_cast<std::size_t>(t)] != cx.lm(phi[i], k))
                    return fail("ψ=" + cx.str(i) + " u=" + lv(k));
            }
        return true;
    case Condition::A:
        for (std::size_t x = 0; x < cx.points(); ++x) {
            bool rescue = false;
            for (std::size_t j = 0; j < m && !rescue; ++j) rescue = cx.level(j, x) == n && phi[j] == 0;
            if (rescue) continue;
            for (std::size_t i = 0; i < m; ++i)
                if (phi[i] == 0 && cx.level(i, x) > 0) return fail("x=" + std::to_string(x) + " ψ=" + cx.str(i));
        }
        return true;
    }
    return true;
}

} // namespace detail

inline bool check_condition(const FunctionSpace& cx, const Functional& phi, Condition c) {
    return detail::check_condition(cx, phi, c, nullptr);
}

/// Every condition, checked exhaustively over CX and Q_n.
inline ConditionReport check_conditions(const FunctionSpace& cx, const Functional& phi) {
    ConditionReport r;
    for (auto c : all_conditions) r[c].holds = detail::check_condition(cx, phi, c, &r[c].witness);
    return r;
}

/// Whether the condition cut must include TenLax for this tensor.
inline bool cut_needs_tenlax(const Quantale& q) { return has_nilpotents(q); }

/// Mon ∧ Act ∧ Sup ∧ Min (∧ TenLax), cheapest checks first.
inline bool passes_cut(const FunctionSpace& cx, const Functional& phi, bool with_tenlax) {
    for (auto c : {Condition::Act, Condition::Min, Condition::Sup, Condition::Mon})
        if (!check_condition(cx, phi, c)) return false;
    return !with_tenlax || check_condition(cx, phi, Condition::TenLax);
}

/// Zero(Φ) = ⋂{Zero(ψ) : Φ(ψ) = 0}; the whole carrier when no ψ is killed.
inline Subset zero_set(const FunctionSpace& cx, const Functional& phi) {
    Subset out = Subset::full(cx.points());
    for (std::size_t i = 0; i < cx.size(); ++i) {
        if (phi[i] != 0) continue;
        for (std::size_t x = 0; x < cx.points(); ++x)
            if (cx.level(i, x) != 0) out.reset(x);
    }
    return out;
}

/// Anti(Φ) = ⋂_ψ ψ⁻¹[0, Φ(ψ)].
inline Subset anti_set(const FunctionSpace& cx, const Functional& phi) {
    Subset out = Subset::full(cx.points());
    for (std::size_t i = 0; i < cx.size(); ++i)
        for (std::size_t x = 0; x < cx.points(); ++x)
            if (cx.level(i, x) > phi[i]) out.reset(x);
    return out;
}

/// Cφ: CY → CX as member indices, ψ ↦ (x ↦ max_{x φ y} ψ(y)); -1 if a result leaves CX.
inline std::vector<int> c_of_distributor(const FunctionSpace& cx, const FunctionSpace& cy, const KleisliMorphism& phi) {
    if (phi.rows.size() != cx.points() || phi.target != cy.points())
        throw InputError(ErrorCode::ShapeMismatch, "c_of_distributor: shapes differ");
    std::vector<int> out(cy.size(), -1);
    std::vector<Level> t(cx.points());
    std::vector<std::vector<std::size_t>> rows;
    for (const auto& r : phi.rows) rows.push_back(r.elements());
    for (std::size_t i = 0; i < cy.size(); ++i) {
        for (std::size_t x = 0; x < cx.points(); ++x) {
            t[x] = 0;
            for (auto y : rows[x]) t[x] = std::max(t[x], cy.level(i, y));
        }
        auto idx = cx.find(t);
        out[i] = idx ? static_cast<int>(*idx) : -1;
    }
    return out;
}

/// The largest level difference max_ψ |Φ(ψ) − Φ'(ψ)|.
inline Level functional_gap(const Functional& a, const Functional& b) {
    Level g = 0;
    for (std::size_t i = 0; i < a.size(); ++i) g = std::max(g, a[i] > b[i] ? a[i] - b[i] : b[i] - a[i]);
    return g;
}

/// Φ's that pass the random-corpus repair: monotone hull, then closure of
/// Φ upwards along Act and Sup until stable.
inline Functional repair_functional(const FunctionSpace& cx, Functional phi) {
    const std::size_t m = cx.size();
    const Level n = static_cast<Level>(cx.n());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (cx.leq(i, j) && phi[j] < phi[i]) {
                    phi[j] = phi[i];
                    changed = true;
                }
        for (Level k = 0; k <= n; ++k)
            for (std::size_t i = 0; i < m; ++i) {
                const int t = cx.act(k, i);
                if (t < 0) continue;
                const Level want = cx.lt(k, phi[i]);
                if (phi[static_cast<std::size_t>(t)] < want) {
                    phi[static_cast<std::size_t>(t)] = want;
                    changed = true;
                }
            }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const int t = cx.join(i, j);
                if (t < 0) continue;
                const Level want = std::max(phi[i], phi[j]);
                if (phi[static_cast<std::size_t>(t)] < want) {
                    phi[static_cast<std::size_t>(t)] = want;
                    changed = true;
                }
            }
    }
    return phi;
}

struct RepresentabilityOptions {
    std::uint64_t exhaustive_cap = 2'000'000; // (n+1)^|CX| at or below this enumerates every Φ
    std::uint64_t seed = 1;
    std::size_t corpus = 1000;                // functionals drawn per instance in corpus mode
};

struct RepresentabilityStats {
    bool exhaustive = false;
    std::uint64_t scanned = 0;
    std::uint64_t passing = 0;
    std::uint64_t representable = 0; // passing Φ equal to some Φ_A
    Level max_gap = 0;
    std::vector<Functional> passing_set; // kept only in exhaustive mode, in scan order
};

/**
 * For each Φ of the corpus passing the condition cut, checks Φ = Φ_{Zero(Φ)}
 * and Zero(Φ) = Anti(Φ); deviations are findings with the largest gap. Also
 * checks, for every Φ scanned, that Φ_{Anti(Φ)} ≤ Φ, that (A) follows from
 * Mon ∧ Act ∧ TenLax (Mon ∧ Act for nilpotent-free tensors), and that Φ ≤
 * Φ_{Zero(Φ)} whenever Mon ∧ Act ∧ Sup ∧ (A) hold. Finally every Φ_A must
 * pass the cut and be found.
 */
inline Report representability_audit(const FinPoset& p, const Quantale& q, std::int64_t n,
                                     const RepresentabilityOptions& opt = {}, RepresentabilityStats* out = nullptr) {
    Report r("representability");
    const FunctionSpace cx = function_space(p, q, n);
    const bool tenlax = cut_needs_tenlax(q);
    const auto ups = upper_sets(p);
    std::vector<Functional> reps;
    for (const auto& a : ups) reps.push_back(phi_of(cx, a));
    RepresentabilityStats st;

    std::uint64_t space = 1;
    bool small = true;
    for (std::size_t i = 0; i < cx.size() && small; ++i) {
        space *= static_cast<std::uint64_t>(n + 1);
        small = space <= opt.exhaustive_cap;
    }
    st.exhaustive = small;

    auto visit = [&](const Functional& phi) {
        ++st.scanned;
        const Subset anti = anti_set(cx, phi);
        const Subset zero = zero_set(cx, phi);
        const Functional lower = phi_of(cx, anti);
        bool below = true;
        for (std::size_t i = 0; i < phi.size() && below; ++i) below = lower[i] <= phi[i];
        r.expect(below, "anti-below", functional_str(cx, phi));
        r.expect(anti.subset_of(zero), "anti-in-zero", functional_str(cx, phi));

        const bool mon = check_condition(cx, phi, Condition::Mon);
        const bool act = mon && check_condition(cx, phi, Condition::Act);
        if (act) {
            const bool premise = !tenlax || check_condition(cx, phi, Condition::TenLax);
            const bool cond_a = check_condition(cx, phi, Condition::A);
            if (premise) r.expect(cond_a, "A-from-Mon-Act", functional_str(cx, phi));
            if (cond_a && check_condition(cx, phi, Condition::Sup)) {
                const Functional upper = phi_of(cx, zero);
                bool le = true;
                for (std::size_t i = 0; i < phi.size() && le; ++i) le = phi[i] <= upper[i];
                if (le)
                    r.pass();
                else
                    r.finding("below-zero", functional_str(cx, phi));
            }
        }
        if (!(act && passes_cut(cx, phi, tenlax))) return;
        ++st.passing;
        if (st.exhaustive) st.passing_set.push_back(phi);
        const Functional rep = phi_of(cx, zero);
        const Level gap = functional_gap(rep, phi);
        st.max_gap = std::max(st.max_gap, gap);
        if (gap == 0) {
            ++st.representable;
            r.pass();
        } else {
            r.finding("phi=phi_zero", functional_str(cx, phi) + " gap " + std::to_string(gap) + "/" + std::to_string(n));
        }
        if (zero == anti)
            r.pass();
        else
            r.finding("zero=anti", functional_str(cx, phi) + " Zero=" + zero.str() + " Anti=" + anti.str());
    };

    if (st.exhaustive) {
        Functional phi(cx.size(), 0);
        while (true) {
            visit(phi);
            std::size_t i = phi.size();
            while (i > 0 && phi[i - 1] == n) phi[--i] = 0;
            if (i == 0) break;
            ++phi[i - 1];
        }
    } else {
        r.note("corpus mode: (n+1)^|CX| exceeds the exhaustive cap");
        std::mt19937_64 rng(opt.seed);
        for (const auto& rep : reps) visit(rep);
        for (std::size_t s = 0; s < opt.corpus; ++s) {
            Functional phi(cx.size());
            for (auto& v : phi) v = static_cast<Level>(detail::draw(rng, static_cast<std::uint64_t>(n + 1)));
            visit(phi);
            visit(repair_functional(cx, phi));
        }
    }

    // Every representable passes the cut; in exhaustive mode it was also found.
    for (std::size_t k = 0; k < reps.size(); ++k) {
        r.expect(passes_cut(cx, reps[k], tenlax), "phi_A-passes-cut", ups[k].str());
        if (st.exhaustive) {
            bool found = false;
            for (const auto& f : st.passing_set) found = found || f == reps[k];
            r.expect(found, "phi_A-found", ups[k].str());
        }
    }
    r.set_stat("CX", std::to_string(cx.size()));
    r.set_stat("mode", st.exhaustive ? "exhaustive" : "corpus");
    r.set_stat("scanned", std::to_string(st.scanned));
    r.set_stat("passing", std::to_string(st.passing));
    r.set_stat("representable", std::to_string(st.representable));
    r.set_stat("max_gap", std::to_string(st.max_gap) + "/" + std::to_string(n));
    if (out) *out = std::move(st);
    return r;
}

/// Φ_A condition table: Mon/Act/Sup/TenLax/Min always, Top ⟺ A ≠ ∅,
/// Ten ⟺ A irreducible, and Zero(Φ_A) = A = Anti(Φ_A), for every upper A.
inline Report phi_a_audit(const FinPoset& p, const Quantale& q, std::int64_t n) {
    Report r("phi-a");
    const FunctionSpace cx = function_space(p, q, n);
    for (const auto& a : upper_sets(p)) {
        const Functional phi = phi_of(cx, a);
        const ConditionReport c = check_conditions(cx, phi);
        const std::string tag = a.str();
        for (auto cond : {Condition::Mon, Condition::Act, Condition::Sup, Condition::TenLax, Condition::Min})
            r.expect(c.holds(cond), to_string(cond), tag + " " + c[cond].witness);
        r.expect(c.holds(Condition::Top) == !a.none(), "Top<=>nonempty", tag);
        r.expect(c.holds(Condition::Ten) == is_irreducible(p, a), "Ten<=>irreducible", tag);
        r.expect(zero_set(cx, phi) == a, "Zero(phi_A)=A", tag);
        r.expect(anti_set(cx, phi) == a, "Anti(phi_A)=A", tag);
    }
    return r;
}

/// The relational order-embedding A ↦ Φ_A: A ⊇ B ⟺ Φ_A ≥ Φ_B.
inline Report embedding_audit(const FinPoset& p, const Quantale& q, std::int64_t n) {
    Report r("embedding");
    const FunctionSpace cx = function_space(p, q, n);
    const auto ups = upper_sets(p);
    std::vector<Functional> reps;
    for (const auto& a : ups) reps.push_back(phi_of(cx, a));
    for (std::size_t i = 0; i < ups.size(); ++i)
        for (std::size_t j = 0; j < ups.size(); ++j) {
            bool ge = true;
            for (std::size_t k = 0; k < cx.size() && ge; ++k) ge = reps[i][k] >= reps[j][k];
            r.expect(ge == ups[j].subset_of(ups[i]), "order-embedding", ups[i].str() + " " + ups[j].str());
        }
    return r;
}

/// Partial function: every row is empty or a principal ↑y.
inline bool is_deterministic(const FinPoset& y, const KleisliMorphism& phi) {
    for (const auto& row : phi.rows)
        if (!is_irreducible(y, row)) return false;
    return true;
}

inline bool is_total(const KleisliMorphism& phi) {
    for (const auto& row : phi.rows)
        if (row.none()) return false;
    return true;
}

/// φ total ⟺ Cφ(1) = 1, and φ deterministic ⟺ Cφ preserves binary ⊗.
inline Report total_partial_audit(const FinPoset& x, const FinPoset& y, const KleisliMorphism& phi,
                                  const FunctionSpace& cx, const FunctionSpace& cy) {
    Report r("total-partial");
    const auto c = c_of_distributor(cx, cy, phi);
    std::string tag;
    for (const auto& row : phi.rows) tag += row.str();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!r.expect(c[i] >= 0, "lands-in-CX", tag + " ψ=" + cy.str(i))) return r;
    const Level n = static_cast<Level>(cx.n());
    const bool top = c[cy.constant(n)] == static_cast<int>(cx.constant(n));
    r.expect(is_total(phi) == top, "total<=>C(1)=1", tag);
    bool tensor = true;
    for (std::size_t i = 0; i < cy.size() && tensor; ++i)
        for (std::size_t j = i; j < cy.size() && tensor; ++j) {
            const int t = cy.tensor(i, j);
            if (t < 0) continue;
            tensor = c[static_cast<std::size_t>(t)] ==
                     cx.tensor(static_cast<std::size_t>(c[i]), static_cast<std::size_t>(c[j]));
        }
    r.expect(is_deterministic(y, phi) == tensor, "deterministic<=>C-preserves-tensor", tag);
    (void)x;
    return r;
}

/// C(φ'·φ) = Cφ ∘ Cφ' for φ: X ⇸ Y and φ': Y ⇸ Z, plus C(id) = id.
inline Report c_functoriality_check(const FunctionSpace& cx, const FunctionSpace& cy, const FunctionSpace& cz,
                                    const KleisliMorphism& phi, const KleisliMorphism& phi2) {
    Report r("c-functor");
    const auto c1 = c_of_distributor(cx, cy, phi);
    const auto c2 = c_of_distributor(cy, cz, phi2);
    const auto c12 = c_of_distributor(cx, cz, kleisli_compose(phi2, phi));
    for (std::size_t i = 0; i < cz.size(); ++i) {
        const int mid = c2[i];
        const int rhs = mid < 0 ? -1 : c1[static_cast<std::size_t>(mid)];
        r.expect(c12[i] >= 0 && c12[i] == rhs, "C(composite)", "ψ=" + cz.str(i));
    }
    return r;
}

inline Report c_identity_check(const FinPoset& p, const FunctionSpace& cx) {
    Report r("c-identity");
    const auto c = c_of_distributor(cx, cx, kleisli_identity(p));
    for (std::size_t i = 0; i < cx.size(); ++i) r.expect(c[i] == static_cast<int>(i), "C(id)=id", cx.str(i));
    return r;
}

/// Φ = u ∧ − on the one-point space, the functional that passes Mon/Act/Sup
/// but not Min for the minimum tensor.
inline Functional meet_functional(const FunctionSpace& cx, Level u) {
    Functional phi(cx.size());
    for (std::size_t i = 0; i < cx.size(); ++i) phi[i] = std::min(u, cx.level(i, 0));
    return phi;
}

} // namespace qcat
