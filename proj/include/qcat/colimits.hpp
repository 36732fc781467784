#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quantale.hpp"
#include "report.hpp"
#include "subset.hpp"
#include "vcat.hpp"
#include "vrel.hpp"

/**
 * @file colimits.hpp
 *
 * Colimits in finite [0,1]-categories, found by scanning the carrier for an
 * element satisfying the defining equation. "Absent" is a normal result.
 */

namespace qcat {

/// a(i,j) = a(j,i) = 1.
inline bool isomorphic(const VCategory& x, std::size_t i, std::size_t j) { return x(i, j).is_one() && x(j, i).is_one(); }

/// First c with a(c,y) = hom(u, a(x,y)) for all y.
inline std::optional<std::size_t> copower(const VCategory& x, std::size_t p, const Value& u) {
    for (std::size_t c = 0; c < x.size(); ++c) {
        bool ok = true;
        for (std::size_t y = 0; y < x.size() && ok; ++y) ok = x(c, y) == x.q.hom(u, x(p, y));
        if (ok) return c;
    }
    return std::nullopt;
}

/// First c with a(y,c) = hom(u, a(y,x)) for all y.
inline std::optional<std::size_t> upower(const VCategory& x, std::size_t p, const Value& u) {
    for (std::size_t c = 0; c < x.size(); ++c) {
        bool ok = true;
        for (std::size_t y = 0; y < x.size() && ok; ++y) ok = x(y, c) == x.q.hom(u, x(y, p));
        if (ok) return c;
    }
    return std::nullopt;
}

/// First b with a(b,y) = 1 for all y.
inline std::optional<std::size_t> bottom(const VCategory& x) {
    for (std::size_t b = 0; b < x.size(); ++b) {
        bool ok = true;
        for (std::size_t y = 0; y < x.size() && ok; ++y) ok = x(b, y).is_one();
        if (ok) return b;
    }
    return std::nullopt;
}

/// Conical supremum of two points: a(j,z) = a(p,z) ∧ a(r,z) for all z.
inline std::optional<std::size_t> conical_join(const VCategory& x, std::size_t p, std::size_t r) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        bool ok = true;
        for (std::size_t z = 0; z < x.size() && ok; ++z) ok = x(j, z) == meet(x(p, z), x(r, z));
        if (ok) return j;
    }
    return std::nullopt;
}

/// Least upper bound of p and r in the natural order, ignoring a(−,z).
inline std::optional<std::size_t> order_join(const VCategory& x, std::size_t p, std::size_t r) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!x(p, j).is_one() || !x(r, j).is_one()) continue;
        bool least = true;
        for (std::size_t k = 0; k < x.size() && least; ++k)
            if (x(p, k).is_one() && x(r, k).is_one()) least = x(j, k).is_one();
        if (least) return j;
    }
    return std::nullopt;
}

/// h: A → X with weight ψ: A ⇸ G given by its column ψ(z).
struct WeightedDiagram {
    VCategory shape;
    std::vector<std::size_t> arrows;
    std::vector<Value> weight;
};

inline VRelation weight_relation(const std::vector<Value>& psi) {
    VRelation r = VRelation::zero(psi.size(), 1);
    for (std::size_t z = 0; z < psi.size(); ++z) r(z, 0) = psi[z];
    return r;
}

inline bool is_valid_diagram(const VCategory& x, const WeightedDiagram& d) {
    return is_vfunctor(d.arrows, d.shape, x) && is_distributor(weight_relation(d.weight), d.shape, unit_category(x.q));
}

struct ColimitResult {
    std::optional<std::size_t> scan;    // element satisfying the defining equation
    std::optional<std::size_t> formula; // ⋁_z h(z) ⊗ ψ(z), when copowers and joins exist
    bool consistent = true;             // both present implies isomorphic
};

/// a(x0,x) = ⋀_z hom(ψ(z), a(h(z),x)) for all x, cross-checked against the sup formula.
inline ColimitResult weighted_colimit(const VCategory& x, const WeightedDiagram& d) {
    ColimitResult res;
    std::vector<Value> target(x.size(), Value::one());
    for (std::size_t p = 0; p < x.size(); ++p)
        for (std::size_t z = 0; z < d.weight.size(); ++z)
            target[p] = meet(target[p], x.q.hom(d.weight[z], x(d.arrows[z], p)));
    for (std::size_t c = 0; c < x.size() && !res.scan; ++c) {
        bool ok = true;
        for (std::size_t p = 0; p < x.size() && ok; ++p) ok = x(c, p) == target[p];
        if (ok) res.scan = c;
    }
    std::optional<std::size_t> acc = bottom(x);
    for (std::size_t z = 0; z < d.weight.size() && acc; ++z) {
        auto cp = copower(x, d.arrows[z], d.weight[z]);
        acc = cp ? conical_join(x, *acc, *cp) : std::nullopt;
    }
    res.formula = acc;
    if (res.scan && res.formula) res.consistent = isomorphic(x, *res.scan, *res.formula);
    return res;
}

struct FinSupAudit {
    bool has_bottom = false;
    bool has_binary_joins = false;
    bool joins_preserved_by_homming = false;
    bool has_all_copowers = false;
    Report report{"finitely-cocomplete"};

    bool ok() const { return has_bottom && has_binary_joins && joins_preserved_by_homming && has_all_copowers; }
};

/// Bottom, order joins preserved by every a(−,z), and copowers by every u ∈ Q_n.
inline FinSupAudit is_finitely_cocomplete(const VCategory& x, std::int64_t n) {
    FinSupAudit f;
    f.has_bottom = f.report.expect(bottom(x).has_value(), "bottom", "no element below everything");
    f.has_binary_joins = true;
    f.joins_preserved_by_homming = true;
    for (std::size_t p = 0; p < x.size(); ++p)
        for (std::size_t r = p; r < x.size(); ++r) {
            auto j = order_join(x, p, r);
            const std::string pair = "(" + x.label(p) + ", " + x.label(r) + ")";
            if (!f.report.expect(j.has_value(), "binary-join", pair)) {
                f.has_binary_joins = false;
                continue;
            }
            bool preserved = true;
            for (std::size_t z = 0; z < x.size() && preserved; ++z)
                preserved = x(*j, z) == meet(x(p, z), x(r, z));
            if (!f.report.expect(preserved, "join-preserved-by-a(-,z)", pair)) f.joins_preserved_by_homming = false;
        }
    f.has_all_copowers = true;
    for (const auto& u : grid_chain(n).elements)
        for (std::size_t p = 0; p < x.size(); ++p)
            if (!f.report.expect(copower(x, p, u).has_value(), "copower", x.label(p) + " ⊗ " + u.str()))
                f.has_all_copowers = false;
    return f;
}

/// Monotone (V-functor) and preserves ⊥, binary joins and grid copowers, up to isomorphism.
inline Report finsup_morphism_audit(const std::vector<std::size_t>& f, const VCategory& x, const VCategory& y,
                                    std::int64_t n) {
    Report r("finsup-morphism");
    if (!r.expect(is_vfunctor(f, x, y), "v-functor", "a(x,y) ≤ b(fx,fy) fails")) return r;
    auto bx = bottom(x);
    auto by = bottom(y);
    r.expect(bx && by && isomorphic(y, f[*bx], *by), "bottom", "f(⊥) ≠ ⊥");
    for (std::size_t p = 0; p < x.size(); ++p)
        for (std::size_t q = p; q < x.size(); ++q) {
            auto j = order_join(x, p, q);
            auto fj = order_join(y, f[p], f[q]);
            r.expect(j && fj && isomorphic(y, f[*j], *fj), "join", "(" + x.label(p) + ", " + x.label(q) + ")");
        }
    for (const auto& u : grid_chain(n).elements)
        for (std::size_t p = 0; p < x.size(); ++p) {
            auto c = copower(x, p, u);
            auto fc = copower(y, f[p], u);
            r.expect(c && fc && isomorphic(y, f[*c], *fc), "copower", x.label(p) + " ⊗ " + u.str());
        }
    return r;
}

inline bool is_finsup_morphism(const std::vector<std::size_t>& f, const VCategory& x, const VCategory& y,
                               std::int64_t n) {
    return finsup_morphism_audit(f, x, y, n).ok();
}

/// 1 ≤ ⋁_{z∈M} a(x,z) ⊗ a(z,x).
inline bool closure_membership(const VCategory& x, const Subset& m, std::size_t p) {
    Value acc = Value::zero();
    for (auto z : m.elements()) acc = join(acc, x.q.tensor(x(p, z), x(z, p)));
    return acc.is_one();
}

inline Subset closure(const VCategory& x, const Subset& m) {
    Subset out(x.size());
    for (std::size_t p = 0; p < x.size(); ++p)
        if (closure_membership(x, m, p)) out.set(p);
    return out;
}

/// The FinSup operations of a finitely cocomplete category, as index tables over Q_n.
struct FinSupOps {
    std::int64_t n = 1;
    std::size_t bottom = 0;
    std::vector<std::vector<std::size_t>> join;    // join[x][y]
    std::vector<std::vector<std::size_t>> copower; // copower[x][k] = x ⊗ k/n
};

inline std::optional<FinSupOps> finsup_ops(const VCategory& x, std::int64_t n) {
    auto b = bottom(x);
    if (!b) return std::nullopt;
    FinSupOps ops{n, *b, {}, {}};
    const auto g = grid_chain(n);
    ops.join.assign(x.size(), std::vector<std::size_t>(x.size()));
    ops.copower.assign(x.size(), std::vector<std::size_t>(g.elements.size()));
    for (std::size_t p = 0; p < x.size(); ++p) {
        for (std::size_t r = 0; r < x.size(); ++r) {
            auto j = conical_join(x, p, r);
            if (!j) return std::nullopt;
            ops.join[p][r] = *j;
        }
        for (std::size_t k = 0; k < g.elements.size(); ++k) {
            auto c = copower(x, p, g.elements[k]);
            if (!c) return std::nullopt;
            ops.copower[p][k] = *c;
        }
    }
    return ops;
}

/// The equations of FinSup as a quasivariety, on the operation tables, plus
/// monotonicity of x ⊗ − and the sup implication for grid subsets S with max S = v.
inline Report quasivariety_audit(const VCategory& x, const FinSupOps& ops) {
    Report r("quasivariety");
    const auto g = grid_chain(ops.n);
    const std::size_t m = x.size();
    const std::size_t top = g.elements.size() - 1;
    auto lbl = [&](std::size_t p) { return x.label(p); };
    auto le = [&](std::size_t p, std::size_t q) { return ops.join[p][q] == q; };
    r.expect(ops.copower[ops.bottom].size() == g.elements.size(), "shape", "copower table");
    for (std::size_t p = 0; p < m; ++p) {
        r.expect(ops.join[p][p] == p, "x∨x=x", lbl(p));
        r.expect(ops.join[p][ops.bottom] == p, "x∨⊥=x", lbl(p));
        r.expect(ops.copower[p][top] == p, "x⊗k=x", lbl(p));
        for (std::size_t q = 0; q < m; ++q) {
            r.expect(ops.join[p][q] == ops.join[q][p], "x∨y=y∨x", lbl(p) + "," + lbl(q));
            for (std::size_t s = 0; s < m; ++s)
                r.expect(ops.join[p][ops.join[q][s]] == ops.join[ops.join[p][q]][s], "x∨(y∨z)=(x∨y)∨z",
                         lbl(p) + "," + lbl(q) + "," + lbl(s));
            for (std::size_t k = 0; k <= top; ++k)
                r.expect(ops.copower[ops.join[p][q]][k] == ops.join[ops.copower[p][k]][ops.copower[q][k]],
                         "(x∨y)⊗u=(x⊗u)∨(y⊗u)", lbl(p) + "," + lbl(q) + "," + g.elements[k].str());
        }
        for (std::size_t k = 0; k <= top; ++k) {
            for (std::size_t l = 0; l <= top; ++l) {
                const Value uv = x.q.tensor(g.elements[k], g.elements[l]);
                const auto kl = static_cast<std::size_t>(uv.grid_level(ops.n));
                r.expect(ops.copower[ops.copower[p][k]][l] == ops.copower[p][kl], "(x⊗u)⊗v=x⊗(u⊗v)",
                         lbl(p) + "," + g.elements[k].str() + "," + g.elements[l].str());
            }
            // S = {u ≤ v}: monotone parts, then the implication for every y.
            for (std::size_t l = 0; l <= k; ++l)
                r.expect(le(ops.copower[p][l], ops.copower[p][k]), "x⊗u≤x⊗v",
                         lbl(p) + "," + g.elements[l].str() + "," + g.elements[k].str());
            for (std::size_t y = 0; y < m; ++y) {
                bool premise = true;
                for (std::size_t l = 0; l <= k && premise; ++l) premise = le(ops.copower[p][l], y);
                if (premise)
                    r.expect(le(ops.copower[p][k], y), "sup-implication",
                             lbl(p) + "," + g.elements[k].str() + "," + lbl(y));
            }
        }
    }
    for (std::size_t k = 0; k <= top; ++k)
        r.expect(ops.copower[ops.bottom][k] == ops.bottom, "⊥⊗u=⊥", g.elements[k].str());
    return r;
}

/// Every diagram (inclusion of a full subcategory A with |A| ≤ max_shape,
/// weight ψ on Q_n) whose weight has a left adjoint in Q_n has a colimit.
inline Report is_cauchy_complete_desk(const VCategory& x, std::size_t max_shape, std::int64_t n) {
    Report r("cauchy-complete");
    std::size_t diagrams = 0;
    const std::size_t m = x.size();
    std::vector<std::size_t> members;
    auto visit = [&]() {
        WeightedDiagram d;
        d.arrows = members;
        d.shape.q = x.q;
        d.shape.a.assign(members.size(), std::vector<Value>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j) d.shape.a[i][j] = x(members[i], members[j]);
        const VCategory g = unit_category(x.q);
        for (const auto& psi : grid_distributors(d.shape, g, n)) {
            std::vector<Value> weight(members.size());
            for (std::size_t z = 0; z < members.size(); ++z) weight[z] = psi(z, 0);
            bool adjoint = false;
            for (const auto& phi : grid_distributors(g, d.shape, n))
                if (check_adjoint(phi, psi, d.shape)) {
                    adjoint = true;
                    break;
                }
            if (!adjoint) continue;
            ++diagrams;
            d.weight = weight;
            std::string sub = "{";
            for (std::size_t i = 0; i < members.size(); ++i) sub += (i ? "," : "") + x.label(members[i]);
            r.expect(weighted_colimit(x, d).scan.has_value(), "colimit", sub + "} weight " + table_str(weight));
        }
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        visit();
        if (members.size() == max_shape) return;
        for (std::size_t p = start; p < m; ++p) {
            members.push_back(p);
            self(self, p + 1);
            members.pop_back();
        }
    };
    rec(rec, 0);
    r.set_stat("adjoint_weights", std::to_string(diagrams));
    return r;
}

} // namespace qcat
