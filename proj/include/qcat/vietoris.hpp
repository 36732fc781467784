#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "poset.hpp"
#include "report.hpp"
#include "subset.hpp"

/**
 * @file vietoris.hpp
 *
 * The Vietoris monad on finite posets. A finite poset is a discrete
 * partially ordered compact space, so its closed upper sets are just its
 * upper sets. VP orders them by reverse inclusion; the unit sends x to ↑x
 * and the multiplication takes unions.
 */

namespace qcat {

struct VietorisSpace {
    FinPoset order;              // A ≤ B iff A ⊇ B
    std::vector<Subset> elements; // upper sets, ascending by bitset
    std::unordered_map<Subset, std::size_t> index;

    std::size_t size() const { return elements.size(); }

    std::optional<std::size_t> find(const Subset& s) const {
        auto it = index.find(s);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(const Subset& s) const {
        auto i = find(s);
        if (!i) throw InputError(ErrorCode::NotMonotone, s.str() + " is not an upper set");
        return *i;
    }
};

inline VietorisSpace vietoris(const FinPoset& p) {
    VietorisSpace v;
    v.elements = upper_sets(p);
    const std::size_t m = v.elements.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        v.index.emplace(v.elements[i], i);
        for (std::size_t j = 0; j < m; ++j) leq[i][j] = v.elements[j].subset_of(v.elements[i]);
    }
    v.order = FinPoset::unchecked(leq);
    return v;
}

using PosetMap = std::vector<std::size_t>;

inline bool is_monotone(const FinPoset& p, const FinPoset& r, const PosetMap& f) {
    if (f.size() != p.size()) return false;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (f[x] >= r.size()) return false;
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && !r.leq(f[x], f[y])) return false;
    }
    return true;
}

/// Vf(A) = ↑f[A].
inline Subset vietoris_image(const FinPoset& r, const PosetMap& f, const Subset& a) {
    Subset img(r.size());
    for (auto x : a.elements()) img.set(f[x]);
    return up_closure(r, img);
}

/// Vf as a map VP → VR on indices. Throws when f is not monotone.
inline PosetMap vietoris_map(const FinPoset& p, const FinPoset& r, const PosetMap& f, const VietorisSpace& vp,
                             const VietorisSpace& vr) {
    if (!is_monotone(p, r, f)) throw InputError(ErrorCode::NotMonotone, "vietoris_map needs a monotone map");
    PosetMap out(vp.size());
    for (std::size_t i = 0; i < vp.size(); ++i) out[i] = vr.index_of(vietoris_image(r, f, vp.elements[i]));
    return out;
}

/// e_P(x) = ↑x, as indices into VP.
inline PosetMap unit_map(const FinPoset& p, const VietorisSpace& vp) {
    PosetMap out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) out[x] = vp.index_of(p.up(x));
    return out;
}

/// m_P(𝒜) = ⋃𝒜 where 𝒜 is a set of indices into VP.
inline Subset mult_at(const VietorisSpace& vp, const Subset& family) {
    Subset out(vp.elements.empty() ? 0 : vp.elements.front().universe());
    for (auto i : family.elements()) out |= vp.elements[i];
    return out;
}

/// m_P as a map VVP → VP on indices.
inline PosetMap mult_map(const VietorisSpace& vp, const VietorisSpace& vvp) {
    PosetMap out(vvp.size());
    for (std::size_t i = 0; i < vvp.size(); ++i) out[i] = vp.index_of(mult_at(vp, vvp.elements[i]));
    return out;
}

struct MonadLawCounts {
    std::size_t vp = 0;
    std::size_t vvp = 0;
    std::size_t vvvp_checked = 0;
};

/**
 * Checks m·eV = id = m·Ve on all of VP and m·mV = m·Vm on the elements of
 * VVVP that are reached: principal ↑𝔄, Ve(𝔄), and binary unions of principal
 * ones, for every 𝔄 in VVP. Both sides of associativity preserve unions, and
 * every upper set of VVP is a union of principal ones, so this family
 * determines both composites.
 *
 * `mult` computes ⋃𝒜 for a family of indices into a Vietoris space; replace
 * it to run negative controls.
 */
template <class Mult>
Report verify_monad_laws(const FinPoset& p, Mult&& mult, MonadLawCounts* counts = nullptr) {
    Report r("monad-laws");
    const VietorisSpace vp = vietoris(p);
    const VietorisSpace vvp = vietoris(vp.order);
    const std::size_t base = p.size();
    const std::size_t base_vp = vp.size();
    // Upper sets of VP are families of VP indices; their union is a subset of the base.
    auto m_p = [&](const Subset& family) {
        Subset s = mult(vp, family);
        return s.universe() == base ? s : Subset(base);
    };
    auto m_vp = [&](const Subset& family) {
        Subset s = mult(vvp, family);
        return s.universe() == base_vp ? s : Subset(base_vp);
    };

    for (std::size_t i = 0; i < vp.size(); ++i) {
        const Subset& a = vp.elements[i];
        const Subset e_vp = vp.order.up(i); // e_VP(A) = {B : B ⊆ A}
        r.expect(m_p(e_vp) == a, "left-unit", "A=" + a.str());
        Subset ve(base_vp);
        for (auto x : a.elements()) ve.set(vp.index_of(p.up(x)));
        ve = up_closure(vp.order, ve);
        r.expect(m_p(ve) == a, "right-unit", "A=" + a.str());
    }

    auto assoc = [&](const Subset& top, const std::string& tag) {
        const Subset lhs = m_p(m_vp(top));
        Subset images(base_vp);
        for (auto i : top.elements()) {
            auto idx = vp.find(m_p(vvp.elements[i]));
            if (!idx) {
                r.fail("associativity", tag + ": m(" + vvp.elements[i].str() + ") is not an upper set");
                return;
            }
            images.set(*idx);
        }
        const Subset rhs = m_p(up_closure(vp.order, images));
        r.expect(lhs == rhs, "associativity", tag + " lhs=" + lhs.str() + " rhs=" + rhs.str());
    };

    std::size_t reached = 0;
    for (std::size_t i = 0; i < vvp.size(); ++i) {
        assoc(vvp.order.up(i), "principal " + vvp.elements[i].str());
        Subset ve(vvp.size());
        for (auto b : vvp.elements[i].elements()) ve.set(vvp.index_of(vp.order.up(b)));
        assoc(up_closure(vvp.order, ve), "Ve " + vvp.elements[i].str());
        reached += 2;
    }
    for (std::size_t i = 0; i < vvp.size(); ++i)
        for (std::size_t j = i + 1; j < vvp.size(); ++j) {
            assoc(vvp.order.up(i) | vvp.order.up(j), "union " + std::to_string(i) + "," + std::to_string(j));
            ++reached;
        }

    r.set_stat("VP", std::to_string(vp.size()));
    r.set_stat("VVP", std::to_string(vvp.size()));
    r.set_stat("VVVP_checked", std::to_string(reached));
    if (counts) *counts = {vp.size(), vvp.size(), reached};
    return r;
}

inline Report verify_monad_laws(const FinPoset& p, MonadLawCounts* counts = nullptr) {
    return verify_monad_laws(p, [](const VietorisSpace& v, const Subset& f) { return mult_at(v, f); }, counts);
}

/// V(g∘f) = Vg∘Vf, V(id) = id, and naturality of e and m along f.
inline Report verify_functoriality(const FinPoset& p, const FinPoset& r, const FinPoset& s, const PosetMap& f,
                                   const PosetMap& g) {
    Report rep("vietoris-functor");
    const auto vp = vietoris(p), vr = vietoris(r), vs = vietoris(s);
    PosetMap id_p(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) id_p[i] = i;
    const auto vid = vietoris_map(p, p, id_p, vp, vp);
    for (std::size_t i = 0; i < vp.size(); ++i) rep.expect(vid[i] == i, "identity", vp.elements[i].str());

    PosetMap gf(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) gf[i] = g[f[i]];
    const auto vf = vietoris_map(p, r, f, vp, vr);
    const auto vg = vietoris_map(r, s, g, vr, vs);
    const auto vgf = vietoris_map(p, s, gf, vp, vs);
    for (std::size_t i = 0; i < vp.size(); ++i) rep.expect(vgf[i] == vg[vf[i]], "composition", vp.elements[i].str());

    // e_R·f = Vf·e_P
    const auto ep = unit_map(p, vp);
    const auto er = unit_map(r, vr);
    for (std::size_t x = 0; x < p.size(); ++x) rep.expect(er[f[x]] == vf[ep[x]], "unit-naturality", std::to_string(x));

    // m_R·VVf = Vf·m_P
    const auto vvp = vietoris(vp.order);
    const auto vvr = vietoris(vr.order);
    const auto vvf = vietoris_map(vp.order, vr.order, vf, vvp, vvr);
    const auto mp = mult_map(vp, vvp);
    const auto mr = mult_map(vr, vvr);
    for (std::size_t i = 0; i < vvp.size(); ++i)
        rep.expect(mr[vvf[i]] == vf[mp[i]], "mult-naturality", vvp.elements[i].str());
    return rep;
}

/// A 0/1 distributor X ⇸ Y: rows[x] = {y : x φ y}, down-closed in x and up-closed in y.
struct KleisliMorphism {
    std::vector<Subset> rows;
    std::size_t target = 0;

    friend bool operator==(const KleisliMorphism&, const KleisliMorphism&) = default;
};

inline bool is_kleisli_morphism(const FinPoset& x, const FinPoset& y, const KleisliMorphism& phi) {
    if (phi.rows.size() != x.size() || phi.target != y.size()) return false;
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (phi.rows[a].universe() != y.size() || !is_upper(y, phi.rows[a])) return false;
        for (std::size_t b = 0; b < x.size(); ++b)
            if (x.leq(a, b) && !phi.rows[b].subset_of(phi.rows[a])) return false;
    }
    return true;
}

/// The order relation, which is the identity of the Kleisli category.
inline KleisliMorphism kleisli_identity(const FinPoset& p) {
    KleisliMorphism id{{}, p.size()};
    for (std::size_t x = 0; x < p.size(); ++x) id.rows.push_back(p.up(x));
    return id;
}

/// x φ y iff f(x) ≤ y.
inline KleisliMorphism graph_of(const FinPoset& y, const PosetMap& f) {
    KleisliMorphism g{{}, y.size()};
    for (auto fx : f) g.rows.push_back(y.up(fx));
    return g;
}

/// Relational composite: x (ψ·φ) z iff x φ y and y ψ z for some y.
inline KleisliMorphism kleisli_compose(const KleisliMorphism& psi, const KleisliMorphism& phi) {
    if (!phi.rows.empty() && phi.target != psi.rows.size())
        throw InputError(ErrorCode::ShapeMismatch, "kleisli_compose: middle objects differ");
    KleisliMorphism out{{}, psi.target};
    for (const auto& row : phi.rows) {
        Subset acc(psi.target);
        for (auto y : row.elements()) acc |= psi.rows[y];
        out.rows.push_back(acc);
    }
    return out;
}

/// Every 0/1 matrix X ⇸ Y that is a distributor, in ascending row-major bit order.
inline std::vector<KleisliMorphism> all_kleisli_morphisms(const FinPoset& x, const FinPoset& y) {
    const auto ups = upper_sets(y);
    std::vector<KleisliMorphism> out;
    KleisliMorphism cur{std::vector<Subset>(x.size(), Subset(y.size())), y.size()};
    auto rec = [&](auto&& self, std::size_t a) -> void {
        if (a == x.size()) {
            if (is_kleisli_morphism(x, y, cur)) out.push_back(cur);
            return;
        }
        for (const auto& u : ups) {
            cur.rows[a] = u;
            self(self, a + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace qcat
