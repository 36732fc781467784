#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "quantale.hpp"
#include "vcat.hpp"

namespace qcat {

/// A [0,1]-relation X ⇸ Y stored as a |X|×|Y| matrix.
struct VRelation {
    std::size_t src = 0;
    std::size_t dst = 0;
    ValueMatrix m;

    static VRelation zero(std::size_t src, std::size_t dst) {
        return {src, dst, ValueMatrix(src, std::vector<Value>(dst, Value::zero()))};
    }
    static VRelation from(const ValueMatrix& m, std::size_t dst) {
        for (const auto& row : m)
            if (row.size() != dst) throw InputError(ErrorCode::ShapeMismatch, "relation rows differ in length");
        return {m.size(), dst, m};
    }

    const Value& operator()(std::size_t x, std::size_t y) const { return m[x][y]; }
    Value& operator()(std::size_t x, std::size_t y) { return m[x][y]; }

    friend bool operator==(const VRelation&, const VRelation&) = default;
};

/// (s·r)(x,z) = ⋁_y r(x,y) ⊗ s(y,z); 0 when Y is empty.
inline VRelation compose(const Quantale& q, const VRelation& s, const VRelation& r) {
    if (r.dst != s.src) throw InputError(ErrorCode::ShapeMismatch, "compose: middle objects differ");
    VRelation out = VRelation::zero(r.src, s.dst);
    for (std::size_t x = 0; x < r.src; ++x)
        for (std::size_t z = 0; z < s.dst; ++z) {
            Value acc = Value::zero();
            for (std::size_t y = 0; y < r.dst; ++y) acc = join(acc, q.tensor(r(x, y), s(y, z)));
            out(x, z) = acc;
        }
    return out;
}

/// Pointwise r ≤ s.
inline bool leq(const VRelation& r, const VRelation& s) {
    if (r.src != s.src || r.dst != s.dst) return false;
    for (std::size_t x = 0; x < r.src; ++x)
        for (std::size_t y = 0; y < r.dst; ++y)
            if (!(r(x, y) <= s(x, y))) return false;
    return true;
}

/// The structure a as a relation X ⇸ X.
inline VRelation identity_distributor(const VCategory& x) { return {x.size(), x.size(), x.a}; }

/// r·a = r and b·r = r. The reverse inequalities hold for any r, so equality is what is tested.
inline bool is_distributor(const VRelation& r, const VCategory& x, const VCategory& y) {
    if (r.src != x.size() || r.dst != y.size()) return false;
    return compose(x.q, r, identity_distributor(x)) == r && compose(x.q, identity_distributor(y), r) == r;
}

/// The unit relation G ⇸ G with entry 1.
inline VRelation unit_relation() { return {1, 1, {{Value::one()}}}; }

/// φ: G ⇸ A is left adjoint to ψ: A ⇸ G iff 1 ≤ ψ·φ and φ·ψ ≤ a.
inline bool check_adjoint(const VRelation& phi, const VRelation& psi, const VCategory& a) {
    if (phi.src != 1 || phi.dst != a.size() || psi.src != a.size() || psi.dst != 1)
        throw InputError(ErrorCode::ShapeMismatch, "check_adjoint expects G ⇸ A and A ⇸ G");
    const VRelation unit = compose(a.q, psi, phi);
    if (!unit(0, 0).is_one()) return false;
    return leq(compose(a.q, phi, psi), identity_distributor(a));
}

/// φ = a(x0,−) and ψ = a(−,x0), the adjoint pair represented by x0.
inline std::pair<VRelation, VRelation> representable_pair(const VCategory& a, std::size_t x0) {
    VRelation phi = VRelation::zero(1, a.size());
    VRelation psi = VRelation::zero(a.size(), 1);
    for (std::size_t y = 0; y < a.size(); ++y) {
        phi(0, y) = a(x0, y);
        psi(y, 0) = a(y, x0);
    }
    return {phi, psi};
}

/// Every |X|×|Y| matrix over Q_n that is a distributor, row-major lexicographic.
inline std::vector<VRelation> grid_distributors(const VCategory& x, const VCategory& y, std::int64_t n) {
    std::vector<VRelation> out;
    const auto g = grid_chain(n);
    VRelation cur = VRelation::zero(x.size(), y.size());
    const std::size_t cells = x.size() * y.size();
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == cells) {
            if (is_distributor(cur, x, y)) out.push_back(cur);
            return;
        }
        for (const auto& v : g.elements) {
            cur(c / y.size(), c % y.size()) = v;
            self(self, c + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline std::string relation_str(const VRelation& r) {
    std::string out = "[";
    for (std::size_t x = 0; x < r.src; ++x) {
        if (x) out += ";";
        out += table_str(r.m[x]);
    }
    return out + "]";
}

} // namespace qcat
