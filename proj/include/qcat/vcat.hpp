#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "poset.hpp"
#include "quantale.hpp"
#include "report.hpp"
#include "value.hpp"

/**
 * @file vcat.hpp
 *
 * Finite [0,1]-categories: a carrier {0..m-1} with a structure matrix a
 * such that a(x,x) = 1 and a(x,y) ⊗ a(y,z) ≤ a(x,z).
 */

namespace qcat {

using ValueMatrix = std::vector<std::vector<Value>>;

struct VCategory {
    Quantale q;
    ValueMatrix a;
    std::vector<std::string> labels; // optional, one per point

    std::size_t size() const { return a.size(); }
    const Value& operator()(std::size_t x, std::size_t y) const { return a[x][y]; }

    std::string label(std::size_t x) const { return x < labels.size() ? labels[x] : std::to_string(x); }
};

inline void require_square(const ValueMatrix& m, const char* what) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw InputError(ErrorCode::ShapeMismatch, std::string(what) + " is not square");
}

/// Reflexivity and the triangle inequality, with the first violations as witnesses.
inline Report validate_vcategory(const VCategory& x) {
    require_square(x.a, "structure matrix");
    Report r("vcategory");
    const std::size_t m = x.size();
    for (std::size_t i = 0; i < m; ++i)
        r.expect(x(i, i).is_one(), "reflexivity", "(" + x.label(i) + ")");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                r.expect(x.q.tensor(x(i, j), x(j, k)) <= x(i, k), "transitivity",
                         "(" + x.label(i) + ", " + x.label(j) + ", " + x.label(k) + ")");
    return r;
}

inline bool is_valid(const VCategory& x) { return validate_vcategory(x).ok(); }

/// a(x,y) ≤ b(f(x), f(y)) for all x, y.
inline bool is_vfunctor(const std::vector<std::size_t>& f, const VCategory& x, const VCategory& y) {
    if (f.size() != x.size()) return false;
    for (auto fx : f)
        if (fx >= y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!(x(i, j) <= y(f[i], f[j]))) return false;
    return true;
}

/// x ≤ y iff a(x,y) = 1.
inline std::vector<std::vector<bool>> natural_order(const VCategory& x) {
    std::vector<std::vector<bool>> leq(x.size(), std::vector<bool>(x.size(), false));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) leq[i][j] = x(i, j).is_one();
    return leq;
}

inline bool is_separated(const VCategory& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x(i, j).is_one() && x(j, i).is_one()) return false;
    return true;
}

inline VCategory dual(const VCategory& x) {
    VCategory d{x.q, ValueMatrix(x.size(), std::vector<Value>(x.size())), x.labels};
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) d.a[i][j] = x(j, i);
    return d;
}

inline VCategory from_poset(const FinPoset& p, const Quantale& q = {}) {
    VCategory x{q, ValueMatrix(p.size(), std::vector<Value>(p.size())), {}};
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) x.a[i][j] = p.leq(i, j) ? Value::one() : Value::zero();
    return x;
}

/// True iff every entry is 0 or 1.
inline bool is_two_valued(const VCategory& x) {
    for (const auto& row : x.a)
        for (const auto& v : row)
            if (!v.is_zero() && !v.is_one()) return false;
    return true;
}

/// The poset a two-valued separated category comes from.
inline std::optional<FinPoset> underlying_poset(const VCategory& x) {
    if (!is_two_valued(x) || !is_separated(x)) return std::nullopt;
    return FinPoset::unchecked(natural_order(x));
}

/// G = (1, k).
inline VCategory unit_category(const Quantale& q = {}) { return {q, {{Value::one()}}, {"*"}}; }

/// Q_n with a(u,v) = hom(u,v).
inline VCategory grid_chain_category(const Quantale& q, std::int64_t n) {
    const auto g = grid_chain(n);
    VCategory x{q, ValueMatrix(g.elements.size(), std::vector<Value>(g.elements.size())), {}};
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        x.labels.push_back(g.elements[i].str());
        for (std::size_t j = 0; j < g.elements.size(); ++j) x.a[i][j] = q.hom(g.elements[i], g.elements[j]);
    }
    return x;
}

inline std::string table_str(const std::vector<Value>& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += t[i].str();
    }
    return out + ")";
}

/// [h,l] = min_s hom(h(s), l(s)); 1 on the empty set.
inline Value power_hom(const Quantale& q, const std::vector<Value>& h, const std::vector<Value>& l) {
    Value out = Value::one();
    for (std::size_t s = 0; s < h.size(); ++s) out = meet(out, q.hom(h[s], l[s]));
    return out;
}

/// Every map {0..k-1} → Q_n, lexicographic with coordinate 0 most significant.
inline std::vector<std::vector<Value>> grid_tables(std::size_t k, std::int64_t n) {
    const auto g = grid_chain(n);
    std::vector<std::vector<Value>> out;
    std::vector<Value> cur(k, Value::zero());
    auto rec = [&](auto&& self, std::size_t s) -> void {
        if (s == k) {
            out.push_back(cur);
            return;
        }
        for (const auto& v : g.elements) {
            cur[s] = v;
            self(self, s + 1);
        }
    };
    rec(rec, 0);
    return out;
}

struct PowerSpace {
    VCategory cat;
    std::vector<std::vector<Value>> tables; // point i of cat is tables[i]
};

/// Q_n^S with the structure [h,l].
inline PowerSpace power_space(const Quantale& q, std::size_t s, std::int64_t n) {
    require_grid_closed(q, n);
    PowerSpace ps{{q, {}, {}}, grid_tables(s, n)};
    const std::size_t m = ps.tables.size();
    ps.cat.a.assign(m, std::vector<Value>(m));
    for (std::size_t i = 0; i < m; ++i) {
        ps.cat.labels.push_back(table_str(ps.tables[i]));
        for (std::size_t j = 0; j < m; ++j) ps.cat.a[i][j] = power_hom(q, ps.tables[i], ps.tables[j]);
    }
    return ps;
}

/// True iff every entry lies on Q_n.
inline bool on_grid(const VCategory& x, std::int64_t n) {
    for (const auto& row : x.a)
        for (const auto& v : row)
            if (!v.on_grid(n)) return false;
    return true;
}

} // namespace qcat
