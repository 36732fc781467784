#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "subset.hpp"

namespace qcat {

/// A finite partially ordered set on {0..size-1}.
class FinPoset {
public:
    FinPoset() = default;

    /// Validates reflexivity, antisymmetry and transitivity of `leq`.
    static FinPoset from_matrix(const std::vector<std::vector<bool>>& leq) {
        const std::size_t n = leq.size();
        for (const auto& row : leq)
            if (row.size() != n) throw InputError(ErrorCode::ShapeMismatch, "order matrix is not square");
        for (std::size_t x = 0; x < n; ++x) {
            if (!leq[x][x]) throw InputError(ErrorCode::NotAPoset, "not reflexive at " + std::to_string(x));
            for (std::size_t y = 0; y < n; ++y) {
                if (x != y && leq[x][y] && leq[y][x])
                    throw InputError(ErrorCode::NotAPoset, "not antisymmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
                for (std::size_t z = 0; z < n; ++z)
                    if (leq[x][y] && leq[y][z] && !leq[x][z])
                        throw InputError(ErrorCode::NotAPoset, "not transitive at (" + std::to_string(x) + "," +
                                                                   std::to_string(y) + "," + std::to_string(z) + ")");
            }
        }
        return unchecked(leq);
    }

    /// Caller guarantees the order axioms.
    static FinPoset unchecked(const std::vector<std::vector<bool>>& leq) {
        FinPoset p;
        const std::size_t n = leq.size();
        p.up_.assign(n, Subset(n));
        p.down_.assign(n, Subset(n));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (leq[x][y]) {
                    p.up_[x].set(y);
                    p.down_[y].set(x);
                }
        return p;
    }

    static FinPoset antichain(std::size_t n) {
        std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
        return unchecked(m);
    }

    /// 0 < 1 < ... < n-1.
    static FinPoset chain(std::size_t n) {
        std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m[i][j] = true;
        return unchecked(m);
    }

    std::size_t size() const { return up_.size(); }
    bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
    const Subset& up(std::size_t x) const { return up_[x]; }
    const Subset& down(std::size_t x) const { return down_[x]; }

    std::vector<std::vector<bool>> matrix() const {
        std::vector<std::vector<bool>> m(size(), std::vector<bool>(size(), false));
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = 0; y < size(); ++y) m[x][y] = leq(x, y);
        return m;
    }

    friend bool operator==(const FinPoset& a, const FinPoset& b) { return a.up_ == b.up_; }

private:
    std::vector<Subset> up_;
    std::vector<Subset> down_;
};

inline Subset up_closure(const FinPoset& p, const Subset& s) {
    Subset out(p.size());
    for (auto x : s.elements()) out |= p.up(x);
    return out;
}

inline Subset down_closure(const FinPoset& p, const Subset& s) {
    Subset out(p.size());
    for (auto x : s.elements()) out |= p.down(x);
    return out;
}

inline bool is_upper(const FinPoset& p, const Subset& s) { return up_closure(p, s) == s; }
inline bool is_lower(const FinPoset& p, const Subset& s) { return down_closure(p, s) == s; }

/// All upper sets, sorted ascending by bitset value.
inline std::vector<Subset> upper_sets(const FinPoset& p) {
    const std::size_t n = p.size();
    std::vector<Subset> out;
    Subset in(n), out_set(n);
    // Elements are decided in index order; including x forces ↑x in, excluding forces ↓x out.
    auto rec = [&](auto&& self, std::size_t i) -> void {
        while (i < n && (in.test(i) || out_set.test(i))) ++i;
        if (i == n) {
            out.push_back(in);
            return;
        }
        if (!p.up(i).intersects(out_set)) {
            Subset saved = in;
            in |= p.up(i);
            self(self, i + 1);
            in = saved;
        }
        if (!p.down(i).intersects(in)) {
            Subset saved = out_set;
            out_set |= p.down(i);
            self(self, i + 1);
            out_set = saved;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Subset> lower_sets(const FinPoset& p) {
    std::vector<Subset> out;
    for (const auto& u : upper_sets(p)) {
        Subset c(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!u.test(i)) c.set(i);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All labeled posets on n elements.
///
/// Posets on k+1 points extend posets on k points: the new point k gets a
/// down-set D and an up-set U of the old points, disjoint, with D below U.
/// Every labeled poset arises exactly once. Counts: 1, 1, 3, 19, 219, 4231.
inline std::vector<FinPoset> enumerate_posets(std::size_t n) {
    std::vector<FinPoset> level{FinPoset::antichain(0)};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<FinPoset> next;
        for (const auto& p : level) {
            const auto downs = lower_sets(p);
            const auto ups = upper_sets(p);
            for (const auto& d : downs) {
                for (const auto& u : ups) {
                    if (d.intersects(u)) continue;
                    bool below = true;
                    for (auto x : d.elements())
                        if (!u.subset_of(p.up(x))) {
                            below = false;
                            break;
                        }
                    if (!below) continue;
                    auto m = p.matrix();
                    for (auto& row : m) row.push_back(false);
                    m.emplace_back(k + 1, false);
                    m[k][k] = true;
                    for (auto x : d.elements()) m[x][k] = true;
                    for (auto y : u.elements()) m[k][y] = true;
                    next.push_back(FinPoset::unchecked(m));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

/// Irreducible: empty or principal ↑x.
inline bool is_irreducible(const FinPoset& p, const Subset& a) {
    if (a.none()) return true;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (a.test(x) && p.up(x) == a) return true;
    return false;
}

/// The decomposition form: A = A1 ∪ A2 with A1, A2 upper forces A = A1 or A = A2.
inline bool is_irreducible_by_decomposition(const FinPoset& p, const Subset& a) {
    const auto ups = upper_sets(p);
    for (const auto& a1 : ups) {
        if (!a1.subset_of(a) || a1 == a) continue;
        for (const auto& a2 : ups) {
            if (!a2.subset_of(a) || a2 == a) continue;
            if ((a1 | a2) == a) return false;
        }
    }
    return true;
}

} // namespace qcat
