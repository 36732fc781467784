#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "quantale.hpp"
#include "vcat.hpp"

/**
 * @file function_space.hpp
 *
 * CX over the grid Q_n: all maps ψ: X → Q_n with a(x,y) ≤ hom(ψ(y), ψ(x)),
 * i.e. the V-functors X → [0,1]^op. For a poset these are the antitone maps.
 *
 * Values are stored as grid levels k (meaning k/n). Members are enumerated
 * in lexicographic order of their level tuples, point 0 most significant,
 * and every pointwise operation is precomputed as an index table. A table
 * entry of -1 means the pointwise result is not a member.
 */

namespace qcat {

using Level = int;

class FunctionSpace {
public:
    /// Caps the candidate count (n+1)^|X| scanned during construction.
    static constexpr std::uint64_t candidate_cap = std::uint64_t{1} << 22;

    FunctionSpace() = default;

    /// Members of CX for the category x. Throws when Q_n is not closed.
    static FunctionSpace build(const VCategory& x, std::int64_t n) {
        require_grid_closed(x.q, n);
        FunctionSpace s;
        s.base_ = x;
        s.n_ = static_cast<Level>(n);
        const auto pts = x.size();
        const auto base = static_cast<std::uint64_t>(n + 1);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < pts; ++i) {
            total *= base;
            if (total > candidate_cap) throw InputError(ErrorCode::CapExceeded, "function space too large");
        }
        s.levels_.resize(static_cast<std::size_t>(n + 1));
        for (Level k = 0; k <= n; ++k) s.levels_[k] = Value::grid(k, n);
        const std::size_t L = s.levels_.size();
        s.lt_.assign(L, std::vector<Level>(L));
        s.lh_.assign(L, std::vector<Level>(L));
        s.lm_.assign(L, std::vector<Level>(L));
        for (std::size_t k = 0; k < L; ++k)
            for (std::size_t l = 0; l < L; ++l) {
                s.lt_[k][l] = static_cast<Level>(x.q.tensor(s.levels_[k], s.levels_[l]).grid_level(n));
                s.lh_[k][l] = static_cast<Level>(x.q.hom(s.levels_[k], s.levels_[l]).grid_level(n));
                s.lm_[k][l] = static_cast<Level>(truncated_minus(s.levels_[k], s.levels_[l]).grid_level(n));
            }
        // a(x,y) ≤ hom(ψy, ψx), tabulated on levels.
        std::vector<std::vector<std::vector<bool>>> allowed(pts, std::vector<std::vector<bool>>(pts));
        for (std::size_t p = 0; p < pts; ++p)
            for (std::size_t r = 0; r < pts; ++r) {
                allowed[p][r].assign(L * L, false);
                for (std::size_t k = 0; k < L; ++k)
                    for (std::size_t l = 0; l < L; ++l) allowed[p][r][k * L + l] = x(p, r) <= s.levels_[s.lh_[l][k]];
            }
        s.code_index_.assign(total, -1);
        std::vector<Level> cur(pts, 0);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = pts; i-- > 0;) {
                cur[i] = static_cast<Level>(c % base);
                c /= base;
            }
            bool ok = true;
            for (std::size_t p = 0; p < pts && ok; ++p)
                for (std::size_t r = 0; r < pts && ok; ++r) ok = allowed[p][r][cur[p] * L + cur[r]];
            if (!ok) continue;
            s.code_index_[code] = static_cast<int>(s.tables_.size());
            s.tables_.push_back(cur);
        }
        s.build_tables();
        return s;
    }

    const VCategory& base() const { return base_; }
    const Quantale& q() const { return base_.q; }
    std::int64_t n() const { return n_; }
    std::size_t size() const { return tables_.size(); }
    std::size_t points() const { return base_.size(); }

    const std::vector<Level>& table(std::size_t i) const { return tables_[i]; }
    Level level(std::size_t i, std::size_t x) const { return tables_[i][x]; }
    Value value(std::size_t i, std::size_t x) const { return levels_[tables_[i][x]]; }
    const Value& level_value(Level k) const { return levels_[k]; }

    /// Level arithmetic on Q_n.
    Level lt(Level k, Level l) const { return lt_[k][l]; }
    Level lh(Level k, Level l) const { return lh_[k][l]; }
    Level lm(Level k, Level l) const { return lm_[k][l]; }

    std::optional<std::size_t> find(const std::vector<Level>& t) const {
        if (t.size() != points()) return std::nullopt;
        std::uint64_t code = 0;
        for (auto k : t) {
            if (k < 0 || k > n_) return std::nullopt;
            code = code * static_cast<std::uint64_t>(n_ + 1) + static_cast<std::uint64_t>(k);
        }
        const int i = code_index_[code];
        if (i < 0) return std::nullopt;
        return static_cast<std::size_t>(i);
    }

    int join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
    int tensor(std::size_t i, std::size_t j) const { return tensor_[i * size() + j]; }
    int act(Level k, std::size_t i) const { return act_[k][i]; }   // k/n ⊗ ψ
    int minus(std::size_t i, Level k) const { return minus_[k][i]; } // ψ ⊖ k/n
    int power(Level k, std::size_t i) const { return power_[k][i]; } // hom(k/n, ψ)
    std::size_t constant(Level k) const { return constant_[k]; }
    /// Pointwise ψi ≤ ψj.
    bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j]; }

    /// d(ψ1,ψ2) = min_x hom(ψ1(x), ψ2(x)), as a level.
    Level distance(std::size_t i, std::size_t j) const {
        Level out = n_;
        for (std::size_t x = 0; x < points(); ++x) out = std::min(out, lh_[tables_[i][x]][tables_[j][x]]);
        return out;
    }

    std::string str(std::size_t i) const {
        std::vector<Value> vs;
        for (auto k : tables_[i]) vs.push_back(levels_[k]);
        return table_str(vs);
    }

    /// Labels of every member in enumeration order.
    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back(str(i));
        return out;
    }

private:
    int lookup(const std::vector<Level>& t) const {
        auto i = find(t);
        return i ? static_cast<int>(*i) : -1;
    }

    void build_tables() {
        const std::size_t m = size();
        const std::size_t pts = points();
        const std::size_t L = levels_.size();
        join_.assign(m * m, -1);
        tensor_.assign(m * m, -1);
        leq_.assign(m * m, false);
        std::vector<Level> t(pts);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                bool le = true;
                for (std::size_t x = 0; x < pts; ++x) {
                    t[x] = std::max(tables_[i][x], tables_[j][x]);
                    le = le && tables_[i][x] <= tables_[j][x];
                }
                join_[i * m + j] = lookup(t);
                leq_[i * m + j] = le;
                for (std::size_t x = 0; x < pts; ++x) t[x] = lt_[tables_[i][x]][tables_[j][x]];
                tensor_[i * m + j] = lookup(t);
            }
        act_.assign(L, std::vector<int>(m, -1));
        minus_.assign(L, std::vector<int>(m, -1));
        power_.assign(L, std::vector<int>(m, -1));
        constant_.assign(L, 0);
        for (std::size_t k = 0; k < L; ++k) {
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t x = 0; x < pts; ++x) t[x] = lt_[k][tables_[i][x]];
                act_[k][i] = lookup(t);
                for (std::size_t x = 0; x < pts; ++x) t[x] = lm_[tables_[i][x]][k];
                minus_[k][i] = lookup(t);
                for (std::size_t x = 0; x < pts; ++x) t[x] = lh_[k][tables_[i][x]];
                power_[k][i] = lookup(t);
            }
            std::vector<Level> c(pts, static_cast<Level>(k));
            const int ci = lookup(c);
            if (ci < 0) throw InputError(ErrorCode::ShapeMismatch, "constant map missing from CX");
            constant_[k] = static_cast<std::size_t>(ci);
        }
    }

    VCategory base_;
    Level n_ = 1;
    std::vector<Value> levels_;
    std::vector<std::vector<Level>> lt_, lh_, lm_;
    std::vector<std::vector<Level>> tables_;
    std::vector<int> code_index_;
    std::vector<int> join_, tensor_;
    std::vector<bool> leq_;
    std::vector<std::vector<int>> act_, minus_, power_;
    std::vector<std::size_t> constant_;
};

} // namespace qcat
