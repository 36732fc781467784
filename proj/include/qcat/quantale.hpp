#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "report.hpp"
#include "value.hpp"

/**
 * @file quantale.hpp
 *
 * Continuous t-norms on [0,1] with their residuals, evaluated exactly.
 *
 * Supported tensors are minimum, product, Lukasiewicz and ordinal sums of
 * those. An ordinal sum glues rescaled copies of inner t-norms onto disjoint
 * subintervals [a,b] and uses the minimum everywhere else.
 */

namespace qcat {

class TNormSpec {
public:
    enum class Kind { Minimum, Product, Lukasiewicz, OrdinalSum };

    struct Segment {
        Value a;
        Value b;
        std::shared_ptr<const TNormSpec> inner;
    };

    static TNormSpec minimum() { return TNormSpec(Kind::Minimum); }
    static TNormSpec product() { return TNormSpec(Kind::Product); }
    static TNormSpec lukasiewicz() { return TNormSpec(Kind::Lukasiewicz); }

    static Segment segment(Value a, Value b, TNormSpec inner) {
        return Segment{a, b, std::make_shared<const TNormSpec>(std::move(inner))};
    }

    /// Rejects segments with a >= b or overlapping open intervals ]a,b[.
    static TNormSpec ordinal_sum(std::vector<Segment> segments) {
        for (const auto& s : segments) {
            if (!(s.a < s.b))
                throw InputError(ErrorCode::MalformedTNorm, "ordinal segment [" + s.a.str() + "," + s.b.str() + "] needs a < b");
            if (!s.inner) throw InputError(ErrorCode::MalformedTNorm, "ordinal segment without inner t-norm");
        }
        std::sort(segments.begin(), segments.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
        for (std::size_t i = 1; i < segments.size(); ++i) {
            if (segments[i].a < segments[i - 1].b)
                throw InputError(ErrorCode::MalformedTNorm, "ordinal segments [" + segments[i - 1].a.str() + "," +
                                                                segments[i - 1].b.str() + "] and [" + segments[i].a.str() +
                                                                "," + segments[i].b.str() + "] overlap");
        }
        TNormSpec spec(Kind::OrdinalSum);
        spec.segments_ = std::move(segments);
        return spec;
    }

    Kind kind() const { return kind_; }
    const std::vector<Segment>& segments() const { return segments_; }

    /// Flag syntax: min | product | lukasiewicz | ordinal:a,b,inner;a,b,inner
    std::string name() const {
        switch (kind_) {
        case Kind::Minimum: return "min";
        case Kind::Product: return "product";
        case Kind::Lukasiewicz: return "lukasiewicz";
        case Kind::OrdinalSum: {
            std::string out = "ordinal:";
            for (std::size_t i = 0; i < segments_.size(); ++i) {
                if (i) out += ";";
                out += segments_[i].a.str() + "," + segments_[i].b.str() + "," + segments_[i].inner->name();
            }
            return out;
        }
        }
        return "?";
    }

    static TNormSpec parse(std::string_view text) {
        if (text == "min" || text == "minimum") return minimum();
        if (text == "product" || text == "prod") return product();
        if (text == "lukasiewicz" || text == "luk") return lukasiewicz();
        constexpr std::string_view prefix = "ordinal:";
        if (text.substr(0, prefix.size()) != prefix)
            throw InputError(ErrorCode::MalformedTNorm, "unknown t-norm \"" + std::string(text) + "\"");
        std::string_view body = text.substr(prefix.size());
        std::vector<Segment> segments;
        while (!body.empty()) {
            auto semi = body.find(';');
            std::string_view item = body.substr(0, semi);
            body = semi == std::string_view::npos ? std::string_view{} : body.substr(semi + 1);
            auto c1 = item.find(',');
            auto c2 = c1 == std::string_view::npos ? c1 : item.find(',', c1 + 1);
            if (c2 == std::string_view::npos)
                throw InputError(ErrorCode::MalformedTNorm, "ordinal segment \"" + std::string(item) + "\" is not a,b,inner");
            std::string_view inner = item.substr(c2 + 1);
            if (inner.substr(0, prefix.size()) == prefix)
                throw InputError(ErrorCode::MalformedTNorm, "nested ordinal sums are only accepted in instance files");
            segments.push_back(segment(Value::parse(item.substr(0, c1)), Value::parse(item.substr(c1 + 1, c2 - c1 - 1)),
                                       parse(inner)));
        }
        return ordinal_sum(std::move(segments));
    }

private:
    explicit TNormSpec(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<Segment> segments_;
};

/// Anything with an exact tensor and residual on [0,1].
template <class Q>
concept TensorLike = requires(const Q& q, const Value& u, const Value& v) {
    { q.tensor(u, v) } -> std::convertible_to<Value>;
    { q.hom(u, v) } -> std::convertible_to<Value>;
};

class Quantale {
public:
    Quantale() : spec_(TNormSpec::lukasiewicz()) {}
    explicit Quantale(TNormSpec spec) : spec_(std::move(spec)) {}

    const TNormSpec& spec() const { return spec_; }
    std::string name() const { return spec_.name(); }

    static constexpr Value unit() { return Value::one(); }
    static constexpr Value bottom() { return Value::zero(); }

    Value tensor(const Value& u, const Value& v) const { return tensor(spec_, u, v); }
    Value hom(const Value& u, const Value& v) const { return hom(spec_, u, v); }

    /// u ⋔ w = hom(u, w) in the chain [0,1].
    Value power(const Value& w, const Value& u) const { return hom(u, w); }

private:
    static bool inside(const TNormSpec::Segment& s, const Value& x) { return s.a <= x && x <= s.b; }

    static Value into(const TNormSpec::Segment& s, const Value& x) {
        return Value::from((x.frac() - s.a.frac()) / (s.b.frac() - s.a.frac()));
    }
    static Value out_of(const TNormSpec::Segment& s, const Value& t) {
        return Value::from(s.a.frac() + (s.b.frac() - s.a.frac()) * t.frac());
    }

    static Value tensor(const TNormSpec& spec, const Value& u, const Value& v) {
        switch (spec.kind()) {
        case TNormSpec::Kind::Minimum: return meet(u, v);
        case TNormSpec::Kind::Product: return Value::from(u.frac() * v.frac());
        case TNormSpec::Kind::Lukasiewicz: return Value::clamp(u.frac() + v.frac() - Frac(1));
        case TNormSpec::Kind::OrdinalSum:
            for (const auto& s : spec.segments()) {
                if (inside(s, u) && inside(s, v)) return out_of(s, tensor(*s.inner, into(s, u), into(s, v)));
            }
            return meet(u, v);
        }
        return meet(u, v);
    }

    static Value hom(const TNormSpec& spec, const Value& u, const Value& v) {
        if (u <= v) return Value::one();
        switch (spec.kind()) {
        case TNormSpec::Kind::Minimum: return v;
        case TNormSpec::Kind::Product: return Value::from(v.frac() / u.frac());
        case TNormSpec::Kind::Lukasiewicz: return Value::from(Frac(1) - u.frac() + v.frac());
        case TNormSpec::Kind::OrdinalSum:
            for (const auto& s : spec.segments()) {
                if (inside(s, u) && inside(s, v)) return out_of(s, hom(*s.inner, into(s, u), into(s, v)));
            }
            return v;
        }
        return v;
    }

    TNormSpec spec_;
};

inline Value tensor(const Quantale& q, const Value& u, const Value& v) { return q.tensor(u, v); }
inline Value hom(const Quantale& q, const Value& u, const Value& v) { return q.hom(u, v); }

/// The chain Q_n = {0, 1/n, ..., 1}.
struct GridChain {
    std::int64_t n = 1;
    std::vector<Value> elements;
};

inline GridChain grid_chain(std::int64_t n) {
    if (n < 1) throw InputError(ErrorCode::OutOfRange, "grid size must be at least 1");
    GridChain g{n, {}};
    g.elements.reserve(static_cast<std::size_t>(n + 1));
    for (std::int64_t k = 0; k <= n; ++k) g.elements.push_back(Value::grid(k, n));
    return g;
}

inline bool is_idempotent(const Quantale& q, const Value& u) { return q.tensor(u, u) == u; }

/// u^n with u^1 = u.
template <TensorLike Q>
Value tensor_power(const Q& q, const Value& u, std::int64_t n) {
    Value acc = u;
    for (std::int64_t i = 1; i < n; ++i) acc = q.tensor(acc, u);
    return acc;
}

struct Nilpotency {
    bool nilpotent = false;
    std::optional<std::int64_t> witness; // least n with u^n = 0
};

namespace detail {

inline Nilpotency nilpotency(const TNormSpec& spec, const Value& u) {
    if (u.is_zero() || u.is_one()) return {};
    switch (spec.kind()) {
    case TNormSpec::Kind::Minimum:
    case TNormSpec::Kind::Product: return {}; // no zero divisors at all
    case TNormSpec::Kind::Lukasiewicz: {
        Quantale q(spec);
        const std::int64_t bound = 2 * u.den() + 2;
        Value acc = u;
        for (std::int64_t n = 1; n <= bound; ++n) {
            if (acc.is_zero()) return {true, n};
            acc = q.tensor(acc, u);
        }
        return {};
    }
    case TNormSpec::Kind::OrdinalSum:
        // Powers stay inside the segment holding u and decrease towards its
        // left end, so only a segment starting at 0 can reach 0.
        for (const auto& s : spec.segments()) {
            if (s.a.is_zero() && u < s.b)
                return nilpotency(*s.inner, Value::from(u.frac() / s.b.frac()));
        }
        return {};
    }
    return {};
}

inline bool has_nilpotents(const TNormSpec& spec) {
    switch (spec.kind()) {
    case TNormSpec::Kind::Lukasiewicz: return true;
    case TNormSpec::Kind::OrdinalSum:
        for (const auto& s : spec.segments())
            if (s.a.is_zero() && has_nilpotents(*s.inner)) return true;
        return false;
    default: return false;
    }
}

} // namespace detail

/// Least n with u^n = 0 (u != 0), searching up to 2·den(u)+2 for Lukasiewicz pieces.
inline Nilpotency nilpotency(const Quantale& q, const Value& u) { return detail::nilpotency(q.spec(), u); }
inline bool is_nilpotent(const Quantale& q, const Value& u) { return nilpotency(q, u).nilpotent; }
inline bool has_nilpotents(const Quantale& q) { return detail::has_nilpotents(q.spec()); }

/// True iff Q_n is closed under tensor, hom and truncated minus.
template <TensorLike Q>
bool grid_closed(const Q& q, std::int64_t n) {
    const auto g = grid_chain(n);
    for (const auto& u : g.elements) {
        for (const auto& v : g.elements) {
            if (!q.tensor(u, v).on_grid(n) || !q.hom(u, v).on_grid(n) || !truncated_minus(u, v).on_grid(n)) return false;
        }
    }
    return true;
}

inline void require_grid_closed(const Quantale& q, std::int64_t n) {
    if (!grid_closed(q, n))
        throw InputError(ErrorCode::GridNotClosed, "Q_" + std::to_string(n) + " is not closed under " + q.name());
}

namespace detail {

inline std::string tuple_str(std::initializer_list<Value> vs) {
    std::string out = "(";
    bool first = true;
    for (const auto& v : vs) {
        if (!first) out += ", ";
        out += v.str();
        first = false;
    }
    return out + ")";
}

/// Runs every law that mentions the triple (u, v, w).
template <TensorLike Q>
void check_triple(const Q& q, const Value& u, const Value& v, const Value& w, Report& r) {
    const Value uv = q.tensor(u, v);
    r.expect(q.tensor(uv, w) == q.tensor(u, q.tensor(v, w)), "associativity", tuple_str({u, v, w}));
    if (v <= w) r.expect(uv <= q.tensor(u, w), "monotonicity", tuple_str({u, v, w}));
    r.expect(q.tensor(u, join(v, w)) == join(uv, q.tensor(u, w)), "join-distribution", tuple_str({u, v, w}));
    r.expect((uv <= w) == (v <= q.hom(u, w)), "adjunction", tuple_str({u, v, w}));
}

template <TensorLike Q>
void check_pair(const Q& q, const Value& u, const Value& v, Report& r) {
    const Value uv = q.tensor(u, v);
    r.expect(uv == q.tensor(v, u), "commutativity", tuple_str({u, v}));
    r.expect(uv <= meet(u, v), "below-meet", tuple_str({u, v}));
    r.expect(v <= q.hom(u, uv), "adjunction-unit", tuple_str({u, v}));
    r.expect(q.tensor(u, q.hom(u, v)) <= v, "adjunction-counit", tuple_str({u, v}));
    if (u <= v) {
        for (const auto& w : {Value::zero(), Value::one(), u, v}) {
            r.expect(q.hom(w, u) <= q.hom(w, v), "hom-monotone", tuple_str({w, u, v}));
            r.expect(q.hom(v, w) <= q.hom(u, w), "hom-antitone", tuple_str({u, v, w}));
        }
    }
}

template <TensorLike Q>
void check_single(const Q& q, const Value& u, Report& r) {
    r.expect(q.tensor(Value::one(), u) == u, "unit", tuple_str({Value::one(), u}));
    r.expect(q.hom(Value::one(), u) == u, "hom-unit", tuple_str({Value::one(), u}));
}

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

} // namespace detail

/// Exhaustive audit over domain³: unit, commutativity, associativity,
/// monotonicity, join distribution and the tensor/hom adjunction.
template <TensorLike Q>
Report verify_quantale_axioms(const Q& q, std::span<const Value> domain) {
    Report r("quantale-axioms");
    for (const auto& u : domain) detail::check_single(q, u, r);
    for (const auto& u : domain)
        for (const auto& v : domain) detail::check_pair(q, u, v, r);
    for (const auto& u : domain)
        for (const auto& v : domain)
            for (const auto& w : domain) detail::check_triple(q, u, v, w, r);
    r.set_stat("domain", std::to_string(domain.size()));
    return r;
}

/// Seeded sample of rationals in [0,1] with denominators up to max_den;
/// about one draw in sixteen is pinned to 0 or 1 so the boundary is exercised.
inline std::vector<Value> sample_values(std::uint64_t seed, std::size_t count, std::int64_t max_den = 64) {
    std::mt19937_64 rng(seed);
    std::vector<Value> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto pick = detail::draw(rng, 16);
        if (pick == 0) {
            out.push_back(detail::draw(rng, 2) ? Value::one() : Value::zero());
            continue;
        }
        auto den = static_cast<std::int64_t>(detail::draw(rng, static_cast<std::uint64_t>(max_den))) + 1;
        auto num = static_cast<std::int64_t>(detail::draw(rng, static_cast<std::uint64_t>(den + 1)));
        out.push_back(Value::of(num, den));
    }
    return out;
}

/// The same laws, evaluated on `triples` seeded random triples.
template <TensorLike Q>
Report verify_quantale_axioms_sampled(const Q& q, std::uint64_t seed, std::size_t triples, std::int64_t max_den = 64) {
    Report r("quantale-axioms-sampled");
    const auto vals = sample_values(seed, 3 * triples, max_den);
    for (std::size_t i = 0; i < triples; ++i) {
        const Value& u = vals[3 * i];
        const Value& v = vals[3 * i + 1];
        const Value& w = vals[3 * i + 2];
        detail::check_single(q, u, r);
        detail::check_pair(q, u, v, r);
        detail::check_triple(q, u, v, w, r);
        detail::check_triple(q, u, v, q.tensor(u, v), r);
    }
    r.set_stat("triples", std::to_string(triples));
    r.set_stat("seed", std::to_string(seed));
    return r;
}

/// For every pair with u⊗v = 0: u = 0 or v nilpotent (or v = 0 when the
/// tensor has no nilpotents).
inline Report no_zero_divisor_audit(const Quantale& q, std::span<const std::pair<Value, Value>> pairs) {
    Report r("no-zero-divisors");
    const bool nil_free = !has_nilpotents(q);
    std::size_t zero_products = 0;
    std::int64_t max_index = 0;
    std::string witnesses;
    for (const auto& [u, v] : pairs) {
        if (!q.tensor(u, v).is_zero()) continue;
        ++zero_products;
        if (u.is_zero() || v.is_zero()) {
            r.pass();
            continue;
        }
        if (nil_free) {
            r.fail("zero-divisor", detail::tuple_str({u, v}));
            continue;
        }
        auto nil = nilpotency(q, v);
        if (!nil.nilpotent) {
            r.fail("zero-divisor", detail::tuple_str({u, v}) + " with v not nilpotent");
            continue;
        }
        // Replay the witness.
        r.expect(tensor_power(q, v, *nil.witness).is_zero(), "nilpotency-witness", v.str());
        if (*nil.witness > max_index) max_index = *nil.witness;
    }
    r.set_stat("pairs", std::to_string(pairs.size()));
    r.set_stat("zero_products", std::to_string(zero_products));
    r.set_stat("nilpotent_free", nil_free ? "true" : "false");
    if (!nil_free) r.set_stat("max_nilpotency_index", std::to_string(max_index));
    return r;
}

inline std::vector<std::pair<Value, Value>> all_pairs(std::span<const Value> domain) {
    std::vector<std::pair<Value, Value>> out;
    out.reserve(domain.size() * domain.size());
    for (const auto& u : domain)
        for (const auto& v : domain) out.emplace_back(u, v);
    return out;
}

inline std::vector<std::pair<Value, Value>> sample_pairs(std::uint64_t seed, std::size_t count, std::int64_t max_den = 64) {
    const auto vals = sample_values(seed, 2 * count, max_den);
    std::vector<std::pair<Value, Value>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(vals[2 * i], vals[2 * i + 1]);
    return out;
}

} // namespace qcat
