#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "error.hpp"

/**
 * @file value.hpp
 *
 * Exact rationals. `Frac` is an unrestricted signed fraction used for
 * intermediate arithmetic; `Value` is the carrier of all quantale arithmetic
 * and always lies in [0,1] in canonical reduced form.
 */

namespace qcat {

namespace detail {

using wide = __int128;

inline wide gcd_wide(wide a, wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow(wide v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational arithmetic overflowed 64 bits");
    return static_cast<std::int64_t>(v);
}

} // namespace detail

/// Signed exact fraction, denominator > 0, reduced.
class Frac {
public:
    constexpr Frac() = default;
    constexpr Frac(std::int64_t n) : num_(n), den_(1) {} // NOLINT: integers are fractions

    static Frac reduce(detail::wide n, detail::wide d) {
        if (d == 0) throw InputError(ErrorCode::MalformedRational, "zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::wide g = detail::gcd_wide(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Frac f;
        f.num_ = detail::narrow(n);
        f.den_ = detail::narrow(d);
        return f;
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        if (a.den_ == b.den_) return reduce(detail::wide(a.num_) + b.num_, a.den_);
        return reduce(detail::wide(a.num_) * b.den_ + detail::wide(b.num_) * a.den_, detail::wide(a.den_) * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        if (a.den_ == b.den_) return reduce(detail::wide(a.num_) - b.num_, a.den_);
        return reduce(detail::wide(a.num_) * b.den_ - detail::wide(b.num_) * a.den_, detail::wide(a.den_) * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return reduce(detail::wide(a.num_) * b.num_, detail::wide(a.den_) * b.den_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        return reduce(detail::wide(a.num_) * b.den_, detail::wide(a.den_) * b.num_);
    }
    friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        detail::wide l = detail::wide(a.num_) * b.den_;
        detail::wide r = detail::wide(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// An exact rational in [0,1].
class Value {
public:
    constexpr Value() = default;

    /// Throws InputError on a zero denominator or a value outside [0,1].
    static Value of(std::int64_t num, std::int64_t den) { return from(Frac::reduce(num, den)); }

    static Value from(const Frac& f) {
        if (f.num() < 0 || f.num() > f.den())
            throw InputError(ErrorCode::OutOfRange, std::to_string(f.num()) + "/" + std::to_string(f.den()) + " is not in [0,1]");
        Value v;
        v.num_ = f.num();
        v.den_ = f.den();
        return v;
    }

    /// Clamps to [0,1] first; used where a formula is defined as max(0, ...) or min(1, ...).
    static Value clamp(const Frac& f) {
        if (f.num() <= 0) return zero();
        if (f.num() >= f.den()) return one();
        return from(f);
    }

    static constexpr Value zero() { return Value(); }
    static constexpr Value one() {
        Value v;
        v.num_ = 1;
        return v;
    }
    /// The grid point k/n.
    static Value grid(std::int64_t k, std::int64_t n) { return of(k, n); }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }
    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_one() const { return num_ == den_; }

    Frac frac() const { return Frac::reduce(num_, den_); }
    operator Frac() const { return frac(); } // NOLINT: every Value is a Frac

    /// True when the value lies on Q_n = {0, 1/n, ..., 1}.
    constexpr bool on_grid(std::int64_t n) const { return n % den_ == 0; }
    /// k such that value = k/n; requires on_grid(n).
    constexpr std::int64_t grid_level(std::int64_t n) const { return num_ * (n / den_); }

    std::string str() const {
        if (num_ == 0) return "0";
        if (num_ == den_) return "1";
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p/q", "p" (integer) with surrounding whitespace trimmed.
    static Value parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        auto to_int = [&](std::string_view s) {
            s = trim(s);
            std::int64_t out = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
                throw InputError(ErrorCode::MalformedRational, "cannot read \"" + std::string(text) + "\" as p/q");
            return out;
        };
        auto slash = text.find('/');
        std::int64_t p = to_int(text.substr(0, slash));
        std::int64_t q = slash == std::string_view::npos ? 1 : to_int(text.substr(slash + 1));
        if (q == 0) throw InputError(ErrorCode::MalformedRational, "zero denominator in \"" + std::string(text) + "\"");
        return of(p, q);
    }

    friend bool operator==(const Value& a, const Value& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        detail::wide l = detail::wide(a.num_) * b.den_;
        detail::wide r = detail::wide(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Value meet(const Value& a, const Value& b) { return a < b ? a : b; }
inline Value join(const Value& a, const Value& b) { return a < b ? b : a; }

/// u ⊖ v = max(u - v, 0); independent of the chosen tensor.
inline Value truncated_minus(const Value& u, const Value& v) {
    if (u <= v) return Value::zero();
    return Value::from(u.frac() - v.frac());
}

} // namespace qcat

template <>
struct std::hash<qcat::Value> {
    std::size_t operator()(const qcat::Value& v) const noexcept {
        return std::hash<std::int64_t>{}(v.num()) * 1000003u ^ std::hash<std::int64_t>{}(v.den());
    }
};
