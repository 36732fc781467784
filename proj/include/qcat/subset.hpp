#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace qcat {

/// Finite subset of {0..n-1}. Ordered as the integer sum of 2^i over members.
class Subset {
public:
    Subset() = default;
    explicit Subset(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static Subset of(std::size_t universe, std::initializer_list<std::size_t> members) {
        Subset s(universe);
        for (auto m : members) s.set(m);
        return s;
    }
    static Subset of(std::size_t universe, const std::vector<std::size_t>& members) {
        Subset s(universe);
        for (auto m : members) s.set(m);
        return s;
    }
    static Subset full(std::size_t universe) {
        Subset s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    std::size_t universe() const { return n_; }

    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const Subset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    bool intersects(const Subset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    Subset& operator|=(const Subset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Subset& operator&=(const Subset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    /// Sorted element list, e.g. "{0,2}".
    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (auto i : elements()) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
        return out + "}";
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const Subset& a, const Subset& b) { return a.n_ == b.n_ && a.words_ == b.words_; }
    friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
        }
        return std::strong_ordering::equal;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace qcat

template <>
struct std::hash<qcat::Subset> {
    std::size_t operator()(const qcat::Subset& s) const noexcept {
        std::size_t h = s.universe();
        for (auto w : s.words()) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }
};
