#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ontoforge {

// Fixed-size dynamic bitset over 64-bit words. Trailing bits of the last
// word are kept zero so whole-word comparisons and popcounts are valid.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t size, bool value = false)
        : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
        trim();
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        check(i);
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        check(i);
        if (value) {
            words_[i / 64] |= std::uint64_t{1} << (i % 64);
        } else {
            words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
        }
    }

    void reset(std::size_t i) { set(i, false); }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool none() const {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    bool any() const { return !none(); }

    Bitset& operator&=(const Bitset& other) {
        check_same(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        check_same(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool is_subset_of(const Bitset& other) const {
        check_same(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) return false;
        }
        return true;
    }

    bool is_proper_subset_of(const Bitset& other) const {
        return is_subset_of(other) && *this != other;
    }

    // Set bits in ascending index order.
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each_set([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int bit = std::countr_zero(w);
                f(wi * 64 + static_cast<std::size_t>(bit));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    // A strict total order (size, then word contents); used for canonical
    // set keys, not for the lattice order.
    friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.words_ <=> b.words_;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        const auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(size_);
        for (auto w : words_) mix(w);
        return static_cast<std::size_t>(h);
    }

private:
    void check(std::size_t i) const {
        if (i >= size_) throw std::out_of_range("bitset index out of range");
    }

    void check_same(const Bitset& other) const {
        if (size_ != other.size_) throw std::invalid_argument("bitset size mismatch");
    }

    void trim() {
        if (size_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
        }
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ontoforge
