#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gct {

// Fixed-size bitset sized at runtime. Rows of the adjacency matrix and
// every vertex set in the container machinery are stored this way; the
// hot operations are and/andnot/popcount over whole words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size_bits() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this := this & ~o
    Bitset& andnot(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    int count_and(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    // Index of the lowest set bit, or -1.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }
    int next_after(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        std::size_t wi = std::size_t(i) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next_after(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (~std::uint64_t{0} >> (64 - (nbits_ & 63)));
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace gct
