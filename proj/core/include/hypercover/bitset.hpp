#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace hypercover {

// Fixed-size bit vector backed by 64-bit words. std::vector<bool> lacks the
// word-level access the embedding and search code needs.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::int64_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::int64_t size() const { return nbits_; }

    bool test(std::int64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::int64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::int64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::int64_t count() const {
        std::int64_t c = 0;
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

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Calls fn(index) for every set bit, ascending.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<std::int64_t>(wi) * 64 + b);
                w &= w - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::int64_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace hypercover
