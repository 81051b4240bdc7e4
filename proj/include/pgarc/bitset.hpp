#pragma once

#include <cstdint>
#include <vector>

namespace pgarc {

// Fixed-size bit vector with access to the underlying words.
// std::vector<bool> hides its storage, which blocks the word-at-a-time scans
// the search engine and coverage checks rely on.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    void reset() { std::fill(words_.begin(), words_.end(), 0); }
    void resize(size_t n) {
        n_ = n;
        words_.assign((n + 63) / 64, 0);
    }

    size_t size() const { return n_; }

    bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void clear(size_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    size_t count() const {
        size_t c = 0;
        for (uint64_t w : words_) c += static_cast<size_t>(__builtin_popcountll(w));
        return c;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }

    const std::vector<uint64_t>& words() const { return words_; }

    // Calls fn(i) for every set bit, ascending.
    template <class Fn>
    void for_each_set(Fn&& fn) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                fn((wi << 6) + b);
                w &= w - 1;
            }
        }
    }

private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace pgarc
