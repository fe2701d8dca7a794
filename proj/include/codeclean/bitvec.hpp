#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace codeclean {

/*
 * Fixed-length bit vector packed into 64-bit words. All row operations in
 * the GF(2) elimination kernels reduce to word-parallel XOR/AND over these.
 * Bits past size() are kept zero so equality and comparisons are plain
 * word comparisons.
 */
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    /* a AND NOT b */
    BitVec and_not(const BitVec& o) const {
        BitVec r(*this);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
        return r;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    std::size_t count_and(const BitVec& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    /* parity of |this AND o|; the inner product over GF(2) */
    bool parity_and(const BitVec& o) const {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return std::popcount(acc) & 1u;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool is_subset_of(const BitVec& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool intersects(const BitVec& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    /* index of lowest set bit, or -1 */
    int find_first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    bool operator==(const BitVec&) const = default;

    /* little-endian integer comparison (bit 0 is the lowest-order bit) */
    std::strong_ordering compare_as_integer(const BitVec& o) const {
        for (std::size_t k = w_.size(); k-- > 0;) {
            if (w_[k] != o.w_[k]) return w_[k] <=> o.w_[k];
        }
        return std::strong_ordering::equal;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace codeclean
