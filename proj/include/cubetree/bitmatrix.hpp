// Copyright cubetree authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cubetree/errors.hpp"

namespace cubetree {

inline constexpr uint32_t kWordBits = 64;

inline size_t words_for(uint32_t nbits) {
    return (static_cast<size_t>(nbits) + kWordBits - 1) / kWordBits;
}

/// Non-owning view of one packed sign vector. Bit 1 encodes +1, bit 0
/// encodes -1. Bits past `d` in the last word are always zero so whole-word
/// comparisons and hashes are well defined.
struct BitView {
    uint32_t d = 0;
    const uint64_t* words = nullptr;

    size_t word_count() const { return words_for(d); }
    int get(uint32_t s) const {
        return (words[s / kWordBits] >> (s % kWordBits)) & 1u ? +1 : -1;
    }
};

/// Owning packed sign vector over {-1,+1}^d.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(uint32_t d) : d_(d), words_(words_for(d), 0) {}

    uint32_t size() const { return d_; }
    int get(uint32_t s) const {
        return (words_[s / kWordBits] >> (s % kWordBits)) & 1u ? +1 : -1;
    }
    void set(uint32_t s, int value) {
        uint64_t bit = 1ULL << (s % kWordBits);
        if (value > 0)
            words_[s / kWordBits] |= bit;
        else
            words_[s / kWordBits] &= ~bit;
    }

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }
    BitView view() const { return BitView{d_, words_.data()}; }
    operator BitView() const { return view(); }

    bool operator==(const BitVector&) const = default;

private:
    uint32_t d_ = 0;
    std::vector<uint64_t> words_;
};

/// Subset of coordinate indices {0,..,d-1}, stored as a packed membership
/// mask. Iteration order is always ascending index.
class CoordSet {
public:
    CoordSet() = default;
    explicit CoordSet(uint32_t universe) : d_(universe), words_(words_for(universe), 0) {}

    static CoordSet all(uint32_t universe);
    static CoordSet of(uint32_t universe, std::span<const uint32_t> indices);

    uint32_t universe() const { return d_; }
    uint32_t count() const;
    bool empty() const { return count() == 0; }

    bool contains(uint32_t s) const {
        return (words_[s / kWordBits] >> (s % kWordBits)) & 1u;
    }
    void insert(uint32_t s) {
        if (s >= d_) throw ParameterError("coordinate index out of range");
        words_[s / kWordBits] |= 1ULL << (s % kWordBits);
    }
    void erase(uint32_t s) { words_[s / kWordBits] &= ~(1ULL << (s % kWordBits)); }

    CoordSet complement() const;
    bool subset_of(const CoordSet& other) const;
    bool intersects(const CoordSet& other) const;

    CoordSet operator|(const CoordSet& other) const;
    CoordSet operator&(const CoordSet& other) const;
    bool operator==(const CoordSet&) const = default;

    /// Sorted member indices.
    std::vector<uint32_t> indices() const;

    std::span<const uint64_t> words() const { return words_; }

private:
    uint32_t d_ = 0;
    std::vector<uint64_t> words_;
};

/// Bit-packed d x n sign matrix; column j is point x_j, packed contiguously
/// so distance kernels run word-wise (d=784 is 13 words per point).
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(uint32_t d, uint32_t n);

    /// values is column-major, length d*n, entries +1/-1 only.
    static BinaryMatrix pack(uint32_t d, uint32_t n, std::span<const int8_t> values);
    /// Column-major +1/-1 expansion, inverse of pack().
    std::vector<int8_t> unpack() const;

    uint32_t rows() const { return d_; }
    uint32_t cols() const { return n_; }
    size_t words_per_col() const { return wpc_; }

    int get(uint32_t s, uint32_t j) const { return col(j).get(s); }
    void set(uint32_t s, uint32_t j, int value);

    BitView col(uint32_t j) const { return BitView{d_, words_.data() + j * wpc_}; }
    BitVector col_copy(uint32_t j) const;
    void set_col(uint32_t j, const BitVector& v);

    std::span<const uint64_t> raw() const { return words_; }

    bool operator==(const BinaryMatrix&) const = default;

private:
    uint32_t d_ = 0, n_ = 0;
    size_t wpc_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense d x n matrix with entries in [-1,1]; holds averaged reconstructions.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(uint32_t d, uint32_t n) : d_(d), n_(n), values_(static_cast<size_t>(d) * n, 0.f) {}

    uint32_t rows() const { return d_; }
    uint32_t cols() const { return n_; }

    float get(uint32_t s, uint32_t j) const { return values_[static_cast<size_t>(j) * d_ + s]; }
    void set(uint32_t s, uint32_t j, float v) {
        if (v < -1.f || v > 1.f) throw ParameterError("RealMatrix entry outside [-1,1]");
        values_[static_cast<size_t>(j) * d_ + s] = v;
    }

    std::span<const float> values() const { return values_; }
    std::span<float> values() { return values_; }

    bool operator==(const RealMatrix&) const = default;

private:
    uint32_t d_ = 0, n_ = 0;
    std::vector<float> values_;  // column-major
};

/// Number of coordinates where a and b differ.
uint64_t hamming_distance(BitView a, BitView b);

/// Hamming distance counted only on coordinates in `mask`.
uint64_t hamming_distance_masked(BitView a, BitView b, const CoordSet& mask);

/// Overwrites exactly round(p*d*n) uniformly chosen entry positions (without
/// replacement) with fresh uniform draws from {-1,+1}. Same seed, same output.
BinaryMatrix inject_noise(const BinaryMatrix& x, double p, uint64_t seed);

/// Fraction of disagreeing entries.
double bit_error_rate(const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace cubetree
