// Copyright cubetree authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "cubetree/bitmatrix.hpp"

#include <bit>
#include <cmath>

#include "cubetree/rng.hpp"

namespace cubetree {

namespace {

// Mask selecting the valid bits of the last word of a d-bit vector.
uint64_t tail_mask(uint32_t d) {
    uint32_t rem = d % kWordBits;
    return rem == 0 ? ~0ULL : (1ULL << rem) - 1;
}

}  // namespace

CoordSet CoordSet::all(uint32_t universe) {
    CoordSet s(universe);
    if (universe == 0) return s;
    for (auto& w : s.words_) w = ~0ULL;
    s.words_.back() &= tail_mask(universe);
    return s;
}

CoordSet CoordSet::of(uint32_t universe, std::span<const uint32_t> indices) {
    CoordSet s(universe);
    for (uint32_t i : indices) s.insert(i);
    return s;
}

uint32_t CoordSet::count() const {
    uint32_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

CoordSet CoordSet::complement() const {
    CoordSet s(d_);
    for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    if (!s.words_.empty()) s.words_.back() &= tail_mask(d_);
    return s;
}

bool CoordSet::subset_of(const CoordSet& other) const {
    if (d_ != other.d_) return false;
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool CoordSet::intersects(const CoordSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

CoordSet CoordSet::operator|(const CoordSet& other) const {
    if (d_ != other.d_) throw DimensionError("CoordSet universe mismatch");
    CoordSet s(d_);
    for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] | other.words_[i];
    return s;
}

CoordSet CoordSet::operator&(const CoordSet& other) const {
    if (d_ != other.d_) throw DimensionError("CoordSet universe mismatch");
    CoordSet s(d_);
    for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] & other.words_[i];
    return s;
}

std::vector<uint32_t> CoordSet::indices() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<uint32_t>(i * kWordBits + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

BinaryMatrix::BinaryMatrix(uint32_t d, uint32_t n)
    : d_(d), n_(n), wpc_(words_for(d)), words_(wpc_ * n, 0) {
    if (d < 1) throw ParameterError("BinaryMatrix needs d >= 1");
}

BinaryMatrix BinaryMatrix::pack(uint32_t d, uint32_t n, std::span<const int8_t> values) {
    if (values.size() != static_cast<size_t>(d) * n)
        throw DimensionError("pack: value count does not match d*n");
    BinaryMatrix m(d, n);
    for (uint32_t j = 0; j < n; ++j) {
        uint64_t* w = m.words_.data() + j * m.wpc_;
        for (uint32_t s = 0; s < d; ++s) {
            int8_t v = values[static_cast<size_t>(j) * d + s];
            if (v != 1 && v != -1) throw ParameterError("pack: entries must be +1 or -1");
            if (v == 1) w[s / kWordBits] |= 1ULL << (s % kWordBits);
        }
    }
    return m;
}

std::vector<int8_t> BinaryMatrix::unpack() const {
    std::vector<int8_t> out(static_cast<size_t>(d_) * n_);
    for (uint32_t j = 0; j < n_; ++j) {
        BitView v = col(j);
        for (uint32_t s = 0; s < d_; ++s) out[static_cast<size_t>(j) * d_ + s] = static_cast<int8_t>(v.get(s));
    }
    return out;
}

void BinaryMatrix::set(uint32_t s, uint32_t j, int value) {
    uint64_t* w = words_.data() + j * wpc_ + s / kWordBits;
    uint64_t bit = 1ULL << (s % kWordBits);
    if (value > 0)
        *w |= bit;
    else
        *w &= ~bit;
}

BitVector BinaryMatrix::col_copy(uint32_t j) const {
    BitVector v(d_);
    BitView src = col(j);
    for (size_t i = 0; i < wpc_; ++i) v.words()[i] = src.words[i];
    return v;
}

void BinaryMatrix::set_col(uint32_t j, const BitVector& v) {
    if (v.size() != d_) throw DimensionError("set_col: vector length mismatch");
    for (size_t i = 0; i < wpc_; ++i) words_[j * wpc_ + i] = v.words()[i];
}

uint64_t hamming_distance(BitView a, BitView b) {
    if (a.d != b.d) throw DimensionError("hamming_distance: length mismatch");
    uint64_t sum = 0;
    for (size_t i = 0; i < a.word_count(); ++i) sum += std::popcount(a.words[i] ^ b.words[i]);
    return sum;
}

uint64_t hamming_distance_masked(BitView a, BitView b, const CoordSet& mask) {
    if (a.d != b.d || a.d != mask.universe())
        throw DimensionError("hamming_distance_masked: length mismatch");
    uint64_t sum = 0;
    const uint64_t* m = mask.words().data();
    for (size_t i = 0; i < a.word_count(); ++i)
        sum += std::popcount((a.words[i] ^ b.words[i]) & m[i]);
    return sum;
}

BinaryMatrix inject_noise(const BinaryMatrix& x, double p, uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("inject_noise: p must be in [0,1]");
    BinaryMatrix out = x;
    const uint64_t total = static_cast<uint64_t>(x.rows()) * x.cols();
    uint64_t remaining = static_cast<uint64_t>(std::llround(p * static_cast<double>(total)));
    if (remaining == 0) return out;

    // Selection sampling (one pass over entry positions in column-major
    // order): position t is selected with probability remaining/(total-t),
    // which draws exactly `remaining` positions uniformly without
    // replacement. Each selected entry gets an independent uniform sign.
    SplitMix64 rng(seed);
    uint64_t t = 0;
    const uint32_t d = x.rows();
    for (uint64_t left = total; remaining > 0; ++t, --left) {
        if (rng.bounded(left) < remaining) {
            uint32_t j = static_cast<uint32_t>(t / d);
            uint32_t s = static_cast<uint32_t>(t % d);
            out.set(s, j, rng.sign());
            --remaining;
        }
    }
    return out;
}

double bit_error_rate(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("bit_error_rate: shape mismatch");
    uint64_t mismatches = 0;
    for (uint32_t j = 0; j < a.cols(); ++j) mismatches += hamming_distance(a.col(j), b.col(j));
    return static_cast<double>(mismatches) /
           (static_cast<double>(a.rows()) * static_cast<double>(a.cols()));
}

}  // namespace cubetree
