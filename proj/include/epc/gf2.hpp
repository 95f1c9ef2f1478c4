#pragma once

// Bit-packed GF(2) vectors and matrices plus the elimination-based
// operations (rank, nullspace, solve, coset enumeration, dual-basis
// normalization) that everything else in the library is built on.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace epc {

class BitVector {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector() = default;
    explicit BitVector(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}

    // Parses "0101..."; index 0 is the leftmost character.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t weight() const;
    bool is_zero() const;

    // Parity of the AND with another vector of equal length.
    bool dot(const BitVector& other) const;

    // Number of coordinates where the two vectors differ.
    std::size_t hamming(const BitVector& other) const;

    // popcount(*this AND mask); mask must have the same length.
    std::size_t weight_masked(const BitVector& mask) const;

    // Index of the first set bit, or npos.
    std::size_t leading_bit() const;

    // Calls f(i) for every set bit index i in increasing order.
    template <typename F>
    void for_each_set_bit(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(x));
                f(w * 64 + b);
                x &= x - 1;
            }
        }
    }

    std::vector<std::size_t> support() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    BitVector& operator&=(const BitVector& other);
    friend BitVector operator&(BitVector a, const BitVector& b) {
        a &= b;
        return a;
    }
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator|(BitVector a, const BitVector& b) {
        a |= b;
        return a;
    }

    bool operator==(const BitVector& other) const = default;

    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const {
        std::size_t h = v.size() * 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : v.words()) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::vector<BitVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return data_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { data_[i].set(j, v); }

    BitVector& row(std::size_t i) { return data_[i]; }
    const BitVector& row(std::size_t i) const { return data_[i]; }
    const std::vector<BitVector>& row_data() const { return data_; }

    void append_row(BitVector r);

    BitMatrix transposed() const;

    // M * v with v.length == cols; component i is <row_i, v>.
    BitVector mul(const BitVector& v) const;

    bool operator==(const BitMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

std::size_t rank(const BitMatrix& m);

std::vector<BitVector> nullspace_basis(const BitMatrix& m);

// Returns x with M*x == b, or nullopt when b is outside the column span.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

inline constexpr std::size_t kCosetCapDefault = std::size_t(1) << 26;

// Enumerates offset + span(basis); throws when 2^|basis| would exceed cap.
std::vector<BitVector> coset_enumerate(const std::vector<BitVector>& basis, const BitVector& offset,
                                       std::size_t cap = kCosetCapDefault);

// Transforms (xs, zs) so the GF(2) Gram matrix <xs_i, zs_j> becomes the
// identity; throws when the Gram matrix is singular (degenerate pairing).
// Representatives stay in their original spans (each output vector is a
// GF(2) combination of the inputs on its side).
std::pair<std::vector<BitVector>, std::vector<BitVector>> pair_normalize(
    const std::vector<BitVector>& xs, const std::vector<BitVector>& zs);

// Incremental independence tracker: rows are absorbed into an echelon
// basis; offers membership-in-span queries. Used wherever "is w inside
// span(rows)?" has to run against many w.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    // Inserts v; returns true when v was independent of the current span.
    bool absorb(BitVector v);

    // True when v lies in the span of the absorbed rows.
    bool contains(BitVector v) const;

    // Reduces v modulo the span and returns the remainder.
    BitVector reduce(BitVector v) const;

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<BitVector>& rows() const { return rows_; }

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;          // echelonized
    std::vector<std::size_t> pivots_;      // pivot column of rows_[i]
};

} // namespace epc
