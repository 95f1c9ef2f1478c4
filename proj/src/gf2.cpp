#include "epc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace epc {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char c = bits[i];
        if (c == '1')
            v.set(i, true);
        else if (c != '0')
            throw std::invalid_argument("BitVector::from_string: expected 0/1 characters");
    }
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (std::uint64_t x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::is_zero() const {
    for (std::uint64_t x : words_)
        if (x) return false;
    return true;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.len_ != len_) throw std::invalid_argument("BitVector::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1u;
}

std::size_t BitVector::hamming(const BitVector& other) const {
    if (other.len_ != len_) throw std::invalid_argument("BitVector::hamming: length mismatch");
    std::size_t w = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        w += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
    return w;
}

std::size_t BitVector::weight_masked(const BitVector& mask) const {
    if (mask.len_ != len_) throw std::invalid_argument("BitVector::weight_masked: length mismatch");
    std::size_t w = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        w += static_cast<std::size_t>(std::popcount(words_[i] & mask.words_[i]));
    return w;
}

std::size_t BitVector::leading_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return npos;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    out.reserve(weight());
    for_each_set_bit([&](std::size_t i) { out.push_back(i); });
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.len_ != len_) throw std::invalid_argument("BitVector::operator^=: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    if (other.len_ != len_) throw std::invalid_argument("BitVector::operator&=: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    if (other.len_ != len_) throw std::invalid_argument("BitVector::operator|=: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for_each_set_bit([&](std::size_t i) { s[i] = '1'; });
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const BitVector& r : rows)
        if (r.size() != m.cols_)
            throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    m.data_ = std::move(rows);
    return m;
}

void BitMatrix::append_row(BitVector r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix::append_row: length mismatch");
    data_.push_back(std::move(r));
    ++rows_;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        data_[i].for_each_set_bit([&](std::size_t j) { t.set(j, i, true); });
    return t;
}

BitVector BitMatrix::mul(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::mul: length mismatch");
    BitVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (data_[i].dot(v)) out.set(i, true);
    return out;
}

namespace {

// Row echelon form in place; returns pivot (row, col) pairs.
std::vector<std::pair<std::size_t, std::size_t>> echelonize(std::vector<BitVector>& rows,
                                                            std::size_t cols) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = BitVector::npos;
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i].get(c)) {
                piv = i;
                break;
            }
        }
        if (piv == BitVector::npos) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i)
            if (rows[i].get(c)) rows[i] ^= rows[r];
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

// Back-substitution pass turning an echelon form into reduced row echelon.
void back_substitute(std::vector<BitVector>& rows,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pivots) {
    for (std::size_t p = pivots.size(); p-- > 0;) {
        auto [r, c] = pivots[p];
        for (std::size_t i = 0; i < r; ++i)
            if (rows[i].get(c)) rows[i] ^= rows[r];
    }
}

} // namespace

std::size_t rank(const BitMatrix& m) {
    std::vector<BitVector> rows = m.row_data();
    return echelonize(rows, m.cols()).size();
}

std::vector<BitVector> nullspace_basis(const BitMatrix& m) {
    std::vector<BitVector> rows = m.row_data();
    auto pivots = echelonize(rows, m.cols());
    back_substitute(rows, pivots);

    std::vector<std::size_t> pivot_of_col(m.cols(), BitVector::npos);
    for (auto [r, c] : pivots) pivot_of_col[c] = r;

    std::vector<BitVector> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (pivot_of_col[f] != BitVector::npos) continue;
        BitVector v(m.cols());
        v.set(f, true);
        for (auto [r, c] : pivots)
            if (rows[r].get(f)) v.set(c, true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    // Augment each row with its b-bit and eliminate.
    std::vector<BitVector> rows(m.rows(), BitVector(m.cols() + 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m.row(i).for_each_set_bit([&](std::size_t j) { rows[i].set(j, true); });
        if (b.get(i)) rows[i].set(m.cols(), true);
    }
    auto pivots = echelonize(rows, m.cols());
    for (std::size_t i = pivots.size(); i < rows.size(); ++i)
        if (rows[i].get(m.cols())) return std::nullopt;
    back_substitute(rows, pivots);
    BitVector x(m.cols());
    for (auto [r, c] : pivots)
        if (rows[r].get(m.cols())) x.set(c, true);
    return x;
}

std::vector<BitVector> coset_enumerate(const std::vector<BitVector>& basis, const BitVector& offset,
                                       std::size_t cap) {
    if (basis.size() >= 63 || (std::size_t(1) << basis.size()) > cap)
        throw std::length_error("coset_enumerate: capacity exceeded (2^|basis| > cap)");
    for (const BitVector& v : basis)
        if (v.size() != offset.size())
            throw std::invalid_argument("coset_enumerate: length mismatch");

    std::size_t total = std::size_t(1) << basis.size();
    std::vector<BitVector> out;
    out.reserve(total);
    out.push_back(offset);
    BitVector cur = offset;
    // Gray-code walk: element g(i) differs from g(i-1) in basis vector ctz(i).
    for (std::size_t i = 1; i < total; ++i) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        out.push_back(cur);
    }
    return out;
}

std::pair<std::vector<BitVector>, std::vector<BitVector>> pair_normalize(
    const std::vector<BitVector>& xs, const std::vector<BitVector>& zs) {
    const std::size_t k = xs.size();
    if (zs.size() != k) throw std::invalid_argument("pair_normalize: list size mismatch");

    // Gram matrix augmented with an identity to track the row operations.
    BitMatrix g(k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            if (xs[i].dot(zs[j])) g.set(i, j, true);
        g.set(i, k + i, true);
    }

    // Gauss-Jordan on the left block; pivot on the first available unit
    // entry per column, preferring the lowest row index.
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = BitVector::npos;
        for (std::size_t i = c; i < k; ++i)
            if (g.get(i, c)) {
                piv = i;
                break;
            }
        if (piv == BitVector::npos)
            throw std::invalid_argument("pair_normalize: degenerate pairing (singular Gram matrix)");
        std::swap(g.row(c), g.row(piv));
        for (std::size_t i = 0; i < k; ++i)
            if (i != c && g.get(i, c)) g.row(i) ^= g.row(c);
    }

    // Left block is now I, right block holds A with A*Gram = I; replace
    // xs by A*xs so the new Gram is exactly the identity.
    std::vector<BitVector> new_xs(k, BitVector(xs.empty() ? 0 : xs.front().size()));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (g.get(i, k + j)) new_xs[i] ^= xs[j];
    return {std::move(new_xs), zs};
}

bool RowEchelon::absorb(BitVector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    std::size_t lead = v.leading_bit();
    if (lead == BitVector::npos) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
}

bool RowEchelon::contains(BitVector v) const {
    return reduce(std::move(v)).is_zero();
}

BitVector RowEchelon::reduce(BitVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    return v;
}

} // namespace epc
