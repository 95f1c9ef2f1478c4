#include "epc/css.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace epc {

CssCode::CssCode(BitMatrix hx, BitMatrix hz)
    : hx_(std::move(hx)), hz_(std::move(hz)), cache_(std::make_shared<RankCache>()) {
    if (hx_.cols() != hz_.cols())
        throw std::invalid_argument("CssCode: hx and hz disagree on qubit count");
    n_ = hx_.cols();
}

std::size_t CssCode::rank_x() const {
    if (!cache_->rx) cache_->rx = rank(hx_);
    return *cache_->rx;
}

std::size_t CssCode::rank_z() const {
    if (!cache_->rz) cache_->rz = rank(hz_);
    return *cache_->rz;
}

std::size_t CssCode::k() const { return n_ - rank_x() - rank_z(); }

CssCode make_css(BitMatrix hx, BitMatrix hz) {
    if (hx.cols() != hz.cols())
        throw std::invalid_argument("make_css: hx and hz disagree on qubit count");
    const BitMatrix hzt = hz.transposed();
    for (std::size_t i = 0; i < hx.rows(); ++i) {
        BitVector s(hz.rows());
        hx.row(i).for_each_set_bit([&](std::size_t b) { s ^= hzt.row(b); });
        if (!s.is_zero()) {
            const std::size_t j = s.leading_bit();
            throw std::invalid_argument("css-violation: hx row " + std::to_string(i) +
                                        " is not orthogonal to hz row " + std::to_string(j));
        }
    }
    return CssCode(std::move(hx), std::move(hz));
}

namespace {

// Representatives of ker(killer) modulo rowspace(modded), exactly k of them.
std::vector<BitVector> quotient_reps(const BitMatrix& killer, const BitMatrix& modded) {
    RowEchelon ech(modded.cols());
    for (std::size_t i = 0; i < modded.rows(); ++i) ech.absorb(modded.row(i));
    std::vector<BitVector> reps;
    for (const BitVector& v : nullspace_basis(killer))
        if (ech.absorb(v)) reps.push_back(v);
    return reps;
}

} // namespace

LogicalBasis logical_basis(const CssCode& c) {
    LogicalBasis lb;
    lb.bx = quotient_reps(c.hz(), c.hx());
    lb.bz = quotient_reps(c.hx(), c.hz());
    if (lb.bx.size() != c.k() || lb.bz.size() != c.k())
        throw std::runtime_error("logical_basis: quotient dimension mismatch");
    if (c.k() > 0) {
        auto [bx, bz] = pair_normalize(lb.bx, lb.bz);
        lb.bx = std::move(bx);
        lb.bz = std::move(bz);
    }
    return lb;
}

namespace {

// Minimum weight over words with a nonzero logical component, walking
// span(stabilizer basis + logical representatives) in Gray-code order.
std::size_t side_min_weight(const BitMatrix& stab, const std::vector<BitVector>& logicals,
                            std::size_t max_dim) {
    RowEchelon ech(stab.cols());
    for (std::size_t i = 0; i < stab.rows(); ++i) ech.absorb(stab.row(i));
    std::vector<BitVector> basis = ech.rows();
    const std::size_t stabs = basis.size();
    basis.insert(basis.end(), logicals.begin(), logicals.end());
    if (basis.size() > max_dim)
        throw std::length_error("css_distance_exhaustive: too-large side dimension " +
                                std::to_string(basis.size()) + " (cap " +
                                std::to_string(max_dim) + ")");
    BitVector cur(stab.cols());
    std::uint32_t logical_mask = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        const std::size_t b = static_cast<std::size_t>(std::countr_zero(i));
        cur ^= basis[b];
        if (b >= stabs) logical_mask ^= std::uint32_t{1} << (b - stabs);
        if (logical_mask == 0) continue;
        const std::size_t w = cur.weight();
        if (w < best) {
            best = w;
            if (best == 1) break;
        }
    }
    return best;
}

} // namespace

std::size_t css_distance_exhaustive(const CssCode& c, std::size_t max_dim) {
    if (c.k() == 0)
        throw std::invalid_argument("css_distance_exhaustive: code has no logical qubits");
    const LogicalBasis lb = logical_basis(c);
    // Side dimensions: ker hx has rank_z + k, ker hz has rank_x + k.
    const bool z_side_first = c.rank_z() <= c.rank_x();
    const BitMatrix& first_stab = z_side_first ? c.hz() : c.hx();
    const BitMatrix& second_stab = z_side_first ? c.hx() : c.hz();
    const auto& first_log = z_side_first ? lb.bz : lb.bx;
    const auto& second_log = z_side_first ? lb.bx : lb.bz;
    std::size_t best = side_min_weight(first_stab, first_log, max_dim);
    if (best > 1) best = std::min(best, side_min_weight(second_stab, second_log, max_dim));
    return best;
}

EnergyReport energy_report(const CssCode& c, const BitVector& w, Basis basis) {
    if (w.size() != c.num_qubits())
        throw std::invalid_argument("energy_report: word length mismatch");
    const BitMatrix& family = basis == Basis::Z ? c.hx() : c.hz();
    const BitMatrix& conjugate = basis == Basis::Z ? c.hz() : c.hx();
    EnergyReport rep;
    rep.family_checks = family.rows();
    rep.violated = 0;
    for (std::size_t i = 0; i < family.rows(); ++i)
        rep.violated += family.row(i).dot(w);
    const std::size_t total = c.hx().rows() + c.hz().rows();
    rep.per_family = rep.family_checks == 0
                         ? 0.0
                         : static_cast<double>(rep.violated) /
                               (2.0 * static_cast<double>(rep.family_checks));
    rep.overall = total == 0 ? 0.0
                             : static_cast<double>(rep.violated) / static_cast<double>(total);
    rep.conjugate_satisfied = true;
    for (std::size_t i = 0; i < conjugate.rows() && rep.conjugate_satisfied; ++i)
        if (conjugate.row(i).dot(w)) rep.conjugate_satisfied = false;
    return rep;
}

double energy(const CssCode& c, const BitVector& w, Basis basis) {
    return energy_report(c, w, basis).per_family;
}

PartitionSets::PartitionSets(const CssCode& c, const LogicalBasis& lb, std::size_t index)
    : code_(c) {
    if (index >= lb.bx.size() || index >= lb.bz.size())
        throw std::out_of_range("PartitionSets: logical index " + std::to_string(index) +
                                " out of range");
    bx_ = lb.bx[index];
    bz_ = lb.bz[index];
}

PartitionSets::PartitionSets(const CssCode& c, BitVector bx_i, BitVector bz_i)
    : code_(c), bx_(std::move(bx_i)), bz_(std::move(bz_i)) {
    if (bx_.size() != c.num_qubits() || bz_.size() != c.num_qubits())
        throw std::invalid_argument("PartitionSets: pairing vector length mismatch");
    if (!bx_.dot(bz_))
        throw std::invalid_argument("PartitionSets: pairing <bx, bz> must be 1");
}

std::optional<int> PartitionSets::z_class(const BitVector& x) const {
    for (std::size_t i = 0; i < code_.hz().rows(); ++i)
        if (code_.hz().row(i).dot(x)) return std::nullopt;
    return static_cast<int>(x.dot(bz_));
}

std::optional<int> PartitionSets::x_class(const BitVector& x) const {
    for (std::size_t i = 0; i < code_.hx().rows(); ++i)
        if (code_.hx().row(i).dot(x)) return std::nullopt;
    return static_cast<int>(x.dot(bx_));
}

} // namespace epc
