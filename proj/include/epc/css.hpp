#pragma once

// CSS stabilizer codes over GF(2): construction with orthogonality
// checking, lazily cached ranks, paired logical bases, exact distance,
// check-term energies, and the two-set partition of a syndrome-zero
// sector induced by a logical pairing.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epc/gf2.hpp"

namespace epc {

class CssCode {
  public:
    CssCode() = default;
    CssCode(BitMatrix hx, BitMatrix hz);

    const BitMatrix& hx() const { return hx_; }
    const BitMatrix& hz() const { return hz_; }
    std::size_t num_qubits() const { return n_; }
    std::size_t rank_x() const;
    std::size_t rank_z() const;
    std::size_t k() const;

  private:
    BitMatrix hx_, hz_;
    std::size_t n_ = 0;
    struct RankCache {
        std::optional<std::size_t> rx, rz;
    };
    std::shared_ptr<RankCache> cache_;
};

// Builds the code after verifying hx * hz^T = 0; on failure reports the
// first offending row pair.
CssCode make_css(BitMatrix hx, BitMatrix hz);

struct LogicalBasis {
    std::vector<BitVector> bx; // representatives in ker hz, independent mod rowspace(hx)
    std::vector<BitVector> bz; // representatives in ker hx, independent mod rowspace(hz)
};

// Paired basis with <bx_i, bz_j> = [i == j].
LogicalBasis logical_basis(const CssCode& c);

// Exact minimum weight over both nontrivial logical classes; enumerates
// the smaller syndrome-zero space first, dimension cap 26 per side.
std::size_t css_distance_exhaustive(const CssCode& c, std::size_t max_dim = 26);

enum class Basis { X, Z };

inline const char* basis_name(Basis b) { return b == Basis::X ? "X" : "Z"; }

struct EnergyReport {
    std::size_t violated;     // violated checks in the evaluated family
    std::size_t family_checks;
    double per_family;        // violated / (2 * family_checks)
    double overall;           // violated / (total checks)
    bool conjugate_satisfied; // word lies in the kernel of the other family
};

// Energy of a basis word: basis Z evaluates the hx family (whose checks
// act by X on all qubits and flip no Z outcome statistics), basis X the
// hz family. A word with conjugate_satisfied false sits outside the
// classical configuration space of the chosen basis.
EnergyReport energy_report(const CssCode& c, const BitVector& w, Basis basis);
double energy(const CssCode& c, const BitVector& w, Basis basis);

// Membership predicates for the partition of a syndrome-zero sector into
// the two classes of a designated logical pairing.
class PartitionSets {
  public:
    PartitionSets(const CssCode& c, const LogicalBasis& lb, std::size_t index);
    PartitionSets(const CssCode& c, BitVector bx_i, BitVector bz_i);

    // Class of x inside ker hz (outcome sector of Z measurements):
    // nullopt when hz * x != 0, else <x, bz_i>.
    std::optional<int> z_class(const BitVector& x) const;
    // Class of x inside ker hx, keyed by <x, bx_i>.
    std::optional<int> x_class(const BitVector& x) const;

    const BitVector& bx() const { return bx_; }
    const BitVector& bz() const { return bz_; }
    const CssCode& code() const { return code_; }

  private:
    CssCode code_;
    BitVector bx_, bz_;
};

} // namespace epc
