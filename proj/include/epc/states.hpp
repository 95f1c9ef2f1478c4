#pragma once

// Exact measurement statistics of one superposed logical qubit in a CSS
// code under Pauli corruption, interval uncertainty checks, Voronoi cell
// classification against declared error families, and the two-cell
// partition witness with its column-audit distance bound. Everything is
// coset bookkeeping; no statevectors.

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "epc/css.hpp"
#include "epc/gf2.hpp"
#include "epc/hgp.hpp"

namespace epc {

// Endpoints of the mass interval [1/2 - 1/(2*sqrt 2), 1/2 + 1/(2*sqrt 2)]
// and the cell-mass floor c0 = lo/2.
double uncertainty_interval_lo();
double uncertainty_interval_hi();
double cell_mass_floor();

struct PauliError {
    BitVector ex; // X-part support
    BitVector ez; // Z-part support

    static PauliError none(std::size_t n);
    BitVector support() const; // union of the two supports
    std::size_t support_size() const;
    double epsilon() const; // |support| / n
};

struct LogicalStateSpec {
    CssCode code;
    LogicalBasis basis;
    std::size_t logical_index = 0;
    std::complex<double> alpha{1.0, 0.0};
    std::complex<double> beta{0.0, 0.0};
    BitVector r0; // Z-outcome representative of the pairing-0 coset
    BitVector r1; // r0 + bx_i

    const BitVector& bx() const { return basis.bx[logical_index]; }
    const BitVector& bz() const { return basis.bz[logical_index]; }
};

// r0 defaults to the zero vector; when given it must lie in ker hz and
// pair to 0 with bz_i.
LogicalStateSpec make_logical_state(CssCode code, LogicalBasis basis, std::size_t index,
                                    std::complex<double> alpha, std::complex<double> beta,
                                    std::optional<BitVector> r0 = std::nullopt);

struct BasisMasses {
    Basis basis = Basis::Z;
    bool voronoi = false; // true when the sets are error-fattened cells
    double in0 = 0.0;     // mass of C_0 (or S_0)
    double in1 = 0.0;     // mass of C_1 (or S_1)
    double elsewhere = 0.0;
    bool resolved_all = true; // false when some coset fell to "elsewhere"
                              // only because classification was unresolved

    double min_mass() const { return in0 < in1 ? in0 : in1; }
};

struct VoronoiSpec {
    enum class Family { GlobalBall, UniformColumn };

    Basis basis = Basis::Z;
    PartitionSets sets;
    Family family = Family::GlobalBall;
    std::size_t ball_radius = 0; // GlobalBall: |e| <= ball_radius
    HgpIndex index;              // UniformColumn
    // Per-line fraction cap of the uniform family. The lines are the
    // separating direction of the cells: V and E columns for X-basis
    // cells (whose difference words are column-heavy), V and E rows for
    // Z-basis cells.
    double nu = 0.0;
    std::size_t budget = std::size_t{1} << 22;
};

enum class VoronoiCell { Cell0, Cell1, Unresolved, Ambiguous };

// Membership of an error vector in the declared family.
bool in_error_family(const BitVector& e, const VoronoiSpec& spec);

// All family members, smallest weights first; throws when the family
// size exceeds the budget.
std::vector<BitVector> enumerate_error_family(const VoronoiSpec& spec);

// With a planted error the basis-relevant part is subtracted and the
// residue classified by syndrome plus pairing; without one a bounded
// brute-force search over the family runs. Ambiguous means both cells
// certified, which would falsify cell disjointness.
VoronoiCell voronoi_classify(const BitVector& x, const VoronoiSpec& spec,
                             const PauliError* planted = nullptr);

BasisMasses zbasis_masses(const LogicalStateSpec& s, const PauliError& err,
                          const PartitionSets& sets);
BasisMasses zbasis_masses(const LogicalStateSpec& s, const PauliError& err,
                          const VoronoiSpec& spec);
BasisMasses xbasis_masses(const LogicalStateSpec& s, const PauliError& err,
                          const PartitionSets& sets);
BasisMasses xbasis_masses(const LogicalStateSpec& s, const PauliError& err,
                          const VoronoiSpec& spec);

struct LogicalExpectations {
    double exp_z;
    double exp_x;
};

LogicalExpectations logical_expectations(const LogicalStateSpec& s, const PauliError& err);

struct UncertaintyReport {
    bool ok;         // some basis's smaller mass reaches the interval
    double z_margin; // min Z-mass minus the interval's lower endpoint
    double x_margin;
};

// Code states only (err = 0 by hypothesis).
UncertaintyReport uncertainty_check(const LogicalStateSpec& s);

// Exact Z-basis marginal on a subset of qubit indices; the projected
// stabilizer span must have dimension <= 20.
std::vector<std::pair<BitVector, double>> zbasis_marginal(const LogicalStateSpec& s,
                                                          const PauliError& err,
                                                          const std::vector<std::size_t>& keep);

// Per-direction support fractions of an error part on the product
// layout: max over V-columns of |support in column| / n and the E, row
// counterparts.
struct DirectionalProfile {
    std::size_t v_col_max = 0, v_row_max = 0, e_col_max = 0, e_row_max = 0;
    double v_col_frac = 0.0, v_row_frac = 0.0, e_col_frac = 0.0, e_row_frac = 0.0;
    double max_frac = 0.0;
};

DirectionalProfile measure_profile(const BitVector& part, const HgpIndex& index);

struct PartitionWitness {
    Basis basis = Basis::Z; // basis whose two cell masses clear the floor
    double mass0 = 0.0;
    double mass1 = 0.0;
    double nu = 0.0;               // family parameter the error was certified against
    double min_distance_lb = 0.0;  // audit margin with the measured directional profile
    double min_distance_lb_at_nu = 0.0; // audit margin at the declared nu for both blocks
    DirectionalProfile profile_x;  // of err.ex
    DirectionalProfile profile_z;  // of err.ez
    bool ok = false;               // both masses >= cell_mass_floor()
};

// The error must lie in the uniform family (all four directions) at nu.
// The distance bound subtracts twice the relevant directional error
// budget from the audited column minima: Z-basis cells separate along
// rows (audit columns transposed), X-basis cells along columns.
PartitionWitness partition_witness(const LogicalStateSpec& s, const PauliError& err,
                                   const HgpIndex& index, double nu,
                                   const LocalizedDistanceReport& audit);

} // namespace epc
