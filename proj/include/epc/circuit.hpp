#pragma once

// Layered quantum circuits of 1- and 2-qubit gates, a small exact
// statevector simulator with computational-basis marginals, and
// light-cone blow-up analysis.

#include <complex>
#include <cstddef>
#include <vector>

#include "epc/gf2.hpp"

namespace epc {

struct Gate {
    std::vector<std::size_t> qubits;             // 1 or 2 distinct indices
    std::vector<std::complex<double>> unitary;   // row-major 2x2 or 4x4
};

struct Circuit {
    std::size_t n = 0;
    std::vector<std::vector<Gate>> layers;

    std::size_t depth() const { return layers.size(); }
};

// Throws when a layer reuses a qubit, an index is out of range, a gate
// matrix has the wrong shape, or U * U^dagger deviates from the
// identity by more than 1e-10.
void validate_circuit(const Circuit& c);

struct Distribution {
    std::size_t n = 0;
    std::vector<std::pair<BitVector, double>> support; // positive masses

    double total_mass() const;
};

// Exact output distribution of C applied to |0...0>, marginalized to the
// first `keep` qubits. Requires c.n <= 20.
Distribution simulate(const Circuit& c, std::size_t keep);

struct LightConeReport {
    std::vector<std::size_t> cone_sizes; // per output qubit
    std::size_t blow_up = 1;             // max cone size
};

LightConeReport light_cones(const Circuit& c);

} // namespace epc
