#include "epc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace epc {

namespace {

void check_unitary(const std::vector<std::complex<double>>& u, std::size_t dim,
                   std::size_t layer, std::size_t slot) {
    const auto fail = [&](const std::string& what) {
        throw std::invalid_argument("validate_circuit: gate " + std::to_string(slot) +
                                    " in layer " + std::to_string(layer) + ": " + what);
    };
    if (u.size() != dim * dim) fail("matrix shape mismatch");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::complex<double> dot{0.0, 0.0};
            for (std::size_t k = 0; k < dim; ++k)
                dot += u[i * dim + k] * std::conj(u[j * dim + k]);
            const double target = i == j ? 1.0 : 0.0;
            if (std::abs(dot - std::complex<double>{target, 0.0}) > 1e-10)
                fail("matrix is not unitary within 1e-10");
        }
}

} // namespace

void validate_circuit(const Circuit& c) {
    for (std::size_t l = 0; l < c.layers.size(); ++l) {
        std::vector<bool> used(c.n, false);
        for (std::size_t s = 0; s < c.layers[l].size(); ++s) {
            const Gate& g = c.layers[l][s];
            if (g.qubits.empty() || g.qubits.size() > 2)
                throw std::invalid_argument("validate_circuit: gates act on 1 or 2 qubits");
            for (std::size_t q : g.qubits) {
                if (q >= c.n)
                    throw std::invalid_argument("validate_circuit: qubit index out of range");
                if (used[q])
                    throw std::invalid_argument("validate_circuit: qubit " + std::to_string(q) +
                                                " reused within layer " + std::to_string(l));
                used[q] = true;
            }
            if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1])
                throw std::invalid_argument("validate_circuit: duplicate qubit in 2-qubit gate");
            check_unitary(g.unitary, g.qubits.size() == 1 ? 2 : 4, l, s);
        }
    }
}

double Distribution::total_mass() const {
    double t = 0.0;
    for (const auto& [x, m] : support) t += m;
    return t;
}

Distribution simulate(const Circuit& c, std::size_t keep) {
    if (c.n > 20)
        throw std::length_error("simulate: too-many-qubits (" + std::to_string(c.n) +
                                " > 20)");
    if (keep > c.n) throw std::invalid_argument("simulate: keep exceeds qubit count");
    validate_circuit(c);

    const std::size_t dim = std::size_t{1} << c.n;
    std::vector<std::complex<double>> state(dim, {0.0, 0.0});
    state[0] = {1.0, 0.0};

    for (const auto& layer : c.layers) {
        for (const Gate& g : layer) {
            if (g.qubits.size() == 1) {
                const std::size_t q = g.qubits[0];
                const std::size_t bit = std::size_t{1} << q;
                for (std::size_t i = 0; i < dim; ++i) {
                    if (i & bit) continue;
                    const std::complex<double> a0 = state[i];
                    const std::complex<double> a1 = state[i | bit];
                    state[i] = g.unitary[0] * a0 + g.unitary[1] * a1;
                    state[i | bit] = g.unitary[2] * a0 + g.unitary[3] * a1;
                }
            } else {
                // Basis order |q0 q1> with q0 the high bit of the 2-bit index.
                const std::size_t b0 = std::size_t{1} << g.qubits[0];
                const std::size_t b1 = std::size_t{1} << g.qubits[1];
                for (std::size_t i = 0; i < dim; ++i) {
                    if (i & (b0 | b1)) continue;
                    const std::size_t idx[4] = {i, i | b1, i | b0, i | b0 | b1};
                    std::complex<double> in[4];
                    for (int k = 0; k < 4; ++k) in[k] = state[idx[k]];
                    for (int r = 0; r < 4; ++r) {
                        std::complex<double> acc{0.0, 0.0};
                        for (int k = 0; k < 4; ++k) acc += g.unitary[r * 4 + k] * in[k];
                        state[idx[r]] = acc;
                    }
                }
            }
        }
    }

    const std::size_t kept = std::size_t{1} << keep;
    const std::size_t mask = kept - 1;
    std::vector<double> mass(kept, 0.0);
    for (std::size_t i = 0; i < dim; ++i) mass[i & mask] += std::norm(state[i]);

    Distribution out;
    out.n = keep;
    for (std::size_t x = 0; x < kept; ++x) {
        if (mass[x] <= 1e-15) continue;
        BitVector bv(keep);
        for (std::size_t b = 0; b < keep; ++b)
            if ((x >> b) & 1u) bv.set(b, true);
        out.support.emplace_back(std::move(bv), mass[x]);
    }
    return out;
}

LightConeReport light_cones(const Circuit& c) {
    std::vector<BitVector> cone(c.n, BitVector(c.n));
    for (std::size_t q = 0; q < c.n; ++q) cone[q].set(q, true);
    for (const auto& layer : c.layers)
        for (const Gate& g : layer)
            if (g.qubits.size() == 2) {
                BitVector merged = cone[g.qubits[0]] | cone[g.qubits[1]];
                cone[g.qubits[0]] = merged;
                cone[g.qubits[1]] = std::move(merged);
            }
    LightConeReport rep;
    rep.cone_sizes.reserve(c.n);
    for (std::size_t q = 0; q < c.n; ++q) rep.cone_sizes.push_back(cone[q].weight());
    rep.blow_up = 1;
    for (std::size_t s : rep.cone_sizes) rep.blow_up = std::max(rep.blow_up, s);
    if (c.n == 0) rep.blow_up = 1;
    return rep;
}

} // namespace epc
