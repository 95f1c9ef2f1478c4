#include "epc/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace epc {

double uncertainty_interval_lo() { return 0.5 - 0.5 / std::sqrt(2.0); }
double uncertainty_interval_hi() { return 0.5 + 0.5 / std::sqrt(2.0); }
double cell_mass_floor() { return 0.5 * uncertainty_interval_lo(); }

PauliError PauliError::none(std::size_t n) { return PauliError{BitVector(n), BitVector(n)}; }

BitVector PauliError::support() const {
    BitVector out = ex ^ ez;
    out ^= ex & ez; // union = symmetric difference + intersection
    return out;
}

std::size_t PauliError::support_size() const { return support().weight(); }

double PauliError::epsilon() const {
    return ex.size() == 0 ? 0.0
                          : static_cast<double>(support_size()) / static_cast<double>(ex.size());
}

LogicalStateSpec make_logical_state(CssCode code, LogicalBasis basis, std::size_t index,
                                    std::complex<double> alpha, std::complex<double> beta,
                                    std::optional<BitVector> r0) {
    if (index >= basis.bx.size() || index >= basis.bz.size())
        throw std::out_of_range("make_logical_state: logical index out of range");
    const double norm = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("make_logical_state: |alpha|^2 + |beta|^2 != 1");
    LogicalStateSpec s;
    s.code = std::move(code);
    s.basis = std::move(basis);
    s.logical_index = index;
    s.alpha = alpha;
    s.beta = beta;
    const std::size_t n = s.code.num_qubits();
    if (s.bx().size() != n || s.bz().size() != n)
        throw std::invalid_argument("make_logical_state: logical vector length mismatch");
    if (!s.bx().dot(s.bz()))
        throw std::invalid_argument("make_logical_state: <bx_i, bz_i> must be 1");
    s.r0 = r0 ? std::move(*r0) : BitVector(n);
    if (s.r0.size() != n)
        throw std::invalid_argument("make_logical_state: r0 length mismatch");
    for (std::size_t i = 0; i < s.code.hz().rows(); ++i)
        if (s.code.hz().row(i).dot(s.r0))
            throw std::invalid_argument("make_logical_state: r0 outside ker hz");
    if (s.r0.dot(s.bz()))
        throw std::invalid_argument("make_logical_state: r0 must pair to 0 with bz_i");
    s.r1 = s.r0 ^ s.bx();
    return s;
}

namespace {

// Line index sets of the product layout in the separating direction of
// the given basis: columns for X, rows for Z.
std::vector<std::vector<std::size_t>> family_lines(const HgpIndex& idx, Basis basis) {
    std::vector<std::vector<std::size_t>> lines;
    lines.reserve(idx.n + idx.m);
    for (std::size_t v = 0; v < idx.n; ++v) {
        std::vector<std::size_t> line(idx.n);
        for (std::size_t u = 0; u < idx.n; ++u)
            line[u] = basis == Basis::X ? idx.vv(u, v) : idx.vv(v, u);
        lines.push_back(std::move(line));
    }
    for (std::size_t f = 0; f < idx.m; ++f) {
        std::vector<std::size_t> line(idx.m);
        for (std::size_t e = 0; e < idx.m; ++e)
            line[e] = basis == Basis::X ? idx.ee(e, f) : idx.ee(f, e);
        lines.push_back(std::move(line));
    }
    return lines;
}

std::size_t line_cap(const HgpIndex& idx, std::size_t line, double nu) {
    const std::size_t len = line < idx.n ? idx.n : idx.m;
    return static_cast<std::size_t>(std::floor(nu * static_cast<double>(len) + 1e-12));
}

double binomial_sum(std::size_t n, std::size_t cap) {
    double total = 0.0;
    double c = 1.0;
    for (std::size_t i = 0; i <= cap && i <= n; ++i) {
        total += c;
        c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    return total;
}

double family_size(const VoronoiSpec& spec, std::size_t n_qubits) {
    if (spec.family == VoronoiSpec::Family::GlobalBall)
        return binomial_sum(n_qubits, spec.ball_radius);
    double total = 1.0;
    const double cap = 2.0 * static_cast<double>(spec.budget) + 1.0;
    const double per_v = binomial_sum(spec.index.n, line_cap(spec.index, 0, spec.nu));
    const double per_e =
        spec.index.m == 0 ? 1.0 : binomial_sum(spec.index.m, line_cap(spec.index, spec.index.n, spec.nu));
    for (std::size_t i = 0; i < spec.index.n && total < cap; ++i) total *= per_v;
    for (std::size_t i = 0; i < spec.index.m && total < cap; ++i) total *= per_e;
    return total;
}

} // namespace

bool in_error_family(const BitVector& e, const VoronoiSpec& spec) {
    if (spec.family == VoronoiSpec::Family::GlobalBall)
        return e.weight() <= spec.ball_radius;
    const HgpIndex& idx = spec.index;
    if (e.size() != idx.num_qubits()) return false;
    std::vector<std::size_t> count(idx.n + idx.m, 0);
    bool ok = true;
    e.for_each_set_bit([&](std::size_t q) {
        if (idx.is_vv(q)) {
            const auto [u, v] = idx.decode_vv(q);
            ++count[spec.basis == Basis::X ? v : u];
        } else {
            const auto [a, b] = idx.decode_ee(q);
            ++count[idx.n + (spec.basis == Basis::X ? b : a)];
        }
    });
    for (std::size_t l = 0; l < count.size(); ++l)
        if (count[l] > line_cap(idx, l, spec.nu)) ok = false;
    return ok;
}

std::vector<BitVector> enumerate_error_family(const VoronoiSpec& spec) {
    const std::size_t N = spec.sets.code().num_qubits();
    if (family_size(spec, N) > static_cast<double>(spec.budget))
        throw std::length_error("enumerate_error_family: family exceeds budget");

    std::vector<BitVector> out;
    if (spec.family == VoronoiSpec::Family::GlobalBall) {
        BitVector scratch(N);
        // Depth-first choice of up to ball_radius positions.
        std::vector<std::size_t> chosen;
        const auto rec = [&](auto&& self, std::size_t start) -> void {
            out.push_back(scratch);
            if (chosen.size() == spec.ball_radius) return;
            for (std::size_t i = start; i < N; ++i) {
                scratch.set(i, true);
                chosen.push_back(i);
                self(self, i + 1);
                chosen.pop_back();
                scratch.set(i, false);
            }
        };
        rec(rec, 0);
    } else {
        const auto lines = family_lines(spec.index, spec.basis);
        BitVector scratch(N);
        std::vector<std::vector<BitVector>> line_patterns(lines.size());
        for (std::size_t l = 0; l < lines.size(); ++l) {
            const std::size_t cap = line_cap(spec.index, l, spec.nu);
            std::vector<std::size_t> chosen;
            const auto rec = [&](auto&& self, std::size_t start) -> void {
                line_patterns[l].push_back(scratch);
                if (chosen.size() == cap) return;
                for (std::size_t i = start; i < lines[l].size(); ++i) {
                    scratch.set(lines[l][i], true);
                    chosen.push_back(i);
                    self(self, i + 1);
                    chosen.pop_back();
                    scratch.set(lines[l][i], false);
                }
            };
            rec(rec, 0);
        }
        BitVector cur(N);
        const auto cross = [&](auto&& self, std::size_t l) -> void {
            if (l == line_patterns.size()) {
                out.push_back(cur);
                return;
            }
            for (const BitVector& p : line_patterns[l]) {
                cur ^= p;
                self(self, l + 1);
                cur ^= p;
            }
        };
        cross(cross, 0);
    }
    std::stable_sort(out.begin(), out.end(), [](const BitVector& a, const BitVector& b) {
        return a.weight() < b.weight();
    });
    return out;
}

namespace {

std::optional<int> classify_residue(const BitVector& y, const VoronoiSpec& spec) {
    return spec.basis == Basis::Z ? spec.sets.z_class(y) : spec.sets.x_class(y);
}

} // namespace

VoronoiCell voronoi_classify(const BitVector& x, const VoronoiSpec& spec,
                             const PauliError* planted) {
    if (planted != nullptr) {
        const BitVector& shift = spec.basis == Basis::Z ? planted->ex : planted->ez;
        if (in_error_family(shift, spec)) {
            const auto cls = classify_residue(x ^ shift, spec);
            if (cls) return *cls == 0 ? VoronoiCell::Cell0 : VoronoiCell::Cell1;
            return VoronoiCell::Unresolved;
        }
    }
    const std::size_t N = spec.sets.code().num_qubits();
    if (family_size(spec, N) > static_cast<double>(spec.budget)) return VoronoiCell::Unresolved;
    bool saw0 = false, saw1 = false;
    for (const BitVector& e : enumerate_error_family(spec)) {
        const auto cls = classify_residue(x ^ e, spec);
        if (!cls) continue;
        (*cls == 0 ? saw0 : saw1) = true;
    }
    if (saw0 && saw1) return VoronoiCell::Ambiguous;
    if (saw0) return VoronoiCell::Cell0;
    if (saw1) return VoronoiCell::Cell1;
    return VoronoiCell::Unresolved;
}

BasisMasses zbasis_masses(const LogicalStateSpec& s, const PauliError& err,
                          const PartitionSets& sets) {
    BasisMasses bm;
    bm.basis = Basis::Z;
    const double p[2] = {std::norm(s.alpha), std::norm(s.beta)};
    const BitVector reps[2] = {s.r0 ^ err.ex, s.r1 ^ err.ex};
    for (int a = 0; a < 2; ++a) {
        const auto cls = sets.z_class(reps[a]);
        if (!cls)
            bm.elsewhere += p[a];
        else if (*cls == 0)
            bm.in0 += p[a];
        else
            bm.in1 += p[a];
    }
    return bm;
}

BasisMasses zbasis_masses(const LogicalStateSpec& s, const PauliError& err,
                          const VoronoiSpec& spec) {
    if (spec.basis != Basis::Z)
        throw std::invalid_argument("zbasis_masses: VoronoiSpec must target the Z basis");
    BasisMasses bm;
    bm.basis = Basis::Z;
    bm.voronoi = true;
    const double p[2] = {std::norm(s.alpha), std::norm(s.beta)};
    const BitVector reps[2] = {s.r0 ^ err.ex, s.r1 ^ err.ex};
    for (int a = 0; a < 2; ++a) {
        if (p[a] == 0.0) continue;
        const VoronoiCell cell = voronoi_classify(reps[a], spec, &err);
        if (cell == VoronoiCell::Ambiguous)
            throw std::runtime_error("zbasis_masses: ambiguous Voronoi cell "
                                     "(disjointness falsified)");
        if (cell == VoronoiCell::Cell0)
            bm.in0 += p[a];
        else if (cell == VoronoiCell::Cell1)
            bm.in1 += p[a];
        else {
            bm.elsewhere += p[a];
            bm.resolved_all = false;
        }
    }
    return bm;
}

BasisMasses xbasis_masses(const LogicalStateSpec& s, const PauliError& err,
                          const PartitionSets& sets) {
    BasisMasses bm;
    bm.basis = Basis::X;
    const double q0 = 0.5 * std::norm(s.alpha + s.beta);
    const double q1 = 0.5 * std::norm(s.alpha - s.beta);
    const auto cls = sets.x_class(err.ez);
    if (!cls) {
        bm.elsewhere = q0 + q1;
        return bm;
    }
    if (*cls == 0) {
        bm.in0 = q0;
        bm.in1 = q1;
    } else {
        bm.in0 = q1;
        bm.in1 = q0;
    }
    return bm;
}

BasisMasses xbasis_masses(const LogicalStateSpec& s, const PauliError& err,
                          const VoronoiSpec& spec) {
    if (spec.basis != Basis::X)
        throw std::invalid_argument("xbasis_masses: VoronoiSpec must target the X basis");
    BasisMasses bm;
    bm.basis = Basis::X;
    bm.voronoi = true;
    const double q[2] = {0.5 * std::norm(s.alpha + s.beta), 0.5 * std::norm(s.alpha - s.beta)};
    const BitVector reps[2] = {err.ez, err.ez ^ s.bz()};
    for (int h = 0; h < 2; ++h) {
        if (q[h] == 0.0) continue;
        const VoronoiCell cell = voronoi_classify(reps[h], spec, &err);
        if (cell == VoronoiCell::Ambiguous)
            throw std::runtime_error("xbasis_masses: ambiguous Voronoi cell "
                                     "(disjointness falsified)");
        if (cell == VoronoiCell::Cell0)
            bm.in0 += q[h];
        else if (cell == VoronoiCell::Cell1)
            bm.in1 += q[h];
        else {
            bm.elsewhere += q[h];
            bm.resolved_all = false;
        }
    }
    return bm;
}

LogicalExpectations logical_expectations(const LogicalStateSpec& s, const PauliError& err) {
    const double sign_z = err.ex.dot(s.bz()) ? -1.0 : 1.0;
    const double sign_x = err.ez.dot(s.bx()) ? -1.0 : 1.0;
    const double exp_z = std::norm(s.alpha) - std::norm(s.beta);
    const double exp_x = 2.0 * (std::conj(s.alpha) * s.beta).real();
    return LogicalExpectations{sign_z * exp_z, sign_x * exp_x};
}

UncertaintyReport uncertainty_check(const LogicalStateSpec& s) {
    const PartitionSets sets(s.code, s.bx(), s.bz());
    const PauliError none = PauliError::none(s.code.num_qubits());
    const BasisMasses z = zbasis_masses(s, none, sets);
    const BasisMasses x = xbasis_masses(s, none, sets);
    UncertaintyReport rep;
    rep.z_margin = z.min_mass() - uncertainty_interval_lo();
    rep.x_margin = x.min_mass() - uncertainty_interval_lo();
    rep.ok = rep.z_margin >= -1e-12 || rep.x_margin >= -1e-12;
    return rep;
}

std::vector<std::pair<BitVector, double>> zbasis_marginal(const LogicalStateSpec& s,
                                                          const PauliError& err,
                                                          const std::vector<std::size_t>& keep) {
    const std::size_t k = keep.size();
    const auto project = [&](const BitVector& v) {
        BitVector p(k);
        for (std::size_t i = 0; i < k; ++i)
            if (v.get(keep[i])) p.set(i, true);
        return p;
    };
    RowEchelon ech(k);
    std::vector<BitVector> basis;
    for (std::size_t i = 0; i < s.code.hx().rows(); ++i) {
        BitVector p = project(s.code.hx().row(i));
        if (ech.absorb(p)) basis.push_back(std::move(p));
    }
    if (basis.size() > 20)
        throw std::length_error("zbasis_marginal: projected span dimension " +
                                std::to_string(basis.size()) + " exceeds 20");
    std::unordered_map<BitVector, double, BitVectorHash> acc;
    const double p[2] = {std::norm(s.alpha), std::norm(s.beta)};
    const BitVector reps[2] = {project(s.r0 ^ err.ex), project(s.r1 ^ err.ex)};
    const double share = 1.0 / static_cast<double>(std::uint64_t{1} << basis.size());
    for (int a = 0; a < 2; ++a) {
        if (p[a] == 0.0) continue;
        BitVector cur = reps[a];
        acc[cur] += p[a] * share;
        const std::uint64_t total = std::uint64_t{1} << basis.size();
        for (std::uint64_t i = 1; i < total; ++i) {
            cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
            acc[cur] += p[a] * share;
        }
    }
    std::vector<std::pair<BitVector, double>> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.words() < b.first.words();
    });
    return out;
}

DirectionalProfile measure_profile(const BitVector& part, const HgpIndex& idx) {
    std::vector<std::size_t> vc(idx.n, 0), vr(idx.n, 0), ec(idx.m, 0), er(idx.m, 0);
    part.for_each_set_bit([&](std::size_t q) {
        if (idx.is_vv(q)) {
            const auto [u, v] = idx.decode_vv(q);
            ++vr[u];
            ++vc[v];
        } else {
            const auto [e, f] = idx.decode_ee(q);
            ++er[e];
            ++ec[f];
        }
    });
    DirectionalProfile p;
    for (std::size_t v = 0; v < idx.n; ++v) {
        p.v_col_max = std::max(p.v_col_max, vc[v]);
        p.v_row_max = std::max(p.v_row_max, vr[v]);
    }
    for (std::size_t e = 0; e < idx.m; ++e) {
        p.e_col_max = std::max(p.e_col_max, ec[e]);
        p.e_row_max = std::max(p.e_row_max, er[e]);
    }
    if (idx.n > 0) {
        p.v_col_frac = static_cast<double>(p.v_col_max) / static_cast<double>(idx.n);
        p.v_row_frac = static_cast<double>(p.v_row_max) / static_cast<double>(idx.n);
    }
    if (idx.m > 0) {
        p.e_col_frac = static_cast<double>(p.e_col_max) / static_cast<double>(idx.m);
        p.e_row_frac = static_cast<double>(p.e_row_max) / static_cast<double>(idx.m);
    }
    p.max_frac = std::max({p.v_col_frac, p.v_row_frac, p.e_col_frac, p.e_row_frac});
    return p;
}

PartitionWitness partition_witness(const LogicalStateSpec& s, const PauliError& err,
                                   const HgpIndex& index, double nu,
                                   const LocalizedDistanceReport& audit) {
    const BitVector sup = err.support();
    const DirectionalProfile sup_profile = measure_profile(sup, index);
    if (sup_profile.max_frac > nu + 1e-12)
        throw std::invalid_argument("partition_witness: error outside the uniform family at nu");

    PartitionWitness w;
    w.nu = nu;
    w.profile_x = measure_profile(err.ex, index);
    w.profile_z = measure_profile(err.ez, index);

    const double pz = std::min(std::norm(s.alpha), std::norm(s.beta));
    const double px = std::min(0.5 * std::norm(s.alpha + s.beta),
                               0.5 * std::norm(s.alpha - s.beta));
    w.basis = pz >= px ? Basis::Z : Basis::X;

    const PartitionSets sets(s.code, s.bx(), s.bz());
    VoronoiSpec vspec{w.basis, sets, VoronoiSpec::Family::UniformColumn, 0, index, nu};
    const BasisMasses bm = w.basis == Basis::Z ? zbasis_masses(s, err, vspec)
                                               : xbasis_masses(s, err, vspec);
    w.mass0 = bm.in0;
    w.mass1 = bm.in1;

    // Z-basis cells separate along rows of the X-part shift; X-basis
    // cells along columns of the Z-part shift. The audit tabulates
    // column weights; the transposed table for rows is identical by the
    // layout symmetry of the self-product.
    const double v_sub = w.basis == Basis::Z ? 2.0 * static_cast<double>(w.profile_x.v_row_max)
                                             : 2.0 * static_cast<double>(w.profile_z.v_col_max);
    const double e_sub = w.basis == Basis::Z ? 2.0 * static_cast<double>(w.profile_x.e_row_max)
                                             : 2.0 * static_cast<double>(w.profile_z.e_col_max);
    w.min_distance_lb = audit.partition_margin(v_sub, e_sub);
    w.min_distance_lb_at_nu =
        audit.partition_margin(2.0 * nu * static_cast<double>(index.n),
                               2.0 * nu * static_cast<double>(index.m));
    w.ok = std::min(w.mass0, w.mass1) >= cell_mass_floor() - 1e-12;
    return w;
}

} // namespace epc
