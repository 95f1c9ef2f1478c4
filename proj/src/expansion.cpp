#include "epc/expansion.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace epc {

namespace {

std::size_t radius_from(double ell) {
    if (ell < 0.0) throw std::invalid_argument("expansion: negative radius");
    return static_cast<std::size_t>(std::floor(ell + 1e-12));
}

// Number of length-n strings within Hamming distance r of a fixed
// string; saturates instead of overflowing.
std::uint64_t ball_size(std::size_t n, std::size_t r) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    if (r >= n) return n >= 64 ? kMax : (std::uint64_t(1) << n);
    std::uint64_t total = 0;
    std::uint64_t c = 1;
    for (std::size_t i = 0;; ++i) {
        if (total > kMax - c) return kMax;
        total += c;
        if (i == r) break;
        if (c > kMax / (n - i)) return kMax;
        c = c * (n - i) / (i + 1);
    }
    return total;
}

} // namespace

SetSpec SetSpec::explicit_set(std::vector<BitVector> members) {
    SetSpec s;
    s.kind = Kind::Explicit;
    s.members = std::move(members);
    return s;
}

SetSpec SetSpec::ball(BitVector center, std::size_t radius) {
    SetSpec s;
    s.kind = Kind::Ball;
    s.center = std::move(center);
    s.radius = radius;
    return s;
}

double set_mass(const Distribution& p, const SetSpec& s) {
    double total = 0.0;
    if (s.kind == SetSpec::Kind::Ball) {
        for (const auto& [x, mass] : p.support)
            if (x.hamming(s.center) <= s.radius) total += mass;
        return total;
    }
    std::unordered_set<BitVector, BitVectorHash> in(s.members.begin(), s.members.end());
    for (const auto& [x, mass] : p.support)
        if (in.count(x) != 0) total += mass;
    return total;
}

double boundary_mass(const Distribution& p, const SetSpec& s, double ell) {
    const std::size_t r = radius_from(ell);
    if (r == 0) return 0.0;
    double total = 0.0;
    if (s.kind == SetSpec::Kind::Ball) {
        // From center distance d, the nearest string outside the ball
        // sits at distance radius + 1 - d and the nearest one inside at
        // distance d - radius.
        const bool complement_nonempty = s.radius < p.n;
        for (const auto& [x, mass] : p.support) {
            std::size_t d = x.hamming(s.center);
            bool bd = d <= s.radius ? (complement_nonempty && d + r >= s.radius + 1)
                                    : d <= s.radius + r;
            if (bd) total += mass;
        }
        return total;
    }
    if (s.members.empty()) return 0.0;
    std::unordered_set<BitVector, BitVectorHash> in(s.members.begin(), s.members.end());
    const std::uint64_t ball = ball_size(p.n, r);
    for (const auto& [x, mass] : p.support) {
        if (in.count(x) != 0) {
            // Inside point: in the boundary when some string within r
            // is not a member, detected by comparing the member count
            // inside the radius-r ball against the full ball size.
            std::uint64_t within = 0;
            for (const auto& mb : s.members)
                if (x.hamming(mb) <= r) ++within;
            if (ball > within) total += mass;
        } else {
            for (const auto& mb : s.members) {
                if (x.hamming(mb) <= r) {
                    total += mass;
                    break;
                }
            }
        }
    }
    return total;
}

double expansion_upper(const Distribution& p, const std::vector<SetSpec>& candidates,
                       double ell) {
    double best = std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& s : candidates) {
        double mass = set_mass(p, s);
        if (mass <= 0.0 || mass > 0.5 + 1e-12) continue;
        any = true;
        best = std::min(best, boundary_mass(p, s, ell) / mass);
    }
    if (!any)
        throw std::runtime_error(
            "expansion: no-valid-candidate (every set has mass zero or above 1/2)");
    return best;
}

namespace {

struct SweepResult {
    double min_ratio = std::numeric_limits<double>::infinity();
    std::size_t valid = 0;
    std::size_t violations = 0;
};

// Full power-set sweep over all subsets of {0,1}^n for n <= 4,
// counting sets whose boundary/mass ratio drops below `bound`.
SweepResult sweep_all_sets(const std::array<double, 16>& mass, std::size_t n,
                           std::size_t r, double bound) {
    const std::uint32_t strings = std::uint32_t(1) << n;
    std::array<std::uint32_t, 16> ballmask{};
    for (std::uint32_t a = 0; a < strings; ++a)
        for (std::uint32_t b = 0; b < strings; ++b)
            if (static_cast<std::size_t>(std::popcount(a ^ b)) <= r)
                ballmask[a] |= std::uint32_t(1) << b;
    SweepResult out;
    const std::uint32_t sets = std::uint32_t(1) << strings;
    const std::uint32_t universe = sets - 1;
    for (std::uint32_t set = 1; set < sets; ++set) {
        double pm = 0.0;
        for (std::uint32_t tmp = set; tmp;) {
            unsigned b = static_cast<unsigned>(std::countr_zero(tmp));
            pm += mass[b];
            tmp &= tmp - 1;
        }
        if (pm <= 0.0 || pm > 0.5 + 1e-12) continue;
        double bm = 0.0;
        for (std::uint32_t s = 0; s < strings; ++s) {
            if (mass[s] == 0.0) continue;
            bool inside = (set >> s) & 1u;
            bool bd = inside ? (ballmask[s] & ~set & universe) != 0
                             : (ballmask[s] & set) != 0;
            if (bd) bm += mass[s];
        }
        ++out.valid;
        double ratio = bm / pm;
        out.min_ratio = std::min(out.min_ratio, ratio);
        if (ratio < bound - 1e-12) ++out.violations;
    }
    return out;
}

std::array<double, 16> bucket_masses(const Distribution& p) {
    std::array<double, 16> mass{};
    for (const auto& [x, m] : p.support) {
        std::size_t idx = 0;
        for (std::size_t b = 0; b < p.n; ++b)
            if (x.get(b)) idx |= std::size_t(1) << b;
        mass[idx] += m;
    }
    return mass;
}

} // namespace

double expansion_exhaustive(const Distribution& p, double ell) {
    if (p.n > 4)
        throw std::invalid_argument("expansion: exhaustive sweep supports at most 4 bits");
    SweepResult s = sweep_all_sets(bucket_masses(p), p.n, radius_from(ell),
                                   -std::numeric_limits<double>::infinity());
    if (s.valid == 0)
        throw std::runtime_error(
            "expansion: no-valid-candidate (every set has mass zero or above 1/2)");
    return s.min_ratio;
}

VertexBound theorem_vertex_bound(double n, double B, double gamma) {
    if (!(n >= 1.0) || !(B >= 1.0))
        throw std::invalid_argument("expansion: n and B must be at least 1");
    if (!(gamma >= 0.0) || !(gamma <= 0.5))
        throw std::invalid_argument("expansion: gamma must lie in [0, 1/2]");
    VertexBound out;
    out.ell = 0.25 * B * std::pow(B * n, 0.5 - gamma);
    out.lower_bound = 0.125 * std::pow(n * B, -2.0 * gamma);
    return out;
}

double partition_distance_bound(double mu, double B, double n) {
    if (!(mu > 0.0) || !(mu <= 0.5 + 1e-12))
        throw std::invalid_argument("expansion: invalid-mu (needs 0 < mu <= 1/2)");
    if (!(B >= 1.0) || !(n >= 1.0))
        throw std::invalid_argument("expansion: n and B must be at least 1");
    return 4.0 * std::sqrt(n) * std::pow(B, 1.5) / mu;
}

double depth_lower_bound(double mu, double D, double n) {
    if (!(mu > 0.0) || !(mu <= 0.5 + 1e-12))
        throw std::invalid_argument("expansion: invalid-mu (needs 0 < mu <= 1/2)");
    if (!(D > 0.0) || !(n >= 1.0))
        throw std::invalid_argument("expansion: D must be positive and n at least 1");
    return (2.0 / 3.0) * std::log2(mu * D / (4.0 * std::sqrt(n)));
}

double chebyshev(std::size_t m, double x) {
    if (m == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (std::size_t k = 1; k < m; ++k) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::size_t chebyshev_degree_for(double n, double B, double gamma) {
    if (!(n >= 1.0) || !(B >= 1.0))
        throw std::invalid_argument("expansion: n and B must be at least 1");
    if (!(gamma >= 0.0) || !(gamma <= 0.5))
        throw std::invalid_argument("expansion: gamma must lie in [0, 1/2]");
    return static_cast<std::size_t>(std::ceil(0.5 * std::pow(B * n, 0.5 - gamma)));
}

namespace {

// log(cosh(z)) for z >= 0 without overflowing cosh.
double lncosh(double z) {
    return z + std::log1p(std::exp(-2.0 * z)) - std::log(2.0);
}

// log(T_m(t)) for t >= 1 via T_m(t) = cosh(m * acosh(t)).
double log_cheb_ge1(std::size_t m, double t) {
    double a = std::acosh(std::max(t, 1.0));
    return lncosh(static_cast<double>(m) * a);
}

} // namespace

ChebProfile cheb_operatorless_profile(std::size_t m, double L_size, double n, double B,
                                      double gamma, std::size_t samples) {
    if (m == 0) throw std::invalid_argument("cheb: degree must be positive");
    if (!(L_size > 1.0)) throw std::invalid_argument("cheb: L must exceed 1");
    if (samples < 2) throw std::invalid_argument("cheb: need at least 2 samples");
    if (!(n >= 1.0) || !(B >= 1.0))
        throw std::invalid_argument("cheb: n and B must be at least 1");
    if (!(gamma >= 0.0) || !(gamma <= 0.5))
        throw std::invalid_argument("cheb: gamma must lie in [0, 1/2]");

    const double invL = 1.0 / L_size;
    auto shifted = [&](double x) { return (1.0 + invL - 2.0 * x) / (1.0 - invL); };
    const double denom_log = log_cheb_ge1(m, shifted(0.0));

    auto value = [&](double x) {
        double t = shifted(x);
        double ratio;
        if (t >= 1.0) {
            ratio = std::exp(log_cheb_ge1(m, t) - denom_log);
        } else {
            t = std::max(t, -1.0);
            ratio = std::cos(static_cast<double>(m) * std::acos(t)) * std::exp(-denom_log);
        }
        return 1.0 - ratio;
    };

    ChebProfile out;
    out.m = m;
    out.L = L_size;
    out.gamma = gamma;
    out.gap_bound = 0.25 * std::pow(n * B, -2.0 * gamma);
    out.c_at_zero = value(0.0);
    out.value_at_inv_L = value(invL);
    out.min_on_gap = out.value_at_inv_L;
    out.max_on_range = out.value_at_inv_L;
    out.min_on_range = out.value_at_inv_L;
    for (std::size_t i = 0; i < samples; ++i) {
        double x = static_cast<double>(i) / static_cast<double>(samples - 1);
        double c = value(x);
        out.max_on_range = std::max(out.max_on_range, c);
        out.min_on_range = std::min(out.min_on_range, c);
        if (x >= invL - 1e-15) out.min_on_gap = std::min(out.min_on_gap, c);
    }
    out.zero_exact = out.c_at_zero == 0.0;
    out.range_ok = out.min_on_range >= 0.0 && out.max_on_range <= 2.0;
    out.gap_ok = out.min_on_gap >= out.gap_bound;
    return out;
}

namespace {

// Haar 4x4 unitary: complex Ginibre matrix orthonormalized column by
// column with modified Gram-Schmidt, which keeps the R diagonal real
// positive; that normalization makes the resulting Q Haar distributed.
std::vector<std::complex<double>> haar_unitary4(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<std::array<std::complex<double>, 4>, 4> a;
    for (auto& row : a)
        for (auto& z : row) z = {g(rng), g(rng)};
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            std::complex<double> proj = 0.0;
            for (std::size_t i = 0; i < 4; ++i) proj += std::conj(a[i][k]) * a[i][j];
            for (std::size_t i = 0; i < 4; ++i) a[i][j] -= proj * a[i][k];
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < 4; ++i) norm += std::norm(a[i][j]);
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < 4; ++i) a[i][j] /= norm;
    }
    std::vector<std::complex<double>> u(16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) u[i * 4 + j] = a[i][j];
    return u;
}

} // namespace

Circuit random_circuit(std::size_t n, std::size_t depth, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("random_circuit: need at least 2 qubits");
    Circuit c;
    c.n = n;
    c.layers.resize(depth);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (auto& layer : c.layers) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t i = 0; i + 1 < n; i += 2) {
            Gate gate;
            gate.qubits = {order[i], order[i + 1]};
            gate.unitary = haar_unitary4(rng);
            layer.push_back(std::move(gate));
        }
    }
    return c;
}

VertexTrialReport empirical_vertex_theorem(const VertexTrialConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("vertex trials: need at least one trial");
    if (cfg.min_n < 2 || cfg.max_n < cfg.min_n)
        throw std::invalid_argument("vertex trials: bad qubit range");
    if (cfg.max_n > 20) throw std::invalid_argument("vertex trials: qubit count capped at 20");
    if (cfg.max_depth == 0) throw std::invalid_argument("vertex trials: depth must be positive");
    if (cfg.gammas.empty()) throw std::invalid_argument("vertex trials: need at least one gamma");
    if (cfg.max_explicit_members == 0)
        throw std::invalid_argument("vertex trials: explicit member cap must be positive");

    VertexTrialReport report;
    report.min_margin = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> n_dist(cfg.min_n, cfg.max_n);
    std::uniform_int_distribution<std::size_t> depth_dist(1, cfg.max_depth);

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        const std::size_t n = n_dist(rng);
        const std::size_t depth = depth_dist(rng);
        Circuit c = random_circuit(n, depth, rng);
        Distribution p = simulate(c, n);
        const std::size_t B = std::max<std::size_t>(light_cones(c).blow_up, 1);

        const std::size_t supp = p.support.size();
        std::vector<std::uint32_t> word(supp);
        std::vector<double> mass(supp);
        for (std::size_t i = 0; i < supp; ++i) {
            word[i] = static_cast<std::uint32_t>(p.support[i].first.words()[0]);
            mass[i] = p.support[i].second;
        }
        std::vector<std::size_t> order(supp);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (mass[a] != mass[b]) return mass[a] > mass[b];
            return word[a] < word[b];
        });
        std::vector<char> flag(supp, 0);
        std::vector<std::size_t> scratch(supp);

        for (double gamma : cfg.gammas) {
            VertexTrialEntry e;
            e.trial = trial;
            e.n = n;
            e.depth = depth;
            e.blow_up = B;
            e.gamma = gamma;
            VertexBound vb = theorem_vertex_bound(static_cast<double>(n),
                                                  static_cast<double>(B), gamma);
            e.ell_raw = vb.ell;
            e.ell_eff = std::max<std::size_t>(1, radius_from(vb.ell));
            e.bound = vb.lower_bound;

            if (n == 4) {
                SweepResult s = sweep_all_sets(bucket_masses(p), n, e.ell_eff, e.bound);
                e.exhaustive = true;
                e.candidates = s.valid;
                e.violations = s.violations;
                e.min_ratio = s.valid > 0 ? s.min_ratio : 0.0;
            } else {
                const std::size_t r = e.ell_eff;
                const std::uint64_t ball = ball_size(n, r);
                double best = std::numeric_limits<double>::infinity();
                std::size_t valid = 0;
                std::size_t viol = 0;
                auto consider = [&](double m, double bm) {
                    if (m <= 0.0 || m > 0.5 + 1e-12) return;
                    ++valid;
                    double ratio = bm / m;
                    best = std::min(best, ratio);
                    if (ratio < e.bound - 1e-12) ++viol;
                };

                // Hamming balls around the heaviest support points.
                std::vector<std::size_t> radii = {0, 1, r, r + 1};
                std::sort(radii.begin(), radii.end());
                radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
                std::vector<std::size_t> cdist(supp);
                const std::size_t centers = std::min<std::size_t>(8, supp);
                for (std::size_t ci = 0; ci < centers; ++ci) {
                    std::uint32_t cw = word[order[ci]];
                    for (std::size_t i = 0; i < supp; ++i)
                        cdist[i] = static_cast<std::size_t>(std::popcount(word[i] ^ cw));
                    for (std::size_t R : radii) {
                        if (R > n) continue;
                        double m = 0.0;
                        double bm = 0.0;
                        const bool complement_nonempty = R < n;
                        for (std::size_t i = 0; i < supp; ++i) {
                            std::size_t d = cdist[i];
                            if (d <= R) {
                                m += mass[i];
                                if (complement_nonempty && d + r >= R + 1) bm += mass[i];
                            } else if (d <= R + r) {
                                bm += mass[i];
                            }
                        }
                        consider(m, bm);
                    }
                }

                auto eval_explicit = [&](const std::size_t* members, std::size_t count) {
                    double m = 0.0;
                    for (std::size_t j = 0; j < count; ++j) {
                        flag[members[j]] = 1;
                        m += mass[members[j]];
                    }
                    double bm = 0.0;
                    for (std::size_t i = 0; i < supp; ++i) {
                        if (flag[i]) {
                            std::uint64_t within = 0;
                            for (std::size_t j = 0; j < count; ++j)
                                if (static_cast<std::size_t>(
                                        std::popcount(word[i] ^ word[members[j]])) <= r)
                                    ++within;
                            if (ball > within) bm += mass[i];
                        } else {
                            for (std::size_t j = 0; j < count; ++j) {
                                if (static_cast<std::size_t>(
                                        std::popcount(word[i] ^ word[members[j]])) <= r) {
                                    bm += mass[i];
                                    break;
                                }
                            }
                        }
                    }
                    for (std::size_t j = 0; j < count; ++j) flag[members[j]] = 0;
                    consider(m, bm);
                };

                // Heaviest-first prefixes at power-of-two sizes plus the
                // largest prefix still below half the total mass.
                const std::size_t cap = std::min(supp, cfg.max_explicit_members);
                std::vector<std::size_t> sizes;
                for (std::size_t k = 1; k <= cap; k <<= 1) sizes.push_back(k);
                double acc = 0.0;
                std::size_t half = 0;
                for (std::size_t i = 0; i < supp; ++i) {
                    if (acc + mass[order[i]] > 0.5) break;
                    acc += mass[order[i]];
                    half = i + 1;
                }
                if (half >= 1 && half <= cap) sizes.push_back(half);
                std::sort(sizes.begin(), sizes.end());
                sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
                for (std::size_t k : sizes) eval_explicit(order.data(), k);

                // Random support subsets.
                std::uniform_int_distribution<std::size_t> size_dist(1, cap);
                for (std::size_t draw = 0; draw < 8; ++draw) {
                    std::size_t k = size_dist(rng);
                    std::iota(scratch.begin(), scratch.end(), 0);
                    for (std::size_t i = 0; i < k; ++i) {
                        std::uniform_int_distribution<std::size_t> pick(i, supp - 1);
                        std::swap(scratch[i], scratch[pick(rng)]);
                    }
                    eval_explicit(scratch.data(), k);
                }

                // Coordinate slices: support points with one bit clear.
                std::vector<std::size_t> slice;
                for (std::size_t b = 0; b < std::min<std::size_t>(n, 6); ++b) {
                    slice.clear();
                    for (std::size_t i = 0; i < supp; ++i)
                        if (((word[i] >> b) & 1u) == 0) slice.push_back(i);
                    if (!slice.empty() && slice.size() <= cap)
                        eval_explicit(slice.data(), slice.size());
                }

                e.candidates = valid;
                e.violations = viol;
                e.min_ratio = valid > 0 ? best : 0.0;
            }

            report.total_violations += e.violations;
            if (e.candidates > 0)
                report.min_margin = std::min(report.min_margin, e.min_ratio - e.bound);
            report.entries.push_back(e);
        }
    }
    return report;
}

} // namespace epc
