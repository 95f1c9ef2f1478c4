#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "epc/css.hpp"
#include "epc/graph.hpp"
#include "epc/hgp.hpp"
#include "epc/pipeline.hpp"
#include "epc/states.hpp"

using namespace epc;

namespace {

LogicalStateSpec steane_state(std::complex<double> alpha, std::complex<double> beta) {
    CssCode code = steane_code();
    LogicalBasis lb = logical_basis(code);
    return make_logical_state(std::move(code), std::move(lb), 0, alpha, beta);
}

LogicalStateSpec triangle_state(const HgpCode& h, std::complex<double> alpha,
                                std::complex<double> beta) {
    return make_logical_state(h.code, logical_basis(h.code), 0, alpha, beta);
}

BitVector bits(std::size_t n, std::initializer_list<std::size_t> on) {
    BitVector v(n);
    for (std::size_t i : on) v.set(i, true);
    return v;
}

} // namespace

TEST_CASE("interval endpoints and the cell mass floor") {
    CHECK(uncertainty_interval_lo() == doctest::Approx(0.14644660940672627).epsilon(1e-15));
    CHECK(uncertainty_interval_hi() == doctest::Approx(0.8535533905932737).epsilon(1e-15));
    CHECK(cell_mass_floor() == doctest::Approx(0.07322330470336313).epsilon(1e-15));
    CHECK(cell_mass_floor() == 0.5 * uncertainty_interval_lo());
    CHECK(uncertainty_interval_lo() + uncertainty_interval_hi() == doctest::Approx(1.0));
}

TEST_CASE("pauli error support is the union of the two parts") {
    PauliError e{bits(4, {0, 1}), bits(4, {1, 2})};
    CHECK(e.support() == bits(4, {0, 1, 2}));
    CHECK(e.support_size() == 3);
    CHECK(e.epsilon() == doctest::Approx(0.75));

    const PauliError none = PauliError::none(6);
    CHECK(none.ex.is_zero());
    CHECK(none.ez.is_zero());
    CHECK(none.support_size() == 0);
    CHECK(none.epsilon() == 0.0);

    CHECK(PauliError{BitVector(0), BitVector(0)}.epsilon() == 0.0);
}

TEST_CASE("make_logical_state validates its inputs") {
    CssCode code = steane_code();
    LogicalBasis lb = logical_basis(code);

    const LogicalStateSpec s = make_logical_state(code, lb, 0, 0.6, 0.8);
    CHECK(s.r0.is_zero());
    CHECK(s.r1 == s.bx());
    CHECK(s.logical_index == 0);

    // A stabilizer row is a legal r0: it lies in ker hz and pairs to 0
    // with every logical.
    const LogicalStateSpec t = make_logical_state(code, lb, 0, 0.6, 0.8, code.hx().row(0));
    CHECK(t.r0 == code.hx().row(0));
    CHECK(t.r1 == (code.hx().row(0) ^ t.bx()));

    CHECK_THROWS_AS(make_logical_state(code, lb, 0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_logical_state(code, lb, 5, 1.0, 0.0), std::out_of_range);
    // Qubit 6 of the Steane code sits in every z check, so a single bit
    // there has nonzero syndrome.
    CHECK_THROWS_AS(make_logical_state(code, lb, 0, 0.6, 0.8, bits(7, {6})),
                    std::invalid_argument);
    // bx lies in ker hz but pairs to 1 with bz.
    CHECK_THROWS_AS(make_logical_state(code, lb, 0, 0.6, 0.8, lb.bx[0]),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_logical_state(code, lb, 0, 0.6, 0.8, BitVector(6)),
                    std::invalid_argument);
}

TEST_CASE("plain basis masses on the Steane code") {
    const LogicalStateSpec s = steane_state(0.6, 0.8);
    const PartitionSets sets(s.code, s.bx(), s.bz());
    const PauliError none = PauliError::none(7);

    const BasisMasses z = zbasis_masses(s, none, sets);
    CHECK(z.basis == Basis::Z);
    CHECK_FALSE(z.voronoi);
    CHECK(z.in0 == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(z.in1 == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(z.elsewhere == 0.0);
    CHECK(z.min_mass() == doctest::Approx(0.36).epsilon(1e-12));

    const BasisMasses x = xbasis_masses(s, none, sets);
    CHECK(x.in0 == doctest::Approx(0.98).epsilon(1e-12));
    CHECK(x.in1 == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(x.elsewhere == 0.0);

    // A logical X shift swaps the two z cells.
    const BasisMasses zflip = zbasis_masses(s, PauliError{s.bx(), BitVector(7)}, sets);
    CHECK(zflip.in0 == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(zflip.in1 == doctest::Approx(0.36).epsilon(1e-12));

    // A stabilizer shift leaves them alone.
    const BasisMasses zstab = zbasis_masses(s, PauliError{s.code.hx().row(1), BitVector(7)}, sets);
    CHECK(zstab.in0 == doctest::Approx(0.36).epsilon(1e-12));

    // A detectable X part pushes all z mass outside both sets.
    const BasisMasses zbad = zbasis_masses(s, PauliError{bits(7, {6}), BitVector(7)}, sets);
    CHECK(zbad.in0 == 0.0);
    CHECK(zbad.in1 == 0.0);
    CHECK(zbad.elsewhere == doctest::Approx(1.0));

    // A logical Z shift swaps the x cells; a detectable Z part evicts them.
    const BasisMasses xflip = xbasis_masses(s, PauliError{BitVector(7), s.bz()}, sets);
    CHECK(xflip.in0 == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(xflip.in1 == doctest::Approx(0.98).epsilon(1e-12));
    const BasisMasses xbad = xbasis_masses(s, PauliError{BitVector(7), bits(7, {6})}, sets);
    CHECK(xbad.elsewhere == doctest::Approx(1.0));
}

TEST_CASE("basis masses on the triangle product code") {
    const HgpCode h = hypergraph_product(cycle_graph(3));
    const LogicalStateSpec s = triangle_state(h, 0.6, 0.8);
    const PartitionSets sets(s.code, s.bx(), s.bz());
    const PauliError none = PauliError::none(18);

    const BasisMasses z = zbasis_masses(s, none, sets);
    CHECK(z.in0 == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(z.in1 == doctest::Approx(0.64).epsilon(1e-12));
    const BasisMasses x = xbasis_masses(s, none, sets);
    CHECK(x.in0 == doctest::Approx(0.98).epsilon(1e-12));
    CHECK(x.in1 == doctest::Approx(0.02).epsilon(1e-12));
}

TEST_CASE("logical expectations carry the Pauli signs") {
    const LogicalStateSpec s = steane_state(0.6, 0.8);
    const PauliError none = PauliError::none(7);

    const LogicalExpectations e = logical_expectations(s, none);
    CHECK(e.exp_z == doctest::Approx(-0.28).epsilon(1e-12));
    CHECK(e.exp_x == doctest::Approx(0.96).epsilon(1e-12));
    CHECK(e.exp_z * e.exp_z + e.exp_x * e.exp_x == doctest::Approx(1.0));

    // ex pairing to 1 with bz flips <Z>; ez pairing to 1 with bx flips <X>.
    const LogicalExpectations fz = logical_expectations(s, PauliError{s.bx(), BitVector(7)});
    CHECK(fz.exp_z == doctest::Approx(0.28).epsilon(1e-12));
    CHECK(fz.exp_x == doctest::Approx(0.96).epsilon(1e-12));
    const LogicalExpectations fx = logical_expectations(s, PauliError{BitVector(7), s.bz()});
    CHECK(fx.exp_z == doctest::Approx(-0.28).epsilon(1e-12));
    CHECK(fx.exp_x == doctest::Approx(-0.96).epsilon(1e-12));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int trial = 0; trial < 200; ++trial) {
        const double th = angle(rng), ph = angle(rng);
        const std::complex<double> a{std::cos(th), 0.0};
        const std::complex<double> b = std::sin(th) * std::complex<double>{std::cos(ph),
                                                                           std::sin(ph)};
        const LogicalStateSpec r = steane_state(a, b);
        const LogicalExpectations ex = logical_expectations(r, none);
        CHECK(ex.exp_z * ex.exp_z + ex.exp_x * ex.exp_x <= 1.0 + 1e-10);
    }
}

TEST_CASE("uncertainty check holds for every normalized state") {
    const LogicalStateSpec even = steane_state(std::sqrt(0.5), std::sqrt(0.5));
    const UncertaintyReport re = uncertainty_check(even);
    CHECK(re.ok);
    CHECK(re.z_margin == doctest::Approx(0.5 - uncertainty_interval_lo()));

    // Basis states fail the z interval but clear the x one.
    const LogicalStateSpec zero = steane_state(1.0, 0.0);
    const UncertaintyReport r0 = uncertainty_check(zero);
    CHECK(r0.ok);
    CHECK(r0.z_margin < 0.0);
    CHECK(r0.x_margin == doctest::Approx(0.5 - uncertainty_interval_lo()));

    const HgpCode h = hypergraph_product(cycle_graph(3));
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int trial = 0; trial < 200; ++trial) {
        const double th = angle(rng), ph = angle(rng);
        const std::complex<double> a{std::cos(th), 0.0};
        const std::complex<double> b = std::sin(th) * std::complex<double>{std::cos(ph),
                                                                           std::sin(ph)};
        CHECK(uncertainty_check(steane_state(a, b)).ok);
        if (trial < 50) CHECK(uncertainty_check(triangle_state(h, a, b)).ok);
    }
}

TEST_CASE("zbasis marginal enumerates projected cosets exactly") {
    const LogicalStateSpec s = steane_state(0.6, 0.8);
    const PauliError none = PauliError::none(7);

    std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6};
    const auto full = zbasis_marginal(s, none, all);
    CHECK(full.size() == 16);
    double total = 0.0;
    std::size_t n_small = 0, n_large = 0;
    for (const auto& [word, mass] : full) {
        total += mass;
        if (mass == doctest::Approx(0.36 / 8).epsilon(1e-12)) ++n_small;
        if (mass == doctest::Approx(0.64 / 8).epsilon(1e-12)) ++n_large;
    }
    CHECK(total == doctest::Approx(1.0));
    CHECK(n_small == 8);
    CHECK(n_large == 8);

    // alpha = 1 collapses to the r0 coset, the hx row space itself.
    const LogicalStateSpec zero = steane_state(1.0, 0.0);
    const auto coset = zbasis_marginal(zero, none, all);
    CHECK(coset.size() == 8);
    bool saw_zero = false;
    for (const auto& [word, mass] : coset) {
        CHECK(mass == doctest::Approx(0.125));
        if (word.is_zero()) saw_zero = true;
    }
    CHECK(saw_zero);

    // A single kept qubit covered by the projected stabilizers is
    // uniformly random whatever the amplitudes.
    const auto one = zbasis_marginal(s, none, {0});
    CHECK(one.size() == 2);
    CHECK(one[0].second == doctest::Approx(0.5));
    CHECK(one[1].second == doctest::Approx(0.5));

    const auto partial = zbasis_marginal(s, none, {0, 3, 5});
    double psum = 0.0;
    for (const auto& [word, mass] : partial) psum += mass;
    CHECK(psum == doctest::Approx(1.0));
    CHECK(partial.size() <= 8);

    // 21 projected stabilizer dimensions exceed the enumeration limit.
    const HgpCode k4 = hypergraph_product(complete_graph(4));
    const LogicalStateSpec big = triangle_state(k4, 0.6, 0.8);
    std::vector<std::size_t> keep_all(52);
    for (std::size_t i = 0; i < 52; ++i) keep_all[i] = i;
    CHECK_THROWS_AS(zbasis_marginal(big, PauliError::none(52), keep_all), std::length_error);
}

TEST_CASE("directional profiles count rows and columns of the layout") {
    const HgpIndex idx{3, 3};
    BitVector part(idx.num_qubits());
    part.set(idx.vv(0, 0), true);
    part.set(idx.vv(0, 1), true);
    part.set(idx.vv(1, 1), true);
    part.set(idx.ee(2, 0), true);

    const DirectionalProfile p = measure_profile(part, idx);
    CHECK(p.v_row_max == 2);
    CHECK(p.v_col_max == 2);
    CHECK(p.e_row_max == 1);
    CHECK(p.e_col_max == 1);
    CHECK(p.v_row_frac == doctest::Approx(2.0 / 3));
    CHECK(p.e_col_frac == doctest::Approx(1.0 / 3));
    CHECK(p.max_frac == doctest::Approx(2.0 / 3));

    const DirectionalProfile zero = measure_profile(BitVector(idx.num_qubits()), idx);
    CHECK(zero.v_col_max == 0);
    CHECK(zero.max_frac == 0.0);
}

TEST_CASE("uniform family membership is directional") {
    const HgpCode h = hypergraph_product(cycle_graph(3));
    const PartitionSets sets(h.code, column_logical(h, Basis::X, 0), column_logical(h, Basis::Z, 0));
    const HgpIndex& idx = h.index;

    VoronoiSpec xspec{Basis::X, sets, VoronoiSpec::Family::UniformColumn, 0, idx, 0.34};
    VoronoiSpec zspec{Basis::Z, sets, VoronoiSpec::Family::UniformColumn, 0, idx, 0.34};

    const BitVector single = bits(18, {idx.vv(0, 0)});
    CHECK(in_error_family(single, xspec));
    CHECK(in_error_family(single, zspec));
    CHECK(in_error_family(BitVector(18), xspec));

    // Two bits in one V column exceed the X-side cap but spread across
    // two rows on the Z side.
    const BitVector col_pair = bits(18, {idx.vv(0, 0), idx.vv(1, 0)});
    CHECK_FALSE(in_error_family(col_pair, xspec));
    CHECK(in_error_family(col_pair, zspec));

    const BitVector row_pair = bits(18, {idx.vv(0, 0), idx.vv(0, 1)});
    CHECK(in_error_family(row_pair, xspec));
    CHECK_FALSE(in_error_family(row_pair, zspec));

    const BitVector erow_pair = bits(18, {idx.ee(0, 0), idx.ee(0, 1)});
    CHECK(in_error_family(erow_pair, xspec));
    CHECK_FALSE(in_error_family(erow_pair, zspec));

    const BitVector wrong_len = bits(17, {0});
    CHECK_FALSE(in_error_family(wrong_len, xspec));
}

TEST_CASE("global ball enumeration lists all small errors once") {
    CssCode code = steane_code();
    LogicalBasis lb = logical_basis(code);
    const PartitionSets sets(code, lb.bx[0], lb.bz[0]);

    VoronoiSpec spec{Basis::Z, sets, VoronoiSpec::Family::GlobalBall, 1, HgpIndex{}, 0.0};
    const auto fam1 = enumerate_error_family(spec);
    CHECK(fam1.size() == 8);
    CHECK(fam1.front().is_zero());
    for (std::size_t i = 1; i < fam1.size(); ++i)
        CHECK(fam1[i - 1].weight() <= fam1[i].weight());
    for (const BitVector& e : fam1) CHECK(in_error_family(e, spec));
    CHECK_FALSE(in_error_family(bits(7, {0, 1}), spec));

    spec.ball_radius = 2;
    const auto fam2 = enumerate_error_family(spec);
    CHECK(fam2.size() == 29);
    std::unordered_set<BitVector, BitVectorHash> seen(fam2.begin(), fam2.end());
    CHECK(seen.size() == fam2.size());

    spec.budget = 3;
    CHECK_THROWS_AS(enumerate_error_family(spec), std::length_error);
}

TEST_CASE("uniform family enumeration crosses the per-line patterns") {
    const HgpCode h = hypergraph_product(cycle_graph(3));
    const PartitionSets sets(h.code, column_logical(h, Basis::X, 0), column_logical(h, Basis::Z, 0));

    VoronoiSpec spec{Basis::X, sets, VoronoiSpec::Family::UniformColumn, 0, h.index, 0.34};
    const auto fam = enumerate_error_family(spec);
    // Six lines of length 3 with at most one bit each: 4^6 patterns.
    CHECK(fam.size() == 4096);
    CHECK(fam.front().is_zero());
    std::unordered_set<BitVector, BitVectorHash> seen;
    for (const BitVector& e : fam) {
        CHECK(in_error_family(e, spec));
        seen.insert(e);
    }
    CHECK(seen.size() == fam.size());

    spec.budget = 10;
    CHECK_THROWS_AS(enumerate_error_family(spec), std::length_error);
}

TEST_CASE("voronoi classification with a planted shift") {
    const HgpCode h = hypergraph_product(cycle_graph(3));
    const LogicalStateSpec s = triangle_state(h, 0.6, 0.8);
    const PartitionSets sets(s.code, s.bx(), s.bz());
    VoronoiSpec spec{Basis::Z, sets, VoronoiSpec::Family::UniformColumn, 0, h.index, 0.34};

    const BitVector shift = bits(18, {h.index.vv(1, 2)});
    const PauliError err{shift, BitVector(18)};
    CHECK(voronoi_classify(s.r0 ^ shift, spec, &err) == VoronoiCell::Cell0);
    CHECK(voronoi_classify(s.r1 ^ shift, spec, &err) == VoronoiCell::Cell1);

    // A residue with nonzero syndrome resolves to neither cell.
    const PauliError none = PauliError::none(18);
    CHECK(voronoi_classify(bits(18, {h.index.vv(0, 0)}), spec, &none) == VoronoiCell::Unresolved);
}

TEST_CASE("voronoi brute force certifies cells and flags overlap") {
    CssCode code = steane_code();
    LogicalBasis lb = logical_basis(code);
    const LogicalStateSpec s = make_logical_state(code, lb, 0, 0.6, 0.8);
    const PartitionSets sets(code, lb.bx[0], lb.bz[0]);

    VoronoiSpec spec{Basis::Z, sets, VoronoiSpec::Family::GlobalBall, 1, HgpIndex{}, 0.0};
    CHECK(voronoi_classify(s.r0 ^ bits(7, {3}), spec) == VoronoiCell::Cell0);
    CHECK(voronoi_classify(s.r1 ^ bits(7, {3}), spec) == VoronoiCell::Cell1);

    // A ball as wide as a logical representative certifies both cells
    // from the same point, falsifying disjointness.
    spec.ball_radius = lb.bx[0].weight();
    CHECK(voronoi_classify(s.r0, spec) == VoronoiCell::Ambiguous);

    // The planted zero shift classifies residues directly and never
    // reaches the brute-force scan, so the masses stay exact even here.
    const BasisMasses exact = zbasis_masses(s, PauliError::none(7), spec);
    CHECK(exact.resolved_all);
    CHECK(exact.in0 == doctest::Approx(0.36).epsilon(1e-12));

    // An out-of-family shift with the family over budget degrades to
    // unresolved rather than lying.
    spec.ball_radius = 1;
    spec.budget = 2;
    CHECK(voronoi_classify(s.r0, spec) == VoronoiCell::Unresolved);
    const BasisMasses bm = zbasis_masses(s, PauliError{bits(7, {0, 1}), BitVector(7)}, spec);
    CHECK_FALSE(bm.resolved_all);
    CHECK(bm.elsewhere == doctest::Approx(1.0));
}

TEST_CASE("voronoi masses resolve exactly for planted in-family errors") {
    const HgpCode h = hypergraph_product(cycle_graph(3));
    const LogicalStateSpec s = triangle_state(h, 0.6, 0.8);
    const PartitionSets sets(s.code, s.bx(), s.bz());
    VoronoiSpec zspec{Basis::Z, sets, VoronoiSpec::Family::UniformColumn, 0, h.index, 0.67};
    VoronoiSpec xspec{Basis::X, sets, VoronoiSpec::Family::UniformColumn, 0, h.index, 0.67};

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, 17);
    for (int trial = 0; trial < 40; ++trial) {
        BitVector ex(18), ez(18);
        ex.set(pick(rng), true);
        ex.set(pick(rng), true);
        ez.set(pick(rng), true);
        const PauliError err{ex, ez};
        REQUIRE(in_error_family(ex, zspec));
        REQUIRE(in_error_family(ez, xspec));

        const BasisMasses z = zbasis_masses(s, err, zspec);
        CHECK(z.resolved_all);
        CHECK(z.in0 == doctest::Approx(0.36).epsilon(1e-12));
        CHECK(z.in1 == doctest::Approx(0.64).epsilon(1e-12));

        const BasisMasses x = xbasis_masses(s, err, xspec);
        CHECK(x.resolved_all);
        CHECK(x.in0 == doctest::Approx(0.98).epsilon(1e-12));
        CHECK(x.in1 == doctest::Approx(0.02).epsilon(1e-12));
    }

    CHECK_THROWS_AS(zbasis_masses(s, PauliError::none(18), xspec), std::invalid_argument);
    CHECK_THROWS_AS(xbasis_masses(s, PauliError::none(18), zspec), std::invalid_argument);
}

TEST_CASE("fattened cells overlap once the family holds a logical") {
    // At nu = 0.67 the uniform family contains bx plus a z check row, so
    // the two fattened cells intersect and the scan reports it.
    const HgpCode h = hypergraph_product(cycle_graph(3));
    const LogicalStateSpec s = triangle_state(h, 0.6, 0.8);
    const PartitionSets sets(s.code, s.bx(), s.bz());
    VoronoiSpec spec{Basis::Z, sets, VoronoiSpec::Family::UniformColumn, 0, h.index, 0.67};
    spec.budget = std::size_t{1} << 22;

    const PauliError out_of_family{s.bx(), BitVector(18)};
    CHECK_THROWS_AS(zbasis_masses(s, out_of_family, spec), std::runtime_error);
}

TEST_CASE("partition witness on the triangle product") {
    const HgpCode h = hypergraph_product(cycle_graph(3));
    const LocalizedDistanceReport audit = localized_distance_check(h);
    const LogicalStateSpec s = triangle_state(h, 0.6, 0.8);

    const PauliError err{bits(18, {h.index.vv(0, 0)}), BitVector(18)};
    const PartitionWitness w = partition_witness(s, err, h.index, 0.34, audit);
    CHECK(w.basis == Basis::Z);
    CHECK(w.mass0 == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(w.mass1 == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(w.ok);
    CHECK(w.nu == 0.34);
    CHECK(w.profile_x.v_row_max == 1);
    CHECK(w.profile_x.e_row_max == 0);
    CHECK(w.min_distance_lb == audit.partition_margin(2.0, 0.0));
    CHECK(w.min_distance_lb == 1.0);

    // At nu = 1/2 the declared budget erases the audited slack entirely.
    const PartitionWitness wide = partition_witness(s, err, h.index, 0.5, audit);
    CHECK(wide.min_distance_lb == 1.0);
    CHECK(wide.min_distance_lb_at_nu == -2.0);

    // A basis state pushes the witness to the X side.
    const LogicalStateSpec zero = triangle_state(h, 1.0, 0.0);
    const PauliError zerr{BitVector(18), bits(18, {h.index.vv(2, 1)})};
    const PartitionWitness wx = partition_witness(zero, zerr, h.index, 0.34, audit);
    CHECK(wx.basis == Basis::X);
    CHECK(wx.mass0 == doctest::Approx(0.5));
    CHECK(wx.mass1 == doctest::Approx(0.5));
    CHECK(wx.ok);
    CHECK(wx.min_distance_lb == audit.partition_margin(2.0, 0.0));

    // Errors breaching the nu cap in any direction are rejected.
    const PauliError fat{bits(18, {h.index.vv(0, 0), h.index.vv(1, 0)}), BitVector(18)};
    CHECK_THROWS_AS(partition_witness(s, fat, h.index, 0.34, audit), std::invalid_argument);
}

TEST_CASE("partition witness certifies every normalized superposition") {
    const HgpCode h = hypergraph_product(cycle_graph(3));
    const LocalizedDistanceReport audit = localized_distance_check(h);
    const PauliError none = PauliError::none(18);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int trial = 0; trial < 60; ++trial) {
        const double th = angle(rng), ph = angle(rng);
        const std::complex<double> a{std::cos(th), 0.0};
        const std::complex<double> b = std::sin(th) * std::complex<double>{std::cos(ph),
                                                                           std::sin(ph)};
        const LogicalStateSpec s = triangle_state(h, a, b);
        const PartitionWitness w = partition_witness(s, none, h.index, 0.34, audit);
        CHECK(w.ok);
        CHECK(std::min(w.mass0, w.mass1) >= uncertainty_interval_lo() - 1e-12);
        CHECK(w.min_distance_lb == 1.0);
    }
}
