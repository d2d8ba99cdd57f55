#include <doctest.h>

#include <cmath>
#include <complex>

#include "landau/fock_engine.hpp"
#include "landau/realspace_engine.hpp"

using namespace landau;
using doctest::Approx;
using cplx = std::complex<double>;

namespace {

const OperatorKind kOp(OperatorTag t) { return OperatorKind::of(t); }

Field field(const QuantumState& st) {
    return [st](double x, double y) { return st(x, y); };
}

}  // namespace

TEST_CASE("pointwise eigenrelations") {
    MagneticSetup s;
    auto strip = QuantumState::l1_nkx(s, 2, 0.8);
    Field ps = apply(s, kOp(OperatorTag::PCanX), std::nullopt, field(strip));
    auto disk = QuantumState::sym_nm(s, 2, -1);
    Field ld = apply(s, kOp(OperatorTag::LConsZ), GaugeChoice::symmetric(), field(disk));
    for (auto [x, y] : {std::pair{0.3, 0.5}, {-1.2, 1.1}, {2.0, -0.4}}) {
        CHECK(std::abs(ps(x, y) - 0.8 * strip(x, y)) < 1e-7 * std::abs(strip(x, y)));
        CHECK(std::abs(ld(x, y) + disk(x, y)) < 1e-8);
    }
}

TEST_CASE("eigen-residuals of the four families") {
    for (MagneticSetup s : {MagneticSetup{1.0, 1.0}, MagneticSetup{2.0, 0.7}}) {
        for (const auto& st : {QuantumState::sym_nm(s, 1, -2), QuantumState::l1_nm(s, 3, 2),
                               QuantumState::l1_nkx(s, 2, -0.5), QuantumState::sym_nkx(s, 0, 1.0)})
            CHECK(eigen_residual(st) < 1e-6);
        HarmonicGauge chi;
        chi.re = {0.1, -0.05, 0.01};
        chi.im = {0.2, 0.02};
        chi.xy_weight = 0.3;
        CHECK(eigen_residual(QuantumState::sym_nm(s, 2, 0).deformed(chi)) < 1e-6);
    }
}

TEST_CASE("finite differences are fourth order") {
    MagneticSetup s;
    auto strip = QuantumState::l1_nkx(s, 0, 1.3);
    auto err = [&](double h) {
        Field f = apply(s, kOp(OperatorTag::PCanX), std::nullopt, field(strip), {h});
        return std::abs(f(0.4, 1.0) - 1.3 * strip(0.4, 1.0));
    };
    double ratio = err(0.2) / err(0.1);
    CHECK(ratio == Approx(16.0).epsilon(0.1));
}

TEST_CASE("matrix elements with tabulated values") {
    MagneticSetup s;
    auto s21 = QuantumState::sym_nm(s, 2, 1);
    auto r = matrix_element(s, s21, kOp(OperatorTag::LMechZ), GaugeChoice::symmetric(), s21);
    CHECK(std::abs(r.value - 5.0) < 1e-8);
    CHECK(r.error_estimate < 1e-8);
    auto q = matrix_element(s, QuantumState::sym_nm(s, 1, 1), kOp(OperatorTag::PConsX), GaugeChoice::symmetric(),
                            QuantumState::sym_nm(s, 1, 0));
    CHECK(std::abs(q.value - cplx(0.0, -std::sqrt(0.5))) < 1e-8);
    for (int mp = -2; mp <= 2; ++mp)
        for (int m = -2; m <= 2; ++m) {
            auto p = matrix_element(s, QuantumState::sym_nm(s, 2, mp), kOp(OperatorTag::PMechX), GaugeChoice::symmetric(),
                                    QuantumState::sym_nm(s, 2, m));
            CHECK(std::abs(p.value) < 1e-8);
        }
}

TEST_CASE("rejections") {
    MagneticSetup s;
    auto strip = QuantumState::l1_nkx(s, 0, 0.0), disk = QuantumState::sym_nm(s, 0, 0);
    CHECK_THROWS_AS(matrix_element(s, strip, kOp(OperatorTag::PCanX), std::nullopt, disk), DeltaNormalizedError);
    CHECK_THROWS_AS(matrix_element(s, disk, kOp(OperatorTag::PCanX), std::nullopt, strip), DeltaNormalizedError);
    CHECK_THROWS_AS(apply(s, kOp(OperatorTag::PMechX), std::nullopt, field(disk)), ConfigurationError);
    CHECK_THROWS_AS(apply(s, kOp(OperatorTag::Hamiltonian), std::nullopt, field(disk)), ConfigurationError);
    CHECK_THROWS_AS(gcc_build(OperatorTag::GccMomentum, GaugeChoice::symmetric().deformed(HarmonicGauge::xy(0.3))),
                    ConfigurationError);
    QuadratureGrid g;
    g.points_per_axis = 1;
    CHECK_THROWS_AS(inner_product(disk, disk, g), ConfigurationError);
}

TEST_CASE("hermiticity of every operator kind") {
    MagneticSetup s;
    const GaugeChoice gauge = GaugeChoice::symmetric();
    std::vector<OperatorKind> ops;
    for (auto t : {OperatorTag::PCanX, OperatorTag::PMechX, OperatorTag::PConsX, OperatorTag::LCanZ,
                   OperatorTag::LMechZ, OperatorTag::LConsZ, OperatorTag::Hamiltonian})
        ops.push_back(kOp(t));
    ops.push_back(gcc_build(OperatorTag::GccMomentum, GaugeChoice::landau1()));
    ops.push_back(gcc_build(OperatorTag::GccOam, GaugeChoice::symmetric()));
    auto a = QuantumState::sym_nm(s, 1, 0), b = QuantumState::sym_nm(s, 1, -1);
    for (const auto& op : ops) {
        auto ab = matrix_element(s, a, op, gauge, b);
        auto ba = matrix_element(s, b, op, gauge, a);
        INFO(op.name());
        CHECK(std::abs(ab.value - std::conj(ba.value)) <= 2.0 * (ab.error_estimate + ba.error_estimate) + 1e-15);
    }
}

TEST_CASE("gcc coincidences") {
    MagneticSetup s{1.0, 1.0};
    auto lg = gcc_build(OperatorTag::GccOam, GaugeChoice::symmetric());
    auto pg = gcc_build(OperatorTag::GccMomentum, GaugeChoice::landau1());
    CHECK(lg.name().find("Symmetric") != std::string::npos);
    for (const auto& st : {QuantumState::sym_nm(s, 2, 1), QuantumState::l1_nm(s, 2, -1)}) {
        auto g = st.gauge();
        auto other = st.family() == Family::SymNM ? QuantumState::sym_nm(s, 2, 0) : QuantumState::l1_nm(s, 2, 0);
        auto a = matrix_element(s, other, lg, g, st), b = matrix_element(s, other, kOp(OperatorTag::LConsZ), g, st);
        CHECK(std::abs(a.value - b.value) < 1e-8);
        auto c = matrix_element(s, other, pg, g, st), d = matrix_element(s, other, kOp(OperatorTag::PConsX), g, st);
        CHECK(std::abs(c.value - d.value) < 1e-8);
    }
    // in its own gauge the gcc momentum of the symmetric potential is the canonical one
    auto ps = gcc_build(OperatorTag::GccMomentum, GaugeChoice::symmetric());
    auto x = QuantumState::sym_nm(s, 1, 1), y = QuantumState::sym_nm(s, 1, 0);
    auto e = matrix_element(s, x, ps, GaugeChoice::symmetric(), y);
    auto f = matrix_element(s, x, kOp(OperatorTag::PCanX), std::nullopt, y);
    CHECK(std::abs(e.value - f.value) < 1e-8);
}

TEST_CASE("packet expectations") {
    MagneticSetup s;
    for (double sg : {0.2, 1.0, 5.0}) {
        PacketSpec p{1, 0.7, sg};
        auto lm = packet_expectation(s, kOp(OperatorTag::LMechZ), GaugeChoice::landau1(), p);
        CHECK(std::abs(lm.value - 3.0) < 1e-6);
        auto pm = packet_expectation(s, kOp(OperatorTag::PMechX), GaugeChoice::landau1(), p);
        CHECK(std::abs(pm.value) < 1e-8);
        auto pc = packet_expectation(s, kOp(OperatorTag::PConsX), GaugeChoice::landau1(), p);
        CHECK(std::abs(pc.value - 0.7) < 1e-8);
        auto lc = packet_expectation(s, kOp(OperatorTag::LConsZ), GaugeChoice::landau1(), p);
        double ref = 1.5 - (0.49 + sg * sg / 2) / 2 - 1.0 / (4 * sg * sg);
        CHECK(std::abs(lc.value - ref) < 1e-6);
        // the same packet moved to the symmetric class
        auto ls = packet_expectation(s, kOp(OperatorTag::LMechZ), GaugeChoice::symmetric(), p);
        CHECK(std::abs(ls.value - 3.0) < 1e-6);
        auto pcs = packet_expectation(s, kOp(OperatorTag::PCanX), GaugeChoice::symmetric(), p);
        CHECK(std::abs(pcs.value - 0.35) < 1e-6);
    }
}

TEST_CASE("strip/disk overlap by quadrature") {
    MagneticSetup s{1.6, 1.0};
    for (auto [n, kx, m] : {std::tuple{0, 0.0, 0}, {2, 0.5, -1}, {3, -1.2, 2}, {1, 2.0, -3}}) {
        auto q = strip_disk_overlap(s, n, kx, m);
        CHECK(std::abs(q.value - overlap_amplitude(s, n, kx, m)) < 1e-8);
    }
}

TEST_CASE("sweep agrees with single matrix elements") {
    MagneticSetup s{1.3, 1.0};
    std::vector<QuantumState> sts{QuantumState::sym_nm(s, 1, 1), QuantumState::sym_nm(s, 1, 0),
                                  QuantumState::sym_nm(s, 1, -2)};
    std::vector<OperatorKind> ops{kOp(OperatorTag::LCanZ), kOp(OperatorTag::PConsX)};
    QuadratureGrid g = default_grid(sts[0], sts[2]);
    SweepResult sw = matrix_sweep(s, sts, ops, GaugeChoice::symmetric(), g);
    for (std::size_t o = 0; o < ops.size(); ++o)
        for (std::size_t i = 0; i < sts.size(); ++i)
            for (std::size_t j = 0; j < sts.size(); ++j) {
                auto r = matrix_element(s, sts[i], ops[o], GaugeChoice::symmetric(), sts[j], g);
                CHECK(std::abs(sw.values[o][i][j].value - r.value) < 1e-10);
                CHECK(std::abs(sw.values[o][i][j].value -
                               table2_entry(s, ops[o].tag, BasisClass::SymNM, 1, sts[i].m(), sts[j].m())) < 1e-8);
            }
}

TEST_CASE("default grids cover the states") {
    MagneticSetup s{0.5, 1.0};
    const double l = s.magnetic_length();
    auto a = default_grid(QuantumState::sym_nm(s, 5, -5));
    CHECK(a.half_width_x >= 8 * l);
    CHECK(a.half_width_x >= 3 * std::sqrt(2 * 5 + 5 + 1.0) * l);
    auto n = inner_product(QuantumState::sym_nm(s, 5, -5), QuantumState::sym_nm(s, 5, -5));
    CHECK(std::abs(n.value - 1.0) < 1e-10);
    auto p = default_grid(QuantumState::packet_l1(s, {0, 1.0, 0.5}));
    CHECK(p.center_y == Approx(1.0 * l * l));
}
