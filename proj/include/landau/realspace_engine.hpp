#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "landau/gauge_fields.hpp"
#include "landau/landau_states.hpp"

namespace landau {

enum class OperatorTag { PCanX, PMechX, PConsX, LCanZ, LMechZ, LConsZ, Hamiltonian, GccMomentum, GccOam };

struct OperatorKind {
    OperatorTag tag = OperatorTag::PCanX;
    std::optional<GaugeChoice> physical;  // only for the gcc operators

    static OperatorKind of(OperatorTag t) { return {t, std::nullopt}; }
    bool needs_gauge() const { return tag != OperatorTag::PCanX && tag != OperatorTag::LCanZ; }
    std::string name() const;
};

// the six operators of the tabulated matrix elements, in report order
const std::vector<OperatorTag>& table_operators();
std::string operator_name(OperatorTag t);

class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DeltaNormalizedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// g.c.c. construction; the physical potential must be a standard gauge
OperatorKind gcc_build(OperatorTag family, const GaugeChoice& physical);

struct FiniteDifference {
    double step = 1e-3;  // in units of the magnetic length
};

using Field = std::function<Amplitude(double, double)>;

Field apply(const MagneticSetup& s, const OperatorKind& op, const std::optional<GaugeChoice>& gauge, Field psi,
            FiniteDifference fd = {});

// tensor Gauss-Legendre box
struct QuadratureGrid {
    double center_x = 0.0;
    double center_y = 0.0;
    double half_width_x = 8.0;
    double half_width_y = 8.0;
    int points_per_axis = 160;
    double refine = 1.5;
};

QuadratureGrid default_grid(const QuantumState& a);
QuadratureGrid default_grid(const QuantumState& a, const QuantumState& b);

struct MatrixElementResult {
    Amplitude value;
    double error_estimate = 0.0;  // |coarse - refined|, refined has more nodes and a smaller FD step
    QuadratureGrid grid_used;
};

MatrixElementResult matrix_element(const MagneticSetup& s, const QuantumState& bra, const OperatorKind& op,
                                   const std::optional<GaugeChoice>& gauge, const QuantumState& ket,
                                   std::optional<QuadratureGrid> grid = std::nullopt, FiniteDifference fd = {});

MatrixElementResult inner_product(const QuantumState& bra, const QuantumState& ket,
                                  std::optional<QuadratureGrid> grid = std::nullopt);

// expectation in the normalized packet adapted to `gauge`, i.e. the strip
// packet multiplied by exp(-i e chi) with gauge = A_L1 + grad chi
MatrixElementResult packet_expectation(const MagneticSetup& s, const OperatorKind& op, const GaugeChoice& gauge,
                                       const PacketSpec& p, std::optional<QuadratureGrid> grid = std::nullopt,
                                       FiniteDifference fd = {});

// <strip n,kx | exp(i eB x y/2) | disk n,m> by quadrature
MatrixElementResult strip_disk_overlap(const MagneticSetup& s, int n, double kx, int m,
                                       std::optional<QuadratureGrid> grid = std::nullopt);

// || (H - E_n) psi ||_2 over the quadrature box, H in the state's own gauge
double eigen_residual(const QuantumState& psi, std::optional<QuadratureGrid> grid = std::nullopt,
                      FiniteDifference fd = {});

// Values and gradients on a fixed set of nodes, reused across operators.
struct GridNodes {
    std::vector<double> x, y, wx, wy;
};

GridNodes make_nodes(const QuadratureGrid& g, bool refined);

struct SampledState {
    std::vector<Amplitude> psi, dx, dy;  // row-major, x index outer
};

SampledState sample(const QuantumState& st, const GridNodes& nodes, double step);

Amplitude contract(const MagneticSetup& s, const GridNodes& nodes, const SampledState& bra, const OperatorKind& op,
                   const std::optional<GaugeChoice>& gauge, const SampledState& ket);

// all <bra_i| op |ket_j> for states sharing one grid, with error estimates
struct SweepResult {
    // [op][i][j]
    std::vector<std::vector<std::vector<MatrixElementResult>>> values;
};

SweepResult matrix_sweep(const MagneticSetup& s, const std::vector<QuantumState>& states,
                         const std::vector<OperatorKind>& ops, const GaugeChoice& gauge, const QuadratureGrid& grid,
                         FiniteDifference fd = {});

}  // namespace landau
