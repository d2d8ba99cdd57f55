#pragma once

#include <cmath>
#include <stdexcept>

namespace landau {

// Natural units, hbar = c = 1.  The charge enters only through eB, so
// potentials below are always returned as e*A.
struct MagneticSetup {
    double eB = 1.0;
    double m_e = 1.0;

    double magnetic_length() const { return 1.0 / std::sqrt(eB); }
    double larmor() const { return eB / (2.0 * m_e); }
    double cyclotron() const { return eB / m_e; }
    double level_energy(int n) const { return (2.0 * n + 1.0) * larmor(); }

    void validate() const {
        if (!(eB > 0.0) || !std::isfinite(eB))
            throw std::invalid_argument("eB must be positive and finite");
        if (!(m_e > 0.0) || !std::isfinite(m_e))
            throw std::invalid_argument("m_e must be positive and finite");
    }
};

}  // namespace landau
