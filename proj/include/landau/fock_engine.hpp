#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "landau/gauge_fields.hpp"
#include "landau/realspace_engine.hpp"

namespace landau {

enum class Ladder : std::uint8_t { A, Adag, B, Bdag };

// |n, m> = |nA = n>_A |nB = n - m>_B
struct FockLabel {
    int n_a = 0;
    int n_b = 0;
    static FockLabel from_nm(int n, int m) { return {n, n - m}; }
    int n() const { return n_a; }
    int m() const { return n_a - n_b; }
    bool operator<(const FockLabel& o) const { return n_a != o.n_a ? n_a < o.n_a : n_b < o.n_b; }
    bool operator==(const FockLabel& o) const { return n_a == o.n_a && n_b == o.n_b; }
};

struct FockCutoff {
    int n_a_max = 0;
    int n_b_max = 0;
    int dimension() const { return (n_a_max + 1) * (n_b_max + 1); }
    int index(const FockLabel& l) const { return l.n_a * (n_b_max + 1) + l.n_b; }
    FockLabel label(int idx) const { return {idx / (n_b_max + 1), idx % (n_b_max + 1)}; }
    bool contains(const FockLabel& l) const {
        return l.n_a >= 0 && l.n_b >= 0 && l.n_a <= n_a_max && l.n_b <= n_b_max;
    }
};

// Non-commutative polynomial in the four ladder operators.  A word is stored
// left to right as written; its rightmost letter acts first.
class LadderPolynomial {
public:
    using Word = std::vector<Ladder>;

    LadderPolynomial() = default;
    static LadderPolynomial scalar(std::complex<double> c);
    static LadderPolynomial letter(Ladder l);

    LadderPolynomial operator+(const LadderPolynomial& o) const;
    LadderPolynomial operator-(const LadderPolynomial& o) const;
    LadderPolynomial operator*(const LadderPolynomial& o) const;
    LadderPolynomial operator*(std::complex<double> c) const;
    friend LadderPolynomial operator*(std::complex<double> c, const LadderPolynomial& p) { return p * c; }

    const std::map<Word, std::complex<double>>& terms() const { return terms_; }
    int degree() const;

    // exact image of a basis label, no truncation involved
    std::map<FockLabel, std::complex<double>> act(const FockLabel& ket) const;

private:
    void add(const Word& w, std::complex<double> c);
    std::map<Word, std::complex<double>> terms_;
};

LadderPolynomial commutator(const LadderPolynomial& a, const LadderPolynomial& b);

// Truncated matrix.  A column is valid when every image of its label stays
// inside the cutoff; invalid columns are never reported as results.
class FockMatrix {
public:
    using Sparse = Eigen::SparseMatrix<std::complex<double>>;

    FockMatrix() = default;
    FockMatrix(FockCutoff c, Sparse m, std::vector<bool> valid);

    const FockCutoff& cutoff() const { return cutoff_; }
    const Sparse& matrix() const { return mat_; }
    bool valid(const FockLabel& col) const;
    std::optional<std::complex<double>> element(const FockLabel& row, const FockLabel& col) const;

    FockMatrix operator*(const FockMatrix& o) const;
    FockMatrix operator+(const FockMatrix& o) const;
    FockMatrix operator-(const FockMatrix& o) const;
    FockMatrix operator*(std::complex<double> c) const;

    int valid_columns() const;

private:
    FockCutoff cutoff_;
    Sparse mat_;
    std::vector<bool> valid_;
};

FockMatrix assemble(const LadderPolynomial& p, const FockCutoff& c);

enum class BasisClass { SymNM, L1NM };
std::string basis_class_name(BasisClass b);
GaugeChoice basis_gauge(BasisClass b);

// position and canonical momentum in the symmetric-gauge ladder basis
struct PhaseSpace {
    LadderPolynomial x, y, px, py;
    LadderPolynomial pi_x, pi_y, pit_x, pit_y;  // mechanical and pseudo momenta
};

PhaseSpace phase_space(const MagneticSetup& s);

// Operator represented on the basis exp(-i e chi)|n,m>, chi taking the
// symmetric potential to `gauge`, built from x, y, p by composition.
LadderPolynomial build_operator(const MagneticSetup& s, const OperatorKind& op, const GaugeChoice& gauge);
LadderPolynomial build_operator(const MagneticSetup& s, const OperatorKind& op, BasisClass b);

std::complex<double> table2_entry(const MagneticSetup& s, OperatorTag op, BasisClass b, int n, int m_prime, int m,
                                  int extra_cutoff = 4);

// tabulated closed forms of the in-level matrix elements
std::complex<double> table2_closed_form(const MagneticSetup& s, OperatorTag op, BasisClass b, int n, int m_prime, int m);

// kx-packet expectation values in the packet adapted to the class gauge
std::complex<double> table1_closed_form(const MagneticSetup& s, OperatorTag op, BasisClass b, const PacketSpec& p);

struct CommutatorCheck {
    std::string name;
    double max_deviation = 0.0;   // from the expected value on valid columns
    bool expect_nonzero = false;  // for these max_deviation is the largest entry
    int valid_columns = 0;
};

std::vector<CommutatorCheck> commutator_suite(const MagneticSetup& s, const FockCutoff& c);

}  // namespace landau
