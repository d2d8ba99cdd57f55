#include "landau/fock_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace landau {

namespace {

using cplx = std::complex<double>;
const cplx kI(0.0, 1.0);

using LP = LadderPolynomial;

// acts with one letter, returns false when the state is annihilated
bool step(Ladder l, FockLabel& s, double& amp) {
    switch (l) {
        case Ladder::A:
            if (s.n_a == 0) return false;
            amp *= std::sqrt(double(s.n_a));
            --s.n_a;
            return true;
        case Ladder::Adag:
            ++s.n_a;
            amp *= std::sqrt(double(s.n_a));
            return true;
        case Ladder::B:
            if (s.n_b == 0) return false;
            amp *= std::sqrt(double(s.n_b));
            --s.n_b;
            return true;
        case Ladder::Bdag:
            ++s.n_b;
            amp *= std::sqrt(double(s.n_b));
            return true;
    }
    return false;
}

// gradient of e*chi as polynomials in x and y
std::pair<LP, LP> chi_gradient(const MagneticSetup& s, const HarmonicGauge& chi, const LP& x, const LP& y) {
    LP gx = (-0.5 * s.eB * chi.xy_weight) * y;
    LP gy = (-0.5 * s.eB * chi.xy_weight) * x;
    const std::size_t kmax = std::max(chi.re.size(), chi.im.size());
    const LP z = x + kI * y, zb = x - kI * y;
    LP zp = LP::scalar(1.0), zbp = LP::scalar(1.0);  // z^{k-1}, conj
    for (std::size_t k = 1; k <= kmax; ++k) {
        const double cr = k - 1 < chi.re.size() ? chi.re[k - 1] : 0.0;
        const double ci = k - 1 < chi.im.size() ? chi.im[k - 1] : 0.0;
        // d = k z^{k-1};  Re d = k (z^{k-1} + zb^{k-1})/2,  Im d = k (z^{k-1} - zb^{k-1})/(2i)
        LP re_d = (0.5 * double(k)) * (zp + zbp);
        LP im_d = (-0.5 * double(k) * kI) * (zp - zbp);
        gx = gx + cr * re_d + ci * im_d;
        gy = gy + (-cr) * im_d + ci * re_d;
        zp = zp * z;
        zbp = zbp * zb;
    }
    return {gx, gy};
}

std::pair<LP, LP> potential_poly(const MagneticSetup& s, const GaugeChoice& g, const LP& x, const LP& y) {
    LP ax, ay;
    switch (g.base) {
        case StandardGauge::Symmetric: ax = (-0.5 * s.eB) * y; ay = (0.5 * s.eB) * x; break;
        case StandardGauge::Landau1: ax = (-s.eB) * y; break;
        case StandardGauge::Landau2: ay = s.eB * x; break;
    }
    if (!g.chi.is_zero()) {
        auto [gx, gy] = chi_gradient(s, g.chi, x, y);
        ax = ax + gx;
        ay = ay + gy;
    }
    return {ax, ay};
}

}  // namespace

LP LP::scalar(cplx c) {
    LP p;
    p.add({}, c);
    return p;
}

LP LP::letter(Ladder l) {
    LP p;
    p.add({l}, 1.0);
    return p;
}

void LP::add(const Word& w, cplx c) {
    if (c == cplx(0.0)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (std::abs(it->second) == 0.0) terms_.erase(it);
}

LP LP::operator+(const LP& o) const {
    LP r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

LP LP::operator-(const LP& o) const { return *this + o * cplx(-1.0); }

LP LP::operator*(const LP& o) const {
    LP r;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    }
    return r;
}

LP LP::operator*(cplx c) const {
    LP r;
    for (const auto& [w, v] : terms_) r.add(w, v * c);
    return r;
}

int LP::degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, int(t.first.size()));
    return d;
}

std::map<FockLabel, cplx> LP::act(const FockLabel& ket) const {
    std::map<FockLabel, cplx> out;
    for (const auto& [w, c] : terms_) {
        FockLabel s = ket;
        double amp = 1.0;
        bool alive = true;
        for (auto it = w.rbegin(); it != w.rend() && alive; ++it) alive = step(*it, s, amp);
        if (alive) out[s] += c * amp;
    }
    return out;
}

LP commutator(const LP& a, const LP& b) { return a * b - b * a; }

FockMatrix::FockMatrix(FockCutoff c, Sparse m, std::vector<bool> valid)
    : cutoff_(c), mat_(std::move(m)), valid_(std::move(valid)) {}

bool FockMatrix::valid(const FockLabel& col) const {
    return cutoff_.contains(col) && valid_[cutoff_.index(col)];
}

std::optional<cplx> FockMatrix::element(const FockLabel& row, const FockLabel& col) const {
    if (!valid(col) || !cutoff_.contains(row)) return std::nullopt;
    return mat_.coeff(cutoff_.index(row), cutoff_.index(col));
}

FockMatrix FockMatrix::operator*(const FockMatrix& o) const {
    if (cutoff_.n_a_max != o.cutoff_.n_a_max || cutoff_.n_b_max != o.cutoff_.n_b_max)
        throw std::invalid_argument("cutoff mismatch");
    Sparse prod = mat_ * o.mat_;
    std::vector<bool> v(o.valid_.size(), false);
    for (int j = 0; j < o.mat_.outerSize(); ++j) {
        if (!o.valid_[j]) continue;
        bool ok = true;
        for (Sparse::InnerIterator it(o.mat_, j); it && ok; ++it) ok = valid_[it.row()];
        v[j] = ok;
    }
    return {cutoff_, prod, v};
}

FockMatrix FockMatrix::operator+(const FockMatrix& o) const {
    std::vector<bool> v(valid_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = valid_[i] && o.valid_[i];
    return {cutoff_, Sparse(mat_ + o.mat_), v};
}

FockMatrix FockMatrix::operator-(const FockMatrix& o) const { return *this + o * cplx(-1.0); }

FockMatrix FockMatrix::operator*(cplx c) const { return {cutoff_, Sparse(mat_ * c), valid_}; }

int FockMatrix::valid_columns() const {
    int n = 0;
    for (bool b : valid_) n += b;
    return n;
}

FockMatrix assemble(const LP& p, const FockCutoff& c) {
    if (c.n_a_max < 0 || c.n_b_max < 0) throw std::invalid_argument("negative Fock cutoff");
    const int dim = c.dimension();
    std::vector<Eigen::Triplet<cplx>> trip;
    std::vector<bool> valid(dim, true);
    for (int j = 0; j < dim; ++j) {
        const FockLabel col = c.label(j);
        // structural image: every word that survives, even if coefficients cancel
        for (const auto& [w, coef] : p.terms()) {
            FockLabel s = col;
            double amp = 1.0;
            bool alive = true;
            for (auto it = w.rbegin(); it != w.rend() && alive; ++it) alive = step(*it, s, amp);
            if (!alive) continue;
            if (!c.contains(s)) {
                valid[j] = false;
                continue;
            }
            trip.emplace_back(c.index(s), j, coef * amp);
        }
    }
    FockMatrix::Sparse m(dim, dim);
    m.setFromTriplets(trip.begin(), trip.end());
    return {c, m, valid};
}

std::string basis_class_name(BasisClass b) { return b == BasisClass::SymNM ? "SymNM" : "L1NM"; }

GaugeChoice basis_gauge(BasisClass b) {
    return b == BasisClass::SymNM ? GaugeChoice::symmetric() : GaugeChoice::landau1();
}

PhaseSpace phase_space(const MagneticSetup& s) {
    s.validate();
    const double l = s.magnetic_length();
    const double k = 1.0 / (std::sqrt(2.0) * l);
    const LP a = LP::letter(Ladder::A), ad = LP::letter(Ladder::Adag);
    const LP b = LP::letter(Ladder::B), bd = LP::letter(Ladder::Bdag);
    PhaseSpace ps;
    ps.pi_x = (-kI * k) * (a - ad);
    ps.pi_y = cplx(k) * (a + ad);
    ps.pit_x = (-kI * k) * (b - bd);
    ps.pit_y = cplx(-k) * (b + bd);
    ps.px = 0.5 * (ps.pi_x + ps.pit_x);
    ps.py = 0.5 * (ps.pi_y + ps.pit_y);
    ps.x = cplx(l * l) * (ps.pi_y - ps.pit_y);
    ps.y = cplx(-l * l) * (ps.pi_x - ps.pit_x);
    return ps;
}

LP build_operator(const MagneticSetup& s, const OperatorKind& op, const GaugeChoice& gauge) {
    const PhaseSpace ps = phase_space(s);
    const LP& x = ps.x;
    const LP& y = ps.y;
    // basis exp(-i e chi)|n,m>:  U^dag p U = p - e grad chi
    const HarmonicGauge chi = relative_gauge(GaugeChoice::symmetric(), gauge);
    LP px = ps.px, py = ps.py;
    if (!chi.is_zero()) {
        auto [gx, gy] = chi_gradient(s, chi, x, y);
        px = px - gx;
        py = py - gy;
    }
    auto [ax, ay] = potential_poly(s, gauge, x, y);
    const LP mx = px + ax, my = py + ay;
    const LP lmech = x * my - y * mx;
    const LP r2 = x * x + y * y;
    switch (op.tag) {
        case OperatorTag::PCanX: return px;
        case OperatorTag::PMechX: return mx;
        case OperatorTag::PConsX: return mx + s.eB * y;
        case OperatorTag::LCanZ: return x * py - y * px;
        case OperatorTag::LMechZ: return lmech;
        case OperatorTag::LConsZ: return lmech - (0.5 * s.eB) * r2;
        case OperatorTag::Hamiltonian: return (0.5 / s.m_e) * (mx * mx + my * my);
        case OperatorTag::GccMomentum:
        case OperatorTag::GccOam: {
            if (!op.physical) throw ConfigurationError(op.name() + " requires a physical potential");
            auto [qx, qy] = potential_poly(s, *op.physical, x, y);
            if (op.tag == OperatorTag::GccMomentum) return mx - qx;
            return lmech - (x * qy - y * qx);
        }
    }
    throw std::logic_error("unknown operator");
}

LP build_operator(const MagneticSetup& s, const OperatorKind& op, BasisClass b) {
    return build_operator(s, op, basis_gauge(b));
}

cplx table2_entry(const MagneticSetup& s, OperatorTag op, BasisClass b, int n, int m_prime, int m, int extra_cutoff) {
    if (n < 0) throw std::domain_error("Landau level index must be non-negative");
    if (m > n || m_prime > n) throw std::domain_error("angular label m must not exceed n");
    const LP p = build_operator(s, OperatorKind::of(op), b);
    const FockCutoff c{n + extra_cutoff, n - std::min(m, m_prime) + extra_cutoff};
    const FockMatrix mat = assemble(p, c);
    auto v = mat.element(FockLabel::from_nm(n, m_prime), FockLabel::from_nm(n, m));
    if (!v) throw std::runtime_error("matrix element touches the Fock truncation boundary");
    return *v;
}

cplx table2_closed_form(const MagneticSetup& s, OperatorTag op, BasisClass b, int n, int m_prime, int m) {
    if (m > n || m_prime > n) throw std::domain_error("angular label m must not exceed n");
    const double up = m_prime == m + 1 ? std::sqrt(double(n - m)) : 0.0;
    const double down = m_prime == m - 1 ? std::sqrt(double(n - m + 1)) : 0.0;
    const double diag = m_prime == m ? 1.0 : 0.0;
    const cplx shift = -kI * std::sqrt(s.eB / 2.0) * (up - down);
    switch (op) {
        case OperatorTag::PCanX: return b == BasisClass::SymNM ? 0.5 * shift : shift;
        case OperatorTag::PMechX: return 0.0;
        case OperatorTag::PConsX: return shift;
        case OperatorTag::LCanZ: {
            double v = m * diag;
            if (b == BasisClass::L1NM) {
                if (m_prime == m + 2) v += 0.5 * std::sqrt(double(n - m) * (n - m - 1));
                if (m_prime == m - 2) v += 0.5 * std::sqrt(double(n - m + 1) * (n - m + 2));
            }
            return v;
        }
        case OperatorTag::LMechZ: return (2.0 * n + 1.0) * diag;
        case OperatorTag::LConsZ: return m * diag;
        default: break;
    }
    throw std::invalid_argument("no tabulated form for " + operator_name(op));
}

cplx table1_closed_form(const MagneticSetup& s, OperatorTag op, BasisClass b, const PacketSpec& p) {
    const double k2 = p.kx_center * p.kx_center + 0.5 * p.sigma * p.sigma;  // <kx^2> under the weight
    const double spread = p.n + 0.5 - k2 / (2.0 * s.eB) - s.eB / (4.0 * p.sigma * p.sigma);
    switch (op) {
        case OperatorTag::PCanX: return b == BasisClass::SymNM ? 0.5 * p.kx_center : p.kx_center;
        case OperatorTag::PMechX: return 0.0;
        case OperatorTag::PConsX: return p.kx_center;
        case OperatorTag::LCanZ: return b == BasisClass::SymNM ? spread : p.n + 0.5 - k2 / s.eB;
        case OperatorTag::LMechZ: return 2.0 * p.n + 1.0;
        case OperatorTag::LConsZ: return spread;
        default: break;
    }
    throw std::invalid_argument("no tabulated form for " + operator_name(op));
}

std::vector<CommutatorCheck> commutator_suite(const MagneticSetup& s, const FockCutoff& c) {
    const PhaseSpace ps = phase_space(s);
    const double l2 = 1.0 / s.eB;
    auto mat = [&](const LP& p) { return assemble(p, c); };
    auto deviation = [&](const FockMatrix& comm, cplx expected_diag) {
        double worst = 0.0;
        const auto& m = comm.matrix();
        for (int j = 0; j < m.outerSize(); ++j) {
            if (!comm.valid(c.label(j))) continue;
            bool diag_seen = false;
            for (FockMatrix::Sparse::InnerIterator it(m, j); it; ++it) {
                cplx e = it.row() == j ? expected_diag : cplx(0.0);
                if (it.row() == j) diag_seen = true;
                worst = std::max(worst, std::abs(it.value() - e));
            }
            if (!diag_seen) worst = std::max(worst, std::abs(expected_diag));
        }
        return worst;
    };
    std::vector<CommutatorCheck> out;
    auto check = [&](const std::string& name, const LP& a, const LP& b, cplx expected) {
        FockMatrix ma = mat(a), mb = mat(b);
        FockMatrix comm = ma * mb - mb * ma;
        out.push_back({name, deviation(comm, expected), false, comm.valid_columns()});
    };
    auto check_nonzero = [&](const std::string& name, const LP& a, const LP& b) {
        FockMatrix ma = mat(a), mb = mat(b);
        FockMatrix comm = ma * mb - mb * ma;
        out.push_back({name, deviation(comm, 0.0), true, comm.valid_columns()});
    };
    const LP a = LP::letter(Ladder::A), ad = LP::letter(Ladder::Adag);
    const LP b = LP::letter(Ladder::B), bd = LP::letter(Ladder::Bdag);
    check("[a,a+]", a, ad, 1.0);
    check("[b,b+]", b, bd, 1.0);
    check("[a,b]", a, b, 0.0);
    check("[a,b+]", a, bd, 0.0);
    check("[Pi_x,Pi_y]", ps.pi_x, ps.pi_y, -kI / l2);
    check("[Pit_x,Pit_y]", ps.pit_x, ps.pit_y, kI / l2);
    check("[Pi_x,Pit_x]", ps.pi_x, ps.pit_x, 0.0);
    check("[Pi_x,Pit_y]", ps.pi_x, ps.pit_y, 0.0);
    check("[Pi_y,Pit_x]", ps.pi_y, ps.pit_x, 0.0);
    check("[Pi_y,Pit_y]", ps.pi_y, ps.pit_y, 0.0);
    check("[x,p_x]", ps.x, ps.px, kI);
    check("[y,p_y]", ps.y, ps.py, kI);
    check("[x,p_y]", ps.x, ps.py, 0.0);
    for (BasisClass bc : {BasisClass::SymNM, BasisClass::L1NM}) {
        const std::string tag = "/" + basis_class_name(bc);
        const LP h = build_operator(s, OperatorKind::of(OperatorTag::Hamiltonian), bc);
        const LP lc = build_operator(s, OperatorKind::of(OperatorTag::LConsZ), bc);
        const LP pc = build_operator(s, OperatorKind::of(OperatorTag::PConsX), bc);
        check("[H,L_cons]" + tag, h, lc, 0.0);
        check("[H,p_cons]" + tag, h, pc, 0.0);
        check_nonzero("[p_cons,L_cons]" + tag, pc, lc);
    }
    check("[H,L_can]/SymNM", build_operator(s, OperatorKind::of(OperatorTag::Hamiltonian), BasisClass::SymNM),
          build_operator(s, OperatorKind::of(OperatorTag::LCanZ), BasisClass::SymNM), 0.0);
    return out;
}

}  // namespace landau
