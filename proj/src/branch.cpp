#include "enriques/branch.hpp"

namespace enriques {

CirclePoint circle_point(int chart, const Rat& t) {
    Rat den = 1 + t * t;
    Rat c = (1 - t * t) / den;
    Rat s = (2 * t) / den;
    if (chart == 0) return {c, s};
    if (chart == 1) return {-c, -s};
    throw Error("BadChart", "circle chart must be 0 or 1");
}

CircleEnclosure circle_enclosure(const CirclePatch& p) {
    const Rat& a = p.t.lo;
    const Rat& b = p.t.hi;
    if (a < Rat(-1) || b > Rat(1)) throw Error("BadInterval", "patch must lie in [-1, 1]");
    CirclePoint pa = circle_point(0, a), pb = circle_point(0, b);
    // sin is monotone increasing in t on [-1, 1]
    QI s(pa.s, pb.s);
    // cos is decreasing in |t|
    Rat cmin = std::min(pa.c, pb.c);
    Rat cmax;
    if (sgn(a) <= 0 && sgn(b) >= 0)
        cmax = Rat(1);
    else
        cmax = std::max(pa.c, pb.c);
    QI c(cmin, cmax);
    if (p.chart == 0) return {c, s};
    if (p.chart == 1) return {-c, -s};
    throw Error("BadChart", "circle chart must be 0 or 1");
}

namespace {

bool slot_allowed(int i, int j) {
    return 0 <= i && i <= 4 && 0 <= j && j <= 4 && ((i + j) % 2 == 0);
}

}  // namespace

BranchPolynomial BranchPolynomial::validate(const CoeffMap& raw) {
    BranchPolynomial p;
    for (const auto& [key, value] : raw) {
        if (value.is_zero()) continue;
        auto [i, j] = key;
        if (!slot_allowed(i, j))
            throw Error("ParityViolation", "monomial x^" + std::to_string(i) + " y^" +
                                               std::to_string(j) + " is not admissible");
        p.coeffs_[key] = value;
    }
    if (p.coeffs_.empty()) throw Error("ZeroPolynomial", "the zero polynomial is excluded");
    for (const auto& [key, value] : p.coeffs_) {
        auto [i, j] = key;
        GQ partner = p.coeff(4 - i, j);
        if (partner.conj() != value)
            throw Error("RealityViolation", "conj(a_{" + std::to_string(4 - i) + "," +
                                                std::to_string(j) + "}) != a_{" +
                                                std::to_string(i) + "," + std::to_string(j) + "}");
    }
    return p;
}

GQ BranchPolynomial::coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? GQ(0) : it->second;
}

GPoly2 BranchPolynomial::chart_poly(int chart_x, int chart_y) const {
    if ((chart_x != 0 && chart_x != 1) || (chart_y != 0 && chart_y != 1))
        throw Error("BadChart", "chart indices must be 0 or 1");
    GPoly2 f(5, GPoly(5));
    for (const auto& [key, value] : coeffs_) {
        auto [i, j] = key;
        int ei = chart_x ? 4 - i : i;
        int ej = chart_y ? 4 - j : j;
        f[static_cast<std::size_t>(ej)][static_cast<std::size_t>(ei)] += value;
    }
    return gp2_normalize(std::move(f));
}

BranchPolynomial BranchPolynomial::negated() const {
    BranchPolynomial p;
    for (const auto& [key, value] : coeffs_) p.coeffs_[key] = -value;
    return p;
}

BranchPolynomial BranchPolynomial::scaled(const Rat& c) const {
    if (sgn(c) == 0) throw Error("ZeroPolynomial", "scaling by zero is excluded");
    BranchPolynomial p;
    for (const auto& [key, value] : coeffs_) p.coeffs_[key] = GQ(c) * value;
    return p;
}

BranchPolynomial BranchPolynomial::blend(const Rat& t, const BranchPolynomial& p0,
                                         const BranchPolynomial& p1) {
    CoeffMap m;
    for (const auto& [key, value] : p0.coeffs_) m[key] += GQ(1 - t) * value;
    for (const auto& [key, value] : p1.coeffs_) m[key] += GQ(t) * value;
    return validate(m);
}

BranchPolynomial BranchPolynomial::plus(const BranchPolynomial& q, const Rat& mu) const {
    CoeffMap m = coeffs_;
    for (const auto& [key, value] : q.coeffs_) m[key] += GQ(mu) * value;
    return validate(m);
}

BranchPolynomial BranchPolynomial::normalized() const {
    Rat best_norm(-1);
    std::pair<int, int> best_key{5, 5};
    GQ best_val;
    for (const auto& [key, value] : coeffs_) {
        Rat n = value.norm();
        if (n > best_norm || (n == best_norm && key < best_key)) {
            best_norm = n;
            best_key = key;
            best_val = value;
        }
    }
    int s = sgn(best_val.re);
    if (s == 0) s = sgn(best_val.im);
    if (s >= 0) return *this;
    return negated();
}

TorusForm torus_restriction(const BranchPolynomial& p) {
    TorusForm f;
    for (int j = 0; j <= 4; j += 2) {
        GQ a0 = p.coeff(0, j), a2 = p.coeff(2, j), a4 = p.coeff(4, j);
        if (a4 != a0.conj() || !a2.is_real())
            throw Error("Internal", "reality pairing violated in torus restriction");
        f.A[static_cast<std::size_t>(j)] = 2 * a0.re;
        f.B[static_cast<std::size_t>(j)] = 2 * a0.im;
        f.K[static_cast<std::size_t>(j)] = a2.re;
    }
    for (int j = 1; j <= 4; j += 2) {
        GQ a1 = p.coeff(1, j), a3 = p.coeff(3, j);
        if (a3 != a1.conj())
            throw Error("Internal", "reality pairing violated in torus restriction");
        f.D[static_cast<std::size_t>(j)] = 2 * a1.re;
        f.E[static_cast<std::size_t>(j)] = 2 * a1.im;
    }
    return f;
}

Rat TorusForm::eval(const CirclePoint& theta, const CirclePoint& phi) const {
    Rat cos2t = 2 * theta.c * theta.c - 1;
    Rat sin2t = 2 * theta.c * theta.s;
    Rat value(0);
    for (int j = 0; j <= 4; ++j) {
        std::size_t js = static_cast<std::size_t>(j);
        Rat angular;
        if (j % 2 == 0)
            angular = A[js] * cos2t + B[js] * sin2t + K[js];
        else
            angular = D[js] * theta.c + E[js] * theta.s;
        if (sgn(angular) == 0) continue;
        Rat w(1);
        for (int k = 0; k < 4 - j; ++k) w *= phi.c;
        for (int k = 0; k < j; ++k) w *= phi.s;
        value += w * angular;
    }
    return value;
}

QI TorusForm::eval_interval(const CircleEnclosure& theta, const CircleEnclosure& phi) const {
    QI cos2t = Rat(2) * theta.c.square() - QI(Rat(1));
    QI sin2t = Rat(2) * (theta.c * theta.s);
    QI value{Rat(0)};
    for (int j = 0; j <= 4; ++j) {
        std::size_t js = static_cast<std::size_t>(j);
        QI angular;
        if (j % 2 == 0) {
            if (sgn(A[js]) == 0 && sgn(B[js]) == 0 && sgn(K[js]) == 0) continue;
            angular = A[js] * cos2t + B[js] * sin2t + QI(K[js]);
        } else {
            if (sgn(D[js]) == 0 && sgn(E[js]) == 0) continue;
            angular = D[js] * theta.c + E[js] * theta.s;
        }
        QI w = phi.c.pow(static_cast<unsigned>(4 - j)) * phi.s.pow(static_cast<unsigned>(j));
        value = value + w * angular;
    }
    return value;
}

Rat TorusCertificate::min_bound() const {
    Rat best(-1);
    for (const ChartTree& tree : trees)
        for (const CertNode& n : tree.nodes)
            if (n.split_dim < 0 && !n.undecided)
                if (sgn(best) < 0 || n.bound < best) best = n.bound;
    return best;
}

std::string AdeType::name() const {
    switch (kind) {
        case Kind::A: return "A" + std::to_string(index);
        case Kind::D: return "D" + std::to_string(index);
        case Kind::E: return "E" + std::to_string(index);
        case Kind::NotSimple: return "NotSimple";
        case Kind::Unknown: return "Unknown";
    }
    return "?";
}

}  // namespace enriques
