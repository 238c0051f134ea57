#include "enriques/quadric.hpp"

namespace enriques {

GQMat2 GQMat2::inverse() const {
    GQ dt = det();
    if (dt.is_zero()) throw Error("Singular", "2x2 matrix is not invertible");
    return {d / dt, (-b) / dt, (-c) / dt, a / dt};
}

bool proportional(const GQMat2& x, const GQMat2& y) {
    // x = t y for some nonzero t: all 2x2 cross terms vanish
    const GQ* xs[4] = {&x.a, &x.b, &x.c, &x.d};
    const GQ* ys[4] = {&y.a, &y.b, &y.c, &y.d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!((*xs[i]) * (*ys[j]) - (*xs[j]) * (*ys[i])).is_zero()) return false;
    // rule out the zero/zero degenerate match
    bool xz = x.a.is_zero() && x.b.is_zero() && x.c.is_zero() && x.d.is_zero();
    bool yz = y.a.is_zero() && y.b.is_zero() && y.c.is_zero() && y.d.is_zero();
    return !xz && !yz;
}

P1Point moebius_apply(const GQMat2& m, const P1Point& p) {
    return {m.a * p.u + m.b * p.v, m.c * p.u + m.d * p.v};
}

P1Point P1Involution::apply(const P1Point& p) const {
    if (p.u.is_zero() && p.v.is_zero()) throw Error("BadPoint", "(0:0) is not a point of P1");
    P1Point q = antiholomorphic ? P1Point{p.u.conj(), p.v.conj()} : p;
    return moebius_apply(matrix, q);
}

Rat P1Involution::antiholo_invariant() const {
    if (!antiholomorphic)
        throw Error("NotAntiholomorphic", "invariant defined for antiholomorphic maps");
    GQMat2 p = matrix * matrix.conj();
    return p.a.re;  // p = lambda I with lambda real, by validation
}

P1Involution P1Involution::validated(P1Involution f) {
    if (f.matrix.det().is_zero()) throw Error("Singular", "involution matrix must be invertible");
    GQMat2 p = f.antiholomorphic ? f.matrix * f.matrix.conj() : f.matrix * f.matrix;
    if (!p.b.is_zero() || !p.c.is_zero() || p.a != p.d || p.a.is_zero())
        throw Error("NotInvolutive", "matrix does not define an involution of P1");
    if (f.antiholomorphic && !p.a.is_real())
        throw Error("Internal", "antiholomorphic invariant must be real");
    return f;
}

FixedSet fixed_set(const P1Involution& f) {
    if (!f.antiholomorphic) {
        if (f.matrix.is_scalar()) return AllOfP1{};
        // non-scalar involution is traceless; eigenvalues are +-sqrt(a^2 + bc)
        const GQMat2& m = f.matrix;
        GQ disc = m.a * m.a + m.b * m.c;
        auto mu = gq_sqrt_exact(disc);
        if (!mu) return TwoPoints{{}, false};
        TwoPoints out;
        for (int sign : {+1, -1}) {
            GQ ev = (sign > 0) ? *mu : -*mu;
            // kernel of (M - ev I): orthogonal to any nonzero row
            GQ r1 = m.a - ev, r2 = m.b;
            if (r1.is_zero() && r2.is_zero()) {
                r1 = m.c;
                r2 = m.d - ev;
            }
            out.points.push_back(P1Point{-r2, r1});
        }
        return out;
    }
    Rat lambda = f.antiholo_invariant();
    if (sgn(lambda) > 0) return CircleFixedSet{};
    return EmptyFixedSet{};
}

P1Involution canonical_involution(const std::string& name) {
    if (name == "s") return P1Involution::holomorphic({GQ(-1), GQ(0), GQ(0), GQ(1)});
    if (name == "c_a") return P1Involution::antiholo(GQMat2::identity());
    if (name == "c_b") return P1Involution::antiholo({GQ(0), GQ(1), GQ(1), GQ(0)});
    if (name == "s_c_b") return P1Involution::antiholo({GQ(0), GQ(-1), GQ(1), GQ(0)});
    throw Error("UnknownInvolution", "unrecognized involution name '" + name + "'");
}

std::string half_topology_name(HalfTopology t) {
    switch (t) {
        case HalfTopology::Torus: return "torus";
        case HalfTopology::Sphere: return "sphere";
        case HalfTopology::Empty: return "empty";
    }
    return "?";
}

namespace {

const GQMat2 kS{GQ(-1), GQ(0), GQ(0), GQ(1)};

bool commutes_with_s(const GQMat2& m) {
    // S M = M S up to scalar, i.e. M is diagonal or antidiagonal
    return proportional(kS * m, m * kS);
}

}  // namespace

QuadricAction QuadricAction::decomposable(P1Involution f1, P1Involution f2) {
    if (!f1.antiholomorphic || !f2.antiholomorphic)
        throw Error("NotAnAction", "decomposable factors must be antiholomorphic");
    if (!commutes_with_s(f1.matrix) || !commutes_with_s(f2.matrix))
        throw Error("NotAnAction", "factors must commute with the holomorphic involution");
    QuadricAction a;
    a.decomposable_ = true;
    a.f1_ = std::move(f1);
    a.f2_ = std::move(f2);
    return a;
}

QuadricAction QuadricAction::indecomposable(GQMat2 swap_matrix) {
    if (swap_matrix.det().is_zero())
        throw Error("NotAnAction", "swap matrix must be invertible");
    if (!commutes_with_s(swap_matrix))
        throw Error("NotAnAction", "swap matrix must commute with the holomorphic involution");
    QuadricAction a;
    a.decomposable_ = false;
    a.swap_ = std::move(swap_matrix);
    return a;
}

const P1Involution& QuadricAction::factor(int i) const {
    if (!decomposable_) throw Error("BadAccess", "indecomposable action has no factors");
    if (i == 1) return f1_;
    if (i == 2) return f2_;
    throw Error("BadAccess", "factor index must be 1 or 2");
}

const GQMat2& QuadricAction::swap_matrix() const {
    if (decomposable_) throw Error("BadAccess", "decomposable action has no swap matrix");
    return swap_;
}

P1Involution QuadricAction::base_involution(int i, int ruling) const {
    if (!decomposable_) throw Error("BadAccess", "base involutions only for decomposable actions");
    if ((i != 1 && i != 2) || (ruling != 1 && ruling != 2))
        throw Error("BadAccess", "indices must be 1 or 2");
    GQMat2 m = (ruling == 1) ? f1_.matrix : f2_.matrix;
    if (i == 2) m = kS * m;
    return P1Involution::antiholo(std::move(m));
}

HalfTopology half_topology(const QuadricAction& a, int i) {
    if (i != 1 && i != 2) throw Error("BadAccess", "half index must be 1 or 2");
    if (!a.is_decomposable()) {
        // the fixed set of a factor-swapping antiholomorphic involution is the
        // graph { (A conj(w), w) }, a 2-sphere
        return HalfTopology::Sphere;
    }
    for (int ruling : {1, 2}) {
        FixedSet f = fixed_set(a.base_involution(i, ruling));
        if (!std::holds_alternative<CircleFixedSet>(f)) return HalfTopology::Empty;
    }
    return HalfTopology::Torus;
}

int invariant_fibers(const QuadricAction& a, int ruling) {
    if (ruling != 1 && ruling != 2) throw Error("BadAccess", "ruling must be 1 or 2");
    if (!a.is_decomposable()) return kRulingsSwapped;
    // fibers invariant under the whole action: base point fixed by the
    // canonical s (i.e. (0:1) or (1:0)) and by the c-factor
    const P1Involution& f = a.factor(ruling);
    int count = 0;
    for (const P1Point& p : {P1Point{GQ(0), GQ(1)}, P1Point{GQ(1), GQ(0)}})
        if (f.fixes(p)) ++count;
    return count;
}

IMat induced_h2_action(const QuadricAction& a) {
    IMat m(2, 2);
    if (a.is_decomposable()) {
        m(0, 0) = -1;
        m(1, 1) = -1;
    } else {
        m(0, 1) = -1;
        m(1, 0) = -1;
    }
    return m;
}

ActionReport classify_action(const QuadricAction& a) {
    ActionReport r;
    r.surface = "P1xP1";
    r.half1 = half_topology(a, 1);
    r.half2 = half_topology(a, 2);
    r.fibers1 = invariant_fibers(a, 1);
    r.fibers2 = invariant_fibers(a, 2);
    r.h2_matrix = induced_h2_action(a);
    if (!a.is_decomposable()) {
        r.type_id = 5;
        return r;
    }
    bool t1 = r.half1 == HalfTopology::Torus, t2 = r.half2 == HalfTopology::Torus;
    int total = r.fibers1 + r.fibers2;
    if (t1 && t2) {
        r.type_id = 1;
        if (r.fibers1 != 2 || r.fibers2 != 2)
            throw Error("Internal", "type 1 must have two invariant fibers per ruling");
    } else if (t1 || t2) {
        r.type_id = (total > 0) ? 2 : 3;
        if (r.type_id == 2 && total != 2)
            throw Error("Internal", "type 2 must have one ruling with two invariant fibers");
    } else {
        r.type_id = 4;
        if (total != 0) throw Error("Internal", "type 4 must have no invariant fibers");
    }
    return r;
}

QuadricAction canonical_action(int type_id) {
    switch (type_id) {
        case 1:
            return QuadricAction::decomposable(canonical_involution("c_a"),
                                               canonical_involution("c_a"));
        case 2:
            return QuadricAction::decomposable(canonical_involution("c_a"),
                                               canonical_involution("c_b"));
        case 3:
            return QuadricAction::decomposable(canonical_involution("c_b"),
                                               canonical_involution("c_b"));
        case 4:
            return QuadricAction::decomposable(canonical_involution("c_b"),
                                               canonical_involution("s_c_b"));
        case 5:
            return QuadricAction::indecomposable(GQMat2::identity());
    }
    throw Error("BadAccess", "canonical action index must be 1..5");
}

QuadricAction conjugate_by_scalings(const QuadricAction& a, const GQ& alpha, const GQ& beta) {
    if (alpha.is_zero() || beta.is_zero())
        throw Error("BadAccess", "scaling factors must be nonzero");
    GQMat2 t1{alpha, GQ(0), GQ(0), GQ(1)};
    GQMat2 t2{beta, GQ(0), GQ(0), GQ(1)};
    // antiholomorphic conjugation: M -> T M conj(T)^{-1}
    if (a.is_decomposable()) {
        P1Involution g1 =
            P1Involution::antiholo(t1 * a.factor(1).matrix * t1.conj().inverse());
        P1Involution g2 =
            P1Involution::antiholo(t2 * a.factor(2).matrix * t2.conj().inverse());
        return QuadricAction::decomposable(std::move(g1), std::move(g2));
    }
    return QuadricAction::indecomposable(t1 * a.swap_matrix() * t2.conj().inverse());
}

QuadricAction swap_action_factors(const QuadricAction& a) {
    if (a.is_decomposable()) return QuadricAction::decomposable(a.factor(2), a.factor(1));
    return QuadricAction::indecomposable(a.swap_matrix().conj().inverse());
}

QuadricAction exchange_c_with_sc(const QuadricAction& a) {
    if (a.is_decomposable())
        return QuadricAction::decomposable(P1Involution::antiholo(kS * a.factor(1).matrix),
                                           P1Involution::antiholo(kS * a.factor(2).matrix));
    return QuadricAction::indecomposable(kS * a.swap_matrix());
}

ActionReport classify_sigma2_action(const Sigma2Action& a) {
    if (!a.reduction.is_decomposable())
        throw Error("NotReducible", "the blown-down action must be decomposable");
    if (a.marked_ruling != 1 && a.marked_ruling != 2)
        throw Error("NotReducible", "marked ruling must be 1 or 2");
    // the marked fiber must be invariant under the whole action
    const P1Point zero{GQ(0), GQ(1)}, infty{GQ(1), GQ(0)};
    if (!(a.marked_base == zero) && !(a.marked_base == infty))
        throw Error("NotReducible", "marked fiber is not invariant under s");
    if (!a.reduction.factor(a.marked_ruling).fixes(a.marked_base))
        throw Error("NotReducible", "marked fiber is not invariant under c");

    ActionReport base = classify_action(a.reduction);
    if (base.type_id != 1 && base.type_id != 2)
        throw Error("NotReducible", "reduction must be of type 1 or 2");

    ActionReport r;
    r.surface = "Sigma2";
    r.half1 = base.half1;
    r.half2 = base.half2;
    // generatrices of Sigma_2 correspond to fibers of the other ruling
    int other = 3 - a.marked_ruling;
    int gen = invariant_fibers(a.reduction, other);
    r.fibers1 = gen;
    r.fibers2 = gen;
    r.h2_matrix = IMat(0, 0);
    r.type_id = (base.type_id == 1) ? 1 : 2;
    if (r.type_id == 1 && gen != 2)
        throw Error("Internal", "Sigma2 type 1 must have two invariant generatrices");
    if (r.type_id == 2 && gen != 0)
        throw Error("Internal", "Sigma2 type 2 must have no invariant generatrices");
    return r;
}

Sigma2Action canonical_sigma2_action(int type_id) {
    if (type_id == 1)
        return Sigma2Action{canonical_action(1), 1, P1Point{GQ(0), GQ(1)}};
    if (type_id == 2)
        return Sigma2Action{canonical_action(2), 1, P1Point{GQ(0), GQ(1)}};
    throw Error("BadAccess", "canonical Sigma2 action index must be 1 or 2");
}

}  // namespace enriques
