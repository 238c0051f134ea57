#ifndef ENRIQUES_QUADRIC_HPP
#define ENRIQUES_QUADRIC_HPP

#include <string>
#include <variant>
#include <vector>

#include "enriques/linalg.hpp"
#include "enriques/numeric.hpp"

namespace enriques {

// 2x2 matrix over Q(i), acting on P^1 as a Moebius transformation.
struct GQMat2 {
    GQ a, b, c, d;

    static GQMat2 identity() { return {GQ(1), GQ(0), GQ(0), GQ(1)}; }
    GQMat2 conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }
    GQ det() const { return a * d - b * c; }
    GQ trace() const { return a + d; }
    friend GQMat2 operator*(const GQMat2& x, const GQMat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    GQMat2 inverse() const;
    bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }
    // proportional over Q(i)
    friend bool proportional(const GQMat2& x, const GQMat2& y);
};

struct P1Point {
    GQ u, v;  // homogeneous (u : v), not both zero
    bool operator==(const P1Point& o) const { return (u * o.v - v * o.u).is_zero(); }
};

P1Point moebius_apply(const GQMat2& m, const P1Point& p);

// Involution of P^1: z -> M z (holomorphic) or z -> M conj(z) (antiholomorphic).
struct P1Involution {
    GQMat2 matrix;
    bool antiholomorphic = false;

    static P1Involution holomorphic(GQMat2 m) { return validated({std::move(m), false}); }
    static P1Involution antiholo(GQMat2 m) { return validated({std::move(m), true}); }

    P1Point apply(const P1Point& p) const;
    bool fixes(const P1Point& p) const { return apply(p) == p; }

    // the real number lambda with M conj(M) = lambda I (antiholomorphic case)
    Rat antiholo_invariant() const;

private:
    static P1Involution validated(P1Involution f);
};

struct TwoPoints {
    std::vector<P1Point> points;  // empty when the fixed points are quadratic
    bool exact = true;            // false: the two points are not Q(i)-rational
};
struct CircleFixedSet {};
struct EmptyFixedSet {};
struct AllOfP1 {};
using FixedSet = std::variant<TwoPoints, CircleFixedSet, EmptyFixedSet, AllOfP1>;

FixedSet fixed_set(const P1Involution& f);

// name in {s, c_a, c_b, s_c_b}
P1Involution canonical_involution(const std::string& name);

enum class HalfTopology { Torus, Sphere, Empty };
std::string half_topology_name(HalfTopology t);

// (Z/2)^2-action on P^1 x P^1: the holomorphic involution is implicitly the
// canonical s acting as (u:v) -> (-u:v) on each factor; the data fixes the
// antiholomorphic c. Decomposable: c = f1 x f2. Indecomposable:
// c(z, w) = (A conj(w), conj(A)^{-1} conj(z)) for the stored swap matrix A.
class QuadricAction {
public:
    static QuadricAction decomposable(P1Involution f1, P1Involution f2);
    static QuadricAction indecomposable(GQMat2 swap_matrix);

    bool is_decomposable() const { return decomposable_; }
    const P1Involution& factor(int i) const;
    const GQMat2& swap_matrix() const;

    // factor of c (i = 1) or s o c (i = 2) acting on the base of `ruling`
    P1Involution base_involution(int i, int ruling) const;

private:
    QuadricAction() = default;
    bool decomposable_ = true;
    P1Involution f1_, f2_;
    GQMat2 swap_;
};

inline constexpr int kRulingsSwapped = -1;  // invariant-fiber marker for type 5

struct ActionReport {
    int type_id = 0;                      // 1..5 on P1xP1, 1..2 on Sigma2
    std::string surface = "P1xP1";        // "P1xP1" | "Sigma2"
    HalfTopology half1 = HalfTopology::Empty;
    HalfTopology half2 = HalfTopology::Empty;
    int fibers1 = 0, fibers2 = 0;         // per-ruling counts, or kRulingsSwapped
    IMat h2_matrix;                       // induced action on H_2 = U
    bool operator==(const ActionReport&) const = default;
};

HalfTopology half_topology(const QuadricAction& a, int i);
int invariant_fibers(const QuadricAction& a, int ruling);  // count or kRulingsSwapped
IMat induced_h2_action(const QuadricAction& a);
ActionReport classify_action(const QuadricAction& a);

// the five canonical representatives, indexed 1..5
QuadricAction canonical_action(int type_id);

// conjugation helpers (preserve the implicit s)
QuadricAction conjugate_by_scalings(const QuadricAction& a, const GQ& alpha, const GQ& beta);
QuadricAction swap_action_factors(const QuadricAction& a);
QuadricAction exchange_c_with_sc(const QuadricAction& a);

// An action on Sigma_2, represented by its blown-down P1xP1 action plus the
// marked invariant generatrix (the image of the (-2)-section).
struct Sigma2Action {
    QuadricAction reduction;
    int marked_ruling = 1;  // ruling of the marked fiber
    P1Point marked_base;    // base point of the marked fiber
};

ActionReport classify_sigma2_action(const Sigma2Action& a);

Sigma2Action canonical_sigma2_action(int type_id);  // 1..2

}  // namespace enriques

#endif
