#ifndef ENRIQUES_BRANCH_HPP
#define ENRIQUES_BRANCH_HPP

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "enriques/gpoly.hpp"
#include "enriques/interval.hpp"

namespace enriques {

using CoeffMap = std::map<std::pair<int, int>, GQ>;

// An s-invariant bidegree-(4,4) branch polynomial: monomials x^i y^j with
// 0 <= i,j <= 4 and i = j mod 2, subject to conj(a_{4-i,j}) = a_{i,j}.
class BranchPolynomial {
public:
    static BranchPolynomial validate(const CoeffMap& raw);

    const CoeffMap& coeffs() const { return coeffs_; }
    GQ coeff(int i, int j) const;

    // affine polynomial in the chart (chart_x, chart_y); 1 means the chart at
    // infinity (x' = 1/x resp. y' = 1/y), with the (4,4)-rehomogenization
    GPoly2 chart_poly(int chart_x, int chart_y) const;

    BranchPolynomial negated() const;
    BranchPolynomial scaled(const Rat& c) const;                 // c != 0
    static BranchPolynomial blend(const Rat& t, const BranchPolynomial& p0,
                                  const BranchPolynomial& p1);   // (1-t) p0 + t p1
    BranchPolynomial plus(const BranchPolynomial& q, const Rat& mu) const;  // p + mu q

    // deterministic projective normalization: the largest-|.|^2 coefficient
    // (ties broken lexicographically by (i,j)) gets positive real part
    BranchPolynomial normalized() const;

    bool operator==(const BranchPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    BranchPolynomial() = default;
    CoeffMap coeffs_;
};

// The real-valued restriction of e^{-2 i theta} p to the torus |x| = 1,
// y = (sin phi : cos phi), organized for exact and interval evaluation:
//   f = sum_{j even} C^{4-j} S^j (A_j cos2t + B_j sin2t + K_j)
//     + sum_{j odd}  C^{4-j} S^j (D_j cos t + E_j sin t)
struct TorusForm {
    std::array<Rat, 5> A{}, B{}, K{}, D{}, E{};

    Rat eval(const CirclePoint& theta, const CirclePoint& phi) const;
    QI eval_interval(const CircleEnclosure& theta, const CircleEnclosure& phi) const;
};

TorusForm torus_restriction(const BranchPolynomial& p);

// ---- certified positivity on the torus ----

struct TorusSample {
    int theta_chart = 0, phi_chart = 0;
    Rat theta_t, phi_t;
    Rat value;  // exact f at the sample
};

// Subdivision tree over one (theta chart, phi chart) patch pair.
struct CertNode {
    QI t, u;
    int split_dim = -1;            // -1: leaf; 0: split in t; 1: split in u
    std::size_t child0 = 0, child1 = 0;
    Rat bound;                     // leaves: certified lower bound on |f|
    bool undecided = false;        // leaves that ran out of budget
};

struct ChartTree {
    int theta_chart = 0, phi_chart = 0;
    std::vector<CertNode> nodes;  // nodes[0] is the root
};

struct TorusCertificate {
    int sign = 0;  // +1: f > 0 everywhere; -1: f < 0 everywhere
    std::array<ChartTree, 4> trees;
    int depth = 0;
    std::size_t boxes = 0;  // processed box count

    Rat min_bound() const;  // smallest certified |f| bound over all leaves
};

struct HasZero {
    std::optional<TorusSample> zero;                           // exact zero when hit
    std::optional<std::pair<TorusSample, TorusSample>> pair;   // opposite strict signs
};
struct BudgetExhausted {
    std::size_t boxes = 0;
};
using SignOutcome = std::variant<TorusCertificate, HasZero, BudgetExhausted>;

SignOutcome certify_sign(const BranchPolynomial& p, std::size_t budget = 200000);

// re-derive every leaf bound and the tree structure; throws on any mismatch
void audit_certificate(const BranchPolynomial& p, const TorusCertificate& cert);

// ---- singular locus and ADE classification ----

struct AdeType {
    enum class Kind { A, D, E, NotSimple, Unknown } kind = Kind::Unknown;
    int index = 0;  // k for A_k / D_k / E_k

    bool is_simple() const { return kind == Kind::A || kind == Kind::D || kind == Kind::E; }
    std::string name() const;
    bool operator==(const AdeType&) const = default;
};

struct SingularPoint {
    int chart_x = 0, chart_y = 0;  // 1 marks the chart at infinity
    long count = 0;                // number of geometric points described
    bool exact = false;
    GQ x, y;                       // set when exact (single point)
    GPoly modulus;                 // triangular data otherwise: m(x)
    GPoly2 gcd_y;                  //   and the fiber polynomial g(x, y)
};

struct SingularityReport {
    bool smooth = true;
    bool positive_dimensional = false;  // non-reduced or curve with multiple components
    std::vector<SingularPoint> points;
    std::vector<AdeType> types;         // parallel to points once classified
};

SingularityReport singular_locus(const BranchPolynomial& p);

// classification of an isolated plane-curve germ at the origin
AdeType classify_germ(const GPoly2& f, int order_bound = 16);

AdeType classify_singularity(const BranchPolynomial& p, int chart_x, int chart_y,
                             const GQ& x0, const GQ& y0, int order_bound = 16);

// ---- membership, sampling, path connection ----

struct M0Certificate {
    TorusCertificate torus;
    bool corners_nonzero = false;
    SingularityReport singularities;
};

struct M0Failure {
    std::string clause;   // "sign" | "corners" | "singularities"
    std::string detail;
    bool inconclusive = false;  // budget exhausted or Unknown classification
};

using M0Result = std::variant<M0Certificate, M0Failure>;

M0Result is_in_m0(const BranchPolynomial& p, std::size_t budget = 200000);

BranchPolynomial center_polynomial();

enum class Exposition { Plus, Minus };
Exposition exposition_sign(const BranchPolynomial& p, const TorusCertificate& cert);

BranchPolynomial sample_m0(std::uint64_t seed, const Rat& radius,
                           std::size_t budget = 200000, int max_rejections = 64);

struct PathSample {
    Rat t;
    BranchPolynomial polynomial;
    M0Certificate certificate;
    bool repaired = false;
};

std::vector<PathSample> connect_path(const BranchPolynomial& p0, const BranchPolynomial& p1,
                                     int samples, std::uint64_t seed,
                                     std::size_t budget = 200000, int max_repairs = 8);

}  // namespace enriques

#endif
