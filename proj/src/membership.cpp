#include <random>

#include "enriques/branch.hpp"

namespace enriques {

M0Result is_in_m0(const BranchPolynomial& p, std::size_t budget) {
    SignOutcome sign = certify_sign(p, budget);
    if (auto* hz = std::get_if<HasZero>(&sign)) {
        std::string detail = hz->zero ? "exact zero of the torus restriction"
                                      : "sign change of the torus restriction";
        return M0Failure{"sign", detail, false};
    }
    if (std::holds_alternative<BudgetExhausted>(sign))
        return M0Failure{"sign", "positivity budget exhausted", true};
    M0Certificate cert;
    cert.torus = std::get<TorusCertificate>(std::move(sign));

    for (auto [i, j] : {std::pair<int, int>{0, 0}, {0, 4}, {4, 0}, {4, 4}}) {
        if (p.coeff(i, j).is_zero())
            return M0Failure{"corners",
                             "a_{" + std::to_string(i) + "," + std::to_string(j) + "} = 0",
                             false};
    }
    cert.corners_nonzero = true;

    cert.singularities = singular_locus(p);
    if (cert.singularities.positive_dimensional)
        return M0Failure{"singularities", "non-reduced or multiple-component curve", false};
    cert.singularities.types.clear();
    for (const SingularPoint& pt : cert.singularities.points) {
        if (!pt.exact) {
            cert.singularities.types.push_back(AdeType{AdeType::Kind::Unknown, 0});
            return M0Failure{"singularities",
                             "singular point without rational coordinates: classification "
                             "inconclusive",
                             true};
        }
        AdeType t = classify_singularity(p, pt.chart_x, pt.chart_y, pt.x, pt.y);
        cert.singularities.types.push_back(t);
        if (t.kind == AdeType::Kind::Unknown)
            return M0Failure{"singularities", "bounded-order classification inconclusive", true};
        if (!t.is_simple())
            return M0Failure{"singularities", "singularity of type " + t.name(), false};
    }
    return cert;
}

BranchPolynomial center_polynomial() {
    // x^2 (1 + y^4) + (1/10)(1 + y^4 + x^4 + x^4 y^4) + (i/10)(1 - x^4):
    // torus restriction >= 1/2 - sqrt(2)/10 > 0 and the curve is smooth.
    Rat tenth(1, 10);
    CoeffMap m;
    m[{2, 0}] = GQ(1);
    m[{2, 4}] = GQ(1);
    m[{0, 0}] = GQ(tenth, tenth);
    m[{0, 4}] = GQ(tenth);
    m[{4, 0}] = GQ(tenth, -tenth);
    m[{4, 4}] = GQ(tenth);
    return BranchPolynomial::validate(m);
}

Exposition exposition_sign(const BranchPolynomial&, const TorusCertificate& cert) {
    if (cert.sign > 0) return Exposition::Plus;
    if (cert.sign < 0) return Exposition::Minus;
    throw Error("BadCertificate", "certificate carries no sign");
}

namespace {

// the thirteen real degrees of freedom of the coefficient space
struct FreeSlot {
    int i, j;
    bool imag;  // perturb the imaginary part
};

const std::vector<FreeSlot>& free_slots() {
    static const std::vector<FreeSlot> slots = [] {
        std::vector<FreeSlot> s;
        for (int j = 0; j <= 4; j += 2) {
            s.push_back({0, j, false});
            s.push_back({0, j, true});
            s.push_back({2, j, false});
        }
        for (int j = 1; j <= 4; j += 2) {
            s.push_back({1, j, false});
            s.push_back({1, j, true});
        }
        return s;
    }();
    return slots;
}

// deterministic rational in [-1, 1] with denominator 2^20
Rat draw_rat(std::mt19937_64& rng) {
    const long den = 1 << 20;
    std::uniform_int_distribution<long> dist(-den, den);
    return Rat(dist(rng), den);
}

// admissible perturbation: respects parity and reality by construction
BranchPolynomial perturb(const BranchPolynomial& base, std::mt19937_64& rng, const Rat& radius) {
    CoeffMap m = base.coeffs();
    for (const FreeSlot& slot : free_slots()) {
        Rat delta = radius * draw_rat(rng);
        GQ bump = slot.imag ? GQ(Rat(0), delta) : GQ(delta);
        m[{slot.i, slot.j}] += bump;
        if (slot.i != 4 - slot.i) m[{4 - slot.i, slot.j}] += bump.conj();
    }
    return BranchPolynomial::validate(m);
}

}  // namespace

BranchPolynomial sample_m0(std::uint64_t seed, const Rat& radius, std::size_t budget,
                           int max_rejections) {
    BranchPolynomial base = center_polynomial();
    if (sgn(radius) == 0) return base;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_rejections; ++attempt) {
        BranchPolynomial candidate = perturb(base, rng, radius);
        M0Result res = is_in_m0(candidate, budget);
        if (std::holds_alternative<M0Certificate>(res)) return candidate;
    }
    throw Error("RejectionLimitExceeded", "no certified sample within the rejection budget");
}

std::vector<PathSample> connect_path(const BranchPolynomial& p0_in,
                                     const BranchPolynomial& p1_in, int samples,
                                     std::uint64_t seed, std::size_t budget, int max_repairs) {
    if (samples < 2) throw Error("BadAccess", "a path needs at least two samples");

    // certify the endpoints once; refuse opposite expositions, then normalize
    // both to restrict positively (negation is free projectively)
    M0Result r0 = is_in_m0(p0_in, budget);
    M0Result r1 = is_in_m0(p1_in, budget);
    auto* c0 = std::get_if<M0Certificate>(&r0);
    auto* c1 = std::get_if<M0Certificate>(&r1);
    if (!c0 || !c1) throw Error("NotCertified", "path endpoint is not certified in M0");
    if (c0->torus.sign != c1->torus.sign)
        throw Error("OppositeSigns",
                    "endpoints certify with opposite signs; negate one explicitly");
    BranchPolynomial p0 = c0->torus.sign > 0 ? p0_in : p0_in.negated();
    BranchPolynomial p1 = c1->torus.sign > 0 ? p1_in : p1_in.negated();

    std::mt19937_64 rng(seed);
    std::vector<PathSample> chain;
    for (int k = 0; k < samples; ++k) {
        Rat t(k, samples - 1);
        BranchPolynomial pt = BranchPolynomial::blend(t, p0, p1);
        M0Result res = is_in_m0(pt, budget);
        if (auto* cert = std::get_if<M0Certificate>(&res)) {
            chain.push_back(PathSample{t, pt, std::move(*cert), false});
            continue;
        }
        bool repaired = false;
        for (int attempt = 0; attempt < max_repairs && !repaired; ++attempt) {
            Rat mu(1, 64);
            BranchPolynomial candidate = perturb(pt, rng, mu);
            M0Result rr = is_in_m0(candidate, budget);
            if (auto* cert = std::get_if<M0Certificate>(&rr)) {
                chain.push_back(PathSample{t, candidate, std::move(*cert), true});
                repaired = true;
            }
        }
        if (!repaired)
            throw Error("PathRepairFailed", "no certified repair at t = " + rat_to_string(t));
    }
    return chain;
}

}  // namespace enriques
