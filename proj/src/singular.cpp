#include "enriques/branch.hpp"

namespace enriques {

namespace {

// exact roots of a univariate polynomial over Q(i), when the degree is small
// enough to solve by radicals that stay in Q(i)
std::optional<std::vector<GQ>> try_exact_roots(const GPoly& f) {
    int d = gp_degree(f);
    if (d <= 0) return std::vector<GQ>{};
    if (d == 1) return std::vector<GQ>{-f[0] / f[1]};
    if (d == 2) {
        GQ disc = f[1] * f[1] - GQ(4) * f[2] * f[0];
        auto root = gq_sqrt_exact(disc);
        if (!root) return std::nullopt;
        GQ two_a = GQ(2) * f[2];
        return std::vector<GQ>{(-f[1] + *root) / two_a, (-f[1] - *root) / two_a};
    }
    return std::nullopt;
}

// one-variable singular locus on a boundary fiber: common roots of the
// nonzero members; `all_zero` reports a positive-dimensional degeneration
struct FiberLocus {
    bool positive_dimensional = false;
    GPoly common;  // squarefree; roots are the singular coordinates
};

FiberLocus fiber_locus(const std::vector<GPoly>& members) {
    FiberLocus out;
    GPoly g;
    bool any = false;
    for (const GPoly& m : members) {
        if (gp_is_zero(m)) continue;
        any = true;
        g = gp_gcd(g, m);
    }
    if (!any) {
        out.positive_dimensional = true;
        return out;
    }
    out.common = gp_degree(g) > 0 ? gp_squarefree_part(g) : GPoly{};
    return out;
}

void emit_univariate_points(SingularityReport& rep, int chart_x, int chart_y, bool var_is_y,
                            const GPoly& common) {
    if (gp_degree(common) <= 0) return;
    auto roots = try_exact_roots(common);
    if (roots) {
        for (const GQ& r : *roots) {
            SingularPoint pt;
            pt.chart_x = chart_x;
            pt.chart_y = chart_y;
            pt.count = 1;
            pt.exact = true;
            if (var_is_y) {
                pt.x = GQ(0);
                pt.y = r;
            } else {
                pt.x = r;
                pt.y = GQ(0);
            }
            rep.points.push_back(std::move(pt));
        }
        return;
    }
    SingularPoint pt;
    pt.chart_x = chart_x;
    pt.chart_y = chart_y;
    pt.count = gp_degree(common);
    pt.exact = false;
    if (var_is_y) {
        pt.modulus = GPoly{GQ(0), GQ(1)};  // x' = 0
        pt.gcd_y = GPoly2{common};         // wrong orientation is irrelevant: descriptive only
        GPoly2 g(common.size());
        for (std::size_t i = 0; i < common.size(); ++i) g[i] = GPoly{common[i]};
        pt.gcd_y = std::move(g);
    } else {
        pt.modulus = common;
        pt.gcd_y = GPoly2{GPoly{GQ(0), GQ(1)}};  // y' = 0
    }
    rep.points.push_back(std::move(pt));
}

}  // namespace

SingularityReport singular_locus(const BranchPolynomial& p) {
    SingularityReport rep;

    // ---- affine chart (finite x, finite y) ----
    GPoly2 f = p.chart_poly(0, 0);
    GPoly2 fx = gp2_dx(f), fy = gp2_dy(f);

    // non-reduced or multiple components: the whole gcd is singular
    GPoly2 triple = gp2_gcd(gp2_gcd(f, fx), fy);
    if (gp2_degree_y(triple) > 0 || gp2_degree_x(triple) > 0) {
        rep.smooth = false;
        rep.positive_dimensional = true;
        rep.types.push_back(AdeType{AdeType::Kind::NotSimple, 0});
        return rep;
    }

    std::vector<GPoly2> system;
    for (const GPoly2* q : {&f, &fx, &fy})
        if (!gp2_is_zero(*q)) system.push_back(*q);

    // eliminate y: collect necessary vanishing conditions on x
    GPoly candidates;
    bool have_candidate = false;
    for (std::size_t a = 0; a < system.size(); ++a) {
        if (gp2_degree_y(system[a]) == 0) {
            candidates = gp_gcd(candidates, system[a][0]);
            have_candidate = true;
        }
        for (std::size_t b = a + 1; b < system.size(); ++b) {
            if (gp2_degree_y(system[a]) < 1 || gp2_degree_y(system[b]) < 1) continue;
            GPoly res = gp2_resultant_y(system[a], system[b]);
            if (!gp_is_zero(res)) {
                candidates = gp_gcd(candidates, res);
                have_candidate = true;
            }
        }
    }
    if (!have_candidate) {
        // all pairwise resultants vanish: pairs share factors; retry against
        // their pairwise gcds (the triple gcd is trivial, so this terminates)
        for (std::size_t a = 0; a < system.size() && !have_candidate; ++a)
            for (std::size_t b = a + 1; b < system.size() && !have_candidate; ++b) {
                GPoly2 g = gp2_gcd(system[a], system[b]);
                for (std::size_t c = 0; c < system.size(); ++c) {
                    if (c == a || c == b) continue;
                    GPoly res = gp2_resultant_y(g, system[c]);
                    if (!gp_is_zero(res)) {
                        candidates = gp_gcd(candidates, res);
                        have_candidate = true;
                        break;
                    }
                }
            }
        if (!have_candidate)
            throw Error("Internal", "degenerate elimination in singular_locus");
    }

    if (gp_degree(candidates) > 0) {
        GPoly modulus = gp_squarefree_part(candidates);
        for (const TriangularBranch& br : triangular_gcd_over(system, modulus)) {
            if (gp2_is_zero(br.gcd_y)) {
                rep.smooth = false;
                rep.positive_dimensional = true;
                rep.types.push_back(AdeType{AdeType::Kind::NotSimple, 0});
                return rep;
            }
            int dy = gp2_degree_y(br.gcd_y);
            if (dy < 1) continue;  // no solutions over this branch
            int dm = gp_degree(br.modulus);
            if (dm == 1) {
                GQ x0 = -br.modulus[0] / br.modulus[1];
                GPoly fiber = gp2_eval_x(br.gcd_y, x0);
                auto roots = try_exact_roots(fiber);
                if (roots) {
                    for (const GQ& y0 : *roots) {
                        SingularPoint pt;
                        pt.chart_x = 0;
                        pt.chart_y = 0;
                        pt.count = 1;
                        pt.exact = true;
                        pt.x = x0;
                        pt.y = y0;
                        rep.points.push_back(std::move(pt));
                    }
                    continue;
                }
            }
            SingularPoint pt;
            pt.chart_x = 0;
            pt.chart_y = 0;
            pt.count = static_cast<long>(dm) * dy;
            pt.exact = false;
            pt.modulus = br.modulus;
            pt.gcd_y = br.gcd_y;
            rep.points.push_back(std::move(pt));
        }
    }

    // ---- fiber x = infinity: substitute x' = 0 in the (1,0)-chart ----
    {
        GPoly2 g = p.chart_poly(1, 0);
        std::vector<GPoly> members = {gp2_eval_x(g, GQ(0)), gp2_eval_x(gp2_dx(g), GQ(0)),
                                      gp2_eval_x(gp2_dy(g), GQ(0))};
        FiberLocus loc = fiber_locus(members);
        if (loc.positive_dimensional) {
            rep.smooth = false;
            rep.positive_dimensional = true;
            rep.types.push_back(AdeType{AdeType::Kind::NotSimple, 0});
            return rep;
        }
        emit_univariate_points(rep, 1, 0, true, loc.common);
    }

    // ---- fiber y = infinity: substitute y' = 0 in the (0,1)-chart ----
    {
        GPoly2 g = p.chart_poly(0, 1);
        GPoly2 swapped = gp2_swap_vars(g);  // view as polynomial in y' with x-coefficients
        std::vector<GPoly> members = {gp2_eval_x(swapped, GQ(0)),
                                      gp2_eval_x(gp2_dx(swapped), GQ(0)),
                                      gp2_eval_x(gp2_dy(swapped), GQ(0))};
        FiberLocus loc = fiber_locus(members);
        if (loc.positive_dimensional) {
            rep.smooth = false;
            rep.positive_dimensional = true;
            rep.types.push_back(AdeType{AdeType::Kind::NotSimple, 0});
            return rep;
        }
        emit_univariate_points(rep, 0, 1, false, loc.common);
    }

    // ---- the corner (infinity, infinity) ----
    {
        GPoly2 g = p.chart_poly(1, 1);
        GQ v = gp2_eval(g, GQ(0), GQ(0));
        GQ vx = gp2_eval(gp2_dx(g), GQ(0), GQ(0));
        GQ vy = gp2_eval(gp2_dy(g), GQ(0), GQ(0));
        if (v.is_zero() && vx.is_zero() && vy.is_zero()) {
            SingularPoint pt;
            pt.chart_x = 1;
            pt.chart_y = 1;
            pt.count = 1;
            pt.exact = true;
            pt.x = GQ(0);
            pt.y = GQ(0);
            rep.points.push_back(std::move(pt));
        }
    }

    rep.smooth = rep.points.empty();
    return rep;
}

}  // namespace enriques
