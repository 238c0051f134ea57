#include "enriques/branch.hpp"

namespace enriques {

namespace {

// truncate a series (polynomial in one variable) to order <= n
GPoly ser_trunc(GPoly a, std::size_t n) {
    if (a.size() > n + 1) a.resize(n + 1);
    return gp_normalize(std::move(a));
}

GPoly ser_mul(const GPoly& a, const GPoly& b, std::size_t n) {
    return ser_trunc(gp_mul(a, b), n);
}

// F(series, v): substitute u = phi(v) into F (outer index = v, inner = u);
// result is a series in v truncated to order n
GPoly substitute_u_series(const GPoly2& f, const GPoly& phi, std::size_t n) {
    GPoly result;
    for (std::size_t j = f.size(); j > 0; --j) {
        // result = result * v + f[j-1](phi)
        GPoly shifted(result.size() + 1);
        for (std::size_t k = 0; k < result.size(); ++k) shifted[k + 1] = result[k];
        GPoly coeff;  // f[j-1] evaluated at u = phi, as series in v
        const GPoly& cj = f[j - 1];
        for (std::size_t i = cj.size(); i > 0; --i) {
            coeff = ser_mul(coeff, phi, n);
            if (coeff.empty()) coeff.resize(1);
            coeff[0] += cj[i - 1];
            coeff = gp_normalize(std::move(coeff));
        }
        result = ser_trunc(gp_add(shifted, coeff), n);
    }
    return result;
}

// substitute v = psi(u) into F; result is a series in u truncated to order n
GPoly substitute_v_series(const GPoly2& f, const GPoly& psi, std::size_t n) {
    GPoly result;
    for (std::size_t j = f.size(); j > 0; --j) {
        result = ser_mul(result, psi, n);
        result = ser_trunc(gp_add(result, f[j - 1]), n);
    }
    return result;
}

GQ coeff_of(const GPoly2& f, std::size_t ui, std::size_t vj) {
    if (vj >= f.size()) return GQ(0);
    if (ui >= f[vj].size()) return GQ(0);
    return f[vj][ui];
}

// F(a u + b v, c u + d v) for an invertible linear change
GPoly2 linear_substitute(const GPoly2& f, const GQ& a, const GQ& b, const GQ& c, const GQ& d) {
    GPoly2 new_u{GPoly{GQ(0), a}, GPoly{b}};  // a*u + b*v
    GPoly2 new_v{GPoly{GQ(0), c}, GPoly{d}};  // c*u + d*v
    GPoly2 result;
    for (std::size_t j = f.size(); j > 0; --j) {
        result = gp2_mul(result, new_v);
        // add f[j-1](new_u)
        GPoly2 coeff;
        const GPoly& cj = f[j - 1];
        for (std::size_t i = cj.size(); i > 0; --i) {
            coeff = gp2_mul(coeff, new_u);
            GPoly2 constant{GPoly{cj[i - 1]}};
            coeff = gp2_add(coeff, constant);
        }
        result = gp2_add(result, coeff);
    }
    return result;
}

// corank-1 germ: quadratic part is c u^2 (c != 0) after the caller's change;
// solve F_u = 0 for u = phi(v) and read the order of F(phi(v), v)
AdeType classify_corank1(const GPoly2& f, const GQ& c, int order_bound) {
    std::size_t n = static_cast<std::size_t>(order_bound) + 2;
    // partial derivative in u
    GPoly2 fu(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) fu[j] = gp_derivative(f[j]);
    fu = gp2_normalize(std::move(fu));
    GQ inv2c = GQ(1) / (GQ(2) * c);
    GPoly phi;  // series in v
    for (std::size_t it = 0; it <= n; ++it) {
        // phi <- phi - F_u(phi, v) / (2c); gains at least one order per pass
        GPoly err = substitute_u_series(fu, phi, n);
        if (gp_is_zero(err)) break;
        GPoly corr = gp_scale(inv2c, err);
        phi = ser_trunc(gp_sub(phi, corr), n);
    }
    GPoly g = substitute_u_series(f, phi, n);
    int ord = -1;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (!g[k].is_zero()) {
            ord = static_cast<int>(k);
            break;
        }
    if (ord < 0 || ord > order_bound) return AdeType{AdeType::Kind::Unknown, 0};
    if (ord < 2) throw Error("Internal", "corank-1 branch series has impossible order");
    return AdeType{AdeType::Kind::A, ord - 1};
}

struct CubicRootStructure {
    int distinct_roots = 0;     // number of distinct projective roots
    bool has_triple = false;
    bool has_double = false;
    GQ double_u, double_v;      // the repeated line as (coef of u, coef of v):
                                // line = double_u * u + double_v * v
    GQ simple_u, simple_v;      // a simple root line in the one-double case
};

// root structure of the binary cubic c30 u^3 + c21 u^2 v + c12 u v^2 + c03 v^3
CubicRootStructure cubic_structure(const GQ& c30, const GQ& c21, const GQ& c12, const GQ& c03) {
    CubicRootStructure out;
    // dehomogenize with u = T v: r(T) = c30 T^3 + c21 T^2 + c12 T + c03,
    // plus a root at infinity (the line v = 0) of multiplicity 3 - deg r
    GPoly r = gp_normalize(GPoly{c03, c12, c21, c30});
    int dr = gp_degree(r);
    int inf_mult = 3 - dr;
    GPoly rsq = gp_squarefree_part(r);
    int distinct_finite = gp_degree(rsq);
    out.distinct_roots = distinct_finite + (inf_mult > 0 ? 1 : 0);
    if (out.distinct_roots == 1) {
        out.has_triple = true;
        if (inf_mult == 3) {
            out.double_u = GQ(0);
            out.double_v = GQ(1);  // line v = 0... represented by its normal below
        } else {
            // r = c (T - t0)^3: t0 = root of the squarefree part (linear)
            GQ t0 = -rsq[0] / rsq[1];
            // line u - t0 v
            out.double_u = GQ(1);
            out.double_v = -t0;
        }
        if (inf_mult == 3) {
            out.double_u = GQ(0);
            out.double_v = GQ(1);
        }
        return out;
    }
    if (out.distinct_roots == 3) return out;  // nondegenerate
    // exactly one double root and one simple root
    out.has_double = true;
    GPoly rep = gp_gcd(r, gp_derivative(r));  // the repeated factor (deg 1) or constant
    if (inf_mult == 2) {
        out.double_u = GQ(0);
        out.double_v = GQ(1);
        GQ t0 = -rsq[0] / rsq[1];  // rsq is linear: the finite simple root
        out.simple_u = GQ(1);
        out.simple_v = -t0;
        return out;
    }
    if (inf_mult == 1) {
        // infinity is the simple root; the finite double root is rep's root
        GQ t0 = -rep[0] / rep[1];
        out.double_u = GQ(1);
        out.double_v = -t0;
        out.simple_u = GQ(0);
        out.simple_v = GQ(1);
        return out;
    }
    // both roots finite: double root from rep, simple root = rsq / rep
    GQ t_double = -rep[0] / rep[1];
    GPoly simple = gp_exact_div(rsq, rep);
    GQ t_simple = -simple[0] / simple[1];
    out.double_u = GQ(1);
    out.double_v = -t_double;
    out.simple_u = GQ(1);
    out.simple_v = -t_simple;
    return out;
}

// change coordinates sending the projective lines l1, l2 (as root lines of the
// cubic) to the u- and v-axes: new u' vanishes on l2-direction... we need the
// cubic to become const * u^2 v, i.e. u' = the double line form, v' = simple.
GPoly2 change_to_lines(const GPoly2& f, const GQ& du, const GQ& dv, const GQ& su,
                       const GQ& sv) {
    // (u', v') = (du*u + dv*v, su*u + sv*v); substitute the inverse
    GQ det = du * sv - dv * su;
    if (det.is_zero()) throw Error("Internal", "cubic line change is singular");
    GQ a = sv / det, b = -dv / det, c = -su / det, d = du / det;
    // u = a u' + b v', v = c u' + d v'
    return linear_substitute(f, a, b, c, d);
}

AdeType classify_corank2(const GPoly2& f, int order_bound) {
    GQ c30 = coeff_of(f, 3, 0), c21 = coeff_of(f, 2, 1), c12 = coeff_of(f, 1, 2),
       c03 = coeff_of(f, 0, 3);
    if (c30.is_zero() && c21.is_zero() && c12.is_zero() && c03.is_zero())
        return AdeType{AdeType::Kind::NotSimple, 0};  // multiplicity >= 4
    CubicRootStructure cs = cubic_structure(c30, c21, c12, c03);
    if (cs.distinct_roots == 3) return AdeType{AdeType::Kind::D, 4};
    if (cs.distinct_roots == 0)
        return AdeType{AdeType::Kind::Unknown, 0};  // irrational root pattern

    if (cs.has_double) {
        // normalize the cubic to u^2 v
        GPoly2 g = change_to_lines(f, cs.double_u, cs.double_v, cs.simple_u, cs.simple_v);
        GQ lead = coeff_of(g, 2, 1);
        if (lead.is_zero()) throw Error("Internal", "cubic normalization failed");
        g = gp2_scale(GQ(1) / lead, g);
        // find the smooth branch v = psi(u) tangent to v = 0, order by order:
        // the u^2 v term makes the lowest error coefficient linear in psi_{m-2}
        std::size_t n = static_cast<std::size_t>(order_bound) + 2;
        GPoly psi;  // series in u, order >= 2
        for (std::size_t it = 0; it <= n; ++it) {
            GPoly err = ser_trunc(substitute_v_series(g, psi, n), n);
            std::size_t low = 0;
            while (low < err.size() && err[low].is_zero()) ++low;
            if (low >= err.size()) break;
            if (low < 4) throw Error("Internal", "branch series error below expected order");
            if (psi.size() < low - 1) psi.resize(low - 1);
            psi[low - 2] -= err[low];
            psi = gp_normalize(std::move(psi));
        }
        // divide g by (v - psi(u)) with series coefficients: synthetic division
        std::size_t dv_deg = g.size();
        std::vector<GPoly> quot(dv_deg > 0 ? dv_deg - 1 : 0);
        GPoly carry;  // B_j accumulated downward
        for (std::size_t j = dv_deg; j > 1; --j) {
            const GPoly aj = (j - 1 < g.size()) ? g[j - 1] : GPoly{};
            GPoly bj = ser_trunc(gp_add(aj, ser_mul(psi, carry, n)), n);
            quot[j - 2] = bj;
            carry = bj;
        }
        GPoly rem = ser_trunc(gp_add(g.empty() ? GPoly{} : g[0], ser_mul(psi, carry, n)), n);
        // remainder must vanish to the working order
        for (std::size_t k = 0; k < rem.size() && k <= static_cast<std::size_t>(order_bound); ++k)
            if (!rem[k].is_zero())
                return AdeType{AdeType::Kind::Unknown, 0};
        GPoly2 sub(quot.begin(), quot.end());
        sub = gp2_normalize(std::move(sub));
        // the quotient is a corank <= 1 germ; D_k = smooth branch + A_{k-3}
        GQ q20 = coeff_of(sub, 2, 0), q11 = coeff_of(sub, 1, 1), q02 = coeff_of(sub, 0, 2);
        GQ disc = q11 * q11 - GQ(4) * q20 * q02;
        if (!disc.is_zero())
            return AdeType{AdeType::Kind::D, 4};  // sub-germ A1 (transversal pair)
        AdeType inner;
        if (!q20.is_zero()) {
            GQ lambda = q11 / (GQ(2) * q20);
            GPoly2 shifted = linear_substitute(sub, GQ(1), -lambda, GQ(0), GQ(1));
            inner = classify_corank1(shifted, q20, order_bound);
        } else if (!q02.is_zero()) {
            GPoly2 swapped = gp2_swap_vars(sub);
            GQ lambda = q11 / (GQ(2) * q02);
            GPoly2 shifted = linear_substitute(swapped, GQ(1), -lambda, GQ(0), GQ(1));
            inner = classify_corank1(shifted, q02, order_bound);
        } else {
            return AdeType{AdeType::Kind::Unknown, 0};
        }
        if (inner.kind != AdeType::Kind::A) return AdeType{AdeType::Kind::Unknown, 0};
        return AdeType{AdeType::Kind::D, inner.index + 3};
    }

    // triple root: normalize the cubic to u^3
    GQ nu, nv;
    if (cs.double_v.is_zero() && !cs.double_u.is_zero()) {
        nu = GQ(0);
        nv = GQ(1);
    } else {
        nu = GQ(1);
        nv = GQ(0);
    }
    // pick any complementary line
    GPoly2 g = change_to_lines(f, cs.double_u, cs.double_v, nu, nv);
    GQ lead = coeff_of(g, 3, 0);
    if (lead.is_zero()) throw Error("Internal", "triple-root normalization failed");
    g = gp2_scale(GQ(1) / lead, g);
    if (!coeff_of(g, 0, 4).is_zero()) return AdeType{AdeType::Kind::E, 6};
    if (!coeff_of(g, 1, 3).is_zero()) return AdeType{AdeType::Kind::E, 7};
    if (!coeff_of(g, 0, 5).is_zero()) return AdeType{AdeType::Kind::E, 8};
    return AdeType{AdeType::Kind::NotSimple, 0};
}

}  // namespace

AdeType classify_germ(const GPoly2& f0, int order_bound) {
    GPoly2 f = gp2_normalize(f0);
    if (!coeff_of(f, 0, 0).is_zero() || !coeff_of(f, 1, 0).is_zero() ||
        !coeff_of(f, 0, 1).is_zero())
        throw Error("NotASingularPoint", "germ must vanish to order 2 at the origin");
    if (gp2_is_zero(f)) return AdeType{AdeType::Kind::Unknown, 0};

    GQ q20 = coeff_of(f, 2, 0), q11 = coeff_of(f, 1, 1), q02 = coeff_of(f, 0, 2);
    GQ disc = q11 * q11 - GQ(4) * q20 * q02;
    if (!disc.is_zero()) return AdeType{AdeType::Kind::A, 1};
    if (q20.is_zero() && q11.is_zero() && q02.is_zero()) return classify_corank2(f, order_bound);

    // corank 1: rotate so the quadratic part is c u^2
    if (!q20.is_zero()) {
        GQ lambda = q11 / (GQ(2) * q20);
        GPoly2 shifted = linear_substitute(f, GQ(1), -lambda, GQ(0), GQ(1));
        return classify_corank1(shifted, q20, order_bound);
    }
    // q20 = 0, disc = 0 forces q11 = 0, so q02 != 0: swap the variables
    GPoly2 swapped = gp2_swap_vars(f);
    return classify_corank1(swapped, q02, order_bound);
}

AdeType classify_singularity(const BranchPolynomial& p, int chart_x, int chart_y,
                             const GQ& x0, const GQ& y0, int order_bound) {
    GPoly2 chart = p.chart_poly(chart_x, chart_y);
    GPoly2 local = gp2_shift(chart, x0, y0);
    return classify_germ(local, order_bound);
}

}  // namespace enriques
