#include "enriques/gpoly.hpp"

#include <algorithm>

namespace enriques {

GPoly gp_normalize(GPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int gp_degree(const GPoly& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (!p[i - 1].is_zero()) return static_cast<int>(i - 1);
    return -1;
}

bool gp_is_zero(const GPoly& p) { return gp_degree(p) < 0; }

GQ gp_lead(const GPoly& p) {
    int d = gp_degree(p);
    if (d < 0) return GQ(0);
    return p[static_cast<std::size_t>(d)];
}

GPoly gp_add(const GPoly& a, const GPoly& b) {
    GPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] += a[i];
        if (i < b.size()) c[i] += b[i];
    }
    return gp_normalize(std::move(c));
}

GPoly gp_sub(const GPoly& a, const GPoly& b) { return gp_add(a, gp_neg(b)); }

GPoly gp_neg(const GPoly& a) {
    GPoly c = a;
    for (GQ& x : c) x = -x;
    return c;
}

GPoly gp_mul(const GPoly& a, const GPoly& b) {
    if (gp_is_zero(a) || gp_is_zero(b)) return {};
    GPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return gp_normalize(std::move(c));
}

GPoly gp_scale(const GQ& c, const GPoly& a) {
    if (c.is_zero()) return {};
    GPoly r = a;
    for (GQ& x : r) x = c * x;
    return gp_normalize(std::move(r));
}

GPoly gp_derivative(const GPoly& a) {
    if (a.size() <= 1) return {};
    GPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = GQ(Rat(static_cast<long>(i))) * a[i];
    return gp_normalize(std::move(d));
}

GQ gp_eval(const GPoly& a, const GQ& x) {
    GQ r(0);
    for (std::size_t i = a.size(); i > 0; --i) r = r * x + a[i - 1];
    return r;
}

GPoly gp_monic(const GPoly& a) {
    if (gp_is_zero(a)) return {};
    return gp_scale(GQ(1) / gp_lead(a), a);
}

GPoly gp_pow(const GPoly& a, unsigned n) {
    GPoly r{GQ(1)};
    for (unsigned i = 0; i < n; ++i) r = gp_mul(r, a);
    return r;
}

std::pair<GPoly, GPoly> gp_divrem(const GPoly& a, const GPoly& b) {
    int db = gp_degree(b);
    if (db < 0) throw Error("DivisionByZero", "polynomial division by zero");
    GPoly rem = gp_normalize(a);
    int da = gp_degree(rem);
    if (da < db) return {{}, rem};
    GPoly quot(static_cast<std::size_t>(da - db + 1));
    GQ blead = gp_lead(b);
    while ((da = gp_degree(rem)) >= db) {
        GQ c = rem[static_cast<std::size_t>(da)] / blead;
        std::size_t shift = static_cast<std::size_t>(da - db);
        quot[shift] = c;
        for (int i = 0; i <= db; ++i)
            rem[shift + static_cast<std::size_t>(i)] -= c * b[static_cast<std::size_t>(i)];
        rem = gp_normalize(std::move(rem));
        if (gp_is_zero(rem)) break;
    }
    return {gp_normalize(std::move(quot)), rem};
}

GPoly gp_exact_div(const GPoly& a, const GPoly& b) {
    auto [q, r] = gp_divrem(a, b);
    if (!gp_is_zero(r)) throw Error("InexactDivision", "polynomial division left a remainder");
    return q;
}

GPoly gp_gcd(const GPoly& a, const GPoly& b) {
    GPoly x = gp_normalize(a), y = gp_normalize(b);
    while (!gp_is_zero(y)) {
        GPoly r = gp_divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return gp_monic(x);
}

GPoly gp_squarefree_part(const GPoly& a) {
    if (gp_degree(a) <= 0) return gp_normalize(a);
    GPoly g = gp_gcd(a, gp_derivative(a));
    return gp_monic(gp_exact_div(a, g));
}

GPoly gp_shift(const GPoly& p, const GQ& c) {
    // Horner-style: p(x + c) built from the top coefficient down
    GPoly r;
    for (std::size_t i = p.size(); i > 0; --i) {
        // r <- r * (x + c) + p[i-1]
        GPoly next(r.size() + 1);
        for (std::size_t k = 0; k < r.size(); ++k) {
            next[k + 1] += r[k];
            next[k] += c * r[k];
        }
        if (next.empty()) next.resize(1);
        next[0] += p[i - 1];
        r = gp_normalize(std::move(next));
    }
    return r;
}

Rat gp_height(const GPoly& p) {
    Rat h(0);
    for (const GQ& c : p) h = std::max(h, c.norm());
    return h;
}

GPoly2 gp2_normalize(GPoly2 p) {
    for (GPoly& c : p) c = gp_normalize(std::move(c));
    while (!p.empty() && gp_is_zero(p.back())) p.pop_back();
    return p;
}

int gp2_degree_y(const GPoly2& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (!gp_is_zero(p[i - 1])) return static_cast<int>(i - 1);
    return -1;
}

int gp2_degree_x(const GPoly2& p) {
    int d = -1;
    for (const GPoly& c : p) d = std::max(d, gp_degree(c));
    return d;
}

bool gp2_is_zero(const GPoly2& p) { return gp2_degree_y(p) < 0; }

GPoly2 gp2_add(const GPoly2& a, const GPoly2& b) {
    GPoly2 c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        GPoly s;
        if (i < a.size()) s = a[i];
        if (i < b.size()) s = gp_add(s, b[i]);
        c[i] = std::move(s);
    }
    return gp2_normalize(std::move(c));
}

GPoly2 gp2_sub(const GPoly2& a, const GPoly2& b) { return gp2_add(a, gp2_scale(GQ(-1), b)); }

GPoly2 gp2_mul(const GPoly2& a, const GPoly2& b) {
    if (gp2_is_zero(a) || gp2_is_zero(b)) return {};
    GPoly2 c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (gp_is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (gp_is_zero(b[j])) continue;
            c[i + j] = gp_add(c[i + j], gp_mul(a[i], b[j]));
        }
    }
    return gp2_normalize(std::move(c));
}

GPoly2 gp2_scale(const GQ& c, const GPoly2& a) {
    GPoly2 r = a;
    for (GPoly& p : r) p = gp_scale(c, p);
    return gp2_normalize(std::move(r));
}

GPoly2 gp2_dx(const GPoly2& a) {
    GPoly2 r = a;
    for (GPoly& p : r) p = gp_derivative(p);
    return gp2_normalize(std::move(r));
}

GPoly2 gp2_dy(const GPoly2& a) {
    if (a.size() <= 1) return {};
    GPoly2 r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = gp_scale(GQ(Rat(static_cast<long>(i))), a[i]);
    return gp2_normalize(std::move(r));
}

GQ gp2_eval(const GPoly2& a, const GQ& x, const GQ& y) {
    GQ r(0);
    for (std::size_t i = a.size(); i > 0; --i) r = r * y + gp_eval(a[i - 1], x);
    return r;
}

GPoly gp2_eval_x(const GPoly2& a, const GQ& x) {
    GPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = gp_eval(a[i], x);
    return gp_normalize(std::move(r));
}

GPoly gp2_eval_y(const GPoly2& a, const GQ& y) {
    GPoly r;
    for (std::size_t i = a.size(); i > 0; --i) {
        GPoly scaled = gp_scale(y, r);
        r = gp_add(scaled, a[i - 1]);
    }
    return r;
}

GPoly2 gp2_shift(const GPoly2& a, const GQ& x0, const GQ& y0) {
    // shift x in every coefficient, then shift y by Horner over the vector
    GPoly2 xs(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) xs[i] = gp_shift(a[i], x0);
    GPoly2 r;
    for (std::size_t i = xs.size(); i > 0; --i) {
        GPoly2 next(r.size() + 1);
        for (std::size_t k = 0; k < r.size(); ++k) {
            next[k + 1] = gp_add(next[k + 1], r[k]);
            next[k] = gp_add(next[k], gp_scale(y0, r[k]));
        }
        if (next.empty()) next.resize(1);
        next[0] = gp_add(next[0], xs[i - 1]);
        r = gp2_normalize(std::move(next));
    }
    return r;
}

GPoly2 gp2_swap_vars(const GPoly2& a) {
    int dx = gp2_degree_x(a);
    if (dx < 0) return {};
    GPoly2 r(static_cast<std::size_t>(dx) + 1);
    for (std::size_t j = 0; j < r.size(); ++j) r[j].resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return gp2_normalize(std::move(r));
}

namespace {

// Bareiss fraction-free determinant over the domain Q(i)[x]
GPoly poly_matrix_det(std::vector<std::vector<GPoly>> m) {
    std::size_t n = m.size();
    if (n == 0) return {GQ(1)};
    GPoly prev{GQ(1)};
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (gp_is_zero(m[k][k])) {
            std::size_t swap = k + 1;
            while (swap < n && gp_is_zero(m[swap][k])) ++swap;
            if (swap == n) return {};
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                GPoly num = gp_sub(gp_mul(m[k][k], m[i][j]), gp_mul(m[i][k], m[k][j]));
                m[i][j] = gp_exact_div(num, prev);
            }
        prev = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) m[i][k] = {};
    }
    GPoly det = m[n - 1][n - 1];
    return sign < 0 ? gp_neg(det) : det;
}

}  // namespace

GPoly gp2_resultant_y(const GPoly2& f0, const GPoly2& g0) {
    GPoly2 f = gp2_normalize(f0), g = gp2_normalize(g0);
    int df = gp2_degree_y(f), dg = gp2_degree_y(g);
    if (df < 0 || dg < 0) return {};
    if (df == 0 && dg == 0) return {GQ(1)};
    if (df == 0) return gp_pow(f[0], static_cast<unsigned>(dg));
    if (dg == 0) return gp_pow(g[0], static_cast<unsigned>(df));
    std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<GPoly>> syl(n, std::vector<GPoly>(n));
    // rows 0..dg-1: shifted f (coefficients from the top degree down)
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k)
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                f[static_cast<std::size_t>(df - k)];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k)
            syl[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + k)] =
                g[static_cast<std::size_t>(dg - k)];
    return poly_matrix_det(std::move(syl));
}

GPoly gp2_content(const GPoly2& f) {
    GPoly c;
    for (const GPoly& coeff : f) c = gp_gcd(c, coeff);
    return c;
}

namespace {

GPoly2 gp2_primitive(const GPoly2& f) {
    GPoly c = gp2_content(f);
    if (gp_degree(c) <= 0) return gp2_normalize(f);
    GPoly2 r = f;
    for (GPoly& coeff : r) coeff = gp_exact_div(coeff, c);
    return gp2_normalize(std::move(r));
}

// pseudo-remainder of f by g with respect to y
GPoly2 gp2_prem(GPoly2 f, const GPoly2& g) {
    int dg = gp2_degree_y(g);
    GPoly glead = g[static_cast<std::size_t>(dg)];
    for (;;) {
        int df = gp2_degree_y(f);
        if (df < dg || df < 0) return f;
        GPoly flead = f[static_cast<std::size_t>(df)];
        // f <- glead * f - flead * y^(df-dg) * g
        GPoly2 scaled_f(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) scaled_f[i] = gp_mul(glead, f[i]);
        GPoly2 shifted_g(static_cast<std::size_t>(df) + 1);
        for (int k = 0; k <= dg; ++k)
            shifted_g[static_cast<std::size_t>(df - dg + k)] =
                gp_mul(flead, g[static_cast<std::size_t>(k)]);
        f = gp2_sub(scaled_f, shifted_g);
    }
}

}  // namespace

GPoly2 gp2_gcd(const GPoly2& f0, const GPoly2& g0) {
    GPoly2 f = gp2_normalize(f0), g = gp2_normalize(g0);
    if (gp2_is_zero(f)) return g;
    if (gp2_is_zero(g)) return f;
    GPoly content = gp_gcd(gp2_content(f), gp2_content(g));
    GPoly2 a = gp2_primitive(f), b = gp2_primitive(g);
    if (gp2_degree_y(a) < gp2_degree_y(b)) std::swap(a, b);
    while (!gp2_is_zero(b)) {
        if (gp2_degree_y(b) == 0) {
            // a nonzero constant (in y) divides the primitive gcd only via content
            b = {};
            a = GPoly2{GPoly{GQ(1)}};
            break;
        }
        GPoly2 r = gp2_primitive(gp2_prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    GPoly2 result(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) result[i] = gp_mul(content, a[i]);
    // normalize the leading y-coefficient to be monic in x when possible
    return gp2_normalize(std::move(result));
}

GPoly gp_mod(const GPoly& a, const GPoly& m) { return gp_divrem(a, m).second; }

GPoly gp_mulmod(const GPoly& a, const GPoly& b, const GPoly& m) {
    return gp_mod(gp_mul(a, b), m);
}

ModInvResult gp_try_invert_mod(const GPoly& a0, const GPoly& m) {
    GPoly a = gp_mod(a0, m);
    if (gp_is_zero(a)) return ModZero{};
    // extended Euclid: g = s*a + t*m
    GPoly r0 = m, r1 = a;
    GPoly s0{}, s1{GQ(1)};  // coefficients of a
    while (!gp_is_zero(r1)) {
        auto [q, r2] = gp_divrem(r0, r1);
        GPoly s2 = gp_sub(s0, gp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (gp_degree(r0) == 0) {
        return ModInverse{gp_mod(gp_scale(GQ(1) / r0[0], s0), m)};
    }
    GPoly factor = gp_monic(r0);
    if (gp_degree(factor) >= gp_degree(m))
        throw Error("Internal", "zero divisor factor should be proper");
    return ModZeroDivisor{std::move(factor)};
}

namespace {

GPoly2 gp2_coeffs_mod(const GPoly2& f, const GPoly& m) {
    GPoly2 r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = gp_mod(f[i], m);
    return gp2_normalize(std::move(r));
}

// divide f by monic-in-y g modulo m; returns the remainder
GPoly2 gp2_rem_monic_mod(GPoly2 f, const GPoly2& g, const GPoly& m) {
    int dg = gp2_degree_y(g);
    f = gp2_coeffs_mod(f, m);
    for (;;) {
        int df = gp2_degree_y(f);
        if (df < dg || df < 0) return f;
        GPoly flead = f[static_cast<std::size_t>(df)];
        GPoly2 shifted(static_cast<std::size_t>(df) + 1);
        for (int k = 0; k <= dg; ++k)
            shifted[static_cast<std::size_t>(df - dg + k)] =
                gp_mulmod(flead, g[static_cast<std::size_t>(k)], m);
        f = gp2_coeffs_mod(gp2_sub(f, shifted), m);
    }
}

struct WorkItem {
    GPoly modulus;
    std::vector<GPoly2> polys;
};

}  // namespace

std::vector<TriangularBranch> triangular_gcd_over(const std::vector<GPoly2>& system,
                                                  const GPoly& modulus) {
    std::vector<TriangularBranch> out;
    std::vector<WorkItem> stack;
    stack.push_back({gp_monic(modulus), system});

    while (!stack.empty()) {
        WorkItem item = std::move(stack.back());
        stack.pop_back();
        const GPoly& m = item.modulus;
        if (gp_degree(m) == 0) continue;  // trivial branch

        // reduce and drop zero polynomials
        std::vector<GPoly2> polys;
        for (const GPoly2& p : item.polys) {
            GPoly2 q = gp2_coeffs_mod(p, m);
            if (!gp2_is_zero(q)) polys.push_back(std::move(q));
        }
        if (polys.empty()) {
            // everything vanishes on this branch: the whole fiber is in the
            // zero set, which callers treat as non-zero-dimensional
            out.push_back({m, {}});
            continue;
        }
        // pick the poly with minimal y-degree as the reducer
        std::size_t best = 0;
        for (std::size_t i = 1; i < polys.size(); ++i)
            if (gp2_degree_y(polys[i]) < gp2_degree_y(polys[best])) best = i;
        GPoly2 g = polys[best];
        int dg = gp2_degree_y(g);

        if (dg == 0) {
            // pure x-constraint: intersect the modulus with it
            GPoly h = gp_gcd(m, g[0]);
            if (gp_degree(h) > 0) {
                std::vector<GPoly2> rest;
                for (std::size_t i = 0; i < polys.size(); ++i)
                    if (i != best) rest.push_back(polys[i]);
                stack.push_back({h, std::move(rest)});
            }
            // on the complementary branch g[0] is invertible: no solutions
            GPoly comp = gp_exact_div(m, gp_gcd(m, g[0]));
            if (gp_degree(comp) > 0) out.push_back({gp_monic(comp), GPoly2{GPoly{GQ(1)}}});
            continue;
        }

        // try to make g monic in y
        GPoly lead = g[static_cast<std::size_t>(dg)];
        ModInvResult inv = gp_try_invert_mod(lead, m);
        if (std::holds_alternative<ModZero>(inv)) {
            // leading coefficient vanishes identically: drop it
            GPoly2 stripped = g;
            stripped.pop_back();
            polys[best] = gp2_normalize(std::move(stripped));
            if (gp2_is_zero(polys[best])) polys.erase(polys.begin() + static_cast<long>(best));
            stack.push_back({m, std::move(polys)});
            continue;
        }
        if (auto* zd = std::get_if<ModZeroDivisor>(&inv)) {
            GPoly f1 = zd->factor;
            GPoly f2 = gp_exact_div(m, f1);
            stack.push_back({gp_monic(f1), polys});
            stack.push_back({gp_monic(f2), polys});
            continue;
        }
        const GPoly& linv = std::get<ModInverse>(inv).inverse;
        GPoly2 gm(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) gm[i] = gp_mulmod(linv, g[i], m);
        gm = gp2_normalize(std::move(gm));

        // reduce all other polynomials modulo gm
        bool all_reduced_zero = true;
        std::vector<GPoly2> next{gm};
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (i == best) continue;
            GPoly2 r = gp2_rem_monic_mod(polys[i], gm, m);
            if (!gp2_is_zero(r)) {
                all_reduced_zero = false;
                next.push_back(std::move(r));
            }
        }
        if (!all_reduced_zero) {
            stack.push_back({m, std::move(next)});
            continue;
        }
        // gm is the gcd over this branch; make it squarefree in y
        GPoly2 dgm = gp2_dy(gm);
        if (gp2_is_zero(dgm)) {
            out.push_back({m, gm});
            continue;
        }
        // compute gcd(gm, gm') over the branch by recursing on the pair
        std::vector<TriangularBranch> sq = triangular_gcd_over({gm, dgm}, m);
        for (TriangularBranch& br : sq) {
            if (gp2_is_zero(br.gcd_y) || gp2_degree_y(br.gcd_y) == 0) {
                // already squarefree on this sub-branch
                out.push_back({br.modulus, gp2_coeffs_mod(gm, br.modulus)});
            } else {
                GPoly2 reduced = gp2_rem_monic_mod(gp2_coeffs_mod(gm, br.modulus),
                                                   br.gcd_y, br.modulus);
                if (!gp2_is_zero(reduced))
                    throw Error("Internal", "squarefree factor must divide the gcd");
                // divide gm by the repeated factor: synthetic division in y
                GPoly2 q = [&] {
                    GPoly2 num = gp2_coeffs_mod(gm, br.modulus);
                    const GPoly2& den = br.gcd_y;
                    int dq = gp2_degree_y(num) - gp2_degree_y(den);
                    GPoly2 quot(static_cast<std::size_t>(dq) + 1);
                    while (gp2_degree_y(num) >= gp2_degree_y(den) && !gp2_is_zero(num)) {
                        int k = gp2_degree_y(num) - gp2_degree_y(den);
                        GPoly c = num[static_cast<std::size_t>(gp2_degree_y(num))];
                        quot[static_cast<std::size_t>(k)] = c;
                        GPoly2 sub(static_cast<std::size_t>(gp2_degree_y(num)) + 1);
                        for (int t = 0; t <= gp2_degree_y(den); ++t)
                            sub[static_cast<std::size_t>(k + t)] =
                                gp_mulmod(c, den[static_cast<std::size_t>(t)], br.modulus);
                        num = gp2_coeffs_mod(gp2_sub(num, sub), br.modulus);
                    }
                    return quot;
                }();
                out.push_back({br.modulus, gp2_normalize(std::move(q))});
            }
        }
    }
    return out;
}

}  // namespace enriques
