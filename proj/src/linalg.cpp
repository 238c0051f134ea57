#include "enriques/linalg.hpp"

#include <algorithm>

namespace enriques {

QMat to_rational(const IMat& m) {
    QMat q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return q;
}

Int ivec_dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw Error("BadShape", "dot product length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVec ivec_add(const IVec& a, const IVec& b) {
    IVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

IVec ivec_sub(const IVec& a, const IVec& b) {
    IVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

IVec ivec_scale(const Int& c, const IVec& a) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Int ivec_gcd(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

bool ivec_is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

Rat qmat_det(const QMat& m) {
    if (m.rows() != m.cols()) throw Error("BadShape", "determinant of non-square matrix");
    QMat a = m;
    std::size_t n = a.rows();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a(piv, col)) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(a(i, col)) == 0) continue;
            Rat f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

Int imat_det(const IMat& m) {
    Rat d = qmat_det(to_rational(m));
    if (d.get_den() != 1) throw Error("Internal", "integer determinant not integral");
    return d.get_num();
}

QMat qmat_inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw Error("BadShape", "inverse of non-square matrix");
    std::size_t n = m.rows();
    QMat a = m;
    QMat inv = QMat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a(piv, col)) == 0) ++piv;
        if (piv == n) throw Error("Singular", "matrix is not invertible");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rat p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(a(i, col)) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::optional<QVec> qmat_solve(const QMat& m, const QVec& b) {
    if (m.rows() != b.size()) throw Error("BadShape", "solve shape mismatch");
    std::size_t rows = m.rows(), cols = m.cols();
    QMat a(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = m(i, j);
        a(i, cols) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a(piv, c)) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j <= cols; ++j) std::swap(a(piv, j), a(r, j));
        Rat p = a(r, c);
        for (std::size_t j = 0; j <= cols; ++j) a(r, j) /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j <= cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(a(i, cols)) != 0) return std::nullopt;
    QVec x(cols, Rat(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = a(k, cols);
    return x;
}

namespace {

// minimal |entry| != 0 in the working submatrix starting at (s, s)
bool find_pivot(const IMat& a, std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < a.rows(); ++i)
        for (std::size_t j = s; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            Int v = abs(a(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IMat& a0) {
    std::size_t rows = a0.rows(), cols = a0.cols();
    SmithForm f{IMat::identity(rows), a0, IMat::identity(cols)};
    IMat& a = f.d;
    IMat& u = f.u;
    IMat& v = f.v;

    auto swap_rows = [&](std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(i, j), a(k, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(u(i, j), u(k, j));
    };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, j), a(i, k));
        for (std::size_t i = 0; i < cols; ++i) std::swap(v(i, j), v(i, k));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < cols; ++j) a(dst, j) += c * a(src, j);
        for (std::size_t j = 0; j < rows; ++j) u(dst, j) += c * u(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < rows; ++i) a(i, dst) += c * a(i, src);
        for (std::size_t i = 0; i < cols; ++i) v(i, dst) += c * v(i, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = -a(i, j);
        for (std::size_t j = 0; j < rows; ++j) u(i, j) = -u(i, j);
    };

    std::size_t n = std::min(rows, cols);
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t pi, pj;
        if (!find_pivot(a, s, pi, pj)) break;
        swap_rows(s, pi);
        swap_cols(s, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (sgn(a(i, s)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, s).get_mpz_t(), a(s, s).get_mpz_t());
                add_row(i, s, -q);
                if (sgn(a(i, s)) != 0) {
                    swap_rows(s, i);
                    clean = false;
                }
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (sgn(a(s, j)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(s, j).get_mpz_t(), a(s, s).get_mpz_t());
                add_col(j, s, -q);
                if (sgn(a(s, j)) != 0) {
                    swap_cols(s, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (sgn(a(s, s)) < 0) negate_row(s);
    }
    // enforce divisibility d1 | d2 | ...
    for (;;) {
        bool changed = false;
        for (std::size_t s = 0; s + 1 < n; ++s) {
            if (sgn(a(s, s)) == 0 || sgn(a(s + 1, s + 1)) == 0) continue;
            if (sgn(a(s + 1, s + 1) % a(s, s)) != 0) {
                // bring a(s+1,s+1) into column s, then redo the corner
                add_col(s, s + 1, Int(1));
                for (;;) {
                    bool clean = true;
                    if (sgn(a(s + 1, s)) != 0) {
                        Int q;
                        mpz_fdiv_q(q.get_mpz_t(), a(s + 1, s).get_mpz_t(), a(s, s).get_mpz_t());
                        add_row(s + 1, s, -q);
                        if (sgn(a(s + 1, s)) != 0) {
                            swap_rows(s, s + 1);
                            clean = false;
                        }
                    }
                    if (sgn(a(s, s + 1)) != 0) {
                        Int q;
                        mpz_fdiv_q(q.get_mpz_t(), a(s, s + 1).get_mpz_t(), a(s, s).get_mpz_t());
                        add_col(s + 1, s, -q);
                        if (sgn(a(s, s + 1)) != 0) {
                            swap_cols(s, s + 1);
                            clean = false;
                        }
                    }
                    if (clean) break;
                }
                if (sgn(a(s, s)) < 0) negate_row(s);
                if (sgn(a(s + 1, s + 1)) < 0) negate_row(s + 1);
                changed = true;
            }
        }
        if (!changed) break;
    }
    return f;
}

IMat integer_kernel(const IMat& m) {
    SmithForm f = smith_normal_form(m);
    std::size_t n = m.cols();
    std::size_t rank = 0;
    for (std::size_t s = 0; s < std::min(m.rows(), n); ++s)
        if (sgn(f.d(s, s)) != 0) ++rank;
    // columns of v beyond the rank span the kernel: m * v * e_j = u^-1 d e_j = 0
    IMat ker(n, n - rank);
    for (std::size_t j = rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) ker(i, j - rank) = f.v(i, j);
    return ker;
}

Inertia symmetric_inertia(const QMat& g0) {
    if (!g0.is_symmetric()) throw Error("NotSymmetric", "inertia of non-symmetric matrix");
    QMat a = g0;
    std::size_t n = a.rows();
    Inertia res;
    std::vector<bool> done(n, false);
    std::size_t remaining = n;
    while (remaining > 0) {
        // prefer a nonzero diagonal pivot
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && sgn(a(i, i)) != 0) {
                p = i;
                break;
            }
        if (p < n) {
            if (sgn(a(p, p)) > 0)
                ++res.positive;
            else
                ++res.negative;
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i] || i == p || sgn(a(i, p)) == 0) continue;
                Rat f = a(i, p) / a(p, p);
                for (std::size_t j = 0; j < n; ++j) {
                    if (done[j] || j == p) continue;
                    a(i, j) -= f * a(p, j);
                }
            }
            // symmetrize the cleared row/column
            for (std::size_t j = 0; j < n; ++j) {
                if (done[j] || j == p) continue;
                a(p, j) = Rat(0);
                a(j, p) = Rat(0);
            }
            done[p] = true;
            --remaining;
            continue;
        }
        // all active diagonal entries are zero; look for an off-diagonal entry
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i) {
            if (done[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (done[j]) continue;
                if (sgn(a(i, j)) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == n) {
            res.zero += static_cast<int>(remaining);
            break;
        }
        // hyperbolic 2x2 block: contributes (1,1); clear the rest against it
        Rat b = a(pi, pj);
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || i == pi || i == pj) continue;
            Rat ci = a(i, pi), cj = a(i, pj);
            if (sgn(ci) == 0 && sgn(cj) == 0) continue;
            // subtract (ci/b) * row pj + (cj/b) * row pi to kill both pairings,
            // adjusting the diagonal exactly
            for (std::size_t j = 0; j < n; ++j) {
                if (done[j] || j == pi || j == pj) continue;
                a(i, j) -= (ci / b) * a(pj, j) + (cj / b) * a(pi, j);
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (done[j]) continue;
            if (j != pi && j != pj) {
                a(pi, j) = a(j, pi) = Rat(0);
                a(pj, j) = a(j, pj) = Rat(0);
            }
        }
        ++res.positive;
        ++res.negative;
        done[pi] = done[pj] = true;
        remaining -= 2;
    }
    return res;
}

}  // namespace enriques
