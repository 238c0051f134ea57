#include "enriques/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace enriques {

Lattice::Lattice(IMat gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
    if (gram_.rows() != gram_.cols()) throw Error("BadShape", "Gram matrix must be square");
    if (!gram_.is_symmetric()) throw Error("NotSymmetric", "Gram matrix must be symmetric");
    if (!labels_.empty() && labels_.size() != gram_.rows())
        throw Error("BadShape", "label count must match rank");
}

Int Lattice::inner(const IVec& x, const IVec& y) const {
    if (x.size() != rank() || y.size() != rank())
        throw Error("BadShape", "vector length must match rank");
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_(i, j) * y[j];
    return s;
}

Lattice diagonal_lattice(const IVec& entries) {
    IMat g(entries.size(), entries.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        g(i, i) = entries[i];
        labels.push_back("d" + std::to_string(i + 1));
    }
    return Lattice(std::move(g), std::move(labels));
}

Lattice a1_lattice(std::size_t n) {
    return diagonal_lattice(IVec(n, Int(-2)));
}

Lattice standard_lattice(const std::string& name) {
    if (name == "U") {
        IMat g(2, 2);
        g(0, 1) = 1;
        g(1, 0) = 1;
        return Lattice(std::move(g), {"x1", "x2"});
    }
    if (name == "E8neg") {
        // negated Cartan matrix of E8; chain 1-3-4-5-6-7-8 with 2 attached to 4
        IMat g(8, 8);
        for (int i = 0; i < 8; ++i) g(i, i) = -2;
        auto link = [&](int i, int j) {
            g(i - 1, j - 1) = 1;
            g(j - 1, i - 1) = 1;
        };
        link(1, 3);
        link(3, 4);
        link(4, 5);
        link(5, 6);
        link(6, 7);
        link(7, 8);
        link(2, 4);
        std::vector<std::string> labels;
        for (int i = 1; i <= 8; ++i) labels.push_back("a" + std::to_string(i));
        return Lattice(std::move(g), std::move(labels));
    }
    if (name == "D4neg") {
        // e_i^2 = -2, e_i e_j = 0 for i < j <= 3, e_i e_4 = 1
        IMat g(4, 4);
        for (int i = 0; i < 4; ++i) g(i, i) = -2;
        for (int i = 0; i < 3; ++i) {
            g(i, 3) = 1;
            g(3, i) = 1;
        }
        return Lattice(std::move(g), {"e1", "e2", "e3", "e4"});
    }
    // "<n>A1" with optional multiplicity prefix
    auto pos = name.find("A1");
    if (pos != std::string::npos && pos + 2 == name.size()) {
        std::size_t n = 1;
        if (pos > 0) {
            for (char c : name.substr(0, pos))
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw Error("UnknownLattice", "unrecognized lattice name '" + name + "'");
            n = std::strtoull(name.substr(0, pos).c_str(), nullptr, 10);
        }
        return a1_lattice(n);
    }
    if (name.rfind("diag(", 0) == 0 && name.back() == ')') {
        IVec entries;
        std::string body = name.substr(5, name.size() - 6);
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t comma = body.find(',', start);
            std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
            if (!tok.empty()) entries.push_back(Int(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (entries.empty())
            throw Error("UnknownLattice", "empty diagonal in '" + name + "'");
        return diagonal_lattice(entries);
    }
    throw Error("UnknownLattice", "unrecognized lattice name '" + name + "'");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    std::size_t n = a.rank(), m = b.rank();
    IMat g(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
    std::vector<std::string> labels;
    if (!a.labels().empty() && !b.labels().empty()) {
        labels = a.labels();
        labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    }
    return Lattice(std::move(g), std::move(labels));
}

Signature signature(const Lattice& l) {
    Inertia in = symmetric_inertia(to_rational(l.gram()));
    return Signature{in.positive, in.negative, in.zero};
}

bool is_even(const Lattice& l) {
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (sgn(l.gram()(i, i) % 2) != 0) return false;
    return true;
}

std::vector<Int> discriminant_group(const Lattice& l) {
    if (l.is_degenerate()) throw Error("DegenerateLattice", "discriminant of degenerate lattice");
    SmithForm f = smith_normal_form(l.gram());
    std::vector<Int> factors;
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (f.d(i, i) > 1) factors.push_back(f.d(i, i));
    return factors;
}

DiscriminantForm discriminant_form(const Lattice& l) {
    if (!is_even(l)) throw Error("OddLattice", "discriminant form requires an even lattice");
    if (l.is_degenerate())
        throw Error("DegenerateLattice", "discriminant form of degenerate lattice");

    SmithForm f = smith_normal_form(l.gram());
    std::size_t n = l.rank();
    DiscriminantForm out;
    std::vector<std::size_t> positions;  // indices with d_i > 1
    for (std::size_t i = 0; i < n; ++i)
        if (f.d(i, i) > 1) {
            positions.push_back(i);
            out.invariant_factors.push_back(f.d(i, i));
        }
    Int order = out.group_order();
    if (order > 65536)
        throw Error("GroupTooLarge", "discriminant group of order " + order.get_str());

    QMat ginv = qmat_inverse(to_rational(l.gram()));
    QMat uinv = qmat_inverse(to_rational(f.u));

    // representative in Z^n of the class with tuple t: y = U^{-1} t_full
    auto representative = [&](const std::vector<Int>& t) {
        QVec tf(n, Rat(0));
        for (std::size_t k = 0; k < positions.size(); ++k) tf[positions[k]] = Rat(t[k]);
        QVec y(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) y[i] += uinv(i, j) * tf[j];
        return y;
    };
    auto pair_value = [&](const QVec& y1, const QVec& y2) {
        Rat s(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += y1[i] * ginv(i, j) * y2[j];
        return s;
    };
    // explicit return type: gmpxx expression templates must not escape the lambda
    auto mod_into = [](const Rat& q, const Rat& modulus) -> Rat {
        Rat r = q / modulus;
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
        Rat res = q - Rat(fl) * modulus;
        return res;
    };

    // enumerate all group elements
    std::vector<std::vector<Int>> elements;
    std::vector<Int> cur(positions.size(), Int(0));
    for (;;) {
        elements.push_back(cur);
        std::size_t k = 0;
        while (k < cur.size()) {
            cur[k] += 1;
            if (cur[k] < out.invariant_factors[k]) break;
            cur[k] = 0;
            ++k;
        }
        if (k == cur.size()) break;
        if (cur.empty()) break;
    }
    if (positions.empty()) elements = {std::vector<Int>{}};

    std::vector<QVec> reps;
    reps.reserve(elements.size());
    for (const auto& t : elements) reps.push_back(representative(t));

    out.is_even = true;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        Rat q = mod_into(pair_value(reps[i], reps[i]), Rat(2));
        if (q.get_den() != 1) out.is_even = false;
        out.q_values[elements[i]] = q;
        for (std::size_t j = i; j < elements.size(); ++j) {
            Rat b = mod_into(pair_value(reps[i], reps[j]), Rat(1));
            out.b_values[{elements[i], elements[j]}] = b;
            if (i != j) out.b_values[{elements[j], elements[i]}] = b;
        }
    }
    return out;
}

IMat orthogonal_complement(const std::vector<IVec>& vs, const Lattice& l) {
    std::size_t n = l.rank();
    if (vs.empty()) return IMat::identity(n);
    IMat pairing(vs.size(), n);
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (vs[k].size() != n) throw Error("BadShape", "vector length must match rank");
        for (std::size_t j = 0; j < n; ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < n; ++i) s += vs[k][i] * l.gram()(i, j);
            pairing(k, j) = s;
        }
    }
    return integer_kernel(pairing);
}

IVec reflect_root(const Lattice& l, const IVec& r, const IVec& x) {
    if (l.norm_of(r) != -2) throw Error("NotARoot", "reflection vector must have square -2");
    Int c = l.inner(x, r);
    IVec y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * r[i];
    return y;
}

bool is_primitive(const IVec& x) {
    if (ivec_is_zero(x)) throw Error("ZeroVector", "primitivity of the zero vector is undefined");
    return ivec_gcd(x) == 1;
}

EvenSublattice max_even_sublattice(const Lattice& l) {
    std::size_t n = l.rank();
    if (is_even(l)) return EvenSublattice{l, IMat::identity(n), Int(1)};
    std::size_t i0 = n;
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(l.gram()(i, i) % 2) != 0) {
            i0 = i;
            break;
        }
    IMat basis(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i0) {
            basis(i0, j) = 2;
        } else if (sgn(l.gram()(j, j) % 2) != 0) {
            basis(j, j) = 1;
            basis(i0, j) = 1;
        } else {
            basis(j, j) = 1;
        }
    }
    IMat g = basis.transposed() * l.gram() * basis;
    return EvenSublattice{Lattice(std::move(g)), std::move(basis), Int(2)};
}

namespace {

// LDL^T data for a positive definite rational matrix
struct Ldl {
    std::vector<Rat> d;
    QMat l;  // unit lower triangular
};

Ldl ldl_decompose(const QMat& g) {
    std::size_t n = g.rows();
    Ldl out{std::vector<Rat>(n), QMat::identity(n)};
    QMat a = g;
    for (std::size_t i = 0; i < n; ++i) {
        out.d[i] = a(i, i);
        if (sgn(out.d[i]) <= 0) throw Error("NotDefinite", "LDL pivot not positive");
        for (std::size_t j = i + 1; j < n; ++j) out.l(j, i) = a(j, i) / out.d[i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k)
                a(j, k) -= out.l(j, i) * out.l(k, i) * out.d[i];
    }
    return out;
}

// Fincke-Pohst style enumeration: Q(x) = sum_i d_i (x_i + sum_{j>i} l_ji^T ...)^2
void enumerate_level(const Ldl& ldl, const Int& target, std::size_t level, IVec& x,
                     Rat remaining, std::vector<IVec>& out) {
    if (level == static_cast<std::size_t>(-1)) return;  // unreachable guard
    std::size_t i = level;
    // center c_i = sum_{j > i} L(j, i) * x_j
    Rat c(0);
    for (std::size_t j = i + 1; j < x.size(); ++j) c += ldl.l(j, i) * Rat(x[j]);
    // d_i (x_i + c)^2 <= remaining
    Rat bound2 = remaining / ldl.d[i];
    Int s = rat_sqrt_floor(bound2) + 1;
    Int lo, hi;
    // x_i in [-c - s, -c + s] intersected with Z, conservatively widened
    Rat locand = -c - Rat(s), hicand = -c + Rat(s);
    mpz_fdiv_q(lo.get_mpz_t(), mpq_numref(locand.get_mpq_t()), mpq_denref(locand.get_mpq_t()));
    mpz_cdiv_q(hi.get_mpz_t(), mpq_numref(hicand.get_mpq_t()), mpq_denref(hicand.get_mpq_t()));
    for (Int v = lo; v <= hi; ++v) {
        Rat term = Rat(v) + c;
        Rat used = ldl.d[i] * term * term;
        if (used > remaining) continue;
        x[i] = v;
        if (i == 0) {
            if (used == remaining) out.push_back(x);
        } else {
            enumerate_level(ldl, target, i - 1, x, remaining - used, out);
        }
        x[i] = 0;
    }
}

}  // namespace

std::vector<IVec> vectors_of_norm(const Lattice& l, const Int& norm) {
    Signature sig = signature(l);
    std::size_t n = l.rank();
    bool pos = (sig.positive == static_cast<int>(n) && sig.zero == 0);
    bool neg = (sig.negative == static_cast<int>(n) && sig.zero == 0);
    if (n == 0) return {};
    if (!pos && !neg)
        throw Error("IndefiniteLattice", "vector enumeration requires a definite lattice");
    IMat g = l.gram();
    Int target = norm;
    if (neg) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = -g(i, j);
        target = -target;
    }
    std::vector<IVec> out;
    if (sgn(target) <= 0) return out;  // only the zero vector has norm <= 0
    Ldl ldl = ldl_decompose(to_rational(g));
    IVec x(n, Int(0));
    enumerate_level(ldl, target, n - 1, x, Rat(target), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Isometry> isometry_search(const Lattice& a, const Lattice& b) {
    if (a.rank() != b.rank()) throw Error("RankMismatch", "isometry search needs equal ranks");
    std::size_t n = a.rank();
    Signature sa = signature(a), sb = signature(b);
    auto definite = [&](const Signature& s) {
        return s.zero == 0 && (s.positive == static_cast<int>(n) || s.negative == static_cast<int>(n));
    };
    if (!definite(sa) || !definite(sb))
        throw Error("IndefiniteLattice", "isometry search supports definite lattices only");
    if (!(sa == sb)) return std::nullopt;
    if (imat_det(a.gram()) != imat_det(b.gram())) return std::nullopt;
    if (is_even(a) != is_even(b)) return std::nullopt;

    // candidate images per basis vector, by norm
    std::vector<std::vector<IVec>> candidates(n);
    std::map<Int, std::vector<IVec>> by_norm;
    for (std::size_t j = 0; j < n; ++j) {
        Int nj = a.gram()(j, j);
        auto it = by_norm.find(nj);
        if (it == by_norm.end()) it = by_norm.emplace(nj, vectors_of_norm(b, nj)).first;
        candidates[j] = it->second;
        if (candidates[j].empty()) return std::nullopt;
    }

    std::vector<IVec> chosen;
    std::vector<IVec> gram_cache;  // G_b * w for chosen w, to speed pairings
    auto gb_times = [&](const IVec& w) {
        IVec r(n, Int(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r[i] += b.gram()(i, j) * w[j];
        return r;
    };

    std::optional<Isometry> result;
    auto backtrack = [&](auto&& self, std::size_t j) -> bool {
        if (j == n) {
            IMat m(n, n);
            for (std::size_t col = 0; col < n; ++col)
                for (std::size_t row = 0; row < n; ++row) m(row, col) = chosen[col][row];
            if (!(m.transposed() * b.gram() * m == a.gram()))
                throw Error("Internal", "isometry witness failed verification");
            Int d = imat_det(m);
            if (d != 1 && d != -1) throw Error("Internal", "isometry witness not unimodular");
            result = Isometry{std::move(m)};
            return true;
        }
        for (const IVec& w : candidates[j]) {
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i)
                if (ivec_dot(gram_cache[i], w) != a.gram()(i, j)) ok = false;
            if (!ok) continue;
            chosen.push_back(w);
            gram_cache.push_back(gb_times(w));
            if (self(self, j + 1)) return true;
            chosen.pop_back();
            gram_cache.pop_back();
        }
        return false;
    };
    backtrack(backtrack, 0);
    return result;
}

}  // namespace enriques
