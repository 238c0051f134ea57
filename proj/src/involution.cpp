#include "enriques/involution.hpp"

#include <algorithm>

namespace enriques {

std::string plane_tag_name(PlaneTag t) {
    switch (t) {
        case PlaneTag::I00: return "I(0,0)";
        case PlaneTag::I0w2: return "I(0,w2)";
        case PlaneTag::Iw2w2: return "I(w2,w2)";
        case PlaneTag::II: return "II";
    }
    return "?";
}

std::optional<PlaneTag> plane_tag_from_name(const std::string& s) {
    if (s == "I(0,0)") return PlaneTag::I00;
    if (s == "I(0,w2)") return PlaneTag::I0w2;
    if (s == "I(w2,w2)") return PlaneTag::Iw2w2;
    if (s == "II") return PlaneTag::II;
    return std::nullopt;
}

std::string reality_tag_name(RealityTag t) {
    switch (t) {
        case RealityTag::NotReal: return "NotReal";
        case RealityTag::RealWithRealFibers: return "RealWithRealFibers";
        case RealityTag::RealWithConjugateFibers: return "RealWithConjugateFibers";
    }
    return "?";
}

const Lattice& ambient_lattice() {
    static const Lattice l = direct_sum(standard_lattice("E8neg"), standard_lattice("U"));
    return l;
}

ExtendedInvolution::ExtendedInvolution(IMat m, IVec eps)
    : m_(std::move(m)), eps_(std::move(eps)) {
    const Lattice& l = ambient_lattice();
    std::size_t n = l.rank();
    if (m_.rows() != n || m_.cols() != n)
        throw Error("BadShape", "involution matrix must be 10x10");
    if (eps_.size() != n) throw Error("BadShape", "eps must have length 10");
    for (const Int& e : eps_)
        if (e != 0 && e != 1) throw Error("EpsNotBinary", "eps entries must be 0 or 1");
    if (!(m_ * m_ == IMat::identity(n)))
        throw Error("NotInvolutive", "matrix does not square to the identity");
    if (!(m_.transposed() * l.gram() * m_ == l.gram()))
        throw Error("NotIsometry", "matrix does not preserve the Gram form");
    // involutivity on L (+) Z/2: eps((I + m) v) even for all v
    for (std::size_t j = 0; j < n; ++j) {
        Int s = eps_[j];
        for (std::size_t i = 0; i < n; ++i) s += eps_[i] * m_(i, j);
        if (sgn(s % 2) != 0)
            throw Error("EpsIncompatible", "eps is not compatible with the involution");
    }
}

bool ExtendedInvolution::in_minus(const IVec& x) const {
    IVec mx = m_ * x;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (mx[i] + x[i] != 0) return false;
    return true;
}

bool ExtendedInvolution::in_plus(const IVec& x) const {
    IVec mx = m_ * x;
    return mx == x;
}

IMat ExtendedInvolution::eigenlattice(int sign) const {
    if (sign != 1 && sign != -1) throw Error("BadSign", "eigenlattice sign must be +1 or -1");
    std::size_t n = m_.rows();
    IMat a = m_;
    for (std::size_t i = 0; i < n; ++i) a(i, i) -= Int(sign);
    return integer_kernel(a);  // kernels are saturated
}

DeltaValue ExtendedInvolution::delta(const IVec& y) const {
    if (y.size() != eps_.size()) throw Error("BadShape", "vector length must be 10");
    if (!in_minus(y))
        throw Error("YNotInMinusEigenlattice", "delta is defined on the (-1)-eigenlattice only");
    Int s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += eps_[i] * y[i];
    return sgn(s % 2) == 0 ? DeltaValue::Zero : DeltaValue::W2;
}

namespace {

void require_standard_pair(const Lattice& l, const IVec& u1, const IVec& u2) {
    if (l.norm_of(u1) != 0 || l.norm_of(u2) != 0 || l.inner(u1, u2) != 1)
        throw Error("NotStandardPair", "expected u1^2 = u2^2 = 0 and u1.u2 = 1");
}

}  // namespace

PlaneTag classify_plane(const ExtendedInvolution& inv, const IVec& u1, const IVec& u2) {
    const Lattice& l = ambient_lattice();
    require_standard_pair(l, u1, u2);
    IVec m1 = inv.apply(u1), m2 = inv.apply(u2);
    // coordinates of m(u) in the span: m(u) = a u1 + b u2 with a = m(u).u2, b = m(u).u1
    auto in_span = [&](const IVec& v, Int& a, Int& b) {
        a = l.inner(v, u2);
        b = l.inner(v, u1);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != a * u1[i] + b * u2[i]) return false;
        return true;
    };
    Int a1, b1, a2, b2;
    if (!in_span(m1, a1, b1) || !in_span(m2, a2, b2))
        throw Error("NotInvariant", "the span of the pair is not invariant");
    bool minus_one = (a1 == -1 && b1 == 0 && a2 == 0 && b2 == -1);
    bool swap = (a1 == 0 && b1 == 1 && a2 == 1 && b2 == 0);
    if (swap) return PlaneTag::II;
    if (!minus_one)
        throw Error("NeitherType", "invariant plane is neither (-1) nor a transposition");
    DeltaValue d1 = inv.delta(u1), d2 = inv.delta(u2);
    int count = (d1 == DeltaValue::W2 ? 1 : 0) + (d2 == DeltaValue::W2 ? 1 : 0);
    if (count == 0) return PlaneTag::I00;
    if (count == 1) return PlaneTag::I0w2;
    return PlaneTag::Iw2w2;
}

std::pair<IVec, IVec> find_plane_i0w2(const ExtendedInvolution& inv, const IVec& u1,
                                      const IVec& u2, const std::array<IVec, 4>& d4) {
    const Lattice& l = ambient_lattice();
    require_standard_pair(l, u1, u2);
    if (!inv.in_minus(u1) || !inv.in_minus(u2))
        throw Error("NotInMinusEigenlattice", "the pair must lie in the (-1)-eigenlattice");
    for (const IVec& e : d4)
        if (!inv.in_minus(e))
            throw Error("NotInMinusEigenlattice", "the D4 basis must lie in the (-1)-eigenlattice");
    for (std::size_t i = 0; i < 4; ++i) {
        if (l.norm_of(d4[i]) != -2) throw Error("NotD4Basis", "D4 generators must have square -2");
        for (std::size_t j = i + 1; j < 4; ++j) {
            Int expect = (j == 3) ? Int(1) : Int(0);
            if (l.inner(d4[i], d4[j]) != expect)
                throw Error("NotD4Basis", "D4 generator pairings violated");
        }
        if (l.inner(d4[i], u1) != 0 || l.inner(d4[i], u2) != 0)
            throw Error("NotOrthogonal", "D4 basis must be orthogonal to the pair");
    }

    DeltaValue v1 = inv.delta(u1), v2 = inv.delta(u2);
    if (v1 != v2) {
        // Case 1: already of type I(0,w2); order the pair with delta = 0 first
        return v1 == DeltaValue::Zero ? std::make_pair(u1, u2) : std::make_pair(u2, u1);
    }
    // candidates e1..e4 and e1+e4
    std::vector<IVec> candidates(d4.begin(), d4.end());
    candidates.push_back(ivec_add(d4[0], d4[3]));
    if (v1 == DeltaValue::W2) {
        // Case 2: pick e with delta(e) = 0; u1+u2+e and u1 span the plane
        for (const IVec& e : candidates)
            if (inv.delta(e) == DeltaValue::Zero)
                return {ivec_add(ivec_add(u1, u2), e), u1};
        throw Error("Internal", "case 2 must admit a candidate with delta 0");
    }
    // Case 3: pick e with delta(e) = w2; otherwise delta vanishes on the family
    for (const IVec& e : candidates)
        if (inv.delta(e) == DeltaValue::W2) return {u1, ivec_add(ivec_add(u1, u2), e)};
    throw Error("NoPlaneInSearchedFamily",
                "delta vanishes on the pair and on every searched root");
}

IsotropicSearch find_primitive_isotropic(const ExtendedInvolution& inv, long bound) {
    const Lattice& l = ambient_lattice();
    IMat k = inv.eigenlattice(-1);
    std::size_t r = k.cols();
    IsotropicSearch out{std::nullopt, bound};
    if (r == 0) return out;
    // restricted Gram
    IMat g(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Int s = 0;
            for (std::size_t p = 0; p < l.rank(); ++p)
                for (std::size_t q = 0; q < l.rank(); ++q)
                    s += k(p, i) * l.gram()(p, q) * k(q, j);
            g(i, j) = s;
        }
    Inertia in = symmetric_inertia(to_rational(g));
    if (in.zero == 0 && (in.positive == static_cast<int>(r) || in.negative == static_cast<int>(r)))
        return out;  // definite: no isotropic vectors exist at all

    // shell-by-shell odometer scan; kernels are saturated, so a primitive
    // coordinate vector maps to a primitive lattice vector
    IVec c(r, Int(0));
    auto norm_of_c = [&](const IVec& v) -> Int {
        Int s = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) s += v[i] * g(i, j) * v[j];
        return s;
    };
    for (long shell = 1; shell <= bound; ++shell) {
        // enumerate vectors with sup-norm exactly `shell`
        std::vector<long> idx(r, -shell);
        for (;;) {
            bool on_shell = false;
            for (std::size_t i = 0; i < r; ++i)
                if (idx[i] == shell || idx[i] == -shell) on_shell = true;
            if (on_shell) {
                for (std::size_t i = 0; i < r; ++i) c[i] = Int(idx[i]);
                if (norm_of_c(c) == 0 && !ivec_is_zero(c)) {
                    Int gcd = ivec_gcd(c);
                    for (std::size_t i = 0; i < r; ++i) c[i] /= gcd;
                    IVec x(l.rank(), Int(0));
                    for (std::size_t p = 0; p < l.rank(); ++p)
                        for (std::size_t i = 0; i < r; ++i) x[p] += k(p, i) * c[i];
                    out.vector = x;
                    return out;
                }
            }
            std::size_t pos = 0;
            while (pos < r) {
                if (idx[pos] < shell) {
                    ++idx[pos];
                    break;
                }
                idx[pos] = -shell;
                ++pos;
            }
            if (pos == r) break;
        }
    }
    return out;
}

ReflectionReduction reduce_by_reflections(const Lattice& l, const IVec& x,
                                          const std::vector<IVec>& roots,
                                          std::size_t step_limit) {
    for (const IVec& r : roots)
        if (l.norm_of(r) != -2) throw Error("NotARoot", "all roots must have square -2");
    ReflectionReduction red{x, {}};
    for (std::size_t step = 0; step < step_limit; ++step) {
        std::size_t hit = roots.size();
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (sgn(l.inner(red.result, roots[i])) < 0) {
                hit = i;
                break;
            }
        if (hit == roots.size()) return red;
        red.result = reflect_root(l, roots[hit], red.result);
        red.word.push_back(hit);
    }
    throw StepLimitExceeded(std::move(red.result), std::move(red.word));
}

RealityTag pencil_reality(const ExtendedInvolution& inv, const IVec& x) {
    const Lattice& l = ambient_lattice();
    if (l.norm_of(x) != 0) throw Error("NotIsotropic", "pencil class must have square 0");
    if (!is_primitive(x)) throw Error("NotPrimitive", "pencil class must be primitive");
    if (!inv.in_minus(x)) return RealityTag::NotReal;
    return inv.delta(x) == DeltaValue::Zero ? RealityTag::RealWithRealFibers
                                            : RealityTag::RealWithConjugateFibers;
}

UPairCase u_pair_case(const Lattice& l, const IVec& y1, const IVec& y2,
                      const std::vector<IVec>& roots) {
    require_standard_pair(l, y1, y2);
    IVec d = ivec_sub(y2, y1);
    if (l.norm_of(d) == -2)
        for (const IVec& r : roots)
            if (r == d) return UPairCase::PencilPlusNode;
    return UPairCase::PairOfPencils;
}

namespace {

// indices of the Dynkin D4 {a2, a3, a5; center a4} inside E8
constexpr std::size_t kD4Nodes[4] = {1, 2, 4, 3};

IVec unit_vec(std::size_t n, std::size_t i) {
    IVec v(n, Int(0));
    v[i] = 1;
    return v;
}

}  // namespace

const StandardFrame& standard_frame() {
    static const StandardFrame f = [] {
        StandardFrame out;
        std::size_t n = ambient_lattice().rank();
        out.u1 = unit_vec(n, 8);
        out.u2 = unit_vec(n, 9);
        for (int i = 0; i < 4; ++i) out.d4[i] = unit_vec(n, kD4Nodes[i]);
        return out;
    }();
    return f;
}

namespace {

struct Rank46Data {
    IMat matrix;              // the involution matrix, +1 on the Dynkin D4
    StandardFrame minus_frame;  // U pair and a D4 basis inside the (-1)-part
};

const Rank46Data& rank46_data() {
    static const Rank46Data data = [] {
        const Lattice& l = ambient_lattice();
        const Lattice e8 = standard_lattice("E8neg");
        std::size_t n = l.rank();

        std::vector<IVec> plus_basis;
        for (std::size_t idx : kD4Nodes) plus_basis.push_back(unit_vec(8, idx));
        IMat comp = orthogonal_complement(plus_basis, e8);  // 8 x 4

        // the complement carries a D4 form; find a basis in the paper's relations
        IMat cg(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                IVec vi(8, Int(0)), vj(8, Int(0));
                for (int p = 0; p < 8; ++p) {
                    vi[p] = comp(p, i);
                    vj[p] = comp(p, j);
                }
                cg(i, j) = e8.inner(vi, vj);
            }
        auto iso = isometry_search(standard_lattice("D4neg"), Lattice(cg));
        if (!iso) throw Error("Internal", "complement of D4 in E8 must be a D4");
        IMat d4_in_e8 = comp * iso->matrix;  // columns: paper-form D4 basis

        // involution on the E8 part: +1 on the Dynkin D4, -1 on its complement
        QMat basis(8, 8);
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 8; ++i) {
                basis(i, j) = Rat(plus_basis[j][i]);
                basis(i, 4 + j) = Rat(d4_in_e8(i, j));
            }
        QMat binv = qmat_inverse(basis);
        QMat sign_flip(8, 8);
        for (int i = 0; i < 8; ++i) sign_flip(i, i) = Rat(i < 4 ? 1 : -1);
        QMat m_e8 = basis * sign_flip * binv;

        IMat m(n, n);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                if (m_e8(i, j).get_den() != 1)
                    throw Error("Internal", "rank-(4,6) involution is not integral");
                m(i, j) = m_e8(i, j).get_num();
            }
        m(8, 8) = -1;
        m(9, 9) = -1;

        Rank46Data out{std::move(m), StandardFrame{}};
        out.minus_frame.u1 = unit_vec(n, 8);
        out.minus_frame.u2 = unit_vec(n, 9);
        for (int j = 0; j < 4; ++j) {
            IVec v(n, Int(0));
            for (int i = 0; i < 8; ++i) v[i] = d4_in_e8(i, j);
            out.minus_frame.d4[j] = v;
        }
        return out;
    }();
    return data;
}

}  // namespace

ExtendedInvolution rank46_involution(const IVec& eps) {
    return ExtendedInvolution(rank46_data().matrix, eps);
}

StandardFrame rank46_minus_frame() { return rank46_data().minus_frame; }

}  // namespace enriques
