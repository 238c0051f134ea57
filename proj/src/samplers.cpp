#include "enriques/samplers.hpp"

#include <random>

namespace enriques {

const std::vector<IVec>& ambient_root_pool() {
    static const std::vector<IVec> pool = [] {
        const Lattice& l = ambient_lattice();
        const Lattice e8 = standard_lattice("E8neg");
        std::vector<IVec> out;
        std::vector<IVec> e8_roots = vectors_of_norm(e8, Int(-2));
        for (const IVec& r : e8_roots) {
            IVec v(l.rank(), Int(0));
            for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
            out.push_back(v);
            // isotropic shifts stay roots: (r + m x1)^2 = r^2
            IVec vx = v;
            vx[8] = 1;
            out.push_back(vx);
            IVec vy = v;
            vy[9] = 1;
            out.push_back(vy);
        }
        IVec u(l.rank(), Int(0));
        u[8] = 1;
        u[9] = -1;
        out.push_back(u);
        out.push_back(ivec_scale(Int(-1), u));
        return out;
    }();
    return pool;
}

const std::vector<IVec>& definite_root_pool() {
    static const std::vector<IVec> pool = [] {
        const Lattice& l = ambient_lattice();
        const Lattice e8 = standard_lattice("E8neg");
        std::vector<IVec> out;
        for (const IVec& r : vectors_of_norm(e8, Int(-2))) {
            IVec v(l.rank(), Int(0));
            for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
            out.push_back(v);
        }
        IVec u(l.rank(), Int(0));
        u[8] = 1;
        u[9] = -1;
        out.push_back(u);
        out.push_back(ivec_scale(Int(-1), u));
        return out;
    }();
    return pool;
}

IMat random_reflection_word(std::uint64_t seed, int length) {
    const Lattice& l = ambient_lattice();
    const auto& pool = ambient_root_pool();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t n = l.rank();
    IMat s = IMat::identity(n);
    for (int k = 0; k < length; ++k) {
        const IVec& r = pool[pick(rng)];
        // reflection matrix columns: e_i + (e_i . r) r
        IMat refl = IMat::identity(n);
        for (std::size_t j = 0; j < n; ++j) {
            IVec ej(n, Int(0));
            ej[j] = 1;
            Int c = l.inner(ej, r);
            for (std::size_t i = 0; i < n; ++i) refl(i, j) += c * r[i];
        }
        s = refl * s;
    }
    return s;
}

InvolutionSample random_involution_with_frame(std::uint64_t seed) {
    const Lattice& l = ambient_lattice();
    std::size_t n = l.rank();
    std::mt19937_64 rng(seed);

    for (int attempt = 0;; ++attempt) {
        bool use_rank46 = ((rng() + static_cast<std::uint64_t>(attempt)) % 2) == 1;
        IMat base(n, n);
        StandardFrame frame;
        if (use_rank46) {
            base = rank46_involution(IVec(n, Int(0))).matrix();
            frame = rank46_minus_frame();
        } else {
            for (std::size_t i = 0; i < n; ++i) base(i, i) = -1;
            frame = standard_frame();
        }
        int word_len = static_cast<int>(rng() % 4);
        IMat s = random_reflection_word(rng(), word_len);
        // conjugate: reflections are involutions, so s^{-1} is another word;
        // compute the inverse exactly over Q and verify integrality
        QMat sinv_q = qmat_inverse(to_rational(s));
        IMat sinv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (sinv_q(i, j).get_den() != 1)
                    throw Error("Internal", "reflection word inverse must be integral");
                sinv(i, j) = sinv_q(i, j).get_num();
            }
        IMat m = s * base * sinv;
        auto map_vec = [&](const IVec& v) { return s * v; };
        StandardFrame moved;
        moved.u1 = map_vec(frame.u1);
        moved.u2 = map_vec(frame.u2);
        for (int i = 0; i < 4; ++i)
            moved.d4[static_cast<std::size_t>(i)] = map_vec(frame.d4[static_cast<std::size_t>(i)]);

        // draw eps: compatible with the involution and not identically zero
        // on the embedded frame; the 2^10 candidate space is scanned from a
        // random starting point
        std::uint64_t start = rng() % 1024;
        for (std::uint64_t off = 0; off < 1024; ++off) {
            std::uint64_t bits = (start + off) % 1024;
            IVec eps(n, Int(0));
            for (std::size_t i = 0; i < n; ++i) eps[i] = Int((bits >> i) & 1);
            // compatibility: eps . (I + m) column = even
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) {
                Int sum = eps[j];
                for (std::size_t i = 0; i < n; ++i) sum += eps[i] * m(i, j);
                if (sgn(sum % 2) != 0) ok = false;
            }
            if (!ok) continue;
            // eps must not vanish identically on the frame sublattice
            auto pair_mod2 = [&](const IVec& v) {
                Int sum = 0;
                for (std::size_t i = 0; i < n; ++i) sum += eps[i] * v[i];
                Int r;
                mpz_mod(r.get_mpz_t(), sum.get_mpz_t(), Int(2).get_mpz_t());
                return r;
            };
            bool nonzero = sgn(pair_mod2(moved.u1)) != 0 || sgn(pair_mod2(moved.u2)) != 0;
            for (int i = 0; i < 4 && !nonzero; ++i)
                nonzero = sgn(pair_mod2(moved.d4[static_cast<std::size_t>(i)])) != 0;
            if (!nonzero) continue;
            return InvolutionSample{ExtendedInvolution(m, eps), moved};
        }
        // no admissible eps for this conjugate; try a fresh word
        if (attempt > 32) throw Error("Internal", "no admissible eps found");
    }
}

}  // namespace enriques
