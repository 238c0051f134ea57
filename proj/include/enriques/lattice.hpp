#ifndef ENRIQUES_LATTICE_HPP
#define ENRIQUES_LATTICE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enriques/linalg.hpp"

namespace enriques {

// Finite-rank integral lattice given by its Gram matrix.
class Lattice {
public:
    Lattice() = default;
    Lattice(IMat gram, std::vector<std::string> labels = {});

    std::size_t rank() const { return gram_.rows(); }
    const IMat& gram() const { return gram_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Int inner(const IVec& x, const IVec& y) const;
    Int norm_of(const IVec& x) const { return inner(x, x); }

    Int det() const { return imat_det(gram_); }
    bool is_degenerate() const { return sgn(det()) == 0; }

private:
    IMat gram_;
    std::vector<std::string> labels_;
};

struct Isometry {
    IMat matrix;
};

// Finite quadratic form on the discriminant group L*/L of an even lattice.
// Group elements are tuples (a_1, ..., a_k) modulo the invariant factors.
struct DiscriminantForm {
    std::vector<Int> invariant_factors;          // d_1 | d_2 | ..., each > 1
    std::map<std::vector<Int>, Rat> q_values;    // q(x) in Q/2Z, stored in [0, 2)
    std::map<std::pair<std::vector<Int>, std::vector<Int>>, Rat> b_values;  // in [0, 1)
    bool is_even = false;                        // all q-values integral mod 2Z

    Int group_order() const {
        Int n = 1;
        for (const Int& d : invariant_factors) n *= d;
        return n;
    }
};

// name in {U, E8neg, D4neg, nA1 via a1(n), diag(list)}
Lattice standard_lattice(const std::string& name);
Lattice diagonal_lattice(const IVec& entries);
Lattice a1_lattice(std::size_t n);

Lattice direct_sum(const Lattice& a, const Lattice& b);

struct Signature {
    int positive = 0, negative = 0, zero = 0;
    bool operator==(const Signature&) const = default;
};
Signature signature(const Lattice& l);

bool is_even(const Lattice& l);

// invariant factors (> 1) of coker(gram); empty iff unimodular
std::vector<Int> discriminant_group(const Lattice& l);

DiscriminantForm discriminant_form(const Lattice& l);

// saturated integer basis (as matrix columns) of { x : x . v = 0 for all v }
IMat orthogonal_complement(const std::vector<IVec>& vs, const Lattice& l);

// x + (x.r) r for a (-2)-root r
IVec reflect_root(const Lattice& l, const IVec& r, const IVec& x);

bool is_primitive(const IVec& x);

struct EvenSublattice {
    Lattice lattice;      // induced Gram on the sublattice
    IMat embedding;       // columns: sublattice basis in ambient coordinates
    Int index;            // 1 if the input was already even, else 2
};
EvenSublattice max_even_sublattice(const Lattice& l);

// All vectors of a definite lattice with given norm, in deterministic order.
std::vector<IVec> vectors_of_norm(const Lattice& l, const Int& norm);

// Exhaustive isometry test for definite lattices of equal rank.
std::optional<Isometry> isometry_search(const Lattice& a, const Lattice& b);

}  // namespace enriques

#endif
