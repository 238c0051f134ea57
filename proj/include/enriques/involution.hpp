#ifndef ENRIQUES_INVOLUTION_HPP
#define ENRIQUES_INVOLUTION_HPP

#include <array>
#include <optional>
#include <utility>

#include "enriques/lattice.hpp"

namespace enriques {

enum class DeltaValue { Zero, W2 };
enum class PlaneTag { I00, I0w2, Iw2w2, II };
enum class RealityTag { NotReal, RealWithRealFibers, RealWithConjugateFibers };
enum class UPairCase { PairOfPencils, PencilPlusNode };

std::string plane_tag_name(PlaneTag t);   // "I(0,0)" | "I(0,w2)" | "I(w2,w2)" | "II"
std::optional<PlaneTag> plane_tag_from_name(const std::string& s);
std::string reality_tag_name(RealityTag t);

// The fixed ambient lattice E8 (+) U of rank 10; basis a1..a8, x1, x2.
const Lattice& ambient_lattice();

// Involutive isometry of the ambient lattice together with the Z/2-functional
// carrying the torsion bookkeeping: the full action on L (+) Z/2 is
// (v, t) |-> (M v, eps(v) + t), and delta on the (-1)-eigenlattice is eps.
class ExtendedInvolution {
public:
    ExtendedInvolution(IMat m, IVec eps);  // validates all invariants

    const IMat& matrix() const { return m_; }
    const IVec& eps() const { return eps_; }

    IVec apply(const IVec& x) const { return m_ * x; }
    bool in_minus(const IVec& x) const;          // (I + m) x == 0
    bool in_plus(const IVec& x) const;           // (I - m) x == 0

    // saturated basis (matrix columns) of the (+1)- or (-1)-eigenlattice
    IMat eigenlattice(int sign) const;

    DeltaValue delta(const IVec& y) const;       // requires y in the (-1)-eigenlattice

private:
    IMat m_;
    IVec eps_;
};

PlaneTag classify_plane(const ExtendedInvolution& inv, const IVec& u1, const IVec& u2);

// Constructive search for a hyperbolic plane of type I(0,w2) inside the
// (-1)-eigenlattice, given a standard pair and an orthogonal D4 basis
// (e_i^2 = -2, e_i e_j = 0 for i < j <= 3, e_i e_4 = 1). Searches only the
// family { u1, u2, u1 + u2 + e : e in {e_1..e_4, e_1 + e_4} }.
std::pair<IVec, IVec> find_plane_i0w2(const ExtendedInvolution& inv, const IVec& u1,
                                      const IVec& u2, const std::array<IVec, 4>& d4);

struct IsotropicSearch {
    std::optional<IVec> vector;  // primitive isotropic element of the (-1)-eigenlattice
    long bound;                  // coordinate bound that was searched
};
IsotropicSearch find_primitive_isotropic(const ExtendedInvolution& inv, long bound = 3);

struct ReflectionReduction {
    IVec result;
    std::vector<std::size_t> word;  // indices into the root list, in application order
};

class StepLimitExceeded : public Error {
public:
    StepLimitExceeded(IVec partial, std::vector<std::size_t> word)
        : Error("StepLimitExceeded", "reflection reduction exceeded its step limit"),
          partial_(std::move(partial)), word_(std::move(word)) {}
    const IVec& partial() const { return partial_; }
    const std::vector<std::size_t>& word() const { return word_; }

private:
    IVec partial_;
    std::vector<std::size_t> word_;
};

ReflectionReduction reduce_by_reflections(const Lattice& l, const IVec& x,
                                          const std::vector<IVec>& roots,
                                          std::size_t step_limit = 10000);

RealityTag pencil_reality(const ExtendedInvolution& inv, const IVec& x);

UPairCase u_pair_case(const Lattice& l, const IVec& y1, const IVec& y2,
                      const std::vector<IVec>& roots);

// Fixed embedded frame used by constructions and the verification suite:
// the U summand together with a D4 basis inside E8 in the paper's relations.
struct StandardFrame {
    IVec u1, u2;              // standard pair spanning the U summand
    std::array<IVec, 4> d4;   // D4 generators inside the E8 summand
};
const StandardFrame& standard_frame();

// Involution with eigenlattice ranks (4, 6): +1 on a D4 inside E8 and -1 on
// its complement (a second D4) and on U. Built at runtime from the embedding
// search and verified integral.
ExtendedInvolution rank46_involution(const IVec& eps);

// Frame for rank46_involution: a standard pair and a D4 basis inside its
// (-1)-eigenlattice.
StandardFrame rank46_minus_frame();

}  // namespace enriques

#endif
