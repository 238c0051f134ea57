#ifndef ENRIQUES_SAMPLERS_HPP
#define ENRIQUES_SAMPLERS_HPP

#include <cstdint>

#include "enriques/involution.hpp"

namespace enriques {

// Roots of the ambient lattice used for randomized checks: the 240 roots of
// the E8 summand, their x1/x2-shifted lifts, and the U roots +-(x1 - x2).
const std::vector<IVec>& ambient_root_pool();

// Roots spanning a negative definite sublattice (E8 summand and x1 - x2);
// greedy reflection reduction over these always terminates.
const std::vector<IVec>& definite_root_pool();

struct InvolutionSample {
    ExtendedInvolution inv;
    StandardFrame frame;  // a standard pair and D4 basis inside the (-1)-eigenlattice
};

// Seeded involution equipped with an embedded U (+) D4 inside its
// (-1)-eigenlattice, with eps not identically zero on that sublattice:
// a base involution (-1 or the rank-(4,6) one) conjugated by a random word
// of root reflections, with eps drawn from the compatible mod-2 solutions.
InvolutionSample random_involution_with_frame(std::uint64_t seed);

// random isometry of the ambient lattice: a word of root reflections
IMat random_reflection_word(std::uint64_t seed, int length);

}  // namespace enriques

#endif
