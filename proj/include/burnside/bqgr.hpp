#pragma once

#include "burnside/functors.hpp"

namespace burnside {

// Lattice basis (column HNF) of the ideal I_M at a transitive site G/H, inside
// the pair basis of A(G/H). h must be a class representative.
IntMat ideal_at_class(const MackeyFunctor& m, const Elems& h);

// Ideal at an arbitrary standard site, assembled per orbit.
IntMat ideal_at_site(const MackeyFunctor& m, const GSet& s);

// The Burnside quotient Green ring A_M = A / I_M.
// Refuses pre-functors: I_M needs the Mackey axioms.
GreenPtr bqgr(MackeyPtr m);

// iota: A -> g, a -> a . 1, as a homomorphism of Mackey functors.
HomPtr unit_map_hom(GreenPtr bur, GreenPtr g);

// Sub-Green ring {a . 1} of g with induced structure.
GreenPtr image_of_unit_map(GreenPtr g);

}  // namespace burnside
