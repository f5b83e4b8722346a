#pragma once

#include "burnside/bring.hpp"
#include "burnside/mackey.hpp"

namespace burnside {

// The Burnside Green ring: value at G/H is A(G/H) in the pair basis.
GreenPtr burnside_functor(const Group& g);

// Integer class functions with character induction/restriction and pointwise
// product.
GreenPtr class_function_green(const Group& g);

// Quotient of the Burnside functor by the kernel of the fixed-point character
// map: the Green ring of permutation characters.
GreenPtr perm_char_green_ring(const Group& g);

// The character map A -> class functions, [H/K] -> chi_{H/K}.
HomPtr char_map_hom(GreenPtr burnside, GreenPtr cf);

// Orientation-twisted pre-functor: value Z, structure maps carry the sign of
// the coset representative; a Mackey functor only when omega is trivial on
// every subgroup.
MackeyPtr signed_pre_functor(const Group& g, const std::vector<int>& omega_signs);

// omega given by its kernel (a normal subgroup of index <= 2).
std::vector<int> omega_from_kernel(const Group& g, const Elems& kernel);

MackeyPtr zero_functor(const Group& g);

// g + g with componentwise ring structure; the Burnside action lands in the
// diagonal. Test fixture for unit-image computations.
GreenPtr double_green(GreenPtr g);

// element classes of a subgroup, canonical order (used by class functions)
std::vector<Elems> element_classes(const Group& g, const Elems& h);

}  // namespace burnside
