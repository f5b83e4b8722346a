#pragma once

#include "burnside/gset.hpp"
#include "burnside/mackey.hpp"

#include <memory>

namespace burnside {

// Basis of A(S): G-orbits of pairs (point s, subgroup K <= G_s), one canonical
// representative per orbit. For each orbit of S with base stabilizer R this is
// the list of R-conjugacy classes of subgroups of R, in canonical order.
struct SiteBasis {
    struct Elt {
        int orbit;
        int local;  // local class index within the base stabilizer
        Elems k;    // canonical local representative subgroup
    };
    std::vector<Elt> elems;
    std::vector<int> orbit_offset;  // first basis index per orbit

    int size() const { return (int)elems.size(); }
};

SiteBasis site_basis(const GSet& s);

// Basis index of the G-orbit of the pair (point, K <= stab(point)).
int pair_index(const GSet& s, const SiteBasis& bs, int point, const Elems& k);

// Structure map matrices of the Burnside bifunctor along f.
IntMat induce_matrix(const GMap& f);    // A(src) -> A(dst), relabel structure maps
IntMat restrict_matrix(const GMap& f);  // A(dst) -> A(src), pullback and decompose

// Product in A(S) by fiber product over S.
IntVec multiply_elements(const GSet& s, const IntVec& a, const IntVec& b);
IntVec unit_element(const GSet& s);

// Ghost map at the one-point site: fixed points per subgroup class.
IntVec marks_vector(const Group& g, const IntVec& a);

// The transitive object over S named by a basis element: a standard
// transitive G-set together with its structure map to S.
struct BasisObject {
    std::shared_ptr<GSet> total;  // standard orbit of class cls(K)
    GMap to_site;
};
BasisObject basis_object(const GSet& s, const SiteBasis& bs, int index);

// Universal action of A(S) on M(S): x -> a . x, as a matrix on evaluate_site.
IntMat act_operator(const MackeyFunctor& m, const GSet& s, const SiteBasis& bs, const IntVec& a);
IntVec act_on(const MackeyFunctor& m, const GSet& s, const SiteBasis& bs, const IntVec& a,
              const IntVec& x);

}  // namespace burnside
