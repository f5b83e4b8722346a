#pragma once

#include "burnside/bring.hpp"

namespace burnside {

// Chain data for the (co)simplicial complexes built from a functor, or fed in
// directly for standalone repair. Boundaries are stored for degrees 1..N;
// chain variant: d[r]: C_r -> C_{r-1}; cochain variant: d[r]: C_{r-1} -> C_r.
struct ChainData {
    int max_degree = 0;
    bool cochain = false;
    std::vector<AbGroup> groups;           // 0..N
    std::vector<IntMat> d;                 // index 1..N (d[0] unused)
    std::vector<IntMat> s;                 // contraction s[r]: C_r -> C_{r+1}; empty if absent
    std::vector<std::vector<IntMat>> filt; // per degree: bases of F_1 .. F_D (F_0 full, F_{D+1} = 0)
    Int modulus = 0;                       // 0 integral, else arithmetic mod this

    bool has_contraction() const { return !s.empty(); }
    int rank(int r) const { return groups[r].gens; }
};

// The complex M(Am(X, Y)) with Am_0 = Y, Am_r = X x Am_{r-1} and alternating
// face sums as boundaries.
ChainData amitsur_complex(const MackeyFunctor& m, const GSet& x, const GSet& y, int degrees,
                          bool cochain);

// Contraction candidate built from a Burnside element over X: in each degree
// compose restriction along the projection Z x Am_r -> Am_r with induction
// along (z, w) -> (alpha(z), w), extended linearly over the basis of a.
std::vector<IntMat> homotopy_from_element(const MackeyFunctor& m, const GSet& x, const GSet& y,
                                          int degrees, const IntVec& a);

// Operator on M(Am_r) of the pullback of the pushforward of a (the expected
// value of the homotopy defect d s + s d in degree r).
IntMat pushforward_action(const MackeyFunctor& m, const GSet& x, const GSet& y, int degree,
                          const IntVec& a);

struct HomologyEntry {
    int degree;
    IntVec divisors;
    int free_rank;
};
struct HomologyReport {
    std::vector<HomologyEntry> nonzero;
    bool exact = false;
};

// Homology (or cohomology) via Smith normal form at the requested degrees;
// requires d[r+1] for each requested r. Throws when the data is not a complex.
HomologyReport check_exactness(const ChainData& c, const std::vector<int>& degrees, Locale locale,
                               const Int& p = 0);

// Attach the two-adic filtration F_i = 2^i C up to the given depth.
void attach_two_power_filtration(ChainData& c, int depth);

}  // namespace burnside
