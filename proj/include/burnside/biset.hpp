#pragma once

#include "burnside/mackey.hpp"

namespace burnside {

// Transitive bifree (left, right)-biset in canonical form: the pair of a
// subgroup A of the right group and a monomorphism f: A -> left group, up to
// simultaneous conjugation on both sides.
struct BisetShape {
    Elems left, right;     // H2 acts on the left, H1 on the right
    Elems domain;          // A <= H1
    std::vector<int> fmap; // f(domain[i]) = fmap[i]

    long size() const { return (long)left.size() * (long)right.size() / (long)domain.size(); }
};
bool operator<(const BisetShape& a, const BisetShape& b);
bool operator==(const BisetShape& a, const BisetShape& b);

BisetShape canonical_biset(const Group& g, const BisetShape& raw);

// Integer combination of canonical transitive bisets: a morphism H1 -> H2 in
// the G-Burnside category. The empty combination is the zero morphism.
struct BisetMorphism {
    const Group* g = nullptr;
    Elems left, right;
    std::map<BisetShape, Int> terms;

    void add(const BisetShape& s, const Int& c);
    bool operator==(const BisetMorphism& o) const;
    BisetMorphism operator+(const BisetMorphism& o) const;
};

BisetMorphism biset_zero(const Group& g, const Elems& right, const Elems& left);
BisetMorphism biset_identity(const Group& g, const Elems& h);

// Composition X o Y by the balanced product over the middle group.
BisetMorphism balanced_product(const BisetMorphism& x, const BisetMorphism& y);

// Reversal: same set, h1 . x . h2 := h2^-1 x h1^-1.
BisetMorphism tau(const BisetMorphism& m);
BisetShape tau_shape(const Group& g, const BisetShape& s);

// The biset assigned to a G-map between transitive G-sets.
BisetMorphism j_lower(const Group& g, const CosetMapData& f);
BisetMorphism j_upper(const Group& g, const CosetMapData& f);

// Explicitly materialized biset with a point set and both actions; the level
// at which products and decompositions are computed.
struct MaterializedBiset {
    const Group* g = nullptr;
    Elems left, right;
    int n = 0;
    std::vector<int> lact;  // lact[i * n + p], i indexes `left`
    std::vector<int> ract;  // ract[j * n + p], j indexes `right`

    int lapply(int i, int p) const { return lact[(size_t)i * n + p]; }
    int rapply(int p, int j) const { return ract[(size_t)j * n + p]; }
};

MaterializedBiset materialize_biset(const Group& g, const BisetShape& s);

struct BisetDecomposition {
    std::vector<BisetShape> orbits;      // canonical shapes, one per transitive orbit
    std::vector<int> non_bifree_sizes;   // rejected orbits (never silently dropped)
};
BisetDecomposition decompose_biset(const MaterializedBiset& m);

// H/K x X with action h1 (hK, x) h2 = (h1 h K, h1 x h2); decomposes into
// transitive bisets and reports any non-bifree orbit.
struct PermBisetProduct {
    BisetMorphism morphism;
    std::vector<int> rejected_sizes;
};
PermBisetProduct perm_biset_product(const Group& g, const Elems& k, const BisetShape& x);

// All canonical transitive bifree (left, right)-bisets.
std::vector<BisetShape> all_transitive_bisets(const Group& g, const Elems& left, const Elems& right);

// The additive fixture on the biset category that factors the Burnside Mackey
// functor: value free on local subgroup classes, bisets act by balanced
// product with coset spaces.
MackeyPtr mackey_via_j_functor(const Group& g);

// Matrix of the fixture on a single canonical biset.
IntMat biset_fixture_matrix(const Group& g, const BisetShape& s);

}  // namespace burnside
