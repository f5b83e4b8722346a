#pragma once

#include "burnside/group.hpp"

#include <string>
#include <vector>

namespace burnside {

// Coset map datum for f: G/H -> G/K with f(eH) = gK; needs g^-1 H g <= K.
struct CosetMapData {
    Elems h, k;
    int g = 0;
};

// Finite left G-set in standard form: a list of orbit instances, each the
// coset space of a canonical class representative. Points of an orbit are the
// cosets xR sorted by their minimal element; the base point is eR.
class GSet {
  public:
    struct Orbit {
        int cls;
        int offset;
        int size;
    };

    GSet() : g_(nullptr), npoints_(0) {}
    static GSet from_classes(const Group& g, const std::vector<std::pair<int, int>>& class_mults);
    static GSet point(const Group& g);
    static GSet free_orbit(const Group& g);
    static GSet empty(const Group& g);
    static GSet disjoint_union(const GSet& a, const GSet& b);

    const Group* group() const { return g_; }
    int npoints() const { return npoints_; }
    const std::vector<Orbit>& orbits() const { return orbits_; }
    int point_orbit(int p) const { return point_orbit_[p]; }
    int point_rep(int p) const { return point_rep_[p]; }  // canonical coset representative
    int base(int o) const { return orbits_[o].offset; }
    const Elems& stabilizer(int o) const;  // of the base point (a class representative)
    int act(int e, int p) const;

    bool same_orbit_type(const GSet& other) const;  // equal multiset of classes

  private:
    const Group* g_;
    std::vector<Orbit> orbits_;
    int npoints_;
    std::vector<int> point_orbit_;
    std::vector<int> point_rep_;
    std::vector<const std::vector<int>*> coset_pos_;  // per orbit: elem -> position
    friend GSet make_standard_gset(const Group&, const std::vector<int>&);
};

// Equivariant map between standard G-sets, stored by orbit base images.
struct GMap {
    const GSet* src = nullptr;
    const GSet* dst = nullptr;
    std::vector<int> base_image;  // per src orbit

    GMap() = default;
    GMap(const GSet& s, const GSet& d, std::vector<int> images);
    int apply(int p) const;
    CosetMapData coset_data(int src_orbit) const;
    bool operator==(const GMap& o) const;
    static GMap identity(const GSet& s);
    static GMap to_point(const GSet& s, const GSet& pt);
    static GMap compose(const GMap& outer, const GMap& inner);  // outer(inner(x))
    static GMap orbit_inclusion(const GSet& orbit_set, const GSet& whole, int orbit_idx);
};

// Materialized G-set with an explicit action table, prior to decomposition.
struct RawGSet {
    const Group* g = nullptr;
    int n = 0;
    std::vector<int> action;  // action[e * n + p]
    int act(int e, int p) const { return action[(size_t)e * n + p]; }
};

struct Decomposition {
    GSet gs;
    std::vector<int> to_std;    // raw point -> standard point
    std::vector<int> from_std;  // standard point -> raw point
    std::vector<int> raw_base;  // per orbit: raw point mapping to the standard base
};

Decomposition decompose(const RawGSet& raw);
RawGSet to_raw(const GSet& s);

struct PullbackResult {
    std::shared_ptr<GSet> total;  // heap-held so the projection maps stay valid on move
    GMap to_src_of_f;             // projection onto the domain of f
    GMap to_src_of_g;             // projection onto the domain of g
};
PullbackResult pullback(const GMap& f, const GMap& g);
PullbackResult product(const GSet& a, const GSet& b);  // pullback over the point

std::vector<GMap> all_gmaps(const GSet& s, const GSet& t);

// Family of subgroups: conjugation-closed by class storage, subgroup-closed by
// construction.
struct Family {
    const Group* g = nullptr;
    std::vector<char> member;  // indexed by subgroup class

    bool contains(int cls) const { return member[cls]; }
    bool operator==(const Family& o) const { return g == o.g && member == o.member; }
    std::vector<int> member_classes() const;
    std::vector<int> maximal_classes() const;
};

Family family_from_classes(const Group& g, const std::vector<int>& classes);  // closes downward
Family family_all(const Group& g);
Family family_cyclic(const Group& g);
Family family_elementary(const Group& g, int p);
Family family_hyperelementary(const Group& g);
Family family_p_hyperelementary(const Group& g, int p);
bool family_is_closed(const Family& f);

GSet gset_of_family(const Family& f);  // one orbit per maximal class
Family family_of(const GSet& s);

Family hyper_p_closure(const Family& f, int p);
GSet hyper_p_set(const GSet& x, int p);

// CLI mini-languages.
GSet gset_from_spec(const Group& g, const std::string& spec);
Family family_from_spec(const Group& g, const std::string& spec);

}  // namespace burnside
