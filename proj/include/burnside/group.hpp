#pragma once

#include "burnside/intlin.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace burnside {

using Elems = std::vector<int>;  // sorted element indices of a subgroup

struct SubgroupData;

// Finite group as an explicit multiplication table. Element 0 is the identity.
class Group {
  public:
    Group(std::string name, int order, std::vector<int> mult, std::vector<std::string> labels);
    Group(const Group&) = delete;
    Group& operator=(const Group&) = delete;
    Group(Group&&) = default;
    ~Group();

    const std::string& name() const { return name_; }
    int order() const { return n_; }
    int id() const { return 0; }
    int mul(int a, int b) const { return mult_[(size_t)a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    const std::string& label(int a) const { return labels_[a]; }
    int element_order(int a) const;

    // p-power dividing the order of a, and its complement part.
    int element_p_part(int a, int p) const;

    const SubgroupData& subgroups() const;  // computed once, cached

  private:
    std::string name_;
    int n_;
    std::vector<int> mult_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    mutable std::unique_ptr<SubgroupData> sdata_;
};

// Parse a catalog name (Cn, Dn = dihedral of order 2n, Q8, Sn/An for n <= 5,
// E<p>^<k> elementary abelian) or a semicolon-separated list of permutation
// generators in cycle notation.
Group group_from_spec(const std::string& spec);

// ---- subgroup machinery ----

Elems closure(const Group& g, Elems seed);
bool is_subgroup(const Group& g, const Elems& h);
bool subset_of(const Elems& a, const Elems& b);
Elems conjugate_subgroup(const Group& g, const Elems& h, int x);  // x h x^-1
bool is_normal_in(const Group& g, const Elems& h, const Elems& in);
Elems intersect_elems(const Elems& a, const Elems& b);
Elems normalizer(const Group& g, const Elems& h);
std::vector<int> left_coset_reps(const Group& g, const Elems& in, const Elems& h);
bool is_prime(int p);
std::vector<int> prime_divisors(int n);

struct SubgroupClassInfo {
    int rep;              // subgroup index of the canonical representative
    std::vector<int> members;
    int normalizer_order;
    std::string name;     // deterministic display name
};

struct SubgroupData {
    const Group* g;
    std::vector<Elems> sub;          // all subgroups, sorted by (size, lex)
    std::map<Elems, int> sub_index;
    std::vector<int> cls;            // subgroup -> class
    std::vector<SubgroupClassInfo> classes;
    std::vector<std::vector<char>> leq;  // leq[c1][c2]: some member of c1 inside rep of c2

    int index_of(const Elems& h) const;
    int class_of(const Elems& h) const;
    const Elems& rep_elems(int cls_idx) const { return sub[classes[cls_idx].rep]; }
    int class_by_name(const std::string& name) const;
    // subgroups of `within` up to conjugation by `within`, canonical order
    struct LocalClasses {
        std::vector<Elems> reps;                  // sorted by (size, lex)
        std::map<Elems, int> index_by_subgroup;   // every member subgroup -> local class
    };
    const LocalClasses& local_classes(const Elems& within) const;

    // coset space of the class representative: cosets xR sorted by minimal
    // element, with an element -> coset position table
    struct CosetTable {
        std::vector<int> pos_of_elem;  // |G| entries
        std::vector<int> rep_of_pos;   // canonical representative per coset
    };
    const CosetTable& coset_table(int cls_idx) const;

  private:
    mutable std::map<Elems, LocalClasses> local_cache_;
    mutable std::map<int, CosetTable> coset_cache_;
};

std::unique_ptr<SubgroupData> build_subgroup_data(const Group& g);

// O^p(h): the smallest normal subgroup of h with p-group quotient.
Elems o_p(const Group& g, const Elems& h, int p);

bool is_p_hyperelementary(const Group& g, const Elems& h, int p);
bool is_hyperelementary(const Group& g, const Elems& h);
bool is_p_elementary(const Group& g, const Elems& h, int p);

// Fixed points of h acting on cosets of k: |{xk : h xk = xk for all h}|.
int fixed_coset_count(const Group& g, const Elems& h, const Elems& k);

}  // namespace burnside
