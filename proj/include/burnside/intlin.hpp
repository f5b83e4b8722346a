#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
    enum Kind { Usage, Cap, Shape, Input, Math, Internal };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Dense matrix of arbitrary-precision integers, row major.
class IntMat {
  public:
    IntMat() : r_(0), c_(0) {}
    IntMat(int r, int c) : r_(r), c_(c), a_((size_t)r * c) {}

    static IntMat identity(int n);
    static IntMat zero(int r, int c) { return IntMat(r, c); }
    static IntMat from_rows(const std::vector<IntVec>& rows);
    static IntMat from_cols(const std::vector<IntVec>& cols);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Int& at(int i, int j) { return a_[(size_t)i * c_ + j]; }
    const Int& at(int i, int j) const { return a_[(size_t)i * c_ + j]; }

    bool operator==(const IntMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    bool is_zero() const;

    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator-() const;
    IntMat scaled(const Int& k) const;
    IntVec apply(const IntVec& v) const;

    IntMat transposed() const;
    IntVec col(int j) const;
    IntVec row(int i) const;
    void set_col(int j, const IntVec& v);

    static IntMat hstack(const IntMat& a, const IntMat& b);
    static IntMat vstack(const IntMat& a, const IntMat& b);
    // Block diagonal of the given matrices.
    static IntMat block_diag(const std::vector<IntMat>& blocks);

    IntMat reduced_mod(const Int& m) const;  // entries into [0, m)

  private:
    int r_, c_;
    std::vector<Int> a_;
};

// Smith normal form: u * m * v = d with u, v unimodular and d diagonal,
// d(i,i) >= 0 and d(i,i) | d(i+1,i+1).
struct SnfResult {
    IntMat u, d, v;
    int rank = 0;
    IntVec diag() const;  // nonzero diagonal entries, length rank
};

SnfResult snf(const IntMat& m);

// Column-style Hermite form of the column lattice of m: echelon basis with
// positive pivots and reduced off-pivot entries; zero columns dropped.
// Canonical for a given lattice.
IntMat hnf_cols(const IntMat& m);

bool lattice_contains(const IntMat& hnf_basis, const IntVec& v);
// Coordinates of v in the (echelon) basis, if v lies in the lattice.
std::optional<IntVec> lattice_coords(const IntMat& hnf_basis, const IntVec& v);
bool lattice_equal(const IntMat& hnf_a, const IntMat& hnf_b);
bool lattice_subset(const IntMat& gens_a, const IntMat& hnf_b);
IntMat lattice_sum(const IntMat& a, const IntMat& b);
IntMat lattice_intersection(const IntMat& a, const IntMat& b);

// Basis of {x : m x = 0}.
IntMat kernel_cols(const IntMat& m);
// Basis of {x : m x in column lattice of l}.
IntMat preimage_lattice(const IntMat& m, const IntMat& l);

std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b);

// Solve m x = b over Z localized at p (denominators prime to p).
struct LocalSolveResult {
    bool feasible = false;
    RatVec x;
    std::string certificate;  // failing elementary-divisor congruence if infeasible
};
LocalSolveResult solve_localized(const IntMat& m, const IntVec& b, const Int& p);

struct CokernelInfo {
    IntVec divisors;    // elementary divisors > 1
    int free_rank = 0;
    Int torsion_order() const;
};
// Invariants of Z^rows / (column lattice of m).
CokernelInfo cokernel_info(const IntMat& m);

enum class Locale { Integral, AtPrime, Generic };

struct SurjectivityVerdict {
    bool surjective = false;
    CokernelInfo coker;
    // Generic locale: part of the torsion order with all known prime factors
    // removed; 1 when the cokernel order factors over the supplied primes.
    Int residual = 1;
};
SurjectivityVerdict is_surjective_localized(const IntMat& m, Locale locale, const Int& p = 0,
                                            const IntVec& known_primes = {});

Int p_valuation(const Int& v, const Int& p);

// Finitely generated abelian group presented as Z^gens / (column lattice of rels).
struct AbGroup {
    int gens = 0;
    IntMat rels;      // gens x k
    IntMat rels_hnf;  // cached canonical basis

    AbGroup() = default;
    AbGroup(int g, IntMat r);
    static AbGroup free_group(int rank);
    static AbGroup zero();

    bool is_zero_group() const;
    int free_rank() const;
    IntVec torsion() const;  // elementary divisors > 1
    bool element_is_zero(const IntVec& v) const;
    bool elements_equal(const IntVec& a, const IntVec& b) const;
    static AbGroup direct_sum(const std::vector<AbGroup>& parts);
};

// Do two matrices induce the same map into the presented group (columnwise)?
bool maps_equal_mod(const IntMat& a, const IntMat& b, const AbGroup& target);

// Kernel of the induced map A^gens -> target, i.e. {x : m x in rels(target)}.
IntMat kernel_into(const IntMat& m, const AbGroup& target);

std::string to_string(const Int& v);
std::string to_string(const IntMat& m);

}  // namespace burnside
