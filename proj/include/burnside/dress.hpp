#pragma once

#include "burnside/bqgr.hpp"

namespace burnside {

struct GeneratingVerdict {
    bool verdict = false;
    IntVec coker_divisors;  // elementary divisors > 1 of the cokernel
    int coker_free_rank = 0;
    Int residual = 1;  // generic locale: torsion order with primes of |G| removed
};

// Is the covariant map g(x) -> g(point) surjective in the given locale?
GeneratingVerdict is_generating(const GreenFunctor& g, const GSet& x, Locale locale,
                                const Int& p = 0);

struct DressPrimeVerdict {
    int p;
    bool verdict;
    IntVec coker_divisors;
    int coker_free_rank;
    std::vector<int> hyper_set_classes;  // orbit classes of hyper_p-x
};

struct DressReport {
    std::vector<DressPrimeVerdict> per_prime;  // primes dividing |G|, ascending
    GeneratingVerdict generic;                 // all primes away from |G| at once
    bool overall = false;
};

DressReport is_dress_generating(const GreenFunctor& g, const GSet& x);
// For a plain Mackey functor the check runs on its Burnside quotient.
DressReport is_dress_generating(MackeyPtr m, const GSet& x);

// K(Y) + I(Y) covers M(point) p-locally (kernel of restriction to Y plus image
// of induction from hyper_p-Y).
bool kernel_image_cover_check(const MackeyFunctor& m, const GSet& y, int p);

struct CoefficientTable {
    int prime = 0;
    std::vector<int> family_classes;
    std::map<int, Rat> a;  // subgroup class -> coefficient, denominators prime to p
    bool verified = false;
};

// Solve 1 = sum b_K Ind(y_K) in the Burnside quotient at p, lift to the pair
// basis and aggregate the coefficients a_H; verifies sum a_H Ind Res = id on
// m(point) localized at p.
CoefficientTable induction_coefficients(MackeyPtr m, const Family& f, int p);

}  // namespace burnside
