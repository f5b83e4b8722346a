#pragma once

#include "burnside/gset.hpp"
#include "burnside/intlin.hpp"
#include "burnside/kernels.hpp"

#include <memory>
#include <mutex>
#include <string>

namespace burnside {

bool operator<(const CosetMapData& a, const CosetMapData& b);

// Tabulated Mackey (pre-)functor. Values live at transitive G-sets G/H where
// H is always a canonical class representative; cov/contra matrices are keyed
// by the raw coset datum f(eH) = gK, so representative dependence of a
// pre-functor is observable.
class MackeyFunctor {
  public:
    MackeyFunctor(const Group& g, std::string name, bool pre_only)
        : g_(&g), name_(std::move(name)), pre_only_(pre_only) {}
    virtual ~MackeyFunctor() = default;

    const Group& group() const { return *g_; }
    const std::string& name() const { return name_; }
    bool pre_only() const { return pre_only_; }

    const AbGroup& value(const Elems& h) const;
    const IntMat& cov(const CosetMapData& f) const;
    const IntMat& contra(const CosetMapData& f) const;

  protected:
    virtual AbGroup compute_value(const Elems& h) const = 0;
    virtual IntMat compute_cov(const CosetMapData& f) const = 0;
    virtual IntMat compute_contra(const CosetMapData& f) const = 0;

  private:
    const Group* g_;
    std::string name_;
    bool pre_only_;
    mutable std::mutex mu_;
    mutable std::map<Elems, AbGroup> value_cache_;
    mutable std::map<CosetMapData, IntMat> cov_cache_, contra_cache_;
};

using MackeyPtr = std::shared_ptr<const MackeyFunctor>;

// Green ring: a Mackey functor with a ring per value, units preserved by
// restriction.
class GreenFunctor : public MackeyFunctor {
  public:
    using MackeyFunctor::MackeyFunctor;
    const IntVec& unit(const Elems& h) const;
    IntVec multiply(const Elems& h, const IntVec& u, const IntVec& v) const;
    const IntMat& product_table(const Elems& h, int gen_index) const;  // left mult by e_i

  protected:
    virtual IntVec compute_unit(const Elems& h) const = 0;
    virtual IntVec compute_product(const Elems& h, int i, int j) const = 0;

  private:
    mutable std::mutex gmu_;
    mutable std::map<Elems, IntVec> unit_cache_;
    mutable std::map<std::pair<Elems, int>, IntMat> table_cache_;
};

using GreenPtr = std::shared_ptr<const GreenFunctor>;

// Value of a functor on a standard G-set, with block offsets per orbit.
struct SiteValue {
    AbGroup ab;
    std::vector<int> offset;
    std::vector<int> dim;
};

SiteValue evaluate_site(const MackeyFunctor& m, const GSet& s);
IntMat assemble_cov(const MackeyFunctor& m, const GMap& f);
IntMat assemble_contra(const MackeyFunctor& m, const GMap& f);

// ---- axiom validation ----

struct M1Failure {
    CosetMapData alpha, beta;  // two maps into the same transitive target
    IntMat lhs, rhs;           // contra(alpha) * cov(beta) vs the pullback composite
};
struct ConjFailure {
    int cls;
    int element;  // x in H with cov(H, H, x) != identity
    IntMat mat;
};
struct ValidationReport {
    std::vector<M1Failure> squares;
    std::vector<ConjFailure> conjugations;
    std::vector<std::pair<int, int>> m2_failures;
    bool ok() const { return squares.empty() && conjugations.empty() && m2_failures.empty(); }
};

struct ValidationOptions {
    bool check_m2 = true;
    ExecMode mode = ExecMode::Auto;
};

ValidationReport validate_mackey(const MackeyFunctor& m, ValidationOptions opts = {});

// ---- homomorphisms and derived functors ----

class MackeyHom {
  public:
    MackeyHom(MackeyPtr src, MackeyPtr dst, std::string name)
        : src_(std::move(src)), dst_(std::move(dst)), name_(std::move(name)) {}
    virtual ~MackeyHom() = default;
    const MackeyFunctor& source() const { return *src_; }
    const MackeyFunctor& target() const { return *dst_; }
    MackeyPtr source_ptr() const { return src_; }
    MackeyPtr target_ptr() const { return dst_; }
    const std::string& name() const { return name_; }
    const IntMat& matrix(const Elems& h) const;

  protected:
    virtual IntMat compute_matrix(const Elems& h) const = 0;

  private:
    MackeyPtr src_, dst_;
    std::string name_;
    mutable std::mutex mu_;
    mutable std::map<Elems, IntMat> cache_;
};

using HomPtr = std::shared_ptr<const MackeyHom>;

// Naturality check: commutes with cov and contra for every map between
// transitive sites. Throws Error(Input) when it fails.
void validate_hom(const MackeyHom& t);

struct HomKernelImage {
    MackeyPtr kernel, image, cokernel;
};
HomKernelImage hom_kernel_image(const HomPtr& theta);

// Image of a Green-ring homomorphism, carrying the induced ring structure.
GreenPtr image_green(const HomPtr& theta, GreenPtr target);

// Generic concrete hom given by a per-subgroup matrix function.
class FnHom : public MackeyHom {
  public:
    using Fn = std::function<IntMat(const Elems&)>;
    FnHom(MackeyPtr src, MackeyPtr dst, std::string name, Fn fn)
        : MackeyHom(std::move(src), std::move(dst), std::move(name)), fn_(std::move(fn)) {}

  protected:
    IntMat compute_matrix(const Elems& h) const override { return fn_(h); }

  private:
    Fn fn_;
};

HomPtr scalar_hom(MackeyPtr m, const Int& k);

// All maps between two transitive standard sites (canonical order).
std::vector<GMap> transitive_maps(const GSet& a, const GSet& b);

}  // namespace burnside
