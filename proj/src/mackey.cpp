#include "burnside/mackey.hpp"

#include <algorithm>

namespace burnside {

bool operator<(const CosetMapData& a, const CosetMapData& b) {
    if (a.h != b.h) return a.h < b.h;
    if (a.k != b.k) return a.k < b.k;
    return a.g < b.g;
}

const AbGroup& MackeyFunctor::value(const Elems& h) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = value_cache_.find(h);
        if (it != value_cache_.end()) return it->second;
    }
    AbGroup v = compute_value(h);
    std::lock_guard<std::mutex> lk(mu_);
    return value_cache_.emplace(h, std::move(v)).first->second;
}

const IntMat& MackeyFunctor::cov(const CosetMapData& f) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cov_cache_.find(f);
        if (it != cov_cache_.end()) return it->second;
    }
    IntMat m = compute_cov(f);
    if (m.rows() != value(f.k).gens || m.cols() != value(f.h).gens)
        throw Error(Error::Shape, name_ + ": covariant matrix shape mismatch");
    std::lock_guard<std::mutex> lk(mu_);
    return cov_cache_.emplace(f, std::move(m)).first->second;
}

const IntMat& MackeyFunctor::contra(const CosetMapData& f) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = contra_cache_.find(f);
        if (it != contra_cache_.end()) return it->second;
    }
    IntMat m = compute_contra(f);
    if (m.rows() != value(f.h).gens || m.cols() != value(f.k).gens)
        throw Error(Error::Shape, name_ + ": contravariant matrix shape mismatch");
    std::lock_guard<std::mutex> lk(mu_);
    return contra_cache_.emplace(f, std::move(m)).first->second;
}

const IntVec& GreenFunctor::unit(const Elems& h) const {
    {
        std::lock_guard<std::mutex> lk(gmu_);
        auto it = unit_cache_.find(h);
        if (it != unit_cache_.end()) return it->second;
    }
    IntVec u = compute_unit(h);
    if ((int)u.size() != value(h).gens) throw Error(Error::Shape, name() + ": unit shape mismatch");
    std::lock_guard<std::mutex> lk(gmu_);
    return unit_cache_.emplace(h, std::move(u)).first->second;
}

const IntMat& GreenFunctor::product_table(const Elems& h, int i) const {
    auto key = std::make_pair(h, i);
    {
        std::lock_guard<std::mutex> lk(gmu_);
        auto it = table_cache_.find(key);
        if (it != table_cache_.end()) return it->second;
    }
    int n = value(h).gens;
    IntMat t(n, n);
    for (int j = 0; j < n; ++j) t.set_col(j, compute_product(h, i, j));
    std::lock_guard<std::mutex> lk(gmu_);
    return table_cache_.emplace(key, std::move(t)).first->second;
}

IntVec GreenFunctor::multiply(const Elems& h, const IntVec& u, const IntVec& v) const {
    int n = value(h).gens;
    if ((int)u.size() != n || (int)v.size() != n) throw Error(Error::Shape, "product operand shape");
    IntVec out(n, 0);
    for (int i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        IntVec col = product_table(h, i).apply(v);
        for (int r = 0; r < n; ++r) out[r] += u[i] * col[r];
    }
    return out;
}

SiteValue evaluate_site(const MackeyFunctor& m, const GSet& s) {
    SiteValue sv;
    std::vector<AbGroup> parts;
    int off = 0;
    for (size_t o = 0; o < s.orbits().size(); ++o) {
        const AbGroup& v = m.value(s.stabilizer((int)o));
        sv.offset.push_back(off);
        sv.dim.push_back(v.gens);
        off += v.gens;
        parts.push_back(v);
    }
    sv.ab = AbGroup::direct_sum(parts);
    return sv;
}

IntMat assemble_cov(const MackeyFunctor& m, const GMap& f) {
    SiteValue src = evaluate_site(m, *f.src);
    SiteValue dst = evaluate_site(m, *f.dst);
    IntMat out(dst.ab.gens, src.ab.gens);
    for (size_t o = 0; o < f.src->orbits().size(); ++o) {
        CosetMapData cd = f.coset_data((int)o);
        const IntMat& blk = m.cov(cd);
        int dorb = f.dst->point_orbit(f.base_image[o]);
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j)
                out.at(dst.offset[dorb] + i, src.offset[o] + j) += blk.at(i, j);
    }
    return out;
}

IntMat assemble_contra(const MackeyFunctor& m, const GMap& f) {
    SiteValue src = evaluate_site(m, *f.src);
    SiteValue dst = evaluate_site(m, *f.dst);
    IntMat out(src.ab.gens, dst.ab.gens);
    for (size_t o = 0; o < f.src->orbits().size(); ++o) {
        CosetMapData cd = f.coset_data((int)o);
        const IntMat& blk = m.contra(cd);
        int dorb = f.dst->point_orbit(f.base_image[o]);
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j)
                out.at(src.offset[o] + i, dst.offset[dorb] + j) += blk.at(i, j);
    }
    return out;
}

std::vector<GMap> transitive_maps(const GSet& a, const GSet& b) { return all_gmaps(a, b); }

ValidationReport validate_mackey(const MackeyFunctor& m, ValidationOptions opts) {
    const Group& g = m.group();
    const SubgroupData& sd = g.subgroups();
    int nc = (int)sd.classes.size();
    ValidationReport rep;

    // transitive standard sites
    std::vector<GSet> site;
    site.reserve(nc);
    for (int c = 0; c < nc; ++c) site.push_back(GSet::from_classes(g, {{c, 1}}));

    // inner conjugations act trivially
    for (int c = 0; c < nc; ++c) {
        const Elems& r = sd.rep_elems(c);
        const AbGroup& v = m.value(r);
        IntMat id = IntMat::identity(v.gens);
        for (int x : r) {
            CosetMapData cd{r, r, x};
            const IntMat& mat = m.cov(cd);
            if (!maps_equal_mod(mat, id, v)) rep.conjugations.push_back({c, x, mat});
        }
    }

    // (M1) on every pullback square of maps between transitive sites
    struct Square {
        GMap alpha, beta;
    };
    std::vector<Square> squares;
    for (int t = 0; t < nc; ++t) {
        std::vector<GMap> in;
        for (int c = 0; c < nc; ++c) {
            auto maps = all_gmaps(site[c], site[t]);
            in.insert(in.end(), maps.begin(), maps.end());
        }
        for (const auto& a : in)
            for (const auto& b : in) squares.push_back({a, b});
    }
    std::vector<std::unique_ptr<M1Failure>> fails(squares.size());
    parallel_for(
        (long)squares.size(),
        [&](long i) {
            const GMap& alpha = squares[i].alpha;
            const GMap& beta = squares[i].beta;
            PullbackResult pb = pullback(alpha, beta);
            IntMat lhs = m.contra(alpha.coset_data(0)) * m.cov(beta.coset_data(0));
            IntMat rhs = assemble_cov(m, pb.to_src_of_f) * assemble_contra(m, pb.to_src_of_g);
            if (!maps_equal_mod(lhs, rhs, m.value(alpha.src->stabilizer(0)))) {
                auto f = std::make_unique<M1Failure>();
                f->alpha = alpha.coset_data(0);
                f->beta = beta.coset_data(0);
                f->lhs = lhs;
                f->rhs = rhs;
                fails[i] = std::move(f);
            }
        },
        opts.mode);
    for (auto& f : fails)
        if (f) rep.squares.push_back(std::move(*f));

    // (M2) on all two-orbit unions
    if (opts.check_m2) {
        for (int c1 = 0; c1 < nc; ++c1)
            for (int c2 = 0; c2 < nc; ++c2) {
                GSet u = GSet::from_classes(g, {{c1, 1}, {c2, 1}});
                GMap e1 = GMap::orbit_inclusion(site[c1], u, 0);
                GMap e2 = GMap::orbit_inclusion(site[c2], u, 1);
                SiteValue sv = evaluate_site(m, u);
                IntMat covs = IntMat::hstack(assemble_cov(m, e1), assemble_cov(m, e2));
                IntMat contras = IntMat::vstack(assemble_contra(m, e1), assemble_contra(m, e2));
                bool ok = maps_equal_mod(contras * covs,
                                         IntMat::identity(sv.ab.gens), sv.ab) &&
                          maps_equal_mod(covs * contras, IntMat::identity(sv.ab.gens), sv.ab);
                if (!ok) rep.m2_failures.push_back({c1, c2});
            }
    }
    return rep;
}

const IntMat& MackeyHom::matrix(const Elems& h) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(h);
        if (it != cache_.end()) return it->second;
    }
    IntMat m = compute_matrix(h);
    if (m.rows() != target().value(h).gens || m.cols() != source().value(h).gens)
        throw Error(Error::Shape, name_ + ": hom matrix shape mismatch");
    std::lock_guard<std::mutex> lk(mu_);
    return cache_.emplace(h, std::move(m)).first->second;
}

void validate_hom(const MackeyHom& t) {
    const Group& g = t.source().group();
    if (&g != &t.target().group()) throw Error(Error::Input, "hom across groups");
    const SubgroupData& sd = g.subgroups();
    int nc = (int)sd.classes.size();
    std::vector<GSet> site;
    for (int c = 0; c < nc; ++c) site.push_back(GSet::from_classes(g, {{c, 1}}));
    for (int a = 0; a < nc; ++a) {
        // relations must map into relations
        const AbGroup& vs = t.source().value(sd.rep_elems(a));
        const AbGroup& vt = t.target().value(sd.rep_elems(a));
        const IntMat& th = t.matrix(sd.rep_elems(a));
        for (int j = 0; j < vs.rels.cols(); ++j)
            if (!vt.element_is_zero(th.apply(vs.rels.col(j))))
                throw Error(Error::Input, t.name() + ": relations not preserved");
        for (int b = 0; b < nc; ++b) {
            for (const auto& f : all_gmaps(site[a], site[b])) {
                CosetMapData cd = f.coset_data(0);
                const IntMat& th_a = t.matrix(cd.h);
                const IntMat& th_b = t.matrix(cd.k);
                if (!maps_equal_mod(th_b * t.source().cov(cd), t.target().cov(cd) * th_a,
                                    t.target().value(cd.k)))
                    throw Error(Error::Input, t.name() + ": does not commute with induction");
                if (!maps_equal_mod(th_a * t.source().contra(cd), t.target().contra(cd) * th_b,
                                    t.target().value(cd.h)))
                    throw Error(Error::Input, t.name() + ": does not commute with restriction");
            }
        }
    }
}

namespace {

// coordinates of v in basis b modulo the relation lattice
std::optional<IntVec> solve_with_rels(const IntMat& b, const IntMat& rels, const IntVec& v) {
    IntMat big = IntMat::hstack(b, rels);
    auto sol = solve_integer(big, v);
    if (!sol) return std::nullopt;
    IntVec out(b.cols());
    for (int i = 0; i < b.cols(); ++i) out[i] = (*sol)[i];
    return out;
}

// kernel of the induced map on presented values, with inherited structure maps
class KernelFunctor : public MackeyFunctor {
  public:
    KernelFunctor(HomPtr theta)
        : MackeyFunctor(theta->source().group(), "ker(" + theta->name() + ")",
                        theta->source().pre_only()),
          th_(std::move(theta)) {}

    const IntMat& basis(const Elems& h) const {
        std::lock_guard<std::mutex> lk(bmu_);
        auto it = basis_.find(h);
        if (it != basis_.end()) return it->second;
        IntMat b = kernel_into(th_->matrix(h), th_->target().value(h));
        return basis_.emplace(h, std::move(b)).first->second;
    }

  protected:
    AbGroup compute_value(const Elems& h) const override {
        const IntMat& b = basis(h);
        const AbGroup& vs = th_->source().value(h);
        std::vector<IntVec> rel_cols;
        for (int j = 0; j < vs.rels.cols(); ++j) {
            auto c = lattice_coords(b, vs.rels.col(j));
            if (!c) throw Error(Error::Internal, "relations escape the kernel lattice");
            rel_cols.push_back(*c);
        }
        return AbGroup(b.cols(), rel_cols.empty() ? IntMat(b.cols(), 0) : IntMat::from_cols(rel_cols));
    }
    IntMat compute_cov(const CosetMapData& f) const override { return induced(f, true); }
    IntMat compute_contra(const CosetMapData& f) const override { return induced(f, false); }

  private:
    IntMat induced(const CosetMapData& f, bool covariant) const {
        const Elems& from = covariant ? f.h : f.k;
        const Elems& to = covariant ? f.k : f.h;
        const IntMat& parent = covariant ? th_->source().cov(f) : th_->source().contra(f);
        const IntMat& bf = basis(from);
        const IntMat& bt = basis(to);
        std::vector<IntVec> cols;
        for (int j = 0; j < bf.cols(); ++j) {
            IntVec img = parent.apply(bf.col(j));
            auto c = solve_with_rels(bt, th_->source().value(to).rels, img);
            if (!c) throw Error(Error::Internal, "kernel not preserved by structure map");
            cols.push_back(*c);
        }
        return cols.empty() ? IntMat(bt.cols(), 0) : IntMat::from_cols(cols);
    }

    HomPtr th_;
    mutable std::mutex bmu_;
    mutable std::map<Elems, IntMat> basis_;
};

// image (or any intermediate lattice containing the relations) with induced maps
class ImageFunctor : public MackeyFunctor {
  public:
    ImageFunctor(HomPtr theta)
        : MackeyFunctor(theta->target().group(), "im(" + theta->name() + ")",
                        theta->target().pre_only()),
          th_(std::move(theta)) {}

    const IntMat& basis(const Elems& h) const {
        std::lock_guard<std::mutex> lk(bmu_);
        auto it = basis_.find(h);
        if (it != basis_.end()) return it->second;
        IntMat b = hnf_cols(IntMat::hstack(th_->matrix(h), th_->target().value(h).rels));
        return basis_.emplace(h, std::move(b)).first->second;
    }

    // express a vector of the ambient value in image coordinates
    IntVec coords(const Elems& h, const IntVec& v) const {
        auto c = lattice_coords(basis(h), v);
        if (!c) throw Error(Error::Internal, "vector is not in the image lattice");
        return *c;
    }
    IntVec embed(const Elems& h, const IntVec& v) const { return basis(h).apply(v); }

  protected:
    AbGroup compute_value(const Elems& h) const override {
        const IntMat& b = basis(h);
        const AbGroup& vt = th_->target().value(h);
        std::vector<IntVec> rel_cols;
        for (int j = 0; j < vt.rels.cols(); ++j) {
            auto c = lattice_coords(b, vt.rels.col(j));
            if (!c) throw Error(Error::Internal, "relations escape the image lattice");
            rel_cols.push_back(*c);
        }
        return AbGroup(b.cols(), rel_cols.empty() ? IntMat(b.cols(), 0) : IntMat::from_cols(rel_cols));
    }
    IntMat compute_cov(const CosetMapData& f) const override { return induced(f, true); }
    IntMat compute_contra(const CosetMapData& f) const override { return induced(f, false); }

  private:
    IntMat induced(const CosetMapData& f, bool covariant) const {
        const Elems& from = covariant ? f.h : f.k;
        const Elems& to = covariant ? f.k : f.h;
        const IntMat& parent = covariant ? th_->target().cov(f) : th_->target().contra(f);
        const IntMat& bf = basis(from);
        const IntMat& bt = basis(to);
        std::vector<IntVec> cols;
        for (int j = 0; j < bf.cols(); ++j) {
            IntVec img = parent.apply(bf.col(j));
            auto c = solve_with_rels(bt, th_->target().value(to).rels, img);
            if (!c) throw Error(Error::Internal, "image not preserved by structure map");
            cols.push_back(*c);
        }
        return cols.empty() ? IntMat(bt.cols(), 0) : IntMat::from_cols(cols);
    }

    HomPtr th_;
    mutable std::mutex bmu_;
    mutable std::map<Elems, IntMat> basis_;
};

class CokernelFunctor : public MackeyFunctor {
  public:
    CokernelFunctor(HomPtr theta)
        : MackeyFunctor(theta->target().group(), "coker(" + theta->name() + ")",
                        theta->target().pre_only()),
          th_(std::move(theta)) {}

  protected:
    AbGroup compute_value(const Elems& h) const override {
        const AbGroup& vt = th_->target().value(h);
        return AbGroup(vt.gens, IntMat::hstack(vt.rels, th_->matrix(h)));
    }
    IntMat compute_cov(const CosetMapData& f) const override { return th_->target().cov(f); }
    IntMat compute_contra(const CosetMapData& f) const override { return th_->target().contra(f); }

  private:
    HomPtr th_;
};

class ImageGreenFunctor : public GreenFunctor {
  public:
    ImageGreenFunctor(HomPtr theta, GreenPtr target)
        : GreenFunctor(theta->target().group(), "im(" + theta->name() + ")", false),
          inner_(std::make_shared<ImageFunctor>(theta)),
          target_(std::move(target)) {}

    const ImageFunctor& inner() const { return *inner_; }

  protected:
    AbGroup compute_value(const Elems& h) const override { return inner_->value(h); }
    IntMat compute_cov(const CosetMapData& f) const override { return inner_->cov(f); }
    IntMat compute_contra(const CosetMapData& f) const override { return inner_->contra(f); }
    IntVec compute_unit(const Elems& h) const override {
        return inner_->coords(h, target_->unit(h));
    }
    IntVec compute_product(const Elems& h, int i, int j) const override {
        IntVec a = inner_->embed(h, unit_vec(value(h).gens, i));
        IntVec b = inner_->embed(h, unit_vec(value(h).gens, j));
        return inner_->coords(h, target_->multiply(h, a, b));
    }

  private:
    static IntVec unit_vec(int n, int i) {
        IntVec v(n, 0);
        v[i] = 1;
        return v;
    }
    std::shared_ptr<ImageFunctor> inner_;
    GreenPtr target_;
};

}  // namespace

HomKernelImage hom_kernel_image(const HomPtr& theta) {
    validate_hom(*theta);
    HomKernelImage out;
    out.kernel = std::make_shared<KernelFunctor>(theta);
    out.image = std::make_shared<ImageFunctor>(theta);
    out.cokernel = std::make_shared<CokernelFunctor>(theta);
    return out;
}

GreenPtr image_green(const HomPtr& theta, GreenPtr target) {
    validate_hom(*theta);
    if (&theta->target() != target.get()) throw Error(Error::Input, "image_green target mismatch");
    return std::make_shared<ImageGreenFunctor>(theta, std::move(target));
}

HomPtr scalar_hom(MackeyPtr m, const Int& k) {
    MackeyPtr src = m;
    return std::make_shared<FnHom>(src, src, to_string(k) + "*id", [src, k](const Elems& h) {
        return IntMat::identity(src->value(h).gens).scaled(k);
    });
}

}  // namespace burnside
