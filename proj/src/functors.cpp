#include "burnside/functors.hpp"

#include <algorithm>
#include <numeric>

namespace burnside {

namespace {

GSet transitive_site(const Group& g, const Elems& rep) {
    const SubgroupData& sd = g.subgroups();
    int cls = sd.class_of(rep);
    if (sd.rep_elems(cls) != rep)
        throw Error(Error::Internal, "coset datum subgroup is not a class representative");
    return GSet::from_classes(g, {{cls, 1}});
}

GMap coset_gmap(const GSet& src, const GSet& dst, int g_elem) {
    return GMap(src, dst, {dst.act(g_elem, dst.base(0))});
}

class BurnsideGreen : public GreenFunctor {
  public:
    explicit BurnsideGreen(const Group& g) : GreenFunctor(g, "burnside", false) {}

  protected:
    AbGroup compute_value(const Elems& h) const override {
        return AbGroup::free_group((int)group().subgroups().local_classes(h).reps.size());
    }
    IntMat compute_cov(const CosetMapData& f) const override {
        GSet src = transitive_site(group(), f.h);
        GSet dst = transitive_site(group(), f.k);
        return induce_matrix(coset_gmap(src, dst, f.g));
    }
    IntMat compute_contra(const CosetMapData& f) const override {
        GSet src = transitive_site(group(), f.h);
        GSet dst = transitive_site(group(), f.k);
        return restrict_matrix(coset_gmap(src, dst, f.g));
    }
    IntVec compute_unit(const Elems& h) const override {
        return unit_element(transitive_site(group(), h));
    }
    IntVec compute_product(const Elems& h, int i, int j) const override {
        GSet s = transitive_site(group(), h);
        SiteBasis bs = site_basis(s);
        IntVec a(bs.size(), 0), b(bs.size(), 0);
        a[i] = 1;
        b[j] = 1;
        return multiply_elements(s, a, b);
    }
};

int fixed_cosets_in(const Group& g, const Elems& within, int y, const Elems& j) {
    int count = 0;
    for (int x : left_coset_reps(g, within, j)) {
        int xi = g.inv(x);
        int c = g.mul(g.mul(xi, y), x);
        if (std::binary_search(j.begin(), j.end(), c)) ++count;
    }
    return count;
}

class ClassFunctionGreen : public GreenFunctor {
  public:
    explicit ClassFunctionGreen(const Group& g) : GreenFunctor(g, "classfn", false) {}

    const std::vector<Elems>& classes(const Elems& h) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cls_.find(h);
        if (it != cls_.end()) return it->second;
        return cls_.emplace(h, element_classes(group(), h)).first->second;
    }

    int class_of(const Elems& h, int x) const {
        const auto& cs = classes(h);
        for (size_t i = 0; i < cs.size(); ++i)
            if (std::binary_search(cs[i].begin(), cs[i].end(), x)) return (int)i;
        throw Error(Error::Internal, "element not in subgroup");
    }

  protected:
    AbGroup compute_value(const Elems& h) const override {
        return AbGroup::free_group((int)classes(h).size());
    }
    IntMat compute_cov(const CosetMapData& f) const override {
        const Group& g = group();
        // induction along G/H -> G/K with f(eH) = gK: Ind_L^K(chi o c_g), L = g^-1 H g
        Elems l = conjugate_subgroup(g, f.h, g.inv(f.g));
        const auto& kc = classes(f.k);
        IntMat out((int)kc.size(), (int)classes(f.h).size());
        for (size_t r = 0; r < kc.size(); ++r) {
            int y = kc[r][0];
            for (int x : left_coset_reps(g, f.k, l)) {
                int z = g.mul(g.mul(g.inv(x), y), x);
                if (!std::binary_search(l.begin(), l.end(), z)) continue;
                int hz = g.conj(f.g, z);  // g z g^-1 in H
                out.at((int)r, class_of(f.h, hz)) += 1;
            }
        }
        return out;
    }
    IntMat compute_contra(const CosetMapData& f) const override {
        const Group& g = group();
        const auto& hc = classes(f.h);
        IntMat out((int)hc.size(), (int)classes(f.k).size());
        for (size_t r = 0; r < hc.size(); ++r) {
            int a = hc[r][0];
            int z = g.mul(g.mul(g.inv(f.g), a), f.g);  // g^-1 a g in K
            out.at((int)r, class_of(f.k, z)) = 1;
        }
        return out;
    }
    IntVec compute_unit(const Elems& h) const override {
        return IntVec(classes(h).size(), 1);
    }
    IntVec compute_product(const Elems& h, int i, int j) const override {
        IntVec out(classes(h).size(), 0);
        if (i == j) out[i] = 1;
        return out;
    }

  private:
    mutable std::mutex mu_;
    mutable std::map<Elems, std::vector<Elems>> cls_;
};

class SignedPre : public MackeyFunctor {
  public:
    SignedPre(const Group& g, std::vector<int> omega, bool nontrivial)
        : MackeyFunctor(g, "signed", nontrivial), omega_(std::move(omega)) {}

  protected:
    AbGroup compute_value(const Elems&) const override { return AbGroup::free_group(1); }
    IntMat compute_cov(const CosetMapData& f) const override {
        IntMat m(1, 1);
        m.at(0, 0) = omega_[f.g];
        return m;
    }
    IntMat compute_contra(const CosetMapData& f) const override {
        IntMat m(1, 1);
        m.at(0, 0) = Int(omega_[f.g]) * (int)(f.k.size() / f.h.size());
        return m;
    }

  private:
    std::vector<int> omega_;
};

class ZeroFunctor : public MackeyFunctor {
  public:
    explicit ZeroFunctor(const Group& g) : MackeyFunctor(g, "zero", false) {}

  protected:
    AbGroup compute_value(const Elems&) const override { return AbGroup::free_group(0); }
    IntMat compute_cov(const CosetMapData&) const override { return IntMat(0, 0); }
    IntMat compute_contra(const CosetMapData&) const override { return IntMat(0, 0); }
};

class DoubleGreen : public GreenFunctor {
  public:
    explicit DoubleGreen(GreenPtr inner)
        : GreenFunctor(inner->group(), inner->name() + "+" + inner->name(), false),
          inner_(std::move(inner)) {}

  protected:
    AbGroup compute_value(const Elems& h) const override {
        return AbGroup::direct_sum({inner_->value(h), inner_->value(h)});
    }
    IntMat compute_cov(const CosetMapData& f) const override {
        return IntMat::block_diag({inner_->cov(f), inner_->cov(f)});
    }
    IntMat compute_contra(const CosetMapData& f) const override {
        return IntMat::block_diag({inner_->contra(f), inner_->contra(f)});
    }
    IntVec compute_unit(const Elems& h) const override {
        IntVec u = inner_->unit(h);
        IntVec out = u;
        out.insert(out.end(), u.begin(), u.end());
        return out;
    }
    IntVec compute_product(const Elems& h, int i, int j) const override {
        int n = inner_->value(h).gens;
        IntVec out(2 * n, 0);
        if ((i < n) != (j < n)) return out;  // cross terms vanish in the product ring
        int off = i < n ? 0 : n;
        IntVec a(n, 0), b(n, 0);
        a[i - off] = 1;
        b[j - off] = 1;
        IntVec p = inner_->multiply(h, a, b);
        for (int r = 0; r < n; ++r) out[off + r] = p[r];
        return out;
    }

  private:
    GreenPtr inner_;
};

}  // namespace

GreenPtr burnside_functor(const Group& g) { return std::make_shared<BurnsideGreen>(g); }

GreenPtr class_function_green(const Group& g) { return std::make_shared<ClassFunctionGreen>(g); }

std::vector<Elems> element_classes(const Group& g, const Elems& h) {
    std::vector<Elems> out;
    std::vector<char> seen(g.order(), 0);
    for (int x : h) {
        if (seen[x]) continue;
        Elems cls;
        for (int t : h) {
            int c = g.conj(t, x);
            if (!seen[c]) {
                seen[c] = 1;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(cls);
    }
    std::sort(out.begin(), out.end());
    return out;
}

HomPtr char_map_hom(GreenPtr bur, GreenPtr cf) {
    if (&bur->group() != &cf->group()) throw Error(Error::Input, "char map across groups");
    const Group* g = &bur->group();
    auto cf_raw = std::dynamic_pointer_cast<const ClassFunctionGreen>(cf);
    if (!cf_raw) throw Error(Error::Input, "char map target must be the class-function ring");
    return std::make_shared<FnHom>(
        bur, cf, "charmap", [g, cf_raw](const Elems& h) {
            const SubgroupData& sd = g->subgroups();
            const auto& lc = sd.local_classes(h);
            const auto& hc = cf_raw->classes(h);
            IntMat out((int)hc.size(), (int)lc.reps.size());
            for (size_t c = 0; c < lc.reps.size(); ++c)
                for (size_t r = 0; r < hc.size(); ++r)
                    out.at((int)r, (int)c) = fixed_cosets_in(*g, h, hc[r][0], lc.reps[c]);
            return out;
        });
}

GreenPtr perm_char_green_ring(const Group& g) {
    GreenPtr bur = burnside_functor(g);
    GreenPtr cf = class_function_green(g);
    HomPtr theta = char_map_hom(bur, cf);
    return image_green(theta, cf);
}

std::vector<int> omega_from_kernel(const Group& g, const Elems& kernel) {
    if (!is_subgroup(g, kernel) || !is_normal_in(g, kernel, [&] {
            Elems all(g.order());
            std::iota(all.begin(), all.end(), 0);
            return all;
        }()))
        throw Error(Error::Input, "omega kernel must be a normal subgroup");
    if (g.order() % (int)kernel.size() != 0 || g.order() / (int)kernel.size() > 2)
        throw Error(Error::Input, "omega kernel must have index 1 or 2");
    std::vector<int> omega(g.order(), -1);
    for (int x : kernel) omega[x] = 1;
    return omega;
}

MackeyPtr signed_pre_functor(const Group& g, const std::vector<int>& omega) {
    if ((int)omega.size() != g.order()) throw Error(Error::Shape, "omega must assign every element");
    for (int a = 0; a < g.order(); ++a) {
        if (omega[a] != 1 && omega[a] != -1) throw Error(Error::Input, "omega values must be +-1");
        for (int b = 0; b < g.order(); ++b)
            if (omega[g.mul(a, b)] != omega[a] * omega[b])
                throw Error(Error::Input, "omega is not a homomorphism");
    }
    bool nontrivial = false;
    for (int v : omega)
        if (v == -1) nontrivial = true;
    return std::make_shared<SignedPre>(g, omega, nontrivial);
}

MackeyPtr zero_functor(const Group& g) { return std::make_shared<ZeroFunctor>(g); }

GreenPtr double_green(GreenPtr g) { return std::make_shared<DoubleGreen>(std::move(g)); }

}  // namespace burnside
