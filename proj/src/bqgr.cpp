#include "burnside/bqgr.hpp"

namespace burnside {

namespace {

// action operators of the A(G/K)-basis elements on M(G/K)
std::vector<IntMat> basis_operators(const MackeyFunctor& m, const GSet& site, const SiteBasis& bs) {
    std::vector<IntMat> ops;
    for (int b = 0; b < bs.size(); ++b) {
        IntVec e(bs.size(), 0);
        e[b] = 1;
        ops.push_back(act_operator(m, site, bs, e));
    }
    return ops;
}

}  // namespace

IntMat ideal_at_class(const MackeyFunctor& m, const Elems& h) {
    if (m.pre_only())
        throw Error(Error::Input, "I_M is defined for Mackey functors only (pre-functor refused)");
    const Group& g = m.group();
    const SubgroupData& sd = g.subgroups();
    int nc = (int)sd.classes.size();
    GSet s = GSet::from_classes(g, {{sd.class_of(h), 1}});
    SiteBasis bs = site_basis(s);
    int na = bs.size();

    std::vector<GSet> site;
    std::vector<SiteBasis> sbs;
    std::vector<std::vector<IntMat>> ops;
    std::vector<SiteValue> vals;
    for (int c = 0; c < nc; ++c) {
        site.push_back(GSet::from_classes(g, {{c, 1}}));
        sbs.push_back(site_basis(site[c]));
        ops.push_back(basis_operators(m, site[c], sbs[c]));
        vals.push_back(evaluate_site(m, site[c]));
    }

    // rows of the constraint matrix plus block-diagonal relation columns
    std::vector<IntMat> constraint_rows;
    std::vector<IntMat> rel_blocks;
    auto add_constraints = [&](const IntMat& transfer, int c) {
        // transfer: A(s) -> A(G/K_c); require act(transfer(a)) = 0 on M(G/K_c)
        int nk = vals[c].ab.gens;
        if (nk == 0) return;
        for (int gen = 0; gen < nk; ++gen) {
            IntMat rows(nk, na);
            for (int j = 0; j < na; ++j) {
                IntVec col(nk, 0);
                for (int b = 0; b < (int)ops[c].size(); ++b) {
                    const Int& w = transfer.at(b, j);
                    if (w == 0) continue;
                    for (int r = 0; r < nk; ++r) col[r] += w * ops[c][b].at(r, gen);
                }
                rows.set_col(j, col);
            }
            constraint_rows.push_back(rows);
            rel_blocks.push_back(vals[c].ab.rels);
        }
    };

    for (int c = 0; c < nc; ++c) {
        for (const auto& f : all_gmaps(s, site[c])) add_constraints(induce_matrix(f), c);
        for (const auto& f : all_gmaps(site[c], s)) add_constraints(restrict_matrix(f), c);
    }

    if (constraint_rows.empty()) return hnf_cols(IntMat::identity(na));
    IntMat big;
    {
        IntMat c_stack = constraint_rows[0];
        for (size_t i = 1; i < constraint_rows.size(); ++i)
            c_stack = IntMat::vstack(c_stack, constraint_rows[i]);
        IntMat r_diag = IntMat::block_diag(rel_blocks);
        big = IntMat::hstack(c_stack, r_diag.scaled(-1));
    }
    IntMat k = kernel_cols(big);
    IntMat proj(na, k.cols());
    for (int j = 0; j < k.cols(); ++j)
        for (int i = 0; i < na; ++i) proj.at(i, j) = k.at(i, j);
    return hnf_cols(proj);
}

IntMat ideal_at_site(const MackeyFunctor& m, const GSet& s) {
    const SubgroupData& sd = m.group().subgroups();
    SiteBasis bs = site_basis(s);
    std::vector<IntVec> cols;
    int offset = 0;
    for (size_t o = 0; o < s.orbits().size(); ++o) {
        IntMat li = ideal_at_class(m, sd.rep_elems(s.orbits()[o].cls));
        for (int j = 0; j < li.cols(); ++j) {
            IntVec v(bs.size(), 0);
            for (int i = 0; i < li.rows(); ++i) v[offset + i] = li.at(i, j);
            cols.push_back(v);
        }
        offset += li.rows();
    }
    return cols.empty() ? IntMat(bs.size(), 0) : hnf_cols(IntMat::from_cols(cols));
}

namespace {

class BqgrGreen : public GreenFunctor {
  public:
    explicit BqgrGreen(MackeyPtr m)
        : GreenFunctor(m->group(), "bqgr(" + m->name() + ")", false),
          m_(std::move(m)),
          bur_(burnside_functor(m_->group())) {}

    const IntMat& ideal(const Elems& h) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = ideal_.find(h);
        if (it != ideal_.end()) return it->second;
        return ideal_.emplace(h, ideal_at_class(*m_, h)).first->second;
    }

  protected:
    AbGroup compute_value(const Elems& h) const override {
        return AbGroup(bur_->value(h).gens, ideal(h));
    }
    IntMat compute_cov(const CosetMapData& f) const override { return bur_->cov(f); }
    IntMat compute_contra(const CosetMapData& f) const override { return bur_->contra(f); }
    IntVec compute_unit(const Elems& h) const override { return bur_->unit(h); }
    IntVec compute_product(const Elems& h, int i, int j) const override {
        return bur_->multiply(h, unit_vec(bur_->value(h).gens, i), unit_vec(bur_->value(h).gens, j));
    }

  private:
    static IntVec unit_vec(int n, int i) {
        IntVec v(n, 0);
        v[i] = 1;
        return v;
    }
    MackeyPtr m_;
    GreenPtr bur_;
    mutable std::mutex mu_;
    mutable std::map<Elems, IntMat> ideal_;
};

}  // namespace

GreenPtr bqgr(MackeyPtr m) {
    if (m->pre_only())
        throw Error(Error::Input, "I_M is defined for Mackey functors only (pre-functor refused)");
    return std::make_shared<BqgrGreen>(std::move(m));
}

HomPtr unit_map_hom(GreenPtr bur, GreenPtr g) {
    if (&bur->group() != &g->group()) throw Error(Error::Input, "unit map across groups");
    const Group* grp = &g->group();
    GreenPtr gg = g;
    return std::make_shared<FnHom>(bur, g, "a.1(" + g->name() + ")", [grp, gg](const Elems& h) {
        GSet s = GSet::from_classes(*grp, {{grp->subgroups().class_of(h), 1}});
        SiteBasis bs = site_basis(s);
        int n = gg->value(h).gens;
        IntMat out(n, bs.size());
        for (int j = 0; j < bs.size(); ++j) {
            IntVec e(bs.size(), 0);
            e[j] = 1;
            out.set_col(j, act_on(*gg, s, bs, e, gg->unit(h)));
        }
        return out;
    });
}

GreenPtr image_of_unit_map(GreenPtr g) {
    GreenPtr bur = burnside_functor(g->group());
    HomPtr iota = unit_map_hom(bur, g);
    return image_green(iota, g);
}

}  // namespace burnside
