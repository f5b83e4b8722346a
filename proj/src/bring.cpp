#include "burnside/bring.hpp"

namespace burnside {

SiteBasis site_basis(const GSet& s) {
    const SubgroupData& sd = s.group()->subgroups();
    SiteBasis bs;
    for (size_t o = 0; o < s.orbits().size(); ++o) {
        bs.orbit_offset.push_back((int)bs.elems.size());
        const auto& lc = sd.local_classes(s.stabilizer((int)o));
        for (size_t l = 0; l < lc.reps.size(); ++l)
            bs.elems.push_back({(int)o, (int)l, lc.reps[l]});
    }
    return bs;
}

int pair_index(const GSet& s, const SiteBasis& bs, int point, const Elems& k) {
    const Group& g = *s.group();
    const SubgroupData& sd = g.subgroups();
    int o = s.point_orbit(point);
    int r = s.point_rep(point);
    // (point, K) = r . (base, r^-1 K r)
    Elems kk = conjugate_subgroup(g, k, g.inv(r));
    const auto& lc = sd.local_classes(s.stabilizer(o));
    auto it = lc.index_by_subgroup.find(kk);
    if (it == lc.index_by_subgroup.end())
        throw Error(Error::Internal, "pair subgroup not inside the stabilizer");
    return bs.orbit_offset[o] + it->second;
}

BasisObject basis_object(const GSet& s, const SiteBasis& bs, int index) {
    const Group& g = *s.group();
    const SubgroupData& sd = g.subgroups();
    const SiteBasis::Elt& e = bs.elems[index];
    int cls = sd.class_of(e.k);
    const Elems& rep = sd.rep_elems(cls);
    BasisObject obj;
    obj.total = std::make_shared<GSet>(GSet::from_classes(g, {{cls, 1}}));
    // find minimal t with t * rep * t^-1 = K; then base eR maps to t^-1 . s0
    int t = -1;
    for (int x = 0; x < g.order() && t < 0; ++x)
        if (conjugate_subgroup(g, rep, x) == e.k) t = x;
    if (t < 0) throw Error(Error::Internal, "class representative not conjugate");
    int s0 = s.base(e.orbit);
    obj.to_site = GMap(*obj.total, s, {s.act(g.inv(t), s0)});
    return obj;
}

IntMat induce_matrix(const GMap& f) {
    const GSet& src = *f.src;
    const GSet& dst = *f.dst;
    SiteBasis bsrc = site_basis(src);
    SiteBasis bdst = site_basis(dst);
    IntMat out(bdst.size(), bsrc.size());
    for (int j = 0; j < bsrc.size(); ++j) {
        const auto& e = bsrc.elems[j];
        int q = f.base_image[e.orbit];
        out.at(pair_index(dst, bdst, q, e.k), j) += 1;
    }
    return out;
}

IntMat restrict_matrix(const GMap& f) {
    const GSet& src = *f.src;
    const GSet& dst = *f.dst;
    SiteBasis bsrc = site_basis(src);
    SiteBasis bdst = site_basis(dst);
    IntMat out(bsrc.size(), bdst.size());
    for (int j = 0; j < bdst.size(); ++j) {
        BasisObject obj = basis_object(dst, bdst, j);
        PullbackResult pb = pullback(f, obj.to_site);
        for (size_t o = 0; o < pb.total->orbits().size(); ++o) {
            int pt = pb.to_src_of_f.base_image[o];
            out.at(pair_index(src, bsrc, pt, pb.total->stabilizer((int)o)), j) += 1;
        }
    }
    return out;
}

IntVec multiply_elements(const GSet& s, const IntVec& a, const IntVec& b) {
    SiteBasis bs = site_basis(s);
    if ((int)a.size() != bs.size() || (int)b.size() != bs.size())
        throw Error(Error::Shape, "Burnside element has wrong length for the site");
    IntVec out(bs.size(), 0);
    for (int i = 0; i < bs.size(); ++i) {
        if (a[i] == 0) continue;
        BasisObject oi = basis_object(s, bs, i);
        for (int j = 0; j < bs.size(); ++j) {
            if (b[j] == 0) continue;
            BasisObject oj = basis_object(s, bs, j);
            PullbackResult pb = pullback(oi.to_site, oj.to_site);
            for (size_t o = 0; o < pb.total->orbits().size(); ++o) {
                int pt = oi.to_site.apply(pb.to_src_of_f.base_image[o]);
                out[pair_index(s, bs, pt, pb.total->stabilizer((int)o))] += a[i] * b[j];
            }
        }
    }
    return out;
}

IntVec unit_element(const GSet& s) {
    SiteBasis bs = site_basis(s);
    IntVec u(bs.size(), 0);
    for (size_t o = 0; o < s.orbits().size(); ++o) {
        const Elems& r = s.stabilizer((int)o);
        u[pair_index(s, bs, s.base((int)o), r)] = 1;
    }
    return u;
}

IntVec marks_vector(const Group& g, const IntVec& a) {
    const SubgroupData& sd = g.subgroups();
    GSet pt = GSet::point(g);
    SiteBasis bs = site_basis(pt);
    if ((int)a.size() != bs.size()) throw Error(Error::Shape, "marks input must live at the point");
    IntVec out(sd.classes.size(), 0);
    for (size_t c = 0; c < sd.classes.size(); ++c)
        for (int j = 0; j < bs.size(); ++j)
            if (a[j] != 0)
                out[c] += a[j] * fixed_coset_count(g, sd.rep_elems((int)c), bs.elems[j].k);
    return out;
}

IntMat act_operator(const MackeyFunctor& m, const GSet& s, const SiteBasis& bs, const IntVec& a) {
    SiteValue sv = evaluate_site(m, s);
    IntMat out(sv.ab.gens, sv.ab.gens);
    for (int i = 0; i < bs.size(); ++i) {
        if (a[i] == 0) continue;
        BasisObject obj = basis_object(s, bs, i);
        IntMat op = assemble_cov(m, obj.to_site) * assemble_contra(m, obj.to_site);
        out = out + op.scaled(a[i]);
    }
    return out;
}

IntVec act_on(const MackeyFunctor& m, const GSet& s, const SiteBasis& bs, const IntVec& a,
              const IntVec& x) {
    return act_operator(m, s, bs, a).apply(x);
}

}  // namespace burnside
