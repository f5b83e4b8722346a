#include "burnside/amitsur.hpp"

#include "burnside/caps.hpp"

#include <algorithm>

namespace burnside {

namespace {

// Am_r materialized over the standard forms of X and Y. Point index is the
// mixed-radix word x_0 x_1 ... x_{r-1} y with y fastest.
struct Tower {
    const GSet* x;
    const GSet* y;
    std::vector<Decomposition> level;  // 0..N
    std::vector<long> size;

    long face_raw(int r, int i, long p) const {
        // drop coordinate i of x_0 .. x_{r-1}
        long ny = y->npoints();
        long nx = x->npoints();
        std::vector<long> coord(r);
        long rest = p;
        long yy = rest % ny;
        rest /= ny;
        for (int j = r - 1; j >= 0; --j) {
            coord[j] = rest % nx;
            rest /= nx;
        }
        long q = 0;
        for (int j = 0; j < r; ++j)
            if (j != i) q = q * nx + coord[j];
        return q * ny + yy;
    }
};

Tower build_tower(const GSet& x, const GSet& y, int degrees) {
    if (degrees > caps().amitsur_degree)
        throw Error(Error::Cap, "degree " + std::to_string(degrees) + " exceeds cap " +
                                    std::to_string(caps().amitsur_degree));
    const Group& g = *x.group();
    Tower t;
    t.x = &x;
    t.y = &y;
    long n = y.npoints();
    for (int r = 0; r <= degrees; ++r) {
        t.size.push_back(n);
        if (n > caps().point_count) throw Error(Error::Cap, "Amitsur point count exceeds cap");
        RawGSet raw;
        raw.g = &g;
        raw.n = (int)n;
        raw.action.resize((size_t)g.order() * n);
        long ny = y.npoints();
        long nx = std::max(x.npoints(), 1);
        for (int e = 0; e < g.order(); ++e)
            for (long p = 0; p < n; ++p) {
                long rest = p;
                long yy = rest % ny;
                rest /= ny;
                long q = 0;
                std::vector<long> coord(r);
                for (int j = r - 1; j >= 0; --j) {
                    coord[j] = rest % nx;
                    rest /= nx;
                }
                for (int j = 0; j < r; ++j) q = q * nx + x.act(e, (int)coord[j]);
                raw.action[(size_t)e * n + p] = (int)(q * ny + y.act(e, (int)yy));
            }
        t.level.push_back(decompose(raw));
        n *= std::max(x.npoints(), 1);
        if (x.npoints() == 0 && r < degrees) n = 0;
    }
    return t;
}

GMap face_gmap(const Tower& t, int r, int i) {
    const Decomposition& from = t.level[r];
    const Decomposition& to = t.level[r - 1];
    std::vector<int> img;
    for (size_t o = 0; o < from.gs.orbits().size(); ++o) {
        long raw = from.raw_base[o];
        img.push_back(to.to_std[t.face_raw(r, i, raw)]);
    }
    return GMap(from.gs, to.gs, img);
}

}  // namespace

ChainData amitsur_complex(const MackeyFunctor& m, const GSet& x, const GSet& y, int degrees,
                          bool cochain) {
    Tower t = build_tower(x, y, degrees);
    ChainData c;
    c.max_degree = degrees;
    c.cochain = cochain;
    for (int r = 0; r <= degrees; ++r) c.groups.push_back(evaluate_site(m, t.level[r].gs).ab);
    c.d.resize(degrees + 1);
    for (int r = 1; r <= degrees; ++r) {
        IntMat acc;
        bool first = true;
        for (int i = 0; i < r; ++i) {
            GMap f = face_gmap(t, r, i);
            IntMat part = cochain ? assemble_contra(m, f) : assemble_cov(m, f);
            if (i % 2 == 1) part = -part;
            if (first) {
                acc = part;
                first = false;
            } else {
                acc = acc + part;
            }
        }
        c.d[r] = acc;
    }
    return c;
}

std::vector<IntMat> homotopy_from_element(const MackeyFunctor& m, const GSet& x, const GSet& y,
                                          int degrees, const IntVec& a) {
    Tower t = build_tower(x, y, degrees);
    SiteBasis bs = site_basis(x);
    if ((int)a.size() != bs.size()) throw Error(Error::Shape, "element does not live over X");
    const Group& g = *x.group();
    std::vector<IntMat> s;
    for (int r = 0; r < degrees; ++r) {
        const Decomposition& cur = t.level[r];
        const Decomposition& nxt = t.level[r + 1];
        int n_cur = evaluate_site(m, cur.gs).ab.gens;
        int n_nxt = evaluate_site(m, nxt.gs).ab.gens;
        IntMat acc(n_nxt, n_cur);
        for (int bi = 0; bi < bs.size(); ++bi) {
            if (a[bi] == 0) continue;
            BasisObject obj = basis_object(x, bs, bi);
            const GSet& z = *obj.total;
            // materialize Z x Am_r
            long n = (long)z.npoints() * t.size[r];
            if (n > caps().point_count) throw Error(Error::Cap, "homotopy point count exceeds cap");
            RawGSet raw;
            raw.g = &g;
            raw.n = (int)n;
            raw.action.resize((size_t)g.order() * n);
            for (int e = 0; e < g.order(); ++e)
                for (long p = 0; p < n; ++p) {
                    long zz = p / t.size[r], ww = p % t.size[r];
                    raw.action[(size_t)e * n + p] =
                        (int)((long)z.act(e, (int)zz) * t.size[r] +
                              cur.from_std[cur.gs.act(e, cur.to_std[ww])]);
                }
            Decomposition zdec = decompose(raw);
            // g_r: Z x Am_r -> Am_r, e_r: (z, w) -> (alpha z, w)
            std::vector<int> img_g, img_e;
            for (size_t o = 0; o < zdec.gs.orbits().size(); ++o) {
                long rawb = zdec.raw_base[o];
                long zz = rawb / t.size[r], ww = rawb % t.size[r];
                img_g.push_back(cur.to_std[ww]);
                int xpt = obj.to_site.apply((int)zz);
                long target_raw = (long)xpt * t.size[r] + ww;
                img_e.push_back(nxt.to_std[target_raw]);
            }
            GMap gr(zdec.gs, cur.gs, img_g);
            GMap er(zdec.gs, nxt.gs, img_e);
            IntMat op = assemble_cov(m, er) * assemble_contra(m, gr);
            acc = acc + op.scaled(a[bi]);
        }
        s.push_back(acc);
    }
    return s;
}

IntMat pushforward_action(const MackeyFunctor& m, const GSet& x, const GSet& y, int degree,
                          const IntVec& a) {
    Tower t = build_tower(x, y, degree);
    const Group& g = *x.group();
    GSet pt = GSet::point(g);
    SiteBasis bx = site_basis(x);
    SiteBasis bp = site_basis(pt);
    IntVec pa = induce_matrix(GMap::to_point(x, pt)).apply(a);
    const GSet& am = t.level[degree].gs;
    IntVec down = restrict_matrix(GMap::to_point(am, pt)).apply(pa);
    (void)bx;
    (void)bp;
    return act_operator(m, am, site_basis(am), down);
}

HomologyReport check_exactness(const ChainData& c, const std::vector<int>& degrees, Locale locale,
                               const Int& p) {
    // complex check across the computed range
    for (int r = 1; r + 1 <= c.max_degree; ++r) {
        IntMat sq = c.cochain ? c.d[r + 1] * c.d[r] : c.d[r] * c.d[r + 1];
        const AbGroup& target = c.cochain ? c.groups[r + 1] : c.groups[r - 1];
        if (!maps_equal_mod(sq, IntMat::zero(sq.rows(), sq.cols()), target))
            throw Error(Error::Input, "chain data is not a complex (dd != 0 in degree " +
                                          std::to_string(r) + ")");
    }
    HomologyReport rep;
    rep.exact = true;
    for (int r : degrees) {
        if (r < 0 || r + 1 > c.max_degree)
            throw Error(Error::Usage, "degree " + std::to_string(r) + " beyond computed range");
        IntMat ker, im;
        if (!c.cochain) {
            // H_r = ker(d_r) / im(d_{r+1})
            if (r == 0) {
                ker = IntMat::identity(c.rank(0));
            } else {
                ker = kernel_into(c.d[r], c.groups[r - 1]);
            }
            im = IntMat::hstack(c.d[r + 1], c.groups[r].rels);
        } else {
            // H^r = ker(d^{r+1}) / im(d^r)
            ker = kernel_into(c.d[r + 1], c.groups[r + 1]);
            im = r == 0 ? c.groups[r].rels : IntMat::hstack(c.d[r], c.groups[r].rels);
        }
        // express the image inside the kernel basis
        IntMat kb = hnf_cols(ker);
        std::vector<IntVec> cols;
        for (int j = 0; j < im.cols(); ++j) {
            auto co = lattice_coords(kb, im.col(j));
            if (!co) throw Error(Error::Internal, "image escapes the kernel");
            cols.push_back(*co);
        }
        IntMat rels = cols.empty() ? IntMat(kb.cols(), 0) : IntMat::from_cols(cols);
        AbGroup h(kb.cols(), rels);
        IntVec divisors = h.torsion();
        if (locale == Locale::AtPrime) {
            IntVec local;
            for (const auto& dv : divisors) {
                Int dp = 1;
                Int v = dv;
                while (v % p == 0) {
                    v /= p;
                    dp *= p;
                }
                if (dp > 1) local.push_back(dp);
            }
            divisors = local;
        }
        int fr = h.free_rank();
        if (!divisors.empty() || fr != 0) {
            rep.nonzero.push_back({r, divisors, fr});
            rep.exact = false;
        }
    }
    return rep;
}

void attach_two_power_filtration(ChainData& c, int depth) {
    c.filt.clear();
    for (int r = 0; r <= c.max_degree; ++r) {
        std::vector<IntMat> levels;
        Int scale = 1;
        for (int i = 1; i <= depth; ++i) {
            scale *= 2;
            levels.push_back(IntMat::identity(c.rank(r)).scaled(scale));
        }
        c.filt.push_back(std::move(levels));
    }
}

}  // namespace burnside
