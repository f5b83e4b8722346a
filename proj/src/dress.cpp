#include "burnside/dress.hpp"

#include <algorithm>

namespace burnside {

namespace {

IntMat generating_map_with_rels(const GreenFunctor& g, const GSet& x, const GSet& pt) {
    GMap proj = GMap::to_point(x, pt);
    IntMat cov = assemble_cov(g, proj);
    const AbGroup& target = g.value(pt.stabilizer(0));
    return IntMat::hstack(cov, target.rels);
}

}  // namespace

GeneratingVerdict is_generating(const GreenFunctor& g, const GSet& x, Locale locale, const Int& p) {
    const Group& grp = g.group();
    GSet pt = GSet::point(grp);
    GeneratingVerdict out;
    if (x.npoints() == 0) {
        const AbGroup& tv = g.value(pt.stabilizer(0));
        out.coker_free_rank = tv.free_rank();
        out.coker_divisors = tv.torsion();
        out.verdict = tv.is_zero_group();
        return out;
    }
    IntMat m = generating_map_with_rels(g, x, pt);
    IntVec known;
    for (int q : prime_divisors(grp.order())) known.push_back(q);
    SurjectivityVerdict v = is_surjective_localized(m, locale, p, known);
    out.verdict = v.surjective;
    out.coker_divisors = v.coker.divisors;
    out.coker_free_rank = v.coker.free_rank;
    out.residual = v.residual;
    return out;
}

DressReport is_dress_generating(const GreenFunctor& g, const GSet& x) {
    const Group& grp = g.group();
    DressReport rep;
    rep.overall = true;
    for (int p : prime_divisors(grp.order())) {
        GSet xp = hyper_p_set(x, p);
        GeneratingVerdict v = is_generating(g, xp, Locale::AtPrime, p);
        DressPrimeVerdict pv;
        pv.p = p;
        pv.verdict = v.verdict;
        pv.coker_divisors = v.coker_divisors;
        pv.coker_free_rank = v.coker_free_rank;
        for (const auto& o : xp.orbits()) pv.hyper_set_classes.push_back(o.cls);
        rep.overall = rep.overall && pv.verdict;
        rep.per_prime.push_back(std::move(pv));
    }
    // for p away from |G| the hyper_p closure fixes x, so one integral check
    // with the |G|-primes stripped covers them all
    rep.generic = is_generating(g, x, Locale::Generic);
    rep.overall = rep.overall && rep.generic.verdict;
    return rep;
}

DressReport is_dress_generating(MackeyPtr m, const GSet& x) {
    if (auto green = std::dynamic_pointer_cast<const GreenFunctor>(m))
        return is_dress_generating(*green, x);
    return is_dress_generating(*bqgr(std::move(m)), x);
}

bool kernel_image_cover_check(const MackeyFunctor& m, const GSet& y, int p) {
    if (!is_prime(p)) throw Error(Error::Usage, "prime required");
    const Group& grp = m.group();
    GSet pt = GSet::point(grp);
    const AbGroup& v0 = m.value(pt.stabilizer(0));
    if (v0.gens == 0) return true;
    std::vector<IntVec> gens;
    if (y.npoints() > 0) {
        GMap proj = GMap::to_point(y, pt);
        IntMat delta = assemble_contra(m, proj);
        IntMat k = kernel_into(delta, evaluate_site(m, y).ab);
        for (int j = 0; j < k.cols(); ++j) gens.push_back(k.col(j));
    } else {
        // restriction to the empty set is the zero map; its kernel is everything
        for (int i = 0; i < v0.gens; ++i) {
            IntVec e(v0.gens, 0);
            e[i] = 1;
            gens.push_back(e);
        }
    }
    GSet hy = hyper_p_set(y, p);
    if (hy.npoints() > 0) {
        IntMat ind = assemble_cov(m, GMap::to_point(hy, pt));
        for (int j = 0; j < ind.cols(); ++j) gens.push_back(ind.col(j));
    }
    for (int j = 0; j < v0.rels.cols(); ++j) gens.push_back(v0.rels.col(j));
    IntMat big = IntMat::from_cols(gens);
    return is_surjective_localized(big, Locale::AtPrime, p).surjective;
}

CoefficientTable induction_coefficients(MackeyPtr m, const Family& f, int p) {
    if (!is_prime(p)) throw Error(Error::Usage, "prime required");
    const Group& grp = m->group();
    const SubgroupData& sd = grp.subgroups();
    Family closed = hyper_p_closure(f, p);
    if (!(closed == f))
        throw Error(Error::Input, "family is not hyper_p-closed at p=" + std::to_string(p));
    GreenPtr q = bqgr(m);
    GSet pt = GSet::point(grp);
    const Elems& full = pt.stabilizer(0);
    SiteBasis bpt = site_basis(pt);

    CoefficientTable table;
    table.prime = p;
    table.family_classes = f.member_classes();

    // columns: induction from each member class, then the ideal at the point
    std::vector<IntMat> blocks;
    std::vector<std::pair<int, SiteBasis>> class_basis;
    for (int c : table.family_classes) {
        GSet s = GSet::from_classes(grp, {{c, 1}});
        GMap proj = GMap::to_point(s, pt);
        blocks.push_back(induce_matrix(proj));
        class_basis.push_back({c, site_basis(s)});
    }
    const AbGroup& qv = q->value(full);
    IntMat system = blocks[0];
    for (size_t i = 1; i < blocks.size(); ++i) system = IntMat::hstack(system, blocks[i]);
    std::vector<int> var_offsets;
    {
        int off = 0;
        for (const auto& b : blocks) {
            var_offsets.push_back(off);
            off += b.cols();
        }
    }
    IntMat with_rels = IntMat::hstack(system, qv.rels);
    IntVec one = unit_element(pt);
    LocalSolveResult sol = solve_localized(with_rels, one, p);
    if (!sol.feasible)
        throw Error(Error::Math,
                    "generation fails at p=" + std::to_string(p) + ": " + sol.certificate);

    // aggregate a_H over the global class of each pair subgroup
    for (size_t bi = 0; bi < class_basis.size(); ++bi) {
        const SiteBasis& bs = class_basis[bi].second;
        for (int j = 0; j < bs.size(); ++j) {
            Rat c = sol.x[var_offsets[bi] + j];
            if (c == 0) continue;
            int cls = sd.class_of(bs.elems[j].k);
            table.a[cls] += c;
        }
    }

    // verify sum a_H Ind_H Res_H = identity on m(point) at p
    SiteValue sv = evaluate_site(*m, pt);
    int n = sv.ab.gens;
    Int den = 1;
    for (const auto& [cls, c] : table.a) {
        (void)cls;
        den = den * denominator(c) / gcd(den, denominator(c));
    }
    if (den % p == 0) throw Error(Error::Internal, "denominator not prime to p");
    IntMat acc(n, n);
    for (const auto& [cls, c] : table.a) {
        GSet s = GSet::from_classes(grp, {{cls, 1}});
        GMap proj = GMap::to_point(s, pt);
        IntMat op = assemble_cov(*m, proj) * assemble_contra(*m, proj);
        Rat scaled = c * den;
        acc = acc + op.scaled(numerator(scaled));
    }
    IntMat target = IntMat::identity(n).scaled(den);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
        IntVec d(n);
        for (int i = 0; i < n; ++i) d[i] = acc.at(i, j) - target.at(i, j);
        if (sv.ab.rels.cols() == 0) {
            for (const auto& v : d)
                if (v != 0) ok = false;
        } else {
            ok = solve_localized(sv.ab.rels, d, p).feasible;
        }
    }
    table.verified = ok;
    if (!ok) throw Error(Error::Math, "induction coefficient verification failed");
    return table;
}

}  // namespace burnside
