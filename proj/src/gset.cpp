#include "burnside/gset.hpp"

#include "burnside/caps.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

namespace burnside {

GSet make_standard_gset(const Group& g, const std::vector<int>& orbit_classes) {
    const SubgroupData& sd = g.subgroups();
    GSet s;
    s.g_ = &g;
    int offset = 0;
    for (int cls : orbit_classes) {
        const auto& ct = sd.coset_table(cls);
        GSet::Orbit o{cls, offset, (int)ct.rep_of_pos.size()};
        s.orbits_.push_back(o);
        for (int i = 0; i < o.size; ++i) {
            s.point_orbit_.push_back((int)s.orbits_.size() - 1);
            s.point_rep_.push_back(ct.rep_of_pos[i]);
        }
        s.coset_pos_.push_back(&ct.pos_of_elem);
        offset += o.size;
        if (offset > caps().point_count)
            throw Error(Error::Cap, "G-set point count exceeds cap " + std::to_string(caps().point_count));
    }
    s.npoints_ = offset;
    return s;
}

GSet GSet::from_classes(const Group& g, const std::vector<std::pair<int, int>>& class_mults) {
    std::vector<int> orbit_classes;
    for (auto [cls, mult] : class_mults) {
        if (mult < 1) throw Error(Error::Input, "orbit multiplicity must be >= 1");
        for (int i = 0; i < mult; ++i) orbit_classes.push_back(cls);
    }
    return make_standard_gset(g, orbit_classes);
}

GSet GSet::point(const Group& g) {
    int full = (int)g.subgroups().classes.size() - 1;
    return make_standard_gset(g, {full});
}

GSet GSet::free_orbit(const Group& g) { return make_standard_gset(g, {0}); }

GSet GSet::empty(const Group& g) {
    GSet s;
    s.g_ = &g;
    return s;
}

GSet GSet::disjoint_union(const GSet& a, const GSet& b) {
    if (a.g_ != b.g_) throw Error(Error::Input, "disjoint union across groups");
    std::vector<int> classes;
    for (const auto& o : a.orbits_) classes.push_back(o.cls);
    for (const auto& o : b.orbits_) classes.push_back(o.cls);
    return make_standard_gset(*a.g_, classes);
}

const Elems& GSet::stabilizer(int o) const { return g_->subgroups().rep_elems(orbits_[o].cls); }

int GSet::act(int e, int p) const {
    int o = point_orbit_[p];
    int rep = point_rep_[p];
    return orbits_[o].offset + (*coset_pos_[o])[g_->mul(e, rep)];
}

bool GSet::same_orbit_type(const GSet& other) const {
    if (g_ != other.g_) return false;
    std::vector<int> a, b;
    for (const auto& o : orbits_) a.push_back(o.cls);
    for (const auto& o : other.orbits_) b.push_back(o.cls);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

GMap::GMap(const GSet& s, const GSet& d, std::vector<int> images)
    : src(&s), dst(&d), base_image(std::move(images)) {
    if ((int)base_image.size() != (int)s.orbits().size()) throw Error(Error::Shape, "GMap image count");
    for (size_t o = 0; o < base_image.size(); ++o) {
        int q = base_image[o];
        if (q < 0 || q >= d.npoints()) throw Error(Error::Shape, "GMap image out of range");
        for (int h : s.stabilizer((int)o))
            if (d.act(h, q) != q) throw Error(Error::Input, "assignment is not equivariant");
    }
}

int GMap::apply(int p) const {
    int o = src->point_orbit(p);
    return dst->act(src->point_rep(p), base_image[o]);
}

CosetMapData GMap::coset_data(int src_orbit) const {
    CosetMapData cd;
    cd.h = src->stabilizer(src_orbit);
    int q = base_image[src_orbit];
    cd.k = dst->stabilizer(dst->point_orbit(q));
    cd.g = dst->point_rep(q);
    return cd;
}

bool GMap::operator==(const GMap& o) const {
    return src == o.src && dst == o.dst && base_image == o.base_image;
}

GMap GMap::identity(const GSet& s) {
    std::vector<int> img;
    for (size_t o = 0; o < s.orbits().size(); ++o) img.push_back(s.base((int)o));
    return GMap(s, s, img);
}

GMap GMap::to_point(const GSet& s, const GSet& pt) {
    if (pt.npoints() != 1) throw Error(Error::Input, "target is not a point");
    std::vector<int> img(s.orbits().size(), 0);
    return GMap(s, pt, img);
}

GMap GMap::compose(const GMap& outer, const GMap& inner) {
    if (inner.dst != outer.src) throw Error(Error::Shape, "GMap composition mismatch");
    std::vector<int> img;
    for (size_t o = 0; o < inner.base_image.size(); ++o) img.push_back(outer.apply(inner.base_image[o]));
    return GMap(*inner.src, *outer.dst, img);
}

GMap GMap::orbit_inclusion(const GSet& orbit_set, const GSet& whole, int orbit_idx) {
    if (orbit_set.orbits().size() != 1 || orbit_set.orbits()[0].cls != whole.orbits()[orbit_idx].cls)
        throw Error(Error::Shape, "orbit inclusion mismatch");
    return GMap(orbit_set, whole, {whole.base(orbit_idx)});
}

RawGSet to_raw(const GSet& s) {
    RawGSet r;
    r.g = s.group();
    r.n = s.npoints();
    r.action.resize((size_t)r.g->order() * r.n);
    for (int e = 0; e < r.g->order(); ++e)
        for (int p = 0; p < r.n; ++p) r.action[(size_t)e * r.n + p] = s.act(e, p);
    return r;
}

Decomposition decompose(const RawGSet& raw) {
    const Group& g = *raw.g;
    const SubgroupData& sd = g.subgroups();
    Decomposition out;
    std::vector<int> orbit_classes;
    std::vector<int> raw_bases;
    std::vector<int> orbit_of(raw.n, -1);
    std::vector<int> transporter(raw.n, -1);  // point = transporter * raw_base
    for (int p = 0; p < raw.n; ++p) {
        if (orbit_of[p] >= 0) continue;
        int oid = (int)orbit_classes.size();
        // stabilizer and class of p
        Elems stab;
        for (int e = 0; e < g.order(); ++e)
            if (raw.act(e, p) == p) stab.push_back(e);
        int cls = sd.class_of(stab);
        const Elems& rep = sd.rep_elems(cls);
        // find the point in the orbit whose stabilizer is exactly the representative:
        // stab(t*p) = t stab(p) t^-1
        int base = -1;
        for (int t = 0; t < g.order() && base < 0; ++t)
            if (conjugate_subgroup(g, stab, t) == rep) base = raw.act(t, p);
        if (base < 0) throw Error(Error::Internal, "no conjugate matches class representative");
        for (int e = 0; e < g.order(); ++e) {
            int q = raw.act(e, base);
            if (orbit_of[q] < 0) {
                orbit_of[q] = oid;
                transporter[q] = e;
            }
        }
        orbit_classes.push_back(cls);
        raw_bases.push_back(base);
    }
    out.gs = make_standard_gset(g, orbit_classes);
    out.to_std.assign(raw.n, -1);
    out.from_std.assign(out.gs.npoints(), -1);
    out.raw_base = raw_bases;
    for (int p = 0; p < raw.n; ++p) {
        int o = orbit_of[p];
        int std_pt = out.gs.act(transporter[p], out.gs.base(o));
        out.to_std[p] = std_pt;
        out.from_std[std_pt] = p;
    }
    return out;
}

PullbackResult pullback(const GMap& f, const GMap& g) {
    if (f.dst != g.dst) throw Error(Error::Shape, "pullback requires a common target");
    const GSet& A = *f.src;
    const GSet& B = *g.src;
    const Group& grp = *A.group();
    std::vector<int> fa(A.npoints()), gb(B.npoints());
    for (int a = 0; a < A.npoints(); ++a) fa[a] = f.apply(a);
    for (int b = 0; b < B.npoints(); ++b) gb[b] = g.apply(b);
    std::vector<std::pair<int, int>> pts;
    std::vector<int> pair_id((size_t)A.npoints() * std::max(B.npoints(), 1), -1);
    for (int a = 0; a < A.npoints(); ++a)
        for (int b = 0; b < B.npoints(); ++b)
            if (fa[a] == gb[b]) {
                pair_id[(size_t)a * B.npoints() + b] = (int)pts.size();
                pts.push_back({a, b});
            }
    if ((long)pts.size() > caps().point_count)
        throw Error(Error::Cap, "pullback point count exceeds cap");
    RawGSet raw;
    raw.g = &grp;
    raw.n = (int)pts.size();
    raw.action.resize((size_t)grp.order() * raw.n);
    for (int e = 0; e < grp.order(); ++e)
        for (int i = 0; i < raw.n; ++i) {
            int a2 = A.act(e, pts[i].first);
            int b2 = B.act(e, pts[i].second);
            raw.action[(size_t)e * raw.n + i] = pair_id[(size_t)a2 * B.npoints() + b2];
        }
    Decomposition d = decompose(raw);
    PullbackResult out;
    out.total = std::make_shared<GSet>(std::move(d.gs));
    std::vector<int> img1, img2;
    for (size_t o = 0; o < out.total->orbits().size(); ++o) {
        img1.push_back(pts[d.raw_base[o]].first);
        img2.push_back(pts[d.raw_base[o]].second);
    }
    out.to_src_of_f = GMap(*out.total, A, img1);
    out.to_src_of_g = GMap(*out.total, B, img2);
    return out;
}

PullbackResult product(const GSet& a, const GSet& b) {
    GSet pt = GSet::point(*a.group());
    // keep the point alive through the call by constructing maps on locals
    // (pullback only reads them, the result does not retain the target set)
    GMap fa = GMap::to_point(a, pt);
    GMap fb = GMap::to_point(b, pt);
    return pullback(fa, fb);
}

std::vector<GMap> all_gmaps(const GSet& s, const GSet& t) {
    if (s.group() != t.group()) throw Error(Error::Input, "maps across groups");
    std::vector<std::vector<int>> choices(s.orbits().size());
    for (size_t o = 0; o < s.orbits().size(); ++o) {
        const Elems& stab = s.stabilizer((int)o);
        for (int q = 0; q < t.npoints(); ++q) {
            bool fixed = true;
            for (int h : stab)
                if (t.act(h, q) != q) {
                    fixed = false;
                    break;
                }
            if (fixed) choices[(size_t)o].push_back(q);
        }
        if (choices[o].empty()) return {};
    }
    long total = 1;
    for (const auto& c : choices) {
        total *= (long)c.size();
        if (total > caps().gmap_count) throw Error(Error::Cap, "G-map count exceeds cap");
    }
    std::vector<GMap> out;
    std::vector<size_t> idx(choices.size(), 0);
    if (choices.empty()) {
        out.push_back(GMap(s, t, {}));
        return out;
    }
    for (;;) {
        std::vector<int> img;
        for (size_t o = 0; o < choices.size(); ++o) img.push_back(choices[o][idx[o]]);
        out.push_back(GMap(s, t, img));
        size_t k = choices.size();
        while (k > 0) {
            --k;
            if (++idx[k] < choices[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

std::vector<int> Family::member_classes() const {
    std::vector<int> out;
    for (size_t c = 0; c < member.size(); ++c)
        if (member[c]) out.push_back((int)c);
    return out;
}

std::vector<int> Family::maximal_classes() const {
    const SubgroupData& sd = g->subgroups();
    std::vector<int> out;
    for (size_t c = 0; c < member.size(); ++c) {
        if (!member[c]) continue;
        bool maximal = true;
        for (size_t c2 = 0; c2 < member.size(); ++c2)
            if (c2 != c && member[c2] && sd.leq[c][c2]) maximal = false;
        if (maximal) out.push_back((int)c);
    }
    return out;
}

Family family_from_classes(const Group& g, const std::vector<int>& classes) {
    const SubgroupData& sd = g.subgroups();
    Family f;
    f.g = &g;
    f.member.assign(sd.classes.size(), 0);
    for (int c : classes)
        for (size_t c2 = 0; c2 < sd.classes.size(); ++c2)
            if (sd.leq[c2][c]) f.member[c2] = 1;
    return f;
}

Family family_all(const Group& g) {
    Family f;
    f.g = &g;
    f.member.assign(g.subgroups().classes.size(), 1);
    return f;
}

namespace {
template <typename Pred>
Family family_by_predicate(const Group& g, Pred pred) {
    const SubgroupData& sd = g.subgroups();
    Family f;
    f.g = &g;
    f.member.assign(sd.classes.size(), 0);
    for (size_t c = 0; c < sd.classes.size(); ++c)
        if (pred(sd.rep_elems((int)c))) f.member[c] = 1;
    return f;
}
}  // namespace

Family family_cyclic(const Group& g) {
    return family_by_predicate(g, [&](const Elems& h) {
        for (int x : h)
            if (g.element_order(x) == (int)h.size()) return true;
        return h.size() == 1;
    });
}

Family family_elementary(const Group& g, int p) {
    return family_by_predicate(g, [&](const Elems& h) { return is_p_elementary(g, h, p); });
}

Family family_hyperelementary(const Group& g) {
    return family_by_predicate(g, [&](const Elems& h) { return is_hyperelementary(g, h); });
}

Family family_p_hyperelementary(const Group& g, int p) {
    return family_by_predicate(g, [&](const Elems& h) { return is_p_hyperelementary(g, h, p); });
}

bool family_is_closed(const Family& f) {
    const SubgroupData& sd = f.g->subgroups();
    for (size_t c = 0; c < f.member.size(); ++c) {
        if (!f.member[c]) continue;
        for (size_t c2 = 0; c2 < f.member.size(); ++c2)
            if (sd.leq[c2][c] && !f.member[c2]) return false;
    }
    return true;
}

GSet gset_of_family(const Family& f) {
    auto maximal = f.maximal_classes();
    if (maximal.empty()) return GSet::empty(*f.g);
    std::vector<std::pair<int, int>> cm;
    for (int c : maximal) cm.push_back({c, 1});
    return GSet::from_classes(*f.g, cm);
}

Family family_of(const GSet& s) {
    std::vector<int> classes;
    for (const auto& o : s.orbits()) classes.push_back(o.cls);
    Family f = family_from_classes(*s.group(), classes);
    return f;
}

Family hyper_p_closure(const Family& f, int p) {
    if (!is_prime(p)) throw Error(Error::Usage, "prime required");
    const SubgroupData& sd = f.g->subgroups();
    Family out;
    out.g = f.g;
    out.member.assign(f.member.size(), 0);
    for (size_t c = 0; c < f.member.size(); ++c) {
        Elems op = o_p(*f.g, sd.rep_elems((int)c), p);
        int cls = sd.class_of(op);
        if (f.member[cls]) out.member[c] = 1;
    }
    return out;
}

GSet hyper_p_set(const GSet& x, int p) { return gset_of_family(hyper_p_closure(family_of(x), p)); }

GSet gset_from_spec(const Group& g, const std::string& spec_in) {
    std::string spec = spec_in;
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    spec = strip(spec);
    if (spec.empty()) throw Error(Error::Usage, "empty G-set spec");
    if (spec == "point" || spec == "all") return GSet::point(g);
    if (spec == "free") return GSet::free_orbit(g);
    if (spec == "empty") return GSet::empty(g);
    if (spec == "cyclic" || spec == "hyperelementary" || spec.find("elementary:") != std::string::npos ||
        spec.find("hyperelementary") != std::string::npos)
        return gset_of_family(family_from_spec(g, spec));
    // comma list of Class:mult
    std::vector<std::pair<int, int>> cm;
    std::stringstream ss(spec);
    std::string item;
    const SubgroupData& sd = g.subgroups();
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (item.empty()) continue;
        size_t colon = item.find(':');
        std::string name = strip(colon == std::string::npos ? item : item.substr(0, colon));
        int mult = 1;
        if (colon != std::string::npos) {
            std::string m = strip(item.substr(colon + 1));
            mult = std::atoi(m.c_str());
            if (mult < 1) throw Error(Error::Usage, "multiplicity must be >= 1 in: " + item);
        }
        cm.push_back({sd.class_by_name(name), mult});
    }
    if (cm.empty()) throw Error(Error::Usage, "no orbits in G-set spec: " + spec_in);
    return GSet::from_classes(g, cm);
}

Family family_from_spec(const Group& g, const std::string& spec_in) {
    std::string spec = spec_in;
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    spec = strip(spec);
    if (spec.rfind("hyper", 0) == 0 && spec.find('(') != std::string::npos) {
        // hyper<p>(<base>)
        size_t open = spec.find('(');
        int p = std::atoi(spec.substr(5, open - 5).c_str());
        size_t close = spec.rfind(')');
        if (close == std::string::npos || close < open) throw Error(Error::Usage, "unbalanced family spec");
        Family base = family_from_spec(g, spec.substr(open + 1, close - open - 1));
        return hyper_p_closure(base, p);
    }
    if (spec == "all") return family_all(g);
    if (spec == "cyclic") return family_cyclic(g);
    if (spec == "hyperelementary") return family_hyperelementary(g);
    if (spec == "trivial") return family_from_classes(g, {0});
    size_t dash = spec.find("-hyperelementary");
    if (dash != std::string::npos && dash > 0 && std::isdigit((unsigned char)spec[0]))
        return family_p_hyperelementary(g, std::atoi(spec.substr(0, dash).c_str()));
    if (spec.rfind("p-hyperelementary:", 0) == 0)
        return family_p_hyperelementary(g, std::atoi(spec.c_str() + 18));
    if (spec.rfind("hyperelementary:", 0) == 0)
        return family_p_hyperelementary(g, std::atoi(spec.c_str() + 16));
    if (spec.rfind("elementary:", 0) == 0) return family_elementary(g, std::atoi(spec.c_str() + 11));
    // comma list of class names
    std::vector<int> classes;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (!item.empty()) classes.push_back(g.subgroups().class_by_name(item));
    }
    if (classes.empty()) throw Error(Error::Usage, "empty family spec: " + spec_in);
    return family_from_classes(g, classes);
}

}  // namespace burnside
