#include "burnside/biset.hpp"

#include <algorithm>
#include <set>

namespace burnside {

bool operator<(const BisetShape& a, const BisetShape& b) {
    if (a.left != b.left) return a.left < b.left;
    if (a.right != b.right) return a.right < b.right;
    if (a.domain != b.domain) return a.domain < b.domain;
    return a.fmap < b.fmap;
}
bool operator==(const BisetShape& a, const BisetShape& b) {
    return a.left == b.left && a.right == b.right && a.domain == b.domain && a.fmap == b.fmap;
}

namespace {

void check_shape(const Group& g, const BisetShape& s) {
    if (!is_subgroup(g, s.left) || !is_subgroup(g, s.right) || !is_subgroup(g, s.domain))
        throw Error(Error::Input, "biset shape needs subgroups");
    if (!subset_of(s.domain, s.right)) throw Error(Error::Input, "domain must sit in the right group");
    if (s.fmap.size() != s.domain.size()) throw Error(Error::Shape, "monomorphism table size");
    std::vector<int> img = s.fmap;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end())
        throw Error(Error::Input, "monomorphism is not injective");
    if (!subset_of(img, s.left)) throw Error(Error::Input, "image must sit in the left group");
    auto f_of = [&](int a) {
        auto it = std::lower_bound(s.domain.begin(), s.domain.end(), a);
        return s.fmap[it - s.domain.begin()];
    };
    for (int a : s.domain)
        for (int b : s.domain)
            if (f_of(g.mul(a, b)) != g.mul(f_of(a), f_of(b)))
                throw Error(Error::Input, "map table is not a homomorphism");
}

std::pair<Elems, std::vector<int>> conj_pair(const Group& g, const Elems& domain,
                                             const std::vector<int>& fmap, int n1, int n2) {
    // A' = n1 A n1^-1, f'(n1 a n1^-1) = n2 f(a) n2^-1
    std::vector<std::pair<int, int>> entries;
    for (size_t i = 0; i < domain.size(); ++i)
        entries.push_back({g.conj(n1, domain[i]), g.conj(n2, fmap[i])});
    std::sort(entries.begin(), entries.end());
    Elems dom;
    std::vector<int> fm;
    for (auto& [a, b] : entries) {
        dom.push_back(a);
        fm.push_back(b);
    }
    return {dom, fm};
}

}  // namespace

BisetShape canonical_biset(const Group& g, const BisetShape& raw) {
    check_shape(g, raw);
    BisetShape best = raw;
    {
        auto [dom, fm] = conj_pair(g, raw.domain, raw.fmap, 0, 0);
        best.domain = dom;
        best.fmap = fm;
    }
    for (int n1 : raw.right)
        for (int n2 : raw.left) {
            auto [dom, fm] = conj_pair(g, raw.domain, raw.fmap, n1, n2);
            if (dom < best.domain || (dom == best.domain && fm < best.fmap)) {
                best.domain = dom;
                best.fmap = fm;
            }
        }
    return best;
}

void BisetMorphism::add(const BisetShape& s, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(s);
    if (it == terms.end()) {
        terms[s] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

bool BisetMorphism::operator==(const BisetMorphism& o) const {
    return g == o.g && left == o.left && right == o.right && terms == o.terms;
}

BisetMorphism BisetMorphism::operator+(const BisetMorphism& o) const {
    if (left != o.left || right != o.right) throw Error(Error::Shape, "biset sum mismatch");
    BisetMorphism out = *this;
    for (const auto& [s, c] : o.terms) out.add(s, c);
    return out;
}

BisetMorphism biset_zero(const Group& g, const Elems& right, const Elems& left) {
    BisetMorphism m;
    m.g = &g;
    m.left = left;
    m.right = right;
    return m;
}

BisetMorphism biset_identity(const Group& g, const Elems& h) {
    BisetMorphism m = biset_zero(g, h, h);
    BisetShape s;
    s.left = h;
    s.right = h;
    s.domain = h;
    s.fmap = h;
    m.add(canonical_biset(g, s), 1);
    return m;
}

MaterializedBiset materialize_biset(const Group& g, const BisetShape& s) {
    check_shape(g, s);
    auto f_of = [&](int a) {
        auto it = std::lower_bound(s.domain.begin(), s.domain.end(), a);
        return s.fmap[it - s.domain.begin()];
    };
    // equivalence classes of (x in left, y in right): (x f(a), y) ~ (x, a y)
    auto canon = [&](int x, int y) {
        std::pair<int, int> best{x, y};
        for (int a : s.domain) {
            std::pair<int, int> cand{g.mul(x, f_of(a)), g.mul(g.inv(a), y)};
            if (cand < best) best = cand;
        }
        return best;
    };
    std::map<std::pair<int, int>, int> id_of;
    std::vector<std::pair<int, int>> pts;
    for (int x : s.left)
        for (int y : s.right) {
            auto c = canon(x, y);
            if (!id_of.count(c)) {
                id_of[c] = (int)pts.size();
                pts.push_back(c);
            }
        }
    MaterializedBiset out;
    out.g = &g;
    out.left = s.left;
    out.right = s.right;
    out.n = (int)pts.size();
    out.lact.resize(s.left.size() * pts.size());
    out.ract.resize(s.right.size() * pts.size());
    for (size_t i = 0; i < s.left.size(); ++i)
        for (size_t p = 0; p < pts.size(); ++p)
            out.lact[i * pts.size() + p] = id_of.at(canon(g.mul(s.left[i], pts[p].first), pts[p].second));
    for (size_t j = 0; j < s.right.size(); ++j)
        for (size_t p = 0; p < pts.size(); ++p)
            out.ract[j * pts.size() + p] = id_of.at(canon(pts[p].first, g.mul(pts[p].second, s.right[j])));
    return out;
}

BisetDecomposition decompose_biset(const MaterializedBiset& m) {
    const Group& g = *m.g;
    BisetDecomposition out;
    std::vector<char> seen(m.n, 0);
    for (int p0 = 0; p0 < m.n; ++p0) {
        if (seen[p0]) continue;
        // orbit under both actions
        std::vector<int> orbit = {p0};
        seen[p0] = 1;
        for (size_t k = 0; k < orbit.size(); ++k) {
            for (size_t i = 0; i < m.left.size(); ++i) {
                int q = m.lapply((int)i, orbit[k]);
                if (!seen[q]) {
                    seen[q] = 1;
                    orbit.push_back(q);
                }
            }
            for (size_t j = 0; j < m.right.size(); ++j) {
                int q = m.rapply(orbit[k], (int)j);
                if (!seen[q]) {
                    seen[q] = 1;
                    orbit.push_back(q);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        int base = orbit[0];
        // bifreeness and the left transporter map
        std::map<int, int> left_of;  // point -> index into m.left with point = l . base
        bool bifree = true;
        for (size_t i = 0; i < m.left.size(); ++i) {
            int q = m.lapply((int)i, base);
            if (left_of.count(q)) {
                bifree = false;
                break;
            }
            left_of[q] = (int)i;
        }
        if (bifree) {
            for (size_t j = 0; j < m.right.size(); ++j) {
                // right freeness: base . h = base only for h = e
                if (m.rapply(base, (int)j) == base && m.right[j] != 0) {
                    bifree = false;
                    break;
                }
            }
        }
        if (!bifree) {
            out.non_bifree_sizes.push_back((int)orbit.size());
            continue;
        }
        Elems domain;
        std::vector<int> fmap;
        for (size_t j = 0; j < m.right.size(); ++j) {
            int q = m.rapply(base, (int)j);
            auto it = left_of.find(q);
            if (it != left_of.end()) {
                domain.push_back(m.right[j]);
                fmap.push_back(m.left[it->second]);
            }
        }
        BisetShape s;
        s.left = m.left;
        s.right = m.right;
        s.domain = domain;
        s.fmap = fmap;
        out.orbits.push_back(canonical_biset(g, s));
    }
    return out;
}

BisetMorphism balanced_product(const BisetMorphism& x, const BisetMorphism& y) {
    if (x.g != y.g) throw Error(Error::Input, "biset product across groups");
    if (x.right != y.left) throw Error(Error::Shape, "middle groups do not match");
    const Group& g = *x.g;
    BisetMorphism out = biset_zero(g, y.right, x.left);
    for (const auto& [sx, cx] : x.terms)
        for (const auto& [sy, cy] : y.terms) {
            MaterializedBiset mx = materialize_biset(g, sx);
            MaterializedBiset my = materialize_biset(g, sy);
            // classes of (px, py) under (px . h2, py) ~ (px, h2 . py), scanned
            // as (px . h2, h2^-1 . py)
            std::vector<int> inv_index(x.right.size());
            for (size_t i = 0; i < x.right.size(); ++i) {
                int invel = g.inv(x.right[i]);
                inv_index[i] =
                    (int)(std::lower_bound(x.right.begin(), x.right.end(), invel) - x.right.begin());
            }
            auto canon2 = [&](int px, int py) {
                std::pair<int, int> best{px, py};
                for (size_t i = 0; i < x.right.size(); ++i) {
                    std::pair<int, int> cand{mx.rapply(px, (int)i), my.lapply(inv_index[i], py)};
                    if (cand < best) best = cand;
                }
                return best;
            };
            std::map<std::pair<int, int>, int> id_of;
            std::vector<std::pair<int, int>> pts;
            for (int px = 0; px < mx.n; ++px)
                for (int py = 0; py < my.n; ++py) {
                    auto c = canon2(px, py);
                    if (!id_of.count(c)) {
                        id_of[c] = (int)pts.size();
                        pts.push_back(c);
                    }
                }
            MaterializedBiset prod;
            prod.g = &g;
            prod.left = x.left;
            prod.right = y.right;
            prod.n = (int)pts.size();
            prod.lact.resize(x.left.size() * pts.size());
            prod.ract.resize(y.right.size() * pts.size());
            for (size_t i = 0; i < x.left.size(); ++i)
                for (size_t p = 0; p < pts.size(); ++p)
                    prod.lact[i * pts.size() + p] =
                        id_of.at(canon2(mx.lapply((int)i, pts[p].first), pts[p].second));
            for (size_t j = 0; j < y.right.size(); ++j)
                for (size_t p = 0; p < pts.size(); ++p)
                    prod.ract[j * pts.size() + p] =
                        id_of.at(canon2(pts[p].first, my.rapply(pts[p].second, (int)j)));
            BisetDecomposition dec = decompose_biset(prod);
            if (!dec.non_bifree_sizes.empty())
                throw Error(Error::Internal, "balanced product of bifree bisets must be bifree");
            Int c = cx * cy;
            for (const auto& s : dec.orbits) out.add(s, c);
        }
    return out;
}

BisetShape tau_shape(const Group& g, const BisetShape& s) {
    BisetShape t;
    t.left = s.right;
    t.right = s.left;
    std::vector<std::pair<int, int>> entries;
    for (size_t i = 0; i < s.domain.size(); ++i) entries.push_back({s.fmap[i], s.domain[i]});
    std::sort(entries.begin(), entries.end());
    for (auto& [a, b] : entries) {
        t.domain.push_back(a);
        t.fmap.push_back(b);
    }
    return canonical_biset(g, t);
}

BisetMorphism tau(const BisetMorphism& m) {
    BisetMorphism out = biset_zero(*m.g, m.left, m.right);
    for (const auto& [s, c] : m.terms) out.add(tau_shape(*m.g, s), c);
    return out;
}

BisetMorphism j_lower(const Group& g, const CosetMapData& f) {
    BisetMorphism out = biset_zero(g, f.h, f.k);
    BisetShape s;
    s.left = f.k;
    s.right = f.h;
    std::vector<std::pair<int, int>> entries;
    for (int a : f.h) entries.push_back({a, g.mul(g.mul(g.inv(f.g), a), f.g)});
    std::sort(entries.begin(), entries.end());
    for (auto& [a, b] : entries) {
        s.domain.push_back(a);
        s.fmap.push_back(b);
    }
    out.add(canonical_biset(g, s), 1);
    return out;
}

BisetMorphism j_upper(const Group& g, const CosetMapData& f) { return tau(j_lower(g, f)); }

PermBisetProduct perm_biset_product(const Group& g, const Elems& k, const BisetShape& x) {
    if (x.left != x.right) throw Error(Error::Input, "perm product needs an (H,H)-biset");
    if (!subset_of(k, x.left)) throw Error(Error::Input, "K must sit inside H");
    const Elems& h = x.left;
    MaterializedBiset mx = materialize_biset(g, x);
    auto reps = left_coset_reps(g, h, k);
    std::map<int, int> coset_of;  // element of h -> coset index
    for (size_t r = 0; r < reps.size(); ++r)
        for (int a : k) coset_of[g.mul(reps[r], a)] = (int)r;
    int nc = (int)reps.size();
    MaterializedBiset prod;
    prod.g = &g;
    prod.left = h;
    prod.right = h;
    prod.n = nc * mx.n;
    prod.lact.resize(h.size() * prod.n);
    prod.ract.resize(h.size() * prod.n);
    for (size_t i = 0; i < h.size(); ++i)
        for (int p = 0; p < prod.n; ++p) {
            int c = p / mx.n, q = p % mx.n;
            prod.lact[i * prod.n + p] =
                coset_of.at(g.mul(h[i], reps[c])) * mx.n + mx.lapply((int)i, q);
            prod.ract[i * prod.n + p] = c * mx.n + mx.rapply(q, (int)i);
        }
    BisetDecomposition dec = decompose_biset(prod);
    PermBisetProduct out;
    out.morphism = biset_zero(g, h, h);
    for (const auto& s : dec.orbits) out.morphism.add(s, 1);
    out.rejected_sizes = dec.non_bifree_sizes;
    return out;
}

std::vector<BisetShape> all_transitive_bisets(const Group& g, const Elems& left, const Elems& right) {
    const SubgroupData& sd = g.subgroups();
    std::set<BisetShape> out;
    for (const auto& a : sd.sub) {
        if (!subset_of(a, right)) continue;
        // enumerate monomorphisms a -> left by choosing compatible images of a
        // small generating sequence
        std::vector<int> gens;
        Elems have = {0};
        for (int x : a) {
            if (std::binary_search(have.begin(), have.end(), x)) continue;
            gens.push_back(x);
            Elems seed = have;
            seed.push_back(x);
            have = closure(g, seed);
            if (have == a) break;
        }
        std::vector<std::vector<int>> cand(gens.size());
        for (size_t i = 0; i < gens.size(); ++i) {
            int o = g.element_order(gens[i]);
            for (int y : left)
                if (g.element_order(y) == o) cand[i].push_back(y);
        }
        std::vector<size_t> idx(gens.size(), 0);
        if (gens.empty()) {
            BisetShape s;
            s.left = left;
            s.right = right;
            s.domain = a;
            s.fmap = {g.id()};
            out.insert(canonical_biset(g, s));
            continue;
        }
        for (;;) {
            // try to build the homomorphism generated by gens[i] -> cand[i][idx[i]]
            std::map<int, int> f = {{0, 0}};
            std::vector<int> frontier = {0};
            bool ok = true;
            for (size_t i = 0; i < gens.size() && ok; ++i) {
                if (f.count(gens[i])) {
                    if (f[gens[i]] != cand[i][idx[i]]) ok = false;
                    continue;
                }
                f[gens[i]] = cand[i][idx[i]];
            }
            if (ok) {
                // close under multiplication
                bool grew = true;
                while (grew && ok) {
                    grew = false;
                    std::vector<std::pair<int, int>> items(f.begin(), f.end());
                    for (auto& [a1, b1] : items)
                        for (auto& [a2, b2] : items) {
                            int aa = g.mul(a1, a2), bb = g.mul(b1, b2);
                            auto it = f.find(aa);
                            if (it == f.end()) {
                                f[aa] = bb;
                                grew = true;
                            } else if (it->second != bb) {
                                ok = false;
                            }
                        }
                }
                if (ok && (int)f.size() == (int)a.size()) {
                    std::set<int> img;
                    for (auto& [kk, vv] : f) img.insert(vv);
                    if ((int)img.size() == (int)a.size()) {
                        BisetShape s;
                        s.left = left;
                        s.right = right;
                        for (auto& [kk, vv] : f) {
                            s.domain.push_back(kk);
                            s.fmap.push_back(vv);
                        }
                        out.insert(canonical_biset(g, s));
                    }
                }
            }
            size_t kpos = gens.size();
            bool done = false;
            while (kpos > 0) {
                --kpos;
                if (++idx[kpos] < cand[kpos].size()) break;
                idx[kpos] = 0;
                if (kpos == 0) done = true;
            }
            if (done) break;
        }
    }
    return {out.begin(), out.end()};
}

IntMat biset_fixture_matrix(const Group& g, const BisetShape& s) {
    const SubgroupData& sd = g.subgroups();
    const auto& lc_right = sd.local_classes(s.right);
    const auto& lc_left = sd.local_classes(s.left);
    IntMat out((int)lc_left.reps.size(), (int)lc_right.reps.size());
    MaterializedBiset mx = materialize_biset(g, s);
    for (size_t col = 0; col < lc_right.reps.size(); ++col) {
        const Elems& j = lc_right.reps[col];
        // X x_{H1} (H1/J) as a left H2-set
        auto reps = left_coset_reps(g, s.right, j);
        std::map<int, int> coset_of;
        for (size_t r = 0; r < reps.size(); ++r)
            for (int a : j) coset_of[g.mul(reps[r], a)] = (int)r;
        int nc = (int)reps.size();
        // classes of (p, c) under (p . h1, c) ~ (p, h1 c)
        auto canon = [&](int p, int c) {
            std::pair<int, int> best{p, c};
            for (size_t i = 0; i < s.right.size(); ++i) {
                int p2 = mx.rapply(p, (int)i);
                int c2 = coset_of.at(g.mul(g.inv(s.right[i]), reps[c]));
                std::pair<int, int> cand{p2, c2};
                if (cand < best) best = cand;
            }
            return best;
        };
        std::map<std::pair<int, int>, int> id_of;
        std::vector<std::pair<int, int>> pts;
        for (int p = 0; p < mx.n; ++p)
            for (int c = 0; c < nc; ++c) {
                auto cc = canon(p, c);
                if (!id_of.count(cc)) {
                    id_of[cc] = (int)pts.size();
                    pts.push_back(cc);
                }
            }
        // left H2 orbits
        std::vector<char> seen(pts.size(), 0);
        for (size_t p0 = 0; p0 < pts.size(); ++p0) {
            if (seen[p0]) continue;
            std::vector<int> orbit = {(int)p0};
            seen[p0] = 1;
            Elems stab;
            for (size_t k2 = 0; k2 < orbit.size(); ++k2)
                for (size_t i = 0; i < s.left.size(); ++i) {
                    auto moved = canon(mx.lapply((int)i, pts[orbit[k2]].first), pts[orbit[k2]].second);
                    int q = id_of.at(moved);
                    if (!seen[q]) {
                        seen[q] = 1;
                        orbit.push_back(q);
                    }
                }
            for (size_t i = 0; i < s.left.size(); ++i) {
                auto moved = canon(mx.lapply((int)i, pts[p0].first), pts[p0].second);
                if (id_of.at(moved) == (int)p0) stab.push_back(s.left[i]);
            }
            auto it = lc_left.index_by_subgroup.find(stab);
            if (it == lc_left.index_by_subgroup.end())
                throw Error(Error::Internal, "stabilizer is not a subgroup of the left group");
            out.at(it->second, (int)col) += 1;
        }
    }
    return out;
}

namespace {

class MackeyViaJ : public MackeyFunctor {
  public:
    explicit MackeyViaJ(const Group& g) : MackeyFunctor(g, "viaj", false) {}

  protected:
    AbGroup compute_value(const Elems& h) const override {
        return AbGroup::free_group((int)group().subgroups().local_classes(h).reps.size());
    }
    IntMat compute_cov(const CosetMapData& f) const override {
        BisetMorphism m = j_lower(group(), f);
        return apply_morphism(m);
    }
    IntMat compute_contra(const CosetMapData& f) const override {
        BisetMorphism m = j_upper(group(), f);
        return apply_morphism(m);
    }

  private:
    IntMat apply_morphism(const BisetMorphism& m) const {
        const SubgroupData& sd = group().subgroups();
        int rows = (int)sd.local_classes(m.left).reps.size();
        int cols = (int)sd.local_classes(m.right).reps.size();
        IntMat out(rows, cols);
        for (const auto& [s, c] : m.terms) out = out + biset_fixture_matrix(group(), s).scaled(c);
        return out;
    }
};

}  // namespace

MackeyPtr mackey_via_j_functor(const Group& g) { return std::make_shared<MackeyViaJ>(g); }

}  // namespace burnside
