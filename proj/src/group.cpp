#include "burnside/group.hpp"

#include "burnside/caps.hpp"
#include "burnside/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace burnside {

Group::Group(std::string name, int order, std::vector<int> mult, std::vector<std::string> labels)
    : name_(std::move(name)), n_(order), mult_(std::move(mult)), labels_(std::move(labels)) {
    if (n_ <= 0 || (int)mult_.size() != n_ * n_) throw Error(Error::Shape, "bad multiplication table");
    if (n_ > caps().group_order)
        throw Error(Error::Cap, "group order " + std::to_string(n_) + " exceeds cap " +
                                    std::to_string(caps().group_order));
    for (int v : mult_)
        if (v < 0 || v >= n_) throw Error(Error::Input, "table entry out of range");
    // identity must be element 0
    for (int a = 0; a < n_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a) throw Error(Error::Input, "element 0 is not an identity");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) inv_[a] = b;
    for (int a = 0; a < n_; ++a) {
        if (inv_[a] < 0) throw Error(Error::Input, "missing inverse");
        if (mul(inv_[a], a) != 0) throw Error(Error::Input, "one-sided inverse");
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw Error(Error::Input, "multiplication table is not associative");
    if (labels_.empty()) {
        labels_.resize(n_);
        for (int a = 0; a < n_; ++a) labels_[a] = "g" + std::to_string(a);
    }
    if ((int)labels_.size() != n_) throw Error(Error::Shape, "label count mismatch");
}

Group::~Group() = default;

int Group::element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

int Group::element_p_part(int a, int p) const {
    int o = element_order(a), pp = 1;
    while (o % p == 0) {
        o /= p;
        pp *= p;
    }
    return pp;
}

const SubgroupData& Group::subgroups() const {
    if (!sdata_) sdata_ = build_subgroup_data(*this);
    return *sdata_;
}

// ---- permutations ----

namespace {

using Perm = std::vector<int>;

Perm perm_compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

std::string cycle_label(const Perm& p) {
    std::ostringstream os;
    std::vector<char> seen(p.size(), 0);
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == (int)i) continue;
        any = true;
        os << "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            os << (first ? "" : " ") << (j + 1);
            first = false;
            j = p[j];
        }
        os << ")";
    }
    return any ? os.str() : "e";
}

Group group_from_perms(const std::string& name, const std::vector<Perm>& gens, int degree) {
    std::set<Perm> seen;
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    seen.insert(id);
    std::vector<Perm> todo = {id};
    for (const auto& g : gens)
        if (seen.insert(g).second) todo.push_back(g);
    while (!todo.empty()) {
        Perm cur = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            for (Perm prod : {perm_compose(cur, g), perm_compose(g, cur)}) {
                if (seen.insert(prod).second) {
                    if ((int)seen.size() > caps().group_order)
                        throw Error(Error::Cap, "generated group exceeds order cap " +
                                                    std::to_string(caps().group_order));
                    todo.push_back(prod);
                }
            }
        }
    }
    std::vector<Perm> elems(seen.begin(), seen.end());  // lexicographic; identity first
    std::map<Perm, int> idx;
    for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = (int)i;
    int n = (int)elems.size();
    std::vector<int> table((size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[(size_t)a * n + b] = idx.at(perm_compose(elems[a], elems[b]));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) labels[a] = cycle_label(elems[a]);
    return Group(name, n, std::move(table), std::move(labels));
}

std::vector<Perm> parse_cycles(const std::string& text, int& degree) {
    std::vector<std::vector<std::vector<int>>> gens_cycles;
    degree = std::max(degree, 1);
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        std::vector<std::vector<int>> cycles;
        size_t i = 0;
        while (i < part.size()) {
            if (std::isspace((unsigned char)part[i])) {
                ++i;
                continue;
            }
            if (part[i] != '(') throw Error(Error::Usage, "expected '(' in cycle notation: " + part);
            size_t j = part.find(')', i);
            if (j == std::string::npos) throw Error(Error::Usage, "unbalanced cycle: " + part);
            std::string inner = part.substr(i + 1, j - i - 1);
            for (auto& ch : inner)
                if (ch == ',') ch = ' ';
            std::stringstream cs(inner);
            std::vector<int> cyc;
            int v;
            while (cs >> v) {
                if (v < 1) throw Error(Error::Usage, "cycle points are 1-based");
                degree = std::max(degree, v);
                cyc.push_back(v - 1);
            }
            if (cyc.size() > 1) cycles.push_back(cyc);
            i = j + 1;
        }
        gens_cycles.push_back(cycles);
    }
    std::vector<Perm> gens;
    for (const auto& cycles : gens_cycles) {
        Perm p(degree);
        std::iota(p.begin(), p.end(), 0);
        for (const auto& cyc : cycles) {
            // the cycle (a b c) sends a->b, b->c, c->a
            for (size_t k = 0; k < cyc.size(); ++k) {
                std::set<int> distinct(cyc.begin(), cyc.end());
                if (distinct.size() != cyc.size()) throw Error(Error::Usage, "repeated point in cycle");
                p[cyc[k]] = cyc[(k + 1) % cyc.size()];
            }
        }
        gens.push_back(p);
    }
    return gens;
}

Perm n_cycle(int n, int degree, int offset = 0) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    for (int i = 0; i < n; ++i) p[offset + i] = offset + (i + 1) % n;
    return p;
}

Group make_q8() {
    // elements 1, -1, i, -i, j, -j, k, -k
    // encode as (axis, sign): 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    auto pack = [](int axis, int neg) { return axis == 0 ? (neg ? 1 : 0) : 2 * axis + (neg ? 1 : 0); };
    auto axis_of = [](int e) { return e < 2 ? 0 : e / 2; };
    auto neg_of = [](int e) { return e < 2 ? e : e % 2; };
    // quaternion multiplication on axes 1,i,j,k
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // sg[a][b]: extra sign of basis product e_a * e_b (i*j=k, j*i=-k, i*i=-1, ...)
    static const int sg_fix[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    (void)sg;
    std::vector<int> table(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int aa = axis_of(a), ab = axis_of(b);
            int axr = ax[aa][ab];
            int neg = (neg_of(a) ^ neg_of(b)) ^ sg_fix[aa][ab];
            table[a * 8 + b] = pack(axr, neg);
        }
    std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return Group("Q8", 8, std::move(table), std::move(labels));
}

}  // namespace

Group group_from_spec(const std::string& spec_in) {
    std::string spec = spec_in;
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    spec = strip(spec);
    if (spec.empty()) throw Error(Error::Usage, "empty group spec");
    if (spec.find('(') != std::string::npos) {
        int degree = 1;
        auto gens = parse_cycles(spec, degree);
        return group_from_perms(spec, gens, degree);
    }
    auto num_after = [&](size_t pos) {
        if (pos >= spec.size()) throw Error(Error::Usage, "malformed group spec: " + spec);
        int v = 0;
        for (size_t i = pos; i < spec.size(); ++i) {
            if (!std::isdigit((unsigned char)spec[i])) throw Error(Error::Usage, "malformed group spec: " + spec);
            v = v * 10 + (spec[i] - '0');
        }
        if (v <= 0) throw Error(Error::Usage, "malformed group spec: " + spec);
        return v;
    };
    char head = spec[0];
    if (spec == "Q8") return make_q8();
    if (head == 'E') {
        // E<p>^<k> elementary abelian
        size_t caret = spec.find('^');
        int p, k;
        if (caret == std::string::npos) {
            p = num_after(1);
            k = 1;
        } else {
            std::string ps = spec.substr(1, caret - 1);
            for (char c : ps)
                if (!std::isdigit((unsigned char)c)) throw Error(Error::Usage, "malformed group spec: " + spec);
            p = std::atoi(ps.c_str());
            k = num_after(caret + 1);
        }
        if (!is_prime(p)) throw Error(Error::Usage, "E<p>^<k> requires prime p");
        std::vector<Perm> gens;
        int degree = p * k;
        for (int i = 0; i < k; ++i) gens.push_back(n_cycle(p, degree, i * p));
        return group_from_perms(spec, gens, degree);
    }
    if (head == 'C') {
        int n = num_after(1);
        if (n == 1) return group_from_perms(spec, {}, 1);
        return group_from_perms(spec, {n_cycle(n, n)}, n);
    }
    if (head == 'D') {
        int n = num_after(1);  // dihedral of order 2n
        if (n == 1) return group_from_perms(spec, {n_cycle(2, 2)}, 2);
        if (n == 2) {
            int degree = 4;
            Perm a(degree), b(degree);
            std::iota(a.begin(), a.end(), 0);
            std::iota(b.begin(), b.end(), 0);
            std::swap(a[0], a[1]);
            std::swap(b[2], b[3]);
            return group_from_perms(spec, {a, b}, degree);
        }
        Perm rot = n_cycle(n, n);
        Perm ref(n);
        for (int i = 0; i < n; ++i) ref[i] = (n - i) % n;
        return group_from_perms(spec, {rot, ref}, n);
    }
    if (head == 'S') {
        int n = num_after(1);
        if (n > 5) throw Error(Error::Usage, "Sn supported for n <= 5");
        if (n == 1) return group_from_perms(spec, {}, 1);
        Perm t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        return group_from_perms(spec, {t, n_cycle(n, n)}, n);
    }
    if (head == 'A') {
        int n = num_after(1);
        if (n > 5) throw Error(Error::Usage, "An supported for n <= 5");
        if (n <= 2) return group_from_perms(spec, {}, std::max(n, 1));
        std::vector<Perm> gens;
        Perm three(n);
        std::iota(three.begin(), three.end(), 0);
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        gens.push_back(three);
        if (n == 4) {
            Perm q(n);
            std::iota(q.begin(), q.end(), 0);
            q[1] = 2;
            q[2] = 3;
            q[3] = 1;
            gens.push_back(q);
        } else if (n == 5) {
            gens.push_back(n_cycle(5, 5));
        }
        return group_from_perms(spec, gens, n);
    }
    throw Error(Error::Usage, "unknown group spec: " + spec);
}

// ---- subgroup utilities ----

Elems closure(const Group& g, Elems seed) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> list;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            list.push_back(x);
        }
    };
    add(0);
    for (int x : seed) add(x);
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = 0; j < list.size(); ++j) {
            add(g.mul(list[i], list[j]));
        }
    // list may have grown during iteration; repeat until stable
    size_t last = 0;
    while (last != list.size()) {
        last = list.size();
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = 0; j < list.size(); ++j) add(g.mul(list[i], list[j]));
    }
    std::sort(list.begin(), list.end());
    return list;
}

bool subset_of(const Elems& a, const Elems& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_subgroup(const Group& g, const Elems& h) {
    if (h.empty() || h[0] != 0) return false;
    std::vector<char> in(g.order(), 0);
    for (int x : h) in[x] = 1;
    for (int a : h)
        for (int b : h)
            if (!in[g.mul(a, b)]) return false;
    return true;
}

Elems conjugate_subgroup(const Group& g, const Elems& h, int x) {
    Elems out;
    out.reserve(h.size());
    for (int a : h) out.push_back(g.conj(x, a));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_normal_in(const Group& g, const Elems& h, const Elems& in) {
    for (int x : in)
        if (conjugate_subgroup(g, h, x) != h) return false;
    return true;
}

Elems intersect_elems(const Elems& a, const Elems& b) {
    Elems out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Elems normalizer(const Group& g, const Elems& h) {
    Elems out;
    for (int x = 0; x < g.order(); ++x)
        if (conjugate_subgroup(g, h, x) == h) out.push_back(x);
    return out;
}

std::vector<int> left_coset_reps(const Group& g, const Elems& in, const Elems& h) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> reps;
    for (int x : in) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (int a : h) seen[g.mul(x, a)] = 1;
    }
    return reps;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

int SubgroupData::index_of(const Elems& h) const {
    auto it = sub_index.find(h);
    if (it == sub_index.end()) throw Error(Error::Internal, "unknown subgroup");
    return it->second;
}

int SubgroupData::class_of(const Elems& h) const { return cls[index_of(h)]; }

int SubgroupData::class_by_name(const std::string& name) const {
    if (!name.empty() && name[0] == '#') {
        int idx = std::atoi(name.c_str() + 1);
        if (idx < 0 || idx >= (int)classes.size()) throw Error(Error::Usage, "class index out of range: " + name);
        return idx;
    }
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].name == name) return (int)i;
    throw Error(Error::Usage, "unknown subgroup class: " + name);
}

const SubgroupData::LocalClasses& SubgroupData::local_classes(const Elems& within) const {
    auto it = local_cache_.find(within);
    if (it != local_cache_.end()) return it->second;
    LocalClasses lc;
    std::vector<Elems> members;
    for (const auto& s : sub)
        if (subset_of(s, within)) members.push_back(s);
    std::set<Elems> done;
    std::vector<Elems> reps;
    for (const auto& s : members) {
        if (done.count(s)) continue;
        Elems best = s;
        std::vector<Elems> orbit;
        for (int x : within) {
            Elems c = conjugate_subgroup(*g, s, x);
            orbit.push_back(c);
            if (c < best) best = c;
        }
        reps.push_back(best);
        for (auto& c : orbit) done.insert(std::move(c));
    }
    std::sort(reps.begin(), reps.end(), [](const Elems& a, const Elems& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    lc.reps = reps;
    for (const auto& s : members) {
        Elems best = s;
        for (int x : within) {
            Elems c = conjugate_subgroup(*g, s, x);
            if (c < best) best = c;
        }
        int idx = (int)(std::lower_bound(reps.begin(), reps.end(), best,
                                         [](const Elems& a, const Elems& b) {
                                             return a.size() != b.size() ? a.size() < b.size() : a < b;
                                         }) -
                        reps.begin());
        lc.index_by_subgroup[s] = idx;
    }
    return local_cache_.emplace(within, std::move(lc)).first->second;
}

std::unique_ptr<SubgroupData> build_subgroup_data(const Group& g) {
    auto sd = std::make_unique<SubgroupData>();
    sd->g = &g;
    sd->sub = enumerate_subgroups(g);
    for (size_t i = 0; i < sd->sub.size(); ++i) sd->sub_index[sd->sub[i]] = (int)i;

    int ns = (int)sd->sub.size();
    std::vector<int> cls_of(ns, -1);
    struct ClassAccum {
        Elems rep;
        std::vector<int> members;
    };
    std::vector<ClassAccum> acc;
    for (int i = 0; i < ns; ++i) {
        if (cls_of[i] >= 0) continue;
        std::set<int> orbit;
        Elems best = sd->sub[i];
        for (int x = 0; x < g.order(); ++x) {
            Elems c = conjugate_subgroup(g, sd->sub[i], x);
            int idx = sd->sub_index.at(c);
            orbit.insert(idx);
            if (c < best) best = c;
        }
        ClassAccum a;
        a.rep = best;
        a.members.assign(orbit.begin(), orbit.end());
        int cid = (int)acc.size();
        for (int m : a.members) cls_of[m] = cid;
        acc.push_back(std::move(a));
    }
    // sort classes by (order, canonical representative)
    std::vector<int> order(acc.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (acc[a].rep.size() != acc[b].rep.size()) return acc[a].rep.size() < acc[b].rep.size();
        return acc[a].rep < acc[b].rep;
    });
    std::vector<int> new_id(acc.size());
    for (size_t i = 0; i < order.size(); ++i) new_id[order[i]] = (int)i;
    sd->cls.resize(ns);
    for (int i = 0; i < ns; ++i) sd->cls[i] = new_id[cls_of[i]];
    sd->classes.resize(acc.size());
    for (size_t i = 0; i < order.size(); ++i) {
        const ClassAccum& a = acc[order[i]];
        SubgroupClassInfo info;
        info.rep = sd->sub_index.at(a.rep);
        info.members = a.members;
        std::sort(info.members.begin(), info.members.end());
        info.normalizer_order = (int)normalizer(g, a.rep).size();
        sd->classes[i] = std::move(info);
    }
    // display names: 1, C<n> for cyclic, V4 for the Klein class, G for the full
    // group, <order>x otherwise; letters disambiguate repeats
    std::vector<std::string> base(sd->classes.size());
    std::vector<char> always_letter(sd->classes.size(), 0);
    for (size_t i = 0; i < sd->classes.size(); ++i) {
        const Elems& rep = sd->sub[sd->classes[i].rep];
        int o = (int)rep.size();
        if (o == 1) {
            base[i] = "1";
            continue;
        }
        if (o == g.order()) {
            base[i] = "G";
            continue;
        }
        bool cyclic = false;
        for (int x : rep)
            if (g.element_order(x) == o) cyclic = true;
        if (cyclic) {
            base[i] = "C" + std::to_string(o);
        } else if (o == 4) {
            base[i] = "V4";
        } else {
            base[i] = std::to_string(o);
            always_letter[i] = 1;
        }
    }
    std::map<std::string, int> repeats;
    for (const auto& b : base) repeats[b]++;
    std::map<std::string, int> counter;
    for (size_t i = 0; i < base.size(); ++i) {
        std::string name = base[i];
        if (repeats[name] > 1 || always_letter[i]) name += (char)('a' + counter[base[i]]++);
        sd->classes[i].name = name;
    }
    // class incidence
    int nc = (int)sd->classes.size();
    sd->leq.assign(nc, std::vector<char>(nc, 0));
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = 0; c2 < nc; ++c2) {
            const Elems& rep2 = sd->sub[sd->classes[c2].rep];
            for (int m : sd->classes[c1].members)
                if (subset_of(sd->sub[m], rep2)) {
                    sd->leq[c1][c2] = 1;
                    break;
                }
        }
    return sd;
}

const SubgroupData::CosetTable& SubgroupData::coset_table(int cls_idx) const {
    auto it = coset_cache_.find(cls_idx);
    if (it != coset_cache_.end()) return it->second;
    const Elems& r = rep_elems(cls_idx);
    CosetTable t;
    t.pos_of_elem.assign(g->order(), -1);
    for (int x = 0; x < g->order(); ++x) {
        if (t.pos_of_elem[x] >= 0) continue;
        int pos = (int)t.rep_of_pos.size();
        t.rep_of_pos.push_back(x);  // x is minimal in its coset (ascending scan)
        for (int a : r) t.pos_of_elem[g->mul(x, a)] = pos;
    }
    return coset_cache_.emplace(cls_idx, std::move(t)).first->second;
}

Elems o_p(const Group& g, const Elems& h, int p) {
    if (!is_prime(p)) throw Error(Error::Usage, "o_p requires a prime");
    Elems gens;
    for (int x : h) {
        int pp = g.element_p_part(x, p);
        int y = x;
        for (int i = 1; i < pp; ++i) y = g.mul(y, x);  // y = x^pp, a p'-element
        gens.push_back(y);
    }
    Elems out = closure(g, gens);
    if (!subset_of(out, h)) throw Error(Error::Internal, "o_p left the subgroup");
    return out;
}

bool is_p_hyperelementary(const Group& g, const Elems& h, int p) {
    if (!is_prime(p)) throw Error(Error::Usage, "prime required");
    if (h.size() == 1) return true;
    std::set<Elems> cyclics;
    for (int x : h) cyclics.insert(closure(g, {x}));
    for (const auto& c : cyclics) {
        if ((int)c.size() % p == 0) continue;
        int index = (int)h.size() / (int)c.size();
        int q = index;
        while (q % p == 0) q /= p;
        if (q != 1) continue;
        if (is_normal_in(g, c, h)) return true;
    }
    return false;
}

bool is_p_elementary(const Group& g, const Elems& h, int p) {
    if (!is_prime(p)) throw Error(Error::Usage, "prime required");
    if (h.size() == 1) return true;
    Elems pprime, ppart;
    for (int x : h) {
        int o = g.element_order(x);
        bool isp = true;
        int oo = o;
        while (oo % p == 0) oo /= p;
        isp = (oo == 1);
        if (isp) ppart.push_back(x);
        if (o % p != 0) pprime.push_back(x);
    }
    Elems c = closure(g, pprime);
    Elems q = closure(g, ppart);
    if ((int)c.size() % p == 0 && c.size() > 1) return false;
    int hp = (int)h.size();
    int p_part_order = 1;
    while (hp % p == 0) {
        hp /= p;
        p_part_order *= p;
    }
    if ((int)q.size() != p_part_order) return false;
    if ((long)c.size() * (long)q.size() != (long)h.size()) return false;
    // c must be cyclic
    for (int x : c)
        if (g.element_order(x) == (int)c.size()) return true;
    return c.size() == 1;
}

bool is_hyperelementary(const Group& g, const Elems& h) {
    if (h.size() == 1) return true;
    for (int p : prime_divisors((int)h.size()))
        if (is_p_hyperelementary(g, h, p)) return true;
    return false;
}

int fixed_coset_count(const Group& g, const Elems& h, const Elems& k) {
    Elems all(g.order());
    std::iota(all.begin(), all.end(), 0);
    auto reps = left_coset_reps(g, all, k);
    std::vector<char> in_k(g.order(), 0);
    for (int x : k) in_k[x] = 1;
    int count = 0;
    for (int x : reps) {
        bool fixed = true;
        int xi = g.inv(x);
        for (int a : h) {
            if (!in_k[g.mul(g.mul(xi, a), x)]) {
                fixed = false;
                break;
            }
        }
        if (fixed) ++count;
    }
    return count;
}

}  // namespace burnside
