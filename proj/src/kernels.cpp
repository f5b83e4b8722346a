#include "burnside/kernels.hpp"

#include "burnside/caps.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace burnside {

namespace {
ExecMode g_mode = ExecMode::Parallel;
}

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

ExecMode default_exec_mode() { return g_mode; }
void set_default_exec_mode(ExecMode m) { g_mode = m; }

void parallel_for(long n, const std::function<void(long)>& fn, ExecMode mode) {
    if (mode == ExecMode::Auto) mode = g_mode;
#ifdef _OPENMP
    if (mode == ExecMode::Parallel && n > 1) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
#endif
    for (long i = 0; i < n; ++i) fn(i);
}

namespace {

// one extension round: close H together with one new coset representative
std::vector<Elems> extend_round(const Group& g, const std::vector<Elems>& frontier,
                                const std::set<Elems>& known, ExecMode mode) {
    std::vector<std::vector<Elems>> found(frontier.size());
    parallel_for(
        (long)frontier.size(),
        [&](long i) {
            const Elems& h = frontier[i];
            std::vector<char> in(g.order(), 0);
            for (int x : h) in[x] = 1;
            std::vector<char> coset_seen(g.order(), 0);
            for (int x = 0; x < g.order(); ++x) {
                if (in[x] || coset_seen[x]) continue;
                for (int a : h) coset_seen[g.mul(x, a)] = 1;
                Elems seed = h;
                seed.push_back(x);
                found[i].push_back(closure(g, seed));
            }
        },
        mode);
    std::set<Elems> fresh;
    for (auto& lst : found)
        for (auto& k : lst)
            if (!known.count(k)) fresh.insert(std::move(k));
    return {fresh.begin(), fresh.end()};
}

}  // namespace

std::vector<Elems> enumerate_subgroups(const Group& g, ExecMode mode) {
    std::set<Elems> known;
    known.insert(Elems{0});
    for (int x = 1; x < g.order(); ++x) known.insert(closure(g, {x}));
    std::vector<Elems> frontier(known.begin(), known.end());
    while (!frontier.empty()) {
        if ((int)known.size() > caps().subgroup_count)
            throw Error(Error::Cap, "subgroup count exceeds cap " + std::to_string(caps().subgroup_count));
        frontier = extend_round(g, frontier, known, mode);
        for (const auto& k : frontier) known.insert(k);
    }
    std::vector<Elems> out(known.begin(), known.end());
    std::sort(out.begin(), out.end(), [](const Elems& a, const Elems& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

IntMat table_of_marks(const Group& g, ExecMode mode) {
    const SubgroupData& sd = g.subgroups();
    int n = (int)sd.classes.size();
    IntMat tom(n, n);
    parallel_for(
        (long)n * n,
        [&](long t) {
            int i = (int)(t / n), j = (int)(t % n);
            tom.at(i, j) = fixed_coset_count(*sd.g, sd.rep_elems(j), sd.rep_elems(i));
        },
        mode);
    return tom;
}

}  // namespace burnside
