#include "burnside/repair.hpp"

#include <algorithm>

namespace burnside {

namespace {

IntMat mod_reduce(const IntMat& m, const Int& mod) { return mod == 0 ? m : m.reduced_mod(mod); }

bool is_zero_mod(const IntMat& m, const Int& mod) {
    if (mod == 0) return m.is_zero();
    return m.reduced_mod(mod).is_zero();
}

bool is_identity_mod(const IntMat& m, const Int& mod) {
    return is_zero_mod(m - IntMat::identity(m.rows()), mod);
}

// matrix of the map induced on F_i / F_{i+1}, given bases of the two levels
IntMat graded_block(const IntMat& map, const IntMat& bi_src, const IntMat& bi_dst) {
    std::vector<IntVec> cols;
    for (int j = 0; j < bi_src.cols(); ++j) {
        auto c = lattice_coords(bi_dst, map.apply(bi_src.col(j)));
        if (!c) throw Error(Error::Input, "map does not preserve the filtration");
        cols.push_back(*c);
    }
    return cols.empty() ? IntMat(bi_dst.cols(), 0) : IntMat::from_cols(cols);
}

struct FiltrationView {
    // basis[r][i] = basis of F_i C_r with i = 0 the full lattice; one extra
    // implicit zero level at the end
    std::vector<std::vector<IntMat>> basis;
    int depth;  // number of stored proper levels
};

FiltrationView view_filtration(const ChainData& c) {
    if (c.filt.empty()) throw Error(Error::Input, "repair requires a filtration");
    FiltrationView v;
    v.depth = 0;
    for (int r = 0; r <= c.max_degree; ++r) v.depth = std::max(v.depth, (int)c.filt[r].size());
    for (int r = 0; r <= c.max_degree; ++r) {
        std::vector<IntMat> levels;
        levels.push_back(IntMat::identity(c.rank(r)));
        for (const auto& b : c.filt[r]) levels.push_back(hnf_cols(b));
        while ((int)levels.size() < v.depth + 1) levels.push_back(IntMat(c.rank(r), 0));
        v.basis.push_back(std::move(levels));
    }
    return v;
}

void check_preserves(const std::vector<IntMat>& maps, const FiltrationView& v, bool down,
                     const std::string& what, int lo, int hi) {
    // down: map[r]: C_r -> C_{r-1}; up: map[r]: C_r -> C_{r+1}
    for (int r = lo; r <= hi; ++r) {
        int to = down ? r - 1 : r + 1;
        for (int i = 1; i <= v.depth; ++i) {
            const IntMat& bi = v.basis[r][i];
            for (int j = 0; j < bi.cols(); ++j)
                if (!lattice_contains(v.basis[to][i], maps[r].apply(bi.col(j))))
                    throw Error(Error::Input, what + " does not preserve the filtration at degree " +
                                                  std::to_string(r));
        }
    }
}

// graded piece F_i/F_{i+1}: returns presentation relations (next level in this
// level's coordinates)
IntMat graded_rels(const FiltrationView& v, int r, int i) {
    const IntMat& cur = v.basis[r][i];
    const IntMat& nxt = (i + 1 < (int)v.basis[r].size()) ? v.basis[r][i + 1]
                                                         : IntMat(cur.rows(), 0);
    std::vector<IntVec> cols;
    for (int j = 0; j < nxt.cols(); ++j) {
        auto c = lattice_coords(cur, nxt.col(j));
        if (!c) throw Error(Error::Input, "filtration levels are not nested");
        cols.push_back(*c);
    }
    return cols.empty() ? IntMat(cur.cols(), 0) : IntMat::from_cols(cols);
}

void check_graded_contracted(const ChainData& c, const FiltrationView& v) {
    for (int i = 0; i <= v.depth; ++i) {
        // assemble graded maps in level-i coordinates
        std::vector<IntMat> gd(c.max_degree + 1), gs(c.max_degree);
        std::vector<AbGroup> gg;
        for (int r = 0; r <= c.max_degree; ++r)
            gg.push_back(AbGroup((int)v.basis[r][i].cols(), graded_rels(v, r, i)));
        for (int r = 1; r <= c.max_degree; ++r)
            gd[r] = graded_block(c.d[r], v.basis[r][i], v.basis[r - 1][i]);
        for (int r = 0; r < c.max_degree; ++r)
            gs[r] = graded_block(c.s[r], v.basis[r][i], v.basis[r + 1][i]);
        for (int r = 1; r + 1 <= c.max_degree; ++r)
            if (!maps_equal_mod(gd[r] * gd[r + 1], IntMat::zero(gg[r - 1].gens, gg[r + 1].gens),
                                gg[r - 1]))
                throw Error(Error::Input, "graded piece is not a complex (level " +
                                              std::to_string(i) + ", degree " + std::to_string(r) +
                                              ")");
        for (int r = 0; r + 1 <= c.max_degree; ++r) {
            IntMat lhs = gd[r + 1] * gs[r];
            if (r > 0) lhs = lhs + gs[r - 1] * gd[r];
            if (!maps_equal_mod(lhs, IntMat::identity(gg[r].gens), gg[r]))
                throw Error(Error::Input, "graded piece is not contracted (level " +
                                              std::to_string(i) + ", degree " + std::to_string(r) +
                                              ")");
        }
    }
}

RepairResult run_induction(const ChainData& c, int nilpotency_cap, const Int& mod) {
    int n = c.max_degree;
    RepairResult out;
    out.modulus = mod;
    out.dprime.assign(n + 1, IntMat());
    for (int r = 1; r <= n; ++r) out.dprime[r] = mod_reduce(c.d[r], mod);
    out.sprime.assign(n, IntMat());
    for (int r = 0; r < n; ++r) out.sprime[r] = mod_reduce(c.s[r], mod);

    for (int r = 0; r < n; ++r) {
        if (r + 1 <= n && r >= 1) {
            IntMat corr = out.sprime[r - 1] * out.dprime[r] * out.dprime[r + 1];
            out.dprime[r + 1] = mod_reduce(out.dprime[r + 1] - corr, mod);
        }
        IntMat psi = out.dprime[r + 1] * out.sprime[r];
        if (r >= 1) psi = psi + out.sprime[r - 1] * out.dprime[r];
        psi = mod_reduce(psi, mod);
        IntMat u = psi - IntMat::identity(psi.rows());
        // invert psi = 1 + u by the finite geometric series
        IntMat upow = u;
        IntMat inv = IntMat::identity(psi.rows());
        int idx = 1;
        while (!is_zero_mod(upow, mod)) {
            inv = mod_reduce(inv + (idx % 2 == 1 ? -upow : upow), mod);
            upow = mod_reduce(upow * u, mod);
            ++idx;
            if (idx > nilpotency_cap)
                throw Error(Error::Input,
                            "homotopy defect is not nilpotent (invalid filtration data)");
        }
        out.sprime[r] = mod_reduce(out.sprime[r] * inv, mod);
    }

    // certificate
    auto note = [&](const std::string& s) { out.certificate.push_back(s); };
    if (is_zero_mod(out.dprime[1] - mod_reduce(c.d[1], mod), mod)) note("d'[1] = d[1]");
    for (int r = 1; r + 1 <= n; ++r) {
        if (!is_zero_mod(out.dprime[r] * out.dprime[r + 1], mod))
            throw Error(Error::Internal, "repair failed: d'd' != 0 at " + std::to_string(r));
        note("d'[" + std::to_string(r) + "] d'[" + std::to_string(r + 1) + "] = 0");
    }
    for (int r = 0; r + 1 <= n; ++r) {
        IntMat lhs = out.dprime[r + 1] * out.sprime[r];
        if (r >= 1) lhs = lhs + out.sprime[r - 1] * out.dprime[r];
        if (!is_identity_mod(mod_reduce(lhs, mod), mod))
            throw Error(Error::Internal, "repair failed: contraction identity at " + std::to_string(r));
        if (r == 0)
            note("d'[1] s'[0] = 1");
        else
            note("s'[" + std::to_string(r - 1) + "] d'[" + std::to_string(r) + "] + d'[" +
                 std::to_string(r + 1) + "] s'[" + std::to_string(r) + "] = 1");
    }
    for (int r = 1; r + 1 <= n; ++r) {
        IntMat lhs = out.dprime[r + 1] * out.sprime[r] * out.dprime[r + 1];
        if (!is_zero_mod(lhs - out.dprime[r + 1], mod))
            throw Error(Error::Internal, "repair failed: d' s' d' = d' at " + std::to_string(r + 1));
        note("d'[" + std::to_string(r + 1) + "] s'[" + std::to_string(r) + "] d'[" +
             std::to_string(r + 1) + "] = d'[" + std::to_string(r + 1) + "]");
    }
    for (int r = 1; r <= n; ++r)
        if (!is_zero_mod(out.dprime[r] - mod_reduce(c.d[r], mod), mod)) out.changed_degrees.push_back(r);
    for (int r = 0; r < n; ++r)
        if (!is_zero_mod(out.sprime[r] - mod_reduce(c.s[r], mod), mod) &&
            std::find(out.changed_degrees.begin(), out.changed_degrees.end(), r) ==
                out.changed_degrees.end())
            out.changed_degrees.push_back(r);
    std::sort(out.changed_degrees.begin(), out.changed_degrees.end());
    out.changed_degrees.erase(std::unique(out.changed_degrees.begin(), out.changed_degrees.end()),
                              out.changed_degrees.end());
    return out;
}

}  // namespace

RepairResult repair_pseudo_complex(const ChainData& c) {
    if (c.cochain) throw Error(Error::Usage, "repair operates on the chain variant");
    if (!c.has_contraction()) throw Error(Error::Input, "repair requires a pseudo-contraction");
    FiltrationView v = view_filtration(c);
    check_preserves(c.d, v, true, "boundary", 1, c.max_degree);
    check_preserves(c.s, v, false, "homotopy", 0, c.max_degree - 1);
    check_graded_contracted(c, v);
    return run_induction(c, v.depth + 2, 0);
}

RepairResult repair_filtered_truncated(const ChainData& c, int k) {
    if (c.cochain) throw Error(Error::Usage, "repair operates on the chain variant");
    if (!c.has_contraction()) throw Error(Error::Input, "repair requires a pseudo-contraction");
    if (k < 1) throw Error(Error::Usage, "truncation exponent must be >= 1");
    // graded pieces of the two-power filtration: all identities must hold mod 2
    for (int r = 1; r + 1 <= c.max_degree; ++r)
        if (!is_zero_mod(c.d[r] * c.d[r + 1], 2))
            throw Error(Error::Input, "graded pieces are not complexes mod 2");
    for (int r = 0; r + 1 <= c.max_degree; ++r) {
        IntMat lhs = c.d[r + 1] * c.s[r];
        if (r >= 1) lhs = lhs + c.s[r - 1] * c.d[r];
        if (!is_identity_mod(mod_reduce(lhs, 2), 2))
            throw Error(Error::Input, "graded pieces are not contracted mod 2");
    }
    Int mod = 1;
    for (int i = 0; i < k; ++i) mod *= 2;
    return run_induction(c, k + 2, mod);
}

}  // namespace burnside
