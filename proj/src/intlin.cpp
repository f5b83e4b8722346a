#include "burnside/intlin.hpp"

#include "burnside/caps.hpp"

#include <algorithm>
#include <sstream>

namespace burnside {

namespace {
Caps g_caps = Caps::from_env();
}

const Caps& caps() { return g_caps; }
void set_caps(const Caps& c) { g_caps = c; }

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
    int r = (int)rows.size();
    int c = r ? (int)rows[0].size() : 0;
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if ((int)rows[i].size() != c) throw Error(Error::Shape, "ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::from_cols(const std::vector<IntVec>& cols) {
    int c = (int)cols.size();
    int r = c ? (int)cols[0].size() : 0;
    IntMat m(r, c);
    for (int j = 0; j < c; ++j) {
        if ((int)cols[j].size() != r) throw Error(Error::Shape, "ragged column list");
        for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

bool IntMat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (c_ != o.r_) throw Error(Error::Shape, "matrix product shape mismatch");
    IntMat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j) {
                if (o.at(k, j) != 0) out.at(i, j) += x * o.at(k, j);
            }
        }
    return out;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error(Error::Shape, "matrix sum shape mismatch");
    IntMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error(Error::Shape, "matrix diff shape mismatch");
    IntMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

IntMat IntMat::operator-() const {
    IntMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

IntMat IntMat::scaled(const Int& k) const {
    IntMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * k;
    return out;
}

IntVec IntMat::apply(const IntVec& v) const {
    if ((int)v.size() != c_) throw Error(Error::Shape, "matrix-vector shape mismatch");
    IntVec out(r_);
    for (int i = 0; i < r_; ++i) {
        Int s = 0;
        for (int j = 0; j < c_; ++j)
            if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

IntMat IntMat::transposed() const {
    IntMat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntVec IntMat::col(int j) const {
    IntVec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

IntVec IntMat::row(int i) const {
    IntVec v(c_);
    for (int j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

void IntMat::set_col(int j, const IntVec& v) {
    if ((int)v.size() != r_) throw Error(Error::Shape, "set_col shape mismatch");
    for (int i = 0; i < r_; ++i) at(i, j) = v[i];
}

IntMat IntMat::hstack(const IntMat& a, const IntMat& b) {
    if (a.cols() == 0 && a.rows() == 0) return b;
    if (b.cols() == 0 && b.rows() == 0) return a;
    if (a.rows() != b.rows()) throw Error(Error::Shape, "hstack row mismatch");
    IntMat out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

IntMat IntMat::vstack(const IntMat& a, const IntMat& b) {
    if (a.rows() == 0 && a.cols() == 0) return b;
    if (b.rows() == 0 && b.cols() == 0) return a;
    if (a.cols() != b.cols()) throw Error(Error::Shape, "vstack col mismatch");
    IntMat out(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) out.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) out.at(a.rows() + i, j) = b.at(i, j);
    }
    return out;
}

IntMat IntMat::block_diag(const std::vector<IntMat>& blocks) {
    int r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows(), c += b.cols();
    IntMat out(r, c);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

IntMat IntMat::reduced_mod(const Int& m) const {
    IntMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) {
        Int v = a_[i] % m;
        if (v < 0) v += m;
        out.a_[i] = v;
    }
    return out;
}

IntVec SnfResult::diag() const {
    IntVec out;
    for (int i = 0; i < rank; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

void row_swap(IntMat& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void col_swap(IntMat& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
void row_add(IntMat& m, int dst, int src, const Int& k) {
    if (k == 0) return;
    for (int j = 0; j < m.cols(); ++j)
        if (m.at(src, j) != 0) m.at(dst, j) += k * m.at(src, j);
}
void col_add(IntMat& m, int dst, int src, const Int& k) {
    if (k == 0) return;
    for (int i = 0; i < m.rows(); ++i)
        if (m.at(i, src) != 0) m.at(i, dst) += k * m.at(i, src);
}
void row_neg(IntMat& m, int i) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

}  // namespace

SnfResult snf(const IntMat& input) {
    SnfResult res;
    int R = input.rows(), C = input.cols();
    res.d = input;
    res.u = IntMat::identity(R);
    res.v = IntMat::identity(C);
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    int n = std::min(R, C);
    int t = 0;
    for (; t < n; ++t) {
        for (;;) {
            // deterministic pivot: smallest nonzero |entry|, then (row, col)
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j) {
                    const Int& x = d.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done;  // rest is zero
            if (pi != t) {
                row_swap(d, t, pi);
                row_swap(u, t, pi);
            }
            if (pj != t) {
                col_swap(d, t, pj);
                col_swap(v, t, pj);
            }
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                row_add(d, i, t, -q);
                row_add(u, i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < C; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                col_add(d, j, t, -q);
                col_add(v, j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // pivot is lone; enforce divisibility of the trailing block
            int bi = -1;
            for (int i = t + 1; i < R && bi < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            row_add(d, t, bi, 1);
            row_add(u, t, bi, 1);
        }
        if (d.at(t, t) < 0) {
            row_neg(d, t);
            row_neg(u, t);
        }
    }
done:
    res.rank = 0;
    for (int i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++res.rank;
    return res;
}

IntMat hnf_cols(const IntMat& input) {
    IntMat h = input;
    int R = h.rows(), C = h.cols();
    int c = 0;
    std::vector<int> pivot_row;
    for (int r = 0; r < R && c < C; ++r) {
        // clear row r across columns >= c down to a single positive pivot
        for (;;) {
            int jmin = -1;
            Int best = 0;
            for (int j = c; j < C; ++j) {
                const Int& x = h.at(r, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (jmin < 0 || ax < best) {
                    best = ax;
                    jmin = j;
                }
            }
            if (jmin < 0) break;
            if (jmin != c) col_swap(h, c, jmin);
            bool clean = true;
            for (int j = c + 1; j < C; ++j) {
                if (h.at(r, j) == 0) continue;
                Int q = h.at(r, j) / h.at(r, c);
                col_add(h, j, c, -q);
                if (h.at(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0)
            for (int i = 0; i < R; ++i) h.at(i, c) = -h.at(i, c);
        // reduce the pivot row entries of earlier columns
        for (int j = 0; j < c; ++j) {
            if (h.at(r, j) == 0) continue;
            Int q = h.at(r, j) / h.at(r, c);
            if (h.at(r, j) - q * h.at(r, c) < 0) q -= 1;  // floor division
            col_add(h, j, c, -q);
        }
        pivot_row.push_back(r);
        ++c;
    }
    // drop zero columns
    IntMat out(R, c);
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < c; ++j) out.at(i, j) = h.at(i, j);
    return out;
}

std::optional<IntVec> lattice_coords(const IntMat& basis, const IntVec& v) {
    if ((int)v.size() != basis.rows()) throw Error(Error::Shape, "lattice vector shape");
    IntVec rem = v;
    IntVec coef(basis.cols(), 0);
    int row = 0;
    for (int j = 0; j < basis.cols(); ++j) {
        while (row < basis.rows() && basis.at(row, j) == 0) {
            if (rem[row] != 0) return std::nullopt;
            ++row;
        }
        if (row >= basis.rows()) return std::nullopt;
        const Int& p = basis.at(row, j);
        if (rem[row] % p != 0) return std::nullopt;
        Int q = rem[row] / p;
        coef[j] = q;
        if (q != 0)
            for (int i = row; i < basis.rows(); ++i) rem[i] -= q * basis.at(i, j);
        ++row;
    }
    for (int i = row; i < basis.rows(); ++i)
        if (rem[i] != 0) return std::nullopt;
    return coef;
}

bool lattice_contains(const IntMat& basis, const IntVec& v) {
    return lattice_coords(basis, v).has_value();
}

bool lattice_equal(const IntMat& a, const IntMat& b) { return a == b; }

bool lattice_subset(const IntMat& gens, const IntMat& hnf_b) {
    for (int j = 0; j < gens.cols(); ++j)
        if (!lattice_contains(hnf_b, gens.col(j))) return false;
    return true;
}

IntMat lattice_sum(const IntMat& a, const IntMat& b) { return hnf_cols(IntMat::hstack(a, b)); }

IntMat kernel_cols(const IntMat& m) {
    SnfResult s = snf(m);
    int C = m.cols();
    IntMat out(C, C - s.rank);
    for (int j = s.rank; j < C; ++j)
        for (int i = 0; i < C; ++i) out.at(i, j - s.rank) = s.v.at(i, j);
    return out;
}

IntMat preimage_lattice(const IntMat& m, const IntMat& l) {
    if (l.cols() == 0) {
        IntMat k = kernel_cols(m);
        return hnf_cols(k);
    }
    if (m.rows() != l.rows()) throw Error(Error::Shape, "preimage shape");
    IntMat big = IntMat::hstack(m, -l);
    IntMat k = kernel_cols(big);
    IntMat proj(m.cols(), k.cols());
    for (int j = 0; j < k.cols(); ++j)
        for (int i = 0; i < m.cols(); ++i) proj.at(i, j) = k.at(i, j);
    return hnf_cols(proj);
}

IntMat lattice_intersection(const IntMat& a, const IntMat& b) {
    if (a.cols() == 0 || b.cols() == 0) return IntMat(a.rows(), 0);
    IntMat big = IntMat::hstack(a, -b);
    IntMat k = kernel_cols(big);
    IntMat gens(a.rows(), k.cols());
    for (int j = 0; j < k.cols(); ++j) {
        IntVec x(a.cols());
        for (int i = 0; i < a.cols(); ++i) x[i] = k.at(i, j);
        gens.set_col(j, a.apply(x));
    }
    return hnf_cols(gens);
}

std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b) {
    SnfResult s = snf(m);
    IntVec ub = s.u.apply(b);
    IntVec y(m.cols(), 0);
    for (int i = 0; i < (int)ub.size(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.d.at(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.d.at(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(y);
}

Int p_valuation(const Int& v, const Int& p) {
    if (v == 0) throw Error(Error::Internal, "valuation of zero");
    Int n = abs(v), k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

LocalSolveResult solve_localized(const IntMat& m, const IntVec& b, const Int& p) {
    LocalSolveResult out;
    SnfResult s = snf(m);
    IntVec ub = s.u.apply(b);
    RatVec y(m.cols(), Rat(0));
    for (int i = 0; i < (int)ub.size(); ++i) {
        if (i < s.rank) {
            const Int& di = s.d.at(i, i);
            if (ub[i] == 0) continue;
            if (p_valuation(ub[i], p) < p_valuation(di, p)) {
                out.feasible = false;
                out.certificate = "congruence " + to_string(ub[i]) + " = " + to_string(di) +
                                  " * x has no solution with denominator prime to " + to_string(p);
                return out;
            }
            y[i] = Rat(ub[i], di);
        } else if (ub[i] != 0) {
            out.feasible = false;
            out.certificate = "row beyond rank requires " + to_string(ub[i]) + " = 0";
            return out;
        }
    }
    out.feasible = true;
    out.x.assign(m.cols(), Rat(0));
    for (int i = 0; i < m.cols(); ++i) {
        Rat s2 = 0;
        for (int j = 0; j < m.cols(); ++j)
            if (s.v.at(i, j) != 0 && y[j] != 0) s2 += Rat(s.v.at(i, j)) * y[j];
        out.x[i] = s2;
    }
    return out;
}

Int CokernelInfo::torsion_order() const {
    Int t = 1;
    for (const auto& d : divisors) t *= d;
    return t;
}

CokernelInfo cokernel_info(const IntMat& m) {
    CokernelInfo out;
    SnfResult s = snf(m);
    for (int i = 0; i < s.rank; ++i)
        if (s.d.at(i, i) > 1) out.divisors.push_back(s.d.at(i, i));
    out.free_rank = m.rows() - s.rank;
    return out;
}

SurjectivityVerdict is_surjective_localized(const IntMat& m, Locale locale, const Int& p,
                                            const IntVec& known_primes) {
    SurjectivityVerdict out;
    out.coker = cokernel_info(m);
    switch (locale) {
        case Locale::Integral:
            out.surjective = out.coker.free_rank == 0 && out.coker.divisors.empty();
            break;
        case Locale::AtPrime: {
            if (p < 2) throw Error(Error::Usage, "prime required for p-local check");
            bool ok = out.coker.free_rank == 0;
            for (const auto& d : out.coker.divisors)
                if (d % p == 0) ok = false;
            out.surjective = ok;
            break;
        }
        case Locale::Generic: {
            Int t = out.coker.torsion_order();
            for (const auto& q : known_primes)
                while (q > 1 && t % q == 0) t /= q;
            out.residual = t;
            // surjective at every prime outside known_primes
            out.surjective = out.coker.free_rank == 0 && out.residual == 1;
            break;
        }
    }
    return out;
}

AbGroup::AbGroup(int g, IntMat r) : gens(g), rels(std::move(r)) {
    if (rels.rows() == 0 && rels.cols() == 0) rels = IntMat(g, 0);
    if (rels.rows() != g) throw Error(Error::Shape, "relation matrix must have one row per generator");
    rels_hnf = hnf_cols(rels);
}

AbGroup AbGroup::free_group(int rank) { return AbGroup(rank, IntMat(rank, 0)); }
AbGroup AbGroup::zero() { return AbGroup(0, IntMat(0, 0)); }

bool AbGroup::is_zero_group() const { return free_rank() == 0 && torsion().empty(); }

int AbGroup::free_rank() const {
    SnfResult s = snf(rels);
    return gens - s.rank;
}

IntVec AbGroup::torsion() const {
    SnfResult s = snf(rels);
    IntVec out;
    for (int i = 0; i < s.rank; ++i)
        if (s.d.at(i, i) > 1) out.push_back(s.d.at(i, i));
    return out;
}

bool AbGroup::element_is_zero(const IntVec& v) const { return lattice_contains(rels_hnf, v); }

bool AbGroup::elements_equal(const IntVec& a, const IntVec& b) const {
    if (a.size() != b.size()) return false;
    IntVec d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return element_is_zero(d);
}

AbGroup AbGroup::direct_sum(const std::vector<AbGroup>& parts) {
    int g = 0;
    std::vector<IntMat> rels;
    for (const auto& p : parts) {
        g += p.gens;
        rels.push_back(p.rels);
    }
    return AbGroup(g, IntMat::block_diag(rels));
}

bool maps_equal_mod(const IntMat& a, const IntMat& b, const AbGroup& target) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.rows() != target.gens) throw Error(Error::Shape, "map target mismatch");
    for (int j = 0; j < a.cols(); ++j) {
        IntVec d(a.rows());
        for (int i = 0; i < a.rows(); ++i) d[i] = a.at(i, j) - b.at(i, j);
        if (!target.element_is_zero(d)) return false;
    }
    return true;
}

IntMat kernel_into(const IntMat& m, const AbGroup& target) {
    if (m.rows() != target.gens) throw Error(Error::Shape, "kernel_into target mismatch");
    return preimage_lattice(m, target.rels);
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const IntMat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace burnside
