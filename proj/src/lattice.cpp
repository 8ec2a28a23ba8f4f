#include "tfund/lattice.hpp"

#include <algorithm>

namespace tfund {

IntMatrix::IntMatrix(std::size_t ncols, std::vector<IntVec> r) : cols(ncols), rows(std::move(r)) {
    for (const auto& row : rows)
        if (row.size() != cols) throw input_error("matrix rows must share a common length");
}

IntMatrix::IntMatrix(std::vector<IntVec> r) {
    if (r.empty()) throw input_error("cannot infer column count from an empty matrix");
    cols = r[0].size();
    rows = std::move(r);
    for (const auto& row : rows)
        if (row.size() != cols) throw input_error("matrix rows must share a common length");
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m;
    m.cols = n;
    m.rows.assign(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.row_count()) throw input_error("matmul: inner dimensions differ");
    IntMatrix out;
    out.cols = b.cols;
    out.rows.assign(a.row_count(), IntVec(b.cols, 0));
    for (std::size_t i = 0; i < a.row_count(); ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.rows[i][k] == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.rows[i][j] += a.rows[i][k] * b.rows[k][j];
        }
    return out;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix out;
    out.cols = m.row_count();
    out.rows.assign(m.cols, IntVec(m.row_count(), 0));
    for (std::size_t i = 0; i < m.row_count(); ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.rows[j][i] = m.rows[i][j];
    return out;
}

std::string to_string(const IntMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        if (i) out += ", ";
        out += to_string(m.rows[i]);
    }
    return out + "]";
}

namespace {

// Floor quotient; b must be positive here (pivots are normalized positive).
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

bool row_is_zero(const IntVec& r) {
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t nrows = a.row_count(), ncols = a.cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
        // gcd-reduce the column below pivot_row until one nonzero entry remains
        for (;;) {
            std::size_t best = nrows;
            for (std::size_t i = pivot_row; i < nrows; ++i) {
                if (a.rows[i][col] == 0) continue;
                if (best == nrows || abs(a.rows[i][col]) < abs(a.rows[best][col])) best = i;
            }
            if (best == nrows) break;  // column clear below; no pivot here
            std::swap(a.rows[pivot_row], a.rows[best]);
            if (a.rows[pivot_row][col] < 0)
                for (auto& x : a.rows[pivot_row]) x = -x;
            const Int& p = a.rows[pivot_row][col];
            bool clear = true;
            for (std::size_t i = pivot_row + 1; i < nrows; ++i) {
                if (a.rows[i][col] == 0) continue;
                const Int q = floor_div(a.rows[i][col], p);
                if (q != 0)
                    for (std::size_t j = 0; j < ncols; ++j)
                        a.rows[i][j] -= q * a.rows[pivot_row][j];
                if (a.rows[i][col] != 0) clear = false;
            }
            if (clear) break;
        }
        if (a.rows[pivot_row][col] == 0) continue;
        // reduce entries above the pivot into [0, pivot)
        const Int p = a.rows[pivot_row][col];
        for (std::size_t i = 0; i < pivot_row; ++i) {
            const Int q = floor_div(a.rows[i][col], p);
            if (q != 0)
                for (std::size_t j = 0; j < ncols; ++j)
                    a.rows[i][j] -= q * a.rows[pivot_row][j];
        }
        ++pivot_row;
    }
    a.rows.erase(std::remove_if(a.rows.begin(), a.rows.end(), row_is_zero), a.rows.end());
    return a;
}

std::size_t lattice_rank(const IntMatrix& m) { return hnf(m).row_count(); }

SmithForm snf(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t r = a.row_count(), n = a.cols;
    SmithForm out;
    out.left = identity_matrix(r);
    out.right = identity_matrix(n);
    out.right_inv = identity_matrix(n);

    auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < n; ++j) a.rows[dst][j] -= q * a.rows[src][j];
        for (std::size_t j = 0; j < r; ++j) out.left.rows[dst][j] -= q * out.left.rows[src][j];
    };
    auto row_add = [&](std::size_t dst, std::size_t src) {
        for (std::size_t j = 0; j < n; ++j) a.rows[dst][j] += a.rows[src][j];
        for (std::size_t j = 0; j < r; ++j) out.left.rows[dst][j] += out.left.rows[src][j];
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a.rows[i], a.rows[j]);
        std::swap(out.left.rows[i], out.left.rows[j]);
    };
    auto row_negate = [&](std::size_t i) {
        for (auto& x : a.rows[i]) x = -x;
        for (auto& x : out.left.rows[i]) x = -x;
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < r; ++i) a.rows[i][dst] -= q * a.rows[i][src];
        for (std::size_t i = 0; i < n; ++i) out.right.rows[i][dst] -= q * out.right.rows[i][src];
        // right_inv <- E^{-1} right_inv where E subtracts q*col_src from col_dst
        for (std::size_t j = 0; j < n; ++j) out.right_inv.rows[src][j] += q * out.right_inv.rows[dst][j];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < r; ++k) std::swap(a.rows[k][i], a.rows[k][j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(out.right.rows[k][i], out.right.rows[k][j]);
        std::swap(out.right_inv.rows[i], out.right_inv.rows[j]);
    };

    const std::size_t dmax = std::min(r, n);
    std::size_t t = 0;
    while (t < dmax) {
        // locate a minimal-magnitude nonzero entry in the trailing submatrix
        std::size_t pi = r, pj = n;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a.rows[i][j] == 0) continue;
                if (pi == r || abs(a.rows[i][j]) < abs(a.rows[pi][pj])) { pi = i; pj = j; }
            }
        if (pi == r) break;  // trailing submatrix is zero
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);
        if (a.rows[t][t] < 0) row_negate(t);

        bool dirty = false;
        for (std::size_t i = t + 1; i < r; ++i) {
            if (a.rows[i][t] == 0) continue;
            row_sub(i, t, floor_div(a.rows[i][t], a.rows[t][t]));
            if (a.rows[i][t] != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (a.rows[t][j] == 0) continue;
            col_sub(j, t, floor_div(a.rows[t][j], a.rows[t][t]));
            if (a.rows[t][j] != 0) dirty = true;
        }
        if (dirty) continue;

        // enforce the divisibility chain: pivot must divide the trailing block
        bool redo = false;
        for (std::size_t i = t + 1; i < r && !redo; ++i)
            for (std::size_t j = t + 1; j < n && !redo; ++j)
                if (a.rows[i][j] % a.rows[t][t] != 0) {
                    row_add(t, i);
                    redo = true;
                }
        if (redo) continue;
        ++t;
    }

    out.diag.assign(dmax, Int(0));
    for (std::size_t k = 0; k < dmax; ++k) out.diag[k] = a.rows[k][k];
    return out;
}

LatticeBasis saturate(const IntMatrix& generators, std::size_t ambient_rank) {
    if (generators.cols != ambient_rank && generators.row_count() > 0)
        throw input_error("saturate: generator length differs from ambient rank");
    LatticeBasis out;
    out.ambient_rank = ambient_rank;
    if (generators.row_count() == 0) {
        out.basis = IntMatrix(ambient_rank, {});
        return out;
    }
    const SmithForm s = snf(generators);
    std::size_t rank = 0;
    while (rank < s.diag.size() && s.diag[rank] != 0) ++rank;
    std::vector<IntVec> rows(s.right_inv.rows.begin(), s.right_inv.rows.begin() + rank);
    out.basis = hnf(IntMatrix(ambient_rank, std::move(rows)));
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const SmithForm s = snf(m);
    std::size_t rank = 0;
    while (rank < s.diag.size() && s.diag[rank] != 0) ++rank;
    std::vector<IntVec> rows;
    for (std::size_t j = rank; j < m.cols; ++j) {
        IntVec v(m.cols);
        for (std::size_t i = 0; i < m.cols; ++i) v[i] = s.right.rows[i][j];
        rows.push_back(std::move(v));
    }
    return hnf(IntMatrix(m.cols, std::move(rows)));
}

Int AbelianInvariants::torsion_order() const {
    Int n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

AbelianInvariants quotient_invariants(std::size_t ambient_rank, const IntMatrix& generators) {
    if (generators.cols != ambient_rank && generators.row_count() > 0)
        throw input_error("quotient_invariants: generator length differs from ambient rank");
    const SmithForm s = snf(generators);
    AbelianInvariants out;
    std::size_t rank = 0;
    for (const auto& d : s.diag) {
        if (d == 0) break;
        ++rank;
        if (d > 1) out.torsion.push_back(d);
    }
    out.free_rank = ambient_rank - rank;
    return out;
}

std::string to_string(const AbelianInvariants& a) {
    std::string out = "Z^" + std::to_string(a.free_rank);
    for (const auto& d : a.torsion) out += " x Z/" + d.str();
    return out;
}

Int mu(const RatVec& v) {
    Int m = 1;
    for (const auto& q : v) m = lcm(m, den(q));
    return m;
}

IntVec primitive(const RatVec& v) {
    const Int m = mu(v);
    IntVec w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = num(v[i] * m);
        g = gcd(g, w[i]);
    }
    if (g == 0) throw input_error("primitive vector of the zero vector is undefined");
    for (auto& x : w) x /= g;
    return w;
}

IntVec primitive(const IntVec& v) { return primitive(to_rat(v)); }

}  // namespace tfund
