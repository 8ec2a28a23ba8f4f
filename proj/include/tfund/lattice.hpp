#pragma once

// Exact integer-lattice linear algebra: Hermite and Smith normal forms,
// saturation, quotient invariants, primitive vectors.

#include "tfund/numeric.hpp"

#include <cstddef>

namespace tfund {

// Dense integer matrix; all rows share `cols` (checked at construction).
// An empty row list is legal and still knows its column count.
struct IntMatrix {
    std::size_t cols = 0;
    std::vector<IntVec> rows;

    IntMatrix() = default;
    IntMatrix(std::size_t ncols, std::vector<IntVec> r);
    // Column count inferred from the first row; rows must be nonempty.
    explicit IntMatrix(std::vector<IntVec> r);

    std::size_t row_count() const { return rows.size(); }
    bool operator==(const IntMatrix& o) const { return cols == o.cols && rows == o.rows; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
};

IntMatrix identity_matrix(std::size_t n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);
std::string to_string(const IntMatrix& m);

// Canonical row-style Hermite normal form of the row lattice:
// zero rows removed, pivots positive, entries above each pivot in [0, pivot),
// pivot columns strictly increasing. Unique per lattice.
IntMatrix hnf(const IntMatrix& m);

// Rank of the row space (= number of HNF rows).
std::size_t lattice_rank(const IntMatrix& m);

// Smith normal form: diag with d1 | d2 | ... (non-negative; zeros trail),
// left (r x r) and right (n x n) unimodular, left * m * right = diagonal(diag).
struct SmithForm {
    std::vector<Int> diag;  // length min(rows, cols)
    IntMatrix left;
    IntMatrix right;
    IntMatrix right_inv;  // inverse of `right`, tracked exactly
};
SmithForm snf(const IntMatrix& m);

// Basis of a saturated (primitive) sublattice of Z^ambient_rank,
// stored in canonical HNF.
struct LatticeBasis {
    std::size_t ambient_rank = 0;
    IntMatrix basis;  // canonical HNF, rank rows

    std::size_t rank() const { return basis.row_count(); }
    bool operator==(const LatticeBasis& o) const {
        return ambient_rank == o.ambient_rank && basis == o.basis;
    }
};

// Saturation {v in Z^n : q v in span(rows) for some q > 0} of the row lattice.
LatticeBasis saturate(const IntMatrix& generators, std::size_t ambient_rank);

// Rows spanning the integer kernel {v : m * v = 0} of the column action,
// i.e. primitive basis of ker(m) ∩ Z^cols, in canonical HNF.
IntMatrix integer_kernel(const IntMatrix& m);

// Invariant factors of Z^ambient_rank / (row lattice of generators):
// torsion entries > 1 in divisibility order plus the free rank.
struct AbelianInvariants {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;

    bool operator==(const AbelianInvariants& o) const {
        return torsion == o.torsion && free_rank == o.free_rank;
    }
    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    // Order of the torsion part (the full group order when free_rank == 0).
    Int torsion_order() const;
};
AbelianInvariants quotient_invariants(std::size_t ambient_rank, const IntMatrix& generators);
std::string to_string(const AbelianInvariants& a);

// Least m >= 1 with m*v integral (lcm of reduced denominators; mu(0) = 1).
Int mu(const RatVec& v);

// The primitive lattice vector on the ray Q>=0 * v; rejects the zero vector.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

}  // namespace tfund
