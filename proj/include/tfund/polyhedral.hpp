#pragma once

// Exact rational convex geometry on V-representations: canonical cones,
// dual cones, faces, sigma-polyhedra (points + tail cone), and fans.
//
// Cones are stored canonically: extreme rays as primitive integer vectors
// chosen inside the orthogonal complement of the lineality space, sorted
// lexicographically, plus a canonical HNF basis of the lineality lattice.
// Dual-cone conversion works at ambient rank <= 6 (exact active-set
// enumeration over constraint subsets).

#include "tfund/lattice.hpp"
#include "tfund/numeric.hpp"

namespace tfund {

class Cone {
  public:
    Cone() = default;  // zero cone in rank 0

    // Canonicalizes: primitivizes generators, drops zeros and duplicates,
    // removes redundant generators, splits off the lineality space.
    static Cone from_generators(std::size_t ambient_rank, const std::vector<RatVec>& gens);
    static Cone from_generators(std::size_t ambient_rank, const std::vector<IntVec>& gens);
    static Cone zero(std::size_t ambient_rank);
    static Cone full_space(std::size_t ambient_rank);

    std::size_t ambient_rank() const { return ambient_rank_; }
    // Extreme rays modulo lineality (canonical primitive representatives).
    const std::vector<IntVec>& ray_list() const { return rays_; }
    const IntMatrix& lineality() const { return lineality_; }
    // Full generator list: rays plus +/- each lineality basis vector.
    std::vector<IntVec> generators() const;

    bool is_pointed() const { return lineality_.row_count() == 0; }
    bool is_zero() const { return rays_.empty() && is_pointed(); }
    bool is_full_space() const { return lineality_.row_count() == ambient_rank_; }
    std::size_t dim() const;

    bool operator==(const Cone& o) const {
        return ambient_rank_ == o.ambient_rank_ && rays_ == o.rays_ && lineality_ == o.lineality_;
    }
    bool operator!=(const Cone& o) const { return !(*this == o); }

  private:
    std::size_t ambient_rank_ = 0;
    std::vector<IntVec> rays_;
    IntMatrix lineality_{0, {}};

    friend Cone dual_cone(const Cone&);
};

// Deterministic total order on cones (used to sort faces and fan members).
bool cone_less(const Cone& a, const Cone& b);
std::string to_string(const Cone& c);

// Polar dual {u : <u, v> >= 0 for all v in c}. Involution on canonical cones.
Cone dual_cone(const Cone& c);

// Extreme rays of a pointed cone (errors on cones containing a line).
std::vector<IntVec> rays(const Cone& c);

// All proper faces of a pointed cone, including the zero cone, excluding the
// cone itself.  Deduplicated; deterministic order.
std::vector<Cone> proper_faces(const Cone& c);

// A sigma-polyhedron: conv(points) + tail.  The tail cone is supplied, never
// inferred; it equals the recession cone of the represented set.
struct Polyhedron {
    std::size_t ambient_rank = 0;
    std::vector<RatVec> points;  // canonical: deduplicated, sorted, nonempty
    Cone tail;

    Polyhedron() = default;
    Polyhedron(std::size_t rank, std::vector<RatVec> pts, Cone tail_cone);

    bool operator==(const Polyhedron& o) const {
        return ambient_rank == o.ambient_rank && points == o.points && tail == o.tail;
    }
    bool operator!=(const Polyhedron& o) const { return !(*this == o); }
};

// The tail cone viewed as a polyhedron: {0} + tail.
Polyhedron tail_polyhedron(const Cone& tail);
std::string to_string(const Polyhedron& p);

// min over p of <u, .>; requires u in dual(tail), else the value is
// unbounded below and an error is raised.
Rat support_min(const Polyhedron& p, const RatVec& u);

// Pointwise sums, deduplicated; no convex-hull reduction.  Requires equal
// tails, or one operand a single point with zero tail (translation).
Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b);

// A finite collection of cones in a shared lattice.  Validation is shallow:
// rank consistency here; pointedness is enforced by the operations that
// need it.  Members are deduplicated and sorted canonically.
struct Fan {
    std::size_t ambient_rank = 0;
    std::vector<Cone> cones;

    Fan() = default;
    Fan(std::size_t rank, std::vector<Cone> members);
};

}  // namespace tfund
