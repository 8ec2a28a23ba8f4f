#pragma once

// Proper polyhedral divisors over the projective line: evaluating the divisor
// on dual vectors, the degree-based properness test (semiample + big), the
// cone over a special point, and necessary log-terminality screens.

#include "tfund/polyhedral.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tfund {

// A polyhedral coefficient attached to a point of the base line: either a
// sigma-polyhedron sharing the divisor's tail cone, or absent ("empty"),
// which removes the point from the locus.
using PolyCoeff = std::optional<Polyhedron>;

struct PPDivisor {
    std::size_t rank_k = 0;  // rank of the lattice the polyhedra live in
    Cone tail;
    // label -> coefficient, in declaration order; labels pairwise distinct.
    // Points of the base are opaque labels: only which points are special
    // matters, never their coordinates.
    std::vector<std::pair<std::string, PolyCoeff>> coefficients;

    PPDivisor() = default;
    PPDivisor(std::size_t rank, Cone tail_cone,
              std::vector<std::pair<std::string, PolyCoeff>> coeffs);

    const PolyCoeff& at(const std::string& label) const;  // errors on unknown label
    bool has_empty_coefficient() const;
    // Labels whose coefficient differs from the tail itself; an empty
    // coefficient counts as different.
    std::vector<std::string> support() const;
};

// A finite family of pp-divisors on a shared lattice.  Validation is shallow
// (shared rank enforced; everything subtler is reported as warnings).
struct DivisorialFanP1 {
    std::size_t rank_k = 0;
    std::vector<PPDivisor> members;

    DivisorialFanP1() = default;
    DivisorialFanP1(std::size_t rank, std::vector<PPDivisor> divisors);
};

// Non-fatal observations about a divisorial fan (e.g. members not sharing
// the same label set).  Face/intersection axioms are not verified.
std::vector<std::string> shallow_warnings(const DivisorialFanP1& s);

// The coefficient of the evaluated divisor at each non-empty label:
// min over the coefficient polyhedron of <u, .>.  Requires u in dual(tail).
std::vector<std::pair<std::string, Rat>> evaluate_coefficients(const PPDivisor& d, const RatVec& u);

// Sum of the evaluated coefficients; needs a complete locus (no empty
// coefficient).
Rat degree(const PPDivisor& d, const RatVec& u);

struct ProperVerdict {
    enum class Kind { Proper, NotSemiample, NotBig };
    Kind kind = Kind::Proper;
    IntVec witness;  // the offending functional; empty when Proper

    bool ok() const { return kind == Kind::Proper; }
    bool operator==(const ProperVerdict& o) const { return kind == o.kind && witness == o.witness; }
};
std::string to_string(const ProperVerdict& v);

// Properness of the evaluation map: with an empty coefficient (affine locus)
// every evaluation is principal on the locus, hence Proper outright.
// Otherwise the degree must be >= 0 on every extreme ray of dual(tail)
// (degree is concave and positively homogeneous, so ray checks suffice) and
// > 0 at an interior point of the dual, taken as the sum of its rays.
ProperVerdict is_proper(const PPDivisor& d);

// The cone in Z x N spanned by (0, tail) and (1, v) for the points v of the
// coefficient at the given label; errors when that coefficient is empty.
Cone cone_over_point(const PPDivisor& d, const std::string& label);

struct KltCheck {
    bool pass = false;
    Rat sum;     // total boundary degree: sum over points of (mu_p - 1)/mu_p
    Rat margin;  // 2 - sum when passing, sum - 2 otherwise
};

// Necessary criterion for log terminal singularities of the associated
// variety: the boundary degree sum must stay below 2.  Requires a complete
// locus and a full-dimensional tail ("good-action hypothesis violated"
// otherwise).  Passing is necessary, not sufficient.
KltCheck klt_necessary_check(const PPDivisor& d);

// Whether {a,b,c} is one of the platonic triples: (1,p,q), (2,2,r) with
// r >= 2, (2,3,3), (2,3,4), (2,3,5); order-insensitive.
bool platonic_triple_check(const Int& a, const Int& b, const Int& c);

}  // namespace tfund
