#pragma once

// Fundamental-group data from combinatorial input: abelian invariants and
// presentations for toric fans, presentations for torus varieties of
// complexity one over the projective line, punctured/local presentations,
// and the C*-bundle (Seifert) case.
//
// Generator conventions shared by every builder: torus generators first
// ("t" when there is one, otherwise "t1".."tk"), then one boundary
// generator "b1".."br" per support point in deterministic point order.
// Relator words put the t-part before the b-part; commutators are
// x^-1 y^-1 x y.

#include "tfund/divisorial.hpp"
#include "tfund/fpgroup.hpp"
#include "tfund/polyhedral.hpp"
#include "tfund/presentation.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace tfund {

struct PresentationOptions {
    // Optional rewrite applied to every canonical lattice basis before its
    // rows become relators.  A unimodular row transform keeps the lattice
    // (hence the group) unchanged; used by invariance tests.
    std::function<IntMatrix(const IntMatrix&)> basis_map;
};

// Invariant factors of Z^k modulo the sublattice generated by the saturated
// span lattices of all fan cones.  Cones must be pointed.
AbelianInvariants toric_pi1_invariants(const Fan& f);

// Generators t_1..t_k, pairwise commutators, and one relator t^n per row n
// of the canonical basis of each cone's saturated span lattice.
Presentation toric_pi1_presentation(const Fan& f, const PresentationOptions& opt = {});

// The complexity-one presentation for a divisorial fan over the projective
// line: generators t_1..t_k, b_1..b_r (r = union of member supports, first-
// occurrence order); relators b_1...b_r, all commutators, the tail-lattice
// relators of every member, and per member and support point the relators
// t^w b_j^{v1} for (v1, w) ranging over the canonical basis of the
// saturated lattice of the cone over the coefficient at that point.
// Members that omit a support point contribute through the trivial
// coefficient; empty coefficients contribute nothing at that point.
// With no support points at all, degenerates to the toric presentation of
// the tail fan.  Properness of the members is the caller's obligation and
// is not re-checked here.
Presentation complexity_one_presentation(const DivisorialFanP1& s,
                                         const PresentationOptions& opt = {});

// Which strata contribute relators to the punctured presentation.
enum class FacesMode { Rays, AllFaces };

// Presentation of the complement of the fixed point in the affine variety
// of a pp-divisor with full-dimensional tail.  Rays mode (default) takes
// relators from the extreme rays: t^rho per tail ray that is a proper face
// (a one-dimensional tail is its own unique ray — that stratum is the
// puncture, so no bare-t relator), and t^w b_j^{v1} per ray (v1, w) with
// v1 > 0 of the cone over each coefficient.  AllFaces mode instead uses the
// canonical basis of the saturated lattice of every proper face of the tail
// and of every cone over a coefficient.  A zero tail means the input
// already describes the punctured situation: the call delegates to
// complexity_one_presentation on the one-member family.
Presentation local_pi1_presentation(const PPDivisor& d, FacesMode mode = FacesMode::Rays,
                                    const PresentationOptions& opt = {});

// Relators produced in AllFaces mode whose conjugacy-and-inversion class
// does not appear in Rays mode; empty when the two modes agree (and for the
// zero-tail delegation case).  Deduplicated, AllFaces order.
std::vector<Word> allfaces_extra_relators(const PPDivisor& d);

// The Seifert C*-bundle presentation over the projective line with fiber
// data (e_i, m_i) per marked point: generators t, b_1..b_r; relators
// b_1...b_r, [t, b_i], and t^{e_i} b_i^{m_i}.  Each e_i/m_i must be a
// reduced fraction with m_i >= 1.
Presentation cstar_bundle_presentation(const std::vector<std::pair<Int, Int>>& points);

}  // namespace tfund
