#pragma once

// Certification engine for finite presentations: abelianization by Smith
// normal form, bounded Tietze simplification, and Todd-Coxeter coset
// enumeration (HLT with coincidence handling).  All deterministic.

#include "tfund/lattice.hpp"
#include "tfund/presentation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tfund {

// Invariant factors of the abelianized group: SNF of the relator
// exponent-sum matrix.
AbelianInvariants abelianization(const Presentation& p);

// Isomorphism-preserving cleanup: free/cyclic reduction, deduplication up to
// rotation and inversion, removal of relators occurring as subwords of
// others, and elimination of generators that occur in some relator exactly
// once with exponent +-1.  Runs to a fixed point or the pass limit.
Presentation tietze_simplify(const Presentation& p, std::size_t max_passes = 64);

// A closed coset table in standardized (breadth-first) numbering:
// rows[c][2g] = image of coset c under generator g, rows[c][2g+1] under its
// inverse.  Row 0 is the subgroup coset.
struct CosetTable {
    std::size_t generator_count = 0;
    std::vector<std::vector<std::size_t>> rows;
};

struct EnumerationResult {
    bool exceeded = false;
    Int order = 0;      // group order when the table closed
    CosetTable table;   // populated only when the table closed
};

// Coset enumeration over the trivial subgroup.  Returns the group order when
// the table closes within the live-coset bound, Exceeded otherwise; never
// fails to terminate.  The closed table is verified to be a transitive
// involution-consistent action satisfying every relator before returning.
EnumerationResult todd_coxeter(const Presentation& p, std::size_t max_cosets = 1000000);

struct GroupReport {
    enum class OrderKind { Finite, InfiniteCertified, Unknown };

    AbelianInvariants abelian;
    OrderKind kind = OrderKind::Unknown;
    Int order = 0;          // meaningful for Finite
    std::size_t limit = 0;  // the coset bound that was exceeded, for Unknown
    Presentation simplified;
    std::vector<std::string> notes;

    bool is_trivial_group() const { return kind == OrderKind::Finite && order == 1; }
};

// Simplify, abelianize, then enumerate.  Infinite groups are certified only
// through positive abelian free rank; enumeration is skipped in that case.
GroupReport analyze(const Presentation& p, std::size_t max_cosets = 1000000);

// "Finite(60)", "InfiniteCertified", "Unknown(limit=1000000)"
std::string order_description(const GroupReport& r);

}  // namespace tfund
