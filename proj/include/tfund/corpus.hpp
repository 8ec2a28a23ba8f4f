#pragma once

// Built-in reference inputs with independently frozen outcomes: the Du Val
// divisor family (cyclic, binary dihedral, binary tetrahedral/octahedral/
// icosahedral local groups), a rank-2 wedge divisor with trivial fundamental
// group, and weighted C*-bundles over platonic multiplicity triples.
// `run_corpus` recomputes every entry and diffs it against the frozen values.

#include "tfund/document.hpp"

#include <ostream>

namespace tfund {

struct CorpusEntry {
    std::string name;     // "duval:E8", "paper:sec4-trivial", ...
    std::string command;  // the subcommand the entry exercises
    InputDocument document;
    // Frozen outcomes; comparison is by exact string.
    std::string order;       // order_description of the analyzed group
    std::string abelian;     // to_string of its abelianization
    std::string properness;  // verdict of the first validated member ("" = none)
    std::string note;        // a note the report must contain ("" = none)
};

const std::vector<CorpusEntry>& builtin_corpus();

// The entry with the given name; raises an input error listing valid names.
const CorpusEntry& builtin_entry(const std::string& name);

// Recomputes every entry whose name contains `filter` (all when empty) and
// prints one line per entry.  Returns 0 when everything matches the frozen
// outcomes, 2 otherwise.  Output is deterministic.
int run_corpus(const std::string& filter, std::ostream& out);

}  // namespace tfund
