#pragma once

// Words and finite presentations over named generators, including the text
// syntax shared with the CLI: space-separated syllables with caret exponents,
// e.g. "t1^2 t2 b1^-1"; the empty word prints as "1".

#include "tfund/numeric.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tfund {

// A freely reduced word: syllables (generator index, nonzero exponent) with
// adjacent syllables on distinct generators.
struct Word {
    std::vector<std::pair<std::size_t, Int>> syllables;

    // Appends one syllable, merging with the tail and dropping zeros so the
    // word stays freely reduced.
    Word& push(std::size_t gen, const Int& exp);
    Word& append(const Word& w);

    Word inverse() const;
    bool empty() const { return syllables.empty(); }
    // Number of letters: sum of |exponent| over the syllables.
    Int letter_length() const;

    bool operator==(const Word& o) const { return syllables == o.syllables; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const;  // deterministic total order
};

// x^-1 y^-1 x y
Word commutator_word(std::size_t x, std::size_t y);

// Removes conjugating prefixes: merges the first and last syllables while
// they share a generator.
Word cyclically_reduced(const Word& w);

// Canonical representative of the conjugacy-and-inversion class at syllable
// granularity: the least syllable rotation of the cyclically reduced word or
// of its inverse.  Used to deduplicate relators.
Word cyclic_canonical(const Word& w);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    // Parallel to relators when non-empty: a short source tag per relator
    // (e.g. "product", "commutator", "tail lattice", "point 0 lattice").
    std::vector<std::string> provenance;

    Presentation() = default;
    explicit Presentation(std::vector<std::string> gens);

    std::size_t generator_index(const std::string& name) const;  // errors if unknown
    void add_relator(Word w, std::string tag = "");
};

// Relator text: "t1^2 b1^-1"; empty word -> "1".
std::string format_word(const std::vector<std::string>& generators, const Word& w);
// Inverse of format_word; unknown generator names and malformed exponents
// raise input errors.  Accepts "1" and "" as the empty word.
Word parse_word(const std::vector<std::string>& generators, const std::string& text);

std::string to_string(const Presentation& p);

}  // namespace tfund
