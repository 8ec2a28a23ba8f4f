#include "tfund/presentation.hpp"

#include <algorithm>
#include <cctype>

namespace tfund {

Word& Word::push(std::size_t gen, const Int& exp) {
    if (exp == 0) return *this;
    if (!syllables.empty() && syllables.back().first == gen) {
        syllables.back().second += exp;
        if (syllables.back().second == 0) syllables.pop_back();
        return *this;
    }
    syllables.emplace_back(gen, exp);
    return *this;
}

Word& Word::append(const Word& w) {
    for (const auto& [gen, exp] : w.syllables) push(gen, exp);
    return *this;
}

Word Word::inverse() const {
    Word out;
    for (auto it = syllables.rbegin(); it != syllables.rend(); ++it)
        out.syllables.emplace_back(it->first, -it->second);
    return out;
}

Int Word::letter_length() const {
    Int n = 0;
    for (const auto& [gen, exp] : syllables) n += abs(exp);
    return n;
}

bool Word::operator<(const Word& o) const {
    if (syllables.size() != o.syllables.size()) return syllables.size() < o.syllables.size();
    return syllables < o.syllables;
}

Word commutator_word(std::size_t x, std::size_t y) {
    Word w;
    w.push(x, -1).push(y, -1).push(x, 1).push(y, 1);
    return w;
}

Word cyclically_reduced(const Word& w) {
    Word out = w;
    while (out.syllables.size() >= 2 && out.syllables.front().first == out.syllables.back().first) {
        Int merged = out.syllables.front().second + out.syllables.back().second;
        std::size_t gen = out.syllables.front().first;
        out.syllables.pop_back();
        out.syllables.erase(out.syllables.begin());
        if (merged != 0) {
            // the merged syllable belongs at the seam; as a cyclic word we may
            // place it at the end
            if (!out.syllables.empty() && out.syllables.back().first == gen) {
                out.syllables.back().second += merged;  // cannot cancel: reduced word
            } else {
                out.syllables.emplace_back(gen, merged);
            }
        }
    }
    return out;
}

Word cyclic_canonical(const Word& w) {
    Word base = cyclically_reduced(w);
    if (base.syllables.size() <= 1) {
        Word inv = base.inverse();
        return inv < base ? inv : base;
    }
    Word best = base;
    for (const Word& start : {base, base.inverse()}) {
        Word rotated = start;
        for (std::size_t r = 0; r < rotated.syllables.size(); ++r) {
            if (rotated < best) best = rotated;
            std::rotate(rotated.syllables.begin(), rotated.syllables.begin() + 1,
                        rotated.syllables.end());
        }
    }
    return best;
}

Presentation::Presentation(std::vector<std::string> gens) : generators(std::move(gens)) {
    for (const auto& g : generators) {
        if (g.empty() || (!std::isalpha(static_cast<unsigned char>(g[0])) && g[0] != '_'))
            throw input_error("generator name must start with a letter: '" + g + "'");
        for (char c : g)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw input_error("generator name has an invalid character: '" + g + "'");
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i] == generators[j])
                throw input_error("repeated generator name: " + generators[i]);
}

std::size_t Presentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return i;
    throw input_error("unknown generator: " + name);
}

void Presentation::add_relator(Word w, std::string tag) {
    for (const auto& [gen, exp] : w.syllables)
        if (gen >= generators.size()) throw input_error("relator uses an undeclared generator");
    relators.push_back(std::move(w));
    provenance.push_back(std::move(tag));
}

std::string format_word(const std::vector<std::string>& generators, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& [gen, exp] : w.syllables) {
        if (!out.empty()) out += ' ';
        out += generators.at(gen);
        if (exp != 1) out += "^" + to_string(exp);
    }
    return out;
}

Word parse_word(const std::vector<std::string>& generators, const std::string& text) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '^')
            ++i;
        std::string name = text.substr(start, i - start);
        Int exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t estart = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == estart) throw input_error("missing exponent after '^' in word: " + text);
            exp = Int(text.substr(estart, i - estart));
        }
        if (name == "1" && exp == 1) continue;  // the empty word literal
        std::size_t gen = generators.size();
        for (std::size_t g = 0; g < generators.size(); ++g)
            if (generators[g] == name) gen = g;
        if (gen == generators.size()) throw input_error("unknown generator in word: '" + name + "'");
        out.push(gen, exp);
    }
    return out;
}

std::string to_string(const Presentation& p) {
    std::string out = "< ";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) out += ", ";
        out += p.generators[i];
    }
    out += " | ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i) out += ", ";
        out += format_word(p.generators, p.relators[i]);
    }
    return out + " >";
}

}  // namespace tfund
