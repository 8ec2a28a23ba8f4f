#include "tfund/fpgroup.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace tfund {

namespace {

constexpr std::size_t kMaxTraceLetters = 1000000;

// ------------------------------------------------------------------ abelian

IntMatrix exponent_matrix(const Presentation& p) {
    IntMatrix m(p.generators.size(), {});
    for (const auto& r : p.relators) {
        IntVec row(p.generators.size(), Int(0));
        for (const auto& [gen, exp] : r.syllables) row[gen] += exp;
        m.rows.push_back(std::move(row));
    }
    return m;
}

// ------------------------------------------------------------------- tietze

// Reduce every relator cyclically, drop empties, and deduplicate up to
// rotation/inversion, keeping first occurrences (stable).
void reduce_and_dedupe(std::vector<Word>& relators, std::vector<std::string>& tags) {
    std::vector<Word> words;
    std::vector<std::string> kept_tags;
    std::set<Word> seen;
    for (std::size_t i = 0; i < relators.size(); ++i) {
        Word w = cyclically_reduced(relators[i]);
        if (w.empty()) continue;
        if (!seen.insert(cyclic_canonical(w)).second) continue;
        words.push_back(std::move(w));
        kept_tags.push_back(tags[i]);
    }
    relators = std::move(words);
    tags = std::move(kept_tags);
}

// Remove occurrences of relator r (or its inverse) as a contiguous syllable
// subword of s; strict length decrease.  Returns true when s changed.
bool remove_subword(const Word& r, Word& s) {
    if (r.empty() || r.syllables.size() > s.syllables.size()) return false;
    for (const Word& needle : {r, r.inverse()}) {
        const auto& n = needle.syllables;
        const auto& h = s.syllables;
        for (std::size_t start = 0; start + n.size() <= h.size(); ++start) {
            if (!std::equal(n.begin(), n.end(), h.begin() + start)) continue;
            Word out;
            for (std::size_t i = 0; i < start; ++i) out.push(h[i].first, h[i].second);
            for (std::size_t i = start + n.size(); i < h.size(); ++i)
                out.push(h[i].first, h[i].second);
            s = std::move(out);
            return true;
        }
    }
    return false;
}

// Substitute generator gen := replacement inside w; the result is reduced.
// Expansion of large exponents is capped to keep simplification cheap.
bool substitute(const Word& w, std::size_t gen, const Word& replacement, Word& out) {
    out = Word{};
    const Word inverse_replacement = replacement.inverse();
    for (const auto& [g, exp] : w.syllables) {
        if (g != gen) {
            out.push(g, exp);
            continue;
        }
        if (abs(exp) > 64) return false;  // refuse explosive expansions
        const Word& rep = exp > 0 ? replacement : inverse_replacement;
        for (Int i = 0; i < abs(exp); ++i) out.append(rep);
    }
    return true;
}

}  // namespace

AbelianInvariants abelianization(const Presentation& p) {
    return quotient_invariants(p.generators.size(), exponent_matrix(p));
}

Presentation tietze_simplify(const Presentation& p, std::size_t max_passes) {
    std::vector<std::string> gens = p.generators;
    std::vector<Word> rels = p.relators;
    std::vector<std::string> tags =
        p.provenance.size() == rels.size() ? p.provenance : std::vector<std::string>(rels.size());

    for (std::size_t pass = 0; pass < max_passes; ++pass) {
        bool changed = false;
        reduce_and_dedupe(rels, tags);

        // relator-inside-relator removal (shorter into longer)
        for (std::size_t i = 0; i < rels.size(); ++i)
            for (std::size_t j = 0; j < rels.size(); ++j)
                if (i != j && remove_subword(rels[i], rels[j])) changed = true;
        if (changed) {
            reduce_and_dedupe(rels, tags);
            continue;
        }

        // generator elimination: pick the (generator, relator) pair whose
        // substitution grows the presentation least
        const Int none = -1;
        Int best_cost = none;
        std::size_t best_gen = 0, best_rel = 0;
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
            std::map<std::size_t, std::size_t> count;
            for (const auto& [g, exp] : rels[ri].syllables) ++count[g];
            for (std::size_t si = 0; si < rels[ri].syllables.size(); ++si) {
                const auto& [g, exp] = rels[ri].syllables[si];
                if (count[g] != 1 || abs(exp) != 1) continue;
                Int elsewhere = 0;
                bool feasible = true;
                for (std::size_t rj = 0; rj < rels.size(); ++rj) {
                    if (rj == ri) continue;
                    for (const auto& [h, e] : rels[rj].syllables)
                        if (h == g) {
                            elsewhere += abs(e);
                            if (abs(e) > 64) feasible = false;
                        }
                }
                if (!feasible) continue;
                Int cost = (rels[ri].letter_length() - 1) * elsewhere;
                if (best_cost == none || cost < best_cost) {
                    best_cost = cost;
                    best_gen = g;
                    best_rel = ri;
                }
            }
        }

        if (best_cost != none) {
            // split R = u g^e v; g = u^-1 v^-1 when e = 1, g = v u when e = -1
            const Word& r = rels[best_rel];
            std::size_t pos = r.syllables.size();
            for (std::size_t si = 0; si < r.syllables.size(); ++si)
                if (r.syllables[si].first == best_gen) pos = si;
            Word u, v;
            for (std::size_t si = 0; si < pos; ++si)
                u.push(r.syllables[si].first, r.syllables[si].second);
            for (std::size_t si = pos + 1; si < r.syllables.size(); ++si)
                v.push(r.syllables[si].first, r.syllables[si].second);
            Word replacement;
            if (r.syllables[pos].second == 1)
                replacement = u.inverse().append(v.inverse());
            else
                replacement = Word(v).append(u);

            std::vector<Word> next;
            std::vector<std::string> next_tags;
            bool ok = true;
            for (std::size_t rj = 0; rj < rels.size() && ok; ++rj) {
                if (rj == best_rel) continue;
                Word image;
                ok = substitute(rels[rj], best_gen, replacement, image);
                next.push_back(std::move(image));
                next_tags.push_back(tags[rj]);
            }
            if (ok) {
                // drop the generator and reindex syllables past it
                for (auto& w : next)
                    for (auto& [g, exp] : w.syllables)
                        if (g > best_gen) --g;
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(best_gen));
                rels = std::move(next);
                tags = std::move(next_tags);
                changed = true;
            }
        }

        if (!changed) break;
    }

    reduce_and_dedupe(rels, tags);
    Presentation out(gens);
    for (std::size_t i = 0; i < rels.size(); ++i) out.add_relator(rels[i], tags[i]);
    return out;
}

// ------------------------------------------------------------- todd-coxeter

namespace {

// Letters index table columns: generator g forward = 2g, inverse = 2g + 1.
// Returns false when the shared letter budget runs out (tracing would not
// finish at desk scale; the enumeration then reports Exceeded).
bool letters_of(const Word& w, std::size_t& budget, std::vector<std::size_t>& out) {
    out.clear();
    for (const auto& [gen, exp] : w.syllables) {
        Int n = abs(exp);
        if (n > Int(budget)) return false;
        std::size_t count = static_cast<std::size_t>(n);
        budget -= count;
        std::size_t letter = 2 * gen + (exp < 0 ? 1 : 0);
        out.insert(out.end(), count, letter);
    }
    return true;
}

constexpr std::size_t kUndef = std::numeric_limits<std::size_t>::max();

struct Enumerator {
    std::size_t cols;
    std::size_t cap;
    std::vector<std::vector<std::size_t>> tab;  // tab[coset][letter]
    std::vector<std::size_t> parent;            // union-find over cosets
    std::deque<std::size_t> dead_queue;
    std::size_t live = 0;
    bool overflow = false;

    explicit Enumerator(std::size_t columns, std::size_t max_cosets)
        : cols(columns), cap(max_cosets) {
        new_coset();
    }

    static std::size_t inv(std::size_t letter) { return letter ^ 1; }

    std::size_t rep(std::size_t c) {
        while (parent[c] != c) {
            parent[c] = parent[parent[c]];
            c = parent[c];
        }
        return c;
    }

    std::size_t new_coset() {
        if (live >= cap) {
            overflow = true;
            return kUndef;
        }
        tab.emplace_back(cols, kUndef);
        parent.push_back(tab.size() - 1);
        ++live;
        return tab.size() - 1;
    }

    void set_entry(std::size_t a, std::size_t x, std::size_t b) {
        tab[a][x] = b;
        tab[b][inv(x)] = a;
    }

    std::size_t define(std::size_t a, std::size_t x) {
        std::size_t b = new_coset();
        if (b == kUndef) return kUndef;
        set_entry(a, x, b);
        return b;
    }

    void merge(std::size_t a, std::size_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        --live;
        dead_queue.push_back(b);
    }

    void process_coincidences() {
        while (!dead_queue.empty()) {
            std::size_t e = dead_queue.front();
            dead_queue.pop_front();
            for (std::size_t x = 0; x < cols; ++x) {
                std::size_t f = tab[e][x];
                if (f == kUndef) continue;
                tab[e][x] = kUndef;
                tab[f][inv(x)] = kUndef;  // the paired entry pointing back at e
                std::size_t e1 = rep(e), f1 = rep(f);
                if (tab[e1][x] != kUndef)
                    merge(f1, tab[e1][x]);
                else if (tab[f1][inv(x)] != kUndef)
                    merge(e1, tab[f1][inv(x)]);
                else
                    set_entry(e1, x, f1);
            }
        }
    }

    // Holt-style scan of one relator from one coset, filling gaps.
    void scan_and_fill(std::size_t start, const std::vector<std::size_t>& w) {
        if (w.empty()) return;
        std::size_t f = start, b = start;
        std::size_t i = 0, j = w.size();  // trace w[i..j-1] forward, rest backward
        for (;;) {
            while (i < j && tab[f][w[i]] != kUndef) f = tab[f][w[i++]];
            if (i == j) {
                if (f != b) {
                    merge(f, b);
                    process_coincidences();
                }
                return;
            }
            while (j > i && tab[b][inv(w[j - 1])] != kUndef) b = tab[b][inv(w[--j])];
            if (j == i) {  // both scans met across the same entry
                merge(f, b);
                process_coincidences();
                return;
            }
            if (j == i + 1) {  // deduction closes the gap
                set_entry(f, w[i], b);
                return;
            }
            if (define(f, w[i]) == kUndef) return;  // overflow
        }
    }
};

}  // namespace

EnumerationResult todd_coxeter(const Presentation& p, std::size_t max_cosets) {
    const std::size_t g = p.generators.size();
    if (g == 0) {
        EnumerationResult out;
        out.order = 1;
        out.table.generator_count = 0;
        out.table.rows = {{}};
        return out;
    }

    std::size_t budget = kMaxTraceLetters;
    std::vector<std::vector<std::size_t>> relator_letters;
    for (const auto& r : p.relators) {
        Word w = cyclically_reduced(r);
        if (w.empty()) continue;
        std::vector<std::size_t> letters;
        if (!letters_of(w, budget, letters)) {
            EnumerationResult out;
            out.exceeded = true;
            return out;
        }
        relator_letters.push_back(std::move(letters));
    }

    Enumerator en(2 * g, max_cosets);
    for (std::size_t c = 0; c < en.tab.size() && !en.overflow; ++c) {
        if (en.rep(c) != c) continue;
        for (const auto& w : relator_letters) {
            en.scan_and_fill(c, w);
            if (en.overflow || en.rep(c) != c) break;
        }
        if (en.overflow || en.rep(c) != c) continue;
        for (std::size_t x = 0; x < en.cols && !en.overflow; ++x)
            if (en.tab[c][x] == kUndef) en.define(c, x);
    }

    EnumerationResult out;
    if (en.overflow) {
        out.exceeded = true;
        return out;
    }

    // standardize: breadth-first renumbering from the subgroup coset
    std::vector<std::size_t> number(en.tab.size(), kUndef);
    std::vector<std::size_t> order_of;
    std::size_t root = en.rep(0);
    number[root] = 0;
    order_of.push_back(root);
    for (std::size_t head = 0; head < order_of.size(); ++head) {
        std::size_t c = order_of[head];
        for (std::size_t x = 0; x < en.cols; ++x) {
            std::size_t d = en.tab[c][x];
            if (d == kUndef) throw std::logic_error("coset table closed with a hole");
            d = en.rep(d);
            if (number[d] == kUndef) {
                number[d] = order_of.size();
                order_of.push_back(d);
            }
        }
    }
    if (order_of.size() != en.live)
        throw std::logic_error("coset table is not transitive after closure");

    out.table.generator_count = g;
    out.table.rows.assign(en.live, std::vector<std::size_t>(en.cols, 0));
    for (std::size_t c = 0; c < order_of.size(); ++c)
        for (std::size_t x = 0; x < en.cols; ++x)
            out.table.rows[c][x] = number[en.rep(en.tab[order_of[c]][x])];

    // verify: an involution-consistent action where every relator fixes
    // every coset
    for (std::size_t c = 0; c < out.table.rows.size(); ++c)
        for (std::size_t x = 0; x < en.cols; ++x)
            if (out.table.rows[out.table.rows[c][x]][Enumerator::inv(x)] != c)
                throw std::logic_error("coset table action is not involution-consistent");
    for (const auto& w : relator_letters)
        for (std::size_t c = 0; c < out.table.rows.size(); ++c) {
            std::size_t at = c;
            for (std::size_t letter : w) at = out.table.rows[at][letter];
            if (at != c) throw std::logic_error("closed coset table violates a relator");
        }

    out.order = Int(en.live);
    return out;
}

GroupReport analyze(const Presentation& p, std::size_t max_cosets) {
    GroupReport report;
    report.abelian = abelianization(p);
    report.simplified = tietze_simplify(p);
    report.notes.push_back("abelian invariants: " + to_string(report.abelian));
    if (report.simplified.generators.size() != p.generators.size())
        report.notes.push_back(
            "simplification eliminated " +
            std::to_string(p.generators.size() - report.simplified.generators.size()) +
            " generator(s)");

    if (report.abelian.free_rank > 0) {
        report.kind = GroupReport::OrderKind::InfiniteCertified;
        report.notes.push_back("infinite: abelianization has positive free rank");
        return report;
    }

    EnumerationResult tc = todd_coxeter(report.simplified, max_cosets);
    if (tc.exceeded) {
        report.kind = GroupReport::OrderKind::Unknown;
        report.limit = max_cosets;
        report.notes.push_back("coset enumeration exceeded the live-coset bound");
        return report;
    }
    report.kind = GroupReport::OrderKind::Finite;
    report.order = tc.order;
    report.notes.push_back("coset enumeration closed with " + to_string(tc.order) + " coset(s)");
    if (tc.order % report.abelian.torsion_order() != 0)
        throw std::logic_error("enumeration order is not a multiple of the abelianization order");
    return report;
}

std::string order_description(const GroupReport& r) {
    switch (r.kind) {
        case GroupReport::OrderKind::Finite:
            return "Finite(" + to_string(r.order) + ")";
        case GroupReport::OrderKind::InfiniteCertified:
            return "InfiniteCertified";
        default:
            return "Unknown(limit=" + std::to_string(r.limit) + ")";
    }
}

}  // namespace tfund
