#include "tfund/corpus.hpp"

namespace tfund {
namespace {

PolyCoeff shifted_tail(const Cone& tail, std::vector<RatVec> vertices) {
    return Polyhedron(tail.ambient_rank(), std::move(vertices), tail);
}

InputDocument wrap_divisor(PPDivisor d) {
    InputDocument doc;
    doc.kind = "ppdivisor";
    doc.payload = std::move(d);
    return doc;
}

// Rank-1 divisor with zero tail and one rational vertex per labelled point.
InputDocument line_divisor(std::vector<std::pair<std::string, Rat>> values) {
    Cone tail = Cone::zero(1);
    std::vector<std::pair<std::string, PolyCoeff>> coeffs;
    for (auto& [label, q] : values)
        coeffs.emplace_back(label, shifted_tail(tail, {RatVec{q}}));
    return wrap_divisor(PPDivisor(1, tail, std::move(coeffs)));
}

CorpusEntry local_entry(std::string name, InputDocument doc, const Int& order,
                        std::string abelian) {
    CorpusEntry e;
    e.name = std::move(name);
    e.command = "local-pi1";
    e.document = std::move(doc);
    e.order = "Finite(" + to_string(order) + ")";
    e.abelian = std::move(abelian);
    e.properness = "Proper";
    return e;
}

CorpusEntry cyclic_entry(int i) {
    // One point with coefficient (i+1)/i: cyclic local group of order i+1.
    return local_entry("duval:A" + std::to_string(i),
                       line_divisor({{"inf", Rat(i + 1, i)}}), i + 1,
                       "Z^0 x Z/" + std::to_string(i + 1));
}

CorpusEntry dihedral_entry(int i) {
    // Coefficients 1/2, 1/(i-2), -1/2: binary dihedral group of order 4(i-2),
    // whose abelianization is Z/4 for odd i-2 and Z/2 x Z/2 for even i-2.
    return local_entry(
        "duval:D" + std::to_string(i),
        line_divisor({{"0", Rat(1, 2)}, {"1", Rat(1, i - 2)}, {"inf", Rat(-1, 2)}}),
        4 * (i - 2), (i - 2) % 2 ? "Z^0 x Z/4" : "Z^0 x Z/2 x Z/2");
}

CorpusEntry exceptional_entry(int i, const Int& order, std::string abelian) {
    // Coefficients 1/3, 1/(i-3), -1/2: binary tetrahedral, octahedral and
    // icosahedral groups for i = 6, 7, 8.
    return local_entry(
        "duval:E" + std::to_string(i),
        line_divisor({{"0", Rat(1, 3)}, {"1", Rat(1, i - 3)}, {"inf", Rat(-1, 2)}}),
        order, std::move(abelian));
}

CorpusEntry wedge_entry() {
    // Rank-2 divisor on the wedge over (-1,1) and (11,8) with vertex shifts
    // (2/5,1/5), (1/3,1/3) and segment conv((0,0),(1,0)).  The evaluation
    // degree is negative on the dual ray (-8,11), yet the fundamental group
    // of the full-dimensional-tail family is trivial.
    Cone tail = Cone::from_generators(2, {IntVec{-1, 1}, IntVec{11, 8}});
    std::vector<std::pair<std::string, PolyCoeff>> coeffs;
    coeffs.emplace_back("0", shifted_tail(tail, {RatVec{Rat(2, 5), Rat(1, 5)}}));
    coeffs.emplace_back("1", shifted_tail(tail, {RatVec{Rat(1, 3), Rat(1, 3)}}));
    coeffs.emplace_back("inf", shifted_tail(tail, {RatVec{Rat(0), Rat(0)}, RatVec{Rat(1), Rat(0)}}));

    CorpusEntry e;
    e.name = "paper:sec4-trivial";
    e.command = "pi1";
    e.document = wrap_divisor(PPDivisor(2, tail, std::move(coeffs)));
    e.order = "Finite(1)";
    e.abelian = "Z^0";
    e.properness = "NotSemiample(u=(-8, 11))";
    e.note = "Theorem 1 cross-check passed";
    return e;
}

CorpusEntry bundle_entry(int m1, int m2, int m3, const Int& order, int torsion) {
    // C*-bundle with coefficients 1/m1, 1/m2, -1/m3 over a platonic triple;
    // the group is a central extension of the matching von Dyck triangle
    // group, of order (1/m1 + 1/m2 - 1/m3) * |triangle group|^2, with cyclic
    // abelianization.
    CstarBundle b;
    b.points = {{1, m1}, {1, m2}, {-1, m3}};
    InputDocument doc;
    doc.kind = "cstar_bundle";
    doc.payload = std::move(b);

    CorpusEntry e;
    e.name = "paper:logterminal-(" + std::to_string(m1) + "," + std::to_string(m2) + "," +
             std::to_string(m3) + ")";
    e.command = "cstar";
    e.document = std::move(doc);
    e.order = "Finite(" + to_string(order) + ")";
    e.abelian = "Z^0 x Z/" + std::to_string(torsion);
    return e;
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> all;
    for (int i = 1; i <= 8; ++i) all.push_back(cyclic_entry(i));
    for (int i = 4; i <= 8; ++i) all.push_back(dihedral_entry(i));
    all.push_back(exceptional_entry(6, 24, "Z^0 x Z/3"));
    all.push_back(exceptional_entry(7, 48, "Z^0 x Z/2"));
    all.push_back(exceptional_entry(8, 120, "Z^0"));
    all.push_back(wedge_entry());
    all.push_back(bundle_entry(2, 3, 3, 72, 9));
    all.push_back(bundle_entry(2, 3, 4, 336, 14));
    all.push_back(bundle_entry(2, 3, 5, 2280, 19));
    all.push_back(bundle_entry(2, 2, 7, 168, 24));
    all.push_back(bundle_entry(1, 4, 5, 21, 21));
    return all;
}

// "" when the report matches the frozen fields, else a description.
std::string diff_entry(const CorpusEntry& e, const Report& r) {
    std::string diff;
    auto mismatch = [&diff](const std::string& what, const std::string& expected,
                            const std::string& got) {
        if (!diff.empty()) diff += "; ";
        diff += what + ": expected " + expected + ", got " + got;
    };
    if (!e.order.empty()) {
        std::string got = r.group ? order_description(*r.group) : "(no group)";
        if (got != e.order) mismatch("order", e.order, got);
    }
    if (!e.abelian.empty()) {
        std::string got = r.group ? to_string(r.group->abelian) : "(no group)";
        if (got != e.abelian) mismatch("abelian", e.abelian, got);
    }
    if (!e.properness.empty()) {
        std::string got =
            r.validation.empty() ? "(no verdict)" : to_string(r.validation[0].properness);
        if (got != e.properness) mismatch("properness", e.properness, got);
    }
    if (!e.note.empty()) {
        bool found = false;
        for (const std::string& n : r.notes) found = found || n == e.note;
        if (!found) mismatch("note", "\"" + e.note + "\"", "absent");
    }
    return diff;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = build_corpus();
    return corpus;
}

const CorpusEntry& builtin_entry(const std::string& name) {
    for (const CorpusEntry& e : builtin_corpus())
        if (e.name == name) return e;
    std::string names;
    for (const CorpusEntry& e : builtin_corpus()) {
        if (!names.empty()) names += ", ";
        names += e.name;
    }
    throw input_error("unknown builtin \"" + name + "\"; available: " + names);
}

int run_corpus(const std::string& filter, std::ostream& out) {
    std::size_t matched = 0;
    std::size_t mismatched = 0;
    for (const CorpusEntry& e : builtin_corpus()) {
        if (!filter.empty() && e.name.find(filter) == std::string::npos) continue;
        ++matched;
        Report r = run(e.command, e.document, {});
        std::string diff = diff_entry(e, r);
        if (diff.empty()) {
            std::string summary = e.order.empty() ? to_string(r.group->abelian) : e.order;
            out << e.name << ": ok (" << summary << ")\n";
        } else {
            out << e.name << ": MISMATCH: " << diff << "\n";
            ++mismatched;
        }
    }
    if (matched == 0) {
        out << "no builtin matches \"" << filter << "\"\n";
        return 2;
    }
    if (mismatched == 0) {
        out << "corpus: all " << matched << " entries match the frozen outcomes\n";
        return 0;
    }
    out << "corpus: " << mismatched << " of " << matched << " entries mismatch\n";
    return 2;
}

}  // namespace tfund
