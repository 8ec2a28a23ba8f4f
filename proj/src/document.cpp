#include "tfund/document.hpp"

#include <limits>

namespace tfund {
namespace {

// ------------------------------------------------------------ json -> values

const json& field(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw input_error(std::string(where) + ": missing field \"" + key + "\"");
    return j[key];
}

Int int_from_json(const json& j, const char* what) {
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        Rat q = parse_rational(j.get<std::string>());
        if (den(q) != 1) throw input_error(std::string(what) + " must be an integer");
        return num(q);
    }
    throw input_error(std::string(what) + " must be an integer (number or string)");
}

Rat rat_from_json(const json& j, const char* what) {
    if (j.is_number_float())
        throw input_error(std::string(what) +
                          ": floating point is not exact; write an integer or \"a/b\"");
    if (j.is_number_unsigned()) return Rat(Int(j.get<unsigned long long>()));
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw input_error(std::string(what) + " must be an integer or an \"a/b\" string");
}

std::size_t rank_from_json(const json& j, const char* key, const char* where) {
    Int r = int_from_json(field(j, key, where), key);
    if (r < 1 || r > 64) throw input_error(std::string(where) + ": " + key + " out of range");
    return r.convert_to<std::size_t>();
}

IntVec intvec_from_json(const json& j, std::size_t rank, const char* what) {
    if (!j.is_array() || j.size() != rank)
        throw input_error(std::string(what) + " must be an array of length " +
                          std::to_string(rank));
    IntVec v;
    for (const auto& x : j) v.push_back(int_from_json(x, what));
    return v;
}

RatVec ratvec_from_json(const json& j, std::size_t rank, const char* what) {
    if (!j.is_array() || j.size() != rank)
        throw input_error(std::string(what) + " must be an array of length " +
                          std::to_string(rank));
    RatVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x, what));
    return v;
}

Cone cone_from_json(const json& j, std::size_t rank, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array of generators");
    std::vector<IntVec> gens;
    for (const auto& g : j) gens.push_back(intvec_from_json(g, rank, what));
    return Cone::from_generators(rank, gens);
}

std::vector<std::pair<std::string, PolyCoeff>> coefficients_from_json(const json& j,
                                                                      std::size_t rank,
                                                                      const Cone& tail) {
    if (!j.is_array()) throw input_error("\"coefficients\" must be an array");
    std::vector<std::pair<std::string, PolyCoeff>> out;
    for (const auto& item : j) {
        const json& label_json = field(item, "point", "coefficient");
        if (!label_json.is_string()) throw input_error("coefficient: \"point\" must be a string");
        std::string label = label_json.get<std::string>();
        if (item.value("empty", false)) {
            if (item.contains("points"))
                throw input_error("coefficient at " + label +
                                  " cannot be empty and carry points at once");
            out.emplace_back(label, std::nullopt);
            continue;
        }
        const json& pts_json = field(item, "points", "coefficient");
        if (!pts_json.is_array() || pts_json.empty())
            throw input_error("coefficient at " + label +
                              " needs a non-empty \"points\" array (or \"empty\": true)");
        std::vector<RatVec> pts;
        for (const auto& p : pts_json)
            pts.push_back(ratvec_from_json(p, rank, "coefficient point"));
        out.emplace_back(label, Polyhedron(rank, pts, tail));
    }
    return out;
}

PPDivisor member_from_json(const json& j, std::size_t rank, const char* where) {
    Cone tail = cone_from_json(field(j, "tail", where), rank, "tail generator");
    std::vector<std::pair<std::string, PolyCoeff>> coeffs;
    if (j.contains("coefficients")) coeffs = coefficients_from_json(j["coefficients"], rank, tail);
    return PPDivisor(rank, std::move(tail), std::move(coeffs));
}

// ------------------------------------------------------------ values -> json

json int_to_json(const Int& n) {
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
        return json(n.convert_to<long long>());
    return json(to_string(n));
}

json intvec_to_json(const IntVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

json cone_to_json(const Cone& c) {
    json out = json::array();
    for (const IntVec& g : c.generators()) out.push_back(intvec_to_json(g));
    return out;
}

json coefficients_to_json(const PPDivisor& d) {
    json out = json::array();
    for (const auto& [label, coeff] : d.coefficients) {
        json item;
        item["point"] = label;
        if (!coeff) {
            item["empty"] = true;
        } else {
            json pts = json::array();
            for (const RatVec& p : coeff->points) {
                json row = json::array();
                for (const Rat& q : p) row.push_back(to_string(q));
                pts.push_back(row);
            }
            item["points"] = pts;
        }
        out.push_back(item);
    }
    return out;
}

json member_to_json(const PPDivisor& d) {
    json out;
    out["tail"] = cone_to_json(d.tail);
    out["coefficients"] = coefficients_to_json(d);
    return out;
}

json abelian_to_json(const AbelianInvariants& a) {
    json out;
    out["free_rank"] = a.free_rank;
    json torsion = json::array();
    for (const Int& d : a.torsion) torsion.push_back(int_to_json(d));
    out["torsion"] = torsion;
    out["text"] = to_string(a);
    return out;
}

json validation_to_json(const MemberValidation& v) {
    json out;
    out["member"] = v.member;
    out["properness"] = to_string(v.properness);
    if (v.klt) {
        json k;
        k["pass"] = v.klt->pass;
        k["sum"] = to_string(v.klt->sum);
        k["margin"] = to_string(v.klt->margin);
        out["klt"] = k;
    } else if (!v.klt_note.empty()) {
        out["klt_note"] = v.klt_note;
    }
    if (v.platonic) {
        json p;
        p["multiplicities"] = intvec_to_json(v.multiplicities);
        p["pass"] = *v.platonic;
        out["platonic"] = p;
    }
    return out;
}

// ------------------------------------------------------------ run() helpers

MemberValidation validate_member(std::string name, const PPDivisor& d) {
    MemberValidation v;
    v.member = std::move(name);
    v.properness = is_proper(d);
    try {
        v.klt = klt_necessary_check(d);
    } catch (const input_error& e) {
        v.klt_note = e.what();
    }
    std::vector<std::string> support = d.support();
    if (d.rank_k == 1 && support.size() == 3) {
        IntVec mult;
        for (const std::string& label : support) {
            const PolyCoeff& coeff = d.at(label);
            if (!coeff) break;
            Int m = 1;
            for (const RatVec& pt : coeff->points) m = std::max(m, mu(pt));
            mult.push_back(m);
        }
        if (mult.size() == 3) {
            v.platonic = platonic_triple_check(mult[0], mult[1], mult[2]);
            v.multiplicities = mult;
        }
    }
    return v;
}

void attach_group(Report& r, const Presentation& p, const RunFlags& flags) {
    r.presentation = p;
    r.group = analyze(p, flags.max_cosets);
    if (r.group->kind == GroupReport::OrderKind::Unknown) r.exit_code = 3;
}

template <typename T>
const T& expect_payload(const InputDocument& doc, const char* command, const char* kinds) {
    const T* p = std::get_if<T>(&doc.payload);
    if (!p)
        throw input_error(std::string(command) + " expects a " + kinds + " document, got " +
                          doc.kind);
    return *p;
}

}  // namespace

// ---------------------------------------------------------------- documents

InputDocument document_from_json(const json& j) {
    const json& kind_json = field(j, "kind", "document");
    if (!kind_json.is_string()) throw input_error("document: \"kind\" must be a string");
    std::string kind = kind_json.get<std::string>();

    InputDocument doc;
    doc.kind = kind;
    if (kind == "ppdivisor") {
        std::size_t rank = rank_from_json(j, "rank_k", "ppdivisor");
        doc.payload = member_from_json(j, rank, "ppdivisor");
    } else if (kind == "divisorial_fan") {
        std::size_t rank = rank_from_json(j, "rank_k", "divisorial_fan");
        const json& members = field(j, "members", "divisorial_fan");
        if (!members.is_array()) throw input_error("divisorial_fan: \"members\" must be an array");
        std::vector<PPDivisor> ds;
        for (const auto& m : members) ds.push_back(member_from_json(m, rank, "member"));
        doc.payload = DivisorialFanP1(rank, std::move(ds));
    } else if (kind == "fan") {
        std::size_t rank = rank_from_json(j, "rank", "fan");
        const json& cones = field(j, "cones", "fan");
        if (!cones.is_array()) throw input_error("fan: \"cones\" must be an array");
        std::vector<Cone> cs;
        for (const auto& c : cones) cs.push_back(cone_from_json(c, rank, "cone generator"));
        doc.payload = Fan(rank, std::move(cs));
    } else if (kind == "presentation") {
        const json& gens = field(j, "generators", "presentation");
        if (!gens.is_array()) throw input_error("presentation: \"generators\" must be an array");
        std::vector<std::string> names;
        for (const auto& g : gens) {
            if (!g.is_string()) throw input_error("presentation: generator names must be strings");
            names.push_back(g.get<std::string>());
        }
        Presentation p(names);
        const json& rels = field(j, "relators", "presentation");
        if (!rels.is_array()) throw input_error("presentation: \"relators\" must be an array");
        for (const auto& r : rels) {
            if (!r.is_string()) throw input_error("presentation: relators must be word strings");
            p.add_relator(parse_word(names, r.get<std::string>()));
        }
        doc.payload = std::move(p);
    } else if (kind == "cstar_bundle") {
        const json& pts = field(j, "points", "cstar_bundle");
        if (!pts.is_array()) throw input_error("cstar_bundle: \"points\" must be an array");
        CstarBundle b;
        for (const auto& p : pts)
            b.points.emplace_back(int_from_json(field(p, "e", "cstar point"), "e"),
                                  int_from_json(field(p, "m", "cstar point"), "m"));
        doc.payload = std::move(b);
    } else {
        throw input_error("unknown document kind: " + kind);
    }
    return doc;
}

InputDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("document is not valid JSON: ") + e.what());
    }
    return document_from_json(j);
}

json to_json(const PPDivisor& d) {
    json out;
    out["kind"] = "ppdivisor";
    out["rank_k"] = d.rank_k;
    json body = member_to_json(d);
    out["tail"] = body["tail"];
    out["coefficients"] = body["coefficients"];
    return out;
}

json to_json(const DivisorialFanP1& s) {
    json out;
    out["kind"] = "divisorial_fan";
    out["rank_k"] = s.rank_k;
    json members = json::array();
    for (const PPDivisor& d : s.members) members.push_back(member_to_json(d));
    out["members"] = members;
    return out;
}

json to_json(const Fan& f) {
    json out;
    out["kind"] = "fan";
    out["rank"] = f.ambient_rank;
    json cones = json::array();
    for (const Cone& c : f.cones) cones.push_back(cone_to_json(c));
    out["cones"] = cones;
    return out;
}

json to_json(const Presentation& p) {
    json out;
    out["kind"] = "presentation";
    out["generators"] = p.generators;
    json rels = json::array();
    for (const Word& w : p.relators) rels.push_back(format_word(p.generators, w));
    out["relators"] = rels;
    return out;
}

json to_json(const CstarBundle& b) {
    json out;
    out["kind"] = "cstar_bundle";
    json pts = json::array();
    for (const auto& [e, m] : b.points) {
        json p;
        p["e"] = int_to_json(e);
        p["m"] = int_to_json(m);
        pts.push_back(p);
    }
    out["points"] = pts;
    return out;
}

json serialize(const InputDocument& doc) {
    return std::visit([](const auto& payload) { return to_json(payload); }, doc.payload);
}

// ---------------------------------------------------------------------- run

Report run(const std::string& command, const InputDocument& doc, const RunFlags& flags) {
    Report r;
    r.command = command;
    r.input = serialize(doc);

    if (command == "validate") {
        if (const PPDivisor* d = std::get_if<PPDivisor>(&doc.payload)) {
            r.validation.push_back(validate_member("divisor", *d));
        } else if (const DivisorialFanP1* s = std::get_if<DivisorialFanP1>(&doc.payload)) {
            for (std::size_t i = 0; i < s->members.size(); ++i)
                r.validation.push_back(
                    validate_member("member " + std::to_string(i), s->members[i]));
            for (std::string& w : shallow_warnings(*s)) r.warnings.push_back(std::move(w));
        } else {
            throw input_error("validate expects a ppdivisor or divisorial_fan document, got " +
                              doc.kind);
        }
        for (const MemberValidation& v : r.validation)
            if (!v.properness.ok()) r.exit_code = 2;
        return r;
    }

    if (command == "pi1") {
        DivisorialFanP1 s;
        if (const PPDivisor* d = std::get_if<PPDivisor>(&doc.payload)) {
            s = DivisorialFanP1(d->rank_k, {*d});
            r.validation.push_back(validate_member("divisor", *d));
        } else if (const DivisorialFanP1* sp = std::get_if<DivisorialFanP1>(&doc.payload)) {
            s = *sp;
            for (std::size_t i = 0; i < s.members.size(); ++i)
                r.validation.push_back(
                    validate_member("member " + std::to_string(i), s.members[i]));
            for (std::string& w : shallow_warnings(s)) r.warnings.push_back(std::move(w));
        } else {
            throw input_error("pi1 expects a ppdivisor or divisorial_fan document, got " +
                              doc.kind);
        }
        bool all_proper = true;
        for (const MemberValidation& v : r.validation)
            if (!v.properness.ok()) {
                all_proper = false;
                r.warnings.push_back(v.member + " fails properness: " + to_string(v.properness) +
                                     "; computing the presentation anyway");
            }
        attach_group(r, complexity_one_presentation(s), flags);

        bool full_tails = true;
        for (const PPDivisor& d : s.members) full_tails = full_tails && d.tail.dim() == s.rank_k;
        if (full_tails) {
            if (r.group->is_trivial_group())
                r.notes.push_back("Theorem 1 cross-check passed");
            else if (all_proper)
                r.warnings.push_back(
                    "trivial-group cross-check failed for a proper full-tail input");
        }
        return r;
    }

    if (command == "local-pi1") {
        const PPDivisor& d = expect_payload<PPDivisor>(doc, "local-pi1", "ppdivisor");
        r.validation.push_back(validate_member("divisor", d));
        if (!r.validation[0].properness.ok())
            r.warnings.push_back("divisor fails properness: " +
                                 to_string(r.validation[0].properness) +
                                 "; computing the presentation anyway");
        Presentation p = local_pi1_presentation(d, flags.faces);
        if (flags.faces == FacesMode::AllFaces)
            for (const Word& w : allfaces_extra_relators(d))
                r.notes.push_back("relator beyond the extreme rays: " +
                                  format_word(p.generators, w));
        attach_group(r, p, flags);
        return r;
    }

    if (command == "toric") {
        const Fan& f = expect_payload<Fan>(doc, "toric", "fan");
        r.invariants = toric_pi1_invariants(f);
        r.presentation = toric_pi1_presentation(f);
        if (abelianization(*r.presentation) != *r.invariants)
            throw std::logic_error("toric presentation disagrees with the direct invariants");
        r.notes.push_back("presentation abelianization matches the direct invariants");
        return r;
    }

    if (command == "cstar") {
        const CstarBundle& b = expect_payload<CstarBundle>(doc, "cstar", "cstar_bundle");
        attach_group(r, cstar_bundle_presentation(b.points), flags);
        return r;
    }

    if (command == "analyze") {
        const Presentation& p = expect_payload<Presentation>(doc, "analyze", "presentation");
        attach_group(r, p, flags);
        return r;
    }

    throw input_error("unknown command: " + command);
}

// ----------------------------------------------------------------- renderers

json render_json(const Report& r) {
    json out;
    out["command"] = r.command;
    out["input"] = r.input;
    if (!r.validation.empty()) {
        json v = json::array();
        for (const MemberValidation& m : r.validation) v.push_back(validation_to_json(m));
        out["validation"] = v;
    }
    if (r.invariants) out["invariants"] = abelian_to_json(*r.invariants);
    if (r.presentation) out["presentation"] = to_json(*r.presentation);
    if (r.group) {
        json g;
        g["abelian"] = abelian_to_json(r.group->abelian);
        g["order"] = order_description(*r.group);
        if (r.group->kind == GroupReport::OrderKind::Finite)
            g["order_value"] = int_to_json(r.group->order);
        if (r.group->kind == GroupReport::OrderKind::Unknown) g["limit"] = r.group->limit;
        g["simplified"] = to_json(r.group->simplified);
        g["notes"] = r.group->notes;
        out["group"] = g;
    }
    out["warnings"] = r.warnings;
    out["notes"] = r.notes;
    out["exit_code"] = r.exit_code;
    return out;
}

std::string render_text(const Report& r) {
    std::string out = "command: " + r.command + "\n";
    std::string kind = r.input.value("kind", "?");
    out += "input: " + kind + "\n";
    for (const MemberValidation& v : r.validation) {
        out += v.member + ": properness: " + to_string(v.properness) + "\n";
        if (v.klt) {
            out += v.member + ": klt necessary check: " + (v.klt->pass ? "pass" : "fail") +
                   " (boundary degree " + to_string(v.klt->sum) + ", margin " +
                   to_string(v.klt->margin) + ")\n";
        } else if (!v.klt_note.empty()) {
            out += v.member + ": klt necessary check: not applicable: " + v.klt_note + "\n";
        }
        if (v.platonic)
            out += v.member + ": platonic multiplicities " + to_string(v.multiplicities) + ": " +
                   (*v.platonic ? "yes" : "no") + "\n";
    }
    if (r.invariants) out += "invariants: " + to_string(*r.invariants) + "\n";
    if (r.presentation) out += "presentation: " + to_string(*r.presentation) + "\n";
    if (r.group) {
        out += "abelian invariants: " + to_string(r.group->abelian) + "\n";
        out += "simplified: " + to_string(r.group->simplified) + "\n";
        out += "order: " + order_description(*r.group) + "\n";
        for (const std::string& n : r.group->notes) out += "engine note: " + n + "\n";
    }
    for (const std::string& n : r.notes) out += "note: " + n + "\n";
    for (const std::string& w : r.warnings) out += "warning: " + w + "\n";
    out += "exit: " + std::to_string(r.exit_code) + "\n";
    return out;
}

std::string render_gap(const Presentation& p) {
    std::string out = "F := FreeGroup(";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) out += ",";
        out += " \"" + p.generators[i] + "\"";
    }
    out += " );\nG := F / [";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        out += (i ? ",\n  " : "\n  ");
        const Word& w = p.relators[i];
        if (w.empty()) {
            out += "One(F)";
            continue;
        }
        for (std::size_t s = 0; s < w.syllables.size(); ++s) {
            if (s) out += "*";
            out += "F." + std::to_string(w.syllables[s].first + 1);
            if (w.syllables[s].second != 1) out += "^" + to_string(w.syllables[s].second);
        }
    }
    out += "\n];\n";
    return out;
}

}  // namespace tfund
