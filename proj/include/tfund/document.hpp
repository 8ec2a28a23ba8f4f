#pragma once

// JSON document surface and command orchestration shared by the CLI and the
// language bindings.  Documents carry a "kind" discriminator; rationals are
// written as integers or exact "a/b" strings (floating point is rejected).
// Machine output is a total function of the input document and flags.

#include "tfund/divisorial.hpp"
#include "tfund/fpgroup.hpp"
#include "tfund/pi1.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tfund {

using json = nlohmann::ordered_json;

struct CstarBundle {
    std::vector<std::pair<Int, Int>> points;  // (e, m) per marked point
};

struct InputDocument {
    std::string kind;  // ppdivisor | divisorial_fan | fan | presentation | cstar_bundle
    std::variant<PPDivisor, DivisorialFanP1, Fan, Presentation, CstarBundle> payload;
};

// Parses and validates a JSON document.  Malformed JSON, unknown kinds,
// schema violations, and inexact numbers raise input errors with positions
// where the JSON parser provides them.
InputDocument parse_document(const std::string& text);
InputDocument document_from_json(const json& j);

// Canonical serialization; serialize(parse(x)) is idempotent.
json serialize(const InputDocument& doc);
json to_json(const PPDivisor& d);
json to_json(const DivisorialFanP1& s);
json to_json(const Fan& f);
json to_json(const Presentation& p);
json to_json(const CstarBundle& b);

struct RunFlags {
    std::size_t max_cosets = 1000000;
    FacesMode faces = FacesMode::Rays;
};

// Validation verdicts for one pp-divisor.
struct MemberValidation {
    std::string member;  // "member 0", "member 1", ... ("divisor" when single)
    ProperVerdict properness;
    std::optional<KltCheck> klt;  // absent when the check does not apply
    std::string klt_note;         // the reason it does not apply
    std::optional<bool> platonic;  // rank-1 three-point multiplicity test
    IntVec multiplicities;         // the tested triple when platonic is set
};

// Exit codes: 0 success, 1 input error (raised, not stored), 2 validation
// failure (improper divisor under `validate`), 3 enumeration exceeded.
struct Report {
    std::string command;
    json input;  // canonical echo of the parsed document
    std::vector<MemberValidation> validation;
    std::optional<AbelianInvariants> invariants;  // `toric` only
    std::optional<Presentation> presentation;
    std::optional<GroupReport> group;  // carries the simplified presentation
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
    int exit_code = 0;
};

// Commands: validate | pi1 | local-pi1 | toric | cstar | analyze.
// (The corpus command lives in corpus.hpp; it has no input document.)
// Improper divisors fail `validate` with exit 2 but only warn under `pi1`
// and `local-pi1`, which compute the presentation regardless.
Report run(const std::string& command, const InputDocument& doc, const RunFlags& flags = {});

std::string render_text(const Report& r);
json render_json(const Report& r);

// A loadable GAP snippet defining F (free group) and G (the quotient).
std::string render_gap(const Presentation& p);

}  // namespace tfund
