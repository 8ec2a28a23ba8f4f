#include <doctest.h>

#include "tfund/corpus.hpp"
#include "tfund/document.hpp"

#include <sstream>

using namespace tfund;

namespace {

// The rank-2 wedge divisor in document form: vertex shifts 2/5,1/5 and
// 1/3,1/3 plus a segment, over the cone spanned by (-1,1) and (11,8).
const char* WEDGE_DOC = R"({"kind":"ppdivisor","rank_k":2,
  "tail":[[-1,1],[11,8]],
  "coefficients":[
    {"point":"0","points":[["2/5","1/5"]]},
    {"point":"1","points":[["1/3","1/3"]]},
    {"point":"inf","points":[["0","0"],["1","0"]]}]})";

std::string canon(const std::string& text) { return serialize(parse_document(text)).dump(); }

bool has_line(const std::vector<std::string>& lines, const std::string& needle) {
    for (const std::string& l : lines)
        if (l.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("documents: parse and canonical round trip") {
    SUBCASE("rank-2 divisor with three labelled coefficients") {
        InputDocument doc = parse_document(WEDGE_DOC);
        CHECK(doc.kind == "ppdivisor");
        const PPDivisor& d = std::get<PPDivisor>(doc.payload);
        CHECK(d.rank_k == 2);
        CHECK(d.coefficients.size() == 3);
        CHECK(d.support() == std::vector<std::string>{"0", "1", "inf"});
        CHECK(d.at("inf")->points.size() == 2);

        std::string once = serialize(doc).dump();
        CHECK(once == canon(once));  // serialize . parse is idempotent
    }

    SUBCASE("fan") {
        std::string text = R"({"kind":"fan","rank":2,"cones":[[[0,1]],[[2,-1]]]})";
        InputDocument doc = parse_document(text);
        const Fan& f = std::get<Fan>(doc.payload);
        CHECK(f.ambient_rank == 2);
        CHECK(f.cones.size() == 2);
        CHECK(f.cones[0].ray_list().size() == 1);
        std::string once = serialize(doc).dump();
        CHECK(once == canon(once));
    }

    SUBCASE("cstar bundle") {
        std::string text =
            R"({"kind":"cstar_bundle","points":[{"e":1,"m":2},{"e":1,"m":3},{"e":-1,"m":2}]})";
        InputDocument doc = parse_document(text);
        const CstarBundle& b = std::get<CstarBundle>(doc.payload);
        REQUIRE(b.points.size() == 3);
        CHECK(b.points[2] == std::pair<Int, Int>(-1, 2));
        std::string once = serialize(doc).dump();
        CHECK(once == canon(once));
    }

    SUBCASE("presentation") {
        std::string text = R"({"kind":"presentation","generators":["b1","b2","t"],)"
                           R"("relators":["t b1^3","t b2^5","t b1 b2 b1 b2"]})";
        InputDocument doc = parse_document(text);
        const Presentation& p = std::get<Presentation>(doc.payload);
        CHECK(p.generators == std::vector<std::string>{"b1", "b2", "t"});
        REQUIRE(p.relators.size() == 3);
        CHECK(format_word(p.generators, p.relators[2]) == "t b1 b2 b1 b2");
        std::string once = serialize(doc).dump();
        CHECK(once == canon(once));
        // Non-canonical words canonicalize once and then stay fixed.
        std::string messy = R"({"kind":"presentation","generators":["a"],"relators":["a^0","1"]})";
        CHECK(canon(messy) == canon(canon(messy)));
    }

    SUBCASE("divisorial fan of two members") {
        std::string text = R"({"kind":"divisorial_fan","rank_k":1,"members":[
            {"tail":[[1]],"coefficients":[{"point":"0","points":[["1/2"]]}]},
            {"tail":[[-1]],"coefficients":[{"point":"0","empty":true}]}]})";
        InputDocument doc = parse_document(text);
        const DivisorialFanP1& s = std::get<DivisorialFanP1>(doc.payload);
        REQUIRE(s.members.size() == 2);
        CHECK(!s.members[1].at("0").has_value());
        std::string once = serialize(doc).dump();
        CHECK(once == canon(once));
    }

    SUBCASE("integers may be written as numbers or strings, big ones survive") {
        std::string a = R"({"kind":"ppdivisor","rank_k":2,"tail":[[1,0],[0,1]],
                            "coefficients":[{"point":"0","points":[["1","0"]]}]})";
        std::string b = R"({"kind":"ppdivisor","rank_k":2,"tail":[["1","0"],[0,"1"]],
                            "coefficients":[{"point":"0","points":[[1,0]]}]})";
        CHECK(canon(a) == canon(b));

        std::string big = R"({"kind":"cstar_bundle","points":)"
                          R"([{"e":"1208925819614629174706177","m":2}]})";
        InputDocument doc = parse_document(big);
        CHECK(std::get<CstarBundle>(doc.payload).points[0].first == (Int(1) << 80) + 1);
        CHECK(canon(big) == canon(canon(big)));
    }
}

TEST_CASE("documents: malformed input raises input errors") {
    auto reject = [](const std::string& text, const std::string& needle) {
        try {
            parse_document(text);
            FAIL("accepted: ", text);
        } catch (const input_error& e) {
            INFO("message: ", e.what());
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    reject("{not json", "not valid JSON");
    reject(R"({"rank":2})", "missing field \"kind\"");
    reject(R"({"kind":"sphere"})", "unknown document kind");
    reject(R"({"kind":"fan","rank":2})", "missing field \"cones\"");
    // duplicate point label
    reject(R"({"kind":"ppdivisor","rank_k":1,"tail":[[1]],
               "coefficients":[{"point":"0","points":[["1/2"]]},
                               {"point":"0","points":[["1/3"]]}]})",
           "repeated point label");
    // coefficient/tail rank mismatch
    reject(R"({"kind":"ppdivisor","rank_k":2,"tail":[[1,0]],
               "coefficients":[{"point":"0","points":[["1/2"]]}]})",
           "length 2");
    reject(R"({"kind":"fan","rank":2,"cones":[[[1,0,0]]]})", "length 2");
    // floats are not exact
    reject(R"({"kind":"ppdivisor","rank_k":1,"tail":[[1]],
               "coefficients":[{"point":"0","points":[[0.4]]}]})",
           "floating point");
    // empty and points at once; empty points array
    reject(R"({"kind":"ppdivisor","rank_k":1,"tail":[[1]],
               "coefficients":[{"point":"0","empty":true,"points":[["1/2"]]}]})",
           "cannot be empty");
    reject(R"({"kind":"ppdivisor","rank_k":1,"tail":[[1]],
               "coefficients":[{"point":"0","points":[]}]})",
           "non-empty");
    // unknown generator in a relator
    reject(R"({"kind":"presentation","generators":["a"],"relators":["b"]})", "b");
    // non-integer where an integer is required
    reject(R"({"kind":"cstar_bundle","points":[{"e":"1/2","m":2}]})", "must be an integer");
    reject(R"({"kind":"ppdivisor","rank_k":"2/3","tail":[[1]],"coefficients":[]})",
           "must be an integer");
}

TEST_CASE("run: validate judges properness, klt and platonic multiplicities") {
    SUBCASE("improper wedge divisor exits 2 but keeps the full verdict") {
        Report r = run("validate", parse_document(WEDGE_DOC));
        CHECK(r.exit_code == 2);
        REQUIRE(r.validation.size() == 1);
        CHECK(r.validation[0].member == "divisor");
        CHECK(to_string(r.validation[0].properness) == "NotSemiample(u=(-8, 11))");
        REQUIRE(r.validation[0].klt.has_value());
        CHECK(r.validation[0].klt->pass);
        // vertices contribute (mu-1)/mu = 4/5 and 2/3; the integral segment 0
        CHECK(r.validation[0].klt->sum == Rat(22, 15));
        CHECK(r.validation[0].klt->margin == Rat(8, 15));
        CHECK(!r.validation[0].platonic.has_value());  // rank 2: no triple test
    }

    SUBCASE("degree-zero divisor is not big") {
        std::string text = R"({"kind":"ppdivisor","rank_k":1,"tail":[[1]],
            "coefficients":[{"point":"0","points":[["1/2"]]},
                            {"point":"inf","points":[["-1/2"]]}]})";
        Report r = run("validate", parse_document(text));
        CHECK(r.exit_code == 2);
        CHECK(to_string(r.validation[0].properness) == "NotBig(u=(1))");
    }

    SUBCASE("proper rank-1 divisor with platonic multiplicities") {
        std::string text = R"({"kind":"ppdivisor","rank_k":1,"tail":[[1]],
            "coefficients":[{"point":"0","points":[["1/3"]]},
                            {"point":"1","points":[["1/5"]]},
                            {"point":"inf","points":[["-1/2"]]}]})";
        Report r = run("validate", parse_document(text));
        CHECK(r.exit_code == 0);
        CHECK(r.validation[0].properness.ok());
        REQUIRE(r.validation[0].klt.has_value());
        CHECK(r.validation[0].klt->pass);
        REQUIRE(r.validation[0].platonic.has_value());
        CHECK(*r.validation[0].platonic);
        CHECK(r.validation[0].multiplicities == IntVec{3, 5, 2});
    }

    SUBCASE("zero tail reports why the klt screen does not apply") {
        Report r = run("validate", builtin_entry("duval:E8").document);
        CHECK(r.exit_code == 0);
        CHECK(!r.validation[0].klt.has_value());
        CHECK(r.validation[0].klt_note.find("good-action") != std::string::npos);
        CHECK(r.validation[0].multiplicities == IntVec{3, 5, 2});
    }

    SUBCASE("family members are validated one by one") {
        std::string text = R"({"kind":"divisorial_fan","rank_k":1,"members":[
            {"tail":[[1]],"coefficients":[{"point":"0","points":[["1/2"]]},
                                          {"point":"inf","points":[["-1/2"]]}]},
            {"tail":[[1]],"coefficients":[{"point":"0","points":[["1/3"]]}]}]})";
        Report r = run("validate", parse_document(text));
        CHECK(r.exit_code == 2);  // first member is NotBig
        REQUIRE(r.validation.size() == 2);
        CHECK(r.validation[0].member == "member 0");
        CHECK(!r.validation[0].properness.ok());
        CHECK(r.validation[1].properness.ok());
        CHECK(has_line(r.warnings, "does not list every point label"));
    }
}

TEST_CASE("run: pi1 computes the family group and cross-checks triviality") {
    SUBCASE("wedge divisor: trivial group despite failing properness") {
        Report r = run("pi1", parse_document(WEDGE_DOC));
        CHECK(r.exit_code == 0);
        REQUIRE(r.group.has_value());
        CHECK(order_description(*r.group) == "Finite(1)");
        CHECK(has_line(r.notes, "Theorem 1 cross-check passed"));
        CHECK(has_line(r.warnings, "fails properness: NotSemiample(u=(-8, 11))"));
        CHECK(r.presentation.has_value());
    }

    SUBCASE("same divisor wrapped as a one-member family") {
        std::string text = std::string(R"({"kind":"divisorial_fan","rank_k":2,"members":[)") +
                           R"({"tail":[[-1,1],[11,8]],"coefficients":[
                                {"point":"0","points":[["2/5","1/5"]]},
                                {"point":"1","points":[["1/3","1/3"]]},
                                {"point":"inf","points":[["0","0"],["1","0"]]}]}]})";
        Report r = run("pi1", parse_document(text));
        CHECK(r.exit_code == 0);
        CHECK(order_description(*r.group) == "Finite(1)");
        CHECK(r.validation[0].member == "member 0");
        CHECK(has_line(r.notes, "Theorem 1 cross-check passed"));
    }

    SUBCASE("non-full tails get no cross-check note") {
        std::string text = R"({"kind":"ppdivisor","rank_k":1,"tail":[],
            "coefficients":[{"point":"0","points":[["1/2"]]}]})";
        Report r = run("pi1", parse_document(text));
        CHECK(r.exit_code == 0);
        CHECK(!has_line(r.notes, "cross-check"));
    }
}

TEST_CASE("run: local-pi1 certifies the classical local groups") {
    SUBCASE("binary icosahedral order from the builtin corpus divisor") {
        Report r = run("local-pi1", builtin_entry("duval:E8").document);
        CHECK(r.exit_code == 0);
        CHECK(order_description(*r.group) == "Finite(120)");
        CHECK(r.group->simplified.generators.size() == 2);
        CHECK(to_string(r.group->abelian) == "Z^0");
    }

    SUBCASE("all-faces mode flags relators beyond the extreme rays") {
        std::string text = R"({"kind":"ppdivisor","rank_k":1,"tail":[[1]],
            "coefficients":[{"point":"0","points":[["1/3"]]},
                            {"point":"1","points":[["1/5"]]},
                            {"point":"inf","points":[["-1/2"]]}]})";
        InputDocument doc = parse_document(text);
        RunFlags rays, all;
        all.faces = FacesMode::AllFaces;
        Report rr = run("local-pi1", doc, rays);
        Report ra = run("local-pi1", doc, all);
        CHECK(order_description(*rr.group) == "Finite(120)");
        CHECK(order_description(*ra.group) == "Finite(60)");
        CHECK(rr.notes.empty());
        CHECK(ra.notes == std::vector<std::string>{"relator beyond the extreme rays: t"});
    }
}

TEST_CASE("run: toric, cstar and analyze commands") {
    SUBCASE("toric reports invariants and a matching presentation") {
        Report r = run("toric", parse_document(R"({"kind":"fan","rank":2,
            "cones":[[[0,1]],[[2,-1]]]})"));
        CHECK(r.exit_code == 0);
        REQUIRE(r.invariants.has_value());
        CHECK(to_string(*r.invariants) == "Z^0 x Z/2");
        REQUIRE(r.presentation.has_value());
        CHECK(!r.group.has_value());  // no enumeration for toric input
        CHECK(has_line(r.notes, "matches the direct invariants"));
    }

    SUBCASE("cstar bundle over multiplicities (2,3,2) is dicyclic of order 12") {
        Report r = run("cstar", parse_document(R"({"kind":"cstar_bundle",
            "points":[{"e":1,"m":2},{"e":1,"m":3},{"e":-1,"m":2}]})"));
        CHECK(r.exit_code == 0);
        CHECK(order_description(*r.group) == "Finite(12)");
        CHECK(to_string(r.group->abelian) == "Z^0 x Z/4");
    }

    SUBCASE("analyze certifies a raw presentation of the binary icosahedral group") {
        Report r = run("analyze", parse_document(R"({"kind":"presentation",
            "generators":["b1","b2","t"],
            "relators":["t b1^3","t b2^5","t b1 b2 b1 b2"]})"));
        CHECK(r.exit_code == 0);
        CHECK(order_description(*r.group) == "Finite(120)");
    }

    SUBCASE("exceeding the coset bound exits 3, never lies") {
        RunFlags tight;
        tight.max_cosets = 50;
        Report r = run("analyze", parse_document(R"({"kind":"presentation",
            "generators":["a","b"],"relators":["a^2","b^2"]})"), tight);
        CHECK(r.exit_code == 3);
        CHECK(order_description(*r.group) == "Unknown(limit=50)");
    }

    SUBCASE("commands reject mismatched document kinds") {
        InputDocument fan = parse_document(R"({"kind":"fan","rank":1,"cones":[[[1]]]})");
        CHECK_THROWS_AS(run("pi1", fan), input_error);
        CHECK_THROWS_AS(run("toric", parse_document(WEDGE_DOC)), input_error);
        CHECK_THROWS_AS(run("frobnicate", fan), input_error);
        // run-time schema violations surface as input errors too
        CHECK_THROWS_AS(run("cstar", parse_document(
                                R"({"kind":"cstar_bundle","points":[{"e":2,"m":4}]})")),
                        input_error);
    }
}

TEST_CASE("renderers: machine output is deterministic, text and gap are stable") {
    InputDocument doc = parse_document(WEDGE_DOC);

    SUBCASE("json: byte-identical across runs, carries every section") {
        std::string a = render_json(run("pi1", doc)).dump(2);
        std::string b = render_json(run("pi1", doc)).dump(2);
        CHECK(a == b);
        json j = render_json(run("pi1", doc));
        CHECK(j["command"] == "pi1");
        CHECK(j["input"]["kind"] == "ppdivisor");
        CHECK(j["group"]["order"] == "Finite(1)");
        CHECK(j["group"]["order_value"] == 1);
        CHECK(j["group"]["abelian"]["text"] == "Z^0");
        CHECK(j["validation"][0]["properness"] == "NotSemiample(u=(-8, 11))");
        CHECK(j["exit_code"] == 0);
        // the input echo parses back to the same document
        CHECK(serialize(document_from_json(j["input"])).dump() == serialize(doc).dump());
    }

    SUBCASE("text: stable labelled lines") {
        std::string t = render_text(run("validate", doc));
        CHECK(t.find("command: validate\n") != std::string::npos);
        CHECK(t.find("divisor: properness: NotSemiample(u=(-8, 11))\n") != std::string::npos);
        CHECK(t.find("klt necessary check: pass") != std::string::npos);
        CHECK(t.find("exit: 2\n") != std::string::npos);

        std::string g = render_text(run("local-pi1", builtin_entry("duval:E8").document));
        CHECK(g.find("order: Finite(120)\n") != std::string::npos);
        CHECK(g.find("abelian invariants: Z^0\n") != std::string::npos);
    }

    SUBCASE("gap export") {
        Presentation p({"t", "b1"});
        p.add_relator(parse_word(p.generators, "t^2 b1"));
        p.add_relator(parse_word(p.generators, "b1^-3"));
        CHECK(render_gap(p) ==
              "F := FreeGroup( \"t\", \"b1\" );\n"
              "G := F / [\n  F.1^2*F.2,\n  F.2^-3\n];\n");
        Presentation q({"a"});
        q.add_relator(Word{});
        CHECK(render_gap(q) == "F := FreeGroup( \"a\" );\nG := F / [\n  One(F)\n];\n");
    }
}

TEST_CASE("corpus: every builtin entry matches its frozen outcome") {
    std::ostringstream out;
    int code = run_corpus("", out);
    INFO(out.str());
    CHECK(code == 0);
    CHECK(out.str().find("duval:E8: ok (Finite(120))") != std::string::npos);
    CHECK(out.str().find("paper:sec4-trivial: ok (Finite(1))") != std::string::npos);
    CHECK(out.str().find("paper:logterminal-(2,3,5): ok (Finite(2280))") != std::string::npos);
    CHECK(out.str().find("corpus: all 22 entries match") != std::string::npos);

    std::ostringstream again;
    run_corpus("", again);
    CHECK(out.str() == again.str());  // byte-identical

    std::ostringstream filtered;
    CHECK(run_corpus("duval:D", filtered) == 0);
    CHECK(filtered.str().find("all 5 entries") != std::string::npos);

    std::ostringstream none;
    CHECK(run_corpus("nosuch", none) == 2);

    CHECK(builtin_entry("duval:A1").command == "local-pi1");
    CHECK_THROWS_AS(builtin_entry("duval:Z9"), input_error);
}
