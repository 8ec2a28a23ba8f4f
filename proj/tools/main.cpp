// tfund: validation, fundamental-group presentations and certification for
// torus varieties given by polyhedral-divisor, fan, C*-bundle or raw
// presentation documents.  Exit codes: 0 ok, 1 input error, 2 validation
// failure / corpus mismatch, 3 enumeration bound exceeded.

#include <CLI11.hpp>

#include "tfund/corpus.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

namespace {

struct Options {
    std::string input_path;
    std::string builtin;
    std::string format = "text";
    std::string export_kind;
    std::size_t max_cosets = 1000000;
    std::string faces = "rays";
};

std::string read_input(const std::string& path) {
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tfund::input_error("cannot open input file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void add_common(CLI::App* cmd, Options& opt, bool enumerates, bool has_faces) {
    cmd->add_option("input", opt.input_path, "input document file, or - for stdin");
    cmd->add_option("--builtin", opt.builtin, "name of a built-in corpus input")
        ->excludes(cmd->get_option("input"));
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--export", opt.export_kind,
                    "emit only the presentation in an external format")
        ->check(CLI::IsMember({"gap"}));
    if (enumerates)
        cmd->add_option("--max-cosets", opt.max_cosets,
                        "live-coset bound for the enumeration")
            ->capture_default_str();
    if (has_faces)
        cmd->add_option("--faces", opt.faces, "which orbit strata contribute relators")
            ->check(CLI::IsMember({"rays", "all"}))
            ->capture_default_str();
}

int run_command(const std::string& command, const Options& opt) {
    if (opt.input_path.empty() && opt.builtin.empty())
        throw tfund::input_error(command + ": give an input file (or -) or --builtin NAME");

    tfund::InputDocument doc = opt.builtin.empty()
                                   ? tfund::parse_document(read_input(opt.input_path))
                                   : tfund::builtin_entry(opt.builtin).document;
    tfund::RunFlags flags;
    flags.max_cosets = opt.max_cosets;
    flags.faces = opt.faces == "all" ? tfund::FacesMode::AllFaces : tfund::FacesMode::Rays;

    tfund::Report report = tfund::run(command, doc, flags);

    if (!opt.export_kind.empty()) {
        if (!report.presentation)
            throw tfund::input_error(command + " produces no presentation to export");
        std::cout << tfund::render_gap(*report.presentation);
        return report.exit_code;
    }
    if (opt.format == "json")
        std::cout << tfund::render_json(report).dump(2) << "\n";
    else
        std::cout << tfund::render_text(report);
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fundamental groups of torus varieties from polyhedral data"};
    app.set_version_flag("--version", "tfund 0.1.0");
    app.require_subcommand(1);

    const char* commands[] = {"validate", "pi1", "local-pi1", "toric", "cstar", "analyze"};
    const char* help[] = {
        "properness, log-terminality screen and multiplicity checks",
        "fundamental group of a complexity-one family",
        "local fundamental group at the vertex of one polyhedral divisor",
        "fundamental group of the toric variety of a fan",
        "fundamental group of a weighted C*-bundle over the punctured line",
        "certify a raw finite presentation",
    };
    Options opts[6];
    for (int i = 0; i < 6; ++i) {
        CLI::App* cmd = app.add_subcommand(commands[i], help[i]);
        bool enumerates = std::string(commands[i]) != "validate" &&
                          std::string(commands[i]) != "toric";
        add_common(cmd, opts[i], enumerates, std::string(commands[i]) == "local-pi1");
    }

    std::string corpus_filter;
    CLI::App* corpus = app.add_subcommand(
        "corpus", "recompute the built-in examples and diff against frozen outcomes");
    corpus->add_option("filter", corpus_filter, "only entries whose name contains this");

    CLI11_PARSE(app, argc, argv);

    try {
        if (corpus->parsed()) return tfund::run_corpus(corpus_filter, std::cout);
        for (int i = 0; i < 6; ++i)
            if (app.get_subcommand(commands[i])->parsed()) return run_command(commands[i], opts[i]);
        return 1;  // unreachable: a subcommand is required
    } catch (const tfund::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
