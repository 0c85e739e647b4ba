#include "lieembed/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

using namespace lieembed;
using cmd::json;

namespace {

struct Common {
    std::string input;
    std::string format = "json";
    SearchOptions search;
};

void emit(const json& j, const std::string& format) {
    if (format == "text") std::cout << cmd::render_text(j);
    else std::cout << io::dump(j) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lieembed: exact structure of real Lie algebras"};
    app.require_subcommand(1);
    Common c;
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", c.search.seed, "Search seed (overrides LIEEMBED_SEED)");
    app.add_option("--budget", c.search.budget, "Candidate budget for element searches");
    if (const char* s = std::getenv("LIEEMBED_SEED")) {
        try {
            c.search.seed = std::stoull(s);
        } catch (const std::exception&) {
            std::cerr << "error: LIEEMBED_SEED is not an integer\n";
            return 2;
        }
    }

    auto* analyze = app.add_subcommand("analyze", "Killing data, radical, Levi decomposition");
    analyze->add_option("input", c.input, "Catalog name or JSON file")->required();

    cmd::EmbedArgs ea;
    auto* embed = app.add_subcommand("embed", "Run an embedding algorithm and print its trace");
    embed->add_option("input", c.input, "Catalog name or JSON file")->required();
    embed->add_option("--mode", ea.mode)
        ->required()
        ->check(CLI::IsMember({"torus", "compact-torus", "abelian-nilpotent", "nilpotent", "maximal-compact"}));
    embed->add_option("--subspace", ea.subspace, "e.g. \"e8+e10, e11\"")->required();
    embed->add_option("--route", ea.route, "maximal-compact: split or cartan")
        ->check(CLI::IsMember({"split", "cartan"}));
    embed->add_option("--positive-on", ea.positive_on, "maximal-compact split: ambient for the positive roots");

    cmd::RootsArgs ra;
    auto add_roots_opts = [&](CLI::App* s) {
        s->add_option("input", c.input, "Catalog name or JSON file")->required();
        s->add_option("--cartan", ra.cartan, "Torus elements, in root coordinate order")->required();
        s->add_option("--ambient", ra.ambient, "Subalgebra to decompose (default: all)");
        s->add_option("--positivity", ra.positivity)->check(CLI::IsMember({"lex", "all"}));
    };
    auto* roots = app.add_subcommand("roots", "Root space decomposition");
    add_roots_opts(roots);
    auto* dynkin = app.add_subcommand("dynkin", "Simple roots and Dynkin type");
    add_roots_opts(dynkin);

    std::string pair, fields;
    auto* vfb = app.add_subcommand("vf-brackets", "Structure constants of a vector-field catalog");
    vfb->add_option("input", c.input, "Catalog name or JSON file")->required();
    vfb->add_option("--pair", pair, "Two combinations to bracket, e.g. \"e1, e2\"");
    auto* vfi = app.add_subcommand("vf-invariants", "Number of joint invariants of a span of fields");
    vfi->add_option("input", c.input, "Catalog name or JSON file")->required();
    vfi->add_option("--fields", fields, "Comma-separated combinations of catalog fields")->required();

    std::string corpus;
    auto* verify = app.add_subcommand("verify", "Run a golden corpus");
    verify->add_option("--corpus", corpus, "Corpus JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            json j = io::read_json_file(corpus);
            auto base = std::filesystem::path(corpus).parent_path().string();
            auto r = cmd::verify(j, base, c.search);
            emit(r.report, c.format);
            if (!r.ok) std::cerr << r.report["failed"].get<std::size_t>() << " case(s) failed\n";
            return r.ok ? 0 : 1;
        }
        cmd::Input in = cmd::load_input(c.input);
        json out;
        if (analyze->parsed()) out = cmd::analyze(in);
        else if (embed->parsed()) {
            ea.search = c.search;
            out = cmd::embed(in, ea);
        } else if (roots->parsed()) out = cmd::roots(in, ra);
        else if (dynkin->parsed()) out = cmd::dynkin(in, ra);
        else if (vfb->parsed()) out = cmd::vf_brackets(in, pair);
        else out = cmd::vf_invariants(in, fields);
        emit(out, c.format);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << cmd::error_kind(e) << ": " << e.what() << "\n";
        return cmd::exit_code(e);
    }
}
