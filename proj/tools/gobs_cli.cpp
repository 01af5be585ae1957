#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gobs/report.hpp"

namespace {

// --json with no value prints JSON to stdout; with a path it writes the file
// and keeps the human output on stdout.
int emit(const gobs::CommandResult& res, const std::vector<std::string>& json_arg,
         bool json_requested) {
    if (!json_requested) {
        std::cout << res.human;
        return 0;
    }
    if (json_arg.empty() || json_arg.front().empty()) {
        std::cout << res.report.dump(2) << "\n";
        return 0;
    }
    std::ofstream out(json_arg.front());
    if (!out) {
        std::cerr << "error: cannot write " << json_arg.front() << "\n";
        return 1;
    }
    out << res.report.dump(2) << "\n";
    std::cout << res.human;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner obstruction modules: signature-driven completion, "
                 "diagnostics and flat-degeneration checks"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> json_arg;
    gobs::SbaFlags sba_flags;
    gobs::AnalyzeFlags an_flags;
    std::vector<long> weight;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input system file")->required();
        cmd->add_option("--json", json_arg, "emit the JSON report (stdout, or to a path)")
            ->expected(0, 1);
    };

    CLI::App* sba = app.add_subcommand("sba", "run the signature-driven completion");
    add_common(sba);
    sba->add_flag("--trace", sba_flags.trace, "print the per-signature reduction trace");
    sba->add_flag("--betti", sba_flags.betti, "attach Betti ranks of the obstruction module per step");

    CLI::App* analyze = app.add_subcommand("analyze", "one-shot diagnostics for a tuple");
    add_common(analyze);
    analyze->add_flag("--gobs", an_flags.gobs_module, "obstruction module generators and Betti ranks");
    analyze->add_flag("--is-gb", an_flags.is_gb, "Groebner basis check with witness");
    analyze->add_flag("--min-obstruction", an_flags.min_obstruction,
                      "minimal signature with a nonzero remainder");

    CLI::App* degen = app.add_subcommand("degen", "flat-degeneration certificate");
    add_common(degen);
    degen->add_option("--weight", weight, "explicit weight vector w_1,...,w_n")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        gobs::SystemFile input = gobs::load_system_file(file);
        gobs::CommandResult res;
        bool json_requested = false;
        if (sba->parsed()) {
            json_requested = sba->count("--json") > 0;
            res = gobs::cmd_sba(input, sba_flags);
        } else if (analyze->parsed()) {
            json_requested = analyze->count("--json") > 0;
            res = gobs::cmd_analyze(input, an_flags);
        } else {
            json_requested = degen->count("--json") > 0;
            gobs::DegenFlags flags;
            if (degen->count("--weight") > 0) flags.weight = weight;
            res = gobs::cmd_degen(input, flags);
        }
        return emit(res, json_arg, json_requested);
    } catch (const gobs::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const gobs::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
