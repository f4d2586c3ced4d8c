#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ngc_cli.hpp"

int main(int argc, char** argv) {
    using namespace ngc::cli;

    CLI::App app{"ngc - mine repeated word-level n-grams and paragraph clusters from a corpus"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value config file mirroring the long flags")
        ->envname("NGC_CONFIG");

    RunConfig config;
    std::string format = "json";
    std::string paragraph_mode = "blank-line";

    app.add_option("--corpus", config.corpus_dir, "corpus directory of UTF-8 text files");
    app.add_option("--index", config.index_path, "index container path (output of build)");
    app.add_option("--n-best", config.n_best, "phrases kept per length level")
        ->capture_default_str();
    app.add_option("--min-len", config.min_len, "shortest n-gram level considered")
        ->check(CLI::Range(2u, 0xFFFFFFFFu))
        ->capture_default_str();
    app.add_option("--top", config.top_k, "clusters shown in reports")
        ->check(CLI::Range(1u, 0xFFFFFFFFu))
        ->capture_default_str();
    app.add_option("--global-cap", config.global_cap,
                   "cap on useful phrases across all levels (0 = off)")
        ->capture_default_str();
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    app.add_flag("--case-fold", config.case_fold, "fold ASCII letters to lower case");
    app.add_option("--paragraph-mode", paragraph_mode, "paragraph delimiter")
        ->check(CLI::IsMember({"blank-line", "newline"}))
        ->capture_default_str();

    CLI::App* build = app.add_subcommand("build", "build and save the index container");
    CLI::App* phrases = app.add_subcommand("phrases", "list the useful n-grams");
    CLI::App* clusters = app.add_subcommand("clusters", "emit ranked paragraph clusters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return k_exit_usage;
    }

    config.format = format == "tsv" ? ngc::ReportFormat::tsv : ngc::ReportFormat::json;
    config.paragraph_mode = paragraph_mode == "newline" ? ngc::ParagraphMode::newline
                                                        : ngc::ParagraphMode::blank_line;

    if (build->parsed()) return cmd_build(config, std::cout, std::cerr);
    if (phrases->parsed()) return cmd_phrases(config, std::cout, std::cerr);
    if (clusters->parsed()) return cmd_clusters(config, std::cout, std::cerr);
    return k_exit_usage;
}
