#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ngc_cli.hpp"
#include "synthetic.hpp"

using namespace ngc;
using namespace ngc::cli;
using nlohmann::json;

namespace {

struct ToolResult {
    int exit_code;
    std::string output;
};

ToolResult run_tool(const std::string& args) {
    const std::string cmd = std::string(NGC_TOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::filesystem::path fixture_dir(const TokenizedCorpus& corpus, const std::string& tag) {
    auto dir = synth::make_temp_dir(tag);
    synth::write_corpus_dir(corpus, dir);
    return dir;
}

} // namespace

TEST_CASE("build summarises the corpus and writes a loadable index") {
    auto dir = fixture_dir(synth::corpus_c1(), "cli-build");
    auto out_dir = synth::make_temp_dir("cli-build-out"); // index kept outside the corpus
    RunConfig config;
    config.corpus_dir = dir.string();
    config.index_path = (out_dir / "out.ngc").string();

    std::ostringstream out, err;
    CHECK(cmd_build(config, out, err) == k_exit_ok);
    CHECK(err.str().empty());
    const std::string summary = out.str();
    CHECK(summary.find("documents: 1") != std::string::npos);
    CHECK(summary.find("paragraphs: 2") != std::string::npos);
    CHECK(summary.find("tokens: 6") != std::string::npos);
    CHECK(summary.find("vocabulary: 3") != std::string::npos);
    CHECK(summary.find("longest repeated phrase: length 3, frequency 2") != std::string::npos);

    // the saved index drives the same cluster report as the corpus itself
    std::ostringstream from_index, from_corpus, err2;
    RunConfig via_index;
    via_index.index_path = config.index_path;
    CHECK(cmd_clusters(via_index, from_index, err2) == k_exit_ok);
    RunConfig via_corpus;
    via_corpus.corpus_dir = dir.string();
    CHECK(cmd_clusters(via_corpus, from_corpus, err2) == k_exit_ok);
    CHECK(from_index.str() == from_corpus.str());
    CHECK(json::parse(from_index.str())["clusters"][0]["weight"] == 8.0);
}

TEST_CASE("build error paths") {
    std::ostringstream out, err;
    SUBCASE("missing directory") {
        RunConfig config;
        config.corpus_dir = "/nonexistent/ngc-test";
        CHECK(cmd_build(config, out, err) == k_exit_usage);
        CHECK(err.str().find("error") != std::string::npos);
    }
    SUBCASE("empty directory warns but succeeds") {
        auto dir = synth::make_temp_dir("cli-empty");
        RunConfig config;
        config.corpus_dir = dir.string();
        config.index_path = (dir / "empty.ngc").string();
        CHECK(cmd_build(config, out, err) == k_exit_ok);
        CHECK(err.str().find("warning") != std::string::npos);
        CHECK(out.str().find("longest repeated phrase: none") != std::string::npos);
        CHECK(std::filesystem::exists(dir / "empty.ngc"));
    }
    SUBCASE("no corpus given") {
        RunConfig config;
        CHECK(cmd_build(config, out, err) == k_exit_usage);
    }
}

TEST_CASE("clusters command output on the fixtures") {
    SUBCASE("worked two-paragraph corpus") {
        auto dir = fixture_dir(synth::corpus_c2(), "cli-c2");
        RunConfig config;
        config.corpus_dir = dir.string();
        std::ostringstream out, err;
        REQUIRE(cmd_clusters(config, out, err) == k_exit_ok);
        const json parsed = json::parse(out.str());
        REQUIRE(parsed["clusters"].size() == 1);
        CHECK(parsed["clusters"][0]["weight"] == 11.0);
        CHECK(parsed["clusters"][0]["ngrams"][0]["text"] == "the set of numbers");
    }
    SUBCASE("no correlations yields an empty list, exit 0") {
        auto dir = fixture_dir(synth::corpus_c0(), "cli-c0");
        RunConfig config;
        config.corpus_dir = dir.string();
        std::ostringstream out, err;
        REQUIRE(cmd_clusters(config, out, err) == k_exit_ok);
        CHECK(json::parse(out.str())["clusters"].empty());
    }
    SUBCASE("missing index and corpus") {
        RunConfig config;
        std::ostringstream out, err;
        CHECK(cmd_clusters(config, out, err) == k_exit_usage);
    }
    SUBCASE("top_k of zero is rejected") {
        auto dir = fixture_dir(synth::corpus_c2(), "cli-top0");
        RunConfig config;
        config.corpus_dir = dir.string();
        config.top_k = 0;
        std::ostringstream out, err;
        CHECK(cmd_clusters(config, out, err) == k_exit_usage);
    }
    SUBCASE("unreadable index path") {
        RunConfig config;
        config.index_path = "/nonexistent/ngc.index";
        std::ostringstream out, err;
        CHECK(cmd_clusters(config, out, err) == k_exit_usage);
    }
}

TEST_CASE("phrases command lists useful n-grams") {
    auto dir = fixture_dir(synth::corpus_c2(), "cli-phr");
    RunConfig config;
    config.corpus_dir = dir.string();
    config.format = ReportFormat::tsv;
    std::ostringstream out, err;
    REQUIRE(cmd_phrases(config, out, err) == k_exit_ok);
    CHECK(out.str() == "text\tlength\tfrequency\nthe set of numbers\t4\t2\n");

    auto c0_dir = fixture_dir(synth::corpus_c0(), "cli-phr0");
    RunConfig c0;
    c0.corpus_dir = c0_dir.string();
    c0.format = ReportFormat::tsv;
    std::ostringstream out0, err0;
    REQUIRE(cmd_phrases(c0, out0, err0) == k_exit_ok);
    CHECK(out0.str() == "text\tlength\tfrequency\n");
}

TEST_CASE("identical config yields byte-identical reports") {
    auto dir = fixture_dir(synth::random_corpus(7), "cli-det");
    RunConfig config;
    config.corpus_dir = dir.string();
    config.n_best = 3;
    std::ostringstream a, b, err;
    REQUIRE(cmd_clusters(config, a, err) == k_exit_ok);
    REQUIRE(cmd_clusters(config, b, err) == k_exit_ok);
    CHECK(a.str() == b.str());
}

TEST_CASE("binary: usage and help") {
    CHECK(run_tool("--help").exit_code == 0);
    CHECK(run_tool("").exit_code == k_exit_usage);
    CHECK(run_tool("clusters --nonsense").exit_code == k_exit_usage);
    CHECK(run_tool("clusters").exit_code == k_exit_usage); // no corpus, no index
    CHECK(run_tool("clusters --corpus /nonexistent/ngc").exit_code == k_exit_usage);
    CHECK(run_tool("clusters --corpus . --top 0").exit_code == k_exit_usage);
    CHECK(run_tool("clusters --corpus . --min-len 1").exit_code == k_exit_usage);
}

TEST_CASE("binary: end-to-end build and report") {
    auto dir = fixture_dir(synth::corpus_c2(), "cli-bin");
    const std::string index = (synth::make_temp_dir("cli-bin-out") / "bin.ngc").string();

    auto build = run_tool("build --corpus " + dir.string() + " --index " + index);
    CHECK(build.exit_code == 0);
    CHECK(build.output.find("longest repeated phrase: length 4, frequency 2") != std::string::npos);

    auto clusters = run_tool("clusters --index " + index + " --format tsv");
    CHECK(clusters.exit_code == 0);
    CHECK(clusters.output.find("the set of numbers") != std::string::npos);

    auto phrases = run_tool("phrases --corpus " + dir.string());
    CHECK(phrases.exit_code == 0);
    CHECK(json::parse(phrases.output)["phrases"][0]["length"] == 4);
}

TEST_CASE("binary: flags after the subcommand fall through") {
    auto dir = fixture_dir(synth::corpus_c1(), "cli-fall");
    auto r = run_tool("clusters --corpus " + dir.string() + " --n-best 5 --top 10");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["clusters"].size() == 1);
}

TEST_CASE("binary: config file via environment variable") {
    auto dir = fixture_dir(synth::corpus_c2(), "cli-cfg");
    const auto cfg_path = dir / "ngc.conf";
    {
        std::ofstream cfg(cfg_path);
        cfg << "corpus=" << dir.string() << "\n";
        cfg << "format=tsv\n";
        cfg << "n-best=5\n";
    }
    const std::string cmd = "NGC_CONFIG=" + cfg_path.string() + " " + NGC_TOOL_PATH + " phrases 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(output.find("the set of numbers\t4\t2") != std::string::npos);
}

TEST_CASE("binary: case folding and paragraph mode flags reach the tokenizer") {
    auto dir = synth::make_temp_dir("cli-tok");
    {
        std::ofstream f(dir / "doc.txt");
        f << "The CAT sat\nthe cat SAT\n";
    }
    // one paragraph per line plus folding makes the two lines identical
    auto r = run_tool("phrases --corpus " + dir.string() +
                      " --case-fold --paragraph-mode newline --format tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("the cat sat\t3\t2") != std::string::npos);

    // without folding the lines differ and nothing repeats
    auto r2 = run_tool("phrases --corpus " + dir.string() + " --paragraph-mode newline --format tsv");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output == "text\tlength\tfrequency\n");
}
