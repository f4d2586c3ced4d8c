#include <doctest.h>

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ngc/pipeline.hpp"
#include "ngc/report.hpp"
#include "synthetic.hpp"

using namespace ngc;
using nlohmann::json;

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    return json::parse(in);
}

// Just enough of JSON Schema to check the shipped report schemas:
// type, properties, required, additionalProperties:false, items,
// minItems, minimum.
void check_against_schema(const json& value, const json& schema, const std::string& where) {
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        bool ok = (type == "object" && value.is_object()) ||
                  (type == "array" && value.is_array()) ||
                  (type == "string" && value.is_string()) ||
                  (type == "number" && value.is_number()) ||
                  (type == "integer" && value.is_number_integer()) ||
                  (type == "boolean" && value.is_boolean());
        REQUIRE_MESSAGE(ok, where, ": expected ", type);
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            REQUIRE_MESSAGE(value.contains(key.get<std::string>()), where, ": missing ",
                            key.get<std::string>());
        }
    }
    if (schema.contains("properties")) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (value.contains(key)) check_against_schema(value.at(key), sub, where + "." + key);
        }
        if (schema.value("additionalProperties", json(true)) == json(false)) {
            for (const auto& [key, unused] : value.items()) {
                REQUIRE_MESSAGE(schema["properties"].contains(key), where, ": unexpected ", key);
            }
        }
    }
    if (schema.contains("items") && value.is_array()) {
        if (schema.contains("minItems")) {
            REQUIRE_MESSAGE(value.size() >= schema["minItems"].get<std::size_t>(), where,
                            ": too few items");
        }
        std::size_t i = 0;
        for (const auto& item : value) {
            check_against_schema(item, schema["items"], where + "[" + std::to_string(i++) + "]");
        }
    }
    if (schema.contains("minimum") && value.is_number()) {
        REQUIRE_MESSAGE(value.get<double>() >= schema["minimum"].get<double>(), where,
                        ": below minimum");
    }
}

} // namespace

TEST_CASE("cluster JSON validates against the shipped schema") {
    const json schema = load_json_file(std::string(NGC_SOURCE_DIR) + "/docs/cluster_report.schema.json");
    for (std::uint64_t seed : {42ull, 43ull, 44ull}) {
        auto r = run_pipeline(synth::random_corpus(seed), {.n_best = 5});
        auto text = render_cluster_report(r.clusters, r.useful, r.index, r.vocab, 50,
                                          ReportFormat::json);
        check_against_schema(json::parse(text), schema, "$");
    }
    auto r2 = run_pipeline(synth::corpus_c2(), {.n_best = 10});
    auto text = render_cluster_report(r2.clusters, r2.useful, r2.index, r2.vocab, 50,
                                      ReportFormat::json);
    const json parsed = json::parse(text);
    check_against_schema(parsed, schema, "$");
    REQUIRE(parsed["clusters"].size() == 1);
    CHECK(parsed["clusters"][0]["weight"] == 11.0);
    CHECK(parsed["clusters"][0]["ngrams"][0]["text"] == "the set of numbers");
    CHECK(parsed["clusters"][0]["paragraphs"][0]["para"] == 1);
    CHECK(parsed["clusters"][0]["paragraphs"][1]["para"] == 2);
}

TEST_CASE("phrase JSON validates against the shipped schema") {
    const json schema = load_json_file(std::string(NGC_SOURCE_DIR) + "/docs/phrase_report.schema.json");
    auto r = run_pipeline(synth::corpus_c1(), {.n_best = 10});
    auto text = render_phrase_report(r.useful, r.vocab, ReportFormat::json);
    const json parsed = json::parse(text);
    check_against_schema(parsed, schema, "$");
    REQUIRE(parsed["phrases"].size() == 1);
    CHECK(parsed["phrases"][0]["text"] == "the cat sat");
    CHECK(parsed["phrases"][0]["length"] == 3);
    CHECK(parsed["phrases"][0]["frequency"] == 2);
}

TEST_CASE("empty cluster report is valid and stable") {
    auto r = run_pipeline(synth::corpus_c0(), {.n_best = 10});
    auto text = render_cluster_report(r.clusters, r.useful, r.index, r.vocab, 50,
                                      ReportFormat::json);
    CHECK(json::parse(text)["clusters"].empty());
}

TEST_CASE("reports are byte-identical across rebuilds") {
    auto corpus = synth::random_corpus(77);
    auto a = run_pipeline(corpus, {.n_best = 5});
    auto b = run_pipeline(corpus, {.n_best = 5});
    for (auto format : {ReportFormat::json, ReportFormat::tsv}) {
        CHECK(render_cluster_report(a.clusters, a.useful, a.index, a.vocab, 50, format) ==
              render_cluster_report(b.clusters, b.useful, b.index, b.vocab, 50, format));
        CHECK(render_phrase_report(a.useful, a.vocab, format) ==
              render_phrase_report(b.useful, b.vocab, format));
    }
}

TEST_CASE("top_k truncates to the highest-weight clusters") {
    // three separate pairs of identical paragraphs of different sizes
    auto corpus = synth::make_corpus({{"t.txt",
                                       {{"a", "b"},
                                        {"a", "b"},
                                        {"c", "d", "e"},
                                        {"c", "d", "e"},
                                        {"f", "g", "h", "i"},
                                        {"f", "g", "h", "i"}}}});
    auto r = run_pipeline(corpus, {.n_best = 10});
    REQUIRE(r.clusters.size() == 3);
    auto text = render_cluster_report(r.clusters, r.useful, r.index, r.vocab, 2,
                                      ReportFormat::json);
    const json parsed = json::parse(text);
    REQUIRE(parsed["clusters"].size() == 2);
    // best first: the 4-gram pair outweighs the 3-gram pair
    CHECK(parsed["clusters"][0]["weight"].get<double>() >=
          parsed["clusters"][1]["weight"].get<double>());
    CHECK(parsed["clusters"][0]["ngrams"][0]["length"] == 4);
}

TEST_CASE("excerpts cap at 200 characters on a UTF-8 boundary") {
    std::vector<std::string> para;
    for (int i = 0; i < 70; ++i) para.push_back("t\xC3\xA9rm" + std::to_string(i)); // "térmN"
    auto corpus = synth::make_corpus({{"u.txt", {para}}});
    auto vocab = build_vocabulary(corpus);
    auto index = translate_corpus(corpus, vocab);

    auto excerpt = paragraph_excerpt(index, vocab, 0);
    CHECK(excerpt.size() <= 203);
    REQUIRE(excerpt.size() >= 3);
    CHECK(excerpt.substr(excerpt.size() - 3) == "...");
    // never ends mid-codepoint: the byte before the ellipsis is not a lone lead byte
    const auto body = excerpt.substr(0, excerpt.size() - 3);
    CHECK(json(body).dump() != ""); // serializable, i.e. valid UTF-8

    auto short_excerpt = paragraph_excerpt(index, vocab, 0, 100000);
    CHECK(short_excerpt.find("...") == std::string::npos);
}

TEST_CASE("tsv reports carry one row per cluster member") {
    auto r = run_pipeline(synth::corpus_c2(), {.n_best = 10});
    auto text = render_cluster_report(r.clusters, r.useful, r.index, r.vocab, 50,
                                      ReportFormat::tsv);
    CHECK(text == "cluster\tweight\tngrams\tdoc\tpara\n"
                  "1\t11.0\tthe set of numbers\tc2.txt\t1\n"
                  "1\t11.0\tthe set of numbers\tc2.txt\t2\n");

    auto phrases = render_phrase_report(r.useful, r.vocab, ReportFormat::tsv);
    CHECK(phrases == "text\tlength\tfrequency\nthe set of numbers\t4\t2\n");
}
