// indictk: script detection, ISO-15919 transliteration, corpus filtering,
// subword tokenizer metrics, Mann-Whitney U comparison, and linear CKA in
// one pipeline-friendly binary.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indictk/bpe.hpp"
#include "indictk/cka.hpp"
#include "indictk/corpus.hpp"
#include "indictk/mwu.hpp"
#include "indictk/script.hpp"
#include "indictk/translit.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::istream& open_input(std::ifstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cin;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    return file;
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

int run_detect(const std::string& input_path) {
    std::ifstream file;
    std::istream& in = open_input(file, input_path);
    std::string line;
    while (std::getline(in, line)) {
        indictk::ScriptHistogram h = indictk::script_histogram(line);
        nlohmann::json j;
        for (std::size_t i = 0; i < indictk::kScriptTagCount; ++i) {
            if (h.counts[i] > 0)
                j["histogram"][indictk::kScriptTagNames[i]] = h.counts[i];
        }
        j["total_scriptful"] = h.total_scriptful;
        auto dom = indictk::dominant_script(h);
        if (dom) {
            j["dominant"] = indictk::to_string(dom->tag);
            j["tie"] = dom->tie;
        } else {
            j["dominant"] = nullptr;
        }
        std::cout << j.dump() << '\n';
    }
    return 0;
}

std::optional<indictk::ScriptTag> script_from_code(const std::string& code) {
    static const std::map<std::string, indictk::ScriptTag> codes = {
        {"deva", indictk::ScriptTag::Devanagari},
        {"beng", indictk::ScriptTag::BengaliAssamese},
        {"orya", indictk::ScriptTag::Oriya},
        {"gujr", indictk::ScriptTag::Gujarati},
        {"guru", indictk::ScriptTag::Gurmukhi},
        {"sinh", indictk::ScriptTag::Sinhala},
    };
    auto it = codes.find(code);
    if (it == codes.end()) return std::nullopt;
    return it->second;
}

void write_translit_report(const indictk::TransliterationReport& report,
                           const std::string& path) {
    if (path.empty()) return;
    nlohmann::json j;
    j["chars_in"] = report.chars_in;
    j["chars_out"] = report.chars_out;
    j["unmapped"] = nlohmann::json::array();
    for (const auto& [cp, n] : report.unmapped)
        j["unmapped"].push_back(
            {{"codepoint", static_cast<std::uint32_t>(cp)}, {"count", n}});
    std::ofstream out(path);
    out << j.dump(2) << '\n';
}

int run_translit(const std::string& script, const std::string& input_path,
                 const std::string& report_path, bool keep_danda) {
    std::ifstream file;
    std::istream& in = open_input(file, input_path);
    indictk::TransliterateOptions opts;
    opts.keep_danda = keep_danda;
    indictk::TransliterationReport report;
    std::string line;
    if (script == "auto") {
        while (std::getline(in, line)) {
            auto res = indictk::transliterate_auto(line, opts);
            std::cout << res.text << '\n';
            report.merge(res.report);
        }
    } else {
        auto tag = script_from_code(script);
        if (!tag) {
            std::cerr << "unknown script code: " << script << '\n';
            return 1;
        }
        const auto& scheme = indictk::load_scheme(*tag);
        while (std::getline(in, line)) {
            auto res = indictk::transliterate(line, scheme, opts);
            std::cout << res.text << '\n';
            report.merge(res.report);
        }
    }
    write_translit_report(report, report_path);
    return 0;
}

int run_filter(const std::string& config_path, const std::string& input_path,
               const std::string& report_path) {
    indictk::FilterConfig cfg = indictk::default_filter_config();
    if (!config_path.empty()) {
        std::ifstream cf(config_path);
        if (!cf) throw std::runtime_error("cannot open config: " + config_path);
        cfg = indictk::parse_filter_config(nlohmann::json::parse(cf));
    }
    std::ifstream file;
    std::istream& in = open_input(file, input_path);
    indictk::PipelineReport report =
        indictk::process_corpus(in, std::cout, cfg);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << indictk::to_json(report).dump(2) << '\n';
    }
    if (report.total_records > 0 &&
        report.malformed_records * 10 > report.total_records)
        return 2;
    return 0;
}

int run_bpe_train(const std::string& input_path, std::size_t vocab_size,
                  const std::string& out_path) {
    std::ifstream file;
    std::istream& in = open_input(file, input_path);
    indictk::SubwordVocab vocab =
        indictk::train_bpe(read_lines(in), vocab_size);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << indictk::to_json(vocab).dump() << '\n';
    return 0;
}

int run_tok_metrics(const std::string& vocab_path,
                    const std::string& input_path) {
    std::ifstream vf(vocab_path);
    if (!vf) throw std::runtime_error("cannot open vocab: " + vocab_path);
    indictk::SubwordVocab vocab =
        indictk::vocab_from_json(nlohmann::json::parse(vf));
    std::ifstream file;
    std::istream& in = open_input(file, input_path);
    indictk::TokenizerMetrics m =
        indictk::compute_metrics(read_lines(in), vocab);
    nlohmann::json j{{"fertility", m.fertility},
                     {"unbroken_ratio", m.unbroken_ratio},
                     {"words", m.words},
                     {"pieces", m.pieces},
                     {"unk_words", m.unk_words}};
    std::cout << j.dump() << '\n';
    return 0;
}

std::vector<double> read_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sample file: " + path);
    std::vector<double> values;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string field = line;
        if (auto tab = line.find_last_of('\t'); tab != std::string::npos)
            field = line.substr(tab + 1);
        try {
            std::size_t used = 0;
            double v = std::stod(field, &used);
            values.push_back(v);
        } catch (const std::exception&) {
            if (first) {  // header row
                first = false;
                continue;
            }
            throw std::runtime_error("unparsable sample line: " + line);
        }
        first = false;
    }
    if (values.empty()) throw std::runtime_error("no samples in " + path);
    return values;
}

indictk::MwuConfig make_mwu_config(double alpha, const std::string& method) {
    indictk::MwuConfig cfg;
    cfg.alpha = alpha;
    if (method == "exact")
        cfg.p_method = indictk::PMethod::Exact;
    else if (method == "normal")
        cfg.p_method = indictk::PMethod::NormalApprox;
    else
        cfg.p_method = indictk::PMethod::Auto;
    return cfg;
}

int run_mwu(const std::string& g1_path, const std::string& g2_path,
            double alpha, const std::string& method) {
    indictk::SampleGroup g1{"group1", read_sample_file(g1_path)};
    indictk::SampleGroup g2{"group2", read_sample_file(g2_path)};
    indictk::MwuResult res =
        indictk::compare(g1, g2, make_mwu_config(alpha, method));
    nlohmann::json j = indictk::to_json(res);
    j["config"] = {{"alpha", alpha}, {"method", method}};
    std::cout << j.dump() << '\n';
    return 0;
}

// TSV of (task, language, seed, model, metric) -> one result per
// (task, language), comparing group1-label vs group2-label samples.
int run_mwu_batch(const std::string& batch_path, const std::string& g1_label,
                  const std::string& g2_label, double alpha,
                  const std::string& method) {
    std::ifstream in(batch_path);
    if (!in) throw std::runtime_error("cannot open batch file: " + batch_path);
    std::map<std::pair<std::string, std::string>,
             std::map<std::string, std::vector<double>>>
        cells;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string task, language, seed, model, metric;
        if (!std::getline(row, task, '\t') ||
            !std::getline(row, language, '\t') ||
            !std::getline(row, seed, '\t') || !std::getline(row, model, '\t') ||
            !std::getline(row, metric, '\t')) {
            throw std::runtime_error("malformed batch row: " + line);
        }
        try {
            cells[{task, language}][model].push_back(std::stod(metric));
        } catch (const std::exception&) {
            if (header) continue;  // column names
            throw std::runtime_error("unparsable metric in row: " + line);
        }
        header = false;
    }
    indictk::MwuConfig cfg = make_mwu_config(alpha, method);
    for (const auto& [key, by_model] : cells) {
        auto it1 = by_model.find(g1_label);
        auto it2 = by_model.find(g2_label);
        nlohmann::json j{{"task", key.first}, {"language", key.second}};
        if (it1 == by_model.end() || it2 == by_model.end()) {
            j["error"] = "missing model samples";
        } else {
            indictk::SampleGroup g1{g1_label, it1->second};
            indictk::SampleGroup g2{g2_label, it2->second};
            j.update(indictk::to_json(indictk::compare(g1, g2, cfg)));
        }
        std::cout << j.dump() << '\n';
    }
    return 0;
}

indictk::Matrix read_csv_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open activation file: " +
                                 path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("ragged CSV: " + path.string());
        rows.push_back(std::move(row));
    }
    indictk::Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

int run_cka(const std::string& manifest_path, const std::string& out_path,
            const std::string& pooling, const std::string& tsv_path) {
    std::ifstream mf(manifest_path);
    if (!mf)
        throw std::runtime_error("cannot open manifest: " + manifest_path);
    nlohmann::json manifest = nlohmann::json::parse(mf);
    std::filesystem::path base =
        std::filesystem::path(manifest_path).parent_path();
    std::size_t n_sentences = manifest.at("n_sentences").get<std::size_t>();

    std::vector<indictk::ActivationMatrix> activations;
    for (const auto& [lang, layers] : manifest.at("files").items()) {
        for (const auto& [layer, file] : layers.items()) {
            indictk::ActivationMatrix am;
            am.language = lang;
            am.layer = std::stoul(layer);
            am.data = read_csv_matrix(base / file.get<std::string>());
            if (am.data.rows != n_sentences)
                throw std::runtime_error(
                    "row count mismatch vs manifest for " + lang + " layer " +
                    layer);
            activations.push_back(std::move(am));
        }
    }
    indictk::CkaTable table = indictk::pairwise_layer_cka(activations);
    nlohmann::json j = indictk::to_json(table);
    // pooling happens upstream when activations are produced; echoed for
    // provenance
    j["config"] = {{"manifest", manifest_path}, {"pooling", pooling}};
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << j.dump(2) << '\n';
    if (!tsv_path.empty()) {
        std::ofstream tsv(tsv_path);
        tsv << "language\tlayer\tmean_cka\tpartners\n";
        for (const auto& [key, entry] : indictk::average_per_language(table))
            tsv << key.first << '\t' << key.second << '\t' << entry.mean
                << '\t' << entry.partners << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multilingual text processing and evaluation toolkit"};
    app.require_subcommand(1);
    app.set_version_flag(
        "--version", std::string("indictk ") + kVersion + " (Unicode " +
                         indictk::kUnicodeVersion + ")");

    std::string input_path, report_path, config_path, out_path;
    std::string script = "auto";
    bool keep_danda = false;

    auto* detect = app.add_subcommand("detect", "per-line script histograms");
    detect->add_option("--input", input_path, "input file (default stdin)");

    auto* translit =
        app.add_subcommand("translit", "transliterate to ISO 15919");
    translit->add_option("--script", script,
                         "auto|deva|beng|orya|gujr|guru|sinh");
    translit->add_option("--input", input_path, "input file (default stdin)");
    translit->add_option("--report", report_path, "write JSON report here");
    translit->add_flag("--keep-danda", keep_danda,
                       "pass danda through instead of mapping to '.'");

    auto* filter =
        app.add_subcommand("filter", "dominant-script corpus filter (JSONL)");
    filter->add_option("--config", config_path,
                       "JSON config (languages, transliterate flag)");
    filter->add_option("--input", input_path, "input file (default stdin)");
    filter->add_option("--report", report_path, "write JSON report here");

    std::size_t vocab_size = 0;
    auto* bpe = app.add_subcommand("bpe-train", "train a subword vocabulary");
    bpe->add_option("--vocab-size", vocab_size, "target vocabulary size")
        ->required();
    bpe->add_option("--out", out_path, "output vocab.json")->required();
    bpe->add_option("--input", input_path, "corpus file (default stdin)");

    std::string vocab_path;
    auto* tok =
        app.add_subcommand("tok-metrics", "fertility and unbroken ratio");
    tok->add_option("--vocab", vocab_path, "vocab.json")->required();
    tok->add_option("--input", input_path, "corpus file (default stdin)");

    std::string g1_path, g2_path, batch_path;
    std::string g1_label = "uni-script", g2_label = "multi-script";
    std::string method = "auto";
    double alpha = 0.05;
    auto* mwu = app.add_subcommand("mwu", "Mann-Whitney U comparison");
    mwu->add_option("--group1", g1_path, "group 1 samples (one per line)");
    mwu->add_option("--group2", g2_path, "group 2 samples (one per line)");
    mwu->add_option("--batch", batch_path,
                    "TSV of (task, language, seed, model, metric)");
    mwu->add_option("--group1-label", g1_label, "model label for group 1");
    mwu->add_option("--group2-label", g2_label, "model label for group 2");
    mwu->add_option("--alpha", alpha, "significance level");
    mwu->add_option("--method", method, "auto|exact|normal");

    std::string manifest_path, pooling = "mean", tsv_path;
    auto* cka = app.add_subcommand("cka", "pairwise linear CKA table");
    cka->add_option("--manifest", manifest_path, "activation manifest JSON")
        ->required();
    cka->add_option("--out", out_path, "output table JSON")->required();
    cka->add_option("--pooling", pooling, "mean|first-token (provenance)");
    cka->add_option("--tsv", tsv_path, "per-language per-layer TSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (detect->parsed()) return run_detect(input_path);
        if (translit->parsed())
            return run_translit(script, input_path, report_path, keep_danda);
        if (filter->parsed())
            return run_filter(config_path, input_path, report_path);
        if (bpe->parsed())
            return run_bpe_train(input_path, vocab_size, out_path);
        if (tok->parsed()) return run_tok_metrics(vocab_path, input_path);
        if (mwu->parsed()) {
            if (!batch_path.empty())
                return run_mwu_batch(batch_path, g1_label, g2_label, alpha,
                                     method);
            if (g1_path.empty() || g2_path.empty()) {
                std::cerr << "mwu requires --group1/--group2 or --batch\n";
                return 1;
            }
            return run_mwu(g1_path, g2_path, alpha, method);
        }
        if (cka->parsed())
            return run_cka(manifest_path, out_path, pooling, tsv_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
