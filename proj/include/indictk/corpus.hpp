#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "indictk/normalize.hpp"
#include "indictk/script.hpp"
#include "indictk/translit.hpp"

namespace indictk {

struct CorpusDocument {
    std::string id;
    std::string lang;
    std::string text;
};

enum class DropReason {
    ScriptMismatch,
    NoScriptfulText,
    EmptyText,
};

inline const char* to_string(DropReason r) {
    switch (r) {
        case DropReason::ScriptMismatch: return "script_mismatch";
        case DropReason::NoScriptfulText: return "no_scriptful_text";
        case DropReason::EmptyText: return "empty_text";
    }
    return "unknown";
}

struct FilterConfig {
    std::map<std::string, std::set<ScriptTag>> allowed_scripts_by_lang;
    bool transliterate = false;
    NormalizeOptions normalization;
};

// Native-script assignments for the supported languages; the default
// allow-list.
inline FilterConfig default_filter_config() {
    FilterConfig cfg;
    const auto set = [&](const char* lang, ScriptTag tag) {
        cfg.allowed_scripts_by_lang[lang] = {tag};
    };
    set("hi", ScriptTag::Devanagari);
    set("bn", ScriptTag::BengaliAssamese);
    set("mr", ScriptTag::Devanagari);
    set("ne", ScriptTag::Devanagari);
    set("si", ScriptTag::Sinhala);
    set("gu", ScriptTag::Gujarati);
    set("pa", ScriptTag::Gurmukhi);
    set("or", ScriptTag::Oriya);
    set("as", ScriptTag::BengaliAssamese);
    set("sa", ScriptTag::Devanagari);
    set("bpy", ScriptTag::BengaliAssamese);
    set("gom", ScriptTag::Devanagari);
    set("bh", ScriptTag::Devanagari);
    set("mai", ScriptTag::Devanagari);
    return cfg;
}

struct FilterDecision {
    bool keep;
    DropReason reason = DropReason::ScriptMismatch;
};

inline FilterDecision filter_document(const CorpusDocument& doc,
                                      const FilterConfig& cfg) {
    auto it = cfg.allowed_scripts_by_lang.find(doc.lang);
    if (it == cfg.allowed_scripts_by_lang.end())
        throw std::runtime_error("unknown language: " + doc.lang);
    if (doc.text.empty()) return {false, DropReason::EmptyText};
    auto dom = dominant_script(doc.text);
    if (!dom) return {false, DropReason::NoScriptfulText};
    if (!it->second.count(dom->tag))
        return {false, DropReason::ScriptMismatch};
    return {true};
}

struct LangCounts {
    std::uint64_t ingested = 0;
    std::uint64_t dropped_script_mismatch = 0;
    std::uint64_t dropped_empty = 0;
    std::uint64_t emitted = 0;
};

struct PipelineReport {
    std::map<std::string, LangCounts> per_language;
    std::uint64_t bytes_in = 0;
    std::uint64_t bytes_out = 0;
    std::uint64_t malformed_records = 0;
    std::uint64_t total_records = 0;
    TransliterationReport translit;

    bool reconciles() const {
        for (const auto& [lang, c] : per_language) {
            if (c.ingested !=
                c.dropped_script_mismatch + c.dropped_empty + c.emitted)
                return false;
        }
        return true;
    }
};

inline nlohmann::json to_json(const PipelineReport& r) {
    nlohmann::json j;
    // IndicNLP-style normalization is approximated, not replicated; flagged
    // here so consumers of the report know.
    j["normalization"] = "indictk-approximation";
    j["bytes_in"] = r.bytes_in;
    j["bytes_out"] = r.bytes_out;
    j["malformed_records"] = r.malformed_records;
    j["total_records"] = r.total_records;
    for (const auto& [lang, c] : r.per_language) {
        j["per_language"][lang] = {
            {"ingested", c.ingested},
            {"dropped_script_mismatch", c.dropped_script_mismatch},
            {"dropped_empty", c.dropped_empty},
            {"emitted", c.emitted},
        };
    }
    j["transliteration"] = {
        {"chars_in", r.translit.chars_in},
        {"chars_out", r.translit.chars_out},
    };
    auto& unmapped = j["transliteration"]["unmapped"];
    unmapped = nlohmann::json::array();
    for (const auto& [cp, n] : r.translit.unmapped)
        unmapped.push_back({{"codepoint", static_cast<std::uint32_t>(cp)},
                            {"count", n}});
    return j;
}

// Streaming JSONL pipeline: parse, filter on dominant script, normalize,
// optionally transliterate. Emitted order follows input order. Malformed
// lines are counted and skipped.
inline PipelineReport process_corpus(
    std::istream& in, const FilterConfig& cfg,
    const std::function<void(const CorpusDocument&)>& emit) {
    PipelineReport report;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++report.total_records;
        report.bytes_in += line.size();
        CorpusDocument doc;
        try {
            nlohmann::json j = nlohmann::json::parse(line);
            doc.id = j.at("id").get<std::string>();
            doc.lang = j.at("lang").get<std::string>();
            doc.text = j.at("text").get<std::string>();
        } catch (const nlohmann::json::exception&) {
            ++report.malformed_records;
            continue;
        }
        auto& counts = report.per_language[doc.lang];
        ++counts.ingested;
        FilterDecision decision;
        try {
            decision = filter_document(doc, cfg);
        } catch (const std::runtime_error&) {
            ++report.malformed_records;
            --counts.ingested;
            continue;
        }
        if (!decision.keep) {
            if (decision.reason == DropReason::ScriptMismatch)
                ++counts.dropped_script_mismatch;
            else
                ++counts.dropped_empty;
            continue;
        }
        doc.text = normalize(doc.text, cfg.normalization);
        if (cfg.transliterate) {
            auto res = transliterate_auto(doc.text);
            doc.text = std::move(res.text);
            report.translit.merge(res.report);
        }
        report.bytes_out += doc.text.size();
        ++counts.emitted;
        emit(doc);
    }
    return report;
}

inline PipelineReport process_corpus(std::istream& in, std::ostream& out,
                                     const FilterConfig& cfg) {
    return process_corpus(in, cfg, [&](const CorpusDocument& doc) {
        nlohmann::json j{{"id", doc.id}, {"lang", doc.lang}, {"text", doc.text}};
        out << j.dump() << '\n';
    });
}

// Parses a {"languages": {"hi": ["Devanagari"], ...}, "transliterate": bool}
// config document.
inline FilterConfig parse_filter_config(const nlohmann::json& j) {
    FilterConfig cfg;
    for (const auto& [lang, tags] : j.at("languages").items()) {
        std::set<ScriptTag> set;
        for (const auto& name : tags) {
            auto tag = script_tag_from_name(name.get<std::string>());
            if (!tag)
                throw std::runtime_error("unknown script tag: " +
                                         name.get<std::string>());
            set.insert(*tag);
        }
        if (set.empty())
            throw std::runtime_error("empty script set for language " + lang);
        cfg.allowed_scripts_by_lang[lang] = std::move(set);
    }
    cfg.transliterate = j.value("transliterate", false);
    return cfg;
}

}  // namespace indictk
