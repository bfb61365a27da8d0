#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "indictk/utf8.hpp"

namespace indictk {

// Unicode block tables baked in from UCD 15.0 (see kUnicodeVersion).
inline constexpr const char* kUnicodeVersion = "15.0.0";

enum class ScriptTag : std::uint8_t {
    Devanagari = 0,
    BengaliAssamese,
    Oriya,
    Gujarati,
    Gurmukhi,
    Sinhala,
    Latin,
    Other,
    Neutral,
};

inline constexpr std::size_t kScriptTagCount = 9;

inline constexpr std::array<const char*, kScriptTagCount> kScriptTagNames = {
    "Devanagari", "BengaliAssamese", "Oriya",   "Gujarati", "Gurmukhi",
    "Sinhala",    "Latin",           "Other",   "Neutral",
};

inline const char* to_string(ScriptTag tag) {
    return kScriptTagNames[static_cast<std::size_t>(tag)];
}

inline bool is_brahmic(ScriptTag tag) {
    return static_cast<std::uint8_t>(tag) <=
           static_cast<std::uint8_t>(ScriptTag::Sinhala);
}

// Total over all scalar values; every codepoint maps to exactly one tag.
inline ScriptTag classify_codepoint(char32_t cp) {
    // ASCII fast path: letters are Latin, the rest (space, digits,
    // punctuation, controls) is script-neutral.
    if (cp < 0x80) {
        if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z'))
            return ScriptTag::Latin;
        return ScriptTag::Neutral;
    }
    if (cp >= 0x0900 && cp <= 0x097F) return ScriptTag::Devanagari;
    if (cp >= 0x0980 && cp <= 0x09FF) return ScriptTag::BengaliAssamese;
    if (cp >= 0x0A00 && cp <= 0x0A7F) return ScriptTag::Gurmukhi;
    if (cp >= 0x0A80 && cp <= 0x0AFF) return ScriptTag::Gujarati;
    if (cp >= 0x0B00 && cp <= 0x0B7F) return ScriptTag::Oriya;
    if (cp >= 0x0D80 && cp <= 0x0DFF) return ScriptTag::Sinhala;
    // Devanagari Extended; Sinhala Archaic Numbers.
    if (cp >= 0xA8E0 && cp <= 0xA8FF) return ScriptTag::Devanagari;
    if (cp >= 0x111E0 && cp <= 0x111FF) return ScriptTag::Sinhala;
    // Latin supplements and extensions (multiplication/division signs in
    // Latin-1 are symbols, not letters).
    if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7)
        return ScriptTag::Latin;
    if (cp >= 0x0100 && cp <= 0x024F) return ScriptTag::Latin;
    if (cp >= 0x1E00 && cp <= 0x1EFF) return ScriptTag::Latin;
    if (cp >= 0x2C60 && cp <= 0x2C7F) return ScriptTag::Latin;
    if (cp >= 0xA720 && cp <= 0xA7FF) return ScriptTag::Latin;
    // Script-inherited combining marks, general punctuation (incl. ZWJ/ZWNJ),
    // and remaining Latin-1 punctuation/symbols.
    if (cp >= 0x0300 && cp <= 0x036F) return ScriptTag::Neutral;
    if (cp >= 0x2000 && cp <= 0x206F) return ScriptTag::Neutral;
    if (cp >= 0x80 && cp <= 0xBF) return ScriptTag::Neutral;
    if (cp == 0x00D7 || cp == 0x00F7) return ScriptTag::Neutral;
    return ScriptTag::Other;
}

struct ScriptHistogram {
    std::array<std::uint64_t, kScriptTagCount> counts{};
    std::uint64_t total_scriptful = 0;

    std::uint64_t count(ScriptTag tag) const {
        return counts[static_cast<std::size_t>(tag)];
    }
};

inline ScriptHistogram script_histogram(std::string_view text) {
    ScriptHistogram h;
    std::size_t pos = 0;
    while (pos < text.size()) {
        ScriptTag tag = classify_codepoint(decode_utf8(text, pos));
        ++h.counts[static_cast<std::size_t>(tag)];
        if (tag != ScriptTag::Neutral) ++h.total_scriptful;
    }
    return h;
}

struct DominantScript {
    ScriptTag tag;
    bool tie = false;
};

// Plurality over scriptful codepoints; ties broken by enumeration order and
// flagged. Absent when nothing scriptful is present.
inline std::optional<DominantScript> dominant_script(const ScriptHistogram& h) {
    if (h.total_scriptful == 0) return std::nullopt;
    std::size_t best = 0;
    bool tie = false;
    for (std::size_t i = 1; i < kScriptTagCount - 1; ++i) {  // skip Neutral
        if (h.counts[i] > h.counts[best]) {
            best = i;
            tie = false;
        } else if (h.counts[i] == h.counts[best] && h.counts[i] > 0 && i != best) {
            tie = true;
        }
    }
    return DominantScript{static_cast<ScriptTag>(best), tie};
}

inline std::optional<DominantScript> dominant_script(std::string_view text) {
    return dominant_script(script_histogram(text));
}

inline std::optional<ScriptTag> script_tag_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kScriptTagCount; ++i)
        if (name == kScriptTagNames[i]) return static_cast<ScriptTag>(i);
    return std::nullopt;
}

}  // namespace indictk
