#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indictk/normalize.hpp"
#include "indictk/script.hpp"
#include "indictk/utf8.hpp"

namespace indictk {

struct TransliterationScheme {
    ScriptTag script;
    std::pair<char32_t, char32_t> block;  // main Unicode block
    std::map<char32_t, std::string> independent_vowels;
    std::map<char32_t, std::string> consonants;  // base, no inherent vowel
    std::map<char32_t, std::string> vowel_signs;
    char32_t virama = 0;
    char32_t nukta = 0;
    char32_t gemination = 0;  // Gurmukhi addak
    // base consonant -> romanization of consonant+nukta
    std::map<char32_t, std::string> nukta_consonants;
    std::map<char32_t, std::string> modifiers;
    std::map<char32_t, char> digits;
    // Rare/archaic signs deliberately left unmapped; pass through + reported.
    std::vector<char32_t> known_unmapped;
};

struct TransliterationReport {
    std::uint64_t chars_in = 0;
    std::uint64_t chars_out = 0;
    std::map<char32_t, std::uint64_t> unmapped;

    void merge(const TransliterationReport& other) {
        chars_in += other.chars_in;
        chars_out += other.chars_out;
        for (const auto& [cp, n] : other.unmapped) unmapped[cp] += n;
    }
};

struct TransliterateOptions {
    bool keep_danda = false;
};

namespace detail {

inline TransliterationScheme make_devanagari() {
    TransliterationScheme s;
    s.script = ScriptTag::Devanagari;
    s.block = {0x0900, 0x097F};
    s.independent_vowels = {
        {0x0905, "a"},  {0x0906, "ā"},  {0x0907, "i"},  {0x0908, "ī"},
        {0x0909, "u"},  {0x090A, "ū"},  {0x090B, "r̥"},
        {0x090C, "l̥"},            {0x090D, "ê"},  {0x090E, "e"},
        {0x090F, "ē"},  {0x0910, "ai"}, {0x0911, "ô"},  {0x0912, "o"},
        {0x0913, "ō"},  {0x0914, "au"},
        {0x0950, "ōṁ"},
        {0x0960, "r̥̄"},      {0x0961, "l̥̄"},
    };
    s.consonants = {
        {0x0915, "k"},  {0x0916, "kh"}, {0x0917, "g"},  {0x0918, "gh"},
        {0x0919, "ṅ"},  {0x091A, "c"},  {0x091B, "ch"}, {0x091C, "j"},
        {0x091D, "jh"}, {0x091E, "ñ"},  {0x091F, "ṭ"},  {0x0920, "ṭh"},
        {0x0921, "ḍ"},  {0x0922, "ḍh"}, {0x0923, "ṇ"},  {0x0924, "t"},
        {0x0925, "th"}, {0x0926, "d"},  {0x0927, "dh"}, {0x0928, "n"},
        {0x092A, "p"},  {0x092B, "ph"}, {0x092C, "b"},  {0x092D, "bh"},
        {0x092E, "m"},  {0x092F, "y"},  {0x0930, "r"},  {0x0932, "l"},
        {0x0933, "ḷ"},  {0x0935, "v"},  {0x0936, "ś"},  {0x0937, "ṣ"},
        {0x0938, "s"},  {0x0939, "h"},
    };
    s.vowel_signs = {
        {0x093E, "ā"},  {0x093F, "i"},  {0x0940, "ī"},  {0x0941, "u"},
        {0x0942, "ū"},  {0x0943, "r̥"},            {0x0944, "r̥̄"},
        {0x0945, "ê"},  {0x0946, "e"},  {0x0947, "ē"},  {0x0948, "ai"},
        {0x0949, "ô"},  {0x094A, "o"},  {0x094B, "ō"},  {0x094C, "au"},
        {0x0962, "l̥"},            {0x0963, "l̥̄"},
    };
    s.virama = 0x094D;
    s.nukta = 0x093C;
    s.nukta_consonants = {
        {0x0915, "q"},  {0x0916, "k͟h"}, {0x0917, "ġ"}, {0x091C, "z"},
        {0x0921, "ṛ"},  {0x0922, "ṛh"},       {0x092B, "f"}, {0x092F, "ẏ"},
        {0x0928, "ṉ"},  {0x0930, "ṟ"},        {0x0933, "ḻ"},
    };
    s.modifiers = {
        {0x0900, "m̐"}, {0x0901, "m̐"}, {0x0902, "ṁ"},
        {0x0903, "ḥ"},       {0x093D, "’"},
    };
    for (char32_t d = 0; d < 10; ++d)
        s.digits[0x0966 + d] = static_cast<char>('0' + d);
    s.known_unmapped = {0x0904, 0x093A, 0x093B, 0x094E, 0x094F, 0x0951,
                        0x0952, 0x0953, 0x0954, 0x0955, 0x0956, 0x0957,
                        0x0970, 0x0971, 0x0972, 0x0973, 0x0974, 0x0975,
                        0x0976, 0x0977, 0x0978, 0x0979, 0x097A, 0x097B,
                        0x097C, 0x097D, 0x097E, 0x097F};
    return s;
}

inline TransliterationScheme make_bengali() {
    TransliterationScheme s;
    s.script = ScriptTag::BengaliAssamese;
    s.block = {0x0980, 0x09FF};
    s.independent_vowels = {
        {0x0985, "a"},  {0x0986, "ā"},  {0x0987, "i"},  {0x0988, "ī"},
        {0x0989, "u"},  {0x098A, "ū"},  {0x098B, "r̥"},
        {0x098C, "l̥"},            {0x098F, "ē"},  {0x0990, "ai"},
        {0x0993, "ō"},  {0x0994, "au"},
        {0x09E0, "r̥̄"},      {0x09E1, "l̥̄"},
    };
    s.consonants = {
        {0x0995, "k"},  {0x0996, "kh"}, {0x0997, "g"},  {0x0998, "gh"},
        {0x0999, "ṅ"},  {0x099A, "c"},  {0x099B, "ch"}, {0x099C, "j"},
        {0x099D, "jh"}, {0x099E, "ñ"},  {0x099F, "ṭ"},  {0x09A0, "ṭh"},
        {0x09A1, "ḍ"},  {0x09A2, "ḍh"}, {0x09A3, "ṇ"},  {0x09A4, "t"},
        {0x09A5, "th"}, {0x09A6, "d"},  {0x09A7, "dh"}, {0x09A8, "n"},
        {0x09AA, "p"},  {0x09AB, "ph"}, {0x09AC, "b"},  {0x09AD, "bh"},
        {0x09AE, "m"},  {0x09AF, "y"},  {0x09B0, "r"},  {0x09B2, "l"},
        {0x09B6, "ś"},  {0x09B7, "ṣ"},  {0x09B8, "s"},  {0x09B9, "h"},
        {0x09F0, "r"},  {0x09F1, "w"},  // Assamese ra / wa
    };
    s.vowel_signs = {
        {0x09BE, "ā"},  {0x09BF, "i"},  {0x09C0, "ī"},  {0x09C1, "u"},
        {0x09C2, "ū"},  {0x09C3, "r̥"},            {0x09C4, "r̥̄"},
        {0x09C7, "ē"},  {0x09C8, "ai"}, {0x09CB, "ō"},  {0x09CC, "au"},
        {0x09D7, "au"},  // au length mark (normally composed away)
        {0x09E2, "l̥"},            {0x09E3, "l̥̄"},
    };
    s.virama = 0x09CD;
    s.nukta = 0x09BC;
    s.nukta_consonants = {
        {0x09A1, "ṛ"}, {0x09A2, "ṛh"}, {0x09AF, "ẏ"},
    };
    s.modifiers = {
        {0x0981, "m̐"}, {0x0982, "ṁ"}, {0x0983, "ḥ"},
        {0x09BD, "’"},       {0x09CE, "t"},  // khanda ta
    };
    for (char32_t d = 0; d < 10; ++d)
        s.digits[0x09E6 + d] = static_cast<char>('0' + d);
    s.known_unmapped = {0x0980, 0x09F2, 0x09F3, 0x09F4, 0x09F5, 0x09F6,
                        0x09F7, 0x09F8, 0x09F9, 0x09FA, 0x09FB, 0x09FC,
                        0x09FD, 0x09FE};
    return s;
}

inline TransliterationScheme make_oriya() {
    TransliterationScheme s;
    s.script = ScriptTag::Oriya;
    s.block = {0x0B00, 0x0B7F};
    s.independent_vowels = {
        {0x0B05, "a"},  {0x0B06, "ā"},  {0x0B07, "i"},  {0x0B08, "ī"},
        {0x0B09, "u"},  {0x0B0A, "ū"},  {0x0B0B, "r̥"},
        {0x0B0C, "l̥"},            {0x0B0F, "ē"},  {0x0B10, "ai"},
        {0x0B13, "ō"},  {0x0B14, "au"},
        {0x0B60, "r̥̄"},      {0x0B61, "l̥̄"},
    };
    s.consonants = {
        {0x0B15, "k"},  {0x0B16, "kh"}, {0x0B17, "g"},  {0x0B18, "gh"},
        {0x0B19, "ṅ"},  {0x0B1A, "c"},  {0x0B1B, "ch"}, {0x0B1C, "j"},
        {0x0B1D, "jh"}, {0x0B1E, "ñ"},  {0x0B1F, "ṭ"},  {0x0B20, "ṭh"},
        {0x0B21, "ḍ"},  {0x0B22, "ḍh"}, {0x0B23, "ṇ"},  {0x0B24, "t"},
        {0x0B25, "th"}, {0x0B26, "d"},  {0x0B27, "dh"}, {0x0B28, "n"},
        {0x0B2A, "p"},  {0x0B2B, "ph"}, {0x0B2C, "b"},  {0x0B2D, "bh"},
        {0x0B2E, "m"},  {0x0B2F, "y"},  {0x0B30, "r"},  {0x0B32, "l"},
        {0x0B33, "ḷ"},  {0x0B35, "v"},  {0x0B36, "ś"},  {0x0B37, "ṣ"},
        {0x0B38, "s"},  {0x0B39, "h"},  {0x0B5F, "ẏ"},  {0x0B71, "w"},
    };
    s.vowel_signs = {
        {0x0B3E, "ā"},  {0x0B3F, "i"},  {0x0B40, "ī"},  {0x0B41, "u"},
        {0x0B42, "ū"},  {0x0B43, "r̥"},            {0x0B44, "r̥̄"},
        {0x0B47, "ē"},  {0x0B48, "ai"}, {0x0B4B, "ō"},  {0x0B4C, "au"},
        {0x0B56, "ai"}, {0x0B57, "au"},  // length marks (normally composed)
        {0x0B62, "l̥"},            {0x0B63, "l̥̄"},
    };
    s.virama = 0x0B4D;
    s.nukta = 0x0B3C;
    s.nukta_consonants = {
        {0x0B21, "ṛ"}, {0x0B22, "ṛh"},
    };
    s.modifiers = {
        {0x0B01, "m̐"}, {0x0B02, "ṁ"}, {0x0B03, "ḥ"}, {0x0B3D, "’"},
    };
    for (char32_t d = 0; d < 10; ++d)
        s.digits[0x0B66 + d] = static_cast<char>('0' + d);
    s.known_unmapped = {0x0B55, 0x0B70, 0x0B72, 0x0B73, 0x0B74,
                        0x0B75, 0x0B76, 0x0B77};
    return s;
}

inline TransliterationScheme make_gujarati() {
    TransliterationScheme s;
    s.script = ScriptTag::Gujarati;
    s.block = {0x0A80, 0x0AFF};
    s.independent_vowels = {
        {0x0A85, "a"},  {0x0A86, "ā"},  {0x0A87, "i"},  {0x0A88, "ī"},
        {0x0A89, "u"},  {0x0A8A, "ū"},  {0x0A8B, "r̥"},
        {0x0A8C, "l̥"},            {0x0A8D, "ê"},  {0x0A8F, "ē"},
        {0x0A90, "ai"}, {0x0A91, "ô"},  {0x0A93, "ō"},  {0x0A94, "au"},
        {0x0AD0, "ōṁ"},
        {0x0AE0, "r̥̄"},      {0x0AE1, "l̥̄"},
    };
    s.consonants = {
        {0x0A95, "k"},  {0x0A96, "kh"}, {0x0A97, "g"},  {0x0A98, "gh"},
        {0x0A99, "ṅ"},  {0x0A9A, "c"},  {0x0A9B, "ch"}, {0x0A9C, "j"},
        {0x0A9D, "jh"}, {0x0A9E, "ñ"},  {0x0A9F, "ṭ"},  {0x0AA0, "ṭh"},
        {0x0AA1, "ḍ"},  {0x0AA2, "ḍh"}, {0x0AA3, "ṇ"},  {0x0AA4, "t"},
        {0x0AA5, "th"}, {0x0AA6, "d"},  {0x0AA7, "dh"}, {0x0AA8, "n"},
        {0x0AAA, "p"},  {0x0AAB, "ph"}, {0x0AAC, "b"},  {0x0AAD, "bh"},
        {0x0AAE, "m"},  {0x0AAF, "y"},  {0x0AB0, "r"},  {0x0AB2, "l"},
        {0x0AB3, "ḷ"},  {0x0AB5, "v"},  {0x0AB6, "ś"},  {0x0AB7, "ṣ"},
        {0x0AB8, "s"},  {0x0AB9, "h"},
    };
    s.vowel_signs = {
        {0x0ABE, "ā"},  {0x0ABF, "i"},  {0x0AC0, "ī"},  {0x0AC1, "u"},
        {0x0AC2, "ū"},  {0x0AC3, "r̥"},            {0x0AC4, "r̥̄"},
        {0x0AC5, "ê"},  {0x0AC7, "ē"},  {0x0AC8, "ai"}, {0x0AC9, "ô"},
        {0x0ACB, "ō"},  {0x0ACC, "au"},
        {0x0AE2, "l̥"},            {0x0AE3, "l̥̄"},
    };
    s.virama = 0x0ACD;
    s.nukta = 0x0ABC;
    s.modifiers = {
        {0x0A81, "m̐"}, {0x0A82, "ṁ"}, {0x0A83, "ḥ"}, {0x0ABD, "’"},
    };
    for (char32_t d = 0; d < 10; ++d)
        s.digits[0x0AE6 + d] = static_cast<char>('0' + d);
    s.known_unmapped = {0x0AF0, 0x0AF1, 0x0AF9, 0x0AFA, 0x0AFB,
                        0x0AFC, 0x0AFD, 0x0AFE, 0x0AFF};
    return s;
}

inline TransliterationScheme make_gurmukhi() {
    TransliterationScheme s;
    s.script = ScriptTag::Gurmukhi;
    s.block = {0x0A00, 0x0A7F};
    s.independent_vowels = {
        {0x0A05, "a"},  {0x0A06, "ā"},  {0x0A07, "i"},  {0x0A08, "ī"},
        {0x0A09, "u"},  {0x0A0A, "ū"},  {0x0A0F, "ē"},  {0x0A10, "ai"},
        {0x0A13, "ō"},  {0x0A14, "au"},
    };
    s.consonants = {
        {0x0A15, "k"},  {0x0A16, "kh"}, {0x0A17, "g"},  {0x0A18, "gh"},
        {0x0A19, "ṅ"},  {0x0A1A, "c"},  {0x0A1B, "ch"}, {0x0A1C, "j"},
        {0x0A1D, "jh"}, {0x0A1E, "ñ"},  {0x0A1F, "ṭ"},  {0x0A20, "ṭh"},
        {0x0A21, "ḍ"},  {0x0A22, "ḍh"}, {0x0A23, "ṇ"},  {0x0A24, "t"},
        {0x0A25, "th"}, {0x0A26, "d"},  {0x0A27, "dh"}, {0x0A28, "n"},
        {0x0A2A, "p"},  {0x0A2B, "ph"}, {0x0A2C, "b"},  {0x0A2D, "bh"},
        {0x0A2E, "m"},  {0x0A2F, "y"},  {0x0A30, "r"},  {0x0A32, "l"},
        {0x0A35, "v"},  {0x0A38, "s"},  {0x0A39, "h"},  {0x0A5C, "ṛ"},
    };
    s.vowel_signs = {
        {0x0A3E, "ā"}, {0x0A3F, "i"}, {0x0A40, "ī"}, {0x0A41, "u"},
        {0x0A42, "ū"}, {0x0A47, "ē"}, {0x0A48, "ai"}, {0x0A4B, "ō"},
        {0x0A4C, "au"},
    };
    s.virama = 0x0A4D;
    s.nukta = 0x0A3C;
    s.gemination = 0x0A71;  // addak doubles the next consonant
    s.nukta_consonants = {
        {0x0A32, "ḷ"}, {0x0A38, "ś"},       {0x0A16, "k͟h"},
        {0x0A17, "ġ"}, {0x0A1C, "z"},       {0x0A2B, "f"},
    };
    s.modifiers = {
        {0x0A01, "m̐"}, {0x0A02, "ṁ"}, {0x0A03, "ḥ"},
        {0x0A70, "ṁ"},       // tippi
        {0x0A75, "y"},       // yakash (subjoined ya)
    };
    for (char32_t d = 0; d < 10; ++d)
        s.digits[0x0A66 + d] = static_cast<char>('0' + d);
    s.known_unmapped = {0x0A51, 0x0A72, 0x0A73, 0x0A74, 0x0A76};
    return s;
}

inline TransliterationScheme make_sinhala() {
    TransliterationScheme s;
    s.script = ScriptTag::Sinhala;
    s.block = {0x0D80, 0x0DFF};
    s.independent_vowels = {
        {0x0D85, "a"},  {0x0D86, "ā"},  {0x0D87, "æ"},  {0x0D88, "ǣ"},
        {0x0D89, "i"},  {0x0D8A, "ī"},  {0x0D8B, "u"},  {0x0D8C, "ū"},
        {0x0D8D, "r̥"},            {0x0D8E, "r̥̄"},
        {0x0D8F, "l̥"},            {0x0D90, "l̥̄"},
        {0x0D91, "e"},  {0x0D92, "ē"},  {0x0D93, "ai"}, {0x0D94, "o"},
        {0x0D95, "ō"},  {0x0D96, "au"},
    };
    s.consonants = {
        {0x0D9A, "k"},  {0x0D9B, "kh"}, {0x0D9C, "g"},  {0x0D9D, "gh"},
        {0x0D9E, "ṅ"},  {0x0D9F, "n̆g"},           {0x0DA0, "c"},
        {0x0DA1, "ch"}, {0x0DA2, "j"},  {0x0DA3, "jh"}, {0x0DA4, "ñ"},
        {0x0DA5, "jñ"}, {0x0DA6, "n̆j"},           {0x0DA7, "ṭ"},
        {0x0DA8, "ṭh"}, {0x0DA9, "ḍ"},  {0x0DAA, "ḍh"}, {0x0DAB, "ṇ"},
        {0x0DAC, "n̆ḍ"},           {0x0DAD, "t"},  {0x0DAE, "th"},
        {0x0DAF, "d"},  {0x0DB0, "dh"}, {0x0DB1, "n"},  {0x0DB3, "n̆d"},
        {0x0DB4, "p"},  {0x0DB5, "ph"}, {0x0DB6, "b"},  {0x0DB7, "bh"},
        {0x0DB8, "m"},  {0x0DB9, "m̆b"},           {0x0DBA, "y"},
        {0x0DBB, "r"},  {0x0DBD, "l"},  {0x0DC0, "v"},  {0x0DC1, "ś"},
        {0x0DC2, "ṣ"},  {0x0DC3, "s"},  {0x0DC4, "h"},  {0x0DC5, "ḷ"},
        {0x0DC6, "f"},
    };
    s.vowel_signs = {
        {0x0DCF, "ā"},  {0x0DD0, "æ"},  {0x0DD1, "ǣ"},  {0x0DD2, "i"},
        {0x0DD3, "ī"},  {0x0DD4, "u"},  {0x0DD6, "ū"},
        {0x0DD8, "r̥"},            {0x0DD9, "e"},  {0x0DDA, "ē"},
        {0x0DDB, "ai"}, {0x0DDC, "o"},  {0x0DDD, "ō"},  {0x0DDE, "au"},
        {0x0DDF, "l̥"},
        {0x0DF2, "r̥̄"},      {0x0DF3, "l̥̄"},
    };
    s.virama = 0x0DCA;  // al-lakuna
    s.modifiers = {
        {0x0D81, "m̐"}, {0x0D82, "ṁ"}, {0x0D83, "ḥ"},
    };
    for (char32_t d = 0; d < 10; ++d)
        s.digits[0x0DE6 + d] = static_cast<char>('0' + d);
    s.known_unmapped = {0x0DF4};
    return s;
}

}  // namespace detail

// Built-in immutable ISO-15919 scheme for one of the six Brahmic scripts.
// Throws std::invalid_argument for any other tag.
inline const TransliterationScheme& load_scheme(ScriptTag script) {
    static const TransliterationScheme deva = detail::make_devanagari();
    static const TransliterationScheme beng = detail::make_bengali();
    static const TransliterationScheme orya = detail::make_oriya();
    static const TransliterationScheme gujr = detail::make_gujarati();
    static const TransliterationScheme guru = detail::make_gurmukhi();
    static const TransliterationScheme sinh = detail::make_sinhala();
    switch (script) {
        case ScriptTag::Devanagari: return deva;
        case ScriptTag::BengaliAssamese: return beng;
        case ScriptTag::Oriya: return orya;
        case ScriptTag::Gujarati: return gujr;
        case ScriptTag::Gurmukhi: return guru;
        case ScriptTag::Sinhala: return sinh;
        default:
            throw std::invalid_argument(
                std::string("no transliteration scheme for script ") +
                to_string(script));
    }
}

namespace detail {

inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;
inline constexpr char32_t kDanda = 0x0964;
inline constexpr char32_t kDoubleDanda = 0x0965;

// Left-to-right abugida scan over canonicalized codepoints. Consonants take
// a following nukta, then either a vowel sign, a virama (cluster continues),
// or the inherent "a".
inline void transliterate_run(const std::u32string& cps,
                              const TransliterationScheme& scheme,
                              const TransliterateOptions& opts,
                              std::string& out, TransliterationReport& report) {
    bool pending_gemination = false;
    std::size_t i = 0;
    const std::size_t n = cps.size();
    while (i < n) {
        char32_t cp = cps[i];
        if (cp == kZwnj || cp == kZwj) {
            ++i;
            continue;
        }
        if (cp == kDanda || cp == kDoubleDanda) {
            if (opts.keep_danda)
                append_utf8(out, cp);
            else
                out += (cp == kDanda) ? "." : "..";
            ++i;
            continue;
        }
        if (auto it = scheme.consonants.find(cp);
            it != scheme.consonants.end()) {
            std::string base = it->second;
            std::size_t j = i + 1;
            if (scheme.nukta != 0 && j < n && cps[j] == scheme.nukta) {
                if (auto nk = scheme.nukta_consonants.find(cp);
                    nk != scheme.nukta_consonants.end()) {
                    base = nk->second;
                } else {
                    ++report.unmapped[scheme.nukta];
                }
                ++j;
            }
            if (pending_gemination) {
                out += base;
                pending_gemination = false;
            }
            out += base;
            // skip joiners between consonant and its sign
            while (j < n && (cps[j] == kZwnj || cps[j] == kZwj)) ++j;
            if (j < n && scheme.vowel_signs.count(cps[j])) {
                out += scheme.vowel_signs.at(cps[j]);
                ++j;
            } else if (j < n && cps[j] == scheme.virama) {
                ++j;  // cluster continues or word-final bare consonant
            } else {
                out += "a";
            }
            i = j;
            continue;
        }
        if (auto it = scheme.independent_vowels.find(cp);
            it != scheme.independent_vowels.end()) {
            out += it->second;
            ++i;
            continue;
        }
        if (auto it = scheme.vowel_signs.find(cp);
            it != scheme.vowel_signs.end()) {
            out += it->second;  // stray matra
            ++i;
            continue;
        }
        if (cp == scheme.virama) {
            ++i;
            continue;
        }
        if (scheme.nukta != 0 && cp == scheme.nukta) {
            ++report.unmapped[cp];
            ++i;
            continue;
        }
        if (scheme.gemination != 0 && cp == scheme.gemination) {
            pending_gemination = true;
            ++i;
            continue;
        }
        if (auto it = scheme.modifiers.find(cp); it != scheme.modifiers.end()) {
            out += it->second;
            ++i;
            continue;
        }
        if (auto it = scheme.digits.find(cp); it != scheme.digits.end()) {
            out.push_back(it->second);
            ++i;
            continue;
        }
        // Unmapped: pass through; report only script-specific codepoints.
        append_utf8(out, cp);
        ScriptTag tag = classify_codepoint(cp);
        if (tag != ScriptTag::Neutral && tag != ScriptTag::Latin)
            ++report.unmapped[cp];
        ++i;
    }
}

}  // namespace detail

struct TransliterationResult {
    std::string text;
    TransliterationReport report;
};

inline TransliterationResult transliterate(
    std::string_view text, const TransliterationScheme& scheme,
    const TransliterateOptions& opts = {}) {
    TransliterationResult res;
    std::u32string cps = to_codepoints(text);
    res.report.chars_in = cps.size();
    cps = canonicalize_brahmic(cps);
    detail::transliterate_run(cps, scheme, opts, res.text, res.report);
    res.report.chars_out = to_codepoints(res.text).size();
    return res;
}

// Segments text into maximal single-script runs (Neutral attaches to the
// current run), transliterates Brahmic runs, passes the rest through.
inline TransliterationResult transliterate_auto(
    std::string_view text, const TransliterateOptions& opts = {}) {
    TransliterationResult res;
    std::u32string cps = to_codepoints(text);
    res.report.chars_in = cps.size();
    cps = canonicalize_brahmic(cps);

    std::u32string run;
    ScriptTag run_tag = ScriptTag::Neutral;  // Neutral = undecided

    auto flush = [&]() {
        if (run.empty()) return;
        if (is_brahmic(run_tag)) {
            detail::transliterate_run(run, load_scheme(run_tag), opts,
                                      res.text, res.report);
        } else {
            for (char32_t cp : run) append_utf8(res.text, cp);
        }
        run.clear();
        run_tag = ScriptTag::Neutral;
    };

    for (char32_t cp : cps) {
        ScriptTag tag = classify_codepoint(cp);
        if (tag == ScriptTag::Neutral) {
            run.push_back(cp);
            continue;
        }
        if (run_tag == ScriptTag::Neutral) {
            run_tag = tag;
        } else if (tag != run_tag &&
                   (is_brahmic(tag) || is_brahmic(run_tag))) {
            flush();
            run_tag = tag;
        }
        run.push_back(cp);
    }
    flush();
    res.report.chars_out = to_codepoints(res.text).size();
    return res;
}

}  // namespace indictk
