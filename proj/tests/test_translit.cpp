#include <doctest.h>

#include <ios>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "indictk/script.hpp"
#include "indictk/translit.hpp"

using namespace indictk;

namespace {

struct Range {
    char32_t lo, hi;
};

// Assigned codepoints per block, UCD 15.0.
const std::vector<Range> kAssignedDevanagari = {{0x0900, 0x097F}};
const std::vector<Range> kAssignedBengali = {
    {0x0980, 0x0983}, {0x0985, 0x098C}, {0x098F, 0x0990}, {0x0993, 0x09A8},
    {0x09AA, 0x09B0}, {0x09B2, 0x09B2}, {0x09B6, 0x09B9}, {0x09BC, 0x09C4},
    {0x09C7, 0x09C8}, {0x09CB, 0x09CE}, {0x09D7, 0x09D7}, {0x09DC, 0x09DD},
    {0x09DF, 0x09E3}, {0x09E6, 0x09FE}};
const std::vector<Range> kAssignedGurmukhi = {
    {0x0A01, 0x0A03}, {0x0A05, 0x0A0A}, {0x0A0F, 0x0A10}, {0x0A13, 0x0A28},
    {0x0A2A, 0x0A30}, {0x0A32, 0x0A33}, {0x0A35, 0x0A36}, {0x0A38, 0x0A39},
    {0x0A3C, 0x0A3C}, {0x0A3E, 0x0A42}, {0x0A47, 0x0A48}, {0x0A4B, 0x0A4D},
    {0x0A51, 0x0A51}, {0x0A59, 0x0A5C}, {0x0A5E, 0x0A5E}, {0x0A66, 0x0A76}};
const std::vector<Range> kAssignedGujarati = {
    {0x0A81, 0x0A83}, {0x0A85, 0x0A8D}, {0x0A8F, 0x0A91}, {0x0A93, 0x0AA8},
    {0x0AAA, 0x0AB0}, {0x0AB2, 0x0AB3}, {0x0AB5, 0x0AB9}, {0x0ABC, 0x0AC5},
    {0x0AC7, 0x0AC9}, {0x0ACB, 0x0ACD}, {0x0AD0, 0x0AD0}, {0x0AE0, 0x0AE3},
    {0x0AE6, 0x0AF1}, {0x0AF9, 0x0AFF}};
const std::vector<Range> kAssignedOriya = {
    {0x0B01, 0x0B03}, {0x0B05, 0x0B0C}, {0x0B0F, 0x0B10}, {0x0B13, 0x0B28},
    {0x0B2A, 0x0B30}, {0x0B32, 0x0B33}, {0x0B35, 0x0B39}, {0x0B3C, 0x0B44},
    {0x0B47, 0x0B48}, {0x0B4B, 0x0B4D}, {0x0B55, 0x0B57}, {0x0B5C, 0x0B5D},
    {0x0B5F, 0x0B63}, {0x0B66, 0x0B77}};
const std::vector<Range> kAssignedSinhala = {
    {0x0D81, 0x0D83}, {0x0D85, 0x0D96}, {0x0D9A, 0x0DB1}, {0x0DB3, 0x0DBB},
    {0x0DBD, 0x0DBD}, {0x0DC0, 0x0DC6}, {0x0DCA, 0x0DCA}, {0x0DCF, 0x0DD4},
    {0x0DD6, 0x0DD6}, {0x0DD8, 0x0DDF}, {0x0DE6, 0x0DEF}, {0x0DF2, 0x0DF4}};

bool scheme_covers(const TransliterationScheme& s, char32_t cp) {
    if (s.independent_vowels.count(cp) || s.consonants.count(cp) ||
        s.vowel_signs.count(cp) || s.modifiers.count(cp) ||
        s.digits.count(cp))
        return true;
    if (cp == s.virama || cp == s.nukta ||
        (s.gemination != 0 && cp == s.gemination))
        return true;
    if (cp == 0x0964 || cp == 0x0965) return true;  // danda, engine-global
    char32_t base, nukta;
    if (nukta_decomposition(cp, base, nukta) &&
        (s.nukta_consonants.count(base) || s.consonants.count(base)))
        return true;
    for (char32_t u : s.known_unmapped)
        if (u == cp) return true;
    return false;
}

void check_coverage(ScriptTag tag, const std::vector<Range>& assigned) {
    const auto& scheme = load_scheme(tag);
    for (const Range& r : assigned) {
        for (char32_t cp = r.lo; cp <= r.hi; ++cp) {
            INFO("script " << to_string(tag) << " codepoint U+" << std::hex
                           << static_cast<std::uint32_t>(cp));
            CHECK(scheme_covers(scheme, cp));
        }
    }
}

// Every codepoint a scheme actually maps (excluding known-unmapped), for
// fuzzing the Latin-output property.
std::vector<char32_t> mapped_codepoints(const TransliterationScheme& s) {
    std::vector<char32_t> cps;
    for (const auto& [cp, _] : s.independent_vowels) cps.push_back(cp);
    for (const auto& [cp, _] : s.consonants) cps.push_back(cp);
    for (const auto& [cp, _] : s.vowel_signs) cps.push_back(cp);
    for (const auto& [cp, _] : s.modifiers) cps.push_back(cp);
    for (const auto& [cp, _] : s.digits) cps.push_back(cp);
    cps.push_back(s.virama);
    if (s.nukta != 0) cps.push_back(s.nukta);
    if (s.gemination != 0) cps.push_back(s.gemination);
    return cps;
}

using GoldenSet = std::vector<std::pair<std::string, std::string>>;

const GoldenSet kDevanagariGolden = {
    {"क", "ka"},
    {"क्", "k"},
    {"की", "kī"},
    {"क्ष", "kṣa"},
    {"हिंदी", "hiṁdī"},
    {"भारत", "bhārata"},
    {"नमस्ते", "namastē"},
    {"देवनागरी", "dēvanāgarī"},
    {"संस्कृत", "saṁskr̥ta"},
    {"विद्या", "vidyā"},
    {"पुस्तक", "pustaka"},
    {"गुरु", "guru"},
    {"शब्द", "śabda"},
    {"प्रेम", "prēma"},
    {"हृदय", "hr̥daya"},
    {"ज्ञान", "jñāna"},
    {"बच्चा", "baccā"},
    {"अध्यापक", "adhyāpaka"},
    {"ऋषि", "r̥ṣi"},
    {"कार्य", "kārya"},
    {"स्वागत", "svāgata"},
    {"फ़िल्म", "filma"},
    {"दुःख", "duḥkha"},
    {"चाँद", "cām̐da"},
    {"वर्षा", "varṣā"},
    {"१२३", "123"},
};

const GoldenSet kBengaliGolden = {
    {"ক", "ka"},
    {"কী", "kī"},
    {"বাংলা", "bāṁlā"},
    {"বাংলাদেশ", "bāṁlādēśa"},
    {"আমি", "āmi"},
    {"তুমি", "tumi"},
    {"ভালো", "bhālō"},
    {"বই", "bai"},
    {"জল", "jala"},
    {"মানুষ", "mānuṣa"},
    {"শিক্ষা", "śikṣā"},
    {"গ্রাম", "grāma"},
    {"চাঁদ", "cām̐da"},
    {"দুঃখ", "duḥkha"},
    {"কৃষক", "kr̥ṣaka"},
    {"নদী", "nadī"},
    {"সোনা", "sōnā"},
    {"পড়া", "paṛā"},
    {"ঠিক", "ṭhika"},
    {"রাত", "rāta"},
    {"হৃদয়", "hr̥daẏa"},
    {"বিদ্যালয়", "bidyālaẏa"},
    {"১২৩", "123"},
};

}  // namespace

TEST_CASE("load_scheme") {
    const auto& deva = load_scheme(ScriptTag::Devanagari);
    CHECK(deva.consonants.at(0x0915) == "k");
    CHECK(deva.vowel_signs.at(0x0940) == "ī");
    CHECK(deva.virama == 0x094D);
    CHECK(load_scheme(ScriptTag::Gurmukhi).virama == 0x0A4D);
    CHECK_THROWS_AS(load_scheme(ScriptTag::Latin), std::invalid_argument);
    CHECK_THROWS_AS(load_scheme(ScriptTag::Neutral), std::invalid_argument);
}

TEST_CASE("Devanagari golden set") {
    const auto& scheme = load_scheme(ScriptTag::Devanagari);
    for (const auto& [word, expected] : kDevanagariGolden) {
        auto res = transliterate(word, scheme);
        INFO("input " << word);
        CHECK(res.text == expected);
        CHECK(res.report.unmapped.empty());
    }
}

TEST_CASE("Bengali golden set") {
    const auto& scheme = load_scheme(ScriptTag::BengaliAssamese);
    for (const auto& [word, expected] : kBengaliGolden) {
        auto res = transliterate(word, scheme);
        INFO("input " << word);
        CHECK(res.text == expected);
        CHECK(res.report.unmapped.empty());
    }
}

TEST_CASE("non-source text passes through unchanged") {
    const auto& scheme = load_scheme(ScriptTag::Devanagari);
    auto res = transliterate("hello, 123", scheme);
    CHECK(res.text == "hello, 123");
    CHECK(res.report.unmapped.empty());
    CHECK(transliterate("", scheme).text.empty());
}

TEST_CASE("unmapped script-specific codepoints are reported") {
    const auto& scheme = load_scheme(ScriptTag::Devanagari);
    // Bengali ka run through the Devanagari scheme: passthrough + report
    auto res = transliterate("ক", scheme);
    CHECK(res.text == "ক");
    REQUIRE(res.report.unmapped.size() == 1);
    CHECK(res.report.unmapped.count(0x0995) == 1);
}

TEST_CASE("danda handling") {
    const auto& scheme = load_scheme(ScriptTag::Devanagari);
    CHECK(transliterate("क।", scheme).text == "ka.");
    CHECK(transliterate("क॥", scheme).text == "ka..");
    TransliterateOptions keep;
    keep.keep_danda = true;
    CHECK(transliterate("क।", scheme, keep).text == "ka।");
}

TEST_CASE("ZWJ/ZWNJ dropped") {
    const auto& scheme = load_scheme(ScriptTag::Devanagari);
    // ka + virama + ZWNJ + ssa: cluster still forms
    std::string in;
    append_utf8(in, 0x0915);
    append_utf8(in, 0x094D);
    append_utf8(in, 0x200C);
    append_utf8(in, 0x0937);
    CHECK(transliterate(in, scheme).text == "kṣa");
}

TEST_CASE("Gurmukhi addak doubles the following consonant") {
    const auto& scheme = load_scheme(ScriptTag::Gurmukhi);
    CHECK(transliterate("ਪੱਕਾ", scheme).text == "pakkā");  // pa addak ka aa
    CHECK(transliterate("ਪੰਜਾਬੀ", scheme).text == "paṁjābī");
}

TEST_CASE("Sinhala words") {
    const auto& scheme = load_scheme(ScriptTag::Sinhala);
    CHECK(transliterate("සිංහල", scheme).text == "siṁhala");
    CHECK(transliterate("කොළඹ", scheme).text == "koḷam̆ba");
}

TEST_CASE("transliterate_auto segments by script") {
    auto res = transliterate_auto("हिंदी and বাংলা");
    CHECK(res.text == "hiṁdī and bāṁlā");

    CHECK(transliterate_auto("pure latin text.").text == "pure latin text.");
    CHECK(transliterate_auto("१२३").text == "123");
}

TEST_CASE("scheme table invariants") {
    const ScriptTag tags[] = {ScriptTag::Devanagari, ScriptTag::BengaliAssamese,
                              ScriptTag::Oriya,      ScriptTag::Gujarati,
                              ScriptTag::Gurmukhi,   ScriptTag::Sinhala};
    for (ScriptTag tag : tags) {
        const auto& s = load_scheme(tag);
        // every mapping value is Latin/Neutral per the classifier
        auto check_value = [&](const std::string& v) {
            for (char32_t cp : to_codepoints(v)) {
                ScriptTag t = classify_codepoint(cp);
                CHECK((t == ScriptTag::Latin || t == ScriptTag::Neutral));
            }
        };
        for (const auto& [_, v] : s.independent_vowels) check_value(v);
        for (const auto& [_, v] : s.consonants) check_value(v);
        for (const auto& [_, v] : s.vowel_signs) check_value(v);
        for (const auto& [_, v] : s.modifiers) check_value(v);
        // every key belongs to the scheme's block
        auto check_key = [&](char32_t cp) {
            CHECK(cp >= s.block.first);
            CHECK(cp <= s.block.second);
        };
        for (const auto& [cp, _] : s.independent_vowels) check_key(cp);
        for (const auto& [cp, _] : s.consonants) check_key(cp);
        for (const auto& [cp, _] : s.vowel_signs) check_key(cp);
        for (const auto& [cp, _] : s.digits) check_key(cp);
        check_key(s.virama);
    }
}

TEST_CASE("exhaustive block coverage") {
    check_coverage(ScriptTag::Devanagari, kAssignedDevanagari);
    check_coverage(ScriptTag::BengaliAssamese, kAssignedBengali);
    check_coverage(ScriptTag::Gurmukhi, kAssignedGurmukhi);
    check_coverage(ScriptTag::Gujarati, kAssignedGujarati);
    check_coverage(ScriptTag::Oriya, kAssignedOriya);
    check_coverage(ScriptTag::Sinhala, kAssignedSinhala);
}

TEST_CASE("Latin-output property on fuzzed strings") {
    const ScriptTag tags[] = {ScriptTag::Devanagari, ScriptTag::BengaliAssamese,
                              ScriptTag::Oriya,      ScriptTag::Gujarati,
                              ScriptTag::Gurmukhi,   ScriptTag::Sinhala};
    std::mt19937 rng(42);
    const std::vector<char32_t> neutral = {U' ', U',', U'.', U'!', U'1',
                                           0x200C, 0x200D};
    for (ScriptTag tag : tags) {
        const auto& scheme = load_scheme(tag);
        std::vector<char32_t> pool = mapped_codepoints(scheme);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_neutral(
            0, neutral.size() - 1);
        std::uniform_int_distribution<int> len(1, 30);
        std::uniform_int_distribution<int> coin(0, 9);
        for (int trial = 0; trial < 500; ++trial) {
            std::string in;
            int n = len(rng);
            for (int i = 0; i < n; ++i) {
                char32_t cp = coin(rng) < 2 ? neutral[pick_neutral(rng)]
                                            : pool[pick(rng)];
                append_utf8(in, cp);
            }
            auto res = transliterate(in, scheme);
            auto h = script_histogram(res.text);
            for (std::size_t i = 0;
                 i <= static_cast<std::size_t>(ScriptTag::Sinhala); ++i) {
                INFO("script " << to_string(tag) << " input " << in
                               << " output " << res.text);
                CHECK(h.counts[i] == 0);
            }
            // idempotence of the auto path on its own output
            auto once = transliterate_auto(in);
            CHECK(transliterate_auto(once.text).text == once.text);
        }
    }
}

TEST_CASE("determinism and line chunking") {
    std::string text = "हिंदी text\nবাংলা পাঠ\nਪੰਜਾਬੀ";
    auto whole = transliterate_auto(text);
    CHECK(transliterate_auto(text).text == whole.text);
    // processing line by line gives the same bytes
    std::string lines_out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string line = text.substr(
            start, nl == std::string::npos ? std::string::npos : nl - start);
        lines_out += transliterate_auto(line).text;
        if (nl == std::string::npos) break;
        lines_out += '\n';
        start = nl + 1;
    }
    CHECK(lines_out == whole.text);
}
