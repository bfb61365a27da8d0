#include <doctest.h>

#include "indictk/normalize.hpp"

using namespace indictk;

TEST_CASE("control characters removed, newline and tab kept") {
    CHECK(normalize("a\x01"
                    "b") == "ab");
    CHECK(normalize(std::string("a\0b", 3)) == "ab");
    CHECK(normalize("a\nb") == "a\nb");
    NormalizeOptions keep_tabs;
    keep_tabs.collapse_whitespace = false;
    CHECK(normalize("a\tb", keep_tabs) == "a\tb");
}

TEST_CASE("whitespace runs collapse to one space") {
    CHECK(normalize("क  ख") == "क ख");
    CHECK(normalize("a \t  b") == "a b");
}

TEST_CASE("precomposed nukta letters decompose (NFC exclusion behavior)") {
    // क़ U+0958 -> U+0915 U+093C
    std::u32string in = {0x0958};
    std::u32string out = canonicalize_brahmic(in);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == 0x0915);
    CHECK(out[1] == 0x093C);
    // Bengali য় U+09DF -> U+09AF U+09BC
    out = canonicalize_brahmic({0x09DF});
    REQUIRE(out.size() == 2);
    CHECK(out[0] == 0x09AF);
    CHECK(out[1] == 0x09BC);
}

TEST_CASE("two-part vowel signs compose") {
    // Bengali e + aa -> o; e + au length mark -> au
    std::u32string out = canonicalize_brahmic({0x09C7, 0x09BE});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == 0x09CB);
    out = canonicalize_brahmic({0x09C7, 0x09D7});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == 0x09CC);
    // Sinhala e + virama + aa-sign + virama chain: 0DD9 0DCF 0DCA -> 0DDD
    out = canonicalize_brahmic({0x0DD9, 0x0DCF, 0x0DCA});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == 0x0DDD);
    // Oriya e + ai length mark -> ai
    out = canonicalize_brahmic({0x0B47, 0x0B56});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == 0x0B48);
}

TEST_CASE("normalize is idempotent") {
    const char* samples[] = {
        "a\x02  b\tc",
        "क़  ख़",
        "হিন্দী   পাঠ",
        "plain ascii text",
    };
    for (const char* s : samples) {
        std::string once = normalize(s);
        CHECK(normalize(once) == once);
    }
}
