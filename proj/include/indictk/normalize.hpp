#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "indictk/utf8.hpp"

namespace indictk {

// Canonical decompositions of the precomposed Indic nukta letters. These are
// all composition exclusions in the UCD, so NFC leaves them decomposed.
inline bool nukta_decomposition(char32_t cp, char32_t& base, char32_t& nukta) {
    nukta = 0;
    switch (cp) {
        // Devanagari
        case 0x0929: base = 0x0928; nukta = 0x093C; break;
        case 0x0931: base = 0x0930; nukta = 0x093C; break;
        case 0x0934: base = 0x0933; nukta = 0x093C; break;
        case 0x0958: base = 0x0915; nukta = 0x093C; break;
        case 0x0959: base = 0x0916; nukta = 0x093C; break;
        case 0x095A: base = 0x0917; nukta = 0x093C; break;
        case 0x095B: base = 0x091C; nukta = 0x093C; break;
        case 0x095C: base = 0x0921; nukta = 0x093C; break;
        case 0x095D: base = 0x0922; nukta = 0x093C; break;
        case 0x095E: base = 0x092B; nukta = 0x093C; break;
        case 0x095F: base = 0x092F; nukta = 0x093C; break;
        // Bengali
        case 0x09DC: base = 0x09A1; nukta = 0x09BC; break;
        case 0x09DD: base = 0x09A2; nukta = 0x09BC; break;
        case 0x09DF: base = 0x09AF; nukta = 0x09BC; break;
        // Gurmukhi
        case 0x0A33: base = 0x0A32; nukta = 0x0A3C; break;
        case 0x0A36: base = 0x0A38; nukta = 0x0A3C; break;
        case 0x0A59: base = 0x0A16; nukta = 0x0A3C; break;
        case 0x0A5A: base = 0x0A17; nukta = 0x0A3C; break;
        case 0x0A5B: base = 0x0A1C; nukta = 0x0A3C; break;
        case 0x0A5E: base = 0x0A2B; nukta = 0x0A3C; break;
        // Oriya
        case 0x0B5C: base = 0x0B21; nukta = 0x0B3C; break;
        case 0x0B5D: base = 0x0B22; nukta = 0x0B3C; break;
        default:
            return false;
    }
    return true;
}

// Canonical two-part vowel sign compositions (not excluded, so NFC composes
// them). Bengali/Oriya O and AU, Oriya AI, Sinhala E/O/AU series.
inline char32_t compose_pair(char32_t a, char32_t b) {
    switch (a) {
        case 0x09C7:
            if (b == 0x09BE) return 0x09CB;
            if (b == 0x09D7) return 0x09CC;
            break;
        case 0x0B47:
            if (b == 0x0B56) return 0x0B48;
            if (b == 0x0B3E) return 0x0B4B;
            if (b == 0x0B57) return 0x0B4C;
            break;
        case 0x0DD9:
            if (b == 0x0DCA) return 0x0DDA;
            if (b == 0x0DCF) return 0x0DDC;
            if (b == 0x0DDF) return 0x0DDE;
            break;
        case 0x0DDC:
            if (b == 0x0DCA) return 0x0DDD;
            break;
    }
    return 0;
}

// Canonical normalization restricted to the six Brahmic blocks: decompose
// excluded nukta letters, then compose multi-part vowel signs. Matches NFC on
// these blocks; everything else passes through untouched.
inline std::u32string canonicalize_brahmic(const std::u32string& in) {
    std::u32string decomposed;
    decomposed.reserve(in.size());
    for (char32_t cp : in) {
        char32_t base, nukta;
        if (nukta_decomposition(cp, base, nukta)) {
            decomposed.push_back(base);
            decomposed.push_back(nukta);
        } else {
            decomposed.push_back(cp);
        }
    }
    std::u32string out;
    out.reserve(decomposed.size());
    for (char32_t cp : decomposed) {
        if (!out.empty()) {
            char32_t comp = compose_pair(out.back(), cp);
            if (comp != 0) {
                out.back() = comp;
                continue;
            }
        }
        out.push_back(cp);
    }
    return out;
}

struct NormalizeOptions {
    bool collapse_whitespace = true;
    bool strip_controls = true;
    // Keep precomposed nukta letters decomposed (NFC does the same; the flag
    // exists so the raw codepoints can be preserved for diagnostics).
    bool nukta_decompose = true;
};

// Deterministic, idempotent cleanup: canonical normalization, control
// removal (newline/tab survive), whitespace run collapse.
inline std::string normalize(std::string_view text,
                             const NormalizeOptions& opts = {}) {
    std::u32string cps = to_codepoints(text);
    if (opts.nukta_decompose) {
        cps = canonicalize_brahmic(cps);
    } else {
        std::u32string composed;
        composed.reserve(cps.size());
        for (char32_t cp : cps) {
            if (!composed.empty()) {
                char32_t comp = compose_pair(composed.back(), cp);
                if (comp != 0) {
                    composed.back() = comp;
                    continue;
                }
            }
            composed.push_back(cp);
        }
        cps = std::move(composed);
    }

    std::u32string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        if (opts.strip_controls && (cp < 0x20 || cp == 0x7F) && cp != U'\n' &&
            cp != U'\t') {
            continue;
        }
        if (opts.collapse_whitespace && (cp == U' ' || cp == U'\t')) {
            if (!out.empty() && out.back() == U' ') continue;
            out.push_back(U' ');
            continue;
        }
        out.push_back(cp);
    }
    return from_codepoints(out);
}

}  // namespace indictk
