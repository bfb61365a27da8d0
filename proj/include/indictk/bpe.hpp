#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "indictk/utf8.hpp"

namespace indictk {

inline constexpr const char* kUnkPiece = "[UNK]";

struct SubwordVocab {
    std::string continuation_marker = "##";
    std::vector<std::string> pieces;  // dense ids = index
    std::unordered_map<std::string, std::uint32_t> piece_ids;

    void add(const std::string& piece) {
        if (piece_ids.emplace(piece, pieces.size()).second)
            pieces.push_back(piece);
    }
    bool contains(const std::string& piece) const {
        return piece_ids.count(piece) != 0;
    }
    std::size_t size() const { return pieces.size(); }
};

struct TokenizedWord {
    std::string word;
    std::vector<std::string> pieces;
    bool has_unk = false;
};

namespace detail {

inline std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    std::string cur;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char32_t cp = decode_utf8(text, pos);
        if (cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r') {
            if (!cur.empty()) words.push_back(std::move(cur));
            cur.clear();
        } else {
            append_utf8(cur, cp);
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    return words;
}

// Word as a sequence of pieces: first piece bare, the rest marker-prefixed.
inline std::vector<std::string> word_to_char_pieces(const std::string& word,
                                                    const std::string& marker) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    bool first = true;
    while (pos < word.size()) {
        std::string piece = first ? "" : marker;
        append_utf8(piece, decode_utf8(word, pos));
        out.push_back(std::move(piece));
        first = false;
    }
    return out;
}

inline std::string strip_marker(const std::string& piece,
                                const std::string& marker) {
    if (piece.size() > marker.size() && piece.compare(0, marker.size(), marker) == 0)
        return piece.substr(marker.size());
    return piece;
}

}  // namespace detail

// Simplified BPE: merge the most frequent adjacent piece pair within words
// until the vocabulary reaches vocab_size or no pair occurs twice. Ties go
// to the lexicographically smallest (left, right) pair.
inline SubwordVocab train_bpe(const std::vector<std::string>& corpus_lines,
                              std::size_t vocab_size,
                              const std::string& marker = "##") {
    // word -> count, word as piece sequence
    std::map<std::vector<std::string>, std::uint64_t> words;
    std::unordered_set<std::string> alphabet_cps;
    for (const auto& line : corpus_lines) {
        for (const auto& w : detail::split_words(line)) {
            ++words[detail::word_to_char_pieces(w, marker)];
            std::size_t pos = 0;
            while (pos < w.size()) {
                std::string cp;
                append_utf8(cp, decode_utf8(w, pos));
                alphabet_cps.insert(cp);
            }
        }
    }
    if (vocab_size < alphabet_cps.size())
        throw std::invalid_argument(
            "vocab_size " + std::to_string(vocab_size) + " below distinct codepoint count " +
            std::to_string(alphabet_cps.size()));

    SubwordVocab vocab;
    vocab.continuation_marker = marker;
    vocab.add(kUnkPiece);
    // initial alphabet: bare and continuation form of every codepoint seen
    // in that position
    std::map<std::string, bool> alphabet;  // ordered for determinism
    for (const auto& [pieces, count] : words) {
        for (std::size_t i = 0; i < pieces.size(); ++i) alphabet[pieces[i]] = true;
    }
    for (const auto& [piece, _] : alphabet) vocab.add(piece);

    while (vocab.size() < vocab_size + 1) {  // +1 for the UNK piece
        std::map<std::pair<std::string, std::string>, std::uint64_t> pair_counts;
        for (const auto& [pieces, count] : words) {
            for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
                pair_counts[{pieces[i], pieces[i + 1]}] += count;
        }
        const std::pair<std::string, std::string>* best = nullptr;
        std::uint64_t best_count = 1;  // require frequency >= 2
        for (const auto& [pair, count] : pair_counts) {
            if (count > best_count) {
                best = &pair;
                best_count = count;
            }
        }
        if (!best) break;
        std::string merged =
            best->first + detail::strip_marker(best->second, marker);
        vocab.add(merged);

        std::map<std::vector<std::string>, std::uint64_t> next;
        for (const auto& [pieces, count] : words) {
            std::vector<std::string> out;
            out.reserve(pieces.size());
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                if (i + 1 < pieces.size() && pieces[i] == best->first &&
                    pieces[i + 1] == best->second) {
                    out.push_back(merged);
                    ++i;
                } else {
                    out.push_back(pieces[i]);
                }
            }
            next[std::move(out)] += count;
        }
        words = std::move(next);
    }
    return vocab;
}

// Greedy longest-match from the left; single codepoints are always pieces
// for trained vocabs, so unknown codepoints only arise on unseen data and
// yield the reserved UNK piece.
inline TokenizedWord tokenize_word(const std::string& word,
                                   const SubwordVocab& vocab) {
    if (word.empty()) throw std::invalid_argument("empty word");
    TokenizedWord tw;
    tw.word = word;
    std::size_t pos = 0;
    bool first = true;
    while (pos < word.size()) {
        std::size_t best_len = 0;
        std::string best_piece;
        // candidate boundaries are codepoint boundaries
        std::size_t scan = pos;
        while (scan < word.size()) {
            std::size_t next = scan;
            decode_utf8(word, next);
            scan = next;
            std::string candidate = word.substr(pos, scan - pos);
            if (!first) candidate = vocab.continuation_marker + candidate;
            if (vocab.contains(candidate)) {
                best_len = scan - pos;
                best_piece = std::move(candidate);
            }
        }
        if (best_len == 0) {
            // unknown codepoint: consume one and emit UNK
            std::size_t next = pos;
            decode_utf8(word, next);
            tw.pieces.push_back(kUnkPiece);
            tw.has_unk = true;
            pos = next;
        } else {
            tw.pieces.push_back(std::move(best_piece));
            pos += best_len;
        }
        first = false;
    }
    return tw;
}

struct TokenizerMetrics {
    double fertility = 0.0;
    double unbroken_ratio = 0.0;
    std::uint64_t words = 0;
    std::uint64_t pieces = 0;
    std::uint64_t unk_words = 0;
};

// UNK-bearing words count as broken even when tokenized to a single piece.
inline TokenizerMetrics compute_metrics(
    const std::vector<std::string>& corpus_lines, const SubwordVocab& vocab) {
    TokenizerMetrics m;
    std::uint64_t unbroken = 0;
    for (const auto& line : corpus_lines) {
        for (const auto& w : detail::split_words(line)) {
            TokenizedWord tw = tokenize_word(w, vocab);
            ++m.words;
            m.pieces += tw.pieces.size();
            if (tw.has_unk) ++m.unk_words;
            if (tw.pieces.size() == 1 && !tw.has_unk) ++unbroken;
        }
    }
    if (m.words == 0) throw std::invalid_argument("empty corpus");
    m.fertility = static_cast<double>(m.pieces) / static_cast<double>(m.words);
    m.unbroken_ratio =
        static_cast<double>(unbroken) / static_cast<double>(m.words);
    return m;
}

inline double fertility(const std::vector<std::string>& corpus_lines,
                        const SubwordVocab& vocab) {
    return compute_metrics(corpus_lines, vocab).fertility;
}

inline double unbroken_ratio(const std::vector<std::string>& corpus_lines,
                             const SubwordVocab& vocab) {
    return compute_metrics(corpus_lines, vocab).unbroken_ratio;
}

// Cloze scoring: the probability of a multi-piece word is the product of its
// per-piece probabilities, one per subword piece.
inline double cloze_word_score(const std::vector<double>& piece_probabilities) {
    if (piece_probabilities.empty())
        throw std::invalid_argument("no piece probabilities");
    double prod = 1.0;
    for (double p : piece_probabilities) {
        if (!(p > 0.0 && p <= 1.0))
            throw std::invalid_argument("piece probability outside (0,1]");
        prod *= p;
    }
    return prod;
}

// One mask token per subword piece of the candidate word.
inline std::size_t required_mask_count(const std::string& word,
                                       const SubwordVocab& vocab) {
    return tokenize_word(word, vocab).pieces.size();
}

inline nlohmann::json to_json(const SubwordVocab& vocab) {
    return {{"continuation_marker", vocab.continuation_marker},
            {"pieces", vocab.pieces}};
}

inline SubwordVocab vocab_from_json(const nlohmann::json& j) {
    SubwordVocab v;
    v.continuation_marker = j.at("continuation_marker").get<std::string>();
    for (const auto& p : j.at("pieces")) v.add(p.get<std::string>());
    return v;
}

}  // namespace indictk
