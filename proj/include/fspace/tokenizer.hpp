#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fspace {

struct Document;

struct TokenizerConfig {
    std::unordered_set<std::string> stopwords;
    std::size_t min_term_length = 1;
    bool fold_case = true;
    // Multiword terms matched as single units, e.g. "gravitational lens".
    // Each entry has at least two whitespace-separated words.
    std::vector<std::string> phrases;
};

// Splits text into terms: words are maximal runs of alphanumerics with
// interior hyphens kept ("x-ray" stays one word), folded to lowercase.
// Listed phrases are matched greedily left-to-right, longest first, and
// consume their words before any single-word emission; the words of a
// matched phrase are exempt from the stopword and length filters.
// Deterministic: identical (text, config) yields identical sequences.
std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config);

// Title terms followed by body terms. Every consumer of document text
// (vocabulary counting, co-occurrence, embedding, word matching) goes
// through this one function so the streams always agree.
std::vector<std::string> document_terms(const Document& doc, const TokenizerConfig& config);

// Plain-text list, one entry per line; '#' starts a comment; entries are
// trimmed and case-folded with the same rule the tokenizer uses.
std::vector<std::string> read_word_list(std::istream& in);
std::vector<std::string> read_word_list_file(const std::string& path);

// Validates that every entry has >= 2 words; returns canonical forms
// (folded, single-spaced).
std::vector<std::string> canonical_phrases(const std::vector<std::string>& raw);

}  // namespace fspace
