#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fspace/tokenizer.hpp"

namespace fspace {

class Corpus;

// Term table with dense indices 0..T-1 (terms sorted lexicographically, so
// indices are stable across runs), corpus-wide occurrence counts, document
// frequencies, and the phrase list in force when the terms were produced.
// Immutable once built.
class Vocabulary {
public:
    Vocabulary() = default;
    // Parallel vectors, terms sorted ascending. Validates df <= total.
    Vocabulary(std::vector<std::string> terms, std::vector<std::uint64_t> total_counts,
               std::vector<std::uint64_t> doc_freqs, std::vector<std::string> phrases);

    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    std::optional<std::uint32_t> find(const std::string& term) const;
    const std::string& term(std::uint32_t index) const { return terms_[index]; }
    std::uint64_t total_count(std::uint32_t index) const { return total_counts_[index]; }
    std::uint64_t doc_freq(std::uint32_t index) const { return doc_freqs_[index]; }

    const std::vector<std::string>& terms() const { return terms_; }
    const std::vector<std::uint64_t>& total_counts() const { return total_counts_; }
    const std::vector<std::uint64_t>& doc_freqs() const { return doc_freqs_; }
    const std::vector<std::string>& phrases() const { return phrases_; }

private:
    std::vector<std::string> terms_;
    std::vector<std::uint64_t> total_counts_;
    std::vector<std::uint64_t> doc_freqs_;
    std::vector<std::string> phrases_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

// Counts terms over title+body of every document and keeps those whose
// corpus-wide occurrence count reaches min_total_count.
Vocabulary build_vocabulary(const Corpus& corpus, const TokenizerConfig& config,
                            std::uint64_t min_total_count = 1);

}  // namespace fspace
