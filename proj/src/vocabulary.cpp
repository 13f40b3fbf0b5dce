#include "fspace/vocabulary.hpp"

#include <algorithm>
#include <map>

#include "fspace/corpus.hpp"
#include "fspace/error.hpp"

namespace fspace {

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::uint64_t> total_counts,
                       std::vector<std::uint64_t> doc_freqs, std::vector<std::string> phrases)
    : terms_(std::move(terms)),
      total_counts_(std::move(total_counts)),
      doc_freqs_(std::move(doc_freqs)),
      phrases_(std::move(phrases)) {
    if (terms_.size() != total_counts_.size() || terms_.size() != doc_freqs_.size())
        throw InvalidArgumentError("vocabulary vectors have mismatched lengths");
    if (!std::is_sorted(terms_.begin(), terms_.end()))
        throw InvalidArgumentError("vocabulary terms must be sorted");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (doc_freqs_[i] > total_counts_[i])
            throw InvariantViolationError("doc frequency exceeds total count for term \"" +
                                          terms_[i] + "\"");
    }
    index_.reserve(terms_.size());
    for (std::uint32_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
}

std::optional<std::uint32_t> Vocabulary::find(const std::string& term) const {
    auto it = index_.find(term);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vocabulary build_vocabulary(const Corpus& corpus, const TokenizerConfig& config,
                            std::uint64_t min_total_count) {
    if (min_total_count < 1) throw InvalidArgumentError("min_total_count must be >= 1");

    // std::map keeps terms sorted, which fixes the dense index order.
    struct TermStats {
        std::uint64_t total = 0;
        std::uint64_t docs = 0;
    };
    std::map<std::string, TermStats> stats;
    std::vector<std::string> doc_distinct;
    for (const Document& doc : corpus) {
        doc_distinct.clear();
        for (std::string& term : document_terms(doc, config)) {
            stats[term].total += 1;
            doc_distinct.push_back(std::move(term));
        }
        std::sort(doc_distinct.begin(), doc_distinct.end());
        doc_distinct.erase(std::unique(doc_distinct.begin(), doc_distinct.end()),
                           doc_distinct.end());
        for (const std::string& term : doc_distinct) stats[term].docs += 1;
    }

    std::vector<std::string> terms;
    std::vector<std::uint64_t> totals;
    std::vector<std::uint64_t> dfs;
    for (auto& [term, s] : stats) {
        if (s.total < min_total_count) continue;
        terms.push_back(term);
        totals.push_back(s.total);
        dfs.push_back(s.docs);
    }
    return Vocabulary(std::move(terms), std::move(totals), std::move(dfs),
                      canonical_phrases(config.phrases));
}

}  // namespace fspace
