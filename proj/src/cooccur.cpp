#include "fspace/cooccur.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fspace/corpus.hpp"
#include "fspace/error.hpp"
#include "fspace/vocabulary.hpp"

namespace fspace {

CooccurrenceCounts::CooccurrenceCounts(std::size_t term_count, std::vector<std::string> labels)
    : term_count_(term_count),
      labels_(std::move(labels)),
      cells_(term_count * labels_.size(), 0),
      term_marginals_(term_count, 0),
      class_marginals_(labels_.size(), 0) {}

void CooccurrenceCounts::add(std::uint32_t t, std::uint32_t c, std::uint64_t occurrences) {
    cells_[static_cast<std::size_t>(t) * labels_.size() + c] += occurrences;
    term_marginals_[t] += occurrences;
    class_marginals_[c] += occurrences;
    total_ += occurrences;
}

CooccurrenceCounts count_cooccurrences(const Corpus& corpus, const Vocabulary& vocab,
                                       const TokenizerConfig& config) {
    std::set<std::string> label_set;
    for (const Document& doc : corpus)
        label_set.insert(doc.labels.begin(), doc.labels.end());
    std::vector<std::string> labels(label_set.begin(), label_set.end());

    std::unordered_map<std::string, std::uint32_t> label_index;
    for (std::uint32_t c = 0; c < labels.size(); ++c) label_index.emplace(labels[c], c);

    CooccurrenceCounts counts(vocab.size(), std::move(labels));

    std::unordered_map<std::uint32_t, std::uint64_t> doc_counts;
    for (const Document& doc : corpus) {
        if (doc.labels.empty()) continue;
        doc_counts.clear();
        for (const std::string& term : document_terms(doc, config)) {
            if (auto t = vocab.find(term)) doc_counts[*t] += 1;
        }
        for (const std::string& label : doc.labels) {
            std::uint32_t c = label_index.at(label);
            for (const auto& [t, occurrences] : doc_counts) counts.add(t, c, occurrences);
        }
    }
    return counts;
}

double expected_count(const CooccurrenceCounts& counts, std::uint32_t t, std::uint32_t c) {
    if (counts.total() == 0) throw UndefinedStatisticsError();
    return static_cast<double>(counts.term_marginal(t)) *
           static_cast<double>(counts.class_marginal(c)) /
           static_cast<double>(counts.total());
}

double corelevancy_score(std::uint64_t n, double expected) {
    if (n < 2) return 0.0;
    // n >= 2 forces both marginals >= 2, so expected > 0 here.
    double residual = (static_cast<double>(n) - expected) / std::sqrt(expected);
    return residual > 0.0 ? residual : 0.0;
}

CoRelevancyMatrix corelevancy(const CooccurrenceCounts& counts) {
    if (counts.total() == 0) throw UndefinedStatisticsError();

    CoRelevancyMatrix out;
    out.scores.rows = counts.term_count();
    out.scores.cols = counts.class_count();
    out.labels = counts.labels();
    for (std::uint32_t t = 0; t < counts.term_count(); ++t) {
        if (counts.term_marginal(t) < out.provenance.min_count) continue;
        for (std::uint32_t c = 0; c < counts.class_count(); ++c) {
            std::uint64_t n = counts.count(t, c);
            if (n < out.provenance.min_count) continue;
            double score = corelevancy_score(n, expected_count(counts, t, c));
            if (score > 0.0) out.scores.entries.push_back({t, c, score});
        }
    }
    return out;
}

}  // namespace fspace
