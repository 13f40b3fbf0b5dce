#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fspace/matrix.hpp"
#include "fspace/tokenizer.hpp"

namespace fspace {

class Corpus;
class Vocabulary;

// Term-by-classification occurrence counts with marginals. n(t, c) is the
// total number of occurrences of term t inside documents carrying label c;
// a document with L labels contributes each occurrence to all L columns.
// Immutable once built.
class CooccurrenceCounts {
public:
    CooccurrenceCounts() = default;
    CooccurrenceCounts(std::size_t term_count, std::vector<std::string> labels);

    std::size_t term_count() const { return term_count_; }
    std::size_t class_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::uint64_t count(std::uint32_t t, std::uint32_t c) const {
        return cells_[static_cast<std::size_t>(t) * labels_.size() + c];
    }
    std::uint64_t term_marginal(std::uint32_t t) const { return term_marginals_[t]; }
    std::uint64_t class_marginal(std::uint32_t c) const { return class_marginals_[c]; }
    std::uint64_t total() const { return total_; }

    void add(std::uint32_t t, std::uint32_t c, std::uint64_t occurrences);

private:
    std::size_t term_count_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> cells_;
    std::vector<std::uint64_t> term_marginals_;
    std::vector<std::uint64_t> class_marginals_;
    std::uint64_t total_ = 0;
};

// Scoring provenance recorded alongside the matrix so alternative scoring
// functions can be added later without a format change.
struct CoRelevancyProvenance {
    std::string function = "clipped-standardized-residual";
    std::uint64_t min_count = 2;

    bool operator==(const CoRelevancyProvenance&) const = default;
};

// Statistically gated association scores between terms and classifications.
// Every entry is >= 0, and a cell whose observed count is below
// provenance.min_count is exactly zero.
struct CoRelevancyMatrix {
    SparseMatrix scores;               // term_count x class_count
    std::vector<std::string> labels;   // column c -> classification name
    CoRelevancyProvenance provenance;

    bool operator==(const CoRelevancyMatrix&) const = default;
};

// Requires the vocabulary to have been built from the same corpus with the
// same config. Unlabeled documents contribute nothing. Classes are the
// sorted set of labels appearing in the corpus.
CooccurrenceCounts count_cooccurrences(const Corpus& corpus, const Vocabulary& vocab,
                                       const TokenizerConfig& config);

// Expectation of cell (t, c) were terms distributed at random with respect
// to the classifications: n_t * n_c / N. Throws UndefinedStatisticsError
// when N = 0.
double expected_count(const CooccurrenceCounts& counts, std::uint32_t t, std::uint32_t c);

// The scoring function itself: max(0, (n - expected) / sqrt(expected)) for
// n >= 2, else 0. Exposed so the monotonicity of the residual can be
// checked independently of matrix assembly.
double corelevancy_score(std::uint64_t n, double expected);

// Builds the gated score matrix. The gate requires a raw co-occurrence
// count of at least two before a cell gets weight: random placement of an
// infrequent term yields expectation below one, yet counts are integers,
// so stray singletons are indistinguishable from noise and score zero.
CoRelevancyMatrix corelevancy(const CooccurrenceCounts& counts);

}  // namespace fspace
