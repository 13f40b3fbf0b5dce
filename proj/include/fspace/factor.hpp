#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fspace/cooccur.hpp"
#include "fspace/matrix.hpp"
#include "fspace/vocabulary.hpp"

namespace fspace {

// The k-dimensional relevance space: one row per vocabulary term, scaled
// left singular vectors (U * diag(S)) of the co-relevancy matrix. Proximity
// of term vectors encodes nearness of meaning. Terms whose co-relevancy row
// is entirely zero keep the zero vector: they carry no relevance signal.
// Immutable once built.
class FactorSpace {
public:
    FactorSpace() = default;
    // Validates: singular values non-increasing and positive, k = columns
    // of term_vectors = singular value count, row count = vocabulary size.
    FactorSpace(Matrix term_vectors, std::vector<double> singular_values,
                std::shared_ptr<const Vocabulary> vocab);

    std::size_t k() const { return singular_values_.size(); }
    std::size_t term_count() const { return term_vectors_.rows(); }
    std::span<const double> term_vector(std::uint32_t t) const { return term_vectors_.row(t); }
    bool has_signal(std::uint32_t t) const;

    const Matrix& term_vectors() const { return term_vectors_; }
    const std::vector<double>& singular_values() const { return singular_values_; }
    const Vocabulary& vocabulary() const { return *vocab_; }
    std::shared_ptr<const Vocabulary> vocabulary_ptr() const { return vocab_; }

    // Content hash binding document indexes to the space that embedded them.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    Matrix term_vectors_;  // T x k
    std::vector<double> singular_values_;
    std::shared_ptr<const Vocabulary> vocab_;
    std::uint64_t fingerprint_ = 0;
};

// Reduces the gated co-relevancy matrix to at most k factors. Factors with
// singular value below 1e-10 of the largest are dropped as numerical noise,
// so the resulting k may be smaller than requested. Throws EmptySignalError
// when the matrix has no nonzero cells.
FactorSpace build_factor_space(const CoRelevancyMatrix& corelevancy,
                               std::shared_ptr<const Vocabulary> vocab, std::size_t k);

// When no dimensionality is requested: the space cannot exceed the class
// count, and 100 caps the cost.
std::size_t default_factor_count(std::size_t class_count);

struct TermNeighbor {
    std::uint32_t term;
    double cosine;

    bool operator==(const TermNeighbor&) const = default;
};

// The n terms whose vectors have the highest cosine to the given term's
// vector, excluding the term itself and terms with zero vectors. Ties break
// by term index ascending. Throws UnknownTermError / UnembeddableError.
std::vector<TermNeighbor> term_neighbors(const FactorSpace& space, const std::string& term,
                                         std::size_t n);

}  // namespace fspace
