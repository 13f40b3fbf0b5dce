#include "fspace/factor.hpp"

#include <algorithm>
#include <cmath>

#include "fspace/error.hpp"
#include "fspace/fingerprint.hpp"
#include "fspace/svd.hpp"

namespace fspace {

namespace {

constexpr double kFactorDropRatio = 1e-10;

std::uint64_t compute_fingerprint(const Matrix& vectors, const std::vector<double>& sigma) {
    Fingerprint fp;
    fp.update_u64(vectors.rows());
    fp.update_u64(vectors.cols());
    fp.update_doubles(sigma);
    fp.update_doubles(vectors.data());
    return fp.value();
}

}  // namespace

FactorSpace::FactorSpace(Matrix term_vectors, std::vector<double> singular_values,
                         std::shared_ptr<const Vocabulary> vocab)
    : term_vectors_(std::move(term_vectors)),
      singular_values_(std::move(singular_values)),
      vocab_(std::move(vocab)) {
    if (!vocab_) throw InvalidArgumentError("factor space requires a vocabulary");
    if (term_vectors_.rows() != vocab_->size())
        throw InvariantViolationError("term vector rows do not match vocabulary size");
    if (term_vectors_.cols() != singular_values_.size())
        throw InvariantViolationError("factor count does not match singular value count");
    for (std::size_t i = 0; i < singular_values_.size(); ++i) {
        if (singular_values_[i] <= 0.0)
            throw InvariantViolationError("singular values must be positive");
        if (i > 0 && singular_values_[i] > singular_values_[i - 1])
            throw InvariantViolationError("singular values must be non-increasing");
    }
    fingerprint_ = compute_fingerprint(term_vectors_, singular_values_);
}

bool FactorSpace::has_signal(std::uint32_t t) const {
    for (double x : term_vectors_.row(t))
        if (x != 0.0) return true;
    return false;
}

std::size_t default_factor_count(std::size_t class_count) {
    return std::min<std::size_t>(class_count, 100);
}

FactorSpace build_factor_space(const CoRelevancyMatrix& corelevancy,
                               std::shared_ptr<const Vocabulary> vocab, std::size_t k) {
    if (k < 1) throw InvalidArgumentError("k must be >= 1");
    if (corelevancy.scores.entries.empty()) throw EmptySignalError();
    if (!vocab || vocab->size() != corelevancy.scores.rows)
        throw InvalidArgumentError("co-relevancy rows do not match the vocabulary");

    std::size_t max_rank = std::min(corelevancy.scores.rows, corelevancy.scores.cols);
    std::size_t k_eff = std::min(k, max_rank);

    SvdResult svd = truncated_svd(corelevancy.scores.to_dense(), k_eff);

    // Trim noise factors relative to the leading singular value.
    std::size_t kept = 0;
    while (kept < svd.rank() &&
           svd.singular_values[kept] >= kFactorDropRatio * svd.singular_values[0])
        ++kept;

    Matrix vectors(corelevancy.scores.rows, kept);
    for (std::size_t t = 0; t < vectors.rows(); ++t)
        for (std::size_t f = 0; f < kept; ++f)
            vectors.at(t, f) = svd.u.at(t, f) * svd.singular_values[f];

    svd.singular_values.resize(kept);
    return FactorSpace(std::move(vectors), std::move(svd.singular_values), std::move(vocab));
}

std::vector<TermNeighbor> term_neighbors(const FactorSpace& space, const std::string& term,
                                         std::size_t n) {
    auto index = space.vocabulary().find(term);
    if (!index) throw UnknownTermError(term);
    if (!space.has_signal(*index))
        throw UnembeddableError("term \"" + term + "\" has a zero vector in the factor space");

    std::span<const double> query = space.term_vector(*index);
    std::vector<TermNeighbor> scored;
    for (std::uint32_t t = 0; t < space.term_count(); ++t) {
        if (t == *index || !space.has_signal(t)) continue;
        scored.push_back({t, cosine(query, space.term_vector(t))});
    }
    std::sort(scored.begin(), scored.end(), [](const TermNeighbor& a, const TermNeighbor& b) {
        if (a.cosine != b.cosine) return a.cosine > b.cosine;
        return a.term < b.term;
    });
    if (scored.size() > n) scored.resize(n);
    return scored;
}

}  // namespace fspace
