#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace fspace {

// One bibliographic record: an opaque id, display title, abstract text and
// the classification labels (subject headings) assigned to it. Labels are
// kept sorted and unique. A document without labels still gets indexed for
// retrieval but contributes nothing to co-occurrence statistics.
struct Document {
    std::string id;
    std::string title;
    std::string body;
    std::vector<std::string> labels;

    bool operator==(const Document&) const = default;
};

// Immutable once built; safe for concurrent readers.
class Corpus {
public:
    void add(Document doc);  // throws DuplicateIdError

    std::size_t size() const { return docs_.size(); }
    bool empty() const { return docs_.empty(); }
    const Document& operator[](std::size_t i) const { return docs_[i]; }

    // nullptr when the id is unknown.
    const Document* find(const std::string& id) const;

    std::vector<Document>::const_iterator begin() const { return docs_.begin(); }
    std::vector<Document>::const_iterator end() const { return docs_.end(); }

private:
    std::vector<Document> docs_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

// Reads newline-delimited records with fields id, title, body, labels.
// Input order is preserved. Whitespace-only lines are skipped. Malformed
// records raise ParseError with the 1-based line number; repeated ids raise
// DuplicateIdError. An empty stream yields an empty corpus.
Corpus ingest_jsonl(std::istream& in);

// Canonical record-per-line serialization; ingest_jsonl(write_jsonl(c)) == c.
void write_jsonl(const Corpus& corpus, std::ostream& out);

}  // namespace fspace
