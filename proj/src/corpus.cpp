#include "fspace/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "fspace/error.hpp"
#include "json.hpp"

namespace fspace {

namespace {

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

void Corpus::add(Document doc) {
    if (doc.id.empty()) throw InvalidArgumentError("document id must be non-empty");
    if (by_id_.contains(doc.id)) throw DuplicateIdError(doc.id);
    std::sort(doc.labels.begin(), doc.labels.end());
    doc.labels.erase(std::unique(doc.labels.begin(), doc.labels.end()), doc.labels.end());
    by_id_.emplace(doc.id, docs_.size());
    docs_.push_back(std::move(doc));
}

const Document* Corpus::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &docs_[it->second];
}

Corpus ingest_jsonl(std::istream& in) {
    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;

        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!rec.is_object()) throw ParseError(line_no, "record is not a JSON object");
        if (!rec.contains("id")) throw ParseError(line_no, "record is missing the \"id\" field");
        if (!rec["id"].is_string() || rec["id"].get<std::string>().empty())
            throw ParseError(line_no, "\"id\" must be a non-empty string");

        Document doc;
        doc.id = rec["id"].get<std::string>();
        if (rec.contains("title")) {
            if (!rec["title"].is_string()) throw ParseError(line_no, "\"title\" must be a string");
            doc.title = rec["title"].get<std::string>();
        }
        if (rec.contains("body")) {
            if (!rec["body"].is_string()) throw ParseError(line_no, "\"body\" must be a string");
            doc.body = rec["body"].get<std::string>();
        }
        if (rec.contains("labels")) {
            if (!rec["labels"].is_array())
                throw ParseError(line_no, "\"labels\" must be an array of strings");
            for (const auto& l : rec["labels"]) {
                if (!l.is_string())
                    throw ParseError(line_no, "\"labels\" must be an array of strings");
                doc.labels.push_back(l.get<std::string>());
            }
        }
        corpus.add(std::move(doc));
    }
    return corpus;
}

void write_jsonl(const Corpus& corpus, std::ostream& out) {
    for (const Document& doc : corpus) {
        nlohmann::json rec;
        rec["id"] = doc.id;
        rec["title"] = doc.title;
        rec["body"] = doc.body;
        rec["labels"] = doc.labels;
        out << rec.dump() << '\n';
    }
}

}  // namespace fspace
