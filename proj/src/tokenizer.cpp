#include "fspace/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "fspace/corpus.hpp"
#include "fspace/error.hpp"

namespace fspace {

namespace {

bool is_word_byte(unsigned char c) {
    // Bytes >= 0x80 (UTF-8 continuation/lead bytes) stay inside words so
    // non-ASCII text passes through unsplit; no folding is applied to them.
    return std::isalnum(c) || c >= 0x80;
}

char fold(char c, bool fold_case) {
    if (!fold_case) return c;
    unsigned char u = static_cast<unsigned char>(c);
    return u < 0x80 ? static_cast<char>(std::tolower(u)) : c;
}

// Raw word stream: case-folded, hyphens kept when joining two word bytes.
std::vector<std::string> split_words(std::string_view text, bool fold_case) {
    std::vector<std::string> words;
    std::string current;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_word_byte(c)) {
            current.push_back(fold(text[i], fold_case));
        } else if (c == '-' && !current.empty() && i + 1 < text.size() &&
                   is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
            current.push_back('-');
        } else if (!current.empty()) {
            words.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

std::vector<std::string> phrase_words(const std::string& phrase) {
    std::vector<std::string> out;
    std::istringstream ss(phrase);
    std::string w;
    while (ss >> w) out.push_back(w);
    return out;
}

}  // namespace

std::vector<std::string> canonical_phrases(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    out.reserve(raw.size());
    for (const std::string& entry : raw) {
        auto words = split_words(entry, true);
        if (words.size() < 2)
            throw InvalidArgumentError("phrase \"" + entry + "\" must contain at least 2 words");
        std::string canon;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i) canon.push_back(' ');
            canon += words[i];
        }
        out.push_back(std::move(canon));
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config) {
    if (config.min_term_length < 1)
        throw InvalidArgumentError("minimum term length must be >= 1");

    auto words = split_words(text, config.fold_case);

    // Phrase table: first word -> word sequences, longest first, so the
    // maximal match wins at each position.
    std::map<std::string, std::vector<std::vector<std::string>>> by_first;
    if (!config.phrases.empty()) {
        for (const std::string& phrase : canonical_phrases(config.phrases)) {
            auto pw = phrase_words(phrase);
            by_first[pw.front()].push_back(std::move(pw));
        }
        for (auto& [first, seqs] : by_first)
            std::stable_sort(seqs.begin(), seqs.end(),
                             [](const auto& a, const auto& b) { return a.size() > b.size(); });
    }

    std::vector<std::string> terms;
    terms.reserve(words.size());
    std::size_t i = 0;
    while (i < words.size()) {
        if (!by_first.empty()) {
            auto it = by_first.find(words[i]);
            if (it != by_first.end()) {
                const std::vector<std::string>* matched = nullptr;
                for (const auto& seq : it->second) {
                    if (i + seq.size() > words.size()) continue;
                    if (std::equal(seq.begin(), seq.end(), words.begin() + i)) {
                        matched = &seq;
                        break;
                    }
                }
                if (matched) {
                    std::string term;
                    for (std::size_t w = 0; w < matched->size(); ++w) {
                        if (w) term.push_back(' ');
                        term += (*matched)[w];
                    }
                    terms.push_back(std::move(term));
                    i += matched->size();
                    continue;
                }
            }
        }
        const std::string& w = words[i];
        if (w.size() >= config.min_term_length && !config.stopwords.contains(w))
            terms.push_back(w);
        ++i;
    }
    return terms;
}

std::vector<std::string> document_terms(const Document& doc, const TokenizerConfig& config) {
    auto terms = tokenize(doc.title, config);
    auto body = tokenize(doc.body, config);
    terms.insert(terms.end(), std::make_move_iterator(body.begin()),
                 std::make_move_iterator(body.end()));
    return terms;
}

std::vector<std::string> read_word_list(std::istream& in) {
    std::vector<std::string> entries;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r\n");
        std::string entry = line.substr(first, last - first + 1);
        for (char& c : entry) c = fold(c, true);
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<std::string> read_word_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open word list file: " + path);
    return read_word_list(in);
}

}  // namespace fspace
