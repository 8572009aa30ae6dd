#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "penmark/error.hpp"
#include "penmark/text.hpp"
#include "penmark/util.hpp"

namespace penmark {

// A category word list. Patterns are lowercase; a trailing '*' matches any
// suffix (LIWC dictionary convention).
class Lexicon {
public:
    Lexicon() = default;
    Lexicon(std::string name, const std::vector<std::string>& patterns) : name_(std::move(name)) {
        for (const auto& p : patterns) add(p);
    }

    const std::string& name() const { return name_; }

    // Keeps first-occurrence order for hashing; duplicates are dropped.
    bool add(const std::string& pattern) {
        if (pattern.ends_with('*')) {
            std::string stem = pattern.substr(0, pattern.size() - 1);
            if (stems_.insert(stem).second) {
                ordered_.push_back(pattern);
                return true;
            }
            return false;
        }
        if (exact_.insert(pattern).second) {
            ordered_.push_back(pattern);
            return true;
        }
        return false;
    }

    bool matches(std::string_view lower_word) const {
        if (exact_.count(std::string(lower_word))) return true;
        if (stems_.empty()) return false;
        std::string prefix;
        prefix.reserve(lower_word.size());
        // check every prefix of the word against the stem set, shortest first
        for (size_t k = 0; k <= lower_word.size(); ++k) {
            if (stems_.count(prefix)) return true;
            if (k < lower_word.size()) prefix.push_back(lower_word[k]);
        }
        return false;
    }

    size_t size() const { return ordered_.size(); }
    const std::vector<std::string>& patterns() const { return ordered_; }

private:
    std::string name_;
    std::unordered_set<std::string> exact_;
    std::unordered_set<std::string> stems_;  // '*' removed; "" matches everything
    std::vector<std::string> ordered_;
};

struct MatchResult {
    size_t count = 0;
    double rate = 0.0;
};

// Count of word tokens matching the lexicon, and that count over the word
// total. Matching is case-folded and order-independent.
inline MatchResult match_count(const Lexicon& lex, const TokenStream& tokens) {
    MatchResult r;
    size_t words = 0;
    for (const auto& t : tokens) {
        if (t.kind != TokenKind::Word) continue;
        ++words;
        if (lex.matches(t.lower())) ++r.count;
    }
    r.rate = words == 0 ? 0.0 : static_cast<double>(r.count) / static_cast<double>(words);
    return r;
}

// Ordered collection of lexicons; order comes from the manifest file and is
// part of the feature contract.
class LexiconSet {
public:
    void add(Lexicon lex) {
        index_.emplace(lex.name(), lexicons_.size());
        lexicons_.push_back(std::move(lex));
    }

    const Lexicon* find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        return it == index_.end() ? nullptr : &lexicons_[it->second];
    }

    const std::vector<Lexicon>& lexicons() const { return lexicons_; }
    size_t size() const { return lexicons_.size(); }
    const std::string& manifest_hash() const { return manifest_hash_; }
    void set_manifest_hash(std::string h) { manifest_hash_ = std::move(h); }

private:
    std::vector<Lexicon> lexicons_;
    std::unordered_map<std::string, size_t> index_;
    std::string manifest_hash_;
};

namespace detail {

struct LexiconSource {
    std::string name;
    std::string content;  // category file body
    std::string origin;   // path or "<builtin>"; for error messages
};

inline std::vector<std::string> parse_patterns(const LexiconSource& src) {
    std::vector<std::string> out;
    size_t pos = 0;
    int line_no = 0;
    const std::string& content = src.content;
    while (pos <= content.size()) {
        ++line_no;
        size_t nl = content.find('\n', pos);
        std::string_view line(content.data() + pos, (nl == std::string::npos ? content.size() : nl) - pos);
        std::string t = trim(line);
        if (!t.empty() && t[0] != '#') {
            std::string p = uni::lower_utf8(t);
            size_t star = p.find('*');
            if (star != std::string::npos && star != p.size() - 1)
                throw DataError(src.origin + ":" + std::to_string(line_no) + ": '*' allowed only at end of pattern: " + p);
            if (p == "*")
                throw DataError(src.origin + ":" + std::to_string(line_no) + ": empty stem pattern");
            out.push_back(p);
        }
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return out;
}

// Shared by the file loader and the built-in starter set.
inline LexiconSet build_lexicon_set(const std::vector<LexiconSource>& sources) {
    LexiconSet set;
    std::string hash_input;
    for (const auto& src : sources) {
        auto patterns = parse_patterns(src);
        Lexicon lex(src.name, patterns);
        hash_input += src.name;
        hash_input += '\x1e';
        for (const auto& p : lex.patterns()) {
            hash_input += p;
            hash_input += '\n';
        }
        hash_input += '\x1f';
        set.add(std::move(lex));
    }
    set.set_manifest_hash(digest_hex(hash_input));
    return set;
}

}  // namespace detail

// Manifest format: one `category_name<TAB>relative/path.txt` per line, '#'
// comments. Category paths resolve relative to the manifest file.
inline LexiconSet load_lexicon_set(const std::string& manifest_path) {
    namespace fs = std::filesystem;
    std::string manifest = read_file(manifest_path);
    fs::path base = fs::path(manifest_path).parent_path();

    std::vector<detail::LexiconSource> sources;
    size_t pos = 0;
    int line_no = 0;
    while (pos <= manifest.size()) {
        ++line_no;
        size_t nl = manifest.find('\n', pos);
        std::string_view line(manifest.data() + pos, (nl == std::string::npos ? manifest.size() : nl) - pos);
        std::string t = trim(line);
        if (!t.empty() && t[0] != '#') {
            size_t tab = t.find('\t');
            if (tab == std::string::npos)
                throw DataError(manifest_path + ":" + std::to_string(line_no) +
                                ": expected `name<TAB>path`, got: " + t);
            std::string name = trim(t.substr(0, tab));
            std::string rel = trim(t.substr(tab + 1));
            if (name.empty() || rel.empty())
                throw DataError(manifest_path + ":" + std::to_string(line_no) + ": empty name or path");
            fs::path file = base / rel;
            if (!fs::exists(file))
                throw DataError("lexicon file missing: " + file.string() + " (listed at " + manifest_path + ":" +
                                std::to_string(line_no) + ")");
            sources.push_back({name, read_file(file.string()), file.string()});
        }
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return detail::build_lexicon_set(sources);
}

}  // namespace penmark
