#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "penmark/error.hpp"
#include "penmark/unicode.hpp"
#include "penmark/util.hpp"

namespace penmark {

// One corpus text instance. label_a: 0 = human, 1 = AI. label_b: class name.
struct Document {
    std::size_t index = 0;
    std::string text;
    std::optional<int> label_a;
    std::optional<std::string> label_b;
};

enum class TokenKind { Word, Number, Punct, Symbol };

struct Token {
    std::string surface;   // exact source bytes
    TokenKind kind;
    size_t begin = 0;      // byte offsets, half-open
    size_t end = 0;

    std::string lower() const { return uni::lower_utf8(surface); }
};

struct TokenStream {
    std::vector<Token> tokens;

    size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
    const Token& operator[](size_t i) const { return tokens[i]; }
    auto begin() const { return tokens.begin(); }
    auto end() const { return tokens.end(); }

    size_t word_count() const {
        size_t n = 0;
        for (const auto& t : tokens)
            if (t.kind == TokenKind::Word) ++n;
        return n;
    }

    std::vector<std::string> lower_words() const {
        std::vector<std::string> out;
        for (const auto& t : tokens)
            if (t.kind == TokenKind::Word) out.push_back(t.lower());
        return out;
    }
};

struct SentenceSpan {
    size_t begin = 0;  // byte offsets, half-open
    size_t end = 0;
};

struct SentenceList {
    std::vector<SentenceSpan> spans;

    size_t size() const { return spans.size(); }
    bool empty() const { return spans.empty(); }
    const SentenceSpan& operator[](size_t i) const { return spans[i]; }
    auto begin() const { return spans.begin(); }
    auto end() const { return spans.end(); }
};

namespace detail {

inline bool is_word_apostrophe(char32_t c) { return c == '\'' || c == 0x2019; }

}  // namespace detail

// Words are maximal runs of letters with interior apostrophes ("don't" is one
// token; a standalone apostrophe is punctuation). Digit runs are number
// tokens, every punctuation mark is its own token, anything else is a symbol.
inline TokenStream tokenize(std::string_view text) {
    TokenStream ts;
    auto sc = uni::decode(text);
    size_t i = 0;
    const size_t n = sc.size();
    auto slice = [&](size_t from, size_t to) {
        return std::string(text.substr(sc[from].begin, sc[to - 1].end - sc[from].begin));
    };
    while (i < n) {
        char32_t c = sc[i].cp;
        if (uni::is_space(c)) {
            ++i;
            continue;
        }
        if (uni::is_alpha(c)) {
            size_t start = i;
            ++i;
            while (i < n) {
                if (uni::is_alpha(sc[i].cp)) {
                    ++i;
                } else if (detail::is_word_apostrophe(sc[i].cp) && i + 1 < n && uni::is_alpha(sc[i + 1].cp)) {
                    i += 2;
                } else {
                    break;
                }
            }
            ts.tokens.push_back({slice(start, i), TokenKind::Word, sc[start].begin, sc[i - 1].end});
            continue;
        }
        if (uni::is_digit(c)) {
            size_t start = i;
            ++i;
            while (i < n && uni::is_digit(sc[i].cp)) ++i;
            ts.tokens.push_back({slice(start, i), TokenKind::Number, sc[start].begin, sc[i - 1].end});
            continue;
        }
        TokenKind kind = uni::is_punct(c) ? TokenKind::Punct : TokenKind::Symbol;
        ts.tokens.push_back({slice(i, i + 1), kind, sc[i].begin, sc[i].end});
        ++i;
    }
    return ts;
}

// Sentence-terminator allowlist: abbreviations whose trailing '.' never ends
// a sentence. Entries are stored lowercase, dot included.
class AbbreviationList {
public:
    static const AbbreviationList& defaults() {
        static const AbbreviationList inst{default_entries()};
        return inst;
    }

    static AbbreviationList from_file(const std::string& path) {
        return AbbreviationList{parse(read_file(path))};
    }

    static AbbreviationList from_string(std::string_view content) {
        return AbbreviationList{parse(content)};
    }

    bool contains(std::string_view chunk) const {
        return entries_.count(to_lower_ascii(chunk)) > 0;
    }

    const std::unordered_set<std::string>& entries() const { return entries_; }

    static std::vector<std::string> default_entries_vec() { return default_entries_list(); }

private:
    explicit AbbreviationList(std::unordered_set<std::string> e) : entries_(std::move(e)) {}

    static std::unordered_set<std::string> parse(std::string_view content) {
        std::unordered_set<std::string> out;
        size_t pos = 0;
        while (pos <= content.size()) {
            size_t nl = content.find('\n', pos);
            std::string_view line = content.substr(pos, nl == std::string_view::npos ? content.size() - pos : nl - pos);
            std::string t = trim(line);
            if (!t.empty() && t[0] != '#') out.insert(to_lower_ascii(t));
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        return out;
    }

    static std::vector<std::string> default_entries_list() {
        return {
            "mr.",  "mrs.",  "ms.",   "dr.",   "prof.", "sr.",   "jr.",  "st.",   "rev.",  "gen.",
            "rep.", "sen.",  "gov.",  "lt.",   "maj.",  "capt.", "col.", "sgt.",  "hon.",  "vs.",
            "etc.", "e.g.",  "i.e.",  "cf.",   "al.",   "inc.",  "ltd.", "co.",   "corp.", "ave.",
            "blvd.", "rd.",  "u.s.",  "u.k.",  "jan.",  "feb.",  "mar.", "apr.",  "aug.",  "sept.",
            "oct.", "nov.",  "dec.",
        };
    }

    static std::unordered_set<std::string> default_entries() {
        auto v = default_entries_list();
        return {v.begin(), v.end()};
    }

    std::unordered_set<std::string> entries_;
};

// Splits on '.', '!' or '?' runs followed by whitespace or end of text. A '.'
// preceded by an allowlisted abbreviation does not split. Segments without a
// word token never form a sentence of their own; they are absorbed forward.
inline SentenceList split_sentences(std::string_view text,
                                    const AbbreviationList& abbrev = AbbreviationList::defaults()) {
    SentenceList out;
    auto sc = uni::decode(text);
    const size_t n = sc.size();

    auto is_term = [&](size_t i) {
        char32_t c = sc[i].cp;
        return c == '.' || c == '!' || c == '?';
    };

    size_t i = 0;
    // sentence start in scalar index; npos = not started
    size_t start = std::string_view::npos;
    bool has_word = false;
    size_t last_nonspace_end = 0;  // byte offset one past the last non-space scalar

    auto flush = [&](size_t end_byte) {
        if (start != std::string_view::npos && has_word) {
            out.spans.push_back({sc[start].begin, end_byte});
            start = std::string_view::npos;
            has_word = false;
        }
    };

    while (i < n) {
        char32_t c = sc[i].cp;
        if (uni::is_space(c)) {
            ++i;
            continue;
        }
        if (start == std::string_view::npos) start = i;
        if (uni::is_alpha(c)) has_word = true;

        if (is_term(i)) {
            size_t run_begin = i;
            size_t run_end = i;
            bool only_dots = true;
            while (run_end < n && is_term(run_end)) {
                if (sc[run_end].cp != '.') only_dots = false;
                ++run_end;
            }
            bool followed_ok = run_end >= n || uni::is_space(sc[run_end].cp);
            bool abbreviated = false;
            if (followed_ok && only_dots && run_end - run_begin == 1) {
                // whitespace-delimited chunk ending at this '.'
                size_t cb = run_begin;
                while (cb > 0 && !uni::is_space(sc[cb - 1].cp)) --cb;
                std::string chunk(text.substr(sc[cb].begin, sc[run_begin].end - sc[cb].begin));
                abbreviated = abbrev.contains(chunk);
            }
            if (followed_ok && !abbreviated) {
                last_nonspace_end = sc[run_end - 1].end;
                flush(last_nonspace_end);
                i = run_end;
                continue;
            }
            i = run_end;
            last_nonspace_end = sc[run_end - 1].end;
            continue;
        }
        last_nonspace_end = sc[i].end;
        ++i;
    }
    flush(last_nonspace_end);
    return out;
}

// Maximal vowel-group count (a e i o u y, accent-folded) minus a terminal
// silent 'e' that does not close an "le" ending. Never less than 1.
inline int count_syllables(std::string_view word) {
    auto sc = uni::scalars(word);
    std::vector<char32_t> low;
    low.reserve(sc.size());
    for (char32_t c : sc) low.push_back(uni::to_lower(c));

    auto is_vowel = [](char32_t c) {
        switch (c) {
            case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
                return true;
            default:
                break;
        }
        // Latin-1 accented vowels
        return (c >= 0x00E0 && c <= 0x00E6) || (c >= 0x00E8 && c <= 0x00EF) ||
               (c >= 0x00F2 && c <= 0x00F6) || (c >= 0x00F9 && c <= 0x00FC) || c == 0x00FD || c == 0x00FF;
    };

    int groups = 0;
    bool in_group = false;
    for (char32_t c : low) {
        if (is_vowel(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    const size_t m = low.size();
    if (m >= 2 && low[m - 1] == 'e' && !is_vowel(low[m - 2])) {
        bool ends_le = low[m - 2] == 'l';
        if (!ends_le && groups > 1) --groups;
    }
    return groups < 1 ? 1 : groups;
}

}  // namespace penmark
