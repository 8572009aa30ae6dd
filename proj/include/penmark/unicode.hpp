#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace penmark {
namespace uni {

// Scalar value plus the half-open byte span it occupies in the source.
struct Scalar {
    char32_t cp;
    size_t begin;
    size_t end;
};

// Decodes UTF-8. Invalid sequences decode byte-by-byte to U+FFFD so that
// segmentation stays deterministic on arbitrary input.
inline std::vector<Scalar> decode(std::string_view s) {
    std::vector<Scalar> out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        unsigned char b0 = static_cast<unsigned char>(s[i]);
        char32_t cp = 0xFFFD;
        size_t len = 1;
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 >> 5) == 0x6 && i + 1 < s.size() && (static_cast<unsigned char>(s[i + 1]) >> 6) == 0x2) {
            cp = static_cast<char32_t>(b0 & 0x1F) << 6 | (static_cast<unsigned char>(s[i + 1]) & 0x3F);
            if (cp >= 0x80) len = 2; else cp = 0xFFFD;
        } else if ((b0 >> 4) == 0xE && i + 2 < s.size() && (static_cast<unsigned char>(s[i + 1]) >> 6) == 0x2 &&
                   (static_cast<unsigned char>(s[i + 2]) >> 6) == 0x2) {
            cp = static_cast<char32_t>(b0 & 0x0F) << 12 | (static_cast<char32_t>(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6) |
                 (static_cast<unsigned char>(s[i + 2]) & 0x3F);
            if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) len = 3; else cp = 0xFFFD;
        } else if ((b0 >> 3) == 0x1E && i + 3 < s.size() && (static_cast<unsigned char>(s[i + 1]) >> 6) == 0x2 &&
                   (static_cast<unsigned char>(s[i + 2]) >> 6) == 0x2 && (static_cast<unsigned char>(s[i + 3]) >> 6) == 0x2) {
            cp = static_cast<char32_t>(b0 & 0x07) << 18 | (static_cast<char32_t>(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12) |
                 (static_cast<char32_t>(static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6) |
                 (static_cast<unsigned char>(s[i + 3]) & 0x3F);
            if (cp >= 0x10000 && cp <= 0x10FFFF) len = 4; else cp = 0xFFFD;
        }
        out.push_back({cp, i, i + len});
        i += len;
    }
    return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::vector<char32_t> scalars(std::string_view s) {
    std::vector<char32_t> out;
    auto dec = decode(s);
    out.reserve(dec.size());
    for (const auto& d : dec) out.push_back(d.cp);
    return out;
}

inline size_t scalar_count(std::string_view s) { return decode(s).size(); }

// Curated alphabetic ranges over the major scripts. Fixed table instead of
// the locale or the full UCD so classification is identical everywhere.
inline bool is_alpha(char32_t c) {
    if (c < 0x80) return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
    static constexpr std::pair<char32_t, char32_t> kRanges[] = {
        {0x00AA, 0x00AA}, {0x00B5, 0x00B5}, {0x00BA, 0x00BA}, {0x00C0, 0x00D6}, {0x00D8, 0x00F6},
        {0x00F8, 0x02C1}, {0x0370, 0x0374}, {0x0376, 0x0377}, {0x037A, 0x037D}, {0x037F, 0x037F},
        {0x0386, 0x0386}, {0x0388, 0x038A}, {0x038C, 0x038C}, {0x038E, 0x03A1}, {0x03A3, 0x03F5},
        {0x03F7, 0x0481}, {0x048A, 0x052F}, {0x0531, 0x0556}, {0x0561, 0x0587}, {0x05D0, 0x05EA},
        {0x0620, 0x064A}, {0x066E, 0x06D3}, {0x06FA, 0x06FC}, {0x0710, 0x072F}, {0x0780, 0x07A5},
        {0x0904, 0x0939}, {0x093D, 0x093D}, {0x0958, 0x0961}, {0x0985, 0x09B9}, {0x0A05, 0x0A39},
        {0x0A85, 0x0AB9}, {0x0B05, 0x0B39}, {0x0B85, 0x0BB9}, {0x0C05, 0x0C39}, {0x0C85, 0x0CB9},
        {0x0D05, 0x0D39}, {0x0E01, 0x0E30}, {0x0E40, 0x0E45}, {0x10A0, 0x10C5}, {0x10D0, 0x10FA},
        {0x1100, 0x11FF}, {0x1E00, 0x1F15}, {0x1F18, 0x1F1D}, {0x1F20, 0x1F45}, {0x1F48, 0x1FFC},
        {0x3041, 0x3096}, {0x309D, 0x309F}, {0x30A1, 0x30FA}, {0x30FC, 0x30FF}, {0x3400, 0x4DBF},
        {0x4E00, 0x9FFF}, {0xAC00, 0xD7A3}, {0xF900, 0xFAD9}, {0xFB00, 0xFB06},
    };
    for (const auto& r : kRanges) {
        if (c < r.first) return false;
        if (c <= r.second) return true;
    }
    return false;
}

inline bool is_digit(char32_t c) { return c >= '0' && c <= '9'; }

inline bool is_space(char32_t c) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') return true;
    return c == 0x00A0 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x3000;
}

inline bool is_punct(char32_t c) {
    if (c < 0x80) {
        return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
    }
    return c == 0x00A1 || c == 0x00A7 || c == 0x00AB || c == 0x00B6 || c == 0x00B7 || c == 0x00BB || c == 0x00BF ||
           (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) || c == 0x3001 || c == 0x3002 ||
           c == 0x300C || c == 0x300D;
}

inline char32_t to_lower(char32_t c) {
    if (c >= 'A' && c <= 'Z') return c + 0x20;
    if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 0x20;           // Latin-1
    if (c >= 0x0100 && c <= 0x0177 && (c % 2) == 0) return c + 1;             // Latin Extended-A pairs
    if (c >= 0x0391 && c <= 0x03A9 && c != 0x03A2) return c + 0x20;           // Greek
    if (c >= 0x0410 && c <= 0x042F) return c + 0x20;                          // Cyrillic
    if (c >= 0x0400 && c <= 0x040F) return c + 0x50;
    return c;
}

inline bool is_upper(char32_t c) { return is_alpha(c) && to_lower(c) != c; }
inline bool is_lower(char32_t c) { return is_alpha(c) && to_lower(c) == c; }

// Lowercase of an arbitrary UTF-8 string under the table above.
inline std::string lower_utf8(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const auto& d : decode(s)) append_utf8(out, to_lower(d.cp));
    return out;
}

}  // namespace uni
}  // namespace penmark
