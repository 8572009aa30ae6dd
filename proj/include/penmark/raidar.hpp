#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "penmark/rewrite.hpp"
#include "penmark/text.hpp"
#include "penmark/unicode.hpp"

namespace penmark {

// Edit distance over Unicode scalar values, two-row dynamic programming.
inline size_t levenshtein(std::string_view a, std::string_view b) {
    auto sa = uni::scalars(a);
    auto sb = uni::scalars(b);
    if (sa.size() < sb.size()) std::swap(sa, sb);
    const size_t m = sa.size(), n = sb.size();
    if (n == 0) return m;
    std::vector<size_t> prev(n + 1), cur(n + 1);
    for (size_t j = 0; j <= n; ++j) prev[j] = j;
    for (size_t i = 1; i <= m; ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= n; ++j) {
            size_t sub = prev[j - 1] + (sa[i - 1] == sb[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

// 100 * (1 - d / max_len); two empty strings are perfectly similar.
inline double fuzzy_ratio(std::string_view a, std::string_view b) {
    size_t la = uni::scalar_count(a), lb = uni::scalar_count(b);
    size_t longest = std::max(la, lb);
    if (longest == 0) return 100.0;
    return 100.0 * (1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest));
}

// Jaccard similarity of the lowercase word-token sets.
inline double token_jaccard(std::string_view a, std::string_view b) {
    auto set_of = [](std::string_view s) {
        std::unordered_set<std::string> out;
        for (const auto& t : tokenize(s))
            if (t.kind == TokenKind::Word) out.insert(t.lower());
        return out;
    };
    auto wa = set_of(a), wb = set_of(b);
    if (wa.empty() && wb.empty()) return 1.0;
    size_t inter = 0;
    for (const auto& w : wa)
        if (wb.count(w)) ++inter;
    size_t uni_ = wa.size() + wb.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni_);
}

// Longest common subsequence of the lowercase word sequences, over the
// longer sequence length.
inline double lcs_ratio(std::string_view a, std::string_view b) {
    auto words_of = [](std::string_view s) {
        std::vector<std::string> out;
        for (const auto& t : tokenize(s))
            if (t.kind == TokenKind::Word) out.push_back(t.lower());
        return out;
    };
    auto wa = words_of(a), wb = words_of(b);
    const size_t m = wa.size(), n = wb.size();
    if (m == 0 && n == 0) return 1.0;
    if (m == 0 || n == 0) return 0.0;
    std::vector<size_t> prev(n + 1, 0), cur(n + 1, 0);
    for (size_t i = 1; i <= m; ++i) {
        for (size_t j = 1; j <= n; ++j) {
            cur[j] = wa[i - 1] == wb[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return static_cast<double>(prev[n]) / static_cast<double>(std::max(m, n));
}

inline constexpr int kRaidarDim = 30;

// Manifest order: per prompt (canonical order) fuzzy_ratio, token_jaccard,
// lcs_ratio, length_ratio; then the two original-length features.
inline const std::vector<std::string>& raidar_feature_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& p : rewrite_prompts()) {
            std::string base = "raidar_" + to_lower_ascii(p.name) + "_";
            out.push_back(base + "fuzzy_ratio");
            out.push_back(base + "token_jaccard");
            out.push_back(base + "lcs_ratio");
            out.push_back(base + "length_ratio");
        }
        out.push_back("raidar_original_char_len");
        out.push_back("raidar_original_word_count");
        return out;
    }();
    return names;
}

// The 30 rewrite-based features for one document.
inline std::vector<double> extract_raidar(const RewriteSet& rs) {
    std::vector<double> out;
    out.reserve(kRaidarDim);
    const double orig_chars = static_cast<double>(uni::scalar_count(rs.original));
    for (const auto& p : rewrite_prompts()) {
        const std::string& rw = rs.rewrite(p.id);
        out.push_back(fuzzy_ratio(rs.original, rw));
        out.push_back(token_jaccard(rs.original, rw));
        out.push_back(lcs_ratio(rs.original, rw));
        double rw_chars = static_cast<double>(uni::scalar_count(rw));
        out.push_back(rw_chars / std::max(1.0, orig_chars));
    }
    out.push_back(orig_chars);
    out.push_back(static_cast<double>(tokenize(rs.original).word_count()));
    return out;
}

}  // namespace penmark
