#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "penmark/error.hpp"
#include "penmark/lexicon.hpp"
#include "penmark/text.hpp"
#include "penmark/wordlists.hpp"

namespace penmark {

inline constexpr int kStyleDim = 35;
inline constexpr int kComplexityDim = 12;
inline constexpr int kPsychologyDim = 40;
inline constexpr int kNelaDim = kStyleDim + kComplexityDim + kPsychologyDim;

// The 36 LIWC-style psychological-process categories, manifest order.
inline const std::vector<std::string>& psychology_categories() {
    static const std::vector<std::string> cats = {
        "function", "pronoun", "ppron",  "i",        "we",      "you",    "shehe",   "they",
        "ipron",    "article", "prep",   "auxverb",  "adverb",  "conj",   "negate",  "verb",
        "adj",      "compare", "interrog", "number", "quant",   "affect", "posemo",  "negemo",
        "anx",      "anger",   "sad",    "social",   "family",  "friend", "cogproc", "insight",
        "cause",    "discrep", "tentat", "certain",
    };
    return cats;
}

inline const std::vector<std::string>& nela_feature_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out = {
            // style: per-mark punctuation rates
            "style_punct_period_rate", "style_punct_comma_rate", "style_punct_exclaim_rate",
            "style_punct_question_rate", "style_punct_semicolon_rate", "style_punct_colon_rate",
            "style_punct_apostrophe_rate", "style_punct_quote_rate", "style_punct_paren_rate",
            "style_punct_hyphen_rate",
            // style: counts and casing rates
            "style_quote_pair_count", "style_allcaps_word_rate", "style_capitalized_word_rate",
            "style_digit_token_rate", "style_stopword_rate", "style_negation_rate",
            // style: function-word classes
            "style_article_rate", "style_preposition_rate", "style_conjunction_rate",
            "style_pronoun_first_rate", "style_pronoun_second_rate", "style_pronoun_third_rate",
            "style_auxiliary_rate", "style_modal_rate", "style_interjection_rate",
            // style: sentence-level statistics
            "style_sentence_initial_word_len_mean", "style_exclaim_sentence_rate",
            "style_question_sentence_rate",
            // style: casing/shape statistics
            "style_lowercase_word_rate", "style_mixedcase_word_rate", "style_single_char_token_rate",
            "style_uppercase_char_rate", "style_punct_token_rate", "style_clauses_per_sentence_mean",
            "style_interpunct_run_max",
            // complexity
            "cx_type_token_ratio", "cx_words_per_sentence_mean", "cx_words_per_sentence_median",
            "cx_word_length_mean", "cx_syllables_per_word_mean", "cx_long_word_rate",
            "cx_flesch_reading_ease", "cx_flesch_kincaid_grade", "cx_gunning_fog", "cx_smog",
            "cx_lexical_density", "cx_hapax_rate",
        };
        for (const auto& c : psychology_categories()) out.push_back("psych_" + c + "_rate");
        out.push_back("sentiment_positive_rate");
        out.push_back("sentiment_negative_rate");
        out.push_back("sentiment_net");
        out.push_back("sentiment_magnitude");
        return out;
    }();
    return names;
}

namespace detail {

// Curly quotes and dashes fold onto their ASCII marks for counting.
inline char punct_class(const Token& t) {
    if (t.kind != TokenKind::Punct) return 0;
    auto sc = uni::scalars(t.surface);
    if (sc.size() != 1) return 0;
    char32_t c = sc[0];
    switch (c) {
        case '.': case ',': case '!': case '?': case ';': case ':': case '(': case '"': case '\'': case '-':
            return static_cast<char>(c);
        default: break;
    }
    if (c == 0x2018 || c == 0x2019) return '\'';
    if (c == 0x201C || c == 0x201D) return '"';
    if (c == 0x2010 || c == 0x2011 || c == 0x2013 || c == 0x2014) return '-';
    return 0;
}

struct CaseShape {
    bool has_alpha = false;
    bool all_upper = true;
    bool all_lower = true;
    bool capitalized = false;  // first alpha upper, rest lower
    size_t alpha_count = 0;
};

inline CaseShape case_shape(const Token& t) {
    CaseShape s;
    bool first = true;
    bool rest_lower = true;
    bool first_upper = false;
    for (char32_t c : uni::scalars(t.surface)) {
        if (!uni::is_alpha(c)) continue;
        s.has_alpha = true;
        ++s.alpha_count;
        bool up = uni::is_upper(c);
        bool low = uni::is_lower(c);
        if (!up) s.all_upper = false;
        if (!low) s.all_lower = false;
        if (first) {
            first_upper = up;
            first = false;
        } else if (!low) {
            rest_lower = false;
        }
    }
    s.capitalized = s.has_alpha && first_upper && rest_lower;
    return s;
}

}  // namespace detail

// 35 stylistic attributes: punctuation habits, casing, function-word usage
// and sentence shape.
inline std::vector<double> extract_style(const Document& doc,
                                         const AbbreviationList& abbrev = AbbreviationList::defaults()) {
    const TokenStream ts = tokenize(doc.text);
    const SentenceList sents = split_sentences(doc.text, abbrev);
    const double n_tokens = static_cast<double>(ts.size());
    const double n_words = static_cast<double>(ts.word_count());
    const double n_sents = static_cast<double>(sents.size());

    auto tok_rate = [&](double c) { return n_tokens == 0 ? 0.0 : c / n_tokens; };
    auto word_rate = [&](double c) { return n_words == 0 ? 0.0 : c / n_words; };
    auto sent_rate = [&](double c) { return n_sents == 0 ? 0.0 : c / n_sents; };

    // per-mark counts
    static constexpr std::array<char, 10> kMarks = {'.', ',', '!', '?', ';', ':', '\'', '"', '(', '-'};
    std::unordered_map<char, double> mark_count;
    double straight_quotes = 0, open_curly = 0, close_curly = 0;
    double punct_tokens = 0;
    for (const auto& t : ts) {
        if (t.kind == TokenKind::Punct) ++punct_tokens;
        char cls = detail::punct_class(t);
        if (cls) ++mark_count[cls];
        if (t.surface == "\"") ++straight_quotes;
        auto sc = uni::scalars(t.surface);
        if (sc.size() == 1 && sc[0] == 0x201C) ++open_curly;
        if (sc.size() == 1 && sc[0] == 0x201D) ++close_curly;
    }
    double quote_pairs = std::floor(straight_quotes / 2.0) + std::min(open_curly, close_curly);

    // word casing and class membership
    double allcaps = 0, capitalized = 0, lowercase = 0, mixedcase = 0;
    double stop = 0, neg = 0, art = 0, prep = 0, conj = 0, p1 = 0, p2 = 0, p3 = 0, aux = 0, modal = 0, interj = 0;
    double upper_chars = 0, alpha_chars = 0;
    double single_char_tokens = 0;
    for (const auto& t : ts) {
        if (uni::scalar_count(t.surface) == 1) ++single_char_tokens;
        if (t.kind != TokenKind::Word) continue;
        auto shape = detail::case_shape(t);
        if (shape.has_alpha) {
            if (shape.all_upper && shape.alpha_count >= 2) {
                ++allcaps;
            } else if (shape.capitalized && !shape.all_lower) {
                ++capitalized;
            } else if (shape.all_lower) {
                ++lowercase;
            } else if (!shape.all_upper) {
                ++mixedcase;
            }
        }
        for (char32_t c : uni::scalars(t.surface)) {
            if (uni::is_alpha(c)) {
                ++alpha_chars;
                if (uni::is_upper(c)) ++upper_chars;
            }
        }
        std::string low = t.lower();
        if (words::stopwords().count(low)) ++stop;
        if (words::negations().count(low)) ++neg;
        if (words::articles().count(low)) ++art;
        if (words::prepositions().count(low)) ++prep;
        if (words::conjunctions().count(low)) ++conj;
        if (words::pronouns_first().count(low)) ++p1;
        if (words::pronouns_second().count(low)) ++p2;
        if (words::pronouns_third().count(low)) ++p3;
        if (words::auxiliaries().count(low)) ++aux;
        if (words::modals().count(low)) ++modal;
        if (words::interjections().count(low)) ++interj;
    }

    // digit tokens
    double digit_tokens = 0;
    for (const auto& t : ts)
        if (t.kind == TokenKind::Number) ++digit_tokens;

    // sentence-level statistics
    double initial_len_sum = 0, initial_count = 0;
    double exclaim_sents = 0, question_sents = 0;
    double clause_sum = 0;
    for (const auto& sp : sents) {
        std::string_view span(doc.text.data() + sp.begin, sp.end - sp.begin);
        bool got_initial = false;
        double clauses = 1;
        bool saw_exclaim = false, saw_question = false;
        for (const auto& t : tokenize(span)) {
            if (!got_initial && t.kind == TokenKind::Word) {
                initial_len_sum += static_cast<double>(uni::scalar_count(t.surface));
                ++initial_count;
                got_initial = true;
            }
            if (t.kind == TokenKind::Punct) {
                char cls = detail::punct_class(t);
                if (cls == ',' || cls == ';' || cls == ':') ++clauses;
                if (cls == '!') saw_exclaim = true;
                if (cls == '?') saw_question = true;
            }
            if (t.kind == TokenKind::Word && words::coordinators().count(t.lower())) ++clauses;
        }
        clause_sum += clauses;
        if (saw_exclaim) ++exclaim_sents;
        if (saw_question) ++question_sents;
    }

    // longest run of non-punctuation tokens between punctuation tokens
    double max_run = 0, run = 0;
    for (const auto& t : ts) {
        if (t.kind == TokenKind::Punct) {
            max_run = std::max(max_run, run);
            run = 0;
        } else {
            ++run;
        }
    }
    max_run = std::max(max_run, run);

    return {
        tok_rate(mark_count['.']), tok_rate(mark_count[',']), tok_rate(mark_count['!']),
        tok_rate(mark_count['?']), tok_rate(mark_count[';']), tok_rate(mark_count[':']),
        tok_rate(mark_count['\'']), tok_rate(mark_count['"']), tok_rate(mark_count['(']),
        tok_rate(mark_count['-']),
        quote_pairs, word_rate(allcaps), word_rate(capitalized), tok_rate(digit_tokens),
        word_rate(stop), word_rate(neg),
        word_rate(art), word_rate(prep), word_rate(conj), word_rate(p1), word_rate(p2), word_rate(p3),
        word_rate(aux), word_rate(modal), word_rate(interj),
        initial_count == 0 ? 0.0 : initial_len_sum / initial_count,
        sent_rate(exclaim_sents), sent_rate(question_sents),
        word_rate(lowercase), word_rate(mixedcase), tok_rate(single_char_tokens),
        alpha_chars == 0 ? 0.0 : upper_chars / alpha_chars,
        tok_rate(punct_tokens),
        n_sents == 0 ? 0.0 : clause_sum / n_sents,
        max_run,
    };
}

// 12 complexity attributes: lexical diversity, sentence shape and the
// standard readability indices.
inline std::vector<double> extract_complexity(const Document& doc,
                                              const AbbreviationList& abbrev = AbbreviationList::defaults()) {
    const TokenStream ts = tokenize(doc.text);
    const SentenceList sents = split_sentences(doc.text, abbrev);

    std::vector<const Token*> word_toks;
    for (const auto& t : ts)
        if (t.kind == TokenKind::Word) word_toks.push_back(&t);
    const double n_words = static_cast<double>(word_toks.size());
    if (word_toks.empty()) throw DataError("complexity features require at least one word token");
    const double n_sents = std::max(1.0, static_cast<double>(sents.size()));

    std::unordered_map<std::string, size_t> type_count;
    double char_sum = 0, syllable_sum = 0, long_words = 0, complex_words = 0, non_stop = 0;
    for (const Token* t : word_toks) {
        std::string low = t->lower();
        ++type_count[low];
        double len = static_cast<double>(uni::scalar_count(t->surface));
        char_sum += len;
        int syl = count_syllables(t->surface);
        syllable_sum += syl;
        if (len >= 7) ++long_words;
        if (syl >= 3) ++complex_words;
        if (!words::stopwords().count(low)) ++non_stop;
    }
    double hapax = 0;
    for (const auto& kv : type_count)
        if (kv.second == 1) ++hapax;

    std::vector<double> per_sentence_words;
    for (const auto& sp : sents) {
        std::string_view span(doc.text.data() + sp.begin, sp.end - sp.begin);
        per_sentence_words.push_back(static_cast<double>(tokenize(span).word_count()));
    }
    if (per_sentence_words.empty()) per_sentence_words.push_back(n_words);
    std::sort(per_sentence_words.begin(), per_sentence_words.end());
    double median_wps;
    size_t mid = per_sentence_words.size() / 2;
    if (per_sentence_words.size() % 2 == 1)
        median_wps = per_sentence_words[mid];
    else
        median_wps = (per_sentence_words[mid - 1] + per_sentence_words[mid]) / 2.0;

    const double wps = n_words / n_sents;
    const double spw = syllable_sum / n_words;
    const double flesch = 206.835 - 1.015 * wps - 84.6 * spw;
    const double fk_grade = 0.39 * wps + 11.8 * spw - 15.59;
    const double fog = 0.4 * (wps + 100.0 * complex_words / n_words);
    const double smog = 1.0430 * std::sqrt(complex_words * 30.0 / n_sents) + 3.1291;

    return {
        static_cast<double>(type_count.size()) / n_words,
        wps,
        median_wps,
        char_sum / n_words,
        spw,
        long_words / n_words,
        flesch,
        fk_grade,
        fog,
        smog,
        non_stop / n_words,
        hapax / n_words,
    };
}

// 40 psychological attributes: 36 category rates plus the sentiment block.
// The LexiconSet must provide every category plus the two sentiment lists.
inline std::vector<double> extract_psychology(const Document& doc, const LexiconSet& lex) {
    const TokenStream ts = tokenize(doc.text);
    std::vector<double> out;
    out.reserve(kPsychologyDim);
    for (const auto& cat : psychology_categories()) {
        const Lexicon* l = lex.find(cat);
        if (!l) throw DataError("psychology lexicon manifest is missing category: " + cat);
        out.push_back(match_count(*l, ts).rate);
    }
    const Lexicon* pos = lex.find("sentiment_positive");
    const Lexicon* neg = lex.find("sentiment_negative");
    if (!pos) throw DataError("psychology lexicon manifest is missing category: sentiment_positive");
    if (!neg) throw DataError("psychology lexicon manifest is missing category: sentiment_negative");
    double p = match_count(*pos, ts).rate;
    double n = match_count(*neg, ts).rate;
    out.push_back(p);
    out.push_back(n);
    out.push_back(p - n);
    out.push_back(p + n);
    return out;
}

// Full 87-attribute vector: style then complexity then psychology.
inline std::vector<double> extract_nela(const Document& doc, const LexiconSet& lex,
                                        const AbbreviationList& abbrev = AbbreviationList::defaults()) {
    std::vector<double> out = extract_style(doc, abbrev);
    auto cx = extract_complexity(doc, abbrev);
    auto psy = extract_psychology(doc, lex);
    out.insert(out.end(), cx.begin(), cx.end());
    out.insert(out.end(), psy.begin(), psy.end());
    return out;
}

}  // namespace penmark
