#pragma once

#include <string>
#include <unordered_set>

namespace penmark {
namespace words {

using Set = std::unordered_set<std::string>;

// Standard English stopword list; also the denominator-free "function" side
// of lexical density.
inline const Set& stopwords() {
    static const Set s = {
        "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any", "are",
        "as", "at", "be", "because", "been", "before", "being", "below", "between", "both", "but",
        "by", "can", "cannot", "could", "did", "do", "does", "doing", "down", "during", "each",
        "few", "for", "from", "further", "had", "has", "have", "having", "he", "her", "here",
        "hers", "herself", "him", "himself", "his", "how", "i", "if", "in", "into", "is", "it",
        "its", "itself", "just", "me", "more", "most", "my", "myself", "no", "nor", "not", "now",
        "of", "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves", "out",
        "over", "own", "same", "she", "should", "so", "some", "such", "than", "that", "the",
        "their", "theirs", "them", "themselves", "then", "there", "these", "they", "this",
        "those", "through", "to", "too", "under", "until", "up", "very", "was", "we", "were",
        "what", "when", "where", "which", "while", "who", "whom", "why", "will", "with", "would",
        "you", "your", "yours", "yourself", "yourselves",
    };
    return s;
}

inline const Set& negations() {
    static const Set s = {
        "no", "not", "never", "none", "nobody", "nothing", "neither", "nor", "nowhere", "cannot",
        "without", "can't", "don't", "won't", "isn't", "aren't", "wasn't", "weren't", "doesn't",
        "didn't", "hasn't", "haven't", "hadn't", "shouldn't", "wouldn't", "couldn't", "mustn't",
        "ain't",
    };
    return s;
}

inline const Set& articles() {
    static const Set s = {"a", "an", "the"};
    return s;
}

inline const Set& prepositions() {
    static const Set s = {
        "about", "above", "across", "after", "against", "along", "among", "around", "at",
        "before", "behind", "below", "beneath", "beside", "between", "beyond", "by", "despite",
        "down", "during", "except", "for", "from", "in", "inside", "into", "near", "of", "off",
        "on", "onto", "out", "outside", "over", "past", "since", "through", "throughout", "to",
        "toward", "towards", "under", "until", "up", "upon", "with", "within", "without",
    };
    return s;
}

inline const Set& conjunctions() {
    static const Set s = {
        "and", "but", "or", "nor", "yet", "so", "because", "although", "though", "while",
        "whereas", "if", "unless", "since", "until", "when", "whenever", "where", "wherever",
        "after", "before", "once", "than", "whether",
    };
    return s;
}

// Coordinators only; feeds the clause-count proxy.
inline const Set& coordinators() {
    static const Set s = {"and", "but", "or", "nor", "yet", "so"};
    return s;
}

inline const Set& pronouns_first() {
    static const Set s = {"i", "me", "my", "mine", "myself", "we", "us", "our", "ours", "ourselves"};
    return s;
}

inline const Set& pronouns_second() {
    static const Set s = {"you", "your", "yours", "yourself", "yourselves"};
    return s;
}

inline const Set& pronouns_third() {
    static const Set s = {
        "he", "him", "his", "himself", "she", "her", "hers", "herself", "it", "its", "itself",
        "they", "them", "their", "theirs", "themselves",
    };
    return s;
}

inline const Set& auxiliaries() {
    static const Set s = {
        "am", "is", "are", "was", "were", "be", "been", "being", "have", "has", "had", "having",
        "do", "does", "did", "doing",
    };
    return s;
}

inline const Set& modals() {
    static const Set s = {"can", "could", "may", "might", "must", "shall", "should", "will", "would", "ought"};
    return s;
}

inline const Set& interjections() {
    static const Set s = {
        "oh", "wow", "ah", "aha", "alas", "bravo", "hey", "hmm", "hooray", "huh", "oops", "ouch",
        "phew", "ugh", "uh", "um", "yay", "yikes", "whoa", "gosh",
    };
    return s;
}

}  // namespace words
}  // namespace penmark
