#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "penmark/error.hpp"
#include "penmark/text.hpp"
#include "penmark/util.hpp"
#include "penmark/wordlists.hpp"

namespace penmark {

enum class PromptId { Concise = 0, Revise, Polish, Rewrite, Fluent, Refine, Gptize };

inline constexpr int kPromptCount = 7;

struct RewritePrompt {
    PromptId id;
    std::string_view name;
    std::string_view instruction;
};

// The seven rewriting instructions, in canonical order.
inline const std::array<RewritePrompt, kPromptCount>& rewrite_prompts() {
    static const std::array<RewritePrompt, kPromptCount> prompts = {{
        {PromptId::Concise, "CONCISE", "Concise this for me and keep all the information."},
        {PromptId::Revise, "REVISE", "Revise this with your best effort"},
        {PromptId::Polish, "POLISH", "Help me polish this"},
        {PromptId::Rewrite, "REWRITE", "Rewrite this for me"},
        {PromptId::Fluent, "FLUENT", "Make this fluent while doing minimal change"},
        {PromptId::Refine, "REFINE", "Refine this for me please"},
        {PromptId::Gptize, "GPTIZE", "Improve this in GPT way"},
    }};
    return prompts;
}

inline const RewritePrompt& prompt_by_id(PromptId id) { return rewrite_prompts()[static_cast<int>(id)]; }

inline const RewritePrompt* prompt_by_name(std::string_view name) {
    for (const auto& p : rewrite_prompts())
        if (p.name == name) return &p;
    return nullptr;
}

// The original text plus its seven prompt-conditioned rewrites.
struct RewriteSet {
    std::string original;
    std::array<std::string, kPromptCount> rewrites;
    std::string provenance;  // remote model name or "stub"
    int cache_hits = 0;

    const std::string& rewrite(PromptId id) const { return rewrites[static_cast<int>(id)]; }
};

// ---------------------------------------------------------------------------
// Deterministic offline stub. Each prompt applies a fixed transformation so
// the whole pipeline runs hermetically.
// ---------------------------------------------------------------------------

namespace stub {

inline const std::unordered_set<std::string>& drop_words() {
    static const std::unordered_set<std::string> s = {
        // stopwords
        "a", "an", "the", "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
        "them", "my", "your", "his", "its", "our", "their", "am", "is", "are", "was", "were",
        "be", "been", "being", "do", "does", "did", "have", "has", "had", "will", "would",
        "shall", "should", "can", "could", "may", "might", "must", "of", "to", "in", "on", "at",
        "by", "for", "with", "from", "as", "that", "this", "these", "those", "and", "or", "but",
        "so", "if", "then", "than", "there", "here", "not", "no",
        // hedges
        "think", "believe", "guess", "suppose", "very", "really", "quite", "perhaps", "maybe",
        "somewhat", "rather", "just", "actually", "basically", "literally", "indeed",
    };
    return s;
}

inline const std::map<std::string, std::string>& synonyms() {
    static const std::map<std::string, std::string> s = {
        {"good", "excellent"},   {"great", "superb"},        {"bad", "poor"},
        {"big", "large"},        {"small", "tiny"},          {"happy", "glad"},
        {"sad", "unhappy"},      {"fast", "quick"},          {"slow", "sluggish"},
        {"important", "crucial"}, {"result", "outcome"},     {"results", "outcomes"},
        {"show", "demonstrate"}, {"shows", "demonstrates"},  {"use", "employ"},
        {"make", "construct"},   {"new", "novel"},           {"old", "ancient"},
        {"many", "numerous"},    {"people", "individuals"},  {"said", "stated"},
        {"think", "reckon"},     {"data", "evidence"},       {"work", "effort"},
        {"analysis", "examination"}, {"clear", "evident"},   {"hard", "difficult"},
        {"easy", "simple"},      {"start", "commence"},      {"end", "conclude"},
    };
    return s;
}

// CONCISE: keep only non-stopword, non-hedge word/number tokens.
inline std::string concise(const std::string& text) {
    std::string out;
    for (const auto& t : tokenize(text)) {
        if (t.kind != TokenKind::Word && t.kind != TokenKind::Number) continue;
        if (t.kind == TokenKind::Word && drop_words().count(t.lower())) continue;
        if (!out.empty()) out += ' ';
        out += t.surface;
    }
    if (out.empty()) return trim(text);
    return out;
}

// REVISE: swap the clauses around the first comma; identity when there is
// no comma. A trailing terminator run stays at the end.
inline std::string revise(const std::string& text) {
    size_t comma = text.find(',');
    if (comma == std::string::npos) return trim(text);
    std::string left = trim(text.substr(0, comma));
    std::string rest = trim(text.substr(comma + 1));
    std::string tail;
    while (!rest.empty()) {
        char c = rest.back();
        if (c == '.' || c == '!' || c == '?') {
            tail.insert(tail.begin(), c);
            rest.pop_back();
        } else {
            break;
        }
    }
    rest = trim(rest);
    if (rest.empty() || left.empty()) return trim(text);
    return rest + ", " + left + tail;
}

// POLISH: collapse whitespace runs and uppercase each sentence start.
inline std::string polish(const std::string& text) {
    std::string collapsed;
    bool in_space = false;
    for (const auto& d : uni::decode(text)) {
        if (uni::is_space(d.cp)) {
            in_space = true;
            continue;
        }
        if (in_space && !collapsed.empty()) collapsed += ' ';
        in_space = false;
        uni::append_utf8(collapsed, d.cp);
    }
    std::string out;
    bool at_sentence_start = true;
    for (const auto& d : uni::decode(collapsed)) {
        char32_t c = d.cp;
        if (at_sentence_start && uni::is_alpha(c)) {
            if (c >= 'a' && c <= 'z') c = c - 'a' + 'A';
            at_sentence_start = false;
        } else if (c == '.' || c == '!' || c == '?') {
            at_sentence_start = true;
        }
        uni::append_utf8(out, c);
    }
    return out;
}

// REWRITE: substitute words through the fixed synonym table, keeping the
// leading capital when the source word had one.
inline std::string rewrite(const std::string& text) {
    std::string out;
    size_t cursor = 0;
    for (const auto& t : tokenize(text)) {
        out.append(text, cursor, t.begin - cursor);
        cursor = t.end;
        if (t.kind == TokenKind::Word) {
            auto it = synonyms().find(t.lower());
            if (it != synonyms().end()) {
                std::string repl = it->second;
                auto first = uni::decode(t.surface);
                if (!first.empty() && uni::is_upper(first[0].cp) && !repl.empty() && repl[0] >= 'a' &&
                    repl[0] <= 'z')
                    repl[0] = static_cast<char>(repl[0] - 'a' + 'A');
                out += repl;
                continue;
            }
        }
        out += t.surface;
    }
    out.append(text, cursor, text.size() - cursor);
    return out;
}

// FLUENT: insert a fixed connective after the first sentence.
inline std::string fluent(const std::string& text) {
    auto sentences = split_sentences(text);
    if (sentences.size() >= 2) {
        size_t cut = sentences[0].end;
        return text.substr(0, cut) + " Moreover," + text.substr(cut);
    }
    std::string t = trim(text);
    return t + " Moreover.";
}

// REFINE: drop duplicate adjacent words and strip the trailing punctuation
// run.
inline std::string refine(const std::string& text) {
    auto ts = tokenize(text);
    std::string out;
    size_t cursor = 0;
    std::string prev_word;
    for (const auto& t : ts) {
        if (t.kind == TokenKind::Word) {
            std::string low = t.lower();
            if (low == prev_word) {
                cursor = t.end;  // skip the duplicate and the gap before it
                continue;
            }
            prev_word = low;
        } else {
            prev_word.clear();
        }
        out.append(text, cursor, t.begin - cursor);
        out += t.surface;
        cursor = t.end;
    }
    while (!out.empty()) {
        char c = out.back();
        if (c == '.' || c == '!' || c == '?' || c == ',' || c == ';' || c == ':' || c == ' ' || c == '\t' ||
            c == '\n' || c == '\r') {
            out.pop_back();
        } else {
            break;
        }
    }
    if (out.empty()) return trim(text);
    return out;
}

// GPTIZE: append a fixed formal closing clause.
inline std::string gptize(const std::string& text) {
    std::string t = text;
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\n' || t.back() == '\r'))
        t.pop_back();
    return t + " In conclusion, a thorough consideration of these points is essential.";
}

inline std::string apply(PromptId id, const std::string& text) {
    switch (id) {
        case PromptId::Concise: return concise(text);
        case PromptId::Revise: return revise(text);
        case PromptId::Polish: return polish(text);
        case PromptId::Rewrite: return rewrite(text);
        case PromptId::Fluent: return fluent(text);
        case PromptId::Refine: return refine(text);
        case PromptId::Gptize: return gptize(text);
    }
    throw DataError("unknown prompt id");
}

}  // namespace stub

// ---------------------------------------------------------------------------
// Cache: append-only JSON Lines, one record per (model, prompt, text) key.
// ---------------------------------------------------------------------------

struct CacheRecord {
    std::string key;         // digest of (model, prompt name, text)
    std::string prompt_id;   // prompt name
    std::string text_digest;
    std::string rewrite;
    std::string created_at;
};

inline std::string cache_key(std::string_view model, std::string_view prompt_name, std::string_view text) {
    std::string material;
    material.reserve(model.size() + prompt_name.size() + text.size() + 2);
    material += model;
    material += '\x1f';
    material += prompt_name;
    material += '\x1f';
    material += text;
    return digest_hex(material);
}

struct CompactStats {
    size_t records_before = 0;
    size_t records_after = 0;
};

class RewriteCache {
public:
    RewriteCache() = default;

    // Loads an existing JSONL cache; later records win on duplicate keys.
    // Torn or foreign lines are skipped: readers only ever observe fully
    // written records.
    static RewriteCache open(const std::string& path) {
        RewriteCache cache;
        cache.path_ = path;
        if (!std::filesystem::exists(path)) return cache;
        cache.load_body(read_file(path), path, /*strict=*/false);
        return cache;
    }

    const std::string& path() const { return path_; }
    size_t size() const { return records_.size(); }

    std::optional<std::string> lookup(const std::string& key) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = records_.find(key);
        if (it == records_.end()) return std::nullopt;
        return it->second.rewrite;
    }

    // Append-and-flush under a single writer lock.
    void put(const CacheRecord& rec) {
        std::lock_guard<std::mutex> lock(mu_);
        records_[rec.key] = rec;
        if (path_.empty()) return;
        namespace fs = std::filesystem;
        fs::path p(path_);
        if (p.has_parent_path()) fs::create_directories(p.parent_path());
        std::ofstream out(path_, std::ios::binary | std::ios::app);
        if (!out) throw DataError("cannot append to cache: " + path_);
        out << to_json_line(rec) << '\n';
        out.flush();
    }

    static std::string to_json_line(const CacheRecord& rec) {
        nlohmann::json j = {{"key", rec.key},
                            {"prompt_id", rec.prompt_id},
                            {"text_digest", rec.text_digest},
                            {"rewrite", rec.rewrite},
                            {"created_at", rec.created_at}};
        return j.dump();
    }

    // Rewrites the file keeping the newest record per key. Aborts without
    // touching the file when any line is unparseable.
    static CompactStats compact(const std::string& path) {
        if (!std::filesystem::exists(path)) throw DataError("cache file missing: " + path);
        std::string body = read_file(path);
        RewriteCache scratch;
        CompactStats stats;
        stats.records_before = scratch.load_body(body, path, /*strict=*/true);
        stats.records_after = scratch.records_.size();

        std::vector<const CacheRecord*> ordered;
        ordered.reserve(scratch.records_.size());
        for (const auto& kv : scratch.records_) ordered.push_back(&kv.second);
        std::sort(ordered.begin(), ordered.end(),
                  [](const CacheRecord* a, const CacheRecord* b) { return a->key < b->key; });
        std::string out;
        for (const CacheRecord* r : ordered) {
            out += to_json_line(*r);
            out += '\n';
        }
        write_file_atomic(path, out);
        return stats;
    }

private:
    // Returns the number of records seen; throws on bad lines when strict.
    size_t load_body(const std::string& body, const std::string& origin, bool strict) {
        size_t pos = 0;
        int line_no = 0;
        size_t seen = 0;
        while (pos < body.size()) {
            ++line_no;
            size_t nl = body.find('\n', pos);
            std::string_view line(body.data() + pos, (nl == std::string::npos ? body.size() : nl) - pos);
            pos = (nl == std::string::npos) ? body.size() : nl + 1;
            if (trim(line).empty()) continue;
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            bool ok = !j.is_discarded() && j.is_object() && j.contains("key") && j.contains("rewrite");
            if (!ok) {
                if (strict)
                    throw DataError(origin + ": line " + std::to_string(line_no) + ": unparseable cache record");
                continue;
            }
            CacheRecord rec;
            rec.key = j["key"].get<std::string>();
            rec.prompt_id = j.value("prompt_id", "");
            rec.text_digest = j.value("text_digest", "");
            rec.rewrite = j["rewrite"].get<std::string>();
            rec.created_at = j.value("created_at", "");
            records_[rec.key] = rec;
            ++seen;
        }
        return seen;
    }

    std::string path_;
    mutable std::mutex mu_;
    std::unordered_map<std::string, CacheRecord> records_;
};

// ---------------------------------------------------------------------------
// Client
// ---------------------------------------------------------------------------

// Transport-level backend; implemented by the HTTP client and the stub.
class RewriteBackend {
public:
    virtual ~RewriteBackend() = default;
    virtual std::string rewrite(const std::string& text, const RewritePrompt& prompt) = 0;
    virtual std::string model_name() const = 0;
};

class StubBackend final : public RewriteBackend {
public:
    std::string rewrite(const std::string& text, const RewritePrompt& prompt) override {
        return stub::apply(prompt.id, text);
    }
    std::string model_name() const override { return "stub"; }
};

struct ClientStats {
    size_t cache_hits = 0;
    size_t cache_misses = 0;
    size_t requests = 0;
};

// Cache-first rewrite client. backend == nullptr means cache-only mode.
class RewriteClient {
public:
    RewriteClient(std::shared_ptr<RewriteCache> cache, std::shared_ptr<RewriteBackend> backend,
                  int max_in_flight = 4)
        : cache_(std::move(cache)), backend_(std::move(backend)), max_in_flight_(max_in_flight) {}

    std::string model_name() const { return backend_ ? backend_->model_name() : "cache-only"; }

    std::string rewrite_one(const std::string& text, const RewritePrompt& prompt) {
        std::string key = cache_key(model_name_for_key(), prompt.name, text);
        if (cache_) {
            if (auto hit = cache_->lookup(key)) {
                bump(&ClientStats::cache_hits);
                return *hit;
            }
            bump(&ClientStats::cache_misses);
        }
        if (!backend_)
            throw DataError(std::string("cache-only mode: missing rewrite for prompt ") + std::string(prompt.name) +
                            ", text digest " + digest_hex(text));
        std::string result = backend_->rewrite(text, prompt);
        bump(&ClientStats::requests);
        if (result.empty())
            throw TransportError(std::string("empty rewrite from model for prompt ") + std::string(prompt.name) +
                                 ", text digest " + digest_hex(text));
        if (cache_) {
            CacheRecord rec{key, std::string(prompt.name), digest_hex(text), result, iso8601_utc_now()};
            cache_->put(rec);
        }
        return result;
    }

    // All seven rewrites; a failure on any prompt fails the whole set.
    RewriteSet rewrite_all(const std::string& text) {
        RewriteSet set;
        set.original = text;
        set.provenance = model_name();
        std::array<std::optional<std::string>, kPromptCount> slots;
        std::array<std::exception_ptr, kPromptCount> errors{};
        size_t hits_before = stats_.cache_hits;
        parallel_for(kPromptCount, max_in_flight_, [&](size_t i) {
            try {
                slots[i] = rewrite_one(text, rewrite_prompts()[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
        for (int i = 0; i < kPromptCount; ++i) {
            if (errors[i]) {
                try {
                    std::rethrow_exception(errors[i]);
                } catch (const std::exception& e) {
                    throw TransportError(std::string("rewrite set failed at prompt ") +
                                         std::string(rewrite_prompts()[i].name) + ": " + e.what());
                }
            }
            set.rewrites[i] = *slots[i];
        }
        set.cache_hits = static_cast<int>(stats_.cache_hits - hits_before);
        return set;
    }

    const ClientStats& stats() const { return stats_; }

    // Cache keys embed a model name; cache-only clients must use the same
    // name the warming run used.
    void set_key_model(std::string m) { key_model_ = std::move(m); }

private:
    std::string model_name_for_key() const { return backend_ ? backend_->model_name() : key_model_; }

    void bump(size_t ClientStats::* field) {
        std::lock_guard<std::mutex> lock(stats_mu_);
        stats_.*field += 1;
    }

    std::shared_ptr<RewriteCache> cache_;
    std::shared_ptr<RewriteBackend> backend_;
    int max_in_flight_;
    std::string key_model_ = "stub";
    std::mutex stats_mu_;
    ClientStats stats_;
};

}  // namespace penmark
