#pragma once

#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "penmark/error.hpp"
#include "penmark/rewrite.hpp"
#include "penmark/text.hpp"

namespace penmark {

struct EndpointConfig {
    std::string base_url;           // e.g. http://localhost:8000/v1
    std::string model;              // e.g. meta-llama/Llama-3.1-8B
    std::string api_key_env = "REWRITE_API_KEY";
    int max_attempts = 3;
    int backoff_ms = 1000;          // doubles per retry
    int timeout_s = 120;
};

// OpenAI-compatible chat-completions client: one user message formed as
// `instruction + ": " + text`, temperature 0.
class HttpBackend final : public RewriteBackend {
public:
    explicit HttpBackend(EndpointConfig cfg) : cfg_(std::move(cfg)) {
        if (cfg_.base_url.empty()) throw UsageError("remote rewrite mode requires --base-url");
        if (cfg_.model.empty()) throw UsageError("remote rewrite mode requires --endpoint-model");
        split_url(cfg_.base_url, host_, path_prefix_);
        if (const char* key = std::getenv(cfg_.api_key_env.c_str())) api_key_ = key;
    }

    std::string model_name() const override { return cfg_.model; }

    std::string rewrite(const std::string& text, const RewritePrompt& prompt) override {
        nlohmann::json body = {
            {"model", cfg_.model},
            {"messages", {{{"role", "user"}, {"content", std::string(prompt.instruction) + ": " + text}}}},
            {"temperature", 0},
            {"max_tokens", max_tokens_for(text)},
        };
        std::string payload = body.dump();
        std::string last_error;

        for (int attempt = 1; attempt <= cfg_.max_attempts; ++attempt) {
            if (attempt > 1) {
                int delay = cfg_.backoff_ms << (attempt - 2);
                std::this_thread::sleep_for(std::chrono::milliseconds(delay));
            }
            httplib::Client client(host_);
            client.set_connection_timeout(cfg_.timeout_s, 0);
            client.set_read_timeout(cfg_.timeout_s, 0);
            httplib::Headers headers;
            if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
            auto res = client.Post(path_prefix_ + "/chat/completions", headers, payload, "application/json");
            if (!res) {
                last_error = "connection failed: " + httplib::to_string(res.error());
                continue;
            }
            if (res->status != 200) {
                last_error = "HTTP " + std::to_string(res->status);
                continue;
            }
            nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
            if (reply.is_discarded() || !reply.contains("choices") || reply["choices"].empty())
                throw TransportError("malformed completion response for prompt " + std::string(prompt.name));
            std::string content = reply["choices"][0].value("message", nlohmann::json::object())
                                      .value("content", "");
            if (trim(content).empty())
                throw TransportError("empty completion for prompt " + std::string(prompt.name) +
                                     ", text digest " + digest_hex(text));
            return content;
        }
        throw TransportError("rewrite failed after " + std::to_string(cfg_.max_attempts) + " attempts (" +
                             last_error + ") for prompt " + std::string(prompt.name) + ", text digest " +
                             digest_hex(text));
    }

private:
    static int max_tokens_for(const std::string& text) {
        auto estimate = static_cast<int>(tokenize(text).size());
        int v = 2 * estimate;
        return std::max(64, std::min(v, 4096));
    }

    // Splits "http://host:port/v1" into scheme://host:port and /v1.
    static void split_url(const std::string& url, std::string& host, std::string& prefix) {
        size_t scheme = url.find("://");
        size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
        size_t slash = url.find('/', host_start);
        if (slash == std::string::npos) {
            host = url;
            prefix.clear();
        } else {
            host = url.substr(0, slash);
            prefix = url.substr(slash);
            while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
        }
    }

    EndpointConfig cfg_;
    std::string host_;
    std::string path_prefix_;
    std::string api_key_;
};

}  // namespace penmark
