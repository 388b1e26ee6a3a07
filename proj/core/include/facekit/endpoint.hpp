#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>

namespace facekit {

/// One request to a chat-style image+text endpoint. Either a locator or
/// inline base64 bytes identifies the image; decoding settings stay
/// server-side.
struct EndpointRequest {
    std::string image_uri;
    std::string image_base64;
    std::string prompt;
};

struct EndpointResponse {
    std::string text;
    std::int64_t latency_ms = 0;
};

enum class EndpointErrorKind {
    timeout,       // retryable
    rate_limited,  // retryable
    server_error,  // retryable
    transport,     // retryable
    auth,          // fatal
    bad_request,   // fatal
};

struct EndpointError {
    EndpointErrorKind kind = EndpointErrorKind::transport;
    std::string message;

    bool retryable() const {
        return kind != EndpointErrorKind::auth && kind != EndpointErrorKind::bad_request;
    }
};

using EndpointResult = std::variant<EndpointResponse, EndpointError>;

class Endpoint {
  public:
    virtual ~Endpoint() = default;
    virtual std::string id() const = 0;
    virtual EndpointResult query(const EndpointRequest& request) = 0;
};

/// HTTP transport: POST {base}/v1/generate with a JSON body
/// {"image_uri"|"image_base64", "prompt"} returning {"text": ...}.
/// 401/403 map to fatal auth errors, 429 to rate_limited, 5xx to
/// server_error; everything else non-2xx is bad_request.
class HttpEndpoint : public Endpoint {
  public:
    HttpEndpoint(std::string base_url, std::string bearer_token, int timeout_seconds = 60);
    ~HttpEndpoint() override;

    std::string id() const override { return base_url_; }
    EndpointResult query(const EndpointRequest& request) override;

  private:
    std::string base_url_;
    std::string token_;
    int timeout_seconds_;
};

/// Always answers with the same text. `mock:fixed?text=Yes`.
class FixedEndpoint : public Endpoint {
  public:
    explicit FixedEndpoint(std::string text) : text_(std::move(text)) {}
    std::string id() const override { return "mock:fixed"; }
    EndpointResult query(const EndpointRequest&) override {
        return EndpointResponse{text_, 0};
    }

  private:
    std::string text_;
};

/// Deterministic annotation model stand-in: fabricates a plausible
/// attribute-list response from a hash of the image locator. Identical
/// requests always produce identical responses.
class MockAnnotatorEndpoint : public Endpoint {
  public:
    explicit MockAnnotatorEndpoint(std::uint64_t seed = 0) : seed_(seed) {}
    std::string id() const override { return "mock:annotator"; }
    EndpointResult query(const EndpointRequest& request) override;

  private:
    std::uint64_t seed_;
};

/// Replays canned responses keyed by exact prompt text; unmatched prompts
/// fall back to `default_text` or a transport error when none is set.
class ScriptEndpoint : public Endpoint {
  public:
    ScriptEndpoint(std::map<std::string, std::string> by_prompt, std::string default_text = "")
        : by_prompt_(std::move(by_prompt)), default_text_(std::move(default_text)) {}
    std::string id() const override { return "mock:script"; }
    EndpointResult query(const EndpointRequest& request) override;

  private:
    std::map<std::string, std::string> by_prompt_;
    std::string default_text_;
};

/// Builds an endpoint from a CLI spec: http(s)://... or one of the mock:
/// schemes (mock:fixed?text=..., mock:annotator?seed=..., mock:script?file=...).
std::unique_ptr<Endpoint> make_endpoint(const std::string& spec, const std::string& bearer_token,
                                        int timeout_seconds = 60);

std::string base64_encode(const std::string& bytes);

}  // namespace facekit
