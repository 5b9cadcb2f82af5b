#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "json.hpp"

namespace tverwind {

struct ServiceRequest {
    std::string method;  // "GET" or "POST"
    std::string path;
    std::map<std::string, std::string> query;
    std::string body;
};

struct ServiceResponse {
    int status = 200;
    nlohmann::json body;
};

struct ServiceOptions {
    int jobs = 1;  // worker threads per enumeration request
};

/// Routes one request. Pure: the response depends only on the request.
/// Malformed bodies give 400, well-formed but unusable input gives 422,
/// unknown routes 404.
ServiceResponse handle(const ServiceRequest& req, const ServiceOptions& opt = {});

/// Streaming variant of POST /api/winding/enumerate: validates first, then
/// writes one NDJSON progress line per completed work item and finally the
/// full enumeration response as the last line. If validation fails the error
/// response is returned and nothing is written.
ServiceResponse stream_enumerate(const std::string& body, const ServiceOptions& opt,
                                 const std::function<bool(const std::string&)>& write);

struct ServeOptions {
    std::string host = "127.0.0.1";
    int port = 8080;
    ServiceOptions service;
};

/// HTTP/1.1 front end for handle(). A POST to /api/winding/enumerate with
/// ?stream=1 answers with chunked NDJSON from stream_enumerate. Every
/// non-streamed response carries its compute time in X-Compute-Time-Ms.
class HttpService {
public:
    explicit HttpService(ServeOptions opt);
    ~HttpService();

    /// Binds the socket; port 0 picks a free port. Returns the bound port or -1.
    int bind();
    /// Serves until stop() is called. Returns false on socket failure.
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace tverwind
