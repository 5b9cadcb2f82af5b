#include "tverwind/service.hpp"

#include "tverwind/bounds.hpp"
#include "tverwind/drawings.hpp"
#include "tverwind/errors.hpp"
#include "tverwind/hunt.hpp"
#include "tverwind/winding.hpp"

#include <chrono>
#include <optional>

#include "httplib.h"

namespace tverwind {

using nlohmann::json;

namespace {

// Thrown for structurally invalid requests (HTTP 400).
struct BadRequest : ParseError {
    using ParseError::ParseError;
};

json error_body(const std::string& kind, const std::string& message, const std::string& where = {}) {
    json e{{"kind", kind}, {"message", message}};
    if (!where.empty()) e["where"] = where;
    return {{"error", e}};
}

json parse_body(const std::string& body) {
    json j = parse_json_text(body);
    if (!j.is_object()) throw ParseError("", "request body must be a JSON object");
    return j;
}

const json& field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(key, "missing field");
    return j[key];
}

int int_field(const json& j, const char* key, std::optional<int> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw ParseError(key, "missing field");
    }
    if (!j[key].is_number_integer()) throw ParseError(key, "expected integer");
    return j[key].get<int>();
}

Drawing drawing_field(const json& j) {
    const json& d = field(j, "drawing");
    try {
        return drawing_from_json(d);
    } catch (const ParseError& e) {
        throw ParseError(e.where().empty() ? "drawing" : "drawing." + e.where(), e.what());
    }
}

FaceFamily family_field(const json& j) {
    const json& f = field(j, "family");
    if (f.is_string()) return parse_family(f.get<std::string>());
    if (!f.is_array()) throw ParseError("family", "expected a spec string or an array of faces");
    std::vector<Face> faces;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string where = "family[" + std::to_string(i) + "]";
        if (!f[i].is_array() || f[i].empty()) throw ParseError(where, "expected a nonempty vertex array");
        std::vector<int> verts;
        for (const auto& v : f[i]) {
            if (!v.is_number_integer()) throw ParseError(where, "expected integer vertices");
            verts.push_back(v.get<int>());
        }
        try {
            faces.emplace_back(std::move(verts));
        } catch (const InvalidArgument& e) {
            throw ParseError(where, e.what());
        }
    }
    try {
        return FaceFamily(std::move(faces));
    } catch (const InvalidArgument& e) {
        throw ParseError("family", e.what());
    }
}

json certificates_json(const std::vector<WindingCertificate>& certs) {
    json list = json::array();
    for (const auto& c : certs) list.push_back(certificate_to_json(c));
    return list;
}

struct EnumerateRequest {
    Drawing drawing;
    int q = 0;
    int jobs = 1;
};

EnumerateRequest parse_enumerate(const std::string& body, const ServiceOptions& opt) {
    const json j = parse_body(body);
    EnumerateRequest r{drawing_field(j), int_field(j, "q"), opt.jobs};
    if (r.q < 2) throw InvalidArgument("q must be at least 2");
    if (r.drawing.graph().n() != 3 * r.q - 2)
        throw WrongGraph("q = " + std::to_string(r.q) + " needs a drawing on " +
                         std::to_string(3 * r.q - 2) + " vertices, got " +
                         std::to_string(r.drawing.graph().n()));
    return r;
}

json run_enumerate(const EnumerateRequest& r, const ProgressFn& progress = {}) {
    const auto certs = enumerate_winding_subgraph(r.drawing, r.q, r.jobs, progress);
    json out{{"q", r.q}, {"count", certs.size()}, {"certificates", certificates_json(certs)}};
    out["general_position"] = gp_report_to_json(general_position_check(r.drawing));
    return out;
}

json do_check(const std::string& body) {
    const json j = parse_body(body);
    const Drawing dr = drawing_field(j);
    const FaceFamily fam = family_field(j);
    for (const auto& f : fam.faces())
        for (int v : f.vertices())
            if (v >= dr.graph().n())
                throw InvalidArgument("family uses vertex " + std::to_string(v) +
                                      " but the drawing has " + std::to_string(dr.graph().n()));
    const auto cert = is_winding_partition(dr, fam);
    return {{"family", family_to_json(fam)},
            {"certified", cert.has_value()},
            {"certificate", cert ? certificate_to_json(*cert) : json(nullptr)}};
}

json do_gp_check(const std::string& body) {
    return gp_report_to_json(general_position_check(drawing_field(parse_body(body))));
}

int query_int(const ServiceRequest& req, const std::string& key) {
    auto it = req.query.find(key);
    if (it == req.query.end()) throw ParseError(key, "missing query parameter");
    try {
        std::size_t used = 0;
        const int v = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ParseError(key, "expected integer, got '" + it->second + "'");
    }
}

json do_alternating(const ServiceRequest& req) {
    const int n = query_int(req, "n");
    if (n < 1 || n > 64) throw InvalidArgument("n must be in 1..64");
    return {{"drawing", drawing_to_json(alternating_linear_drawing(n))}};
}

json do_bounds(const ServiceRequest& req) {
    const int d = query_int(req, "d");
    const int q = query_int(req, "q");
    if (d < 1 || q < 2) throw InvalidArgument("need d >= 1 and q >= 2");
    return bound_report_to_json(bound_report(d, q));
}

json do_hunt_step(const std::string& body, const ServiceOptions& opt) {
    const json j = parse_body(body);
    HuntOptions h;
    const Drawing start = drawing_field(j);
    h.q = int_field(j, "q");
    const json& seed = field(j, "seed");
    if (!seed.is_number_unsigned()) throw ParseError("seed", "expected non-negative integer");
    h.seed = seed.get<std::uint64_t>();
    h.steps = int_field(j, "steps");
    h.max_move = int_field(j, "max_move", h.max_move);
    h.jobs = opt.jobs;
    for (const char* key : {"temperature", "cooling"}) {
        if (!j.contains(key)) continue;
        if (!j[key].is_number()) throw ParseError(key, "expected number");
        (std::string(key) == "temperature" ? h.temperature : h.cooling) = j[key].get<double>();
    }
    if (j.contains("pinned")) {
        if (!j["pinned"].is_array()) throw ParseError("pinned", "expected array of vertices");
        for (const auto& v : j["pinned"]) {
            if (!v.is_number_integer()) throw ParseError("pinned", "expected integer vertices");
            h.pinned.push_back(v.get<int>());
        }
    }
    if (h.steps > 10000) throw InvalidArgument("at most 10000 steps per call");
    const HuntResult r = hunt_from(start, h);
    json trace = json::array();
    for (const auto& s : r.trace) trace.push_back(hunt_step_to_json(s));
    return {{"drawing", drawing_to_json(r.current)},
            {"count", r.current_count},
            {"best_drawing", drawing_to_json(r.best)},
            {"best_count", r.best_count},
            {"temperature", r.temperature},
            {"trace", trace}};
}

ServiceResponse guarded(const std::function<json()>& fn) {
    try {
        return {200, fn()};
    } catch (const ParseError& e) {
        return {400, error_body(e.kind(), e.what(), e.where())};
    } catch (const Error& e) {
        return {422, error_body(e.kind(), e.what())};
    } catch (const std::exception& e) {
        return {500, error_body("InternalError", e.what())};
    }
}

}  // namespace

ServiceResponse handle(const ServiceRequest& req, const ServiceOptions& opt) {
    const bool get = req.method == "GET";
    const bool post = req.method == "POST";
    if (post && req.path == "/api/winding/enumerate")
        return guarded([&] { return run_enumerate(parse_enumerate(req.body, opt)); });
    if (post && req.path == "/api/winding/check") return guarded([&] { return do_check(req.body); });
    if (post && req.path == "/api/gp-check") return guarded([&] { return do_gp_check(req.body); });
    if (post && req.path == "/api/hunt/step") return guarded([&] { return do_hunt_step(req.body, opt); });
    if (get && req.path == "/api/generate/alternating") return guarded([&] { return do_alternating(req); });
    if (get && req.path == "/api/bounds") return guarded([&] { return do_bounds(req); });
    return {404, error_body("NotFound", req.method + " " + req.path + " is not an endpoint")};
}

ServiceResponse stream_enumerate(const std::string& body, const ServiceOptions& opt,
                                 const std::function<bool(const std::string&)>& write) {
    std::optional<EnumerateRequest> parsed;
    ServiceResponse validation = guarded([&] {
        parsed = parse_enumerate(body, opt);
        return json::object();
    });
    if (!parsed) return validation;
    return guarded([&] {
        bool open = true;
        json result = run_enumerate(*parsed, [&](std::size_t done, std::size_t total, std::size_t found) {
            if (open)
                open = write(json{{"progress", {{"done", done}, {"total", total}, {"found", found}}}}.dump() +
                             "\n");
        });
        if (open) write(result.dump() + "\n");
        return result;
    });
}

struct HttpService::Impl {
    ServeOptions opt;
    httplib::Server server;
};

HttpService::HttpService(ServeOptions opt) : impl_(std::make_unique<Impl>()) {
    impl_->opt = std::move(opt);
    const ServiceOptions sopt = impl_->opt.service;
    auto convert = [](const httplib::Request& req) {
        ServiceRequest s{req.method, req.path, {}, req.body};
        for (const auto& [k, v] : req.params) s.query.emplace(k, v);
        return s;
    };
    auto reply = [sopt, convert](const httplib::Request& req, httplib::Response& res) {
        const auto t0 = std::chrono::steady_clock::now();
        const ServiceResponse out = handle(convert(req), sopt);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        res.status = out.status;
        res.set_header("X-Compute-Time-Ms", std::to_string(ms));
        res.set_content(out.body.dump(), "application/json");
    };
    auto& server = impl_->server;
    server.Get(R"(/api/.*)", reply);
    server.Post(R"(/api/.*)", [sopt, reply](const httplib::Request& req, httplib::Response& res) {
        const bool stream = req.path == "/api/winding/enumerate" && req.has_param("stream") &&
                            req.get_param_value("stream") != "0";
        if (!stream) return reply(req, res);
        ServiceResponse check = guarded([&] {
            parse_enumerate(req.body, sopt);
            return json::object();
        });
        if (check.status != 200) {
            res.status = check.status;
            res.set_content(check.body.dump(), "application/json");
            return;
        }
        res.set_chunked_content_provider(
            "application/x-ndjson", [body = req.body, sopt](std::size_t, httplib::DataSink& sink) {
                stream_enumerate(body, sopt, [&](const std::string& line) {
                    return sink.write(line.data(), line.size());
                });
                sink.done();
                return true;
            });
    });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind() {
    auto& o = impl_->opt;
    if (o.port == 0) return impl_->server.bind_to_any_port(o.host);
    return impl_->server.bind_to_port(o.host, o.port) ? o.port : -1;
}

bool HttpService::listen() { return impl_->server.listen_after_bind(); }

void HttpService::stop() {
    if (impl_) impl_->server.stop();
}

}  // namespace tverwind
