#include "doctest.h"

#include "tverwind/drawings.hpp"
#include "tverwind/service.hpp"

#include <sstream>
#include <thread>

#include "httplib.h"

using namespace tverwind;
using nlohmann::json;

namespace {

ServiceResponse post(const std::string& path, const json& body) { return handle({"POST", path, {}, body.dump()}); }

ServiceResponse get(const std::string& path, std::map<std::string, std::string> query) {
    return handle({"GET", path, std::move(query), {}});
}

json alt(int n) { return drawing_to_json(alternating_linear_drawing(n)); }

}  // namespace

TEST_CASE("enumerate endpoint") {
    const auto r = post("/api/winding/enumerate", {{"drawing", alt(7)}, {"q", 3}});
    REQUIRE(r.status == 200);
    CHECK(r.body["count"] == 4);
    CHECK(r.body["q"] == 3);
    CHECK(r.body["certificates"].size() == 4);
    CHECK(r.body["general_position"]["general_position"] == true);

    const auto wrong = post("/api/winding/enumerate", {{"drawing", alt(6)}, {"q", 3}});
    CHECK(wrong.status == 422);
    CHECK(wrong.body["error"]["kind"] == "WrongGraph");

    const auto missing = post("/api/winding/enumerate", {{"drawing", alt(7)}});
    CHECK(missing.status == 400);
    CHECK(missing.body["error"]["where"] == "q");

    const auto garbage = handle({"POST", "/api/winding/enumerate", {}, "{not json"});
    CHECK(garbage.status == 400);
    CHECK(garbage.body["error"]["kind"] == "ParseError");

    auto bad = alt(7);
    bad["positions"]["2"][1] = "1/0";
    const auto bad_rational = post("/api/winding/enumerate", {{"drawing", bad}, {"q", 3}});
    CHECK(bad_rational.status == 400);
    CHECK(bad_rational.body["error"]["where"] == "drawing.positions.2[1]");
}

TEST_CASE("check endpoint") {
    const auto r = post("/api/winding/check", {{"drawing", alt(7)}, {"family", "4|0,1,6|2,3,5"}});
    REQUIRE(r.status == 200);
    CHECK(r.body["certified"] == true);
    CHECK(r.body["certificate"]["witness"] == json::array({"5", "0"}));

    const auto arr = post("/api/winding/check", {{"drawing", alt(7)}, {"family", {{0}, {1, 2, 3}, {4, 5, 6}}}});
    REQUIRE(arr.status == 200);
    CHECK(arr.body["certified"] == false);
    CHECK(arr.body["certificate"].is_null());

    CHECK(post("/api/winding/check", {{"drawing", alt(7)}, {"family", "0|9"}}).status == 422);
    CHECK(post("/api/winding/check", {{"drawing", alt(7)}, {"family", {{0}, {0, 1}}}}).status == 400);
    CHECK(post("/api/winding/check", {{"drawing", alt(7)}, {"family", 3}}).status == 400);
}

TEST_CASE("gp-check, generate and bounds endpoints") {
    const auto gp = post("/api/gp-check", {{"drawing", alt(5)}});
    REQUIRE(gp.status == 200);
    CHECK(gp.body["general_position"] == true);
    CHECK(gp.body["violations"].empty());

    json degenerate{{"n", 3}, {"edges", {{1, 2}}}, {"positions", {{"0", {"1", "0"}}, {"1", {"0", "0"}}, {"2", {"2", "0"}}}}};
    const auto bad = post("/api/gp-check", {{"drawing", degenerate}});
    REQUIRE(bad.status == 200);
    CHECK(bad.body["general_position"] == false);
    CHECK(bad.body["violations"][0]["kind"] == "vertex-on-disjoint-edge");

    const auto g = get("/api/generate/alternating", {{"n", "7"}});
    REQUIRE(g.status == 200);
    CHECK(read_drawing(g.body["drawing"].dump()) == alternating_linear_drawing(7));
    CHECK(get("/api/generate/alternating", {{"n", "x"}}).status == 400);
    CHECK(get("/api/generate/alternating", {}).status == 400);
    CHECK(get("/api/generate/alternating", {{"n", "0"}}).status == 422);

    const auto b = get("/api/bounds", {{"d", "2"}, {"q", "4"}});
    REQUIRE(b.status == 200);
    CHECK(b.body["sierksma"] == "36");
    CHECK(b.body["d2_winding_bound"] == "1024/6561");
    CHECK(get("/api/bounds", {{"d", "2"}, {"q", "1"}}).status == 422);
}

TEST_CASE("hunt step endpoint") {
    const json body{{"drawing", alt(4)}, {"q", 2}, {"seed", 3}, {"steps", 10}};
    const auto r = post("/api/hunt/step", body);
    REQUIRE(r.status == 200);
    CHECK(r.body["trace"].size() == 10);
    CHECK(r.body["best_count"] <= r.body["count"]);
    CHECK(r.body["best_count"] >= 1);
    CHECK(post("/api/hunt/step", body).body == r.body);

    auto more = body;
    more["steps"] = 20000;
    CHECK(post("/api/hunt/step", more).status == 422);
    more["steps"] = 5;
    more["seed"] = -1;
    CHECK(post("/api/hunt/step", more).status == 400);
    more["seed"] = 1;
    more["pinned"] = {0, 1, 2, 3};
    const auto pinned = post("/api/hunt/step", more);
    REQUIRE(pinned.status == 200);
    CHECK(pinned.body["drawing"]["positions"] == body["drawing"]["positions"]);
}

TEST_CASE("routing and purity") {
    CHECK(handle({"GET", "/api/nothing", {}, {}}).status == 404);
    CHECK(handle({"GET", "/api/winding/enumerate", {}, {}}).status == 404);
    CHECK(handle({"DELETE", "/api/bounds", {}, {}}).body["error"]["kind"] == "NotFound");
    const ServiceRequest req{"POST", "/api/winding/enumerate", {}, json{{"drawing", alt(7)}, {"q", 3}}.dump()};
    CHECK(handle(req).body.dump() == handle(req).body.dump());
    CHECK(handle(req, {4}).body.dump() == handle(req).body.dump());
}

TEST_CASE("streamed enumeration") {
    std::vector<std::string> lines;
    const auto r = stream_enumerate(json{{"drawing", alt(7)}, {"q", 3}}.dump(), {}, [&](const std::string& l) {
        lines.push_back(l);
        return true;
    });
    CHECK(r.status == 200);
    REQUIRE(lines.size() >= 2);
    CHECK(json::parse(lines.front()).contains("progress"));
    CHECK(json::parse(lines.back()) == r.body);
    CHECK(r.body["count"] == 4);

    lines.clear();
    const auto bad = stream_enumerate("{}", {}, [&](const std::string& l) {
        lines.push_back(l);
        return true;
    });
    CHECK(bad.status == 400);
    CHECK(lines.empty());
}

TEST_CASE("HTTP front end") {
    HttpService svc({"127.0.0.1", 0, {}});
    const int port = svc.bind();
    REQUIRE(port > 0);
    std::thread th([&] { svc.listen(); });

    httplib::Client cli("127.0.0.1", port);
    cli.set_read_timeout(60, 0);
    auto b = cli.Get("/api/bounds?d=2&q=3");
    REQUIRE(b);
    CHECK(b->status == 200);
    CHECK(b->has_header("X-Compute-Time-Ms"));
    CHECK(json::parse(b->body)["sierksma"] == "4");

    const std::string body = json{{"drawing", alt(7)}, {"q", 3}}.dump();
    auto e = cli.Post("/api/winding/enumerate", body, "application/json");
    REQUIRE(e);
    CHECK(e->status == 200);
    CHECK(json::parse(e->body)["count"] == 4);

    auto s = cli.Post("/api/winding/enumerate?stream=1", body, "application/json");
    REQUIRE(s);
    CHECK(s->status == 200);
    std::istringstream in(s->body);
    std::string line, last;
    int n = 0;
    while (std::getline(in, line)) {
        last = line;
        ++n;
    }
    CHECK(n >= 2);
    CHECK(json::parse(last)["count"] == 4);

    auto bad = cli.Post("/api/winding/enumerate?stream=1", "{\"q\":3}", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);

    auto nf = cli.Get("/api/unknown");
    REQUIRE(nf);
    CHECK(nf->status == 404);

    svc.stop();
    th.join();
}
