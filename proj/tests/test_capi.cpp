#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "eqmirror.h"

using json = nlohmann::json;

namespace {

struct Session {
    eqm_session* s = eqm_session_new();
    ~Session() { eqm_session_free(s); }
    std::pair<int, json> run(const json& req) {
        const char* resp = nullptr;
        int rc = eqm_run(s, req.dump().c_str(), &resp);
        return {rc, resp ? json::parse(resp) : json()};
    }
};

} // namespace

TEST_CASE("closed-form request round-trips") {
    Session s;
    auto [rc, doc] = s.run({{"cmd", "closed-form"}, {"kind", "xi1"}, {"order", 3}});
    CHECK(rc == EQM_OK);
    CHECK(doc["text"] == "x - 7/4 x^2 + 55/9 x^3");
    REQUIRE(doc.contains("series"));
    // structured payload feeds back into compare unchanged
    json cmp = {{"cmd", "compare"}, {"a", {{"series", doc["series"]}}},
                {"b", {{"series", doc["series"]}}}};
    auto [rc2, doc2] = s.run(cmp);
    CHECK(rc2 == EQM_OK);
    CHECK(doc2["equal"] == true);
}

TEST_CASE("localization request") {
    Session s;
    auto [rc, doc] = s.run({{"cmd", "localize"}, {"dmax", 1}});
    CHECK(rc == EQM_OK);
    CHECK(doc["text"] == "(x1 + x2 + x3) w");
}

TEST_CASE("error paths") {
    Session s;
    auto [rc, doc] = s.run({{"cmd", "no-such-command"}});
    CHECK(rc == EQM_USAGE);
    CHECK(doc.contains("error"));
    const char* resp = nullptr;
    CHECK(eqm_run(nullptr, "{}", &resp) == EQM_BADHANDLE);
    CHECK(eqm_run(s.s, "not json", &resp) == EQM_USAGE);
    CHECK(std::string(eqm_last_error(s.s)).size() > 0);
    // mismatch surfaces as its own code
    json cmp = {{"cmd", "compare"},
                {"a", {{"series", {{"coeffs", {"0", "1"}}}}}},
                {"b", {{"series", {{"coeffs", {"0", "2"}}}}}}};
    auto [rc2, doc2] = s.run(cmp);
    CHECK(rc2 == EQM_MISMATCH);
}

TEST_CASE("version string") {
    CHECK(std::string(eqm_version()).size() > 0);
}
