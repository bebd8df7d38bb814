/*
Copyright 2026 The ehrelay Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <doctest.h>

#include <string>

#include "ehrelay/scenario_io.hpp"

using namespace ehrelay;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        (void)parse_scenario(text, "case.json");
    } catch (const ScenarioParseError& e) {
        CHECK(std::string(e.what()).rfind("case.json:" + std::to_string(e.line()) + ": ", 0) == 0);
        return e.line();
    }
    FAIL("expected a parse error");
    return 0;
}

}  // namespace

TEST_CASE("parse a half-duplex document") {
    const auto s = load_scenario(EHRELAY_SCENARIO_DIR "/example_half_duplex.json");
    CHECK(s.horizon == 11.0);
    CHECK(s.mode == RelayMode::HalfDuplex);
    CHECK(s.source.total() == 10.0);
    REQUIRE(s.relay.arrivals().size() == 3);
    CHECK(s.relay.arrivals()[1] == EnergyArrival{7.0, 5.0});
    CHECK(s.relay_rate.gain() == 1.0);
}

TEST_CASE("defaults and round trip") {
    const auto s = parse_scenario(R"({"T": 2, "h_s": 2, "h_r": 0.5, "source": {}, "relay": {}})");
    CHECK(s.mode == RelayMode::FullDuplex);
    CHECK(s.source.empty());
    CHECK(s.source_rate.log_base() == 2.0);

    const auto p = load_scenario(EHRELAY_SCENARIO_DIR "/example_half_duplex.json");
    const auto q = parse_scenario(scenario_to_json(p));
    CHECK(q.horizon == p.horizon);
    CHECK(q.mode == p.mode);
    CHECK(std::equal(q.relay.arrivals().begin(), q.relay.arrivals().end(), p.relay.arrivals().begin()));
    CHECK(q.source_rate.gain() == p.source_rate.gain());
}

TEST_CASE("errors carry the offending line") {
    CHECK(error_line("{\n\"T\": 3,\n\"h_s\": 1,\n\"h_r\": 1,\n\"source\": {\"arrivals\": [\n"
                     "{\"t\": 1, \"E\": 1},\n{\"t\": 0.5, \"E\": 1}]},\n\"relay\": {}}") == 7);
    CHECK(error_line("{\n\"T\": 3,\n\"h_s\": 1,\n\"h_r\": 1,\n\"source\": {},\n"
                     "\"relay\": {\"arrivals\": [{\"t\": 0,\n \"E\": -2}]}}") == 7);
    CHECK(error_line("{\n\"T\": 3,\n\"h_s\": 1,\n\"h_r\": 1,\n\"source\": {\"arrivals\": [{\"t\": 3, \"E\": 1}]},\n"
                     "\"relay\": {}}") == 5);
    CHECK(error_line("{\n\"T\": 3,\n\"h_s\": 1,\n\"h_r\": \"one\",\n\"source\": {},\n\"relay\": {}}") == 4);
    CHECK(error_line("{\n\"T\": 3,\n\"mode\": \"simplex\",\n\"h_s\": 1,\n\"h_r\": 1,\n\"source\": {},\n\"relay\": {}}") == 3);
    CHECK(error_line("{\n\"T\": 3,\n\"h_s\": 1,\n\"h_r\": 1,\n\"source\": {\n\"arrivals\": [{\"t\": 0}]}\n,\"relay\": {}}") == 6);
    CHECK(error_line("{\n\"T\": 3,\n\"h_s\": 1,\n\"h_r\": 1,\n\"source\": {}\n\"relay\": {}}") == 6);
    CHECK(error_line("{\n\"T\": -1,\n\"h_s\": 1,\n\"h_r\": 1,\n\"source\": {},\n\"relay\": {}}") == 2);
}

TEST_CASE("malformed example file") {
    try {
        (void)load_scenario(EHRELAY_SCENARIO_DIR "/bad_unsorted.json");
        FAIL("expected a parse error");
    } catch (const ScenarioParseError& e) {
        CHECK(e.line() == 11);
        CHECK(std::string(e.what()).find("sorted") != std::string::npos);
    }
    CHECK_THROWS_AS((void)load_scenario("/nonexistent/scenario.json"), ScenarioParseError);
}
