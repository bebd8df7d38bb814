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

#include "ehrelay/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ehrelay/errors.hpp"

namespace ehrelay {

using nlohmann::json;

ScenarioParseError::ScenarioParseError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line) {}

namespace {

// Input iterator that publishes how many characters the JSON lexer has pulled.
class CountingIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    CountingIterator(const char* pos, std::size_t* consumed) : pos_(pos), consumed_(consumed) {}

    reference operator*() const { return *pos_; }
    CountingIterator& operator++() {
        ++pos_;
        ++*consumed_;
        return *this;
    }
    CountingIterator operator++(int) {
        auto copy = *this;
        ++*this;
        return copy;
    }
    friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.pos_ == b.pos_; }
    friend bool operator!=(const CountingIterator& a, const CountingIterator& b) { return a.pos_ != b.pos_; }

private:
    const char* pos_;
    std::size_t* consumed_;
};

std::size_t line_at(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Records the source line of every value, keyed by JSON pointer.
class LineRecorder {
public:
    LineRecorder(std::string_view text, const std::size_t* consumed) : text_(text), consumed_(consumed) {}

    bool null() { return scalar(); }
    bool boolean(bool) { return scalar(); }
    bool number_integer(json::number_integer_t) { return scalar(); }
    bool number_unsigned(json::number_unsigned_t) { return scalar(); }
    bool number_float(json::number_float_t, const json::string_t&) { return scalar(); }
    bool string(json::string_t&) { return scalar(); }
    bool binary(json::binary_t&) { return scalar(); }
    bool start_object(std::size_t) {
        begin_value();
        frames_.push_back({false, 0, {}});
        return true;
    }
    bool key(json::string_t& k) {
        frames_.back().key = k;
        return true;
    }
    bool end_object() {
        frames_.pop_back();
        end_value();
        return true;
    }
    bool start_array(std::size_t) {
        begin_value();
        frames_.push_back({true, 0, {}});
        return true;
    }
    bool end_array() {
        frames_.pop_back();
        end_value();
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) { return false; }

    std::map<std::string, std::size_t> take() { return std::move(lines_); }

private:
    struct Frame {
        bool array;
        std::size_t index;
        std::string key;
    };

    bool scalar() {
        begin_value();
        end_value();
        return true;
    }

    void begin_value() { lines_[pointer()] = current_line(); }
    void end_value() {
        if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
    }

    std::string pointer() const {
        std::string out;
        for (const auto& f : frames_) {
            out += '/';
            out += f.array ? std::to_string(f.index) : f.key;
        }
        return out;
    }

    // The lexer may have read one character past a number; skip trailing
    // whitespace so a newline lookahead does not bump the line.
    std::size_t current_line() const {
        std::size_t pos = *consumed_;
        while (pos > 0 && (text_[pos - 1] == ' ' || text_[pos - 1] == '\n' || text_[pos - 1] == '\r' ||
                           text_[pos - 1] == '\t')) {
            --pos;
        }
        return line_at(text_, pos == 0 ? 0 : pos - 1);
    }

    std::string_view text_;
    const std::size_t* consumed_;
    std::vector<Frame> frames_;
    std::map<std::string, std::size_t> lines_;
};

class Reader {
public:
    Reader(std::string_view text, std::string source) : source_(std::move(source)) {
        try {
            doc_ = json::parse(text.begin(), text.end());
        } catch (const json::parse_error& e) {
            throw ScenarioParseError(source_, line_at(text, e.byte == 0 ? 0 : e.byte - 1),
                                     strip_prefix(e.what()));
        }
        std::size_t consumed = 0;
        LineRecorder recorder(text, &consumed);
        CountingIterator first(text.data(), &consumed);
        CountingIterator last(text.data() + text.size(), &consumed);
        json::sax_parse(first, last, &recorder);
        lines_ = recorder.take();
    }

    [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
        throw ScenarioParseError(source_, line_of(pointer), message);
    }

    const json& at(const std::string& pointer) const { return doc_.at(json::json_pointer(pointer)); }
    bool has(const std::string& pointer) const { return doc_.contains(json::json_pointer(pointer)); }

    double number(const std::string& pointer, const std::string& name) const {
        if (!has(pointer)) fail(parent(pointer), "missing required field \"" + name + "\"");
        const auto& v = at(pointer);
        if (!v.is_number()) fail(pointer, "field \"" + name + "\" must be a number");
        return v.get<double>();
    }

    double number_or(const std::string& pointer, const std::string& name, double fallback) const {
        return has(pointer) ? number(pointer, name) : fallback;
    }

    std::size_t line_of(std::string pointer) const {
        while (true) {
            if (auto it = lines_.find(pointer); it != lines_.end()) return it->second;
            if (pointer.empty()) return 1;
            pointer = parent(pointer);
        }
    }

private:
    static std::string parent(const std::string& pointer) {
        const auto slash = pointer.rfind('/');
        return slash == std::string::npos ? std::string{} : pointer.substr(0, slash);
    }

    static std::string strip_prefix(const std::string& what) {
        // "[json.exception.parse_error.101] parse error at line 3, column 5: ..."
        const auto colon = what.find(": ");
        return colon == std::string::npos ? what : "JSON syntax error: " + what.substr(colon + 2);
    }

    std::string source_;
    json doc_;
    std::map<std::string, std::size_t> lines_;
};

EnergyArrivalProfile read_profile(const Reader& r, const std::string& node, double horizon) {
    const std::string base = "/" + node;
    if (!r.has(base)) r.fail("", "missing required object \"" + node + "\"");
    if (!r.at(base).is_object()) r.fail(base, "\"" + node + "\" must be an object");
    const std::string arr = base + "/arrivals";
    if (!r.has(arr)) return {};
    if (!r.at(arr).is_array()) r.fail(arr, node + ".arrivals must be an array");

    std::vector<EnergyArrival> out;
    const auto n = r.at(arr).size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::string item = arr + "/" + std::to_string(i);
        const std::string label = node + ".arrivals[" + std::to_string(i) + "]";
        if (!r.at(item).is_object()) r.fail(item, label + " must be an object {\"t\": ..., \"E\": ...}");
        const double t = r.number(item + "/t", "t");
        const double e = r.number(item + "/E", "E");
        std::ostringstream msg;
        if (t < 0.0) {
            msg << label << ".t = " << t << " is negative";
            r.fail(item + "/t", msg.str());
        }
        if (e < 0.0) {
            msg << label << ".E = " << e << " is negative";
            r.fail(item + "/E", msg.str());
        }
        if (!out.empty() && t < out.back().instant) {
            msg << label << ".t = " << t << " is earlier than the previous arrival (" << out.back().instant
                << "); arrivals must be sorted by t";
            r.fail(item + "/t", msg.str());
        }
        if (t >= horizon) {
            msg << label << ".t = " << t << " is not before T = " << horizon;
            r.fail(item + "/t", msg.str());
        }
        out.push_back({t, e});
    }
    return EnergyArrivalProfile(std::move(out));
}

RelayMode read_mode(const Reader& r) {
    if (!r.has("/mode")) return RelayMode::FullDuplex;
    const auto& v = r.at("/mode");
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "full" || s == "full-duplex") return RelayMode::FullDuplex;
        if (s == "half" || s == "half-duplex") return RelayMode::HalfDuplex;
    }
    r.fail("/mode", "mode must be \"full\" or \"half\"");
}

RateFunction read_rate(const Reader& r, const std::string& field, double base) {
    const double h = r.number("/" + field, field);
    if (!(h > 0.0)) r.fail("/" + field, field + " must be positive");
    return RateFunction(h, base);
}

}  // namespace

Scenario parse_scenario(std::string_view text, std::string_view source_name) {
    Reader r(text, std::string(source_name));
    if (!r.at("").is_object()) r.fail("", "scenario must be a JSON object");

    Scenario s;
    s.horizon = r.number("/T", "T");
    if (!(s.horizon > 0.0)) r.fail("/T", "T must be positive");
    s.mode = read_mode(r);
    const double base = r.number_or("/log_base", "log_base", 2.0);
    if (!(base > 1.0)) r.fail("/log_base", "log_base must be > 1");
    s.source_rate = read_rate(r, "h_s", base);
    s.relay_rate = read_rate(r, "h_r", base);
    s.source = read_profile(r, "source", s.horizon);
    s.relay = read_profile(r, "relay", s.horizon);
    s.validate();
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioParseError(path.string(), 0, "cannot open file");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_scenario(text, path.string());
}

std::string scenario_to_json(const Scenario& scenario) {
    auto arrivals = [](const EnergyArrivalProfile& p) {
        json a = json::array();
        for (const auto& x : p.arrivals()) a.push_back({{"t", x.instant}, {"E", x.amount}});
        return a;
    };
    json doc = {
        {"T", scenario.horizon},
        {"mode", scenario.mode == RelayMode::FullDuplex ? "full" : "half"},
        {"log_base", scenario.source_rate.log_base()},
        {"h_s", scenario.source_rate.gain()},
        {"h_r", scenario.relay_rate.gain()},
        {"source", {{"arrivals", arrivals(scenario.source)}}},
        {"relay", {{"arrivals", arrivals(scenario.relay)}}},
    };
    return doc.dump(2);
}

}  // namespace ehrelay
