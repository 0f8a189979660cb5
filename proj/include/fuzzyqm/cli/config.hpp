#pragma once

// Run configuration for the command-line driver. A config is a JSON object;
// user files and overrides are merged on top of per-experiment defaults, and
// the merged document is validated as a whole before anything runs.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fuzzyqm/classical/potential.hpp"
#include "fuzzyqm/core/error.hpp"

namespace fuzzyqm::cli {

using json = nlohmann::ordered_json;

inline constexpr std::array<std::string_view, 8> kExperiments{
    "dispersion", "plane-wave-check", "slit", "classical-limit",
    "ehrenfest",  "least-action",     "subsethood", "simplex"};

inline bool is_experiment(std::string_view name) {
    return std::find(kExperiments.begin(), kExperiments.end(), name) != kExperiments.end();
}

// Thrown for malformed configuration text; carries a line/column position.
class ParseError : public ConfigurationError {
public:
    using ConfigurationError::ConfigurationError;
};

inline json default_config(std::string_view experiment) {
    const double two_pi = 2.0 * std::numbers::pi;
    json c;
    c["experiment"] = experiment;
    c["seed"] = 42;
    c["output_dir"] = "out/" + std::string(experiment);
    c["scales"] = {{"L0", 1.0}, {"t0", 1.0}, {"mass", 1.0}, {"hbar", 1.0}};

    if (experiment == "dispersion") {
        c["grid"] = {{"x_min", 0.0}, {"x_max", two_pi}, {"n", 16385}};
        c["solver"] = {{"dt", 2e-4}, {"steps", 500}};
        c["sweep"] = {{"k", {1.0, 2.0, 3.0}}};
        c["tolerance"] = 1e-6;
    } else if (experiment == "plane-wave-check") {
        c["grid"] = {{"x_min", 0.0}, {"x_max", two_pi}, {"n", 16385}};
        c["solver"] = {{"dt", 1e-5}};
        c["sweep"] = {{"k", {1.0, 2.0}}, {"t", 0.3}};
        c["tolerance"] = 1e-6;
        c["nonlinear_threshold"] = 1e-2;
        c["debroglie_tolerance"] = 1e-8;
    } else if (experiment == "slit") {
        c["slit"] = {{"T", 1.0}, {"b", 1.0}, {"x0", 1.0}, {"v0", nullptr}};
        c["grid"] = {{"n", 8001}};
        c["solver"] = {{"dt", 1e-3}, {"t_end", 2.0}, {"report_every", 250}};
        c["sweep"] = {{"b", {1.0, 0.5, 0.25, 0.125, 0.0625}}, {"hbar_over_b", 1.0}, {"t", 1.0}};
        c["tolerance"] = 1e-3;
    } else if (experiment == "classical-limit") {
        c["grid"] = {{"x_min", -6.0}, {"x_max", 6.0}, {"n", 30001}};
        c["solver"] = {{"dt", 2e-4}, {"steps", 2500}, {"boundary", "reflecting"}};
        c["potential"] = {{"kind", "zero"}};
        c["family"] = {{"sigma", 1.0}, {"center", -1.0}, {"momentum", 1.0}};
        c["sweep"] = {{"h", {1.0, 0.1, 0.01}}};
        c["center_tolerance"] = 1e-2;
    } else if (experiment == "ehrenfest") {
        c["grid"] = {{"x_min", -12.0}, {"x_max", 12.0}, {"n", 2001}};
        c["solver"] = {{"dt", 1e-3}, {"steps", 1000}, {"report_every", 50}};
        c["potential"] = {{"kind", "harmonic"}, {"omega", 1.0}, {"center", 0.0}};
        c["packet"] = {{"x0", 2.0}, {"sigma", 0.8}, {"p0", 0.0}};
        c["tolerance"] = 1e-2;
        c["route_tolerance"] = 1e-6;
    } else if (experiment == "least-action") {
        c["path"] = {{"x_start", 0.0}, {"x_end", 1.0}, {"t0", 0.0}, {"t1", 1.0}, {"steps", 64}};
        c["ensemble"] = {{"count", 1000}, {"spread", 0.3}};
        c["refine"] = {{"iterations", 600}, {"step", 1.9}};
        c["potential"] = {{"kind", "zero"}};
        c["tolerance"] = 1e-3;
    } else if (experiment == "subsethood") {
        c["slit"] = {{"T", 1.0}, {"b", 1.0}, {"x0", 1.0}, {"v0", nullptr}};
        c["grid"] = {{"n", 4001}};
        c["sweep"] = {{"t", 1.0}, {"bins", 20}, {"trials", 100000}, {"span", 2.5}};
        c["p_threshold"] = 1e-3;
    } else if (experiment == "simplex") {
        c["grid"] = {{"x_min", -10.0}, {"x_max", 10.0}, {"n", 4001}};
        c["packet"] = {{"x0", 0.5}, {"sigma", 1.0}, {"p0", 1.0}};
        c["modes"] = 50;
        c["capture_threshold"] = 0.999;
    }
    return c;
}

// 1-based line and column of a byte offset, for parse diagnostics.
inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline json parse_config_text(std::string_view text, std::string_view origin) {
    try {
        json j = json::parse(text.begin(), text.end());
        if (!j.is_object()) throw ParseError(std::string(origin) + ": top level must be an object");
        return j;
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        // drop the library's "[json.exception...] parse error at line L, column C: " prefix
        if (auto p = what.find("column"); p != std::string::npos) {
            if (auto q = what.find(": ", p); q != std::string::npos) what = what.substr(q + 2);
        }
        throw ParseError(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": " + what);
    }
}

// Splits "a.b.c" into a JSON pointer.
inline json::json_pointer dotted_pointer(std::string_view key) {
    std::string p;
    std::size_t start = 0;
    while (start <= key.size()) {
        const auto dot = key.find('.', start);
        const auto part = key.substr(start, dot == std::string_view::npos ? key.size() - start : dot - start);
        if (part.empty()) throw ConfigurationError("malformed override key '" + std::string(key) + "'");
        p += "/" + std::string(part);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return json::json_pointer(p);
}

// key=value with value parsed as JSON when possible, else taken as a string.
inline void apply_override(json& config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw ConfigurationError("override '" + std::string(assignment) + "' is not key=value");
    }
    const auto key = assignment.substr(0, eq);
    const std::string raw(assignment.substr(eq + 1));
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;
    config[dotted_pointer(key)] = std::move(value);
}

// "1,0.1,0.01" -> [1, 0.1, 0.01]
inline json parse_number_list(std::string_view text) {
    json out = json::array();
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item(text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start));
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw ConfigurationError("'" + std::string(text) + "' is not a comma-separated list of numbers");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace detail {

inline std::string kind_of(const json& j) {
    if (j.is_null()) return "null";
    if (j.is_boolean()) return "boolean";
    if (j.is_number()) return "number";
    if (j.is_string()) return "string";
    if (j.is_array()) return "array";
    return "object";
}

// Walks `given` against the shape of `reference`: unknown keys and kind
// mismatches become findings. A null default accepts null or a number.
inline void shape_findings(const json& given, const json& reference, const std::string& path,
                           std::vector<std::string>& out) {
    for (auto it = given.begin(); it != given.end(); ++it) {
        const std::string here = path.empty() ? it.key() : path + "." + it.key();
        if (!reference.contains(it.key())) {
            out.push_back(here + ": unknown key");
            continue;
        }
        const json& ref = reference.at(it.key());
        const json& val = it.value();
        if (here == "potential") continue;  // checked separately, its keys depend on the kind
        if (ref.is_null()) {
            if (!val.is_null() && !val.is_number()) out.push_back(here + ": expected a number or null");
            continue;
        }
        if (kind_of(ref) != kind_of(val)) {
            out.push_back(here + ": expected " + kind_of(ref) + ", got " + kind_of(val));
            continue;
        }
        if (ref.is_object()) shape_findings(val, ref, here, out);
        if (ref.is_array()) {
            for (const auto& e : val) {
                if (!e.is_number()) {
                    out.push_back(here + ": list entries must be numbers");
                    break;
                }
            }
        }
    }
}

inline std::optional<double> number_at(const json& c, const char* pointer) {
    const json::json_pointer p(pointer);
    if (!c.contains(p) || !c.at(p).is_number()) return std::nullopt;
    return c.at(p).get<double>();
}

inline std::string key_of(const char* pointer) {
    std::string k(pointer + 1);
    std::replace(k.begin(), k.end(), '/', '.');
    return k;
}

inline void positive(const json& c, const char* p, std::vector<std::string>& out) {
    if (auto v = number_at(c, p); v && !(std::isfinite(*v) && *v > 0.0)) out.push_back(key_of(p) + " must be > 0");
}

inline void nonnegative(const json& c, const char* p, std::vector<std::string>& out) {
    if (auto v = number_at(c, p); v && !(std::isfinite(*v) && *v >= 0.0)) out.push_back(key_of(p) + " must be >= 0");
}

inline void finite(const json& c, const char* p, std::vector<std::string>& out) {
    if (auto v = number_at(c, p); v && !std::isfinite(*v)) out.push_back(key_of(p) + " must be finite");
}

inline void integer_at_least(const json& c, const char* p, long long lo, std::vector<std::string>& out) {
    const json::json_pointer ptr(p);
    if (!c.contains(ptr) || !c.at(ptr).is_number()) return;
    const json& v = c.at(ptr);
    const double d = v.get<double>();
    if (!v.is_number_integer() || d < static_cast<double>(lo)) {
        out.push_back(key_of(p) + " must be an integer >= " + std::to_string(lo));
    }
}

inline void list_nonempty(const json& c, const char* p, std::vector<std::string>& out) {
    const json::json_pointer ptr(p);
    if (c.contains(ptr) && c.at(ptr).is_array() && c.at(ptr).empty()) out.push_back(key_of(p) + " must not be empty");
}

inline void potential_findings(const json& c, std::vector<std::string>& out) {
    if (!c.contains("potential")) return;
    const json& p = c.at("potential");
    if (!p.is_object() || !p.contains("kind") || !p.at("kind").is_string()) {
        out.emplace_back("potential: expected an object with a string 'kind'");
        return;
    }
    const auto kind = p.at("kind").get<std::string>();
    auto allow = [&](std::initializer_list<const char*> keys) {
        for (auto it = p.begin(); it != p.end(); ++it) {
            if (it.key() == "kind") continue;
            if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; })) {
                out.push_back("potential." + it.key() + ": unknown key for kind '" + kind + "'");
            }
        }
    };
    auto number = [&](const char* key, bool required) {
        if (!p.contains(key)) {
            if (required) out.push_back(std::string("potential.") + key + " is required for kind '" + kind + "'");
            return;
        }
        if (!p.at(key).is_number() || !std::isfinite(p.at(key).get<double>())) {
            out.push_back(std::string("potential.") + key + " must be a finite number");
        }
    };
    if (kind == "zero") {
        allow({});
    } else if (kind == "constant") {
        allow({"value"});
        number("value", true);
    } else if (kind == "harmonic") {
        allow({"omega", "center"});
        number("omega", true);
        number("center", false);
    } else if (kind == "piecewise") {
        allow({"intervals"});
        if (!p.contains("intervals") || !p.at("intervals").is_array()) {
            out.emplace_back("potential.intervals must be a list of [x_lo, x_hi, value] triples");
            return;
        }
        std::vector<PotentialInterval> ivs;
        for (const auto& t : p.at("intervals")) {
            if (!t.is_array() || t.size() != 3 || !t[0].is_number() || !t[1].is_number() || !t[2].is_number()) {
                out.emplace_back("potential.intervals entries must be [x_lo, x_hi, value] triples");
                return;
            }
            ivs.push_back({t[0].get<double>(), t[1].get<double>(), t[2].get<double>()});
        }
        for (auto& f : Potential::validate_intervals(ivs)) out.push_back("potential: " + f);
    } else {
        out.push_back("potential.kind: unknown kind '" + kind + "' (zero, constant, harmonic, piecewise)");
    }
}

inline bool strictly_decreasing(const json& list) {
    for (std::size_t i = 1; i < list.size(); ++i) {
        if (!(list[i].get<double>() < list[i - 1].get<double>())) return false;
    }
    return true;
}

}  // namespace detail

// Every problem with a merged config; empty means it can run.
inline std::vector<std::string> validate(const json& c) {
    using namespace detail;
    std::vector<std::string> out;
    if (!c.is_object()) return {"config must be a JSON object"};
    if (!c.contains("experiment") || !c.at("experiment").is_string()) return {"experiment: missing or not a string"};
    const auto name = c.at("experiment").get<std::string>();
    if (!is_experiment(name)) return {"experiment: unknown experiment '" + name + "'"};
    const json ref = default_config(name);
    shape_findings(c, ref, "", out);

    for (const char* p : {"/scales/L0", "/scales/t0", "/scales/mass", "/scales/hbar"}) positive(c, p, out);
    integer_at_least(c, "/seed", 0, out);
    if (c.contains("output_dir") && c.at("output_dir").is_string() && c.at("output_dir").get<std::string>().empty()) {
        out.emplace_back("output_dir must not be empty");
    }
    if (c.contains("/grid/x_min"_json_pointer) && c.contains("/grid/x_max"_json_pointer)) {
        const auto lo = number_at(c, "/grid/x_min"), hi = number_at(c, "/grid/x_max");
        if (lo && hi && !(std::isfinite(*lo) && std::isfinite(*hi) && *hi > *lo)) {
            out.emplace_back("grid: x_max must be greater than x_min");
        }
    }
    integer_at_least(c, "/grid/n", 3, out);
    positive(c, "/solver/dt", out);
    integer_at_least(c, "/solver/steps", name == "dispersion" ? 2 : 1, out);
    integer_at_least(c, "/solver/report_every", 1, out);
    positive(c, "/solver/t_end", out);
    if (c.contains("/solver/boundary"_json_pointer) && c.at("/solver/boundary"_json_pointer).is_string()) {
        const auto b = c.at("/solver/boundary"_json_pointer).get<std::string>();
        if (b != "reflecting" && b != "periodic") out.emplace_back("solver.boundary must be 'reflecting' or 'periodic'");
    }
    potential_findings(c, out);
    for (const char* p : {"/tolerance", "/route_tolerance", "/nonlinear_threshold", "/debroglie_tolerance", "/center_tolerance", "/p_threshold"}) {
        positive(c, p, out);
    }

    if (name == "dispersion" || name == "plane-wave-check") {
        list_nonempty(c, "/sweep/k", out);
        nonnegative(c, "/sweep/t", out);
        const auto lo = number_at(c, "/grid/x_min"), hi = number_at(c, "/grid/x_max");
        const json::json_pointer kp("/sweep/k");
        if (lo && hi && *hi > *lo && c.contains(kp) && c.at(kp).is_array()) {
            for (const auto& k : c.at(kp)) {
                if (!k.is_number()) continue;
                // the periodic cell must hold a whole number of wavelengths
                const double cycles = k.get<double>() * (*hi - *lo) / (2.0 * std::numbers::pi);
                if (std::abs(cycles - std::round(cycles)) > 1e-9 * std::max(1.0, std::abs(cycles))) {
                    out.push_back("sweep.k entry " + k.dump() + " does not fit a whole number of wavelengths in the grid");
                }
            }
        }
        if (name == "plane-wave-check" && c.contains("/sweep/k"_json_pointer) && c.at("/sweep/k"_json_pointer).is_array() &&
            c.at("/sweep/k"_json_pointer).size() < 2) {
            out.emplace_back("sweep.k needs at least two wavenumbers for the superposition case");
        }
    }
    if (name == "slit" || name == "subsethood") {
        positive(c, "/slit/T", out);
        positive(c, "/slit/b", out);
        finite(c, "/slit/x0", out);
        finite(c, "/slit/v0", out);
        positive(c, "/sweep/t", out);
    }
    if (name == "slit") {
        list_nonempty(c, "/sweep/b", out);
        nonnegative(c, "/sweep/hbar_over_b", out);
        if (c.contains("/sweep/b"_json_pointer) && c.at("/sweep/b"_json_pointer).is_array()) {
            const json& b = c.at("/sweep/b"_json_pointer);
            if (std::all_of(b.begin(), b.end(), [](const json& v) { return v.is_number(); })) {
                if (std::any_of(b.begin(), b.end(), [](const json& v) { return !(v.get<double>() > 0.0); })) {
                    out.emplace_back("sweep.b entries must be > 0");
                }
                if (!strictly_decreasing(b)) out.emplace_back("sweep.b must be strictly decreasing");
            }
        }
    }
    if (name == "subsethood") {
        integer_at_least(c, "/sweep/bins", 2, out);
        integer_at_least(c, "/sweep/trials", 1, out);
        positive(c, "/sweep/span", out);
    }
    if (name == "classical-limit") {
        list_nonempty(c, "/sweep/h", out);
        if (c.contains("/sweep/h"_json_pointer) && c.at("/sweep/h"_json_pointer).is_array()) {
            const json& h = c.at("/sweep/h"_json_pointer);
            if (std::all_of(h.begin(), h.end(), [](const json& v) { return v.is_number(); })) {
                if (std::any_of(h.begin(), h.end(), [](const json& v) { return !(v.get<double>() > 0.0); })) {
                    out.emplace_back("sweep.h entries must be > 0");
                }
                if (!strictly_decreasing(h)) out.emplace_back("sweep.h must be strictly decreasing");
            }
        }
        positive(c, "/family/sigma", out);
        finite(c, "/family/center", out);
        finite(c, "/family/momentum", out);
    }
    if (name == "ehrenfest" || name == "simplex") {
        finite(c, "/packet/x0", out);
        positive(c, "/packet/sigma", out);
        finite(c, "/packet/p0", out);
    }
    if (name == "least-action") {
        finite(c, "/path/x_start", out);
        finite(c, "/path/x_end", out);
        const auto t0 = number_at(c, "/path/t0"), t1 = number_at(c, "/path/t1");
        if (t0 && t1 && !(std::isfinite(*t0) && std::isfinite(*t1) && *t1 > *t0)) out.emplace_back("path: t1 must be greater than t0");
        integer_at_least(c, "/path/steps", 2, out);
        integer_at_least(c, "/ensemble/count", 1, out);
        nonnegative(c, "/ensemble/spread", out);
        integer_at_least(c, "/refine/iterations", 0, out);
        positive(c, "/refine/step", out);
        if (auto s = number_at(c, "/refine/step"); s && *s >= 2.0) out.emplace_back("refine.step must be < 2");
    }
    if (name == "simplex") {
        integer_at_least(c, "/modes", 1, out);
        if (auto n = number_at(c, "/grid/n"), m = number_at(c, "/modes"); n && m && *m >= *n - 1) {
            out.emplace_back("modes must be smaller than grid.n - 1");
        }
        positive(c, "/capture_threshold", out);
    }
    return out;
}

// Potential described by a validated config object.
inline Potential potential_from(const json& p, double mass) {
    const auto kind = p.at("kind").get<std::string>();
    if (kind == "constant") return Potential::constant(p.at("value").get<double>());
    if (kind == "harmonic") return Potential::harmonic(mass, p.at("omega").get<double>(), p.value("center", 0.0));
    if (kind == "piecewise") {
        std::vector<PotentialInterval> ivs;
        for (const auto& t : p.at("intervals")) ivs.push_back({t[0].get<double>(), t[1].get<double>(), t[2].get<double>()});
        return Potential::piecewise(std::move(ivs));
    }
    return Potential::zero();
}

// 64-bit FNV-1a of the canonical dump of the config without output_dir, so
// the same experiment written to two places carries the same hash.
inline std::uint64_t config_hash(const json& c) {
    json copy = c;
    copy.erase("output_dir");
    const std::string text = copy.dump();
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

}  // namespace fuzzyqm::cli
