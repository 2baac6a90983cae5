#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "bruhat.hpp"
#include "cyclic.hpp"
#include "errors.hpp"

namespace hbt {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json sets_to_json(const std::vector<LabelSet>& v) {
    Json a = Json::array();
    for (LabelSet s : v) a.push_back(s.elements());
    return a;
}

inline std::vector<LabelSet> sets_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array of arrays");
    std::vector<LabelSet> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw input_error(std::string(what) + " must be an array of arrays");
        std::vector<int> xs;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw input_error(std::string(what) + ": labels must be integers");
            xs.push_back(x.get<int>());
        }
        LabelSet s(xs);
        if (s.size() != static_cast<int>(xs.size())) throw input_error(std::string(what) + ": repeated label");
        out.push_back(s);
    }
    return out;
}

inline int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw input_error(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

}  // namespace detail

inline Json to_json(const BruhatElement& e) {
    Json j;
    j["type"] = "bruhat";
    j["n"] = e.n;
    j["d"] = e.d;
    j["inversions"] = detail::sets_to_json(e.inversions);
    return j;
}

inline Json to_json(const Triangulation& t) {
    Json j;
    j["type"] = "tamari";
    j["labels"] = t.ground.elements();
    j["d"] = t.d;
    j["simplices"] = detail::sets_to_json(t.simplices);
    return j;
}

// Canonical key: the compact JSON text.
inline std::string element_key(const BruhatElement& e) { return to_json(e).dump(); }
inline std::string element_key(const Triangulation& t) { return to_json(t).dump(); }

inline BruhatElement bruhat_from_json(const Json& j) {
    if (!j.is_object() || j.value("type", "") != "bruhat") throw input_error("expected a bruhat element");
    int n = detail::get_int(j, "n"), d = detail::get_int(j, "d");
    if (n < 0 || d < 0 || n > 20) throw input_error("bruhat element: n, d out of range");
    if (!j.contains("inversions")) throw input_error("bruhat element: missing inversions");
    BruhatElement e = make_bruhat(n, d, detail::sets_from_json(j["inversions"], "inversions"));
    if (!is_consistent(e.inversions, n, d)) throw input_error("bruhat element: inversion set is not consistent");
    return e;
}

inline Triangulation tamari_from_json(const Json& j) {
    if (!j.is_object() || j.value("type", "") != "tamari") throw input_error("expected a tamari element");
    int d = detail::get_int(j, "d");
    if (!j.contains("labels") || !j["labels"].is_array()) throw input_error("tamari element: missing labels");
    std::vector<int> labels;
    for (const auto& x : j["labels"]) {
        if (!x.is_number_integer()) throw input_error("tamari element: labels must be integers");
        labels.push_back(x.get<int>());
    }
    LabelSet ground(labels);
    if (ground.size() != static_cast<int>(labels.size())) throw input_error("tamari element: repeated label");
    if (!j.contains("simplices")) throw input_error("tamari element: missing simplices");
    Triangulation t = make_triangulation(ground, d, detail::sets_from_json(j["simplices"], "simplices"));
    if (!is_triangulation(t)) throw input_error("tamari element: not a triangulation of the cyclic polytope");
    return t;
}

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

// "123,124,456" -> {{1,2,3},{1,2,4},{4,5,6}}; single-digit labels only.
inline std::vector<LabelSet> parse_compact_sets(const std::string& text) {
    std::vector<LabelSet> out;
    std::string cur;
    auto flush = [&](bool allow_empty) {
        if (cur.empty()) {
            if (!allow_empty) throw input_error("compact form: empty entry");
            return;
        }
        LabelSet s;
        for (char c : cur) {
            if (c < '0' || c > '9') throw input_error(std::string("compact form: unexpected character '") + c + "'");
            if (s.contains(c - '0')) throw input_error("compact form: repeated label in " + cur);
            s.insert(c - '0');
        }
        out.push_back(s);
        cur.clear();
    };
    bool any = false;
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
        if (c == ',') {
            flush(false);
            any = true;
        } else {
            cur += c;
        }
    }
    flush(!any);
    std::sort(out.begin(), out.end());
    return out;
}

// Inverse of parse_compact_sets for labels below 10.
inline std::string compact_str(const std::vector<LabelSet>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out;
}

}  // namespace hbt
