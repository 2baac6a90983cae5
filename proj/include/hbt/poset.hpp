#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "bruhat.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "json_io.hpp"

namespace hbt {

// Finite poset given by its cover relation. Keys are canonical element strings.
class HasseDiagram {
public:
    HasseDiagram() = default;

    // Throws input_error on duplicate keys, bad indices, cycles, or a cover
    // edge that is implied by a longer path.
    HasseDiagram(std::string kind, std::vector<std::string> keys, std::vector<std::pair<int, int>> covers)
        : kind_(std::move(kind)), keys_(std::move(keys)) {
        int m = size();
        for (int i = 0; i < m; ++i)
            if (!index_.emplace(keys_[i], i).second) throw input_error("hasse: duplicate element " + keys_[i]);
        up_.assign(m, {});
        down_.assign(m, {});
        std::sort(covers.begin(), covers.end());
        covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
        for (auto [a, b] : covers) {
            if (a < 0 || b < 0 || a >= m || b >= m) throw input_error("hasse: cover index out of range");
            if (a == b) throw input_error("hasse: element covers itself");
            up_[a].push_back(b);
            down_[b].push_back(a);
        }
        topo_order();
        // above_[i]: every j with i <= j
        above_.assign(m, BitVec(m));
        for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
            int i = *it;
            above_[i].set(i);
            for (int j : up_[i]) above_[i] |= above_[j];
        }
        for (int i = 0; i < m; ++i)
            for (int j : up_[i])
                for (int k : up_[i])
                    if (k != j && above_[k].test(j))
                        throw input_error("hasse: cover " + std::to_string(i) + "->" + std::to_string(j) +
                                          " is implied by a longer chain");
    }

    const std::string& kind() const { return kind_; }
    int size() const { return static_cast<int>(keys_.size()); }
    const std::vector<std::string>& keys() const { return keys_; }
    const std::string& key(int i) const { return keys_.at(i); }
    const std::vector<int>& up(int i) const { return up_.at(i); }
    const std::vector<int>& down(int i) const { return down_.at(i); }
    const std::vector<int>& topological_order() const { return topo_; }

    int index_of(const std::string& key) const {
        auto it = index_.find(key);
        return it == index_.end() ? -1 : it->second;
    }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (auto& u : up_) e += u.size();
        return e;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < size(); ++i)
            for (int j : up_[i]) out.push_back({i, j});
        std::sort(out.begin(), out.end());
        return out;
    }

    bool leq(int a, int b) const { return above_.at(a).test(b); }

    std::vector<int> sources() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (down_[i].empty()) out.push_back(i);
        return out;
    }
    std::vector<int> sinks() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (up_[i].empty()) out.push_back(i);
        return out;
    }

    // Elements z with a <= z <= b, in topological order.
    std::vector<int> interval(int a, int b) const {
        std::vector<int> out;
        for (int z : topo_)
            if (leq(a, z) && leq(z, b)) out.push_back(z);
        return out;
    }

    // The dual poset.
    HasseDiagram reversed() const {
        std::vector<std::pair<int, int>> e;
        for (auto [a, b] : edges()) e.push_back({b, a});
        return HasseDiagram(kind_, keys_, e);
    }

    friend bool operator==(const HasseDiagram& a, const HasseDiagram& b) {
        return a.kind_ == b.kind_ && a.keys_ == b.keys_ && a.edges() == b.edges();
    }

private:
    void topo_order() {
        int m = size();
        std::vector<int> indeg(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j : up_[i]) ++indeg[j];
        std::vector<int> q;
        for (int i = m - 1; i >= 0; --i)
            if (indeg[i] == 0) q.push_back(i);
        while (!q.empty()) {
            int a = q.back();
            q.pop_back();
            topo_.push_back(a);
            for (int b : up_[a])
                if (--indeg[b] == 0) q.push_back(b);
        }
        if (static_cast<int>(topo_.size()) != m) throw input_error("hasse: cover relation has a cycle");
    }

    std::string kind_;
    std::vector<std::string> keys_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<int> topo_;
    std::vector<BitVec> above_;
};

// From elements and a function listing the upper covers of each element.
template <class T, class CoverFn, class KeyFn>
HasseDiagram build_hasse(const std::string& kind, const std::vector<T>& elems, CoverFn covers, KeyFn key) {
    std::vector<std::string> keys;
    std::map<std::string, int> at;
    for (const auto& e : elems) {
        keys.push_back(key(e));
        at.emplace(keys.back(), static_cast<int>(keys.size()) - 1);
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& c : covers(elems[i])) {
            auto it = at.find(key(c));
            if (it == at.end()) throw input_error("build_hasse: cover lies outside the element list");
            edges.push_back({static_cast<int>(i), it->second});
        }
    return HasseDiagram(kind, std::move(keys), std::move(edges));
}

inline HasseDiagram bruhat_hasse(const std::vector<BruhatElement>& elems) {
    return build_hasse(
        "bruhat", elems, [](const BruhatElement& e) { return covers_up(e); },
        [](const BruhatElement& e) { return element_key(e); });
}

inline HasseDiagram tamari_hasse(const std::vector<Triangulation>& elems) {
    return build_hasse(
        "tamari", elems, [](const Triangulation& t) { return covers_up(t); },
        [](const Triangulation& t) { return element_key(t); });
}

// mu(a,b) over the interval [a,b].
inline long long moebius(const HasseDiagram& h, int a, int b) {
    if (a < 0 || b < 0 || a >= h.size() || b >= h.size()) throw input_error("moebius: index out of range");
    if (!h.leq(a, b)) throw input_error("moebius: elements are not comparable as a <= b");
    std::unordered_map<int, long long> mu;
    for (int z : h.interval(a, b)) {
        if (z == a) {
            mu[z] = 1;
            continue;
        }
        long long s = 0;
        for (auto& [y, v] : mu)
            if (h.leq(y, z)) s += v;
        mu[z] = -s;
    }
    return mu[b];
}

// Covers (i, j) of src whose images are not <= in dst. `image[i]` is the
// dst key of src element i.
inline std::vector<std::pair<int, int>> check_monotone(const std::vector<std::string>& image, const HasseDiagram& src,
                                                       const HasseDiagram& dst) {
    if (static_cast<int>(image.size()) != src.size()) throw input_error("check_monotone: map is not total");
    std::vector<int> img;
    for (const auto& k : image) {
        int j = dst.index_of(k);
        if (j < 0) throw input_error("check_monotone: image element missing from target: " + k);
        img.push_back(j);
    }
    std::vector<std::pair<int, int>> bad;
    for (auto [a, b] : src.edges())
        if (!dst.leq(img[a], img[b])) bad.push_back({a, b});
    return bad;
}

template <class Fn>
std::vector<std::pair<int, int>> check_monotone(Fn map_fn, const HasseDiagram& src, const HasseDiagram& dst) {
    std::vector<std::string> image;
    for (int i = 0; i < src.size(); ++i) image.push_back(map_fn(i));
    return check_monotone(image, src, dst);
}

// ---- export / import ------------------------------------------------------

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline std::string export_dot(const HasseDiagram& h, const std::function<std::string(int)>& label = {}) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (int i = 0; i < h.size(); ++i)
        os << "  n" << i << " [label=\"" << dot_escape(label ? label(i) : h.key(i)) << "\"];\n";
    for (auto [a, b] : h.edges()) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

inline Json hasse_to_json(const HasseDiagram& h) {
    Json j;
    j["kind"] = h.kind();
    Json el = Json::array();
    for (const auto& k : h.keys()) el.push_back(Json::parse(k));
    j["elements"] = el;
    Json cv = Json::array();
    for (auto [a, b] : h.edges()) cv.push_back({a, b});
    j["covers"] = cv;
    return j;
}

inline std::string export_json(const HasseDiagram& h) { return hasse_to_json(h).dump(2) + "\n"; }

inline HasseDiagram hasse_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw input_error("hasse JSON: need elements and covers");
    std::vector<std::string> keys;
    for (const auto& e : j["elements"]) keys.push_back(e.dump());
    std::vector<std::pair<int, int>> edges;
    for (const auto& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2) throw input_error("hasse JSON: covers must be index pairs");
        edges.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return HasseDiagram(j.value("kind", ""), std::move(keys), std::move(edges));
}

}  // namespace hbt
