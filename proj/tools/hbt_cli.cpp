// hbt: enumerate higher Bruhat and higher Stasheff-Tamari posets, apply the
// maps between them, and run the verification suites.

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "hbt/hbt.hpp"

using namespace hbt;

namespace {

enum Exit { kPass = 0, kVerifyFail = 1, kInvalid = 2, kBudget = 3, kAbsent = 4 };

struct Options {
    std::string poset;
    std::string which;
    std::string suite = "all";
    int n = -1;
    int d = -1;
    std::string format = "json";
    std::size_t budget = 10'000'000;
    double budget_seconds = 0;
    std::uint64_t seed = 1;
    std::string element;
    bool use_stdin = false;
    std::string labels;
    std::string lo_elem, hi_elem;
    int max_n = 5;
    int max_d = 3;
};

void need_nd(const Options& o) {
    if (o.n < 0 || o.d < 0) throw input_error("--n and --d are required");
    if (o.n > 63) throw input_error("--n must be at most 63");
}

LabelSet parse_labels(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw input_error("--labels expects a..b");
    try {
        return LabelSet::range(std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2)));
    } catch (const std::logic_error&) {
        throw input_error("--labels expects a..b");
    }
}

std::string payload(const Options& o) {
    if (o.use_stdin) return std::string(std::istreambuf_iterator<char>(std::cin), {});
    if (o.element.empty()) throw input_error("give an element with --element or --stdin");
    return o.element;
}

bool is_json(const std::string& s) {
    auto p = s.find_first_not_of(" \t\r\n");
    return p != std::string::npos && s[p] == '{';
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

BruhatElement read_bruhat(const Options& o, const std::string& text) {
    if (is_json(text)) return bruhat_from_json(parse_json(text));
    need_nd(o);
    auto inv = parse_compact_sets(trim(text));
    if (!is_consistent(inv, o.n, o.d)) throw input_error("inversion set is not consistent");
    return make_bruhat(o.n, o.d, inv);
}

// Compact triangulations live on [1..n] unless --labels (or `ground`) says otherwise.
Triangulation read_tamari(const Options& o, const std::string& text, std::optional<LabelSet> ground = {}) {
    if (is_json(text)) return tamari_from_json(parse_json(text));
    if (o.d < 0) throw input_error("--d is required for compact input");
    LabelSet g;
    if (!o.labels.empty())
        g = parse_labels(o.labels);
    else if (ground)
        g = *ground;
    else {
        need_nd(o);
        g = LabelSet::range(1, o.n);
    }
    auto t = make_triangulation(g, o.d, parse_compact_sets(trim(text)));
    if (!is_triangulation(t)) throw input_error("simplices do not form a triangulation");
    return t;
}

void print(const Options& o, const BruhatElement& e) {
    std::cout << (o.format == "text" ? compact_str(e.inversions) : element_key(e)) << "\n";
}
void print(const Options& o, const Triangulation& t) {
    std::cout << (o.format == "text" ? compact_str(t.simplices) : element_key(t)) << "\n";
}

EnumBudget enum_budget(const Options& o) { return {o.budget, o.budget_seconds}; }
TamariBudget tamari_budget(const Options& o) { return {o.budget, o.budget_seconds}; }

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (o.format == a) return;
    throw input_error("unsupported --format " + o.format);
}

int cmd_enum(const Options& o) {
    check_format(o, {"json", "text"});
    need_nd(o);
    std::size_t count = 0;
    if (o.poset == "bruhat") {
        for (auto& e : enumerate_bruhat(o.n, o.d, enum_budget(o))) print(o, e), ++count;
    } else {
        LabelSet g = o.labels.empty() ? LabelSet::range(1, o.n) : parse_labels(o.labels);
        for (auto& t : enumerate_tamari(g, o.d, tamari_budget(o))) print(o, t), ++count;
    }
    std::cerr << count << "\n";
    return kPass;
}

int cmd_map(const Options& o) {
    check_format(o, {"json", "text"});
    std::string text = payload(o);
    if (o.which == "f") {
        print(o, f_map(read_bruhat(o, text)));
    } else if (o.which == "g-inverse") {
        auto s = g_inverse(read_bruhat(o, text));
        if (!s) {
            std::cerr << "not in the image of g (inversion set is not superconsistent)\n";
            return kAbsent;
        }
        print(o, *s);
    } else {
        auto t = read_tamari(o, text);
        if (o.which == "g") {
            print(o, g_map(t));
        } else if (o.which == "extension") {
            print(o, extension(t));
        } else {
            LabelSet at;
            if (o.which != "link-top") at.insert(t.ground.min());
            if (o.which != "link0") at.insert(t.ground.max());
            print(o, link(t, at));
        }
    }
    return kPass;
}

// The fiber of f over S in S([0,n+1],d+1).
int cmd_fiber(const Options& o) {
    check_format(o, {"json", "text"});
    std::string text = payload(o);
    std::optional<LabelSet> ground;
    if (o.n >= 0) ground = LabelSet::range(0, o.n + 1);
    Options oo = o;
    if (!is_json(text) && o.d >= 0) oo.d = o.d + 1;
    auto s = read_tamari(oo, text, ground);
    int n = s.ground.size() - 2;
    if (s.ground != LabelSet::range(0, n + 1) || s.d < 1)
        throw input_error("fiber: the triangulation must live on [0,n+1] with dimension at least 1");
    auto fib = fiber_f(s, n, s.d - 1, enum_budget(o));
    for (auto& e : fib) print(o, e);
    std::cerr << fib.size() << "\n";
    return fib.empty() ? kAbsent : kPass;
}

HasseDiagram build(const Options& o) {
    need_nd(o);
    if (o.poset == "bruhat") return bruhat_hasse(enumerate_bruhat(o.n, o.d, enum_budget(o)));
    LabelSet g = o.labels.empty() ? LabelSet::range(1, o.n) : parse_labels(o.labels);
    return tamari_hasse(enumerate_tamari(g, o.d, tamari_budget(o)));
}

int cmd_hasse(const Options& o) {
    check_format(o, {"json", "dot"});
    auto h = build(o);
    std::cout << (o.format == "dot" ? export_dot(h) : export_json(h));
    std::cerr << h.size() << "\n";
    return kPass;
}

int cmd_moebius(const Options& o) {
    auto h = build(o);
    auto locate = [&](const std::string& text, int fallback) {
        if (text.empty()) return fallback;
        std::string key = o.poset == "bruhat" ? element_key(read_bruhat(o, text)) : element_key(read_tamari(o, text));
        int i = h.index_of(key);
        if (i < 0) throw input_error("element not in the poset: " + key);
        return i;
    };
    auto src = h.sources(), snk = h.sinks();
    if (src.size() != 1 || snk.size() != 1) throw internal_error("poset lacks a unique bottom or top");
    int a = locate(o.lo_elem, src.front()), b = locate(o.hi_elem, snk.front());
    std::cout << moebius(h, a, b) << "\n";
    return kPass;
}

int cmd_verify(const Options& o) {
    VerifyLimits lim;
    lim.max_n = o.max_n;
    lim.max_d = o.max_d;
    lim.seed = o.seed;
    lim.budget = enum_budget(o);
    if (lim.max_n < 1 || lim.max_d < 1) throw input_error("--max-n and --max-d must be positive");
    bool ok = true;
    for (auto& rep : run_verify(o.suite, lim)) {
        ok = ok && rep.ok();
        std::cout << rep.id << ": " << (rep.ok() ? "pass" : "FAIL") << " (" << rep.checks - rep.failed << "/"
                  << rep.checks << " checks)\n";
        for (auto& w : rep.witnesses) std::cout << "  " << w << "\n";
    }
    return ok ? kPass : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher Bruhat and higher Stasheff-Tamari orders"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--n", o.n, "ground set size");
        c->add_option("--d", o.d, "dimension");
        c->add_option("--format", o.format, "json | text | dot");
        c->add_option("--budget", o.budget, "maximum number of elements to enumerate");
        c->add_option("--budget-seconds", o.budget_seconds, "wall-clock limit for enumeration (0 = none)");
        c->add_option("--seed", o.seed, "seed for randomized checks");
        c->add_option("--labels", o.labels, "ground set a..b for triangulations");
    };
    auto element_opts = [&](CLI::App* c) {
        c->add_option("--element", o.element, "element as JSON or compact sets like 123,124");
        c->add_flag("--stdin", o.use_stdin, "read the element from standard input");
    };

    auto* e = app.add_subcommand("enum", "list all elements of B(n,d) or S(n,d)");
    e->add_option("poset", o.poset)->required()->check(CLI::IsMember({"bruhat", "tamari"}));
    common(e);

    auto* m = app.add_subcommand("map", "apply a map to one element");
    m->add_option("which", o.which)
        ->required()
        ->check(CLI::IsMember({"f", "g", "g-inverse", "link0", "link-top", "link-both", "extension"}));
    common(m);
    element_opts(m);

    auto* f = app.add_subcommand("fiber", "all e with f(e) = S for S on [0,n+1]");
    common(f);
    element_opts(f);

    auto* h = app.add_subcommand("hasse", "export the Hasse diagram");
    h->add_option("poset", o.poset)->required()->check(CLI::IsMember({"bruhat", "tamari"}));
    common(h);

    auto* mu = app.add_subcommand("moebius", "Moebius function value (default: bottom to top)");
    mu->add_option("poset", o.poset)->required()->check(CLI::IsMember({"bruhat", "tamari"}));
    mu->add_option("--from", o.lo_elem, "lower element");
    mu->add_option("--to", o.hi_elem, "upper element");
    common(mu);

    auto* v = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> ids{"all"};
    for (auto& [id, fn] : verify_suites()) ids.push_back(id);
    v->add_option("suite", o.suite)->check(CLI::IsMember(ids));
    v->add_option("--max-n", o.max_n, "largest ground set");
    v->add_option("--max-d", o.max_d, "largest dimension");
    common(v);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? kPass : kInvalid;
    }

    try {
        if (e->parsed()) return cmd_enum(o);
        if (m->parsed()) return cmd_map(o);
        if (f->parsed()) return cmd_fiber(o);
        if (h->parsed()) return cmd_hasse(o);
        if (mu->parsed()) return cmd_moebius(o);
        if (v->parsed()) return cmd_verify(o);
    } catch (const resource_error& err) {
        std::cerr << "budget exceeded after " << err.partial_count << " elements: " << err.what() << "\n";
        return kBudget;
    } catch (const input_error& err) {
        std::cerr << "invalid input: " << err.what() << "\n";
        return kInvalid;
    } catch (const construction_error& err) {
        std::cerr << "no such element: " << err.what() << "\n";
        return kAbsent;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kVerifyFail;
    }
    return kInvalid;
}
