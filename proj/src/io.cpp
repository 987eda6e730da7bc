#include "minorlist/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace minorlist {

Lambda parse_lambda(const std::string& text) {
    std::vector<int> parts;
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("lambda parse error at position " + std::to_string(pos) + ": " + why);
    };
    auto read_int = [&]() -> long long {
        size_t start = pos;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoll(text.substr(start, pos - start));
    };
    while (true) {
        long long value = read_int();
        long long mult = 1;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            mult = read_int();
        }
        if (value < 1) fail("parts must be positive");
        if (mult < 1) fail("multiplicity must be positive");
        if (mult > 100000) fail("multiplicity too large");
        for (long long i = 0; i < mult; ++i) parts.push_back(static_cast<int>(value));
        if (pos == text.size()) break;
        if (text[pos] != ',') fail("expected ','");
        ++pos;
    }
    return Lambda(parts);
}

std::string lambda_to_string(const Lambda& lam) {
    std::map<int, int> mult;
    for (int p : lam.parts()) ++mult[p];
    std::string out;
    for (auto& [value, count] : mult) {
        if (!out.empty()) out += ",";
        if (count > 1)
            out += std::to_string(value) + "*" + std::to_string(count);
        else
            out += std::to_string(value);
    }
    return out;
}

Rational parse_rational_text(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.size();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        json labels = json::object();
        for (auto& [v, text] : g.labels()) labels[std::to_string(v)] = text;
        j["labels"] = std::move(labels);
    }
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) throw std::invalid_argument("graph JSON: missing n");
    Graph g(j["n"].get<int>());
    for (auto& e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: bad edge entry");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("labels"))
        for (auto& [key, text] : j["labels"].items()) g.set_label(std::stoi(key), text.get<std::string>());
    return g;
}

std::string graph_to_dimacs(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.size() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << (u + 1) << " " << (v + 1) << "\n";
    return os.str();
}

json assignment_to_json(const ListAssignment& l, const ColourClasses& c) {
    json j;
    j["classes"] = c.classes;
    j["lists"] = l.lists;
    return j;
}

void assignment_from_json(const json& j, ListAssignment& l, ColourClasses& c) {
    c.classes = j.value("classes", std::vector<std::vector<int>>{});
    l.lists = j.value("lists", std::vector<std::vector<int>>{});
    for (auto& cls : c.classes) sort_unique(cls);
    for (auto& xs : l.lists) sort_unique(xs);
}

namespace {

json copies_to_json(const ComposeProvenance& p) {
    json j;
    j["h1"] = graph_to_json(p.h1);
    j["k"] = p.k_in_h1;
    j["base_size"] = p.base_size;
    json copies = json::array();
    for (auto& c : p.copies) {
        json jc;
        jc["psi"] = c.psi_key;
        jc["clique"] = c.base_clique;
        jc["map"] = c.copy_map;
        copies.push_back(std::move(jc));
    }
    j["copies"] = std::move(copies);
    return j;
}

ComposeProvenance copies_from_json(const json& j) {
    ComposeProvenance p;
    p.h1 = graph_from_json(j.at("h1"));
    p.k_in_h1 = j.at("k").get<std::vector<int>>();
    p.base_size = j.at("base_size").get<int>();
    for (auto& jc : j.value("copies", json::array())) {
        CopyRecord c;
        c.psi_key = jc.at("psi").get<std::string>();
        c.base_clique = jc.at("clique").get<std::vector<int>>();
        c.copy_map = jc.at("map").get<std::vector<int>>();
        p.copies.push_back(std::move(c));
    }
    return p;
}

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "skipped") return CheckStatus::Skipped;
    if (s == "inconclusive") return CheckStatus::Inconclusive;
    return CheckStatus::Unchecked;
}

}  // namespace

json witness_to_json(const Witness& w) {
    json j;
    j["graph"] = graph_to_json(w.graph);
    j["lambda"] = lambda_to_string(w.lam);
    j["classes"] = w.classes.classes;
    j["lists"] = w.lists.lists;
    j["t"] = w.t;
    j["provenance"] = w.provenance;
    if (!w.pinned.empty()) {
        json p = json::object();
        for (auto& [v, c] : w.pinned) p[std::to_string(v)] = c;
        j["partial"] = std::move(p);
    }
    j["verification"] = {{"assignment", to_string(w.verification.assignment)},
                         {"coloring", to_string(w.verification.coloring)},
                         {"minor", to_string(w.verification.minor)}};
    if (!w.verification.notes.empty()) j["verification"]["notes"] = w.verification.notes;
    if (w.compose_info) j["compose"] = copies_to_json(*w.compose_info);
    if (w.gadget) {
        json g;
        g["kind"] = w.gadget->kind;
        g["params"] = w.gadget->params;
        g["A"] = w.gadget->A;
        g["B"] = w.gadget->B;
        j["gadget"] = std::move(g);
    }
    return j;
}

Witness witness_from_json(const json& j) {
    Witness w;
    w.graph = graph_from_json(j.at("graph"));
    w.lam = parse_lambda(j.at("lambda").get<std::string>());
    w.classes.classes = j.at("classes").get<std::vector<std::vector<int>>>();
    for (auto& cls : w.classes.classes) sort_unique(cls);
    w.lists.lists = j.at("lists").get<std::vector<std::vector<int>>>();
    for (auto& xs : w.lists.lists) sort_unique(xs);
    w.t = j.at("t").get<int>();
    w.provenance = j.value("provenance", "");
    if (j.contains("partial"))
        for (auto& [key, c] : j["partial"].items()) w.pinned[std::stoi(key)] = c.get<int>();
    if (j.contains("verification")) {
        const auto& v = j["verification"];
        w.verification.assignment = status_from_string(v.value("assignment", "unchecked"));
        w.verification.coloring = status_from_string(v.value("coloring", "unchecked"));
        w.verification.minor = status_from_string(v.value("minor", "unchecked"));
        w.verification.notes = v.value("notes", "");
    }
    if (j.contains("compose")) w.compose_info = copies_from_json(j["compose"]);
    if (j.contains("gadget")) {
        GadgetInfo g;
        g.kind = j["gadget"].at("kind").get<std::string>();
        g.params = j["gadget"].value("params", std::map<std::string, long long>{});
        g.A = j["gadget"].value("A", std::vector<int>{});
        g.B = j["gadget"].value("B", std::vector<int>{});
        w.gadget = std::move(g);
    }
    return w;
}

json steiner_to_json(const SteinerGraph& s) {
    // Graph JSON plus the lemma fields; "n" is the side size, the vertex
    // count is always 2n since A and B partition the vertex set.
    json j = graph_to_json(s.graph);
    j["A"] = s.A;
    j["B"] = s.B;
    j["n"] = s.n;
    j["eps"] = s.eps.str();
    if (s.verified_t) j["verified_t"] = *s.verified_t;
    return j;
}

SteinerGraph steiner_from_json(const json& j) {
    SteinerGraph s;
    s.n = j.at("n").get<int>();
    json gj = j;
    gj["n"] = 2 * s.n;
    s.graph = graph_from_json(gj);
    s.A = j.at("A").get<std::vector<int>>();
    s.B = j.at("B").get<std::vector<int>>();
    s.eps = parse_rational_text(j.at("eps").get<std::string>());
    if (j.contains("verified_t")) s.verified_t = j["verified_t"].get<int>();
    return s;
}

json multicopy_to_json(const MultiCopyBuild& b) {
    json j;
    j["graph"] = graph_to_json(b.graph);
    j["lambda"] = lambda_to_string(b.lam);
    j["classes"] = b.classes.classes;
    j["lists"] = b.lists.lists;
    j["t"] = b.t;
    j["universe_size"] = b.universe_size;
    json copies = json::array();
    for (auto& c : b.copies) {
        json jc;
        jc["image"] = c.image;
        jc["map"] = c.copy_map;
        copies.push_back(std::move(jc));
    }
    j["copies"] = std::move(copies);
    return j;
}

json report_json(const std::string& command, const json& inputs, const std::string& verdict,
                 const json& details, long long runtime_ms) {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["verdict"] = verdict;
    j["details"] = details;
    j["runtime_ms"] = runtime_ms;
    return j;
}

}  // namespace minorlist
