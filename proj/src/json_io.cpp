#include "invg/json_io.hpp"

#include "invg/errors.hpp"

namespace invg {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j) {
    if (!j.is_number_integer()) throw ParseError("expected an integer");
    return j.get<int>();
}

std::vector<int> int_list(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of integers");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x));
    return out;
}

std::pair<int, int> int_pair(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected a pair [a,b]");
    return {as_int(j[0]), as_int(j[1])};
}

Json pairs_to_json(const LetterPairs& s) {
    Json out = Json::array();
    for (auto [a, b] : s) out.push_back({a, b});
    return out;
}

LetterPairs pairs_from_json(const Json& j, int k) {
    if (!j.is_array()) throw ParseError("expected an array of pairs");
    LetterPairs out;
    for (const auto& x : j) {
        auto p = int_pair(x);
        if (p.first < 1 || p.first > k || p.second < 1 || p.second > k)
            throw DomainError("decoder pair outside 1..k");
        out.insert(p);
    }
    return out;
}

Permutation host_from(const Json& j) {
    if (!j.is_string()) throw ParseError("host must be a permutation string");
    return Permutation::parse(j.get<std::string>());
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const Permutation& p) { return {{"perm", p.str()}}; }

Permutation permutation_from_json(const Json& j) { return host_from(field(j, "perm")); }

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    const int n = as_int(field(j, "n"));
    if (n < 0 || n > 64) throw ParseError("graph size out of range");
    Graph g(n);
    const auto& edges = field(j, "edges");
    if (!edges.is_array()) throw ParseError("edges must be an array");
    for (const auto& e : edges) {
        auto [u, v] = int_pair(e);
        if (u < 1 || v < 1 || u > n || v > n || u == v) throw DomainError("edge endpoints must be distinct vertices in 1..n");
        g.add_edge(u, v);
    }
    return g;
}

Json to_json(const IntervalSystem& s) { return {{"left_order", s.left_order}, {"right_order", s.right_order}}; }

IntervalSystem interval_system_from_json(const Json& j) {
    return {int_list(field(j, "left_order")), int_list(field(j, "right_order"))};
}

Json to_json(const Orientation& o) {
    Json out = Json::array();
    for (auto [u, v] : o.arcs()) out.push_back({u, v});
    return out;
}

Orientation orientation_from_json(int n, const Json& j) {
    if (!j.is_array()) throw ParseError("orientation must be an array of arcs");
    Orientation o{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
    for (const auto& a : j) {
        auto [u, v] = int_pair(a);
        if (u < 1 || v < 1 || u > n || v > n || u == v) throw ParseError("bad arc");
        o.out[u - 1] |= std::uint64_t{1} << (v - 1);
    }
    return o;
}

Json to_json(const PinSequence& s) {
    Json pins = Json::array();
    for (auto p : s.points) pins.push_back({p.index, p.value});
    return {{"host", s.host.str()}, {"pins", pins}};
}

PinSequence pin_sequence_from_json(const Json& j) {
    PinSequence s{host_from(field(j, "host")), {}};
    const auto& pins = field(j, "pins");
    if (!pins.is_array()) throw ParseError("pins must be an array");
    for (const auto& p : pins) {
        auto [i, v] = int_pair(p);
        s.points.push_back({i, v});
    }
    return s;
}

Json to_json(const Lettering& l) { return {{"k", l.k}, {"word", l.word}, {"decoder", pairs_to_json(l.decoder)}}; }

Lettering lettering_from_json(const Json& j) {
    Lettering l;
    l.k = as_int(field(j, "k"));
    if (l.k < 0) throw DomainError("k must be nonnegative");
    l.word = int_list(field(j, "word"));
    for (int a : l.word)
        if (a < 1 || a > l.k) throw DomainError("word letter outside 1..k");
    l.decoder = pairs_from_json(field(j, "decoder"), l.k);
    return l;
}

Json to_json(const GridMatrix& m) {
    Json entries = Json::array();
    for (int c = 1; c <= m.cols; ++c)
        for (int r = 1; r <= m.rows; ++r)
            if (m.at(c, r)) entries.push_back({c, r, m.at(c, r)});
    return {{"cols", m.cols}, {"rows", m.rows}, {"entries", entries}};
}

GridMatrix matrix_from_json(const Json& j) {
    GridMatrix m(as_int(field(j, "cols")), as_int(field(j, "rows")));
    const auto& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("entries must be an array");
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 3) throw ParseError("entry must be [col,row,value]");
        const int v = as_int(e[2]);
        if (v != 1 && v != -1) throw DomainError("entry value must be 1 or -1");
        m.set(as_int(e[0]), as_int(e[1]), v);
    }
    check_matrix(m);
    return m;
}

Json to_json(const GridDrawing& d) {
    Json out = to_json(d.matrix);
    out["col_signs"] = d.signs.col;
    out["row_signs"] = d.signs.row;
    out["host"] = d.host.str();
    Json cells = Json::array();
    for (auto [c, r] : d.cell_of) cells.push_back({c, r});
    out["cell_of"] = cells;
    out["reading_order"] = d.reading_order;
    return out;
}

GridDrawing drawing_from_json(const Json& j) {
    GridDrawing d;
    d.matrix = matrix_from_json(j);
    d.signs.col = int_list(field(j, "col_signs"));
    d.signs.row = int_list(field(j, "row_signs"));
    d.host = host_from(field(j, "host"));
    const auto& cells = field(j, "cell_of");
    if (!cells.is_array()) throw ParseError("cell_of must be an array");
    for (const auto& c : cells) d.cell_of.push_back(int_pair(c));
    d.reading_order = int_list(field(j, "reading_order"));
    return d;
}

Json to_json(const PermLettering& l) {
    return {{"k", l.k},
            {"word", l.word},
            {"host", l.host.str()},
            {"I", pairs_to_json(l.I)},
            {"N", pairs_to_json(l.N)}};
}

PermLettering perm_lettering_from_json(const Json& j) {
    PermLettering l;
    l.k = as_int(field(j, "k"));
    if (l.k < 0) throw DomainError("k must be nonnegative");
    l.word = int_list(field(j, "word"));
    for (int a : l.word)
        if (a < 1 || a > l.k) throw DomainError("word letter outside 1..k");
    l.host = host_from(field(j, "host"));
    if (l.host.size() != static_cast<int>(l.word.size())) throw DomainError("word and host lengths differ");
    l.I = pairs_from_json(field(j, "I"), l.k);
    l.N = pairs_from_json(field(j, "N"), l.k);
    return l;
}

Json to_json(const Reflection& t) {
    return {{"u", t.u}, {"v", t.v}, {"X", t.X}, {"kind", to_string(t.kind)}};
}

Reflection reflection_from_json(const Json& j) {
    const auto& kind = field(j, "kind");
    if (!kind.is_string()) throw ParseError("kind must be a string");
    ReflectionKind k;
    if (kind == "edge")
        k = ReflectionKind::edge;
    else if (kind == "nonedge")
        k = ReflectionKind::nonedge;
    else
        throw ParseError("kind must be \"edge\" or \"nonedge\"");
    return make_reflection(as_int(field(j, "u")), as_int(field(j, "v")), int_list(field(j, "X")), k);
}

Json to_json(const std::vector<Reflection>& seq) {
    Json out = Json::array();
    for (const auto& t : seq) out.push_back(to_json(t));
    return out;
}

std::vector<Reflection> reflections_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of reflections");
    std::vector<Reflection> out;
    for (const auto& t : j) out.push_back(reflection_from_json(t));
    return out;
}

}  // namespace invg
