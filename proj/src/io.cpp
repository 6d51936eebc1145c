#include "hypermatch/io.hpp"

#include "hypermatch/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace hypermatch {

namespace {

// Comment and blank lines are stripped here; everything else is significant.
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw input_error(std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
}

std::vector<std::string> parse_header(const std::string& line, const std::string& magic,
                                      size_t fields) {
    auto toks = tokens(line);
    if (toks.size() != fields + 2 || toks[0] != magic || toks[1] != "1")
        throw input_error("bad header, expected '" + magic + " 1 ...': " + line);
    return toks;
}

Edge parse_edge_line(const std::string& line, int k, int n) {
    auto toks = tokens(line);
    if (static_cast<int>(toks.size()) != k)
        throw input_error("edge line must have " + std::to_string(k) + " vertices: " + line);
    Edge e;
    for (const std::string& t : toks) e.push_back(parse_int(t, "vertex"));
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n) throw input_error("vertex out of range in edge line: " + line);
        if (i > 0 && e[i] <= e[i - 1])
            throw input_error("edge line must be strictly increasing: " + line);
    }
    return e;
}

}  // namespace

KGraph parse_kgraph(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw input_error("empty hypergraph file");
    auto hdr = parse_header(lines[0], "khg", 2);
    int k = parse_int(hdr[2], "k");
    int n = parse_int(hdr[3], "n");
    std::vector<Edge> edges;
    for (size_t i = 1; i < lines.size(); ++i) edges.push_back(parse_edge_line(lines[i], k, n));
    return KGraph::build(n, k, std::move(edges));
}

Family parse_family(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw input_error("empty family file");
    auto hdr = parse_header(lines[0], "khf", 3);
    int k = parse_int(hdr[2], "k");
    int n = parse_int(hdr[3], "n");
    int m = parse_int(hdr[4], "m");
    if (m < 1) throw input_error("family file requires m >= 1");
    std::vector<KGraph> members;
    size_t pos = 1;
    for (int i = 1; i <= m; ++i) {
        if (pos >= lines.size()) throw input_error("missing member " + std::to_string(i));
        auto toks = tokens(lines[pos]);
        if (toks.size() != 3 || toks[0] != "F" || parse_int(toks[1], "member index") != i)
            throw input_error("expected 'F " + std::to_string(i) + " <count>', got: " + lines[pos]);
        int count = parse_int(toks[2], "edge count");
        ++pos;
        std::vector<Edge> edges;
        for (int j = 0; j < count; ++j, ++pos) {
            if (pos >= lines.size()) throw input_error("truncated member " + std::to_string(i));
            edges.push_back(parse_edge_line(lines[pos], k, n));
        }
        members.push_back(KGraph::build(n, k, std::move(edges)));
    }
    if (pos != lines.size()) throw input_error("trailing content after last member");
    return Family::build(std::move(members));
}

AuxGraph parse_aux(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw input_error("empty aux graph file");
    auto hdr = parse_header(lines[0], "kha", 4);
    int k = parse_int(hdr[2], "k");
    int n = parse_int(hdr[3], "n");
    int m = parse_int(hdr[4], "m");
    int r = parse_int(hdr[5], "r");
    std::vector<Edge> edges;
    for (size_t li = 1; li < lines.size(); ++li) {
        auto toks = tokens(lines[li]);
        if (static_cast<int>(toks.size()) != k + 1)
            throw input_error("aux edge line must have k+1 tokens: " + lines[li]);
        Edge e;
        for (const std::string& t : toks) {
            if (t[0] == 'v' || t[0] == 'u') {
                int idx = parse_int(t.substr(1), "label index");
                if (t[0] == 'v') {
                    if (idx < 1 || idx > m) throw input_error("v-label out of range: " + t);
                    e.push_back(n + idx);
                } else {
                    if (idx < 1 || idx > r) throw input_error("u-label out of range: " + t);
                    e.push_back(n + m + idx);
                }
            } else {
                int v = parse_int(t, "vertex");
                if (v < 1 || v > n) throw input_error("base vertex out of range: " + t);
                e.push_back(v);
            }
        }
        edges.push_back(std::move(e));
    }
    return make_aux(n, k, m, r, std::move(edges));
}

std::string emit_kgraph(const KGraph& g) {
    std::ostringstream os;
    os << "khg 1 " << g.k() << " " << g.n() << "\n";
    for (const Edge& e : g.edges()) {
        for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << "\n";
    }
    return os.str();
}

std::string emit_family(const Family& f) {
    std::ostringstream os;
    os << "khf 1 " << f.k() << " " << f.n() << " " << f.m() << "\n";
    for (int i = 0; i < f.m(); ++i) {
        os << "F " << (i + 1) << " " << f.member(i).edge_count() << "\n";
        for (const Edge& e : f.member(i).edges()) {
            for (size_t j = 0; j < e.size(); ++j) os << (j ? " " : "") << e[j];
            os << "\n";
        }
    }
    return os.str();
}

std::string emit_aux(const AuxGraph& a) {
    std::ostringstream os;
    os << "kha 1 " << a.k << " " << a.base_n << " " << a.m << " " << a.r << "\n";
    for (const Edge& e : a.graph.edges()) {
        // base vertices first (they sort lowest anyway), labels as tokens
        bool first = true;
        for (int v : e) {
            os << (first ? "" : " ") << a.vertex_name(v);
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

namespace {

template <typename T>
T load_with(const std::string& path, T (*parse)(std::istream&)) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    return parse(in);
}

}  // namespace

KGraph load_kgraph(const std::string& path) { return load_with(path, parse_kgraph); }
Family load_family(const std::string& path) { return load_with(path, parse_family); }
AuxGraph load_aux(const std::string& path) { return load_with(path, parse_aux); }

void save_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

void Report::add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

void Report::add(const std::string& key, long long value) {
    entries_.emplace_back(key, std::to_string(value));
}

std::string Report::render_kv() const {
    std::ostringstream os;
    for (const auto& [k, v] : entries_) os << k << "=" << v << "\n";
    return os.str();
}

std::string Report::render_json() const {
    nlohmann::ordered_json doc;
    for (const auto& [k, v] : entries_) doc[k] = v;
    return doc.dump(2) + "\n";
}

}  // namespace hypermatch
