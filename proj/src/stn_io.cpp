#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "mostn/stn.hpp"

namespace mostn {

namespace {

// Per-vector fill colours for unshared nodes (V1..V5), then cycled.
constexpr std::string_view kVectorColors[] = {"#fdbf6f", "#33a02c", "#6a3d9a", "#fb9a99", "#a6cee3"};

std::string join_ints(const std::set<int>& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ';';
        out += std::to_string(v);
    }
    return out;
}

std::set<int> split_ints(std::string_view text) {
    std::set<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find(';', pos);
        if (end == std::string_view::npos) end = text.size();
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
        if (ec != std::errc{} || ptr != text.data() + end)
            throw ParseError("bad integer list '" + std::string(text) + "'");
        out.insert(v);
        pos = end + 1;
    }
    return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto end = line.find(sep, pos);
        if (end == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, end - pos));
        pos = end + 1;
    }
}

template <typename T>
T parse_number(std::string_view text, const std::string& where) {
    T v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ParseError(where + ": bad number '" + std::string(text) + "'");
    return v;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

void write_graphml(const StnGraph& g, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
           "  <key id=\"precision\" for=\"graph\" attr.name=\"precision\" attr.type=\"double\"/>\n"
           "  <key id=\"count\" for=\"node\" attr.name=\"count\" attr.type=\"int\"/>\n"
           "  <key id=\"shared\" for=\"node\" attr.name=\"shared\" attr.type=\"boolean\"/>\n"
           "  <key id=\"start\" for=\"node\" attr.name=\"start\" attr.type=\"boolean\"/>\n"
           "  <key id=\"end\" for=\"node\" attr.name=\"end\" attr.type=\"boolean\"/>\n"
           "  <key id=\"optimal\" for=\"node\" attr.name=\"optimal\" attr.type=\"boolean\"/>\n"
           "  <key id=\"vectors\" for=\"node\" attr.name=\"vectors\" attr.type=\"string\"/>\n"
           "  <key id=\"runs\" for=\"node\" attr.name=\"runs\" attr.type=\"string\"/>\n"
           "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
           "  <graph id=\"stn\" edgedefault=\"directed\">\n";
    out << "    <data key=\"precision\">" << format_real(g.precision) << "</data>\n";
    for (const auto& [key, n] : g.nodes) {
        out << "    <node id=\"" << key.str() << "\">\n"
            << "      <data key=\"count\">" << n.count << "</data>\n"
            << "      <data key=\"shared\">" << bool_text(n.shared()) << "</data>\n"
            << "      <data key=\"start\">" << bool_text(n.is_start) << "</data>\n"
            << "      <data key=\"end\">" << bool_text(n.is_end) << "</data>\n"
            << "      <data key=\"optimal\">" << bool_text(n.is_optimal) << "</data>\n"
            << "      <data key=\"vectors\">" << join_ints(n.vectors) << "</data>\n"
            << "      <data key=\"runs\">" << join_ints(n.runs) << "</data>\n"
            << "    </node>\n";
    }
    for (const auto& [e, w] : g.edges) {
        out << "    <edge source=\"" << e.first.str() << "\" target=\"" << e.second.str() << "\">"
            << "<data key=\"weight\">" << w << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_dot(const StnGraph& g, std::ostream& out) {
    out << "digraph stn {\n";
    for (const auto& [key, n] : g.nodes) {
        const char* shape = n.is_start ? "square" : n.is_end ? "triangle" : "circle";
        std::string color;
        if (n.is_optimal) color = "red";
        else if (n.is_start) color = "yellow";
        else if (n.is_end) color = "black";
        else if (n.shared()) color = "lightgray";
        else if (!n.vectors.empty())
            color = kVectorColors[static_cast<std::size_t>(*n.vectors.begin()) % std::size(kVectorColors)];
        else color = "white";
        out << "  \"" << key.str() << "\" [shape=" << shape << ", style=filled, fillcolor=\"" << color
            << "\", count=" << n.count << ", shared=" << bool_text(n.shared()) << ", start=" << bool_text(n.is_start)
            << ", end=" << bool_text(n.is_end) << ", optimal=" << bool_text(n.is_optimal) << ", vectors=\""
            << join_ints(n.vectors) << "\", runs=\"" << join_ints(n.runs) << "\"];\n";
    }
    for (const auto& [e, w] : g.edges)
        out << "  \"" << e.first.str() << "\" -> \"" << e.second.str() << "\" [weight=" << w << "];\n";
    out << "}\n";
}

// Edges first, then isolated nodes as "loc,,0".
void write_edgelist(const StnGraph& g, std::ostream& out) {
    out << "src,dst,weight\n";
    std::set<LocationKey> touched;
    for (const auto& [e, w] : g.edges) {
        out << e.first.str() << ',' << e.second.str() << ',' << w << '\n';
        touched.insert(e.first);
        touched.insert(e.second);
    }
    for (const auto& [key, n] : g.nodes)
        if (!touched.count(key)) out << key.str() << ",,0\n";
}

// Value of attr="..." inside a tag, or empty.
std::string_view attribute(std::string_view line, std::string_view name) {
    const std::string needle = std::string(name) + "=\"";
    auto pos = line.find(needle);
    if (pos == std::string_view::npos) return {};
    pos += needle.size();
    auto end = line.find('"', pos);
    return line.substr(pos, end - pos);
}

// Inner text of the first <data ...>...</data> on the line.
std::string_view data_text(std::string_view line) {
    auto open = line.find("<data");
    auto start = line.find('>', open);
    auto end = line.find("</data>", start);
    if (open == std::string_view::npos || start == std::string_view::npos || end == std::string_view::npos) return {};
    return line.substr(start + 1, end - start - 1);
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "graphml") return GraphFormat::GraphML;
    if (name == "dot") return GraphFormat::Dot;
    if (name == "csv") return GraphFormat::EdgeListCsv;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "' (graphml, dot, csv)");
}

std::string_view file_extension(GraphFormat f) {
    switch (f) {
        case GraphFormat::GraphML: return "graphml";
        case GraphFormat::Dot: return "dot";
        case GraphFormat::EdgeListCsv: return "csv";
    }
    return "txt";
}

void export_graph(const StnGraph& g, GraphFormat format, std::ostream& out) {
    switch (format) {
        case GraphFormat::GraphML: write_graphml(g, out); break;
        case GraphFormat::Dot: write_dot(g, out); break;
        case GraphFormat::EdgeListCsv: write_edgelist(g, out); break;
    }
    if (!out) throw std::runtime_error("failed writing graph export");
}

StnGraph import_edgelist(std::istream& in) {
    StnGraph g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1) {
            if (line != "src,dst,weight") throw ParseError("edge list line 1: unexpected header");
            continue;
        }
        if (line.empty()) continue;
        const auto where = "edge list line " + std::to_string(lineno);
        const auto f = split(line, ',');
        if (f.size() != 3) throw ParseError(where + ": expected 3 fields");
        const auto src = LocationKey::parse(f[0]);
        g.nodes[src];
        if (f[1].empty()) continue;
        const auto dst = LocationKey::parse(f[1]);
        g.nodes[dst];
        g.edges[{src, dst}] += parse_number<long>(f[2], where);
    }
    return g;
}

StnGraph import_graphml(std::istream& in) {
    StnGraph g;
    std::string line;
    NodeAttrs* current = nullptr;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view l = line;
        const auto where = "graphml line " + std::to_string(lineno);
        if (l.find("<node ") != std::string_view::npos) {
            current = &g.nodes[LocationKey::parse(attribute(l, "id"))];
        } else if (l.find("</node>") != std::string_view::npos) {
            current = nullptr;
        } else if (l.find("<edge ") != std::string_view::npos) {
            const Edge e{LocationKey::parse(attribute(l, "source")), LocationKey::parse(attribute(l, "target"))};
            g.edges[e] = parse_number<long>(data_text(l), where);
        } else if (l.find("<data ") != std::string_view::npos) {
            const auto key = attribute(l, "key");
            const auto text = data_text(l);
            if (!current) {
                if (key == "precision") g.precision = parse_number<double>(text, where);
                continue;
            }
            if (key == "count") current->count = parse_number<long>(text, where);
            else if (key == "start") current->is_start = text == "true";
            else if (key == "end") current->is_end = text == "true";
            else if (key == "optimal") current->is_optimal = text == "true";
            else if (key == "vectors") current->vectors = split_ints(text);
            else if (key == "runs") current->runs = split_ints(text);
        }
    }
    for (const auto& [e, w] : g.edges)
        if (!g.nodes.count(e.first) || !g.nodes.count(e.second))
            throw ParseError("graphml: edge endpoint missing from node list");
    return g;
}

RunTrace read_trace(std::istream& in, std::string_view source) {
    RunTrace t;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto where = std::string(source) + ":" + std::to_string(lineno);
        if (!line.empty() && line.back() == '\r') throw ParseError(where + ": CRLF line ending");
        if (line.empty()) continue;
        if (line.front() == '#') {
            TraceMeta meta;
            std::istringstream fields(line.substr(1));
            std::string kv;
            while (fields >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) throw ParseError(where + ": bad metadata '" + kv + "'");
                const std::string_view k(kv.data(), eq);
                const std::string_view v(kv.data() + eq + 1, kv.size() - eq - 1);
                if (k == "seed") meta.seed = parse_number<std::uint64_t>(v, where);
                else if (k == "precision") meta.precision = parse_number<double>(v, where);
                else if (k == "config") meta.config = std::string(v);
            }
            t.meta = meta;
            continue;
        }
        if (!header_seen) {
            if (line != kTraceHeader) throw ParseError(where + ": unexpected trace header");
            header_seen = true;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 11) throw ParseError(where + ": expected 11 fields, got " + std::to_string(f.size()));
        TraceRecord r;
        r.algo = std::string(f[0]);
        r.problem = std::string(f[1]);
        r.run = parse_number<int>(f[2], where);
        r.iter = parse_number<int>(f[3], where);
        r.vector = parse_number<int>(f[4], where);
        try {
            r.loc = LocationKey::parse(f[5]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
        for (std::size_t k = 6; k <= 8; ++k) {
            if (f[k].empty()) {
                if (k < 8) throw ParseError(where + ": missing objective f" + std::to_string(k - 5));
                continue;
            }
            r.f.push_back(parse_number<double>(f[k], where));
        }
        r.scalar = parse_number<double>(f[9], where);
        r.birth = parse_number<int>(f[10], where);
        t.records.push_back(std::move(r));
    }
    if (!header_seen) throw ParseError(std::string(source) + ": missing trace header");
    return t;
}

RunTrace with_precision(const RunTrace& trace, double precision) {
    const double from = trace.meta ? trace.meta->precision : kDefaultPrecision;
    RunTrace out = trace;
    if (std::abs(from - precision) <= 1e-12 * from) return out;
    for (auto& r : out.records) r.loc = coarsen(r.loc, from, precision);
    if (!out.meta) out.meta = TraceMeta{};
    out.meta->precision = precision;
    return out;
}

}  // namespace mostn
