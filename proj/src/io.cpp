#include "alphab/io.hpp"

#include <fstream>
#include <sstream>

#include "alphab/errors.hpp"

namespace alphab {

namespace {

// Strips '#' comment lines, returns whitespace-separated tokens.
std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream words(line);
        std::string w;
        while (words >> w) tokens.push_back(w);
    }
    return tokens;
}

int to_int(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw input_error(std::string(what) + ": expected an integer, got \"" + tok + "\"");
    }
}

}  // namespace

std::string graph_to_text(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph graph_from_text(std::string_view text) {
    const auto tok = tokenize(text);
    if (tok.size() < 2) throw input_error("graph: missing \"n m\" header");
    const int n = to_int(tok[0], "graph header n");
    const int m = to_int(tok[1], "graph header m");
    if (m < 0) throw input_error("graph: negative edge count");
    if (tok.size() != 2 + 2 * static_cast<std::size_t>(m))
        throw input_error("graph: header says " + std::to_string(m) + " edges, file has " +
                          std::to_string(tok.size() - 2) + " endpoint tokens");
    std::vector<std::pair<int, int>> edges(m);
    for (int i = 0; i < m; ++i)
        edges[i] = {to_int(tok[2 + 2 * i], "edge endpoint"),
                    to_int(tok[3 + 2 * i], "edge endpoint")};
    return build_graph(n, edges);
}

std::string broadcast_to_text(const Broadcast& f) {
    std::string out;
    for (std::size_t v = 0; v < f.values.size(); ++v)
        if (f.values[v] > 0)
            out += std::to_string(v) + " " + std::to_string(f.values[v]) + "\n";
    return out;
}

Broadcast broadcast_from_text(std::string_view text, int vertex_count) {
    const auto tok = tokenize(text);
    if (tok.size() % 2 != 0) throw input_error("broadcast: expected \"v value\" pairs");
    Broadcast f;
    f.values.assign(vertex_count, 0);
    for (std::size_t i = 0; i < tok.size(); i += 2) {
        const int v = to_int(tok[i], "broadcast vertex");
        const int value = to_int(tok[i + 1], "broadcast value");
        if (v < 0 || v >= vertex_count)
            throw input_error("broadcast: vertex " + std::to_string(v) + " outside [0, " +
                              std::to_string(vertex_count) + ")");
        if (value <= 0)
            throw input_error("broadcast: value for vertex " + std::to_string(v) +
                              " must be positive");
        if (f.values[v] != 0)
            throw input_error("broadcast: vertex " + std::to_string(v) + " listed twice");
        f.values[v] = value;
    }
    return f;
}

std::string role_map_to_text(const GadgetGraph& gg) {
    std::string out;
    for (int v = 0; v < gg.graph.n; ++v) {
        const char* role = nullptr;
        switch (gg.role[v]) {
            case VertexRole::kOriginal: role = "orig"; break;
            case VertexRole::kSubdivision: role = "sub"; break;
            case VertexRole::kStarCenter: role = "ctr"; break;
            case VertexRole::kStarLeaf: role = "leaf"; break;
        }
        out += std::to_string(v);
        out += ' ';
        out += role;
        out += ' ';
        out += gg.owner[v] < 0 ? "-" : std::to_string(gg.owner[v]);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw input_error("cannot read " + path.string());
    return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw input_error("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw input_error("cannot write " + path.string());
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace alphab
