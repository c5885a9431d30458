#include "tfg/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tfg/error.hpp"

namespace tfg {

std::string format_graph(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

namespace {

std::vector<std::string> significant_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

// Exactly `count` non-negative integers on the line, nothing else.
std::vector<std::size_t> read_integers(const std::string& line, std::size_t count) {
    std::istringstream in(line);
    std::vector<std::size_t> values;
    long long v = 0;
    while (in >> v) {
        if (v < 0) throw Error(ErrorKind::Parse, "negative integer in '" + line + "'");
        values.push_back(static_cast<std::size_t>(v));
    }
    in.clear();
    std::string rest;
    if (in >> rest || values.size() != count)
        throw Error(ErrorKind::Parse, "expected " + std::to_string(count) + " integers in '" + line + "'");
    return values;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    const auto lines = significant_lines(text);
    if (lines.empty()) throw Error(ErrorKind::Parse, "empty graph input");
    const auto header = read_integers(lines[0], 2);
    const std::size_t n = header[0];
    const std::size_t m = header[1];
    if (lines.size() != m + 1)
        throw Error(ErrorKind::Parse, "header announces " + std::to_string(m) + " edges, found " +
                                          std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t k = 1; k <= m; ++k) {
        const auto uv = read_integers(lines[k], 2);
        edges.push_back({uv[0], uv[1]});
    }
    return Graph(n, std::move(edges));
}

std::string format_matrix(const Matrix& m, std::string_view extra) {
    std::string out = "{\"rows\": " + std::to_string(m.rows()) + ", \"cols\": " + std::to_string(m.cols()) +
                      ", \"data\": [";
    char buf[32];
    for (std::size_t k = 0; k < m.data().size(); ++k) {
        const double x = m.data()[k];
        if (x == 0.0 && std::signbit(x))
            std::snprintf(buf, sizeof buf, "-0.0");
        else
            std::snprintf(buf, sizeof buf, "%.17g", x);
        if (k > 0) out += ", ";
        out += buf;
    }
    out += "]";
    if (!extra.empty()) {
        out += ", ";
        out += extra;
    }
    out += "}\n";
    return out;
}

Matrix parse_matrix(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("matrix input: ") + e.what());
    }
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        auto data = j.at("data").get<std::vector<double>>();
        if (data.size() != rows * cols)
            throw Error(ErrorKind::Parse, "matrix input: data length " + std::to_string(data.size()) +
                                              " does not match " + std::to_string(rows) + " x " +
                                              std::to_string(cols));
        return Matrix(rows, cols, std::move(data));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("matrix input: ") + e.what());
    }
}

bool looks_like_matrix(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        return c == '{';
    }
    return false;
}

}  // namespace tfg
