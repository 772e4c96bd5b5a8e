#include "robinson/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace robinson {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    return out;
}

double parse_number(const std::string& field, const std::string& path) {
    const char* begin = field.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    if (end == begin || *end != '\0' || errno == ERANGE)
        throw ValidationError(path + ": malformed number '" + field + "'");
    return v;
}

}  // namespace

SymmetricMatrix read_matrix_csv(const std::string& path, double tol) {
    std::ifstream in = open_input(path);
    std::vector<std::vector<double>> raw;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) row.push_back(parse_number(field, path));
        if (line.empty() || line.back() == ',')
            throw ValidationError(path + ": empty field");
        raw.push_back(std::move(row));
    }
    if (raw.empty()) throw ValidationError(path + ": empty matrix");
    try {
        return make_symmetric(raw, tol);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_matrix_csv(const SymmetricMatrix& a, const std::string& path) {
    std::ofstream out = open_output(path);
    int n = a.size();
    char buf[64];
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", a.at(i, j));
            out << buf << (j < n ? "," : "");
        }
        out << '\n';
    }
    if (!out) throw ValidationError("cannot write " + path);
}

Graph read_graph(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) throw ValidationError(path + ": empty graph file");
    std::istringstream head(line);
    int n = 0;
    long long m = 0;
    if (!(head >> n >> m) || n < 1 || m < 0) throw ValidationError(path + ": bad header line");
    std::string extra;
    if (head >> extra) throw ValidationError(path + ": bad header line");

    std::vector<std::pair<int, int>> edges;
    for (long long k = 0; k < m; ++k) {
        if (!std::getline(in, line)) throw ValidationError(path + ": missing edge lines");
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v) || (es >> extra)) throw ValidationError(path + ": bad edge line");
        edges.emplace_back(u, v);
    }
    while (std::getline(in, line))
        if (!line.empty() && line != "\r") throw ValidationError(path + ": trailing content");
    try {
        return make_graph(n, std::move(edges));
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_graph(const Graph& g, const std::string& path) {
    std::ofstream out = open_output(path);
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    if (!out) throw ValidationError("cannot write " + path);
}

void write_permutation(const Permutation& p, const std::string& path) {
    std::ofstream out = open_output(path);
    for (int i = 1; i <= p.size(); ++i) out << p.image(i) << (i < p.size() ? " " : "");
    out << '\n';
    if (!out) throw ValidationError("cannot write " + path);
}

Permutation read_permutation(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<int> images;
    int x = 0;
    while (in >> x) images.push_back(x);
    return Permutation::of_images(std::move(images));
}

}  // namespace robinson
