#include "epc/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace epc {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    return out;
}

} // namespace

BitMatrix read_matrix(std::istream& in) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    if (!(in >> rows >> cols)) throw std::runtime_error("matrix parse: missing dimensions");
    BitMatrix m(rows, cols);
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!(in >> line)) throw std::runtime_error("matrix parse: missing row " + std::to_string(r));
        if (line.size() != cols)
            throw std::runtime_error("matrix parse: row " + std::to_string(r) + " has length " +
                                     std::to_string(line.size()) + ", expected " +
                                     std::to_string(cols));
        m.row(r) = BitVector::from_string(line);
    }
    return m;
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) out << m.row(r).to_string() << '\n';
}

Graph read_edge_list(std::istream& in) {
    std::size_t n = 0;
    std::size_t m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list parse: missing header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t u = 0;
        std::uint32_t v = 0;
        if (!(in >> u >> v))
            throw std::runtime_error("edge list parse: missing edge " + std::to_string(i));
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

CssCode read_css(std::istream& in) {
    BitMatrix hx = read_matrix(in);
    std::string sep;
    if (!(in >> sep) || sep != "---")
        throw std::runtime_error("css parse: expected --- separator between check blocks");
    BitMatrix hz = read_matrix(in);
    return make_css(std::move(hx), std::move(hz));
}

void write_css(std::ostream& out, const CssCode& c) {
    write_matrix(out, c.hx());
    out << "---\n";
    write_matrix(out, c.hz());
}

Circuit read_circuit_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    Circuit c;
    c.n = j.at("n").get<std::size_t>();
    for (const auto& jl : j.at("layers")) {
        std::vector<Gate> layer;
        for (const auto& jg : jl) {
            Gate g;
            g.qubits = jg.at("qubits").get<std::vector<std::size_t>>();
            for (const auto& entry : jg.at("unitary")) {
                if (!entry.is_array() || entry.size() != 2)
                    throw std::runtime_error("circuit parse: unitary entries must be [re, im] pairs");
                g.unitary.emplace_back(entry[0].get<double>(), entry[1].get<double>());
            }
            layer.push_back(std::move(g));
        }
        c.layers.push_back(std::move(layer));
    }
    validate_circuit(c);
    return c;
}

void write_circuit_json(std::ostream& out, const Circuit& c) {
    nlohmann::json j;
    j["n"] = c.n;
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& layer : c.layers) {
        nlohmann::json jl = nlohmann::json::array();
        for (const auto& g : layer) {
            nlohmann::json jg;
            jg["qubits"] = g.qubits;
            nlohmann::json ju = nlohmann::json::array();
            for (const auto& z : g.unitary) ju.push_back({z.real(), z.imag()});
            jg["unitary"] = std::move(ju);
            jl.push_back(std::move(jg));
        }
        layers.push_back(std::move(jl));
    }
    j["layers"] = std::move(layers);
    out << j.dump(2) << '\n';
}

Distribution read_distribution(std::istream& in) {
    Distribution p;
    std::string bits;
    bool first = true;
    while (in >> bits) {
        double mass = 0.0;
        if (!(in >> mass))
            throw std::runtime_error("distribution parse: missing mass after bitstring");
        BitVector v = BitVector::from_string(bits);
        if (first) {
            p.n = v.size();
            first = false;
        } else if (v.size() != p.n) {
            throw std::runtime_error("distribution parse: inconsistent bitstring length");
        }
        p.support.emplace_back(std::move(v), mass);
    }
    if (first) throw std::runtime_error("distribution parse: empty input");
    return p;
}

void write_distribution(std::ostream& out, const Distribution& p) {
    for (const auto& [v, mass] : p.support)
        out << v.to_string() << ' ' << format_double(mass) << '\n';
}

std::string read_text_file(const std::string& path) {
    std::ifstream in = open_input(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out = open_output(path);
    out << content;
    if (!out) throw std::runtime_error("cannot write file: " + path);
}

BitMatrix load_matrix(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_matrix(in);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_edge_list(in);
}

CssCode load_css(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_css(in);
}

Circuit load_circuit_json(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_circuit_json(in);
}

Distribution load_distribution(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_distribution(in);
}

void save_matrix(const std::string& path, const BitMatrix& m) {
    std::ofstream out = open_output(path);
    write_matrix(out, m);
}

void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out = open_output(path);
    write_edge_list(out, g);
}

void save_css(const std::string& path, const CssCode& c) {
    std::ofstream out = open_output(path);
    write_css(out, c);
}

void save_circuit_json(const std::string& path, const Circuit& c) {
    std::ofstream out = open_output(path);
    write_circuit_json(out, c);
}

void save_distribution(const std::string& path, const Distribution& p) {
    std::ofstream out = open_output(path);
    write_distribution(out, p);
}

} // namespace epc
