#pragma once

// Readers and writers for the on-disk formats shared by the command
// line tools: dense 0/1 matrices, edge lists, CSS check pairs, layered
// circuits in JSON, and sampled distributions.

#include <iosfwd>
#include <string>

#include "epc/circuit.hpp"
#include "epc/css.hpp"
#include "epc/gf2.hpp"
#include "epc/graph.hpp"

namespace epc {

// "rows cols" header, then one 0/1 string per row.
BitMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const BitMatrix& m);

// "n m" header, then one "u v" pair per edge.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Two matrix blocks, hx then hz, separated by a "---" line; reading
// validates orthogonality through make_css.
CssCode read_css(std::istream& in);
void write_css(std::ostream& out, const CssCode& c);

// {"n": ..., "layers": [[{"qubits": [...], "unitary": [[re, im], ...]}, ...], ...]}
// with row-major unitaries; reading runs validate_circuit.
Circuit read_circuit_json(std::istream& in);
void write_circuit_json(std::ostream& out, const Circuit& c);

// One "bitstring mass" pair per line.
Distribution read_distribution(std::istream& in);
void write_distribution(std::ostream& out, const Distribution& p);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

BitMatrix load_matrix(const std::string& path);
Graph load_edge_list(const std::string& path);
CssCode load_css(const std::string& path);
Circuit load_circuit_json(const std::string& path);
Distribution load_distribution(const std::string& path);

void save_matrix(const std::string& path, const BitMatrix& m);
void save_edge_list(const std::string& path, const Graph& g);
void save_css(const std::string& path, const CssCode& c);
void save_circuit_json(const std::string& path, const Circuit& c);
void save_distribution(const std::string& path, const Distribution& p);

} // namespace epc
