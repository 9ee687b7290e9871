#ifndef SQCC_SERIALIZE_HPP
#define SQCC_SERIALIZE_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sqcc/coloring.hpp"
#include "sqcc/construction.hpp"
#include "sqcc/graph.hpp"
#include "sqcc/latin.hpp"
#include "sqcc/verification.hpp"

namespace sqcc {

using Json = nlohmann::ordered_json;
using NamedSets = std::vector<std::pair<std::string, VertexSet>>;

/// A graph plus the optional annotations carried by the JSON schema.
struct GraphDocument {
  SimpleGraph graph;
  std::map<Vertex, std::string> labels;
  NamedSets parts;
  NamedSets cliques;

  // parts as a witness; empty when the document has none
  PartitionWitness witness() const;
};

GraphDocument document_of(const ConstructedGraph& gc);

// Node ids are the labels when every vertex has one, else the indices.
void write_dot(std::ostream& out, const GraphDocument& doc);

// "p edge <n> <m>" then "e <u> <v>", 1-based, u < v, sorted.
void write_dimacs(std::ostream& out, const SimpleGraph& g);
// Accepts comment lines ("c ..."), one "p edge" line, and "e" lines in any
// order; duplicate edges collapse. Throws InvalidInput with the line number.
SimpleGraph read_dimacs(std::istream& in);

// {"n_vertices", "edges", "labels", "parts", "cliques"} with 0-based indices
// and sorted edges.
Json graph_to_json(const GraphDocument& doc);
GraphDocument graph_from_json(const Json& j);

// {"universe": [...], "lists": {"<index>": [...]}}
Json lists_to_json(const ListAssignment& lists);
// vertex_count fixes the list count; missing vertices get empty lists.
ListAssignment lists_from_json(const Json& j, std::size_t vertex_count);

// Reads JSON (first non-space '{') or DIMACS.
GraphDocument read_graph_file(const std::string& path);
Json read_json_file(const std::string& path);

Json to_json(const CheckItem& item);
Json to_json(const LemmaReport& report);
Json to_json(const PartitionWitness& w);
Json to_json(const SearchAttestation& a);
Json to_json(const ListColoringResult& r);
Json to_json(const GapCertificate& cert);
Json to_json(const MolsFamily& family);

void write_square(std::ostream& out, const LatinSquare& s);

}  // namespace sqcc

#endif  // SQCC_SERIALIZE_HPP
