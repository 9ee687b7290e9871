#include "sqcc/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "sqcc/error.hpp"

namespace sqcc {

PartitionWitness GraphDocument::witness() const {
  PartitionWitness w;
  for (const auto& [name, set] : parts) w.parts.push_back(set);
  return w;
}

GraphDocument document_of(const ConstructedGraph& gc) {
  GraphDocument doc;
  doc.graph = gc.graph;
  for (Vertex v = 0; v < gc.labels.size(); ++v) doc.labels[v] = gc.labels[v].name();
  for (std::size_t i = 0; i < gc.p_sets.size(); ++i)
    doc.parts.emplace_back("P_" + std::to_string(i + 1), gc.p_sets[i]);
  for (std::size_t i = 0; i < gc.q_sets.size(); ++i)
    doc.parts.emplace_back("Q_" + std::to_string(i + 1), gc.q_sets[i]);
  for (std::size_t j = 0; j < gc.t_sets.size(); ++j)
    doc.cliques.emplace_back("T_" + std::to_string(j + 1), gc.t_sets[j]);
  return doc;
}

void write_dot(std::ostream& out, const GraphDocument& doc) {
  const std::size_t n = doc.graph.vertex_count();
  const bool named = doc.labels.size() == n;
  const auto id = [&](Vertex v) { return named ? doc.labels.at(v) : std::to_string(v); };
  out << "graph G {\n";
  for (Vertex v = 0; v < n; ++v) out << "  " << id(v) << ";\n";
  for (const auto& [u, v] : doc.graph.edges()) out << "  " << id(u) << " -- " << id(v) << ";\n";
  out << "}\n";
}

void write_dimacs(std::ostream& out, const SimpleGraph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

SimpleGraph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  SimpleGraph g;
  const auto fail = [&](const std::string& why) -> InvalidInput {
    return InvalidInput("DIMACS line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      long long n = -1, m = -1;
      if (have_header) throw fail("second problem line");
      if (!(ls >> format >> n >> m) || (format != "edge" && format != "col") || n < 0 || m < 0)
        throw fail("expected 'p edge <vertices> <edges>'");
      g = SimpleGraph(static_cast<std::size_t>(n));
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw fail("edge before problem line");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw fail("expected 'e <u> <v>'");
      const auto n = static_cast<long long>(g.vertex_count());
      if (u < 1 || v < 1 || u > n || v > n) throw fail("vertex out of range");
      if (u == v) throw fail("self-loop");
      g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw fail("unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw InvalidInput("DIMACS input has no problem line");
  return g;
}

namespace {

Json sets_to_json(const NamedSets& sets) {
  Json j = Json::object();
  for (const auto& [name, set] : sets) j[name] = set;
  return j;
}

NamedSets sets_from_json(const Json& j, std::size_t n, const char* what) {
  NamedSets out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw InvalidInput(std::string(what) + " must be an object");
  for (const auto& [name, arr] : j.items()) {
    if (!arr.is_array()) throw InvalidInput(std::string(what) + "." + name + " must be an array");
    VertexSet set;
    for (const auto& x : arr) {
      if (!x.is_number_unsigned() || x.get<std::size_t>() >= n)
        throw InvalidInput(std::string(what) + "." + name + " has a bad vertex index");
      set.push_back(x.get<Vertex>());
    }
    out.emplace_back(name, std::move(set));
  }
  return out;
}

Vertex index_key(const std::string& key, std::size_t n, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty() || v >= n)
    throw InvalidInput(std::string(what) + " key '" + key + "' is not a vertex index");
  return static_cast<Vertex>(v);
}

}  // namespace

Json graph_to_json(const GraphDocument& doc) {
  Json j;
  j["n_vertices"] = doc.graph.vertex_count();
  Json edges = Json::array();
  for (const auto& [u, v] : doc.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  Json labels = Json::object();
  for (const auto& [v, name] : doc.labels) labels[std::to_string(v)] = name;
  j["labels"] = std::move(labels);
  j["parts"] = sets_to_json(doc.parts);
  j["cliques"] = sets_to_json(doc.cliques);
  return j;
}

GraphDocument graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n_vertices") || !j["n_vertices"].is_number_unsigned())
    throw InvalidInput("graph JSON needs an unsigned \"n_vertices\"");
  const auto n = j["n_vertices"].get<std::size_t>();
  GraphDocument doc;
  doc.graph = SimpleGraph(n);
  const Json& edges = j.contains("edges") ? j["edges"] : Json::array();
  if (!edges.is_array()) throw InvalidInput("\"edges\" must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InvalidInput("each edge must be a pair of vertex indices");
    const auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
    if (u >= n || v >= n || u == v) throw InvalidInput("edge [" + std::to_string(u) + "," +
                                                       std::to_string(v) + "] is invalid");
    doc.graph.add_edge(u, v);
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_object()) throw InvalidInput("\"labels\" must be an object");
    for (const auto& [key, name] : j["labels"].items()) {
      if (!name.is_string()) throw InvalidInput("label values must be strings");
      doc.labels[index_key(key, n, "labels")] = name.get<std::string>();
    }
  }
  doc.parts = sets_from_json(j.value("parts", Json()), n, "parts");
  doc.cliques = sets_from_json(j.value("cliques", Json()), n, "cliques");
  return doc;
}

Json lists_to_json(const ListAssignment& lists) {
  Json j;
  j["universe"] = lists.universe;
  Json per = Json::object();
  for (std::size_t v = 0; v < lists.lists.size(); ++v) per[std::to_string(v)] = lists.lists[v];
  j["lists"] = std::move(per);
  return j;
}

ListAssignment lists_from_json(const Json& j, std::size_t vertex_count) {
  if (!j.is_object() || !j.contains("universe") || !j["universe"].is_array() ||
      !j.contains("lists") || !j["lists"].is_object())
    throw InvalidInput("lists JSON needs \"universe\" (array) and \"lists\" (object)");
  const auto colors = [](const Json& arr, const std::string& where) {
    std::vector<int> out;
    for (const auto& c : arr) {
      if (!c.is_number_integer() || c.get<long long>() < 0 ||
          c.get<long long>() > std::numeric_limits<int>::max())
        throw InvalidInput(where + " holds a color that is not a nonnegative integer");
      out.push_back(c.get<int>());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  ListAssignment la;
  la.universe = colors(j["universe"], "universe");
  la.lists.assign(vertex_count, {});
  for (const auto& [key, arr] : j["lists"].items()) {
    if (!arr.is_array()) throw InvalidInput("list " + key + " must be an array");
    la.lists[index_key(key, vertex_count, "lists")] = colors(arr, "list " + key);
  }
  return la;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

GraphDocument read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  char first = 0;
  in >> std::ws;
  first = static_cast<char>(in.peek());
  if (first == '{') return graph_from_json(read_json_file(path));
  GraphDocument doc;
  doc.graph = read_dimacs(in);
  return doc;
}

Json to_json(const CheckItem& item) {
  Json j;
  j["id"] = item.id;
  j["statement"] = item.statement;
  j["cases"] = item.cases;
  j["failures"] = item.failures;
  j["passed"] = item.passed();
  j["witness"] = item.passed() ? Json(nullptr) : Json(item.witness);
  return j;
}

Json to_json(const LemmaReport& report) {
  Json j;
  j["lemma"] = report.lemma_id;
  j["passed"] = report.passed;
  j["checked_cases"] = report.checked_cases;
  j["failures"] = report.failures;
  j["witness"] = report.witness ? Json(*report.witness) : Json(nullptr);
  Json items = Json::array();
  for (const auto& it : report.items) items.push_back(to_json(it));
  j["items"] = std::move(items);
  return j;
}

Json to_json(const PartitionWitness& w) { return Json(w.parts); }

Json to_json(const SearchAttestation& a) {
  Json j;
  j["solver"] = a.solver;
  j["nodes"] = a.nodes;
  j["complete"] = a.complete;
  j["empty_list_vertex"] = a.empty_list_vertex ? Json(*a.empty_list_vertex) : Json(nullptr);
  return j;
}

Json to_json(const ListColoringResult& r) {
  Json j;
  j["verdict"] = r.colorable ? "SAT" : "UNSAT";
  if (r.colorable) {
    Json map = Json::object();
    for (std::size_t v = 0; v < r.coloring.size(); ++v) map[std::to_string(v)] = r.coloring[v];
    j["coloring"] = std::move(map);
  }
  j["attestation"] = to_json(r.attestation);
  return j;
}

Json to_json(const GapCertificate& cert) {
  Json j;
  j["n"] = cert.n;
  j["chromatic"] = cert.chromatic;
  j["not_choosable"] = cert.list_bound;
  j["gap_lower"] = cert.gap_lower;
  Json chrom;
  chrom["method"] = cert.chromatic_method;
  chrom["coloring"] = cert.coloring;
  chrom["clique"] = cert.clique;
  chrom["nodes"] = cert.chromatic_nodes;
  j["chromatic_witness"] = std::move(chrom);
  j["parts"] = to_json(cert.parts);
  Json ref;
  ref["part_size"] = cert.n;
  ref["part_count"] = cert.parts.parts.size();
  ref["list_size"] = cert.list_bound;
  ref["blocks"] = cert.blocks;
  ref["assignment"] = lists_to_json(cert.refuted);
  ref["attestation"] = to_json(cert.attestation);
  j["refutation"] = std::move(ref);
  return j;
}

Json to_json(const MolsFamily& family) {
  Json j;
  j["n"] = family.order;
  Json squares = Json::array();
  for (const auto& s : family.squares) {
    Json rows = Json::array();
    for (int r = 1; r <= s.order(); ++r) {
      Json row = Json::array();
      for (int c = 1; c <= s.order(); ++c) row.push_back(s(r, c));
      rows.push_back(std::move(row));
    }
    squares.push_back(std::move(rows));
  }
  j["squares"] = std::move(squares);
  return j;
}

void write_square(std::ostream& out, const LatinSquare& s) {
  const int width = static_cast<int>(std::to_string(s.order()).size());
  for (int r = 1; r <= s.order(); ++r) {
    for (int c = 1; c <= s.order(); ++c) {
      const std::string cell = std::to_string(s(r, c));
      out << (c > 1 ? " " : "") << std::string(static_cast<std::size_t>(width) - cell.size(), ' ')
          << cell;
    }
    out << '\n';
  }
}

}  // namespace sqcc
