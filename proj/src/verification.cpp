#include "sqcc/verification.hpp"

#include <algorithm>
#include <stdexcept>

#include "sqcc/error.hpp"

namespace sqcc {

void CheckItem::record(bool ok, std::vector<std::size_t> instance) {
  ++cases;
  if (ok) return;
  if (failures++ == 0) witness = std::move(instance);
}

const CheckItem& LemmaReport::item(const std::string& id) const {
  for (const auto& it : items)
    if (it.id == id) return it;
  throw std::out_of_range("no check item " + id + " in " + lemma_id);
}

LemmaReport make_report(std::string lemma_id, std::vector<CheckItem> items) {
  LemmaReport r;
  r.lemma_id = std::move(lemma_id);
  r.items = std::move(items);
  for (const auto& it : r.items) {
    r.checked_cases += it.cases;
    r.failures += it.failures;
    if (!it.passed() && !r.witness) r.witness = it.witness;
  }
  r.passed = r.failures == 0;
  return r;
}

namespace {

BitRow mask_of(std::size_t n, const VertexSet& s) {
  BitRow m(n);
  for (Vertex v : s) m.set(v);
  return m;
}

std::vector<BitRow> masks_of(std::size_t n, const std::vector<VertexSet>& sets) {
  std::vector<BitRow> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(mask_of(n, s));
  return out;
}

}  // namespace

LemmaReport check_lemma_nw(const ConstructedGraph& gc) {
  const auto& g = gc.graph;
  const std::size_t nv = g.vertex_count();
  const auto p_masks = masks_of(nv, gc.p_sets);
  const auto t_masks = masks_of(nv, gc.t_sets);
  const VertexSet q = gc.q_union();

  CheckItem row{"nw.row", "N(w_{i,j}) is row j of L_i read as column positions", 0, 0, {}};
  CheckItem one_p{"nw.1", "|N(x) & P_k| = 1 for x in Q, k in [n]", 0, 0, {}};
  CheckItem one_t{"nw.2", "|N(x) & T_k| = 1 for x in Q, k in [n]", 0, 0, {}};
  CheckItem pairs{"nw.3", "|N(x) & N(y)| <= 1 for distinct x,y in Q; = 0 within one Q_i", 0, 0, {}};

  for (Vertex x : q) {
    const auto& label = gc.labels[x];
    BitRow expected(nv);
    for (const auto& v : neighbors_of_w(gc.n, label.first, label.second))
      expected.set(gc.index_of(v));
    row.record(g.neighbors(x) == expected, {x});
  }
  for (Vertex x : q) {
    for (std::size_t k = 0; k < p_masks.size(); ++k)
      one_p.record(intersection_count(g.neighbors(x), p_masks[k]) == 1, {x, k + 1});
    for (std::size_t k = 0; k < t_masks.size(); ++k)
      one_t.record(intersection_count(g.neighbors(x), t_masks[k]) == 1, {x, k + 1});
  }
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t b = a + 1; b < q.size(); ++b) {
      const Vertex x = q[a], y = q[b];
      const auto shared = intersection_count(g.neighbors(x), g.neighbors(y));
      const bool same_class = gc.labels[x].first == gc.labels[y].first;
      pairs.record(same_class ? shared == 0 : shared <= 1, {x, y});
    }
  }
  return make_report("nw", {row, one_p, one_t, pairs});
}

bool check_claim_congruence(int n, int i, int i_prime, int j, int j_prime) {
  if (i < 1 || i > n - 1 || i_prime < 1 || i_prime > n - 1 || j < 1 || j > n || j_prime < 1 ||
      j_prime > n)
    throw InvalidParameter("claim indices out of range for n = " + std::to_string(n));
  const auto first = neighbors_of_w(n, i, j);
  const auto second = neighbors_of_w(n, i_prime, j_prime);
  for (int k = 1; k <= n; ++k) {
    const auto& candidate = first[static_cast<std::size_t>(k - 1)];
    const bool shared = std::find(second.begin(), second.end(), candidate) != second.end();
    const int residue = (((i - i_prime) * (k - 1) - (j_prime - j)) % n + n) % n;
    if (shared != (residue == 0)) return false;
  }
  return true;
}

LemmaReport check_lemma_nv(const ConstructedGraph& gc) {
  const auto& g = gc.graph;
  const std::size_t nv = g.vertex_count();
  const auto q_masks = masks_of(nv, gc.q_sets);
  const BitRow q_mask = mask_of(nv, gc.q_union());
  const VertexSet p = gc.p_union();

  CheckItem one_q{"nv.1", "|N(x) & Q_k| = 1 for x in P, k in [n-1]", 0, 0, {}};
  CheckItem pairs{"nv.2", "|N(x) & N(y) & Q| <= 1 for distinct x,y in P", 0, 0, {}};

  for (Vertex x : p)
    for (std::size_t k = 0; k < q_masks.size(); ++k)
      one_q.record(intersection_count(g.neighbors(x), q_masks[k]) == 1, {x, k + 1});
  for (std::size_t a = 0; a < p.size(); ++a) {
    const BitRow nx_q = g.neighbors(p[a]) & q_mask;
    for (std::size_t b = a + 1; b < p.size(); ++b)
      pairs.record(intersection_count(nx_q, g.neighbors(p[b])) <= 1, {p[a], p[b]});
  }
  return make_report("nv", {one_q, pairs});
}

namespace {

void record_independent(CheckItem& item, const SimpleGraph& sq, const VertexSet& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (sq.has_edge(s[a], s[b])) {
        item.record(false, {s[a], s[b]});
        return;
      }
  item.record(true, {});
}

void require_same_order(const SimpleGraph& sq, const ConstructedGraph& gc) {
  if (sq.vertex_count() != gc.graph.vertex_count())
    throw InvalidInput("square has " + std::to_string(sq.vertex_count()) +
                       " vertices, construction has " + std::to_string(gc.graph.vertex_count()));
}

}  // namespace

LemmaReport check_independence(const SimpleGraph& sq, const ConstructedGraph& gc) {
  require_same_order(sq, gc);
  CheckItem p_item{"independence.P", "each P_i is independent in the square", 0, 0, {}};
  CheckItem q_item{"independence.Q", "each Q_i is independent in the square", 0, 0, {}};
  for (const auto& s : gc.p_sets) record_independent(p_item, sq, s);
  for (const auto& s : gc.q_sets) record_independent(q_item, sq, s);
  return make_report("independence", {p_item, q_item});
}

LemmaReport check_pq_adjacency(const SimpleGraph& sq, const ConstructedGraph& gc) {
  require_same_order(sq, gc);
  CheckItem item{"pq", "x ~ y in the square for every x in P, y in Q", 0, 0, {}};
  const VertexSet q = gc.q_union();
  for (Vertex x : gc.p_union())
    for (Vertex y : q) item.record(sq.has_edge(x, y), {x, y});
  return make_report("pq", {item});
}

StructureResult check_square_structure(const ConstructedGraph& gc) {
  const SimpleGraph sq = square(gc.graph);
  const auto n = static_cast<std::size_t>(gc.n);
  PartitionWitness witness = gc.square_parts();

  CheckItem shape{"structure.parts", "2n-1 parts, each of size n", 0, 0, {}};
  shape.record(witness.parts.size() == 2 * n - 1, {witness.parts.size()});
  for (std::size_t p = 0; p < witness.parts.size(); ++p)
    shape.record(witness.parts[p].size() == n, {p, witness.parts[p].size()});

  // Row-by-row form of is_complete_multipartite, so a failure names a pair.
  CheckItem multi{"structure.multipartite",
                  "square is complete multipartite on P_1..P_n, Q_1..Q_{n-1}", 0, 0, {}};
  const auto owner = witness.membership(sq.vertex_count());
  for (Vertex v = 0; v < sq.vertex_count(); ++v) {
    std::vector<std::size_t> bad;
    for (Vertex u = 0; u < sq.vertex_count() && bad.empty(); ++u)
      if (u != v && sq.has_edge(u, v) != (owner[u] != owner[v])) bad = {v, u};
    multi.record(bad.empty(), bad);
  }
  if (multi.passed() != is_complete_multipartite(sq, witness))
    throw std::logic_error("row check disagrees with is_complete_multipartite");

  CheckItem edges_p{"structure.edges_P", "|E(sq[P])| = n^2 * n(n-1)/2", 0, 0, {}};
  CheckItem edges_q{"structure.edges_Q", "|E(sq[Q])| = n^2 * (n-1)(n-2)/2", 0, 0, {}};
  const std::size_t got_p = induced_subgraph(sq, gc.p_union()).graph.edge_count();
  const std::size_t got_q = induced_subgraph(sq, gc.q_union()).graph.edge_count();
  const std::size_t want_p = n * n * (n * (n - 1) / 2);
  const std::size_t want_q = n * n * ((n - 1) * (n - 2) / 2);
  edges_p.record(got_p == want_p, {got_p, want_p});
  edges_q.record(got_q == want_q, {got_q, want_q});

  return {std::move(witness), make_report("structure", {shape, multi, edges_p, edges_q})};
}

std::optional<LemmaSelector> parse_selector(const std::string& name) {
  if (name == "all") return LemmaSelector::kAll;
  if (name == "nw") return LemmaSelector::kNw;
  if (name == "nv") return LemmaSelector::kNv;
  if (name == "independence") return LemmaSelector::kIndependence;
  if (name == "pq") return LemmaSelector::kPq;
  if (name == "structure") return LemmaSelector::kStructure;
  return std::nullopt;
}

bool VerificationRun::passed() const noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

VerificationRun run_verification(const ConstructedGraph& gc, LemmaSelector selector) {
  const auto want = [&](LemmaSelector s) {
    return selector == LemmaSelector::kAll || selector == s;
  };
  VerificationRun run;
  if (want(LemmaSelector::kNw)) run.reports.push_back(check_lemma_nw(gc));
  if (want(LemmaSelector::kNv)) run.reports.push_back(check_lemma_nv(gc));
  if (want(LemmaSelector::kIndependence) || want(LemmaSelector::kPq)) {
    const SimpleGraph sq = square(gc.graph);
    if (want(LemmaSelector::kIndependence)) run.reports.push_back(check_independence(sq, gc));
    if (want(LemmaSelector::kPq)) run.reports.push_back(check_pq_adjacency(sq, gc));
  }
  if (want(LemmaSelector::kStructure)) {
    auto structure = check_square_structure(gc);
    run.reports.push_back(std::move(structure.report));
    run.structure = std::move(structure.witness);
  }
  return run;
}

}  // namespace sqcc
