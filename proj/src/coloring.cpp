#include "sqcc/coloring.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "sqcc/construction.hpp"
#include "sqcc/error.hpp"
#include "sqcc/latin.hpp"
#include "sqcc/verification.hpp"

namespace sqcc {

namespace {

bool sorted_distinct(const std::vector<int>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), [](int a, int b) { return a >= b; }) == xs.end();
}

// Tracks node count against a budget; deadline polled every 1024 nodes.
class BudgetMeter {
 public:
  BudgetMeter(const SearchBudget& budget, std::string what)
      : budget_(budget), what_(std::move(what)) {}

  // false once the budget is gone
  bool tick() {
    ++nodes_;
    if (budget_.node_limit != 0 && nodes_ > budget_.node_limit) return false;
    if (budget_.deadline && (nodes_ & 1023U) == 1 &&
        std::chrono::steady_clock::now() > *budget_.deadline)
      return false;
    return true;
  }
  std::uint64_t nodes() const noexcept { return nodes_; }

  [[noreturn]] void exhausted(int lower = -1, int upper = -1) const {
    throw ResourceError(what_ + ": search budget exhausted after " + std::to_string(nodes_) +
                            " nodes",
                        nodes_, lower, upper);
  }

 private:
  SearchBudget budget_;
  std::string what_;
  std::uint64_t nodes_ = 0;
};

// Lists as bit rows over universe positions. Colors outside the universe throw.
std::vector<BitRow> list_rows(const ListAssignment& lists) {
  if (!sorted_distinct(lists.universe))
    throw InvalidInput("color universe must be sorted and distinct");
  std::vector<BitRow> rows;
  rows.reserve(lists.lists.size());
  for (std::size_t v = 0; v < lists.lists.size(); ++v) {
    BitRow row(lists.universe.size());
    for (int c : lists.lists[v]) {
      const auto it = std::lower_bound(lists.universe.begin(), lists.universe.end(), c);
      if (it == lists.universe.end() || *it != c)
        throw InvalidInput("color " + std::to_string(c) + " of vertex " + std::to_string(v) +
                           " is not in the universe");
      row.set(static_cast<std::size_t>(it - lists.universe.begin()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ListColoringResult unsat_empty_list(const std::string& solver, Vertex v) {
  ListColoringResult r;
  r.attestation = {solver, 0, true, v};
  return r;
}

std::optional<Vertex> first_empty(const std::vector<BitRow>& rows) {
  for (Vertex v = 0; v < rows.size(); ++v)
    if (rows[v].none()) return v;
  return std::nullopt;
}

}  // namespace

void ListAssignment::validate() const {
  if (!sorted_distinct(universe)) throw InvalidInput("color universe must be sorted and distinct");
  if (!universe.empty() && universe.front() < 0) throw InvalidInput("colors must be nonnegative");
  for (std::size_t v = 0; v < lists.size(); ++v) {
    if (lists[v].empty()) throw InvalidInput("list of vertex " + std::to_string(v) + " is empty");
    if (!sorted_distinct(lists[v]))
      throw InvalidInput("list of vertex " + std::to_string(v) + " is not sorted and distinct");
    if (!std::includes(universe.begin(), universe.end(), lists[v].begin(), lists[v].end()))
      throw InvalidInput("list of vertex " + std::to_string(v) + " leaves the universe");
  }
}

bool is_proper_coloring(const SimpleGraph& g, const std::vector<int>& coloring) {
  if (coloring.size() != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges())
    if (coloring[u] == coloring[v]) return false;
  return true;
}

bool respects_lists(const ListAssignment& lists, const std::vector<int>& coloring) {
  if (coloring.size() != lists.lists.size()) return false;
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    const auto& l = lists.lists[v];
    if (std::find(l.begin(), l.end(), coloring[v]) == l.end()) return false;
  }
  return true;
}

std::size_t distinct_colors(const std::vector<int>& coloring) {
  return std::set<int>(coloring.begin(), coloring.end()).size();
}

VertexSet greedy_clique(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  VertexSet best;
  for (Vertex start = 0; start < n; ++start) {
    VertexSet clique{start};
    BitRow cand = g.neighbors(start);
    while (cand.any()) {
      Vertex pick = BitRow::npos;
      std::size_t pick_deg = 0;
      cand.for_each([&](std::size_t c) {
        const auto d = intersection_count(g.neighbors(c), cand);
        if (pick == BitRow::npos || d > pick_deg) {
          pick = c;
          pick_deg = d;
        }
      });
      clique.push_back(pick);
      cand &= g.neighbors(pick);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

namespace {

// Saturation bookkeeping shared by the greedy and exact DSATUR passes.
class DsaturState {
 public:
  DsaturState(const SimpleGraph& g, std::size_t max_colors)
      : g_(g),
        colors_(max_colors),
        color_(g.vertex_count(), -1),
        adjacent_(g.vertex_count() * max_colors, 0),
        saturation_(g.vertex_count(), 0),
        uncolored_(g.vertex_count()) {
    uncolored_.fill();
  }

  Vertex select() const {
    Vertex best = BitRow::npos;
    std::size_t best_sat = 0, best_deg = 0;
    uncolored_.for_each([&](std::size_t v) {
      const std::size_t sat = saturation_[v];
      const std::size_t deg = intersection_count(g_.neighbors(v), uncolored_);
      if (best == BitRow::npos || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    });
    return best;
  }

  bool allowed(Vertex v, int c) const { return adjacent_[v * colors_ + static_cast<std::size_t>(c)] == 0; }

  void assign(Vertex v, int c) {
    color_[v] = c;
    uncolored_.reset(v);
    g_.neighbors(v).for_each([&](std::size_t u) {
      if (adjacent_[u * colors_ + static_cast<std::size_t>(c)]++ == 0) ++saturation_[u];
    });
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    uncolored_.set(v);
    g_.neighbors(v).for_each([&](std::size_t u) {
      if (--adjacent_[u * colors_ + static_cast<std::size_t>(c)] == 0) --saturation_[u];
    });
  }

  const std::vector<int>& colors() const noexcept { return color_; }

 private:
  const SimpleGraph& g_;
  std::size_t colors_;
  std::vector<int> color_;
  std::vector<std::uint32_t> adjacent_;  // [vertex][color] neighbour counts
  std::vector<std::size_t> saturation_;
  BitRow uncolored_;
};

class ChromaticSearch {
 public:
  ChromaticSearch(const SimpleGraph& g, int lower, int upper, std::vector<int> upper_coloring,
                  const SearchBudget& budget)
      : g_(g),
        state_(g, static_cast<std::size_t>(upper)),
        lower_(lower),
        best_(upper),
        best_coloring_(std::move(upper_coloring)),
        meter_(budget, "chromatic_number_exact") {}

  void run() {
    if (best_ > lower_) dive(0, 0);
  }
  int best() const noexcept { return best_; }
  const std::vector<int>& best_coloring() const noexcept { return best_coloring_; }
  std::uint64_t nodes() const noexcept { return meter_.nodes(); }

 private:
  void dive(std::size_t colored, int used) {
    if (!meter_.tick()) meter_.exhausted(lower_, best_);
    if (colored == g_.vertex_count()) {
      best_ = used;
      best_coloring_ = state_.colors();
      return;
    }
    const Vertex v = state_.select();
    for (int c = 0; c <= used; ++c) {
      if (std::max(used, c + 1) >= best_) break;
      if (!state_.allowed(v, c)) continue;
      state_.assign(v, c);
      dive(colored + 1, std::max(used, c + 1));
      state_.unassign(v);
      if (best_ == lower_) return;
    }
  }

  const SimpleGraph& g_;
  DsaturState state_;
  int lower_;
  int best_;
  std::vector<int> best_coloring_;
  BudgetMeter meter_;
};

}  // namespace

std::vector<int> dsatur_coloring(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  DsaturState state(g, std::max<std::size_t>(n, 1));
  for (std::size_t step = 0; step < n; ++step) {
    const Vertex v = state.select();
    int c = 0;
    while (!state.allowed(v, c)) ++c;
    state.assign(v, c);
  }
  return state.colors();
}

ChromaticResult chromatic_number_exact(const SimpleGraph& g, const SearchBudget& budget) {
  if (g.vertex_count() > kChromaticMaxVertices)
    throw CapacityError("chromatic_number_exact supports at most " +
                        std::to_string(kChromaticMaxVertices) + " vertices, got " +
                        std::to_string(g.vertex_count()));
  ChromaticResult result;
  if (g.vertex_count() == 0) return result;

  result.clique = greedy_clique(g);
  std::vector<int> upper_coloring = dsatur_coloring(g);
  const int lower = static_cast<int>(result.clique.size());
  const int upper = static_cast<int>(distinct_colors(upper_coloring));

  ChromaticSearch search(g, lower, upper, std::move(upper_coloring), budget);
  search.run();
  result.chromatic = search.best();
  result.coloring = search.best_coloring();
  result.nodes = search.nodes();
  return result;
}

namespace {

class GenericListSearch {
 public:
  GenericListSearch(const SimpleGraph& g, std::vector<BitRow> domains, const SearchBudget& budget)
      : g_(g),
        domains_(std::move(domains)),
        color_(g.vertex_count(), BitRow::npos),
        uncolored_(g.vertex_count()),
        meter_(budget, "is_list_colorable") {
    uncolored_.fill();
  }

  bool run() { return dive(); }
  std::uint64_t nodes() const noexcept { return meter_.nodes(); }
  const std::vector<std::size_t>& colors() const noexcept { return color_; }

 private:
  bool dive() {
    if (!meter_.tick()) meter_.exhausted();
    Vertex v = BitRow::npos;
    std::size_t smallest = std::numeric_limits<std::size_t>::max();
    uncolored_.for_each([&](std::size_t u) {
      const std::size_t s = domains_[u].count();
      if (s < smallest) {
        smallest = s;
        v = u;
      }
    });
    if (v == BitRow::npos) return true;
    if (smallest == 0) return false;

    const BitRow options = domains_[v];
    uncolored_.reset(v);
    for (auto c = options.find_first(); c != BitRow::npos; c = options.find_next(c)) {
      color_[v] = c;
      const std::size_t mark = trail_.size();
      bool wiped = false;
      const BitRow open_neighbors = g_.neighbors(v) & uncolored_;
      open_neighbors.for_each([&](std::size_t u) {
        if (domains_[u].test(c)) {
          domains_[u].reset(c);
          trail_.push_back(u);
          if (domains_[u].none()) wiped = true;
        }
      });
      if (!wiped && dive()) return true;
      while (trail_.size() > mark) {
        domains_[trail_.back()].set(c);
        trail_.pop_back();
      }
    }
    color_[v] = BitRow::npos;
    uncolored_.set(v);
    return false;
  }

  const SimpleGraph& g_;
  std::vector<BitRow> domains_;
  std::vector<std::size_t> color_;
  BitRow uncolored_;
  std::vector<Vertex> trail_;
  BudgetMeter meter_;
};

}  // namespace

ListColoringResult is_list_colorable(const SimpleGraph& g, const ListAssignment& lists,
                                     const SearchBudget& budget) {
  if (lists.lists.size() != g.vertex_count())
    throw InvalidInput("list assignment covers " + std::to_string(lists.lists.size()) +
                       " vertices, graph has " + std::to_string(g.vertex_count()));
  auto rows = list_rows(lists);
  if (auto v = first_empty(rows)) return unsat_empty_list("generic", *v);

  GenericListSearch search(g, std::move(rows), budget);
  ListColoringResult r;
  r.colorable = search.run();
  r.attestation = {"generic", search.nodes(), true, std::nullopt};
  if (r.colorable)
    for (std::size_t c : search.colors()) r.coloring.push_back(lists.universe[c]);
  return r;
}

namespace {

class MultipartiteSearch {
 public:
  MultipartiteSearch(const PartitionWitness& w, std::vector<BitRow> rows,
                     std::size_t universe_size, const SearchBudget& budget,
                     const MultipartiteOptions& options)
      : w_(w),
        options_(options),
        rows_(std::move(rows)),
        universe_size_(universe_size),
        chosen_(w.parts.size(), BitRow(universe_size)),
        meter_(budget, "multipartite_list_colorable") {}

  bool run() {
    BitRow avail(universe_size_);
    avail.fill();
    return open_part(0, avail);
  }
  std::uint64_t nodes() const noexcept { return meter_.nodes(); }
  const std::vector<BitRow>& chosen() const noexcept { return chosen_; }

 private:
  // Lower bound on colors the parts from `first` on still need; npos if one
  // of their vertices has no free color left.
  std::size_t demand(std::size_t first, const BitRow& avail) const {
    std::size_t need = 0;
    for (std::size_t p = first; p < w_.parts.size(); ++p) {
      BitRow common = avail;
      for (Vertex v : w_.parts[p]) {
        if (!intersects(rows_[v], avail)) return BitRow::npos;
        common &= rows_[v];
      }
      need += common.any() ? 1 : 2;
    }
    return need;
  }

  bool open_part(std::size_t p, const BitRow& avail) {
    if (!meter_.tick()) meter_.exhausted();
    if (p == w_.parts.size()) return true;
    const std::size_t need = demand(p, avail);
    if (need == BitRow::npos) return false;
    if (options_.counting_cut && avail.count() < need) return false;
    BitRow& chosen = chosen_[p];
    chosen.clear();
    BitRow banned(universe_size_);
    return extend(p, avail, chosen, banned);
  }

  // Grow `chosen` until it meets every list of part p. Each color tried at a
  // vertex is banned for the later siblings so every set is produced once.
  bool extend(std::size_t p, const BitRow& avail, BitRow& chosen, BitRow& banned) {
    Vertex open = BitRow::npos;
    for (Vertex v : w_.parts[p])
      if (!intersects(rows_[v], chosen)) {
        open = v;
        break;
      }
    if (open == BitRow::npos) {
      BitRow rest = avail;
      rest.subtract(chosen);
      return open_part(p + 1, rest);
    }
    if (!meter_.tick()) meter_.exhausted();
    BitRow options = rows_[open] & avail;
    options.subtract(banned);
    const BitRow banned_before = banned;
    bool found = false;
    for (auto c = options.find_first(); c != BitRow::npos && !found; c = options.find_next(c)) {
      chosen.set(c);
      found = extend(p, avail, chosen, banned);
      if (!found) {
        chosen.reset(c);
        banned.set(c);
      }
    }
    banned = banned_before;
    return found;
  }

  const PartitionWitness& w_;
  MultipartiteOptions options_;
  std::vector<BitRow> rows_;
  std::size_t universe_size_;
  std::vector<BitRow> chosen_;
  BudgetMeter meter_;
};

}  // namespace

ListColoringResult multipartite_list_colorable(const PartitionWitness& w,
                                               const ListAssignment& lists,
                                               const SearchBudget& budget,
                                               const MultipartiteOptions& options) {
  if (w.vertex_count() != lists.lists.size())
    throw InvalidInput("partition covers " + std::to_string(w.vertex_count()) +
                       " vertices, list assignment has " + std::to_string(lists.lists.size()));
  w.membership(lists.lists.size());
  auto rows = list_rows(lists);
  if (auto v = first_empty(rows)) return unsat_empty_list("multipartite", *v);

  MultipartiteSearch search(w, rows, lists.universe.size(), budget, options);
  ListColoringResult r;
  r.colorable = search.run();
  r.attestation = {"multipartite", search.nodes(), true, std::nullopt};
  if (r.colorable) {
    r.coloring.assign(lists.lists.size(), 0);
    for (std::size_t p = 0; p < w.parts.size(); ++p)
      for (Vertex v : w.parts[p]) {
        const auto c = (rows[v] & search.chosen()[p]).find_first();
        r.coloring[v] = lists.universe[c];
      }
  }
  return r;
}

int vetrik_lower_bound(int n, int r) {
  if (n < 2 || r < 2)
    throw InvalidParameter("need n, r >= 2, got n = " + std::to_string(n) +
                           ", r = " + std::to_string(r));
  return (n - 1) * ((2 * r - 1) / n);
}

VetrikAssignment vetrik_assignment(int n, int r) {
  const int bound = vetrik_lower_bound(n, r);
  const int total = 2 * r - 1;
  if (total < n)
    throw InvalidParameter("need 2r-1 >= n for nonempty lists, got n = " + std::to_string(n) +
                           ", r = " + std::to_string(r));

  VetrikAssignment va;
  va.n = n;
  va.r = r;
  va.bound = bound;
  const int base = total / n;
  const int larger = total % n;
  int next = 1;
  for (int j = 0; j < n; ++j) {
    const int size = base + (j < larger ? 1 : 0);
    std::vector<int> block;
    for (int t = 0; t < size; ++t) block.push_back(next++);
    va.blocks.push_back(std::move(block));
  }

  for (int c = 1; c <= total; ++c) va.assignment.universe.push_back(c);
  std::vector<std::vector<int>> per_position;
  for (int k = 0; k < n; ++k) {
    std::vector<int> list;
    const auto& excluded = va.blocks[static_cast<std::size_t>(k)];
    for (int c = 1; c <= total && static_cast<int>(list.size()) < bound; ++c)
      if (std::find(excluded.begin(), excluded.end(), c) == excluded.end()) list.push_back(c);
    per_position.push_back(std::move(list));
  }
  for (int p = 0; p < r; ++p)
    for (int k = 0; k < n; ++k) va.assignment.lists.push_back(per_position[static_cast<std::size_t>(k)]);
  va.parts = equal_parts(static_cast<std::size_t>(n), static_cast<std::size_t>(r));
  return va;
}

GapCertificate certify_gap(int n, std::chrono::steady_clock::duration budget) {
  require_odd_prime(n);
  const auto deadline = std::chrono::steady_clock::now() + budget;
  const SearchBudget search_budget{deadline, 0};

  const ConstructedGraph gc = construct_counterexample(n);
  StructureResult structure = check_square_structure(gc);
  if (!structure.report.passed)
    throw std::logic_error("square of the construction is not K_{n*(2n-1)} for n = " +
                           std::to_string(n));
  const SimpleGraph sq = square(gc.graph);
  const int parts = 2 * n - 1;

  GapCertificate cert;
  cert.n = n;
  cert.parts = std::move(structure.witness);

  if (sq.vertex_count() <= kChromaticMaxVertices) {
    const ChromaticResult exact = chromatic_number_exact(sq, search_budget);
    if (exact.chromatic != parts)
      throw std::logic_error("exact chromatic number " + std::to_string(exact.chromatic) +
                             " differs from the part count " + std::to_string(parts));
    cert.chromatic_method = "exact";
    cert.chromatic = exact.chromatic;
    cert.clique = exact.clique;
    cert.chromatic_nodes = exact.nodes;
    for (int c : exact.coloring) cert.coloring.push_back(c + 1);
  } else {
    // Past the exact solver's size guard: color by part, bound below by a
    // transversal clique. Both are checked below like the exact witness.
    cert.chromatic_method = "partition";
    cert.chromatic = parts;
    cert.coloring.assign(sq.vertex_count(), 0);
    for (std::size_t p = 0; p < cert.parts.parts.size(); ++p) {
      for (Vertex v : cert.parts.parts[p]) cert.coloring[v] = static_cast<int>(p) + 1;
      cert.clique.push_back(cert.parts.parts[p].front());
    }
  }
  if (!is_proper_coloring(sq, cert.coloring) ||
      distinct_colors(cert.coloring) != static_cast<std::size_t>(cert.chromatic) ||
      cert.clique.size() != static_cast<std::size_t>(cert.chromatic) || !is_clique(sq, cert.clique))
    throw std::logic_error("chromatic witness failed validation");

  const VetrikAssignment va = vetrik_assignment(n, parts);
  cert.list_bound = va.bound;
  cert.blocks = va.blocks;
  cert.refuted.universe = va.assignment.universe;
  cert.refuted.lists.assign(sq.vertex_count(), {});
  for (std::size_t p = 0; p < cert.parts.parts.size(); ++p)
    for (std::size_t k = 0; k < cert.parts.parts[p].size(); ++k)
      cert.refuted.lists[cert.parts.parts[p][k]] = va.assignment.lists[p * static_cast<std::size_t>(n) + k];
  cert.refuted.validate();

  const ListColoringResult refutation =
      multipartite_list_colorable(cert.parts, cert.refuted, search_budget);
  if (refutation.colorable)
    throw std::logic_error("adversarial list assignment turned out colorable");
  cert.attestation = refutation.attestation;
  cert.gap_lower = cert.list_bound + 1 - cert.chromatic;
  if (cert.gap_lower < n - 1) throw std::logic_error("gap below n-1");
  return cert;
}

}  // namespace sqcc
