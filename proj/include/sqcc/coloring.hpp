#ifndef SQCC_COLORING_HPP
#define SQCC_COLORING_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqcc/graph.hpp"

namespace sqcc {

/// Per-vertex color lists over a universe of nonnegative integer colors.
/// lists[v] belongs to vertex v; both universe and lists are sorted and distinct.
struct ListAssignment {
  std::vector<int> universe;
  std::vector<std::vector<int>> lists;

  // Full invariant: sorted distinct nonnegative universe, every list nonempty,
  // sorted, distinct and inside the universe. Throws InvalidInput.
  void validate() const;
};

/// Limits for a single search. Zero node_limit and no deadline means unlimited.
struct SearchBudget {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint64_t node_limit = 0;

  static SearchBudget unlimited() { return {}; }
  static SearchBudget within(std::chrono::steady_clock::duration d) {
    return {std::chrono::steady_clock::now() + d, 0};
  }
  static SearchBudget nodes(std::uint64_t limit) { return {std::nullopt, limit}; }
};

/// What a search did. complete means every branch was closed.
struct SearchAttestation {
  std::string solver;
  std::uint64_t nodes = 0;
  bool complete = false;
  std::optional<Vertex> empty_list_vertex;
};

struct ListColoringResult {
  bool colorable = false;
  std::vector<int> coloring;  // color of each vertex when colorable
  SearchAttestation attestation;
};

bool is_proper_coloring(const SimpleGraph& g, const std::vector<int>& coloring);
bool respects_lists(const ListAssignment& lists, const std::vector<int>& coloring);
std::size_t distinct_colors(const std::vector<int>& coloring);

struct ChromaticResult {
  int chromatic = 0;
  std::vector<int> coloring;  // colors 0..chromatic-1
  VertexSet clique;           // lower-bound witness from the greedy clique
  std::uint64_t nodes = 0;
};

inline constexpr std::size_t kChromaticMaxVertices = 128;

/// Exact chromatic number by DSATUR branch and bound, seeded with a greedy
/// clique (lower bound) and a greedy DSATUR coloring (upper bound).
/// Throws CapacityError above kChromaticMaxVertices and ResourceError (with
/// the current bounds) when the budget runs out.
ChromaticResult chromatic_number_exact(const SimpleGraph& g,
                                       const SearchBudget& budget = SearchBudget::unlimited());

VertexSet greedy_clique(const SimpleGraph& g);
std::vector<int> dsatur_coloring(const SimpleGraph& g);

/// Backtracking list coloring: smallest remaining list first, ties by index,
/// forward checking on neighbour lists. UNSAT only after full exhaustion.
ListColoringResult is_list_colorable(const SimpleGraph& g, const ListAssignment& lists,
                                     const SearchBudget& budget = SearchBudget::unlimited());

/// List coloring of the complete multipartite graph described by w.
///
/// A coloring amounts to one color set per part that meets every list of the
/// part, with the sets of different parts disjoint. Parts are searched in
/// order over such hitting sets. A node is cut when the colors still free are
/// fewer than the sum over open parts of 1 (if a free color lies in every
/// list of the part) or 2 (otherwise).
struct MultipartiteOptions {
  bool counting_cut = true;  // off: plain enumeration, cut only on wiped-out vertices
};

ListColoringResult multipartite_list_colorable(const PartitionWitness& w,
                                               const ListAssignment& lists,
                                               const SearchBudget& budget = SearchBudget::unlimited(),
                                               const MultipartiteOptions& options = {});

/// Lists on K_{n*r} with no coloring: blocks A_1..A_n split {1..2r-1} into
/// consecutive intervals (larger ones first), vertex k of every part gets
/// everything outside A_k, trimmed to the bound by dropping the largest colors.
struct VetrikAssignment {
  int n = 0;
  int r = 0;
  std::vector<std::vector<int>> blocks;
  ListAssignment assignment;  // vertex k of part p is p*n + k
  PartitionWitness parts;
  int bound = 0;
};

/// (n-1) * floor((2r-1)/n); the list chromatic number of K_{n*r} exceeds it.
int vetrik_lower_bound(int n, int r);

/// Requires n, r >= 2 and 2r-1 >= n (otherwise the bound is 0 and lists are empty).
VetrikAssignment vetrik_assignment(int n, int r);

struct GapCertificate {
  int n = 0;
  int chromatic = 0;
  std::string chromatic_method;  // "exact" or "partition"
  std::vector<int> coloring;     // colors 1..chromatic on the square
  VertexSet clique;              // chromatic-many pairwise adjacent vertices
  std::uint64_t chromatic_nodes = 0;
  PartitionWitness parts;
  int list_bound = 0;  // the square is not list_bound-choosable
  std::vector<std::vector<int>> blocks;
  ListAssignment refuted;
  SearchAttestation attestation;
  int gap_lower = 0;  // (list_bound + 1) - chromatic
};

/// Build, verify and refute for prime n >= 3. Budget covers the chromatic
/// search and the refutation; running out throws ResourceError.
GapCertificate certify_gap(int n, std::chrono::steady_clock::duration budget);

}  // namespace sqcc

#endif  // SQCC_COLORING_HPP
