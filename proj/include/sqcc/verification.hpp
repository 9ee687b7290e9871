#ifndef SQCC_VERIFICATION_HPP
#define SQCC_VERIFICATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqcc/construction.hpp"
#include "sqcc/graph.hpp"

namespace sqcc {

/// One universally quantified statement checked over all its instances.
/// Keeps the first failing instance and a count of all failures.
struct CheckItem {
  std::string id;
  std::string statement;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::size_t> witness;  // empty while passing

  bool passed() const noexcept { return failures == 0; }
  void record(bool ok, std::vector<std::size_t> instance);
};

struct LemmaReport {
  std::string lemma_id;
  std::uint64_t checked_cases = 0;
  std::uint64_t failures = 0;
  bool passed = true;
  std::optional<std::vector<std::size_t>> witness;  // set iff !passed
  std::vector<CheckItem> items;

  const CheckItem& item(const std::string& id) const;
};

// Recomputes the aggregate fields from the items.
LemmaReport make_report(std::string lemma_id, std::vector<CheckItem> items);

/// Neighbourhoods of Q-vertices: each is its Latin row, meets every P_k and
/// every T_k once, and two of them share at most one vertex (none inside one Q_i).
LemmaReport check_lemma_nw(const ConstructedGraph& gc);

/// For every k in 1..n: v_{k,L_i(j,k)} is a common neighbour of w_{i,j} and
/// w_{i',j'} iff (i-i')(k-1) = j'-j mod n.
bool check_claim_congruence(int n, int i, int i_prime, int j, int j_prime);

/// Each P-vertex has one neighbour in every Q_k; two P-vertices share at most
/// one neighbour in Q.
LemmaReport check_lemma_nv(const ConstructedGraph& gc);

/// All P_i and Q_i independent in sq.
LemmaReport check_independence(const SimpleGraph& sq, const ConstructedGraph& gc);

/// Every P-Q pair adjacent in sq.
LemmaReport check_pq_adjacency(const SimpleGraph& sq, const ConstructedGraph& gc);

struct StructureResult {
  PartitionWitness witness;
  LemmaReport report;
};

/// Squares gc.graph and checks it is K_{n*(2n-1)} on P_1..P_n, Q_1..Q_{n-1},
/// with |E(sq[P])| = n^3(n-1)/2 and |E(sq[Q])| = n^2(n-1)(n-2)/2.
StructureResult check_square_structure(const ConstructedGraph& gc);

enum class LemmaSelector { kAll, kNw, kNv, kIndependence, kPq, kStructure };

std::optional<LemmaSelector> parse_selector(const std::string& name);

struct VerificationRun {
  std::vector<LemmaReport> reports;
  std::optional<PartitionWitness> structure;

  bool passed() const noexcept;
};

VerificationRun run_verification(const ConstructedGraph& gc, LemmaSelector selector);

}  // namespace sqcc

#endif  // SQCC_VERIFICATION_HPP
