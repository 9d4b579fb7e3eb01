#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rotinv/invariant_expr.hpp"
#include "rotinv/linalg.hpp"
#include "rotinv/tensor_system.hpp"

namespace rotinv {

/// Rows are grad(expr) at `system`; shape |exprs| x variable count.
Matrix jacobian(const std::vector<InvariantExpr>& exprs, const TensorSystem& system);

/// Max over systems of the numerical rank of the Jacobian.
int jacobian_rank(const std::vector<InvariantExpr>& exprs, const std::vector<TensorSystem>& systems,
                  double tol = kDefaultRankTol);

/// Indices kept by greedy_prune, in emission order.
std::vector<std::size_t> greedy_prune_indices(const std::vector<InvariantExpr>& exprs,
                                              const std::vector<TensorSystem>& systems,
                                              double tol = kDefaultRankTol);

/// Scans in order and keeps an expression iff it raises the running Jacobian
/// rank (max over systems). Each system keeps an orthonormal basis of the
/// kept gradient rows; a candidate raises the rank on a system when its
/// residual against that basis exceeds the numerical_rank cutoff of the full
/// Jacobian there.
std::vector<InvariantExpr> greedy_prune(const std::vector<InvariantExpr>& exprs,
                                        const std::vector<TensorSystem>& systems,
                                        double tol = kDefaultRankTol);

struct PublishedCount {
  int value = 0;
  std::string source;
};

/// Published invariant counts for the system shapes that have one.
std::optional<PublishedCount> published_count(const SystemSpec& spec);

enum class Verdict { Complete, Incomplete, OvercompleteButSpanning };
std::string_view to_string(Verdict v);

struct InvarianceSummary {
  double max_infinitesimal = 0.0;  // max |grad F . J x| / (|grad F| |J x|)
  double max_finite = 0.0;         // max |F(R x) - F(x)| / max(1, |F(x)|)
  std::vector<std::string> failures;
};

/// Determining equations at every system, and finite transformations by
/// `group_samples` random group elements. Thresholds 1e-9 for both.
InvarianceSummary check_invariance(const std::vector<InvariantExpr>& exprs,
                                   const std::vector<TensorSystem>& systems, int group_samples,
                                   std::uint64_t seed);

struct BasisReport {
  SystemSpec spec;
  std::string label;
  int n_variables = 0;
  int action_rank = 0;
  int expected_count = 0;
  std::optional<PublishedCount> paper_claimed_count;
  int candidate_size = 0;
  int jacobian_rank = 0;
  std::vector<std::string> pruned_basis;
  Verdict verdict = Verdict::Incomplete;
  std::vector<std::string> discrepancy_notes;
  InvarianceSummary invariance;
};

struct VerifyOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  double tol = kDefaultRankTol;
  bool prune = true;
  int group_samples = 50;
};

/// Counts, Jacobian rank, pruning, invariance checks and the verdict.
/// Complete: rank and pruned size both equal the expected count.
/// Overcomplete-but-spanning: rank reaches the count but the reported list
/// (unpruned) is larger. Incomplete: anything else.
BasisReport verify_basis(const SystemSpec& spec, const std::vector<InvariantExpr>& candidates,
                         const VerifyOptions& opts = {}, const std::vector<std::string>& notes = {},
                         std::string label = {});

/// Random points shared by verify_basis and the CLI.
std::vector<TensorSystem> sample_systems(const SystemSpec& spec, int trials, std::uint64_t seed);

/// Sorted-key JSON with the report's field names plus "tool_version".
nlohmann::json report_to_json(const BasisReport& report);

std::string tool_version();

}  // namespace rotinv
