#include "rotinv/independence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rotinv/error.hpp"
#include "rotinv/rotation_action.hpp"
#include "rotinv/system_json.hpp"

#ifndef ROTINV_VERSION
#define ROTINV_VERSION "0.0.0"
#endif

namespace rotinv {

namespace {

constexpr double kInvarianceTol = 1e-9;

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

Matrix jacobian(const std::vector<InvariantExpr>& exprs, const TensorSystem& system) {
  const auto cols = static_cast<Eigen::Index>(system.layout().size());
  Matrix j(static_cast<Eigen::Index>(exprs.size()), cols);
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    j.row(static_cast<Eigen::Index>(i)) = grad(exprs[i], system).transpose();
  }
  return j;
}

int jacobian_rank(const std::vector<InvariantExpr>& exprs, const std::vector<TensorSystem>& systems,
                  double tol) {
  if (systems.empty()) throw DimensionError("jacobian_rank needs at least one system");
  int best = 0;
  for (const auto& s : systems) best = std::max(best, numerical_rank(jacobian(exprs, s), tol));
  return best;
}

std::vector<std::size_t> greedy_prune_indices(const std::vector<InvariantExpr>& exprs,
                                              const std::vector<TensorSystem>& systems,
                                              double tol) {
  if (systems.empty()) throw DimensionError("greedy_prune needs at least one system");

  struct PerSystem {
    Matrix rows;
    double cutoff = 0.0;
    std::vector<Vector> basis;
  };
  std::vector<PerSystem> state;
  state.reserve(systems.size());
  for (const auto& s : systems) {
    PerSystem p;
    p.rows = jacobian(exprs, s);
    const Vector sv = singular_values(p.rows);
    const double sigma_max = sv.size() == 0 ? 0.0 : sv[0];
    p.cutoff = rank_threshold(sigma_max, p.rows.rows(), p.rows.cols(), tol);
    state.push_back(std::move(p));
  }

  std::vector<std::size_t> kept;
  std::vector<Vector> residuals(state.size());
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    std::size_t current = 0;
    for (const auto& p : state) current = std::max(current, p.basis.size());

    bool raises = false;
    for (std::size_t s = 0; s < state.size(); ++s) {
      auto& p = state[s];
      Vector r = p.rows.row(static_cast<Eigen::Index>(i)).transpose();
      // Two Gram-Schmidt sweeps keep the residual accurate to rounding.
      for (int sweep = 0; sweep < 2; ++sweep) {
        for (const auto& q : p.basis) r -= q.dot(r) * q;
      }
      residuals[s] = std::move(r);
      if (p.basis.size() == current && p.cutoff > 0.0 && residuals[s].norm() > p.cutoff) {
        raises = true;
      }
    }
    if (!raises) continue;
    kept.push_back(i);
    for (std::size_t s = 0; s < state.size(); ++s) {
      const double norm = residuals[s].norm();
      if (state[s].cutoff > 0.0 && norm > state[s].cutoff) {
        state[s].basis.push_back(residuals[s] / norm);
      }
    }
  }
  return kept;
}

std::vector<InvariantExpr> greedy_prune(const std::vector<InvariantExpr>& exprs,
                                        const std::vector<TensorSystem>& systems, double tol) {
  std::vector<InvariantExpr> out;
  for (std::size_t i : greedy_prune_indices(exprs, systems, tol)) out.push_back(exprs[i]);
  return out;
}

std::optional<PublishedCount> published_count(const SystemSpec& spec) {
  const int n = spec.n;
  const int v = spec.n_vectors;
  const int s = spec.n_symmetric;
  const int a = spec.n_antisymmetric;
  if (spec.n_general != 0) return std::nullopt;
  if (v == 2 && s == 2 && a == 0) {
    return PublishedCount{(7 * n + n * n) / 2,
                      "published count (7n+n^2)/2 for two vectors and two symmetric tensors"};
  }
  if (v == 0 && s == 0 && a == 1) {
    return PublishedCount{n, "published count n for one antisymmetric tensor"};
  }
  if (v == 2 && s == 0 && a == 2) {
    return PublishedCount{(3 * n + n * n) / 2,
                      "published count (3n+n^2)/2 for two vectors and two antisymmetric tensors"};
  }
  if (v == 2 && s == 2 && a == 2) {
    return PublishedCount{(9 * n + 3 * n * n) / 2,
                      "published count (9n+3n^2)/2 for two vectors, two symmetric and two "
                      "antisymmetric tensors"};
  }
  if (v == 1 && s == 1 && a == 1 && n == 4) {
    return PublishedCount{14, "published count 14 for the vector potential (A, B, L) in 4 dimensions"};
  }
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Complete:
      return "Complete";
    case Verdict::Incomplete:
      return "Incomplete";
    case Verdict::OvercompleteButSpanning:
      return "Overcomplete-but-spanning";
  }
  return "Incomplete";
}

InvarianceSummary check_invariance(const std::vector<InvariantExpr>& exprs,
                                   const std::vector<TensorSystem>& systems, int group_samples,
                                   std::uint64_t seed) {
  InvarianceSummary out;
  if (systems.empty()) return out;
  std::vector<double> worst_inf(exprs.size(), 0.0);
  std::vector<double> worst_fin(exprs.size(), 0.0);

  for (const auto& sys : systems) {
    std::vector<Vector> tangents;
    for (const auto& g : generators(sys.metric())) tangents.push_back(generator_action(g, sys));
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      const Vector gr = grad(exprs[i], sys);
      for (const auto& t : tangents) {
        const double scale = gr.norm() * t.norm();
        if (scale == 0.0) continue;
        worst_inf[i] = std::max(worst_inf[i], std::abs(gr.dot(t)) / scale);
      }
    }
  }

  std::mt19937_64 engine(derive_seed(seed, 0x5EED));
  for (int k = 0; k < group_samples; ++k) {
    const auto& sys = systems[static_cast<std::size_t>(k) % systems.size()];
    const GroupElement r = random_group_element(sys.metric(), engine);
    const TensorSystem moved = transform(r, sys);
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      const double before = eval(exprs[i], sys);
      const double after = eval(exprs[i], moved);
      worst_fin[i] = std::max(worst_fin[i], std::abs(after - before) / std::max(1.0, std::abs(before)));
    }
  }

  for (std::size_t i = 0; i < exprs.size(); ++i) {
    out.max_infinitesimal = std::max(out.max_infinitesimal, worst_inf[i]);
    out.max_finite = std::max(out.max_finite, worst_fin[i]);
    if (worst_inf[i] > kInvarianceTol || worst_fin[i] > kInvarianceTol) {
      out.failures.push_back("not invariant: " + render(exprs[i]) + " (infinitesimal " +
                             format_double(worst_inf[i]) + ", finite " +
                             format_double(worst_fin[i]) + ")");
    }
  }
  return out;
}

std::vector<TensorSystem> sample_systems(const SystemSpec& spec, int trials, std::uint64_t seed) {
  std::vector<TensorSystem> out;
  for (int i = 0; i < std::max(trials, 1); ++i) out.push_back(trial_system(spec, seed, i));
  return out;
}

BasisReport verify_basis(const SystemSpec& spec, const std::vector<InvariantExpr>& candidates,
                         const VerifyOptions& opts, const std::vector<std::string>& notes,
                         std::string label) {
  const Layout layout = spec.layout();
  for (const auto& e : candidates) {
    if (!resolves_in(e, layout)) {
      throw ResolutionError("candidate '" + render(e) + "' does not resolve in the system shape");
    }
  }

  BasisReport r;
  r.spec = spec;
  r.label = std::move(label);
  r.n_variables = static_cast<int>(spec.variable_count());
  r.action_rank = generic_rank(spec, RankOptions{opts.trials, opts.seed, opts.tol});
  r.expected_count = r.n_variables - r.action_rank;
  r.paper_claimed_count = published_count(spec);
  r.candidate_size = static_cast<int>(candidates.size());
  r.discrepancy_notes = notes;

  const auto systems = sample_systems(spec, opts.trials, opts.seed);
  if (!candidates.empty()) r.jacobian_rank = jacobian_rank(candidates, systems, opts.tol);

  std::vector<InvariantExpr> reported = candidates;
  if (opts.prune && !candidates.empty()) reported = greedy_prune(candidates, systems, opts.tol);
  for (const auto& e : reported) r.pruned_basis.push_back(render(e));

  const int reported_size = static_cast<int>(reported.size());
  if (r.jacobian_rank == r.expected_count && reported_size == r.expected_count) {
    r.verdict = Verdict::Complete;
  } else if (r.jacobian_rank == r.expected_count && reported_size > r.expected_count) {
    r.verdict = Verdict::OvercompleteButSpanning;
  } else {
    r.verdict = Verdict::Incomplete;
  }

  if (r.paper_claimed_count && r.paper_claimed_count->value != r.expected_count) {
    std::string formula = r.paper_claimed_count->source;
    const std::string prefix = "published count ";
    if (formula.rfind(prefix, 0) == 0) formula = formula.substr(prefix.size());
    r.discrepancy_notes.push_back(
        "DISCREPANCY: published count " + formula + " gives " +
        std::to_string(r.paper_claimed_count->value) + "; numerical oracle gives " +
        std::to_string(r.expected_count) + " (" + std::to_string(r.n_variables) +
        " variables, generic action rank " + std::to_string(r.action_rank) + ")");
  }
  if (r.jacobian_rank < r.expected_count) {
    r.discrepancy_notes.push_back("candidate set spans " + std::to_string(r.jacobian_rank) +
                                  " of " + std::to_string(r.expected_count) + " invariants");
  }
  if (r.jacobian_rank > r.expected_count) {
    r.discrepancy_notes.push_back("candidate Jacobian rank " + std::to_string(r.jacobian_rank) +
                                  " exceeds the orbit codimension " +
                                  std::to_string(r.expected_count));
  }
  if (opts.prune && static_cast<int>(reported.size()) != r.jacobian_rank) {
    r.discrepancy_notes.push_back("greedy pruning kept " + std::to_string(reported.size()) +
                                  " expressions but the candidate Jacobian rank is " +
                                  std::to_string(r.jacobian_rank));
  }

  if (opts.group_samples > 0 && !candidates.empty()) {
    r.invariance = check_invariance(candidates, systems, opts.group_samples, opts.seed);
    r.discrepancy_notes.insert(r.discrepancy_notes.end(), r.invariance.failures.begin(),
                               r.invariance.failures.end());
  }
  return r;
}

nlohmann::json report_to_json(const BasisReport& r) {
  nlohmann::json j;
  j["spec"] = spec_to_json(r.spec);
  j["n_variables"] = r.n_variables;
  j["action_rank"] = r.action_rank;
  j["expected_count"] = r.expected_count;
  if (r.paper_claimed_count) {
    j["paper_claimed_count"] = {{"value", r.paper_claimed_count->value},
                                {"source", r.paper_claimed_count->source}};
  } else {
    j["paper_claimed_count"] = nullptr;
  }
  j["candidate_size"] = r.candidate_size;
  j["jacobian_rank"] = r.jacobian_rank;
  j["pruned_basis"] = r.pruned_basis;
  j["verdict"] = std::string(to_string(r.verdict));
  j["discrepancy_notes"] = r.discrepancy_notes;
  j["tool_version"] = tool_version();
  return j;
}

std::string tool_version() { return ROTINV_VERSION; }

}  // namespace rotinv
