#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rotinv/invariant_expr.hpp"
#include "rotinv/tensor_system.hpp"

namespace rotinv {

// Notation used below: S_a(T) = tr(T^a); S_ab(T1, T2) = tr(T1^b T2^(a-b));
// R_a(u, T) = u . T^(a-1) . u. All words are capped at n factors.

struct VectorTensorNames {
  std::string u1 = "u1";
  std::string u2 = "u2";
  std::string t1;
  std::string t2;
};

/// Two vectors and two symmetric tensors. Order: S_a(W^r) (r outer), S_ab(W1, W2)
/// for b < a, R_a(u^r, W1), then u^r . u^s for r <= s.
std::vector<InvariantExpr> theorem1_basis(int n, const VectorTensorNames& names = {"u1", "u2", "W1", "W2"});

/// Two vectors and two antisymmetric tensors: the theorem-1 scheme over the
/// squared slots sq(Y1), sq(Y2), followed by u1 . Y^s . u2.
std::vector<InvariantExpr> theorem2_basis(int n, const VectorTensorNames& names = {"u1", "u2", "Y1", "Y2"});

struct MixedNames {
  std::string u1 = "u1";
  std::string u2 = "u2";
  std::string w1 = "W1";
  std::string w2 = "W2";
  std::string y1 = "Y1";
  std::string y2 = "Y2";
};

/// Two vectors, two symmetric and two antisymmetric tensors. Overcomplete:
/// treats sq(Y1), sq(Y2) as extra symmetric tensors next to W1, W2 and emits
/// every cyclic word over that family up to length n, sandwiches against each
/// family member, and the mixed vector sandwiches. Meant to be pruned.
std::vector<InvariantExpr> theorem3_basis(int n, const MixedNames& names = {});

/// The 14 first-order invariants of the vector potential A with
/// B = symmetric part and L = antisymmetric part of its derivative, in
/// 4-d Minkowski space.
std::vector<InvariantExpr> poincare_vector_potential_basis();

enum class Theorem { One, Two, Three, Poincare };

Theorem parse_theorem(std::string_view text);
std::string_view to_string(Theorem t);

/// A constructor's output together with the system it is meant for and the
/// normalizations it applied.
struct CandidateBasis {
  std::string label;
  SystemSpec spec;
  std::vector<InvariantExpr> exprs;
  std::vector<std::string> notes;
};

/// Spec and candidate list for a theorem. Poincare ignores n and metric.
CandidateBasis candidate_basis(Theorem t, int n, const MetricSignature& metric);

/// Keeps the expressions whose slots all exist in the layout.
std::vector<InvariantExpr> restrict_to(const std::vector<InvariantExpr>& exprs, const Layout& layout);

}  // namespace rotinv
