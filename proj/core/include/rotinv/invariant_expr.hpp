#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rotinv/tensor_system.hpp"

namespace rotinv {

enum class SlotKind { Vector, Tensor };

/// Squared substitutes the tensor slot T by T G T (used with antisymmetric
/// tensors to get a symmetric one).
enum class SlotModifier { AsIs, Squared };

struct SlotRef {
  std::string name;
  SlotKind kind = SlotKind::Tensor;
  SlotModifier modifier = SlotModifier::AsIs;

  static SlotRef vector(std::string name) { return {std::move(name), SlotKind::Vector}; }
  static SlotRef tensor(std::string name) { return {std::move(name), SlotKind::Tensor}; }
  static SlotRef squared(std::string name) {
    return {std::move(name), SlotKind::Tensor, SlotModifier::Squared};
  }

  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

/// tr(G T1 G T2 ... G Tk)
struct TraceWord {
  std::vector<SlotRef> factors;
  friend bool operator==(const TraceWord&, const TraceWord&) = default;
};

/// u^T G T1 G ... Tk G v;  with no factors, u^T G v.
struct Sandwich {
  SlotRef left;
  std::vector<SlotRef> factors;
  SlotRef right;
  friend bool operator==(const Sandwich&, const Sandwich&) = default;
};

/// A contraction word over named slots of a TensorSystem.
class InvariantExpr {
 public:
  using Node = std::variant<TraceWord, Sandwich>;

  static InvariantExpr trace(std::vector<SlotRef> factors);
  static InvariantExpr sandwich(SlotRef left, std::vector<SlotRef> factors, SlotRef right);

  const Node& node() const { return node_; }
  bool is_trace() const { return std::holds_alternative<TraceWord>(node_); }

  /// Names of every referenced object, in order of appearance (may repeat).
  std::vector<std::string> slot_names() const;

  friend bool operator==(const InvariantExpr&, const InvariantExpr&) = default;

 private:
  explicit InvariantExpr(Node node) : node_(std::move(node)) {}
  Node node_;
};

double eval(const InvariantExpr& expr, const TensorSystem& system);

/// Gradient with respect to flatten(system). A stored symmetric coordinate
/// collects the sensitivities of both matrix entries it feeds; an
/// antisymmetric one collects them with opposite signs.
Vector grad(const InvariantExpr& expr, const TensorSystem& system);

/// True if every slot names an object of the right kind in the layout.
bool resolves_in(const InvariantExpr& expr, const Layout& layout);

/// Deterministic text form, e.g. "tr(W1^2 W2)", "u1 . W1^3 . u1", "A . A",
/// "tr(sq(Y1)^2)". parse_expr(render(e)) == e.
std::string render(const InvariantExpr& expr);

InvariantExpr parse_expr(std::string_view text);

}  // namespace rotinv
