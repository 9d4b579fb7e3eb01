#include "rotinv/invariant_expr.hpp"

#include <map>

#include "rotinv/error.hpp"

namespace rotinv {

namespace {

void check_slot(const SlotRef& s, SlotKind expected) {
  if (s.name.empty()) throw ResolutionError("slot with empty name");
  if (s.kind != expected) {
    throw ResolutionError("slot '" + s.name + "' used as " +
                          (expected == SlotKind::Vector ? "a vector" : "a tensor") +
                          " but declared otherwise");
  }
  if (s.kind == SlotKind::Vector && s.modifier != SlotModifier::AsIs) {
    throw ResolutionError("vector slot '" + s.name + "' cannot be squared");
  }
}

const Vector& lookup_vector(const TensorSystem& sys, const SlotRef& s) {
  if (const Vector* v = sys.find_vector(s.name)) return *v;
  if (sys.find_tensor(s.name)) {
    throw ResolutionError("'" + s.name + "' is a tensor but is used in a vector slot");
  }
  throw ResolutionError("no vector named '" + s.name + "' in the system");
}

const Tensor& lookup_tensor(const TensorSystem& sys, const SlotRef& s) {
  if (const Tensor* t = sys.find_tensor(s.name)) return *t;
  if (sys.find_vector(s.name)) {
    throw ResolutionError("'" + s.name + "' is a vector but is used in a tensor slot");
  }
  throw ResolutionError("no tensor named '" + s.name + "' in the system");
}

// Matrix a factor contributes: T, or T G T for a squared slot.
Matrix factor_matrix(const TensorSystem& sys, const SlotRef& s, const Matrix& g) {
  const Matrix& t = lookup_tensor(sys, s).components;
  if (s.modifier == SlotModifier::Squared) return t * g * t;
  return t;
}

// Accumulated d(expr)/d(component) per object name, treating every matrix
// entry as independent.
struct RawGradient {
  std::map<std::string, Vector, std::less<>> vectors;
  std::map<std::string, Matrix, std::less<>> tensors;

  void add_vector(const std::string& name, const Vector& d) {
    auto [it, fresh] = vectors.try_emplace(name, d);
    if (!fresh) it->second += d;
  }

  // `h` is the sensitivity to the factor matrix; chain through T G T if squared.
  void add_factor(const TensorSystem& sys, const SlotRef& s, const Matrix& h, const Matrix& g) {
    Matrix d = h;
    if (s.modifier == SlotModifier::Squared) {
      const Matrix& t = lookup_tensor(sys, s).components;
      d = h * t.transpose() * g + g * t.transpose() * h;
    }
    auto [it, fresh] = tensors.try_emplace(s.name, d);
    if (!fresh) it->second += d;
  }
};

Vector flatten_gradient(const RawGradient& raw, const TensorSystem& sys) {
  const Layout l = sys.layout();
  Vector out = Vector::Zero(static_cast<Eigen::Index>(l.size()));
  for (const auto& [name, d] : raw.vectors) {
    const SlotLayout* s = l.find(name);
    out.segment(static_cast<Eigen::Index>(s->offset), static_cast<Eigen::Index>(s->size)) += d;
  }
  for (const auto& [name, h] : raw.tensors) {
    const SlotLayout* s = l.find(name);
    const int n = l.n;
    auto p = static_cast<Eigen::Index>(s->offset);
    for (int i = 0; i < n; ++i) {
      switch (s->symmetry) {
        case TensorSymmetry::Symmetric:
          out[p++] += h(i, i);
          for (int k = i + 1; k < n; ++k) out[p++] += h(i, k) + h(k, i);
          break;
        case TensorSymmetry::Antisymmetric:
          for (int k = i + 1; k < n; ++k) out[p++] += h(i, k) - h(k, i);
          break;
        case TensorSymmetry::General:
          for (int k = 0; k < n; ++k) out[p++] += h(i, k);
          break;
      }
    }
  }
  return out;
}

}  // namespace

InvariantExpr InvariantExpr::trace(std::vector<SlotRef> factors) {
  if (factors.empty()) throw ResolutionError("a trace word needs at least one factor");
  for (const auto& f : factors) check_slot(f, SlotKind::Tensor);
  return InvariantExpr(TraceWord{std::move(factors)});
}

InvariantExpr InvariantExpr::sandwich(SlotRef left, std::vector<SlotRef> factors, SlotRef right) {
  check_slot(left, SlotKind::Vector);
  check_slot(right, SlotKind::Vector);
  for (const auto& f : factors) check_slot(f, SlotKind::Tensor);
  return InvariantExpr(Sandwich{std::move(left), std::move(factors), std::move(right)});
}

std::vector<std::string> InvariantExpr::slot_names() const {
  std::vector<std::string> out;
  if (const auto* t = std::get_if<TraceWord>(&node_)) {
    for (const auto& f : t->factors) out.push_back(f.name);
  } else {
    const auto& s = std::get<Sandwich>(node_);
    out.push_back(s.left.name);
    for (const auto& f : s.factors) out.push_back(f.name);
    out.push_back(s.right.name);
  }
  return out;
}

double eval(const InvariantExpr& expr, const TensorSystem& system) {
  const Matrix g = system.metric().matrix();
  const int n = system.dimension();
  if (const auto* t = std::get_if<TraceWord>(&expr.node())) {
    Matrix m = Matrix::Identity(n, n);
    for (const auto& f : t->factors) m = m * g * factor_matrix(system, f, g);
    return m.trace();
  }
  const auto& s = std::get<Sandwich>(expr.node());
  Vector right = g * lookup_vector(system, s.right);
  for (auto it = s.factors.rbegin(); it != s.factors.rend(); ++it) {
    right = g * (factor_matrix(system, *it, g) * right);
  }
  // right now holds G T1 G ... Tk G v
  return lookup_vector(system, s.left).dot(right);
}

Vector grad(const InvariantExpr& expr, const TensorSystem& system) {
  const Matrix g = system.metric().matrix();
  const int n = system.dimension();
  RawGradient raw;

  if (const auto* t = std::get_if<TraceWord>(&expr.node())) {
    const std::size_t k = t->factors.size();
    // p[j] = G F_j;  F = tr(p[0] ... p[k-1]).
    std::vector<Matrix> p;
    p.reserve(k);
    for (const auto& f : t->factors) p.push_back(g * factor_matrix(system, f, g));
    std::vector<Matrix> prefix(k + 1, Matrix::Identity(n, n));
    std::vector<Matrix> suffix(k + 1, Matrix::Identity(n, n));
    for (std::size_t j = 0; j < k; ++j) prefix[j + 1] = prefix[j] * p[j];
    for (std::size_t j = k; j-- > 0;) suffix[j] = p[j] * suffix[j + 1];
    for (std::size_t j = 0; j < k; ++j) {
      // F = tr(G F_j C) with C the cyclic remainder, so dF/dF_j = (C G)^T.
      const Matrix c = suffix[j + 1] * prefix[j];
      raw.add_factor(system, t->factors[j], (c * g).transpose(), g);
    }
    return flatten_gradient(raw, system);
  }

  const auto& s = std::get<Sandwich>(expr.node());
  const std::size_t k = s.factors.size();
  std::vector<Matrix> f;
  f.reserve(k);
  for (const auto& slot : s.factors) f.push_back(factor_matrix(system, slot, g));
  const Vector& u = lookup_vector(system, s.left);
  const Vector& v = lookup_vector(system, s.right);

  // left[j] = (u^T G F_1 G ... F_j G)^T,  right[j] = G F_{j+1} G ... F_k G v.
  std::vector<Vector> left(k + 1), right(k + 1);
  left[0] = g * u;
  for (std::size_t j = 0; j < k; ++j) left[j + 1] = g * (f[j].transpose() * left[j]);
  right[k] = g * v;
  for (std::size_t j = k; j-- > 0;) right[j] = g * (f[j] * right[j + 1]);

  raw.add_vector(s.left.name, right[0]);
  raw.add_vector(s.right.name, left[k]);
  for (std::size_t j = 0; j < k; ++j) {
    raw.add_factor(system, s.factors[j], left[j] * right[j + 1].transpose(), g);
  }
  return flatten_gradient(raw, system);
}

bool resolves_in(const InvariantExpr& expr, const Layout& layout) {
  auto ok = [&](const SlotRef& s) {
    const SlotLayout* l = layout.find(s.name);
    return l != nullptr && l->is_vector == (s.kind == SlotKind::Vector);
  };
  if (const auto* t = std::get_if<TraceWord>(&expr.node())) {
    for (const auto& f : t->factors) {
      if (!ok(f)) return false;
    }
    return true;
  }
  const auto& s = std::get<Sandwich>(expr.node());
  if (!ok(s.left) || !ok(s.right)) return false;
  for (const auto& f : s.factors) {
    if (!ok(f)) return false;
  }
  return true;
}

namespace {

std::string render_factors(const std::vector<SlotRef>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!out.empty()) out += ' ';
    const SlotRef& f = factors[i];
    out += f.modifier == SlotModifier::Squared ? "sq(" + f.name + ")" : f.name;
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::string render(const InvariantExpr& expr) {
  if (const auto* t = std::get_if<TraceWord>(&expr.node())) {
    return "tr(" + render_factors(t->factors) + ")";
  }
  const auto& s = std::get<Sandwich>(expr.node());
  if (s.factors.empty()) return s.left.name + " . " + s.right.name;
  return s.left.name + " . " + render_factors(s.factors) + " . " + s.right.name;
}

}  // namespace rotinv
