#include "rotinv/tensor_system.hpp"

#include <algorithm>
#include <set>

#include "rotinv/error.hpp"

namespace rotinv {

namespace {

void require_square(const Matrix& m, int n, const std::string& what) {
  if (m.rows() != n || m.cols() != n) {
    throw DimensionError(what + ": expected " + std::to_string(n) + "x" + std::to_string(n) +
                         " components, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

void check_symmetry(const std::string& name, const Tensor& t) {
  const Matrix& c = t.components;
  const Eigen::Index n = c.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = i; k < n; ++k) {
      switch (t.symmetry) {
        case TensorSymmetry::Symmetric:
          if (c(i, k) != c(k, i)) {
            throw StructureError("tensor '" + name + "' is tagged symmetric but t(" +
                                 std::to_string(i) + "," + std::to_string(k) + ") != t(" +
                                 std::to_string(k) + "," + std::to_string(i) + ")");
          }
          break;
        case TensorSymmetry::Antisymmetric:
          if (c(i, k) != -c(k, i)) {
            throw StructureError("tensor '" + name + "' is tagged antisymmetric but t(" +
                                 std::to_string(i) + "," + std::to_string(k) + ") != -t(" +
                                 std::to_string(k) + "," + std::to_string(i) + ")");
          }
          break;
        case TensorSymmetry::General:
          return;
      }
    }
  }
}

}  // namespace

MetricSignature::MetricSignature(std::vector<int> diag) : diag_(std::move(diag)) {
  for (int d : diag_) {
    if (d != 1 && d != -1) {
      throw StructureError("metric entries must be +1 or -1, got " + std::to_string(d));
    }
  }
}

MetricSignature MetricSignature::euclidean(int n) {
  return MetricSignature(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1));
}

MetricSignature MetricSignature::minkowski(int n) {
  std::vector<int> d(static_cast<std::size_t>(std::max(n, 0)), -1);
  if (!d.empty()) d[0] = 1;
  return MetricSignature(std::move(d));
}

MetricSignature MetricSignature::parse(std::string_view signs) {
  std::vector<int> d;
  d.reserve(signs.size());
  for (char c : signs) {
    if (c == '+') {
      d.push_back(1);
    } else if (c == '-') {
      d.push_back(-1);
    } else {
      throw ParseError("metric string may only contain '+' and '-', got '" + std::string(signs) +
                       "'");
    }
  }
  return MetricSignature(std::move(d));
}

bool MetricSignature::is_euclidean() const {
  return std::all_of(diag_.begin(), diag_.end(), [](int d) { return d == 1; });
}

Matrix MetricSignature::matrix() const {
  Matrix g = Matrix::Zero(dimension(), dimension());
  for (int i = 0; i < dimension(); ++i) g(i, i) = diag_[static_cast<std::size_t>(i)];
  return g;
}

std::string MetricSignature::to_string() const {
  std::string s;
  for (int d : diag_) s.push_back(d > 0 ? '+' : '-');
  return s;
}

std::string_view to_string(TensorSymmetry s) {
  switch (s) {
    case TensorSymmetry::Symmetric:
      return "symmetric";
    case TensorSymmetry::Antisymmetric:
      return "antisymmetric";
    case TensorSymmetry::General:
      return "general";
  }
  return "general";
}

TensorSymmetry parse_symmetry(std::string_view text) {
  if (text == "symmetric") return TensorSymmetry::Symmetric;
  if (text == "antisymmetric") return TensorSymmetry::Antisymmetric;
  if (text == "general") return TensorSymmetry::General;
  throw ParseError("unknown tensor symmetry '" + std::string(text) + "'");
}

std::size_t stored_size(TensorSymmetry s, int n) {
  const auto un = static_cast<std::size_t>(n);
  switch (s) {
    case TensorSymmetry::Symmetric:
      return un * (un + 1) / 2;
    case TensorSymmetry::Antisymmetric:
      return un * (un - 1) / 2;
    case TensorSymmetry::General:
      return un * un;
  }
  return un * un;
}

Tensor project_to_symmetry(TensorSymmetry s, const Matrix& components) {
  Tensor t{s, components};
  const Eigen::Index n = components.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (s == TensorSymmetry::Antisymmetric) t.components(i, i) = 0.0;
    for (Eigen::Index k = i + 1; k < n; ++k) {
      if (s == TensorSymmetry::Symmetric) t.components(k, i) = t.components(i, k);
      if (s == TensorSymmetry::Antisymmetric) t.components(k, i) = -t.components(i, k);
    }
  }
  return t;
}

std::size_t Layout::size() const {
  return slots.empty() ? 0 : slots.back().offset + slots.back().size;
}

const SlotLayout* Layout::find(std::string_view name) const {
  for (const auto& s : slots) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

TensorSystem::TensorSystem(int n, MetricSignature metric, std::vector<NamedVector> vectors,
                           std::vector<NamedTensor> tensors)
    : n_(n), metric_(std::move(metric)), vectors_(std::move(vectors)), tensors_(std::move(tensors)) {
  if (n_ < 2) throw DimensionError("dimension must be at least 2, got " + std::to_string(n_));
  if (metric_.dimension() != n_) {
    throw DimensionError("metric has " + std::to_string(metric_.dimension()) +
                         " entries but dimension is " + std::to_string(n_));
  }
  std::set<std::string, std::less<>> seen;
  auto claim = [&](const std::string& name) {
    if (name.empty()) throw StructureError("object names must be non-empty");
    if (!seen.insert(name).second) throw StructureError("duplicate object name '" + name + "'");
  };
  for (const auto& [name, v] : vectors_) {
    claim(name);
    if (v.size() != n_) {
      throw DimensionError("vector '" + name + "' has " + std::to_string(v.size()) +
                           " components, dimension is " + std::to_string(n_));
    }
  }
  for (const auto& [name, t] : tensors_) {
    claim(name);
    require_square(t.components, n_, "tensor '" + name + "'");
    check_symmetry(name, t);
  }
}

const Vector* TensorSystem::find_vector(std::string_view name) const {
  for (const auto& [k, v] : vectors_) {
    if (k == name) return &v;
  }
  return nullptr;
}

const Tensor* TensorSystem::find_tensor(std::string_view name) const {
  for (const auto& [k, t] : tensors_) {
    if (k == name) return &t;
  }
  return nullptr;
}

Layout TensorSystem::layout() const {
  Layout l;
  l.n = n_;
  l.metric = metric_;
  std::size_t offset = 0;
  for (const auto& [name, v] : vectors_) {
    l.slots.push_back({name, true, TensorSymmetry::General, offset, static_cast<std::size_t>(n_)});
    offset += static_cast<std::size_t>(n_);
  }
  for (const auto& [name, t] : tensors_) {
    const std::size_t sz = stored_size(t.symmetry, n_);
    l.slots.push_back({name, false, t.symmetry, offset, sz});
    offset += sz;
  }
  return l;
}

SystemSpec SystemSpec::make(int n, int vectors, int symmetric, int antisymmetric, int general) {
  return make(n, MetricSignature::euclidean(n), vectors, symmetric, antisymmetric, general);
}

SystemSpec SystemSpec::make(int n, MetricSignature metric, int vectors, int symmetric,
                            int antisymmetric, int general) {
  if (n < 2) throw DimensionError("dimension must be at least 2, got " + std::to_string(n));
  if (metric.dimension() != n) {
    throw DimensionError("metric has " + std::to_string(metric.dimension()) +
                         " entries but dimension is " + std::to_string(n));
  }
  if (vectors < 0 || symmetric < 0 || antisymmetric < 0 || general < 0) {
    throw DimensionError("object counts must be nonnegative");
  }
  SystemSpec s;
  s.n = n;
  s.metric = std::move(metric);
  s.n_vectors = vectors;
  s.n_symmetric = symmetric;
  s.n_antisymmetric = antisymmetric;
  s.n_general = general;
  return s;
}

std::vector<std::string> SystemSpec::object_names() const {
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != object_count()) {
      throw DimensionError("spec lists " + std::to_string(names.size()) + " names for " +
                           std::to_string(object_count()) + " objects");
    }
    return names;
  }
  std::vector<std::string> out;
  auto add = [&](const char* prefix, int count) {
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  };
  add("u", n_vectors);
  add("W", n_symmetric);
  add("Y", n_antisymmetric);
  add("V", n_general);
  return out;
}

std::size_t SystemSpec::variable_count() const {
  const auto un = static_cast<std::size_t>(n);
  return static_cast<std::size_t>(n_vectors) * un +
         static_cast<std::size_t>(n_symmetric) * stored_size(TensorSymmetry::Symmetric, n) +
         static_cast<std::size_t>(n_antisymmetric) * stored_size(TensorSymmetry::Antisymmetric, n) +
         static_cast<std::size_t>(n_general) * stored_size(TensorSymmetry::General, n);
}

Layout SystemSpec::layout() const {
  Layout l;
  l.n = n;
  l.metric = metric;
  const auto all = object_names();
  std::size_t offset = 0;
  std::size_t idx = 0;
  auto add = [&](int count, bool is_vector, TensorSymmetry sym) {
    for (int i = 0; i < count; ++i) {
      const std::size_t sz = is_vector ? static_cast<std::size_t>(n) : stored_size(sym, n);
      l.slots.push_back({all[idx++], is_vector, sym, offset, sz});
      offset += sz;
    }
  };
  add(n_vectors, true, TensorSymmetry::General);
  add(n_symmetric, false, TensorSymmetry::Symmetric);
  add(n_antisymmetric, false, TensorSymmetry::Antisymmetric);
  add(n_general, false, TensorSymmetry::General);
  return l;
}

SystemSpec vector_potential_spec() {
  SystemSpec s = SystemSpec::make(4, MetricSignature::minkowski(4), 1, 1, 1);
  s.names = {"A", "B", "L"};
  return s;
}

std::size_t variable_count(const SystemSpec& spec) { return spec.variable_count(); }

Decomposition decompose(const Matrix& v) {
  if (v.rows() != v.cols()) {
    throw DimensionError("decompose expects a square array, got " + std::to_string(v.rows()) +
                         "x" + std::to_string(v.cols()));
  }
  const Matrix vt = v.transpose();
  return {Tensor{TensorSymmetry::Symmetric, v + vt}, Tensor{TensorSymmetry::Antisymmetric, v - vt}};
}

void flatten_tensor(const Tensor& t, Eigen::Ref<Vector> out) {
  const Eigen::Index n = t.components.rows();
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index k0 = 0;
    if (t.symmetry == TensorSymmetry::Symmetric) k0 = i;
    if (t.symmetry == TensorSymmetry::Antisymmetric) k0 = i + 1;
    for (Eigen::Index k = k0; k < n; ++k) out[p++] = t.components(i, k);
  }
}

Vector flatten(const TensorSystem& system) {
  const Layout l = system.layout();
  Vector out(static_cast<Eigen::Index>(l.size()));
  std::size_t slot = 0;
  for (const auto& [name, v] : system.vectors()) {
    const auto& s = l.slots[slot++];
    out.segment(static_cast<Eigen::Index>(s.offset), static_cast<Eigen::Index>(s.size)) = v;
  }
  for (const auto& [name, t] : system.tensors()) {
    const auto& s = l.slots[slot++];
    flatten_tensor(t, out.segment(static_cast<Eigen::Index>(s.offset),
                                  static_cast<Eigen::Index>(s.size)));
  }
  return out;
}

TensorSystem unflatten(const Layout& layout, const Eigen::Ref<const Vector>& coords) {
  if (static_cast<std::size_t>(coords.size()) != layout.size()) {
    throw DimensionError("layout needs " + std::to_string(layout.size()) + " coordinates, got " +
                         std::to_string(coords.size()));
  }
  const int n = layout.n;
  std::vector<NamedVector> vectors;
  std::vector<NamedTensor> tensors;
  for (const auto& s : layout.slots) {
    auto seg = coords.segment(static_cast<Eigen::Index>(s.offset), static_cast<Eigen::Index>(s.size));
    if (s.is_vector) {
      vectors.emplace_back(s.name, seg);
      continue;
    }
    Matrix m = Matrix::Zero(n, n);
    Eigen::Index p = 0;
    for (int i = 0; i < n; ++i) {
      int k0 = 0;
      if (s.symmetry == TensorSymmetry::Symmetric) k0 = i;
      if (s.symmetry == TensorSymmetry::Antisymmetric) k0 = i + 1;
      for (int k = k0; k < n; ++k) {
        m(i, k) = seg[p++];
        if (s.symmetry == TensorSymmetry::Symmetric) m(k, i) = m(i, k);
        if (s.symmetry == TensorSymmetry::Antisymmetric) m(k, i) = -m(i, k);
      }
    }
    tensors.emplace_back(s.name, Tensor{s.symmetry, std::move(m)});
  }
  return TensorSystem(n, layout.metric, std::move(vectors), std::move(tensors));
}

double uniform_pm1(std::mt19937_64& engine) {
  const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  return 2.0 * unit - 1.0;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

TensorSystem random_system(const SystemSpec& spec, std::mt19937_64& engine) {
  const Layout l = spec.layout();
  Vector coords(static_cast<Eigen::Index>(l.size()));
  for (Eigen::Index i = 0; i < coords.size(); ++i) coords[i] = uniform_pm1(engine);
  return unflatten(l, coords);
}

TensorSystem random_system(const SystemSpec& spec, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  return random_system(spec, engine);
}

}  // namespace rotinv
