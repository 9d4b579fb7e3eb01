#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace rotinv {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Diagonal +-1 bilinear form preserved by the group. All +1 is the Euclidean
/// rotation group; (+,-,...,-) the Lorentz group.
class MetricSignature {
 public:
  explicit MetricSignature(std::vector<int> diag);

  static MetricSignature euclidean(int n);
  static MetricSignature minkowski(int n);
  /// Parses a sign string such as "++++" or "+---".
  static MetricSignature parse(std::string_view signs);

  int dimension() const { return static_cast<int>(diag_.size()); }
  int operator[](int i) const { return diag_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& diag() const { return diag_; }
  bool is_euclidean() const;

  /// The diagonal matrix G. For +-1 signatures G is its own inverse.
  Matrix matrix() const;
  std::string to_string() const;

  friend bool operator==(const MetricSignature&, const MetricSignature&) = default;

 private:
  std::vector<int> diag_;
};

enum class TensorSymmetry { Symmetric, Antisymmetric, General };

std::string_view to_string(TensorSymmetry s);
TensorSymmetry parse_symmetry(std::string_view text);

/// Number of stored coordinates of an n x n tensor with the given symmetry.
std::size_t stored_size(TensorSymmetry s, int n);

struct Tensor {
  TensorSymmetry symmetry = TensorSymmetry::General;
  Matrix components;
};

/// Builds a tensor from components that are structurally correct only up to
/// rounding, keeping the upper triangle and mirroring it.
Tensor project_to_symmetry(TensorSymmetry s, const Matrix& components);

/// Position of one named object inside the flattened coordinate vector.
struct SlotLayout {
  std::string name;
  bool is_vector = false;
  TensorSymmetry symmetry = TensorSymmetry::General;  // ignored for vectors
  std::size_t offset = 0;
  std::size_t size = 0;
};

/// The shape of a system without its numbers: enough to unflatten.
struct Layout {
  int n = 0;
  MetricSignature metric = MetricSignature::euclidean(2);
  std::vector<SlotLayout> slots;

  std::size_t size() const;
  const SlotLayout* find(std::string_view name) const;
};

using NamedVector = std::pair<std::string, Vector>;
using NamedTensor = std::pair<std::string, Tensor>;

/// A concrete point: named vectors and rank-2 tensors over one dimension and
/// metric. Immutable after construction; the constructor validates every
/// shape and symmetry tag exactly.
class TensorSystem {
 public:
  TensorSystem(int n, MetricSignature metric, std::vector<NamedVector> vectors,
               std::vector<NamedTensor> tensors);

  int dimension() const { return n_; }
  const MetricSignature& metric() const { return metric_; }
  const std::vector<NamedVector>& vectors() const { return vectors_; }
  const std::vector<NamedTensor>& tensors() const { return tensors_; }

  const Vector* find_vector(std::string_view name) const;
  const Tensor* find_tensor(std::string_view name) const;

  Layout layout() const;

 private:
  int n_;
  MetricSignature metric_;
  std::vector<NamedVector> vectors_;
  std::vector<NamedTensor> tensors_;
};

/// Abstract shape of a system used for counting and sampling. `names`, when
/// non-empty, lists object names in layout order (vectors, symmetric,
/// antisymmetric, general); otherwise u1.., W1.., Y1.., V1.. are used.
struct SystemSpec {
  int n = 0;
  MetricSignature metric = MetricSignature::euclidean(2);
  int n_vectors = 0;
  int n_symmetric = 0;
  int n_antisymmetric = 0;
  int n_general = 0;
  std::vector<std::string> names;

  static SystemSpec make(int n, int vectors, int symmetric, int antisymmetric,
                         int general = 0);
  static SystemSpec make(int n, MetricSignature metric, int vectors, int symmetric,
                         int antisymmetric, int general = 0);

  int object_count() const { return n_vectors + n_symmetric + n_antisymmetric + n_general; }
  std::vector<std::string> object_names() const;
  std::size_t variable_count() const;
  Layout layout() const;
};

/// One vector A, one symmetric B and one antisymmetric L in 4-d Minkowski space.
SystemSpec vector_potential_spec();

std::size_t variable_count(const SystemSpec& spec);

struct Decomposition {
  Tensor symmetric;      // w = v + v^T
  Tensor antisymmetric;  // y = v - v^T
  Matrix reconstruct() const { return 0.5 * (symmetric.components + antisymmetric.components); }
};

/// Splits a square array into w = v + v^T and y = v - v^T (no factor 1/2).
Decomposition decompose(const Matrix& v);

/// Vectors first, then tensors, each in insertion order; tensors row-major over
/// their stored triangle (i <= k symmetric, i < k antisymmetric, all general).
Vector flatten(const TensorSystem& system);
TensorSystem unflatten(const Layout& layout, const Eigen::Ref<const Vector>& coords);

/// Flattens one tensor's stored triangle.
void flatten_tensor(const Tensor& t, Eigen::Ref<Vector> out);

/// i.i.d. uniform [-1, 1] flattened coordinates, deterministic in `seed`.
TensorSystem random_system(const SystemSpec& spec, std::uint64_t seed);
TensorSystem random_system(const SystemSpec& spec, std::mt19937_64& engine);

/// Uniform double on [-1, 1] from the top 53 bits of one engine draw.
/// Independent of the standard library's distribution implementation.
double uniform_pm1(std::mt19937_64& engine);

/// Seed for the k-th derived stream of a base seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

}  // namespace rotinv
