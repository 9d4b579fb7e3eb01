#include "rotinv/system_json.hpp"

#include <fstream>
#include <sstream>

#include "rotinv/error.hpp"

namespace rotinv {

namespace {

using ojson = nlohmann::ordered_json;

const ojson& require(const ojson& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

double number(const ojson& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

Vector read_vector(const ojson& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array");
  Vector v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = number(arr[i], where);
  }
  return v;
}

Matrix read_matrix(const ojson& rows, const std::string& where) {
  if (!rows.is_array()) throw ParseError(where + ": expected an array of rows");
  const auto nr = static_cast<Eigen::Index>(rows.size());
  Eigen::Index nc = nr == 0 ? 0 : static_cast<Eigen::Index>(rows[0].size());
  Matrix m(nr, nc);
  for (Eigen::Index i = 0; i < nr; ++i) {
    const Vector row = read_vector(rows[static_cast<std::size_t>(i)], where);
    if (row.size() != nc) throw DimensionError(where + ": ragged component rows");
    m.row(i) = row.transpose();
  }
  return m;
}

}  // namespace

TensorSystem system_from_json(const ojson& doc) {
  if (!doc.is_object()) throw ParseError("system document must be a JSON object");
  const ojson& dim = require(doc, "dimension");
  if (!dim.is_number_integer()) throw ParseError("'dimension' must be an integer");
  const int n = dim.get<int>();

  MetricSignature metric = MetricSignature::euclidean(n);
  if (auto it = doc.find("metric"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("'metric' must be an array of +1/-1");
    std::vector<int> diag;
    for (const auto& e : *it) {
      if (!e.is_number()) throw ParseError("'metric' entries must be numbers");
      const double d = e.get<double>();
      if (d != 1.0 && d != -1.0) throw ParseError("'metric' entries must be +1 or -1");
      diag.push_back(static_cast<int>(d));
    }
    metric = MetricSignature(std::move(diag));
  }

  std::vector<NamedVector> vectors;
  if (auto it = doc.find("vectors"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("'vectors' must be an object");
    for (const auto& [name, arr] : it->items()) {
      vectors.emplace_back(name, read_vector(arr, "vector '" + name + "'"));
    }
  }

  std::vector<NamedTensor> tensors;
  if (auto it = doc.find("tensors"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("'tensors' must be an object");
    for (const auto& [name, body] : it->items()) {
      const std::string where = "tensor '" + name + "'";
      if (!body.is_object()) throw ParseError(where + ": expected an object");
      const ojson& sym = require(body, "symmetry");
      if (!sym.is_string()) throw ParseError(where + ": 'symmetry' must be a string");
      tensors.emplace_back(name, Tensor{parse_symmetry(sym.get<std::string>()),
                                        read_matrix(require(body, "components"), where)});
    }
  }
  return TensorSystem(n, std::move(metric), std::move(vectors), std::move(tensors));
}

TensorSystem parse_system(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return system_from_json(doc);
}

TensorSystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

ojson system_to_json(const TensorSystem& system) {
  ojson doc;
  doc["dimension"] = system.dimension();
  doc["metric"] = system.metric().diag();
  ojson vectors = ojson::object();
  for (const auto& [name, v] : system.vectors()) {
    vectors[name] = std::vector<double>(v.data(), v.data() + v.size());
  }
  ojson tensors = ojson::object();
  for (const auto& [name, t] : system.tensors()) {
    ojson rows = ojson::array();
    for (Eigen::Index i = 0; i < t.components.rows(); ++i) {
      ojson row = ojson::array();
      for (Eigen::Index k = 0; k < t.components.cols(); ++k) row.push_back(t.components(i, k));
      rows.push_back(std::move(row));
    }
    tensors[name] = {{"symmetry", std::string(to_string(t.symmetry))}, {"components", rows}};
  }
  doc["vectors"] = std::move(vectors);
  doc["tensors"] = std::move(tensors);
  return doc;
}

nlohmann::json spec_to_json(const SystemSpec& spec) {
  return {{"dimension", spec.n},
          {"metric", spec.metric.to_string()},
          {"n_vectors", spec.n_vectors},
          {"n_symmetric", spec.n_symmetric},
          {"n_antisymmetric", spec.n_antisymmetric},
          {"n_general", spec.n_general},
          {"names", spec.object_names()}};
}

}  // namespace rotinv
