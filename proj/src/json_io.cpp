#include "zekit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "zekit/errors.hpp"

namespace zekit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("json: missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InvalidInput(std::string("json: field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<CMatrix> matrix_list(const Json& j) {
  if (!j.is_array()) throw InvalidInput("json: expected a list of matrices");
  std::vector<CMatrix> out;
  out.reserve(j.size());
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

}  // namespace

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (const auto& z : v.entries()) out.push_back(to_json(z));
  return out;
}

Json to_json(const CMatrix& m) {
  Json data = Json::array();
  for (const auto& z : m.entries()) data.push_back(to_json(z));
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

Json to_json(const Angle& a) {
  Json out;
  out["fraction"] = a.to_string();
  out["radians"] = a.radians();
  return out;
}

Json to_json(const OperatorSystem& system) {
  Json basis = Json::array();
  for (const auto& m : system.basis()) basis.push_back(to_json(m));
  Json out;
  out["ambient_dim"] = system.ambient_dim();
  out["basis"] = std::move(basis);
  return out;
}

Json to_json(const Channel& channel) {
  Json kraus = Json::array();
  for (const auto& k : channel.kraus) kraus.push_back(to_json(k));
  Json out;
  out["d_A"] = channel.d_A;
  out["d_B"] = channel.d_B;
  out["kraus"] = std::move(kraus);
  return out;
}

Json to_json(const CodeCandidate& code) {
  Json vecs = Json::array();
  for (const auto& v : code.vectors()) vecs.push_back(to_json(v));
  Json out;
  out["ambient_dim"] = code.ambient_dim();
  out["vectors"] = std::move(vecs);
  return out;
}

Json to_json(const Observable& obs) {
  Json effects = Json::array();
  for (const auto& m : obs.effects) effects.push_back(to_json(m));
  Json out;
  out["ambient_dim"] = obs.ambient_dim;
  out["effects"] = std::move(effects);
  return out;
}

Json to_json(const KLReport& r) {
  Json out;
  out["max_offdiag"] = r.max_offdiag;
  out["max_diag_spread"] = r.max_diag_spread;
  out["tol"] = r.tol;
  out["pass"] = r.pass;
  return out;
}

Json to_json(const FeasibilityReport& r) {
  Json per = Json::array();
  for (const auto& o : r.per_restart)
    per.push_back(Json{{"objective", o.objective}, {"iterations", o.iterations}, {"converged", o.converged}});
  Json out;
  out["objective_min"] = r.objective_min;
  out["converged_at_tol"] = r.converged_at_tol;
  out["restarts"] = r.restarts;
  out["restarts_requested"] = r.restarts_requested;
  out["iterations_total"] = r.iterations_total;
  out["seed"] = r.seed;
  out["tol"] = r.tol;
  out["best_restart"] = r.best_restart;
  out["certificate"] = to_json(r.certificate);
  out["per_restart"] = std::move(per);
  return out;
}

Json to_json(const ValidationVerdict& v) {
  Json out;
  out["contains_identity"] = v.contains_identity;
  out["identity_residual"] = v.identity_residual;
  out["star_closed"] = v.star_closed;
  out["adjoint_residual"] = v.adjoint_residual;
  out["dim"] = v.dim;
  out["structural"] = v.structural;
  out["valid"] = v.valid();
  return out;
}

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidInput("json: a complex number is encoded as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("json: a vector is a list of [re, im] pairs");
  CVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = complex_from_json(j[i]);
  return v;
}

CMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  const Json& data = field(j, "data");
  if (!data.is_array() || data.size() != rows * cols)
    throw InvalidInput("json: matrix data must hold rows * cols entries");
  std::vector<cplx> entries;
  entries.reserve(data.size());
  for (const auto& z : data) entries.push_back(complex_from_json(z));
  return CMatrix(rows, cols, std::move(entries));
}

OperatorSystem system_from_json(const Json& j) {
  const std::size_t n = count_field(j, "ambient_dim");
  const auto basis = matrix_list(field(j, "basis"));
  for (const auto& m : basis)
    if (m.rows() != n || m.cols() != n) throw InvalidInput("json: basis matrix does not match ambient_dim");
  return OperatorSystem::from_basis(basis);
}

Channel channel_from_json(const Json& j) {
  Channel ch;
  ch.d_A = count_field(j, "d_A");
  ch.d_B = count_field(j, "d_B");
  ch.kraus = matrix_list(field(j, "kraus"));
  ch.check();
  return ch;
}

CodeCandidate code_from_json(const Json& j, bool orthonormalize) {
  const Json& list = j.is_array() ? j : field(j, "vectors");
  if (!list.is_array()) throw InvalidInput("json: code vectors must be a list");
  std::vector<CVector> vecs;
  for (const auto& v : list) vecs.push_back(vector_from_json(v));
  if (j.is_object() && j.contains("ambient_dim"))
    for (const auto& v : vecs)
      if (v.dim() != count_field(j, "ambient_dim")) throw InvalidInput("json: code vector does not match ambient_dim");
  return orthonormalize ? CodeCandidate::orthonormalized(std::move(vecs)) : CodeCandidate(std::move(vecs));
}

Observable observable_from_json(const Json& j) {
  Observable obs;
  obs.ambient_dim = count_field(j, "ambient_dim");
  obs.effects = matrix_list(field(j, "effects"));
  for (const auto& m : obs.effects)
    if (m.rows() != obs.ambient_dim || m.cols() != obs.ambient_dim)
      throw InvalidInput("json: effect does not match ambient_dim");
  return obs;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << dump(j);
}

}  // namespace zekit
