#include "ay/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ay {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

long long as_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::vector<int> index_list(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(static_cast<int>(as_integer(v, what)));
  return out;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_fail("complex value must be [re, im]");
  }
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) parse_fail("non-finite entry");
  return z;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) data.push_back(complex_to_json(m(r, c)));
  }
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::move(data);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const long long rows = as_integer(field(j, "rows"), "rows");
  const long long cols = as_integer(field(j, "cols"), "cols");
  if (rows < 0 || cols < 0) parse_fail("negative matrix dimension");
  const Json& data = field(j, "data");
  if (!data.is_array()) parse_fail("data must be an array");
  if (static_cast<long long>(data.size()) != rows * cols) {
    parse_fail("data length " + std::to_string(data.size()) + " differs from rows * cols");
  }
  ComplexMatrix m(rows, cols);
  std::size_t k = 0;
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(data[k++]);
  }
  return m;
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v(k)));
  return out;
}

Json symbol_to_json(const LaurentSymbol& s) {
  Json j;
  j["dim_e"] = s.dim_e();
  j["k_min"] = s.k_min();
  j["k_max"] = s.k_max();
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(matrix_to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

LaurentSymbol symbol_from_json(const Json& j) {
  const long long dim_e = as_integer(field(j, "dim_e"), "dim_e");
  const long long k_min = as_integer(field(j, "k_min"), "k_min");
  const long long k_max = as_integer(field(j, "k_max"), "k_max");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) parse_fail("coeffs must be an array");
  if (k_max < k_min || static_cast<long long>(coeffs.size()) != k_max - k_min + 1) {
    parse_fail("coefficient count does not match [k_min, k_max]");
  }
  std::vector<ComplexMatrix> c;
  for (const auto& m : coeffs) c.push_back(matrix_from_json(m));
  try {
    return LaurentSymbol(dim_e, static_cast<int>(k_min), std::move(c));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

Json tuple_to_json(const OperatorTuple& t) {
  Json j;
  j["n"] = t.n();
  Json ops = Json::array();
  for (const auto& m : t.ops()) ops.push_back(matrix_to_json(m));
  j["ops"] = std::move(ops);
  return j;
}

OperatorTuple tuple_from_json(const Json& j) {
  const long long n = as_integer(field(j, "n"), "n");
  const Json& ops = field(j, "ops");
  if (!ops.is_array() || static_cast<long long>(ops.size()) != n) {
    parse_fail("ops length differs from n");
  }
  std::vector<ComplexMatrix> m;
  for (const auto& o : ops) m.push_back(matrix_from_json(o));
  try {
    return OperatorTuple(std::move(m));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

Json hereditary_to_json(const HereditaryPolynomial& h) {
  Json mons = Json::array();
  for (const auto& m : h.monomials()) {
    Json e;
    e["coeff"] = complex_to_json(m.coeff);
    e["star"] = m.star;
    e["plain"] = m.plain;
    mons.push_back(std::move(e));
  }
  Json j;
  j["monomials"] = std::move(mons);
  return j;
}

HereditaryPolynomial hereditary_from_json(const Json& j) {
  const Json& mons = field(j, "monomials");
  if (!mons.is_array()) parse_fail("monomials must be an array");
  HereditaryPolynomial h;
  for (const auto& m : mons) {
    h.add(complex_from_json(field(m, "coeff")), index_list(field(m, "star"), "star"),
          index_list(field(m, "plain"), "plain"));
  }
  return h;
}

Json blaschke_to_json(const BlaschkeProduct& u) {
  Json zeros = Json::array();
  for (Complex a : u.zeros) zeros.push_back(complex_to_json(a));
  Json j;
  j["zeros"] = std::move(zeros);
  j["unimodular"] = complex_to_json(u.unimodular);
  return j;
}

BlaschkeProduct blaschke_from_json(const Json& j) {
  BlaschkeProduct u;
  const Json& zeros = j.is_array() ? j : field(j, "zeros");
  if (!zeros.is_array()) parse_fail("zeros must be an array");
  for (const auto& z : zeros) u.zeros.push_back(complex_from_json(z));
  if (j.is_object() && j.contains("unimodular")) u.unimodular = complex_from_json(j["unimodular"]);
  return u;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace ay
