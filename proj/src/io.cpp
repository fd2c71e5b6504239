#include "aniso/io.hpp"

#include <fstream>
#include <set>

namespace aniso {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

Eigen::Index dimension(const Json& j, const char* key, Eigen::Index lo, Eigen::Index hi) {
  const long long n = integer(field(j, key), key);
  if (n < lo || n > hi)
    throw InputError(std::string(key) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<Eigen::Index>(n);
}

// Square array of rows, checked against n.
const Json& rows(const Json& j, Eigen::Index n) {
  const Json& e = field(j, "entries");
  if (!e.is_array() || static_cast<Eigen::Index>(e.size()) != n) throw InputError("entries must have n rows");
  for (const auto& r : e)
    if (!r.is_array() || static_cast<Eigen::Index>(r.size()) != n) throw InputError("entries must be n x n");
  return e;
}

Rational rationalFrom(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return RationalField{}.parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError("bad rational \"" + j.get<std::string>() + "\": " + e.what());
    }
  }
  throw InputError("expected an integer or a rational string");
}

FiniteField::Element fqFrom(const FiniteField& f, const Json& j) {
  if (j.is_number_integer()) return f.fromInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return f.parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError("bad field element \"" + j.get<std::string>() + "\": " + e.what());
    }
  }
  throw InputError("field elements must be integers or strings");
}

template <typename Form>
Json formJson(const Form& q, Json fieldJson) {
  Json coeffs = Json::object();
  for (Eigen::Index i = 0; i < q.dim(); ++i)
    for (Eigen::Index j = i; j < q.dim(); ++j)
      if (!(q.coeff(i, j) == std::decay_t<decltype(q.field())>::zero()))
        coeffs[std::to_string(i + 1) + std::to_string(j + 1)] = q.field().format(q.coeff(i, j));
  return {{"field", std::move(fieldJson)}, {"dim", q.dim()}, {"coeffs", coeffs}};
}

template <typename Form, typename Parse>
Form fillForm(Form q, const Json& coeffs, Parse parse) {
  if (!coeffs.is_object()) throw InputError("coeffs must be an object like {\"11\": 1}");
  for (const auto& [key, val] : coeffs.items()) {
    if (key.size() != 2 || key[0] < '1' || key[1] < '1' || key[0] - '0' > q.dim() || key[1] - '0' > q.dim())
      throw InputError("bad coefficient index \"" + key + "\"");
    q.setCoeff(key[0] - '1', key[1] - '1', parse(val));
  }
  return q;
}

}  // namespace

Json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

IntMatrix intMatrixFromJson(const Json& j) {
  const Eigen::Index n = dimension(j, "n", 1, 8);
  const Json& e = rows(j, n);
  IntMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = Int(integer(e[r][c], "matrix entry"));
  return m;
}

Json toJson(const IntMatrix& m) {
  Json e = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).toInt64());
    e.push_back(row);
  }
  return {{"n", m.rows()}, {"entries", e}};
}

Json toJson(const IntVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).toInt64());
  return a;
}

GeneratorSet generatorsFromJson(const Json& j, const std::string& dimKey) {
  GeneratorSet g;
  g.n = dimension(j, dimKey.c_str(), 1, 4);
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw InputError("generators must be an array");
  for (const auto& gj : gens) {
    IntMatrix m;
    if (gj.is_array()) {  // bare rows
      Json wrapped{{"n", static_cast<long long>(gj.size())}, {"entries", gj}};
      m = intMatrixFromJson(wrapped);
    } else {
      m = intMatrixFromJson(gj);
    }
    if (m.rows() != g.n) throw InputError("generator dimension does not match " + dimKey);
    g.generators.push_back(std::move(m));
  }
  return g;
}

FiniteField fieldFromJson(const Json& j) {
  const long long p = integer(field(j, "p"), "p");
  const long long k = j.contains("k") ? integer(j.at("k"), "k") : 1;
  if (p < 2 || p > 13 || k < 1 || k > 4) throw InputError("field must have prime p <= 13 and 1 <= k <= 4");
  try {
    return FiniteField(static_cast<unsigned>(p), static_cast<unsigned>(k));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json toJson(const FiniteField& f) { return {{"p", f.characteristic()}, {"k", f.degree()}}; }

AnyForm formFromJson(const Json& j) {
  const Json& fj = field(j, "field");
  const Eigen::Index dim = dimension(j, "dim", 1, 6);
  const Json& coeffs = field(j, "coeffs");
  if (fj.is_string()) {
    if (fj.get<std::string>() != "Q") throw InputError("field must be \"Q\" or {\"p\",\"k\"}");
    return fillForm(RatForm(RationalField{}, dim), coeffs, rationalFrom);
  }
  const FiniteField f = fieldFromJson(fj);
  return fillForm(FqForm(f, dim), coeffs, [&](const Json& v) { return fqFrom(f, v); });
}

Json toJson(const FqForm& q) { return formJson(q, toJson(q.field())); }
Json toJson(const RatForm& q) { return formJson(q, "Q"); }

Json fqMatrixToJson(const FiniteField& f, const FqMatrix& m) {
  Json e = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(f.format(m(r, c)));
    e.push_back(row);
  }
  return e;
}

FqMatrix fqMatrixFromJson(const FiniteField& f, const Json& j) {
  const Json& e = j.is_array() ? j : field(j, "entries");
  const auto n = static_cast<Eigen::Index>(e.size());
  if (n < 1 || n > 4) throw InputError("matrix over F_q must be 1x1 to 4x4");
  FqMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (!e[r].is_array() || static_cast<Eigen::Index>(e[r].size()) != n) throw InputError("matrix must be square");
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = fqFrom(f, e[r][c]);
  }
  return m;
}

DeltaInput deltaFromJson(const Json& j) {
  DeltaInput d{fieldFromJson(field(j, "field")), {}};
  const Json& pts = field(j, "points");
  if (!pts.is_array()) throw InputError("points must be an array");
  std::set<std::string> seen;
  for (const auto& p : pts) {
    if (!p.is_string()) throw InputError("points must be strings");
    try {
      d.points.push_back(parsePoint(d.field, p.get<std::string>()));
    } catch (const std::exception& e) {
      throw InputError("bad point \"" + p.get<std::string>() + "\": " + e.what());
    }
    if (!seen.insert(formatPoint(d.field, d.points.back())).second) throw InputError("points must be distinct");
  }
  return d;
}

CycMatrix cycMatrixFromJson(const CyclotomicField& k, const Json& j) {
  const Eigen::Index n = dimension(j, "n", 1, 3);
  const Json& e = rows(j, n);
  CycMatrix m{static_cast<std::size_t>(n), {}};
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Json& x = e[r][c];
      if (x.is_array()) {
        std::vector<Rational> poly;
        for (const auto& coord : x) poly.push_back(rationalFrom(coord));
        m.entries.push_back(k.fromPoly(poly));
      } else {
        m.entries.push_back(k.fromRational(rationalFrom(x)));
      }
    }
  }
  return m;
}

Json toJson(const BoundResult& r) {
  Json j{{"case", r.caseName}, {"kind", kindName(r.kind)}, {"formula", r.formula},
         {"citation", r.citation()}, {"citations", r.citations}};
  j["bound"] = r.value ? Json(*r.value) : Json(nullptr);
  if (r.exponent) j["exponent"] = *r.exponent;
  if (r.kind == BoundKind::Set) j["primes"] = r.primes;
  return j;
}

}  // namespace aniso
