#include "tropos/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "tropos/errors.hpp"

namespace tropos {
namespace {

// Builds an ordered_json document, storing floats by their source text.
class ExactSax {
 public:
  using number_integer_t = Json::number_integer_t;
  using number_unsigned_t = Json::number_unsigned_t;
  using number_float_t = Json::number_float_t;
  using string_t = Json::string_t;
  using binary_t = Json::binary_t;

  bool null() { return put(Json(nullptr)); }
  bool boolean(bool v) { return put(Json(v)); }
  bool number_integer(number_integer_t v) { return put(Json(v)); }
  bool number_unsigned(number_unsigned_t v) { return put(Json(v)); }
  bool number_float(number_float_t, const string_t& text) { return put(Json(text)); }
  bool string(string_t& v) { return put(Json(v)); }
  bool binary(binary_t&) { return put(Json()); }
  bool start_object(std::size_t) { return open(Json::object()); }
  bool end_object() { return close(); }
  bool start_array(std::size_t) { return open(Json::array()); }
  bool end_array() { return close(); }
  bool key(string_t& k) {
    key_ = k;
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }

  Json take() { return std::move(root_); }

 private:
  Json* slot() {
    if (stack_.empty()) return &root_;
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(Json());
      return &top.back();
    }
    return &top[key_];
  }
  bool put(Json v) {
    *slot() = std::move(v);
    return true;
  }
  bool open(Json v) {
    Json* s = slot();
    *s = std::move(v);
    stack_.push_back(s);
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }

  Json root_;
  std::vector<Json*> stack_;
  std::string key_;
};

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t size_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field '") + name + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

template <typename T, typename F>
Matrix<T> matrix_from_json(const Json& j, F&& entry) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) throw ParseError("entries must hold one array per row");
  Matrix<T> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols) throw ParseError("row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t jj = 0; jj < cols; ++jj) out(i, jj) = entry(e[i][jj]);
  }
  return out;
}

template <typename T, typename F>
Json matrix_to_json(const Matrix<T>& a, F&& entry) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(entry(a(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

IndexSet index_set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("subset must be an array");
  IndexSet s;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 1) throw ParseError("subset entries are 1-based integers");
    s.push_back(x.get<std::size_t>() - 1);
  }
  return s;
}

}  // namespace

Json parse_json_exact(std::string_view text) {
  ExactSax sax;
  if (!Json::sax_parse(text.begin(), text.end(), &sax)) throw ParseError("malformed JSON");
  return sax.take();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_exact(buf.str());
}

Json to_json(const Rational& x) {
  if (is_integer(x) && x.get_num().fits_slong_p()) return Json(x.get_num().get_si());
  return Json(to_string(x));
}

Json to_json(const TropScalar& x) { return x.is_finite() ? to_json(x.value()) : Json("-inf"); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational number, got " + j.dump());
}

TropScalar trop_from_json(const Json& j) {
  if (j.is_string()) return parse_trop(j.get<std::string>());
  return rational_from_json(j);
}

SeriesRat series_from_json(const Json& j) {
  if (j.is_string()) return parse_series(j.get<std::string>());
  return SeriesRat(rational_from_json(j));
}

Json to_json(const TropMatrix& a) {
  return matrix_to_json(a, [](const TropScalar& x) { return to_json(x); });
}

Json to_json(const SeriesMatrix& a) {
  return matrix_to_json(a, [](const SeriesRat& x) { return Json(to_string(x)); });
}

Json to_json(const Matrix<Rational>& a) {
  return matrix_to_json(a, [](const Rational& x) { return to_json(x); });
}

Json to_json(const BoolMatrix& a) {
  return matrix_to_json(a, [](char x) { return Json(x != 0); });
}

TropMatrix trop_matrix_from_json(const Json& j) {
  return matrix_from_json<TropScalar>(j, [](const Json& x) { return trop_from_json(x); });
}

SeriesMatrix series_matrix_from_json(const Json& j) {
  return matrix_from_json<SeriesRat>(j, [](const Json& x) { return series_from_json(x); });
}

Json factors_to_json(const std::vector<JacobiFactor>& fs, std::size_t n) {
  Json list = Json::array();
  for (const auto& f : fs) list.push_back(Json{{"kind", to_string(f.kind)}, {"i", f.i + 1}, {"a", to_json(f.a)}});
  return Json{{"n", n}, {"factors", std::move(list)}};
}

std::pair<std::size_t, std::vector<JacobiFactor>> factors_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const Json& list = field(j, "factors");
  if (!list.is_array()) throw ParseError("factors must be an array");
  std::vector<JacobiFactor> fs;
  for (const auto& x : list) {
    JacobiFactor f;
    const Json& kind = field(x, "kind");
    if (!kind.is_string()) throw ParseError("factor kind must be a string");
    f.kind = parse_jacobi_kind(kind.get<std::string>());
    const std::size_t i = size_field(x, "i");
    if (i == 0) throw ParseError("factor index is 1-based");
    f.i = i - 1;
    f.a = trop_from_json(field(x, "a"));
    fs.push_back(f);
  }
  return {n, std::move(fs)};
}

Json index_set_to_json(const IndexSet& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

template <typename T, typename F>
Json plucker_to_json(const PluckerVector<T>& p, F&& value) {
  Json coords = Json::array();
  const auto subsets = p.subsets();
  for (std::size_t s = 0; s < subsets.size(); ++s)
    coords.push_back(Json{{"subset", index_set_to_json(subsets[s])}, {"value", value(p.coords[s])}});
  return Json{{"k", p.k}, {"n", p.n}, {"coords", std::move(coords)}};
}

Json to_json(const TropPlucker& p) {
  return plucker_to_json(p, [](const TropScalar& x) { return to_json(x); });
}

Json to_json(const SeriesPlucker& p) {
  return plucker_to_json(p, [](const SeriesRat& x) { return Json(to_string(x)); });
}

TropPlucker plucker_from_json(const Json& j) {
  TropPlucker p;
  p.k = size_field(j, "k");
  p.n = size_field(j, "n");
  if (p.k > p.n) throw MalformedVector("k exceeds n");
  const Json& coords = field(j, "coords");
  if (!coords.is_array()) throw ParseError("coords must be an array");
  const auto subsets = p.subsets();
  p.coords.assign(subsets.size(), TropScalar::neg_inf());
  std::vector<bool> seen(subsets.size(), false);
  for (const auto& c : coords) {
    IndexSet s = index_set_from_json(field(c, "subset"));
    if (s.size() != p.k || !std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end() || (!s.empty() && s.back() >= p.n)) {
      throw MalformedVector("subset " + index_set_to_json(s).dump() + " is not a sorted k-subset of [n]");
    }
    const std::size_t r = subset_rank(s, p.n);
    if (seen[r]) throw MalformedVector("subset " + index_set_to_json(s).dump() + " listed twice");
    seen[r] = true;
    p.coords[r] = trop_from_json(field(c, "value"));
  }
  for (std::size_t r = 0; r < seen.size(); ++r)
    if (!seen[r]) throw MalformedVector("missing coordinate for subset " + index_set_to_json(subsets[r]).dump());
  return p;
}

Json to_json(const TropNetwork& g) {
  Json nodes = Json::array();
  for (const auto& v : g.nodes) nodes.push_back(Json{{"id", v.id}, {"col", v.col}, {"row", v.row}});
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"weight", to_json(e.weight)}});
  return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"sources", g.sources}, {"targets", g.targets}};
}

TropNetwork network_from_json(const Json& j) {
  TropNetwork g;
  for (const auto& v : field(j, "nodes")) {
    const Json& col = field(v, "col");
    const Json& row = field(v, "row");
    if (!col.is_number_integer() || !row.is_number_integer()) throw ParseError("node col and row must be integers");
    g.nodes.push_back({size_field(v, "id"), col.get<long>(), row.get<long>()});
  }
  for (const auto& e : field(j, "edges"))
    g.edges.push_back({size_field(e, "from"), size_field(e, "to"), trop_from_json(field(e, "weight"))});
  for (const auto& s : field(j, "sources")) g.sources.push_back(s.get<std::size_t>());
  for (const auto& t : field(j, "targets")) g.targets.push_back(t.get<std::size_t>());
  validate_network(g);
  return g;
}

Json to_json(const PositivityReport& r) {
  Json out{{"tp_trop", r.tp_trop}, {"tn_trop", r.tn_trop}, {"tp2", r.tp2},
           {"tn2", r.tn2},         {"dd", r.dd},           {"ndd", r.ndd}};
  if (r.witness) {
    out["witness"] = Json{{"rows", index_set_to_json(r.witness->rows)},
                          {"cols", index_set_to_json(r.witness->cols)},
                          {"class", to_string(r.witness->cls.tag)},
                          {"weight", to_json(r.witness->cls.weight)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const StaircaseDecomposition& d) {
  Json u = Json::array();
  for (const auto& x : d.u) u.push_back(to_json(x));
  Json v = Json::array();
  for (const auto& x : d.v) v.push_back(to_json(x));
  return Json{{"u", std::move(u)}, {"v", std::move(v)}, {"lambda", to_json(d.lambda)}};
}

Json to_json(const TropCharPoly& p) {
  Json out = Json::array();
  for (const auto& a : p.coeffs) out.push_back(to_json(a));
  return out;
}

Json to_json(const EigenSpectrum& s) {
  Json out = Json::array();
  for (const auto& [value, mult] : s.eigenvalues) out.push_back(Json{{"value", to_json(value)}, {"multiplicity", mult}});
  return out;
}

Json to_json(const StiefelInversion& inv) {
  Json out{{"in_image", inv.in_image}, {"candidate", to_json(inv.candidate)}, {"candidate_tn", inv.candidate_tn}};
  if (inv.mismatch) {
    out["mismatch"] = Json{{"subset", index_set_to_json(inv.mismatch->subset)},
                           {"expected", to_json(inv.mismatch->expected)},
                           {"computed", to_json(inv.mismatch->computed)}};
  } else {
    out["mismatch"] = nullptr;
  }
  return out;
}

}  // namespace tropos
