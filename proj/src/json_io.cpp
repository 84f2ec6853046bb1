#include "burstkit/json_io.hpp"

#include "burstkit/error.hpp"

namespace burstkit {

namespace {

std::uint32_t checked_index(const Field& field, const Json& v) {
  if (!v.is_number_integer()) throw ShapeError("field element must be an integer index");
  const auto x = v.get<std::int64_t>();
  if (x < 0 || static_cast<std::uint64_t>(x) >= field.q()) throw DomainError("element index out of range");
  return static_cast<std::uint32_t>(x);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ShapeError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json field_to_json(const Field& field) {
  return Json{{"p", field.p()}, {"m", field.m()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  const auto p = require(j, "p").get<std::int64_t>();
  const auto m = j.contains("m") ? j.at("m").get<std::int64_t>() : 1;
  if (p < 2 || m < 1 || p > UINT32_MAX || m > 64) throw DomainError("invalid field descriptor");
  FieldPtr f = field_new(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
  if (j.contains("modulus") && m > 1 && j.at("modulus").get<std::vector<std::uint32_t>>() != f->modulus())
    throw DomainError("only the lexicographically least irreducible modulus is supported");
  return f;
}

Json word_to_json(const Word& w) {
  Json a = Json::array();
  for (Fe x : w) a.push_back(x.value);
  return a;
}

Word word_from_json(const Field& field, const Json& j) {
  if (!j.is_array()) throw ShapeError("word must be an array");
  Word w;
  for (const auto& v : j) w.push_back(Fe{checked_index(field, v)});
  return w;
}

Json mat_to_json(const Mat& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Fe x : m.row(r)) row.push_back(x.value);
    a.push_back(std::move(row));
  }
  return a;
}

Mat mat_from_json(const FieldPtr& field, const Json& j) {
  if (!j.is_array()) throw ShapeError("matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(word_from_json(*field, r));
  return Mat::from_rows(field, rows);
}

Json poly_to_json(const Poly& p) {
  Json a = Json::array();
  for (Fe x : p.coeffs()) a.push_back(x.value);
  return a;
}

Json code_to_json(const CodeHandle& code) {
  Json j;
  j["field"] = field_to_json(*code.field());
  j["n"] = code.n();
  if (code.is_linear()) {
    j["kind"] = "linear";
    j["H"] = mat_to_json(code.linear().parity_check());
  } else {
    j["kind"] = "explicit";
    Json words = Json::array();
    for (const auto& w : std::get<ExplicitCode>(code.code).codewords()) words.push_back(word_to_json(w));
    j["codewords"] = std::move(words);
  }
  Json meta = Json::object();
  meta["name"] = code.name;
  for (const auto& [k, v] : code.meta) meta[k] = v;
  j["meta"] = std::move(meta);
  return j;
}

CodeHandle code_from_json(const Json& j) {
  FieldPtr field = field_from_json(require(j, "field"));
  const auto n = require(j, "n").get<std::size_t>();
  const auto kind = require(j, "kind").get<std::string>();
  CodeHandle h{"file", {}, ExplicitCode(field, n, {Word(n, field->zero())})};
  if (j.contains("meta") && j.at("meta").is_object()) {
    for (const auto& [k, v] : j.at("meta").items()) {
      const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      if (k == "name")
        h.name = s;
      else
        h.meta[k] = s;
    }
  }
  if (kind == "linear") {
    if (j.contains("H")) {
      Mat m = mat_from_json(field, j.at("H"));
      if (m.rows() == 0) m = Mat(field, 0, n);
      if (m.cols() != n) throw ShapeError("H must have n columns");
      h.code = LinearCode::from_parity_check(std::move(m));
    } else {
      Mat m = mat_from_json(field, require(j, "G"));
      if (m.cols() != n) throw ShapeError("G must have n columns");
      h.code = LinearCode::from_generator(std::move(m));
    }
  } else if (kind == "explicit") {
    std::vector<Word> words;
    for (const auto& w : require(j, "codewords")) words.push_back(word_from_json(*field, w));
    h.code = ExplicitCode(field, n, std::move(words));
  } else {
    throw ShapeError("kind must be \"linear\" or \"explicit\"");
  }
  return h;
}

Json pattern_to_json(const BurstPattern& p) {
  if (p.is_zero()) return Json{{"zero", true}};
  return Json{{"start", p.start}, {"payload", word_to_json(p.payload)}};
}

Json decode_to_json(const ListDecodeResult& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates)
    cands.push_back(Json{{"codeword", word_to_json(c.codeword)},
                         {"error", word_to_json(c.error)},
                         {"burst", pattern_to_json(c.burst)},
                         {"window", c.window}});
  Json stats = Json::array();
  for (const auto& s : r.window_stats)
    stats.push_back(Json{{"start", s.window.start}, {"length", s.window.length}, {"solutions", s.solutions}});
  return Json{{"list_size", r.candidates.size()}, {"candidates", std::move(cands)}, {"window_stats", std::move(stats)}};
}

Json cert_to_json(const CertReport& r) {
  Json j;
  j["path"] = r.path;
  j["tau"] = r.tau;
  j["phased"] = r.phased;
  j["detects"] = r.detects;
  j["max_list"] = r.max_list;
  j["ell"] = r.ell ? Json(*r.ell) : Json(nullptr);
  j["decodable"] = r.decodable ? Json(*r.decodable) : Json(nullptr);
  Json w = Json::array();
  for (const auto& p : r.witness) w.push_back(Json{{"codeword", word_to_json(p.codeword)}, {"error", word_to_json(p.error)}});
  j["witness"] = std::move(w);
  j["work"] = Json{{"bursts", r.work.bursts}, {"buckets", r.work.buckets}, {"codewords", r.work.codewords}};
  return j;
}

Json verdict_to_json(const BoundVerdict& v) {
  Json j;
  j["bound"] = std::string(bound_name(v.id));
  j["applicable"] = v.applicable;
  j["hypotheses"] = v.hypotheses;
  j["size"] = v.size.str();
  j["max_size"] = v.max_size ? Json(v.max_size->str()) : Json(nullptr);
  j["satisfied"] = v.satisfied ? Json(*v.satisfied) : Json(nullptr);
  j["exact_terms"] = v.exact_terms;
  j["min_redundancy"] = v.min_redundancy;
  return j;
}

}  // namespace burstkit
