// SPDX-License-Identifier: Apache-2.0
#include "biregkit/io.hpp"

#include <fstream>
#include <sstream>

#include "biregkit/parser.hpp"

namespace bireg {

namespace {

std::pair<int, int> position_of(const std::string& text, std::size_t offset) {
  int line = 1;
  int col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::pair<int, int> locate(const std::string& text, const std::string& needle, std::size_t from = 0) {
  auto at = text.find(needle, from);
  return at == std::string::npos ? std::pair{1, 1} : position_of(text, at);
}

[[noreturn]] void fail(const std::string& what, std::pair<int, int> pos) { throw ParseError(what, pos.first, pos.second); }

int ring_size(const Json& ring, const char* key, const std::string& text) {
  auto it = ring.find(key);
  if (it == ring.end() || !it->is_number_integer() || it->get<long>() < 0 || it->get<long>() > kMaxVariables) {
    fail(std::string("ring.") + key + " must be an integer in [0, 16]", locate(text, std::string("\"") + key + "\""));
  }
  return it->get<int>();
}

// Message of a ParseError without its trailing position.
std::string bare(const ParseError& e) {
  std::string s = e.what();
  auto at = s.rfind(" at line ");
  return at == std::string::npos ? s : s.substr(0, at);
}

}  // namespace

IdealDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto pos = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON", pos.first, pos.second);
  }
  if (!j.is_object()) fail("ideal document must be a JSON object", {1, 1});
  IdealDocument doc;
  auto ring = j.find("ring");
  if (ring == j.end() || !ring->is_object()) fail("missing \"ring\" object", locate(text, "\"ring\""));
  doc.n = ring_size(*ring, "n", text);
  doc.m = ring_size(*ring, "m", text);
  if (doc.n + doc.m < 1) fail("ring needs at least one variable", locate(text, "\"ring\""));
  if (doc.n + doc.m > kMaxVariables) fail("ring has more than 16 variables", locate(text, "\"ring\""));
  if (auto f = ring->find("field"); f != ring->end()) {
    if (!f->is_string()) fail("ring.field must be a string", locate(text, "\"field\""));
    try {
      doc.field = Field::parse(f->get<std::string>());
    } catch (const MathError& e) {
      fail(e.what(), locate(text, "\"field\""));
    }
  }
  auto gens = j.find("generators");
  if (gens == j.end() || !gens->is_array()) fail("missing \"generators\" array", locate(text, "\"generators\""));
  std::size_t cursor = text.find("\"generators\"");
  for (const auto& g : *gens) {
    if (!g.is_string()) fail("generators must be strings", locate(text, "\"generators\""));
    const std::string s = g.get<std::string>();
    const std::string quoted = Json(s).dump();
    auto at = text.find(quoted, cursor);
    std::pair<int, int> pos{1, 1};
    if (at != std::string::npos) {
      pos = position_of(text, at + 1);
      cursor = at + quoted.size();
    }
    doc.generators.push_back(s);
    doc.positions.push_back(pos);
  }
  if (auto md = j.find("metadata"); md != j.end()) {
    if (!md->is_object()) fail("metadata must be an object", locate(text, "\"metadata\""));
    doc.metadata = *md;
  }
  // Validate generators against the grammar up front.
  auto r = Ring::make(doc.n, doc.m, doc.field);
  for (std::size_t k = 0; k < doc.generators.size(); ++k) {
    try {
      parse_polynomial(doc.generators[k], r);
    } catch (const ParseError& e) {
      fail(bare(e), {doc.positions[k].first, doc.positions[k].second + e.column() - 1});
    }
  }
  return doc;
}

IdealDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

Json to_json(const IdealDocument& doc) {
  Json j;
  j["ring"] = {{"n", doc.n}, {"m", doc.m}, {"field", doc.field.to_string()}};
  j["generators"] = doc.generators;
  j["metadata"] = doc.metadata;
  return j;
}

IdealDocument document_from_ideal(const Ideal& j, Json metadata) {
  IdealDocument doc;
  doc.n = j.ring()->n();
  doc.m = j.ring()->m();
  doc.field = j.ring()->field();
  for (const auto& g : j.generators()) doc.generators.push_back(g.to_string());
  doc.metadata = std::move(metadata);
  return doc;
}

Ideal to_ideal(const IdealDocument& doc, bool allow_inhomogeneous) {
  auto r = Ring::make(doc.n, doc.m, doc.field);
  std::vector<Polynomial> ps;
  for (std::size_t k = 0; k < doc.generators.size(); ++k) {
    const int line = k < doc.positions.size() ? doc.positions[k].first : 1;
    Polynomial p = parse_polynomial(doc.generators[k], r, line);
    if (!allow_inhomogeneous && std::holds_alternative<NotBihomogeneous>(p.bidegree())) {
      auto pos = k < doc.positions.size() ? doc.positions[k] : std::pair{1, 1};
      fail("generator '" + doc.generators[k] + "' is not bihomogeneous", pos);
    }
    ps.push_back(std::move(p));
  }
  return Ideal(r, std::move(ps));
}

std::vector<Polynomial> to_x_polynomials(const IdealDocument& doc) {
  if (doc.n < 1) throw MathError("the base ideal needs at least one x variable");
  auto full = Ring::make(doc.n, doc.m, doc.field);
  auto sx = Ring::make(doc.n, 0, doc.field);
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < doc.generators.size(); ++k) {
    Polynomial p = parse_polynomial(doc.generators[k], full);
    for (const auto& t : p.terms()) {
      if (full->bidegree(t.mono).y != 0) {
        fail("generator '" + doc.generators[k] + "' involves a y variable", k < doc.positions.size() ? doc.positions[k] : std::pair{1, 1});
      }
    }
    out.push_back(parse_polynomial(doc.generators[k], sx));
  }
  return out;
}

Json to_json(const RegValue& v) {
  switch (v.kind) {
    case RegValue::Kind::kValue: return v.value;
    case RegValue::Kind::kUndefined: return "undefined";
    case RegValue::Kind::kIncomplete: return "incomplete";
  }
  return nullptr;
}

Json to_json(Bidegree d) { return Json::array({d.x, d.y}); }

Json to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [k, v] : t.entries) entries.push_back({{"i", k.first}, {"degree", to_json(k.second)}, {"value", v}});
  Json j{{"entries", entries}, {"complete", t.complete}};
  j["box"] = t.box ? to_json(*t.box) : Json(nullptr);
  return j;
}

Json to_json(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

}  // namespace bireg
