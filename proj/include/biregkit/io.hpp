// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biregkit/groebner.hpp"
#include "biregkit/resolve.hpp"
#include "json.hpp"

namespace bireg {

using Json = nlohmann::ordered_json;

struct IdealDocument {
  int n = 0;
  int m = 0;
  Field field = Field::rationals();
  std::vector<std::string> generators;
  Json metadata = Json::object();
  /// (line, column) of each generator string in the source text.
  std::vector<std::pair<int, int>> positions;

  friend bool operator==(const IdealDocument& a, const IdealDocument& b) {
    return a.n == b.n && a.m == b.m && a.field == b.field && a.generators == b.generators && a.metadata == b.metadata;
  }
};

/// Throws ParseError with the line and column of the offending text.
IdealDocument parse_document(const std::string& text);
IdealDocument load_document(const std::string& path);
Json to_json(const IdealDocument& doc);
IdealDocument document_from_ideal(const Ideal& j, Json metadata = Json::object());

/// Builds the ideal; generators must be bihomogeneous unless allowed otherwise.
Ideal to_ideal(const IdealDocument& doc, bool allow_inhomogeneous = false);
/// Generators as polynomials of S_x; they must not involve any y variable.
std::vector<Polynomial> to_x_polynomials(const IdealDocument& doc);

Json to_json(const RegValue& v);
Json to_json(const BettiTable& t);
Json to_json(Bidegree d);
Json to_json(const std::vector<Polynomial>& ps);

}  // namespace bireg
