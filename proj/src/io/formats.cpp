#include "slackkit/io/formats.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "slackkit/error.hpp"

namespace slackkit::io {

namespace {

using json = nlohmann::json;
using Table = std::vector<std::vector<std::string>>;

Format resolve(std::string_view input, Format format) {
  if (format != Format::Auto) return format;
  const auto first = input.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && input[first] == '[' ? Format::Json : Format::Text;
}

json parseJson(std::string_view input) {
  try {
    return json::parse(input);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::BadInput, std::string("malformed JSON: ") + e.what());
  }
}

std::string tokenOf(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorKind::BadInput, "matrix entries must be strings or integers, got " + v.dump());
}

Table readTable(std::string_view input, Format format) {
  Table rows;
  if (resolve(input, format) == Format::Json) {
    const json doc = parseJson(input);
    if (!doc.is_array()) throw Error(ErrorKind::BadInput, "expected an array of rows");
    for (const json& row : doc) {
      if (!row.is_array()) throw Error(ErrorKind::BadInput, "expected each row to be an array");
      rows.emplace_back();
      for (const json& v : row) rows.back().push_back(tokenOf(v));
    }
  } else {
    std::istringstream lines{std::string(input)};
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream words(line);
      std::vector<std::string> row;
      for (std::string w; words >> w;) row.push_back(w);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() != rows[0].size())
      throw Error(ErrorKind::RaggedRows, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                             " entries, row 0 has " + std::to_string(rows[0].size()));
  return rows;
}

std::string render(const Table& t, Format format) {
  if (format == Format::Json) {
    json doc = json::array();
    for (const auto& row : t) doc.push_back(row);
    return doc.dump() + "\n";
  }
  std::size_t width = 0;
  for (const auto& row : t)
    for (const auto& s : row) width = std::max(width, s.size());
  std::string out;
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::string(width - row[j].size(), ' ') + row[j];
    }
    out += '\n';
  }
  return out;
}

}  // namespace

Format parseFormat(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "auto") return Format::Auto;
  throw Error(ErrorKind::BadInput, "unknown format '" + std::string(name) + "'");
}

exact::RationalMatrix parseMatrix(std::string_view input, Format format) {
  const Table t = readTable(input, format);
  std::vector<std::vector<exact::Rational>> rows;
  for (const auto& row : t) {
    rows.emplace_back();
    for (const auto& s : row) rows.back().push_back(exact::Rational::parse(s));
  }
  return exact::RationalMatrix::fromRows(rows);
}

std::vector<std::vector<bool>> parsePattern(std::string_view input, Format format) {
  const Table t = readTable(input, format);
  std::vector<std::vector<bool>> out;
  for (const auto& row : t) {
    out.emplace_back();
    for (const auto& s : row) {
      if (s != "0" && s != "1") throw Error(ErrorKind::BadInput, "pattern entries must be 0 or 1, got '" + s + "'");
      out.back().push_back(s == "1");
    }
  }
  return out;
}

std::string formatMatrix(const exact::RationalMatrix& m, Format format) {
  Table t(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t[i].push_back(m(i, j).toString());
  return render(t, format == Format::Auto ? Format::Text : format);
}

slack::SymbolicSlackMatrix parseSymbolic(std::string_view input, Format format) {
  const Table t = readTable(input, format);
  std::vector<slack::Cell> cells;
  std::size_t nvars = 0;
  for (const auto& row : t)
    for (const auto& s : row) {
      if (s == "0") {
        cells.push_back({});
      } else if (s == "1") {
        cells.push_back({slack::CellKind::One, 0});
      } else if (s.size() > 1 && s[0] == 'x' &&
                 std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        const std::size_t v = std::stoul(s.substr(1));
        cells.push_back({slack::CellKind::Variable, v});
        nvars = std::max(nvars, v + 1);
      } else {
        throw Error(ErrorKind::BadInput, "symbolic entries must be 0, 1 or xK, got '" + s + "'");
      }
    }
  const std::size_t rows = t.size();
  return slack::SymbolicSlackMatrix(rows, rows == 0 ? 0 : t[0].size(), std::move(cells), nvars);
}

std::string formatSymbolic(const slack::SymbolicSlackMatrix& s, Format format) {
  Table t(s.rows());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const slack::Cell& c = s.at(i, j);
      t[i].push_back(c.kind == slack::CellKind::Zero  ? "0"
                     : c.kind == slack::CellKind::One ? "1"
                                                      : "x" + std::to_string(c.var));
    }
  return render(t, format == Format::Auto ? Format::Text : format);
}

gb::Ideal parseIdeal(std::string_view input) {
  const json doc = parseJson(input);
  if (!doc.is_object() || !doc.contains("nvars") || !doc.contains("generators"))
    throw Error(ErrorKind::BadInput, "ideal JSON needs \"nvars\" and \"generators\"");
  const json& nv = doc.at("nvars");
  if (!nv.is_number_unsigned()) throw Error(ErrorKind::BadInput, "\"nvars\" must be a nonnegative integer");
  const std::size_t nvars = nv.get<std::size_t>();
  poly::MonomialOrder order;
  if (doc.contains("order")) {
    if (!doc.at("order").is_string()) throw Error(ErrorKind::BadInput, "\"order\" must be a string");
    order = poly::MonomialOrder::parse(doc.at("order").get<std::string>());
  }
  if (!doc.at("generators").is_array()) throw Error(ErrorKind::BadInput, "\"generators\" must be an array");
  std::vector<poly::Polynomial> gens;
  for (const json& g : doc.at("generators")) {
    if (!g.is_string()) throw Error(ErrorKind::BadInput, "generators must be strings");
    gens.push_back(poly::Polynomial::parse(g.get<std::string>(), nvars));
  }
  return gb::Ideal(nvars, std::move(gens), order);
}

std::string formatIdeal(const gb::Ideal& ideal, Format format) {
  const std::vector<std::string> gens = ideal.basisStrings();
  if (format == Format::Json) {
    json doc;
    doc["order"] = ideal.order().descriptor();
    doc["nvars"] = ideal.nvars();
    doc["generators"] = gens;
    return doc.dump() + "\n";
  }
  std::string out;
  for (const auto& g : gens) out += g + "\n";
  return out;
}

std::string formatCertificate(const scale::Certificate& c) {
  json doc;
  doc["kind"] = c.kindName();
  doc["variable"] = "x" + std::to_string(c.variable);
  doc["minimal_polynomial"] = c.minimalPolynomial.toString();
  json roots = json::array();
  for (const auto& r : c.rationalRoots) roots.push_back(r.toString());
  doc["rational_roots"] = roots;
  return doc.dump() + "\n";
}

}  // namespace slackkit::io
