// slackkit command line front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slackkit/error.hpp"
#include "slackkit/io/formats.hpp"
#include "slackkit/scalereduce/forest.hpp"
#include "slackkit/scalereduce/reduce.hpp"
#include "slackkit/scalereduce/rehomogenize.hpp"
#include "slackkit/slackcore/slack_ideal.hpp"

using namespace slackkit;

namespace {

// stdin is read once and kept, since several options may ask for it.
std::string readSource(const std::string& path) {
  if (path == "-") {
    static std::optional<std::string> stdinText;
    if (!stdinText) {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      stdinText = ss.str();
    }
    return *stdinText;
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> parseIndexList(const std::string& text) {
  std::vector<std::size_t> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    if (!item.empty() && item.front() == 'x') item.erase(item.begin());
    if (item.empty()) continue;
    const auto dots = item.find("..");
    try {
      if (dots != std::string::npos) {
        const std::size_t a = std::stoul(item.substr(0, dots)), b = std::stoul(item.substr(dots + 2));
        for (std::size_t k = a; k <= b; ++k) out.push_back(k);
      } else {
        std::size_t used = 0;
        out.push_back(std::stoul(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::BadInput, "bad index '" + item + "'");
    }
  }
  return out;
}

// Input options shared by most verbs; exactly one source is expected.
struct Inputs {
  std::string vertices, matrix, pattern, symbolic, builtin;
  std::string object = "polytope";
  std::string inputFormat = "auto";
  std::string outputFormat = "text";
  std::optional<std::size_t> d;

  void addSources(CLI::App* app) {
    app->add_option("--vertices", vertices, "point coordinates, one point per row ('-' for stdin)");
    app->add_option("--matrix", matrix, "numeric slack matrix");
    app->add_option("--pattern", pattern, "0/1 support pattern");
    app->add_option("--symbolic", symbolic, "symbolic matrix with entries 0, 1, xK");
    app->add_option("--builtin", builtin, "name of a built-in matrix");
    app->add_option("--object", object, "polytope or matroid")->check(CLI::IsMember({"polytope", "matroid"}));
    addFormats(app);
  }
  void addFormats(CLI::App* app) {
    app->add_option("--input-format", inputFormat, "auto, text or json")->check(CLI::IsMember({"auto", "text", "json"}));
    app->add_option("--format", outputFormat, "text or json")->check(CLI::IsMember({"text", "json"}));
  }
  void addDimension(CLI::App* app) { app->add_option("-d,--dim", d, "dimension (inferred when omitted)"); }

  io::Format in() const { return io::parseFormat(inputFormat); }
  io::Format out() const { return io::parseFormat(outputFormat); }
  slack::Source source() const { return object == "matroid" ? slack::Source::Matroid : slack::Source::Polytope; }

  void requireOne() const {
    const int n = !vertices.empty() + !matrix.empty() + !pattern.empty() + !symbolic.empty() + !builtin.empty();
    if (n != 1)
      throw Error(ErrorKind::BadInput, "give exactly one of --vertices, --matrix, --pattern, --symbolic, --builtin");
  }

  geom::PointConfiguration points() const {
    return geom::PointConfiguration{io::parseMatrix(readSource(vertices), in())};
  }

  std::optional<slack::SlackMatrix> numeric() const {
    requireOne();
    if (!vertices.empty()) return slack::slackMatrix(points(), source());
    if (!matrix.empty())
      return slack::SlackMatrix::fromEntries(io::parseMatrix(readSource(matrix), in()), source());
    if (!pattern.empty()) {
      const auto p = io::parsePattern(readSource(pattern), in());
      exact::RationalMatrix m(p.size(), p.empty() ? 0 : p[0].size());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = p[i][j] ? 1 : 0;
      return slack::SlackMatrix::fromEntries(std::move(m), slack::Source::Pattern);
    }
    if (!builtin.empty()) {
      auto b = slack::specificSlackMatrix(builtin);
      if (auto* s = std::get_if<slack::SlackMatrix>(&b)) return *s;
    }
    return std::nullopt;
  }

  slack::SymbolicSlackMatrix symbolicMatrix() const {
    requireOne();
    if (!symbolic.empty()) return io::parseSymbolic(readSource(symbolic), in());
    if (!builtin.empty()) {
      auto b = slack::specificSlackMatrix(builtin);
      if (auto* s = std::get_if<slack::SymbolicSlackMatrix>(&b)) return *s;
      return slack::symbolicSlackMatrix(std::get<slack::SlackMatrix>(b));
    }
    if (!pattern.empty()) return slack::symbolicSlackMatrix(io::parsePattern(readSource(pattern), in()));
    return slack::symbolicSlackMatrix(*numeric());
  }

  std::size_t dimension() const {
    if (d) return *d;
    if (!vertices.empty()) {
      const auto v = points();
      return source() == slack::Source::Matroid ? exact::rank(v.homogenized()) - 1 : v.dimension();
    }
    if (auto s = numeric(); s && s->hasNumericData()) return scale::inferredDimension(*s);
    throw Error(ErrorKind::BadInput, "-d is required for symbolic or pattern input");
  }
};

std::string nodeName(std::size_t node, std::size_t rows) {
  return node < rows ? "r" + std::to_string(node) : "c" + std::to_string(node - rows);
}

void printScaled(const slack::ScaledSlackMatrix& y, const scale::SpanningForest& f, io::Format format) {
  const std::size_t rows = y.base.rows();
  if (format == io::Format::Json) {
    std::string edges;
    for (const auto& e : f.edges) {
      if (!edges.empty()) edges += ",";
      edges += "[\"x" + std::to_string(e.var) + "\",\"" + nodeName(e.source, rows) + "\",\"" +
               nodeName(e.target, rows) + "\"]";
    }
    std::string m = io::formatSymbolic(y.resolved(), io::Format::Json);
    m.pop_back();
    std::cout << "{\"matrix\":" << m << ",\"forest\":[" << edges << "]}\n";
    return;
  }
  std::cout << io::formatSymbolic(y.resolved(), io::Format::Text);
  std::cout << "forest:";
  for (const auto& e : f.edges)
    std::cout << " x" << e.var << ":" << nodeName(e.source, rows) << "->" << nodeName(e.target, rows);
  std::cout << "\n";
}

std::pair<slack::ScaledSlackMatrix, scale::SpanningForest> scaled(const slack::SymbolicSlackMatrix& s,
                                                                  const std::string& ones) {
  if (ones.empty()) return scale::setOnesForest(s);
  const auto vars = parseIndexList(ones);
  return {scale::setOnes(s, vars), scale::forestFromEdges(s, vars)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slack matrices, slack ideals and realization certificates"};
  app.require_subcommand(1);
  Inputs in;
  std::string ones, flag, columns, cofacets, method = "circuits", gale, idealFile, name;
  std::size_t variable = 0, rows = 0, cols = 0;

  auto* cmdSlack = app.add_subcommand("slack-matrix", "numeric slack matrix of a point configuration");
  in.addSources(cmdSlack);
  auto* cmdSymbolic = app.add_subcommand("symbolic", "symbolic slack matrix");
  in.addSources(cmdSymbolic);
  auto* cmdIdeal = app.add_subcommand("ideal", "slack ideal");
  in.addSources(cmdIdeal);
  in.addDimension(cmdIdeal);
  auto* cmdGale = app.add_subcommand("gale", "Gale transform of a point configuration");
  cmdGale->add_option("--vertices", in.vertices, "point coordinates")->required();
  in.addFormats(cmdGale);
  auto* cmdGaleSlack = app.add_subcommand("gale-slack", "slack matrix from a Gale transform");
  cmdGaleSlack->add_option("--gale", gale, "Gale matrix, columns indexed by points")->required();
  cmdGaleSlack->add_option("--method", method, "circuits or plucker")->check(CLI::IsMember({"circuits", "plucker"}));
  cmdGaleSlack->add_option("--cofacets", cofacets, "semicolon-separated index lists, e.g. '0,1;2,3'");
  in.addFormats(cmdGaleSlack);
  auto* cmdScale = app.add_subcommand("scale", "set a spanning forest of variables to 1");
  in.addSources(cmdScale);
  cmdScale->add_option("--ones", ones, "variables to set to 1 (default: a BFS forest)");
  auto* cmdDehom = app.add_subcommand("dehomogenize", "slack ideal of the scaled matrix");
  in.addSources(cmdDehom);
  in.addDimension(cmdDehom);
  cmdDehom->add_option("--ones", ones, "variables to set to 1");
  auto* cmdRehom = app.add_subcommand("rehomogenize", "rehomogenized dehomogenized ideal");
  in.addSources(cmdRehom);
  in.addDimension(cmdRehom);
  cmdRehom->add_option("--ones", ones, "variables to set to 1");
  auto* cmdReduce = app.add_subcommand("reduce", "reduced slack matrix");
  in.addSources(cmdReduce);
  in.addDimension(cmdReduce);
  cmdReduce->add_option("--flag-indices", flag, "columns containing a flag, e.g. 0..12");
  auto* cmdFlag = app.add_subcommand("contains-flag", "whether the given columns contain a flag");
  in.addSources(cmdFlag);
  cmdFlag->add_option("--columns", columns, "column indices, e.g. 0,1,2")->required();
  auto* cmdGraphic = app.add_subcommand("graphic-ideal", "toric ideal of the non-incidence graph");
  in.addSources(cmdGraphic);
  auto* cmdCert = app.add_subcommand("certificate", "irrationality certificate for one variable");
  in.addSources(cmdCert);
  in.addDimension(cmdCert);
  cmdCert->add_option("--ideal", idealFile, "ideal JSON instead of a matrix source");
  cmdCert->add_option("--ones", ones, "variables to set to 1 before computing the ideal");
  cmdCert->add_option("--variable", variable, "variable index to keep")->required();
  auto* cmdBuiltin = app.add_subcommand("builtin", "print a built-in matrix");
  cmdBuiltin->add_option("name", name, "square, prism, perles-reduced, sphere1963-reduced")->required();
  in.addFormats(cmdBuiltin);
  auto* cmdCount = app.add_subcommand("count-minors", "number of (d+2)-minors");
  in.addSources(cmdCount);
  in.addDimension(cmdCount);
  cmdCount->add_option("--rows", rows, "row count");
  cmdCount->add_option("--cols", cols, "column count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const io::Format out = in.out();
    if (cmdSlack->parsed()) {
      const auto s = in.numeric();
      if (!s) throw Error(ErrorKind::NeedsNumericData, "source has no numeric slack matrix");
      std::cout << io::formatMatrix(s->entries, out);
    } else if (cmdSymbolic->parsed()) {
      std::cout << io::formatSymbolic(in.symbolicMatrix(), out);
    } else if (cmdIdeal->parsed()) {
      std::cout << io::formatIdeal(slack::slackIdeal(in.dimension(), in.symbolicMatrix()), out);
    } else if (cmdGale->parsed()) {
      std::cout << io::formatMatrix(geom::galeTransform(in.points()).matrix, out);
    } else if (cmdGaleSlack->parsed()) {
      const geom::GaleTransform g{io::parseMatrix(readSource(gale), in.in())};
      if (method == "circuits") {
        std::cout << io::formatMatrix(slack::slackFromGaleCircuits(g).entries, out);
      } else {
        std::vector<std::vector<std::size_t>> sets;
        std::stringstream ss(cofacets);
        for (std::string part; std::getline(ss, part, ';');) sets.push_back(parseIndexList(part));
        if (cofacets.empty())
          for (const auto& c : geom::positiveCircuits(g)) sets.push_back(c.support);
        std::cout << io::formatMatrix(slack::slackFromGalePlucker(g, sets).entries, out);
      }
    } else if (cmdScale->parsed()) {
      const auto [y, f] = scaled(in.symbolicMatrix(), ones);
      printScaled(y, f, out);
    } else if (cmdDehom->parsed()) {
      const auto [y, f] = scaled(in.symbolicMatrix(), ones);
      std::cout << io::formatIdeal(scale::dehomogenizedIdeal(in.dimension(), y), out);
    } else if (cmdRehom->parsed()) {
      const auto [y, f] = scaled(in.symbolicMatrix(), ones);
      std::cout << io::formatIdeal(scale::rehomogenizeIdeal(in.dimension(), y, f), out);
    } else if (cmdReduce->parsed()) {
      scale::ReducedSlackMatrix r;
      const std::optional<std::vector<std::size_t>> f =
          flag.empty() ? std::nullopt : std::optional(parseIndexList(flag));
      const auto s = in.numeric();
      if (s && s->hasNumericData()) {
        r = scale::reducedSlackMatrix(in.dimension(), *s, f);
      } else {
        if (!f) throw Error(ErrorKind::NeedsNumericData, "--flag-indices is required without numeric data");
        r = scale::reducedSlackMatrix(in.dimension(), in.symbolicMatrix(), *f);
      }
      std::cout << io::formatSymbolic(r.matrix, out);
    } else if (cmdFlag->parsed()) {
      const auto s = in.numeric();
      if (!s) throw Error(ErrorKind::NeedsNumericData, "flag checks need a numeric slack matrix");
      std::cout << (scale::containsFlag(parseIndexList(columns), *s) ? "true" : "false") << "\n";
    } else if (cmdGraphic->parsed()) {
      std::cout << io::formatIdeal(slack::graphicIdeal(in.symbolicMatrix()), out);
    } else if (cmdCert->parsed()) {
      gb::Ideal ideal;
      if (!idealFile.empty()) {
        ideal = io::parseIdeal(readSource(idealFile));
      } else {
        const auto [y, f] = scaled(in.symbolicMatrix(), ones);
        ideal = scale::dehomogenizedIdeal(in.dimension(), y);
      }
      if (variable >= ideal.nvars()) throw Error(ErrorKind::BadInput, "variable index outside the ring");
      std::cout << io::formatCertificate(scale::irrationalityCertificate(ideal, variable));
    } else if (cmdBuiltin->parsed()) {
      const auto b = slack::specificSlackMatrix(name);
      if (const auto* s = std::get_if<slack::SlackMatrix>(&b))
        std::cout << io::formatMatrix(s->entries, out);
      else
        std::cout << io::formatSymbolic(std::get<slack::SymbolicSlackMatrix>(b), out);
    } else if (cmdCount->parsed()) {
      if (rows == 0 && cols == 0) {
        const auto s = in.symbolicMatrix();
        rows = s.rows();
        cols = s.cols();
      }
      if (!in.d) throw Error(ErrorKind::BadInput, "-d is required");
      std::cout << slack::countMinors(*in.d, rows, cols).get_str() << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.isInputError() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
