#include "tangles/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "tangles/errors.hpp"

namespace tangles {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-blank lines with comments removed, tokenised on whitespace.
std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail_at(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

long long parse_int(const std::string& tok, int line, int base = 10) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used, base);
  } catch (const std::exception&) {
    fail_at(line, "'" + tok + "' is not a number");
  }
  if (used != tok.size()) fail_at(line, "'" + tok + "' is not a number");
  return value;
}

std::vector<int> side_json(Side s) { return elements_of(s); }

}  // namespace

InputKind parse_input_kind(const std::string& name) {
  if (name == "graph") return InputKind::graph;
  if (name == "matroid") return InputKind::matroid;
  if (name == "table") return InputKind::table;
  if (name == "auto") return InputKind::automatic;
  throw InputError("unknown input kind '" + name + "'");
}

ConnectivitySystem parse_graph(std::istream& in) {
  EdgeList graph;
  std::map<std::string, int> vertex_ids;
  auto vertex = [&](const std::string& label) {
    auto [it, fresh] = vertex_ids.emplace(label, static_cast<int>(graph.vertex_labels.size()));
    if (fresh) graph.vertex_labels.push_back(label);
    return it->second;
  };
  for (const Line& line : read_lines(in)) {
    if (line.tokens.size() != 2) {
      fail_at(line.number, "expected an edge 'u v', found " + std::to_string(line.tokens.size()) + " token(s)");
    }
    graph.edges.emplace_back(vertex(line.tokens[0]), vertex(line.tokens[1]));
  }
  if (graph.edges.empty()) throw InputError("graph has no edges");
  if (graph.edges.size() > kMaxElements) {
    throw InputError("graph has " + std::to_string(graph.edges.size()) + " edges; at most " +
                     std::to_string(kMaxElements) + " are supported");
  }
  return ConnectivitySystem::from_graph(std::move(graph));
}

ConnectivitySystem parse_matroid(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw InputError("empty matroid file");
  const Line& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0] != "matroid" || header.tokens[1].rfind("gf", 0) != 0) {
    fail_at(header.number, "expected header 'matroid gf<p> <rows> <cols>'");
  }
  const long long prime = parse_int(header.tokens[1].substr(2), header.number);
  const long long rows = parse_int(header.tokens[2], header.number);
  const long long cols = parse_int(header.tokens[3], header.number);
  if (rows < 1 || cols < 1) fail_at(header.number, "matrix needs at least one row and one column");
  if (cols > static_cast<long long>(kMaxElements)) fail_at(header.number, "too many columns");
  if (static_cast<long long>(lines.size()) - 1 != rows) {
    throw InputError("matroid header declares " + std::to_string(rows) + " rows but the file has " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<int>> matrix;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const Line& line = lines[r];
    if (static_cast<long long>(line.tokens.size()) != cols) {
      fail_at(line.number, "expected " + std::to_string(cols) + " entries");
    }
    std::vector<int> row;
    for (const auto& tok : line.tokens) {
      const long long v = parse_int(tok, line.number);
      if (v < 0 || v >= prime) fail_at(line.number, "entry " + tok + " is not a residue mod " + std::to_string(prime));
      row.push_back(static_cast<int>(v));
    }
    matrix.push_back(std::move(row));
  }
  return ConnectivitySystem::from_matrix(PrimeFieldMatrix(static_cast<int>(prime), std::move(matrix)));
}

ConnectivitySystem parse_table(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw InputError("empty table file");
  const Line& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "table") fail_at(header.number, "expected header 'table <n>'");
  const long long n = parse_int(header.tokens[1], header.number);
  if (n < 1 || n > 20) fail_at(header.number, "table size must be between 1 and 20 elements");
  const Mask count = Mask{1} << n;
  std::vector<std::optional<int>> values(count);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) fail_at(line.number, "expected '<bitmask-hex> <value>'");
    std::string hex = line.tokens[0];
    if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex = hex.substr(2);
    const long long mask = parse_int(hex, line.number, 16);
    if (mask < 0 || static_cast<Mask>(mask) >= count) fail_at(line.number, "bitmask out of range");
    auto& slot = values[static_cast<std::size_t>(mask)];
    if (slot) fail_at(line.number, "duplicate entry for bitmask " + line.tokens[0]);
    slot = static_cast<int>(parse_int(line.tokens[1], line.number));
  }
  for (Mask m = 0; m < count; ++m) {
    if (!values[m]) {
      std::ostringstream ss;
      ss << std::hex << m;
      throw InputError("table is missing the entry for bitmask " + ss.str());
    }
  }
  auto sys = ConnectivitySystem::from_table(static_cast<std::size_t>(n), std::move(values));
  const ValidationMode mode = n <= 16 ? ValidationMode{Exhaustive{}} : ValidationMode{Sampled{100000, 0}};
  const auto report = validate_system(sys, mode);
  if (!report.ok()) throw InputError("order table rejected: " + describe(report.violations.front(), sys.ground()));
  return sys;
}

ConnectivitySystem load_system(const std::filesystem::path& path, InputKind kind) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  if (kind == InputKind::automatic) {
    std::string first;
    for (std::string raw; std::getline(in, raw);) {
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream ss(raw);
      if (ss >> first) break;
    }
    kind = first == "matroid" ? InputKind::matroid : first == "table" ? InputKind::table : InputKind::graph;
    in.clear();
    in.seekg(0);
  }
  switch (kind) {
    case InputKind::matroid: return parse_matroid(in);
    case InputKind::table: return parse_table(in);
    default: return parse_graph(in);
  }
}

nlohmann::ordered_json catalog_to_json(const TangleCatalog& catalog) {
  nlohmann::ordered_json tangles = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < catalog.tangles.size(); ++i) {
    nlohmann::ordered_json sides = nlohmann::ordered_json::array();
    for (Side s : catalog.tangles[i].small_sides) sides.push_back(side_json(s));
    nlohmann::ordered_json entry;
    entry["order"] = catalog.tangles[i].order;
    entry["small_sides"] = std::move(sides);
    entry["maximal"] = static_cast<bool>(catalog.maximal[i]);
    tangles.push_back(std::move(entry));
  }
  nlohmann::ordered_json doc;
  doc["tangles"] = std::move(tangles);
  return doc;
}

nlohmann::ordered_json td_to_json(const ConnectivitySystem& sys, const TreeDecomposition& td) {
  nlohmann::ordered_json doc;
  doc["elements"] = sys.ground().labels();
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < td.parts.size(); ++x) {
    nlohmann::ordered_json node;
    node["id"] = x;
    node["part"] = side_json(td.parts[x]);
    nodes.push_back(std::move(node));
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const TreeEdge& e : td.edges) {
    nlohmann::ordered_json edge;
    edge["u"] = e.u;
    edge["v"] = e.v;
    edge["side_u"] = side_json(e.sep.a);
    edge["order"] = sys.order(e.sep.a);
    edges.push_back(std::move(edge));
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc;
}

TreeDecomposition td_from_json(const nlohmann::json& doc, const ConnectivitySystem& sys) {
  const GroundSet& ground = sys.ground();
  auto side_from = [&](const nlohmann::json& arr) {
    if (!arr.is_array()) throw InputError("expected an array of element indices");
    Side s;
    for (const auto& v : arr) {
      if (!v.is_number_integer()) throw InputError("element index is not an integer");
      const auto e = v.get<long long>();
      if (e < 0 || e >= static_cast<long long>(ground.size())) {
        throw InputError("element index " + std::to_string(e) + " out of range");
      }
      s = s | Side::singleton(static_cast<std::size_t>(e));
    }
    return s;
  };
  try {
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("nodes") || !doc.contains("edges")) {
      throw InputError("decomposition JSON needs 'elements', 'nodes' and 'edges'");
    }
    if (doc.at("elements").size() != ground.size()) {
      throw InputError("decomposition has " + std::to_string(doc.at("elements").size()) +
                       " elements but the input has " + std::to_string(ground.size()));
    }
    TreeDecomposition td;
    const auto& nodes = doc.at("nodes");
    td.parts.assign(nodes.size(), Side{});
    std::vector<bool> filled(nodes.size(), false);
    for (const auto& node : nodes) {
      const auto id = node.at("id").get<long long>();
      if (id < 0 || id >= static_cast<long long>(nodes.size()) || filled[static_cast<std::size_t>(id)]) {
        throw InputError("node ids must be 0..N-1 without repetition");
      }
      filled[static_cast<std::size_t>(id)] = true;
      td.parts[static_cast<std::size_t>(id)] = side_from(node.at("part"));
    }
    for (const auto& edge : doc.at("edges")) {
      const auto u = edge.at("u").get<long long>();
      const auto v = edge.at("v").get<long long>();
      if (u < 0 || v < 0 || u >= static_cast<long long>(nodes.size()) || v >= static_cast<long long>(nodes.size())) {
        throw InputError("edge references an unknown node");
      }
      const Side a = side_from(edge.at("side_u"));
      td.edges.push_back(TreeEdge{static_cast<std::size_t>(u), static_cast<std::size_t>(v),
                                  Separation{a, ground.complement(a), sys.order(a)}});
    }
    return td;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed decomposition JSON: ") + e.what());
  }
}

std::string td_to_dot(const ConnectivitySystem& sys, const TreeDecomposition& td) {
  const auto& labels = sys.ground().labels();
  std::ostringstream out;
  out << "graph decomposition {\n";
  for (std::size_t x = 0; x < td.parts.size(); ++x) {
    out << "  n" << x << " [label=\"" << x << ": {";
    bool first = true;
    for (int e : elements_of(td.parts[x])) {
      out << (first ? "" : ", ") << labels[static_cast<std::size_t>(e)];
      first = false;
    }
    out << "}\"];\n";
  }
  for (const TreeEdge& e : td.edges) {
    out << "  n" << e.u << " -- n" << e.v << " [label=\"" << sys.order(e.sep.a) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tangles
