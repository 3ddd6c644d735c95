#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "tangles/connectivity.hpp"
#include "tangles/tangle.hpp"
#include "tangles/tree_decomposition.hpp"

namespace tangles {

enum class InputKind { automatic, graph, matroid, table };

InputKind parse_input_kind(const std::string& name);

/// `u v` per line; element i is the i-th edge line. `#` starts a comment.
ConnectivitySystem parse_graph(std::istream& in);
/// `matroid gf<p> <rows> <cols>` followed by the rows.
ConnectivitySystem parse_matroid(std::istream& in);
/// `table <n>` followed by all 2^n lines `<bitmask-hex> <value>`. The table is
/// checked for symmetry and submodularity before it is accepted.
ConnectivitySystem parse_table(std::istream& in);

/// Reads a file of the given kind; `automatic` picks by the first keyword.
/// Throws InputError on any parse or validation problem.
ConnectivitySystem load_system(const std::filesystem::path& path, InputKind kind = InputKind::automatic);

nlohmann::ordered_json catalog_to_json(const TangleCatalog& catalog);

nlohmann::ordered_json td_to_json(const ConnectivitySystem& sys, const TreeDecomposition& td);

/// Reads a decomposition written by td_to_json. Orders are recomputed from
/// the system. Throws InputError on schema problems or an element-count mismatch.
TreeDecomposition td_from_json(const nlohmann::json& doc, const ConnectivitySystem& sys);

std::string td_to_dot(const ConnectivitySystem& sys, const TreeDecomposition& td);

}  // namespace tangles
