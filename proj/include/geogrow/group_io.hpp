#pragma once

// JSON group descriptions.
//
// Schema (va kind):
//   {
//     "kind": "va",
//     "name": "...",                      // optional
//     "rank": 2,
//     "f_action": [[[1,0],[0,1]], ...],   // row-major matrices, [0] identity
//     "f_table": [[0,1],[1,0]],
//     "generators": [
//       {"name": "a", "vector": [1,0], "f": 0, "weight": 1}, ...
//     ],
//     "inverse_closed": true
//   }
//
// Schema (matrix kind):
//   {
//     "kind": "matrix",
//     "dimension": 2,
//     "projective": true,
//     "generators": [{"name": "s", "matrix": [[0,-1],[1,0]], "weight": 1}],
//     "inverse_closed": true
//   }
//
// Both presentation and generating set are validated on load.

#include "geogrow/group.hpp"

#include <string>
#include <utility>

namespace geogrow {

struct GroupDescription {
  GroupPresentation pres;
  GeneratingSet gens;
};

GroupDescription parse_group_json(const std::string& text);
GroupDescription load_group_file(const std::string& path);

std::string group_to_json(const GroupDescription& desc);

// Resolves a name to a file: literal path if it exists, otherwise
// "<data dir>/groups/<name>.json" where the data dir comes from the
// GEOGROW_DATA_DIR environment variable or the compiled-in default.
std::string resolve_group_path(const std::string& name);

std::string data_dir();

}  // namespace geogrow
