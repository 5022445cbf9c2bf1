#include "geogrow/group_io.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace geogrow {

namespace {

using nlohmann::json;

Int json_int(const json& j) {
  require(j.is_number_integer(), ErrorKind::config,
          "expected an integer in group description");
  return Int(j.get<long long>());
}

MatZ parse_matrix(const json& j, int rows, int cols) {
  require(j.is_array() && static_cast<int>(j.size()) == rows,
          ErrorKind::config, "matrix has wrong row count");
  MatZ m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    require(row.is_array() && static_cast<int>(row.size()) == cols,
            ErrorKind::config, "matrix has wrong column count");
    for (int c = 0; c < cols; ++c) m(r, c) = json_int(row[c]);
  }
  return m;
}

VecZ parse_vector(const json& j, int rank) {
  require(j.is_array() && static_cast<int>(j.size()) == rank,
          ErrorKind::config, "vector has wrong length");
  VecZ v(rank);
  for (int i = 0; i < rank; ++i) v[i] = json_int(j[i]);
  return v;
}

json matrix_to_json(const MatZ& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(static_cast<long long>(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

GroupDescription parse_group_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::config, std::string("invalid JSON: ") + e.what());
  }
  require(j.is_object(), ErrorKind::config, "group description must be an object");
  require(j.contains("kind") && j["kind"].is_string(), ErrorKind::config,
          "missing kind");

  GroupDescription desc;
  GroupPresentation& pres = desc.pres;
  const std::string kind = j["kind"].get<std::string>();
  if (j.contains("name")) pres.name = j["name"].get<std::string>();

  if (kind == "va") {
    pres.kind = GroupKind::va;
    require(j.contains("rank"), ErrorKind::config, "missing rank");
    pres.rank = j["rank"].get<int>();
    require(pres.rank >= 1 && pres.rank <= 16, ErrorKind::config,
            "rank out of range");
    if (j.contains("f_table")) {
      for (const auto& row : j["f_table"]) {
        std::vector<int> r;
        for (const auto& v : row) r.push_back(v.get<int>());
        pres.f_table.push_back(r);
      }
      require(j.contains("f_action"), ErrorKind::config, "missing f_action");
      for (const auto& m : j["f_action"])
        pres.f_action.push_back(parse_matrix(m, pres.rank, pres.rank));
    } else {
      pres.f_table = {{0}};
      pres.f_action = {MatZ::Identity(pres.rank, pres.rank)};
    }
    // Derive inverses from the table.
    const int n = pres.f_order();
    pres.f_inv.assign(n, -1);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (static_cast<int>(pres.f_table[i].size()) == n &&
            pres.f_table[i][k] == 0) {
          pres.f_inv[i] = k;
          break;
        }
    for (int i = 0; i < n; ++i)
      require(pres.f_inv[i] >= 0, ErrorKind::config,
              "f_table row has no inverse");
  } else if (kind == "matrix") {
    pres.kind = GroupKind::matrix;
    require(j.contains("dimension"), ErrorKind::config, "missing dimension");
    pres.dim = j["dimension"].get<int>();
    require(pres.dim >= 1 && pres.dim <= 8, ErrorKind::config,
            "dimension out of range");
    pres.projective = j.value("projective", false);
  } else {
    throw Error(ErrorKind::config, "unknown kind: " + kind);
  }
  pres.validate();

  require(j.contains("generators") && j["generators"].is_array(),
          ErrorKind::config, "missing generators");
  for (const auto& g : j["generators"]) {
    Letter l;
    require(g.contains("name"), ErrorKind::config, "generator missing name");
    l.name = g["name"].get<std::string>();
    l.weight = g.value("weight", 1);
    if (pres.kind == GroupKind::va) {
      require(g.contains("vector"), ErrorKind::config,
              "generator missing vector");
      VaElement e;
      e.v = parse_vector(g["vector"], pres.rank);
      e.f = g.value("f", 0);
      require(e.f >= 0 && e.f < pres.f_order(), ErrorKind::config,
              "generator f index out of range");
      l.value = GroupElement{e};
    } else {
      require(g.contains("matrix"), ErrorKind::config,
              "generator missing matrix");
      MatElement e;
      e.m = parse_matrix(g["matrix"], pres.dim, pres.dim);
      l.value = GroupElement{e};
      if (pres.projective) {
        // Normalise through a round trip so stored letter values match the
        // canonical sign convention.
        l.value = pres.inverse(pres.inverse(l.value));
      }
    }
    desc.gens.letters.push_back(l);
  }
  desc.gens.inverse_closed = j.value("inverse_closed", false);
  validate_generating_set(pres, desc.gens);
  return desc;
}

GroupDescription load_group_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::config, "cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  GroupDescription desc = parse_group_json(buf.str());
  if (desc.pres.name.empty())
    desc.pres.name = std::filesystem::path(path).stem().string();
  return desc;
}

std::string group_to_json(const GroupDescription& desc) {
  json j;
  const GroupPresentation& pres = desc.pres;
  if (!pres.name.empty()) j["name"] = pres.name;
  if (pres.kind == GroupKind::va) {
    j["kind"] = "va";
    j["rank"] = pres.rank;
    if (pres.f_order() > 1) {
      json actions = json::array();
      for (const auto& m : pres.f_action) actions.push_back(matrix_to_json(m));
      j["f_action"] = actions;
      j["f_table"] = pres.f_table;
    }
  } else {
    j["kind"] = "matrix";
    j["dimension"] = pres.dim;
    j["projective"] = pres.projective;
  }
  json gens = json::array();
  for (const auto& l : desc.gens.letters) {
    json g;
    g["name"] = l.name;
    g["weight"] = l.weight;
    if (pres.kind == GroupKind::va) {
      const auto& e = std::get<VaElement>(l.value.rep);
      json vec = json::array();
      for (Eigen::Index i = 0; i < e.v.size(); ++i)
        vec.push_back(static_cast<long long>(e.v[i]));
      g["vector"] = vec;
      if (pres.f_order() > 1) g["f"] = e.f;
    } else {
      g["matrix"] = matrix_to_json(std::get<MatElement>(l.value.rep).m);
    }
    gens.push_back(g);
  }
  j["generators"] = gens;
  j["inverse_closed"] = desc.gens.inverse_closed;
  return j.dump(2) + "\n";
}

std::string data_dir() {
  if (const char* env = std::getenv("GEOGROW_DATA_DIR")) return env;
  return GEOGROW_DATA_DIR;
}

std::string resolve_group_path(const std::string& name) {
  namespace fs = std::filesystem;
  if (fs::exists(name)) return name;
  fs::path p = fs::path(data_dir()) / "groups" / (name + ".json");
  require(fs::exists(p), ErrorKind::config,
          "group not found: " + name + " (looked at " + p.string() + ")");
  return p.string();
}

}  // namespace geogrow
