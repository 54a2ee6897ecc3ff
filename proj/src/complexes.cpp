#include "wqm/complexes.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace wqm {

FiniteGraph make_path_graph(int edges) {
  if (edges < 0) throw InputError("path length must be nonnegative");
  FiniteGraph g(edges + 1);
  for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

FiniteGraph make_cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  FiniteGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

FiniteGraph make_complete_graph(int n) {
  FiniteGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

FiniteGraph make_grid_graph(int width, int height) {
  if (width < 1 || height < 1) throw InputError("grid sides must be positive");
  FiniteGraph g(width * height);
  const auto id = [width](int i, int j) { return j * width + i; };
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      if (i + 1 < width) g.add_edge(id(i, j), id(i + 1, j));
      if (j + 1 < height) g.add_edge(id(i, j), id(i, j + 1));
    }
  }
  return g;
}

FiniteGraph make_binary_tree(int depth) {
  if (depth < 0) throw InputError("tree depth must be nonnegative");
  const int n = (1 << (depth + 1)) - 1;
  FiniteGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, (v - 1) / 2);
  return g;
}

FiniteGraph make_staircase_graph(int k) {
  if (k < 1) throw InputError("staircase steps must be positive");
  // vertices (i,j), 0 <= j <= i <= k, numbered row by row
  std::map<std::pair<int, int>, int> id;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= i; ++j) id[{i, j}] = static_cast<int>(id.size());
  }
  FiniteGraph g(static_cast<int>(id.size()));
  for (const auto& [ij, v] : id) {
    const auto [i, j] = ij;
    if (id.count({i + 1, j})) g.add_edge(v, id[{i + 1, j}]);
    if (j + 1 <= i && id.count({i, j + 1})) g.add_edge(v, id[{i, j + 1}]);
  }
  return g;
}

namespace {

std::vector<std::string> grid_names(int width, int height) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(width) * height);
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return names;
}

std::vector<std::string> staircase_names(int k) {
  std::vector<std::string> names;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= i; ++j) {
      names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return names;
}

}  // namespace

FiniteGraph build_graph(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const auto as_int = [&](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw InputError("bad numeric argument in complex spec '" + spec + "'");
    }
  };
  if (kind == "path") return make_path_graph(as_int(arg));
  if (kind == "cycle") return make_cycle_graph(as_int(arg));
  if (kind == "tree") return make_binary_tree(as_int(arg));
  if (kind == "staircase") return make_staircase_graph(as_int(arg));
  if (kind == "complete") return make_complete_graph(as_int(arg));
  if (kind == "grid") {
    const auto x = arg.find('x');
    if (x == std::string::npos) throw InputError("grid spec must look like grid:WxH");
    return make_grid_graph(as_int(arg.substr(0, x)), as_int(arg.substr(x + 1)));
  }
  throw InputError("unknown complex spec '" + spec + "'");
}

ComplexInstance build_complex(const std::string& spec) {
  FiniteGraph g = build_graph(spec);
  std::vector<std::string> names;
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (kind == "grid") {
    const std::string arg = spec.substr(colon + 1);
    const auto x = arg.find('x');
    names = grid_names(std::stoi(arg.substr(0, x)), std::stoi(arg.substr(x + 1)));
  } else if (kind == "staircase") {
    names = staircase_names(std::stoi(spec.substr(colon + 1)));
  }
  ComplexInstance out;
  out.spec = spec;
  out.complex = std::make_shared<const MedianComplex>(
      MedianComplex::build(std::move(g), std::move(names)));
  return out;
}

const std::vector<std::string>& builtin_median_specs() {
  static const std::vector<std::string> specs = {
      "path:1", "path:3",      "tree:2",      "cycle:4",
      "grid:3x3", "grid:4x4",  "staircase:2", "staircase:3"};
  return specs;
}

ComplexInstance load_graph_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad graph JSON: ") + e.what());
  }
  if (!doc.contains("vertices") || !doc.contains("edges")) {
    throw InputError("graph JSON needs 'vertices' and 'edges'");
  }
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (const auto& v : doc["vertices"]) {
    const std::string name = v.get<std::string>();
    if (index.count(name)) throw InputError("duplicate vertex name '" + name + "'");
    index[name] = static_cast<int>(names.size());
    names.push_back(name);
  }
  FiniteGraph g(static_cast<int>(names.size()));
  const auto vertex_of = [&](const std::string& name) {
    const auto it = index.find(name);
    if (it == index.end()) throw InputError("unknown vertex name '" + name + "'");
    return it->second;
  };
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("edges must be pairs");
    g.add_edge(vertex_of(e[0].get<std::string>()), vertex_of(e[1].get<std::string>()));
  }

  GraphAction<int> action;
  if (doc.contains("generators")) {
    for (const auto& gen : doc["generators"]) {
      const std::string gname = gen.at("name").get<std::string>();
      std::vector<int> perm(names.size(), -1);
      for (const auto& [from, to] : gen.at("permutation").items()) {
        perm[static_cast<std::size_t>(vertex_of(from))] = vertex_of(to.get<std::string>());
      }
      std::vector<bool> hit(names.size(), false);
      for (int img : perm) {
        if (img < 0 || hit[static_cast<std::size_t>(img)]) {
          throw InputError("generator '" + gname + "' is not a permutation");
        }
        hit[static_cast<std::size_t>(img)] = true;
      }
      for (const auto& [u, v] : g.edges()) {
        if (!g.adjacent(perm[static_cast<std::size_t>(u)],
                        perm[static_cast<std::size_t>(v)])) {
          throw InputError("generator '" + gname + "' is not a graph automorphism");
        }
      }
      action.generators.push_back(
          {gname, [perm](const int& v) { return perm.at(static_cast<std::size_t>(v)); }});
    }
  }

  ComplexInstance out;
  out.spec = "json";
  out.complex = std::make_shared<const MedianComplex>(
      MedianComplex::build(std::move(g), names));
  out.action = std::move(action);
  return out;
}

ComplexInstance load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_graph_json(buffer.str());
}

PathFamily<int> finite_geodesic_family(std::shared_ptr<const FiniteGraph> graph,
                                       int qmp_constant) {
  return PathFamily<int>(
      "finite-geodesics",
      [graph](const int& x, const int& y) { return graph->all_geodesics(x, y); },
      qmp_constant);
}

CoherentPair<int> finite_geodesic_pair(std::shared_ptr<const FiniteGraph> graph,
                                       int ell, int qmp_constant) {
  return CoherentPair<int>{finite_geodesic_family(std::move(graph), qmp_constant),
                           FragmentCorrespondence<int>::identity_family(ell)};
}

std::vector<int> vertex_pool(const FiniteGraph& graph) {
  std::vector<int> out(static_cast<std::size_t>(graph.num_vertices()));
  for (int v = 0; v < graph.num_vertices(); ++v) out[static_cast<std::size_t>(v)] = v;
  return out;
}

}  // namespace wqm
