// Batch front end: builds instances, runs verification sweeps, and emits
// JSON reports (optionally rendered as plain-text tables). Exit code 0 means
// every check in the run passed.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wqm/brooks_delta.hpp"
#include "wqm/cayley_tree.hpp"
#include "wqm/complexes.hpp"
#include "wqm/median.hpp"
#include "wqm/sampling.hpp"
#include "wqm/vanishing.hpp"

using nlohmann::json;
using namespace wqm;

namespace {

constexpr const char* kTriangleBoundFormula = "3*(R+1)*c*|W|inf";

struct Output {
  json report;
  bool pass = true;

  void finish() { report["status"] = pass ? "PASS" : "FAIL"; }
};

json condition_json(const ConditionResult& c) {
  json j{{"condition", c.condition}, {"status", c.pass ? "PASS" : "FAIL"}};
  if (!c.pass) j["counterexample"] = c.counterexample;
  return j;
}

void render_table(const json& node, int indent) {
  for (const auto& [key, value] : node.items()) {
    std::cout << std::string(static_cast<std::size_t>(indent), ' ') << key;
    if (value.is_object()) {
      std::cout << ":\n";
      render_table(value, indent + 2);
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      std::cout << ":\n";
      for (const auto& item : value) render_table(item, indent + 2);
    } else {
      std::cout << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
  }
}

void emit(const Output& out, const std::string& output_path, bool table) {
  if (!output_path.empty()) {
    std::ofstream f(output_path);
    if (!f) throw InputError("cannot write to '" + output_path + "'");
    f << out.report.dump(2) << "\n";
  }
  if (table) {
    render_table(out.report, 0);
  } else {
    std::cout << out.report.dump(2) << "\n";
  }
}

DeltaDecomposition delta_by_name(const Alphabet& alpha, const std::string& name) {
  if (name == "letters") return DeltaDecomposition::letters(alpha);
  if (name == "syllables") return DeltaDecomposition::syllables(alpha);
  throw InputError("unknown decomposition '" + name + "' (try letters, syllables)");
}

PieceWeight lambda_from_json(const Alphabet& alpha, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad lambda JSON: ") + e.what());
  }
  std::vector<std::pair<ReducedWord, double>> values;
  for (const auto& [piece, value] : doc.items()) {
    values.emplace_back(parse_word(alpha, piece), value.get<double>());
  }
  return PieceWeight::from_values(values);
}

// "brooks:WORD" (the degree-2 coboundary class of the counting form) or
// "table:FILE" (rows of word tuples and values) or "zero:DEGREE".
Cochain<ReducedWord> zeta_from_spec(const Alphabet& alpha, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "brooks") {
    return hat_coboundary(brooks_group_qm(alpha, parse_word(alpha, arg)));
  }
  if (kind == "zero") return zero_cochain<ReducedWord>(std::stoi(arg));
  if (kind == "table") {
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open table file '" + arg + "'");
    json doc;
    in >> doc;
    const int degree = doc.at("degree").get<int>();
    std::vector<std::pair<std::vector<ReducedWord>, double>> rows;
    for (const auto& row : doc.at("rows")) {
      std::vector<ReducedWord> tuple;
      for (const auto& word : row.at(0)) {
        tuple.push_back(parse_word(alpha, word.get<std::string>()));
      }
      rows.emplace_back(std::move(tuple), row.at(1).get<double>());
    }
    return table_cochain(degree, rows);
  }
  throw InputError("unknown cochain spec '" + spec +
                   "' (try brooks:WORD, table:FILE or zero:DEGREE)");
}

json primitive_cert_json(const PrimitiveCertificate<ReducedWord>& cert) {
  json j{{"side", cert.side},
              {"status", cert.pass ? "PASS" : "FAIL"},
              {"max_coboundary_residual", cert.max_coboundary_residual},
              {"max_triangle_gap", cert.max_triangle_gap},
              {"sampled_norm", cert.sampled_norm},
              {"sampled_zeta_norm", cert.sampled_zeta_norm},
              {"zeta_cocycle_residual", cert.zeta_cocycle_residual},
              {"bound",
               {{"formula", std::string(kTriangleBoundFormula) + "*|zeta|inf"},
                {"scale", cert.bound_scale},
                {"declared_zeta_norm", cert.declared_zeta_norm},
                {"value", cert.analytic_bound}}},
              {"samples", cert.sample_count},
              {"seed", cert.seed},
              {"tolerance", cert.tolerance}};
  if (!cert.pass) j["failure"] = cert.failure;
  return j;
}

struct CommonFlags {
  int rank = 2;
  int radius = 3;
  int samples = 10000;
  std::uint64_t seed = 1;
  double tolerance = 0.0;
  std::string output_path;
  bool table = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool sampling) {
  cmd->add_option("--rank", flags.rank, "free group rank")->check(CLI::Range(1, 26));
  cmd->add_option("--radius", flags.radius, "ball radius for sweeps");
  if (sampling) {
    cmd->add_option("--samples", flags.samples, "random tuples per check");
    cmd->add_option("--seed", flags.seed, "random seed (recorded in the report)");
    cmd->add_option("--tolerance", flags.tolerance,
                    "residual tolerance (0 = exact)");
  }
  cmd->add_option("--output", flags.output_path, "write the JSON report here");
  cmd->add_flag("--format-table,--table", flags.table,
                "render a plain-text table instead of JSON");
}

Output run_defect(const CommonFlags& flags, const std::string& brooks_word,
                  const std::string& delta_name, const std::string& lambda_text) {
  const Alphabet alpha(flags.rank);
  Output out;
  out.report["command"] = "defect";
  out.report["config"] = {{"radius", flags.radius}, {"rank", flags.rank}};
  const auto pool = ball(alpha, flags.radius);
  const auto count =
      static_cast<long long>(pool.size()) * static_cast<long long>(pool.size()) *
      static_cast<long long>(pool.size());

  if (!brooks_word.empty()) {
    const ReducedWord omega = parse_word(alpha, brooks_word);
    const auto weight = brooks_weight(omega);
    const auto f = weight_qm(weight, brooks_pair(omega));
    const long long defect = defect_over_points(f, pool);
    out.report["config"]["instance"] = "brooks:" + brooks_word;
    out.report["result"] = {{"defect", defect},
                            {"triples", count},
                            {"bound",
                             {{"formula", kTriangleBoundFormula},
                              {"R", 1},
                              {"c", weight.finiteness_c()},
                              {"value", f.defect_bound}}}};
    out.pass = static_cast<double>(defect) <= f.defect_bound;
  } else if (!delta_name.empty()) {
    const Alphabet a2(flags.rank);
    const auto delta = delta_by_name(a2, delta_name);
    const auto lambda = lambda_from_json(a2, lambda_text.empty() ? "{}" : lambda_text);
    const auto qm = delta_qm(lambda, delta);
    const double defect = defect_over_points(qm.as_action, pool);
    out.report["config"]["instance"] = "delta:" + delta_name;
    out.report["result"] = {{"defect", defect},
                            {"triples", count},
                            {"bound",
                             {{"formula", kTriangleBoundFormula},
                              {"R", delta.declared_r()},
                              {"c", 2},
                              {"value", qm.direct.defect_bound}}}};
    out.pass = defect <= qm.direct.defect_bound + 1e-12;
  } else {
    throw InputError("defect needs --brooks or --delta");
  }
  out.finish();
  return out;
}

Output run_cup(const CommonFlags& flags, const std::string& brooks_word,
               const std::string& zeta_spec, const std::string& side) {
  const Alphabet alpha(flags.rank);
  const ReducedWord omega = parse_word(alpha, brooks_word);
  const auto weight = to_real(brooks_weight(omega));
  const auto pair = brooks_pair(omega);
  const auto zeta = zeta_from_spec(alpha, zeta_spec);
  const auto pool = ball(alpha, flags.radius);
  CertificateOptions options{flags.samples, flags.seed, flags.tolerance};

  Output out;
  out.report["command"] = "cup";
  out.report["config"] = {{"weight", "brooks:" + brooks_word},
                          {"zeta", zeta_spec},
                          {"radius", flags.radius},
                          {"rank", flags.rank},
                          {"side", side}};
  json certs = json::array();
  if (side == "left" || side == "both") {
    const auto cert = cup_primitive_left(weight, pair, zeta, pool, options);
    certs.push_back(primitive_cert_json(cert));
    out.pass = out.pass && cert.pass;
  }
  if (side == "right" || side == "both") {
    const auto cert = cup_primitive_right(weight, pair, zeta, pool, options);
    certs.push_back(primitive_cert_json(cert));
    out.pass = out.pass && cert.pass;
  }
  out.report["certificates"] = certs;
  out.finish();
  return out;
}

Output run_massey(const CommonFlags& flags, const std::string& brooks_word,
                  const std::string& zeta1_spec, const std::string& zeta2_spec) {
  const Alphabet alpha(flags.rank);
  const ReducedWord omega = parse_word(alpha, brooks_word);
  const auto weight = to_real(brooks_weight(omega));
  const auto pair = brooks_pair(omega);
  const auto zeta1 = zeta_from_spec(alpha, zeta1_spec);
  const auto zeta2 = zeta_from_spec(alpha, zeta2_spec);
  const auto pool = ball(alpha, flags.radius);
  CertificateOptions options{flags.samples, flags.seed, flags.tolerance};
  const auto cert = massey_witness(weight, pair, zeta1, zeta2, pool, options);

  Output out;
  out.pass = cert.pass;
  out.report["command"] = "massey";
  out.report["config"] = {{"weight", "brooks:" + brooks_word},
                          {"zeta1", zeta1_spec},
                          {"zeta2", zeta2_spec},
                          {"radius", flags.radius},
                          {"rank", flags.rank}};
  json cert_json = {
      {"status", cert.pass ? "PASS" : "FAIL"},
      {"degrees", {cert.n, cert.m}},
      {"max_kappa_identity_residual", cert.max_kappa_identity_residual},
      {"max_coboundary_residual", cert.max_coboundary_residual},
      {"max_leibniz_residual", cert.max_leibniz_residual},
      {"max_triangle_gap", cert.max_triangle_gap},
      {"max_beta1_residual", cert.max_beta1_residual},
      {"max_beta2_residual", cert.max_beta2_residual},
      {"sampled_norm", cert.sampled_norm},
      {"bound",
       {{"formula", std::string(kTriangleBoundFormula) + "*|zeta1|inf*|zeta2|inf"},
        {"scale", cert.bound_scale},
        {"value", cert.analytic_bound}}},
      {"samples", cert.sample_count},
      {"seed", cert.seed},
      {"tolerance", cert.tolerance}};
  if (!cert.pass) cert_json["failure"] = cert.failure;
  out.report["certificate"] = std::move(cert_json);
  out.finish();
  return out;
}

Output run_verify_coherence(const CommonFlags& flags, bool tree,
                            const std::string& delta_name,
                            const std::string& complex_spec, int ell, int pairs) {
  Output out;
  out.report["command"] = "verify-coherence";
  CoherenceReport report;
  if (tree || !delta_name.empty()) {
    const Alphabet alpha(flags.rank);
    const auto pair = tree ? tree_coherent_pair(ell)
                           : delta_pair(delta_by_name(alpha, delta_name));
    out.report["config"] = {{"family", tree ? "tree-geodesics" : "delta:" + delta_name},
                            {"radius", flags.radius},
                            {"pairs", pairs},
                            {"seed", flags.seed},
                            {"ell", ell}};
    Rng rng(flags.seed);
    const auto pool = ball(alpha, flags.radius);
    std::vector<std::pair<ReducedWord, ReducedWord>> sample;
    for (const auto& t : sample_tuples(pool, 2, pairs, rng)) {
      sample.emplace_back(t[0], t[1]);
    }
    const auto fmt = [&alpha](const ReducedWord& v) { return format_word(alpha, v); };
    report = verify_coherence(pair, left_translation_action(alpha), sample, fmt);
  } else if (!complex_spec.empty()) {
    const auto inst = build_complex(complex_spec);
    const auto pair = median_geodesic_pair(inst.complex, ell);
    out.report["config"] = {{"family", "median-geodesics"},
                            {"complex", complex_spec},
                            {"ell", ell}};
    std::vector<std::pair<int, int>> sample;
    for (int x = 0; x < inst.complex->graph().num_vertices(); ++x) {
      for (int y = 0; y < inst.complex->graph().num_vertices(); ++y) {
        sample.emplace_back(x, y);
      }
    }
    const auto fmt = [cx = inst.complex](const int& v) { return cx->vertex_name(v); };
    report = verify_coherence(pair, inst.action, sample, fmt);
  } else {
    throw InputError("verify-coherence needs --tree, --delta or --complex");
  }
  json conditions = json::array();
  for (const auto& c : report.conditions) conditions.push_back(condition_json(c));
  out.report["conditions"] = conditions;
  out.pass = report.all_pass();
  out.finish();
  return out;
}

Output run_verify_weight(const CommonFlags& flags, const std::string& brooks_word,
                         const std::string& delta_name, const std::string& lambda_text,
                         const std::string& complex_spec, int ell, int pairs) {
  Output out;
  out.report["command"] = "verify-weight";
  const auto summarize = [&out](const WeightReport& report) {
    json properties = json::array();
    for (const auto& c : report.properties) properties.push_back(condition_json(c));
    out.report["properties"] = properties;
    out.report["max_contained_support"] = report.max_contained_support;
    out.pass = report.all_pass();
  };

  if (!brooks_word.empty() || !delta_name.empty()) {
    const Alphabet alpha(flags.rank);
    Rng rng(flags.seed);
    const auto pool = ball(alpha, flags.radius);
    WeightSamples<ReducedWord> samples;

    if (!brooks_word.empty()) {
      const ReducedWord omega = parse_word(alpha, brooks_word);
      const auto weight = brooks_weight(omega);
      const auto pair = brooks_pair(omega);
      out.report["config"] = {{"instance", "brooks:" + brooks_word},
                              {"radius", flags.radius},
                              {"pairs", pairs},
                              {"seed", flags.seed}};
      for (const auto& t : sample_tuples(pool, 2, pairs, rng)) {
        samples.vertex_pairs.emplace_back(t[0], t[1]);
        if (t[0] == t[1]) continue;
        const auto p = tree_geodesic(t[0], t[1]);
        for (const auto& a : fragments(p, weight.ell())) {
          samples.tuples.push_back(a.edges);
          samples.tuples.push_back(reversed_tuple(a.edges));
        }
      }
      out.report["declared_c"] = weight.finiteness_c();
      summarize(verify_weight(weight, pair, left_translation_action(alpha), samples));
    } else {
      const auto delta = delta_by_name(alpha, delta_name);
      const auto lambda = lambda_from_json(alpha, lambda_text.empty() ? "{}" : lambda_text);
      const auto weight = delta_weight(lambda, delta);
      const auto pair = delta_pair(delta);
      out.report["config"] = {{"instance", "delta:" + delta_name},
                              {"radius", flags.radius},
                              {"pairs", pairs},
                              {"seed", flags.seed}};
      for (const auto& t : sample_tuples(pool, 2, pairs, rng)) {
        samples.vertex_pairs.emplace_back(t[0], t[1]);
        if (t[0] == t[1]) continue;
        const auto p = pair.family.first_path(t[0], t[1]);
        for (const auto& a : fragments(p, 1)) {
          samples.tuples.push_back(a.edges);
          samples.tuples.push_back(reversed_tuple(a.edges));
        }
      }
      out.report["declared_c"] = weight.finiteness_c();
      summarize(verify_weight(weight, pair, left_translation_action(alpha), samples));
    }
  } else if (!complex_spec.empty()) {
    const auto inst = build_complex(complex_spec);
    const auto segs = all_segments(*inst.complex, ell);
    if (segs.empty()) throw InputError("no chains of length " + std::to_string(ell));
    out.report["config"] = {{"instance", complex_spec}, {"ell", ell}};
    out.report["segments_checked"] = segs.size();
    bool all = true;
    long long worst_support = 0;
    json per_segment = json::array();
    for (const auto& s : segs) {
      const auto mw = median_weight(inst.complex, s, inst.action);
      WeightSamples<int> samples;
      const int n = inst.complex->graph().num_vertices();
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          samples.vertex_pairs.emplace_back(x, y);
          if (x == y) continue;
          for (const auto& p : inst.complex->graph().all_geodesics(x, y)) {
            for (const auto& a : fragments(p, ell)) {
              samples.tuples.push_back(a.edges);
              samples.tuples.push_back(reversed_tuple(a.edges));
            }
          }
        }
      }
      const auto report = verify_weight(mw.weight, mw.pair, inst.action, samples);
      all = all && report.all_pass();
      worst_support = std::max(worst_support, report.max_contained_support);
      per_segment.push_back(json{{"segment", s},
                                 {"scanned_c", mw.scanned_c},
                                 {"status", report.all_pass() ? "PASS" : "FAIL"}});
    }
    out.report["per_segment"] = per_segment;
    out.report["max_contained_support"] = worst_support;
    out.pass = all;
  } else {
    throw InputError("verify-weight needs --brooks, --delta or --complex");
  }
  out.finish();
  return out;
}

Output run_verify_delta(const CommonFlags& flags, const std::string& delta_name) {
  const Alphabet alpha(flags.rank);
  const auto delta = delta_by_name(alpha, delta_name);
  const auto report = verify_delta_axioms(delta, ball(alpha, flags.radius), alpha);
  Output out;
  out.report["command"] = "verify-delta";
  out.report["config"] = {{"decomposition", delta_name},
                          {"radius", flags.radius},
                          {"rank", flags.rank}};
  out.report["axioms"] = json::array({condition_json(report.concatenation),
                                      condition_json(report.inversion),
                                      condition_json(report.subproducts),
                                      condition_json(report.triangles)});
  out.report["empirical_R"] = report.empirical_r;
  out.report["declared_R"] = delta.declared_r();
  out.pass = report.all_pass();
  out.finish();
  return out;
}

Output run_median(const CommonFlags& flags, const std::string& complex_spec,
                  const std::string& graph_file, bool staircase, int cap,
                  bool intervals, const std::string& segment_word,
                  bool agree_brooks, int segment_length, bool agree_weight) {
  Output out;
  out.report["command"] = "median";

  if (complex_spec == "tree-F2") {
    const Alphabet alpha(2);
    if (segment_word.empty() || !agree_brooks) {
      throw InputError("tree-F2 expects --segment WORD with --agree-brooks");
    }
    const ReducedWord omega = parse_word(alpha, segment_word);
    const auto f = tree_median_qm(omega);
    const auto pool = ball(alpha, flags.radius);
    long long mismatches = 0;
    for (const auto& g : pool) {
      if (f(ReducedWord{}, g) != brooks_count(omega, g)) ++mismatches;
    }
    out.report["config"] = {{"complex", "tree-F2"},
                            {"segment", segment_word},
                            {"radius", flags.radius}};
    out.report["result"] = {{"checked", pool.size()}, {"mismatches", mismatches}};
    out.pass = mismatches == 0;
    out.finish();
    return out;
  }

  const ComplexInstance inst = !graph_file.empty() ? load_graph_file(graph_file)
                                                   : build_complex(complex_spec);
  out.report["config"] = {{"complex", inst.spec.empty() ? complex_spec : inst.spec}};
  out.report["summary"] = {
      {"vertices", inst.complex->graph().num_vertices()},
      {"edges", inst.complex->graph().num_edges()},
      {"hyperplanes", inst.complex->num_hyperplanes()}};

  if (staircase) {
    const auto report = staircase_length(*inst.complex, cap);
    out.report["staircase"] = {{"length", report.length},
                               {"cap", report.cap},
                               {"chain_h", report.chain_h},
                               {"chain_k", report.chain_k}};
  }

  if (intervals) {
    bool ok = true;
    const int n = inst.complex->graph().num_vertices();
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        ok = static_cast<int>(inst.complex->interval_halfspaces(x, y).size()) ==
             inst.complex->graph().distance(x, y);
      }
    }
    out.report["interval_counts_match_distance"] = ok ? "PASS" : "FAIL";
    out.pass = out.pass && ok;
  }

  if (agree_weight) {
    bool ok = true;
    long long pairs_checked = 0;
    for (int ell = 1; ell <= segment_length && ok; ++ell) {
      for (const auto& s : all_segments(*inst.complex, ell)) {
        const auto mw = median_weight(inst.complex, s, inst.action);
        const auto f_w = weight_qm(mw.weight, mw.pair);
        const auto f_s = median_qm(inst.complex, s, inst.action);
        const int n = inst.complex->graph().num_vertices();
        for (int x = 0; x < n && ok; ++x) {
          for (int y = 0; y < n; ++y) {
            ++pairs_checked;
            if (f_w(x, y) != f_s(x, y)) {
              ok = false;
              break;
            }
          }
        }
      }
    }
    out.report["weight_agrees_with_segment_count"] = ok ? "PASS" : "FAIL";
    out.report["agreement_pairs_checked"] = pairs_checked;
    out.pass = out.pass && ok;
  }

  out.finish();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight quasimorphism toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string brooks_word, delta_name, lambda_text, zeta_spec = "brooks:aab";
  std::string zeta1_spec = "brooks:aab", zeta2_spec = "brooks:bba";
  std::string side = "both";
  std::string complex_spec, graph_file, segment_word;
  bool tree = false, staircase = false, intervals = false, agree_brooks = false;
  bool agree_weight = false;
  int ell = 1, pairs = 200, cap = 8, segment_length = 2;

  auto* cmd_defect = app.add_subcommand("defect", "defect sweep against the bound");
  cmd_defect->add_option("--brooks", brooks_word, "pattern word");
  cmd_defect->add_option("--delta", delta_name, "piece decomposition");
  cmd_defect->add_option("--lambda", lambda_text, "piece values as JSON");
  add_common(cmd_defect, flags, false);

  auto* cmd_cup = app.add_subcommand("cup", "cup-product primitive certificates");
  cmd_cup->add_option("--brooks", brooks_word, "pattern word of the weight")
      ->required();
  cmd_cup->add_option("--zeta", zeta_spec, "cochain spec (brooks:W, table:F, zero:N)");
  cmd_cup->add_option("--side", side, "left, right or both")
      ->check(CLI::IsMember({"left", "right", "both"}));
  add_common(cmd_cup, flags, true);

  auto* cmd_massey = app.add_subcommand("massey", "triple-product certificate");
  cmd_massey->add_option("--brooks", brooks_word, "pattern word of the weight")
      ->required();
  cmd_massey->add_option("--zeta1", zeta1_spec, "first outer cochain");
  cmd_massey->add_option("--zeta2", zeta2_spec, "second outer cochain");
  add_common(cmd_massey, flags, true);

  auto* cmd_median = app.add_subcommand("median", "halfspace reports and agreements");
  cmd_median->add_option("--complex", complex_spec,
                         "built-in complex spec or tree-F2");
  cmd_median->add_option("--graph", graph_file, "JSON graph file");
  cmd_median->add_flag("--staircase", staircase, "search the staircase length");
  cmd_median->add_option("--cap", cap, "staircase search cap");
  cmd_median->add_flag("--intervals", intervals,
                       "check interval sizes against distances");
  cmd_median->add_option("--segment", segment_word, "pattern word (tree-F2)");
  cmd_median->add_flag("--agree-brooks", agree_brooks,
                       "compare the segment count with the window count");
  cmd_median->add_option("--segment-length", segment_length,
                         "max chain length for --agree-weight");
  cmd_median->add_flag("--agree-weight", agree_weight,
                       "compare weight sums with segment counts");
  add_common(cmd_median, flags, false);

  auto* cmd_vw = app.add_subcommand("verify-weight", "five-property weight check");
  cmd_vw->add_option("--brooks", brooks_word, "pattern word");
  cmd_vw->add_option("--delta", delta_name, "piece decomposition");
  cmd_vw->add_option("--lambda", lambda_text, "piece values as JSON");
  cmd_vw->add_option("--complex", complex_spec, "finite complex spec");
  cmd_vw->add_option("--ell", ell, "chain length for complex weights");
  cmd_vw->add_option("--pairs", pairs, "sampled vertex pairs");
  add_common(cmd_vw, flags, true);

  auto* cmd_vc = app.add_subcommand("verify-coherence", "four-condition family check");
  cmd_vc->add_flag("--tree", tree, "tree geodesic family");
  cmd_vc->add_option("--delta", delta_name, "piece decomposition family");
  cmd_vc->add_option("--complex", complex_spec, "finite complex geodesics");
  cmd_vc->add_option("--ell", ell, "fragment size");
  cmd_vc->add_option("--pairs", pairs, "sampled vertex pairs");
  add_common(cmd_vc, flags, true);

  auto* cmd_vd = app.add_subcommand("verify-delta", "decomposition axiom check");
  cmd_vd->add_option("--delta", delta_name, "piece decomposition")->required();
  add_common(cmd_vd, flags, false);

  CLI11_PARSE(app, argc, argv);

  try {
    Output out;
    if (cmd_defect->parsed()) {
      out = run_defect(flags, brooks_word, delta_name, lambda_text);
    } else if (cmd_cup->parsed()) {
      out = run_cup(flags, brooks_word, zeta_spec, side);
    } else if (cmd_massey->parsed()) {
      out = run_massey(flags, brooks_word, zeta1_spec, zeta2_spec);
    } else if (cmd_median->parsed()) {
      out = run_median(flags, complex_spec, graph_file, staircase, cap, intervals,
                       segment_word, agree_brooks, segment_length, agree_weight);
    } else if (cmd_vw->parsed()) {
      out = run_verify_weight(flags, brooks_word, delta_name, lambda_text,
                              complex_spec, ell, pairs);
    } else if (cmd_vc->parsed()) {
      out = run_verify_coherence(flags, tree, delta_name, complex_spec, ell, pairs);
    } else if (cmd_vd->parsed()) {
      out = run_verify_delta(flags, delta_name);
    }
    emit(out, flags.output_path, flags.table);
    return out.pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
