#include "wqm/median.hpp"

#include <algorithm>
#include <set>

namespace wqm {

VertexSet::VertexSet(int n) : n_(n), bits_((static_cast<std::size_t>(n) + 63) / 64) {}

void VertexSet::set(int i) {
  bits_.at(static_cast<std::size_t>(i) / 64) |= (std::uint64_t{1} << (i % 64));
}

bool VertexSet::test(int i) const {
  if (i < 0 || i >= n_) return false;
  return (bits_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
}

int VertexSet::count() const {
  int total = 0;
  for (auto b : bits_) total += __builtin_popcountll(b);
  return total;
}

VertexSet VertexSet::complemented() const {
  VertexSet out(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = ~bits_[i];
  const int tail = n_ % 64;
  if (tail != 0) out.bits_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~o.bits_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & o.bits_[i]) return true;
  }
  return false;
}

MedianComplex MedianComplex::build(FiniteGraph graph,
                                   std::vector<std::string> vertex_names) {
  std::string why;
  if (!graph.is_median_graph(&why)) {
    throw InputError("not a median graph: " + why);
  }
  MedianComplex cx;
  cx.graph_ = std::move(graph);
  cx.names_ = std::move(vertex_names);

  const int n = cx.graph_.num_vertices();
  std::map<VertexSet, int> seen;  // keyed by the side containing vertex 0
  for (const auto& [u, v] : cx.graph_.edges()) {
    const auto du = cx.graph_.bfs_distances(u);
    const auto dv = cx.graph_.bfs_distances(v);
    VertexSet side_u(n), side_v(n);
    for (int x = 0; x < n; ++x) {
      if (du[static_cast<std::size_t>(x)] < dv[static_cast<std::size_t>(x)]) {
        side_u.set(x);
      } else if (dv[static_cast<std::size_t>(x)] < du[static_cast<std::size_t>(x)]) {
        side_v.set(x);
      } else {
        throw InputError("gate map is ambiguous at an edge; graph is not median");
      }
    }
    const VertexSet& key = side_u.test(0) ? side_u : side_v;
    auto it = seen.find(key);
    int hp;
    if (it == seen.end()) {
      hp = static_cast<int>(cx.hyperplanes_.size());
      seen.emplace(key, hp);
      Hyperplane h;
      h.side[0] = side_u.test(0) ? side_u : side_v;
      h.side[1] = h.side[0].complemented();
      cx.hyperplanes_.push_back(std::move(h));
    } else {
      hp = it->second;
    }
    cx.hyperplanes_[static_cast<std::size_t>(hp)].edges.emplace_back(u, v);
    const int id_side_u = 2 * hp + (cx.hyperplanes_[static_cast<std::size_t>(hp)]
                                            .side[0]
                                            .test(u)
                                        ? 0
                                        : 1);
    cx.oriented_edge_to_halfspace_[{v, u}] = id_side_u;
    cx.oriented_edge_to_halfspace_[{u, v}] = complement_id(id_side_u);
  }
  return cx;
}

std::string MedianComplex::vertex_name(int v) const {
  if (v >= 0 && v < static_cast<int>(names_.size())) return names_[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

const VertexSet& MedianComplex::members(int hs) const {
  if (hs < 0 || hs >= num_halfspaces()) throw InputError("halfspace id out of range");
  return hyperplanes_[static_cast<std::size_t>(hs / 2)].side[hs % 2];
}

const std::vector<std::pair<int, int>>& MedianComplex::dual_edges(int hs) const {
  if (hs < 0 || hs >= num_halfspaces()) throw InputError("halfspace id out of range");
  return hyperplanes_[static_cast<std::size_t>(hs / 2)].edges;
}

int MedianComplex::dual_halfspace(int u, int v) const {
  const auto it = oriented_edge_to_halfspace_.find({u, v});
  if (it == oriented_edge_to_halfspace_.end()) {
    throw InputError("(" + std::to_string(u) + "," + std::to_string(v) +
                     ") is not an edge");
  }
  return it->second;
}

int MedianComplex::find_halfspace(const VertexSet& set) const {
  for (int hs = 0; hs < num_halfspaces(); ++hs) {
    if (members(hs) == set) return hs;
  }
  throw InputError("vertex set is not a halfspace");
}

bool MedianComplex::transverse(int h, int k) const {
  const VertexSet& a = members(h);
  const VertexSet& ac = members(complement_id(h));
  const VertexSet& b = members(k);
  const VertexSet& bc = members(complement_id(k));
  return a.intersects(b) && a.intersects(bc) && ac.intersects(b) && ac.intersects(bc);
}

bool MedianComplex::tightly_nested(int h, int k) const {
  if (!proper_subset(h, k)) return false;
  for (int g = 0; g < num_halfspaces(); ++g) {
    if (g == h || g == k) continue;
    if (subset(h, g) && subset(g, k) && !(members(g) == members(h)) &&
        !(members(g) == members(k))) {
      return false;
    }
  }
  return true;
}

std::vector<int> MedianComplex::interval_halfspaces(int x, int y) const {
  std::vector<int> out;
  for (int hs = 0; hs < num_halfspaces(); ++hs) {
    if (member(hs, y) && !member(hs, x)) out.push_back(hs);
  }
  return out;
}

HSegment reversed_segment(const HSegment& s) {
  HSegment out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    out.push_back(MedianComplex::complement_id(*it));
  }
  return out;
}

bool is_segment(const MedianComplex& cx, const HSegment& s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!cx.tightly_nested(s[i], s[i + 1])) return false;
  }
  return true;
}

std::vector<HSegment> all_segments(const MedianComplex& cx, int ell) {
  if (ell < 1) throw InputError("segment length must be positive");
  std::vector<HSegment> out;
  HSegment chain;
  const std::function<void()> extend = [&]() {
    if (static_cast<int>(chain.size()) == ell) {
      out.push_back(chain);
      return;
    }
    for (int hs = 0; hs < cx.num_halfspaces(); ++hs) {
      if (chain.empty() || cx.tightly_nested(chain.back(), hs)) {
        chain.push_back(hs);
        extend();
        chain.pop_back();
      }
    }
  };
  extend();
  return out;
}

std::vector<HSegment> segments_in_interval(const MedianComplex& cx, int x, int y,
                                           int ell) {
  const auto ids = cx.interval_halfspaces(x, y);
  const std::set<int> interval(ids.begin(), ids.end());
  std::vector<HSegment> out;
  for (const auto& s : all_segments(cx, ell)) {
    if (std::all_of(s.begin(), s.end(),
                    [&](int hs) { return interval.count(hs) > 0; })) {
      out.push_back(s);
    }
  }
  return out;
}

StaircaseReport staircase_length(const MedianComplex& cx, int cap) {
  StaircaseReport report;
  report.cap = cap;
  std::vector<int> hs_chain, ks_chain;

  const std::function<void()> extend = [&]() {
    const int depth = static_cast<int>(hs_chain.size());
    if (depth > report.length) {
      report.length = depth;
      report.chain_h = hs_chain;
      report.chain_k = ks_chain;
    }
    if (depth == cap) return;
    for (int h = 0; h < cx.num_halfspaces(); ++h) {
      if (depth > 0 && !cx.proper_subset(hs_chain.back(), h)) continue;
      bool crosses = true;
      for (int kj : ks_chain) {
        if (!cx.transverse(h, kj)) {
          crosses = false;
          break;
        }
      }
      if (!crosses) continue;
      for (int k = 0; k < cx.num_halfspaces(); ++k) {
        if (!cx.proper_subset(h, k)) continue;
        if (depth > 0 && !cx.proper_subset(ks_chain.back(), k)) continue;
        hs_chain.push_back(h);
        ks_chain.push_back(k);
        extend();
        hs_chain.pop_back();
        ks_chain.pop_back();
      }
    }
  };
  extend();
  return report;
}

std::vector<int> segment_heads(const MedianComplex& cx, const HSegment& s) {
  if (s.empty()) throw InputError("empty segment");
  const int h1 = s.front();
  std::set<int> out;
  for (const auto& [u, v] : cx.dual_edges(h1)) {
    if (!cx.member(h1, u)) out.insert(u);
    if (!cx.member(h1, v)) out.insert(v);
  }
  return {out.begin(), out.end()};
}

std::vector<int> segment_tails(const MedianComplex& cx, const HSegment& s) {
  if (s.empty()) throw InputError("empty segment");
  const int hl = s.back();
  std::set<int> out;
  for (const auto& [u, v] : cx.dual_edges(hl)) {
    if (cx.member(hl, u)) out.insert(u);
    if (cx.member(hl, v)) out.insert(v);
  }
  return {out.begin(), out.end()};
}

namespace {

// Image of a halfspace under a vertex permutation.
int halfspace_image(const MedianComplex& cx, int hs,
                    const std::function<int(const int&)>& map) {
  VertexSet img(cx.graph().num_vertices());
  for (int v = 0; v < cx.graph().num_vertices(); ++v) {
    if (cx.member(hs, v)) img.set(map(v));
  }
  return cx.find_halfspace(img);
}

std::vector<HSegment> orbit_of(const MedianComplex& cx, const HSegment& start,
                               const GraphAction<int>& action, long long budget) {
  std::set<HSegment> seen{start};
  std::vector<HSegment> queue{start};
  long long spent = 0;
  while (!queue.empty()) {
    const HSegment cur = queue.back();
    queue.pop_back();
    for (const auto& gen : action.generators) {
      if (++spent > budget) throw ResourceError("orbit enumeration budget exceeded");
      HSegment img;
      img.reserve(cur.size());
      for (int hs : cur) img.push_back(halfspace_image(cx, hs, gen.map));
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

int OrbitSign::sign(const HSegment& t) const {
  if (zero_map) return 0;
  if (std::binary_search(orbit.begin(), orbit.end(), t)) return 1;
  if (std::binary_search(orbit_reverse.begin(), orbit_reverse.end(), t)) return -1;
  return 0;
}

OrbitSign segment_orbit_sign(const MedianComplex& cx, const HSegment& s,
                             const GraphAction<int>& action, long long budget) {
  if (!is_segment(cx, s)) throw InputError("not a tightly nested chain");
  OrbitSign out;
  out.orbit = orbit_of(cx, s, action, budget);
  out.orbit_reverse = orbit_of(cx, reversed_segment(s), action, budget);
  out.zero_map = std::binary_search(out.orbit.begin(), out.orbit.end(),
                                    reversed_segment(s));
  return out;
}

ActionQuasimorphism<int, long long> median_qm(
    const std::shared_ptr<const MedianComplex>& cx, const HSegment& s,
    const GraphAction<int>& action) {
  const auto sign = std::make_shared<OrbitSign>(segment_orbit_sign(*cx, s, action));
  const int ell = static_cast<int>(s.size());
  ActionQuasimorphism<int, long long> f;
  f.name = "median-qm";
  f.eval = [cx, sign, ell](const int& x, const int& y) -> long long {
    long long total = 0;
    for (const auto& t : segments_in_interval(*cx, x, y, ell)) total += sign->sign(t);
    return total;
  };
  return f;
}

PathFamily<int> median_geodesic_family(const std::shared_ptr<const MedianComplex>& cx,
                                       int qmp_constant) {
  return PathFamily<int>(
      "median-geodesics",
      [cx](const int& x, const int& y) { return cx->graph().all_geodesics(x, y); },
      qmp_constant);
}

std::vector<int> fragment_labels(const MedianComplex& cx, const Fragment<int>& a) {
  std::vector<int> out;
  out.reserve(a.edges.size());
  for (const auto& e : a.edges) out.push_back(cx.dual_halfspace(e.head, e.tail));
  return out;
}

namespace {

bool labels_form_chain(const MedianComplex& cx, const std::vector<int>& labels) {
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    if (!cx.tightly_nested(labels[i], labels[i + 1])) return false;
  }
  return true;
}

}  // namespace

CoherentPair<int> median_geodesic_pair(const std::shared_ptr<const MedianComplex>& cx,
                                       int ell, int qmp_constant) {
  // Matches fragments with equal chain labels; everything else pairs up in
  // index order.
  auto bijection = [cx](const Path<int>& p, const Path<int>& q,
                        const std::vector<int>& idx) -> std::vector<int> {
    const int ell_local = static_cast<int>(idx.size());
    const auto frs_p = fragments(p, ell_local);
    const auto frs_q = fragments(q, ell_local);
    if (frs_p.size() != frs_q.size()) {
      throw InputError("fragment counts differ between paths of one pair");
    }
    std::map<std::vector<int>, std::size_t> chain_to_q;
    std::vector<std::size_t> plain_q;
    for (std::size_t j = 0; j < frs_q.size(); ++j) {
      const auto labels = fragment_labels(*cx, frs_q[j]);
      if (labels_form_chain(*cx, labels)) {
        chain_to_q[labels] = j;
      } else {
        plain_q.push_back(j);
      }
    }
    std::size_t plain_rank = 0;
    for (std::size_t i = 0; i < frs_p.size(); ++i) {
      const bool target = frs_p[i].indices == idx;
      const auto labels = fragment_labels(*cx, frs_p[i]);
      if (labels_form_chain(*cx, labels)) {
        if (target) {
          const auto it = chain_to_q.find(labels);
          if (it == chain_to_q.end()) {
            throw InputError("chain labels of a fragment are missing on the other path");
          }
          return frs_q[it->second].indices;
        }
      } else {
        if (target) return frs_q[plain_q.at(plain_rank)].indices;
        ++plain_rank;
      }
    }
    throw InputError("fragment does not belong to the source path");
  };
  return CoherentPair<int>{median_geodesic_family(cx, qmp_constant),
                           FragmentCorrespondence<int>(ell, std::move(bijection),
                                                       false)};
}

long long scan_finiteness_constant(const MedianComplex& cx, const OrbitSign& sign,
                                   int ell) {
  long long worst = 0;
  const int n = cx.graph().num_vertices();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      for (const auto& p : cx.graph().all_geodesics(x, y)) {
        const auto frs = fragments(p, ell);
        for (int mi = 0; mi <= p.length(); ++mi) {
          long long count = 0;
          for (const auto& a : frs) {
            if (!(a.indices.front() < mi && mi < a.indices.back() + 1)) continue;
            const auto labels = fragment_labels(cx, a);
            if (labels_form_chain(cx, labels) && sign.sign(labels) != 0) ++count;
          }
          worst = std::max(worst, count);
        }
      }
    }
  }
  return worst;
}

MedianWeight median_weight(const std::shared_ptr<const MedianComplex>& cx,
                           const HSegment& s, const GraphAction<int>& action) {
  const int ell = static_cast<int>(s.size());
  OrbitSign sign = segment_orbit_sign(*cx, s, action);
  const long long scanned = scan_finiteness_constant(*cx, sign, ell);
  const auto shared_sign = std::make_shared<OrbitSign>(sign);

  auto eval = [cx, shared_sign](const EdgeTuple<int>& a) -> long long {
    std::vector<int> labels;
    labels.reserve(a.size());
    for (const auto& e : a) labels.push_back(cx->dual_halfspace(e.head, e.tail));
    if (!labels_form_chain(*cx, labels)) return 0;
    return shared_sign->sign(labels);
  };

  MedianWeight out{
      WeightMap<int, long long>("median-weight", ell, std::move(eval), 1,
                                std::max<long long>(scanned, 1)),
      median_geodesic_pair(cx, ell), std::move(sign), scanned};
  return out;
}

NonTransverseResult nontransverse_check(const Cochain<int>& zeta,
                                        const MedianComplex& cx,
                                        const std::vector<HSegment>& segments,
                                        const std::vector<std::vector<int>>& trailing,
                                        double tolerance) {
  NonTransverseResult result;
  for (const auto& s : segments) {
    const auto heads = segment_heads(cx, s);
    const auto tails = segment_tails(cx, s);
    for (const auto& rest : trailing) {
      if (static_cast<int>(rest.size()) != zeta.degree()) {
        throw InputError("trailing tuple arity does not match the cochain degree");
      }
      std::vector<int> args;
      args.reserve(rest.size() + 1);
      args.push_back(0);
      args.insert(args.end(), rest.begin(), rest.end());
      const auto value_at = [&](int v) {
        args[0] = v;
        return zeta(std::span<const int>(args.data(), args.size()));
      };
      for (const auto& [vertices, label] :
           {std::pair{heads, "heads"}, std::pair{tails, "tails"}}) {
        if (vertices.empty()) continue;
        const double base = value_at(vertices.front());
        for (int v : vertices) {
          if (std::abs(value_at(v) - base) > tolerance) {
            result.pass = false;
            result.witness = std::string("values differ on the ") + label +
                             " of a translate";
            return result;
          }
        }
      }
    }
  }
  return result;
}

ImplicationResult nontransverse_implies_stable(
    const Cochain<int>& zeta, const MedianComplex& cx, const MedianWeight& mw,
    const std::vector<std::pair<int, int>>& probe_pairs,
    const std::vector<std::vector<int>>& trailing) {
  ImplicationResult out;
  out.nontransverse = nontransverse_check(zeta, cx, mw.sign.orbit, trailing);
  StabilityProbe<int> probe{probe_pairs, trailing};
  out.stability = phi_stability_check(zeta, mw.pair, to_real(mw.weight), probe);
  return out;
}

ActionQuasimorphism<ReducedWord, long long> tree_median_qm(const ReducedWord& omega) {
  if (omega.is_identity()) throw InputError("the pattern word must be nonempty");
  const std::size_t ell = omega.length();
  ActionQuasimorphism<ReducedWord, long long> f;
  f.name = "tree-median-qm";
  f.eval = [omega, ell](const ReducedWord& x, const ReducedWord& y) -> long long {
    const Path<ReducedWord> p = tree_geodesic(x, y);
    if (p.length() < static_cast<int>(ell)) return 0;
    // Canonical form of a run of edges: translate its start to the identity
    // and read off the labels.
    long long total = 0;
    for (int i = 0; i + static_cast<int>(ell) <= p.length(); ++i) {
      ReducedWord canonical;
      for (int j = i; j < i + static_cast<int>(ell); ++j) {
        const auto step = edge_letter(p.vertex(j), p.vertex(j + 1));
        canonical = canonical.append(*step);
      }
      if (canonical == omega) ++total;
      if (canonical == omega.inverse()) --total;
    }
    return total;
  };
  return f;
}

}  // namespace wqm
