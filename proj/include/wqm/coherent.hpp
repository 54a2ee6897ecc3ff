#ifndef WQM_COHERENT_HPP
#define WQM_COHERENT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <type_traits>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wqm/graph.hpp"

namespace wqm {

/**
 * A family of path sets P(x,y), one nonempty set per ordered vertex pair,
 * together with the constant R for which the family satisfies the
 * near-median decomposition property. Providers must be pure and return
 * paths in a deterministic order; `first_path` is the canonical choice used
 * by evaluators.
 */
template <class V>
class PathFamily {
 public:
  using Provider = std::function<std::vector<Path<V>>(const V&, const V&)>;

  PathFamily(std::string name, Provider provider, int qmp_constant)
      : name_(std::move(name)),
        provider_(std::move(provider)),
        qmp_constant_(qmp_constant) {}

  std::vector<Path<V>> paths(const V& x, const V& y) const {
    auto ps = provider_(x, y);
    if (ps.empty()) throw InputError("empty path set in family '" + name_ + "'");
    return ps;
  }

  Path<V> first_path(const V& x, const V& y) const { return paths(x, y).front(); }

  bool contains(const V& x, const V& y, const Path<V>& p) const {
    const auto ps = paths(x, y);
    return std::find(ps.begin(), ps.end(), p) != ps.end();
  }

  int qmp_constant() const { return qmp_constant_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Provider provider_;
  int qmp_constant_;
};

/**
 * The family of fragment bijections phi_{p,q}: for two paths p,q between the
 * same endpoints, maps fragments of p to fragments of q (as index tuples).
 * The default sends an index tuple of p to the same index tuple of q, which
 * is a bijection because paths between fixed endpoints share their length.
 */
template <class V>
class FragmentCorrespondence {
 public:
  using IndexBijection = std::function<std::vector<int>(
      const Path<V>&, const Path<V>&, const std::vector<int>&)>;

  FragmentCorrespondence(int ell, IndexBijection bijection, bool identity)
      : ell_(ell), bijection_(std::move(bijection)), identity_(identity) {
    if (ell_ < 1) throw InputError("fragment size must be positive");
  }

  static FragmentCorrespondence identity_family(int ell) {
    return FragmentCorrespondence(
        ell,
        [](const Path<V>&, const Path<V>&, const std::vector<int>& idx) {
          return idx;
        },
        true);
  }

  int ell() const { return ell_; }
  bool is_identity() const { return identity_; }

  std::vector<int> map_indices(const Path<V>& p, const Path<V>& q,
                               const std::vector<int>& idx) const {
    return bijection_(p, q, idx);
  }

  Fragment<V> map(const Path<V>& p, const Path<V>& q, const Fragment<V>& a) const {
    return make_fragment(q, map_indices(p, q, a.indices));
  }

 private:
  int ell_;
  IndexBijection bijection_;
  bool identity_;
};

template <class V>
struct CoherentPair {
  PathFamily<V> family;
  FragmentCorrespondence<V> phi;

  int ell() const { return phi.ell(); }
};

struct ConditionResult {
  std::string condition;
  bool pass = true;
  std::string counterexample;
};

struct CoherenceReport {
  std::vector<ConditionResult> conditions;

  bool all_pass() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionResult& c) { return c.pass; });
  }
};

namespace detail {

template <class V>
std::string describe_pair(const V& x, const V& y, const std::function<std::string(const V&)>& fmt) {
  if (fmt) return "(" + fmt(x) + ", " + fmt(y) + ")";
  return "(pair)";
}

template <class V>
std::vector<Path<V>> sorted_paths(std::vector<Path<V>> ps) {
  std::sort(ps.begin(), ps.end());
  return ps;
}

}  // namespace detail

/**
 * Checks the four defining conditions of a coherent family on the supplied
 * vertex pairs: compatibility with the group action, compatibility with
 * path reversal, closure under subpaths, and uniform length per pair.
 * Failures are reported with their first counterexample, never thrown.
 */
template <class V>
CoherenceReport verify_coherence(
    const CoherentPair<V>& pair, const GraphAction<V>& action,
    const std::vector<std::pair<V, V>>& sample,
    std::function<std::string(const std::type_identity_t<V>&)> fmt = {}) {
  CoherenceReport report;
  ConditionResult action_compat{"action-compatibility"};
  ConditionResult inversion{"inversion-compatibility"};
  ConditionResult subpaths{"subpath-closure"};
  ConditionResult lengths{"length-uniformity"};

  for (const auto& [x, y] : sample) {
    const auto ps = pair.family.paths(x, y);

    if (lengths.pass) {
      for (const auto& p : ps) {
        if (p.length() != ps.front().length()) {
          lengths.pass = false;
          lengths.counterexample =
              "paths of lengths " + std::to_string(ps.front().length()) + " and " +
              std::to_string(p.length()) + " at " + detail::describe_pair(x, y, fmt);
          break;
        }
      }
    }

    if (action_compat.pass) {
      for (const auto& gen : action.generators) {
        std::vector<Path<V>> translated;
        translated.reserve(ps.size());
        for (const auto& p : ps) {
          std::vector<V> verts;
          verts.reserve(p.vertices().size());
          for (const auto& v : p.vertices()) verts.push_back(gen.map(v));
          translated.emplace_back(std::move(verts));
        }
        const auto expected =
            detail::sorted_paths(pair.family.paths(gen.map(x), gen.map(y)));
        if (detail::sorted_paths(std::move(translated)) != expected) {
          action_compat.pass = false;
          action_compat.counterexample = "generator '" + gen.name + "' at " +
                                         detail::describe_pair(x, y, fmt);
          break;
        }
      }
    }

    if (inversion.pass) {
      std::vector<Path<V>> rev;
      rev.reserve(ps.size());
      for (const auto& p : ps) rev.push_back(p.reversed());
      if (detail::sorted_paths(std::move(rev)) !=
          detail::sorted_paths(pair.family.paths(y, x))) {
        inversion.pass = false;
        inversion.counterexample = "at " + detail::describe_pair(x, y, fmt);
      }
    }

    if (subpaths.pass) {
      for (const auto& p : ps) {
        for (int i = 0; i <= p.length() && subpaths.pass; ++i) {
          for (int j = i; j <= p.length(); ++j) {
            const auto sub = p.subpath(i, j);
            if (!pair.family.contains(sub.first(), sub.last(), sub)) {
              subpaths.pass = false;
              subpaths.counterexample =
                  "subpath [" + std::to_string(i) + "," + std::to_string(j) + "] at " +
                  detail::describe_pair(x, y, fmt);
              break;
            }
          }
        }
        if (!subpaths.pass) break;
      }
    }
  }

  report.conditions = {action_compat, inversion, subpaths, lengths};
  return report;
}

/**
 * A witness for the near-median decomposition of a vertex triple: three
 * middle vertices, three legs s_x, s_y, s_z, three connecting paths of
 * length at most R, and the assembled family paths they glue into.
 */
template <class V>
struct QmpWitness {
  std::array<V, 3> middles;  // m_x, m_y, m_z
  Path<V> s_x, s_y, s_z;
  Path<V> r1, r2, r3;
  Path<V> p_xy, p_yz, p_xz;

  int max_r_length() const {
    return std::max({r1.length(), r2.length(), r3.length()});
  }
};

// Re-checks the gluing equations and family memberships of a witness.
template <class V>
bool witness_valid(const QmpWitness<V>& w, const PathFamily<V>& family, int R) {
  if (w.max_r_length() > R) return false;
  if (!(w.s_x.concat(w.r1).concat(w.s_y.reversed()) == w.p_xy)) return false;
  if (!(w.s_y.concat(w.r2).concat(w.s_z.reversed()) == w.p_yz)) return false;
  if (!(w.s_x.concat(w.r3).concat(w.s_z.reversed()) == w.p_xz)) return false;
  const auto member = [&family](const Path<V>& p) {
    return family.contains(p.first(), p.last(), p);
  };
  return member(w.p_xy) && member(w.p_yz) && member(w.p_xz) && member(w.s_x) &&
         member(w.s_y) && member(w.s_z) && member(w.r1) && member(w.r2) &&
         member(w.r3);
}

/**
 * Exhaustive witness search for one triple. Decomposition points are tried
 * in order of increasing connector length, so a width-0 witness (all three
 * middles equal) is found first when one exists. The budget caps the number
 * of split combinations examined.
 */
template <class V>
std::optional<QmpWitness<V>> qmp_witness(const CoherentPair<V>& pair, const V& x,
                                         const V& y, const V& z, int R,
                                         long long budget = 2'000'000) {
  const auto& family = pair.family;
  long long spent = 0;
  for (int r_cap = 0; r_cap <= R; ++r_cap) {
    for (const auto& p_xy : family.paths(x, y)) {
      for (int i = 0; i <= p_xy.length(); ++i) {
        for (int j = i; j <= std::min(i + r_cap, p_xy.length()); ++j) {
          const Path<V> s_x = p_xy.subpath(0, i);
          const Path<V> r1 = p_xy.subpath(i, j);
          const Path<V> s_y = p_xy.subpath(j, p_xy.length()).reversed();
          for (const auto& p_yz : family.paths(y, z)) {
            const int sy_len = s_y.length();
            if (p_yz.length() < sy_len) continue;
            if (!(p_yz.subpath(0, sy_len) == s_y)) continue;
            for (int j2 = sy_len; j2 <= std::min(sy_len + r_cap, p_yz.length());
                 ++j2) {
              const Path<V> r2 = p_yz.subpath(sy_len, j2);
              const Path<V> s_z = p_yz.subpath(j2, p_yz.length()).reversed();
              for (const auto& p_xz : family.paths(x, z)) {
                if (++spent > budget) {
                  throw ResourceError("witness search budget exceeded");
                }
                const int sx_len = s_x.length();
                const int sz_len = s_z.length();
                if (p_xz.length() < sx_len + sz_len) continue;
                const int r3_len = p_xz.length() - sx_len - sz_len;
                if (r3_len > r_cap) continue;
                if (!(p_xz.subpath(0, sx_len) == s_x)) continue;
                if (!(p_xz.subpath(sx_len + r3_len, p_xz.length()).reversed() ==
                      s_z)) {
                  continue;
                }
                QmpWitness<V> w{{p_xy.vertex(i), p_xy.vertex(j), p_yz.vertex(j2)},
                                s_x,
                                s_y,
                                s_z,
                                r1,
                                r2,
                                p_xz.subpath(sx_len, sx_len + r3_len),
                                p_xy,
                                p_yz,
                                p_xz};
                if (witness_valid(w, family, r_cap)) return w;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

template <class V>
struct QmpReport {
  bool pass = true;
  long long triples_checked = 0;
  std::optional<std::array<V, 3>> failing_triple;
};

// True iff every triple in the list admits a witness for the given R.
template <class V>
QmpReport<V> verify_qmp(const CoherentPair<V>& pair, int R,
                        const std::vector<std::array<V, 3>>& triples) {
  QmpReport<V> report;
  for (const auto& t : triples) {
    ++report.triples_checked;
    if (!qmp_witness(pair, t[0], t[1], t[2], R)) {
      report.pass = false;
      report.failing_triple = t;
      return report;
    }
  }
  return report;
}

}  // namespace wqm

#endif  // WQM_COHERENT_HPP
