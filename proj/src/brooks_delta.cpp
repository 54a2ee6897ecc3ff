#include "wqm/brooks_delta.hpp"

#include <algorithm>

namespace wqm {

int pattern_sign(const ReducedWord& omega, const ReducedWord& g) {
  if (g == omega) return 1;
  if (g == omega.inverse()) return -1;
  return 0;
}

long long brooks_count(const ReducedWord& omega, const ReducedWord& g) {
  const std::size_t ell = omega.length();
  if (ell == 0) throw InputError("the pattern word must be nonempty");
  if (g.length() < ell) return 0;
  long long total = 0;
  for (std::size_t i = 0; i + ell <= g.length(); ++i) {
    total += pattern_sign(omega, g.subword(i, ell));
  }
  return total;
}

GroupQuasimorphism brooks_group_qm(const Alphabet& alpha, const ReducedWord& omega) {
  if (omega.is_identity()) throw InputError("the pattern word must be nonempty");
  GroupQuasimorphism phi;
  phi.name = "brooks:" + format_word(alpha, omega);
  phi.eval = [omega](const ReducedWord& g) {
    return static_cast<double>(brooks_count(omega, g));
  };
  const auto ell = static_cast<double>(omega.length());
  phi.defect_bound = omega.length() >= 2 ? 6.0 * (ell - 1.0) : 0.0;
  return phi;
}

namespace {

// Label of a tree edge: the letter carrying head to tail.
Letter edge_label_or_throw(const OrientedEdge<ReducedWord>& e) {
  const auto l = edge_letter(e.head, e.tail);
  if (!l) throw InputError("tuple entry is not an edge of the Cayley tree");
  return *l;
}

bool linked(const EdgeTuple<ReducedWord>& a) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (!(a[i].tail == a[i + 1].head)) return false;
  }
  return true;
}

ReducedWord label_product(const EdgeTuple<ReducedWord>& a) {
  ReducedWord w;
  for (const auto& e : a) w = w.append(edge_label_or_throw(e));
  return w;
}

}  // namespace

WeightMap<ReducedWord, long long> brooks_weight(const ReducedWord& omega) {
  if (omega.is_identity()) throw InputError("the pattern word must be nonempty");
  const int ell = static_cast<int>(omega.length());
  const long long c = ell >= 2 ? ell - 1 : 2;
  auto eval = [omega](const EdgeTuple<ReducedWord>& a) -> long long {
    if (!linked(a)) return 0;
    return pattern_sign(omega, label_product(a));
  };
  return WeightMap<ReducedWord, long long>("brooks-weight", ell, std::move(eval),
                                           1, c);
}

CoherentPair<ReducedWord> brooks_pair(const ReducedWord& omega) {
  return tree_coherent_pair(static_cast<int>(omega.length()));
}

PieceSequence inverse_sequence(const PieceSequence& s) {
  PieceSequence out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(it->inverse());
  return out;
}

PieceSequence common_sequence(const PieceSequence& s, const PieceSequence& t) {
  PieceSequence out;
  const std::size_t n = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < n && s[i] == t[i]; ++i) out.push_back(s[i]);
  return out;
}

DeltaDecomposition DeltaDecomposition::letters(const Alphabet& alpha) {
  (void)alpha;
  return DeltaDecomposition(
      "letters",
      [](const ReducedWord& g) {
        PieceSequence out;
        out.reserve(g.length());
        for (std::size_t i = 0; i < g.length(); ++i) out.push_back(g.subword(i, 1));
        return out;
      },
      [](const ReducedWord& p) { return p.length() == 1; }, 0);
}

DeltaDecomposition DeltaDecomposition::syllables(const Alphabet& alpha) {
  (void)alpha;
  return DeltaDecomposition(
      "syllables",
      [](const ReducedWord& g) {
        PieceSequence out;
        std::size_t i = 0;
        while (i < g.length()) {
          std::size_t j = i + 1;
          while (j < g.length() && g.letter(j) == g.letter(i)) ++j;
          out.push_back(g.subword(i, j - i));
          i = j;
        }
        return out;
      },
      [](const ReducedWord& p) {
        if (p.is_identity()) return false;
        for (std::size_t i = 1; i < p.length(); ++i) {
          if (p.letter(i) != p.letter(0)) return false;
        }
        return true;
      },
      2);
}

namespace {

bool is_prefix(const PieceSequence& prefix, const PieceSequence& s) {
  if (prefix.size() > s.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), s.begin());
}

bool is_suffix(const PieceSequence& suffix, const PieceSequence& s) {
  if (suffix.size() > s.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), s.rbegin());
}

PieceSequence middle(const PieceSequence& s, std::size_t drop_front,
                     std::size_t drop_back) {
  return PieceSequence(s.begin() + static_cast<std::ptrdiff_t>(drop_front),
                       s.end() - static_cast<std::ptrdiff_t>(drop_back));
}

}  // namespace

DeltaTriangle delta_triangle(const DeltaDecomposition& delta, const ReducedWord& g,
                             const ReducedWord& h) {
  DeltaTriangle tri;
  const ReducedWord gh = g * h;
  const PieceSequence dg = delta.decompose(g);
  const PieceSequence dh = delta.decompose(h);
  const PieceSequence dgh = delta.decompose(gh);

  tri.c1 = inverse_sequence(common_sequence(dg, dgh));
  tri.c2 = inverse_sequence(common_sequence(delta.decompose(g.inverse()), dh));
  tri.c3 = inverse_sequence(
      common_sequence(delta.decompose(h.inverse()), delta.decompose(gh.inverse())));

  const PieceSequence c1inv = inverse_sequence(tri.c1);
  const PieceSequence c2inv = inverse_sequence(tri.c2);

  const auto resolve = [&tri](const PieceSequence& whole, const PieceSequence& front,
                              const PieceSequence& back, const char* which) {
    if (front.size() + back.size() > whole.size() || !is_prefix(front, whole) ||
        !is_suffix(back, whole)) {
      tri.consistent = false;
      tri.issue = std::string("factorization of ") + which + " does not resolve";
      return PieceSequence{};
    }
    return middle(whole, front.size(), back.size());
  };

  tri.r1 = resolve(dg, c1inv, tri.c2, "the first side");
  if (!tri.consistent) return tri;
  tri.r2 = resolve(dh, c2inv, tri.c3, "the second side");
  if (!tri.consistent) return tri;
  tri.r3 = inverse_sequence(resolve(dgh, c1inv, tri.c3, "the product side"));
  return tri;
}

namespace {

// Letter-by-letter concatenation with a cancellation check.
bool concatenates_without_cancellation(const PieceSequence& seq, const ReducedWord& g) {
  std::string flat;
  std::size_t total = 0;
  for (const auto& p : seq) {
    if (p.is_identity()) return false;
    flat += p.bytes();
    total += p.length();
  }
  return total == g.length() && ReducedWord::debug_is_reduced(flat) &&
         ReducedWord::from_reduced(flat) == g;
}

}  // namespace

DeltaReport verify_delta_axioms(const DeltaDecomposition& delta,
                                const std::vector<ReducedWord>& ball_elements,
                                const Alphabet& alpha) {
  DeltaReport report;

  for (const ReducedWord& g : ball_elements) {
    const PieceSequence dg = delta.decompose(g);

    if (report.concatenation.pass) {
      bool pieces_ok = std::all_of(dg.begin(), dg.end(), [&](const ReducedWord& p) {
        return delta.is_piece(p);
      });
      if (!pieces_ok || !concatenates_without_cancellation(dg, g)) {
        report.concatenation.pass = false;
        report.concatenation.counterexample = format_word(alpha, g);
      }
    }

    if (report.inversion.pass &&
        delta.decompose(g.inverse()) != inverse_sequence(dg)) {
      report.inversion.pass = false;
      report.inversion.counterexample = format_word(alpha, g);
    }

    if (report.subproducts.pass) {
      for (std::size_t i = 0; i < dg.size() && report.subproducts.pass; ++i) {
        ReducedWord prod;
        PieceSequence expected;
        for (std::size_t j = i; j < dg.size(); ++j) {
          prod = prod * dg[j];
          expected.push_back(dg[j]);
          if (delta.decompose(prod) != expected) {
            report.subproducts.pass = false;
            report.subproducts.counterexample =
                format_word(alpha, g) + " range [" + std::to_string(i) + "," +
                std::to_string(j) + "]";
            break;
          }
        }
      }
    }
  }

  for (const ReducedWord& g : ball_elements) {
    for (const ReducedWord& h : ball_elements) {
      const DeltaTriangle tri = delta_triangle(delta, g, h);
      if (!tri.consistent) {
        if (report.triangles.pass) {
          report.triangles.pass = false;
          report.triangles.counterexample =
              "(" + format_word(alpha, g) + ", " + format_word(alpha, h) + "): " +
              tri.issue;
        }
        continue;
      }
      report.empirical_r = std::max(report.empirical_r, tri.max_r_length());
    }
  }
  return report;
}

namespace {

Path<ReducedWord> delta_path(const DeltaDecomposition& delta, const ReducedWord& x,
                             const ReducedWord& y) {
  const ReducedWord diff = x.inverse() * y;
  const PieceSequence seq = delta.decompose(diff);
  if (!concatenates_without_cancellation(seq, diff)) {
    throw AxiomViolation("decomposition of a word cancels or misses letters");
  }
  std::vector<ReducedWord> verts;
  verts.reserve(seq.size() + 1);
  ReducedWord cur = x;
  verts.push_back(cur);
  for (const auto& piece : seq) {
    cur = cur * piece;
    verts.push_back(cur);
  }
  return Path<ReducedWord>(std::move(verts));
}

}  // namespace

PathFamily<ReducedWord> delta_path_family(const DeltaDecomposition& delta) {
  return PathFamily<ReducedWord>(
      "delta:" + delta.name(),
      [delta](const ReducedWord& x, const ReducedWord& y) {
        return std::vector<Path<ReducedWord>>{delta_path(delta, x, y)};
      },
      delta.declared_r());
}

CoherentPair<ReducedWord> delta_pair(const DeltaDecomposition& delta) {
  return CoherentPair<ReducedWord>{
      delta_path_family(delta), FragmentCorrespondence<ReducedWord>::identity_family(1)};
}

QmpWitness<ReducedWord> delta_triangle_witness(const DeltaDecomposition& delta,
                                               const ReducedWord& x,
                                               const ReducedWord& y,
                                               const ReducedWord& z) {
  const DeltaTriangle tri = delta_triangle(delta, x.inverse() * y, y.inverse() * z);
  if (!tri.consistent) throw AxiomViolation("triangle does not resolve: " + tri.issue);

  const auto walk = [](const ReducedWord& from, const PieceSequence& seq) {
    std::vector<ReducedWord> verts{from};
    ReducedWord cur = from;
    for (const auto& p : seq) {
      cur = cur * p;
      verts.push_back(cur);
    }
    return Path<ReducedWord>(std::move(verts));
  };

  const Path<ReducedWord> s_x = walk(x, inverse_sequence(tri.c1));
  const Path<ReducedWord> s_y = walk(y, inverse_sequence(tri.c2));
  const Path<ReducedWord> s_z = walk(z, inverse_sequence(tri.c3));
  const Path<ReducedWord> r1 = walk(s_x.last(), tri.r1);
  const Path<ReducedWord> r2 = walk(s_y.last(), tri.r2);
  const Path<ReducedWord> r3 = walk(s_x.last(), inverse_sequence(tri.r3));

  return QmpWitness<ReducedWord>{{s_x.last(), s_y.last(), s_z.last()},
                                 s_x,
                                 s_y,
                                 s_z,
                                 r1,
                                 r2,
                                 r3,
                                 s_x.concat(r1).concat(s_y.reversed()),
                                 s_y.concat(r2).concat(s_z.reversed()),
                                 s_x.concat(r3).concat(s_z.reversed())};
}

PieceWeight PieceWeight::from_values(
    const std::vector<std::pair<ReducedWord, double>>& values) {
  PieceWeight out;
  for (const auto& [piece, value] : values) {
    if (piece.is_identity()) throw InputError("the identity is never a piece");
    const auto inv = piece.inverse();
    const auto it = out.values_.find(piece);
    if (it != out.values_.end() && it->second != value) {
      throw InputError("conflicting values for one piece");
    }
    const auto jt = out.values_.find(inv);
    if (jt != out.values_.end() && jt->second != -value) {
      throw InputError("piece values are not alternating");
    }
    out.values_[piece] = value;
    out.values_[inv] = -value;
    out.norm_ = std::max(out.norm_, std::abs(value));
  }
  return out;
}

double PieceWeight::value(const ReducedWord& piece) const {
  const auto it = values_.find(piece);
  return it == values_.end() ? 0.0 : it->second;
}

WeightMap<ReducedWord, double> delta_weight(const PieceWeight& lambda,
                                            const DeltaDecomposition& delta) {
  auto eval = [lambda, delta](const EdgeTuple<ReducedWord>& a) -> double {
    const ReducedWord step = a.front().head.inverse() * a.front().tail;
    if (!delta.is_piece(step)) {
      throw InputError("tuple entry is not an edge of the piece Cayley graph");
    }
    return lambda.value(step);
  };
  return WeightMap<ReducedWord, double>("delta-weight:" + delta.name(), 1,
                                        std::move(eval), lambda.norm_bound(), 2);
}

DeltaQuasimorphism delta_qm(const PieceWeight& lambda, const DeltaDecomposition& delta) {
  DeltaQuasimorphism out;
  out.direct.name = "delta-qm:" + delta.name();
  out.direct.eval = [lambda, delta](const ReducedWord& g) {
    double total = 0.0;
    for (const auto& piece : delta.decompose(g)) total += lambda.value(piece);
    return total;
  };
  out.direct.defect_bound =
      3.0 * (delta.declared_r() + 1) * 2.0 * lambda.norm_bound();
  out.as_action = weight_qm(delta_weight(lambda, delta), delta_pair(delta));
  return out;
}

}  // namespace wqm
