#include "fillpair/enumeration.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "fillpair/errors.hpp"

namespace fillpair {

std::string to_string(PairType t) {
  return t == PairType::type_4_12 ? "{4,12}" : "{8,8}";
}

namespace {

DartLabel relabel_one(const Relabeling& r, DartLabel d) {
  if (r.swap_curves)
    d.curve = d.curve == Curve::alpha ? Curve::beta : Curve::alpha;
  const bool rev = d.curve == Curve::alpha ? r.reverse_alpha : r.reverse_beta;
  if (rev) {
    d.arc = 5 - d.arc;  // arc i forward -> arc 5-i inverse
    d.inverse = !d.inverse;
  }
  const int shift = d.curve == Curve::alpha ? r.alpha_shift : r.beta_shift;
  d.arc = (d.arc - 1 + shift) % 4 + 1;
  return d;
}

// serialized boundary-word pair: cycles rotated to their smallest label,
// sorted by (size, word), joined with '|'
std::string serialize_words(const std::vector<std::vector<DartLabel>>& cycles) {
  std::vector<std::pair<std::size_t, std::string>> items;
  for (const auto& cyc : cycles) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < cyc.size(); ++i)
      if (cyc[i] < cyc[best]) best = i;
    std::string w;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) w += ' ';
      w += cyc[(best + i) % cyc.size()].str();
    }
    items.emplace_back(cyc.size(), std::move(w));
  }
  std::sort(items.begin(), items.end());
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += '|';
    out += items[i].second;
  }
  return out;
}

std::vector<std::vector<DartLabel>> labeled_cycles(
    const FatGraph& g, const std::vector<std::vector<int>>& cycles) {
  std::vector<std::vector<DartLabel>> out;
  out.reserve(cycles.size());
  for (const auto& cyc : cycles) {
    std::vector<DartLabel> lw;
    lw.reserve(cyc.size());
    for (int d : cyc) lw.push_back(g.label(d));
    out.push_back(std::move(lw));
  }
  return out;
}

void require_4plus4(const FatGraph& g) {
  if (g.n_darts() != 16)
    throw DomainError("relabeling group is defined for 4+4-arc pairs");
}

}  // namespace

std::vector<Relabeling> symmetry_group(const SymmetryOptions& opts) {
  std::vector<Relabeling> out;
  const int sa_max = opts.shift_alpha ? 4 : 1;
  const int sb_max = opts.shift_beta ? 4 : 1;
  const int rev_max = opts.reverse_curves ? 2 : 1;
  const int sw_max = opts.swap_curves ? 2 : 1;
  const int mir_max = opts.mirror ? 2 : 1;
  for (int sa = 0; sa < sa_max; ++sa)
    for (int sb = 0; sb < sb_max; ++sb)
      for (int ra = 0; ra < rev_max; ++ra)
        for (int rb = 0; rb < rev_max; ++rb)
          for (int sw = 0; sw < sw_max; ++sw)
            for (int mi = 0; mi < mir_max; ++mi)
              out.push_back({sa, sb, ra != 0, rb != 0, sw != 0, mi != 0});
  return out;
}

FatGraph apply_relabeling(const FatGraph& g, const Relabeling& r) {
  require_4plus4(g);
  std::vector<std::vector<int>> rotations = g.vertex_rotations();
  std::vector<std::vector<DartLabel>> relabeled;
  for (const auto& cyc : rotations) {
    std::vector<DartLabel> lw;
    for (int d : cyc) lw.push_back(relabel_one(r, g.label(d)));
    if (r.mirror) std::reverse(lw.begin(), lw.end());
    relabeled.push_back(std::move(lw));
  }
  return FatGraph::from_rotations(relabeled);
}

std::string canonical_key(const FillingConfiguration& c,
                          const SymmetryOptions& opts) {
  require_4plus4(c.graph);
  // relabeling a graph relabels its boundary words, so the orbit minimum can
  // be taken over relabeled word lists; the mirror changes the cycle
  // structure and needs its own boundary computation
  const auto plain = labeled_cycles(c.graph, c.boundary.empty()
                                                 ? boundary_cycles(c.graph).cycles
                                                 : c.boundary);
  std::vector<std::vector<DartLabel>> mirrored;
  if (opts.mirror) {
    const FatGraph m = apply_relabeling(c.graph, Relabeling{.mirror = true});
    mirrored = labeled_cycles(m, boundary_cycles(m).cycles);
  }

  std::string best;
  for (const auto& r : symmetry_group(opts)) {
    const auto& base = r.mirror ? mirrored : plain;
    std::vector<std::vector<DartLabel>> words;
    words.reserve(base.size());
    for (const auto& cyc : base) {
      std::vector<DartLabel> w;
      w.reserve(cyc.size());
      for (DartLabel d : cyc) {
        Relabeling label_only = r;
        label_only.mirror = false;
        w.push_back(relabel_one(label_only, d));
      }
      words.push_back(std::move(w));
    }
    std::string s = serialize_words(words);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

namespace {

std::optional<FillingConfiguration> build_candidate(
    const std::array<int, 4>& order, int bits) {
  // order: beta's directed vertex sequence (0-based), order[0] == 0
  std::array<DartLabel, 4> beta_out{}, beta_in{};
  for (int j = 0; j < 4; ++j) {
    beta_out[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] =
        {Curve::beta, j + 1, false};
    beta_in[static_cast<std::size_t>(order[static_cast<std::size_t>((j + 1) % 4)])] =
        {Curve::beta, j + 1, true};
  }
  std::vector<std::vector<DartLabel>> rotations;
  for (int v = 0; v < 4; ++v) {
    const DartLabel a_out{Curve::alpha, v + 1, false};
    const DartLabel a_in{Curve::alpha, (v + 3) % 4 + 1, true};
    DartLabel s1 = beta_out[static_cast<std::size_t>(v)];
    DartLabel s3 = beta_in[static_cast<std::size_t>(v)];
    if (bits & (1 << v)) std::swap(s1, s3);
    rotations.push_back({a_out, s1, a_in, s3});
  }
  FatGraph g = FatGraph::from_rotations(rotations);
  const BoundaryDecomposition b = boundary_cycles(g);
  if (b.cycles.size() != 2) return std::nullopt;
  if (b.face_sizes.front() == 2) return std::nullopt;  // bigon: not minimal position

  FillingConfiguration c;
  c.graph = std::move(g);
  c.face_sizes = {b.face_sizes[0], b.face_sizes[1]};
  c.type = c.face_sizes[0] == 8 ? PairType::type_8_8 : PairType::type_4_12;
  c.boundary = b.cycles;
  c.canonical_key = canonical_key(c, SymmetryOptions{});
  return c;
}

}  // namespace

std::vector<FillingConfiguration> enumerate_raw(int jobs) {
  if (jobs < 1) throw DomainError("enumerate_raw: jobs must be >= 1");
  // 6 directed beta vertex orders x 16 slot interleavings
  std::vector<std::array<int, 4>> orders;
  std::array<int, 3> rest{1, 2, 3};
  do {
    orders.push_back({0, rest[0], rest[1], rest[2]});
  } while (std::next_permutation(rest.begin(), rest.end()));

  std::vector<std::pair<std::array<int, 4>, int>> candidates;
  for (const auto& order : orders)
    for (int bits = 0; bits < 16; ++bits) candidates.emplace_back(order, bits);

  auto run_range = [&](std::size_t lo, std::size_t hi) {
    std::vector<FillingConfiguration> part;
    for (std::size_t i = lo; i < hi; ++i) {
      if (auto c = build_candidate(candidates[i].first, candidates[i].second))
        part.push_back(std::move(*c));
    }
    return part;
  };

  std::vector<FillingConfiguration> out;
  if (jobs == 1) {
    out = run_range(0, candidates.size());
  } else {
    const std::size_t chunks = std::min<std::size_t>(
        static_cast<std::size_t>(jobs), candidates.size());
    std::vector<std::future<std::vector<FillingConfiguration>>> futures;
    for (std::size_t k = 0; k < chunks; ++k) {
      const std::size_t lo = candidates.size() * k / chunks;
      const std::size_t hi = candidates.size() * (k + 1) / chunks;
      futures.push_back(
          std::async(std::launch::async, [=]() { return run_range(lo, hi); }));
    }
    for (auto& f : futures)
      for (auto& c : f.get()) out.push_back(std::move(c));
  }
  return out;
}

OrbitReport classify_orbits(const std::vector<FillingConfiguration>& cs,
                            const SymmetryOptions& opts) {
  std::map<std::string, std::vector<const FillingConfiguration*>> groups;
  for (const auto& c : cs) groups[canonical_key(c, opts)].push_back(&c);

  OrbitReport report;
  report.raw_count = static_cast<int>(cs.size());
  for (auto& [key, members] : groups) {
    // deterministic representative: smallest sigma0 serialization
    const FillingConfiguration* rep = members.front();
    std::string rep_text = to_text(rep->graph);
    for (const auto* m : members) {
      std::string t = to_text(m->graph);
      if (t < rep_text) {
        rep = m;
        rep_text = std::move(t);
      }
    }
    OrbitClass cls;
    cls.canonical_key = key;
    cls.representative = *rep;
    cls.member_count = static_cast<int>(members.size());
    cls.type = rep->type;
    report.classes.push_back(std::move(cls));
  }
  return report;
}

int intersection_number(const FillingConfiguration& c) {
  return c.graph.vertex_count();
}

}  // namespace fillpair
