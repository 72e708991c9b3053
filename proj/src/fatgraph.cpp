#include "fillpair/fatgraph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace fillpair {

std::string DartLabel::str() const {
  char c = curve == Curve::alpha ? 'a' : 'b';
  if (inverse) c = static_cast<char>(std::toupper(c));
  return c + std::to_string(arc);
}

std::optional<DartLabel> DartLabel::parse(std::string_view token) {
  if (token.size() < 2) return std::nullopt;
  const char c = token[0];
  DartLabel d;
  switch (c) {
    case 'a': d.curve = Curve::alpha; d.inverse = false; break;
    case 'A': d.curve = Curve::alpha; d.inverse = true; break;
    case 'b': d.curve = Curve::beta; d.inverse = false; break;
    case 'B': d.curve = Curve::beta; d.inverse = true; break;
    default: return std::nullopt;
  }
  int arc = 0;
  for (std::size_t i = 1; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return std::nullopt;
    arc = arc * 10 + (token[i] - '0');
  }
  if (arc <= 0) return std::nullopt;
  d.arc = arc;
  return d;
}

FatGraph::FatGraph(std::vector<DartLabel> labels, std::vector<int> sigma0,
                   std::vector<int> sigma1)
    : labels_(std::move(labels)),
      sigma0_(std::move(sigma0)),
      sigma1_(std::move(sigma1)) {
  if (labels_.empty() || sigma0_.size() != labels_.size() ||
      sigma1_.size() != labels_.size()) {
    throw Error("fat graph: permutation sizes must match the dart count");
  }
}

FatGraph FatGraph::from_rotations(
    const std::vector<std::vector<DartLabel>>& rotations) {
  std::vector<DartLabel> seen;
  for (const auto& cycle : rotations)
    for (const auto& d : cycle) seen.push_back(d);
  if (seen.empty()) throw Error("fat graph: no darts");

  std::vector<DartLabel> sorted = seen;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("fat graph: duplicate dart label");

  std::map<DartLabel, int> id;
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) id[sorted[i]] = i;
  for (const auto& d : sorted) {
    if (!id.count(d.reversed()))
      throw Error("fat graph: dart " + d.str() + " has no reverse");
  }

  const int n = static_cast<int>(sorted.size());
  std::vector<int> s0(n, -1), s1(n, -1);
  for (int i = 0; i < n; ++i) s1[i] = id[sorted[i].reversed()];
  for (const auto& cycle : rotations) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      s0[id[cycle[k]]] = id[cycle[(k + 1) % cycle.size()]];
    }
  }
  return FatGraph(std::move(sorted), std::move(s0), std::move(s1));
}

namespace {

bool is_permutation_vector(const std::vector<int>& p) {
  std::vector<char> hit(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

// cycles of an arbitrary permutation, each rotated so the smallest label
// comes first, sorted by that label
std::vector<std::vector<int>> label_canonical_cycles(
    const FatGraph& g, const std::vector<int>& perm) {
  const int n = g.n_darts();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.label(a) < g.label(b); });

  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int start : order) {
    if (seen[start]) continue;
    std::vector<int> cyc{start};
    seen[start] = 1;
    for (int d = perm[start]; d != start; d = perm[d]) {
      cyc.push_back(d);
      seen[d] = 1;
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

std::vector<std::vector<int>> FatGraph::vertex_rotations() const {
  return label_canonical_cycles(*this, sigma0_);
}

int FatGraph::vertex_count() const {
  std::vector<char> seen(n_darts(), 0);
  int count = 0;
  for (int d = 0; d < n_darts(); ++d) {
    if (seen[d]) continue;
    ++count;
    for (int e = d; !seen[e]; e = sigma0_[e]) seen[e] = 1;
  }
  return count;
}

std::optional<Violation> validate(const FatGraph& g) {
  const int n = g.n_darts();
  if (!is_permutation_vector(g.sigma1()))
    return Violation{"sigma1 not a permutation", {}};
  for (int d = 0; d < n; ++d) {
    if (g.sigma1(d) == d) return Violation{"sigma1 not fixed-point-free", {d}};
  }
  for (int d = 0; d < n; ++d) {
    if (g.sigma1(g.sigma1(d)) != d)
      return Violation{"sigma1 not an involution", {d, g.sigma1(d)}};
  }
  if (!is_permutation_vector(g.sigma0()))
    return Violation{"sigma0 not a permutation", {}};
  for (int d = 0; d < n; ++d) {
    for (int e = d + 1; e < n; ++e) {
      if (g.label(d) == g.label(e))
        return Violation{"duplicate dart labels", {d, e}};
    }
  }
  for (int d = 0; d < n; ++d) {
    if (g.label(g.sigma1(d)) != g.label(d).reversed())
      return Violation{"sigma1 partner label mismatch", {d, g.sigma1(d)}};
  }
  return std::nullopt;
}

BoundaryDecomposition boundary_cycles(const FatGraph& g) {
  if (auto v = validate(g)) {
    throw InvalidGraphError("boundary_cycles: invalid fat graph: " +
                            v->invariant);
  }
  const int n = g.n_darts();
  std::vector<int> composite(n);
  for (int d = 0; d < n; ++d) composite[d] = g.sigma0(g.sigma1(d));

  BoundaryDecomposition out;
  out.cycles = label_canonical_cycles(g, composite);
  for (const auto& c : out.cycles)
    out.face_sizes.push_back(static_cast<int>(c.size()));
  std::sort(out.face_sizes.begin(), out.face_sizes.end());
  return out;
}

int euler_characteristic(const FatGraph& g) {
  const auto b = boundary_cycles(g);
  return g.vertex_count() - g.n_edges() + static_cast<int>(b.cycles.size());
}

bool is_connected(const FatGraph& g) {
  const int n = g.n_darts();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int e : {g.sigma0(d), g.sigma1(d)}) {
      if (!seen[e]) {
        seen[e] = 1;
        stack.push_back(e);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

int genus(const FatGraph& g) {
  if (!is_connected(g)) throw NotConnectedError("genus: graph not connected");
  const int chi = euler_characteristic(g);
  return (2 - chi) / 2;
}

std::string word_string(const FatGraph& g, const std::vector<int>& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += ' ';
    out += g.label(cycle[i]).str();
  }
  return out;
}

namespace {

std::vector<DartLabel> parse_rotation_line(const std::string& body, int lineno,
                                           int body_offset) {
  // body is the text after "v:", expected "(tok tok ...)"
  auto fail = [&](const std::string& msg, std::size_t pos) -> void {
    throw ParseError(msg, lineno, static_cast<int>(body_offset + pos) + 1);
  };
  std::size_t i = 0;
  while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i])))
    ++i;
  if (i == body.size() || body[i] != '(') fail("expected '('", i);
  std::size_t close = body.find(')', i);
  if (close == std::string::npos) fail("missing ')'", body.size() - 1);
  std::string rest = body.substr(close + 1);
  if (rest.find_first_not_of(" \t\r") != std::string::npos)
    fail("trailing characters after ')'", close + 1);

  std::vector<DartLabel> cycle;
  std::size_t pos = i + 1;
  while (pos < close) {
    while (pos < close && std::isspace(static_cast<unsigned char>(body[pos])))
      ++pos;
    if (pos >= close) break;
    std::size_t end = pos;
    while (end < close && !std::isspace(static_cast<unsigned char>(body[end])))
      ++end;
    const std::string token = body.substr(pos, end - pos);
    auto d = DartLabel::parse(token);
    if (!d) fail("bad dart token '" + token + "'", pos);
    cycle.push_back(*d);
    pos = end;
  }
  if (cycle.empty()) fail("empty rotation", i);
  return cycle;
}

}  // namespace

FatGraph parse_fat_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long declared = -1;
  std::vector<std::vector<DartLabel>> rotations;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == '#') continue;
    if (line.compare(first, 6, "darts:") == 0) {
      if (declared >= 0)
        throw ParseError("duplicate 'darts:' line", lineno,
                         static_cast<int>(first) + 1);
      const std::string num = line.substr(first + 6);
      try {
        std::size_t used = 0;
        declared = std::stol(num, &used);
        if (num.find_first_not_of(" \t\r", used) != std::string::npos)
          throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("bad dart count", lineno,
                         static_cast<int>(first) + 7);
      }
      if (declared <= 0 || declared % 2 != 0)
        throw ParseError("dart count must be a positive even integer", lineno,
                         static_cast<int>(first) + 7);
      continue;
    }
    if (line.compare(first, 2, "v:") == 0) {
      rotations.push_back(parse_rotation_line(
          line.substr(first + 2), lineno, static_cast<int>(first) + 2));
      continue;
    }
    throw ParseError("expected 'darts:' or 'v:' line", lineno,
                     static_cast<int>(first) + 1);
  }
  if (declared < 0) throw ParseError("missing 'darts:' line", lineno + 1, 1);
  if (rotations.empty()) throw ParseError("no vertex rotations", lineno + 1, 1);

  long total = 0;
  for (const auto& r : rotations) total += static_cast<long>(r.size());
  if (total != declared)
    throw ParseError("rotation lines list " + std::to_string(total) +
                         " darts, 'darts:' declares " +
                         std::to_string(declared),
                     lineno, 1);
  try {
    return FatGraph::from_rotations(rotations);
  } catch (const Error& e) {
    throw ParseError(e.what(), lineno, 1);
  }
}

FatGraph parse_fat_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fat_graph(in);
}

std::string to_text(const FatGraph& g) {
  std::string out = "darts: " + std::to_string(g.n_darts()) + "\n";
  for (const auto& cyc : g.vertex_rotations()) {
    out += "v: (" + word_string(g, cyc) + ")\n";
  }
  return out;
}

}  // namespace fillpair
