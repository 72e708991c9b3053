#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fillpair/errors.hpp"

namespace fillpair {

enum class Curve : std::uint8_t { alpha, beta };

// Label of a directed edge: curve, 1-based arc index, direction.
// Text form: lowercase = forward, uppercase = inverse; a = alpha, b = beta.
// "a1" is the forward dart of the first alpha arc, "B4" the reverse dart of
// the fourth beta arc.
struct DartLabel {
  Curve curve = Curve::alpha;
  int arc = 1;
  bool inverse = false;

  DartLabel reversed() const { return {curve, arc, !inverse}; }
  std::string str() const;
  static std::optional<DartLabel> parse(std::string_view token);

  friend auto operator<=>(const DartLabel&, const DartLabel&) = default;
};

struct Violation {
  std::string invariant;      // name of the first violated invariant
  std::vector<int> darts;     // offending dart ids
};

// Fat graph on darts 0..n-1: sigma1 pairs a dart with its reverse, the
// cycles of sigma0 are the counterclockwise vertex rotations.
class FatGraph {
 public:
  // Empty placeholder; every operation requires a graph built by one of the
  // constructors below.
  FatGraph() = default;

  // Raw constructor; performs size checks only, so that validate() can be
  // exercised on broken data.
  FatGraph(std::vector<DartLabel> labels, std::vector<int> sigma0,
           std::vector<int> sigma1);

  // Build from the vertex rotations given as label cycles.  Dart ids are
  // assigned densely in label order and sigma1 becomes d ^ 1.  Throws Error
  // on duplicate labels or a label whose reverse is missing.
  static FatGraph from_rotations(
      const std::vector<std::vector<DartLabel>>& rotations);

  int n_darts() const { return static_cast<int>(labels_.size()); }
  int n_edges() const { return n_darts() / 2; }
  int sigma0(int d) const { return sigma0_[d]; }
  int sigma1(int d) const { return sigma1_[d]; }
  const DartLabel& label(int d) const { return labels_[d]; }
  const std::vector<int>& sigma0() const { return sigma0_; }
  const std::vector<int>& sigma1() const { return sigma1_; }

  // Vertex rotations, each cycle rotated to its smallest label, cycles
  // ordered by smallest label.
  std::vector<std::vector<int>> vertex_rotations() const;
  int vertex_count() const;

  friend bool operator==(const FatGraph&, const FatGraph&) = default;

 private:
  std::vector<DartLabel> labels_;
  std::vector<int> sigma0_;
  std::vector<int> sigma1_;
};

struct BoundaryDecomposition {
  std::vector<std::vector<int>> cycles;  // canonical cyclic words, dart ids
  std::vector<int> face_sizes;           // cycle lengths, ascending
};

// nullopt when all invariants hold; otherwise the first violation found.
std::optional<Violation> validate(const FatGraph& g);

// Cycle decomposition of d -> sigma0(sigma1(d)) (sigma1 applied first; this
// order reproduces the printed boundary words).  Each cycle starts at its
// lexicographically smallest dart label; cycles sorted by that label.
// Throws InvalidGraphError if validate(g) reports a violation.
BoundaryDecomposition boundary_cycles(const FatGraph& g);

// V - E + F for the closed surface obtained by capping the boundary.
int euler_characteristic(const FatGraph& g);

bool is_connected(const FatGraph& g);

// (2 - euler_characteristic) / 2.  Throws NotConnectedError on a
// disconnected graph.
int genus(const FatGraph& g);

// "a1 B4 A4 b1" for a dart id sequence.
std::string word_string(const FatGraph& g, const std::vector<int>& cycle);

// Text format:
//   darts: <n>
//   v: (a1 B4 A4 b1)
// one v-line per vertex rotation.  Rejects duplicate or missing darts.
FatGraph parse_fat_graph(std::istream& in);
FatGraph parse_fat_graph(std::string_view text);
std::string to_text(const FatGraph& g);

}  // namespace fillpair
