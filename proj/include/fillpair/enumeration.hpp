#pragma once

#include <array>
#include <string>
#include <vector>

#include "fillpair/fatgraph.hpp"

namespace fillpair {

enum class PairType { type_4_12, type_8_8 };

std::string to_string(PairType t);  // "{4,12}" / "{8,8}"

// A validated minimal filling pair candidate on genus two: 16 darts, 4
// vertices, both curves standard cycles, two complementary faces, no bigon.
struct FillingConfiguration {
  FatGraph graph;
  std::array<int, 2> face_sizes{};   // ascending
  PairType type = PairType::type_8_8;
  std::string canonical_key;         // under the default symmetry group
  std::vector<std::vector<int>> boundary;  // cached boundary cycles
};

// Relabeling group toggles.  Defaults give the full group used for the
// orbit count: index shifts on both curves, reversal of each curve's
// direction and the alpha<->beta swap.  Mirror (conjugating sigma0 to its
// inverse) is off by default and available for exploration.
struct SymmetryOptions {
  bool shift_alpha = true;
  bool shift_beta = true;
  bool reverse_curves = true;
  bool swap_curves = true;
  bool mirror = false;
};

// One element of the relabeling group acting on (curve, arc, direction)
// labels of a 4+4-arc configuration.
struct Relabeling {
  int alpha_shift = 0;       // arc i -> i + shift (mod 4)
  int beta_shift = 0;
  bool reverse_alpha = false;  // arc i forward -> arc 5-i inverse
  bool reverse_beta = false;
  bool swap_curves = false;
  bool mirror = false;         // additionally invert sigma0
};

std::vector<Relabeling> symmetry_group(const SymmetryOptions& opts);
FatGraph apply_relabeling(const FatGraph& g, const Relabeling& r);

// All labeled configurations under the fixed convention: alpha_i runs
// v_i -> v_{i+1 mod 4}; beta visits the vertices in one of the 6 directed
// cyclic orders starting at v_1; per vertex one of 2 slot choices for the
// beta darts.  96 candidates; those failing the configuration invariants
// are discarded.  Deterministic order.
std::vector<FillingConfiguration> enumerate_raw(int jobs = 1);

// Minimal serialized boundary-word pair over the relabeling group orbit.
std::string canonical_key(const FillingConfiguration& c,
                          const SymmetryOptions& opts = {});

struct OrbitClass {
  std::string canonical_key;
  FillingConfiguration representative;
  int member_count = 0;
  PairType type = PairType::type_8_8;
};

struct OrbitReport {
  int raw_count = 0;
  std::vector<OrbitClass> classes;  // sorted by canonical key
};

OrbitReport classify_orbits(const std::vector<FillingConfiguration>& cs,
                            const SymmetryOptions& opts = {});

// Vertex count = i(alpha, beta); equals n_darts / 4 for a 4-valent pair.
int intersection_number(const FillingConfiguration& c);

}  // namespace fillpair
