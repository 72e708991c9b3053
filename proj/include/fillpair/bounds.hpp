#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace fillpair {

// Admissible face-degree configuration of a filling pair on genus two:
// f faces with even sizes 4k_i + j_i (k_i >= 1, j_i in {0,2}) summing to
// 4(f+2), matching exactly one excess pattern.
struct FaceConfig {
  int f = 0;
  std::vector<int> sizes;  // ascending
  // one of "four-j2", "one-k2-two-j2", "two-k2", "one-k3",
  // or "exceptional-hexagons" for {6,6,6,6}
  std::string case_tag;
  // {6,10}: admissible by the side arithmetic but ruled out topologically
  // (no minimal filling pair of type {6,10} exists).  Receives no
  // certificate.
  bool topologically_excluded = false;
};

struct BoundCertificate {
  FaceConfig config;
  std::array<int, 2> merged_pair{};   // side counts after merging, sum 16
  std::array<double, 2> area_split{};  // areas at the certifying optimum, sum 4 pi
  double bound = 0.0;                 // length lower bound
  std::string rule_applied;
};

// All FaceConfigs with 2 <= f <= f_max (a filling pair on genus two has at
// least two complementary disks).
std::vector<FaceConfig> enumerate_face_configs(int f_max);

// Fix the face at fixed_index (must have 4k sides, k in {1,2,3}) and merge
// the remaining f-1 faces along a spread spanning tree: each glued edge
// removes 2 raw sides and flattens 2 vertices, leaving a (16-4k)-gon.
// Returns (4k, 16-4k).  Throws NotApplicableError if the face size is not a
// multiple of 4.
std::pair<int, int> merge_sides(const FaceConfig& config, int fixed_index);

// Certificate for one configuration:
//   {6,6,6,6}               -> two merged octagons, bound 8 acosh(1+sqrt2);
//   separating flag         -> two octagons via the spread spanning forest;
//   otherwise fix a 4k face -> k=2 gives the octagon-pair bound,
//                              k in {1,3} the quadrilateral bound L0.
// Throws NotApplicableError for the topologically excluded {6,10}.
BoundCertificate bound_for(const FaceConfig& config, bool separating = false);

struct GlobalBound {
  double bound = 0.0;
  std::vector<BoundCertificate> certificates;
};

// Minimum certificate bound over all configurations with f <= f_max
// (f_max >= 2); equals L0 = 6 acosh(7/2), attained by {4,12}.
GlobalBound global_bound(int f_max);

}  // namespace fillpair
