#include "fillpair/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fillpair/errors.hpp"
#include "fillpair/hypgeom.hpp"
#include "fillpair/numeric.hpp"
#include "fillpair/quadopt.hpp"

namespace fillpair {

namespace {

bool is_hexagon_quad(const std::vector<int>& sizes) {
  return sizes == std::vector<int>{6, 6, 6, 6};
}

FaceConfig make_config(int f, std::vector<int> sizes, std::string tag) {
  std::sort(sizes.begin(), sizes.end());
  FaceConfig c;
  c.f = f;
  c.topologically_excluded = sizes == std::vector<int>{6, 10};
  if (is_hexagon_quad(sizes)) tag = "exceptional-hexagons";
  c.sizes = std::move(sizes);
  c.case_tag = std::move(tag);
  return c;
}

double octagon_pair_bound() {
  static const double cached = length_bound_88();
  return cached;
}

double quad_family_bound() {
  static const double cached = length_bound_412();
  return cached;
}

}  // namespace

std::vector<FaceConfig> enumerate_face_configs(int f_max) {
  if (f_max < 1) throw DomainError("enumerate_face_configs: need f_max >= 1");
  std::vector<FaceConfig> out;
  // A filling pair on genus two has at least two complementary disks.
  for (int f = 2; f <= f_max; ++f) {
    std::vector<FaceConfig> at_f;
    if (f >= 4) {
      std::vector<int> sizes(static_cast<std::size_t>(f - 4), 4);
      sizes.insert(sizes.end(), {6, 6, 6, 6});
      at_f.push_back(make_config(f, std::move(sizes), "four-j2"));
    }
    {
      std::vector<int> sizes(static_cast<std::size_t>(f - 2), 4);
      sizes.insert(sizes.end(), {6, 10});
      at_f.push_back(make_config(f, std::move(sizes), "one-k2-two-j2"));
    }
    if (f >= 3) {
      std::vector<int> sizes(static_cast<std::size_t>(f - 3), 4);
      sizes.insert(sizes.end(), {6, 6, 8});
      at_f.push_back(make_config(f, std::move(sizes), "one-k2-two-j2"));
    }
    {
      std::vector<int> sizes(static_cast<std::size_t>(f - 2), 4);
      sizes.insert(sizes.end(), {8, 8});
      at_f.push_back(make_config(f, std::move(sizes), "two-k2"));
    }
    {
      std::vector<int> sizes(static_cast<std::size_t>(f - 1), 4);
      sizes.push_back(12);
      at_f.push_back(make_config(f, std::move(sizes), "one-k3"));
    }
    std::sort(at_f.begin(), at_f.end(),
              [](const FaceConfig& a, const FaceConfig& b) {
                return a.sizes < b.sizes;
              });
    for (auto& c : at_f) out.push_back(std::move(c));
  }
  return out;
}

std::pair<int, int> merge_sides(const FaceConfig& config, int fixed_index) {
  if (fixed_index < 0 || fixed_index >= static_cast<int>(config.sizes.size()))
    throw DomainError("merge_sides: fixed_index out of range");
  const int size = config.sizes[static_cast<std::size_t>(fixed_index)];
  if (size % 4 != 0)
    throw NotApplicableError("merge_sides: fixed face must have 4k sides");
  // total remaining sides 4(f+2) - 4k over f-1 faces, minus 4 per tree edge
  // (f-2 edges): 16 - 4k
  return {size, 16 - size};
}

BoundCertificate bound_for(const FaceConfig& config, bool separating) {
  BoundCertificate cert;
  cert.config = config;

  if (config.topologically_excluded)
    throw NotApplicableError(
        "bound_for: {6,10} is excluded topologically and carries no "
        "certificate");

  if (is_hexagon_quad(config.sizes)) {
    // pair up the hexagons and glue each pair along a common side: the two
    // flattened vertices turn each pair into an octagon
    cert.merged_pair = {8, 8};
    cert.area_split = {2.0 * kPi, 2.0 * kPi};
    cert.bound = octagon_pair_bound();
    cert.rule_applied = "hexagon-pairing-octagons";
    return cert;
  }
  if (separating) {
    // both curves separating: spread spanning forest with two components
    // merges the faces into two octagons
    cert.merged_pair = {8, 8};
    cert.area_split = {2.0 * kPi, 2.0 * kPi};
    cert.bound = octagon_pair_bound();
    cert.rule_applied = "separating-forest-octagons";
    return cert;
  }

  // fix a 4k face; prefer k = 2 (stronger octagon-pair bound)
  int fixed = -1;
  for (std::size_t i = 0; i < config.sizes.size() && fixed < 0; ++i)
    if (config.sizes[i] == 8) fixed = static_cast<int>(i);
  for (std::size_t i = 0; i < config.sizes.size() && fixed < 0; ++i)
    if (config.sizes[i] % 4 == 0) fixed = static_cast<int>(i);
  if (fixed < 0)
    throw NotApplicableError("bound_for: no 4k-sided face to fix");

  cert.merged_pair = {merge_sides(config, fixed).first,
                      merge_sides(config, fixed).second};
  if (cert.merged_pair[0] == 8) {
    cert.area_split = {2.0 * kPi, 2.0 * kPi};
    cert.bound = octagon_pair_bound();
    cert.rule_applied = "merge-to-octagon-pair";
  } else {
    // merged pair (4,12) or (12,4): the quadrilateral family; areas at the
    // certifying optimum theta* = acos(1/5)
    const double theta_star = std::acos(0.2);
    const double quad_area = 2.0 * kPi - 4.0 * theta_star;
    const double a0 = cert.merged_pair[0] == 4 ? quad_area : 4.0 * kPi - quad_area;
    cert.area_split = {a0, 4.0 * kPi - a0};
    cert.bound = quad_family_bound();
    cert.rule_applied = "merge-to-quad-twelve";
  }
  return cert;
}

GlobalBound global_bound(int f_max) {
  if (f_max < 2) throw DomainError("global_bound: need f_max >= 2");
  GlobalBound out;
  out.bound = std::numeric_limits<double>::infinity();
  for (const auto& config : enumerate_face_configs(f_max)) {
    if (config.topologically_excluded) continue;
    BoundCertificate cert = bound_for(config);
    out.bound = std::min(out.bound, cert.bound);
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

}  // namespace fillpair
