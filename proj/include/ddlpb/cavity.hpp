#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ddlpb/geometry.hpp"

// Union-of-balls solute cavity: PQR input and the discrete surface on which
// the interface problem lives.
namespace ddlpb::cavity {

struct Atom {
  Vec3 center{};
  double radius = 0.0;  // Angstrom
  double charge = 0.0;  // e
};

/// Reads ATOM/HETATM records; x, y, z, charge and radius are the last five
/// numeric columns of each record. Other records are skipped.
std::vector<Atom> parse_pqr(std::string_view text);
std::vector<Atom> read_pqr(const std::filesystem::path& path);

/// Writes atoms as ATOM records at full precision; parse_pqr reads it back exactly.
std::string serialize_pqr(std::span<const Atom> atoms);

/// Default tolerance used to decide whether a point is buried in a ball.
inline constexpr double kDefaultBuriedTolerance = 1e-10;

/// Lebedev points on every atomic sphere, with the exposure classification.
/// Point (j, n) is stored at flat index j * points_per_ball() + n.
struct SurfaceGrid {
  std::vector<Atom> atoms;
  int leb_order = 0;
  int leb_precision = 0;
  double delta = kDefaultBuriedTolerance;

  std::vector<Vec3> directions;  // unit vectors, shared by all balls
  std::vector<double> weights;   // sum to one

  std::vector<Vec3> positions;        // c_j + R_j s_n
  std::vector<std::uint8_t> exposed;  // 1 if the point lies on the cavity boundary
  std::vector<int> container;         // smallest-index ball containing a buried point, -1 if exposed

  int num_balls() const { return static_cast<int>(atoms.size()); }
  int points_per_ball() const { return static_cast<int>(directions.size()); }
  std::size_t flat(int ball, int point) const {
    return static_cast<std::size_t>(ball) * directions.size() + static_cast<std::size_t>(point);
  }
  std::size_t exposed_count() const;
  std::size_t exposed_count(int ball) const;
  /// 4 pi sum_j R_j^2 sum_n w_n e_jn.
  double exposed_area() const;
};

/// Builds the discrete surface. A point of sphere j is buried when some other
/// ball i has |x - c_i| < R_i - delta. If rotation is given, the Lebedev
/// directions are rotated by it before use.
SurfaceGrid build_surface(std::span<const Atom> atoms, int leb_order, double delta = kDefaultBuriedTolerance,
                          const std::optional<Mat3>& rotation = std::nullopt);

/// Pairs (i, j), i < j, whose balls overlap: |c_i - c_j| < R_i + R_j.
std::vector<std::pair<int, int>> neighbor_pairs(std::span<const Atom> atoms);

}  // namespace ddlpb::cavity
