#include "ddlpb/cavity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ddlpb/error.hpp"
#include "ddlpb/specfun.hpp"

namespace ddlpb::cavity {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<double> to_double(std::string_view tok) {
  double v = 0.0;
  const auto* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

std::vector<Atom> parse_pqr(std::string_view text) {
  std::vector<Atom> atoms;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || (tok[0] != "ATOM" && tok[0] != "HETATM")) {
      if (eol == text.size()) break;
      continue;
    }
    if (tok.size() < 6) {
      throw Error("PQR line " + std::to_string(line_no) + ": record has fewer than five numeric fields");
    }
    double f[5];
    for (int k = 0; k < 5; ++k) {
      const auto& t = tok[tok.size() - 5 + static_cast<std::size_t>(k)];
      const auto v = to_double(t);
      if (!v) throw Error("PQR line " + std::to_string(line_no) + ": non-numeric field '" + std::string(t) + "'");
      f[k] = *v;
    }
    if (!(f[4] > 0.0)) throw Error("PQR line " + std::to_string(line_no) + ": radius must be positive");
    atoms.push_back({{f[0], f[1], f[2]}, f[4], f[3]});
    if (eol == text.size()) break;
  }
  if (atoms.empty()) throw Error("PQR input contains no atoms");
  return atoms;
}

std::vector<Atom> read_pqr(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open PQR file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pqr(ss.str());
}

std::string serialize_pqr(std::span<const Atom> atoms) {
  std::ostringstream out;
  out.precision(17);
  int serial = 1;
  for (const auto& a : atoms) {
    out << "ATOM " << serial << " X RES " << serial << ' ' << a.center[0] << ' ' << a.center[1] << ' '
        << a.center[2] << ' ' << a.charge << ' ' << a.radius << '\n';
    ++serial;
  }
  out << "END\n";
  return out.str();
}

std::size_t SurfaceGrid::exposed_count() const {
  return static_cast<std::size_t>(std::count(exposed.begin(), exposed.end(), std::uint8_t{1}));
}

std::size_t SurfaceGrid::exposed_count(int ball) const {
  const auto first = exposed.begin() + static_cast<std::ptrdiff_t>(flat(ball, 0));
  return static_cast<std::size_t>(std::count(first, first + points_per_ball(), std::uint8_t{1}));
}

double SurfaceGrid::exposed_area() const {
  double area = 0.0;
  for (int j = 0; j < num_balls(); ++j) {
    double s = 0.0;
    for (int n = 0; n < points_per_ball(); ++n) {
      if (exposed[flat(j, n)]) s += weights[static_cast<std::size_t>(n)];
    }
    area += 4.0 * std::numbers::pi * atoms[static_cast<std::size_t>(j)].radius *
            atoms[static_cast<std::size_t>(j)].radius * s;
  }
  return area;
}

std::vector<std::pair<int, int>> neighbor_pairs(std::span<const Atom> atoms) {
  // Cell list with edge 2 * max radius; overlapping balls sit in adjacent cells.
  std::vector<std::pair<int, int>> pairs;
  if (atoms.size() < 2) return pairs;
  double rmax = 0.0;
  Vec3 lo = atoms[0].center;
  for (const auto& a : atoms) {
    rmax = std::max(rmax, a.radius);
    for (int d = 0; d < 3; ++d) lo[static_cast<std::size_t>(d)] = std::min(lo[static_cast<std::size_t>(d)], a.center[static_cast<std::size_t>(d)]);
  }
  const double edge = 2.0 * rmax;
  auto cell_of = [&](const Vec3& c) {
    return std::array<long, 3>{static_cast<long>(std::floor((c[0] - lo[0]) / edge)),
                               static_cast<long>(std::floor((c[1] - lo[1]) / edge)),
                               static_cast<long>(std::floor((c[2] - lo[2]) / edge))};
  };
  std::vector<std::pair<std::array<long, 3>, int>> cells;
  cells.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) cells.emplace_back(cell_of(atoms[i].center), static_cast<int>(i));
  std::sort(cells.begin(), cells.end());

  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto ci = cell_of(atoms[i].center);
    for (long dx = -1; dx <= 1; ++dx) {
      for (long dy = -1; dy <= 1; ++dy) {
        for (long dz = -1; dz <= 1; ++dz) {
          const std::array<long, 3> key{ci[0] + dx, ci[1] + dy, ci[2] + dz};
          auto it = std::lower_bound(cells.begin(), cells.end(), std::make_pair(key, -1));
          for (; it != cells.end() && it->first == key; ++it) {
            const auto j = static_cast<std::size_t>(it->second);
            if (j <= i) continue;
            if (distance(atoms[i].center, atoms[j].center) < atoms[i].radius + atoms[j].radius) {
              pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
          }
        }
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

SurfaceGrid build_surface(std::span<const Atom> atoms, int leb_order, double delta,
                          const std::optional<Mat3>& rotation) {
  if (atoms.empty()) throw Error("build_surface: no atoms");
  if (!(delta >= 0.0)) throw Error("build_surface: delta must be non-negative");
  for (const auto& a : atoms) {
    if (!(a.radius > 0.0)) throw Error("build_surface: radius must be positive");
  }

  const auto grid = specfun::lebedev_grid(leb_order);
  SurfaceGrid s;
  s.atoms.assign(atoms.begin(), atoms.end());
  s.leb_order = grid.order;
  s.leb_precision = grid.precision;
  s.delta = delta;
  s.weights = grid.weights;
  s.directions = grid.points;
  if (rotation) {
    for (auto& d : s.directions) {
      d = ddlpb::apply(*rotation, d);
      d = (1.0 / norm(d)) * d;
    }
  }

  const auto pairs = neighbor_pairs(atoms);
  std::vector<std::vector<int>> neighbors(atoms.size());
  for (const auto& [i, j] : pairs) {
    const auto& a = atoms[static_cast<std::size_t>(i)];
    const auto& b = atoms[static_cast<std::size_t>(j)];
    if (a.center == b.center && a.radius == b.radius) {
      throw Error("build_surface: atoms " + std::to_string(i) + " and " + std::to_string(j) +
                  " are identical balls");
    }
    neighbors[static_cast<std::size_t>(i)].push_back(j);
    neighbors[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& nb : neighbors) std::sort(nb.begin(), nb.end());

  const int nballs = s.num_balls();
  const int npts = s.points_per_ball();
  const std::size_t total = static_cast<std::size_t>(nballs) * static_cast<std::size_t>(npts);
  s.positions.resize(total);
  s.exposed.resize(total);
  s.container.resize(total);

#pragma omp parallel for schedule(static)
  for (int j = 0; j < nballs; ++j) {
    const auto& aj = atoms[static_cast<std::size_t>(j)];
    for (int n = 0; n < npts; ++n) {
      const std::size_t idx = s.flat(j, n);
      const Vec3 x = aj.center + aj.radius * s.directions[static_cast<std::size_t>(n)];
      s.positions[idx] = x;
      int owner = -1;
      for (int i : neighbors[static_cast<std::size_t>(j)]) {
        const auto& ai = atoms[static_cast<std::size_t>(i)];
        if (distance(x, ai.center) < ai.radius - delta) {
          owner = i;
          break;
        }
      }
      s.container[idx] = owner;
      s.exposed[idx] = owner < 0 ? 1 : 0;
    }
  }
  return s;
}

}  // namespace ddlpb::cavity
