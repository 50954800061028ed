#pragma once

#include <array>
#include <span>

namespace ddlpb::detail {

struct LebedevNode {
  double x, y, z, w;
};

struct LebedevTable {
  int order;
  int precision;
  std::span<const LebedevNode> nodes;
};

extern const std::array<LebedevTable, 8> kLebedevTables;

}  // namespace ddlpb::detail
