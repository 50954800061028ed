#!/usr/bin/env python3
"""Regenerate src/lebedev_tables.cpp from scipy's Lebedev rules.

Weights are normalized to sum to one.
"""
import sys
from scipy.integrate import lebedev_rule

ORDERS = {6: 3, 14: 5, 26: 7, 38: 9, 50: 11, 74: 13, 86: 15, 110: 17}


def main(path):
    out = []
    out.append("// Generated by tools/gen_lebedev.py. Do not edit.\n")
    out.append('#include "ddlpb/lebedev_tables.hpp"\n\n')
    out.append("namespace ddlpb::detail {\n\nnamespace {\n\n")
    for n, deg in ORDERS.items():
        x, w = lebedev_rule(deg)
        assert x.shape[1] == n
        w = w / w.sum()
        out.append(f"constexpr LebedevNode kLeb{n}[{n}] = {{\n")
        for i in range(n):
            out.append("    {%.17g, %.17g, %.17g, %.17g},\n" % (x[0, i], x[1, i], x[2, i], w[i]))
        out.append("};\n\n")
    out.append("}  // namespace\n\n")
    out.append("const std::array<LebedevTable, %d> kLebedevTables = {{\n" % len(ORDERS))
    for n, deg in ORDERS.items():
        out.append(f"    {{{n}, {deg}, std::span<const LebedevNode>(kLeb{n})}},\n")
    out.append("}};\n\n}  // namespace ddlpb::detail\n")
    with open(path, "w") as f:
        f.write("".join(out))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/lebedev_tables.cpp")
