"""Regenerate the curated E-series character tables.

Builds the binary tetrahedral, octahedral and icosahedral groups from
quaternion generators, recomputes their character tables from scratch,
permutes the rows into the canonical affine Dynkin order and writes the
result to ``src/mckaykit/_e_tables.py``.

Run from the repository root:  python tools/generate_e_tables.py
"""

import math
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from mckaykit import dynkin
from mckaykit.gamma_data import (
    _mat2_trace,
    closure,
    dixon_character_table,
    _raw_multiplicities,
)


def quat(a, b, c, d):
    """Unit quaternion a + bi + cj + dk as an SU(2) matrix."""
    return ((a + b * 1j, c + d * 1j), (-c + d * 1j, a - b * 1j))


PHI = (1 + math.sqrt(5)) / 2

GENERATORS = {
    6: [quat(0, 1, 0, 0), quat(-0.5, 0.5, 0.5, 0.5)],
    7: [quat(0, 1, 0, 0), quat(-0.5, 0.5, 0.5, 0.5),
        quat(1 / math.sqrt(2), 1 / math.sqrt(2), 0, 0)],
    8: [quat(0, 1, 0, 0), quat(PHI / 2, 1 / (2 * PHI), 0.5, 0)],
}

EXPECTED_ORDER = {6: 24, 7: 48, 8: 120}


def build_table(rank):
    elements = closure(GENERATORS[rank])
    assert len(elements) == EXPECTED_ORDER[rank], (rank, len(elements))
    rows, sizes, class_of, reps = dixon_character_table(elements)
    chi_v = tuple(_mat2_trace(elements[r]) for r in reps)
    dims = [int(round(row[0].real)) for row in rows]
    assert all(abs(row[0] - d) < 1e-8 for row, d in zip(rows, dims))
    assert sum(d * d for d in dims) == len(elements)

    mult, trivial = _raw_multiplicities(rows, sizes, chi_v, len(elements))
    perm = dynkin.match_layout(mult, dims, trivial, "E", rank)
    ordered = [None] * len(rows)
    for i, slot in enumerate(perm):
        ordered[slot] = rows[i]

    def clean(z):
        re = 0.0 if abs(z.real) < 1e-12 else z.real
        im = 0.0 if abs(z.imag) < 1e-12 else z.imag
        return complex(re, im)

    return {
        "order": len(elements),
        "class_sizes": sizes,
        "irrep_dims": tuple(int(round(r[0].real)) for r in ordered),
        "chi_v": tuple(clean(z) for z in chi_v),
        "characters": tuple(tuple(clean(z) for z in row) for row in ordered),
    }


def main():
    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "mckaykit" / "_e_tables.py"
    chunks = [
        '"""Curated character tables for the E-series binary polyhedral groups.',
        "",
        "Generated by tools/generate_e_tables.py from quaternion generator",
        "closures; rows follow the canonical affine Dynkin vertex order.",
        "Do not edit by hand.",
        '"""',
        "",
        "E_TABLES = {",
    ]
    for rank in (6, 7, 8):
        table = build_table(rank)
        chunks.append(f"    {rank}: {{")
        chunks.append(f"        \"order\": {table['order']},")
        chunks.append(f"        \"class_sizes\": {table['class_sizes']!r},")
        chunks.append(f"        \"irrep_dims\": {table['irrep_dims']!r},")
        chunks.append(f"        \"chi_v\": {table['chi_v']!r},")
        chunks.append("        \"characters\": (")
        for row in table["characters"]:
            chunks.append(f"            {row!r},")
        chunks.append("        ),")
        chunks.append("    },")
        print(f"E{rank}: order {table['order']}, dims {table['irrep_dims']}")
    chunks.append("}")
    out.write_text("\n".join(chunks) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
