"""Curated character tables for the E-series binary polyhedral groups.

Generated by tools/generate_e_tables.py from quaternion generator
closures; rows follow the canonical affine Dynkin vertex order.
Do not edit by hand.
"""

E_TABLES = {
    6: {
        "order": 24,
        "class_sizes": (1, 6, 4, 1, 4, 4, 4),
        "irrep_dims": (1, 2, 3, 2, 1, 2, 1),
        "chi_v": ((2+0j), 0j, (-1+0j), (-2+0j), (-1+0j), (1+0j), (1+0j)),
        "characters": (
            ((1+0j), (1+0j), (0.9999999999999999+0j), (1+0j), (0.9999999999999997+0j), (0.9999999999999999+0j), (0.9999999999999997+0j)),
            ((2.0000000000000018+0j), 0j, (-1+0j), (-1.9999999999999996+0j), (-0.9999999999999998+0j), (0.9999999999999993+0j), (0.9999999999999999+0j)),
            ((2.9999999999999996+0j), (-1.0000000000000002+0j), 0j, (2.9999999999999987+0j), 0j, 0j, 0j),
            ((2.0000000000000013+0j), 0j, (0.500000000000001+0.8660254037844374j), (-2+0j), (0.49999999999999917-0.8660254037844389j), (-0.500000000000001-0.8660254037844384j), (-0.4999999999999989+0.8660254037844389j)),
            ((1.0000000000000007+0j), (1+0j), (-0.5000000000000001-0.866025403784438j), (0.9999999999999998+0j), (-0.5000000000000001+0.8660254037844386j), (-0.5000000000000003-0.8660254037844382j), (-0.49999999999999994+0.8660254037844389j)),
            ((1.9999999999999993+0j), 0j, (0.5000000000000004-0.8660254037844384j), (-1.999999999999999+0j), (0.5000000000000006+0.8660254037844386j), (-0.5000000000000002+0.8660254037844386j), (-0.5000000000000006-0.8660254037844382j)),
            ((1.0000000000000004+0j), (1+0j), (-0.49999999999999845+0.8660254037844393j), (0.9999999999999998+0j), (-0.5000000000000009-0.8660254037844383j), (-0.49999999999999967+0.8660254037844389j), (-0.5000000000000016-0.8660254037844379j)),
        ),
    },
    7: {
        "order": 48,
        "class_sizes": (1, 6, 8, 6, 1, 6, 8, 12),
        "irrep_dims": (1, 2, 3, 4, 3, 2, 1, 2),
        "chi_v": ((2+0j), 0j, (-1+0j), (1.414213562373095+0j), (-2+0j), (-1.414213562373095+0j), (1+0j), 0j),
        "characters": (
            ((1.0000000000000007+0j), (1.0000000000000002+0j), (1+0j), (0.9999999999999997+0j), (1.0000000000000002+0j), (0.9999999999999993+0j), (0.9999999999999999+0j), (0.9999999999999993+0j)),
            ((2+0j), 0j, (-1.0000000000000009+0j), (1.4142135623730936+0j), (-1.9999999999999993+0j), (-1.4142135623730943+0j), (1.0000000000000009+0j), 0j),
            ((3.000000000000005+0j), (-0.9999999999999998+0j), 0j, (0.9999999999999993+0j), (2.9999999999999947+0j), (0.9999999999999993+0j), 0j, (-1.0000000000000007+0j)),
            ((4.000000000000002+0j), 0j, (0.9999999999999999+0j), 0j, (-3.9999999999999996+0j), 0j, (-0.9999999999999996+0j), 0j),
            ((3.000000000000001+0j), (-1.0000000000000002+0j), 0j, (-0.9999999999999983+0j), (2.999999999999997+0j), (-0.9999999999999998+0j), 0j, (1.0000000000000007+0j)),
            ((2.0000000000000018+0j), 0j, (-0.9999999999999994+0j), (-1.414213562373095+0j), (-2.0000000000000004+0j), (1.4142135623730945+0j), (0.9999999999999999+0j), 0j),
            ((1.0000000000000016+0j), (1.0000000000000009+0j), (1+0j), (-0.9999999999999992+0j), (0.9999999999999998+0j), (-0.9999999999999989+0j), (1.0000000000000002+0j), (-0.9999999999999998+0j)),
            ((2.000000000000001+0j), (1.9999999999999987+0j), (-0.9999999999999994+0j), 0j, (2.0000000000000004+0j), 0j, (-1.0000000000000007+0j), 0j),
        ),
    },
    8: {
        "order": 120,
        "class_sizes": (1, 30, 12, 1, 12, 12, 12, 20, 20),
        "irrep_dims": (1, 2, 3, 4, 5, 6, 4, 2, 3),
        "chi_v": ((2+0j), 0j, (1.618033988749895+0j), (-2+0j), (-0.6180339887498948+0j), (0.6180339887498949+0j), (-1.618033988749895+0j), (-0.9999999999999999+0j), (0.9999999999999999+0j)),
        "characters": (
            ((1.0000000000000007+0j), (0.9999999999999997+0j), (1.0000000000000004+0j), (0.9999999999999999+0j), (0.9999999999999997+0j), (0.9999999999999997+0j), (0.9999999999999997+0j), (0.9999999999999997+0j), (1.0000000000000002+0j)),
            ((2.000000000000001+0j), 0j, (1.6180339887498942+0j), (-1.9999999999999991+0j), (-0.6180339887498969+0j), (0.6180339887498955+0j), (-1.618033988749895+0j), (-0.9999999999999993+0j), (0.9999999999999997+0j)),
            ((3.000000000000004+0j), (-1.0000000000000009+0j), (1.6180339887498945+0j), (2.9999999999999956+0j), (-0.6180339887498956+0j), (-0.6180339887498966+0j), (1.6180339887498933+0j), 0j, 0j),
            ((4.000000000000002+0j), 0j, (0.9999999999999996+0j), (-3.9999999999999982+0j), (1+0j), (-0.9999999999999996+0j), (-0.9999999999999993+0j), (1+0j), (-0.9999999999999996+0j)),
            ((5+0j), (1.0000000000000004+0j), 0j, (4.999999999999997+0j), 0j, 0j, 0j, (-1+0j), (-0.9999999999999999+0j)),
            ((6.000000000000003+0j), 0j, (-0.9999999999999993+0j), (-5.999999999999998+0j), (-1.0000000000000013+0j), (0.9999999999999983+0j), (1.0000000000000004+0j), 0j, 0j),
            ((4+0j), 0j, (-0.9999999999999993+0j), (3.999999999999998+0j), (-1+0j), (-1.0000000000000004+0j), (-0.9999999999999988+0j), (1.0000000000000002+0j), (1+0j)),
            ((2.000000000000002+0j), 0j, (-0.6180339887498952+0j), (-2+0j), (1.6180339887498942+0j), (-1.6180339887498945+0j), (0.6180339887498952+0j), (-0.9999999999999999+0j), (1+0j)),
            ((3.000000000000005+0j), (-1.0000000000000002+0j), (-0.6180339887498955+0j), (3.000000000000003+0j), (1.618033988749894+0j), (1.6180339887498933+0j), (-0.6180339887498959+0j), 0j, 0j),
        ),
    },
}
