"""File formats: quivers, framed modules, truncated graded modules, ADHM data.

All rational entries serialize as "p/q" strings (never floats).  Vertex
keys serialize as strings, with "inf" for the framing vertex.  Parsing
and serialising round-trip byte-identically under sorted-key JSON.
"""

import json
from fractions import Fraction

from .errors import InvalidDescriptor, MckayError
from .linalg import QQ
from .quiver_core import (
    INFINITY,
    Arrow,
    DimVector,
    Quiver,
    frame_quiver,
    mckay_quiver,
    triple_quiver,
)


def fraction_to_str(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def str_to_fraction(s):
    return Fraction(s)


def vertex_to_key(v):
    return INFINITY if v == INFINITY else str(v)


def key_to_vertex(k):
    return INFINITY if k == INFINITY else int(k)


# ---------------------------------------------------------------------------
# quivers
# ---------------------------------------------------------------------------

def quiver_to_dict(q):
    out = {
        "group": q.group,
        "vertices": [vertex_to_key(v) for v in q.vertices],
        "arrows": [
            {
                "id": a.id,
                "tail": vertex_to_key(a.tail),
                "head": vertex_to_key(a.head),
                "bar": q.bar.get(a.id),
            }
            for a in q.arrows
        ],
        "loops": {vertex_to_key(v): aid for v, aid in sorted(
            q.loops.items(), key=lambda t: vertex_to_key(t[0]))},
    }
    if q.framing is not None:
        out["framing"] = {
            vertex_to_key(v): w for v, w in sorted(
                q.framing.items(), key=lambda t: vertex_to_key(t[0]))
        }
    return out


def quiver_from_dict(data):
    arrows = tuple(
        Arrow(a["id"], key_to_vertex(a["tail"]), key_to_vertex(a["head"]))
        for a in data["arrows"]
    )
    bar = {a["id"]: a["bar"] for a in data["arrows"] if a.get("bar") is not None}
    framing = None
    if data.get("framing") is not None:
        framing = {key_to_vertex(k): w for k, w in data["framing"].items()}
    return Quiver(
        vertices=tuple(key_to_vertex(v) for v in data["vertices"]),
        arrows=arrows,
        bar=bar,
        loops={key_to_vertex(k): aid for k, aid in data.get("loops", {}).items()},
        framing=framing,
        group=data.get("group"),
    )


def resolve_quiver(data):
    """Either an explicit quiver object or a descriptor shorthand.

    Shorthand: {"group": "A2", "frame": {"0": 1} or [1, 0, 0],
    "triple": false}.
    """
    if "arrows" in data:
        return quiver_from_dict(data)
    from .gamma_data import build_group

    if "group" not in data:
        raise InvalidDescriptor("quiver shorthand needs a group label")
    q = mckay_quiver(build_group(data["group"]))
    if data.get("triple"):
        q = triple_quiver(q)
    if "frame" in data and data["frame"] is not None:
        w = data["frame"]
        if isinstance(w, dict):
            w = {key_to_vertex(k): int(x) for k, x in w.items()}
        else:
            w = {i: int(x) for i, x in enumerate(w)}
        q = frame_quiver(q, w)
    return q


# ---------------------------------------------------------------------------
# framed modules
# ---------------------------------------------------------------------------

def matrix_to_lists(mat):
    return [[fraction_to_str(x) for x in row] for row in mat]


def matrix_from_lists(rows):
    return tuple(tuple(str_to_fraction(x) for x in row) for row in rows)


def rep_to_dict(rep):
    dims = {
        vertex_to_key(v): rep.dims.get(v)
        for v in rep.quiver.vertices
    }
    return {
        "quiver": quiver_to_dict(rep.quiver),
        "dims": dims,
        "maps": {
            str(aid): matrix_to_lists(rep.matrix(aid))
            for aid in sorted(a.id for a in rep.quiver.arrows)
        },
    }


def rep_from_dict(data):
    from .rep_theory import QuiverRep, validate_shapes

    quiver = resolve_quiver(data["quiver"])
    raw_dims = {key_to_vertex(k): int(v) for k, v in data["dims"].items()}
    comps = {v: raw_dims.get(v, 0) for v in quiver.vertices if v != INFINITY}
    at_inf = raw_dims.get(INFINITY) if INFINITY in quiver.vertices else None
    dims = DimVector(components=comps, at_infinity=at_inf)
    maps = {}
    for key, rows in data.get("maps", {}).items():
        maps[int(key)] = matrix_from_lists(rows)
    rep = QuiverRep(quiver=quiver, dims=dims, maps=maps, field=QQ)
    validate_shapes(rep)
    return rep


# ---------------------------------------------------------------------------
# truncated graded modules
# ---------------------------------------------------------------------------

def tgm_to_dict(m):
    return {
        "kind": m.kind_label,
        "window": list(m.window),
        "vertices": [vertex_to_key(v) for v in m.vertices],
        "dims": {
            f"{k}:{vertex_to_key(v)}": d for (k, v), d in sorted(
                m.dims.items(), key=lambda t: (t[0][0], vertex_to_key(t[0][1]))
            )
        },
        "gens": {
            gid: {
                "src": vertex_to_key(src),
                "dst": vertex_to_key(dst),
                "z": is_z,
            }
            for gid, (src, dst, is_z) in sorted(m.gens.items())
        },
        "actions": {
            gid: {str(k): matrix_to_lists(mat) for k, mat in sorted(acts.items())}
            for gid, acts in sorted(m.actions.items())
        },
    }


def tgm_from_dict(data):
    from .corner_functors import TruncatedGradedModule

    dims = {}
    for key, d in data["dims"].items():
        kstr, vstr = key.split(":")
        dims[(int(kstr), key_to_vertex(vstr))] = int(d)
    gens = {
        gid: (key_to_vertex(g["src"]), key_to_vertex(g["dst"]), bool(g["z"]))
        for gid, g in data["gens"].items()
    }
    actions = {
        gid: {int(k): matrix_from_lists(mat) for k, mat in acts.items()}
        for gid, acts in data.get("actions", {}).items()
    }
    return TruncatedGradedModule(
        kind_label=data["kind"],
        window=tuple(data["window"]),
        vertices=tuple(key_to_vertex(v) for v in data["vertices"]),
        dims=dims,
        gens=gens,
        actions=actions,
        field=QQ,
    )


# ---------------------------------------------------------------------------
# graded slices
# ---------------------------------------------------------------------------

def slice_to_dict(sl):
    """Dump a graded slice as {"paths", "relation_rank", "dim"}."""
    return {
        "i": vertex_to_key(sl.i),
        "j": vertex_to_key(sl.j),
        "degree": sl.k,
        "paths": [list(p) for p in sl.path_basis],
        "relation_rank": sl.relation_rank,
        "dim": sl.dim,
    }


# ---------------------------------------------------------------------------
# ADHM input
# ---------------------------------------------------------------------------

def adhm_from_dict(data):
    """Parse {"group","B1","B2","i","j","weights","framing_weights"}."""
    from .gamma_data import build_group, parse_descriptor

    desc = parse_descriptor(data["group"])
    if desc.series != "A":
        raise InvalidDescriptor("equivariant ADHM data needs a cyclic group")
    g = build_group(desc)

    def mat(key):
        return [[str_to_fraction(str(x)) for x in row] for row in data[key]]

    return {
        "group": g,
        "b1": mat("B1"),
        "b2": mat("B2"),
        "i_vec": mat("i"),
        "j_vec": mat("j"),
        "weights": [int(x) for x in data["weights"]],
        "framing_weights": [int(x) for x in data["framing_weights"]],
    }


# ---------------------------------------------------------------------------
# file helpers
# ---------------------------------------------------------------------------

def dump_json(obj, path=None):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path is None:
        return text
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MckayError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
