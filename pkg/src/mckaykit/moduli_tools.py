"""Sufficiency calculus, chamber pushforwards, cyclic ADHM data, and the
quotient-scheme correspondence check.

Sufficiency of a dimension vector means that away from the chosen corner
every vertex dominates half its multiplicity-weighted neighbour sum; its
least completion, here computed as an integer least fixpoint, bounds the
dimension vector of any stable framed module from above.  The chamber
pushforward re-decomposes a stable module as a stable core plus vertex
simples; composing pushforwards along nested corners is checked (in the
tests) to agree with the direct pushforward up to summand isomorphism.
"""

from fractions import Fraction

from .corner_functors import (
    cornered_hom_space,
    generation_degree,
    hom_blocks,
    pi_context,
    _seeded_combinations,
    CorneredModule,
)
from .errors import (
    EmptyI,
    InvariantViolation,
    MomentMapNonzero,
    NoTermination,
    NotAQuotient,
    NotEquivariant,
    NotStable,
    NotStableForSource,
)
from .graded_algebra import factor_through_bound, _expand_path_on
from .linalg import QQ, mat_mul, rank, zeros
from .quiver_core import (
    INFINITY,
    DimVector,
    frame_quiver,
    mckay_quiver,
    theta_I,
)
from .rep_theory import QuiverRep, polystable_decomposition, stability_verdict

FIXPOINT_ITERATION_CAP = 10000
QUOT_TRUNCATION_WINDOW = 4


def is_sufficient(v, corner, quiver):
    """Twice each non-corner entry dominates its weighted neighbour sum."""
    corner = frozenset(corner)
    for i in quiver.plain_vertices:
        if i in corner:
            continue
        nbr = sum(
            quiver.pair_count(i, j) * v.get(j) for j in quiver.plain_vertices
        )
        if 2 * v.get(i) < nbr:
            return False
    return True


def minimal_sufficient_completion(v_corner, corner, quiver):
    """Componentwise-least sufficient extension of corner values.

    Integer least fixpoint of v_i <- ceil(neighbour sum / 2) on the
    non-corner vertices, starting from zero.
    """
    corner = frozenset(corner)
    if not corner:
        raise EmptyI("corner set must be nonempty")
    values = {}
    for i in quiver.plain_vertices:
        values[i] = v_corner.get(i, 0) if i in corner else 0
    free = [i for i in quiver.plain_vertices if i not in corner]
    for _ in range(FIXPOINT_ITERATION_CAP):
        changed = False
        for i in free:
            nbr = sum(
                quiver.pair_count(i, j) * values[j] for j in quiver.plain_vertices
            )
            need = (nbr + 1) // 2
            if need > values[i]:
                values[i] = need
                changed = True
        if not changed:
            return DimVector(components=values)
    raise NoTermination("least-fixpoint iteration exceeded its cap")


def dimension_bound_check(rep, corner):
    """Stable framed dimensions never exceed the least sufficient completion."""
    corner = frozenset(corner)
    theta = theta_I(corner, rep.dims)
    _, stable, _ = stability_verdict(rep, theta)
    if not stable:
        raise NotStable("dimension bound applies to stable modules")
    base = mckay_quiver(_group_of(rep.quiver))
    v_hat = minimal_sufficient_completion(
        rep.dims.restrict(corner), corner, base
    )
    return all(rep.dims.get(i) <= v_hat.get(i) for i in base.plain_vertices)


def _group_of(quiver):
    from .gamma_data import build_group

    if quiver.group is None:
        raise InvariantViolation("quiver carries no group label")
    return build_group(quiver.group)


# ---------------------------------------------------------------------------
# variation of GIT pushforward
# ---------------------------------------------------------------------------

def vgit_pushforward(rep, source_corner, target_corner):
    """Polystable re-decomposition when shrinking the corner set.

    The input must be stable for the source corner; the output is the
    stable core for the target corner padded with vertex simples so the
    total dimension vector is conserved.
    """
    source = frozenset(source_corner)
    target = frozenset(target_corner)
    if not target:
        raise EmptyI("target corner must be nonempty")
    if not target <= source:
        raise NotStableForSource("target corner must be contained in the source")
    theta_src = theta_I(source, rep.dims)
    _, stable, _ = stability_verdict(rep, theta_src)
    if not stable:
        raise NotStableForSource("input is not stable for the source corner")
    summands = polystable_decomposition(rep, target)
    conserved = {}
    for m in summands:
        for v, d in m.dims.as_dict().items():
            conserved[v] = conserved.get(v, 0) + d
    if conserved != rep.dims.as_dict():
        raise InvariantViolation("pushforward broke dimension conservation")
    return summands


def vgit_push_list(summands, source_corner, target_corner):
    """Push a polystable summand list along a smaller corner.

    The unique summand with framing dimension one is pushed; vertex
    simples are carried over unchanged.
    """
    out = []
    pushed = False
    for m in summands:
        if m.dims.get(INFINITY) == 1:
            if pushed:
                raise InvariantViolation("two framed summands in one list")
            out.extend(vgit_pushforward(m, source_corner, target_corner))
            pushed = True
        else:
            out.append(m)
    if not pushed:
        raise InvariantViolation("no framed summand to push")
    return out


# ---------------------------------------------------------------------------
# equivariant ADHM data for the cyclic series
# ---------------------------------------------------------------------------

def adhm_build_cyclic(g, b1, b2, i_vec, j_vec, weights, framing_weights):
    """Split weighted ADHM data into a flat framed representation.

    Weights grade the total space by characters of the cyclic group; b1
    lowers the weight by one, b2 raises it, and the framing maps preserve
    it.  The commutator of b1 and b2 plus i_vec . j_vec must vanish; the
    resulting framed module satisfies the vertex relations exactly.
    """
    if g.descriptor.series != "A":
        raise NotEquivariant("equivariant splitting is implemented for series A")
    n = g.order
    dim_v = len(weights)
    dim_w = len(framing_weights)
    weights = [w % n for w in weights]
    framing_weights = [w % n for w in framing_weights]

    b1 = _fraction_matrix(b1, dim_v, dim_v, "B1")
    b2 = _fraction_matrix(b2, dim_v, dim_v, "B2")
    i_vec = _fraction_matrix(i_vec, dim_v, dim_w, "i")
    j_vec = _fraction_matrix(j_vec, dim_w, dim_v, "j")

    _check_equivariance(b1, weights, weights, -1, n, "B1")
    _check_equivariance(b2, weights, weights, +1, n, "B2")
    _check_equivariance(i_vec, weights, framing_weights, 0, n, "i")
    _check_equivariance(j_vec, framing_weights, weights, 0, n, "j")

    comm = _mat_sub(
        mat_mul(QQ, b1, b2, b_ncols=dim_v), mat_mul(QQ, b2, b1, b_ncols=dim_v)
    )
    moment = _mat_add(comm, mat_mul(QQ, i_vec, j_vec, b_ncols=dim_v))
    if any(x != 0 for row in moment for x in row):
        raise MomentMapNonzero("[B1, B2] + i.j is nonzero")

    positions = {m: [p for p, w in enumerate(weights) if w == m] for m in range(n)}
    fpositions = {m: [p for p, w in enumerate(framing_weights) if w == m]
                  for m in range(n)}
    w_mult = {m: len(fpositions[m]) for m in range(n)}

    base = mckay_quiver(g)
    quiver = frame_quiver(base, w_mult)
    comps = {m: len(positions[m]) for m in range(n)}
    dims = DimVector(components=comps, at_infinity=dim_w)

    maps = {}
    if n == 1:
        raise NotEquivariant("rank 0 cyclic group is outside the classification")

    def block(mat, rows, cols):
        return tuple(tuple(mat[r][c] for c in cols) for r in rows)

    for edge_index in range(len(base.arrows) // 2):
        plus = base.arrows[2 * edge_index]
        minus = base.arrows[2 * edge_index + 1]
        m = plus.tail  # cyclic orientation: plus arrow is m -> m+1
        m_next = plus.head
        # plus acts on components at its head: B1 lowers m+1 -> m
        maps[plus.id] = block(b1, positions[m], positions[m_next])
        maps[minus.id] = block(b2, positions[m_next], positions[m])

    framing_pairs = [a for a in quiver.arrows if a.head == INFINITY]
    seen = {m: 0 for m in range(n)}
    for a in framing_pairs:
        m = a.tail
        p = fpositions[m][seen[m]]
        seen[m] += 1
        maps[a.id] = tuple(
            (i_vec[r][p],) if dim_w == 1 else
            tuple(i_vec[r][pp] if pp == p else Fraction(0) for pp in range(dim_w))
            for r in positions[m]
        )
        maps[quiver.bar[a.id]] = _j_row_block(j_vec, p, positions[m], dim_w)

    rep = QuiverRep(quiver=quiver, dims=dims, maps=maps, field=QQ)
    from .rep_theory import check_relations

    for mat in check_relations(rep).values():
        if any(x != 0 for row in mat for x in row):
            raise InvariantViolation("equivariant splitting broke the relations")
    return rep


def _j_row_block(j_vec, p, cols, dim_w):
    row = tuple(j_vec[p][c] for c in cols)
    if dim_w == 1:
        return (row,)
    return tuple(
        row if pp == p else tuple(Fraction(0) for _ in cols) for pp in range(dim_w)
    )


def _fraction_matrix(mat, nrows, ncols, name):
    mat = [list(row) for row in mat]
    if len(mat) != nrows or any(len(row) != ncols for row in mat):
        raise NotEquivariant(f"{name} must be {nrows}x{ncols}")
    return tuple(tuple(Fraction(x) for x in row) for row in mat)


def _check_equivariance(mat, row_weights, col_weights, shift, n, name):
    for r, row in enumerate(mat):
        for c, x in enumerate(row):
            if x != 0 and (row_weights[r] - col_weights[c] - shift) % n != 0:
                raise NotEquivariant(
                    f"{name}[{r}][{c}] nonzero violates the weight grading"
                )


def _mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


# ---------------------------------------------------------------------------
# quotient-scheme correspondence
# ---------------------------------------------------------------------------

def quot_truncation_degree(g, corner):
    """Certified truncation degree for the corner column of the plain flavor."""
    return factor_through_bound(g, corner) + QUOT_TRUNCATION_WINDOW


def truncated_corner_column(g, corner, bound=None, field=QQ):
    """The degree-truncated column e_I . Pi . e_0 as a cornered module.

    Left multiplication by corner classes acts; products beyond the
    truncation degree are zero.  Loops act as zero (plain flavor).
    """
    corner = frozenset(corner)
    if not corner:
        raise EmptyI("corner set must be nonempty")
    if bound is None:
        bound = quot_truncation_degree(g, corner)
    ctx = pi_context(g)
    gen_deg = generation_degree(g, corner)

    coords = {i: [] for i in sorted(corner)}
    for k in range(bound + 1):
        layer = ctx.layer(0, k)
        for i in sorted(corner):
            for c in layer.by_vertex.get(i, ()):
                coords[i].append((k, c))
    dims = {i: len(coords[i]) for i in sorted(corner)}
    index = {i: {kc: t for t, kc in enumerate(coords[i])} for i in sorted(corner)}

    def convert(x):
        return field.from_fraction(x) if field is not QQ else x

    actions = {}
    for d in range(1, gen_deg + 1):
        for i in sorted(corner):
            for j in sorted(corner):
                mats = []
                class_paths = ctx.slice_basis_paths(i, j, d)
                from .graded_algebra import slice_class_basis

                for cls in slice_class_basis(ctx, i, j, d):
                    rows = [[field.zero] * dims[j] for _ in range(dims[i])]
                    for col, (k, c) in enumerate(coords[j]):
                        if k + d > bound:
                            continue
                        acc = {}
                        for coeff, path in zip(cls.coeffs, class_paths):
                            if not coeff:
                                continue
                            vec = _expand_path_on(
                                ctx, path, {c: Fraction(1)}, 0, k
                            )
                            for c2, val in vec.items():
                                acc[c2] = acc.get(c2, Fraction(0)) + coeff * val
                        for c2, val in acc.items():
                            if val:
                                r = index[i][(k + d, c2)]
                                rows[r][col] = convert(val)
                    mats.append(tuple(tuple(row) for row in rows))
                actions[(d, i, j)] = mats

    z_mats = {i: zeros(field, dims[i], dims[i]) for i in sorted(corner)}
    return CorneredModule(
        group=g,
        corner=corner,
        dims=dims,
        z_mats=z_mats,
        actions=actions,
        gen_degree=gen_deg,
        field=field,
    )


def check_quot_correspondence(qmod, corner, g, seed=0, tries=60):
    """Certify a cornered module as a quotient of the truncated column.

    Solves for module homomorphisms from the degree-truncated column onto
    the candidate and searches the solution space for a surjection
    (exhaustively over a small prime-field space, seeded otherwise).
    Returns the candidate's dimension vector or raises NotAQuotient.
    """
    corner = frozenset(corner)
    if qmod.corner != corner or qmod.group.descriptor != g.descriptor:
        raise InvariantViolation("candidate module does not match group/corner")
    dims = DimVector(components={v: qmod.dim(v) for v in sorted(corner)})
    if qmod.total_dim() == 0:
        return dims
    column = truncated_corner_column(g, corner, field=qmod.field)
    for i in sorted(corner):
        if qmod.dim(i) > column.dim(i):
            raise NotAQuotient(
                f"component {i} exceeds the truncated column dimension"
            )
    basis, offsets, verts = cornered_hom_space(column, qmod)
    if not basis:
        raise NotAQuotient("no homomorphisms from the truncated column")
    field = qmod.field
    for sol in _seeded_combinations(field, basis, seed, tries):
        blocks = hom_blocks(column, qmod, sol, offsets, verts)
        if all(
            rank(field, list(blocks[v])) == qmod.dim(v)
            for v in verts
            if qmod.dim(v)
        ):
            return dims
    raise NotAQuotient("no surjection found at the certified truncation")
