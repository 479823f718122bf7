"""Finite-dimensional framed quiver representations and their stability.

An arrow ``a`` acts as a linear map from the component at ``a.head`` to
the component at ``a.tail``; the matrix of ``maps[a]`` therefore has
``dims[tail]`` rows and ``dims[head]`` columns.  That single convention
is enforced in :func:`validate_shapes` and relied on everywhere else.

Stability is the usual submodule-slope inequality for a parameter that
vanishes on the total dimension.  For parameters of corner shape (one on
a vertex subset, zero elsewhere, balancing value at the framing vertex)
a fast characterisation is used: semistability means the submodule
generated by the framing component fills the corner dimensions, and
stability additionally means that submodule is everything and no nonzero
submodule avoids the corner and the framing vertex.  The characterisation
ships together with an exhaustive finite-field checker and the test
suite enforces their agreement.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadPrime,
    DimensionTooLarge,
    NotSemistable,
    RelationViolation,
    ShapeMismatch,
    UnsupportedTheta,
)
from .linalg import (
    QQ,
    Echelon,
    PrimeField,
    mat_mul,
    nullspace,
    vec_to_sparse,
    zeros,
)
from .quiver_core import INFINITY, DimVector, vertex_sort_key


@dataclass
class QuiverRep:
    """A representation: dimension vector plus one matrix per arrow."""

    quiver: object
    dims: DimVector
    maps: dict
    field: object = QQ

    def dim(self, v):
        return self.dims.get(v)

    def total_dim(self):
        return sum(self.dims.get(v) for v in self.quiver.vertices)

    def matrix(self, aid):
        a = self.quiver.arrow(aid)
        m = self.maps.get(aid)
        if m is None:
            return zeros(self.field, self.dims.get(a.tail), self.dims.get(a.head))
        return m


FramedRep = QuiverRep


def make_rep(quiver, dims, maps, field=QQ):
    rep = QuiverRep(quiver=quiver, dims=dims, maps=dict(maps), field=field)
    validate_shapes(rep)
    return rep


def validate_shapes(rep):
    """Check every matrix is dims[tail] x dims[head]; raise ShapeMismatch."""
    for a in rep.quiver.arrows:
        m = rep.maps.get(a.id)
        if m is None:
            continue
        rows = len(m)
        cols = len(m[0]) if rows else 0
        want_r, want_c = rep.dims.get(a.tail), rep.dims.get(a.head)
        if rows != want_r or (rows and cols != want_c):
            raise ShapeMismatch(
                f"arrow {a.id}: matrix is {rows}x{cols}, expected {want_r}x{want_c}"
            )
    return rep


def zero_rep(quiver, dims, field=QQ):
    maps = {
        a.id: zeros(field, dims.get(a.tail), dims.get(a.head)) for a in quiver.arrows
    }
    return QuiverRep(quiver=quiver, dims=dims, maps=maps, field=field)


def vertex_simple(quiver, v, field=QQ):
    """The one-dimensional representation concentrated at a single vertex."""
    comps = {u: (1 if u == v else 0) for u in quiver.vertices if u != INFINITY}
    at_inf = None
    if INFINITY in quiver.vertices:
        at_inf = 1 if v == INFINITY else 0
    return zero_rep(quiver, DimVector(components=comps, at_infinity=at_inf), field)


def direct_sum(a, b):
    """Blockwise direct sum of two representations of the same quiver."""
    if a.quiver != b.quiver or a.field is not b.field and a.field != b.field:
        raise ShapeMismatch("direct sum needs the same quiver and field")
    field = a.field
    comps = {
        v: a.dims.get(v) + b.dims.get(v)
        for v in a.quiver.vertices
        if v != INFINITY
    }
    at_inf = None
    if INFINITY in a.quiver.vertices:
        at_inf = a.dims.get(INFINITY) + b.dims.get(INFINITY)
    dims = DimVector(components=comps, at_infinity=at_inf)
    maps = {}
    for arr in a.quiver.arrows:
        am, bm = a.matrix(arr.id), b.matrix(arr.id)
        rt, ct = a.dims.get(arr.tail), a.dims.get(arr.head)
        rb, cb = b.dims.get(arr.tail), b.dims.get(arr.head)
        rows = []
        for r in range(rt):
            rows.append(tuple(am[r]) + tuple(field.zero for _ in range(cb)))
        for r in range(rb):
            rows.append(tuple(field.zero for _ in range(ct)) + tuple(bm[r]))
        maps[arr.id] = tuple(rows)
    return QuiverRep(quiver=a.quiver, dims=dims, maps=maps, field=field)


# ---------------------------------------------------------------------------
# relations
# ---------------------------------------------------------------------------

def check_relations(rep):
    """Signed vertex sums of two-step compositions; zero iff flat."""
    field = rep.field
    out = {}
    for v in rep.quiver.vertices:
        d = rep.dims.get(v)
        total = zeros(field, d, d)
        for a in rep.quiver.arrows_with_tail(v):
            if a.id not in rep.quiver.bar:
                continue
            prod = mat_mul(field, rep.matrix(a.id), rep.matrix(rep.quiver.bar[a.id]),
                           b_ncols=d)
            sign = rep.quiver.sign(a.id)
            total = tuple(
                tuple(
                    field.add(t, p) if sign > 0 else field.sub(t, p)
                    for t, p in zip(trow, prow)
                )
                for trow, prow in zip(total, prod)
            )
        out[v] = total
    return out


def loop_commutation_residuals(rep):
    """Residuals of loop/arrow commutation for tripled quivers."""
    field = rep.field
    out = {}
    loops = rep.quiver.loops
    for a in rep.quiver.non_loop_arrows():
        left = mat_mul(field, rep.matrix(loops[a.tail]), rep.matrix(a.id),
                       b_ncols=rep.dims.get(a.head))
        right = mat_mul(field, rep.matrix(a.id), rep.matrix(loops[a.head]),
                        b_ncols=rep.dims.get(a.head))
        out[a.id] = tuple(
            tuple(field.sub(x, y) for x, y in zip(lr, rr))
            for lr, rr in zip(left, right)
        )
    return out


def is_flat(rep):
    field = rep.field
    for mat in check_relations(rep).values():
        if any(x != field.zero for row in mat for x in row):
            return False
    if rep.quiver.is_tripled:
        for mat in loop_commutation_residuals(rep).values():
            if any(x != field.zero for row in mat for x in row):
                return False
    return True


def require_flat(rep):
    if not is_flat(rep):
        raise RelationViolation("representation does not satisfy the relations")
    return rep


# ---------------------------------------------------------------------------
# submodules
# ---------------------------------------------------------------------------

@dataclass
class SubmoduleWitness:
    """Per-vertex bases of subspaces closed under all arrow maps."""

    spaces: dict  # vertex -> tuple of basis vectors

    def dim(self, v):
        return len(self.spaces.get(v, ()))

    def dims_dict(self):
        return {v: len(rows) for v, rows in self.spaces.items()}

    def total(self):
        return sum(len(rows) for rows in self.spaces.values())

    def get(self, v):
        if v == INFINITY:
            return len(self.spaces.get(INFINITY, ()))
        return len(self.spaces.get(v, ()))


def witness_is_closed(rep, witness):
    field = rep.field
    ech = {
        v: Echelon(field) for v in rep.quiver.vertices
    }
    for v, rows in witness.spaces.items():
        for r in rows:
            ech[v].insert(vec_to_sparse(field, r))
    for a in rep.quiver.arrows:
        m = rep.matrix(a.id)
        for vec in witness.spaces.get(a.head, ()):
            img = _apply(field, m, vec)
            if not ech[a.tail].contains(vec_to_sparse(field, img)):
                return False
    return True


def _apply(field, mat, vec):
    out = []
    for row in mat:
        s = field.zero
        for x, y in zip(row, vec):
            if x != field.zero and y != field.zero:
                s = field.add(s, field.mul(x, y))
        out.append(s)
    return tuple(out)


def generated_submodule(rep, seeds):
    """Least arrow-closed family of subspaces containing the seed vectors.

    ``seeds`` maps vertices to iterables of vectors in their components.
    """
    field = rep.field
    ech = {v: Echelon(field) for v in rep.quiver.vertices}
    queue = []
    for v, vecs in seeds.items():
        for vec in vecs:
            if ech[v].insert(vec_to_sparse(field, vec)):
                queue.append((v, tuple(vec)))
    arrows_by_head = {}
    for a in rep.quiver.arrows:
        arrows_by_head.setdefault(a.head, []).append(a)
    while queue:
        v, vec = queue.pop()
        for a in arrows_by_head.get(v, ()):
            img = _apply(field, rep.matrix(a.id), vec)
            if ech[a.tail].insert(vec_to_sparse(field, img)):
                queue.append((a.tail, img))
    spaces = {}
    for v in rep.quiver.vertices:
        n = rep.dims.get(v)
        rows = []
        for piv in sorted(ech[v].rows):
            row = [field.zero] * n
            for c, val in ech[v].rows[piv].items():
                row[c] = val
            rows.append(tuple(row))
        spaces[v] = tuple(rows)
    return SubmoduleWitness(spaces=spaces)


def full_witness(rep):
    field = rep.field
    return SubmoduleWitness(
        spaces={
            v: tuple(
                tuple(field.one if i == j else field.zero for j in range(rep.dims.get(v)))
                for i in range(rep.dims.get(v))
            )
            for v in rep.quiver.vertices
        }
    )


def max_submodule_avoiding(rep, avoid):
    """Greatest submodule with zero component at every avoided vertex.

    Greatest-fixpoint iteration: start full off the avoided set, then
    repeatedly shrink each component to the vectors whose arrow images
    stay inside the current family.
    """
    field = rep.field
    avoid = set(avoid)
    basis = {}
    for v in rep.quiver.vertices:
        n = rep.dims.get(v)
        if v in avoid:
            basis[v] = []
        else:
            basis[v] = [
                tuple(field.one if i == j else field.zero for j in range(n))
                for i in range(n)
            ]
    changed = True
    while changed:
        changed = False
        for a in rep.quiver.arrows:
            src = basis[a.head]
            if not src:
                continue
            tgt = basis[a.tail]
            m = rep.matrix(a.id)
            images = [_apply(field, m, vec) for vec in src]
            d_t = rep.dims.get(a.tail)
            rows = []
            for r in range(d_t):
                rows.append(
                    tuple(img[r] for img in images)
                    + tuple(field.neg(t[r]) for t in tgt)
                )
            kept_combos = [
                combo[: len(src)] for combo in nullspace(field, rows,
                                                         ncols=len(src) + len(tgt))
            ]
            new_src = []
            ech = Echelon(field)
            for combo in kept_combos:
                vec = [field.zero] * rep.dims.get(a.head)
                for coef, bvec in zip(combo, src):
                    if coef == field.zero:
                        continue
                    for idx, x in enumerate(bvec):
                        vec[idx] = field.add(vec[idx], field.mul(coef, x))
                if ech.insert(vec_to_sparse(field, vec)):
                    new_src.append(tuple(vec))
            if len(new_src) < len(src):
                basis[a.head] = new_src
                changed = True
    return SubmoduleWitness(spaces={v: tuple(rows) for v, rows in basis.items()})


# ---------------------------------------------------------------------------
# stability
# ---------------------------------------------------------------------------

def corner_of_theta(theta, dims):
    """Recover the corner set of a corner-shaped parameter, or raise."""
    if dims.at_infinity != 1:
        raise UnsupportedTheta("fast path needs framing dimension 1")
    corner = set()
    for v, val in theta.values.items():
        if v == INFINITY:
            continue
        if val == 1:
            corner.add(v)
        elif val != 0:
            raise UnsupportedTheta(f"weight {val} at vertex {v} is not 0/1")
    if not corner:
        raise UnsupportedTheta("no vertices with weight one")
    expected = -Fraction(sum(dims.get(v) for v in corner))
    if Fraction(theta.values.get(INFINITY, 0)) != expected:
        raise UnsupportedTheta("framing weight does not balance the corner")
    return frozenset(corner)


def stability_verdict(rep, theta):
    """(semistable, stable, witness dims or None) for a corner parameter."""
    corner = corner_of_theta(theta, rep.dims)
    field = rep.field
    d_inf = rep.dims.get(INFINITY)
    seeds = {
        INFINITY: [
            tuple(field.one if i == j else field.zero for j in range(d_inf))
            for i in range(d_inf)
        ]
    }
    gen = generated_submodule(rep, seeds)
    semistable = all(gen.get(i) == rep.dims.get(i) for i in corner)
    if not semistable:
        return False, False, gen.dims_dict()
    if gen.total() != rep.total_dim():
        return True, False, gen.dims_dict()
    avoid = max_submodule_avoiding(rep, set(corner) | {INFINITY})
    if avoid.total() != 0:
        return True, False, avoid.dims_dict()
    return True, True, None


def is_semistable(rep, theta):
    return stability_verdict(rep, theta)[0]


def is_stable(rep, theta):
    return stability_verdict(rep, theta)[1]


# ---------------------------------------------------------------------------
# brute force over a prime field
# ---------------------------------------------------------------------------

BRUTE_FORCE_DIM_LIMIT = 8

_subspace_cache = {}


def subspaces_of_dimension(p, n, s):
    """Yield the s-dimensional subspaces of GF(p)^n as echelon bases."""
    import itertools

    if s == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(n), s):
        free_positions = []
        for r, pc in enumerate(pivots):
            for c in range(pc + 1, n):
                if c not in pivots:
                    free_positions.append((r, c))
        for values in itertools.product(range(p), repeat=len(free_positions)):
            rows = [[0] * n for _ in range(s)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), val in zip(free_positions, values):
                rows[r][c] = val
            yield tuple(tuple(row) for row in rows)


def all_subspaces(p, n):
    """All subspaces of GF(p)^n as canonical reduced-echelon bases."""
    key = (p, n)
    if key in _subspace_cache:
        return _subspace_cache[key]
    spaces = []
    for s in range(n + 1):
        spaces.extend(subspaces_of_dimension(p, n, s))
    _subspace_cache[key] = spaces
    return spaces


def reduce_mod_p(rep, p):
    """Entrywise reduction of a rational representation modulo p.

    Raises BadPrime when p divides any denominator; reduction is a ring
    homomorphism, so flat representations stay flat.
    """
    field = PrimeField(p)
    maps = {}
    for aid, mat in rep.maps.items():
        maps[aid] = tuple(
            tuple(field.from_fraction(x) for x in row) for row in mat
        )
    return QuiverRep(quiver=rep.quiver, dims=rep.dims, maps=maps, field=field)


def brute_force_stability(rep, theta):
    """Exhaustive stability check by enumerating all submodules.

    The representation must live over a prime field and have total
    dimension at most BRUTE_FORCE_DIM_LIMIT.  Returns
    (semistable, stable, violating dimension dicts).
    """
    if not isinstance(rep.field, PrimeField):
        raise BadPrime("brute force runs over a prime field; reduce mod p first")
    total = rep.total_dim()
    if total > BRUTE_FORCE_DIM_LIMIT:
        raise DimensionTooLarge(f"total dimension {total} > {BRUTE_FORCE_DIM_LIMIT}")
    field = rep.field
    p = field.p
    verts = sorted(rep.quiver.vertices, key=vertex_sort_key)
    choices = {v: all_subspaces(p, rep.dims.get(v)) for v in verts}
    arrows_between = [[] for _ in verts]
    pos = {v: i for i, v in enumerate(verts)}
    for a in rep.quiver.arrows:
        later = max(pos[a.tail], pos[a.head])
        arrows_between[later].append(a)

    semistable = True
    stable = True
    violations = []
    theta_total = theta(rep.dims)
    if theta_total != 0:
        semistable = stable = False
        violations.append(rep.dims.as_dict())

    assignment = {}
    ech_cache = {}

    def subspace_ech(v, basis):
        key = (v, basis)
        e = ech_cache.get(key)
        if e is None:
            e = Echelon(field)
            for row in basis:
                e.insert(vec_to_sparse(field, row))
            ech_cache[key] = e
        return e

    results = []

    def closed_here(idx):
        for a in arrows_between[idx]:
            src = assignment[a.head]
            tgt_ech = subspace_ech(a.tail, assignment[a.tail])
            m = rep.matrix(a.id)
            for vec in src:
                if not tgt_ech.contains(vec_to_sparse(field, _apply(field, m, vec))):
                    return False
        return True

    def walk(idx):
        if idx == len(verts):
            dims = {v: len(assignment[v]) for v in verts}
            results.append(dims)
            return
        v = verts[idx]
        for basis in choices[v]:
            assignment[v] = basis
            if closed_here(idx):
                walk(idx + 1)
        del assignment[v]

    walk(0)

    for dims in results:
        tot = sum(dims.values())
        if tot == 0:
            continue
        value = sum(
            Fraction(theta.values.get(v, 0)) * d for v, d in dims.items()
        )
        if value < 0:
            semistable = False
            stable = False
            violations.append(dims)
        elif value == 0 and tot < total:
            stable = False
            violations.append(dims)
    return semistable, stable, violations


# ---------------------------------------------------------------------------
# sub/quotient representations
# ---------------------------------------------------------------------------

def express_in_basis(field, basis_rows, vectors):
    """Coordinates of each vector in the given row basis (must lie in span)."""
    if not basis_rows:
        return [() for _ in vectors]
    n = len(basis_rows[0])
    rows = [
        tuple(basis_rows[b][r] for b in range(len(basis_rows))) for r in range(n)
    ]
    out = []
    from .linalg import solve

    for vec in vectors:
        sol = solve(field, rows, vec)
        if sol is None:
            raise ShapeMismatch("vector not in the subspace span")
        out.append(sol)
    return out


def restrict_rep(rep, witness):
    """The representation induced on a closed family of subspaces."""
    field = rep.field
    comps = {}
    for v in rep.quiver.vertices:
        if v != INFINITY:
            comps[v] = witness.dim(v)
    at_inf = witness.dim(INFINITY) if INFINITY in rep.quiver.vertices else None
    dims = DimVector(components=comps, at_infinity=at_inf)
    maps = {}
    for a in rep.quiver.arrows:
        src = witness.spaces.get(a.head, ())
        tgt = witness.spaces.get(a.tail, ())
        images = [_apply(field, rep.matrix(a.id), vec) for vec in src]
        coords = express_in_basis(field, list(tgt), images)
        maps[a.id] = tuple(
            tuple(coords[c][r] for c in range(len(src))) for r in range(len(tgt))
        )
    return QuiverRep(quiver=rep.quiver, dims=dims, maps=maps, field=field)


def quotient_rep(rep, witness):
    """The quotient by a closed family of subspaces."""
    field = rep.field
    proj = {}
    lift = {}
    qdim = {}
    for v in rep.quiver.vertices:
        n = rep.dims.get(v)
        sub = list(witness.spaces.get(v, ()))
        ech = Echelon(field)
        for row in sub:
            ech.insert(vec_to_sparse(field, row))
        extra = []
        for i in range(n):
            if ech.insert({i: field.one}):
                extra.append(i)
        qdim[v] = len(extra)
        combined = sub + [
            tuple(field.one if i == e else field.zero for i in range(n)) for e in extra
        ]
        cols = [tuple(combined[b][r] for b in range(len(combined))) for r in range(n)]
        from .linalg import solve

        pmat = []
        for i in range(n):
            unit = tuple(field.one if r == i else field.zero for r in range(n))
            gamma = solve(field, cols, unit)
            pmat.append(gamma[len(sub):])
        # proj[v][q][i]: q-th quotient coordinate of the i-th unit vector
        proj[v] = tuple(
            tuple(pmat[i][q] for i in range(n)) for q in range(qdim[v])
        )
        lift[v] = [
            tuple(field.one if i == e else field.zero for i in range(n)) for e in extra
        ]
    comps = {v: qdim[v] for v in rep.quiver.vertices if v != INFINITY}
    at_inf = qdim.get(INFINITY) if INFINITY in rep.quiver.vertices else None
    dims = DimVector(components=comps, at_infinity=at_inf)
    maps = {}
    for a in rep.quiver.arrows:
        cols = []
        for rep_vec in lift[a.head]:
            img = _apply(field, rep.matrix(a.id), rep_vec)
            cols.append(_apply(field, proj[a.tail], img))
        maps[a.id] = tuple(
            tuple(cols[c][r] for c in range(qdim[a.head])) for r in range(qdim[a.tail])
        )
    return QuiverRep(quiver=rep.quiver, dims=dims, maps=maps, field=field)


# ---------------------------------------------------------------------------
# polystable decomposition and isomorphism
# ---------------------------------------------------------------------------

def polystable_decomposition(rep, corner):
    """Stable core plus vertex simples, conserving the dimension vector."""
    from .quiver_core import theta_I

    corner = frozenset(corner)
    theta = theta_I(corner, rep.dims)
    semistable, _, _ = stability_verdict(rep, theta)
    if not semistable:
        raise NotSemistable("polystable decomposition needs a semistable input")
    field = rep.field
    d_inf = rep.dims.get(INFINITY)
    seeds = {
        INFINITY: [
            tuple(field.one if i == j else field.zero for j in range(d_inf))
            for i in range(d_inf)
        ]
    }
    gen = generated_submodule(rep, seeds)
    sub = restrict_rep(rep, gen)
    torsion = max_submodule_avoiding(sub, set(corner) | {INFINITY})
    core = quotient_rep(sub, torsion)
    summands = [core]
    for v in sorted(rep.quiver.plain_vertices, key=vertex_sort_key):
        if v in corner:
            continue
        for _ in range(rep.dims.get(v) - core.dims.get(v)):
            summands.append(vertex_simple(rep.quiver, v, field))
    return summands


def are_isomorphic(a, b, seed=0, tries=40):
    """Whether an invertible intertwiner exists (seeded randomised search)."""
    if a.quiver != b.quiver:
        return False
    if a.dims.as_dict() != b.dims.as_dict():
        return False
    field = a.field
    verts = sorted(a.quiver.vertices, key=vertex_sort_key)
    offsets = {}
    nvars = 0
    for v in verts:
        offsets[v] = nvars
        nvars += a.dims.get(v) ** 2
    if nvars == 0:
        return True

    rows = []
    for arr in a.quiver.arrows:
        am, bm = a.matrix(arr.id), b.matrix(arr.id)
        dt, dh = a.dims.get(arr.tail), a.dims.get(arr.head)
        # phi_tail . A - B . phi_head = 0, entry (r, c)
        for r in range(dt):
            for c in range(dh):
                row = [field.zero] * nvars
                for m in range(dt):
                    row[offsets[arr.tail] + r * dt + m] = field.add(
                        row[offsets[arr.tail] + r * dt + m], am[m][c]
                    )
                for m in range(dh):
                    row[offsets[arr.head] + m * dh + c] = field.sub(
                        row[offsets[arr.head] + m * dh + c], bm[r][m]
                    )
                rows.append(tuple(row))
    basis = nullspace(field, rows, ncols=nvars)
    if not basis:
        return False

    def blocks_of(sol):
        out = {}
        for v in verts:
            n = a.dims.get(v)
            off = offsets[v]
            out[v] = tuple(
                tuple(sol[off + r * n + c] for c in range(n)) for r in range(n)
            )
        return out

    def invertible(sol):
        from .linalg import rank

        for v in verts:
            n = a.dims.get(v)
            if n and rank(field, list(blocks_of(sol)[v])) < n:
                return False
        return True

    rng = random.Random(seed)
    candidates = []
    if len(basis) == 1:
        candidates.append(basis[0])
    for _ in range(tries):
        coeffs = [rng.randint(-3, 3) for _ in basis]
        sol = [field.zero] * nvars
        for coef, vec in zip(coeffs, basis):
            c = field.from_int(coef)
            if c == field.zero:
                continue
            for idx, x in enumerate(vec):
                if x != field.zero:
                    sol[idx] = field.add(sol[idx], field.mul(c, x))
        candidates.append(tuple(sol))
    if isinstance(field, PrimeField) and field.p ** len(basis) <= 4096:
        import itertools

        for combo in itertools.product(range(field.p), repeat=len(basis)):
            sol = [field.zero] * nvars
            for coef, vec in zip(combo, basis):
                if coef == 0:
                    continue
                for idx, x in enumerate(vec):
                    sol[idx] = field.add(sol[idx], field.mul(coef, x))
            candidates.append(tuple(sol))
    for sol in candidates:
        if invertible(sol):
            return True
    return False


def s_equivalence_classes(summand_lists, seed=0):
    """Group polystable summands into isomorphism classes (multisets).

    Input is a list of summand lists; output is a list of multisets given
    as sorted tuples of class indices, one per input list.
    """
    reps = []

    def class_index(m):
        for idx, r in enumerate(reps):
            if are_isomorphic(m, r, seed=seed):
                return idx
        reps.append(m)
        return len(reps) - 1

    out = []
    for summands in summand_lists:
        out.append(tuple(sorted(class_index(m) for m in summands)))
    return out


def s_equivalent(list_a, list_b, seed=0):
    a, b = s_equivalence_classes([list_a, list_b], seed=seed)
    return a == b


# ---------------------------------------------------------------------------
# random flat representations
# ---------------------------------------------------------------------------

def random_flat_rep(quiver, dims, seed, field=QQ, entry_range=2):
    """Seeded flat representation, or None when the seed yields nothing.

    Positively oriented arrows (and loop maps, when tripled) are sampled;
    the bar maps are then solved for exactly from the vertex relations,
    picking a seeded element of the solution space.
    """
    rng = random.Random(seed)

    def rand_entry():
        return field.from_int(rng.randint(-entry_range, entry_range))

    maps = {}
    if quiver.is_tripled:
        lam = rand_entry()
        for v, lid in quiver.loops.items():
            n = dims.get(v)
            maps[lid] = tuple(
                tuple(lam if i == j else field.zero for j in range(n))
                for i in range(n)
            )

    plus_arrows = [
        a for a in quiver.non_loop_arrows() if quiver.sign(a.id) > 0
    ]
    for a in plus_arrows:
        maps[a.id] = tuple(
            tuple(rand_entry() for _ in range(dims.get(a.head)))
            for _ in range(dims.get(a.tail))
        )

    unknown = [quiver.arrow(quiver.bar[a.id]) for a in plus_arrows]
    offsets = {}
    nvars = 0
    for a in unknown:
        offsets[a.id] = nvars
        nvars += dims.get(a.tail) * dims.get(a.head)

    rows = []
    for v in quiver.vertices:
        d = dims.get(v)
        for r in range(d):
            for c in range(d):
                row = [field.zero] * nvars
                for a in quiver.arrows_with_tail(v):
                    if a.id not in quiver.bar:
                        continue
                    partner = quiver.bar[a.id]
                    if quiver.sign(a.id) > 0:
                        # known @ unknown: coefficient K[r, m] on U[m, c]
                        known = maps[a.id]
                        db = dims.get(a.head)
                        for m in range(db):
                            idx = offsets[partner] + m * d + c
                            row[idx] = field.add(row[idx], known[r][m])
                    else:
                        # -(unknown @ known): coefficient -K[m, c] on U[r, m]
                        known = maps[partner]
                        db = dims.get(a.head)
                        for m in range(db):
                            idx = offsets[a.id] + r * db + m
                            row[idx] = field.sub(row[idx], known[m][c])
                if any(x != field.zero for x in row):
                    rows.append(tuple(row))

    basis = nullspace(field, rows, ncols=nvars) if nvars else []
    sol = [field.zero] * nvars
    for vec in basis:
        coef = field.from_int(rng.randint(-entry_range, entry_range))
        if coef == field.zero:
            continue
        for idx, x in enumerate(vec):
            if x != field.zero:
                sol[idx] = field.add(sol[idx], field.mul(coef, x))
    for a in unknown:
        dt, dh = dims.get(a.tail), dims.get(a.head)
        off = offsets[a.id]
        maps[a.id] = tuple(
            tuple(sol[off + r * dh + c] for c in range(dh)) for r in range(dt)
        )
    rep = QuiverRep(quiver=quiver, dims=dims, maps=maps, field=field)
    if not is_flat(rep):
        return None
    return rep
