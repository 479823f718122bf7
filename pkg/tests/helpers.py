"""Shared independent oracles and generators for the test suite.

The invariant-dimension oracle here acts on explicit monomial bases by
substitution, so it shares no code path with either the path-algebra
quotients or the character-theoretic counts it is used to check.
"""

from fractions import Fraction

from mckaykit.rep_theory import is_stable, random_flat_rep


def monomials(k, nvars):
    """Exponent tuples of total degree k in nvars variables."""
    if nvars == 1:
        return [(k,)]
    out = []
    for first in range(k + 1):
        for rest in monomials(k - first, nvars - 1):
            out.append((first,) + rest)
    return out


def _binomial(n, k):
    from math import comb

    return comb(n, k)


def invariant_dim_by_projector(group, k, with_z=True):
    """dim of degree-k invariants via averaged substitution matrices.

    Each group element acts on polynomials by substituting the inverse
    matrix into (x, y) and fixing z; the invariant dimension is the trace
    of the averaged action on the degree-k monomial basis.
    """
    nvars = 3 if with_z else 2
    basis = monomials(k, nvars)
    index = {m: i for i, m in enumerate(basis)}
    total = 0.0 + 0.0j
    for elem in group.elements:
        # inverse of a determinant-one 2x2 matrix
        (a, b), (c, d) = elem
        alpha, beta = d, -b
        gamma, delta = -c, a
        # trace of the action: sum over basis of the diagonal coefficient
        for mono in basis:
            if with_z:
                ea, eb, ez = mono
            else:
                ea, eb = mono
                ez = 0
            # coefficient of x^ea y^eb in (alpha x + beta y)^ea (gamma x + delta y)^eb
            coeff = 0.0 + 0.0j
            for i in range(ea + 1):
                # pick i factors of x from the first power, need ea - i from second
                j = ea - i
                if j > eb:
                    continue
                coeff += (
                    _binomial(ea, i)
                    * alpha**i
                    * beta ** (ea - i)
                    * _binomial(eb, j)
                    * gamma**j
                    * delta ** (eb - j)
                )
            total += coeff
    value = total / group.order
    assert abs(value - round(value.real)) < 1e-6, value
    return int(round(value.real))


def cyclic_invariant_count(n, k, with_z=True):
    """Monomial count for the cyclic group: x^a y^b (z^c) with a = b mod n."""
    count = 0
    czs = range(k + 1) if with_z else (0,)
    for c in czs:
        for a in range(k - c + 1):
            b = k - c - a
            if (a - b) % n == 0:
                count += 1
    return count


def flat_reps(quiver, dims, count, start_seed=0, predicate=None, max_seed=100000):
    """First ``count`` seeded flat representations (optionally filtered)."""
    out = []
    seed = start_seed
    while len(out) < count:
        if seed > max_seed:
            raise RuntimeError("seed budget exhausted")
        rep = random_flat_rep(quiver, dims, seed)
        seed += 1
        if rep is None:
            continue
        if predicate is not None and not predicate(rep):
            continue
        out.append((seed - 1, rep))
    return out


def stable_reps(quiver, dims, corner, count, start_seed=0):
    from mckaykit.quiver_core import theta_I

    theta = theta_I(corner, dims)
    return flat_reps(
        quiver, dims, count, start_seed=start_seed,
        predicate=lambda rep: is_stable(rep, theta),
    )


def conjugated_copy(rep, seed=17):
    """Base-changed copy: conjugate all maps by random invertible matrices."""
    import random

    from mckaykit.linalg import invertible, mat_mul, rref
    from mckaykit.rep_theory import QuiverRep

    rng = random.Random(seed)
    field = rep.field

    def random_invertible(n):
        while True:
            mat = tuple(
                tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
                for _ in range(n)
            )
            if invertible(field, mat):
                return mat

    def inverse(mat):
        n = len(mat)
        aug = [tuple(mat[r]) + tuple(
            field.one if c == r else field.zero for c in range(n)
        ) for r in range(n)]
        red, pivots = rref(field, aug)
        return tuple(tuple(row[n:]) for row in red)

    p = {v: random_invertible(rep.dims.get(v)) for v in rep.quiver.vertices}
    p_inv = {v: inverse(p[v]) for v in rep.quiver.vertices}
    maps = {}
    for a in rep.quiver.arrows:
        m = rep.matrix(a.id)
        m2 = mat_mul(field, p[a.tail], m, b_ncols=rep.dims.get(a.head))
        maps[a.id] = mat_mul(field, m2, p_inv[a.head],
                             b_ncols=rep.dims.get(a.head))
    return QuiverRep(quiver=rep.quiver, dims=rep.dims, maps=maps, field=field)
