"""Exact linear algebra over the rationals and over prime fields.

All core computations in the toolkit run over an exact field: ``QQ``
(Python ``Fraction``) for construction and graded dimensions, ``GF(p)``
for brute-force enumerations.  Matrices are immutable tuples of row
tuples; the zero-row and zero-column cases are legal, so shape arguments
are passed explicitly where they cannot be inferred.
"""

from fractions import Fraction

from .errors import BadPrime


class RationalField:
    """Field of rationals; elements are ``Fraction`` instances."""

    zero = Fraction(0)
    one = Fraction(1)
    name = "QQ"

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def from_fraction(fr):
        return Fraction(fr)

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a small prime p; elements are ints in ``range(p)``."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise BadPrime(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p
        self.name = f"GF({p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, fr):
        fr = Fraction(fr)
        if fr.denominator % self.p == 0:
            raise BadPrime(f"denominator {fr.denominator} divisible by {self.p}")
        return (fr.numerator % self.p) * self.inv(fr.denominator % self.p) % self.p

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


# ---------------------------------------------------------------------------
# dense matrix helpers
# ---------------------------------------------------------------------------

def zeros(field, nrows, ncols):
    return tuple(tuple(field.zero for _ in range(ncols)) for _ in range(nrows))


def identity(field, n):
    return tuple(
        tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
    )


def mat_from_rows(field, rows):
    return tuple(tuple(field.from_fraction(x) if field is QQ else field.from_int(x)
                       for x in row) for row in rows)


def mat_add(field, a, b):
    return tuple(tuple(field.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(field, a, b):
    return tuple(tuple(field.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(field, c, a):
    return tuple(tuple(field.mul(c, x) for x in row) for row in a)


def mat_mul(field, a, b, b_ncols=None):
    """Product a @ b.  ``b_ncols`` is required when ``b`` has no rows."""
    if b:
        b_ncols = len(b[0])
    if b_ncols is None:
        raise ValueError("b_ncols required for an empty middle dimension")
    zero = field.zero
    out = []
    for row in a:
        acc = [zero] * b_ncols
        for x, brow in zip(row, b):
            if x == zero:
                continue
            for j, y in enumerate(brow):
                if y != zero:
                    acc[j] = field.add(acc[j], field.mul(x, y))
        out.append(tuple(acc))
    return tuple(out)


def mat_vec(field, a, v):
    zero = field.zero
    out = []
    for row in a:
        s = zero
        for x, y in zip(row, v):
            if x != zero and y != zero:
                s = field.add(s, field.mul(x, y))
        out.append(s)
    return tuple(out)


def transpose(a, ncols=None):
    if a:
        ncols = len(a[0])
    if ncols is None:
        raise ValueError("ncols required for an empty matrix")
    return tuple(tuple(row[j] for row in a) for j in range(ncols))


def is_zero_matrix(field, a):
    return all(x == field.zero for row in a for x in row)


# ---------------------------------------------------------------------------
# echelon accumulation (sparse rows keyed by column index)
# ---------------------------------------------------------------------------

class Echelon:
    """Incremental row echelon basis over an exact field.

    Rows are sparse dicts ``{column: value}``; the pivot of a row is its
    smallest column index, and stored rows are normalised to pivot value 1.
    Feeding vectors one by one yields rank and span-membership tests.
    """

    def __init__(self, field):
        self.field = field
        self.rows = {}  # pivot column -> sparse row

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return ``vec`` reduced against the stored rows (a new dict)."""
        field = self.field
        zero = field.zero
        work = {c: v for c, v in vec.items() if v != zero}
        while work:
            piv = min(work)
            row = self.rows.get(piv)
            if row is None:
                return work
            coef = work[piv]
            for c, v in row.items():
                nv = field.sub(work.get(c, zero), field.mul(coef, v))
                if nv == zero:
                    work.pop(c, None)
                else:
                    work[c] = nv
        return work

    def insert(self, vec):
        """Reduce and store ``vec``; return True if it enlarged the span."""
        red = self.reduce(vec)
        if not red:
            return False
        piv = min(red)
        inv = self.field.inv(red[piv])
        self.rows[piv] = {c: self.field.mul(inv, v) for c, v in red.items()}
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def pivot_columns(self):
        return sorted(self.rows)


def vec_to_sparse(field, vec):
    return {i: x for i, x in enumerate(vec) if x != field.zero}


def sparse_to_dense(field, vec, n):
    out = [field.zero] * n
    for c, v in vec.items():
        out[c] = v
    return tuple(out)


# ---------------------------------------------------------------------------
# dense elimination: rref, rank, solve, nullspace
# ---------------------------------------------------------------------------

def rref(field, rows):
    """Reduced row echelon form.  Returns (rows, pivot column list)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(mat)):
            if mat[i][c] != field.zero:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != field.zero:
                coef = mat[i][c]
                mat[i] = [field.sub(x, field.mul(coef, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(field, rows):
    return len(rref(field, rows)[0])


def solve(field, a, b):
    """One solution x of A x = b, or None if inconsistent.

    ``a`` is a list of rows; ``b`` a vector of matching length.
    """
    if not a:
        return ()
    ncols = len(a[0])
    aug = [tuple(row) + (bv,) for row, bv in zip(a, b)]
    red, pivots = rref(field, aug)
    x = [field.zero] * ncols
    for row, p in zip(red, pivots):
        if p == ncols:
            return None  # pivot in augmented column: inconsistent
        x[p] = row[ncols]
    return tuple(x)


def nullspace(field, a, ncols=None):
    """Basis of the right kernel of A (list of vectors)."""
    if a:
        ncols = len(a[0])
    if ncols is None:
        raise ValueError("ncols required for an empty matrix")
    red, pivots = rref(field, a)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, p in zip(red, pivots):
            v[p] = field.neg(row[f])
        basis.append(tuple(v))
    return basis


def column_space_basis(field, vectors):
    """Subset-echelon basis of the span of the given vectors."""
    ech = Echelon(field)
    kept = []
    for v in vectors:
        if ech.insert(vec_to_sparse(field, v)):
            kept.append(tuple(v))
    return kept


def extend_to_basis(field, vectors, n):
    """Indices of standard basis vectors completing ``vectors`` to F^n."""
    ech = Echelon(field)
    for v in vectors:
        ech.insert(vec_to_sparse(field, v))
    extra = []
    for i in range(n):
        if ech.insert({i: field.one}):
            extra.append(i)
    return extra


def invertible(field, a):
    n = len(a)
    return n == 0 or (len(a[0]) == n and rank(field, a) == n)
