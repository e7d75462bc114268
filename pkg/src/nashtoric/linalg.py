"""Exact integer linear algebra on plain tuples.

Vectors are tuples of ints; matrices are row-major tuples of row tuples.
Everything is arbitrary precision, nothing here ever touches floats.
"""

from math import gcd

from .errors import CharacteristicError, DimensionError


def vec(coords):
    return tuple(int(c) for c in coords)


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(M):
    return tuple(tuple(col) for col in zip(*M))


def columns_matrix(vectors):
    """Matrix whose j-th column is the j-th vector."""
    vectors = tuple(vectors)
    d = len(vectors[0])
    return tuple(tuple(v[i] for v in vectors) for i in range(d))


def mat_vec(M, v):
    return tuple(dot(row, v) for row in M)


def mat_mul(A, B):
    Bt = tuple(zip(*B))
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def primitive(v):
    """Divide a vector by the gcd of its entries, keeping direction."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic Miller-Rabin for anything a characteristic could be
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def validate_characteristic(p) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise CharacteristicError(f"characteristic must be an integer, got {p!r}")
    if p == 0:
        return 0
    if p < 0 or not is_prime(p):
        raise CharacteristicError(f"characteristic must be 0 or a prime, got {p}")
    return p


def det(M) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(M)
    for row in M:
        if len(row) != n:
            raise DimensionError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row = a[i]
            top = a[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by the Bareiss identity
                row[j] = (pivot * row[j] - aik * top[j]) // prev
            row[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_mod(M, p: int) -> int:
    d = det(M)
    if p == 0:
        return d
    return d % p


def rank(M) -> int:
    if not M:
        return 0
    a = [list(row) for row in M]
    m = len(a)
    n = len(a[0])
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, m):
            if a[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        top = a[r]
        for i in range(r + 1, m):
            x = a[i][c]
            if x:
                p = top[c]
                row = a[i]
                new = [p * row[j] - x * top[j] for j in range(n)]
                g = 0
                for y in new:
                    g = gcd(g, y)
                if g > 1:
                    new = [y // g for y in new]
                a[i] = new
        r += 1
        if r == m:
            break
    return r


def xgcd(a: int, b: int):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def smith_normal_form(M):
    """Return (U, D, V) with U*M*V = D.

    U and V are unimodular; D is diagonal with nonnegative entries and
    each diagonal entry divides the next.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    for row in M:
        if len(row) != n:
            raise DimensionError("ragged matrix")
    A = [list(row) for row in M]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        srow = A[src]
        drow = A[dst]
        for k in range(n):
            drow[k] += c * srow[k]
        srow = U[src]
        drow = U[dst]
        for k in range(m):
            drow[k] += c * srow[k]

    def add_col(src, dst, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            changed = False
            for i in range(t + 1, m):
                x = A[i][t]
                if x:
                    add_row(t, i, -(x // A[t][t]))
                    if A[i][t]:
                        # remainder became the smaller pivot
                        swap_rows(t, i)
                        changed = True
            if changed:
                continue
            for j in range(t + 1, n):
                x = A[t][j]
                if x:
                    add_col(t, j, -(x // A[t][t]))
                    if A[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            pivot = A[t][t]
            violator = None
            for i in range(t + 1, m):
                row = A[i]
                for j in range(t + 1, n):
                    if row[j] % pivot:
                        violator = i
                        break
                if violator is not None:
                    break
            if violator is None:
                break
            # pull the non-divisible row up so the pivot shrinks to a gcd
            add_row(violator, t, 1)
    for t in range(min(m, n)):
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    to_t = lambda rows: tuple(tuple(r) for r in rows)
    return to_t(U), to_t(A), to_t(V)


def invariant_factors(M):
    _, D, _ = smith_normal_form(M)
    out = []
    for t in range(min(len(D), len(D[0]) if D else 0)):
        if D[t][t]:
            out.append(D[t][t])
    return tuple(out)


def kernel_basis(A):
    """Basis of the saturated integer kernel of A, as an n x c matrix.

    Columns are the basis vectors, lexicographically sorted with first
    nonzero entry positive, so output is canonical.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    _, D, V = smith_normal_form(A)
    r = 0
    for t in range(min(m, n)):
        if D[t][t]:
            r += 1
    cols = []
    for j in range(r, n):
        v = tuple(V[i][j] for i in range(n))
        for x in v:
            if x:
                if x < 0:
                    v = vneg(v)
                break
        cols.append(v)
    cols.sort()
    return tuple(tuple(col[i] for col in cols) for i in range(n))


def group_is_full_lattice(vectors, dim: int) -> bool:
    """True iff the vectors generate all of Z^dim as a group.

    Incremental triangular reduction; bails out early once the running
    lattice index hits 1, which keeps huge generator lists cheap.
    """
    basis = {}
    for cand in vectors:
        v = list(cand)
        for k in range(dim):
            if not v[k]:
                continue
            b = basis.get(k)
            if b is None:
                if v[k] < 0:
                    v = [-x for x in v]
                basis[k] = v
                v = None
                break
            g, x, y = xgcd(b[k], v[k])
            bk = b[k] // g
            vk = v[k] // g
            basis[k] = [x * b[i] + y * v[i] for i in range(dim)]
            v = [bk * v[i] - vk * b[i] for i in range(dim)]
        if len(basis) == dim:
            index = 1
            for k in range(dim):
                index *= basis[k][k]
            if index == 1:
                return True
    if len(basis) < dim:
        return False
    index = 1
    for k in range(dim):
        index *= basis[k][k]
    return index == 1


def adjugate(M):
    """Adjugate matrix: M * adjugate(M) == det(M) * identity."""
    d = len(M)
    if d == 0:
        return ()
    if d == 1:
        return ((1,),)
    idx = range(d)
    adj = [[0] * d for _ in idx]
    for i in idx:
        for j in idx:
            minor = tuple(
                tuple(M[r][c] for c in idx if c != j) for r in idx if r != i
            )
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return tuple(tuple(row) for row in adj)
