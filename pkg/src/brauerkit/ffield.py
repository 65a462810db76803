"""Exact arithmetic in GF(p^n) and dense linear algebra over it.

Field elements are encoded as integers below q = p^n: the element
sum_i c_i * x^i (a residue modulo the defining polynomial) is stored as
sum_i c_i * p^i.  Matrices are plain numpy integer arrays whose entries
are such encodings; every operation goes through a :class:`FieldSpec`,
which owns the modulus and (for small q) cached arithmetic tables.

Polynomials over the field are tuples/arrays of encoded coefficients,
constant term first, with no trailing zeros except for the zero
polynomial ().
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

# q*q arithmetic tables are built below this field order; larger fields
# fall back to vectorized digit-plane arithmetic.
_TABLE_CAP = 512

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit integers."""
    if m < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % sp == 0:
            return m == sp
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class FieldSpec:
    """An explicit finite field GF(p^n) with a chosen defining polynomial.

    The defining polynomial is given constant-first over GF(p), monic of
    degree n, and must be irreducible; it is validated at construction.
    Two FieldSpecs are equal iff (p, n, defining_poly) coincide.
    """

    __slots__ = ("p", "n", "q", "defining_poly", "dtype", "_tables", "_red")

    def __init__(self, p: int, n: int = 1, defining_poly: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if n < 1:
            raise ValueError("degree must be positive")
        q = p**n
        if q >= 2**63:
            raise ValueError("field order must fit in a 64-bit integer")
        if defining_poly is None:
            defining_poly = default_irreducible(p, n)
        poly = tuple(int(c) % p for c in defining_poly)
        if len(poly) != n + 1 or poly[-1] != 1:
            raise ValueError("defining polynomial must be monic of degree n")
        self.p = p
        self.n = n
        self.q = q
        self.defining_poly = poly
        self.dtype = np.int64 if q < 2**31 else object
        self._tables = None
        # reduction matrix: row m holds the coefficients of x^m mod f, m < 2n-1
        red = np.zeros((max(2 * n - 1, n), n), dtype=np.int64)
        for m in range(red.shape[0]):
            red[m] = _xpow_mod(p, poly, m)
        self._red = red
        if n > 1 and not _poly_irreducible_prime_field(p, poly):
            raise ValueError("defining polynomial is reducible")

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.n, self.defining_poly) == (other.p, other.n, other.defining_poly)
        )

    def __hash__(self):
        return hash((self.p, self.n, self.defining_poly))

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n}:{','.join(map(str, self.defining_poly))})"

    # -- element digit helpers ---------------------------------------------
    def _digits(self, a):
        """Base-p digit planes, shape a.shape + (n,)."""
        a = np.asarray(a)
        out = np.empty(a.shape + (self.n,), dtype=self.dtype)
        rem = a.copy()
        for i in range(self.n):
            out[..., i] = rem % self.p
            rem = rem // self.p
        return out

    def _undigits(self, d):
        pw = self.p ** np.arange(self.n, dtype=np.int64)
        if self.dtype is object:
            pw = pw.astype(object)
        return (d * pw).sum(axis=-1)

    def _build_tables(self):
        q, p, n = self.q, self.p, self.n
        elems = np.arange(q, dtype=np.int64)
        dig = self._digits(elems)  # (q, n)
        add = self._undigits((dig[:, None, :] + dig[None, :, :]) % p)
        neg = self._undigits((-dig) % p)
        if n == 1:
            mul = elems[:, None] * elems[None, :] % p
        else:
            conv = np.zeros((q, q, 2 * n - 1), dtype=np.int64)
            for i in range(n):
                for j in range(n):
                    conv[:, :, i + j] += dig[:, i, None] * dig[None, :, j]
            conv %= p
            mul = self._undigits(conv @ self._red % p)
        inv = np.zeros(q, dtype=np.int64)
        acc = np.ones(q, dtype=np.int64)
        e = q - 2
        base = elems.copy()
        while e:
            if e & 1:
                acc = mul[acc, base]
            base = mul[base, base]
            e >>= 1
        inv[1:] = acc[1:]
        # x^p via square-and-multiply on the whole element vector
        frob = np.ones(q, dtype=np.int64)
        e, base = p, elems.copy()
        while e:
            if e & 1:
                frob = mul[frob, base]
            base = mul[base, base]
            e >>= 1
        self._tables = (add, neg, mul, inv, frob)

    @property
    def tables(self):
        if self._tables is None and self.q <= _TABLE_CAP:
            self._build_tables()
        return self._tables

    # -- elementwise arithmetic (ints or numpy arrays, broadcasting) --------
    def add(self, a, b):
        t = self.tables
        if t is not None:
            return t[0][np.asarray(a), np.asarray(b)]
        if self.n == 1:
            return (np.asarray(a, dtype=self.dtype) + np.asarray(b, dtype=self.dtype)) % self.p
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        return self._undigits((self._digits(a) + self._digits(b)) % self.p)

    def neg(self, a):
        t = self.tables
        if t is not None:
            return t[1][np.asarray(a)]
        if self.n == 1:
            return (-np.asarray(a, dtype=self.dtype)) % self.p
        return self._undigits((-self._digits(np.asarray(a))) % self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        t = self.tables
        if t is not None:
            return t[2][np.asarray(a), np.asarray(b)]
        if self.n == 1:
            return (np.asarray(a, dtype=self.dtype) * np.asarray(b, dtype=self.dtype)) % self.p
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        da, db = self._digits(a), self._digits(b)
        conv = np.zeros(a.shape + (2 * self.n - 1,), dtype=self.dtype)
        for i in range(self.n):
            for j in range(self.n):
                conv[..., i + j] += da[..., i] * db[..., j]
        conv %= self.p
        return self._undigits(conv @ self._red % self.p)

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in GF(q)")
        t = self.tables
        if t is not None:
            return t[3][a]
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        e = int(e)
        if e < 0:
            a, e = self.inv(a), -e
        acc = np.full(np.asarray(a).shape, 1, dtype=self.dtype)
        base = np.asarray(a).copy()
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def frob(self, a, k: int = 1):
        """k-fold Frobenius a^(p^k)."""
        k = k % self.n if self.n > 1 else 0
        if k == 0:
            return np.asarray(a).copy()
        t = self.tables
        out = np.asarray(a).copy()
        if t is not None:
            for _ in range(k):
                out = t[4][out]
            return out
        return self.pow(a, self.p**k)

    def frob_inv(self, a, k: int = 1):
        return self.frob(a, (self.n - (k % self.n)) % self.n)

    # -- matrices ------------------------------------------------------------
    def zeros(self, r: int, c: int):
        return np.zeros((r, c), dtype=self.dtype)

    def identity(self, d: int):
        m = self.zeros(d, d)
        for i in range(d):
            m[i, i] = 1
        return m

    def matmul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        if self.n == 1:
            return (a.astype(self.dtype) @ b.astype(self.dtype)) % self.p
        da = [(a // self.p**i) % self.p for i in range(self.n)]
        db = [(b // self.p**i) % self.p for i in range(self.n)]
        conv = [None] * (2 * self.n - 1)
        for i in range(self.n):
            for j in range(self.n):
                prod = da[i] @ db[j]
                m = i + j
                conv[m] = prod if conv[m] is None else conv[m] + prod
        dig = np.zeros(conv[0].shape + (self.n,), dtype=self.dtype)
        for m in range(2 * self.n - 1):
            cm = conv[m] % self.p
            for k in range(self.n):
                if self._red[m, k]:
                    dig[..., k] += self._red[m, k] * cm
        dig %= self.p
        return self._undigits(dig)

    def matvec(self, a, v):
        return self.matmul(a, np.asarray(v).reshape(-1, 1)).reshape(-1)

    def kron(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        out = self.mul(a[:, None, :, None], b[None, :, None, :])
        return out.reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])

    def rref(self, m):
        """Reduced row-echelon form; returns (rref matrix, pivot column tuple)."""
        m = np.array(m, dtype=self.dtype)
        if m.ndim != 2:
            raise ValueError("rref expects a matrix")
        rows, cols = m.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r >= rows:
                break
            nz = np.nonzero(m[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                m[[r, i]] = m[[i, r]]
            pv = m[r, c]
            if pv != 1:
                m[r] = self.mul(self.inv(pv), m[r])
            others = np.nonzero(m[:, c])[0]
            others = others[others != r]
            if others.size:
                m[others] = self.sub(m[others], self.mul(m[others, c][:, None], m[r][None, :]))
            pivots.append(c)
            r += 1
        return m[: len(pivots)], tuple(pivots)

    def rank(self, m) -> int:
        m = np.asarray(m)
        if m.size == 0:
            return 0
        return self.rref(m)[0].shape[0]

    def nullspace(self, m):
        """Row basis of the right nullspace {x : m x = 0}, in RREF."""
        m = np.asarray(m)
        cols = m.shape[1]
        red, pivots = self.rref(m)
        free = [c for c in range(cols) if c not in pivots]
        basis = self.zeros(len(free), cols)
        for k, fc in enumerate(free):
            basis[k, fc] = 1
            for j, pc in enumerate(pivots):
                basis[k, pc] = self.neg(red[j, fc])
        return self.rref(basis)[0] if len(free) else self.zeros(0, cols)

    def solve(self, a, b):
        """One solution x of a x = b (b may have several columns), or None.

        Returns (x, nullspace_rows); nullspace rows span {y : a y = 0}.
        """
        a = np.asarray(a)
        b = np.asarray(b)
        single = b.ndim == 1
        if single:
            b = b.reshape(-1, 1)
        if a.shape[0] != b.shape[0]:
            raise ValueError("shape mismatch in solve")
        k = a.shape[1]
        aug = np.concatenate([a, b], axis=1)
        red, pivots = self.rref(aug)
        if any(pc >= k for pc in pivots):
            return None
        x = self.zeros(k, b.shape[1])
        for j, pc in enumerate(pivots):
            x[pc] = red[j, k:]
        ns = self.nullspace(a)
        if single:
            x = x.reshape(-1)
        return x, ns

    def inv_matrix(self, m):
        m = np.asarray(m)
        d = m.shape[0]
        sol = self.solve(m, self.identity(d))
        if sol is None or self.rank(m) != d:
            raise ValueError("matrix is singular")
        return sol[0]

    def is_invertible(self, m) -> bool:
        m = np.asarray(m)
        return m.shape[0] == m.shape[1] and self.rank(m) == m.shape[0]

    def charpoly(self, m):
        """Characteristic polynomial, constant-first monic tuple, via Hessenberg."""
        h = np.array(m, dtype=self.dtype)
        d = h.shape[0]
        for j in range(d - 2):
            nz = np.nonzero(h[j + 1 :, j])[0]
            if nz.size == 0:
                continue
            i = j + 1 + int(nz[0])
            if i != j + 1:
                h[[j + 1, i]] = h[[i, j + 1]]
                h[:, [j + 1, i]] = h[:, [i, j + 1]]
            piv_inv = self.inv(h[j + 1, j])
            rows = j + 2 + np.nonzero(h[j + 2 :, j])[0]
            if rows.size:
                facs = self.mul(h[rows, j], piv_inv)
                h[rows] = self.sub(h[rows], self.mul(facs[:, None], h[j + 1][None, :]))
                upd = self.mul(h[:, rows], facs[None, :])
                acc = upd[:, 0]
                for t in range(1, upd.shape[1]):
                    acc = self.add(acc, upd[:, t])
                h[:, j + 1] = self.add(h[:, j + 1], acc)
        # charpoly of leading m x m Hessenberg blocks by recurrence
        polys = [np.array([1], dtype=self.dtype)]
        for mm in range(1, d + 1):
            # (x - h[mm-1,mm-1]) * p_{mm-1}
            prev = polys[mm - 1]
            cur = np.zeros(mm + 1, dtype=self.dtype)
            cur[1:] = prev
            cur[:-1] = self.sub(cur[:-1], self.mul(h[mm - 1, mm - 1], prev))
            beta = np.array(1, dtype=self.dtype)
            for i in range(mm - 1, 0, -1):
                beta = self.mul(beta, h[i, i - 1])
                if h[i - 1, mm - 1] != 0 and beta != 0:
                    coef = self.mul(beta, h[i - 1, mm - 1])
                    pi = polys[i - 1]
                    cur[: len(pi)] = self.sub(cur[: len(pi)], self.mul(coef, pi))
            polys.append(cur)
        return tuple(int(c) for c in polys[d])

    def rand_elements(self, rng: np.random.Generator, shape):
        return rng.integers(0, self.q, size=shape).astype(self.dtype)


def _xpow_mod(p: int, poly: Sequence[int], m: int):
    """Coefficients of x^m modulo a monic polynomial over GF(p)."""
    n = len(poly) - 1
    cur = [0] * n
    if n == 0:
        return cur
    if m < n:
        cur[m] = 1
        return cur
    cur[n - 1] = 1  # x^(n-1)
    for _ in range(m - (n - 1)):
        lead = cur[n - 1]
        cur = [0] + cur[:-1]
        if lead:
            for i in range(n):
                cur[i] = (cur[i] - lead * poly[i]) % p
    return cur


def _poly_irreducible_prime_field(p: int, poly: Sequence[int]) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    base = FieldSpec(p, 1)
    f = tuple(int(c) % p for c in poly)
    n = len(f) - 1
    x = (0, 1)
    # x^(p^n) == x mod f
    xq = poly_pow_mod(base, x, p**n, f)
    if not poly_eq(poly_sub(base, xq, x), ()):
        return False
    for ell in _prime_divisors(n):
        xqe = poly_pow_mod(base, x, p ** (n // ell), f)
        g = poly_gcd(base, poly_sub(base, xqe, x), f)
        if poly_deg(g) != 0:
            return False
    return True


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def default_irreducible(p: int, n: int) -> tuple:
    """Lexicographically least monic irreducible of degree n over GF(p)."""
    if n == 1:
        return (0, 1)
    for enc in range(p**n):
        cand = []
        rem = enc
        for _ in range(n):
            cand.append(rem % p)
            rem //= p
        cand.append(1)
        if _poly_irreducible_prime_field(p, cand):
            return tuple(cand)
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


def GF(p: int, n: int = 1, poly: Optional[Sequence[int]] = None) -> FieldSpec:
    return FieldSpec(p, n, poly)


# ---------------------------------------------------------------------------
# polynomials over GF(q): tuples of encoded coefficients, constant first
# ---------------------------------------------------------------------------


def poly_trim(f) -> tuple:
    f = list(int(c) for c in f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly_deg(f) -> int:
    return len(f) - 1


def poly_eq(f, g) -> bool:
    return poly_trim(f) == poly_trim(g)


def poly_add(field: FieldSpec, f, g) -> tuple:
    la, lb = len(f), len(g)
    n = max(la, lb)
    fa = np.zeros(n, dtype=field.dtype)
    fb = np.zeros(n, dtype=field.dtype)
    fa[:la] = f
    fb[:lb] = g
    return poly_trim(field.add(fa, fb))


def poly_neg(field: FieldSpec, f) -> tuple:
    return poly_trim(field.neg(np.asarray(f, dtype=field.dtype))) if len(f) else ()


def poly_sub(field: FieldSpec, f, g) -> tuple:
    return poly_add(field, f, poly_neg(field, g))


def poly_scalar(field: FieldSpec, c, f) -> tuple:
    if int(np.asarray(c)) == 0 or not len(f):
        return ()
    return poly_trim(field.mul(np.asarray(f, dtype=field.dtype), c))


def poly_mul(field: FieldSpec, f, g) -> tuple:
    f, g = poly_trim(f), poly_trim(g)
    if not f or not g:
        return ()
    out = np.zeros(len(f) + len(g) - 1, dtype=field.dtype)
    fg = np.asarray(g, dtype=field.dtype)
    for i, c in enumerate(f):
        if c:
            out[i : i + len(g)] = field.add(out[i : i + len(g)], field.mul(c, fg))
    return poly_trim(out)


def poly_divmod(field: FieldSpec, f, g):
    f, g = list(poly_trim(f)), poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = poly_deg(g)
    inv_lead = int(field.inv(g[-1]))
    quo = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        c = int(field.mul(f[-1], inv_lead))
        quo[shift] = c
        for i, gc in enumerate(g):
            f[shift + i] = int(field.sub(f[shift + i], field.mul(c, gc)))
        while f and f[-1] == 0:
            f.pop()
    return poly_trim(quo), poly_trim(f)


def poly_mod(field: FieldSpec, f, g) -> tuple:
    return poly_divmod(field, f, g)[1]


def poly_monic(field: FieldSpec, f) -> tuple:
    f = poly_trim(f)
    if not f or f[-1] == 1:
        return f
    return poly_scalar(field, field.inv(f[-1]), f)


def poly_gcd(field: FieldSpec, f, g) -> tuple:
    f, g = poly_trim(f), poly_trim(g)
    while g:
        f, g = g, poly_mod(field, f, g)
    return poly_monic(field, f)


def poly_pow_mod(field: FieldSpec, f, e: int, mod) -> tuple:
    acc = (1,)
    base = poly_mod(field, f, mod)
    while e:
        if e & 1:
            acc = poly_mod(field, poly_mul(field, acc, base), mod)
        base = poly_mod(field, poly_mul(field, base, base), mod)
        e >>= 1
    return acc


def poly_deriv(field: FieldSpec, f) -> tuple:
    f = poly_trim(f)
    if len(f) <= 1:
        return ()
    out = [int(field.mul(i % field.p, f[i])) for i in range(1, len(f))]
    return poly_trim(out)


def poly_eval(field: FieldSpec, f, a):
    acc = np.array(0, dtype=field.dtype)
    for c in reversed(poly_trim(f)):
        acc = field.add(field.mul(acc, a), c)
    return acc


def is_irreducible_poly(field: FieldSpec, f) -> bool:
    """Rabin test over GF(q)."""
    f = poly_monic(field, f)
    n = poly_deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = (0, 1)
    xq = poly_pow_mod(field, x, field.q**n, f)
    if not poly_eq(poly_sub(field, xq, x), ()):
        return False
    for ell in _prime_divisors(n):
        g = poly_gcd(field, poly_sub(field, poly_pow_mod(field, x, field.q ** (n // ell), f), x), f)
        if poly_deg(g) != 0:
            return False
    return True


def _squarefree_decomposition(field: FieldSpec, f):
    """Yu's standard char-p squarefree decomposition; returns [(g_i, mult_i)]."""
    out = []
    f = poly_monic(field, f)

    def rec(g, mult):
        if poly_deg(g) < 1:
            return
        dg = poly_deriv(field, g)
        if not dg:
            # g = h(x^p): take p-th roots of the surviving coefficients
            h = [int(field.frob_inv(c)) if field.n > 1 else int(c) for c in g[:: field.p]]
            rec(poly_trim(h), mult * field.p)
            return
        c = poly_gcd(field, g, dg)
        w = poly_divmod(field, g, c)[0]
        k = 1
        while poly_deg(w) > 0:
            y = poly_gcd(field, w, c)
            z = poly_divmod(field, w, y)[0]
            if poly_deg(z) > 0:
                out.append((poly_monic(field, z), mult * k))
            w = y
            c = poly_divmod(field, c, y)[0]
            k += 1
        if poly_deg(c) > 0:
            rec(c, mult)

    rec(f, 1)
    return out


def _distinct_degree(field: FieldSpec, f):
    """Split squarefree f into products of irreducibles of fixed degree."""
    out = []
    x = (0, 1)
    h = x
    d = 0
    while poly_deg(f) > 0:
        d += 1
        if 2 * d > poly_deg(f):
            out.append((f, poly_deg(f)))
            break
        h = poly_pow_mod(field, h, field.q, f)
        g = poly_gcd(field, poly_sub(field, h, x), f)
        if poly_deg(g) > 0:
            out.append((g, d))
            f = poly_divmod(field, f, g)[0]
            h = poly_mod(field, h, f)
    return out


def _equal_degree_factor(field: FieldSpec, f, d: int, rng: np.random.Generator):
    """Cantor-Zassenhaus split of f into irreducibles of degree d."""
    k = poly_deg(f)
    if k == d:
        return [poly_monic(field, f)]
    while True:
        r = poly_trim([int(c) for c in field.rand_elements(rng, k)])
        if poly_deg(r) < 1:
            continue
        g = poly_gcd(field, r, f)
        if 0 < poly_deg(g) < k:
            split = g
        elif field.p == 2:
            # trace map sum r^(2^i), i < m*d where q = 2^m
            t = r
            acc = r
            for _ in range(field.n * d - 1):
                t = poly_mod(field, poly_mul(field, t, t), f)
                acc = poly_add(field, acc, t)
            split = poly_gcd(field, acc, f)
        else:
            s = poly_pow_mod(field, r, (field.q**d - 1) // 2, f)
            split = poly_gcd(field, poly_sub(field, s, (1,)), f)
        if 0 < poly_deg(split) < k:
            a = _equal_degree_factor(field, poly_monic(field, split), d, rng)
            b = _equal_degree_factor(field, poly_monic(field, poly_divmod(field, f, split)[0]), d, rng)
            return a + b


def poly_factor(field: FieldSpec, f, seed: int = 0):
    """Complete factorization into monic irreducibles.

    Returns a list [(irreducible, multiplicity)], sorted, such that the
    leading-unit-scaled product reproduces the input exactly.
    """
    f = poly_trim(f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    lead = f[-1]
    f = poly_monic(field, f)
    rng = np.random.default_rng(seed)
    factors = {}
    for sq, mult in _squarefree_decomposition(field, f):
        for part, d in _distinct_degree(field, sq):
            for irr in _equal_degree_factor(field, part, d, rng):
                factors[irr] = factors.get(irr, 0) + mult
    out = sorted(factors.items())
    return int(lead), out


def poly_roots(field: FieldSpec, f, seed: int = 0):
    """Roots in GF(q) of f, with multiplicity, as a sorted list."""
    _, factors = poly_factor(field, f, seed)
    roots = []
    for irr, mult in factors:
        if poly_deg(irr) == 1:
            roots.extend([int(field.neg(irr[0]))] * mult)
    return sorted(roots)


# ---------------------------------------------------------------------------
# subspaces of GF(q)^d, canonical RREF row bases
# ---------------------------------------------------------------------------


class Subspace:
    """Row-span subspace with a canonical RREF basis.

    Equality of subspaces is literal equality of canonical forms.
    """

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient: int, rows=None):
        self.field = field
        self.ambient = ambient
        if rows is None or len(rows) == 0:
            self.basis = field.zeros(0, ambient)
            self.pivots = ()
        else:
            rows = np.asarray(rows, dtype=field.dtype).reshape(-1, ambient)
            self.basis, self.pivots = field.rref(rows)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def reduce(self, vec):
        """Residual of vec after elimination against the basis."""
        v = np.array(vec, dtype=self.field.dtype).copy()
        for j, pc in enumerate(self.pivots):
            if v[pc]:
                v = self.field.sub(v, self.field.mul(v[pc], self.basis[j]))
        return v

    def contains(self, vec) -> bool:
        return not np.any(self.reduce(vec))

    def contains_rows(self, rows) -> bool:
        return all(self.contains(r) for r in np.asarray(rows).reshape(-1, self.ambient))

    def coords(self, vec):
        """Coefficients of vec in the canonical basis; raises if not a member."""
        v = np.array(vec, dtype=self.field.dtype)
        out = self.field.zeros(1, self.dim).reshape(-1)
        for j, pc in enumerate(self.pivots):
            if v[pc]:
                out[j] = v[pc]
                v = self.field.sub(v, self.field.mul(v[pc], self.basis[j]))
        if np.any(v):
            raise ValueError("vector not in subspace")
        return out

    def add(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient, np.concatenate([self.basis, other.basis], axis=0))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus intersection."""
        self._check(other)
        fd = self.field
        n = self.ambient
        du, dv = self.dim, other.dim
        if du == 0 or dv == 0:
            return Subspace(fd, n)
        block = fd.zeros(du + dv, 2 * n)
        block[:du, :n] = self.basis
        block[:du, n:] = self.basis
        block[du:, :n] = other.basis
        red, _ = fd.rref(block)
        rows = [r[n:] for r in red if not np.any(r[:n])]
        return Subspace(fd, n, rows)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return other.contains_rows(self.basis)

    def _check(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise ValueError("ambient mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.field == other.field
            and self.basis.shape == other.basis.shape
            and bool(np.all(self.basis == other.basis))
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis.tobytes() if self.basis.dtype != object else tuple(self.basis.ravel())))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def full_space(field: FieldSpec, ambient: int) -> Subspace:
    return Subspace(field, ambient, field.identity(ambient))


# ---------------------------------------------------------------------------
# text formats: `field p=2 n=2 poly=1,1,1` and `mat r=2 c=2` + rows
# ---------------------------------------------------------------------------


def field_to_text(field: FieldSpec) -> str:
    poly = ",".join(str(c) for c in field.defining_poly)
    return f"field p={field.p} n={field.n} poly={poly}"


def field_from_text(text: str) -> FieldSpec:
    parts = text.split()
    if not parts or parts[0] != "field":
        raise ValueError(f"bad field header: {text!r}")
    kv = dict(part.split("=", 1) for part in parts[1:])
    poly = tuple(int(c) for c in kv["poly"].split(","))
    return FieldSpec(int(kv["p"]), int(kv["n"]), poly)


def field_spec_compact(field: FieldSpec) -> str:
    return f"{field.p}^{field.n}:{','.join(str(c) for c in field.defining_poly)}"


def field_from_compact(text: str) -> FieldSpec:
    head, _, polytext = text.partition(":")
    p, _, n = head.partition("^")
    poly = tuple(int(c) for c in polytext.split(",")) if polytext else None
    return FieldSpec(int(p), int(n) if n else 1, poly)


def mat_to_text(m) -> str:
    m = np.asarray(m)
    lines = [f"mat r={m.shape[0]} c={m.shape[1]}"]
    for row in m:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines)


def mat_from_text(text: str, field: Optional[FieldSpec] = None):
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "mat":
        raise ValueError(f"bad matrix header: {lines[0]!r}")
    kv = dict(part.split("=", 1) for part in head[1:])
    r, c = int(kv["r"]), int(kv["c"])
    entries = []
    for ln in lines[1 : 1 + r]:
        entries.append([int(x) for x in ln.split()])
    m = np.array(entries, dtype=np.int64).reshape(r, c)
    if field is not None and np.any((m < 0) | (m >= field.q)):
        raise ValueError("matrix entry out of field range")
    return m
