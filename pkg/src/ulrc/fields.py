"""Field tower F_p <= F_q = F_p[x]/(g) <= F_{q^t} = F_q[y]/(h).

Elements at every level are plain ints holding the little-endian integer
encoding: a coefficient vector (c_0, ..., c_{t-1}) over F_q maps to
sum enc(c_i) * q**i, and an F_q element maps to its base-p digits the same
way. Base-field elements therefore embed into the top field unchanged, and
the whole encoding is just the base-p expansion of all F_p digits.
"""

from __future__ import annotations

import itertools
import json
from functools import cached_property

from .errors import ConstraintError, ParseError

MAX_PRIME = 2**16
MAX_DEGREE_PRODUCT = 64
TABLE_LIMIT = 2**14


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class PrimeField:
    """Arithmetic modulo a prime p."""

    def __init__(self, p: int):
        self.p = p
        self.order = p
        self.char = p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def neg(self, x):
        return -x % self.p

    def mul(self, x, y):
        return x * y % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def pow(self, x, e):
        if e < 0:
            return pow(self.inv(x), -e, self.p)
        return pow(x, e, self.p)


# --- polynomials over a field object; lists of ints, constant term first ---

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _trim(out)


def _poly_divmod(F, a, b):
    a = list(a)
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = F.inv(b[-1])
    db = len(b) - 1
    quot = [0] * max(len(a) - db, 0)
    for deg in range(len(a) - 1, db - 1, -1):
        c = a[deg]
        if c == 0:
            continue
        c = F.mul(c, lead_inv)
        quot[deg - db] = c
        for i, bi in enumerate(b):
            if bi:
                a[deg - db + i] = F.sub(a[deg - db + i], F.mul(c, bi))
    return _trim(quot), _trim(a[:db])


def _poly_mod(F, a, b):
    return _poly_divmod(F, a, b)[1]


def _poly_gcd(F, a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(F, a, b)
    return a


def _poly_powmod(F, base, e, mod):
    result = [1]
    base = _poly_mod(F, base, mod)
    while e:
        if e & 1:
            result = _poly_mod(F, _poly_mul(F, result, base), mod)
        e >>= 1
        if e:
            base = _poly_mod(F, _poly_mul(F, base, base), mod)
    return result


def is_irreducible(F, poly) -> bool:
    """Ben-Or test: no factor of degree i divides poly for i <= deg/2."""
    poly = _trim(list(poly))
    d = len(poly) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    xq = x
    for _ in range(d // 2):
        xq = _poly_powmod(F, xq, F.order, poly)
        diff = list(xq) + [0] * max(0, 2 - len(xq))
        diff[1] = F.sub(diff[1], 1)
        g = _poly_gcd(F, poly, _trim(diff))
        if len(g) > 1:
            return False
    return True


def least_irreducible(F, degree: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible, compared constant term first."""
    # for degree > 1 a zero constant term means the variable divides it
    first = range(F.order) if degree == 1 else range(1, F.order)
    for low in itertools.product(first, *[range(F.order)] * (degree - 1)):
        cand = list(low) + [1]
        if is_irreducible(F, cand):
            return tuple(cand)
    raise RuntimeError(f"no irreducible polynomial of degree {degree}")  # unreachable


class ExtensionField:
    """F[z]/(modulus) over a PrimeField or another ExtensionField."""

    def __init__(self, base, modulus):
        self.base = base
        self.modulus = tuple(modulus)
        self.degree = len(self.modulus) - 1
        self.order = base.order**self.degree
        self.char = base.char
        self._tables = self.order <= TABLE_LIMIT
        if self._tables:
            self._build_tables()

    def coeffs(self, x: int) -> tuple[int, ...]:
        if self._tables:
            return self._coeffs[x]
        return self._split(x)

    def _split(self, x):
        Q = self.base.order
        out = []
        for _ in range(self.degree):
            x, c = divmod(x, Q)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        Q = self.base.order
        v = 0
        for c in reversed(cs):
            v = v * Q + c
        return v

    def _build_tables(self):
        self._coeffs = [self._split(x) for x in range(self.order)]
        N = self.order - 1
        factors = _prime_factors(N) if N > 1 else []
        for gen in range(1, self.order):
            if N == 1 or all(self._slow_pow(gen, N // f) != 1 for f in factors):
                break
        self._exp = [0] * (2 * N) if N else [1]
        self._log = [0] * self.order
        v = 1
        for i in range(N):
            self._exp[i] = v
            self._log[v] = i
            v = self._slow_mul(v, gen)
        for i in range(N, 2 * N):
            self._exp[i] = self._exp[i - N]

    def _slow_mul(self, x, y):
        F = self.base
        a, b = self._split(x), self._split(y)
        prod = _poly_mul(F, list(a), list(b))
        return self.from_coeffs(_pad(_poly_mod(F, prod, self.modulus), self.degree))

    def _slow_pow(self, x, e):
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, x)
            e >>= 1
            if e:
                x = self._slow_mul(x, x)
        return r

    def add(self, x, y):
        if self.char == 2:
            return x ^ y
        F = self.base
        return self.from_coeffs([F.add(a, b) for a, b in zip(self.coeffs(x), self.coeffs(y))])

    def neg(self, x):
        if self.char == 2:
            return x
        F = self.base
        return self.from_coeffs([F.neg(a) for a in self.coeffs(x)])

    def sub(self, x, y):
        if self.char == 2:
            return x ^ y
        F = self.base
        return self.from_coeffs([F.sub(a, b) for a, b in zip(self.coeffs(x), self.coeffs(y))])

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        if self._tables:
            return self._exp[self._log[x] + self._log[y]]
        return self._slow_mul(x, y)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._tables:
            N = self.order - 1
            return self._exp[(N - self._log[x]) % N] if N else 1
        return self._slow_pow(x, self.order - 2)

    def pow(self, x, e):
        if e < 0:
            x, e = self.inv(x), -e
        if e == 0:
            return 1
        if x == 0:
            return 0
        if self._tables:
            N = self.order - 1
            return self._exp[(self._log[x] * e) % N] if N else 1
        return self._slow_pow(x, e)


def _pad(a, n):
    return list(a) + [0] * (n - len(a))


class FieldTower:
    """The tower F_p <= F_q <= F_{q^t}; immutable after construction.

    Arithmetic methods act on the top field. Because base-field elements
    embed with zero high coefficients, ``mul(c, x)`` with ``c < q`` is the
    F_q-scalar action.
    """

    def __init__(self, p: int, a: int, t: int, g=None, h=None):
        if not isinstance(p, int) or not is_prime(p):
            raise ConstraintError(f"p={p} is not prime")
        if p > MAX_PRIME:
            raise ConstraintError(f"p={p} exceeds {MAX_PRIME}")
        if a < 1 or t < 1:
            raise ConstraintError("degrees a and t must be >= 1")
        if a * t > MAX_DEGREE_PRODUCT:
            raise ConstraintError(f"a*t={a * t} exceeds desk-scale guard {MAX_DEGREE_PRODUCT}")
        self.p, self.a, self.t = p, a, t
        prime = PrimeField(p)
        self.g = tuple(g) if g is not None else least_irreducible(prime, a)
        if len(self.g) != a + 1 or self.g[-1] != 1 or not is_irreducible(prime, self.g):
            raise ConstraintError(f"g={self.g} is not a monic irreducible of degree {a}")
        self.base = prime if a == 1 else ExtensionField(prime, self.g)
        self.q = p**a
        self.h = tuple(h) if h is not None else least_irreducible(self.base, t)
        if len(self.h) != t + 1 or self.h[-1] != 1 or not is_irreducible(self.base, self.h):
            raise ConstraintError(f"h={self.h} is not a monic irreducible of degree {t} over F_q")
        self.top = ExtensionField(self.base, self.h)
        self.order = self.q**t

    def __repr__(self):
        return f"FieldTower(p={self.p}, a={self.a}, t={self.t})"

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def key(self):
        return (self.p, self.a, self.t, self.g, self.h)

    def check(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.order:
            raise ValueError(f"{x!r} is not an element of {self}")
        return x

    def is_base(self, x: int) -> bool:
        return 0 <= x < self.q

    # arithmetic on F_{q^t}
    def add(self, x, y):
        return self.top.add(x, y)

    def sub(self, x, y):
        return self.top.sub(x, y)

    def neg(self, x):
        return self.top.neg(x)

    def mul(self, x, y):
        return self.top.mul(x, y)

    def inv(self, x):
        return self.top.inv(x)

    def div(self, x, y):
        return self.top.mul(x, self.top.inv(y))

    def pow(self, x, e):
        return self.top.pow(x, e)

    def frobenius(self, x, i: int = 1):
        """x ** (q ** i)."""
        for _ in range(i):
            x = self.top.pow(x, self.q)
        return x

    def coeffs(self, x) -> tuple[int, ...]:
        """Length-t coefficient vector of x over F_q."""
        return self.top.coeffs(x)

    def from_coeffs(self, cs) -> int:
        return self.top.from_coeffs(cs)

    def basis(self, i: int) -> int:
        """y**i, the i-th polynomial-basis element."""
        return self.q**i

    def dot(self, xs, ys):
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc = self.add(acc, self.mul(x, y))
        return acc

    @cached_property
    def elements(self) -> range:
        return range(self.order)

    def to_json(self) -> dict:
        return {"p": self.p, "a": self.a, "t": self.t, "g": list(self.g), "h": list(self.h)}

    @classmethod
    def from_json(cls, obj) -> "FieldTower":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(int(obj["p"]), int(obj["a"]), int(obj["t"]), obj.get("g"), obj.get("h"))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad tower description: {exc}") from exc


def build_tower(p: int, a: int, t: int) -> FieldTower:
    return FieldTower(p, a, t)


# --- linear algebra ---

def _eliminate(F, rows, ncols):
    """Row-reduce in place; return the list of pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(v, F.mul(f, w)) for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank_over_base(tower: FieldTower, v) -> int:
    """F_q-rank of a vector of F_{q^t} elements (rank of its t x |v| expansion)."""
    rows = [list(tower.coeffs(tower.check(x))) for x in v]
    return len(_eliminate(tower.base, rows, tower.t)) if rows else 0


class BaseSpan:
    """Incrementally grown F_q-span of top-field elements."""

    def __init__(self, tower: FieldTower):
        self.tower = tower
        self.basis: list[tuple[int, list[int]]] = []

    @property
    def rank(self):
        return len(self.basis)

    def reduce(self, x):
        F = self.tower.base
        vec = list(self.tower.coeffs(x))
        for piv, row in self.basis:
            c = vec[piv]
            if c:
                vec = [F.sub(a, F.mul(c, b)) for a, b in zip(vec, row)]
        return vec

    def add(self, x) -> bool:
        """Insert x; return True iff it increased the rank."""
        F = self.tower.base
        vec = self.reduce(x)
        piv = next((i for i, c in enumerate(vec) if c), None)
        if piv is None:
            return False
        inv = F.inv(vec[piv])
        vec = [F.mul(inv, c) for c in vec]
        self.basis.append((piv, vec))
        return True


def mat_rank(tower: FieldTower, M) -> int:
    """Rank of a matrix (list of rows) over F_{q^t}."""
    rows = [list(r) for r in M]
    if not rows:
        return 0
    return len(_eliminate(tower.top, rows, len(rows[0])))


def transpose(M):
    return [list(c) for c in zip(*M)]


def mat_solve(tower: FieldTower, A, b):
    """Any solution z of A z = b over F_{q^t}, or None if inconsistent."""
    if len(A) != len(b):
        raise ValueError("dimension mismatch between A and b")
    if not A:
        return []
    ncols = len(A[0])
    if any(len(r) != ncols for r in A):
        raise ValueError("ragged matrix")
    F = tower.top
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    pivots = _eliminate(F, aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    z = [0] * ncols
    for row, c in zip(aug, pivots):
        z[c] = row[ncols]
    return z


def mat_vec(tower: FieldTower, v, M):
    """Row vector v times matrix M."""
    F = tower.top
    out = [0] * (len(M[0]) if M else 0)
    for vi, row in zip(v, M):
        if vi == 0:
            continue
        for j, m in enumerate(row):
            if m:
                out[j] = F.add(out[j], F.mul(vi, m))
    return out


class RowReducer:
    """Incremental column-space rank over F_{q^t} (vectors added one at a time)."""

    __slots__ = ("F", "basis")

    def __init__(self, F, basis=None):
        self.F = F
        self.basis = basis if basis is not None else []

    def copy(self):
        return RowReducer(self.F, list(self.basis))

    @property
    def rank(self):
        return len(self.basis)

    def add(self, vec) -> bool:
        F = self.F
        vec = list(vec)
        for piv, row in self.basis:
            c = vec[piv]
            if c:
                vec = [F.sub(a, F.mul(c, b)) if b else a for a, b in zip(vec, row)]
        piv = next((i for i, c in enumerate(vec) if c), None)
        if piv is None:
            return False
        inv = F.inv(vec[piv])
        self.basis.append((piv, [F.mul(inv, c) for c in vec]))
        return True
