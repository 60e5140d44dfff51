"""Exact spectra of the +1/-1 matrix of a graph, the parametrized
determinant det(S(1, c)), and synthesis of equiangular line systems.

The exact layer works in Z[x]: determinants come from fraction-free Bareiss
elimination (every division is exact), eigenvalues are read off by pulling
out integer roots and copies of x^2 - 2x - (q-1) with q = n - 1 (the family
of values 1 +/- sqrt(q)), and whatever remains is isolated by Sturm
sequences into certified rational intervals.  No floating point enters until
a line system is actually synthesized, and then the exact Gram matrix is
kept alongside the vectors so checks compare against exact entries.

A value lam in the spectrum with matrix S(1, c), c = 1/(1 - lam), positive
semidefinite (lam extreme) yields n unit vectors in dimension n - m(lam)
with pairwise inner products E[i][j] * c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .graphs import SeidelGraph

# ---------------------------------------------------------------------------
# integer polynomials as coefficient lists, constant term first

def poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_sub(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return poly_trim(out)


def poly_neg(a):
    return [-c for c in a]


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_scale(a, c):
    return poly_trim([c * x for x in a])


def poly_pow(a, k):
    out = [1]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def poly_eval(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def poly_divexact(num, den):
    """Exact quotient num/den in Z[x]; raises ArithmeticError otherwise."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return []
    num = list(num)
    if len(num) < len(den):
        raise ArithmeticError("division not exact")
    lead = den[-1]
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[len(den) - 1 + k]
        if c % lead:
            raise ArithmeticError("division not exact")
        c //= lead
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[j + k] -= c * d
    if any(num[:len(den) - 1]):
        raise ArithmeticError("division not exact")
    return poly_trim(q)


def poly_divmod_q(a, b):
    """Quotient and remainder over the rationals (Fraction coefficients)."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        poly_trim(a)
        if len(a) < len(b):
            break
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for j, d in enumerate(b):
            a[j + k] -= c * d
        poly_trim(a)
    return poly_trim(q), poly_trim(a)


def _fpoly_gcd(a, b):
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    poly_trim(a)
    poly_trim(b)
    while b:
        _, r = poly_divmod_q(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def poly_derivative(a):
    return poly_trim([i * c for i, c in enumerate(a)][1:])


def bareiss_det(matrix):
    """Determinant of a square matrix with entries in Z[x].

    Fraction-free elimination: every intermediate division by the previous
    pivot is exact, so all arithmetic stays in arbitrary-precision integers.
    """
    n = len(matrix)
    m = [[poly_trim(list(e)) for e in row] for row in matrix]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return []
        piv = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            head = row_i[k]
            for j in range(k + 1, n):
                t = poly_sub(poly_mul(row_i[j], piv), poly_mul(head, m[k][j]))
                row_i[j] = poly_divexact(t, prev)
            row_i[k] = []
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign == 1 else poly_neg(det)


@lru_cache(maxsize=None)
def char_poly(g: SeidelGraph) -> tuple:
    """det(xI - E) as an exact coefficient tuple, constant term first."""
    n = g.n
    mat = [[[-g.seidel_entry(i, j)] if i != j else [-1, 1]
            for j in range(n)] for i in range(n)]
    return tuple(bareiss_det(mat))


@lru_cache(maxsize=None)
def chi_polynomial(g: SeidelGraph) -> tuple:
    """det(S(1, c)) as an exact coefficient tuple in c, constant term first."""
    n = g.n
    mat = [[[1] if i == j else [0, g.seidel_entry(i, j)]
            for j in range(n)] for i in range(n)]
    return tuple(bareiss_det(mat))


def chi_from_char(g: SeidelGraph) -> tuple:
    """The substitution identity: det(S(1,c)) = (-1)^n sum a_k (c-1)^k c^(n-k)
    where det(xI - E) = sum a_k x^k.  Used as a cross-check of the two
    determinant computations."""
    p = char_poly(g)
    n = g.n
    total = []
    for k, a in enumerate(p):
        if a:
            term = poly_mul(poly_pow([-1, 1], k), poly_pow([0, 1], n - k))
            total = poly_add(total, poly_scale(term, a))
    if n % 2:
        total = poly_neg(total)
    return tuple(total)


# ---------------------------------------------------------------------------
# eigenvalues

@dataclass(frozen=True)
class Eigenvalue:
    """One eigenvalue with multiplicity.

    Exactly one of `rational`, `quad`, `interval` is set: a Fraction, a
    triple (a, sign, d) meaning a + sign*sqrt(d), or a certified enclosing
    interval of Fractions for a value that resisted exact factoring.
    """

    multiplicity: int
    rational: Fraction = None
    quad: tuple = None
    interval: tuple = None

    @property
    def is_exact(self) -> bool:
        return self.interval is None

    @property
    def approx(self) -> float:
        if self.rational is not None:
            return float(self.rational)
        if self.quad is not None:
            a, sign, d = self.quad
            return a + sign * math.sqrt(d)
        lo, hi = self.interval
        return (float(lo) + float(hi)) / 2

    def label(self) -> str:
        if self.rational is not None:
            return str(self.rational)
        if self.quad is not None:
            a, sign, d = self.quad
            return f"{a}{'+' if sign > 0 else '-'}sqrt({d})"
        return f"[{float(self.interval[0]):.12g}, {float(self.interval[1]):.12g}]"


@dataclass(frozen=True)
class SeidelSpectrum:
    n: int
    eigenvalues: tuple

    @property
    def is_exact(self) -> bool:
        return all(ev.is_exact for ev in self.eigenvalues)

    def distinct_count(self) -> int:
        return len(self.eigenvalues)

    def multiplicity(self, value) -> int:
        ev = self.find(value)
        return ev.multiplicity if ev else 0

    def find(self, value):
        """Match an eigenvalue given as Eigenvalue, Fraction/int, (a, sign, d)
        triple, or a string like "-2", "3/2", "1+sqrt(5)"."""
        target = _coerce_value(value)
        for ev in self.eigenvalues:
            if target.rational is not None and ev.rational == target.rational:
                return ev
            if target.quad is not None and ev.quad == target.quad:
                return ev
        return None

    def min_eigenvalue(self):
        return min(self.eigenvalues, key=lambda ev: ev.approx)

    def max_eigenvalue(self):
        return max(self.eigenvalues, key=lambda ev: ev.approx)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "eigenvalues": [
                {"value": ev.label(), "multiplicity": ev.multiplicity,
                 "approx": ev.approx}
                for ev in self.eigenvalues
            ],
            "exact": self.is_exact,
        }


def _coerce_value(value) -> Eigenvalue:
    if isinstance(value, Eigenvalue):
        return value
    if isinstance(value, (int, Fraction)):
        return Eigenvalue(1, rational=Fraction(value))
    if isinstance(value, tuple) and len(value) == 3:
        return Eigenvalue(1, quad=value)
    if isinstance(value, str):
        return parse_eigenvalue(value)
    raise ValueError(f"cannot interpret eigenvalue {value!r}")


def parse_eigenvalue(text: str) -> Eigenvalue:
    """Parse "a/b", "a", "a+sqrt(d)" or "a-sqrt(d)" forms."""
    s = text.replace(" ", "")
    if "sqrt" in s:
        for sep, sign in (("+sqrt(", 1), ("-sqrt(", -1)):
            if sep in s:
                head, tail = s.split(sep, 1)
                if not tail.endswith(")"):
                    break
                a = int(head) if head else 0
                return Eigenvalue(1, quad=(a, sign, int(tail[:-1])))
        raise ValueError(f"cannot parse eigenvalue {text!r}")
    return Eigenvalue(1, rational=Fraction(s))


def _divisors(m: int):
    m = abs(m)
    out = set()
    for d in range(1, int(math.isqrt(m)) + 1):
        if m % d == 0:
            out.update((d, m // d))
    return sorted(out)


# Sturm sequences over Fraction for whatever the exact factor steps leave.

def _sturm_chain(p):
    chain = [[Fraction(c) for c in p], [Fraction(c) for c in poly_derivative(p)]]
    while chain[-1]:
        _, r = poly_divmod_q(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_variations(chain, x):
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _isolate_real_roots(p, precision=Fraction(1, 10 ** 13)):
    """Disjoint rational intervals, one simple real root each, of a
    square-free integer polynomial."""
    if len(p) <= 1:
        return []
    chain = _sturm_chain(p)
    bound = Fraction(1) + max(abs(Fraction(c, p[-1])) for c in p[:-1])

    def count(lo, hi):
        return _sign_variations(chain, lo) - _sign_variations(chain, hi)

    out = []
    stack = [(-bound - 1, bound + 1)]
    while stack:
        lo, hi = stack.pop()
        k = count(lo, hi)
        if k == 0:
            continue
        if k == 1:
            while hi - lo > precision:
                mid = (lo + hi) / 2
                if poly_eval(p, mid) == 0:
                    # nudge the endpoint; roots of the residual are irrational
                    mid += precision / 7
                if count(lo, mid) == 1:
                    hi = mid
                else:
                    lo = mid
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if poly_eval(p, mid) == 0:
            mid += precision / 7
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(out)


def _rational_rank(rows) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    for col in range(len(rows[0]) if rows else 0):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        for i in range(rank + 1, len(rows)):
            factor = rows[i][col] * inv
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _squarefree_parts(p):
    """Yun decomposition: list of (square-free factor, multiplicity)."""
    parts = []
    g = _fpoly_gcd(p, poly_derivative(p))
    if len(g) <= 1:
        return [(p, 1)]
    w, _ = poly_divmod_q(p, g)
    mult = 1
    while len(w) > 1:
        nxt = _fpoly_gcd(w, g)
        factor, _ = poly_divmod_q(w, nxt)
        if len(factor) > 1:
            parts.append((factor, mult))
        w = nxt
        g, _ = poly_divmod_q(g, nxt)
        mult += 1
    return parts


@lru_cache(maxsize=None)
def spectrum(g: SeidelGraph) -> SeidelSpectrum:
    """Exact spectrum of the +1/-1 matrix of g.

    Factors out integer roots and copies of x^2 - 2x - (q-1), q = n - 1;
    leftover roots (not expected for the graphs built here) become certified
    intervals.  Moment identities sum(m) = n, sum(m*lam) = n and
    sum(m*lam^2) = n^2 are verified before returning.
    """
    n = g.n
    p = list(char_poly(g))
    found = []

    # integer roots: divisors of the constant term of the x^k-stripped part
    zero_mult = 0
    while p and p[0] == 0:
        p = p[1:]
        zero_mult += 1
    if zero_mult:
        found.append(Eigenvalue(zero_mult, rational=Fraction(0)))
    candidates = []
    if len(p) > 1:
        for d in _divisors(p[0]):
            candidates.extend((d, -d))
    for root in sorted(candidates, key=lambda r: (abs(r), -r)):
        mult = 0
        while len(p) > 1 and poly_eval(p, root) == 0:
            p = poly_divexact(p, [-root, 1])
            mult += 1
        if mult:
            found.append(Eigenvalue(mult, rational=Fraction(root)))

    # the 1 +/- sqrt(q) family, skipped when q is a perfect square
    q = n - 1
    if q >= 2 and math.isqrt(q) ** 2 != q:
        quad = [-(q - 1), -2, 1]
        mult = 0
        while len(p) > len(quad) - 1:
            try:
                p = poly_divexact(p, quad)
            except ArithmeticError:
                break
            mult += 1
        if mult:
            found.append(Eigenvalue(mult, quad=(1, 1, q)))
            found.append(Eigenvalue(mult, quad=(1, -1, q)))

    # certified intervals for anything left
    for factor, mult in (_squarefree_parts(p) if len(p) > 1 else []):
        scale = 1
        for c in factor:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        int_factor = [int(c * scale) for c in factor]
        for lo, hi in _isolate_real_roots(int_factor):
            found.append(Eigenvalue(mult, interval=(lo, hi)))

    found.sort(key=lambda ev: -ev.approx)
    # cross-check rational multiplicities against the exact rank of E - lam*I
    for ev in found:
        if ev.rational is None:
            continue
        lam = ev.rational
        shifted = [[Fraction(g.seidel_entry(i, j)) - (lam if i == j else 0)
                    for j in range(n)] for i in range(n)]
        if n - _rational_rank(shifted) != ev.multiplicity:
            raise RuntimeError(f"rank check failed for eigenvalue {lam}")
    spec = SeidelSpectrum(n, tuple(found))
    _check_moments(spec)
    return spec


def _check_moments(spec: SeidelSpectrum):
    n = spec.n
    if sum(ev.multiplicity for ev in spec.eigenvalues) != n:
        raise RuntimeError("multiplicities do not sum to n")
    if spec.is_exact:
        m1 = Fraction(0)
        m2 = Fraction(0)
        irr1 = {}
        irr2 = {}
        for ev in spec.eigenvalues:
            m = ev.multiplicity
            if ev.rational is not None:
                m1 += m * ev.rational
                m2 += m * ev.rational ** 2
            else:
                a, sign, d = ev.quad
                m1 += m * a
                m2 += m * (a * a + d)
                irr1[d] = irr1.get(d, 0) + m * sign
                irr2[d] = irr2.get(d, 0) + 2 * a * sign * m
        if any(irr1.values()) or any(irr2.values()):
            raise RuntimeError("irrational parts do not cancel")
        ok = m1 == n and m2 == n * n
    else:
        m1 = sum(ev.multiplicity * ev.approx for ev in spec.eigenvalues)
        m2 = sum(ev.multiplicity * ev.approx ** 2 for ev in spec.eigenvalues)
        ok = abs(m1 - n) < 1e-6 and abs(m2 - n * n) < 1e-6 * n
    if not ok:
        raise RuntimeError(f"moment identities violated: {m1} vs {n}, {m2} vs {n * n}")


def two_eigenvalue_check(g: SeidelGraph) -> bool:
    """Whether the matrix of g has at most two distinct eigenvalues.

    Decided exactly: the degree of char_poly / gcd(char_poly, char_poly')
    counts distinct roots.
    """
    p = list(char_poly(g))
    gcd = _fpoly_gcd(p, poly_derivative(p))
    return (len(p) - 1) - (len(gcd) - 1) <= 2


# ---------------------------------------------------------------------------
# line systems

@dataclass(frozen=True)
class LineSystem:
    """n unit vectors whose pairwise inner products are E[i][j] * c."""

    n: int
    dim: int
    cos_exact: str
    cos_value: float
    sign: int                 # sign of c = 1/(1 - lam)
    eigenvalue: Eigenvalue
    vectors: tuple
    gram_exact: tuple
    residual: float

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "cos": self.cos_exact,
            "vectors": [list(v) for v in self.vectors],
            "gram_exact": [list(row) for row in self.gram_exact],
            "residual": self.residual,
        }


def embed_lines(g: SeidelGraph, value, tol=1e-9) -> LineSystem:
    """Synthesize the line system of an extreme exact eigenvalue.

    The Gram matrix is S(1, c) with c = 1/(1 - lam); it is positive
    semidefinite exactly when lam is the smallest (c > 0) or largest (c < 0)
    eigenvalue.  Interior eigenvalues give indefinite forms and are refused.
    """
    spec = spectrum(g)
    ev = spec.find(value)
    if ev is None:
        raise ValueError(f"{value!r} is not an eigenvalue (spectrum: "
                         f"{[e.label() for e in spec.eigenvalues]})")
    if not ev.is_exact:
        raise ValueError("line synthesis needs an exactly represented eigenvalue")
    lam = ev.approx
    if lam == 1.0:
        raise ValueError("eigenvalue 1 has no finite inner-product scale")
    is_min = ev == spec.min_eigenvalue()
    is_max = ev == spec.max_eigenvalue()
    if not (is_min or is_max):
        raise ValueError("interior eigenvalue: the form is indefinite, "
                         "no Euclidean line system exists")

    n = g.n
    if ev.rational is not None:
        c_exact = Fraction(1) / (1 - ev.rational)
        c = float(c_exact)
        c_str = str(c_exact)

        def entry(i, j):
            return str(g.seidel_entry(i, j) * c_exact) if i != j else "1"
    else:
        a, sgn, d = ev.quad
        if a != 1:
            raise ValueError("unsupported quadratic eigenvalue form")
        # c = 1/(1 - (1 + sgn*sqrt(d))) = -sgn/sqrt(d)
        c = -sgn / math.sqrt(d)
        c_str = f"{'-' if sgn > 0 else ''}1/sqrt({d})"

        def entry(i, j):
            if i == j:
                return "1"
            e = g.seidel_entry(i, j) * (-sgn)
            return f"{'-' if e < 0 else ''}1/sqrt({d})"
    gram = np.array([[1.0 if i == j else g.seidel_entry(i, j) * c
                      for j in range(n)] for i in range(n)])

    vals, vecs = np.linalg.eigh(gram)
    rank = n - ev.multiplicity
    if vals[0] < -tol:
        raise ValueError("Gram matrix unexpectedly indefinite")
    zero_part = vals[:n - rank]
    pos_part = vals[n - rank:]
    if (zero_part.size and np.max(np.abs(zero_part)) > tol) or np.min(pos_part) <= tol:
        raise RuntimeError("numeric rank disagrees with the exact multiplicity")
    basis = vecs[:, n - rank:] * np.sqrt(pos_part)
    residual = float(np.max(np.abs(basis @ basis.T - gram)))
    if residual > tol:
        raise RuntimeError(f"reconstruction residual {residual} exceeds {tol}")

    return LineSystem(
        n=n,
        dim=rank,
        cos_exact=c_str,
        cos_value=c,
        sign=1 if c > 0 else -1,
        eigenvalue=ev,
        vectors=tuple(tuple(float(x) for x in row) for row in basis),
        gram_exact=tuple(tuple(entry(i, j) for j in range(n)) for i in range(n)),
        residual=residual,
    )
