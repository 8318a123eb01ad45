"""Exact sparse multivariate polynomials over Q, polynomial matrices and
fraction-free determinants.

Terms are stored as {exponent tuple: coefficient}; coefficients are Fraction
(or int, which Fraction arithmetic absorbs) and never zero.  The canonical
term order is graded lex, used for text output and leading-term division.
"""

from fractions import Fraction
from math import gcd


def _grlex_key(expo):
    return (sum(expo), expo)


def _add_dicts(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _sub_dicts(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _mul_dicts(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _scale_dict(a, c):
    if not c:
        return {}
    return {e: co * c for e, co in a.items()}


def _exact_div_dicts(num, den):
    """Divide num by den, both term dicts, assuming the division is exact.

    Standard leading-term elimination in graded lex order.  Raises
    ArithmeticError if a remainder survives (division was not exact).
    """
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return {}
    lead_den = max(den, key=_grlex_key)
    cden = den[lead_den]
    rem = dict(num)
    quo = {}
    while rem:
        lead = max(rem, key=_grlex_key)
        diff = tuple(x - y for x, y in zip(lead, lead_den))
        if any(d < 0 for d in diff):
            raise ArithmeticError("polynomial division is not exact")
        c = rem[lead]
        if isinstance(c, int) and isinstance(cden, int):
            q = c // cden if c % cden == 0 else Fraction(c, cden)
        else:
            q = Fraction(c) / Fraction(cden)
            if q.denominator == 1:
                q = q.numerator
        quo[diff] = q
        for e, co in den.items():
            et = tuple(x + y for x, y in zip(diff, e))
            s = rem.get(et, 0) - q * co
            if s:
                rem[et] = s
            else:
                rem.pop(et, None)
    return quo


class MultiPoly:
    """Sparse exact polynomial over an ordered tuple of variable names."""

    __slots__ = ("names", "terms")

    def __init__(self, names, terms=None):
        self.names = tuple(names)
        clean = {}
        if terms:
            k = len(self.names)
            for e, c in terms.items():
                if len(e) != k:
                    raise ValueError("exponent length does not match universe")
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, names):
        return cls(names, {})

    @classmethod
    def constant(cls, names, c):
        names = tuple(names)
        if not c:
            return cls(names, {})
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def variable(cls, names, name):
        names = tuple(names)
        i = names.index(name)
        e = [0] * len(names)
        e[i] = 1
        return cls(names, {tuple(e): 1})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def support(self):
        """The set of exponent vectors with nonzero coefficient."""
        return set(self.terms)

    def num_terms(self):
        return len(self.terms)

    def coefficient(self, expo):
        return self.terms.get(tuple(expo), 0)

    def _check(self, other):
        if self.names != other.names:
            raise ValueError(
                f"variable universes differ: {self.names} vs {other.names}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return self + MultiPoly.constant(self.names, other)
        self._check(other)
        return MultiPoly(self.names, _add_dicts(self.terms, other.terms))

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return self - MultiPoly.constant(self.names, other)
        self._check(other)
        return MultiPoly(self.names, _sub_dicts(self.terms, other.terms))

    def __neg__(self):
        return MultiPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scalar_mul(other)
        self._check(other)
        return MultiPoly(self.names, _mul_dicts(self.terms, other.terms))

    __rmul__ = __mul__

    def scalar_mul(self, c):
        return MultiPoly(self.names, _scale_dict(self.terms, c))

    def exact_div(self, other):
        """Exact polynomial quotient self / other (raises if not exact)."""
        self._check(other)
        return MultiPoly(self.names, _exact_div_dicts(self.terms, other.terms))

    def partial_derivative(self, name):
        i = self.names.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return MultiPoly(self.names, out)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point):
        """Evaluate at a point (sequence in variable order, or name map).

        Exact for Fraction/int inputs, floating for float/complex inputs.
        """
        if isinstance(point, dict):
            vals = [point[name] for name in self.names]
        else:
            vals = list(point)
            if len(vals) != len(self.names):
                raise ValueError("point length does not match universe")
        # per-variable power cache; exponents here are tiny
        powers = [None] * len(vals)
        for i, v in enumerate(vals):
            m = max((e[i] for e in self.terms), default=0)
            row = [1] * (m + 1)
            for k in range(1, m + 1):
                row[k] = row[k - 1] * v
            powers[i] = row
        total = 0
        for e, c in self.terms.items():
            m = c
            for i, k in enumerate(e):
                if k:
                    m = m * powers[i][k]
            total += m
        return total

    def rename(self, names, mapping=None):
        """Re-embed into a different universe.

        mapping gives old index -> new index; defaults to matching names.
        """
        names = tuple(names)
        if mapping is None:
            mapping = [names.index(nm) for nm in self.names]
        out = {}
        width = len(names)
        for e, c in self.terms.items():
            ne = [0] * width
            for i, k in enumerate(e):
                if k:
                    ne[mapping[i]] += k
            out[tuple(ne)] = c
        return MultiPoly(names, out)

    # -- serialization -----------------------------------------------------

    def text(self):
        """Canonical text form: terms in descending graded lex order."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            factors = [f"{self.names[i]}^{k}" if k > 1 else self.names[i]
                       for i, k in enumerate(e) if k]
            if factors:
                parts.append(f"{c} * " + " ".join(factors) if c != 1
                             else " ".join(factors))
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self.text()})"


class PolyMatrix:
    """Rectangular matrix of MultiPoly entries over one shared universe."""

    def __init__(self, names, rows):
        self.names = tuple(names)
        self.rows = [list(r) for r in rows]
        width = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != width:
                raise ValueError("ragged matrix")
            for p in r:
                if p.names != self.names:
                    raise ValueError("entry universe differs from matrix")
        self.shape = (len(self.rows), width)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def submatrix(self, row_idx, col_idx=None):
        if col_idx is None:
            col_idx = range(self.shape[1])
        return PolyMatrix(
            self.names,
            [[self.rows[i][j] for j in col_idx] for i in row_idx])

    def transpose(self):
        m, k = self.shape
        return PolyMatrix(self.names,
                          [[self.rows[i][j] for i in range(m)] for j in range(k)])

    def matmul(self, other):
        if self.names != other.names:
            raise ValueError("universes differ")
        m, k = self.shape
        k2, p = other.shape
        if k != k2:
            raise ValueError("shape mismatch")
        zero = MultiPoly.zero(self.names)
        out = []
        for i in range(m):
            row = []
            for j in range(p):
                acc = zero
                for t in range(k):
                    acc = acc + self.rows[i][t] * other.rows[t][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.names, out)

    def evaluate(self, point):
        """Numeric (or exact) matrix of entry evaluations, as nested lists."""
        return [[p.evaluate(point) for p in row] for row in self.rows]

    def __repr__(self):
        return f"PolyMatrix({self.shape[0]}x{self.shape[1]}, vars={self.names})"


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return _sub_dicts(_mul_dicts(rows[0][0], rows[1][1]),
                          _mul_dicts(rows[0][1], rows[1][0]))
    total = {}
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [[r[t] for t in range(n) if t != j] for r in rows[1:]]
        term = _mul_dicts(entry, _det_cofactor(minor))
        total = _add_dicts(total, term) if j % 2 == 0 else _sub_dicts(total, term)
    return total


def _det_bareiss(rows):
    """Fraction-free Bareiss elimination with full fewest-terms pivoting."""
    n = len(rows)
    m = [[dict(e) for e in r] for r in rows]
    sign = 1
    prev = None  # previous pivot, None means 1
    for step in range(n - 1):
        # fewest-terms nonzero pivot in the trailing block
        best = None
        for i in range(step, n):
            for j in range(step, n):
                if m[i][j]:
                    sz = len(m[i][j])
                    if best is None or sz < best[0]:
                        best = (sz, i, j)
        if best is None:
            return {}
        _, pi, pj = best
        if pi != step:
            m[step], m[pi] = m[pi], m[step]
            sign = -sign
        if pj != step:
            for r in m:
                r[step], r[pj] = r[pj], r[step]
            sign = -sign
        piv = m[step][step]
        for i in range(step + 1, n):
            for j in range(step + 1, n):
                num = _sub_dicts(_mul_dicts(piv, m[i][j]),
                                 _mul_dicts(m[i][step], m[step][j]))
                m[i][j] = _exact_div_dicts(num, prev) if prev else num
            m[i][step] = {}
        prev = piv
    result = m[n - 1][n - 1]
    return result if sign == 1 else {e: -c for e, c in result.items()}


def poly_det(mat: PolyMatrix) -> MultiPoly:
    """Exact determinant of a square PolyMatrix.

    Cofactor expansion below size 4, fraction-free Bareiss with
    fewest-terms pivoting from size 4 up.
    """
    r, c = mat.shape
    if r != c:
        raise ValueError(f"determinant of a {r}x{c} matrix")
    if r == 0:
        return MultiPoly.constant(mat.names, 1)
    rows = [[p.terms for p in row] for row in mat.rows]
    if r < 4:
        return MultiPoly(mat.names, _det_cofactor(rows))
    return MultiPoly(mat.names, _det_bareiss(rows))


def det_at_point(mat: PolyMatrix, point):
    """Evaluate entries at a rational point, then exact numeric determinant."""
    vals = mat.evaluate(point)
    return fraction_matrix_det(vals)


def fraction_matrix_rank(vals) -> int:
    """Exact rank of a matrix of Fractions/ints via Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in vals]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = 1 / prow[col]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


def fraction_matrix_det(vals):
    """Exact determinant of a square matrix of Fractions/ints.

    Rows are cleared to integers (tracking the scale), then integer Bareiss.
    """
    n = len(vals)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in vals:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        scale /= den
        m.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for step in range(n - 1):
        piv_row = None
        for i in range(step, n):
            if m[i][step]:
                piv_row = i
                break
        if piv_row is None:
            return Fraction(0)
        if piv_row != step:
            m[step], m[piv_row] = m[piv_row], m[step]
            sign = -sign
        piv = m[step][step]
        for i in range(step + 1, n):
            mi = m[i]
            ms = m[step]
            a = mi[step]
            for j in range(step + 1, n):
                mi[j] = (piv * mi[j] - a * ms[j]) // prev
            mi[step] = 0
        prev = piv
    return scale * sign * m[n - 1][n - 1]
