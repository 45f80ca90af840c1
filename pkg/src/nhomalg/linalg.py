"""Exact linear algebra on sparse rational vectors indexed by words.

A *word* is a tuple of letters ``1..D`` and indexes the monomial basis of
the degree-n tensor power of a D-dimensional space.  Vectors are sparse
maps from words to nonzero ``Fraction`` coefficients; spans are kept in a
canonical reduced row-echelon form, so every computation is exact and
deterministic: rerunning a pipeline reproduces bit-identical rows.

The word order is degreewise lexicographic with ``1 < 2 < ... < D`` and
the pivot of a row is its greatest word, which makes the non-pivot
(normal) monomials the lexicographically small ones.  ``order="revlex"``
compares with the letter order reversed; it exists so callers can verify
that exported quantities do not depend on this section choice.

Row reduction internally works on integer-scaled primitive rows (fraction
free elimination); only the exported rows and coordinates are Fractions,
always in lowest terms.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd, lcm
from typing import Iterable, Iterator

Word = tuple[int, ...]

ORDERS = ("lex", "revlex")

_ZERO = Fraction(0)


class DegreeMismatchError(ValueError):
    """Operands live in tensor powers of different degrees."""


class InternalConsistencyError(RuntimeError):
    """An invariant guaranteed by construction was violated: a bug."""


def order_key(order: str):
    """Sort key on words; the pivot of a row is the key-greatest word."""
    if order == "lex":
        return lambda word: word
    if order == "revlex":
        return lambda word: tuple(-letter for letter in word)
    raise ValueError(f"unknown word order {order!r}, expected one of {ORDERS}")


def all_words(alphabet: int, degree: int) -> Iterator[Word]:
    """All words of one degree over ``1..alphabet``, ascending lex."""
    return product(range(1, alphabet + 1), repeat=degree)


def format_word(word: Word) -> str:
    if all(letter <= 9 for letter in word):
        return "".join(str(letter) for letter in word) or "()"
    return "(" + ".".join(str(letter) for letter in word) + ")"


class TensorVector:
    """Sparse exact vector in a fixed tensor-power degree.

    Immutable by convention: no method mutates ``terms`` after
    construction, so instances are safe to share across threads.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Word, Fraction] = {}
        for word, coeff in items:
            word = tuple(word)
            if len(word) != degree:
                raise DegreeMismatchError(
                    f"word {word} has degree {len(word)}, expected {degree}")
            if any(letter < 1 for letter in word):
                raise ValueError(f"letters must be positive integers, got {word}")
            acc[word] = acc.get(word, _ZERO) + Fraction(coeff)
        self.degree = degree
        self.terms = {word: c for word, c in acc.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word) -> Fraction:
        return self.terms.get(tuple(word), _ZERO)

    def support(self) -> set[Word]:
        return set(self.terms)

    def sorted_terms(self, order: str = "lex") -> list[tuple[Word, Fraction]]:
        key = order_key(order)
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def __add__(self, other: "TensorVector") -> "TensorVector":
        if not isinstance(other, TensorVector):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatchError(f"{self.degree} != {other.degree}")
        merged = dict(self.terms)
        for word, c in other.terms.items():
            merged[word] = merged.get(word, _ZERO) + c
        return TensorVector(self.degree, merged)

    def __neg__(self) -> "TensorVector":
        return TensorVector(self.degree, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def __mul__(self, scalar) -> "TensorVector":
        scalar = Fraction(scalar)
        return TensorVector(self.degree, {w: c * scalar for w, c in self.terms.items()})

    __rmul__ = __mul__

    def tensor(self, other: "TensorVector") -> "TensorVector":
        out: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                out[word] = out.get(word, _ZERO) + c1 * c2
        return TensorVector(self.degree + other.degree, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TensorVector)
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        return f"TensorVector({self.degree}, {format_vector(self)!r})"


def zero_vector(degree: int) -> TensorVector:
    return TensorVector(degree, ())


def word_vector(word) -> TensorVector:
    word = tuple(word)
    return TensorVector(len(word), {word: Fraction(1)})


def format_vector(v: TensorVector, order: str = "lex") -> str:
    if v.is_zero():
        return "0"
    parts = []
    for word, coeff in v.sorted_terms(order):
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, f"{abs(coeff)}*{format_word(word)}"))
    first_sign, first_term = parts[0]
    text = ("-" if first_sign == "-" else "") + first_term
    for sign, term in parts[1:]:
        text += f" {sign} {term}"
    return text


# ---------------------------------------------------------------------------
# Integer-scaled row reduction core.

_IntRow = dict[Word, int]


def _primitive(row: _IntRow) -> _IntRow:
    g = gcd(*row.values()) if len(row) > 1 else abs(next(iter(row.values())))
    if g > 1:
        return {w: c // g for w, c in row.items()}
    return row


def _int_rows(vectors: Iterable[TensorVector]) -> list[_IntRow]:
    rows = []
    for v in vectors:
        if v.is_zero():
            continue
        den = lcm(*(c.denominator for c in v.terms.values()))
        rows.append(_primitive({w: int(c * den) for w, c in v.terms.items()}))
    return rows


def _combine(row: _IntRow, other: _IntRow, word: Word) -> _IntRow:
    """Return ``a*row - b*other`` killing ``word`` (a, b its coefficients)."""
    a = other[word]
    b = row[word]
    new = {w: a * c for w, c in row.items()}
    for w, c in other.items():
        nc = new.get(w, 0) - b * c
        if nc:
            new[w] = nc
        elif w in new:
            del new[w]
    return _primitive(new) if new else new


def _echelon(rows: list[_IntRow], key) -> dict[Word, _IntRow]:
    """Forward pass: map pivot word -> row whose support is <= that pivot."""
    pivots: dict[Word, _IntRow] = {}
    for row in rows:
        row = dict(row)
        while row:
            w = max(row, key=key)
            hit = pivots.get(w)
            if hit is None:
                pivots[w] = _primitive(row)
                break
            row = _combine(row, hit, w)
    return pivots


def _full_reduce(pivots: dict[Word, _IntRow], key) -> dict[Word, _IntRow]:
    """Backward pass: eliminate every pivot from every other row."""
    done: dict[Word, _IntRow] = {}
    for w in sorted(pivots, key=key):
        row = pivots[w]
        # A finished row's support is its pivot plus free words only, so a
        # single pass over the current pivot hits suffices.
        for hit in [k for k in row if k != w and k in done]:
            row = _combine(row, done[hit], hit)
        done[w] = row
    return done


class Subspace:
    """Canonical row-reduced span inside one tensor power.

    Invariants: each row has coefficient 1 at its pivot (its greatest word
    under the span's order), no row has support at another row's pivot,
    and rows are listed with strictly decreasing pivots.  Built through
    :func:`rref`; instances are immutable.
    """

    __slots__ = ("alphabet", "degree", "order", "rows", "pivots", "_by_pivot")

    def __init__(self, alphabet: int, degree: int, rows, order: str = "lex"):
        key = order_key(order)
        self.alphabet = alphabet
        self.degree = degree
        self.order = order
        self.rows = tuple(rows)
        self.pivots = tuple(max(r.terms, key=key) for r in self.rows)
        self._by_pivot = dict(zip(self.pivots, self.rows))

    @classmethod
    def zero(cls, alphabet: int, degree: int, order: str = "lex") -> "Subspace":
        return cls(alphabet, degree, (), order)

    @classmethod
    def full(cls, alphabet: int, degree: int, order: str = "lex") -> "Subspace":
        key = order_key(order)
        words = sorted(all_words(alphabet, degree), key=key, reverse=True)
        return cls(alphabet, degree, [word_vector(w) for w in words], order)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def codim(self) -> int:
        return self.alphabet ** self.degree - self.dim

    def _check(self, v: TensorVector):
        if v.degree != self.degree:
            raise DegreeMismatchError(f"vector degree {v.degree} != {self.degree}")
        for word in v.terms:
            if any(letter > self.alphabet for letter in word):
                raise ValueError(f"word {word} uses letters above {self.alphabet}")

    def reduce(self, v: TensorVector) -> TensorVector:
        """Canonical remainder of ``v``: no pivot word left in its support."""
        self._check(v)
        rem = dict(v.terms)
        for w in [w for w in rem if w in self._by_pivot]:
            c = rem.pop(w)
            for k, rc in self._by_pivot[w].terms.items():
                if k == w:
                    continue
                nc = rem.get(k, _ZERO) - c * rc
                if nc:
                    rem[k] = nc
                elif k in rem:
                    del rem[k]
        return TensorVector(self.degree, rem)

    def contains(self, v: TensorVector) -> bool:
        return self.reduce(v).is_zero()

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.rows)

    def coordinates(self, v: TensorVector) -> list[Fraction] | None:
        """Coefficients of ``v`` over the rows, or None if v is outside."""
        if not self.reduce(v).is_zero():
            return None
        # In full RREF the coordinate over a row is v's pivot coefficient.
        return [v.coefficient(p) for p in self.pivots]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.alphabet == other.alphabet
                and self.degree == other.degree
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.alphabet, self.degree, self.rows))

    def __repr__(self):
        return (f"Subspace(D={self.alphabet}, degree={self.degree}, "
                f"dim={self.dim}, order={self.order!r})")


def rref(vectors: Iterable[TensorVector], alphabet: int, degree: int | None = None,
         order: str = "lex") -> Subspace:
    """Row-reduced span of the given vectors.

    ``degree`` is required when the span is empty; otherwise it is taken
    from the vectors (which must all agree).
    """
    vectors = list(vectors)
    if degree is None:
        if not vectors:
            raise ValueError("degree is required for an empty span")
        degree = vectors[0].degree
    key = order_key(order)
    for v in vectors:
        if v.degree != degree:
            raise DegreeMismatchError(
                f"mixed degrees in span: {v.degree} != {degree}")
        for word in v.terms:
            if any(letter > alphabet for letter in word):
                raise ValueError(f"word {word} uses letters above {alphabet}")
    done = _full_reduce(_echelon(_int_rows(vectors), key), key)
    rows = []
    for w in sorted(done, key=key, reverse=True):
        row = done[w]
        lead = row[w]
        rows.append(TensorVector(degree, {k: Fraction(c, lead) for k, c in row.items()}))
    return Subspace(alphabet, degree, rows, order)


def _annihilator_vectors(space: Subspace) -> list[TensorVector]:
    """Raw spanning set of the annihilator, one vector per free word.

    With the self-dual word pairing, a row ``e_p + sum c_f e_f`` forces
    ``w_p = -c_f`` on the functional that is 1 at free word f.
    """
    pivotset = set(space.pivots)
    vecs: dict[Word, dict[Word, Fraction]] = {
        w: {w: Fraction(1)}
        for w in all_words(space.alphabet, space.degree) if w not in pivotset
    }
    for pivot, row in zip(space.pivots, space.rows):
        for word, coeff in row.terms.items():
            if word != pivot:
                vecs[word][pivot] = -coeff
    return [TensorVector(space.degree, terms) for terms in vecs.values()]


def annihilator(space: Subspace) -> Subspace:
    """All dual vectors vanishing on the space, in the word basis.

    dim(space) + dim(annihilator) = alphabet ** degree.
    """
    return rref(_annihilator_vectors(space), space.alphabet, space.degree,
                space.order)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection, computed by stacking the two annihilators."""
    if s1.degree != s2.degree:
        raise DegreeMismatchError(f"{s1.degree} != {s2.degree}")
    if s1.alphabet != s2.alphabet or s1.order != s2.order:
        raise ValueError("subspaces live in different ambients")
    constraints = rref(_annihilator_vectors(s1) + _annihilator_vectors(s2),
                       s1.alphabet, s1.degree, s1.order)
    return annihilator(constraints)


def shifted_span(space: Subspace, left: int, right: int) -> list[TensorVector]:
    """Spanning set of E^(x left) (x) space (x) E^(x right)."""
    if left < 0 or right < 0:
        raise ValueError("shift lengths must be nonnegative")
    degree = left + space.degree + right
    out = []
    for u in all_words(space.alphabet, left):
        for row in space.rows:
            for w in all_words(space.alphabet, right):
                out.append(TensorVector(
                    degree, {u + word + w: c for word, c in row.terms.items()}))
    return out


# ---------------------------------------------------------------------------
# Small dense matrices over the rationals (chain-complex mechanics).

class Matrix:
    """Dense exact-rational matrix; rows of Python lists."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        if entries is None:
            entries = [[_ZERO] * ncols for _ in range(nrows)]
        self.entries = entries

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        m = cls(n, n)
        for i in range(n):
            m.entries[i][i] = Fraction(1)
        return m

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(self.nrows, self.ncols,
                      [[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def mul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.ncols} != {other.nrows}")
        out = Matrix.zero(self.nrows, other.ncols)
        for i, row in enumerate(self.entries):
            target = out.entries[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in enumerate(other.entries[k]):
                    if b:
                        target[j] += a * b
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows,
                      [[self.entries[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)])

    def kron(self, other: "Matrix") -> "Matrix":
        out = Matrix.zero(self.nrows * other.nrows, self.ncols * other.ncols)
        for i, row in enumerate(self.entries):
            for j, a in enumerate(row):
                if not a:
                    continue
                for k, orow in enumerate(other.entries):
                    target = out.entries[i * other.nrows + k]
                    base = j * other.ncols
                    for l, b in enumerate(orow):
                        if b:
                            target[base + l] = a * b
        return out

    def rank(self) -> int:
        # Fraction-free elimination on integer-scaled row copies.
        rows = []
        for row in self.entries:
            if any(row):
                den = lcm(*(Fraction(e).denominator for e in row))
                rows.append([int(e * den) for e in row])
        rank = 0
        for col in range(self.ncols):
            pivot_row = None
            for i in range(rank, len(rows)):
                if rows[i][col]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
            piv = rows[rank]
            a = piv[col]
            for i in range(rank + 1, len(rows)):
                b = rows[i][col]
                if b:
                    new = [a * x - b * y for x, y in zip(rows[i], piv)]
                    g = gcd(*new) if any(new) else 0
                    rows[i] = [x // g for x in new] if g > 1 else new
            rank += 1
            if rank == len(rows):
                break
        return rank

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix)
                and self.nrows == other.nrows and self.ncols == other.ncols
                and all(a == b for r1, r2 in zip(self.entries, other.entries)
                        for a, b in zip(r1, r2)))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"
