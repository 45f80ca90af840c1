"""Schensted insertion, plactic normal forms and tableau enumeration.

Words over 1..D are sent to semistandard Young tableaux by row bumping;
two words are Knuth equivalent exactly when they share a tableau.  The
enumeration of all tableaux with a given cell count doubles as an
independent combinatorial count of graded dimensions.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

from .algebra import DEFAULT_WORD_LIMIT, GradedAlgebra, MemoryGuardError
from .linalg import InternalConsistencyError, Word


class Tableau:
    """Semistandard Young tableau: weakly increasing rows, strictly
    increasing columns, weakly decreasing row lengths."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        for i, row in enumerate(rows):
            if not row:
                raise ValueError("empty row in tableau")
            if any(x < 1 for x in row):
                raise ValueError("tableau entries must be positive")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not weakly increasing")
            if i:
                above = rows[i - 1]
                if len(row) > len(above):
                    raise ValueError("row lengths must weakly decrease")
                if any(row[j] <= above[j] for j in range(len(row))):
                    raise ValueError("columns must strictly increase")
        self.rows = rows

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def render_lines(self) -> list[str]:
        return [" ".join(str(x) for x in row) for row in self.rows]

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]!r})"


EMPTY_TABLEAU = Tableau(())


def row_insert(tableau: Tableau, x: int, max_letter: int | None = None) -> Tableau:
    """Schensted row bumping: replace the leftmost entry strictly greater
    than x, push the displaced entry into the next row, append at the end."""
    if x < 1 or (max_letter is not None and x > max_letter):
        raise ValueError(f"letter {x} out of range")
    rows = [list(row) for row in tableau.rows]
    current = x
    for row in rows:
        pos = bisect_right(row, current)
        if pos == len(row):
            row.append(current)
            return Tableau(rows)
        current, row[pos] = row[pos], current
    rows.append([current])
    return Tableau(rows)


def word_to_tableau(word) -> Tableau:
    """Plactic normal form: insert the letters left to right."""
    tableau = EMPTY_TABLEAU
    for letter in word:
        tableau = row_insert(tableau, letter)
    return tableau


def reading_word(tableau: Tableau) -> Word:
    """Row word: bottom row to top row, each read left to right.

    Inserting it reproduces the tableau.
    """
    out: list[int] = []
    for row in reversed(tableau.rows):
        out.extend(row)
    return tuple(out)


def knuth_equivalent(w1, w2) -> bool:
    return word_to_tableau(w1) == word_to_tableau(w2)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of n as weakly decreasing tuples, ascending lex order."""
    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest
    return tuple(sorted(gen(n, n)))


def tableaux_of_shape(shape, max_letter: int):
    """All semistandard fillings of a shape with entries up to max_letter,
    in lexicographic order of the concatenated rows."""
    shape = tuple(shape)
    if not shape:
        yield EMPTY_TABLEAU
        return
    if len(shape) > max_letter:
        return
    rows: list[list[int]] = []

    def fill_row(r):
        if r == len(shape):
            yield Tableau([list(row) for row in rows])
            return
        row = [0] * shape[r]

        def fill_cell(c):
            if c == shape[r]:
                rows.append(row)
                yield from fill_row(r + 1)
                rows.pop()
                return
            lo = row[c - 1] if c else 1
            if r:
                lo = max(lo, rows[r - 1][c] + 1)
            for value in range(lo, max_letter + 1):
                row[c] = value
                yield from fill_cell(c + 1)
            row[c] = 0

        yield from fill_cell(0)

    yield from fill_row(0)


def enumerate_tableaux(D: int, n: int,
                       word_limit: int = DEFAULT_WORD_LIMIT) -> list[Tableau]:
    """Every tableau with n cells and entries up to D, by shape then filling.

    The same degree cap as the algebra side applies: the tableau count is
    bounded by the word count D^n, which must stay under the limit.
    """
    if D < 1 or n < 0:
        raise ValueError("need D >= 1 and n >= 0")
    if D ** n > word_limit:
        raise MemoryGuardError(
            f"cell count {n} needs up to D^n = {D ** n} tableaux, "
            f"above the configured limit of {word_limit}")
    out = []
    for shape in partitions(n):
        out.extend(tableaux_of_shape(shape, D))
    return out


def count_tableaux(D: int, n: int, word_limit: int = DEFAULT_WORD_LIMIT) -> int:
    return len(enumerate_tableaux(D, n, word_limit))


@dataclass(frozen=True)
class DimensionCrossCheck:
    """Per-degree agreement of tableau counts with two algebra dimensions."""

    D: int
    n_max: int
    counts: tuple[int, ...]


def dimension_cross_check(D: int, n_max: int,
                          word_limit: int = DEFAULT_WORD_LIMIT) -> DimensionCrossCheck:
    """Assert the three-way count identity degree by degree.

    Tableau count == plactic component dimension == parafermionic
    component dimension; any mismatch raises with the offending degree.
    """
    from .catalog import parafermion, plactic

    plactic_algebra = GradedAlgebra(plactic(D), word_limit=word_limit)
    parafermi_algebra = GradedAlgebra(parafermion(D), word_limit=word_limit)
    counts = []
    for n in range(n_max + 1):
        tableaux = count_tableaux(D, n)
        from_plactic = plactic_algebra.component_dim(n)
        from_parafermion = parafermi_algebra.component_dim(n)
        if not tableaux == from_plactic == from_parafermion:
            raise InternalConsistencyError(
                f"dimension mismatch at degree {n}: {tableaux} tableaux, "
                f"plactic {from_plactic}, parafermionic {from_parafermion}")
        counts.append(tableaux)
    return DimensionCrossCheck(D, n_max, tuple(counts))
