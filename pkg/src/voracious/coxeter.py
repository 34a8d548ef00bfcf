"""Coxeter systems: presentation matrix, geometric representation, words, balls.

A group element is stored as its matrix in the geometric representation
together with the matrix of its inverse and its cached word length.  The
representation is faithful, so matrix equality is group equality.  Lengths
are never assumed from input words: generator application tracks them by an
exact root-sign test, and lengths of arbitrary products are recomputed by a
descent walk back to the identity.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .field import FieldContext, FieldScalar

INF = 0  # encoding of an infinite Coxeter matrix entry, here and in config files

Word = tuple[int, ...]


class GroupConfigError(ValueError):
    """Malformed group configuration (file contents or matrix data)."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration cap was exceeded."""


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of pairwise orders m_st; diagonal 1, INF encodes infinity."""

    generators: tuple[str, ...]
    orders: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.generators)
        if k == 0:
            raise GroupConfigError("at least one generator is required")
        if len(set(self.generators)) != k:
            raise GroupConfigError("generator names must be distinct")
        if any(not isinstance(g, str) or not g for g in self.generators):
            raise GroupConfigError("generator names must be nonempty strings")
        if len(self.orders) != k or any(len(row) != k for row in self.orders):
            raise GroupConfigError("order matrix must be square of rank len(generators)")
        for i in range(k):
            for j in range(k):
                m = self.orders[i][j]
                if not isinstance(m, int):
                    raise GroupConfigError("matrix entries must be integers")
                if m != self.orders[j][i]:
                    raise GroupConfigError("order matrix must be symmetric")
                if i == j:
                    if m != 1:
                        raise GroupConfigError("diagonal entries must equal 1")
                elif m != INF and m < 2:
                    raise GroupConfigError(
                        "off-diagonal entries must be >= 2 (or 0 for infinity)"
                    )

    @property
    def rank(self) -> int:
        return len(self.generators)

    def order(self, i: int, j: int) -> int:
        return self.orders[i][j]

    def field_modulus(self) -> int:
        """lcm of the finite entries; 1 when every off-diagonal order is infinite."""
        m = 1
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.orders[i][j] != INF:
                    m = math.lcm(m, self.orders[i][j])
        return m

    def automorphisms(self) -> list[tuple[int, ...]]:
        """All permutations of the generator indices preserving the orders."""
        from itertools import permutations

        k = self.rank
        out = []
        for perm in permutations(range(k)):
            if all(
                self.orders[perm[i]][perm[j]] == self.orders[i][j]
                for i in range(k)
                for j in range(k)
            ):
                out.append(perm)
        return out


def parse_group_config(text: str) -> CoxeterMatrix:
    """Parse a JSON group config: {"generators": [...], "m": [[...]]}; 0 = infinity."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GroupConfigError(f"invalid JSON: {e}") from e
    if not isinstance(data, dict):
        raise GroupConfigError("group config must be a JSON object")
    gens = data.get("generators")
    rows = data.get("m")
    if not isinstance(gens, list) or not isinstance(rows, list):
        raise GroupConfigError('group config needs "generators" and "m" lists')
    try:
        orders = tuple(tuple(row) for row in rows)
    except TypeError as e:
        raise GroupConfigError('"m" must be a list of lists') from e
    return CoxeterMatrix(tuple(gens), orders)


def load_group_file(path: str) -> CoxeterMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group_config(fh.read())


def word_to_string(word: Word, generators) -> str:
    """Render a word; single-character alphabets concatenate, others comma-join."""
    names = [generators[i] for i in word]
    if all(len(g) == 1 for g in generators):
        return "".join(names)
    return ",".join(names)


def word_from_string(text: str, generators) -> Word:
    if text == "":
        return ()
    index = {g: i for i, g in enumerate(generators)}
    if all(len(g) == 1 for g in generators) and "," not in text:
        letters = list(text)
    else:
        letters = text.split(",")
    word = []
    for letter in letters:
        if letter not in index:
            raise GroupConfigError(f"unknown generator {letter!r}")
        word.append(index[letter])
    return tuple(word)


class GroupElement:
    """Element of a Coxeter group: matrix, inverse matrix, cached length."""

    __slots__ = ("matrix", "inv", "length", "_hash")

    def __init__(self, matrix, inv, length):
        self.matrix = matrix
        self.inv = inv
        self.length = length
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.matrix)
            self._hash = h
        return h

    def __repr__(self):
        return f"<element of length {self.length}>"


def _column(matrix, j):
    return tuple(row[j] for row in matrix)


class CoxeterSystem:
    """A Coxeter group with its geometric representation and word machinery."""

    def __init__(self, cox: CoxeterMatrix, max_ball_elements: int = 1_000_000):
        self.cox = cox
        self.rank = cox.rank
        self.max_ball_elements = max_ball_elements
        self.ctx = FieldContext(cox.field_modulus())
        ctx = self.ctx
        k = self.rank

        # 2B has integer polynomial entries; B itself picks up halves.
        gram2 = []
        for i in range(k):
            row = []
            for j in range(k):
                if i == j:
                    row.append(ctx.rational(2))
                elif cox.orders[i][j] == INF:
                    row.append(ctx.rational(-2))
                else:
                    row.append(-ctx.two_cos_pi_over(cox.orders[i][j]))
            gram2.append(tuple(row))
        self.gram2 = tuple(gram2)
        from fractions import Fraction

        half = Fraction(1, 2)
        self.gram = tuple(tuple(x * half for x in row) for row in self.gram2)

        # Generator s acts by v -> v - 2 B(alpha_s, v) alpha_s; as a matrix this
        # replaces row s of the identity by e_s - (2B) row s.
        mats = []
        for s in range(k):
            rows = []
            for i in range(k):
                if i != s:
                    rows.append(tuple(ctx.one if j == i else ctx.zero for j in range(k)))
                else:
                    rows.append(
                        tuple(
                            (ctx.one if j == s else ctx.zero) - self.gram2[s][j]
                            for j in range(k)
                        )
                    )
            mats.append(tuple(rows))
        self._gen_mats = tuple(mats)

        ident = tuple(
            tuple(ctx.one if i == j else ctx.zero for j in range(k)) for i in range(k)
        )
        self.identity = GroupElement(ident, ident, 0)
        self._simple_roots = tuple(_column(ident, j) for j in range(k))

        self._layers: list[list[GroupElement]] = [[self.identity]]
        self._interned: dict[GroupElement, GroupElement] = {self.identity: self.identity}
        self._reduced_cache: dict[GroupElement, frozenset[Word]] = {}
        self._rmul_cache: dict[tuple[GroupElement, int], GroupElement] = {}

    # -- linear algebra ----------------------------------------------------

    def matmul(self, a, b):
        k = self.rank
        bcols = tuple(zip(*b))
        rows = []
        for arow in a:
            row = []
            for bcol in bcols:
                acc = arow[0] * bcol[0]
                for i in range(1, k):
                    acc = acc + arow[i] * bcol[i]
                row.append(acc)
            rows.append(tuple(row))
        return tuple(rows)

    def apply_matrix(self, matrix, vec):
        k = self.rank
        out = []
        for row in matrix:
            acc = row[0] * vec[0]
            for i in range(1, k):
                acc = acc + row[i] * vec[i]
            out.append(acc)
        return tuple(out)

    def _mul_gen_right(self, mat, s: int):
        """mat @ M_s without a full product: M_s only disturbs column data
        through column s, and rows with a zero s-entry pass through unchanged
        (the row tuple is shared, not copied)."""
        k = self.rank
        row_s = self.gram2[s]
        out = []
        for row in mat:
            x = row[s]
            if x.is_zero():
                out.append(row)
                continue
            out.append(
                tuple(
                    -x if j == s else row[j] - x * row_s[j] for j in range(k)
                )
            )
        return tuple(out)

    def _mul_gen_left(self, s: int, mat):
        """M_s @ mat: only row s changes; every other row tuple is shared."""
        k = self.rank
        row_s = self.gram2[s]
        new_row = []
        for j in range(k):
            acc = row_s[0] * mat[0][j]
            for i in range(1, k):
                acc = acc + row_s[i] * mat[i][j]
            new_row.append(mat[s][j] - acc)
        out = list(mat)
        out[s] = tuple(new_row)
        return tuple(out)

    def simple_root(self, i: int):
        return self._simple_roots[i]

    def generator_matrix(self, i: int):
        return self._gen_mats[i]

    def bilinear(self, u, v) -> FieldScalar:
        """B(u, v) for root-space vectors."""
        from fractions import Fraction

        return self.bilinear2(u, v) * Fraction(1, 2)

    def bilinear2(self, u, v) -> FieldScalar:
        """2 B(u, v); integer-valued on integer vectors."""
        k = self.rank
        acc = None
        for i in range(k):
            if not u[i].is_zero():
                row = self.gram2[i]
                part = row[0] * v[0]
                for j in range(1, k):
                    part = part + row[j] * v[j]
                term = u[i] * part
                acc = term if acc is None else acc + term
        return self.ctx.zero if acc is None else acc

    def gram2_row_dot(self, s: int, vec) -> FieldScalar:
        """2 B(alpha_s, vec)."""
        row = self.gram2[s]
        acc = row[0] * vec[0]
        for j in range(1, self.rank):
            acc = acc + row[j] * vec[j]
        return acc

    def root_sign(self, vec) -> int:
        """+1 for a positive root, -1 for a negative one.

        Roots of the representation have coordinates of one sign; anything
        else signals an arithmetic bug, so mixed signs raise.
        """
        pos = neg = False
        for x in vec:
            s = x.sign()
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
        if pos and neg:
            raise ArithmeticError("root has coordinates of both signs")
        if not (pos or neg):
            raise ArithmeticError("zero vector is not a root")
        return 1 if pos else -1

    # -- group operations --------------------------------------------------

    def right_mul(self, g: GroupElement, s: int) -> GroupElement:
        """g * s, with the length tracked by the sign of g(alpha_s).

        Memoized: enumeration loops revisit the same small ball many times,
        and the cache stays within rank * |explored ball| entries.
        """
        key = (g, s)
        hit = self._rmul_cache.get(key)
        if hit is not None:
            return hit
        delta = self.root_sign(_column(g.matrix, s))
        out = GroupElement(
            self._mul_gen_right(g.matrix, s),
            self._mul_gen_left(s, g.inv),
            g.length + delta,
        )
        self._rmul_cache[key] = out
        return out

    def left_mul(self, g: GroupElement, s: int) -> GroupElement:
        """s * g, with the length tracked by the sign of g^{-1}(alpha_s)."""
        delta = self.root_sign(_column(g.inv, s))
        return GroupElement(
            self._mul_gen_left(s, g.matrix),
            self._mul_gen_right(g.inv, s),
            g.length + delta,
        )

    def inverse(self, g: GroupElement) -> GroupElement:
        return GroupElement(g.inv, g.matrix, g.length)

    def multiply(self, g: GroupElement, h: GroupElement, length: int | None = None):
        """g * h; the length is recomputed by a descent walk unless supplied."""
        matrix = self.matmul(g.matrix, h.matrix)
        inv = self.matmul(h.inv, g.inv)
        if length is None:
            length = self.length_of_matrix(matrix)
        return GroupElement(matrix, inv, length)

    def length_of_matrix(self, matrix) -> int:
        """Word length of the element with this matrix, by stripping right descents."""
        k = self.rank
        n = 0
        cur = matrix
        while True:
            for s in range(k):
                if self.root_sign(_column(cur, s)) < 0:
                    cur = self._mul_gen_right(cur, s)
                    n += 1
                    break
            else:
                if cur != self.identity.matrix:
                    raise ArithmeticError("descent walk did not reach the identity")
                return n

    def element_of_word(self, word: Word) -> GroupElement:
        g = self.identity
        for s in word:
            if not 0 <= s < self.rank:
                raise GroupConfigError(f"generator index {s} out of range")
            g = self.right_mul(g, s)
        return g

    # -- descents and words ------------------------------------------------

    def right_descents(self, g: GroupElement) -> tuple[int, ...]:
        return tuple(
            s for s in range(self.rank) if self.root_sign(_column(g.matrix, s)) < 0
        )

    def left_descents(self, g: GroupElement) -> tuple[int, ...]:
        return tuple(
            s for s in range(self.rank) if self.root_sign(_column(g.inv, s)) < 0
        )

    def shortlex_word(self, g: GroupElement) -> Word:
        """Lexicographically least reduced word: greedy smallest left descent."""
        word = []
        cur = g
        while cur.length:
            for s in range(self.rank):
                if self.root_sign(_column(cur.inv, s)) < 0:
                    word.append(s)
                    cur = self.left_mul(cur, s)
                    break
        return tuple(word)

    def reduced_words(self, g: GroupElement) -> frozenset[Word]:
        """All reduced words of g, by recursion over left descents."""
        got = self._reduced_cache.get(g)
        if got is not None:
            return got
        if g.length == 0:
            out = frozenset({()})
        else:
            words = set()
            for s in self.left_descents(g):
                for w in self.reduced_words(self.left_mul(g, s)):
                    words.add((s,) + w)
            out = frozenset(words)
        self._reduced_cache[g] = out
        return out

    # -- metric balls -------------------------------------------------------

    def _extend_layers(self, radius: int, cap: int | None = None) -> None:
        # Layers commit atomically so a cap overrun never leaves a partially
        # interned layer behind.
        cap = self.max_ball_elements if cap is None else cap
        count = sum(len(layer) for layer in self._layers)
        while len(self._layers) <= radius:
            last = self._layers[-1]
            nxt = []
            fresh: set[GroupElement] = set()
            for g in last:
                for s in range(self.rank):
                    h = self.right_mul(g, s)
                    if h not in self._interned and h not in fresh:
                        fresh.add(h)
                        nxt.append(h)
                        count += 1
                        if count > cap:
                            raise ResourceLimitError(
                                f"ball enumeration exceeded {cap} elements"
                            )
            for h in nxt:
                self._interned[h] = h
            if not nxt:
                self._layers.append([])
                break
            self._layers.append(nxt)

    def sphere(self, radius: int) -> list[GroupElement]:
        self._extend_layers(radius)
        if radius < len(self._layers):
            return list(self._layers[radius])
        return []

    def ball(self, radius: int) -> list[GroupElement]:
        """All elements of length <= radius, in breadth-first (deterministic) order."""
        self._extend_layers(radius)
        out = []
        for layer in self._layers[: radius + 1]:
            out.extend(layer)
        return out

    def intern(self, g: GroupElement) -> GroupElement:
        """Canonical instance of g if the enumeration has seen it, else g itself."""
        return self._interned.get(g, g)

    def is_finite(self) -> bool:
        """Whether the group is finite: positive definiteness of the form.

        Decided exactly by symmetric Gaussian elimination on 2B; the group is
        finite iff every pivot is positive.
        """
        k = self.rank
        m = [list(row) for row in self.gram2]
        for i in range(k):
            piv = m[i][i]
            if piv.sign() <= 0:
                return False
            inv = piv.inverse()
            for r in range(i + 1, k):
                f = m[r][i] * inv
                if f.is_zero():
                    continue
                for c in range(i + 1, k):
                    m[r][c] = m[r][c] - f * m[i][c]
        return True

    def __repr__(self):
        return f"CoxeterSystem({'/'.join(self.cox.generators)}, rank={self.rank})"
