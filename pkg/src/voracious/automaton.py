"""Finite state automaton accepting the voracious language.

States are finite sets of small-root walls: the state reached after reading
a language word of g is g^{-1} W(g), the frontier of g pulled back to the
base chamber.  Transitions append one projection block.  A pivot is an
element whose voracious projection is the identity; blocks of any chain are
pivots, and an edge labelled by the reduced words of pivot w may leave state
A only if no wall of A is an inversion wall of w and every wall of A admits
a separator from chamber w.  The target state w^{-1} W(w) depends on w
alone.

Small walls are closed under the moves that keep |B| < 1, starting from the
simple walls; a wall fails to be small exactly when some other wall lies
fully between the identity chamber and it, which yields an independent
brute-force oracle over any ball.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coxeter import (
    GroupElement,
    ResourceLimitError,
    Word,
    word_from_string,
    word_to_string,
)
from .walls import Wall, WallGeometry


def small_roots(geometry: WallGeometry, cap: int = 10_000) -> tuple[Wall, ...]:
    """All small-root walls, by closure from the simple walls.

    From a small wall with root beta and a generator s, the reflected wall
    s(beta) is small iff -2 < 2B(alpha_s, beta) < 2; outside that band the
    pair is disjoint and one wall shadows the other.
    """
    sys = geometry.system
    queue = [geometry.wall_of_generator(s) for s in range(sys.rank)]
    seen = set(queue)
    qi = 0
    while qi < len(queue):
        wall = queue[qi]
        qi += 1
        beta = wall.root
        for s in range(sys.rank):
            t = sys.gram2_row_dot(s, beta)
            if t.is_zero():
                continue
            if -2 < t < 2:
                vec = sys.apply_matrix(sys.generator_matrix(s), beta)
                if sys.root_sign(vec) < 0:
                    raise ArithmeticError("reflected small root must stay positive")
                new = geometry.wall_of_root(vec)
                if new not in seen:
                    seen.add(new)
                    queue.append(new)
                    if len(queue) > cap:
                        raise ResourceLimitError(
                            f"small-root closure exceeded {cap} walls"
                        )
    return tuple(sorted(seen, key=lambda w: w.key))


def small_roots_bruteforce(geometry: WallGeometry, radius: int) -> tuple[Wall, ...]:
    """Small walls among all walls of the ball, tested by the shadow criterion.

    A wall W is small iff no wall disjoint from W separates the identity
    chamber from W.  Any such wall lies in Inv(D) for D the far incident
    chamber of W, so the search over Inv(D) is exhaustive.
    """
    walls: set[Wall] = set()
    for g in geometry.system.ball(radius):
        walls |= geometry.inversion_walls(g)
    out = []
    for wall in sorted(walls, key=lambda w: w.key):
        inv = geometry.inversion_walls(geometry.incident_far_chamber(wall))
        if not any(
            other != wall and geometry.walls_disjoint(wall, other) for other in inv
        ):
            out.append(wall)
    return tuple(out)


def pivots(geometry: WallGeometry, cap: int) -> tuple[tuple[GroupElement, ...], bool]:
    """Elements with identity projection, up to length cap.

    Returns (pivots, saturated); saturated means a pivot occurred at the cap
    while longer elements exist, so the list may be truncated.
    """
    sys = geometry.system
    out = [
        g
        for g in sys.ball(cap)
        if g.length and geometry.voracious_projection(g) == sys.identity
    ]
    out.sort(key=lambda g: (g.length, sys.shortlex_word(g)))
    saturated = any(g.length == cap for g in out) and bool(sys.sphere(cap + 1))
    return tuple(out), saturated


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    pivot_word: Word
    labels: tuple[Word, ...]


def _wall_str(wall: Wall) -> str:
    return "(" + ", ".join(str(x) for x in wall.root) + ")"


class VoraciousAutomaton:
    """Automaton over small-wall states; accepts exactly the language words."""

    def __init__(
        self,
        geometry: WallGeometry,
        universe: tuple[Wall, ...],
        states: tuple[tuple[int, ...], ...],
        edges: tuple[Edge, ...],
        pivot_cap: int,
        pivot_saturated: bool,
    ):
        self.geometry = geometry
        self.generators = geometry.system.cox.generators
        self.universe = universe
        self.states = states
        self.start = 0
        self.edges = edges
        self.pivot_cap = pivot_cap
        self.pivot_saturated = pivot_saturated
        if states[0] != ():
            raise ValueError("state 0 must be the empty frontier")
        self._state_index = {st: i for i, st in enumerate(states)}
        self._by_source: list[tuple[tuple[Word, int], ...]] | None = None

    # -- running the machine -------------------------------------------------

    def _label_index(self):
        if self._by_source is None:
            per: list[list[tuple[Word, int]]] = [[] for _ in self.states]
            for e in self.edges:
                for lab in e.labels:
                    per[e.source].append((lab, e.target))
            self._by_source = tuple(
                tuple(sorted(row, key=lambda p: (len(p[0]), p[0]))) for row in per
            )
        return self._by_source

    def run_states(self, word: Word) -> frozenset[int]:
        """States reachable by splitting the word into consecutive edge labels."""
        by_source = self._label_index()
        n = len(word)
        reach: list[set[int]] = [set() for _ in range(n + 1)]
        reach[0].add(self.start)
        for i in range(n):
            for state in reach[i]:
                for lab, target in by_source[state]:
                    ln = len(lab)
                    if i + ln <= n and word[i : i + ln] == lab:
                        reach[i + ln].add(target)
        return frozenset(reach[n])

    def accepts(self, word: Word) -> bool:
        return bool(self.run_states(word))

    def state_of_walls(self, walls) -> int | None:
        """Index of the state matching a set of walls, or None."""
        try:
            key = tuple(sorted(self._universe_index[w] for w in walls))
        except KeyError:
            return None
        return self._state_index.get(key)

    @property
    def _universe_index(self):
        idx = getattr(self, "_uidx", None)
        if idx is None:
            idx = {w: i for i, w in enumerate(self.universe)}
            self._uidx = idx
        return idx

    def state_space_size(self) -> int:
        """Size of the declared state space, the full power set of the universe.

        Only reachable subsets are materialized in `states`; the rest are
        inert and carry no edges.
        """
        return 2 ** len(self.universe)

    def __eq__(self, other):
        if not isinstance(other, VoraciousAutomaton):
            return NotImplemented
        return (
            tuple(w.key for w in self.universe) == tuple(w.key for w in other.universe)
            and self.states == other.states
            and self.edges == other.edges
        )

    __hash__ = None

    # -- serialization -------------------------------------------------------

    def _coord_json(self, x):
        if x.is_constant():
            return str(x.as_fraction())
        return [str(b) for b in x.cos_basis()]

    def to_json_dict(self) -> dict:
        gens = self.generators
        return {
            "format": "voracious-automaton",
            "generators": list(gens),
            "m": [list(row) for row in self.geometry.system.cox.orders],
            "cos_denominator": self.geometry.system.ctx.modulus,
            "universe": [
                [self._coord_json(x) for x in w.root] for w in self.universe
            ],
            "states": [list(st) for st in self.states],
            "start": self.start,
            "edges": [
                {
                    "from": e.source,
                    "to": e.target,
                    "pivot_word": word_to_string(e.pivot_word, gens),
                    "labels": [word_to_string(w, gens) for w in e.labels],
                }
                for e in self.edges
            ],
            "pivot_cap": self.pivot_cap,
            "pivot_saturated": self.pivot_saturated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def to_dot(self) -> str:
        lines = [
            "digraph voracious {",
            "  rankdir=LR;",
            "  node [shape=circle];",
            f"  qstart [shape=point]; qstart -> q{self.start};",
        ]
        for i, st in enumerate(self.states):
            label = "{" + ", ".join(_wall_str(self.universe[j]) for j in st) + "}"
            lines.append(f'  q{i} [label="{label}"];')
        for e in self.edges:
            label = ", ".join(word_to_string(w, self.generators) for w in e.labels)
            lines.append(f'  q{e.source} -> q{e.target} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def from_json_dict(data: dict, geometry: WallGeometry) -> VoraciousAutomaton:
    """Rebuild an automaton over an existing geometry; group data must match."""
    from fractions import Fraction

    sys = geometry.system
    if list(sys.cox.generators) != data["generators"] or [
        list(r) for r in sys.cox.orders
    ] != data["m"]:
        raise ValueError("automaton file belongs to a different group")
    ctx = sys.ctx

    def coord(entry):
        if isinstance(entry, str):
            return ctx.rational(Fraction(entry))
        return ctx.from_cos_basis([Fraction(b) for b in entry])

    universe = tuple(
        geometry.wall_of_root(tuple(coord(c) for c in root)) for root in data["universe"]
    )
    states = tuple(tuple(st) for st in data["states"])
    gens = sys.cox.generators
    edges = tuple(
        Edge(
            e["from"],
            e["to"],
            word_from_string(e["pivot_word"], gens),
            tuple(word_from_string(w, gens) for w in e["labels"]),
        )
        for e in data["edges"]
    )
    return VoraciousAutomaton(
        geometry,
        universe,
        states,
        edges,
        data["pivot_cap"],
        data["pivot_saturated"],
    )


def build_automaton(
    geometry: WallGeometry, pivot_cap: int, small_roots_cap: int = 10_000
) -> VoraciousAutomaton:
    """Construct the automaton from scratch for one group."""
    sys = geometry.system
    universe = small_roots(geometry, cap=small_roots_cap)
    uindex = {w: i for i, w in enumerate(universe)}
    pivot_list, saturated = pivots(geometry, pivot_cap)

    inv_idx: list[frozenset[int]] = []
    target_key: list[tuple[int, ...]] = []
    for w in pivot_list:
        inv = geometry.inversion_walls(w)
        inv_idx.append(frozenset(uindex[v] for v in inv if v in uindex))
        back = []
        for f in geometry.frontier_set(w):
            wall = geometry.translate_wall(sys.inverse(w), f)
            if wall not in uindex:
                raise RuntimeError(
                    "pulled-back frontier wall is not small; "
                    "increase the small-root cap or report a bug"
                )
            back.append(uindex[wall])
        target_key.append(tuple(sorted(back)))

    # Whether a state containing wall V may take pivot w depends on (w, V)
    # only: some wall must separate chamber w from V.  Any such wall also
    # separates w from every chamber incident to V, so searching the walls
    # between w and incident_chamber(V) is complete.
    sep_cache: list[dict[int, bool]] = [dict() for _ in pivot_list]

    def enterable(pi: int, v: int) -> bool:
        got = sep_cache[pi].get(v)
        if got is None:
            w = pivot_list[pi]
            wall = universe[v]
            candidates = geometry.walls_between(w, geometry.incident_chamber(wall))
            got = geometry.find_separator(w, wall, candidates) is not None
            sep_cache[pi][v] = got
        return got

    start: tuple[int, ...] = ()
    known = {start}
    order = [start]
    raw_edges: list[tuple[tuple[int, ...], int, tuple[int, ...]]] = []
    qi = 0
    while qi < len(order):
        a = order[qi]
        qi += 1
        aset = frozenset(a)
        for pi in range(len(pivot_list)):
            if aset & inv_idx[pi]:
                continue
            if not all(enterable(pi, v) for v in a):
                continue
            t = target_key[pi]
            if t not in known:
                known.add(t)
                order.append(t)
            raw_edges.append((a, pi, t))

    states = tuple(sorted(known, key=lambda st: (len(st), st)))
    sindex = {st: i for i, st in enumerate(states)}
    edges = []
    for a, pi, t in raw_edges:
        w = pivot_list[pi]
        word = sys.shortlex_word(w)
        labels = tuple(sorted(sys.reduced_words(w)))
        edges.append(Edge(sindex[a], sindex[t], word, labels))
    edges.sort(key=lambda e: (e.source, len(e.pivot_word), e.pivot_word, e.target))
    return VoraciousAutomaton(
        geometry, universe, states, tuple(edges), pivot_cap, saturated
    )
