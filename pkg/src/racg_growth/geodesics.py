"""Geodesic words in right-angled Coxeter and Artin groups.

A RACG word is a sequence of vertices. A RAAG word is a sequence of
``(vertex, sign)`` pairs with ``sign`` in ``{-1, +1}``.

The clique automaton
--------------------
For a geodesic RACG word ``w`` let ``F(w)`` be the set of letters ``a`` for
which ``w a`` is not geodesic, i.e. ``w = x a y`` with every letter of ``y``
in Link(a). If ``a, b`` are both in ``F(w)`` and ``a`` occurs last before
``b`` does, then ``b`` lies in the tail after ``a`` and so commutes with
``a``: ``F(w)`` is a clique. Appending ``b`` not in ``F(w)`` gives
``F(wb) = {b} | (F(w) & Link(b))``. The automaton on all cliques with these
transitions, started at the empty clique with every state accepting, reads
exactly the geodesics.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .formulas import GroupKind
from .graph import Clique, SimplicialGraph, double, enumerate_cliques

DEFAULT_BUDGET = 20_000_000


class BudgetExceeded(RuntimeError):
    pass


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class Word:
    letters: tuple
    kind: GroupKind = GroupKind.RACG

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: Word) -> Word:
        if other.kind is not self.kind:
            raise WordError("cannot concatenate words of different group kinds")
        return Word(self.letters + other.letters, self.kind)

    def vertices(self) -> list[int]:
        if self.kind is GroupKind.RACG:
            return list(self.letters)
        return [v for v, _ in self.letters]

    def __str__(self) -> str:
        if self.kind is GroupKind.RACG:
            return " ".join(map(str, self.letters))
        return " ".join(f"{v}" if s > 0 else f"{v}^-1" for v, s in self.letters)


def as_word(word, kind: GroupKind = GroupKind.RACG) -> Word:
    if isinstance(word, Word):
        return word
    letters = tuple(tuple(x) if isinstance(x, (tuple, list)) else x for x in word)
    return Word(letters, kind)


def _validate(graph: SimplicialGraph, word: Word) -> None:
    n = graph.vertex_count
    if word.kind is GroupKind.RACG:
        for v in word.letters:
            if not isinstance(v, int) or not 0 <= v < n:
                raise WordError(f"letter {v!r} is not a vertex of a {n}-vertex graph")
    else:
        for letter in word.letters:
            if not (isinstance(letter, tuple) and len(letter) == 2):
                raise WordError(f"RAAG letter {letter!r} is not a (vertex, sign) pair")
            v, s = letter
            if not 0 <= v < n:
                raise WordError(f"letter {letter!r} is not a vertex of a {n}-vertex graph")
            if s not in (1, -1):
                raise WordError(f"sign of {letter!r} must be +1 or -1")


def _cancelling_pair(graph: SimplicialGraph, word: Word) -> tuple[int, int] | None:
    """First pair ``(i, j)`` of positions that cancel across a commuting block."""
    letters = word.letters
    verts = word.vertices()
    raag = word.kind is GroupKind.RAAG
    for j in range(len(letters)):
        a = verts[j]
        for i in range(j - 1, -1, -1):
            if verts[i] == a:
                if not raag or letters[i][1] != letters[j][1]:
                    return (i, j)
                break
            if not graph.adjacent(a, verts[i]):
                break
    return None


def is_geodesic(graph: SimplicialGraph, word, kind: GroupKind = GroupKind.RACG) -> bool:
    """Whether ``word`` has no factorization ``x a y a' z`` with ``y`` over Link(a).

    ``a'`` is ``a`` itself for RACGs and ``a`` inverted for RAAGs. All pairs of
    positions carrying the same vertex are examined.
    """
    w = as_word(word, kind)
    _validate(graph, w)
    verts = w.vertices()
    raag = w.kind is GroupKind.RAAG
    for i in range(len(verts)):
        a = verts[i]
        link_a = graph.adjacency[a]
        for j in range(i + 1, len(verts)):
            if verts[j] != a:
                continue
            if all(verts[k] in link_a for k in range(i + 1, j)):
                if not raag or w.letters[i][1] != w.letters[j][1]:
                    return False
    return True


def _letter_key(letter, kind: GroupKind):
    return letter if kind is GroupKind.RACG else (letter[0], letter[1])


def normal_form(graph: SimplicialGraph, word, kind: GroupKind = GroupKind.RACG) -> Word:
    """Shortlex-least word for the same group element.

    Letters are ordered by vertex, and for RAAGs ``v^-1`` precedes ``v``.
    """
    w = as_word(word, kind)
    _validate(graph, w)
    letters = list(w.letters)
    # nil moves: a cancelling pair commutes together and vanishes
    while True:
        pair = _cancelling_pair(graph, Word(tuple(letters), w.kind))
        if pair is None:
            break
        i, j = pair
        del letters[j]
        del letters[i]

    vert = (lambda x: x) if w.kind is GroupKind.RACG else (lambda x: x[0])
    out = []
    while letters:
        best = None
        for i, x in enumerate(letters):
            v = vert(x)
            if all(graph.adjacent(v, vert(y)) for y in letters[:i]):
                if best is None or _letter_key(x, w.kind) < _letter_key(letters[best], w.kind):
                    best = i
        out.append(letters.pop(best))
    return Word(tuple(out), w.kind)


@dataclass(frozen=True)
class CliqueAutomaton:
    """Deterministic acceptor of RACG geodesics; states are cliques."""

    graph: SimplicialGraph
    states: tuple[Clique, ...]
    transitions: tuple[dict[int, int], ...]

    @property
    def start(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.states)

    def step(self, state: int, letter: int) -> int | None:
        return self.transitions[state].get(letter)

    def accepts(self, word: Iterable[int]) -> bool:
        s = self.start
        for b in word:
            s = self.step(s, b)
            if s is None:
                return False
        return True


def build_automaton(graph: SimplicialGraph) -> CliqueAutomaton:
    states = enumerate_cliques(graph)
    index = {frozenset(c): i for i, c in enumerate(states)}
    transitions = []
    for sigma in states:
        row = {}
        members = frozenset(sigma)
        for b in graph.vertices:
            if b in members:
                continue
            target = frozenset({b}) | (members & graph.adjacency[b])
            if target not in index:
                raise AssertionError(f"transition target {sorted(target)} is not a clique")
            row[b] = index[target]
        transitions.append(row)
    return CliqueAutomaton(graph, tuple(states), tuple(transitions))


@dataclass(frozen=True)
class CensusReport:
    """Geodesic counts by length, ``counts[k]`` for ``k = 0 .. max_len``."""

    method: str
    counts: tuple[int, ...]

    def __post_init__(self):
        if self.counts and self.counts[0] != 1:
            raise ValueError(f"{self.method}: counts[0] must be 1, got {self.counts[0]}")
        if any(c < 0 for c in self.counts):
            raise ValueError(f"{self.method}: negative count")

    @property
    def max_len(self) -> int:
        return len(self.counts) - 1


def automaton_census(automaton: CliqueAutomaton, max_len: int) -> CensusReport:
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    arcs = [(s, t) for s, row in enumerate(automaton.transitions) for t in row.values()]
    occupancy = [0] * len(automaton)
    occupancy[automaton.start] = 1
    counts = [1]
    for _ in range(max_len):
        nxt = [0] * len(occupancy)
        for s, t in arcs:
            c = occupancy[s]
            if c:
                nxt[t] += c
        occupancy = nxt
        counts.append(sum(occupancy))
    return CensusReport("automaton", tuple(counts))


# ---------------------------------------------------------------------------
# brute force


def _alphabet(graph: SimplicialGraph, kind: GroupKind):
    """Letters as small ints, plus per-letter vertex, sign and commuting mask.

    RAAG letter ``2v`` is ``v^-1`` and ``2v + 1`` is ``v``.
    """
    n = graph.vertex_count
    if kind is GroupKind.RACG:
        return n, list(range(n)), [1] * n, [graph.neighbor_mask(v) for v in range(n)]
    verts = [c >> 1 for c in range(2 * n)]
    signs = [1 if c & 1 else -1 for c in range(2 * n)]
    masks = []
    for c in range(2 * n):
        m = 0
        for u in graph.adjacency[c >> 1]:
            m |= 3 << (2 * u)
        masks.append(m)
    return 2 * n, verts, signs, masks


def _branch_census(graph, kind, max_len, first, budget):
    size, verts, signs, masks = _alphabet(graph, kind)
    raag = kind is GroupKind.RAAG
    counts = [0] * (max_len + 1)
    counts[1] = 1
    visited = 1
    word = [first]

    def ok(b):
        # only pairs ending at the new last letter can be new violations
        vb, sb, mb = verts[b], signs[b], masks[b]
        for pos in range(len(word) - 1, -1, -1):
            x = word[pos]
            if verts[x] == vb:
                return raag and signs[x] == sb
            if not (mb >> x) & 1:
                return True
        return True

    def walk(depth):
        nonlocal visited
        if depth == max_len - 1:
            k = sum(1 for b in range(size) if ok(b))
            counts[max_len] += k
            visited += k
            return
        for b in range(size):
            if ok(b):
                visited += 1
                counts[depth + 1] += 1
                if visited > budget:
                    raise BudgetExceeded(f"brute census visited more than {budget} prefixes")
                word.append(b)
                walk(depth + 1)
                word.pop()

    if max_len >= 2:
        walk(1)
    if visited > budget:
        raise BudgetExceeded(f"brute census visited more than {budget} prefixes")
    return counts, visited


def brute_census(
    graph: SimplicialGraph,
    max_len: int,
    kind: GroupKind = GroupKind.RACG,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> CensusReport:
    """Count geodesics by depth-first enumeration of words.

    Every prefix of a geodesic is geodesic, so the search extends only
    geodesic prefixes and checks each appended letter against the suffix it
    closes. With ``workers > 1`` the first letters are split across processes;
    the counts do not depend on the split.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    size = graph.vertex_count * (2 if kind is GroupKind.RAAG else 1)
    counts = [0] * (max_len + 1)
    counts[0] = 1
    method = "brute" if kind is GroupKind.RACG else "raag-brute"
    if max_len == 0 or size == 0:
        return CensusReport(method, tuple(counts))

    jobs = [(graph, kind, max_len, b, budget) for b in range(size)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_branch_census, *zip(*jobs)))
    else:
        results = []
        spent = 0
        for job in jobs:
            # later branches only get what is left of the global budget
            res = _branch_census(*job[:-1], budget - spent)
            spent += res[1]
            results.append(res)

    if sum(v for _, v in results) > budget:
        raise BudgetExceeded(f"brute census visited more than {budget} prefixes")
    for branch, _ in results:
        for k, c in enumerate(branch):
            counts[k] += c
    return CensusReport(method, tuple(counts))


def raag_census_via_double(graph: SimplicialGraph, max_len: int) -> CensusReport:
    report = automaton_census(build_automaton(double(graph)), max_len)
    return CensusReport("raag-double", report.counts)
