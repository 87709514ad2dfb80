"""Self-similar group actions given by Mealy automata, and the Zappa–Szép
product X* ⋈ G they define.

A group element is stored as a minimized, canonically numbered automaton
(initial state 0), so equal elements have equal payloads: two states are
identified exactly when they act identically on every word.
"""

from __future__ import annotations

import re
from collections import deque
from typing import Dict, List, Sequence, Tuple

from .core import FamilyMismatch, SearchBudget, Semigroup


class MealyElement:
    """A group element acting on X*.

    ``perms[s]`` is the output permutation of state s (a tuple over letter
    indices) and ``nexts[s][x]`` its restriction state after letter x.
    """

    __slots__ = ("perms", "nexts", "_hash")

    def __init__(self, perms, nexts):
        self.perms = perms
        self.nexts = nexts
        self._hash = hash((perms, nexts))

    def __eq__(self, other):
        return isinstance(other, MealyElement) and self.perms == other.perms and self.nexts == other.nexts

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MealyElement({len(self.perms)} states)"

    @property
    def n_letters(self):
        return len(self.perms[0])

    def is_identity(self):
        return len(self.perms) == 1 and self.perms[0] == tuple(range(self.n_letters))


def minimize(perms: Sequence[tuple], nexts: Sequence[tuple], start: int = 0) -> MealyElement:
    """Moore partition refinement, then renumber reachable classes in BFS order."""
    n = len(perms)
    block = {}
    cls = [block.setdefault(perms[s], len(block)) for s in range(n)]
    while True:
        sig = {}
        new = [sig.setdefault((cls[s], tuple(cls[t] for t in nexts[s])), len(sig)) for s in range(n)]
        if len(sig) == len(set(cls)):
            break
        cls = new
    rep = {}
    for s in range(n):
        rep.setdefault(cls[s], s)
    order = {cls[start]: 0}
    queue = deque([cls[start]])
    out_p, out_n = [], []
    while queue:
        c = queue.popleft()
        s = rep[c]
        row = []
        for t in nexts[s]:
            ct = cls[t]
            if ct not in order:
                order[ct] = len(order)
                queue.append(ct)
            row.append(order[ct])
        out_p.append(perms[s])
        out_n.append(tuple(row))
    return MealyElement(tuple(out_p), tuple(out_n))


class SelfSimilarGroup:
    """The group generated by the states of a Mealy automaton on alphabet X.

    ``table`` maps ``(state, letter) -> (output letter, next state)``; states
    named ``e``/``1`` are never required, the trivial state is added
    automatically when a row points at it.
    """

    def __init__(self, alphabet: str, table: Dict[Tuple[str, str], Tuple[str, str]],
                 generators: Sequence[str] = None, name: str = "automaton"):
        self.alphabet = alphabet
        self.name = name
        letters = {c: i for i, c in enumerate(alphabet)}
        trivial = {"e", "1"}
        states = []
        for (s, _), (_, t) in table.items():
            for name_ in (s, t):
                if name_ not in states and name_ not in trivial:
                    states.append(name_)
        self.state_names = [s for s in dict.fromkeys(s for s, _ in table) if s not in trivial]
        k = len(alphabet)
        index = {s: i for i, s in enumerate(states)}
        triv = len(states)
        perms, nexts = [], []
        for s in states:
            out, row = [None] * k, [None] * k
            for c, x in letters.items():
                if (s, c) not in table:
                    raise ValueError(f"state {s} has no transition on letter {c!r}")
                y, t = table[(s, c)]
                if y not in letters:
                    raise ValueError(f"output letter {y!r} of state {s} is outside the alphabet")
                out[x] = letters[y]
                row[x] = triv if t in trivial else index[t]
            if sorted(out) != list(range(k)):
                raise ValueError(f"state {s} does not permute the alphabet")
            perms.append(tuple(out))
            nexts.append(tuple(row))
        perms.append(tuple(range(k)))
        nexts.append((triv,) * k)
        self._perms, self._nexts = perms, nexts
        self.identity = minimize([tuple(range(k))], [(0,) * k])
        self.named = {s: minimize(perms, nexts, index[s]) for s in states}
        gens = list(generators) if generators else list(self.state_names)
        self.generators = tuple(self.named[g] for g in gens if not self.named[g].is_identity())
        self.generator_names = tuple(g for g in gens if not self.named[g].is_identity())
        self._labels = None
        # memo tables for the pure operations below
        self._mul_memo, self._inv_memo, self._res_memo = {}, {}, {}

    # -- group structure --------------------------------------------------
    def contains(self, g):
        return isinstance(g, MealyElement) and g.n_letters == len(self.alphabet)

    def mul(self, g: MealyElement, h: MealyElement) -> MealyElement:
        """(gh)·w = g·(h·w)."""
        if h.is_identity():
            return g
        if g.is_identity():
            return h
        hit = self._mul_memo.get((g, h))
        if hit is None:
            hit = self._mul_memo[(g, h)] = self._mul(g, h)
        return hit

    def _mul(self, g, h):
        k = len(self.alphabet)
        idx = {(0, 0): 0}
        pairs = [(0, 0)]
        perms, nexts = [], []
        i = 0
        while i < len(pairs):
            a, b = pairs[i]
            out, row = [], []
            for x in range(k):
                y = h.perms[b][x]
                out.append(g.perms[a][y])
                nxt = (g.nexts[a][y], h.nexts[b][x])
                if nxt not in idx:
                    idx[nxt] = len(pairs)
                    pairs.append(nxt)
                row.append(idx[nxt])
            perms.append(tuple(out))
            nexts.append(tuple(row))
            i += 1
        return minimize(perms, nexts)

    def inv(self, g: MealyElement) -> MealyElement:
        hit = self._inv_memo.get(g)
        if hit is None:
            hit = self._inv_memo[g] = self._inv(g)
        return hit

    def _inv(self, g):
        k = len(self.alphabet)
        perms, nexts = [], []
        for s in range(len(g.perms)):
            inv = [0] * k
            for x, y in enumerate(g.perms[s]):
                inv[y] = x
            perms.append(tuple(inv))
            nexts.append(tuple(g.nexts[s][inv[y]] for y in range(k)))
        return minimize(perms, nexts)

    def power(self, g, n):
        out = self.identity
        base = g if n >= 0 else self.inv(g)
        for _ in range(abs(n)):
            out = self.mul(out, base)
        return out

    # -- action -----------------------------------------------------------
    def _letters(self, w: str):
        try:
            return [self.alphabet.index(c) for c in w]
        except ValueError:
            bad = next(c for c in w if c not in self.alphabet)
            raise ValueError(f"letter {bad!r} is outside the alphabet {self.alphabet!r}") from None

    def act(self, g: MealyElement, w: str) -> str:
        s, out = 0, []
        for x in self._letters(w):
            out.append(self.alphabet[g.perms[s][x]])
            s = g.nexts[s][x]
        return "".join(out)

    def restrict(self, g: MealyElement, w: str) -> MealyElement:
        s = 0
        for x in self._letters(w):
            s = g.nexts[s][x]
        if s == 0:
            return g
        hit = self._res_memo.get((g, s))
        if hit is None:
            hit = self._res_memo[(g, s)] = minimize(g.perms, g.nexts, s)
        return hit

    def act_restrict(self, g, w):
        return self.act(g, w), self.restrict(g, w)

    # -- enumeration and printing -----------------------------------------
    def ball(self, radius: int) -> List[MealyElement]:
        """Group elements of word length ≤ radius, shortlex over gens and inverses."""
        gens = []
        for g in self.generators:
            for v in (g, self.inv(g)):
                if v not in gens:
                    gens.append(v)
        seen = {self.identity: None}
        frontier = [self.identity]
        for _ in range(radius):
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.mul(x, s)
                    if y not in seen:
                        seen[y] = None
                        nxt.append(y)
            frontier = nxt
        return list(seen)

    def _word_labels(self, radius=4):
        if self._labels is None:
            labels = {self.identity: "1"}
            names = []
            for g, n in zip(self.generators, self.generator_names):
                names.append((g, n))
                names.append((self.inv(g), n + "^-1"))
            frontier = [(self.identity, [])]
            for _ in range(radius):
                nxt = []
                for x, word in frontier:
                    for s, n in names:
                        y = self.mul(x, s)
                        if y not in labels:
                            w = word + [n]
                            labels[y] = " ".join(w)
                            nxt.append((y, w))
                frontier = nxt
                if len(labels) > 5000:
                    break
            self._labels = labels
        return self._labels

    def format(self, g):
        label = self._word_labels().get(g)
        if label is not None:
            return label
        return f"<automaton with {len(g.perms)} states>"

    def parse(self, text: str) -> MealyElement:
        text = text.strip()
        out = self.identity
        if text in ("", "1", "e"):
            return out
        for tok in text.split():
            m = re.fullmatch(r"([A-Za-z]\w*)(?:\^(-?\d+))?", tok)
            if not m or m.group(1) not in self.named:
                raise ValueError(f"unknown state {tok!r}")
            out = self.mul(out, self.power(self.named[m.group(1)], int(m.group(2) or 1)))
        return out


class ZappaSzep(Semigroup):
    """X* ⋈ G with (x,g)(y,h) = (x(g·y), g|_y h).  Elements are ``(word, g)``.

    Principal right ideals depend only on the word, so canonical
    representatives are ``(w, 1)``.
    """

    trivial_units = False
    zappa_szep = True

    def __init__(self, group: SelfSimilarGroup, budget: SearchBudget = None):
        self.group = group
        self.budget = budget or SearchBudget()
        self.name = f"{group.alphabet}* |><| {group.name}"
        self.identity = ("", group.identity)
        self.unit_generators = tuple(("", g) for g in group.generators)
        inverses = tuple(("", group.inv(g)) for g in group.generators)
        self.generators = (tuple((c, group.identity) for c in group.alphabet)
                           + self.unit_generators + inverses)
        self._unit_ball = None

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], str)
                and all(c in self.group.alphabet for c in x[0]) and self.group.contains(x[1]))

    def _mul(self, a, b):
        (x, g), (y, h) = a, b
        G = self.group
        return (x + G.act(g, y), G.mul(G.restrict(g, y), h))

    def _left_divide(self, a, b):
        (x, g), (y, h) = a, b
        if not y.startswith(x):
            return None
        G = self.group
        ginv = G.inv(g)
        z = G.act(ginv, y[len(x):])
        return (z, G.mul(G.inv(G.restrict(g, z)), h))

    def _right_lcm(self, a, b):
        x, y = a[0], b[0]
        if y.startswith(x):
            return (y, self.group.identity)
        if x.startswith(y):
            return (x, self.group.identity)
        return None

    def is_unit(self, a):
        return a[0] == ""

    def _unit_inverse(self, a):
        return ("", self.group.inv(a[1]))

    def canonical_with_unit(self, a):
        return (a[0], self.group.identity), ("", self.group.inv(a[1]))

    def right_unit_quotient(self, a, b):
        if a[0] != b[0]:
            return None
        return self._left_divide(a, b)

    def unit_ball(self):
        if self._unit_ball is None:
            self._unit_ball = self.group.ball(self.budget.group_radius)
        return self._unit_ball

    def left_unit_quotient(self, a, b):
        """A unit (∅, k) with a = (∅, k)·b, searched in the group ball.

        Needs k·y = x and k|_y = g·h⁻¹; returns None when the ball has no
        such k (which is not a proof that none exists).
        """
        (x, g), (y, h) = a, b
        if len(x) != len(y):
            return None
        G = self.group
        target = G.mul(g, G.inv(h))
        for k in self.unit_ball():
            if G.act(k, y) == x and G.restrict(k, y) == target:
                return ("", k)
        return None

    def format_element(self, a):
        # the empty word prints as nothing: "1" may be a letter
        return f"({a[0]},{self.group.format(a[1])})"

    def parse_element(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")) or "," not in text:
            raise FamilyMismatch(f"expected (word,g), got {text!r}")
        w, g = text[1:-1].split(",", 1)
        w = w.strip()
        x = (w, self.group.parse(g))
        self.check(x)
        return x

    def sort_key(self, a):
        return (len(a[0]), a[0], self.group.format(a[1]))


# ---------------------------------------------------------------------------
# catalog automata

def odometer() -> SelfSimilarGroup:
    """The binary adding machine: a·0w = 1w, a·1w = 0(a·w)."""
    return SelfSimilarGroup("01", {("a", "0"): ("1", "e"), ("a", "1"): ("0", "a")},
                            name="odometer")


def lamplighter() -> SelfSimilarGroup:
    """Two-state automaton generating the lamplighter group Z/2 wr Z."""
    return SelfSimilarGroup("01", {
        ("a", "0"): ("1", "a"), ("a", "1"): ("0", "b"),
        ("b", "0"): ("0", "a"), ("b", "1"): ("1", "b"),
    }, name="lamplighter")


def fixed_letter_automaton() -> SelfSimilarGroup:
    """g fixes the letter 0 with trivial restriction and swaps 1, 2."""
    return SelfSimilarGroup("012", {
        ("g", "0"): ("0", "e"), ("g", "1"): ("2", "g"), ("g", "2"): ("1", "g"),
    }, name="fixed-letter")


def parse_table(lines) -> Dict[Tuple[str, str], Tuple[str, str]]:
    """Read rows ``state, letter -> output, next``."""
    table = {}
    for n, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"(\w+)\s*,\s*(\S)\s*->\s*(\S)\s*,\s*(\w+)", line)
        if not m:
            raise ValueError(f"automaton row {n}: expected 'state, letter -> output, next', got {line!r}")
        s, x, y, t = m.groups()
        if (s, x) in table:
            raise ValueError(f"automaton row {n}: duplicate transition for ({s}, {x})")
        table[(s, x)] = (y, t)
    return table
