"""Root systems of finite crystallographic type, built from Cartan matrices.

Roots are integer coefficient vectors over the simple roots.  Simple roots
are numbered per component following Bourbaki, and components are
concatenated in the order they appear in the type string, so ``"A1xB2"``
has simple roots 0 (the A1 node), 1 and 2 (the B2 nodes, 2 short).

The Cartan matrix is stored as ``cartan[i][j] = <alpha_j, alpha_i^vee>``,
so the simple reflection ``s_i`` sends a root ``r`` to
``r - (sum_j r_j cartan[i][j]) alpha_i``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property

# Total rank allowed for a root system; exhaustive Weyl group work above
# this is out of desk scale.
MAX_RANK = 6

Root = tuple[int, ...]
NodeSubset = frozenset[int]


class RootSystemError(ValueError):
    """Raised for malformed or unsupported root system type strings."""


_TYPE_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def _edges(letter: str, n: int) -> list[tuple[int, int, int, int]]:
    """Off-diagonal entries (i, j, a_ij, a_ji), a_ij = <alpha_j, alpha_i^vee>."""
    chain = [(i, i + 1, -1, -1) for i in range(n - 1)]
    if letter == "A":
        return chain
    if letter == "B":
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        return chain[:-1] + [(n - 2, n - 1, -1, -2)]
    if letter == "C":
        return chain[:-1] + [(n - 2, n - 1, -2, -1)]
    if letter == "D":
        return [(i, i + 1, -1, -1) for i in range(n - 2)] + [(n - 3, n - 1, -1, -1)]
    if letter == "E":
        # Bourbaki: 1-3-4-5-6-..., with 2 attached to 4
        es = [(0, 2, -1, -1), (1, 3, -1, -1)]
        es += [(i, i + 1, -1, -1) for i in range(2, n - 1)]
        return es
    if letter == "F":
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    if letter == "G":
        # alpha_1 short, alpha_2 long
        return [(0, 1, -3, -1)]
    raise RootSystemError(f"unknown type letter {letter!r}")


_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def weyl_order(letter: str, n: int) -> int:
    """Order of the Weyl group of a simple type."""
    if letter == "A":
        return math.factorial(n + 1)
    if letter in "BC":
        return 2**n * math.factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(letter, n)]


def classical_positive_count(letter: str, n: int) -> int:
    if letter == "A":
        return n * (n + 1) // 2
    if letter in "BC":
        return n * n
    if letter == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(letter, n)]


def parse_type(text: str) -> list[tuple[str, int]]:
    """Parse ``"A2"``, ``"a1xb2"`` ... into ``[(letter, rank), ...]``."""
    if not text or not text.strip():
        raise RootSystemError("empty root system type")
    comps = []
    for part in re.split("[xX]", text.strip()):
        part = part.strip()
        m = _TYPE_RE.match(part)
        if not m:
            raise RootSystemError(f"cannot parse component {part!r} of {text!r}")
        letter, n = m.group(1).upper(), int(m.group(2))
        if not _RANK_OK[letter](n):
            raise RootSystemError(f"rank {n} out of range for type {letter}")
        comps.append((letter, n))
    total = sum(n for _, n in comps)
    if total > MAX_RANK:
        raise RootSystemError(f"total rank {total} exceeds cap {MAX_RANK}")
    return comps


@dataclass(frozen=True)
class RootSystem:
    components: tuple[tuple[str, int], ...]
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    rank: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "rank", len(self.cartan))

    @property
    def name(self) -> str:
        return "x".join(f"{l}{n}" for l, n in self.components)

    def __repr__(self):
        return f"RootSystem({self.name!r})"

    @cached_property
    def gamma(self) -> NodeSubset:
        """All simple root indices."""
        return frozenset(range(self.rank))

    @cached_property
    def _positive_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)

    def simple_root(self, i: int) -> Root:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def simple_index(self, r: Root) -> int | None:
        """Index i if ``r`` is the simple root alpha_i, else None."""
        if sum(r) == 1 and all(c >= 0 for c in r):
            return r.index(1)
        return None

    def is_positive(self, r: Root) -> bool:
        return r in self._positive_set

    def is_root(self, r: Root) -> bool:
        return r in self._positive_set or tuple(-c for c in r) in self._positive_set

    def pairing(self, r: Root, i: int) -> int:
        """<r, alpha_i^vee>."""
        row = self.cartan[i]
        return sum(c * a for c, a in zip(r, row))

    @cached_property
    def component_of(self) -> tuple[int, ...]:
        out = []
        for k, (_, n) in enumerate(self.components):
            out += [k] * n
        return tuple(out)

    @cached_property
    def order(self) -> int:
        return math.prod(weyl_order(l, n) for l, n in self.components)


def reflect(rs: RootSystem, r: Root, i: int) -> Root:
    """Simple reflection s_i applied to ``r``."""
    if not 0 <= i < rs.rank:
        raise IndexError(f"simple index {i} out of range for {rs.name}")
    k = rs.pairing(r, i)
    if k == 0:
        return tuple(r)
    out = list(r)
    out[i] -= k
    return tuple(out)


def _cartan_for(comps: list[tuple[str, int]]) -> tuple[tuple[int, ...], ...]:
    rank = sum(n for _, n in comps)
    a = [[0] * rank for _ in range(rank)]
    off = 0
    for letter, n in comps:
        for i in range(n):
            a[off + i][off + i] = 2
        for i, j, aij, aji in _edges(letter, n):
            a[off + i][off + j] = aij
            a[off + j][off + i] = aji
        off += n
    return tuple(tuple(row) for row in a)


def build_root_system(text: str) -> RootSystem:
    """Build the root system for a type string such as ``"B3"`` or ``"A1xA1"``."""
    comps = parse_type(text)
    cartan = _cartan_for(comps)
    rank = len(cartan)
    proto = RootSystem(tuple(comps), cartan, ())

    simple = [proto.simple_root(i) for i in range(rank)]
    seen = set(simple)
    order = list(simple)
    frontier = list(simple)
    # Positive roots are closed under s_i away from alpha_i.
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(rank):
                if r == simple[i]:
                    continue
                t = reflect(proto, r, i)
                if t not in seen:
                    seen.add(t)
                    order.append(t)
                    nxt.append(t)
        frontier = nxt
    order.sort(key=lambda r: (sum(r), tuple(-c for c in r)))
    return RootSystem(tuple(comps), cartan, tuple(order))


def pos_roots_in_span(rs: RootSystem, S) -> int:
    """Number of positive roots supported on the simple roots in ``S``."""
    S = frozenset(S)
    return sum(1 for r in rs.positive_roots
               if all(c == 0 or k in S for k, c in enumerate(r)))


def dim_unipotent_radical(rs: RootSystem, S) -> int:
    """dim U_S = |Phi^+| - |Phi^+_S|."""
    return len(rs.positive_roots) - pos_roots_in_span(rs, S)


def subset_from_mask(mask: int) -> NodeSubset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def subset_mask(S) -> int:
    return sum(1 << i for i in S)


def all_subsets(rs: RootSystem) -> list[NodeSubset]:
    """All node subsets, ordered by size then by sorted contents."""
    subs = [subset_from_mask(m) for m in range(1 << rs.rank)]
    subs.sort(key=lambda s: (len(s), sorted(s)))
    return subs


def diagram_automorphism_ok(rs1: RootSystem, rs2: RootSystem, mapping: dict[int, int]) -> tuple[int, int] | None:
    """First pair (i, j) of domain nodes whose Cartan entry is not preserved."""
    for i in sorted(mapping):
        for j in sorted(mapping):
            if rs1.cartan[i][j] != rs2.cartan[mapping[i]][mapping[j]]:
                return (i, j)
    return None
