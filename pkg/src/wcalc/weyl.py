"""Weyl groups as explicit finite groups acting on roots.

An element is stored by its action table, the images of the simple roots.
Every group is enumerated once; elements are interned and carry their
position in the canonical order (length, then lexicographically smallest
reduced word), so equality, hashing and table lookups are integer work.
"""

from __future__ import annotations

from collections import deque

from .rootdata import NodeSubset, Root, RootSystem, build_root_system

# Largest group we agree to enumerate (F4 has 1152 elements).
MAX_GROUP_ORDER = 1152


class WeylError(ValueError):
    pass


class GroupTooLarge(WeylError):
    pass


class WeylElt:
    """An element of a finite Weyl group.

    Instances are created only by :class:`WeylGroup`; use ``W.elt("s1 s2")``
    or ``W.identity`` to get one.
    """

    __slots__ = ("group", "index", "images", "length")

    def __init__(self, group: "WeylGroup", index: int, images: tuple[Root, ...], length: int):
        self.group = group
        self.index = index
        self.images = images
        self.length = length

    def __eq__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        return self.group is other.group and self.index == other.index

    def __hash__(self):
        return hash((id(self.group), self.index))

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return mul(self, other)

    def __repr__(self):
        return f"<{self.group.rs.name}: {self.word_str()}>"

    def __str__(self):
        return self.word_str()

    @property
    def word(self) -> tuple[int, ...]:
        return self.group.words[self.index]

    def word_str(self) -> str:
        return serialize_word(self.word)

    def inverse(self) -> "WeylElt":
        return inv(self)

    def act(self, r: Root) -> Root:
        return act(self, r)

    def leq(self, other: "WeylElt") -> bool:
        return bruhat_leq(self, other)

    def is_identity(self) -> bool:
        return self.index == 0


def serialize_word(word) -> str:
    if not word:
        return "e"
    return " ".join(f"s{i + 1}" for i in word)


def parse_word(text: str) -> tuple[int, ...]:
    """``"s1 s2"`` / ``"s1s2"`` / ``"e"`` -> 0-based letters."""
    text = text.strip()
    if text in ("", "e", "1"):
        return ()
    out = []
    for tok in text.replace("s", " s").split():
        if not tok.startswith("s") or not tok[1:].isdigit() or int(tok[1:]) < 1:
            raise WeylError(f"bad simple reflection {tok!r} in {text!r}")
        out.append(int(tok[1:]) - 1)
    return tuple(out)


def _apply(images: tuple[Root, ...], r: Root) -> Root:
    rank = len(images)
    out = [0] * rank
    for j, c in enumerate(r):
        if c:
            img = images[j]
            for k in range(rank):
                out[k] += c * img[k]
    return tuple(out)


class WeylGroup:
    """The Weyl group of a root system, fully enumerated."""

    def __init__(self, rs: RootSystem, max_order: int = MAX_GROUP_ORDER):
        if rs.order > max_order:
            raise GroupTooLarge(f"|W({rs.name})| = {rs.order} exceeds guard {max_order}")
        self.rs = rs
        rank = rs.rank
        self.rank = rank
        ident = tuple(rs.simple_root(i) for i in range(rank))

        # Closure under right multiplication:
        # (w s_i)(alpha_j) = w(alpha_j) - a_ij w(alpha_i).
        seen = {ident: 0}
        tables = [ident]
        right_raw = []
        queue = deque([ident])
        while queue:
            imgs = queue.popleft()
            row = []
            for i in range(rank):
                wi = imgs[i]
                new = tuple(
                    tuple(a - rs.cartan[i][j] * b for a, b in zip(imgs[j], wi)) if rs.cartan[i][j] else imgs[j]
                    for j in range(rank)
                )
                k = seen.get(new)
                if k is None:
                    k = len(tables)
                    seen[new] = k
                    tables.append(new)
                    queue.append(new)
                row.append(k)
            right_raw.append(row)
        if len(tables) != rs.order:
            raise WeylError(f"enumerated {len(tables)} elements, expected {rs.order}")

        lengths_raw = [sum(1 for r in rs.positive_roots if not rs.is_positive(_apply(t, r)))
                       for t in tables]
        left_raw = []
        for t in tables:
            row = []
            for i in range(rank):
                # s_i w: reflect each image by s_i
                row.append(seen[tuple(_reflect(rs, img, i) for img in t)])
            left_raw.append(row)

        # lexicographically least reduced word via the smallest left descent
        n = len(tables)
        by_len = sorted(range(n), key=lambda k: lengths_raw[k])
        words_raw: list[tuple[int, ...] | None] = [None] * n
        for k in by_len:
            if lengths_raw[k] == 0:
                words_raw[k] = ()
                continue
            for i in range(rank):
                j = left_raw[k][i]
                if lengths_raw[j] < lengths_raw[k]:
                    words_raw[k] = (i,) + words_raw[j]
                    break
        order = sorted(range(n), key=lambda k: (lengths_raw[k], words_raw[k]))
        pos = {old: new for new, old in enumerate(order)}

        self._install(
            [tables[old] for old in order],
            [words_raw[old] for old in order],
            [lengths_raw[old] for old in order],
            [tuple(pos[x] for x in right_raw[old]) for old in order],
            [tuple(pos[x] for x in left_raw[old]) for old in order],
        )

    @classmethod
    def from_tables(cls, rs: RootSystem, images, words, lengths, right, left) -> "WeylGroup":
        """Rebuild from stored canonical tables without enumerating."""
        W = cls.__new__(cls)
        W.rs = rs
        W.rank = rs.rank
        W._install([tuple(tuple(r) for r in t) for t in images], [tuple(w) for w in words],
                   list(lengths), [tuple(r) for r in right], [tuple(r) for r in left])
        return W

    def _install(self, images, words, lengths, right, left):
        self.elements: list[WeylElt] = [
            WeylElt(self, k, images[k], lengths[k]) for k in range(len(images))
        ]
        self.words: list[tuple[int, ...]] = words
        self.right: list[tuple[int, ...]] = right
        self.left: list[tuple[int, ...]] = left
        self.lengths: list[int] = lengths
        self._lookup = {e.images: e.index for e in self.elements}
        self._inv: list[int] | None = None
        self._mul: list[list[int]] | None = None
        self._below: list[int] | None = None
        self._memo: dict = {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"WeylGroup({self.rs.name!r}, order={len(self)})"

    @property
    def identity(self) -> WeylElt:
        return self.elements[0]

    def gen(self, i: int) -> WeylElt:
        return self.elements[self.right[0][i]]

    def from_word(self, word) -> WeylElt:
        k = 0
        for i in word:
            if not 0 <= i < self.rank:
                raise WeylError(f"simple index {i + 1} out of range for {self.rs.name}")
            k = self.right[k][i]
        return self.elements[k]

    def elt(self, text: str) -> WeylElt:
        return self.from_word(parse_word(text))

    def from_images(self, images) -> WeylElt:
        return self.elements[self._lookup[tuple(tuple(r) for r in images)]]

    # --- integer-level tables -------------------------------------------------

    @property
    def inv_table(self) -> list[int]:
        if self._inv is None:
            out = []
            for w in range(len(self)):
                k = 0
                for i in reversed(self.words[w]):
                    k = self.right[k][i]
                out.append(k)
            self._inv = out
        return self._inv

    @property
    def mul_table(self) -> list[list[int]]:
        """mul_table[u][w] = index of u*w."""
        if self._mul is None:
            n = len(self)
            last = [(self.right_of_prefix(w), self.words[w][-1]) if w else (0, 0) for w in range(n)]
            table = []
            for u in range(n):
                row = [0] * n
                row[0] = u
                for w in range(1, n):
                    p, s = last[w]
                    row[w] = self.right[row[p]][s]
                table.append(row)
            self._mul = table
        return self._mul

    def right_of_prefix(self, w: int) -> int:
        """Index of w with its last reduced-word letter removed."""
        return self.right[w][self.words[w][-1]]

    def right_descent(self, w: int, i: int) -> bool:
        return self.lengths[self.right[w][i]] < self.lengths[w]

    def left_descent(self, w: int, i: int) -> bool:
        return self.lengths[self.left[w][i]] < self.lengths[w]

    @property
    def below(self) -> list[int]:
        """below[w] is a bitmask of {u : u <= w} in Bruhat order.

        Built with the descent recursion: for s with ws < w,
        u <= w iff (us <= ws if us < u else u <= ws).
        """
        if self._below is None:
            n = len(self)
            order = sorted(range(n), key=lambda k: self.lengths[k])
            below = [0] * n
            for w in order:
                if w == 0:
                    below[0] = 1
                    continue
                s = next(i for i in range(self.rank) if self.right_descent(w, i))
                ws = self.right[w][s]
                bws = below[ws]
                lw = self.lengths[w]
                mask = 0
                for u in range(n):
                    if self.lengths[u] > lw:
                        continue
                    us = self.right[u][s]
                    if self.lengths[us] < self.lengths[u]:
                        hit = bws >> us & 1
                    else:
                        hit = bws >> u & 1
                    if hit:
                        mask |= 1 << u
                below[w] = mask
            self._below = below
        return self._below

    def leq_index(self, u: int, w: int) -> bool:
        return bool(self.below[w] >> u & 1)

    # --- parabolic machinery --------------------------------------------------

    def support(self, w: int) -> frozenset[int]:
        return frozenset(self.words[w])

    def parabolic(self, J) -> list[WeylElt]:
        """Elements of W_J in canonical order."""
        J = frozenset(J)
        key = ("par", J)
        if key not in self._memo:
            self._memo[key] = [e for e in self.elements if frozenset(e.word) <= J]
        return self._memo[key]

    def min_reps(self, J, side: str = "right") -> list[WeylElt]:
        """W^J (side='right', cosets wW_J) or ^J W (side='left', cosets W_J w)."""
        J = frozenset(J)
        key = ("reps", side, J)
        if key not in self._memo:
            if side == "right":
                pred = lambda k: not any(self.right_descent(k, j) for j in J)
            elif side == "left":
                pred = lambda k: not any(self.left_descent(k, j) for j in J)
            else:
                raise WeylError(f"side must be 'left' or 'right', not {side!r}")
            self._memo[key] = [e for e in self.elements if pred(e.index)]
        return self._memo[key]

    def longest(self, J=None) -> WeylElt:
        J = self.rs.gamma if J is None else frozenset(J)
        return max(self.parabolic(J), key=lambda e: e.length)


_GROUPS: dict[RootSystem, WeylGroup] = {}


def weyl_group(rs: RootSystem | str) -> WeylGroup:
    """Shared, enumerated Weyl group for a root system or type string."""
    if isinstance(rs, str):
        rs = build_root_system(rs)
    W = _GROUPS.get(rs)
    if W is None:
        W = _GROUPS[rs] = WeylGroup(rs)
    return W


def register_group(W: WeylGroup) -> WeylGroup:
    """Install W as the shared group for its root system unless one exists."""
    return _GROUPS.setdefault(W.rs, W)


def _reflect(rs: RootSystem, r: Root, i: int) -> Root:
    k = rs.pairing(r, i)
    if not k:
        return r
    out = list(r)
    out[i] -= k
    return tuple(out)


def _same(u: WeylElt, w: WeylElt) -> WeylGroup:
    if u.group is not w.group:
        raise WeylError(f"elements of different groups: {u.group.rs.name} vs {w.group.rs.name}")
    return u.group


# --- operations on elements ----------------------------------------------------

def enumerate_group(rs: RootSystem | str) -> list[WeylElt]:
    return list(weyl_group(rs).elements)


def mul(u: WeylElt, w: WeylElt) -> WeylElt:
    W = _same(u, w)
    return W.elements[W.mul_table[u.index][w.index]]


def inv(w: WeylElt) -> WeylElt:
    W = w.group
    return W.elements[W.inv_table[w.index]]


def act(w: WeylElt, r: Root) -> Root:
    return _apply(w.images, r)


def length(w: WeylElt) -> int:
    return w.length


def inversion_count(w: WeylElt) -> int:
    rs = w.group.rs
    return sum(1 for r in rs.positive_roots if not rs.is_positive(act(w, r)))


def bruhat_leq(u: WeylElt, w: WeylElt) -> bool:
    W = _same(u, w)
    return W.leq_index(u.index, w.index)


def longest_element(rs: RootSystem | WeylGroup, J=None) -> WeylElt:
    W = rs if isinstance(rs, WeylGroup) else weyl_group(rs)
    return W.longest(J)


def coset_min_reps(rs: RootSystem | WeylGroup, J, side: str = "right") -> list[WeylElt]:
    W = rs if isinstance(rs, WeylGroup) else weyl_group(rs)
    return list(W.min_reps(J, side))


def double_min_reps(rs: RootSystem | WeylGroup, A, C) -> list[WeylElt]:
    """^A W^C = ^A W intersected with W^C."""
    W = rs if isinstance(rs, WeylGroup) else weyl_group(rs)
    right = set(W.min_reps(C, "right"))
    return [e for e in W.min_reps(A, "left") if e in right]


def is_min_rep(w: WeylElt, J, side: str = "right") -> bool:
    W = w.group
    if side == "right":
        return not any(W.right_descent(w.index, j) for j in J)
    return not any(W.left_descent(w.index, j) for j in J)


def parabolic_factor(w: WeylElt, J, side: str = "right") -> tuple[WeylElt, WeylElt]:
    """Split w along W_J.

    side='right': returns (w^J, w_J) with w = w^J * w_J.
    side='left':  returns (^J w, w_J) with w = w_J * ^J w.
    Lengths add in both cases.
    """
    W = w.group
    J = frozenset(J)
    k = w.index
    if side == "right":
        moved = True
        while moved:
            moved = False
            for j in sorted(J):
                if W.right_descent(k, j):
                    k = W.right[k][j]
                    moved = True
                    break
        rep = W.elements[k]
        return rep, mul(inv(rep), w)
    if side == "left":
        moved = True
        while moved:
            moved = False
            for j in sorted(J):
                if W.left_descent(k, j):
                    k = W.left[k][j]
                    moved = True
                    break
        rep = W.elements[k]
        return rep, mul(w, inv(rep))
    raise WeylError(f"side must be 'left' or 'right', not {side!r}")


def preimage_in(x: WeylElt, S, target) -> frozenset[int]:
    """{gamma in S : x(alpha_gamma) is a simple root alpha_k with k in target}.

    This is how ``S ∩ x^{-1}(target)`` is read throughout.
    """
    rs = x.group.rs
    target = frozenset(target)
    out = set()
    for g in S:
        k = rs.simple_index(x.images[g])
        if k is not None and k in target:
            out.add(g)
    return frozenset(out)


def image_in(x: WeylElt, S, target) -> frozenset[int]:
    """{k in target : alpha_k = x(alpha_gamma) for some gamma in S}."""
    rs = x.group.rs
    target = frozenset(target)
    out = set()
    for g in S:
        k = rs.simple_index(x.images[g])
        if k is not None and k in target:
            out.add(k)
    return frozenset(out)


def carter_factor(v: WeylElt, A, C) -> tuple[WeylElt, WeylElt]:
    """v = x*u with x in ^A W^C and u in ^{C ∩ x^{-1}(A)} W_C, for v in ^A W."""
    A, C = frozenset(A), frozenset(C)
    if not is_min_rep(v, A, "left"):
        raise WeylError(f"{v} is not in ^A W for A = {sorted(A)}")
    x, u = parabolic_factor(v, C, "right")
    return x, u


def demazure_set(y: WeylElt, z: WeylElt) -> set[WeylElt]:
    """{x : BxB ⊂ ByBzB}, by folding a reduced word of z into {y}."""
    return demazure_fold(y, z.word)


def demazure_fold(y: WeylElt, word) -> set[WeylElt]:
    W = y.group
    cur = {y.index}
    for s in word:
        nxt = set()
        for w in cur:
            ws = W.right[w][s]
            if W.lengths[ws] > W.lengths[w]:
                nxt.add(ws)
            else:
                nxt.add(w)
                nxt.add(ws)
        cur = nxt
    return {W.elements[k] for k in cur}


def interval_below(u: WeylElt) -> list[WeylElt]:
    """{v : v <= u} in canonical order."""
    W = u.group
    m = W.below[u.index]
    return [e for e in W.elements if m >> e.index & 1]


def max_below(u: WeylElt, w: WeylElt) -> WeylElt:
    """The unique Bruhat-maximal element of {v*w : v <= u}."""
    W = _same(u, w)
    cands = [mul(v, w) for v in interval_below(u)]
    tops = [c for c in cands if all(W.leq_index(d.index, c.index) for d in cands)]
    if len(tops) != 1:
        raise WeylError(f"no unique maximum in {{v*w : v <= {u}}} for w = {w}")
    return tops[0]


def wwu_witness(kind: str, u: WeylElt, w_prime: WeylElt, w: WeylElt) -> WeylElt:
    """Witness for the two exchange statements about w' <= w.

    kind 'i':  some u1 <= u with w'*u1 <= w*u.
    kind 'ii': some u2 <= u with w'*u <= w*u2.
    The first witness in canonical order is returned.
    """
    _same(u, w)
    _same(w_prime, w)
    if not bruhat_leq(w_prime, w):
        raise WeylError(f"precondition w' <= w fails: {w_prime} vs {w}")
    for v in interval_below(u):
        if kind == "i" and bruhat_leq(mul(w_prime, v), mul(w, u)):
            return v
        if kind == "ii" and bruhat_leq(mul(w_prime, u), mul(w, v)):
            return v
    if kind not in ("i", "ii"):
        raise WeylError(f"kind must be 'i' or 'ii', not {kind!r}")
    raise WeylError(f"no witness found for kind {kind} (u={u}, w'={w_prime}, w={w})")
