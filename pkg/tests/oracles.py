"""Brute-force reference implementations, independent of the library tables.

Weyl groups are realized as integer matrices acting on root coefficient
vectors; Bruhat order is the transitive closure of u -> u t over all
reflections t with l(u t) > l(u).  Only the Cartan matrix is shared with the
code under test.
"""

from itertools import product


def mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def mat_vec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def simple_matrix(cartan, i):
    """Matrix of s_i on coefficient vectors: column j is alpha_j - a_ij alpha_i."""
    n = len(cartan)
    cols = []
    for j in range(n):
        col = [int(k == j) for k in range(n)]
        col[i] -= cartan[i][j]
        cols.append(col)
    return tuple(tuple(cols[j][k] for j in range(n)) for k in range(n))


class OracleGroup:
    def __init__(self, cartan):
        n = len(cartan)
        self.n = n
        self.gens = [simple_matrix(cartan, i) for i in range(n)]
        e = identity(n)
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.gens:
                    ws = mat_mul(w, s)
                    if ws not in seen:
                        seen.add(ws)
                        nxt.append(ws)
            frontier = nxt
        self.elements = sorted(seen)
        # positive roots: orbit of simple roots, keep nonnegative vectors
        roots = set()
        for w in self.elements:
            for i in range(n):
                roots.add(mat_vec(w, tuple(int(k == i) for k in range(n))))
        self.positive = sorted(r for r in roots if all(c >= 0 for c in r))
        self.length = {w: sum(1 for r in self.positive if any(c < 0 for c in mat_vec(w, r)))
                       for w in self.elements}
        self.e = e
        self._below = None

    def mul(self, a, b):
        return mat_mul(a, b)

    def inv(self, w):
        for u in self.elements:
            if mat_mul(u, w) == self.e:
                return u
        raise AssertionError("no inverse")

    def word(self, word):
        w = self.e
        for i in word:
            w = mat_mul(w, self.gens[i])
        return w

    @property
    def reflections(self):
        out = set()
        for w in self.elements:
            for s in self.gens:
                out.add(mat_mul(mat_mul(w, s), self.inv(w)))
        return out

    def below_sets(self):
        """u <= w as the transitive closure of u < u t (t a reflection, length up)."""
        if self._below is None:
            refl = self.reflections
            up = {u: {mat_mul(u, t) for t in refl if self.length[mat_mul(u, t)] > self.length[u]}
                  for u in self.elements}
            below = {w: {w} for w in self.elements}
            # lengths strictly increase along up-steps, so one pass in length order suffices
            order = sorted(self.elements, key=lambda x: self.length[x])
            for u in order:
                for v in up[u]:
                    below[v] |= below[u]
            self._below = below
        return self._below

    def leq(self, u, w):
        return u in self.below_sets()[w]

    def descent_right(self, w, i):
        return self.length[mat_mul(w, self.gens[i])] < self.length[w]

    def descent_left(self, w, i):
        return self.length[mat_mul(self.gens[i], w)] < self.length[w]

    def parabolic(self, J):
        J = sorted(J)
        out = {self.e}
        frontier = [self.e]
        while frontier:
            nxt = []
            for w in frontier:
                for j in J:
                    x = mat_mul(w, self.gens[j])
                    if x not in out:
                        out.add(x)
                        nxt.append(x)
            frontier = nxt
        return out

    def min_reps_right(self, J):
        """Shortest element of each coset w W_J."""
        P = self.parabolic(J)
        reps = set()
        for w in self.elements:
            reps.add(min((mat_mul(w, p) for p in P), key=lambda x: (self.length[x], x)))
        return reps

    def min_reps_left(self, J):
        P = self.parabolic(J)
        return {min((mat_mul(p, w) for p in P), key=lambda x: (self.length[x], x)) for w in self.elements}


def classical_count(letter, n):
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1),
            "G": 6, "F": 24}[letter]


def to_matrix(OG, elt):
    """Library element -> oracle matrix, via its reduced word."""
    return OG.word(elt.word)


def wonderful_third_oracle(OG, a_map, A1, J, v1, v2, I, q1, q2):
    """Closure description 3 in the matrix model; a_map sends generators of W_A1."""
    if not set(I) <= set(J):
        return False
    xs = OG.parabolic(A1)
    for z in OG.parabolic(J):
        low = mat_mul(v1, z)
        high = mat_mul(v2, z)
        for x in xs:
            if OG.leq(low, mat_mul(x, q1)) and OG.leq(mat_mul(a_map(x), q2), high):
                return True
    return False


def words_of(OG):
    """A word for every element, found by BFS over generators."""
    out = {OG.e: ()}
    frontier = [OG.e]
    while frontier:
        nxt = []
        for w in frontier:
            for i, s in enumerate(OG.gens):
                x = mat_mul(w, s)
                if x not in out:
                    out[x] = out[w] + (i,)
                    nxt.append(x)
        frontier = nxt
    return out


def gg_plus_oracle(OG1, OG2, xs, ys, w1, w2, q1, q2):
    """Some (x1, a x1) in xs and (y1, c y1) in ys with x1 q1 y1 <= w1 and a(x1) q2 c(y1) <= w2."""
    for (x, ax), (y, cy) in product(xs, ys):
        if OG1.leq(mat_mul(mat_mul(x, q1), y), w1) and OG2.leq(mat_mul(mat_mul(ax, q2), cy), w2):
            return True
    return False
