"""Exhaustive checks of standard Weyl group facts used by the closure theorems.

Each ``check_*`` function scans every admissible argument tuple in one group
and returns a :class:`Check` with the number of cases and the first few
counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootdata import all_subsets
from .weyl import (
    WeylError, WeylGroup, carter_factor, demazure_fold, is_min_rep, max_below,
    parabolic_factor, preimage_in, wwu_witness,
)

MAX_EXAMPLES = 5


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, *info):
        if len(self.failures) < MAX_EXAMPLES:
            self.failures.append(info)
        else:
            self.failures.append(None)

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        out = f"{tag} {self.name} ({self.cases} cases"
        if self.failures:
            out += f", {len(self.failures)} failures, e.g. {self.failures[0]}"
        return out + ")"


def reduced_words(W: WeylGroup, w: int) -> list[tuple[int, ...]]:
    """All reduced words of element index w."""
    memo: dict[int, list[tuple[int, ...]]] = {0: [()]}

    def go(k):
        if k not in memo:
            memo[k] = [word + (s,) for s in range(W.rank) if W.right_descent(k, s)
                       for word in go(W.right[k][s])]
        return memo[k]

    return go(w)


def subword_leq(W: WeylGroup, u: int, w: int) -> bool:
    """u <= w iff u is the product of a subword of a fixed reduced word of w."""
    reach = {0}
    for s in W.words[w]:
        reach |= {W.right[k][s] for k in reach}
    return u in reach


def check_bruhat_subword(W: WeylGroup) -> Check:
    c = Check("bruhat order agrees with the subword property")
    n = len(W)
    for w in range(n):
        reach = {0}
        for s in W.words[w]:
            reach |= {W.right[k][s] for k in reach}
        for u in range(n):
            c.cases += 1
            if W.leq_index(u, w) != (u in reach):
                c.fail(str(W.elements[u]), str(W.elements[w]))
    return c


def check_carter_unique(W: WeylGroup) -> Check:
    c = Check("v in ^A W factors uniquely as x u, x in ^A W^C, u in ^(C ∩ x^-1 A) W_C")
    subs = all_subsets(W.rs)
    mul, inv = W.mul_table, W.inv_table
    for A in subs:
        left_A = W.min_reps(A, "left")
        for C in subs:
            xs = [x for x in left_A if is_min_rep(x, C, "right")]
            par_C = {e.index for e in W.parabolic(C)}
            for v in left_A:
                c.cases += 1
                found = []
                for x in xs:
                    u = W.elements[mul[inv[x.index]][v.index]]
                    if u.index in par_C and is_min_rep(u, preimage_in(x, C, A), "left"):
                        found.append((x, u))
                if len(found) != 1 or found[0] != carter_factor(v, A, C):
                    c.fail(sorted(A), sorted(C), str(v), len(found))
    return c


def check_ww0C(W: WeylGroup) -> Check:
    c = Check("x u^-1 <= w iff x w0C <= w u w0C for x, w in W^C, u in W_C")
    mul, inv = W.mul_table, W.inv_table
    for C in all_subsets(W.rs):
        reps = [e.index for e in W.min_reps(C, "right")]
        w0C = W.longest(C).index
        for u in (e.index for e in W.parabolic(C)):
            for x in reps:
                lhs_x = mul[x][inv[u]]
                xw0 = mul[x][w0C]
                for w in reps:
                    c.cases += 1
                    if W.leq_index(lhs_x, w) != W.leq_index(xw0, mul[mul[w][u]][w0C]):
                        c.fail(sorted(C), str(W.elements[x]), str(W.elements[u]), str(W.elements[w]))
    return c


def check_demazure(W: WeylGroup) -> tuple[Check, Check, Check]:
    """Word independence, the form x = y u with u <= z, and x >= y z."""
    indep = Check("the fold of ByBzB does not depend on the reduced word of z")
    form = Check("every x with BxB in ByBzB is y u for some u <= z")
    lower = Check("every x with BxB in ByBzB satisfies x >= y z")
    mul, inv = W.mul_table, W.inv_table
    for z in range(len(W)):
        words = reduced_words(W, z)
        for y in W.elements:
            sets = [frozenset(e.index for e in demazure_fold(y, wd)) for wd in words]
            indep.cases += 1
            if len(set(sets)) != 1:
                indep.fail(str(y), str(W.elements[z]))
            yz = mul[y.index][z]
            for x in sets[0]:
                form.cases += 1
                lower.cases += 1
                if not W.leq_index(mul[inv[y.index]][x], z):
                    form.fail(str(y), str(W.elements[z]), str(W.elements[x]))
                if not W.leq_index(yz, x):
                    lower.fail(str(y), str(W.elements[z]), str(W.elements[x]))
    return indep, form, lower


def check_uwmax(W: WeylGroup) -> Check:
    c = Check("{v w : v <= u} has a unique maximum u1 w with l(u1 w) = l(u1) + l(w)")
    for u in W.elements:
        for w in W.elements:
            c.cases += 1
            try:
                top = max_below(u, w)
            except WeylError:
                c.fail(str(u), str(w), "no unique max")
                continue
            u1 = top * w.inverse()
            if not (u1.leq(u) and top.length == u1.length + w.length):
                c.fail(str(u), str(w), str(top))
    return c


def check_uwvw(W: WeylGroup) -> Check:
    c = Check("l(uw) < l(u) + l(w) implies some u1 < u with u1 w > u w")
    mul, ln = W.mul_table, W.lengths
    for u in range(len(W)):
        below_u = [v for v in range(len(W)) if v != u and W.leq_index(v, u)]
        for w in range(len(W)):
            uw = mul[u][w]
            if ln[uw] == ln[u] + ln[w]:
                continue
            c.cases += 1
            if not any(mul[v][w] != uw and W.leq_index(uw, mul[v][w]) for v in below_u):
                c.fail(str(W.elements[u]), str(W.elements[w]))
    return c


def check_wwu(W: WeylGroup) -> tuple[Check, Check]:
    ci = Check("w' <= w implies some u1 <= u with w' u1 <= w u")
    cii = Check("w' <= w implies some u2 <= u with w' u <= w u2")
    for w in W.elements:
        for wp in W.elements:
            if not wp.leq(w):
                continue
            for u in W.elements:
                for kind, c in (("i", ci), ("ii", cii)):
                    c.cases += 1
                    try:
                        wwu_witness(kind, u, wp, w)
                    except WeylError:
                        c.fail(str(u), str(wp), str(w))
    return ci, cii


def check_uwxv(W: WeylGroup) -> Check:
    c = Check("u w = x v with w in W^J, lengths adding: each v' <= v is reached as u' w = x v'")
    mul, inv, ln = W.mul_table, W.inv_table, W.lengths
    for J in all_subsets(W.rs):
        par = [e.index for e in W.parabolic(J)]
        for w in W.min_reps(J, "right"):
            for u in range(len(W)):
                uw = mul[u][w.index]
                if ln[uw] != ln[u] + w.length:
                    continue
                x, v = parabolic_factor(W.elements[uw], J, "right")
                reach = {mul[up][w.index] for up in range(len(W)) if W.leq_index(up, u)}
                for vp in par:
                    if not W.leq_index(vp, v.index):
                        continue
                    c.cases += 1
                    if mul[x.index][vp] not in reach:
                        c.fail(sorted(J), str(w), str(W.elements[u]), str(W.elements[vp]))
    return c


def appendix_checks(W: WeylGroup) -> list[Check]:
    out = [check_bruhat_subword(W), check_carter_unique(W), check_ww0C(W)]
    out += list(check_demazure(W))
    out += [check_uwmax(W), check_uwvw(W)]
    out += list(check_wwu(W))
    out.append(check_uwxv(W))
    return out


