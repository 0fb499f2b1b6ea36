"""Closure posets: the full order matrix, axiom checks, Hasse reduction and exports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class PosetError(ValueError):
    pass


@dataclass
class ClosurePoset:
    """leq[i][j] means node i lies in the closure of node j."""

    nodes: list
    leq: list[list[bool]]
    dims: list[int] | None = None
    labels: list[str] = field(default_factory=list)
    hasse: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = [str(n) for n in self.nodes]
        check_partial_order(self.leq, self.labels)
        self.hasse = hasse_edges(self.leq)

    def __len__(self):
        return len(self.nodes)

    def maximal(self) -> list[int]:
        n = len(self.nodes)
        return [j for j in range(n) if not any(self.leq[j][k] and k != j for k in range(n))]

    def minimal(self) -> list[int]:
        n = len(self.nodes)
        return [j for j in range(n) if not any(self.leq[k][j] and k != j for k in range(n))]

    def to_dot(self, name: str = "closure") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, lab in enumerate(self.labels):
            extra = f"\\ndim={self.dims[i]}" if self.dims is not None else ""
            lines.append(f'  n{i} [label="{lab}{extra}"];')
        for i, j in self.hasse:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        nodes = []
        for i, node in enumerate(self.nodes):
            rec = node_record(node)
            rec["id"] = i
            rec["label"] = self.labels[i]
            if self.dims is not None:
                rec["dim"] = self.dims[i]
            nodes.append(rec)
        return json.dumps({"nodes": nodes, "edges": [list(e) for e in self.hasse]}, indent=2) + "\n"

    def to_tsv(self) -> str:
        rows = ["\t" + "\t".join(self.labels)]
        for i, lab in enumerate(self.labels):
            rows.append(lab + "\t" + "\t".join("1" if b else "0" for b in self.leq[i]))
        return "\n".join(rows) + "\n"


def node_record(node) -> dict:
    rec = {}
    if hasattr(node, "J"):
        rec["J"] = [j + 1 for j in sorted(node.J)]
    rec["v1"] = str(node.v1)
    rec["v2"] = str(node.v2)
    return rec


def check_partial_order(leq: list[list[bool]], labels=None) -> None:
    n = len(leq)
    lab = labels or [str(i) for i in range(n)]
    for i in range(n):
        if not leq[i][i]:
            raise PosetError(f"not reflexive at {lab[i]}")
    for i in range(n):
        for j in range(i + 1, n):
            if leq[i][j] and leq[j][i]:
                raise PosetError(f"not antisymmetric: {lab[i]} and {lab[j]}")
    # bitset transitivity check
    up = [sum(1 << j for j in range(n) if leq[i][j]) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if leq[i][j] and up[j] & ~up[i]:
                k = (up[j] & ~up[i]).bit_length() - 1
                raise PosetError(f"not transitive: {lab[i]} <= {lab[j]} <= {lab[k]}")


def hasse_edges(leq: list[list[bool]]) -> list[tuple[int, int]]:
    """Cover relations (i, j): i < j with nothing strictly between."""
    n = len(leq)
    edges = []
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            if not any(k != i and k != j and leq[i][k] and leq[k][j] for k in range(n)):
                edges.append((i, j))
    return edges


def build_poset(rs, A, criterion: int = 3):
    """Closure poset of the wonderful pieces for the triple A."""
    from .pieces_wonderful import CRITERIA, dim_wonderful_piece, enumerate_wonderful

    if criterion not in CRITERIA:
        raise PosetError(f"criterion must be 1, 2 or 3, not {criterion!r}")
    fn = CRITERIA[criterion]
    nodes = enumerate_wonderful(rs, A)
    leq = [[fn(rs, A, t, q) for t in nodes] for q in nodes]
    dims = [dim_wonderful_piece(rs, A, p) for p in nodes]
    return ClosurePoset(nodes, leq, dims)


def build_gg_poset(ctx, variant: str = "plus"):
    from .pieces_gg import closure_matrix_gg, dim_piece

    nodes, leq = closure_matrix_gg(ctx, variant)
    return ClosurePoset(nodes, leq, [dim_piece(ctx, p) for p in nodes])
