"""LC-VSP problem descriptions: integer sets, degree constraint matrices, catalog."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, bits, to_mask

__all__ = [
    "IntSet",
    "NATURALS",
    "ProblemSpec",
    "sigma_rho",
    "degree_matrix",
    "d_of_problem",
    "q_of_problem",
    "CATALOG",
    "PARAMETERIZED",
    "catalog_lookup",
    "degree_matrix_from_H",
    "H_VARIANTS",
    "verify_solution",
]


@dataclass(frozen=True)
class IntSet:
    """A finite or co-finite set of non-negative integers.

    For a co-finite set ``elements`` lists the *excluded* integers, so the
    naturals are ``IntSet(True, ())``.
    """

    cofinite: bool
    elements: tuple[int, ...] = ()

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        if any(x < 0 for x in elems):
            raise ValueError("IntSet members must be non-negative")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def finite(cls, values: Iterable[int]) -> "IntSet":
        return cls(False, tuple(values))

    @classmethod
    def cofinite_excluding(cls, values: Iterable[int] = ()) -> "IntSet":
        return cls(True, tuple(values))

    @classmethod
    def at_least(cls, k: int) -> "IntSet":
        return cls(True, tuple(range(k)))

    def __contains__(self, x: int) -> bool:
        return (x in self.elements) != self.cofinite

    @property
    def bound(self) -> int:
        """Largest listed integer (finite members or co-finite exclusions), -1 if none."""
        return self.elements[-1] if self.elements else -1

    @property
    def is_naturals(self) -> bool:
        return self.cofinite and not self.elements

    def __str__(self) -> str:
        inner = "{" + ",".join(map(str, self.elements)) + "}"
        if not self.cofinite:
            return inner
        return "N" if not self.elements else "N\\" + inner

    @classmethod
    def parse(cls, text: str) -> "IntSet":
        """Read ``{0,2}``, ``N`` or ``N\\{0}`` (``N-{0}`` is also accepted)."""
        s = text.replace(" ", "")
        if s == "N":
            return NATURALS
        cofinite = s[:2] in ("N\\", "N-")
        body = s[2:] if cofinite else s
        m = re.fullmatch(r"\{(\d+(?:,\d+)*)?\}", body)
        if m is None:
            raise ValueError(f"cannot parse integer set {text!r}")
        values = [int(t) for t in m.group(1).split(",")] if m.group(1) else []
        return cls(cofinite, tuple(values))


NATURALS = IntSet(True, ())

OBJECTIVES = ("min", "max", "feas")


@dataclass(frozen=True)
class ProblemSpec:
    """A degree constraint matrix plus an objective on the size of part 0.

    Vertex-subset ([sigma, rho]) problems are the 2x2 case with part 0 = S,
    ``matrix[0][0] = sigma``, ``matrix[1][0] = rho`` and the naturals in the
    second column.
    """

    matrix: tuple[tuple[IntSet, ...], ...]
    objective: str = "feas"
    name: str = ""
    kind: str = "dq"

    def __post_init__(self):
        q = len(self.matrix)
        if q < 1 or any(len(row) != q for row in self.matrix):
            raise ValueError("degree constraint matrix must be square and non-empty")
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}")

    @property
    def q(self) -> int:
        return len(self.matrix)

    @property
    def d(self) -> int:
        bound = max(s.bound for row in self.matrix for s in row)
        return bound + 1 if bound >= 0 else 0

    @property
    def sigma(self) -> IntSet:
        return self.matrix[0][0]

    @property
    def rho(self) -> IntSet:
        return self.matrix[1][0]

    def with_objective(self, objective: str) -> "ProblemSpec":
        return ProblemSpec(self.matrix, objective, self.name, self.kind)


def sigma_rho(sigma: IntSet, rho: IntSet, objective: str = "min", name: str = "") -> ProblemSpec:
    return ProblemSpec(((sigma, NATURALS), (rho, NATURALS)), objective, name, "sigma-rho")


def degree_matrix(matrix: Sequence[Sequence[IntSet]], objective: str = "feas", name: str = "") -> ProblemSpec:
    return ProblemSpec(tuple(tuple(row) for row in matrix), objective, name, "dq")


def d_of_problem(spec: ProblemSpec) -> int:
    return spec.d


def q_of_problem(spec: ProblemSpec) -> int:
    return spec.q


_F = IntSet.finite
_N = NATURALS
_POS = IntSet.at_least(1)

CATALOG: dict[str, ProblemSpec] = {
    "independent-set": sigma_rho(_F([0]), _N, "max", "independent-set"),
    "dominating-set": sigma_rho(_N, _POS, "min", "dominating-set"),
    "independent-dominating-set": sigma_rho(_F([0]), _POS, "min", "independent-dominating-set"),
    "total-dominating-set": sigma_rho(_POS, _POS, "min", "total-dominating-set"),
    "perfect-code": sigma_rho(_F([0]), _F([1]), "min", "perfect-code"),
    "strong-stable-set": sigma_rho(_F([0]), _F([0, 1]), "max", "strong-stable-set"),
    "induced-matching": sigma_rho(_F([1]), _N, "max", "induced-matching"),
    "perfect-dominating-set": sigma_rho(_N, _F([1]), "min", "perfect-dominating-set"),
    "total-perfect-dominating-set": sigma_rho(_F([1]), _F([1]), "min", "total-perfect-dominating-set"),
}


def _d_dominating(k: int) -> ProblemSpec:
    return sigma_rho(_N, IntSet.at_least(k), "min", f"d-dominating-set[{k}]")


def _min_degree(k: int) -> ProblemSpec:
    return sigma_rho(IntSet.at_least(k), _N, "max", f"min-degree-d[{k}]")


def _max_degree(k: int) -> ProblemSpec:
    return sigma_rho(_F(range(k + 1)), _N, "max", f"max-degree-d[{k}]")


def _induced_regular(k: int) -> ProblemSpec:
    return sigma_rho(_F([k]), _N, "max", f"induced-d-regular[{k}]")


PARAMETERIZED = {
    "d-dominating-set": _d_dominating,
    "min-degree-d": _min_degree,
    "max-degree-d": _max_degree,
    "induced-d-regular": _induced_regular,
}


def catalog_lookup(name: str, d: int | None = None) -> ProblemSpec:
    """Look up a [sigma, rho] problem by name.

    The four degree-parameterized problems take ``d`` (default 1), either as
    the keyword or as a ``name:d`` suffix.
    """
    if ":" in name:
        name, _, param = name.partition(":")
        d = int(param)
    if name in CATALOG:
        return CATALOG[name]
    if name in PARAMETERIZED:
        k = 1 if d is None else d
        if k < 1:
            raise ValueError("degree parameter must be >= 1")
        return PARAMETERIZED[name](k)
    raise KeyError(f"unknown problem {name!r}")


H_VARIANTS = {
    "coloring": _N,
    "role-assignment": _POS,
    "covering": _F([1]),
    "partial-covering": _F([0, 1]),
}


def degree_matrix_from_H(h: Graph, variant: str, objective: str = "feas") -> ProblemSpec:
    """Degree constraint matrix for homomorphisms into ``h``.

    Part ``i`` is the preimage of vertex ``i`` of ``h``. Cells for edges of
    ``h`` get the variant's set; all other cells get ``{0}``.
    """
    if variant not in H_VARIANTS:
        raise KeyError(f"unknown variant {variant!r}; choose from {sorted(H_VARIANTS)}")
    edge_set = H_VARIANTS[variant]
    zero = _F([0])
    matrix = [[edge_set if (h.adj[i] >> j) & 1 else zero for j in range(h.n)] for i in range(h.n)]
    return degree_matrix(matrix, objective, f"H-{variant}")


def _as_partition(graph: Graph, spec: ProblemSpec, witness) -> list[int]:
    if spec.kind == "sigma-rho":
        s = to_mask(witness)
        if s & ~graph.full:
            raise ValueError("witness contains vertices outside the graph")
        return [s, graph.full & ~s]
    parts = [to_mask(p) for p in witness]
    if len(parts) != spec.q:
        raise ValueError(f"expected {spec.q} parts, got {len(parts)}")
    union = 0
    for p in parts:
        if p & union or p & ~graph.full:
            raise ValueError("witness is not a partition of V(G)")
        union |= p
    if union != graph.full:
        raise ValueError("witness is not a partition of V(G)")
    return parts


def verify_solution(graph: Graph, spec: ProblemSpec, witness) -> bool:
    """Check the degree constraints literally, with uncapped counts.

    ``witness`` is a vertex set for [sigma, rho] problems or a sequence of
    ``q`` vertex sets otherwise.
    """
    parts = _as_partition(graph, spec, witness)
    for i, part in enumerate(parts):
        for v in bits(part):
            for j, other in enumerate(parts):
                if (graph.adj[v] & other).bit_count() not in spec.matrix[i][j]:
                    return False
    return True
