"""Directed weighted graphs associated with min-plus matrices.

A matrix and its network are two views of the same object: finite entry
a_ij is an edge i -> j of that weight, ε is no edge. This module
enumerates elementary circuits and vertex-disjoint circuit families,
computes the minimum circuit average weight (the eigenvalue oracle), and
cross-verifies the characteristic-polynomial structure theorems against
that circuit data.

Vertices are labeled 1..m throughout, matching the adjacency-matrix rows.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .charpoly import charpoly_flv, charpoly_tropdet
from .errors import CapExceeded
from .matrix import MinPlusMatrix, epsilon_matrix
from .polynomial import Factorization, canonicalize, factorize, is_equivalent
from .semiring import EPSILON, MinPlusValue

__all__ = [
    "Network",
    "Circuit",
    "ExtendedCircuit",
    "Report",
    "CIRCUIT_CAP",
    "EXHAUSTIVE_CAP",
    "network_from_matrix",
    "matrix_from_network",
    "enumerate_circuits",
    "min_cycle_mean",
    "enumerate_extended_circuits",
    "coefficient_check",
    "separated_check",
    "verify_separated_factorization",
    "verify_corollary_equivalence",
    "plant_separated_instance",
]

CIRCUIT_CAP = 10**6
EXHAUSTIVE_CAP = 10


@dataclass(frozen=True)
class Network:
    """m vertices (1..m) and directed weighted edges, one per ordered pair."""

    m: int
    edges: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        normalized = []
        for tail, head, weight in self.edges:
            if not (1 <= tail <= self.m and 1 <= head <= self.m):
                raise ValueError(f"edge ({tail}, {head}) is outside vertices 1..{self.m}")
            if (tail, head) in seen:
                raise ValueError(f"duplicate edge for ordered pair ({tail}, {head})")
            seen.add((tail, head))
            normalized.append((tail, head, Fraction(weight)))
        object.__setattr__(self, "edges", tuple(normalized))

    def successors(self) -> dict[int, list[tuple[int, Fraction]]]:
        adj: dict[int, list[tuple[int, Fraction]]] = {v: [] for v in range(1, self.m + 1)}
        for tail, head, weight in self.edges:
            adj[tail].append((head, weight))
        for lst in adj.values():
            lst.sort()
        return adj


@dataclass(frozen=True)
class Circuit:
    """An elementary cycle: distinct vertices, stored starting at the smallest."""

    vertices: tuple[int, ...]
    weight: Fraction

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a circuit has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("circuit vertices must be distinct")
        if self.vertices[0] != min(self.vertices):
            raise ValueError("circuit must be in canonical rotation (smallest vertex first)")
        object.__setattr__(self, "weight", Fraction(self.weight))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def average(self) -> Fraction:
        return self.weight / self.length

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "length": self.length,
            "weight": MinPlusValue(self.weight).to_json(),
            "average": MinPlusValue(self.average).to_json(),
        }


@dataclass(frozen=True)
class ExtendedCircuit:
    """A family of pairwise vertex-disjoint circuits, treated as one object."""

    circuits: tuple[Circuit, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.circuits, key=lambda c: (c.length, c.vertices)))
        seen: set[int] = set()
        for circuit in ordered:
            overlap = seen.intersection(circuit.vertices)
            if overlap:
                raise ValueError(f"circuits share vertices {sorted(overlap)}")
            seen.update(circuit.vertices)
        if not ordered:
            raise ValueError("an extended circuit has at least one member")
        object.__setattr__(self, "circuits", ordered)

    @property
    def total_length(self) -> int:
        return sum(c.length for c in self.circuits)

    @property
    def weight(self) -> Fraction:
        return sum((c.weight for c in self.circuits), Fraction(0))

    @property
    def average(self) -> Fraction:
        return self.weight / self.total_length

    def to_json(self) -> dict:
        return {
            "circuits": [c.to_json() for c in self.circuits],
            "total_length": self.total_length,
            "weight": MinPlusValue(self.weight).to_json(),
            "average": MinPlusValue(self.average).to_json(),
        }


@dataclass
class Report:
    """Outcome of one structure check, JSON-serializable."""

    check: str
    hypothesis_met: bool | None
    details: list = field(default_factory=list)
    passed: bool = True

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "hypothesis_met": self.hypothesis_met,
            "details": self.details,
            "pass": self.passed,
        }


def network_from_matrix(a: MinPlusMatrix) -> Network:
    """One edge (i, j, a_ij) per finite entry."""
    edges = []
    for i in range(a.n):
        for j in range(a.n):
            x = a.rows[i][j]
            if not x.is_epsilon:
                edges.append((i + 1, j + 1, x.rational))
    return Network(m=a.n, edges=tuple(edges))


def matrix_from_network(net: Network) -> MinPlusMatrix:
    """Weighted adjacency matrix; inverse of network_from_matrix."""
    rows = [list(row) for row in epsilon_matrix(net.m).rows]
    for tail, head, weight in net.edges:
        rows[tail - 1][head - 1] = MinPlusValue(weight)
    return MinPlusMatrix(tuple(tuple(row) for row in rows))


def enumerate_circuits(net: Network, cap: int = CIRCUIT_CAP) -> list[Circuit]:
    """All elementary circuits, by backtracking with blocking.

    Processes start vertices in increasing order on the subgraph of
    not-smaller vertices, so every circuit is found exactly once and comes
    out already in canonical rotation. Results are sorted by (length,
    vertex sequence).
    """
    adj = net.successors()
    weight_of = {(t, h): w for t, h, w in net.edges}
    circuits: list[Circuit] = []

    for start in range(1, net.m + 1):
        blocked: dict[int, bool] = defaultdict(bool)
        block_map: dict[int, set[int]] = defaultdict(set)
        path: list[int] = []

        def unblock(v: int):
            blocked[v] = False
            while block_map[v]:
                w = block_map[v].pop()
                if blocked[w]:
                    unblock(w)

        def search(v: int) -> bool:
            found = False
            path.append(v)
            blocked[v] = True
            for head, _ in adj[v]:
                if head < start:
                    continue
                if head == start:
                    cycle = tuple(path)
                    total = sum(
                        (weight_of[(cycle[i], cycle[(i + 1) % len(cycle)])] for i in range(len(cycle))),
                        Fraction(0),
                    )
                    circuits.append(Circuit(vertices=cycle, weight=total))
                    if len(circuits) > cap:
                        raise CapExceeded(
                            f"circuit enumeration exceeded the cap of {cap}",
                            partial_count=len(circuits),
                        )
                    found = True
                elif not blocked[head]:
                    if search(head):
                        found = True
            if found:
                unblock(v)
            else:
                for head, _ in adj[v]:
                    if head >= start:
                        block_map[head].add(v)
            path.pop()
            return found

        search(start)

    circuits.sort(key=lambda c: (c.length, c.vertices))
    return circuits


def _strongly_connected_components(net: Network) -> list[list[int]]:
    """Tarjan's algorithm, iterative."""
    adj = net.successors()
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0

    for root in range(1, net.m + 1):
        if root in index:
            continue
        work = [(root, iter(adj[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, edge_iter = work[-1]
            advanced = False
            for head, _ in edge_iter:
                if head not in index:
                    index[head] = low[head] = counter
                    counter += 1
                    stack.append(head)
                    on_stack.add(head)
                    work.append((head, iter(adj[head])))
                    advanced = True
                    break
                if head in on_stack:
                    low[v] = min(low[v], index[head])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.append(w)
                    if w == v:
                        break
                components.append(component)
    return components


def _karp_component(vertices: list[int], edges: list[tuple[int, int, Fraction]]) -> Fraction:
    """Minimum cycle mean of one strongly connected component.

    Dynamic program over exact-length walks from a fixed source: with
    D_k(v) the minimum weight of a k-edge walk source -> v (None when no
    such walk exists),

        lambda = min over v with D_n(v) finite of
                 max over k < n with D_k(v) finite of (D_n(v) - D_k(v)) / (n - k).
    """
    order = sorted(vertices)
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    table: list[list[Fraction | None]] = [[None] * n for _ in range(n + 1)]
    table[0][0] = Fraction(0)
    local_edges = [(pos[t], pos[h], w) for t, h, w in edges]
    for k in range(1, n + 1):
        prev = table[k - 1]
        cur = table[k]
        for t, h, w in local_edges:
            dt = prev[t]
            if dt is None:
                continue
            cand = dt + w
            if cur[h] is None or cand < cur[h]:
                cur[h] = cand
    best: Fraction | None = None
    for i in range(n):
        dn = table[n][i]
        if dn is None:
            continue
        worst: Fraction | None = None
        for k in range(n):
            dk = table[k][i]
            if dk is None:
                continue
            ratio = Fraction(dn - dk, n - k)
            if worst is None or ratio > worst:
                worst = ratio
        if best is None or worst < best:
            best = worst
    if best is None:
        raise AssertionError("strongly connected component with an edge must contain a cycle")
    return best


def min_cycle_mean(net: Network) -> MinPlusValue:
    """Minimum average weight over all circuits; ε when the graph is acyclic.

    Runs the exact-length-walk dynamic program independently on each
    strongly connected component, since every circuit lives inside one.
    """
    by_vertex: dict[int, int] = {}
    components = _strongly_connected_components(net)
    for ci, component in enumerate(components):
        for v in component:
            by_vertex[v] = ci
    edges_by_component: dict[int, list[tuple[int, int, Fraction]]] = defaultdict(list)
    for tail, head, weight in net.edges:
        if by_vertex[tail] == by_vertex[head]:
            edges_by_component[by_vertex[tail]].append((tail, head, weight))
    best = EPSILON
    for ci, component in enumerate(components):
        edges = edges_by_component.get(ci)
        if not edges:
            continue
        lam = MinPlusValue(_karp_component(component, edges))
        if lam < best:
            best = lam
    return best


def enumerate_extended_circuits(
    net: Network,
    j: int,
    exhaustive_cap: int = EXHAUSTIVE_CAP,
    circuit_cap: int = CIRCUIT_CAP,
) -> list[ExtendedCircuit]:
    """All vertex-disjoint circuit families with total length exactly j."""
    if j < 1:
        raise ValueError("total length must be a positive integer")
    if net.m > exhaustive_cap:
        raise CapExceeded(
            f"exhaustive family enumeration is capped at {exhaustive_cap} vertices (got {net.m})"
        )
    circuits = enumerate_circuits(net, cap=circuit_cap)
    vertex_sets = [frozenset(c.vertices) for c in circuits]
    families: list[ExtendedCircuit] = []

    def backtrack(start: int, used: frozenset, chosen: list[Circuit], remaining: int):
        if remaining == 0:
            families.append(ExtendedCircuit(circuits=tuple(chosen)))
            return
        for idx in range(start, len(circuits)):
            circuit = circuits[idx]
            if circuit.length > remaining:
                continue
            if used & vertex_sets[idx]:
                continue
            chosen.append(circuit)
            backtrack(idx + 1, used | vertex_sets[idx], chosen, remaining - circuit.length)
            chosen.pop()

    backtrack(0, frozenset(), [], j)
    families.sort(key=lambda f: tuple((c.length, c.vertices) for c in f.circuits))
    return families


def coefficient_check(a: MinPlusMatrix, exhaustive_cap: int = EXHAUSTIVE_CAP) -> Report:
    """Compare each coefficient of tropdet(A ⊕ x⊗I) with the minimum
    weight sum of vertex-disjoint circuit families of that total length."""
    net = network_from_matrix(a)
    poly = charpoly_tropdet(a)
    details = []
    all_match = True
    for j in range(1, a.n + 1):
        families = enumerate_extended_circuits(net, j, exhaustive_cap=exhaustive_cap)
        if families:
            enumerated = MinPlusValue(min(f.weight for f in families))
        else:
            enumerated = EPSILON
        coefficient = poly.coeffs[j]
        match = coefficient == enumerated
        all_match = all_match and match
        details.append(
            {
                "j": j,
                "coefficient": coefficient.to_json(),
                "circuit_minimum": enumerated.to_json(),
                "match": match,
            }
        )
    return Report(check="coefficients", hypothesis_met=None, details=details, passed=all_match)


def separated_check(net: Network, circuit_cap: int = CIRCUIT_CAP) -> bool:
    """Whether every vertex belongs to at most one elementary circuit."""
    seen: set[int] = set()
    for circuit in enumerate_circuits(net, cap=circuit_cap):
        for v in circuit.vertices:
            if v in seen:
                return False
            seen.add(v)
    return True


def _homogeneous_groups(circuits: list[Circuit]) -> list[tuple[Fraction, int]]:
    """Group circuits of equal average weight: (average, total length), ascending."""
    totals: dict[Fraction, int] = defaultdict(int)
    for circuit in circuits:
        totals[circuit.average] += circuit.length
    return sorted(totals.items())


def verify_separated_factorization(a: MinPlusMatrix, circuit_cap: int = CIRCUIT_CAP) -> Report:
    """Check that, for a separated network, the characteristic polynomial
    factors exactly as predicted by the homogeneous circuit groups:
    (x ⊕ p_1)^(l_1) ⊗ ... ⊗ (x ⊕ p_k)^(l_k) ⊗ x^r with r the number of
    circuit-free vertices."""
    net = network_from_matrix(a)
    circuits = enumerate_circuits(net, cap=circuit_cap)
    if not separated_check(net, circuit_cap=circuit_cap):
        return Report(
            check="separated_factorization",
            hypothesis_met=False,
            details=[{"note": "hypothesis not met: circuits are not pairwise vertex-disjoint"}],
            passed=True,
        )
    groups = _homogeneous_groups(circuits)
    covered = sum(length for _, length in groups)
    predicted = Factorization(
        factors=tuple((MinPlusValue(avg), length) for avg, length in groups),
        xpower=a.n - covered,
    )
    actual = factorize(charpoly_tropdet(a))
    details = [
        {"predicted": predicted.to_json(), "actual": actual.to_json()},
    ]
    return Report(
        check="separated_factorization",
        hypothesis_met=True,
        details=details,
        passed=predicted == actual,
    )


def verify_corollary_equivalence(a: MinPlusMatrix, circuit_cap: int = CIRCUIT_CAP) -> Report:
    """Compare the two characteristic polynomials as functions.

    When the network is separated the equivalence is asserted (the report
    fails if it does not hold); otherwise the outcome is recorded only.
    """
    net = network_from_matrix(a)
    separated = separated_check(net, circuit_cap=circuit_cap)
    g = charpoly_tropdet(a)
    g_hat = charpoly_flv(a)
    equivalent = is_equivalent(g, g_hat)
    details = [
        {
            "separated": separated,
            "equivalent": equivalent,
            "tropdet_canonical": canonicalize(g).to_json(),
            "trace_recursion_canonical": canonicalize(g_hat).to_json(),
        }
    ]
    return Report(
        check="corollary_equivalence",
        hypothesis_met=separated,
        details=details,
        passed=equivalent if separated else True,
    )


def plant_separated_instance(
    rng,
    n: int,
    max_cycles: int = 3,
    extra_edge_probability: float = 0.35,
) -> tuple[MinPlusMatrix, list[tuple[tuple[int, ...], tuple[Fraction, ...]]]]:
    """Random matrix whose network has only planted, pairwise-disjoint cycles.

    Plants up to max_cycles vertex-disjoint cycles with random integer
    edge weights, leaves the remaining vertices circuit-free, and adds
    extra edges only from earlier to later components in a fixed component
    order, so no new circuits can arise.

    Returns the matrix and the planted cycles as (vertex tuple, edge
    weight tuple) pairs, for independent verification.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    k = rng.randint(0, max_cycles)
    lengths: list[int] = []
    available = n
    for _ in range(k):
        if available == 0:
            break
        length = rng.randint(1, available)
        lengths.append(length)
        available -= length

    edges: dict[tuple[int, int], Fraction] = {}
    planted: list[tuple[tuple[int, ...], tuple[Fraction, ...]]] = []
    components: list[list[int]] = []
    cursor = 0
    for length in lengths:
        cycle = tuple(labels[cursor : cursor + length])
        cursor += length
        weights = tuple(Fraction(rng.randint(-9, 12)) for _ in range(length))
        for idx in range(length):
            edges[(cycle[idx], cycle[(idx + 1) % length])] = weights[idx]
        planted.append((cycle, weights))
        components.append(list(cycle))
    for v in labels[cursor:]:
        components.append([v])

    rng.shuffle(components)
    for earlier in range(len(components)):
        for later in range(earlier + 1, len(components)):
            for u in components[earlier]:
                for v in components[later]:
                    if rng.random() < extra_edge_probability:
                        edges[(u, v)] = Fraction(rng.randint(-9, 12))

    net = Network(m=n, edges=tuple((t, h, w) for (t, h), w in sorted(edges.items())))
    return matrix_from_network(net), planted
