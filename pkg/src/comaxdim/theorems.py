"""Executable checks of the closed forms and structural facts about co-maximal graphs.

Every check is computed twice: once from a closed form or structural
prediction, once from the graphs themselves. A check is ``pass`` when both
agree, ``fail`` when they don't, and ``not-applicable`` when the ring does not
satisfy the hypotheses of the statement being checked. Hypotheses are
checked before formulas.

Rings fall into exactly one regime:

``reduced-two``  two fields
``reduced``      three or more fields
``nonreduced``   no field factors
``mixed``        at least one field and at least one non-field factor
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Iterable, Optional

from .comaximal import DerivedGraphBundle, build_bundle, decompose_components
from .config import Limits, default_limits
from .errors import ComaxError, EmptyGraphError
from .graph import Graph, diameter
from .ring import (
    Ideal,
    RingSpec,
    enumerate_maximal_ideals,
    ideal_meet,
    ideal_sum,
    is_contained,
    nil_class,
    nzc,
)
from .solver import (
    CoverSolution,
    SdimResult,
    is_strong_resolving_set,
    max_independent_set,
    sdim_bruteforce,
    sdim_via_srg,
)
from .strong_resolving import SrGraph, build_srg, mmd_adjacency

PASS, FAIL, NA, ERROR = "pass", "fail", "not-applicable", "error"


@dataclass
class TheoremCheck:
    id: str
    spec: str
    expected: Any
    computed: Any
    status: str
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "spec": self.spec,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "evidence": self.evidence,
        }


def _check(id: str, spec: RingSpec, expected, computed, **evidence) -> TheoremCheck:
    status = PASS if expected == computed else FAIL
    return TheoremCheck(id, spec_text(spec), expected, computed, status, evidence)


def _not_applicable(id: str, spec: RingSpec, why: str) -> TheoremCheck:
    return TheoremCheck(id, spec_text(spec), None, None, NA, {"reason": why})


def spec_text(spec: RingSpec) -> str:
    return f"{spec} {spec.chain}"


def regime(spec: RingSpec) -> str:
    if len(spec) < 2:
        raise EmptyGraphError(f"{spec} has a single maximal ideal; its graph is empty")
    if spec.is_reduced:
        return "reduced-two" if len(spec) == 2 else "reduced"
    return "nonreduced" if spec.m_fields == 0 else "mixed"


# --- closed forms ---------------------------------------------------------

def predicted_sdim(spec: RingSpec) -> int:
    reg = regime(spec)
    n_all = len(spec)
    if reg == "reduced-two":
        return 1
    if reg == "reduced":
        return 2**n_all - 2 * n_all
    n, m = spec.n_nonfields, spec.m_fields
    v = spec.vertex_count()
    if reg == "nonreduced":
        return v - 2 * n + 2
    return v - 2 * n - 2 * m + 2


def predicted_beta(spec: RingSpec) -> int:
    """Independence number of the strong resolving graph of the ring's graph."""
    reg = regime(spec)
    n, m = spec.n_nonfields, spec.m_fields
    if reg == "reduced-two":
        return 1  # the strong resolving graph is K2
    if reg == "reduced":
        return len(spec) - 2
    if reg == "nonreduced":
        return 2 * n - 2
    return 2 * n + m - 2


def predicted_boundary(spec: RingSpec, vertices: Iterable[Ideal]) -> set[Ideal]:
    reg = regime(spec)
    vs = set(vertices)
    if reg == "reduced-two" or reg == "nonreduced":
        return vs
    if reg == "reduced":
        return vs - set(enumerate_maximal_ideals(spec))
    # mixed: the maximal ideals sitting over a field factor drop out
    field_max = {
        I for I in enumerate_maximal_ideals(spec)
        if any(spec.components[i].is_field and l < k for i, (l, k) in enumerate(zip(I.levels, I.chain)))
    }
    return vs - field_max


# --- shared per-ring computation -----------------------------------------

class RingAnalysis:
    """Lazily computed graphs and solutions for one ring, shared by the checks."""

    def __init__(self, spec: RingSpec, limits: Limits):
        self.spec = spec
        self.limits = limits
        self.regime = regime(spec)

    @cached_property
    def bundle(self) -> DerivedGraphBundle:
        return build_bundle(self.spec, self.limits.enum_cap)

    @property
    def gamma(self) -> Graph:
        return self.bundle.gamma

    @property
    def vertices(self) -> tuple[Ideal, ...]:
        return self.bundle.vertices

    @cached_property
    def sr(self) -> SrGraph:
        return build_srg(self.gamma)

    @cached_property
    def cover(self) -> CoverSolution:
        return max_independent_set(self.sr.srg, self.limits.solve_cap)

    @cached_property
    def sdim(self) -> SdimResult:
        return sdim_via_srg(self.gamma, self.limits.solve_cap, srg=self.sr)

    @cached_property
    def sdim_oracle(self) -> SdimResult:
        return sdim_bruteforce(self.gamma, self.limits.brute_cap)

    def oracle_enabled(self, oracle: Optional[bool]) -> bool:
        if oracle is None:
            return self.gamma.n <= self.limits.brute_cap
        return oracle

    def labels(self, indices: Iterable[int]) -> list[str]:
        return [str(self.vertices[i]) for i in indices]


@lru_cache(maxsize=64)
def ring_analysis(spec: RingSpec, limits: Optional[Limits] = None) -> RingAnalysis:
    return RingAnalysis(spec, limits or default_limits())


def _analysis(spec: RingSpec, limits: Optional[Limits]) -> RingAnalysis:
    return ring_analysis(spec, limits or default_limits())


# --- checks ---------------------------------------------------------------

def verify_sdim(spec: RingSpec, limits: Optional[Limits] = None, oracle: Optional[bool] = None) -> TheoremCheck:
    """Pipeline value against the closed form, plus the oracle when enabled."""
    a = _analysis(spec, limits)
    expected = predicted_sdim(spec)
    res = a.sdim
    evidence = {
        "regime": a.regime,
        "vertices": a.gamma.n,
        "witness": a.labels(res.witness),
        "witness_valid": is_strong_resolving_set(a.gamma, res.witness),
    }
    computed = res.sdim
    ok = evidence["witness_valid"]
    if a.oracle_enabled(oracle):
        brute = a.sdim_oracle
        evidence["oracle"] = brute.sdim
        evidence["oracle_witness"] = a.labels(brute.witness)
        ok = ok and brute.sdim == res.sdim
    check = _check(f"sdim-{a.regime}", spec, expected, computed, **evidence)
    if not ok:
        check.status = FAIL
    return check


def verify_boundary(spec: RingSpec, limits: Optional[Limits] = None) -> TheoremCheck:
    a = _analysis(spec, limits)
    predicted = predicted_boundary(spec, a.vertices)
    actual = {a.vertices[i] for i in a.sr.boundary}
    return _check(
        f"boundary-{a.regime}",
        spec,
        sorted(str(I) for I in predicted),
        sorted(str(I) for I in actual),
        size=len(actual),
        vertices=a.gamma.n,
    )


def _chain_witness(spec: RingSpec) -> list[Ideal]:
    """(F1,0,...,0), (F1,F2,0,...,0), ..., with n-2 nonzero components at most."""
    n = len(spec)
    return [spec.ideal([1] * t + [0] * (n - t)) for t in range(1, n - 1)]


def verify_beta(spec: RingSpec, limits: Optional[Limits] = None) -> TheoremCheck:
    a = _analysis(spec, limits)
    sol = a.cover
    srg = a.sr.srg
    evidence: dict[str, Any] = {
        "regime": a.regime,
        "srg_vertices": srg.n,
        "alpha": sol.alpha,
        "gallai": sol.alpha + sol.beta == srg.n,
        "independent_witness": a.labels(a.sr.to_base(sol.independent_witness)),
    }
    ok = evidence["gallai"] and srg.is_independent(sol.independent_witness)
    if a.regime == "reduced":
        n = len(spec)
        chain = _chain_witness(spec)
        idx = [srg.index(I) for I in chain]
        evidence["chain_witness"] = [str(I) for I in chain]
        evidence["chain_independent"] = srg.is_independent(idx) and len(chain) == n - 2
        base = a.sr.to_base(sol.independent_witness)
        evidence["max_nzc_in_witness"] = max(nzc(a.vertices[i]) for i in base)
        ok = ok and evidence["chain_independent"] and evidence["max_nzc_in_witness"] == n - 2
    check = _check(f"beta-{a.regime}", spec, predicted_beta(spec), sol.beta, **evidence)
    if not ok:
        check.status = FAIL
    return check


def nil_classes(vertices: Iterable[Ideal]) -> dict:
    """Vertex indices grouped by nil class, in first-seen order."""
    by_class: dict = {}
    for i, I in enumerate(vertices):
        by_class.setdefault(nil_class(I), []).append(i)
    return by_class


def same_class_neighborhoods(g: Graph, vertices: Iterable[Ideal], closed: bool = False) -> bool:
    """Do all members of each nil class share their (open or closed) neighbourhood?

    Open neighbourhoods always agree. Closed ones cannot agree for two distinct
    members: same-class ideals sum to a proper ideal, so they are never adjacent
    and each lies only in its own closed neighbourhood.
    """
    row = g.closed_mask if closed else (lambda i: g.adj[i])
    return all(len({row(i) for i in members}) == 1 for members in nil_classes(vertices).values())


def nil_class_sizes(spec: RingSpec, vertices: Iterable[Ideal]) -> dict[str, int]:
    sizes: dict[str, int] = {}
    for I in vertices:
        key = str(nil_class(I))
        sizes[key] = sizes.get(key, 0) + 1
    return dict(sorted(sizes.items()))


def verify_structure(spec: RingSpec, limits: Optional[Limits] = None) -> TheoremCheck:
    """Derived graphs against the strong resolving graph, and component shapes."""
    a = _analysis(spec, limits)
    b = a.bundle
    srg = a.sr.srg
    parts: dict[str, bool] = {"same_class_twins": same_class_neighborhoods(a.gamma, a.vertices)}
    evidence: dict[str, Any] = {
        "regime": a.regime,
        "same_class_closed_nbhd_equal": same_class_neighborhoods(a.gamma, a.vertices, closed=True),
    }
    if a.regime in ("reduced-two", "reduced"):
        parts["star_equals_srg"] = b.gamma_star.same_labeled_graph(srg)
        if a.regime == "reduced-two":
            parts["gamma_is_K2"] = b.gamma.n == 2 and b.gamma.is_complete()
            parts["star_star_edgeless"] = b.gamma_star_star.edge_count() == 0
        else:
            ss = b.gamma_star_star
            isolated = {b.vertices[v] for v in range(ss.n) if not ss.adj[v]}
            parts["star_star_isolated_are_maximal"] = isolated == set(enumerate_maximal_ideals(spec))
            comps = decompose_components(ss)
            big = [c for c in comps if c.size > 1]
            parts["star_star_is_H_plus_isolated"] = len(big) == 1 and len(comps) == 1 + len(spec)
    else:
        gp = b.gamma_prime
        if a.regime == "nonreduced":
            parts["prime_equals_srg"] = gp.same_labeled_graph(srg)
            target = gp
        else:
            # extension by analogy: compare on the boundary only
            evidence["by_analogy"] = True
            target = gp.induced_subgraph(a.sr.boundary)
            parts["prime_on_boundary_equals_srg"] = target.same_labeled_graph(srg)
        comps = decompose_components(target)
        nonfield = [i for i, c in enumerate(spec.components) if not c.is_field]
        expected_cliques = {}
        for i in nonfield:
            members = {
                target.index(I) for I in target.labels
                if all(I.levels[j] == I.chain[j] for j in range(len(spec)) if j != i) and I.levels[i] < I.chain[i]
            }
            expected_cliques[i] = members
        clique_sets = [set(c.vertices) for c in comps]
        parts["annihilator_cliques_are_components"] = all(
            members in clique_sets and target.is_clique(members) and len(members) == spec.annihilator_class_size(i)
            for i, members in expected_cliques.items()
        )
        rest = [c for c in comps if set(c.vertices) not in expected_cliques.values()]
        evidence["clique_sizes"] = sorted(len(m) for m in expected_cliques.values())
        evidence["remainder_sizes"] = [c.size for c in rest]
        if a.regime == "nonreduced":
            if len(spec) == 2:
                parts["remainder_empty"] = not rest
            else:
                parts["remainder_connected"] = len(rest) == 1
    evidence["parts"] = parts
    return _check(f"structure-{a.regime}", spec, True, all(parts.values()), **evidence)


def verify_distance_lemma(spec: RingSpec, limits: Optional[Limits] = None) -> TheoremCheck:
    """Distances of reduced rings from meets and sums alone."""
    if not spec.is_reduced or len(spec) < 2:
        return _not_applicable("distance-trichotomy", spec, "needs a product of at least two fields")
    a = _analysis(spec, limits)
    g = a.gamma
    vs = a.vertices
    mmd = mmd_adjacency(g)
    mismatches = []
    mmd_violations = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            I, J = vs[i], vs[j]
            if ideal_sum(I, J).is_whole:
                predicted = 1
            elif ideal_meet(I, J).is_zero:
                predicted = 3
            else:
                predicted = 2
            if g.dist[i][j] != predicted:
                mismatches.append([str(I), str(J)])
            comparable = is_contained(I, J) or is_contained(J, I)
            # K2 (two fields) is its own strong resolving graph, so the
            # comparable/co-maximal exclusion only holds from three fields on
            if len(spec) >= 3 and (comparable or predicted == 1) and mmd[i] >> j & 1:
                mmd_violations.append([str(I), str(J)])
    return _check(
        "distance-trichotomy",
        spec,
        {"mismatches": 0, "mmd_violations": 0},
        {"mismatches": len(mismatches), "mmd_violations": len(mmd_violations)},
        diameter=int(diameter(g)),
        examples=(mismatches + mmd_violations)[:5],
    )


VERIFIERS = (verify_sdim, verify_boundary, verify_beta, verify_structure, verify_distance_lemma)


def check_spec(spec: RingSpec, limits: Optional[Limits] = None, oracle: Optional[bool] = None) -> list[TheoremCheck]:
    out = [verify_sdim(spec, limits, oracle)]
    out.extend(f(spec, limits) for f in VERIFIERS[1:])
    return out


def sweep(family: Iterable[RingSpec], limits: Optional[Limits] = None, oracle: Optional[bool] = None) -> list[TheoremCheck]:
    """All checks on every ring, in input order; a failing ring does not stop the sweep."""
    results: list[TheoremCheck] = []
    for spec in family:
        try:
            results.extend(check_spec(spec, limits, oracle))
        except ComaxError as exc:
            results.append(
                TheoremCheck("error", spec_text(spec), None, None, ERROR, {"error": type(exc).__name__, "message": str(exc)})
            )
    return results
