"""Deletion-avoiding factor checks.

Each check evaluates a conditional statement on a concrete graph: the
premises (minimum degree, isolated-toughness bound, parameter ranges) are
recorded one by one, the conclusion is verified by exhaustive enumeration
of the deleted objects, and any failure is returned as a re-verifiable
certificate.  Wherever an independent criterion route exists alongside the
direct constructive route, both are executed and compared; a disagreement
is a bug, not a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import CapExceeded, SearchBudgetExceeded
from .factors import (
    DEFAULT_SEARCH_BUDGET,
    FactorCertificate,
    FactorViolation,
    check_ab_factor,
    check_star_factor,
    delta,
    find_ab_factor,
    find_star_factor,
    low_set,
    scan_deficiency,
)
from .graphs import (
    DeletionSpec,
    Graph,
    delete,
    delete_edges,
    delete_vertices,
)
from .toughness import isolated_toughness, threshold

DEFAULT_CAP_N = 12
DEFAULT_CAP_DELETIONS = 500


@dataclass(frozen=True)
class Premise:
    name: str
    holds: bool
    detail: str


@dataclass(frozen=True)
class Counterexample:
    """A failing deleted object together with the certificate refuting the
    factor, in the labels of the original graph.  ``deletion`` is None for
    statements about subsets rather than deletions."""

    deletion: DeletionSpec | None
    certificate: FactorCertificate

    def to_json_dict(self) -> dict:
        out = {"certificate": self.certificate.to_json_dict()}
        if self.deletion is not None:
            out["deletion"] = self.deletion.to_json_dict()
        return out


@dataclass(frozen=True)
class AvoidanceVerdict:
    """Three-valued outcome of one theorem check on one instance:
    premises-failed instances are vacuous rather than counterexamples."""

    theorem: str
    params: dict
    premises: tuple[Premise, ...]
    conclusion_holds: bool
    counterexample: Counterexample | None = None
    witnesses: tuple = ()

    def __post_init__(self):
        assert (self.counterexample is not None) == (not self.conclusion_holds)

    @property
    def premises_hold(self) -> bool:
        return all(p.holds for p in self.premises)

    @property
    def outcome(self) -> str:
        if not self.premises_hold:
            return "vacuous"
        return "verified" if self.conclusion_holds else "counterexample"

    def to_json_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "params": dict(self.params),
            "premises": {
                p.name: {"holds": p.holds, "detail": p.detail} for p in self.premises
            },
            "conclusion": self.conclusion_holds,
            "outcome": self.outcome,
            "witnesses": [list(w) for w in self.witnesses],
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json_dict()
        return out


@dataclass(frozen=True)
class RhoValue:
    """Penalty in {0, 1, 2} for factors avoiding a fixed edge uv, by where
    u and v sit relative to S, the low-degree set T' of (G-e)-S, and the
    rest W'."""

    value: int
    case: str
    u_location: str
    v_location: str


# -- premises -----------------------------------------------------------------


def _min_degree_premise(g: Graph, bound: int) -> Premise:
    d = g.min_degree()
    ok = d >= bound
    return Premise("min_degree", ok, f"min degree {d} {'>=' if ok else '<'} {bound}")


def _toughness_premise(g: Graph, thr, tag: str) -> Premise:
    val = isolated_toughness(g).value
    ok = val >= thr
    return Premise(
        "toughness", ok, f"I(G) = {val} {'>=' if ok else '<'} {thr} (threshold {tag})"
    )


def theorem_premises(
    tag: str,
    g: Graph,
    *,
    a: int | None = None,
    b: int | None = None,
    n: int | None = None,
    m: int | None = None,
    k: int | None = None,
    budget: int = DEFAULT_SEARCH_BUDGET,
    with_pair_deletions: bool = True,
) -> tuple[Premise, ...]:
    """The recorded hypotheses of one named statement on one graph."""
    if tag == "A":
        return (
            _min_degree_premise(g, a + n),
            _toughness_premise(g, threshold("A", a=a, b=b, n=n), "A"),
        )
    if tag == "B":
        in_range = 1 <= n and 2 * n <= m
        premises = [
            Premise("n_range", in_range, f"requires 1 <= n <= m/2: n={n}, m={m}"),
            _min_degree_premise(g, 1 + n),
        ]
        if m > n:
            # Fraction(1, m-n) equals threshold("B") whenever n is in range
            premises.append(_toughness_premise(g, Fraction(1, m - n), "B"))
        else:
            premises.append(
                Premise("toughness", False, f"threshold 1/(m-n) undefined for m={m}, n={n}")
            )
        return tuple(premises)
    if tag == "C":
        return (
            _min_degree_premise(g, a + n),
            _toughness_premise(g, threshold("C", a=a, b=b, n=n), "C"),
        )
    if tag == "D":
        return (_min_degree_premise(g, a + n),)
    if tag == "E":
        min_deg = _min_degree_premise(g, a + 2)
        premises = [min_deg]
        if with_pair_deletions:
            if min_deg.holds:
                premises.append(_pair_deletion_premise(g, a, b, budget))
            else:
                premises.append(
                    Premise(
                        "pair_deletions",
                        False,
                        "not evaluated: the minimum-degree premise already fails",
                    )
                )
        return tuple(premises)
    if tag == "D1":
        return (
            _min_degree_premise(g, a + n),
            _toughness_premise(g, threshold("D1", a=a, b=b, n=n, k=k), "D1"),
        )
    raise ValueError(f"unknown theorem tag {tag!r}")


def _pair_deletion_premise(g: Graph, a: int, b: int, budget: int) -> Premise:
    total = comb(g.n, 2)
    for pair in combinations(range(g.n), 2):
        res = delete_vertices(g, pair)
        if not find_ab_factor(res.graph, a, b, budget=budget, cert_cap=0).exists:
            return Premise(
                "pair_deletions",
                False,
                f"G - {{{pair[0]}, {pair[1]}}} admits no [{a},{b}]-factor",
            )
    return Premise(
        "pair_deletions", True, f"all {total} vertex-pair deletions admit [{a},{b}]-factors"
    )


# -- shared route helpers ------------------------------------------------------


def _lift_violation(v: FactorViolation, labels: Sequence[int]) -> FactorViolation:
    return FactorViolation(
        tuple(labels[x] for x in v.s),
        tuple(labels[x] for x in v.t),
        v.delta,
        v.bound,
    )


def _nonexistence_cert(g_del: Graph, labels, a: int, b: int, cap_n: int) -> FactorCertificate:
    """Violation certificate for a deleted graph, lifted to original labels."""
    if a < b and g_del.n <= cap_n:
        cert = check_ab_factor(g_del, a, b, cap_n=cap_n)
        if cert.exists:  # pragma: no cover - routes cannot disagree
            raise AssertionError("criterion contradicts constructive search")
        return FactorCertificate(False, violation=_lift_violation(cert.violation, labels))
    return FactorCertificate(False)


# -- vertex deletion -------------------------------------------------------------


def check_vertex_deletion_all(
    g: Graph,
    a: int,
    b: int,
    n: int,
    *,
    deletions: Iterable[Sequence[int]] | None = None,
    witnesses: Iterable[Sequence[int]] | None = None,
    cap_n: int = DEFAULT_CAP_N,
    cap_deletions: int = DEFAULT_CAP_DELETIONS,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> AvoidanceVerdict:
    """Does G - V' have an [a,b]-factor for every n-subset V'?

    Default mode enumerates every n-subset and runs two independent
    routes: the direct one finds a factor of each G - V', and the
    criterion one demands deficiency >= b*n for every S with |S| >= n
    (each such S contains an n-subset, and conversely).  The two verdicts
    must agree.

    Explicit ``deletions`` restrict the check to chosen n-subsets, e.g.
    the deletion exhibited by the sharpness construction; optional
    ``witnesses`` are candidate violating sets evaluated inside each
    deleted graph, which refute existence without a global scan.
    """
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got a={a}, b={b}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    params = {"a": a, "b": b, "n": n}
    premises = theorem_premises("A", g, a=a, b=b, n=n)
    if deletions is None:
        conclusion, counterexample, crit_witness = _vertex_deletion_full(
            g, a, b, n, cap_n, cap_deletions, budget
        )
        witnesses_out = (crit_witness,) if crit_witness else ()
    else:
        conclusion, counterexample, witnesses_out = _vertex_deletion_targeted(
            g, a, b, n, deletions, witnesses, cap_n, budget
        )
    return AvoidanceVerdict(
        "A", params, premises, conclusion, counterexample, witnesses_out
    )


def _vertex_deletion_full(g, a, b, n, cap_n, cap_deletions, budget):
    if g.n > cap_n:
        raise CapExceeded(
            f"subset enumeration capped at {cap_n} vertices, got {g.n}"
        )
    total = comb(g.n, n)
    if total > cap_deletions:
        raise CapExceeded(f"{total} deletions exceed the cap of {cap_deletions}")
    direct_failure = None
    for combo in combinations(range(g.n), n):
        res = delete_vertices(g, combo)
        cert = find_ab_factor(res.graph, a, b, budget=budget, cert_cap=0)
        if not cert.exists:
            full = _nonexistence_cert(res.graph, res.original_labels, a, b, cap_n)
            direct_failure = Counterexample(DeletionSpec.vertices(combo), full)
            break
    violation = scan_deficiency(g, a, b, bound=b * n, min_size=n, cap_n=cap_n)
    if (direct_failure is None) != (violation is None):
        raise RuntimeError(
            "direct and criterion routes disagree on vertex deletions; "
            f"direct={direct_failure}, criterion={violation}"
        )
    crit_witness = violation.s if violation is not None else None
    return direct_failure is None, direct_failure, crit_witness


def _vertex_deletion_targeted(g, a, b, n, deletions, witnesses, cap_n, budget):
    witness_sets = [tuple(sorted(w)) for w in witnesses] if witnesses else []
    tried = tuple(witness_sets)
    for raw in deletions:
        v0 = tuple(sorted(raw))
        if len(v0) != n:
            raise ValueError(f"deletion {v0} is not an n-subset for n={n}")
        spec = DeletionSpec.vertices(v0)
        spec.validate(g)
        res = delete(g, spec)
        index = {old: new for new, old in enumerate(res.original_labels)}
        refuted = None
        for w in witness_sets:
            if set(w) & set(v0):
                raise ValueError(f"witness {w} intersects the deleted set {v0}")
            s_local = [index[x] for x in w]
            if delta(res.graph, s_local, a, b) < 0:
                t_local = low_set(res.graph, s_local, a)
                viol = FactorViolation(
                    tuple(s_local), t_local, delta(res.graph, s_local, a, b), 0
                )
                refuted = Counterexample(
                    spec,
                    FactorCertificate(
                        False, violation=_lift_violation(viol, res.original_labels)
                    ),
                )
                break
        if refuted is None:
            try:
                cert = find_ab_factor(res.graph, a, b, budget=budget, cert_cap=0)
            except SearchBudgetExceeded:
                raise CapExceeded(
                    "targeted vertex deletion undecided: no witness violates and "
                    "the constructive search exceeded its budget"
                ) from None
            if not cert.exists:
                refuted = Counterexample(
                    spec, _nonexistence_cert(res.graph, res.original_labels, a, b, cap_n)
                )
        else:
            # witness refutation is exact; confirm with the direct route
            # whenever the search completes within budget
            try:
                cert = find_ab_factor(res.graph, a, b, budget=budget, cert_cap=0)
            except SearchBudgetExceeded:
                cert = None
            if cert is not None and cert.exists:
                raise RuntimeError(
                    "witness claims a violation but a factor was constructed"
                )
        if refuted is not None:
            return False, refuted, tried
    return True, None, tried


# -- edge deletion (star factors) ---------------------------------------------------


def check_edge_deletion_star(
    g: Graph,
    m: int,
    n: int,
    *,
    cap_n: int = DEFAULT_CAP_N,
    cap_deletions: int = DEFAULT_CAP_DELETIONS,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> AvoidanceVerdict:
    """Does G - E' have a spanning star forest with star sizes 1..m for
    every n-subset E' of edges?  The criterion route checks each deleted
    graph via the isolated-vertex inequality, the direct route builds the
    forest; both must agree."""
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    params = {"m": m, "n": n}
    premises = theorem_premises("B", g, m=m, n=n)
    if g.n > cap_n:
        raise CapExceeded(f"subset enumeration capped at {cap_n} vertices, got {g.n}")
    total = comb(g.edge_count, n) if g.edge_count >= n else 0
    if total > cap_deletions:
        raise CapExceeded(f"{total} deletions exceed the cap of {cap_deletions}")
    counterexample = None
    for eprime in combinations(g.edges, n):
        h = delete_edges(g, eprime)
        crit = check_star_factor(h, m, cap_n=cap_n)
        forest = find_star_factor(h, m, budget=budget)
        if crit.exists != (forest is not None):
            raise RuntimeError(
                f"criterion and constructive star routes disagree on {eprime}"
            )
        if forest is not None:
            forest.validate(h, m)
            continue
        if m >= 2:
            t = low_set(h, crit.witness, 1)
            cert = FactorCertificate(
                False,
                violation=FactorViolation(
                    crit.witness, t, m * len(crit.witness) - len(t), 0
                ),
            )
        else:
            cert = FactorCertificate(False)
        counterexample = Counterexample(DeletionSpec.edges(eprime), cert)
        break
    return AvoidanceVerdict(
        "B", params, premises, counterexample is None, counterexample
    )


# -- matching deletion ---------------------------------------------------------------


def enumerate_matchings(g: Graph, size: int) -> list[tuple[tuple[int, int], ...]]:
    """All matchings of exactly ``size`` edges, by lexicographic
    backtracking over the edge list."""
    if size < 0:
        raise ValueError("matching size must be nonnegative")
    edges = g.edges
    out: list[tuple[tuple[int, int], ...]] = []
    cur: list[tuple[int, int]] = []

    def rec(start: int, used: int) -> None:
        if len(cur) == size:
            out.append(tuple(cur))
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            cur.append(edges[i])
            rec(i + 1, used | 1 << u | 1 << v)
            cur.pop()

    rec(0, 0)
    return out


def check_matching_deletion(
    g: Graph,
    a: int,
    b: int,
    n: int,
    *,
    cap_n: int = DEFAULT_CAP_N,
    cap_deletions: int = DEFAULT_CAP_DELETIONS,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> AvoidanceVerdict:
    """Does G - M have an [a,b]-factor for every n-matching M?"""
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got a={a}, b={b}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    params = {"a": a, "b": b, "n": n}
    premises = theorem_premises("C", g, a=a, b=b, n=n)
    if g.n > cap_n:
        raise CapExceeded(f"subset enumeration capped at {cap_n} vertices, got {g.n}")
    matchings = enumerate_matchings(g, n)
    if len(matchings) > cap_deletions:
        raise CapExceeded(
            f"{len(matchings)} matchings exceed the cap of {cap_deletions}"
        )
    counterexample = None
    for matching in matchings:
        h = delete_edges(g, matching)
        cert = find_ab_factor(h, a, b, budget=budget, cert_cap=0)
        if not cert.exists:
            full = _nonexistence_cert(h, tuple(range(g.n)), a, b, cap_n)
            counterexample = Counterexample(DeletionSpec.matching(matching), full)
            break
    return AvoidanceVerdict(
        "C", params, premises, counterexample is None, counterexample
    )


# -- single-edge avoidance -------------------------------------------------------------


def rho(g: Graph, e: tuple[int, int], s: Sequence[int], a: int, b: int) -> RhoValue:
    """The 0/1/2 penalty at S for factors avoiding the edge e = uv: 2 when
    both endpoints land in the low-degree set T' of (G-e)-S, 1 when one is
    in T' and the other in W' = G-(S u T'), else 0 (including endpoints
    inside S).  Only the lower bound a enters the classification."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the graph")
    g_prime = delete_edges(g, [e])
    t_prime = set(low_set(g_prime, s, a))
    s_set = set(s)

    def locate(x: int) -> str:
        if x in s_set:
            return "S"
        return "T'" if x in t_prime else "W'"

    lu, lv = locate(u), locate(v)
    if lu == lv == "T'":
        return RhoValue(2, "both endpoints in T'", lu, lv)
    if {lu, lv} == {"T'", "W'"}:
        return RhoValue(1, "one endpoint in T', the other in W'", lu, lv)
    return RhoValue(0, "otherwise", lu, lv)


def check_edge_avoiding(
    g: Graph,
    e: tuple[int, int],
    a: int,
    b: int,
    *,
    cap_n: int = DEFAULT_CAP_N,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> AvoidanceVerdict:
    """Does G have an [a,b]-factor avoiding the fixed edge e?  Criterion
    route: deficiency of G at every S must reach the penalty rho(S).
    Direct route: find a factor of G - e.  The two must agree."""
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got a={a}, b={b}")
    u, v = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the graph")
    if g.n > cap_n:
        raise CapExceeded(f"subset enumeration capped at {cap_n} vertices, got {g.n}")
    g_prime = delete_edges(g, [(u, v)])
    violation_s = None
    for k in range(g.n + 1):
        if violation_s is not None:
            break
        for combo in combinations(range(g.n), k):
            d_g = delta(g, combo, a, b)
            penalty = _rho_value(g, g_prime, (u, v), combo, a)
            if d_g < penalty:
                violation_s = combo
                break
    direct = find_ab_factor(g_prime, a, b, budget=budget, cert_cap=0)
    if (violation_s is None) != direct.exists:
        raise RuntimeError(
            f"criterion and direct routes disagree for edge ({u}, {v})"
        )
    if violation_s is None:
        return AvoidanceVerdict(
            "LemmaH", {"a": a, "b": b, "edge": [u, v]}, (), True, None
        )
    # certificate in G - e at the failing S, where the plain criterion applies
    t_prime = low_set(g_prime, violation_s, a)
    d_prime = delta(g_prime, violation_s, a, b)
    assert d_prime < 0
    cert = FactorCertificate(
        False, violation=FactorViolation(violation_s, t_prime, d_prime, 0)
    )
    return AvoidanceVerdict(
        "LemmaH",
        {"a": a, "b": b, "edge": [u, v]},
        (),
        False,
        Counterexample(DeletionSpec.edge(u, v), cert),
    )


def _rho_value(g: Graph, g_prime: Graph, e, s, a: int) -> int:
    u, v = e
    s_mask = 0
    for x in s:
        s_mask |= 1 << x
    keep = g.full_mask & ~s_mask
    if s_mask >> u & 1 or s_mask >> v & 1:
        return 0
    du = (g_prime.adj[u] & keep).bit_count()
    dv = (g_prime.adj[v] & keep).bit_count()
    u_low = du <= a - 1
    v_low = dv <= a - 1
    if u_low and v_low:
        return 2
    if u_low or v_low:
        return 1
    return 0


# -- hierarchy and pair-deletion statements ----------------------------------------------


def check_theorem_D(
    g: Graph,
    a: int,
    b: int,
    n: int,
    *,
    cap_n: int = DEFAULT_CAP_N,
    cap_deletions: int = DEFAULT_CAP_DELETIONS,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> AvoidanceVerdict:
    """If every n-subset deletion leaves an [a,b]-factor, so does every
    (n-1)-subset deletion.  The antecedent is recorded as a premise, so a
    false antecedent reports as vacuous."""
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got a={a}, b={b}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if g.n > cap_n:
        raise CapExceeded(f"subset enumeration capped at {cap_n} vertices, got {g.n}")
    if comb(g.n, n) + comb(g.n, n - 1) > cap_deletions:
        raise CapExceeded("deletion enumeration exceeds the cap")
    params = {"a": a, "b": b, "n": n}
    premises = list(theorem_premises("D", g, a=a, b=b, n=n))
    antecedent_fail = _first_vertex_deletion_failure(g, a, b, n, budget, cap_n)
    if antecedent_fail is None:
        premises.append(
            Premise("antecedent", True, f"all {comb(g.n, n)} {n}-subset deletions admit factors")
        )
    else:
        premises.append(
            Premise(
                "antecedent",
                False,
                f"G - {list(antecedent_fail.deletion.members)} admits no [{a},{b}]-factor",
            )
        )
    consequent_fail = _first_vertex_deletion_failure(g, a, b, n - 1, budget, cap_n)
    return AvoidanceVerdict(
        "D",
        params,
        tuple(premises),
        consequent_fail is None,
        consequent_fail,
    )


def _first_vertex_deletion_failure(g, a, b, size, budget, cap_n):
    for combo in combinations(range(g.n), size):
        res = delete_vertices(g, combo)
        if not find_ab_factor(res.graph, a, b, budget=budget, cert_cap=0).exists:
            cert = _nonexistence_cert(res.graph, res.original_labels, a, b, cap_n)
            return Counterexample(DeletionSpec.vertices(combo), cert)
    return None


def check_theorem_E(
    g: Graph,
    a: int,
    b: int,
    *,
    cap_n: int = DEFAULT_CAP_N,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> AvoidanceVerdict:
    """If the minimum degree reaches a+2 and G minus any vertex pair still
    has an [a,b]-factor, then G - e has one for every edge e."""
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got a={a}, b={b}")
    if g.n > cap_n:
        raise CapExceeded(f"enumeration capped at {cap_n} vertices, got {g.n}")
    params = {"a": a, "b": b}
    premises = theorem_premises("E", g, a=a, b=b, budget=budget)
    counterexample = None
    for e in g.edges:
        h = delete_edges(g, [e])
        if not find_ab_factor(h, a, b, budget=budget, cert_cap=0).exists:
            cert = _nonexistence_cert(h, tuple(range(g.n)), a, b, cap_n)
            counterexample = Counterexample(DeletionSpec.edge(*e), cert)
            break
    return AvoidanceVerdict(
        "E", params, premises, counterexample is None, counterexample
    )


def check_lemma_D1(
    g: Graph,
    a: int,
    b: int,
    n: int,
    k: int,
    *,
    cap_n: int = DEFAULT_CAP_N,
) -> AvoidanceVerdict:
    """Under the stated degree and toughness premises, the deficiency of
    every S with nonempty low-degree set reaches k*n."""
    if not 2 <= k <= b:
        raise ValueError(f"need 2 <= k <= b, got k={k}, b={b}")
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got a={a}, b={b}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    params = {"a": a, "b": b, "n": n, "k": k}
    premises = theorem_premises("D1", g, a=a, b=b, n=n, k=k)
    violation = scan_deficiency(
        g, a, b, bound=k * n, min_size=0, require_t=True, cap_n=cap_n
    )
    if violation is None:
        return AvoidanceVerdict("LemmaD1", params, premises, True, None)
    cert = FactorCertificate(False, violation=violation)
    return AvoidanceVerdict(
        "LemmaD1", params, premises, False, Counterexample(None, cert)
    )
