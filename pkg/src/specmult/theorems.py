"""Structural predicates tying eigenvalue multiplicity to graph shape.

Each predicate evaluates the structural and spectral side conditions of one
characterization and reports them separately from the direct multiplicity
computation, so a disagreement between the two shows up as a recorded
discrepancy instead of being silently repaired.

Throughout, the bound of interest is 2*theta(G) + p(G) (cycle count and
pendant count); "one deficient" means multiplicity exactly one below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import (
    NotApplicable,
    NotATree,
    NotConnected,
    NotCStarShape,
    NotUnicyclic,
    PatternMismatch,
    SideConditionUnmet,
)
from .graphs import (
    Graph,
    bfs_distances,
    cycle_graph,
    cyclomatic_number,
    delete_edge,
    is_connected,
    path_graph,
    pendant_vertices,
)
from .hermitian import (
    ExactComplex,
    GainGraph,
    HermitianMatrix,
    a_alpha_gain,
    adjacency_matrix,
    cycle_gain,
    principal_submatrix,
    validate_pattern,
)
from .spectra import (
    AlgebraicEigenvalue,
    EigenvalueLike,
    IntPolynomial,
    describe_eigenvalue,
    eigenvalue_float,
    min_poly_2cos,
    multiplicity,
    path_spectrum_membership,
    poly_primitive_int,
)
from .structure import (
    blocks,
    classify_family,
    cycle_vertices,
    is_cycle_graph,
    is_path_graph,
    is_tree,
    major_sets,
    tadpole_parts,
)

VERDICTS = (
    "AttainsBound",
    "OneDeficientFormA",
    "OneDeficientFormB",
    "OneDeficientFormC",
    "OneDeficientFormD",
    "TwoPlusDeficient",
)


@dataclass(frozen=True)
class ClassificationOutcome:
    verdict: str
    evidence: dict

    def as_json(self) -> dict:
        return {"verdict": self.verdict, "evidence": self.evidence}


@dataclass(frozen=True)
class CheckReport:
    name: str
    holds: bool
    lhs: object
    rhs: object
    instance: dict

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "instance": self.instance,
        }


@dataclass(frozen=True)
class PredicateResult:
    holds: bool
    evidence: dict

    def __bool__(self) -> bool:
        return self.holds


def structural_bound(g: Graph) -> int:
    """2*theta + p, the multiplicity ceiling for connected G on >= 2 vertices."""
    return 2 * cyclomatic_number(g) + len(pendant_vertices(g))


def _is_certified(b: HermitianMatrix, lam: EigenvalueLike) -> bool:
    return b.is_exact and not isinstance(lam, float)


def _mult(b: HermitianMatrix, lam: EigenvalueLike, tol: float = 1e-8) -> int:
    return multiplicity(b, lam, tol).multiplicity


def _sub_mult(b: HermitianMatrix, keep: Sequence[int], lam: EigenvalueLike, tol: float = 1e-8) -> int:
    sub, _ = principal_submatrix(b, keep)
    return _mult(sub, lam, tol)


def _instance_stub(g: Graph, lam) -> dict:
    return {
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "lambda": describe_eigenvalue(lam),
    }


def check_upper_bound(g: Graph, b: HermitianMatrix, lam: EigenvalueLike, tol: float = 1e-8) -> CheckReport:
    """multiplicity <= 2*theta + p, with equality only on cycles at multiplicity 2."""
    if not is_connected(g):
        raise NotConnected("bound check needs a connected graph")
    if g.n < 2:
        raise NotApplicable("bound check needs at least two vertices")
    if not validate_pattern(b, g):
        raise PatternMismatch("matrix is not in S(G)")
    m = _mult(b, lam, tol)
    bound = structural_bound(g)
    holds = m <= bound
    if holds and m == bound:
        holds = is_cycle_graph(g) and m == 2
    inst = _instance_stub(g, lam)
    inst["equality"] = m == bound
    return CheckReport("upper-bound", holds, m, bound, inst)


# ---------------------------------------------------------------------------
# Trees


def tree_equality_predicate(
    t: Graph, b: HermitianMatrix, lam: EigenvalueLike, tol: float = 1e-8
) -> PredicateResult:
    """Structural test for multiplicity p-1 on a tree.

    Paths pass outright. Otherwise every component left after removing the
    major vertices must carry lambda in its principal submatrix, and no two
    major vertices may be adjacent.
    """
    if not (is_connected(t) and is_tree(t)):
        raise NotATree("predicate needs a connected tree")
    if t.n < 2:
        raise NotApplicable("predicate needs at least two vertices")
    if not validate_pattern(b, t):
        raise PatternMismatch("matrix is not in S(T)")
    if is_path_graph(t):
        return PredicateResult(True, {"path": True})
    x_set = major_sets(t).X
    nonadjacent = all(not t.has_edge(u, v) for u, v in combinations(x_set, 2))
    keep = [v for v in range(t.n) if v not in set(x_set)]
    rest, restmap = principal_submatrix(b, keep)
    pieces = []
    all_member = True
    from .graphs import components

    for comp in components(rest.pattern):
        piece, piecemap = principal_submatrix(rest, comp)
        member = path_spectrum_membership(piece, lam, tol)
        pieces.append(
            {
                "vertices": [restmap.to_parent[v] for v in comp],
                "carries_lambda": member,
            }
        )
        all_member = all_member and member
    holds = nonadjacent and all_member
    return PredicateResult(
        holds,
        {
            "path": False,
            "majors": list(x_set),
            "majors_nonadjacent": nonadjacent,
            "pieces": pieces,
        },
    )


def corollary_nullity_tree(t: Graph) -> bool:
    """Distance parity test matching nullity p-1 for trees with p >= 3.

    Every leaf must be at odd distance from the major set and every pair of
    major vertices at even distance.
    """
    if not (is_connected(t) and is_tree(t)):
        raise NotATree("needs a connected tree")
    leaves = pendant_vertices(t)
    if len(leaves) < 3:
        raise NotApplicable("needs at least three pendant vertices")
    x_set = major_sets(t).X
    dist_tables = {u: bfs_distances(t, u) for u in x_set}
    for v in leaves:
        nearest = min(dist_tables[u][v] for u in x_set)
        if nearest % 2 == 0:
            return False
    for u1, u2 in combinations(x_set, 2):
        if dist_tables[u1][u2] % 2 != 0:
            return False
    return True


def corollary_minus_one_tree(t: Graph) -> bool:
    """Distance test matching multiplicity p-1 at eigenvalue -1 for adjacency.

    Paths qualify exactly when n = 3k-1; otherwise every leaf-to-major
    distance must be congruent to 2 mod 3.
    """
    if not (is_connected(t) and is_tree(t)):
        raise NotATree("needs a connected tree")
    leaves = pendant_vertices(t)
    if len(leaves) < 2:
        raise NotApplicable("needs at least two pendant vertices")
    if is_path_graph(t):
        return t.n % 3 == 2
    x_set = major_sets(t).X
    for u in x_set:
        dist = bfs_distances(t, u)
        for v in leaves:
            if dist[v] % 3 != 2:
                return False
    return True


# ---------------------------------------------------------------------------
# Unicyclic graphs and the general decomposition form


def _class_u_member(g: Graph) -> bool:
    """Connected, exactly one cycle, at most one pendant vertex."""
    return (
        is_connected(g)
        and cyclomatic_number(g) == 1
        and len(pendant_vertices(g)) <= 1
    )


def _form_d_conditions(
    g: Graph, b: HermitianMatrix, lam: EigenvalueLike, tol: float = 1e-8
) -> PredicateResult:
    """Decomposition form: deleting the off-cycle majors leaves exactly
    theta single-cycle pieces of multiplicity 2 plus paths carrying lambda."""
    from .graphs import components

    theta = cyclomatic_number(g)
    ms = major_sets(g)
    checks: dict = {
        "theta_positive": theta >= 1,
        "offcycle_majors_nonempty": len(ms.M) > 0,
    }
    cycle_reports = []
    single_major_ok = True
    for blk in blocks(g):
        if not blk.is_cycle_block:
            continue
        majors_on = [v for v in blk.vertices if g.degree(v) >= 3]
        ok = len(majors_on) == 1 and g.degree(majors_on[0]) == 3
        cycle_reports.append(
            {"cycle": list(blk.vertices), "majors": majors_on, "ok": ok}
        )
        single_major_ok = single_major_ok and ok
    checks["one_degree3_major_per_cycle"] = single_major_ok
    checks["offcycle_majors_nonadjacent"] = all(
        not g.has_edge(u, v) for u, v in combinations(ms.M, 2)
    )
    m_set = set(ms.M)
    keep = [v for v in range(g.n) if v not in m_set]
    rest, restmap = principal_submatrix(b, keep)
    pieces = []
    u_count = 0
    decomposed = True
    u_mult_ok = True
    paths_ok = True
    for comp in components(rest.pattern):
        piece, _ = principal_submatrix(rest, comp)
        parent_ids = [restmap.to_parent[v] for v in comp]
        if is_path_graph(piece.pattern):
            member = path_spectrum_membership(piece, lam, tol)
            pieces.append({"vertices": parent_ids, "kind": "path", "carries_lambda": member})
            paths_ok = paths_ok and member
        elif _class_u_member(piece.pattern):
            mu = _mult(piece, lam, tol)
            pieces.append({"vertices": parent_ids, "kind": "single-cycle", "multiplicity": mu})
            u_count += 1
            u_mult_ok = u_mult_ok and mu == 2
        else:
            pieces.append({"vertices": parent_ids, "kind": "other"})
            decomposed = False
    checks["decomposes_into_cycles_and_paths"] = decomposed
    checks["cycle_piece_count_matches_theta"] = u_count == theta
    checks["cycle_pieces_multiplicity_2"] = u_mult_ok
    checks["paths_carry_lambda"] = paths_ok
    holds = all(checks.values())
    return PredicateResult(holds, {"checks": checks, "pieces": pieces, "cycles": cycle_reports})


def unicyclic_equality_predicate(
    g: Graph, b: HermitianMatrix, lam: EigenvalueLike, tol: float = 1e-8
) -> PredicateResult:
    """Specialization of the decomposition form to exactly one cycle."""
    if not is_connected(g) or cyclomatic_number(g) != 1:
        raise NotUnicyclic("predicate needs a connected graph with exactly one cycle")
    if len(pendant_vertices(g)) < 2:
        raise NotApplicable("predicate needs at least two pendant vertices")
    if not validate_pattern(b, g):
        raise PatternMismatch("matrix is not in S(G)")
    return _form_d_conditions(g, b, lam, tol)


def _form_c_conditions(
    g: Graph, b: HermitianMatrix, lam: EigenvalueLike, is_theta: bool, m: int, tol: float = 1e-8
) -> PredicateResult:
    """Two-cycle forms: deleting any degree-2 cycle vertex next to a major
    must drop the multiplicity to 2; theta shapes additionally for every
    major. Only cycle vertices qualify: removing an interior vertex of the
    connecting path splits the graph in two, and the drop-to-2 argument
    needs the remainder connected.
    """
    x_set = set(major_sets(g).X)
    cyc = set(cycle_vertices(g))
    checks = {"multiplicity_3": m == 3}
    deletions = []
    ys = [
        v
        for v in cyc
        if g.degree(v) == 2 and any(w in x_set for w in g.adj[v])
    ]
    ys.sort()
    y_ok = True
    for y in ys:
        keep = [v for v in range(g.n) if v != y]
        sub = _sub_mult(b, keep, lam, tol)
        deletions.append({"vertex": y, "kind": "degree-2-neighbor", "multiplicity": sub})
        y_ok = y_ok and sub == 2
    checks["degree2_deletions_give_2"] = y_ok
    if is_theta:
        x_ok = True
        for x in sorted(x_set):
            keep = [v for v in range(g.n) if v != x]
            sub = _sub_mult(b, keep, lam, tol)
            deletions.append({"vertex": x, "kind": "major", "multiplicity": sub})
            x_ok = x_ok and sub == 2
        checks["major_deletions_give_2"] = x_ok
    holds = all(checks.values())
    return PredicateResult(holds, {"checks": checks, "deletions": deletions})


# ---------------------------------------------------------------------------
# Adjacency-only predicate for the cycle-plus-tail shape


def cstar_adjacency_predicate(cstar: Graph, lam: EigenvalueLike, tol: float = 1e-8) -> bool:
    """Adjacency multiplicity 2 on a cycle with one pendant tail.

    True iff the tail beyond the cycle-attached vertex is nonempty, carries
    lambda as a standalone path, and lambda doubles on the bare cycle. A
    tail of one vertex (no spare path) always fails: the empty path carries
    no eigenvalue.
    """
    if not is_connected(cstar):
        raise NotCStarShape("shape must be connected")
    fam = classify_family(cstar)
    if fam.kind != "CStarShape":
        raise NotCStarShape(f"classified as {fam.kind}")
    cyc, _anchor, tail = tadpole_parts(cstar)
    spare = tail[1:]
    if not spare:
        return False
    cyc_mult = _mult(adjacency_matrix(cycle_graph(len(cyc))), lam, tol)
    if cyc_mult != 2:
        return False
    return path_spectrum_membership(adjacency_matrix(path_graph(len(spare))), lam, tol)


# ---------------------------------------------------------------------------
# Hard-coded counterexample instances


def fixture_paw_matrix() -> HermitianMatrix:
    """Weighted triangle-plus-pendant with a doubled eigenvalue at 2."""
    rows = [
        [-10, -10, -10, 8],
        [-10, -3, -5, 0],
        [-10, -5, -3, 0],
        [8, 0, 0, 10],
    ]
    return HermitianMatrix.from_rows(rows)


def fixture_tadpole_matrix() -> HermitianMatrix:
    """Weighted triangle with a three-vertex tail, doubled eigenvalue at -9."""
    rows = [
        [0, 1, 1, 8, 0, 0],
        [1, 0, 9, 0, 0, 0],
        [1, 9, 0, 0, 0, 0],
        [8, 0, 0, 0, 4, 0],
        [0, 0, 0, 4, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ]
    return HermitianMatrix.from_rows(rows)


def weighted_counterexample_check() -> CheckReport:
    """Pinned multiplicities showing the adjacency-only shape test cannot be
    transplanted to general weighted matrices.

    The tadpole instance has full multiplicity 2 at -9 even though its tail
    path does not carry -9 (submatrix multiplicity 0), so the biconditional
    that holds for adjacency fails for this matrix.
    """
    b1 = fixture_paw_matrix()
    b2 = fixture_tadpole_matrix()
    got = (
        _mult(b1, 2),
        _sub_mult(b1, (0, 1, 2), 2),
        _mult(b2, -9),
        _sub_mult(b2, (0, 1, 2), -9),
        _sub_mult(b2, (4, 5), -9),
    )
    expected = (2, 1, 2, 1, 0)
    return CheckReport(
        "weighted-counterexample",
        got == expected,
        list(got),
        list(expected),
        {
            "paw": [list(e) for e in b1.pattern.edges],
            "tadpole": [list(e) for e in b2.pattern.edges],
        },
    )


# ---------------------------------------------------------------------------
# Classifier


def conclusion_classifier(
    g: Graph,
    b: HermitianMatrix,
    lam: EigenvalueLike,
    tol: float = 1e-8,
    multiplicity_hint: Optional[int] = None,
) -> ClassificationOutcome:
    """Classify (G, B, lambda) against the one-deficient characterization.

    The verdict is driven by the structural form tests; the direct
    multiplicity comparison is recorded alongside, and any mismatch between
    the two is logged under evidence["violations"] rather than repaired.
    multiplicity_hint lets batch sweeps that already hold the exact
    multiplicity (from a factored characteristic polynomial) skip the
    recomputation; it is trusted as-is.
    """
    if not is_connected(g):
        raise NotConnected("classifier needs a connected graph")
    if not validate_pattern(b, g):
        raise PatternMismatch("matrix is not in S(G)")
    if g.n < 2:
        raise NotApplicable("classifier needs at least two vertices")
    fam = classify_family(g)
    theta = cyclomatic_number(g)
    p = len(pendant_vertices(g))
    bound = 2 * theta + p
    if multiplicity_hint is None:
        mres = multiplicity(b, lam, tol)
        m, method = mres.multiplicity, mres.method
    else:
        m, method = int(multiplicity_hint), "precomputed"
    form = None
    cond: Optional[PredicateResult] = None
    if fam.kind in ("Path", "TreeGeneral"):
        form = "OneDeficientFormA"
        cond = tree_equality_predicate(g, b, lam, tol)
    elif fam.kind == "Cycle":
        form = "OneDeficientFormB"
        cond = PredicateResult(m == 1, {"target_multiplicity": 1, "multiplicity": m})
    elif fam.kind == "CStarShape":
        form = "OneDeficientFormB"
        cond = PredicateResult(m == 2, {"target_multiplicity": 2, "multiplicity": m})
    elif fam.kind in ("ThetaGraph", "InfinityGraph"):
        form = "OneDeficientFormC"
        cond = _form_c_conditions(g, b, lam, fam.kind == "ThetaGraph", m, tol)
    else:
        form = "OneDeficientFormD"
        cond = _form_d_conditions(g, b, lam, tol)
    if m == bound:
        verdict = "AttainsBound"
    elif m >= 1 and cond.holds:
        verdict = form
    else:
        # the characterization presupposes lambda is an eigenvalue, so m = 0
        # lands here regardless of the structural conditions
        verdict = "TwoPlusDeficient"
    violations = []
    if verdict == "AttainsBound" and not (is_cycle_graph(g) and m == 2):
        violations.append("bound attained on a non-cycle instance")
    if 1 <= m < bound and cond.holds != (m == bound - 1):
        violations.append(
            "form conditions and direct multiplicity disagree: "
            f"conditions {cond.holds}, multiplicity {m}, target {bound - 1}"
        )
    evidence = {
        "family": str(fam),
        "theta": theta,
        "pendant_count": p,
        "bound": bound,
        "multiplicity": m,
        "method": method,
        "certified": _is_certified(b, lam),
        "form": form,
        "form_conditions": cond.evidence,
        "form_holds": cond.holds,
        "consistent": not violations,
        "violations": violations,
    }
    return ClassificationOutcome(verdict, evidence)


# ---------------------------------------------------------------------------
# Relation probes

RELATIONS = (
    "interlace-v",
    "interlace-e",
    "guvh",
    "path-removal",
    "pendant-cycle",
    "theta-infty",
    "gain-cycle",
)


@dataclass(frozen=True)
class RelationProbe:
    """Selects one relation check and carries its witnesses.

    relation: one of interlace-v, interlace-e, guvh, path-removal,
    pendant-cycle, theta-infty, gain-cycle.
    """

    relation: str
    vertex: Optional[int] = None
    edge: Optional[tuple[int, int]] = None
    left_part: Optional[tuple[int, ...]] = None  # guvh: vertices of the G side
    join: Optional[tuple[int, int]] = None  # guvh: (u in left part, v in right part)
    path: Optional[tuple[int, ...]] = None
    alpha: object = None
    gains: Optional[GainGraph] = None
    tol: float = 1e-8


def _zero_edge(b: HermitianMatrix, u: int, v: int) -> HermitianMatrix:
    g2 = delete_edge(b.pattern, (u, v))
    zero = ExactComplex(0, 0) if b.is_exact else complex(0)
    rows = [list(r) for r in b.entries]
    rows[u][v] = zero
    rows[v][u] = zero
    return HermitianMatrix(b.n, tuple(tuple(r) for r in rows), g2, b.scalar)


def lemma_relation_checks(
    g: Graph, b: HermitianMatrix, lam: EigenvalueLike, probe: RelationProbe
) -> CheckReport:
    """Check one deletion/composition/gain relation on a concrete instance.

    Raises SideConditionUnmet when the relation's hypotheses do not apply to
    this instance; that is not a failed check.
    """
    rel = probe.relation
    tol = probe.tol
    inst = _instance_stub(g, lam)
    inst["relation"] = rel
    if rel == "interlace-v":
        if probe.vertex is None or not (0 <= probe.vertex < g.n):
            raise SideConditionUnmet("needs a valid vertex witness")
        m = _mult(b, lam, tol)
        keep = [v for v in range(g.n) if v != probe.vertex]
        md = _sub_mult(b, keep, lam, tol)
        inst["vertex"] = probe.vertex
        return CheckReport(rel, md - 1 <= m <= md + 1, m, md, inst)
    if rel == "interlace-e":
        if probe.edge is None:
            raise SideConditionUnmet("needs an edge witness")
        u, v = probe.edge
        if not g.has_edge(u, v):
            raise SideConditionUnmet(f"({u}, {v}) is not an edge")
        m = _mult(b, lam, tol)
        md = _mult(_zero_edge(b, u, v), lam, tol)
        inst["edge"] = [u, v]
        return CheckReport(rel, m <= md + 2, m, md, inst)
    if rel == "guvh":
        if probe.left_part is None or probe.join is None:
            raise SideConditionUnmet("needs the left part and the joining edge")
        left = tuple(sorted(probe.left_part))
        u, v = probe.join
        left_set = set(left)
        if u not in left_set or v in left_set:
            raise SideConditionUnmet("join must run from the left part to the right part")
        if not g.has_edge(u, v):
            raise SideConditionUnmet("join endpoints must be adjacent")
        crossing = [
            (a, c)
            for a, c in g.edges
            if (a in left_set) != (c in left_set)
        ]
        if crossing != [tuple(sorted((u, v)))]:
            raise SideConditionUnmet("the joining edge must be the only crossing edge")
        from .graphs import induced_subgraph

        right = [w for w in range(g.n) if w not in left_set]
        if not is_connected(induced_subgraph(g, left).child) or not is_connected(
            induced_subgraph(g, right).child
        ):
            raise SideConditionUnmet("both sides of the join must be connected")
        b_left, _ = principal_submatrix(b, left)
        if _mult(b_left, lam, tol) < 1:
            raise SideConditionUnmet("lambda must be an eigenvalue of the left part")
        left_minus_u = [w for w in left if w != u]
        if left_minus_u and _sub_mult(b, left_minus_u, lam, tol) >= 1:
            raise SideConditionUnmet("lambda must avoid the left part minus the join vertex")
        m = _mult(b, lam, tol)
        right_minus_v = [w for w in range(g.n) if w not in left_set and w != v]
        mh = _sub_mult(b, right_minus_v, lam, tol) if right_minus_v else 0
        inst["left_part"] = list(left)
        inst["join"] = [u, v]
        return CheckReport(rel, m == mh, m, mh, inst)
    if rel == "path-removal":
        if not probe.path:
            raise SideConditionUnmet("needs a path witness")
        path = tuple(probe.path)
        if len(set(path)) != len(path):
            raise SideConditionUnmet("path vertices must be distinct")
        for w in path:
            if not (0 <= w < g.n):
                raise SideConditionUnmet("path vertex out of range")
        for a, c in zip(path, path[1:]):
            if not g.has_edge(a, c):
                raise SideConditionUnmet("path vertices must be consecutively adjacent")
        cyc = cycle_vertices(g)
        if any(w in cyc for w in path):
            raise SideConditionUnmet("path must avoid all cycle vertices")
        m = _mult(b, lam, tol)
        keep = [v for v in range(g.n) if v not in set(path)]
        md = _sub_mult(b, keep, lam, tol) if keep else 0
        inst["path"] = list(path)
        return CheckReport(rel, md >= m - 1, m, md, inst)
    if rel == "pendant-cycle":
        if probe.vertex is None:
            raise SideConditionUnmet("needs the degree-2 cycle vertex witness")
        x = probe.vertex
        if not is_connected(g) or is_cycle_graph(g):
            raise SideConditionUnmet("needs a connected non-cycle graph")
        cyc = cycle_vertices(g)
        majors = set(major_sets(g).X)
        if x not in cyc or g.degree(x) != 2:
            raise SideConditionUnmet("witness must be a degree-2 cycle vertex")
        if not any(w in majors and w in cyc for w in g.adj[x]):
            raise SideConditionUnmet("witness must be adjacent to a major cycle vertex")
        m = _mult(b, lam, tol)
        if m != structural_bound(g) - 1:
            raise SideConditionUnmet("graph must be exactly one below the bound")
        keep = [v for v in range(g.n) if v != x]
        sub, submap = principal_submatrix(b, keep)
        md = _mult(sub, lam, tol)
        drop_ok = m == md + 1
        still_deficient = md == structural_bound(sub.pattern) - 1
        inst["vertex"] = x
        inst["still_one_deficient"] = still_deficient
        return CheckReport(rel, drop_ok and still_deficient, m, md, inst)
    if rel == "theta-infty":
        fam = classify_family(g) if is_connected(g) else None
        if fam is None or fam.kind not in ("ThetaGraph", "InfinityGraph"):
            raise SideConditionUnmet("needs a two-cycle shape")
        m = _mult(b, lam, tol)
        if m != structural_bound(g) - 1:
            raise SideConditionUnmet("graph must be exactly one below the bound")
        cond = _form_c_conditions(g, b, lam, fam.kind == "ThetaGraph", m, tol)
        inst["deletions"] = cond.evidence["deletions"]
        return CheckReport(rel, cond.holds, m, 3, inst)
    if rel == "gain-cycle":
        return _gain_cycle_check(g, lam, probe, inst)
    raise SideConditionUnmet(f"unknown relation {rel!r}")


def _affine_minpoly(mu: IntPolynomial, shift: Fraction, scale: Fraction) -> IntPolynomial:
    """Minimal polynomial of shift + scale*t given the one of t (primitive)."""
    deg = mu.degree
    # chi(x) = scale^deg * mu((x - shift)/scale), expanded exactly
    acc = [Fraction(0)] * (deg + 1)
    base = [Fraction(1)]
    for j in range(deg + 1):
        cj = Fraction(mu.coeffs[j]) * scale ** (deg - j)
        for k, c in enumerate(base):
            acc[k] += cj * c
        nxt = [Fraction(0)] * (len(base) + 1)
        for k, c in enumerate(base):
            nxt[k] += -shift * c
            nxt[k + 1] += c
        base = nxt
    return IntPolynomial(poly_primitive_int(acc))


def _gain_cycle_check(g: Graph, lam: EigenvalueLike, probe: RelationProbe, inst: dict) -> CheckReport:
    if probe.gains is None or probe.alpha is None:
        raise SideConditionUnmet("needs gains and alpha")
    if not is_cycle_graph(g):
        raise SideConditionUnmet("needs a cycle base graph")
    phi = probe.gains
    if phi.base != g:
        raise SideConditionUnmet("gain graph must live on the given cycle")
    tol = probe.tol
    exact_gain = all(isinstance(x, ExactComplex) for x in phi.gains)
    alpha = probe.alpha
    exact_mode = exact_gain and not isinstance(alpha, float)
    mat = a_alpha_gain(phi, alpha, scalar="exact" if exact_mode else "approx")
    m = _mult(mat, lam, tol)
    gain = cycle_gain(phi).value
    if isinstance(gain, ExactComplex):
        rho_zero = gain == ExactComplex(1, 0)
        rho_pi = gain == ExactComplex(-1, 0)
    else:
        rho_zero = abs(gain - 1) <= tol
        rho_pi = abs(gain + 1) <= tol
    n = g.n
    matched = None
    if rho_zero or rho_pi:
        matched = _match_gain_eigenvalue(n, alpha, lam, rho_pi, tol, exact_mode)
    equality_side = (rho_zero or rho_pi) and matched is not None
    holds = m <= 2 and ((m == 2) == equality_side)
    inst["alpha"] = str(alpha)
    inst["gain_rho_zero"] = rho_zero
    inst["gain_rho_pi"] = rho_pi
    inst["matched_index"] = matched
    return CheckReport("gain-cycle", holds, m, 2, inst)


def _match_gain_eigenvalue(n, alpha, lam, rho_pi, tol, exact_mode):
    """Index j whose closed-form doubled eigenvalue equals lambda, if any.

    Gain 1: lambda = 2a + (1-a) * 2cos(2j*pi/n), j = 1..ceil(n/2)-1.
    Gain -1: lambda = 2a + (1-a) * 2cos((2j+1)*pi/n), j = 0..floor(n/2)-1.
    """
    import math

    if rho_pi:
        js = range(0, n // 2)
    else:
        js = range(1, (n + 1) // 2)
    if exact_mode:
        a = Fraction(alpha)
        for j in js:
            if rho_pi:
                mu = min_poly_2cos(2 * n, 2 * j + 1)
            else:
                mu = min_poly_2cos(n, j)
            target = _affine_minpoly(mu, 2 * a, 1 - a)
            if isinstance(lam, AlgebraicEigenvalue):
                lam_min = IntPolynomial(poly_primitive_int(lam.minpoly.coeffs))
                if lam_min.coeffs == target.coeffs:
                    return j
            elif isinstance(lam, (int, Fraction)):
                if target.degree == 1 and target.eval(Fraction(lam)) == 0:
                    return j
        return None
    a_f = float(alpha)
    lam_f = eigenvalue_float(lam)
    for j in js:
        ang = (2 * j + 1) * math.pi / n if rho_pi else 2 * j * math.pi / n
        val = 2 * a_f + 2 * (1 - a_f) * math.cos(ang)
        if abs(val - lam_f) <= max(tol, 1e-9):
            return j
    return None
