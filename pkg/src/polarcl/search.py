"""Exhaustive backtracking searches: spreads, regular systems, tight sets,
and small-parameter Cameron-Liebler classification.

Every search returns a SearchResult carrying machine-checkable
certificates (the sets themselves, re-verified before being reported),
a completeness flag, and the node count.  Node budgets come from the
caller or the POLARCL_BUDGET_NODES environment variable; exceeding one
truncates the result and clears the exhaustive flag, it never raises.

Spread search is exact cover over the point-generator incidence with the
usual lowest-branching-column heuristic; every solution is reached along
exactly one branch, so no symmetry anchor is needed.  Tight-set and CL
searches run over a fixed processing order with in/out decisions and
exact residual-count pruning: each constrained object (a point of the GQ,
a generator of the polar space) must finish with an exact target count,
so a branch dies as soon as a count overshoots or cannot be reached with
what remains.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .clsets import GenSet, check_cl, get_context, is_regular_system
from .counting import regular_system_size
from .gq import GQ, classify_tight_set, tight_set_test
from .scheme import _bits

DEFAULT_NODE_BUDGET = 50_000_000


def node_budget(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("POLARCL_BUDGET_NODES")
    return int(env) if env else DEFAULT_NODE_BUDGET


@dataclass
class SearchResult:
    kind: str
    solutions: list = field(default_factory=list)
    exhaustive: bool = True
    nodes: int = 0
    meta: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "kind": self.kind,
            "count": len(self.solutions),
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
            "solutions": [sorted(_bits(m)) if isinstance(m, int) else m
                          for m in self.solutions],
            **self.meta,
        }


# -- spreads and regular systems -----------------------------------------------


def find_regular_systems(space, m: int, eigenspaces=None, budget=None,
                         max_solutions=None) -> SearchResult:
    """All m-regular systems, optionally filtered to chi in sum_{j in S} V_j.

    In/out decisions over the generators in index order, with exact
    residual pruning per point: counts never exceed m, and a point whose
    count plus remaining coverage falls short of m kills the branch.
    Every solution is re-verified by the dual regular-system check.
    """
    ctx = get_context(space)
    kind = f"regular_system(m={m})"
    if m == 0:
        return SearchResult(kind, [0], True, 1)
    limit = node_budget(budget)
    target_size = regular_system_size(space.d, space.desc.e, space.desc.q, m)
    point_rows = space.point_gen_masks()
    npts = len(space.points)
    gen_pts = space.gen_point_masks
    n = space.n_generators
    res = SearchResult(kind)
    counts = [0] * npts
    chosen: list[int] = []

    def rec(k: int):
        res.nodes += 1
        if res.nodes > limit or (max_solutions is not None
                                 and len(res.solutions) >= max_solutions):
            res.exhaustive = False
            return
        size = len(chosen)
        if size > target_size or size + (n - k) < target_size:
            return
        for p in range(npts):
            c = counts[p]
            if c > m or c + (point_rows[p] >> k).bit_count() < m:
                return
        if k == n:
            mask = sum(1 << g for g in chosen)
            gs = GenSet(ctx, mask)
            assert is_regular_system(gs, m)
            if eigenspaces is None or ctx.scheme.eigenspace_membership(
                    gs.chi(), set(eigenspaces) | {0}):
                res.solutions.append(mask)
            return
        pm = gen_pts[k]
        if all(counts[p] < m for p in _bits(pm)):
            chosen.append(k)
            for p in _bits(pm):
                counts[p] += 1
            rec(k + 1)
            chosen.pop()
            for p in _bits(pm):
                counts[p] -= 1
            if not res.exhaustive:
                return
        rec(k + 1)

    rec(0)
    res.solutions.sort()
    return res


def find_spreads(space, budget=None, max_solutions=None,
                 containing=()) -> SearchResult:
    """All spreads (1-regular systems), by exact cover.

    Branches on the uncovered point with the fewest available generators
    (column-min heuristic); a fixed branching point per node means every
    partition is produced exactly once.  `containing` pre-selects
    pairwise disjoint generators that every reported spread must extend.
    """
    ctx = get_context(space)
    limit = node_budget(budget)
    point_rows = space.point_gen_masks()
    npts = len(space.points)
    gen_pts = space.gen_point_masks
    res = SearchResult("spread")
    all_pts = (1 << npts) - 1
    avail_all = (1 << space.n_generators) - 1
    pre_covered = 0
    for g in containing:
        if gen_pts[g] & pre_covered:
            raise ValueError("preselected generators are not pairwise disjoint")
        pre_covered |= gen_pts[g]
        for p in _bits(gen_pts[g]):
            avail_all &= ~point_rows[p]

    def rec(covered: int, avail: int, chosen: list[int]):
        res.nodes += 1
        if res.nodes > limit:
            res.exhaustive = False
            return
        if max_solutions is not None and len(res.solutions) >= max_solutions:
            res.exhaustive = False
            return
        if covered == all_pts:
            mask = sum(1 << g for g in chosen)
            gs = GenSet(ctx, mask)
            assert is_regular_system(gs, 1)
            res.solutions.append(mask)
            return
        best = None
        for p in range(npts):
            if (covered >> p) & 1:
                continue
            cand = point_rows[p] & avail
            cnt = cand.bit_count()
            if cnt == 0:
                return
            if best is None or cnt < best[1]:
                best = (cand, cnt)
                if cnt == 1:
                    break
        cand = best[0]
        for g in _bits(cand):
            pm = gen_pts[g]
            new_avail = avail
            for p in _bits(pm):
                new_avail &= ~point_rows[p]
            chosen.append(g)
            rec(covered | pm, new_avail, chosen)
            chosen.pop()
            if not res.exhaustive:
                return

    rec(pre_covered, avail_all, list(containing))
    res.solutions.sort()
    return res


# -- tight sets -------------------------------------------------------------------


def find_tight_sets(gq: GQ, x_max: int, budget=None) -> SearchResult:
    """All i-tight sets with 1 <= i <= x_max, classified.

    One pass per parameter i: points are decided in index order; every
    decided point must end with |P^perp ^ T| exactly s+i (members) or i
    (others).  Counts only grow, so overshoot prunes immediately and a
    reachability bound prunes starved points.  Lines accumulating more
    than i points force total containment, the containment bound of
    tight-set theory.
    """
    limit = node_budget(budget)
    res = SearchResult("tight_set", meta={"by_parameter": {}})
    n = gq.n_points
    for i in range(1, x_max + 1):
        target_size = i * (gq.s + 1)
        found = []
        counts = [0] * n  # |P^perp ^ T| so far
        in_mask = 0

        def undecided_future(p: int, k: int) -> int:
            return (gq.perp[p] >> k).bit_count() if k < n else 0

        def feasible(k: int) -> bool:
            for p in range(n):
                c = counts[p]
                cap = gq.s + i if (in_mask >> p) & 1 else i
                if p < k:
                    if c > cap:
                        return False
                    if c + undecided_future(p, k) < cap:
                        return False
                else:
                    if c > gq.s + i:
                        return False
            return True

        def rec(k: int, size: int):
            nonlocal in_mask
            res.nodes += 1
            if res.nodes > limit:
                res.exhaustive = False
                return
            if size > target_size or size + (n - k) < target_size:
                return
            if k == n:
                if size == target_size:
                    ok, got_i, _ = tight_set_test(gq, in_mask)
                    assert ok and got_i == i
                    found.append(in_mask)
                return
            if not feasible(k):
                return
            # include k
            in_mask |= 1 << k
            for p in _bits(gq.perp[k]):
                counts[p] += 1
            rec(k + 1, size + 1)
            in_mask &= ~(1 << k)
            for p in _bits(gq.perp[k]):
                counts[p] -= 1
            if not res.exhaustive:
                return
            # exclude k: final count for k must be exactly i
            if counts[k] <= i:
                rec(k + 1, size)

        rec(0, 0)
        found.sort()
        res.meta["by_parameter"][i] = [
            {"points": sorted(_bits(m)), "label": classify_tight_set(gq, m, i)}
            for m in found]
        res.solutions.extend(found)
    return res


# -- Cameron-Liebler searches -------------------------------------------------------


def find_cl_parameter1(space, class_label: str | None = None,
                       budget=None) -> SearchResult:
    """All parameter-1 Cameron-Liebler sets, by clique search.

    A parameter-1 set is pairwise intersecting of pencil size, so the
    candidates are the cliques of that size in the meeting graph; each
    candidate is then certified by the full CL battery.
    """
    ctx = get_context(space)
    limit = node_budget(budget)
    if class_label is None:
        universe = list(range(ctx.n))
        target = ctx.pencil
    else:
        universe = space.class_members(class_label)
        target = ctx.class_pencil()
    nu = len(universe)
    meets = [0] * nu
    for a in range(nu):
        ga = universe[a]
        for b in range(nu):
            if a != b and space.intersection_vdim(ga, universe[b]) > 0:
                meets[a] |= 1 << b
    res = SearchResult("cl_parameter1")
    clique: list[int] = []

    def rec(cand: int, start: int):
        res.nodes += 1
        if res.nodes > limit:
            res.exhaustive = False
            return
        if len(clique) == target:
            mask = sum(1 << universe[t] for t in clique)
            gs = GenSet(ctx, mask, class_label)
            rep = check_cl(gs)
            if rep.is_cl:
                assert gs.x == 1
                res.solutions.append(mask)
            return
        if len(clique) + cand.bit_count() < target:
            return
        m = cand & ~((1 << start) - 1)
        while m:
            low = m & -m
            t = low.bit_length() - 1
            m ^= low
            if len(clique) + (cand >> t).bit_count() < target:
                return
            clique.append(t)
            rec(cand & meets[t], t + 1)
            clique.pop()
            if not res.exhaustive:
                return

    rec((1 << nu) - 1, 0)
    res.solutions.sort()
    return res


def find_cl_bounded(space, x_max: int, budget=None) -> SearchResult:
    """All Cameron-Liebler sets with parameter 1 <= x <= x_max.

    One pass per x, in/out decisions over the generators in index order.
    The residual constraints come from the disjointness counts (a member
    finishes with exactly (x-1) D chosen disjoint generators, a
    non-member with x D); on type I spaces the whole intersection
    distribution is forced, so every distance class i >= 1 prunes with
    its own exact target.  Every completed candidate is re-verified by
    the full battery before being reported.
    """
    from .clsets import expected_profile_type_I
    ctx = get_context(space)
    limit = node_budget(budget)
    n = ctx.n
    d = ctx.d
    A = ctx.scheme.A
    res = SearchResult("cl_bounded", meta={"by_parameter": {}})
    for x in range(1, x_max + 1):
        target_size = x * ctx.pencil
        if ctx.type == "I":
            rels = list(range(1, d + 1))
            mem_t = expected_profile_type_I(d, ctx.e, ctx.q, x, True)
            out_t = expected_profile_type_I(d, ctx.e, ctx.q, x, False)
        else:
            rels = [d]
            mem_t = {d: (x - 1) * ctx.disjointness}
            out_t = {d: x * ctx.disjointness}
        out_caps = [max(mem_t[i], out_t[i]) for i in rels] if ctx.type == "I" \
            else [max(mem_t[d], out_t[d])]
        found = []
        counts = [[0] * n for _ in range(d + 1)]
        in_mask = 0

        def rec(k: int, size: int):
            nonlocal in_mask
            res.nodes += 1
            if res.nodes > limit:
                res.exhaustive = False
                return
            if size > target_size or size + (n - k) < target_size:
                return
            for p in range(n):
                member = (in_mask >> p) & 1
                for t, i in enumerate(rels):
                    c = counts[i][p]
                    if p < k:
                        cap = mem_t[i] if member else out_t[i]
                        if c > cap or c + (A[i][p] >> k).bit_count() < cap:
                            return
                    elif c > out_caps[t]:
                        return
            if k == n:
                if size == target_size:
                    gs = GenSet(ctx, in_mask)
                    rep = check_cl(gs)
                    if rep.is_cl:
                        found.append(in_mask)
                return
            in_mask |= 1 << k
            for i in rels:
                for p in _bits(A[i][k]):
                    counts[i][p] += 1
            rec(k + 1, size + 1)
            in_mask &= ~(1 << k)
            for i in rels:
                for p in _bits(A[i][k]):
                    counts[i][p] -= 1
            if not res.exhaustive:
                return
            if all(counts[i][k] <= out_t[i] for i in rels):
                rec(k + 1, size)

        rec(0, 0)
        found.sort()
        res.meta["by_parameter"][x] = found
        res.solutions.extend(found)
    return res


def max_disjoint_in(gs: GenSet) -> int:
    """Largest pairwise-disjoint subfamily of the set (exact clique size)."""
    members = gs.members()
    nu = len(members)
    disj = [0] * nu
    K = gs.ctx.scheme.K
    for a in range(nu):
        for b in range(nu):
            if a != b and (K[members[a]] >> members[b]) & 1:
                disj[a] |= 1 << b
    best = 0

    def rec(cand: int, size: int):
        nonlocal best
        best = max(best, size)
        m = cand
        while m:
            low = m & -m
            t = low.bit_length() - 1
            m ^= low
            if size + 1 + (disj[t] & m).bit_count() <= best:
                continue
            rec(cand & disj[t] & ~((1 << (t + 1)) - 1), size + 1)

    rec((1 << nu) - 1, 0)
    return best


# -- classification labels ----------------------------------------------------------


def classify_parameter1(space, mask: int, class_label=None) -> str:
    """Name a parameter-1 CL set: pencil, hyperbolic class, base-plane,
    base-solid, or other."""
    ctx = get_context(space)
    members = list(_bits(mask))
    common = space.gen_point_masks[members[0]]
    for g in members[1:]:
        common &= space.gen_point_masks[g]
        if not common:
            break
    if common:
        for p in _bits(common):
            pm = space.point_gen_masks()[p]
            if class_label is not None:
                pm &= space.class_mask(class_label)
            if pm == mask:
                return "point-pencil"
    desc = space.desc
    if class_label is None and space_type_is_III(space):
        if mask in set(space.hyperbolic_classes()):
            return "hyperbolic-class"
        if desc.rank == 3:
            for pi in members:
                if all(space.intersection_vdim(pi, g) >= 2 for g in members):
                    from .clsets import construct_base_plane
                    if construct_base_plane(ctx, pi).mask == mask:
                        return "base-plane"
    if class_label is not None and desc.family == "Q+" and desc.rank == 4:
        other = "greek" if class_label == "latin" else "latin"
        for center in space.class_members(other):
            if all(space.intersection_vdim(center, g) == 3 for g in members):
                from .clsets import construct_base_solid
                if construct_base_solid(ctx, center, class_label).mask == mask:
                    return "base-solid"
    return "other"


def space_type_is_III(space) -> bool:
    from .clsets import space_type
    return space_type(space.desc) == "III"


def union_of_pencils_decomposition(space, mask: int):
    """Vertices of a disjoint pencil decomposition with pairwise
    non-collinear vertices, or None.

    Backtracks over candidate vertices (points whose full pencil lies in
    the remaining set), so a misleading first pick cannot hide a valid
    decomposition.
    """
    rows = space.point_gen_masks()

    def rec(rest: int, vertices: tuple):
        if rest == 0:
            return list(vertices)
        g = (rest & -rest).bit_length() - 1
        for p in _bits(space.gen_point_masks[g]):
            row = rows[p]
            if row & ~rest:
                continue
            out = rec(rest & ~row, vertices + (p,))
            if out is not None:
                return out
        return None

    vertices = rec(mask, ())
    if vertices is None:
        return None
    for a in range(len(vertices)):
        for b in range(a + 1, len(vertices)):
            pa, pb = vertices[a], vertices[b]
            if space.form.pair(space.points[pa], space.points[pb]) == 0:
                return None
    return vertices
