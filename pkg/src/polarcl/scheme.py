"""The association scheme of the dual polar graph, materialised.

A SchemeContext holds, for an enumerated polar space with generator set
Omega (canonical order):

    dist            the distance oracle d - dim_vec(pi ^ pi')
    A[i]            0/1 adjacency of the i-th distance relation, as bitmask rows
    K = A[d]        the disjointness relation
    C[k]            incidence of (k-1)-spaces with generators
    B               hyperbolic classes x generators (type III only)
    P               the exact eigenvalue table of the scheme

Eigenspace membership is decided by annihilator polynomials in A_1: the
eigenvalues P_{j,1} are pairwise distinct, so each factor (A_1 - P_{j,1} I)
kills V_j and acts invertibly elsewhere, and v lies in the orthogonal sum
of the V_j over j in S exactly when the product over S annihilates v.
Image membership for an incidence matrix M is rank-based: v in im(M^t)
iff stacking v onto the rows of M does not raise the rank, computed by
fraction-free integer elimination.  No floating point anywhere.
"""

from __future__ import annotations

from .counting import EigenvalueTable, parameter_b, parameter_c
from .enumeration import PolarSpace
from .linalg import IntEchelon, scale_to_int


class SchemeError(RuntimeError):
    pass


_INTERNAL_REPS: dict = {}


def _internal_reps(d: int, k: int, gf):
    """All k x d reduced-echelon matrices over GF(q): one per k-subspace."""
    key = (d, k, gf.q)
    if key in _INTERNAL_REPS:
        return _INTERNAL_REPS[key]
    from itertools import combinations, product
    reps = []
    for pivots in combinations(range(d), k):
        free_cols = [c for c in range(d)
                     if c not in pivots]
        # free entries sit right of their row's pivot, outside pivot columns
        slots = [(r, c) for r in range(k) for c in free_cols if c > pivots[r]]
        for vals in product(range(gf.q), repeat=len(slots)):
            m = [[0] * d for _ in range(k)]
            for r, p in enumerate(pivots):
                m[r][p] = 1
            for (r, c), v in zip(slots, vals):
                m[r][c] = v
            reps.append(tuple(tuple(r) for r in m))
    _INTERNAL_REPS[key] = reps
    return reps


def _bits(m):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


class SchemeContext:
    def __init__(self, space: PolarSpace):
        self.space = space
        self.d = space.d
        self.n = space.n_generators
        desc = space.desc
        self.table = EigenvalueTable(desc.rank, desc.e, desc.q)
        self.P = self.table.P
        self.dist = self._distances()
        self.A = self._distance_masks()
        self.K = self.A[self.d]
        self._neighbors = [list(_bits(m)) for m in self.A[1]]
        self._C = {}
        self._B = None
        self._image_bases = {}
        self._eigenbases = None

    # -- relations ---------------------------------------------------------

    def _distances(self):
        sp = self.space
        n = self.n
        dist = [[0] * n for _ in range(n)]
        for i in range(n):
            row = dist[i]
            for j in range(i + 1, n):
                dij = sp.distance(i, j)
                row[j] = dij
                dist[j][i] = dij
        return dist

    def _distance_masks(self):
        n = self.n
        A = [[0] * n for _ in range(self.d + 1)]
        for i in range(n):
            di = self.dist[i]
            for j in range(n):
                A[di[j]][i] |= 1 << j
        return A

    def incidence(self, k: int):
        """C_k rows: for every (k-1)-space, the bitmask of generators on it."""
        if k not in self._C:
            sp = self.space
            index = {s: i for i, s in enumerate(sp.levels[k])}
            rows = [0] * len(index)
            for g, grows in enumerate(sp.generators):
                if k == self.d:
                    rows[index[grows]] |= 1 << g
                    continue
                for s in self._subspaces_inside(g, k):
                    rows[index[s]] |= 1 << g
            self._C[k] = rows
        return self._C[k]

    def _subspaces_inside(self, g: int, k: int):
        """All canonical k-dim subspaces of generator g.

        Every k-subspace is the row space of (coeffs @ generator rows) for
        exactly one internal k x d echelon representative, enumerated once
        per (d, k, q) and shared across generators.
        """
        from .geometry import gf_rref
        sp = self.space
        gf = sp.gf
        grows = sp.generators[g]
        out = []
        for coef in _internal_reps(self.d, k, gf):
            rows = []
            for crow in coef:
                v = [0] * len(grows[0])
                for c, grow in zip(crow, grows):
                    if c:
                        v = [gf.add(a, gf.mul(c, b)) for a, b in zip(v, grow)]
                rows.append(tuple(v))
            out.append(gf_rref(rows, gf)[0])
        return out

    def build_B(self):
        """Incidence of hyperbolic classes with generators (type III)."""
        if self._B is None:
            self._B = list(self.space.hyperbolic_classes())
        return self._B

    def verify_BtB(self, sample=None):
        """(B^t B)_{uv} = q^{d-i} at even distance i, 0 at odd distance.

        The entry counts hyperbolic classes through both generators; at
        odd distance the intersection dimension has the wrong parity for
        the two generators to share a section class, so those terms
        vanish.  Returns None or the first violating pair.
        """
        B = self.build_B()
        q, d = self.space.desc.q, self.d
        n = self.n
        pairs = sample if sample is not None else [
            (u, v) for u in range(n) for v in range(u, n)]
        for u, v in pairs:
            i = self.dist[u][v]
            expect = q ** (d - i) if i % 2 == 0 else 0
            got = sum(1 for m in B if (m >> u) & 1 and (m >> v) & 1)
            if got != expect:
                return (u, v, i, got, expect)
        return None

    # -- verification ------------------------------------------------------

    def verify_distance_regularity(self, pairs=None):
        """Empirical b_i, c_i over all pairs vs the closed forms.

        Returns (params, None) on success or (None, witness) with the
        first violating pair.
        """
        d, q, e = self.d, self.space.desc.q, self.space.desc.e
        b = [parameter_b(d, e, q, i) for i in range(d)]
        c = [parameter_c(d, e, q, i) for i in range(1, d + 1)]
        n = self.n
        it = pairs if pairs is not None else (
            (u, v) for u in range(n) for v in range(u, n))
        for u, v in it:
            i = self.dist[u][v]
            nb = self.A[1][u]
            if i < d:
                got_b = (nb & self.A[i + 1][v]).bit_count()
                if got_b != b[i]:
                    return None, (u, v, "b", i, got_b, b[i])
            if i >= 1:
                got_c = (nb & self.A[i - 1][v]).bit_count()
                if got_c != c[i - 1]:
                    return None, (u, v, "c", i, got_c, c[i - 1])
        return {"b": b, "c": c}, None

    def verify_intersection_numbers(self, sample=None):
        """A_i A_j = sum_k p^k_{ij} A_k, checked entrywise by counting."""
        from .counting import intersection_numbers
        d = self.d
        p = intersection_numbers(d, self.space.desc.e, self.space.desc.q)
        n = self.n
        pairs = sample if sample is not None else [
            (u, v) for u in range(n) for v in range(u, n)]
        for u, v in pairs:
            k = self.dist[u][v]
            for i in range(d + 1):
                Aiu = self.A[i][u]
                for j in range(d + 1):
                    got = (Aiu & self.A[j][v]).bit_count()
                    if got != p[i][j][k]:
                        return (u, v, i, j, got, p[i][j][k])
        return None

    # -- eigenspace machinery ------------------------------------------------

    def matvec_A1(self, v):
        return [sum(v[j] for j in self._neighbors[i]) for i in range(self.n)]

    def matvec_mask(self, masks, v):
        out = []
        for m in masks:
            acc = 0
            for j in _bits(m):
                acc += v[j]
            out.append(acc)
        return out

    def annihilate(self, v, js):
        """Apply prod_{j in js} (A_1 - P_{j,1} I) to v (integer vector)."""
        for j in js:
            lam = self.P[j][1]
            av = self.matvec_A1(v)
            v = [a - lam * x for a, x in zip(av, v)]
        return v

    def eigenspace_membership(self, v, S) -> bool:
        """v in the orthogonal sum of V_j, j in S (exact).

        The factor (A_1 - P_{j,1} I) kills the V_j component and scales
        every other one (the P_{j,1} are pairwise distinct), so applying
        the product over j in S leaves exactly the components outside S.
        """
        v = scale_to_int(v)
        out = self.annihilate(v, sorted(S))
        return not any(out)

    def orthogonal_to(self, v, j) -> bool:
        """v orthogonal to V_j, i.e. the V_j component of v vanishes."""
        v = scale_to_int(v)
        out = self.annihilate(v, [l for l in range(self.d + 1) if l != j])
        return not any(out)

    # -- image membership ------------------------------------------------------

    def _echelon_from_masks(self, masks) -> IntEchelon:
        ech = IntEchelon(self.n)
        for m in masks:
            ech.add([(m >> j) & 1 for j in range(self.n)])
        return ech

    def image_basis(self, which: str) -> IntEchelon:
        """Echelon basis of im(M^t) for M = A (points) or B (hyperbolic classes)."""
        if which not in self._image_bases:
            if which == "A":
                masks = self.space.point_gen_masks()
            elif which == "B":
                masks = self.build_B()
            else:
                raise SchemeError(f"unknown incidence matrix {which!r}")
            self._image_bases[which] = self._echelon_from_masks(masks)
        return self._image_bases[which]

    def image_membership(self, v, which: str) -> bool:
        return self.image_basis(which).contains(scale_to_int(v))

    def rank_of_incidence(self, k: int) -> int:
        ech = self._echelon_from_masks(self.incidence(k))
        return ech.rank

    # -- eigenspace bases (via the incidence matrices) ---------------------------

    def eigenspace_bases(self):
        """Integer bases of every V_j, constructed from the C_k incidences.

        V_0 is spanned by the all-ones vector; for j >= 1 rows of C_j are
        projected onto V_j by the annihilator product over all other
        eigenvalues (a scalar multiple of the minimal idempotent E_j).
        im(C_j^t) = V_0 + ... + V_j makes those projections span V_j; the
        dimension count sum_j dim V_j = |Omega| certifies completeness.
        Each basis vector is certified by exact eigenvector checks.
        """
        if self._eigenbases is not None:
            return self._eigenbases
        d, n = self.d, self.n
        bases = {0: [[1] * n]}
        dims_hint = {j: self.table.multiplicity(j) for j in range(d + 1)}
        for j in range(1, d + 1):
            others = [l for l in range(d + 1) if l != j]
            ech = IntEchelon(n)
            basis = []
            for m in self.incidence(j):
                row = [(m >> t) & 1 for t in range(n)]
                w = self.annihilate(row, others)
                if any(w) and ech.add(w):
                    basis.append(w)
                if ech.rank == dims_hint[j]:
                    break
            bases[j] = basis
        total = sum(len(b) for b in bases.values())
        if total != n:
            raise SchemeError(
                f"eigenspace dimensions sum to {total}, expected {n}")
        for j in range(1, d + 1):
            lam = self.P[j][1]
            for w in bases[j]:
                av = self.matvec_A1(w)
                if av != [lam * x for x in w]:
                    raise SchemeError(f"basis vector of V_{j} fails A_1 eigencheck")
        self._eigenbases = bases
        return bases

    # -- restricted scheme on one class of a hyperbolic quadric -----------------

    def restricted(self, label: str) -> "RestrictedScheme":
        return RestrictedScheme(self, label)


class RestrictedScheme:
    """The floor(d/2)-class scheme on one generator class of Q+(2d-1,q).

    A'_i is A_{2i} restricted to the class; the eigenvalue of A'_i on the
    restricted eigenspace V'_j is P_{j,2i}.  Membership tests use the
    annihilator in A'_1 when the restricted eigenvalues P_{j,2} are
    pairwise distinct and fall back to a separating integer combination
    of all the A'_i otherwise.
    """

    def __init__(self, ctx: SchemeContext, label: str):
        sp = ctx.space
        if sp.class_labels is None:
            raise SchemeError("restricted scheme needs a hyperbolic quadric")
        if sp.d % 2 != 0:
            raise SchemeError("restricted class scheme needs even rank")
        self.ctx = ctx
        self.label = label
        self.members = sp.class_members(label)
        self.pos = {g: t for t, g in enumerate(self.members)}
        self.m = len(self.members)
        self.half = sp.d // 2
        self.A = []
        for i in range(self.half + 1):
            full = ctx.A[2 * i]
            rows = []
            for g in self.members:
                mask = 0
                fm = full[g]
                for t, h in enumerate(self.members):
                    if (fm >> h) & 1:
                        mask |= 1 << t
                rows.append(mask)
            self.A.append(rows)
        self.K = self.A[self.half]
        self.P = [[ctx.P[j][2 * i] for i in range(self.half + 1)]
                  for j in range(self.half + 1)]
        col1 = [row[1] for row in self.P]
        self._distinct = len(set(col1)) == self.half + 1
        self._sep = self._separating_combination()
        self._image_basis_cache = None

    def _separating_combination(self):
        """Integer weights c with sum_i c_i P'_{j,i} pairwise distinct in j."""
        for t in range(1, 100):
            weights = [t ** i for i in range(self.half + 1)]
            vals = [sum(w * p for w, p in zip(weights, row)) for row in self.P]
            if len(set(vals)) == self.half + 1:
                return weights, vals
        raise SchemeError("no separating combination found")  # unreachable

    def matvec(self, i: int, v):
        out = []
        for mrow in self.A[i]:
            acc = 0
            for j in _bits(mrow):
                acc += v[j]
            out.append(acc)
        return out

    def eigenspace_membership(self, v, S) -> bool:
        v = scale_to_int(v)
        if self._distinct:
            for j in sorted(S):
                lam = self.P[j][1]
                av = self.matvec(1, v)
                v = [a - lam * x for a, x in zip(av, v)]
        else:
            weights, vals = self._sep
            for j in sorted(S):
                mv = [0] * self.m
                for i, w in enumerate(weights):
                    if w:
                        av = self.matvec(i, v)
                        mv = [acc + w * a for acc, a in zip(mv, av)]
                v = [a - vals[j] * x for a, x in zip(mv, v)]
        return not any(v)

    def image_basis(self) -> IntEchelon:
        """Echelon basis of im(A'^t), A' = points x class-generators."""
        if self._image_basis_cache is None:
            sp = self.ctx.space
            ech = IntEchelon(self.m)
            for pmask in sp.point_gen_masks():
                row = [(pmask >> g) & 1 for g in self.members]
                ech.add(row)
            self._image_basis_cache = ech
        return self._image_basis_cache

    def image_membership(self, v) -> bool:
        return self.image_basis().contains(scale_to_int(v))
