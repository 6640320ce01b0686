"""Finite limits and colimits of chain complexes, plus factorization gadgets.

Kernels and cokernels are computed degreewise; quotient bases are chosen
deterministically by completing the image basis with elimination-pivot
coordinate vectors.  Pushouts are cokernels of difference maps and pullbacks
are kernels, each carrying their structure maps.  Mediating maps always come
from linear solves followed by an exact verification, so a universal property
is certified every time it is used.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import Matrix, complete_to_basis, image_basis, inverse, is_invertible, kernel_basis, solve
from .complexes import (
    ChainComplex,
    ChainMap,
    InvalidMap,
    add_maps,
    chain_complex,
    chain_map,
    compose,
    identity_map,
    scale_map,
    tensor_complex,
    zero_complex,
)


class MediatingError(ValueError):
    """A map required by a universal property does not exist or is not unique."""


# ---------------------------------------------------------------------------
# Biproducts


@dataclass(frozen=True)
class Biproduct:
    total: ChainComplex
    incls: tuple[ChainMap, ...]
    projs: tuple[ChainMap, ...]


def biproduct(parts: list[ChainComplex]) -> Biproduct:
    """Degreewise direct sum with the summand bases concatenated in order."""
    if not parts:
        raise ValueError("biproduct of no complexes")
    field = parts[0].field
    los = [c.lo for c in parts]
    his = [c.hi for c in parts]
    dims: dict[int, int] = {}
    for n in range(min(los), max(his) + 1):
        total = sum(c.dim(n) for c in parts)
        if total:
            dims[n] = total
    diff: dict[int, Matrix] = {}
    for n in dims:
        if (n - 1) not in dims:
            continue
        m = np.zeros((dims[n - 1], dims[n]), dtype=np.int64)
        r = c0 = 0
        for c in parts:
            blk = c.d(n)
            m[r : r + blk.rows, c0 : c0 + blk.cols] = blk.a
            r += c.dim(n - 1)
            c0 += c.dim(n)
        diff[n] = Matrix.make(field, m)
    total_cx = chain_complex(field, dims, diff)
    incls = []
    projs = []
    offset_at = {}
    for n in total_cx.degrees():
        pos = 0
        offs = []
        for c in parts:
            offs.append(pos)
            pos += c.dim(n)
        offset_at[n] = offs
    for k, c in enumerate(parts):
        inc = {}
        prj = {}
        for n in c.degrees():
            if not c.dim(n):
                continue
            m = np.zeros((total_cx.dim(n), c.dim(n)), dtype=np.int64)
            off = offset_at.get(n, [0] * len(parts))[k]
            m[off : off + c.dim(n), :] = np.eye(c.dim(n), dtype=np.int64)
            inc[n] = Matrix.make(field, m)
            prj[n] = Matrix.make(field, m.T)
        incls.append(chain_map(c, total_cx, inc))
        projs.append(chain_map(total_cx, c, prj))
    return Biproduct(total_cx, tuple(incls), tuple(projs))


# ---------------------------------------------------------------------------
# Kernel / cokernel


@dataclass(frozen=True)
class KernelData:
    obj: ChainComplex
    incl: ChainMap


def kernel(f: ChainMap) -> KernelData:
    """Degreewise kernel with the induced differential."""
    field = f.src.field
    bases: dict[int, Matrix] = {}
    dims: dict[int, int] = {}
    for n in f.src.degrees():
        if not f.src.dim(n):
            continue
        kb = kernel_basis(f.at(n))
        bases[n] = kb
        if kb.cols:
            dims[n] = kb.cols
    diff: dict[int, Matrix] = {}
    for n in dims:
        if (n - 1) not in dims:
            continue
        # d maps ker(f_n) into ker(f_{n-1}); express in the chosen basis.
        rhs = f.src.d(n) @ bases[n]
        w = solve(bases[n - 1], rhs)
        if w is None:
            raise MediatingError("kernel differential does not restrict")
        diff[n] = w
    obj = chain_complex(field, dims, diff)
    incl = chain_map(obj, f.src, {n: bases[n] for n in dims})
    return KernelData(obj, incl)


@dataclass(frozen=True)
class CokernelData:
    obj: ChainComplex
    proj: ChainMap
    sect: dict[int, Matrix]  # degreewise right inverse of proj, not a chain map

    def section(self, n: int) -> Matrix:
        got = self.sect.get(n)
        if got is not None:
            return got
        return Matrix.zeros(self.obj.field, self.proj.src.dim(n), self.obj.dim(n))


def cokernel(f: ChainMap) -> CokernelData:
    """Degreewise quotient dst/im(f) on the pivot-completion basis."""
    field = f.src.field
    y = f.dst
    proj_mats: dict[int, Matrix] = {}
    sects: dict[int, Matrix] = {}
    dims: dict[int, int] = {}
    for n in y.degrees():
        dy = y.dim(n)
        if not dy:
            continue
        img = image_basis(f.at(n))
        ext = complete_to_basis(img)
        if ext.cols == 0:
            continue
        t = img.hstack(ext)
        tinv = inverse(t)
        pi = Matrix.make(field, tinv.a[img.cols :, :])
        dims[n] = ext.cols
        proj_mats[n] = pi
        sects[n] = ext
    diff: dict[int, Matrix] = {}
    for n in dims:
        if (n - 1) not in dims:
            continue
        diff[n] = proj_mats[n - 1] @ y.d(n) @ sects[n]
    obj = chain_complex(field, dims, diff)
    proj = chain_map(y, obj, proj_mats)
    return CokernelData(obj, proj, sects)


def induce_through_surjection(surj: ChainMap, comp: ChainMap) -> ChainMap:
    """The unique m with m . surj = comp; raises when no such map exists."""
    if surj.src != comp.src:
        raise MediatingError("descend: sources differ")
    comps: dict[int, Matrix] = {}
    for n in surj.dst.degrees():
        if not (surj.dst.dim(n) and comp.dst.dim(n)):
            continue
        sol = solve(surj.at(n).transpose(), comp.at(n).transpose())
        if sol is None:
            raise MediatingError(f"map does not descend at degree {n}")
        comps[n] = sol.transpose()
    try:
        m = chain_map(surj.dst, comp.dst, comps)
    except InvalidMap as e:
        raise MediatingError(str(e))
    if compose(m, surj) != comp:
        raise MediatingError("descended map fails verification")
    return m


def lift_through_injection(inj: ChainMap, comp: ChainMap) -> ChainMap:
    """The unique m with inj . m = comp; raises when comp misses the image."""
    if inj.dst != comp.dst:
        raise MediatingError("lift: targets differ")
    comps: dict[int, Matrix] = {}
    for n in inj.src.degrees():
        if not (inj.src.dim(n) and comp.src.dim(n)):
            continue
        sol = solve(inj.at(n), comp.at(n))
        if sol is None:
            raise MediatingError(f"map does not lift at degree {n}")
        comps[n] = sol
    try:
        m = chain_map(comp.src, inj.src, comps)
    except InvalidMap as e:
        raise MediatingError(str(e))
    if compose(inj, m) != comp:
        raise MediatingError("lifted map fails verification")
    return m


# ---------------------------------------------------------------------------
# Pushout / pullback


@dataclass(frozen=True)
class PushoutData:
    obj: ChainComplex
    left: ChainMap   # B -> obj
    right: ChainMap  # C -> obj
    proj: ChainMap   # B (+) C -> obj
    sect: dict[int, Matrix]

    def section(self, n: int) -> Matrix:
        got = self.sect.get(n)
        if got is not None:
            return got
        return Matrix.zeros(self.obj.field, self.proj.src.dim(n), self.obj.dim(n))

    def mediate(self, u: ChainMap, v: ChainMap) -> ChainMap:
        """Unique m with m.left = u and m.right = v, for a commuting cocone."""
        if u.dst != v.dst:
            raise MediatingError("cocone legs with different targets")
        comps: dict[int, Matrix] = {}
        for n in self.obj.degrees():
            if not (self.obj.dim(n) and u.dst.dim(n)):
                continue
            stacked = u.at(n).hstack(v.at(n))
            comps[n] = stacked @ self.section(n)
        try:
            m = chain_map(self.obj, u.dst, comps)
        except InvalidMap as e:
            raise MediatingError(str(e))
        if compose(m, self.left) != u or compose(m, self.right) != v:
            raise MediatingError("cocone is not compatible with the span")
        return m


def pushout(f: ChainMap, g: ChainMap) -> PushoutData:
    """Pushout of B <-f- A -g-> C as coker(A -> B (+) C, a |-> (fa, -ga)).

    When one leg is a degreewise isomorphism the other vertex is reused as
    the pushout on the nose, which keeps unit laws literal equalities.
    """
    if f.src != g.src:
        raise MediatingError("pushout legs must share a source")
    b, c = f.dst, g.dst
    bp = biproduct([b, c])
    if g.src.total_dim() == g.dst.total_dim() and g.is_iso():
        ginv = invert_chain_map(g)
        left = identity_map(b)
        right = compose(f, ginv)
        proj_comps = {}
        for n in b.degrees():
            if b.dim(n):
                proj_comps[n] = left.at(n).hstack(right.at(n))
        proj = chain_map(bp.total, b, proj_comps)
        sects = {n: bp.incls[0].at(n) for n in b.degrees() if b.dim(n)}
        return PushoutData(b, left, right, proj, sects)
    if f.src.total_dim() == f.dst.total_dim() and f.is_iso():
        finv = invert_chain_map(f)
        right = identity_map(c)
        left = compose(g, finv)
        proj_comps = {}
        for n in c.degrees():
            if c.dim(n):
                proj_comps[n] = left.at(n).hstack(right.at(n))
        proj = chain_map(bp.total, c, proj_comps)
        sects = {n: bp.incls[1].at(n) for n in c.degrees() if c.dim(n)}
        return PushoutData(c, left, right, proj, sects)
    delta = add_maps(compose(bp.incls[0], f), scale_map(compose(bp.incls[1], g), -1))
    ck = cokernel(delta)
    return PushoutData(
        ck.obj,
        compose(ck.proj, bp.incls[0]),
        compose(ck.proj, bp.incls[1]),
        ck.proj,
        ck.sect,
    )


def invert_chain_map(f: ChainMap) -> ChainMap:
    comps = {}
    for n in f.src.degrees():
        if f.src.dim(n):
            comps[n] = inverse(f.at(n))
    return chain_map(f.dst, f.src, comps)


@dataclass(frozen=True)
class PullbackData:
    obj: ChainComplex
    to_left: ChainMap   # obj -> B
    to_right: ChainMap  # obj -> C
    incl: ChainMap      # obj -> B (+) C

    def mediate(self, u: ChainMap, v: ChainMap) -> ChainMap:
        """Unique m with to_left.m = u and to_right.m = v."""
        if u.src != v.src:
            raise MediatingError("cone legs with different sources")
        bp_src = self.incl.dst
        comps = {}
        for n in u.src.degrees():
            if not (u.src.dim(n) and bp_src.dim(n)):
                continue
            comps[n] = u.at(n).vstack(v.at(n))
        stacked = chain_map(u.src, bp_src, comps)
        m = lift_through_injection(self.incl, stacked)
        if compose(self.to_left, m) != u or compose(self.to_right, m) != v:
            raise MediatingError("cone is not compatible with the cospan")
        return m


def pullback(f: ChainMap, g: ChainMap) -> PullbackData:
    """Pullback of B -f-> D <-g- C as ker(B (+) C -> D, (b, c) |-> fb - gc)."""
    if f.dst != g.dst:
        raise MediatingError("pullback legs must share a target")
    b, c = f.src, g.src
    bp = biproduct([b, c])
    delta = sub_maps_safe(compose(f, bp.projs[0]), compose(g, bp.projs[1]))
    k = kernel(delta)
    return PullbackData(
        k.obj,
        compose(bp.projs[0], k.incl),
        compose(bp.projs[1], k.incl),
        k.incl,
    )


def sub_maps_safe(f: ChainMap, g: ChainMap) -> ChainMap:
    return add_maps(f, scale_map(g, -1))


# ---------------------------------------------------------------------------
# Finite colimits of arbitrary diagrams


@dataclass(frozen=True)
class ColimitData:
    obj: ChainComplex
    injections: tuple[ChainMap, ...]
    proj: ChainMap
    sect: dict[int, Matrix]

    def section(self, n: int) -> Matrix:
        got = self.sect.get(n)
        if got is not None:
            return got
        return Matrix.zeros(self.obj.field, self.proj.src.dim(n), self.obj.dim(n))

    def mediate(self, legs: list[ChainMap]) -> ChainMap:
        if len(legs) != len(self.injections):
            raise MediatingError("wrong number of cocone legs")
        target = legs[0].dst
        comps: dict[int, Matrix] = {}
        for n in self.obj.degrees():
            if not (self.obj.dim(n) and target.dim(n)):
                continue
            stacked = legs[0].at(n)
            for leg in legs[1:]:
                stacked = stacked.hstack(leg.at(n))
            comps[n] = stacked @ self.section(n)
        try:
            m = chain_map(self.obj, target, comps)
        except InvalidMap as e:
            raise MediatingError(str(e))
        for leg, inj in zip(legs, self.injections):
            if compose(m, inj) != leg:
                raise MediatingError("cocone is not compatible with the diagram")
        return m


def colimit(vertices: list[ChainComplex], edges: list[tuple[int, int, ChainMap]]) -> ColimitData:
    """Colimit of a finite diagram, presented as coker((+) edges -> (+) vertices).

    Each edge (s, t, phi) contributes the relation incl_t(phi x) - incl_s(x);
    generating edges of a poset diagram suffice since composite relations are
    sums of these.
    """
    bp = biproduct(vertices)
    if not edges:
        ident = identity_map(bp.total)
        return ColimitData(bp.total, bp.incls, ident, {
            n: Matrix.identity(bp.total.field, bp.total.dim(n))
            for n in bp.total.degrees() if bp.total.dim(n)
        })
    rel_legs = []
    srcs = []
    for s, t, phi in edges:
        if phi.src != vertices[s] or phi.dst != vertices[t]:
            raise MediatingError("edge map endpoints disagree with the diagram")
        rel_legs.append(sub_maps_safe(compose(bp.incls[t], phi), bp.incls[s]))
        srcs.append(vertices[s])
    src_bp = biproduct(srcs)
    delta = None
    for k, leg in enumerate(rel_legs):
        piece = compose(leg, src_bp.projs[k])
        delta = piece if delta is None else add_maps(delta, piece)
    ck = cokernel(delta)
    return ColimitData(
        ck.obj,
        tuple(compose(ck.proj, inc) for inc in bp.incls),
        ck.proj,
        ck.sect,
    )


# ---------------------------------------------------------------------------
# Cone, cylinder, path object


def cone(f: ChainMap) -> tuple[ChainComplex, ChainMap]:
    """Mapping cone B_n (+) A_{n-1}, d(b, a) = (db + fa, -da); returns (C, B -> C)."""
    a, b = f.src, f.dst
    field = a.field
    p = field.p
    dims: dict[int, int] = {}
    for n in range(min(a.lo + 1, b.lo), max(a.hi + 1, b.hi) + 1):
        total = b.dim(n) + a.dim(n - 1)
        if total:
            dims[n] = total
    diff: dict[int, Matrix] = {}
    for n in dims:
        if (n - 1) not in dims:
            continue
        m = np.zeros((dims[n - 1], dims[n]), dtype=np.int64)
        db, da1 = b.dim(n - 1), a.dim(n - 2)
        m[:db, : b.dim(n)] = b.d(n).a
        m[:db, b.dim(n) :] = f.at(n - 1).a
        m[db:, b.dim(n) :] = (-a.d(n - 1).a) % p
        diff[n] = Matrix.make(field, m)
    c = chain_complex(field, dims, diff)
    inc_comps = {}
    for n in b.degrees():
        if not b.dim(n):
            continue
        m = np.zeros((c.dim(n), b.dim(n)), dtype=np.int64)
        m[: b.dim(n), :] = np.eye(b.dim(n), dtype=np.int64)
        inc_comps[n] = Matrix.make(field, m)
    return c, chain_map(b, c, inc_comps)


@dataclass(frozen=True)
class CylinderData:
    obj: ChainComplex
    incl: ChainMap   # A -> Cyl(f), degreewise injection
    proj: ChainMap   # Cyl(f) -> B, quasi-isomorphism
    incl_dst: ChainMap  # B -> Cyl(f)


def cylinder(f: ChainMap) -> CylinderData:
    """Mapping cylinder A_n (+) A_{n-1} (+) B_n factoring f as A >-> Cyl -~-> B."""
    a, b = f.src, f.dst
    field = a.field
    p = field.p
    dims: dict[int, int] = {}
    for n in range(min(a.lo, b.lo), max(a.hi + 1, b.hi) + 1):
        total = a.dim(n) + a.dim(n - 1) + b.dim(n)
        if total:
            dims[n] = total
    diff: dict[int, Matrix] = {}
    for n in dims:
        if (n - 1) not in dims:
            continue
        rows = dims[n - 1]
        cols = dims[n]
        m = np.zeros((rows, cols), dtype=np.int64)
        # source layout: [A_n | A_{n-1} | B_n]; target: [A_{n-1} | A_{n-2} | B_{n-1}]
        a_n, a_n1, b_n = a.dim(n), a.dim(n - 1), b.dim(n)
        ra1, ra2 = a.dim(n - 1), a.dim(n - 2)
        m[:ra1, :a_n] = a.d(n).a
        m[:ra1, a_n : a_n + a_n1] = (-np.eye(a_n1, dtype=np.int64)) % p
        m[ra1 : ra1 + ra2, a_n : a_n + a_n1] = (-a.d(n - 1).a) % p
        m[ra1 + ra2 :, a_n : a_n + a_n1] = f.at(n - 1).a
        m[ra1 + ra2 :, a_n + a_n1 :] = b.d(n).a
        diff[n] = Matrix.make(field, m)
    cyl = chain_complex(field, dims, diff)
    inc = {}
    for n in a.degrees():
        if not a.dim(n):
            continue
        m = np.zeros((cyl.dim(n), a.dim(n)), dtype=np.int64)
        m[: a.dim(n), :] = np.eye(a.dim(n), dtype=np.int64)
        inc[n] = Matrix.make(field, m)
    prj = {}
    for n in cyl.degrees():
        if not (cyl.dim(n) and b.dim(n)):
            continue
        m = np.zeros((b.dim(n), cyl.dim(n)), dtype=np.int64)
        a_n, a_n1 = a.dim(n), a.dim(n - 1)
        m[:, :a_n] = f.at(n).a
        m[:, a_n + a_n1 :] = np.eye(b.dim(n), dtype=np.int64)
        prj[n] = Matrix.make(field, m)
    inc_b = {}
    for n in b.degrees():
        if not b.dim(n):
            continue
        m = np.zeros((cyl.dim(n), b.dim(n)), dtype=np.int64)
        a_n, a_n1 = a.dim(n), a.dim(n - 1)
        m[a_n + a_n1 :, :] = np.eye(b.dim(n), dtype=np.int64)
        inc_b[n] = Matrix.make(field, m)
    return CylinderData(
        cyl,
        chain_map(a, cyl, inc),
        chain_map(cyl, b, prj),
        chain_map(b, cyl, inc_b),
    )


@dataclass(frozen=True)
class PathData:
    obj: ChainComplex
    diag: ChainMap    # X -> X^I, quasi-isomorphism
    ev0: ChainMap     # X^I -> X
    ev1: ChainMap     # X^I -> X


def path_object(x: ChainComplex) -> PathData:
    """X^I with X_n (+) X_n (+) X_{n+1}, d(u, v, z) = (du, dv, u - v - dz)."""
    field = x.field
    p = field.p
    dims: dict[int, int] = {}
    for n in range(x.lo - 1, x.hi + 1):
        total = 2 * x.dim(n) + x.dim(n + 1)
        if total:
            dims[n] = total
    diff: dict[int, Matrix] = {}
    for n in dims:
        if (n - 1) not in dims:
            continue
        m = np.zeros((dims[n - 1], dims[n]), dtype=np.int64)
        xn, xn1 = x.dim(n), x.dim(n + 1)
        rn, rn1 = x.dim(n - 1), x.dim(n)
        m[:rn, :xn] = x.d(n).a
        m[rn : 2 * rn, xn : 2 * xn] = x.d(n).a
        m[2 * rn : 2 * rn + rn1, :xn] = np.eye(xn, dtype=np.int64)
        m[2 * rn : 2 * rn + rn1, xn : 2 * xn] = (-np.eye(xn, dtype=np.int64)) % p
        m[2 * rn : 2 * rn + rn1, 2 * xn :] = (-x.d(n + 1).a) % p
        diff[n] = Matrix.make(field, m)
    px = chain_complex(field, dims, diff)
    dg = {}
    e0 = {}
    e1 = {}
    for n in x.degrees():
        if not x.dim(n):
            continue
        xn = x.dim(n)
        m = np.zeros((px.dim(n), xn), dtype=np.int64)
        m[:xn, :] = np.eye(xn, dtype=np.int64)
        m[xn : 2 * xn, :] = np.eye(xn, dtype=np.int64)
        dg[n] = Matrix.make(field, m)
        m0 = np.zeros((xn, px.dim(n)), dtype=np.int64)
        m0[:, :xn] = np.eye(xn, dtype=np.int64)
        e0[n] = Matrix.make(field, m0)
        m1 = np.zeros((xn, px.dim(n)), dtype=np.int64)
        m1[:, xn : 2 * xn] = np.eye(xn, dtype=np.int64)
        e1[n] = Matrix.make(field, m1)
    return PathData(px, chain_map(x, px, dg), chain_map(px, x, e0), chain_map(px, x, e1))


def mapping_path_factorization(f: ChainMap) -> tuple[ChainMap, ChainMap]:
    """Factor f: X -> Y as a quasi-iso injection X -> Nf then a surjection Nf -> Y."""
    pd = path_object(f.dst)
    pb = pullback(f, pd.ev0)
    j = pb.mediate(identity_map(f.src), compose(pd.diag, f))
    q = compose(pd.ev1, pb.to_right)
    return j, q
