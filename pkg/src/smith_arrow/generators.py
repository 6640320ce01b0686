"""Seeded random instance generators.

Complexes are finite direct sums of spheres and disks twisted by random
degreewise changes of basis, so d^2 = 0 holds by construction and the
homology is known in advance.  Maps are random solutions of the commutation
linear system.  Algebras and Smith ideals come from the guaranteed-valid
families (square-zero extensions, truncated polynomial algebras); arbitrary
multiplication tables would almost never be associative.

All randomness flows through a per-trial PRNG derived by hashing
(seed, suite, index), so suites are replayable and order-independent.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import Field, Matrix, is_invertible
from .complexes import (
    ChainComplex,
    ChainMap,
    chain_complex,
    chain_map,
    chain_map_space,
    compose,
    disk,
    identity_map,
    sphere,
    tensor_complex,
    unit_complex,
    zero_complex,
    zero_map,
)
from .limits import biproduct, invert_chain_map, pullback
from .arrows import ArrowObject, ArrowSquare, arrow, square, square_space
from .dg import (
    DGAlgebra,
    MonoidHom,
    SmithIdeal,
    scalar_algebra,
    square_zero_algebra,
    square_zero_ideal,
    truncated_polynomial_ideal,
    zero_ideal,
)
from .modules import (
    RightModule,
    LeftModule,
    SmithIdealMap,
    SmithModule,
    cone_module,
    free_left_module,
    free_right_module,
    free_smith_module,
    module_direct_sum,
    unit_module,
    zero_module,
)


def trial_rng(seed: int, suite: str, index: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{suite}:{index}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


@dataclass(frozen=True)
class GenConfig:
    p: int
    lo: int = -3
    hi: int = 3
    max_dim: int = 6
    max_blocks: int = 3

    @property
    def field(self) -> Field:
        return Field(self.p)


def rand_matrix(rng: random.Random, field: Field, rows: int, cols: int) -> Matrix:
    return Matrix.make(field, [[rng.randrange(field.p) for _ in range(cols)] for _ in range(rows)])


def rand_invertible(rng: random.Random, field: Field, n: int) -> Matrix:
    if n == 0:
        return Matrix.zeros(field, 0, 0)
    for _ in range(32):
        m = rand_matrix(rng, field, n, n)
        if is_invertible(m):
            return m
    return Matrix.identity(field, n)


@dataclass(frozen=True)
class RandomComplex:
    cx: ChainComplex
    expected_homology: dict[int, int]


def rand_complex(rng: random.Random, cfg: GenConfig, max_blocks: int | None = None) -> RandomComplex:
    """Twisted sum of spheres and disks with homology known by construction."""
    field = cfg.field
    blocks: list[ChainComplex] = []
    hom: dict[int, int] = {}
    per_degree: dict[int, int] = {}
    n_blocks = rng.randint(0, max_blocks if max_blocks is not None else cfg.max_blocks)
    for _ in range(n_blocks):
        if rng.random() < 0.5 and cfg.hi > cfg.lo:
            n = rng.randint(cfg.lo + 1, cfg.hi)
            if per_degree.get(n, 0) >= cfg.max_dim or per_degree.get(n - 1, 0) >= cfg.max_dim:
                continue
            blocks.append(disk(field, n))
            per_degree[n] = per_degree.get(n, 0) + 1
            per_degree[n - 1] = per_degree.get(n - 1, 0) + 1
        else:
            n = rng.randint(cfg.lo, cfg.hi)
            if per_degree.get(n, 0) >= cfg.max_dim:
                continue
            blocks.append(sphere(field, n))
            per_degree[n] = per_degree.get(n, 0) + 1
            hom[n] = hom.get(n, 0) + 1
    if not blocks:
        return RandomComplex(zero_complex(field), {})
    w = biproduct(blocks).total
    twists = {n: rand_invertible(rng, field, w.dim(n)) for n in w.degrees() if w.dim(n)}
    diff = {}
    for n in w.degrees():
        if w.dim(n) and w.dim(n - 1):
            diff[n] = twists[n - 1] @ w.d(n) @ invert_matrix(twists[n])
    return RandomComplex(chain_complex(field, dict(w.dims), diff), hom)


def invert_matrix(m: Matrix) -> Matrix:
    from .field import inverse

    return inverse(m)


def rand_acyclic(rng: random.Random, cfg: GenConfig, max_blocks: int | None = None) -> ChainComplex:
    """Twisted sum of disks only."""
    field = cfg.field
    blocks: list[ChainComplex] = []
    n_blocks = rng.randint(0, max_blocks if max_blocks is not None else cfg.max_blocks)
    for _ in range(n_blocks):
        if cfg.hi > cfg.lo:
            blocks.append(disk(field, rng.randint(cfg.lo + 1, cfg.hi)))
    if not blocks:
        return zero_complex(field)
    w = biproduct(blocks).total
    twists = {n: rand_invertible(rng, field, w.dim(n)) for n in w.degrees() if w.dim(n)}
    diff = {}
    for n in w.degrees():
        if w.dim(n) and w.dim(n - 1):
            diff[n] = twists[n - 1] @ w.d(n) @ invert_matrix(twists[n])
    return chain_complex(field, dict(w.dims), diff)


def rand_chain_map(rng: random.Random, x: ChainComplex, y: ChainComplex) -> ChainMap:
    basis = chain_map_space(x, y)
    out = zero_map(x, y)
    from .complexes import add_maps, scale_map

    for b in basis:
        c = rng.randrange(x.field.p)
        if c:
            out = add_maps(out, scale_map(b, c))
    return out


def rand_arrow(rng: random.Random, cfg: GenConfig, max_blocks: int | None = None) -> ArrowObject:
    x = rand_complex(rng, cfg, max_blocks).cx
    y = rand_complex(rng, cfg, max_blocks).cx
    return arrow(rand_chain_map(rng, x, y))


def rand_square(rng: random.Random, f: ArrowObject, g: ArrowObject) -> ArrowSquare:
    basis = square_space(f, g)
    if not basis:
        return square(f, g, zero_map(f.dom, g.dom), zero_map(f.cod, g.cod))
    from .complexes import add_maps, scale_map

    a0 = zero_map(f.dom, g.dom)
    a1 = zero_map(f.cod, g.cod)
    for b in basis:
        c = rng.randrange(f.dom.field.p)
        if c:
            a0 = add_maps(a0, scale_map(b.a0, c))
            a1 = add_maps(a1, scale_map(b.a1, c))
    return square(f, g, a0, a1)


@dataclass(frozen=True)
class Mono:
    map: ChainMap
    trivial: bool


def rand_mono(rng: random.Random, cfg: GenConfig, x: ChainComplex, trivial: bool) -> ChainMap:
    """A degreewise injection out of x, a quasi-iso when trivial is set."""
    field = cfg.field
    pad = rand_acyclic(rng, cfg) if trivial else rand_complex(rng, cfg).cx
    w = biproduct([x, pad])
    twists = {n: rand_invertible(rng, field, w.total.dim(n)) for n in w.total.degrees() if w.total.dim(n)}
    diff = {}
    for n in w.total.degrees():
        if w.total.dim(n) and w.total.dim(n - 1):
            diff[n] = twists[n - 1] @ w.total.d(n) @ invert_matrix(twists[n])
    y = chain_complex(field, dict(w.total.dims), diff)
    comps = {}
    for n in x.degrees():
        if x.dim(n) and y.dim(n):
            comps[n] = twists[n] @ w.incls[0].at(n)
    return chain_map(x, y, comps)


def rand_epi(rng: random.Random, cfg: GenConfig, x: ChainComplex, trivial: bool) -> ChainMap:
    """A degreewise surjection onto x, a quasi-iso when trivial is set."""
    field = cfg.field
    pad = rand_acyclic(rng, cfg) if trivial else rand_complex(rng, cfg).cx
    w = biproduct([x, pad])
    twists = {n: rand_invertible(rng, field, w.total.dim(n)) for n in w.total.degrees() if w.total.dim(n)}
    diff = {}
    for n in w.total.degrees():
        if w.total.dim(n) and w.total.dim(n - 1):
            diff[n] = twists[n - 1] @ w.total.d(n) @ invert_matrix(twists[n])
    y = chain_complex(field, dict(w.total.dims), diff)
    comps = {}
    for n in y.degrees():
        if x.dim(n) and y.dim(n):
            comps[n] = w.projs[0].at(n) @ invert_matrix(twists[n])
    return chain_map(y, x, comps)


def rand_projective_cofibration(rng: random.Random, cfg: GenConfig, trivial: bool) -> ArrowSquare:
    """A projective (trivial) cofibration built so the corner map is an
    injection (quasi-iso if trivial) by construction."""
    f = rand_arrow(rng, cfg, 2)
    a0 = rand_mono(rng, cfg, f.dom, trivial)
    from .limits import pushout

    po = pushout(f.f, a0)
    corner_in = rand_mono(rng, cfg, po.obj, trivial)
    g = arrow(compose(corner_in, po.right))
    a1 = compose(corner_in, po.left)
    return square(f, g, a0, a1)


def rand_injective_fibration(rng: random.Random, cfg: GenConfig, trivial: bool) -> ArrowSquare:
    """An injective (trivial) fibration via a surjection onto the pullback."""
    g = rand_arrow(rng, cfg, 2)
    a1 = rand_epi(rng, cfg, g.cod, trivial)
    pb = pullback(a1, g.f)
    gamma = rand_epi(rng, cfg, pb.obj, trivial)
    f = arrow(compose(pb.to_left, gamma))
    a0 = compose(pb.to_right, gamma)
    return square(f, g, a0, a1)


# ---------------------------------------------------------------------------
# Algebras, ideals, modules


def rand_dga(rng: random.Random, cfg: GenConfig) -> DGAlgebra:
    kind = rng.choice(["scalar", "square-zero", "poly"])
    field = cfg.field
    if kind == "scalar":
        return scalar_algebra(field)
    if kind == "square-zero":
        m = rand_complex(rng, cfg, 2).cx
        return square_zero_algebra(field, m)
    k = rng.randint(2, 3)
    return truncated_polynomial_ideal(field, 0, k).alg


def rand_smith_ideal(rng: random.Random, cfg: GenConfig) -> SmithIdeal:
    kind = rng.choice(["square-zero", "poly", "zero"])
    field = cfg.field
    if kind == "square-zero":
        m = rand_complex(rng, cfg, 2).cx
        return square_zero_ideal(field, m)
    if kind == "poly":
        return truncated_polynomial_ideal(field, 0, rng.randint(2, 3))
    return zero_ideal(rand_dga(rng, cfg))


def rand_surjective_monoid_hom(rng: random.Random, cfg: GenConfig) -> MonoidHom:
    """Degreewise surjective monoid homomorphisms from the safe families."""
    field = cfg.field
    kind = rng.choice(["augment-sq0", "augment-poly", "identity", "collapse"])
    if kind == "augment-sq0":
        s = square_zero_ideal(field, rand_complex(rng, cfg, 2).cx)
        from .dg import quotient_dga

        return quotient_dga(s)
    if kind == "augment-poly":
        from .dg import quotient_dga

        return quotient_dga(truncated_polynomial_ideal(field, 0, rng.randint(2, 3)))
    if kind == "identity":
        r = rand_dga(rng, cfg)
        return MonoidHom(r, r, identity_map(r.carrier))
    # collapse: S (+) M -> S (+) M' along a surjective chain map M -> M'
    m_target = rand_complex(rng, cfg, 1).cx
    q = rand_epi(rng, cfg, m_target, False)
    return _square_zero_hom_from(rng, field, q)


def _square_zero_hom_from(rng: random.Random, field: Field, h: ChainMap) -> MonoidHom:
    """The monoid hom S (+) M -> S (+) M' induced by h: M -> M'."""
    src = square_zero_algebra(field, h.src)
    dst = square_zero_algebra(field, h.dst)
    bp_s = biproduct([unit_complex(field), h.src])
    bp_d = biproduct([unit_complex(field), h.dst])
    from .complexes import add_maps

    m = add_maps(
        compose(bp_d.incls[0], bp_s.projs[0]),
        compose(bp_d.incls[1], compose(h, bp_s.projs[1])),
    )
    return MonoidHom(src, dst, m)


def square_zero_ideal_map(rng: random.Random, field: Field, h: ChainMap) -> SmithIdealMap:
    """The Smith-ideal map between square-zero ideals induced by h: M -> M'."""
    src = square_zero_ideal(field, h.src)
    dst = square_zero_ideal(field, h.dst)
    hom = _square_zero_hom_from(rng, field, h)
    return SmithIdealMap(src, dst, h, hom.map)


def rand_smith_module(rng: random.Random, cfg: GenConfig, s: SmithIdeal) -> SmithModule:
    kind = rng.choice(["unit", "zero", "free"])
    if kind == "unit":
        return unit_module(s)
    if kind == "zero":
        return zero_module(s)
    g = rand_arrow(rng, cfg, 1)
    return free_smith_module(s, g)


def rand_cell_module(rng: random.Random, cfg: GenConfig, r: DGAlgebra, steps: int = 2) -> RightModule:
    """Finite-cell right module: free cells plus cone attachments."""
    field = cfg.field
    z = zero_complex(field)
    mod = RightModule(r, z, zero_map(tensor_complex(z, r.carrier), z))
    for _ in range(steps):
        if rng.random() < 0.6 or mod.carrier.is_zero():
            d = rng.randint(cfg.lo, cfg.hi)
            mod, _, _ = module_direct_sum([mod, free_right_module(r, sphere(field, d))])
        else:
            from .complexes import homology

            h = homology(mod.carrier)
            degrees = [n for n in mod.carrier.degrees() if h.cycles.get(n) is not None and h.cycles[n].cols]
            if not degrees:
                continue
            d = rng.choice(degrees)
            zb = h.cycles[d]
            coeffs = [rng.randrange(field.p) for _ in range(zb.cols)]
            col = Matrix.make(field, np.array([[c] for c in coeffs]))
            vec = zb @ col
            if vec.is_zero():
                continue
            zmap = chain_map(sphere(field, d), mod.carrier, {d: vec})
            mod, _ = cone_module(mod, zmap)
    return mod


def rand_left_module_weq(
    rng: random.Random, cfg: GenConfig, r: DGAlgebra
) -> tuple[LeftModule, LeftModule, ChainMap]:
    """A weak equivalence of left modules: pad by an acyclic free piece."""
    field = cfg.field
    base = free_left_module(r, rand_complex(rng, cfg, 1).cx)
    pad_cells = rand_acyclic(rng, cfg, 1)
    pad = free_left_module(r, pad_cells)
    bp = biproduct([base.carrier, pad.carrier])
    from .complexes import add_maps

    act = add_maps(
        compose(compose(bp.incls[0], base.act), tensor_map_left(r, bp.projs[0])),
        compose(compose(bp.incls[1], pad.act), tensor_map_left(r, bp.projs[1])),
    )
    total = LeftModule(r, bp.total, act)
    if rng.random() < 0.5:
        return base, total, bp.incls[0]
    return total, base, left_projection(bp, base, pad)


def tensor_map_left(r: DGAlgebra, h: ChainMap) -> ChainMap:
    from .complexes import tensor_map

    return tensor_map(identity_map(r.carrier), h)


def left_projection(bp, base: LeftModule, pad: LeftModule) -> ChainMap:
    return bp.projs[0]
