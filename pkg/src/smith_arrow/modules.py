"""Modules over DG algebras, Smith ideals, and monoid homomorphisms.

Tensor-over-R is the coequalizer presentation coker(M (x) R (x) N => M (x) N)
with deterministic quotient bases; every structure map that lives on a
quotient is produced by descending an explicit map through the projection
and verifying exactly.  Restriction and extension of scalars for modules
over Smith ideals follow the pushout description, and extension is cross-
checked against a direct coequalizer computed wholly in the arrow category.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import Matrix
from .complexes import (
    ChainComplex,
    ChainMap,
    _block_offsets,
    _blocks,
    add_maps,
    assoc_iso,
    assoc_iso_inv,
    chain_map,
    chain_map_space,
    compose,
    homology,
    identity_map,
    is_quasi_iso,
    kernel_basis,
    sphere,
    sub_maps,
    tensor_complex,
    tensor_map,
    unit_complex,
    zero_complex,
    zero_map,
)
from .limits import (
    CokernelData,
    MediatingError,
    biproduct,
    cokernel,
    cone,
    induce_through_surjection,
    kernel,
    lift_through_injection,
    pushout,
)
from .arrows import (
    ArrowObject,
    ArrowSquare,
    arrow,
    compose_squares,
    identity_square,
    pushout_product,
    pushout_product_associativity,
    pushout_product_square,
    square,
)
from .dg import (
    DGAlgebra,
    DGBimodule,
    MonoidHom,
    SmithIdeal,
    smith_to_square_monoid,
    validate_monoid_hom,
    validate_smith_ideal,
)


@dataclass(frozen=True, eq=False)
class RightModule:
    alg: DGAlgebra
    carrier: ChainComplex
    act: ChainMap   # M (x) R -> M

    def __eq__(self, other):
        if not isinstance(other, RightModule):
            return NotImplemented
        return self.alg == other.alg and self.carrier == other.carrier and self.act == other.act


@dataclass(frozen=True, eq=False)
class LeftModule:
    alg: DGAlgebra
    carrier: ChainComplex
    act: ChainMap   # R (x) M -> M

    def __eq__(self, other):
        if not isinstance(other, LeftModule):
            return NotImplemented
        return self.alg == other.alg and self.carrier == other.carrier and self.act == other.act


def validate_right_module(m: RightModule) -> str | None:
    R = m.alg.carrier
    M = m.carrier
    if m.act.src != tensor_complex(M, R) or m.act.dst != M:
        return "action has wrong endpoints"
    lhs = compose(m.act, tensor_map(m.act, identity_map(R)))
    rhs = compose(m.act, compose(tensor_map(identity_map(M), m.alg.mult), assoc_iso(M, R, R)))
    if lhs != rhs:
        return "action is not associative"
    if compose(m.act, tensor_map(identity_map(M), m.alg.unit)) != identity_map(M):
        return "action is not unital"
    return None


def validate_left_module(m: LeftModule) -> str | None:
    R = m.alg.carrier
    M = m.carrier
    if m.act.src != tensor_complex(R, M) or m.act.dst != M:
        return "action has wrong endpoints"
    lhs = compose(m.act, tensor_map(m.alg.mult, identity_map(M)))
    rhs = compose(m.act, compose(tensor_map(identity_map(R), m.act), assoc_iso(R, R, M)))
    if lhs != rhs:
        return "action is not associative"
    if compose(m.act, tensor_map(m.alg.unit, identity_map(M))) != identity_map(M):
        return "action is not unital"
    return None


# ---------------------------------------------------------------------------
# Tensor over R


@dataclass(frozen=True)
class TensorOver:
    obj: ChainComplex
    proj: ChainMap          # M (x) N -> obj
    data: CokernelData


def tensor_over(m: RightModule, n: LeftModule) -> TensorOver:
    """M (x)_R N as coker(M (x) (R (x) N) -> M (x) N, the difference map)."""
    if m.alg != n.alg:
        raise MediatingError("tensor over different algebras")
    M, R, N = m.carrier, m.alg.carrier, n.carrier
    d1 = compose(tensor_map(m.act, identity_map(N)), assoc_iso_inv(M, R, N))
    d2 = tensor_map(identity_map(M), n.act)
    ck = cokernel(sub_maps(d1, d2))
    return TensorOver(ck.obj, ck.proj, ck)


def left_restrict(p: MonoidHom, n: LeftModule) -> LeftModule:
    """Pull a left module over p.dst back to p.src."""
    if n.alg != p.dst:
        raise MediatingError("module not over the expected algebra")
    act = compose(n.act, tensor_map(p.map, identity_map(n.carrier)))
    return LeftModule(p.src, n.carrier, act)


def right_restrict(p: MonoidHom, m: RightModule) -> RightModule:
    if m.alg != p.dst:
        raise MediatingError("module not over the expected algebra")
    act = compose(m.act, tensor_map(identity_map(m.carrier), p.map))
    return RightModule(p.src, m.carrier, act)


def algebra_as_left_module(r: DGAlgebra) -> LeftModule:
    return LeftModule(r, r.carrier, r.mult)


def algebra_as_right_module(r: DGAlgebra) -> RightModule:
    return RightModule(r, r.carrier, r.mult)


def ideal_as_left_module(s: SmithIdeal) -> LeftModule:
    return LeftModule(s.alg, s.ideal.carrier, s.ideal.left)


# ---------------------------------------------------------------------------
# Smith modules (right modules over a Smith ideal) and their unwinding


@dataclass(frozen=True, eq=False)
class SmithModule:
    over: SmithIdeal
    f: ChainMap              # M0 -> M1
    m0: RightModule          # over R
    m1: RightModule
    phi: ChainMap            # (M1 (x)_R I) -> M0, source the canonical tensor_over

    def __eq__(self, other):
        if not isinstance(other, SmithModule):
            return NotImplemented
        return (
            self.over == other.over
            and self.f == other.f
            and self.m0 == other.m0
            and self.m1 == other.m1
            and self.phi == other.phi
        )


def ideal_action_tensor(m1: RightModule, s: SmithIdeal) -> TensorOver:
    return tensor_over(m1, ideal_as_left_module(s))


def phi_tilde(m: SmithModule) -> ChainMap:
    """phi before descending: M1 (x) I -> M0."""
    t = ideal_action_tensor(m.m1, m.over)
    return compose(m.phi, t.proj)


def validate_smith_module(m: SmithModule) -> str | None:
    bad = validate_smith_ideal(m.over)
    if bad:
        return f"ideal: {bad}"
    if m.m0.alg != m.over.alg or m.m1.alg != m.over.alg:
        return "module carriers are not over the ideal's algebra"
    for tag, mod in (("M0", m.m0), ("M1", m.m1)):
        bad = validate_right_module(mod)
        if bad:
            return f"{tag}: {bad}"
    R = m.over.alg.carrier
    I = m.over.ideal.carrier
    M0, M1 = m.m0.carrier, m.m1.carrier
    if m.f.src != M0 or m.f.dst != M1:
        return "f has wrong endpoints"
    if compose(m.f, m.m0.act) != compose(m.m1.act, tensor_map(m.f, identity_map(R))):
        return "f is not right R-linear"
    t = ideal_action_tensor(m.m1, m.over)
    if m.phi.src != t.obj or m.phi.dst != M0:
        return "phi has wrong endpoints"
    act_t = induced_right_action_on_tensor(m.m1, m.over)
    if compose(m.phi, act_t.act) != compose(
        m.m0.act, tensor_map(m.phi, identity_map(R))
    ):
        return "phi is not right R-linear"
    pt = compose(m.phi, t.proj)
    # square (a): phi-tilde . (f (x) 1) = act0 . (1 (x) j) on M0 (x) I
    lhs = compose(pt, tensor_map(m.f, identity_map(I)))
    rhs = compose(m.m0.act, tensor_map(identity_map(M0), m.over.j))
    if lhs != rhs:
        return "module square on M0 (x) I fails"
    # square (b): f . phi-tilde = act1 . (1 (x) j) on M1 (x) I
    lhs = compose(m.f, pt)
    rhs = compose(m.m1.act, tensor_map(identity_map(M1), m.over.j))
    if lhs != rhs:
        return "module square on M1 (x) I fails"
    return None


def induced_right_action_on_tensor(m1: RightModule, s: SmithIdeal) -> RightModule:
    """The right R-action on M1 (x)_R I through the right action on I."""
    t = ideal_action_tensor(m1, s)
    M1, I, R = m1.carrier, s.ideal.carrier, s.alg.carrier
    raw = compose(
        t.proj,
        compose(tensor_map(identity_map(M1), s.ideal.right), assoc_iso(M1, I, R)),
    )
    act = induce_through_surjection(tensor_map(t.proj, identity_map(R)), raw)
    return RightModule(s.alg, t.obj, act)


def action_square(m: SmithModule) -> ArrowSquare:
    """The action f [] j -> f in the arrow category, rebuilt from unwound data."""
    j = arrow(m.over.j)
    fm = arrow(m.f)
    pp = pushout_product(fm, j)
    a0 = pp.po.mediate(m.m0.act, phi_tilde(m))
    return square(pp.arrow, fm, a0, m.m1.act)


def smith_module_from_action(s: SmithIdeal, fm: ArrowObject, act_sq: ArrowSquare) -> SmithModule:
    """Unwind an action square (fm [] j) -> fm into Smith-module data."""
    pp = pushout_product(fm, arrow(s.j))
    act0 = compose(act_sq.a0, pp.inj_dom_cod)   # M0 (x) R -> M0
    pt = compose(act_sq.a0, pp.inj_cod_dom)     # M1 (x) I -> M0
    m0 = RightModule(s.alg, fm.dom, act0)
    m1 = RightModule(s.alg, fm.cod, act_sq.a1)
    t = ideal_action_tensor(m1, s)
    phi = induce_through_surjection(t.proj, pt)
    return SmithModule(s, fm.f, m0, m1, phi)


def unit_module(s: SmithIdeal) -> SmithModule:
    """j itself as a right module over the Smith ideal."""
    R = s.alg.carrier
    m0 = RightModule(s.alg, s.ideal.carrier, s.ideal.right)
    m1 = algebra_as_right_module(s.alg)
    t = ideal_action_tensor(m1, s)
    phi = induce_through_surjection(t.proj, s.ideal.left)
    return SmithModule(s, s.j, m0, m1, phi)


def zero_module(s: SmithIdeal) -> SmithModule:
    z = zero_complex(s.alg.carrier.field)
    m0 = RightModule(s.alg, z, zero_map(tensor_complex(z, s.alg.carrier), z))
    t = ideal_action_tensor(m0, s)
    return SmithModule(s, identity_map(z), m0, m0, zero_map(t.obj, z))


def free_smith_module(s: SmithIdeal, g: ArrowObject) -> SmithModule:
    """g [] j with the free action (g [] j) [] j -> g [] (j [] j) -> g [] j."""
    sm = smith_to_square_monoid(s)
    gj = pushout_product(g, sm.obj)
    w = pushout_product_associativity(g, sm.obj, sm.obj)
    assoc_sq = compose_squares(w.cube_to_right, w.left_to_cube)
    act_sq = compose_squares(
        pushout_product_square(identity_square(g), sm.mult), assoc_sq
    )
    mod = smith_module_from_action(s, gj.arrow, act_sq)
    bad = validate_smith_module(mod)
    if bad:
        raise MediatingError(f"free module failed validation: {bad}")
    return mod


# ---------------------------------------------------------------------------
# Modules over a monoid homomorphism (tensor structure)


@dataclass(frozen=True, eq=False)
class TensorMonoidModule:
    over: MonoidHom
    f: ChainMap              # M0 -> M1
    m0: RightModule          # over src
    m1: RightModule          # over dst

    def __eq__(self, other):
        if not isinstance(other, TensorMonoidModule):
            return NotImplemented
        return (
            self.over == other.over
            and self.f == other.f
            and self.m0 == other.m0
            and self.m1 == other.m1
        )


def validate_tensor_monoid_module(m: TensorMonoidModule) -> str | None:
    bad = validate_monoid_hom(m.over)
    if bad:
        return f"hom: {bad}"
    if m.m0.alg != m.over.src or m.m1.alg != m.over.dst:
        return "module carriers over the wrong algebras"
    for tag, mod, validator in (("M0", m.m0, validate_right_module), ("M1", m.m1, validate_right_module)):
        bad = validator(mod)
        if bad:
            return f"{tag}: {bad}"
    if m.f.src != m.m0.carrier or m.f.dst != m.m1.carrier:
        return "f has wrong endpoints"
    restricted = right_restrict(m.over, m.m1)
    if compose(m.f, m.m0.act) != compose(restricted.act, tensor_map(m.f, identity_map(m.over.src.carrier))):
        return "f is not linear over the source algebra"
    return None


# ---------------------------------------------------------------------------
# Cokernel and kernel of modules


def module_coker(m: SmithModule) -> TensorMonoidModule:
    """Transport a Smith module along coker: (M1, coker f) over R -> R/I."""
    from .dg import quotient_dga

    p = quotient_dga(m.over)
    ck = cokernel(m.f)
    c_act = induce_through_surjection(
        tensor_map(ck.proj, p.map), compose(ck.proj, m.m1.act)
    )
    out = TensorMonoidModule(
        p,
        ck.proj,
        m.m1,
        RightModule(p.dst, ck.obj, c_act),
    )
    bad = validate_tensor_monoid_module(out)
    if bad:
        raise MediatingError(f"module cokernel failed validation: {bad}")
    return out


def module_ker(n: TensorMonoidModule) -> SmithModule:
    """Transport a module over p: R -> R' along ker: (ker f, M0) over ker(p)."""
    from .dg import kernel_smith_ideal

    s = kernel_smith_ideal(n.over)
    k = kernel(n.f)
    R = n.over.src.carrier
    act_k = lift_through_injection(
        k.incl, compose(n.m0.act, tensor_map(k.incl, identity_map(R)))
    )
    pt = lift_through_injection(
        k.incl,
        compose(n.m0.act, tensor_map(identity_map(n.m0.carrier), s.j)),
    )
    m1 = n.m0
    t = ideal_action_tensor(m1, s)
    phi = induce_through_surjection(t.proj, pt)
    out = SmithModule(s, k.incl, RightModule(n.over.src, k.obj, act_k), m1, phi)
    bad = validate_smith_module(out)
    if bad:
        raise MediatingError(f"module kernel failed validation: {bad}")
    return out


# ---------------------------------------------------------------------------
# Maps of Smith ideals; restriction and extension of scalars


@dataclass(frozen=True, eq=False)
class SmithIdealMap:
    src: SmithIdeal
    dst: SmithIdeal
    a0: ChainMap   # I -> I'
    a1: ChainMap   # R -> R'

    def __eq__(self, other):
        if not isinstance(other, SmithIdealMap):
            return NotImplemented
        return (
            self.src == other.src
            and self.dst == other.dst
            and self.a0 == other.a0
            and self.a1 == other.a1
        )


def validate_smith_ideal_map(a: SmithIdealMap) -> str | None:
    hom = MonoidHom(a.src.alg, a.dst.alg, a.a1)
    bad = validate_monoid_hom(hom)
    if bad:
        return f"algebra map: {bad}"
    if compose(a.dst.j, a.a0) != compose(a.a1, a.src.j):
        return "square with j does not commute"
    if compose(a.a0, a.src.ideal.left) != compose(a.dst.ideal.left, tensor_map(a.a1, a.a0)):
        return "left actions are not intertwined"
    if compose(a.a0, a.src.ideal.right) != compose(a.dst.ideal.right, tensor_map(a.a0, a.a1)):
        return "right actions are not intertwined"
    return None


def identity_smith_ideal_map(s: SmithIdeal) -> SmithIdealMap:
    return SmithIdealMap(s, s, identity_map(s.ideal.carrier), identity_map(s.alg.carrier))


def restrict_scalars(a: SmithIdealMap, n: SmithModule) -> SmithModule:
    """Pull a module over dst back along a; carriers unchanged."""
    if n.over != a.dst:
        raise MediatingError("module is not over the target ideal")
    hom = MonoidHom(a.src.alg, a.dst.alg, a.a1)
    m0 = right_restrict(hom, n.m0)
    m1 = right_restrict(hom, n.m1)
    t_src = ideal_action_tensor(m1, a.src)
    t_dst = ideal_action_tensor(n.m1, a.dst)
    w = induce_through_surjection(
        t_src.proj, compose(t_dst.proj, tensor_map(identity_map(n.m1.carrier), a.a0))
    )
    out = SmithModule(a.src, n.f, m0, m1, compose(n.phi, w))
    bad = validate_smith_module(out)
    if bad:
        raise MediatingError(f"restriction failed validation: {bad}")
    return out


@dataclass(frozen=True)
class Extension:
    module: SmithModule
    canonical: ArrowSquare   # (M [] j') -> extended module's arrow


def extend_scalars(a: SmithIdealMap, m: SmithModule) -> Extension:
    """M []_j j': degree-1 part M1 (x)_R R', degree-0 part the stated pushout."""
    if m.over != a.src:
        raise MediatingError("module is not over the source ideal")
    hom = MonoidHom(a.src.alg, a.dst.alg, a.a1)
    Rp = a.dst.alg
    R = a.src.alg
    M0, M1 = m.m0.carrier, m.m1.carrier
    Ip = a.dst.ideal.carrier
    Rc, Rpc, Ic = R.carrier, Rp.carrier, a.src.ideal.carrier

    rp_left = left_restrict(hom, algebra_as_left_module(Rp))       # R' as left R-module
    ip_left = left_restrict(hom, ideal_as_left_module(a.dst))      # I' as left R-module

    t1 = tensor_over(m.m1, rp_left)            # M1 (x)_R R'
    A = tensor_over(m.m0, rp_left)             # M0 (x)_R R'
    B = tensor_over(m.m1, ip_left)             # M1 (x)_R I'
    t_mid_inner = induced_right_action_on_tensor(m.m1, a.src)   # (M1 (x)_R I) right R-module
    t_i = ideal_action_tensor(m.m1, a.src)
    Pmid = tensor_over(t_mid_inner, rp_left)   # (M1 (x)_R I) (x)_R R'

    # u1: M0 (x)_R I' -> M0 (x)_R R' through 1 (x) j'
    P1 = tensor_over(m.m0, ip_left)
    u1 = induce_through_surjection(
        P1.proj, compose(A.proj, tensor_map(identity_map(M0), a.dst.j))
    )
    # u2: (M1 (x)_R I) (x)_R R' -> M0 (x)_R R' through phi (x) 1
    s_mid = compose(Pmid.proj, tensor_map(t_i.proj, identity_map(Rpc)))
    u2 = induce_through_surjection(
        Pmid.proj, compose(A.proj, tensor_map(m.phi, identity_map(Rpc)))
    )
    # v1: M0 (x)_R I' -> M1 (x)_R I' through f (x) 1
    v1 = induce_through_surjection(
        P1.proj, compose(B.proj, tensor_map(m.f, identity_map(Ip)))
    )
    # v2: (M1 (x)_R I) (x)_R R' -> M1 (x)_R I' through 1 (x) (alpha0 . -)
    act_ip = compose(a.dst.ideal.right, tensor_map(a.a0, identity_map(Rpc)))  # I (x) R' -> I'
    raw_v2 = compose(
        B.proj,
        compose(tensor_map(identity_map(M1), act_ip), assoc_iso(M1, Ic, Rpc)),
    )
    v2 = induce_through_surjection(s_mid, raw_v2)

    bp = biproduct([P1.obj, Pmid.obj])
    u = add_maps(compose(u1, bp.projs[0]), compose(u2, bp.projs[1]))
    v = add_maps(compose(v1, bp.projs[0]), compose(v2, bp.projs[1]))
    po = pushout(u, v)
    P0 = po.obj

    # canonical iso (M1 (x)_R R') (x)_{R'} I' ~ M1 (x)_R I'
    m1_ext = RightModule(
        Rp,
        t1.obj,
        induce_through_surjection(
            tensor_map(t1.proj, identity_map(Rpc)),
            compose(t1.proj, compose(tensor_map(identity_map(M1), Rp.mult), assoc_iso(M1, Rpc, Rpc))),
        ),
    )
    t_prime = ideal_action_tensor(m1_ext, a.dst)
    s3 = compose(t_prime.proj, tensor_map(t1.proj, identity_map(Ip)))
    psi = induce_through_surjection(
        s3,
        compose(
            B.proj,
            compose(tensor_map(identity_map(M1), a.dst.ideal.left), assoc_iso(M1, Rpc, Ip)),
        ),
    )
    unit_in = tensor_map(identity_map(M1), Rp.unit)   # M1 = M1 (x) S -> M1 (x) R'
    psi_inv = induce_through_surjection(
        B.proj, compose(t_prime.proj, tensor_map(compose(t1.proj, unit_in), identity_map(Ip)))
    )
    if compose(psi, psi_inv) != identity_map(B.obj) or compose(psi_inv, psi) != identity_map(t_prime.obj):
        raise MediatingError("tensor collapse iso failed")

    phi_ext = compose(po.right, psi)

    # f': P0 -> M1 (x)_R R' mediating over the pushout
    a_leg = induce_through_surjection(
        A.proj, compose(t1.proj, tensor_map(m.f, identity_map(Rpc)))
    )
    b_leg = induce_through_surjection(
        B.proj, compose(t1.proj, tensor_map(identity_map(M1), a.dst.j))
    )
    f_ext = po.mediate(a_leg, b_leg)

    # right R'-actions on A, B and then on the pushout
    act_A = induce_through_surjection(
        tensor_map(A.proj, identity_map(Rpc)),
        compose(A.proj, compose(tensor_map(identity_map(M0), Rp.mult), assoc_iso(M0, Rpc, Rpc))),
    )
    act_B = induce_through_surjection(
        tensor_map(B.proj, identity_map(Rpc)),
        compose(B.proj, compose(tensor_map(identity_map(M1), a.dst.ideal.right), assoc_iso(M1, Ip, Rpc))),
    )
    bp2 = biproduct([A.obj, B.obj])
    raw_act = add_maps(
        compose(compose(po.left, act_A), tensor_map(bp2.projs[0], identity_map(Rpc))),
        compose(compose(po.right, act_B), tensor_map(bp2.projs[1], identity_map(Rpc))),
    )
    # cover (A (+) B) (x) R' ->> P0 (x) R'
    po_from_bp = add_maps(compose(po.left, bp2.projs[0]), compose(po.right, bp2.projs[1]))
    act_P0 = induce_through_surjection(tensor_map(po_from_bp, identity_map(Rpc)), raw_act)

    mod = SmithModule(
        a.dst,
        f_ext,
        RightModule(Rp, P0, act_P0),
        m1_ext,
        phi_ext,
    )
    bad = validate_smith_module(mod)
    if bad:
        raise MediatingError(f"extension failed validation: {bad}")

    # canonical square from M [] j'
    mj = pushout_product(arrow(m.f), arrow(a.dst.j))
    can1 = t1.proj
    can0 = mj.po.mediate(
        compose(po.left, A.proj),
        compose(po.right, B.proj),
    )
    can = square(mj.arrow, arrow(f_ext), can0, can1)
    return Extension(mod, can)


def extend_scalars_oracle(a: SmithIdealMap, m: SmithModule) -> Extension:
    """M []_j j' computed directly as the coequalizer of M [] j [] j' => M [] j'.

    One map is the action of j on M, the other the action of j on j' through
    alpha; the coequalizer is a componentwise cokernel in the arrow category.
    This is the independent cross-check for extend_scalars.
    """
    if m.over != a.src:
        raise MediatingError("module is not over the source ideal")
    j = arrow(a.src.j)
    jp = arrow(a.dst.j)
    fm = arrow(m.f)
    mj = pushout_product(fm, j)
    mjp = pushout_product(fm, jp)

    # b: (M [] j) [] j' -> M [] j' via the module action
    act_sq = action_square(m)
    b_sq = pushout_product_square(act_sq, identity_square(jp))

    # a: (M [] j) [] j' -> M [] (j [] j') -> M [] j' via j acting on j'
    w = pushout_product_associativity(fm, j, jp)
    assoc_sq = compose_squares(w.cube_to_right, w.left_to_cube)
    jjp = pushout_product(j, jp)
    lam0 = jjp.po.mediate(
        compose(a.dst.ideal.right, tensor_map(a.a0, identity_map(a.dst.alg.carrier))),
        compose(a.dst.ideal.left, tensor_map(a.a1, identity_map(a.dst.ideal.carrier))),
    )
    lam1 = compose(a.dst.alg.mult, tensor_map(a.a1, identity_map(a.dst.alg.carrier)))
    lam = square(jjp.arrow, jp, lam0, lam1)
    a_sq = compose_squares(pushout_product_square(identity_square(fm), lam), assoc_sq)

    diff0 = sub_maps(a_sq.a0, b_sq.a0)
    diff1 = sub_maps(a_sq.a1, b_sq.a1)
    e0 = cokernel(diff0)
    e1 = cokernel(diff1)
    e_map = induce_through_surjection(e0.proj, compose(e1.proj, mjp.arrow.f))
    rho = square(mjp.arrow, arrow(e_map), e0.proj, e1.proj)

    # transport the module structure along rho
    Rp = a.dst.alg
    Rpc = Rp.carrier
    sm_p = smith_to_square_monoid(a.dst)
    w2 = pushout_product_associativity(fm, jp, jp)
    assoc2 = compose_squares(w2.cube_to_right, w2.left_to_cube)
    nu = compose_squares(pushout_product_square(identity_square(fm), sm_p.mult), assoc2)
    mjp2 = pushout_product(mjp.arrow, jp)
    act_dom = compose(nu.a0, mjp2.inj_dom_cod)      # dom(M [] j') (x) R' -> dom(M [] j')
    pt_raw = compose(nu.a0, mjp2.inj_cod_dom)       # (M1 (x) R') (x) I' -> dom(M [] j')
    act_e1 = induce_through_surjection(
        tensor_map(e1.proj, identity_map(Rpc)), compose(e1.proj, nu.a1)
    )
    act_e0 = induce_through_surjection(
        tensor_map(e0.proj, identity_map(Rpc)), compose(e0.proj, act_dom)
    )
    m1_e = RightModule(Rp, e1.obj, act_e1)
    pt_e = induce_through_surjection(
        tensor_map(e1.proj, identity_map(a.dst.ideal.carrier)), compose(e0.proj, pt_raw)
    )
    t_e = ideal_action_tensor(m1_e, a.dst)
    phi_e = induce_through_surjection(t_e.proj, pt_e)
    mod = SmithModule(a.dst, e_map, RightModule(Rp, e0.obj, act_e0), m1_e, phi_e)
    bad = validate_smith_module(mod)
    if bad:
        raise MediatingError(f"oracle extension failed validation: {bad}")
    return Extension(mod, rho)


@dataclass(frozen=True)
class ModuleIso:
    fwd: ArrowSquare
    inv: ArrowSquare


def certify_extension_iso(direct: Extension, oracle: Extension) -> ModuleIso:
    """The unique iso between the two extensions commuting with the canonical
    surjections from M [] j'; composes to the identity both ways."""
    f0 = induce_through_surjection(oracle.canonical.a0, direct.canonical.a0)
    f1 = induce_through_surjection(oracle.canonical.a1, direct.canonical.a1)
    g0 = induce_through_surjection(direct.canonical.a0, oracle.canonical.a0)
    g1 = induce_through_surjection(direct.canonical.a1, oracle.canonical.a1)
    if compose(g0, f0) != identity_map(f0.src) or compose(f0, g0) != identity_map(g0.src):
        raise MediatingError("extension isos do not invert on ev0")
    if compose(g1, f1) != identity_map(f1.src) or compose(f1, g1) != identity_map(g1.src):
        raise MediatingError("extension isos do not invert on ev1")
    oarr = arrow(oracle.module.f)
    darr = arrow(direct.module.f)
    return ModuleIso(square(oarr, darr, f0, f1), square(darr, oarr, g0, g1))


# ---------------------------------------------------------------------------
# Hom spaces of module maps (for adjunction dimension checks)


def _stack_residuals(residual_lists: list[list[Matrix]]) -> int:
    """Nullity of the linear conditions evaluated on a basis."""
    if not residual_lists:
        return 0
    cols = []
    for res in residual_lists:
        vec = np.concatenate([r.a.reshape(-1) for r in res]) if res else np.zeros(0, dtype=np.int64)
        cols.append(vec)
    big = np.stack(cols, axis=1) if cols else np.zeros((0, 0), dtype=np.int64)
    field = None
    for res in residual_lists:
        if res:
            field = res[0].field
            break
    if field is None or big.shape[0] == 0:
        return len(residual_lists)
    return kernel_basis(Matrix.make(field, big)).cols


def _pair_basis(src0, dst0, src1, dst1):
    b0 = chain_map_space(src0, dst0)
    b1 = chain_map_space(src1, dst1)
    pairs = [(h, zero_map(src1, dst1)) for h in b0]
    pairs += [(zero_map(src0, dst0), h) for h in b1]
    return pairs


def _map_residual(f: ChainMap) -> list[Matrix]:
    return [f.at(n) for n in range(min(f.src.lo, f.dst.lo), max(f.src.hi, f.dst.hi) + 1)]


def smith_module_hom_dim(m: SmithModule, n: SmithModule) -> int:
    """dim of the space of module maps m -> n over their common Smith ideal."""
    if m.over != n.over:
        raise MediatingError("modules over different ideals")
    R = m.over.alg.carrier
    I = m.over.ideal.carrier
    ptm = phi_tilde(m)
    ptn = phi_tilde(n)
    residuals = []
    for h0, h1 in _pair_basis(m.m0.carrier, n.m0.carrier, m.m1.carrier, n.m1.carrier):
        res = []
        res += _map_residual(sub_maps(compose(h1, m.f), compose(n.f, h0)))
        res += _map_residual(
            sub_maps(compose(h0, m.m0.act), compose(n.m0.act, tensor_map(h0, identity_map(R))))
        )
        res += _map_residual(
            sub_maps(compose(h1, m.m1.act), compose(n.m1.act, tensor_map(h1, identity_map(R))))
        )
        res += _map_residual(
            sub_maps(compose(h0, ptm), compose(ptn, tensor_map(h1, identity_map(I))))
        )
        residuals.append(res)
    return _stack_residuals(residuals)


def tensor_monoid_module_hom_dim(m: TensorMonoidModule, n: TensorMonoidModule) -> int:
    if m.over != n.over:
        raise MediatingError("modules over different homomorphisms")
    R0 = m.over.src.carrier
    R1 = m.over.dst.carrier
    residuals = []
    for h0, h1 in _pair_basis(m.m0.carrier, n.m0.carrier, m.m1.carrier, n.m1.carrier):
        res = []
        res += _map_residual(sub_maps(compose(h1, m.f), compose(n.f, h0)))
        res += _map_residual(
            sub_maps(compose(h0, m.m0.act), compose(n.m0.act, tensor_map(h0, identity_map(R0))))
        )
        res += _map_residual(
            sub_maps(compose(h1, m.m1.act), compose(n.m1.act, tensor_map(h1, identity_map(R1))))
        )
        residuals.append(res)
    return _stack_residuals(residuals)


# ---------------------------------------------------------------------------
# Free and finite-cell modules


def free_right_module(r: DGAlgebra, cells: ChainComplex) -> RightModule:
    """cells (x) R with multiplication on the right factor."""
    R = r.carrier
    carrier = tensor_complex(cells, R)
    act = compose(tensor_map(identity_map(cells), r.mult), assoc_iso(cells, R, R))
    return RightModule(r, carrier, act)


def free_left_module(r: DGAlgebra, cells: ChainComplex) -> LeftModule:
    R = r.carrier
    carrier = tensor_complex(R, cells)
    act = compose(tensor_map(r.mult, identity_map(cells)), assoc_iso_inv(R, R, cells))
    return LeftModule(r, carrier, act)


def module_direct_sum(parts: list[RightModule]):
    """Biproduct of right modules with blockwise action; returns (module, incls, projs)."""
    alg = parts[0].alg
    R = alg.carrier
    bp = biproduct([p.carrier for p in parts])
    act = None
    for k, p in enumerate(parts):
        piece = compose(compose(bp.incls[k], p.act), tensor_map(bp.projs[k], identity_map(R)))
        act = piece if act is None else add_maps(act, piece)
    return RightModule(alg, bp.total, act), bp.incls, bp.projs


def cone_module(m: RightModule, z: ChainMap) -> tuple[RightModule, ChainMap]:
    """Attach a free cell along the cycle z: S^d -> M.

    The result is the cone of the module map S^d (x) R -> M over z, i.e. the
    pushout of a generating cofibration of R-modules; returns (C, M -> C).
    """
    r = m.alg
    R = r.carrier
    F = free_right_module(r, z.src)
    alpha = compose(m.act, tensor_map(z, identity_map(R)))
    c_obj, incl_m = cone(alpha)
    p = R.field.p
    comps = {}
    for n in c_obj.degrees():
        crn = tensor_complex(c_obj, R).dim(n)
        if not (c_obj.dim(n) and crn):
            continue
        mtx = np.zeros((c_obj.dim(n), crn), dtype=np.int64)
        mn = m.carrier.dim(n)
        src_off = _block_offsets(_blocks(c_obj, R, n))
        m_off = _block_offsets(_blocks(m.carrier, R, n))
        f_off = _block_offsets(_blocks(F.carrier, R, n - 1))
        for (i, jdeg), o in src_off.items():
            rj = R.dim(jdeg)
            mi = m.carrier.dim(i)
            fi = F.carrier.dim(i - 1)
            if mi and m.carrier.dim(n):
                blk = m.act.at(n).a[:, m_off[(i, jdeg)] : m_off[(i, jdeg)] + mi * rj]
                mtx[:mn, o : o + mi * rj] = blk
            if fi and F.carrier.dim(n - 1):
                blk = F.act.at(n - 1).a[:, f_off[(i - 1, jdeg)] : f_off[(i - 1, jdeg)] + fi * rj]
                mtx[mn:, o + mi * rj : o + (mi + fi) * rj] = blk
        comps[n] = Matrix.make(R.field, mtx)
    act = chain_map(tensor_complex(c_obj, R), c_obj, comps)
    return RightModule(r, c_obj, act), incl_m


# ---------------------------------------------------------------------------
# Strong-quotient evidence


@dataclass(frozen=True)
class CellApproximation:
    module: RightModule
    to_target: ChainMap
    converged: bool


def cell_approximation(n: RightModule, cutoff: int, max_rounds: int = 24) -> CellApproximation:
    """A finite-cell (hence cofibrant) right module mapping to n, built by
    attaching free cells until the comparison is a homology iso below cutoff.

    Sweeps degrees bottom-up; each round adds generators for missing homology
    and cones off spurious cycles.  May fail to converge when the algebra has
    homology in negative degrees; the flag reports that honestly.
    """
    r = n.alg
    field = r.carrier.field
    z = zero_complex(field)
    q = RightModule(r, z, zero_map(tensor_complex(z, r.carrier), z))
    eps = zero_map(z, n.carrier)
    lo = min(n.carrier.lo, r.carrier.lo + n.carrier.lo) - 1
    for _ in range(max_rounds):
        d = _lowest_defect(eps, lo, cutoff)
        if d is None:
            return CellApproximation(q, eps, True)
        q, eps = _fix_degree(q, eps, n, d)
    return CellApproximation(q, eps, _lowest_defect(eps, lo, cutoff) is None)


def _lowest_defect(eps: ChainMap, lo: int, cutoff: int) -> int | None:
    hq = homology(eps.src)
    hn = homology(eps.dst)
    for d in range(lo, cutoff):
        if hq.dim(d) != hn.dim(d):
            return d
        if hq.dim(d) == 0:
            continue
        zq = hq.cycles[d]
        bn = hn.boundaries[d]
        induced = (eps.at(d) @ zq).hstack(bn)
        from .field import rank

        if rank(induced) - bn.cols != hq.dim(d):
            return d
    return None


def _fix_degree(q: RightModule, eps: ChainMap, n: RightModule, d: int):
    """Add cells in degree d: new generators for cokernel classes, cones for
    kernel classes."""
    field = n.alg.carrier.field
    # missing homology: free generators mapped onto representative cycles
    missing = _coker_classes(eps, d)
    for col in range(missing.cols):
        cell = sphere(field, d)
        gen, incls, projs = module_direct_sum([q, free_right_module(n.alg, cell)])
        new_eps_piece = compose(
            n.act, tensor_map(chain_map(cell, n.carrier, {d: missing.col(col)}), identity_map(n.alg.carrier))
        )
        eps = add_maps(compose(eps, projs[0]), compose(new_eps_piece, projs[1]))
        q = gen
    # spurious homology: cone off cycles that die in n
    kill, witnesses = _kernel_classes(eps, d)
    for col in range(kill.cols):
        zmap = chain_map(sphere(field, d), q.carrier, {d: kill.col(col)})
        q2, incl = cone_module(q, zmap)
        eps = _extend_over_cone(q2, incl, eps, witnesses.col(col), d, n)
        q = q2
    return q, eps


def _coker_classes(eps: ChainMap, d: int) -> Matrix:
    """Cycles of the target spanning coker(H_d(eps))."""
    from .field import complete_to_basis, image_basis

    hn = homology(eps.dst)
    if hn.dim(d) == 0:
        return Matrix.zeros(eps.src.field, eps.dst.dim(d), 0)
    zn = hn.cycles[d]
    bn = hn.boundaries[d]
    hq = homology(eps.src)
    img = eps.at(d) @ hq.cycles[d] if hq.cycles.get(d) is not None else Matrix.zeros(
        eps.src.field, eps.dst.dim(d), 0
    )
    have = image_basis(img.hstack(bn))
    # choose cycles extending (image + boundaries) inside the cycle space
    from .field import complete_to_basis

    sol_have = _solve_into(zn, have)
    return zn @ complete_to_basis(sol_have)


def _solve_into(basis: Matrix, vecs: Matrix) -> Matrix:
    from .field import solve

    sol = solve(basis, vecs)
    if sol is None:
        raise MediatingError("vectors do not lie in the span")
    return sol


def _kernel_classes(eps: ChainMap, d: int):
    """Cycle representatives in the source whose classes die in the target,
    together with witnesses eps(z) = d(w)."""
    from .field import solve

    field = eps.src.field
    hq = homology(eps.src)
    if hq.dim(d) == 0:
        return Matrix.zeros(field, eps.src.dim(d), 0), Matrix.zeros(field, eps.dst.dim(d + 1), 0)
    zq = hq.cycles[d]
    bq = hq.boundaries[d]
    bn_mat = eps.dst.d(d + 1)
    # kernel of H_d(eps): combos c with eps(zq c) in boundaries, modulo source boundaries
    stack = (eps.at(d) @ zq).hstack(bn_mat)
    kb = kernel_basis(stack)
    combos = Matrix.make(field, kb.a[: zq.cols, :])
    wit_part = Matrix.make(field, kb.a[zq.cols :, :])
    # quotient by combos coming from source boundaries
    sol = _solve_into(zq, bq)
    full = combos.hstack(sol)
    from .field import rref

    red, pivots = rref(full)
    keep = [c for c in pivots if c < combos.cols]
    if not keep:
        return Matrix.zeros(field, eps.src.dim(d), 0), Matrix.zeros(field, eps.dst.dim(d + 1), 0)
    sel = np.array(keep, dtype=np.int64)
    combos_keep = Matrix.make(field, combos.a[:, sel])
    wit_keep = Matrix.make(field, wit_part.a[:, sel])
    return zq @ combos_keep, Matrix.make(field, (-wit_keep.a) % field.p)


def _extend_over_cone(
    q2: RightModule, incl: ChainMap, eps: ChainMap, witness: Matrix, d: int, n: RightModule
):
    """Extend eps over a cone attachment using the boundary witness."""
    field = n.alg.carrier.field
    R = n.alg.carrier
    comps = {}
    old = eps
    for deg in q2.carrier.degrees():
        if not (q2.carrier.dim(deg) and n.carrier.dim(deg)):
            continue
        mn = old.src.dim(deg)
        mtx = np.zeros((n.carrier.dim(deg), q2.carrier.dim(deg)), dtype=np.int64)
        if mn:
            mtx[:, :mn] = old.at(deg).a
        # F_{deg-1} part: w(x) = act_n(witness (x) x-coefficients)
        rdim = R.dim(deg - 1 - d)
        if rdim:
            act_blk = _action_block(n, d + 1, deg - 1 - d)
            w = (act_blk @ np.kron(witness.a, np.eye(rdim, dtype=np.int64))) % field.p
            mtx[:, mn : mn + rdim] = w
        comps[deg] = Matrix.make(field, mtx)
    return chain_map(q2.carrier, n.carrier, comps)


def _action_block(n: RightModule, i: int, j: int) -> np.ndarray:
    """The (N_i, R_j) block of the action matrix (N (x) R)_{i+j} -> N_{i+j}."""
    deg = i + j
    offs = _block_offsets(_blocks(n.carrier, n.alg.carrier, deg))
    o = offs[(i, j)]
    w = n.carrier.dim(i) * n.alg.carrier.dim(j)
    return n.act.at(deg).a[:, o : o + w]


# ---------------------------------------------------------------------------
# Truncated free monoid on an arrow


def free_smith_ideal_truncated(f: ArrowObject, n: int) -> SmithIdeal:
    """The tensor algebra on f in the pushout-product structure, truncated at
    word length n: sum of [] powers with concatenation, products landing
    above level n set to zero.

    The genuine free monoid needs countable coproducts; only this truncation
    is computable here.  Each concatenation X^[]a [] X^[]b -> X^[](a+b) is the
    certified associativity isomorphism, so the result validates as a Smith
    ideal of the truncated tensor algebra.
    """
    if n < 0:
        raise ValueError("truncation level must be nonnegative")
    from .arrows import L1

    field = f.dom.field
    S = unit_complex(field)
    powers: list[ArrowObject] = [L1(S)]
    for _ in range(n):
        powers.append(pushout_product(powers[-1], f).arrow)

    mu: dict[tuple[int, int], ArrowSquare] = {}
    for a in range(n + 1):
        mu[(a, 0)] = identity_square(powers[a])
    for b in range(1, n + 1):
        mu[(0, b)] = identity_square(powers[b])
    for total in range(2, n + 1):
        for a in range(1, total):
            b = total - a
            if (a, b) in mu:
                continue
            w = pushout_product_associativity(powers[a], powers[b - 1], f)
            assoc_rl = compose_squares(w.cube_to_left, w.right_to_cube)
            mu[(a, b)] = compose_squares(
                pushout_product_square(mu[(a, b - 1)], identity_square(f)), assoc_rl
            )

    r_bp = biproduct([p.cod for p in powers])
    i_bp = biproduct([p.dom for p in powers])
    r_tot, i_tot = r_bp.total, i_bp.total

    j_t = None
    for k, p in enumerate(powers):
        piece = compose(compose(r_bp.incls[k], p.f), i_bp.projs[k])
        j_t = piece if j_t is None else add_maps(j_t, piece)

    mult = None
    left = None
    right = None
    for a in range(n + 1):
        for b in range(n + 1):
            if a + b > n:
                continue
            pp_ab = pushout_product(powers[a], powers[b])
            m_piece = compose(
                compose(r_bp.incls[a + b], mu[(a, b)].a1),
                tensor_map(r_bp.projs[a], r_bp.projs[b]),
            )
            mult = m_piece if mult is None else add_maps(mult, m_piece)
            l_piece = compose(
                compose(i_bp.incls[a + b], compose(mu[(a, b)].a0, pp_ab.inj_cod_dom)),
                tensor_map(r_bp.projs[a], i_bp.projs[b]),
            )
            left = l_piece if left is None else add_maps(left, l_piece)
            r_piece = compose(
                compose(i_bp.incls[a + b], compose(mu[(a, b)].a0, pp_ab.inj_dom_cod)),
                tensor_map(i_bp.projs[a], r_bp.projs[b]),
            )
            right = r_piece if right is None else add_maps(right, r_piece)

    alg = DGAlgebra(r_tot, mult, r_bp.incls[0])
    out = SmithIdeal(alg, DGBimodule(alg, i_tot, left, right), j_t)
    bad = validate_smith_ideal(out)
    if bad:
        raise MediatingError(f"truncated free ideal failed validation: {bad}")
    return out


@dataclass(frozen=True)
class StrongQuotientReport:
    converged: bool
    valid_below: int
    weq_below: bool
    left_homology: dict[int, int]
    right_homology: dict[int, int]


def strong_quotient_check(
    p: MonoidHom, test_modules: list[RightModule], cutoff: int | None = None
) -> list[StrongQuotientReport]:
    """Evidence check: for each supplied module N over the target, whether
    S (x)_R QN -> N is a quasi-isomorphism below the approximation cutoff.

    Q is the finite-cell cofibrant replacement in right R-modules; nothing is
    decided about modules not supplied.
    """
    bad = validate_monoid_hom(p)
    if bad:
        raise MediatingError(bad)
    reports = []
    for n_mod in test_modules:
        if n_mod.alg != p.dst:
            raise MediatingError("test module is not over the target algebra")
        if cutoff is None:
            span = n_mod.carrier.hi - n_mod.carrier.lo if not n_mod.carrier.is_zero() else 0
            bound = n_mod.carrier.hi + max(2, span) if not n_mod.carrier.is_zero() else 2
        else:
            bound = cutoff
        restricted = right_restrict(p, n_mod)
        approx = cell_approximation(restricted, bound)
        sp_left = left_restrict(p, algebra_as_left_module(p.dst))
        t = tensor_over(approx.module, sp_left)
        theta = induce_through_surjection(
            t.proj,
            compose(n_mod.act, tensor_map(approx.to_target, identity_map(p.dst.carrier))),
        )
        ok = is_quasi_iso(theta, below=bound)
        reports.append(
            StrongQuotientReport(
                approx.converged,
                bound,
                ok,
                dict(homology(theta.src).dims),
                dict(homology(theta.dst).dims),
            )
        )
    return reports
