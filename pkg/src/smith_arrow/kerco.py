"""Cokernel and kernel as an adjoint pair of endofunctors on arrows.

coker sends f: A -> B to the arrow B -> B/im(f); it is strongly monoidal
from the pushout-product structure to the tensor structure, with the
comparison isomorphism coker(f [] g) ~ coker(f) (x) coker(g) constructed
here (never assumed) and certified on every call.  ker is its right
adjoint and carries the corresponding lax structure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    ChainMap,
    compose,
    identity_map,
    tensor_complex,
    tensor_map,
    zero_map,
)
from .limits import (
    CokernelData,
    KernelData,
    MediatingError,
    cokernel,
    induce_through_surjection,
    kernel,
    lift_through_injection,
)
from .arrows import (
    ArrowObject,
    ArrowSquare,
    arrow,
    pushout_product,
    square,
    square_space_dim,
)


@dataclass(frozen=True)
class ArrowCokernel:
    arrow: ArrowObject       # B -> coker f
    data: CokernelData


@dataclass(frozen=True)
class ArrowKernel:
    arrow: ArrowObject       # ker p -> X
    data: KernelData


def coker_arrow(f: ArrowObject) -> ArrowCokernel:
    ck = cokernel(f.f)
    return ArrowCokernel(arrow(ck.proj), ck)


def ker_arrow(p: ArrowObject) -> ArrowKernel:
    k = kernel(p.f)
    return ArrowKernel(arrow(k.incl), k)


def coker_square(alpha: ArrowSquare) -> ArrowSquare:
    """Functorial action: the induced map of cokernels via the quotient solve."""
    cf = coker_arrow(alpha.src)
    cg = coker_arrow(alpha.dst)
    induced = induce_through_surjection(cf.data.proj, compose(cg.data.proj, alpha.a1))
    return square(cf.arrow, cg.arrow, alpha.a1, induced)


def ker_square(alpha: ArrowSquare) -> ArrowSquare:
    kf = ker_arrow(alpha.src)
    kg = ker_arrow(alpha.dst)
    induced = lift_through_injection(kg.data.incl, compose(alpha.a0, kf.data.incl))
    return square(kf.arrow, kg.arrow, induced, alpha.a0)


def adjunction_unit(f: ArrowObject) -> ArrowSquare:
    """f -> ker(coker f): corestrict f to the kernel of its own quotient."""
    ck = coker_arrow(f)
    k = ker_arrow(ck.arrow)
    u0 = lift_through_injection(k.data.incl, f.f)
    return square(f, k.arrow, u0, identity_map(f.cod))


def adjunction_counit(p: ArrowObject) -> ArrowSquare:
    """coker(ker p) -> p: the quotient by the kernel maps onward to the target."""
    k = ker_arrow(p)
    ck = coker_arrow(k.arrow)
    v1 = induce_through_surjection(ck.data.proj, p.f)
    return square(ck.arrow, p, identity_map(p.dom), v1)


def coker_ker_adjunction_check(f: ArrowObject, p: ArrowObject) -> bool:
    """Hom-space dimensions match and both triangle identities hold exactly."""
    ck = coker_arrow(f)
    k = ker_arrow(p)
    if square_space_dim(ck.arrow, p) != square_space_dim(f, k.arrow):
        return False
    # triangle on coker: counit_{coker f} . coker(unit_f) = id
    from .arrows import compose_squares, identity_square

    t1 = compose_squares(adjunction_counit(ck.arrow), coker_square(adjunction_unit(f)))
    if t1 != identity_square(ck.arrow):
        return False
    # triangle on ker: ker(counit_p) . unit_{ker p} = id
    t2 = compose_squares(ker_square(adjunction_counit(p)), adjunction_unit(k.arrow))
    return t2 == identity_square(k.arrow)


@dataclass(frozen=True)
class MonoidalComparison:
    forward: ArrowSquare   # coker(f [] g) -> coker f (x) coker g
    inverse: ArrowSquare


def monoidal_comparison_iso(f: ArrowObject, g: ArrowObject) -> MonoidalComparison:
    """The canonical iso coker(f [] g) ~ coker(f) (x) coker(g).

    Both sides are quotients of X1 (x) Y1 (interchanging the order of the two
    pushouts), so the comparison is the unique map commuting with the two
    projections; its inverse is found the same way and both composites are
    checked to be identities.  Failure raises: it would be a bug, not math.
    """
    pp = pushout_product(f, g)
    ck_corner = coker_arrow(pp.arrow)
    cf = coker_arrow(f)
    cg = coker_arrow(g)
    quo_tensor = tensor_map(cf.data.proj, cg.data.proj)   # X1Y1 -> Cf (x) Cg
    fwd1 = induce_through_surjection(ck_corner.data.proj, quo_tensor)
    inv1 = induce_through_surjection(quo_tensor, ck_corner.data.proj)
    if compose(inv1, fwd1) != identity_map(ck_corner.arrow.cod) or compose(
        fwd1, inv1
    ) != identity_map(quo_tensor.dst):
        raise MediatingError("cokernel comparison failed to be an isomorphism")
    target = arrow(quo_tensor)
    fwd = square(ck_corner.arrow, target, identity_map(pp.arrow.cod), fwd1)
    inv = square(target, ck_corner.arrow, identity_map(pp.arrow.cod), inv1)
    return MonoidalComparison(fwd, inv)


def kernel_lax_structure(f: ArrowObject, g: ArrowObject) -> ArrowSquare:
    """The natural map ker f [] ker g -> ker(f (x) g).

    The corner of ker f [] ker g lands inside ker(f (x) g) because each leg
    dies under f (x) g; the square is the corestriction, which is exactly the
    adjoint transpose of counit (x) counit.
    """
    kf = ker_arrow(f)
    kg = ker_arrow(g)
    pp = pushout_product(kf.arrow, kg.arrow)
    big_kernel = ker_arrow(tensor_arrow_map(f, g))
    a0 = lift_through_injection(big_kernel.data.incl, pp.arrow.f)
    return square(pp.arrow, big_kernel.arrow, a0, identity_map(pp.arrow.cod))


def tensor_arrow_map(f: ArrowObject, g: ArrowObject) -> ArrowObject:
    return arrow(tensor_map(f.f, g.f))
