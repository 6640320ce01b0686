"""Monoids in complexes and in the arrow category: DG algebras, monoid
homomorphisms, Smith ideals, and the quotient/kernel constructions.

A Smith ideal is stored in unwound form: a DG algebra R, an R-bimodule I,
and a bimodule map j: I -> R whose two induced multiplications I (x) I -> I
agree.  Translations to and from monoid data in the pushout-product
structure are exact mutual inverses.  The quotient R -> R/I acquires its
multiplication through the cokernel comparison isomorphism, and the kernel
of a monoid homomorphism acquires its bimodule structure by corestriction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    ChainComplex,
    ChainMap,
    InvalidMap,
    assoc_iso,
    chain_complex,
    chain_map,
    compose,
    identity_map,
    tensor_complex,
    tensor_map,
    unit_complex,
    zero_complex,
    zero_map,
)
from .limits import (
    MediatingError,
    induce_through_surjection,
    kernel,
    lift_through_injection,
)
from .arrows import (
    ArrowObject,
    ArrowSquare,
    PushoutProduct,
    arrow,
    compose_squares,
    pushout_product,
    square,
)
from .kerco import (
    coker_arrow,
    coker_square,
    ker_arrow,
    monoidal_comparison_iso,
)


@dataclass(frozen=True, eq=False)
class DGAlgebra:
    carrier: ChainComplex
    mult: ChainMap   # R (x) R -> R
    unit: ChainMap   # S -> R

    def __eq__(self, other):
        if not isinstance(other, DGAlgebra):
            return NotImplemented
        return self.carrier == other.carrier and self.mult == other.mult and self.unit == other.unit


@dataclass(frozen=True, eq=False)
class DGBimodule:
    alg: DGAlgebra
    carrier: ChainComplex
    left: ChainMap    # R (x) I -> I
    right: ChainMap   # I (x) R -> I

    def __eq__(self, other):
        if not isinstance(other, DGBimodule):
            return NotImplemented
        return (
            self.alg == other.alg
            and self.carrier == other.carrier
            and self.left == other.left
            and self.right == other.right
        )


@dataclass(frozen=True, eq=False)
class MonoidHom:
    src: DGAlgebra
    dst: DGAlgebra
    map: ChainMap

    def __eq__(self, other):
        if not isinstance(other, MonoidHom):
            return NotImplemented
        return self.src == other.src and self.dst == other.dst and self.map == other.map


@dataclass(frozen=True, eq=False)
class SmithIdeal:
    alg: DGAlgebra
    ideal: DGBimodule
    j: ChainMap       # I -> R

    def __eq__(self, other):
        if not isinstance(other, SmithIdeal):
            return NotImplemented
        return self.alg == other.alg and self.ideal == other.ideal and self.j == other.j


# ---------------------------------------------------------------------------
# Validators: each returns None when fine, else the first violated law.


def validate_dga(r: DGAlgebra) -> str | None:
    R = r.carrier
    S = unit_complex(R.field)
    if r.mult.src != tensor_complex(R, R) or r.mult.dst != R:
        return "multiplication has wrong endpoints"
    if r.unit.src != S or r.unit.dst != R:
        return "unit has wrong endpoints"
    lhs = compose(r.mult, tensor_map(r.mult, identity_map(R)))
    rhs = compose(r.mult, compose(tensor_map(identity_map(R), r.mult), assoc_iso(R, R, R)))
    if lhs != rhs:
        return "multiplication is not associative"
    if compose(r.mult, tensor_map(r.unit, identity_map(R))) != identity_map(R):
        return "left unit law fails"
    if compose(r.mult, tensor_map(identity_map(R), r.unit)) != identity_map(R):
        return "right unit law fails"
    return None


def validate_bimodule(m: DGBimodule) -> str | None:
    bad = validate_dga(m.alg)
    if bad:
        return f"algebra: {bad}"
    R = m.alg.carrier
    I = m.carrier
    mu = m.alg.mult
    eta = m.alg.unit
    if m.left.src != tensor_complex(R, I) or m.left.dst != I:
        return "left action has wrong endpoints"
    if m.right.src != tensor_complex(I, R) or m.right.dst != I:
        return "right action has wrong endpoints"
    lhs = compose(m.left, tensor_map(mu, identity_map(I)))
    rhs = compose(m.left, compose(tensor_map(identity_map(R), m.left), assoc_iso(R, R, I)))
    if lhs != rhs:
        return "left action is not associative"
    if compose(m.left, tensor_map(eta, identity_map(I))) != identity_map(I):
        return "left action is not unital"
    lhs = compose(m.right, tensor_map(m.right, identity_map(R)))
    rhs = compose(m.right, compose(tensor_map(identity_map(I), mu), assoc_iso(I, R, R)))
    if lhs != rhs:
        return "right action is not associative"
    if compose(m.right, tensor_map(identity_map(I), eta)) != identity_map(I):
        return "right action is not unital"
    lhs = compose(m.right, tensor_map(m.left, identity_map(R)))
    rhs = compose(m.left, compose(tensor_map(identity_map(R), m.right), assoc_iso(R, I, R)))
    if lhs != rhs:
        return "left and right actions do not commute"
    return None


def validate_monoid_hom(p: MonoidHom) -> str | None:
    for tag, alg in (("source", p.src), ("target", p.dst)):
        bad = validate_dga(alg)
        if bad:
            return f"{tag}: {bad}"
    if p.map.src != p.src.carrier or p.map.dst != p.dst.carrier:
        return "map has wrong endpoints"
    if compose(p.map, p.src.mult) != compose(p.dst.mult, tensor_map(p.map, p.map)):
        return "map does not preserve multiplication"
    if compose(p.map, p.src.unit) != p.dst.unit:
        return "map does not preserve the unit"
    return None


def validate_smith_ideal(s: SmithIdeal) -> str | None:
    if s.ideal.alg != s.alg:
        return "bimodule is not over the ideal's algebra"
    bad = validate_bimodule(s.ideal)
    if bad:
        return bad
    R = s.alg.carrier
    I = s.ideal.carrier
    if s.j.src != I or s.j.dst != R:
        return "j has wrong endpoints"
    if compose(s.j, s.ideal.left) != compose(s.alg.mult, tensor_map(identity_map(R), s.j)):
        return "j is not left R-linear"
    if compose(s.j, s.ideal.right) != compose(s.alg.mult, tensor_map(s.j, identity_map(R))):
        return "j is not right R-linear"
    lhs = compose(s.ideal.left, tensor_map(s.j, identity_map(I)))
    rhs = compose(s.ideal.right, tensor_map(identity_map(I), s.j))
    if lhs != rhs:
        return "the two multiplications I (x) I -> I disagree"
    return None


# ---------------------------------------------------------------------------
# Smith ideals <-> monoids in the pushout-product structure


@dataclass(frozen=True)
class SquareMonoid:
    obj: ArrowObject
    mult: ArrowSquare   # obj [] obj -> obj
    unit: ArrowSquare   # L1 S -> obj
    pp: PushoutProduct


def smith_to_square_monoid(s: SmithIdeal) -> SquareMonoid:
    """Wind a Smith ideal up into monoid data for the pushout product."""
    from .arrows import L1

    j = arrow(s.j)
    pp = pushout_product(j, j)
    # dom(j [] j) receives I (x) R and R (x) I; the action legs agree on I (x) I.
    a0 = pp.po.mediate(s.ideal.right, s.ideal.left)
    mult = square(pp.arrow, j, a0, s.alg.mult)
    S = unit_complex(s.alg.carrier.field)
    unit = square(
        L1(S), j, zero_map(zero_complex(s.alg.carrier.field), s.ideal.carrier), s.alg.unit
    )
    return SquareMonoid(j, mult, unit, pp)


def smith_from_square_monoid(sm: SquareMonoid) -> SmithIdeal:
    """Unwind monoid data in the pushout-product structure; validates."""
    j = sm.obj.f
    R = sm.obj.cod
    I = sm.obj.dom
    alg = DGAlgebra(R, sm.mult.a1, sm.unit.a1)
    pp = pushout_product(sm.obj, sm.obj)
    right_act = compose(sm.mult.a0, pp.inj_dom_cod)   # I (x) R -> I
    left_act = compose(sm.mult.a0, pp.inj_cod_dom)    # R (x) I -> I
    s = SmithIdeal(alg, DGBimodule(alg, I, left_act, right_act), j)
    bad = validate_smith_ideal(s)
    if bad:
        raise InvalidMap(f"square monoid does not unwind to a Smith ideal: {bad}")
    return s


# ---------------------------------------------------------------------------
# Quotient and kernel


def quotient_dga(s: SmithIdeal) -> MonoidHom:
    """The cokernel R -> R/I as a monoid homomorphism.

    The multiplication on R/I is transported along the comparison
    isomorphism coker(j [] j) ~ coker(j) (x) coker(j).
    """
    j = arrow(s.j)
    sm = smith_to_square_monoid(s)
    ck = coker_arrow(j)
    cs = coker_square(sm.mult)          # components (mu_R, induced on quotients)
    mc = monoidal_comparison_iso(j, j)
    mult_q = compose(cs.a1, mc.inverse.a1)   # Q (x) Q -> coker(j [] j) -> Q
    unit_q = compose(ck.data.proj, s.alg.unit)
    quo = DGAlgebra(ck.arrow.cod, mult_q, unit_q)
    hom = MonoidHom(s.alg, quo, ck.data.proj)
    bad = validate_monoid_hom(hom)
    if bad:
        raise MediatingError(f"quotient failed validation: {bad}")
    return hom


def kernel_smith_ideal(p: MonoidHom) -> SmithIdeal:
    """ker(p) with the bimodule structure corestricted from R."""
    bad = validate_monoid_hom(p)
    if bad:
        raise InvalidMap(bad)
    R = p.src.carrier
    k = kernel(p.map)
    incl = k.incl
    left = lift_through_injection(
        incl, compose(p.src.mult, tensor_map(identity_map(R), incl))
    )
    right = lift_through_injection(
        incl, compose(p.src.mult, tensor_map(incl, identity_map(R)))
    )
    s = SmithIdeal(p.src, DGBimodule(p.src, k.obj, left, right), incl)
    bad = validate_smith_ideal(s)
    if bad:
        raise MediatingError(f"kernel failed validation: {bad}")
    return s


@dataclass(frozen=True)
class MonoidIso:
    hom: MonoidHom
    inverse: ChainMap


def quotient_recovers_hom(p: MonoidHom) -> MonoidIso:
    """For degreewise surjective p, the canonical iso R/ker(p) -> dst(p).

    Certifies that quotient . kernel is the identity up to canonical
    isomorphism of monoid homomorphisms.
    """
    if not p.map.is_surjective():
        raise ValueError("p must be degreewise surjective")
    q = quotient_dga(kernel_smith_ideal(p))
    m = induce_through_surjection(q.map, p.map)
    iso = MonoidHom(q.dst, p.dst, m)
    bad = validate_monoid_hom(iso)
    if bad:
        raise MediatingError(f"comparison is not a monoid map: {bad}")
    if not m.is_iso():
        raise MediatingError("comparison is not an isomorphism")
    if compose(m, q.map) != p.map:
        raise MediatingError("comparison does not intertwine the quotients")
    return MonoidIso(iso, compose_inverse(m))


def compose_inverse(m: ChainMap) -> ChainMap:
    from .limits import invert_chain_map

    return invert_chain_map(m)


def kernel_recovers_ideal(s: SmithIdeal) -> ChainMap:
    """For degreewise injective j, the canonical iso I -> ker(R -> R/I).

    Checked to intertwine j and both actions.
    """
    if not s.j.is_injective():
        raise ValueError("j must be degreewise injective")
    q = quotient_dga(s)
    s2 = kernel_smith_ideal(q)
    w = lift_through_injection(s2.j, s.j)
    if not w.is_iso():
        raise MediatingError("kernel does not recover the ideal")
    R = s.alg.carrier
    if compose(s2.j, w) != s.j:
        raise MediatingError("comparison does not intertwine j")
    if compose(w, s.ideal.left) != compose(s2.ideal.left, tensor_map(identity_map(R), w)):
        raise MediatingError("comparison does not intertwine the left action")
    if compose(w, s.ideal.right) != compose(s2.ideal.right, tensor_map(w, identity_map(R))):
        raise MediatingError("comparison does not intertwine the right action")
    return w


# ---------------------------------------------------------------------------
# Standard examples


def scalar_algebra(field) -> DGAlgebra:
    """F_p in degree 0."""
    S = unit_complex(field)
    return DGAlgebra(S, identity_map(S), identity_map(S))


def square_zero_algebra(field, m: ChainComplex) -> DGAlgebra:
    """S (+) M with M . M = 0; the canonical guaranteed-associative extension."""
    from .limits import biproduct
    from .field import Matrix
    import numpy as np

    S = unit_complex(field)
    bp = biproduct([S, m])
    R = bp.total
    # multiplication: (s, m)(s', m') = (ss', s m' + m s')
    inc_s, inc_m = bp.incls
    pr_s, pr_m = bp.projs
    rr = tensor_complex(R, R)
    mult = None
    pieces = [
        compose(inc_s, _scalar_piece(pr_s, pr_s)),
        compose(inc_m, _scalar_piece(pr_s, pr_m)),
        compose(inc_m, _scalar_piece_right(pr_m, pr_s)),
    ]
    for piece in pieces:
        mult = piece if mult is None else _add(mult, piece)
    alg = DGAlgebra(R, mult, inc_s)
    bad = validate_dga(alg)
    if bad:
        raise MediatingError(f"square-zero algebra invalid: {bad}")
    return alg


def _scalar_piece(pa: ChainMap, pb: ChainMap) -> ChainMap:
    """(pa (x) pb) followed by the unitor S (x) X = X."""
    t = tensor_map(pa, pb)
    return t  # pa lands in S, so the tensor is literally pb's target


def _scalar_piece_right(pa: ChainMap, pb: ChainMap) -> ChainMap:
    t = tensor_map(pa, pb)
    return t


def _add(f: ChainMap, g: ChainMap) -> ChainMap:
    from .complexes import add_maps

    return add_maps(f, g)


def square_zero_ideal(field, m: ChainComplex) -> SmithIdeal:
    """The ideal M inside S (+) M, with j the inclusion."""
    from .limits import biproduct

    S = unit_complex(field)
    bp = biproduct([S, m])
    alg = square_zero_algebra(field, m)
    R = alg.carrier
    inc_m = bp.incls[1]
    pr_s = bp.projs[0]
    # actions: r . x = eps(r) x and x . r = x eps(r), eps the projection to S
    left = tensor_map(pr_s, identity_map(m))    # R (x) M -> S (x) M = M
    right_raw = tensor_map(identity_map(m), pr_s)  # M (x) R -> M (x) S = M
    ideal = DGBimodule(alg, m, left, right_raw)
    s = SmithIdeal(alg, ideal, inc_m)
    bad = validate_smith_ideal(s)
    if bad:
        raise MediatingError(f"square-zero ideal invalid: {bad}")
    return s


def truncated_polynomial_algebra(field, e: int, k: int) -> DGAlgebra:
    """F_p[x]/(x^k) with |x| = e (e even or k <= 2 so signs stay trivial)."""
    from .field import Matrix
    import numpy as np

    if k < 1:
        raise ValueError("k must be at least 1")
    dims: dict[int, int] = {}
    for a in range(k):
        dims[a * e] = dims.get(a * e, 0) + 1
    if e == 0:
        carrier = chain_complex(field, {0: k}, {})
        index = {a: a for a in range(k)}
    else:
        carrier = chain_complex(field, dims, {})
        order = sorted(range(k), key=lambda a: a * e)
        index = {}
        seen: dict[int, int] = {}
        for a in order:
            deg = a * e
            index[a] = seen.get(deg, 0)
            seen[deg] = seen.get(deg, 0) + 1
    rr = tensor_complex(carrier, carrier)
    from .complexes import _blocks, _block_offsets

    comps: dict[int, Matrix] = {}
    import numpy as _np

    for n in rr.degrees():
        if not (rr.dim(n) and carrier.dim(n)):
            continue
        mtx = _np.zeros((carrier.dim(n), rr.dim(n)), dtype=_np.int64)
        off = _block_offsets(_blocks(carrier, carrier, n))
        for (i, j), o in off.items():
            # x^a in degree i times x^b in degree j, with a = i/e etc. (e != 0)
            if e:
                a_pow, b_pow = i // e, j // e
                if a_pow + b_pow < k:
                    mtx[0, o] = 1  # each degree holds exactly one power
            else:
                for a_pow in range(k):
                    for b_pow in range(k):
                        if a_pow + b_pow < k:
                            mtx[a_pow + b_pow, o + a_pow * k + b_pow] = 1
        comps[n] = Matrix.make(field, mtx)
    mult = chain_map(rr, carrier, comps)
    S = unit_complex(field)
    unit_mtx = _np.zeros((carrier.dim(0), 1), dtype=_np.int64)
    unit_mtx[0, 0] = 1
    unit = chain_map(S, carrier, {0: Matrix.make(field, unit_mtx)})
    alg = DGAlgebra(carrier, mult, unit)
    bad = validate_dga(alg)
    if bad:
        raise MediatingError(f"truncated polynomial algebra invalid: {bad}")
    return alg


def truncated_polynomial_ideal(field, e: int, k: int) -> SmithIdeal:
    """The ideal (x) inside F_p[x]/(x^k)."""
    from .field import Matrix
    import numpy as _np

    alg = truncated_polynomial_algebra(field, e, k)
    R = alg.carrier
    if e == 0:
        ideal_cx = chain_complex(field, {0: k - 1}, {}) if k > 1 else zero_complex(field)
        incl_mtx = _np.zeros((k, k - 1), dtype=_np.int64)
        for a in range(1, k):
            incl_mtx[a, a - 1] = 1
        j = chain_map(ideal_cx, R, {0: Matrix.make(field, incl_mtx)} if k > 1 else {})
    else:
        dims = {a * e: 1 for a in range(1, k)}
        ideal_cx = chain_complex(field, dims, {})
        comps = {}
        for a in range(1, k):
            m = _np.zeros((R.dim(a * e), 1), dtype=_np.int64)
            m[0, 0] = 1
            comps[a * e] = Matrix.make(field, m)
        j = chain_map(ideal_cx, R, comps)
    left = lift_through_injection(
        j, compose(alg.mult, tensor_map(identity_map(R), j))
    )
    right = lift_through_injection(
        j, compose(alg.mult, tensor_map(j, identity_map(R)))
    )
    s = SmithIdeal(alg, DGBimodule(alg, ideal_cx, left, right), j)
    bad = validate_smith_ideal(s)
    if bad:
        raise MediatingError(f"truncated polynomial ideal invalid: {bad}")
    return s


def zero_ideal(r: DGAlgebra) -> SmithIdeal:
    z = zero_complex(r.carrier.field)
    ideal = DGBimodule(
        r,
        z,
        zero_map(tensor_complex(r.carrier, z), z),
        zero_map(tensor_complex(z, r.carrier), z),
    )
    return SmithIdeal(r, ideal, zero_map(z, r.carrier))


def unit_ideal(r: DGAlgebra) -> SmithIdeal:
    """I = R with j the identity."""
    ideal = DGBimodule(r, r.carrier, r.mult, r.mult)
    return SmithIdeal(r, ideal, identity_map(r.carrier))
