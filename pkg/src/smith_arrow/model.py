"""Model-structure layer: map classifications in complexes and in both arrow
structures, the lifting-problem solver, factorizations, replacements, the
stable cokernel/kernel adjunct comparison, flatness, and pure-class checks.

Over a field the base classes are plain rank conditions: cofibrations are
degreewise injections, fibrations degreewise surjections, weak equivalences
quasi-isomorphisms.  The two arrow-category structures differ only in which
corner map carries the extra condition, and that is exactly what the
predicates here encode.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Matrix
from .complexes import (
    ChainComplex,
    ChainMap,
    chain_map,
    compose,
    identity_map,
    is_quasi_iso,
    tensor_map,
    zero_complex,
    zero_map,
)
from .limits import (
    MediatingError,
    cylinder,
    induce_through_surjection,
    mapping_path_factorization,
    pullback,
    pushout,
)
from .arrows import (
    ArrowObject,
    ArrowSquare,
    arrow,
    compose_squares,
    square,
)
from .kerco import adjunction_counit, coker_arrow, ker_arrow
from .linsolve import Equation, Term, UnknownSpec, solve_constraints


COFIBRATION = "cofibration"
TRIVIAL_COFIBRATION = "trivial-cofibration"
FIBRATION = "fibration"
TRIVIAL_FIBRATION = "trivial-fibration"
WEAK_EQUIVALENCE = "weak-equivalence"

MAP_CLASSES = (
    COFIBRATION,
    TRIVIAL_COFIBRATION,
    FIBRATION,
    TRIVIAL_FIBRATION,
    WEAK_EQUIVALENCE,
)


def classify_base(f: ChainMap, tag: str) -> bool:
    """Decide membership of f in one of the five base classes."""
    if tag == COFIBRATION:
        return f.is_injective()
    if tag == TRIVIAL_COFIBRATION:
        return f.is_injective() and is_quasi_iso(f)
    if tag == FIBRATION:
        return f.is_surjective()
    if tag == TRIVIAL_FIBRATION:
        return f.is_surjective() and is_quasi_iso(f)
    if tag == WEAK_EQUIVALENCE:
        return is_quasi_iso(f)
    raise ValueError(f"unknown class {tag!r}")


# ---------------------------------------------------------------------------
# Arrow-category predicates


def injective_corner(alpha: ArrowSquare) -> ChainMap:
    """Ev0 f -> Ev1 f x_{Ev1 g} Ev0 g, the relative-matching map."""
    pb = pullback(alpha.a1, alpha.dst.f)
    return pb.mediate(alpha.src.f, alpha.a0)


def injective_fibration(alpha: ArrowSquare, trivial: bool = False) -> bool:
    corner = injective_corner(alpha)
    if trivial:
        return classify_base(alpha.a1, TRIVIAL_FIBRATION) and classify_base(
            corner, TRIVIAL_FIBRATION
        )
    return alpha.a1.is_surjective() and corner.is_surjective()


def injective_cofibration(alpha: ArrowSquare, trivial: bool = False) -> bool:
    tag = TRIVIAL_COFIBRATION if trivial else COFIBRATION
    return classify_base(alpha.a0, tag) and classify_base(alpha.a1, tag)


def injective_weq(alpha: ArrowSquare) -> bool:
    return is_quasi_iso(alpha.a0) and is_quasi_iso(alpha.a1)


def projective_corner(alpha: ArrowSquare) -> ChainMap:
    """Ev1 f u_{Ev0 f} Ev0 g -> Ev1 g, the relative-latching map."""
    po = pushout(alpha.src.f, alpha.a0)
    return po.mediate(alpha.a1, alpha.dst.f)


def projective_cofibration(alpha: ArrowSquare, trivial: bool = False) -> bool:
    corner = projective_corner(alpha)
    if trivial:
        return classify_base(alpha.a0, TRIVIAL_COFIBRATION) and classify_base(
            corner, TRIVIAL_COFIBRATION
        )
    return alpha.a0.is_injective() and corner.is_injective()


def projective_fibration(alpha: ArrowSquare, trivial: bool = False) -> bool:
    tag = TRIVIAL_FIBRATION if trivial else FIBRATION
    return classify_base(alpha.a0, tag) and classify_base(alpha.a1, tag)


def projective_weq(alpha: ArrowSquare) -> bool:
    return injective_weq(alpha)


# ---------------------------------------------------------------------------
# Lifting problems


@dataclass(frozen=True)
class LiftingProblem:
    left: ChainMap    # i: A -> B
    right: ChainMap   # p: X -> Y
    top: ChainMap     # A -> X
    bottom: ChainMap  # B -> Y

    def __post_init__(self):
        if compose(self.right, self.top) != compose(self.bottom, self.left):
            raise MediatingError("outer square does not commute")


def solve_lifting(prob: LiftingProblem) -> ChainMap | None:
    """A diagonal h: B -> X with h.i = top and p.h = bottom, or None.

    The lift is one linear system: per-degree unknowns constrained by the two
    triangles and by commutation with the differentials.
    """
    b, x = prob.left.dst, prob.right.src
    field = b.field
    degs = [n for n in range(min(b.lo, x.lo), max(b.hi, x.hi) + 1) if b.dim(n) and x.dim(n)]
    unknowns = [UnknownSpec(f"h{n}", x.dim(n), b.dim(n)) for n in degs]
    eqs: list[Equation] = []
    lo = min(b.lo, x.lo, prob.left.src.lo, prob.right.dst.lo) - 1
    hi = max(b.hi, x.hi, prob.left.src.hi, prob.right.dst.hi) + 1
    for n in range(lo, hi + 1):
        a_dim = prob.left.src.dim(n)
        if x.dim(n) and a_dim:
            terms = []
            if n in degs:
                terms.append(Term(Matrix.identity(field, x.dim(n)), f"h{n}", prob.left.at(n)))
            eqs.append(Equation(tuple(terms), prob.top.at(n)))
        y_dim = prob.right.dst.dim(n)
        if y_dim and b.dim(n):
            terms = []
            if n in degs:
                terms.append(Term(prob.right.at(n), f"h{n}", Matrix.identity(field, b.dim(n))))
            eqs.append(Equation(tuple(terms), prob.bottom.at(n)))
        rows, cols = x.dim(n - 1), b.dim(n)
        if rows and cols:
            terms = []
            if n in degs:
                terms.append(Term(x.d(n), f"h{n}", Matrix.identity(field, cols)))
            if (n - 1) in degs:
                terms.append(Term(Matrix.identity(field, rows).scale(-1), f"h{n-1}", b.d(n)))
            if terms:
                eqs.append(Equation(tuple(terms), Matrix.zeros(field, rows, cols)))
    sol = solve_constraints(field, unknowns, eqs)
    if sol is None:
        return None
    return chain_map(b, x, {n: sol.assign[f"h{n}"] for n in degs})


@dataclass(frozen=True)
class ArrowLiftingProblem:
    left: ArrowSquare
    right: ArrowSquare
    top: ArrowSquare
    bottom: ArrowSquare

    def __post_init__(self):
        if compose_squares(self.right, self.top) != compose_squares(self.bottom, self.left):
            raise MediatingError("outer square in the arrow category does not commute")


def solve_arrow_lifting(prob: ArrowLiftingProblem) -> ArrowSquare | None:
    """A lift in the arrow category: component lifts plus the square condition."""
    g = prob.left.dst       # arrow object B
    x = prob.right.src      # arrow object X
    field = g.dom.field
    degs0 = [
        n
        for n in range(min(g.dom.lo, x.dom.lo), max(g.dom.hi, x.dom.hi) + 1)
        if g.dom.dim(n) and x.dom.dim(n)
    ]
    degs1 = [
        n
        for n in range(min(g.cod.lo, x.cod.lo), max(g.cod.hi, x.cod.hi) + 1)
        if g.cod.dim(n) and x.cod.dim(n)
    ]
    unknowns = [UnknownSpec(f"h0_{n}", x.dom.dim(n), g.dom.dim(n)) for n in degs0]
    unknowns += [UnknownSpec(f"h1_{n}", x.cod.dim(n), g.cod.dim(n)) for n in degs1]
    eqs: list[Equation] = []

    def chain_eqs(prefix, src, dst, degs):
        for n in range(min(src.lo, dst.lo), max(src.hi, dst.hi) + 2):
            rows, cols = dst.dim(n - 1), src.dim(n)
            if not (rows and cols):
                continue
            terms = []
            if n in degs:
                terms.append(Term(dst.d(n), f"{prefix}{n}", Matrix.identity(field, cols)))
            if (n - 1) in degs:
                terms.append(
                    Term(Matrix.identity(field, rows).scale(-1), f"{prefix}{n-1}", src.d(n))
                )
            if terms:
                eqs.append(Equation(tuple(terms), Matrix.zeros(field, rows, cols)))

    chain_eqs("h0_", g.dom, x.dom, degs0)
    chain_eqs("h1_", g.cod, x.cod, degs1)

    def triangle_eqs(prefix, degs, i_map, p_map, top, bottom, src_cx, mid_cx, dst_cx):
        # h . i = top and p . h = bottom
        for n in range(min(src_cx.lo, mid_cx.lo, dst_cx.lo), max(src_cx.hi, mid_cx.hi, dst_cx.hi) + 1):
            if mid_cx.dim(n) == 0:
                if src_cx.dim(n) and top.dst.dim(n):
                    eqs.append(Equation((), top.at(n)))
                if dst_cx.dim(n) and bottom.src.dim(n):
                    eqs.append(Equation((), bottom.at(n)))
                continue
            if src_cx.dim(n) and top.dst.dim(n):
                terms = []
                if n in degs:
                    terms.append(Term(Matrix.identity(field, top.dst.dim(n)), f"{prefix}{n}", i_map.at(n)))
                eqs.append(Equation(tuple(terms), top.at(n)))
            if bottom.dst.dim(n) and mid_cx.dim(n):
                terms = []
                if n in degs:
                    terms.append(Term(p_map.at(n), f"{prefix}{n}", Matrix.identity(field, mid_cx.dim(n))))
                eqs.append(Equation(tuple(terms), bottom.at(n)))

    triangle_eqs("h0_", degs0, prob.left.a0, prob.right.a0, prob.top.a0, prob.bottom.a0,
                 prob.left.src.dom, g.dom, prob.right.dst.dom)
    triangle_eqs("h1_", degs1, prob.left.a1, prob.right.a1, prob.top.a1, prob.bottom.a1,
                 prob.left.src.cod, g.cod, prob.right.dst.cod)

    # square condition: x.f . h0 = h1 . g.f
    for n in range(min(g.dom.lo, x.cod.lo), max(g.dom.hi, x.cod.hi) + 1):
        rows, cols = x.cod.dim(n), g.dom.dim(n)
        if not (rows and cols):
            continue
        terms = []
        if n in degs0:
            terms.append(Term(x.f.at(n), f"h0_{n}", Matrix.identity(field, cols)))
        if n in degs1:
            terms.append(Term(Matrix.identity(field, rows).scale(-1), f"h1_{n}", g.f.at(n)))
        if terms:
            eqs.append(Equation(tuple(terms), Matrix.zeros(field, rows, cols)))

    sol = solve_constraints(field, unknowns, eqs)
    if sol is None:
        return None
    h0 = chain_map(g.dom, x.dom, {n: sol.assign[f"h0_{n}"] for n in degs0})
    h1 = chain_map(g.cod, x.cod, {n: sol.assign[f"h1_{n}"] for n in degs1})
    return square(g, x, h0, h1)


# ---------------------------------------------------------------------------
# Factorizations and replacements


def factor_map(f: ChainMap, mode: str) -> tuple[ChainMap, ChainMap]:
    """Factor f as (cofibration, trivial fibration) or (trivial cofibration,
    fibration), via the mapping cylinder or the mapping path space."""
    if mode == "cof+trivfib":
        cyl = cylinder(f)
        return cyl.incl, cyl.proj
    if mode == "trivcof+fib":
        return mapping_path_factorization(f)
    raise ValueError(f"unknown factorization mode {mode!r}")


def factor_square(alpha: ArrowSquare, mode: str) -> tuple[ArrowSquare, ArrowSquare]:
    """Componentwise factorization of a square through the cylinder or path
    construction, with the connecting map assembled blockwise."""
    if mode == "cof+trivfib":
        import numpy as np

        c0 = cylinder(alpha.a0)
        c1 = cylinder(alpha.a1)
        field = alpha.a0.src.field
        # connecting map Cyl(a0) -> Cyl(a1) is blockdiag(F, F shifted, G)
        mid_comps = {}
        for n in c0.obj.degrees():
            if not (c0.obj.dim(n) and c1.obj.dim(n)):
                continue
            x0, x0p = alpha.src.dom.dim(n), alpha.src.dom.dim(n - 1)
            x1, x1p = alpha.dst.dom.dim(n), alpha.dst.dom.dim(n - 1)
            m = np.zeros((c1.obj.dim(n), c0.obj.dim(n)), dtype=np.int64)
            m[:x1, :x0] = alpha.src.f.at(n).a
            m[x1 : x1 + x1p, x0 : x0 + x0p] = alpha.src.f.at(n - 1).a
            m[x1 + x1p :, x0 + x0p :] = alpha.dst.f.at(n).a
            mid_comps[n] = Matrix.make(field, m)
        mid = arrow(chain_map(c0.obj, c1.obj, mid_comps))
        i_sq = square(alpha.src, mid, c0.incl, c1.incl)
        q_sq = square(mid, alpha.dst, c0.proj, c1.proj)
        return i_sq, q_sq
    if mode == "trivcof+fib":
        j0, q0 = mapping_path_factorization(alpha.a0)
        j1, q1 = mapping_path_factorization(alpha.a1)
        lift = solve_lifting(LiftingProblem(j0, q1, compose(j1, alpha.src.f), compose(alpha.dst.f, q0)))
        if lift is None:
            raise MediatingError("path-space connecting map not found")
        mid = arrow(lift)
        return square(alpha.src, mid, j0, j1), square(mid, alpha.dst, q0, q1)
    raise ValueError(f"unknown factorization mode {mode!r}")


def arrow_cofibrant_replacement(f: ArrowObject) -> tuple[ArrowObject, ArrowSquare]:
    """A degreewise-injective arrow with a componentwise weak equivalence to f
    (cofibrant object for the projective structure)."""
    if f.f.is_injective():
        from .arrows import identity_square

        return f, identity_square(f)
    cyl = cylinder(f.f)
    f2 = arrow(cyl.incl)
    return f2, square(f2, f, identity_map(f.dom), cyl.proj)


def arrow_fibrant_replacement(p: ArrowObject) -> tuple[ArrowObject, ArrowSquare]:
    """A degreewise-surjective arrow receiving a componentwise weak
    equivalence from p (fibrant object for the injective structure)."""
    if p.f.is_surjective():
        from .arrows import identity_square

        return p, identity_square(p)
    j, q = mapping_path_factorization(p.f)
    p2 = arrow(q)
    return p2, square(p, p2, j, identity_map(p.cod))


# ---------------------------------------------------------------------------
# The stable adjunct comparison


def adjoint_transpose(f: ArrowObject, p: ArrowObject, alpha: ArrowSquare) -> ArrowSquare:
    """Transpose alpha: coker f -> p across coker -| ker to beta: f -> ker p."""
    kp = ker_arrow(p)
    beta0 = None
    from .limits import lift_through_injection

    beta0 = lift_through_injection(kp.data.incl, compose(alpha.a0, f.f))
    return square(f, kp.arrow, beta0, alpha.a0)


def stable_adjunct_check(f: ArrowObject, p: ArrowObject, alpha: ArrowSquare) -> tuple[bool, bool]:
    """(is_weq(alpha), is_weq(beta)) for the transpose beta; the stable theory
    says the booleans agree whenever f is cofibrant and p fibrant."""
    if not f.f.is_injective():
        raise ValueError("f must be a degreewise injection (cofibrant arrow)")
    if not p.f.is_surjective():
        raise ValueError("p must be a degreewise surjection (fibrant arrow)")
    ck = coker_arrow(f)
    if alpha.src != ck.arrow or alpha.dst != p:
        raise ValueError("alpha must run from coker f to p")
    beta = adjoint_transpose(f, p, alpha)
    return injective_weq(alpha), injective_weq(beta)


def replacement_unit_is_weq(f: ArrowObject) -> bool:
    """For cofibrant f: the unit f -> ker T(coker f) is a weak equivalence,
    with T the fibrant replacement."""
    if not f.f.is_injective():
        raise ValueError("f must be a degreewise injection")
    ck = coker_arrow(f)
    t_arrow, t_sq = arrow_fibrant_replacement(ck.arrow)
    a_weq, b_weq = stable_adjunct_check(f, t_arrow, t_sq)
    return a_weq and b_weq


# ---------------------------------------------------------------------------
# Flatness and purity


def flatness_check(m, n_src, n_dst, h: ChainMap) -> bool:
    """Whether M (x)_R h is a quasi-isomorphism, h a map of left modules."""
    from .modules import tensor_over, validate_left_module

    for tag, mod in (("source", n_src), ("target", n_dst)):
        bad = validate_left_module(mod)
        if bad:
            raise MediatingError(f"{tag} module invalid: {bad}")
    if compose(h, n_src.act) != compose(
        n_dst.act, tensor_map(identity_map(n_src.alg.carrier), h)
    ):
        raise MediatingError("h is not a map of left modules")
    t_src = tensor_over(m, n_src)
    t_dst = tensor_over(m, n_dst)
    induced = induce_through_surjection(
        t_src.proj, compose(t_dst.proj, tensor_map(identity_map(m.carrier), h))
    )
    return is_quasi_iso(induced)


def pure_pushout_stability(i: ChainMap, g: ChainMap) -> bool:
    """A pushout of a degreewise injection is a degreewise injection."""
    if not i.is_injective():
        raise ValueError("i must be in the pure class (a degreewise injection)")
    po = pushout(g, i)   # span: g.dst <- A -> i.dst; pushout of i is the leg from g.dst
    return po.left.is_injective()


def pure_gluing(
    spans: tuple[ChainMap, ChainMap, ChainMap, ChainMap],
    verticals: tuple[ChainMap, ChainMap, ChainMap],
) -> bool:
    """Weak equivalences of spans with pure right legs induce a weak
    equivalence of pushouts."""
    f, g, f2, g2 = spans        # B <-f- A -g-> C and the primed row
    a, b, c = verticals
    if not (g.is_injective() and g2.is_injective()):
        raise ValueError("right legs must be in the pure class")
    if not (is_quasi_iso(a) and is_quasi_iso(b) and is_quasi_iso(c)):
        raise ValueError("verticals must be weak equivalences")
    if compose(f2, a) != compose(b, f) or compose(g2, a) != compose(c, g):
        raise MediatingError("prism does not commute")
    po = pushout(f, g)
    po2 = pushout(f2, g2)
    induced = po.mediate(compose(po2.left, b), compose(po2.right, c))
    return is_quasi_iso(induced)


def pure_sequential(
    xs: list[ChainMap], ys: list[ChainMap], verticals: list[ChainMap]
) -> bool:
    """Finite sequential colimits along pure maps preserve levelwise weqs."""
    from .limits import colimit

    if len(verticals) != len(xs) + 1 or len(ys) != len(xs):
        raise ValueError("chain lengths disagree")
    for u in xs + ys:
        if not u.is_injective():
            raise ValueError("chain maps must be in the pure class")
    for w in verticals:
        if not is_quasi_iso(w):
            raise ValueError("verticals must be weak equivalences")
    x_objs = [xs[0].src] + [u.dst for u in xs]
    y_objs = [ys[0].src] + [u.dst for u in ys]
    for k, w in enumerate(verticals[:-1]):
        if compose(verticals[k + 1], xs[k]) != compose(ys[k], w):
            raise MediatingError("ladder does not commute")
    cx = colimit(x_objs, [(k, k + 1, u) for k, u in enumerate(xs)])
    cy = colimit(y_objs, [(k, k + 1, u) for k, u in enumerate(ys)])
    induced = cx.mediate([compose(cy.injections[k], verticals[k]) for k in range(len(verticals))])
    return is_quasi_iso(induced)
