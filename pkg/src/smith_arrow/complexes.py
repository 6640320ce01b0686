"""Bounded chain complexes of finite-dimensional F_p vector spaces.

A complex stores per-degree dimensions on a finite support window and the
differentials d_n : C_n -> C_{n-1} with d^2 = 0.  Tensor products follow the
sign convention d(a (x) b) = da (x) b + (-1)^{|a|} a (x) db, the symmetry
carries (-1)^{|a||b|}, and signs never appear anywhere else; in particular
associators and unitors are plain permutation matrices.

Basis bookkeeping is fixed once and for all: in (A (x) B)_n the summands
A_i (x) B_j are ordered by decreasing i, and within a summand the basis is
e_r (x) e_s at flat index r * dim(B_j) + s.  Every canonical isomorphism in
the package is deterministic because of this.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import (
    DimensionError,
    Field,
    FieldMismatch,
    Matrix,
    image_basis,
    kernel_basis,
    rank,
    rref,
)


class InvalidComplex(ValueError):
    pass


class InvalidMap(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ChainComplex:
    field: Field
    lo: int
    hi: int
    dims: dict[int, int]
    diff: dict[int, Matrix]

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def d(self, n: int) -> Matrix:
        got = self.diff.get(n)
        if got is not None:
            return got
        return Matrix.zeros(self.field, self.dim(n - 1), self.dim(n))

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return not self.dims

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return (
            self.field == other.field
            and self.dims == other.dims
            and self.diff == other.diff
        )

    def __repr__(self) -> str:
        return f"ChainComplex(F_{self.field.p}, dims={self.dims})"


def chain_complex(field: Field, dims: dict[int, int], diff: dict[int, Matrix]) -> ChainComplex:
    """Build a complex, normalising the window to the nonzero support.

    Shapes and d^2 = 0 are enforced here, so every constructor in the package
    yields a valid complex or raises.
    """
    clean_dims = {n: int(k) for n, k in dims.items() if k}
    for n, k in clean_dims.items():
        if k < 0:
            raise InvalidComplex(f"negative dimension at degree {n}")
    clean_diff: dict[int, Matrix] = {}
    for n, m in diff.items():
        r, c = clean_dims.get(n - 1, 0), clean_dims.get(n, 0)
        if m.shape != (r, c):
            raise InvalidComplex(
                f"differential at degree {n} has shape {m.shape}, expected {(r, c)}"
            )
        if m.field != field:
            raise FieldMismatch("differential over wrong field")
        if r and c:
            clean_diff[n] = m
    for n, m in clean_diff.items():
        below = clean_diff.get(n - 1)
        if below is not None and not (below @ m).is_zero():
            raise InvalidComplex(f"d^2 != 0 at degree {n}")
    if clean_dims:
        lo, hi = min(clean_dims), max(clean_dims)
    else:
        lo = hi = 0
    return ChainComplex(field, lo, hi, clean_dims, clean_diff)


def validate_complex_data(field: Field, dims: dict[int, int], diff: dict[int, Matrix]) -> str | None:
    """First violation as a message, or None when the data form a complex."""
    try:
        chain_complex(field, dims, diff)
    except (InvalidComplex, FieldMismatch) as e:
        return str(e)
    return None


def zero_complex(field: Field) -> ChainComplex:
    return chain_complex(field, {}, {})


def unit_complex(field: Field) -> ChainComplex:
    """S: the field in degree 0, the tensor unit."""
    return chain_complex(field, {0: 1}, {})


def sphere(field: Field, n: int) -> ChainComplex:
    """S^n: the field in degree n."""
    return chain_complex(field, {n: 1}, {})


def disk(field: Field, n: int) -> ChainComplex:
    """D^n: the field in degrees n and n-1 with identity differential."""
    return chain_complex(field, {n: 1, n - 1: 1}, {n: Matrix.identity(field, 1)})


@dataclass(frozen=True, eq=False)
class ChainMap:
    src: ChainComplex
    dst: ChainComplex
    comps: dict[int, Matrix]

    def at(self, n: int) -> Matrix:
        got = self.comps.get(n)
        if got is not None:
            return got
        return Matrix.zeros(self.src.field, self.dst.dim(n), self.src.dim(n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        return self.src == other.src and self.dst == other.dst and self.comps == other.comps

    def __repr__(self) -> str:
        return f"ChainMap({self.src!r} -> {self.dst!r})"

    def is_injective(self) -> bool:
        return all(rank(self.at(n)) == self.src.dim(n) for n in self.src.degrees())

    def is_surjective(self) -> bool:
        return all(rank(self.at(n)) == self.dst.dim(n) for n in self.dst.degrees())

    def is_iso(self) -> bool:
        return self.is_injective() and self.is_surjective()


def chain_map(src: ChainComplex, dst: ChainComplex, comps: dict[int, Matrix]) -> ChainMap:
    """Build a chain map; shapes and commutation with d are enforced."""
    if src.field != dst.field:
        raise FieldMismatch("chain map across different fields")
    clean: dict[int, Matrix] = {}
    for n, m in comps.items():
        want = (dst.dim(n), src.dim(n))
        if m.shape != want:
            raise InvalidMap(f"component at degree {n} has shape {m.shape}, expected {want}")
        if want[0] and want[1]:
            clean[n] = m
    f = ChainMap(src, dst, clean)
    for n in range(min(src.lo, dst.lo), max(src.hi, dst.hi) + 2):
        lhs = dst.d(n) @ f.at(n)
        rhs = f.at(n - 1) @ src.d(n)
        if lhs != rhs:
            raise InvalidMap(f"does not commute with d at degree {n}")
    return f


def validate_map_data(src: ChainComplex, dst: ChainComplex, comps: dict[int, Matrix]) -> str | None:
    try:
        chain_map(src, dst, comps)
    except (InvalidMap, FieldMismatch) as e:
        return str(e)
    return None


def identity_map(x: ChainComplex) -> ChainMap:
    return chain_map(x, x, {n: Matrix.identity(x.field, x.dim(n)) for n in x.degrees() if x.dim(n)})


def zero_map(src: ChainComplex, dst: ChainComplex) -> ChainMap:
    return chain_map(src, dst, {})


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """g after f."""
    if f.dst != g.src:
        raise InvalidMap("composition mismatch")
    comps = {}
    for n in f.src.degrees():
        if f.src.dim(n) and g.dst.dim(n):
            comps[n] = g.at(n) @ f.at(n)
    return chain_map(f.src, g.dst, comps)


def add_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    if f.src != g.src or f.dst != g.dst:
        raise InvalidMap("sum of maps with different endpoints")
    comps = {}
    for n in f.src.degrees():
        if f.src.dim(n) and f.dst.dim(n):
            comps[n] = f.at(n) + g.at(n)
    return chain_map(f.src, f.dst, comps)


def scale_map(f: ChainMap, c: int) -> ChainMap:
    return chain_map(f.src, f.dst, {n: m.scale(c) for n, m in f.comps.items()})


def sub_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    return add_maps(f, scale_map(g, -1))


# ---------------------------------------------------------------------------
# Homology


@dataclass(frozen=True)
class HomologyReport:
    dims: dict[int, int]
    cycles: dict[int, Matrix]
    boundaries: dict[int, Matrix]

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)


def homology(c: ChainComplex) -> HomologyReport:
    """Per-degree H_n = ker d_n / im d_{n+1}, with explicit bases."""
    dims: dict[int, int] = {}
    cycles: dict[int, Matrix] = {}
    boundaries: dict[int, Matrix] = {}
    for n in c.degrees():
        if not c.dim(n):
            continue
        z = kernel_basis(c.d(n))
        b = image_basis(c.d(n + 1))
        cycles[n] = z
        boundaries[n] = b
        h = z.cols - b.cols
        if h:
            dims[n] = h
    return HomologyReport(dims, cycles, boundaries)


def is_quasi_iso(f: ChainMap, below: int | None = None) -> bool:
    """True iff f induces isomorphisms on homology in every degree.

    With `below` set, only degrees strictly under the bound are compared
    (used by evidence checks whose constructions are valid in a window).
    """
    hx = homology(f.src)
    hy = homology(f.dst)
    top = max(f.src.hi, f.dst.hi)
    if below is not None:
        top = min(top, below - 1)
    for n in range(min(f.src.lo, f.dst.lo), top + 1):
        dx, dy = hx.dim(n), hy.dim(n)
        if dx != dy:
            return False
        if dx == 0:
            continue
        zx = hx.cycles[n]
        by = hy.boundaries[n]
        fz = f.at(n) @ zx
        induced_rank = rank(fz.hstack(by)) - by.cols
        if induced_rank != dx:
            return False
    return True


# ---------------------------------------------------------------------------
# Tensor product


def _blocks(a: ChainComplex, b: ChainComplex, n: int) -> list[tuple[int, int, int]]:
    """Nonzero summands (i, j, dim A_i * dim B_j) of (A (x) B)_n, i decreasing."""
    out = []
    for i in range(a.hi, a.lo - 1, -1):
        j = n - i
        sz = a.dim(i) * b.dim(j)
        if sz:
            out.append((i, j, sz))
    return out


def _block_offsets(blocks: list[tuple[int, int, int]]) -> dict[tuple[int, int], int]:
    out = {}
    pos = 0
    for i, j, sz in blocks:
        out[(i, j)] = pos
        pos += sz
    return out


def tensor_complex(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    if a.field != b.field:
        raise FieldMismatch("tensor across different fields")
    p = a.field.p
    dims: dict[int, int] = {}
    for n in range(a.lo + b.lo, a.hi + b.hi + 1):
        total = sum(sz for _, _, sz in _blocks(a, b, n))
        if total:
            dims[n] = total
    diff: dict[int, Matrix] = {}
    for n in dims:
        if (n - 1) not in dims:
            continue
        src_blocks = _blocks(a, b, n)
        dst_blocks = _blocks(a, b, n - 1)
        dst_off = _block_offsets(dst_blocks)
        m = np.zeros((dims[n - 1], dims[n]), dtype=np.int64)
        col = 0
        for i, j, sz in src_blocks:
            if (i - 1, j) in dst_off and a.dim(i - 1):
                blk = np.kron(a.d(i).a, np.eye(b.dim(j), dtype=np.int64)) % p
                r = dst_off[(i - 1, j)]
                m[r : r + blk.shape[0], col : col + sz] = blk
            if (i, j - 1) in dst_off and b.dim(j - 1):
                sign = 1 if i % 2 == 0 else p - 1
                blk = (sign * np.kron(np.eye(a.dim(i), dtype=np.int64), b.d(j).a)) % p
                r = dst_off[(i, j - 1)]
                m[r : r + blk.shape[0], col : col + sz] = (
                    m[r : r + blk.shape[0], col : col + sz] + blk
                ) % p
            col += sz
        diff[n] = Matrix.make(a.field, m)
    return chain_complex(a.field, dims, diff)


def tensor_map(f: ChainMap, g: ChainMap) -> ChainMap:
    """f (x) g, blockwise Kronecker; signs live only in differentials."""
    src = tensor_complex(f.src, g.src)
    dst = tensor_complex(f.dst, g.dst)
    p = f.src.field.p
    comps: dict[int, Matrix] = {}
    for n in src.degrees():
        if not (src.dim(n) and dst.dim(n)):
            continue
        sblocks = _blocks(f.src, g.src, n)
        dblocks = _blocks(f.dst, g.dst, n)
        doff = _block_offsets(dblocks)
        m = np.zeros((dst.dim(n), src.dim(n)), dtype=np.int64)
        col = 0
        for i, j, sz in sblocks:
            if (i, j) in doff:
                blk = np.kron(f.at(i).a, g.at(j).a) % p
                r = doff[(i, j)]
                m[r : r + blk.shape[0], col : col + sz] = blk
            col += sz
        comps[n] = Matrix.make(f.src.field, m)
    return chain_map(src, dst, comps)


def symmetry_iso(a: ChainComplex, b: ChainComplex) -> ChainMap:
    """tau: A (x) B -> B (x) A sending e_a (x) e_b to (-1)^{|a||b|} e_b (x) e_a."""
    src = tensor_complex(a, b)
    dst = tensor_complex(b, a)
    p = a.field.p
    comps: dict[int, Matrix] = {}
    for n in src.degrees():
        if not src.dim(n):
            continue
        sblocks = _blocks(a, b, n)
        dblocks = _blocks(b, a, n)
        doff = _block_offsets(dblocks)
        m = np.zeros((dst.dim(n), src.dim(n)), dtype=np.int64)
        col = 0
        for i, j, sz in sblocks:
            da, db = a.dim(i), b.dim(j)
            sign = 1 if (i * j) % 2 == 0 else p - 1
            r0 = doff[(j, i)]
            for r in range(da):
                for s in range(db):
                    m[r0 + s * da + r, col + r * db + s] = sign
            col += sz
        comps[n] = Matrix.make(a.field, m)
    return chain_map(src, dst, comps)


def assoc_iso(a: ChainComplex, b: ChainComplex, c: ChainComplex) -> ChainMap:
    """(A (x) B) (x) C -> A (x) (B (x) C), a signless permutation.

    Flat indices on the left are block(m=i+j, k) then (block(i, j) row) * dim C_k;
    on the right, rows of A_i stride over the whole of (B (x) C)_{j+k}, so the
    triple blocks interleave and must be addressed exactly.
    """
    src = tensor_complex(tensor_complex(a, b), c)
    dst = tensor_complex(a, tensor_complex(b, c))
    ab = tensor_complex(a, b)
    bc = tensor_complex(b, c)
    comps: dict[int, Matrix] = {}
    for n in src.degrees():
        if not src.dim(n):
            continue
        m = np.zeros((dst.dim(n), src.dim(n)), dtype=np.int64)
        louter = _block_offsets(_blocks(ab, c, n))
        router = _block_offsets(_blocks(a, bc, n))
        for (mab, k), lo_out in louter.items():
            for (i, j), o_ab in _block_offsets(_blocks(a, b, mab)).items():
                da, db, dc = a.dim(i), b.dim(j), c.dim(k)
                ro_out = router[(i, j + k)]
                o_bc = _block_offsets(_blocks(b, c, j + k))[(j, k)]
                dbc = bc.dim(j + k)
                for r in range(da):
                    for s in range(db):
                        for t in range(dc):
                            li = lo_out + (o_ab + r * db + s) * dc + t
                            ri = ro_out + r * dbc + o_bc + s * dc + t
                            m[ri, li] = 1
        comps[n] = Matrix.make(a.field, m)
    return chain_map(src, dst, comps)


def assoc_iso_inv(a: ChainComplex, b: ChainComplex, c: ChainComplex) -> ChainMap:
    f = assoc_iso(a, b, c)
    return chain_map(f.dst, f.src, {n: m.transpose() for n, m in f.comps.items()})


# ---------------------------------------------------------------------------
# Internal hom


def _hom_blocks(a: ChainComplex, b: ChainComplex, n: int) -> list[tuple[int, int]]:
    """Summands Hom(A_i, B_{i+n}), i increasing; sizes dim A_i * dim B_{i+n}."""
    out = []
    for i in range(a.lo, a.hi + 1):
        sz = a.dim(i) * b.dim(i + n)
        if sz:
            out.append((i, sz))
    return out


def hom_complex(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """Hom(A, B)_n = sum_i Hom(A_i, B_{i+n}); d(phi) = d_B phi - (-1)^n phi d_A.

    A component phi_i is a dim(B_{i+n}) x dim(A_i) matrix, flattened row-major,
    so degree-0 cycles are exactly chain maps A -> B.
    """
    if a.field != b.field:
        raise FieldMismatch("hom across different fields")
    p = a.field.p
    dims: dict[int, int] = {}
    for n in range(b.lo - a.hi, b.hi - a.lo + 1):
        total = sum(sz for _, sz in _hom_blocks(a, b, n))
        if total:
            dims[n] = total
    diff: dict[int, Matrix] = {}
    for n in dims:
        if (n - 1) not in dims:
            continue
        sblocks = _hom_blocks(a, b, n)
        dblocks = _hom_blocks(a, b, n - 1)
        doff = {}
        pos = 0
        for i, sz in dblocks:
            doff[i] = pos
            pos += sz
        m = np.zeros((dims[n - 1], dims[n]), dtype=np.int64)
        col = 0
        sign = p - 1 if n % 2 == 0 else 1  # -(-1)^n
        for i, sz in sblocks:
            if i in doff and b.dim(i + n - 1):
                blk = np.kron(b.d(i + n).a, np.eye(a.dim(i), dtype=np.int64)) % p
                r = doff[i]
                m[r : r + blk.shape[0], col : col + sz] = blk
            if (i - 1) in doff and a.dim(i - 1) and b.dim(i - 1 + n):
                blk = (sign * np.kron(np.eye(b.dim(i + n - 1), dtype=np.int64), a.d(i).a.T)) % p
                r = doff[i - 1]
                m[r : r + blk.shape[0], col : col + sz] = (
                    m[r : r + blk.shape[0], col : col + sz] + blk
                ) % p
            col += sz
        diff[n] = Matrix.make(a.field, m)
    return chain_complex(a.field, dims, diff)


def hom_post(a: ChainComplex, g: ChainMap) -> ChainMap:
    """Hom(A, g): Hom(A, B) -> Hom(A, B') by post-composition."""
    src = hom_complex(a, g.src)
    dst = hom_complex(a, g.dst)
    p = a.field.p
    comps: dict[int, Matrix] = {}
    for n in src.degrees():
        if not (src.dim(n) and dst.dim(n)):
            continue
        sblocks = _hom_blocks(a, g.src, n)
        dblocks = _hom_blocks(a, g.dst, n)
        doff = {}
        pos = 0
        for i, sz in dblocks:
            doff[i] = pos
            pos += sz
        m = np.zeros((dst.dim(n), src.dim(n)), dtype=np.int64)
        col = 0
        for i, sz in sblocks:
            if i in doff:
                blk = np.kron(g.at(i + n).a, np.eye(a.dim(i), dtype=np.int64)) % p
                m[doff[i] : doff[i] + blk.shape[0], col : col + sz] = blk
            col += sz
        comps[n] = Matrix.make(a.field, m)
    return chain_map(src, dst, comps)


def hom_pre(f: ChainMap, b: ChainComplex) -> ChainMap:
    """Hom(f, B): Hom(A', B) -> Hom(A, B) by pre-composition with f: A -> A'."""
    src = hom_complex(f.dst, b)
    dst = hom_complex(f.src, b)
    p = b.field.p
    comps: dict[int, Matrix] = {}
    for n in src.degrees():
        if not (src.dim(n) and dst.dim(n)):
            continue
        sblocks = _hom_blocks(f.dst, b, n)
        dblocks = _hom_blocks(f.src, b, n)
        doff = {}
        pos = 0
        for i, sz in dblocks:
            doff[i] = pos
            pos += sz
        m = np.zeros((dst.dim(n), src.dim(n)), dtype=np.int64)
        col = 0
        for i, sz in sblocks:
            if i in doff and f.src.dim(i):
                blk = np.kron(np.eye(b.dim(i + n), dtype=np.int64), f.at(i).a.T) % p
                m[doff[i] : doff[i] + blk.shape[0], col : col + sz] = blk
            col += sz
        comps[n] = Matrix.make(b.field, m)
    return chain_map(src, dst, comps)


# ---------------------------------------------------------------------------
# Spaces of chain maps and homotopies, via the shared constraint engine


def chain_map_space(x: ChainComplex, y: ChainComplex) -> list[ChainMap]:
    """A basis of the vector space of chain maps x -> y."""
    from .linsolve import Equation, Term, UnknownSpec, solve_constraints

    field = x.field
    degs = [n for n in range(min(x.lo, y.lo), max(x.hi, y.hi) + 1) if x.dim(n) and y.dim(n)]
    unknowns = [UnknownSpec(f"h{n}", y.dim(n), x.dim(n)) for n in degs]
    eqs = []
    for n in range(min(x.lo, y.lo), max(x.hi, y.hi) + 2):
        rows, cols = y.dim(n - 1), x.dim(n)
        if rows == 0 or cols == 0:
            continue
        terms = []
        if n in degs:
            terms.append(Term(y.d(n), f"h{n}", Matrix.identity(field, x.dim(n))))
        if (n - 1) in degs:
            terms.append(Term(Matrix.identity(field, y.dim(n - 1)).scale(-1), f"h{n-1}", x.d(n)))
        if terms:
            eqs.append(Equation(tuple(terms), Matrix.zeros(field, rows, cols)))
    sol = solve_constraints(field, unknowns, eqs, want_nullspace=True)
    assert sol is not None
    out = []
    for vec in sol.nullspace:
        out.append(chain_map(x, y, {n: vec[f"h{n}"] for n in degs}))
    return out


def chain_map_space_dim(x: ChainComplex, y: ChainComplex) -> int:
    return len(chain_map_space(x, y))
