"""JSON serialization for every artifact type.

Matrices are arrays of arrays of nonneg integers; the field is {"p": prime};
all output is canonical (sorted keys, compact separators) so that equal
objects print identically and parse(print(x)) == x.
"""

from __future__ import annotations

import json
from pathlib import Path

from .field import Field, Matrix
from .complexes import ChainComplex, ChainMap, chain_complex, chain_map
from .arrows import ArrowObject, ArrowSquare, arrow, square
from .dg import DGAlgebra, DGBimodule, MonoidHom, SmithIdeal
from .modules import RightModule, SmithModule, ideal_action_tensor


class ParseError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def matrix_to_json(m: Matrix) -> list[list[int]]:
    return m.to_lists()


def field_to_json(f: Field) -> dict:
    return {"p": f.p}


def complex_to_json(c: ChainComplex) -> dict:
    return {
        "p": c.field.p,
        "lo": c.lo,
        "hi": c.hi,
        "dims": {str(n): d for n, d in sorted(c.dims.items())},
        "diff": {str(n): matrix_to_json(m) for n, m in sorted(c.diff.items())},
    }


def complex_from_json(data: dict) -> ChainComplex:
    try:
        field = Field(int(data["p"]))
        dims = {int(k): int(v) for k, v in data.get("dims", {}).items()}
        diff = {}
        for k, rows in data.get("diff", {}).items():
            n = int(k)
            r = dims.get(n - 1, 0)
            c = dims.get(n, 0)
            diff[n] = Matrix.make(field, rows, rows=r, cols=c)
        return chain_complex(field, dims, diff)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad complex: {e}") from e


def map_to_json(f: ChainMap) -> dict:
    return {
        "src": complex_to_json(f.src),
        "dst": complex_to_json(f.dst),
        "comps": {str(n): matrix_to_json(m) for n, m in sorted(f.comps.items())},
    }


def map_from_json(data: dict, base_dir: Path | None = None) -> ChainMap:
    try:
        src = _resolve_complex(data["src"], base_dir)
        dst = _resolve_complex(data["dst"], base_dir)
        comps = {}
        for k, rows in data.get("comps", {}).items():
            n = int(k)
            comps[n] = Matrix.make(src.field, rows, rows=dst.dim(n), cols=src.dim(n))
        return chain_map(src, dst, comps)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad map: {e}") from e


def _resolve_complex(spec, base_dir: Path | None) -> ChainComplex:
    if isinstance(spec, str):
        path = Path(spec)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return complex_from_json(json.loads(path.read_text()))
    return complex_from_json(spec)


def arrow_to_json(a: ArrowObject) -> dict:
    return {"f": map_to_json(a.f)}


def arrow_from_json(data: dict, base_dir: Path | None = None) -> ArrowObject:
    return arrow(map_from_json(data["f"], base_dir))


def square_to_json(s: ArrowSquare) -> dict:
    return {
        "src": arrow_to_json(s.src),
        "dst": arrow_to_json(s.dst),
        "a0": map_to_json(s.a0),
        "a1": map_to_json(s.a1),
    }


def square_from_json(data: dict, base_dir: Path | None = None) -> ArrowSquare:
    return square(
        arrow_from_json(data["src"], base_dir),
        arrow_from_json(data["dst"], base_dir),
        map_from_json(data["a0"], base_dir),
        map_from_json(data["a1"], base_dir),
    )


def dga_to_json(r: DGAlgebra) -> dict:
    return {
        "carrier": complex_to_json(r.carrier),
        "mult": map_to_json(r.mult),
        "unit": map_to_json(r.unit),
    }


def dga_from_json(data: dict, base_dir: Path | None = None) -> DGAlgebra:
    return DGAlgebra(
        _resolve_complex(data["carrier"], base_dir),
        map_from_json(data["mult"], base_dir),
        map_from_json(data["unit"], base_dir),
    )


def smith_to_json(s: SmithIdeal) -> dict:
    return {
        "alg": dga_to_json(s.alg),
        "ideal": {
            "carrier": complex_to_json(s.ideal.carrier),
            "left": map_to_json(s.ideal.left),
            "right": map_to_json(s.ideal.right),
        },
        "j": map_to_json(s.j),
    }


def smith_from_json(data: dict, base_dir: Path | None = None) -> SmithIdeal:
    alg = dga_from_json(data["alg"], base_dir)
    ideal = data["ideal"]
    bim = DGBimodule(
        alg,
        _resolve_complex(ideal["carrier"], base_dir),
        map_from_json(ideal["left"], base_dir),
        map_from_json(ideal["right"], base_dir),
    )
    return SmithIdeal(alg, bim, map_from_json(data["j"], base_dir))


def monoid_hom_to_json(p: MonoidHom) -> dict:
    return {
        "src": dga_to_json(p.src),
        "dst": dga_to_json(p.dst),
        "map": map_to_json(p.map),
    }


def monoid_hom_from_json(data: dict, base_dir: Path | None = None) -> MonoidHom:
    return MonoidHom(
        dga_from_json(data["src"], base_dir),
        dga_from_json(data["dst"], base_dir),
        map_from_json(data["map"], base_dir),
    )


def smith_module_to_json(m: SmithModule) -> dict:
    return {
        "over": smith_to_json(m.over),
        "f": map_to_json(m.f),
        "act0": map_to_json(m.m0.act),
        "act1": map_to_json(m.m1.act),
        "phi": map_to_json(m.phi),
    }


def smith_module_from_json(data: dict, base_dir: Path | None = None) -> SmithModule:
    over = smith_from_json(data["over"], base_dir)
    f = map_from_json(data["f"], base_dir)
    act0 = map_from_json(data["act0"], base_dir)
    act1 = map_from_json(data["act1"], base_dir)
    m0 = RightModule(over.alg, f.src, act0)
    m1 = RightModule(over.alg, f.dst, act1)
    phi = map_from_json(data["phi"], base_dir)
    return SmithModule(over, f, m0, m1, phi)
