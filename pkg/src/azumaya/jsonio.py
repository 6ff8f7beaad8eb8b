"""Canonical JSON encoding and liberal decoding of the domain types.

Output is deterministic: scalars print as JSON integers when they are
rational integers and otherwise as canonical lowest-terms strings such as
"1/2" or "1/2-3/4i"; objects are emitted with sorted keys by the CLI.
Input accepts integers, the string forms, and {"re": "a/b", "im": "c/d"}
objects interchangeably wherever a scalar is expected.
"""

from __future__ import annotations

from fractions import Fraction

from .azpoint import AffinePresentation, PushforwardModule, RepPoint, SupportLengthData
from .higgsing import PolyMatrix
from .kahler import ClassicalForm, FormTerm, FormalForm, MorphismToAffine, MPolyMatrix
from .linalg import Matrix
from .orbits import JordanData
from .poly import MultiPoly, UniPoly
from .scalars import GaussianRational
from .torus import AzCircleMorphism, Component, HomologyClass, SurrogateClass, TorusGeometry, WeightedCycle


class InputError(Exception):
    """Malformed input payload (schema or scalar syntax)."""


# ---------------------------------------------------------------------------
# scalars


def parse_scalar(obj) -> GaussianRational:
    try:
        if isinstance(obj, bool):
            raise InputError(f"not a scalar: {obj!r}")
        if isinstance(obj, int):
            return GaussianRational(obj)
        if isinstance(obj, str):
            return _parse_scalar_string(obj)
        if isinstance(obj, dict):
            return GaussianRational(
                Fraction(str(obj.get("re", 0))), Fraction(str(obj.get("im", 0)))
            )
    except InputError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar {obj!r}: {exc}") from exc
    raise InputError(f"cannot read a scalar from {obj!r}")


def _parse_scalar_string(s: str) -> GaussianRational:
    s = s.strip().replace(" ", "")
    if not s:
        raise InputError("empty scalar string")
    if s.endswith(("i", "I")):
        body = s[:-1]
        re_part, im_part = "0", body
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "+-/":
                re_part, im_part = body[:k], body[k:]
                break
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return GaussianRational(Fraction(re_part), Fraction(im_part))
    return GaussianRational(Fraction(s))


def scalar_json(g: GaussianRational):
    """JSON integer when possible, canonical string otherwise."""
    if g.is_integer():
        return int(g.re)
    return str(g)


def scalar_string(g: GaussianRational) -> str:
    """Always the canonical string form (for labels such as roots)."""
    return str(g)


# ---------------------------------------------------------------------------
# polynomials and matrices


def parse_matrix(obj) -> Matrix:
    if isinstance(obj, dict) and "matrix" in obj:
        obj = obj["matrix"]
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise InputError("a matrix is a nonempty nested array")
    return Matrix([[parse_scalar(x) for x in row] for row in obj])


def matrix_json(m: Matrix):
    return [[scalar_json(x) for x in row] for row in m.rows]


def parse_unipoly(obj, var: str = "z") -> UniPoly:
    if isinstance(obj, dict):
        var = obj.get("var", var)
        obj = obj.get("coeffs", [])
    if not isinstance(obj, list):
        raise InputError("a univariate polynomial is a coefficient array, lowest first")
    return UniPoly(var, [parse_scalar(c) for c in obj])


def unipoly_json(p: UniPoly):
    return [scalar_json(c) for c in p.coeffs]


def parse_terms(obj, variables) -> MultiPoly:
    if isinstance(obj, dict):
        obj = obj.get("terms", [])
    if not isinstance(obj, list):
        raise InputError("polynomial terms must be a list of {exps, coef}")
    terms = {}
    for t in obj:
        if not isinstance(t, dict) or "exps" not in t or "coef" not in t:
            raise InputError("each term needs 'exps' and 'coef'")
        exps = tuple(int(e) for e in t["exps"])
        if len(exps) != len(variables):
            raise InputError("exponent arity does not match the variables")
        c = parse_scalar(t["coef"])
        if exps in terms:
            raise InputError("duplicate exponent tuple in term list")
        terms[exps] = c
    return MultiPoly(tuple(variables), terms)


def terms_json(f: MultiPoly):
    return [
        {"exps": list(e), "coef": scalar_json(c)} for e, c in f.sorted_terms()
    ]


def multipoly_json(f: MultiPoly):
    return {"vars": list(f.vars), "terms": terms_json(f)}


# ---------------------------------------------------------------------------
# representation points


def parse_rep_point(obj) -> RepPoint:
    if not isinstance(obj, dict):
        raise InputError("a representation point is an object")
    try:
        variables = [str(v) for v in obj["vars"]]
        mats = [parse_matrix(m) for m in obj["matrices"]]
    except KeyError as exc:
        raise InputError(f"representation point needs {exc}") from exc
    t = RepPoint(variables, mats)
    if "r" in obj and int(obj["r"]) != t.r:
        raise InputError("declared rank does not match the matrices")
    return t


def rep_point_json(t: RepPoint):
    return {
        "r": t.r,
        "vars": list(t.vars),
        "matrices": [matrix_json(m) for m in t.matrices],
    }


def parse_presentation(obj) -> AffinePresentation:
    if not isinstance(obj, dict) or "vars" not in obj:
        raise InputError("a presentation is {vars, relators}")
    variables = tuple(str(v) for v in obj["vars"])
    relators = [parse_terms(r, variables) for r in obj.get("relators", [])]
    return AffinePresentation(variables, relators)


def support_json(s: SupportLengthData):
    return [
        {"point": [scalar_string(x) for x in pt], "length": ln}
        for pt, ln in s.entries
    ]


def parse_support(obj) -> SupportLengthData:
    if isinstance(obj, dict):
        obj = obj.get("support", obj.get("entries"))
    if not isinstance(obj, list):
        raise InputError("support-length data is a list of {point, length}")
    entries = []
    for e in obj:
        entries.append((tuple(parse_scalar(x) for x in e["point"]), int(e["length"])))
    return SupportLengthData(entries)


def pushforward_json(pf: PushforwardModule):
    return {
        "entries": [
            {
                "point": [scalar_string(x) for x in pt],
                "length": ln,
                "filtration_ranks": list(ranks),
            }
            for pt, ln, ranks in pf.entries
        ]
    }


# ---------------------------------------------------------------------------
# orbits


def parse_jordan(obj) -> JordanData:
    if isinstance(obj, dict):
        obj = obj.get("jordan", obj.get("entries"))
    if not isinstance(obj, list):
        raise InputError("Jordan data is a list of {point, partition}")
    entries = []
    for e in obj:
        try:
            pt = tuple(parse_scalar(x) for x in e["point"])
            parts = tuple(int(x) for x in e["partition"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad Jordan entry {e!r}") from exc
        entries.append((pt, parts))
    try:
        return JordanData(entries)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def jordan_json(j: JordanData):
    return [
        {"point": [scalar_string(x) for x in pt], "partition": list(parts)}
        for pt, parts in j.entries
    ]


# ---------------------------------------------------------------------------
# torus


def parse_morphism(obj) -> AzCircleMorphism:
    if not isinstance(obj, dict) or "tau" not in obj:
        raise InputError("a torus morphism is {tau, components, profile?}")
    geom = TorusGeometry(parse_scalar(obj["tau"]))
    comps = []
    for c in obj.get("components", []):
        cls = c.get("class")
        if not isinstance(cls, list) or len(cls) != 2:
            raise InputError("component class must be [p, q]")
        wrap = int(c.get("wrap", 1))
        full = HomologyClass(int(cls[0]) * wrap, int(cls[1]) * wrap)
        comps.append(
            Component(
                int(c.get("d", 1)),
                full,
                parse_scalar(c.get("offset", 0)),
                int(c.get("fiber_rank", 1)),
            )
        )
    profile = None
    if obj.get("profile") is not None:
        profile = tuple(parse_jordan(j) for j in obj["profile"])
    return AzCircleMorphism(geom, comps, profile)


def morphism_json(phi: AzCircleMorphism):
    comps = []
    for c in phi.components:
        if c.wrap.is_zero():
            cls, wrap = [0, 0], 0
        else:
            prim, m = c.wrap.primitive()
            cls, wrap = [prim.p, prim.q], m
        comps.append(
            {
                "class": cls,
                "d": c.d,
                "fiber_rank": c.fiber_rank,
                "offset": scalar_json(phi.geometry.reduce(c.offset)),
                "wrap": wrap,
            }
        )
    out = {"tau": scalar_json(phi.geometry.tau), "components": comps}
    if phi.profile is not None:
        out["profile"] = [jordan_json(j) for j in phi.profile]
    return out


def surrogate_json(s: SurrogateClass):
    return [s.r, s.p, s.q]


def parse_surrogate(obj) -> SurrogateClass:
    if isinstance(obj, dict):
        obj = obj.get("target", obj.get("surrogate"))
    if not isinstance(obj, list) or len(obj) != 3:
        raise InputError("a surrogate class is [r, p, q]")
    return SurrogateClass(int(obj[0]), int(obj[1]), int(obj[2]))


def cycle_json(cyc: WeightedCycle):
    return {
        "lines": [
            {
                "class": [prim.p, prim.q],
                "offset": scalar_json(offset),
                "wrap": wraps,
                "rank": length,
            }
            for prim, offset, wraps, length in cyc.lines
        ],
        "points": [
            {"point": scalar_string(pt), "length": ln} for pt, ln in cyc.points
        ],
    }


# ---------------------------------------------------------------------------
# higgsing


def parse_poly_matrix(obj, var: str = "z") -> PolyMatrix:
    if isinstance(obj, dict):
        var = obj.get("var", var)
        obj = obj.get("entries")
    if not isinstance(obj, list) or not obj:
        raise InputError("a polynomial matrix is a nested array of coefficient arrays")
    grid = []
    for row in obj:
        new = []
        for e in row:
            if isinstance(e, list):
                new.append(parse_unipoly(e, var))
            else:
                new.append(UniPoly.constant(parse_scalar(e), var))
        grid.append(new)
    try:
        return PolyMatrix(grid, var)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def poly_matrix_json(b: PolyMatrix):
    return [[unipoly_json(e) for e in row] for row in b.entries]


# ---------------------------------------------------------------------------
# kahler


def parse_mpoly_matrix(obj, variables=None) -> MPolyMatrix:
    if isinstance(obj, dict):
        variables = tuple(str(v) for v in obj.get("vars", variables or ()))
        obj = obj.get("entries")
    if variables is None:
        raise InputError("matrix over a polynomial ring needs variables")
    variables = tuple(variables)
    if not isinstance(obj, list) or not obj:
        raise InputError("matrix entries must be a nested array of term lists")
    grid = []
    for row in obj:
        new = []
        for e in row:
            if isinstance(e, list):
                new.append(parse_terms(e, variables))
            else:
                new.append(MultiPoly.constant(variables, parse_scalar(e)))
        grid.append(new)
    try:
        return MPolyMatrix(variables, grid)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def mpoly_matrix_json(m: MPolyMatrix):
    return [[terms_json(e) for e in row] for row in m.entries]


def parse_formal_form(obj) -> FormalForm:
    if not isinstance(obj, dict) or "vars" not in obj or "r" not in obj:
        raise InputError("a formal form is {vars, r, terms}")
    variables = tuple(str(v) for v in obj["vars"])
    r = int(obj["r"])
    terms = []
    degree = int(obj.get("degree", 1))
    for t in obj.get("terms", []):
        pre = parse_mpoly_matrix(t["pre"], variables) if "pre" in t else MPolyMatrix.identity(variables, r)
        factors = []
        for f in t.get("factors", []):
            dm = parse_mpoly_matrix(f["dm"], variables)
            post = (
                parse_mpoly_matrix(f["post"], variables)
                if "post" in f
                else MPolyMatrix.identity(variables, r)
            )
            factors.append((dm, post))
        if not factors:
            raise InputError("a form term needs at least one differential factor")
        terms.append(FormTerm(pre, factors))
        degree = len(factors)
    try:
        return FormalForm(variables, r, degree, terms)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def formal_form_json(w: FormalForm):
    return {
        "vars": list(w.vars),
        "r": w.r,
        "degree": w.degree,
        "terms": [
            {
                "pre": mpoly_matrix_json(t.pre),
                "factors": [
                    {"dm": mpoly_matrix_json(dm), "post": mpoly_matrix_json(post)}
                    for dm, post in t.factors
                ],
            }
            for t in w.canonical_terms()
        ],
    }


def classical_form_json(f: ClassicalForm):
    return {
        "vars": list(f.vars),
        "degree": f.degree,
        "form": [
            {"index": list(idx), "coef": terms_json(f.coeffs[idx])}
            for idx in sorted(f.coeffs)
        ],
    }


def parse_affine_morphism(obj) -> MorphismToAffine:
    if not isinstance(obj, dict) or "target_vars" not in obj or "images" not in obj:
        raise InputError("a morphism is {target_vars, source_vars, r?, images}")
    source_vars = tuple(str(v) for v in obj.get("source_vars", ()))
    images = [parse_mpoly_matrix(m, source_vars or None) for m in obj["images"]]
    try:
        return MorphismToAffine(tuple(str(v) for v in obj["target_vars"]), images)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
