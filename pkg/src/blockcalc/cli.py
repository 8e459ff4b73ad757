"""Command line interface and the end-to-end construction pipeline.

``blockcalc pipeline --in datum.json`` reads a cocycle and a quaternion
algebra and walks through the construction of a variety with maximal
endomorphism field: cyclotomic splitting field, class order, splitting map,
twist by a character, descent identity, double centralizer, dimension
bookkeeping.  Every stage re-checks what the previous one produced.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import classify, cohom, csa, matalg
from .errors import (
    BlockcalcError,
    InputError,
    PipelineInvariantViolation,
    SchemaError,
    StageError,
)


@dataclass
class IsogenyDatum:
    cocycle: cohom.Cocycle2
    algebra: csa.QuaternionAlgebraQ
    k_has_real_embedding: bool = True
    albert_type: str = "II"
    center_degree: int = 1
    dim_B: int = 2
    center_totally_real: bool = True
    declared_schur_index: int = None

    def endomorphism_datum(self):
        return classify.EndomorphismDatum(
            center_degree=self.center_degree,
            schur_index=self.algebra.schur_index,
            albert_type=self.albert_type,
            dim_B=self.dim_B,
            center_totally_real=self.center_totally_real,
        )


def _rational(obj, path):
    try:
        q = Fraction(str(obj))
    except (ValueError, ZeroDivisionError):
        raise SchemaError(path, f"not a rational: {obj!r}") from None
    if q == 0:
        raise SchemaError(path, "must be nonzero")
    return q


def parse_datum(text):
    """Read and validate an isogeny datum from JSON text."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise SchemaError("$", "expected an object")
    cocycle = cohom.Cocycle2.from_json(obj)

    alg = obj.get("algebra")
    if not isinstance(alg, dict):
        raise SchemaError("algebra", "expected {'a', 'b'} or {'ramified': [...]}")
    if "a" in alg or "b" in alg:
        algebra = csa.QuaternionAlgebraQ(_rational(alg.get("a"), "algebra.a"),
                                         _rational(alg.get("b"), "algebra.b"))
    elif "ramified" in alg:
        try:
            places = [csa.PlaceQ(p) for p in alg["ramified"]]
            algebra = csa.algebra_with_ramification(places)
        except ValueError as exc:
            raise SchemaError("algebra.ramified", str(exc)) from None
    else:
        raise SchemaError("algebra", "expected {'a', 'b'} or {'ramified': [...]}")

    t = algebra.schur_index
    declared = obj.get("schur_index")
    if declared is not None and int(declared) != t:
        raise SchemaError("schur_index", f"declared {declared} but the ramification "
                          f"{[str(v) for v in algebra.ramified_places()]} gives {t}")

    flags = obj.get("flags", {})
    if not isinstance(flags, dict):
        raise SchemaError("flags", "expected an object")
    f = int(flags.get("f", 1))
    datum = IsogenyDatum(
        cocycle=cocycle,
        algebra=algebra,
        k_has_real_embedding=bool(flags.get("k_has_real_embedding", True)),
        albert_type=str(flags.get("albert_type", "I" if t == 1 else "II")),
        center_degree=f,
        dim_B=int(flags.get("dim_B", t * f)),
        center_totally_real=bool(flags.get("center_totally_real", True)),
        declared_schur_index=declared,
    )
    try:
        datum.endomorphism_datum()
    except InputError as exc:
        raise SchemaError("flags", str(exc)) from None
    return datum


@dataclass
class ClassificationReport:
    values: dict = field(default_factory=dict)
    steps: list = field(default_factory=list)

    def __getitem__(self, key):
        return self.values[key]

    def record(self, stage, rule, **values):
        self.values.update(values)
        self.steps.append({"stage": stage, "rule": rule,
                           "result": {k: _jsonable(v) for k, v in values.items()}})

    def to_json(self):
        out = {k: _jsonable(v) for k, v in self.values.items()}
        out["steps"] = self.steps
        return out


def _jsonable(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


class _Stage:
    def __init__(self, name):
        self.name = name

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc is not None and isinstance(exc, BlockcalcError) and not isinstance(exc, StageError):
            raise StageError(self.name, exc) from exc
        return False


def run_pipeline(datum):
    """Run every construction stage on ``datum`` and collect the results."""
    rep = ClassificationReport()
    algebra = datum.algebra

    with _Stage("splitting-field"):
        ramified, t = csa.ramification_data(algebra)
        m_cyc = csa.min_cyclotomic_splitting(algebra)
        rep.record("splitting-field", "cyclotomic-splitting",
                   algebra=[str(algebra.a), str(algebra.b)],
                   ramified=[str(v) for v in ramified], t=t, m_cyc=m_cyc)

    with _Stage("class-order"):
        m, d = cohom.class_order(datum.cocycle)
        rep.record("class-order", "coboundary-smith-form", m=m, d=d)

    with _Stage("split"):
        beta0 = cohom.split_cocycle(datum.cocycle)
        rep.record("split", "splitting-map", beta0_group_order=beta0.group.order)

    with _Stage("adjust"):
        adj = cohom.adjust_splitting_map_details(beta0, m_cyc, m, d)
        beta = adj.beta
        rep.record("adjust", "character-twist", r=adj.r, e=adj.e, chi_order=adj.chi_order,
                   epsilon_order=adj.epsilon.order, beta=beta)

    with _Stage("field"):
        ebeta = cohom.splitting_field_of(beta)
        if not cohom.contains_zeta(ebeta, m_cyc):
            raise PipelineInvariantViolation(f"zeta_{m_cyc} is not in E_beta")
        rep.record("field", "generated-subfield", E_beta_degree=ebeta.degree,
                   E_beta_conductor=ebeta.conductor, E_beta_fixing=list(ebeta.fixing))

    with _Stage("splits"):
        kfield = csa.AbelianFieldSpec.from_fixing(ebeta.conductor, ebeta.fixing)
        ok = csa.splits(algebra, kfield)
        rep.record("splits", "local-degree-criterion", splits=ok)
        if not ok:
            raise PipelineInvariantViolation("E_beta does not split the algebra")

    with _Stage("descent"):
        emb = matalg.FieldEmbedding.for_values(beta.values, algebra)
        ok = matalg.descent_cocycle_check(datum.cocycle, beta, emb)
        rep.record("descent", "descent-identity", descent_check=ok,
                   E_beta_generator=emb.theta,
                   E_beta_minpoly=[str(c) for c in emb.minpoly])
        if not ok:
            raise PipelineInvariantViolation("descent identity fails")

    with _Stage("double-centralizer"):
        sub = emb.image_subalgebra()
        cent = matalg.centralizer(sub)
        ok = (cent.dim * sub.dim == emb.ambient.dim) and matalg.centralizer(cent).same_span(sub)
        rep.record("double-centralizer", "double-centralizer", double_centralizer=ok,
                   centralizer_dim=cent.dim, ambient_dim=emb.ambient.dim)
        if not ok:
            raise PipelineInvariantViolation("double centralizer identity fails")

    with _Stage("classify"):
        ed = datum.endomorphism_datum()
        # E_beta is computed over Q; the center degree enters only the bookkeeping
        shape = classify.dimension_bookkeeping(ed, ebeta.degree)
        bb = classify.building_block_check(ed)
        gl2 = classify.is_gl2_type(shape)
        if bb and shape.dim_A != shape.n * ed.dim_B:
            raise PipelineInvariantViolation("dim A differs from n dim B")
        rep.record("classify", "dimension-bookkeeping", n=shape.n, dim_A=shape.dim_A,
                   field_degree=shape.field_degree, building_block=bb, gl2_type=gl2,
                   albert=classify.albert_filter(ed, datum.k_has_real_embedding),
                   factor_patterns=[[dim, verdict] for dim, verdict
                                    in classify.factor_pattern_filter(shape.dim_A)])
    return rep


def emit_report(report, fmt="json"):
    data = report.to_json() if hasattr(report, "to_json") else report
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt == "human":
        keys = [k for k in sorted(data) if k not in ("steps", "beta", "d")]
        width = max(len(k) for k in keys) if keys else 0
        lines = [f"{k.ljust(width)}  {_short(data[k])}" for k in keys]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; use 'json' or 'human'")


def _short(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, ensure_ascii=False)
    return str(v)


# -- argument parsing ---------------------------------------------------------


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_cocycle(path):
    try:
        obj = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    return cohom.Cocycle2.from_json(obj)


def _cmd_pipeline(args):
    rep = run_pipeline(parse_datum(_read(args.inp)))
    return rep.to_json(), "human" if args.human else "json"


def _cmd_cocycle_order(args):
    m, d = cohom.class_order(_load_cocycle(args.inp))
    return {"m": m, "d": [v.to_json() for v in d]}, None


def _cmd_split(args):
    beta = cohom.split_cocycle(_load_cocycle(args.inp), args.conductor)
    sf = cohom.splitting_field_of(beta)
    return {"beta": beta.to_json(), "E_beta_degree": sf.degree}, None


def _cmd_adjust(args):
    c = _load_cocycle(args.inp)
    m, d = cohom.class_order(c)
    beta0 = cohom.split_cocycle(c, args.conductor)
    adj = cohom.adjust_splitting_map_details(beta0, args.n, m, d)
    sf = cohom.splitting_field_of(adj.beta)
    return {"m": m, "r": adj.r, "e": adj.e, "chi_order": adj.chi_order,
            "epsilon_order": adj.epsilon.order, "E_beta_degree": sf.degree,
            "contains_zeta_n": cohom.contains_zeta(sf, args.n),
            "beta": adj.beta.to_json()}, None


def _cmd_hilbert(args):
    return {"a": args.a, "b": args.b, "place": args.v,
            "symbol": csa.hilbert_symbol(Fraction(args.a), Fraction(args.b), args.v)}, None


def _algebra(args):
    try:
        return csa.QuaternionAlgebraQ(Fraction(args.a), Fraction(args.b))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None


def _cmd_ramify(args):
    ram, t = csa.ramification_data(_algebra(args))
    return {"ramified": [str(v) for v in ram], "schur_index": t}, None


def _cmd_split_field(args):
    alg = _algebra(args)
    m = csa.min_cyclotomic_splitting(alg, args.cap)
    return {"m": m, "ramified": [str(v) for v in alg.ramified_places()],
            "schur_index": alg.schur_index}, None


def _parse_at(spec):
    try:
        place, k = spec.split(":")
        return csa.make_constraint(place, int(k))
    except ValueError as exc:
        raise InputError(f"bad constraint {spec!r}: {exc}") from None


def _cmd_gw(args):
    constraints = [_parse_at(s) for s in args.at]
    try:
        fld = csa.grunwald_wang_search(constraints, args.deg, args.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return {"field": fld.to_json(),
            "local_degrees": {str(c.place): fld.local_degree(c.place) for c in constraints}}, None


def _cmd_classify(args):
    datum = classify.EndomorphismDatum(
        center_degree=args.f, schur_index=args.t, albert_type=args.type, dim_B=args.dimB,
        center_totally_real=not args.cm_center)
    out = {"building_block": classify.building_block_check(datum),
           "albert": classify.albert_filter(datum, args.real_embedding).to_json()}
    if args.n_e is not None:
        shape = classify.dimension_bookkeeping(datum, args.n_e)
        out.update(shape.to_json(), gl2_type=classify.is_gl2_type(shape))
    return out, None


def build_parser():
    parser = argparse.ArgumentParser(prog="blockcalc", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pipeline", help="run the full construction on a datum")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.add_argument("--human", action="store_true")
    p.set_defaults(func=_cmd_pipeline)

    for name, func, help_ in [("cocycle-order", _cmd_cocycle_order, "class order and witness"),
                              ("split", _cmd_split, "splitting map of a cocycle"),
                              ("adjust", _cmd_adjust, "twist a splitting map to contain zeta_n")]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--in", dest="inp", default="-")
        p.add_argument("--out")
        if name != "cocycle-order":
            p.add_argument("--conductor", type=int)
        if name == "adjust":
            p.add_argument("--n", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("hilbert", help="Hilbert symbol (a, b)_v")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("v")
    p.set_defaults(func=_cmd_hilbert)

    for name, func in [("ramify", _cmd_ramify), ("split-field", _cmd_split_field)]:
        p = sub.add_parser(name)
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("--cap", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("gw", help="cyclic field with prescribed local degrees")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--at", action="append", default=[], metavar="PLACE:K")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=_cmd_gw)

    p = sub.add_parser("classify", help="building-block and Albert-type rules")
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--type", required=True, choices=classify.ALBERT_TYPES)
    p.add_argument("--dimB", type=int, required=True)
    p.add_argument("--real-embedding", action="store_true")
    p.add_argument("--cm-center", action="store_true")
    p.add_argument("--n-e", type=int, help="[E_beta : F] for dimension bookkeeping")
    p.set_defaults(func=_cmd_classify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, fmt = args.func(args)
        text = emit_report(data, fmt or "json")
    except BlockcalcError as exc:
        print(f"blockcalc: {exc}", file=sys.stderr)
        return exc.exit_code
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
