"""Command-line interface: ``unitalg <group> <command> INPUT [options]``.

INPUT is a JSON document given as a file path, ``-`` for stdin, or inline
text starting with ``{``.  Exit codes: 0 computed / true, 1 a legitimate
negative verdict, 2 invalid input or failed precondition, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra as alg
from . import identities, modules, multipoly, normalbasis, unitsearch
from .errors import DEFAULT_CAP, CapExceededError, InvalidInputError
from .field import make_field

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3


class Negative(Exception):
    """Carries a report for a valid "none" / "false" verdict."""

    def __init__(self, report):
        self.report = report


def read_doc(arg):
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith(("{", "[")):
        text = arg
    else:
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidInputError(f"cannot read {arg}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"invalid JSON in {arg}: {exc}") from None


def _need(doc, *keys):
    if not isinstance(doc, dict):
        raise InvalidInputError("input document must be a JSON object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise InvalidInputError(f"input document is missing {', '.join(missing)}")
    return [doc[k] for k in keys]


def _enc_vec(F, v):
    return [F.encode(F.convert(x)) for x in v]


def _enc_mat(F, m):
    return [_enc_vec(F, r) for r in m]


def _alg_elem(A, x):
    return [A.field.encode(c) for c in x.coords]


def _field_of(doc):
    (f,) = _need(doc, "field")
    return make_field(f)


# -- field ---------------------------------------------------------------------


def cmd_field_make(doc, args):
    F = make_field(doc.get("field", doc) if isinstance(doc, dict) else doc)
    out = {
        "field": F.descriptor(),
        "characteristic": F.characteristic,
        "cardinality": F.cardinality if F.is_finite else "infinite",
    }
    if F.is_finite and F.cardinality <= 256:
        out["elements"] = [F.encode(a) for a in F.elements()]
    return out


# -- poly ----------------------------------------------------------------------


def _poly_and_grid(doc, need_grid=True):
    F = _field_of(doc)
    (p,) = _need(doc, "poly")
    g = multipoly.poly_from_json(F, p)
    S = None
    if need_grid:
        (grid,) = _need(doc, "grid")
        S = multipoly.GridSpec(F, [[F.elem(F.decode(x)) for x in s] for s in grid])
    return F, g, S


def cmd_poly_reduce(doc, args):
    F, g, S = _poly_and_grid(doc)
    r = multipoly.reduce_mod_grid(g, S)
    out = {"field": F.descriptor(), "poly": multipoly.poly_to_json(r)}
    if args.verify:
        ok = all(g.evaluate_raw(x) == r.evaluate_raw(x) for x in S.points())
        out["verified"] = ok
    return out


def cmd_poly_certify(doc, args):
    F, g, S = _poly_and_grid(doc)
    (d,) = _need(doc, "exp")
    cert = multipoly.cn_certify(g, d, S)
    out = {"holds": cert.holds, "reasons": cert.reasons}
    if args.verify and cert.holds:
        out["witness"] = _enc_vec(F, multipoly.cn_witness(g, S, args.cap))
    if not cert.holds:
        raise Negative(out)
    return out


def cmd_poly_witness(doc, args):
    F, g, S = _poly_and_grid(doc)
    pt = multipoly.cn_witness(g, S, args.cap)
    if pt is None:
        raise Negative({"point": None})
    out = {"point": _enc_vec(F, pt)}
    if args.verify:
        out["value"] = F.encode(g.evaluate(pt).raw)
    return out


def cmd_poly_subst(doc, args):
    F, g, _ = _poly_and_grid(doc, need_grid=False)
    (B,) = _need(doc, "matrix")
    B = [[F.elem(F.decode(x)) for x in r] for r in B]
    return {"field": F.descriptor(), "poly": multipoly.poly_to_json(multipoly.linear_substitute(g, B))}


# -- algebra -------------------------------------------------------------------


def _algebra(doc, key="algebra"):
    if isinstance(doc, dict) and key in doc:
        return alg.algebra_from_json(doc[key])
    return alg.algebra_from_json(doc)


def _alg_report(A):
    return {"algebra": alg.algebra_to_json(A), "commutative": A.is_commutative()}


def cmd_algebra_build(doc, args):
    return _alg_report(_algebra(doc))


def cmd_algebra_matrix(doc, args):
    F = _field_of(doc)
    (m,) = _need(doc, "m")
    return _alg_report(alg.algebra_from_json({"field": F.descriptor(), "matrix": {"m": m}}))


def cmd_algebra_group(doc, args):
    F = _field_of(doc)
    (table,) = _need(doc, "table")
    return _alg_report(alg.group_ring(F, table))


def cmd_algebra_split(doc, args):
    F = _field_of(doc)
    (n,) = _need(doc, "n")
    return _alg_report(alg.algebra_from_json({"field": F.descriptor(), "split": {"n": n}}))


def _element(A, doc, key="element"):
    (x,) = _need(doc, key)
    if not isinstance(x, list) or len(x) != A.dim:
        raise InvalidInputError(f"{key} must be a coordinate vector of length {A.dim}")
    return alg.AlgElem(A, [A.field.decode(c) for c in x])


def cmd_algebra_regrep(doc, args):
    A = _algebra(doc)
    x = _element(A, doc)
    return {"matrix": _enc_mat(A.field, alg.regular_representation(x)), "unit": alg.is_unit(x)}


def cmd_algebra_unitpoly(doc, args):
    A = _algebra(doc)
    P = alg.unit_polynomial(A)
    return {"field": A.field.descriptor(), "poly": multipoly.poly_to_json(P)}


def cmd_algebra_radical(doc, args):
    A = _algebra(doc)
    J = alg.jacobson_radical(A, args.cap)
    return {"dim": J.dim, "basis": [[A.field.encode(c) for c in v] for v in J.vectors]}


def cmd_algebra_quotient(doc, args):
    A = _algebra(doc)
    ideal = doc.get("ideal", "radical")
    if ideal == "radical":
        I = alg.jacobson_radical(A, args.cap)
    else:
        I = alg.IdealBasis(A, [[A.field.decode(c) for c in v] for v in ideal], raw=True)
    Q, proj = alg.quotient_by_ideal(A, I)
    return {
        "algebra": alg.algebra_to_json(Q),
        "complement": proj.complement,
        "ideal": [[A.field.encode(c) for c in v] for v in I.vectors],
    }


# -- unit ----------------------------------------------------------------------


def _alg_and_subgroup(doc):
    A = _algebra(doc)
    (H,) = _need(doc, "subgroup")
    return A, unitsearch.subgroup_from_json(A.field, H)


def _hit_report(A, hit, args):
    F = A.field
    coeffs = list(hit.coefficients) if F.characteristic == 0 else [F.encode(c) for c in hit.coefficients]
    out = {"coefficients": coeffs, "element": _alg_elem(A, hit.element)}
    if args.verify:
        inv = alg.inverse(hit.element)
        out["inverse"] = _alg_elem(A, inv)
        out["verified"] = (inv * hit.element).coords == A.one == (hit.element * inv).coords
    return out


def cmd_unit_find(doc, args):
    A, H = _alg_and_subgroup(doc)
    return _hit_report(A, unitsearch.find_unit_in_span(A, H, args.cap), args)


def cmd_unit_count(doc, args):
    A, H = _alg_and_subgroup(doc)
    n = unitsearch.count_units_in_span(A, H, args.cap)
    out = {"count": n, "commutative": A.is_commutative(), "lower_bound": unitsearch.unit_lower_bound(A)}
    out["bound_holds"] = n >= out["lower_bound"] if A.is_commutative() else None
    return out


def cmd_unit_coset(doc, args):
    A, H = _alg_and_subgroup(doc)
    a = _element(A, doc, "offset")
    return _hit_report(A, unitsearch.find_unit_in_coset(A, H, a, args.cap), args)


def cmd_unit_charzero(doc, args):
    A, H = _alg_and_subgroup(doc)
    return _hit_report(A, unitsearch.find_unit_char_zero(A, H, args.cap), args)


def _split_fields(doc):
    E, F, n = _need(doc, "E", "F", "n")
    return make_field(E), make_field(F), n


def cmd_unit_splitbasis(doc, args):
    E, F, n = _split_fields(doc)
    (C,) = _need(doc, "C")
    C = [[F.elem(F.decode(x)) for x in c] for c in C]
    B, rhos = unitsearch.split_unit_basis(E, F, n, C)
    out = {"basis": _enc_mat(F, B), "functionals": _enc_mat(E, rhos)}
    if args.verify:
        out["verified"] = unitsearch.verify_unit_basis(E, F, n, B, args.cap)
    return out


def cmd_unit_verifybasis(doc, args):
    E, F, n = _split_fields(doc)
    (B,) = _need(doc, "B")
    B = [[F.elem(F.decode(x)) for x in b] for b in B]
    ok = unitsearch.verify_unit_basis(E, F, n, B, args.cap)
    if not ok:
        raise Negative({"valid": False})
    return {"valid": True}


# -- module --------------------------------------------------------------------


def _module_pair(doc):
    M, N = _need(doc, "M", "N")
    return modules.module_from_json(M), modules.module_from_json(N)


def cmd_module_hom(doc, args):
    M, N = _module_pair(doc)
    basis = modules.hom_space(M, N)
    return {"dim": len(basis), "basis": [_enc_mat(M.field, h) for h in basis]}


def cmd_module_generator(doc, args):
    (Mdoc, H) = _need(doc, "module", "subgroup")
    M = modules.module_from_json(Mdoc)
    hit = modules.find_generator(M, unitsearch.subgroup_from_json(M.field, H), args.cap)
    if hit is None:
        raise Negative({"generator": None})
    return {"coefficients": [M.field.encode(c) for c in hit.coefficients], "generator": _enc_vec(M.field, hit.element)}


def cmd_module_iso(doc, args):
    M, N = _module_pair(doc)
    h = modules.find_isomorphism(M, N, args.cap)
    if h is None:
        raise Negative({"isomorphism": None, "verdict": "none"})
    out = {"isomorphism": _enc_mat(M.field, h), "verdict": "isomorphic"}
    if args.verify:
        F = M.field
        hr = [[F.convert(x) for x in r] for r in h]
        from . import linalg

        out["verified"] = all(
            linalg.matmul(F, hr, a) == linalg.matmul(F, b, hr) for a, b in zip(M.action, N.action)
        ) and linalg.det(F, hr) != F.zero
    return out


def cmd_module_summand(doc, args):
    M, N = _module_pair(doc)
    pair = modules.summand_test(M, N, args.cap)
    if pair is None:
        raise Negative({"pair": None, "verdict": "none"})
    f, g = pair
    return {"f": _enc_mat(M.field, f), "g": _enc_mat(M.field, g), "verdict": "summand"}


# -- identity ------------------------------------------------------------------


def _identity_report(F, rep):
    out = {"lhs": F.encode(rep.lhs.raw), "rhs": F.encode(rep.rhs.raw), "equal": rep.equal}
    if not rep.equal:
        raise Negative(out)
    return out


def cmd_identity_cd(doc, args):
    p, A, B = _need(doc, "p", "A", "B")
    rep = identities.cauchy_davenport_check(p, A, B)
    out = {"sumset": list(rep.sumset), "size": rep.size, "bound": rep.bound, "holds": rep.holds}
    if not rep.holds:
        raise Negative(out)
    return out


def cmd_identity_glynn(doc, args):
    F = _field_of(doc)
    (A,) = _need(doc, "matrix")
    A = [[F.elem(F.decode(x)) for x in r] for r in A]
    return _identity_report(F, identities.glynn_coefficient(F, A, doc.get("e"), args.cap))


def cmd_identity_charsum(doc, args):
    F = _field_of(doc)
    (d,) = _need(doc, "d")
    val = identities.monomial_character_sum(F, d)
    out = {"value": F.encode(val.raw)}
    if args.verify:
        out["closed_form"] = F.encode(identities.monomial_character_sum_closed_form(F, d).raw)
    return out


def cmd_identity_powersum(doc, args):
    F = _field_of(doc)
    (B,) = _need(doc, "B")
    B = [[F.elem(F.decode(x)) for x in r] for r in B]
    return _identity_report(F, identities.power_sum_subgroup(F, B, doc.get("coeffs", "prime"), args.cap))


# -- normal --------------------------------------------------------------------


def _galois(args):
    top = None
    if args.modulus is not None:
        top = make_field({"kind": "ext", "p": args.p, "modulus": json.loads(args.modulus)})
    return normalbasis.GaloisCtx(args.p, args.e, args.m, top)


def cmd_normal_find(doc, args):
    ctx = _galois(args)
    F = ctx.field
    gens = doc.get("generators") if isinstance(doc, dict) else None
    if gens is None:
        raise InvalidInputError("subgroup document needs 'generators'")
    hit = normalbasis.find_normal_generator(ctx, [F.elem(F.decode(g)) for g in gens], args.cap)
    out = {"field": F.descriptor(), "coefficients": list(hit.coefficients), "alpha": F.encode(hit.element.raw)}
    if args.verify:
        out["verified"] = normalbasis.is_normal_by_rank(ctx, hit.element)
    return out


def cmd_normal_check(doc, args):
    ctx = _galois(args)
    F = ctx.field
    alpha = F.elem(F.decode(json.loads(args.alpha)))
    verdict = normalbasis.is_normal_generator(ctx, alpha)
    out = {"field": F.descriptor(), "alpha": F.encode(alpha.raw), "normal": verdict}
    if args.verify:
        out["rank_criterion"] = normalbasis.is_normal_by_rank(ctx, alpha)
    if not verdict:
        raise Negative(out)
    return out


COMMANDS = {
    "field": {"make": cmd_field_make},
    "poly": {
        "reduce": cmd_poly_reduce,
        "certify": cmd_poly_certify,
        "witness": cmd_poly_witness,
        "subst": cmd_poly_subst,
    },
    "algebra": {
        "build": cmd_algebra_build,
        "matrix": cmd_algebra_matrix,
        "group": cmd_algebra_group,
        "split": cmd_algebra_split,
        "regrep": cmd_algebra_regrep,
        "unitpoly": cmd_algebra_unitpoly,
        "radical": cmd_algebra_radical,
        "quotient": cmd_algebra_quotient,
    },
    "unit": {
        "find": cmd_unit_find,
        "count": cmd_unit_count,
        "coset": cmd_unit_coset,
        "charzero": cmd_unit_charzero,
        "splitbasis": cmd_unit_splitbasis,
        "verifybasis": cmd_unit_verifybasis,
    },
    "module": {
        "hom": cmd_module_hom,
        "generator": cmd_module_generator,
        "iso": cmd_module_iso,
        "summand": cmd_module_summand,
    },
    "identity": {
        "cd": cmd_identity_cd,
        "glynn": cmd_identity_glynn,
        "charsum": cmd_identity_charsum,
        "powersum": cmd_identity_powersum,
    },
    "normal": {"find": cmd_normal_find, "check": cmd_normal_check},
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (default 10^7)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--verify", action="store_true", help="run post-hoc checks on the result")

    parser = argparse.ArgumentParser(prog="unitalg", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)
    for gname, cmds in COMMANDS.items():
        gp = groups.add_parser(gname)
        sub = gp.add_subparsers(dest="command", required=True)
        for cname in cmds:
            cp = sub.add_parser(cname, parents=[common])
            if gname == "normal":
                cp.add_argument("--p", type=int, required=True)
                cp.add_argument("--e", type=int, default=1)
                cp.add_argument("--m", type=int, required=True)
                cp.add_argument("--modulus", help="JSON coefficient array of the top-field modulus")
                if cname == "find":
                    cp.add_argument("--subgroup", required=True, help="subgroup JSON (path, '-' or inline)")
                else:
                    cp.add_argument("--alpha", required=True, help="element as a JSON coefficient array")
            else:
                cp.add_argument("input", help="JSON document: path, '-' for stdin, or inline")
    return parser


def render(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    lines = []
    for key in sorted(report):
        lines.append(f"{key}: {json.dumps(report[key], sort_keys=True)}")
    return "\n".join(lines)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    fn = COMMANDS[args.group][args.command]
    try:
        if args.group == "normal":
            doc = read_doc(args.subgroup) if args.command == "find" else None
        else:
            doc = read_doc(args.input)
        report, code = fn(doc, args), EXIT_OK
    except Negative as neg:
        report, code = neg.report, EXIT_NEGATIVE
    except CapExceededError as exc:
        report, code = {"error": "cap_exceeded", "message": str(exc)}, EXIT_CAP
    except (InvalidInputError, ZeroDivisionError, KeyError, TypeError, ValueError) as exc:
        report, code = {"error": "invalid_input", "message": str(exc)}, EXIT_INVALID
    print(render(report, args.format), file=stdout)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
