"""Command-line front end.

Reads a matrix from stdin or ``--file`` (JSON ``{"matrix": [[...]]}`` or a
plain whitespace grid, auto-detected), dispatches to the library, and prints
one JSON object with the stable keys ``input``, ``form``, ``result``,
``residuals`` and ``notes``.  Any library error produces the same shape with
the message under ``notes`` and a nonzero exit code.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import completion, forms, lorentz, oracle, polar, quat, reps, selftest
from .errors import FormPolarError, InputParseError, UnsupportedFormError
from .forms import Form
from .linalg import fro


def _parse_matrix(text: str) -> np.ndarray:
    text = text.strip()
    if not text:
        raise InputParseError("empty input")
    rows = None
    if text.startswith("{") or text.startswith("["):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputParseError(f"invalid JSON: {exc}") from exc
        rows = payload.get("matrix") if isinstance(payload, dict) else payload
    else:
        try:
            rows = [
                [float(tok) for tok in line.replace(",", " ").split()]
                for line in text.splitlines()
                if line.strip()
            ]
        except ValueError as exc:
            raise InputParseError(f"invalid number in grid input: {exc}") from exc
    try:
        M = np.array(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputParseError(f"not a numeric matrix: {exc}") from exc
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InputParseError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InputParseError("matrix has non-finite entries")
    return M


def _read_input(args) -> np.ndarray:
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return _parse_matrix(fh.read())
    return _parse_matrix(sys.stdin.read())


def _listify(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, dict):
        return {k: _listify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_listify(v) for v in value]
    return value


def _emit(payload: dict, code: int = 0) -> int:
    print(json.dumps(_listify(payload), indent=2))
    return code


def _report(matrix, form_name, result, residuals, notes) -> dict:
    return {
        "input": None if matrix is None else np.asarray(matrix).tolist(),
        "form": form_name,
        "result": result,
        "residuals": residuals,
        "notes": notes,
    }


def _cmd_identify(args) -> int:
    X = _read_input(args)
    result = {}
    for name, form in forms.IDENTIFY_FORMS.items():
        residual = forms.membership_residual(X, form)
        result[name] = {
            "member": bool(forms.is_in_group(X, form, args.tol)),
            "residual": residual,
        }
    members = sorted(k for k, v in result.items() if v["member"])
    return _emit(
        _report(X, None, result, {}, [f"member of {len(members)} forms"] + members)
    )


def _form_of(args) -> Form:
    if not args.form:
        raise UnsupportedFormError("this command needs --form")
    return forms.parse_form(args.form)


def _cmd_polar(args) -> int:
    X = _read_input(args)
    form = _form_of(args)
    fac = polar.polar_in_form(X, form, tol=args.tol)
    notes = []
    if form.kind in ("minkowski",) or (form.kind == "ipq" and form.params == (1, 3)):
        notes.append("positive definite factor is the boost")
        notes.append(
            "orthogonal factor is a spatial rotation, possibly with a "
            "sign or time-reflection prefix"
        )
    return _emit(
        _report(
            X,
            form.name,
            {"orthogonal": fac.orthogonal, "posdef": fac.posdef},
            {
                "reconstruction": fac.residual_reconstruction,
                "orthogonality": fac.residual_orthogonality,
                "membership_orthogonal": fac.residual_membership[0],
                "membership_posdef": fac.residual_membership[1],
            },
            notes,
        )
    )


def _rep_result_generic(X) -> tuple[dict, dict]:
    rep = quat.rep_of_matrix(X)
    recon = fro(rep.to_matrix() - X)
    result = {
        "c": rep.c,
        "p": rep.p,
        "q": rep.q,
        "r": rep.r,
        "s": rep.s,
        "t": rep.t,
    }
    return result, {"reconstruction": recon}


def _cmd_rep(args) -> int:
    X = _read_input(args)
    if not args.form:
        result, residuals = _rep_result_generic(X)
        return _emit(_report(X, None, result, residuals, ["basis coefficients"]))
    form = forms.parse_form(args.form)
    if form.kind == "ipq" and form.params == (2, 2) or (
        form.kind == "basis" and form.params == ("i", "i")
    ):
        orth, pos = reps.rep_g22(X, tol=args.tol)
        recon = fro(reps.reconstruct_g22(orth, pos) - X)
        result = {
            "orthogonal": {
                "case": orth.case,
                "u": orth.u,
                "v": orth.v,
                "reflector_prefix": orth.reflector,
            },
            "posdef": {"c": pos.c, "p": pos.p, "q": pos.q, "r": pos.r},
        }
        return _emit(_report(X, form.name, result, {"reconstruction": recon}, []))
    if form.kind == "minkowski" or (form.kind == "ipq" and form.params == (1, 3)):
        rep = lorentz.rep_lorentz(X, tol=args.tol)
        recon = fro(rep.to_matrix() - X)
        result = {
            "sign": rep.sign,
            "reflector_prefix": rep.reflector,
            "u": rep.u,
            "boost": {
                "c": rep.boost.c,
                "p": rep.boost.p,
                "q": rep.boost.q,
                "r": rep.boost.r,
            },
            "preimage": {
                "a": rep.preimage[0],
                "d": rep.preimage[1],
                "x": rep.preimage[2],
                "y": rep.preimage[3],
            },
        }
        return _emit(_report(X, form.name, result, {"reconstruction": recon}, []))
    raise UnsupportedFormError(
        f"structured representations cover the split and Minkowski "
        f"signatures; got {form.name!r} (omit --form for raw coefficients)"
    )


def _cmd_complete(args) -> int:
    block = _read_input(args)
    given = args.given.upper()
    if given == "A":
        X = completion.complete_given_A(block)
    elif given == "D":
        X = completion.complete_given_D(block)
    elif given == "B":
        X = completion.complete_given_B(block)
    else:
        raise InputParseError("--given must be A, D or B")
    n = block.shape[0]
    form = Form.ipq(n, n)
    return _emit(
        _report(
            block,
            form.name,
            {"completion": X},
            {
                "membership": forms.membership_residual(X, form),
                "intertwining": completion.intertwining_residual(X),
            },
            [f"given block {given}"],
        )
    )


def _cmd_log(args) -> int:
    X = _read_input(args)
    L = completion.log_posdef_gnn(X, tol=args.tol)
    return _emit(
        _report(
            X,
            Form.ipq(X.shape[0] // 2, X.shape[0] // 2).name,
            {"log": L},
            {"exp_reconstruction": fro(oracle.expm(L) - X)},
            ["zero diagonal blocks; off-diagonal from arcsinh of singular values"],
        )
    )


def _cmd_component(args) -> int:
    X = _read_input(args)
    form = _form_of(args)
    label = forms.component_of(X, form, tol=args.tol)
    result = {
        "component": label.name,
        "identity_component": label.is_identity,
        "det_sign": label.det_sign,
        "signs": list(label.signs),
    }
    return _emit(_report(X, form.name, result, {}, []))


def _cmd_selftest(args) -> int:
    outcome = selftest.run_selftest(seed=args.seed, count=args.count)
    code = 0 if outcome["passed"] else 1
    return _emit(_report(None, None, outcome, {}, []), code)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="formpolar",
        description=(
            "Polar decomposition, quaternion-pair representations, block "
            "completions and component classification for 4x4 matrix groups "
            "preserving a bilinear form."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, needs_form=False, needs_input=True):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--tol", type=float, default=1e-8, help="residual tolerance")
        if needs_input:
            p.add_argument("--file", help="read the matrix from a file, not stdin")
        if needs_form:
            p.add_argument(
                "--form",
                help="form name: a basis pair like ii/ij/1j, or minkowski, "
                "i22, i31, sp4, flip4, k4, o4",
            )
        return p

    add("identify", _cmd_identify, "report membership residuals for all 18 forms")
    add("polar", _cmd_polar, "orthogonal times positive definite factorization",
        needs_form=True)
    add("rep", _cmd_rep, "quaternion-pair representation", needs_form=True)
    comp = add("complete", _cmd_complete,
               "complete one block to a positive definite group element")
    comp.add_argument("--given", required=True, choices=list("ADBadb"),
                      help="which block the input is")
    add("log", _cmd_log, "logarithm of a positive definite group element")
    add("component", _cmd_component, "connected-component classification",
        needs_form=True)
    st = add("selftest", _cmd_selftest, "run the seeded property battery",
             needs_input=False)
    st.add_argument("--seed", type=int, default=2024)
    st.add_argument("--count", type=int, default=25)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormPolarError as exc:
        _emit(
            _report(None, getattr(args, "form", None), None, {},
                    [f"error: {type(exc).__name__}: {exc}"]),
            1,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
