"""Seeded property battery behind the ``selftest`` CLI command.

Each suite draws a deterministic corpus from the splitmix sampler, runs one
family of library calls against its independent check, and reports the worst
residual seen.  The battery is a quick smoke screen; the pytest suite holds
the full acceptance runs.
"""

from __future__ import annotations

import numpy as np

from . import completion, forms, lorentz, oracle, polar, quat, reps
from .forms import Form
from .linalg import fro, posdef_sqrt_2x2


def _suite(name, tol, pairs):
    """pairs: iterable of (residual, note); reduces to a summary dict."""
    worst = 0.0
    count = 0
    for residual in pairs:
        worst = max(worst, float(residual))
        count += 1
    return {
        "suite": name,
        "checks": count,
        "max_residual": worst,
        "tolerance": tol,
        "passed": worst <= tol,
    }


def _sqrt_suite(seed, count):
    def run():
        rng = oracle.SplitMix64(seed)
        for _ in range(count):
            B = rng.matrix(2, -3.0, 3.0)
            Y = np.eye(2) + B @ B.T
            R = posdef_sqrt_2x2(Y)
            yield fro(R @ R - Y)

    return _suite("posdef_sqrt_2x2", 1e-12, run())


def _completion_suite(seed, count):
    def run():
        rng = oracle.SplitMix64(seed)
        form = Form.ipq(2, 2)
        for _ in range(count):
            B = rng.matrix(2, -3.0, 3.0)
            X = completion.complete_given_B(B)
            yield forms.membership_residual(X, form)
            yield completion.intertwining_residual(X)
            L = completion.log_posdef_gnn(X)
            yield fro(oracle.expm(L) - X)

    return _suite("completion_and_log", 1e-9, run())


def _polar_g22_suite(seed, count):
    def run():
        form = Form.ipq(2, 2)
        for i in range(count):
            comp = forms.INN_COMPONENTS[i % 4]
            X = oracle.sample_component_element(form, comp, seed + i, scale=1.0)
            fac = polar.polar_in_g22(X)
            yield fac.max_residual
            nf = oracle.newton_polar(X)
            yield fro(fac.posdef - nf.posdef)

    return _suite("polar_split_signature", 1e-8, run())


def _basis_forms_suite(seed, count):
    def run():
        for li, left in enumerate(quat.BASIS_UNITS):
            for ri, right in enumerate(quat.BASIS_UNITS):
                form = Form.basis(left, right)
                for i in range(count):
                    X = oracle.sample_group_element(
                        form, seed + 97 * (4 * li + ri) + i, scale=1.0
                    )
                    fac = polar.polar_in_basis_form(X, left, right)
                    yield fac.max_residual

    return _suite("polar_all_basis_forms", 1e-8, run())


def _lorentz_suite(seed, count):
    def run():
        form = Form.minkowski()
        for i in range(count):
            comp = forms.MINKOWSKI_COMPONENTS[i % 4]
            X = oracle.sample_component_element(form, comp, seed + i, scale=1.0)
            fac = lorentz.polar_in_lorentz(X)
            yield fac.max_residual
            rep = lorentz.rep_lorentz(X)
            yield fro(rep.to_matrix() - X)

    return _suite("lorentz_polar_and_rep", 1e-8, run())


def _rep_g22_suite(seed, count):
    def run():
        form = Form.ipq(2, 2)
        for i in range(count):
            comp = forms.INN_COMPONENTS[i % 4]
            X = oracle.sample_component_element(form, comp, seed + i, scale=1.0)
            orth, pos = reps.rep_g22(X)
            yield fro(reps.reconstruct_g22(orth, pos) - X)
            fac = polar.polar_in_g22(X)
            yield reps.check_fpi_equations(quat.rep_of_matrix(fac.posdef)).max()

    return _suite("rep_split_signature", 1e-8, run())


def _component_suite(seed, count):
    def run():
        for i in range(count):
            for form, comps in (
                (Form.ipq(2, 2), forms.INN_COMPONENTS),
                (Form.minkowski(), forms.MINKOWSKI_COMPONENTS),
            ):
                comp = comps[i % 4]
                X = oracle.sample_component_element(form, comp, seed + i, scale=1.0)
                yield 0.0 if forms.component_of(X, form).name == comp else 1.0

    return _suite("component_classification", 0.0, run())


def _so22_cover_suite(seed, count):
    def run():
        rng = oracle.SplitMix64(seed)
        form = Form.ipq(2, 2)
        for _ in range(count):
            A = _random_spd_sl2(rng)
            B = _random_spd_sl2(rng)
            Phi = lorentz.so22_cover_phi(A, B)
            yield forms.membership_residual(Phi, form)
            yield 0.0 if forms.is_posdef_in_group(Phi, form) else 1.0

    return _suite("so22_cover", 1e-9, run())


def _random_spd_sl2(rng: oracle.SplitMix64) -> np.ndarray:
    M = rng.matrix(2, -1.5, 1.5)
    S = M @ M.T + 0.25 * np.eye(2)
    return S / np.sqrt(np.linalg.det(S))


def run_selftest(seed: int = 20_24, count: int = 25) -> dict:
    """Run every suite; ``count`` scales the number of samples per suite."""
    suites = [
        _sqrt_suite(seed, count * 4),
        _completion_suite(seed + 1, count),
        _polar_g22_suite(seed + 2, count),
        _basis_forms_suite(seed + 3, max(1, count // 8)),
        _lorentz_suite(seed + 4, count),
        _rep_g22_suite(seed + 5, count),
        _component_suite(seed + 6, count),
        _so22_cover_suite(seed + 7, count),
    ]
    return {
        "seed": seed,
        "count": count,
        "suites": suites,
        "passed": all(s["passed"] for s in suites),
    }
