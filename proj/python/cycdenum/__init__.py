"""Sylvester denumerants d(t; a) and their waves.

Exact results come back as ``int`` and ``fractions.Fraction``. Invalid
sequences (empty, nonpositive, repeated entries, gcd != 1) raise ValueError.
"""

from fractions import Fraction
import json

from . import _core

__all__ = [
    "waves",
    "denumerant",
    "float_waves",
    "float_denumerant",
    "dp_count",
    "cyclotomic_poly",
    "waves_json",
    "selftest",
]


def _seq(a):
    return [int(x) for x in a]


def waves(a, threads=0):
    """{f: [P_1, ..., P_f]}, each P_i a list of Fractions ascending in t."""
    raw = _core.waves(_seq(a), threads)
    return {f: [[Fraction(c) for c in comp] for comp in comps] for f, comps in raw.items()}


def denumerant(a, t, threads=0):
    """Exact d(t; a)."""
    if int(t) < 0:
        raise ValueError("t must be nonnegative")
    return int(_core.evaluate(_seq(a), str(int(t)), threads))


def float_waves(a, extended=False, threads=0):
    """{f: (components, max_imag)} with real float coefficients."""
    return _core.float_waves(_seq(a), extended, threads)


def float_denumerant(a, t, extended=False, threads=0):
    return _core.float_evaluate(_seq(a), int(t), extended, threads)


def dp_count(a, t_max):
    """[d(0; a), ..., d(t_max; a)] by direct counting."""
    return [int(c) for c in _core.dp_count(_seq(a), int(t_max))]


def cyclotomic_poly(f):
    """Coefficients of Phi_f, ascending."""
    return [int(c) for c in _core.cyclotomic_poly(int(f))]


def waves_json(a, threads=0):
    return json.loads(_core.waves_json(_seq(a), threads))


def selftest(random_sequences=25, seed=20240601):
    """(passed, checks, report text)."""
    return _core.selftest(random_sequences, seed)
