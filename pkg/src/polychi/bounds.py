"""Exact evaluation of the chromatic-number bound formulas.

All arithmetic is on Python ints. Nothing here touches floating point; the
values grow past anything a float could hold almost immediately.
"""

from __future__ import annotations

import warnings
from functools import lru_cache
from math import factorial
from typing import Callable

import gmpy2

from .graph import Graph

F0 = Callable[[int], int]


def identity(x: int) -> int:
    return x


def _geom(t: int, terms: int) -> int:
    """t^0 + t^1 + ... + t^(terms-1)."""
    return sum(t ** i for i in range(terms))


def _require(**kw):
    for name, value in kw.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


def lemma1_rhs(p: int, q: int, s: int, t: int) -> int:
    """(1 + t + ... + t^(p-1)) * (s + t(2t + 9)) + t^p * q."""
    _require(p=p, q=q, s=s, t=t)
    return _geom(t, p) * (s + t * (2 * t + 9)) + t ** p * q


def thm8_f(d: int, p: int, t: int) -> int:
    """Bound for paw-free, T1-free graphs with no K_d(t) subgraph."""
    _require(d=d, t=t)
    if p < 4:
        raise ValueError("T1 needs p >= 4")
    if d == 1:
        return t - 1
    g = thm8_f(d - 1, p, t)
    return _geom(t, p + 1) * (g + 1 + t * (2 * t + 9)) + t ** (p + 1) * (d * t + 2)


def thm10_f(d: int, p: int, t: int) -> int:
    """Bound for T-free graphs with neither K_d(t) nor K_t(t) as a subgraph."""
    _require(d=d, t=t)
    if p < 0:
        raise ValueError("p must be >= 0")
    if d > 1 and not 1 <= t <= d - 1:
        warnings.warn(f"thm10_f is only meaningful for 1 <= t <= d-1 (t={t}, d={d})", stacklevel=2)
    return _thm10(d, p, t)


def _thm10(d, p, t):
    if d == 1:
        return t - 1
    g = _thm10(d - 1, p, t)
    return _geom(t, p) * (g + 1 + t * (2 * t + 9)) + t ** p * (g + 1)


def cascade(s: int, d: int, t: int, f0: F0 = identity) -> dict[str, int]:
    """w and f_8 down to f_1, evaluated in dependency order."""
    _require(s=s, d=d, t=t)
    w = s ** 4 * t ** s + s
    f8 = 3 * s * d ** (3 * s + 2) * w ** (2 * s - 1) * t ** (3 * s) * (
        f0(t) + 2 * s ** (2 * d + 2) * t ** (d * s + s * s + s)
    )
    f5 = 120 * s * d ** (5 * s + 1) * w * t ** (5 * s) * f8
    f3 = 2 * d ** (s + 1) * w * t ** s * f5
    f2 = 2 * s * d * w * f3
    k = s * s + s + 1
    f1 = f0((s * k * t) ** (120 * k) * w) + 2 * t * f2
    return {"w": w, "f8": f8, "f7": f5, "f6": f5, "f5": f5, "f4": f3, "f3": f3, "f2": f2, "f1": f1}


def cascade_f1(s: int, d: int, t: int, f0: F0 = identity) -> int:
    return cascade(s, d, t, f0)["f1"]


def thm9_f(d: int, p: int, t: int, s: int = 3, f0: F0 = identity) -> int:
    """Bound for paw-free, sub-dart-free, T2-free graphs with no K_d(t) subgraph.

    Relative to the supplied ``f0``.
    """
    _require(d=d, t=t)
    if p < 4:
        raise ValueError("T2 needs p >= 4")
    if d == 1:
        return t - 1
    g = thm9_f(d - 1, p, t, s, f0)
    return _geom(t, p + 1) * (g + 1 + t * (2 * t + 9)) + t ** (p + 1) * (cascade_f1(s, d, t, f0) + 1)


def beta_H(s: int, p: int, t: int) -> int:
    """(|H| s t)^c + 1 with |H| = |H(s, p)| and c = (p + 3)! |H|."""
    _require(s=s, t=t)
    if p < 0:
        raise ValueError("p must be >= 0")
    size = _geom(s, p + 1)
    return (size * s * t) ** (factorial(p + 3) * size) + 1


def beta_T_params(s: int, p: int, t: int) -> int:
    """((s + s^2 + ... + s^(p+1)) t)^((p+3)! (1 + s + ... + s^p)) + 1."""
    _require(t=t)
    base = sum(s ** (i + 1) for i in range(p + 1))
    return (base * t) ** (factorial(p + 3) * _geom(s, p + 1)) + 1


def _tree_sp(tree) -> tuple[int, int]:
    if isinstance(tree, Graph):
        from .patterns import embed_params

        e = embed_params(tree)
        return e.spread, e.height
    s, p = tree
    return s, p


def beta_T(tree, t: int) -> int:
    """beta_T at the embedding parameters of ``tree`` (a Graph, or an (s, p) pair)."""
    s, p = _tree_sp(tree)
    return beta_T_params(s, p, t)


def thm11_f(d: int, tree, t: int) -> int:
    """Bound for graphs in F_T that are T-free with no K_d(t) subgraph.

    The balloon term evaluates the previous level at beta_T(t), so every level
    is a function of an arbitrary-size integer.
    """
    _require(d=d, t=t)
    s, p = _tree_sp(tree)
    return _thm11(d, s, p, t)


@lru_cache(maxsize=256)
def _thm11(d: int, s: int, p: int, t: int) -> int:
    if d == 1:
        return t - 1
    g_t = _thm11(d - 1, s, p, t)
    g_beta = _thm11(d - 1, s, p, beta_T_params(s, p, t))
    return _geom(t, p) * (g_t + 1 + t * (2 * t + 9)) + t ** p * (g_beta + 1)


def scott_degeneracy_bound(h_size: int, spread: int, height: int, t: int) -> int:
    """(|H| zeta t)^c with c = (eta + 3)! |H|; needs spread >= 2."""
    if spread < 2:
        raise ValueError("spread must be >= 2")
    _require(h_size=h_size, height=height, t=t)
    return (h_size * spread * t) ** (factorial(height + 3) * h_size)


def randerath_bound(omega: int) -> int:
    return omega + 1


# ---------------------------------------------------------------- rendering


def decimal(value: int) -> str:
    # gmpy2 converts huge ints to decimal far faster than int.__str__.
    return str(gmpy2.mpz(value))


def render(value: int, max_digits: int | None = None) -> str:
    text = decimal(value)
    if max_digits is None or len(text) <= max_digits:
        return text
    half = max(1, max_digits // 2)
    return f"{text[:half]}...{text[-half:]} ({len(text)} digits)"


def record(formula: str, params: dict, value: int, max_digits: int | None = None) -> dict:
    text = decimal(value)
    out = {"formula": formula, "params": params, "value_decimal": text, "digits": len(text)}
    if max_digits is not None and len(text) > max_digits:
        out["value_decimal"] = render(value, max_digits)
        out["truncated"] = True
    return out
