"""Pure-Python reference kernels for the hot convolution loops.

Exponent vectors are plain int tuples; coefficients are any exact scalar
supporting ``+``, ``*`` and truthiness (Rat, and in a few call sites whole
coefficient objects).  The compiled twin in ``_speedups.pyx`` implements the
same four functions; ``sparseproj.kernels`` picks one at import time.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def poly_mul(a: dict, b: dict) -> dict:
    """Sparse product of two exponent-dict polynomials."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(sum, zip(ea, eb)))
            c = get(e)
            if c is None:
                out[e] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def poly_addmul(acc: dict, coeff, b: dict) -> None:
    """In-place ``acc += coeff * b``; removes cancelled terms."""
    if not coeff or not b:
        return
    get = acc.get
    for e, cb in b.items():
        c = get(e)
        if c is None:
            acc[e] = coeff * cb
        else:
            c = c + coeff * cb
            if c:
                acc[e] = c
            else:
                del acc[e]


def poly_mul_trunc(a: dict, b: dict, cap: int) -> dict:
    """Sparse product keeping only terms of total degree <= cap."""
    if not a or not b:
        return {}
    out: dict = {}
    get = out.get
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            if da + sum(eb) > cap:
                continue
            e = tuple(map(sum, zip(ea, eb)))
            c = get(e)
            if c is None:
                out[e] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[e] = c
                else:
                    del out[e]
    return out


def series_mul(ac: list, bc: list, kappa: int) -> list:
    """Convolution of homogeneous-component lists, truncated at degree kappa.

    ``ac``/``bc`` are lists of exponent dicts (index = homogeneous degree).
    Returns a list of kappa+1 dicts.
    """
    la, lb = len(ac), len(bc)
    out = [dict() for _ in range(kappa + 1)]
    for i in range(min(la, kappa + 1)):
        ai = ac[i]
        if not ai:
            continue
        jmax = min(lb - 1, kappa - i)
        for j in range(jmax + 1):
            bj = bc[j]
            if not bj:
                continue
            tgt = out[i + j]
            get = tgt.get
            for ea, ca in ai.items():
                for eb, cb in bj.items():
                    e = tuple(map(sum, zip(ea, eb)))
                    c = get(e)
                    if c is None:
                        tgt[e] = ca * cb
                    else:
                        c = c + ca * cb
                        if c:
                            tgt[e] = c
                        else:
                            del tgt[e]
    return out
