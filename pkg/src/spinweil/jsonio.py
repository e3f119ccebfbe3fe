"""JSON encoding of the scalar tower, vectors, matrices, exterior forms
and Clifford elements.

Wire formats:
  rational      "p/q" (or "p")
  quadratic     {"a": "p/q", "b": "p/q", "m": int}
  tower         {"c": ["p/q", "p/q", "p/q", "p/q"], "m": int}
  lattice       {"label": str, "gram": [[rational]]}
  vector        {"coords": [scalar]}
  multivector   [{"indices": [int, 1-based], "coeff": scalar}]
  clifford      [{"gens": [int, 1-based], "coeff": scalar}]
"""

from __future__ import annotations

from fractions import Fraction

from .lattices import BilinearLattice, LatticeVector
from .multivector import Multivector, indices_of, mask_of
from .scalars import QuadExt, TowerScalar, rat


def encode_scalar(x):
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else str(x)
    if isinstance(x, QuadExt):
        return {"a": encode_scalar(x.a), "b": encode_scalar(x.b), "m": x.m}
    if isinstance(x, TowerScalar):
        return {"c": [encode_scalar(c) for c in x.c], "m": x.m}
    raise TypeError(f"cannot encode scalar {x!r}")


def decode_scalar(obj):
    if isinstance(obj, (int, str)):
        return rat(obj if isinstance(obj, str) else int(obj))
    if isinstance(obj, dict) and "c" in obj:
        return TowerScalar(*(decode_scalar(c) for c in obj["c"]),
                           m=int(obj["m"]))
    if isinstance(obj, dict) and "a" in obj:
        return QuadExt(decode_scalar(obj["a"]), decode_scalar(obj["b"]),
                       int(obj["m"]))
    raise ValueError(f"cannot decode scalar from {obj!r}")


def encode_vector(coords):
    if isinstance(coords, LatticeVector):
        coords = coords.coords
    return {"coords": [encode_scalar(c) for c in coords]}


def decode_vector(obj):
    if isinstance(obj, list):
        return [decode_scalar(c) for c in obj]
    return [decode_scalar(c) for c in obj["coords"]]


def encode_matrix(m):
    return [[encode_scalar(x) for x in row] for row in m]


def decode_matrix(obj):
    return [[decode_scalar(x) for x in row] for row in obj]


def encode_lattice(lat: BilinearLattice):
    return {"label": lat.label, "gram": encode_matrix(lat.gram)}


def decode_lattice(obj):
    return BilinearLattice(decode_matrix(obj["gram"]),
                           label=obj.get("label", ""))


def encode_multivector(x: Multivector):
    out = []
    for mask in sorted(x.terms):
        out.append({"indices": [i + 1 for i in indices_of(mask)],
                    "coeff": encode_scalar(x.terms[mask])})
    return out


def decode_multivector(obj, n):
    terms = {}
    for item in obj:
        mask = mask_of(i - 1 for i in item["indices"])
        terms[mask] = decode_scalar(item["coeff"])
    return Multivector(n, terms)


def encode_clifford(x):
    out = []
    for mask in sorted(x.terms):
        out.append({"gens": [i + 1 for i in indices_of(mask)],
                    "coeff": encode_scalar(x.terms[mask])})
    return out


def decode_clifford(obj, algebra):
    terms = {}
    for item in obj:
        mask = mask_of(i - 1 for i in item["gens"])
        terms[mask] = decode_scalar(item["coeff"])
    return algebra.element(terms)
