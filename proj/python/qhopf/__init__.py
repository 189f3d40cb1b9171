"""Exact verification of finite-dimensional quasi-Hopf algebras.

Coefficients are exchanged as strings ("1/2", or "p3" for residues mod p).
"""

import json
from fractions import Fraction

from ._core import (
    InputError,
    Presentation,
    commands,
    comodulus,
    dual_z2_twisted,
    frobenius_functional,
    gauge_twist,
    group_algebra_cyclic,
    group_algebra_symmetric,
    is_separable,
    is_unimodular,
    left_integral,
    load,
    modular_augmentation,
    multiply,
    nakayama,
    normalized_integral,
    parse,
    right_integral,
    standard_examples,
    sweedler,
    twisted_variants,
    verify,
)
from ._core import run as _run

__all__ = [
    "InputError",
    "Presentation",
    "Report",
    "commands",
    "comodulus",
    "dual_z2_twisted",
    "fractions",
    "frobenius_functional",
    "gauge_twist",
    "group_algebra_cyclic",
    "group_algebra_symmetric",
    "is_separable",
    "is_unimodular",
    "left_integral",
    "load",
    "modular_augmentation",
    "multiply",
    "nakayama",
    "normalized_integral",
    "parse",
    "right_integral",
    "run",
    "standard_examples",
    "sweedler",
    "twisted_variants",
    "verify",
]


class Report:
    def __init__(self, ok, doc, text):
        self.ok = ok
        self.doc = doc
        self.text = text

    def section(self, name):
        for s in self.doc["sections"]:
            if s["section"] == name:
                return s
        raise KeyError(name)

    def __repr__(self):
        return f"<Report {self.doc['command']} ok={self.ok}>"


def run(command, presentation, sub=None):
    """Run a CLI command in process. `sub` is the JSON text of a subalgebra file."""
    ok, doc, text = _run(command, presentation, sub)
    return Report(ok, json.loads(doc), text)


def fractions(coeffs):
    """Rational coefficient strings as Fractions."""
    return [Fraction(c) for c in coeffs]
