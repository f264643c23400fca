"""Exact polynomials in c and q, Laurent in s, with integer coefficients.

``LaurentPoly3`` is the carrier of the partition function Z_n(c, s, q).
Terms are stored sparsely as ``{(ec, es, eq): coeff}``; zero coefficients
are never stored.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

Exponents = Tuple[int, int, int]


class LaurentPoly3:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, int] | Iterable[Tuple[Exponents, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Exponents, int] = {}
        for key, coeff in items:
            ec, es, eq = (int(k) for k in key)
            if ec < 0 or eq < 0:
                raise ValueError(f"exponents of c and q must be non-negative, got {key}")
            acc[(ec, es, eq)] = acc.get((ec, es, eq), 0) + int(coeff)
        self._terms = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def one(cls) -> "LaurentPoly3":
        return cls({(0, 0, 0): 1})

    @classmethod
    def monomial(cls, ec: int, es: int, eq: int, coeff: int = 1) -> "LaurentPoly3":
        return cls({(ec, es, eq): coeff})

    @property
    def terms(self) -> Dict[Exponents, int]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __getitem__(self, key: Exponents) -> int:
        return self._terms.get(tuple(key), 0)

    def __contains__(self, key) -> bool:
        return tuple(key) in self._terms

    def __eq__(self, other):
        if isinstance(other, LaurentPoly3):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly3") -> "LaurentPoly3":
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly3(out)

    def __sub__(self, other: "LaurentPoly3") -> "LaurentPoly3":
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) - v
        return LaurentPoly3(out)

    def __mul__(self, other: "LaurentPoly3") -> "LaurentPoly3":
        out: Dict[Exponents, int] = {}
        for (a1, b1, c1), v1 in self._terms.items():
            for (a2, b2, c2), v2 in other._terms.items():
                k = (a1 + a2, b1 + b2, c1 + c2)
                out[k] = out.get(k, 0) + v1 * v2
        return LaurentPoly3(out)

    def __call__(self, c, s, q):
        """Evaluate at a point.

        Exact when the arguments are ``int``/``Fraction`` (negative s-powers
        become ``Fraction``); otherwise follows the arithmetic of the inputs.
        """
        total = 0
        for (ec, es, eq), coeff in self._terms.items():
            if es < 0 and isinstance(s, (int, Fraction)):
                sp = 1 / Fraction(s) ** (-es)
            else:
                sp = s ** es
            total += coeff * c ** ec * sp * q ** eq
        return total

    def mirror_s(self) -> "LaurentPoly3":
        """Substitute s -> 1/s."""
        return LaurentPoly3({(a, -b, c): v for (a, b, c), v in self._terms.items()})

    def count(self) -> int:
        """Sum of coefficients, i.e. the value at c = s = q = 1."""
        return sum(self._terms.values())

    def to_json_obj(self) -> list:
        return [
            {"c": ec, "s": es, "q": eq, "coeff": str(coeff)}
            for (ec, es, eq), coeff in sorted(self._terms.items())
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: list) -> "LaurentPoly3":
        return cls({(d["c"], d["s"], d["q"]): int(d["coeff"]) for d in obj})

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly3":
        return cls.from_json_obj(json.loads(text))

    def __repr__(self):
        if not self._terms:
            return "LaurentPoly3(0)"
        parts = []
        for (ec, es, eq), coeff in sorted(self._terms.items()):
            factors = [str(coeff)] if coeff != 1 or (ec, es, eq) == (0, 0, 0) else []
            for sym, e in (("c", ec), ("s", es), ("q", eq)):
                if e == 1:
                    factors.append(sym)
                elif e:
                    factors.append(f"{sym}^{e}")
            parts.append("*".join(factors))
        return "LaurentPoly3(" + " + ".join(parts) + ")"
