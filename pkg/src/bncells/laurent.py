"""Sparse exact Laurent polynomials in one variable ``v`` over the integers.

The representation is a map ``exponent -> coefficient`` with no stored zero
coefficients.  The ring involution ``bar`` sends ``v^k`` to ``v^{-k}``.

Text format (round-trip parseable): terms in decreasing exponent order,
joined by `` + `` / `` - ``; each term is ``c*v^k`` with the cosmetic
simplifications ``v^0`` omitted, ``v^1`` printed ``v``, and a unit
coefficient dropped before a power of ``v``.  The zero polynomial prints as
``"0"``.

>>> p = LaurentPoly({2: 1, 0: -3, -1: 2})
>>> str(p)
'v^2 - 3 + 2*v^-1'
>>> LaurentPoly.from_text('v^2 - 3 + 2*v^-1') == p
True
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import InvalidInputError

# Raw-dict helpers.  Hot loops in the Hecke recursion work on plain dicts
# {exponent: coefficient}; LaurentPoly wraps the same dicts at the API
# boundary.


def dict_add_scaled(
    target: dict[int, int], source: Mapping[int, int], factor: int = 1
) -> None:
    """In-place ``target += factor * source`` with zero stripping."""
    for k, c in source.items():
        new = target.get(k, 0) + factor * c
        if new:
            target[k] = new
        else:
            target.pop(k, None)


def dict_mul(p: Mapping[int, int], q: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            k = k1 + k2
            new = out.get(k, 0) + c1 * c2
            if new:
                out[k] = new
            else:
                del out[k]
    return out


def dict_bar(p: Mapping[int, int]) -> dict[int, int]:
    return {-k: c for k, c in p.items()}


def dict_symmetrized_nonneg(p: Mapping[int, int]) -> dict[int, int]:
    """The unique bar-invariant polynomial matching ``p`` in degrees >= 0.

    Used to peel bar-invariant correction terms: take the coefficients of
    ``p`` in non-negative degrees and mirror the strictly positive ones.
    """
    out: dict[int, int] = {}
    for k, c in p.items():
        if k == 0:
            out[0] = c
        elif k > 0:
            out[k] = c
            out[-k] = c
    return out


class LaurentPoly:
    """Immutable sparse integer Laurent polynomial.

    >>> v = LaurentPoly.monomial(1)
    >>> (v + v.bar()) * (v - v.bar()) == LaurentPoly.monomial(2) - LaurentPoly.monomial(-2)
    True
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for k, coeff in items:
            if not (isinstance(k, int) and isinstance(coeff, int)):
                raise InvalidInputError("exponents and coefficients must be integers")
            if coeff:
                c[k] = c.get(k, 0) + coeff
                if not c[k]:
                    del c[k]
        self._c = c

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "LaurentPoly":
        return cls({k: coeff})

    @classmethod
    def _wrap(cls, c: dict[int, int]) -> "LaurentPoly":
        out = object.__new__(cls)
        out._c = c
        return out

    # -- inspection ------------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def coefficient(self, k: int) -> int:
        return self._c.get(k, 0)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        """Largest exponent; raises on the zero polynomial."""
        if not self._c:
            raise InvalidInputError("zero polynomial has no degree")
        return max(self._c)

    def min_degree(self) -> int:
        if not self._c:
            raise InvalidInputError("zero polynomial has no degree")
        return min(self._c)

    def is_bar_invariant(self) -> bool:
        return all(self._c.get(-k, 0) == c for k, c in self._c.items())

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        dict_add_scaled(c, other._c)
        return LaurentPoly._wrap(c)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        dict_add_scaled(c, other._c, -1)
        return LaurentPoly._wrap(c)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({k: -c for k, c in self._c.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly._wrap(dict_mul(self._c, other._c))

    def scale(self, factor: int) -> "LaurentPoly":
        if not factor:
            return LaurentPoly.zero()
        return LaurentPoly._wrap({k: factor * c for k, c in self._c.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v^k``."""
        return LaurentPoly._wrap({e + k: c for e, c in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution ``v -> v^{-1}``."""
        return LaurentPoly._wrap(dict_bar(self._c))

    # -- equality ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    # -- text ---------------------------------------------------------------------

    def to_text(self) -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for k in sorted(self._c, reverse=True):
            c = self._c[k]
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "v" if k == 1 else f"v^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    _SCAN_RE = re.compile(
        r"\s*(?P<sign>[+-])?\s*(?P<body>(?:\d+\s*\*?\s*)?v(?:\^-?\d+)?|\d+)"
    )
    _TERM_RE = re.compile(r"^(?:(?P<coeff>\d+)\*?)?(?P<var>v)?(?:\^(?P<exp>-?\d+))?$")

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly":
        """Parse the :meth:`to_text` format (whitespace tolerant).

        >>> LaurentPoly.from_text("2*v^3 - v^-1 + 4").to_text()
        '2*v^3 + 4 - v^-1'
        """
        s = text.strip()
        if s == "0":
            return cls.zero()
        coeffs: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = cls._SCAN_RE.match(s, pos)
            if not m:
                raise InvalidInputError(f"cannot parse polynomial text {text!r}")
            if m.group("sign") is None and not first:
                raise InvalidInputError(f"missing +/- separator in {text!r}")
            sign = -1 if m.group("sign") == "-" else 1
            body = m.group("body").replace(" ", "")
            t = cls._TERM_RE.match(body)
            if not t or (t.group("coeff") is None and t.group("var") is None):
                raise InvalidInputError(f"cannot parse polynomial term {body!r}")
            coeff = int(t.group("coeff")) if t.group("coeff") else 1
            if t.group("var"):
                exp = int(t.group("exp")) if t.group("exp") is not None else 1
            else:
                exp = 0
            coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
            pos = m.end()
            first = False
        return cls(coeffs)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"LaurentPoly.from_text({self.to_text()!r})"


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
