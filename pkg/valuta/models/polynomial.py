"""
Sparse exact-integer bivariate polynomials in x and y
"""

from math import comb
from typing import Dict, Iterable, List, Sequence, Tuple, Union

Monomial = Tuple[int, int]


def graded_lex_key(monomial: Monomial) -> Tuple[int, int]:
    """Sort key for graded-lex descending order on (i + j, i)"""
    i, j = monomial
    return (-(i + j), -i)


def monomial_order(polys: Iterable["BivarPoly"]) -> List[Monomial]:
    """Union of the supports of polys, graded-lex descending"""
    support = set()
    for p in polys:
        support.update(p.terms)
    return sorted(support, key=graded_lex_key)


class BivarPoly:
    """Polynomial with integer coefficients, stored as {(i, j): c} with c != 0"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Monomial, int] = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative degree in monomial ({i}, {j})")
            if c:
                clean[(i, j)] = int(c)
        self._terms = clean

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BivarPoly":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "BivarPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivarPoly":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> List[Tuple[int, int, int]]:
        return [(i, j, self._terms[(i, j)]) for i, j in sorted(self._terms, key=graded_lex_key)]

    # Arithmetic

    def __add__(self, other: Union["BivarPoly", int]) -> "BivarPoly":
        other = _coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union["BivarPoly", int]) -> "BivarPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["BivarPoly", int]) -> "BivarPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["BivarPoly", int]) -> "BivarPoly":
        if isinstance(other, int):
            return self.scale(other)
        out: Dict[Monomial, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    def __rmul__(self, other: int) -> "BivarPoly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "BivarPoly":
        out = BivarPoly.constant(1)
        for _ in range(exponent):
            out = out * self
        return out

    def scale(self, factor: int) -> "BivarPoly":
        return BivarPoly({m: c * factor for m, c in self._terms.items()})

    def evaluate(self, x0: int, y0: int) -> int:
        return sum(c * x0 ** i * y0 ** j for (i, j), c in self._terms.items())

    def shift(self, a: int, b: int) -> "BivarPoly":
        """Substitute x -> x + a and y -> y + b"""
        out: Dict[Monomial, int] = {}
        for (i, j), c in self._terms.items():
            for p in range(i + 1):
                cx = comb(i, p) * a ** (i - p)
                if not cx:
                    continue
                for q in range(j + 1):
                    cy = comb(j, q) * b ** (j - q)
                    if cy:
                        out[(p, q)] = out.get((p, q), 0) + c * cx * cy
        return BivarPoly(out)

    def swap(self) -> "BivarPoly":
        """Exchange the roles of x and y"""
        return BivarPoly({(j, i): c for (i, j), c in self._terms.items()})

    # Comparison

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # Vectorisation and text forms

    def to_vector(self, monomials: Sequence[Monomial]) -> List[int]:
        return [self._terms.get(m, 0) for m in monomials]

    def to_json(self) -> List[List[int]]:
        return [[i, j, c] for i, j, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, triples: Iterable[Sequence[int]]) -> "BivarPoly":
        out: Dict[Monomial, int] = {}
        for i, j, c in triples:
            out[(i, j)] = out.get((i, j), 0) + c
        return cls(out)

    def __str__(self):
        if self.is_zero():
            return "0"
        pieces = []
        for index, (i, j, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            body = _format_term(i, j, abs(c))
            if index == 0:
                pieces.append(f"-{body}" if sign == "-" else body)
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"BivarPoly({str(self)!r})"


def _format_term(i: int, j: int, c: int) -> str:
    factors = []
    if i:
        factors.append("x" if i == 1 else f"x^{i}")
    if j:
        factors.append("y" if j == 1 else f"y^{j}")
    if not factors:
        return str(c)
    if c != 1:
        factors.insert(0, str(c))
    return "*".join(factors)


def _coerce(value: Union[BivarPoly, int]) -> BivarPoly:
    if isinstance(value, BivarPoly):
        return value
    if isinstance(value, int):
        return BivarPoly.constant(value)
    raise TypeError(f"cannot combine BivarPoly with {type(value).__name__}")


def parse_poly(text: str) -> BivarPoly:
    """Read the pretty-printed form back, e.g. `x^2*y - 3*x + 1`"""
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise ValueError("empty polynomial")
    if cleaned[0] not in "+-":
        cleaned = "+" + cleaned
    terms: Dict[Monomial, int] = {}
    chunk = ""
    chunks = []
    for ch in cleaned:
        if ch in "+-" and chunk:
            chunks.append(chunk)
            chunk = ""
        chunk += ch
    chunks.append(chunk)
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        coeff, i, j = 1, 0, 0
        for factor in chunk[1:].split("*"):
            if factor.startswith("x"):
                i += int(factor[2:]) if factor.startswith("x^") else 1
            elif factor.startswith("y"):
                j += int(factor[2:]) if factor.startswith("y^") else 1
            else:
                coeff *= int(factor)
        terms[(i, j)] = terms.get((i, j), 0) + sign * coeff
    return BivarPoly(terms)
