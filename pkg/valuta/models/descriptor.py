"""
Symbolic names for family members

Grammar: `uniform:k,n`, `cuspidal:r,k,h,n`, `minimal:k,n`, `sum:(d1)+(d2)+...`
"""

from typing import List, Sequence, Tuple

from valuta.errors import InadmissibleParameters, ParseError

ARITY = {"uniform": 2, "cuspidal": 4, "minimal": 2}


class MatroidDescriptor:
    """A constructor term: uniform, cuspidal, minimal or a direct sum of terms"""

    __slots__ = ("_kind", "_params", "_parts")

    def __init__(self, kind: str, params: Sequence[int] = (), parts: Sequence["MatroidDescriptor"] = ()):
        if kind not in ARITY and kind != "sum":
            raise ParseError(f"unknown descriptor kind {kind!r}", module="families")
        self._kind = kind
        self._params = tuple(int(p) for p in params)
        self._parts = tuple(parts)
        if kind != "sum":
            check_admissible(kind, self._params)

    # Constructors

    @classmethod
    def uniform(cls, k: int, n: int) -> "MatroidDescriptor":
        return cls("uniform", (k, n))

    @classmethod
    def cuspidal(cls, r: int, k: int, h: int, n: int) -> "MatroidDescriptor":
        return cls("cuspidal", (r, k, h, n))

    @classmethod
    def minimal(cls, k: int, n: int) -> "MatroidDescriptor":
        return cls("minimal", (k, n))

    @classmethod
    def direct_sum(cls, *parts: "MatroidDescriptor") -> "MatroidDescriptor":
        """Flattened sum with empty blocks dropped; one block collapses to itself"""
        flat: List[MatroidDescriptor] = []
        for part in parts:
            if part.kind == "sum":
                flat.extend(part.parts)
            elif part.n > 0:
                flat.append(part)
        if not flat:
            return cls.uniform(0, 0)
        if len(flat) == 1:
            return flat[0]
        return cls("sum", parts=flat)

    # Data

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def params(self) -> Tuple[int, ...]:
        return self._params

    @property
    def parts(self) -> Tuple["MatroidDescriptor", ...]:
        return self._parts

    @property
    def n(self) -> int:
        if self._kind == "sum":
            return sum(part.n for part in self._parts)
        return self._params[-1]

    @property
    def k(self) -> int:
        if self._kind == "sum":
            return sum(part.k for part in self._parts)
        if self._kind == "cuspidal":
            return self._params[1]
        return self._params[0]

    def canonical_key(self) -> tuple:
        if self._kind == "sum":
            return ("sum", tuple(sorted(part.canonical_key() for part in self._parts)))
        return (self._kind, self._params)

    def __eq__(self, other):
        if not isinstance(other, MatroidDescriptor):
            return NotImplemented
        return (self._kind, self._params, self._parts) == (other._kind, other._params, other._parts)

    def __hash__(self):
        return hash((self._kind, self._params, self._parts))

    def __str__(self):
        if self._kind == "sum":
            return "sum:" + "+".join(f"({part})" for part in self._parts)
        return f"{self._kind}:" + ",".join(str(p) for p in self._params)

    def __repr__(self):
        return f"MatroidDescriptor({str(self)!r})"


def check_admissible(kind: str, params: Tuple[int, ...]):
    if len(params) != ARITY[kind]:
        raise ParseError(
            f"{kind} takes {ARITY[kind]} parameters, got {len(params)}", module="families"
        )
    if kind == "uniform":
        k, n = params
        if not 0 <= k <= n:
            raise InadmissibleParameters(f"uniform needs 0 <= k <= n, got k={k}, n={n}")
    elif kind == "minimal":
        k, n = params
        if not 1 <= k <= n - 1:
            raise InadmissibleParameters(f"minimal needs 1 <= k <= n-1, got k={k}, n={n}")
    else:
        r, k, h, n = params
        if not (0 <= r <= k and r <= h <= n and k - r <= n - h):
            raise InadmissibleParameters(
                f"cuspidal needs 0 <= r <= k, r <= h <= n and k-r <= n-h, got r={r}, k={k}, h={h}, n={n}"
            )


def parse_descriptor(text: str) -> MatroidDescriptor:
    text = text.strip()
    kind, sep, body = text.partition(":")
    if not sep:
        raise ParseError(f"descriptor needs `kind:parameters`: {text!r}", module="families")
    kind = kind.strip()
    if kind == "sum":
        return MatroidDescriptor.direct_sum(*(parse_descriptor(part) for part in _split_sum(body)))
    if kind not in ARITY:
        raise ParseError(f"unknown descriptor kind {kind!r}", module="families")
    try:
        params = [int(token) for token in body.split(",")]
    except ValueError:
        raise ParseError(f"descriptor parameters must be integers: {text!r}", module="families")
    return MatroidDescriptor(kind, params)


def _split_sum(body: str) -> List[str]:
    """Top-level `(...)+(...)` blocks with their outer parentheses removed"""
    blocks = []
    depth = 0
    current = ""
    for ch in body.strip():
        if ch == "(":
            depth += 1
            if depth == 1:
                current = ""
                continue
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in sum: {body!r}", module="families")
            if depth == 0:
                blocks.append(current)
                continue
        elif depth == 0:
            if ch in "+ ":
                continue
            raise ParseError(f"sum blocks must be parenthesised: {body!r}", module="families")
        current += ch
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in sum: {body!r}", module="families")
    if not blocks:
        raise ParseError("empty sum", module="families")
    return blocks
