"""
G-invariant coefficient vectors, keyed by 0/1 rank-increment strings
"""

from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from valuta.errors import InvariantError


def increment_keys(n: int, k: int) -> List[str]:
    """All length-n 0/1 strings with k ones, in descending order"""
    keys = []
    for ones in combinations(range(n), k):
        chars = ["0"] * n
        for i in ones:
            chars[i] = "1"
        keys.append("".join(chars))
    return sorted(keys, reverse=True)


class GInvariantVector:
    """Sparse integer combination of the symbols U_s for weight-k strings s"""

    __slots__ = ("n", "k", "_coeffs")

    def __init__(self, n: int, k: int, coeffs: Dict[str, int] = None):
        self.n = n
        self.k = k
        clean = {}
        for key, value in (coeffs or {}).items():
            if len(key) != n or key.count("1") != k or set(key) - {"0", "1"}:
                raise InvariantError(f"key {key!r} is not a 0/1 string of length {n} with {k} ones")
            if value:
                clean[key] = int(value)
        self._coeffs = clean

    @property
    def coeffs(self) -> Dict[str, int]:
        return dict(self._coeffs)

    def __getitem__(self, key: str) -> int:
        return self._coeffs.get(key, 0)

    def total(self) -> int:
        return sum(self._coeffs.values())

    def sorted_items(self) -> List[Tuple[str, int]]:
        return sorted(self._coeffs.items(), reverse=True)

    def to_vector(self) -> List[int]:
        return [self._coeffs.get(key, 0) for key in increment_keys(self.n, self.k)]

    def _check_compatible(self, other: "GInvariantVector"):
        if (self.n, self.k) != (other.n, other.k):
            raise InvariantError(
                f"cannot combine G-invariants of (n,k)=({self.n},{self.k}) and ({other.n},{other.k})"
            )

    def __add__(self, other: "GInvariantVector") -> "GInvariantVector":
        self._check_compatible(other)
        out = dict(self._coeffs)
        for key, value in other._coeffs.items():
            out[key] = out.get(key, 0) + value
        return GInvariantVector(self.n, self.k, out)

    def __neg__(self) -> "GInvariantVector":
        return self.scale(-1)

    def __sub__(self, other: "GInvariantVector") -> "GInvariantVector":
        return self + (-other)

    def scale(self, factor: int) -> "GInvariantVector":
        return GInvariantVector(self.n, self.k, {key: v * factor for key, v in self._coeffs.items()})

    def __rmul__(self, factor: int) -> "GInvariantVector":
        return self.scale(factor)

    def dual_index(self) -> "GInvariantVector":
        """Re-index by s -> (1 - s_n, ..., 1 - s_1), the G-invariant of the dual"""
        flip = str.maketrans("01", "10")
        return GInvariantVector(
            self.n,
            self.n - self.k,
            {key[::-1].translate(flip): v for key, v in self._coeffs.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, GInvariantVector):
            return NotImplemented
        return (self.n, self.k, self._coeffs) == (other.n, other.k, other._coeffs)

    def __hash__(self):
        return hash((self.n, self.k, frozenset(self._coeffs.items())))

    def to_json(self) -> List[list]:
        return [[key, value] for key, value in self.sorted_items()]

    @classmethod
    def from_json(cls, n: int, k: int, pairs: Iterable[Sequence]) -> "GInvariantVector":
        return cls(n, k, {key: value for key, value in pairs})

    def __str__(self):
        if not self._coeffs:
            return "0"
        return " + ".join(f"{value}*U[{key}]" for key, value in self.sorted_items()).replace("+ -", "- ")

    def __repr__(self):
        return f"GInvariantVector(n={self.n}, k={self.k}, terms={len(self._coeffs)})"
