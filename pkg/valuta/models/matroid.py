"""
Matroid model: basis systems on the ground set {1..n}

Element i is bit i-1 of a subset mask. Bases are the single source of truth;
ranks come from a 2^n table built once per matroid and then read-only.
"""

from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from valuta.errors import (
    EmptyBases,
    ExchangeViolation,
    MaskOutOfRange,
    MixedCardinality,
    OverlappingSets,
    ParseError,
)

RANK_TABLE_CAP = 16


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_from_elements(elements: Iterable[int]) -> int:
    """Characteristic mask of a set of 1-based labels"""
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> List[int]:
    """Ascending 1-based labels of the elements in mask"""
    out = []
    label = 1
    while mask:
        if mask & 1:
            out.append(label)
        mask >>= 1
        label += 1
    return out


def low_bits(mask: int):
    """Yield the single-bit masks of mask in ascending order"""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def k_subsets(n: int, k: int) -> List[int]:
    """All k-subsets of {1..n} as masks, in lexicographic order of labels"""
    if k < 0 or k > n:
        return []
    return [sum(1 << i for i in combo) for combo in combinations(range(n), k)]


def compress(mask: int, keep: int) -> int:
    """Move the bits of mask that lie in keep onto consecutive low bits"""
    out = 0
    pos = 0
    bit = 0
    while keep >> bit:
        if (keep >> bit) & 1:
            if (mask >> bit) & 1:
                out |= 1 << pos
            pos += 1
        bit += 1
    return out


def mask_to_string(mask: int, n: int) -> str:
    """Left-to-right 0/1 string, position i holding element i"""
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(n))


def exchange_violation(bases: FrozenSet[int]) -> Optional[Tuple[int, int, int]]:
    """First (B1, B2, e) breaking the basis-exchange axiom, or None"""
    for b1 in bases:
        for b2 in bases:
            if b1 == b2:
                continue
            only2 = b2 & ~b1
            for e in low_bits(b1 & ~b2):
                base = b1 ^ e
                if not any((base | f) in bases for f in low_bits(only2)):
                    return b1, b2, e.bit_length()
    return None


class Matroid:
    """A matroid given by its bases"""

    __slots__ = ("_n", "_bases", "_k", "_ranks", "_hash")

    def __init__(self, n: int, bases: Iterable[int], validate: bool = True):
        bases = frozenset(bases)
        if validate:
            self._validate(n, bases)
        self._n = n
        self._bases = bases
        self._k = popcount(next(iter(bases)))
        self._ranks = None
        self._hash = None

    @staticmethod
    def _validate(n: int, bases: FrozenSet[int]):
        if n < 0:
            raise MaskOutOfRange(0, n)
        if not bases:
            raise EmptyBases()
        ground = (1 << n) - 1
        for b in bases:
            if b < 0 or b & ~ground:
                raise MaskOutOfRange(b, n)
        sizes = {popcount(b) for b in bases}
        if len(sizes) > 1:
            raise MixedCardinality(sizes)
        violation = exchange_violation(bases)
        if violation:
            raise ExchangeViolation(*violation)

    # Constructors

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[int]) -> "Matroid":
        return cls(n, bases)

    @classmethod
    def from_elements(cls, n: int, bases: Iterable[Iterable[int]]) -> "Matroid":
        return cls(n, [mask_from_elements(b) for b in bases])

    @classmethod
    def uniform(cls, k: int, n: int) -> "Matroid":
        return cls(n, k_subsets(n, k), validate=False)

    # Basic data

    @property
    def n(self) -> int:
        return self._n

    @property
    def k(self) -> int:
        return self._k

    @property
    def bases(self) -> FrozenSet[int]:
        return self._bases

    @property
    def sorted_bases(self) -> Tuple[int, ...]:
        return tuple(sorted(self._bases))

    @property
    def ground(self) -> int:
        return (1 << self._n) - 1

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self._n == other._n and self._bases == other._bases

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._bases))
        return self._hash

    def __repr__(self):
        return f"Matroid(n={self._n}, k={self._k}, bases={len(self._bases)})"

    def __getstate__(self):
        return (self._n, self._bases)

    def __setstate__(self, state):
        self._n, self._bases = state
        self._k = popcount(next(iter(self._bases)))
        self._ranks = None
        self._hash = None

    # Rank oracle

    @property
    def rank_table(self) -> List[int]:
        """rk(A) for every mask A, built from the independent sets"""
        if self._ranks is None:
            size = 1 << self._n
            independent = bytearray(size)
            for b in self._bases:
                independent[b] = 1
            for mask in range(size - 1, 0, -1):
                if independent[mask]:
                    for low in low_bits(mask):
                        independent[mask ^ low] = 1
            ranks = [0] * size
            for mask in range(1, size):
                if independent[mask]:
                    ranks[mask] = popcount(mask)
                else:
                    ranks[mask] = max(ranks[mask ^ low] for low in low_bits(mask))
            self._ranks = ranks
        return self._ranks

    def check_mask(self, mask: int):
        if mask < 0 or mask & ~self.ground:
            raise MaskOutOfRange(mask, self._n)

    def rank(self, subset: int) -> int:
        self.check_mask(subset)
        if self._n <= RANK_TABLE_CAP:
            return self.rank_table[subset]
        return max(popcount(b & subset) for b in self._bases)

    def closure(self, subset: int) -> int:
        r = self.rank(subset)
        out = subset
        for e in low_bits(self.ground & ~subset):
            if self.rank(subset | e) == r:
                out |= e
        return out

    # Loops, coloops, degrees

    @property
    def loops(self) -> int:
        union = 0
        for b in self._bases:
            union |= b
        return self.ground & ~union

    @property
    def coloops(self) -> int:
        common = self.ground
        for b in self._bases:
            common &= b
        return common

    def element_degrees(self) -> List[int]:
        """Number of bases containing each element, by label order"""
        return [sum(1 for b in self._bases if (b >> i) & 1) for i in range(self._n)]

    # Constructions

    def dual(self) -> "Matroid":
        ground = self.ground
        return Matroid(self._n, (ground ^ b for b in self._bases), validate=False)

    def minor(self, contract: int = 0, delete: int = 0) -> "Matroid":
        """M/contract minus delete, relabelled onto 1..n-|contract|-|delete|

        Bases are B - B_X for bases B of M|(E - delete) containing B_X, where
        B_X is the greedy (ascending-label) maximal independent subset of
        the contraction set.
        """
        self.check_mask(contract)
        self.check_mask(delete)
        if contract & delete:
            raise OverlappingSets(contract, delete)
        keep = self.ground & ~delete
        keep_rank = self.rank(keep)
        restricted = {b & keep for b in self._bases if popcount(b & keep) == keep_rank}

        spanning = 0
        spanning_rank = 0
        for e in low_bits(contract):
            if self.rank(spanning | e) > spanning_rank:
                spanning |= e
                spanning_rank += 1

        remaining = keep & ~contract
        new_bases = {
            compress(d & ~spanning, remaining)
            for d in restricted
            if d & contract == spanning
        }
        return Matroid(popcount(remaining), new_bases, validate=False)

    def restriction(self, subset: int) -> "Matroid":
        return self.minor(delete=self.ground & ~subset)

    def contraction(self, subset: int) -> "Matroid":
        return self.minor(contract=subset)

    def deletion(self, subset: int) -> "Matroid":
        return self.minor(delete=subset)

    def direct_sum(self, other: "Matroid") -> "Matroid":
        shift = self._n
        bases = {b1 | (b2 << shift) for b1 in self._bases for b2 in other._bases}
        return Matroid(self._n + other._n, bases, validate=False)

    def relabel(self, perm: Sequence[int]) -> "Matroid":
        """Send element i+1 to label perm[i] (a permutation of 1..n)"""
        if sorted(perm) != list(range(1, self._n + 1)):
            raise ValueError(f"not a permutation of 1..{self._n}: {list(perm)}")
        return Matroid(self._n, (permute_mask(b, perm) for b in self._bases), validate=False)

    # Structure

    def cyclic_flats(self) -> List[Tuple[int, int]]:
        """(mask, rank) of every cyclic flat, sorted by (rank, mask)"""
        out = []
        ground = self.ground
        for mask in range(1 << self._n):
            r = self.rank(mask)
            if any(self.rank(mask | e) == r for e in low_bits(ground & ~mask)):
                continue
            if any(self.rank(mask ^ e) < r for e in low_bits(mask)):
                continue
            out.append((mask, r))
        out.sort(key=lambda item: (item[1], item[0]))
        return out

    def is_uniform(self) -> bool:
        from math import comb
        return len(self._bases) == comb(self._n, self._k)

    def is_connected(self) -> bool:
        if self._n <= 1:
            return True
        ground = self.ground
        # Separators come in complementary pairs; fix element 1 on one side
        for mask in range(1, 1 << self._n, 2):
            if mask == ground:
                continue
            if self.rank(mask) + self.rank(ground ^ mask) == self._k:
                return False
        return True

    def is_paving(self) -> bool:
        """No circuit is smaller than the rank"""
        if self._k == 0:
            return True
        return all(self.rank(s) == self._k - 1 for s in k_subsets(self._n, self._k - 1))

    def is_sparse_paving(self) -> bool:
        return self.is_paving() and self.dual().is_paving()

    def is_simple(self) -> bool:
        if self.loops:
            return False
        return all(self.rank(s) == 2 for s in k_subsets(self._n, 2))

    # Serialization

    def to_mtx(self, comment: str = None) -> str:
        lines = []
        if comment:
            lines.extend(f"# {line}" for line in comment.splitlines())
        lines.append(f"n={self._n} k={self._k}")
        for b in self.sorted_bases:
            lines.append(" ".join(str(e) for e in elements_of(b)))
        return "\n".join(lines) + "\n"


def permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for i, target in enumerate(perm):
        if (mask >> i) & 1:
            out |= 1 << (target - 1)
    return out


def parse_mtx(text: str) -> Matroid:
    """Parse the `.mtx` text format (header `n=<int> k=<int>`, one basis per line)"""
    header: Optional[Dict[str, int]] = None
    basis_lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            continue
        if header is None:
            if not line:
                continue
            header = _parse_header(line)
            continue
        basis_lines.append(line)

    if header is None:
        raise ParseError("missing `n=<int> k=<int>` header", module="matroid-core")
    n, k = header["n"], header["k"]
    if k == 0:
        return Matroid(n, [0])

    bases = []
    for line in basis_lines:
        if not line:
            continue
        try:
            labels = [int(token) for token in line.split()]
        except ValueError:
            raise ParseError(f"bad basis line: {line!r}", module="matroid-core")
        if any(e < 1 or e > n for e in labels):
            raise ParseError(f"label outside 1..{n}: {line!r}", module="matroid-core")
        if len(labels) != k:
            raise ParseError(f"basis {line!r} does not have k={k} elements", module="matroid-core")
        bases.append(mask_from_elements(labels))
    return Matroid(n, bases)


def _parse_header(line: str) -> Dict[str, int]:
    fields = {}
    for token in line.split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ParseError(f"bad header token {token!r}", module="matroid-core")
        try:
            fields[key] = int(value)
        except ValueError:
            raise ParseError(f"bad header value {token!r}", module="matroid-core")
    if set(fields) != {"n", "k"}:
        raise ParseError(f"header must define exactly n and k: {line!r}", module="matroid-core")
    return fields
