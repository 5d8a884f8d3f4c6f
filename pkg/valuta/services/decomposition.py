"""
Decomposition Service - f-ranks of matroid families and unique Tutte decompositions
"""

import csv
import io
from functools import partial
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config import Config
from valuta.console import status
from valuta.errors import MixedStratum, SizeCapExceeded, TheoremViolation
from valuta.models.descriptor import MatroidDescriptor
from valuta.models.linalg import exact_rank, solve_in_span
from valuta.models.matroid import Matroid
from valuta.models.polynomial import BivarPoly, monomial_order
from valuta.services.families import EXCLUDED_MINORS, family_service, normalize_kind
from valuta.services.generation import generation_service
from valuta.services.invariants import invariant_service
from valuta.services.isomorphism import isomorphism_service
from valuta.services.workers import parallel_map

BASIS_KINDS = ("cuspidal", "class_U", "class_T")
RANK_FAMILIES = ("all", "split", "class-n", "class-u", "class-t", "cuspidal", "simple")
INVARIANTS = ("tutte", "ginv")


class Decomposition:
    """Integer coefficients of T(M) over a basis family, zero terms omitted"""

    def __init__(self, basis_kind: str, n: int, k: int, terms: List[Tuple[MatroidDescriptor, int]]):
        self.basis_kind = basis_kind
        self.n = n
        self.k = k
        self.terms = terms

    def expand(self) -> BivarPoly:
        total = BivarPoly.zero()
        for d, c in self.terms:
            total = total + decomposition_service.tutte_of(d).scale(c)
        return total

    def to_json(self) -> Dict:
        return {
            "basis": self.basis_kind,
            "n": self.n,
            "k": self.k,
            "terms": [[str(d), c] for d, c in self.terms],
        }

    def __str__(self):
        return "\n".join(f"{c:+d} {d}" for d, c in self.terms) if self.terms else "0"


class RankTable:
    """T-rank and G-rank per (n, k) stratum of one family"""

    def __init__(self, family: str, invariants: Sequence[str]):
        self.family = family
        self.invariants = tuple(invariants)
        self.entries: Dict[Tuple[int, int], Dict[str, int]] = {}

    def add(self, n: int, k: int, size: int, ranks: Dict[str, int]):
        self.entries[(n, k)] = {"size": size, **ranks}

    def rows(self) -> List[List]:
        out = []
        for (n, k), entry in sorted(self.entries.items()):
            out.append([n, k, entry["size"]] + [entry.get(f"{inv}_rank") for inv in self.invariants])
        return out

    @property
    def header(self) -> List[str]:
        return ["n", "k", "members"] + [f"{inv}_rank" for inv in self.invariants]

    def to_text(self) -> str:
        table = [self.header] + [[str(v) for v in row] for row in self.rows()]
        widths = [max(len(row[i]) for row in table) for i in range(len(self.header))]
        lines = [f"# family: {self.family}"]
        lines += ["  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in table]
        return "\n".join(lines)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows())
        return buffer.getvalue()

    def to_json(self) -> Dict:
        return {
            "family": self.family,
            "invariants": list(self.invariants),
            "entries": [dict(zip(self.header, row)) for row in self.rows()],
        }


def _decompose_one(basis_kind: str, M: Matroid) -> Decomposition:
    return decomposition_service.decompose(M, basis_kind)


class DecompositionService:
    """Linear algebra over invariant vectors of matroid families"""

    def __init__(self):
        self.tutte_cap = Config.TUTTE_CAP
        self.enumeration_cap = Config.ENUMERATION_CAP
        self.samples = 5
        self._tutte: Dict[MatroidDescriptor, BivarPoly] = {}

    def tutte_of(self, d: MatroidDescriptor) -> BivarPoly:
        if d not in self._tutte:
            self._tutte[d] = invariant_service.tutte(family_service.realize(d))
        return self._tutte[d]

    # Ranks

    def tutte_matrix(self, polys: Sequence[BivarPoly]) -> List[List[int]]:
        monomials = monomial_order(polys)
        return [p.to_vector(monomials) for p in polys]

    def invariant_rank(self, matroids: Sequence[Matroid], which: str = "tutte") -> int:
        if not matroids:
            return 0
        strata = {(M.n, M.k) for M in matroids}
        if len(strata) > 1:
            raise MixedStratum(f"matroids come from several (n, k) strata: {sorted(strata)}")
        if which == "tutte":
            rows = self.tutte_matrix([invariant_service.tutte(M) for M in matroids])
        elif which == "ginv":
            rows = [invariant_service.g_invariant(M).to_vector() for M in matroids]
        else:
            raise ValueError(f"unknown invariant {which!r}")
        return exact_rank(rows)

    # Decomposition

    def decompose(self, M: Matroid, basis_kind: str = "cuspidal") -> Decomposition:
        kind = normalize_kind(basis_kind)
        if kind not in BASIS_KINDS:
            raise ValueError(f"{basis_kind!r} is not a decomposition basis")
        if M.n > self.tutte_cap:
            raise SizeCapExceeded("decomposition", M.n, self.tutte_cap, module="decomposition")

        members = family_service.family(kind, M.n, M.k)
        generators = [self.tutte_of(d) for d in members]
        target = invariant_service.tutte(M)
        monomials = monomial_order(generators + [target])
        solution = solve_in_span(
            [g.to_vector(monomials) for g in generators],
            target.to_vector(monomials),
        )
        if solution is None:
            raise TheoremViolation(f"T(M) is outside the span of the {kind} basis")
        if not solution.is_unique:
            raise TheoremViolation(f"the {kind} Tutte polynomials are linearly dependent")
        if not solution.is_integral:
            raise TheoremViolation(f"non-integral {kind} coefficients: {solution}")

        terms = [(d, c) for d, c in zip(members, solution.integer_coefficients()) if c]
        return Decomposition(kind, M.n, M.k, terms)

    def decompose_all(self, matroids: Iterable[Matroid], basis_kind: str = "cuspidal",
                      threads: Optional[int] = None) -> List[Decomposition]:
        return parallel_map(partial(_decompose_one, basis_kind), matroids, threads)

    # Rank tables

    def stratum(self, family: str, n: int, k: int) -> List[Matroid]:
        """Finite generating list for one family in one stratum"""
        if family not in RANK_FAMILIES:
            raise ValueError(f"unknown family {family!r}; expected one of {', '.join(RANK_FAMILIES)}")
        if family in ("cuspidal", "class-u", "class-t") and n > self.enumeration_cap:
            kind = {"cuspidal": "cuspidal", "class-u": "class_U", "class-t": "class_T"}[family]
            return [family_service.realize(d) for d in family_service.family(kind, n, k)]
        if family == "cuspidal":
            return [family_service.realize(d) for d in family_service.family("cuspidal", n, k)]
        if n > self.enumeration_cap:
            if family == "split":
                return [family_service.realize(d) for d in family_service.family("cuspidal", n, k)]
            if family == "class-n":
                members = [family_service.realize(d) for d in family_service.class_n_generators(n, k)]
                members += [
                    generation_service.random_matroid(n, k, "sparse_paving", Config.VERIFY_SEED + i)
                    for i in range(self.samples)
                ]
                return members
            raise SizeCapExceeded(f"rank table for family {family}", n, self.enumeration_cap,
                                  module="decomposition")

        matroids = generation_service.enumerate_matroids(n, k)
        if family == "all":
            return matroids
        if family == "simple":
            return [M for M in matroids if M.is_simple()]
        if family == "split":
            return [M for M in matroids if family_service.is_elementary_split(M)]
        excluded = {
            "class-n": ("U11+U13", "U01+U23"),
            "class-u": ("T24", "U12+U12"),
            "class-t": ("U24", "U12+U12"),
        }[family]
        minors = [family_service.realize(EXCLUDED_MINORS[name]) for name in excluded]
        return [
            M for M in matroids
            if not any(isomorphism_service.has_minor_iso(M, N) for N in minors)
        ]

    def rank_table(self, family: str, ns: Iterable[int], ks: Optional[Iterable[int]] = None,
                   invariants: Sequence[str] = INVARIANTS) -> RankTable:
        table = RankTable(family, invariants)
        ks = list(ks) if ks is not None else None
        for n in ns:
            for k in (ks if ks is not None else range(n + 1)):
                if not 0 <= k <= n:
                    continue
                members = self.stratum(family, n, k)
                status(f"🔄 rank table {family}: n={n}, k={k}, {len(members)} members")
                ranks = {f"{inv}_rank": self.invariant_rank(members, inv) for inv in invariants}
                table.add(n, k, len(members), ranks)
        return table

    @staticmethod
    def expected_t_rank(family: str, n: int, k: int) -> Optional[int]:
        """Known T-rank of a stratum, where one is known"""
        if family in ("all", "split", "cuspidal", "class-u", "class-t"):
            return k * (n - k) + 1
        if family == "class-n" and n > 4 and 2 <= k <= n - 2:
            return min(k + 3, n - k + 3)
        if family == "simple" and 2 <= k <= n:
            return (k - 2) * (n - k) + 1
        return None

    @staticmethod
    def expected_g_rank(family: str, n: int, k: int) -> Optional[int]:
        if family == "all":
            return comb(n, k)
        if family in ("split", "cuspidal", "class-u", "class-t"):
            return k * (n - k) + 1
        if family == "class-n" and n > 4 and 2 <= k <= n - 2:
            return min(k + 3, n - k + 3)
        return None


# Global service instance
decomposition_service = DecompositionService()
