"""
Invariant Service - Tutte polynomials, G-invariants and coefficient checks
"""

from functools import partial
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from config import Config
from valuta.console import status
from valuta.errors import HasLoopOrColoop, SizeCapExceeded
from valuta.models.ginvariant import GInvariantVector, increment_keys
from valuta.models.matroid import Matroid, low_bits, popcount
from valuta.models.polynomial import BivarPoly
from valuta.services.workers import parallel_map


def count_chains(ranks: Sequence[int], n: int, key: str) -> Tuple[str, int]:
    """Number of orderings of {1..n} whose prefix-rank increments spell key"""
    layer: Dict[int, int] = {0: 1}
    ground = (1 << n) - 1
    for step in range(n):
        wanted = 1 if key[step] == "1" else 0
        following: Dict[int, int] = {}
        for subset, count in layer.items():
            base = ranks[subset]
            for e in low_bits(ground & ~subset):
                grown = subset | e
                if ranks[grown] - base == wanted:
                    following[grown] = following.get(grown, 0) + count
        layer = following
        if not layer:
            return key, 0
    return key, layer.get(ground, 0)


class InvariantService:
    """Valuative invariants computed from the rank table of a matroid"""

    def __init__(self):
        self.tutte_cap = Config.TUTTE_CAP
        self.ginv_cap = Config.GINV_CAP
        self._dc_cache: Dict[Tuple[int, frozenset], BivarPoly] = {}

    def _check_cap(self, what: str, M: Matroid, cap: int):
        if M.n > cap:
            raise SizeCapExceeded(what, M.n, cap, module="invariants")

    def rank_generating_polynomial(self, M: Matroid) -> BivarPoly:
        """sum over A of x^(k - rk A) * y^(|A| - rk A)"""
        self._check_cap("rank generating polynomial", M, self.tutte_cap)
        ranks = M.rank_table
        k = M.k
        counts: Dict[Tuple[int, int], int] = {}
        for subset in range(1 << M.n):
            r = ranks[subset]
            key = (k - r, popcount(subset) - r)
            counts[key] = counts.get(key, 0) + 1
        return BivarPoly(counts)

    def tutte(self, M: Matroid) -> BivarPoly:
        """Tutte polynomial by the corank-nullity subset sum"""
        self._check_cap("Tutte polynomial", M, self.tutte_cap)
        return self.rank_generating_polynomial(M).shift(-1, -1)

    def tutte_dc(self, M: Matroid) -> BivarPoly:
        """Tutte polynomial by deletion-contraction on the highest label"""
        self._check_cap("deletion-contraction", M, self.tutte_cap)
        return self._tutte_dc(M)

    def _tutte_dc(self, M: Matroid) -> BivarPoly:
        if M.n == 0:
            return BivarPoly.constant(1)
        key = (M.n, M.bases)
        cached = self._dc_cache.get(key)
        if cached is not None:
            return cached
        e = 1 << (M.n - 1)
        if M.loops & e:
            result = BivarPoly.y() * self._tutte_dc(M.deletion(e))
        elif M.coloops & e:
            result = BivarPoly.x() * self._tutte_dc(M.contraction(e))
        else:
            result = self._tutte_dc(M.deletion(e)) + self._tutte_dc(M.contraction(e))
        if len(self._dc_cache) > 200000:
            self._dc_cache.clear()
        self._dc_cache[key] = result
        return result

    def g_invariant(self, M: Matroid, threads: Optional[int] = None) -> GInvariantVector:
        """Chain count per rank-increment sequence, one subset DP per sequence"""
        self._check_cap("G-invariant", M, self.ginv_cap)
        keys = increment_keys(M.n, M.k)
        if M.n >= 9:
            status(f"🔄 G-invariant: {len(keys)} sequences over 2^{M.n} subsets")
        counted = parallel_map(partial(count_chains, M.rank_table, M.n), keys, threads)
        return GInvariantVector(M.n, M.k, dict(counted))

    def brylawski_residues(self, P: BivarPoly, n: int) -> List[int]:
        """Left-hand sides of the n linear relations satisfied by every Tutte polynomial"""
        residues = []
        for s in range(n):
            total = 0
            for i in range(s + 1):
                for j in range(s - i + 1):
                    a = P.coefficient(i, j)
                    if a:
                        total += (-1) ** j * comb(s - i, j) * a
            residues.append(total)
        return residues

    def brylawski_check(self, P: BivarPoly, n: int) -> bool:
        return all(r == 0 for r in self.brylawski_residues(P, n))

    def merino_welsh_check(self, M: Matroid) -> bool:
        """T(2,0) * T(0,2) >= T(1,1)^2, for loopless coloopless M"""
        if M.loops or M.coloops:
            raise HasLoopOrColoop(popcount(M.loops), popcount(M.coloops))
        T = self.tutte(M)
        return T.evaluate(2, 0) * T.evaluate(0, 2) >= T.evaluate(1, 1) ** 2


# Global service instance
invariant_service = InvariantService()
