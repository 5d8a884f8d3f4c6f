"""
Generation Service - exhaustive enumeration and seeded random matroids
"""

import random
from itertools import combinations, permutations
from typing import Dict, List, Tuple

import networkx as nx

from config import Config
from valuta.console import status
from valuta.errors import InfeasibleParameters, SizeCapExceeded
from valuta.models.matroid import Matroid, exchange_violation, k_subsets, popcount
from valuta.services.families import family_service
from valuta.services.isomorphism import isomorphism_service

RANDOM_KINDS = ("sparse_paving", "graphic", "relaxation_chain")
SLOW_PATH_CAP = 5


class GenerationService:
    """Builds matroids of a given size, either all of them or a seeded sample"""

    def __init__(self):
        self.cap = Config.ENUMERATION_CAP
        self.hard_cap = Config.ENUMERATION_HARD_CAP
        self._representatives: Dict[Tuple[int, int], List[Matroid]] = {}

    # Enumeration

    def _check_enumeration_cap(self, n: int, force: bool):
        if n > self.hard_cap:
            raise SizeCapExceeded("enumeration", n, self.hard_cap, module="matroid-core")
        if n > self.cap and not force:
            raise SizeCapExceeded(
                "enumeration without --force-cap-override", n, self.cap, module="matroid-core"
            )

    def enumerate_matroids(self, n: int, k: int, up_to_iso: bool = True, force: bool = False) -> List[Matroid]:
        """All rank-k matroids on {1..n}, or one per isomorphism class"""
        self._check_enumeration_cap(n, force)
        if k < 0 or k > n:
            return []
        representatives = self.representatives(n, k)
        if up_to_iso:
            return list(representatives)
        labeled = set()
        for M in representatives:
            for perm in permutations(range(1, n + 1)):
                labeled.add(M.relabel(perm))
        return sorted(labeled, key=lambda M: (len(M.bases), M.sorted_bases))

    def representatives(self, n: int, k: int) -> List[Matroid]:
        """One matroid per isomorphism class, built by single-element extension"""
        key = (n, k)
        if key in self._representatives:
            return self._representatives[key]
        if n == 0:
            found = [Matroid(0, [0], validate=False)]
        elif k == 0 or k == n:
            found = [Matroid.uniform(k, n)]
        else:
            status(f"🔄 Enumerating rank-{k} matroids on {n} elements")
            candidates = []
            for R in self.representatives(n - 1, k):
                candidates.extend(self._extensions(R))
            for R in self.representatives(n - 1, k - 1):
                candidates.append(R.direct_sum(Matroid.uniform(1, 1)))
            forms = {}
            for M in candidates:
                form = isomorphism_service.canonical_form(M)
                if form not in forms:
                    forms[form] = form.matroid()
            found = [forms[form] for form in sorted(forms)]
            status(f"✅ {len(found)} isomorphism classes for n={n}, k={k}")
        self._representatives[key] = found
        return found

    def _extensions(self, R: Matroid) -> List[Matroid]:
        """Extensions of R by a new non-coloop element n"""
        n = R.n + 1
        new = 1 << R.n
        independent = [s for s in k_subsets(R.n, R.k - 1) if R.rank(s) == R.k - 1]
        out = []
        for mask in range(1 << len(independent)):
            added = {independent[i] | new for i in range(len(independent)) if (mask >> i) & 1}
            bases = frozenset(R.bases | added)
            if added and exchange_violation(bases):
                continue
            out.append(Matroid(n, bases, validate=False))
        return out

    def enumerate_matroids_slow(self, n: int, k: int, up_to_iso: bool = True) -> List[Matroid]:
        """Filter every nonempty family of k-sets; dedupe by pairwise isomorphism tests"""
        if n > SLOW_PATH_CAP:
            raise SizeCapExceeded("slow enumeration", n, SLOW_PATH_CAP, module="matroid-core")
        if k < 0 or k > n:
            return []
        ksets = k_subsets(n, k)
        found = []
        for mask in range(1, 1 << len(ksets)):
            bases = frozenset(ksets[i] for i in range(len(ksets)) if (mask >> i) & 1)
            if exchange_violation(bases) is None:
                found.append(Matroid(n, bases, validate=False))
        if not up_to_iso:
            return found
        classes: List[Matroid] = []
        for M in found:
            if not any(isomorphism_service.is_isomorphic(M, rep) for rep in classes):
                classes.append(M)
        return classes

    # Random matroids

    def random_matroid(self, n: int, k: int, kind: str, seed: int) -> Matroid:
        if kind not in RANDOM_KINDS:
            raise InfeasibleParameters(f"unknown random kind {kind!r}; expected one of {', '.join(RANDOM_KINDS)}")
        if n < 0 or k < 0 or k > n:
            raise InfeasibleParameters(f"no rank-{k} matroid on {n} elements")
        rng = random.Random(f"{kind}:{n}:{k}:{seed}")
        if kind == "sparse_paving":
            return self._random_sparse_paving(n, k, rng)
        if kind == "graphic":
            return self._random_graphic(n, k, rng)
        return self._random_relaxation_chain(n, k, rng)

    def _random_sparse_paving(self, n: int, k: int, rng: random.Random) -> Matroid:
        """U_{k,n} minus a random family of k-sets pairwise meeting in at most k-2 elements"""
        ksets = k_subsets(n, k)
        if not 1 <= k <= n - 1:
            return Matroid(n, ksets, validate=False)
        rng.shuffle(ksets)
        target = rng.randint(1, max(1, len(ksets) // (k + 1)))
        removed: List[int] = []
        for s in ksets:
            if len(removed) >= target or len(removed) >= len(ksets) - 1:
                break
            if all(popcount(s & t) <= k - 2 for t in removed):
                removed.append(s)
        return Matroid(n, set(ksets) - set(removed))

    def _random_graphic(self, n: int, k: int, rng: random.Random) -> Matroid:
        """Cycle matroid of a random connected multigraph on k+1 vertices with n edges"""
        vertices = k + 1
        edges = [(rng.randrange(v), v) for v in range(1, vertices)]
        edges += [(rng.randrange(vertices), rng.randrange(vertices)) for _ in range(n - k)]
        rng.shuffle(edges)
        bases = []
        for chosen in combinations(range(n), k):
            graph = nx.MultiGraph()
            graph.add_nodes_from(range(vertices))
            graph.add_edges_from(edges[i] for i in chosen)
            if nx.is_tree(graph):
                bases.append(sum(1 << i for i in chosen))
        return Matroid(n, bases)

    def _random_relaxation_chain(self, n: int, k: int, rng: random.Random) -> Matroid:
        """Random partition matroid followed by a few stressed-subset relaxations"""
        sizes = []
        remaining = n
        while remaining:
            size = rng.randint(1, remaining)
            sizes.append(size)
            remaining -= size
        capacities = [0] * len(sizes)
        for _ in range(k):
            open_blocks = [i for i, size in enumerate(sizes) if capacities[i] < size]
            capacities[rng.choice(open_blocks)] += 1

        M = Matroid(0, [0], validate=False)
        for size, cap in zip(sizes, capacities):
            M = M.direct_sum(Matroid.uniform(cap, size))
        rng_order = list(range(n))
        rng.shuffle(rng_order)
        M = M.relabel([i + 1 for i in rng_order])

        for _ in range(rng.randint(0, 3)):
            relaxable = family_service.stressed_report(M).with_cusp
            if not relaxable:
                break
            M = family_service.relax(M, rng.choice(relaxable).mask)
        return M


# Global service instance
generation_service = GenerationService()
