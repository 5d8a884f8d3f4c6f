"""
Isomorphism Service - canonical forms, isomorphism tests and minor search
"""

from itertools import combinations, product
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx
from sympy.utilities.iterables import multiset_permutations

from config import Config
from valuta.errors import SizeCapExceeded
from valuta.models.matroid import Matroid, low_bits, mask_to_string, permute_mask, popcount


class CanonicalForm:
    """Lexicographically least sorted basis tuple over the searched relabelings"""

    __slots__ = ("n", "k", "key")

    def __init__(self, n: int, k: int, key: Tuple[int, ...]):
        self.n = n
        self.k = k
        self.key = key

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return (self.n, self.k, self.key) == (other.n, other.k, other.key)

    def __lt__(self, other):
        return (self.n, self.k, len(self.key), self.key) < (other.n, other.k, len(other.key), other.key)

    def __hash__(self):
        return hash((self.n, self.k, self.key))

    def __str__(self):
        return f"n={self.n} k={self.k} " + " ".join(mask_to_string(b, self.n) for b in self.key)

    def matroid(self) -> Matroid:
        return Matroid(self.n, self.key, validate=False)


class IsomorphismService:
    """Decides isomorphism between basis systems on {1..n}"""

    def __init__(self):
        self.cap = Config.ISOMORPHISM_CAP
        self.minor_cap = Config.MINOR_SEARCH_CAP

    def signature(self, M: Matroid) -> tuple:
        """Relabeling-invariant data compared before any search"""
        return (
            M.n,
            M.k,
            len(M.bases),
            tuple(sorted(M.element_degrees())),
            popcount(M.loops),
            popcount(M.coloops),
        )

    def _element_classes(self, M: Matroid) -> List[List[int]]:
        """Elements grouped by (degree, pair-degree profile), groups in invariant order"""
        degrees = M.element_degrees()
        n = M.n
        pair = [[0] * n for _ in range(n)]
        for b in M.bases:
            members = [i for i in range(n) if (b >> i) & 1]
            for i, j in combinations(members, 2):
                pair[i][j] += 1
                pair[j][i] += 1
        profile: Dict[tuple, List[int]] = {}
        for e in range(n):
            label = (degrees[e], tuple(sorted(pair[e][f] for f in range(n) if f != e)))
            profile.setdefault(label, []).append(e)
        return [profile[label] for label in sorted(profile)]

    def _twin_groups(self, M: Matroid, members: List[int]) -> List[List[int]]:
        """Split members into classes of elements whose transposition fixes the bases"""
        groups: List[List[int]] = []
        for e in members:
            for group in groups:
                if self._swap_is_automorphism(M, group[0], e):
                    group.append(e)
                    break
            else:
                groups.append([e])
        return groups

    @staticmethod
    def _swap_is_automorphism(M: Matroid, e: int, f: int) -> bool:
        be, bf = 1 << e, 1 << f
        for b in M.bases:
            has_e, has_f = bool(b & be), bool(b & bf)
            if has_e != has_f and (b ^ be ^ bf) not in M.bases:
                return False
        return True

    def canonical_form(self, M: Matroid) -> CanonicalForm:
        if M.n > self.cap:
            raise SizeCapExceeded("canonical form", M.n, self.cap, module="matroid-core")

        arrangements = []
        blocks = []
        offset = 0
        for members in self._element_classes(M):
            groups = self._twin_groups(M, members)
            pattern = sorted(g for g, group in enumerate(groups) for _ in group)
            arrangements.append(list(multiset_permutations(pattern)))
            blocks.append((offset, groups))
            offset += len(members)

        best: Optional[Tuple[int, ...]] = None
        perm = [0] * M.n
        for choice in product(*arrangements):
            for (start, groups), arrangement in zip(blocks, choice):
                cursors = [0] * len(groups)
                for pos, g in enumerate(arrangement):
                    element = groups[g][cursors[g]]
                    cursors[g] += 1
                    perm[element] = start + pos + 1
            key = tuple(sorted(permute_mask(b, perm) for b in M.bases))
            if best is None or key < best:
                best = key
        return CanonicalForm(M.n, M.k, best)

    def _incidence_graph(self, M: Matroid) -> nx.Graph:
        graph = nx.Graph()
        for e in range(M.n):
            graph.add_node(("e", e), side=0)
        for b in M.bases:
            graph.add_node(("b", b), side=1)
            for e in range(M.n):
                if (b >> e) & 1:
                    graph.add_edge(("e", e), ("b", b))
        return graph

    def is_isomorphic(self, M: Matroid, N: Matroid) -> bool:
        if M.n != N.n or M.k != N.k:
            return False
        if M.bases == N.bases:
            return True
        if self.signature(M) != self.signature(N):
            return False
        return nx.is_isomorphic(
            self._incidence_graph(M),
            self._incidence_graph(N),
            node_match=lambda a, b: a["side"] == b["side"],
        )

    def find_minor(self, M: Matroid, N: Matroid) -> Optional[Tuple[int, int]]:
        """(X, Y) with M/X minus Y isomorphic to N, or None

        X ranges over independent sets of size k_M - k_N and Y over sets whose
        removal keeps full rank, which reaches every minor up to isomorphism.
        """
        if M.n > self.minor_cap:
            raise SizeCapExceeded("minor search", M.n, self.minor_cap, module="matroid-core")
        contract_size = M.k - N.k
        delete_size = M.n - N.n - contract_size
        if contract_size < 0 or delete_size < 0:
            return None

        target_signature = self.signature(N)
        target_form = self.canonical_form(N) if N.n <= 7 else None
        ground = M.ground
        elements = list(low_bits(ground))
        for xs in combinations(elements, contract_size):
            X = sum(xs)
            if M.rank(X) != contract_size:
                continue
            rest = [e for e in elements if not e & X]
            for ys in combinations(rest, delete_size):
                Y = sum(ys)
                if M.rank(ground & ~Y) != M.k:
                    continue
                minor = M.minor(contract=X, delete=Y)
                if self.signature(minor) != target_signature:
                    continue
                if target_form is not None:
                    if self.canonical_form(minor) == target_form:
                        return X, Y
                elif self.is_isomorphic(minor, N):
                    return X, Y
        return None

    def has_minor_iso(self, M: Matroid, N: Matroid) -> bool:
        return self.find_minor(M, N) is not None

    def dedupe(self, matroids: Iterable[Matroid]) -> List[Matroid]:
        """First representative of each isomorphism class, in input order"""
        seen = set()
        out = []
        for M in matroids:
            form = self.canonical_form(M)
            if form not in seen:
                seen.add(form)
                out.append(M)
        return out


# Global service instance
isomorphism_service = IsomorphismService()
