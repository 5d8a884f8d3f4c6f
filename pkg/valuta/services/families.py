"""
Family Service - named matroids, stressed subsets, relaxations and class tests
"""

from math import comb
from typing import Dict, List, Optional, Tuple

from config import Config
from valuta.console import status
from valuta.errors import (
    EmptyCusp,
    InternalInconsistency,
    NotElementarySplit,
    NotStressed,
    SizeCapExceeded,
    UnsupportedShape,
)
from valuta.models.descriptor import MatroidDescriptor
from valuta.models.ginvariant import GInvariantVector
from valuta.models.matroid import Matroid, elements_of, k_subsets, popcount
from valuta.models.polynomial import BivarPoly
from valuta.services.invariants import invariant_service
from valuta.services.isomorphism import isomorphism_service

FAMILY_KINDS = ("cuspidal", "class_U", "class_T", "class_N_disconnected")

FAMILY_ALIASES = {
    "cuspidal": "cuspidal",
    "class_u": "class_U",
    "class-u": "class_U",
    "class_t": "class_T",
    "class-t": "class_T",
    "class_n_disconnected": "class_N_disconnected",
    "class-n-disconnected": "class_N_disconnected",
}

U = MatroidDescriptor.uniform
SUM = MatroidDescriptor.direct_sum

# Excluded minors, each on four elements
EXCLUDED_MINORS = {
    "U01+U12+U11": SUM(U(0, 1), U(1, 2), U(1, 1)),
    "U11+U13": SUM(U(1, 1), U(1, 3)),
    "U01+U23": SUM(U(0, 1), U(2, 3)),
    "T24": MatroidDescriptor.minimal(2, 4),
    "U12+U12": SUM(U(1, 2), U(1, 2)),
    "U24": U(2, 4),
}

CLASS_EXCLUDED = {
    "elementary_split": ("U01+U12+U11",),
    "class_N": ("U11+U13", "U01+U23"),
    "class_U": ("T24", "U12+U12"),
    "class_T": ("U24", "U12+U12"),
}


def normalize_kind(kind: str) -> str:
    key = kind.strip().lower()
    if key in FAMILY_ALIASES:
        return FAMILY_ALIASES[key]
    if kind in FAMILY_KINDS:
        return kind
    raise ValueError(f"unknown family kind {kind!r}")


class StressedSubset:
    """A subset whose restriction and contraction are both uniform"""

    def __init__(self, mask: int, rank: int, size: int, cusp: frozenset):
        self.mask = mask
        self.rank = rank
        self.size = size
        self.cusp = cusp

    def to_json(self) -> Dict:
        return {
            "subset": elements_of(self.mask),
            "rank": self.rank,
            "size": self.size,
            "cusp": [elements_of(s) for s in sorted(self.cusp)],
        }


class StressedReport:
    def __init__(self, n: int, k: int, entries: List[StressedSubset]):
        self.n = n
        self.k = k
        self.entries = entries

    @property
    def with_cusp(self) -> List[StressedSubset]:
        return [entry for entry in self.entries if entry.cusp]

    @property
    def profile(self) -> Dict[Tuple[int, int], int]:
        """(rank, size) -> number of stressed subsets with nonempty cusp"""
        counts: Dict[Tuple[int, int], int] = {}
        for entry in self.with_cusp:
            key = (entry.rank, entry.size)
            counts[key] = counts.get(key, 0) + 1
        return dict(sorted(counts.items()))

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "k": self.k,
            "stressed": [entry.to_json() for entry in self.entries],
            "profile": [[r, h, count] for (r, h), count in self.profile.items()],
        }


class ClassReport:
    """Membership booleans for the excluded-minor classes, with witnesses"""

    FIELDS = (
        "elementary_split",
        "class_N",
        "class_U",
        "class_T",
        "schubert",
        "sparse_paving",
        "paving",
        "connected",
    )

    def __init__(self, flags: Dict[str, bool], witnesses: Dict[str, Dict]):
        for name in self.FIELDS:
            setattr(self, name, flags[name])
        self.witnesses = witnesses

    def to_json(self) -> Dict:
        data = {name: getattr(self, name) for name in self.FIELDS}
        data["witnesses"] = self.witnesses
        return data

    def __str__(self):
        lines = [f"{name}: {'yes' if getattr(self, name) else 'no'}" for name in self.FIELDS]
        for cls, witness in self.witnesses.items():
            lines.append(
                f"witness for not {cls}: {witness['minor_name']} via contract {witness['contract']} "
                f"delete {witness['delete']}"
            )
        return "\n".join(lines)


class FamilyService:
    """Constructors and class tests for the named families"""

    def __init__(self):
        self.stressed_cap = Config.STRESSED_CAP
        self.minor_cap = Config.MINOR_SEARCH_CAP
        self._realized: Dict[MatroidDescriptor, Matroid] = {}
        self._ginv: Dict[MatroidDescriptor, GInvariantVector] = {}

    # Realization

    def realize(self, d: MatroidDescriptor) -> Matroid:
        cached = self._realized.get(d)
        if cached is not None:
            return cached
        if d.kind == "uniform":
            k, n = d.params
            M = Matroid.uniform(k, n)
        elif d.kind == "cuspidal":
            r, k, h, n = d.params
            head = (1 << h) - 1
            M = Matroid(n, [b for b in k_subsets(n, k) if popcount(b & head) >= r], validate=False)
        elif d.kind == "minimal":
            k, n = d.params
            M = self.realize(MatroidDescriptor.cuspidal(k - 1, k, k, n))
        else:
            M = Matroid(0, [0], validate=False)
            for part in d.parts:
                M = M.direct_sum(self.realize(part))
        self._realized[d] = M
        return M

    def g_invariant_of(self, d: MatroidDescriptor) -> GInvariantVector:
        if d not in self._ginv:
            self._ginv[d] = invariant_service.g_invariant(self.realize(d))
        return self._ginv[d]

    # Stressed subsets and relaxation

    def _stressed_entry(self, M: Matroid, subset: int, candidates: List[int]) -> Optional[StressedSubset]:
        r = M.rank(subset)
        h = popcount(subset)
        restricted = set()
        contracted = set()
        for b in M.bases:
            if popcount(b & subset) == r:
                restricted.add(b & subset)
                contracted.add(b & ~subset)
        if len(restricted) != comb(h, r) or len(contracted) != comb(M.n - h, M.k - r):
            return None
        cusp = frozenset()
        if h > r and r < M.k:
            cusp = frozenset(s for s in candidates if popcount(s & subset) > r)
        return StressedSubset(subset, r, h, cusp)

    def stressed_report(self, M: Matroid) -> StressedReport:
        if M.n > self.stressed_cap:
            raise SizeCapExceeded("stressed subset scan", M.n, self.stressed_cap, module="families")
        candidates = k_subsets(M.n, M.k)
        entries = []
        for subset in range(1 << M.n):
            entry = self._stressed_entry(M, subset, candidates)
            if entry is not None:
                entries.append(entry)
        return StressedReport(M.n, M.k, entries)

    def relax(self, M: Matroid, subset: int) -> Matroid:
        M.check_mask(subset)
        entry = self._stressed_entry(M, subset, k_subsets(M.n, M.k))
        if entry is None:
            raise NotStressed(f"{elements_of(subset)} is not stressed")
        if not entry.cusp:
            raise EmptyCusp(f"{elements_of(subset)} has an empty cusp")
        return Matroid(M.n, M.bases | entry.cusp, validate=False)

    def relax_all(self, M: Matroid, descending: bool = False) -> Matroid:
        """Relax stressed subsets with nonempty cusp until none remain

        Each pass walks the stressed subsets found at its start in (size, mask)
        order, skipping any that stopped being relaxable.
        """
        current = M
        while True:
            pending = sorted(
                (entry.size, entry.mask) for entry in self.stressed_report(current).with_cusp
            )
            if not pending:
                return current
            if descending:
                pending.reverse()
            candidates = k_subsets(M.n, M.k)
            for _, subset in pending:
                entry = self._stressed_entry(current, subset, candidates)
                if entry is not None and entry.cusp:
                    current = Matroid(current.n, current.bases | entry.cusp, validate=False)

    # Class tests

    def is_elementary_split(self, M: Matroid) -> bool:
        return self.relax_all(M).is_uniform()

    def proper_cyclic_flats_form_clutter(self, M: Matroid) -> bool:
        proper = [mask for mask, _ in M.cyclic_flats() if mask not in (0, M.ground)]
        for a in proper:
            for b in proper:
                if a != b and a & b == a:
                    return False
        return True

    def is_schubert(self, M: Matroid) -> bool:
        flats = [mask for mask, _ in M.cyclic_flats()]
        return all(a & b in (a, b) for a in flats for b in flats)

    def matches_family_shape(self, M: Matroid, kind: str) -> bool:
        """Isomorphic to some member of family(kind, n, k)"""
        return any(
            isomorphism_service.is_isomorphic(M, self.realize(d))
            for d in self.family(kind, M.n, M.k)
        )

    def classify(self, M: Matroid) -> ClassReport:
        if M.n > self.minor_cap:
            raise SizeCapExceeded("classification", M.n, self.minor_cap, module="families")

        embeddings = {}
        for name, d in EXCLUDED_MINORS.items():
            embeddings[name] = isomorphism_service.find_minor(M, self.realize(d))

        flags = {}
        witnesses = {}
        for cls, names in CLASS_EXCLUDED.items():
            found = [name for name in names if embeddings[name] is not None]
            flags[cls] = not found
            if found:
                X, Y = embeddings[found[0]]
                minor = M.minor(contract=X, delete=Y)
                witnesses[cls] = {
                    "minor_name": found[0],
                    "contract": elements_of(X),
                    "delete": elements_of(Y),
                    "minor": minor.to_mtx(),
                }

        flags["schubert"] = self.is_schubert(M)
        flags["sparse_paving"] = M.is_sparse_paving()
        flags["paving"] = M.is_paving()
        flags["connected"] = M.is_connected()

        by_relaxation = self.is_elementary_split(M)
        by_clutter = self.proper_cyclic_flats_form_clutter(M)
        if not flags["elementary_split"] == by_relaxation == by_clutter:
            raise InternalInconsistency(
                f"elementary split tests disagree: excluded minor={flags['elementary_split']}, "
                f"relaxation={by_relaxation}, cyclic flats={by_clutter}"
            )
        for cls, kind in (("class_U", "class_U"), ("class_T", "class_T")):
            if flags[cls] != self.matches_family_shape(M, kind):
                raise InternalInconsistency(f"{cls} excluded-minor test disagrees with the family shape")
        if flags["class_T"] and not flags["schubert"]:
            raise InternalInconsistency("class_T member whose cyclic flats do not form a chain")
        if flags["sparse_paving"] and flags["connected"] and not flags["class_N"]:
            raise InternalInconsistency("connected sparse paving matroid outside class_N")
        if flags["class_N"] and flags["connected"] and not flags["sparse_paving"]:
            raise InternalInconsistency("connected class_N member that is not sparse paving")

        return ClassReport(flags, witnesses)

    # Families

    def family(self, kind: str, n: int, k: int) -> List[MatroidDescriptor]:
        kind = normalize_kind(kind)
        if kind == "cuspidal":
            members = [U(k, n)] + [
                MatroidDescriptor.cuspidal(r, k, h, n)
                for r in range(1, k + 1)
                for h in range(r, r + n - k)
            ]
        elif kind in ("class_U", "class_T"):
            middle = U if kind == "class_U" else MatroidDescriptor.minimal
            members = [
                SUM(U(0, m), middle(k - l, n - l - m), U(l, l))
                for l in range(k)
                for m in range(n - k)
            ]
            members.append(SUM(U(0, n - k), U(k, k)))
        else:
            members = self._class_n_disconnected(n, k)
        return self._dedupe(members)

    def _class_n_disconnected(self, n: int, k: int) -> List[MatroidDescriptor]:
        members = [
            SUM(U(0, n - k - l), *([U(1, 2)] * l), U(k - l, k - l))
            for l in range(min(k, n - k) + 1)
        ]
        if k == 1:
            members += [SUM(U(0, n - l), U(1, l)) for l in range(3, n)]
        if k == n - 1:
            members += [SUM(U(l - 1, l), U(n - l, n - l)) for l in range(3, n)]
        return [d for d in members if not self.realize(d).is_connected()]

    def _dedupe(self, members: List[MatroidDescriptor]) -> List[MatroidDescriptor]:
        """Drop isomorphic repeats; past the isomorphism cap, repeats are detected by Tutte polynomial"""
        if members and members[0].n > isomorphism_service.cap:
            key = lambda d: invariant_service.tutte(self.realize(d))
        else:
            key = lambda d: isomorphism_service.canonical_form(self.realize(d))
        seen = set()
        out = []
        for d in members:
            form = key(d)
            if form not in seen:
                seen.add(form)
                out.append(d)
        return out

    def class_n_generators(self, n: int, k: int) -> List[MatroidDescriptor]:
        """Disconnected class-N members plus U_{k,n} and the single circuit-hyperplane relaxation"""
        members = self.family("class_N_disconnected", n, k) + [U(k, n)]
        if 1 <= k <= n - 1:
            members.append(MatroidDescriptor.cuspidal(1, k, n - k, n))
        return self._dedupe(members)

    # Closed forms

    @staticmethod
    def tutte_uniform_block(k: int, n: int, coloops: int = 0, loops: int = 0) -> BivarPoly:
        """Tutte polynomial of U_{0,m} + U_{k-l,n-l-m} + U_{l,l} (l coloops, m loops)"""
        l, m = coloops, loops
        if not (0 <= l < k and 0 <= m < n - k):
            return BivarPoly.monomial(k, n - k)
        terms: Dict[Tuple[int, int], int] = {}
        for i in range(l + 1, k + 1):
            terms[(i, m)] = terms.get((i, m), 0) + comb(n - m - i - 1, n - m - k - 1)
        for i in range(m + 1, n - k + 1):
            terms[(l, i)] = terms.get((l, i), 0) + comb(n - l - i - 1, k - l - 1)
        return BivarPoly(terms)

    @staticmethod
    def tutte_minimal_block(k: int, n: int, coloops: int = 0, loops: int = 0) -> BivarPoly:
        """Tutte polynomial of U_{0,m} + T_{k-l,n-l-m} + U_{l,l}"""
        l, m = coloops, loops
        block_k = k - l
        block_corank = n - k - m
        xs = BivarPoly({(i, m): 1 for i in range(l + 1, l + block_k + 1)})
        ys = BivarPoly({(l, i): 1 for i in range(m + 1, m + block_corank + 1)})
        cross_x = BivarPoly({(i, 0): 1 for i in range(l + 1, l + block_k)})
        cross_y = BivarPoly({(0, i): 1 for i in range(m + 1, m + block_corank)})
        return xs + ys + cross_x * cross_y

    def minimal_product_form(self, k: int, n: int) -> BivarPoly:
        """T(U_{k-1,k}) * T(U_{1,n-k}) + x + y - xy"""
        x, y = BivarPoly.x(), BivarPoly.y()
        return (
            self.tutte_uniform_block(k - 1, k) * self.tutte_uniform_block(1, n - k)
            + x + y - x * y
        )

    @staticmethod
    def cuspidal_shifted(r: int, k: int, h: int, n: int) -> BivarPoly:
        """P = T(Lambda_{r,k,h,n})(x+1, y+1) as the double binomial sum"""
        m = n - k + r - h
        terms: Dict[Tuple[int, int], int] = {}

        def add(i: int, j: int, c: int):
            if c:
                terms[(i, j)] = terms.get((i, j), 0) + c

        for j in range(r + 1):
            head = comb(h, j)
            for i in range(m):
                add(r - j, m - i, head * comb(n - h, i))
            for i in range(k - r + 1):
                add(k - i - j, 0, head * comb(n - h, i))
        for j in range(r + 1, h + 1):
            head = comb(h, j)
            for i in range(k - j + 1):
                add(k - i - j, 0, head * comb(n - h, i))
            for i in range(max(0, k - j + 1), n - h + 1):
                add(0, i + j - k, head * comb(n - h, i))
        return BivarPoly(terms)

    def closed_form_tutte(self, d: MatroidDescriptor) -> BivarPoly:
        parts = d.parts if d.kind == "sum" else (d,)
        loops = sum(p.n for p in parts if p.kind == "uniform" and p.k == 0)
        coloops = sum(p.n for p in parts if p.kind == "uniform" and p.k == p.n and p.n > 0)
        middle = [p for p in parts if not (p.kind == "uniform" and (p.k == 0 or p.k == p.n))]

        if not middle:
            return BivarPoly.monomial(d.k, d.n - d.k)
        if len(middle) == 1:
            block = middle[0]
            if block.kind == "uniform":
                return self.tutte_uniform_block(d.k, d.n, coloops, loops)
            if block.kind == "minimal":
                return self.tutte_minimal_block(d.k, d.n, coloops, loops)
            if block.kind == "cuspidal" and not loops and not coloops:
                return self.cuspidal_shifted(*block.params).shift(-1, -1)
        raise UnsupportedShape(f"no closed form for {d}")

    # G-invariant identities

    def g_split_terms(self, M: Matroid) -> Dict[MatroidDescriptor, int]:
        """G(M) as an integer combination of uniform and cuspidal G-invariants

        Each relaxation contributes G(Lambda_{r,k,h,n}) - G(U_{k-r,n-h} + U_{r,h}); the
        partition term is replaced by G(Lambda_{k-r,k,n-h,n}) + G(Lambda_{r,k,h,n}) - G(U_{k,n}).
        """
        if not self.is_elementary_split(M):
            raise NotElementarySplit("g_split needs an elementary split matroid")
        n, k = M.n, M.k
        terms: Dict[MatroidDescriptor, int] = {U(k, n): 1}

        def add(d: MatroidDescriptor, c: int):
            terms[d] = terms.get(d, 0) + c

        for (r, h), count in self.stressed_report(M).profile.items():
            cusp = MatroidDescriptor.cuspidal(r, k, h, n)
            add(cusp, -count)
            add(MatroidDescriptor.cuspidal(k - r, k, n - h, n), count)
            add(cusp, count)
            add(U(k, n), -count)
        return {d: c for d, c in terms.items() if c}

    def g_split(self, M: Matroid) -> GInvariantVector:
        """G(M) from the stressed-subset profile"""
        result = GInvariantVector(M.n, M.k)
        for d, c in self.g_split_terms(M).items():
            result = result + self.g_invariant_of(d).scale(c)
        return result

    def g_substitution_check(self, r: int, h: int, k: int, n: int) -> bool:
        """G(U_{k-r,n-h} + U_{r,h}) = G(Lambda_{k-r,k,n-h,n}) + G(Lambda_{r,k,h,n}) - G(U_{k,n})"""
        left = self.g_invariant_of(SUM(U(k - r, n - h), U(r, h)))
        right = (
            self.g_invariant_of(MatroidDescriptor.cuspidal(k - r, k, n - h, n))
            + self.g_invariant_of(MatroidDescriptor.cuspidal(r, k, h, n))
            - self.g_invariant_of(U(k, n))
        )
        return left == right

    def sparse_paving_g(self, M: Matroid) -> GInvariantVector:
        """(1 - c) G(U_{k,n}) + c G(Lambda_{1,k,n-k,n}) for c circuit-hyperplanes"""
        n, k = M.n, M.k
        c = comb(n, k) - len(M.bases)
        uniform = self.g_invariant_of(U(k, n))
        if c == 0:
            return uniform
        status(f"🔄 sparse paving G-invariant with {c} circuit-hyperplane(s)")
        return uniform.scale(1 - c) + self.g_invariant_of(MatroidDescriptor.cuspidal(1, k, n - k, n)).scale(c)


# Global service instance
family_service = FamilyService()
