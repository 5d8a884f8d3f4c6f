"""
Exception hierarchy for valuta

Every error carries the module it came from so that the CLI and the HTTP
blueprint can surface module-qualified messages.
"""


class ValutaError(Exception):
    """Base class for all workbench errors"""

    module = "valuta"

    def __init__(self, message: str, module: str = None):
        super().__init__(message)
        self.message = message
        if module:
            self.module = module

    def __str__(self):
        return f"[{self.module}] {self.message}"


class SizeCapExceeded(ValutaError):
    def __init__(self, what: str, n: int, cap: int, module: str = "valuta"):
        super().__init__(f"{what} refused for n={n} (cap is n <= {cap})", module)
        self.n = n
        self.cap = cap


# matroid-core

class MatroidError(ValutaError):
    module = "matroid-core"


class EmptyBases(MatroidError):
    def __init__(self):
        super().__init__("a matroid needs at least one basis")


class MixedCardinality(MatroidError):
    def __init__(self, sizes):
        super().__init__(f"bases have different cardinalities: {sorted(sizes)}")
        self.sizes = sorted(sizes)


class ExchangeViolation(MatroidError):
    def __init__(self, b1: int, b2: int, e: int):
        super().__init__(
            f"basis exchange fails for B1={b1:#b}, B2={b2:#b}, e={e}"
        )
        self.b1 = b1
        self.b2 = b2
        self.e = e


class MaskOutOfRange(MatroidError):
    def __init__(self, mask: int, n: int):
        super().__init__(f"subset mask {mask:#b} does not fit in {n} bits")


class OverlappingSets(MatroidError):
    def __init__(self, contract: int, delete: int):
        super().__init__(
            f"contraction set {contract:#b} and deletion set {delete:#b} overlap"
        )


class InfeasibleParameters(MatroidError):
    pass


# exact-algebra

class AlgebraError(ValutaError):
    module = "exact-algebra"


class DimensionMismatch(AlgebraError):
    pass


# invariants

class InvariantError(ValutaError):
    module = "invariants"


class HasLoopOrColoop(InvariantError):
    def __init__(self, loops: int, coloops: int):
        super().__init__(
            f"matroid has {loops} loop(s) and {coloops} coloop(s)"
        )


# families

class FamilyError(ValutaError):
    module = "families"


class InadmissibleParameters(FamilyError):
    pass


class NotStressed(FamilyError):
    pass


class EmptyCusp(FamilyError):
    pass


class UnsupportedShape(FamilyError):
    pass


class NotElementarySplit(FamilyError):
    pass


class InternalInconsistency(FamilyError):
    pass


# decomposition

class DecompositionError(ValutaError):
    module = "decomposition"


class MixedStratum(DecompositionError):
    pass


class TheoremViolation(DecompositionError):
    pass


# cli

class CliError(ValutaError):
    module = "cli"


class UsageError(CliError):
    pass


class ParseError(CliError):
    pass
