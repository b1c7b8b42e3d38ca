from typing import Optional


class TokenLapError(Exception):
    pass


class Graph6ParseError(TokenLapError):
    def __init__(self, message: str, offset: int, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        where = f"byte {offset}"
        if line is not None:
            where = f"line {line}, {where}"
        super().__init__(f"graph6 parse error at {where}: {message}")


class GraphValidationError(TokenLapError):
    pass


class FamilyParameterError(TokenLapError):
    pass


class UnknownFamilyError(TokenLapError):
    def __init__(self, name: str, supported: list):
        super().__init__(
            f"Unsupported family {name}. Possible variants: {supported}"
        )


class UnknownTemplateError(TokenLapError):
    def __init__(self, name: str, supported: list):
        super().__init__(
            f"No output template {name}. Available templates: {supported}"
        )


class SubsetIndexError(TokenLapError):
    pass


class MatrixDimensionError(TokenLapError):
    pass


class MatrixOverflowError(TokenLapError):
    def __init__(self, *args, **kwargs):
        default_msg = "Integer overflow: value does not fit into a signed 64-bit entry."
        if not args:
            args = (default_msg,)
        super().__init__(*args, **kwargs)


class NonIntegerSolutionError(TokenLapError):
    def __init__(self, *args, **kwargs):
        default_msg = "Exact solve produced a non-integer entry."
        if not args:
            args = (default_msg,)
        super().__init__(*args, **kwargs)


class TokenCapExceeded(TokenLapError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(
            f"C(n,k) = {size} exceeds the explicit token graph cap of {cap} vertices"
        )


class EigenSolverError(TokenLapError):
    pass


class PairingError(TokenLapError):
    pass


class KernelPreconditionError(TokenLapError):
    def __init__(self, *args, **kwargs):
        default_msg = "vector is not in the kernel of B^T"
        if not args:
            args = (default_msg,)
        super().__init__(*args, **kwargs)


class SingularMatrixError(TokenLapError):
    def __init__(self, *args, **kwargs):
        default_msg = "Matrix is singular, exact solve is impossible."
        if not args:
            args = (default_msg,)
        super().__init__(*args, **kwargs)


class EmbeddingError(TokenLapError):
    pass
