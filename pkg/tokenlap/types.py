"""result records shared by the library and the CLI reports"""

from typing import Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, root_validator, validator


class Discrepancy(BaseModel):
    row: int
    col: int
    lhs: int
    rhs: int


class IdentityReport(BaseModel):
    identity: str
    n: int
    h: Optional[int] = None
    k: Optional[int] = None
    graph: Optional[str] = None
    holds: bool
    discrepancy: Optional[Discrepancy] = None
    detail: Optional[str] = None

    @root_validator(skip_on_failure=True)
    def holds_iff_no_discrepancy(cls, values):
        if values["holds"] == (values.get("discrepancy") is not None):
            raise ValueError("holds must be true exactly when no discrepancy is recorded")
        return values


class Spectrum(BaseModel):
    """ascending (value, multiplicity) groups; consecutive values differ by more than group_tol"""

    groups: List[Tuple[float, int]]
    group_tol: float

    @validator("groups")
    def positive_multiplicities(cls, groups):
        for value, multiplicity in groups:
            if multiplicity < 1:
                raise ValueError(f"multiplicity of {value} must be positive")
        return groups

    @classmethod
    def from_values(cls, values: Sequence[float], group_tol: float) -> "Spectrum":
        groups: List[List[float]] = []
        for value in sorted(float(v) for v in values):
            if groups and value - groups[-1][-1] <= group_tol:
                groups[-1].append(value)
            else:
                groups.append([value])
        return cls(
            groups=[(sum(g) / len(g), len(g)) for g in groups], group_tol=group_tol
        )

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.groups)

    @property
    def distinct(self) -> List[float]:
        return [value for value, _ in self.groups]

    def values(self) -> List[float]:
        return [value for value, m in self.groups for _ in range(m)]

    def trace(self) -> float:
        return sum(value * m for value, m in self.groups)

    def matches(self, other: "Spectrum", tol: float) -> bool:
        """same multiset of values within tol"""
        mine, theirs = self.values(), other.values()
        return len(mine) == len(theirs) and all(
            abs(a - b) <= tol for a, b in zip(mine, theirs)
        )


class PairingTriple(BaseModel):
    graph: float
    complement: float
    johnson: float


class PairingResult(BaseModel):
    n: int
    k: int
    triples: List[PairingTriple]
    residuals: List[float]
    johnson_sums: List[int]
    sums_match_johnson: bool
    refined: bool = False


class DiscrepancyReport(BaseModel):
    subject: str
    numeric: Optional[Spectrum] = None
    listed: List[float] = []
    missing_from_list: List[float] = []
    listed_but_absent: List[float] = []
    divergent: bool
    note: Optional[str] = None


class ScanRecord(BaseModel):
    line: int
    graph6: str
    n: int
    k: Optional[int] = None
    h: Optional[int] = None
    status: str = "ok"
    alpha_graph: Optional[float] = None
    alpha_token: Optional[float] = None
    alpha_difference: Optional[float] = None
    identities: Dict[str, bool] = {}
    pairing_ok: Optional[bool] = None
    containment_ok: Optional[bool] = None
    reason: Optional[str] = None

    @property
    def failed_checks(self) -> List[str]:
        failed = [name for name, holds in self.identities.items() if not holds]
        if self.pairing_ok is False:
            failed.append("pairing")
        if self.containment_ok is False:
            failed.append("containment")
        return failed


class ScanSummary(BaseModel):
    graphs_scanned: int
    skipped: int
    max_alpha_difference: float
    violations: List[int]


class ScanReport(BaseModel):
    corpus: str
    mode: str
    tolerance: float
    k: Union[int, str]
    h: Optional[int] = None
    records: List[ScanRecord]
    summary: ScanSummary


class IntegerBound(BaseModel):
    """integer Laplacian eigenvalues of F_k(G) against the components of F_k(Ḡ)"""

    n: int
    k: int
    bound: int
    count: int
    holds: bool
    distribution_count: int
    complement_components: List[int]


class IsomorphismCheck(BaseModel):
    source: str
    target: str
    holds: bool
    witness: Optional[Tuple[int, int]] = None
    reason: Optional[str] = None


class StarConventionReport(BaseModel):
    """vertex counts of the literal F_k(S_{n-1}) ≅ J(n;k-1,k) next to the checked F_k(S_n) ≅ J(n-1;k-1,k)"""

    n: int
    k: int
    literal_token_vertices: int
    literal_johnson_vertices: int
    literal_consistent: bool
    implemented: IsomorphismCheck
