"""closed-form spectra of the families whose token graphs are known explicitly"""

from collections import defaultdict
from typing import Dict, List, Literal, Optional, Tuple, Type, Union

from pydantic import BaseModel, PositiveInt, StrictInt, ValidationError, conint, root_validator

from tokenlap.combinatorics import binom
from tokenlap.errors import FamilyParameterError, UnknownFamilyError
from tokenlap.types import Spectrum

Number = Union[StrictInt, float]


class ClosedFormBase(BaseModel):
    class Config:
        allow_mutation = False
        extra = "forbid"


class JohnsonLaplacian(ClosedFormBase):
    name: Literal["johnson-laplacian"] = "johnson-laplacian"
    n: PositiveInt
    k: PositiveInt

    @root_validator(skip_on_failure=True)
    def k_in_range(cls, values):
        if not 1 <= values["k"] <= values["n"] - 1:
            raise ValueError("J(n,k) requires 1 <= k <= n-1")
        return values


class JohnsonAdjacency(JohnsonLaplacian):
    name: Literal["johnson-adjacency"] = "johnson-adjacency"


class OddAdjacency(ClosedFormBase):
    name: Literal["odd-adjacency"] = "odd-adjacency"
    k: conint(ge=2)


class DoubleOf(ClosedFormBase):
    """adjacency spectrum of the double graph, from the adjacency spectrum of the graph"""

    name: Literal["double-of"] = "double-of"
    groups: List[Tuple[Number, PositiveInt]]


class DoubleOddLaplacian(ClosedFormBase):
    name: Literal["double-odd-laplacian"] = "double-odd-laplacian"
    k: conint(ge=2)


class DoubleOddAdjacency(DoubleOddLaplacian):
    name: Literal["double-odd-adjacency"] = "double-odd-adjacency"


class StarTokenLaplacian(DoubleOddLaplacian):
    """F_k(S_2k), the same graph as the double odd graph"""

    name: Literal["star-token-laplacian"] = "star-token-laplacian"


class DoubledJohnsonLaplacianValues(ClosedFormBase):
    """distinct Laplacian values listed for J(n;k,k+1), without multiplicities"""

    name: Literal["doubled-johnson-laplacian"] = "doubled-johnson-laplacian"
    n: PositiveInt
    k: PositiveInt

    @root_validator(skip_on_failure=True)
    def parity_range(cls, values):
        n, k = values["n"], values["k"]
        limit = n // 2 - 1 if n % 2 == 0 else (n - 1) // 2
        if k > limit:
            raise ValueError(
                f"values are listed for k <= {limit} when n = {n}"
            )
        return values


ClosedFormSpec = Union[
    JohnsonLaplacian,
    JohnsonAdjacency,
    OddAdjacency,
    DoubleOf,
    DoubleOddLaplacian,
    DoubleOddAdjacency,
    StarTokenLaplacian,
    DoubledJohnsonLaplacianValues,
]


class ClosedForm(BaseModel):
    """exact groups (value, multiplicity); `values` alone when no multiplicities are known"""

    family: str
    groups: Optional[List[Tuple[Number, int]]] = None
    values: Optional[List[Number]] = None

    @property
    def dimension(self) -> Optional[int]:
        if self.groups is None:
            return None
        return sum(m for _, m in self.groups)

    def power_sum(self, power: int) -> Number:
        return sum(m * value ** power for value, m in self.groups)

    def to_spectrum(self, group_tol: float = 1e-8) -> Spectrum:
        if self.groups is None:
            raise FamilyParameterError(f"{self.family} lists values without multiplicities")
        values = [float(v) for v, m in sorted(self.groups) for _ in range(m)]
        return Spectrum.from_values(values, group_tol=group_tol)


def _merged(groups: List[Tuple[Number, int]]) -> List[Tuple[Number, int]]:
    counts: Dict[Number, int] = defaultdict(int)
    for value, multiplicity in groups:
        if multiplicity > 0:
            counts[value] += multiplicity
    return sorted(counts.items())


def johnson_multiplicity(n: int, j: int) -> int:
    return binom(n, j) - binom(n, j - 1)


def johnson_laplacian(spec: JohnsonLaplacian) -> ClosedForm:
    """λ_j = j(n+1-j), m_j = C(n,j) - C(n,j-1), j = 0..min(k, n-k)"""
    n, k = spec.n, spec.k
    return ClosedForm(
        family=spec.name,
        groups=_merged(
            [(j * (n + 1 - j), johnson_multiplicity(n, j)) for j in range(min(k, n - k) + 1)]
        ),
    )


def johnson_adjacency(spec: JohnsonAdjacency) -> ClosedForm:
    n, k = spec.n, spec.k
    return ClosedForm(
        family=spec.name,
        groups=_merged(
            [
                ((k - j) * (n - k - j) - j, johnson_multiplicity(n, j))
                for j in range(min(k, n - k) + 1)
            ]
        ),
    )


def odd_adjacency(spec: OddAdjacency) -> ClosedForm:
    k = spec.k
    return ClosedForm(
        family=spec.name,
        groups=_merged(
            [((-1) ** j * (k - j), johnson_multiplicity(2 * k - 1, j)) for j in range(k)]
        ),
    )


def double_of(spec: DoubleOf) -> ClosedForm:
    doubled = []
    for value, multiplicity in spec.groups:
        doubled.append((value, multiplicity))
        doubled.append((-value, multiplicity))
    return ClosedForm(family=spec.name, groups=_merged(doubled))


def double_odd_adjacency(spec: DoubleOddAdjacency) -> ClosedForm:
    k = spec.k
    doubled = []
    for j in range(k):
        m = johnson_multiplicity(2 * k - 1, j)
        doubled.extend([(k - j, m), (j - k, m)])
    return ClosedForm(family=spec.name, groups=_merged(doubled))


def double_odd_laplacian(spec: DoubleOddLaplacian) -> ClosedForm:
    """k-regular, so λ = k - μ: the values j and 2k - j for j = 0..k-1"""
    k = spec.k
    groups = []
    for j in range(k):
        m = johnson_multiplicity(2 * k - 1, j)
        groups.extend([(j, m), (2 * k - j, m)])
    return ClosedForm(family=spec.name, groups=_merged(groups))


def doubled_johnson_values(spec: DoubledJohnsonLaplacianValues) -> ClosedForm:
    n, k = spec.n, spec.k
    lower = range(k + 1) if n % 2 else range(k)
    values = list(lower) + [n - k + j for j in range(1, k + 1)]
    return ClosedForm(family=spec.name, values=sorted(set(values)))


closed_forms = {
    "johnson-laplacian": johnson_laplacian,
    "johnson-adjacency": johnson_adjacency,
    "odd-adjacency": odd_adjacency,
    "double-of": double_of,
    "double-odd-laplacian": double_odd_laplacian,
    "double-odd-adjacency": double_odd_adjacency,
    "star-token-laplacian": double_odd_laplacian,
    "doubled-johnson-laplacian": doubled_johnson_values,
}

closed_form_models: Dict[str, Type[ClosedFormBase]] = {
    "johnson-laplacian": JohnsonLaplacian,
    "johnson-adjacency": JohnsonAdjacency,
    "odd-adjacency": OddAdjacency,
    "double-odd-laplacian": DoubleOddLaplacian,
    "double-odd-adjacency": DoubleOddAdjacency,
    "star-token-laplacian": StarTokenLaplacian,
    "doubled-johnson-laplacian": DoubledJohnsonLaplacianValues,
}

supported_closed_forms = list(closed_form_models.keys())


def closed_form_spectrum(spec: ClosedFormSpec) -> ClosedForm:
    builder = closed_forms.get(spec.name)
    if builder is None:
        raise UnknownFamilyError(spec.name, supported_closed_forms)
    return builder(spec)


def closed_form_from_text(text: str) -> ClosedFormSpec:
    """`johnson-laplacian:14,7`, `odd-adjacency:3`, ..."""
    name, _, params = text.strip().partition(":")
    name = name.lower()
    model = closed_form_models.get(name)
    if model is None:
        raise UnknownFamilyError(name, supported_closed_forms)
    fields = [f for f in model.__fields__ if f != "name"]
    values = [v for v in params.split(",") if v.strip()]
    if len(values) != len(fields):
        raise FamilyParameterError(
            f"Closed form {name} expects parameters {fields}, got {params!r}"
        )
    try:
        return model(**{f: int(v) for f, v in zip(fields, values)})
    except (ValidationError, ValueError) as error:
        raise FamilyParameterError(f"Invalid parameters for {name}: {error}") from error
