import math
from itertools import combinations
from typing import Dict, Iterable, List, Optional

from tokenlap.errors import FamilyParameterError, SubsetIndexError
from tokenlap.matrix import SparseIntMatrix, checked

# a vertex subset is an int bitmask over 0-indexed ground elements
VertexSubset = int


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return checked(math.comb(n, k))


def mask_of(elements: Iterable[int]) -> VertexSubset:
    mask = 0
    for element in elements:
        mask |= 1 << element
    return mask


def elements_of(mask: VertexSubset) -> List[int]:
    elements = []
    while mask:
        low = mask & -mask
        elements.append(low.bit_length() - 1)
        mask ^= low
    return elements


def labels_of(mask: VertexSubset) -> List[int]:
    """1-indexed labels for reports"""
    return [element + 1 for element in elements_of(mask)]


def subset_from_labels(labels: Iterable[int]) -> VertexSubset:
    return mask_of(label - 1 for label in labels)


def _rank_colex(elements: List[int]) -> int:
    return sum(math.comb(c, j + 1) for j, c in enumerate(elements))


def _unrank_colex(r: int, n: int, k: int) -> List[int]:
    elements = [0] * k
    while k > 0:
        n -= 1
        offset = math.comb(n, k)
        if r >= offset:
            r -= offset
            k -= 1
            elements[k] = n
    return elements


class SubsetIndex:
    """lexicographic bijection between {0, ..., C(n,k)-1} and the k-subsets of [n]"""

    __slots__ = ("n", "k", "size", "_masks", "_ranks")

    def __init__(self, n: int, k: int):
        if n < 0 or k < 0 or k > n:
            raise SubsetIndexError(f"No {k}-subsets of a {n}-element ground set")
        self.n = n
        self.k = k
        self.size = binom(n, k)
        self._masks: Optional[List[VertexSubset]] = None
        self._ranks: Optional[Dict[VertexSubset, int]] = None

    def __repr__(self) -> str:
        return f"SubsetIndex(n={self.n}, k={self.k})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubsetIndex):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k)

    def __hash__(self):
        return hash((self.n, self.k))

    def __len__(self) -> int:
        return self.size

    @property
    def masks(self) -> List[VertexSubset]:
        # itertools.combinations already walks lex order over sorted tuples
        if self._masks is None:
            self._masks = [mask_of(c) for c in combinations(range(self.n), self.k)]
        return self._masks

    def lookup(self) -> Dict[VertexSubset, int]:
        if self._ranks is None:
            self._ranks = {mask: i for i, mask in enumerate(self.masks)}
        return self._ranks

    def rank(self, subset: VertexSubset) -> int:
        elements = elements_of(subset)
        if len(elements) != self.k:
            raise SubsetIndexError(
                f"Subset {labels_of(subset)} has {len(elements)} elements, expected {self.k}"
            )
        if elements and elements[-1] >= self.n:
            raise SubsetIndexError(
                f"Subset {labels_of(subset)} is not contained in [{self.n}]"
            )
        if self._ranks is not None:
            return self._ranks[subset]
        reflected = [self.n - 1 - c for c in reversed(elements)]
        return self.size - 1 - _rank_colex(reflected)

    def unrank(self, index: int) -> VertexSubset:
        if not 0 <= index < self.size:
            raise SubsetIndexError(
                f"Index {index} out of range for C({self.n},{self.k}) = {self.size}"
            )
        if self._masks is not None:
            return self._masks[index]
        reflected = _unrank_colex(self.size - 1 - index, self.n, self.k)
        return mask_of(self.n - 1 - c for c in reflected)


def rank(subset: VertexSubset, index: SubsetIndex) -> int:
    return index.rank(subset)


def unrank(i: int, index: SubsetIndex) -> VertexSubset:
    return index.unrank(i)


def inclusion_matrix(n: int, k2: int, k1: int) -> SparseIntMatrix:
    """the (n;k2,k1)-binomial matrix: rows k2-subsets, columns k1-subsets, 1 iff column set ⊂ row set"""
    if not 1 <= k1 <= k2 <= n - 1:
        raise FamilyParameterError(
            f"inclusion matrix needs 1 <= k1 <= k2 <= n-1, got n={n}, k2={k2}, k1={k1}"
        )
    return containment_matrix(SubsetIndex(n, k2), SubsetIndex(n, k1))


def containment_matrix(rows: SubsetIndex, cols: SubsetIndex) -> SparseIntMatrix:
    """0/1 matrix of X ⊂ A for A in rows, X in cols; no range checks beyond k1 <= k2"""
    if cols.k > rows.k or cols.n != rows.n:
        raise FamilyParameterError(f"Cannot include {cols} into {rows}")
    ranks = cols.lookup()
    data = {}
    for r, mask in enumerate(rows.masks):
        data[r] = {ranks[mask_of(sub)]: 1 for sub in combinations(elements_of(mask), cols.k)}
    return SparseIntMatrix(rows.size, cols.size, data)


def binomial_matrix(n: int, k: int) -> SparseIntMatrix:
    """the (n;k)-binomial matrix B, rows are characteristic vectors of k-subsets"""
    return inclusion_matrix(n, k, 1)


def token_distribution_count(component_sizes: Iterable[int], k: int) -> int:
    """ways to put k indistinguishable tokens on components, at most `size` tokens per component"""
    # coefficient of x^k in prod (1 + x + ... + x^size)
    counts = [1] + [0] * k
    for size in component_sizes:
        updated = [0] * (k + 1)
        for placed, ways in enumerate(counts):
            if not ways:
                continue
            for extra in range(min(size, k - placed) + 1):
                updated[placed + extra] += ways
        counts = updated
    return counts[k]
