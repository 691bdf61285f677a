"""Ambient dimensions and the framing group of attaching spheres.

For ``n >= 2k + 1`` the framings of an attaching ``(k-1)``-sphere form the
stable group ``pi_{k-1}(O(n-k))``, which by Bott periodicity depends only on
``k mod 8``::

    k mod 8 in {3, 5, 6, 7}  ->  0
    k mod 8 in {1, 2}        ->  Z/2
    k mod 8 in {0, 4}        ->  Z
"""

from dataclasses import dataclass
from enum import Enum

from .errors import GroupMismatch, InvalidDim


class FramingGroup(Enum):
    TRIVIAL = "0"
    Z2 = "Z/2"
    Z = "Z"

    def __str__(self):
        return self.value


_BOTT = {
    0: FramingGroup.Z,
    1: FramingGroup.Z2,
    2: FramingGroup.Z2,
    3: FramingGroup.TRIVIAL,
    4: FramingGroup.Z,
    5: FramingGroup.TRIVIAL,
    6: FramingGroup.TRIVIAL,
    7: FramingGroup.TRIVIAL,
}


@dataclass(frozen=True)
class DimSpec:
    """Ambient dimension ``n`` and handle index ``k``.

    ``source=True`` marks a classical 4-dimensional diagram (``n, k = 4, 2``)
    used only as import material; its framings are plain integers.
    """

    n: int
    k: int
    source: bool = False

    def __post_init__(self):
        if self.source:
            if (self.n, self.k) != (4, 2):
                raise InvalidDim(f"source diagrams must have (n, k) = (4, 2), got ({self.n}, {self.k})")
            return
        if self.k < 2:
            raise InvalidDim(f"handle index k={self.k} must be at least 2")
        if self.n < 2 * self.k + 1:
            raise InvalidDim(f"need n >= 2k+1, got n={self.n}, k={self.k}")

    def __str__(self):
        return f"({self.n},{self.k}{',source' if self.source else ''})"


def framing_group(dim):
    """Return the framing group determined by ``dim`` (a :class:`DimSpec`)."""
    if dim.source:
        return FramingGroup.Z
    return _BOTT[dim.k % 8]


@dataclass(frozen=True)
class Framing:
    value: int
    group: FramingGroup

    def __post_init__(self):
        if normalize_value(self.group, self.value) != self.value:
            raise ValueError(f"{self.value} is not a canonical element of {self.group}")

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def normalize_value(group, x):
    if group is FramingGroup.TRIVIAL:
        return 0
    if group is FramingGroup.Z2:
        return x % 2
    return x


def normalize(group, x):
    """Canonical representative of the integer ``x`` in ``group``."""
    return Framing(normalize_value(group, int(x)), group)


def add(a, b):
    if a.group is not b.group:
        raise GroupMismatch(f"cannot add framings in {a.group} and {b.group}")
    return normalize(a.group, a.value + b.value)


def neg(a):
    return normalize(a.group, -a.value)


def project_4d(m, target):
    """Image of an integer 4-dimensional framing under the stabilisation map.

    Onto ``Z/2`` this is reduction mod 2; a ``Z`` target keeps the integer.
    """
    return normalize(target, m)
