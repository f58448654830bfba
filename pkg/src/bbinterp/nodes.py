"""Interpolation node sets on (0, 1)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from bbinterp.errors import BBInterpError


@dataclass(frozen=True, eq=False)
class NodeSet:
    """Strictly increasing interior nodes ``x_1 < ... < x_N`` in (0, 1).

    The boundary points ``x_0 = 0`` and ``x_{N+1} = 1`` are implicit and
    appear in :attr:`augmented`. Nodes are validated, never sorted.
    """

    interior: np.ndarray
    augmented: np.ndarray = field(init=False, repr=False)
    gaps: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        x = np.array(self.interior, dtype=float).ravel()
        if x.size < 1:
            raise BBInterpError("at least one interior node is required")
        if not np.all(np.isfinite(x)):
            raise BBInterpError("nodes must be finite")
        if x[0] <= 0.0 or x[-1] >= 1.0:
            raise BBInterpError("nodes must lie strictly inside (0, 1)")
        if np.any(np.diff(x) <= 0.0):
            raise BBInterpError("nodes must be strictly increasing")
        aug = np.concatenate(([0.0], x, [1.0]))
        for name, arr in (("interior", x), ("augmented", aug), ("gaps", np.diff(aug))):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def equispaced(cls, n: int) -> "NodeSet":
        """The nodes ``i / (n + 1)``, ``i = 1..n``."""
        if int(n) != n or n < 1:
            raise BBInterpError(f"need a positive integer number of nodes, got {n!r}")
        n = int(n)
        return cls(np.arange(1, n + 1) / (n + 1))

    @property
    def n(self) -> int:
        return self.interior.shape[0]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, NodeSet):
            return NotImplemented
        return np.array_equal(self.interior, other.interior)

    def __hash__(self) -> int:
        return hash(self.interior.tobytes())

    def fill_distance(self) -> float:
        """Half the largest gap, boundary gaps included."""
        return 0.5 * float(self.gaps.max())

    def midpoints(self) -> np.ndarray:
        """Midpoints of the N + 1 gaps."""
        aug = self.augmented
        return 0.5 * (aug[:-1] + aug[1:])
