"""Linear SVM solved by dual coordinate descent.

L2-regularized, L2-hinge binary classifier: the dual has box constraint
[0, inf) and a diagonal shift D = 1/(2C). Coordinates are visited in a
seeded random permutation each epoch; each update minimizes the dual
exactly along one coordinate, so the dual objective is non-increasing.
A constant bias feature (value 1) is appended to every example.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass
class SparseRows:
    """Ragged sparse design matrix: per-row index/value arrays."""

    indices: list[np.ndarray]
    values: list[np.ndarray]
    n_features: int

    @classmethod
    def from_dicts(cls, rows: list[dict[int, float]], n_features: int) -> "SparseRows":
        idx = []
        val = []
        for row in rows:
            items = sorted(row.items())
            idx.append(np.fromiter((i for i, _ in items), dtype=np.int64, count=len(items)))
            val.append(np.fromiter((v for _, v in items), dtype=np.float64, count=len(items)))
        return cls(indices=idx, values=val, n_features=n_features)

    def __len__(self) -> int:
        return len(self.indices)


@dataclass
class BinarySvmResult:
    weights: np.ndarray  # length n_features
    bias: float
    objectives: list[float] = field(default_factory=list)  # dual objective per epoch
    epochs: int = 0
    converged: bool = False

    def decision(self, idx: np.ndarray, val: np.ndarray) -> float:
        return float(self.weights[idx] @ val + self.bias) if len(idx) else self.bias


def train_binary(
    X: SparseRows,
    y: np.ndarray,
    C: float = 0.1,
    max_epochs: int = 1000,
    tol: float = 1e-3,
    seed: int = 0,
) -> BinarySvmResult:
    """Train one binary classifier; y entries must be +1/-1."""
    n = len(X)
    if n == 0:
        raise ValueError("empty training set")
    if not np.all(np.abs(y) == 1):
        raise ValueError("labels must be +1/-1")
    d_shift = 1.0 / (2.0 * C)
    # Bias as an extra constant feature occupying the last weight slot.
    w = np.zeros(X.n_features + 1, dtype=np.float64)
    alpha = np.zeros(n, dtype=np.float64)
    q_diag = np.fromiter(
        ((X.values[i] @ X.values[i]) + 1.0 + d_shift for i in range(n)),
        dtype=np.float64,
        count=n,
    )
    rng = np.random.default_rng(seed)
    objectives: list[float] = []
    converged = False
    epoch = 0
    for epoch in range(1, max_epochs + 1):
        order = rng.permutation(n)
        max_violation = 0.0
        for i in order:
            idx = X.indices[i]
            val = X.values[i]
            margin = (w[idx] @ val + w[-1]) if len(idx) else w[-1]
            g = y[i] * margin - 1.0 + d_shift * alpha[i]
            if alpha[i] == 0.0:
                pg = min(g, 0.0)
            else:
                pg = g
            if pg != 0.0:
                max_violation = max(max_violation, abs(pg))
            if abs(pg) > 1e-12:
                new_alpha = max(alpha[i] - g / q_diag[i], 0.0)
                delta = (new_alpha - alpha[i]) * y[i]
                if delta != 0.0:
                    w[idx] += delta * val
                    w[-1] += delta
                alpha[i] = new_alpha
        objectives.append(
            0.5 * float(w @ w) + 0.5 * d_shift * float(alpha @ alpha) - float(alpha.sum())
        )
        if max_violation < tol:
            converged = True
            break
    return BinarySvmResult(
        weights=w[:-1].copy(),
        bias=float(w[-1]),
        objectives=objectives,
        epochs=epoch,
        converged=converged,
    )


def train_one_vs_rest(
    X: SparseRows,
    labels: list[str],
    class_order: tuple[str, ...],
    C: float = 0.1,
    max_epochs: int = 1000,
    tol: float = 1e-3,
    seed: int = 0,
) -> tuple[np.ndarray, np.ndarray]:
    """Train one binary problem per class; returns (W [k x d], b [k])."""
    W = np.zeros((len(class_order), X.n_features), dtype=np.float64)
    b = np.zeros(len(class_order), dtype=np.float64)
    for ci, cls in enumerate(class_order):
        y = np.fromiter((1.0 if lab == cls else -1.0 for lab in labels), dtype=np.float64)
        result = train_binary(X, y, C=C, max_epochs=max_epochs, tol=tol, seed=seed)
        W[ci] = result.weights
        b[ci] = result.bias
    return W, b


def decision_values(W: np.ndarray, b: np.ndarray, row: dict[int, float]) -> np.ndarray:
    if not row:
        return b.copy()
    idx = np.fromiter(row.keys(), dtype=np.int64, count=len(row))
    val = np.fromiter(row.values(), dtype=np.float64, count=len(row))
    return W[:, idx] @ val + b
