"""scikit-learn style wrappers over the functional core.

Both transformers are stateless apart from input validation: ``fit`` checks
the hyper-parameters and records ``n_features_in_``; ``transform`` maps each
row's single feature through the numerical routine.
"""
from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .exceptions import DomainError
from .hiord import OrderLadder, _check_args
from .specfun import BesselKind
from .transforms import METHODS, TransformQuery, evaluate

__all__ = ["IncompleteLaplaceTransformer", "DerivativeFeatures", "check_single_column"]


def check_single_column(X, name: str = "X", positive: bool = True) -> np.ndarray:
    """Validate ``X`` as a finite 1-column (or 1-D) float array and return it flattened."""
    X = check_array(X, ensure_2d=False, dtype=np.float64)
    if X.ndim == 2:
        if X.shape[1] != 1:
            raise ValueError(f"{name} must have exactly one column, got {X.shape[1]}")
        X = X[:, 0]
    if positive and np.any(X <= 0):
        raise DomainError(f"{name} must be strictly positive")
    return X


class IncompleteLaplaceTransformer(TransformerMixin, BaseEstimator):
    """Map transform variables ``x`` to ``H(a, x) = int_0^a e^{-xt} kind_nu(t) dt``.

    With ``return_error=True`` a second column holds the method's error
    estimate plus remainder bound.
    """

    def __init__(self, kind="J", nu=0.0, a=1.0, method="auto", return_error=False):
        self.kind = kind
        self.nu = nu
        self.a = a
        self.method = method
        self.return_error = return_error

    def fit(self, X, y=None):
        kind = BesselKind.coerce(self.kind)
        kind.check_transform_order(float(self.nu))
        if not float(self.a) > 0:
            raise DomainError(f"a must be positive, got {self.a}")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        check_single_column(X)
        self.kind_ = kind
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "kind_")
        xs = check_single_column(X)
        out = np.empty((xs.size, 2 if self.return_error else 1))
        for i, x in enumerate(xs):
            r = evaluate(TransformQuery(self.kind_, self.nu, self.a, float(x)), self.method)
            out[i, 0] = r.value
            if self.return_error:
                out[i, 1] = r.error_estimate + r.remainder_bound
        return out


class DerivativeFeatures(TransformerMixin, BaseEstimator):
    """Map points ``a`` to the derivatives ``kind_nu^(n)(a)``, ``n = 0..n_max``.

    ``scale="taylor"`` divides column ``n`` by ``n!`` (Taylor coefficients);
    ``scale="log"`` returns ``log|f^(n)(a)|`` so large ``n`` never overflows.
    """

    def __init__(self, kind="J", nu=0.0, n_max=10, scale="none"):
        self.kind = kind
        self.nu = nu
        self.n_max = n_max
        self.scale = scale

    def fit(self, X, y=None):
        kind = BesselKind.coerce(self.kind)
        if int(self.n_max) != self.n_max or self.n_max < 0:
            raise ValueError(f"n_max must be a non-negative integer, got {self.n_max}")
        if self.scale not in ("none", "taylor", "log"):
            raise ValueError(f"scale must be 'none', 'taylor' or 'log', got {self.scale!r}")
        for a in check_single_column(X):
            _check_args(kind, float(self.nu), float(a))
        self.kind_ = kind
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "kind_")
        n_max = int(self.n_max)
        A = check_single_column(X)
        out = np.empty((A.size, n_max + 1))
        for i, a in enumerate(A):
            _check_args(self.kind_, float(self.nu), float(a))
            ladder = OrderLadder(self.kind_, float(self.nu), float(a), n_max)
            for n in range(n_max + 1):
                v = ladder.derivative(n).value
                if self.scale == "log":
                    out[i, n] = v.log_abs if v.sign else -math.inf
                elif self.scale == "taylor":
                    out[i, n] = v.scale(-math.lgamma(n + 1.0)).to_real()
                else:
                    out[i, n] = v.to_real()
        return out

    def get_feature_names_out(self, input_features=None):
        return np.array([f"d{n}" for n in range(int(self.n_max) + 1)], dtype=object)
